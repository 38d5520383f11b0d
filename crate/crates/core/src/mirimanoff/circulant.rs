//! The circulant `C(x)` built from `α_1, …, α_h`, its spectrum and rank.

use serde::Serialize;

use crate::cyclo::{alpha_row, AlphaConvention};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::modp::{primitive_root, Fp, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circulant {
    #[serde(skip)]
    pub p: Prime,
    pub x: u64,
    pub s: u64,
    pub convention: AlphaConvention,
    /// `(α_1, …, α_h)`
    pub first_row: Vec<Fp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    /// `λ_k = Σ_j α_j v^{k(j-1)}`, `v = s²`, for `k = 0..h`.
    pub eigenvalues: Vec<Fp>,
    pub rank: usize,
}

impl Spectrum {
    /// Eigenvalues as a sorted multiset of residues.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.eigenvalues.iter().map(|e| e.value()).collect();
        v.sort_unstable();
        v
    }
}

/// `C(x)` under the given exponent convention.
pub fn circulant(x: Fp, convention: AlphaConvention) -> Result<Circulant> {
    let p = x.prime();
    Ok(Circulant {
        p,
        x: x.value(),
        s: primitive_root(p).value(),
        convention,
        first_row: alpha_row(x, convention)?,
    })
}

impl Circulant {
    pub fn from_row(p: Prime, first_row: Vec<Fp>) -> Self {
        Circulant {
            p,
            x: 0,
            s: primitive_root(p).value(),
            convention: AlphaConvention::Literal,
            first_row,
        }
    }

    pub fn size(&self) -> usize {
        self.first_row.len()
    }

    /// Row `i` is row `0` shifted right by `i`: `C[i][j] = α_{(j - i) mod h}`.
    pub fn matrix(&self) -> Matrix {
        let h = self.size();
        let rows: Vec<Vec<Fp>> = (0..h)
            .map(|i| (0..h).map(|j| self.first_row[(j + h - i) % h]).collect())
            .collect();
        Matrix::from_rows(self.p, &rows)
    }

    /// Character-sum spectrum. `v = s²` has order exactly `h`, so `X^h - 1` splits
    /// into distinct linear factors and `C` is diagonalizable.
    pub fn spectrum(&self) -> Spectrum {
        let p = self.p;
        let v = primitive_root(p).pow_u(2);
        let mut eigenvalues = Vec::with_capacity(self.size());
        let mut root = p.one();
        for _ in 0..self.size() {
            let mut acc = p.zero();
            let mut w = p.one();
            for &a in &self.first_row {
                acc += a * w;
                w *= root;
            }
            eigenvalues.push(acc);
            root *= v;
        }
        let rank = eigenvalues.iter().filter(|e| !e.is_zero()).count();
        Spectrum { eigenvalues, rank }
    }

    pub fn gaussian_rank(&self) -> usize {
        self.matrix().rank()
    }

    pub fn row_sum(&self) -> Fp {
        self.first_row
            .iter()
            .fold(self.p.zero(), |acc, &a| acc + a)
    }
}

/// `det(a·I - m)` by elimination.
pub fn char_poly_at(m: &Matrix, a: Fp) -> Fp {
    let p = a.prime();
    let n = m.rows();
    let mut rows: Vec<Vec<Fp>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { a - m.get(i, j) } else { -m.get(i, j) })
                .collect()
        })
        .collect();
    let mut det = p.one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
            return p.zero();
        };
        if r != c {
            rows.swap(r, c);
            det = -det;
        }
        let piv = rows[c][c];
        det *= piv;
        let inv = piv.inv().expect("pivot is nonzero");
        for r in c + 1..n {
            let f = rows[r][c] * inv;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = rows[c][j];
                rows[r][j] -= f * v;
            }
        }
    }
    det
}

/// Compares `Π (X - λ_k)` with `det(X·I - C)` at every point of `F_p`; both have degree
/// `h < p`, so agreement everywhere is equality. Also checks that the roots of the
/// characteristic polynomial found by evaluation are exactly the distinct `λ_k`.
pub fn spectrum_matches_char_poly(c: &Circulant) -> bool {
    let p = c.p;
    let m = c.matrix();
    let sp = c.spectrum();
    let mut roots = Vec::new();
    for a in p.elements() {
        let lhs = sp
            .eigenvalues
            .iter()
            .fold(p.one(), |acc, &l| acc * (a - l));
        let rhs = char_poly_at(&m, a);
        if lhs != rhs {
            return false;
        }
        if rhs.is_zero() {
            roots.push(a.value());
        }
    }
    let mut distinct = sp.sorted();
    distinct.dedup();
    roots == distinct
}

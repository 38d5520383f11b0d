//! Kummer logarithmic derivatives `ℓ_k` on `Z[ζ_p]` reduced mod `p`.
//!
//! For `z = Σ a_i ζ^i` put `S(X) = Σ a_i e^{iX}` in `F_p[[X]]/(X^{p-1})`; then
//! `ℓ_k(z) = (k-1)! [X^{k-1}] (S'/S)` for `1 ≤ k ≤ p - 2`.
//!
//! Representatives: `Σ_{i<p} ζ^i = 0`, and adding `c·(1, …, 1)` changes `S` by
//! `c Σ_i e^{iX}`, whose coefficients `c Σ_i i^m / m!` vanish mod `p` for `m ≤ p - 2`.
//! So `ℓ` does not depend on the representative; elements are stored with `a_{p-1} = 0`.

use serde::Serialize;

use crate::cyclo::{z_prime, DifferentialForm, TruncatedRing};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mirimanoff::mirimanoff_eval;
use crate::modp::{Fp, Prime};

/// `Σ_{i<p} a_i ζ^i` with `a_{p-1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElement {
    p: Prime,
    a: Vec<Fp>,
}

impl CycloElement {
    /// Reduces exponents mod `p`, then subtracts `a_{p-1}·(1, …, 1)`.
    pub fn new(p: Prime, coeffs: &[Fp]) -> Self {
        let n = p.get() as usize;
        let mut a = vec![p.zero(); n];
        for (i, &c) in coeffs.iter().enumerate() {
            a[i % n] += c;
        }
        let top = a[n - 1];
        for c in &mut a {
            *c -= top;
        }
        CycloElement { p, a }
    }

    pub fn from_i64(p: Prime, coeffs: &[i64]) -> Self {
        let c: Vec<Fp> = coeffs.iter().map(|&v| p.elem(v)).collect();
        Self::new(p, &c)
    }

    pub fn constant(c: Fp) -> Self {
        Self::new(c.prime(), &[c])
    }

    /// `x - y ζ^e`.
    pub fn binomial(x: Fp, y: Fp, e: i64) -> Self {
        let p = x.prime();
        let n = p.get() as usize;
        let mut a = vec![p.zero(); n];
        a[0] = x;
        a[e.rem_euclid(n as i64) as usize] -= y;
        Self::new(p, &a)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.a
    }

    /// `Σ a_i mod p`; zero exactly when `1 - ζ` divides `z` mod `p`.
    pub fn augmentation(&self) -> Fp {
        self.a.iter().fold(self.p.zero(), |s, &c| s + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.a.len();
        let mut c = vec![self.p.zero(); n];
        for (i, &x) in self.a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in other.a.iter().enumerate() {
                c[(i + j) % n] += x * y;
            }
        }
        Self::new(self.p, &c)
    }

    /// `ζ ↦ ζ⁻¹`.
    pub fn sigma(&self) -> Self {
        let n = self.a.len();
        let mut c = vec![self.p.zero(); n];
        for (i, &x) in self.a.iter().enumerate() {
            c[(n - i) % n] = x;
        }
        Self::new(self.p, &c)
    }
}

/// `(ℓ_1, …, ℓ_{p-2})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllVector {
    #[serde(skip)]
    pub p: Prime,
    pub entries: Vec<Fp>,
}

impl EllVector {
    /// `ℓ_k`, `1 ≤ k ≤ p - 2`.
    pub fn get(&self, k: usize) -> Result<Fp> {
        if k == 0 || k > self.entries.len() {
            return Err(Error::IndexRange {
                index: k,
                min: 1,
                max: self.entries.len(),
            });
        }
        Ok(self.entries[k - 1])
    }

    pub fn sub(&self, other: &Self) -> Self {
        EllVector {
            p: self.p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        EllVector {
            p: self.p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

/// `ℓ` from any representative `Σ a_i ζ^i` (indices are used as integers).
pub fn log_derivatives_of_coeffs(p: Prime, a: &[Fp]) -> Result<EllVector> {
    let n = p.get() as usize;
    let len = n - 1; // X^0 .. X^{p-2}
    let mut fact_inv = vec![p.one(); len];
    let mut f = p.one();
    for m in 1..len {
        f *= p.elem(m as i64);
        fact_inv[m] = f.inv().expect("m < p");
    }
    let mut s = vec![p.zero(); len];
    for (i, &c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let base = p.elem(i as i64);
        let mut pw = p.one();
        for coeff in s.iter_mut() {
            *coeff += c * pw;
            pw *= base;
        }
    }
    for (m, coeff) in s.iter_mut().enumerate() {
        *coeff *= fact_inv[m];
    }
    if s[0].is_zero() {
        return Err(Error::DivisibleByOneMinusZeta);
    }
    // S'/S through X^{p-3}: series division
    let out_len = n - 2;
    let ds: Vec<Fp> = (0..out_len).map(|m| s[m + 1] * p.elem(m as i64 + 1)).collect();
    let s0_inv = s[0].inv()?;
    let mut q = vec![p.zero(); out_len];
    for m in 0..out_len {
        let mut acc = ds[m];
        for j in 1..=m {
            acc -= s[j] * q[m - j];
        }
        q[m] = acc * s0_inv;
    }
    // ℓ_k = (k-1)! q_{k-1}
    let mut fact = p.one();
    let mut entries = Vec::with_capacity(out_len);
    for (m, &qm) in q.iter().enumerate() {
        if m > 0 {
            fact *= p.elem(m as i64);
        }
        entries.push(fact * qm);
    }
    Ok(EllVector { p, entries })
}

pub fn log_derivatives(z: &CycloElement) -> Result<EllVector> {
    log_derivatives_of_coeffs(z.p, &z.a)
}

/// `ℓ(z·w) = ℓ(z) + ℓ(w)`.
pub fn ell_homomorphism_check(z: &CycloElement, w: &CycloElement) -> Result<bool> {
    let lhs = log_derivatives(&z.mul(w))?;
    let rhs = log_derivatives(z)?.add(&log_derivatives(w)?);
    Ok(lhs == rhs)
}

fn y_of(x: Fp) -> Result<Fp> {
    if x.is_zero() || x.value() == 1 {
        return Err(Error::DegenerateX(x.value()));
    }
    Ok(x - x.prime().one())
}

/// `ℓ(x - yζ) - ℓ(x - yζ⁻¹)`, the image of `z'(x)`.
pub fn ell_z_prime(x: Fp) -> Result<EllVector> {
    let y = y_of(x)?;
    let a = log_derivatives(&CycloElement::binomial(x, y, 1))?;
    let b = log_derivatives(&CycloElement::binomial(x, y, -1))?;
    Ok(a.sub(&b))
}

/// `γ_0 = 2y`, `γ_k = (-1)^k y^{k+1} + (k+1) y + Σ_{j=1}^{k} j y² (1+y)^{k-j}`.
pub fn gamma_coeff(k: usize, x: Fp) -> Result<Fp> {
    let p = x.prime();
    let y = y_of(x)?;
    if k + 3 > p.get() as usize {
        return Err(Error::IndexRange {
            index: k,
            min: 0,
            max: p.get() as usize - 3,
        });
    }
    if k == 0 {
        return Ok(p.elem(2) * y);
    }
    let sign = if k % 2 == 0 { p.one() } else { -p.one() };
    let mut v = sign * y.pow_u(k as u64 + 1) + p.elem(k as i64 + 1) * y;
    let y2 = y * y;
    let one_y = p.one() + y;
    for j in 1..=k {
        v += p.elem(j as i64) * y2 * one_y.pow_u((k - j) as u64);
    }
    Ok(v)
}

/// `D(z'(x))` equals `Σ γ_k λ^k dλ` for every admissible `x`.
pub fn gamma_series_check(p: Prime) -> bool {
    p.elements().skip(2).all(|x| {
        let trace = z_prime(x)
            .and_then(|z| z.dennis_trace())
            .expect("x is admissible");
        trace
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, &c)| gamma_coeff(k, x) == Ok(c))
    })
}

/// Exact trace coefficients of `z'(x)` and the closed form side by side.
#[derive(Debug, Clone, Serialize)]
pub struct GammaComparison {
    pub p: u64,
    pub x: u64,
    pub series: Vec<Fp>,
    pub closed_form: Vec<Fp>,
}

pub fn gamma_comparison(x: Fp) -> Result<GammaComparison> {
    let series = z_prime(x)?.dennis_trace()?.coeffs().to_vec();
    let closed_form = (0..series.len())
        .map(|k| gamma_coeff(k, x))
        .collect::<Result<_>>()?;
    Ok(GammaComparison {
        p: x.prime().get(),
        x: x.value(),
        series,
        closed_form,
    })
}

/// Candidate right-hand sides for `ℓ_{2k+1}(x - yζ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MiriCandidate {
    /// `-x·M_{2k+1}(x/y)`
    MinusXAtXOverY,
    /// `-x·M_{2k+1}(y/x)`
    MinusXAtYOverX,
    /// `-y·M_{2k+1}(x/y)`
    MinusYAtXOverY,
    /// `-y·M_{2k+1}(y/x)`
    MinusYAtYOverX,
}

impl MiriCandidate {
    pub const ALL: [MiriCandidate; 4] = [
        MiriCandidate::MinusXAtXOverY,
        MiriCandidate::MinusXAtYOverX,
        MiriCandidate::MinusYAtXOverY,
        MiriCandidate::MinusYAtYOverX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MiriCandidate::MinusXAtXOverY => "-x*M(x/y)",
            MiriCandidate::MinusXAtYOverX => "-x*M(y/x)",
            MiriCandidate::MinusYAtXOverY => "-y*M(x/y)",
            MiriCandidate::MinusYAtYOverX => "-y*M(y/x)",
        }
    }

    pub fn eval(self, x: Fp, index: u64) -> Result<Fp> {
        let y = y_of(x)?;
        let (scale, t) = match self {
            MiriCandidate::MinusXAtXOverY => (x, x / y),
            MiriCandidate::MinusXAtYOverX => (x, y / x),
            MiriCandidate::MinusYAtXOverY => (y, x / y),
            MiriCandidate::MinusYAtYOverX => (y, y / x),
        };
        Ok(-scale * mirimanoff_eval(index, t)?)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MiriIdentityAudit {
    pub p: u64,
    /// Number of `(x, k)` pairs, `x ∉ {0, 1}`, `1 ≤ k ≤ (p-3)/2`.
    pub points: usize,
    /// How many points each candidate gets right.
    pub match_counts: Vec<(MiriCandidate, usize)>,
    /// Candidates correct at every point.
    pub uniform: Vec<MiriCandidate>,
    /// Uniform candidates counted up to equality as functions on the grid.
    pub distinct_uniform: usize,
    /// `ℓ_{2k}(z'(x)) = 0` everywhere.
    pub even_vanish: bool,
    /// `ℓ_{2k+1}(z'(x)) = 2ℓ_{2k+1}(x - yζ)` everywhere.
    pub doubling: bool,
    /// `(x, k, ℓ_{2k+1}(x - yζ), -x·M_{2k+1}(x/y))` where the printed form fails.
    pub literal_mismatches: Vec<(u64, u64, u64, u64)>,
}

pub fn mirimanoff_identity_audit(p: Prime) -> Result<MiriIdentityAudit> {
    let n = p.get() as usize;
    let mut counts = [0usize; 4];
    let mut points = 0;
    let mut even_vanish = true;
    let mut doubling = true;
    let mut literal_mismatches = Vec::new();
    // values[c] lists candidate c over the grid, for the function-equality test
    let mut values: [Vec<Fp>; 4] = Default::default();
    for x in p.elements().skip(2) {
        let y = x - p.one();
        let ell_w = log_derivatives(&CycloElement::binomial(x, y, 1))?;
        let ell_z = ell_z_prime(x)?;
        for k in 1..=n - 2 {
            let v = ell_z.get(k)?;
            if k % 2 == 0 {
                even_vanish &= v.is_zero();
            } else {
                doubling &= v == p.elem(2) * ell_w.get(k)?;
            }
        }
        for k in 1..=(n - 3) / 2 {
            let idx = 2 * k + 1;
            let lhs = ell_w.get(idx)?;
            points += 1;
            for (c, cand) in MiriCandidate::ALL.iter().enumerate() {
                let rhs = cand.eval(x, idx as u64)?;
                values[c].push(rhs);
                if rhs == lhs {
                    counts[c] += 1;
                } else if *cand == MiriCandidate::MinusXAtXOverY {
                    literal_mismatches.push((x.value(), k as u64, lhs.value(), rhs.value()));
                }
            }
        }
    }
    let uniform: Vec<MiriCandidate> = MiriCandidate::ALL
        .iter()
        .zip(counts)
        .filter(|(_, c)| *c == points)
        .map(|(&m, _)| m)
        .collect();
    let mut classes: Vec<&Vec<Fp>> = Vec::new();
    for m in &uniform {
        let v = &values[MiriCandidate::ALL.iter().position(|c| c == m).unwrap()];
        if !classes.contains(&v) {
            classes.push(v);
        }
    }
    Ok(MiriIdentityAudit {
        p: p.get(),
        points,
        match_counts: MiriCandidate::ALL.iter().copied().zip(counts).collect(),
        distinct_uniform: classes.len(),
        uniform,
        even_vanish,
        doubling,
        literal_mismatches,
    })
}

/// Index layouts for `ℓ(x) = A·D(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EllLayout {
    /// `ℓ = (ℓ_1, ℓ_3, …, ℓ_{p-2})`, `D = (γ_0, γ_2, …, γ_{p-3})`: both of length `(p-1)/2`.
    FromOne,
    /// `ℓ = (ℓ_3, …, ℓ_{p-2})`, `D = (γ_0, …, γ_{p-5})`: both of length `(p-3)/2`.
    FromThreeTruncated,
    /// `ℓ = (ℓ_3, …, ℓ_p)`; `ℓ_p` does not exist.
    FromThreeToP,
}

impl EllLayout {
    pub const ALL: [EllLayout; 3] = [
        EllLayout::FromOne,
        EllLayout::FromThreeTruncated,
        EllLayout::FromThreeToP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EllLayout::FromOne => "from-one",
            EllLayout::FromThreeTruncated => "from-three-truncated",
            EllLayout::FromThreeToP => "from-three-to-p",
        }
    }

    /// `(ℓ indices, γ indices)`.
    fn indices(self, p: Prime) -> (Vec<usize>, Vec<usize>) {
        let h = p.half();
        match self {
            EllLayout::FromOne => ((0..h).map(|k| 2 * k + 1).collect(), (0..h).map(|k| 2 * k).collect()),
            EllLayout::FromThreeTruncated => (
                (1..h).map(|k| 2 * k + 1).collect(),
                (0..h - 1).map(|k| 2 * k).collect(),
            ),
            EllLayout::FromThreeToP => ((1..=h).map(|k| 2 * k + 1).collect(), (0..h).map(|k| 2 * k).collect()),
        }
    }
}

impl std::str::FromStr for EllLayout {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EllLayout::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::BadInput(format!("unknown layout {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangularRelation {
    pub p: u64,
    pub layout: EllLayout,
    pub exists: bool,
    /// Rank of the `D(x)` columns; `A` is unique when it equals the vector length.
    pub d_rank: usize,
    pub unique: bool,
    pub matrix: Option<Vec<Vec<u64>>>,
    pub lower_triangular: bool,
    pub upper_triangular: bool,
    pub invertible: bool,
}

/// Solves `ℓ(x) = A·D(x)` for one `A` valid at every `x ∉ {0, 1}`.
pub fn triangular_relation(p: Prime, layout: EllLayout) -> Result<TriangularRelation> {
    if p.get() < 5 {
        return Err(Error::BadInput("triangular relation needs p >= 5".into()));
    }
    let (ell_idx, gamma_idx) = layout.indices(p);
    let n = ell_idx.len();
    let mut l_cols = Vec::new();
    let mut d_cols = Vec::new();
    for x in p.elements().skip(2) {
        let ell = ell_z_prime(x)?;
        l_cols.push(ell_idx.iter().map(|&k| ell.get(k)).collect::<Result<Vec<_>>>()?);
        d_cols.push(gamma_idx.iter().map(|&k| gamma_coeff(k, x)).collect::<Result<Vec<_>>>()?);
    }
    // X·Dm = Lm with Dm, Lm of shape n × #x
    let dm = Matrix::from_rows(p, &d_cols).transpose();
    let lm = Matrix::from_rows(p, &l_cols).transpose();
    let d_rank = dm.rank();
    let solved = dm.solve_left(&lm);
    let (exists, matrix, lower, upper, invertible) = match &solved {
        Some(a) => (
            true,
            Some(a.to_rows()),
            a.is_lower_triangular(),
            a.is_upper_triangular(),
            a.rank() == n,
        ),
        None => (false, None, false, false, false),
    };
    Ok(TriangularRelation {
        p: p.get(),
        layout,
        exists,
        d_rank,
        unique: d_rank == n,
        matrix,
        lower_triangular: lower,
        upper_triangular: upper,
        invertible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::primes_in;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pr(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn random_unit(p: Prime, rng: &mut ChaCha8Rng) -> CycloElement {
        loop {
            let a: Vec<Fp> = (0..p.get())
                .map(|_| p.elem(rng.gen_range(0..p.get() as i64)))
                .collect();
            let z = CycloElement::new(p, &a);
            if !z.augmentation().is_zero() {
                return z;
            }
        }
    }

    #[test]
    fn desk_values() {
        let p = pr(5);
        let z = CycloElement::from_i64(p, &[2, -1]);
        let l = log_derivatives(&z).unwrap();
        assert_eq!(l.get(1).unwrap().value(), 4);
        assert_eq!(l.get(3).unwrap().value(), 4);
        assert!(l.get(4).is_err());
        let c = log_derivatives(&CycloElement::constant(p.elem(3))).unwrap();
        assert!(c.entries.iter().all(|e| e.is_zero()));
        assert_eq!(
            log_derivatives(&CycloElement::from_i64(p, &[1, -1])),
            Err(Error::DivisibleByOneMinusZeta)
        );
    }

    #[test]
    fn ell_one_is_weighted_mean() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in primes_in(5, 32) {
            for _ in 0..20 {
                let z = random_unit(p, &mut rng);
                let num = z
                    .coeffs()
                    .iter()
                    .enumerate()
                    .fold(p.zero(), |s, (i, &a)| s + p.elem(i as i64) * a);
                assert_eq!(log_derivatives(&z).unwrap().get(1).unwrap(), num / z.augmentation());
            }
        }
    }

    #[test]
    fn representative_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for p in primes_in(5, 32) {
            for _ in 0..20 {
                let z = random_unit(p, &mut rng);
                let c = p.elem(rng.gen_range(1..p.get() as i64));
                let shifted: Vec<Fp> = z.coeffs().iter().map(|&a| a + c).collect();
                assert_eq!(
                    log_derivatives_of_coeffs(p, &shifted).unwrap(),
                    log_derivatives(&z).unwrap()
                );
            }
        }
    }

    #[test]
    fn homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for p in primes_in(5, 32) {
            let one = CycloElement::constant(p.one());
            for _ in 0..50 {
                let z = random_unit(p, &mut rng);
                let w = random_unit(p, &mut rng);
                assert!(ell_homomorphism_check(&z, &w).unwrap());
                assert_eq!(log_derivatives(&z.mul(&one)).unwrap(), log_derivatives(&z).unwrap());
                let sq = log_derivatives(&z.mul(&z)).unwrap();
                let l = log_derivatives(&z).unwrap();
                assert_eq!(sq, l.add(&l));
            }
        }
    }

    #[test]
    fn sigma_flips_odd_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for p in primes_in(5, 24) {
            let z = random_unit(p, &mut rng);
            let a = log_derivatives(&z).unwrap();
            let b = log_derivatives(&z.sigma()).unwrap();
            for k in 1..=p.get() as usize - 2 {
                let sign = if k % 2 == 0 { p.one() } else { -p.one() };
                assert_eq!(b.get(k).unwrap(), sign * a.get(k).unwrap());
            }
        }
    }

    #[test]
    fn binomial_with_inverse_power_is_canonical() {
        let p = pr(7);
        let (x, y) = (p.elem(3), p.elem(2));
        let z = CycloElement::binomial(x, y, -1);
        let expect: Vec<u64> = vec![5, 2, 2, 2, 2, 2, 0];
        assert_eq!(z.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn gamma_values() {
        for p in primes_in(7, 40) {
            for x in p.elements().skip(2) {
                let y = x - p.one();
                assert_eq!(gamma_coeff(0, x).unwrap(), p.elem(2) * y);
                assert_eq!(gamma_coeff(1, x).unwrap(), p.elem(2) * y);
                let y2 = y * y;
                assert_eq!(
                    gamma_coeff(2, x).unwrap(),
                    p.elem(2) * y2 * y + p.elem(3) * y2 + p.elem(3) * y
                );
            }
        }
        assert!(gamma_coeff(3, pr(5).elem(2)).is_err());
        assert_eq!(gamma_coeff(0, pr(5).elem(1)), Err(Error::DegenerateX(1)));
    }

    #[test]
    fn gamma_series_small() {
        for p in primes_in(5, 40) {
            assert!(gamma_series_check(p), "p = {p}");
        }
    }

    #[test]
    fn miri_identity_p5() {
        let a = mirimanoff_identity_audit(pr(5)).unwrap();
        assert_eq!(a.points, 3);
        assert!(a.even_vanish && a.doubling);
        assert!(a.uniform.contains(&MiriCandidate::MinusXAtYOverX));
        assert!(!a.uniform.contains(&MiriCandidate::MinusXAtXOverY));
        assert_eq!(a.distinct_uniform, 1);
        // x = 2: ℓ_3 = 4 vs -2·M_3(2) = 3; x = 4: ℓ_3 = 1 vs -4·M_3(3) = 3
        assert!(a.literal_mismatches.contains(&(2, 1, 4, 3)));
        assert!(a.literal_mismatches.contains(&(4, 1, 1, 3)));
    }

    #[test]
    fn triangular_layouts() {
        let t = triangular_relation(pr(5), EllLayout::FromOne).unwrap();
        assert!(t.exists && t.unique && t.lower_triangular && t.invertible);
        assert_eq!(t.matrix.unwrap(), vec![vec![4, 0], vec![2, 3]]);
        let t = triangular_relation(pr(7), EllLayout::FromOne).unwrap();
        assert_eq!(t.matrix.unwrap(), vec![vec![6, 0, 0], vec![2, 5, 0], vec![3, 0, 4]]);
        assert!(!triangular_relation(pr(7), EllLayout::FromThreeTruncated).unwrap().exists);
        assert!(matches!(
            triangular_relation(pr(7), EllLayout::FromThreeToP),
            Err(Error::IndexRange { index: 7, .. })
        ));
    }
}

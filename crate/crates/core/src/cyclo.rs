//! Truncated rings attached to the `p`-th cyclotomic field, with their Kähler differentials.
//!
//! * [`LambdaSeries`]: `A/p = F_p[λ]/(λ^{p-1})` where `λ = 1 - ζ`. Differentials are
//!   [`LambdaForm`]s `Σ a_i λ^i dλ` with `λ^{p-2} dλ = 0`.
//! * [`RSeries`]: `R = F_p[t]/(t^p - 1)`, stored in the nilpotent coordinate `u = 1 - t`
//!   (`u^p = 0`). Differentials are [`RForm`]s on `u^i du`; `Ω¹(R)` is free of rank one.
//!
//! On units the Dennis trace is the logarithmic derivative `z ↦ z⁻¹ dz`.
//!
//! The Galois group acts on `R` through `t ↦ t^e`; the generator `g` uses the smallest
//! primitive root `s`, and complex conjugation is `σ = g^{(p-1)/2}`, i.e. `t ↦ t⁻¹`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::{primitive_root, Fp, Prime};

fn trunc_mul(a: &[Fp], b: &[Fp], len: usize, p: Prime) -> Vec<Fp> {
    let mut out = vec![p.zero(); len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn trunc_inv(a: &[Fp], p: Prime) -> Result<Vec<Fp>> {
    let c0 = a[0].inv().map_err(|_| Error::NonUnit)?;
    let n = a.len();
    let mut b = vec![p.zero(); n];
    b[0] = c0;
    for k in 1..n {
        let mut s = p.zero();
        for j in 1..=k {
            s += a[j] * b[k - j];
        }
        b[k] = -(s * c0);
    }
    Ok(b)
}

/// `Σ c_i X^i ↦ Σ (i+1) c_{i+1} X^i`, keeping `out_len` terms.
fn derivative(a: &[Fp], out_len: usize, p: Prime) -> Vec<Fp> {
    (0..out_len)
        .map(|i| a.get(i + 1).map_or(p.zero(), |&c| c * p.elem(i as i64 + 1)))
        .collect()
}

/// `a(μ)` for a nilpotent `μ` (zero constant term), Horner style.
fn compose(a: &[Fp], mu: &[Fp], len: usize, p: Prime) -> Vec<Fp> {
    debug_assert!(mu[0].is_zero());
    let mut acc = vec![p.zero(); len];
    for &c in a.iter().rev() {
        acc = trunc_mul(&acc, mu, len, p);
        acc[0] += c;
    }
    acc
}

/// Binomial coefficients `C(n, k) mod p` for `n, k < p`.
fn binomials(p: Prime) -> Vec<Vec<Fp>> {
    let n = p.get() as usize;
    let mut rows: Vec<Vec<Fp>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![p.zero(); n];
        row[0] = p.one();
        for k in 1..=i {
            row[k] = rows[i - 1][k - 1] + rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

fn check_x(x: Fp) -> Result<Fp> {
    if x.is_zero() || x.value() == 1 {
        return Err(Error::DegenerateX(x.value()));
    }
    Ok(x - x.prime().one())
}

/// Truncated commutative ring whose units carry a Dennis trace.
pub trait TruncatedRing: Sized + Clone + PartialEq {
    type Form: DifferentialForm<Ring = Self>;

    fn prime(&self) -> Prime;
    fn coeffs(&self) -> &[Fp];
    fn from_coeffs(p: Prime, coeffs: Vec<Fp>) -> Self;
    /// Number of stored coefficients for this ring at `p`.
    fn ring_len(p: Prime) -> usize;

    fn one(p: Prime) -> Self {
        let mut c = vec![p.zero(); Self::ring_len(p)];
        c[0] = p.one();
        Self::from_coeffs(p, c)
    }

    fn constant(c: Fp) -> Self {
        let p = c.prime();
        let mut v = vec![p.zero(); Self::ring_len(p)];
        v[0] = c;
        Self::from_coeffs(p, v)
    }

    fn is_unit(&self) -> bool {
        !self.coeffs()[0].is_zero()
    }

    fn mul(&self, other: &Self) -> Self {
        let p = self.prime();
        Self::from_coeffs(
            p,
            trunc_mul(self.coeffs(), other.coeffs(), Self::ring_len(p), p),
        )
    }

    fn add(&self, other: &Self) -> Self {
        let c = self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(&a, &b)| a + b)
            .collect();
        Self::from_coeffs(self.prime(), c)
    }

    fn invert(&self) -> Result<Self> {
        Ok(Self::from_coeffs(
            self.prime(),
            trunc_inv(self.coeffs(), self.prime())?,
        ))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prime());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Kähler differential `dz`.
    fn differential(&self) -> Self::Form;

    /// `z⁻¹ dz`.
    fn dennis_trace(&self) -> Result<Self::Form> {
        let inv = self.invert()?;
        Ok(self.differential().scale(&inv))
    }
}

/// Element of `Ω¹` of a [`TruncatedRing`], as coefficients on `X^i dX`.
pub trait DifferentialForm: Sized + Clone + PartialEq {
    type Ring: TruncatedRing<Form = Self>;

    fn coeffs(&self) -> &[Fp];
    fn from_coeffs(p: Prime, coeffs: Vec<Fp>) -> Self;
    fn form_len(p: Prime) -> usize;

    fn prime(&self) -> Prime {
        self.coeffs()[0].prime()
    }

    fn add(&self, other: &Self) -> Self {
        let c = self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(&a, &b)| a + b)
            .collect();
        Self::from_coeffs(self.prime(), c)
    }

    fn scale(&self, by: &Self::Ring) -> Self {
        let p = self.prime();
        Self::from_coeffs(
            p,
            trunc_mul(by.coeffs(), self.coeffs(), Self::form_len(p), p),
        )
    }

    fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }
}

// ---------------------------------------------------------------------------
// A/p = F_p[λ]/(λ^{p-1})
// ---------------------------------------------------------------------------

/// Element of `F_p[λ]/(λ^{p-1})`: `p - 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeries {
    p: Prime,
    coeffs: Vec<Fp>,
}

/// `Σ a_i λ^i dλ` with `p - 2` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaForm {
    p: Prime,
    coeffs: Vec<Fp>,
}

impl TruncatedRing for LambdaSeries {
    type Form = LambdaForm;

    fn prime(&self) -> Prime {
        self.p
    }

    fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    fn from_coeffs(p: Prime, mut coeffs: Vec<Fp>) -> Self {
        coeffs.resize(Self::ring_len(p), p.zero());
        LambdaSeries { p, coeffs }
    }

    fn ring_len(p: Prime) -> usize {
        p.get() as usize - 1
    }

    fn differential(&self) -> LambdaForm {
        LambdaForm {
            p: self.p,
            coeffs: derivative(&self.coeffs, LambdaForm::form_len(self.p), self.p),
        }
    }
}

impl DifferentialForm for LambdaForm {
    type Ring = LambdaSeries;

    fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    fn from_coeffs(p: Prime, mut coeffs: Vec<Fp>) -> Self {
        coeffs.resize(Self::form_len(p), p.zero());
        LambdaForm { p, coeffs }
    }

    fn form_len(p: Prime) -> usize {
        p.get() as usize - 2
    }

    fn prime(&self) -> Prime {
        self.p
    }
}

impl LambdaSeries {
    /// The uniformizer `λ`.
    pub fn lambda(p: Prime) -> Self {
        let mut c = vec![p.zero(); Self::ring_len(p)];
        if c.len() > 1 {
            c[1] = p.one();
        }
        LambdaSeries { p, coeffs: c }
    }

    /// `1 - λ`, the image of `ζ`.
    pub fn zeta(p: Prime) -> Self {
        Self::one(p).add(&Self::lambda(p).neg())
    }

    pub fn neg(&self) -> Self {
        LambdaSeries {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    /// Galois action `ζ ↦ ζ^e`, i.e. `λ ↦ 1 - (1 - λ)^e`; `e` must be prime to `p`.
    pub fn galois_by_exponent(&self, e: u64) -> Self {
        let p = self.p;
        let e = e % p.get();
        assert!(e != 0, "Galois exponent must be prime to p");
        let image = Self::one(p).add(&Self::zeta(p).pow(e).neg());
        LambdaSeries {
            p,
            coeffs: compose(&self.coeffs, &image.coeffs, Self::ring_len(p), p),
        }
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn sigma(&self) -> Self {
        self.galois_by_exponent(self.p.get() - 1)
    }
}

/// `z'(x) = w / σ(w)` with `w = x - y(1 - λ) = 1 + yλ` and `y = x - 1`.
pub fn z_prime(x: Fp) -> Result<LambdaSeries> {
    let y = check_x(x)?;
    let p = x.prime();
    let w = LambdaSeries::one(p).add(&LambdaSeries::lambda(p).mul(&LambdaSeries::constant(y)));
    let sigma_w = sigma_w(x, y)?;
    Ok(w.mul(&sigma_w.invert()?))
}

/// `σ(w) = x - y (1 - λ)⁻¹`, built directly from the geometric series.
fn sigma_w(x: Fp, y: Fp) -> Result<LambdaSeries> {
    let p = x.prime();
    let geometric = LambdaSeries::zeta(p).invert()?;
    Ok(LambdaSeries::constant(x).add(&geometric.mul(&LambdaSeries::constant(-y))))
}

/// `D(1 - λ)`.
pub fn trace_one_minus_lambda(p: Prime) -> LambdaForm {
    LambdaSeries::zeta(p)
        .dennis_trace()
        .expect("1 - λ is a unit")
}

// ---------------------------------------------------------------------------
// R = F_p[t]/(t^p - 1) = F_p[u]/(u^p), u = 1 - t
// ---------------------------------------------------------------------------

/// Element of `R`, coefficients on `u^i`, `i < p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSeries {
    p: Prime,
    coeffs: Vec<Fp>,
}

/// Element of `Ω¹(R)`, coefficients on `u^i du`, `i < p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RForm {
    p: Prime,
    coeffs: Vec<Fp>,
}

impl TruncatedRing for RSeries {
    type Form = RForm;

    fn prime(&self) -> Prime {
        self.p
    }

    fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    fn from_coeffs(p: Prime, mut coeffs: Vec<Fp>) -> Self {
        coeffs.resize(Self::ring_len(p), p.zero());
        RSeries { p, coeffs }
    }

    fn ring_len(p: Prime) -> usize {
        p.get() as usize
    }

    fn differential(&self) -> RForm {
        RForm {
            p: self.p,
            coeffs: derivative(&self.coeffs, RForm::form_len(self.p), self.p),
        }
    }
}

impl DifferentialForm for RForm {
    type Ring = RSeries;

    fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    fn from_coeffs(p: Prime, mut coeffs: Vec<Fp>) -> Self {
        coeffs.resize(Self::form_len(p), p.zero());
        RForm { p, coeffs }
    }

    fn form_len(p: Prime) -> usize {
        p.get() as usize
    }

    fn prime(&self) -> Prime {
        self.p
    }
}

/// `Σ c_i u^i  ↦  Σ b_j t^j` with `u = 1 - t`.
fn u_to_t(c: &[Fp], p: Prime) -> Vec<Fp> {
    let binom = binomials(p);
    let n = c.len();
    let mut b = vec![p.zero(); n];
    for (i, &ci) in c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for j in 0..=i {
            let term = ci * binom[i][j];
            b[j] = if j % 2 == 0 { b[j] + term } else { b[j] - term };
        }
    }
    b
}

/// `Σ b_j t^j  ↦  Σ c_i u^i` with `t = 1 - u`; the substitution is an involution.
fn t_to_u(b: &[Fp], p: Prime) -> Vec<Fp> {
    u_to_t(b, p)
}

impl RSeries {
    /// From coefficients on `t^0, …, t^{p-1}`.
    pub fn from_t_coeffs(p: Prime, b: &[Fp]) -> Self {
        assert_eq!(b.len(), p.get() as usize);
        RSeries {
            p,
            coeffs: t_to_u(b, p),
        }
    }

    pub fn to_t_coeffs(&self) -> Vec<Fp> {
        u_to_t(&self.coeffs, self.p)
    }

    /// `t^e` for any integer `e` (read mod `p`).
    pub fn t_power(p: Prime, e: i64) -> Self {
        let mut b = vec![p.zero(); p.get() as usize];
        b[e.rem_euclid(p.get() as i64) as usize] = p.one();
        Self::from_t_coeffs(p, &b)
    }

    /// `t ↦ t^e`; `e` must be prime to `p`.
    pub fn galois_by_exponent(&self, e: u64) -> Self {
        let p = self.p;
        let n = p.get();
        let e = e % n;
        assert!(e != 0, "Galois exponent must be prime to p");
        let b = self.to_t_coeffs();
        let mut out = vec![p.zero(); n as usize];
        for (j, &c) in b.iter().enumerate() {
            out[(j as u64 * e % n) as usize] += c;
        }
        Self::from_t_coeffs(p, &out)
    }

    /// `g^k` where `g` acts by `t ↦ t^s`, `s` the smallest primitive root.
    pub fn galois_apply(&self, k: i64) -> Self {
        self.galois_by_exponent(galois_exponent(self.p, k))
    }

    pub fn sigma(&self) -> Self {
        self.galois_by_exponent(self.p.get() - 1)
    }

    /// Truncated logarithm of `z / z(0)`, integrated from `z⁻¹ dz`:
    /// coefficient `i` is `[u^{i-1}](z'/z) / i` for `1 ≤ i ≤ p - 1`.
    ///
    /// On `1 + uR` this equals `Σ_{m<p} (-1)^{m+1} (z-1)^m / m` and is an injective
    /// homomorphism to `(uR, +)`.
    pub fn log_unit(&self) -> Result<Vec<Fp>> {
        let p = self.p;
        let trace = self.dennis_trace()?;
        Ok((1..p.get() as usize)
            .map(|i| trace.coeffs[i - 1] * p.elem(i as i64).inv().expect("i < p"))
            .collect())
    }
}

/// `s^k mod p` for the smallest primitive root `s` (negative `k` allowed).
pub fn galois_exponent(p: Prime, k: i64) -> u64 {
    let s = primitive_root(p);
    s.pow(k.rem_euclid(p.get() as i64 - 1))
        .expect("s is nonzero")
        .value()
}

impl RForm {
    /// Coefficients on the basis `t^j · t⁻¹dt`, `j < p`.
    pub fn to_t_coeffs(&self) -> Vec<Fp> {
        // a du = -t·a · t⁻¹dt
        let p = self.p;
        let n = p.get() as usize;
        let a = u_to_t(&self.coeffs, p);
        let mut b = vec![p.zero(); n];
        for j in 0..n {
            b[(j + 1) % n] = -a[j];
        }
        b
    }

    pub fn from_t_coeffs(p: Prime, b: &[Fp]) -> Self {
        let n = p.get() as usize;
        assert_eq!(b.len(), n);
        let mut a = vec![p.zero(); n];
        for j in 0..n {
            a[j] = -b[(j + 1) % n];
        }
        RForm {
            p,
            coeffs: t_to_u(&a, p),
        }
    }

    /// `t ↦ t^e` on forms: `t^j t⁻¹dt ↦ e · t^{ej} t⁻¹dt`.
    pub fn galois_by_exponent(&self, e: u64) -> Self {
        let p = self.p;
        let n = p.get();
        let e = e % n;
        assert!(e != 0, "Galois exponent must be prime to p");
        let b = self.to_t_coeffs();
        let scale = p.elem(e as i64);
        let mut out = vec![p.zero(); n as usize];
        for (j, &c) in b.iter().enumerate() {
            out[(j as u64 * e % n) as usize] += scale * c;
        }
        Self::from_t_coeffs(p, &out)
    }

    pub fn galois_apply(&self, k: i64) -> Self {
        self.galois_by_exponent(galois_exponent(self.p, k))
    }

    pub fn sigma(&self) -> Self {
        self.galois_by_exponent(self.p.get() - 1)
    }

    /// `f₀⁻ = t⁻¹dt`.
    pub fn f0_minus(p: Prime) -> Self {
        FBasisCoords::unit(p, FBasisIndex::Minus(0)).to_form()
    }
}

// ---------------------------------------------------------------------------
// f-basis of Ω¹(R)
// ---------------------------------------------------------------------------

/// Coordinates on `(f₀⁻, f₁⁻, …, f_h⁻; f₁⁺, …, f_h⁺)`, `h = (p-1)/2`, where
/// `f₀⁻ = t⁻¹dt` and `f_ℓ^± = (t^{s^ℓ} ∓ t^{-s^ℓ}) t⁻¹dt`.
///
/// `σ` acts by `-1` on the minus block and by `+1` on the plus block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FBasisCoords {
    #[serde(skip)]
    pub p: Prime,
    pub minus: Vec<Fp>,
    pub plus: Vec<Fp>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FBasisIndex {
    /// `f_ℓ⁻`, `0 ≤ ℓ ≤ h`
    Minus(usize),
    /// `f_ℓ⁺`, `1 ≤ ℓ ≤ h`
    Plus(usize),
}

impl FBasisCoords {
    pub fn zero(p: Prime) -> Self {
        FBasisCoords {
            p,
            minus: vec![p.zero(); p.half() + 1],
            plus: vec![p.zero(); p.half()],
        }
    }

    pub fn unit(p: Prime, idx: FBasisIndex) -> Self {
        let mut c = Self::zero(p);
        match idx {
            FBasisIndex::Minus(l) => c.minus[l] = p.one(),
            FBasisIndex::Plus(l) => c.plus[l - 1] = p.one(),
        }
        c
    }

    pub fn from_form(form: &RForm) -> Self {
        let p = form.p;
        let n = p.get() as usize;
        let b = form.to_t_coeffs();
        let s = primitive_root(p);
        let half = p.elem(2).inv().expect("p is odd");
        let mut out = Self::zero(p);
        out.minus[0] = b[0];
        let mut a = p.one();
        for l in 1..=p.half() {
            a *= s;
            let i = a.value() as usize;
            let (bi, bj) = (b[i], b[n - i]);
            out.minus[l] = (bi + bj) * half;
            out.plus[l - 1] = (bi - bj) * half;
        }
        out
    }

    pub fn to_form(&self) -> RForm {
        let p = self.p;
        let n = p.get() as usize;
        let s = primitive_root(p);
        let mut b = vec![p.zero(); n];
        b[0] = self.minus[0];
        let mut a = p.one();
        for l in 1..=p.half() {
            a *= s;
            let i = a.value() as usize;
            let (m, q) = (self.minus[l], self.plus[l - 1]);
            b[i] += m + q;
            b[n - i] += m - q;
        }
        RForm::from_t_coeffs(p, &b)
    }

    pub fn plus_is_zero(&self) -> bool {
        self.plus.iter().all(|c| c.is_zero())
    }
}

pub fn to_f_basis(form: &RForm) -> FBasisCoords {
    FBasisCoords::from_form(form)
}

pub fn from_f_basis(coords: &FBasisCoords) -> RForm {
    coords.to_form()
}

// ---------------------------------------------------------------------------
// The elements v_k(x), z_k(x) of K_1(R; Z/p)
// ---------------------------------------------------------------------------

/// `v_k(x) = x - y t^{s^k}`.
pub fn v_k(x: Fp, k: i64) -> Result<RSeries> {
    let y = check_x(x)?;
    let p = x.prime();
    let e = galois_exponent(p, k) as i64;
    Ok(RSeries::constant(x).add(&RSeries::t_power(p, e).mul(&RSeries::constant(-y))))
}

/// `z_k(x) = v_k(x) / σ(v_k(x))` for `1 ≤ k ≤ (p-1)/2`.
pub fn z_k(x: Fp, k: usize) -> Result<RSeries> {
    let p = x.prime();
    if k == 0 || k > p.half() {
        return Err(Error::IndexRange {
            index: k,
            min: 1,
            max: p.half(),
        });
    }
    let v = v_k(x, k as i64)?;
    Ok(v.mul(&v.sigma().invert()?))
}

/// Which integer stands in for the Galois exponent `s^{k-1}` inside
/// `α_k = (x/y)^{s^{k-1}} + (y/x)^{s^{k-1}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaConvention {
    /// `m = s^{k-1} mod p` as an integer exponent: `q^m + (1/q)^m`.
    Literal,
    /// The exponent taken as an honest integer power, i.e. reduced mod `p - 1`.
    ModPMinusOne,
    /// `-m` represented by `p - m`: `q^m + q^{p-m}`.
    Reflected,
}

impl AlphaConvention {
    pub const ALL: [AlphaConvention; 3] = [
        AlphaConvention::Literal,
        AlphaConvention::ModPMinusOne,
        AlphaConvention::Reflected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlphaConvention::Literal => "literal",
            AlphaConvention::ModPMinusOne => "mod-p-minus-one",
            AlphaConvention::Reflected => "reflected",
        }
    }
}

impl std::str::FromStr for AlphaConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlphaConvention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::BadInput(format!("unknown alpha convention {s:?}")))
    }
}

/// `(α_1, …, α_h)` for `x ∉ {0, 1}` under the given exponent convention.
pub fn alpha_row(x: Fp, conv: AlphaConvention) -> Result<Vec<Fp>> {
    let y = check_x(x)?;
    let p = x.prime();
    let q = x * y.inv()?;
    let s = primitive_root(p);
    let n = p.get() as i64;
    let mut m = p.one(); // s^{k-1} mod p
    let mut m_int: u64 = 1; // s^{k-1} mod (p - 1)
    let mut row = Vec::with_capacity(p.half());
    for _ in 0..p.half() {
        let mv = m.value() as i64;
        let a = match conv {
            AlphaConvention::Literal => q.pow(mv)? + q.pow(-mv)?,
            AlphaConvention::ModPMinusOne => {
                q.pow(m_int as i64)? + q.pow(-(m_int as i64))?
            }
            AlphaConvention::Reflected => q.pow(mv)? + q.pow(n - mv)?,
        };
        row.push(a);
        m *= s;
        m_int = m_int * s.value() % (p.get() - 1);
    }
    Ok(row)
}

/// Exact Dennis trace of `z_1(x)` against the closed form `-s·y·(2, α_1, …, α_h)`.
#[derive(Debug, Clone, Serialize)]
pub struct Z1TraceCheck {
    pub p: u64,
    pub x: u64,
    pub s: u64,
    pub exact: FBasisCoords,
    /// `-s·y·(2, α_1, …, α_h)` per convention, in `AlphaConvention::ALL` order.
    pub claimed: Vec<(AlphaConvention, Vec<Fp>)>,
    pub matches: Vec<(AlphaConvention, bool)>,
}

pub fn check_z1_trace(x: Fp) -> Result<Z1TraceCheck> {
    let y = check_x(x)?;
    let p = x.prime();
    let s = primitive_root(p);
    let exact = to_f_basis(&z_k(x, 1)?.dennis_trace()?);
    let lead = -(s * y);
    let mut claimed = Vec::new();
    let mut matches = Vec::new();
    for conv in AlphaConvention::ALL {
        let mut v = vec![lead * p.elem(2)];
        v.extend(alpha_row(x, conv)?.into_iter().map(|a| lead * a));
        matches.push((conv, v == exact.minus));
        claimed.push((conv, v));
    }
    Ok(Z1TraceCheck {
        p: p.get(),
        x: x.value(),
        s: s.value(),
        exact,
        claimed,
        matches,
    })
}

/// `D(z'(x))` and `D(1 - λ)` are linearly independent.
pub fn trace_independent_of_one_minus_lambda(x: Fp) -> Result<bool> {
    let p = x.prime();
    let a = z_prime(x)?.dennis_trace()?;
    let b = trace_one_minus_lambda(p);
    Ok(crate::linalg::rank_of(p, &[a.coeffs().to_vec(), b.coeffs().to_vec()]) == 2)
}

/// `g(f)` for a basis vector `f`, `g: t ↦ t^s`.
pub fn galois_image_of_basis(p: Prime, idx: FBasisIndex) -> FBasisCoords {
    to_f_basis(&FBasisCoords::unit(p, idx).to_form().galois_apply(1))
}

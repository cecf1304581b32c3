//! Cross-checks of the pushforward formulas against three test families
//! of pointed curves, and a reconstruction of the formulas from them.
//!
//! * `i`: a rational spine with `g` elliptic tails. Everything pulls back
//!   to zero there; the boundary pullbacks are expressed in the classes
//!   `ε_2, …, ε_{g-2}`.
//! * `j`: a varying pointed genus-2 curve glued to a fixed general curve
//!   of genus `g-2`. Pullbacks land on the pointed genus-2 moduli space,
//!   compared modulo `10λ = δ_0 + 2δ_1`.
//! * `k_h`: a moving point on the genus-`h` side of a fixed two-component
//!   curve. Pullbacks are degrees.
//!
//! The Schubert-side identities behind the `j` family (Weierstrass fibre
//! integrals, aspect counts, Pieri expansions) are checked with the
//! engine in [`crate::schubert`].

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix, Solution};
use crate::numeric::{format_pq, int, rat, Rational};
use crate::schubert::{brute_zeta_integral, make_index, zeta_power_integral, ChowClass, GrassmannianSpec};
use crate::tautpush::{push_a, push_b, push_c, DivisorClass, GrdParams};

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    fn new(check: &str, params: Value, lhs: String, rhs: String, pass: bool) -> Self {
        Report { check: check.to_string(), params, lhs, rhs, pass, detail: None }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}: {} vs {}", self.check, self.params, self.lhs, self.rhs)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

fn grd_json(p: &GrdParams) -> Value {
    json!({ "g": p.g, "r": p.r, "d": p.d })
}

/// Which tautological class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Taut {
    A,
    B,
    C,
}

impl Taut {
    pub const ALL: [Taut; 3] = [Taut::A, Taut::B, Taut::C];

    pub fn push(&self, p: &GrdParams) -> Result<DivisorClass<Rational>> {
        match self {
            Taut::A => push_a(p),
            Taut::B => push_b(p),
            Taut::C => push_c(p),
        }
    }
}

impl fmt::Display for Taut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Taut::A => "a",
            Taut::B => "b",
            Taut::C => "c",
        })
    }
}

impl std::str::FromStr for Taut {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Taut::A),
            "b" => Ok(Taut::B),
            "c" => Ok(Taut::C),
            _ => Err(Error::Parse(format!("unknown class {s:?}, expected a, b or c"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Schubert side

/// How a Schubert integral should be evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    /// Also run the repeated-Pieri route when `g` is at most this.
    pub brute_max_g: u32,
}

impl Default for Evaluation {
    fn default() -> Self {
        Evaluation { brute_max_g: 12 }
    }
}

/// `∫ ζ^k σ_b`, zero when `b` leaves the box. Returns the closed-form
/// value and, if requested, the repeated-Pieri value.
fn zeta_integral_both(
    spec: GrassmannianSpec,
    b: &[i64],
    k: u32,
    brute: bool,
) -> Result<(Rational, Option<Rational>)> {
    let class = ChowClass::<Rational>::schubert_or_zero(spec, b)?;
    if class.is_zero() {
        return Ok((Rational::zero(), brute.then(Rational::zero)));
    }
    let idx = make_index(spec, b)?;
    let closed = zeta_power_integral(spec, &idx, k)?;
    let brute = if brute { Some(brute_zeta_integral(spec, &idx, k)?) } else { None };
    Ok((closed, brute))
}

fn agree(closed: &Rational, brute: &Option<Rational>) -> bool {
    brute.as_ref().is_none_or(|b| b == closed)
}

fn route_detail(closed: &Rational, brute: &Option<Rational>) -> String {
    match brute {
        Some(b) => format!("closed form {}, repeated Pieri {}", format_pq(closed), format_pq(b)),
        None => format!("closed form {}, repeated Pieri skipped", format_pq(closed)),
    }
}

fn grassmannian(p: &GrdParams) -> Result<GrassmannianSpec> {
    GrassmannianSpec::new(p.r, p.d)
}

/// `∫ ζ^g = N` on `G(r, P^d)`.
pub fn identity_castelnuovo(p: &GrdParams, eval: Evaluation) -> Result<Report> {
    p.require_rho_zero()?;
    let spec = grassmannian(p)?;
    let zeros = vec![0i64; p.r as usize + 1];
    let (closed, brute) = zeta_integral_both(spec, &zeros, p.g, p.g <= eval.brute_max_g)?;
    let n = Rational::from_integer(p.n()?);
    let pass = closed == n && agree(&closed, &brute);
    Ok(Report::new("castelnuovo", grd_json(p), format_pq(&closed), format_pq(&n), pass)
        .with_detail(route_detail(&closed, &brute)))
}

/// Ascending index of `σ{3,…,3,2,1}`: `(1, 2, 3, …, 3)` cut to `r+1`
/// entries.
pub fn weierstrass_a_index(r: u32) -> Vec<i64> {
    (0..=r as i64).map(|i| (i + 1).min(3)).collect()
}

/// Ascending index of `σ{3,2,…,2,1,0}`: `(0, 1, 2, …, 2, 3)`. Needs `r >= 2`.
pub fn weierstrass_c_index(r: u32) -> Vec<i64> {
    let n = r as usize + 1;
    (0..n).map(|i| if i + 1 == n { 3 } else { i.min(2) as i64 }).collect()
}

/// `-2(g-2) ∫ σ{3,…,3,2,1} ζ^{g-3} = -2d(2g-2-d)N / (3(g-1))`.
pub fn identity_weierstrass_a(p: &GrdParams, eval: Evaluation) -> Result<Report> {
    p.require_rho_zero()?;
    if p.g < 3 {
        return Err(Error::Param(format!("Weierstrass a-identity needs g >= 3, got g = {}", p.g)));
    }
    let spec = grassmannian(p)?;
    let (g, d) = (i64::from(p.g), i64::from(p.d));
    let (closed, brute) =
        zeta_integral_both(spec, &weierstrass_a_index(p.r), p.g - 3, p.g <= eval.brute_max_g)?;
    let n = Rational::from_integer(p.n()?);
    let lhs = int(-2 * (g - 2)) * &closed;
    let rhs = int(-2 * d * (2 * g - 2 - d)) * &n / int(3 * (g - 1));
    let pass = lhs == rhs && agree(&closed, &brute);
    Ok(Report::new("weierstrass_a", grd_json(p), format_pq(&lhs), format_pq(&rhs), pass)
        .with_detail(route_detail(&closed, &brute)))
}

/// `∫ σ{3,2,…,2,1,0} ζ^{g-2} + ∫ ζ^g = ξN / (3(g-1))`.
pub fn identity_weierstrass_c(p: &GrdParams, eval: Evaluation) -> Result<Report> {
    p.require_rho_zero()?;
    if p.g < 3 || p.r < 2 {
        return Err(Error::Param(format!(
            "Weierstrass c-identity needs g >= 3 and r >= 2, got g = {}, r = {}",
            p.g, p.r
        )));
    }
    let spec = grassmannian(p)?;
    let brute = p.g <= eval.brute_max_g;
    let (closed, brute_val) = zeta_integral_both(spec, &weierstrass_c_index(p.r), p.g - 2, brute)?;
    let n = Rational::from_integer(p.n()?);
    let lhs = closed.clone() + &n;
    let rhs = p.xi()? * &n / int(3 * (i64::from(p.g) - 1));
    let pass = lhs == rhs && agree(&closed, &brute_val);
    Ok(Report::new("weierstrass_c", grd_json(p), format_pq(&lhs), format_pq(&rhs), pass)
        .with_detail(route_detail(&closed, &brute_val)))
}

fn class(spec: GrassmannianSpec, b: &[i64]) -> Result<ChowClass<Rational>> {
    ChowClass::schubert_or_zero(spec, b)
}

/// The three Pieri expansions used on the genus-2 side:
///
/// 1. `σ(0,…,0,1) · ζ = σ(1,…,1) + σ(0,1,…,1,2)`;
/// 2. the full shift of `σ(0,1,2,…,2)` is `σ(1,2,3,…,3)`;
/// 3. `σ(0,…,0,1) · σ(0,1,2,…,2) = σ(0,1,2,…,2,3) + ζ²`.
pub fn identity_pieri(r: u32, d: u32) -> Result<Vec<Report>> {
    if r < 2 {
        return Err(Error::Param(format!("Pieri identities need r >= 2, got r = {r}")));
    }
    let spec = GrassmannianSpec::new(r, d)?;
    let n = r as usize + 1;
    let params = json!({ "r": r, "d": d });
    let zeta = ChowClass::<Rational>::schubert(spec, spec.zeta().ok_or_else(|| {
        Error::Param(format!("ζ does not exist on G({spec})"))
    })?);
    let mut out = Vec::new();

    let lhs = zeta.pieri_ek(1)?;
    let mut tail2 = vec![1i64; n];
    tail2[0] = 0;
    tail2[n - 1] = 2;
    let rhs = class(spec, &vec![1; n])?.add(&class(spec, &tail2)?)?;
    out.push(Report::new("pieri_h_zeta", params.clone(), lhs.to_string(), rhs.to_string(), lhs == rhs));

    let base: Vec<i64> = (0..n as i64).map(|i| i.min(2)).collect();
    let shifted: Vec<i64> = base.iter().map(|b| b + 1).collect();
    let base_class = class(spec, &base)?;
    let lhs = base_class.pieri_ek(r + 1)?;
    let rhs = class(spec, &shifted)?;
    out.push(Report::new("pieri_full_shift", params.clone(), lhs.to_string(), rhs.to_string(), lhs == rhs));

    let lhs = base_class.pieri_ek(1)?;
    let rhs = class(spec, &weierstrass_c_index(r))?.add(&zeta.times_zeta())?;
    out.push(Report::new("pieri_h_base", params, lhs.to_string(), rhs.to_string(), lhs == rhs));
    Ok(out)
}

/// Ascending ramification index complementary to a vanishing sequence
/// `a_0 < … < a_r`: `c_i = d - a_{r-i}`, `b_i = c_i - i`.
pub fn vanishing_to_index(d: i64, vanishing: &[i64]) -> Vec<i64> {
    let r = vanishing.len() - 1;
    (0..=r).map(|i| d - vanishing[r - i] - i as i64).collect()
}

/// Vanishing sequences at the marked point of the two maximally
/// ramified series on a general pointed genus-2 curve.
pub fn aspect_vanishing(r: u32, d: u32) -> (Vec<i64>, Vec<i64>) {
    let (r, d) = (i64::from(r), i64::from(d));
    let mut a1: Vec<i64> = (0..r).map(|j| d - r - 2 + j).collect();
    a1.push(d);
    let mut a2: Vec<i64> = (0..r - 1).map(|j| d - r - 2 + j).collect();
    a2.extend([d - 2, d - 1]);
    (a1, a2)
}

/// Counts of the two aspect types on the genus-2 side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AspectCounts {
    pub params: GrdParams,
    #[serde(with = "crate::numeric::serde_rational")]
    pub type_a1: Rational,
    #[serde(with = "crate::numeric::serde_rational")]
    pub type_a2: Rational,
    /// `type_a1 + type_a2 == N`.
    pub sum_is_n: bool,
    /// Whether each count is an integer; recorded, never enforced.
    pub integral: (bool, bool),
    /// The same counts as `∫ σ_b ζ^{g-2}` with `b` complementary to each
    /// vanishing sequence (absent when `r = 0`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schubert: Option<(String, String)>,
    pub schubert_agrees: bool,
}

/// `(2g-2-d)N / (2(g-1))` of type `a_1` and `dN / (2(g-1))` of type `a_2`.
pub fn aspect_counts(p: &GrdParams) -> Result<AspectCounts> {
    p.require_rho_zero()?;
    if p.g < 2 {
        return Err(Error::Param("aspect counts need g >= 2".into()));
    }
    let (g, d) = (i64::from(p.g), i64::from(p.d));
    let n = Rational::from_integer(p.n()?);
    let type_a1 = int(2 * g - 2 - d) * &n / int(2 * (g - 1));
    let type_a2 = int(d) * &n / int(2 * (g - 1));
    let sum_is_n = type_a1.clone() + &type_a2 == n;
    let integral = (type_a1.is_integer(), type_a2.is_integer());
    let (schubert, schubert_agrees) = if p.r >= 1 {
        let spec = grassmannian(p)?;
        let (a1, a2) = aspect_vanishing(p.r, p.d);
        let (s1, _) = zeta_integral_both(spec, &vanishing_to_index(d, &a1), p.g - 2, false)?;
        let (s2, _) = zeta_integral_both(spec, &vanishing_to_index(d, &a2), p.g - 2, false)?;
        let ok = s1 == type_a1 && s2 == type_a2;
        (Some((format_pq(&s1), format_pq(&s2))), ok)
    } else {
        (None, true)
    };
    Ok(AspectCounts { params: *p, type_a1, type_a2, sum_is_n, integral, schubert, schubert_agrees })
}

impl AspectCounts {
    pub fn report(&self) -> Report {
        let sum = self.type_a1.clone() + &self.type_a2;
        let mut rep = Report::new(
            "aspect_counts",
            grd_json(&self.params),
            format!("{} + {}", format_pq(&self.type_a1), format_pq(&self.type_a2)),
            format_pq(&sum),
            self.sum_is_n && self.schubert_agrees,
        );
        if let Some((s1, s2)) = &self.schubert {
            rep = rep.with_detail(format!("Schubert {s1} + {s2}"));
        }
        rep
    }
}

// ---------------------------------------------------------------------------
// Pullbacks to the test families

/// A class on the pointed genus-2 moduli space in `(λ, ψ, δ_0, δ_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M21Class {
    pub lambda: Rational,
    pub psi: Rational,
    pub delta0: Rational,
    pub delta1: Rational,
}

impl M21Class {
    pub fn new(lambda: Rational, psi: Rational, delta0: Rational, delta1: Rational) -> Self {
        M21Class { lambda, psi, delta0, delta1 }
    }

    pub fn zero() -> Self {
        M21Class::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// `10λ - δ_0 - 2δ_1`, zero in the Picard group.
    pub fn relation() -> Self {
        M21Class::new(int(10), Rational::zero(), int(-1), int(-2))
    }

    /// The Weierstrass divisor `3ψ - λ - δ_1`.
    pub fn weierstrass() -> Self {
        M21Class::new(int(-1), int(3), Rational::zero(), int(-1))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        M21Class::new(&self.lambda * s, &self.psi * s, &self.delta0 * s, &self.delta1 * s)
    }

    pub fn add(&self, o: &Self) -> Self {
        M21Class::new(
            &self.lambda + &o.lambda,
            &self.psi + &o.psi,
            &self.delta0 + &o.delta0,
            &self.delta1 + &o.delta1,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    /// Coordinates after eliminating `δ_0 = 10λ - 2δ_1`:
    /// `(λ + 10δ_0, ψ, δ_1 - 2δ_0)`.
    pub fn quotient_coords(&self) -> [Rational; 3] {
        [
            &self.lambda + int(10) * &self.delta0,
            self.psi.clone(),
            &self.delta1 - int(2) * &self.delta0,
        ]
    }

    pub fn eq_mod_relation(&self, o: &Self) -> bool {
        self.quotient_coords() == o.quotient_coords()
    }

    /// `m` with `self - other = m · (10λ - δ_0 - 2δ_1)`, if any.
    pub fn relation_multiple(&self, o: &Self) -> Option<Rational> {
        let diff = self.sub(o);
        let m = -diff.delta0.clone();
        (diff == Self::relation().scale(&m)).then_some(m)
    }
}

impl fmt::Display for M21Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})λ + ({})ψ + ({})δ0 + ({})δ1",
            self.lambda, self.psi, self.delta0, self.delta1
        )
    }
}

/// Coefficients of `ε_2, …, ε_{g-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonVector(pub Vec<Rational>);

impl EpsilonVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coefficient of `ε_i`, `2 <= i <= g-2`.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 2]
    }
}

/// `i^*δ_1 = -Σ (g-i)(g-i-1)/((g-1)(g-2)) ε_i`.
pub fn epsilon_weight_delta1(g: i64, i: i64) -> Rational {
    rat(-(g - i) * (g - i - 1), (g - 1) * (g - 2))
}

/// `i^*δ_{g-1} = -Σ (g-i)(i-1)/(g-2) ε_i`.
pub fn epsilon_weight_delta_top(g: i64, i: i64) -> Rational {
    rat(-(g - i) * (i - 1), g - 2)
}

/// All three pullbacks of one divisor class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullbacks {
    pub j: M21Class,
    pub i: EpsilonVector,
    /// `deg k_h^*` for `h = 1, …, g-1` (entry `h-1`).
    pub k: Vec<Rational>,
}

fn require_g5(g: u32) -> Result<()> {
    if g < 5 {
        return Err(Error::Domain(format!("the ε-classes need g >= 5, got g = {g}")));
    }
    Ok(())
}

/// Needs `g >= 4`, so that `δ_{g-2}` and `δ_{g-1}` differ from `δ_0`, `δ_1`.
pub fn pullback_j(dc: &DivisorClass<Rational>) -> M21Class {
    let g = dc.delta.len();
    M21Class::new(dc.lambda.clone(), -dc.delta[g - 2].clone(), dc.delta[0].clone(), dc.delta[g - 1].clone())
}

pub fn pullback_i(dc: &DivisorClass<Rational>) -> EpsilonVector {
    let g = dc.delta.len() as i64;
    let (d1, dtop) = (&dc.delta[1], &dc.delta[g as usize - 1]);
    EpsilonVector(
        (2..=g - 2)
            .map(|i| {
                &dc.delta[i as usize] + d1 * epsilon_weight_delta1(g, i) + dtop * epsilon_weight_delta_top(g, i)
            })
            .collect(),
    )
}

/// `deg k_h^* D = (2h-1)ψ - δ_h + δ_{g-h}`, the two boundary terms
/// cancelling when `h = g-h`.
pub fn pullback_k(dc: &DivisorClass<Rational>, h: usize) -> Rational {
    let g = dc.delta.len();
    int(2 * h as i64 - 1) * &dc.psi - &dc.delta[h] + &dc.delta[g - h]
}

pub fn pullbacks(dc: &DivisorClass<Rational>) -> Result<Pullbacks> {
    let g = dc.genus();
    require_g5(g)?;
    Ok(Pullbacks {
        j: pullback_j(dc),
        i: pullback_i(dc),
        k: (1..g as usize).map(|h| pullback_k(dc, h)).collect(),
    })
}

/// The intersection matrix of `ε_2, …, ε_{g-2}` (columns) with the test
/// curves `B_1, …, B_{g-3}` (rows).
#[derive(Debug, Clone)]
pub struct EpsilonMatrix {
    pub g: u32,
    pub matrix: Matrix<Rational>,
    pub determinant: Rational,
}

impl EpsilonMatrix {
    pub fn nonsingular(&self) -> bool {
        !self.determinant.is_zero()
    }
}

pub fn epsilon_matrix(g: u32) -> Result<EpsilonMatrix> {
    require_g5(g)?;
    let n = (g - 3) as usize;
    let gi = i64::from(g);
    let matrix = Matrix::from_fn(n, n, |row, col| {
        let j = row as i64 + 1; // test curve B_j
        if j == 1 {
            return if col == 0 { int(gi - 1) } else { Rational::zero() };
        }
        if col == n - 1 {
            int(gi - 1 - j)
        } else if col as i64 == j - 2 {
            int(-1)
        } else if col as i64 == j - 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let determinant = matrix.determinant();
    Ok(EpsilonMatrix { g, matrix, determinant })
}

// ---------------------------------------------------------------------------
// Special-family values

/// Everything the reconstruction needs for one triple.
#[derive(Debug, Clone)]
pub struct LemmaData {
    pub params: GrdParams,
    /// `j^* η_* x` on the genus-2 side, for `a`, `b`, `c`.
    pub m21: [M21Class; 3],
    /// `deg k_h^* η_* x` for `h = 1, …, g-1`, as `[a, b, c]` triples.
    pub k_degrees: Vec<[Rational; 3]>,
}

pub fn lemma_data(p: &GrdParams) -> Result<LemmaData> {
    p.require_rho_zero()?;
    if p.g < 2 {
        return Err(Error::Param("special-family data needs g >= 2".into()));
    }
    let (g, r, d) = (i64::from(p.g), i64::from(p.r), i64::from(p.d));
    let n = Rational::from_integer(p.n()?);
    let xi = p.xi()?;
    let w = M21Class::weierstrass();
    // λ + δ_1 - 4ψ
    let v = M21Class::new(int(1), int(-4), Rational::zero(), int(1));
    let dn = int(d) * &n;
    let m21_b = v.scale(&(&dn / int(g - 1)));
    let m21_a = w.scale(&(int(2 * (d - 2 * g + 2)) * &dn / int(3 * (g - 1)))).add(&m21_b);
    let m21_c = w.scale(&(-(&n * &xi) / int(3 * (g - 1))));
    let k_degrees = (1..g)
        .map(|h| {
            [
                -(int(d * d) * &n),
                -(int(2 * (g - h) - 1) * &dn),
                -((int(r * h) + rat(r * (r + 1), 2)) * &n),
            ]
        })
        .collect();
    Ok(LemmaData { params: *p, m21: [m21_a, m21_b, m21_c], k_degrees })
}

/// Quotient-relation check: `j^* η_* b` minus its special-family value is
/// an exact multiple of `10λ - δ_0 - 2δ_1`.
pub fn quotient_relation_check(p: &GrdParams, which: Taut) -> Result<Report> {
    let data = lemma_data(p)?;
    let pushed = which.push(p)?;
    let jp = pullback_j(&pushed);
    let target = &data.m21[which as usize];
    let multiple = jp.relation_multiple(target);
    let rhs = multiple.as_ref().map_or_else(|| "none".to_string(), format_pq);
    Ok(Report::new(
        "quotient_relation",
        json!({ "g": p.g, "r": p.r, "d": p.d, "class": which.to_string() }),
        jp.to_string(),
        target.to_string(),
        multiple.is_some(),
    )
    .with_detail(format!("multiple of 10λ - δ0 - 2δ1: {rhs}")))
}

/// Solution of the reconstruction system for one class.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub params: GrdParams,
    pub which: Taut,
    pub solution: DivisorClass<Rational>,
    pub equations: usize,
    pub unknowns: usize,
    pub rank: usize,
    /// Equal, coefficient for coefficient, to the closed-form pushforward.
    pub matches_closed_form: bool,
}

impl Reconstruction {
    pub fn report(&self) -> Report {
        let closed = self.which.push(&self.params).map(|c| c.to_string()).unwrap_or_default();
        Report::new(
            "reconstruct",
            json!({ "g": self.params.g, "r": self.params.r, "d": self.params.d, "class": self.which.to_string() }),
            self.solution.to_string(),
            closed,
            self.matches_closed_form,
        )
        .with_detail(format!("{} equations, {} unknowns, rank {}", self.equations, self.unknowns, self.rank))
    }
}

/// Assembles the linear system in the unknowns `(λ, ψ, δ_0, …, δ_{g-1})`.
///
/// * `g-1` rows from `k_h`, `h = 1, …, g-1`;
/// * `g-3` rows asking the `ε`-coefficients of the `i`-pullback to vanish;
/// * 3 rows matching the `j`-pullback in the quotient coordinates of
///   [`M21Class::quotient_coords`].
pub fn reconstruction_system(p: &GrdParams, which: Taut) -> Result<(Matrix<Rational>, Vec<Rational>)> {
    p.require_rho_zero()?;
    require_g5(p.g)?;
    let data = lemma_data(p)?;
    let g = p.g as usize;
    let unknowns = g + 2;
    let (lam, psi) = (0, 1);
    let delta = |i: usize| 2 + i;
    let gi = g as i64;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs = Vec::new();
    let blank = || vec![Rational::zero(); unknowns];

    for h in 1..g {
        let mut row = blank();
        row[psi] += int(2 * h as i64 - 1);
        row[delta(h)] -= Rational::one();
        row[delta(g - h)] += Rational::one();
        rows.push(row);
        rhs.push(data.k_degrees[h - 1][which as usize].clone());
    }

    for i in 2..=g - 2 {
        let mut row = blank();
        row[delta(i)] += Rational::one();
        row[delta(1)] += epsilon_weight_delta1(gi, i as i64);
        row[delta(g - 1)] += epsilon_weight_delta_top(gi, i as i64);
        rows.push(row);
        rhs.push(Rational::zero());
    }

    // j^* sends (λ, δ_0, δ_{g-2}, δ_{g-1}) to (λ, δ_0, -ψ, δ_1)
    let target = data.m21[which as usize].quotient_coords();
    let mut row = blank();
    row[lam] = int(1);
    row[delta(0)] = int(10);
    rows.push(row);
    let mut row = blank();
    row[delta(g - 2)] = int(-1);
    rows.push(row);
    let mut row = blank();
    row[delta(g - 1)] = int(1);
    row[delta(0)] = int(-2);
    rows.push(row);
    rhs.extend(target);

    Ok((Matrix::from_rows(rows), rhs))
}

/// Recovers `η_* a`, `η_* b` or `η_* c` from the special-family data
/// alone and compares with the closed form.
pub fn reconstruct(p: &GrdParams, which: Taut) -> Result<Reconstruction> {
    let (m, rhs) = reconstruction_system(p, which)?;
    let (equations, unknowns) = (m.rows(), m.cols());
    match solve(&m, &rhs) {
        Solution::Unique(x) => {
            let solution = DivisorClass::from_coords(&x);
            let matches_closed_form = which.push(p)? == solution;
            Ok(Reconstruction {
                params: *p,
                which,
                solution,
                equations,
                unknowns,
                rank: unknowns,
                matches_closed_form,
            })
        }
        Solution::Underdetermined { rank, unknowns } => Err(Error::LinearSystem(format!(
            "reconstruction of {which} at {p} is singular: rank {rank} < {unknowns} unknowns ({equations} equations)"
        ))),
        Solution::Inconsistent { rank, augmented_rank } => Err(Error::LinearSystem(format!(
            "reconstruction of {which} at {p} is inconsistent: coefficient rank {rank}, augmented rank {augmented_rank} ({equations} equations, {unknowns} unknowns)"
        ))),
    }
}

/// Every `rho = 0` triple with `1 <= g <= max_g` and `d >= r`, ordered by
/// `(g, r, d)`.
pub fn rho_zero_triples(max_g: u32) -> Vec<GrdParams> {
    let mut out = Vec::new();
    for g in 1..=max_g {
        for r in 0..=g {
            // rho = 0 forces (r+1) | g and d = g + r - g/(r+1)
            if g % (r + 1) != 0 {
                continue;
            }
            let d = g + r - g / (r + 1);
            if d >= r {
                out.push(GrdParams { g, r, d });
            }
        }
    }
    out
}

//! Degeneracy-locus divisors on the space of linear series and the slopes
//! of their images.
//!
//! All three families live on the `rho = 0` locus parameterized by
//! `g = (r+1)(s+1)`, `d = r(s+2)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{binomial, format_pq, int, opposite_signs, rat, Rational};
use crate::tautpush::{push_combo, rho, DivisorClass, GrdParams, TautCombo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Family {
    /// Gieseker–Petri: failure of the Petri map to be injective.
    Gp,
    /// Series whose image lies on a hypersurface of degree `k`.
    Hypersurface { k: u32 },
    /// Failure of Green's property `(N_i)`.
    Syzygy { i: u32 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gp => "gp",
            Family::Hypersurface { .. } => "hypersurface",
            Family::Syzygy { .. } => "syzygy",
        }
    }

    /// `k` for hypersurfaces, `i` for syzygies.
    pub fn extra(&self) -> Option<u32> {
        match *self {
            Family::Gp => None,
            Family::Hypersurface { k } => Some(k),
            Family::Syzygy { i } => Some(i),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Family::Gp => 0,
            Family::Hypersurface { .. } => 1,
            Family::Syzygy { .. } => 2,
        }
    }
}

/// A family together with `(r, s)`; genus and degree follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub r: u32,
    pub s: u32,
}

impl FamilyParams {
    pub fn gp(r: u32, s: u32) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(Error::Param(format!("Gieseker-Petri family needs r, s >= 1, got r = {r}, s = {s}")));
        }
        Ok(FamilyParams { family: Family::Gp, r, s })
    }

    pub fn hypersurface(r: u32, s: u32, k: u32) -> Result<Self> {
        if r < 1 || k < 1 {
            return Err(Error::Param(format!("hypersurface family needs r, k >= 1, got r = {r}, k = {k}")));
        }
        let fp = FamilyParams { family: Family::Hypersurface { k }, r, s };
        hypersurface_balance(r, s, k)?;
        fp.require_genus()?;
        Ok(fp)
    }

    /// `r` is forced to `(i+2)s + 2(i+1)`.
    pub fn syzygy(i: u32, s: u32) -> Result<Self> {
        Ok(FamilyParams { family: Family::Syzygy { i }, r: syzygy_r(i, s), s })
    }

    pub fn g(&self) -> u32 {
        (self.r + 1) * (self.s + 1)
    }

    pub fn d(&self) -> u32 {
        self.r * (self.s + 2)
    }

    pub fn grd(&self) -> GrdParams {
        GrdParams { g: self.g(), r: self.r, d: self.d() }
    }

    fn require_genus(&self) -> Result<()> {
        if self.g() < 3 {
            return Err(Error::Param(format!("{} family at r = {}, s = {} has genus {} < 3", self.family.name(), self.r, self.s, self.g())));
        }
        Ok(())
    }

    pub fn combo(&self) -> Result<TautCombo<Rational>> {
        match self.family {
            Family::Gp => Ok(gp_combo(self.r, self.s)),
            Family::Hypersurface { k } => hypersurface_combo(self.r, self.s, k),
            Family::Syzygy { i } => Ok(syzygy_combo(i, self.s)),
        }
    }
}

impl PartialOrd for FamilyParams {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical report order: family, then `r`, `s`, then `k` or `i`.
impl Ord for FamilyParams {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.family.rank(), self.r, self.s, self.family.extra())
            .cmp(&(other.family.rank(), other.r, other.s, other.family.extra()))
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gp => write!(f, "gp(r={}, s={})", self.r, self.s),
            Family::Hypersurface { k } => write!(f, "hypersurface(r={}, s={}, k={k})", self.r, self.s),
            Family::Syzygy { i } => write!(f, "syzygy(i={i}, s={}; r={})", self.s, self.r),
        }
    }
}

pub fn syzygy_r(i: u32, s: u32) -> u32 {
    (i + 2) * s + 2 * (i + 1)
}

/// Class of the Petri degeneracy locus,
/// `(r+1)/2 · (-a + b) + (d+1-g) c - r λ`.
pub fn gp_combo(r: u32, s: u32) -> TautCombo<Rational> {
    let (r, s) = (i64::from(r), i64::from(s));
    let g = (r + 1) * (s + 1);
    let d = r * (s + 2);
    let half = rat(r + 1, 2);
    TautCombo::new(-half.clone(), half, int(d + 1 - g), int(-r))
}

/// `C(r+k, k) = kd - g + 1`; the error message carries both sides.
fn hypersurface_balance(r: u32, s: u32, k: u32) -> Result<()> {
    let (r, s, k) = (i64::from(r), i64::from(s), i64::from(k));
    let g = (r + 1) * (s + 1);
    let d = r * (s + 2);
    let lhs = binomial(r + k, k);
    let rhs = BigInt::from(k * d - g + 1);
    if lhs != rhs {
        return Err(Error::Param(format!(
            "hypersurface balance fails at r = {r}, s = {s}, k = {k}: C(r+k, k) = {lhs} but kd - g + 1 = {rhs}"
        )));
    }
    Ok(())
}

/// Class of the degree-`k` hypersurface locus,
/// `c_1(π_* L^k) - c_1(Sym^k V) = (k²/2) a - (k/2) b + λ - C(r+k, k-1) c`.
pub fn hypersurface_combo(r: u32, s: u32, k: u32) -> Result<TautCombo<Rational>> {
    hypersurface_balance(r, s, k)?;
    let (r, k) = (i64::from(r), i64::from(k));
    Ok(TautCombo::new(
        rat(k * k, 2),
        rat(-k, 2),
        -Rational::from_integer(binomial(r + k, k - 1)),
        int(1),
    ))
}

/// Class of the `(N_i)` syzygy locus with `r = (i+2)s + 2(i+1)`.
pub fn syzygy_combo(i: u32, s: u32) -> TautCombo<Rational> {
    let r = i64::from(syzygy_r(i, s));
    let (i, s) = (i64::from(i), i64::from(s));
    let g = (r + 1) * (s + 1);
    let d = r * (s + 2);
    let c = |n: i64, k: i64| Rational::from_integer(binomial(n, k));
    let half = rat(1, 2);
    let p_a = int(2) * c(r, i) - int(2) * c(r - 1, i - 1) + &half * c(r - 2, i - 2) - &half * c(r - 2, i - 1);
    let p_b = -c(r, i) + &half * c(r - 1, i - 1);
    let p_c = -int(r + 2) * c(r, i) + int(2 * d + 1 - g) * c(r - 1, i - 1) - int(d) * c(r - 2, i - 2);
    TautCombo::new(p_a, p_b, p_c, c(r, i))
}

/// `-(λ coefficient) / (δ_0 coefficient)`.
pub fn slope(dc: &DivisorClass<Rational>) -> Result<Rational> {
    let (l, d0) = (&dc.lambda, dc.delta0());
    if !opposite_signs(l, d0) {
        return Err(Error::SlopeUndefined { lambda: format_pq(l), delta0: format_pq(d0) });
    }
    Ok(-(l / d0))
}

/// Closed form for the Gieseker–Petri slope with `x = r+s+2`,
/// `y = (r+1)(s+1)`:
/// `6(2x + 7y² + 7xy + xy² + 12y + y³) / (y(4+y)(y+1+x))`.
pub fn gp_slope_closed(r: u32, s: u32) -> Rational {
    let x = i64::from(r) + i64::from(s) + 2;
    let y = (i64::from(r) + 1) * (i64::from(s) + 1);
    let num = 6 * (2 * x + 7 * y * y + 7 * x * y + x * y * y + 12 * y + y * y * y);
    let den = y * (4 + y) * (y + 1 + x);
    rat(num, den)
}

fn poly(coeffs: &[i64], t: i64) -> BigInt {
    // coeffs[j] multiplies t^j
    coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * t + c)
}

/// The degree-7 numerator polynomial `f(i, t)` of the syzygy slope.
pub fn syzygy_f(i: i64, t: i64) -> BigInt {
    let (i2, i3, i4) = (i * i, i * i * i, i * i * i * i);
    poly(
        &[
            2 + 2 * i,
            7 * i2 + 9 + 18 * i,
            17 * i2 + i3 + 50 * i + 41,
            2 * i2 + 2 * i3 - 6 * i - 4,
            -i2 - 14 * i - i4 - 24 - 2 * i3,
            -13 * i2 - 7 * i3 + 12 - i4,
            4 * i3 + i4 - 16 * i - 16,
            24 * i2 + i4 + 16 + 32 * i + 8 * i3,
        ],
        t,
    )
}

/// The degree-6 denominator polynomial `g(i, t)` of the syzygy slope.
pub fn syzygy_g(i: i64, t: i64) -> BigInt {
    let (i2, i3) = (i * i, i * i * i);
    poly(
        &[
            2 + 4 * i,
            7 * i + 11 + i2,
            5 * i + 1 + 4 * i2,
            -i3 + 5 * i,
            -2 - 11 * i - i3 - 7 * i2,
            -4 * i + i3 - 8 + 2 * i2,
            12 * i + i3 + 8 + 6 * i2,
        ],
        t,
    )
}

/// The closed form `6 f(i,t) / (t (i-2) g(i,t))`, `t = s+1`, taken
/// literally, sign included.
///
/// Note: against the pushforward pipeline this agrees only at `i = 0`.
/// For every other `i` the pipeline slope is this value times
/// `(i-2)/(i+2)`; see [`syzygy_slope_closed_shifted`].
pub fn syzygy_slope_closed(i: u32, s: u32) -> Result<Rational> {
    if i == 2 {
        return Err(Error::Pole("syzygy slope formula has a pole at i = 2 (factor i - 2)".into()));
    }
    let (i, t) = (i64::from(i), i64::from(s) + 1);
    let den = BigInt::from(t * (i - 2)) * syzygy_g(i, t);
    if den.is_zero() {
        return Err(Error::Pole(format!("g(i, t) vanishes at i = {i}, t = {t}")));
    }
    Ok(Rational::new(BigInt::from(6) * syzygy_f(i, t), den))
}

/// Same polynomials with the denominator `t (i+2) g(i,t)`. This variant
/// matches the pipeline for every `i` tested and is positive.
pub fn syzygy_slope_closed_shifted(i: u32, s: u32) -> Result<Rational> {
    let (i, t) = (i64::from(i), i64::from(s) + 1);
    let den = BigInt::from(t * (i + 2)) * syzygy_g(i, t);
    if den.is_zero() {
        return Err(Error::Pole(format!("g(i, t) vanishes at i = {i}, t = {t}")));
    }
    Ok(Rational::new(BigInt::from(6) * syzygy_f(i, t), den))
}

/// Expected-codimension-one condition for `e`-secant `k`-planes:
/// `(e-k-1)(r-k) = e+1` together with `rho(e, r-k-1, r) = -1`.
pub fn secant_plane_validate(r: i64, _s: i64, e: i64, k: i64) -> bool {
    (e - k - 1) * (r - k) == e + 1 && rho(e, r - k - 1, r) == -1
}

/// `6 + 12/(g+1)`.
pub fn slope_bound(g: u32) -> Rational {
    int(6) + rat(12, i64::from(g) + 1)
}

/// One row of a slope table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeReport {
    pub family: &'static str,
    pub r: u32,
    pub s: u32,
    pub extra: Option<u32>,
    pub g: u32,
    pub d: u32,
    #[serde(rename = "N", serialize_with = "ser_bigint")]
    pub n: BigInt,
    pub pushforward: DivisorClass<Rational>,
    #[serde(with = "crate::numeric::serde_rational")]
    pub slope: Rational,
    #[serde(with = "crate::numeric::serde_rational")]
    pub bound: Rational,
    pub below_bound: bool,
    #[serde(skip)]
    pub params: FamilyParams,
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl SlopeReport {
    pub const CSV_HEADER: [&'static str; 10] =
        ["family", "r", "s", "extra", "g", "d", "N", "slope", "bound", "below_bound"];

    /// Fields in [`SlopeReport::CSV_HEADER`] order. `extra` is empty for
    /// the Gieseker–Petri family.
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.family.to_string(),
            self.r.to_string(),
            self.s.to_string(),
            self.extra.map(|x| x.to_string()).unwrap_or_default(),
            self.g.to_string(),
            self.d.to_string(),
            self.n.to_string(),
            format_pq(&self.slope),
            format_pq(&self.bound),
            self.below_bound.to_string(),
        ]
    }
}

/// Pushes the family's class forward and reads off its slope.
pub fn slope_report(fp: &FamilyParams) -> Result<SlopeReport> {
    let grd = fp.grd();
    debug_assert_eq!(grd.rho(), 0);
    let combo = fp.combo()?;
    let pushforward = push_combo(&combo, &grd)?;
    let slope = slope(&pushforward)?;
    let bound = slope_bound(grd.g);
    let below_bound = slope < bound;
    Ok(SlopeReport {
        family: fp.family.name(),
        r: fp.r,
        s: fp.s,
        extra: fp.family.extra(),
        g: grd.g,
        d: grd.d,
        n: grd.n()?,
        pushforward,
        slope: slope.abs(),
        bound,
        below_bound,
        params: *fp,
    })
}

/// The family instances used by the structural checks: Gieseker–Petri for
/// `1 <= r, s <= 4`, syzygies for `i in {0, 1, 3}`, `s <= 3`, and every
/// balanced hypersurface case with `r <= 12`, `s <= 6`, `k <= 4`.
pub fn standard_instances() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for r in 1..=4 {
        for s in 1..=4 {
            out.extend(FamilyParams::gp(r, s));
        }
    }
    for i in [0, 1, 3] {
        for s in 0..=3 {
            out.extend(FamilyParams::syzygy(i, s));
        }
    }
    for r in 1..=12 {
        for s in 0..=6 {
            for k in 1..=4 {
                out.extend(FamilyParams::hypersurface(r, s, k));
            }
        }
    }
    out.sort();
    out
}

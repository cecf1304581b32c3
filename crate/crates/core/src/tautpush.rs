//! Pushforwards of the tautological classes `a`, `b`, `c` from the space
//! of linear series `g^r_d` down to the pointed moduli space, at
//! Brill–Noether number zero.
//!
//! Every formula is kept in the form `factor · η_* x = bracket`, with
//! integer-polynomial brackets, and `η_* x` is obtained by dividing
//! through exactly. See [`bracket_a`], [`bracket_b`], [`bracket_c`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Num, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{factorial, format_pq, int, superfactorial, Rational};

/// Brill–Noether number `g - (r+1)(g-d+r)`.
pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// A genus / dimension / degree triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrdParams {
    pub g: u32,
    pub r: u32,
    pub d: u32,
}

impl GrdParams {
    pub fn new(g: u32, r: u32, d: u32) -> Result<Self> {
        if g < 1 {
            return Err(Error::Param(format!("genus must be at least 1, got {g}")));
        }
        Ok(GrdParams { g, r, d })
    }

    /// Like [`GrdParams::new`] but also insists on `rho = 0`.
    pub fn brill_noether_zero(g: u32, r: u32, d: u32) -> Result<Self> {
        let p = Self::new(g, r, d)?;
        p.require_rho_zero()?;
        Ok(p)
    }

    pub fn rho(&self) -> i64 {
        rho(self.g.into(), self.r.into(), self.d.into())
    }

    /// `g - d + r`, the `h^1` of a series with these numbers.
    pub fn excess(&self) -> i64 {
        i64::from(self.g) - i64::from(self.d) + i64::from(self.r)
    }

    pub fn require_rho_zero(&self) -> Result<()> {
        if self.rho() != 0 {
            return Err(Error::Param(format!(
                "rho({}, {}, {}) = {} but rho = 0 is required",
                self.g,
                self.r,
                self.d,
                self.rho()
            )));
        }
        Ok(())
    }

    fn require_genus(&self, min: u32, what: &str, vanishing: &str) -> Result<()> {
        if self.g < min {
            return Err(Error::Param(format!(
                "{what} needs g >= {min} (the factor {vanishing} vanishes at g = {})",
                self.g
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> Result<BigInt> {
        castelnuovo_n(self.g, self.r, self.d)
    }

    pub fn xi(&self) -> Result<Rational> {
        xi(self.g, self.r, self.d)
    }
}

impl fmt::Display for GrdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.g, self.r, self.d)
    }
}

/// Number of `g^r_d`s on a general curve of genus `g` when `rho = 0`:
/// `1!·2!⋯r!·g! / ((g-d+r)!(g-d+r+1)!⋯(g-d+2r)!)`.
pub fn castelnuovo_n(g: u32, r: u32, d: u32) -> Result<BigInt> {
    let p = GrdParams::brill_noether_zero(g, r, d)?;
    let e = p.excess();
    if e < 0 {
        return Err(Error::Param(format!("g - d + r = {e} is negative")));
    }
    let num = superfactorial(r.into())? * factorial(g.into())?;
    let mut den = BigInt::from(1);
    for j in e..=e + i64::from(r) {
        den *= factorial(j)?;
    }
    debug_assert!((&num % &den).is_zero(), "non-integral N at {p}");
    Ok(num / den)
}

/// `3(g-1) + (r-1)(g+r+1)(3g-2d+r-3)/(g-d+2r+1)`.
pub fn xi(g: u32, r: u32, d: u32) -> Result<Rational> {
    let (g, r, d) = (i64::from(g), i64::from(r), i64::from(d));
    let den = g - d + 2 * r + 1;
    if den == 0 {
        return Err(Error::Param(format!("xi: g - d + 2r + 1 = 0 at ({g},{r},{d})")));
    }
    let frac = Rational::new(BigInt::from((r - 1) * (g + r + 1) * (3 * g - 2 * d + r - 3)), BigInt::from(den));
    Ok(int(3 * (g - 1)) + frac)
}

/// A divisor class `λ·lambda + ψ·psi + Σ δ_i·delta[i]` on the pointed
/// moduli space of genus `g`, with `delta.len() == g`.
///
/// `delta[0]` is the irreducible nodal boundary; `delta[i]`, `i >= 1`, is
/// the boundary where the marked point sits on the genus `i` side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass<T> {
    pub lambda: T,
    pub psi: T,
    pub delta: Vec<T>,
}

impl<T: Clone + Num> DivisorClass<T> {
    pub fn zero(g: u32) -> Self {
        DivisorClass { lambda: T::zero(), psi: T::zero(), delta: vec![T::zero(); g as usize] }
    }

    pub fn lambda(g: u32) -> Self {
        DivisorClass { lambda: T::one(), ..Self::zero(g) }
    }

    pub fn psi(g: u32) -> Self {
        DivisorClass { psi: T::one(), ..Self::zero(g) }
    }

    pub fn delta(g: u32, i: usize) -> Self {
        let mut out = Self::zero(g);
        out.delta[i] = T::one();
        out
    }

    pub fn genus(&self) -> u32 {
        self.delta.len() as u32
    }

    pub fn delta0(&self) -> &T {
        &self.delta[0]
    }

    pub fn scale(&self, s: &T) -> Self {
        DivisorClass {
            lambda: self.lambda.clone() * s.clone(),
            psi: self.psi.clone() * s.clone(),
            delta: self.delta.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// Coordinates in the order `(λ, ψ, δ_0, …, δ_{g-1})`.
    pub fn to_coords(&self) -> Vec<T> {
        let mut v = vec![self.lambda.clone(), self.psi.clone()];
        v.extend(self.delta.iter().cloned());
        v
    }

    pub fn from_coords(v: &[T]) -> Self {
        assert!(v.len() >= 3, "need lambda, psi and delta_0");
        DivisorClass { lambda: v[0].clone(), psi: v[1].clone(), delta: v[2..].to_vec() }
    }

    /// Indices `1 <= i <= g-1` with `δ_i ≠ δ_{g-i}`.
    pub fn reflection_defects(&self) -> Vec<usize> {
        let g = self.delta.len();
        (1..g).filter(|&i| self.delta[i] != self.delta[g - i]).collect()
    }
}

impl<T: Clone + Num> Add for DivisorClass<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.delta.len(), rhs.delta.len(), "adding divisor classes of different genus");
        DivisorClass {
            lambda: self.lambda + rhs.lambda,
            psi: self.psi + rhs.psi,
            delta: self.delta.into_iter().zip(rhs.delta).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Clone + Num> Sub for DivisorClass<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(&(T::zero() - T::one()))
    }
}

impl<T: Clone + Num> Neg for DivisorClass<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&(T::zero() - T::one()))
    }
}

impl<T: Clone + Num> Mul<&T> for DivisorClass<T> {
    type Output = Self;

    fn mul(self, s: &T) -> Self {
        self.scale(s)
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Display for DivisorClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![format!("({})λ", self.lambda), format!("({})ψ", self.psi)];
        for (i, c) in self.delta.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})δ{i}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for DivisorClass<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DivisorClass", 3)?;
        st.serialize_field("lambda", &format_pq(&self.lambda))?;
        st.serialize_field("psi", &format_pq(&self.psi))?;
        let delta: Vec<String> = self.delta.iter().map(format_pq).collect();
        st.serialize_field("delta", &delta)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for DivisorClass<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(with = "crate::numeric::serde_rational")]
            lambda: Rational,
            #[serde(with = "crate::numeric::serde_rational")]
            psi: Rational,
            #[serde(with = "crate::numeric::serde_rational::vec")]
            delta: Vec<Rational>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.delta.is_empty() {
            return Err(serde::de::Error::custom("delta must have g >= 1 entries"));
        }
        Ok(DivisorClass { lambda: raw.lambda, psi: raw.psi, delta: raw.delta })
    }
}

/// Coefficients of `p_a·a + p_b·b + p_c·c + p_λ·η^*λ` on the space of
/// linear series.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TautCombo<T> {
    pub p_a: T,
    pub p_b: T,
    pub p_c: T,
    pub p_lambda: T,
}

impl<T> TautCombo<T> {
    pub fn new(p_a: T, p_b: T, p_c: T, p_lambda: T) -> Self {
        TautCombo { p_a, p_b, p_c, p_lambda }
    }
}

impl TautCombo<Rational> {
    pub fn from_ints(p_a: i64, p_b: i64, p_c: i64, p_lambda: i64) -> Self {
        TautCombo::new(int(p_a), int(p_b), int(p_c), int(p_lambda))
    }
}

impl<T: fmt::Display> fmt::Display for TautCombo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})a + ({})b + ({})c + ({})λ", self.p_a, self.p_b, self.p_c, self.p_lambda)
    }
}

/// One pushforward formula as displayed: `factor · η_* x = bracket`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Displayed {
    pub factor: Rational,
    pub bracket: DivisorClass<Rational>,
}

impl Displayed {
    pub fn pushforward(&self) -> DivisorClass<Rational> {
        self.bracket.scale(&(Rational::from_integer(1.into()) / self.factor.clone()))
    }
}

fn ni(x: i64) -> Rational {
    int(x)
}

/// `6(g-1)(g-2)/(dN) · η_* a = …`
pub fn bracket_a(p: &GrdParams) -> Result<Displayed> {
    p.require_rho_zero()?;
    p.require_genus(3, "the pushforward of a", "(g-1)(g-2)")?;
    if p.d == 0 {
        return Err(Error::Param("the pushforward of a needs d > 0 (the factor 6(g-1)(g-2)/(dN) is undefined)".into()));
    }
    let (g, d) = (i64::from(p.g), i64::from(p.d));
    let n = Rational::from_integer(p.n()?);
    let factor = ni(6 * (g - 1) * (g - 2)) / (ni(d) * n);
    let mut bracket = DivisorClass::zero(p.g);
    bracket.lambda = ni(6 * (g * d - 2 * g * g + 8 * d - 8 * g + 4));
    bracket.delta[0] = ni(2 * g * g - g * d + 3 * g - 4 * d - 2);
    for i in 1..g {
        bracket.delta[i as usize] = ni(6 * (g - i) * (g * d + 2 * i * g - 2 * i * d - 2 * d));
    }
    bracket.psi = ni(-6 * d * (g - 2));
    Ok(Displayed { factor, bracket })
}

/// `2(g-1)/(dN) · η_* b = 12λ - δ_0 + 4Σ(g-i)(g-i-1)δ_i - 2(g-1)ψ`
pub fn bracket_b(p: &GrdParams) -> Result<Displayed> {
    p.require_rho_zero()?;
    p.require_genus(2, "the pushforward of b", "(g-1)")?;
    if p.d == 0 {
        return Err(Error::Param("the pushforward of b needs d > 0 (the factor 2(g-1)/(dN) is undefined)".into()));
    }
    let (g, d) = (i64::from(p.g), i64::from(p.d));
    let n = Rational::from_integer(p.n()?);
    let factor = ni(2 * (g - 1)) / (ni(d) * n);
    let mut bracket = DivisorClass::zero(p.g);
    bracket.lambda = ni(12);
    bracket.delta[0] = ni(-1);
    for i in 1..g {
        bracket.delta[i as usize] = ni(4 * (g - i) * (g - i - 1));
    }
    bracket.psi = ni(-2 * (g - 1));
    Ok(Displayed { factor, bracket })
}

/// `2(g-1)(g-2)/N · η_* c = …`, in terms of `ξ`.
pub fn bracket_c(p: &GrdParams) -> Result<Displayed> {
    p.require_rho_zero()?;
    p.require_genus(3, "the pushforward of c", "(g-1)(g-2)")?;
    let (g, r, d) = (i64::from(p.g), i64::from(p.r), i64::from(p.d));
    let n = Rational::from_integer(p.n()?);
    let xi = p.xi()?;
    let rr = ni(r * (r + 2));
    let factor = ni(2 * (g - 1) * (g - 2)) / n;
    let mut bracket = DivisorClass::zero(p.g);
    bracket.lambda = -ni(g + 3) * &xi + ni(5) * &rr;
    bracket.psi = ni(-d * (r + 1) * (g - 2));
    bracket.delta[0] = (ni(g + 1) * &xi - ni(3) * &rr) / ni(6);
    for i in 1..g {
        bracket.delta[i as usize] = ni(g - i) * (ni(i) * &xi + ni(g - i - 2) * &rr);
    }
    Ok(Displayed { factor, bracket })
}

pub fn push_a(p: &GrdParams) -> Result<DivisorClass<Rational>> {
    Ok(bracket_a(p)?.pushforward())
}

pub fn push_b(p: &GrdParams) -> Result<DivisorClass<Rational>> {
    Ok(bracket_b(p)?.pushforward())
}

pub fn push_c(p: &GrdParams) -> Result<DivisorClass<Rational>> {
    Ok(bracket_c(p)?.pushforward())
}

/// Pushforward of a combination, using `η_* η^* λ = N λ`. Terms with a
/// zero coefficient are skipped, so e.g. a pure `λ` combination works in
/// any genus.
pub fn push_combo(t: &TautCombo<Rational>, p: &GrdParams) -> Result<DivisorClass<Rational>> {
    p.require_rho_zero()?;
    let mut out = DivisorClass::zero(p.g);
    if !t.p_a.is_zero() {
        out = out + push_a(p)?.scale(&t.p_a);
    }
    if !t.p_b.is_zero() {
        out = out + push_b(p)?.scale(&t.p_b);
    }
    if !t.p_c.is_zero() {
        out = out + push_c(p)?.scale(&t.p_c);
    }
    if !t.p_lambda.is_zero() {
        out.lambda += Rational::from_integer(p.n()?) * &t.p_lambda;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn params(g: u32, r: u32, d: u32) -> GrdParams {
        GrdParams::brill_noether_zero(g, r, d).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(4, 1, 3), 0);
        assert_eq!(rho(10, 4, 12), 0);
        assert_eq!(rho(2, 1, 2), 0);
        assert_eq!(rho(3, 1, 2), -1);
    }

    #[test]
    fn castelnuovo_values() {
        assert_eq!(castelnuovo_n(4, 1, 3).unwrap(), BigInt::from(2));
        assert_eq!(castelnuovo_n(6, 2, 6).unwrap(), BigInt::from(5));
        assert_eq!(castelnuovo_n(10, 4, 12).unwrap(), BigInt::from(42));
        assert_eq!(castelnuovo_n(21, 6, 24).unwrap(), BigInt::from(1_385_670));
        assert!(matches!(castelnuovo_n(3, 1, 2), Err(Error::Param(_))));
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(10, 4, 12).unwrap(), int(72));
        assert_eq!(xi(21, 6, 24).unwrap(), int(312));
        assert_eq!(xi(4, 1, 3).unwrap(), int(9));
    }

    #[test]
    fn push_examples() {
        let p = params(10, 4, 12);
        assert_eq!(push_b(&p).unwrap().psi, int(-504));

        let p = params(21, 6, 24);
        let n = Rational::from_integer(p.n().unwrap());
        assert_eq!(push_a(&p).unwrap().lambda, rat(-420, 19) * &n);
        assert_eq!(push_c(&p).unwrap().lambda, rat(-906, 95) * &n);
    }

    #[test]
    fn push_b_bracket_is_integral() {
        for (g, r, d) in [(4, 1, 3), (6, 2, 6), (10, 4, 12), (21, 6, 24)] {
            let p = params(g, r, d);
            let scale = Rational::from_integer(BigInt::from(d) * p.n().unwrap()) / int(2 * (i64::from(g) - 1));
            let bracket = push_b(&p).unwrap().scale(&(int(1) / scale));
            assert!(bracket.to_coords().iter().all(|c| c.is_integer()));
            assert_eq!(bracket, bracket_b(&p).unwrap().bracket);
        }
    }

    #[test]
    fn combo_examples() {
        let p = params(10, 4, 12);
        let n = Rational::from_integer(p.n().unwrap());
        let lam = push_combo(&TautCombo::from_ints(0, 0, 0, 1), &p).unwrap();
        assert_eq!(lam, DivisorClass::lambda(10).scale(&n));

        let e = push_combo(&TautCombo::from_ints(2, -1, -6, 1), &p).unwrap();
        assert_eq!(e.lambda, int(7) * &n);
        assert_eq!(e.delta[0], -n.clone());

        let p = params(21, 6, 24);
        let n = Rational::from_integer(p.n().unwrap());
        let e = push_combo(&TautCombo::from_ints(2, -1, -8, 1), &p).unwrap();
        assert_eq!(e.lambda, rat(2459, 95) * &n);
        assert_eq!(e.delta[0], rat(-377, 95) * &n);
        assert!(e.psi.is_zero());
    }

    #[test]
    fn domain_guards() {
        assert!(push_a(&GrdParams::new(3, 1, 2).unwrap()).is_err());
        let p = params(2, 1, 2);
        assert!(push_b(&p).is_ok());
        let err = push_a(&p).unwrap_err().to_string();
        assert!(err.contains("(g-1)(g-2)"), "{err}");
        assert!(push_c(&p).is_err());
        assert!(push_combo(&TautCombo::from_ints(0, 1, 0, 1), &p).is_ok());
    }

    #[test]
    fn json_shape() {
        let p = params(10, 4, 12);
        let v = serde_json::to_value(push_b(&p).unwrap()).unwrap();
        assert_eq!(v["psi"], "-504/1");
        assert_eq!(v["delta"].as_array().unwrap().len(), 10);
        let back: DivisorClass<Rational> = serde_json::from_value(v).unwrap();
        assert_eq!(back, push_b(&p).unwrap());
    }
}

//! Schubert calculus on the Grassmannian `G(r, P^d)` of projective
//! `r`-planes.
//!
//! An index is stored as the ascending sequence `b_0 <= b_1 <= ... <= b_r`
//! with `b_r <= d - r`; its codimension is `sum b_i`. Rendering goes the
//! other way round, `σ{b_r,…,b_0}`, which is how these cycles are usually
//! written. The special cycle `ζ = σ{1,…,1,0}` has index `(0, 1, …, 1)`.
//!
//! Products are only ever taken against the one-column classes
//! `σ(0,…,0,1,…,1)` (k ones), which multiply by adding a vertical strip:
//! raise `k` distinct entries by one, keeping the sequence monotone and
//! inside the box. That rule is multiplicity-free.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factorial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannianSpec {
    r: u32,
    d: u32,
}

impl GrassmannianSpec {
    pub fn new(r: u32, d: u32) -> Result<Self> {
        if r > d {
            return Err(Error::Domain(format!("G({r}, P^{d}) needs r <= d")));
        }
        Ok(GrassmannianSpec { r, d })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Largest allowed index entry, `d - r`.
    pub fn width(&self) -> u32 {
        self.d - self.r
    }

    pub fn dim(&self) -> u32 {
        (self.r + 1) * self.width()
    }

    /// Index of the point class, `(d-r, …, d-r)`.
    pub fn point(&self) -> SchubertIndex {
        SchubertIndex(vec![self.width(); self.len()])
    }

    /// Index of the fundamental class.
    pub fn fundamental(&self) -> SchubertIndex {
        SchubertIndex(vec![0; self.len()])
    }

    /// `(0, …, 0, 1, …, 1)` with `k` ones, the one-column special index.
    /// `None` when it does not fit in the box.
    pub fn column(&self, k: u32) -> Option<SchubertIndex> {
        let n = self.len();
        if k as usize > n || (k > 0 && self.width() == 0) {
            return None;
        }
        Some(SchubertIndex((0..n).map(|i| u32::from(i >= n - k as usize)).collect()))
    }

    /// `ζ`, codimension `r`.
    pub fn zeta(&self) -> Option<SchubertIndex> {
        self.column(self.r)
    }

    fn len(&self) -> usize {
        self.r as usize + 1
    }

    /// Every valid index, in lexicographic order of the ascending form.
    pub fn indices(&self) -> Vec<SchubertIndex> {
        fn rec(prefix: &mut Vec<u32>, len: usize, lo: u32, hi: u32, out: &mut Vec<SchubertIndex>) {
            if prefix.len() == len {
                out.push(SchubertIndex(prefix.clone()));
                return;
            }
            for v in lo..=hi {
                prefix.push(v);
                rec(prefix, len, v, hi, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(self.len()), self.len(), 0, self.width(), &mut out);
        out
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},P^{}", self.r, self.d)
    }
}

/// Validated ascending Schubert index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertIndex(Vec<u32>);

impl SchubertIndex {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn codim(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The shifted sequence `a_i = b_i + i`.
    pub fn shifted(&self) -> Vec<u32> {
        self.0.iter().enumerate().map(|(i, &b)| b + i as u32).collect()
    }

    /// All indices obtained by raising `k` distinct entries by one while
    /// staying monotone and bounded by `width`.
    fn vertical_strips(&self, k: usize, width: u32) -> Vec<SchubertIndex> {
        fn rec(
            b: &[u32],
            pos: usize,
            left: usize,
            width: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<SchubertIndex>,
        ) {
            let remaining = b.len() - pos;
            if left > remaining {
                return;
            }
            if pos == b.len() {
                out.push(SchubertIndex(cur.clone()));
                return;
            }
            let prev = cur.last().copied().unwrap_or(0);
            // leave b[pos] alone
            if left < remaining && b[pos] >= prev {
                cur.push(b[pos]);
                rec(b, pos + 1, left, width, cur, out);
                cur.pop();
            }
            // raise b[pos]
            if left > 0 && b[pos] < width {
                cur.push(b[pos] + 1);
                rec(b, pos + 1, left - 1, width, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, k, width, &mut Vec::with_capacity(self.0.len()), &mut out);
        out
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let desc: Vec<String> = self.0.iter().rev().map(u32::to_string).collect();
        write!(f, "σ{{{}}}", desc.join(","))
    }
}

impl fmt::Debug for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Validates `b` (ascending) as an index on `spec`.
pub fn make_index(spec: GrassmannianSpec, b: &[i64]) -> Result<SchubertIndex> {
    let fail = |reason: String| Err(Error::InvalidIndex { index: b.to_vec(), reason });
    if b.len() != spec.len() {
        return fail(format!("wrong length: expected {} entries, got {}", spec.len(), b.len()));
    }
    if let Some(&neg) = b.iter().find(|&&x| x < 0) {
        return fail(format!("out of bounds: entry {neg} is negative"));
    }
    if let Some(i) = b.windows(2).position(|w| w[0] > w[1]) {
        return fail(format!("non-monotone: b_{} = {} > b_{} = {}", i, b[i], i + 1, b[i + 1]));
    }
    let top = *b.last().expect("length checked");
    if top > i64::from(spec.width()) {
        return fail(format!("out of bounds: b_r = {top} exceeds d - r = {}", spec.width()));
    }
    Ok(SchubertIndex(b.iter().map(|&x| x as u32).collect()))
}

/// Homogeneous class on `G(r, P^d)`: a finite combination of Schubert
/// cycles of one codimension. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass<T> {
    spec: GrassmannianSpec,
    codim: u32,
    terms: BTreeMap<SchubertIndex, T>,
}

impl<T: Clone + Num> ChowClass<T> {
    pub fn zero(spec: GrassmannianSpec, codim: u32) -> Self {
        ChowClass { spec, codim, terms: BTreeMap::new() }
    }

    pub fn schubert(spec: GrassmannianSpec, index: SchubertIndex) -> Self {
        let codim = index.codim();
        ChowClass { spec, codim, terms: BTreeMap::from([(index, T::one())]) }
    }

    /// The cycle with the given ascending index, or the zero class of that
    /// codimension when the index does not fit in the box. Length and
    /// monotonicity are still enforced.
    pub fn schubert_or_zero(spec: GrassmannianSpec, b: &[i64]) -> Result<Self> {
        match make_index(spec, b) {
            Ok(idx) => Ok(Self::schubert(spec, idx)),
            Err(Error::InvalidIndex { reason, .. }) if reason.starts_with("out of bounds") && b.iter().all(|&x| x >= 0) => {
                Ok(Self::zero(spec, b.iter().sum::<i64>() as u32))
            }
            Err(e) => Err(e),
        }
    }

    pub fn one(spec: GrassmannianSpec) -> Self {
        Self::schubert(spec, spec.fundamental())
    }

    pub fn spec(&self) -> GrassmannianSpec {
        self.spec
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchubertIndex, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: &SchubertIndex) -> T {
        self.terms.get(index).cloned().unwrap_or_else(T::zero)
    }

    fn accumulate(&mut self, index: SchubertIndex, c: T) {
        let slot = self.terms.entry(index).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        // drop cancelled entries lazily in `prune`
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        if self.codim != other.codim {
            return Err(Error::CodimMismatch { expected: self.codim, found: other.codim });
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.accumulate(idx.clone(), c.clone());
        }
        Ok(out.prune())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * s.clone();
        }
        out.prune()
    }

    /// Product with the one-column class carrying `k` ones, `1 <= k <= r+1`.
    pub fn pieri_ek(&self, k: u32) -> Result<Self> {
        if k == 0 || k > self.spec.r + 1 {
            return Err(Error::Domain(format!(
                "pieri_ek: k = {k} outside 1..={} on G({})",
                self.spec.r + 1,
                self.spec
            )));
        }
        Ok(self.strip_product(k))
    }

    fn strip_product(&self, k: u32) -> Self {
        let width = self.spec.width();
        let mut out = Self::zero(self.spec, self.codim + k);
        for (idx, c) in &self.terms {
            for next in idx.vertical_strips(k as usize, width) {
                out.accumulate(next, c.clone());
            }
        }
        out.prune()
    }

    /// Product with `ζ`. On `G(0, P^d)` the class `ζ` is the fundamental
    /// class and this is the identity.
    pub fn times_zeta(&self) -> Self {
        if self.spec.r == 0 {
            return self.clone();
        }
        self.strip_product(self.spec.r)
    }

    /// Degree of a top-codimensional class: its coefficient on the point.
    pub fn integral(&self) -> Result<T> {
        if self.codim != self.spec.dim() {
            return Err(Error::CodimMismatch { expected: self.spec.dim(), found: self.codim });
        }
        Ok(self.coefficient(&self.spec.point()))
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Display for ChowClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(idx, c)| format!("{c}·{idx}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Debug for ChowClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[G({}) codim {}] {}", self.spec, self.codim, self)
    }
}

fn check_balance(spec: GrassmannianSpec, b: &SchubertIndex, k: u32) -> Result<()> {
    if b.0.len() != spec.len() || b.0.last().is_some_and(|&t| t > spec.width()) {
        return Err(Error::InvalidIndex {
            index: b.0.iter().map(|&x| i64::from(x)).collect(),
            reason: format!("not an index on G({spec})"),
        });
    }
    let lhs = u64::from(spec.r) * u64::from(k) + u64::from(b.codim());
    let dim = u64::from(spec.dim());
    if lhs != dim {
        return Err(Error::Balance { lhs, dim });
    }
    Ok(())
}

/// `∫ ζ^k σ_b` by the closed form
/// `k! / ∏ (k - d + r + a_i)! · ∏_{i<j} (a_j - a_i)` with `a_i = b_i + i`.
/// A negative factorial argument makes the whole integral vanish.
pub fn zeta_power_integral(spec: GrassmannianSpec, b: &SchubertIndex, k: u32) -> Result<Rational> {
    check_balance(spec, b, k)?;
    let a = b.shifted();
    let offset = i64::from(k) - i64::from(spec.d) + i64::from(spec.r);
    let mut denom = BigInt::one();
    for &ai in &a {
        let m = offset + i64::from(ai);
        if m < 0 {
            return Ok(Rational::zero());
        }
        denom *= factorial(m)?;
    }
    let mut vandermonde = BigInt::one();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            vandermonde *= i64::from(a[j]) - i64::from(a[i]);
        }
    }
    Ok(Rational::new(factorial(i64::from(k))? * vandermonde, denom))
}

/// `∫ ζ^k σ_b` by multiplying `σ_b` with `ζ` `k` times and reading off the
/// point coefficient.
pub fn brute_zeta_integral(spec: GrassmannianSpec, b: &SchubertIndex, k: u32) -> Result<Rational> {
    check_balance(spec, b, k)?;
    let mut class: ChowClass<Rational> = ChowClass::schubert(spec, b.clone());
    for _ in 0..k {
        class = class.times_zeta();
    }
    class.integral()
}

/// Every balanced `∫ ζ^k σ_b` on `spec`, computed by dynamic programming
/// over the strip rule from the point class downward. Equivalent to
/// calling [`brute_zeta_integral`] on each index, but each index is
/// expanded once.
///
/// For `r = 0` the exponent is unconstrained and the table records the
/// value for every `k`, namely 1 on the point class.
pub fn zeta_integral_table(spec: GrassmannianSpec) -> BTreeMap<SchubertIndex, (u32, BigInt)> {
    let dim = spec.dim();
    let r = spec.r;
    let mut by_codim: Vec<Vec<SchubertIndex>> = vec![Vec::new(); dim as usize + 1];
    for idx in spec.indices() {
        by_codim[idx.codim() as usize].push(idx);
    }
    let mut table: BTreeMap<SchubertIndex, (u32, BigInt)> = BTreeMap::new();
    if r == 0 {
        table.insert(spec.point(), (0, BigInt::one()));
        return table;
    }
    for c in (0..=dim).rev() {
        if !(dim - c).is_multiple_of(r) {
            continue;
        }
        let k = (dim - c) / r;
        for idx in &by_codim[c as usize] {
            let value = if c == dim {
                BigInt::one()
            } else {
                idx.vertical_strips(r as usize, spec.width())
                    .iter()
                    .map(|next| table.get(next).map_or_else(BigInt::zero, |(_, v)| v.clone()))
                    .sum()
            };
            table.insert(idx.clone(), (k, value));
        }
    }
    table
}

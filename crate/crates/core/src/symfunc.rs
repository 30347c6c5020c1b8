//! Exact polynomial arithmetic in `t` and in `x_1..x_r`, and the graded
//! generating functions attached to the partition statistics.
//!
//! Coefficients over `t` are arbitrary-precision integers so that the
//! verification subtractions are exact.  Polynomials in `x` are stored as
//! maps from dense exponent vectors to `t`-polynomials; Schur polynomials
//! come from tableau enumeration and the change into the Schur basis peels
//! off leading monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::crystal::crystal_graph;
use crate::error::{Error, Result};
use crate::omp::{enumerate_partitions, DescentData, Letter};
use crate::tableaux::{enumerate_ssyt, enumerate_syt, shape_from_descents, syt_des_maj, Shape};

// ---------------------------------------------------------------------------
// polynomials in t
// ---------------------------------------------------------------------------

/// A polynomial in `t` with integer coefficients (`coeffs[d]` is the
/// coefficient of `t^d`; no trailing zeros are stored).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TPolynomial {
    coeffs: Vec<BigInt>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn t() -> Self {
        Self::term(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0)
    }

    /// The single term `c * t^degree`.
    pub fn term(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from coefficients listed by ascending degree;
    /// trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn divide_exact(&self, den: &TPolynomial) -> Option<TPolynomial> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree().unwrap();
        let dd = den.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead_den = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        for d in (0..=nd - dd).rev() {
            let lead = rem[d + dd].clone();
            if lead.is_zero() {
                continue;
            }
            if (&lead % lead_den) != BigInt::zero() {
                return None;
            }
            let quot = &lead / lead_den;
            for (j, c) in den.coeffs.iter().enumerate() {
                rem[d + j] -= &quot * c;
            }
            q[d] = quot;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;

    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        TPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;

    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            coeffs[d] -= c;
        }
        TPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;

    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            for (e, b) in rhs.coeffs.iter().enumerate() {
                coeffs[d + e] += c * b;
            }
        }
        TPolynomial::from_coeffs(coeffs)
    }
}

impl AddAssign<&TPolynomial> for TPolynomial {
    fn add_assign(&mut self, rhs: &TPolynomial) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{mag}*t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `1 + t + … + t^{p-1}`; zero when `p = 0`.
pub fn t_integer(p: usize) -> TPolynomial {
    TPolynomial::from_coeffs(vec![BigInt::one(); p])
}

/// Product of `t_integer(j)` for `j = 1..=p`; one when `p = 0`.
pub fn t_factorial(p: usize) -> TPolynomial {
    let mut acc = TPolynomial::one();
    for j in 1..=p {
        acc = &acc * &t_integer(j);
    }
    acc
}

/// The `t`-binomial coefficient: zero when `p > m`, otherwise the exact
/// quotient of factorials.
pub fn gaussian_binomial(m: usize, p: usize) -> TPolynomial {
    if p > m {
        return TPolynomial::zero();
    }
    let den = &t_factorial(p) * &t_factorial(m - p);
    t_factorial(m)
        .divide_exact(&den)
        .expect("factorial quotients divide exactly")
}

// ---------------------------------------------------------------------------
// polynomials in x with t coefficients
// ---------------------------------------------------------------------------

/// A polynomial in `x_1..x_r` with [`TPolynomial`] coefficients, keyed by
/// dense exponent vectors of length `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPolynomial {
    r: Letter,
    terms: BTreeMap<Vec<usize>, TPolynomial>,
}

impl SymPolynomial {
    pub fn zero(r: Letter) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn monomial(r: Letter, expo: Vec<usize>, coeff: TPolynomial) -> Self {
        let mut p = Self::zero(r);
        p.add_term(expo, &coeff);
        p
    }

    pub fn r(&self) -> Letter {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, TPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: Vec<usize>, coeff: &TPolynomial) {
        assert_eq!(expo.len(), self.r as usize, "exponent vector must have length r");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(expo).or_insert_with(TPolynomial::zero);
        *slot += coeff;
        if slot.is_zero() {
            // remove freshly cancelled term; re-fetch the key by lookup
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scaled(&self, by: &TPolynomial) -> Self {
        let mut out = Self::zero(self.r);
        for (expo, c) in &self.terms {
            out.add_term(expo.clone(), &(c * by));
        }
        out
    }

    /// Whether the polynomial is unchanged by every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        for a in 0..self.r as usize - 1 {
            let mut swapped = Self::zero(self.r);
            for (expo, c) in &self.terms {
                let mut e = expo.clone();
                e.swap(a, a + 1);
                swapped.add_term(e, c);
            }
            if swapped != *self {
                return false;
            }
        }
        true
    }
}

impl Add for &SymPolynomial {
    type Output = SymPolynomial;

    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.r, rhs.r, "polynomials must share the variable count");
        let mut out = self.clone();
        for (expo, c) in &rhs.terms {
            out.add_term(expo.clone(), c);
        }
        out
    }
}

impl Sub for &SymPolynomial {
    type Output = SymPolynomial;

    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.r, rhs.r, "polynomials must share the variable count");
        let mut out = self.clone();
        for (expo, c) in &rhs.terms {
            out.add_term(expo.clone(), &(&TPolynomial::zero() - c));
        }
        out
    }
}

impl Mul for &SymPolynomial {
    type Output = SymPolynomial;

    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.r, rhs.r, "polynomials must share the variable count");
        let mut out = SymPolynomial::zero(self.r);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let expo: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = c.to_string();
            if coeff.contains('+') || coeff.contains('-') {
                write!(f, "({coeff})*")?;
            } else if coeff != "1" {
                write!(f, "{coeff}*")?;
            }
            write!(f, "x^({})", expo.iter().map(|e| e.to_string()).join(","))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// bases
// ---------------------------------------------------------------------------

/// The sum of `x^weight` over all semistandard fillings of `shape` with
/// entries at most `r`.
pub fn schur(shape: &Shape, r: Letter) -> SymPolynomial {
    let mut out = SymPolynomial::zero(r);
    for t in enumerate_ssyt(shape, r) {
        let w = t.weight(r).expect("enumerated entries stay within bounds");
        out.add_term(w.0, &TPolynomial::one());
    }
    out
}

/// The elementary symmetric polynomial: the sum of all squarefree monomials
/// of degree `m`, built from index subsets rather than tableaux.
pub fn elementary(m: usize, r: Letter) -> SymPolynomial {
    let mut out = SymPolynomial::zero(r);
    for subset in (0..r as usize).combinations(m) {
        let mut expo = vec![0usize; r as usize];
        for i in subset {
            expo[i] = 1;
        }
        out.add_term(expo, &TPolynomial::one());
    }
    out
}

/// A polynomial written in the Schur basis: partition (decreasing parts,
/// no zeros) to coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Vec<usize>, TPolynomial>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, TPolynomial> {
        &self.terms
    }

    pub fn coefficient(&self, partition: &[usize]) -> TPolynomial {
        self.terms.get(partition).cloned().unwrap_or_else(TPolynomial::zero)
    }

    pub fn add(&mut self, partition: Vec<usize>, coeff: &TPolynomial) {
        assert!(
            partition.windows(2).all(|w| w[0] >= w[1]) && !partition.contains(&0),
            "Schur terms are indexed by partitions"
        );
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(partition).or_insert_with(TPolynomial::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Multiplies each coefficient back onto its Schur polynomial.
    pub fn expand(&self, r: Letter) -> SymPolynomial {
        let mut out = SymPolynomial::zero(r);
        for (partition, coeff) in &self.terms {
            let shape = Shape::straight(partition.clone()).expect("keys are partitions");
            out = &out + &schur(&shape, r).scaled(coeff);
        }
        out
    }

    /// Whether every coefficient of every `t`-power is nonnegative.
    pub fn is_t_nonnegative(&self) -> bool {
        self.terms.values().all(TPolynomial::is_nonnegative)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (partition, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = c.to_string();
            if coeff.contains('+') || (coeff.contains('-') && coeff.len() > 1) {
                write!(f, "({coeff})*")?;
            } else if coeff != "1" {
                write!(f, "{coeff}*")?;
            }
            write!(f, "s({})", partition.iter().map(|p| p.to_string()).join(","))?;
        }
        Ok(())
    }
}

/// Rewrites a symmetric polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the lexicographically greatest
/// exponent vector, which must always be a partition.
pub fn to_schur_basis(p: &SymPolynomial) -> Result<SchurExpansion> {
    let r = p.r();
    let mut rest = p.clone();
    let mut out = SchurExpansion::new();
    while let Some((expo, coeff)) = rest.terms().iter().next_back() {
        let expo = expo.clone();
        let coeff = coeff.clone();
        if !expo.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotSymmetric(format!(
                "leading exponent ({}) is not weakly decreasing",
                expo.iter().map(|e| e.to_string()).join(",")
            )));
        }
        let partition: Vec<usize> = expo.iter().copied().filter(|&e| e > 0).collect();
        if partition.is_empty() {
            // constant term: s_() is 1
            out.add(Vec::new(), &coeff);
            rest.add_term(expo, &(&TPolynomial::zero() - &coeff));
            continue;
        }
        let shape = Shape::straight(partition.clone()).expect("a decreasing vector is a partition");
        rest = &rest - &schur(&shape, r).scaled(&coeff);
        out.add(partition, &coeff);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the graded polynomials
// ---------------------------------------------------------------------------

/// The generating function `Σ t^minimaj x^weight` over all partitions of
/// `n` letters at most `r` into `k + 1` blocks (`k` is the grading index).
pub fn val_direct(n: usize, k: usize, r: Letter) -> SymPolynomial {
    let mut out = SymPolynomial::zero(r);
    for p in enumerate_partitions(n, k + 1, r) {
        let w = p.weight(r).expect("enumerated letters stay within bounds");
        out.add_term(w.0, &TPolynomial::term(1, p.minimaj()));
    }
    out
}

/// The same polynomial read off the connected components of the graph on
/// partitions into `k + 1` blocks: each component contributes
/// `t^minimaj(source) * s_(sorted source weight)`.
pub fn val_crystal(n: usize, k: usize, r: Letter) -> SchurExpansion {
    let g = crystal_graph(n, k + 1, r);
    let mut out = SchurExpansion::new();
    for c in g.components() {
        let mm = g.vertices()[c.source].minimaj();
        out.add(c.highest_weight.sorted_desc(), &TPolynomial::term(1, mm));
    }
    out
}

/// All partitions of `n` with weakly decreasing positive parts.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The closed standard-tableau form of the same expansion, valid only when
/// `r >= n`: the coefficient of `s_partition` is the sum over standard
/// tableaux `T` of that shape of
/// `t^(majT + C(n-blocks,2) - (n-blocks)*desT) * binomial(desT, n-blocks)`,
/// where `blocks = k + 1` counts the blocks directly.
pub fn val_rhs_syt(n: usize, blocks: usize, r: Letter) -> Result<SchurExpansion> {
    assert!(blocks >= 1, "at least one block");
    if (r as usize) < n {
        return Err(Error::AlphabetBelowDegree { r, n });
    }
    let mut out = SchurExpansion::new();
    if blocks > n {
        return Ok(out);
    }
    let m = n - blocks;
    let shift = m * m.saturating_sub(1) / 2;
    for partition in partitions_of(n) {
        let shape = Shape::straight(partition.clone()).expect("partitions are valid shapes");
        let mut coeff = TPolynomial::zero();
        for t in enumerate_syt(&shape) {
            let (des, maj) = syt_des_maj(&t);
            if des < m {
                continue;
            }
            let exponent = maj + shift - m * des;
            coeff += &(&TPolynomial::term(1, exponent) * &gaussian_binomial(des, m));
        }
        out.add(partition, &coeff);
    }
    Ok(out)
}

/// Checks that the partitions sharing one descent key have weight generating
/// function equal to the ribbon Schur polynomial of the key's ribbon times
/// the elementary polynomials of its column lengths.
pub fn verify_descent_class(key: &DescentData, r: Letter) -> Result<bool> {
    let (column_lengths, ribbon) = shape_from_descents(key)?;
    let mut rhs = schur(&Shape::Ribbon(ribbon), r);
    for c in column_lengths {
        rhs = &rhs * &elementary(c, r);
    }
    let mut lhs = SymPolynomial::zero(r);
    for p in enumerate_partitions(key.n(), key.k(), r) {
        if p.minimaj_order().descent_data() == *key {
            let w = p.weight(r).expect("enumerated letters stay within bounds");
            lhs.add_term(w.0, &TPolynomial::one());
        }
    }
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

//! Exact integer polynomials, real-root isolation and the interlacing order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of the value at a rational point, computed without fractions.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        let (n, d) = (x.numer(), x.denom());
        // x = n/d with d > 0, so d^deg * p(x) has the sign of p(x).
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let mut terms = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            terms.push(dpow.clone());
            dpow *= d;
        }
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * n + c * &terms[deg - k];
        }
        acc.sign_ordering()
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient when `divisor` divides `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = RationalPolynomial::from(self).div_rem(&RationalPolynomial::from(divisor));
        if !r.is_zero() {
            return None;
        }
        q.to_integer()
    }

    /// Squarefree part, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = gcd(self, &self.derivative());
        let (q, _) = RationalPolynomial::from(self).div_rem(&RationalPolynomial::from(&g));
        q.to_scaled_integer().primitive()
    }

    /// Substitutes `x^r` for `x`, `r >= 1`.
    pub fn dilate(&self, r: usize) -> IntPolynomial {
        assert!(r >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.degree().unwrap_or(0) * r + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * r] = c.clone();
        }
        Self::new(coeffs)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders lowest degree first, e.g. `6x+2x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "x")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<CoeffRepr> = Vec::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Int(i) => Ok(BigInt::from(i)),
                CoeffRepr::Text(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| serde::de::Error::custom(format!("bad coefficient {s:?}: {e}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Rational polynomial used for division and gcd computations.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl From<&IntPolynomial> for RationalPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RationalPolynomial {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RationalPolynomial::default(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = &rem[idx] - &factor * c;
            }
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        (RationalPolynomial::new(quot), RationalPolynomial::new(rem))
    }

    /// Integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Clears denominators by a positive factor.
    pub fn to_scaled_integer(&self) -> IntPolynomial {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        )
    }
}

/// Primitive gcd with positive leading coefficient; zero iff both inputs are zero.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive();
    let mut b = b.primitive();
    while !b.is_zero() {
        let (_, r) = RationalPolynomial::from(&a).div_rem(&RationalPolynomial::from(&b));
        a = b;
        b = r.to_scaled_integer().primitive();
    }
    a.primitive()
}

/// `(1-x)^m f(x/(1-x))`.
pub fn h_from_f(f: &IntPolynomial, m: usize) -> Result<IntPolynomial> {
    binomial_transform(f, m, -1)
}

/// `(1+x)^m h(x/(1+x))`, the inverse of [`h_from_f`].
pub fn f_from_h(h: &IntPolynomial, m: usize) -> Result<IntPolynomial> {
    binomial_transform(h, m, 1)
}

fn binomial_transform(p: &IntPolynomial, m: usize, sign: i64) -> Result<IntPolynomial> {
    if let Some(deg) = p.degree() {
        if deg > m {
            return Err(Error::InvalidDimension(format!(
                "degree {deg} exceeds m = {m}"
            )));
        }
    }
    let base = IntPolynomial::from_i64(&[1, sign]);
    let mut out = IntPolynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out + base.pow((m - k) as u32).shift(k).scale(c);
    }
    Ok(out)
}

/// `I_d(p) = x^d p(1/x)`.
pub fn reverse(p: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(Error::InvalidDegree(format!("degree {deg} exceeds {d}")));
        }
    }
    Ok(IntPolynomial::new((0..=d).map(|k| p.coeff(d - k)).collect()))
}

pub fn is_symmetric(p: &IntPolynomial, d: usize) -> Result<bool> {
    Ok(&reverse(p, d)? == p)
}

/// `p^{<r,l>}`: coefficient `k` is coefficient `k r + l` of `p`.
pub fn veronese_section(p: &IntPolynomial, r: usize, l: usize) -> Result<IntPolynomial> {
    if r == 0 || l >= r {
        return Err(Error::Range(format!(
            "section index {l} must lie in [0, {r})"
        )));
    }
    Ok(IntPolynomial::new(
        p.coeffs().iter().skip(l).step_by(r).cloned().collect(),
    ))
}

/// `(1 + x + ... + x^{r-1})^d`.
pub fn convolution_power(r: usize, d: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); r]).pow(d as u32)
}

/// Isolating interval of a real root: the single point `lo` when `lo == hi`,
/// otherwise the half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Distinct real roots of a nonzero polynomial in increasing order.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
    pub multiplicities: Vec<usize>,
    pub squarefree_degree: usize,
    chain: Arc<SturmChain>,
}

impl RootIsolation {
    pub fn root_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// The distinct roots, increasing, as refinable real numbers.
    pub fn roots(&self) -> Vec<RealRoot> {
        self.intervals
            .iter()
            .map(|iv| RealRoot {
                chain: self.chain.clone(),
                lo: iv.lo.clone(),
                hi: iv.hi.clone(),
            })
            .collect()
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Debug)]
struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    fn new(p: &IntPolynomial) -> Self {
        let mut polys = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            polys.push(next.clone());
            let n = polys.len();
            let (_, r) = RationalPolynomial::from(&polys[n - 2])
                .div_rem(&RationalPolynomial::from(&polys[n - 1]));
            let r = r.to_scaled_integer();
            let g = r.content();
            next = if g.is_zero() {
                IntPolynomial::zero()
            } else {
                -&IntPolynomial::new(r.coeffs().iter().map(|c| c / &g).collect())
            };
        }
        SturmChain { polys }
    }

    fn base(&self) -> &IntPolynomial {
        &self.polys[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.polys {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Strict bound on the absolute value of every root.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead)
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

pub fn real_root_isolation(p: &IntPolynomial) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::UndefinedIsolation);
    }
    let sqf = p.squarefree_part();
    let squarefree_degree = sqf.degree().unwrap_or(0);
    let chain = Arc::new(SturmChain::new(&sqf));
    let mut intervals = Vec::new();
    if squarefree_degree > 0 {
        let b = cauchy_bound(&sqf);
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = chain.count(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                if sqf.sign_at(&hi) == Ordering::Equal {
                    intervals.push(RootInterval { lo: hi.clone(), hi });
                } else {
                    intervals.push(RootInterval { lo, hi });
                }
                continue;
            }
            let mid = (&lo + &hi) / two();
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        intervals.sort_by(|a, b| a.hi.cmp(&b.hi));
    }

    // Multiplicity of a root is one more than the number of iterated gcds it survives.
    let mut multiplicities = vec![1usize; intervals.len()];
    let mut current = p.primitive();
    loop {
        current = gcd(&current, &current.derivative());
        if current.degree().unwrap_or(0) == 0 {
            break;
        }
        let part = SturmChain::new(&current.squarefree_part());
        for (iv, m) in intervals.iter().zip(multiplicities.iter_mut()) {
            let hit = if iv.is_exact() {
                part.base().sign_at(&iv.lo) == Ordering::Equal
            } else {
                part.count(&iv.lo, &iv.hi) > 0
            };
            if hit {
                *m += 1;
            }
        }
    }
    Ok(RootIsolation {
        intervals,
        multiplicities,
        squarefree_degree,
        chain,
    })
}

pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    match p.degree() {
        None | Some(0) => true,
        Some(deg) => real_root_isolation(p).map(|iso| iso.root_count() == deg).unwrap_or(false),
    }
}

/// A real algebraic number given by a squarefree polynomial and an isolating interval.
#[derive(Clone, Debug)]
pub struct RealRoot {
    chain: Arc<SturmChain>,
    lo: BigRational,
    hi: BigRational,
}

impl RealRoot {
    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / two();
        self.split_at(mid);
    }

    fn split_at(&mut self, m: BigRational) {
        if self.chain.base().sign_at(&m) == Ordering::Equal {
            self.lo = m.clone();
            self.hi = m;
        } else if self.chain.count(&self.lo, &m) == 1 {
            self.hi = m;
        } else {
            self.lo = m;
        }
    }

    /// Exact comparison, refining both intervals as needed.
    pub fn compare(&mut self, other: &mut RealRoot) -> Ordering {
        loop {
            match (self.is_exact(), other.is_exact()) {
                (true, true) => return self.lo.cmp(&other.lo),
                (true, false) => return other.compare_with_point(&self.lo).reverse(),
                (false, true) => return self.compare_with_point(&other.lo),
                (false, false) => {}
            }
            if self.hi <= other.lo {
                return Ordering::Less;
            }
            if other.hi <= self.lo {
                return Ordering::Greater;
            }
            let lo = (&self.lo).max(&other.lo).clone();
            let hi = (&self.hi).min(&other.hi).clone();
            let common = gcd(self.chain.base(), other.chain.base());
            if common.degree().unwrap_or(0) > 0 && SturmChain::new(&common).count(&lo, &hi) > 0 {
                return Ordering::Equal;
            }
            self.refine();
            other.refine();
        }
    }

    fn compare_with_point(&mut self, c: &BigRational) -> Ordering {
        if *c <= self.lo {
            return Ordering::Greater;
        }
        if *c > self.hi {
            return Ordering::Less;
        }
        if self.chain.base().sign_at(c) == Ordering::Equal {
            return Ordering::Equal;
        }
        self.split_at(c.clone());
        if self.hi <= *c {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

/// Real roots with multiplicity, largest first.
pub fn descending_roots(p: &IntPolynomial) -> Result<Vec<RealRoot>> {
    let iso = real_root_isolation(p)?;
    let mut out = Vec::new();
    for (root, m) in iso.roots().into_iter().zip(iso.multiplicities.iter()).rev() {
        for _ in 0..*m {
            out.push(root.clone());
        }
    }
    Ok(out)
}

fn check_sign_pattern(p: &IntPolynomial) -> Result<()> {
    if p.has_nonnegative_coeffs() {
        Ok(())
    } else {
        Err(Error::UnsupportedInput(format!(
            "interlacing is only decided for nonnegative coefficients, got {p}"
        )))
    }
}

/// `p ≺ q`: both real-rooted with roots alternating `... <= b2 <= a2 <= b1 <= a1`,
/// where `b` are the roots of `p` and `a` those of `q`. The zero polynomial
/// interlaces every real-rooted polynomial in both directions.
pub fn interlaces(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool> {
    check_sign_pattern(p)?;
    check_sign_pattern(q)?;
    if p.is_zero() || q.is_zero() {
        return Ok(is_real_rooted(p) && is_real_rooted(q));
    }
    if !is_real_rooted(p) || !is_real_rooted(q) {
        return Ok(false);
    }
    let g = gcd(p, q);
    let p1 = p.div_exact(&g).map(|x| x.primitive()).unwrap_or_else(|| p.primitive());
    let q1 = q.div_exact(&g).map(|x| x.primitive()).unwrap_or_else(|| q.primitive());
    alternates(&p1, &q1)
}

/// The same relation decided on the full root multisets with weak inequalities,
/// without extracting common factors first.
pub fn interlaces_unreduced(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool> {
    check_sign_pattern(p)?;
    check_sign_pattern(q)?;
    if p.is_zero() || q.is_zero() {
        return Ok(is_real_rooted(p) && is_real_rooted(q));
    }
    if !is_real_rooted(p) || !is_real_rooted(q) {
        return Ok(false);
    }
    alternates(p, q)
}

/// Checks `a1 >= b1 >= a2 >= b2 >= ...` with `#a - #b` in `{0, 1}`.
fn alternates(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool> {
    let mut beta = roots_or_empty(p)?;
    let mut alpha = roots_or_empty(q)?;
    if alpha.len() != beta.len() && alpha.len() != beta.len() + 1 {
        return Ok(false);
    }
    for i in 0..beta.len() {
        if alpha[i].compare(&mut beta[i]) == Ordering::Less {
            return Ok(false);
        }
        if i + 1 < alpha.len() && beta[i].compare(&mut alpha[i + 1]) == Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

fn roots_or_empty(p: &IntPolynomial) -> Result<Vec<RealRoot>> {
    if p.degree().unwrap_or(0) == 0 {
        Ok(Vec::new())
    } else {
        descending_roots(p)
    }
}

/// `ps[i] ≺ ps[j]` for all `i <= j`.
pub fn is_interlacing_sequence(ps: &[IntPolynomial]) -> Result<bool> {
    for i in 0..ps.len() {
        for j in i..ps.len() {
            if !interlaces(&ps[i], &ps[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lexicographic comparison of descending root lists; a missing root sorts lowest.
pub fn compare_root_lists(a: &mut [RealRoot], b: &mut [RealRoot]) -> Ordering {
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        match x.compare(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len()).reverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display_matches_cli_rendering() {
        assert_eq!(p(&[0, 6, 2]).to_string(), "6x+2x^2");
        assert_eq!(p(&[1, -1, 0, 1]).to_string(), "1-x+x^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(gcd(&a, &p(&[2, 2])), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 1, 1]).squarefree_part(), p(&[0, 1, 1]));
    }

    #[test]
    fn root_comparison_detects_equal_algebraic_numbers() {
        // sqrt(2) from x^2 - 2 and from x^3 - 2x.
        let mut a = descending_roots(&p(&[-2, 0, 1])).unwrap();
        let mut b = descending_roots(&p(&[0, -2, 0, 1])).unwrap();
        assert_eq!(a[0].compare(&mut b[0]), Ordering::Equal);
        assert_eq!(a[0].compare(&mut b[1]), Ordering::Greater);
    }

    #[test]
    fn multiplicities_from_repeated_gcd() {
        // (x+1)^3 (x-2)^2 x
        let q = p(&[1, 1]).pow(3) * p(&[-2, 1]).pow(2) * p(&[0, 1]);
        let iso = real_root_isolation(&q).unwrap();
        assert_eq!(iso.multiplicities, vec![3, 1, 2]);
        assert_eq!(iso.squarefree_degree, 3);
    }
}

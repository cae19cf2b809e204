//! Colored and type B Eulerian polynomials and half-open box lattice counts.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyreal::{reverse, IntPolynomial};

/// Default cap on the number of objects an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn check_budget(what: &str, size: u128, budget: u64) -> Result<()> {
    if size > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{what} needs {size} steps, budget is {budget}"
        )));
    }
    Ok(())
}

/// Element `pi_1^{c_1} ... pi_d^{c_d}` of the wreath product `Z_r ≀ S_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPermutation {
    pub pi: Vec<usize>,
    pub colors: Vec<usize>,
}

impl ColoredPermutation {
    /// Sort key: higher colors are smaller, ties broken by the letter.
    fn key(letter: usize, color: usize) -> (i64, usize) {
        (-(color as i64), letter)
    }

    /// Positions `j` in `0..d` with `pi_j^{c_j} > pi_{j+1}^{c_{j+1}}`, where `pi_0^{c_0} = 0^0`.
    pub fn descents(&self) -> Vec<usize> {
        let mut keys = vec![Self::key(0, 0)];
        keys.extend(self.pi.iter().zip(&self.colors).map(|(&p, &c)| Self::key(p, c)));
        (0..self.pi.len()).filter(|&j| keys[j] > keys[j + 1]).collect()
    }

    /// Descents plus position 0 when `pi_1` lies in `[l]`.
    pub fn des_l(&self, l: usize) -> usize {
        let des = self.descents();
        let extra = self.pi.first().is_some_and(|&p| p <= l) && des.first() != Some(&0);
        des.len() + usize::from(extra)
    }
}

/// Signed permutation, read as the word `eps_1 pi_1 ... eps_d pi_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub pi: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn word(&self) -> Vec<i64> {
        self.pi
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| p as i64 * s as i64)
            .collect()
    }

    /// Positions `i` in `0..d` with `w_i > w_{i+1}`, where `w_0 = 0`.
    pub fn descents(&self) -> Vec<usize> {
        let mut w = vec![0i64];
        w.extend(self.word());
        (0..self.pi.len()).filter(|&i| w[i] > w[i + 1]).collect()
    }
}

fn signed_permutations(d: usize) -> impl Iterator<Item = SignedPermutation> {
    (1..=d).permutations(d).flat_map(move |pi| {
        (0..1u32 << d).map(move |mask| SignedPermutation {
            pi: pi.clone(),
            signs: (0..d)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        })
    })
}

fn tally(counts: Vec<u64>) -> IntPolynomial {
    IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
}

/// `A_{d,l}^{(r)}` from `sum_t (rt)^l (rt+1)^{d-l} x^t = A / (1-x)^{d+1}`.
pub fn colored_eulerian(d: usize, l: usize, r: usize) -> Result<IntPolynomial> {
    if l > d || d == 0 || r == 0 {
        return Err(Error::Range(format!(
            "need d >= 1, r >= 1 and 0 <= l <= d, got d={d}, l={l}, r={r}"
        )));
    }
    let g = |t: usize| -> BigInt {
        let rt = BigInt::from(r * t);
        num_traits::pow(rt.clone(), l) * num_traits::pow(rt + 1, d - l)
    };
    let coeffs = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, j| {
                let term = binomial(d + 1, j) * g(k - j);
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(IntPolynomial::new(coeffs))
}

/// `A_{d,l}^{(r)}` as the `des_l` generating polynomial over `Z_r ≀ S_d`.
pub fn colored_eulerian_by_descents(d: usize, l: usize, r: usize, budget: u64) -> Result<IntPolynomial> {
    if l > d || d == 0 || r == 0 {
        return Err(Error::Range(format!(
            "need d >= 1, r >= 1 and 0 <= l <= d, got d={d}, l={l}, r={r}"
        )));
    }
    check_budget(
        "colored permutation enumeration",
        (r as u128).pow(d as u32) * factorial(d),
        budget,
    )?;
    let mut counts = vec![0u64; d + 1];
    for pi in (1..=d).permutations(d) {
        for code in 0..r.pow(d as u32) {
            let colors = (0..d).map(|i| code / r.pow(i as u32) % r).collect();
            let w = ColoredPermutation { pi: pi.clone(), colors };
            counts[w.des_l(l)] += 1;
        }
    }
    Ok(tally(counts))
}

/// Type B Eulerian polynomial: descents over all signed permutations of `[d]`.
pub fn type_b_eulerian(d: usize, budget: u64) -> Result<IntPolynomial> {
    check_budget("signed permutation enumeration", (1u128 << d) * factorial(d), budget)?;
    let mut counts = vec![0u64; d + 1];
    for w in signed_permutations(d) {
        counts[w.descents().len()] += 1;
    }
    Ok(tally(counts))
}

/// `B_{d,l}`: descents at positions `0..d` over signed permutations whose last
/// letter is `d+1-l`. Zero when `l = 0`, since no letter equals `d+1`.
pub fn type_b_l_eulerian(d: usize, l: usize, budget: u64) -> Result<IntPolynomial> {
    if l > d || d == 0 {
        return Err(Error::Range(format!("need 0 <= l <= d, got d={d}, l={l}")));
    }
    check_budget("signed permutation enumeration", (1u128 << d) * factorial(d), budget)?;
    let target = (d + 1 - l) as i64;
    let mut counts = vec![0u64; d + 1];
    for w in signed_permutations(d) {
        if w.word()[d - 1] == target {
            counts[w.descents().len()] += 1;
        }
    }
    Ok(tally(counts))
}

/// The box `[0,r]^d` with `l` facets removed in normal form: the upper facets
/// `x_d = r, x_{d-1} = r, ...` first, then for `l > d` the lower facets
/// `x_d = 0, x_{d-1} = 0, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfOpenBox {
    pub d: usize,
    pub r: usize,
    pub l: usize,
}

impl HalfOpenBox {
    pub fn new(d: usize, r: usize, l: usize) -> Result<Self> {
        if d == 0 || r == 0 || l > 2 * d {
            return Err(Error::Range(format!(
                "need d >= 1, r >= 1 and 0 <= l <= 2d, got d={d}, r={r}, l={l}"
            )));
        }
        Ok(HalfOpenBox { d, r, l })
    }

    /// Removed facets as `(coordinate, is_upper)`, coordinates zero-based.
    pub fn removed_facets(&self) -> Vec<(usize, bool)> {
        let upper = self.l.min(self.d);
        let lower = self.l.saturating_sub(self.d);
        let mut out: Vec<(usize, bool)> = (0..upper).map(|k| (self.d - 1 - k, true)).collect();
        out.extend((0..lower).map(|k| (self.d - 1 - k, false)));
        out
    }

    /// Euler characteristic of the half-open box.
    pub fn euler_characteristic(&self) -> i64 {
        if self.l == 0 {
            1
        } else if self.l == 2 * self.d {
            if self.d.is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }
}

/// Lattice points of the `t`-th dilate, counted one by one.
pub fn lattice_count_halfopen(b: &HalfOpenBox, t: usize, budget: u64) -> Result<u64> {
    let side = b.r * t;
    check_budget(
        "lattice point enumeration",
        (side as u128 + 1).pow(b.d as u32),
        budget,
    )?;
    let mut lo = vec![0usize; b.d];
    let mut hi = vec![side; b.d];
    for (coord, upper) in b.removed_facets() {
        if upper {
            if hi[coord] == 0 {
                return Ok(0);
            }
            hi[coord] -= 1;
        } else {
            lo[coord] += 1;
        }
    }
    let mut count = 0u64;
    let mut z = vec![0usize; b.d];
    'outer: loop {
        if z.iter().zip(lo.iter().zip(&hi)).all(|(x, (a, b))| a <= x && x <= b) {
            count += 1;
        }
        for zi in z.iter_mut() {
            if *zi < side {
                *zi += 1;
                continue 'outer;
            }
            *zi = 0;
        }
        break;
    }
    Ok(count)
}

/// h*-polynomial and value at zero obtained from brute-force lattice counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    pub hstar: IntPolynomial,
    /// Value at `t = 0` of the polynomial interpolating the counts.
    pub constant_term: BigRational,
    /// Whether the interpolant also predicts the count at `t = d + 2`.
    pub polynomial_check: bool,
}

/// Interpolates the counts at `t = 1..=d+1` and expands the Ehrhart series.
pub fn hstar_by_interpolation(b: &HalfOpenBox, budget: u64) -> Result<EhrhartData> {
    let d = b.d;
    let counts = (1..=d + 2)
        .map(|t| lattice_count_halfopen(b, t, budget).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let nodes: Vec<i64> = (1..=d as i64 + 1).collect();
    let lagrange = |x: i64| -> BigRational {
        let mut acc = BigRational::zero();
        for (j, &tj) in nodes.iter().enumerate() {
            let mut term = BigRational::from_integer(counts[j].clone());
            for &tk in &nodes {
                if tk != tj {
                    term *= BigRational::new((x - tk).into(), (tj - tk).into());
                }
            }
            acc += term;
        }
        acc
    };
    let constant_term = lagrange(0);
    let polynomial_check = lagrange(d as i64 + 2) == BigRational::from_integer(counts[d + 1].clone());
    // The series of the interior starts at t = 1.
    let s0 = if b.l == 2 * d || !constant_term.is_integer() {
        BigInt::zero()
    } else {
        constant_term.to_integer()
    };
    let series = |t: usize| if t == 0 { s0.clone() } else { counts[t - 1].clone() };
    let coeffs = (0..=d + 1)
        .map(|k| {
            (0..=k.min(d + 1)).fold(BigInt::zero(), |acc, j| {
                let term = binomial(d + 1, j) * series(k - j);
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(EhrhartData {
        hstar: IntPolynomial::new(coeffs),
        constant_term,
        polynomial_check,
    })
}

/// h* of the half-open box `[0,r]^d_l` for `0 <= l <= 2d`.
pub fn hstar_halfopen_cube(d: usize, l: usize, r: usize) -> Result<IntPolynomial> {
    if l > 2 * d {
        return Err(Error::Range(format!("need 0 <= l <= 2d, got d={d}, l={l}")));
    }
    if l <= d {
        colored_eulerian(d, l, r)
    } else {
        Ok(reverse(&colored_eulerian(d, 2 * d - l, r)?, d)?.shift(1))
    }
}

/// Degree of `A_{d,l}^{(r)}`.
pub fn eulerian_degree(d: usize, l: usize, r: usize) -> usize {
    if r == 1 && l < d {
        d - 1
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colored_descent_order_puts_high_colors_first() {
        let w = ColoredPermutation { pi: vec![2, 1], colors: vec![0, 1] };
        // 0^0 < 2^0 and 2^0 > 1^1.
        assert_eq!(w.descents(), vec![1]);
        let w = ColoredPermutation { pi: vec![1], colors: vec![0] };
        assert_eq!(w.des_l(1), 1);
        assert_eq!(w.des_l(0), 0);
    }

    #[test]
    fn box_normal_form() {
        let b = HalfOpenBox::new(3, 1, 5).unwrap();
        assert_eq!(
            b.removed_facets(),
            vec![(2, true), (1, true), (0, true), (2, false), (1, false)]
        );
    }
}

//! Exact arithmetic helpers and the value types shared by every algorithm.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"` exactly. Whitespace, decimals and zero
/// denominators are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::invalid(format!("`{text}` is not a rational of the form p/q"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Reduced `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Smallest integer `k` with `k >= value`.
pub fn ceil_rational(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Exact `(1 + eps)^exponent`; negative exponents give the reciprocal power.
pub fn pow_one_plus_eps(eps: &Epsilon, exponent: i64) -> Rational {
    let base = Rational::one() + eps.value();
    let mut acc = Rational::one();
    for _ in 0..exponent.unsigned_abs() {
        acc *= &base;
    }
    if exponent < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Largest `i` with `(1+eps)^i <= target`.
pub fn floor_log(eps: &Epsilon, target: &Rational) -> i64 {
    assert!(target.is_positive(), "floor_log needs a positive target");
    let base = Rational::one() + eps.value();
    let mut exponent = 0i64;
    let mut power = Rational::one();
    if &power <= target {
        loop {
            let next = &power * &base;
            if &next > target {
                return exponent;
            }
            power = next;
            exponent += 1;
        }
    }
    while &power > target {
        power /= &base;
        exponent -= 1;
    }
    exponent
}

/// Smallest `i` with `(1+eps)^i >= target`.
pub fn ceil_log(eps: &Epsilon, target: &Rational) -> i64 {
    let lower = floor_log(eps, target);
    if pow_one_plus_eps(eps, lower) == *target {
        lower
    } else {
        lower + 1
    }
}

/// Accuracy parameter, `0 < eps <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Epsilon(Rational);

impl Epsilon {
    pub fn new(value: Rational) -> Result<Self> {
        if !value.is_positive() || value > Rational::one() {
            return Err(Error::invalid(format!(
                "epsilon must satisfy 0 < eps <= 1, got {value}"
            )));
        }
        Ok(Epsilon(value))
    }

    pub fn one() -> Self {
        Epsilon(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Strictly positive weight on the second objective of a weighted sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Rational);

impl Weight {
    pub fn new(gamma: Rational) -> Result<Self> {
        if !gamma.is_positive() {
            return Err(Error::invalid(format!("weight must be positive, got {gamma}")));
        }
        Ok(Weight(gamma))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The image `(f1(x), f2(x))` of a solution.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CostPair {
    pub f1: Rational,
    pub f2: Rational,
}

impl CostPair {
    pub fn new(f1: Rational, f2: Rational) -> Self {
        CostPair { f1, f2 }
    }

    pub fn from_ints(f1: i64, f2: i64) -> Self {
        CostPair::new(int(f1), int(f2))
    }

    pub fn zero() -> Self {
        CostPair::new(Rational::zero(), Rational::zero())
    }

    /// `f1 + gamma * f2`
    pub fn weighted(&self, gamma: &Rational) -> Rational {
        &self.f1 + gamma * &self.f2
    }

    /// `c1 * f1 + c2 * f2`
    pub fn scalarized(&self, c1: &Rational, c2: &Rational) -> Rational {
        c1 * &self.f1 + c2 * &self.f2
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.f1.is_positive() && self.f2.is_positive()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.f1.is_negative() && !self.f2.is_negative()
    }
}

impl std::ops::Add<&CostPair> for &CostPair {
    type Output = CostPair;

    fn add(self, rhs: &CostPair) -> CostPair {
        CostPair::new(&self.f1 + &rhs.f1, &self.f2 + &rhs.f2)
    }
}

impl std::ops::AddAssign<&CostPair> for CostPair {
    fn add_assign(&mut self, rhs: &CostPair) {
        self.f1 += &rhs.f1;
        self.f2 += &rhs.f2;
    }
}

impl fmt::Display for CostPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// True iff `a` is componentwise no worse than `b` and differs from it.
pub fn dominates(a: &CostPair, b: &CostPair) -> bool {
    a.f1 <= b.f1 && a.f2 <= b.f2 && a != b
}

/// Positive lower and upper bounds on each objective over all feasible
/// solutions (over strictly positive values only, for relaxed instances).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lb1: Rational,
    pub ub1: Rational,
    pub lb2: Rational,
    pub ub2: Rational,
}

impl Bounds {
    pub fn new(lb1: Rational, ub1: Rational, lb2: Rational, ub2: Rational) -> Result<Self> {
        for (lb, ub, dim) in [(&lb1, &ub1, 1), (&lb2, &ub2, 2)] {
            if !lb.is_positive() || lb > ub {
                return Err(Error::invalid(format!(
                    "bounds in dimension {dim} must satisfy 0 < lb <= ub, got [{lb}, {ub}]"
                )));
            }
        }
        Ok(Bounds { lb1, ub1, lb2, ub2 })
    }

    /// Whether `image` respects the bounds. Zero components are skipped when
    /// `relaxed` is set.
    pub fn contains(&self, image: &CostPair, relaxed: bool) -> bool {
        let within = |v: &Rational, lb: &Rational, ub: &Rational| (relaxed && v.is_zero()) || (lb <= v && v <= ub);
        within(&image.f1, &self.lb1, &self.ub1) && within(&image.f2, &self.lb2, &self.ub2)
    }
}

/// A solution token together with its exact image.
///
/// Tokens are problem specific: sorted edge indices for trees and paths,
/// the sorted source side for cuts, sorted vertex indices for covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub token: Vec<usize>,
    pub image: CostPair,
    /// The weight `gamma` the record was produced at, if any.
    pub produced_at: Option<Weight>,
}

impl SolutionRecord {
    pub fn new(token: Vec<usize>, image: CostPair) -> Self {
        SolutionRecord {
            token,
            image,
            produced_at: None,
        }
    }

    pub fn with_weight(mut self, gamma: Option<Weight>) -> Self {
        self.produced_at = gamma;
        self
    }
}

/// What a budget run guarantees: `f1 <= budget_factor * budget` and
/// `f2 <= cost_factor * OPT(budget)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuaranteeCertificate {
    pub alpha: Rational,
    pub epsilon: Rational,
    pub budget_factor: Rational,
    pub cost_factor: Rational,
    pub budget: Rational,
    pub oracle_calls: usize,
}

/// Which pair of guarantee factors an algorithm achieves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorVariant {
    /// `(alpha (1 + 2 eps), alpha (1 + 2/eps))`, the geometric grid.
    Grid,
    /// `(alpha (1 + eps), alpha (1 + 1/eps))`, parametric methods.
    Parametric,
}

impl FactorVariant {
    pub fn factors(self, eps: &Rational, alpha: &Rational) -> (Rational, Rational) {
        let one = Rational::one();
        let k = match self {
            FactorVariant::Grid => int(2),
            FactorVariant::Parametric => one.clone(),
        };
        let first = alpha * (&one + &k * eps);
        let second = alpha * (&one + &k / eps);
        (first, second)
    }
}

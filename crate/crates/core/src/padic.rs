//! Exact p-adic valuations, absolute values, and truncated p-adic arithmetic.
//!
//! The p-adic absolute value of a nonzero rational `x = (u/v)·p^n` (with `u`,
//! `v` coprime to `p`) is `|x|_p = p^{-n}`, and `d_p(x,y) = |x-y|_p` is an
//! ultrametric on the rationals. Elements of the completion are modeled here
//! at finite relative precision: a [`PAdicNumber`] carries a valuation and
//! `N` base-`p` digits of its unit part, so the value is known modulo
//! `p^{v+N}`. All bookkeeping is exact; no digit is ever reported unless it
//! is reliable at the operands' combined precision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::pow_i64;

/// p-adic valuation: the exponent of `p` in a rational, `Infinite` for 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Finite value, if any.
    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(n) => Some(*n),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => core::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => core::cmp::Ordering::Greater,
            (Finite(_), Infinite) => core::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PadicError {
    /// `p` is smaller than 2 or fails trial division.
    NotPrime(u64),
    /// Arithmetic between values over different primes.
    PrimeMismatch { left: u64, right: u64 },
    /// A digit count of zero was requested.
    ZeroDigitCount,
    /// Inversion of a value indistinguishable from zero at its precision.
    ZeroAtPrecision(usize),
}

impl fmt::Display for PadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicError::NotPrime(p) => write!(f, "{p} is not a prime"),
            PadicError::PrimeMismatch { left, right } => {
                write!(f, "mismatched primes: {left} vs {right}")
            }
            PadicError::ZeroDigitCount => write!(f, "digit count must be at least 1"),
            PadicError::ZeroAtPrecision(n) => {
                write!(f, "value is zero at precision {n}")
            }
        }
    }
}

impl core::error::Error for PadicError {}

/// Deterministic primality check by trial division up to sqrt(p).
///
/// Inputs here are desk-scale primes, so trial division is the right tool;
/// composite `p` is rejected rather than silently accepted.
pub fn validate_prime(p: u64) -> Result<(), PadicError> {
    if p < 2 {
        return Err(PadicError::NotPrime(p));
    }
    if p % 2 == 0 {
        return if p == 2 { Ok(()) } else { Err(PadicError::NotPrime(p)) };
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return Err(PadicError::NotPrime(p));
        }
        d += 2;
    }
    Ok(())
}

fn int_valuation(x: &BigInt, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut m = x.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// p-adic valuation of a rational: `Infinite` iff `x = 0`, else the `n`
/// with `x = (u/v)·p^n`, `u` and `v` coprime to `p`.
pub fn valuation(x: &BigRational, p: u64) -> Result<Valuation, PadicError> {
    validate_prime(p)?;
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(
        int_valuation(x.numer(), p) - int_valuation(x.denom(), p),
    ))
}

/// `|x|_p = p^{-n}` as an exact rational; 0 when `x = 0`.
pub fn abs_p(x: &BigRational, p: u64) -> Result<BigRational, PadicError> {
    match valuation(x, p)? {
        Valuation::Infinite => Ok(BigRational::zero()),
        Valuation::Finite(n) => Ok(pow_i64(&BigRational::from(BigInt::from(p)), -n)),
    }
}

/// The p-adic metric `d_p(x, y) = |x - y|_p`.
pub fn dist_p(x: &BigRational, y: &BigRational, p: u64) -> Result<BigRational, PadicError> {
    abs_p(&(x - y), p)
}

/// A p-adic number at finite precision.
///
/// A nonzero value represents `sum_i digits[i]·p^{v+i}` known modulo
/// `p^{v+N}` where `N = digits.len()` and `digits[0] != 0`. A zero value
/// (`is_zero()`) represents something indistinguishable from 0 modulo
/// `p^{v+N}`: "zero at precision N". Values are immutable; all operations
/// return fresh numbers and are safe to call concurrently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicNumber {
    p: u64,
    v: i64,
    digits: Vec<u64>,
    zero: bool,
}

impl PAdicNumber {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The shift of the digit window: `digits[i]` is the coefficient of
    /// `p^{v+i}`. For a zero value this is the floor below which nothing is
    /// known, not a valuation.
    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Count of reliable digits.
    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// `Infinite` for a zero value, `Finite(v)` otherwise.
    pub fn valuation(&self) -> Valuation {
        if self.zero {
            Valuation::Infinite
        } else {
            Valuation::Finite(self.v)
        }
    }

    /// Exponent `k` such that the value is known modulo `p^k`.
    fn known_exponent(&self) -> i64 {
        self.v + self.digits.len() as i64
    }

    /// The digit window read as an integer (the unit part for nonzero values).
    fn unit_int(&self) -> BigInt {
        let p = BigInt::from(self.p);
        let mut acc = BigInt::zero();
        for &d in self.digits.iter().rev() {
            acc = acc * &p + BigInt::from(d);
        }
        acc
    }

    /// The canonical rational representative `sum digits[i]·p^{v+i}`.
    pub fn representative(&self) -> BigRational {
        if self.zero {
            return BigRational::zero();
        }
        BigRational::from(self.unit_int()) * pow_i64(&BigRational::from(BigInt::from(self.p)), self.v)
    }

    fn require_same_prime(&self, other: &Self) -> Result<(), PadicError> {
        if self.p != other.p {
            return Err(PadicError::PrimeMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    /// Sum, truncated to the shortest reliable digit window.
    ///
    /// Operands aligned at `m = min(v_a, v_b)` are each known modulo
    /// `p^{k_i}`; the sum is reliable modulo `p^{min(k_a, k_b)}` only.
    /// Cancellation raises the valuation and is renormalized; if every
    /// reliable digit cancels the result is zero at the combined precision.
    pub fn add(&self, other: &Self) -> Result<Self, PadicError> {
        self.require_same_prime(other)?;
        let k = self.known_exponent().min(other.known_exponent());
        let floor = self.v.min(other.v);
        let sum = self.representative() + other.representative();
        Ok(Self::from_rational_window(&sum, self.p, floor, k))
    }

    pub fn neg(&self) -> Self {
        if self.zero {
            return self.clone();
        }
        let pn = num_traits::pow(BigInt::from(self.p), self.digits.len());
        let unit = (&pn - self.unit_int()).mod_floor(&pn);
        Self {
            p: self.p,
            v: self.v,
            digits: digits_of(&unit, self.p, self.digits.len()),
            zero: false,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PadicError> {
        self.add(&other.neg())
    }

    /// Product; valuations add exactly, unit parts multiply modulo
    /// `p^{min(N_a, N_b)}`.
    pub fn mul(&self, other: &Self) -> Result<Self, PadicError> {
        self.require_same_prime(other)?;
        let n = self.digits.len().min(other.digits.len());
        if self.zero || other.zero {
            // |a·b|_p <= p^{-(k_a + v_b)} with k the known exponent of the
            // zero side and v the exact valuation (or known exponent) of the
            // other side.
            let bound = match (self.zero, other.zero) {
                (true, false) => self.known_exponent() + other.v,
                (false, true) => self.v + other.known_exponent(),
                _ => self.known_exponent() + other.known_exponent(),
            };
            return Ok(Self {
                p: self.p,
                v: bound - n as i64,
                digits: vec![0; n],
                zero: true,
            });
        }
        let pn = num_traits::pow(BigInt::from(self.p), n);
        let unit = (self.unit_int() * other.unit_int()).mod_floor(&pn);
        Ok(Self {
            p: self.p,
            v: self.v + other.v,
            digits: digits_of(&unit, self.p, n),
            zero: false,
        })
    }

    /// Multiplicative inverse: valuation negated, unit part inverted modulo
    /// `p^N`. Fails on a value that is zero at its precision.
    pub fn inv(&self) -> Result<Self, PadicError> {
        if self.zero {
            return Err(PadicError::ZeroAtPrecision(self.digits.len()));
        }
        let n = self.digits.len();
        let pn = num_traits::pow(BigInt::from(self.p), n);
        let unit = mod_inverse(&self.unit_int(), &pn)
            .expect("unit part is coprime to p by the digits[0] != 0 invariant");
        Ok(Self {
            p: self.p,
            v: -self.v,
            digits: digits_of(&unit, self.p, n),
            zero: false,
        })
    }

    /// Renormalizes an exact rational known modulo `p^k` into digit form,
    /// with `floor` a proven lower bound for its valuation.
    fn from_rational_window(x: &BigRational, p: u64, floor: i64, k: i64) -> Self {
        debug_assert!(floor < k);
        let v = match valuation(x, p).expect("prime validated by caller") {
            Valuation::Infinite => {
                return Self {
                    p,
                    v: floor,
                    digits: vec![0; (k - floor) as usize],
                    zero: true,
                };
            }
            Valuation::Finite(v) => v,
        };
        if v >= k {
            // all reliable digits cancelled
            return Self {
                p,
                v: floor,
                digits: vec![0; (k - floor) as usize],
                zero: true,
            };
        }
        let n = (k - v) as usize;
        Self {
            p,
            v,
            digits: unit_digits(x, p, v, n),
            zero: false,
        }
    }
}

impl fmt::Display for PAdicNumber {
    /// Fixed textual form: `p=<p> v=<v> digits=[d0,d1,...]`, digits
    /// little-endian (`digits[0]` is the `p^v` coefficient). A zero value
    /// prints all-zero digits; `digits[0] != 0` otherwise, so the two cases
    /// cannot be confused.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} v={} digits=[", self.p, self.v)?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

fn digits_of(unit: &BigInt, p: u64, n: usize) -> Vec<u64> {
    debug_assert!(!unit.is_negative());
    let p = BigInt::from(p);
    let mut digits = Vec::with_capacity(n);
    let mut m = unit.clone();
    for _ in 0..n {
        let (q, r) = m.div_rem(&p);
        digits.push(u64::try_from(r).expect("digit fits u64 since p fits u64"));
        m = q;
    }
    digits
}

/// First `n` base-p digits of the unit part of `x` (valuation `v` known),
/// by modular inversion of the denominator modulo `p^n`.
fn unit_digits(x: &BigRational, p: u64, v: i64, n: usize) -> Vec<u64> {
    let shifted = x * pow_i64(&BigRational::from(BigInt::from(p)), -v);
    let (num, den) = (shifted.numer(), shifted.denom());
    let pn = num_traits::pow(BigInt::from(p), n);
    let den_inv = mod_inverse(den, &pn).expect("denominator coprime to p after valuation split");
    let unit = (num * den_inv).mod_floor(&pn);
    digits_of(&unit, p, n)
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(modulus);
    let ext = a.extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(modulus))
}

/// Truncated p-adic expansion of a rational: valuation plus the first `n`
/// base-p digits of the unit part. The result is exact modulo `p^{v+n}`.
pub fn to_padic(x: &BigRational, p: u64, n: usize) -> Result<PAdicNumber, PadicError> {
    validate_prime(p)?;
    if n == 0 {
        return Err(PadicError::ZeroDigitCount);
    }
    if x.is_zero() {
        return Ok(PAdicNumber {
            p,
            v: 0,
            digits: vec![0; n],
            zero: true,
        });
    }
    let v = match valuation(x, p)? {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("nonzero rational"),
    };
    Ok(PAdicNumber {
        p,
        v,
        digits: unit_digits(x, p, v, n),
        zero: false,
    })
}

/// Sums a finite list of rationals into a p-adic value at `n` digits and
/// reports whether the series has converged at working precision.
///
/// A series of p-adic numbers converges iff its terms tend to zero, so at
/// precision `p^{-n}` convergence is detected when the final increment no
/// longer moves the partial sum: `|last|_p < p^{-n}`. With at most one term
/// there is no increment to test and the sum is trivially converged.
pub fn series_sum(
    terms: &[BigRational],
    p: u64,
    n: usize,
) -> Result<(PAdicNumber, bool), PadicError> {
    validate_prime(p)?;
    if n == 0 {
        return Err(PadicError::ZeroDigitCount);
    }
    let mut sum = BigRational::zero();
    for t in terms {
        sum += t;
    }
    let value = to_padic(&sum, p, n)?;
    let converged = match terms.last() {
        None => true,
        _ if terms.len() == 1 => true,
        Some(last) => match valuation(last, p)? {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v > n as i64,
        },
    };
    Ok((value, converged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn primality_by_trial_division() {
        for p in [2, 3, 5, 7, 11, 13, 97, 101] {
            assert!(validate_prime(p).is_ok());
        }
        for p in [0, 1, 4, 6, 9, 15, 91, 100] {
            assert_eq!(validate_prime(p), Err(PadicError::NotPrime(p)));
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&int(0), 7).unwrap(), Valuation::Infinite);
        assert_eq!(valuation(&int(12), 2).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation(&rat(9, 10), 3).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation(&rat(1, 12), 2).unwrap(), Valuation::Finite(-2));
        assert!(valuation(&int(3), 1).is_err());
    }

    #[test]
    fn integer_valuations_are_nonnegative() {
        for x in -50i64..=50 {
            if x == 0 {
                continue;
            }
            for p in [2, 3, 5] {
                let Valuation::Finite(n) = valuation(&int(x), p).unwrap() else {
                    panic!("nonzero integer has finite valuation");
                };
                assert!(n >= 0);
            }
        }
    }

    #[test]
    fn abs_examples() {
        assert_eq!(abs_p(&int(0), 5).unwrap(), int(0));
        assert_eq!(abs_p(&int(12), 2).unwrap(), rat(1, 4));
        assert_eq!(abs_p(&int(5), 2).unwrap(), int(1));
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist_p(&rat(22, 7), &rat(22, 7), 3).unwrap(), int(0));
        assert_eq!(dist_p(&int(1), &int(13), 2).unwrap(), rat(1, 4));
        assert_eq!(dist_p(&rat(1, 3), &rat(1, 2), 5).unwrap(), int(1));
    }

    #[test]
    fn expansion_examples() {
        let m1 = to_padic(&int(-1), 5, 4).unwrap();
        assert_eq!(m1.v(), 0);
        assert_eq!(m1.digits(), &[4, 4, 4, 4]);

        let third = to_padic(&rat(1, 3), 2, 4).unwrap();
        assert_eq!(third.v(), 0);
        assert_eq!(third.digits(), &[1, 1, 0, 1]);

        let half = to_padic(&rat(1, 2), 2, 3).unwrap();
        assert_eq!(half.v(), -1);
        assert_eq!(half.digits(), &[1, 0, 0]);
    }

    #[test]
    fn additive_inverse_cancels_to_zero_at_precision() {
        let a = to_padic(&int(-1), 5, 4).unwrap();
        let b = to_padic(&int(1), 5, 4).unwrap();
        let sum = a.add(&b).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.precision(), 4);
        assert_eq!(sum.valuation(), Valuation::Infinite);
    }

    #[test]
    fn multiplicative_inverse_pair() {
        let three = to_padic(&int(3), 2, 4).unwrap();
        let third = to_padic(&rat(1, 3), 2, 4).unwrap();
        let prod = three.mul(&third).unwrap();
        assert_eq!(prod.v(), 0);
        assert_eq!(prod.digits(), &[1, 0, 0, 0]);
    }

    #[test]
    fn valuations_add_under_multiplication() {
        let a = to_padic(&int(12), 2, 6).unwrap();
        let b = to_padic(&rat(1, 12), 2, 6).unwrap();
        assert_eq!(a.v() + b.v(), 0);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.v(), 0);
    }

    #[test]
    fn inversion_examples() {
        let i3 = to_padic(&int(3), 2, 4).unwrap().inv().unwrap();
        assert_eq!(i3.v(), 0);
        assert_eq!(i3.digits(), &[1, 1, 0, 1]);

        for p in [2, 5, 7] {
            let one = to_padic(&int(1), p, 5).unwrap();
            assert_eq!(one.inv().unwrap(), one);
        }

        let i2 = to_padic(&int(2), 2, 4).unwrap().inv().unwrap();
        assert_eq!(i2.v(), -1);
        assert_eq!(i2.digits(), &[1, 0, 0, 0]);
    }

    #[test]
    fn inverting_zero_fails() {
        let z = to_padic(&int(0), 3, 6).unwrap();
        assert_eq!(z.inv(), Err(PadicError::ZeroAtPrecision(6)));
    }

    #[test]
    fn prime_mismatch_rejected() {
        let a = to_padic(&int(1), 2, 4).unwrap();
        let b = to_padic(&int(1), 3, 4).unwrap();
        assert!(matches!(
            a.add(&b),
            Err(PadicError::PrimeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn geometric_series_sums_to_minus_one() {
        let terms: Vec<BigRational> = (0u32..64).map(|j| int(1i64 << j)).collect();
        let (value, converged) = series_sum(&terms, 2, 32).unwrap();
        assert!(converged);
        // 2^64 - 1 is congruent to -1 modulo 2^32: every digit is 1
        assert_eq!(value.v(), 0);
        assert!(value.digits().iter().all(|&d| d == 1));
        let m1 = to_padic(&int(-1), 2, 32).unwrap();
        assert_eq!(value, m1);
    }

    #[test]
    fn single_term_series_is_trivially_converged() {
        let (value, converged) = series_sum(&[int(1)], 7, 5).unwrap();
        assert!(converged);
        assert_eq!(value, to_padic(&int(1), 7, 5).unwrap());
    }

    #[test]
    fn constant_ones_do_not_converge() {
        let terms = vec![int(1); 64];
        let (value, converged) = series_sum(&terms, 2, 8).unwrap();
        assert!(!converged);
        assert_eq!(value, to_padic(&int(64), 2, 8).unwrap());
    }

    #[test]
    fn display_format_is_fixed() {
        let x = to_padic(&int(12), 2, 4).unwrap();
        assert_eq!(alloc::format!("{x}"), "p=2 v=2 digits=[1,1,0,0]");
        let z = to_padic(&int(0), 5, 3).unwrap();
        assert_eq!(alloc::format!("{z}"), "p=5 v=0 digits=[0,0,0]");
    }

    #[test]
    fn subtraction_matches_rational_oracle() {
        let x = rat(7, 3);
        let y = rat(5, 6);
        let a = to_padic(&x, 5, 8).unwrap();
        let b = to_padic(&y, 5, 8).unwrap();
        let diff = a.sub(&b).unwrap();
        let oracle = to_padic(&(x - y), 5, 8).unwrap();
        assert_eq!(diff, oracle);
    }

    /// Round trip: the representative of `to_padic(x, p, n)` agrees with `x`
    /// modulo `p^{v+n}`.
    fn round_trip_ok(x: &BigRational, p: u64, n: usize) -> bool {
        let q = to_padic(x, p, n).unwrap();
        let diff = x - q.representative();
        match valuation(&diff, p).unwrap() {
            Valuation::Infinite => true,
            Valuation::Finite(d) => d >= q.v() + n as i64,
        }
    }

    #[test]
    fn round_trip_spot_checks() {
        for p in [2u64, 3, 5, 7] {
            for (num, den) in [(1i64, 3i64), (-7, 12), (22, 7), (100, 1), (-1, 640)] {
                assert!(round_trip_ok(&rat(num, den), p, 10));
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rational() -> impl Strategy<Value = BigRational> {
            (-1_000_000i64..=1_000_000, 1i64..=1_000_000)
                .prop_map(|(n, d)| rat(n, d))
        }

        fn arb_prime() -> impl Strategy<Value = u64> {
            prop::sample::select(alloc::vec![2u64, 3, 5, 7, 11])
        }

        proptest! {
            #[test]
            fn ultrametric_inequality(x in arb_rational(), y in arb_rational(), p in arb_prime()) {
                let lhs = abs_p(&(&x + &y), p).unwrap();
                let rhs = abs_p(&x, p).unwrap().max(abs_p(&y, p).unwrap());
                prop_assert!(lhs <= rhs);
            }

            #[test]
            fn multiplicativity(x in arb_rational(), y in arb_rational(), p in arb_prime()) {
                let lhs = abs_p(&(&x * &y), p).unwrap();
                let rhs = abs_p(&x, p).unwrap() * abs_p(&y, p).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn round_trip(x in arb_rational(), p in arb_prime(), n in 1usize..=12) {
                prop_assert!(round_trip_ok(&x, p, n));
            }

            #[test]
            fn arithmetic_matches_rational_oracle(
                x in arb_rational(),
                y in arb_rational(),
                p in arb_prime(),
            ) {
                let n = 12;
                let a = to_padic(&x, p, n).unwrap();
                let b = to_padic(&y, p, n).unwrap();

                let sum = a.add(&b).unwrap();
                let sum_oracle = to_padic(&(&x + &y), p, n).unwrap();
                // truncate the oracle to the precision the sum actually has
                prop_assert!(agree_at_shared_precision(&sum, &sum_oracle));

                let prod = a.mul(&b).unwrap();
                let prod_oracle = to_padic(&(&x * &y), p, n).unwrap();
                prop_assert!(agree_at_shared_precision(&prod, &prod_oracle));
            }
        }

        /// Two values agree if their representatives are congruent modulo
        /// p^k at the smaller known exponent.
        fn agree_at_shared_precision(a: &PAdicNumber, b: &PAdicNumber) -> bool {
            let k = (a.v() + a.precision() as i64).min(b.v() + b.precision() as i64);
            let diff = a.representative() - b.representative();
            match valuation(&diff, a.p()).unwrap() {
                Valuation::Infinite => true,
                Valuation::Finite(d) => d >= k,
            }
        }
    }
}

//! Exact real numbers of the form `q0 + q1·√5 + q2·√2 + q3·√3`.
//!
//! The basis `(1, √5, √2, √3)` is linearly independent over the rationals,
//! so two values are equal exactly when their coefficient vectors are. Order
//! is decided by rational enclosures of the surds that are refined until the
//! enclosure of the difference excludes zero.
//!
//! [`Lin`] is generic over the coefficient field; the crate root exposes the
//! arbitrary-precision alias [`QLin`](crate::QLin) used by everything else.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Radicands of the basis elements, in coefficient order.
pub const BASIS: [u32; 4] = [1, 5, 2, 3];

const DEFAULT_START_DIGITS: u32 = 6;

static START_DIGITS: AtomicU32 = AtomicU32::new(DEFAULT_START_DIGITS);

/// Rational scalar usable as a coefficient of [`Lin`].
pub trait Coefficient:
    Clone + Ord + Hash + fmt::Debug + Signed + FromPrimitive + Send + Sync + 'static
{
    fn to_big_rational(&self) -> BigRational;

    /// `None` when the value does not fit the coefficient type.
    fn from_big_rational(q: &BigRational) -> Option<Self>;
}

impl Coefficient for BigRational {
    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_big_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

impl Coefficient for Ratio<i64> {
    fn to_big_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_big_rational(q: &BigRational) -> Option<Self> {
        Some(Ratio::new(q.numer().to_i64()?, q.denom().to_i64()?))
    }
}

/// Starting precision of enclosure refinement, as a number of decimal digits.
pub fn start_digits() -> u32 {
    START_DIGITS.load(AtomicOrdering::Relaxed)
}

/// Sets the starting enclosure precision to the smallest power of ten not
/// exceeding `precision`. Non-positive values are ignored.
pub fn set_start_precision(precision: &BigRational) {
    if !precision.is_positive() {
        return;
    }
    let mut digits = 0u32;
    let mut scale = BigRational::one();
    while &scale > precision {
        scale /= BigRational::from_integer(BigInt::from(10));
        digits += 1;
    }
    START_DIGITS.store(digits.max(1), AtomicOrdering::Relaxed);
}

/// A closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enclosure {
    #[serde(serialize_with = "ser_rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: BigRational,
}

impl Enclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

thread_local! {
    static SURD_FLOORS: RefCell<HashMap<(u32, u32), BigInt>> = RefCell::new(HashMap::new());
}

fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

/// `floor(√k · 10^digits)`.
fn surd_floor(k: u32, digits: u32) -> BigInt {
    SURD_FLOORS.with(|cache| {
        cache
            .borrow_mut()
            .entry((k, digits))
            .or_insert_with(|| {
                let scale = pow10(digits);
                (BigInt::from(k) * &scale * &scale).sqrt()
            })
            .clone()
    })
}

/// Exact real `Σ coeffs[i]·√BASIS[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<Q> {
    coeffs: [Q; 4],
}

impl<Q: Coefficient> Lin<Q> {
    pub fn new(coeffs: [Q; 4]) -> Self {
        Lin { coeffs }
    }

    pub fn zero() -> Self {
        Lin::new([Q::zero(), Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn one() -> Self {
        Lin::rational(Q::one())
    }

    pub fn rational(q: Q) -> Self {
        Lin::new([q, Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn integer(n: i64) -> Self {
        Lin::rational(Q::from_i64(n).expect("integer fits coefficient type"))
    }

    /// The rational `num/den`. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let n = Q::from_i64(num).expect("integer fits coefficient type");
        let d = Q::from_i64(den).expect("integer fits coefficient type");
        Lin::rational(n / d)
    }

    /// `√BASIS[index]` itself.
    pub fn unit(index: usize) -> Self {
        let mut v = Lin::zero();
        v.coeffs[index] = Q::one();
        v
    }

    pub fn sqrt5() -> Self {
        Lin::unit(1)
    }

    pub fn sqrt2() -> Self {
        Lin::unit(2)
    }

    pub fn sqrt3() -> Self {
        Lin::unit(3)
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Q {
        &self.coeffs[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every surd coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, q: &Q) -> Self {
        Lin::new(self.coeffs.clone().map(|c| c * q.clone()))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Q::from_i64(n).expect("integer fits coefficient type"))
    }

    fn big_coeffs(&self) -> [BigRational; 4] {
        self.coeffs.clone().map(|c| c.to_big_rational())
    }

    /// Integer enclosure `[lo, hi] / den` at `digits` decimal digits.
    fn scaled_enclosure(&self, digits: u32) -> (BigInt, BigInt, BigInt) {
        let coeffs = self.big_coeffs();
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = pow10(digits);
        let exact = coeffs[0].numer() * (&lcm / coeffs[0].denom()) * &scale;
        let mut lo = exact.clone();
        let mut hi = exact;
        for (i, c) in coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let weight = c.numer() * (&lcm / c.denom());
            let floor = surd_floor(BASIS[i], digits);
            let below = &weight * &floor;
            let above = &weight * (floor + 1u32);
            if weight.is_positive() {
                lo += below;
                hi += above;
            } else {
                lo += above;
                hi += below;
            }
        }
        (lo, hi, lcm * scale)
    }

    /// Rational enclosure at a fixed number of decimal digits of each surd.
    pub fn enclosure_at(&self, digits: u32) -> Enclosure {
        let (lo, hi, den) = self.scaled_enclosure(digits);
        Enclosure {
            lo: BigRational::new(lo, den.clone()),
            hi: BigRational::new(hi, den),
        }
    }

    /// Enclosure of width at most `width`. Panics if `width` is not positive.
    pub fn enclose(&self, width: &BigRational) -> Enclosure {
        assert!(width.is_positive(), "enclosure width must be positive");
        let spread: BigRational = self.big_coeffs()[1..].iter().map(|c| c.abs()).sum();
        if spread.is_zero() {
            let q = self.coeffs[0].to_big_rational();
            return Enclosure { lo: q.clone(), hi: q };
        }
        let mut digits = start_digits();
        while &spread / BigRational::from_integer(pow10(digits)) > *width {
            digits *= 2;
        }
        self.enclosure_at(digits)
    }

    /// Sign of a single-surd value `c0 + c·√k`, decided exactly.
    fn quadratic_sign(&self) -> Option<Ordering> {
        let nonzero: Vec<usize> = (1..4).filter(|&i| !self.coeffs[i].is_zero()).collect();
        if nonzero.len() > 1 {
            return None;
        }
        let c0 = &self.coeffs[0];
        let Some(&i) = nonzero.first() else {
            return Some(c0.cmp(&Q::zero()));
        };
        let c = &self.coeffs[i];
        let s0 = c0.cmp(&Q::zero());
        let s1 = c.cmp(&Q::zero());
        if s0 == Ordering::Equal || s0 == s1 {
            return Some(s1);
        }
        let c0 = c0.to_big_rational();
        let c = c.to_big_rational();
        let k = BigRational::from_integer(BigInt::from(BASIS[i]));
        if &c0 * &c0 > k * &c * &c {
            Some(s0)
        } else {
            Some(s1)
        }
    }

    /// Sign of the value relative to zero.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if let Some(sign) = self.quadratic_sign() {
            return sign;
        }
        self.refined_sign()
    }

    /// Sign by enclosure refinement alone, with no exact shortcut past zero.
    pub fn refined_sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut digits = start_digits();
        loop {
            let (lo, hi, _) = self.scaled_enclosure(digits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            digits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// The greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.coeffs[0].to_big_rational().floor().to_integer();
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let enc = self.enclose(&half);
        let top = enc.hi.floor().to_integer();
        if enc.lo.floor().to_integer() == top {
            return top;
        }
        let candidate = Lin::rational(
            Q::from_big_rational(&BigRational::from_integer(top.clone()))
                .expect("integer part fits coefficient type"),
        );
        if *self >= candidate {
            top
        } else {
            top - 1
        }
    }

    /// `self − n` for the unique integer `n` with `0 ≤ self − n < 1`.
    pub fn frac(&self) -> Self {
        let n = self.floor();
        if n.is_zero() {
            return self.clone();
        }
        let n = Q::from_big_rational(&BigRational::from_integer(n))
            .expect("integer part fits coefficient type");
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].clone() - n;
        out
    }

    pub fn to_f64(&self) -> f64 {
        let enc = self.enclosure_at(24);
        enc.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// True when the values are linearly independent over the rationals.
pub fn linearly_independent<Q: Coefficient>(values: &[Lin<Q>]) -> bool {
    rank(values) == values.len()
}

/// Rank over the rationals of the coefficient vectors.
pub fn rank<Q: Coefficient>(values: &[Lin<Q>]) -> usize {
    let mut rows: Vec<[BigRational; 4]> = values.iter().map(|v| v.big_coeffs()).collect();
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for k in col..4 {
                row[k] = &row[k] - &factor * &pivot_row[k];
            }
        }
        rank += 1;
    }
    rank
}

impl<Q: Coefficient> Ord for Lin<Q> {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self.clone() - other.clone()).signum()
    }
}

impl<Q: Coefficient> PartialOrd for Lin<Q> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<Q: Coefficient> Add for Lin<Q> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<'a, Q: Coefficient> Add<&'a Lin<Q>> for &'a Lin<Q> {
    type Output = Lin<Q>;

    fn add(self, rhs: &'a Lin<Q>) -> Lin<Q> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<Q: Coefficient> AddAssign<&Lin<Q>> for Lin<Q> {
    fn add_assign(&mut self, rhs: &Lin<Q>) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a = a.clone() + b.clone();
            }
        }
    }
}

impl<Q: Coefficient> Sub for Lin<Q> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'a, Q: Coefficient> Sub<&'a Lin<Q>> for &'a Lin<Q> {
    type Output = Lin<Q>;

    fn sub(self, rhs: &'a Lin<Q>) -> Lin<Q> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<Q: Coefficient> SubAssign<&Lin<Q>> for Lin<Q> {
    fn sub_assign(&mut self, rhs: &Lin<Q>) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a = a.clone() - b.clone();
            }
        }
    }
}

impl<Q: Coefficient> Neg for Lin<Q> {
    type Output = Self;

    fn neg(self) -> Self {
        Lin::new(self.coeffs.map(|c| -c))
    }
}

impl<Q: Coefficient> Mul<Q> for Lin<Q> {
    type Output = Self;

    fn mul(self, rhs: Q) -> Self {
        self.scale(&rhs)
    }
}

impl<Q: Coefficient> std::iter::Sum for Lin<Q> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Lin::zero(), |acc, v| acc + v)
    }
}

impl<Q: Coefficient> fmt::Display for Lin<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_big_rational();
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "√{}", BASIS[i])?;
            } else {
                write!(f, "{mag}·√{}", BASIS[i])?;
            }
        }
        Ok(())
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let whole = BigInt::from_str(&format!("{}{}", int.trim_start_matches('-'), frac))
            .map_err(|_| err())?;
        let whole = if negative { -whole } else { whole };
        return Ok(BigRational::new(whole, pow10(frac.len() as u32)));
    }
    BigInt::from_str(text)
        .map(BigRational::from_integer)
        .map_err(|_| err())
}

impl<Q: Coefficient> Serialize for Lin<Q> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| rational_string(&c.to_big_rational()))
            .collect();
        parts.serialize(s)
    }
}

impl<'de, Q: Coefficient> Deserialize<'de> for Lin<Q> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        if parts.len() != 4 {
            return Err(D::Error::invalid_length(parts.len(), &"four coefficients"));
        }
        let mut coeffs = Vec::with_capacity(4);
        for p in &parts {
            let q = parse_rational(p).map_err(D::Error::custom)?;
            coeffs.push(
                Q::from_big_rational(&q)
                    .ok_or_else(|| D::Error::custom("coefficient out of range"))?,
            );
        }
        let coeffs: [Q; 4] = coeffs.try_into().expect("length checked");
        Ok(Lin::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QLin;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn alpha() -> QLin {
        (QLin::sqrt5() - QLin::one()).scale(&q(1, 2))
    }

    #[test]
    fn coefficientwise_arithmetic() {
        let a = alpha();
        assert_eq!(&a + &a, QLin::new([q(-1, 1), q(1, 1), q(0, 1), q(0, 1)]));
        assert!((&a - &a).is_zero());
        let eta1 = QLin::integer(5) + QLin::sqrt2();
        assert_eq!(
            &eta1 + &a,
            QLin::new([q(9, 2), q(1, 2), q(1, 1), q(0, 1)])
        );
    }

    #[test]
    fn comparisons() {
        let a = alpha();
        assert_eq!(a.cmp(&a), Ordering::Equal);
        let gamma = QLin::sqrt5() - QLin::integer(2);
        assert_eq!(gamma.cmp(&QLin::ratio(1, 4)), Ordering::Less);
        assert_eq!(a.cmp(&QLin::ratio(1, 2)), Ordering::Greater);
        // four-term values go through the refinement route
        let x = QLin::sqrt2() + QLin::sqrt3();
        let y = QLin::sqrt5() + QLin::ratio(7, 5);
        // √2+√3 ≈ 3.1463, √5+1.4 ≈ 3.6361
        assert!(x < y);
    }

    #[test]
    fn refinement_separates_close_values() {
        // √2 + √3 − √5 − 0.9100 ≈ 0.000007...
        let v = QLin::sqrt2() + QLin::sqrt3() - QLin::sqrt5() - QLin::ratio(9100, 10000);
        let approx = 2f64.sqrt() + 3f64.sqrt() - 5f64.sqrt() - 0.91;
        let expected = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
        assert_eq!(v.refined_sign(), expected);
    }

    #[test]
    fn frac_cases() {
        let a = alpha();
        assert_eq!((&a + &a).frac(), QLin::sqrt5() - QLin::integer(2));
        assert_eq!(QLin::ratio(1, 7).frac(), QLin::ratio(1, 7));
        assert_eq!(
            (-a).frac(),
            (QLin::integer(3) - QLin::sqrt5()).scale(&q(1, 2))
        );
        assert_eq!(QLin::integer(-3).frac(), QLin::zero());
    }

    #[test]
    fn enclosures() {
        let z = QLin::zero().enclose(&q(1, 1000));
        assert_eq!((z.lo, z.hi), (q(0, 1), q(0, 1)));
        let e = alpha().enclose(&q(1, 100));
        assert!(e.width() <= q(1, 100));
        assert!(e.lo < q(618034, 1000000) && e.hi > q(618033, 1000000));
        let eta2 = QLin::integer(5) + QLin::sqrt3();
        let e = eta2.enclose(&q(1, 10));
        assert!(e.lo < q(67321, 10000) && e.hi > q(67320, 10000));
    }

    #[test]
    fn rank_of_parameters() {
        let eta1 = QLin::integer(5) + QLin::sqrt2();
        let eta2 = QLin::integer(5) + QLin::sqrt3();
        assert!(linearly_independent(&[QLin::one(), alpha(), eta1.clone(), eta2]));
        assert!(!linearly_independent(&[QLin::one(), alpha(), eta1.clone(), eta1]));
    }

    #[test]
    fn parse_and_serialize() {
        assert_eq!(parse_rational("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), q(-1, 4));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        let json = serde_json::to_string(&alpha()).unwrap();
        assert_eq!(json, r#"["-1/2","1/2","0/1","0/1"]"#);
        let back: QLin = serde_json::from_str(&json).unwrap();
        assert_eq!(back, alpha());
    }

    #[test]
    fn small_coefficient_alias() {
        use crate::QLin64;
        let a = QLin64::sqrt5() - QLin64::one();
        assert_eq!((a.clone() + a.clone()).frac(), QLin64::sqrt5().scale_int(2) - QLin64::integer(4));
        assert!(a > QLin64::one());
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-2000i64..2000, 1i64..500).prop_map(|(n, d)| q(n, d))
    }

    fn value() -> impl Strategy<Value = QLin> {
        proptest::array::uniform4(small_rational()).prop_map(QLin::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn compare_agrees_with_deep_enclosures(a in value(), b in value()) {
            let ord = a.cmp(&b);
            prop_assert_eq!(ord == Ordering::Equal, a.coeffs() == b.coeffs());
            if ord != Ordering::Equal {
                let da = a.enclosure_at(64);
                let db = b.enclosure_at(64);
                match ord {
                    Ordering::Less => prop_assert!(da.lo < db.hi),
                    _ => prop_assert!(da.hi > db.lo),
                }
                // disjoint at 64 digits unless the values are extremely close
                if da.hi < db.lo {
                    prop_assert_eq!(ord, Ordering::Less);
                } else if db.hi < da.lo {
                    prop_assert_eq!(ord, Ordering::Greater);
                }
            }
        }

        #[test]
        fn frac_is_idempotent_and_in_range(a in value()) {
            let f = a.frac();
            prop_assert_eq!(f.frac(), f.clone());
            prop_assert!(f >= QLin::zero());
            prop_assert!(f < QLin::one());
            prop_assert!((&a - &f).is_rational());
        }

        #[test]
        fn enclosure_contains_value(a in value(), w in 1i64..1000) {
            let width = q(1, w);
            let coarse = a.enclose(&width);
            prop_assert!(coarse.width() <= width);
            let fine = a.enclosure_at(40);
            prop_assert!(coarse.lo <= fine.hi && fine.lo <= coarse.hi);
        }
    }
}

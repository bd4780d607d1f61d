//! Exact Laurent polynomials in one variable `A` and their formal quotients.
//!
//! Every invariant in this crate lives in `Z[A, A^-1]`. Coefficients are
//! arbitrary-precision integers, so state sums never overflow.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("substitution A -> A^0 is not invertible")]
    ZeroSubstitution,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A Laurent polynomial `sum c_e A^e` with integer coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `A^(low + k)`. Both ends
/// are trimmed, so the first and last coefficients are nonzero; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// The variable `A` itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i32, coeffs }
    }

    /// `-A^2 - A^-2`, the value of a closed loop in the bracket.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// `A^2 + A^-2`.
    pub fn phi() -> Self {
        Self::from_terms([(2, 1), (-2, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = i64::from(e) - i64::from(self.low);
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in decreasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Returns `Some((c, e))` when the polynomial is a single term `c A^e`.
    pub fn as_monomial(&self) -> Option<(BigInt, i32)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }

    /// Multiplication by `A^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `A -> A^k`.
    pub fn substitute_power(&self, k: i32) -> Result<Self, LaurentError> {
        if k == 0 {
            return Err(LaurentError::ZeroSubstitution);
        }
        Ok(Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone()))))
    }

    /// Evaluates this polynomial at `A = x`. Only nonnegative exponents are
    /// allowed, since `x` need not be invertible.
    pub fn compose(&self, x: &LaurentPoly) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(self.low >= 0, "compose needs a polynomial without negative powers");
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc += &Self::constant(c.clone());
        }
        acc.shift_pow(x, self.low as u32)
    }

    fn shift_pow(self, x: &LaurentPoly, n: u32) -> Self {
        if n == 0 {
            self
        } else {
            &self * &x.pow(n)
        }
    }

    /// Exact division by `d`. Returns `None` when `d` does not divide `self`
    /// in `Z[A, A^-1]` or `d` is zero.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dl = d.coeffs.last().unwrap();
        let dn = d.coeffs.len();
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let qn = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % dl).is_zero() {
                return None;
            }
            let q = top / dl;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, quot))
    }

    fn add_scaled(&mut self, other: &LaurentPoly, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other } else { other.clone() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.drain(..).enumerate() {
            coeffs[(self.low - low) as usize + k] = c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + k];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        *self = Self::from_dense(low, coeffs);
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, true);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
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
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Canonical text form: terms in strictly decreasing exponent order,
/// `c*A^e`, with `A^0` elided and unit coefficients written as a sign.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("A")?,
                1 => write!(f, "{mag}*A")?,
                _ if unit => write!(f, "A^{e}")?,
                _ => write!(f, "{mag}*A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| LaurentError::Parse { input: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms; a '-' directly after '^' belongs to an exponent
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != '^' && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = ch;
        }
        terms.push(cur);

        let mut out = Vec::new();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coef, exp) = if let Some(pos) = body.find('A') {
                let coef_part = &body[..pos];
                let coef: BigInt = if coef_part.is_empty() {
                    BigInt::one()
                } else {
                    let digits = coef_part.strip_suffix('*').ok_or_else(|| err("expected '*' before A"))?;
                    digits.parse().map_err(|_| err("bad coefficient"))?
                };
                let rest = &body[pos + 1..];
                let exp: i32 = if rest.is_empty() {
                    1
                } else {
                    let digits = rest.strip_prefix('^').ok_or_else(|| err("expected '^' after A"))?;
                    digits.parse().map_err(|_| err("bad exponent"))?
                };
                (coef, exp)
            } else {
                (body.parse::<BigInt>().map_err(|_| err("bad constant"))?, 0)
            };
            out.push((exp, if neg { -coef } else { coef }));
        }
        Ok(Self::from_terms(out))
    }
}

/// A formal quotient `num / den` of Laurent polynomials.
///
/// Never reduced; equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// `1 / p`.
    pub fn recip_of(p: LaurentPoly) -> Result<Self, LaurentError> {
        Self::new(LaurentPoly::one(), p)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this quotient equals, when the denominator divides.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self { num: &self.num * p, den: self.den.clone() }
    }

    pub fn shift(&self, e: i32) -> Self {
        Self { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn substitute_power(&self, k: i32) -> Result<Self, LaurentError> {
        Ok(Self { num: self.num.substitute_power(k)?, den: self.den.substitute_power(k)? })
    }

    /// Same value with the denominator divided out when it divides the
    /// numerator, and with a positive leading denominator coefficient.
    pub fn tidy(&self) -> Self {
        if let Some(q) = self.to_laurent() {
            return q.into();
        }
        let negative = self.den.terms().next().is_some_and(|(_, c)| c.is_negative());
        if negative {
            Self { num: -&self.num, den: -&self.den }
        } else {
            self.clone()
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl PartialEq<LaurentPoly> for RationalFn {
    fn eq(&self, other: &LaurentPoly) -> bool {
        self.num == other * &self.den
    }
}

/// `true` iff `r` and `s` are equal as rational functions.
pub fn rational_equals(r: &RationalFn, s: &RationalFn) -> bool {
    r == s
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RationalFn { num: &self.num * &rhs.den + &rhs.num * &self.den, den: &self.den * &rhs.den }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned_rational {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned_rational!(Add, add);
forward_owned_rational!(Sub, sub);
forward_owned_rational!(Mul, mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |acc, r| &acc + &r)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl FromStr for RationalFn {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = |reason: &str| LaurentError::Parse { input: s.to_string(), reason: reason.to_string() };
        let Some((n, d)) = t.split_once(") / (") else {
            return Ok(t.parse::<LaurentPoly>()?.into());
        };
        let n = n.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let d = d.strip_suffix(')').ok_or_else(|| err("expected ')'"))?;
        RationalFn::new(n.parse()?, d.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn phi() -> LaurentPoly {
        LaurentPoly::phi()
    }

    fn inv(q: LaurentPoly) -> RationalFn {
        RationalFn::recip_of(q).unwrap()
    }

    #[test]
    fn square_of_a_plus_inverse() {
        let x = p("A + A^-1");
        assert_eq!(&x * &x, p("A^2 + 2 + A^-2"));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = p("3*A^5 - A + 7 - 2*A^-9");
        assert!((&x + &(-&x)).is_zero());
        assert_eq!((&x - &x).to_string(), "0");
    }

    #[test]
    fn delta_squared_equals_phi_squared() {
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, p("A^4 + 2 + A^-4"));
        assert_eq!(&d * &d, &phi() * &phi());
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p("A + 1 + A^-1").substitute_power(4).unwrap(), p("A^4 + 1 + A^-4"));
        let q = p("5*A^3 - A^-2 + 4");
        assert_eq!(q.substitute_power(1).unwrap(), q);
        assert_eq!(phi().substitute_power(-1).unwrap(), p("A^-2 + A^2"));
        assert_eq!(q.substitute_power(0), Err(LaurentError::ZeroSubstitution));
    }

    #[test]
    fn rational_examples() {
        let a = inv(phi());
        assert_eq!(&a + &a, RationalFn::new(LaurentPoly::constant(2), phi()).unwrap());

        let lhs = RationalFn::new(&phi() * &phi() - LaurentPoly::one(), phi()).unwrap();
        let rhs = RationalFn::from(phi()) - inv(phi());
        assert_eq!(lhs, rhs);

        // (1/phi) * (-3 phi + 3/phi) - 1/phi^2 = -3 + 2/phi^2
        let three_unknots = RationalFn::from(phi().scale(&BigInt::from(-3))) + inv(phi()).scale_poly(&LaurentPoly::constant(3));
        let lhs = &inv(phi()) * &three_unknots - inv(&phi() * &phi());
        let rhs = RationalFn::from(LaurentPoly::constant(-3)) + RationalFn::new(LaurentPoly::constant(2), &phi() * &phi()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_equality_examples() {
        let zero_a = RationalFn::new(LaurentPoly::zero(), phi()).unwrap();
        let zero_b = RationalFn::new(LaurentPoly::zero(), &phi() * &phi()).unwrap();
        assert!(rational_equals(&zero_a, &zero_b));
        assert!(rational_equals(&inv(phi()), &RationalFn::new(p("A^-2"), p("1 + A^-4")).unwrap()));
        assert!(!rational_equals(&inv(phi()), &inv(&phi() * &phi())));
        assert_eq!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).unwrap_err(), LaurentError::ZeroDenominator);
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let y = -p("A^2 + A + 2 + A^-1 + A^-2");
        assert_eq!(y.to_string(), "-A^2 - A - 2 - A^-1 - A^-2");
        assert_eq!(LaurentPoly::delta().to_string(), "-A^2 - A^-2");
        assert_eq!(p("-3*A^4 - 4 - 3*A^-4").to_string(), "-3*A^4 - 4 - 3*A^-4");
        assert_eq!(p("2*A - A^-1").to_string(), "2*A - A^-1");
        let r = RationalFn::new(LaurentPoly::one(), phi()).unwrap();
        assert_eq!(r.to_string(), "(1) / (A^2 + A^-2)");
    }

    #[test]
    fn exact_division() {
        let a = p("A^3 - 2 + A^-7");
        let b = p("-A^2 + 5*A - A^-3");
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert!(p("A + 1").div_exact(&p("A + 2")).is_none());
    }

    #[test]
    fn compose_evaluates_polynomial() {
        // t^2 - 3t + 2 at t = A + 2 + A^-1
        let f = p("A^2 - 3*A + 2");
        let t = p("A + 2 + A^-1");
        assert_eq!(f.compose(&t), p("A^2 + A + 2 + A^-1 + A^-2"));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn no_stored_zero_coefficients(a in arb_poly(), b in arb_poly()) {
            for q in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(q.terms().all(|(_, c)| !c.is_zero()));
                if let (Some(lo), Some(hi)) = (q.min_exp(), q.max_exp()) {
                    prop_assert!(!q.coeff(lo).is_zero() && !q.coeff(hi).is_zero());
                }
            }
        }

        #[test]
        fn substitution_composes(a in arb_poly(), k in prop::sample::select(vec![-3, -2, -1, 1, 2, 3, 4]), m in prop::sample::select(vec![-2, -1, 1, 2, 5])) {
            let twice = a.substitute_power(k).unwrap().substitute_power(m).unwrap();
            prop_assert_eq!(twice, a.substitute_power(k * m).unwrap());
        }

        #[test]
        fn canonical_string_round_trips(a in arb_poly()) {
            let back: LaurentPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn rational_equality_is_an_equivalence(n in arb_poly(), d in arb_poly(), k1 in arb_poly(), k2 in arb_poly()) {
            prop_assume!(!d.is_zero() && !k1.is_zero() && !k2.is_zero());
            let r = RationalFn::new(n.clone(), d.clone()).unwrap();
            let s = RationalFn::new(&n * &k1, &d * &k1).unwrap();
            let t = RationalFn::new(&n * &k2, &d * &k2).unwrap();
            prop_assert!(rational_equals(&r, &r));
            prop_assert_eq!(rational_equals(&r, &s), rational_equals(&s, &r));
            prop_assert!(rational_equals(&r, &s) && rational_equals(&s, &t) && rational_equals(&r, &t));
            let back: RationalFn = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }
    }
}

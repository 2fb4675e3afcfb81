//! Exact arithmetic in `Q(i, √2)`.
//!
//! A [`Scalar`] is `a + b·i + c·√2 + d·i·√2` with rational components kept in
//! lowest terms. Internally the field is treated as the Gaussian extension of
//! `Q(√2)`: `(a + c√2) + (b + d√2)·i`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Element of `Q(i, √2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `x*y` treating exact zeros as free.
fn prod(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() || y.is_zero() {
        BigRational::zero()
    } else {
        x * y
    }
}

/// Multiply in `Q(√2)`: `(p0 + p1√2)(q0 + q1√2)`.
fn qs_mul(p0: &BigRational, p1: &BigRational, q0: &BigRational, q1: &BigRational) -> (BigRational, BigRational) {
    let two = rat(2);
    let r0 = prod(p0, q0) + prod(&prod(p1, q1), &two);
    let r1 = prod(p0, q1) + prod(p1, q0);
    (r0, r1)
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one(), BigRational::zero(), BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero(), BigRational::one(), BigRational::zero())
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    /// `re + im·i` with rational parts.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::new(re, im, BigRational::zero(), BigRational::zero())
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }
    pub fn b(&self) -> &BigRational {
        &self.b
    }
    pub fn c(&self) -> &BigRational {
        &self.c
    }
    pub fn d(&self) -> &BigRational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The value as a machine integer when it is one.
    pub fn to_integer(&self) -> Option<i64> {
        if self.b.is_zero() && self.c.is_zero() && self.d.is_zero() && self.a.is_integer() {
            self.a.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Complex conjugation: `i ↦ −i`, `√2` fixed.
    pub fn conj(&self) -> Self {
        Scalar::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        match k {
            0 => Scalar::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => {
                let r = rat(k);
                Scalar::new(prod(&self.a, &r), prod(&self.b, &r), prod(&self.c, &r), prod(&self.d, &r))
            }
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Scalar::new(prod(&self.a, r), prod(&self.b, r), prod(&self.c, r), prod(&self.d, r))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(p + q i) = (p − q i)/(p² + q²), with p, q ∈ Q(√2).
        let (pp0, pp1) = qs_mul(&self.a, &self.c, &self.a, &self.c);
        let (qq0, qq1) = qs_mul(&self.b, &self.d, &self.b, &self.d);
        let n0 = pp0 + qq0;
        let n1 = pp1 + qq1;
        // 1/(n0 + n1√2) = (n0 − n1√2)/(n0² − 2n1²); the norm is nonzero since √2 ∉ Q.
        let norm = &n0 * &n0 - rat(2) * &n1 * &n1;
        let m0 = &n0 / &norm;
        let m1 = -(&n1 / &norm);
        let (re0, re1) = qs_mul(&self.a, &self.c, &m0, &m1);
        let (im0, im1) = qs_mul(&self.b, &self.d, &m0, &m1);
        Ok(Scalar::new(re0, -im0, re1, -im1))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Number of nonzero rational components.
    pub fn component_count(&self) -> usize {
        [&self.a, &self.b, &self.c, &self.d].iter().filter(|r| !r.is_zero()).count()
    }

    /// Parse the text form: integers, `i`, `r2`, `+ - * /` and parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = ScalarParser { src: text.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(Error::parse(p.pos + 1, "unexpected trailing input"));
        }
        Ok(v)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_rational(rat(n))
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b, &self.c + &rhs.c, &self.d + &rhs.d)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c, &self.d - &rhs.d)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Fast path: both Gaussian rationals.
        if self.c.is_zero() && self.d.is_zero() && rhs.c.is_zero() && rhs.d.is_zero() {
            let re = prod(&self.a, &rhs.a) - prod(&self.b, &rhs.b);
            let im = prod(&self.a, &rhs.b) + prod(&self.b, &rhs.a);
            return Scalar::gaussian(re, im);
        }
        let (rr0, rr1) = qs_mul(&self.a, &self.c, &rhs.a, &rhs.c);
        let (ii0, ii1) = qs_mul(&self.b, &self.d, &rhs.b, &rhs.d);
        let (ri0, ri1) = qs_mul(&self.a, &self.c, &rhs.b, &rhs.d);
        let (ir0, ir1) = qs_mul(&self.b, &self.d, &rhs.a, &rhs.c);
        Scalar::new(rr0 - ii0, ri0 + ir0, rr1 - ii1, ri1 + ir1)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(&self.a, ""), (&self.b, "i"), (&self.c, "r2"), (&self.d, "i*r2")];
        let mut first = true;
        for (value, unit) in parts {
            if value.is_zero() {
                continue;
            }
            let negative = value.is_negative();
            let mag = value.abs();
            let body = match (unit.is_empty(), mag.is_one()) {
                (true, _) => fmt_rational(&mag),
                (false, true) => unit.to_string(),
                (false, false) => format!("{}*{}", fmt_rational(&mag), unit),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ScalarParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    let col = self.pos + 1;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|_| Error::parse(col, "division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        let col = self.pos + 1;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos + 1, "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().map_err(|_| Error::parse(col, "bad integer"))?;
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Scalar::i())
            }
            Some(b'r') if self.src.get(self.pos + 1) == Some(&b'2') => {
                self.pos += 2;
                Ok(Scalar::sqrt2())
            }
            Some(_) => Err(Error::parse(col, "expected a number, 'i', 'r2' or '('")),
            None => Err(Error::parse(col, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from(-1));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::from(2));
    }

    #[test]
    fn inverse_of_sqrt2() {
        let half_r2 = Scalar::one().checked_div(&Scalar::sqrt2()).unwrap();
        assert_eq!(half_r2, Scalar::sqrt2() * Scalar::rational(1, 2));
        assert_eq!(&half_r2 * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert!(matches!(Scalar::parse("1/(1 - 1)"), Err(Error::Parse { col: 2, .. })));
    }

    #[test]
    fn conjugation() {
        let r = Scalar::rational(3, 2);
        assert_eq!(r.conj(), r);
        let z = Scalar::parse("1 + i").unwrap();
        assert_eq!(z.conj(), Scalar::parse("1 - i").unwrap());
        let w = Scalar::i() * Scalar::sqrt2();
        assert_eq!(w.conj(), -w);
    }

    #[test]
    fn general_inverse() {
        let z = Scalar::parse("1/3 - 2*i + 5*r2 - 7/4*i*r2").unwrap();
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::parse("-3/2 + i - 2*r2 + i*r2").unwrap().to_string(), "-3/2 + i - 2*r2 + i*r2");
        assert_eq!(Scalar::parse("-i").unwrap().to_string(), "-i");
        assert_eq!(Scalar::parse("(r2)/2").unwrap().to_string(), "1/2*r2");
        assert_eq!(Scalar::parse("6/4").unwrap().to_string(), "3/2");
    }

    #[test]
    fn parse_errors_report_columns() {
        assert_eq!(Scalar::parse("1 + "), Err(Error::parse(5, "unexpected end of input")));
        assert!(matches!(Scalar::parse("1 2"), Err(Error::Parse { col: 3, .. })));
        assert!(matches!(Scalar::parse("r3"), Err(Error::Parse { col: 1, .. })));
    }
}

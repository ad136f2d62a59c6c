//! Exact coefficients: Gaussian rationals `Q(i)` and rational functions `Q(i)(q)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Coefficient field used throughout the engine.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    fn inv(&self) -> Option<Self>;
    fn from_gauss(g: &Gauss) -> Self;
    /// The value as a Gaussian rational, when it is a constant.
    fn to_gauss(&self) -> Option<Gauss>;
    /// Conversion from `Q(i)(q)`; fails when the value is not representable.
    fn from_scalar(x: &RatFunc) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_gauss(&Gauss::from_i64(n))
    }
    fn imag_unit() -> Self {
        Self::from_gauss(&Gauss::i())
    }
    fn div(&self, other: &Self) -> Result<Self, Error> {
        other
            .inv()
            .map(|inv| self.clone() * inv)
            .ok_or(Error::DivisionByZero)
    }
    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }
    pub fn from_i64(n: i64) -> Self {
        Gauss { re: rat(n), im: BigRational::zero() }
    }
    pub fn from_pair(re: i64, im: i64) -> Self {
        Gauss { re: rat(re), im: rat(im) }
    }
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Gauss {
            re: BigRational::new(BigInt::from(n), BigInt::from(d)),
            im: BigRational::zero(),
        }
    }
    pub fn i() -> Self {
        Gauss::from_pair(0, 1)
    }
    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -self.im.clone() }
    }
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    /// The value as a machine integer, if it is one.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.im.is_zero() && self.re.is_integer() {
            self.re.to_integer().to_i64()
        } else {
            None
        }
    }
    pub fn inverse(&self) -> Option<Gauss> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Gauss { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl Zero for Gauss {
    fn zero() -> Self {
        Gauss { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gauss {
    fn one() -> Self {
        Gauss::from_i64(1)
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a> Add<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<'a> Sub<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        &self * &o
    }
}

impl<'a> Mul<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss { re: &self.re * &o.re, im: BigRational::zero() };
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl AddAssign for Gauss {
    fn add_assign(&mut self, o: Gauss) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign for Gauss {
    fn sub_assign(&mut self, o: Gauss) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign for Gauss {
    fn mul_assign(&mut self, o: Gauss) {
        *self = &*self * &o;
    }
}

impl Div for Gauss {
    type Output = Gauss;
    fn div(self, o: Gauss) -> Gauss {
        self * o.inverse().expect("division by zero")
    }
}

impl Field for Gauss {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn from_gauss(g: &Gauss) -> Self {
        g.clone()
    }
    fn to_gauss(&self) -> Option<Gauss> {
        Some(self.clone())
    }
    fn from_scalar(x: &RatFunc) -> Option<Self> {
        x.to_gauss()
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficient rendering used inside products: `(sign, body)` where an empty
/// body stands for a unit magnitude.
fn coeff_parts(c: &Gauss) -> (bool, String) {
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let m = c.re.abs();
        let body = if m.is_one() { String::new() } else { fmt_rat(&m) };
        (neg, body)
    } else if c.re.is_zero() {
        let neg = c.im.is_negative();
        let m = c.im.abs();
        let body = if m.is_one() { "i".to_string() } else { format!("{}*i", fmt_rat(&m)) };
        (neg, body)
    } else {
        (false, format!("({})", c))
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_abs = self.im.abs();
        let im_body = if im_abs.is_one() { "i".to_string() } else { format!("{}*i", fmt_rat(&im_abs)) };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{}", im_body)
            } else {
                write!(f, "{}", im_body)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", fmt_rat(&self.re), sign, im_body)
        }
    }
}

/// Dense univariate polynomial in `q` with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<Gauss>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Gauss>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn constant(c: Gauss) -> Self {
        Poly::from_coeffs(vec![c])
    }
    pub fn q() -> Self {
        Poly::from_coeffs(vec![Gauss::zero(), Gauss::one()])
    }
    pub fn coeffs(&self) -> &[Gauss] {
        &self.coeffs
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> Option<&Gauss> {
        self.coeffs.last()
    }
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
    pub fn scale(&self, c: &Gauss) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }
    pub fn eval(&self, x: &Gauss) -> Gauss {
        let mut acc = Gauss::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().unwrap()),
        }
    }
    /// Euclidean division; `d` must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lead = d.lead().unwrap().inverse().unwrap();
        let mut r = self.coeffs.clone();
        let mut quot = vec![Gauss::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] * &inv_lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
            r.pop();
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(r))
    }
    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Gauss::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Gauss::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Gauss::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) - o.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gauss::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = coeff_parts(c);
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", k),
            };
            let term = match (body.is_empty(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => body,
                (false, false) => format!("{}*{}", body, mono),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            write!(f, "{}", term)?;
            first = false;
        }
        Ok(())
    }
}

/// Element of `Q(i)(q)`: `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let l = d.lead().unwrap().inverse().unwrap();
        Ok(RatFunc { num: n.scale(&l), den: d.scale(&l) })
    }
    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }
    pub fn constant(c: Gauss) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }
    pub fn q() -> Self {
        RatFunc::from_poly(Poly::q())
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    /// Evaluate at `q = q0`.
    pub fn specialize(&self, q0: &Gauss) -> Result<Gauss, Error> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) * d.inverse().unwrap())
    }
    pub fn parse(s: &str) -> Result<Self, Error> {
        Parser::new(s).parse_all()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den).unwrap();
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(n, &self.den * &o.den).unwrap()
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, o: RatFunc) {
        *self = self.clone() + o;
    }
}

impl SubAssign for RatFunc {
    fn sub_assign(&mut self, o: RatFunc) {
        *self = self.clone() - o;
    }
}

impl MulAssign for RatFunc {
    fn mul_assign(&mut self, o: RatFunc) {
        *self = self.clone() * o;
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()).unwrap())
        }
    }
    fn from_gauss(g: &Gauss) -> Self {
        RatFunc::constant(g.clone())
    }
    fn to_gauss(&self) -> Option<Gauss> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(Gauss::zero))
        } else {
            None
        }
    }
    fn from_scalar(x: &RatFunc) -> Option<Self> {
        Some(x.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RatFunc::parse(s)
    }
}

impl FromStr for Gauss {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RatFunc::parse(s)?
            .to_gauss()
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("`{}` depends on q", s.trim()) })
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.den.coeffs, &self.num.coeffs).cmp(&(&other.den.coeffs, &other.num.coeffs))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<RatFunc, Error> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err(format!("unexpected `{}`", self.s[self.pos] as char));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<RatFunc, Error> {
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

    fn term(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    match d.inv() {
                        Some(inv) => acc = acc * inv,
                        None => return Err(Error::Parse { pos: at, msg: "division by zero".into() }),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, Error> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer exponent");
        }
        let e: u32 = match std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse() {
            Ok(e) => e,
            Err(_) => return self.err("exponent too large"),
        };
        let p = base.pow(e);
        if neg {
            match p.inv() {
                Some(v) => Ok(v),
                None => self.err("zero raised to a negative power"),
            }
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<RatFunc, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(RatFunc::constant(Gauss::i()))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(RatFunc::constant(Gauss::new(BigRational::from_integer(n), BigRational::zero())))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn gaussian_products() {
        let a = Gauss::from_pair(1, 1);
        let b = Gauss::from_pair(1, -1);
        assert_eq!(a * b, Gauss::from_i64(2));
        assert_eq!(Gauss::i().inverse().unwrap(), Gauss::from_pair(0, -1));
        assert_eq!(&Gauss::i() * &Gauss::i(), Gauss::from_i64(-1));
    }

    #[test]
    fn cancellation() {
        assert_eq!(p("(q^2-1)/(q-1)"), p("q+1"));
        assert_eq!(p("(q^2-1)/(q+1)").specialize(&Gauss::from_i64(-1)).unwrap(), Gauss::from_i64(-2));
        assert_eq!(p("q").specialize(&Gauss::one()).unwrap(), Gauss::one());
        assert!(matches!(p("1/(q^2-1)").specialize(&Gauss::one()), Err(Error::Pole(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(RatFunc::zero().div(&RatFunc::zero()), Err(Error::DivisionByZero)));
        assert!(RatFunc::parse("1/(q-q)").is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(p("(q^2-1)/(q+1)").to_string(), "q-1");
        assert_eq!(p("1/(2*q^2-2)").to_string(), "(1/2)/(q^2-1)");
        assert_eq!(p("i*q - 3/2").to_string(), "i*q-3/2");
        assert_eq!(p("(1+2*i)*q^2").to_string(), "(1+2*i)*q^2");
        assert_eq!(Gauss::from_pair(3, -2).to_string(), "3-2*i");
        assert_eq!(p("q^-1").to_string(), "(1)/(q)");
    }

    #[test]
    fn parse_errors_carry_position() {
        match RatFunc::parse("q + x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{:?}", other),
        }
        assert!(RatFunc::parse("(q").is_err());
        assert!(RatFunc::parse("").is_err());
    }
}

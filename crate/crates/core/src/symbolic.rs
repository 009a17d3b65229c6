//! Exact polynomials and rational functions in one symbol with rational
//! coefficients. Used to carry normalization integrals as functions of `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense polynomial, coefficients in ascending powers, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// `c0 + c1 * s`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Poly::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, s: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * s + c)
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * s + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Leading coefficient scaled to one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&(BigRational::one() / l)),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            // keep coefficient growth in check
            y = r.monic();
        }
        x.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials in `s`: `gcd(num, den) = 1` and `den` monic,
/// so structural equality is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionInS {
    num: Poly,
    den: Poly,
}

impl RationalFunctionInS {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunctionInS {
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let lead = d.leading().unwrap().clone();
        let inv = BigRational::one() / lead;
        n = n.scale(&inv);
        d = d.scale(&inv);
        RationalFunctionInS { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunctionInS {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, s: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::Domain(format!(
                "pole of rational function at s = {s}"
            )));
        }
        Ok(self.num.eval(s) / d)
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        self.num.eval_f64(s) / self.den.eval_f64(s)
    }
}

impl Add for &RationalFunctionInS {
    type Output = RationalFunctionInS;
    fn add(self, rhs: &RationalFunctionInS) -> RationalFunctionInS {
        if self.den == rhs.den {
            return RationalFunctionInS::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunctionInS::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunctionInS {
    type Output = RationalFunctionInS;
    fn sub(self, rhs: &RationalFunctionInS) -> RationalFunctionInS {
        let neg = RationalFunctionInS {
            num: -&rhs.num,
            den: rhs.den.clone(),
        };
        self + &neg
    }
}

impl Mul for &RationalFunctionInS {
    type Output = RationalFunctionInS;
    fn mul(self, rhs: &RationalFunctionInS) -> RationalFunctionInS {
        RationalFunctionInS::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RationalFunctionInS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        let a = Poly::from_ints(&[1, 2]); // 1 + 2s
        let b = Poly::from_ints(&[3, 1]); // 3 + s
        let p = &a * &b;
        assert_eq!(p, Poly::from_ints(&[3, 7, 2]));
        let (q, r) = p.div_rem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (q, r) = Poly::from_ints(&[1, 0, 1]).div_rem(&Poly::from_ints(&[1, 1]));
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert_eq!(r, Poly::from_ints(&[2]));
        assert_eq!((&a - &a), Poly::zero());
        assert_eq!(a.pow(2), Poly::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn gcd_is_monic() {
        let x = Poly::from_ints(&[1, 2]);
        let a = &x * &Poly::from_ints(&[3, 1]);
        let b = &x * &Poly::from_ints(&[5, 0, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::new(vec![rat(1, 2), int(1)]));
    }

    #[test]
    fn rational_function_reduces() {
        let x = Poly::from_ints(&[1, 2]);
        let f = RationalFunctionInS::new(&x * &Poly::from_ints(&[0, 1]), &x * &x).unwrap();
        // s / (1 + 2s) with monic denominator: (1/2 s) / (1/2 + s)
        assert_eq!(f.denominator(), &Poly::new(vec![rat(1, 2), int(1)]));
        assert_eq!(f.numerator(), &Poly::new(vec![int(0), rat(1, 2)]));
        let g =
            RationalFunctionInS::new(Poly::from_ints(&[0, 3]), Poly::from_ints(&[3, 6])).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.eval(&int(1)).unwrap(), rat(1, 3));
        assert!(RationalFunctionInS::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn sum_of_fractions() {
        // 1/s + 1/(s+1) = (2s+1)/(s(s+1))
        let inv = |p: Poly| RationalFunctionInS::new(Poly::one(), p).unwrap();
        let sum = &inv(Poly::from_ints(&[0, 1])) + &inv(Poly::from_ints(&[1, 1]));
        let expect =
            RationalFunctionInS::new(Poly::from_ints(&[1, 2]), Poly::from_ints(&[0, 1, 1]))
                .unwrap();
        assert_eq!(sum, expect);
        assert!((&sum - &expect).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(
            Poly::from_ints(&[3, 11, 12, 4]).to_string(),
            "3 + 11*s + 12*s^2 + 4*s^3"
        );
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-s");
    }
}

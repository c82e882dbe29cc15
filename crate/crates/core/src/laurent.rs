//! Laurent polynomials in a fixed number of variables with big-integer coefficients.
//!
//! Text form: terms in ascending total degree, ties in descending lexicographic
//! order of exponent vectors, e.g. `x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponents = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable x{i} out of range");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(exps, c.into());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn check_vars(&self, other: &LaurentPoly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return vec![0; self.nvars] };
        it.fold(first.clone(), |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect())
    }

    /// Exact quotient `self / divisor`, or an error if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(divisor);
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        // Monomials are units: clear them, divide polynomials, put them back.
        let ms = self.min_exponents();
        let md = divisor.min_exponents();
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&ms));
        let d = divisor.shift(&neg(&md));
        let (lead_e, lead_c) = d.terms.iter().next_back().expect("nonzero divisor");
        let mut quot = LaurentPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe: Exponents = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) || !(rc % lead_c).is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            let term = LaurentPoly::monomial(self.nvars, qe, rc / lead_c);
            rem = &rem - &(&term * &d);
            quot = &quot + &term;
        }
        let back: Vec<i64> = ms.iter().zip(&md).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&back))
    }

    /// Replace `x_i` by `images[i]`, dividing exactly for negative exponents.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let m = self.min_exponents();
        // self = N / x^{-m} with N a polynomial
        let numer_src = self.shift(&m.iter().map(|x| -x).collect::<Vec<_>>());
        let mut numer = LaurentPoly::zero(target);
        for (e, c) in &numer_src.terms {
            let mut t = LaurentPoly::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                t = &t * &img.pow(k as u32);
            }
            numer = &numer + &t;
        }
        let mut denom = LaurentPoly::one(target);
        for (img, &k) in images.iter().zip(&m) {
            if k < 0 {
                denom = &denom * &img.pow((-k) as u32);
            }
        }
        let mut out = numer.exact_div(&denom)?;
        for (img, &k) in images.iter().zip(&m) {
            if k > 0 {
                out = &out * &img.pow(k as u32);
            }
        }
        Ok(out)
    }

    /// Parse with a fixed variable count.
    pub fn parse(s: &str, nvars: usize) -> Result<LaurentPoly> {
        let p: LaurentPoly = s.parse()?;
        if p.nvars > nvars {
            return Err(Error::Parse(format!("{s:?} uses more than {nvars} variables")));
        }
        let pad = nvars - p.nvars;
        Ok(LaurentPoly {
            nvars,
            terms: p
                .terms
                .into_iter()
                .map(|(mut e, c)| {
                    e.extend(std::iter::repeat(0).take(pad));
                    (e, c)
                })
                .collect(),
        })
    }

    fn display_order(a: &Exponents, b: &Exponents) -> Ordering {
        let da: i64 = a.iter().sum();
        let db: i64 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| Self::display_order(a.0, b.0));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(v, &k)| match k {
                    1 => format!("x{}", v + 1),
                    k => format!("x{}^{k}", v + 1),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Infers the variable count from the highest index used (at least 2).
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // split into signed terms; a sign directly after '^' belongs to an exponent
        let mut raw_terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    raw_terms.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(err("dangling sign"));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(err("trailing sign"));
        }
        raw_terms.push((negative, current));

        let mut parsed: Vec<(BTreeMap<usize, i64>, BigInt)> = Vec::new();
        let mut nvars = 2;
        for (neg, body) in raw_terms {
            let mut coeff = BigInt::one();
            let mut exps = BTreeMap::new();
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                    if idx == 0 {
                        return Err(err("variables are numbered from 1"));
                    }
                    nvars = nvars.max(idx);
                    *exps.entry(idx).or_insert(0) += exp;
                } else {
                    let c: BigInt = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coeff *= c;
                }
            }
            parsed.push((exps, if neg { -coeff } else { coeff }));
        }
        let mut p = LaurentPoly::zero(nvars);
        for (exps, c) in parsed {
            let mut e = vec![0; nvars];
            for (i, k) in exps {
                e[i - 1] = k;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(2, i)
    }

    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(2, k)
    }

    #[test]
    fn display_order_and_signs() {
        let z1 = (&(&(&x(1) * &x(1)) + &(&x(2) * &x(2))) + &c(1))
            .exact_div(&(&x(1) * &x(2)))
            .unwrap();
        assert_eq!(z1.to_string(), "x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2");
        let p = &(&c(-3) * &x(1)) + &c(2);
        assert_eq!(p.to_string(), "2 - 3*x1");
        assert_eq!((-&x(2)).to_string(), "-x2");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2",
            "2 - 3*x1",
            "-x2",
            "0",
            "-7*x2 + x1^-2*x3^4",
        ] {
            let p: LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("x0".parse::<LaurentPoly>().is_err());
        assert!("x1 +".parse::<LaurentPoly>().is_err());
        assert!("x1^a".parse::<LaurentPoly>().is_err());
        assert_eq!(LaurentPoly::parse("x1", 3).unwrap().nvars(), 3);
        assert!(LaurentPoly::parse("x3", 2).is_err());
    }

    #[test]
    fn exact_division() {
        let a = &x(1) + &c(1);
        let b = &x(1) - &c(1);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        // monomial denominators are units
        let m = LaurentPoly::monomial(2, vec![-2, 3], 5);
        assert_eq!((&prod * &m).exact_div(&m).unwrap(), prod);
        assert!(a.exact_div(&b).is_err());
        assert!(a.exact_div(&LaurentPoly::zero(2)).is_err());
        assert!(LaurentPoly::constant(2, 3).exact_div(&c(2)).is_err());
    }

    #[test]
    fn substitution() {
        // x1 -> x1 + x2, x2 -> x1 x2
        let p: LaurentPoly = "x1^2*x2^-1".parse().unwrap();
        let images = [&x(1) + &x(2), &x(1) * &x(2)];
        let got = p.substitute(&images).unwrap();
        let want = (&images[0] * &images[0]).exact_div(&images[1]).unwrap();
        assert_eq!(got, want);
        let q: LaurentPoly = "x1^-1".parse().unwrap();
        assert!(q.substitute(&images).is_err());
    }

    #[test]
    fn ring_identities() {
        let p: LaurentPoly = "x1^-1 + 2*x2 - 3".parse().unwrap();
        let q: LaurentPoly = "x1*x2^-2 - x2".parse().unwrap();
        assert_eq!(&(&p + &q) * &(&p - &q), &(&p * &p) - &(&q * &q));
        assert_eq!(p.pow(3), &(&p * &p) * &p);
        assert!((&p - &p).is_zero());
    }
}

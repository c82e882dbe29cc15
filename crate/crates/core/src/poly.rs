//! Polynomials in `q` with nonnegative integer coefficients.
//!
//! Grading convention: the coefficient of `q^i` is the Betti number `b_{2i}`.
//! Odd Betti numbers of the varieties studied here vanish, so `P_X(t)` is
//! stored as `P_X(t^{1/2})`, a polynomial in `q = t²`. Evaluating at a prime
//! power `q` gives the point count over `F_q`; evaluating at 1 gives `χ`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedPoly {
    coeffs: Vec<u64>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        GradedPoly { coeffs: vec![1] }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        GradedPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GradedPoly { coeffs }
    }

    /// Polynomial counting a multiset of cell dimensions.
    pub fn from_cells<I: IntoIterator<Item = usize>>(dims: I) -> Self {
        let mut coeffs = Vec::new();
        for d in dims {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        GradedPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluation at 1, the Euler characteristic.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: u64) -> BigUint {
        let q = BigUint::from(q);
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * &q + BigUint::from(*c))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return GradedPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        GradedPoly { coeffs }
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;

    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        GradedPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;

    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;

    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        if self.is_zero() || rhs.is_zero() {
            return GradedPoly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        GradedPoly::from_coeffs(coeffs)
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;

    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, *c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (i, 1) => write!(f, "q^{i}")?,
                (i, c) => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// The Gaussian binomial `[s choose t]_q` with the conventions `[s, 0] = 1`
/// for every `s` (including `s = -1`, the empty ambient space) and zero for
/// `t < 0` or `t > s`.
pub fn gaussian_binomial(s: i64, t: i64) -> GradedPoly {
    if t == 0 {
        return GradedPoly::one();
    }
    if t < 0 || t > s {
        return GradedPoly::zero();
    }
    let (s, t) = (s as usize, (t as usize).min((s - t) as usize));
    // Pascal: [s, t] = [s-1, t-1] + q^t [s-1, t], built row by row.
    let mut row: Vec<GradedPoly> = vec![GradedPoly::one()];
    for m in 1..=s {
        let mut next = Vec::with_capacity(t + 1);
        for k in 0..=t.min(m) {
            let left = if k == 0 { GradedPoly::zero() } else { row[k - 1].clone() };
            let right = row.get(k).map(|p| p.shift(k)).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(t)
}

/// Ordinary binomial coefficient with the same conventions as [`gaussian_binomial`].
pub fn binomial(s: i64, t: i64) -> u64 {
    if t == 0 {
        return 1;
    }
    if t < 0 || t > s {
        return 0;
    }
    let t = t.min(s - t) as u64;
    let s = s as u64;
    (1..=t).fold(1u64, |acc, i| acc * (s - t + i) / i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: `[s, t]_q = Σ q^{inv(w)}` over 0/1 words with `t` ones.
    fn inversion_oracle(s: usize, t: usize) -> Vec<u64> {
        let mut coeffs = vec![0u64; t * (s - t) + 1];
        for mask in 0u32..(1 << s) {
            if mask.count_ones() as usize != t {
                continue;
            }
            let mut inv = 0;
            for i in 0..s {
                for j in i + 1..s {
                    if mask >> i & 1 == 1 && mask >> j & 1 == 0 {
                        inv += 1;
                    }
                }
            }
            coeffs[inv] += 1;
        }
        coeffs
    }

    #[test]
    fn small_values() {
        assert_eq!(gaussian_binomial(2, 1).coeffs(), &[1, 1]);
        assert_eq!(gaussian_binomial(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(4, 2).eval_one(), 6);
        for s in 0..6 {
            assert_eq!(gaussian_binomial(s, 0), GradedPoly::one());
        }
        assert_eq!(gaussian_binomial(-1, 0), GradedPoly::one());
        assert!(gaussian_binomial(2, 3).is_zero());
        assert!(gaussian_binomial(-1, -1).is_zero());
    }

    #[test]
    fn matches_inversion_oracle() {
        for s in 0..=10 {
            for t in 0..=s {
                assert_eq!(
                    gaussian_binomial(s as i64, t as i64).coeffs(),
                    inversion_oracle(s, t).as_slice(),
                    "[{s},{t}]"
                );
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(gaussian_binomial(4, 2).to_string(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(GradedPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        // (3^3 - 1) / (3 - 1)
        assert_eq!(gaussian_binomial(3, 1).eval(3), BigUint::from(13u32));
        assert_eq!(GradedPoly::from_cells([0, 1, 1, 2]).coeffs(), &[1, 2, 1]);
    }

    proptest! {
        #[test]
        fn pascal_and_symmetry(s in 1i64..24, t in 0i64..24) {
            prop_assume!(t <= s);
            let lhs = gaussian_binomial(s, t);
            let rhs = &gaussian_binomial(s - 1, t - 1) + &gaussian_binomial(s - 1, t).shift(t as usize);
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(&lhs, &gaussian_binomial(s, s - t));
            prop_assert_eq!(lhs.eval_one(), binomial(s, t));
        }
    }
}

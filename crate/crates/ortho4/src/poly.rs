//! Dense univariate polynomials and sparse Laurent polynomials over
//! [`Rational`], with the Euler-operator action `theta = x d/dx`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::{rat_int, Rational};

/// Dense polynomial; `coeffs[n]` is the coefficient of `x^n` and trailing
/// zeros are trimmed, so the zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// The monomial `c x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^n` (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^n`.
    pub fn mul_xpow(&self, n: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Euler operator: maps `x^n` to `n x^n`.
    pub fn theta_apply(&self) -> Self {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a * rat_int(n as i64))
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, a)| a * rat_int(k as i64 + 1))
                .collect(),
        )
    }

    /// Exact Horner evaluation.
    pub fn eval_exact(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x0 + a;
        }
        acc
    }

    /// Horner evaluation after rounding each coefficient to f64.
    pub fn eval_float(&self, x0: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.coeffs.iter().rev() {
            acc = acc * x0 + rational_to_f64(a);
        }
        acc
    }

    /// Returns `p(c x)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    let out = a * &pow;
                    pow *= c;
                    out
                })
                .collect(),
        )
    }

    /// Returns `p(-x)`.
    pub fn substitute_negated(&self) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| if n % 2 == 1 { -a } else { a.clone() })
                .collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            rem = &rem - &divisor.scale(&factor).mul_xpow(shift);
        }
        (Polynomial::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(l) => {
                let inv = Rational::one() / l;
                a.scale(&inv)
            }
            None => a,
        }
    }
}

/// Evaluates `num/den` at `at`, cancelling a common polynomial factor first
/// when `den(at) = 0`. Returns `None` on a genuine pole.
pub fn eval_rational_function(
    num: &Polynomial,
    den: &Polynomial,
    at: &Rational,
) -> Option<Rational> {
    let dv = den.eval_exact(at);
    if !dv.is_zero() {
        return Some(num.eval_exact(at) / dv);
    }
    let g = Polynomial::gcd(num, den);
    if g.degree() == Some(0) || g.is_zero() {
        return None;
    }
    let (num_red, r1) = num.div_rem(&g);
    let (den_red, r2) = den.div_rem(&g);
    debug_assert!(r1.is_zero() && r2.is_zero());
    let dv = den_red.eval_exact(at);
    if dv.is_zero() {
        return None;
    }
    Some(num_red.eval_exact(at) / dv)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for n in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[n];
            if c.is_zero() {
                continue;
            }
            write_term(f, c, n as i64, &mut first)?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    n: i64,
    first: &mut bool,
) -> fmt::Result {
    if *first {
        if c.is_negative() {
            write!(f, "-")?;
        }
        *first = false;
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mag = c.abs();
    let xpart = match n {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{n}"),
    };
    if xpart.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{xpart}")
    } else {
        write!(f, "{mag}*{xpart}")
    }
}

/// Nearest f64 to an exact rational.
pub fn rational_to_f64(a: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    a.to_f64().unwrap_or_else(|| {
        // fall back through a reduced quotient for extreme magnitudes
        let n = a.numer().to_f64().unwrap_or(f64::NAN);
        let d = a.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Sparse Laurent polynomial: exponents may be negative, zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, n: i64) -> Self {
        let mut l = LaurentPolynomial::default();
        l.add_term(n, c);
        l
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        let mut l = LaurentPolynomial::default();
        for (n, a) in p.coeffs().iter().enumerate() {
            l.add_term(n as i64, a.clone());
        }
        l
    }

    /// `Some` only when no negative exponents are present.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.min_exponent().is_some_and(|n| n < 0) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.max_exponent().map_or(0, |n| n as usize + 1)];
        for (&n, a) in &self.coeffs {
            coeffs[n as usize] = a.clone();
        }
        Some(Polynomial::from_coeffs(coeffs))
    }

    fn add_term(&mut self, n: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(n) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: i64) -> Rational {
        self.coeffs.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&n, a)| (n, a * c)).collect(),
        }
    }

    /// Multiplication by `x^n` (any sign).
    pub fn mul_xpow(&self, n: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k + n, a.clone())).collect(),
        }
    }

    /// Euler operator on Laurent terms, valid for negative exponents.
    pub fn theta_apply(&self) -> Self {
        let mut out = LaurentPolynomial::default();
        for (&n, a) in &self.coeffs {
            out.add_term(n, a * rat_int(n));
        }
        out
    }

    /// Returns `p(c x)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "scaling a Laurent polynomial by zero");
        let mut out = LaurentPolynomial::default();
        for (&n, a) in &self.coeffs {
            out.add_term(n, a * rational_power(c, n));
        }
        out
    }

    /// Returns `p(-x)`.
    pub fn substitute_negated(&self) -> Self {
        LaurentPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&n, a)| (n, if n.rem_euclid(2) == 1 { -a } else { a.clone() }))
                .collect(),
        }
    }
}

/// `c^n` for integer `n` of either sign; `c` must be nonzero for `n < 0`.
pub fn rational_power(c: &Rational, n: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= c;
    }
    if n < 0 {
        acc = Rational::one() / acc;
    }
    acc
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&n, a) in &rhs.coeffs {
            out.add_term(n, a.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&n, a) in &rhs.coeffs {
            out.add_term(n, -a);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::default();
        for (&n, a) in &self.coeffs {
            for (&m, b) in &rhs.coeffs {
                out.add_term(n + m, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&n, a)| (n, -a)).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&n, c) in self.coeffs.iter().rev() {
            write_term(f, c, n, &mut first)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn ring_operations() {
        let xp2 = p(&[2, 1]);
        assert_eq!(&xp2 * &xp2, p(&[4, 4, 1]));
        assert_eq!(&xp2 + &Polynomial::zero(), xp2);
        // (x+2)(-x^2+2x+4) = -x^3 + 8x + 8
        assert_eq!(&xp2 * &p(&[4, 2, -1]), p(&[8, 8, 0, -1]));
    }

    #[test]
    fn theta_and_substitutions() {
        assert_eq!(p(&[2, 1]).theta_apply(), p(&[0, 1]));
        assert_eq!(p(&[7]).theta_apply(), Polynomial::zero());
        assert_eq!(
            LaurentPolynomial::monomial(rat_int(1), -2).theta_apply(),
            LaurentPolynomial::monomial(rat_int(-2), -2)
        );

        assert_eq!(p(&[2, 1]).eval_exact(&rat_int(0)), rat_int(2));
        assert_eq!(p(&[2, 1]).substitute_scaled(&rat_int(2)), p(&[2, 2]));
        assert_eq!(p(&[4, 2, -1]).substitute_negated(), p(&[4, -2, -1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[4, 2, -1]).to_string(), "-x^2 + 2*x + 4");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_coeffs(vec![rat(20, 3), rat(10, 3), rat_int(-4), rat(1, 2)])
                .to_string(),
            "1/2*x^3 - 4*x^2 + 10/3*x + 20/3"
        );
        let l = LaurentPolynomial::monomial(rat(-1, 2), 2);
        assert_eq!(l.to_string(), "-1/2*x^2");
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 0, 1]) * &p(&[3, 1]); // (x^2-1)(x+3)
        let (q, r) = a.div_rem(&p(&[3, 1]));
        assert_eq!(q, p(&[-1, 0, 1]));
        assert!(r.is_zero());
        let g = Polynomial::gcd(&a, &p(&[1, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn rational_function_cancellation() {
        // (mu-1)(mu+2) / ((mu-1)(mu+3)) at mu = 1 is removable, value 3/4
        let num = &p(&[-1, 1]) * &p(&[2, 1]);
        let den = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(
            eval_rational_function(&num, &den, &rat_int(1)),
            Some(rat(3, 4))
        );
        // genuine pole
        assert_eq!(eval_rational_function(&p(&[1]), &p(&[-1, 1]), &rat_int(1)), None);
    }

    #[test]
    fn laurent_round_trip_and_products() {
        let l = LaurentPolynomial::from_polynomial(&p(&[1, 0, 3]));
        assert_eq!(l.to_polynomial().unwrap(), p(&[1, 0, 3]));
        assert!(l.mul_xpow(-3).to_polynomial().is_none());

        let a = LaurentPolynomial::monomial(rat_int(2), -1);
        let b = LaurentPolynomial::monomial(rat_int(3), 2);
        assert_eq!(&a * &b, LaurentPolynomial::monomial(rat_int(6), 1));
    }

    proptest::proptest! {
        #[test]
        fn theta_satisfies_leibniz(
            a in proptest::collection::vec(-9i64..9, 0..6),
            b in proptest::collection::vec(-9i64..9, 0..6),
        ) {
            let pa = p(&a);
            let pb = p(&b);
            let lhs = (&pa * &pb).theta_apply();
            let rhs = &(&pa.theta_apply() * &pb) + &(&pa * &pb.theta_apply());
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn scaled_substitution_matches_eval(
            a in proptest::collection::vec(-9i64..9, 0..6),
            cn in -6i64..6, cd in 1i64..4, xn in -6i64..6, xd in 1i64..4,
        ) {
            let pa = p(&a);
            let c = rat(cn, cd);
            let x0 = rat(xn, xd);
            let lhs = pa.substitute_scaled(&c).eval_exact(&x0);
            let rhs = pa.eval_exact(&(c * x0));
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degrees_add_under_multiplication(
            a in proptest::collection::vec(-9i64..9, 1..6),
            b in proptest::collection::vec(-9i64..9, 1..6),
        ) {
            let pa = p(&a);
            let pb = p(&b);
            proptest::prop_assume!(!pa.is_zero() && !pb.is_zero());
            let prod = &pa * &pb;
            proptest::prop_assert_eq!(
                prod.degree(),
                Some(pa.degree().unwrap() + pb.degree().unwrap())
            );
        }
    }
}

//! Arbitrary-precision rational scalars and gamma-function combinatorics.
//!
//! Every exact computation in the crate runs over [`Rational`]. Quotients of
//! gamma values are kept symbolic in a [`GammaRatio`] until they can be
//! collapsed to an exact rational: a quotient reduces precisely when its
//! arguments pair up with integer offsets (each pair collapses to a product
//! of Pochhammer factors) and no gamma argument sits at a non-positive
//! integer. Half-integer gamma values are never evaluated in isolation; a
//! request that does not reduce is an error, not a float fallback.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always stored in lowest terms with a positive
/// denominator. Canonical string form is `p/q`, or `p` when `q = 1`.
pub type Rational = BigRational;

/// The rational `n`.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(a: &Rational) -> bool {
    a.denom().is_one()
}

pub fn is_nonpositive_integer(a: &Rational) -> bool {
    is_integer(a) && !a.numer().is_positive()
}

/// Rejects the excluded parameter values mu in {-1, -2, -3, ...}.
pub fn validate_mu(mu: &Rational) -> Result<()> {
    if is_integer(mu) && mu.numer().is_negative() {
        return Err(Error::PoleInGamma(mu.to_string()));
    }
    Ok(())
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=i64::from(n) {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`; the empty product is 1.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Generalized binomial coefficient `C(a, k) = (a-k+1)_k / k!` for rational
/// `a` and non-negative integer `k`.
pub fn binomial(a: &Rational, k: u32) -> Rational {
    pochhammer(&(a - rat_int(i64::from(k) - 1)), k) / factorial(k)
}

/// A symbolic product of gamma values, `prod Gamma(a_i) / prod Gamma(b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRatio {
    numer_args: Vec<Rational>,
    denom_args: Vec<Rational>,
}

impl GammaRatio {
    pub fn new(numer_args: Vec<Rational>, denom_args: Vec<Rational>) -> Self {
        GammaRatio {
            numer_args,
            denom_args,
        }
    }

    /// Collapses the ratio to an exact rational.
    ///
    /// Arguments are split into classes by their fractional part. Integer
    /// arguments evaluate directly as factorials; within every other class
    /// the numerator and denominator counts must match, and the sorted
    /// pairing turns each pair `Gamma(a+m)/Gamma(a)` into `(a)_m`. Any
    /// argument at a non-positive integer is a pole. Any class with
    /// mismatched counts leaves a transcendental factor behind and the
    /// ratio is unreducible.
    pub fn reduce(&self) -> Result<Rational> {
        for a in self.numer_args.iter().chain(self.denom_args.iter()) {
            if is_nonpositive_integer(a) {
                return Err(Error::PoleInGamma(a.to_string()));
            }
        }

        // class key: a - floor(a)
        let mut classes: BTreeMap<Rational, (Vec<&Rational>, Vec<&Rational>)> = BTreeMap::new();
        for a in &self.numer_args {
            classes.entry(a - a.floor()).or_default().0.push(a);
        }
        for b in &self.denom_args {
            classes.entry(b - b.floor()).or_default().1.push(b);
        }

        let mut acc = Rational::one();
        for (frac, (mut nums, mut dens)) in classes {
            if frac.is_zero() {
                // positive integers: Gamma(n) = (n-1)!
                for a in nums {
                    acc *= gamma_at_positive_integer(a);
                }
                for b in dens {
                    acc /= gamma_at_positive_integer(b);
                }
                continue;
            }
            if nums.len() != dens.len() {
                return Err(Error::UnreducibleRatio(format!(
                    "{} numerator vs {} denominator arguments in class {}",
                    nums.len(),
                    dens.len(),
                    frac
                )));
            }
            nums.sort();
            dens.sort();
            for (a, b) in nums.iter().zip(dens.iter()) {
                let offset = (*a - *b).to_integer();
                let n = offset
                    .abs()
                    .to_u32()
                    .expect("gamma argument offset fits in u32");
                if offset.is_positive() {
                    acc *= pochhammer(b, n);
                } else if offset.is_negative() {
                    acc /= pochhammer(a, n);
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for GammaRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |args: &[Rational]| -> String {
            if args.is_empty() {
                "1".to_string()
            } else {
                args.iter()
                    .map(|a| format!("Gamma({a})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        write!(f, "{} / {}", side(&self.numer_args), side(&self.denom_args))
    }
}

fn gamma_at_positive_integer(a: &Rational) -> Rational {
    let n = a.to_integer().to_u32().expect("gamma argument fits in u32");
    factorial(n - 1)
}

/// Collapses `r` to an exact rational; see [`GammaRatio::reduce`].
pub fn gamma_ratio_reduce(r: &GammaRatio) -> Result<Rational> {
    r.reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(pochhammer(&rat_int(7), 0), rat_int(1));
        assert_eq!(pochhammer(&rat_int(2), 3), rat_int(24));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(5), rat_int(120));
        assert_eq!(binomial(&rat(-1, 2), 2), rat(3, 8));
        assert_eq!(binomial(&rat_int(9), 0), rat_int(1));
        assert_eq!(binomial(&rat_int(5), 2), rat_int(10));
    }

    #[test]
    fn gamma_ratio_integer_offsets() {
        let r = GammaRatio::new(vec![rat_int(5)], vec![rat_int(3)]);
        assert_eq!(r.reduce().unwrap(), rat_int(12));

        let r = GammaRatio::new(vec![rat(3, 2)], vec![rat(5, 2)]);
        assert_eq!(r.reduce().unwrap(), rat(2, 3));
    }

    #[test]
    fn gamma_ratio_multiple_integer_args() {
        // Gamma(4) Gamma(4) Gamma(1) / Gamma(2)^2 = 6 * 6 * 1 / 1
        let r = GammaRatio::new(
            vec![rat_int(4), rat_int(4), rat_int(1)],
            vec![rat_int(2), rat_int(2)],
        );
        assert_eq!(r.reduce().unwrap(), rat_int(36));
        // Gamma(5)^2 Gamma(1) / Gamma(3)^2 = 12^2
        let r = GammaRatio::new(
            vec![rat_int(5), rat_int(5), rat_int(1)],
            vec![rat_int(3), rat_int(3)],
        );
        assert_eq!(r.reduce().unwrap(), rat_int(144));
    }

    #[test]
    fn gamma_ratio_rejects_poles_and_unreducible() {
        let r = GammaRatio::new(vec![rat_int(0)], vec![rat_int(2)]);
        assert!(matches!(r.reduce(), Err(Error::PoleInGamma(_))));

        let r = GammaRatio::new(vec![rat_int(-3)], vec![rat_int(2)]);
        assert!(matches!(r.reduce(), Err(Error::PoleInGamma(_))));

        // Gamma(1/2) alone does not reduce.
        let r = GammaRatio::new(vec![rat(1, 2)], vec![]);
        assert!(matches!(r.reduce(), Err(Error::UnreducibleRatio(_))));

        // Gamma(1/2) / Gamma(1/4): classes differ.
        let r = GammaRatio::new(vec![rat(1, 2)], vec![rat(1, 4)]);
        assert!(matches!(r.reduce(), Err(Error::UnreducibleRatio(_))));
    }

    #[test]
    fn gamma_ratio_negative_non_integer_args() {
        // Gamma(-1/2) / Gamma(3/2) = 1 / ((-1/2)(1/2)) = -4
        let r = GammaRatio::new(vec![rat(-1, 2)], vec![rat(3, 2)]);
        assert_eq!(r.reduce().unwrap(), rat_int(-4));
    }

    #[test]
    fn validate_mu_rejects_negative_integers() {
        assert!(validate_mu(&rat_int(-1)).is_err());
        assert!(validate_mu(&rat_int(-7)).is_err());
        assert!(validate_mu(&rat_int(0)).is_ok());
        assert!(validate_mu(&rat(-1, 2)).is_ok());
        assert!(validate_mu(&rat(5, 2)).is_ok());
    }

    #[test]
    fn canonical_string_round_trip() {
        for r in [rat_int(0), rat_int(-4), rat(22, 7), rat(-3, 9), rat(5, 1)] {
            let s = r.to_string();
            assert_eq!(Rational::from_str(&s).unwrap(), r);
        }
        assert_eq!(rat(5, 1).to_string(), "5");
        assert_eq!(rat(-3, 9).to_string(), "-1/3");
    }

    proptest::proptest! {
        #[test]
        fn pochhammer_splits_multiplicatively(
            num in -40i64..40, den in 1i64..12, m in 0u32..12, n in 0u32..12,
        ) {
            let a = rat(num, den);
            let lhs = pochhammer(&a, m + n);
            let rhs = pochhammer(&a, m) * pochhammer(&(a.clone() + rat_int(i64::from(m))), n);
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gamma_ratio_agrees_with_pochhammer(
            num in -40i64..40, den in 2i64..12, n in 0u32..21,
        ) {
            // keep a off the integer lattice so Gamma(a) itself is not a factorial
            let a = rat(num, den) + rat(1, 2 * den + 1);
            let shifted = a.clone() + rat_int(i64::from(n));
            let r = GammaRatio::new(vec![shifted], vec![a.clone()]);
            proptest::prop_assert_eq!(r.reduce().unwrap(), pochhammer(&a, n));
        }

        #[test]
        fn rational_string_round_trip(num in -1000i64..1000, den in 1i64..1000) {
            let r = rat(num, den);
            proptest::prop_assert_eq!(Rational::from_str(&r.to_string()).unwrap(), r);
        }
    }
}

//! Truncated formal power series in `t` with polynomial coefficients in
//! `x`, and the normalized generating function of the family.
//!
//! The raw generating function carries a transcendental prefactor. Dividing
//! it out through the Legendre duplication formula leaves a series whose
//! coefficients are exactly rational for every admissible rational `mu`:
//!
//! `Ghat(t, x) = (1-t)^(ell-(mu+1)/2) * exp(-t x / (2(1-t)))
//!              * S_I(t, x) * S_K(t, x)`
//!
//! where `S_I` is the normalized even Bessel-type series
//! `sum_m (t x / (4(1-t)))^(2m) / (m! ((mu+2)/2)_m)` and `S_K` is the
//! elementary half-integer kernel `sum_{i<=ell} (2ell-i)!/((ell-i)! i!)
//! x^i (1-t)^(-i)`. Extracting the `t^j` coefficient and rescaling by
//! `(mu+1)_j / ((mu+1)/2)_j` reproduces the explicit double-sum
//! construction; the series is kept independent of that code path so the
//! two act as oracles for each other.

use num_traits::One;

use crate::error::Result;
use crate::exact::{factorial, pochhammer, rat, rat_int, validate_mu, Rational};
use crate::mpoly::MPolyKey;
use crate::poly::Polynomial;

/// Power series truncated at order `N`: `coeffs[n]` is the polynomial
/// coefficient of `t^n`, `n <= N`. All ring operations truncate at the
/// common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Polynomial>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn constant(p: Polynomial, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(Polynomial::one(), order)
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Lowest power of `t` with a nonzero coefficient.
    fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|p| !p.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "mismatched truncation orders");
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "mismatched truncation orders");
        let order = self.order();
        let mut coeffs = vec![Polynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * p).collect(),
        }
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "series exponential needs a zero constant term"
        );
        let order = self.order();
        let mut acc = PowerSeries::one(order);
        let mut power = PowerSeries::one(order);
        let step = self.valuation().unwrap_or(order + 1).max(1);
        let mut m = 0usize;
        while m * step <= order {
            if m > 0 {
                power = power.mul(self);
                let inv = Rational::one() / factorial(m as u32);
                acc = acc.add(&power.scale(&inv));
            }
            m += 1;
        }
        acc
    }
}

/// Binomial series `(1-t)^(-gamma) = sum_n (gamma)_n / n! t^n`.
pub fn binomial_series(gamma: &Rational, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(Polynomial::constant(
            pochhammer(gamma, n as u32) / factorial(n as u32),
        ));
    }
    PowerSeries { coeffs }
}

/// The geometric kernel `t/(1-t) = t + t^2 + ...`.
fn t_over_one_minus_t(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    for n in 1..=order {
        s.coeffs[n] = Polynomial::one();
    }
    s
}

/// The normalized generating series of the family; all coefficients are
/// polynomials in `x` over the rationals.
pub fn ghat_series(mu: &Rational, ell: u32, order: usize) -> Result<PowerSeries> {
    validate_mu(mu)?;
    let gamma = (mu + rat_int(1)) / rat_int(2) - rat_int(i64::from(ell));
    let base = binomial_series(&gamma, order);

    // exp(-(x/2) * t/(1-t))
    let kernel = t_over_one_minus_t(order);
    let exp_part = kernel.mul_poly(&Polynomial::monomial(rat(-1, 2), 1)).exp();

    // sum_m (t x / (4(1-t)))^(2m) / (m! ((mu+2)/2)_m)
    let half_mu_plus_one = (mu + rat_int(2)) / rat_int(2);
    let kernel_sq = kernel.mul(&kernel);
    let mut bessel_part = PowerSeries::one(order);
    let mut kernel_pow = PowerSeries::one(order);
    let mut m = 1usize;
    while 2 * m <= order {
        kernel_pow = kernel_pow.mul(&kernel_sq);
        let scalar = Rational::one()
            / (factorial(m as u32)
                * pochhammer(&half_mu_plus_one, m as u32)
                * crate::poly::rational_power(&rat_int(16), m as i64));
        bessel_part = bessel_part.add(
            &kernel_pow
                .mul_poly(&Polynomial::monomial(Rational::one(), 2 * m))
                .scale(&scalar),
        );
        m += 1;
    }

    // sum_{i<=ell} (2ell-i)! / ((ell-i)! i!) x^i (1-t)^(-i)
    let mut elementary_part = PowerSeries::zero(order);
    for i in 0..=ell {
        let c = factorial(2 * ell - i) / (factorial(ell - i) * factorial(i));
        elementary_part = elementary_part.add(
            &binomial_series(&rat_int(i64::from(i)), order)
                .mul_poly(&Polynomial::monomial(c, i as usize)),
        );
    }

    Ok(base.mul(&exp_part).mul(&bessel_part).mul(&elementary_part))
}

/// Extracts member `(j, ell, mu)` from the generating series. Independent
/// of the double-sum constructor; the two must agree.
pub fn m_from_series(key: &MPolyKey) -> Result<Polynomial> {
    m_from_series_at_order(key, key.j as usize + 2)
}

/// Same extraction at an explicit truncation order `>= j`, used by the
/// truncation-consistency checks.
pub fn m_from_series_at_order(key: &MPolyKey, order: usize) -> Result<Polynomial> {
    assert!(order >= key.j as usize, "truncation order below j");
    let half = (&key.mu + rat_int(1)) / rat_int(2);
    let series = ghat_series(&key.mu, key.ell, order)?;
    let scalar =
        pochhammer(&(&key.mu + rat_int(1)), key.j) / pochhammer(&half, key.j);
    Ok(series.coeff(key.j as usize).scale(&scalar))
}

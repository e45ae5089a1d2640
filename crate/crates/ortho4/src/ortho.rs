//! Exact inner products against the weight `x^(mu - 2 ell) e^(-x)` on the
//! half-line, expressed through a moment functional in units of
//! `Gamma(mu - 2 ell + 1)`. With that normalization every orthogonality and
//! norm statement becomes a pure rational identity, valid for arbitrary
//! admissible rational `mu` with no transcendental gamma values anywhere.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    factorial, gamma_ratio_reduce, is_nonpositive_integer, pochhammer, rat_int, GammaRatio,
    Rational,
};
use crate::mpoly::m_poly;
use crate::poly::Polynomial;

/// A weighted-integral value carrying the symbolic unit
/// `Gamma(mu - 2 ell + 1)`; two values over the same weight compare by
/// `value` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentValue {
    pub value: Rational,
    pub mu: Rational,
    pub ell: u32,
}

impl MomentValue {
    /// Argument of the gamma unit, `mu - 2 ell + 1`.
    pub fn unit_argument(&self) -> Rational {
        &self.mu - rat_int(2 * i64::from(self.ell) - 1)
    }
}

impl fmt::Display for MomentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * Gamma({})", self.value, self.unit_argument())
    }
}

fn weight_shift(mu: &Rational, ell: u32) -> Result<Rational> {
    let base = mu - rat_int(2 * i64::from(ell) - 1);
    if is_nonpositive_integer(&base) {
        return Err(Error::PoleInGamma(base.to_string()));
    }
    Ok(base)
}

/// `integral x^n x^(mu-2ell) e^(-x) dx` in units of `Gamma(mu - 2 ell + 1)`,
/// i.e. the Pochhammer value `(mu - 2 ell + 1)_n`.
pub fn moment(n: u32, mu: &Rational, ell: u32) -> Result<MomentValue> {
    let base = weight_shift(mu, ell)?;
    Ok(MomentValue {
        value: pochhammer(&base, n),
        mu: mu.clone(),
        ell,
    })
}

/// Weighted inner product of two polynomials, by linear extension of the
/// moment functional over the coefficients of `p q`.
pub fn inner_product(p: &Polynomial, q: &Polynomial, mu: &Rational, ell: u32) -> Result<MomentValue> {
    let base = weight_shift(mu, ell)?;
    let prod = p * q;
    let mut value = Rational::zero();
    let mut poch = Rational::one();
    let mut arg = base;
    for (n, c) in prod.coeffs().iter().enumerate() {
        if n > 0 {
            poch *= &arg;
            arg += Rational::one();
        }
        value += c * &poch;
    }
    Ok(MomentValue {
        value,
        mu: mu.clone(),
        ell,
    })
}

/// Closed-form squared norm of member `(j, ell, mu)` in units of
/// `Gamma(mu - 2 ell + 1)`:
/// `2 G(j+mu+1) G(j+ell+(mu+3)/2) G(j-ell+(mu+1)/2) /
///  (j! (2j+mu+1) G(j+(mu+1)/2)^2 G(mu-2ell+1))`.
pub fn norm_squared_formula(j: u32, mu: &Rational, ell: u32) -> Result<MomentValue> {
    let base = weight_shift(mu, ell)?;
    let jj = i64::from(j);
    let el = i64::from(ell);
    let half = (mu + rat_int(1)) / rat_int(2);
    let ratio = gamma_ratio_reduce(&GammaRatio::new(
        vec![
            mu + rat_int(jj + 1),
            &half + rat_int(jj + el + 1),
            &half + rat_int(jj - el),
        ],
        vec![&half + rat_int(jj), &half + rat_int(jj), base],
    ))?;
    let value = rat_int(2) * ratio / (factorial(j) * (mu + rat_int(2 * jj + 1)));
    Ok(MomentValue {
        value,
        mu: mu.clone(),
        ell,
    })
}

/// Full Gram matrix of the members `0..=j_max` under the weighted inner
/// product; entry `(j, k)` pairs members `j` and `k`.
pub fn gram_matrix(j_max: u32, mu: &Rational, ell: u32) -> Result<Vec<Vec<MomentValue>>> {
    let members: Vec<Polynomial> = (0..=j_max)
        .map(|j| m_poly(j, ell, mu))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(members.len());
    for p in &members {
        let mut row = Vec::with_capacity(members.len());
        for q in &members {
            row.push(inner_product(p, q, mu, ell)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Renders a Gram matrix as CSV of canonical rational strings.
pub fn gram_to_csv(gram: &[Vec<MomentValue>]) -> String {
    let mut out = String::new();
    for row in gram {
        let line: Vec<String> = row.iter().map(|m| m.value.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

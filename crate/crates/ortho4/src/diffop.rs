//! Normal-ordered operator algebra in the pair `(x, theta)` with Laurent
//! polynomial coefficients, where `theta = x d/dx` is the Euler operator.
//!
//! Every operator is kept in the normal form `sum_k c_k(x) theta^k` with all
//! powers of `theta` moved to the right using the commutation rule
//! `theta p(x) = p(x) theta + x p'(x)`, which on Laurent terms reads
//! `theta x^n = x^n theta + n x^n`. The module builds the fourth-order
//! operator of the family (cleared of its `1/x^2` prefactor), the
//! second-order operator whose square it degenerates to on the bottom layer,
//! and the related symmetric fourth-order operator, and decides every
//! operator identity by exact normal-form equality.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::exact::{binomial, rat, rat_int, Rational};
use crate::mpoly::{m_poly, MPolyKey};
use crate::poly::{rational_power, LaurentPolynomial, Polynomial};

/// Element `sum_k c_k(x) theta^k` of the operator algebra, in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffOperator {
    terms: BTreeMap<u32, LaurentPolynomial>,
}

/// Substitution rules realizing conjugation by elementary factors. Applied
/// left to right by [`DiffOperator::conjugated`].
///
/// Semantics on the generators:
/// - `NegateX`: `x -> -x`, `theta -> theta`.
/// - `MultExp(b)` (conjugation by `e^(b x)`): `theta -> theta + b x`.
/// - `MultPower(a)` (conjugation by `x^a`): `theta -> theta + a`.
/// - `Dilate(c)` (conjugation by `f -> f(c x)`): `theta -> theta`,
///   multiplication by `x` becomes multiplication by `x/c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugationRule {
    NegateX,
    MultExp(Rational),
    MultPower(Rational),
    Dilate(Rational),
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    pub fn identity() -> Self {
        DiffOperator::multiplication(LaurentPolynomial::one())
    }

    pub fn theta() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(1, LaurentPolynomial::one());
        DiffOperator { terms }
    }

    /// Multiplication by the Laurent polynomial `c`.
    pub fn multiplication(c: LaurentPolynomial) -> Self {
        let mut op = DiffOperator::default();
        op.insert(0, c);
        op
    }

    /// `theta + s` for a scalar `s`.
    pub fn theta_plus(s: Rational) -> Self {
        let mut op = DiffOperator::theta();
        op.insert(0, LaurentPolynomial::monomial(s, 0));
        op
    }

    fn insert(&mut self, k: u32, c: LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest power of `theta`, `None` for the zero operator.
    pub fn theta_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> LaurentPolynomial {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPolynomial)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return DiffOperator::zero();
        }
        DiffOperator {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c.scale(s)))
                .collect(),
        }
    }

    /// Left multiplication by a Laurent polynomial: `c . A`.
    pub fn mul_coeff_left(&self, c: &LaurentPolynomial) -> Self {
        let mut out = DiffOperator::default();
        for (&k, a) in &self.terms {
            out.insert(k, c * a);
        }
        out
    }

    /// `theta . A` in normal form.
    fn theta_compose(&self) -> Self {
        let mut out = DiffOperator::default();
        for (&k, c) in &self.terms {
            out.insert(k + 1, c.clone());
            out.insert(k, c.theta_apply());
        }
        out
    }

    /// Composition `self . rhs` (the right factor acts first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = DiffOperator::default();
        let mut theta_pow = rhs.clone(); // theta^k . rhs, starting at k = 0
        let mut next = 0;
        for (&k, c) in &self.terms {
            while next < k {
                theta_pow = theta_pow.theta_compose();
                next += 1;
            }
            let term = theta_pow.mul_coeff_left(c);
            for (kk, cc) in term.terms {
                out.insert(kk, cc);
            }
        }
        out
    }

    /// Applies the operator to a Laurent polynomial.
    pub fn apply_laurent(&self, p: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        let mut tp = p.clone(); // theta^k p
        let mut next = 0;
        for (&k, c) in &self.terms {
            while next < k {
                tp = tp.theta_apply();
                next += 1;
            }
            out = &out + &(c * &tp);
        }
        out
    }

    /// Applies the operator to an ordinary polynomial.
    pub fn apply(&self, p: &Polynomial) -> LaurentPolynomial {
        self.apply_laurent(&LaurentPolynomial::from_polynomial(p))
    }

    /// Substitutes `theta -> theta + a` for a scalar `a`.
    pub fn shift_theta(&self, a: &Rational) -> Self {
        let mut out = DiffOperator::default();
        for (&k, c) in &self.terms {
            for i in 0..=k {
                let scalar = binomial(&rat_int(i64::from(k)), i) * rational_power(a, i64::from(k - i));
                out.insert(i, c.scale(&scalar));
            }
        }
        out
    }

    /// Substitutes `theta -> s` for an arbitrary operator `s`, re-normal
    /// ordering the result.
    fn substitute_theta(&self, s: &Self) -> Self {
        let mut out = DiffOperator::default();
        let mut s_pow = DiffOperator::identity();
        let mut next = 0;
        for (&k, c) in &self.terms {
            while next < k {
                s_pow = s.compose(&s_pow);
                next += 1;
            }
            let term = s_pow.mul_coeff_left(c);
            for (kk, cc) in term.terms {
                out.insert(kk, cc);
            }
        }
        out
    }

    /// Transforms the coefficients only: `c_k(x) -> f(c_k)`.
    fn map_coeffs(&self, f: impl Fn(&LaurentPolynomial) -> LaurentPolynomial) -> Self {
        let mut out = DiffOperator::default();
        for (&k, c) in &self.terms {
            out.insert(k, f(c));
        }
        out
    }

    /// Applies conjugation rules left to right; see [`ConjugationRule`].
    pub fn conjugated(&self, rules: &[ConjugationRule]) -> Self {
        let mut op = self.clone();
        for rule in rules {
            op = match rule {
                ConjugationRule::NegateX => op.map_coeffs(|c| c.substitute_negated()),
                ConjugationRule::MultPower(a) => op.shift_theta(a),
                ConjugationRule::MultExp(b) => {
                    let s = &DiffOperator::theta()
                        + &DiffOperator::multiplication(LaurentPolynomial::monomial(
                            b.clone(),
                            1,
                        ));
                    op.substitute_theta(&s)
                }
                // x -> x/c in each coefficient
                ConjugationRule::Dilate(c) => {
                    let inv = Rational::one() / c;
                    op.map_coeffs(|p| p.substitute_scaled(&inv))
                }
            };
        }
        op
    }
}

impl std::ops::Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert(k, -c);
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) θ")?,
                _ => write!(f, "({c}) θ^{k}")?,
            }
        }
        Ok(())
    }
}

fn half_x() -> LaurentPolynomial {
    LaurentPolynomial::monomial(rat(1, 2), 1)
}

fn quarter_x2() -> LaurentPolynomial {
    LaurentPolynomial::monomial(rat(1, 4), 2)
}

// (theta + s - x/2) for a scalar shift s
fn linear_factor(s: Rational) -> DiffOperator {
    &DiffOperator::theta_plus(s) - &DiffOperator::multiplication(half_x())
}

// (theta + s1 - x/2)(theta + s2 - x/2) - (x/2)^2
fn quadratic_factor(s1: Rational, s2: Rational) -> DiffOperator {
    &linear_factor(s1).compose(&linear_factor(s2))
        - &DiffOperator::multiplication(quarter_x2())
}

/// The fourth-order operator of the family, multiplied by `x^2` so that all
/// coefficients are polynomials. The factor without the `mu` shift acts
/// first.
pub fn make_x2p(mu: &Rational, ell: u32) -> DiffOperator {
    let el = i64::from(ell);
    let b = quadratic_factor(rat_int(-(2 * el + 1)), Rational::zero());
    let a = quadratic_factor(mu - rat_int(2 * el + 1), mu.clone());
    a.compose(&b)
}

/// Residual of the eigen-equation: `x^2 P M_j - j(j+mu+1) x^2 M_j`.
/// Zero exactly when the member solves the fourth-order equation.
pub fn eigen_residual(key: &MPolyKey) -> Result<LaurentPolynomial> {
    let m = m_poly(key.j, key.ell, &key.mu)?;
    let applied = make_x2p(&key.mu, key.ell).apply(&m);
    let lambda = rat_int(i64::from(key.j)) * (&key.mu + rat_int(i64::from(key.j) + 1));
    let scaled = LaurentPolynomial::from_polynomial(&m)
        .mul_xpow(2)
        .scale(&lambda);
    Ok(&applied - &scaled)
}

/// The second-order operator `(1/x)(theta^2 + (mu - x) theta - ((mu+1)/2) x)`
/// whose square reproduces the fourth-order operator on the bottom layer.
pub fn make_q(mu: &Rational) -> DiffOperator {
    let mut op = DiffOperator::zero();
    op.insert(2, LaurentPolynomial::monomial(Rational::one(), -1));
    op.insert(
        1,
        &LaurentPolynomial::monomial(mu.clone(), -1) - &LaurentPolynomial::one(),
    );
    op.insert(
        0,
        LaurentPolynomial::monomial(-(mu + rat_int(1)) / rat_int(2), 0),
    );
    op
}

/// Checks `x^2 (Q^2 - ((mu+1)/2)^2) = x^2 P` at `ell = 0` in normal form.
pub fn square_identity_check(mu: &Rational) -> bool {
    let q = make_q(mu);
    let c = (mu + rat_int(1)) / rat_int(2);
    let inner = &q.compose(&q) - &DiffOperator::identity().scale(&(&c * &c));
    let lhs = inner.mul_coeff_left(&LaurentPolynomial::monomial(Rational::one(), 2));
    lhs == make_x2p(mu, 0)
}

/// The symmetric fourth-order operator, multiplied by `x^2`:
/// `((theta+nu)(theta+mu+nu) - x^2)(theta(theta+mu) - x^2)
///  - ((mu-nu)(mu+nu+2)/2) x^2`.
pub fn make_d(mu: &Rational, nu: &Rational) -> DiffOperator {
    let x2 = LaurentPolynomial::monomial(Rational::one(), 2);
    let u = &DiffOperator::theta_plus(nu.clone()).compose(&DiffOperator::theta_plus(mu + nu))
        - &DiffOperator::multiplication(x2.clone());
    let v = &DiffOperator::theta().compose(&DiffOperator::theta_plus(mu.clone()))
        - &DiffOperator::multiplication(x2.clone());
    let constant = (mu - nu) * (mu + nu + rat_int(2)) / rat_int(2);
    &u.compose(&v) - &DiffOperator::multiplication(x2.scale(&constant))
}

/// Checks the symmetry of the operator above under swapping its parameters.
pub fn d_symmetry_check(mu: &Rational, nu: &Rational) -> bool {
    make_d(mu, nu) == make_d(nu, mu)
}

/// Conjugation identity connecting the symmetric operator at `nu = 2 ell + 1`
/// with the fourth-order operator of the family: conjugating by
/// `x^(-(2 ell + 1))`, then by `e^(-x)`, then dilating by 2 must produce
/// `4 P + (mu - 2 ell - 1)(mu + 2 ell + 3)/2`. Both sides are compared with
/// the `x^2` prefactor cleared, which turns the dilation of `1/x^2` into the
/// extra factor 4.
pub fn lemma33_check(mu: &Rational, ell: u32) -> bool {
    let el = i64::from(ell);
    let nu = rat_int(2 * el + 1);
    let conj = make_d(mu, &nu).conjugated(&[
        ConjugationRule::MultPower(-&nu),
        ConjugationRule::MultExp(rat_int(-1)),
        ConjugationRule::Dilate(rat_int(2)),
    ]);
    let kappa = (mu - rat_int(2 * el + 1)) * (mu + rat_int(2 * el + 3)) / rat_int(2);
    let rhs = &make_x2p(mu, ell)
        + &DiffOperator::multiplication(LaurentPolynomial::monomial(kappa / rat_int(4), 2));
    conj == rhs
}

/// Invariance of the fourth-order operator under `f(x) -> e^x f(-x)`,
/// checked as a single conjugation equality (the transform is an
/// involution).
pub fn involution_check(mu: &Rational, ell: u32) -> bool {
    let p = make_x2p(mu, ell);
    let conj = p.conjugated(&[
        ConjugationRule::MultExp(rat_int(1)),
        ConjugationRule::NegateX,
    ]);
    conj == p
}

/// Exact multiset of rational roots of the indicial polynomial of the
/// fourth-order operator at `x = 0`, i.e. the characteristic exponents of
/// its regular singularity there. For this operator the multiset is
/// `{0, -mu, 2 ell + 1, 2 ell + 1 - mu}`.
pub fn indicial_roots(mu: &Rational, ell: u32) -> Vec<Rational> {
    let op = make_x2p(mu, ell);
    let mut coeffs = Vec::new();
    for k in 0..=op.theta_degree().unwrap_or(0) {
        let c = op.coeff(k);
        debug_assert!(c.min_exponent().map_or(true, |n| n >= 0));
        coeffs.push(c.coeff(0));
    }
    let indicial = Polynomial::from_coeffs(coeffs);
    let mut roots = rational_roots(&indicial);
    roots.sort();
    roots
}

/// All rational roots of a nonzero polynomial, with multiplicity, via the
/// rational root theorem on the integer-scaled coefficients.
pub fn rational_roots(p: &Polynomial) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    assert!(!p.is_zero(), "root-finding on the zero polynomial");
    // strip roots at zero
    while p.degree().is_some_and(|d| d > 0) && p.coeff(0).is_zero() {
        roots.push(Rational::zero());
        p = Polynomial::from_coeffs(p.coeffs()[1..].to_vec());
    }
    'deflate: while p.degree().is_some_and(|d| d > 0) {
        // clear denominators
        let mut scale = num_bigint::BigInt::one();
        for c in p.coeffs() {
            scale = num_integer::lcm(scale, c.denom().clone());
        }
        let ints: Vec<num_bigint::BigInt> = p
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(scale.clone())).to_integer())
            .collect();
        let a0 = ints[0].magnitude().to_u64().expect("constant term fits");
        let an = ints[ints.len() - 1]
            .magnitude()
            .to_u64()
            .expect("leading term fits");
        for num in divisors(a0) {
            for den in divisors(an) {
                for sign in [1i64, -1] {
                    let cand = rat(sign * num as i64, den as i64);
                    if p.eval_exact(&cand).is_zero() {
                        roots.push(cand.clone());
                        let factor = Polynomial::from_coeffs(vec![-cand, Rational::one()]);
                        let (q, r) = p.div_rem(&factor);
                        debug_assert!(r.is_zero());
                        p = q;
                        continue 'deflate;
                    }
                }
            }
        }
        break; // no further rational roots
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Expected exponent multiset `{0, -mu, 2 ell + 1, 2 ell + 1 - mu}`, sorted.
pub fn expected_indicial_roots(mu: &Rational, ell: u32) -> Vec<Rational> {
    let el = i64::from(ell);
    let mut v = vec![
        Rational::zero(),
        -mu,
        rat_int(2 * el + 1),
        rat_int(2 * el + 1) - mu,
    ];
    v.sort();
    v
}

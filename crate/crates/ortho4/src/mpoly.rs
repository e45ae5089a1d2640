//! The two-parameter polynomial family and its exact verification suite:
//! the explicit double-sum constructor, the closed form of the bottom
//! member, special values, the five recurrence relations, the inductive
//! construction along `ell`, and the classical Laguerre identities.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, gamma_ratio_reduce, is_integer, pochhammer, rat, rat_int, validate_mu,
    GammaRatio, Rational,
};
use crate::poly::{eval_rational_function, rational_power, Polynomial};
use crate::report::{ReportEntry, Status, VerificationReport};

/// Index of one member of the family. `mu` must avoid `{-1, -2, -3, ...}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPolyKey {
    pub j: u32,
    pub ell: u32,
    pub mu: Rational,
}

impl MPolyKey {
    pub fn new(j: u32, ell: u32, mu: Rational) -> Result<Self> {
        validate_mu(&mu)?;
        Ok(MPolyKey { j, ell, mu })
    }
}

/// Laguerre polynomial from the defining sum
/// `L_n^a(x) = sum_{k=0}^{n} ((-1)^k / k!) C(n+a, n-k) x^k`.
pub fn laguerre(n: u32, alpha: &Rational) -> Polynomial {
    let upper = alpha + rat_int(i64::from(n));
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let sign = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        coeffs.push(sign * binomial(&upper, n - k) / factorial(k));
    }
    Polynomial::from_coeffs(coeffs)
}

/// Member `(j, ell, mu)` of the family, built from the explicit double sum
/// over Laguerre polynomials. The gamma quotients are grouped so that every
/// pairing carries an integer offset, which keeps the coefficients exactly
/// rational for every admissible rational `mu`.
pub fn m_polynomial(key: &MPolyKey) -> Result<Polynomial> {
    m_poly(key.j, key.ell, &key.mu)
}

/// Raw-argument form of [`m_polynomial`].
pub fn m_poly(j: u32, ell: u32, mu: &Rational) -> Result<Polynomial> {
    validate_mu(mu)?;
    let half = (mu + rat_int(1)) / rat_int(2);
    let mut acc = Polynomial::zero();
    for k in 0..=j.min(ell) {
        let jk = i64::from(j - k);
        let ratio = gamma_ratio_reduce(&GammaRatio::new(
            vec![mu + rat_int(i64::from(j) + 1), &half + rat_int(jk)],
            vec![&half + rat_int(i64::from(j)), mu + rat_int(jk + 1)],
        ))?;
        let sign = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        let scalar = sign * ratio / factorial(k);
        // inner sum over i: sum_i (2l-i)! / ((l-i-k)! i!) x^i
        let mut inner = Vec::with_capacity((ell - k) as usize + 1);
        for i in 0..=(ell - k) {
            inner.push(factorial(2 * ell - i) / (factorial(ell - i - k) * factorial(i)));
        }
        let term = &laguerre(j - k, mu) * &Polynomial::from_coeffs(inner);
        acc = &acc + &term.scale(&scalar);
    }
    Ok(acc)
}

/// Member with possibly negative first index; negative indices are the zero
/// polynomial by convention, matching the generating-function picture.
pub fn m_poly_signed(j: i64, ell: u32, mu: &Rational) -> Result<Polynomial> {
    if j < 0 {
        return Ok(Polynomial::zero());
    }
    m_poly(j as u32, ell, mu)
}

/// Closed form of the bottom member `j = 0`:
/// `sum_{k=0}^{ell} (2 ell - k)! / (k! (ell-k)!) x^k`. Independent of `mu`.
pub fn m_zero_closed_form(ell: u32) -> Polynomial {
    let mut coeffs = Vec::with_capacity(ell as usize + 1);
    for k in 0..=ell {
        coeffs.push(factorial(2 * ell - k) / (factorial(k) * factorial(ell - k)));
    }
    Polynomial::from_coeffs(coeffs)
}

/// Constant term of the member `(j, ell, mu)` from the closed formula
/// `2^(2 ell - mu) G(ell+1/2) G(j+mu+1) ((mu+1)/2 - ell)_j /
///  (j! G((mu+2)/2) G(j+(mu+1)/2))`.
///
/// The exact path requires `mu` to be an odd positive integer; the
/// half-integer gamma values then cancel structurally and the power of two
/// stays rational. Other `mu` are served by the float cross-check in
/// [`crate::numint::constant_term_float`].
pub fn constant_term(key: &MPolyKey) -> Result<Rational> {
    let MPolyKey { j, ell, mu } = key;
    let mu_int: Option<i64> = if is_integer(mu) {
        i64::try_from(mu.to_integer()).ok()
    } else {
        None
    };
    let odd_positive = mu_int.is_some_and(|m| m > 0 && m % 2 == 1);
    if !odd_positive {
        return Err(Error::UnreducibleRatio(format!(
            "constant-term exact path needs an odd positive integer mu, got {mu}"
        )));
    }
    let half = (mu + rat_int(1)) / rat_int(2);
    let ratio = gamma_ratio_reduce(&GammaRatio::new(
        vec![rat(2 * i64::from(*ell) + 1, 2), mu + rat_int(i64::from(*j) + 1)],
        vec![
            (mu + rat_int(2)) / rat_int(2),
            &half + rat_int(i64::from(*j)),
        ],
    ))?;
    let two_pow = rational_power(&rat_int(2), 2 * i64::from(*ell) - mu_int.unwrap());
    let poch = pochhammer(&(&half - rat_int(i64::from(*ell))), *j);
    Ok(two_pow * ratio * poch / factorial(*j))
}

/// The five recurrence relations. `InEllLiteral` is the `ell`-recurrence
/// exactly as printed, with `nu := 2 ell + 1` and coefficient `(x/2)^2`;
/// `InEll` is the corrected form with coefficient `x^2/2`, which is the one
/// that holds identically (see [`verify_recurrence`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceKind {
    /// Three-term relation for `(2 theta - x) M_j`.
    ThreeTerm,
    /// Five-term relation for `x^2 M_j`.
    FiveTerm,
    /// Relation shifting `mu` by 2.
    InMu,
    /// Relation shifting `ell` by 1, corrected coefficient `x^2/2`.
    InEll,
    /// Relation shifting `ell` by 1 as printed, coefficient `(x/2)^2`.
    InEllLiteral,
    /// Mixed relation shifting `mu` and `ell`.
    InMuEll,
}

impl RecurrenceKind {
    pub fn id(&self) -> &'static str {
        match self {
            RecurrenceKind::ThreeTerm => "recurrence-1",
            RecurrenceKind::FiveTerm => "recurrence-2",
            RecurrenceKind::InMu => "recurrence-3",
            RecurrenceKind::InEll => "recurrence-4",
            RecurrenceKind::InEllLiteral => "recurrence-4-literal",
            RecurrenceKind::InMuEll => "recurrence-5",
        }
    }
}

// mu + c as a polynomial in the variable mu
fn mu_plus(c: i64) -> Polynomial {
    Polynomial::from_coeffs(vec![rat_int(c), rat_int(1)])
}

fn poly_product(factors: &[Polynomial]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

// Evaluates a coefficient given as a ratio of polynomials in mu, cancelling
// removable singularities. The only removable point on integer j >= 0 is
// (j, mu) = (0, 1) in the five-term relation's middle coefficient.
fn coefficient(num: Polynomial, den: Polynomial, mu: &Rational) -> Result<Rational> {
    eval_rational_function(&num, &den, mu).ok_or_else(|| {
        Error::DomainError(format!("recurrence coefficient has a pole at mu = {mu}"))
    })
}

/// Returns the residual `LHS - RHS` of the chosen recurrence at `key`;
/// the zero polynomial means the relation holds there.
pub fn verify_recurrence(kind: RecurrenceKind, key: &MPolyKey) -> Result<Polynomial> {
    let MPolyKey { j, ell, mu } = key;
    let j = i64::from(*j);
    let ell = *ell;
    let x = Polynomial::x();
    let x2 = Polynomial::monomial(Rational::one(), 2);

    match kind {
        RecurrenceKind::ThreeTerm => {
            let mj = m_poly_signed(j, ell, mu)?;
            let lhs = &mj.theta_apply().scale(&rat_int(2)) - &(&x * &mj);
            let mut rhs = m_poly_signed(j + 1, ell, mu)?.scale(&rat_int(j + 1));
            rhs = &rhs - &mj.scale(&(mu - rat_int(2 * i64::from(ell) - 1)));
            if j >= 1 {
                let el = i64::from(ell);
                let c = coefficient(
                    poly_product(&[
                        mu_plus(j),
                        mu_plus(2 * j + 2 * el + 1),
                        mu_plus(2 * j - 2 * el - 1),
                    ]),
                    poly_product(&[mu_plus(2 * j + 1), mu_plus(2 * j - 1)]),
                    mu,
                )?;
                rhs = &rhs - &m_poly_signed(j - 1, ell, mu)?.scale(&c);
            }
            Ok(&lhs - &rhs)
        }
        RecurrenceKind::FiveTerm => {
            let el = i64::from(ell);
            let mj = m_poly_signed(j, ell, mu)?;
            let lhs = &x2 * &mj;
            let mut rhs = m_poly_signed(j + 2, ell, mu)?.scale(&rat_int((j + 1) * (j + 2)));
            rhs = &rhs
                + &m_poly_signed(j + 1, ell, mu)?
                    .scale(&(rat_int(-2 * (j + 1)) * (mu + rat_int(2 * j + 2))));
            // middle coefficient as one rational function of mu so the
            // removable singularity at (j, mu) = (0, 1) cancels exactly
            let quad_a = Polynomial::from_coeffs(vec![
                rat_int(6 * j * j + 6 * j + 2),
                rat_int(6 * j + 3),
                rat_int(1),
            ]); // 6j^2 + 6(mu+1)j + (mu+1)(mu+2)
            let quad_b = Polynomial::from_coeffs(vec![
                rat_int(2 * j * j + 2 * j - 2),
                rat_int(2 * j + 1),
                rat_int(1),
            ]); // 2j^2 + 2(mu+1)j + (mu-1)(mu+2)
            let den = poly_product(&[mu_plus(2 * j - 1), mu_plus(2 * j + 3)]);
            let num = &(&quad_a * &den) - &quad_b.scale(&rat_int(4 * el * (el + 1)));
            let a0 = coefficient(num, den, mu)?;
            rhs = &rhs + &mj.scale(&a0);
            if j >= 1 {
                let c = coefficient(
                    poly_product(&[
                        mu_plus(j),
                        mu_plus(2 * j),
                        mu_plus(2 * j + 2 * el + 1),
                        mu_plus(2 * j - 2 * el - 1),
                    ])
                    .scale(&rat_int(-2)),
                    poly_product(&[mu_plus(2 * j - 1), mu_plus(2 * j + 1)]),
                    mu,
                )?;
                rhs = &rhs + &m_poly_signed(j - 1, ell, mu)?.scale(&c);
            }
            if j >= 2 {
                let c = coefficient(
                    poly_product(&[
                        mu_plus(j - 1),
                        mu_plus(j),
                        mu_plus(2 * j + 2 * el - 1),
                        mu_plus(2 * j - 2 * el - 3),
                        mu_plus(2 * j + 2 * el + 1),
                        mu_plus(2 * j - 2 * el - 1),
                    ]),
                    poly_product(&[
                        mu_plus(2 * j - 3),
                        mu_plus(2 * j - 1),
                        mu_plus(2 * j - 1),
                        mu_plus(2 * j + 1),
                    ]),
                    mu,
                )?;
                rhs = &rhs + &m_poly_signed(j - 2, ell, mu)?.scale(&c);
            }
            Ok(&lhs - &rhs)
        }
        RecurrenceKind::InMu => {
            let mj = m_poly_signed(j, ell, mu)?;
            let mjm1 = m_poly_signed(j - 1, ell, mu)?;
            let lhs = &mj.scale(&(mu * &(mu + rat_int(2 * j - 1))))
                - &mjm1.scale(&(rat_int(2) * mu * (mu + rat_int(j))));
            let down = m_poly_signed(j, ell, &(mu - rat_int(2)))?;
            let up = m_poly_signed(j - 2, ell, &(mu + rat_int(2)))?;
            let rhs = &down.scale(&((mu + rat_int(j - 1)) * (mu + rat_int(j)))) - &(&x2 * &up);
            Ok(&lhs - &rhs)
        }
        RecurrenceKind::InEll | RecurrenceKind::InEllLiteral => {
            if ell == 0 {
                return Err(Error::DomainError(
                    "the ell-recurrence needs ell >= 1".into(),
                ));
            }
            let el = i64::from(ell);
            let nu = rat_int(2 * el + 1);
            let lead = mu + rat_int(2 * j - 1);
            let mj = m_poly_signed(j, ell, mu)?;
            let mjm1 = m_poly_signed(j - 1, ell, mu)?;
            let lhs = &mj.scale(&(&nu * &lead))
                - &mjm1.scale(&(rat_int(2) * &nu * (mu + rat_int(j))));
            let upper = m_poly_signed(j, ell + 1, mu)?;
            let lower = m_poly_signed(j, ell - 1, mu)?;
            let coeff = match kind {
                RecurrenceKind::InEll => rat(1, 2),
                _ => rat(1, 4),
            };
            let rhs = &upper.scale(&(&lead / rat_int(2)))
                - &(&x2 * &lower).scale(&(&lead * coeff));
            Ok(&lhs - &rhs)
        }
        RecurrenceKind::InMuEll => {
            let el = i64::from(ell);
            let lead = mu + rat_int(2 * j - 1);
            let mj = m_poly_signed(j, ell, mu)?;
            let mjm1 = m_poly_signed(j - 1, ell, mu)?;
            let inner = &mj.scale(&(rat_int(2) * &lead))
                - &mjm1.scale(&(rat_int(4) * (mu + rat_int(j))));
            let lhs = apply_theta_shift_half_x(&inner, 2 * el + 1);
            let up = m_poly_signed(j - 2, ell, &(mu + rat_int(2)))?;
            let upper = m_poly_signed(j, ell + 1, mu)?;
            let rhs = &(&x2 * &up).scale(&rat_int(2)) - &upper.scale(&lead);
            Ok(&lhs - &rhs)
        }
    }
}

// (theta - s - x/2) p
fn apply_theta_shift_half_x(p: &Polynomial, s: i64) -> Polynomial {
    let half_x = Polynomial::monomial(rat(1, 2), 1);
    &(&p.theta_apply() - &p.scale(&rat_int(s))) - &(&half_x * p)
}

/// Builds the member `(j, ell, mu)` inductively from the Laguerre layer
/// `ell = 0` by solving the mixed recurrence for the next `ell`. Fails with
/// [`Error::DegenerateLeadingFactor`] when `2j + mu - 1 = 0` at any step.
pub fn build_via_ell_recurrence(key: &MPolyKey) -> Result<Polynomial> {
    build_rec(i64::from(key.j), key.ell, &key.mu)
}

fn build_rec(j: i64, ell: u32, mu: &Rational) -> Result<Polynomial> {
    if j < 0 {
        return Ok(Polynomial::zero());
    }
    validate_mu(mu)?;
    if ell == 0 {
        return Ok(laguerre(j as u32, mu));
    }
    let lead = mu + rat_int(2 * j - 1);
    if lead.is_zero() {
        return Err(Error::DegenerateLeadingFactor {
            j: j as u32,
            mu: mu.to_string(),
        });
    }
    let prev = ell - 1;
    let mj = build_rec(j, prev, mu)?;
    let mjm1 = build_rec(j - 1, prev, mu)?;
    let mjm2 = build_rec(j - 2, prev, &(mu + rat_int(2)))?;
    let inner =
        &mj.scale(&(rat_int(2) * &lead)) - &mjm1.scale(&(rat_int(4) * (mu + rat_int(j))));
    let applied = apply_theta_shift_half_x(&inner, 2 * i64::from(prev) + 1);
    let x2 = Polynomial::monomial(Rational::one(), 2);
    let rhs = &(&x2 * &mjm2).scale(&rat_int(2)) - &applied;
    Ok(rhs.scale(&(Rational::one() / lead)))
}

/// Exact verification of the seven classical Laguerre identities plus the
/// derivative summation formula, for `n <= n_max` and each sampled `alpha`.
pub fn laguerre_identity_suite(n_max: u32, alphas: &[Rational]) -> VerificationReport {
    let x = Polynomial::x();
    let mut entries = Vec::new();
    let lag_signed = |n: i64, a: &Rational| -> Polynomial {
        if n < 0 {
            Polynomial::zero()
        } else {
            laguerre(n as u32, a)
        }
    };
    for alpha in alphas {
        for n in 0..=i64::from(n_max) {
            let ln = lag_signed(n, alpha);
            let lnm1 = lag_signed(n - 1, alpha);
            let lnp1 = lag_signed(n + 1, alpha);
            let checks: Vec<(&str, Polynomial)> = vec![
                (
                    "laguerre-1-x-three-term",
                    &(&(&x * &ln) + &lnp1.scale(&rat_int(n + 1)))
                        - &(&ln.scale(&(alpha + rat_int(2 * n + 1)))
                            - &lnm1.scale(&(alpha + rat_int(n)))),
                ),
                (
                    "laguerre-2-derivative-diff",
                    &(&ln.derivative() - &lnm1.derivative()) + &lnm1,
                ),
                (
                    "laguerre-3-derivative-alpha-shift",
                    &ln.derivative() + &lag_signed(n - 1, &(alpha + rat_int(1))),
                ),
                (
                    "laguerre-4-theta",
                    &ln.theta_apply()
                        - &(&ln.scale(&rat_int(n)) - &lnm1.scale(&(alpha + rat_int(n)))),
                ),
                (
                    "laguerre-5-ode",
                    &(&(&x * &ln.derivative().derivative())
                        + &(&ln.derivative()
                            * &Polynomial::from_coeffs(vec![
                                alpha + rat_int(1),
                                -Rational::one(),
                            ])))
                        + &ln.scale(&rat_int(n)),
                ),
                (
                    "laguerre-6-x-alpha-raise",
                    &(&x * &lag_signed(n, &(alpha + rat_int(1))))
                        - &(&ln.scale(&(alpha + rat_int(n + 1))) - &lnp1.scale(&rat_int(n + 1))),
                ),
                (
                    "laguerre-7-alpha-lower",
                    &lnm1 - &(&ln - &lag_signed(n, &(alpha - rat_int(1)))),
                ),
                ("laguerre-8-summation", {
                    let mut total = Polynomial::zero();
                    let mut d = ln.clone();
                    loop {
                        total = &total + &d;
                        if d.is_zero() {
                            break;
                        }
                        d = d.derivative();
                    }
                    &total - &lag_signed(n, &(alpha - rat_int(1)))
                }),
            ];
            for (id, residual) in checks {
                entries.push(ReportEntry::exact(
                    id,
                    Some(n),
                    None,
                    alpha,
                    &residual,
                    Status::from_pass(residual.is_zero()),
                ));
            }
        }
    }
    VerificationReport::new("laguerre", entries)
}

/// Exact span-membership solver: coefficients `c` with
/// `target = sum c_i basis_i`, if any exist.
pub fn solve_in_span(target: &Polynomial, basis: &[Polynomial]) -> Option<Vec<Rational>> {
    let rows = basis
        .iter()
        .chain(std::iter::once(target))
        .filter_map(|p| p.degree())
        .max()
        .map_or(1, |d| d + 1);
    let cols = basis.len();
    // augmented matrix, row per coefficient index
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|p| p.coeff(r)).collect();
            row.push(target.coeff(r));
            row
        })
        .collect();
    let mut pivot_of_col = vec![None; cols];
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = Rational::one() / &m[pivot_row][col];
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=cols {
                    let delta = &f * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // consistency: no row of the form 0 ... 0 | nonzero
    for r in 0..rows {
        if m[r][..cols].iter().all(Zero::is_zero) && !m[r][cols].is_zero() {
            return None;
        }
    }
    Some(
        (0..cols)
            .map(|c| {
                pivot_of_col[c].map_or_else(Rational::zero, |r| m[r][cols].clone())
            })
            .collect(),
    )
}

/// True when `x * M_0` is not a linear combination of `M_1` and `M_0` at
/// `ell = 1`, i.e. no three-term relation for multiplication by `x` exists
/// there. The analogous statement at `ell = 0` is false (that layer is the
/// classical Laguerre one).
pub fn three_term_impossibility(mu: &Rational) -> Result<bool> {
    let m0 = m_poly(0, 1, mu)?;
    let m1 = m_poly(1, 1, mu)?;
    let target = &Polynomial::x() * &m0;
    Ok(solve_in_span(&target, &[m1, m0]).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(j: u32, ell: u32, mu: i64) -> MPolyKey {
        MPolyKey::new(j, ell, rat_int(mu)).unwrap()
    }

    fn p(coeffs: &[Rational]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn laguerre_small_cases() {
        assert_eq!(laguerre(0, &rat_int(7)), Polynomial::one());
        assert_eq!(laguerre(1, &rat_int(3)), p(&[rat_int(4), rat_int(-1)]));
        assert_eq!(
            laguerre(2, &rat_int(3)),
            p(&[rat_int(10), rat_int(-5), rat(1, 2)])
        );
    }

    #[test]
    fn m_polynomial_known_members() {
        for mu in [rat_int(3), rat_int(5), rat(5, 2), rat(-1, 2)] {
            let k = MPolyKey::new(0, 1, mu).unwrap();
            assert_eq!(m_polynomial(&k).unwrap(), p(&[rat_int(2), rat_int(1)]));
        }
        // M_1^{mu,1} = -x^2 + (mu-1) x + 2(mu-1) at mu = 3
        assert_eq!(
            m_polynomial(&key(1, 1, 3)).unwrap(),
            p(&[rat_int(4), rat_int(2), rat_int(-1)])
        );
        assert_eq!(
            m_polynomial(&key(2, 1, 3)).unwrap(),
            p(&[rat(20, 3), rat(10, 3), rat_int(-4), rat(1, 2)])
        );
    }

    #[test]
    fn reduces_to_laguerre_at_ell_zero() {
        for mu in [rat_int(1), rat_int(3), rat(5, 2), rat(-1, 2)] {
            for j in 0..=10 {
                assert_eq!(
                    m_poly(j, 0, &mu).unwrap(),
                    laguerre(j, &mu),
                    "j = {j}, mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn zero_member_closed_form() {
        assert_eq!(m_zero_closed_form(0), Polynomial::one());
        assert_eq!(m_zero_closed_form(1), p(&[rat_int(2), rat_int(1)]));
        assert_eq!(
            m_zero_closed_form(2),
            p(&[rat_int(12), rat_int(6), rat_int(1)])
        );
        for ell in 0..=4 {
            for mu in [rat_int(3), rat(5, 2), rat(-1, 2), rat_int(2)] {
                assert_eq!(m_poly(0, ell, &mu).unwrap(), m_zero_closed_form(ell));
            }
        }
        // half-integer Bessel recurrence of the bottom members
        let x2 = Polynomial::monomial(Rational::one(), 2);
        for ell in 1..=3i64 {
            let lhs = m_zero_closed_form(ell as u32 + 1);
            let rhs = &(&x2 * &m_zero_closed_form(ell as u32 - 1))
                + &m_zero_closed_form(ell as u32).scale(&rat_int(2 * (2 * ell + 1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn degree_and_top_coefficient() {
        for mu in [rat_int(1), rat_int(3), rat_int(2), rat(5, 2), rat(-1, 2)] {
            for ell in 0..=3u32 {
                for j in 0..=8u32 {
                    let m = m_poly(j, ell, &mu).unwrap();
                    assert_eq!(m.degree(), Some((j + ell) as usize));
                    let expected = if j % 2 == 0 {
                        Rational::one() / factorial(j)
                    } else {
                        -Rational::one() / factorial(j)
                    };
                    assert_eq!(m.leading_coeff(), Some(&expected));
                }
            }
        }
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(constant_term(&key(1, 1, 3)).unwrap(), rat_int(4));
        assert_eq!(constant_term(&key(2, 1, 3)).unwrap(), rat(20, 3));
        assert_eq!(constant_term(&key(1, 2, 3)).unwrap(), Rational::zero());
        // matches evaluation at zero across an odd-mu grid
        for mu in [1i64, 3, 5, 7] {
            for ell in 0..=3 {
                for j in 0..=6 {
                    let k = key(j, ell, mu);
                    assert_eq!(
                        constant_term(&k).unwrap(),
                        m_polynomial(&k).unwrap().eval_exact(&Rational::zero()),
                        "j={j} ell={ell} mu={mu}"
                    );
                }
            }
        }
        // non-odd mu is rejected on the exact path
        let k = MPolyKey::new(1, 1, rat(5, 2)).unwrap();
        assert!(matches!(
            constant_term(&k),
            Err(Error::UnreducibleRatio(_))
        ));
        let k = MPolyKey::new(1, 1, rat_int(2)).unwrap();
        assert!(matches!(
            constant_term(&k),
            Err(Error::UnreducibleRatio(_))
        ));
    }

    #[test]
    fn recurrence_spot_checks() {
        // kind 1 at (0,1,3): both sides -x^2
        let r = verify_recurrence(RecurrenceKind::ThreeTerm, &key(0, 1, 3)).unwrap();
        assert!(r.is_zero(), "residual {r}");
        // kind 2 at (0,1,3)
        let r = verify_recurrence(RecurrenceKind::FiveTerm, &key(0, 1, 3)).unwrap();
        assert!(r.is_zero(), "residual {r}");
        // kind 3 at (1,1,3)
        let r = verify_recurrence(RecurrenceKind::InMu, &key(1, 1, 3)).unwrap();
        assert!(r.is_zero(), "residual {r}");
        // literal kind 4 at (0,1,3) leaves -x^2/2
        let r = verify_recurrence(RecurrenceKind::InEllLiteral, &key(0, 1, 3)).unwrap();
        assert_eq!(r, Polynomial::monomial(rat(-1, 2), 2));
        // corrected kind 4 at (1,1,3)
        let r = verify_recurrence(RecurrenceKind::InEll, &key(1, 1, 3)).unwrap();
        assert!(r.is_zero(), "residual {r}");
        // kind 5 at (1,0,3): both sides 4x^2 - 8x - 16
        let r = verify_recurrence(RecurrenceKind::InMuEll, &key(1, 0, 3)).unwrap();
        assert!(r.is_zero(), "residual {r}");
    }

    #[test]
    fn recurrences_hold_on_a_grid() {
        let mus = [rat_int(3), rat_int(5), rat_int(2), rat(5, 2), rat(-1, 2)];
        for mu in &mus {
            for ell in 0..=2u32 {
                for j in 0..=5u32 {
                    let k = MPolyKey::new(j, ell, mu.clone()).unwrap();
                    for kind in [
                        RecurrenceKind::ThreeTerm,
                        RecurrenceKind::FiveTerm,
                        RecurrenceKind::InMuEll,
                    ] {
                        let r = verify_recurrence(kind, &k).unwrap();
                        assert!(r.is_zero(), "{:?} at j={j} ell={ell} mu={mu}: {r}", kind);
                    }
                    if ell >= 1 {
                        let r = verify_recurrence(RecurrenceKind::InEll, &k).unwrap();
                        assert!(r.is_zero(), "InEll at j={j} ell={ell} mu={mu}: {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn five_term_holds_at_the_removable_point() {
        // (j, mu) = (0, 1): the middle coefficient is a removable 0/0
        for ell in 0..=3u32 {
            let r = verify_recurrence(RecurrenceKind::FiveTerm, &key(0, ell, 1)).unwrap();
            assert!(r.is_zero(), "ell={ell}: {r}");
        }
    }

    #[test]
    fn ell_recurrence_builds_the_family() {
        assert_eq!(
            build_via_ell_recurrence(&key(0, 1, 3)).unwrap(),
            p(&[rat_int(2), rat_int(1)])
        );
        assert_eq!(
            build_via_ell_recurrence(&key(1, 1, 3)).unwrap(),
            p(&[rat_int(4), rat_int(2), rat_int(-1)])
        );
        let k = key(2, 2, 5);
        assert_eq!(
            build_via_ell_recurrence(&k).unwrap(),
            m_polynomial(&k).unwrap()
        );
        // degenerate at 2j + mu - 1 = 0
        assert!(matches!(
            build_via_ell_recurrence(&key(0, 1, 1)),
            Err(Error::DegenerateLeadingFactor { .. })
        ));
    }

    #[test]
    fn laguerre_suite_passes() {
        let alphas = [rat_int(0), rat_int(1), rat_int(3), rat(1, 2)];
        let report = laguerre_identity_suite(6, &alphas);
        assert!(!report.has_failures(), "{report:?}");
        assert!(!report.entries().is_empty());
    }

    #[test]
    fn three_term_impossibility_and_control() {
        for mu in [rat_int(3), rat_int(5), rat_int(2)] {
            assert!(three_term_impossibility(&mu).unwrap(), "mu = {mu}");
        }
        // control at ell = 0: x L_0 lies in span{L_1, L_0}
        let mu = rat_int(3);
        let target = &Polynomial::x() * &laguerre(0, &mu);
        let sol = solve_in_span(&target, &[laguerre(1, &mu), laguerre(0, &mu)]);
        assert_eq!(sol, Some(vec![rat_int(-1), rat_int(4)]));
    }
}

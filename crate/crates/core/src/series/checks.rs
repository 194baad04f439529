//! Coefficientwise verification of the functional equations between the
//! path series `A` and `B`, and of the closed forms for `A(x, y, z)` and
//! `E(x, y)`.
//!
//! The closed forms are checked cross-multiplied: `den * A = num + sqrt`.
//! The divisors vanish at `x = 0`, so [`expand_closed_form_a`] and
//! [`expand_closed_form_e`] offer the direct expansion as a second route that
//! needs exact polynomial division at every order.

use super::{a_from_tables, b_from_tables, e_from_rows, PolySeries, SeriesError};
use crate::report::{CheckReport, IdentityReport, Mismatch};
use crate::scalar::{Count, Scalar};
use crate::tables::Tables;

/// Compares two series up to the smaller of their orders.
pub fn compare<T: Scalar>(name: &str, lhs: &PolySeries<T>, rhs: &PolySeries<T>) -> IdentityReport {
    let order = lhs.order().min(rhs.order());
    for x in 0..=order {
        let (l, r) = (lhs.coeff(x), rhs.coeff(x));
        if l == r {
            continue;
        }
        let mut keys: Vec<(u32, u32)> = l.terms().chain(r.terms()).map(|(k, _)| k).collect();
        keys.sort_unstable();
        keys.dedup();
        for (y, z) in keys {
            let (a, b) = (l.coeff(y, z), r.coeff(y, z));
            if a != b {
                return IdentityReport {
                    name: name.to_string(),
                    order,
                    mismatch: Some(Mismatch {
                        x,
                        y,
                        z,
                        lhs: a.to_string(),
                        rhs: b.to_string(),
                    }),
                };
            }
        }
    }
    IdentityReport::pass(name, order)
}

/// Reports the first coefficient that is not a nonnegative integer.
fn check_nonnegative_integers<T: Scalar>(name: &str, s: &PolySeries<T>) -> IdentityReport {
    for (x, p) in s.coeffs().iter().enumerate() {
        for ((y, z), c) in p.terms() {
            let ok = c
                .to_bigint()
                .is_some_and(|v| v.sign() != num_bigint::Sign::Minus);
            if !ok {
                return IdentityReport {
                    name: name.to_string(),
                    order: s.order(),
                    mismatch: Some(Mismatch {
                        x,
                        y,
                        z,
                        lhs: c.to_string(),
                        rhs: "nonnegative integer".to_string(),
                    }),
                };
            }
        }
    }
    IdentityReport::pass(name, s.order())
}

/// `1 - 2xy - 4x^2y + x^2y^2 - 2xz + 2x^2yz + x^2z^2`
pub fn closed_form_a_radicand<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(
        &[
            (1, 0, 0, 0),
            (-2, 1, 1, 0),
            (-4, 2, 1, 0),
            (1, 2, 2, 0),
            (-2, 1, 0, 1),
            (2, 2, 1, 1),
            (1, 2, 0, 2),
        ],
        order,
    )
}

/// `-1 + xy + 2x^2y - 2x^2y^2 + xz - 2xyz - 2x^2yz + 2x^2y^2z`
pub fn closed_form_a_numerator_polynomial<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(
        &[
            (-1, 0, 0, 0),
            (1, 1, 1, 0),
            (2, 2, 1, 0),
            (-2, 2, 2, 0),
            (1, 1, 0, 1),
            (-2, 1, 1, 1),
            (-2, 2, 1, 1),
            (2, 2, 2, 1),
        ],
        order,
    )
}

/// `2xy(xyz - z - xy)`
pub fn closed_form_a_denominator<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(&[(2, 2, 2, 1), (-2, 1, 1, 1), (-2, 2, 2, 0)], order)
}

/// `1 - 4xy - 4x^2y + 4x^2y^2`
pub fn closed_form_e_radicand<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(
        &[(1, 0, 0, 0), (-4, 1, 1, 0), (-4, 2, 1, 0), (4, 2, 2, 0)],
        order,
    )
}

/// `-1 + 2xy + 2x^2y - 2xy^2 - 4x^2y^2 + 2x^2y^3`
pub fn closed_form_e_numerator_polynomial<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(
        &[
            (-1, 0, 0, 0),
            (2, 1, 1, 0),
            (2, 2, 1, 0),
            (-2, 1, 2, 0),
            (-4, 2, 2, 0),
            (2, 2, 3, 0),
        ],
        order,
    )
}

/// `2xy^2(xy - 1 - x)`
pub fn closed_form_e_denominator<T: Scalar>(order: usize) -> PolySeries<T> {
    PolySeries::from_terms(&[(2, 2, 3, 0), (-2, 1, 2, 0), (-2, 2, 2, 0)], order)
}

/// `B = (A - 1)(xz + x^2y - x^2yz) + 1 + x + x^2 - x^2z` and
/// `A = B + y(B - 1)(A - 1)`.
pub fn check_functional_equations<C: Count, T: Scalar>(
    tables: &Tables<C>,
    order: usize,
) -> Result<CheckReport, SeriesError> {
    let a: PolySeries<T> = a_from_tables(tables, order)?;
    let b: PolySeries<T> = b_from_tables(tables, order)?;
    let one = PolySeries::one(order);
    let a1 = &a - &one;
    let b1 = &b - &one;

    let factor = PolySeries::from_terms(&[(1, 1, 0, 1), (1, 2, 1, 0), (-1, 2, 1, 1)], order);
    let correction = PolySeries::from_terms(
        &[(1, 0, 0, 0), (1, 1, 0, 0), (1, 2, 0, 0), (-1, 2, 0, 1)],
        order,
    );
    let b_rhs = &(&a1 * &factor) + &correction;

    let y = PolySeries::from_terms(&[(1, 0, 1, 0)], order);
    let a_rhs = &b + &(&y * &(&b1 * &a1));

    let mut report = CheckReport::default();
    report.push(compare("B=(A-1)(xz+x^2y-x^2yz)+1+x+x^2-x^2z", &b, &b_rhs));
    report.push(compare("A=B+y(B-1)(A-1)", &a, &a_rhs));
    Ok(report)
}

/// `A(x, y, z)` expanded from its closed form, to `order`.
pub fn expand_closed_form_a<T: Scalar>(order: usize) -> Result<PolySeries<T>, SeriesError> {
    let root = closed_form_a_radicand::<T>(order + 1).sqrt()?;
    let num = &closed_form_a_numerator_polynomial(order + 1) + &root;
    num.div_exact(&closed_form_a_denominator(order + 1))
}

/// `E(x, y)` expanded from its closed form, to `order`.
pub fn expand_closed_form_e<T: Scalar>(order: usize) -> Result<PolySeries<T>, SeriesError> {
    let root = closed_form_e_radicand::<T>(order + 1).sqrt()?;
    let num = &closed_form_e_numerator_polynomial(order + 1) + &root;
    num.div_exact(&closed_form_e_denominator(order + 1))
}

/// Square-root self-checks plus the cross-multiplied closed form for `A`,
/// and the direct expansion against the table series.
pub fn check_closed_form_a<C: Count, T: Scalar>(
    tables: &Tables<C>,
    order: usize,
) -> Result<CheckReport, SeriesError> {
    let a: PolySeries<T> = a_from_tables(tables, order)?;
    let radicand = closed_form_a_radicand::<T>(order);
    let root = radicand.sqrt()?;

    let mut report = CheckReport::default();
    report.push(compare(
        "closed-form A sqrt^2=radicand",
        &(&root * &root),
        &radicand,
    ));
    report.push(compare(
        "closed-form A sqrt newton=recurrence",
        &root,
        &radicand.sqrt_by_recurrence()?,
    ));
    let lhs = &closed_form_a_denominator(order) * &a;
    let rhs = &closed_form_a_numerator_polynomial(order) + &root;
    report.push(compare("closed-form A cross-multiplied", &lhs, &rhs));
    let direct = expand_closed_form_a::<T>(order)?;
    report.push(compare("closed-form A direct-expansion=A", &direct, &a));
    report.push(check_nonnegative_integers(
        "closed-form A direct-expansion integral",
        &direct,
    ));
    Ok(report)
}

/// `E = A(x, y, y)`, the square-root self-check, the cross-multiplied
/// closed form for `E` and its direct expansion.
pub fn check_closed_form_e<C: Count, T: Scalar>(
    tables: &Tables<C>,
    order: usize,
) -> Result<CheckReport, SeriesError> {
    let a: PolySeries<T> = a_from_tables(tables, order)?;
    let rows = tables.eulerian_rows()?;
    let e: PolySeries<T> = e_from_rows(&rows[..=order]);
    let radicand = closed_form_e_radicand::<T>(order);
    let root = radicand.sqrt()?;

    let mut report = CheckReport::default();
    report.push(compare("closed-form E E=A(x,y,y)", &e, &a.z_as_y()));
    report.push(compare(
        "closed-form E sqrt^2=radicand",
        &(&root * &root),
        &radicand,
    ));
    let lhs = &closed_form_e_denominator(order) * &e;
    let rhs = &closed_form_e_numerator_polynomial(order) + &root;
    report.push(compare("closed-form E cross-multiplied", &lhs, &rhs));
    let direct = expand_closed_form_e::<T>(order)?;
    report.push(compare("closed-form E direct-expansion=E", &direct, &e));
    report.push(check_nonnegative_integers(
        "closed-form E direct-expansion integral",
        &direct,
    ));
    Ok(report)
}

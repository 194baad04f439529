//! Classical sequences hiding in `A(x, y, z)`:
//! `A(x,1,1)` Catalan, `A(x,1,0)` Motzkin, `y A(x,y,1)` Narayana and
//! `A(x,1,z)` the distribution of triple falls (OEIS A092107).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{a_from_tables, PolySeries, SeriesError};
use crate::dyck;
use crate::numbers;
use crate::report::{CheckReport, IdentityReport, Mismatch};
use crate::scalar::{Count, Scalar};
use crate::tables::{TableError, Tables};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specializations {
    /// Coefficients of `A(x, 1, 1)`.
    pub catalan: Vec<BigInt>,
    /// Coefficients of `A(x, 1, 0)`.
    pub motzkin: Vec<BigInt>,
    /// Row `n` lists the coefficients of `y^0, y^1, ...` in `[x^n] y A(x, y, 1)`.
    pub narayana: Vec<Vec<BigInt>>,
    /// Row `n` lists the coefficients of `z^0, z^1, ...` in `[x^n] A(x, 1, z)`.
    pub triple_falls: Vec<Vec<BigInt>>,
}

fn constants(s: &PolySeries<BigRational>) -> Result<Vec<BigInt>, SeriesError> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(x, p)| {
            p.as_constant()
                .and_then(|c| c.to_bigint())
                .ok_or(SeriesError::NonIntegral { x, y: 0, z: 0 })
        })
        .collect()
}

/// Row `n` = coefficients of the single remaining variable at `x^n`.
fn triangle(
    s: &PolySeries<BigRational>,
    degree: impl Fn((u32, u32)) -> u32,
) -> Result<Vec<Vec<BigInt>>, SeriesError> {
    let mut rows = Vec::new();
    for (x, p) in s.coeffs().iter().enumerate() {
        let mut row = vec![BigInt::zero(); x.max(1) + 1];
        for ((y, z), c) in p.terms() {
            let v = c.to_bigint().ok_or(SeriesError::NonIntegral { x, y, z })?;
            let d = degree((y, z)) as usize;
            if row.len() <= d {
                row.resize(d + 1, BigInt::zero());
            }
            row[d] = v;
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn specializations<C: Count>(
    tables: &Tables<C>,
    order: usize,
) -> Result<Specializations, SeriesError> {
    let a: PolySeries<BigRational> = a_from_tables(tables, order)?;
    let one = BigRational::one();
    let zero = BigRational::zero();
    let y = PolySeries::from_terms(&[(1, 0, 1, 0)], order);
    Ok(Specializations {
        catalan: constants(&a.subs_y(&one).subs_z(&one))?,
        motzkin: constants(&a.subs_y(&one).subs_z(&zero))?,
        narayana: triangle(&(&y * &a.subs_z(&one)), |(i, _)| i)?,
        triple_falls: triangle(&a.subs_y(&one), |(_, j)| j)?,
    })
}

fn first_difference(
    name: &str,
    computed: &[Vec<BigInt>],
    reference: &[Vec<BigInt>],
    place: impl Fn(usize, usize) -> (usize, u32, u32),
) -> IdentityReport {
    let order = computed.len().min(reference.len()).saturating_sub(1);
    for n in 0..=order {
        let width = computed[n].len().max(reference[n].len());
        for k in 0..width {
            let a = computed[n].get(k).cloned().unwrap_or_default();
            let b = reference[n].get(k).cloned().unwrap_or_default();
            if a != b {
                let (x, y, z) = place(n, k);
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

fn as_rows(v: &[BigInt]) -> Vec<Vec<BigInt>> {
    v.iter().map(|c| vec![c.clone()]).collect()
}

/// Checks each specialization against an independent source: the
/// Catalan and Motzkin recurrences, the Narayana binomial formula (rows
/// `1..`; row 0 of `y A(x, y, 1)` is the bare `y`), and a direct tally
/// of triple falls over enumerated paths up to `oracle_order`.
pub fn check_specializations(
    specs: &Specializations,
    oracle_order: usize,
    path_bound: usize,
) -> Result<CheckReport, SeriesError> {
    if oracle_order > path_bound {
        return Err(TableError::BoundExceeded {
            n: oracle_order,
            bound: path_bound,
        }
        .into());
    }
    let order = specs.catalan.len() - 1;
    let mut report = CheckReport::default();

    let catalan: Vec<BigInt> = numbers::catalan_numbers(order)
        .into_iter()
        .map(BigInt::from)
        .collect();
    report.push(first_difference(
        "specials A(x,1,1)=catalan",
        &as_rows(&specs.catalan),
        &as_rows(&catalan),
        |n, _| (n, 0, 0),
    ));

    let motzkin: Vec<BigInt> = numbers::motzkin_numbers(order)
        .into_iter()
        .map(BigInt::from)
        .collect();
    report.push(first_difference(
        "specials A(x,1,0)=motzkin",
        &as_rows(&specs.motzkin),
        &as_rows(&motzkin),
        |n, _| (n, 0, 0),
    ));

    let narayana: Vec<Vec<BigInt>> = (0..=order)
        .map(|n| {
            (0..=n as u64)
                .map(|k| BigInt::from(numbers::narayana(n as u64, k)))
                .collect()
        })
        .collect();
    let mut line = first_difference(
        "specials yA(x,y,1)=narayana",
        &specs.narayana[1..],
        &narayana[1..],
        |n, k| (n + 1, k as u32, 0),
    );
    line.order = order;
    report.push(line);

    let top = oracle_order.min(order);
    let mut tally: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = vec![BigInt::zero(); n.max(1) + 1];
        for path in dyck::enumerate_paths_bounded(n, path_bound).map_err(TableError::from)? {
            row[dyck::triple_falls(&path)] += 1;
        }
        tally.push(row);
    }
    report.push(first_difference(
        "specials A(x,1,z)=triple-fall tally",
        &specs.triple_falls[..=top],
        &tally,
        |n, q| (n, 0, q as u32),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::build_tables;
    use num_bigint::BigUint;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_terms() {
        let t = build_tables::<BigUint>(6).unwrap();
        let s = specializations(&t, 6).unwrap();
        assert_eq!(s.catalan, ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(s.motzkin, ints(&[1, 1, 2, 4, 9, 21, 51]));
        assert_eq!(s.narayana[4], ints(&[0, 1, 6, 6, 1]));
        assert_eq!(s.narayana[0], ints(&[0, 1]));
        assert_eq!(s.triple_falls[3], ints(&[4, 1, 0, 0]));
        let rep = check_specializations(&s, 6, 12).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let t = build_tables::<BigUint>(3).unwrap();
        let s = specializations(&t, 3).unwrap();
        assert!(check_specializations(&s, 13, 12).is_err());
    }
}

//! Joint distribution of valleys and triple falls over Dyck paths.
//!
//! `a[n][(p, q)]` counts paths of semilength `n` with `p` valleys and `q`
//! triple falls; `b[n][(p, q)]` does the same for irreducible paths. For
//! `n > 2`
//!
//! ```text
//! b[n](p, q) = a[n-1](p, q-1) - a[n-2](p-1, q-1) + a[n-2](p-1, q)
//! a[n](p, q) = b[n](p, q) + Σ_{i=1}^{n-1} Σ_{j,s>=0} b[i](j, s) a[n-i](p-j-1, q-s)
//! ```
//!
//! The first line elevates a path of semilength `n - 1` (the final down
//! run grows by one, adding a triple fall unless the path ends in `UD`).
//! The second splits a path at its last return, which adds one valley at
//! the junction.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::bijection;
use crate::dyck::{self, PathError};
use crate::perm;
use crate::report::{CheckReport, IdentityReport, Mismatch};
use crate::scalar::Count;

/// Largest semilength [`oracle_tristat`] enumerates by default.
pub const DEFAULT_PATH_ORACLE_BOUND: usize = 12;
/// Largest length [`oracle_eulerian`] enumerates by default.
pub const DEFAULT_PERM_ORACLE_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("negative intermediate count at n={n}, p={p}, q={q}")]
    NegativeCount { n: usize, p: usize, q: usize },
    #[error("count overflow at n={n}")]
    Overflow { n: usize },
    #[error("n = {n} exceeds oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

impl From<PathError> for TableError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::BoundExceeded { n, bound } => TableError::BoundExceeded { n, bound },
            other => unreachable!("path enumeration only fails on its bound: {other}"),
        }
    }
}

/// Sparse `(valleys, triple falls) -> count` map for one semilength,
/// iterated in `(p, q)` order.
pub type StatCounts<C> = BTreeMap<(usize, usize), C>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    All,
    Irreducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriStatTable<C> {
    kind: TableKind,
    /// Indexed by semilength. The irreducible table keeps an empty row 0.
    rows: Vec<StatCounts<C>>,
}

impl<C: Count> TriStatTable<C> {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&StatCounts<C>> {
        self.rows.get(n)
    }

    pub fn get(&self, n: usize, p: usize, q: usize) -> C {
        self.rows
            .get(n)
            .and_then(|r| r.get(&(p, q)))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.rows
            .get(n)
            .map(|r| r.values().map(Count::to_biguint).sum())
            .unwrap_or_default()
    }

    /// `Σ_q a(n, p, q)` for `p = 0..`.
    pub fn valley_marginal(&self, n: usize) -> Vec<BigUint> {
        self.marginal(n, |p, _| p)
    }

    /// `Σ_p a(n, p, q)` for `q = 0..`.
    pub fn triple_fall_marginal(&self, n: usize) -> Vec<BigUint> {
        self.marginal(n, |_, q| q)
    }

    fn marginal(&self, n: usize, key: impl Fn(usize, usize) -> usize) -> Vec<BigUint> {
        let mut out: Vec<BigUint> = Vec::new();
        for (&(p, q), c) in self.rows.get(n).into_iter().flatten() {
            let k = key(p, q);
            if out.len() <= k {
                out.resize(k + 1, BigUint::zero());
            }
            out[k] += c.to_biguint();
        }
        out
    }

    /// Nonzero entries as `(n, p, q, count)` in sorted order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &C)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, r)| r.iter().map(move |(&(p, q), c)| (n, p, q, c)))
    }
}

/// The pair of tables produced by [`build_tables`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables<C> {
    pub all: TriStatTable<C>,
    pub irreducible: TriStatTable<C>,
}

impl<C: Count> Tables<C> {
    pub fn max_n(&self) -> usize {
        self.all.max_n()
    }

    pub fn eulerian_rows(&self) -> Result<Vec<EulerianRow<C>>, TableError> {
        self.all
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| EulerianRow::from_stat_counts(n, row))
            .collect()
    }
}

fn add_into<C: Count>(
    map: &mut StatCounts<C>,
    key: (usize, usize),
    value: &C,
    n: usize,
) -> Result<(), TableError> {
    let slot = map.entry(key).or_insert_with(C::zero);
    *slot = slot.checked_add(value).ok_or(TableError::Overflow { n })?;
    Ok(())
}

/// Base rows: each listed key counted once.
fn ones<C: Count>(keys: &[(usize, usize)]) -> StatCounts<C> {
    keys.iter().map(|&k| (k, C::one())).collect()
}

fn irreducible_row<C: Count>(a: &[StatCounts<C>], n: usize) -> Result<StatCounts<C>, TableError> {
    let mut plus: StatCounts<C> = BTreeMap::new();
    let mut minus: StatCounts<C> = BTreeMap::new();
    for (&(p, q), c) in &a[n - 1] {
        add_into(&mut plus, (p, q + 1), c, n)?;
    }
    for (&(p, q), c) in &a[n - 2] {
        add_into(&mut plus, (p + 1, q), c, n)?;
        add_into(&mut minus, (p + 1, q + 1), c, n)?;
    }
    for (&(p, q), m) in &minus {
        if !plus.contains_key(&(p, q)) && !m.is_zero() {
            return Err(TableError::NegativeCount { n, p, q });
        }
    }
    let mut row = BTreeMap::new();
    for ((p, q), c) in plus {
        let diff = match minus.get(&(p, q)) {
            Some(m) => c
                .checked_sub(m)
                .ok_or(TableError::NegativeCount { n, p, q })?,
            None => c,
        };
        if !diff.is_zero() {
            row.insert((p, q), diff);
        }
    }
    Ok(row)
}

fn all_row<C: Count>(
    a: &[StatCounts<C>],
    b: &[StatCounts<C>],
    n: usize,
) -> Result<StatCounts<C>, TableError> {
    let mut row = b[n].clone();
    for i in 1..n {
        for (&(j, s), bc) in &b[i] {
            for (&(p, q), ac) in &a[n - i] {
                let prod = bc.checked_mul(ac).ok_or(TableError::Overflow { n })?;
                add_into(&mut row, (p + j + 1, q + s), &prod, n)?;
            }
        }
    }
    Ok(row)
}

/// Runs both recurrences up to semilength `max_n`.
pub fn build_tables<C: Count>(max_n: usize) -> Result<Tables<C>, TableError> {
    let mut a: Vec<StatCounts<C>> = vec![ones(&[(0, 0)]), ones(&[(0, 0)]), ones(&[(0, 0), (1, 0)])];
    let mut b: Vec<StatCounts<C>> = vec![BTreeMap::new(), ones(&[(0, 0)]), ones(&[(0, 0)])];
    a.truncate(max_n + 1);
    b.truncate(max_n + 1);
    for n in 3..=max_n {
        b.push(irreducible_row(&a, n)?);
        a.push(all_row(&a, &b, n)?);
    }
    Ok(Tables {
        all: TriStatTable {
            kind: TableKind::All,
            rows: a,
        },
        irreducible: TriStatTable {
            kind: TableKind::Irreducible,
            rows: b,
        },
    })
}

/// `e(n, k)` for `k = 0..n-1`; row 0 is `[1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianRow<C> {
    pub n: usize,
    pub counts: Vec<C>,
}

impl<C: Count> EulerianRow<C> {
    /// Collapses `(p, q)` onto `k = p + q`.
    pub fn from_stat_counts(n: usize, row: &StatCounts<C>) -> Result<Self, TableError> {
        let mut counts = vec![C::zero(); n.max(1)];
        for (&(p, q), c) in row {
            let k = p + q;
            if counts.len() <= k {
                counts.resize(k + 1, C::zero());
            }
            counts[k] = counts[k].checked_add(c).ok_or(TableError::Overflow { n })?;
        }
        Ok(EulerianRow { n, counts })
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().map(Count::to_biguint).sum()
    }
}

/// Eulerian rows `0..=max_n` from the valley/triple-fall tables.
pub fn eulerian_rows<C: Count>(max_n: usize) -> Result<Vec<EulerianRow<C>>, TableError> {
    build_tables::<C>(max_n)?.eulerian_rows()
}

/// Exhaustive tallies over all paths of one semilength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTally<C> {
    pub all: StatCounts<C>,
    pub irreducible: StatCounts<C>,
}

pub fn oracle_tristat<C: Count>(n: usize) -> Result<OracleTally<C>, TableError> {
    oracle_tristat_bounded(n, DEFAULT_PATH_ORACLE_BOUND)
}

pub fn oracle_tristat_bounded<C: Count>(
    n: usize,
    bound: usize,
) -> Result<OracleTally<C>, TableError> {
    let mut tally = OracleTally {
        all: BTreeMap::new(),
        irreducible: BTreeMap::new(),
    };
    for path in dyck::enumerate_paths_bounded(n, bound)? {
        let key = (dyck::valleys(&path), dyck::triple_falls(&path));
        add_into(&mut tally.all, key, &C::one(), n)?;
        if dyck::is_irreducible(&path) {
            add_into(&mut tally.irreducible, key, &C::one(), n)?;
        }
    }
    Ok(tally)
}

pub fn oracle_eulerian<C: Count>(n: usize) -> Result<EulerianRow<C>, TableError> {
    oracle_eulerian_bounded(n, DEFAULT_PERM_ORACLE_BOUND)
}

/// Tallies descents over the generated 123-avoiders of length `n`.
pub fn oracle_eulerian_bounded<C: Count>(
    n: usize,
    bound: usize,
) -> Result<EulerianRow<C>, TableError> {
    if n > bound {
        return Err(TableError::BoundExceeded { n, bound });
    }
    let mut counts = vec![C::zero(); n.max(1)];
    for p in perm::avoiders_123(n) {
        let k = perm::descent_count(&p);
        counts[k] = counts[k]
            .checked_add(&C::one())
            .ok_or(TableError::Overflow { n })?;
    }
    Ok(EulerianRow { n, counts })
}

fn first_stat_difference<C: Count>(
    name: &str,
    order: usize,
    mut pairs: impl FnMut(usize) -> Result<(StatCounts<C>, StatCounts<C>), TableError>,
) -> Result<IdentityReport, TableError> {
    for n in 0..=order {
        let (computed, tallied) = pairs(n)?;
        let mut keys: Vec<&(usize, usize)> = computed.keys().chain(tallied.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        for &(p, q) in keys {
            let a = computed.get(&(p, q)).cloned().unwrap_or_else(C::zero);
            let b = tallied.get(&(p, q)).cloned().unwrap_or_else(C::zero);
            if a != b {
                let mismatch = Mismatch {
                    x: n,
                    y: p as u32,
                    z: q as u32,
                    lhs: a.to_biguint().to_string(),
                    rhs: b.to_biguint().to_string(),
                };
                return Ok(IdentityReport {
                    name: name.to_string(),
                    order,
                    mismatch: Some(mismatch),
                });
            }
        }
    }
    Ok(IdentityReport::pass(name, order))
}

/// Checks the tables against exhaustive enumeration: path tallies for
/// `n <= path_order`, descent tallies over 123-avoiders for
/// `n <= perm_order`, and κ on every such avoider (inverse round trip
/// and `des = v + tf`). Orders beyond the given bounds are refused.
pub fn check_oracles<C: Count>(
    tables: &Tables<C>,
    path_order: usize,
    perm_order: usize,
    path_bound: usize,
    perm_bound: usize,
) -> Result<CheckReport, TableError> {
    if path_order > path_bound {
        return Err(TableError::BoundExceeded {
            n: path_order,
            bound: path_bound,
        });
    }
    if perm_order > perm_bound {
        return Err(TableError::BoundExceeded {
            n: perm_order,
            bound: perm_bound,
        });
    }
    let path_order = path_order.min(tables.max_n());
    let perm_order = perm_order.min(tables.max_n());
    let mut report = CheckReport::default();

    let mut tallies = Vec::with_capacity(path_order + 1);
    for n in 0..=path_order {
        tallies.push(oracle_tristat_bounded::<C>(n, path_bound)?);
    }
    let row = |t: &TriStatTable<C>, n: usize| t.row(n).cloned().unwrap_or_default();
    report.push(first_stat_difference(
        "oracle a=path tally",
        path_order,
        |n| Ok((row(&tables.all, n), tallies[n].all.clone())),
    )?);
    report.push(first_stat_difference(
        "oracle b=irreducible path tally",
        path_order,
        |n| Ok((row(&tables.irreducible, n), tallies[n].irreducible.clone())),
    )?);

    let rows = tables.eulerian_rows()?;
    let as_stats = |r: &EulerianRow<C>| -> StatCounts<C> {
        r.counts
            .iter()
            .enumerate()
            .map(|(k, c)| ((k, 0), c.clone()))
            .collect()
    };
    report.push(first_stat_difference(
        "oracle eulerian=descent tally",
        perm_order,
        |n| {
            Ok((
                as_stats(&rows[n]),
                as_stats(&oracle_eulerian_bounded(n, perm_bound)?),
            ))
        },
    )?);

    let name = "oracle kappa round trip and des=v+tf";
    let mut line = IdentityReport::pass(name, perm_order);
    'outer: for n in 0..=perm_order {
        for p in perm::avoiders_123(n) {
            let path = match bijection::kappa(&p) {
                Ok(path) => path,
                Err(e) => {
                    line.mismatch = Some(Mismatch {
                        x: n,
                        y: 0,
                        z: 0,
                        lhs: p.to_string(),
                        rhs: e.to_string(),
                    });
                    break 'outer;
                }
            };
            let back = bijection::kappa_inverse(&path);
            let des = perm::descent_count(&p);
            let (v, tf) = (dyck::valleys(&path), dyck::triple_falls(&path));
            if back != p || des != v + tf {
                line.mismatch = Some(Mismatch {
                    x: n,
                    y: v as u32,
                    z: tf as u32,
                    lhs: format!("{p} des={des}"),
                    rhs: format!("{back} via {path}"),
                });
                break 'outer;
            }
        }
    }
    report.push(line);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[((usize, usize), u64)]) -> StatCounts<u64> {
        entries.iter().copied().collect()
    }

    #[test]
    fn oracles_agree() {
        let t = build_tables::<u64>(7).unwrap();
        let rep = check_oracles(&t, 7, 6, 12, 10).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(rep.lines.len(), 4);
        assert!(check_oracles(&t, 13, 6, 12, 10).is_err());
    }

    #[test]
    fn small_rows() {
        let t = build_tables::<u64>(3).unwrap();
        assert_eq!(
            t.irreducible.row(3).unwrap(),
            &row(&[((1, 0), 1), ((0, 1), 1)])
        );
        assert_eq!(
            t.all.row(3).unwrap(),
            &row(&[((2, 0), 1), ((1, 0), 3), ((0, 1), 1)])
        );
        assert_eq!(t.all.total(2), BigUint::from(2u8));
        assert_eq!(t.all.get(3, 1, 0), 3);
        assert_eq!(t.all.get(3, 5, 5), 0);
    }

    #[test]
    fn max_n_zero_and_one() {
        let t = build_tables::<u64>(0).unwrap();
        assert_eq!(t.max_n(), 0);
        assert_eq!(t.all.row(0).unwrap(), &row(&[((0, 0), 1)]));
        assert!(t.irreducible.row(0).unwrap().is_empty());
        let t = build_tables::<u64>(1).unwrap();
        assert_eq!(t.irreducible.row(1).unwrap(), &row(&[((0, 0), 1)]));
    }

    #[test]
    fn eulerian_examples() {
        let rows = eulerian_rows::<u64>(7).unwrap();
        assert_eq!(rows[0].counts, [1]);
        assert_eq!(rows[1].counts, [1]);
        assert_eq!(rows[4].counts, [0, 2, 11, 1]);
        assert_eq!(rows[6].counts, [0, 0, 5, 69, 57, 1]);
        let t = build_tables::<u64>(7).unwrap();
        let d3: u64 = (0..=3).map(|p| t.all.get(7, p, 3 - p)).sum();
        assert_eq!(d3, 56);
    }

    #[test]
    fn oracle_examples() {
        let o = oracle_tristat::<u64>(3).unwrap();
        assert_eq!(&o.all, build_tables::<u64>(3).unwrap().all.row(3).unwrap());
        assert_eq!(oracle_tristat::<u64>(0).unwrap().all, row(&[((0, 0), 1)]));
        assert!(oracle_tristat::<u64>(0).unwrap().irreducible.is_empty());
        let total: u64 = oracle_tristat::<u64>(5).unwrap().all.values().sum();
        assert_eq!(total, 42);
        assert_eq!(
            oracle_tristat::<u64>(13).unwrap_err(),
            TableError::BoundExceeded { n: 13, bound: 12 }
        );

        assert_eq!(oracle_eulerian::<u64>(3).unwrap().counts, [0, 4, 1]);
        assert_eq!(oracle_eulerian::<u64>(5).unwrap().counts, [0, 0, 15, 26, 1]);
        assert_eq!(oracle_eulerian::<u64>(2).unwrap().counts, [1, 1]);
        assert_eq!(oracle_eulerian::<u64>(0).unwrap().counts, [1]);
        assert_eq!(
            oracle_eulerian::<u64>(11).unwrap_err(),
            TableError::BoundExceeded { n: 11, bound: 10 }
        );
    }

    #[test]
    fn narrow_count_type_reports_overflow() {
        assert!(matches!(
            build_tables::<u32>(30),
            Err(TableError::Overflow { .. })
        ));
        // entries fit even though C_20 = 6564120420 does not
        let t = build_tables::<u32>(20).unwrap();
        assert_eq!(t.all.total(20), BigUint::from(6564120420u64));
    }

    #[test]
    fn marginals() {
        let t = build_tables::<u64>(4).unwrap();
        let nar: Vec<u64> = t
            .all
            .valley_marginal(4)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(nar, [1, 6, 6, 1]);
        let tf: Vec<u64> = t
            .all
            .triple_fall_marginal(4)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(tf[0], 9);
    }
}

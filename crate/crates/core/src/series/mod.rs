//! Truncated power series in `x` whose coefficients are polynomials in
//! `y` and `z`.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`. Binary
//! operations truncate to the smaller order of their operands.

mod checks;
mod poly;
mod specials;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::{Count, Scalar};
use crate::tables::{EulerianRow, TableError, Tables};

pub use crate::report::{CheckReport, IdentityReport, Mismatch};
pub use checks::{
    check_closed_form_a, check_closed_form_e, check_functional_equations,
    closed_form_a_denominator, closed_form_a_numerator_polynomial, closed_form_a_radicand,
    closed_form_e_denominator, closed_form_e_numerator_polynomial, closed_form_e_radicand, compare,
    expand_closed_form_a, expand_closed_form_e,
};
pub use poly::Poly;
pub use specials::{check_specializations, specializations, Specializations};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("series constant term is not an invertible constant")]
    NotInvertible,
    #[error("exact division fails at x^{x}")]
    NotDivisible { x: usize },
    #[error("coefficient of x^{x} y^{y} z^{z} is not an integer")]
    NonIntegral { x: usize, y: u32, z: u32 },
    #[error("tables reach n = {available}, order {needed} requested")]
    TablesTooShort { needed: usize, available: usize },
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolySeries<T> {
    coeffs: Vec<Poly<T>>,
}

impl<T: Scalar> PolySeries<T> {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Poly::one(), order)
    }

    pub fn constant(c: Poly<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or truncates to the requested order.
    pub fn from_coeffs(mut coeffs: Vec<Poly<T>>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        PolySeries { coeffs }
    }

    /// Builds `Σ c x^a y^b z^d` from `(c, a, b, d)` terms, dropping those
    /// beyond `order`.
    pub fn from_terms(terms: &[(i64, usize, u32, u32)], order: usize) -> Self {
        let mut s = Self::zero(order);
        for &(c, a, b, d) in terms {
            if a <= order {
                s.coeffs[a].add_term((b, d), T::from_i64(c));
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly<T> {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly<T>] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly<T>) -> Poly<T>) -> Self {
        PolySeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn subs_y(&self, value: &T) -> Self {
        self.map_coeffs(|p| p.subs_y(value))
    }

    pub fn subs_z(&self, value: &T) -> Self {
        self.map_coeffs(|p| p.subs_z(value))
    }

    pub fn z_as_y(&self) -> Self {
        self.map_coeffs(Poly::z_as_y)
    }

    /// Multiplicative inverse by Newton iteration `I <- I (2 - S I)`; the
    /// constant term must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0].as_constant().filter(|c| !c.is_zero());
        let c0 = c0.ok_or(SeriesError::NotInvertible)?;
        let order = self.order();
        let mut inv = Self::constant(Poly::constant(T::one() / c0), 0);
        let mut prec = 1;
        while prec < order + 1 {
            prec = (2 * prec).min(order + 1);
            let inv_ext = inv.truncate(prec - 1);
            let two = Self::constant(Poly::constant(T::two()), prec - 1);
            let correction = &two - &(&self.truncate(prec - 1) * &inv_ext);
            inv = &inv_ext * &correction;
        }
        Ok(inv.truncate(order))
    }

    /// Square root with constant term 1 by Newton iteration
    /// `S <- (S + R / S) / 2`, doubling the number of correct
    /// coefficients each step.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm);
        }
        let order = self.order();
        let half = T::one() / T::two();
        let mut root = Self::one(0);
        let mut prec = 1;
        while prec < order + 1 {
            prec = (2 * prec).min(order + 1);
            let root_ext = root.truncate(prec - 1);
            let quotient = &self.truncate(prec - 1) * &root_ext.inverse()?;
            root = (&root_ext + &quotient).scale(&half);
        }
        Ok(root.truncate(order))
    }

    /// Square root from the coefficient recurrence of `S^2 = R`:
    /// `2 S_n = R_n - Σ_{i=1}^{n-1} S_i S_{n-i}`.
    pub fn sqrt_by_recurrence(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm);
        }
        let half = T::one() / T::two();
        let mut s: Vec<Poly<T>> = vec![Poly::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = &acc - &(&s[i] * &s[n - i]);
            }
            s.push(acc.scale(&half));
        }
        Ok(PolySeries { coeffs: s })
    }

    /// Exact quotient `self / divisor` where the divisor's lowest nonzero
    /// `x` coefficient may be any polynomial. Every coefficient step needs
    /// an exact polynomial division; the result loses as many orders as
    /// the divisor's `x`-valuation.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let shift = divisor
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(SeriesError::NotDivisible { x: 0 })?;
        if let Some(x) = self.coeffs[..shift.min(self.coeffs.len())]
            .iter()
            .position(|c| !c.is_zero())
        {
            return Err(SeriesError::NotDivisible { x });
        }
        let top = self.order().min(divisor.order());
        if top < shift {
            return Err(SeriesError::NotDivisible { x: top });
        }
        let num = &self.coeffs[shift..=top];
        let den = &divisor.coeffs[shift..=top];
        let mut q: Vec<Poly<T>> = Vec::with_capacity(num.len());
        for k in 0..num.len() {
            let mut acc = num[k].clone();
            for i in 1..=k {
                acc = &acc - &(&den[i] * &q[k - i]);
            }
            q.push(acc.try_exact_div(&den[0], k + shift)?);
        }
        Ok(PolySeries { coeffs: q })
    }

    /// Integer coefficients `(x, y, z, value)`; fails on the first
    /// non-integral one.
    pub fn integer_terms(&self) -> Result<Vec<(usize, u32, u32, BigInt)>, SeriesError> {
        let mut out = Vec::new();
        for (x, p) in self.coeffs.iter().enumerate() {
            for ((y, z), c) in p.terms() {
                let v = c.to_bigint().ok_or(SeriesError::NonIntegral { x, y, z })?;
                out.push((x, y, z, v));
            }
        }
        Ok(out)
    }
}

impl<T: Scalar> Add for &PolySeries<T> {
    type Output = PolySeries<T>;

    fn add(self, rhs: &PolySeries<T>) -> PolySeries<T> {
        let order = self.order().min(rhs.order());
        PolySeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &PolySeries<T> {
    type Output = PolySeries<T>;

    fn sub(self, rhs: &PolySeries<T>) -> PolySeries<T> {
        let order = self.order().min(rhs.order());
        PolySeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &PolySeries<T> {
    type Output = PolySeries<T>;

    fn mul(self, rhs: &PolySeries<T>) -> PolySeries<T> {
        let order = self.order().min(rhs.order());
        let mut out = PolySeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &PolySeries<T> {
    type Output = PolySeries<T>;

    fn neg(self) -> PolySeries<T> {
        self.map_coeffs(|p| -p)
    }
}

fn require_order<C: Count>(tables: &Tables<C>, order: usize) -> Result<(), SeriesError> {
    if tables.max_n() < order {
        return Err(SeriesError::TablesTooShort {
            needed: order,
            available: tables.max_n(),
        });
    }
    Ok(())
}

/// `A(x, y, z) = Σ a(n, p, q) x^n y^p z^q` truncated at `order`.
pub fn a_from_tables<C: Count, T: Scalar>(
    tables: &Tables<C>,
    order: usize,
) -> Result<PolySeries<T>, SeriesError> {
    require_order(tables, order)?;
    let mut s = PolySeries::zero(order);
    for (n, p, q, c) in tables.all.entries().filter(|e| e.0 <= order) {
        s.coeffs[n].add_term((p as u32, q as u32), T::from_count(c));
    }
    Ok(s)
}

/// `B(x, y, z)` over irreducible paths, with the constant term 1 by
/// convention (the table itself has no row for the empty path).
pub fn b_from_tables<C: Count, T: Scalar>(
    tables: &Tables<C>,
    order: usize,
) -> Result<PolySeries<T>, SeriesError> {
    require_order(tables, order)?;
    let mut s = PolySeries::one(order);
    for (n, p, q, c) in tables.irreducible.entries().filter(|e| e.0 <= order) {
        s.coeffs[n].add_term((p as u32, q as u32), T::from_count(c));
    }
    Ok(s)
}

/// `E(x, y) = Σ e(n, k) x^n y^k` over the given rows.
pub fn e_from_rows<C: Count, T: Scalar>(rows: &[EulerianRow<C>]) -> PolySeries<T> {
    let order = rows.len().saturating_sub(1);
    let mut s = PolySeries::zero(order);
    for row in rows {
        for (k, c) in row.counts.iter().enumerate() {
            s.coeffs[row.n].add_term((k as u32, 0), T::from_count(c));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::build_tables;
    use num_rational::BigRational;

    type Q = PolySeries<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn ring_examples() {
        let a = Q::from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)], 2);
        let b = Q::from_terms(&[(1, 0, 0, 0), (-1, 1, 0, 0)], 2);
        assert_eq!(&a * &b, Q::from_terms(&[(1, 0, 0, 0), (-1, 2, 0, 0)], 2));
        let xy = Q::from_terms(&[(1, 1, 1, 0)], 3);
        let xz = Q::from_terms(&[(1, 1, 0, 1)], 3);
        assert_eq!(&xy * &xz, Q::from_terms(&[(1, 2, 1, 1)], 3));
        let t = build_tables::<u64>(6).unwrap();
        let a_tab: Q = a_from_tables(&t, 6).unwrap();
        assert_eq!(&a_tab * &Q::one(6), a_tab);
        // mixed orders truncate
        assert_eq!((&a_tab * &Q::one(3)).order(), 3);
    }

    #[test]
    fn table_series() {
        let t = build_tables::<u64>(3).unwrap();
        let a: Q = a_from_tables(&t, 3).unwrap();
        assert_eq!(
            a.coeff(3),
            &Poly::from_terms(&[(1, 2, 0), (3, 1, 0), (1, 0, 1)])
        );
        assert!(a.coeff(0).is_one());
        let b: Q = b_from_tables(&t, 3).unwrap();
        assert!(b.coeff(2).is_one());
        assert!(b.coeff(0).is_one());
        assert_eq!(
            a_from_tables::<u64, BigRational>(&t, 4).unwrap_err(),
            SeriesError::TablesTooShort {
                needed: 4,
                available: 3
            }
        );
    }

    #[test]
    fn sqrt_basics() {
        assert_eq!(Q::one(5).sqrt().unwrap(), Q::one(5));
        // sqrt(1 - 4x) = 1 - 2x - 2x^2 - 4x^3 - 10x^4
        let r = Q::from_terms(&[(1, 0, 0, 0), (-4, 1, 0, 0)], 4);
        let expected = Q::from_terms(
            &[
                (1, 0, 0, 0),
                (-2, 1, 0, 0),
                (-2, 2, 0, 0),
                (-4, 3, 0, 0),
                (-10, 4, 0, 0),
            ],
            4,
        );
        assert_eq!(r.sqrt().unwrap(), expected);
        assert_eq!(r.sqrt_by_recurrence().unwrap(), expected);
        let bad = Q::from_terms(&[(4, 0, 0, 0)], 2);
        assert_eq!(bad.sqrt(), Err(SeriesError::SqrtConstantTerm));
        let bad = Q::from_terms(&[(1, 0, 1, 0)], 2);
        assert_eq!(bad.sqrt_by_recurrence(), Err(SeriesError::SqrtConstantTerm));
        // rational coefficients appear: sqrt(1 + x) = 1 + x/2 - x^2/8
        let s = Q::from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)], 2)
            .sqrt()
            .unwrap();
        assert_eq!(
            s.coeff(2).as_constant(),
            Some(BigRational::new((-1).into(), 8.into()))
        );
    }

    #[test]
    fn inverse_and_division() {
        let one_minus_x = Q::from_terms(&[(1, 0, 0, 0), (-1, 1, 0, 0)], 5);
        let geo = one_minus_x.inverse().unwrap();
        assert!((0..=5).all(|n| geo.coeff(n).is_one()));
        assert_eq!(Q::zero(3).inverse(), Err(SeriesError::NotInvertible));
        // (x y + x^2 z) / (x y) = 1 + x z / y is not polynomial
        let num = Q::from_terms(&[(1, 1, 1, 0), (1, 2, 0, 1)], 4);
        let den = Q::from_terms(&[(1, 1, 1, 0)], 4);
        assert_eq!(num.div_exact(&den), Err(SeriesError::NotDivisible { x: 2 }));
        // (2xyz)(1 + x) / (2xyz) = 1 + x
        let den = Q::from_terms(&[(2, 1, 1, 1)], 4);
        let prod = &den * &Q::from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)], 4);
        let quot = prod.div_exact(&den).unwrap();
        assert_eq!(quot, Q::from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)], 3));
        assert_eq!(
            Q::one(3).div_exact(&den),
            Err(SeriesError::NotDivisible { x: 0 })
        );
    }

    #[test]
    fn specialising() {
        let t = build_tables::<u64>(4).unwrap();
        let a: Q = a_from_tables(&t, 4).unwrap();
        let cat = a.subs_y(&q(1)).subs_z(&q(1));
        let vals: Vec<_> = cat
            .coeffs()
            .iter()
            .map(|p| p.as_constant().unwrap())
            .collect();
        assert_eq!(vals, [q(1), q(1), q(2), q(5), q(14)]);
        assert_eq!(
            a.integer_terms().unwrap().len(),
            a.coeffs().iter().map(|p| p.terms().count()).sum::<usize>()
        );
        let frac = a.scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(
            frac.integer_terms(),
            Err(SeriesError::NonIntegral { x: 0, y: 0, z: 0 })
        );
    }
}

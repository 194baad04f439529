use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::SeriesError;
use crate::scalar::Scalar;

/// Sparse polynomial in `y` and `z`, keyed by `(deg_y, deg_z)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: T, deg_y: u32, deg_z: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_y, deg_z), c);
        p
    }

    /// Builds `Σ c y^i z^j` from `(c, i, j)` triples.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, i, j) in terms {
            p.add_term((i, j), T::from_i64(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<T> {
        match self.terms.len() {
            0 => Some(T::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, deg_y: u32, deg_z: u32) -> T {
        self.terms
            .get(&(deg_y, deg_z))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Terms in increasing `(deg_y, deg_z)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn add_term(&mut self, key: (u32, u32), c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (&k, v) in &self.terms {
            out.add_term(k, v.clone() * c.clone());
        }
        out
    }

    pub fn eval(&self, y: &T, z: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * pow(y, i) * pow(z, j)
        })
    }

    /// `y <- value`.
    pub fn subs_y(&self, value: &T) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term((0, j), c.clone() * pow(value, i));
        }
        out
    }

    /// `z <- value`.
    pub fn subs_z(&self, value: &T) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term((i, 0), c.clone() * pow(value, j));
        }
        out
    }

    /// `z <- y`.
    pub fn z_as_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term((i + j, 0), c.clone());
        }
        out
    }

    /// Largest term in lexicographic `(deg_y, deg_z)` order.
    fn leading(&self) -> Option<((u32, u32), &T)> {
        self.terms.iter().next_back().map(|(&k, v)| (k, v))
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a
    /// remainder. Lexicographic long division: the leading term of the
    /// dividend must always be a multiple of the divisor's leading term.
    pub fn exact_div(&self, divisor: &Poly<T>) -> Option<Self> {
        let ((dy, dz), dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(((ry, rz), rc)) = rem.leading() {
            if ry < dy || rz < dz {
                return None;
            }
            let t = Self::monomial(rc.clone() / dc.clone(), ry - dy, rz - dz);
            rem = &rem - &(&t * divisor);
            // cancels exactly in a field; forced so rounding cannot stall
            rem.terms.remove(&(ry, rz));
            quot = &quot + &t;
        }
        Some(quot)
    }

    pub(crate) fn try_exact_div(&self, divisor: &Poly<T>, x: usize) -> Result<Self, SeriesError> {
        self.exact_div(divisor)
            .ok_or(SeriesError::NotDivisible { x })
    }
}

fn pow<T: Scalar>(base: &T, exp: u32) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * base.clone())
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, -v.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = Poly::zero();
        for (&(ai, aj), ac) in &self.terms {
            for (&(bi, bj), bc) in &rhs.terms {
                out.add_term((ai + bi, aj + bj), ac.clone() * bc.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            let unit = c.is_one() && (i, j) != (0, 0);
            if !unit {
                factors.push(format!("{c}"));
            }
            for (var, e) in [("y", i), ("z", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

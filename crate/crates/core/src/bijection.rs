//! The map κ from 123-avoiding permutations to Dyck paths and its inverse.
//!
//! Reading `σ = x1 w1 ... xs ws` left to right, each minimum `xi` becomes
//! `x(i-1) - xi` up steps (with `x0 = n + 1`) and each word `wi` becomes
//! `len(wi) + 1` down steps. Under κ, descents of σ correspond to the
//! valleys plus triple falls of the path.

use thiserror::Error;

use crate::dyck::{self, DyckPath, Step};
use crate::perm::{self, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    /// Zero-based positions of a 123 occurrence.
    #[error("permutation contains 123 at positions {} {} {}", .positions[0] + 1, .positions[1] + 1, .positions[2] + 1)]
    Contains123 { positions: [usize; 3] },
}

fn require_avoider(p: &Permutation) -> Result<(), BijectionError> {
    match perm::find_123(p) {
        Some(positions) => Err(BijectionError::Contains123 { positions }),
        None => Ok(()),
    }
}

pub fn kappa(p: &Permutation) -> Result<DyckPath, BijectionError> {
    require_avoider(p)?;
    let n = p.len() as u32;
    let mut steps = Vec::with_capacity(2 * p.len());
    let mut prev = n + 1;
    for block in perm::min_decompose(p).blocks {
        steps.extend(std::iter::repeat_n(
            Step::Up,
            (prev - block.minimum) as usize,
        ));
        steps.extend(std::iter::repeat_n(Step::Down, block.word.len() + 1));
        prev = block.minimum;
    }
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// Rebuilds σ from the run form `(a_i, d_i)`: minima `x_i = x(i-1) - a_i`,
/// and the remaining values in decreasing order are cut into words of
/// lengths `d_i - 1`.
pub fn kappa_inverse(d: &DyckPath) -> Permutation {
    let n = d.semilength() as u32;
    let runs = d.run_form().runs;
    let mut minima = Vec::with_capacity(runs.len());
    let mut x = n + 1;
    for &(a, _) in &runs {
        x -= a as u32;
        minima.push(x);
    }
    let mut is_min = vec![false; n as usize + 1];
    for &m in &minima {
        is_min[m as usize] = true;
    }
    let mut rest = (1..=n).rev().filter(|&v| !is_min[v as usize]);
    let mut out = Vec::with_capacity(n as usize);
    for (&m, &(_, down)) in minima.iter().zip(&runs) {
        out.push(m);
        out.extend(rest.by_ref().take(down - 1));
    }
    Permutation::from_vec_unchecked(out)
}

/// The three statistics of `des(σ) = v(κσ) + tf(κσ)` for one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentCheck {
    pub descents: usize,
    pub valleys: usize,
    pub triple_falls: usize,
}

impl DescentCheck {
    pub fn holds(&self) -> bool {
        self.descents == self.valleys + self.triple_falls
    }
}

pub fn check_descent_identity(p: &Permutation) -> Result<DescentCheck, BijectionError> {
    let path = kappa(p)?;
    Ok(DescentCheck {
        descents: perm::descent_count(p),
        valleys: dyck::valleys(&path),
        triple_falls: dyck::triple_falls(&path),
    })
}

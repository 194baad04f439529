//! Permutations of `{1..n}`, 123-avoidance, descents and the
//! left-to-right-minima decomposition `x1 w1 x2 w2 ... xs ws`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("invalid token {token:?}: expected a base-10 integer")]
    InvalidToken { token: String },
    #[error("duplicate value {value}")]
    Duplicate { value: u32 },
    #[error("value {value} out of range 1..={n}")]
    OutOfRange { value: u32, n: usize },
    #[error("missing value {value}")]
    Missing { value: u32 },
}

/// A permutation in one-line notation, 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v as usize > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[v as usize] {
                return Err(PermError::Duplicate { value: v });
            }
            seen[v as usize] = true;
        }
        // n values in 1..=n without repeats cover everything, so this only
        // guards the invariant if the checks above change.
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(PermError::Missing { value: v as u32 });
        }
        Ok(Permutation(entries))
    }

    /// Wraps entries already known to form a permutation.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_permutation(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// Parses a one-line permutation. Tokens are separated by whitespace
/// and/or commas; the empty string is the permutation of length 0.
pub fn parse_permutation(text: &str) -> Result<Permutation, PermError> {
    let entries = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|_| PermError::InvalidToken {
                token: t.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(entries)
}

/// Longest-increasing-subsequence test: the permutation avoids 123 iff
/// no increasing subsequence of length 3 exists. Keeps the smallest
/// possible tail of an increasing run of length 1 and of length 2.
pub fn avoids_123(p: &Permutation) -> bool {
    let mut tail1 = u32::MAX;
    let mut tail2 = u32::MAX;
    for &v in p.entries() {
        if v <= tail1 {
            tail1 = v;
        } else if v <= tail2 {
            tail2 = v;
        } else {
            return false;
        }
    }
    true
}

/// Cubic triple scan. Reference implementation for [`avoids_123`].
pub fn avoids_123_brute(p: &Permutation) -> bool {
    let e = p.entries();
    let n = e.len();
    for i in 0..n {
        for j in i + 1..n {
            if e[i] >= e[j] {
                continue;
            }
            for k in j + 1..n {
                if e[j] < e[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Zero-based positions `i < j < k` of some 123 occurrence, if any.
pub fn find_123(p: &Permutation) -> Option<[usize; 3]> {
    let e = p.entries();
    let n = e.len();
    if n < 3 {
        return None;
    }
    // suffix_max[j] = position of the largest entry in e[j..]
    let mut suffix_max = vec![n - 1; n];
    for j in (0..n - 1).rev() {
        suffix_max[j] = if e[j] > e[suffix_max[j + 1]] {
            j
        } else {
            suffix_max[j + 1]
        };
    }
    let mut min_pos = 0;
    for j in 1..n - 1 {
        if e[min_pos] < e[j] && e[suffix_max[j + 1]] > e[j] {
            return Some([min_pos, j, suffix_max[j + 1]]);
        }
        if e[j] < e[min_pos] {
            min_pos = j;
        }
    }
    None
}

pub fn descent_count(p: &Permutation) -> usize {
    p.entries().windows(2).filter(|w| w[0] > w[1]).count()
}

/// Values that are smaller than every earlier entry, in order of
/// appearance. The first entry always qualifies.
pub fn left_to_right_minima(p: &Permutation) -> Vec<u32> {
    let mut out = Vec::new();
    let mut current = u32::MAX;
    for &v in p.entries() {
        if v < current {
            out.push(v);
            current = v;
        }
    }
    out
}

/// One left-to-right minimum followed by the (possibly empty) word that
/// runs up to the next minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinBlock {
    pub minimum: u32,
    pub word: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDecomposition {
    pub blocks: Vec<MinBlock>,
}

impl MinDecomposition {
    /// Concatenates `x1 w1 ... xs ws`.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::once(b.minimum).chain(b.word.iter().copied()))
            .collect()
    }

    /// The concatenated words `w1 w2 ... ws`.
    pub fn words(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| b.word.iter().copied())
            .collect()
    }

    pub fn word_lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.word.len()).collect()
    }

    pub fn minima(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.minimum).collect()
    }
}

pub fn min_decompose(p: &Permutation) -> MinDecomposition {
    let mut blocks: Vec<MinBlock> = Vec::new();
    for &v in p.entries() {
        match blocks.last_mut() {
            Some(last) if v > last.minimum => last.word.push(v),
            _ => blocks.push(MinBlock {
                minimum: v,
                word: Vec::new(),
            }),
        }
    }
    MinDecomposition { blocks }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
}

/// Streams every 123-avoiding permutation of length `n` in lexicographic
/// order without filtering `S_n`.
///
/// Builds `x1 w1 ... xs ws` position by position: each new entry is either
/// a new minimum or extends the decreasing run of word letters, and a
/// prefix is kept only while every unused value can still be placed.
pub fn avoiders_123(n: usize) -> Avoiders {
    Avoiders {
        n: n as u32,
        perm: Vec::with_capacity(n),
        used: vec![false; n + 2],
        state: Vec::with_capacity(n),
        started: false,
    }
}

#[derive(Debug, Clone)]
pub struct Avoiders {
    n: u32,
    perm: Vec<u32>,
    used: Vec<bool>,
    // (current minimum, smallest word letter so far) after each placement
    state: Vec<(u32, u32)>,
    started: bool,
}

impl Avoiders {
    fn current(&self) -> (u32, u32) {
        self.state
            .last()
            .copied()
            .unwrap_or((self.n + 1, self.n + 1))
    }

    fn place(&self, v: u32) -> Option<(u32, u32)> {
        let (min, ceiling) = self.current();
        if self.used[v as usize] || v >= ceiling {
            return None;
        }
        let next = if v < min { (v, ceiling) } else { (min, v) };
        let max_unused = (1..=self.n)
            .rev()
            .find(|&u| u != v && !self.used[u as usize])
            .unwrap_or(0);
        (max_unused < next.1).then_some(next)
    }

    fn push_first_from(&mut self, start: u32) -> bool {
        for v in start..=self.n {
            if let Some(next) = self.place(v) {
                self.used[v as usize] = true;
                self.perm.push(v);
                self.state.push(next);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) {
        while self.perm.len() < self.n as usize {
            let placed = self.push_first_from(1);
            debug_assert!(placed, "feasible prefix could not be extended");
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if !self.started {
            self.started = true;
            self.fill();
            return Some(Permutation(self.perm.clone()));
        }
        while let Some(v) = self.perm.pop() {
            self.state.pop();
            self.used[v as usize] = false;
            if self.push_first_from(v + 1) {
                self.fill();
                return Some(Permutation(self.perm.clone()));
            }
        }
        None
    }
}

//! Dyck paths and the statistics used throughout the crate: valleys
//! (`DU` factors), triple falls (overlapping `DDD` factors) and returns.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest semilength [`enumerate_paths`] accepts without an explicit bound.
pub const DEFAULT_PATH_BOUND: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("illegal character {ch:?} at position {position}")]
    IllegalChar { ch: char, position: usize },
    #[error("path goes below ground level at position {position}")]
    BelowGround { position: usize },
    #[error("unbalanced path: {ups} up steps, {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("operation needs a nonempty path")]
    Empty,
    #[error("semilength {n} exceeds enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates balance and nonnegativity.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut height = 0usize;
        let mut ups = 0usize;
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    height += 1;
                    ups += 1;
                }
                Step::Down => {
                    height = height
                        .checked_sub(1)
                        .ok_or(PathError::BelowGround { position: i + 1 })?;
                }
            }
        }
        if height != 0 {
            return Err(PathError::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::from_steps(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// `U^a1 D^d1 ... U^as D^ds`.
    pub fn from_runs(runs: &[(usize, usize)]) -> Result<Self, PathError> {
        let mut steps = Vec::new();
        for &(a, d) in runs {
            steps.extend(std::iter::repeat_n(Step::Up, a));
            steps.extend(std::iter::repeat_n(Step::Down, d));
        }
        Self::from_steps(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ends_with(&self, suffix: &[Step]) -> bool {
        self.steps.ends_with(suffix)
    }

    /// Juxtaposition of two paths.
    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    pub fn run_form(&self) -> RunForm {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        let mut prev = None;
        for &s in &self.steps {
            match (s, prev) {
                (Step::Up, Some(Step::Up)) => runs.last_mut().unwrap().0 += 1,
                (Step::Up, _) => runs.push((1, 0)),
                (Step::Down, _) => runs.last_mut().expect("valid path starts with U").1 += 1,
            }
            prev = Some(s);
        }
        RunForm { runs }
    }

    /// Heights after each step, starting from ground level (not included).
    fn heights(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().scan(0usize, |h, &s| {
            match s {
                Step::Up => *h += 1,
                Step::Down => *h -= 1,
            }
            Some(*h)
        })
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

/// Run-length view `(a_i, d_i)` of `U^a1 D^d1 ... U^as D^ds`; every
/// `a_i` and `d_i` is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunForm {
    pub runs: Vec<(usize, usize)>,
}

impl RunForm {
    pub fn to_path(&self) -> Result<DyckPath, PathError> {
        DyckPath::from_runs(&self.runs)
    }
}

/// Parses a case-insensitive `U`/`D` string; positions in errors are
/// 1-based.
pub fn parse_path(text: &str) -> Result<DyckPath, PathError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(i, ch)| match ch {
            'U' | 'u' => Ok(Step::Up),
            'D' | 'd' => Ok(Step::Down),
            _ => Err(PathError::IllegalChar {
                ch,
                position: i + 1,
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    DyckPath::from_steps(steps)
}

pub fn valleys(p: &DyckPath) -> usize {
    p.steps
        .windows(2)
        .filter(|w| w[0] == Step::Down && w[1] == Step::Up)
        .count()
}

/// Overlapping occurrences of `DDD`: a maximal run of `d` down steps
/// contributes `d - 2` when `d >= 3`.
pub fn triple_falls(p: &DyckPath) -> usize {
    p.steps
        .windows(3)
        .filter(|w| w.iter().all(|&s| s == Step::Down))
        .count()
}

/// Down steps that end on the ground.
pub fn returns(p: &DyckPath) -> usize {
    p.steps
        .iter()
        .zip(p.heights())
        .filter(|&(&s, h)| s == Step::Down && h == 0)
        .count()
}

pub fn is_irreducible(p: &DyckPath) -> bool {
    returns(p) == 1
}

/// Splits at the second-to-last return: `p = prefix ⊕ last` with `last`
/// irreducible and `prefix` possibly empty.
pub fn last_return_split(p: &DyckPath) -> Result<(DyckPath, DyckPath), PathError> {
    if p.is_empty() {
        return Err(PathError::Empty);
    }
    let ground: Vec<usize> = p
        .heights()
        .enumerate()
        .filter(|&(_, h)| h == 0)
        .map(|(i, _)| i + 1)
        .collect();
    let cut = if ground.len() >= 2 {
        ground[ground.len() - 2]
    } else {
        0
    };
    let (head, tail) = p.steps.split_at(cut);
    Ok((
        DyckPath {
            steps: head.to_vec(),
        },
        DyckPath {
            steps: tail.to_vec(),
        },
    ))
}

/// `U p D`.
pub fn elevate(p: &DyckPath) -> DyckPath {
    let mut steps = Vec::with_capacity(p.steps.len() + 2);
    steps.push(Step::Up);
    steps.extend_from_slice(&p.steps);
    steps.push(Step::Down);
    DyckPath { steps }
}

/// `p U D`.
pub fn append_peak(p: &DyckPath) -> DyckPath {
    let mut steps = p.steps.clone();
    steps.extend([Step::Up, Step::Down]);
    DyckPath { steps }
}

/// Every Dyck path of semilength `n`, lexicographically with `U < D`.
pub fn enumerate_paths(n: usize) -> Result<DyckPaths, PathError> {
    enumerate_paths_bounded(n, DEFAULT_PATH_BOUND)
}

pub fn enumerate_paths_bounded(n: usize, bound: usize) -> Result<DyckPaths, PathError> {
    if n > bound {
        return Err(PathError::BoundExceeded { n, bound });
    }
    Ok(DyckPaths {
        n,
        steps: Vec::with_capacity(2 * n),
        started: false,
    })
}

/// Backtracking stream of Dyck paths. A step is only taken when the
/// remaining ups and downs can still close the path.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    steps: Vec<Step>,
    started: bool,
}

impl DyckPaths {
    fn counts(&self) -> (usize, usize) {
        let ups = self.steps.iter().filter(|&&s| s == Step::Up).count();
        (ups, self.steps.len() - ups)
    }

    fn complete(&mut self) {
        let (ups, downs) = self.counts();
        self.steps
            .extend(std::iter::repeat_n(Step::Up, self.n - ups));
        self.steps
            .extend(std::iter::repeat_n(Step::Down, self.n - downs));
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if !self.started {
            self.started = true;
            self.complete();
            return Some(DyckPath {
                steps: self.steps.clone(),
            });
        }
        // Find the last U that can become a D: the prefix before it must
        // have more ups than downs.
        loop {
            let s = self.steps.pop()?;
            if s == Step::Up {
                let (ups, downs) = self.counts();
                if ups > downs {
                    self.steps.push(Step::Down);
                    self.complete();
                    return Some(DyckPath {
                        steps: self.steps.clone(),
                    });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        parse_path(s).unwrap()
    }

    fn runs(r: &[(usize, usize)]) -> DyckPath {
        DyckPath::from_runs(r).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(path("UUUDDUUUDDDDUD").semilength(), 7);
        assert_eq!(path("uuUDdd"), path("UUUDDD"));
        assert_eq!(path("").semilength(), 0);
        assert_eq!(
            parse_path("UDD"),
            Err(PathError::BelowGround { position: 3 })
        );
        assert_eq!(
            parse_path("UDDU"),
            Err(PathError::BelowGround { position: 3 })
        );
        assert_eq!(
            parse_path("UUD"),
            Err(PathError::Unbalanced { ups: 2, downs: 1 })
        );
        assert_eq!(
            parse_path("UXD"),
            Err(PathError::IllegalChar {
                ch: 'X',
                position: 2
            })
        );
        assert_eq!(path("UUDD").to_string(), "UUDD");
    }

    #[test]
    fn statistics() {
        let fig2 = runs(&[(3, 2), (3, 4), (1, 1)]);
        assert_eq!(fig2.to_string(), "UUUDDUUUDDDDUD");
        assert_eq!(valleys(&fig2), 2);
        assert_eq!(triple_falls(&fig2), 2);
        assert_eq!(valleys(&path("UDUDUD")), 2);
        assert_eq!(valleys(&path("UUUDDD")), 0);
        assert_eq!(triple_falls(&path("UUUDDD")), 1);
        assert_eq!(triple_falls(&path("UDUDUD")), 0);
        let empty = DyckPath::empty();
        assert_eq!(
            (valleys(&empty), triple_falls(&empty), returns(&empty)),
            (0, 0, 0)
        );
    }

    #[test]
    fn returns_and_irreducibility() {
        // ground is reached after D^4, after the lone UD and at the end
        let fig1 = runs(&[(5, 2), (1, 4), (1, 1), (3, 1), (1, 3)]);
        assert_eq!(returns(&fig1), 3);
        let (head, tail) = last_return_split(&fig1).unwrap();
        assert_eq!((returns(&head), returns(&tail)), (2, 1));
        assert_eq!(returns(&path("UUUDDD")), 1);
        assert!(is_irreducible(&runs(&[(3, 1), (1, 3)])));
        assert!(!is_irreducible(&path("UDUD")));
        assert!(is_irreducible(&path("UD")));
        assert!(!is_irreducible(&DyckPath::empty()));
    }

    #[test]
    fn last_return_examples() {
        let fig1 = runs(&[(5, 2), (1, 4), (1, 1), (3, 1), (1, 3)]);
        let (head, tail) = last_return_split(&fig1).unwrap();
        assert_eq!(head, runs(&[(5, 2), (1, 4), (1, 1)]));
        assert_eq!(tail, runs(&[(3, 1), (1, 3)]));
        assert_eq!(
            last_return_split(&path("UD")).unwrap(),
            (DyckPath::empty(), path("UD"))
        );
        assert_eq!(
            last_return_split(&path("UDUD")).unwrap(),
            (path("UD"), path("UD"))
        );
        assert_eq!(last_return_split(&DyckPath::empty()), Err(PathError::Empty));
    }

    #[test]
    fn elevation_examples() {
        // appending UD and then elevating
        let p = runs(&[(4, 3), (2, 3)]);
        assert_eq!(elevate(&append_peak(&p)), runs(&[(5, 3), (2, 3), (1, 2)]));
        assert_eq!(elevate(&DyckPath::empty()), path("UD"));
        let q = runs(&[(4, 3), (2, 2), (1, 2)]);
        assert_eq!(elevate(&q), runs(&[(5, 3), (2, 2), (1, 3)]));
        let e = elevate(&q);
        assert_eq!((valleys(&e), triple_falls(&e)), (2, 2));
    }

    #[test]
    fn run_form_round_trip() {
        let p = path("UUUDDUUUDDDDUD");
        assert_eq!(p.run_form().runs, vec![(3, 2), (3, 4), (1, 1)]);
        assert_eq!(p.run_form().to_path().unwrap(), p);
        assert!(DyckPath::empty().run_form().runs.is_empty());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let three: Vec<String> = enumerate_paths(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(three, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
        assert_eq!(
            enumerate_paths(0).unwrap().collect::<Vec<_>>(),
            vec![DyckPath::empty()]
        );
        assert_eq!(enumerate_paths(12).unwrap().count(), 208012);
        assert_eq!(
            enumerate_paths(15).err(),
            Some(PathError::BoundExceeded {
                n: 15,
                bound: DEFAULT_PATH_BOUND
            })
        );
        assert!(enumerate_paths_bounded(15, 15).is_ok());
    }
}

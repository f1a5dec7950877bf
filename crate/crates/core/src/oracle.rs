//! Brute-force enumeration of weighted list distributions.
//!
//! Elements `1..=n` are inserted in increasing order. Each element either
//! opens a new list (weight 1), goes immediately after an element already
//! placed (weight `a`), or becomes the new head of an existing list (weight
//! `b`). New lists are always appended after the open ones, so the lists are
//! counted unlabeled. The total weight over all histories that end with
//! exactly `k` lists is `L(n, k)`.
//!
//! This module is ground truth for the recurrence triangle and deliberately
//! walks every history one by one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{Monomial, MultiPoly};

pub const DEFAULT_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightLetter {
    One,
    Alpha,
    Beta,
}

/// Final lists plus the letter each element earned when it was inserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distribution {
    pub lists: Vec<Vec<usize>>,
    /// `letters[e - 1]` belongs to element `e`.
    pub letters: Vec<WeightLetter>,
}

impl Distribution {
    pub fn weight(&self) -> Monomial {
        let count = |l| self.letters.iter().filter(|&&x| x == l).count() as u32;
        Monomial::new(count(WeightLetter::Alpha), count(WeightLetter::Beta), 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedOutcome {
    pub lists: Vec<Vec<usize>>,
    pub letters: Vec<WeightLetter>,
    pub weight: Monomial,
}

impl From<Distribution> for WeightedOutcome {
    fn from(d: Distribution) -> Self {
        let weight = d.weight();
        WeightedOutcome {
            lists: d.lists,
            letters: d.letters,
            weight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    /// Skip branches that can no longer reach `k` lists.
    pub prune: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_CAP,
            prune: true,
        }
    }
}

/// Total weight of all histories with `k` non-empty lists.
pub fn enumerate_weight(n: usize, k: usize) -> Result<MultiPoly> {
    enumerate_weight_with(n, k, &OracleConfig::default())
}

pub fn enumerate_weight_with(n: usize, k: usize, config: &OracleConfig) -> Result<MultiPoly> {
    let walker = Walker::new(n, k, config)?;
    let side = n + 1;
    let frontier = walker.frontier();
    let partials = par::map_slice(&frontier, |state| {
        let mut counts = vec![0u64; side * side];
        let mut state = state.clone();
        walker.walk(&mut state, &mut |s| counts[s.alpha as usize * side + s.beta as usize] += 1);
        counts
    });
    let mut counts = vec![0u64; side * side];
    for part in partials {
        for (acc, c) in counts.iter_mut().zip(part) {
            *acc += c;
        }
    }
    Ok(MultiPoly::from_terms(counts.into_iter().enumerate().map(|(i, c)| {
        (Monomial::new((i / side) as u32, (i % side) as u32, 0), c)
    })))
}

/// Every history with `k` lists, in a fixed depth-first order.
pub fn enumerate_outcomes(n: usize, k: usize) -> Result<Vec<WeightedOutcome>> {
    enumerate_outcomes_with(n, k, &OracleConfig::default())
}

pub fn enumerate_outcomes_with(n: usize, k: usize, config: &OracleConfig) -> Result<Vec<WeightedOutcome>> {
    let walker = Walker::new(n, k, config)?;
    let frontier = walker.frontier();
    let chunks = par::map_slice(&frontier, |state| {
        let mut out = Vec::new();
        let mut state = state.clone();
        walker.walk(&mut state, &mut |s| {
            out.push(WeightedOutcome::from(Distribution {
                lists: s.lists.clone(),
                letters: s.letters.clone(),
            }))
        });
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Default)]
struct State {
    lists: Vec<Vec<usize>>,
    letters: Vec<WeightLetter>,
    alpha: u32,
    beta: u32,
}

impl State {
    fn placed(&self) -> usize {
        self.letters.len()
    }
}

/// Where the next element goes.
#[derive(Debug, Clone, Copy)]
enum Move {
    Open,
    After { list: usize, pos: usize },
    Head { list: usize },
}

struct Walker {
    n: usize,
    k: usize,
    prune: bool,
}

/// Depth at which the tree is split into independent parallel jobs.
const SPLIT_DEPTH: usize = 4;

impl Walker {
    fn new(n: usize, k: usize, config: &OracleConfig) -> Result<Self> {
        if n > config.cap {
            return Err(Error::CapExceeded { n, cap: config.cap });
        }
        Ok(Walker {
            n,
            k,
            prune: config.prune,
        })
    }

    fn moves(&self, s: &State) -> Vec<Move> {
        let remaining_after = self.n - s.placed() - 1;
        let open = s.lists.len();
        let mut out = Vec::new();
        let can_open = open < self.k;
        if can_open {
            out.push(Move::Open);
        }
        // joining an existing list keeps `open` fixed
        if self.prune && open + remaining_after < self.k {
            return out;
        }
        for (li, list) in s.lists.iter().enumerate() {
            for pos in 0..list.len() {
                out.push(Move::After { list: li, pos });
            }
        }
        for li in 0..open {
            out.push(Move::Head { list: li });
        }
        out
    }

    fn apply(&self, s: &mut State, m: Move) {
        let e = s.placed() + 1;
        match m {
            Move::Open => {
                s.lists.push(vec![e]);
                s.letters.push(WeightLetter::One);
            }
            Move::After { list, pos } => {
                s.lists[list].insert(pos + 1, e);
                s.letters.push(WeightLetter::Alpha);
                s.alpha += 1;
            }
            Move::Head { list } => {
                s.lists[list].insert(0, e);
                s.letters.push(WeightLetter::Beta);
                s.beta += 1;
            }
        }
    }

    fn undo(&self, s: &mut State, m: Move) {
        s.letters.pop();
        match m {
            Move::Open => {
                s.lists.pop();
            }
            Move::After { list, pos } => {
                s.lists[list].remove(pos + 1);
                s.alpha -= 1;
            }
            Move::Head { list } => {
                s.lists[list].remove(0);
                s.beta -= 1;
            }
        }
    }

    fn walk(&self, s: &mut State, visit: &mut dyn FnMut(&State)) {
        if s.placed() == self.n {
            if s.lists.len() == self.k {
                visit(s);
            }
            return;
        }
        for m in self.moves(s) {
            self.apply(s, m);
            self.walk(s, visit);
            self.undo(s, m);
        }
    }

    /// All states after the first `SPLIT_DEPTH` insertions, in walk order.
    fn frontier(&self) -> Vec<State> {
        let depth = SPLIT_DEPTH.min(self.n);
        let mut level = vec![State::default()];
        for _ in 0..depth {
            level = level
                .into_iter()
                .flat_map(|s| {
                    self.moves(&s).into_iter().map(move |m| {
                        let mut next = s.clone();
                        self.apply(&mut next, m);
                        next
                    })
                })
                .collect();
        }
        level
    }
}

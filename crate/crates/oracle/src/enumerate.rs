use crate::region::TriRegion;
use crate::OracleError;

/// Default cap on the number of tilings a single enumeration may produce.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A lozenge: an up-triangle and a down-triangle sharing an edge, given
/// by their indices in the region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lozenge {
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub lozenges: Vec<Lozenge>,
}

impl Tiling {
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.lozenges.iter().any(|z| (z.a == a && z.b == b) || (z.a == b && z.b == a))
    }
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    first: usize,
    choice: usize,
}

/// Depth-first matcher over a region, one perfect matching at a time.
///
/// The first uncovered triangle in scan order is always matched next, so
/// each tiling is produced exactly once and the order is deterministic.
pub struct Enumerator<'a> {
    region: &'a TriRegion,
    covered: Vec<bool>,
    partner: Vec<usize>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
    produced: u64,
    budget: u64,
}

impl<'a> Enumerator<'a> {
    pub fn new(region: &'a TriRegion, budget: u64) -> Self {
        let n = region.len();
        Self {
            region,
            covered: vec![false; n],
            partner: vec![usize::MAX; n],
            stack: Vec::with_capacity(n / 2),
            started: false,
            done: !region.is_balanced(),
            produced: 0,
            budget,
        }
    }

    /// Partner of triangle `k` in the current tiling.
    pub fn partner(&self, k: usize) -> usize {
        self.partner[k]
    }

    pub fn current(&self) -> Tiling {
        let lozenges = self.stack.iter().map(|f| Lozenge { a: f.first, b: self.partner[f.first] }).collect();
        Tiling { lozenges }
    }

    /// Tries options `from..` for the triangle `first`; pushes on success.
    fn place(&mut self, first: usize, from: usize) -> bool {
        let options = self.region.forward(first);
        for (c, &p) in options.iter().enumerate().skip(from) {
            if !self.covered[p] {
                self.covered[first] = true;
                self.covered[p] = true;
                self.partner[first] = p;
                self.partner[p] = first;
                self.stack.push(Frame { first, choice: c });
                return true;
            }
        }
        false
    }

    fn first_uncovered(&self) -> Option<usize> {
        let start = self.stack.last().map_or(0, |f| f.first + 1);
        (start..self.covered.len()).find(|&k| !self.covered[k])
    }

    /// Moves to the next tiling; `Ok(false)` once the search is exhausted.
    pub fn advance(&mut self) -> Result<bool, OracleError> {
        if self.done {
            return Ok(false);
        }
        let mut backtrack = self.started;
        self.started = true;
        loop {
            if backtrack {
                let Some(f) = self.stack.pop() else {
                    self.done = true;
                    return Ok(false);
                };
                let p = self.partner[f.first];
                self.covered[f.first] = false;
                self.covered[p] = false;
                backtrack = !self.place(f.first, f.choice + 1);
            } else {
                match self.first_uncovered() {
                    None => {
                        if self.produced == self.budget {
                            self.done = true;
                            return Err(OracleError::BudgetExceeded { budget: self.budget });
                        }
                        self.produced += 1;
                        return Ok(true);
                    }
                    Some(k) => backtrack = !self.place(k, 0),
                }
            }
        }
    }
}

/// Lazy stream of tilings; yields one error and stops if the budget runs out.
pub struct Tilings<'a> {
    inner: Enumerator<'a>,
}

impl Iterator for Tilings<'_> {
    type Item = Result<Tiling, OracleError>;

    fn next(&mut self) -> Option<Self::Item> {
        match self.inner.advance() {
            Ok(true) => Some(Ok(self.inner.current())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    }
}

pub fn enumerate_tilings(region: &TriRegion, budget: u64) -> Tilings<'_> {
    Tilings { inner: Enumerator::new(region, budget) }
}

pub fn count_tilings(region: &TriRegion, budget: u64) -> Result<u64, OracleError> {
    let mut e = Enumerator::new(region, budget);
    let mut n = 0;
    while e.advance()? {
        n += 1;
    }
    Ok(n)
}

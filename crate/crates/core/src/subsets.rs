//! Lexicographic k-subsets of `0..n`.

/// Cursor over the k-subsets of `0..n` in lexicographic order.
///
/// [`Combinations::advance`] steps without allocating; the [`Iterator`]
/// impl clones each subset into a `Vec`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

/// All `k`-subsets of `0..n`, each sorted, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: (0..k).collect(),
        started: false,
        done: k > n,
    }
}

impl Combinations {
    /// Moves to the next subset; returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let k = self.current.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    /// The subset at the cursor; valid after `advance` returned `true`.
    pub fn current(&self) -> &[usize] {
        &self.current
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().then(|| self.current.clone())
    }
}

/// Bit mask with bit `v` set for each `v` in `set`.
pub fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

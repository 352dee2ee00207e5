//! Lexicographically minimal relabeling of a tournament.
//!
//! The encoding is the upper triangle of the adjacency matrix read row by
//! row (pairs `(0,1), (0,2), .., (n-2,n-1)`), bit 1 meaning `i -> j`. Once
//! positions `0..k` are placed, every remaining vertex must sit in the
//! column block given by its edges to the placed vertices (vertices beating
//! a placed vertex sort first), so rows `0..k` are fully determined and the
//! next position must come from the first cell. This is branch and bound
//! over that ordered partition; all optimal leaves are kept, so the leaves
//! form a coset of the automorphism group.

pub(crate) const MAX_CANON: usize = 16;

pub(crate) struct CanonResult {
    pub code: u128,
    /// `labelings[i][pos]` is the original vertex placed at `pos`.
    pub labelings: Vec<[u8; MAX_CANON]>,
}

#[derive(Clone, Copy)]
struct Cells {
    cells: [u32; MAX_CANON],
    len: usize,
}

struct Search<'a> {
    n: usize,
    out: &'a [u32],
    inn: [u32; MAX_CANON],
    best_rows: [u32; MAX_CANON],
    have_best: bool,
    rows: [u32; MAX_CANON],
    cur: [u8; MAX_CANON],
    labelings: Vec<[u8; MAX_CANON]>,
}

/// `out[v]` is the out-neighbour mask of `v`; requires `1 <= n <= 16`.
pub(crate) fn canon_search(n: usize, out: &[u32]) -> CanonResult {
    debug_assert!((1..=MAX_CANON).contains(&n));
    let all = (1u32 << n) - 1;
    let mut inn = [0u32; MAX_CANON];
    for v in 0..n {
        inn[v] = all & !out[v] & !(1 << v);
    }
    let mut s = Search {
        n,
        out,
        inn,
        best_rows: [0; MAX_CANON],
        have_best: false,
        rows: [0; MAX_CANON],
        cur: [0; MAX_CANON],
        labelings: Vec::new(),
    };
    let mut root = Cells {
        cells: [0; MAX_CANON],
        len: 1,
    };
    root.cells[0] = all;
    s.dfs(0, &root, true);
    let mut code: u128 = 0;
    for k in 0..n {
        code = (code << (n - 1 - k)) | s.best_rows[k] as u128;
    }
    CanonResult {
        code,
        labelings: s.labelings,
    }
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize, cells: &Cells, mut improving: bool) -> bool {
        if depth == self.n {
            if !self.have_best || improving {
                self.best_rows = self.rows;
                self.have_best = true;
                self.labelings.clear();
                self.labelings.push(self.cur);
                return true;
            }
            self.labelings.push(self.cur);
            return false;
        }
        let mut updated = false;
        let mut candidates = cells.cells[0];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;

            let mut next = Cells {
                cells: [0; MAX_CANON],
                len: 0,
            };
            let mut row: u32 = 0;
            for (i, &cell) in cells.cells[..cells.len].iter().enumerate() {
                let cell = if i == 0 { cell & !(1 << v) } else { cell };
                let beats_v = cell & self.inn[v];
                let beaten = cell & self.out[v];
                if beats_v != 0 {
                    next.cells[next.len] = beats_v;
                    next.len += 1;
                    row <<= beats_v.count_ones();
                }
                if beaten != 0 {
                    next.cells[next.len] = beaten;
                    next.len += 1;
                    let c = beaten.count_ones();
                    row = (row << c) | ((1u32 << c) - 1);
                }
            }

            let child_improving = if !self.have_best || improving {
                true
            } else {
                match row.cmp(&self.best_rows[depth]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => false,
                }
            };
            self.cur[depth] = v as u8;
            self.rows[depth] = row;
            if self.dfs(depth + 1, &next, child_improving) {
                improving = false;
                updated = true;
            }
        }
        updated
    }
}

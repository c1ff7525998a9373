//! Column-subset enumeration by increasing size.

use alloc::vec::Vec;

/// Lexicographic `k`-subsets of `0..n` as sorted index vectors.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, current: (0..k).collect(), done: k > n }
    }

    /// The current subset without allocating, or `None` when exhausted.
    pub fn current(&self) -> Option<&[usize]> {
        (!self.done).then_some(self.current.as_slice())
    }

    /// Moves to the lexicographic successor.
    pub fn advance(&mut self) {
        let k = self.current.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current()?.to_vec();
        self.advance();
        Some(out)
    }
}

/// Calls `f` on every nonempty subset of `0..n` with at most `max_size`
/// elements, smaller subsets first and lexicographic within a size.
pub fn for_each_subset<F: FnMut(&[usize])>(n: usize, max_size: usize, mut f: F) {
    for k in 1..=max_size.min(n) {
        let mut combos = Combinations::new(n, k);
        while let Some(subset) = combos.current() {
            f(subset);
            combos.advance();
        }
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn mask_indices(mask: u64, out: &mut Vec<usize>) {
    out.clear();
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
}

//! Littlewood–Richardson coefficients by counting LR tableaux.

use super::Partition;

/// Number of semistandard fillings of the skew shape `outer/inner` with
/// content `content` whose reverse reading word (right to left, top to
/// bottom) is a lattice word.
pub(crate) fn count_lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if !outer.contains(inner) || outer.weight() != inner.weight() + content.weight() {
        return 0;
    }
    if content.is_empty() {
        return 1;
    }
    let rows = outer.length();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = Filling {
        outer,
        inner,
        content: content.parts(),
        grid: (0..rows).map(|r| vec![0usize; outer.part(r)]).collect(),
        counts: vec![0; content.length() + 1],
    };
    filling.count(&cells, 0)
}

struct Filling<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [usize],
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Filling<'_> {
    fn count(&mut self, cells: &[(usize, usize)], idx: usize) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        // Row weakly increasing: bounded by the already-filled right neighbour.
        let mut hi = self.content.len();
        if c + 1 < self.outer.part(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        // Column strictly increasing against the skew cell above, if any.
        let mut lo = 1;
        if r > 0 && c >= self.inner.part(r - 1) {
            lo = self.grid[r - 1][c] + 1;
        }
        // A letter can sit no higher than its own row in an LR tableau.
        hi = hi.min(r + 1);
        let mut total = 0;
        for v in lo..=hi {
            if self.counts[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            total += self.count(cells, idx + 1);
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

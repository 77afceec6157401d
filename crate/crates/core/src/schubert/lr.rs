use super::Partition;

/// `c^nu_{lambda, mu}`: the number of semistandard fillings of the skew
/// shape `nu / lambda` with content `mu` whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r) as usize..nu.part(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    let mut search = Search {
        lambda,
        nu,
        content: mu.parts().to_vec(),
        cells,
        grid: (0..nu.len()).map(|r| vec![0u32; nu.part(r) as usize]).collect(),
        used: vec![0; mu.len()],
    };
    search.count(0)
}

struct Search<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    content: Vec<u32>,
    /// skew cells in reverse reading order: rows top down, right to left
    cells: Vec<(usize, usize)>,
    /// 1-based entries; 0 marks unfilled
    grid: Vec<Vec<u32>>,
    used: Vec<u32>,
}

impl Search<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        // rows weakly increase left to right; the right neighbour is filled
        let mut hi = self.content.len() as u32;
        if c + 1 < self.nu.part(r) as usize {
            hi = hi.min(self.grid[r][c + 1]);
        }
        // columns strictly increase downwards
        let lo = if r > 0 && c >= self.lambda.part(r - 1) as usize {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let i = (v - 1) as usize;
            if self.used[i] == self.content[i] {
                continue;
            }
            // lattice: never more v's than (v-1)'s
            if i > 0 && self.used[i] + 1 > self.used[i - 1] {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = v;
            total += self.count(idx + 1);
            self.grid[r][c] = 0;
            self.used[i] -= 1;
        }
        total
    }
}

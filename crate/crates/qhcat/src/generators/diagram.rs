//! Diagrams on 2n points and their loop-counting composition.
//!
//! A diagram is a set partition of {0..2n-1}: points 0..n-1 are the bottom
//! row (domain), points n..2n-1 the top row (codomain). Temperley–Lieb and
//! Brauer diagrams are the perfect matchings (planar ones for TL); the
//! partition monoid takes all set partitions. Composing stacks the first
//! diagram under the second and counts the connected components that stay
//! entirely in the glued middle row — each contributes one factor δ.

/// Canonical set partition of {0..2n-1}: blocks sorted internally and by
/// first element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        debug_assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), 2 * n);
        Diagram { n, blocks }
    }

    pub fn identity(n: usize) -> Self {
        Diagram::new(n, (0..n).map(|i| vec![i, n + i]).collect())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of propagating blocks (touching both rows).
    pub fn through_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.iter().any(|&p| p < self.n) && b.iter().any(|&p| p >= self.n))
            .count()
    }

    /// Vertical flip: swap the two rows. The flip is a pseudo-inverse for
    /// the loop-discarding composition.
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        Diagram::new(
            n,
            self.blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&p| if p < n { p + n } else { p - n })
                        .collect()
                })
                .collect(),
        )
    }

    /// `t∘s` (apply `s` first): glue s's top row to t's bottom row.
    /// Returns the composed diagram and the number of closed middle
    /// components removed.
    pub fn compose(t: &Diagram, s: &Diagram) -> (Diagram, usize) {
        let n = t.n;
        assert_eq!(n, s.n, "strand count mismatch");
        // Nodes: 0..n = bottom (s's bottom), n..2n = middle, 2n..3n = top.
        let mut uf = UnionFind::new(3 * n);
        for b in &s.blocks {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for b in &t.blocks {
            // t's points shift by n: bottom p -> middle n+p, top p -> 2n + (p-n).
            let mapped: Vec<usize> = b.iter().map(|&p| p + n).collect();
            for w in mapped.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut members: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for v in 0..3 * n {
            members.entry(uf.find(v)).or_default().push(v);
        }
        let mut blocks = Vec::new();
        let mut loops = 0;
        for (_, mem) in members {
            let outer: Vec<usize> = mem
                .iter()
                .filter(|&&v| v < n || v >= 2 * n)
                .map(|&v| if v < n { v } else { v - n })
                .collect();
            if outer.is_empty() {
                loops += 1;
            } else {
                blocks.push(outer);
            }
        }
        (Diagram::new(n, blocks), loops)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// All perfect matchings of {0..2n-1} as diagrams (Brauer diagrams).
pub fn all_matchings(n: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    let points: Vec<usize> = (0..2 * n).collect();
    let mut pairs = Vec::new();
    match_rec(&points, &mut pairs, &mut out, n);
    out.sort();
    out
}

fn match_rec(points: &[usize], pairs: &mut Vec<Vec<usize>>, out: &mut Vec<Diagram>, n: usize) {
    if points.is_empty() {
        out.push(Diagram::new(n, pairs.clone()));
        return;
    }
    let first = points[0];
    for k in 1..points.len() {
        let partner = points[k];
        let mut rest: Vec<usize> = points[1..].to_vec();
        rest.remove(k - 1);
        pairs.push(vec![first, partner]);
        match_rec(&rest, pairs, out, n);
        pairs.pop();
    }
}

/// Planar perfect matchings of the 2n boundary points (Temperley–Lieb
/// diagrams). Planarity in the rectangle equals non-crossing in the
/// circular order b_0..b_{n-1}, t_{n-1}..t_0.
pub fn planar_matchings(n: usize) -> Vec<Diagram> {
    let seq: Vec<usize> = (0..2 * n)
        .map(|j| if j < n { j } else { 3 * n - 1 - j })
        .collect();
    let mut out = Vec::new();
    for m in noncrossing(&seq) {
        out.push(Diagram::new(n, m));
    }
    out.sort();
    out
}

fn noncrossing(seq: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if seq.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..seq.len()).step_by(2) {
        let inside = noncrossing(&seq[1..k]);
        let outside = noncrossing(&seq[k + 1..]);
        for a in &inside {
            for b in &outside {
                let mut m = vec![vec![seq[0], seq[k]]];
                m.extend(a.iter().cloned());
                m.extend(b.iter().cloned());
                out.push(m);
            }
        }
    }
    out
}

/// All set partitions of {0..2n-1} as diagrams (partition monoid), via
/// restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Diagram> {
    let size = 2 * n;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; size];
    loop {
        let nblocks = rgs.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks = vec![Vec::new(); nblocks];
        for (p, &b) in rgs.iter().enumerate() {
            blocks[b].push(p);
        }
        out.push(Diagram::new(n, blocks));
        // Next restricted growth string.
        let mut i = size;
        loop {
            if i == 1 {
                out.sort();
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
        }
    }
}

pub fn catalan(n: usize) -> usize {
    // C_n = (2n)! / (n! (n+1)!)
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as usize
}

pub fn double_factorial_odd(n: usize) -> usize {
    // (2n-1)!! = 1 * 3 * ... * (2n-1)
    (0..n).map(|i| 2 * i + 1).product::<usize>().max(1)
}

pub fn bell(n: usize) -> usize {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 1..=n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0] as usize
}

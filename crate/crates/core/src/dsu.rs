//! Disjoint sets over dense `usize` ids.

/// Union-find with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n], sets: n }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.sets -= 1;
        true
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.sets
    }
}

/// Union-find where each element carries a bit relative to its root, used
/// to solve systems of "equal" / "different" constraints.
#[derive(Debug, Clone)]
pub struct ParitySets {
    parent: Vec<usize>,
    // parity of an element relative to its parent
    parity: Vec<bool>,
}

impl ParitySets {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n] }
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parity[x] ^= up;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    /// Records `bit(a) xor bit(b) == differ`. Returns `false` on a
    /// contradiction with earlier constraints.
    pub fn relate(&mut self, a: usize, b: usize, differ: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == differ;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ differ;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unions_and_counts() {
        let mut d = DisjointSets::new(6);
        assert_eq!(d.count(), 6);
        assert!(d.union(0, 1));
        assert!(d.union(2, 3));
        assert!(d.union(1, 3));
        assert!(!d.union(0, 2));
        assert_eq!(d.count(), 3);
        assert_eq!(d.find(0), d.find(3));
        assert_ne!(d.find(0), d.find(4));
    }

    #[test]
    fn parity_constraints() {
        let mut p = ParitySets::new(4);
        assert!(p.relate(0, 1, true));
        assert!(p.relate(1, 2, true));
        assert!(p.relate(0, 2, false));
        assert!(!p.relate(0, 2, true));
        // odd cycle of "different" is unsatisfiable
        let mut q = ParitySets::new(3);
        assert!(q.relate(0, 1, true));
        assert!(q.relate(1, 2, true));
        assert!(!q.relate(2, 0, true));
    }
}

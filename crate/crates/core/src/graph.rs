//! Undirected simple graphs on a fixed vertex set `0..n`.
//!
//! Adjacency is stored as packed bit rows (one `u64` word per 64 vertices),
//! which makes complement, edit distance and neighbourhood scans word-wise.
//! A [`Graph`] is treated as immutable once built; mutation happens through
//! the owning builder before the value is shared.

use num_rational::Rational64;

use crate::error::{Error, Result};

/// Undirected simple graph: symmetric boolean adjacency with zero diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph of order `n` with no edges. Order zero is rejected.
    pub fn empty(n: usize) -> Graph {
        assert!(n >= 1, "graph order must be at least 1");
        let words_per_row = n.div_ceil(64);
        Graph {
            n,
            words_per_row,
            bits: vec![0u64; n * words_per_row],
        }
    }

    /// Builds a graph from an edge list; duplicate edges are idempotent.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Graph {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    fn word(&self, u: usize, w: usize) -> u64 {
        self.bits[u * self.words_per_row + w]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.word(u, v / 64) >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, false);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert!(u != v, "self-loops are not representable");
        let wpr = self.words_per_row;
        let (wu, wv) = (u * wpr + v / 64, v * wpr + u / 64);
        if present {
            self.bits[wu] |= 1 << (v % 64);
            self.bits[wv] |= 1 << (u % 64);
        } else {
            self.bits[wu] &= !(1 << (v % 64));
            self.bits[wv] &= !(1 << (u % 64));
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        let wpr = self.words_per_row;
        self.bits[u * wpr..(u + 1) * wpr]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap()
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Neighbours of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let wpr = self.words_per_row;
        self.bits[u * wpr..(u + 1) * wpr]
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| {
                let mut w = w;
                std::iter::from_fn(move || {
                    if w == 0 {
                        None
                    } else {
                        let b = w.trailing_zeros() as usize;
                        w &= w - 1;
                        Some(wi * 64 + b)
                    }
                })
            })
    }

    /// Smallest neighbour of `u` that is neither `v` nor adjacent to `v`.
    ///
    /// Word-wise scan of `N(u) \ (N(v) ∪ {v})`; used by the regularizer.
    pub(crate) fn transferable_neighbor(&self, u: usize, v: usize) -> Option<usize> {
        let wpr = self.words_per_row;
        for w in 0..wpr {
            let mut cand = self.word(u, w) & !self.word(v, w);
            if w == v / 64 {
                cand &= !(1u64 << (v % 64));
            }
            if cand != 0 {
                return Some(w * 64 + cand.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Off-diagonal logical negation; involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let wpr = self.words_per_row;
        let tail_mask = if self.n % 64 == 0 {
            u64::MAX
        } else {
            (1u64 << (self.n % 64)) - 1
        };
        for u in 0..self.n {
            for w in 0..wpr {
                let mut x = !self.word(u, w);
                if w == wpr - 1 {
                    x &= tail_mask;
                }
                if w == u / 64 {
                    x &= !(1u64 << (u % 64));
                }
                g.bits[u * wpr + w] = x;
            }
        }
        g
    }

    /// Number of vertex pairs on which the two graphs differ.
    pub fn edit_distance(&self, other: &Graph) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let diff: usize = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum();
        Ok(diff / 2)
    }

    /// Block-diagonal union on `order() + other.order()` vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    g.add_edge(u, v);
                }
            }
        }
        for u in 0..other.n {
            for v in other.neighbors(u) {
                if v > u {
                    g.add_edge(self.n + u, self.n + v);
                }
            }
        }
        g
    }

    /// Appends `count` isolated vertices.
    pub fn add_isolated(&self, count: usize) -> Graph {
        let mut g = Graph::empty(self.n + count);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        let two_m = degrees.iter().sum::<usize>() as i64;
        let n = self.n as i64;
        let deviation_num: i64 = degrees.iter().map(|&d| (n * d as i64 - two_m).abs()).sum();
        DegreeStats {
            degrees,
            mean_degree: Rational64::new(two_m, n),
            deviation: Rational64::new(deviation_num, n),
        }
    }

    /// Degree deviation `s(G) = Σ_u |d(u) − 2m/n|` in exact rational
    /// arithmetic; zero exactly when the graph is regular.
    pub fn degree_deviation(&self) -> Rational64 {
        self.degree_stats().deviation
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.size())
    }
}

/// Per-vertex degrees together with the exact mean and deviation.
#[derive(Clone, Debug)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// `2m/n` as an exact rational.
    pub mean_degree: Rational64,
    /// `s(G)` as an exact rational with denominator dividing `n`.
    pub deviation: Rational64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle};

    #[test]
    fn degree_deviation_regular_is_zero() {
        for g in [complete(7), cycle(9).unwrap()] {
            assert_eq!(g.degree_deviation(), Rational64::new(0, 1));
        }
    }

    #[test]
    fn degree_deviation_star_k13() {
        // degrees (3,1,1,1), mean 3/2: |3-3/2| + 3*|1-3/2| = 3
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.degree_deviation(), Rational64::new(3, 1));
    }

    #[test]
    fn degree_deviation_path_p3() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(g.degree_deviation(), Rational64::new(4, 3));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = complete(5).complement();
        assert_eq!(g.size(), 0);
        assert_eq!(g.order(), 5);
        assert_eq!(Graph::empty(5).complement(), complete(5));
    }

    #[test]
    fn complement_c5_degrees() {
        let c5 = cycle(5).unwrap();
        let g = c5.complement();
        assert_eq!(g.degrees(), vec![2; 5]);
        // C_5 is self-complementary; brute-force a relabeling that maps one
        // onto the other.
        let mut perm = [0usize, 1, 2, 3, 4];
        let mut found = false;
        permute(&mut perm, 0, &mut |p| {
            if !found {
                found = (0..5).all(|u| {
                    (0..5).all(|v| u == v || c5.has_edge(u, v) == g.has_edge(p[u], p[v]))
                });
            }
        });
        assert!(found, "complement of C_5 is not isomorphic to C_5");
    }

    fn permute(items: &mut [usize; 5], k: usize, visit: &mut impl FnMut(&[usize; 5])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    #[test]
    fn edit_distance_examples() {
        let k3 = complete(3);
        assert_eq!(k3.edit_distance(&k3).unwrap(), 0);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(k3.edit_distance(&p3).unwrap(), 1);
        assert_eq!(complete(4).edit_distance(&Graph::empty(4)).unwrap(), 6);
        assert!(matches!(
            complete(4).edit_distance(&complete(5)),
            Err(Error::OrderMismatch(4, 5))
        ));
    }

    #[test]
    fn disjoint_union_and_isolated() {
        let g = complete(3).disjoint_union(&complete(3));
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.regular_degree(), Some(2));

        let mut m = complete(2);
        for _ in 0..4 {
            m = m.disjoint_union(&complete(2));
        }
        assert_eq!((m.order(), m.size()), (10, 5));
        assert_eq!(m.regular_degree(), Some(1));

        let u = cycle(3).unwrap().disjoint_union(&cycle(6).unwrap());
        assert_eq!(u.order(), 9);
        assert_eq!(u.regular_degree(), Some(2));

        let iso = complete(3).add_isolated(2);
        assert_eq!(iso.degrees(), vec![2, 2, 2, 0, 0]);
        assert_eq!(complete(3).add_isolated(0), complete(3));
        assert_eq!(Graph::empty(1).add_isolated(4), Graph::empty(5));
    }

    #[test]
    fn complement_edge_count_identity() {
        let g = Graph::from_edges(10, [(0, 3), (2, 7), (7, 9), (1, 2)]);
        let c = g.complement();
        assert_eq!(g.size() + c.size(), 10 * 9 / 2);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn neighbors_across_word_boundary() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 63);
        g.add_edge(0, 64);
        g.add_edge(0, 129);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![63, 64, 129]);
        assert_eq!(g.degree(0), 3);
        assert!(g.has_edge(129, 0));
    }
}

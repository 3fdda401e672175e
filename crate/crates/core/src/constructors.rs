//! Exact builders for the graph families under study, plus random graph
//! samplers. Every algebraic construction enumerates vertices in the
//! deterministic order of the algebra module, so outputs are
//! byte-reproducible across runs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{as_prime_power, quadratic_residues, FiniteField, projective_points};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Densest order any constructor will materialize.
const MAX_DENSE_ORDER: usize = 20_000;

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Perfect matching `(n/2) K_2`; `n` must be even.
pub fn perfect_matching(n: usize) -> Result<Graph> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::OddDegreeSum { n, k: 1 });
    }
    let mut g = Graph::empty(n);
    for i in 0..n / 2 {
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// Cycle `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs order >= 3, got {n}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Paley graph on a prime `p ≡ 1 (mod 4)`: vertices `0..p`, edges between
/// residues differing by a quadratic residue. `(p−1)/2`-regular and
/// self-complementary; a conference graph, so its full spectrum is known.
pub fn paley(p: u64) -> Result<Graph> {
    let residues = quadratic_residues(p)?;
    if p as usize > MAX_DENSE_ORDER {
        return Err(Error::TooLarge(p as u128, MAX_DENSE_ORDER));
    }
    let mut is_residue = vec![false; p as usize];
    for &r in &residues {
        is_residue[r as usize] = true;
    }
    let n = p as usize;
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if is_residue[j - i] {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Symplectic graph `Sp(2m, q)`: vertices are the projective points of
/// `F_q^{2m}`, adjacent when the symplectic form is nonzero. Strongly
/// regular with parameters
/// `((q^{2m}−1)/(q−1), q^{2m−1}, q^{2m−2}(q−1), q^{2m−2}(q−1))` — a design
/// graph, hence of maximal energy for its degree and order.
pub fn symplectic_graph(q: u64, m: usize) -> Result<Graph> {
    assert!(m >= 2, "symplectic construction requires m >= 2");
    let (p, e) = as_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let n = (0..2 * m as u32).fold(0u128, |acc, _| acc * q as u128 + 1); // (q^{2m}-1)/(q-1)
    if n > MAX_DENSE_ORDER as u128 {
        return Err(Error::TooLarge(n, MAX_DENSE_ORDER));
    }
    let field = FiniteField::new(p, e)?;
    let points = projective_points(&field, 2 * m)?;
    let n = points.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let form = field.symplectic_form(&points[i].coords, &points[j].coords)?;
            if !form.is_zero() {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Complement of [`symplectic_graph`], with the same vertex order.
pub fn symplectic_complement(q: u64, m: usize) -> Result<Graph> {
    Ok(symplectic_graph(q, m)?.complement())
}

/// Ahrens–Szekeres graph for even `q`: vertices are the affine lines of
/// `AG(3,q)` whose direction lies on the hyperoval
/// `O = {(1,t,t²) : t ∈ F_q} ∪ {(0,1,0), (0,0,1)}` (conic plus nucleus);
/// two lines are adjacent when they meet in an affine point. Strongly
/// regular with parameters `(q²(q+2), q(q+1), q, q)`.
///
/// Only characteristic two is built; the odd-q family needs a different
/// model and is out of scope.
pub fn ahrens_szekeres(q: u64) -> Result<Graph> {
    match as_prime_power(q) {
        Some((2, _)) => {}
        _ => return Err(Error::NotPowerOfTwo(q)),
    }
    let order = (q as u128) * (q as u128) * (q as u128 + 2);
    if order > MAX_DENSE_ORDER as u128 {
        return Err(Error::TooLarge(order, MAX_DENSE_ORDER));
    }
    let e = q.trailing_zeros();
    let field = FiniteField::new(2, e)?;
    let qs = q as usize;

    let directions = hyperoval(&field);
    debug_assert_eq!(directions.len(), qs + 2);

    // index <-> coordinates of the q^3 affine points
    let coords_of = |idx: usize| {
        let (x, rest) = (idx % qs, idx / qs);
        let (y, z) = (rest % qs, rest / qs);
        [field.element(x as u64), field.element(y as u64), field.element(z as u64)]
    };
    let index_of = |pt: &[crate::algebra::FieldElement; 3]| {
        field.index_of(&pt[0]) as usize
            + field.index_of(&pt[1]) as usize * qs
            + field.index_of(&pt[2]) as usize * qs * qs
    };

    let n_points = qs * qs * qs;
    // parallel class of every affine point, per direction
    let mut classes = vec![vec![usize::MAX; n_points]; directions.len()];
    for (di, dir) in directions.iter().enumerate() {
        let mut next = 0usize;
        for start in 0..n_points {
            if classes[di][start] != usize::MAX {
                continue;
            }
            let base = coords_of(start);
            for s in 0..qs {
                let t = field.element(s as u64);
                let pt = [
                    field.add(&base[0], &field.mul(&t, &dir[0])),
                    field.add(&base[1], &field.mul(&t, &dir[1])),
                    field.add(&base[2], &field.mul(&t, &dir[2])),
                ];
                classes[di][index_of(&pt)] = next;
            }
            next += 1;
        }
        debug_assert_eq!(next, qs * qs);
    }

    // vertex = direction * q^2 + class; lines meet iff they share a point
    let mut g = Graph::empty(qs * qs * (qs + 2));
    #[allow(clippy::needless_range_loop)] // pt indexes every per-direction table
    for pt in 0..n_points {
        for d1 in 0..directions.len() {
            for d2 in d1 + 1..directions.len() {
                g.add_edge(d1 * qs * qs + classes[d1][pt], d2 * qs * qs + classes[d2][pt]);
            }
        }
    }
    Ok(g)
}

/// The hyperoval `{(1,t,t²)} ∪ {(0,1,0), (0,0,1)}` as coordinate triples.
pub(crate) fn hyperoval(field: &FiniteField) -> Vec<[crate::algebra::FieldElement; 3]> {
    let mut dirs = Vec::new();
    for t in field.elements() {
        dirs.push([field.one(), t.clone(), field.mul(&t, &t)]);
    }
    dirs.push([field.zero(), field.one(), field.zero()]);
    dirs.push([field.zero(), field.zero(), field.one()]);
    dirs
}

/// Bipartite point–line incidence graph of the projective plane `PG(2,q)`:
/// order `2(q²+q+1)`, `(q+1)`-regular, girth six. Points come first, lines
/// second, both in the deterministic projective enumeration order.
pub fn pg_incidence(q: u64) -> Result<Graph> {
    let (p, e) = as_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let field = FiniteField::new(p, e)?;
    let pts = projective_points(&field, 3)?;
    let n_pts = pts.len();
    if 2 * n_pts > MAX_DENSE_ORDER {
        return Err(Error::TooLarge(2 * n_pts as u128, MAX_DENSE_ORDER));
    }
    let mut g = Graph::empty(2 * n_pts);
    for i in 0..n_pts {
        for j in 0..n_pts {
            let mut dot = field.zero();
            for c in 0..3 {
                dot = field.add(&dot, &field.mul(&pts[i].coords[c], &pts[j].coords[c]));
            }
            if dot.is_zero() {
                g.add_edge(i, n_pts + j);
            }
        }
    }
    Ok(g)
}

/// Full-rejection retry budget for the exact configuration-model sampler.
const RETRY_BUDGET: usize = 1_000_000;
/// Degrees up to this use full rejection (exactly uniform); beyond it the
/// acceptance probability of a whole pairing collapses and the sampler
/// switches to pair-level rejection, which is only asymptotically uniform.
const EXACT_DEGREE_LIMIT: usize = 7;

/// Uniform-ish random simple `k`-regular graph on `n` vertices via the
/// configuration model, deterministic for a given seed.
///
/// For `k ≤ 7` a whole random pairing is drawn and rejected outright on any
/// loop or multi-edge, which samples exactly uniformly. For larger `k` the
/// sampler rejects offending pairs individually and restarts only on
/// dead ends; uniformity then holds only asymptotically, so keep
/// distribution-sensitive tests at small degree.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k < 1 || k >= n {
        return Err(Error::DegreeRange { n, k });
    }
    if (n * k) % 2 != 0 {
        return Err(Error::OddDegreeSum { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    if k <= EXACT_DEGREE_LIMIT {
        for _ in 0..RETRY_BUDGET {
            stubs.shuffle(&mut rng);
            if let Some(g) = pair_all(&stubs, n) {
                return Ok(g);
            }
        }
        return Err(Error::RetryBudget { n, k });
    }
    'restart: for _ in 0..1000 {
        let mut g = Graph::empty(n);
        let mut pool = stubs.clone();
        let mut fails = 0usize;
        while !pool.is_empty() {
            let i = rng.random_range(0..pool.len());
            let j = rng.random_range(0..pool.len());
            let (u, v) = (pool[i] as usize, pool[j] as usize);
            if i == j || u == v || g.has_edge(u, v) {
                fails += 1;
                if fails > 200 + 50 * pool.len() {
                    continue 'restart;
                }
                continue;
            }
            g.add_edge(u, v);
            pool.swap_remove(i.max(j));
            pool.swap_remove(i.min(j));
            fails = 0;
        }
        return Ok(g);
    }
    Err(Error::RetryBudget { n, k })
}

fn pair_all(stubs: &[u32], n: usize) -> Option<Graph> {
    let mut g = Graph::empty(n);
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0] as usize, pair[1] as usize);
        if u == v || g.has_edge(u, v) {
            return None;
        }
        g.add_edge(u, v);
    }
    Some(g)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform random graph with exactly `m` edges.
pub fn random_gnm(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let max = n * (n - 1) / 2;
    assert!(m <= max, "too many edges requested");
    let mut slots: Vec<usize> = (0..max).collect();
    slots.shuffle(rng);
    let mut g = Graph::empty(n);
    for &idx in slots.iter().take(m) {
        let (u, v) = pair_of_slot(idx);
        g.add_edge(u, v);
    }
    g
}

fn pair_of_slot(idx: usize) -> (usize, usize) {
    let mut v = 1usize;
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    (idx - v * (v - 1) / 2, v)
}

/// Strongly-regular parameter set together with the restricted eigenvalues
/// and their multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    /// Restricted eigenvalues, `r > s`.
    pub r: f64,
    pub s: f64,
    /// Multiplicities of `r` and `s`; `1 + f + g = n`.
    pub f: usize,
    pub g: usize,
}

impl SrgParams {
    /// Validates the feasibility identity `k(k−λ−1) = (n−k−1)μ` and the
    /// integrality of the multiplicities.
    pub fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Result<SrgParams> {
        if k * (k - lambda - 1) != (n - k - 1) * mu {
            return Err(Error::InvalidParameter(format!(
                "infeasible SRG parameters ({n},{k},{lambda},{mu})"
            )));
        }
        let (lf, mf, kf, nf) = (lambda as f64, mu as f64, k as f64, n as f64);
        let disc = ((lf - mf) * (lf - mf) + 4.0 * (kf - mf)).sqrt();
        let r = ((lf - mf) + disc) / 2.0;
        let s = ((lf - mf) - disc) / 2.0;
        let f = ((nf - 1.0) - (2.0 * kf + (nf - 1.0) * (lf - mf)) / disc) / 2.0;
        let g = (nf - 1.0) - f;
        if (f - f.round()).abs() > 1e-6 {
            return Err(Error::InvalidParameter(format!(
                "non-integral multiplicities for ({n},{k},{lambda},{mu})"
            )));
        }
        Ok(SrgParams {
            n,
            k,
            lambda,
            mu,
            r,
            s,
            f: f.round() as usize,
            g: g.round() as usize,
        })
    }

    /// Measures whether a graph is strongly regular by exhaustive
    /// common-neighbour counting, and returns its parameters if so.
    pub fn from_graph(graph: &Graph) -> Option<SrgParams> {
        let n = graph.order();
        let k = graph.regular_degree()?;
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n {
            for v in u + 1..n {
                let common = graph
                    .neighbors(u)
                    .filter(|&w| graph.has_edge(v, w))
                    .count();
                let slot = if graph.has_edge(u, v) { &mut lambda } else { &mut mu };
                match slot {
                    None => *slot = Some(common),
                    Some(c) if *c == common => {}
                    Some(_) => return None,
                }
            }
        }
        SrgParams::new(n, k, lambda?, mu?).ok()
    }

    /// Design graphs (`λ = μ`) attain the degree/order energy maximum.
    pub fn is_design(&self) -> bool {
        self.lambda == self.mu
    }

    /// `k + f·|r| + g·|s|`.
    pub fn energy(&self) -> f64 {
        self.k as f64 + self.f as f64 * self.r.abs() + self.g as f64 * self.s.abs()
    }
}

//! Constructive procedures that trade edits for energy control: making a
//! graph near-regular by single-edge transfers, growing a regular graph to
//! a larger order, and the Paley-based construction of regular graphs with
//! near-maximal energy.

use num_rational::Rational64;

use crate::algebra::is_prime;
use crate::constructors::paley;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::energy;

/// One edge transfer: `removed` was an edge, `added` was not.
#[derive(Clone, Copy, Debug)]
pub struct EdgeMove {
    pub removed: (usize, usize),
    pub added: (usize, usize),
}

/// What the regularizer did.
#[derive(Clone, Debug)]
pub struct RegularizeReport {
    /// Degree deviation `s(G)` of the input.
    pub deviation_in: Rational64,
    /// Vertex pairs on which input and output differ; `2 ×` number of moves.
    pub edits: usize,
    /// Maximum and minimum degree of the output.
    pub max_degree: usize,
    pub min_degree: usize,
    pub moves: Vec<EdgeMove>,
}

/// Rebalances degrees by single-edge transfers until `Δ − δ ≤ 1`,
/// preserving order and size.
///
/// Move rule: take `u` of maximum degree and `v` of minimum degree (ties by
/// smallest index), pick the smallest-index neighbour `w` of `u` outside
/// `N(v) ∪ {v}`, and replace `{u,w}` by `{v,w}`. Such a `w` always exists
/// when `d(u) ≥ d(v) + 2`, and when `2m/n` is an integer every move lowers
/// `Σ|d(x) − 2m/n|` by exactly two, so the result is `(2m/n)`-regular after
/// `s(G)/2` moves and differs from the input in at most `s(G)` pairs.
pub fn regularize(g: &Graph) -> (Graph, RegularizeReport) {
    let n = g.order();
    let deviation_in = g.degree_deviation();
    let mut out = g.clone();
    let mut degrees = out.degrees();
    let mut moves = Vec::new();
    loop {
        let (mut u, mut v) = (0usize, 0usize);
        for x in 1..n {
            if degrees[x] > degrees[u] {
                u = x;
            }
            if degrees[x] < degrees[v] {
                v = x;
            }
        }
        if degrees[u] - degrees[v] <= 1 {
            let report = RegularizeReport {
                deviation_in,
                edits: 2 * moves.len(),
                max_degree: degrees[u],
                min_degree: degrees[v],
                moves,
            };
            return (out, report);
        }
        let w = out
            .transferable_neighbor(u, v)
            .expect("d(u) >= d(v) + 2 guarantees a transferable neighbour");
        out.remove_edge(u, w);
        out.add_edge(v, w);
        degrees[u] -= 1;
        degrees[v] += 1;
        moves.push(EdgeMove { removed: (u, w), added: (v, w) });
    }
}

/// What the order extension did.
#[derive(Clone, Debug)]
pub struct ExtendReport {
    /// Input order, output order, degree.
    pub t: usize,
    pub n: usize,
    pub k: usize,
    /// Degree deviation of the intermediate graph; always `(n−t)k`.
    pub deviation_mid: usize,
    pub energy_in: f64,
    pub energy_mid: f64,
    pub energy_out: f64,
    /// `3 √((n−t) k n)` — the guaranteed energy budget.
    pub budget: f64,
}

/// Extends a `k`-regular graph of order `t` to a `k`-regular graph of
/// order `n > t` whose energy differs by less than `3 √((n−t) k n)`.
///
/// Each new vertex is joined to `⌊k/2⌋` or `⌈k/2⌉` of the old vertices
/// (targets taken round-robin so the load spreads evenly, the ceiling
/// halves first when `k` is odd), sized so the intermediate graph has
/// exactly `nk/2` edges; the regularizer then finishes the job.
pub fn extend_regular(h: &Graph, n: usize) -> Result<(Graph, ExtendReport)> {
    let t = h.order();
    let k = h.regular_degree().ok_or(Error::NotRegular)?;
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "extension needs degree at least 2, got {k}"
        )));
    }
    if n <= t {
        return Err(Error::InvalidParameter(format!(
            "target order {n} must exceed the input order {t}"
        )));
    }
    if (n * k) % 2 != 0 {
        return Err(Error::OddDegreeSum { n, k });
    }
    let fresh = n - t;
    let mut g0 = h.add_isolated(fresh);
    let mut cursor = 0usize;
    for j in 0..fresh {
        // when k is odd, parity forces n−t even; first half takes ⌈k/2⌉
        let quota = if k % 2 == 0 {
            k / 2
        } else if j < fresh / 2 {
            k.div_ceil(2)
        } else {
            k / 2
        };
        for _ in 0..quota {
            g0.add_edge(t + j, cursor);
            cursor = (cursor + 1) % t;
        }
    }
    debug_assert_eq!(g0.size(), n * k / 2);
    let deviation_mid = g0.degree_deviation();
    assert_eq!(
        deviation_mid,
        Rational64::new((fresh * k) as i64, 1),
        "intermediate deviation must be exactly (n-t)k"
    );

    let (g, _) = regularize(&g0);
    debug_assert_eq!(g.regular_degree(), Some(k));

    let energy_in = energy(h);
    let energy_mid = energy(&g0);
    let energy_out = energy(&g);
    let budget = 3.0 * ((fresh * k * n) as f64).sqrt();
    assert!(
        (energy_out - energy_in).abs() < budget,
        "energy drift {} exceeded the budget {budget}",
        (energy_out - energy_in).abs()
    );
    let report = ExtendReport {
        t,
        n,
        k,
        deviation_mid: fresh * k,
        energy_in,
        energy_mid,
        energy_out,
        budget,
    };
    Ok((g, report))
}

/// Largest prime `p ≤ n` with `p ≡ 1 (mod 4)`, found by a deterministic
/// sieve, together with whether it clears the `n − n^{3/5}/8` margin that
/// the asymptotic analysis expects.
#[derive(Clone, Copy, Debug)]
pub struct PaleyPrime {
    pub p: u64,
    /// `n − n^{3/5}/8`.
    pub margin: f64,
    pub within_margin: bool,
}

/// Finds the Paley prime for order `n ≥ 13`.
pub fn largest_paley_prime(n: usize) -> Result<PaleyPrime> {
    if n < 13 {
        return Err(Error::InvalidParameter(format!(
            "paley prime search needs n >= 13, got {n}"
        )));
    }
    let sieve = sieve_primes(n);
    let p = (13..=n)
        .rev()
        .find(|&p| p % 4 == 1 && sieve[p])
        .expect("13 is prime and 1 mod 4") as u64;
    debug_assert!(is_prime(p));
    let nf = n as f64;
    let margin = nf - nf.powf(0.6) / 8.0;
    Ok(PaleyPrime { p, margin, within_margin: p as f64 >= margin })
}

fn sieve_primes(n: usize) -> Vec<bool> {
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
}

/// Outcome of the end-to-end high-energy construction.
#[derive(Clone, Debug)]
pub struct HighEnergyReport {
    pub n: usize,
    pub p: u64,
    pub k: usize,
    pub energy: f64,
    /// `n^{3/2}/2 − n^{13/10}`.
    pub threshold: f64,
    pub exceeds_threshold: bool,
    pub within_margin: bool,
    pub paley_energy: f64,
}

/// Builds a regular graph of order `n` with energy above
/// `n^{3/2}/2 − n^{13/10}`: take the Paley graph on the largest usable
/// prime `p ≤ n` and extend it to order `n`.
pub fn high_energy_regular(n: usize) -> Result<(Graph, HighEnergyReport)> {
    let prime = largest_paley_prime(n)?;
    let gp = paley(prime.p)?;
    let paley_energy = energy(&gp);
    let (g, g_energy) = if prime.p as usize == n {
        (gp, paley_energy)
    } else {
        let (g, rep) = extend_regular(&gp, n)?;
        (g, rep.energy_out)
    };
    let nf = n as f64;
    let threshold = 0.5 * nf.powf(1.5) - nf.powf(1.3);
    let report = HighEnergyReport {
        n,
        p: prime.p,
        k: (prime.p as usize - 1) / 2,
        energy: g_energy,
        threshold,
        exceeds_threshold: g_energy > threshold,
        within_margin: prime.within_margin,
        paley_energy,
    };
    Ok((g, report))
}

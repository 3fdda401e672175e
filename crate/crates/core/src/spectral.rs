//! Graph energy, trace-norm comparisons, and the limiting spectral
//! densities of random regular graphs with their quadrature cross-checks.

use std::f64::consts::PI;

use crate::eigen::{sym_eigenvalues, sym_eigenvalues_uncertified, SymMatrix, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph energy `Σ|λ_i|` — the trace norm of the adjacency matrix.
///
/// Uses the eigenvalues-only solver path; adjacency matrices always
/// converge, so a QL failure here is a solver bug and panics.
pub fn energy(g: &Graph) -> f64 {
    adjacency_eigenvalues(g).iter().map(|v| v.abs()).sum()
}

/// Adjacency eigenvalues in descending order (uncertified path).
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    sym_eigenvalues_uncertified(&SymMatrix::adjacency(g))
        .expect("adjacency eigensolve cannot fail on a valid graph")
}

/// Certified adjacency spectrum with residual certificate.
pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    sym_eigenvalues(&SymMatrix::adjacency(g))
        .expect("adjacency eigensolve cannot fail on a valid graph")
}

/// Trace norm of `A(G) − A(H)`; bounded by `√(2mn)` when the graphs
/// differ in `m` edges.
pub fn trace_norm_diff(g: &Graph, h: &Graph) -> Result<f64> {
    let a = SymMatrix::adjacency(g);
    let b = SymMatrix::adjacency(h);
    let d = a.sub(&b)?;
    Ok(sym_eigenvalues_uncertified(&d)?.iter().map(|v| v.abs()).sum())
}

/// Support half-width `2√(k−1)` of the limiting bulk density for degree `k`.
pub fn mckay_support(k: usize) -> f64 {
    2.0 * ((k - 1) as f64).sqrt()
}

/// Limiting bulk eigenvalue density of random `k`-regular graphs:
/// `k √(4(k−1) − x²) / (2π (k² − x²))` on `|x| ≤ 2√(k−1)`, zero outside.
///
/// For `k = 2` the density has integrable singularities at the endpoints;
/// the exact endpoint evaluates to infinity.
pub fn mckay_density(k: usize, x: f64) -> f64 {
    assert!(k >= 2, "density defined for k >= 2");
    let b = mckay_support(k);
    if x.abs() > b {
        return 0.0;
    }
    if x.abs() == b {
        return if k == 2 { f64::INFINITY } else { 0.0 };
    }
    let kf = k as f64;
    kf * (4.0 * (kf - 1.0) - x * x).sqrt() / (2.0 * PI * (kf * kf - x * x))
}

/// CDF of the density above, computed by adaptive quadrature after the
/// substitution `x = b sin θ`, which removes the endpoint singularities.
pub fn mckay_cdf(k: usize, x: f64) -> f64 {
    assert!(k >= 2, "density defined for k >= 2");
    let b = mckay_support(k);
    if x <= -b {
        return 0.0;
    }
    if x >= b {
        return 1.0;
    }
    let kf = k as f64;
    let km2 = kf - 2.0;
    let theta = (x.abs() / b).asin();
    // ∫_0^{|x|} f dt = (k b² / 2π) ∫_0^θ cos²u / ((k−2)² + b² cos²u) du
    let integrand = |u: f64| {
        let cu = u.cos();
        cu * cu / (km2 * km2 + b * b * cu * cu)
    };
    let half = kf * b * b / (2.0 * PI) * adaptive_simpson(integrand, 0.0, theta, 1e-12);
    if x >= 0.0 {
        0.5 + half
    } else {
        0.5 - half
    }
}

/// Mean absolute eigenvalue of the limiting bulk density, in closed form:
/// `(1/π) (2k√(k−1) − k(k−2) arctan(2√(k−1)/(k−2)))`.
///
/// At `k = 2` the arctan term has a removable limit of zero, handled by an
/// explicit branch; the value there is `4/π`, the energy per vertex of
/// long cycles.
pub fn mckay_energy_const(k: usize) -> f64 {
    assert!(k >= 2, "constant defined for k >= 2");
    let kf = k as f64;
    let root = 2.0 * (kf - 1.0).sqrt();
    if k == 2 {
        4.0 / PI
    } else {
        (2.0 * kf * (kf - 1.0).sqrt() - kf * (kf - 2.0) * (root / (kf - 2.0)).atan()) / PI
    }
}

/// Quadrature route to [`mckay_energy_const`]: `∫ |x| f(x) dx` under the
/// substitution `x = b sin θ`. Independent of the closed form; the two must
/// agree to 1e-8.
pub fn mckay_energy_quadrature(k: usize) -> f64 {
    assert!(k >= 2, "constant defined for k >= 2");
    let kf = k as f64;
    let b = mckay_support(k);
    let km2 = kf - 2.0;
    // 2 ∫_0^b x f dx = (k b³ / π) ∫_0^{π/2} sinθ cos²θ / ((k−2)² + b² cos²θ) dθ
    let integrand = |u: f64| {
        let cu = u.cos();
        u.sin() * cu * cu / (km2 * km2 + b * b * cu * cu)
    };
    kf * b * b * b / PI * adaptive_simpson(integrand, 0.0, PI / 2.0, 1e-12)
}

/// Total mass of the bulk density by quadrature; equals 1 to 1e-6.
pub fn mckay_density_mass(k: usize) -> f64 {
    assert!(k >= 2, "density defined for k >= 2");
    let kf = k as f64;
    let b = mckay_support(k);
    let km2 = kf - 2.0;
    let integrand = |u: f64| {
        let cu = u.cos();
        cu * cu / (km2 * km2 + b * b * cu * cu)
    };
    kf * b * b / PI * adaptive_simpson(integrand, 0.0, PI / 2.0, 1e-12)
}

/// Standard semicircle density `√(4−x²)/(2π)` on `[−2, 2]`.
pub fn semicircle_density(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        0.0
    } else {
        (4.0 - x * x).sqrt() / (2.0 * PI)
    }
}

/// CDF of the standard semicircle distribution.
pub fn semicircle_cdf(x: f64) -> f64 {
    if x <= -2.0 {
        return 0.0;
    }
    if x >= 2.0 {
        return 1.0;
    }
    0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (x / 2.0).asin() / PI
}

/// Centered, variance-normalized adjacency of a `k`-regular graph:
/// `n^{-1/2} (A − (k/n) J) / √((k/n)(1 − k/n))`. Its empirical spectral
/// distribution approaches the semicircle as the degree grows.
pub fn semicircle_normalize(g: &Graph) -> Result<SymMatrix> {
    let n = g.order();
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    if k == 0 || k >= n {
        return Err(Error::DegreeRange { n, k });
    }
    let nf = n as f64;
    let kf = k as f64;
    let scale = 1.0 / (nf.sqrt() * (kf / nf * (1.0 - kf / nf)).sqrt());
    let shift = kf / nf;
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let a = if i != j && g.has_edge(i, j) { 1.0 } else { 0.0 };
            if j >= i {
                m.set_sym(i, j, scale * (a - shift));
            }
        }
    }
    Ok(m)
}

/// Applies the centering/normalization of [`semicircle_normalize`] to an
/// already-computed adjacency spectrum (descending): one copy of the top
/// eigenvalue collapses to 0 and everything else scales by
/// `1/√(k(n−k)/n)`. Exact because the all-ones vector is an adjacency
/// eigenvector of a regular graph.
pub fn semicircle_transform(n: usize, k: usize, vals: &[f64]) -> Vec<f64> {
    assert!(k >= 1 && k < n, "transform defined for 1 <= k < n");
    let scale = 1.0 / ((k * (n - k)) as f64 / n as f64).sqrt();
    let mut out = Vec::with_capacity(n);
    out.push(0.0);
    out.extend(vals[1..].iter().map(|v| v * scale));
    out.sort_by(|a, b| b.partial_cmp(a).unwrap());
    out
}

/// The eigenvalues of [`semicircle_normalize`] without forming the matrix.
pub fn semicircle_normalized_values(g: &Graph) -> Result<Vec<f64>> {
    let n = g.order();
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    if k == 0 || k >= n {
        return Err(Error::DegreeRange { n, k });
    }
    Ok(semicircle_transform(n, k, &adjacency_eigenvalues(g)))
}

/// Histogram over eigenvalue samples. Out-of-range samples are clamped
/// into the boundary bins so the counts always sum to the sample count.
#[derive(Clone, Debug)]
pub struct EsdHistogram {
    edges: Vec<f64>,
    counts: Vec<u64>,
    n_total: u64,
}

impl EsdHistogram {
    /// Uniform bins over `[lo, hi]`.
    pub fn new(lo: f64, hi: f64, bins: usize) -> EsdHistogram {
        assert!(bins >= 1 && lo < hi, "need at least one bin and lo < hi");
        let width = (hi - lo) / bins as f64;
        let edges = (0..=bins).map(|i| lo + i as f64 * width).collect();
        EsdHistogram { edges, counts: vec![0; bins], n_total: 0 }
    }

    pub fn add(&mut self, x: f64) {
        let bins = self.counts.len();
        let lo = self.edges[0];
        let hi = *self.edges.last().unwrap();
        let idx = if x < lo {
            0
        } else if x >= hi {
            bins - 1
        } else {
            let raw = ((x - lo) / (hi - lo) * bins as f64) as usize;
            raw.min(bins - 1)
        };
        self.counts[idx] += 1;
        self.n_total += 1;
    }

    pub fn add_all<I: IntoIterator<Item = f64>>(&mut self, xs: I) {
        for x in xs {
            self.add(x);
        }
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n_total(&self) -> u64 {
        self.n_total
    }
}

/// Kolmogorov–Smirnov distance between the histogram's empirical CDF and a
/// reference CDF, evaluated at the bin edges. Always in `[0, 1]`.
pub fn ks_distance(hist: &EsdHistogram, cdf: impl Fn(f64) -> f64) -> Result<f64> {
    if hist.n_total == 0 {
        return Err(Error::EmptyHistogram);
    }
    let total = hist.n_total as f64;
    let mut cum = 0u64;
    let mut d = (cdf(hist.edges[0])).abs();
    for (i, &c) in hist.counts.iter().enumerate() {
        cum += c;
        let at = hist.edges[i + 1];
        d = d.max((cum as f64 / total - cdf(at)).abs());
    }
    Ok(d)
}

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    simpson_step(&f, a, b, fa, fm, fb, simpson_rule(a, b, fa, fm, fb), tol, 50)
}

fn simpson_rule(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_rule(a, m, fa, flm, fm);
    let right = simpson_rule(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

//! Closed-form energy bounds, conjectured targets, and a uniform report
//! comparing a graph's energy against everything applicable.

use std::f64::consts::PI;

use serde::Serialize;

use crate::graph::Graph;
use crate::spectral::{adjacency_spectrum, mckay_energy_const};

/// Slack added to every bound comparison on top of eigensolver accuracy.
pub const BOUND_SLACK: f64 = 1e-8;

/// Koolen–Moulton bound `k + √(k(n−k)(n−1))` on the energy of a
/// `k`-regular graph of order `n`. Attained exactly by complete graphs,
/// perfect matchings, and design graphs.
pub fn km_bound(n: usize, k: usize) -> f64 {
    assert!(k >= 1 && k < n, "bound defined for 1 <= k < n");
    let (nf, kf) = (n as f64, k as f64);
    kf + (kf * (nf - kf) * (nf - 1.0)).sqrt()
}

/// van Dam–Haemers–Koolen bound `(√(k−1) + 1/(k+√(k−1))) n`, valid for
/// `k ≥ 2` and `n ≥ k²−k+1`, where it improves on [`km_bound`]. Attained
/// exactly by disjoint unions of projective-plane incidence graphs, and at
/// `k = 2` by unions of triangles and hexagons.
#[allow(clippy::int_plus_one)] // n >= k^2 - k + 1 is the bound's stated domain
pub fn dhk_bound(n: usize, k: usize) -> f64 {
    assert!(k >= 2, "bound defined for k >= 2");
    assert!(n >= k * k - k + 1, "bound requires n >= k^2 - k + 1");
    let (nf, kf) = (n as f64, k as f64);
    ((kf - 1.0).sqrt() + 1.0 / (kf + (kf - 1.0).sqrt())) * nf
}

/// Energy gap between a graph and its complement, with the three bounds it
/// must satisfy: `|gap| ≤ 2n−2` with equality only for complete/empty, and
/// the sharper one-sided top-eigenvalue bounds.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComplementGap {
    /// `energy(G) − energy(complement)`.
    pub gap: f64,
    /// `2n − 2`.
    pub bound_order: f64,
    /// `2 λ₁(G)` — bounds `gap` from above.
    pub bound_top: f64,
    /// `2 λ₁(complement)` — bounds `−gap` from above.
    pub bound_top_complement: f64,
    pub within_order_bound: bool,
    pub within_top_bounds: bool,
    /// `|gap| = 2n−2` up to slack.
    pub order_bound_tight: bool,
}

pub fn complement_gap_bounds(g: &Graph) -> ComplementGap {
    let n = g.order() as f64;
    let co = g.complement();
    let sg = adjacency_spectrum(g);
    let sc = adjacency_spectrum(&co);
    let gap = sg.energy() - sc.energy();
    let bound_order = 2.0 * n - 2.0;
    let bound_top = 2.0 * sg.top();
    let bound_top_complement = 2.0 * sc.top();
    ComplementGap {
        gap,
        bound_order,
        bound_top,
        bound_top_complement,
        within_order_bound: gap.abs() <= bound_order + BOUND_SLACK,
        within_top_bounds: gap <= bound_top + BOUND_SLACK && -gap <= bound_top_complement + BOUND_SLACK,
        order_bound_tight: (gap.abs() - bound_order).abs() <= BOUND_SLACK,
    }
}

/// The three conjectured lower-bound targets. These are reporting values
/// only and are never asserted as bounds.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConjectureTargets {
    /// `√k · n` (slowly growing degree regime); needs a regular graph.
    pub sparse_target: Option<f64>,
    /// `√(k(n−k)n)` (dense regime); needs `n > k > √n`.
    pub dense_target: Option<f64>,
    /// `√(c(1−c)) n^{3/2}` with density `c = 2m/n²`; needs `0 < c ≤ 1/2`.
    pub density_target: Option<f64>,
    /// `c = 2m/n²` — the "at most c n²/2 edges" density.
    pub density: f64,
}

/// Evaluates the conjecture targets for order `n`, `m` edges and, when the
/// graph is regular, degree `k`. Out-of-domain targets come back `None`.
pub fn conjecture_targets(n: usize, k: Option<usize>, m: usize) -> ConjectureTargets {
    let nf = n as f64;
    let density = 2.0 * m as f64 / (nf * nf);
    let sparse_target = k.filter(|&k| k >= 1).map(|k| (k as f64).sqrt() * nf);
    let dense_target = k
        .filter(|&k| k < n && (k * k) > n)
        .map(|k| ((k * (n - k)) as f64 * nf).sqrt());
    let density_target = (density > 0.0 && density <= 0.5)
        .then(|| (density * (1.0 - density)).sqrt() * nf.powf(1.5));
    ConjectureTargets { sparse_target, dense_target, density_target, density }
}

/// Expected energies of random `k`-regular graphs in both degree regimes,
/// plus how the growing-degree value compares to the maximum possible.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RandomRegularExpectation {
    /// `n · (mean |λ| of the fixed-degree limiting density)`.
    pub fixed_degree: f64,
    /// `(8/3π) √(k(n−k)n)` — the growing-degree value.
    pub growing_degree: f64,
    /// `growing_degree / km_bound(n,k)`; exceeds 0.84 for large n, k.
    pub km_fraction: f64,
}

pub fn random_regular_expectations(n: usize, k: usize) -> RandomRegularExpectation {
    assert!(k >= 2 && k < n, "expectations defined for 2 <= k < n");
    let fixed_degree = n as f64 * mckay_energy_const(k);
    let growing_degree = 8.0 / (3.0 * PI) * ((k * (n - k)) as f64 * n as f64).sqrt();
    RandomRegularExpectation {
        fixed_degree,
        growing_degree,
        km_fraction: growing_degree / km_bound(n, k),
    }
}

/// Full energy report for one graph: the measured energy next to every
/// applicable bound, target and expectation, each with its ratio.
/// Serializes to JSON with stable field names (`schema` = 1) and to a flat
/// CSV row.
#[derive(Clone, Debug, Serialize)]
pub struct EnergyReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub energy: f64,
    /// Eigensolver residual certificate.
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub km_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub km_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dhk_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dhk_ratio: Option<f64>,
    pub density: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_sparse: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_sparse_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_dense: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_dense_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_density: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_density_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mckay_expected: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mckay_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semicircle_expected: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semicircle_ratio: Option<f64>,
}

#[allow(clippy::int_plus_one)] // same stated domain as dhk_bound
pub fn energy_report(g: &Graph) -> EnergyReport {
    let n = g.order();
    let m = g.size();
    let k = g.regular_degree();
    let spectrum = adjacency_spectrum(g);
    let energy = spectrum.energy();
    let ratio = |bound: f64| if bound == 0.0 { None } else { Some(energy / bound) };

    let km = k.filter(|&k| k >= 1 && k < n).map(|k| km_bound(n, k));
    let dhk = k
        .filter(|&k| k >= 2 && n >= k * k - k + 1)
        .map(|k| dhk_bound(n, k));
    let targets = conjecture_targets(n, k, m);
    let expect = k
        .filter(|&k| k >= 2 && k < n)
        .map(|k| random_regular_expectations(n, k));

    EnergyReport {
        schema: 1,
        n,
        m,
        k,
        energy,
        residual: spectrum.residual(),
        km_bound: km,
        km_ratio: km.and_then(ratio),
        dhk_bound: dhk,
        dhk_ratio: dhk.and_then(ratio),
        density: targets.density,
        conjecture_sparse: targets.sparse_target,
        conjecture_sparse_ratio: targets.sparse_target.and_then(ratio),
        conjecture_dense: targets.dense_target,
        conjecture_dense_ratio: targets.dense_target.and_then(ratio),
        conjecture_density: targets.density_target,
        conjecture_density_ratio: targets.density_target.and_then(ratio),
        mckay_expected: expect.map(|e| e.fixed_degree),
        mckay_ratio: expect.map(|e| e.fixed_degree).and_then(ratio),
        semicircle_expected: expect.map(|e| e.growing_degree),
        semicircle_ratio: expect.map(|e| e.growing_degree).and_then(ratio),
    }
}

impl EnergyReport {
    pub const CSV_HEADER: &'static str = "schema,n,m,k,energy,residual,km_bound,km_ratio,dhk_bound,dhk_ratio,density,conjecture_sparse,conjecture_dense,conjecture_density,mckay_expected,semicircle_expected";

    pub fn csv_row(&self) -> String {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema,
            self.n,
            self.m,
            opt(&self.k),
            self.energy,
            self.residual,
            opt(&self.km_bound),
            opt(&self.km_ratio),
            opt(&self.dhk_bound),
            opt(&self.dhk_ratio),
            self.density,
            opt(&self.conjecture_sparse),
            opt(&self.conjecture_dense),
            opt(&self.conjecture_density),
            opt(&self.mckay_expected),
            opt(&self.semicircle_expected),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, paley};
    use crate::graph::Graph;

    #[test]
    fn km_bound_values() {
        assert!((km_bound(15, 8) - 36.0).abs() < 1e-12);
        assert!((km_bound(5, 4) - 8.0).abs() < 1e-12);
        assert!((km_bound(10, 1) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn dhk_bound_values() {
        assert!((dhk_bound(6, 2) - 8.0).abs() < 1e-12);
        let heawood = dhk_bound(14, 3);
        assert!((heawood - (6.0 + 12.0 * 2f64.sqrt())).abs() < 1e-9);
        // at the threshold order the two bounds coincide
        assert!((km_bound(7, 3) - dhk_bound(7, 3)).abs() < 1e-6);
    }

    #[test]
    fn km_improves_on_dhk_above_threshold() {
        for k in 2..=12usize {
            for n in (k * k - k + 2)..=500 {
                assert!(
                    km_bound(n, k) > dhk_bound(n, k),
                    "km should exceed dhk for n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn complement_gap_complete_and_empty() {
        let gap = complement_gap_bounds(&complete(5));
        assert!((gap.gap - 8.0).abs() < 1e-10);
        assert!(gap.order_bound_tight && gap.within_order_bound && gap.within_top_bounds);

        let gap = complement_gap_bounds(&Graph::empty(5));
        assert!((gap.gap + 8.0).abs() < 1e-10);
        assert!(gap.order_bound_tight);

        let gap = complement_gap_bounds(&cycle(5).unwrap());
        assert!(gap.gap.abs() < 1e-10, "C_5 is self-complementary");
        assert!(!gap.order_bound_tight);
    }

    #[test]
    fn conjecture_target_values() {
        let t = conjecture_targets(15, Some(8), 60);
        assert!((t.dense_target.unwrap() - (8.0f64 * 7.0 * 15.0).sqrt()).abs() < 1e-12);
        let t = conjecture_targets(100, None, 2500);
        assert!((t.density_target.unwrap() - 500.0).abs() < 1e-9);
        assert_eq!(t.sparse_target, None);
        let t = conjecture_targets(96, Some(20), 960);
        assert!((t.sparse_target.unwrap() - 20f64.sqrt() * 96.0).abs() < 1e-9);
        // k = 20 < sqrt(96)? no: 20^2 = 400 > 96, so dense target applies
        assert!(t.dense_target.is_some());
    }

    #[test]
    fn expectation_values() {
        let e = random_regular_expectations(1000, 2);
        assert!((e.fixed_degree - 1000.0 * 4.0 / PI).abs() < 1e-9);
        let e = random_regular_expectations(1000, 32);
        let expect = 8.0 / (3.0 * PI) * (32.0f64 * 968.0 * 1000.0).sqrt();
        assert!((e.growing_degree - expect).abs() < 1e-9);
        // the 84% behaviour at scale
        let e = random_regular_expectations(10_000, 100);
        assert!(e.km_fraction > 0.84);
    }

    #[test]
    fn energy_report_fields() {
        let rep = energy_report(&complete(4));
        assert_eq!(rep.k, Some(3));
        assert!((rep.energy - 6.0).abs() < 1e-10);
        assert!((rep.km_ratio.unwrap() - 1.0).abs() < 1e-10);
        assert!(rep.dhk_bound.is_none(), "n=4 < k^2-k+1=7");

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let rep = energy_report(&p3);
        assert_eq!(rep.k, None);
        assert!(rep.km_bound.is_none() && rep.dhk_bound.is_none());
        assert!((rep.energy - 2.0 * 2f64.sqrt()).abs() < 1e-10);

        let rep = energy_report(&paley(13).unwrap());
        assert!((rep.km_ratio.unwrap() - (6.0 + 6.0 * 13f64.sqrt()) / km_bound(13, 6)).abs() < 1e-12);

        // AS(4): energy 400 against the sparse conjecture target sqrt(20)*96
        let rep = energy_report(&crate::constructors::ahrens_szekeres(4).unwrap());
        assert!((rep.energy - 400.0).abs() < 1e-8);
        assert!((rep.conjecture_sparse_ratio.unwrap() - 0.9317).abs() < 1e-3);
    }

    #[test]
    fn energy_report_json_schema() {
        let rep = energy_report(&complete(4));
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["schema"], 1);
        for key in ["n", "m", "k", "energy", "km_bound", "km_ratio", "density"] {
            assert!(json.get(key).is_some(), "missing field {key}");
        }
        // irregular graphs omit the regular-only fields entirely
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let json = serde_json::to_value(energy_report(&p3)).unwrap();
        assert!(json.get("k").is_none());
        assert!(json.get("km_bound").is_none());
        let row = energy_report(&complete(4)).csv_row();
        assert_eq!(row.split(',').count(), EnergyReport::CSV_HEADER.split(',').count());
    }
}

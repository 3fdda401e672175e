//! Property tests for the structural invariants: codec round-trips,
//! complement identities, metric axioms, field axioms, and spectrum sums.

use proptest::prelude::*;

use energylab_core::algebra::FiniteField;
use energylab_core::eigen::{sym_eigenvalues, SymMatrix};
use energylab_core::graph::Graph;
use energylab_core::graph6::{graph6_decode, graph6_encode};
use energylab_core::spectral::energy;

/// Random graph of order 1..=max_n from a bit vector over the pair slots.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[idx] {
                        g.add_edge(u, v);
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let enc = graph6_encode(&g);
        prop_assert!(enc.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6_decode(&enc).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_long_header(g in arb_graph(80)) {
        // orders above 62 switch to the 4-byte header
        let padded = g.add_isolated(70);
        let enc = graph6_encode(&padded);
        prop_assert_eq!(graph6_decode(&enc).unwrap(), padded);
    }

    #[test]
    fn complement_involution_and_size(g in arb_graph(48)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn deviation_zero_iff_degree_spread_zero(g in arb_graph(32)) {
        let s = g.degree_deviation();
        let spread_zero = g.max_degree() == g.min_degree();
        prop_assert_eq!(*s.numer() == 0, spread_zero);
        prop_assert!(*s.numer() >= 0);
    }

    #[test]
    fn edit_distance_is_a_metric(
        (g, h, f) in (2usize..24).prop_flat_map(|n| (arb_fixed(n), arb_fixed(n), arb_fixed(n)))
    ) {
        let gh = g.edit_distance(&h).unwrap();
        let hg = h.edit_distance(&g).unwrap();
        prop_assert_eq!(gh, hg);
        prop_assert_eq!(g.edit_distance(&g).unwrap(), 0);
        prop_assert_eq!(gh == 0, g == h);
        let gf = g.edit_distance(&f).unwrap();
        let fh = f.edit_distance(&h).unwrap();
        prop_assert!(gh <= gf + fh, "triangle inequality: {gh} > {gf} + {fh}");
    }

    #[test]
    fn energy_additive_over_union(g in arb_graph(16), h in arb_graph(16)) {
        let u = g.disjoint_union(&h);
        let sum = energy(&g) + energy(&h);
        prop_assert!((energy(&u) - sum).abs() < 1e-8);
    }

    #[test]
    fn spectrum_sums_match_trace_and_size(g in arb_graph(32)) {
        let s = sym_eigenvalues(&SymMatrix::adjacency(&g)).unwrap();
        let n = g.order() as f64;
        let sum: f64 = s.values().iter().sum();
        let sum_sq: f64 = s.values().iter().map(|v| v * v).sum();
        prop_assert!(sum.abs() <= n * 1e-10, "trace drift {sum}");
        prop_assert!((sum_sq - 2.0 * g.size() as f64).abs() <= n * 1e-10);
        // descending order
        for w in s.values().windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }
}

/// Fixed-order random graph (for the metric test's equal-order triples).
fn arb_fixed(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    g.add_edge(u, v);
                }
                idx += 1;
            }
        }
        g
    })
}

fn small_fields() -> Vec<FiniteField> {
    [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)]
        .iter()
        .map(|&(p, e)| FiniteField::new(p, e).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..6, a in 0u64..512, b in 0u64..512, c in 0u64..512) {
        let field = &small_fields()[which];
        let q = field.order();
        let (a, b, c) = (field.element(a % q), field.element(b % q), field.element(c % q));
        // associativity and commutativity
        prop_assert_eq!(field.add(&field.add(&a, &b), &c), field.add(&a, &field.add(&b, &c)));
        prop_assert_eq!(field.mul(&field.mul(&a, &b), &c), field.mul(&a, &field.mul(&b, &c)));
        prop_assert_eq!(field.mul(&a, &b), field.mul(&b, &a));
        // distributivity
        prop_assert_eq!(
            field.mul(&a, &field.add(&b, &c)),
            field.add(&field.mul(&a, &b), &field.mul(&a, &c))
        );
        // identities and inverses
        prop_assert_eq!(field.add(&a, &field.zero()), a.clone());
        prop_assert_eq!(field.mul(&a, &field.one()), a.clone());
        prop_assert!(field.add(&a, &field.neg(&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(field.mul(&a, &field.inv(&a)), field.one());
        }
    }

    #[test]
    fn frobenius_endomorphism(which in 0usize..6, a in 0u64..512, b in 0u64..512) {
        let field = &small_fields()[which];
        let q = field.order();
        let p = field.characteristic();
        let (a, b) = (field.element(a % q), field.element(b % q));
        let lhs = field.pow(&field.add(&a, &b), p);
        let rhs = field.add(&field.pow(&a, p), &field.pow(&b, p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symplectic_antisymmetry(
        which in 0usize..6,
        u in prop::collection::vec(0u64..512, 4),
        v in prop::collection::vec(0u64..512, 4),
    ) {
        let field = &small_fields()[which];
        let q = field.order();
        let u: Vec<_> = u.iter().map(|&i| field.element(i % q)).collect();
        let v: Vec<_> = v.iter().map(|&i| field.element(i % q)).collect();
        let fwd = field.symplectic_form(&u, &v).unwrap();
        let rev = field.symplectic_form(&v, &u).unwrap();
        prop_assert_eq!(fwd, field.neg(&rev));
        prop_assert!(field.symplectic_form(&u, &u).unwrap().is_zero());
    }
}

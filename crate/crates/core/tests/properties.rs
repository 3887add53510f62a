mod common;

use common::*;
use cyclograph_core::arith::{is_power_of, prime_divisors};
use cyclograph_core::field::make_field;
use cyclograph_core::formulas::{m_p, m_p_star};
use cyclograph_core::graphs::{cyclic_adjacent, delta_components, gamma_components, CyclicGraph};
use cyclograph_core::group::{enumerate, Limits};
use cyclograph_core::structure::{detect_frobenius, detect_two_frobenius};
use cyclograph_core::{EnumeratedGroup, Permutation, Subgroup, UnionFind};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// One to three random generators on 4 to 6 points.
fn small_group() -> impl Strategy<Value = EnumeratedGroup> {
    (4usize..=6)
        .prop_flat_map(|n| prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| (n, gens)))
        .prop_map(|(n, gens)| enumerate(n, &gens, Limits::default()).unwrap())
}

/// Every normal subgroup, built as joins of normal closures of single elements.
fn normal_subgroups(g: &EnumeratedGroup) -> Vec<Subgroup<'_>> {
    let mut found: Vec<Subgroup<'_>> = vec![g.subgroup(&[])];
    let mut frontier = found.clone();
    let atoms: Vec<Subgroup<'_>> = (1..g.order()).map(|x| g.normal_closure(&[x])).collect();
    while let Some(n) = frontier.pop() {
        for a in &atoms {
            let mut seeds = n.generators().to_vec();
            seeds.extend_from_slice(a.generators());
            let join = g.subgroup(&seeds);
            if !found.iter().any(|f| f.members() == join.members()) {
                found.push(join.clone());
                frontier.push(join);
            }
        }
    }
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_and_associativity(p in perm(7), q in perm(7), r in perm(7)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(p.pow(p.order()).is_identity());
        let product = p.compose(&q).unwrap();
        for i in 0..7u32 {
            prop_assert_eq!(product.apply(i), q.apply(p.apply(i)));
        }
    }

    #[test]
    fn lagrange_and_class_equation(g in small_group()) {
        let n = g.order() as u64;
        let factorial: u64 = (1..=g.degree() as u64).product();
        prop_assert_eq!(factorial % n, 0);
        for x in 0..g.order() {
            prop_assert_eq!(n % g.element_order(x), 0);
        }
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.iter().map(|c| c.len() as u64).sum::<u64>(), n);
        for c in &classes {
            prop_assert_eq!(c.len() as u64 * g.centralizer_order(c[0]), n);
        }
    }

    #[test]
    fn coset_action_has_index_order(g in small_group()) {
        let f = g.fitting();
        prop_assert!(g.is_normal(&f));
        let action = g.coset_action(&f).unwrap();
        prop_assert_eq!(action.image().order() * f.order(), g.order());
        let mut buf = vec![0; g.degree()];
        for x in 0..g.order().min(40) {
            for y in 0..g.order().min(40) {
                let xy = g.product_with(x, y, &mut buf);
                let img = action.image();
                prop_assert_eq!(action.project(xy), img.product(action.project(x), action.project(y)));
            }
        }
    }

    #[test]
    fn p_cores_match_normal_subgroup_oracle(g in small_group()) {
        prop_assume!(g.order() <= 500);
        let normals = normal_subgroups(&g);
        for p in prime_divisors(g.order() as u64) {
            let want = normals.iter().filter(|s| s.is_p_group(p)).map(|s| s.order()).max().unwrap();
            prop_assert_eq!(g.p_core(p).unwrap().order(), want);
        }
    }

    #[test]
    fn frobenius_detection_matches_oracle(g in small_group()) {
        prop_assume!(g.order() <= 200);
        let normals = normal_subgroups(&g);
        let oracle = normals.iter().find(|k| {
            !k.is_trivial() && !k.is_whole()
                && k.members()[1..].iter().all(|&x| g.centralizer(x).is_subset_of(k))
        });
        let found = detect_frobenius(&g);
        prop_assert_eq!(found.as_ref().map(|d| d.kernel.order()), oracle.map(|k| k.order()));
    }

    #[test]
    fn union_find_matches_pairwise_adjacency(g in small_group()) {
        prop_assume!(g.order() <= 200);
        let n = g.order();
        let mut uf = UnionFind::new(n - 1);
        for x in 1..n {
            for y in x + 1..n {
                if cyclic_adjacent(&g, x, y).unwrap() {
                    uf.union(x - 1, y - 1);
                }
            }
        }
        let report = delta_components(&g);
        prop_assert_eq!(report.component_count, uf.component_count() as u64);
        prop_assert_eq!(report.component_sizes.unwrap(), uf.component_sizes());
    }

    #[test]
    fn m_p_star_never_exceeds_m_p(g in small_group()) {
        for p in prime_divisors(g.order() as u64) {
            prop_assert!(m_p_star(&g, p).unwrap() <= m_p(&g, p).unwrap());
        }
    }

    #[test]
    fn affine_action_matches_pair_composition(a in 0u64..7, j in 0u64..3, b in 0u64..7, k in 0u64..3, v in 1u64..64) {
        let spec = affine(&[(2, 6)], 7, 3).spec();
        let point = spec.point(v);
        let (c, l) = spec.compose_pairs((a, j), (b, k));
        prop_assert_eq!(spec.act(b, k, &spec.act(a, j, &point)), spec.act(c, l, &point));
    }
}

#[test]
fn p_groups_have_m_p_components() {
    for (fx, p) in p_groups() {
        let g = fx.group();
        assert!(is_power_of(g.order() as u64, p), "{}", fx.name);
        assert_eq!(delta_components(&g).component_count, m_p(&g, p).unwrap(), "{}", fx.name);
    }
}

#[test]
fn nilpotent_mixed_groups_are_connected() {
    for fx in nilpotent_mixed() {
        let g = fx.group();
        assert_eq!(g.fitting().order(), g.order(), "{} should be nilpotent", fx.name);
        assert_eq!(delta_components(&g).component_count, 1, "{}", fx.name);
    }
}

#[test]
fn frobenius_complement_cyclic_graph_diameter() {
    // Q8 and cyclic groups are Frobenius complements
    let (qi, qj) = quaternion_generators();
    let q8 = enumerate(8, &[qi, qj], Limits::default()).unwrap();
    let z15 = enumerate(15, &[cyclic(15)], Limits::default()).unwrap();
    for g in [&q8, &z15] {
        let graph = CyclicGraph::new(g);
        for x in 1..g.order() {
            for y in 1..g.order() {
                let d = graph.distance(x, y).unwrap().expect("connected");
                assert!(d <= 2);
            }
        }
    }
}

#[test]
fn two_frobenius_fixtures_follow_the_gamma_law() {
    let mut groups = vec![s4().group()];
    groups.extend(small_two_frobenius().iter().map(|c| enumerate_affine(&c.spec())));
    for g in &groups {
        let dec = detect_two_frobenius(g).unwrap().expect("2-Frobenius");
        if let Ok(gamma) = gamma_components(g, 20_000_000) {
            assert_eq!(gamma.component_count, dec.k_order() + 1);
        }
    }
}

#[test]
fn non_frobenius_groups_are_not_detected() {
    for fx in other_groups().into_iter().chain(nilpotent_mixed()) {
        let g = fx.group();
        assert!(detect_frobenius(&g).is_none(), "{}", fx.name);
        assert!(detect_two_frobenius(&g).unwrap().is_none(), "{}", fx.name);
    }
}

#[test]
fn zeta_is_fixed_point_free_and_frobenius_has_order_n() {
    for case in structured_sweep() {
        let spec = case.spec();
        for idx in 1..spec.k_order() {
            let v = spec.point(idx);
            assert_ne!(spec.act(1, 0, &v), v);
        }
    }
    for (p, n) in [(2u64, 5u32), (3, 4), (5, 2), (7, 3)] {
        let f = make_field(p, n).unwrap();
        for x in 0..f.order() {
            assert_eq!(f.frobenius_power(x, n), x);
        }
        let moved = (0..f.order()).filter(|&x| f.frobenius(x) != x).count() as u64;
        assert_eq!(moved, f.order() - p);
    }
}

use std::collections::BTreeSet;

use divcat_core::incidence::mobius_via_lattice;
use divcat_core::monoid::{MonoidTable, Partition};
use divcat_core::pbij::{all_partial_bijections, order_preserving_partial_bijections};
use divcat_core::verify::{self, Status, VerifyConfig};
use divcat_core::{
    build_cn, build_reduced, build_standard, enumerate_io, enumerate_symmetric, FiniteCategory, IncidenceAlgebra,
    PartialBijection, Rational,
};
use proptest::prelude::*;

fn labels(m: &divcat_core::FiniteInverseMonoid, xs: &[usize]) -> BTreeSet<String> {
    xs.iter().map(|&x| m.label(x).to_owned()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn monoid_sizes() {
    assert_eq!(enumerate_io(1).unwrap().len(), 2);
    assert_eq!(enumerate_io(4).unwrap().len(), 70);
    assert_eq!(enumerate_symmetric(1).unwrap().len(), 2);
    // Σ C(4,k)² k!
    assert_eq!(enumerate_symmetric(4).unwrap().len(), 1 + 16 + 36 * 2 + 16 * 6 + 24);
}

#[test]
fn bracket_text_round_trips_on_io4_and_symmetric3() {
    for f in order_preserving_partial_bijections(4).unwrap().into_iter().chain(all_partial_bijections(3).unwrap()) {
        let text = f.to_bracket().unwrap();
        assert_eq!(PartialBijection::parse(&text, f.n()).unwrap(), f, "{text}");
    }
}

#[test]
fn canonical_text_is_a_fixed_point() {
    for text in ["[13][2]", "[21]", "[123]", "0", "i", "[1][2]"] {
        assert_eq!(PartialBijection::parse(text, 3).unwrap().to_bracket().unwrap(), text);
    }
    // any group order parses to the same element
    assert_eq!(PartialBijection::parse("[2][13]", 3).unwrap().to_bracket().unwrap(), "[13][2]");
}

#[test]
fn idempotent_d_classes_of_io3() {
    let m = enumerate_io(3).unwrap();
    let classes: BTreeSet<BTreeSet<String>> = m.idempotent_d_classes().iter().map(|c| labels(&m, c)).collect();
    let want: BTreeSet<BTreeSet<String>> =
        [set(&["0"]), set(&["[1]", "[2]", "[3]"]), set(&["[1][2]", "[1][3]", "[2][3]"]), set(&["i"])].into();
    assert_eq!(classes, want);
    let g = m.green();
    let (one, two, s) = (m.find("[1]").unwrap(), m.find("[2]").unwrap(), m.find("[12]").unwrap());
    assert!(g.d.related(one, two));
    assert_eq!((m.source_idempotent(s), m.target_idempotent(s)), (two, one));
}

#[test]
fn local_idempotents_below_one() {
    let m = enumerate_io(3).unwrap();
    let local = m.local_idempotents(m.find("[1]").unwrap()).unwrap();
    assert_eq!(labels(&m, local.members()), set(&["0", "[1][2]", "[1][3]", "[1]"]));
    assert_eq!(m.local_idempotents(m.identity()).unwrap().members(), m.idempotents());
}

#[test]
fn poset_mobius_on_the_cube() {
    let m = enumerate_io(3).unwrap();
    let p = m.idempotent_poset();
    let (zero, top, e) = (m.find("0").unwrap(), m.identity(), m.find("[1][2]").unwrap());
    assert_eq!(p.mobius(zero, top).unwrap(), -1);
    assert_eq!(p.mobius(e, top).unwrap(), 1);
    assert_eq!(p.mobius(e, e).unwrap(), 1);
    assert!(p.mobius(top, e).is_err());
}

#[test]
fn standard_category_of_io3() {
    let m = enumerate_io(3).unwrap();
    let c = build_standard(&m);
    assert_eq!(c.category().object_count(), 8);
    c.category().check_axioms().unwrap();
    let one = c.object_of(m.identity()).unwrap();
    assert!(c.category().quasi_initial_objects().contains(&one));
    for &x in c.category().identities() {
        let (s, e) = c.pair(x);
        assert_eq!(s, e);
    }
}

#[test]
fn natural_order_and_green_definitions_agree() {
    for m in [enumerate_io(4).unwrap(), enumerate_symmetric(3).unwrap()] {
        for a in 0..m.len() {
            for b in 0..m.len() {
                let c = m.natural_leq_conditions(a, b);
                assert!(c.iter().all(|&x| x == c[0]), "{} vs {}: {c:?}", m.label(a), m.label(b));
            }
        }
        let (r, l) = m.table().green_by_ideals();
        let g = m.green();
        assert_eq!((r, l), (g.r.clone(), g.l.clone()));
        assert!(g.d_is_r_then_l());
    }
}

#[test]
fn symmetric_idempotents_are_subsets() {
    for n in 1..=4 {
        let m = enumerate_symmetric(n).unwrap();
        // 1_A ↔ A, product ↔ intersection
        for &e in m.idempotents() {
            for &f in m.idempotents() {
                let meet: BTreeSet<usize> = m.element(e).domain().into_iter().filter(|x| m.element(f).domain().contains(x)).collect();
                let got: BTreeSet<usize> = m.element(m.mul(e, f)).domain().into_iter().collect();
                assert_eq!(got, meet);
            }
        }
        assert_eq!(m.idempotents().len(), 1 << n);
    }
}

#[test]
fn non_inverse_monoid_is_rejected() {
    // full transformation monoid on {1,2}: id, swap, const1, const2
    let product = vec![
        0, 1, 2, 3, //
        1, 0, 3, 2, //
        2, 2, 2, 2, //
        3, 3, 3, 3,
    ];
    let t = MonoidTable::new(4, product, 0).unwrap();
    assert!(!divcat_core::monoid::verify_inverse_monoid(&t).unique_inverses);
}

#[test]
fn reduced_categories_have_binomial_hom_sets_and_special_mobius() {
    for n in 1..=5 {
        let m = enumerate_io(n).unwrap();
        let c = build_reduced(&m, &m.choose_transversal()).unwrap();
        let cat = c.category();
        let ranks: Vec<usize> = c.object_idempotents().iter().map(|&e| m.rank(e)).collect();
        for a in 0..cat.object_count() {
            for b in 0..cat.object_count() {
                let (i, j) = (ranks[a], ranks[b]);
                let expected = if j <= i { (0..j).fold(1, |acc, t| acc * (i - t) / (t + 1)) } else { 0 };
                assert_eq!(cat.hom(a, b).len(), expected);
            }
        }
        let alg = IncidenceAlgebra::new(cat);
        assert!(alg.is_special_mobius().unwrap(), "C_F(IO_{n})");
        if n <= 4 {
            let mu = alg.mobius().unwrap().to_integers().unwrap();
            for (x, &v) in mu.iter().enumerate() {
                assert_eq!(mobius_via_lattice(&m, &c, x).unwrap(), v);
            }
        }
    }
}

#[test]
fn zeta_squared_counts_factorizations() {
    let m = enumerate_io(3).unwrap();
    let c = build_reduced(&m, &m.choose_transversal()).unwrap();
    let alg = IncidenceAlgebra::new(c.category());
    let z2 = alg.convolve(&alg.zeta(), &alg.zeta()).unwrap();
    for x in 0..c.category().morphism_count() {
        assert_eq!(z2[x], Rational::from_integer(alg.factorizations(x).len().into()));
    }
    let top_to_bottom = c.find(&m, "0", "i").unwrap();
    assert_eq!(alg.factorizations(top_to_bottom).len(), 8);
    assert_eq!(alg.verify_inversion(&alg.delta(), &alg.mobius().unwrap()), Ok(true));
    assert_eq!(alg.verify_inversion(&alg.zeta(), &alg.mobius().unwrap()), Ok(true));
}

#[test]
fn chain_poset_is_not_special() {
    let cat = FiniteCategory::from_poset(vec!["a".into(), "b".into(), "c".into()], |x, y| x <= y).unwrap();
    assert!(!IncidenceAlgebra::new(&cat).is_special_mobius().unwrap());
}

#[test]
fn sequence_categories_are_special() {
    for n in 0..=8 {
        let c = build_cn(n).unwrap();
        assert!(IncidenceAlgebra::new(c.category()).is_special_mobius().unwrap(), "C_{n}");
    }
}

#[test]
fn verify_passes_at_four() {
    let report = verify::run(&VerifyConfig { n: 4, samples: 20, ..VerifyConfig::default() });
    assert!(report.passed(), "{report}");
    assert_eq!(report.count(Status::Skipped), 0, "{report}");
}

#[test]
fn partitions_join_to_the_coarsest_common_coarsening() {
    let a = Partition::by_key([0, 0, 1, 2, 2]);
    let b = Partition::by_key([0, 1, 1, 2, 3]);
    let j = a.join(&b);
    assert!(j.related(0, 2));
    assert!(!j.related(0, 3));
    assert_eq!(j.classes().len(), 2);
    assert_eq!(j.len(), 5);
}

fn io4() -> &'static divcat_core::FiniteInverseMonoid {
    static M: std::sync::OnceLock<divcat_core::FiniteInverseMonoid> = std::sync::OnceLock::new();
    M.get_or_init(|| enumerate_io(4).unwrap())
}

proptest! {
    #[test]
    fn io4_is_associative_and_inverse(a in 0usize..70, b in 0usize..70, c in 0usize..70) {
        let m = io4();
        prop_assert_eq!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
        let ai = m.inverse(a);
        prop_assert_eq!(m.mul(m.mul(a, ai), a), a);
        prop_assert_eq!(m.mul(m.mul(ai, a), ai), ai);
    }

    #[test]
    fn sources_and_targets_are_idempotent(a in 0usize..70) {
        let m = io4();
        prop_assert!(m.is_idempotent(m.source_idempotent(a)));
        prop_assert!(m.is_idempotent(m.target_idempotent(a)));
        prop_assert_eq!(m.element(m.source_idempotent(a)).domain(), m.element(a).domain());
    }
}

use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use proptest::prelude::*;

use gchar::catalog::catalog;
use gchar::chartab::{self, CharacterTable};
use gchar::gtable::{self, Triple};
use gchar::normal;
use gchar::perm::{conjugacy_classes, power_class_map};
use gchar::{Cyclotomic, PermGroup};

const FIELDS: &[u32] = &[1, 3, 4, 5, 8, 12, 15, 24];

fn element(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..n as i64, -4i64..=4), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(k, c)| Cyclotomic::root(n, k).scale_int(c))
            .sum()
    })
}

fn triple_in_field() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(FIELDS).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
}

fn unit(n: u32) -> impl Strategy<Value = i64> {
    let units: Vec<i64> = (1..n.max(2) as i64)
        .filter(|k| k.gcd(&(n as i64)) == 1)
        .collect();
    prop::sample::select(units)
}

const GROUPS: &[&str] = &[
    "cyclic:6",
    "symmetric:3",
    "symmetric:4",
    "dihedral:8",
    "dihedral:10",
    "alternating:4",
    "HolC5",
    "AutD16",
    "E8semiC4",
    "direct_product:cyclic:2,symmetric:3",
];

fn tables() -> &'static Vec<CharacterTable> {
    static T: OnceLock<Vec<CharacterTable>> = OnceLock::new();
    T.get_or_init(|| {
        GROUPS
            .iter()
            .map(|g| CharacterTable::compute(Arc::new(catalog(g).unwrap())))
            .collect()
    })
}

fn table_index() -> impl Strategy<Value = usize> {
    0..GROUPS.len()
}

fn group_and_pair() -> impl Strategy<Value = (usize, usize, usize)> {
    table_index().prop_flat_map(|i| {
        let o = tables()[i].group().order();
        (Just(i), 0..o, 0..o)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms((_n, a, b, c) in triple_in_field()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn cyclotomic_inverse((_n, a, _b, _c) in triple_in_field()) {
        match a.inverse() {
            None => prop_assert!(a.is_zero()),
            Some(inv) => prop_assert!((&a * &inv).is_one()),
        }
    }

    #[test]
    fn galois_is_a_ring_map(((_, a, b, _), k) in triple_in_field().prop_flat_map(|t| {
        let n = t.0;
        (Just(t), unit(n))
    })) {
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
    }

    #[test]
    fn cyclotomic_serialization_round_trips((_n, a, _b, _c) in triple_in_field()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(Cyclotomic::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn multiplication_is_closed((i, a, b) in group_and_pair()) {
        let g: &PermGroup = tables()[i].group();
        let p = g.element(a).compose(g.element(b));
        prop_assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
    }

    #[test]
    fn classes_are_conjugation_invariant((i, x, y) in group_and_pair()) {
        let t = &tables()[i];
        let cd = t.classes();
        prop_assert_eq!(cd.class_of[t.group().conj(x, y)], cd.class_of[x]);
    }

    #[test]
    fn power_maps_compose(i in table_index(), k in 1i64..40, l in 1i64..40) {
        let t = &tables()[i];
        let g = t.group();
        let e = g.exponent() as i64;
        prop_assume!(k.gcd(&e) == 1 && l.gcd(&e) == 1);
        let cd = t.classes();
        let pk = power_class_map(g, cd, k);
        let pl = power_class_map(g, cd, l);
        let pkl = power_class_map(g, cd, k * l);
        for c in 0..cd.len() {
            prop_assert_eq!(pk[pl[c]], pkl[c]);
        }
    }

    #[test]
    fn solve_block_contains_every_consistent_triple(
        e in 1u64..5, t in 1u64..7, d in 1u64..5, k in 1u64..4, m in 1u64..4,
    ) {
        let index = t * k;
        let order_n = d * m;
        let degree = e * t * d;
        let s = gtable::solve_block(e * e * t, t * d * d, degree, index, order_n);
        prop_assert!(s.solutions.contains(&Triple::new(e, t, d)), "{:?}", s);
        prop_assert_eq!(s.determined, s.solutions.len() == 1);
    }
}

#[test]
fn class_equation_holds() {
    for t in tables() {
        let g = t.group();
        let cd = conjugacy_classes(g);
        assert_eq!(cd.sizes.iter().sum::<usize>(), g.order());
        assert!(cd.sizes.iter().all(|s| g.order() % s == 0));
    }
}

#[test]
fn tables_are_orthogonal_and_seed_free() {
    for t in tables() {
        chartab::verify_orthogonality(t).unwrap();
        let other = CharacterTable::compute_seeded(Arc::clone(t.group_arc()), 99);
        assert_eq!(other.values(), t.values());
    }
}

#[test]
fn every_normal_subgroup_is_a_kernel_intersection() {
    for t in tables() {
        let found: Vec<Vec<usize>> = normal::normal_subgroups(t)
            .iter()
            .map(|n| n.class_indices().to_vec())
            .collect();
        assert_eq!(
            found,
            normal::normal_subgroups_oracle(t.group(), t.classes())
        );
    }
}

mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use common::*;
use dtry::{
    concat, is_prefix, is_prefix_free, lex_cmp, Dtry, Error, ErrorCode, Path, PathMap, PathSet,
};
use proptest::prelude::*;

fn arb_path() -> impl Strategy<Value = Path> {
    prop::collection::vec(prop::sample::select(&NAMES[..3]), 0..4)
        .prop_map(|v| v.iter().map(|s| name(s)).collect())
}

fn arb_name_text() -> impl Strategy<Value = String> {
    "[A-Za-z0-9_]{1,6}"
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lex_order_is_total_and_matches_segments(p in arb_path(), q in arb_path(), r in arb_path()) {
        let ps = segs(&p);
        let qs = segs(&q);
        prop_assert_eq!(lex_cmp(&p, &q), ps.cmp(&qs));
        prop_assert_eq!(lex_cmp(&p, &q), lex_cmp(&q, &p).reverse());
        if lex_cmp(&p, &q) != Ordering::Greater && lex_cmp(&q, &r) != Ordering::Greater {
            prop_assert_ne!(lex_cmp(&p, &r), Ordering::Greater);
        }
        if is_prefix(&p, &q) {
            prop_assert_ne!(lex_cmp(&p, &q), Ordering::Greater);
        }
    }

    #[test]
    fn concat_laws(p in arb_path(), q in arb_path(), r in arb_path()) {
        prop_assert_eq!(concat(&concat(&p, &q), &r), concat(&p, &concat(&q, &r)));
        prop_assert_eq!(concat(&Path::root(), &p), p.clone());
        prop_assert_eq!(concat(&p, &Path::root()), p.clone());
        prop_assert!(is_prefix(&p, &concat(&p, &q)));
        prop_assert_eq!(concat(&p, &q).strip_prefix(&p), Some(q.clone()));
    }

    #[test]
    fn path_text_round_trip(parts in prop::collection::vec(arb_name_text(), 0..5)) {
        let text = parts.join(".");
        let p = Path::parse(&text).unwrap();
        prop_assert_eq!(p.to_string(), text);
        prop_assert_eq!(p.len(), parts.len());
    }

    #[test]
    fn prefix_free_matches_pairwise_oracle(paths in prop::collection::btree_set(arb_path(), 0..8)) {
        let set: PathSet = paths.clone();
        let strings: Vec<Vec<String>> = set.iter().map(segs).collect();
        prop_assert_eq!(is_prefix_free(&set), naive_is_prefix_free(&strings));
        let conflicts: Vec<_> = dtry::path::prefix_conflicts(&set)
            .into_iter()
            .map(|(a, b)| (segs(&a), segs(&b)))
            .collect();
        let mut sorted = conflicts.clone();
        sorted.sort();
        prop_assert_eq!(sorted, naive_conflicts(&strings));
    }

    #[test]
    fn insert_agrees_with_path_map_oracle(entries in prop::collection::vec((arb_path(), 0u8..4), 0..8)) {
        // Oracle: the insertion succeeds iff the new path neither equals nor
        // stands in a prefix relation with a bound path.
        let mut d = Dtry::empty();
        let mut bound: BTreeMap<Vec<String>, u8> = BTreeMap::new();
        for (p, v) in entries {
            let ps = segs(&p);
            let clash = bound.keys().any(|q| naive_is_prefix(q, &ps) || naive_is_prefix(&ps, q));
            match d.clone().insert(p, v) {
                Ok(next) => {
                    prop_assert!(!clash);
                    bound.insert(ps, v);
                    d = next;
                }
                Err(Error::PrefixConflict { existing, inserted }) => {
                    prop_assert!(clash);
                    prop_assert_eq!(segs(&inserted), ps.clone());
                    let e = segs(&existing);
                    prop_assert!(naive_is_prefix(&e, &ps) || naive_is_prefix(&ps, &e));
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
        prop_assert_eq!(string_keyed(&d.path_map()), bound);
    }

    #[test]
    fn functor_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_int_dtry(&mut r, Limits::MONAD, 4);
        prop_assert_eq!(d.clone().map(|x| x), d.clone());
        let f = |x: u32| x * 3 + 1;
        let g = |x: u32| x % 5;
        prop_assert_eq!(d.clone().map(f).map(g), d.clone().map(|x| g(f(x))));
        prop_assert_eq!(d.map_ref(|x| f(*x)), d.clone().map(f));
        prop_assert_eq!(d.shape().path_set(), d.path_set());
    }

    #[test]
    fn monad_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_int_dtry(&mut r, Limits::MONAD, 4);
        prop_assert_eq!(Dtry::leaf(d.clone()).flatten(), d.clone());
        prop_assert_eq!(d.clone().map(Dtry::leaf).flatten(), d.clone());
        let ddd = random_triple(&mut r, Limits::SMALL, 4);
        prop_assert_eq!(ddd.clone().flatten().flatten(), ddd.map(|dd| dd.flatten()).flatten());
    }

    #[test]
    fn flatten_matches_concatenation_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dd = random_nested(&mut r, Limits::SMALL, 4);
        let flat = dd.clone().flatten();
        prop_assert_eq!(string_keyed(&flat.path_map()), concatenation_set(&dd));
        let total: usize = dd.values().map(Dtry::leaf_count).sum();
        prop_assert_eq!(flat.leaf_count(), total);
    }

    #[test]
    fn distrib_matches_filter_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_optional_dtry(&mut r, Limits::SMALL);
        let present: BTreeMap<Vec<String>, Option<u32>> = Dtry::from(d.clone())
            .iter()
            .filter_map(|(p, v)| v.map(|x| (segs(&p), x)))
            .collect();
        let out = Dtry::from(d.distrib());
        prop_assert_eq!(string_keyed(&out.path_map()), present);
    }

    #[test]
    fn path_map_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_int_dtry(&mut r, Limits::MONAD, 9);
        let m = d.path_map();
        prop_assert!(m.is_prefix_free());
        prop_assert_eq!(Dtry::from_path_map(m.clone()).unwrap(), d.clone());
        prop_assert_eq!(Dtry::from_path_map(m.clone()).unwrap().path_map(), m);
        let listed: Vec<Vec<String>> = d.paths().map(|p| segs(&p)).collect();
        let mut sorted = dtry_leaf_paths(&d);
        sorted.sort();
        prop_assert_eq!(listed, sorted);
    }

    #[test]
    fn lookup_then_prefix(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_int_dtry(&mut r, Limits::MONAD, 4);
        let m = d.path_map();
        for p in d.paths() {
            prop_assert_eq!(d.get(&p), m.get(&p));
            for k in 0..=p.len() {
                let at = p.truncated(k);
                let sub = d.lookup(&at).unwrap();
                prop_assert_eq!(sub.get(&p.strip_prefix(&at).unwrap()), d.get(&p));
            }
        }
        let k = name("k");
        let pre = d.clone().prefix(k.clone());
        prop_assert_eq!(pre.lookup(&Path::from(k)).unwrap_or_default(), d);
    }

    #[test]
    fn filter_keeps_exactly_matching_leaves(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_int_dtry(&mut r, Limits::MONAD, 4);
        let kept = d.clone().filter(|x| x % 2 == 0);
        let expected: PathMap<u32> = d.iter().filter(|(_, x)| **x % 2 == 0).map(|(p, x)| (p, *x)).collect();
        prop_assert_eq!(kept.path_map(), expected);
    }
}

#[test]
fn planted_conflicts_are_reported() {
    let mut r = rng(7);
    for _ in 0..200 {
        let d = random_int_dtry(&mut r, Limits::SMALL, 4);
        let Some(p) = d.paths().next() else { continue };
        let mut m = d.path_map().into_map();
        let extended = p.child(&name("z"));
        m.insert(extended.clone(), 0);
        match Dtry::from_path_map(PathMap::from(m)) {
            Err(Error::PrefixConflict { existing, inserted }) => {
                assert_eq!((existing, inserted), (p, extended));
            }
            other => panic!("expected a conflict, got {other:?}"),
        }
    }
}

#[test]
fn conflict_error_code() {
    let e = Dtry::empty()
        .insert(path("a.b.c"), 1)
        .unwrap()
        .insert(path("a.b"), 2)
        .unwrap_err();
    assert_eq!(e.code(), ErrorCode::PrefixConflict);
    assert_eq!(e.code().as_str(), "E_PREFIX_CONFLICT");
}

//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dtry::fincat::{DtryMor, FinSetSkel, FnTable, Variant};
use dtry::{Dtry, Name, NonEmptyDtry, NonEmptyRecord, Path, PathMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn name(s: &str) -> Name {
    Name::parse(s).unwrap()
}

pub fn path(s: &str) -> Path {
    Path::parse(s).unwrap()
}

/// Shape limits for random directories.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub depth: usize,
    pub branching: usize,
    pub names: usize,
    /// Chance that a node above the depth limit is a leaf.
    pub leaf_chance: f64,
    /// Chance that the whole directory is empty.
    pub empty_chance: f64,
}

impl Limits {
    pub const MONAD: Limits = Limits {
        depth: 4,
        branching: 4,
        names: 6,
        leaf_chance: 0.45,
        empty_chance: 0.1,
    };
    pub const SMALL: Limits = Limits {
        depth: 2,
        branching: 3,
        names: 4,
        leaf_chance: 0.5,
        empty_chance: 0.1,
    };
}

pub fn random_nonempty<T, R: Rng>(
    rng: &mut R,
    lim: Limits,
    depth: usize,
    leaf: &mut impl FnMut(&mut R) -> T,
) -> NonEmptyDtry<T> {
    if depth == 0 || rng.gen_bool(lim.leaf_chance) {
        return NonEmptyDtry::Leaf(leaf(rng));
    }
    let width = rng.gen_range(1..=lim.branching.min(lim.names));
    let mut keys: Vec<&str> = NAMES[..lim.names].to_vec();
    keys.shuffle(rng);
    let entries = keys[..width]
        .iter()
        .map(|k| (name(k), random_nonempty(rng, lim, depth - 1, leaf)))
        .collect::<Vec<_>>();
    NonEmptyDtry::Node(NonEmptyRecord::from_entries(entries).unwrap())
}

pub fn random_dtry<T, R: Rng>(
    rng: &mut R,
    lim: Limits,
    mut leaf: impl FnMut(&mut R) -> T,
) -> Dtry<T> {
    if rng.gen_bool(lim.empty_chance) {
        return Dtry::empty();
    }
    Dtry::from(random_nonempty(rng, lim, lim.depth, &mut leaf))
}

pub fn random_int_dtry<R: Rng>(rng: &mut R, lim: Limits, pool: u32) -> Dtry<u32> {
    random_dtry(rng, lim, |r| r.gen_range(0..pool))
}

pub fn random_nested<R: Rng>(rng: &mut R, lim: Limits, pool: u32) -> Dtry<Dtry<u32>> {
    random_dtry(rng, lim, |r| random_int_dtry(r, lim, pool))
}

pub fn random_triple<R: Rng>(rng: &mut R, lim: Limits, pool: u32) -> Dtry<Dtry<Dtry<u32>>> {
    random_dtry(rng, lim, |r| random_nested(r, lim, pool))
}

/// A record of doubly optional values. `mode` 0 leaves every entry absent,
/// 1 makes every entry `Some(None)`, 2 mixes the two absent forms, anything
/// else draws freely.
pub fn random_record<R: Rng>(rng: &mut R, mode: u8) -> NonEmptyRecord<Option<Option<u32>>> {
    let width = rng.gen_range(1..=NAMES.len());
    let mut keys = NAMES.to_vec();
    keys.shuffle(rng);
    let entries = keys[..width].iter().map(|k| {
        let v = match mode {
            0 => None,
            1 => Some(None),
            2 => rng.gen_bool(0.5).then_some(None),
            _ => match rng.gen_range(0..3) {
                0 => None,
                1 => Some(None),
                _ => Some(Some(rng.gen_range(0..4))),
            },
        };
        (name(k), v)
    });
    NonEmptyRecord::from_entries(entries.collect::<Vec<_>>()).unwrap()
}

pub fn random_optional_dtry<R: Rng>(rng: &mut R, lim: Limits) -> NonEmptyDtry<Option<Option<u32>>> {
    random_nonempty(
        rng,
        lim,
        lim.depth,
        &mut |r: &mut R| match r.gen_range(0..3) {
            0 => None,
            1 => Some(None),
            _ => Some(Some(r.gen_range(0..4))),
        },
    )
}

// ---- oracles ------------------------------------------------------------

/// Segments of a path as plain strings.
pub fn segs(p: &Path) -> Vec<String> {
    p.segments().iter().map(|n| n.as_str().to_owned()).collect()
}

pub fn naive_is_prefix(p: &[String], q: &[String]) -> bool {
    p.len() <= q.len() && p.iter().zip(q).all(|(a, b)| a == b)
}

/// Every ordered pair `(shorter, longer)` where the first is a proper prefix
/// of the second, by comparing all pairs.
pub fn naive_conflicts(paths: &[Vec<String>]) -> Vec<(Vec<String>, Vec<String>)> {
    let mut out = Vec::new();
    for p in paths {
        for q in paths {
            if p != q && naive_is_prefix(p, q) {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn naive_is_prefix_free(paths: &[Vec<String>]) -> bool {
    naive_conflicts(paths).is_empty()
}

/// Flattens a map of maps by joining string keys with a period. This is the
/// naive approach that loses the boundary between outer and inner keys.
pub fn naive_string_flatten<T: Clone>(
    outer: &BTreeMap<String, BTreeMap<String, T>>,
) -> BTreeMap<String, T> {
    let mut out = BTreeMap::new();
    for (k, inner) in outer {
        for (j, v) in inner {
            let key = match (k.is_empty(), j.is_empty()) {
                (true, _) => j.clone(),
                (_, true) => k.clone(),
                _ => format!("{k}.{j}"),
            };
            out.insert(key, v.clone());
        }
    }
    out
}

/// The complete paths of a directory, read off the trie directly.
pub fn leaf_paths<T>(d: &NonEmptyDtry<T>) -> Vec<Vec<String>> {
    match d {
        NonEmptyDtry::Leaf(_) => vec![vec![]],
        NonEmptyDtry::Node(r) => r
            .iter()
            .flat_map(|(k, sub)| {
                leaf_paths(sub).into_iter().map(move |mut p| {
                    p.insert(0, k.as_str().to_owned());
                    p
                })
            })
            .collect(),
    }
}

pub fn dtry_leaf_paths<T>(d: &Dtry<T>) -> Vec<Vec<String>> {
    d.root().map(leaf_paths).unwrap_or_default()
}

/// `{ n ∗ m | n ∈ U, m ∈ V_n }` with values, computed from the outer and
/// inner leaf paths.
pub fn concatenation_set<T: Clone>(dd: &Dtry<Dtry<T>>) -> BTreeMap<Vec<String>, T> {
    let mut out = BTreeMap::new();
    for (n, inner) in dd.iter() {
        for (m, v) in inner.iter() {
            let mut l = segs(&n);
            l.extend(segs(&m));
            assert!(
                out.insert(l, v.clone()).is_none(),
                "duplicate concatenation"
            );
        }
    }
    out
}

/// `m^n` with `0^0 = 1`: the number of functions from an `n`-set to an `m`-set.
pub fn function_count(n: usize, m: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc * m as u128)
}

/// Morphisms of finite families `(x_i) -> (y_j)` in the coproduct
/// completion of FinSetSkel: the sum over reindexings `σ` of the product of
/// hom-set sizes.
pub fn family_hom_count(xs: &[usize], ys: &[usize]) -> u128 {
    fn go(i: usize, xs: &[usize], ys: &[usize]) -> u128 {
        if i == xs.len() {
            return 1;
        }
        ys.iter()
            .map(|&y| function_count(xs[i], y) * go(i + 1, xs, ys))
            .sum()
    }
    go(0, xs, ys)
}

/// The same count for the product completion: reindexing runs backwards.
pub fn product_family_hom_count(xs: &[usize], ys: &[usize]) -> u128 {
    fn go(j: usize, xs: &[usize], ys: &[usize]) -> u128 {
        if j == ys.len() {
            return 1;
        }
        xs.iter()
            .map(|&x| function_count(x, ys[j]) * go(j + 1, xs, ys))
            .sum()
    }
    go(0, xs, ys)
}

/// The bijective reindexings only.
pub fn iso_family_hom_count(xs: &[usize], ys: &[usize]) -> u128 {
    if xs.len() != ys.len() {
        return 0;
    }
    fn go(i: usize, xs: &[usize], ys: &[usize], used: &mut Vec<bool>) -> u128 {
        if i == xs.len() {
            return 1;
        }
        let mut total = 0;
        for j in 0..ys.len() {
            if !used[j] {
                used[j] = true;
                total += function_count(xs[i], ys[j]) * go(i + 1, xs, ys, used);
                used[j] = false;
            }
        }
        total
    }
    go(0, xs, ys, &mut vec![false; ys.len()])
}

/// The block permutation that sends block `i` (of size `sizes[i]`) to
/// position `perm[i]`, computed element by element.
pub fn block_permutation(sizes: &[usize], perm: &[usize]) -> Vec<usize> {
    let k = sizes.len();
    let mut order = vec![0; k];
    for (i, &t) in perm.iter().enumerate() {
        order[t] = i;
    }
    let mut start_in_target = vec![0; k];
    let mut acc = 0;
    for &i in &order {
        start_in_target[i] = acc;
        acc += sizes[i];
    }
    let mut images = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        for e in 0..n {
            images.push(start_in_target[i] + e);
        }
    }
    images
}

// ---- family morphisms over FinSetSkel ----------------------------------

/// A random object with at most `max_leaves` leaves and sizes at most
/// `max_size`.
pub fn random_object<R: Rng>(rng: &mut R, max_leaves: usize, max_size: usize) -> Dtry<usize> {
    loop {
        let lim = Limits {
            depth: 2,
            branching: 3,
            names: 3,
            leaf_chance: 0.4,
            empty_chance: 0.1,
        };
        let d = random_dtry(rng, lim, |r| r.gen_range(0..=max_size));
        if d.leaf_count() <= max_leaves {
            return d;
        }
    }
}

pub fn random_table<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Option<FnTable> {
    if dom > 0 && cod == 0 {
        return None;
    }
    FnTable::new(cod, (0..dom).map(|_| rng.gen_range(0..cod)).collect())
}

/// A random morphism `x -> y`, or `None` when the draw hit an empty hom-set.
pub fn random_mor<R: Rng>(
    rng: &mut R,
    variant: Variant,
    x: &Dtry<usize>,
    y: &Dtry<usize>,
) -> Option<DtryMor<usize, FnTable>> {
    let (keyed, other) = match variant {
        Variant::General | Variant::Iso => (x, y),
        Variant::Product => (y, x),
    };
    let keys: Vec<Path> = keyed.paths().collect();
    let mut targets: Vec<Path> = other.paths().collect();
    let index: BTreeMap<Path, Path> = match variant {
        Variant::Iso => {
            if keys.len() != targets.len() {
                return None;
            }
            targets.shuffle(rng);
            keys.iter().cloned().zip(targets).collect()
        }
        _ => {
            if targets.is_empty() && !keys.is_empty() {
                return None;
            }
            keys.iter()
                .map(|k| (k.clone(), targets[rng.gen_range(0..targets.len())].clone()))
                .collect()
        }
    };
    let mut components = BTreeMap::new();
    for (p, q) in &index {
        let (a, b) = match variant {
            Variant::Product => (*x.get(q).unwrap(), *y.get(p).unwrap()),
            _ => (*x.get(p).unwrap(), *y.get(q).unwrap()),
        };
        components.insert(p.clone(), random_table(rng, a, b)?);
    }
    Some(
        DtryMor::new(
            &FinSetSkel,
            variant,
            x.clone(),
            y.clone(),
            index,
            components,
        )
        .unwrap(),
    )
}

/// Draws objects until a morphism out of `x` exists.
pub fn random_mor_from<R: Rng>(
    rng: &mut R,
    variant: Variant,
    x: &Dtry<usize>,
    max_leaves: usize,
    max_size: usize,
) -> DtryMor<usize, FnTable> {
    loop {
        let y = random_object(rng, max_leaves, max_size);
        if let Some(m) = random_mor(rng, variant, x, &y) {
            return m;
        }
    }
}

/// Re-keys a path map by string segments.
pub fn string_keyed<T: Clone>(m: &PathMap<T>) -> BTreeMap<Vec<String>, T> {
    m.iter().map(|(p, v)| (segs(p), v.clone())).collect()
}

pub fn path_set_strings(paths: &BTreeSet<Path>) -> Vec<Vec<String>> {
    paths.iter().map(segs).collect()
}

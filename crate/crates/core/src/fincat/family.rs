//! Directory-indexed families of objects and their morphisms.
//!
//! An object over a category `C` is a `Dtry<C::Obj>`: its shape is the set of
//! complete paths and its values assign an object to each path. A morphism
//! carries an index map between path sets and one `C`-morphism per indexed
//! path. The direction of the index map depends on the [`Variant`]:
//!
//! * [`Variant::General`]: `src` paths to `dst` paths, with components
//!   `src(p) -> dst(index(p))`. This is the finite coproduct completion.
//! * [`Variant::Iso`]: as `General`, with a bijective index map.
//! * [`Variant::Product`]: `dst` paths to `src` paths, with components
//!   `src(index(q)) -> dst(q)`. This is the finite product completion.

use std::collections::{BTreeMap, BTreeSet};

use crate::dtry::{Dtry, NonEmptyDtry};
use crate::error::{Error, Result};
use crate::fincat::{Category, HomSets};
use crate::name::Name;
use crate::path::Path;
use crate::record::NonEmptyRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    General,
    Iso,
    Product,
}

/// A morphism between directory-indexed families. `index` and `components`
/// are keyed by the paths of `src` for `General`/`Iso` and of `dst` for
/// `Product`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DtryMor<O, M> {
    variant: Variant,
    src: Dtry<O>,
    dst: Dtry<O>,
    index: BTreeMap<Path, Path>,
    components: BTreeMap<Path, M>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::NotComposable(msg.into())
}

impl<O, M> DtryMor<O, M> {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn src(&self) -> &Dtry<O> {
        &self.src
    }

    pub fn dst(&self) -> &Dtry<O> {
        &self.dst
    }

    pub fn index(&self) -> &BTreeMap<Path, Path> {
        &self.index
    }

    pub fn components(&self) -> &BTreeMap<Path, M> {
        &self.components
    }

    /// The side whose paths key `index` and `components`.
    fn keyed_side(&self) -> &Dtry<O> {
        match self.variant {
            Variant::General | Variant::Iso => &self.src,
            Variant::Product => &self.dst,
        }
    }

    fn other_side(&self) -> &Dtry<O> {
        match self.variant {
            Variant::General | Variant::Iso => &self.dst,
            Variant::Product => &self.src,
        }
    }
}

impl<O: Clone + Eq + std::fmt::Debug, M: Clone + Eq + std::fmt::Debug> DtryMor<O, M> {
    /// Builds a morphism and checks it against `cat`.
    pub fn new<C: Category<Obj = O, Mor = M>>(
        cat: &C,
        variant: Variant,
        src: Dtry<O>,
        dst: Dtry<O>,
        index: BTreeMap<Path, Path>,
        components: BTreeMap<Path, M>,
    ) -> Result<Self> {
        let m = DtryMor {
            variant,
            src,
            dst,
            index,
            components,
        };
        m.validate(cat)?;
        Ok(m)
    }

    pub fn validate<C: Category<Obj = O, Mor = M>>(&self, cat: &C) -> Result<()> {
        for side in [&self.src, &self.dst] {
            if let Some((p, x)) = side.iter().find(|(_, x)| !cat.contains_object(x)) {
                return Err(invalid(format!(
                    "object {x:?} at `{p}` is not in the category"
                )));
            }
        }
        let keys = self.keyed_side().path_set();
        let targets = self.other_side().path_set();
        if !self.index.keys().eq(keys.iter()) {
            return Err(invalid("index map is not total on its domain paths"));
        }
        if !self.components.keys().eq(keys.iter()) {
            return Err(invalid("components do not match the domain paths"));
        }
        if let Some((p, q)) = self.index.iter().find(|(_, q)| !targets.contains(*q)) {
            return Err(invalid(format!(
                "index sends `{p}` to `{q}`, which is not a path"
            )));
        }
        if self.variant == Variant::Iso {
            let image: BTreeSet<&Path> = self.index.values().collect();
            if image.len() != self.index.len() || keys.len() != targets.len() {
                return Err(invalid(
                    "index map of an isomorphism variant is not a bijection",
                ));
            }
        }
        for (p, f) in &self.components {
            let q = &self.index[p];
            let (from, to) = match self.variant {
                Variant::General | Variant::Iso => (self.src.get(p), self.dst.get(q)),
                Variant::Product => (self.src.get(q), self.dst.get(p)),
            };
            let (from, to) = (from.expect("checked path"), to.expect("checked path"));
            if !cat.contains_morphism(f) || &cat.dom(f) != from || &cat.cod(f) != to {
                return Err(invalid(format!(
                    "component at `{p}` should be {from:?} -> {to:?}, got {f:?}"
                )));
            }
        }
        Ok(())
    }
}

/// A morphism between directories of families, whose components are
/// themselves family morphisms.
pub type NestedMor<O, M> = DtryMor<Dtry<O>, DtryMor<O, M>>;

/// The category of directory-indexed families over `base`, in one variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtryCat<C> {
    base: C,
    variant: Variant,
}

impl<C: Category> DtryCat<C> {
    pub fn new(base: C, variant: Variant) -> Self {
        DtryCat { base, variant }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn identity_mor(&self, x: &Dtry<C::Obj>) -> DtryMor<C::Obj, C::Mor> {
        DtryMor {
            variant: self.variant,
            src: x.clone(),
            dst: x.clone(),
            index: x.paths().map(|p| (p.clone(), p)).collect(),
            components: x.iter().map(|(p, o)| (p, self.base.identity(o))).collect(),
        }
    }

    /// `f` then `g`.
    pub fn compose_mor(
        &self,
        f: &DtryMor<C::Obj, C::Mor>,
        g: &DtryMor<C::Obj, C::Mor>,
    ) -> Result<DtryMor<C::Obj, C::Mor>> {
        if f.variant != self.variant || g.variant != self.variant {
            return Err(invalid(format!(
                "variants {:?} and {:?} in a {:?} category",
                f.variant, g.variant, self.variant
            )));
        }
        if f.dst != g.src {
            return Err(invalid(
                "target of the first morphism is not the source of the second",
            ));
        }
        let compose = |a: &C::Mor, b: &C::Mor| {
            self.base
                .compose(a, b)
                .ok_or_else(|| invalid(format!("components {a:?} and {b:?} do not compose")))
        };
        let mut index = BTreeMap::new();
        let mut components = BTreeMap::new();
        match self.variant {
            Variant::General | Variant::Iso => {
                for (p, fp) in &f.index {
                    index.insert(p.clone(), g.index[fp].clone());
                    components.insert(p.clone(), compose(&f.components[p], &g.components[fp])?);
                }
            }
            Variant::Product => {
                for (q, gq) in &g.index {
                    index.insert(q.clone(), f.index[gq].clone());
                    components.insert(q.clone(), compose(&f.components[gq], &g.components[q])?);
                }
            }
        }
        if self.variant == Variant::Iso {
            let image: BTreeSet<&Path> = index.values().collect();
            if image.len() != index.len() {
                return Err(invalid(
                    "composite of isomorphism-variant morphisms is not bijective",
                ));
            }
        }
        Ok(DtryMor {
            variant: self.variant,
            src: f.src.clone(),
            dst: g.dst.clone(),
            index,
            components,
        })
    }

    /// Flattens a morphism between directories of families: the index map
    /// sends `p ∗ q` to `index(p) ∗ index_p(q)` and each component is taken
    /// from the inner morphism at `p`.
    pub fn flatten_mor(&self, m: &NestedMor<C::Obj, C::Mor>) -> Result<DtryMor<C::Obj, C::Mor>> {
        if m.variant != self.variant {
            return Err(invalid(format!(
                "outer variant {:?} in a {:?} category",
                m.variant, self.variant
            )));
        }
        let mut index = BTreeMap::new();
        let mut components = BTreeMap::new();
        for (outer, inner) in &m.components {
            if inner.variant != self.variant {
                return Err(invalid(format!(
                    "inner morphism at `{outer}` has variant {:?}",
                    inner.variant
                )));
            }
            let outer_image = &m.index[outer];
            for (p, q) in &inner.index {
                index.insert(outer.concat(p), outer_image.concat(q));
                components.insert(outer.concat(p), inner.components[p].clone());
            }
        }
        Ok(DtryMor {
            variant: self.variant,
            src: mu_obj(m.src.clone()),
            dst: mu_obj(m.dst.clone()),
            index,
            components,
        })
    }

    /// Flattens a directory of morphisms into one morphism between the
    /// flattened sources and targets.
    pub fn mu_mor(&self, dm: &Dtry<DtryMor<C::Obj, C::Mor>>) -> Result<DtryMor<C::Obj, C::Mor>> {
        let outer = DtryMor {
            variant: self.variant,
            src: dm.map_ref(|m| m.src.clone()),
            dst: dm.map_ref(|m| m.dst.clone()),
            index: dm.paths().map(|p| (p.clone(), p)).collect(),
            components: dm.iter().map(|(p, m)| (p, m.clone())).collect(),
        };
        self.flatten_mor(&outer)
    }

    /// All morphisms `x -> y`, for finite hom-sets.
    pub fn hom_set(&self, x: &Dtry<C::Obj>, y: &Dtry<C::Obj>) -> Vec<DtryMor<C::Obj, C::Mor>>
    where
        C: HomSets,
    {
        let (keyed, other) = match self.variant {
            Variant::General | Variant::Iso => (x, y),
            Variant::Product => (y, x),
        };
        let keys: Vec<(Path, &C::Obj)> = keyed.iter().collect();
        let targets: Vec<(Path, &C::Obj)> = other.iter().collect();
        let choices: Vec<Vec<usize>> = match self.variant {
            Variant::Iso if keys.len() != targets.len() => Vec::new(),
            Variant::Iso => permutations(keys.len()),
            _ => all_functions(keys.len(), targets.len()),
        };
        let mut out = Vec::new();
        for choice in choices {
            let homs: Vec<Vec<C::Mor>> = keys
                .iter()
                .zip(&choice)
                .map(|((_, k), &t)| match self.variant {
                    Variant::Product => self.base.hom(targets[t].1, k),
                    _ => self.base.hom(k, targets[t].1),
                })
                .collect();
            for picks in all_functions_ragged(&homs.iter().map(Vec::len).collect::<Vec<_>>()) {
                let index = keys
                    .iter()
                    .zip(&choice)
                    .map(|((p, _), &t)| (p.clone(), targets[t].0.clone()))
                    .collect();
                let components = keys
                    .iter()
                    .enumerate()
                    .map(|(i, (p, _))| (p.clone(), homs[i][picks[i]].clone()))
                    .collect();
                out.push(DtryMor {
                    variant: self.variant,
                    src: x.clone(),
                    dst: y.clone(),
                    index,
                    components,
                });
            }
        }
        out
    }
}

/// Every sequence `s` of length `n` with `s[i] < m`.
fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    all_functions_ragged(&vec![m; n])
}

/// Every sequence `s` with `s[i] < bounds[i]`.
fn all_functions_ragged(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..b).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_functions(n, n)
        .into_iter()
        .filter(|s| s.iter().collect::<BTreeSet<_>>().len() == n)
        .collect()
}

impl<C: Category> Category for DtryCat<C> {
    type Obj = Dtry<C::Obj>;
    type Mor = DtryMor<C::Obj, C::Mor>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        f.src.clone()
    }

    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        f.dst.clone()
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.identity_mor(x)
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Option<Self::Mor> {
        self.compose_mor(f, g).ok()
    }

    fn contains_object(&self, x: &Self::Obj) -> bool {
        x.values().all(|o| self.base.contains_object(o))
    }

    fn contains_morphism(&self, f: &Self::Mor) -> bool {
        f.variant == self.variant && f.validate(&self.base).is_ok()
    }
}

impl<C: HomSets> HomSets for DtryCat<C> {
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.hom_set(x, y)
    }
}

/// Flattens a directory of families.
pub fn mu_obj<O>(dd: Dtry<Dtry<O>>) -> Dtry<O> {
    dd.flatten()
}

/// The family as a list indexed by paths in lexicographic order.
pub fn path_family<O: Clone>(x: &Dtry<O>) -> Vec<(Path, O)> {
    x.iter().map(|(p, o)| (p, o.clone())).collect()
}

/// A balanced binary tree with `n` leaves, labelled `0` and `1` at each level.
pub fn shape_with_n_leaves(n: usize) -> Dtry<()> {
    family_from_list(vec![(); n])
}

/// Places `items` at the leaves of [`shape_with_n_leaves`] so that
/// [`path_family`] lists them in their original order.
pub fn family_from_list<O>(items: Vec<O>) -> Dtry<O> {
    fn build<O>(mut items: Vec<O>) -> NonEmptyDtry<O> {
        if items.len() == 1 {
            return NonEmptyDtry::Leaf(items.pop().expect("one item"));
        }
        let right = items.split_off(items.len().div_ceil(2));
        let children = [("0", build(items)), ("1", build(right))]
            .map(|(k, d)| (Name::parse(k).expect("valid name"), d));
        NonEmptyDtry::Node(NonEmptyRecord::from_entries(children).expect("two children"))
    }
    if items.is_empty() {
        Dtry::empty()
    } else {
        Dtry::from(build(items))
    }
}

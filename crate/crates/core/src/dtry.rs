//! The directory monad.
//!
//! A [`Dtry`] is either empty or a [`NonEmptyDtry`]: a finite tree whose
//! leaves carry values and whose internal nodes are non-empty records of
//! subtrees. Empty subdirectories therefore cannot occur below the root, and a
//! directory is determined by its set of complete paths, which is always
//! prefix-free.
//!
//! Multiplication ([`Dtry::flatten`]) is built from the free-monad join on
//! [`NonEmptyDtry`] and [`NonEmptyDtry::distrib`], which pushes the optional
//! layer outwards and deletes subtrees that end up with nothing in them.

use std::collections::btree_map::{self, BTreeMap};

use crate::error::{Error, Result};
use crate::name::Name;
use crate::path::{Path, PathSet};
use crate::record::NonEmptyRecord;

/// A non-empty directory: a leaf value or a non-empty record of subdirectories.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NonEmptyDtry<T> {
    Leaf(T),
    Node(NonEmptyRecord<NonEmptyDtry<T>>),
}

impl<T> NonEmptyDtry<T> {
    pub fn map<U, F: FnMut(T) -> U>(self, mut f: F) -> NonEmptyDtry<U> {
        self.map_with(&mut f)
    }

    fn map_with<U, F: FnMut(T) -> U>(self, f: &mut F) -> NonEmptyDtry<U> {
        match self {
            NonEmptyDtry::Leaf(x) => NonEmptyDtry::Leaf(f(x)),
            NonEmptyDtry::Node(r) => NonEmptyDtry::Node(r.map(|d| d.map_with(f))),
        }
    }

    pub fn map_ref<U, F: FnMut(&T) -> U>(&self, mut f: F) -> NonEmptyDtry<U> {
        self.map_ref_with(&mut f)
    }

    fn map_ref_with<U, F: FnMut(&T) -> U>(&self, f: &mut F) -> NonEmptyDtry<U> {
        match self {
            NonEmptyDtry::Leaf(x) => NonEmptyDtry::Leaf(f(x)),
            NonEmptyDtry::Node(r) => NonEmptyDtry::Node(r.map_ref(|d| d.map_ref_with(f))),
        }
    }

    /// `[key]` followed by every path of `self`.
    pub fn prefixed(self, key: Name) -> NonEmptyDtry<T> {
        NonEmptyDtry::Node(NonEmptyRecord::singleton(key, self))
    }

    pub fn singleton(path: &Path, value: T) -> NonEmptyDtry<T> {
        path.segments()
            .iter()
            .rev()
            .fold(NonEmptyDtry::Leaf(value), |d, k| d.prefixed(k.clone()))
    }

    /// The subtree at `path`, or `None` when the path runs past a leaf or
    /// through a missing key.
    pub fn lookup(&self, path: &Path) -> Option<&NonEmptyDtry<T>> {
        let mut here = self;
        for k in path.segments() {
            match here {
                NonEmptyDtry::Leaf(_) => return None,
                NonEmptyDtry::Node(r) => here = r.get(k)?,
            }
        }
        Some(here)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            NonEmptyDtry::Leaf(_) => 1,
            NonEmptyDtry::Node(r) => r.values().map(NonEmptyDtry::leaf_count).sum(),
        }
    }

    /// Lexicographically first complete path.
    pub fn first_path(&self) -> Path {
        let mut segments = Vec::new();
        let mut here = self;
        while let NonEmptyDtry::Node(r) = here {
            let (k, d) = r.first();
            segments.push(k.clone());
            here = d;
        }
        Path::new(segments)
    }

    pub fn iter(&self) -> Paths<'_, T> {
        Paths {
            stack: vec![(Path::root(), self)],
        }
    }

    fn insert_at(&mut self, path: &Path, depth: usize, value: T) -> Result<()> {
        match self {
            NonEmptyDtry::Leaf(_) => Err(Error::PrefixConflict {
                existing: path.truncated(depth),
                inserted: path.clone(),
            }),
            NonEmptyDtry::Node(r) => {
                let Some(k) = path.segments().get(depth) else {
                    let existing = path.concat(&self.first_path());
                    return Err(Error::PrefixConflict {
                        existing,
                        inserted: path.clone(),
                    });
                };
                match r.get_mut(k) {
                    Some(child) => child.insert_at(path, depth + 1, value),
                    None => {
                        let rest = Path::new(path.segments()[depth + 1..].to_vec());
                        r.insert(k.clone(), NonEmptyDtry::singleton(&rest, value));
                        Ok(())
                    }
                }
            }
        }
    }
}

impl<T> NonEmptyDtry<NonEmptyDtry<T>> {
    /// Free-monad multiplication: graft each inner tree in place of its leaf.
    pub fn join(self) -> NonEmptyDtry<T> {
        match self {
            NonEmptyDtry::Leaf(inner) => inner,
            NonEmptyDtry::Node(r) => NonEmptyDtry::Node(r.map(NonEmptyDtry::join)),
        }
    }
}

impl<T> NonEmptyDtry<Option<T>> {
    /// Distributive law over the optional-value monad: drop absent leaves and
    /// every subtree left with no leaves; `None` if no leaf was present.
    pub fn distrib(self) -> Option<NonEmptyDtry<T>> {
        match self {
            NonEmptyDtry::Leaf(x) => x.map(NonEmptyDtry::Leaf),
            NonEmptyDtry::Node(r) => r
                .map(NonEmptyDtry::distrib)
                .filter_nothings()
                .map(NonEmptyDtry::Node),
        }
    }
}

pub fn distrib<T>(d: NonEmptyDtry<Option<T>>) -> Option<NonEmptyDtry<T>> {
    d.distrib()
}

/// Complete paths of a directory with their values, in lexicographic order.
pub struct Paths<'a, T> {
    stack: Vec<(Path, &'a NonEmptyDtry<T>)>,
}

impl<'a, T> Iterator for Paths<'a, T> {
    type Item = (Path, &'a T);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let (path, d) = self.stack.pop()?;
            match d {
                NonEmptyDtry::Leaf(x) => return Some((path, x)),
                NonEmptyDtry::Node(r) => {
                    self.stack
                        .extend(r.iter().rev().map(|(k, child)| (path.child(k), child)));
                }
            }
        }
    }
}

/// A directory: possibly empty, with no empty subdirectories.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dtry<T> {
    root: Option<NonEmptyDtry<T>>,
}

impl<T> Default for Dtry<T> {
    fn default() -> Self {
        Dtry::empty()
    }
}

impl<T> From<NonEmptyDtry<T>> for Dtry<T> {
    fn from(d: NonEmptyDtry<T>) -> Self {
        Dtry { root: Some(d) }
    }
}

impl<T> From<Option<NonEmptyDtry<T>>> for Dtry<T> {
    fn from(root: Option<NonEmptyDtry<T>>) -> Self {
        Dtry { root }
    }
}

impl<T> Dtry<T> {
    pub fn empty() -> Self {
        Dtry { root: None }
    }

    /// The unit: `value` at the root path.
    pub fn leaf(value: T) -> Self {
        Dtry {
            root: Some(NonEmptyDtry::Leaf(value)),
        }
    }

    /// One level of named subdirectories. Empty entries vanish.
    pub fn node(entries: NonEmptyRecord<Dtry<T>>) -> Self {
        Dtry::from(NonEmptyDtry::Node(entries.map(NonEmptyDtry::Leaf))).flatten()
    }

    pub fn singleton(path: &Path, value: T) -> Self {
        Dtry::from(NonEmptyDtry::singleton(path, value))
    }

    pub fn root(&self) -> Option<&NonEmptyDtry<T>> {
        self.root.as_ref()
    }

    pub fn into_root(self) -> Option<NonEmptyDtry<T>> {
        self.root
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn leaf_count(&self) -> usize {
        self.root.as_ref().map_or(0, NonEmptyDtry::leaf_count)
    }

    pub fn prefix(self, key: Name) -> Self {
        Dtry {
            root: self.root.map(|d| d.prefixed(key)),
        }
    }

    /// The value at a complete path.
    pub fn get(&self, path: &Path) -> Option<&T> {
        match self.root.as_ref()?.lookup(path)? {
            NonEmptyDtry::Leaf(x) => Some(x),
            NonEmptyDtry::Node(_) => None,
        }
    }

    /// The non-empty subdirectory at `path`.
    pub fn subtree(&self, path: &Path) -> Option<&NonEmptyDtry<T>> {
        self.root.as_ref()?.lookup(path)
    }

    /// The subdirectory rooted at `path`. Looking up the root path always
    /// succeeds, even in the empty directory.
    pub fn lookup(&self, path: &Path) -> Option<Dtry<T>>
    where
        T: Clone,
    {
        if path.is_root() {
            return Some(self.clone());
        }
        self.subtree(path).map(|d| Dtry::from(d.clone()))
    }

    /// Adds a new complete path. Fails if `path` is already bound, is a
    /// prefix of a bound path, or extends one.
    pub fn insert(mut self, path: Path, value: T) -> Result<Self> {
        self.insert_mut(&path, value)?;
        Ok(self)
    }

    fn insert_mut(&mut self, path: &Path, value: T) -> Result<()> {
        match &mut self.root {
            None => {
                self.root = Some(NonEmptyDtry::singleton(path, value));
                Ok(())
            }
            Some(d) => d.insert_at(path, 0, value),
        }
    }

    pub fn map<U, F: FnMut(T) -> U>(self, f: F) -> Dtry<U> {
        Dtry {
            root: self.root.map(|d| d.map(f)),
        }
    }

    pub fn map_ref<U, F: FnMut(&T) -> U>(&self, f: F) -> Dtry<U> {
        Dtry {
            root: self.root.as_ref().map(|d| d.map_ref(f)),
        }
    }

    /// The shape of the directory, forgetting the values.
    pub fn shape(&self) -> Dtry<()> {
        self.map_ref(|_| ())
    }

    pub fn bind<U, F: FnMut(T) -> Dtry<U>>(self, f: F) -> Dtry<U> {
        self.map(f).flatten()
    }

    /// Keeps the leaves satisfying `pred`; subdirectories left with nothing
    /// in them are removed.
    pub fn filter<F: FnMut(&T) -> bool>(self, mut pred: F) -> Self {
        let root = self
            .root
            .and_then(|d| d.map(|x| if pred(&x) { Some(x) } else { None }).distrib());
        Dtry { root }
    }

    pub fn iter(&self) -> Paths<'_, T> {
        Paths {
            stack: self.root.iter().map(|d| (Path::root(), d)).collect(),
        }
    }

    pub fn paths(&self) -> impl Iterator<Item = Path> + '_ {
        self.iter().map(|(p, _)| p)
    }

    pub fn values(&self) -> impl Iterator<Item = &T> + '_ {
        self.iter().map(|(_, x)| x)
    }

    pub fn path_set(&self) -> PathSet {
        self.paths().collect()
    }

    pub fn path_map(&self) -> PathMap<T>
    where
        T: Clone,
    {
        self.iter().map(|(p, x)| (p, x.clone())).collect()
    }

    pub fn into_path_map(self) -> PathMap<T> {
        fn walk<T>(prefix: Path, d: NonEmptyDtry<T>, out: &mut BTreeMap<Path, T>) {
            match d {
                NonEmptyDtry::Leaf(x) => {
                    out.insert(prefix, x);
                }
                NonEmptyDtry::Node(r) => {
                    for (k, child) in r {
                        walk(prefix.child(&k), child, out);
                    }
                }
            }
        }
        let mut out = BTreeMap::new();
        if let Some(d) = self.root {
            walk(Path::root(), d, &mut out);
        }
        PathMap(out)
    }

    /// Inverse of [`Dtry::path_map`] on prefix-free maps. Keys are inserted
    /// in lexicographic order, so a conflict names the first key (in that
    /// order) that extends an earlier one.
    pub fn from_path_map(map: PathMap<T>) -> Result<Self> {
        let mut d = Dtry::empty();
        for (p, x) in map.0 {
            d.insert_mut(&p, x)?;
        }
        Ok(d)
    }

    /// Places each directory under its own name.
    pub fn merge_disjoint(parts: NonEmptyRecord<Dtry<T>>) -> Self {
        Dtry::node(parts)
    }
}

impl<T> Dtry<Dtry<T>> {
    /// Monad multiplication: the directory whose complete paths are `p ∗ q`
    /// for `p` a path of the outer directory and `q` a path of the directory
    /// stored at `p`.
    pub fn flatten(self) -> Dtry<T> {
        let swapped = self
            .root
            .and_then(|outer| outer.map(|inner| inner.root).distrib());
        Dtry {
            root: swapped.map(NonEmptyDtry::join),
        }
    }
}

impl<T> FromIterator<(Path, T)> for PathMap<T> {
    fn from_iter<I: IntoIterator<Item = (Path, T)>>(iter: I) -> Self {
        PathMap(iter.into_iter().collect())
    }
}

pub fn flatten<T>(dd: Dtry<Dtry<T>>) -> Dtry<T> {
    dd.flatten()
}

pub fn path_map<T: Clone>(d: &Dtry<T>) -> PathMap<T> {
    d.path_map()
}

pub fn from_path_map<T>(map: PathMap<T>) -> Result<Dtry<T>> {
    Dtry::from_path_map(map)
}

pub fn merge_disjoint<T>(parts: NonEmptyRecord<Dtry<T>>) -> Dtry<T> {
    Dtry::merge_disjoint(parts)
}

/// A finite map from paths to values, not necessarily prefix-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathMap<T>(BTreeMap<Path, T>);

impl<T> Default for PathMap<T> {
    fn default() -> Self {
        PathMap(BTreeMap::new())
    }
}

impl<T> PathMap<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, path: Path, value: T) -> Option<T> {
        self.0.insert(path, value)
    }

    pub fn get(&self, path: &Path) -> Option<&T> {
        self.0.get(path)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Path, T> {
        self.0.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, Path, T> {
        self.0.keys()
    }

    pub fn key_set(&self) -> PathSet {
        self.0.keys().cloned().collect()
    }

    pub fn is_prefix_free(&self) -> bool {
        crate::path::is_prefix_free(&self.key_set())
    }

    pub fn as_map(&self) -> &BTreeMap<Path, T> {
        &self.0
    }

    pub fn into_map(self) -> BTreeMap<Path, T> {
        self.0
    }
}

impl<T> From<BTreeMap<Path, T>> for PathMap<T> {
    fn from(map: BTreeMap<Path, T>) -> Self {
        PathMap(map)
    }
}

impl<T> IntoIterator for PathMap<T> {
    type Item = (Path, T);
    type IntoIter = btree_map::IntoIter<Path, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

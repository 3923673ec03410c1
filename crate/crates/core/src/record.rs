use std::collections::btree_map::{self, BTreeMap};

use crate::name::Name;

/// A record with at least one field, keyed by [`Name`] in byte order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonEmptyRecord<T>(BTreeMap<Name, T>);

impl<T> NonEmptyRecord<T> {
    /// `None` when `entries` is empty.
    pub fn new(entries: BTreeMap<Name, T>) -> Option<Self> {
        if entries.is_empty() {
            None
        } else {
            Some(NonEmptyRecord(entries))
        }
    }

    pub fn singleton(key: Name, value: T) -> Self {
        NonEmptyRecord(BTreeMap::from([(key, value)]))
    }

    pub fn from_entries<I: IntoIterator<Item = (Name, T)>>(entries: I) -> Option<Self> {
        Self::new(entries.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with ordinary maps.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, key: &Name) -> Option<&T> {
        self.0.get(key)
    }

    pub fn get_mut(&mut self, key: &Name) -> Option<&mut T> {
        self.0.get_mut(key)
    }

    pub fn contains_key(&self, key: &Name) -> bool {
        self.0.contains_key(key)
    }

    /// Inserts or replaces; returns the previous value. The record stays non-empty.
    pub fn insert(&mut self, key: Name, value: T) -> Option<T> {
        self.0.insert(key, value)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Name, T> {
        self.0.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, Name, T> {
        self.0.keys()
    }

    pub fn values(&self) -> btree_map::Values<'_, Name, T> {
        self.0.values()
    }

    pub fn first(&self) -> (&Name, &T) {
        self.0.first_key_value().expect("non-empty record")
    }

    pub fn as_map(&self) -> &BTreeMap<Name, T> {
        &self.0
    }

    pub fn into_map(self) -> BTreeMap<Name, T> {
        self.0
    }

    pub fn map<U, F: FnMut(T) -> U>(self, mut f: F) -> NonEmptyRecord<U> {
        NonEmptyRecord(self.0.into_iter().map(|(k, v)| (k, f(v))).collect())
    }

    pub fn map_ref<U, F: FnMut(&T) -> U>(&self, mut f: F) -> NonEmptyRecord<U> {
        NonEmptyRecord(self.0.iter().map(|(k, v)| (k.clone(), f(v))).collect())
    }
}

impl<T> NonEmptyRecord<Option<T>> {
    /// Drops the absent fields; `None` if nothing is left.
    pub fn filter_nothings(self) -> Option<NonEmptyRecord<T>> {
        NonEmptyRecord::new(
            self.0
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k, v)))
                .collect(),
        )
    }
}

/// Free-function form of [`NonEmptyRecord::filter_nothings`].
pub fn filter_nothings<T>(record: NonEmptyRecord<Option<T>>) -> Option<NonEmptyRecord<T>> {
    record.filter_nothings()
}

impl<T> IntoIterator for NonEmptyRecord<T> {
    type Item = (Name, T);
    type IntoIter = btree_map::IntoIter<Name, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a NonEmptyRecord<T> {
    type Item = (&'a Name, &'a T);
    type IntoIter = btree_map::Iter<'a, Name, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::parse(s).unwrap()
    }

    #[test]
    fn empty_is_rejected() {
        assert!(NonEmptyRecord::<u8>::new(BTreeMap::new()).is_none());
        assert!(NonEmptyRecord::from_entries([(n("a"), 1)]).is_some());
    }

    #[test]
    fn keys_sorted() {
        let r = NonEmptyRecord::from_entries([(n("b"), 2), (n("a"), 1), (n("C"), 0)]).unwrap();
        let keys: Vec<_> = r.keys().map(Name::as_str).collect();
        assert_eq!(keys, ["C", "a", "b"]);
    }

    #[test]
    fn filter_nothings_all_absent() {
        let r = NonEmptyRecord::from_entries([(n("x"), None::<i32>), (n("y"), None)]).unwrap();
        assert_eq!(r.filter_nothings(), None);
    }

    #[test]
    fn filter_nothings_mixed() {
        let r = NonEmptyRecord::from_entries([(n("x"), Some(1)), (n("y"), None)]).unwrap();
        assert_eq!(
            r.filter_nothings(),
            Some(NonEmptyRecord::singleton(n("x"), 1))
        );
    }

    #[test]
    fn filter_nothings_all_present() {
        let r = NonEmptyRecord::from_entries([(n("x"), Some(1)), (n("y"), Some(2))]).unwrap();
        let expected = NonEmptyRecord::from_entries([(n("x"), 1), (n("y"), 2)]).unwrap();
        assert_eq!(filter_nothings(r), Some(expected));
    }
}

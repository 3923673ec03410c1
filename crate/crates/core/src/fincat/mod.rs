//! Finite categories and directory-indexed families of their objects.
//!
//! [`FinCat`] is a category given by explicit tables. [`FinSetSkel`] is the
//! skeleton of finite sets (objects are sizes, morphisms are function tables)
//! and is used as the running example: its block-sum tensor makes it a strict
//! monoidal category.
//!
//! [`DtryCat`] lifts any category `C` to the category whose objects are
//! directories of `C`-objects and whose morphisms re-index paths while
//! carrying a `C`-morphism per path. [`algebra`] evaluates such families in a
//! strict monoidal category, ordering the factors lexicographically.

use std::fmt::Debug;

pub mod algebra;
pub mod family;
pub mod finset;
pub mod table;

pub use algebra::{eval_mor, eval_obj, StrictAlgebra};
pub use family::{
    family_from_list, mu_obj, path_family, shape_with_n_leaves, DtryCat, DtryMor, NestedMor,
    Variant,
};
pub use finset::{FinSetSkel, FnTable};
pub use table::{validate_fincat, FinCat, FinCatSpec, Hom, Ob};

/// A category presented computationally. Composition is written in
/// diagrammatic order: `compose(f, g)` is "`f` then `g`".
pub trait Category {
    type Obj: Clone + Eq + Debug;
    type Mor: Clone + Eq + Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// Defined exactly when `cod(f) == dom(g)`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Option<Self::Mor>;
    fn contains_object(&self, x: &Self::Obj) -> bool;
    fn contains_morphism(&self, f: &Self::Mor) -> bool;
}

/// Categories whose hom-sets can be listed.
pub trait HomSets: Category {
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
}

impl<C: Category + ?Sized> Category for &C {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        (**self).dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        (**self).cod(f)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        (**self).identity(x)
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Option<Self::Mor> {
        (**self).compose(f, g)
    }
    fn contains_object(&self, x: &Self::Obj) -> bool {
        (**self).contains_object(x)
    }
    fn contains_morphism(&self, f: &Self::Mor) -> bool {
        (**self).contains_morphism(f)
    }
}

impl<C: HomSets + ?Sized> HomSets for &C {
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        (**self).hom(x, y)
    }
}

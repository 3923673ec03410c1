//! Evaluation of directory-indexed families in a strict monoidal category.

use crate::dtry::Dtry;
use crate::error::{Error, Result};
use crate::fincat::family::{DtryMor, NestedMor, Variant};
use crate::fincat::Category;

/// A strict symmetric monoidal structure presented without bias: tensors
/// take lists, so associativity holds by list concatenation.
pub trait StrictAlgebra: Category {
    fn unit(&self) -> Self::Obj;
    /// The empty list gives [`StrictAlgebra::unit`] and a singleton gives
    /// its element.
    fn tensor_objects(&self, xs: &[Self::Obj]) -> Self::Obj;
    fn tensor_morphisms(&self, fs: &[Self::Mor]) -> Self::Mor;
    /// The symmetry from `⊗ xs` to the tensor of the same factors
    /// rearranged so that factor `i` sits at position `perm[i]`.
    fn permute(&self, xs: &[Self::Obj], perm: &[usize]) -> Self::Mor;
}

/// The tensor of the family's objects in lexicographic path order.
pub fn eval_obj<A: StrictAlgebra>(alg: &A, x: &Dtry<A::Obj>) -> A::Obj {
    let xs: Vec<A::Obj> = x.values().cloned().collect();
    alg.tensor_objects(&xs)
}

/// Evaluates a bijective family morphism: the components tensored in source
/// order, followed by the symmetry that moves the factor for the `i`-th
/// source path to the position of its image among the target paths.
pub fn eval_mor<A: StrictAlgebra>(alg: &A, m: &DtryMor<A::Obj, A::Mor>) -> Result<A::Mor> {
    if m.variant() != Variant::Iso {
        return Err(Error::NotComposable(format!(
            "strict algebra evaluation needs the isomorphism variant, got {:?}",
            m.variant()
        )));
    }
    let dst_paths: Vec<_> = m.dst().paths().collect();
    let mut components = Vec::with_capacity(dst_paths.len());
    let mut images = Vec::with_capacity(dst_paths.len());
    let mut perm = Vec::with_capacity(dst_paths.len());
    for (p, f) in m.components() {
        let q = &m.index()[p];
        components.push(f.clone());
        images.push(
            m.dst()
                .get(q)
                .expect("index lands on a target path")
                .clone(),
        );
        perm.push(
            dst_paths
                .binary_search(q)
                .expect("index lands on a target path"),
        );
    }
    let tensored = alg.tensor_morphisms(&components);
    let symmetry = alg.permute(&images, &perm);
    alg.compose(&tensored, &symmetry).ok_or_else(|| {
        Error::NotComposable("tensored components do not meet the symmetry".to_owned())
    })
}

/// Applies the evaluation inside a directory: a morphism between
/// directories of families becomes a morphism between directories of
/// evaluated objects, with the same index map.
pub fn eval_mor_inside<A: StrictAlgebra>(
    alg: &A,
    m: &NestedMor<A::Obj, A::Mor>,
) -> Result<DtryMor<A::Obj, A::Mor>> {
    let components = m
        .components()
        .iter()
        .map(|(p, inner)| Ok((p.clone(), eval_mor(alg, inner)?)))
        .collect::<Result<_>>()?;
    DtryMor::new(
        alg,
        m.variant(),
        m.src().map_ref(|x| eval_obj(alg, x)),
        m.dst().map_ref(|x| eval_obj(alg, x)),
        m.index().clone(),
        components,
    )
}

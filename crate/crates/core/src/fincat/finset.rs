use std::fmt;

use crate::fincat::table::{CompositeSpec, FinCatSpec, MorphismSpec};
use crate::fincat::{Category, FinCat, HomSets, StrictAlgebra};

/// A function `{0..dom} -> {0..cod}` given by its table of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FnTable {
    images: Vec<usize>,
    cod: usize,
}

impl FnTable {
    /// `None` if some image is out of range.
    pub fn new(cod: usize, images: Vec<usize>) -> Option<FnTable> {
        images
            .iter()
            .all(|&i| i < cod)
            .then_some(FnTable { images, cod })
    }

    pub fn identity(n: usize) -> FnTable {
        FnTable {
            images: (0..n).collect(),
            cod: n,
        }
    }

    pub fn dom(&self) -> usize {
        self.images.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Every function `{0..dom} -> {0..cod}`, in lexicographic order of
    /// image tables.
    pub fn all(dom: usize, cod: usize) -> Vec<FnTable> {
        let mut out = Vec::new();
        if dom > 0 && cod == 0 {
            return out;
        }
        let mut images = vec![0; dom];
        loop {
            out.push(FnTable {
                images: images.clone(),
                cod,
            });
            // odometer, last position fastest
            let mut i = dom;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                images[i] += 1;
                if images[i] < cod {
                    break;
                }
                images[i] = 0;
            }
        }
    }
}

impl fmt::Debug for FnTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:{:?}", self.dom(), self.cod, self.images)
    }
}

/// The skeleton of the category of finite sets: the object `n` is the set
/// `{0..n}` and morphisms are all functions between them. Disjoint union
/// becomes addition, which is strictly associative and unital.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FinSetSkel;

impl FinSetSkel {
    /// The full subcategory on `0..=max`, as explicit tables.
    pub fn truncated(max: usize) -> FinCat {
        let objects: Vec<usize> = (0..=max).collect();
        let mut morphisms = Vec::new();
        let name = |f: &FnTable| format!("{f:?}");
        for &n in &objects {
            for &m in &objects {
                for f in FnTable::all(n, m) {
                    morphisms.push(f);
                }
            }
        }
        let mut compose = Vec::new();
        for f in &morphisms {
            for g in morphisms.iter().filter(|g| g.dom() == f.cod()) {
                let h = FinSetSkel.compose(f, g).expect("composable");
                compose.push(CompositeSpec {
                    first: name(f),
                    then: name(g),
                    result: name(&h),
                });
            }
        }
        let spec = FinCatSpec {
            objects: objects.iter().map(ToString::to_string).collect(),
            morphisms: morphisms
                .iter()
                .map(|f| MorphismSpec {
                    id: name(f),
                    dom: f.dom().to_string(),
                    cod: f.cod().to_string(),
                })
                .collect(),
            identities: objects
                .iter()
                .map(|&n| (n.to_string(), name(&FnTable::identity(n))))
                .collect(),
            compose,
        };
        FinCat::from_spec(&spec).expect("finite sets form a category")
    }
}

impl Category for FinSetSkel {
    type Obj = usize;
    type Mor = FnTable;

    fn dom(&self, f: &FnTable) -> usize {
        f.dom()
    }

    fn cod(&self, f: &FnTable) -> usize {
        f.cod
    }

    fn identity(&self, x: &usize) -> FnTable {
        FnTable::identity(*x)
    }

    fn compose(&self, f: &FnTable, g: &FnTable) -> Option<FnTable> {
        (f.cod == g.dom()).then(|| FnTable {
            images: f.images.iter().map(|&i| g.images[i]).collect(),
            cod: g.cod,
        })
    }

    fn contains_object(&self, _: &usize) -> bool {
        true
    }

    fn contains_morphism(&self, f: &FnTable) -> bool {
        f.images.iter().all(|&i| i < f.cod)
    }
}

impl HomSets for FinSetSkel {
    fn hom(&self, x: &usize, y: &usize) -> Vec<FnTable> {
        FnTable::all(*x, *y)
    }
}

/// Block sum. The symmetry moves whole blocks.
impl StrictAlgebra for FinSetSkel {
    fn unit(&self) -> usize {
        0
    }

    fn tensor_objects(&self, xs: &[usize]) -> usize {
        xs.iter().sum()
    }

    fn tensor_morphisms(&self, fs: &[FnTable]) -> FnTable {
        let mut images = Vec::with_capacity(fs.iter().map(FnTable::dom).sum());
        let mut offset = 0;
        for f in fs {
            images.extend(f.images.iter().map(|&i| i + offset));
            offset += f.cod;
        }
        FnTable {
            images,
            cod: offset,
        }
    }

    fn permute(&self, xs: &[usize], perm: &[usize]) -> FnTable {
        assert_eq!(xs.len(), perm.len(), "permutation length");
        let mut placed = vec![0; xs.len()];
        for (i, &j) in perm.iter().enumerate() {
            placed[j] = xs[i];
        }
        let mut out_offset = vec![0; xs.len()];
        let mut acc = 0;
        for (j, &size) in placed.iter().enumerate() {
            out_offset[j] = acc;
            acc += size;
        }
        let mut images = Vec::with_capacity(acc);
        for (i, &size) in xs.iter().enumerate() {
            images.extend((0..size).map(|k| out_offset[perm[i]] + k));
        }
        FnTable { images, cod: acc }
    }
}

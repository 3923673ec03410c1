use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{Category, HomSets};

/// Object of a [`FinCat`], an index into its object table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ob(pub usize);

/// Morphism of a [`FinCat`], an index into its morphism table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hom(pub usize);

/// JSON form of a finite category.
///
/// ```json
/// {
///   "objects": ["X", "Y"],
///   "morphisms": [{"id": "f", "dom": "X", "cod": "Y"}],
///   "identities": {"X": "1X", "Y": "1Y"},
///   "compose": [{"first": "f", "then": "g", "result": "h"}]
/// }
/// ```
///
/// Identity morphisms may be omitted from `morphisms`, and composites with an
/// identity may be omitted from `compose`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatSpec {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismSpec>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<CompositeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeSpec {
    pub first: String,
    pub then: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MorphismEntry {
    name: String,
    dom: Ob,
    cod: Ob,
}

/// A finite category held as explicit tables. Every value of this type has
/// passed [`validate_fincat`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorphismEntry>,
    identities: Vec<Hom>,
    composites: HashMap<(Hom, Hom), Hom>,
}

fn not_a_category(msg: impl Into<String>) -> Error {
    Error::NotACategory(msg.into())
}

impl FinCat {
    pub fn from_json(text: &str) -> Result<FinCat> {
        let spec: FinCatSpec = serde_json::from_str(text)
            .map_err(|e| not_a_category(format!("malformed category document: {e}")))?;
        FinCat::from_spec(&spec)
    }

    /// Resolves names, fills in identities and identity composites, and
    /// validates the result.
    pub fn from_spec(spec: &FinCatSpec) -> Result<FinCat> {
        let mut object_ids = HashMap::new();
        for (i, name) in spec.objects.iter().enumerate() {
            if object_ids.insert(name.as_str(), Ob(i)).is_some() {
                return Err(not_a_category(format!("duplicate object `{name}`")));
            }
        }
        let object = |name: &str| {
            object_ids
                .get(name)
                .copied()
                .ok_or_else(|| not_a_category(format!("unknown object `{name}`")))
        };

        let mut morphisms = Vec::new();
        let mut morphism_ids: HashMap<String, Hom> = HashMap::new();
        for m in &spec.morphisms {
            if morphism_ids.contains_key(&m.id) {
                return Err(not_a_category(format!("duplicate morphism `{}`", m.id)));
            }
            morphism_ids.insert(m.id.clone(), Hom(morphisms.len()));
            morphisms.push(MorphismEntry {
                name: m.id.clone(),
                dom: object(&m.dom)?,
                cod: object(&m.cod)?,
            });
        }

        let mut identities = Vec::with_capacity(spec.objects.len());
        for (i, name) in spec.objects.iter().enumerate() {
            let id_name = spec
                .identities
                .get(name)
                .ok_or_else(|| not_a_category(format!("object `{name}` has no identity")))?;
            let id = match morphism_ids.get(id_name) {
                Some(&h) => h,
                None => {
                    let h = Hom(morphisms.len());
                    morphism_ids.insert(id_name.clone(), h);
                    morphisms.push(MorphismEntry {
                        name: id_name.clone(),
                        dom: Ob(i),
                        cod: Ob(i),
                    });
                    h
                }
            };
            identities.push(id);
        }
        for name in spec.identities.keys() {
            object(name)?;
        }

        let morphism = |name: &str| {
            morphism_ids
                .get(name)
                .copied()
                .ok_or_else(|| not_a_category(format!("unknown morphism `{name}`")))
        };
        let mut composites = HashMap::new();
        for c in &spec.compose {
            let key = (morphism(&c.first)?, morphism(&c.then)?);
            if composites.insert(key, morphism(&c.result)?).is_some() {
                return Err(not_a_category(format!(
                    "composite of `{}` then `{}` given twice",
                    c.first, c.then
                )));
            }
        }
        for (f, entry) in morphisms.iter().enumerate() {
            // Explicit entries win; disagreements surface as identity-law failures.
            let dom_id = identities[entry.dom.0];
            let cod_id = identities[entry.cod.0];
            if morphisms[dom_id.0].dom == entry.dom {
                composites.entry((dom_id, Hom(f))).or_insert(Hom(f));
            }
            if morphisms[cod_id.0].cod == entry.cod {
                composites.entry((Hom(f), cod_id)).or_insert(Hom(f));
            }
        }

        let cat = FinCat {
            objects: spec.objects.clone(),
            morphisms,
            identities,
            composites,
        };
        validate_fincat(&cat)?;
        Ok(cat)
    }

    /// The inverse of [`FinCat::from_spec`], listing every composite.
    pub fn to_spec(&self) -> FinCatSpec {
        let mut compose: Vec<_> = self
            .composites
            .iter()
            .map(|(&(f, g), &h)| CompositeSpec {
                first: self.morphism_name(f).to_owned(),
                then: self.morphism_name(g).to_owned(),
                result: self.morphism_name(h).to_owned(),
            })
            .collect();
        compose.sort_by(|a, b| (&a.first, &a.then).cmp(&(&b.first, &b.then)));
        FinCatSpec {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismSpec {
                    id: m.name.clone(),
                    dom: self.object_name(m.dom).to_owned(),
                    cod: self.object_name(m.cod).to_owned(),
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(i, h)| (self.objects[i].clone(), self.morphism_name(*h).to_owned()))
                .collect(),
            compose,
        }
    }

    pub fn objects(&self) -> impl Iterator<Item = Ob> + '_ {
        (0..self.objects.len()).map(Ob)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Hom> + '_ {
        (0..self.morphisms.len()).map(Hom)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object(&self, name: &str) -> Option<Ob> {
        self.objects.iter().position(|o| o == name).map(Ob)
    }

    pub fn morphism(&self, name: &str) -> Option<Hom> {
        self.morphisms.iter().position(|m| m.name == name).map(Hom)
    }

    pub fn object_name(&self, x: Ob) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: Hom) -> &str {
        &self.morphisms[f.0].name
    }
}

/// Checks the category axioms over the full tables: composites exist
/// exactly for composable pairs and are well-typed, identities are units,
/// and composition is associative on every composable triple.
pub fn validate_fincat(cat: &FinCat) -> Result<()> {
    let name = |f: Hom| cat.morphism_name(f);
    let obj = |x: Ob| cat.object_name(x);
    let n_obj = cat.objects.len();
    let n_mor = cat.morphisms.len();
    if cat.identities.len() != n_obj {
        return Err(not_a_category("identity table does not cover every object"));
    }
    for m in &cat.morphisms {
        if m.dom.0 >= n_obj || m.cod.0 >= n_obj {
            return Err(not_a_category(format!(
                "`{}` has an unknown endpoint",
                m.name
            )));
        }
    }
    for (&(f, g), &h) in &cat.composites {
        if f.0 >= n_mor || g.0 >= n_mor || h.0 >= n_mor {
            return Err(not_a_category(
                "composition table names an unknown morphism",
            ));
        }
        let (mf, mg, mh) = (
            &cat.morphisms[f.0],
            &cat.morphisms[g.0],
            &cat.morphisms[h.0],
        );
        if mf.cod != mg.dom {
            return Err(not_a_category(format!(
                "composite given for non-composable pair (`{}`, `{}`)",
                name(f),
                name(g)
            )));
        }
        if mh.dom != mf.dom || mh.cod != mg.cod {
            return Err(not_a_category(format!(
                "`{}` then `{}` = `{}` has the wrong type: expected {} -> {}, got {} -> {}",
                name(f),
                name(g),
                name(h),
                obj(mf.dom),
                obj(mg.cod),
                obj(mh.dom),
                obj(mh.cod)
            )));
        }
    }
    for (x, &id) in cat.identities.iter().enumerate() {
        let m = &cat.morphisms[id.0];
        if m.dom != Ob(x) || m.cod != Ob(x) {
            return Err(not_a_category(format!(
                "identity `{}` of `{}` is not an endomorphism of it",
                name(id),
                obj(Ob(x))
            )));
        }
    }
    let mut by_dom: Vec<Vec<Hom>> = vec![Vec::new(); n_obj];
    for f in cat.morphisms() {
        by_dom[cat.morphisms[f.0].dom.0].push(f);
    }
    for f in cat.morphisms() {
        for &g in &by_dom[cat.morphisms[f.0].cod.0] {
            if !cat.composites.contains_key(&(f, g)) {
                return Err(not_a_category(format!(
                    "no composite for `{}` then `{}`",
                    name(f),
                    name(g)
                )));
            }
        }
    }
    for f in cat.morphisms() {
        let MorphismEntry { dom, cod, .. } = cat.morphisms[f.0];
        let (id_dom, id_cod) = (cat.identities[dom.0], cat.identities[cod.0]);
        if cat.composites[&(id_dom, f)] != f || cat.composites[&(f, id_cod)] != f {
            return Err(not_a_category(format!(
                "identity law fails for `{}` (with `{}` and `{}`)",
                name(f),
                name(id_dom),
                name(id_cod)
            )));
        }
    }
    for f in cat.morphisms() {
        for &g in &by_dom[cat.morphisms[f.0].cod.0] {
            let fg = cat.composites[&(f, g)];
            for &h in &by_dom[cat.morphisms[g.0].cod.0] {
                let left = cat.composites[&(fg, h)];
                let right = cat.composites[&(f, cat.composites[&(g, h)])];
                if left != right {
                    return Err(not_a_category(format!(
                        "associativity fails for (`{}`, `{}`, `{}`): `{}` vs `{}`",
                        name(f),
                        name(g),
                        name(h),
                        name(left),
                        name(right)
                    )));
                }
            }
        }
    }
    Ok(())
}

impl Category for FinCat {
    type Obj = Ob;
    type Mor = Hom;

    fn dom(&self, f: &Hom) -> Ob {
        self.morphisms[f.0].dom
    }

    fn cod(&self, f: &Hom) -> Ob {
        self.morphisms[f.0].cod
    }

    fn identity(&self, x: &Ob) -> Hom {
        self.identities[x.0]
    }

    fn compose(&self, f: &Hom, g: &Hom) -> Option<Hom> {
        self.composites.get(&(*f, *g)).copied()
    }

    fn contains_object(&self, x: &Ob) -> bool {
        x.0 < self.objects.len()
    }

    fn contains_morphism(&self, f: &Hom) -> bool {
        f.0 < self.morphisms.len()
    }
}

impl HomSets for FinCat {
    fn hom(&self, x: &Ob, y: &Ob) -> Vec<Hom> {
        self.morphisms()
            .filter(|f| self.dom(f) == *x && self.cod(f) == *y)
            .collect()
    }
}

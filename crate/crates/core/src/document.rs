//! Input documents.
//!
//! A document is one TOML file:
//!
//! ```toml
//! format_version = "1"
//!
//! [meta]
//! name = "hexagon"
//! expect = "pass"            # or "obstruction"
//!
//! [complexes.X]
//! generators = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]
//!
//! [sets.pt]
//! complex = "X"
//! tag = "closed"             # closed | open | any
//! generators = [[0]]         # closure of these simplices
//! # simplices = [[0, 1]]     # exact open cells
//! # whole = true             # every cell of the complex
//! # minus = ["other"]        # remove the cells of other sets
//!
//! [families.point]
//! complex = "X"
//! members = ["pt"]
//! nested = true
//! algebraic = true
//!
//! [stratifications.S]
//! complex = "X"
//! families = ["point"]       # audited for constancy along the strata
//! strata = [
//!   { name = "pt", set = "pt", irreducible = true },
//!   { name = "rest", set = "rest", irreducible = true },
//! ]
//!
//! [functions.one]
//! complex = "X"
//! algebraic = true
//! terms = [{ coeff = 1, set = "all" }]
//!
//! [polynomials.cusp]
//! weights = [3, 2]
//! degree = 6
//! terms = [{ x = 2, y = 0, coeff = "1" }, { x = 0, y = 3, coeff = "1" }]
//!
//! [compactifications.line]
//! complex = "X"
//! infinity = 3
//! family = "point"
//! ```
//!
//! Every declared property (closedness, openness, nesting, partition) is
//! checked again when the document is resolved.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::complex::{barycentric_subdivision, Complex, ConstructibleSet, Simplex, Vertex};
use crate::congruence::{OrderedFamily, Stratification, Stratum};
use crate::constructible::ConstructibleFunction;
use crate::error::{Error, Result};
use crate::monodromy::WeightedPoly;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format_version: String,
    #[serde(default)]
    pub meta: Meta,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub complexes: BTreeMap<String, ComplexSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, SetSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub families: BTreeMap<String, FamilySpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub stratifications: BTreeMap<String, StratificationSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functions: BTreeMap<String, FunctionSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, PolySpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub compactifications: BTreeMap<String, CompactificationSpec>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    #[default]
    Pass,
    Obstruction,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(default)]
    pub expect: Expect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub generators: Vec<Vec<Vertex>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    Closed,
    Open,
    Any,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSpec {
    pub complex: String,
    pub tag: Tag,
    #[serde(default, skip_serializing_if = "is_false")]
    pub whole: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub simplices: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minus: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub complex: String,
    pub members: Vec<String>,
    pub nested: bool,
    #[serde(default = "yes")]
    pub algebraic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub name: String,
    pub set: String,
    #[serde(default)]
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratificationSpec {
    pub complex: String,
    pub strata: Vec<StratumSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub families: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: i64,
    pub set: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    pub complex: String,
    #[serde(default)]
    pub algebraic: bool,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialSpec {
    pub x: u32,
    pub y: u32,
    /// Integer or fraction, e.g. `"-3/2"`.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySpec {
    pub weights: [u32; 2],
    pub degree: u32,
    pub terms: Vec<MonomialSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompactificationSpec {
    pub complex: String,
    pub infinity: Vertex,
    pub family: String,
}

fn is_false(b: &bool) -> bool {
    !*b
}

fn yes() -> bool {
    true
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let doc: Document =
            toml::from_str(text).map_err(|e| Error::input(format!("malformed document: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::input(format!(
                "unsupported format_version {:?} (expected {FORMAT_VERSION:?})",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("documents always serialize")
    }

    pub fn resolve(&self) -> Result<Resolved> {
        Resolved::new(self, 0)
    }
}

/// A document with every reference resolved and every tag checked.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub document: Document,
    pub complexes: BTreeMap<String, Arc<Complex>>,
    pub sets: BTreeMap<String, ConstructibleSet>,
    pub families: BTreeMap<String, OrderedFamily>,
    pub stratifications: BTreeMap<String, Stratification>,
    /// Function and its algebraic flag.
    pub functions: BTreeMap<String, (ConstructibleFunction, bool)>,
    pub polynomials: BTreeMap<String, WeightedPoly>,
    /// Family name and the vertex at infinity.
    pub compactifications: BTreeMap<String, (String, Vertex)>,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, what: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| Error::input(format!("unknown {what} {name:?}")))
}

fn simplices(gens: &[Vec<Vertex>]) -> Result<Vec<Simplex>> {
    gens.iter().map(|g| Simplex::new(g.clone())).collect()
}

impl Resolved {
    /// Resolves the document after `subdivide` barycentric subdivisions of
    /// every complex.
    pub fn new(doc: &Document, subdivide: usize) -> Result<Resolved> {
        let mut complexes = BTreeMap::new();
        for (name, spec) in &doc.complexes {
            complexes.insert(
                name.clone(),
                Arc::new(Complex::build(spec.generators.clone())?),
            );
        }

        let mut sets = BTreeMap::new();
        let mut visiting = BTreeSet::new();
        for name in doc.sets.keys() {
            resolve_set(doc, name, &complexes, &mut sets, &mut visiting)?;
        }

        // Vertex relabelling through the subdivisions, per complex.
        let mut vertex_maps: BTreeMap<String, BTreeMap<Vertex, Vertex>> = complexes
            .iter()
            .map(|(n, c)| (n.clone(), c.vertices().iter().map(|v| (*v, *v)).collect()))
            .collect();
        for _ in 0..subdivide {
            for (name, cx) in complexes.iter_mut() {
                let sd = barycentric_subdivision(cx);
                for (set_name, set) in sets.iter_mut() {
                    if doc.sets[set_name].complex == *name {
                        *set = sd.transport(set);
                    }
                }
                for v in vertex_maps.get_mut(name).unwrap().values_mut() {
                    *v = sd
                        .vertex_for(&Simplex::vertex(*v))
                        .expect("vertex survives");
                }
                *cx = sd.target.clone();
            }
        }

        let set_in = |name: &str, complex: &str| -> Result<ConstructibleSet> {
            let s = lookup(&sets, name, "set")?;
            if doc.sets[name].complex != complex {
                return Err(Error::input(format!(
                    "set {name:?} is not in complex {complex:?}"
                )));
            }
            Ok(s.clone())
        };

        let mut families = BTreeMap::new();
        for (name, spec) in &doc.families {
            let cx = lookup(&complexes, &spec.complex, "complex")?;
            let members = spec
                .members
                .iter()
                .map(|m| set_in(m, &spec.complex))
                .collect::<Result<Vec<_>>>()?;
            let flags = vec![spec.algebraic; members.len()];
            let family = OrderedFamily::new(cx.clone(), members, flags)
                .map_err(|e| Error::input(format!("family {name:?}: {e}")))?;
            if family.is_nested() != spec.nested {
                return Err(Error::input(format!(
                    "family {name:?} declares nested = {} but is {}nested",
                    spec.nested,
                    if family.is_nested() { "" } else { "not " }
                )));
            }
            families.insert(name.clone(), family);
        }

        let mut stratifications = BTreeMap::new();
        for (name, spec) in &doc.stratifications {
            let cx = lookup(&complexes, &spec.complex, "complex")?;
            let strata = spec
                .strata
                .iter()
                .map(|s| {
                    Ok(Stratum {
                        name: s.name.clone(),
                        set: set_in(&s.set, &spec.complex)?,
                        irreducible: s.irreducible,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let names: BTreeSet<&String> = spec.strata.iter().map(|s| &s.name).collect();
            if names.len() != spec.strata.len() {
                return Err(Error::input(format!(
                    "stratification {name:?} repeats a stratum name"
                )));
            }
            for f in &spec.families {
                lookup(&families, f, "family")?;
                if doc.families[f].complex != spec.complex {
                    return Err(Error::input(format!(
                        "family {f:?} is not in complex {:?}",
                        spec.complex
                    )));
                }
            }
            let strat = Stratification::new(cx.clone(), strata)
                .map_err(|e| Error::input(format!("stratification {name:?}: {e}")))?;
            stratifications.insert(name.clone(), strat);
        }

        let mut functions = BTreeMap::new();
        for (name, spec) in &doc.functions {
            let cx = lookup(&complexes, &spec.complex, "complex")?;
            let terms = spec
                .terms
                .iter()
                .map(|t| Ok((t.coeff, set_in(&t.set, &spec.complex)?)))
                .collect::<Result<Vec<_>>>()?;
            let phi = ConstructibleFunction::from_indicators(cx.clone(), &terms)
                .map_err(|e| Error::input(format!("function {name:?}: {e}")))?;
            functions.insert(name.clone(), (phi, spec.algebraic));
        }

        let mut polynomials = BTreeMap::new();
        for (name, spec) in &doc.polynomials {
            let terms = spec
                .terms
                .iter()
                .map(|t| {
                    let c: BigRational = t.coeff.trim().parse().map_err(|_| {
                        Error::input(format!(
                            "polynomial {name:?}: bad coefficient {:?}",
                            t.coeff
                        ))
                    })?;
                    Ok(((t.x, t.y), c))
                })
                .collect::<Result<Vec<_>>>()?;
            let f = WeightedPoly::new((spec.weights[0], spec.weights[1]), spec.degree, terms)
                .map_err(|e| Error::input(format!("polynomial {name:?}: {e}")))?;
            crate::monodromy::validate(&f)
                .map_err(|e| Error::input(format!("polynomial {name:?}: {e}")))?;
            polynomials.insert(name.clone(), f);
        }

        let mut compactifications = BTreeMap::new();
        for (name, spec) in &doc.compactifications {
            let map = lookup(&vertex_maps, &spec.complex, "complex")?;
            let inf = *map.get(&spec.infinity).ok_or_else(|| {
                Error::input(format!(
                    "compactification {name:?}: no vertex {}",
                    spec.infinity
                ))
            })?;
            lookup(&families, &spec.family, "family")?;
            if doc.families[&spec.family].complex != spec.complex {
                return Err(Error::input(format!(
                    "compactification {name:?}: family {:?} is not in complex {:?}",
                    spec.family, spec.complex
                )));
            }
            compactifications.insert(name.clone(), (spec.family.clone(), inf));
        }

        Ok(Resolved {
            document: doc.clone(),
            complexes,
            sets,
            families,
            stratifications,
            functions,
            polynomials,
            compactifications,
        })
    }

    /// Complex a named family lives in.
    pub fn family_complex(&self, family: &str) -> Option<&str> {
        self.document
            .families
            .get(family)
            .map(|f| f.complex.as_str())
    }

    pub fn set(&self, name: &str) -> Result<&ConstructibleSet> {
        lookup(&self.sets, name, "set")
    }

    pub fn complex(&self, name: &str) -> Result<&Arc<Complex>> {
        lookup(&self.complexes, name, "complex")
    }

    pub fn family(&self, name: &str) -> Result<&OrderedFamily> {
        lookup(&self.families, name, "family")
    }

    pub fn polynomial(&self, name: &str) -> Result<&WeightedPoly> {
        lookup(&self.polynomials, name, "polynomial")
    }
}

fn resolve_set(
    doc: &Document,
    name: &str,
    complexes: &BTreeMap<String, Arc<Complex>>,
    out: &mut BTreeMap<String, ConstructibleSet>,
    visiting: &mut BTreeSet<String>,
) -> Result<ConstructibleSet> {
    if let Some(s) = out.get(name) {
        return Ok(s.clone());
    }
    let spec = lookup(&doc.sets, name, "set")?;
    if !visiting.insert(name.to_string()) {
        return Err(Error::input(format!(
            "set {name:?} is defined in terms of itself"
        )));
    }
    let cx = lookup(complexes, &spec.complex, "complex")?;
    let mut set = if spec.whole {
        ConstructibleSet::whole(cx.clone())
    } else {
        ConstructibleSet::empty(cx.clone())
    };
    let closed = ConstructibleSet::closed_from_generators(cx.clone(), spec.generators.clone())
        .map_err(|e| Error::input(format!("set {name:?}: {e}")))?;
    let cells = ConstructibleSet::new(
        cx.clone(),
        simplices(&spec.simplices)?.into_iter().collect(),
    )
    .map_err(|e| Error::input(format!("set {name:?}: {e}")))?;
    set = set.union(&closed).union(&cells);
    for other in &spec.minus {
        let o = resolve_set(doc, other, complexes, out, visiting)?;
        if doc.sets[other].complex != spec.complex {
            return Err(Error::input(format!(
                "set {other:?} is not in complex {:?}",
                spec.complex
            )));
        }
        set = set.difference(&o);
    }
    let ok = match spec.tag {
        Tag::Closed => set.is_closed(),
        Tag::Open => set.is_open(),
        Tag::Any => true,
    };
    if !ok {
        return Err(Error::input(
            format!("set {name:?} is not {:?}", spec.tag).to_lowercase(),
        ));
    }
    visiting.remove(name);
    out.insert(name.to_string(), set.clone());
    Ok(set)
}

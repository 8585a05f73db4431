//! Combinatorial links.
//!
//! The link of a closed full subcomplex `Y ⊆ X` is modelled by the frontier of
//! its derived neighbourhood: the order complex of
//! `P = {σ ∈ X : σ ∉ Y, σ has a vertex in Y}`. A point of the frontier lying
//! on the open chain `σ_0 < … < σ_m` sits in the open cell of `σ_m`, which is
//! how traces of other sets are read off.
//!
//! Iterated links fold this construction: each stage is the link of a marked
//! full subcomplex of the previous stage's link. No scale parameters appear;
//! the order of the stages is the order of the family.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::complex::{
    barycentric_subdivision, boundary_sphere_chi, join_chi, order_complex, Complex,
    ConstructibleSet, Simplex, SubdivisionMap, Vertex,
};
use crate::congruence::OrderedFamily;
use crate::error::{Error, Result};

/// A compact link together with traces of other sets on it.
#[derive(Clone, Debug)]
pub struct LinkModel {
    pub complex: Arc<Complex>,
    /// Complex whose simplices label the vertices of `complex`.
    pub source: Arc<Complex>,
    /// `elements[v]` is the simplex of `source` that vertex `v` stands for.
    pub elements: Vec<Simplex>,
    /// Vertex sets of marked full subcomplexes.
    pub markings: BTreeMap<String, BTreeSet<Vertex>>,
    /// Subdivision applied to the original input before the first stage.
    pub subdivision: Option<SubdivisionMap>,
    pub provenance: Vec<String>,
}

impl LinkModel {
    fn empty(source: Arc<Complex>, subdivision: Option<SubdivisionMap>, note: String) -> Self {
        LinkModel {
            complex: Arc::new(Complex::empty()),
            source,
            elements: Vec::new(),
            markings: BTreeMap::new(),
            subdivision,
            provenance: vec![note],
        }
    }

    pub fn chi(&self) -> i64 {
        self.complex.euler_characteristic()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    /// The marked full subcomplex, if the label exists.
    pub fn marking(&self, label: &str) -> Option<ConstructibleSet> {
        self.markings
            .get(label)
            .map(|vs| ConstructibleSet::full_on(self.complex.clone(), vs))
    }

    /// Part of the link lying in `u`: open chains whose top element is a
    /// carrier of `u`. `u` may live in the original input complex when the
    /// first stage subdivided it.
    pub fn trace(&self, u: &ConstructibleSet) -> Result<ConstructibleSet> {
        let u = if **u.parent() == *self.source {
            u.clone()
        } else {
            match &self.subdivision {
                Some(sd) if **u.parent() == *sd.source => sd.transport(u),
                _ => {
                    return Err(Error::input(
                        "set does not live in the link's source complex",
                    ))
                }
            }
        };
        let carriers = self
            .complex
            .iter()
            .filter(|c| {
                let top = *c.vertices().last().expect("nonempty");
                u.contains(&self.elements[top as usize])
            })
            .cloned()
            .collect();
        Ok(ConstructibleSet::new_unchecked(
            self.complex.clone(),
            carriers,
        ))
    }

    /// Transports a vertex of the original input to the complex the first
    /// stage was built on.
    pub fn source_vertex(&self, v: Vertex) -> Option<Vertex> {
        match &self.subdivision {
            Some(sd) => sd.vertex_for(&Simplex::vertex(v)),
            None => self.source.has_vertex(v).then_some(v),
        }
    }
}

/// `lk(v; K) = {σ : v ∉ σ, σ ∪ {v} ∈ K}`.
pub fn vertex_link(v: Vertex, k: &Complex) -> Result<Complex> {
    if !k.has_vertex(v) {
        return Err(Error::input(format!("vertex {v} is not in the complex")));
    }
    k.link_of(&Simplex::vertex(v))
}

/// `χ(lk(x; K))` for `x` in the open cell of `σ`, via `lk(x;K) ≅ ∂σ * lk(σ;K)`.
pub fn point_link_chi(sigma: &Simplex, k: &Complex) -> Result<i64> {
    let lk = k.link_of(sigma)?;
    Ok(join_chi(
        boundary_sphere_chi(sigma.dim()),
        lk.euler_characteristic(),
    ))
}

/// Link of the vertex `v` in an arbitrary union of open cells, as a
/// constructible subset of `lk(v; parent)`.
pub fn point_link_constructible(v: Vertex, set: &ConstructibleSet) -> Result<ConstructibleSet> {
    let lk = Arc::new(vertex_link(v, set.parent())?);
    let carriers = set
        .carriers()
        .iter()
        .filter(|s| s.contains(v))
        .filter_map(|s| s.without(v))
        .collect();
    ConstructibleSet::new(lk, carriers)
}

/// Euler characteristic of `B(v, ε) ∩ U` for small `ε`.
///
/// This is the set of carriers of `U` that contain `v`. It is contractible
/// when `v ∈ U` and homotopy equivalent to the link of `v` in `U` otherwise.
pub fn local_chi(v: Vertex, set: &ConstructibleSet) -> i64 {
    let near: BTreeSet<Simplex> = set
        .carriers()
        .iter()
        .filter(|s| s.contains(v))
        .cloned()
        .collect();
    crate::complex::poset_chi(&near)
}

/// Subdivides once if any of the closed sets is not full.
pub(crate) fn ensure_full(
    parent: &Arc<Complex>,
    sets: &[&ConstructibleSet],
) -> (Option<SubdivisionMap>, Arc<Complex>, Vec<ConstructibleSet>) {
    if sets.iter().all(|s| s.is_full()) {
        return (
            None,
            parent.clone(),
            sets.iter().map(|s| (*s).clone()).collect(),
        );
    }
    let sd = barycentric_subdivision(parent);
    let moved = sets.iter().map(|s| sd.transport(s)).collect();
    let target = sd.target.clone();
    (Some(sd), target, moved)
}

/// One link stage over a vertex-set description: link of the full
/// subcomplex on `core` in `complex`, optionally localized at `at`.
fn link_stage(
    complex: &Arc<Complex>,
    core: &BTreeSet<Vertex>,
    traces: &BTreeMap<String, BTreeSet<Vertex>>,
    at: Option<Vertex>,
) -> (
    Arc<Complex>,
    Vec<Simplex>,
    BTreeMap<String, BTreeSet<Vertex>>,
) {
    let poset = complex.iter().filter(|s| {
        at.is_none_or(|v| s.contains(v))
            && s.vertices().iter().any(|v| core.contains(v))
            && s.vertices().iter().any(|v| !core.contains(v))
    });
    let oc = order_complex(poset.cloned());
    let markings = traces
        .iter()
        .map(|(label, verts)| {
            let marked = oc
                .elements
                .iter()
                .enumerate()
                .filter(|(_, s)| s.vertices().iter().all(|v| verts.contains(v)))
                .map(|(i, _)| i as Vertex)
                .collect();
            (label.clone(), marked)
        })
        .collect();
    (oc.complex, oc.elements, markings)
}

fn check_closed_in(set: &ConstructibleSet, x: &Arc<Complex>, what: &str) -> Result<()> {
    if **set.parent() != **x {
        return Err(Error::input(format!(
            "{what} is not a subset of the ambient complex"
        )));
    }
    if !set.is_closed() {
        return Err(Error::input(format!("{what} is not closed")));
    }
    Ok(())
}

/// `lk(Y; X)` with traces `lk(Y; Z)` for each labelled closed `Z`.
///
/// Subdivides once when `Y` or a trace is not full.
pub fn subcomplex_link(
    y: &ConstructibleSet,
    traces: &[(String, ConstructibleSet)],
) -> Result<LinkModel> {
    let x = y.parent().clone();
    check_closed_in(y, &x, "Y")?;
    for (label, z) in traces {
        check_closed_in(z, &x, label)?;
    }
    let mut sets = vec![y];
    sets.extend(traces.iter().map(|(_, z)| z));
    let (subdivision, source, moved) = ensure_full(&x, &sets);
    let core = moved[0].vertex_set();
    let marks = traces
        .iter()
        .zip(&moved[1..])
        .map(|((label, _), z)| (label.clone(), z.vertex_set()))
        .collect();
    let (complex, elements, markings) = link_stage(&source, &core, &marks, None);
    let mut provenance = Vec::new();
    if subdivision.is_some() {
        provenance.push("barycentric subdivision for fullness".to_string());
    }
    provenance.push(format!("link of {} cells", moved[0].len()));
    Ok(LinkModel {
        complex,
        source,
        elements,
        markings,
        subdivision,
        provenance,
    })
}

/// Localization at the vertex `v` of `lk(Y; X)`: the positive Milnor fibre of
/// a defining function of `Y` at `v`. Empty when `v ∉ Y`.
pub fn localized_link(
    v: Vertex,
    y: &ConstructibleSet,
    traces: &[(String, ConstructibleSet)],
) -> Result<LinkModel> {
    let x = y.parent().clone();
    check_closed_in(y, &x, "Y")?;
    if !x.has_vertex(v) {
        return Err(Error::input(format!("vertex {v} is not in the complex")));
    }
    for (label, z) in traces {
        check_closed_in(z, &x, label)?;
    }
    let mut sets = vec![y];
    sets.extend(traces.iter().map(|(_, z)| z));
    let (subdivision, source, moved) = ensure_full(&x, &sets);
    let local_v = match &subdivision {
        Some(sd) => sd
            .vertex_for(&Simplex::vertex(v))
            .expect("vertex transported"),
        None => v,
    };
    let core = moved[0].vertex_set();
    if !core.contains(&local_v) {
        return Ok(LinkModel::empty(
            source,
            subdivision,
            format!("vertex {v} is off Y"),
        ));
    }
    let marks = traces
        .iter()
        .zip(&moved[1..])
        .map(|((label, _), z)| (label.clone(), z.vertex_set()))
        .collect();
    let (complex, elements, markings) = link_stage(&source, &core, &marks, Some(local_v));
    let mut provenance = Vec::new();
    if subdivision.is_some() {
        provenance.push("barycentric subdivision for fullness".to_string());
    }
    provenance.push(format!(
        "link of {} cells localized at vertex {v}",
        moved[0].len()
    ));
    Ok(LinkModel {
        complex,
        source,
        elements,
        markings,
        subdivision,
        provenance,
    })
}

fn member_label(i: usize) -> String {
    format!("X{}", i + 1)
}

fn fold_stages(mut model: LinkModel, k: usize) -> LinkModel {
    for i in 1..k {
        let label = member_label(i);
        let core = model.markings.remove(&label).unwrap_or_default();
        let (complex, elements, markings) =
            link_stage(&model.complex, &core, &model.markings, None);
        model
            .provenance
            .push(format!("stage {}: link of {label}", i + 1));
        model.source = model.complex;
        model.complex = complex;
        model.elements = elements;
        model.markings = markings;
    }
    model
}

fn nested_traces(family: &OrderedFamily) -> Result<Vec<(String, ConstructibleSet)>> {
    if !family.is_nested() {
        return Err(Error::Unsupported(
            "iterated links are only built for nested families".into(),
        ));
    }
    Ok(family
        .members()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, m)| (member_label(i), m.clone()))
        .collect())
}

/// Iterated link `lk(X_1, …, X_k; X)` of a nested family.
///
/// The empty family yields the empty link.
pub fn iterated_link(family: &OrderedFamily) -> Result<LinkModel> {
    let traces = nested_traces(family)?;
    let Some(first) = family.members().first() else {
        return Ok(LinkModel::empty(
            family.parent().clone(),
            None,
            "empty family".into(),
        ));
    };
    let model = subcomplex_link(first, &traces)?;
    Ok(fold_stages(model, family.k()))
}

/// Localized iterated link at the vertex `v`: the first stage is localized,
/// later stages are ordinary links inside the previous stage.
pub fn localized_iterated_link(v: Vertex, family: &OrderedFamily) -> Result<LinkModel> {
    let traces = nested_traces(family)?;
    let Some(first) = family.members().first() else {
        return Ok(LinkModel::empty(
            family.parent().clone(),
            None,
            "empty family".into(),
        ));
    };
    let model = localized_link(v, first, &traces)?;
    Ok(fold_stages(model, family.k()))
}

/// Derived (regular) neighbourhood of a closed `Y`: the closed subcomplex of
/// the subdivision spanned by barycenters of simplices meeting `Y`.
///
/// When `Y` is not full, a preliminary subdivision is applied first; the
/// returned set then lives in the second subdivision.
pub fn derived_neighborhood(y: &ConstructibleSet) -> Result<ConstructibleSet> {
    let x = y.parent().clone();
    check_closed_in(y, &x, "Y")?;
    let (_, base, moved) = ensure_full(&x, &[y]);
    let core = moved[0].vertex_set();
    let sd = barycentric_subdivision(&base);
    let near: BTreeSet<Vertex> = (0..sd.carriers.len() as Vertex)
        .filter(|&v| sd.carrier_of(v).vertices().iter().any(|w| core.contains(w)))
        .collect();
    Ok(ConstructibleSet::full_on(sd.target.clone(), &near))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builders;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn set(x: &Arc<Complex>, gens: &[&[Vertex]]) -> ConstructibleSet {
        ConstructibleSet::closed_from_generators(x.clone(), gens.iter().map(|g| g.to_vec()))
            .unwrap()
    }

    #[test]
    fn vertex_link_examples() {
        let s2 = builders::tetrahedron_boundary();
        assert_eq!(vertex_link(0, &s2).unwrap().euler_characteristic(), 0);
        let theta = builders::theta_cone();
        let apex = builders::THETA_APEX;
        assert_eq!(
            vertex_link(apex, &theta).unwrap().euler_characteristic(),
            -1
        );
        let pts = Complex::build(vec![vec![0], vec![1, 2]]).unwrap();
        assert!(vertex_link(0, &pts).unwrap().is_empty());
        assert!(vertex_link(9, &pts).is_err());
    }

    #[test]
    fn point_link_chi_examples() {
        let oct = builders::octahedron();
        assert_eq!(point_link_chi(&s(&[0, 2]), &oct).unwrap(), 0);
        assert_eq!(point_link_chi(&s(&[0, 2, 4]), &oct).unwrap(), 0);
        let tet = Complex::build(vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(point_link_chi(&s(&[0, 1, 2, 3]), &tet).unwrap(), 2);
        let path = Complex::build(vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(point_link_chi(&s(&[0, 1]), &path).unwrap(), 2);
    }

    #[test]
    fn point_link_of_open_triangle() {
        let tri = Arc::new(Complex::build(vec![vec![0, 1, 2]]).unwrap());
        let open = ConstructibleSet::new(tri.clone(), [s(&[0, 1, 2])].into()).unwrap();
        let lk = point_link_constructible(0, &open).unwrap();
        assert_eq!(
            lk.carriers().iter().cloned().collect::<Vec<_>>(),
            vec![s(&[1, 2])]
        );
        assert_eq!(lk.chi(), 1);

        let closed = ConstructibleSet::whole(tri.clone());
        let lk = point_link_constructible(0, &closed).unwrap();
        assert_eq!(
            lk.chi(),
            vertex_link(0, &tri).unwrap().euler_characteristic()
        );

        let far = ConstructibleSet::new(tri.clone(), [s(&[1, 2])].into()).unwrap();
        assert!(point_link_constructible(0, &far).unwrap().is_empty());
    }

    #[test]
    fn subcomplex_link_examples() {
        let s2 = Arc::new(builders::tetrahedron_boundary());
        let lk = subcomplex_link(&set(&s2, &[&[0]]), &[]).unwrap();
        assert_eq!(lk.chi(), 0);

        // Closed two-edge arc in the hexagon circle.
        let hex = Arc::new(builders::hexagon());
        let lk = subcomplex_link(&set(&hex, &[&[0, 1], &[1, 2]]), &[]).unwrap();
        assert_eq!(lk.complex.f_vector(), vec![2]);

        let oct = Arc::new(builders::octahedron());
        let equator = set(&oct, builders::OCTAHEDRON_EQUATOR);
        let lk = subcomplex_link(&equator, &[]).unwrap();
        assert_eq!(lk.chi(), 0);
        // Two disjoint circles: every vertex has degree 2 and there are two components.
        assert_eq!(lk.complex.f_vector()[0], lk.complex.f_vector()[1]);
    }

    #[test]
    fn localized_link_examples() {
        let path = Arc::new(Complex::build(vec![vec![0, 1], vec![1, 2]]).unwrap());
        let lk = localized_link(1, &set(&path, &[&[1]]), &[]).unwrap();
        assert_eq!(lk.complex.f_vector(), vec![2]);
        let lk = localized_link(1, &ConstructibleSet::whole(path.clone()), &[]).unwrap();
        assert!(lk.is_empty());
        let lk = localized_link(0, &set(&path, &[&[1]]), &[]).unwrap();
        assert!(lk.is_empty());
    }

    #[test]
    fn derived_neighborhood_examples() {
        let hex = Arc::new(builders::hexagon());
        let y = set(&hex, &[&[0]]);
        let n = derived_neighborhood(&y).unwrap();
        assert!(n.is_closed());
        assert_eq!(n.chi(), 1);

        let oct = Arc::new(builders::octahedron());
        let equator = set(&oct, builders::OCTAHEDRON_EQUATOR);
        let n = derived_neighborhood(&equator).unwrap();
        assert_eq!(n.chi(), 0);

        let whole = ConstructibleSet::whole(hex.clone());
        let n = derived_neighborhood(&whole).unwrap();
        assert_eq!(n.len(), n.parent().len());
    }
}

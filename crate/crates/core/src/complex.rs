//! Finite abstract simplicial complexes, constructible sets of open cells,
//! order complexes and barycentric subdivision.
//!
//! Two Euler characteristics live here. [`ConstructibleSet::chi_c`] is the
//! compactly supported one, a signed cell count. [`ConstructibleSet::chi`] is
//! the ordinary (homotopy invariant) one: a union of open simplices is weakly
//! equivalent to the finite poset of its carriers, so its Euler characteristic
//! is that of the order complex of the carrier poset. The order complex is
//! never enumerated for this; a chain-counting recursion over the poset gives
//! the same number in polynomial time.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A nonempty, strictly increasing tuple of vertex ids.
///
/// Simplices order first by dimension, then lexicographically, so iterating a
/// sorted collection always visits faces before cofaces.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("empty simplex"));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input(format!(
                "duplicate vertex id in simplex {vertices:?}"
            )));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    /// Caller guarantees the slice is nonempty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `(-1)^dim`.
    pub fn sign(&self) -> i64 {
        if self.dim().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other` as vertex sets.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.contains(*v))
    }

    pub fn meets(&self, other: &Simplex) -> bool {
        self.0.iter().any(|v| other.contains(*v))
    }

    /// The face spanned by the vertices not equal to `v`; `None` if that is
    /// empty.
    pub fn without(&self, v: Vertex) -> Option<Simplex> {
        let rest: Vec<Vertex> = self.0.iter().copied().filter(|w| *w != v).collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        Simplex(set.into_iter().collect())
    }

    /// All nonempty faces, including `self`.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 32, "simplex dimension too large for face enumeration");
        (1u32..(1u32 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Nonempty proper faces.
    pub fn proper_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let full = self.0.len();
        self.faces().filter(move |f| f.0.len() < full)
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Complex {
    vertices: BTreeSet<Vertex>,
    simplices: BTreeSet<Simplex>,
}

impl Complex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Face closure of the generating tuples.
    pub fn build<I, G>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = G>,
        G: Into<Vec<Vertex>>,
    {
        let mut gens = Vec::new();
        for g in generators {
            gens.push(Simplex::new(g.into())?);
        }
        Ok(Self::closure_of(gens))
    }

    pub fn closure_of<I: IntoIterator<Item = Simplex>>(generators: I) -> Self {
        let mut simplices = BTreeSet::new();
        for g in generators {
            if simplices.contains(&g) {
                continue;
            }
            simplices.extend(g.faces());
        }
        Self::from_face_closed(simplices)
    }

    /// Caller guarantees `simplices` is face-closed.
    pub(crate) fn from_face_closed(simplices: BTreeSet<Simplex>) -> Self {
        let vertices = simplices
            .iter()
            .filter(|s| s.dim() == 0)
            .map(|s| s.vertices()[0])
            .collect();
        Complex {
            vertices,
            simplices,
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().next_back().map(Simplex::dim)
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    /// Euler characteristic of the (compact) polyhedron.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(Simplex::sign).sum()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.vertices.iter().next_back().copied()
    }

    /// `lk(σ; K) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link_of(&self, sigma: &Simplex) -> Result<Complex> {
        if !self.contains(sigma) {
            return Err(Error::input(format!(
                "simplex {sigma} is not in the complex"
            )));
        }
        let simplices = self
            .simplices
            .iter()
            .filter(|t| t.len_gt(sigma) && sigma.is_face_of(t))
            .filter_map(|t| {
                let rest: Vec<Vertex> = t
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| !sigma.contains(*v))
                    .collect();
                (!rest.is_empty()).then(|| Simplex::from_sorted(rest))
            })
            .collect();
        Ok(Complex::from_face_closed(simplices))
    }

    /// The full subcomplex spanned by a vertex set.
    pub fn induced(&self, vertices: &BTreeSet<Vertex>) -> BTreeSet<Simplex> {
        self.simplices
            .iter()
            .filter(|s| s.vertices().iter().all(|v| vertices.contains(v)))
            .cloned()
            .collect()
    }

    /// Copy with every vertex id shifted by `offset`.
    pub fn shifted(&self, offset: Vertex) -> Complex {
        let simplices = self
            .simplices
            .iter()
            .map(|s| Simplex::from_sorted(s.vertices().iter().map(|v| v + offset).collect()))
            .collect();
        Complex::from_face_closed(simplices)
    }
}

impl Simplex {
    fn len_gt(&self, other: &Simplex) -> bool {
        self.0.len() > other.0.len()
    }
}

/// A union of open simplices of a parent complex.
///
/// Carriers need not be closed under faces or cofaces: any set of cells is a
/// valid constructible set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructibleSet {
    parent: Arc<Complex>,
    carriers: BTreeSet<Simplex>,
}

impl ConstructibleSet {
    pub fn new(parent: Arc<Complex>, carriers: BTreeSet<Simplex>) -> Result<Self> {
        if let Some(bad) = carriers.iter().find(|s| !parent.contains(s)) {
            return Err(Error::input(format!(
                "simplex {bad} is not in the parent complex"
            )));
        }
        Ok(ConstructibleSet { parent, carriers })
    }

    pub(crate) fn new_unchecked(parent: Arc<Complex>, carriers: BTreeSet<Simplex>) -> Self {
        debug_assert!(carriers.iter().all(|s| parent.contains(s)));
        ConstructibleSet { parent, carriers }
    }

    /// The whole parent complex as a (closed) set.
    pub fn whole(parent: Arc<Complex>) -> Self {
        let carriers = parent.simplices().clone();
        ConstructibleSet { parent, carriers }
    }

    pub fn empty(parent: Arc<Complex>) -> Self {
        ConstructibleSet {
            parent,
            carriers: BTreeSet::new(),
        }
    }

    /// Closed subcomplex generated by the given simplices.
    pub fn closed_from_generators<I, G>(parent: Arc<Complex>, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = G>,
        G: Into<Vec<Vertex>>,
    {
        let closure = Complex::build(generators)?;
        Self::new(parent, closure.simplices)
    }

    /// Full subcomplex of the parent spanned by `vertices`.
    pub fn full_on(parent: Arc<Complex>, vertices: &BTreeSet<Vertex>) -> Self {
        let carriers = parent.induced(vertices);
        ConstructibleSet { parent, carriers }
    }

    pub fn parent(&self) -> &Arc<Complex> {
        &self.parent
    }

    pub fn carriers(&self) -> &BTreeSet<Simplex> {
        &self.carriers
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.carriers.contains(s)
    }

    pub fn len(&self) -> usize {
        self.carriers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carriers.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.carriers
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect()
    }

    fn same_parent(&self, other: &ConstructibleSet) {
        assert!(
            Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent,
            "constructible sets live in different complexes"
        );
    }

    pub fn union(&self, other: &ConstructibleSet) -> ConstructibleSet {
        self.same_parent(other);
        let carriers = self.carriers.union(&other.carriers).cloned().collect();
        ConstructibleSet::new_unchecked(self.parent.clone(), carriers)
    }

    pub fn intersection(&self, other: &ConstructibleSet) -> ConstructibleSet {
        self.same_parent(other);
        let carriers = self
            .carriers
            .intersection(&other.carriers)
            .cloned()
            .collect();
        ConstructibleSet::new_unchecked(self.parent.clone(), carriers)
    }

    pub fn difference(&self, other: &ConstructibleSet) -> ConstructibleSet {
        self.same_parent(other);
        let carriers = self.carriers.difference(&other.carriers).cloned().collect();
        ConstructibleSet::new_unchecked(self.parent.clone(), carriers)
    }

    pub fn complement(&self) -> ConstructibleSet {
        let carriers = self
            .parent
            .simplices()
            .difference(&self.carriers)
            .cloned()
            .collect();
        ConstructibleSet::new_unchecked(self.parent.clone(), carriers)
    }

    pub fn is_subset(&self, other: &ConstructibleSet) -> bool {
        self.carriers.is_subset(&other.carriers)
    }

    /// Face-closed.
    pub fn is_closed(&self) -> bool {
        self.carriers
            .iter()
            .all(|s| s.proper_faces().all(|f| self.carriers.contains(&f)))
    }

    /// Coface-closed.
    pub fn is_open(&self) -> bool {
        self.parent
            .iter()
            .filter(|t| !self.carriers.contains(*t))
            .all(|t| !t.proper_faces().any(|f| self.carriers.contains(&f)))
    }

    /// Convex in the face poset: `σ ≤ τ ≤ ρ` with `σ, ρ` in the set forces `τ`.
    pub fn is_locally_closed(&self) -> bool {
        // Equivalent: closure minus the set is closed.
        self.frontier().is_closed()
    }

    pub fn closure(&self) -> ConstructibleSet {
        let mut carriers = BTreeSet::new();
        for s in &self.carriers {
            if !carriers.contains(s) {
                carriers.extend(s.faces());
            }
        }
        ConstructibleSet::new_unchecked(self.parent.clone(), carriers)
    }

    /// `closure ∖ self`.
    pub fn frontier(&self) -> ConstructibleSet {
        self.closure().difference(self)
    }

    /// The closed set as a standalone complex. Errors if not closed.
    pub fn to_complex(&self) -> Result<Complex> {
        if !self.is_closed() {
            return Err(Error::input("set is not a closed subcomplex"));
        }
        Ok(Complex::from_face_closed(self.carriers.clone()))
    }

    /// Whether this closed set is a full subcomplex of its parent.
    pub fn is_full(&self) -> bool {
        let verts = self.vertex_set();
        self.parent
            .iter()
            .filter(|s| s.vertices().iter().all(|v| verts.contains(v)))
            .all(|s| self.carriers.contains(s))
    }

    /// Compactly supported Euler characteristic: `Σ (-1)^dim σ`.
    pub fn chi_c(&self) -> i64 {
        self.carriers.iter().map(Simplex::sign).sum()
    }

    /// Ordinary Euler characteristic of the union of the open cells.
    ///
    /// `g(σ) = 1 - Σ_{τ < σ, τ ∈ S} g(τ)` counts chains of the carrier poset
    /// topped by `σ` with sign `(-1)^(length - 1)`; the sum of `g` is the
    /// Euler characteristic of the order complex.
    pub fn chi(&self) -> i64 {
        poset_chi(&self.carriers)
    }
}

/// Euler characteristic of the order complex of a set of simplices under
/// inclusion.
pub fn poset_chi(elements: &BTreeSet<Simplex>) -> i64 {
    let mut g: HashMap<&Simplex, i64> = HashMap::with_capacity(elements.len());
    let mut total = 0i64;
    // Ascending dimension: all faces are seen before their cofaces.
    for s in elements {
        let below: i64 = if (1usize << s.vertices().len()) <= 4 * elements.len() + 8 {
            s.proper_faces()
                .filter_map(|f| elements.get(&f).and_then(|key| g.get(key)))
                .sum()
        } else {
            elements
                .range(..s.clone())
                .filter(|f| f.dim() < s.dim() && f.is_face_of(s))
                .map(|f| g[f])
                .sum()
        };
        let value = 1 - below;
        g.insert(s, value);
        total += value;
    }
    total
}

/// Order complex of a finite set of simplices ordered by inclusion, with the
/// element represented by each vertex.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    pub complex: Arc<Complex>,
    /// `elements[v]` is the simplex that vertex `v` stands for.
    pub elements: Vec<Simplex>,
}

/// Vertices are the poset elements (indexed in canonical simplex order) and
/// simplices are the chains.
pub fn order_complex<I: IntoIterator<Item = Simplex>>(poset: I) -> OrderComplex {
    let elements: Vec<Simplex> = poset
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<&Simplex, usize> =
        elements.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let below: Vec<Vec<usize>> = elements
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if (1usize << s.vertices().len()) <= 4 * elements.len() + 8 {
                let mut v: Vec<usize> = s
                    .proper_faces()
                    .filter_map(|f| index.get(&f).copied())
                    .collect();
                v.sort_unstable();
                v
            } else {
                (0..i)
                    .filter(|&j| elements[j].dim() < s.dim() && elements[j].is_face_of(s))
                    .collect()
            }
        })
        .collect();

    // chains[i]: every chain whose top element is i, as ascending index lists.
    let mut chains: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(elements.len());
    let mut simplices = BTreeSet::new();
    for (i, lower) in below.iter().enumerate() {
        let mut mine = vec![vec![i as Vertex]];
        for &j in lower {
            for c in &chains[j] {
                let mut c = c.clone();
                c.push(i as Vertex);
                mine.push(c);
            }
        }
        for c in &mine {
            simplices.insert(Simplex::from_sorted(c.clone()));
        }
        chains.push(mine);
    }
    OrderComplex {
        complex: Arc::new(Complex::from_face_closed(simplices)),
        elements,
    }
}

/// One barycentric subdivision step, with the simplex each new vertex is the
/// barycenter of.
#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    pub source: Arc<Complex>,
    pub target: Arc<Complex>,
    pub carriers: Vec<Simplex>,
    index: HashMap<Simplex, Vertex>,
}

impl SubdivisionMap {
    /// Vertex of the subdivision sitting at the barycenter of `s`.
    pub fn vertex_for(&self, s: &Simplex) -> Option<Vertex> {
        self.index.get(s).copied()
    }

    pub fn carrier_of(&self, v: Vertex) -> &Simplex {
        &self.carriers[v as usize]
    }

    /// The open simplex of the source containing the open chain `c`.
    pub fn carrier_of_simplex(&self, c: &Simplex) -> &Simplex {
        // Vertex ids follow canonical order, so the last one has top dimension.
        self.carrier_of(*c.vertices().last().expect("nonempty"))
    }

    /// Image of a set of open cells: every open chain whose top element lies
    /// in the set.
    pub fn transport(&self, set: &ConstructibleSet) -> ConstructibleSet {
        let carriers = self
            .target
            .iter()
            .filter(|c| set.contains(self.carrier_of_simplex(c)))
            .cloned()
            .collect();
        ConstructibleSet::new_unchecked(self.target.clone(), carriers)
    }

    /// Function on target cells pulled back from source cells.
    pub fn transport_values<T: Clone>(
        &self,
        values: &BTreeMap<Simplex, T>,
    ) -> BTreeMap<Simplex, T> {
        self.target
            .iter()
            .filter_map(|c| {
                values
                    .get(self.carrier_of_simplex(c))
                    .map(|v| (c.clone(), v.clone()))
            })
            .collect()
    }
}

pub fn barycentric_subdivision(k: &Arc<Complex>) -> SubdivisionMap {
    let oc = order_complex(k.iter().cloned());
    let index = oc
        .elements
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as Vertex))
        .collect();
    SubdivisionMap {
        source: k.clone(),
        target: oc.complex,
        carriers: oc.elements,
        index,
    }
}

/// Simplicial join. `L` is relabelled past the largest vertex of `K`.
///
/// `χ(K * L) = χ(K) + χ(L) - χ(K) χ(L)`.
pub fn join(k: &Complex, l: &Complex) -> Complex {
    let offset = k.max_vertex().map_or(0, |m| m + 1);
    let l = l.shifted(offset);
    let mut simplices: BTreeSet<Simplex> = k.simplices().clone();
    simplices.extend(l.simplices().iter().cloned());
    for s in k.iter() {
        for t in l.iter() {
            simplices.insert(s.union(t));
        }
    }
    Complex::from_face_closed(simplices)
}

/// Euler characteristic of a join from those of its factors.
pub fn join_chi(a: i64, b: i64) -> i64 {
    a + b - a * b
}

/// Euler characteristic of the boundary sphere of a simplex of dimension `d`.
pub fn boundary_sphere_chi(d: usize) -> i64 {
    // ∂Δ^d = S^{d-1}; χ(S^m) = 1 + (-1)^m, χ(S^{-1} = ∅) = 0.
    if d.is_multiple_of(2) {
        0
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(c: Complex) -> Arc<Complex> {
        Arc::new(c)
    }

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn build_hollow_triangle() {
        let k = Complex::build(vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3]);
        assert_eq!(k.euler_characteristic(), 0);
    }

    #[test]
    fn build_point_and_errors() {
        let k = Complex::build(vec![vec![0]]).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k.dim(), Some(0));
        assert!(matches!(
            Complex::build(vec![vec![0, 0, 1]]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Complex::build(vec![Vec::<Vertex>::new()]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn chi_c_examples() {
        let edge = arc(Complex::build(vec![vec![0, 1]]).unwrap());
        let open_edge =
            ConstructibleSet::new(edge.clone(), [s(&[0, 1])].into_iter().collect()).unwrap();
        assert_eq!(open_edge.chi_c(), -1);
        let half_open =
            ConstructibleSet::new(edge.clone(), [s(&[0]), s(&[0, 1])].into_iter().collect())
                .unwrap();
        assert_eq!(half_open.chi_c(), 0);
        let sphere = arc(Complex::build(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
        .unwrap());
        assert_eq!(ConstructibleSet::whole(sphere).chi_c(), 2);
    }

    #[test]
    fn chi_examples() {
        let edge = arc(Complex::build(vec![vec![0, 1]]).unwrap());
        let open_edge = ConstructibleSet::new(edge, [s(&[0, 1])].into_iter().collect()).unwrap();
        assert_eq!(open_edge.chi(), 1);

        let tri = arc(Complex::build(vec![vec![0, 1, 2]]).unwrap());
        let v_and_open_face =
            ConstructibleSet::new(tri, [s(&[0]), s(&[0, 1, 2])].into_iter().collect()).unwrap();
        assert!(!v_and_open_face.is_locally_closed());
        assert_eq!(v_and_open_face.chi(), 1);

        let empty = ConstructibleSet::empty(Arc::new(Complex::empty()));
        assert_eq!(empty.chi(), 0);
        assert_eq!(empty.chi_c(), 0);
    }

    #[test]
    fn openness_and_closedness() {
        let tri = arc(Complex::build(vec![vec![0, 1, 2]]).unwrap());
        let whole = ConstructibleSet::whole(tri.clone());
        assert!(whole.is_closed() && whole.is_open() && whole.is_locally_closed());
        let star0 = ConstructibleSet::new(
            tri.clone(),
            tri.iter().filter(|t| t.contains(0)).cloned().collect(),
        )
        .unwrap();
        assert!(star0.is_open());
        assert!(!star0.is_closed());
        assert_eq!(star0.chi(), 1);
        assert_eq!(star0.frontier().chi(), 1);
    }

    #[test]
    fn order_complex_examples() {
        let chain = order_complex([s(&[0]), s(&[0, 1])]);
        assert_eq!(chain.complex.f_vector(), vec![2, 1]);
        let antichain = order_complex([s(&[0]), s(&[1]), s(&[2])]);
        assert_eq!(antichain.complex.f_vector(), vec![3]);
        let edge_faces = order_complex([s(&[0]), s(&[1]), s(&[0, 1])]);
        assert_eq!(edge_faces.complex.f_vector(), vec![3, 2]);
    }

    #[test]
    fn subdivision_examples() {
        let edge = arc(Complex::build(vec![vec![0, 1]]).unwrap());
        let sd = barycentric_subdivision(&edge);
        assert_eq!(sd.target.f_vector(), vec![3, 2]);

        let hollow = arc(Complex::build(vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
        let sd = barycentric_subdivision(&hollow);
        assert_eq!(sd.target.f_vector(), vec![6, 6]);
        assert_eq!(sd.target.euler_characteristic(), 0);

        let sphere = arc(Complex::build(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
        .unwrap());
        let sd = barycentric_subdivision(&sphere);
        assert_eq!(sd.target.vertices().len(), 14);
        assert_eq!(sd.target.euler_characteristic(), 2);
        assert_eq!(
            sd.carrier_of(sd.vertex_for(&s(&[0, 1])).unwrap()),
            &s(&[0, 1])
        );
    }

    #[test]
    fn subdivision_makes_subcomplexes_full() {
        let tri = arc(Complex::build(vec![vec![0, 1, 2]]).unwrap());
        let hollow = ConstructibleSet::closed_from_generators(
            tri.clone(),
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(!hollow.is_full());
        let sd = barycentric_subdivision(&tri);
        let moved = sd.transport(&hollow);
        assert!(moved.is_closed());
        assert!(moved.is_full());
        assert_eq!(moved.chi(), 0);
    }

    #[test]
    fn join_examples() {
        let s0 = Complex::build(vec![vec![0], vec![1]]).unwrap();
        let sq = join(&s0, &s0);
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert_eq!(sq.euler_characteristic(), 0);

        let pt = Complex::build(vec![vec![0]]).unwrap();
        let k = Complex::build(vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let cone = join(&pt, &k);
        assert_eq!(cone.euler_characteristic(), 1);

        assert_eq!(join(&k, &Complex::empty()), k);
    }

    #[test]
    fn link_of_simplex() {
        let sphere = Complex::build(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
        .unwrap();
        let lk = sphere.link_of(&s(&[0, 1])).unwrap();
        assert_eq!(lk.f_vector(), vec![2]);
        assert!(sphere.link_of(&s(&[0, 7])).is_err());
    }
}

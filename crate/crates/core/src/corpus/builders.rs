//! Small named complexes used by the bundled corpus, the examples and tests.

use std::collections::BTreeMap;

use crate::complex::{Complex, Simplex, Vertex};

fn build(gens: &[&[Vertex]]) -> Complex {
    Complex::build(gens.iter().map(|g| g.to_vec())).expect("static generators are valid")
}

/// `∂Δ³`, a 2-sphere on vertices 0..=3.
pub fn tetrahedron_boundary() -> Complex {
    build(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
}

/// Hexagon circle on vertices 0..=5.
pub fn hexagon() -> Complex {
    build(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]])
}

/// Octahedral 2-sphere: `0,1 = ±x`, `2,3 = ±y`, `4,5 = ±z`.
pub fn octahedron() -> Complex {
    let mut gens = Vec::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                gens.push(vec![x, y, z]);
            }
        }
    }
    Complex::build(gens).expect("valid")
}

/// The `z = 0` circle of [`octahedron`].
pub const OCTAHEDRON_EQUATOR: &[&[Vertex]] = &[&[0, 2], &[1, 2], &[1, 3], &[0, 3]];

/// Cone over a θ-graph (two trivalent vertices 0, 1 joined by three
/// subdivided arcs through 2, 3, 4) with apex [`THETA_APEX`].
pub fn theta_cone() -> Complex {
    build(&[
        &[0, 2, 5],
        &[1, 2, 5],
        &[0, 3, 5],
        &[1, 3, 5],
        &[0, 4, 5],
        &[1, 4, 5],
    ])
}

pub const THETA_APEX: Vertex = 5;

/// Link of the origin in the Whitney umbrella `x² = z y²`, a graph.
///
/// The two branches `x = ±√z y` of the surface meet the unit sphere in two
/// arcs from `(0,-1,0)` to `(0,1,0)` crossing at the north pole; the handle
/// `z < 0, x = y = 0` meets it in the isolated south pole.
///
/// Vertices: `0 = (0,-1,0)`, `1 = (0,1,0)`, `2 = N`, `3 = S`, and `4, 5`
/// (branch `+`), `6, 7` (branch `-`) subdividing the arcs.
pub fn umbrella_origin_link() -> Complex {
    build(&[
        &[0, 4],
        &[2, 4],
        &[2, 5],
        &[1, 5],
        &[0, 6],
        &[2, 6],
        &[2, 7],
        &[1, 7],
        &[3],
    ])
}

pub const UMBRELLA_NORTH: Vertex = 2;
pub const UMBRELLA_SOUTH: Vertex = 3;
pub const UMBRELLA_ORIGIN: Vertex = 8;
pub const UMBRELLA_INFINITY: Vertex = 9;

/// One-point compactified Whitney umbrella: the suspension of
/// [`umbrella_origin_link`] with cone points [`UMBRELLA_ORIGIN`] and
/// [`UMBRELLA_INFINITY`]. The umbrella is weighted homogeneous, so it is the
/// open cone on its link and its compactification is this suspension.
pub fn whitney_umbrella() -> Complex {
    let link = umbrella_origin_link();
    let mut gens: Vec<Vec<Vertex>> = Vec::new();
    for s in link.iter().filter(|s| {
        // maximal cells of the link
        !link.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t))
    }) {
        for apex in [UMBRELLA_ORIGIN, UMBRELLA_INFINITY] {
            let mut g = s.vertices().to_vec();
            g.push(apex);
            gens.push(g);
        }
    }
    Complex::build(gens).expect("valid")
}

/// The compactified `z`-axis of [`whitney_umbrella`], a circle.
pub const UMBRELLA_AXIS: &[&[Vertex]] = &[&[2, 8], &[2, 9], &[3, 8], &[3, 9]];

/// Cone `apex * K`; `apex` must not be a vertex of `K`.
pub fn cone(k: &Complex, apex: Vertex) -> Complex {
    assert!(!k.has_vertex(apex));
    let mut gens: Vec<Vec<Vertex>> = vec![vec![apex]];
    for s in k.iter() {
        let mut g = s.vertices().to_vec();
        g.push(apex);
        gens.push(g);
    }
    Complex::build(gens).expect("valid")
}

/// Path `0 - 1 - … - n`.
pub fn path(n: Vertex) -> Complex {
    Complex::build((0..n).map(|i| vec![i, i + 1])).expect("valid")
}

/// Staircase triangulation of `K × L`.
///
/// The vertex `(a, b)` gets the id returned in the map; a simplex of the
/// product is a chain `(a_0,b_0) < … < (a_m,b_m)` increasing in both
/// coordinates whose projections are simplices.
pub fn product(k: &Complex, l: &Complex) -> (Complex, BTreeMap<(Vertex, Vertex), Vertex>) {
    let mut ids = BTreeMap::new();
    for a in k.vertices() {
        for b in l.vertices() {
            let next = ids.len() as Vertex;
            ids.insert((*a, *b), next);
        }
    }
    let maximal = |c: &Complex| -> Vec<Simplex> {
        c.iter()
            .filter(|s| !c.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t)))
            .cloned()
            .collect()
    };
    let mut gens: Vec<Vec<Vertex>> = Vec::new();
    for s in maximal(k) {
        for t in maximal(l) {
            staircases(s.vertices(), t.vertices(), &ids, &mut gens);
        }
    }
    (Complex::build(gens).expect("valid"), ids)
}

fn staircases(
    s: &[Vertex],
    t: &[Vertex],
    ids: &BTreeMap<(Vertex, Vertex), Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    fn walk(
        i: usize,
        j: usize,
        s: &[Vertex],
        t: &[Vertex],
        ids: &BTreeMap<(Vertex, Vertex), Vertex>,
        acc: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        acc.push(ids[&(s[i], t[j])]);
        if i + 1 == s.len() && j + 1 == t.len() {
            out.push(acc.clone());
        }
        if i + 1 < s.len() {
            walk(i + 1, j, s, t, ids, acc, out);
        }
        if j + 1 < t.len() {
            walk(i, j + 1, s, t, ids, acc, out);
        }
        acc.pop();
    }
    walk(0, 0, s, t, ids, &mut Vec::new(), out);
}

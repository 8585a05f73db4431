//! Euler characteristics of constructible sets and the links they cut out.
//!
//! Run with `cargo run --example chi_and_links`.

use std::sync::Arc;

use eulerlink::corpus::builders;
use eulerlink::links::{local_chi, point_link_chi, subcomplex_link, vertex_link};
use eulerlink::{ConstructibleSet, Simplex};

fn main() -> eulerlink::Result<()> {
    let s2 = Arc::new(builders::octahedron());
    let whole = ConstructibleSet::whole(s2.clone());
    let pole = ConstructibleSet::closed_from_generators(s2.clone(), [[0]])?;
    let punctured = whole.difference(&pole);
    println!(
        "octahedron: chi = {}, chi_c = {}",
        whole.chi(),
        whole.chi_c()
    );
    println!(
        "minus a pole: chi = {}, chi_c = {}",
        punctured.chi(),
        punctured.chi_c()
    );

    // A point link of a surface is a circle.
    println!(
        "lk(0) has chi {}",
        vertex_link(0, &s2)?.euler_characteristic()
    );
    let edge = Simplex::new(vec![0, 2])?;
    println!("lk([0,2]) has chi {}", point_link_chi(&edge, &s2)?);

    // The link of the equator is two circles, one on each side.
    let equator = ConstructibleSet::closed_from_generators(
        s2.clone(),
        builders::OCTAHEDRON_EQUATOR.iter().map(|g| g.to_vec()),
    )?;
    let lk = subcomplex_link(&equator, &[])?;
    println!(
        "lk(equator) has chi {} and f-vector {:?}",
        lk.chi(),
        lk.complex.f_vector()
    );

    // Near the pole the punctured sphere looks like a punctured disc.
    println!(
        "local chi of the punctured sphere at 0: {}",
        local_chi(0, &punctured)
    );

    let theta = Arc::new(builders::theta_cone());
    let apex = Simplex::vertex(builders::THETA_APEX);
    println!(
        "theta cone: lk(apex) has chi {}",
        point_link_chi(&apex, &theta)?
    );
    Ok(())
}

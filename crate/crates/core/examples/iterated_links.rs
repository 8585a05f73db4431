//! Iterated links of nested families, globally and localized at a vertex.

use std::sync::Arc;

use eulerlink::congruence::{delta_global, delta_local_formula};
use eulerlink::corpus::builders;
use eulerlink::links::{iterated_link, localized_iterated_link};
use eulerlink::{ConstructibleSet, OrderedFamily};

fn main() -> eulerlink::Result<()> {
    // Whitney umbrella: the singular axis inside the surface.
    let w = Arc::new(builders::whitney_umbrella());
    let axis = ConstructibleSet::closed_from_generators(
        w.clone(),
        builders::UMBRELLA_AXIS.iter().map(|g| g.to_vec()),
    )?;
    let fam = OrderedFamily::algebraic(w.clone(), vec![axis])?;

    let global = iterated_link(&fam)?;
    println!(
        "global iterated link: chi {} (delta {})",
        global.chi(),
        delta_global(&fam)
    );
    for step in &global.provenance {
        println!("  {step}");
    }

    for v in [
        builders::UMBRELLA_NORTH,
        builders::UMBRELLA_SOUTH,
        builders::UMBRELLA_ORIGIN,
    ] {
        let local = localized_iterated_link(v, &fam)?;
        println!(
            "at vertex {v}: chi {} (delta_v {}), f-vector {:?}",
            local.chi(),
            delta_local_formula(v, &fam),
            local.complex.f_vector()
        );
    }
    Ok(())
}

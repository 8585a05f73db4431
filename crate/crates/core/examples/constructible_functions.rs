//! Constructible functions, the link operator and its dual.

use std::sync::Arc;

use eulerlink::corpus::builders;
use eulerlink::{ConstructibleFunction, ConstructibleSet};

fn main() -> eulerlink::Result<()> {
    let s2 = Arc::new(builders::octahedron());
    let whole = ConstructibleSet::whole(s2.clone());
    let equator = ConstructibleSet::closed_from_generators(
        s2.clone(),
        builders::OCTAHEDRON_EQUATOR.iter().map(|g| g.to_vec()),
    )?;

    // 1 + 2 * 1_equator
    let f = ConstructibleFunction::from_indicators(s2.clone(), &[(1, whole), (2, equator)])?;
    println!("integral of f: {}", f.euler_integral());

    let lf = f.lambda_op();
    let df = f.duality_op();
    for cell in s2.iter().take(6) {
        println!(
            "{cell}: f = {}, lambda f = {}, D f = {}",
            f.value(cell),
            lf.value(cell),
            df.value(cell)
        );
    }

    let audit = f.evenness_audit();
    println!("lambda f even everywhere: {}", audit.pass());

    let theta = Arc::new(builders::theta_cone());
    let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(theta));
    let audit = one.evenness_audit();
    println!(
        "theta cone: {} cells with odd lambda",
        audit.odd_cells.len()
    );
    Ok(())
}

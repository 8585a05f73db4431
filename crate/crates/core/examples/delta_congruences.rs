//! The alternating invariant of a family and its 2-power divisibility.

use eulerlink::congruence::{divisibility_check, double_cone};
use eulerlink::corpus;

fn main() -> eulerlink::Result<()> {
    let doc = corpus::source("octahedron").expect("bundled");
    let resolved = eulerlink::document::Document::parse(doc)?.resolve()?;
    for (name, fam) in &resolved.families {
        let report = divisibility_check(fam)?;
        println!(
            "{name}: k = {}, delta = {}, divisible by {}: {}",
            report.k, report.global_delta, report.divisor, report.divisibility_pass
        );
        for (v, d) in &report.local_deltas {
            println!("  delta_{v} = {d}");
        }
        let dc = double_cone(fam)?;
        let at_apex = eulerlink::congruence::delta_local(dc.apex, &dc.family)?;
        println!("  double cone: delta at apex = {at_apex}");
    }
    Ok(())
}

//! Delta of a non-compact family against its one-point compactification.

use eulerlink::congruence::compactification_split;
use eulerlink::corpus;
use eulerlink::document::Document;

fn main() -> eulerlink::Result<()> {
    for name in ["hexagon", "octahedron"] {
        let resolved = Document::parse(corpus::source(name).expect("bundled"))?.resolve()?;
        for (label, (family, infinity)) in &resolved.compactifications {
            let split = compactification_split(resolved.family(family)?, *infinity)?;
            println!(
                "{name}/{label}: noncompact {} = compactified {} - correction {} (links at infinity: {})",
                split.delta_noncompact, split.delta_compactified, split.correction, split.links_at_infinity_delta
            );
        }
    }
    Ok(())
}

//! Bundled fixture documents.

pub mod builders;

use crate::document::Document;

/// Name and TOML source of every bundled document.
pub const SOURCES: &[(&str, &str)] = &[
    (
        "double_cone_circle",
        include_str!("../../corpus/double_cone_circle.toml"),
    ),
    (
        "double_cone_point",
        include_str!("../../corpus/double_cone_point.toml"),
    ),
    ("hexagon", include_str!("../../corpus/hexagon.toml")),
    (
        "monodromy_table",
        include_str!("../../corpus/monodromy_table.toml"),
    ),
    ("octahedron", include_str!("../../corpus/octahedron.toml")),
    (
        "tetra_boundary",
        include_str!("../../corpus/tetra_boundary.toml"),
    ),
    ("theta_cone", include_str!("../../corpus/theta_cone.toml")),
    (
        "whitney_umbrella",
        include_str!("../../corpus/whitney_umbrella.toml"),
    ),
];

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Every bundled document, parsed.
pub fn corpus() -> Vec<Document> {
    SOURCES
        .iter()
        .map(|(name, src)| {
            Document::parse(src).unwrap_or_else(|e| panic!("bundled document {name}: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::Expect;

    #[test]
    fn every_document_resolves_and_round_trips() {
        for (name, src) in SOURCES {
            let doc = Document::parse(src).unwrap();
            assert_eq!(doc.meta.name, *name);
            doc.resolve().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(Document::parse(&doc.to_toml()).unwrap(), doc, "{name}");
        }
    }

    #[test]
    fn umbrella_and_theta_are_declared() {
        let docs = corpus();
        let umbrella = docs
            .iter()
            .find(|d| d.meta.name == "whitney_umbrella")
            .unwrap();
        let strata: Vec<&str> = umbrella.stratifications["umbrella"]
            .strata
            .iter()
            .map(|s| s.name.as_str())
            .collect();
        for s in ["origin", "axis+", "axis-", "canopy"] {
            assert!(strata.contains(&s));
        }
        let theta = docs.iter().find(|d| d.meta.name == "theta_cone").unwrap();
        assert_eq!(theta.meta.expect, Expect::Obstruction);
    }
}

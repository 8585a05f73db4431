//! Command line driver.
//!
//! Every subcommand reads one document, given as a path or as the name of a
//! bundled document (optionally prefixed `corpus:`), and prints a report.
//! Exit codes: 0 pass, 1 obstruction certificate, 2 bad input,
//! 3 internal consistency failure.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand};

use crate::complex::{ConstructibleSet, Simplex, Vertex};
use crate::congruence::{
    compactification_split, constancy_audit, delta_global, delta_local, divisibility_check,
    residues_by_stratum, OrderedFamily,
};
use crate::constructible::ConstructibleFunction;
use crate::corpus;
use crate::document::{Document, Resolved};
use crate::error::{Error, Result};
use crate::links::{
    iterated_link, localized_iterated_link, localized_link, subcomplex_link, vertex_link,
};
use crate::monodromy::check_fiber_congruences;
use crate::report::Report;
use crate::selftest;

#[derive(Parser, Debug)]
#[command(
    name = "eulerlink",
    version,
    about = "Exact Euler calculus audits on simplicial complexes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalFlags {
    /// Modulus for residue reporting (a power of two).
    #[arg(long = "mod", global = true, value_name = "2^m")]
    pub modulus: Option<i64>,
    /// Barycentric subdivisions applied to every complex before running.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    pub subdivide: usize,
    /// Emit JSON instead of key: value lines.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Euler characteristics of a named set.
    Chi { document: String, set: String },
    /// Link of a vertex, or of a closed set, optionally localized at a vertex.
    Link {
        document: String,
        /// Closed set whose link is taken.
        #[arg(long, conflicts_with = "vertex")]
        set: Option<String>,
        /// Vertex whose link is taken.
        #[arg(long)]
        vertex: Option<Vertex>,
        /// Complex holding `--vertex`; needed only when the document has several.
        #[arg(long)]
        complex: Option<String>,
        /// Localize the link of `--set` at this vertex.
        #[arg(long, requires = "set")]
        at: Option<Vertex>,
    },
    /// Iterated link of a nested family, optionally localized at a vertex.
    IteratedLink {
        document: String,
        family: String,
        #[arg(long)]
        at: Option<Vertex>,
    },
    /// Global and per-vertex Delta with the 2^k divisibility verdict.
    Delta { document: String, family: String },
    /// Parity, evenness, constancy and compactification audits.
    Audit {
        document: String,
        /// Parity of vertex link Euler characteristics of every complex.
        #[arg(long)]
        sullivan: bool,
        /// Evenness of the link operator on algebraic functions, and dual residues.
        #[arg(long)]
        evenness: bool,
        /// Divisibility and constancy of Delta along stratifications.
        #[arg(long)]
        constancy: bool,
        /// Non-compact Delta against its one-point compactification.
        #[arg(long)]
        compactification: bool,
    },
    /// Monodromy data and real Milnor fibres of the document's polynomials.
    Monodromy {
        document: String,
        /// Only this polynomial.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Full invariant suite on the bundled corpus.
    Selftest,
}

/// Reads a document from a path or the bundled corpus.
pub fn load_document(spec: &str) -> Result<Document> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {spec}: {e}")))?;
        return Document::parse(&text);
    }
    let name = spec.strip_prefix("corpus:").unwrap_or(spec);
    match corpus::source(name) {
        Some(src) => Document::parse(src),
        None => Err(Error::input(format!(
            "no such file or bundled document: {spec}"
        ))),
    }
}

fn resolve(spec: &str, flags: &GlobalFlags) -> Result<Resolved> {
    Resolved::new(&load_document(spec)?, flags.subdivide)
}

/// Parses arguments, runs the command and returns the rendered report with
/// its exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let report = execute(&cli);
            let text = if cli.global.json {
                report.to_json()
            } else {
                report.to_text()
            };
            (text, report.exit_code())
        }
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (e.to_string(), code)
        }
    }
}

pub fn execute(cli: &Cli) -> Report {
    let mut report = Report::new();
    if let Some(m) = cli.global.modulus {
        if m <= 0 || m & (m - 1) != 0 {
            report.fail(Error::input(format!("--mod {m} is not a power of two")));
            return report;
        }
    }
    let result = match &cli.command {
        Command::Chi { document, set } => chi(&mut report, document, set, &cli.global),
        Command::Link {
            document,
            set,
            vertex,
            complex,
            at,
        } => link(
            &mut report,
            document,
            set.as_deref(),
            *vertex,
            complex.as_deref(),
            *at,
            &cli.global,
        ),
        Command::IteratedLink {
            document,
            family,
            at,
        } => iterated(&mut report, document, family, *at, &cli.global),
        Command::Delta { document, family } => delta(&mut report, document, family, &cli.global),
        Command::Audit {
            document,
            sullivan,
            evenness,
            constancy,
            compactification,
        } => {
            let all = !(*sullivan || *evenness || *constancy || *compactification);
            let sel = AuditSelection {
                sullivan: all || *sullivan,
                evenness: all || *evenness,
                constancy: all || *constancy,
                compactification: all || *compactification,
            };
            resolve(document, &cli.global)
                .and_then(|r| audit(&mut report, &r, sel, cli.global.modulus))
        }
        Command::Monodromy { document, poly } => {
            monodromy(&mut report, document, poly.as_deref(), &cli.global)
        }
        Command::Selftest => {
            selftest::run(&mut report);
            Ok(())
        }
    };
    if let Err(e) = result {
        report.fail(e);
    }
    report
}

fn chi(report: &mut Report, doc: &str, name: &str, flags: &GlobalFlags) -> Result<()> {
    let r = resolve(doc, flags)?;
    let set = r.set(name)?;
    report.line("set", name);
    report.line("complex", &r.document.sets[name].complex);
    report.line("cells", set.len());
    report.line("closed", set.is_closed());
    report.line("open", set.is_open());
    report.line("locally_closed", set.is_locally_closed());
    report.line("chi", set.chi());
    report.line("chi_c", set.chi_c());
    Ok(())
}

fn single_complex(r: &Resolved, name: Option<&str>) -> Result<String> {
    match name {
        Some(n) => r.complex(n).map(|_| n.to_string()),
        None if r.complexes.len() == 1 => Ok(r.complexes.keys().next().unwrap().clone()),
        None => Err(Error::input(
            "the document has several complexes; pass --complex",
        )),
    }
}

fn link(
    report: &mut Report,
    doc: &str,
    set: Option<&str>,
    vertex: Option<Vertex>,
    complex: Option<&str>,
    at: Option<Vertex>,
    flags: &GlobalFlags,
) -> Result<()> {
    let r = resolve(doc, flags)?;
    match (set, vertex) {
        (None, Some(v)) => {
            let name = single_complex(&r, complex)?;
            let lk = vertex_link(v, r.complex(&name)?)?;
            report.line("complex", name);
            report.line("vertex", v);
            report.line("f_vector", lk.f_vector());
            report.line("chi", lk.euler_characteristic());
        }
        (Some(y), None) => {
            let ys = r.set(y)?;
            let model = match at {
                Some(v) => localized_link(v, ys, &[])?,
                None => subcomplex_link(ys, &[])?,
            };
            report.line("set", y);
            if let Some(v) = at {
                report.line("localized_at", v);
            }
            report.line("subdivided", model.subdivision.is_some());
            report.line("f_vector", model.complex.f_vector());
            report.line("chi", model.chi());
        }
        _ => return Err(Error::input("pass exactly one of --set or --vertex")),
    }
    Ok(())
}

fn iterated(
    report: &mut Report,
    doc: &str,
    family: &str,
    at: Option<Vertex>,
    flags: &GlobalFlags,
) -> Result<()> {
    let r = resolve(doc, flags)?;
    let fam = r.family(family)?;
    let (model, delta) = match at {
        Some(v) => (localized_iterated_link(v, fam)?, delta_local(v, fam)?),
        None => (iterated_link(fam)?, delta_global(fam)),
    };
    report.line("family", family);
    report.line("k", fam.k());
    if let Some(v) = at {
        report.line("localized_at", v);
    }
    report.line("subdivided", model.subdivision.is_some());
    for (i, step) in model.provenance.iter().enumerate() {
        report.line(format!("stage[{i}]"), step);
    }
    report.line("f_vector", model.complex.f_vector());
    report.line("chi", model.chi());
    report.line("delta", delta);
    if model.chi() != delta {
        return Err(Error::Consistency(format!(
            "iterated link has chi {} but inclusion-exclusion gives {delta}",
            model.chi()
        )));
    }
    Ok(())
}

fn residue_list(values: &BTreeMap<i64, Simplex>) -> Vec<i64> {
    values.keys().copied().collect()
}

fn delta_lines(
    report: &mut Report,
    prefix: &str,
    family: &OrderedFamily,
    modulus: Option<i64>,
) -> Result<bool> {
    let d = divisibility_check(family)?;
    report.line(format!("{prefix}k"), d.k);
    report.line(format!("{prefix}algebraic"), family.all_algebraic());
    report.line(format!("{prefix}delta"), d.global_delta);
    for (v, x) in &d.local_deltas {
        report.line(format!("{prefix}delta_v[{v}]"), *x);
    }
    if let Some(m) = modulus {
        let res: BTreeMap<Vertex, i64> = d
            .local_deltas
            .iter()
            .map(|(v, x)| (*v, x.rem_euclid(m)))
            .collect();
        report.line(format!("{prefix}residues_mod_{m}"), res);
    }
    report.line(format!("{prefix}divisor"), d.divisor);
    report.line(format!("{prefix}divisible"), d.divisibility_pass);
    if family.all_algebraic() {
        for c in &d.certificates {
            report.certificate(format!("{prefix}{c}"));
        }
    }
    Ok(d.divisibility_pass)
}

fn delta(report: &mut Report, doc: &str, family: &str, flags: &GlobalFlags) -> Result<()> {
    let r = resolve(doc, flags)?;
    report.line("family", family);
    delta_lines(report, "", r.family(family)?, flags.modulus)?;
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub struct AuditSelection {
    pub sullivan: bool,
    pub evenness: bool,
    pub constancy: bool,
    pub compactification: bool,
}

/// Runs the selected audits on every object of a resolved document.
pub fn audit(
    report: &mut Report,
    r: &Resolved,
    sel: AuditSelection,
    modulus: Option<i64>,
) -> Result<()> {
    report.line("document", &r.document.meta.name);
    if sel.sullivan {
        for (name, cx) in &r.complexes {
            let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(cx.clone()));
            let e = one.evenness_audit();
            report.line(
                format!("sullivan[{name}]"),
                if e.pass() { "even" } else { "odd" },
            );
            for (cell, value) in &e.odd_cells {
                report.certificate(format!(
                    "sullivan[{name}]: link of cell {cell} has odd Euler characteristic {value}"
                ));
            }
        }
    }
    if sel.evenness {
        for (name, (phi, algebraic)) in &r.functions {
            let e = phi.evenness_audit();
            report.line(
                format!("evenness[{name}]"),
                if e.pass() { "even" } else { "odd" },
            );
            if *algebraic {
                for (cell, value) in &e.odd_cells {
                    report.certificate(format!(
                        "evenness[{name}]: lambda is {value} at cell {cell}"
                    ));
                }
            }
        }
        let m = modulus.unwrap_or(4);
        for (name, strat) in &r.stratifications {
            let one =
                ConstructibleFunction::indicator(&ConstructibleSet::whole(strat.parent().clone()));
            let dual = one.duality_op();
            let res = residues_by_stratum(&dual, strat, m);
            for s in strat.strata() {
                let list = residue_list(&res[&s.name]);
                report.line(format!("dual[{name}][{}]_mod_{m}", s.name), &list);
                if s.irreducible && list.len() > 1 {
                    let cells: Vec<String> = res[&s.name]
                        .values()
                        .map(|c| format!("{c}={}", dual.value(c)))
                        .collect();
                    report.certificate(format!(
                        "dual[{name}]: D(1) residues mod {m} differ on stratum {}: {}",
                        s.name,
                        cells.join(" ")
                    ));
                }
            }
        }
    }
    if sel.constancy {
        for (name, strat) in &r.stratifications {
            for fam_name in &r.document.stratifications[name].families {
                let fam = r.family(fam_name)?;
                let d = constancy_audit(fam, strat, modulus)?;
                let prefix = format!("constancy[{name}][{fam_name}]");
                report.line(format!("{prefix}.delta"), d.global_delta);
                report.line(
                    format!("{prefix}.divisible_by_{}", d.divisor),
                    d.divisibility_pass,
                );
                for s in strat.strata() {
                    report.line(
                        format!("{prefix}[{}]_mod_{}", s.name, d.residue_modulus),
                        residue_list(&d.residues[&s.name]),
                    );
                }
                report.line(
                    format!("{prefix}.constant"),
                    d.constancy_pass.unwrap_or(true),
                );
                if fam.all_algebraic() {
                    for c in &d.certificates {
                        report.certificate(format!("{prefix}: {c}"));
                    }
                }
            }
        }
    }
    if sel.compactification {
        for (name, (fam_name, inf)) in &r.compactifications {
            let split = compactification_split(r.family(fam_name)?, *inf)?;
            let prefix = format!("compactification[{name}]");
            report.line(format!("{prefix}.delta_noncompact"), split.delta_noncompact);
            report.line(
                format!("{prefix}.delta_compactified"),
                split.delta_compactified,
            );
            report.line(format!("{prefix}.correction"), split.correction);
            report.line(
                format!("{prefix}.links_at_infinity_delta"),
                split.links_at_infinity_delta,
            );
        }
    }
    Ok(())
}

fn monodromy(
    report: &mut Report,
    doc: &str,
    only: Option<&str>,
    flags: &GlobalFlags,
) -> Result<()> {
    let r = resolve(doc, flags)?;
    let names: Vec<&String> = match only {
        Some(n) => {
            r.polynomial(n)?;
            r.polynomials.keys().filter(|k| *k == n).collect()
        }
        None => r.polynomials.keys().collect(),
    };
    if names.is_empty() {
        return Err(Error::input("the document has no polynomials"));
    }
    for name in names {
        let f = &r.polynomials[name];
        let p = check_fiber_congruences(f)?;
        let prefix = format!("{name}.");
        report.line(format!("{prefix}f"), f.to_string());
        report.line(format!("{prefix}weights"), [f.weights().0, f.weights().1]);
        report.line(format!("{prefix}degree"), f.degree());
        report.line(format!("{prefix}divisor"), p.monodromy.divisor.to_string());
        report.line(format!("{prefix}mu"), p.monodromy.mu);
        report.line(format!("{prefix}mult_one"), p.monodromy.mult_one);
        report.line(
            format!("{prefix}mult_minus_one"),
            p.monodromy.mult_minus_one,
        );
        report.line(format!("{prefix}l_one"), p.monodromy.l_one);
        report.line(format!("{prefix}l_minus_one"), p.monodromy.l_minus_one);
        report.line(format!("{prefix}chi_plus"), p.real.chi_plus);
        report.line(format!("{prefix}chi_minus"), p.real.chi_minus);
        let seq: String = p.real.sign_sequence.iter().map(|s| s.symbol()).collect();
        report.line(format!("{prefix}sign_sequence"), seq);
        report.line(
            format!("{prefix}difference_mod_4"),
            p.difference.rem_euclid(4),
        );
        report.line(format!("{prefix}sum_mod_4"), p.sum.rem_euclid(4));
        report.line(format!("{prefix}congruences"), "hold");
    }
    Ok(())
}

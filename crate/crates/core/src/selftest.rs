//! Invariant suite over the bundled corpus and seeded random instances.
//!
//! Every check appends one `name: passed/total` line. A failed check is an
//! internal consistency error; the expected verdict of each bundled
//! document is checked against its audit.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cli::{audit, AuditSelection};
use crate::complex::{barycentric_subdivision, Complex, ConstructibleSet, Simplex, Vertex};
use crate::congruence::{compactification_split, delta_global, delta_local, double_cone};
use crate::constructible::ConstructibleFunction;
use crate::corpus;
use crate::document::{Expect, Resolved};
use crate::error::{Error, Result};
use crate::links::{iterated_link, localized_iterated_link, subcomplex_link};
use crate::monodromy::{check_fiber_congruences, reference_table};
use crate::report::{Report, Verdict};

pub const SEED: u64 = 0x5eed_1a2b;
pub const RANDOM_INSTANCES: usize = 120;

/// Random complex with at most `max_simplices` simplices.
pub fn random_complex(rng: &mut impl Rng, max_simplices: usize) -> Complex {
    let n: Vertex = rng.gen_range(3..10);
    let mut cx = Complex::empty();
    for _ in 0..rng.gen_range(2..14) {
        let dim = rng.gen_range(0..4usize).min(n as usize - 1);
        let mut verts: Vec<Vertex> = (0..n).collect();
        verts.shuffle(rng);
        verts.truncate(dim + 1);
        let s = Simplex::new(verts).expect("distinct vertices");
        let mut cells: BTreeSet<Simplex> = cx.simplices().clone();
        cells.extend(s.faces());
        if cells.len() > max_simplices {
            break;
        }
        cx = Complex::closure_of(cells);
    }
    if cx.is_empty() {
        cx = Complex::closure_of([Simplex::vertex(0)]);
    }
    cx
}

/// Closure of a few random simplices.
pub fn random_closed(rng: &mut impl Rng, x: &Arc<Complex>) -> ConstructibleSet {
    let cells: Vec<&Simplex> = x.iter().collect();
    let picks = rng.gen_range(0..4);
    let gens: Vec<Vec<Vertex>> = (0..picks)
        .map(|_| cells[rng.gen_range(0..cells.len())].vertices().to_vec())
        .collect();
    ConstructibleSet::closed_from_generators(x.clone(), gens).expect("cells of x")
}

/// Arbitrary union of open cells.
pub fn random_set(rng: &mut impl Rng, x: &Arc<Complex>) -> ConstructibleSet {
    let p: f64 = rng.gen_range(0.1..0.9);
    let carriers = x.iter().filter(|_| rng.gen_bool(p)).cloned().collect();
    ConstructibleSet::new(x.clone(), carriers).expect("cells of x")
}

/// `closure minus closed`, a locally closed set.
pub fn random_locally_closed(rng: &mut impl Rng, x: &Arc<Complex>) -> ConstructibleSet {
    let c = random_closed(rng, x);
    let f = random_closed(rng, x).intersection(&c);
    c.difference(&f)
}

/// `(χ(lk(Y; U)), χ(Y) + χ(U ∖ Y) - χ(U ∪ Y))`.
pub fn link_identity(y: &ConstructibleSet, u: &ConstructibleSet) -> Result<(i64, i64)> {
    let lk = subcomplex_link(y, &[])?;
    let lhs = lk.trace(u)?.chi();
    let rhs = y.chi() + u.difference(y).chi() - u.union(y).chi();
    Ok((lhs, rhs))
}

/// `χ` of a locally closed set three ways: the poset rule, the full
/// subcomplex of the subdivision spanned by its barycenters, and
/// `χ(C) - χ(F) + χ(lk(F; C))` for its closure `C` and frontier `F`.
pub fn mccord_cross_check(s: &ConstructibleSet) -> Result<[i64; 3]> {
    let poset = s.chi();
    let sd = barycentric_subdivision(s.parent());
    let verts: BTreeSet<Vertex> = s
        .carriers()
        .iter()
        .map(|c| sd.vertex_for(c).expect("barycenter"))
        .collect();
    let spanned = ConstructibleSet::full_on(sd.target.clone(), &verts).to_complex()?;
    let c = s.closure();
    let f = s.frontier();
    let model = if f.is_empty() {
        c.chi()
    } else {
        let cx = Arc::new(c.to_complex()?);
        let f_in_c = ConstructibleSet::new(cx, f.carriers().clone())?;
        c.chi() - f.chi() + subcomplex_link(&f_in_c, &[])?.chi()
    };
    Ok([poset, spanned.euler_characteristic(), model])
}

struct Tally<'a> {
    report: &'a mut Report,
    name: &'static str,
    passed: usize,
    total: usize,
    first_failure: Option<String>,
}

impl<'a> Tally<'a> {
    fn new(report: &'a mut Report, name: &'static str) -> Self {
        Tally {
            report,
            name,
            passed: 0,
            total: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn result<T>(
        &mut self,
        r: Result<T>,
        ok: impl FnOnce(&T) -> bool,
        what: impl FnOnce() -> String,
    ) {
        match r {
            Ok(v) => {
                let good = ok(&v);
                self.check(good, what);
            }
            Err(e) => {
                let msg = format!("{}: {e}", what());
                self.check(false, || msg);
            }
        }
    }

    fn finish(self) {
        self.report
            .line(self.name, format!("{}/{}", self.passed, self.total));
        if let Some(f) = self.first_failure {
            self.report
                .fail(Error::Consistency(format!("{}: {f}", self.name)));
        }
    }
}

pub fn run(report: &mut Report) {
    let docs = corpus::corpus();
    report.line("seed", SEED);
    report.line("corpus_documents", docs.len());

    let mut resolved = Vec::new();
    let mut t = Tally::new(report, "round_trip");
    for d in &docs {
        let again = crate::document::Document::parse(&d.to_toml());
        t.check(again.as_ref().ok() == Some(d), || d.meta.name.clone());
        match d.resolve() {
            Ok(r) => resolved.push(r),
            Err(e) => t.check(false, || format!("{}: {e}", d.meta.name)),
        }
    }
    t.finish();

    expected_verdicts(report, &resolved);
    link_identity_suite(report, &resolved);
    mccord_suite(report);
    iterated_link_suite(report, &resolved);
    divisibility_suite(report, &resolved);
    evenness_suite(report, &resolved);
    lambda_additivity_suite(report, &resolved);
    compactification_suite(report, &resolved);
    monodromy_suite(report);
}

fn expected_verdicts(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "expected_verdicts");
    for r in docs {
        let mut sub = Report::new();
        let sel = AuditSelection {
            sullivan: true,
            evenness: true,
            constancy: true,
            compactification: true,
        };
        let res = audit(&mut sub, r, sel, None);
        let want = match r.document.meta.expect {
            Expect::Pass => Verdict::Pass,
            Expect::Obstruction => Verdict::Obstruction,
        };
        t.check(res.is_ok() && sub.verdict() == want, || {
            format!("{}: got {}", r.document.meta.name, sub.verdict().as_str())
        });
    }
    t.finish();
}

fn link_identity_suite(report: &mut Report, docs: &[Resolved]) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut t = Tally::new(report, "link_identity_random");
    for i in 0..RANDOM_INSTANCES {
        let x = Arc::new(random_complex(&mut rng, 200));
        let y = random_closed(&mut rng, &x);
        let u = random_set(&mut rng, &x);
        t.result(
            link_identity(&y, &u),
            |(a, b)| a == b,
            || format!("instance {i}"),
        );
    }
    t.finish();

    let mut t = Tally::new(report, "link_identity_corpus");
    for r in docs {
        for (yn, y) in r.sets.iter().filter(|(_, s)| s.is_closed()) {
            for (un, u) in &r.sets {
                if **u.parent() != **y.parent() {
                    continue;
                }
                t.result(
                    link_identity(y, u),
                    |(a, b)| a == b,
                    || format!("{}: Y={yn} U={un}", r.document.meta.name),
                );
            }
        }
    }
    t.finish();
}

fn mccord_suite(report: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut t = Tally::new(report, "mccord_locally_closed");
    let mut closed = 0;
    let mut closed_ok = 0;
    for i in 0..RANDOM_INSTANCES {
        let x = Arc::new(random_complex(&mut rng, 120));
        let s = random_locally_closed(&mut rng, &x);
        t.result(
            mccord_cross_check(&s),
            |v| v[0] == v[1] && v[1] == v[2],
            || format!("instance {i}"),
        );
        if s.is_closed() {
            closed += 1;
            closed_ok += usize::from(s.chi() == s.chi_c());
        }
        let c = random_closed(&mut rng, &x);
        closed += 1;
        closed_ok += usize::from(c.chi() == c.chi_c());
    }
    t.finish();
    report.line(
        "mccord_closed_equals_chi_c",
        format!("{closed_ok}/{closed}"),
    );
    if closed_ok != closed {
        report.fail(Error::Consistency(
            "chi differs from chi_c on a closed set".into(),
        ));
    }
}

fn iterated_link_suite(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "iterated_link_delta");
    for r in docs {
        for (name, fam) in r
            .families
            .iter()
            .filter(|(_, f)| f.is_nested() && f.k() > 0)
        {
            let tag = || format!("{}/{name}", r.document.meta.name);
            t.result(
                iterated_link(fam).map(|m| m.chi()),
                |c| *c == delta_global(fam),
                tag,
            );
            for &v in fam.parent().vertices() {
                let both = localized_iterated_link(v, fam)
                    .map(|m| m.chi())
                    .and_then(|c| Ok((c, delta_local(v, fam)?)));
                t.result(
                    both,
                    |(a, b)| a == b,
                    || format!("{}/{name} at {v}", r.document.meta.name),
                );
            }
        }
    }
    t.finish();
}

fn divisibility_suite(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "divisibility_algebraic");
    for r in docs
        .iter()
        .filter(|r| r.document.meta.expect == Expect::Pass)
    {
        for (name, fam) in r.families.iter().filter(|(_, f)| f.all_algebraic()) {
            let d = crate::congruence::divisibility_check(fam);
            t.result(
                d,
                |d| d.divisibility_pass,
                || format!("{}/{name}", r.document.meta.name),
            );
        }
    }
    t.finish();

    let mut t = Tally::new(report, "double_cone");
    for r in docs {
        for (name, fam) in r.families.iter().filter(|(_, f)| f.is_nested()) {
            let both = double_cone(fam)
                .and_then(|dc| Ok((delta_local(dc.apex, &dc.family)?, delta_global(fam))));
            t.result(
                both,
                |(a, b)| *a == 2 * b,
                || format!("{}/{name}", r.document.meta.name),
            );
        }
    }
    t.finish();
}

fn evenness_suite(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "lambda_even_on_algebraic_models");
    for r in docs
        .iter()
        .filter(|r| r.document.meta.expect == Expect::Pass)
    {
        for (name, cx) in &r.complexes {
            let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(cx.clone()));
            t.check(one.evenness_audit().pass(), || {
                format!("{}/{name}", r.document.meta.name)
            });
        }
    }
    t.finish();
}

fn lambda_additivity_suite(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "lambda_representation_independence");
    for r in docs {
        let closed: Vec<&ConstructibleSet> = r.sets.values().filter(|s| s.is_closed()).collect();
        for a in &closed {
            for b in &closed {
                if **a.parent() != **b.parent() {
                    continue;
                }
                let l = |s: &ConstructibleSet| ConstructibleFunction::indicator(s).lambda_op();
                let lhs = l(a).add(&l(b));
                let rhs = l(&a.union(b)).add(&l(&a.intersection(b)));
                t.check(lhs == rhs, || r.document.meta.name.clone());
            }
        }
    }
    t.finish();
}

fn compactification_suite(report: &mut Report, docs: &[Resolved]) {
    let mut t = Tally::new(report, "compactification_split");
    for r in docs {
        for (name, (fam, inf)) in &r.compactifications {
            let split = r.family(fam).and_then(|f| compactification_split(f, *inf));
            t.result(
                split,
                |s| s.delta_noncompact == s.delta_compactified - s.correction,
                || format!("{}/{name}", r.document.meta.name),
            );
        }
    }
    t.finish();
}

fn monodromy_suite(report: &mut Report) {
    let mut t = Tally::new(report, "fiber_congruences_reference_table");
    for (name, f) in reference_table() {
        t.result(
            check_fiber_congruences(&f),
            |p| {
                let (w1, w2) = (i64::from(f.weights().0), i64::from(f.weights().1));
                let d = i64::from(f.degree());
                p.monodromy.mu * w1 * w2 == (d - w1) * (d - w2)
            },
            || name.to_string(),
        );
    }
    t.finish();
}

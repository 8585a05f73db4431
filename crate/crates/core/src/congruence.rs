//! The inclusion–exclusion invariants `Δ(𝒳, X)` and `Δ_x(𝒳, X)` of an
//! ordered family of closed subcomplexes, and the audits built on them:
//! divisibility by `2^k`, generic constancy modulo `2^(k+1)` along strata,
//! the double cone reduction and the one-point compactification bookkeeping.
//!
//! With `U_i = X_i ∖ X_{i-1}` (`X_0 = ∅`, `X_{k+1} = X`),
//!
//! ```text
//! Δ(𝒳, X)   = Σ_{∅ ≠ I ⊆ {1..k+1}} (-1)^(|I|+1) χ(∪_{i∈I} U_i)
//! Δ_v(𝒳, X) = Σ_{∅ ≠ I ⊆ {1..k+1}} (-1)^(|I|+1) χ(B(v,ε) ∩ ∪_{i∈I} U_i)
//! ```
//!
//! and every `χ` is the ordinary Euler characteristic of a union of open
//! cells. Failed divisibility or constancy is a finding, reported as a
//! [`Certificate`], not an error.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::complex::{
    barycentric_subdivision, Complex, ConstructibleSet, Simplex, SubdivisionMap, Vertex,
};
use crate::constructible::ConstructibleFunction;
use crate::error::{Error, Result};
use crate::links::{local_chi, localized_iterated_link, point_link_constructible, vertex_link};

/// Ordered family `X_1, …, X_k` of closed subcomplexes of a complex.
#[derive(Clone, Debug)]
pub struct OrderedFamily {
    parent: Arc<Complex>,
    members: Vec<ConstructibleSet>,
    algebraic: Vec<bool>,
}

impl OrderedFamily {
    pub fn new(
        parent: Arc<Complex>,
        members: Vec<ConstructibleSet>,
        algebraic: Vec<bool>,
    ) -> Result<Self> {
        if algebraic.len() != members.len() {
            return Err(Error::input(
                "one algebraic flag is needed per family member",
            ));
        }
        for (i, m) in members.iter().enumerate() {
            if **m.parent() != *parent {
                return Err(Error::input(format!(
                    "member {} lives in another complex",
                    i + 1
                )));
            }
            if !m.is_closed() {
                return Err(Error::input(format!("member {} is not closed", i + 1)));
            }
        }
        Ok(OrderedFamily {
            parent,
            members,
            algebraic,
        })
    }

    /// Every member flagged algebraic.
    pub fn algebraic(parent: Arc<Complex>, members: Vec<ConstructibleSet>) -> Result<Self> {
        let flags = vec![true; members.len()];
        Self::new(parent, members, flags)
    }

    pub fn parent(&self) -> &Arc<Complex> {
        &self.parent
    }

    pub fn members(&self) -> &[ConstructibleSet] {
        &self.members
    }

    pub fn algebraic_flags(&self) -> &[bool] {
        &self.algebraic
    }

    pub fn all_algebraic(&self) -> bool {
        self.algebraic.iter().all(|a| *a)
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    /// `X_1 ⊆ X_2 ⊆ … ⊆ X_k`.
    pub fn is_nested(&self) -> bool {
        self.members.windows(2).all(|w| w[0].is_subset(&w[1]))
    }

    /// `U_1, …, U_{k+1}`.
    pub fn pieces(&self) -> Vec<ConstructibleSet> {
        let whole = ConstructibleSet::whole(self.parent.clone());
        let mut previous = ConstructibleSet::empty(self.parent.clone());
        let mut out = Vec::with_capacity(self.k() + 1);
        for m in self.members.iter().chain(std::iter::once(&whole)) {
            out.push(m.difference(&previous));
            previous = m.clone();
        }
        out
    }

    pub fn transport(&self, sd: &SubdivisionMap) -> OrderedFamily {
        OrderedFamily {
            parent: sd.target.clone(),
            members: self.members.iter().map(|m| sd.transport(m)).collect(),
            algebraic: self.algebraic.clone(),
        }
    }
}

/// Alternating sum of `f(U_I)` over nonempty index sets.
fn inclusion_exclusion(pieces: &[ConstructibleSet], f: impl Fn(&ConstructibleSet) -> i64) -> i64 {
    let n = pieces.len();
    assert!(n < 31, "family too large");
    let Some(first) = pieces.first() else {
        return 0;
    };
    let mut total = 0;
    for mask in 1u32..(1 << n) {
        let mut carriers = BTreeSet::new();
        for (i, p) in pieces.iter().enumerate() {
            if mask & (1 << i) != 0 {
                carriers.extend(p.carriers().iter().cloned());
            }
        }
        let union = ConstructibleSet::new_unchecked(first.parent().clone(), carriers);
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        total += sign * f(&union);
    }
    total
}

/// `Δ(𝒳, X)`. Nesting is not required.
pub fn delta_global(family: &OrderedFamily) -> i64 {
    inclusion_exclusion(&family.pieces(), ConstructibleSet::chi)
}

/// `Δ_v(𝒳, X)` by inclusion–exclusion only.
pub fn delta_local_formula(v: Vertex, family: &OrderedFamily) -> i64 {
    inclusion_exclusion(&family.pieces(), |u| local_chi(v, u))
}

/// `Δ_v(𝒳, X)`. For nested families the value is also computed as the Euler
/// characteristic of the localized iterated link, and the two must agree.
pub fn delta_local(v: Vertex, family: &OrderedFamily) -> Result<i64> {
    if !family.parent().has_vertex(v) {
        return Err(Error::input(format!("vertex {v} is not in the complex")));
    }
    let by_formula = delta_local_formula(v, family);
    if family.is_nested() && family.k() > 0 {
        let by_link = localized_iterated_link(v, family)?.chi();
        if by_link != by_formula {
            return Err(Error::Consistency(format!(
                "at vertex {v}: inclusion-exclusion gives {by_formula}, localized iterated link gives {by_link}"
            )));
        }
    }
    Ok(by_formula)
}

/// A mathematical finding that rules out algebraicity of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    NotDivisible {
        location: String,
        value: i64,
        modulus: i64,
    },
    ResidueSplit {
        stratum: String,
        modulus: i64,
        witnesses: Vec<(Simplex, i64)>,
    },
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::NotDivisible {
                location,
                value,
                modulus,
            } => write!(f, "{location}: value {value} not divisible by {modulus}"),
            Certificate::ResidueSplit {
                stratum,
                modulus,
                witnesses,
            } => {
                write!(f, "stratum {stratum}: residues mod {modulus} differ at")?;
                for (cell, value) in witnesses {
                    write!(f, " {cell}={value}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct DeltaReport {
    pub k: usize,
    pub global_delta: i64,
    pub local_deltas: BTreeMap<Vertex, i64>,
    /// `2^k`.
    pub divisor: i64,
    pub divisibility_pass: bool,
    /// Modulus used for residues, `2^(k+1)` unless overridden.
    pub residue_modulus: i64,
    /// Residue → first cell realizing it, per stratum.
    pub residues: BTreeMap<String, BTreeMap<i64, Simplex>>,
    pub constancy_pass: Option<bool>,
    /// `x ↦ Δ_x` on every open cell, when a constancy audit ran.
    pub stalk: Option<ConstructibleFunction>,
    pub certificates: Vec<Certificate>,
}

impl DeltaReport {
    pub fn pass(&self) -> bool {
        self.divisibility_pass && self.constancy_pass.unwrap_or(true)
    }
}

fn pow2(k: usize) -> i64 {
    1i64 << k
}

/// `Δ` and `Δ_v` at every vertex, with a divisibility verdict.
pub fn divisibility_check(family: &OrderedFamily) -> Result<DeltaReport> {
    let k = family.k();
    let divisor = pow2(k);
    let global_delta = delta_global(family);
    let mut local_deltas = BTreeMap::new();
    for &v in family.parent().vertices() {
        local_deltas.insert(v, delta_local(v, family)?);
    }
    let mut certificates = Vec::new();
    if global_delta % divisor != 0 {
        certificates.push(Certificate::NotDivisible {
            location: "global".into(),
            value: global_delta,
            modulus: divisor,
        });
    }
    for (v, d) in &local_deltas {
        if d % divisor != 0 {
            certificates.push(Certificate::NotDivisible {
                location: format!("vertex {v}"),
                value: *d,
                modulus: divisor,
            });
        }
    }
    Ok(DeltaReport {
        k,
        global_delta,
        local_deltas,
        divisor,
        divisibility_pass: certificates.is_empty(),
        residue_modulus: pow2(k + 1),
        residues: BTreeMap::new(),
        constancy_pass: None,
        stalk: None,
        certificates,
    })
}

/// A named stratum of a [`Stratification`].
#[derive(Clone, Debug)]
pub struct Stratum {
    pub name: String,
    pub set: ConstructibleSet,
    /// Declared irreducible; only these strata are held to constancy.
    pub irreducible: bool,
}

/// Partition of a complex into locally closed strata.
#[derive(Clone, Debug)]
pub struct Stratification {
    parent: Arc<Complex>,
    strata: Vec<Stratum>,
}

impl Stratification {
    pub fn new(parent: Arc<Complex>, strata: Vec<Stratum>) -> Result<Self> {
        let mut seen: BTreeMap<&Simplex, &str> = BTreeMap::new();
        for s in &strata {
            if **s.set.parent() != *parent {
                return Err(Error::input(format!(
                    "stratum {} lives in another complex",
                    s.name
                )));
            }
            if !s.set.is_locally_closed() {
                return Err(Error::input(format!(
                    "stratum {} is not locally closed",
                    s.name
                )));
            }
            for c in s.set.carriers() {
                if let Some(other) = seen.insert(c, &s.name) {
                    return Err(Error::input(format!(
                        "cell {c} lies in strata {other} and {}",
                        s.name
                    )));
                }
            }
        }
        if let Some(missing) = parent.iter().find(|c| !seen.contains_key(c)) {
            return Err(Error::input(format!("cell {missing} is in no stratum")));
        }
        Ok(Stratification { parent, strata })
    }

    pub fn parent(&self) -> &Arc<Complex> {
        &self.parent
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum_of(&self, cell: &Simplex) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.set.contains(cell))
    }

    pub fn transport(&self, sd: &SubdivisionMap) -> Stratification {
        Stratification {
            parent: sd.target.clone(),
            strata: self
                .strata
                .iter()
                .map(|s| Stratum {
                    name: s.name.clone(),
                    set: sd.transport(&s.set),
                    irreducible: s.irreducible,
                })
                .collect(),
        }
    }
}

/// Residues of a cell function modulo `modulus` on every stratum, each with
/// the first cell that realizes it.
pub fn residues_by_stratum(
    values: &ConstructibleFunction,
    strat: &Stratification,
    modulus: i64,
) -> BTreeMap<String, BTreeMap<i64, Simplex>> {
    strat
        .strata()
        .iter()
        .map(|s| {
            let mut res = BTreeMap::new();
            for cell in s.set.carriers() {
                res.entry(values.value(cell).rem_euclid(modulus))
                    .or_insert_with(|| cell.clone());
            }
            (s.name.clone(), res)
        })
        .collect()
}

/// `x ↦ Δ_x(𝒳, X)` on every open cell, evaluated at barycenters in one
/// subdivision.
pub fn stalk_function(family: &OrderedFamily) -> Result<ConstructibleFunction> {
    let sd = barycentric_subdivision(family.parent());
    let fine = family.transport(&sd);
    let mut weights = BTreeMap::new();
    for cell in family.parent().iter() {
        let b = sd.vertex_for(cell).expect("every cell has a barycenter");
        weights.insert(cell.clone(), delta_local(b, &fine)?);
    }
    ConstructibleFunction::from_weights(family.parent().clone(), weights)
}

/// Generic constancy of `Δ_x` modulo `2^(k+1)` (or `modulus`) along each
/// stratum declared irreducible, on top of the divisibility check.
pub fn constancy_audit(
    family: &OrderedFamily,
    strat: &Stratification,
    modulus: Option<i64>,
) -> Result<DeltaReport> {
    if **strat.parent() != **family.parent() {
        return Err(Error::input(
            "stratification and family live in different complexes",
        ));
    }
    let mut report = divisibility_check(family)?;
    let modulus = modulus.unwrap_or(report.residue_modulus);
    if modulus <= 0 {
        return Err(Error::input("residue modulus must be positive"));
    }
    let stalk = stalk_function(family)?;
    let residues = residues_by_stratum(&stalk, strat, modulus);
    let mut constant = true;
    for s in strat.strata().iter().filter(|s| s.irreducible) {
        let res = &residues[&s.name];
        if res.len() > 1 {
            constant = false;
            report.certificates.push(Certificate::ResidueSplit {
                stratum: s.name.clone(),
                modulus,
                witnesses: res
                    .values()
                    .map(|cell| (cell.clone(), stalk.value(cell)))
                    .collect(),
            });
        }
    }
    report.residue_modulus = modulus;
    report.residues = residues;
    report.constancy_pass = Some(constant);
    report.stalk = Some(stalk);
    Ok(report)
}

/// The double cone `p_0 * (X ⊔ X)` with the family
/// `{p_0}, p_0 * (X_1 ⊔ X_1), …, p_0 * (X_k ⊔ X_k)`.
#[derive(Clone, Debug)]
pub struct DoubleCone {
    pub complex: Arc<Complex>,
    pub family: OrderedFamily,
    pub apex: Vertex,
}

pub fn double_cone(family: &OrderedFamily) -> Result<DoubleCone> {
    let x = family.parent();
    let offset = x.max_vertex().map_or(0, |m| m + 1);
    let apex = 2 * offset;
    let copy = |s: &Simplex, shift: Vertex| -> Vec<Vertex> {
        s.vertices().iter().map(|v| v + shift).collect()
    };
    let coned = |cells: &BTreeSet<Simplex>| -> Vec<Vec<Vertex>> {
        let mut gens = vec![vec![apex]];
        for s in cells {
            for shift in [0, offset] {
                let mut g = copy(s, shift);
                g.push(apex);
                gens.push(g);
            }
        }
        gens
    };
    let complex = Arc::new(Complex::build(coned(x.simplices()))?);
    let mut members = vec![ConstructibleSet::closed_from_generators(
        complex.clone(),
        vec![vec![apex]],
    )?];
    for m in family.members() {
        members.push(ConstructibleSet::closed_from_generators(
            complex.clone(),
            coned(m.carriers()),
        )?);
    }
    let mut flags = vec![true];
    flags.extend_from_slice(family.algebraic_flags());
    Ok(DoubleCone {
        family: OrderedFamily::new(complex.clone(), members, flags)?,
        complex,
        apex,
    })
}

/// Bookkeeping for a non-compact `X = X̃ ∖ {∞}` and its one-point
/// compactification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactificationSplit {
    pub delta_noncompact: i64,
    pub delta_compactified: i64,
    /// `Σ_{I ∋ 1} (-1)^(|I|+1) (1 - χ(lk(∞; U_I)))`, which for `k ≥ 1` is
    /// `Σ_{T ⊆ {2..k+1}} (-1)^(|T|+1) χ(lk(∞; Ũ_1 ∪ U_T))`.
    pub correction: i64,
    /// `Δ(𝒳', X')` for the links at infinity `X' = lk(∞; X̃)`,
    /// `X'_i = lk(∞; X̃_i)`.
    pub links_at_infinity_delta: i64,
}

/// Splits `Δ` of the non-compact family `X_i ∖ {∞}` in `X̃ ∖ {∞}` into the
/// compactified value and a correction term read off at `∞`.
///
/// `family` lives on the compact model `X̃`; its members need not contain
/// `∞`, the compactified members are `X_i ∪ {∞}`.
pub fn compactification_split(
    family: &OrderedFamily,
    infinity: Vertex,
) -> Result<CompactificationSplit> {
    let xt = family.parent().clone();
    if !xt.has_vertex(infinity) {
        return Err(Error::input(format!(
            "vertex {infinity} is not in the complex"
        )));
    }
    let inf_cell = Simplex::vertex(infinity);
    let point = ConstructibleSet::new_unchecked(xt.clone(), [inf_cell.clone()].into());

    let compact_members: Vec<ConstructibleSet> =
        family.members().iter().map(|m| m.union(&point)).collect();
    let compact = OrderedFamily::new(
        xt.clone(),
        compact_members.clone(),
        family.algebraic_flags().to_vec(),
    )?;
    let delta_compactified = delta_global(&compact);

    let open_pieces: Vec<ConstructibleSet> = compact
        .pieces()
        .into_iter()
        .map(|p| p.difference(&point))
        .collect();
    let delta_noncompact = inclusion_exclusion(&open_pieces, ConstructibleSet::chi);

    let n = open_pieces.len();
    let mut correction = 0i64;
    for mask in (1u32..(1 << n)).filter(|m| m & 1 == 1) {
        let mut carriers = BTreeSet::new();
        for (i, p) in open_pieces.iter().enumerate() {
            if mask & (1 << i) != 0 {
                carriers.extend(p.carriers().iter().cloned());
            }
        }
        let union = ConstructibleSet::new_unchecked(xt.clone(), carriers);
        let lk = point_link_constructible(infinity, &union)?.chi();
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        correction += sign * (1 - lk);
    }

    if delta_noncompact != delta_compactified - correction {
        return Err(Error::Consistency(format!(
            "non-compact delta {delta_noncompact} != {delta_compactified} - {correction}"
        )));
    }

    let xp = Arc::new(vertex_link(infinity, &xt)?);
    let mut link_members = Vec::new();
    for m in &compact_members {
        let lk = vertex_link(infinity, &m.to_complex()?)?;
        link_members.push(ConstructibleSet::new(xp.clone(), lk.simplices().clone())?);
    }
    let links = OrderedFamily::new(xp, link_members, family.algebraic_flags().to_vec())?;
    Ok(CompactificationSplit {
        delta_noncompact,
        delta_compactified,
        correction,
        links_at_infinity_delta: delta_global(&links),
    })
}

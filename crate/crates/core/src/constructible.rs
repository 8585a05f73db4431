//! Integer-valued constructible functions, stored on open cells, with the
//! link operator `Λ` and the duality `D = id - Λ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{
    boundary_sphere_chi, join_chi, Complex, ConstructibleSet, Simplex, SubdivisionMap,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructibleFunction {
    parent: Arc<Complex>,
    /// Nonzero values only.
    weights: BTreeMap<Simplex, i64>,
}

impl ConstructibleFunction {
    pub fn zero(parent: Arc<Complex>) -> Self {
        ConstructibleFunction {
            parent,
            weights: BTreeMap::new(),
        }
    }

    pub fn from_weights(parent: Arc<Complex>, weights: BTreeMap<Simplex, i64>) -> Result<Self> {
        if let Some(s) = weights.keys().find(|s| !parent.contains(s)) {
            return Err(Error::input(format!("{s} is not a simplex of the complex")));
        }
        let weights = weights.into_iter().filter(|(_, w)| *w != 0).collect();
        Ok(ConstructibleFunction { parent, weights })
    }

    /// `1_S` for any union of open cells.
    pub fn indicator(set: &ConstructibleSet) -> Self {
        ConstructibleFunction {
            parent: set.parent().clone(),
            weights: set.carriers().iter().map(|s| (s.clone(), 1)).collect(),
        }
    }

    /// `Σ c_i 1_{X_i}` with every `X_i` closed.
    pub fn from_indicators(
        parent: Arc<Complex>,
        terms: &[(i64, ConstructibleSet)],
    ) -> Result<Self> {
        let mut weights: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (i, (c, set)) in terms.iter().enumerate() {
            if **set.parent() != *parent {
                return Err(Error::input(format!(
                    "term {} lives in another complex",
                    i + 1
                )));
            }
            if !set.is_closed() {
                return Err(Error::input(format!(
                    "term {} is not a closed subcomplex",
                    i + 1
                )));
            }
            for s in set.carriers() {
                *weights.entry(s.clone()).or_default() += c;
            }
        }
        Self::from_weights(parent, weights)
    }

    pub fn parent(&self) -> &Arc<Complex> {
        &self.parent
    }

    pub fn weights(&self) -> &BTreeMap<Simplex, i64> {
        &self.weights
    }

    pub fn value(&self, cell: &Simplex) -> i64 {
        self.weights.get(cell).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    fn same_parent(&self, other: &ConstructibleFunction) {
        assert!(
            Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent,
            "functions on different complexes"
        );
    }

    pub fn add(&self, other: &ConstructibleFunction) -> ConstructibleFunction {
        self.combine(1, other, 1)
    }

    pub fn sub(&self, other: &ConstructibleFunction) -> ConstructibleFunction {
        self.combine(1, other, -1)
    }

    pub fn scale(&self, a: i64) -> ConstructibleFunction {
        ConstructibleFunction {
            parent: self.parent.clone(),
            weights: self
                .weights
                .iter()
                .map(|(s, w)| (s.clone(), a * w))
                .filter(|(_, w)| *w != 0)
                .collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &ConstructibleFunction, b: i64) -> ConstructibleFunction {
        self.same_parent(other);
        let mut weights: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (s, w) in &self.weights {
            *weights.entry(s.clone()).or_default() += a * w;
        }
        for (s, w) in &other.weights {
            *weights.entry(s.clone()).or_default() += b * w;
        }
        weights.retain(|_, w| *w != 0);
        ConstructibleFunction {
            parent: self.parent.clone(),
            weights,
        }
    }

    /// Coefficients `c_τ` with `φ = Σ_τ c_τ 1_{closure(τ)}`.
    pub fn closed_cell_coefficients(&self) -> BTreeMap<Simplex, i64> {
        let mut c: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (rho, w) in &self.weights {
            for tau in rho.faces() {
                let sign = if (rho.dim() - tau.dim()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                *c.entry(tau).or_default() += sign * w;
            }
        }
        c.retain(|_, v| *v != 0);
        c
    }

    /// `Λφ(x) = Σ c_τ χ(lk(x; closure(τ)))`.
    pub fn lambda_op(&self) -> ConstructibleFunction {
        let mut out: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (tau, c) in self.closed_cell_coefficients() {
            for alpha in tau.faces() {
                // lk(α; closure τ) is the closed simplex on τ ∖ α, or empty.
                let lk_chi = if alpha == tau { 0 } else { 1 };
                let value = join_chi(boundary_sphere_chi(alpha.dim()), lk_chi);
                *out.entry(alpha).or_default() += c * value;
            }
        }
        out.retain(|_, v| *v != 0);
        ConstructibleFunction {
            parent: self.parent.clone(),
            weights: out,
        }
    }

    /// `D φ = φ - Λφ`.
    pub fn duality_op(&self) -> ConstructibleFunction {
        self.sub(&self.lambda_op())
    }

    /// `∫ φ dχ_c = Σ φ(σ) (-1)^dim σ`.
    pub fn euler_integral(&self) -> i64 {
        self.weights.iter().map(|(s, w)| s.sign() * w).sum()
    }

    /// Cells where `Λφ` is odd, with the value.
    pub fn evenness_audit(&self) -> EvennessReport {
        let lambda = self.lambda_op();
        let odd_cells = lambda
            .weights
            .iter()
            .filter(|(_, v)| *v % 2 != 0)
            .map(|(s, v)| (s.clone(), *v))
            .collect();
        EvennessReport { lambda, odd_cells }
    }

    /// The same function on the subdivision.
    pub fn transport(&self, sd: &SubdivisionMap) -> ConstructibleFunction {
        ConstructibleFunction {
            parent: sd.target.clone(),
            weights: sd.transport_values(&self.weights),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EvennessReport {
    pub lambda: ConstructibleFunction,
    pub odd_cells: Vec<(Simplex, i64)>,
}

impl EvennessReport {
    pub fn pass(&self) -> bool {
        self.odd_cells.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::barycentric_subdivision;
    use crate::corpus::builders;
    use crate::links::point_link_chi;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn closed(x: &Arc<Complex>, gens: &[&[u32]]) -> ConstructibleSet {
        ConstructibleSet::closed_from_generators(x.clone(), gens.iter().map(|g| g.to_vec()))
            .unwrap()
    }

    /// `Λ(1_K)` straight from point links, cell by cell.
    fn lambda_of_closed(k: &ConstructibleSet) -> BTreeMap<Simplex, i64> {
        let kc = k.to_complex().unwrap();
        k.parent()
            .iter()
            .map(|a| {
                let v = if kc.contains(a) {
                    point_link_chi(a, &kc).unwrap()
                } else {
                    0
                };
                (a.clone(), v)
            })
            .collect()
    }

    /// `Λφ(α) = Σ_{ρ ≥ α} φ(ρ) χ_c(lk(x; open ρ))`: a sphere for `ρ = α`,
    /// an open ball of dimension `dim ρ - 1` otherwise.
    fn lambda_oracle(phi: &ConstructibleFunction) -> BTreeMap<Simplex, i64> {
        phi.parent()
            .iter()
            .map(|a| {
                let v: i64 = phi
                    .weights()
                    .iter()
                    .filter(|(r, _)| a.is_face_of(r))
                    .map(|(r, w)| {
                        if r == a {
                            (1 - a.sign()) * w
                        } else {
                            -r.sign() * w
                        }
                    })
                    .sum();
                (a.clone(), v)
            })
            .collect()
    }

    fn values(phi: &ConstructibleFunction) -> BTreeMap<Simplex, i64> {
        phi.parent()
            .iter()
            .map(|a| (a.clone(), phi.value(a)))
            .collect()
    }

    #[test]
    fn from_indicators_examples() {
        let s2 = Arc::new(builders::tetrahedron_boundary());
        let one = ConstructibleFunction::from_indicators(
            s2.clone(),
            &[(1, ConstructibleSet::whole(s2.clone()))],
        )
        .unwrap();
        assert!(s2.iter().all(|c| one.value(c) == 1));

        let x = Arc::new(Complex::build(vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap());
        let a = closed(&x, &[&[0, 1]]);
        let b = closed(&x, &[&[1, 2]]);
        let phi = ConstructibleFunction::from_indicators(
            x.clone(),
            &[(1, a.clone()), (1, b.clone()), (-1, a.intersection(&b))],
        )
        .unwrap();
        assert_eq!(phi, ConstructibleFunction::indicator(&a.union(&b)));

        assert!(ConstructibleFunction::from_indicators(x.clone(), &[])
            .unwrap()
            .is_zero());

        let open = ConstructibleSet::new(x.clone(), [s(&[0, 1])].into()).unwrap();
        assert!(matches!(
            ConstructibleFunction::from_indicators(x, &[(1, open)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn lambda_and_duality_examples() {
        let interval = Arc::new(builders::path(2));
        let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(interval.clone()));
        let l = one.lambda_op();
        assert_eq!(l.value(&s(&[0])), 1);
        assert_eq!(l.value(&s(&[2])), 1);
        assert_eq!(l.value(&s(&[1])), 2);
        assert_eq!(l.value(&s(&[0, 1])), 2);
        let d = one.duality_op();
        assert_eq!(d.value(&s(&[0])), 0);
        assert_eq!(d.value(&s(&[1])), -1);
        assert_eq!(d.value(&s(&[1, 2])), -1);

        let s2 = Arc::new(builders::tetrahedron_boundary());
        let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(s2.clone()));
        assert!(one.lambda_op().is_zero());
        assert_eq!(one.duality_op(), one);
        assert!(ConstructibleFunction::zero(s2).duality_op().is_zero());

        let theta = Arc::new(builders::theta_cone());
        let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(theta.clone()));
        assert_eq!(
            one.lambda_op()
                .value(&Simplex::vertex(builders::THETA_APEX)),
            -1
        );
    }

    #[test]
    fn euler_integral_examples() {
        let s2 = Arc::new(builders::tetrahedron_boundary());
        let one = ConstructibleFunction::indicator(&ConstructibleSet::whole(s2.clone()));
        assert_eq!(one.euler_integral(), 2);
        let edge = ConstructibleFunction::indicator(
            &ConstructibleSet::new(s2.clone(), [s(&[0, 1])].into()).unwrap(),
        );
        assert_eq!(edge.euler_integral(), -1);
        assert_eq!(one.combine(3, &edge, -2).euler_integral(), 3 * 2 + 2);
    }

    #[test]
    fn evenness_examples() {
        let theta = Arc::new(builders::theta_cone());
        let r = ConstructibleFunction::indicator(&ConstructibleSet::whole(theta)).evenness_audit();
        assert!(r
            .odd_cells
            .contains(&(Simplex::vertex(builders::THETA_APEX), -1)));

        for x in [
            builders::tetrahedron_boundary(),
            builders::whitney_umbrella(),
            builders::octahedron(),
        ] {
            let r = ConstructibleFunction::indicator(&ConstructibleSet::whole(Arc::new(x)))
                .evenness_audit();
            assert!(r.pass(), "{:?}", r.odd_cells);
        }
    }

    #[test]
    fn indicator_lambda_matches_point_links() {
        for x in [
            builders::theta_cone(),
            builders::whitney_umbrella(),
            builders::octahedron(),
        ] {
            let x = Arc::new(x);
            let whole = ConstructibleSet::whole(x.clone());
            assert_eq!(
                values(&ConstructibleFunction::indicator(&whole).lambda_op()),
                lambda_of_closed(&whole)
            );
            for v in x.vertices() {
                let star = closed(&x, &[&[*v]]);
                let set = ConstructibleSet::closed_from_generators(
                    x.clone(),
                    x.iter()
                        .filter(|c| c.contains(*v))
                        .map(|c| c.vertices().to_vec()),
                )
                .unwrap();
                for k in [star, set] {
                    assert_eq!(
                        values(&ConstructibleFunction::indicator(&k).lambda_op()),
                        lambda_of_closed(&k)
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_matches_open_cell_oracle() {
        let x = Arc::new(builders::whitney_umbrella());
        let mut weights = BTreeMap::new();
        for (i, c) in x.iter().enumerate() {
            weights.insert(c.clone(), (i as i64 * 7) % 5 - 2);
        }
        let phi = ConstructibleFunction::from_weights(x, weights).unwrap();
        assert_eq!(values(&phi.lambda_op()), lambda_oracle(&phi));
    }

    #[test]
    fn lambda_is_invariant_under_subdivision() {
        let x = Arc::new(builders::theta_cone());
        let phi = ConstructibleFunction::from_indicators(
            x.clone(),
            &[
                (3, ConstructibleSet::whole(x.clone())),
                (-2, closed(&x, &[&[0, 2, 5]])),
                (5, closed(&x, &[&[1]])),
            ],
        )
        .unwrap();
        let sd = barycentric_subdivision(&x);
        assert_eq!(
            phi.transport(&sd).lambda_op(),
            phi.lambda_op().transport(&sd)
        );
    }
}

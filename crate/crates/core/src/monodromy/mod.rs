//! Weighted homogeneous plane curve singularities `f(x, y)`: monodromy
//! eigenvalue data from the Milnor–Orlik divisor, exact Euler
//! characteristics of the real Milnor fibres `F_±`, and the mod 4
//! congruences tying the two together.

pub mod univariate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use univariate::{isolate_real_roots, separating_samples, UniPoly};

/// `Σ c_{ab} x^a y^b` with `a w_1 + b w_2 = d` for every term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPoly {
    weights: (u32, u32),
    degree: u32,
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl WeightedPoly {
    /// Collects like terms and drops zero coefficients. Homogeneity and
    /// reducedness are checked by [`validate`].
    pub fn new<I>(weights: (u32, u32), degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u32, u32), BigRational)>,
    {
        if weights.0 == 0 || weights.1 == 0 {
            return Err(Error::input("weights must be positive"));
        }
        if degree == 0 {
            return Err(Error::input("degree must be positive"));
        }
        let mut collected: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *collected.entry(e).or_insert_with(BigRational::zero) += c;
        }
        collected.retain(|_, c| !c.is_zero());
        if collected.is_empty() {
            return Err(Error::input("polynomial has no nonzero term"));
        }
        Ok(WeightedPoly {
            weights,
            degree,
            terms: collected,
        })
    }

    /// Integer coefficients.
    pub fn from_int_terms(
        weights: (u32, u32),
        degree: u32,
        terms: &[((u32, u32), i64)],
    ) -> Result<Self> {
        Self::new(
            weights,
            degree,
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn weights(&self) -> (u32, u32) {
        self.weights
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * pow(x, a) * pow(y, b))
            .sum()
    }

    /// `f(1, t)` (or `f(t, 1)` when `swap`).
    fn slice(&self, swap: bool) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(a, b), c) in &self.terms {
            let e = if swap { a } else { b } as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] += c;
        }
        UniPoly::new(coeffs)
    }

    /// `f(s, t)` as a polynomial in `t` for fixed `x = s`.
    fn slice_at(&self, s: &BigRational) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(a, b), c) in &self.terms {
            let e = b as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] += c * pow(s, a);
        }
        UniPoly::new(coeffs)
    }
}

impl std::fmt::Display for WeightedPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (v, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

/// Checks weighted homogeneity and reducedness (isolated singularity).
pub fn validate(f: &WeightedPoly) -> Result<()> {
    let (w1, w2) = f.weights;
    for &(a, b) in f.terms.keys() {
        if u64::from(a) * u64::from(w1) + u64::from(b) * u64::from(w2) != u64::from(f.degree) {
            return Err(Error::input(format!(
                "term x^{a} y^{b} is not of weighted degree {} for weights ({w1}, {w2})",
                f.degree
            )));
        }
    }
    let x_mult = f.terms.keys().map(|e| e.0).min().unwrap();
    let y_mult = f.terms.keys().map(|e| e.1).min().unwrap();
    if x_mult > 1 || y_mult > 1 {
        return Err(Error::input(
            "polynomial is not reduced: repeated coordinate factor",
        ));
    }
    if !f.slice(false).is_squarefree() || !f.slice(true).is_squarefree() {
        return Err(Error::input("polynomial is not reduced: repeated factor"));
    }
    Ok(())
}

/// Integer combination of the symbols `Λ_m` (all `m`-th roots of unity).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicDivisor {
    coeffs: BTreeMap<u64, i64>,
}

impl CyclotomicDivisor {
    /// Checks that every root of unity gets a non-negative multiplicity.
    pub fn new(coeffs: BTreeMap<u64, i64>) -> Result<Self> {
        if coeffs.contains_key(&0) {
            return Err(Error::input("Λ_0 is not defined"));
        }
        let d = CyclotomicDivisor {
            coeffs: coeffs.into_iter().filter(|(_, c)| *c != 0).collect(),
        };
        for n in d.orders() {
            if d.primitive_multiplicity(n) < 0 {
                return Err(Error::Consistency(format!(
                    "negative multiplicity for primitive {n}-th roots of unity in {d}"
                )));
            }
        }
        Ok(d)
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, i64> {
        &self.coeffs
    }

    /// `Σ m c_m`: the number of eigenvalues with multiplicity.
    pub fn degree(&self) -> i64 {
        self.coeffs.iter().map(|(m, c)| *m as i64 * c).sum()
    }

    /// Every order `n` that divides some `m` in the support.
    pub fn orders(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .coeffs
            .keys()
            .flat_map(|&m| (1..=m).filter(move |n| m % n == 0))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Multiplicity of each primitive `n`-th root of unity.
    pub fn primitive_multiplicity(&self, n: u64) -> i64 {
        self.coeffs
            .iter()
            .filter(|(m, _)| *m % n == 0)
            .map(|(_, c)| c)
            .sum()
    }
}

impl std::fmt::Display for CyclotomicDivisor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            match (i, c.abs()) {
                (0, 1) if *c < 0 => write!(f, "-L{m}")?,
                (0, 1) => write!(f, "L{m}")?,
                (0, a) => write!(f, "{}{a}L{m}", if *c < 0 { "-" } else { "" })?,
                (_, 1) => write!(f, " {sign} L{m}")?,
                (_, a) => write!(f, " {sign} {a}L{m}")?,
            }
        }
        Ok(())
    }
}

type RationalDivisor = BTreeMap<u64, BigRational>;

fn multiply(p: &RationalDivisor, q: &RationalDivisor) -> RationalDivisor {
    let mut out = RationalDivisor::new();
    for (a, ca) in p {
        for (b, cb) in q {
            let g = a.gcd(b);
            let l = a.lcm(b);
            *out.entry(l).or_insert_with(BigRational::zero) +=
                ca * cb * BigRational::from_integer(BigInt::from(g));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `μ = (d - w_1)(d - w_2) / (w_1 w_2)`.
pub fn milnor_number(f: &WeightedPoly) -> Result<i64> {
    let (w1, w2) = (i64::from(f.weights.0), i64::from(f.weights.1));
    let d = i64::from(f.degree);
    let num = (d - w1) * (d - w2);
    if num % (w1 * w2) != 0 {
        return Err(Error::Consistency(format!(
            "Milnor number ({d}-{w1})({d}-{w2})/({w1}*{w2}) is not an integer"
        )));
    }
    Ok(num / (w1 * w2))
}

/// `((1/v_1) Λ_{u_1} - 1)((1/v_2) Λ_{u_2} - 1)` where `d / w_i = u_i / v_i`.
pub fn milnor_orlik_divisor(f: &WeightedPoly) -> Result<CyclotomicDivisor> {
    validate(f)?;
    let d = u64::from(f.degree);
    let factor = |w: u32| -> RationalDivisor {
        let w = u64::from(w);
        let g = d.gcd(&w);
        let (u, v) = (d / g, w / g);
        let mut r = RationalDivisor::new();
        *r.entry(u).or_insert_with(BigRational::zero) +=
            BigRational::new(BigInt::one(), BigInt::from(v));
        *r.entry(1).or_insert_with(BigRational::zero) -= BigRational::one();
        r.retain(|_, c| !c.is_zero());
        r
    };
    let product = multiply(&factor(f.weights.0), &factor(f.weights.1));
    let mut coeffs = BTreeMap::new();
    for (m, c) in product {
        if !c.is_integer() {
            return Err(Error::Consistency(format!(
                "non-integral coefficient {c} of L{m} for {f}"
            )));
        }
        coeffs.insert(m, c.to_integer().to_i64().expect("small coefficient"));
    }
    let divisor = CyclotomicDivisor::new(coeffs)?;
    let mu = milnor_number(f)?;
    if divisor.degree() != mu {
        return Err(Error::Consistency(format!(
            "divisor {divisor} has degree {} but the Milnor number is {mu}",
            divisor.degree()
        )));
    }
    Ok(divisor)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonodromyData {
    pub divisor: CyclotomicDivisor,
    pub mu: i64,
    pub mult_one: i64,
    pub mult_minus_one: i64,
    /// `l(h; 1)`, counting `H_0`.
    pub l_one: i64,
    /// `l(h; -1)`.
    pub l_minus_one: i64,
}

pub fn eigen_data(divisor: &CyclotomicDivisor) -> MonodromyData {
    let mult_one = divisor.primitive_multiplicity(1);
    let mult_minus_one = divisor.primitive_multiplicity(2);
    MonodromyData {
        divisor: divisor.clone(),
        mu: divisor.degree(),
        mult_one,
        mult_minus_one,
        l_one: 1 - mult_one,
        l_minus_one: -mult_minus_one,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignItem {
    Zero,
    Positive,
    Negative,
}

impl SignItem {
    fn of(sign: i32) -> Self {
        match sign {
            0 => SignItem::Zero,
            s if s > 0 => SignItem::Positive,
            _ => SignItem::Negative,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            SignItem::Zero => '0',
            SignItem::Positive => '+',
            SignItem::Negative => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealFiberData {
    pub chi_plus: i64,
    pub chi_minus: i64,
    pub boundary_endpoints_plus: i64,
    pub boundary_endpoints_minus: i64,
    /// Signs of `f` once around the weighted unit circle, starting at
    /// `(0, -1)` and passing `x > 0` first; runs of equal signs merged.
    pub sign_sequence: Vec<SignItem>,
}

/// `χ(F_+)` and `χ(F_-)` from the signs of `f` around the link circle.
///
/// `F_±` retracts onto `{±f > 0}` on the circle, a union of open arcs
/// (or the whole circle), so `χ(F_±)` is half the number of zero/arc
/// incidences.
pub fn real_fiber_chi(f: &WeightedPoly) -> Result<RealFiberData> {
    validate(f)?;
    let (_, w2) = f.weights;
    let axis = |y: i64| -> SignItem {
        // f(0, y) is the pure y term, if any.
        let e = f.degree / w2;
        match f.terms.get(&(0, e)).filter(|_| f.degree.is_multiple_of(w2)) {
            Some(c) => SignItem::of(sign(&(c * pow(&BigRational::from_integer(y.into()), e)))),
            None => SignItem::Zero,
        }
    };
    let mut seq = vec![axis(-1)];
    for (x, descending) in [(1i64, false), (-1, true)] {
        let slice = f.slice_at(&BigRational::from_integer(x.into()));
        let roots = isolate_real_roots(&slice);
        let mut chart = Vec::new();
        for (i, s) in separating_samples(&roots).iter().enumerate() {
            if i > 0 {
                chart.push(SignItem::Zero);
            }
            chart.push(SignItem::of(slice.sign_at(s)));
        }
        if descending {
            chart.reverse();
        }
        seq.extend(chart);
        if !descending {
            seq.push(axis(1));
        }
    }

    let mut merged: Vec<SignItem> = Vec::new();
    for item in seq {
        if item != SignItem::Zero && merged.last() == Some(&item) {
            continue;
        }
        merged.push(item);
    }
    while merged.len() > 1 && merged[0] != SignItem::Zero && merged.first() == merged.last() {
        merged.pop();
    }

    let n = merged.len();
    let (mut plus, mut minus) = (0i64, 0i64);
    for (i, item) in merged.iter().enumerate() {
        if *item != SignItem::Zero {
            continue;
        }
        for side in [merged[(i + n - 1) % n], merged[(i + 1) % n]] {
            match side {
                SignItem::Positive => plus += 1,
                SignItem::Negative => minus += 1,
                SignItem::Zero => {
                    return Err(Error::Consistency(
                        "adjacent zeros on the link circle".into(),
                    ))
                }
            }
        }
    }
    Ok(RealFiberData {
        chi_plus: plus / 2,
        chi_minus: minus / 2,
        boundary_endpoints_plus: plus,
        boundary_endpoints_minus: minus,
        sign_sequence: merged,
    })
}

fn sign(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCongruences {
    pub monodromy: MonodromyData,
    pub real: RealFiberData,
    /// `χ_+ - χ_-`.
    pub difference: i64,
    /// `χ_+ + χ_-`.
    pub sum: i64,
}

/// `χ_+ - χ_- ≡ 2 l(h;-1)` and `χ_+ + χ_- ≡ 2 l(h;1)` modulo 4.
///
/// These hold for every reduced `f`; a failure is reported as
/// [`Error::TheoremViolation`].
pub fn check_fiber_congruences(f: &WeightedPoly) -> Result<FiberCongruences> {
    let monodromy = eigen_data(&milnor_orlik_divisor(f)?);
    let real = real_fiber_chi(f)?;
    let difference = real.chi_plus - real.chi_minus;
    let sum = real.chi_plus + real.chi_minus;
    if (difference - 2 * monodromy.l_minus_one).rem_euclid(4) != 0 {
        return Err(Error::TheoremViolation(format!(
            "{f}: chi+ - chi- = {difference} but 2 l(h;-1) = {}",
            2 * monodromy.l_minus_one
        )));
    }
    if (sum - 2 * monodromy.l_one).rem_euclid(4) != 0 {
        return Err(Error::TheoremViolation(format!(
            "{f}: chi+ + chi- = {sum} but 2 l(h;1) = {}",
            2 * monodromy.l_one
        )));
    }
    Ok(FiberCongruences {
        monodromy,
        real,
        difference,
        sum,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetCongruences {
    pub k: u32,
    /// `Σ_γ (-1)^|γ| χ(F_γ)`.
    pub alternating_sum: i64,
    pub l_value: i64,
    pub divisible: bool,
    pub congruent: bool,
}

impl SubsetCongruences {
    pub fn pass(&self) -> bool {
        self.divisible && self.congruent
    }
}

/// Data-level check of `Σ_γ (-1)^|γ| χ(F_γ) ≡ 2^k l mod 2^(k+1)`.
///
/// Keys are sign vectors of length `k`, entry `1` meaning the negative side.
pub fn check_subset_congruences(
    chis: &BTreeMap<Vec<u8>, i64>,
    l_value: i64,
    k: u32,
) -> Result<SubsetCongruences> {
    if k == 0 || k > 30 {
        return Err(Error::input("k must be between 1 and 30"));
    }
    if let Some(bad) = chis
        .keys()
        .find(|g| g.len() != k as usize || g.iter().any(|e| *e > 1))
    {
        return Err(Error::input(format!(
            "{bad:?} is not a sign vector of length {k}"
        )));
    }
    let mut alternating_sum = 0;
    for mask in 0u32..(1 << k) {
        let gamma: Vec<u8> = (0..k).map(|i| ((mask >> i) & 1) as u8).collect();
        let chi = chis
            .get(&gamma)
            .ok_or_else(|| Error::input(format!("missing Euler characteristic for {gamma:?}")))?;
        alternating_sum += if mask.count_ones() % 2 == 0 {
            *chi
        } else {
            -chi
        };
    }
    let divisor = 1i64 << k;
    Ok(SubsetCongruences {
        k,
        alternating_sum,
        l_value,
        divisible: alternating_sum % divisor == 0,
        congruent: (alternating_sum - divisor * l_value).rem_euclid(2 * divisor) == 0,
    })
}

/// The reference polynomials with their weights and degrees.
pub fn reference_table() -> Vec<(&'static str, WeightedPoly)> {
    let p = |w, d, t: &[((u32, u32), i64)]| WeightedPoly::from_int_terms(w, d, t).expect("valid");
    vec![
        ("x^2+y^3", p((3, 2), 6, &[((2, 0), 1), ((0, 3), 1)])),
        ("xy", p((1, 1), 2, &[((1, 1), 1)])),
        ("x^2+y^2", p((1, 1), 2, &[((2, 0), 1), ((0, 2), 1)])),
        ("x^2-y^2", p((1, 1), 2, &[((2, 0), 1), ((0, 2), -1)])),
        ("x^3-xy^2", p((1, 1), 3, &[((3, 0), 1), ((1, 2), -1)])),
        ("x^2+y^4", p((2, 1), 4, &[((2, 0), 1), ((0, 4), 1)])),
        ("x^4+y^4", p((1, 1), 4, &[((4, 0), 1), ((0, 4), 1)])),
        ("x^3+xy^3", p((3, 2), 9, &[((3, 0), 1), ((1, 3), 1)])),
    ]
}

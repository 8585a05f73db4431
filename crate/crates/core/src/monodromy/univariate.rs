//! Dense univariate polynomials over ℚ and Sturm-sequence root isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<BigRational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn sign_at(&self, t: &BigRational) -> i32 {
        sign(&self.eval(t))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap() / d.lead();
            for (i, dc) in d.0.iter().enumerate() {
                r[i + shift] -= &c * dc;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    fn monic(&self) -> UniPoly {
        let l = self.lead().clone();
        UniPoly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// No repeated factor over ℚ (equivalently over ℂ).
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }

    /// Every real root lies in `(-B, B)`.
    fn root_bound(&self) -> BigRational {
        let l = self.lead().abs();
        let m = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &l)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        m + BigRational::from_integer(BigInt::from(2))
    }
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

struct Sturm(Vec<UniPoly>);

impl Sturm {
    fn new(p: &UniPoly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(UniPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm(seq)
    }

    fn variations(&self, t: &BigRational) -> usize {
        let signs: Vec<i32> = self
            .0
            .iter()
            .map(|p| p.sign_at(t))
            .filter(|s| *s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Open interval `(lo, hi)` holding exactly one real root; the endpoints
/// are not roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// A point strictly inside `(a, b)` that is not a root of `p`.
fn split_point(p: &UniPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let width = b - a;
    for den in 2u32.. {
        for num in 1..den {
            let t = a + &width * BigRational::new(BigInt::from(num), BigInt::from(den));
            if !p.eval(&t).is_zero() {
                return t;
            }
        }
    }
    unreachable!()
}

/// Isolating intervals of the distinct real roots of a nonzero polynomial,
/// in increasing order.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "zero polynomial has no isolated roots");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    let sturm = Sturm::new(&sf);
    let b = sf.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let m = split_point(&sf, &lo, &hi);
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Rational points below, between and above the real roots: one more point
/// than there are roots, each strictly separated from the roots.
pub fn separating_samples(roots: &[RootInterval]) -> Vec<BigRational> {
    match roots {
        [] => vec![BigRational::zero()],
        _ => {
            let one = BigRational::one();
            let mut s = vec![&roots[0].lo - &one];
            for w in roots.windows(2) {
                s.push(w[0].hi.clone());
                debug_assert!(w[0].hi <= w[1].lo);
            }
            s.push(&roots[roots.len() - 1].hi + one);
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::new(
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        let p = poly(&[-1, 0, 1]);
        assert_eq!(p.derivative(), poly(&[0, 2]));
        let (qq, r) = p.div_rem(&poly(&[-1, 1]));
        assert_eq!(qq, poly(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&poly(&[1, 1])), poly(&[1, 1]));
        assert!(p.is_squarefree());
        assert!(!poly(&[1, 2, 1]).is_squarefree());
        assert_eq!(poly(&[0, 0, 1]).squarefree_part().degree(), Some(1));
        assert_eq!(poly(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn isolates_roots_between_samples() {
        // (t+2)(t)(t-1/2)(t-3)
        let p = UniPoly::new(vec![q(0, 1), q(3, 1), q(-11, 2), q(-3, 2), q(1, 1)]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 4);
        let expected = [q(-2, 1), q(0, 1), q(1, 2), q(3, 1)];
        for (r, e) in roots.iter().zip(expected.iter()) {
            assert!(r.lo < *e && *e < r.hi);
            assert!(!p.eval(&r.lo).is_zero() && !p.eval(&r.hi).is_zero());
        }
        let samples = separating_samples(&roots);
        let signs: Vec<i32> = samples.iter().map(|t| p.sign_at(t)).collect();
        assert_eq!(signs, vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&poly(&[1, 0, 1])).is_empty());
        assert!(isolate_real_roots(&poly(&[5])).is_empty());
    }

    #[test]
    fn repeated_roots_are_counted_once() {
        // (t - 1)^2 (t + 1)
        let roots = isolate_real_roots(&poly(&[1, -1, -1, 1]));
        assert_eq!(roots.len(), 2);
    }
}

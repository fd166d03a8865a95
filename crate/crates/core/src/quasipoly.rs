//! Quasi-polynomials in one variable and exact fitting from samples.
//!
//! A quasi-polynomial of period p is a list of p ordinary polynomials with
//! rational coefficients, selected by the residue of the argument.  Fitting
//! searches (period, degree) pairs in ascending order, interpolates each
//! residue class through its first degree+1 samples, and accepts only if
//! every remaining sample matches exactly, so each class needs at least
//! degree+2 samples before a candidate can even be tested.

use crate::branching::Embedding;
use crate::error::Error;
use crate::linalg::{QMat, Rat};
use crate::roots::Weight;
use crate::Result;
use num::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    /// Ascending coefficients per residue class, trailing zeros trimmed.
    coeffs: Vec<Vec<Rat>>,
}

impl QuasiPolynomial {
    pub fn constant(value: i64) -> Self {
        let c = if value == 0 {
            Vec::new()
        } else {
            vec![Rat::from_integer(value.into())]
        };
        QuasiPolynomial { period: 1, coeffs: vec![c] }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Largest degree over the residue classes; zero for the zero function.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, k: i64) -> Rat {
        let r = k.rem_euclid(self.period as i64) as usize;
        let kq = Rat::from_integer(k.into());
        let mut acc = Rat::zero();
        for c in self.coeffs[r].iter().rev() {
            acc = acc * &kq + c;
        }
        acc
    }

    /// One coefficient list per residue class, ascending degree, rationals
    /// rendered as strings.
    pub fn to_json_value(&self) -> Value {
        let pieces: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| json!(c.iter().map(rat_string).collect::<Vec<String>>()))
            .collect();
        json!({
            "period": self.period,
            "pieces": pieces,
        })
    }
}

fn rat_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitResult {
    Fit(QuasiPolynomial),
    /// No quasi-polynomial within the bounds matches the samples.
    NoFit,
}

enum TryFit {
    Fit(QuasiPolynomial),
    Mismatch,
    NotEnough { needed: usize, got: usize },
}

/// Interpolating polynomial through the points, ascending coefficients.
fn interpolate(points: &[(i64, i64)]) -> Vec<Rat> {
    let n = points.len();
    let mut vand = QMat::zero(n, n);
    for (i, &(k, _)) in points.iter().enumerate() {
        let kq = Rat::from_integer(k.into());
        let mut p = Rat::one();
        for j in 0..n {
            vand[(i, j)] = p.clone();
            p *= &kq;
        }
    }
    let rhs: Vec<Rat> = points
        .iter()
        .map(|&(_, v)| Rat::from_integer(v.into()))
        .collect();
    let mut coeffs = vand
        .inverse()
        .expect("distinct interpolation nodes")
        .matvec(&rhs);
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

fn eval_poly(coeffs: &[Rat], k: i64) -> Rat {
    let kq = Rat::from_integer(k.into());
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &kq + c;
    }
    acc
}

fn try_fit(samples: &BTreeMap<i64, i64>, period: usize, degree: usize) -> TryFit {
    let mut classes: Vec<Vec<(i64, i64)>> = vec![Vec::new(); period];
    for (&k, &v) in samples {
        classes[k.rem_euclid(period as i64) as usize].push((k, v));
    }
    if let Some(short) = classes.iter().map(Vec::len).min().filter(|&m| m < degree + 2) {
        return TryFit::NotEnough { needed: degree + 2, got: short };
    }
    let mut coeffs = Vec::with_capacity(period);
    for class in &classes {
        let poly = interpolate(&class[..degree + 1]);
        for &(k, v) in &class[degree + 1..] {
            if eval_poly(&poly, k) != Rat::from_integer(v.into()) {
                return TryFit::Mismatch;
            }
        }
        coeffs.push(poly);
    }
    TryFit::Fit(QuasiPolynomial { period, coeffs })
}

/// Smallest (period, degree) quasi-polynomial through the samples, searching
/// periods first.  `InsufficientSamples` is reported only when no candidate
/// fits and at least one candidate could not be tested for lack of data.
pub fn fit(
    samples: &BTreeMap<i64, i64>,
    max_period: usize,
    max_degree: usize,
) -> Result<FitResult> {
    if max_period == 0 {
        return Err(Error::InvalidInput("period bound must be positive".into()));
    }
    let mut missing: Option<(usize, usize)> = None;
    for period in 1..=max_period {
        for degree in 0..=max_degree {
            match try_fit(samples, period, degree) {
                TryFit::Fit(qp) => return Ok(FitResult::Fit(qp)),
                TryFit::Mismatch => {}
                TryFit::NotEnough { needed, got } => {
                    if missing.is_none() {
                        missing = Some((needed, got));
                    }
                }
            }
        }
    }
    match missing {
        Some((needed, got)) => Err(Error::InsufficientSamples { needed, got }),
        None => Ok(FitResult::NoFit),
    }
}

/// Branching multiplicities along the ray k -> (k big, k small), for
/// k from 0 to k_max.
pub fn stretch_samples(
    emb: &Embedding,
    big_hw: &Weight,
    small_hw: &Weight,
    k_max: i64,
    dual: bool,
) -> Result<BTreeMap<i64, i64>> {
    emb.big().check_dominant(big_hw)?;
    emb.small().check_dominant(small_hw)?;
    let mut out = BTreeMap::new();
    for k in 0..=k_max {
        let bk = big_hw.scale(k);
        let sk = small_hw.scale(k);
        let m = emb.branch_with(&bk, dual)?.get(&sk).copied().unwrap_or(0);
        out.insert(k, m);
    }
    Ok(out)
}

/// Degree bound for stretched branching multiplicities: half the dimension
/// of a generic reduced space, i.e. positive roots of the big group minus
/// positive roots and rank of the small one.
pub fn default_degree_bound(emb: &Embedding) -> usize {
    let pb = emb.big().positive_roots().len();
    let ps = emb.small().positive_roots().len();
    pb.saturating_sub(ps + emb.small().rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_i};

    fn fit_ok(samples: &[(i64, i64)], mp: usize, md: usize) -> QuasiPolynomial {
        let map: BTreeMap<i64, i64> = samples.iter().copied().collect();
        match fit(&map, mp, md).unwrap() {
            FitResult::Fit(qp) => qp,
            FitResult::NoFit => panic!("expected a fit"),
        }
    }

    #[test]
    fn parity_indicator_needs_period_two() {
        let samples: Vec<(i64, i64)> = (0..10).map(|k| (k, 1 - k % 2)).collect();
        let qp = fit_ok(&samples, 4, 3);
        assert_eq!(qp.period(), 2);
        assert_eq!(qp.degree(), 0);
        assert_eq!(qp.evaluate(6), rat_i(1));
        assert_eq!(qp.evaluate(7), rat_i(0));
    }

    #[test]
    fn linear_counting_function() {
        let samples: Vec<(i64, i64)> = (0..6).map(|k| (k, k + 1)).collect();
        let qp = fit_ok(&samples, 3, 2);
        assert_eq!((qp.period(), qp.degree()), (1, 1));
        assert_eq!(qp.evaluate(100), rat_i(101));
    }

    #[test]
    fn ceiling_of_half_has_period_two_and_degree_one() {
        let samples: Vec<(i64, i64)> = (0..12).map(|k| (k, (k + 1) / 2)).collect();
        let qp = fit_ok(&samples, 3, 2);
        assert_eq!((qp.period(), qp.degree()), (2, 1));
        assert_eq!(qp.evaluate(7), rat_i(4));
        assert_eq!(qp.evaluate(8), rat_i(4));
        // the even-residue branch is k/2
        assert_eq!(qp.evaluate(0), rat_i(0));
        assert_eq!(eval_poly(&interpolate(&[(0, 0), (2, 1)]), 4), rat_i(2));
    }

    #[test]
    fn exponentials_do_not_fit() {
        let samples: Vec<(i64, i64)> = (0..12).map(|k| (k, 1 << k)).collect();
        let map: BTreeMap<i64, i64> = samples.iter().copied().collect();
        assert_eq!(fit(&map, 2, 3).unwrap(), FitResult::NoFit);
    }

    #[test]
    fn too_few_samples_is_an_error_not_a_nofit() {
        let map: BTreeMap<i64, i64> = [(0, 1), (1, 2), (2, 4)].into_iter().collect();
        let err = fit(&map, 2, 2).unwrap_err();
        assert!(matches!(err, Error::InsufficientSamples { .. }));
        // but a genuine fit with plenty of data short-circuits
        let map: BTreeMap<i64, i64> = (0..3).map(|k| (k, 5)).collect();
        assert!(matches!(fit(&map, 5, 3).unwrap(), FitResult::Fit(_)));
        assert!(fit(&map, 0, 1).is_err());
    }

    #[test]
    fn fractional_coefficients_are_exact() {
        // k(k+1)/2 has leading coefficient one half
        let samples: Vec<(i64, i64)> = (0..8).map(|k| (k, k * (k + 1) / 2)).collect();
        let qp = fit_ok(&samples, 2, 3);
        assert_eq!((qp.period(), qp.degree()), (1, 2));
        assert_eq!(qp.evaluate(9), rat_i(45));
        let v = qp.to_json_value();
        assert_eq!(v["period"], 1);
        assert_eq!(v["pieces"][0][2], "1/2");
        assert_eq!(v["pieces"][0][1], "1/2");
        assert_eq!(qp.evaluate(1), rat(2, 2));
    }

    #[test]
    fn stretched_branching_along_a_tensor_ray() {
        let emb = Embedding::diagonal(&"A1".parse().unwrap()).unwrap();
        // [k] x [k] contains [2k] exactly once, [2k+2] never
        let samples =
            stretch_samples(&emb, &Weight(vec![1, 1]), &Weight(vec![2]), 5, true).unwrap();
        assert!(samples.values().all(|&m| m == 1));
        let qp = fit_ok(
            &samples.iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(),
            2,
            1,
        );
        assert_eq!((qp.period(), qp.degree()), (1, 0));
        assert_eq!(default_degree_bound(&emb), 0);
        let torus = Embedding::maximal_torus(&"A2".parse().unwrap()).unwrap();
        assert_eq!(default_degree_bound(&torus), 1);
    }

    #[test]
    fn constant_helper() {
        let qp = QuasiPolynomial::constant(3);
        assert_eq!(qp.evaluate(17), rat_i(3));
        assert_eq!(QuasiPolynomial::constant(0).evaluate(4), rat_i(0));
        assert_eq!(QuasiPolynomial::constant(0).degree(), 0);
    }
}

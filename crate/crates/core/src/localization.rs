//! Fixed-point evaluation of characters and index computations for
//! symmetric algebras.
//!
//! `fixed_point_value` evaluates the Weyl character sum over the fixed
//! points of a regular torus element: each Weyl group element contributes
//! its translated highest weight divided by the product over positive roots
//! of one minus the inverted root value.  At regular points this equals the
//! plain character value, which is what the verification suite checks.
//!
//! The moment certificate decides whether zero lies in the convex hull of
//! the support of a representation, returning either an explicit convex
//! combination or an integer functional strictly positive on every weight.
//! The functional makes total symmetric-algebra multiplicities finite and
//! bounds the degrees that can contribute.

use crate::character::{monomial_value, FormalCharacter};
use crate::error::Error;
use crate::linalg::{clear_denominators, Rat};
use crate::lp::{feasibility, LpOutcome};
use crate::roots::{RootSystem, Weight};
use crate::Result;
use num::{One, Zero};
use std::sync::Arc;

/// True when no root evaluates to one at the torus point.
pub fn is_regular(rs: &Arc<RootSystem>, t: &[Rat]) -> Result<bool> {
    if t.len() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: t.len() });
    }
    if t.iter().any(Zero::is_zero) {
        return Err(Error::InvalidInput("torus coordinates must be nonzero".into()));
    }
    Ok(rs
        .positive_roots()
        .iter()
        .all(|r| monomial_value(t, &Weight(r.fund.clone())) != Rat::one()))
}

/// Character value as a sum over Weyl translates:
/// sum over w of t^(w hw) / prod over positive roots a of (1 - t^(-w a)).
pub fn fixed_point_value(rs: &Arc<RootSystem>, hw: &Weight, t: &[Rat]) -> Result<Rat> {
    rs.check_dominant(hw)?;
    if !is_regular(rs, t)? {
        return Err(Error::SingularPoint(format!(
            "a root evaluates to one at the given torus point"
        )));
    }
    let words = rs.weyl_elements()?;
    let mut total = Rat::zero();
    for w in &words {
        let num = monomial_value(t, &rs.apply_word(w, hw));
        let mut den = Rat::one();
        for r in rs.positive_roots() {
            let wa = rs.apply_word(w, &Weight(r.fund.clone()));
            den *= Rat::one() - monomial_value(t, &wa.neg());
        }
        total += num / den;
    }
    Ok(total)
}

/// Deterministic regular rational torus point.  Coordinates are ratios of
/// integers drawn uniformly from 1..=97; draws where some root evaluates to
/// one are discarded.  Returns the point together with the discard count.
pub fn seeded_regular_point(rs: &Arc<RootSystem>, seed: u64) -> Result<(Vec<Rat>, u64)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut resampled = 0u64;
    loop {
        let t: Vec<Rat> = (0..rs.rank())
            .map(|_| {
                let num = rng.gen_range(1..=97i64);
                let den = rng.gen_range(1..=97i64);
                Rat::new(num.into(), den.into())
            })
            .collect();
        if is_regular(rs, &t)? {
            return Ok((t, resampled));
        }
        resampled += 1;
        if resampled > 1000 {
            return Err(Error::SingularPoint("could not sample a regular torus point".into()));
        }
    }
}

/// Outcome of the moment feasibility problem for a weight multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentCertificate {
    /// Convex combination of support weights equal to zero; coefficients are
    /// positive and sum to one.
    ZeroCombination(Vec<(Weight, Rat)>),
    /// Integer functional pairing strictly positively with every support
    /// weight under the standard dot product on coordinates.
    Separating(Vec<i64>),
}

/// Decides whether zero is a convex combination of the support weights.
pub fn moment_zero(ch: &FormalCharacter) -> Result<MomentCertificate> {
    if ch.coeffs().is_empty() {
        return Err(Error::EmptySupport("representation has no weights".into()));
    }
    if let Some((w, c)) = ch.coeffs().iter().find(|(_, c)| **c < 0) {
        return Err(Error::NotACharacter(format!(
            "weight {w} has negative multiplicity {c}"
        )));
    }
    let rank = ch.root_system().rank();
    let support: Vec<&Weight> = ch.coeffs().keys().collect();
    // columns are the support weights, rows their coordinates plus the
    // normalization row; the system asks for a convex zero combination
    let mut rows: Vec<Vec<Rat>> = (0..rank)
        .map(|i| {
            support
                .iter()
                .map(|w| Rat::from_integer(w.0[i].into()))
                .collect()
        })
        .collect();
    rows.push(vec![Rat::one(); support.len()]);
    let mut rhs = vec![Rat::zero(); rank];
    rhs.push(Rat::one());
    match feasibility(&rows, &rhs) {
        LpOutcome::Feasible(c) => Ok(MomentCertificate::ZeroCombination(
            support
                .into_iter()
                .zip(c)
                .filter(|(_, ci)| !ci.is_zero())
                .map(|(w, ci)| (w.clone(), ci))
                .collect(),
        )),
        LpOutcome::Infeasible(y) => {
            // y pairs nonpositively with every column and positively with
            // the right side, so minus its coordinate part separates
            let xi_rat: Vec<Rat> = y[..rank].iter().map(|v| -v.clone()).collect();
            Ok(MomentCertificate::Separating(clear_denominators(&xi_rat)))
        }
    }
}

fn dot_weight(a: &Weight, xi: &[i64]) -> i64 {
    a.0.iter().zip(xi).map(|(x, y)| x * y).sum()
}

/// Multiplicity of `target` in the full symmetric algebra of the
/// representation.  Finite only when a separating functional exists;
/// otherwise the weight could recur in infinitely many degrees.
pub fn total_sym_multiplicity(ch: &FormalCharacter, target: &Weight) -> Result<i64> {
    ch.root_system().check_weight(target)?;
    let xi = match moment_zero(ch)? {
        MomentCertificate::Separating(xi) => xi,
        MomentCertificate::ZeroCombination(_) => {
            return Err(Error::IndexNotLocallyFinite(
                "zero lies in the convex hull of the weights".into(),
            ));
        }
    };
    let min_pair = ch
        .coeffs()
        .keys()
        .map(|w| dot_weight(w, &xi))
        .min()
        .expect("nonempty support");
    debug_assert!(min_pair > 0, "certificate must separate");
    let tp = dot_weight(target, &xi);
    let dmax = if tp < 0 { -1 } else { tp / min_pair };
    let mut total = 0i64;
    for d in 0..=dmax {
        total += ch.sym_power(d as usize)?.coeff(target);
    }
    Ok(total)
}

/// Dimensions of the invariants in the symmetric powers of the dual
/// representation, together with the moment certificate of the original
/// weights.
#[derive(Debug, Clone)]
pub struct SymInvariants {
    /// dimensions[d] is the invariant dimension in symmetric degree d.
    pub dimensions: Vec<i64>,
    pub certificate: MomentCertificate,
}

pub fn sym_invariants(ch: &FormalCharacter, max_degree: usize) -> Result<SymInvariants> {
    let certificate = moment_zero(ch)?;
    let dual = ch.dual();
    let mut dimensions = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        dimensions.push(dual.sym_power(d)?.invariant_multiplicity()?);
    }
    Ok(SymInvariants { dimensions, certificate })
}

//! Verification suites.  Each suite checks an identity that the rest of the
//! crate claims to satisfy, counting checks and recording failures, and
//! renders a canonical JSON report whose bytes depend only on inputs.
//!
//! The suites are designed to be falsifiable: they recompute both sides of
//! every identity from independent routes (alternating versus subtraction
//! decomposition, direct character values versus fixed-point sums, supplied
//! tables versus freshly computed ones), so corrupted inputs or broken
//! arithmetic surface as explicit failure entries rather than silent
//! agreement.

use crate::branching::{dominant_box, BranchingTable, Embedding};
use crate::cartan::CartanSpec;
use crate::character::FormalCharacter;
use crate::cone::SupportCone;
use crate::error::Error;
use crate::linalg::{clear_denominators, Rat};
use crate::localization::{fixed_point_value, is_regular, sym_invariants, MomentCertificate};
use crate::quasipoly::{fit, stretch_samples, FitResult};
use crate::roots::{CentralizerSubsystem, RootSystem, Weight, WeylWord};
use crate::Result;
use num::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub parameters: Value,
}

impl Report {
    fn new(suite: &str, parameters: Value) -> Self {
        Report { suite: suite.into(), checks: 0, failures: Vec::new(), parameters }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.checks += 1;
        self.failures.push(msg);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "suite": self.suite,
            "status": if self.passed() { "pass" } else { "fail" },
            "checks": self.checks,
            "failures": self.failures,
            "parameters": self.parameters,
        })
    }
}

/// Multiplicity as the invariant part of a product of restrictions: for the
/// dual convention this equals the branching multiplicity.
fn pairing_multiplicity(emb: &Embedding, big_hw: &Weight, small_hw: &Weight) -> Result<i64> {
    let chi_big = FormalCharacter::irreducible(emb.big(), big_hw)?;
    let chi_small = FormalCharacter::irreducible(emb.small(), small_hw)?;
    emb.restrict(&chi_big)?
        .product(&chi_small)?
        .invariant_multiplicity()
}

/// Integer normals equivalent to pairing against the subspace vectors:
/// clearing denominators of the applied pairing keeps the vanishing locus
/// and allows pure integer dot products in sample loops.
fn subspace_normals(rs: &Arc<RootSystem>, subspace: &[Vec<i64>]) -> Vec<Vec<i64>> {
    subspace
        .iter()
        .map(|x| {
            let xq: Vec<Rat> = x.iter().map(|&c| Rat::from_integer(c.into())).collect();
            clear_denominators(&rs.pairing_apply(&xq))
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Bound for small-side boxes: restriction cannot push coordinates past the
/// largest absolute row sum times the big bound.
fn small_bound(emb: &Embedding, bound: i64) -> i64 {
    let rowsum = emb
        .matrix()
        .iter()
        .map(|row| row.iter().map(|c| c.abs()).sum::<i64>())
        .max()
        .unwrap_or(1)
        .max(1);
    bound * rowsum
}

/// Vanishing outside the support cone: multiplicity is nonzero exactly on
/// lattice points of the cone generated by the support.  The cone is built
/// from `supplied` when given (so a corrupted table is caught against fresh
/// multiplicities), otherwise from the fresh table.
pub fn verify_cone_vanishing(
    emb: &Embedding,
    bound: i64,
    supplied: Option<&BranchingTable>,
) -> Result<Report> {
    let mut report = Report::new(
        "cone-vanishing",
        json!({
            "big": emb.big().spec().to_string(),
            "small": emb.small().spec().to_string(),
            "bound": bound,
            "table": if supplied.is_some() { "supplied" } else { "fresh" },
        }),
    );
    let fresh = BranchingTable::compute(emb, bound, true)?;
    let sc = SupportCone::from_table(supplied.unwrap_or(&fresh))?;
    let sb = small_bound(emb, bound);
    for big_hw in dominant_box(emb.big(), bound) {
        for small_hw in dominant_box(emb.small(), sb) {
            let m = fresh.multiplicity(&big_hw, &small_hw);
            let inside = sc.contains_pair(&big_hw, &small_hw)?;
            report.check((m > 0) == inside, || {
                if m > 0 {
                    format!("multiplicity {m} at ({big_hw}, {small_hw}) outside the support cone")
                } else {
                    format!("({big_hw}, {small_hw}) lies in the cone and lattice but has multiplicity zero")
                }
            });
        }
    }
    Ok(report)
}

/// Fits the stretched multiplicity k -> m(k big, k small) of each pair on an
/// initial segment and confirms every fit on held-out values.  The fitted
/// degree and period of each pair are recorded in the report parameters.
pub fn verify_stretch_fit(
    emb: &Embedding,
    pairs: &[(Weight, Weight)],
    k_fit: i64,
    k_hold: i64,
    max_period: usize,
    max_degree: usize,
) -> Result<Report> {
    let mut fitted: Vec<Value> = Vec::new();
    let mut report = Report::new("stretch-fit", Value::Null);
    for (big_hw, small_hw) in pairs {
        let train = stretch_samples(emb, big_hw, small_hw, k_fit, true)?;
        let qp = match fit(&train, max_period, max_degree) {
            Ok(FitResult::Fit(qp)) => {
                report.check(true, String::new);
                qp
            }
            Ok(FitResult::NoFit) => {
                report.fail(format!(
                    "({big_hw}, {small_hw}): no quasi-polynomial of period <= {max_period}, degree <= {max_degree} fits the first {} samples",
                    k_fit + 1
                ));
                continue;
            }
            Err(e) => {
                report.fail(format!("({big_hw}, {small_hw}): fit failed: {e}"));
                continue;
            }
        };
        fitted.push(json!({
            "big_weight": big_hw.0,
            "small_weight": small_hw.0,
            "degree": qp.degree(),
            "period": qp.period(),
        }));
        for k in (k_fit + 1)..=k_hold {
            let bk = big_hw.scale(k);
            let sk = small_hw.scale(k);
            let m = emb.branch(&bk)?.get(&sk).copied().unwrap_or(0);
            let predicted = qp.evaluate(k);
            report.check(predicted == Rat::from_integer(m.into()), || {
                format!("({big_hw}, {small_hw}) at k={k}: fit predicts {predicted}, multiplicity is {m}")
            });
        }
    }
    report.parameters = json!({
        "big": emb.big().spec().to_string(),
        "small": emb.small().spec().to_string(),
        "pairs": pairs.iter().map(|(b, s)| json!({"big": b.0, "small": s.0})).collect::<Vec<_>>(),
        "k_fit": k_fit,
        "k_hold": k_hold,
        "max_period": max_period,
        "max_degree": max_degree,
        "fits": fitted,
    });
    Ok(report)
}

/// Face of the branching cone: an embedding, a normalizing Weyl word of the
/// big group, a basis of a Cartan subspace of the small group (in its
/// coweight coordinates), and sample weight pairs lying on the face.
#[derive(Debug, Clone)]
pub struct FaceData {
    pub embedding: Embedding,
    pub word: WeylWord,
    pub subspace: Vec<Vec<i64>>,
    pub samples: Vec<(Weight, Weight)>,
}

/// Validated face context: the two centralizer subsystems.
pub struct FaceContext {
    pub big_sub: CentralizerSubsystem,
    pub small_sub: CentralizerSubsystem,
}

impl FaceData {
    /// Structural validation: the word is in range and sends every positive
    /// root of the big centralizer to a positive root, and the subspace has
    /// the right shape.  Returns the centralizer pair.
    pub fn validate(&self) -> Result<FaceContext> {
        let big = self.embedding.big();
        let small = self.embedding.small();
        for v in &self.subspace {
            if v.len() != small.rank() {
                return Err(Error::InvalidFaceData(format!(
                    "subspace vector has {} coordinates, expected {}",
                    v.len(),
                    small.rank()
                )));
            }
        }
        if self.word.0.iter().any(|&j| j >= big.simple_count()) {
            return Err(Error::InvalidFaceData(
                "word contains an out-of-range reflection index".into(),
            ));
        }
        let sub_rat: Vec<Vec<Rat>> = self
            .subspace
            .iter()
            .map(|v| v.iter().map(|&c| Rat::from_integer(c.into())).collect())
            .collect();
        let embedded: Vec<Vec<Rat>> = sub_rat
            .iter()
            .map(|x| self.embedding.embed_coweight(x))
            .collect::<Result<_>>()?;
        let big_sub = big.centralizer(&embedded)?;
        let small_sub = small.centralizer(&sub_rat)?;
        // normalization: the word must keep the centralizer's positive roots
        // positive, which makes the twisted highest weight dominant there
        let positive: std::collections::BTreeSet<Vec<i64>> = big
            .positive_roots()
            .iter()
            .map(|r| r.fund.clone())
            .collect();
        for alpha in &big_sub.parent_positive_roots {
            let image = big.apply_word(&self.word, alpha);
            if !positive.contains(&image.0) {
                return Err(Error::InvalidFaceData(format!(
                    "word sends centralizer root {alpha} to the negative root {image}"
                )));
            }
        }
        Ok(FaceContext { big_sub, small_sub })
    }

    /// Pairs lying on the face: dominant weight pairs inside coordinate
    /// boxes whose twisted restriction pairs to zero with the subspace.
    pub fn generate_samples(&self, bound: i64) -> Result<Vec<(Weight, Weight)>> {
        let emb = &self.embedding;
        let winv = self.word.inverse();
        let sb = small_bound(emb, bound);
        let normals = subspace_normals(emb.small(), &self.subspace);
        let small_box = dominant_box(emb.small(), sb);
        let mut out = Vec::new();
        for big_hw in dominant_box(emb.big(), bound) {
            let twisted = emb.restrict_weight(&emb.big().apply_word(&winv, &big_hw))?;
            for small_hw in &small_box {
                let shifted = twisted.add(small_hw);
                if normals.iter().all(|n| dot(&shifted.0, n) == 0) {
                    out.push((big_hw.clone(), small_hw.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Face over the full Cartan of the diagonal embedding: the word is the
    /// longest element of the doubled group and the subspace is everything.
    /// No samples are attached; checks enumerate the face within a bound.
    pub fn diagonal_cartan(spec: &CartanSpec) -> Result<FaceData> {
        let embedding = Embedding::diagonal(spec)?;
        let word = embedding.big().longest_element();
        let n = embedding.small().rank();
        let subspace: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v
            })
            .collect();
        Ok(FaceData { embedding, word, subspace, samples: Vec::new() })
    }

    /// Facet of the weight cone of the rank-two special unitary group over
    /// its maximal torus: the subspace is spanned by the first fundamental
    /// coweight, scaled to integer coordinates.
    pub fn torus_facet_a2() -> Result<FaceData> {
        let embedding = Embedding::maximal_torus(&"A2".parse()?)?;
        let mut word = embedding.big().longest_element();
        word.0.push(1);
        Ok(FaceData { embedding, word, subspace: vec![vec![2, 1]], samples: Vec::new() })
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "embedding": self.embedding.to_json_value(),
            "word": self.word.0,
            "subspace": self.subspace,
            "samples": self
                .samples
                .iter()
                .map(|(b, s)| json!({"big": b.0, "small": s.0}))
                .collect::<Vec<Value>>(),
        })
    }

    pub fn from_json_value(v: &Value) -> Result<FaceData> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidFaceData("expected a JSON object".into()))?;
        let embedding = Embedding::from_json_value(
            obj.get("embedding")
                .ok_or_else(|| Error::InvalidFaceData("missing 'embedding'".into()))?,
        )?;
        let word = WeylWord(
            obj.get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidFaceData("missing array 'word'".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| Error::InvalidFaceData("word entries must be indices".into()))
                })
                .collect::<Result<_>>()?,
        );
        let subspace = obj
            .get("subspace")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidFaceData("missing array 'subspace'".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::InvalidFaceData("subspace rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_i64().ok_or_else(|| {
                            Error::InvalidFaceData("subspace entries must be integers".into())
                        })
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        let weight_of = |v: &Value| -> Result<Weight> {
            v.as_array()
                .ok_or_else(|| Error::InvalidFaceData("weight must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidFaceData("weight entries must be integers".into()))
                })
                .collect::<Result<Vec<i64>>>()
                .map(Weight)
        };
        let mut samples = Vec::new();
        if let Some(arr) = obj.get("samples").and_then(Value::as_array) {
            for s in arr {
                let so = s
                    .as_object()
                    .ok_or_else(|| Error::InvalidFaceData("samples must be objects".into()))?;
                samples.push((
                    weight_of(
                        so.get("big")
                            .ok_or_else(|| Error::InvalidFaceData("sample missing 'big'".into()))?,
                    )?,
                    weight_of(
                        so.get("small")
                            .ok_or_else(|| Error::InvalidFaceData("sample missing 'small'".into()))?,
                    )?,
                ));
            }
        }
        Ok(FaceData { embedding, word, subspace, samples })
    }
}

/// Character of the big centralizer system pushed down to the small one
/// through the parent weight lattices.
fn restrict_to_face(
    big_sub: &CentralizerSubsystem,
    small_sub: &CentralizerSubsystem,
    emb: &Embedding,
    ch: &FormalCharacter,
) -> Result<FormalCharacter> {
    let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, c) in ch.coeffs() {
        let parent = big_sub.to_parent(w)?;
        let down = emb.restrict_weight(&parent)?;
        let img = small_sub.to_sub(&down);
        *coeffs.entry(img).or_insert(0) += c;
    }
    FormalCharacter::from_coeffs(Arc::clone(&small_sub.rs), coeffs)
}

/// Face reduction: on a face of the branching cone, the multiplicity equals
/// the corresponding invariant multiplicity for the pair of centralizer
/// subgroups, with the big highest weight twisted by the face word.  Samples
/// supplied with the face are gated on actually lying on the face before any
/// identity is checked; a face without samples is checked on every dominant
/// pair within the coordinate bound.
pub fn verify_face_reduction(face: &FaceData, bound: i64) -> Result<Report> {
    let mut report = Report::new(
        "face-reduction",
        json!({
            "big": face.embedding.big().spec().to_string(),
            "small": face.embedding.small().spec().to_string(),
            "word": face.word.0,
            "subspace": face.subspace,
            "bound": bound,
            "supplied_samples": face.samples.len(),
        }),
    );
    let ctx = match face.validate() {
        Ok(ctx) => ctx,
        Err(e) => {
            report.fail(format!("invalid face data: {e}"));
            return Ok(report);
        }
    };
    let emb = &face.embedding;
    let winv = face.word.inverse();
    let normals = subspace_normals(emb.small(), &face.subspace);
    let samples = if face.samples.is_empty() {
        face.generate_samples(bound)?
    } else {
        // gate: every supplied sample must lie on the face
        for (big_hw, small_hw) in &face.samples {
            let twisted = emb.big().apply_word(&winv, big_hw);
            let shifted = emb.restrict_weight(&twisted)?.add(small_hw);
            if normals.iter().any(|n| dot(&shifted.0, n) != 0) {
                report.fail(format!("sample ({big_hw}, {small_hw}) does not lie on the face"));
            }
        }
        if !report.passed() {
            return Ok(report);
        }
        face.samples.clone()
    };
    for (big_hw, small_hw) in &samples {
        let twisted = emb.big().apply_word(&winv, big_hw);
        let lhs = emb.branch(big_hw)?.get(small_hw).copied().unwrap_or(0);
        let hat = ctx.big_sub.to_sub(&twisted);
        let chi_hat = FormalCharacter::irreducible(&ctx.big_sub.rs, &hat)?;
        let restricted = restrict_to_face(&ctx.big_sub, &ctx.small_sub, emb, &chi_hat)?;
        let small_sub_hw = ctx.small_sub.to_sub(small_hw);
        let chi_small = FormalCharacter::irreducible(&ctx.small_sub.rs, &small_sub_hw)?;
        let rhs = restricted.product(&chi_small)?.invariant_multiplicity()?;
        report.check(lhs == rhs, || {
            format!("at ({big_hw}, {small_hw}): multiplicity {lhs}, face formula gives {rhs}")
        });
    }
    Ok(report)
}

/// Fixed-point sums against direct character values at random regular
/// rational torus points.
pub fn verify_localization(
    rs: &Arc<RootSystem>,
    highest_weights: &[Weight],
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new("localization", Value::Null);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_point = |rng: &mut ChaCha8Rng| -> Vec<Rat> {
        (0..rs.rank())
            .map(|_| {
                let num = rng.gen_range(1..=97i64);
                let den = rng.gen_range(1..=97i64);
                Rat::new(num.into(), den.into())
            })
            .collect()
    };
    let mut resampled = 0u64;
    for _ in 0..trials {
        let mut t = sample_point(&mut rng);
        while !is_regular(rs, &t)? {
            t = sample_point(&mut rng);
            resampled += 1;
            if resampled > 1000 {
                report.fail("could not sample a regular torus point".into());
                return Ok(report);
            }
        }
        for hw in highest_weights {
            let direct = FormalCharacter::irreducible(rs, hw)?.value_at(&t)?;
            let local = fixed_point_value(rs, hw, &t)?;
            report.check(local == direct, || {
                let ts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                format!(
                    "character {hw} at ({}) is {direct}, fixed-point sum gives {local}",
                    ts.join(", ")
                )
            });
        }
    }
    report.parameters = json!({
        "group": rs.spec().to_string(),
        "weights": highest_weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "trials": trials,
        "seed": seed,
        "singular_resamples": resampled,
    });
    Ok(report)
}

/// Moment certificates and symmetric invariants: certificates are re-checked
/// arithmetically, a separating functional forces vanishing invariants in
/// every positive degree, and a zero combination must come with a nontrivial
/// invariant in some positive degree within the bound.
pub fn verify_sym_invariants(ch: &FormalCharacter, max_degree: usize) -> Result<Report> {
    let mut report = Report::new(
        "sym-invariants",
        json!({
            "group": ch.root_system().spec().to_string(),
            "weights": ch
                .coeffs()
                .iter()
                .map(|(w, c)| json!({"weight": w.0, "multiplicity": c}))
                .collect::<Vec<_>>(),
            "max_degree": max_degree,
        }),
    );
    if ch.is_zero() {
        // the zero representation has nothing to separate and nothing to
        // invariant: vacuous pass
        report.check(true, String::new);
        return Ok(report);
    }
    let si = sym_invariants(ch, max_degree)?;
    report.check(si.dimensions[0] == 1, || {
        format!("degree zero has dimension {}", si.dimensions[0])
    });
    match &si.certificate {
        MomentCertificate::Separating(xi) => {
            for w in ch.coeffs().keys() {
                let p: i64 = w.0.iter().zip(xi).map(|(a, b)| a * b).sum();
                report.check(p > 0, || {
                    format!("separating functional pairs to {p} with weight {w}")
                });
            }
            for (d, &dim) in si.dimensions.iter().enumerate().skip(1) {
                report.check(dim == 0, || {
                    format!("separated weights but {dim} invariants in degree {d}")
                });
            }
        }
        MomentCertificate::ZeroCombination(comb) => {
            let total: Rat = comb.iter().map(|(_, c)| c.clone()).sum();
            report.check(total == Rat::one(), || {
                format!("combination coefficients sum to {total}")
            });
            report.check(comb.iter().all(|(_, c)| c.is_positive()), || {
                "combination has a nonpositive coefficient".into()
            });
            let rank = ch.root_system().rank();
            for i in 0..rank {
                let coord: Rat = comb
                    .iter()
                    .map(|(w, c)| c * Rat::from_integer(w.0[i].into()))
                    .sum();
                report.check(coord.is_zero(), || {
                    format!("combination coordinate {i} sums to {coord}")
                });
            }
            report.check(
                si.dimensions.iter().skip(1).any(|&d| d >= 1),
                || {
                    format!(
                        "zero combination but no invariant in any degree 1..={max_degree}"
                    )
                },
            );
        }
    }
    Ok(report)
}

/// Branching consistency three ways: the alternating decomposition of the
/// restricted dual, the subtraction decomposition, and the invariant part of
/// the product pairing must all agree.
pub fn verify_peter_weyl(emb: &Embedding, bound: i64) -> Result<Report> {
    let mut report = Report::new(
        "peter-weyl",
        json!({
            "big": emb.big().spec().to_string(),
            "small": emb.small().spec().to_string(),
            "bound": bound,
        }),
    );
    let sb = small_bound(emb, bound);
    let small_box = dominant_box(emb.small(), sb);
    for big_hw in dominant_box(emb.big(), bound) {
        let alternating = emb.branch(&big_hw)?;
        let dual_hw = emb.big().dual_weight(&big_hw)?;
        let chi_dual = FormalCharacter::irreducible(emb.big(), &dual_hw)?;
        let subtraction = emb.restrict(&chi_dual)?.decompose_subtraction();
        match subtraction {
            Ok(sub) => {
                report.check(sub == alternating, || {
                    format!("decompositions of the restricted dual of {big_hw} disagree")
                });
            }
            Err(e) => {
                report.fail(format!("subtraction oracle failed at {big_hw}: {e}"));
            }
        }
        for small_hw in &small_box {
            let m = alternating.get(small_hw).copied().unwrap_or(0);
            let p = pairing_multiplicity(emb, &big_hw, small_hw)?;
            report.check(m == p, || {
                format!("at ({big_hw}, {small_hw}): branch gives {m}, pairing gives {p}")
            });
        }
    }
    Ok(report)
}

/// The standard battery with default fixtures, in a fixed order.  The seed
/// only feeds the localization point sampler.
pub fn standard_suites(seed: u64) -> Result<Vec<Report>> {
    let a1: CartanSpec = "A1".parse()?;
    let a2: CartanSpec = "A2".parse()?;
    let mut out = Vec::new();

    out.push(verify_cone_vanishing(&Embedding::diagonal(&a1)?, 4, None)?);
    out.push(verify_cone_vanishing(&Embedding::levi_a2()?, 3, None)?);
    out.push(verify_cone_vanishing(&Embedding::maximal_torus(&a2)?, 6, None)?);

    out.push(verify_stretch_fit(
        &Embedding::diagonal(&a2)?,
        &[
            (Weight(vec![1, 1, 1, 1]), Weight(vec![1, 1])),
            (Weight(vec![1, 1, 1, 1]), Weight(vec![0, 0])),
        ],
        6,
        10,
        3,
        2,
    )?);
    out.push(verify_stretch_fit(
        &Embedding::maximal_torus(&a2)?,
        &[(Weight(vec![1, 1]), Weight(vec![0, 0]))],
        6,
        10,
        3,
        2,
    )?);

    out.push(verify_face_reduction(&FaceData::diagonal_cartan(&a1)?, 4)?);
    out.push(verify_face_reduction(&FaceData::diagonal_cartan(&a2)?, 2)?);
    out.push(verify_face_reduction(&FaceData::torus_facet_a2()?, 3)?);

    for (spec, hws) in [
        ("A2", vec![vec![1, 1], vec![2, 1]]),
        ("B2", vec![vec![0, 1], vec![1, 1]]),
        ("G2", vec![vec![1, 0]]),
    ] {
        let rs = RootSystem::from_str_spec(spec)?;
        let hws: Vec<Weight> = hws.into_iter().map(Weight).collect();
        out.push(verify_localization(&rs, &hws, 3, seed)?);
    }

    let a1rs = RootSystem::from_str_spec("A1")?;
    let t2rs = RootSystem::from_str_spec("T2")?;
    out.push(verify_sym_invariants(
        &FormalCharacter::irreducible(&a1rs, &Weight(vec![2]))?,
        6,
    )?);
    out.push(verify_sym_invariants(
        &FormalCharacter::from_coeffs(
            Arc::clone(&t2rs),
            [
                (Weight(vec![1, 0]), 1),
                (Weight(vec![0, 1]), 1),
                (Weight(vec![-1, -1]), 1),
            ]
            .into_iter()
            .collect(),
        )?,
        6,
    )?);
    out.push(verify_sym_invariants(
        &FormalCharacter::from_coeffs(
            Arc::clone(&t2rs),
            [(Weight(vec![1, 0]), 1), (Weight(vec![1, 1]), 2)].into_iter().collect(),
        )?,
        6,
    )?);

    out.push(verify_peter_weyl(&Embedding::levi_a2()?, 2)?);
    out.push(verify_peter_weyl(&Embedding::diagonal(&a1)?, 2)?);

    Ok(out)
}

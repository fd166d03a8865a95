//! Formal characters: finite integer combinations of weights with exact
//! arithmetic, plus decomposition into irreducible highest-weight pieces.
//!
//! Two independent decomposition routines are provided.  `decompose` inverts
//! the character map by the alternating trick: each support weight is pushed
//! into the dominant chamber by the shifted Weyl action and contributes with
//! the sign of the reducing element.  `decompose_subtraction` repeatedly
//! peels off the full character of the current maximal weight.  The second
//! one is slower but rejects anything that is not a genuine character, so it
//! doubles as a validity oracle; the two must agree on genuine inputs.

use crate::error::Error;
use crate::linalg::Rat;
use crate::roots::{RootSystem, Weight};
use crate::Result;
use num::{BigInt, One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Integer combination of weights of a fixed root system.
#[derive(Debug, Clone)]
pub struct FormalCharacter {
    rs: Arc<RootSystem>,
    coeffs: BTreeMap<Weight, i64>,
}

impl PartialEq for FormalCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.rs.spec() == other.rs.spec() && self.coeffs == other.coeffs
    }
}
impl Eq for FormalCharacter {}

impl FormalCharacter {
    pub fn zero(rs: Arc<RootSystem>) -> Self {
        FormalCharacter { rs, coeffs: BTreeMap::new() }
    }

    /// Character of the one-dimensional trivial representation.
    pub fn one(rs: Arc<RootSystem>) -> Self {
        let w = Weight::zero(rs.rank());
        FormalCharacter { rs, coeffs: BTreeMap::from([(w, 1)]) }
    }

    /// Single weight with coefficient one.
    pub fn monomial(rs: Arc<RootSystem>, w: Weight) -> Result<Self> {
        rs.check_weight(&w)?;
        Ok(FormalCharacter { rs, coeffs: BTreeMap::from([(w, 1)]) })
    }

    /// Character of the irreducible with the given highest weight.
    pub fn irreducible(rs: &Arc<RootSystem>, hw: &Weight) -> Result<Self> {
        let support = rs.irreducible_support(hw)?;
        Ok(FormalCharacter { rs: Arc::clone(rs), coeffs: (*support).clone() })
    }

    /// Builds from explicit coefficients; zero entries are dropped.
    pub fn from_coeffs(rs: Arc<RootSystem>, coeffs: BTreeMap<Weight, i64>) -> Result<Self> {
        for w in coeffs.keys() {
            rs.check_weight(w)?;
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(FormalCharacter { rs, coeffs })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn coeffs(&self) -> &BTreeMap<Weight, i64> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> BTreeMap<Weight, i64> {
        self.coeffs
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at the trivial torus element: the virtual dimension.
    pub fn dimension(&self) -> BigInt {
        self.coeffs.values().map(|&c| BigInt::from(c)).sum()
    }

    fn check_same_system(&self, other: &Self) -> Result<()> {
        if self.rs.spec() != other.rs.spec() {
            return Err(Error::MixedRootSystems(
                self.rs.spec().to_string(),
                other.rs.spec().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_system(other)?;
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            let e = coeffs.entry(w.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                coeffs.remove(w);
            }
        }
        Ok(FormalCharacter { rs: Arc::clone(&self.rs), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let coeffs = if k == 0 {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(w, c)| (w.clone(), c * k)).collect()
        };
        FormalCharacter { rs: Arc::clone(&self.rs), coeffs }
    }

    /// Pointwise product (tensor product on characters).
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_system(other)?;
        let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w1, c1) in &self.coeffs {
            for (w2, c2) in &other.coeffs {
                let w = w1.add(w2);
                let e = coeffs.entry(w.clone()).or_insert(0);
                *e = e
                    .checked_add(c1.checked_mul(*c2).expect("coefficient fits i64"))
                    .expect("coefficient fits i64");
                if *e == 0 {
                    coeffs.remove(&w);
                }
            }
        }
        Ok(FormalCharacter { rs: Arc::clone(&self.rs), coeffs })
    }

    /// Character of the dual representation.
    pub fn dual(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(w, c)| (w.neg(), *c)).collect();
        FormalCharacter { rs: Arc::clone(&self.rs), coeffs }
    }

    /// Expands in the basis of irreducible characters by the alternating
    /// trick.  The input must be Weyl-invariant; a negative multiplicity in
    /// the result is reported as `NotACharacter`.
    pub fn decompose(&self) -> Result<BTreeMap<Weight, i64>> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let d = self.rs.make_dominant(w, true)?;
            if d.singular {
                continue;
            }
            let e = out.entry(d.weight).or_insert(0);
            *e += d.parity * c;
        }
        out.retain(|_, c| *c != 0);
        if let Some((w, c)) = out.iter().find(|(_, c)| **c < 0) {
            return Err(Error::NotACharacter(format!(
                "expansion has multiplicity {c} at {w}"
            )));
        }
        Ok(out)
    }

    /// Expands by repeatedly subtracting the character of the maximal
    /// remaining weight.  Rejects any input that is not a nonnegative
    /// combination of irreducible characters.
    pub fn decompose_subtraction(&self) -> Result<BTreeMap<Weight, i64>> {
        let mut rem = self.coeffs.clone();
        let mut out = BTreeMap::new();
        loop {
            let Some((max, &c)) = rem
                .iter()
                .max_by_key(|(w, _)| (self.rs.height_key(w), (*w).clone()))
            else {
                break;
            };
            let max = max.clone();
            if c < 0 {
                return Err(Error::NotACharacter(format!(
                    "maximal weight {max} has coefficient {c}"
                )));
            }
            if !self.rs.is_dominant(&max) {
                return Err(Error::NotACharacter(format!(
                    "maximal weight {max} is not dominant"
                )));
            }
            let support = self.rs.irreducible_support(&max)?;
            for (w, m) in support.iter() {
                let e = rem.entry(w.clone()).or_insert(0);
                *e -= c * m;
                if *e == 0 {
                    rem.remove(w);
                }
            }
            out.insert(max, c);
        }
        Ok(out)
    }

    /// True when this is a genuine character, i.e. a nonnegative integer
    /// combination of irreducible characters.
    pub fn is_genuine(&self) -> bool {
        self.decompose_subtraction().is_ok()
    }

    /// Multiplicity of the trivial representation.
    pub fn invariant_multiplicity(&self) -> Result<i64> {
        Ok(self.decompose()?.get(&Weight::zero(self.rs.rank())).copied().unwrap_or(0))
    }

    /// Character of the k-th symmetric power.
    pub fn sym_power(&self, k: usize) -> Result<Self> {
        for (w, c) in &self.coeffs {
            if *c < 0 {
                return Err(Error::NotACharacter(format!(
                    "symmetric power needs nonnegative input, got {c} at {w}"
                )));
            }
        }
        // one table slot per total degree; fold in one distinct weight at a
        // time with multiplicity m, which contributes binomial(j + m - 1, j)
        // copies of j times that weight in degree j
        let rank = self.rs.rank();
        let mut table: Vec<BTreeMap<Weight, i128>> = vec![BTreeMap::new(); k + 1];
        table[0].insert(Weight::zero(rank), 1);
        for (w, &m) in &self.coeffs {
            let mut binom: Vec<i128> = Vec::with_capacity(k + 1);
            let mut b: i128 = 1;
            for j in 0..=k {
                if j > 0 {
                    // binomial(j + m - 1, j) from its predecessor
                    b = b * (i128::from(m) + j as i128 - 1) / j as i128;
                }
                binom.push(b);
            }
            // descending order: slot deg - j still holds the previous state
            for deg in (0..=k).rev() {
                let mut updated: BTreeMap<Weight, i128> = BTreeMap::new();
                for j in 0..=deg {
                    let shift = w.scale(j as i64);
                    for (base, c) in &table[deg - j] {
                        let target = if j == 0 { base.clone() } else { base.add(&shift) };
                        *updated.entry(target).or_insert(0) += c * binom[j];
                    }
                }
                table[deg] = updated;
            }
        }
        let coeffs = table
            .pop()
            .expect("table has k+1 slots")
            .into_iter()
            .map(|(w, c)| (w, i64::try_from(c).expect("multiplicity fits i64")))
            .collect();
        Ok(FormalCharacter { rs: Arc::clone(&self.rs), coeffs })
    }

    /// Evaluates at a torus point given by one positive rational per
    /// coordinate; a weight contributes the product of coordinates raised to
    /// its entries.
    pub fn value_at(&self, t: &[Rat]) -> Result<Rat> {
        if t.len() != self.rs.rank() {
            return Err(Error::RankMismatch { expected: self.rs.rank(), got: t.len() });
        }
        if t.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidInput("torus coordinates must be nonzero".into()));
        }
        let mut acc = Rat::zero();
        for (w, c) in &self.coeffs {
            acc += monomial_value(t, w) * Rat::from_integer((*c).into());
        }
        Ok(acc)
    }

    /// Canonical form: support entries sorted lexicographically, suitable
    /// for caching and golden comparisons.
    pub fn to_json_value(&self) -> Value {
        let support: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(w, c)| json!([w.0, c]))
            .collect();
        json!({
            "rs": self.rs.spec().to_string(),
            "support": support,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected a character object".into()))?;
        let spec = obj
            .get("rs")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidInput("missing string 'rs'".into()))?;
        let rs = RootSystem::from_str_spec(spec)?;
        let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
        for entry in obj
            .get("support")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("missing array 'support'".into()))?
        {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::InvalidInput("support entries are [coords, mult]".into()))?;
            let coords: Vec<i64> = pair[0]
                .as_array()
                .ok_or_else(|| Error::InvalidInput("weight coords must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidInput("weight coords must be integers".into()))
                })
                .collect::<Result<_>>()?;
            let mult = pair[1]
                .as_i64()
                .ok_or_else(|| Error::InvalidInput("multiplicity must be an integer".into()))?;
            rs.check_weight(&Weight(coords.clone()))?;
            if coeffs.insert(Weight(coords), mult).is_some() {
                return Err(Error::InvalidInput("duplicate support weight".into()));
            }
        }
        FormalCharacter::from_coeffs(rs, coeffs)
    }
}

/// Product of t_i to the power w_i; exponents may be negative.
pub(crate) fn monomial_value(t: &[Rat], w: &Weight) -> Rat {
    let mut acc = Rat::one();
    for (x, &e) in t.iter().zip(&w.0) {
        if e == 0 {
            continue;
        }
        let p = if e > 0 {
            x.pow(e as i32)
        } else {
            x.recip().pow((-e) as i32)
        };
        acc *= p;
    }
    acc
}

/// Multiplicities of the irreducible pieces of a tensor product of two
/// irreducible representations.
pub fn tensor_multiplicities(
    rs: &Arc<RootSystem>,
    a: &Weight,
    b: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    let ca = FormalCharacter::irreducible(rs, a)?;
    let cb = FormalCharacter::irreducible(rs, b)?;
    ca.product(&cb)?.decompose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_i};

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_str_spec(s).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn dec(m: &[(&[i64], i64)]) -> BTreeMap<Weight, i64> {
        m.iter().map(|(v, c)| (w(v), *c)).collect()
    }

    #[test]
    fn clebsch_gordan_for_rank_one() {
        let a1 = rs("A1");
        // [a] x [b] = [a+b] + [a+b-2] + ... + [|a-b|]
        for (a, b) in [(2i64, 3i64), (4, 4), (0, 5), (1, 1)] {
            let got = tensor_multiplicities(&a1, &w(&[a]), &w(&[b])).unwrap();
            let lo = (a - b).abs();
            let expect: BTreeMap<Weight, i64> =
                (lo..=a + b).step_by(2).map(|k| (w(&[k]), 1)).collect();
            assert_eq!(got, expect, "[{a}] x [{b}]");
        }
    }

    #[test]
    fn tensor_of_adjoint_with_itself_in_a2() {
        let a2 = rs("A2");
        let got = tensor_multiplicities(&a2, &w(&[1, 1]), &w(&[1, 1])).unwrap();
        let expect = dec(&[
            (&[0, 0], 1),
            (&[1, 1], 2),
            (&[3, 0], 1),
            (&[0, 3], 1),
            (&[2, 2], 1),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn tensor_of_seven_dimensionals_in_g2() {
        let g2 = rs("G2");
        let got = tensor_multiplicities(&g2, &w(&[1, 0]), &w(&[1, 0])).unwrap();
        let expect = dec(&[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[2, 0], 1)]);
        assert_eq!(got, expect);
        let total: BigInt = got
            .iter()
            .map(|(hw, m)| g2.weyl_dimension(hw).unwrap() * BigInt::from(*m))
            .sum();
        assert_eq!(total, BigInt::from(49));
    }

    #[test]
    fn oracles_agree_on_genuine_characters() {
        let cases = [
            ("A2", vec![1i64, 1], vec![2i64, 0]),
            ("B2", vec![1, 1], vec![0, 1]),
            ("G2", vec![1, 0], vec![0, 1]),
            ("A1xA1", vec![2, 1], vec![1, 3]),
            ("A2xT1", vec![1, 0, 2], vec![0, 1, -2]),
        ];
        for (s, a, b) in cases {
            let r = rs(s);
            let ca = FormalCharacter::irreducible(&r, &Weight(a)).unwrap();
            let cb = FormalCharacter::irreducible(&r, &Weight(b)).unwrap();
            let prod = ca.product(&cb).unwrap();
            let alt = prod.decompose().unwrap();
            let sub = prod.decompose_subtraction().unwrap();
            assert_eq!(alt, sub, "{s}");
            // dimensions add up
            let total: BigInt = alt
                .iter()
                .map(|(hw, m)| r.weyl_dimension(hw).unwrap() * BigInt::from(*m))
                .sum();
            assert_eq!(total, prod.dimension(), "{s}");
        }
    }

    #[test]
    fn subtraction_rejects_non_characters() {
        let a1 = rs("A1");
        // a bare nonzero weight is not Weyl-invariant
        let m = FormalCharacter::monomial(Arc::clone(&a1), w(&[1])).unwrap();
        assert!(m.decompose_subtraction().is_err());
        assert!(!m.is_genuine());
        // negative trivial component
        let neg = FormalCharacter::one(Arc::clone(&a1)).scale(-1);
        assert!(neg.decompose().is_err());
        assert!(neg.decompose_subtraction().is_err());
        // a genuine one passes
        let chi = FormalCharacter::irreducible(&a1, &w(&[3])).unwrap();
        assert!(chi.is_genuine());
    }

    #[test]
    fn invariant_multiplicity_counts_trivial_summands() {
        let a2 = rs("A2");
        let adj = FormalCharacter::irreducible(&a2, &w(&[1, 1])).unwrap();
        let sq = adj.product(&adj).unwrap();
        assert_eq!(sq.invariant_multiplicity().unwrap(), 1);
        assert_eq!(adj.invariant_multiplicity().unwrap(), 0);
        // V x V* always contains one invariant for irreducible V
        let v = FormalCharacter::irreducible(&a2, &w(&[2, 1])).unwrap();
        assert_eq!(v.product(&v.dual()).unwrap().invariant_multiplicity().unwrap(), 1);
    }

    #[test]
    fn dual_matches_dual_weight() {
        let a2 = rs("A2");
        let v = FormalCharacter::irreducible(&a2, &w(&[1, 0])).unwrap();
        let dual_hw = a2.dual_weight(&w(&[1, 0])).unwrap();
        let vd = FormalCharacter::irreducible(&a2, &dual_hw).unwrap();
        assert_eq!(v.dual(), vd);
    }

    #[test]
    fn symmetric_powers_of_the_standard_rank_one() {
        let a1 = rs("A1");
        let std2 = FormalCharacter::irreducible(&a1, &w(&[1])).unwrap();
        for k in 0..6usize {
            // Sym^k of the two-dimensional standard is irreducible
            let sym = std2.sym_power(k).unwrap();
            let expect = FormalCharacter::irreducible(&a1, &w(&[k as i64])).unwrap();
            assert_eq!(sym, expect, "k={k}");
        }
        let three = FormalCharacter::irreducible(&a1, &w(&[2])).unwrap();
        let sym2 = three.sym_power(2).unwrap();
        assert_eq!(sym2.decompose().unwrap(), dec(&[(&[4], 1), (&[0], 1)]));
        assert_eq!(sym2.dimension(), BigInt::from(6));
    }

    #[test]
    fn symmetric_power_dimensions() {
        let a2 = rs("A2");
        let v = FormalCharacter::irreducible(&a2, &w(&[1, 0])).unwrap();
        // dim Sym^k(C^3) = binomial(k+2, 2)
        for k in 0..8usize {
            let sym = v.sym_power(k).unwrap();
            let expect = ((k + 1) * (k + 2) / 2) as i64;
            assert_eq!(sym.dimension(), BigInt::from(expect), "k={k}");
            // Sym^k of the standard of A2 stays irreducible
            assert_eq!(sym.decompose().unwrap(), dec(&[(&[k as i64, 0], 1)]));
        }
    }

    #[test]
    fn sym_power_respects_multiplicities() {
        // Sym^2 of the trivial 2-dimensional character has dimension 3
        let t1 = rs("T1");
        let two = FormalCharacter::one(Arc::clone(&t1)).scale(2);
        let sym2 = two.sym_power(2).unwrap();
        assert_eq!(sym2.dimension(), BigInt::from(3));
        assert!(FormalCharacter::one(t1).scale(-1).sym_power(2).is_err());
    }

    #[test]
    fn values_at_torus_points() {
        let a1 = rs("A1");
        let chi1 = FormalCharacter::irreducible(&a1, &w(&[1])).unwrap();
        assert_eq!(chi1.value_at(&[rat_i(2)]).unwrap(), rat(5, 2));
        let chi3 = FormalCharacter::irreducible(&a1, &w(&[3])).unwrap();
        assert_eq!(chi3.value_at(&[rat_i(2)]).unwrap(), rat(85, 8));
        // at the identity the value is the dimension
        let g2 = rs("G2");
        let c = FormalCharacter::irreducible(&g2, &w(&[1, 1])).unwrap();
        assert_eq!(
            c.value_at(&[rat_i(1), rat_i(1)]).unwrap(),
            Rat::from_integer(c.dimension())
        );
        assert!(c.value_at(&[rat_i(0), rat_i(1)]).is_err());
        assert!(c.value_at(&[rat_i(1)]).is_err());
    }

    #[test]
    fn arithmetic_and_mixing_guards() {
        let a1 = rs("A1");
        let a2 = rs("A2");
        let x = FormalCharacter::irreducible(&a1, &w(&[1])).unwrap();
        let y = FormalCharacter::irreducible(&a2, &w(&[1, 0])).unwrap();
        assert!(x.product(&y).is_err());
        assert!(x.add(&y).is_err());
        let z = x.sub(&x).unwrap();
        assert!(z.is_zero());
        assert_eq!(x.add(&x).unwrap(), x.scale(2));
    }

    #[test]
    fn torus_characters_are_monomials() {
        let t2 = rs("T2");
        let m = FormalCharacter::monomial(Arc::clone(&t2), w(&[3, -1])).unwrap();
        let sq = m.product(&m).unwrap();
        assert_eq!(sq.coeff(&w(&[6, -2])), 1);
        assert_eq!(m.decompose().unwrap(), dec(&[(&[3, -1], 1)]));
        assert_eq!(m.value_at(&[rat_i(2), rat_i(3)]).unwrap(), rat(8, 3));
    }
}

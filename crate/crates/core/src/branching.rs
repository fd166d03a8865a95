//! Restriction of representations along an embedding of compact groups.
//!
//! An embedding is recorded by its effect on weights: an integer matrix
//! mapping the weight lattice of the big group onto weights of the small
//! group.  A matrix is accepted only if the restriction of every fundamental
//! irreducible decomposes as a genuine character of the small group; the
//! slow subtraction oracle is used here on purpose.
//!
//! The default multiplicity `branch` counts copies of an irreducible of the
//! small group inside the restriction of the *dual* of the big irreducible,
//! so for the diagonal embedding it counts invariants in a triple tensor
//! product.  `branch_direct` skips the dual.

use crate::cartan::CartanSpec;
use crate::character::FormalCharacter;
use crate::error::Error;
use crate::linalg::Rat;
use crate::roots::{RootSystem, Weight};
use crate::Result;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Embedding {
    big: Arc<RootSystem>,
    small: Arc<RootSystem>,
    /// Row r holds the r-th coordinate functional of the restriction.
    matrix: Vec<Vec<i64>>,
}

impl Embedding {
    pub fn new(
        big: Arc<RootSystem>,
        small: Arc<RootSystem>,
        matrix: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if matrix.len() != small.rank() {
            return Err(Error::InvalidEmbedding(format!(
                "matrix has {} rows, small group has rank {}",
                matrix.len(),
                small.rank()
            )));
        }
        for row in &matrix {
            if row.len() != big.rank() {
                return Err(Error::InvalidEmbedding(format!(
                    "matrix row has {} columns, big group has rank {}",
                    row.len(),
                    big.rank()
                )));
            }
        }
        let emb = Embedding { big, small, matrix };
        // every fundamental irreducible must restrict to a genuine character
        for i in 0..emb.big.rank() {
            let mut hw = vec![0i64; emb.big.rank()];
            hw[i] = 1;
            let chi = FormalCharacter::irreducible(&emb.big, &Weight(hw.clone()))?;
            let restricted = emb.restrict(&chi)?;
            if let Err(e) = restricted.decompose_subtraction() {
                return Err(Error::InvalidEmbedding(format!(
                    "restriction of the irreducible with highest weight {} is not a character: {e}",
                    Weight(hw)
                )));
            }
        }
        Ok(emb)
    }

    /// Diagonal embedding of a group into its own square.
    pub fn diagonal(spec: &CartanSpec) -> Result<Self> {
        let small = RootSystem::new(spec.clone());
        let big = RootSystem::new(spec.doubled());
        let n = small.rank();
        let matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut row = vec![0i64; 2 * n];
                row[i] = 1;
                row[n + i] = 1;
                row
            })
            .collect();
        Embedding::new(big, small, matrix)
    }

    /// Maximal torus of the given group, included by the identity on weights.
    pub fn maximal_torus(spec: &CartanSpec) -> Result<Self> {
        let big = RootSystem::new(spec.clone());
        let small = RootSystem::new(spec.torus_of_same_rank());
        let n = big.rank();
        let matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut row = vec![0i64; n];
                row[i] = 1;
                row
            })
            .collect();
        Embedding::new(big, small, matrix)
    }

    /// The block subgroup of the rank-two special unitary family: the
    /// centralizer of the second fundamental coweight, with weight map
    /// [[1,0],[1,2]].
    pub fn levi_a2() -> Result<Self> {
        let big = RootSystem::from_str_spec("A2")?;
        let sub = big.centralizer(&[vec![
            Rat::from_integer(0.into()),
            Rat::from_integer(1.into()),
        ]])?;
        Embedding::new(big, Arc::clone(&sub.rs), sub.map.clone())
    }

    pub fn big(&self) -> &Arc<RootSystem> {
        &self.big
    }

    pub fn small(&self) -> &Arc<RootSystem> {
        &self.small
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Image of a single weight.
    pub fn restrict_weight(&self, w: &Weight) -> Result<Weight> {
        self.big.check_weight(w)?;
        Ok(Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// Restriction of a character of the big group.
    pub fn restrict(&self, ch: &FormalCharacter) -> Result<FormalCharacter> {
        if ch.root_system().spec() != self.big.spec() {
            return Err(Error::MixedRootSystems(
                ch.root_system().spec().to_string(),
                self.big.spec().to_string(),
            ));
        }
        let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, c) in ch.coeffs() {
            let img = self.restrict_weight(w)?;
            let e = coeffs.entry(img.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                coeffs.remove(&img);
            }
        }
        FormalCharacter::from_coeffs(Arc::clone(&self.small), coeffs)
    }

    /// Multiplicities of small-group irreducibles in the restriction of the
    /// dual of the big irreducible with the given highest weight.
    pub fn branch(&self, hw: &Weight) -> Result<BTreeMap<Weight, i64>> {
        self.branch_with(hw, true)
    }

    /// Same without the dual.
    pub fn branch_direct(&self, hw: &Weight) -> Result<BTreeMap<Weight, i64>> {
        self.branch_with(hw, false)
    }

    pub fn branch_with(&self, hw: &Weight, dual: bool) -> Result<BTreeMap<Weight, i64>> {
        self.big.check_dominant(hw)?;
        let top = if dual { self.big.dual_weight(hw)? } else { hw.clone() };
        let chi = FormalCharacter::irreducible(&self.big, &top)?;
        self.restrict(&chi)?.decompose()
    }

    /// Cartan-side embedding dual to the weight map: pairing a big weight
    /// against the image equals pairing the restricted weight downstairs.
    pub fn embed_coweight(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.small.rank() {
            return Err(Error::RankMismatch { expected: self.small.rank(), got: x.len() });
        }
        let px = self.small.pairing_apply(x);
        let mtpx: Vec<Rat> = (0..self.big.rank())
            .map(|c| {
                self.matrix
                    .iter()
                    .zip(&px)
                    .filter(|(row, _)| row[c] != 0)
                    .map(|(row, v)| Rat::from_integer(row[c].into()) * v)
                    .sum()
            })
            .collect();
        Ok(self.big.pairing_inv_apply(&mtpx))
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "big": self.big.spec().to_string(),
            "small": self.small.spec().to_string(),
            "matrix": self.matrix,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidEmbedding("expected a JSON object".into()))?;
        let spec_field = |name: &str| -> Result<Arc<RootSystem>> {
            let s = obj
                .get(name)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidEmbedding(format!("missing string field '{name}'")))?;
            RootSystem::from_str_spec(s)
        };
        let big = spec_field("big")?;
        let small = spec_field("small")?;
        let matrix = obj
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidEmbedding("missing array field 'matrix'".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::InvalidEmbedding("matrix rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .ok_or_else(|| Error::InvalidEmbedding("matrix entries must be integers".into()))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        Embedding::new(big, small, matrix)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Embedding::from_json_value(&serde_json::from_str(s)?)
    }
}

/// All branching multiplicities for big highest weights in a coordinate box:
/// simple coordinates from 0 to `bound`, torus coordinates from -`bound`
/// to `bound`.  Only nonzero multiplicities are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingTable {
    pub big_spec: String,
    pub small_spec: String,
    pub matrix: Vec<Vec<i64>>,
    pub bound: i64,
    pub dual: bool,
    pub entries: BTreeMap<(Weight, Weight), i64>,
}

impl BranchingTable {
    pub fn compute(emb: &Embedding, bound: i64, dual: bool) -> Result<Self> {
        if bound < 0 {
            return Err(Error::InvalidInput("bound must be nonnegative".into()));
        }
        let mut entries = BTreeMap::new();
        for hw in dominant_box(emb.big(), bound) {
            for (small_hw, m) in emb.branch_with(&hw, dual)? {
                entries.insert((hw.clone(), small_hw), m);
            }
        }
        Ok(BranchingTable {
            big_spec: emb.big().spec().to_string(),
            small_spec: emb.small().spec().to_string(),
            matrix: emb.matrix().to_vec(),
            bound,
            dual,
            entries,
        })
    }

    pub fn multiplicity(&self, big_hw: &Weight, small_hw: &Weight) -> i64 {
        self.entries
            .get(&(big_hw.clone(), small_hw.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Entries are sorted [big coords, small coords, multiplicity] triples.
    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((b, s), m)| json!([b.0, s.0, m]))
            .collect();
        json!({
            "embedding": {
                "big": self.big_spec,
                "small": self.small_spec,
                "matrix": self.matrix,
            },
            "bound": self.bound,
            "dual": self.dual,
            "entries": entries,
        })
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
        let emb = obj
            .get("embedding")
            .ok_or_else(|| Error::InvalidInput("missing object field 'embedding'".into()))?;
        let embedding = Embedding::from_json_value(emb)?;
        let weight_of = |v: &Value| -> Result<Weight> {
            v.as_array()
                .ok_or_else(|| Error::InvalidInput("weight must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidInput("weight entries must be integers".into()))
                })
                .collect::<Result<Vec<i64>>>()
                .map(Weight)
        };
        let mut entries = BTreeMap::new();
        for e in obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("missing array field 'entries'".into()))?
        {
            let triple = e
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::InvalidInput("entries are [big, small, mult] triples".into()))?;
            let b = weight_of(&triple[0])?;
            let s = weight_of(&triple[1])?;
            let m = triple[2]
                .as_i64()
                .ok_or_else(|| Error::InvalidInput("multiplicity must be an integer".into()))?;
            entries.insert((b, s), m);
        }
        Ok(BranchingTable {
            big_spec: embedding.big().spec().to_string(),
            small_spec: embedding.small().spec().to_string(),
            matrix: embedding.matrix().to_vec(),
            bound: obj
                .get("bound")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::InvalidInput("missing integer field 'bound'".into()))?,
            dual: obj.get("dual").and_then(Value::as_bool).unwrap_or(true),
            entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("big_weight,small_weight,multiplicity\n");
        for ((b, s), m) in &self.entries {
            out.push_str(&format!("\"{b}\",\"{s}\",{m}\n"));
        }
        out
    }
}

/// Dominant weights with simple coordinates in [0, bound] and torus
/// coordinates in [-bound, bound], in lexicographic order.
pub fn dominant_box(rs: &Arc<RootSystem>, bound: i64) -> Vec<Weight> {
    let rank = rs.rank();
    let dominant_coord: Vec<bool> = {
        let mut v = vec![false; rank];
        for &p in rs.simple_positions() {
            v[p] = true;
        }
        v
    };
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(
        pos: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Weight>,
        dominant_coord: &[bool],
        bound: i64,
    ) {
        if pos == cur.len() {
            out.push(Weight(cur.clone()));
            return;
        }
        let lo = if dominant_coord[pos] { 0 } else { -bound };
        for v in lo..=bound {
            cur[pos] = v;
            rec(pos + 1, cur, out, dominant_coord, bound);
        }
        cur[pos] = 0;
    }
    rec(0, &mut cur, &mut out, &dominant_coord, bound);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::tensor_multiplicities;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn spec(s: &str) -> CartanSpec {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_branching_counts_triple_invariants() {
        let emb = Embedding::diagonal(&spec("A1")).unwrap();
        assert_eq!(emb.big().spec().to_string(), "A1xA1");
        let got = emb.branch(&w(&[1, 1])).unwrap();
        // [1] x [1] is self dual and splits as [2] + [0]
        assert_eq!(got, BTreeMap::from([(w(&[0]), 1), (w(&[2]), 1)]));
        assert_eq!(emb.branch(&w(&[1, 2])).unwrap(), BTreeMap::from([(w(&[1]), 1), (w(&[3]), 1)]));
    }

    #[test]
    fn diagonal_branching_matches_tensor_duals_in_a2() {
        let emb = Embedding::diagonal(&spec("A2")).unwrap();
        let a2 = emb.small();
        for (mu, nu) in [([1i64, 0], [0i64, 1]), ([1, 1], [1, 0]), ([2, 0], [0, 2])] {
            let big_hw = Weight([mu.as_slice(), nu.as_slice()].concat());
            let got = emb.branch(&big_hw).unwrap();
            // invariant pairing: same as decomposing the tensor of the duals
            let mud = a2.dual_weight(&w(&mu)).unwrap();
            let nud = a2.dual_weight(&w(&nu)).unwrap();
            let expect = tensor_multiplicities(a2, &mud, &nud).unwrap();
            assert_eq!(got, expect, "{mu:?} {nu:?}");
        }
    }

    #[test]
    fn torus_branching_returns_weight_multiplicities() {
        let emb = Embedding::maximal_torus(&spec("A2")).unwrap();
        let got = emb.branch(&w(&[1, 1])).unwrap();
        assert_eq!(got.get(&w(&[0, 0])), Some(&2));
        assert_eq!(got.len(), 7);
        let total: i64 = got.values().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn levi_block_subgroup_fixture() {
        let emb = Embedding::levi_a2().unwrap();
        assert_eq!(emb.small().spec().to_string(), "A1xT1");
        assert_eq!(emb.matrix(), &[vec![1, 0], vec![1, 2]]);
        // restriction of the adjoint, which is self dual
        let got = emb.branch(&w(&[1, 1])).unwrap();
        let expect = BTreeMap::from([
            (w(&[0, 0]), 1),
            (w(&[2, 0]), 1),
            (w(&[1, 3]), 1),
            (w(&[1, -3]), 1),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn dual_and_direct_conventions_differ() {
        let emb = Embedding::levi_a2().unwrap();
        let dual = emb.branch(&w(&[1, 0])).unwrap();
        let direct = emb.branch_direct(&w(&[1, 0])).unwrap();
        assert_eq!(dual, BTreeMap::from([(w(&[0, 2]), 1), (w(&[1, -1]), 1)]));
        assert_eq!(direct, BTreeMap::from([(w(&[0, -2]), 1), (w(&[1, 1]), 1)]));
    }

    #[test]
    fn weight_maps_that_are_not_embeddings_are_rejected() {
        let a1 = RootSystem::from_str_spec("A1").unwrap();
        // scaling weights does not come from a group homomorphism: the
        // two-dimensional irreducible would restrict to t^k + t^-k
        for k in [2i64, 3] {
            let err = Embedding::new(Arc::clone(&a1), Arc::clone(&a1), vec![vec![k]]);
            assert!(matches!(err, Err(Error::InvalidEmbedding(_))), "scale {k}");
        }
        assert!(Embedding::new(Arc::clone(&a1), Arc::clone(&a1), vec![vec![1]]).is_ok());
        // into a torus anything goes, restrictions are sums of monomials
        let t1 = RootSystem::from_str_spec("T1").unwrap();
        assert!(Embedding::new(Arc::clone(&a1), t1, vec![vec![2]]).is_ok());
        // shape mismatches
        assert!(Embedding::new(Arc::clone(&a1), Arc::clone(&a1), vec![vec![1, 0]]).is_err());
        assert!(Embedding::new(Arc::clone(&a1), Arc::clone(&a1), vec![]).is_err());
    }

    #[test]
    fn embedding_json_round_trip() {
        let emb = Embedding::levi_a2().unwrap();
        let v = emb.to_json_value();
        let back = Embedding::from_json_value(&v).unwrap();
        assert_eq!(back.matrix(), emb.matrix());
        assert_eq!(back.big().spec(), emb.big().spec());
        let parsed = Embedding::from_json(
            r#"{"big":"A2","small":"A1xT1","matrix":[[1,0],[1,2]]}"#,
        )
        .unwrap();
        assert_eq!(parsed.matrix(), emb.matrix());
        assert!(Embedding::from_json(r#"{"big":"A2"}"#).is_err());
    }

    #[test]
    fn coweight_embedding_is_dual_to_the_weight_map() {
        use crate::linalg::{rat, rat_i};
        for emb in [
            Embedding::levi_a2().unwrap(),
            Embedding::diagonal(&spec("A1")).unwrap(),
            Embedding::maximal_torus(&spec("B2")).unwrap(),
        ] {
            let x: Vec<_> = (0..emb.small().rank())
                .map(|i| rat(3 + i as i64, 2) - rat_i(2))
                .collect();
            let ix = emb.embed_coweight(&x).unwrap();
            for i in 0..emb.big().rank() {
                let mut v = vec![0i64; emb.big().rank()];
                v[i] = 1;
                let mu = Weight(v);
                let lhs = emb.big().pair_coweight(&mu, &ix);
                let rhs = emb
                    .small()
                    .pair_coweight(&emb.restrict_weight(&mu).unwrap(), &x);
                assert_eq!(lhs, rhs, "coordinate {i}");
            }
        }
    }

    #[test]
    fn branching_table_for_the_diagonal() {
        let emb = Embedding::diagonal(&spec("A1")).unwrap();
        let table = BranchingTable::compute(&emb, 2, true).unwrap();
        assert_eq!(table.multiplicity(&w(&[1, 1]), &w(&[2])), 1);
        assert_eq!(table.multiplicity(&w(&[1, 1]), &w(&[4])), 0);
        assert_eq!(table.multiplicity(&w(&[2, 2]), &w(&[0])), 1);
        // 9 box weights, each [a] x [b] has min(a,b)+1 summands
        let expected: usize = (0..3).flat_map(|a| (0..3).map(move |b| a.min(b) + 1)).sum();
        assert_eq!(table.entries.len(), expected);
        let round = BranchingTable::from_json_value(&table.to_json_value()).unwrap();
        assert_eq!(round, table);
        let csv = table.to_csv();
        assert!(csv.starts_with("big_weight,small_weight,multiplicity\n"));
        assert!(csv.contains("\"[1,1]\",\"[2]\",1\n"));
    }

    #[test]
    fn dominant_box_respects_torus_coordinates() {
        let rs = RootSystem::from_str_spec("A1xT1").unwrap();
        let box1 = dominant_box(&rs, 1);
        // 2 dominant values x 3 torus values
        assert_eq!(box1.len(), 6);
        assert!(box1.contains(&w(&[0, -1])));
        assert!(!box1.contains(&w(&[-1, 0])));
    }
}

//! Root systems for products of simple Cartan types and tori.
//!
//! Coordinates: a weight is an integer vector of length `rank` whose entries
//! on simple-factor positions are fundamental-weight coordinates and on torus
//! positions are lattice characters.  Roots are stored both in fundamental
//! coordinates and as integer combinations of the simple roots.  The ambient
//! bilinear form is the Weyl-invariant form normalized so long roots of every
//! simple factor have squared length 2; it vanishes on torus directions.
//!
//! Cartan-side vectors (elements of the Lie algebra of the maximal torus) are
//! rational vectors in the basis dual to the simple roots on simple factors
//! and dual to the lattice basis on torus factors, so the pairing of a root
//! with a Cartan vector is the dot product of the root's simple-root
//! coordinates with the vector.

use crate::cartan::{CartanSpec, Factor, SimpleType};
use crate::error::Error;
use crate::linalg::{integer_kernel, QMat, Rat};
use crate::Result;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

/// Weight in fundamental-weight / lattice coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Weyl group element as a word in simple reflections; `word[0]` acts last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    /// Determinant sign; equal for every word representing the same element.
    pub fn parity(&self) -> i64 {
        if self.0.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }
}

/// Result of reducing a weight into the dominant chamber.
#[derive(Debug, Clone)]
pub struct DominantForm {
    pub weight: Weight,
    /// Sign of the reducing element; canonical for regular inputs.
    pub parity: i64,
    /// True when the (shifted) weight lies on a reflection wall.
    pub singular: bool,
    /// Element w with w(input) = weight (dot action when shifted).
    pub word: WeylWord,
}

/// One positive root.
#[derive(Debug, Clone)]
pub struct PosRoot {
    /// Fundamental coordinates (length = rank).
    pub fund: Vec<i64>,
    /// Coordinates over the global simple-root list (length = simple count).
    pub simple: Vec<i64>,
    pub height: i64,
    /// Scaled squared length: (alpha, alpha) * gram_denominator.
    norm_scaled: i64,
}

struct FactorBlock {
    factor: Factor,
    /// First global coordinate of this factor.
    offset: usize,
    rank: usize,
    /// Scaled inverse Cartan matrix (empty for torus): ainv = ainv_num / ainv_den.
    ainv_num: Vec<Vec<i64>>,
    ainv_den: i64,
}

/// Immutable root system data for a `CartanSpec`, shared via `Arc`.
pub struct RootSystem {
    spec: CartanSpec,
    rank: usize,
    blocks: Vec<FactorBlock>,
    /// Global coordinate index of each simple root.
    simple_pos: Vec<usize>,
    /// Simple roots in fundamental coordinates.
    alpha_fund: Vec<Vec<i64>>,
    /// Simple coroots in Cartan-side coordinates.
    alpha_cov: Vec<Vec<i64>>,
    positive: Vec<PosRoot>,
    /// Invariant form on weights: gram = gram_num / gram_den, zero on tori.
    gram_num: Vec<Vec<i64>>,
    gram_den: i64,
    /// Pairing of weights with Cartan-side vectors.
    pairing: QMat,
    rho: Weight,
    weyl_order: BigInt,
    pub(crate) char_memo: Mutex<HashMap<Vec<i64>, Arc<BTreeMap<Weight, i64>>>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.spec)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}
impl Eq for RootSystem {}

fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t {
        SimpleType::A(_) => {
            for i in 0..n.saturating_sub(1) {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        SimpleType::B(_) => {
            for i in 0..n.saturating_sub(2) {
                bond(&mut a, i, i + 1, -1, -1);
            }
            if n >= 2 {
                // last simple root is short
                bond(&mut a, n - 2, n - 1, -2, -1);
            }
        }
        SimpleType::C(_) => {
            for i in 0..n.saturating_sub(2) {
                bond(&mut a, i, i + 1, -1, -1);
            }
            if n >= 2 {
                // last simple root is long
                bond(&mut a, n - 2, n - 1, -1, -2);
            }
        }
        SimpleType::D(_) => {
            for i in 0..n - 3 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 3, n - 2, -1, -1);
            bond(&mut a, n - 3, n - 1, -1, -1);
        }
        SimpleType::E(_) => {
            bond(&mut a, 0, 2, -1, -1);
            bond(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        SimpleType::F4 => {
            bond(&mut a, 0, 1, -1, -1);
            // third and fourth simple roots are short
            bond(&mut a, 1, 2, -2, -1);
            bond(&mut a, 2, 3, -1, -1);
        }
        SimpleType::G2 => {
            // first simple root is short
            bond(&mut a, 0, 1, -1, -3);
        }
    }
    a
}

/// Half squared lengths of the simple roots, normalized so long roots get 1.
fn root_half_lengths(a: &[Vec<i64>]) -> Vec<Rat> {
    let n = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    d[0] = Some(Rat::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                // d_j / d_i = a_ji / a_ij
                let r = Rat::new(BigInt::from(a[j][i]), BigInt::from(a[i][j]));
                d[j] = Some(d[i].clone().expect("visited") * r);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rat> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let max = d.iter().max().expect("nonempty").clone();
    d.into_iter().map(|x| x / &max).collect()
}

/// Positive roots in simple-root coordinates, generated by string closure.
fn positive_roots_of(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut level = roots.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                // q > 0 decides whether beta + alpha_i is a root, where
                // q = p - <beta, alpha_i^vee> and p counts steps down the string
                let pair: i64 = (0..n).map(|k| beta[k] * a[k][i]).sum();
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if seen.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        level = next;
    }
    roots
}

fn weyl_order_of(f: Factor) -> BigInt {
    let fact = |n: usize| -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    };
    let pow2 = |n: usize| -> BigInt { BigInt::one() << n };
    match f {
        Factor::Torus(_) => BigInt::one(),
        Factor::Simple(SimpleType::A(n)) => fact(n + 1),
        Factor::Simple(SimpleType::B(n)) | Factor::Simple(SimpleType::C(n)) => pow2(n) * fact(n),
        Factor::Simple(SimpleType::D(n)) => pow2(n - 1) * fact(n),
        Factor::Simple(SimpleType::E(6)) => BigInt::from(51_840u64),
        Factor::Simple(SimpleType::E(7)) => BigInt::from(2_903_040u64),
        Factor::Simple(SimpleType::E(8)) => BigInt::from(696_729_600u64),
        Factor::Simple(SimpleType::E(_)) => unreachable!("validated rank"),
        Factor::Simple(SimpleType::F4) => BigInt::from(1152u64),
        Factor::Simple(SimpleType::G2) => BigInt::from(12u64),
    }
}

impl RootSystem {
    pub fn new(spec: CartanSpec) -> Arc<RootSystem> {
        let rank = spec.rank();
        let mut blocks = Vec::new();
        let mut simple_pos = Vec::new();
        let mut alpha_fund: Vec<Vec<i64>> = Vec::new();
        let mut alpha_cov: Vec<Vec<i64>> = Vec::new();
        let mut gram_q = QMat::zero(rank, rank);
        let mut pairing = QMat::zero(rank, rank);
        let mut positive_raw: Vec<(usize, Vec<i64>)> = Vec::new(); // (block idx, local simple coords)
        let mut offset = 0usize;
        let mut weyl_order = BigInt::one();

        for &factor in &spec.factors {
            let frank = factor.rank();
            weyl_order *= weyl_order_of(factor);
            match factor {
                Factor::Torus(_) => {
                    for i in 0..frank {
                        pairing[(offset + i, offset + i)] = Rat::one();
                    }
                    blocks.push(FactorBlock {
                        factor,
                        offset,
                        rank: frank,
                        ainv_num: Vec::new(),
                        ainv_den: 1,
                    });
                }
                Factor::Simple(t) => {
                    let a = cartan_matrix(t);
                    let d = root_half_lengths(&a);
                    let a_q = QMat::from_int_rows(&a);
                    let ainv = a_q.inverse().expect("Cartan matrix invertible");
                    // scaled integer inverse
                    let mut den = BigInt::one();
                    for i in 0..frank {
                        for j in 0..frank {
                            den = num::Integer::lcm(&den, ainv[(i, j)].denom());
                        }
                    }
                    let ainv_den = den.to_i64().expect("small determinant");
                    let ainv_num: Vec<Vec<i64>> = (0..frank)
                        .map(|i| {
                            (0..frank)
                                .map(|j| {
                                    let v = &ainv[(i, j)] * Rat::from_integer(den.clone());
                                    v.to_integer().to_i64().expect("small entry")
                                })
                                .collect()
                        })
                        .collect();
                    // weight form on this block: (omega_i, omega_j) = d_i * ainv[j][i]
                    for i in 0..frank {
                        for j in 0..frank {
                            gram_q[(offset + i, offset + j)] = &d[i] * &ainv[(j, i)];
                            pairing[(offset + i, offset + j)] = ainv[(i, j)].clone();
                        }
                    }
                    let block_idx = blocks.len();
                    for i in 0..frank {
                        simple_pos.push(offset + i);
                        let mut fund = vec![0i64; rank];
                        for j in 0..frank {
                            fund[offset + j] = a[i][j];
                        }
                        alpha_fund.push(fund);
                        let mut cov = vec![0i64; rank];
                        for j in 0..frank {
                            cov[offset + j] = a[j][i];
                        }
                        alpha_cov.push(cov);
                    }
                    for local in positive_roots_of(&a) {
                        positive_raw.push((block_idx, local));
                    }
                    blocks.push(FactorBlock { factor, offset, rank: frank, ainv_num, ainv_den });
                }
            }
            offset += frank;
        }

        // scale the weight form to integers
        let mut gram_den_big = BigInt::one();
        for i in 0..rank {
            for j in 0..rank {
                gram_den_big = num::Integer::lcm(&gram_den_big, gram_q[(i, j)].denom());
            }
        }
        let gram_den = gram_den_big.to_i64().expect("small form denominator");
        let gram_num: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = &gram_q[(i, j)] * Rat::from_integer(gram_den_big.clone());
                        v.to_integer().to_i64().expect("small form entry")
                    })
                    .collect()
            })
            .collect();

        // globalize and canonically order the positive roots
        let simple_count = simple_pos.len();
        let simple_base: Vec<usize> = {
            // index of the first simple root of each block
            let mut base = vec![0usize; blocks.len()];
            let mut acc = 0;
            for (bi, b) in blocks.iter().enumerate() {
                base[bi] = acc;
                if matches!(b.factor, Factor::Simple(_)) {
                    acc += b.rank;
                }
            }
            base
        };
        let mut positive: Vec<PosRoot> = positive_raw
            .into_iter()
            .map(|(bi, local)| {
                let mut simple = vec![0i64; simple_count];
                let mut fund = vec![0i64; rank];
                for (li, &c) in local.iter().enumerate() {
                    let gi = simple_base[bi] + li;
                    simple[gi] = c;
                    for k in 0..rank {
                        fund[k] += c * alpha_fund[gi][k];
                    }
                }
                let height = local.iter().sum();
                PosRoot { fund, simple, height, norm_scaled: 0 }
            })
            .collect();
        for r in positive.iter_mut() {
            r.norm_scaled = scaled_ip(&gram_num, &r.fund, &r.fund)
                .to_i64()
                .expect("root norm fits i64");
        }
        positive.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| b.simple.cmp(&a.simple))
        });

        let mut rho = vec![0i64; rank];
        for &p in &simple_pos {
            rho[p] = 1;
        }

        Arc::new(RootSystem {
            spec,
            rank,
            blocks,
            simple_pos,
            alpha_fund,
            alpha_cov,
            positive,
            gram_num,
            gram_den,
            pairing,
            rho: Weight(rho),
            weyl_order,
            char_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn from_str_spec(s: &str) -> Result<Arc<RootSystem>> {
        Ok(RootSystem::new(s.parse::<CartanSpec>()?))
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_count(&self) -> usize {
        self.simple_pos.len()
    }

    /// Coordinate index of each simple root's fundamental weight.
    pub fn simple_positions(&self) -> &[usize] {
        &self.simple_pos
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn weyl_order(&self) -> &BigInt {
        &self.weyl_order
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        self.alpha_fund.iter().map(|v| Weight(v.clone())).collect()
    }

    pub fn positive_roots(&self) -> &[PosRoot] {
        &self.positive
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (0..self.rank)
            .map(|i| {
                let mut v = vec![0i64; self.rank];
                v[i] = 1;
                Weight(v)
            })
            .collect()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: w.len() });
        }
        Ok(())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simple_pos.iter().all(|&p| w.0[p] >= 0)
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !self.is_dominant(w) {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// Weyl-invariant inner product of two weights.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Rat {
        Rat::new(
            scaled_ip(&self.gram_num, &a.0, &b.0).into(),
            BigInt::from(self.gram_den),
        )
    }

    /// Pairing of a weight with a Cartan-side vector.
    pub fn pair_coweight(&self, w: &Weight, x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        let wq: Vec<Rat> = w.0.iter().map(|&c| Rat::from_integer(c.into())).collect();
        let px = self.pairing.matvec(x);
        for (a, b) in wq.iter().zip(&px) {
            acc += a * b;
        }
        acc
    }

    /// Applies the pairing matrix to a Cartan-side vector.
    pub(crate) fn pairing_apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.pairing.matvec(x)
    }

    /// Applies the inverse of the pairing matrix: Cartan-matrix rows on
    /// simple positions, identity on torus positions.
    pub(crate) fn pairing_inv_apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut simple_at: Vec<Option<usize>> = vec![None; self.rank];
        for (j, &p) in self.simple_pos.iter().enumerate() {
            simple_at[p] = Some(j);
        }
        (0..self.rank)
            .map(|r| match simple_at[r] {
                Some(j) => self
                    .alpha_fund[j]
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| **a != 0)
                    .map(|(a, x)| Rat::from_integer((*a).into()) * x)
                    .sum(),
                None => v[r].clone(),
            })
            .collect()
    }

    fn reflect_weight_in_place(&self, v: &mut [i64], j: usize) {
        let c = v[self.simple_pos[j]];
        if c != 0 {
            for (vi, ai) in v.iter_mut().zip(&self.alpha_fund[j]) {
                *vi -= c * ai;
            }
        }
    }

    pub fn simple_reflection(&self, j: usize, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        self.reflect_weight_in_place(&mut v, j);
        Weight(v)
    }

    /// Applies a word to a weight; `word[0]` acts last.
    pub fn apply_word(&self, word: &WeylWord, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        for &j in word.0.iter().rev() {
            self.reflect_weight_in_place(&mut v, j);
        }
        Weight(v)
    }

    /// Applies a word to a Cartan-side vector; `word[0]` acts last.
    pub fn apply_word_coweight(&self, word: &WeylWord, x: &[Rat]) -> Vec<Rat> {
        let mut v = x.to_vec();
        for &j in word.0.iter().rev() {
            let c = v[self.simple_pos[j]].clone();
            if !c.is_zero() {
                for (vi, ai) in v.iter_mut().zip(&self.alpha_cov[j]) {
                    if *ai != 0 {
                        *vi -= &c * Rat::from_integer((*ai).into());
                    }
                }
            }
        }
        v
    }

    /// Reduces a weight into the dominant chamber, recording the element.
    /// With `shifted` the dot action w(v + rho) - rho is used, and
    /// singularity means the shifted weight lies on a wall.
    pub fn make_dominant(&self, w: &Weight, shifted: bool) -> Result<DominantForm> {
        self.check_weight(w)?;
        let mut v = w.0.clone();
        if shifted {
            for (vi, ri) in v.iter_mut().zip(&self.rho.0) {
                *vi += ri;
            }
        }
        let mut parity = 1i64;
        let mut applied: Vec<usize> = Vec::new();
        loop {
            let Some(j) = (0..self.simple_count()).find(|&j| v[self.simple_pos[j]] < 0) else {
                break;
            };
            self.reflect_weight_in_place(&mut v, j);
            parity = -parity;
            applied.push(j);
        }
        let singular = self.simple_pos.iter().any(|&p| v[p] == 0);
        if shifted {
            for (vi, ri) in v.iter_mut().zip(&self.rho.0) {
                *vi -= ri;
            }
        }
        applied.reverse();
        Ok(DominantForm { weight: Weight(v), parity, singular, word: WeylWord(applied) })
    }

    fn dominant_conjugate_raw(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        loop {
            let Some(j) = (0..self.simple_count()).find(|&j| v[self.simple_pos[j]] < 0) else {
                return v;
            };
            self.reflect_weight_in_place(&mut v, j);
        }
    }

    /// Dominant representative of -w: the highest weight of the dual of the
    /// irreducible with highest weight w.
    pub fn dual_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        Ok(Weight(self.dominant_conjugate_raw(&w.neg().0)))
    }

    /// Word for the longest element (maps the antidominant chamber to the
    /// dominant one).
    pub fn longest_element(&self) -> WeylWord {
        self.make_dominant(&self.rho.neg(), false)
            .expect("rho has correct rank")
            .word
    }

    /// Full Weyl orbit, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check_weight(w)?;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::from([w.0.clone()]);
        seen.insert(w.0.clone());
        while let Some(v) = queue.pop_front() {
            for j in 0..self.simple_count() {
                let mut n = v.clone();
                self.reflect_weight_in_place(&mut n, j);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        Ok(seen.into_iter().map(Weight).collect())
    }

    /// All Weyl group elements as words; errors beyond one million elements.
    pub fn weyl_elements(&self) -> Result<Vec<WeylWord>> {
        if self.weyl_order > BigInt::from(1_000_000u64) {
            return Err(Error::WeylGroupTooLarge(self.weyl_order.to_string()));
        }
        let mut elems: HashMap<Vec<i64>, WeylWord> = HashMap::new();
        elems.insert(self.rho.0.clone(), WeylWord::identity());
        let mut queue = VecDeque::from([self.rho.0.clone()]);
        while let Some(v) = queue.pop_front() {
            let word = elems[&v].clone();
            for j in 0..self.simple_count() {
                let mut n = v.clone();
                self.reflect_weight_in_place(&mut n, j);
                if !elems.contains_key(&n) {
                    // new element s_j * w: s_j applied after w
                    let mut nw = Vec::with_capacity(word.0.len() + 1);
                    nw.push(j);
                    nw.extend(&word.0);
                    elems.insert(n.clone(), WeylWord(nw));
                    queue.push_back(n);
                }
            }
        }
        let mut out: Vec<(Vec<i64>, WeylWord)> = elems.into_iter().collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out.into_iter().map(|(_, w)| w).collect())
    }

    /// Product of (lambda + rho, alpha) / (rho, alpha) over positive roots.
    pub fn weyl_dimension(&self, w: &Weight) -> Result<BigInt> {
        self.check_dominant(w)?;
        let lr = w.add(&self.rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for r in &self.positive {
            num *= BigInt::from(scaled_ip(&self.gram_num, &lr.0, &r.fund));
            den *= BigInt::from(scaled_ip(&self.gram_num, &self.rho.0, &r.fund));
        }
        let (q, rem) = num::Integer::div_rem(&num, &den);
        assert!(rem.is_zero(), "dimension product must divide exactly");
        assert!(q.is_positive(), "dimension must be positive");
        Ok(q)
    }

    /// Pairing of a positive root (by index) with a Cartan-side vector.
    fn root_coweight_pairing(&self, root: &PosRoot, x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (j, &c) in root.simple.iter().enumerate() {
            if c != 0 {
                acc += Rat::from_integer(c.into()) * &x[self.simple_pos[j]];
            }
        }
        acc
    }

    /// Roots vanishing on a Cartan subspace, packaged as a standalone root
    /// system of the same total rank plus a lattice map into it.
    pub fn centralizer(self: &Arc<Self>, subspace: &[Vec<Rat>]) -> Result<CentralizerSubsystem> {
        for v in subspace {
            if v.len() != self.rank {
                return Err(Error::RankMismatch { expected: self.rank, got: v.len() });
            }
        }
        let selected: Vec<usize> = (0..self.positive.len())
            .filter(|&i| {
                subspace
                    .iter()
                    .all(|x| self.root_coweight_pairing(&self.positive[i], x).is_zero())
            })
            .collect();
        // indecomposable elements of the selected set are the simple system
        let sel_fund: HashSet<Vec<i64>> =
            selected.iter().map(|&i| self.positive[i].fund.clone()).collect();
        let sub_simple: Vec<usize> = selected
            .iter()
            .copied()
            .filter(|&i| {
                let r = &self.positive[i].fund;
                !selected.iter().any(|&p| {
                    let pf = &self.positive[p].fund;
                    if self.positive[p].height >= self.positive[i].height {
                        return false;
                    }
                    let diff: Vec<i64> = r.iter().zip(pf).map(|(a, b)| a - b).collect();
                    sel_fund.contains(&diff)
                })
            })
            .collect();

        // Cartan integers between the chosen simple roots
        let s = sub_simple.len();
        let cmat: Vec<Vec<i64>> = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        let bi = &self.positive[sub_simple[i]];
                        let bj = &self.positive[sub_simple[j]];
                        let num = 2 * scaled_ip(&self.gram_num, &bi.fund, &bj.fund);
                        let den = i128::from(bj.norm_scaled);
                        assert!(num % den == 0, "Cartan integer must be integral");
                        i64::try_from(num / den).expect("small Cartan integer")
                    })
                    .collect()
            })
            .collect();

        // connected components in discovery order
        let mut comp_of = vec![usize::MAX; s];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..s {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp_of[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..s {
                    if comp_of[j] == usize::MAX && cmat[i][j] != 0 {
                        comp_of[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }

        let mut factors = Vec::new();
        let mut assigned: Vec<usize> = Vec::new(); // sub-simple index per map row
        for comp in &comps {
            let (ty, order) = match_component(comp, &cmat)?;
            factors.push(Factor::Simple(ty));
            assigned.extend(order);
        }
        let torus_rank = self.rank - s;
        if torus_rank > 0 {
            factors.push(Factor::Torus(torus_rank));
        }
        let sub_spec = CartanSpec::new(factors)
            .expect("centralizer factors are valid");
        let sub_rs = RootSystem::new(sub_spec);

        // lattice map: coroot pairings of the ordered simple roots, then a
        // canonical integer basis of functionals vanishing on all of them
        let mut map_rows: Vec<Vec<i64>> = Vec::new();
        for &si in &assigned {
            let beta = &self.positive[sub_simple[si]];
            let row: Vec<i64> = (0..self.rank)
                .map(|k| {
                    let mut e = vec![0i64; self.rank];
                    e[k] = 1;
                    let num = 2 * scaled_ip(&self.gram_num, &e, &beta.fund);
                    let den = i128::from(beta.norm_scaled);
                    assert!(num % den == 0, "coroot pairing must be integral");
                    i64::try_from(num / den).expect("small pairing")
                })
                .collect();
            map_rows.push(row);
        }
        let root_rows: Vec<Vec<i64>> = sub_simple
            .iter()
            .map(|&i| self.positive[i].fund.clone())
            .collect();
        map_rows.extend(integer_kernel(&root_rows, self.rank));

        let map_q = QMat::from_int_rows(&map_rows);
        let map_inv = map_q
            .inverse()
            .expect("centralizer lattice map is invertible");
        let parent_positive_roots: Vec<Weight> = selected
            .iter()
            .map(|&i| Weight(self.positive[i].fund.clone()))
            .collect();

        Ok(CentralizerSubsystem {
            parent: Arc::clone(self),
            rs: sub_rs,
            map: map_rows,
            map_inv,
            parent_positive_roots,
        })
    }

    /// Weight multiplicities of the irreducible with the given highest
    /// weight, cached per root system.
    pub fn irreducible_support(self: &Arc<Self>, hw: &Weight) -> Result<Arc<BTreeMap<Weight, i64>>> {
        self.check_dominant(hw)?;
        if let Some(hit) = self.char_memo.lock().expect("memo lock").get(&hw.0) {
            return Ok(Arc::clone(hit));
        }
        // the weight system of a product group factors blockwise, so split
        // off every factor carrying a nonzero coordinate and convolve
        let active: Vec<&FactorBlock> = self
            .blocks
            .iter()
            .filter(|b| hw.0[b.offset..b.offset + b.rank].iter().any(|&c| c != 0))
            .collect();
        let support = if active.len() >= 2 {
            let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
            acc.insert(Weight::zero(self.rank), 1);
            for b in active {
                let mut part = vec![0i64; self.rank];
                part[b.offset..b.offset + b.rank]
                    .copy_from_slice(&hw.0[b.offset..b.offset + b.rank]);
                let factor = self.irreducible_support(&Weight(part))?;
                let mut next: BTreeMap<Weight, i64> = BTreeMap::new();
                for (w, c) in &acc {
                    for (v, d) in factor.iter() {
                        let m = c.checked_mul(*d).expect("multiplicity overflow");
                        *next.entry(w.add(v)).or_insert(0) += m;
                    }
                }
                acc = next;
            }
            Arc::new(acc)
        } else if active.len() == 1 && matches!(active[0].factor, Factor::Torus(_)) {
            Arc::new(BTreeMap::from([(hw.clone(), 1)]))
        } else {
            Arc::new(self.compute_irreducible_support(hw))
        };
        self.char_memo
            .lock()
            .expect("memo lock")
            .insert(hw.0.clone(), Arc::clone(&support));
        Ok(support)
    }

    pub fn clear_char_memo(&self) {
        self.char_memo.lock().expect("memo lock").clear();
    }

    /// Multiplicity recursion on the weight system.
    fn compute_irreducible_support(&self, hw: &Weight) -> BTreeMap<Weight, i64> {
        // enumerate all weights of the irrep together with each weight's
        // dominant conjugate; membership test: the dominant conjugate lies
        // under the highest weight in the root order
        let mut conj: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        conj.insert(hw.0.clone(), hw.0.clone());
        let mut queue = VecDeque::from([hw.0.clone()]);
        while let Some(v) = queue.pop_front() {
            for j in 0..self.simple_count() {
                let mut cand = v.clone();
                for (ci, ai) in cand.iter_mut().zip(&self.alpha_fund[j]) {
                    *ci -= ai;
                }
                if conj.contains_key(&cand) {
                    continue;
                }
                let dom = self.dominant_conjugate_raw(&cand);
                if self.under_in_root_order(&hw.0, &dom) {
                    conj.insert(cand.clone(), dom);
                    queue.push_back(cand);
                }
            }
        }

        // dominant members ordered by depth below the highest weight
        let mut doms: Vec<Vec<i64>> = conj
            .values()
            .cloned()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        doms.sort_by_key(|d| {
            let delta: Vec<i64> = hw.0.iter().zip(d).map(|(a, b)| a - b).collect();
            (self.scaled_height(&delta), d.clone())
        });

        let lr = hw.add(&self.rho);
        let lr_norm = scaled_ip(&self.gram_num, &lr.0, &lr.0);
        let mut dom_mult: HashMap<Vec<i64>, i64> = HashMap::new();
        for d in &doms {
            if d == &hw.0 {
                dom_mult.insert(d.clone(), 1);
                continue;
            }
            let mut num: i128 = 0;
            for r in &self.positive {
                let s_mu_a = scaled_ip(&self.gram_num, d, &r.fund);
                let s_aa = i128::from(r.norm_scaled);
                let mut k: i128 = 1;
                let mut v: Vec<i64> = d
                    .iter()
                    .zip(&r.fund)
                    .map(|(a, b)| a + b)
                    .collect();
                loop {
                    let Some(domv) = conj.get(&v) else {
                        break;
                    };
                    let m = i128::from(dom_mult[domv]);
                    num += m * (s_mu_a + k * s_aa);
                    k += 1;
                    for (vi, bi) in v.iter_mut().zip(&r.fund) {
                        *vi += bi;
                    }
                }
            }
            let mr = {
                let mut v = d.clone();
                for (vi, ri) in v.iter_mut().zip(&self.rho.0) {
                    *vi += ri;
                }
                v
            };
            let denom = lr_norm - scaled_ip(&self.gram_num, &mr, &mr);
            assert!(denom > 0, "recursion denominator must be positive");
            assert!(
                (2 * num) % denom == 0,
                "multiplicity recursion must divide exactly"
            );
            let m = 2 * num / denom;
            assert!(m > 0, "weights under the highest weight have multiplicity >= 1");
            dom_mult.insert(d.clone(), i64::try_from(m).expect("multiplicity fits i64"));
        }

        let mut support = BTreeMap::new();
        for (w, d) in conj {
            support.insert(Weight(w), dom_mult[&d]);
        }
        support
    }

    /// True when high - low is a nonnegative integer combination of simple
    /// roots (and equal on torus coordinates).
    fn under_in_root_order(&self, high: &[i64], low: &[i64]) -> bool {
        let delta: Vec<i64> = high.iter().zip(low).map(|(a, b)| a - b).collect();
        for b in &self.blocks {
            match b.factor {
                Factor::Torus(_) => {
                    if delta[b.offset..b.offset + b.rank].iter().any(|&x| x != 0) {
                        return false;
                    }
                }
                Factor::Simple(_) => {
                    // coordinates over the simple roots: delta * ainv
                    for j in 0..b.rank {
                        let mut c: i128 = 0;
                        for i in 0..b.rank {
                            c += i128::from(delta[b.offset + i])
                                * i128::from(b.ainv_num[i][j]);
                        }
                        if c < 0 || c % i128::from(b.ainv_den) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Total height of a root-lattice vector, scaled to an integer.
    fn scaled_height(&self, delta: &[i64]) -> i128 {
        let mut total: i128 = 0;
        let mut scale: i128 = 1;
        for b in &self.blocks {
            if matches!(b.factor, Factor::Simple(_)) {
                scale *= i128::from(b.ainv_den);
            }
        }
        for b in &self.blocks {
            if let Factor::Simple(_) = b.factor {
                let fscale = scale / i128::from(b.ainv_den);
                for j in 0..b.rank {
                    for i in 0..b.rank {
                        total += i128::from(delta[b.offset + i])
                            * i128::from(b.ainv_num[i][j])
                            * fscale;
                    }
                }
            }
        }
        total
    }

    /// Height of a weight over the simple roots (used for subtraction order);
    /// exact up to a positive overall scale.
    pub(crate) fn height_key(&self, w: &Weight) -> i128 {
        self.scaled_height(&w.0)
    }
}

fn scaled_ip(gram: &[Vec<i64>], a: &[i64], b: &[i64]) -> i128 {
    let mut acc: i128 = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let row = &gram[i];
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                let g = row[j];
                if g != 0 {
                    acc += i128::from(ai) * i128::from(g) * i128::from(bj);
                }
            }
        }
    }
    acc
}

/// Root subsystem vanishing on a Cartan subspace, with a lattice map from
/// parent weights into the subsystem's coordinates.
pub struct CentralizerSubsystem {
    pub parent: Arc<RootSystem>,
    pub rs: Arc<RootSystem>,
    /// Integer matrix: parent weight coordinates -> subsystem coordinates.
    pub map: Vec<Vec<i64>>,
    map_inv: QMat,
    /// The subsystem's positive roots in parent coordinates.
    pub parent_positive_roots: Vec<Weight>,
}

impl CentralizerSubsystem {
    pub fn to_sub(&self, w: &Weight) -> Weight {
        Weight(
            self.map
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Inverse of `to_sub`; exact on weights coming from the parent lattice.
    pub fn to_parent(&self, w: &Weight) -> Result<Weight> {
        let x: Vec<Rat> = w.0.iter().map(|&c| Rat::from_integer(c.into())).collect();
        let back = self.map_inv.matvec(&x);
        let mut out = Vec::with_capacity(back.len());
        for v in back {
            if !v.denom().is_one() {
                return Err(Error::InvalidInput(format!(
                    "{w} is not in the image of the parent weight lattice"
                )));
            }
            out.push(v.to_integer().to_i64().expect("coordinate fits i64"));
        }
        Ok(Weight(out))
    }
}

/// Matches a connected component of a simple system against the type
/// templates; returns the type and the component members listed in template
/// order.  Candidates are tried in a fixed order, so the answer is canonical.
fn match_component(comp: &[usize], cmat: &[Vec<i64>]) -> Result<(SimpleType, Vec<usize>)> {
    let n = comp.len();
    let mut candidates: Vec<SimpleType> = vec![SimpleType::A(n)];
    if n >= 2 {
        candidates.push(SimpleType::B(n));
        candidates.push(SimpleType::C(n));
    }
    if n >= 4 {
        candidates.push(SimpleType::D(n));
    }
    if (6..=8).contains(&n) {
        candidates.push(SimpleType::E(n));
    }
    if n == 4 {
        candidates.push(SimpleType::F4);
    }
    if n == 2 {
        candidates.push(SimpleType::G2);
    }
    for ty in candidates {
        let tpl = cartan_matrix(ty);
        if let Some(order) = assign(comp, cmat, &tpl) {
            return Ok((ty, order));
        }
    }
    Err(Error::InvalidInput(
        "root subsystem does not match any simple type".into(),
    ))
}

fn assign(comp: &[usize], cmat: &[Vec<i64>], tpl: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = comp.len();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        comp: &[usize],
        cmat: &[Vec<i64>],
        tpl: &[Vec<i64>],
        order: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let pos = order.len();
        if pos == comp.len() {
            return true;
        }
        for (ci, &node) in comp.iter().enumerate() {
            if used[ci] {
                continue;
            }
            let ok = order.iter().enumerate().all(|(p, &prev)| {
                cmat[prev][node] == tpl[p][pos] && cmat[node][prev] == tpl[pos][p]
            });
            if ok {
                used[ci] = true;
                order.push(node);
                if rec(comp, cmat, tpl, order, used) {
                    return true;
                }
                order.pop();
                used[ci] = false;
            }
        }
        false
    }
    if rec(comp, cmat, tpl, &mut order, &mut used) {
        Some(order)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_i;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_str_spec(s).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn positive_root_counts_match_classical_tables() {
        let expect = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("T2", 0),
            ("A2xA1", 4),
        ];
        for (s, n) in expect {
            assert_eq!(rs(s).positive_roots().len(), n, "{s}");
        }
    }

    #[test]
    fn weyl_orders_match_classical_tables() {
        let expect = [
            ("A1", 2u64),
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
            ("E6", 51840),
            ("A2xA2", 36),
            ("T3", 1),
        ];
        for (s, n) in expect {
            assert_eq!(rs(s).weyl_order(), &BigInt::from(n), "{s}");
        }
    }

    #[test]
    fn weyl_order_counted_by_orbit_of_rho() {
        for s in ["A2", "B2", "G2", "A1xA1"] {
            let r = rs(s);
            let orbit = r.weyl_orbit(r.rho()).unwrap();
            assert_eq!(BigInt::from(orbit.len()), *r.weyl_order(), "{s}");
            let elems = r.weyl_elements().unwrap();
            assert_eq!(BigInt::from(elems.len()), *r.weyl_order(), "{s}");
        }
    }

    #[test]
    fn cartan_integers_reproduce_the_matrix() {
        for s in ["A2", "B2", "C3", "G2", "F4", "D4"] {
            let r = rs(s);
            let simples = r.simple_roots();
            for (i, si) in simples.iter().enumerate() {
                for (j, sj) in simples.iter().enumerate() {
                    let num = r.inner_product(si, sj) * rat_i(2);
                    let den = r.inner_product(sj, sj);
                    let c = num / den;
                    // the Cartan integer is the i-th fundamental coordinate of
                    // alpha_i paired against coroot j
                    assert_eq!(c, rat_i(si.0[r.simple_pos[j]]), "{s} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn long_roots_have_squared_length_two() {
        for s in ["A2", "B2", "G2", "F4", "C3"] {
            let r = rs(s);
            let max = r
                .positive_roots()
                .iter()
                .map(|p| r.inner_product(&Weight(p.fund.clone()), &Weight(p.fund.clone())))
                .max()
                .unwrap();
            assert_eq!(max, rat_i(2), "{s}");
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        let r = rs("G2xB2xT1");
        for (j, &p) in r.simple_pos.iter().enumerate() {
            assert_eq!(r.rho().0[p], 1, "coordinate {j}");
        }
    }

    #[test]
    fn make_dominant_examples() {
        let a2 = rs("A2");
        let d = a2.make_dominant(&w(&[-1, 2]), false).unwrap();
        assert_eq!(d.weight, w(&[1, 1]));
        assert_eq!(d.parity, -1);
        assert!(!d.singular);
        // applying the recorded word to the input reproduces the output
        assert_eq!(a2.apply_word(&d.word, &w(&[-1, 2])), w(&[1, 1]));

        let a1 = rs("A1");
        let d = a1.make_dominant(&w(&[-1]), true).unwrap();
        assert!(d.singular);

        let t = rs("T2");
        let d = t.make_dominant(&w(&[-3, 5]), false).unwrap();
        assert_eq!(d.weight, w(&[-3, 5]));
        assert_eq!(d.parity, 1);
        assert!(!d.singular);
    }

    #[test]
    fn weyl_orbit_sizes() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit(&w(&[1, 0])).unwrap().len(), 3);
        assert_eq!(a2.weyl_orbit(&w(&[1, 1])).unwrap().len(), 6);
        assert_eq!(a2.weyl_orbit(&w(&[0, 0])).unwrap().len(), 1);
    }

    #[test]
    fn weyl_dimension_small_cases() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dimension(&w(&[1, 1])).unwrap(), BigInt::from(8));
        assert_eq!(a2.weyl_dimension(&w(&[1, 0])).unwrap(), BigInt::from(3));
        let g2 = rs("G2");
        assert_eq!(g2.weyl_dimension(&w(&[1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(g2.weyl_dimension(&w(&[0, 1])).unwrap(), BigInt::from(14));
        let b2 = rs("B2");
        assert_eq!(b2.weyl_dimension(&w(&[1, 0])).unwrap(), BigInt::from(5));
        assert_eq!(b2.weyl_dimension(&w(&[0, 1])).unwrap(), BigInt::from(4));
        // adjoint dimensions of the exceptional family
        assert_eq!(rs("F4").weyl_dimension(&w(&[1, 0, 0, 0])).unwrap(), BigInt::from(52));
        assert_eq!(
            rs("E6").weyl_dimension(&w(&[1, 0, 0, 0, 0, 0])).unwrap(),
            BigInt::from(27)
        );
        assert_eq!(
            rs("E7").weyl_dimension(&w(&[0, 0, 0, 0, 0, 0, 1])).unwrap(),
            BigInt::from(56)
        );
        assert_eq!(
            rs("E8").weyl_dimension(&w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            BigInt::from(248)
        );
        // torus characters are one-dimensional
        assert_eq!(rs("T2").weyl_dimension(&w(&[3, -4])).unwrap(), BigInt::one());
        assert!(a2.weyl_dimension(&w(&[-1, 0])).is_err());
    }

    #[test]
    fn dual_weights() {
        let a2 = rs("A2");
        assert_eq!(a2.dual_weight(&w(&[1, 0])).unwrap(), w(&[0, 1]));
        assert_eq!(a2.dual_weight(&w(&[1, 1])).unwrap(), w(&[1, 1]));
        let b2 = rs("B2");
        assert_eq!(b2.dual_weight(&w(&[1, 0])).unwrap(), w(&[1, 0]));
        let t = rs("T1");
        assert_eq!(t.dual_weight(&w(&[2])).unwrap(), w(&[-2]));
    }

    #[test]
    fn longest_element_sends_dominant_to_antidominant() {
        for s in ["A2", "B2", "G2", "A1xA1"] {
            let r = rs(s);
            let w0 = r.longest_element();
            let img = r.apply_word(&w0, r.rho());
            assert_eq!(img, r.rho().neg(), "{s}");
        }
        assert_eq!(rs("A2").longest_element().0.len(), 3);
    }

    #[test]
    fn centralizer_of_first_fundamental_coweight_in_a2() {
        let a2 = rs("A2");
        let sub = a2.centralizer(&[vec![rat_i(1), rat_i(0)]]).unwrap();
        assert_eq!(sub.rs.spec().to_string(), "A1xT1");
        assert_eq!(sub.parent_positive_roots.len(), 1);
        // the lattice map is invertible on parent weights
        for v in [[1i64, 0], [0, 1], [2, -1], [-3, 5]] {
            let wv = w(&v);
            let back = sub.to_parent(&sub.to_sub(&wv)).unwrap();
            assert_eq!(back, wv);
        }
        // the subsystem root maps onto the abstract A1 root
        let alpha2 = Weight(a2.positive_roots()[1].fund.clone());
        assert_eq!(a2.positive_roots()[1].height, 1);
        let mapped = sub.to_sub(&alpha2);
        assert_eq!(mapped.0[0].abs(), 2);
    }

    #[test]
    fn centralizer_of_zero_subspace_is_whole_system() {
        for s in ["A2", "B2", "G2", "A2xT1"] {
            let r = rs(s);
            let sub = r.centralizer(&[]).unwrap();
            assert_eq!(sub.rs.spec(), r.spec(), "{s}");
            assert_eq!(
                sub.parent_positive_roots.len(),
                r.positive_roots().len(),
                "{s}"
            );
        }
    }

    #[test]
    fn centralizer_of_full_cartan_is_torus() {
        let a1 = rs("A1");
        let sub = a1.centralizer(&[vec![rat_i(1)]]).unwrap();
        assert_eq!(sub.rs.spec().to_string(), "T1");
        assert!(sub.parent_positive_roots.is_empty());
    }

    #[test]
    fn centralizer_inside_b2() {
        let b2 = rs("B2");
        // the long simple root is orthogonal to the second fundamental coweight
        let sub = b2.centralizer(&[vec![rat_i(0), rat_i(1)]]).unwrap();
        assert_eq!(sub.rs.spec().to_string(), "A1xT1");
    }

    #[test]
    fn irreducible_support_adjoint_a2() {
        let a2 = rs("A2");
        let sup = a2.irreducible_support(&w(&[1, 1])).unwrap();
        assert_eq!(sup.get(&w(&[0, 0])), Some(&2));
        assert_eq!(sup.get(&w(&[1, 1])), Some(&1));
        let total: i64 = sup.values().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn irreducible_support_matches_dimension() {
        for (s, hw) in [
            ("A1", vec![7]),
            ("A2", vec![2, 3]),
            ("B2", vec![1, 2]),
            ("G2", vec![1, 1]),
            ("C3", vec![1, 0, 1]),
            ("A1xA1", vec![2, 3]),
            ("A2xT1", vec![1, 1, -4]),
        ] {
            let r = rs(s);
            let hwv = Weight(hw);
            let sup = r.irreducible_support(&hwv).unwrap();
            let total: i64 = sup.values().sum();
            assert_eq!(
                BigInt::from(total),
                r.weyl_dimension(&hwv).unwrap(),
                "{s} {hwv}"
            );
        }
    }

    #[test]
    fn word_application_and_parity() {
        let a2 = rs("A2");
        let word = WeylWord(vec![0, 1]);
        // word[0] acts last: s0(s1([1,0]))
        let step1 = a2.simple_reflection(1, &w(&[1, 0]));
        let expect = a2.simple_reflection(0, &step1);
        assert_eq!(a2.apply_word(&word, &w(&[1, 0])), expect);
        assert_eq!(word.parity(), 1);
        assert_eq!(WeylWord(vec![0]).parity(), -1);
        // inverse composes to the identity
        let winv = word.inverse();
        let roundtrip = a2.apply_word(&winv, &a2.apply_word(&word, &w(&[2, -1])));
        assert_eq!(roundtrip, w(&[2, -1]));
    }

    #[test]
    fn coweight_action_is_dual_to_weight_action() {
        let b2 = rs("B2");
        let word = WeylWord(vec![1, 0, 1]);
        let lam = w(&[2, -1]);
        let x = vec![rat_i(3), rat_i(-2)];
        // <w(lam), w(x)> = <lam, x>
        let wl = b2.apply_word(&word, &lam);
        let wx = b2.apply_word_coweight(&word, &x);
        assert_eq!(b2.pair_coweight(&wl, &wx), b2.pair_coweight(&lam, &x));
    }
}

//! Rational polyhedral cones with exact dual descriptions.
//!
//! A cone carries both a generator description (extreme rays plus a lineality
//! basis) and a facet description (inequalities plus equations valid on the
//! whole cone).  Conversion in either direction runs the incremental double
//! description method; generator input additionally round-trips through the
//! facet form so redundant input generators are dropped.  All output data is
//! primitive integer vectors in a fixed sorted order, so equal cones have
//! equal representations.

use crate::branching::BranchingTable;
use crate::error::Error;
use crate::linalg::{clear_denominators, hermite_rows, integer_kernel, primitive, QMat, Rat};
use crate::roots::Weight;
use crate::Result;
use num::{One, Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    /// Extreme rays modulo lineality; primitive, sorted.
    rays: Vec<Vec<i64>>,
    /// Lineality space, canonical echelon basis.
    lineality: Vec<Vec<i64>>,
    /// Facet inequalities a with a.x >= 0 on the cone; primitive, sorted.
    facets: Vec<Vec<i64>>,
    /// Equations valid on the cone, canonical echelon basis.
    equations: Vec<Vec<i64>>,
}

struct RayRec {
    v: Vec<Rat>,
    tight: BTreeSet<usize>,
}

fn dot(a: &[i64], x: &[Rat]) -> Rat {
    a.iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .map(|(c, x)| Rat::from_integer((*c).into()) * x)
        .sum()
}

/// Incremental double description: intersects the full space with the given
/// half spaces, returning extreme rays and a lineality basis.
fn double_description(dim: usize, ineqs: &[Vec<i64>]) -> (Vec<RayRec>, Vec<Vec<Rat>>) {
    let mut lin: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v
        })
        .collect();
    let mut rays: Vec<RayRec> = Vec::new();
    for (idx, a) in ineqs.iter().enumerate() {
        let hit = lin.iter().position(|l| !dot(a, l).is_zero());
        if let Some(k) = hit {
            // the constraint cuts the lineality: one direction becomes a ray
            let mut l0 = lin.remove(k);
            let mut p0 = dot(a, &l0);
            if p0.is_negative() {
                for c in l0.iter_mut() {
                    *c = -c.clone();
                }
                p0 = -p0;
            }
            for l in lin.iter_mut() {
                let c = dot(a, l) / &p0;
                if !c.is_zero() {
                    for (li, wi) in l.iter_mut().zip(&l0) {
                        *li -= &c * wi;
                    }
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, &r.v) / &p0;
                if !c.is_zero() {
                    for (ri, wi) in r.v.iter_mut().zip(&l0) {
                        *ri -= &c * wi;
                    }
                }
                r.tight.insert(idx);
            }
            rays.push(RayRec { v: l0, tight: (0..idx).collect() });
        } else {
            let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
            let plus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let minus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            if minus.is_empty() {
                for (r, val) in rays.iter_mut().zip(&vals) {
                    if val.is_zero() {
                        r.tight.insert(idx);
                    }
                }
                continue;
            }
            let mut next: Vec<RayRec> = Vec::new();
            for (i, r) in rays.iter().enumerate() {
                if !vals[i].is_negative() {
                    let mut tight = r.tight.clone();
                    if vals[i].is_zero() {
                        tight.insert(idx);
                    }
                    next.push(RayRec { v: r.v.clone(), tight });
                }
            }
            for &p in &plus {
                for &m in &minus {
                    let common: BTreeSet<usize> =
                        rays[p].tight.intersection(&rays[m].tight).copied().collect();
                    // adjacency: no third extreme ray is tight on the whole
                    // common set
                    let blocked = rays.iter().enumerate().any(|(i, r)| {
                        i != p && i != m && common.iter().all(|c| r.tight.contains(c))
                    });
                    if blocked {
                        continue;
                    }
                    let mut v = vec![Rat::zero(); dim];
                    for (vi, (pv, mv)) in v.iter_mut().zip(rays[p].v.iter().zip(&rays[m].v)) {
                        *vi = &vals[p] * mv - &vals[m] * pv;
                    }
                    let mut tight = common;
                    tight.insert(idx);
                    next.push(RayRec { v, tight });
                }
            }
            rays = next;
        }
    }
    (rays, lin)
}

fn canonical_rays(rays: Vec<RayRec>) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = rays
        .into_iter()
        .map(|r| primitive(&clear_denominators(&r.v)))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn canonical_span(rows: Vec<Vec<Rat>>) -> Vec<Vec<i64>> {
    let int_rows: Vec<Vec<i64>> = rows.iter().map(|r| clear_denominators(r)).collect();
    hermite_rows(int_rows)
}

/// Orthogonal projection killing the row space of `eqs` (standard dot).
fn project_off(eqs: &[Vec<i64>], a: &[i64]) -> Vec<Rat> {
    let aq: Vec<Rat> = a.iter().map(|&c| Rat::from_integer(c.into())).collect();
    if eqs.is_empty() {
        return aq;
    }
    let k = eqs.len();
    let mut gram = QMat::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = Rat::from_integer(
                eqs[i]
                    .iter()
                    .zip(&eqs[j])
                    .map(|(x, y)| i128::from(*x) * i128::from(*y))
                    .sum::<i128>()
                    .into(),
            );
        }
    }
    let rhs: Vec<Rat> = eqs.iter().map(|e| dot(e, &aq)).collect();
    let coef = gram
        .inverse()
        .expect("independent equation rows")
        .matvec(&rhs);
    let mut out = aq;
    for (c, e) in coef.iter().zip(eqs) {
        for (oi, &ei) in out.iter_mut().zip(e) {
            if ei != 0 {
                *oi -= c * Rat::from_integer(ei.into());
            }
        }
    }
    out
}

impl Cone {
    /// Cone spanned by nonnegative combinations of `rays` and arbitrary
    /// combinations of `lineality`.
    pub fn from_generators(
        dim: usize,
        rays: &[Vec<i64>],
        lineality: &[Vec<i64>],
    ) -> Result<Cone> {
        for v in rays.iter().chain(lineality) {
            if v.len() != dim {
                return Err(Error::RankMismatch { expected: dim, got: v.len() });
            }
        }
        let mut all_rows: Vec<Vec<i64>> = rays.to_vec();
        all_rows.extend(lineality.iter().cloned());
        let equations = integer_kernel(&all_rows, dim);

        // facets are the extreme rays of the polar cone
        let mut polar_ineqs: Vec<Vec<i64>> = rays
            .iter()
            .filter(|r| r.iter().any(|&c| c != 0))
            .cloned()
            .collect();
        for l in lineality {
            polar_ineqs.push(l.clone());
            polar_ineqs.push(l.iter().map(|&c| -c).collect());
        }
        let (polar_rays, _) = double_description(dim, &polar_ineqs);
        let mut facets: Vec<Vec<i64>> = polar_rays
            .into_iter()
            .map(|r| primitive(&clear_denominators(&project_off(&equations, &clear_denominators(&r.v)))))
            .filter(|f| f.iter().any(|&c| c != 0))
            .collect();
        facets.sort();
        facets.dedup();

        // round-trip through the facet form for a minimal generator set
        Cone::from_facet_data(dim, facets, equations)
    }

    /// Cone of solutions of a.x >= 0 for the inequalities and a.x = 0 for
    /// the equations.
    pub fn from_inequalities(
        dim: usize,
        ineqs: &[Vec<i64>],
        eqs: &[Vec<i64>],
    ) -> Result<Cone> {
        for v in ineqs.iter().chain(eqs) {
            if v.len() != dim {
                return Err(Error::RankMismatch { expected: dim, got: v.len() });
            }
        }
        let mut rows = ineqs.to_vec();
        for e in eqs {
            rows.push(e.clone());
            rows.push(e.iter().map(|&c| -c).collect());
        }
        let (rays, lin) = double_description(dim, &rows);
        let rays = canonical_rays(rays);
        let lineality = canonical_span(lin);
        // recompute a minimal facet description from the generators
        let mut all_rows = rays.clone();
        all_rows.extend(lineality.iter().cloned());
        let equations = integer_kernel(&all_rows, dim);
        let mut polar_ineqs: Vec<Vec<i64>> = rays
            .iter()
            .filter(|r| r.iter().any(|&c| c != 0))
            .cloned()
            .collect();
        for l in &lineality {
            polar_ineqs.push(l.clone());
            polar_ineqs.push(l.iter().map(|&c| -c).collect());
        }
        let (polar_rays, _) = double_description(dim, &polar_ineqs);
        let mut facets: Vec<Vec<i64>> = polar_rays
            .into_iter()
            .map(|r| primitive(&clear_denominators(&project_off(&equations, &clear_denominators(&r.v)))))
            .filter(|f| f.iter().any(|&c| c != 0))
            .collect();
        facets.sort();
        facets.dedup();
        Ok(Cone { dim, rays, lineality, facets, equations })
    }

    fn from_facet_data(
        dim: usize,
        facets: Vec<Vec<i64>>,
        equations: Vec<Vec<i64>>,
    ) -> Result<Cone> {
        let mut rows = facets.clone();
        for e in &equations {
            rows.push(e.clone());
            rows.push(e.iter().map(|&c| -c).collect());
        }
        let (rays, lin) = double_description(dim, &rows);
        Ok(Cone {
            dim,
            rays: canonical_rays(rays),
            lineality: canonical_span(lin),
            facets,
            equations,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<i64>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    fn eval(a: &[i64], x: &[i64]) -> i128 {
        a.iter()
            .zip(x)
            .map(|(c, v)| i128::from(*c) * i128::from(*v))
            .sum()
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::RankMismatch { expected: self.dim, got: x.len() });
        }
        Ok(self.equations.iter().all(|e| Cone::eval(e, x) == 0)
            && self.facets.iter().all(|f| Cone::eval(f, x) >= 0))
    }

    /// Membership in the relative interior: inside the span and strictly on
    /// the positive side of every facet.
    pub fn contains_relative_interior(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::RankMismatch { expected: self.dim, got: x.len() });
        }
        Ok(self.equations.iter().all(|e| Cone::eval(e, x) == 0)
            && self.facets.iter().all(|f| Cone::eval(f, x) > 0))
    }

    /// Basis of the integer points of the linear span.
    pub fn span_lattice_basis(&self) -> Vec<Vec<i64>> {
        integer_kernel(&self.equations, self.dim)
    }
}

/// Support cone of a branching table: the cone generated by all weight pairs
/// with nonzero multiplicity, together with the lattice those pairs generate.
#[derive(Debug, Clone)]
pub struct SupportCone {
    pub cone: Cone,
    /// Canonical echelon basis of the lattice generated by the support.
    pub lattice: Vec<Vec<i64>>,
}

impl SupportCone {
    pub fn from_points(dim: usize, points: &[Vec<i64>]) -> Result<SupportCone> {
        if points.is_empty() {
            return Err(Error::EmptySupport("no points to generate a cone".into()));
        }
        let cone = Cone::from_generators(dim, points, &[])?;
        Ok(SupportCone { cone, lattice: hermite_rows(points.to_vec()) })
    }

    pub fn from_table(table: &BranchingTable) -> Result<SupportCone> {
        let points: Vec<Vec<i64>> = table
            .entries
            .iter()
            .filter(|(_, m)| **m != 0)
            .map(|((b, s), _)| [b.0.as_slice(), s.0.as_slice()].concat())
            .collect();
        if points.is_empty() {
            return Err(Error::EmptySupport("branching table has no nonzero entries".into()));
        }
        SupportCone::from_points(points[0].len(), &points)
    }

    /// True when x lies in the lattice generated by the support points.
    pub fn in_lattice(&self, x: &[i64]) -> bool {
        // solve c * H = x over the rationals, then require integrality
        let rows = self.lattice.len();
        if rows == 0 {
            return x.iter().all(|&c| c == 0);
        }
        let dim = self.lattice[0].len();
        let mut ht = QMat::zero(dim, rows);
        for (i, r) in self.lattice.iter().enumerate() {
            for (j, &c) in r.iter().enumerate() {
                ht[(j, i)] = Rat::from_integer(c.into());
            }
        }
        let rhs: Vec<Rat> = x.iter().map(|&c| Rat::from_integer(c.into())).collect();
        match ht.solve(&rhs) {
            None => false,
            Some(c) => c.iter().all(|v| v.denom().is_one()),
        }
    }

    pub fn contains_pair(&self, big: &Weight, small: &Weight) -> Result<bool> {
        let x = [big.0.as_slice(), small.0.as_slice()].concat();
        Ok(self.cone.contains(&x)? && self.in_lattice(&x))
    }

    /// Canonical sorted primitive vectors; lineality and equation data only
    /// appear when the cone is not pointed and full-dimensional.
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("facets".into(), serde_json::json!(self.cone.facets()));
        obj.insert("rays".into(), serde_json::json!(self.cone.rays()));
        obj.insert("lattice".into(), serde_json::json!(self.lattice));
        if !self.cone.lineality().is_empty() {
            obj.insert("lineality".into(), serde_json::json!(self.cone.lineality()));
        }
        if !self.cone.equations().is_empty() {
            obj.insert("equations".into(), serde_json::json!(self.cone.equations()));
        }
        serde_json::Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::Embedding;

    #[test]
    fn triangle_inequalities_round_trip() {
        let ineqs = vec![vec![1, 1, -1], vec![1, -1, 1], vec![-1, 1, 1]];
        let cone = Cone::from_inequalities(3, &ineqs, &[]).unwrap();
        assert_eq!(cone.rays(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert!(cone.lineality().is_empty());
        assert!(cone.equations().is_empty());
        let mut sorted = ineqs.clone();
        sorted.sort();
        assert_eq!(cone.facets(), sorted.as_slice());
        // and back from the generators
        let back = Cone::from_generators(3, cone.rays(), &[]).unwrap();
        assert_eq!(&back, &cone);
    }

    #[test]
    fn half_plane_keeps_a_lineality_direction() {
        let cone = Cone::from_inequalities(2, &[vec![1, 0]], &[]).unwrap();
        assert_eq!(cone.rays(), &[vec![1, 0]]);
        assert_eq!(cone.lineality(), &[vec![0, 1]]);
        assert_eq!(cone.facets(), &[vec![1, 0]]);
        assert!(cone.equations().is_empty());
        assert_eq!(cone.span_dim(), 2);
    }

    #[test]
    fn opposite_inequalities_collapse_to_a_subspace() {
        let cone = Cone::from_inequalities(2, &[vec![1, -1], vec![-1, 1]], &[]).unwrap();
        assert!(cone.rays().is_empty());
        assert_eq!(cone.lineality(), &[vec![1, 1]]);
        assert_eq!(cone.equations(), &[vec![1, -1]]);
        assert!(cone.facets().is_empty());
        assert!(cone.contains(&[2, 2]).unwrap());
        assert!(!cone.contains(&[1, 0]).unwrap());
    }

    #[test]
    fn generators_with_lineality_produce_equations() {
        let cone =
            Cone::from_generators(3, &[vec![1, 0, 0]], &[vec![0, 1, 0]]).unwrap();
        assert_eq!(cone.equations(), &[vec![0, 0, 1]]);
        assert_eq!(cone.facets(), &[vec![1, 0, 0]]);
        assert_eq!(cone.rays(), &[vec![1, 0, 0]]);
        assert_eq!(cone.lineality(), &[vec![0, 1, 0]]);
        assert_eq!(cone.span_lattice_basis(), vec![vec![1, 0, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 3]];
        let cone = Cone::from_generators(2, &rays, &[]).unwrap();
        assert_eq!(cone.rays(), &[vec![0, 1], vec![1, 0]]);
        let full = Cone::from_generators(2, &[vec![1, 0], vec![-1, 1], vec![0, -1]], &[]).unwrap();
        // generators positively spanning the plane leave no facets
        assert!(full.facets().is_empty());
        assert_eq!(full.lineality().len(), 2);
        assert!(full.rays().is_empty());
    }

    #[test]
    fn membership_semantics() {
        let cone = Cone::from_inequalities(2, &[vec![1, 0], vec![0, 1]], &[]).unwrap();
        assert!(cone.contains(&[3, 0]).unwrap());
        assert!(!cone.contains_relative_interior(&[3, 0]).unwrap());
        assert!(cone.contains_relative_interior(&[1, 1]).unwrap());
        assert!(!cone.contains(&[-1, 2]).unwrap());
        assert!(cone.contains(&[0, 0]).unwrap());
        assert!(cone.contains(&[0, 0, 0]).is_err());
        // a point off the span of a lower-dimensional cone is outside
        let flat = Cone::from_generators(2, &[vec![1, 0]], &[]).unwrap();
        assert!(!flat.contains(&[1, 1]).unwrap());
        assert!(flat.contains_relative_interior(&[2, 0]).unwrap());
    }

    #[test]
    fn equations_input_forces_span_reduction() {
        let cone = Cone::from_inequalities(3, &[vec![1, 0, 0]], &[vec![0, 1, -1]]).unwrap();
        assert_eq!(cone.equations(), &[vec![0, 1, -1]]);
        assert_eq!(cone.rays(), &[vec![1, 0, 0]]);
        assert_eq!(cone.lineality(), &[vec![0, 1, 1]]);
        assert!(cone.contains(&[5, 2, 2]).unwrap());
        assert!(!cone.contains(&[5, 2, 1]).unwrap());
    }

    #[test]
    fn support_cone_of_rank_one_tensor_products() {
        let emb = Embedding::diagonal(&"A1".parse().unwrap()).unwrap();
        let table = crate::branching::BranchingTable::compute(&emb, 3, true).unwrap();
        let sc = SupportCone::from_table(&table).unwrap();
        // the triangle inequalities of the side lengths
        assert_eq!(
            sc.cone.facets(),
            &[vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]]
        );
        assert!(sc.cone.equations().is_empty());
        // the support lattice is the even-coordinate-sum sublattice
        assert_eq!(sc.lattice, vec![vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]);
        assert!(sc.in_lattice(&[1, 1, 0]));
        assert!(!sc.in_lattice(&[1, 0, 0]));
        // in the cone but in the wrong lattice coset
        let w = |v: &[i64]| Weight(v.to_vec());
        assert!(!sc.contains_pair(&w(&[1, 1]), &w(&[1])).unwrap());
        assert!(sc.contains_pair(&w(&[1, 1]), &w(&[2])).unwrap());
        assert!(!sc.contains_pair(&w(&[1, 1]), &w(&[4])).unwrap());
    }

    #[test]
    fn zero_point_alone_gives_the_origin_cone() {
        let sc = SupportCone::from_points(2, &[vec![0, 0]]).unwrap();
        assert!(sc.cone.rays().is_empty());
        assert_eq!(sc.cone.span_dim(), 0);
        assert!(sc.cone.contains(&[0, 0]).unwrap());
        assert!(!sc.cone.contains(&[1, 0]).unwrap());
        assert!(sc.lattice.is_empty());
        assert!(sc.in_lattice(&[0, 0]));
        assert!(SupportCone::from_points(2, &[]).is_err());
    }
}

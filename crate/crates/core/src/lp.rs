//! Exact rational linear programming, limited to what the library needs:
//! feasibility of {x >= 0 : Ax = b} with a certificate either way.
//!
//! Phase-1 simplex over `BigRational` with Bland's rule, so it terminates on
//! every input.  Problem sizes here are tiny (tens of rows and columns).

use crate::linalg::Rat;
use num::{One, Signed, Zero};

/// Outcome of a feasibility run.
#[derive(Debug, Clone)]
pub enum LpOutcome {
    /// A nonnegative solution x with Ax = b.
    Feasible(Vec<Rat>),
    /// A Farkas vector y with yA <= 0 componentwise and y.b > 0,
    /// proving that no nonnegative solution exists.
    Infeasible(Vec<Rat>),
}

/// Decides whether {x >= 0 : Ax = b} is nonempty.  `a` is row major,
/// `b.len() == a.len()`.
pub fn feasibility(a: &[Vec<Rat>], b: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    assert_eq!(b.len(), m);
    // sign-normalize so rhs >= 0, remembering flips for the certificate
    let mut flip = vec![false; m];
    // tableau: n original columns, m artificial columns, rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        flip[i] = neg;
        let mut row: Vec<Rat> = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if neg { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if neg { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs for "minimize sum of artificials"
    let cost = |j: usize| -> Rat {
        if j >= n {
            Rat::one()
        } else {
            Rat::zero()
        }
    };
    let mut z: Vec<Rat> = (0..width)
        .map(|j| {
            let mut s = if j < width - 1 { cost(j) } else { Rat::zero() };
            for row in t.iter() {
                s -= &row[j];
            }
            s
        })
        .collect();

    loop {
        // Bland: entering = lowest-index column with negative reduced cost
        let Some(enter) = (0..n + m).find(|&j| z[j].is_negative()) else {
            break;
        };
        // ratio test; Bland tie-break on the basic variable index
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &t[l][width - 1] / &t[l][enter];
                        let cand = &t[i][width - 1] / &t[i][enter];
                        cand < cur || (cand == cur && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // phase-1 objective is bounded below by 0; unbounded cannot occur
            unreachable!("phase-1 simplex column with no positive entry");
        };
        // pivot on (l, enter)
        let piv = t[l][enter].clone();
        for x in t[l].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != l && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let d = &t[l][j] * &f;
                    t[i][j] -= d;
                }
            }
        }
        if !z[enter].is_zero() {
            let f = z[enter].clone();
            for j in 0..width {
                let d = &t[l][j] * &f;
                z[j] -= d;
            }
        }
        basis[l] = enter;
    }

    let objective: Rat = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| t[i][width - 1].clone())
        .fold(Rat::zero(), |acc, v| acc + v);
    if objective.is_zero() {
        let mut x = vec![Rat::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = t[i][width - 1].clone();
            }
        }
        LpOutcome::Feasible(x)
    } else {
        // y_i = sum over basic rows of cost * (B^-1)_{row,i}; the artificial
        // columns of the final tableau are exactly B^-1
        let mut y = vec![Rat::zero(); m];
        for i in 0..m {
            let mut s = Rat::zero();
            for k in 0..m {
                if basis[k] >= n {
                    s += &t[k][n + i];
                }
            }
            y[i] = if flip[i] { -s } else { s };
        }
        LpOutcome::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_i};

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter()
            .map(|r| r.iter().map(|&x| rat_i(x)).collect())
            .collect()
    }

    #[test]
    fn zero_in_hull_of_opposite_points() {
        // c1*1 + c2*(-1) = 0, c1 + c2 = 1
        let a = rows(&[&[1, -1], &[1, 1]]);
        match feasibility(&a, &[rat_i(0), rat_i(1)]) {
            LpOutcome::Feasible(x) => {
                assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
            }
            LpOutcome::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn zero_not_in_hull_of_positive_points() {
        // c1*1 + c2*2 = 0, c1 + c2 = 1 has no nonnegative solution
        let a = rows(&[&[1, 2], &[1, 1]]);
        match feasibility(&a, &[rat_i(0), rat_i(1)]) {
            LpOutcome::Feasible(_) => panic!("expected infeasible"),
            LpOutcome::Infeasible(y) => {
                // check the Farkas inequalities directly
                for j in 0..2 {
                    let v = &y[0] * &a[0][j] + &y[1] * &a[1][j];
                    assert!(v <= Rat::zero());
                }
                assert!(y[1].is_positive());
            }
        }
    }

    #[test]
    fn negative_rhs_is_handled() {
        let a = rows(&[&[1, 0], &[0, 1]]);
        match feasibility(&a, &[rat_i(-1), rat_i(2)]) {
            LpOutcome::Feasible(_) => panic!("x >= 0 cannot give -1"),
            LpOutcome::Infeasible(y) => {
                let yb = &y[0] * rat_i(-1) + &y[1] * rat_i(2);
                assert!(yb.is_positive());
            }
        }
    }
}

//! Smith normal form over Z, with both unimodular transforms and their
//! inverses tracked through the reduction.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A decomposition `U * source * V = D` with `U`, `V` unimodular and `D`
/// diagonal, the nonzero diagonal entries nonnegative and each dividing
/// the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub source: IntMatrix,
}

/// Smallest-nonzero-magnitude pivot in the trailing submatrix, to keep
/// coefficient growth in check.
fn find_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            let mag = e.abs();
            match &best {
                Some((_, _, m)) if *m <= mag => {}
                _ => best = Some((i, j, mag)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // row k += c * row i  (on a and u), with the inverse column op on u_inv
    let row_add = |a: &mut IntMatrix,
                   u: &mut IntMatrix,
                   u_inv: &mut IntMatrix,
                   k: usize,
                   i: usize,
                   c: &BigInt| {
        for j in 0..a.cols() {
            let t = c * &a[(i, j)];
            a[(k, j)] += t;
        }
        for j in 0..u.cols() {
            let t = c * &u[(i, j)];
            u[(k, j)] += t;
        }
        for r in 0..u_inv.rows() {
            let t = c * &u_inv[(r, k)];
            u_inv[(r, i)] -= t;
        }
    };
    // col k += c * col j  (on a and v), with the inverse row op on v_inv
    let col_add = |a: &mut IntMatrix,
                   v: &mut IntMatrix,
                   v_inv: &mut IntMatrix,
                   k: usize,
                   j: usize,
                   c: &BigInt| {
        for i in 0..a.rows() {
            let t = c * &a[(i, j)];
            a[(i, k)] += t;
        }
        for i in 0..v.rows() {
            let t = c * &v[(i, j)];
            v[(i, k)] += t;
        }
        for cc in 0..v_inv.cols() {
            let t = c * &v_inv[(k, cc)];
            v_inv[(j, cc)] -= t;
        }
    };

    let t = rows.min(cols);
    for k in 0..t {
        'pivot: loop {
            let Some((pi, pj)) = find_pivot(&a, k) else {
                break 'pivot; // trailing submatrix is zero
            };
            if pi != k {
                a.swap_rows(k, pi);
                u.swap_rows(k, pi);
                u_inv.swap_cols(k, pi);
            }
            if pj != k {
                a.swap_cols(k, pj);
                v.swap_cols(k, pj);
                v_inv.swap_rows(k, pj);
            }
            // clear column k below the pivot, then row k to its right
            let mut clean = true;
            for i in k + 1..rows {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = -a[(i, k)].div_rem(&a[(k, k)]).0;
                if !q.is_zero() {
                    row_add(&mut a, &mut u, &mut u_inv, i, k, &q);
                }
                if !a[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = -a[(k, j)].div_rem(&a[(k, k)]).0;
                if !q.is_zero() {
                    col_add(&mut a, &mut v, &mut v_inv, j, k, &q);
                }
                if !a[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot; // a strictly smaller pivot now exists
            }
            // pivot must divide every remaining entry for the divisor chain
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !a[(i, j)].mod_floor(&a[(k, k)]).is_zero() {
                        row_add(&mut a, &mut u, &mut u_inv, k, i, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
    }
    // nonnegative diagonal
    for k in 0..t {
        if a[(k, k)].is_negative() {
            for j in 0..cols {
                let e = -a[(k, j)].clone();
                a[(k, j)] = e;
            }
            for j in 0..rows {
                let e = -u[(k, j)].clone();
                u[(k, j)] = e;
            }
            for i in 0..rows {
                let e = -u_inv[(i, k)].clone();
                u_inv[(i, k)] = e;
            }
        }
    }

    SmithDecomposition {
        u,
        d: a,
        v,
        u_inv,
        v_inv,
        source: m.clone(),
    }
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Rank of the source over Q.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// A basis for the kernel lattice `{x | source * x = 0}`, as columns.
    /// Kernels of integer matrices are saturated, so this is also a basis
    /// of a direct summand.
    pub fn kernel_basis(&self) -> IntMatrix {
        let cols = self.source.cols();
        let r = self.rank();
        let keep: Vec<usize> = (r..cols).collect();
        self.v.select(&(0..cols).collect::<Vec<_>>(), &keep)
    }

    /// A basis (as columns) for the saturation of the column span of the
    /// source inside its ambient `Z^rows`.
    pub fn column_saturation_basis(&self) -> IntMatrix {
        let rows = self.source.rows();
        let keep: Vec<usize> = (0..self.rank()).collect();
        self.u_inv.select(&(0..rows).collect::<Vec<_>>(), &keep)
    }

    /// Solve `source * X = rhs` over Z; `None` if no integral solution.
    pub fn solve(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(rhs.rows(), self.source.rows());
        let c = self.u.mul(rhs);
        let n = self.source.cols();
        let t = self.source.rows().min(n);
        let mut y = IntMatrix::zeros(n, rhs.cols());
        for j in 0..rhs.cols() {
            for i in 0..self.source.rows() {
                let ci = &c[(i, j)];
                if i < t && !self.d[(i, i)].is_zero() {
                    let (q, r) = ci.div_rem(&self.d[(i, i)]);
                    if !r.is_zero() {
                        return None;
                    }
                    y[(i, j)] = q;
                } else if !ci.is_zero() {
                    return None;
                }
            }
        }
        Some(self.v.mul(&y))
    }
}

/// Rank over Q of an integer matrix.
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Kernel lattice basis (columns) of an integer matrix.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    smith_normal_form(m).kernel_basis()
}

/// Solve `m * X = rhs` over Z.
pub fn solve(m: &IntMatrix, rhs: &IntMatrix) -> Option<IntMatrix> {
    smith_normal_form(m).solve(rhs)
}

/// Given the basis (columns) of a saturated rank-m submodule of `Z^p`,
/// return columns completing it to a basis of `Z^p`.
///
/// Panics if the input is not saturated (some invariant factor != 1).
pub fn complement_of_saturated(basis: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(basis);
    assert_eq!(
        snf.rank(),
        basis.cols(),
        "complement_of_saturated: columns not independent"
    );
    for d in snf.diagonal() {
        assert!(
            d.is_zero() || d.is_one(),
            "complement_of_saturated: submodule is not saturated"
        );
    }
    let p = basis.rows();
    let keep: Vec<usize> = (basis.cols()..p).collect();
    snf.u_inv.select(&(0..p).collect::<Vec<_>>(), &keep)
}

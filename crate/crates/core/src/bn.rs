//! The basic algebra `B_n` of the exceptional block.
//!
//! `B_n` is the path algebra of the quiver with vertices `1..n`, loops `ξ_i`
//! and arrows `f_{i,i±1}`, subject to
//!
//! ```text
//! ξ_i ξ_i = 0,   ξ f = f ξ = 0,
//! f_{i-1,i} f_{i,i-1} = f_{i+1,i} f_{i,i+1} = ξ_i,
//! ```
//!
//! all other products of two arrows being zero. Products compose right to
//! left: `a · b` applies `b` first, so `f_{i-1,i} f_{i,i-1}` is an
//! endomorphism of `P_i`. Structure constants are integers (0 or 1) and do
//! not depend on any parameter.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::structure::{hom_table, BlockStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// `e_i`, the identity of `P_i`.
    Idempotent(usize),
    /// `ξ_i`, the socle endomorphism of `P_i`.
    Loop(usize),
    /// `f_{from,to}: P_from → P_to`.
    Arrow { from: usize, to: usize },
}

impl BasisElement {
    pub fn source(&self) -> usize {
        match *self {
            BasisElement::Idempotent(i) | BasisElement::Loop(i) => i,
            BasisElement::Arrow { from, .. } => from,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            BasisElement::Idempotent(i) | BasisElement::Loop(i) => i,
            BasisElement::Arrow { to, .. } => to,
        }
    }

    /// Path-length grading.
    pub fn degree(&self) -> u32 {
        match self {
            BasisElement::Idempotent(_) => 0,
            BasisElement::Arrow { .. } => 1,
            BasisElement::Loop(_) => 2,
        }
    }

    /// `self · rhs` on basis elements (apply `rhs` first).
    fn compose(&self, rhs: &BasisElement) -> Option<BasisElement> {
        use BasisElement::*;
        if rhs.target() != self.source() {
            return None;
        }
        match (*self, *rhs) {
            (Idempotent(_), x) | (x, Idempotent(_)) => Some(x),
            (Arrow { to, .. }, Arrow { from, .. }) if to == from => Some(Loop(from)),
            _ => None,
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Idempotent(i) => write!(f, "e_{i}"),
            BasisElement::Loop(i) => write!(f, "xi_{i}"),
            BasisElement::Arrow { from, to } => write!(f, "f_{from}_{to}"),
        }
    }
}

/// A finite-dimensional algebra given by a labelled basis and an integer
/// structure-constant table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicAlgebra {
    n: usize,
    basis: Vec<BasisElement>,
    /// `mult[a][b]` is `basis[a] · basis[b]` as `(index, coefficient)` pairs.
    mult: Vec<Vec<Vec<(usize, i64)>>>,
}

impl BasicAlgebra {
    /// Builds the algebra whose vertex Hom spaces are given by `hom`, which
    /// must be the exceptional-block table (2 on the diagonal, 1 between
    /// neighbours, 0 elsewhere).
    pub fn from_hom_table(hom: &[Vec<u64>]) -> Result<Self> {
        let n = hom.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty Hom table".into()));
        }
        if hom.iter().any(|row| row.len() != n) || hom != hom_table(n).as_slice() {
            return Err(Error::InvalidInput(
                "Hom table is not the tridiagonal (2,1) table of an exceptional block".into(),
            ));
        }

        let mut basis: Vec<BasisElement> = Vec::with_capacity(4 * n - 2);
        basis.extend((1..=n).map(BasisElement::Idempotent));
        basis.extend((1..=n).map(BasisElement::Loop));
        basis.extend((1..n).map(|i| BasisElement::Arrow { from: i, to: i + 1 }));
        basis.extend((1..n).map(|i| BasisElement::Arrow { from: i + 1, to: i }));

        let index_of = |x: &BasisElement| {
            basis
                .iter()
                .position(|y| y == x)
                .expect("closed under products")
        };
        let mult = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        a.compose(b)
                            .map(|c| vec![(index_of(&c), 1)])
                            .unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        Ok(BasicAlgebra { n, basis, mult })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index_of(&self, x: BasisElement) -> Option<usize> {
        self.basis.iter().position(|y| *y == x)
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.mult[a][b]
    }

    /// Bilinear extension of the table to coordinate vectors.
    pub fn multiply(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.dim()];
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                for &(c, coeff) in &self.mult[a][b] {
                    out[c] += xa * yb * coeff;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, a: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[a] = 1;
        v
    }

    /// `Σ e_i`.
    pub fn identity(&self) -> Vec<i64> {
        self.basis
            .iter()
            .map(|x| i64::from(matches!(x, BasisElement::Idempotent(_))))
            .collect()
    }

    /// First basis triple `(a, b, c)` with `(ab)c ≠ a(bc)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        for a in 0..dim {
            let ea = self.unit_vector(a);
            for b in 0..dim {
                let eb = self.unit_vector(b);
                let ab = self.multiply(&ea, &eb);
                for c in 0..dim {
                    let ec = self.unit_vector(c);
                    let left = self.multiply(&ab, &ec);
                    let right = self.multiply(&ea, &self.multiply(&eb, &ec));
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    /// `dim e_a B e_b`: basis elements with target `a` and source `b` (1-based).
    pub fn vertex_hom_dim(&self, a: usize, b: usize) -> usize {
        self.basis
            .iter()
            .filter(|x| x.target() == a && x.source() == b)
            .count()
    }

    /// Indices of basis elements of positive degree; they span the radical.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].degree() > 0)
            .collect()
    }

    /// Whether the degree-≥1 span is a two-sided ideal.
    pub fn radical_is_ideal(&self) -> bool {
        let rad = self.radical_basis();
        (0..self.dim()).all(|a| {
            rad.iter().all(|&r| {
                self.mult[a][r]
                    .iter()
                    .chain(self.mult[r][a].iter())
                    .all(|&(c, _)| self.basis[c].degree() > 0)
            })
        })
    }

    /// Whether every product of three radical basis elements vanishes.
    pub fn radical_cube_is_zero(&self) -> bool {
        let rad = self.radical_basis();
        rad.iter().all(|&a| {
            rad.iter().all(|&b| {
                let ab = self.multiply(&self.unit_vector(a), &self.unit_vector(b));
                rad.iter().all(|&c| {
                    self.multiply(&ab, &self.unit_vector(c))
                        .iter()
                        .all(|&v| v == 0)
                })
            })
        })
    }

    /// Deterministic text export: the basis labels, then one `a b result`
    /// line per nonzero product of basis elements.
    pub fn export_table(&self) -> String {
        let mut out = String::new();
        let labels: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "basis {}", labels.join(" "));
        for (a, row) in self.mult.iter().enumerate() {
            for (b, terms) in row.iter().enumerate() {
                if terms.is_empty() {
                    continue;
                }
                let result: Vec<String> = terms
                    .iter()
                    .map(|&(c, coeff)| {
                        if coeff == 1 {
                            labels[c].clone()
                        } else {
                            format!("{coeff}*{}", labels[c])
                        }
                    })
                    .collect();
                let _ = writeln!(out, "{} {} {}", labels[a], labels[b], result.join("+"));
            }
        }
        out
    }
}

pub fn build_bn(n: usize) -> BasicAlgebra {
    assert!(n >= 1, "B_n needs n >= 1");
    BasicAlgebra::from_hom_table(&hom_table(n)).expect("hom_table is well formed")
}

/// Left-multiplication matrices, one per basis element:
/// `matrices[x][k][j]` is the coefficient of `basis[k]` in `basis[x] · basis[j]`.
#[allow(clippy::needless_range_loop)]
pub fn regular_representation(algebra: &BasicAlgebra) -> Vec<Vec<Vec<i64>>> {
    let dim = algebra.dim();
    (0..dim)
        .map(|x| {
            let mut mat = vec![vec![0i64; dim]; dim];
            for j in 0..dim {
                for &(k, coeff) in algebra.product(x, j) {
                    mat[k][j] += coeff;
                }
            }
            mat
        })
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let size = a.len();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| (0..size).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Whether `L(a) L(b) = L(a · b)` for all basis pairs. The left regular
/// representation is a homomorphism exactly when the table is associative.
pub fn regular_representation_is_homomorphism(algebra: &BasicAlgebra) -> bool {
    let reps = regular_representation(algebra);
    let dim = algebra.dim();
    (0..dim).all(|a| {
        (0..dim).all(|b| {
            let mut expected = vec![vec![0i64; dim]; dim];
            for &(c, coeff) in algebra.product(a, b) {
                for (row, src) in expected.iter_mut().zip(&reps[c]) {
                    for (v, s) in row.iter_mut().zip(src) {
                        *v += coeff * s;
                    }
                }
            }
            matmul(&reps[a], &reps[b]) == expected
        })
    })
}

/// Whether two regime instances of equal block rank induce literally the
/// same structure-constant table.
pub fn verify_parameter_independence(a: &BlockStructure, b: &BlockStructure) -> Result<bool> {
    if a.rank != b.rank {
        return Err(Error::SizeMismatch {
            left: a.rank,
            right: b.rank,
        });
    }
    let left = BasicAlgebra::from_hom_table(&a.hom_dims)?;
    let right = BasicAlgebra::from_hom_table(&b.hom_dims)?;
    Ok(left.export_table() == right.export_table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisElement::*;

    fn product_of(alg: &BasicAlgebra, a: BasisElement, b: BasisElement) -> Option<BasisElement> {
        let terms = alg.product(alg.index_of(a).unwrap(), alg.index_of(b).unwrap());
        match terms {
            [] => None,
            [(c, 1)] => Some(alg.basis()[*c]),
            other => panic!("unexpected product {other:?}"),
        }
    }

    #[test]
    fn dual_numbers() {
        let b1 = build_bn(1);
        assert_eq!(b1.dim(), 2);
        assert_eq!(b1.basis(), &[Idempotent(1), Loop(1)]);
        assert_eq!(product_of(&b1, Loop(1), Loop(1)), None);
        assert!(b1.is_associative());
    }

    #[test]
    fn b2_relations() {
        let b2 = build_bn(2);
        assert_eq!(b2.dim(), 6);
        let f12 = Arrow { from: 1, to: 2 };
        let f21 = Arrow { from: 2, to: 1 };
        assert_eq!(product_of(&b2, f21, f12), Some(Loop(1)));
        assert_eq!(product_of(&b2, f12, f21), Some(Loop(2)));
        assert_eq!(product_of(&b2, f12, f12), None);
        assert_eq!(product_of(&b2, Loop(2), f12), None);
        assert_eq!(product_of(&b2, f12, Loop(1)), None);
        assert_eq!(product_of(&b2, Idempotent(2), f12), Some(f12));
        assert_eq!(product_of(&b2, Idempotent(1), f12), None);
    }

    #[test]
    fn regular_rep_n2() {
        let b2 = build_bn(2);
        let reps = regular_representation(&b2);
        let idx = |x| b2.index_of(x).unwrap();
        let f12 = reps[idx(Arrow { from: 1, to: 2 })].clone();
        let f21 = reps[idx(Arrow { from: 2, to: 1 })].clone();
        assert_eq!(matmul(&f12, &f21), reps[idx(Loop(2))]);
        let xi = &reps[idx(Loop(1))];
        assert!(matmul(xi, xi).iter().flatten().all(|&v| v == 0));
        let e1 = &reps[idx(Idempotent(1))];
        assert_eq!(&matmul(e1, e1), e1);
        assert!(regular_representation_is_homomorphism(&b2));
    }

    #[test]
    fn rejects_foreign_tables() {
        assert!(BasicAlgebra::from_hom_table(&[vec![2, 0], vec![0, 2]]).is_err());
        assert!(BasicAlgebra::from_hom_table(&[]).is_err());
    }

    #[test]
    fn export_is_stable() {
        let text = build_bn(2).export_table();
        assert!(text.starts_with("basis e_1 e_2 xi_1 xi_2 f_1_2 f_2_1\n"));
        assert!(text.contains("f_2_1 f_1_2 xi_1\n"));
        assert!(text.contains("f_1_2 f_2_1 xi_2\n"));
    }
}

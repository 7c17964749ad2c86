//! Simple modules of the Ariki-Koike algebra.
//!
//! For `q ≠ 1` the nonzero `D^λ` are labelled by Kleshchev multipartitions;
//! for `q = 1` by the multipartitions with `λ^(s) = ∅` whenever `s < t` and
//! `u_s = u_t`.

use std::collections::HashMap;

use crate::combinatorics::{
    addable_nodes, enumerate_multipartitions, removable_nodes, Multipartition, Node,
};
use crate::error::{Error, Result};
use crate::params::{relation_exponents, residue_of, ParamScheme, Residue};

/// Outcome of the Kleshchev test, with a good-node removal sequence when
/// the answer is yes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleshchevVerdict {
    pub multipartition: Multipartition,
    pub is_kleshchev: bool,
    pub witness_path: Vec<(Node, Residue)>,
}

/// The good `a`-node of `λ`: the highest normal removable `a`-node.
///
/// A removable `a`-node `x` is normal when, for every addable `a`-node `x'`
/// below it, strictly more removable than addable `a`-nodes lie strictly
/// between `x` and `x'` in the (component, row) order.
pub fn good_node(
    scheme: &ParamScheme,
    lambda: &Multipartition,
    a: Residue,
) -> Result<Option<Node>> {
    if scheme.q_is_one() {
        return Err(Error::RequiresQNotOne);
    }
    let removable: Vec<Node> = removable_nodes(lambda)
        .into_iter()
        .filter(|x| residue_of(scheme, x) == a)
        .collect();
    let addable: Vec<Node> = addable_nodes(lambda)
        .into_iter()
        .filter(|x| residue_of(scheme, x) == a)
        .collect();

    let between = |nodes: &[Node], upper: &Node, lower: &Node| {
        nodes
            .iter()
            .filter(|y| y.is_below(upper) && lower.is_below(y))
            .count()
    };

    Ok(removable.iter().copied().find(|x| {
        addable
            .iter()
            .filter(|x2| x2.is_below(x))
            .all(|x2| between(&removable, x, x2) > between(&addable, x, x2))
    }))
}

/// Memoised Kleshchev recursion for one parameter scheme.
///
/// The memo table is private to the solver; use one solver per worker.
#[derive(Debug)]
pub struct KleshchevSolver<'a> {
    scheme: &'a ParamScheme,
    memo: HashMap<Multipartition, bool>,
}

impl<'a> KleshchevSolver<'a> {
    pub fn new(scheme: &'a ParamScheme) -> Result<Self> {
        if scheme.q_is_one() {
            return Err(Error::RequiresQNotOne);
        }
        Ok(KleshchevSolver {
            scheme,
            memo: HashMap::new(),
        })
    }

    /// Good nodes of `λ`, one per residue of a removable node, in node order.
    fn good_nodes(&self, lambda: &Multipartition) -> Vec<(Node, Residue)> {
        let mut seen: Vec<Residue> = Vec::new();
        let mut out = Vec::new();
        for x in removable_nodes(lambda) {
            let a = residue_of(self.scheme, &x);
            if seen.contains(&a) {
                continue;
            }
            seen.push(a);
            if let Some(good) = good_node(self.scheme, lambda, a).expect("q != 1 checked in new") {
                out.push((good, a));
            }
        }
        out
    }

    pub fn is_kleshchev(&mut self, lambda: &Multipartition) -> bool {
        if lambda.is_empty() {
            return true;
        }
        if let Some(&known) = self.memo.get(lambda) {
            return known;
        }
        let verdict = self
            .good_nodes(lambda)
            .into_iter()
            .any(|(x, _)| self.is_kleshchev(&lambda.without(&x)));
        self.memo.insert(lambda.clone(), verdict);
        verdict
    }

    pub fn verdict(&mut self, lambda: &Multipartition) -> KleshchevVerdict {
        let is_kleshchev = self.is_kleshchev(lambda);
        let mut witness_path = Vec::new();
        if is_kleshchev {
            let mut current = lambda.clone();
            while !current.is_empty() {
                let (x, a) = self
                    .good_nodes(&current)
                    .into_iter()
                    .find(|(x, _)| self.is_kleshchev(&current.without(x)))
                    .expect("a Kleshchev multipartition has a good removal staying Kleshchev");
                witness_path.push((x, a));
                current = current.without(&x);
            }
        }
        KleshchevVerdict {
            multipartition: lambda.clone(),
            is_kleshchev,
            witness_path,
        }
    }
}

pub fn is_kleshchev(scheme: &ParamScheme, lambda: &Multipartition) -> Result<KleshchevVerdict> {
    Ok(KleshchevSolver::new(scheme)?.verdict(lambda))
}

/// `D^λ ≠ 0` at `q = 1`: `λ^(s) = ∅` for every `s < t` with `u_s = u_t`.
pub fn q_one_simple(scheme: &ParamScheme, lambda: &Multipartition) -> bool {
    let m = scheme.m();
    (1..=m).all(|s| {
        lambda.component(s).is_empty() || !(s + 1..=m).any(|t| scheme.relation_holds(s, 0, t))
    })
}

/// Number of simple modules and the labels `λ` with `D^λ = 0`, in canonical order.
pub fn simple_count(scheme: &ParamScheme, n: usize) -> (usize, Vec<Multipartition>) {
    let all = enumerate_multipartitions(scheme.m(), n);
    let total = all.len();
    let non_simple: Vec<Multipartition> = if scheme.q_is_one() {
        all.into_iter()
            .filter(|l| !q_one_simple(scheme, l))
            .collect()
    } else {
        let mut solver = KleshchevSolver::new(scheme).expect("q != 1");
        all.into_iter()
            .filter(|l| !solver.is_kleshchev(l))
            .collect()
    };
    (total - non_simple.len(), non_simple)
}

/// Ariki's criterion: `[n]_q! ∏_{i<j} ∏_{-n<c<n} (u_i − q^c u_j) ≠ 0`.
pub fn ariki_semisimple(scheme: &ParamScheme, n: usize) -> bool {
    let m = scheme.m();
    scheme.q_factorial_nonzero(n)
        && (1..=m).all(|i| (i + 1..=m).all(|j| relation_exponents(scheme, i, j, n).is_empty()))
}

/// The order of `q` is infinite or at least `2n − 1`.
pub fn min_order_check(scheme: &ParamScheme, n: usize) -> bool {
    scheme.e() == 0 || scheme.e() >= 2 * n as u64 - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(s: &str) -> ParamScheme {
        s.parse().unwrap()
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn single_row_at_root_of_unity_has_no_good_node() {
        let sch = scheme("e=3;class=0;shift=0");
        let row = mp("[(3)]");
        let a = residue_of(&sch, &Node::new(1, 1, 3));
        assert_eq!(good_node(&sch, &row, a).unwrap(), None);
        assert!(!is_kleshchev(&sch, &row).unwrap().is_kleshchev);
    }

    #[test]
    fn vacuously_normal_node() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        let lambda = mp("[(1),(1)]");
        let a = sch.residue(2, 0);
        assert_eq!(
            good_node(&sch, &lambda, a).unwrap(),
            Some(Node::new(2, 1, 1))
        );
        for a in [sch.residue(1, 0), sch.residue(2, 0), sch.residue(1, 5)] {
            assert_eq!(good_node(&sch, &Multipartition::empty(2), a).unwrap(), None);
        }
    }

    #[test]
    fn kleshchev_verdicts() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        assert!(!is_kleshchev(&sch, &mp("[(2),()]")).unwrap().is_kleshchev);
        let v = is_kleshchev(&sch, &mp("[(1),(1)]")).unwrap();
        assert!(v.is_kleshchev);
        let path: Vec<Node> = v.witness_path.iter().map(|p| p.0).collect();
        assert_eq!(path, vec![Node::new(2, 1, 1), Node::new(1, 1, 1)]);
    }

    #[test]
    fn q_one_rejected() {
        let sch = scheme("e=1;class=0,0;shift=0,0");
        assert_eq!(
            is_kleshchev(&sch, &mp("[(1),()]")),
            Err(Error::RequiresQNotOne)
        );
        assert!(good_node(&sch, &mp("[(1),()]"), sch.residue(1, 0)).is_err());
    }

    #[test]
    fn counts() {
        let q_one = scheme("e=1;class=0,0;shift=0,0");
        let (count, non_simple) = simple_count(&q_one, 2);
        assert_eq!(count, 2);
        assert_eq!(
            non_simple,
            vec![mp("[(2),()]"), mp("[(1,1),()]"), mp("[(1),(1)]")]
        );

        let regime = scheme("e=0;class=0,0;shift=0,1");
        assert_eq!(simple_count(&regime, 2), (4, vec![mp("[(2),()]")]));

        let generic = ParamScheme::generic(3);
        assert_eq!(simple_count(&generic, 3), (22, vec![]));
    }

    #[test]
    fn ariki() {
        assert!(ariki_semisimple(&ParamScheme::generic(2), 3));
        assert!(!ariki_semisimple(&scheme("e=2;class=0,1;shift=0,0"), 2));
        assert!(!ariki_semisimple(&scheme("e=0;class=0,0;shift=0,1"), 2));
    }

    #[test]
    fn order_bound() {
        assert!(min_order_check(&scheme("e=3;class=0,0;shift=0,1"), 2));
        assert!(!min_order_check(&scheme("e=2;class=0,0;shift=0,1"), 2));
        assert!(min_order_check(&scheme("e=0;class=0,0;shift=0,1"), 7));
    }
}

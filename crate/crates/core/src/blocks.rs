//! Residue contents and the block partition of Specht modules (`q ≠ 1`).
//!
//! Two Specht modules share a block iff their contents agree. This module
//! groups by content only and never special-cases the almost-semisimple
//! regime; the structural prediction lives in [`crate::structure`].

use std::collections::HashMap;
use std::fmt;

use crate::combinatorics::{enumerate_multipartitions, Multipartition, Partition};
use crate::error::{Error, Result};
use crate::params::{residue_of, ParamScheme, Residue};

/// Multiset of residues, stored sorted so that equality is list equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ContentMultiset {
    entries: Vec<Residue>,
}

impl ContentMultiset {
    pub fn from_residues(mut entries: Vec<Residue>) -> Self {
        entries.sort();
        ContentMultiset { entries }
    }

    pub fn entries(&self) -> &[Residue] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, r: &Residue) -> bool {
        self.entries.binary_search(r).is_ok()
    }

    pub fn multiplicity(&self, r: &Residue) -> usize {
        self.entries.iter().filter(|x| *x == r).count()
    }
}

impl fmt::Display for ContentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, r) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    /// Blocks in order of their first member in the canonical enumeration;
    /// members in canonical order.
    pub blocks: Vec<Vec<Multipartition>>,
    /// The unique non-singleton block, when exactly one exists.
    pub exceptional_index: Option<usize>,
}

impl BlockPartition {
    pub fn exceptional(&self) -> Option<&[Multipartition]> {
        self.exceptional_index
            .map(|idx| self.blocks[idx].as_slice())
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub fn content(scheme: &ParamScheme, lambda: &Multipartition) -> ContentMultiset {
    ContentMultiset::from_residues(lambda.nodes().map(|x| residue_of(scheme, &x)).collect())
}

pub fn block_partition(scheme: &ParamScheme, n: usize) -> Result<BlockPartition> {
    if scheme.q_is_one() {
        return Err(Error::QOneBlocksUnsupported);
    }
    let mut index: HashMap<ContentMultiset, usize> = HashMap::new();
    let mut blocks: Vec<Vec<Multipartition>> = Vec::new();
    for lambda in enumerate_multipartitions(scheme.m(), n) {
        let idx = *index.entry(content(scheme, &lambda)).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[idx].push(lambda);
    }
    let mut large = blocks.iter().enumerate().filter(|(_, b)| b.len() >= 2);
    let exceptional_index = match (large.next(), large.next()) {
        (Some((idx, _)), None) => Some(idx),
        _ => None,
    };
    Ok(BlockPartition {
        blocks,
        exceptional_index,
    })
}

/// `λ_0, ..., λ_n`: `λ_a` has a row of `a` boxes in component `i` and a
/// column of `n − a` boxes in component `j`. Requires `u_j = q^{n−1} u_i`.
pub fn lambda_family(
    scheme: &ParamScheme,
    n: usize,
    witness: (usize, usize),
) -> Result<Vec<Multipartition>> {
    let (i, j) = witness;
    let m = scheme.m();
    if i == j
        || i == 0
        || j == 0
        || i > m
        || j > m
        || n == 0
        || !scheme.relation_holds(j, n as i64 - 1, i)
    {
        return Err(Error::BadWitness { i, j });
    }
    Ok((0..=n)
        .map(|a| {
            let mut components = vec![Partition::empty(); m];
            components[i - 1] = Partition::row(a);
            components[j - 1] = Partition::column(n - a);
            Multipartition::new(components).expect("m >= 1")
        })
        .collect())
}

/// The hooks `(n − a, 1^a)`, `a = 0..n−1`, as one-component multipartitions.
/// For `m = 1` at `e = n` these form the principal block.
pub fn hook_family(n: usize) -> Vec<Multipartition> {
    (0..n)
        .map(|a| Multipartition::new(vec![Partition::hook(n, a)]).expect("one component"))
        .collect()
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
    fn contents() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        assert!(content(&sch, &Multipartition::empty(2)).is_empty());
        assert_eq!(
            content(&sch, &mp("[(1,1),()]")).entries(),
            &[Residue { class: 0, exp: -1 }, Residue { class: 0, exp: 0 }]
        );
    }

    #[test]
    fn family_content_is_a_run_of_residues() {
        let sch = scheme("e=0;class=5,0,0;shift=0,2,0");
        let expected: Vec<Residue> = (0..3).map(|x| sch.residue(3, x)).collect();
        for lambda in lambda_family(&sch, 3, (3, 2)).unwrap() {
            assert_eq!(
                content(&sch, &lambda),
                ContentMultiset::from_residues(expected.clone())
            );
        }
    }

    #[test]
    fn m2_blocks() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        let bp = block_partition(&sch, 2).unwrap();
        assert_eq!(bp.len(), 3);
        assert_eq!(
            bp.exceptional().unwrap(),
            &[mp("[(2),()]"), mp("[(1),(1)]"), mp("[(),(1,1)]")]
        );
        assert_eq!(
            lambda_family(&sch, 2, (1, 2)).unwrap(),
            vec![mp("[(),(1,1)]"), mp("[(1),(1)]"), mp("[(2),()]")]
        );
    }

    #[test]
    fn errors() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        assert_eq!(
            lambda_family(&sch, 2, (2, 1)),
            Err(Error::BadWitness { i: 2, j: 1 })
        );
        assert_eq!(
            lambda_family(&sch, 3, (1, 2)),
            Err(Error::BadWitness { i: 1, j: 2 })
        );
        assert_eq!(
            block_partition(&scheme("e=1;class=0,1;shift=0,0"), 2),
            Err(Error::QOneBlocksUnsupported)
        );
    }

    #[test]
    fn generic_blocks_are_singletons() {
        let bp = block_partition(&ParamScheme::generic(3), 3).unwrap();
        assert_eq!(bp.len(), 22);
        assert_eq!(bp.exceptional_index, None);
    }

    #[test]
    fn hooks() {
        let hooks: Vec<String> = hook_family(3).iter().map(ToString::to_string).collect();
        assert_eq!(hooks, ["[(3)]", "[(2,1)]", "[(1,1,1)]"]);
    }
}

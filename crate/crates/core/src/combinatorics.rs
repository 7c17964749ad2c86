//! Partitions, multipartitions and nodes, plus the dimensions of the
//! irreducible characters of `W = G(m, 1, n)`.
//!
//! Partitions are stored densely as weakly decreasing row lengths. Nodes are
//! materialised on demand and use 1-based `(component, row, column)`
//! coordinates throughout.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// A single row of `len` boxes.
    pub fn row(len: usize) -> Self {
        if len == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![len] }
        }
    }

    /// A single column of `len` boxes.
    pub fn column(len: usize) -> Self {
        Partition {
            parts: vec![1; len],
        }
    }

    /// The hook `(n - leg, 1^leg)`.
    pub fn hook(n: usize, leg: usize) -> Self {
        assert!(leg < n, "hook leg {leg} must be below {n}");
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero rows (the length of the first column).
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r` (1-based); zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// `λ_i - λ_{i+1} < e` for every row. With `e = 0` every partition qualifies.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        if e == 0 {
            return true;
        }
        (1..=self.parts.len()).all(|r| self.row_len(r) - self.row_len(r + 1) < e)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An `m`-tuple of partitions. Indexes Specht modules and `Irrep(W)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

/// A box position: 1-based component, row and column.
///
/// The derived ordering compares `(component, row, column)`; restricted to
/// `(component, row)` this is the "below" order used for normal nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub column: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, column: usize) -> Self {
        Node {
            component,
            row,
            column,
        }
    }

    /// `self` lies strictly below `other`: later component, or same component
    /// and a lower row. Columns are ignored.
    pub fn is_below(&self, other: &Node) -> bool {
        (self.component, self.row) > (other.component, other.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.component, self.row, self.column)
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Multipartition { components })
    }

    /// The multipartition of 0 with `m` empty components.
    pub fn empty(m: usize) -> Self {
        assert!(m >= 1);
        Multipartition {
            components: vec![Partition::empty(); m],
        }
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn contains(&self, x: &Node) -> bool {
        x.component >= 1
            && x.component <= self.m()
            && x.row >= 1
            && x.column >= 1
            && x.column <= self.component(x.component).row_len(x.row)
    }

    /// All nodes, ordered by component, row, column.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(k, p)| {
            p.parts()
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (1..=len).map(move |c| Node::new(k + 1, r + 1, c)))
        })
    }

    /// Remove a removable node. Panics if `x` is not removable.
    pub fn without(&self, x: &Node) -> Multipartition {
        let mut out = self.clone();
        let parts = &mut out.components[x.component - 1].parts;
        assert_eq!(
            parts.get(x.row - 1),
            Some(&x.column),
            "{x} is not removable"
        );
        assert!(parts.get(x.row).is_none_or(|&next| next < x.column));
        parts[x.row - 1] -= 1;
        if parts[x.row - 1] == 0 {
            parts.pop();
        }
        out
    }

    /// Add an addable node. Panics if `x` is not addable.
    pub fn with(&self, x: &Node) -> Multipartition {
        let mut out = self.clone();
        let parts = &mut out.components[x.component - 1].parts;
        let current = parts.get(x.row - 1).copied().unwrap_or(0);
        assert_eq!(current + 1, x.column, "{x} is not addable");
        if x.row > 1 {
            assert!(parts[x.row - 2] > current, "{x} is not addable");
        }
        if x.row - 1 == parts.len() {
            parts.push(1);
        } else {
            parts[x.row - 1] += 1;
        }
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, p) in self.components.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses the `[(2,1),(),(1)]` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, ch: u8| -> Result<()> {
            if bytes.get(*pos) == Some(&ch) {
                *pos += 1;
                Ok(())
            } else {
                Err(Error::parse(s, *pos, format!("expected '{}'", ch as char)))
            }
        };

        skip_ws(&mut pos);
        expect(&mut pos, b'[')?;
        let mut components = Vec::new();
        loop {
            skip_ws(&mut pos);
            expect(&mut pos, b'(')?;
            let mut parts = Vec::new();
            let start = pos;
            loop {
                skip_ws(&mut pos);
                if bytes.get(pos) == Some(&b')') {
                    pos += 1;
                    break;
                }
                let digits_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if digits_start == pos {
                    return Err(Error::parse(s, pos, "expected a part"));
                }
                let part: usize = s[digits_start..pos]
                    .parse()
                    .map_err(|_| Error::parse(s, digits_start, "part out of range"))?;
                parts.push(part);
                skip_ws(&mut pos);
                if bytes.get(pos) == Some(&b',') {
                    pos += 1;
                }
            }
            let partition =
                Partition::new(parts).map_err(|e| Error::parse(s, start, e.to_string()))?;
            components.push(partition);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(Error::parse(s, pos, "expected ',' or ']'")),
            }
        }
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(Error::parse(s, pos, "trailing characters"));
        }
        Multipartition::new(components)
    }
}

/// Partitions of `n` in descending lexicographic order of their parts.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every multipartition of `n` with `m` components, each exactly once.
///
/// Canonical order: component sizes compared lexicographically (descending),
/// then each component's parts compared lexicographically (descending),
/// earlier components first.
pub fn enumerate_multipartitions(m: usize, n: usize) -> Vec<Multipartition> {
    assert!(m >= 1, "m must be at least 1");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();

    let mut compositions = Vec::new();
    fn compose(slots: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            prefix.push(first);
            compose(slots - 1, remaining - first, prefix, out);
            prefix.pop();
        }
    }
    compose(m, n, &mut Vec::new(), &mut compositions);

    let mut out = Vec::new();
    for sizes in compositions {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &size in &sizes {
            let mut next = Vec::with_capacity(acc.len() * by_size[size].len());
            for prefix in &acc {
                for p in &by_size[size] {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(
            acc.into_iter()
                .map(|components| Multipartition { components }),
        );
    }
    out
}

/// Removable nodes of `λ`, sorted in the "below" order.
pub fn removable_nodes(lambda: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for r in 1..=p.num_rows() {
            if p.row_len(r) > p.row_len(r + 1) {
                out.push(Node::new(k + 1, r, p.row_len(r)));
            }
        }
    }
    out
}

/// Addable nodes of `λ`, sorted in the "below" order.
pub fn addable_nodes(lambda: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for r in 1..=p.num_rows() + 1 {
            if r == 1 || p.row_len(r - 1) > p.row_len(r) {
                out.push(Node::new(k + 1, r, p.row_len(r) + 1));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Dimension of the irreducible `G(m,1,n)`-module labelled by `λ`:
/// `multinomial(n; |λ^(1)|, ..., |λ^(m)|) · Π f(λ^(k))`.
pub fn dim_irrep(lambda: &Multipartition) -> u128 {
    let n = lambda.size();
    let mut dim = factorial(n);
    for p in lambda.components() {
        dim /= factorial(p.size());
    }
    lambda
        .components()
        .iter()
        .fold(dim, |acc, p| acc * p.standard_tableaux())
}

/// `m^n · n!`, the order of `G(m, 1, n)` and the dimension of its Hecke algebra.
pub fn group_order(m: usize, n: usize) -> u128 {
    (m as u128).pow(n as u32) * factorial(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        let empty = enumerate_multipartitions(1, 0);
        assert_eq!(empty, vec![Multipartition::empty(1)]);

        let two_two: Vec<String> = enumerate_multipartitions(2, 2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            two_two,
            [
                "[(2),()]",
                "[(1,1),()]",
                "[(1),(1)]",
                "[(),(2)]",
                "[(),(1,1)]"
            ]
        );

        assert_eq!(enumerate_multipartitions(3, 3).len(), 22);
    }

    #[test]
    fn removable_and_addable() {
        let lambda = mp("[(2),()]");
        assert_eq!(removable_nodes(&lambda), vec![Node::new(1, 1, 2)]);
        assert_eq!(
            addable_nodes(&lambda),
            vec![Node::new(1, 1, 3), Node::new(1, 2, 1), Node::new(2, 1, 1)]
        );

        let empty = Multipartition::empty(2);
        assert!(removable_nodes(&empty).is_empty());
        assert_eq!(
            addable_nodes(&empty),
            vec![Node::new(1, 1, 1), Node::new(2, 1, 1)]
        );

        assert_eq!(
            removable_nodes(&mp("[(1),(1)]")),
            vec![Node::new(1, 1, 1), Node::new(2, 1, 1)]
        );
    }

    #[test]
    fn dims() {
        assert_eq!(dim_irrep(&mp("[(4),(),()]")), 1);
        assert_eq!(dim_irrep(&mp("[(1),(1)]")), 2);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().standard_tableaux(), 2);
        assert_eq!(Partition::new(vec![3, 2]).unwrap().standard_tableaux(), 5);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[(1,2)]".parse::<Multipartition>().is_err());
        assert!("[(1),(2".parse::<Multipartition>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for lambda in enumerate_multipartitions(3, 3) {
            assert_eq!(
                lambda.to_string().parse::<Multipartition>().unwrap(),
                lambda
            );
        }
    }

    #[test]
    fn e_restricted() {
        let p3 = Partition::row(3);
        assert!(!p3.is_e_restricted(3));
        assert!(Partition::new(vec![2, 1]).unwrap().is_e_restricted(3));
        assert!(Partition::column(3).is_e_restricted(3));
        assert!(p3.is_e_restricted(0));
    }
}

//! Brute-force verifiers built from the definitions alone.
//!
//! Nothing here calls into the residue, node or Kleshchev code of the fast
//! modules: diagrams are plain sets of `(component, row, column)` cells,
//! residues are recomputed from the raw scheme data, and the Kleshchev test
//! is an unmemoised recursion. Conversions to [`Multipartition`] exist only
//! so results can be compared.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::blocks::block_partition;
use crate::combinatorics::{Multipartition, Partition};
use crate::error::{Error, Result};
use crate::params::ParamScheme;
use crate::simples::{ariki_semisimple, q_one_simple, simple_count, KleshchevSolver};
use crate::structure::{classify_regime, RegimeKind};

type Cell = (usize, usize, usize);
type Cells = BTreeSet<Cell>;
/// `(class, exponent)`, exponent reduced mod `e` when `e > 0`.
type Value = (u32, i64);

fn value(scheme: &ParamScheme, k: usize, offset: i64) -> Value {
    let raw = scheme.shifts()[k - 1] + offset;
    let e = scheme.e() as i64;
    (
        scheme.classes()[k - 1],
        if e == 0 { raw } else { raw.rem_euclid(e) },
    )
}

fn cell_value(scheme: &ParamScheme, &(k, r, c): &Cell) -> Value {
    value(scheme, k, c as i64 - r as i64)
}

fn to_cells(lambda: &Multipartition) -> Cells {
    let mut cells = Cells::new();
    for (k, part) in lambda.components().iter().enumerate() {
        for (r, &len) in part.parts().iter().enumerate() {
            for c in 1..=len {
                cells.insert((k + 1, r + 1, c));
            }
        }
    }
    cells
}

fn to_multipartition(m: usize, cells: &Cells) -> Multipartition {
    let mut rows = vec![BTreeMap::<usize, usize>::new(); m];
    for &(k, r, _) in cells {
        *rows[k - 1].entry(r).or_default() += 1;
    }
    let components = rows
        .into_iter()
        .map(|rs| Partition::new(rs.into_values().collect()).expect("cells form a diagram"))
        .collect();
    Multipartition::new(components).expect("m >= 1")
}

fn removable(cells: &Cells) -> Vec<Cell> {
    cells
        .iter()
        .copied()
        .filter(|&(k, r, c)| !cells.contains(&(k, r + 1, c)) && !cells.contains(&(k, r, c + 1)))
        .collect()
}

fn addable(m: usize, cells: &Cells) -> Vec<Cell> {
    let mut out = BTreeSet::new();
    let candidates = (1..=m).map(|k| (k, 1, 1)).chain(
        cells
            .iter()
            .flat_map(|&(k, r, c)| [(k, r + 1, c), (k, r, c + 1)]),
    );
    for (k, r, c) in candidates {
        let fits = !cells.contains(&(k, r, c))
            && (r == 1 || cells.contains(&(k, r - 1, c)))
            && (c == 1 || cells.contains(&(k, r, c - 1)));
        if fits {
            out.insert((k, r, c));
        }
    }
    out.into_iter().collect()
}

/// Every diagram with `n` cells in `m` components, built by adding cells.
fn all_diagrams(m: usize, n: usize) -> BTreeSet<Cells> {
    let mut layer: BTreeSet<Cells> = BTreeSet::from([Cells::new()]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for cells in &layer {
            for x in addable(m, cells) {
                let mut grown = cells.clone();
                grown.insert(x);
                next.insert(grown);
            }
        }
        layer = next;
    }
    layer
}

/// Every `m`-multipartition of `n`, found by growing diagrams cell by cell.
pub fn oracle_multipartitions(m: usize, n: usize) -> BTreeSet<Multipartition> {
    all_diagrams(m, n)
        .iter()
        .map(|c| to_multipartition(m, c))
        .collect()
}

fn level(&(k, r, _): &Cell) -> (usize, usize) {
    (k, r)
}

fn is_normal(scheme: &ParamScheme, m: usize, cells: &Cells, x: &Cell) -> bool {
    let a = cell_value(scheme, x);
    let rem: Vec<Cell> = removable(cells)
        .into_iter()
        .filter(|y| cell_value(scheme, y) == a)
        .collect();
    let add: Vec<Cell> = addable(m, cells)
        .into_iter()
        .filter(|y| cell_value(scheme, y) == a)
        .collect();
    add.iter().filter(|y| level(y) > level(x)).all(|y| {
        let inside = |z: &&Cell| level(x) < level(z) && level(z) < level(y);
        rem.iter().filter(inside).count() > add.iter().filter(inside).count()
    })
}

fn is_good(scheme: &ParamScheme, m: usize, cells: &Cells, x: &Cell) -> bool {
    let a = cell_value(scheme, x);
    is_normal(scheme, m, cells, x)
        && !removable(cells).iter().any(|y| {
            level(y) < level(x) && cell_value(scheme, y) == a && is_normal(scheme, m, cells, y)
        })
}

fn kleshchev_cells(scheme: &ParamScheme, m: usize, cells: &Cells) -> bool {
    cells.is_empty()
        || removable(cells).iter().any(|x| {
            if !is_good(scheme, m, cells, x) {
                return false;
            }
            let mut smaller = cells.clone();
            smaller.remove(x);
            kleshchev_cells(scheme, m, &smaller)
        })
}

/// Plain recursive Kleshchev test. Panics at `q = 1`.
pub fn oracle_kleshchev(scheme: &ParamScheme, lambda: &Multipartition) -> bool {
    assert!(scheme.e() != 1, "oracle_kleshchev needs q != 1");
    kleshchev_cells(scheme, scheme.m(), &to_cells(lambda))
}

/// `q = 1`: every component `s` having some later `t` with `u_s = u_t` is empty.
pub fn oracle_q_one_simple(scheme: &ParamScheme, lambda: &Multipartition) -> bool {
    let m = scheme.m();
    let cells = to_cells(lambda);
    (1..=m).all(|s| {
        let repeated = (s + 1..=m).any(|t| value(scheme, s, 0) == value(scheme, t, 0));
        !repeated || !cells.iter().any(|&(k, _, _)| k == s)
    })
}

fn oracle_is_simple(scheme: &ParamScheme, lambda: &Multipartition) -> bool {
    if scheme.e() == 1 {
        oracle_q_one_simple(scheme, lambda)
    } else {
        oracle_kleshchev(scheme, lambda)
    }
}

fn content(scheme: &ParamScheme, cells: &Cells) -> Vec<Value> {
    let mut out: Vec<Value> = cells.iter().map(|x| cell_value(scheme, x)).collect();
    out.sort_unstable();
    out
}

fn component_content(scheme: &ParamScheme, cells: &Cells, k: usize) -> Vec<Value> {
    let mut out: Vec<Value> = cells
        .iter()
        .filter(|x| x.0 == k)
        .map(|x| cell_value(scheme, x))
        .collect();
    out.sort_unstable();
    out
}

/// Blocks by content equality, each block and the list of blocks sorted.
pub fn oracle_blocks(scheme: &ParamScheme, n: usize) -> Vec<Vec<Multipartition>> {
    let m = scheme.m();
    let mut groups: BTreeMap<Vec<Value>, Vec<Multipartition>> = BTreeMap::new();
    for cells in all_diagrams(m, n) {
        groups
            .entry(content(scheme, &cells))
            .or_default()
            .push(to_multipartition(m, &cells));
    }
    let mut blocks: Vec<Vec<Multipartition>> = groups
        .into_values()
        .map(|mut b| {
            b.sort();
            b
        })
        .collect();
    blocks.sort();
    blocks
}

fn kind_from_counts(simples: usize, total: usize) -> RegimeKind {
    if simples == total {
        RegimeKind::Semisimple
    } else if simples + 1 == total {
        RegimeKind::AlmostSemisimple
    } else {
        RegimeKind::Other
    }
}

/// Regime kind from oracle simple counts only.
pub fn oracle_kind(scheme: &ParamScheme, n: usize) -> (RegimeKind, usize, usize) {
    let all = oracle_multipartitions(scheme.m(), n);
    let simples = all.iter().filter(|l| oracle_is_simple(scheme, l)).count();
    (kind_from_counts(simples, all.len()), simples, all.len())
}

/// Pairs `(i, j)`, `i ≠ j`, with `u_j = q^{n−1} u_i`, lexicographic.
fn top_relations(scheme: &ParamScheme, n: usize) -> Vec<(usize, usize)> {
    let m = scheme.m();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i != j && value(scheme, j, 0) == value(scheme, i, n as i64 - 1) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The condition set characterising the regime: for `m ≥ 2`, exactly one
/// relation `u_j = q^c u_i` (`i < j`, `|c| < n`) and it has `|c| = n − 1`,
/// `q ≠ 1`, `[n]_q! ≠ 0`, `e = 0` or `e ≥ 2n − 1`, and the `u_i` pairwise
/// distinct. For `m = 1` the regime is `e = n`.
pub fn condition_set(scheme: &ParamScheme, n: usize) -> bool {
    let m = scheme.m();
    let e = scheme.e() as usize;
    if m == 1 {
        return e == n;
    }
    let mut relations = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for c in -(n as i64 - 1)..n as i64 {
                if value(scheme, j, 0) == value(scheme, i, c) {
                    relations.push(c);
                }
            }
        }
    }
    let distinct = (1..=m).all(|i| (i + 1..=m).all(|j| value(scheme, i, 0) != value(scheme, j, 0)));
    let q_factorial = e == 0 || e > n;
    relations.len() == 1
        && relations[0].unsigned_abs() as usize == n - 1
        && e != 1
        && q_factorial
        && (e == 0 || e >= 2 * n - 1)
        && distinct
}

/// The block lemmas, in the order they build on each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    /// For `k ∉ {i, j}` and `l ≠ k`, no `u_k = q^c u_l` with `|c| < n`.
    ParameterSeparation,
    /// Distinct components of one multipartition share no residue.
    ComponentDisjointness,
    /// A component is determined by its own content.
    ComponentRigidity,
    /// Equal contents agree on every component other than `i`, `j`.
    OuterComponentsAgree,
    /// If `a_1 + a_2 < n` then `u_i q^{a_1}` is not a residue of `α`.
    RowEndAbsent,
    /// Equal contents with `a_1 + a_2 < n` agree on component `i`.
    InnerComponentAgrees,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::ParameterSeparation,
        Lemma::ComponentDisjointness,
        Lemma::ComponentRigidity,
        Lemma::OuterComponentsAgree,
        Lemma::RowEndAbsent,
        Lemma::InnerComponentAgrees,
    ];
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::ParameterSeparation => "parameter_separation",
            Lemma::ComponentDisjointness => "component_disjointness",
            Lemma::ComponentRigidity => "component_rigidity",
            Lemma::OuterComponentsAgree => "outer_components_agree",
            Lemma::RowEndAbsent => "row_end_absent",
            Lemma::InnerComponentAgrees => "inner_component_agrees",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaResult {
    pub lemma: Lemma,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    /// The pair `(i, j)` with `u_j = q^{n−1} u_i` the lemmas were instantiated at.
    pub witness: Option<(usize, usize)>,
    pub results: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, lemma: Lemma) -> Option<&LemmaResult> {
        self.results.iter().find(|r| r.lemma == lemma)
    }
}

fn outcome(lemma: Lemma, counterexample: Option<String>) -> LemmaResult {
    LemmaResult {
        lemma,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn first_row(cells: &Cells, k: usize) -> usize {
    cells.iter().filter(|&&(c, r, _)| c == k && r == 1).count()
}

fn first_column(cells: &Cells, k: usize) -> usize {
    cells
        .iter()
        .filter(|&&(c, _, col)| c == k && col == 1)
        .count()
}

/// Instantiates each [`Lemma`] over every multipartition (and pair of
/// multipartitions) of `n`, at the first pair `(i, j)` with
/// `u_j = q^{n−1} u_i`.
pub fn verify_lemmas(scheme: &ParamScheme, n: usize) -> LemmaReport {
    let m = scheme.m();
    let Some(&(i, j)) = top_relations(scheme, n).first() else {
        return LemmaReport {
            witness: None,
            results: Lemma::ALL
                .into_iter()
                .map(|l| outcome(l, Some(format!("no pair with u_j = q^{} u_i", n - 1))))
                .collect(),
        };
    };
    let shown = |cells: &Cells| to_multipartition(m, cells).to_string();
    let diagrams: Vec<Cells> = all_diagrams(m, n).into_iter().collect();
    let contents: Vec<Vec<Value>> = diagrams.iter().map(|d| content(scheme, d)).collect();
    let others: Vec<usize> = (1..=m).filter(|&k| k != i && k != j).collect();
    let mut results = Vec::with_capacity(6);

    let found1 = others.iter().find_map(|&k| {
        (1..=m).filter(|&l| l != k).find_map(|l| {
            (-(n as i64 - 1)..n as i64)
                .find(|&c| value(scheme, k, 0) == value(scheme, l, c))
                .map(|c| format!("u_{k} = q^{c} u_{l}"))
        })
    });
    results.push(outcome(Lemma::ParameterSeparation, found1));

    let found2 = diagrams.iter().find_map(|d| {
        (1..=m).find_map(|r| {
            let left: BTreeSet<Value> = component_content(scheme, d, r).into_iter().collect();
            (r + 1..=m).find_map(|s| {
                component_content(scheme, d, s)
                    .iter()
                    .find(|x| left.contains(x))
                    .map(|x| format!("{}: components {r} and {s} share residue {x:?}", shown(d)))
            })
        })
    });
    results.push(outcome(Lemma::ComponentDisjointness, found2));

    let found3 = diagrams.iter().find_map(|a| {
        diagrams.iter().find_map(|b| {
            (1..=m).find_map(|k| {
                let same_content =
                    component_content(scheme, a, k) == component_content(scheme, b, k);
                let same_shape = a
                    .iter()
                    .filter(|x| x.0 == k)
                    .eq(b.iter().filter(|x| x.0 == k));
                (same_content && !same_shape)
                    .then(|| format!("{} vs {} at component {k}", shown(a), shown(b)))
            })
        })
    });
    results.push(outcome(Lemma::ComponentRigidity, found3));

    let equal_content_pairs: Vec<(usize, usize)> = (0..diagrams.len())
        .flat_map(|x| (0..diagrams.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| contents[x] == contents[y])
        .collect();

    let found4 = equal_content_pairs.iter().find_map(|&(x, y)| {
        others.iter().find_map(|&k| {
            let theirs = component_content(scheme, &diagrams[y], k);
            component_content(scheme, &diagrams[x], k)
                .into_iter()
                .find(|v| !theirs.contains(v))
                .map(|v| {
                    format!(
                        "{} vs {}: {v:?} missing from component {k}",
                        shown(&diagrams[x]),
                        shown(&diagrams[y])
                    )
                })
        })
    });
    results.push(outcome(Lemma::OuterComponentsAgree, found4));

    let found5 = diagrams.iter().zip(&contents).find_map(|(d, cont)| {
        let (a1, a2) = (first_row(d, i), first_column(d, j));
        let probe = value(scheme, i, a1 as i64);
        (a1 + a2 < n && cont.contains(&probe)).then(|| format!("{}: a1={a1}, a2={a2}", shown(d)))
    });
    results.push(outcome(Lemma::RowEndAbsent, found5));

    let found6 = equal_content_pairs.iter().find_map(|&(x, y)| {
        let (a, b) = (&diagrams[x], &diagrams[y]);
        if first_row(a, i) + first_column(a, j) >= n {
            return None;
        }
        let theirs = component_content(scheme, b, i);
        component_content(scheme, a, i)
            .into_iter()
            .find(|v| !theirs.contains(v))
            .map(|v| {
                format!(
                    "{} vs {}: {v:?} missing from component {i}",
                    shown(a),
                    shown(b)
                )
            })
    });
    results.push(outcome(Lemma::InnerComponentAgrees, found6));

    LemmaReport {
        witness: Some((i, j)),
        results,
    }
}

/// A finite family of parameter points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepGrid {
    pub m_range: RangeInclusive<usize>,
    pub n_range: RangeInclusive<usize>,
    /// Orders of `q` to visit; `None` means `0..=2n+1`.
    pub e_values: Option<Vec<u64>>,
    /// Shifts range over `[0, bound)`; `None` means `max(e, 2n)`.
    pub shift_bound: Option<i64>,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            m_range: 1..=3,
            n_range: 2..=4,
            e_values: None,
            shift_bound: None,
        }
    }
}

fn class_patterns(m: usize) -> Vec<Vec<u32>> {
    let mut patterns = vec![vec![0; m]];
    if m >= 2 {
        patterns.push((0..m as u32).collect());
    }
    if m >= 3 {
        // one merged pair, classes labelled in order of first appearance
        for a in 0..m {
            for b in a + 1..m {
                let mut p = Vec::with_capacity(m);
                let mut next = 0;
                for idx in 0..m {
                    if idx == b {
                        p.push(p[a]);
                    } else {
                        p.push(next);
                        next += 1;
                    }
                }
                patterns.push(p);
            }
        }
    }
    patterns
}

impl SweepGrid {
    /// Every `(n, scheme)` point in grid order: `m`, `n`, `e`, class
    /// pattern, then shifts lexicographically. Within each class the first
    /// member's shift is pinned to 0.
    pub fn points(&self) -> Vec<(usize, ParamScheme)> {
        let mut out = Vec::new();
        for m in self.m_range.clone() {
            for n in self.n_range.clone() {
                let orders: Vec<u64> = self
                    .e_values
                    .clone()
                    .unwrap_or_else(|| (0..=2 * n as u64 + 1).collect());
                for &e in &orders {
                    let bound = self.shift_bound.unwrap_or((e as i64).max(2 * n as i64));
                    for classes in class_patterns(m) {
                        let free: Vec<usize> = (0..m)
                            .filter(|&idx| classes[..idx].contains(&classes[idx]))
                            .collect();
                        let mut seen = BTreeSet::new();
                        let total = (bound.max(1) as usize).pow(free.len() as u32);
                        for code in 0..total {
                            let mut shifts = vec![0i64; m];
                            let mut rest = code;
                            for &idx in free.iter().rev() {
                                shifts[idx] = (rest % bound.max(1) as usize) as i64;
                                rest /= bound.max(1) as usize;
                            }
                            let scheme = ParamScheme::new(e, classes.clone(), shifts)
                                .expect("lengths agree");
                            if seen.insert(scheme.shifts().to_vec()) {
                                out.push((n, scheme));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn parse_range(input: &str, at: usize, text: &str) -> Result<RangeInclusive<usize>> {
    let number = |s: &str, offset: usize| {
        s.trim().parse::<usize>().map_err(|_| {
            Error::parse(
                input,
                at + offset,
                format!("expected a non-negative integer, got {s:?}"),
            )
        })
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok(number(lo, 0)?..=number(hi, lo.len() + 2)?),
        None => {
            let v = number(text, 0)?;
            Ok(v..=v)
        }
    }
}

impl FromStr for SweepGrid {
    type Err = Error;

    /// `m=1..3;n=2..4;e=0..5;shift=5`; every key is optional.
    fn from_str(s: &str) -> Result<Self> {
        let mut grid = SweepGrid::default();
        let mut offset = 0;
        for item in s.split(';') {
            let start = offset;
            offset += item.len() + 1;
            if item.trim().is_empty() {
                continue;
            }
            let Some((key, val)) = item.split_once('=') else {
                return Err(Error::parse(s, start, "expected key=value"));
            };
            let at = start + key.len() + 1;
            match key.trim() {
                "m" => grid.m_range = parse_range(s, at, val)?,
                "n" => grid.n_range = parse_range(s, at, val)?,
                "e" => grid.e_values = Some(parse_range(s, at, val)?.map(|e| e as u64).collect()),
                "shift" => {
                    let r = parse_range(s, at, val)?;
                    grid.shift_bound = Some(*r.end() as i64);
                }
                other => {
                    return Err(Error::parse(
                        s,
                        start,
                        format!("unknown grid key {other:?}"),
                    ))
                }
            }
        }
        if grid.m_range.is_empty() || *grid.m_range.start() == 0 {
            return Err(Error::InvalidInput("grid needs m >= 1".into()));
        }
        if grid.n_range.is_empty() || *grid.n_range.start() == 0 {
            return Err(Error::InvalidInput("grid needs n >= 1".into()));
        }
        Ok(grid)
    }
}

/// One grid point of [`regime_locus`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusRow {
    pub n: usize,
    pub scheme: ParamScheme,
    pub irreps: usize,
    pub oracle_kind: RegimeKind,
    pub oracle_count: usize,
    pub fast_kind: Option<RegimeKind>,
    pub fast_count: usize,
    /// Set when the fast classifier returned an error.
    pub fast_error: Option<String>,
    pub conditions: bool,
    pub ariki: bool,
    /// Labels where the fast and oracle simplicity verdicts differ.
    pub kleshchev_mismatches: usize,
    pub enumeration_mismatch: bool,
    pub block_mismatch: bool,
}

impl LocusRow {
    pub fn fast_agrees(&self) -> bool {
        self.fast_kind == Some(self.oracle_kind)
            && self.fast_count == self.oracle_count
            && self.kleshchev_mismatches == 0
            && !self.enumeration_mismatch
            && !self.block_mismatch
    }

    pub fn characterisation_holds(&self) -> bool {
        (self.oracle_kind == RegimeKind::AlmostSemisimple) == self.conditions
    }

    pub fn ariki_agrees(&self) -> bool {
        self.ariki == (self.fast_count == self.irreps)
    }
}

impl fmt::Display for LocusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fast = self
            .fast_kind
            .map_or_else(|| "error".to_string(), |k| k.to_string());
        write!(
            f,
            "m={} n={} scheme={} irreps={} oracle_kind={} fast_kind={} simples={} conditions={} ariki={} agree={}",
            self.scheme.m(),
            self.n,
            self.scheme,
            self.irreps,
            self.oracle_kind,
            fast,
            self.fast_count,
            self.conditions,
            self.ariki,
            self.fast_agrees() && self.characterisation_holds() && self.ariki_agrees()
        )
    }
}

fn locus_row(n: usize, scheme: ParamScheme) -> LocusRow {
    let m = scheme.m();
    let (oracle_kind, oracle_count, irreps) = oracle_kind(&scheme, n);
    let (fast_count, non_simple) = simple_count(&scheme, n);
    let (fast_kind, fast_error) = match classify_regime(&scheme, n) {
        Ok(report) => (Some(report.kind), None),
        Err(err) => (None, Some(err.to_string())),
    };

    let labels = crate::combinatorics::enumerate_multipartitions(m, n);
    let enumeration_mismatch =
        labels.iter().cloned().collect::<BTreeSet<_>>() != oracle_multipartitions(m, n);
    let kleshchev_mismatches = if scheme.q_is_one() {
        labels
            .iter()
            .filter(|l| q_one_simple(&scheme, l) != oracle_q_one_simple(&scheme, l))
            .count()
    } else {
        let mut solver = KleshchevSolver::new(&scheme).expect("q != 1");
        labels
            .iter()
            .filter(|l| solver.is_kleshchev(l) != oracle_kleshchev(&scheme, l))
            .count()
    } + usize::from(non_simple.len() + fast_count != labels.len());

    let block_mismatch = !scheme.q_is_one()
        && match block_partition(&scheme, n) {
            Ok(bp) => {
                let mut fast: Vec<Vec<Multipartition>> = bp
                    .blocks
                    .into_iter()
                    .map(|mut b| {
                        b.sort();
                        b
                    })
                    .collect();
                fast.sort();
                fast != oracle_blocks(&scheme, n)
            }
            Err(_) => true,
        };

    LocusRow {
        n,
        irreps,
        oracle_kind,
        oracle_count,
        fast_kind,
        fast_count,
        fast_error,
        conditions: condition_set(&scheme, n),
        ariki: ariki_semisimple(&scheme, n),
        kleshchev_mismatches,
        enumeration_mismatch,
        block_mismatch,
        scheme,
    }
}

/// Evaluates every grid point in parallel; rows come back in grid order.
pub fn regime_locus(grid: &SweepGrid) -> Vec<LocusRow> {
    grid.points()
        .into_par_iter()
        .map(|(n, scheme)| locus_row(n, scheme))
        .collect()
}

//! Exact symbolic Hecke parameters.
//!
//! A [`ParamScheme`] presents `(q, u_1, ..., u_m)` as
//! `u_i = q^{shift[i]} · v_{class[i]}` with the `v_c` multiplicatively
//! independent and `q` of multiplicative order `e` (`e = 0` for infinite
//! order, `e = 1` for `q = 1`). Residue equalities are then decided exactly.
//!
//! Rational Cherednik parameters `κ` enter through [`KappaInput`]: every
//! `q` and `u_i` is then a root of unity and lives in a finite cyclic group
//! `ℤ/L`, from which the scheme is read off.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::combinatorics::Node;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A residue `u_k q^d`, normalised as `(class[k], shift[k] + d)` with the
/// exponent reduced mod `e` when `e > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    pub class: u32,
    pub exp: i64,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.class, self.exp)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamScheme {
    e: u64,
    classes: Vec<u32>,
    shifts: Vec<i64>,
}

impl ParamScheme {
    pub fn new(e: u64, classes: Vec<u32>, shifts: Vec<i64>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::InvalidInput("scheme needs m >= 1".into()));
        }
        if classes.len() != shifts.len() {
            return Err(Error::InvalidInput(format!(
                "class has {} entries but shift has {}",
                classes.len(),
                shifts.len()
            )));
        }
        let mut scheme = ParamScheme { e, classes, shifts };
        for s in 0..scheme.shifts.len() {
            scheme.shifts[s] = scheme.reduce(scheme.shifts[s]);
        }
        Ok(scheme)
    }

    /// All `u_i` generic and independent, `q` of infinite order.
    pub fn generic(m: usize) -> Self {
        ParamScheme {
            e: 0,
            classes: (0..m as u32).collect(),
            shifts: vec![0; m],
        }
    }

    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// Multiplicative order of `q`; 0 means infinite.
    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn classes(&self) -> &[u32] {
        &self.classes
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn q_is_one(&self) -> bool {
        self.e == 1
    }

    fn reduce(&self, x: i64) -> i64 {
        if self.e == 0 {
            x
        } else {
            x.rem_euclid(self.e as i64)
        }
    }

    /// `q^c = 1`.
    pub fn q_power_is_one(&self, c: i64) -> bool {
        if self.e == 0 {
            c == 0
        } else {
            c.rem_euclid(self.e as i64) == 0
        }
    }

    /// Residue `u_k q^d` for 1-based `k`.
    pub fn residue(&self, k: usize, d: i64) -> Residue {
        Residue {
            class: self.classes[k - 1],
            exp: self.reduce(self.shifts[k - 1] + d),
        }
    }

    /// Whether `u_i = q^c u_j` (1-based indices).
    pub fn relation_holds(&self, i: usize, c: i64, j: usize) -> bool {
        self.residue(i, 0) == self.residue(j, c)
    }

    /// `[n]_q! ≠ 0`, i.e. no `1 < k ≤ n` with `q^k = 1` unless `q = 1`.
    pub fn q_factorial_nonzero(&self, n: usize) -> bool {
        self.e == 0 || self.e == 1 || self.e as usize > n
    }
}

impl fmt::Display for ParamScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "e={};class={};shift={}",
            self.e,
            join(self.classes.iter().map(ToString::to_string).collect()),
            join(self.shifts.iter().map(ToString::to_string).collect())
        )
    }
}

/// Splits `key=value;key=value` into `(key, value, value_offset)` triples.
fn key_values(s: &str) -> Result<Vec<(&str, &str, usize)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for field in s.split(';') {
        let here = offset;
        offset += field.len() + 1;
        if field.trim().is_empty() {
            continue;
        }
        let Some(eq) = field.find('=') else {
            return Err(Error::parse(s, here, "expected key=value"));
        };
        let key = field[..eq].trim();
        let value = &field[eq + 1..];
        out.push((key, value, here + eq + 1));
    }
    Ok(out)
}

fn split_list(value: &str, start: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut offset = start;
    for item in value.split(',') {
        out.push((item.trim().to_string(), offset));
        offset += item.len() + 1;
    }
    out
}

fn parse_int<T: FromStr>(s: &str, item: &str, pos: usize) -> Result<T> {
    item.parse()
        .map_err(|_| Error::parse(s, pos, format!("expected an integer, found {item:?}")))
}

fn parse_rational(s: &str, item: &str, pos: usize) -> Result<Rational> {
    let parsed = match item.split_once('/') {
        Some((num, den)) => {
            let num: i64 = parse_int(s, num.trim(), pos)?;
            let den: i64 = parse_int(s, den.trim(), pos)?;
            if den == 0 {
                return Err(Error::parse(s, pos, "zero denominator"));
            }
            Rational::new(num, den)
        }
        None => Rational::from_integer(parse_int(s, item, pos).map_err(|_| {
            Error::parse(s, pos, format!("expected a rational p/q, found {item:?}"))
        })?),
    };
    Ok(parsed)
}

impl FromStr for ParamScheme {
    type Err = Error;

    /// `e=<int>;class=<c1,..,cm>;shift=<s1,..,sm>`
    fn from_str(s: &str) -> Result<Self> {
        let mut e = None;
        let mut classes = None;
        let mut shifts = None;
        for (key, value, pos) in key_values(s)? {
            match key {
                "e" => e = Some(parse_int::<u64>(s, value.trim(), pos)?),
                "class" => {
                    classes = Some(
                        split_list(value, pos)
                            .into_iter()
                            .map(|(item, p)| parse_int::<u32>(s, &item, p))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "shift" => {
                    shifts = Some(
                        split_list(value, pos)
                            .into_iter()
                            .map(|(item, p)| parse_int::<i64>(s, &item, p))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                other => {
                    return Err(Error::parse(
                        s,
                        pos - other.len() - 1,
                        format!("unknown key {other:?}"),
                    ))
                }
            }
        }
        let e = e.ok_or_else(|| Error::parse(s, s.len(), "missing key e"))?;
        let classes = classes.ok_or_else(|| Error::parse(s, s.len(), "missing key class"))?;
        let shifts = shifts.unwrap_or_else(|| vec![0; classes.len()]);
        if shifts.len() != classes.len() {
            return Err(Error::parse(
                s,
                s.len(),
                format!(
                    "class has {} entries but shift has {}",
                    classes.len(),
                    shifts.len()
                ),
            ));
        }
        ParamScheme::new(e, classes, shifts)
    }
}

/// Residue of a node: `u_k q^{column - row}`.
pub fn residue_of(scheme: &ParamScheme, x: &Node) -> Residue {
    scheme.residue(x.component, x.column as i64 - x.row as i64)
}

/// All `c` with `|c| < n` and `u_i = q^c u_j` (1-based `i ≠ j`), ascending.
pub fn relation_exponents(scheme: &ParamScheme, i: usize, j: usize, n: usize) -> Vec<i64> {
    assert_ne!(i, j, "relation_exponents needs distinct indices");
    let n = n as i64;
    (-(n - 1)..n)
        .filter(|&c| scheme.relation_holds(i, c, j))
        .collect()
}

/// Rational Cherednik parameters `κ = (κ_00, κ_0 = 0, κ_1, ..., κ_{m-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaInput {
    pub m: usize,
    pub n: usize,
    pub kappa00: Rational,
    /// `κ_1, ..., κ_{m-1}`.
    pub kappa: Vec<Rational>,
}

/// `q` and the `u_i` as elements of `ℤ/modulus`, where `x` stands for
/// `exp(2πi x / modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicModel {
    pub modulus: i64,
    pub q: i64,
    pub u: Vec<i64>,
}

impl KappaInput {
    pub fn new(m: usize, n: usize, kappa00: Rational, kappa: Vec<Rational>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        if kappa.len() != m - 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} entries kappa_1..kappa_{{m-1}}, found {}",
                m - 1,
                kappa.len()
            )));
        }
        Ok(KappaInput {
            m,
            n,
            kappa00,
            kappa,
        })
    }

    /// `κ_t` with `κ_0 = 0` and indices read mod `m` (so `κ_m = κ_0`).
    pub fn kappa_at(&self, t: usize) -> Rational {
        match t % self.m {
            0 => Rational::from_integer(0),
            t => self.kappa[t - 1],
        }
    }

    /// `u_i = ε^{-(m-i+1)} exp(-2πi κ_{m-i+1})` and `q = exp(2πi κ_00)`
    /// as exponents in `ℤ/L`, `L = lcm(denominators) · m`.
    pub fn cyclic_model(&self) -> CyclicModel {
        let m = self.m as i64;
        let lcm = self
            .kappa
            .iter()
            .chain(std::iter::once(&self.kappa00))
            .fold(1i64, |acc, r| acc.lcm(r.denom()));
        let modulus = lcm * m;
        let scale = |r: Rational| -> i64 {
            let scaled = r * Rational::from_integer(modulus);
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        };
        let q = scale(self.kappa00).rem_euclid(modulus);
        let u = (1..=self.m)
            .map(|i| {
                let t = self.m - i + 1;
                let from_eps = -(t as i64) * (modulus / m);
                (from_eps - scale(self.kappa_at(t))).rem_euclid(modulus)
            })
            .collect();
        CyclicModel { modulus, q, u }
    }

    /// Parses `kappa00=<p/q>;kappa=<p1/q1,..>` with optional `m=` and `n=`
    /// keys; missing `m`/`n` fall back to the supplied defaults.
    pub fn parse_with(s: &str, m: Option<usize>, n: Option<usize>) -> Result<Self> {
        let mut m_key = None;
        let mut n_key = None;
        let mut kappa00 = None;
        let mut kappa = None;
        for (key, value, pos) in key_values(s)? {
            match key {
                "m" => m_key = Some(parse_int::<usize>(s, value.trim(), pos)?),
                "n" => n_key = Some(parse_int::<usize>(s, value.trim(), pos)?),
                "kappa00" => kappa00 = Some(parse_rational(s, value.trim(), pos)?),
                "kappa" => {
                    kappa = Some(if value.trim().is_empty() {
                        Vec::new()
                    } else {
                        split_list(value, pos)
                            .into_iter()
                            .map(|(item, p)| parse_rational(s, &item, p))
                            .collect::<Result<Vec<_>>>()?
                    })
                }
                other => {
                    return Err(Error::parse(
                        s,
                        pos - other.len() - 1,
                        format!("unknown key {other:?}"),
                    ))
                }
            }
        }
        let kappa00 = kappa00.ok_or_else(|| Error::parse(s, s.len(), "missing key kappa00"))?;
        let kappa = kappa.unwrap_or_default();
        let m = m_key.or(m).unwrap_or(kappa.len() + 1);
        let n = n_key
            .or(n)
            .ok_or_else(|| Error::parse(s, s.len(), "missing n (give n= or --n)"))?;
        if kappa.len() + 1 != m {
            return Err(Error::parse(
                s,
                s.len(),
                format!("m={m} needs {} kappa entries, found {}", m - 1, kappa.len()),
            ));
        }
        KappaInput::new(m, n, kappa00, kappa)
    }
}

impl FromStr for KappaInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KappaInput::parse_with(s, None, None)
    }
}

/// Reads off the scheme from the `ℤ/L` model: `e` is the order of `q`,
/// classes are cosets of `⟨q⟩`, shifts are discrete logarithms base `q`.
pub fn scheme_from_kappa(k: &KappaInput) -> ParamScheme {
    let model = k.cyclic_model();
    let modulus = model.modulus;
    // ⟨q⟩ = gℤ/L
    let g = model.q.gcd(&modulus);
    let e = (modulus / g) as u64;

    let mut classes: Vec<u32> = Vec::with_capacity(k.m);
    let mut shifts = Vec::with_capacity(k.m);
    let mut representatives: Vec<usize> = Vec::new();
    for i in 0..k.m {
        let found = representatives
            .iter()
            .position(|&r| (model.u[i] - model.u[r]).rem_euclid(g) == 0);
        let class = match found {
            Some(c) => c,
            None => {
                representatives.push(i);
                representatives.len() - 1
            }
        };
        let rep = representatives[class];
        let target = (model.u[i] - model.u[rep]).rem_euclid(modulus);
        let shift = (0..e as i64)
            .find(|&s| (s * model.q - target).rem_euclid(modulus) == 0)
            .expect("coset membership guarantees a discrete logarithm");
        classes.push(class as u32);
        shifts.push(shift);
    }
    ParamScheme::new(e, classes, shifts).expect("lengths agree by construction")
}

/// The positive integer `r` with `dim L(χ) = r^n`.
///
/// For `m ≥ 2`, `witness = (i, j)` are Hecke indices with `u_j = q^{n-1} u_i`.
/// They are converted to `κ` indices `p = m-i+1`, `s = m-j+1` (mod `m`), and
/// `(a, t)` is searched in lexicographic order so that
/// `m(κ_s − κ_p) + (−1)^a m(n−1)κ_00 = (p − s) + m t`. After normalising the
/// right-hand side to be negative, `r = −((p − s) + m t)`.
///
/// For `m = 1` there is no witness and `κ_00 = r/n`.
pub fn derive_r(k: &KappaInput, witness: Option<(usize, usize)>) -> Result<u64> {
    let n = k.n as i64;
    if k.m == 1 {
        let r = k.kappa00 * Rational::from_integer(n);
        if !r.is_integer() || r.to_integer() == 0 {
            return Err(Error::NoWitness);
        }
        return Ok(r.to_integer().unsigned_abs());
    }
    let (i, j) = witness.ok_or(Error::NoWitness)?;
    if i == j || i == 0 || j == 0 || i > k.m || j > k.m {
        return Err(Error::NoWitness);
    }
    let m = k.m as i64;
    let p = ((k.m - i + 1) % k.m) as i64;
    let s = ((k.m - j + 1) % k.m) as i64;
    let base = Rational::from_integer(m) * (k.kappa_at(s as usize) - k.kappa_at(p as usize));
    let twist = Rational::from_integer(m * (n - 1)) * k.kappa00;

    let bound = {
        let mag = |r: Rational| (r.numer().unsigned_abs() / r.denom().unsigned_abs()) as i64 + 1;
        n * m + mag(base) + mag(twist) + 1
    };
    for a in 0..2 {
        let lhs = if a == 0 { base + twist } else { base - twist };
        for t in -bound..=bound {
            if lhs == Rational::from_integer((p - s) + m * t) {
                let value = (p - s) + m * t;
                // value ≠ 0 because p ≢ s (mod m)
                return Ok(value.unsigned_abs());
            }
        }
    }
    Err(Error::NoWitness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(s: &str) -> ParamScheme {
        s.parse().unwrap()
    }

    #[test]
    fn residues() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        assert_eq!(
            residue_of(&sch, &Node::new(1, 1, 1)),
            Residue { class: 0, exp: 0 }
        );
        let r = residue_of(&sch, &Node::new(1, 1, 2));
        assert_eq!(r, Residue { class: 0, exp: 1 });
        assert_eq!(r, residue_of(&sch, &Node::new(2, 1, 1)));

        let periodic = scheme("e=3;class=0,1;shift=2,1");
        for k in 1..=2 {
            let x = residue_of(&periodic, &Node::new(k, 4, 1));
            assert_eq!(x.exp, periodic.shifts()[k - 1]);
        }
    }

    #[test]
    fn relations() {
        let sch = scheme("e=0;class=0,0;shift=0,1");
        assert_eq!(relation_exponents(&sch, 2, 1, 2), vec![1]);
        assert_eq!(relation_exponents(&sch, 1, 2, 2), vec![-1]);
        let distinct = scheme("e=0;class=0,1;shift=0,0");
        assert!(relation_exponents(&distinct, 1, 2, 4).is_empty());
        let mod3 = scheme("e=3;class=0,0;shift=0,2");
        assert_eq!(relation_exponents(&mod3, 2, 1, 2), vec![-1]);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "e=0;class=0,x;shift=0,1"
            .parse::<ParamScheme>()
            .unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 12),
            other => panic!("unexpected {other:?}"),
        }
        assert!("e=0;shift=0".parse::<ParamScheme>().is_err());
        assert!("e=0;class=0,0;shift=1".parse::<ParamScheme>().is_err());
        assert!("kappa00=1/0;n=2".parse::<KappaInput>().is_err());
        assert!("kappa00=0.5;n=2".parse::<KappaInput>().is_err());
    }

    #[test]
    fn scheme_round_trips_through_display() {
        let sch = scheme("e=5;class=0,1,0;shift=7,2,3");
        assert_eq!(sch.shifts(), &[2, 2, 3]);
        assert_eq!(sch.to_string().parse::<ParamScheme>().unwrap(), sch);
    }

    #[test]
    fn kappa_examples() {
        let k: KappaInput = "m=1;n=2;kappa00=1/2".parse().unwrap();
        let sch = scheme_from_kappa(&k);
        assert_eq!(
            (sch.e(), sch.classes(), sch.shifts()),
            (2, &[0][..], &[0][..])
        );

        let k: KappaInput = "m=2;n=2;kappa00=1/3;kappa=1/6".parse().unwrap();
        let sch = scheme_from_kappa(&k);
        assert_eq!(sch.e(), 3);
        assert_eq!(sch.classes(), &[0, 0]);
        assert_eq!(sch.shifts(), &[0, 1]);
        assert!(sch.relation_holds(2, 1, 1));

        let k: KappaInput = "m=3;n=2;kappa00=0;kappa=0,0".parse().unwrap();
        let sch = scheme_from_kappa(&k);
        assert_eq!(sch.e(), 1);
        assert_eq!(sch.classes(), &[0, 1, 2]);
    }

    #[test]
    fn r_values() {
        let k: KappaInput = "m=1;n=2;kappa00=1/2".parse().unwrap();
        assert_eq!(derive_r(&k, None), Ok(1));
        let k: KappaInput = "m=1;n=3;kappa00=2/3".parse().unwrap();
        assert_eq!(derive_r(&k, None), Ok(2));
        let k: KappaInput = "m=2;n=2;kappa00=1/3;kappa=1/6".parse().unwrap();
        assert_eq!(derive_r(&k, Some((1, 2))), Ok(1));
        assert_eq!(derive_r(&k, None), Err(Error::NoWitness));
    }
}

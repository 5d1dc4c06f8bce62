//! Monomials and monomial ideals with exact integer exponents.
//!
//! A `MonomialIdeal` always stores its unique minimal generating set in a
//! canonical order (total degree, then lex), so structural equality is ideal
//! equality. The zero ideal (no generators) and the unit ideal (single
//! all-zero generator) are explicit states.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{input_err, Error, Result};
use crate::rat::{is_nonnegative, rat_from_json, Rat};

/// Hard ambient limit: vertex sets are handled as 64-bit masks downstream.
pub const MAX_VARS: usize = 64;

/// Exponent vector of a monomial. Entries are nonnegative; arithmetic is
/// checked and surfaces overflow as an input error rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(exps: Vec<u64>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of coordinates with a positive exponent.
    pub fn support(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Componentwise domination: `self` divides `other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(
                a.checked_add(*b)
                    .ok_or_else(|| Error::Input("exponent overflow".into()))?,
            );
        }
        Ok(ExponentVector(out))
    }

    pub fn checked_scale(&self, k: u64) -> Result<ExponentVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(
                a.checked_mul(k)
                    .ok_or_else(|| Error::Input("exponent overflow".into()))?,
            );
        }
        Ok(ExponentVector(out))
    }

    /// Componentwise maximum, the exponent vector of the lcm.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn to_rat_point(&self) -> Vec<Rat> {
        self.0
            .iter()
            .map(|&e| Rat::from_integer(e.into()))
            .collect()
    }

    /// Canonical comparison: total degree first, then lex.
    pub fn cmp_deglex(&self, other: &ExponentVector) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Reduces a generator list to the unique antichain of componentwise-minimal
/// elements. Idempotent and independent of input order.
pub fn minimalize(gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    let mut sorted = gens;
    sorted.sort_by(|a, b| a.cmp_deglex(b));
    sorted.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in sorted {
        // A divisor has total degree <= deg(g), so it was already kept.
        if !kept.iter().any(|m| m.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub alpha: u64,
    pub omega: u64,
    pub equigenerated: bool,
}

/// A monomial ideal given by its minimal generators over a named variable set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<ExponentVector>) -> Result<Self> {
        if vars.is_empty() {
            return input_err("empty variable set");
        }
        if vars.len() > MAX_VARS {
            return input_err(format!("more than {MAX_VARS} variables"));
        }
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                if vars[i] == vars[j] {
                    return input_err(format!("duplicate variable name `{}`", vars[i]));
                }
            }
        }
        for g in &gens {
            if g.len() != vars.len() {
                return input_err(format!(
                    "generator has {} entries, ambient has {} variables",
                    g.len(),
                    vars.len()
                ));
            }
        }
        Ok(MonomialIdeal {
            vars,
            gens: minimalize(gens),
        })
    }

    pub fn zero(vars: Vec<String>) -> Result<Self> {
        Self::new(vars, Vec::new())
    }

    pub fn unit(vars: Vec<String>) -> Result<Self> {
        let n = vars.len();
        Self::new(vars, vec![ExponentVector::zero(n)])
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// True iff the monomial lies in the ideal (is dominated by a generator).
    pub fn contains_monomial(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Saturation at a set of variable indices: sets those coordinates to
    /// zero in every generator and re-minimalizes. The ambient variable set
    /// is kept fixed so valuations and polyhedra stay comparable.
    pub fn contract(&self, u: &[usize]) -> Result<MonomialIdeal> {
        for &i in u {
            if i >= self.num_vars() {
                return input_err(format!("variable index {i} out of range"));
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exps().to_vec();
                for &i in u {
                    e[i] = 0;
                }
                ExponentVector::new(e)
            })
            .collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    fn check_same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars != other.vars {
            return input_err("mismatched ambient variable sets");
        }
        Ok(())
    }

    /// Product ideal: pairwise sums of exponent vectors, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_add(b)?);
            }
        }
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// k-th power; the zeroth power is the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.vars.clone())?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection: componentwise maxima (lcm) of generator pairs.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Ideal sum: union of the generator lists.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.is_zero() {
            return input_err("degree statistics of the zero ideal");
        }
        let degrees: Vec<u64> = self.gens.iter().map(|g| g.total_degree()).collect();
        let alpha = *degrees.iter().min().unwrap();
        let omega = *degrees.iter().max().unwrap();
        Ok(DegreeStats {
            alpha,
            omega,
            equigenerated: alpha == omega,
        })
    }

    /// Renders one monomial over this ideal's variable names, e.g. `a^2bc`.
    pub fn monomial_string(&self, m: &ExponentVector) -> String {
        if m.is_zero() {
            return "1".to_string();
        }
        let single_char = self.vars.iter().all(|v| v.chars().count() == 1);
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let head = self.vars[i].clone();
            parts.push(if e == 1 {
                head
            } else {
                format!("{head}^{e}")
            });
        }
        parts.join(if single_char { "" } else { "*" })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.monomial_string(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One user-supplied symbolic-polyhedron inequality `coeffs . x >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpRow {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

/// Parsed input: an ideal, plus an optional H-representation of its symbolic
/// polyhedron. Non-squarefree ideals are accepted only with the latter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub ideal: MonomialIdeal,
    pub supplied_sp: Option<Vec<SpRow>>,
}

impl IdealDocument {
    pub fn squarefree(ideal: MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return input_err("non-squarefree ideal without a supplied symbolic polyhedron");
        }
        Ok(IdealDocument {
            ideal,
            supplied_sp: None,
        })
    }

    pub fn with_sp(ideal: MonomialIdeal, sp: Vec<SpRow>) -> Result<Self> {
        let n = ideal.num_vars();
        for row in &sp {
            if row.coeffs.len() != n {
                return input_err("symbolic-polyhedron row length does not match variable count");
            }
            if !row.coeffs.iter().all(is_nonnegative) || !is_nonnegative(&row.rhs) {
                return input_err("symbolic-polyhedron rows must have nonnegative entries");
            }
        }
        Ok(IdealDocument {
            ideal,
            supplied_sp: Some(sp),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealFormat {
    Terse,
    Json,
}

/// Parses either input format; generators are minimalized on the way in.
pub fn parse_ideal(text: &str, format: IdealFormat) -> Result<IdealDocument> {
    match format {
        IdealFormat::Terse => parse_terse(text),
        IdealFormat::Json => parse_json(text),
    }
}

/// Sniffs the format: JSON starts with `{`, anything else is terse.
pub fn parse_auto(text: &str) -> Result<IdealDocument> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_terse(text)
    }
}

/// Terse format: `<varstring>: <gen> <gen> ...` with single-character
/// variables and squarefree generators, e.g. `abc: ab ac bc`.
fn parse_terse(text: &str) -> Result<IdealDocument> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::Input("terse ideal needs a `:` after the variables".into()))?;
    let vars: Vec<String> = head
        .trim()
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_string())
        .collect();
    if vars.is_empty() {
        return input_err("empty variable string");
    }
    let mut gens = Vec::new();
    for word in tail.split_whitespace() {
        let mut exps = vec![0u64; vars.len()];
        for c in word.chars() {
            let idx = vars
                .iter()
                .position(|v| v == &c.to_string())
                .ok_or_else(|| Error::Input(format!("unknown variable `{c}` in `{word}`")))?;
            if exps[idx] > 0 {
                return input_err(format!(
                    "repeated variable `{c}` in terse generator `{word}` (terse generators are squarefree)"
                ));
            }
            exps[idx] = 1;
        }
        gens.push(ExponentVector::new(exps));
    }
    let ideal = MonomialIdeal::new(vars, gens)?;
    IdealDocument::squarefree(ideal)
}

/// JSON format: `{"vars": [...], "gens": [[int,...],...], "sp": [...]? }`,
/// rationals written as "p/q" strings or integers.
fn parse_json(text: &str) -> Result<IdealDocument> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("malformed JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Input("top-level JSON value must be an object".into()))?;

    let vars = obj
        .get("vars")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Input("missing or non-array `vars`".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Input("variable names must be strings".into()))
        })
        .collect::<Result<Vec<String>>>()?;

    let gens = obj
        .get("gens")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Input("missing or non-array `gens`".into()))?
        .iter()
        .map(|row| {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Input("each generator must be an array".into()))?;
            let exps = row
                .iter()
                .map(|e| {
                    e.as_u64()
                        .ok_or_else(|| Error::Input("exponent overflow or negative exponent".into()))
                })
                .collect::<Result<Vec<u64>>>()?;
            Ok(ExponentVector::new(exps))
        })
        .collect::<Result<Vec<ExponentVector>>>()?;

    let supplied = !matches!(obj.get("sp"), None | Some(serde_json::Value::Null));
    if !supplied && gens.iter().any(|g| !g.is_squarefree()) {
        // Checked on the raw list: a non-squarefree generator is rejected
        // even when minimalization would drop it.
        return input_err("non-squarefree generators without a supplied symbolic polyhedron");
    }
    let ideal = MonomialIdeal::new(vars, gens)?;

    match obj.get("sp") {
        None | Some(serde_json::Value::Null) => IdealDocument::squarefree(ideal),
        Some(sp) => {
            let rows = sp
                .as_array()
                .ok_or_else(|| Error::Input("`sp` must be an array of rows".into()))?
                .iter()
                .map(|row| {
                    let row = row
                        .as_object()
                        .ok_or_else(|| Error::Input("each `sp` row must be an object".into()))?;
                    let coeffs = row
                        .get("coeffs")
                        .and_then(|c| c.as_array())
                        .ok_or_else(|| Error::Input("`sp` row missing `coeffs`".into()))?
                        .iter()
                        .map(rat_from_json)
                        .collect::<Result<Vec<Rat>>>()?;
                    let rhs = rat_from_json(
                        row.get("rhs")
                            .ok_or_else(|| Error::Input("`sp` row missing `rhs`".into()))?,
                    )?;
                    Ok(SpRow { coeffs, rhs })
                })
                .collect::<Result<Vec<SpRow>>>()?;
            IdealDocument::with_sp(ideal, rows)
        }
    }
}

//! Brute-force ground truth, independent of the facet machinery: exact
//! symbolic powers via intersections of cover-prime powers, membership in
//! ordinary powers and integral closures, containment tables, resurgence
//! lower-bound witnesses and `K_r` values.
//!
//! Everything here is exponential in the worst case; all searches run under
//! explicit caps and report truncation loudly instead of answering
//! partially.

use std::collections::HashMap;

use crate::error::{cap_err, input_err, Result};
use crate::hypergraph::{bits, Hypergraph, VertexCover};
use crate::ideal::{minimalize, ExponentVector, MonomialIdeal};
use crate::polyhedra::np_membership;
use crate::rat::Rat;

/// Resource budgets. `max_gens` caps the generator count of any intermediate
/// or final ideal; `max_lattice` caps membership-LP calls in lattice-point
/// searches.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_gens: usize,
    pub max_lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_gens: 5000,
            max_lattice: 500_000,
        }
    }
}

/// Generators of `P^s` for a monomial prime `P`: all exponent vectors
/// supported on the cover with total degree `s`.
fn prime_power_gens(cover: &VertexCover, n: usize, s: u64) -> Vec<ExponentVector> {
    let verts: Vec<usize> = bits(cover.0).collect();
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    fn rec(
        verts: &[usize],
        pos: usize,
        remaining: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<ExponentVector>,
    ) {
        if pos + 1 == verts.len() {
            current[verts[pos]] = remaining;
            out.push(ExponentVector::new(current.clone()));
            current[verts[pos]] = 0;
            return;
        }
        for e in 0..=remaining {
            current[verts[pos]] = e;
            rec(verts, pos + 1, remaining - e, current, out);
        }
        current[verts[pos]] = 0;
    }
    rec(&verts, 0, s, &mut current, &mut out);
    out
}

/// The exact symbolic power `I^(s)` of a squarefree ideal: the intersection
/// of the `s`-th powers of its cover primes, merged smallest-first and
/// minimalized after every merge to contain intermediate blowup.
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    covers: &[VertexCover],
    s: u64,
    caps: &Caps,
) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return input_err("symbolic powers require a squarefree ideal");
    }
    if s == 0 {
        return MonomialIdeal::unit(ideal.vars().to_vec());
    }
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let n = ideal.num_vars();
    let mut factors: Vec<MonomialIdeal> = covers
        .iter()
        .map(|c| MonomialIdeal::new(ideal.vars().to_vec(), prime_power_gens(c, n, s)))
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by_key(|f| f.gens().len());
    let mut factors = factors.into_iter();
    let mut acc = match factors.next() {
        Some(first) => first,
        None => return input_err("symbolic power needs at least one cover"),
    };
    for f in factors {
        acc = acc.intersect(&f)?;
        if acc.gens().len() > caps.max_gens {
            return cap_err(format!(
                "symbolic power exceeded {} generators (set RESURGE_CAP_GENS to raise)",
                caps.max_gens
            ));
        }
    }
    Ok(acc)
}

/// Decides `m` in `I^r` by depth-`r` search over generators with
/// componentwise-residual pruning, memoized on (residual, depth).
pub fn in_ordinary_power(ideal: &MonomialIdeal, m: &ExponentVector, r: u64) -> Result<bool> {
    if m.len() != ideal.num_vars() {
        return input_err("monomial dimension mismatch");
    }
    if r == 0 {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    // Largest degrees first tends to fail fast on the residual.
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(|a, b| b.cmp_deglex(a));
    let alpha = gens.iter().map(|g| g.total_degree()).min().unwrap();

    fn search(
        gens: &[ExponentVector],
        alpha: u64,
        residual: &ExponentVector,
        depth: u64,
        memo: &mut HashMap<(Vec<u64>, u64), bool>,
    ) -> bool {
        if depth == 0 {
            return true;
        }
        if residual.total_degree() < alpha * depth {
            return false;
        }
        let key = (residual.exps().to_vec(), depth);
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut found = false;
        for g in gens {
            if g.divides(residual) {
                let next = ExponentVector::new(
                    residual
                        .exps()
                        .iter()
                        .zip(g.exps())
                        .map(|(a, b)| a - b)
                        .collect(),
                );
                if search(gens, alpha, &next, depth - 1, memo) {
                    found = true;
                    break;
                }
            }
        }
        memo.insert(key, found);
        found
    }

    let mut memo = HashMap::new();
    Ok(search(&gens, alpha, m, r, &mut memo))
}

/// Decides `m` in the integral closure of `I^r` via the Newton polyhedron:
/// the scaled exponent vector `m/r` must lie in `NP(I)`.
pub fn in_closure_power(ideal: &MonomialIdeal, m: &ExponentVector, r: u64) -> Result<bool> {
    if r == 0 {
        return Ok(true);
    }
    let scale = Rat::new(1.into(), r.into());
    let point: Vec<Rat> = m
        .exps()
        .iter()
        .map(|&e| Rat::from_integer(e.into()) * &scale)
        .collect();
    np_membership(ideal, &point)
}

/// One `(s, r)` cell of the containment problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentRecord {
    pub s: u64,
    pub r: u64,
    pub symbolic_in_ordinary: bool,
    pub symbolic_in_closure: bool,
    /// First generator of `I^(s)` (in degree-lex order) outside `I^r`.
    pub witness: Option<ExponentVector>,
}

#[derive(Debug, Clone)]
pub struct ContainmentTable {
    pub records: Vec<ContainmentRecord>,
    /// Symbolic powers that blew the generator cap; their rows are absent.
    pub truncated: Vec<u64>,
}

/// Checks every minimal generator of `I^(s)` for membership in `I^r` and in
/// the closure of `I^r`, for all cells up to the bounds.
pub fn containment_table(
    ideal: &MonomialIdeal,
    s_max: u64,
    r_max: u64,
    caps: &Caps,
) -> Result<ContainmentTable> {
    if s_max == 0 || r_max == 0 {
        return input_err("containment bounds must be at least 1");
    }
    let covers = Hypergraph::from_ideal(ideal)?.minimal_covers()?;
    let mut table = ContainmentTable {
        records: Vec::new(),
        truncated: Vec::new(),
    };
    for s in 1..=s_max {
        let symbolic = match symbolic_power(ideal, &covers, s, caps) {
            Ok(sym) => sym,
            Err(crate::error::Error::Cap(_)) => {
                table.truncated.push(s);
                continue;
            }
            Err(e) => return Err(e),
        };
        for r in 1..=r_max {
            let mut witness = None;
            for g in symbolic.gens() {
                if !in_ordinary_power(ideal, g, r)? {
                    witness = Some(g.clone());
                    break;
                }
            }
            let symbolic_in_ordinary = witness.is_none();
            let symbolic_in_closure = if symbolic_in_ordinary {
                true
            } else {
                let mut all = true;
                for g in symbolic.gens() {
                    if !in_closure_power(ideal, g, r)? {
                        all = false;
                        break;
                    }
                }
                all
            };
            table.records.push(ContainmentRecord {
                s,
                r,
                symbolic_in_ordinary,
                symbolic_in_closure,
                witness,
            });
        }
    }
    Ok(table)
}

#[derive(Debug, Clone)]
pub struct WitnessResult {
    /// Largest `s/r` with `I^(s)` not inside `I^r`; 1 when no cell failed.
    pub best_ratio: Rat,
    pub record: Option<ContainmentRecord>,
    pub truncated: Vec<u64>,
}

/// Best lower-bound witness for the resurgence within the given bounds.
/// Ties in the ratio are broken toward smaller `r`.
pub fn witness_search(
    ideal: &MonomialIdeal,
    s_max: u64,
    r_max: u64,
    caps: &Caps,
) -> Result<WitnessResult> {
    let table = containment_table(ideal, s_max, r_max, caps)?;
    let mut best: Option<ContainmentRecord> = None;
    for rec in table.records {
        if rec.symbolic_in_ordinary {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                let lhs = Rat::new(rec.s.into(), rec.r.into());
                let rhs = Rat::new(b.s.into(), b.r.into());
                lhs > rhs || (lhs == rhs && rec.r < b.r)
            }
        };
        if better {
            best = Some(rec);
        }
    }
    Ok(WitnessResult {
        best_ratio: best
            .as_ref()
            .map(|b| Rat::new(b.s.into(), b.r.into()))
            .unwrap_or_else(|| Rat::from_integer(1.into())),
        record: best,
        truncated: table.truncated,
    })
}

/// Minimal generators of the integral closure of `I^s`: the minimal lattice
/// points of `s . NP(I)`, found by a staircase search with feasibility and
/// dominance pruning, deciding membership by `np_membership` LPs.
pub fn closure_power_generators(
    ideal: &MonomialIdeal,
    s: u64,
    caps: &Caps,
) -> Result<Vec<ExponentVector>> {
    if ideal.is_zero() {
        return input_err("integral closure of a power of the zero ideal");
    }
    if s == 0 || ideal.is_unit() {
        return Ok(vec![ExponentVector::zero(ideal.num_vars())]);
    }
    let n = ideal.num_vars();
    // Minimal generators live in the box bounded by s times the
    // coordinatewise maximum of the generators.
    let bound: Vec<u64> = (0..n)
        .map(|j| s * ideal.gens().iter().map(|g| g.get(j)).max().unwrap())
        .collect();

    let mut budget = caps.max_lattice;
    let mut member = |point: &[u64]| -> Result<bool> {
        if budget == 0 {
            return cap_err("lattice search budget exhausted (set RESURGE_CAP_LATTICE to raise)");
        }
        budget -= 1;
        let scale = Rat::new(1.into(), s.into());
        let rational: Vec<Rat> = point
            .iter()
            .map(|&e| Rat::from_integer(e.into()) * &scale)
            .collect();
        np_membership(ideal, &rational)
    };

    fn descend(
        depth: usize,
        prefix: &mut Vec<u64>,
        bound: &[u64],
        found: &mut Vec<ExponentVector>,
        member: &mut dyn FnMut(&[u64]) -> Result<bool>,
    ) -> Result<()> {
        let n = bound.len();
        // Dominance: any completion of a prefix that already dominates a
        // collected point (whose tail is zero) is non-minimal.
        let dominated = found.iter().any(|w| {
            w.exps()[..depth]
                .iter()
                .zip(prefix[..depth].iter())
                .all(|(a, b)| a <= b)
                && w.exps()[depth..].iter().all(|&e| e == 0)
        });
        if dominated {
            return Ok(());
        }
        // Feasibility: the largest completion must already be a member.
        let mut roof = prefix.clone();
        roof[depth..].copy_from_slice(&bound[depth..]);
        if !member(&roof)? {
            return Ok(());
        }
        if depth + 1 == n {
            // Binary search the least feasible last coordinate.
            let (mut lo, mut hi) = (0u64, bound[depth]);
            while lo < hi {
                let mid = (lo + hi) / 2;
                prefix[depth] = mid;
                if member(prefix)? {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            prefix[depth] = lo;
            found.push(ExponentVector::new(prefix.clone()));
            prefix[depth] = 0;
            return Ok(());
        }
        for z in 0..=bound[depth] {
            prefix[depth] = z;
            descend(depth + 1, prefix, bound, found, member)?;
        }
        prefix[depth] = 0;
        Ok(())
    }

    if n == 1 {
        let (mut lo, mut hi) = (0u64, bound[0]);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if member(&[mid])? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return Ok(vec![ExponentVector::new(vec![lo])]);
    }

    let mut found: Vec<ExponentVector> = Vec::new();
    let mut prefix = vec![0u64; n];
    descend(0, &mut prefix, &bound, &mut found, &mut member)?;
    Ok(minimalize(found))
}

/// `K_r`: the least `s` with the closure of `I^s` inside `I^r`, searched up
/// to `min(s_cap, r + n - 1)`; beyond that bound the search is pointless
/// because `r + n - 1` always works. Returns `None` only when the search
/// range was exhausted without success (a budget question, not a
/// mathematical one).
pub fn compute_kr(ideal: &MonomialIdeal, r: u64, s_cap: u64, caps: &Caps) -> Result<Option<u64>> {
    if r == 0 {
        return input_err("K_r needs r >= 1");
    }
    if s_cap < r {
        return input_err("K_r search cap must be at least r");
    }
    let hard = r + ideal.num_vars() as u64 - 1;
    for s in r..=s_cap.min(hard) {
        let closure_gens = closure_power_generators(ideal, s, caps)?;
        let mut all = true;
        for g in &closure_gens {
            if !in_ordinary_power(ideal, g, r)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

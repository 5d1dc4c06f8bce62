//! The invariants themselves: Waldschmidt constant, skew Waldschmidt
//! constants and skew resurgences per Newton facet, the asymptotic
//! resurgence by two independent algorithms, and derived quantities
//! (fractional chromatic number, resurgence upper bounds, the odd-cycle
//! containment formula).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{input_err, internal_err, Result};
use crate::hypergraph::Hypergraph;
use crate::ideal::{ExponentVector, IdealDocument, MonomialIdeal};
use crate::polyhedra::{
    lp_minimize, newton_facets, symbolic_polyhedron_auto, HPolyhedron, HalfSpace, SkewValuation,
};
use crate::rat::{rat_string, Rat};

/// One Newton facet's worth of data: the valuation, its value on the ideal,
/// the skew Waldschmidt constant (an LP minimum over the symbolic
/// polyhedron, with an attaining point) and their ratio, the skew
/// resurgence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewResurgenceEntry {
    pub valuation: SkewValuation,
    pub v_ideal: Rat,
    pub v_hat: Rat,
    pub v_a: Rat,
    pub witness_point: Vec<Rat>,
}

/// Skew Waldschmidt constant and skew resurgence of a valuation supported
/// on the ideal. A valuation with `v(I) = 0` is rejected: its resurgence
/// data lives on the contraction at its zero set instead.
pub fn skew_waldschmidt(doc: &IdealDocument, v: &SkewValuation) -> Result<SkewResurgenceEntry> {
    let sp = symbolic_polyhedron_auto(doc)?;
    skew_waldschmidt_with_sp(doc, &sp, v)
}

fn skew_waldschmidt_with_sp(
    doc: &IdealDocument,
    sp: &HPolyhedron,
    v: &SkewValuation,
) -> Result<SkewResurgenceEntry> {
    let v_ideal = v.value_on_ideal(&doc.ideal)?;
    if v_ideal.is_zero() {
        return input_err(
            "valuation is not supported on the ideal (v(I) = 0); handle it on the contraction at its zero set",
        );
    }
    let (v_hat, witness_point) = lp_minimize(sp, v)?;
    if !v_hat.is_positive() {
        return internal_err("supported valuation has vanishing skew Waldschmidt constant");
    }
    let v_ideal = Rat::from_integer(v_ideal);
    let v_a = &v_ideal / &v_hat;
    debug_assert!(v_a >= Rat::one());
    Ok(SkewResurgenceEntry {
        valuation: v.clone(),
        v_ideal,
        v_hat,
        v_a,
        witness_point,
    })
}

/// Asymptotic resurgence by facet enumeration: one LP per defining
/// half-space of the Newton polyhedron, maximizing the skew resurgence.
/// Entries come back in canonical (coefficient-lex) order.
pub fn rho_a_facets(doc: &IdealDocument) -> Result<(Rat, Vec<SkewResurgenceEntry>)> {
    if doc.ideal.is_zero() || doc.ideal.is_unit() {
        return input_err("asymptotic resurgence of the zero or unit ideal");
    }
    let sp = symbolic_polyhedron_auto(doc)?;
    let facets = newton_facets(&doc.ideal)?;
    let mut entries = Vec::with_capacity(facets.len());
    for facet in &facets {
        entries.push(skew_waldschmidt_with_sp(doc, &sp, &facet.valuation)?);
    }
    let rho = entries
        .iter()
        .map(|e| e.v_a.clone())
        .max()
        .ok_or_else(|| crate::error::Error::Internal("no Newton facets".into()))?;
    Ok((rho, entries))
}

/// Asymptotic resurgence by the contraction recursion: the maximum of the
/// positive-definite facet resurgences and of the resurgences of all
/// variable contractions, memoized on the contracted generator sets.
/// Single-variable contractions suffice since contraction composes.
pub fn rho_a_recursive(ideal: &MonomialIdeal) -> Result<Rat> {
    if !ideal.is_squarefree() {
        return input_err("the contraction recursion requires a squarefree ideal");
    }
    if ideal.is_zero() {
        return input_err("asymptotic resurgence of the zero ideal");
    }
    let mut memo: HashMap<Vec<ExponentVector>, Rat> = HashMap::new();
    recurse(ideal, &mut memo)
}

fn recurse(ideal: &MonomialIdeal, memo: &mut HashMap<Vec<ExponentVector>, Rat>) -> Result<Rat> {
    if ideal.is_unit() {
        return Ok(Rat::one());
    }
    let key = ideal.gens().to_vec();
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }

    let mut best = Rat::one();
    let used: u64 = ideal.gens().iter().fold(0, |m, g| m | g.support());
    for i in crate::hypergraph::bits(used) {
        let contracted = ideal.contract(&[i])?;
        let sub = recurse(&contracted, memo)?;
        if sub > best {
            best = sub;
        }
    }

    // Contractions zero out coordinates but keep the ambient fixed, so
    // "positive definite" means positive on the variables the ideal
    // actually uses: the unused ones are invisible to its powers. A facet
    // with a zero coefficient on a used variable belongs to the contraction
    // at that variable instead.
    let facets = newton_facets(ideal)?;
    let positive: Vec<&HalfSpace> = facets
        .iter()
        .filter(|f| {
            crate::hypergraph::bits(used).all(|i| f.valuation.coeffs()[i].is_positive())
        })
        .collect();
    if !positive.is_empty() {
        let doc = IdealDocument::squarefree(ideal.clone())?;
        let sp = symbolic_polyhedron_auto(&doc)?;
        for facet in positive {
            let entry = skew_waldschmidt_with_sp(&doc, &sp, &facet.valuation)?;
            if entry.v_a > best {
                best = entry.v_a;
            }
        }
    }

    memo.insert(key, best.clone());
    Ok(best)
}

/// The Waldschmidt constant: the minimum of the degree functional over the
/// symbolic polyhedron.
pub fn waldschmidt(doc: &IdealDocument) -> Result<Rat> {
    let sp = symbolic_polyhedron_auto(doc)?;
    let degree = SkewValuation::degree(doc.ideal.num_vars());
    Ok(lp_minimize(&sp, &degree)?.0)
}

/// For edge ideals of graphs the asymptotic resurgence is `2 / alpha-hat`,
/// and the Waldschmidt constant determines the fractional chromatic number
/// via `alpha-hat = chi_f / (chi_f - 1)`.
pub fn edge_ideal_rho_a(graph: &Hypergraph) -> Result<(Rat, Rat)> {
    if !graph.is_graph() {
        return input_err("edge-ideal formula requires a graph (all edges of size 2)");
    }
    if graph.edges().is_empty() {
        return input_err("edge-ideal formula requires at least one edge");
    }
    let n = graph.num_vertices();
    let covers = graph.minimal_covers()?;
    let halfspaces = covers
        .iter()
        .map(|c| HalfSpace::new(SkewValuation::from_cover(c, n), Rat::one()))
        .collect::<Result<Vec<_>>>()?;
    let sp = HPolyhedron::new(n, halfspaces)?;
    let (alpha_hat, _) = lp_minimize(&sp, &SkewValuation::degree(n))?;
    if alpha_hat <= Rat::one() {
        return internal_err("graph with an edge must have alpha-hat > 1");
    }
    let rho_a = Rat::from_integer(2.into()) / &alpha_hat;
    let chi_f = &alpha_hat / (&alpha_hat - Rat::one());
    Ok((rho_a, chi_f))
}

/// Closed-form containment predicate for the edge ideal of an odd cycle on
/// `n = 2k + 1` vertices: `I^(s)` lies in `I^r` exactly when
/// `r < s - floor((s - (k+1)) / (n+1))`.
pub fn odd_cycle_containment(n: u64, s: u64, r: u64) -> Result<bool> {
    if n < 3 || n % 2 == 0 {
        return input_err("odd-cycle formula needs an odd cycle length >= 3");
    }
    if s == 0 || r == 0 {
        return input_err("containment indices must be positive");
    }
    let (n, s, r) = (n as i128, s as i128, r as i128);
    let k = (n - 1) / 2;
    let q = (s - (k + 1)).div_euclid(n + 1);
    Ok(r < s - q)
}

/// The per-`r` terms of the resurgence upper bound driven by `K_r` values,
/// plus a tail bound valid for every `r` beyond the supplied range.
#[derive(Debug, Clone)]
pub struct RhoUpperBound {
    /// `(r, (ceil(rho_a * K_r) - 1) / r)` for each supplied `K_r`.
    pub terms: Vec<(u64, Rat)>,
    pub tail_r: u64,
    /// Bound on every term past `tail_r - 1`, from the Briancon-Skoda cap
    /// `K_r <= r + n - 1` through the decreasing envelope
    /// `rho_a (r + n - 1) / r`.
    pub tail_bound: Rat,
}

impl RhoUpperBound {
    /// Largest finite term.
    pub fn term_bound(&self) -> Rat {
        self.terms
            .iter()
            .map(|(_, t)| t.clone())
            .max()
            .expect("at least one term")
    }

    /// Upper bound on the resurgence valid for every `r`.
    pub fn bound(&self) -> Rat {
        self.term_bound().max(self.tail_bound.clone())
    }
}

fn ceil_rat(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

/// Builds the upper-bound terms from `K_r` values for `r = 1..=kr.len()`.
pub fn rho_upper_bound(ideal: &MonomialIdeal, rho_a: &Rat, kr: &[u64]) -> Result<RhoUpperBound> {
    if kr.is_empty() {
        return input_err("upper bound needs at least K_1");
    }
    let mut terms = Vec::with_capacity(kr.len());
    for (i, &k) in kr.iter().enumerate() {
        let r = i as u64 + 1;
        let s_max = ceil_rat(&(rho_a * Rat::from_integer(k.into()))) - BigInt::one();
        terms.push((r, Rat::new(s_max, r.into())));
    }
    let tail_r = kr.len() as u64 + 1;
    let n = ideal.num_vars() as u64;
    let tail_bound = rho_a * Rat::new((tail_r + n - 1).into(), tail_r.into());
    Ok(RhoUpperBound {
        terms,
        tail_r,
        tail_bound,
    })
}

/// Tightens the per-`r` terms using confirmed containments: if
/// `I^(s) in I^r` is proven for the top `s` values under a term, lower `s`
/// takes its place as the largest conceivable witness. `confirmed(s, r)`
/// must return true only for proven containments (false means unknown).
/// Only terms above the running maximum are walked, so the oracle is never
/// asked about cells that cannot change the bound. Returns the refined
/// overall bound (still valid for every `r`).
pub fn refine_rho_upper_bound(
    bound: &RhoUpperBound,
    confirmed: &mut dyn FnMut(u64, u64) -> Result<bool>,
) -> Result<Rat> {
    let mut best = bound.tail_bound.clone();
    let mut by_value = bound.terms.clone();
    by_value.sort_by(|a, b| b.1.cmp(&a.1));
    for (r, term) in &by_value {
        if *term <= best {
            break;
        }
        let mut s = (term * Rat::from_integer((*r).into())).to_integer();
        while s.is_positive() {
            let s_u64 = u64::try_from(&s).expect("witness degree fits in u64");
            if !confirmed(s_u64, *r)? {
                break;
            }
            s -= BigInt::one();
        }
        let refined = Rat::new(s.max(BigInt::zero()), (*r).into());
        if refined > best {
            best = refined;
        }
    }
    Ok(best)
}

/// Everything the `report` command emits.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub alpha: u64,
    pub omega: u64,
    pub alpha_hat: Rat,
    pub rho_a: Rat,
    /// `alpha / alpha-hat`, the classical lower bound for `rho_a`.
    pub lower_bound: Rat,
    pub rho_upper: Option<Rat>,
    pub chi_f: Option<Rat>,
    pub entries: Vec<SkewResurgenceEntry>,
    pub method_agreement: Option<bool>,
}

impl InvariantReport {
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let facets = self
            .entries
            .iter()
            .map(|e| {
                let mut obj = e.valuation_json()?;
                let map = obj.as_object_mut().unwrap();
                map.insert("vI".into(), rat_string(&e.v_ideal).into());
                map.insert("vHat".into(), rat_string(&e.v_hat).into());
                map.insert("vA".into(), rat_string(&e.v_a).into());
                map.insert(
                    "witnessPoint".into(),
                    e.witness_point
                        .iter()
                        .map(|x| serde_json::Value::from(rat_string(x)))
                        .collect::<Vec<_>>()
                        .into(),
                );
                Ok(obj)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(serde_json::json!({
            "alpha": self.alpha,
            "omega": self.omega,
            "alphaHat": rat_string(&self.alpha_hat),
            "rhoA": rat_string(&self.rho_a),
            "rhoALowerBound": rat_string(&self.lower_bound),
            "rhoUpperBound": self.rho_upper.as_ref().map(rat_string),
            "chiF": self.chi_f.as_ref().map(rat_string),
            "facets": facets,
            "methodAgreement": self.method_agreement,
        }))
    }
}

impl SkewResurgenceEntry {
    fn valuation_json(&self) -> Result<serde_json::Value> {
        let coeffs = self
            .valuation
            .coeffs()
            .iter()
            .map(|c| {
                i64::try_from(c)
                    .map_err(|_| crate::error::Error::Internal("coefficient exceeds i64".into()))
            })
            .collect::<std::result::Result<Vec<i64>, _>>()?;
        Ok(serde_json::json!({ "coeffs": coeffs }))
    }
}

/// Assembles the full report. The recursion cross-check and the fractional
/// chromatic number apply to squarefree input only; the upper bound is
/// opt-in because it runs the symbolic-power oracle.
pub fn build_report(doc: &IdealDocument, upper_rmax: Option<u64>) -> Result<InvariantReport> {
    let stats = doc.ideal.degree_stats()?;
    let (rho_a, entries) = rho_a_facets(doc)?;
    let alpha_hat = waldschmidt(doc)?;
    let lower_bound = Rat::from_integer(stats.alpha.into()) / &alpha_hat;

    let method_agreement = if doc.ideal.is_squarefree() {
        let recursive = rho_a_recursive(&doc.ideal)?;
        Some(recursive == rho_a)
    } else {
        None
    };

    let chi_f = if doc.ideal.is_squarefree() && !doc.ideal.is_unit() {
        let graph = Hypergraph::from_ideal(&doc.ideal)?;
        if graph.is_graph() {
            Some(edge_ideal_rho_a(&graph)?.1)
        } else {
            None
        }
    } else {
        None
    };

    let rho_upper = match upper_rmax {
        None => None,
        Some(rmax) => {
            let caps = crate::oracle::Caps::default();
            let mut kr = Vec::new();
            for r in 1..=rmax {
                match crate::oracle::compute_kr(&doc.ideal, r, r + 6, &caps)? {
                    Some(k) => kr.push(k),
                    None => kr.push(r + doc.ideal.num_vars() as u64 - 1),
                }
            }
            Some(rho_upper_bound(&doc.ideal, &rho_a, &kr)?.bound())
        }
    };

    Ok(InvariantReport {
        alpha: stats.alpha,
        omega: stats.omega,
        alpha_hat,
        rho_a,
        lower_bound,
        rho_upper,
        chi_f,
        entries,
        method_agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rat::{rat, rat_int};

    fn val(coeffs: &[i64]) -> SkewValuation {
        SkewValuation::from_integers(coeffs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn skew_waldschmidt_examples() {
        let entry = skew_waldschmidt(&corpus::triangle(), &SkewValuation::degree(3)).unwrap();
        assert_eq!(entry.v_ideal, rat_int(2));
        assert_eq!(entry.v_hat, rat(3, 2));
        assert_eq!(entry.v_a, rat(4, 3));

        let entry = skew_waldschmidt(&corpus::jt(3).unwrap(), &val(&[1, 1, 1, 2])).unwrap();
        assert_eq!(entry.v_ideal, rat_int(3));
        assert_eq!(entry.v_hat, rat(7, 3));
        assert_eq!(entry.v_a, rat(9, 7));

        let entry = skew_waldschmidt(&corpus::fano(), &SkewValuation::degree(7)).unwrap();
        assert_eq!(entry.v_ideal, rat_int(3));
        assert_eq!(entry.v_hat, rat(7, 3));
        assert_eq!(entry.v_a, rat(9, 7));
    }

    #[test]
    fn unsupported_valuation_is_rejected() {
        let err = skew_waldschmidt(&corpus::triangle(), &val(&[1, 0, 0])).unwrap_err();
        assert!(matches!(err, crate::error::Error::Input(_)));
    }

    #[test]
    fn rho_a_facets_examples() {
        let (rho, entries) = rho_a_facets(&corpus::triangle()).unwrap();
        assert_eq!(rho, rat(4, 3));
        assert_eq!(entries.len(), 4);

        let (rho, _) = rho_a_facets(&corpus::fano()).unwrap();
        assert_eq!(rho, rat(9, 7));

        let (rho, _) = rho_a_facets(&corpus::jt(3).unwrap()).unwrap();
        assert_eq!(rho, rat(9, 7));

        let unit = IdealDocument::squarefree(
            MonomialIdeal::unit(vec!["x".into()]).unwrap(),
        )
        .unwrap();
        assert!(rho_a_facets(&unit).is_err());
    }

    #[test]
    fn rho_a_recursive_examples() {
        assert_eq!(
            rho_a_recursive(&corpus::jt(3).unwrap().ideal).unwrap(),
            rat(9, 7)
        );
        assert_eq!(rho_a_recursive(&corpus::triangle().ideal).unwrap(), rat(4, 3));

        let principal = crate::ideal::parse_ideal("abc: abc", crate::ideal::IdealFormat::Terse)
            .unwrap()
            .ideal;
        assert_eq!(rho_a_recursive(&principal).unwrap(), rat_int(1));
    }

    #[test]
    fn jt_contractions_all_contribute_one() {
        // Every proper contraction is a monomial complete intersection.
        let jt = corpus::jt(3).unwrap().ideal;
        for i in 0..4 {
            let sub = jt.contract(&[i]).unwrap();
            assert_eq!(rho_a_recursive(&sub).unwrap(), rat_int(1));
        }
    }

    #[test]
    fn waldschmidt_examples() {
        assert_eq!(waldschmidt(&corpus::coned_triangle()).unwrap(), rat(5, 2));
        assert_eq!(waldschmidt(&corpus::fano()).unwrap(), rat(7, 3));
        assert_eq!(waldschmidt(&corpus::cycle(5).unwrap()).unwrap(), rat(5, 3));
    }

    #[test]
    fn edge_ideal_examples() {
        let c5 = Hypergraph::from_ideal(&corpus::cycle(5).unwrap().ideal).unwrap();
        let (rho, chi) = edge_ideal_rho_a(&c5).unwrap();
        assert_eq!(rho, rat(6, 5));
        assert_eq!(chi, rat(5, 2));

        let edge = Hypergraph::from_ideal(
            &crate::ideal::parse_ideal("ab: ab", crate::ideal::IdealFormat::Terse)
                .unwrap()
                .ideal,
        )
        .unwrap();
        let (rho, chi) = edge_ideal_rho_a(&edge).unwrap();
        assert_eq!(rho, rat_int(1));
        assert_eq!(chi, rat_int(2));

        let two_cycles =
            Hypergraph::from_ideal(&corpus::disjoint_cycles(3, 5).unwrap().ideal).unwrap();
        let (rho, _) = edge_ideal_rho_a(&two_cycles).unwrap();
        assert_eq!(rho, rat(4, 3));

        let fano = Hypergraph::from_ideal(&corpus::fano().ideal).unwrap();
        assert!(edge_ideal_rho_a(&fano).is_err());
    }

    #[test]
    fn odd_cycle_formula() {
        assert!(odd_cycle_containment(5, 3, 2).unwrap());
        assert!(!odd_cycle_containment(5, 3, 3).unwrap());
        assert!(odd_cycle_containment(3, 3, 2).unwrap());
        assert!(!odd_cycle_containment(3, 2, 2).unwrap());
        assert!(odd_cycle_containment(3, 1, 1).unwrap());
        assert!(odd_cycle_containment(5, 6, 5).unwrap());
        assert!(odd_cycle_containment(3, 4, 3).unwrap());
        assert!(!odd_cycle_containment(3, 6, 5).unwrap());
        assert!(odd_cycle_containment(4, 2, 1).is_err());
        assert!(odd_cycle_containment(5, 0, 1).is_err());
    }

    #[test]
    fn upper_bound_for_a_normal_ideal() {
        // K_r = r: every finite term (r-1)/r stays below 1.
        let pair = crate::ideal::parse_ideal("ab: a b", crate::ideal::IdealFormat::Terse)
            .unwrap()
            .ideal;
        let bound = rho_upper_bound(&pair, &rat_int(1), &[1, 2, 3, 4]).unwrap();
        for (r, term) in &bound.terms {
            assert_eq!(*term, rat(*r as i64 - 1, *r as i64));
        }
        assert!(bound.term_bound() < rat_int(1));
        // The valid-for-all-r tail uses the Briancon-Skoda cap and only
        // approaches rho_a from above as the supplied range grows.
        assert_eq!(bound.tail_bound, rat(6, 5));
        assert!(rho_upper_bound(&pair, &rat_int(1), &[]).is_err());
    }

    #[test]
    fn fano_upper_bound_terms() {
        // K_1 = 1 (the ideal is integrally closed) and K_r <= r + 1 beyond:
        // the terms reproduce (ceil(9(r+1)/7) - 1)/r, which stays at or
        // below 3/2 except at r = 3.
        let fano = corpus::fano().ideal;
        let kr: Vec<u64> = (1..=12).map(|r| if r == 1 { 1 } else { r + 1 }).collect();
        let bound = rho_upper_bound(&fano, &rat(9, 7), &kr).unwrap();
        for (r, term) in &bound.terms {
            if *r == 3 {
                assert_eq!(*term, rat(5, 3));
            } else {
                assert!(*term <= rat(3, 2), "term at r={r} is {term}");
            }
        }
    }

    #[test]
    fn refinement_walks_confirmed_containments() {
        let fano = corpus::fano().ideal;
        let kr: Vec<u64> = (1..=12).map(|r| if r == 1 { 1 } else { r + 1 }).collect();
        let mut bound = rho_upper_bound(&fano, &rat(9, 7), &kr).unwrap();
        // Pretend the tail is covered so the test isolates the terms.
        bound.tail_bound = rat_int(1);
        let refined = refine_rho_upper_bound(&mut bound.clone(), &mut |s, r| {
            Ok(s == 5 && r == 3)
        })
        .unwrap();
        // The r=3 term drops from 5/3 to 4/3; r=2 now dominates at 3/2.
        assert_eq!(refined, rat(3, 2));
    }

    #[test]
    fn triangle_report() {
        let report = build_report(&corpus::triangle(), None).unwrap();
        assert_eq!(report.alpha, 2);
        assert_eq!(report.omega, 2);
        assert_eq!(report.alpha_hat, rat(3, 2));
        assert_eq!(report.rho_a, rat(4, 3));
        assert_eq!(report.lower_bound, rat(4, 3));
        assert_eq!(report.chi_f, Some(rat_int(3)));
        assert_eq!(report.method_agreement, Some(true));
        assert!(report.lower_bound >= rat_int(1));
        assert!(report.rho_a <= rat_int(report.omega as i64));

        let json = report.to_json().unwrap();
        assert_eq!(json["alphaHat"], "3/2");
        assert_eq!(json["rhoA"], "4/3");
        assert_eq!(json["chiF"], "3");
        assert_eq!(json["methodAgreement"], true);
        assert_eq!(json["facets"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn cremona_report_has_no_recursive_cross_check() {
        let report = build_report(&corpus::cremona(2).unwrap(), None).unwrap();
        assert_eq!(report.rho_a, rat(4, 3));
        assert_eq!(report.alpha_hat, rat(3, 2));
        assert_eq!(report.method_agreement, None);
        assert_eq!(report.chi_f, None);
    }
}

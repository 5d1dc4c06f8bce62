//! Exact polyhedral machinery: symbolic polyhedra in H-representation,
//! Newton-polyhedron facet enumeration, rational LP over both, membership
//! tests and coordinate projection.

pub mod dd;
pub mod lp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{input_err, internal_err, Result};
use crate::hypergraph::{bits, VertexCover};
use crate::ideal::{ExponentVector, IdealDocument, MonomialIdeal};
use crate::rat::{rat_string, Rat};

use lp::{Constraint, LpOutcome, Rel};

/// A nonnegative integer linear functional on exponent space, stored with
/// coprime coefficients (valuations are only meaningful up to scaling).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewValuation {
    coeffs: Vec<BigInt>,
}

impl SkewValuation {
    pub fn from_integers(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.iter().any(|c| c.is_negative()) {
            return input_err("skew valuation coefficients must be nonnegative");
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return input_err("skew valuation must not be identically zero");
        }
        let mut coeffs = coeffs;
        let mut g = BigInt::zero();
        for c in &coeffs {
            g = g.gcd(c);
        }
        if g > BigInt::one() {
            for c in coeffs.iter_mut() {
                *c /= &g;
            }
        }
        Ok(SkewValuation { coeffs })
    }

    /// Clears denominators and reduces to coprime integer coefficients.
    /// Returns the valuation together with the scaling factor applied, so
    /// half-space offsets can be rescaled consistently.
    pub fn from_rationals(coeffs: &[Rat]) -> Result<(Self, Rat)> {
        let lcm = crate::rat::denominator_lcm(coeffs);
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let before: Vec<BigInt> = ints.clone();
        let valuation = SkewValuation::from_integers(ints)?;
        // scale = primitive / original, read off any nonzero coordinate
        let j = before.iter().position(|c| !c.is_zero()).unwrap();
        let scale = Rat::new(valuation.coeffs[j].clone(), BigInt::one())
            / Rat::new(before[j].clone(), lcm);
        Ok((valuation, scale))
    }

    pub fn degree(n: usize) -> Self {
        SkewValuation {
            coeffs: vec![BigInt::one(); n],
        }
    }

    /// The cover functional: sum of the coordinates in the cover.
    pub fn from_cover(cover: &VertexCover, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        for i in bits(cover.0) {
            coeffs[i] = BigInt::one();
        }
        SkewValuation { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn eval_point(&self, point: &[Rat]) -> Rat {
        self.coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| Rat::from_integer(c.clone()) * x)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    pub fn eval_exponents(&self, m: &ExponentVector) -> BigInt {
        self.coeffs
            .iter()
            .zip(m.exps())
            .map(|(c, &e)| c * BigInt::from(e))
            .sum()
    }

    /// `v(I)`: the minimum of the valuation over the generators.
    pub fn value_on_ideal(&self, ideal: &MonomialIdeal) -> Result<BigInt> {
        if ideal.is_zero() {
            return input_err("valuation of the zero ideal");
        }
        Ok(ideal
            .gens()
            .iter()
            .map(|g| self.eval_exponents(g))
            .min()
            .unwrap())
    }

    fn rat_coeffs(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect()
    }
}

/// The half-space `{ x : v(x) >= c }` in the first orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    pub valuation: SkewValuation,
    pub offset: Rat,
}

impl HalfSpace {
    pub fn new(valuation: SkewValuation, offset: Rat) -> Result<Self> {
        if offset.is_negative() {
            return input_err("half-space offset must be nonnegative");
        }
        Ok(HalfSpace { valuation, offset })
    }

    /// From a rational inequality row, canonicalizing the coefficients to
    /// coprime integers and rescaling the offset to match.
    pub fn from_rational_row(coeffs: &[Rat], rhs: &Rat) -> Result<Self> {
        let (valuation, scale) = SkewValuation::from_rationals(coeffs)?;
        HalfSpace::new(valuation, rhs * scale)
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        self.valuation.eval_point(point) >= self.offset
    }

    fn sort_key(&self) -> (Vec<BigInt>, Rat) {
        (self.valuation.coeffs.clone(), self.offset.clone())
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let coeffs = self
            .valuation
            .coeffs
            .iter()
            .map(|c| {
                i64::try_from(c).map_err(|_| {
                    crate::error::Error::Internal("facet coefficient exceeds i64".into())
                })
            })
            .collect::<std::result::Result<Vec<i64>, _>>()?;
        Ok(serde_json::json!({
            "coeffs": coeffs,
            "rhs": rat_string(&self.offset),
        }))
    }

    /// Renders e.g. `a + 2b >= 3/2` over the given variable names.
    pub fn render(&self, vars: &[String]) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.valuation.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                terms.push(vars[i].clone());
            } else {
                terms.push(format!("{}{}", c, vars[i]));
            }
        }
        format!("{} >= {}", terms.join(" + "), rat_string(&self.offset))
    }
}

/// An intersection of half-spaces inside the first orthant (the orthant
/// constraints `x_i >= 0` are implicit and always present).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    n: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HPolyhedron {
    pub fn new(n: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        for h in &halfspaces {
            if h.valuation.len() != n {
                return input_err("half-space dimension mismatch");
            }
        }
        let mut halfspaces = halfspaces;
        halfspaces.sort_by_key(HalfSpace::sort_key);
        Ok(HPolyhedron { n, halfspaces })
    }

    pub fn num_coords(&self) -> usize {
        self.n
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        point.iter().all(|x| !x.is_negative())
            && self.halfspaces.iter().all(|h| h.contains(point))
    }

    fn lp_constraints(&self) -> Vec<Constraint> {
        self.halfspaces
            .iter()
            .map(|h| Constraint::new(h.valuation.rat_coeffs(), Rel::Ge, h.offset.clone()))
            .collect()
    }
}

/// The symbolic polyhedron: one half-space `sum_{i in P} x_i >= 1` per
/// minimal vertex cover, or the user-supplied H-representation verbatim
/// (then the covers are ignored).
pub fn symbolic_polyhedron(doc: &IdealDocument, covers: &[VertexCover]) -> Result<HPolyhedron> {
    let n = doc.ideal.num_vars();
    if let Some(rows) = &doc.supplied_sp {
        let halfspaces = rows
            .iter()
            .map(|row| HalfSpace::from_rational_row(&row.coeffs, &row.rhs))
            .collect::<Result<Vec<_>>>()?;
        return HPolyhedron::new(n, halfspaces);
    }
    if !doc.ideal.is_squarefree() {
        return input_err("non-squarefree ideal without a supplied symbolic polyhedron");
    }
    let halfspaces = covers
        .iter()
        .map(|cover| HalfSpace::new(SkewValuation::from_cover(cover, n), Rat::one()))
        .collect::<Result<Vec<_>>>()?;
    HPolyhedron::new(n, halfspaces)
}

/// Computes the covers itself when the document does not supply an SP.
/// The unit ideal's symbolic polyhedron is the whole orthant.
pub fn symbolic_polyhedron_auto(doc: &IdealDocument) -> Result<HPolyhedron> {
    if doc.supplied_sp.is_some() {
        return symbolic_polyhedron(doc, &[]);
    }
    if doc.ideal.is_zero() {
        return input_err("symbolic polyhedron of the zero ideal");
    }
    if doc.ideal.is_unit() {
        return HPolyhedron::new(doc.ideal.num_vars(), Vec::new());
    }
    let covers = crate::hypergraph::Hypergraph::from_ideal(&doc.ideal)?.minimal_covers()?;
    symbolic_polyhedron(doc, &covers)
}

/// Exact minimum of the valuation over the polyhedron, with an attaining
/// point. The objective is nonnegative on the first orthant, so an
/// unbounded or infeasible outcome is an internal error.
pub fn lp_minimize(p: &HPolyhedron, v: &SkewValuation) -> Result<(Rat, Vec<Rat>)> {
    if v.len() != p.num_coords() {
        return input_err("valuation dimension mismatch");
    }
    match lp::minimize(&v.rat_coeffs(), &p.lp_constraints()) {
        LpOutcome::Optimal { value, point } => Ok((value, point)),
        LpOutcome::Infeasible => internal_err("cover polyhedron reported infeasible"),
        LpOutcome::Unbounded => internal_err("nonnegative objective reported unbounded"),
    }
}

/// The irredundant defining half-spaces of the Newton polyhedron
/// `NP(I) = conv(gens) + orthant`, excluding the first-orthant facets.
/// Coefficients are coprime integers; each offset equals `v(I)`.
pub fn newton_facets(ideal: &MonomialIdeal) -> Result<Vec<HalfSpace>> {
    if ideal.is_zero() {
        return input_err("Newton polyhedron of the zero ideal");
    }
    let n = ideal.num_vars();
    if n + ideal.gens().len() + 1 > 128 {
        return crate::error::cap_err("facet enumeration limited to 128 total constraints");
    }
    let gens: Vec<Vec<BigInt>> = ideal
        .gens()
        .iter()
        .map(|g| g.exps().iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let mut facets = Vec::new();
    for (coeffs, c) in dd::newton_facet_rays(&gens, n) {
        let valuation = SkewValuation::from_integers(coeffs)?;
        debug_assert_eq!(
            valuation.value_on_ideal(ideal).unwrap(),
            c,
            "facet offset must be the valuation of the ideal"
        );
        facets.push(HalfSpace::new(valuation, Rat::from_integer(c))?);
    }
    facets.sort_by_key(HalfSpace::sort_key);
    Ok(facets)
}

/// Membership of a rational point in `NP(I)`, decided directly as an LP:
/// is the point componentwise above a convex combination of the generators?
/// Needs no facet list, so it serves as an independent check of
/// `newton_facets`.
pub fn np_membership(ideal: &MonomialIdeal, point: &[Rat]) -> Result<bool> {
    let n = ideal.num_vars();
    if point.len() != n {
        return input_err("point dimension mismatch");
    }
    if point.iter().any(|x| x.is_negative()) {
        return input_err("point must have nonnegative entries");
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    let k = ideal.gens().len();
    let mut constraints = Vec::with_capacity(n + 1);
    constraints.push(Constraint::new(vec![Rat::one(); k], Rel::Eq, Rat::one()));
    for j in 0..n {
        let row: Vec<Rat> = ideal
            .gens()
            .iter()
            .map(|g| Rat::from_integer(g.get(j).into()))
            .collect();
        constraints.push(Constraint::new(row, Rel::Le, point[j].clone()));
    }
    Ok(lp::feasible(k, &constraints))
}

/// Fourier-Motzkin elimination of one coordinate. Every half-space here has
/// nonnegative coefficients, so the eliminated variable has no upper bound
/// and elimination reduces to dropping the constraints that mention it;
/// redundancy removal then prunes the rest.
pub fn project_out(p: &HPolyhedron, i: usize) -> Result<HPolyhedron> {
    if i >= p.num_coords() {
        return input_err(format!("coordinate {i} out of range"));
    }
    let kept: Vec<HalfSpace> = p
        .halfspaces
        .iter()
        .filter(|h| h.valuation.coeffs[i].is_zero())
        .map(|h| {
            let mut coeffs = h.valuation.coeffs.clone();
            coeffs.remove(i);
            HalfSpace::new(
                SkewValuation::from_integers(coeffs).expect("projected valuation stays nonzero"),
                h.offset.clone(),
            )
            .expect("offset unchanged")
        })
        .collect();
    HPolyhedron::new(p.num_coords() - 1, remove_redundant(p.num_coords() - 1, kept))
}

/// Keeps exactly the half-spaces whose removal strictly enlarges the
/// polyhedron, testing each with one LP against the others. Exact
/// duplicates and dominated parallel copies are folded first.
pub fn remove_redundant(n: usize, halfspaces: Vec<HalfSpace>) -> Vec<HalfSpace> {
    debug_assert!(halfspaces.iter().all(|h| h.valuation.len() == n));
    let mut active: Vec<HalfSpace> = Vec::new();
    for h in halfspaces {
        match active
            .iter_mut()
            .find(|a| a.valuation == h.valuation)
        {
            Some(a) => {
                if h.offset > a.offset {
                    a.offset = h.offset;
                }
            }
            None => active.push(h),
        }
    }
    active.sort_by_key(HalfSpace::sort_key);

    let mut idx = 0;
    while idx < active.len() {
        let candidate = active[idx].clone();
        let others: Vec<Constraint> = active
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, h)| Constraint::new(h.valuation.rat_coeffs(), Rel::Ge, h.offset.clone()))
            .collect();
        let outcome = lp::minimize(&candidate.valuation.rat_coeffs(), &others);
        let redundant = match outcome {
            LpOutcome::Optimal { value, .. } => value >= candidate.offset,
            // A nonnegative functional cannot be unbounded below on the
            // orthant, and the orthant is never empty.
            _ => unreachable!("redundancy LP is always bounded and feasible"),
        };
        if redundant {
            active.remove(idx);
        } else {
            idx += 1;
        }
    }
    active
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::ideal::{parse_ideal, IdealFormat};
    use crate::rat::{rat, rat_int};

    fn doc(text: &str) -> IdealDocument {
        parse_ideal(text, IdealFormat::Terse).unwrap()
    }

    fn val(coeffs: &[i64]) -> SkewValuation {
        SkewValuation::from_integers(coeffs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    fn hs(coeffs: &[i64], num: i64, den: i64) -> HalfSpace {
        HalfSpace::new(val(coeffs), rat(num, den)).unwrap()
    }

    fn sp(text: &str) -> HPolyhedron {
        symbolic_polyhedron_auto(&doc(text)).unwrap()
    }

    fn cremona(d: i64) -> IdealDocument {
        let text = format!(
            r#"{{"vars":["x","y","z"],"gens":[[{d},0,0],[{},1,0],[0,{},1]],
                "sp":[{{"coeffs":[{},{d},0],"rhs":{}}},{{"coeffs":[1,0,{}],"rhs":{}}}]}}"#,
            d - 1,
            d - 1,
            d - 1,
            d * (d - 1),
            d - 1,
            d - 1
        );
        parse_ideal(&text, IdealFormat::Json).unwrap()
    }

    #[test]
    fn valuation_canonical_scaling() {
        let (v, scale) = SkewValuation::from_rationals(&[rat(1, 2), rat(1, 3)]).unwrap();
        assert_eq!(v, val(&[3, 2]));
        assert_eq!(scale, rat_int(6));
        assert!(SkewValuation::from_rationals(&[rat_int(0), rat_int(0)]).is_err());
        assert!(SkewValuation::from_rationals(&[rat_int(-1), rat_int(1)]).is_err());
        assert_eq!(val(&[2, 4, 6]), val(&[1, 2, 3]));
    }

    #[test]
    fn symbolic_polyhedron_of_triangle() {
        let p = sp("abc: ab ac bc");
        assert_eq!(
            p.halfspaces(),
            &[hs(&[0, 1, 1], 1, 1), hs(&[1, 0, 1], 1, 1), hs(&[1, 1, 0], 1, 1)]
        );
    }

    #[test]
    fn symbolic_polyhedron_of_jt() {
        let p = sp("wxyz: wz xz yz wxy");
        assert_eq!(
            p.halfspaces(),
            &[
                hs(&[0, 0, 1, 1], 1, 1),
                hs(&[0, 1, 0, 1], 1, 1),
                hs(&[1, 0, 0, 1], 1, 1),
                hs(&[1, 1, 1, 0], 1, 1),
            ]
        );
    }

    #[test]
    fn supplied_sp_is_used_verbatim() {
        let p = symbolic_polyhedron_auto(&cremona(2)).unwrap();
        assert_eq!(
            p.halfspaces(),
            &[hs(&[1, 0, 1], 1, 1), hs(&[1, 2, 0], 2, 1)]
        );
    }

    #[test]
    fn lp_minimize_examples() {
        let (value, point) = lp_minimize(&sp("abc: ab ac bc"), &SkewValuation::degree(3)).unwrap();
        assert_eq!(value, rat(3, 2));
        assert_eq!(point, vec![rat(1, 2), rat(1, 2), rat(1, 2)]);

        let (value, point) = lp_minimize(&sp("wxyz: wz xz yz wxy"), &val(&[1, 1, 1, 2])).unwrap();
        assert_eq!(value, rat(7, 3));
        assert_eq!(point, vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(2, 3)]);

        for d in 2..=4 {
            let p = symbolic_polyhedron_auto(&cremona(d)).unwrap();
            let (value, _) = lp_minimize(&p, &SkewValuation::degree(3)).unwrap();
            assert_eq!(value, rat(d * d - 1, d), "Cremona d={d}");
        }
    }

    #[test]
    fn newton_facets_of_triangle() {
        let ideal = doc("abc: ab ac bc").ideal;
        let facets = newton_facets(&ideal).unwrap();
        assert_eq!(
            facets,
            vec![
                hs(&[0, 1, 1], 1, 1),
                hs(&[1, 0, 1], 1, 1),
                hs(&[1, 1, 0], 1, 1),
                hs(&[1, 1, 1], 2, 1),
            ]
        );
    }

    #[test]
    fn newton_facets_of_jt_and_principal() {
        let ideal = doc("wxyz: wz xz yz wxy").ideal;
        let facets = newton_facets(&ideal).unwrap();
        assert!(facets.contains(&hs(&[1, 1, 1, 2], 3, 1)));

        let principal = doc("ab: ab").ideal;
        assert_eq!(
            newton_facets(&principal).unwrap(),
            vec![hs(&[0, 1], 1, 1), hs(&[1, 0], 1, 1)]
        );

        let unit = crate::ideal::MonomialIdeal::unit(vec!["x".into(), "y".into()]).unwrap();
        assert!(newton_facets(&unit).unwrap().is_empty());
        let zero = crate::ideal::MonomialIdeal::zero(vec!["x".into()]).unwrap();
        assert!(newton_facets(&zero).is_err());
    }

    #[test]
    fn np_membership_examples() {
        let triangle = doc("abc: ab ac bc").ideal;
        let half = vec![rat(1, 2), rat(1, 2), rat(1, 2)];
        assert!(!np_membership(&triangle, &half).unwrap());

        let two_thirds = vec![rat(2, 3), rat(2, 3), rat(2, 3)];
        assert!(np_membership(&triangle, &two_thirds).unwrap());

        for g in triangle.gens() {
            assert!(np_membership(&triangle, &g.to_rat_point()).unwrap());
        }

        assert!(np_membership(&triangle, &[rat_int(1)]).is_err());
        assert!(np_membership(&triangle, &[rat_int(-1), rat_int(0), rat_int(0)]).is_err());
    }

    #[test]
    fn membership_agrees_with_facet_inequalities() {
        let ideal = doc("wxyz: wz xz yz wxy").ideal;
        let facets = newton_facets(&ideal).unwrap();
        let grid: Vec<Rat> = (0..=6).map(|i| rat(i, 3)).collect();
        for a in &grid {
            for b in &grid {
                let point = vec![a.clone(), b.clone(), rat(1, 3), rat(2, 3)];
                let by_facets = facets.iter().all(|h| h.contains(&point));
                let by_lp = np_membership(&ideal, &point).unwrap();
                assert_eq!(by_facets, by_lp, "at {point:?}");
            }
        }
    }

    #[test]
    fn project_out_examples() {
        let p = sp("abc: ab ac bc");
        let projected = project_out(&p, 0).unwrap();
        assert_eq!(projected.halfspaces(), &[hs(&[1, 1], 1, 1)]);

        // Eliminating a coordinate absent from every half-space keeps them.
        let q = HPolyhedron::new(3, vec![hs(&[1, 1, 0], 1, 1)]).unwrap();
        let projected = project_out(&q, 2).unwrap();
        assert_eq!(projected.halfspaces(), &[hs(&[1, 1], 1, 1)]);

        let p = sp("wxyz: wz xz yz wxy");
        let projected = project_out(&p, 3).unwrap();
        assert_eq!(projected.halfspaces(), &[hs(&[1, 1, 1], 1, 1)]);

        assert!(project_out(&q, 5).is_err());
    }

    #[test]
    fn remove_redundant_examples() {
        let reduced = remove_redundant(2, vec![hs(&[1, 1], 1, 1), hs(&[1, 1], 1, 2)]);
        assert_eq!(reduced, vec![hs(&[1, 1], 1, 1)]);

        let reduced = remove_redundant(
            3,
            vec![
                hs(&[1, 1, 0], 1, 1),
                hs(&[1, 0, 1], 1, 1),
                hs(&[0, 1, 1], 1, 1),
                hs(&[1, 1, 1], 3, 2),
            ],
        );
        assert_eq!(
            reduced,
            vec![hs(&[0, 1, 1], 1, 1), hs(&[1, 0, 1], 1, 1), hs(&[1, 1, 0], 1, 1)]
        );

        assert!(remove_redundant(4, Vec::new()).is_empty());
    }

    #[test]
    fn newton_facets_are_already_irredundant() {
        for text in ["abc: ab ac bc", "wxyz: wz xz yz wxy", "abcde: ab bc cd de ea"] {
            let ideal = doc(text).ideal;
            let facets = newton_facets(&ideal).unwrap();
            let reduced = remove_redundant(ideal.num_vars(), facets.clone());
            assert_eq!(facets, reduced, "on {text}");
        }
    }

    #[test]
    fn cover_halfspaces_contain_the_newton_polyhedron() {
        // Every cover half-space H_{v_P,1} is valid for NP: v_P(I) >= 1.
        for text in ["abc: ab ac bc", "abcdefg: abd bce cdf aef acg deg bfg"] {
            let d = doc(text);
            let covers = Hypergraph::from_ideal(&d.ideal)
                .unwrap()
                .minimal_covers()
                .unwrap();
            for cover in covers {
                let v = SkewValuation::from_cover(&cover, d.ideal.num_vars());
                assert!(v.value_on_ideal(&d.ideal).unwrap() >= BigInt::one());
            }
        }
    }

    #[test]
    fn facet_json_shape() {
        let json = hs(&[1, 1, 1], 3, 2).to_json().unwrap();
        assert_eq!(
            json,
            serde_json::json!({"coeffs": [1, 1, 1], "rhs": "3/2"})
        );
    }
}

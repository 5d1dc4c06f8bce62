// Scratch debugging for a method disagreement (not shipped).
use resurge::ideal::{parse_ideal, IdealFormat};
use resurge::polyhedra::{lp_minimize, newton_facets, symbolic_polyhedron_auto};
use resurge::{invariants, rat::rat_string};

fn main() {
    let doc = parse_ideal("abcde: cd be bc ace", IdealFormat::Terse).unwrap();
    let (rho_f, entries) = invariants::rho_a_facets(&doc).unwrap();
    println!("facets method: {}", rat_string(&rho_f));
    for e in &entries {
        println!(
            "  v = {:?}  vI = {}  vHat = {}  vA = {}",
            e.valuation.coeffs(),
            rat_string(&e.v_ideal),
            rat_string(&e.v_hat),
            rat_string(&e.v_a)
        );
    }
    let rho_r = invariants::rho_a_recursive(&doc.ideal).unwrap();
    println!("recursive method: {}", rat_string(&rho_r));

    // Recursion internals: all single-variable contractions.
    for i in 0..5 {
        let sub = doc.ideal.contract(&[i]).unwrap();
        let r = invariants::rho_a_recursive(&sub).unwrap();
        println!("  contract {i}: {sub} -> {}", rat_string(&r));
    }
    let facets = newton_facets(&doc.ideal).unwrap();
    println!("facets of NP:");
    for f in facets {
        println!(
            "  {:?} >= {} (posdef: {})",
            f.valuation.coeffs(),
            rat_string(&f.offset),
            f.valuation.is_positive_definite()
        );
    }
    let sp = symbolic_polyhedron_auto(&doc).unwrap();
    println!("SP:");
    for h in sp.halfspaces() {
        println!("  {:?} >= {}", h.valuation.coeffs(), rat_string(&h.offset));
    }
    let (v, p) = lp_minimize(&sp, &resurge::polyhedra::SkewValuation::degree(5)).unwrap();
    println!("alphaHat = {} at {:?}", rat_string(&v), p);
}

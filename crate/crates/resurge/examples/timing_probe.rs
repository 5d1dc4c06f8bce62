// Scratch probe for the heavy corpus computations (not shipped).
use std::time::Instant;

use resurge::hypergraph::Hypergraph;
use resurge::{corpus, invariants, oracle};

fn main() {
    let caps = oracle::Caps::default();

    let t = Instant::now();
    let fano = corpus::fano();
    let covers = Hypergraph::from_ideal(&fano.ideal)
        .unwrap()
        .minimal_covers()
        .unwrap();
    let s5 = oracle::symbolic_power(&fano.ideal, &covers, 5, &caps).unwrap();
    println!("fano s=5: {} gens in {:?}", s5.gens().len(), t.elapsed());

    let t = Instant::now();
    let mut ok = true;
    for g in s5.gens() {
        if !oracle::in_ordinary_power(&fano.ideal, g, 3).unwrap() {
            ok = false;
            break;
        }
    }
    println!("fano I^(5) in I^3: {ok} in {:?}", t.elapsed());

    let t = Instant::now();
    let (rho, _) = invariants::rho_a_facets(&fano).unwrap();
    println!("fano rho_a facets: {rho} in {:?}", t.elapsed());

    let t = Instant::now();
    let rho = invariants::rho_a_recursive(&fano.ideal).unwrap();
    println!("fano rho_a recursive: {rho} in {:?}", t.elapsed());

    let t = Instant::now();
    let tk5 = corpus::truncated_k5();
    let (rho, _) = invariants::rho_a_facets(&tk5).unwrap();
    println!("T rho_a facets: {rho} in {:?}", t.elapsed());

    let t = Instant::now();
    let rho = invariants::rho_a_recursive(&tk5.ideal).unwrap();
    println!("T rho_a recursive: {rho} in {:?}", t.elapsed());

    let t = Instant::now();
    let w = oracle::witness_search(&tk5.ideal, 4, 3, &caps).unwrap();
    println!(
        "T witness (4,3): {} in {:?} (truncated: {:?})",
        w.best_ratio,
        t.elapsed(),
        w.truncated
    );

    let t = Instant::now();
    let dual = corpus::truncated_k5_dual();
    let (rho, _) = invariants::rho_a_facets(&dual).unwrap();
    println!("T* rho_a facets: {rho} in {:?}", t.elapsed());

    let t = Instant::now();
    let w = oracle::witness_search(&dual.ideal, 3, 2, &caps).unwrap();
    println!("T* witness (3,2): {} in {:?}", w.best_ratio, t.elapsed());

    let t = Instant::now();
    let plane = corpus::projective_plane(3).unwrap();
    let alpha_hat = invariants::waldschmidt(&plane).unwrap();
    println!("PG(2,3) alpha-hat: {alpha_hat} in {:?}", t.elapsed());

    let t = Instant::now();
    let k2 = oracle::compute_kr(&fano.ideal, 2, 8, &caps).unwrap();
    println!("fano K_2: {k2:?} in {:?}", t.elapsed());

    let t = Instant::now();
    let k3 = oracle::compute_kr(&fano.ideal, 3, 9, &caps).unwrap();
    println!("fano K_3: {k3:?} in {:?}", t.elapsed());
}

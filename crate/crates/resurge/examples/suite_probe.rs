// Scratch probe for the randomized suite costs (not shipped).
use std::time::Instant;

use resurge::hypergraph::Hypergraph;
use resurge::ideal::{ExponentVector, IdealDocument, MonomialIdeal};
use resurge::{invariants, rat::Rat};

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn vars(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

fn random_graph(rng: &mut SplitMix64) -> MonomialIdeal {
    loop {
        let n = 3 + rng.below(6) as usize; // 3..=8 vertices
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.below(100) < 45 {
                    let mut e = vec![0u64; n];
                    e[i] = 1;
                    e[j] = 1;
                    gens.push(ExponentVector::new(e));
                }
            }
        }
        if !gens.is_empty() {
            return MonomialIdeal::new(vars(n), gens).unwrap();
        }
    }
}

fn random_squarefree(rng: &mut SplitMix64) -> MonomialIdeal {
    loop {
        let n = 2 + rng.below(5) as usize; // 2..=6 vars
        let k = 1 + rng.below(8) as usize; // up to 8 gens
        let mut gens = Vec::new();
        for _ in 0..k {
            let mut e = vec![0u64; n];
            for (j, slot) in e.iter_mut().enumerate() {
                let _ = j;
                if rng.below(100) < 40 {
                    *slot = 1;
                }
            }
            if e.iter().any(|&x| x == 1) {
                gens.push(ExponentVector::new(e));
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(vars(n), gens).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

fn main() {
    let mut rng = SplitMix64(20260809);
    let t = Instant::now();
    for i in 0..200 {
        let g = random_graph(&mut rng);
        let doc = IdealDocument::squarefree(g.clone()).unwrap();
        let (rho, _) = invariants::rho_a_facets(&doc).unwrap();
        let hg = Hypergraph::from_ideal(&g).unwrap();
        let (rho2, _chi) = invariants::edge_ideal_rho_a(&hg).unwrap();
        assert_eq!(rho, rho2, "graph #{i}: {g}");
    }
    println!("200 random graphs: {:?}", t.elapsed());

    let mut rng = SplitMix64(777);
    let t = Instant::now();
    for i in 0..500 {
        let ideal = random_squarefree(&mut rng);
        let doc = IdealDocument::squarefree(ideal.clone()).unwrap();
        let (facets, _) = invariants::rho_a_facets(&doc).unwrap();
        let recursive = invariants::rho_a_recursive(&ideal).unwrap();
        assert_eq!(facets, recursive, "ideal #{i}: {ideal}");
        assert!(facets >= Rat::from_integer(1.into()));
    }
    println!("500 method-agreement ideals: {:?}", t.elapsed());
}

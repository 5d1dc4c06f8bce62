//! Shared helpers for the integration suites: a deterministic RNG and
//! generators for random squarefree ideals, graphs and complete
//! intersections.

use resurge::ideal::{ExponentVector, MonomialIdeal};

pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

pub fn letter_vars(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Random proper squarefree ideal on 2..=max_n variables with at most
/// max_gens generators.
pub fn random_squarefree(rng: &mut SplitMix64, max_n: usize, max_gens: usize) -> MonomialIdeal {
    loop {
        let n = 2 + rng.below(max_n as u64 - 1) as usize;
        let k = 1 + rng.below(max_gens as u64) as usize;
        let mut gens = Vec::new();
        for _ in 0..k {
            let mut e = vec![0u64; n];
            for slot in e.iter_mut() {
                if rng.chance(40) {
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
        let ideal = MonomialIdeal::new(letter_vars(n), gens).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

/// Random graph edge ideal on 3..=max_n vertices, edge probability ~45%.
pub fn random_graph(rng: &mut SplitMix64, max_n: usize) -> MonomialIdeal {
    loop {
        let n = 3 + rng.below(max_n as u64 - 2) as usize;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.chance(45) {
                    let mut e = vec![0u64; n];
                    e[i] = 1;
                    e[j] = 1;
                    gens.push(ExponentVector::new(e));
                }
            }
        }
        if !gens.is_empty() {
            return MonomialIdeal::new(letter_vars(n), gens).unwrap();
        }
    }
}

/// Random squarefree monomial complete intersection: generators on
/// pairwise-disjoint variable blocks.
pub fn random_complete_intersection(rng: &mut SplitMix64, max_n: usize) -> MonomialIdeal {
    loop {
        let n = 2 + rng.below(max_n as u64 - 1) as usize;
        let mut unassigned: Vec<usize> = (0..n).collect();
        let mut gens = Vec::new();
        while !unassigned.is_empty() && gens.len() < 3 {
            let size = 1 + rng.below(unassigned.len().min(3) as u64) as usize;
            let mut e = vec![0u64; n];
            for _ in 0..size {
                let pick = rng.below(unassigned.len() as u64) as usize;
                e[unassigned.remove(pick)] = 1;
            }
            gens.push(ExponentVector::new(e));
            if rng.chance(30) {
                break;
            }
        }
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(letter_vars(n), gens).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

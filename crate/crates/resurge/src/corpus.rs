//! Named ideals from the combinatorial-optimization and symbolic-power
//! literature, used as a regression corpus by the test suites and handy for
//! experiments.

use crate::error::Result;
use crate::ideal::{parse_ideal, ExponentVector, IdealDocument, IdealFormat, MonomialIdeal};

fn terse(text: &str) -> IdealDocument {
    parse_ideal(text, IdealFormat::Terse).expect("corpus ideal parses")
}

/// The three-cycle `(ab, ac, bc)`: three generic points in the plane, the
/// standard example with distinct symbolic and ordinary powers.
pub fn triangle() -> IdealDocument {
    terse("abc: ab ac bc")
}

/// `(abd, acd, bcd)`: the triangle times a fresh variable (three generic
/// lines plus the plane at infinity in 3-space).
pub fn coned_triangle() -> IdealDocument {
    terse("abcd: abd acd bcd")
}

/// The Fano plane: seven variables, one generator per line.
pub fn fano() -> IdealDocument {
    terse("abcdefg: abd bce cdf aef acg deg bfg")
}

/// Vertices are the edges of K5, hyperedges are the triangles of K5.
pub fn truncated_k5() -> IdealDocument {
    terse("abcdefghij: abc ade bdf cef agh bgi chi dgj ehj fij")
}

/// The degree-four generators of the Alexander dual of `truncated_k5`.
pub fn truncated_k5_dual() -> IdealDocument {
    terse("abcdefghij: cefg bdfh afgh adei begi cdhi abcj cdgj behj afij")
}

/// `(x0 xn, ..., x_{n-1} xn, x0 ... x_{n-1})` on `n + 1` variables.
pub fn jt(n: usize) -> Result<IdealDocument> {
    let vars: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0u64; n + 1];
        e[i] = 1;
        e[n] = 1;
        gens.push(ExponentVector::new(e));
    }
    let mut e = vec![1u64; n + 1];
    e[n] = 0;
    gens.push(ExponentVector::new(e));
    IdealDocument::squarefree(MonomialIdeal::new(vars, gens)?)
}

/// `(x^d, x^{d-1} y, y^{d-1} z)`, the base ideal of a degree-`d` plane
/// Cremona map, together with the H-representation of its symbolic
/// polyhedron: `(d-1)x + dy >= d(d-1)` and `x + (d-1)z >= d-1`.
pub fn cremona(d: u64) -> Result<IdealDocument> {
    assert!(d >= 2);
    let text = format!(
        r#"{{"vars":["x","y","z"],
            "gens":[[{d},0,0],[{dm},1,0],[0,{dm},1]],
            "sp":[{{"coeffs":[{dm},{d},0],"rhs":{off}}},
                  {{"coeffs":[1,0,{dm}],"rhs":{dm}}}]}}"#,
        dm = d - 1,
        off = d * (d - 1),
    );
    parse_ideal(&text, IdealFormat::Json)
}

/// Edge ideal of the cycle on `n` letters (`3 <= n <= 26`).
pub fn cycle(n: usize) -> Result<IdealDocument> {
    assert!((3..=26).contains(&n));
    let vars: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0u64; n];
        e[i] = 1;
        e[(i + 1) % n] = 1;
        gens.push(ExponentVector::new(e));
    }
    IdealDocument::squarefree(MonomialIdeal::new(vars, gens)?)
}

/// Edge ideal of the disjoint union of two cycles, on `n + m` variables.
pub fn disjoint_cycles(n: usize, m: usize) -> Result<IdealDocument> {
    assert!((3..=13).contains(&n) && (3..=13).contains(&m));
    let total = n + m;
    let vars: Vec<String> = (0..total)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let mut e = vec![0u64; total];
        e[i] = 1;
        e[(i + 1) % n] = 1;
        gens.push(ExponentVector::new(e));
    }
    for i in 0..m {
        let mut e = vec![0u64; total];
        e[n + i] = 1;
        e[n + (i + 1) % m] = 1;
        gens.push(ExponentVector::new(e));
    }
    IdealDocument::squarefree(MonomialIdeal::new(vars, gens)?)
}

/// The ideal of the finite projective plane over the field with `q`
/// elements (`q` = 2 or 3): one variable per point, one generator per line.
/// For `q = 2` this is a relabeling of `fano()`.
pub fn projective_plane(q: u64) -> Result<IdealDocument> {
    assert!(q == 2 || q == 3);
    let q = q as i64;
    // Projective points: nonzero triples over F_q with leading nonzero = 1.
    let mut points: Vec<[i64; 3]> = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let p = [x, y, z];
                if p == [0, 0, 0] {
                    continue;
                }
                let lead = *p.iter().find(|&&c| c != 0).unwrap();
                if lead == 1 {
                    points.push(p);
                }
            }
        }
    }
    let n = points.len();
    let vars: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    // Lines are indexed by the same dual triples; incidence is orthogonality.
    let mut gens = Vec::new();
    for line in &points {
        let mut e = vec![0u64; n];
        for (i, p) in points.iter().enumerate() {
            let dot: i64 = line.iter().zip(p).map(|(a, b)| a * b).sum();
            if dot % q == 0 {
                e[i] = 1;
            }
        }
        gens.push(ExponentVector::new(e));
    }
    IdealDocument::squarefree(MonomialIdeal::new(vars, gens)?)
}

//! Squarefree ideals as hypergraphs: generator supports are edges, minimal
//! vertex covers are the associated primes.

use crate::error::{input_err, Result};
use crate::ideal::MonomialIdeal;

/// Iterates the set bits of a mask, ascending.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// A set of vertices intersecting every edge, with no proper subset doing so.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexCover(pub u64);

impl VertexCover {
    pub fn indices(&self) -> Vec<usize> {
        mask_to_indices(self.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    /// Builds from explicit edge masks; edges are reduced to an antichain.
    pub fn new(n: usize, edges: Vec<u64>) -> Result<Self> {
        if n == 0 || n > 64 {
            return input_err("vertex count must be between 1 and 64");
        }
        for &e in &edges {
            if e == 0 {
                return input_err("hypergraph edge must be nonempty");
            }
            if e >> n != 0 {
                return input_err("edge mentions a vertex outside the vertex set");
            }
        }
        let mut edges = edges;
        edges.sort_by_key(|&e| (e.count_ones(), mask_to_indices(e)));
        edges.dedup();
        let mut antichain: Vec<u64> = Vec::new();
        for e in edges {
            if !antichain.iter().any(|&f| f & e == f) {
                antichain.push(e);
            }
        }
        Ok(Hypergraph { n, edges: antichain })
    }

    /// The hypergraph whose edges are the supports of the minimal generators.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return input_err("hypergraph view requires a squarefree ideal");
        }
        if ideal.is_zero() || ideal.is_unit() {
            return input_err("hypergraph view requires a proper nonzero ideal");
        }
        Hypergraph::new(
            ideal.num_vars(),
            ideal.gens().iter().map(|g| g.support()).collect(),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() == 2)
    }

    pub fn is_cover(&self, mask: u64) -> bool {
        self.edges.iter().all(|&e| e & mask != 0)
    }

    /// Enumerates all minimal vertex covers by branching on an uncovered
    /// edge, with already-branched vertices forbidden further down to avoid
    /// duplicates; non-minimal leaves are filtered at the end. Output is in
    /// lexicographic order of the vertex lists.
    pub fn minimal_covers(&self) -> Result<Vec<VertexCover>> {
        if self.edges.is_empty() {
            return input_err("cover enumeration needs at least one edge");
        }
        let mut found: Vec<u64> = Vec::new();
        self.branch(0, 0, &mut found);

        let mut minimal: Vec<u64> = Vec::new();
        for &c in &found {
            if !found.iter().any(|&d| d != c && d & c == d) {
                minimal.push(c);
            }
        }
        minimal.sort_by_key(|&c| mask_to_indices(c));
        minimal.dedup();
        Ok(minimal.into_iter().map(VertexCover).collect())
    }

    fn branch(&self, chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
        // Dominance: a superset of an already-found cover can be skipped.
        if out.iter().any(|&c| c & chosen == c) {
            return;
        }
        match self.edges.iter().find(|&&e| e & chosen == 0) {
            None => out.push(chosen),
            Some(&edge) => {
                let mut burned = forbidden;
                for v in bits(edge & !forbidden) {
                    self.branch(chosen | 1 << v, burned, out);
                    burned |= 1 << v;
                }
            }
        }
    }

    /// Link and star of a vertex set: the link is the set of outside
    /// vertices sharing an edge with `u`, the star is their union with `u`.
    pub fn link_star(&self, u: u64) -> (u64, u64) {
        if u == 0 {
            return (0, 0);
        }
        let mut link = 0u64;
        for &e in &self.edges {
            if e & u != 0 {
                link |= e & !u;
            }
        }
        (link, u | link)
    }

    /// Subhypergraph of edges fully contained in the vertex set `v`.
    pub fn induced_subgraph(&self, v: u64) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & !v == 0)
            .collect();
        // Edges were an antichain already; the constructor re-checks anyway.
        Hypergraph::new(self.n, edges).expect("induced edges stay valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{parse_ideal, IdealFormat};

    fn hg(text: &str) -> Hypergraph {
        let doc = parse_ideal(text, IdealFormat::Terse).unwrap();
        Hypergraph::from_ideal(&doc.ideal).unwrap()
    }

    fn mask(indices: &[usize]) -> u64 {
        indices.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// 2^n oracle: every subset, filtered to covers, filtered to minimal.
    fn exhaustive_covers(h: &Hypergraph) -> Vec<u64> {
        let n = h.num_vertices();
        let covers: Vec<u64> = (0u64..1 << n).filter(|&s| h.is_cover(s)).collect();
        let mut minimal: Vec<u64> = covers
            .iter()
            .copied()
            .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
            .collect();
        minimal.sort_by_key(|&c| super::mask_to_indices(c));
        minimal
    }

    #[test]
    fn triangle_covers() {
        let covers = hg("abc: ab ac bc").minimal_covers().unwrap();
        let masks: Vec<u64> = covers.iter().map(|c| c.0).collect();
        assert_eq!(masks, vec![mask(&[0, 1]), mask(&[0, 2]), mask(&[1, 2])]);
    }

    #[test]
    fn jt_covers() {
        let covers = hg("wxyz: wz xz yz wxy").minimal_covers().unwrap();
        let masks: Vec<u64> = covers.iter().map(|c| c.0).collect();
        assert_eq!(
            masks,
            vec![
                mask(&[0, 1, 2]),
                mask(&[0, 3]),
                mask(&[1, 3]),
                mask(&[2, 3])
            ]
        );
    }

    #[test]
    fn single_edge_covers() {
        let covers = hg("ab: ab").minimal_covers().unwrap();
        let masks: Vec<u64> = covers.iter().map(|c| c.0).collect();
        assert_eq!(masks, vec![mask(&[0]), mask(&[1])]);
    }

    #[test]
    fn covers_match_exhaustive_enumeration() {
        for text in [
            "abc: ab ac bc",
            "abcde: ab bc cd de ea",
            "abcdefg: abd bce cdf aef acg deg bfg",
            "wxyz: wz xz yz wxy",
            "abcdef: abc def ad",
        ] {
            let h = hg(text);
            let fast: Vec<u64> = h.minimal_covers().unwrap().iter().map(|c| c.0).collect();
            assert_eq!(fast, exhaustive_covers(&h), "on {text}");
        }
    }

    #[test]
    fn every_cover_is_minimal() {
        let h = hg("abcdefg: abd bce cdf aef acg deg bfg");
        for cover in h.minimal_covers().unwrap() {
            assert!(h.is_cover(cover.0));
            for v in super::bits(cover.0) {
                assert!(!h.is_cover(cover.0 & !(1 << v)));
            }
        }
    }

    #[test]
    fn fano_covers_are_its_own_lines() {
        // The Fano plane is self-dual: the 7 minimal covers are the 7 lines.
        let h = hg("abcdefg: abd bce cdf aef acg deg bfg");
        let covers = h.minimal_covers().unwrap();
        assert_eq!(covers.len(), 7);
        let mut edge_masks = h.edges().to_vec();
        edge_masks.sort_by_key(|&e| super::mask_to_indices(e));
        let cover_masks: Vec<u64> = covers.iter().map(|c| c.0).collect();
        assert_eq!(cover_masks, edge_masks);
    }

    #[test]
    fn cover_complement_duality_on_graphs() {
        // Complements of minimal covers are maximal independent sets.
        let h = hg("abcde: ab bc cd de ea");
        let all = (1u64 << 5) - 1;
        let is_independent =
            |s: u64| h.edges().iter().all(|&e| (e & s).count_ones() < 2);
        for cover in h.minimal_covers().unwrap() {
            let comp = all & !cover.0;
            assert!(is_independent(comp));
            for v in super::bits(all & !comp) {
                assert!(!is_independent(comp | 1 << v));
            }
        }
    }

    #[test]
    fn link_star_examples() {
        let c5 = hg("abcde: ab bc cd de ea");
        let (link, star) = c5.link_star(mask(&[0]));
        assert_eq!(link, mask(&[1, 4]));
        assert_eq!(star, mask(&[0, 1, 4]));

        assert_eq!(c5.link_star(0), (0, 0));

        let triangle = hg("abc: ab ac bc");
        let (link, star) = triangle.link_star(mask(&[0]));
        assert_eq!(link, mask(&[1, 2]));
        assert_eq!(star, mask(&[0, 1, 2]));
    }

    #[test]
    fn is_graph_examples() {
        assert!(hg("abcde: ab bc cd de ea").is_graph());
        assert!(!hg("abcdefg: abd bce cdf aef acg deg bfg").is_graph());
        // `ab abc` collapses to the antichain {ab} at ideal level already.
        let h = hg("abc: ab abc");
        assert_eq!(h.edges().len(), 1);
        assert!(h.is_graph());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = hg("abcde: ab bc cd de ea");
        let cd = c5.induced_subgraph(mask(&[2, 3]));
        assert_eq!(cd.edges(), &[mask(&[2, 3])]);

        let none = c5.induced_subgraph(mask(&[0, 2]));
        assert!(none.edges().is_empty());
        assert!(none.minimal_covers().is_err());

        let fano = hg("abcdefg: abd bce cdf aef acg deg bfg");
        let without_g = fano.induced_subgraph(mask(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(without_g.edges().len(), 4);
    }

    #[test]
    fn from_ideal_rejects_improper_inputs() {
        let doc = parse_ideal(
            r#"{"vars":["x","y"],"gens":[[2,0]],"sp":[{"coeffs":[1,0],"rhs":2}]}"#,
            IdealFormat::Json,
        )
        .unwrap();
        assert!(Hypergraph::from_ideal(&doc.ideal).is_err());

        let unit = MonomialIdeal::unit(vec!["x".into()]).unwrap();
        assert!(Hypergraph::from_ideal(&unit).is_err());
    }
}

//! Facet enumeration for Newton polyhedra.
//!
//! `NP(I) = conv(gens) + first orthant` is homogenized to the cone spanned
//! by the lifted generators `(g, 1)` and the orthant directions `(e_j, 0)`.
//! The defining half-spaces of `NP(I)` are the extreme rays of the dual
//! cone
//!
//! ```text
//! C* = { (v, w) : v >= 0,  g_i . v + w >= 0 for every generator }
//! ```
//!
//! which this module enumerates by the double description method: start
//! from a simplicial subcone, insert the remaining generator constraints
//! one at a time, and combine adjacent rays across each new hyperplane.
//! A ray `(v, w)` with `v != 0` and `c = -w > 0` is the half-space
//! `v . x >= c`; the rays `(0, 1)` and `(e_j, 0)` are the trivial and
//! first-orthant half-spaces and are dropped from the result.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

struct Ray {
    vec: Vec<BigInt>,
    tight: u128,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales an integer vector to primitive form (content 1).
fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

fn exact_tight_set(vec: &[BigInt], constraints: &[Vec<BigInt>]) -> u128 {
    let mut mask = 0u128;
    for (i, a) in constraints.iter().enumerate() {
        if dot(a, vec).is_zero() {
            mask |= 1 << i;
        }
    }
    mask
}

/// Extreme rays of `{ u : a . u >= 0 for a in constraints }` where the first
/// `dim` constraints are the coordinate half-spaces of the leading block and
/// the cone is pointed. Returns primitive integer rays.
fn extreme_rays(dim: usize, constraints: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    assert!(constraints.len() <= 128, "constraint bitset overflow");
    assert!(constraints.len() >= dim);

    // Initial simplicial cone: the first `dim` constraints.
    let mut rays: Vec<Ray> = Vec::new();
    {
        let head = &constraints[..dim];
        // Solve for rays tight on all but one of the head constraints.
        // The head here is always {v_j >= 0} x {g.v + w >= 0}, whose rays
        // can be written down directly.
        let n = dim - 1; // coordinates of v
        let g = &constraints[dim - 1][..n];
        let mut initial: Vec<Vec<BigInt>> = Vec::new();
        let mut apex = vec![BigInt::zero(); dim];
        apex[n] = BigInt::one();
        initial.push(apex);
        for j in 0..n {
            let mut r = vec![BigInt::zero(); dim];
            r[j] = BigInt::one();
            r[n] = -g[j].clone();
            initial.push(r);
        }
        for mut vec in initial {
            make_primitive(&mut vec);
            debug_assert!(head.iter().all(|a| !dot(a, &vec).is_negative()));
            let tight = exact_tight_set(&vec, constraints);
            rays.push(Ray { vec, tight });
        }
    }

    for idx in dim..constraints.len() {
        let a = &constraints[idx];
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.vec)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            continue; // tight bits were precomputed exactly
        }

        let processed_mask: u128 = (1 << (idx + 1)) - 1;
        let mut next: Vec<Ray> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (p, sp) in signs.iter().enumerate() {
            if sp.is_positive() {
                for (q, sq) in signs.iter().enumerate() {
                    if sq.is_negative() {
                        pairs.push((p, q));
                    }
                }
            }
        }
        for (p, q) in pairs {
            let common = rays[p].tight & rays[q].tight & processed_mask;
            // Necessary rank condition, then the combinatorial adjacency
            // test: no third ray may be tight on everything p and q share.
            if (common.count_ones() as usize) < dim.saturating_sub(2) {
                continue;
            }
            let adjacent = rays.iter().enumerate().all(|(r, ray)| {
                r == p || r == q || (ray.tight & processed_mask) & common != common
            });
            if !adjacent {
                continue;
            }
            let mut vec: Vec<BigInt> = (0..dim)
                .map(|c| &signs[p] * &rays[q].vec[c] - &signs[q] * &rays[p].vec[c])
                .collect();
            make_primitive(&mut vec);
            let tight = exact_tight_set(&vec, constraints);
            next.push(Ray { vec, tight });
        }
        let mut kept: Vec<Ray> = rays
            .drain(..)
            .zip(signs)
            .filter(|(_, s)| !s.is_negative())
            .map(|(r, _)| r)
            .collect();
        for r in next {
            if kept.iter().all(|k| k.vec != r.vec) {
                kept.push(r);
            }
        }
        rays = kept;
    }

    rays.into_iter().map(|r| r.vec).collect()
}

/// Defining half-spaces of `NP(I)` for the generator exponent vectors, as
/// `(coefficients, offset)` pairs with primitive integer coefficients and a
/// positive offset. First-orthant facets are excluded. Sorted canonically.
pub(crate) fn newton_facet_rays(gens: &[Vec<BigInt>], n: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let dim = n + 1;
    let mut constraints: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..n {
        let mut row = vec![BigInt::zero(); dim];
        row[j] = BigInt::one();
        constraints.push(row);
    }
    let mut lifted: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| {
            let mut row = g.clone();
            row.push(BigInt::one());
            row
        })
        .collect();
    lifted.sort();
    lifted.dedup();
    constraints.extend(lifted);

    let mut facets: Vec<(Vec<BigInt>, BigInt)> = extreme_rays(dim, &constraints)
        .into_iter()
        .filter_map(|ray| {
            let c = -ray[n].clone();
            let v = ray[..n].to_vec();
            if c.is_positive() && v.iter().any(|x| x.is_positive()) {
                Some((v, c))
            } else {
                None
            }
        })
        .collect();
    facets.sort();
    facets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn facet(coeffs: &[i64], c: i64) -> (Vec<BigInt>, BigInt) {
        (
            coeffs.iter().map(|&x| BigInt::from(x)).collect(),
            BigInt::from(c),
        )
    }

    #[test]
    fn triangle_facets() {
        let rays = newton_facet_rays(&gens(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]), 3);
        assert_eq!(
            rays,
            vec![
                facet(&[0, 1, 1], 1),
                facet(&[1, 0, 1], 1),
                facet(&[1, 1, 0], 1),
                facet(&[1, 1, 1], 2),
            ]
        );
    }

    #[test]
    fn principal_ideal_facets_are_orthant_translates() {
        let rays = newton_facet_rays(&gens(&[&[1, 1]]), 2);
        assert_eq!(rays, vec![facet(&[0, 1], 1), facet(&[1, 0], 1)]);

        let rays = newton_facet_rays(&gens(&[&[3, 0, 2]]), 3);
        assert_eq!(rays, vec![facet(&[0, 0, 1], 2), facet(&[1, 0, 0], 3)]);
    }

    #[test]
    fn unit_ideal_has_no_facets() {
        let rays = newton_facet_rays(&gens(&[&[0, 0]]), 2);
        assert!(rays.is_empty());
    }

    #[test]
    fn jt_has_the_skew_facet() {
        // Generators of (x0 x3, x1 x3, x2 x3, x0 x1 x2).
        let rays = newton_facet_rays(
            &gens(&[
                &[1, 0, 0, 1],
                &[0, 1, 0, 1],
                &[0, 0, 1, 1],
                &[1, 1, 1, 0],
            ]),
            4,
        );
        assert!(rays.contains(&facet(&[1, 1, 1, 2], 3)));
        // Offsets always equal the minimum of the valuation on the
        // generators.
        for (v, c) in &rays {
            let min = gens(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1], &[1, 1, 1, 0]])
                .iter()
                .map(|g| dot(v, g))
                .min()
                .unwrap();
            assert_eq!(*c, min);
        }
    }

    #[test]
    fn simplex_corner() {
        // (x^2, y^2): facets x >= 2? No: conv{(2,0),(0,2)} + orthant has
        // x + y >= 2 as its only non-orthant facet.
        let rays = newton_facet_rays(&gens(&[&[2, 0], &[0, 2]]), 2);
        assert_eq!(rays, vec![facet(&[1, 1], 2)]);
    }
}

//! The cut-locus polytope of a quotient and its exact metric invariants.
//!
//! Fixing a subgroup of the center, the Cartan polytope is intersected with
//! one half-space per subgroup vertex: `(x, e_j) <= (e_j, e_j) / 2`, the
//! perpendicular bisector between the origin and the deck translate through
//! `e_j`. Work happens in barycentric coordinates `c` over the alcove
//! vertices, where every wall is a rational linear inequality in terms of
//! the vertex Gram matrix `E`:
//!
//! * simple walls: `c_i >= 0`
//! * highest-root wall: `sum c <= 1`
//! * cut walls: `(E c)_j <= E_jj / 2`
//!
//! The squared injectivity radius of the quotient is the squared distance
//! from the origin to the nearest wall; the squared diameter is the largest
//! squared norm over the polytope, attained at a vertex by convexity. Both
//! are reported in units of `(psi, psi)^-1`. Vertices come from solving
//! every rank-sized subset of tight walls, which is exhaustive and exact.

use crate::alcove::Alcove;
use crate::center::Subgroup;
use crate::roots::{Family, RootSystemType};
use crate::{frac, mat, rat, Error, Rat, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// Identifies which wall an inequality came from. Indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WallTag {
    /// `c_i >= 0`, the wall spanned by the vertices other than `e_{i+1}`.
    Simple(usize),
    /// `sum c <= 1`, the wall opposite the origin.
    Psi,
    /// Bisector wall of the subgroup vertex `e_{j+1}`.
    Cut(usize),
}

impl WallTag {
    pub fn label(self) -> String {
        match self {
            WallTag::Simple(i) => format!("c{}>=0", i + 1),
            WallTag::Psi => "psi".to_string(),
            WallTag::Cut(j) => format!("cut(e{})", j + 1),
        }
    }
}

/// A single inequality `coeffs . c <= bound` in barycentric coordinates.
#[derive(Debug, Clone)]
pub struct Inequality {
    pub coeffs: Vec<Rat>,
    pub bound: Rat,
    pub tag: WallTag,
}

#[derive(Debug, Clone)]
pub struct CutPolytope {
    pub ty: RootSystemType,
    pub rank: usize,
    /// Vertex Gram matrix of the ambient alcove, for norm computations.
    pub gram_e: Vec<Vec<Rat>>,
    pub inequalities: Vec<Inequality>,
    /// Zero-based alcove vertex indices carrying cut walls.
    pub cut_indices: Vec<usize>,
}

/// A polytope vertex in barycentric coordinates with its tight walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub coords: Vec<Rat>,
    pub active: Vec<WallTag>,
}

/// Builds the inequality system for the quotient by `gamma`.
pub fn cut_polytope(alcove: &Alcove, gamma: &Subgroup) -> CutPolytope {
    let l = alcove.rank();
    let mut inequalities = Vec::with_capacity(l + 1 + gamma.vertex_indices.len());
    for i in 0..l {
        let mut coeffs = vec![Rat::zero(); l];
        coeffs[i] = rat(-1);
        inequalities.push(Inequality {
            coeffs,
            bound: Rat::zero(),
            tag: WallTag::Simple(i),
        });
    }
    inequalities.push(Inequality {
        coeffs: vec![rat(1); l],
        bound: rat(1),
        tag: WallTag::Psi,
    });
    for &j in &gamma.vertex_indices {
        inequalities.push(Inequality {
            coeffs: alcove.gram_e[j].clone(),
            bound: &alcove.gram_e[j][j] / rat(2),
            tag: WallTag::Cut(j),
        });
    }
    CutPolytope {
        ty: alcove.datum.ty,
        rank: l,
        gram_e: alcove.gram_e.clone(),
        inequalities,
        cut_indices: gamma.vertex_indices.clone(),
    }
}

impl CutPolytope {
    /// Exact membership test in barycentric coordinates.
    pub fn contains(&self, c: &[Rat]) -> bool {
        self.inequalities
            .iter()
            .all(|ineq| mat::dot(&ineq.coeffs, c) <= ineq.bound)
    }

    /// Squared norm `c^T E c` of a barycentric point, in `(psi, psi)^-1`
    /// units.
    pub fn norm_sq(&self, c: &[Rat]) -> Rat {
        mat::bilinear(&self.gram_e, c, c)
    }
}

/// All vertices, found by solving every rank-sized subset of walls and
/// keeping the feasible unique solutions. Sorted by coordinates.
pub fn enumerate_vertices(p: &CutPolytope, cap: u32) -> Result<Vec<Vertex>> {
    let l = p.rank;
    if l as u32 > cap {
        return Err(Error::RankCapExceeded {
            rank: l as u32,
            cap,
        });
    }
    let m = p.inequalities.len();
    let mut coords: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut subset: Vec<usize> = (0..l).collect();
    loop {
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| p.inequalities[i].coeffs.clone())
            .collect();
        let rhs: Vec<Rat> = subset
            .iter()
            .map(|&i| p.inequalities[i].bound.clone())
            .collect();
        if let Some(c) = mat::solve(&rows, &rhs) {
            if p.contains(&c) {
                coords.insert(c);
            }
        }
        if !next_combination(&mut subset, m) {
            break;
        }
    }
    Ok(coords
        .into_iter()
        .map(|c| {
            let active = p
                .inequalities
                .iter()
                .filter(|ineq| mat::dot(&ineq.coeffs, &c) == ineq.bound)
                .map(|ineq| ineq.tag)
                .collect();
            Vertex { coords: c, active }
        })
        .collect())
}

/// Advances `subset` to the next k-combination of `0..m` in lexicographic
/// order; returns false after the last one.
fn next_combination(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < m - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Squared distance from the origin to the nearest wall, in units of
/// `(psi, psi)^-1`: the highest-root wall sits at squared distance 1 and
/// the cut wall of `e_j` at `E_jj / 4`.
pub fn injectivity_value(p: &CutPolytope) -> Rat {
    let mut best = rat(1);
    for &j in &p.cut_indices {
        let d = &p.gram_e[j][j] / rat(4);
        if d < best {
            best = d;
        }
    }
    best
}

/// Maximum squared norm over an explicit vertex list.
pub fn diameter_from_vertices(p: &CutPolytope, vertices: &[Vertex]) -> Rat {
    vertices
        .iter()
        .map(|v| p.norm_sq(&v.coords))
        .max()
        .unwrap_or_else(Rat::zero)
}

/// Squared diameter by exhaustive vertex enumeration.
pub fn diameter_value(p: &CutPolytope, cap: u32) -> Result<Rat> {
    let vertices = enumerate_vertices(p, cap)?;
    Ok(diameter_from_vertices(p, &vertices))
}

/// Closed form for the squared injectivity radius in `(psi, psi)^-1`
/// units, by family and subgroup. Defined for every reduced family.
pub fn injectivity_closed_form(ty: RootSystemType, gamma: &Subgroup) -> Rat {
    let l = i64::from(ty.rank);
    if gamma.is_trivial() {
        return rat(1);
    }
    let r = gamma.order() as i64;
    match ty.family {
        Family::A => {
            if r == l + 1 {
                frac(l, 2 * (l + 1))
            } else if 2 * r == l + 1 {
                frac(l - 1, l + 1)
            } else if l == 5 && r == 2 {
                frac(3, 4)
            } else {
                rat(1)
            }
        }
        Family::B => frac(1, 2),
        Family::C => frac(l, 4).min(rat(1)),
        Family::D => {
            if gamma.vertex_indices.contains(&0) {
                frac(1, 2)
            } else {
                frac(l, 8).min(rat(1))
            }
        }
        Family::E6 => frac(2, 3),
        Family::E7 => frac(3, 4),
        // Remaining families have trivial centers, handled above.
        _ => unreachable!("no nontrivial subgroup exists for {ty}"),
    }
}

/// Closed form for the squared diameter in `(psi, psi)^-1` units.
///
/// Returns `None` for the subgroups without a published formula (the
/// intermediate cyclic subgroups of the A family) and for the trivial
/// subgroup, whose diameter is that of the full Cartan polytope.
pub fn diameter_closed_form(ty: RootSystemType, gamma: &Subgroup) -> Option<Rat> {
    let l = i64::from(ty.rank);
    if gamma.is_trivial() {
        return None;
    }
    let r = gamma.order() as i64;
    let full = r == fuller_order(ty);
    match ty.family {
        Family::A => {
            if r == l + 1 {
                Some(frac(l * (l + 2), 6 * (l + 1)))
            } else if r == 2 {
                // Rank is odd here; the branch splits on (l+1)/2 mod 2.
                if (l + 1) / 2 % 2 == 0 {
                    Some(frac(3 * (l + 1), 8))
                } else {
                    Some(frac(3 * l - 1, 8))
                }
            } else {
                None
            }
        }
        Family::B => Some(frac(l, 2)),
        Family::C => {
            if l % 2 == 0 {
                Some(frac(l, 2))
            } else {
                Some(frac(2 * l - 1, 4))
            }
        }
        Family::D => {
            if full {
                if l % 2 == 0 {
                    Some(frac(l, 4))
                } else {
                    Some(frac(2 * l - 1, 8))
                }
            } else if gamma.vertex_indices.contains(&0) {
                Some(frac(l, 2))
            } else {
                // Half-spin subgroup, even rank only.
                Some(frac(l, 4).max(rat(2)))
            }
        }
        Family::E6 => Some(frac(4, 3)),
        Family::E7 => Some(frac(7, 4)),
        _ => None,
    }
}

fn fuller_order(ty: RootSystemType) -> i64 {
    match ty.family {
        Family::A => i64::from(ty.rank) + 1,
        Family::B | Family::C | Family::E7 => 2,
        Family::D => 4,
        Family::E6 => 3,
        _ => 1,
    }
}

/// A facet of the cut locus: the highest-root wall or one cut wall,
/// together with the vertices lying on it and its affine dimension.
#[derive(Debug, Clone)]
pub struct CutFacet {
    pub tag: WallTag,
    pub vertex_count: usize,
    /// Affine dimension of the tight vertex set; `rank - 1` for a proper
    /// facet, smaller when the wall is redundant.
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct CutLocusDescription {
    pub facets: Vec<CutFacet>,
}

/// Describes the boundary part of the polytope realized as cut locus:
/// every wall other than the simple walls, with facet dimensions read off
/// the vertex active sets.
pub fn cut_locus_description(p: &CutPolytope, vertices: &[Vertex]) -> CutLocusDescription {
    let tags: Vec<WallTag> = std::iter::once(WallTag::Psi)
        .chain(p.cut_indices.iter().map(|&j| WallTag::Cut(j)))
        .collect();
    let facets = tags
        .into_iter()
        .map(|tag| {
            let members: Vec<Vec<Rat>> = vertices
                .iter()
                .filter(|v| v.active.contains(&tag))
                .map(|v| v.coords.clone())
                .collect();
            CutFacet {
                tag,
                vertex_count: members.len(),
                dim: mat::affine_rank(&members),
            }
        })
        .collect();
    CutLocusDescription { facets }
}

/// Sharp upper bound for `sum(x_i^2)` over `x in [a, b]^m` with
/// `sum(x_i) <= s`, assuming `0 <= a`, `0 < b` and `m a <= s <= m b`.
///
/// The maximum pushes every coordinate to an endpoint except at most one
/// remainder coordinate; the floor counts below say how many land on each
/// end. Returns the bound together with a maximizing vector.
pub fn boxed_sum_of_squares_bound(m: usize, a: &Rat, b: &Rat, s: &Rat) -> (Rat, Vec<Rat>) {
    assert!(!a.is_negative() && b.is_positive() && a <= b);
    let ma = rat(m as i64) * a;
    let mb = rat(m as i64) * b;
    assert!(&ma <= s && s <= &mb);
    if a == b {
        return (rat(m as i64) * a * a, vec![a.clone(); m]);
    }
    let width = b - a;
    let at_bottom = ((&mb - s) / &width).floor();
    let at_top = ((s - &ma) / &width).floor();
    let n_a = num_traits::ToPrimitive::to_usize(&at_bottom.to_integer()).expect("count fits");
    let n_b = num_traits::ToPrimitive::to_usize(&at_top.to_integer()).expect("count fits");
    let c = s - &at_bottom * a - &at_top * b;
    let bound = &at_bottom * a * a + &at_top * b * b + &c * &c;
    let mut witness = vec![b.clone(); n_b];
    if n_a + n_b < m {
        witness.push(c);
    }
    witness.extend(std::iter::repeat_n(a.clone(), n_a));
    assert_eq!(witness.len(), m);
    (bound, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::build_alcove;
    use crate::center::{build_center_group, find_subgroup, subgroups};
    use crate::roots::build_datum;
    use crate::DEFAULT_RANK_CAP;

    fn setup(s: &str, gamma: &str) -> (Alcove, CutPolytope) {
        let a = build_alcove(build_datum(RootSystemType::parse(s).unwrap()).unwrap()).unwrap();
        let g = build_center_group(&a).unwrap();
        let subs = subgroups(&g);
        let sub = find_subgroup(&g, &subs, gamma).unwrap().clone();
        let p = cut_polytope(&a, &sub);
        (a, p)
    }

    fn vertex_coords(p: &CutPolytope) -> Vec<Vec<Rat>> {
        enumerate_vertices(p, DEFAULT_RANK_CAP)
            .unwrap()
            .into_iter()
            .map(|v| v.coords)
            .collect()
    }

    /// Barycentric vector from sparse one-based entries.
    fn bary(l: usize, entries: &[(usize, Rat)]) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); l];
        for (j, v) in entries {
            c[j - 1] = v.clone();
        }
        c
    }

    #[test]
    fn trivial_subgroup_gives_the_simplex() {
        let (_, p) = setup("A3", "trivial");
        let verts = vertex_coords(&p);
        assert_eq!(verts.len(), 4);
        assert!(verts.contains(&bary(3, &[])));
        for j in 1..=3 {
            assert!(verts.contains(&bary(3, &[(j, rat(1))])));
        }
        assert_eq!(injectivity_value(&p), rat(1));
    }

    #[test]
    fn a2_full_quotient_has_the_expected_vertices_and_diameter() {
        let (_, p) = setup("A2", "Z3");
        let verts = vertex_coords(&p);
        let expected = vec![
            bary(2, &[]),
            bary(2, &[(2, frac(1, 2))]),
            bary(2, &[(1, frac(1, 3)), (2, frac(1, 3))]),
            bary(2, &[(1, frac(1, 2))]),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(verts, expected);
        assert_eq!(diameter_value(&p, 8).unwrap(), frac(4, 9));
        assert_eq!(injectivity_value(&p), frac(1, 3));
    }

    #[test]
    fn b_family_vertices_match_the_printed_list_exactly() {
        for l in [2usize, 3, 5, 8] {
            let (_, p) = setup(&format!("B{l}"), "Z2");
            let verts = vertex_coords(&p);
            let mut expected = vec![bary(l, &[]), bary(l, &[(1, frac(1, 2))])];
            for j in 2..=l {
                expected.push(bary(l, &[(j, rat(1))]));
            }
            expected.sort();
            assert_eq!(verts, expected, "B{l}");
            assert_eq!(diameter_value(&p, 8).unwrap(), frac(l as i64, 2), "B{l}");
        }
    }

    #[test]
    fn closed_forms_agree_with_enumeration_across_all_subgroups() {
        for name in [
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B4", "B7", "C3", "C5", "C8", "D4",
            "D5", "D6", "D7", "D8", "E6", "E7", "G2",
        ] {
            let a = build_alcove(build_datum(RootSystemType::parse(name).unwrap()).unwrap())
                .unwrap();
            let g = build_center_group(&a).unwrap();
            for sub in subgroups(&g) {
                let p = cut_polytope(&a, &sub);
                assert_eq!(
                    injectivity_value(&p),
                    injectivity_closed_form(a.datum.ty, &sub),
                    "{name} {}",
                    sub.name
                );
                if let Some(expected) = diameter_closed_form(a.datum.ty, &sub) {
                    assert_eq!(
                        diameter_value(&p, DEFAULT_RANK_CAP).unwrap(),
                        expected,
                        "{name} {}",
                        sub.name
                    );
                }
            }
        }
    }

    #[test]
    fn a5_half_center_quotient_matches_the_parametric_vertex_list() {
        let (_, p) = setup("A5", "Z2");
        let verts = vertex_coords(&p);
        let mut expected = crate::golden::a5_z2_vertices();
        expected.sort();
        assert_eq!(verts, expected);
        assert_eq!(diameter_value(&p, 8).unwrap(), frac(7, 4));
    }

    #[test]
    fn d6_half_spin_quotient_contains_the_parametric_vertices() {
        let (_, p) = setup("D6", "gen=e5");
        let verts = vertex_coords(&p);
        for v in crate::golden::d6_half_spin_vertices() {
            assert!(verts.contains(&v), "missing {v:?}");
        }
        assert_eq!(diameter_value(&p, 8).unwrap(), rat(2));
    }

    #[test]
    fn rank_cap_is_enforced() {
        let (_, p) = setup("A8", "Z9");
        assert!(matches!(
            enumerate_vertices(&p, 7),
            Err(Error::RankCapExceeded { rank: 8, cap: 7 })
        ));
        assert!(enumerate_vertices(&p, 8).is_ok());
    }

    #[test]
    fn cut_locus_facets_are_full_dimensional_for_e6() {
        let (_, p) = setup("E6", "Z3");
        let verts = enumerate_vertices(&p, 8).unwrap();
        assert_eq!(verts.len(), 19);
        let desc = cut_locus_description(&p, &verts);
        assert_eq!(desc.facets.len(), 3);
        for f in &desc.facets {
            assert_eq!(f.dim, 5, "{:?}", f.tag);
            assert!(f.vertex_count >= 6, "{:?}", f.tag);
        }
    }

    #[test]
    fn active_sets_have_at_least_rank_many_walls() {
        let (_, p) = setup("D5", "Z4");
        for v in enumerate_vertices(&p, 8).unwrap() {
            assert!(v.active.len() >= 5, "{:?}", v);
        }
    }

    #[test]
    fn combination_iterator_visits_every_subset_once() {
        let mut subset = vec![0usize, 1];
        let mut seen = vec![subset.clone()];
        while next_combination(&mut subset, 4) {
            seen.push(subset.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}

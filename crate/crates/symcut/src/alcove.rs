//! The Cartan polytope of a root system and its distinguished vertices.
//!
//! The polytope is the simplex cut out by `(x, gamma_i) >= 0` for every
//! simple root together with `(x, psi) <= 1`, where `psi` is the highest
//! root. Its nonzero vertices `e_1 .. e_l` are dual to the simple roots:
//! `(e_j, gamma_i) = delta_ij / d_j` with `d_j` the highest-root
//! coefficients. Vertices whose coefficient is 1 generate the deck
//! transformations of the space; everything downstream keys off them.
//!
//! Vertices are stored multiplied by `(psi, psi)` so that all coordinates
//! stay rational no matter which metric normalization is in force. In these
//! units the Gram matrix entry `gram_e[i][j]` equals
//! `(e_i, e_j) * (psi, psi)`.

use crate::roots::RootDatum;
use crate::{mat, rat, Error, Rat, Result};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone)]
pub struct Alcove {
    pub datum: RootDatum,
    /// `vertices[j]` is `e_{j+1}` scaled by `(psi, psi)`, in ambient
    /// coordinates.
    pub vertices: Vec<Vec<Rat>>,
    /// `gram_e[i][j] = (e_{i+1}, e_{j+1}) * (psi, psi)`.
    pub gram_e: Vec<Vec<Rat>>,
    /// Zero-based indices of the vertices with highest-root coefficient 1.
    pub unit_indices: Vec<usize>,
}

/// Solves the duality relations for the vertices and cross-checks the Gram
/// matrix through two independent routes: ambient dot products of the
/// solved vertices, and the inverse of the simple-root Gram matrix.
pub fn build_alcove(datum: RootDatum) -> Result<Alcove> {
    let l = datum.rank;
    let dim = datum.dim;

    // Row i of the system reads off (x, gamma_i); the A family has one
    // ambient dimension to spare, pinned by the zero-coordinate-sum row.
    let mut system: Vec<Vec<Rat>> = datum
        .simple_roots
        .iter()
        .map(|gamma| mat::mat_vec(&datum.form, gamma))
        .collect();
    if dim == l + 1 {
        system.push(vec![rat(1); dim]);
    }
    debug_assert_eq!(system.len(), dim);

    let mut vertices = Vec::with_capacity(l);
    for j in 0..l {
        let mut rhs = vec![Rat::zero(); dim];
        rhs[j] = rat(1) / rat(datum.d_coeffs[j]);
        let v = mat::solve(&system, &rhs)
            .ok_or_else(|| Error::SingularGram(datum.ty.to_string()))?;
        vertices.push(v);
    }

    let mut gram_e = vec![vec![Rat::zero(); l]; l];
    for i in 0..l {
        for j in i..l {
            let p = datum.pair(&vertices[i], &vertices[j]);
            gram_e[i][j] = p.clone();
            gram_e[j][i] = p;
        }
    }

    let inverse_route = gram_e_from_inverse(&datum)?;
    assert_eq!(
        gram_e, inverse_route,
        "vertex dot products disagree with the inverse-Gram route for {}",
        datum.ty
    );

    let unit_indices = datum
        .d_coeffs
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .map(|(j, _)| j)
        .collect();

    Ok(Alcove {
        datum,
        vertices,
        gram_e,
        unit_indices,
    })
}

/// Independent Gram computation: with `Omega` the matrix of simple-root
/// inner products, duality gives
/// `(e_i, e_j) = (Omega^-1)_ji / (d_i d_j)`, hence in scaled units
/// `gram_e = 2 D^-1 G^-1 D^-1` for the stored `G = 2 Omega / (psi, psi)`.
fn gram_e_from_inverse(datum: &RootDatum) -> Result<Vec<Vec<Rat>>> {
    let l = datum.rank;
    let ginv =
        mat::invert(&datum.gram).ok_or_else(|| Error::SingularGram(datum.ty.to_string()))?;
    let mut e = vec![vec![Rat::zero(); l]; l];
    for i in 0..l {
        for j in 0..l {
            e[i][j] = rat(2) * &ginv[j][i] / (rat(datum.d_coeffs[i]) * rat(datum.d_coeffs[j]));
        }
    }
    Ok(e)
}

impl Alcove {
    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// Whether a scaled ambient point satisfies every defining inequality.
    pub fn contains(&self, x: &[Rat]) -> bool {
        let psi = self.datum.psi();
        self.datum
            .simple_roots
            .iter()
            .all(|gamma| !self.datum.pair(x, gamma).is_negative())
            && self.datum.pair(x, &psi) <= rat(1)
    }

    /// Scaled ambient coordinates of the point with barycentric coordinates
    /// `c` over the vertices (the origin carries weight `1 - sum c`).
    pub fn point_from_barycentric(&self, c: &[Rat]) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.datum.dim];
        for (w, v) in c.iter().zip(&self.vertices) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += w * vi;
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_datum, RootSystemType};
    use crate::{frac, golden};

    fn alcove(s: &str) -> Alcove {
        build_alcove(build_datum(RootSystemType::parse(s).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn vertices_satisfy_the_duality_relations() {
        for name in ["A1", "A6", "B5", "C4", "D7", "E6", "E7", "F4", "G2"] {
            let a = alcove(name);
            for (j, v) in a.vertices.iter().enumerate() {
                for (i, gamma) in a.datum.simple_roots.iter().enumerate() {
                    let expected = if i == j {
                        rat(1) / rat(a.datum.d_coeffs[j])
                    } else {
                        rat(0)
                    };
                    assert_eq!(a.datum.pair(v, gamma), expected, "{name} e{} g{}", j + 1, i + 1);
                }
                let psi = a.datum.psi();
                assert_eq!(a.datum.pair(v, &psi), rat(1), "{name} e{} on psi wall", j + 1);
            }
        }
    }

    #[test]
    fn gram_matrices_match_the_closed_forms() {
        for name in [
            "A1", "A2", "A5", "A8", "B2", "B4", "B8", "C3", "C6", "D4", "D5", "D8", "E6", "E7",
        ] {
            let a = alcove(name);
            let expected = golden::gram_e_closed_form(a.datum.ty).unwrap();
            assert_eq!(a.gram_e, expected, "{name}");
        }
    }

    #[test]
    fn a3_vertices_have_the_printed_coordinates() {
        // e_j = (2 / ((psi,psi)(l+1))) ((l+1-j) sum_{k<=j} x_k - j sum_{k>j} x_k)
        let a = alcove("A3");
        assert_eq!(
            a.vertices[0],
            vec![frac(3, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2)]
        );
        assert_eq!(a.vertices[1], vec![rat(1), rat(1), rat(-1), rat(-1)]);
        assert_eq!(
            a.vertices[2],
            vec![frac(1, 2), frac(1, 2), frac(1, 2), frac(-3, 2)]
        );
    }

    #[test]
    fn unit_coefficient_vertices_follow_the_family_pattern() {
        assert_eq!(alcove("A5").unit_indices, vec![0, 1, 2, 3, 4]);
        assert_eq!(alcove("B6").unit_indices, vec![0]);
        assert_eq!(alcove("C5").unit_indices, vec![4]);
        assert_eq!(alcove("D6").unit_indices, vec![0, 4, 5]);
        assert_eq!(alcove("E6").unit_indices, vec![0, 4]);
        assert_eq!(alcove("E7").unit_indices, vec![0]);
        assert!(alcove("E8").unit_indices.is_empty());
        assert!(alcove("F4").unit_indices.is_empty());
        assert!(alcove("G2").unit_indices.is_empty());
    }

    #[test]
    fn vertices_and_origin_lie_in_the_polytope() {
        for name in ["A4", "B3", "C5", "D6", "E7", "G2"] {
            let a = alcove(name);
            assert!(a.contains(&vec![rat(0); a.datum.dim]), "{name} origin");
            for v in &a.vertices {
                assert!(a.contains(v), "{name}");
            }
            let psi = a.datum.psi();
            let outside: Vec<Rat> = psi.iter().map(|x| x * rat(2)).collect();
            assert!(!a.contains(&outside), "{name} far point");
        }
    }

    #[test]
    fn barycentric_points_reproduce_vertices() {
        let a = alcove("C3");
        let mut c = vec![rat(0); 3];
        c[1] = rat(1);
        assert_eq!(a.point_from_barycentric(&c), a.vertices[1]);
        let mid = vec![frac(1, 3); 3];
        assert!(a.contains(&a.point_from_barycentric(&mid)));
    }
}

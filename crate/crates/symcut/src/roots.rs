//! Restricted root systems: construction, enumeration, highest root.
//!
//! A datum fixes an irreducible reduced root system together with an exact
//! rational model of its geometry. Classical families live in the usual
//! coordinate embedding (so that later reflection identities can be checked
//! against explicit coordinate vectors); exceptional families live in the
//! basis of simple roots, where the Gram matrix is all the geometry needed.
//! All inner products are carried in units of the highest-root square, which
//! keeps every number rational regardless of the eventual metric scale.

use crate::{frac, mat, rat, Error, Rat, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// The ten family labels. `BC` is a marker for non-reduced restricted
/// systems; it is recognized so that catalog entries can name it, but every
/// geometric operation rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::BC => "BC",
        }
    }

    /// Rank fixed by the family name, if any.
    fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }
}

/// An irreducible root system type such as `A5`, `D4` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: u32,
}

impl RootSystemType {
    pub fn new(family: Family, rank: u32) -> Self {
        RootSystemType { family, rank }
    }

    /// Parses `"A5"`, `"a_5"`, `"BC3"`, `"E6"` and the like.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        let split = t
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(t.len());
        let (letters, digits) = t.split_at(split);
        let family = match letters {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" if digits == "6" => Family::E6,
            "E" if digits == "7" => Family::E7,
            "E" if digits == "8" => Family::E8,
            "F" if digits == "4" => Family::F4,
            "G" if digits == "2" => Family::G2,
            "BC" => Family::BC,
            _ => return Err(Error::UnknownCase(format!("root system `{s}`"))),
        };
        let rank: u32 = digits
            .parse()
            .map_err(|_| Error::UnknownCase(format!("root system `{s}` has no rank")))?;
        if let Some(fixed) = family.fixed_rank() {
            debug_assert_eq!(rank, fixed);
        }
        Ok(RootSystemType { family, rank })
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}", self.family.letter()),
            None => write!(f, "{}{}", self.family.letter(), self.rank),
        }
    }
}

/// A root system with its exact geometric model.
///
/// Vectors in the ambient space use plain rational coordinates; the bilinear
/// form [`RootDatum::pair`] returns inner products divided by the square of
/// the highest root, so `pair(psi, psi) == 1` always.
#[derive(Debug, Clone)]
pub struct RootDatum {
    /// Canonical type. Differs from `requested` only for C rank 2, which is
    /// stored as B rank 2 with the indices reversed.
    pub ty: RootSystemType,
    /// The type the caller asked for.
    pub requested: RootSystemType,
    pub rank: usize,
    /// Dimension of the ambient coordinate space (rank, or rank + 1 for A).
    pub dim: usize,
    /// Simple roots as ambient coordinate vectors.
    pub simple_roots: Vec<Vec<Rat>>,
    /// Symmetric matrix of the ambient bilinear form.
    pub form: Vec<Vec<Rat>>,
    /// `gram[i][j] = 2 (gamma_i, gamma_j) / (psi, psi)`.
    pub gram: Vec<Vec<Rat>>,
    /// Coefficients of the highest root over the simple roots.
    pub d_coeffs: Vec<i64>,
    /// Positive roots as integer coefficient vectors over the simple roots.
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Inner product of ambient vectors in units of `(psi, psi)`.
    pub fn pair(&self, u: &[Rat], v: &[Rat]) -> Rat {
        mat::bilinear(&self.form, u, v)
    }

    /// Ambient vector of a root given by simple-root coefficients.
    pub fn root_vec(&self, coeffs: &[i64]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for (c, root) in coeffs.iter().zip(&self.simple_roots) {
            if *c != 0 {
                let c = rat(*c);
                for (x, y) in v.iter_mut().zip(root) {
                    *x += &c * y;
                }
            }
        }
        v
    }

    /// The highest root as an ambient vector.
    pub fn psi(&self) -> Vec<Rat> {
        self.root_vec(&self.d_coeffs)
    }

    /// Reflection of `v` in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, v: &[Rat], root: &[Rat]) -> Vec<Rat> {
        let f = rat(2) * self.pair(v, root) / self.pair(root, root);
        v.iter()
            .zip(root)
            .map(|(x, r)| x - &f * r)
            .collect()
    }

    /// True when this datum was requested as C rank 2 and stored as B rank 2.
    pub fn relabeled_from_c2(&self) -> bool {
        self.requested != self.ty
    }

    /// Translates a vertex index given against the requested spelling into
    /// the canonical one. Only C rank 2 reverses anything.
    pub fn canonical_vertex_index(&self, j_requested: usize) -> usize {
        if self.relabeled_from_c2() {
            self.rank + 1 - j_requested
        } else {
            j_requested
        }
    }
}

/// Builds the datum for a reduced irreducible type.
///
/// C rank 2 is accepted and canonicalized to B rank 2 (the two systems agree
/// up to reversing the simple-root order); the original spelling is kept in
/// [`RootDatum::requested`]. `BC` ranks are rejected as non-reduced.
pub fn build_datum(t: RootSystemType) -> Result<RootDatum> {
    let reject = |reason: &str| -> Result<RootDatum> {
        Err(Error::RankOutOfRange {
            family: t.family.letter().to_string(),
            rank: t.rank,
            reason: reason.to_string(),
        })
    };
    match t.family {
        Family::BC => return Err(Error::NonReducedType(format!("BC{}", t.rank))),
        Family::A if t.rank < 1 => return reject("A needs rank >= 1"),
        Family::B if t.rank < 2 => return reject("B needs rank >= 2; rank 1 is A1"),
        Family::C if t.rank < 2 => return reject("C needs rank >= 2; rank 1 is A1"),
        Family::D if t.rank < 4 => {
            return reject("D needs rank >= 4; lower ranks are A1, A1+A1, A3")
        }
        _ => {}
    }
    if let Some(fixed) = t.family.fixed_rank() {
        if t.rank != fixed {
            return reject("rank is fixed by the family name");
        }
    }
    if t.family == Family::C && t.rank == 2 {
        let mut datum = build_datum(RootSystemType::new(Family::B, 2))?;
        datum.requested = t;
        return Ok(datum);
    }

    let l = t.rank as usize;
    let (dim, form, simple_roots) = match t.family {
        Family::A => (l + 1, scaled_identity(l + 1, frac(1, 2)), chain_roots(l, l + 1)),
        Family::B => {
            let mut roots = chain_roots(l - 1, l);
            roots.push(unit(l, l - 1));
            (l, scaled_identity(l, frac(1, 2)), roots)
        }
        Family::C => {
            let mut roots = chain_roots(l - 1, l);
            let mut last = vec![Rat::zero(); l];
            last[l - 1] = rat(2);
            roots.push(last);
            (l, scaled_identity(l, frac(1, 4)), roots)
        }
        Family::D => {
            let mut roots = chain_roots(l - 1, l);
            let mut last = vec![Rat::zero(); l];
            last[l - 2] = rat(1);
            last[l - 1] = rat(1);
            roots.push(last);
            (l, scaled_identity(l, frac(1, 2)), roots)
        }
        Family::E6 => simply_laced(l, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
        Family::E7 => simply_laced(l, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]),
        Family::E8 => simply_laced(
            l,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
        ),
        Family::F4 => {
            // Two long then two short simple roots, double bond in the middle.
            let g = vec![
                vec![rat(2), rat(-1), rat(0), rat(0)],
                vec![rat(-1), rat(2), rat(-1), rat(0)],
                vec![rat(0), rat(-1), rat(1), frac(-1, 2)],
                vec![rat(0), rat(0), frac(-1, 2), rat(1)],
            ];
            coefficient_basis(g)
        }
        Family::G2 => {
            // Long root first, short root second, triple bond.
            let g = vec![vec![rat(2), rat(-1)], vec![rat(-1), frac(2, 3)]];
            coefficient_basis(g)
        }
        Family::BC => unreachable!(),
    };

    let mut gram = vec![vec![Rat::zero(); l]; l];
    for i in 0..l {
        for j in 0..l {
            gram[i][j] = rat(2) * mat::bilinear(&form, &simple_roots[i], &simple_roots[j]);
        }
    }

    let positive_roots = reflection_closure(&gram)?;
    let d_coeffs = highest_root(&gram, &positive_roots);

    let datum = RootDatum {
        ty: t,
        requested: t,
        rank: l,
        dim,
        simple_roots,
        form,
        gram,
        d_coeffs,
        positive_roots,
    };
    debug_assert_eq!(datum.pair(&datum.psi(), &datum.psi()), rat(1));
    Ok(datum)
}

/// All roots, positive and negative, as coefficient vectors.
pub fn enumerate_roots(datum: &RootDatum) -> Vec<Vec<i64>> {
    let mut all: Vec<Vec<i64>> = datum
        .positive_roots
        .iter()
        .map(|r| r.iter().map(|c| -c).collect())
        .collect();
    all.extend(datum.positive_roots.iter().cloned());
    all.sort();
    all
}

/// Number of roots orthogonal to the highest root, counted with both signs.
pub fn count_orthogonal_to_highest(datum: &RootDatum) -> usize {
    let gd = mat::mat_vec(
        &datum.gram,
        &datum.d_coeffs.iter().map(|&c| rat(c)).collect::<Vec<_>>(),
    );
    let orth_positive = datum
        .positive_roots
        .iter()
        .filter(|r| {
            r.iter()
                .zip(&gd)
                .map(|(&c, g)| rat(c) * g)
                .fold(Rat::zero(), |acc, t| acc + t)
                .is_zero()
        })
        .count();
    2 * orth_positive
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = rat(1);
    v
}

/// `x_i - x_{i+1}` for `i = 1..=n` inside `R^dim`.
fn chain_roots(n: usize, dim: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = rat(1);
            v[i + 1] = rat(-1);
            v
        })
        .collect()
}

fn scaled_identity(dim: usize, s: Rat) -> Vec<Vec<Rat>> {
    let mut m = vec![vec![Rat::zero(); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = s.clone();
    }
    m
}

/// Coefficient-basis model for a simply laced diagram: all roots long,
/// adjacent simple roots pair to -1.
fn simply_laced(l: usize, edges: &[(usize, usize)]) -> (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let mut g = scaled_identity(l, rat(2));
    for &(i, j) in edges {
        g[i][j] = rat(-1);
        g[j][i] = rat(-1);
    }
    coefficient_basis(g)
}

/// Uses the simple-root coefficients themselves as ambient coordinates; the
/// bilinear form is then half the Gram matrix.
fn coefficient_basis(gram2: Vec<Vec<Rat>>) -> (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let l = gram2.len();
    let form: Vec<Vec<Rat>> = gram2
        .iter()
        .map(|row| row.iter().map(|x| x / rat(2)).collect())
        .collect();
    let simple = (0..l).map(|i| unit(l, i)).collect();
    (l, form, simple)
}

/// Orbit of the simple roots under the simple reflections; for an
/// irreducible finite system this is the whole root set. Returns the
/// positive half, sorted.
fn reflection_closure(gram: &[Vec<Rat>]) -> Result<Vec<Vec<i64>>> {
    let l = gram.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..l {
        let mut r = vec![0i64; l];
        r[i] = 1;
        seen.insert(r.clone());
        frontier.push(r);
    }
    // Cheap safety valve; the largest system here has 240 roots.
    let max_roots = 1000;
    while let Some(root) = frontier.pop() {
        for i in 0..l {
            let n = cartan_integer(gram, &root, i);
            if n == 0 {
                continue;
            }
            let mut image = root.clone();
            image[i] -= n;
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
        if seen.len() > max_roots {
            return Err(Error::SingularGram(
                "reflection closure did not stabilize".to_string(),
            ));
        }
    }
    Ok(seen
        .into_iter()
        .filter(|r| r.iter().sum::<i64>() > 0)
        .collect())
}

/// `2 (root, gamma_i) / (gamma_i, gamma_i)`, guaranteed integral for a
/// crystallographic Gram matrix.
fn cartan_integer(gram: &[Vec<Rat>], root: &[i64], i: usize) -> i64 {
    let pairing: Rat = gram[i]
        .iter()
        .zip(root)
        .map(|(g, &c)| g * rat(c))
        .fold(Rat::zero(), |acc, t| acc + t);
    let n = rat(2) * pairing / &gram[i][i];
    assert!(n.is_integer(), "non-integral Cartan pairing");
    let n = n.to_integer();
    i64::try_from(n).expect("Cartan integer fits i64")
}

/// The unique root dominating all others in the coefficient order.
fn highest_root(gram: &[Vec<Rat>], positives: &[Vec<i64>]) -> Vec<i64> {
    let set: BTreeSet<&Vec<i64>> = positives.iter().collect();
    let mut candidates = positives.iter().filter(|r| {
        (0..gram.len()).all(|i| {
            let mut up = (*r).clone();
            up[i] += 1;
            !set.contains(&up)
        })
    });
    let highest = candidates.next().expect("nonempty root system").clone();
    assert!(
        candidates.next().is_none(),
        "irreducible system has a unique highest root"
    );
    let gd = mat::mat_vec(gram, &highest.iter().map(|&c| rat(c)).collect::<Vec<_>>());
    assert!(gd.iter().all(|x| !x.is_negative()), "highest root is dominant");
    highest
}

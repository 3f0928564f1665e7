//! Deck transformations: the center group cut out by the unit-coefficient
//! alcove vertices, its subgroups, and the reduction map that realizes the
//! group law.
//!
//! A point of the ambient space is reduced into the Cartan polytope by
//! repeatedly reflecting across the violated walls (the simple-root walls
//! and the affine highest-root wall). Those reflections generate the full
//! symmetry group of the wall arrangement, so the greedy loop terminates in
//! the polytope. The product of two center elements is the reduction of the
//! sum of their vertex vectors; the construction fails loudly if a reduced
//! sum is not itself a center vertex.

use crate::alcove::Alcove;
use crate::roots::RootDatum;
use crate::{rat, Error, Rat, Result};
use num_traits::{Signed, Zero};
use std::fmt;

/// Defensive bound on reduction steps. Real orbits here take far fewer.
const MAX_REDUCTION_STEPS: u32 = 10_000;

/// An element of the center: the origin or a unit-coefficient vertex
/// (stored as a zero-based index into the alcove vertex list).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CenterElement {
    Origin,
    Vertex(usize),
}

impl CenterElement {
    /// One-based display such as `0` or `e3`.
    pub fn name(self) -> String {
        match self {
            CenterElement::Origin => "0".to_string(),
            CenterElement::Vertex(j) => format!("e{}", j + 1),
        }
    }
}

/// Isomorphism class of a center group. The classification only ever
/// produces the trivial group, cyclic groups, and the Klein four group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupStructure {
    Trivial,
    Cyclic(usize),
    KleinFour,
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Trivial => write!(f, "Z1"),
            GroupStructure::Cyclic(n) => write!(f, "Z{n}"),
            GroupStructure::KleinFour => write!(f, "Z2 x Z2"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CenterGroup {
    /// Identity first, then vertex elements in vertex order.
    pub elements: Vec<CenterElement>,
    /// `cayley[a][b]` is the index of the product of elements `a` and `b`.
    pub cayley: Vec<Vec<usize>>,
    /// `inverses[a]` is the index of the inverse of element `a`.
    pub inverses: Vec<usize>,
    pub structure: GroupStructure,
}

/// A subgroup of a center group, listed by element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    /// Sorted indices into [`CenterGroup::elements`], identity included.
    pub members: Vec<usize>,
    /// Canonical name: `trivial`, `Z<k>`, `full`, or `gen=e<j>` where a
    /// cyclic-order name would be ambiguous.
    pub name: String,
    /// Zero-based alcove vertex indices of the non-identity members.
    pub vertex_indices: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// Reduces `x` (in scaled ambient coordinates) into the Cartan polytope.
///
/// The most violated wall is chosen by the coroot-normalized pairing
/// `2 (x, gamma_i) / (gamma_i, gamma_i)`, lowest index on ties; the affine
/// wall is only used once no simple wall is violated.
pub fn reduce_to_alcove(datum: &RootDatum, x: &[Rat]) -> Result<Vec<Rat>> {
    let psi = datum.psi();
    let mut x = x.to_vec();
    for _ in 0..MAX_REDUCTION_STEPS {
        let mut worst: Option<(usize, Rat)> = None;
        for (i, gamma) in datum.simple_roots.iter().enumerate() {
            let normalized = rat(2) * datum.pair(&x, gamma) / &datum.gram[i][i];
            if normalized.is_negative() {
                let beats = match &worst {
                    Some((_, w)) => normalized < *w,
                    None => true,
                };
                if beats {
                    worst = Some((i, normalized));
                }
            }
        }
        if let Some((i, _)) = worst {
            x = datum.reflect(&x, &datum.simple_roots[i].clone());
            continue;
        }
        let excess = datum.pair(&x, &psi) - rat(1);
        if excess.is_positive() {
            // Affine reflection in the wall (x, psi) = 1; the scaled pairing
            // of psi with itself is exactly 1.
            for (xi, pi) in x.iter_mut().zip(&psi) {
                *xi -= rat(2) * &excess * pi;
            }
            continue;
        }
        return Ok(x);
    }
    Err(Error::NonTerminating {
        steps: MAX_REDUCTION_STEPS,
    })
}

/// The center as a set: the origin plus every unit-coefficient vertex.
pub fn center_elements(alcove: &Alcove) -> Vec<CenterElement> {
    let mut els = vec![CenterElement::Origin];
    els.extend(alcove.unit_indices.iter().map(|&j| CenterElement::Vertex(j)));
    els
}

fn element_vector(alcove: &Alcove, el: CenterElement) -> Vec<Rat> {
    match el {
        CenterElement::Origin => vec![Rat::zero(); alcove.datum.dim],
        CenterElement::Vertex(j) => alcove.vertices[j].clone(),
    }
}

fn locate_element(alcove: &Alcove, elements: &[CenterElement], x: &[Rat]) -> Option<usize> {
    elements
        .iter()
        .position(|&el| element_vector(alcove, el) == x)
}

/// Builds the full group: Cayley table by reduction of vertex sums,
/// inverses, and the isomorphism class.
pub fn build_center_group(alcove: &Alcove) -> Result<CenterGroup> {
    let elements = center_elements(alcove);
    let n = elements.len();

    let mut cayley = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut sum = element_vector(alcove, elements[a]);
            for (s, v) in sum.iter_mut().zip(element_vector(alcove, elements[b])) {
                *s += v;
            }
            let reduced = reduce_to_alcove(&alcove.datum, &sum)?;
            cayley[a][b] = locate_element(alcove, &elements, &reduced).ok_or_else(|| {
                Error::ReductionMismatch {
                    point: format!("{reduced:?}"),
                }
            })?;
        }
    }

    let mut inverses = vec![0usize; n];
    for a in 0..n {
        inverses[a] = (0..n)
            .find(|&b| cayley[a][b] == 0)
            .ok_or_else(|| Error::ReductionMismatch {
                point: format!("no inverse for {}", elements[a].name()),
            })?;
    }

    // The table is small enough to check the group axioms outright.
    debug_assert!((0..n).all(|a| cayley[0][a] == a && cayley[a][0] == a));
    debug_assert!((0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| cayley[cayley[a][b]][c] == cayley[a][cayley[b][c]]))
    }));

    let structure = classify(&cayley);
    Ok(CenterGroup {
        elements,
        cayley,
        inverses,
        structure,
    })
}

fn element_order(cayley: &[Vec<usize>], a: usize) -> usize {
    let mut acc = a;
    let mut k = 1;
    while acc != 0 {
        acc = cayley[acc][a];
        k += 1;
    }
    k
}

fn classify(cayley: &[Vec<usize>]) -> GroupStructure {
    let n = cayley.len();
    if n == 1 {
        return GroupStructure::Trivial;
    }
    let max_order = (0..n).map(|a| element_order(cayley, a)).max().unwrap();
    if max_order == n {
        GroupStructure::Cyclic(n)
    } else {
        debug_assert_eq!((n, max_order), (4, 2));
        GroupStructure::KleinFour
    }
}

impl CenterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_order(&self, a: usize) -> usize {
        element_order(&self.cayley, a)
    }
}

/// Enumerates every subgroup by closing each subset of the element set.
/// Centers have order at most nine, so the power set is cheap and the
/// enumeration is exhaustive by construction.
pub fn subgroups(group: &CenterGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue; // identity required
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members.iter().all(|&a| {
            group.inverses[a] == a
                || members.contains(&group.inverses[a])
                    && members
                        .iter()
                        .all(|&b| members.contains(&group.cayley[a][b]))
        }) && members
            .iter()
            .all(|&a| members.iter().all(|&b| members.contains(&group.cayley[a][b])));
        if closed && !found.contains(&members) {
            found.push(members);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|members| {
            let vertex_indices: Vec<usize> = members
                .iter()
                .filter_map(|&i| match group.elements[i] {
                    CenterElement::Origin => None,
                    CenterElement::Vertex(j) => Some(j),
                })
                .collect();
            let name = canonical_name(group, &members, &vertex_indices);
            Subgroup {
                members,
                name,
                vertex_indices,
            }
        })
        .collect()
}

fn canonical_name(group: &CenterGroup, members: &[usize], vertex_indices: &[usize]) -> String {
    let k = members.len();
    if k == 1 {
        return "trivial".to_string();
    }
    match group.structure {
        GroupStructure::Cyclic(_) => format!("Z{k}"),
        GroupStructure::KleinFour => {
            if k == 4 {
                "full".to_string()
            } else {
                format!("gen=e{}", vertex_indices[0] + 1)
            }
        }
        GroupStructure::Trivial => unreachable!("trivial groups have no proper subgroups"),
    }
}

/// Resolves a subgroup name against the enumerated list.
///
/// Accepts canonical names plus the aliases `full` (whole center), `Z1`
/// (trivial), and `gen=e<j>` for any cyclic subgroup generated by one
/// vertex. `Z2` inside a Klein four center is rejected as ambiguous.
pub fn find_subgroup<'a>(
    group: &CenterGroup,
    subs: &'a [Subgroup],
    name: &str,
) -> Result<&'a Subgroup> {
    let raw = name.trim();
    let lower = raw.to_ascii_lowercase();
    let full_order = group.order();
    if lower == "full" {
        return subs
            .iter()
            .find(|s| s.order() == full_order)
            .ok_or_else(|| Error::BadQuery("center has no subgroups at all".to_string()));
    }
    if lower == "trivial" || lower == "z1" {
        return Ok(subs.iter().find(|s| s.is_trivial()).unwrap());
    }
    if let Some(rest) = lower.strip_prefix("gen=") {
        let mut generators = Vec::new();
        for part in rest.split(',') {
            let idx: usize = part
                .trim()
                .trim_start_matches('e')
                .parse()
                .map_err(|_| Error::BadQuery(format!("bad generator `{part}` in `{raw}`")))?;
            if idx == 0 {
                return Err(Error::BadQuery(format!("vertex indices are one-based in `{raw}`")));
            }
            generators.push(idx - 1);
        }
        // Close the generator set inside the group.
        let mut member_set: Vec<usize> = vec![0];
        for g in &generators {
            let el = group
                .elements
                .iter()
                .position(|&e| e == CenterElement::Vertex(*g))
                .ok_or_else(|| {
                    Error::BadQuery(format!("e{} is not a center vertex", g + 1))
                })?;
            if !member_set.contains(&el) {
                member_set.push(el);
            }
        }
        loop {
            let mut grew = false;
            let snapshot = member_set.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let p = group.cayley[a][b];
                    if !member_set.contains(&p) {
                        member_set.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        member_set.sort_unstable();
        return subs
            .iter()
            .find(|s| s.members == member_set)
            .ok_or_else(|| Error::BadQuery(format!("`{raw}` closes to no listed subgroup")));
    }
    if let Some(k) = lower.strip_prefix('z').and_then(|d| d.parse::<usize>().ok()) {
        let matches: Vec<&Subgroup> = subs.iter().filter(|s| s.order() == k).collect();
        return match matches.len() {
            0 => Err(Error::BadQuery(format!(
                "center {} has no subgroup of order {k}",
                group.structure
            ))),
            1 => Ok(matches[0]),
            _ => Err(Error::BadQuery(format!(
                "`{raw}` is ambiguous here; use one of: {}",
                matches
                    .iter()
                    .map(|s| s.name.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))),
        };
    }
    Err(Error::BadQuery(format!("unrecognized subgroup name `{raw}`")))
}

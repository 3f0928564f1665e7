//! Dictionary of compact irreducible symmetric spaces with a nontrivial
//! deck transformation group, keyed by the classical labels.
//!
//! Each entry records the restricted root system, the ambient root system
//! whose Killing form fixes the metric scale, and whether the highest
//! restricted root halves. From that the module assembles the full
//! analysis of one quotient (center subgroup, cut polytope, injectivity
//! and diameter coefficients) and emits the two summary tables.

use crate::alcove::{build_alcove, Alcove};
use crate::center::{
    build_center_group, find_subgroup, subgroups, CenterGroup, Subgroup,
};
use crate::killing::{psi_norm, MetricResult, PsiRelation};
use crate::polytope::{
    cut_locus_description, cut_polytope, diameter_closed_form, diameter_from_vertices,
    enumerate_vertices, injectivity_value, CutFacet, CutPolytope, Vertex,
};
use crate::roots::{build_datum, Family, RootDatum, RootSystemType};
use crate::{Error, Rat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceClass {
    /// Quotient of a compact simple group by a fixed-point subgroup.
    Quotient,
    /// The group itself as a symmetric space.
    Group,
}

/// Restricted root system of an entry. Non-reduced systems carry no
/// nontrivial deck group, so they mark dead ends in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    Reduced(RootSystemType),
    NonReduced { rank: u32 },
}

impl std::fmt::Display for Sigma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sigma::Reduced(ty) => write!(f, "{ty}"),
            Sigma::NonReduced { rank } => write!(f, "BC{rank}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceEntry {
    /// Family label, e.g. "A I", "S^q", "SU(n)".
    pub label: String,
    /// Concrete name, e.g. "SU(5)/SO(5)", "S^3", "Spin(9)".
    pub name: String,
    pub class: SpaceClass,
    pub sigma: Sigma,
    /// Root system whose Killing form sets the unit of length.
    pub delta: RootSystemType,
    pub relation: PsiRelation,
    /// Squared Killing length of the highest restricted root.
    pub psi_sq: Rat,
}

fn ty(family: Family, rank: u32) -> RootSystemType {
    RootSystemType { family, rank }
}

/// Reduced simple type underlying so(m), with the low-rank coincidences
/// folded in (so(3) and so(4) contribute a1, so(6) is a3).
fn so_type(m: u32) -> Result<RootSystemType> {
    Ok(match m {
        0..=2 => {
            return Err(Error::UnknownCase(format!(
                "so({m}) is not semisimple"
            )))
        }
        3 | 4 => ty(Family::A, 1),
        5 => ty(Family::B, 2),
        6 => ty(Family::A, 3),
        m if m % 2 == 1 => ty(Family::B, (m - 1) / 2),
        m => ty(Family::D, m / 2),
    })
}

fn entry(
    label: &str,
    name: String,
    class: SpaceClass,
    sigma: Sigma,
    delta: RootSystemType,
    relation: PsiRelation,
) -> Result<SpaceEntry> {
    let psi_sq = psi_norm(delta, relation)?;
    Ok(SpaceEntry {
        label: label.to_string(),
        name,
        class,
        sigma,
        delta,
        relation,
        psi_sq,
    })
}

fn range_err(family: &str, rank: u32, reason: &str) -> Error {
    Error::RankOutOfRange {
        family: family.to_string(),
        rank,
        reason: reason.to_string(),
    }
}

/// Compact quotient entries, one constructor per catalog family.
pub mod spaces {
    use super::*;

    pub fn a_one(n: u32) -> Result<SpaceEntry> {
        if n < 2 {
            return Err(range_err("A I", n, "needs n >= 2"));
        }
        entry(
            "A I",
            format!("SU({n})/SO({n})"),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::A, n - 1)),
            ty(Family::A, n - 1),
            PsiRelation::SameLength,
        )
    }

    pub fn a_two(n: u32) -> Result<SpaceEntry> {
        if n < 2 {
            return Err(range_err("A II", n, "needs n >= 2"));
        }
        entry(
            "A II",
            format!("SU({})/Sp({n})", 2 * n),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::A, n - 1)),
            ty(Family::A, 2 * n - 1),
            PsiRelation::Halved,
        )
    }

    pub fn a_three(p: u32, q: u32) -> Result<SpaceEntry> {
        if p < 1 || q < p {
            return Err(range_err("A III", p, "needs 1 <= p <= q"));
        }
        let sigma = if p == q && p >= 2 {
            Sigma::Reduced(ty(Family::C, p))
        } else {
            Sigma::NonReduced { rank: p }
        };
        entry(
            "A III",
            format!("Gr_{{{p},{q}}}(C)"),
            SpaceClass::Quotient,
            sigma,
            ty(Family::A, p + q - 1),
            PsiRelation::SameLength,
        )
    }

    pub fn c_one(n: u32) -> Result<SpaceEntry> {
        if n < 3 {
            return Err(range_err(
                "C I",
                n,
                "needs n >= 3; smaller ranks coincide with earlier families",
            ));
        }
        entry(
            "C I",
            format!("Sp({n})/U({n})"),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::C, n)),
            ty(Family::C, n),
            PsiRelation::SameLength,
        )
    }

    pub fn c_two(p: u32, q: u32) -> Result<SpaceEntry> {
        if p < 1 || q < p {
            return Err(range_err("C II", p, "needs 1 <= p <= q"));
        }
        let sigma = if p == q && p >= 2 {
            Sigma::Reduced(ty(Family::C, p))
        } else {
            Sigma::NonReduced { rank: p }
        };
        entry(
            "C II",
            format!("Gr_{{{p},{q}}}(H)"),
            SpaceClass::Quotient,
            sigma,
            ty(Family::C, p + q),
            PsiRelation::Halved,
        )
    }

    pub fn sphere(q: u32) -> Result<SpaceEntry> {
        if q < 2 {
            return Err(range_err("S^q", q, "needs q >= 2"));
        }
        let relation = if q == 2 {
            PsiRelation::SameLength
        } else {
            PsiRelation::Halved
        };
        entry(
            "S^q",
            format!("S^{q}"),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::A, 1)),
            so_type(q + 1)?,
            relation,
        )
    }

    pub fn real_grassmannian(p: u32, q: u32) -> Result<SpaceEntry> {
        if p > q {
            return real_grassmannian(q, p);
        }
        if p == 1 {
            return sphere(q);
        }
        if p == q {
            if p < 4 {
                return Err(range_err(
                    "BD I",
                    p,
                    "the square case needs p >= 4; smaller ranks coincide with earlier families",
                ));
            }
            return entry(
                "BD I",
                format!("Gr_{{{p},{p}}}(R)"),
                SpaceClass::Quotient,
                Sigma::Reduced(ty(Family::D, p)),
                ty(Family::D, p),
                PsiRelation::SameLength,
            );
        }
        if p < 3 {
            return Err(range_err(
                "BD I",
                p,
                "needs p >= 3 when p < q; smaller ranks coincide with earlier families",
            ));
        }
        entry(
            "BD I",
            format!("Gr_{{{p},{q}}}(R)"),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::B, p)),
            so_type(p + q)?,
            PsiRelation::SameLength,
        )
    }

    pub fn d_three(n: u32) -> Result<SpaceEntry> {
        if n < 4 {
            return Err(range_err(
                "D III",
                n,
                "needs n >= 4; smaller ranks coincide with earlier families",
            ));
        }
        let sigma = if n.is_multiple_of(2) {
            Sigma::Reduced(ty(Family::C, n / 2))
        } else {
            Sigma::NonReduced { rank: (n - 1) / 2 }
        };
        entry(
            "D III",
            format!("SO({})/U({n})", 2 * n),
            SpaceClass::Quotient,
            sigma,
            ty(Family::D, n),
            PsiRelation::SameLength,
        )
    }

    pub fn e_one() -> Result<SpaceEntry> {
        entry(
            "E I",
            "E6/Sp(4)".to_string(),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::E6, 6)),
            ty(Family::E6, 6),
            PsiRelation::SameLength,
        )
    }

    pub fn e_four() -> Result<SpaceEntry> {
        entry(
            "E IV",
            "E6/F4".to_string(),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::A, 2)),
            ty(Family::E6, 6),
            PsiRelation::Halved,
        )
    }

    pub fn e_five() -> Result<SpaceEntry> {
        entry(
            "E V",
            "E7/SU(8)".to_string(),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::E7, 7)),
            ty(Family::E7, 7),
            PsiRelation::SameLength,
        )
    }

    pub fn e_seven() -> Result<SpaceEntry> {
        entry(
            "E VII",
            "E7/(E6 x SO(2))".to_string(),
            SpaceClass::Quotient,
            Sigma::Reduced(ty(Family::C, 3)),
            ty(Family::E7, 7),
            PsiRelation::SameLength,
        )
    }

    /// A compact simple group as a symmetric space: the restricted system
    /// is the group's own root system and the highest root halves in
    /// square.
    pub fn group(label: &str, delta: RootSystemType, name: String) -> Result<SpaceEntry> {
        entry(
            label,
            name,
            SpaceClass::Group,
            Sigma::Reduced(delta),
            delta,
            PsiRelation::Halved,
        )
    }

    pub fn special_unitary(n: u32) -> Result<SpaceEntry> {
        if n < 2 {
            return Err(range_err("SU(n)", n, "needs n >= 2"));
        }
        group("SU(n)", ty(Family::A, n - 1), format!("SU({n})"))
    }

    pub fn spin(m: u32) -> Result<SpaceEntry> {
        if m < 5 || m == 6 {
            return Err(range_err(
                "Spin(m)",
                m,
                "needs m = 5 or m >= 7; smaller groups coincide with unitary ones",
            ));
        }
        if m % 2 == 1 {
            group("Spin(2n+1)", ty(Family::B, (m - 1) / 2), format!("Spin({m})"))
        } else {
            group("Spin(2n)", ty(Family::D, m / 2), format!("Spin({m})"))
        }
    }

    pub fn symplectic(n: u32) -> Result<SpaceEntry> {
        if n < 3 {
            return Err(range_err(
                "Sp(n)",
                n,
                "needs n >= 3; smaller groups coincide with spin groups",
            ));
        }
        group("Sp(n)", ty(Family::C, n), format!("Sp({n})"))
    }

    pub fn exceptional_group(name: &str) -> Result<SpaceEntry> {
        let delta = RootSystemType::parse(name)?;
        let upper = name.to_uppercase();
        let label = match upper.as_str() {
            "E6" => "E6",
            "E7" => "E7",
            "E8" => "E8",
            "F4" => "F4",
            "G2" => "G2",
            other => return Err(Error::UnknownCase(format!("group {other:?}"))),
        };
        group(label, delta, upper)
    }

    /// An explicitly given restricted root system, read as the root
    /// system of a group manifold.
    pub fn from_sigma(sigma_ty: RootSystemType) -> Result<SpaceEntry> {
        group("sigma", sigma_ty, format!("{sigma_ty}"))
    }
}

/// Resolves a space given on the command line. `label` is the family
/// label or a concrete group name; the numeric parameters fill in the
/// family placeholders.
pub fn resolve_space(
    label: &str,
    n: Option<u32>,
    p: Option<u32>,
    q: Option<u32>,
) -> Result<SpaceEntry> {
    let trimmed = label.trim();
    let canon = trimmed.to_uppercase();
    let need_n = |what: &str| {
        n.ok_or_else(|| Error::BadQuery(format!("{what} needs --n")))
    };
    let need_pq = |what: &str| -> Result<(u32, u32)> {
        match (p, q) {
            (Some(p), Some(q)) => Ok((p, q)),
            (Some(p), None) => Ok((p, p)),
            _ => Err(Error::BadQuery(format!("{what} needs --p (and optionally --q)"))),
        }
    };
    if canon == "S^Q" {
        let q = q
            .or(n)
            .ok_or_else(|| Error::BadQuery("S^q needs --q".to_string()))?;
        return spaces::sphere(q);
    }
    if let Some(rest) = canon.strip_prefix("S^") {
        let q = rest
            .parse::<u32>()
            .map_err(|_| Error::UnknownCase(format!("space {trimmed:?}")))?;
        return spaces::sphere(q);
    }
    if let Some(inner) = parenthesized(&canon, "SU") {
        return spaces::special_unitary(inner);
    }
    if let Some(inner) = parenthesized(&canon, "SPIN") {
        return spaces::spin(inner);
    }
    if let Some(inner) = parenthesized(&canon, "SP") {
        return spaces::symplectic(inner);
    }
    match canon.as_str() {
        "A I" | "AI" => spaces::a_one(need_n("A I")?),
        "A II" | "AII" => spaces::a_two(need_n("A II")?),
        "A III" | "AIII" => {
            let (p, q) = need_pq("A III")?;
            spaces::a_three(p.min(q), p.max(q))
        }
        "C I" | "CI" => spaces::c_one(need_n("C I")?),
        "C II" | "CII" => {
            let (p, q) = need_pq("C II")?;
            spaces::c_two(p.min(q), p.max(q))
        }
        "BD I" | "BDI" => {
            let (p, q) = need_pq("BD I")?;
            spaces::real_grassmannian(p, q)
        }
        "D III" | "DIII" => spaces::d_three(need_n("D III")?),
        "E I" | "EI" => spaces::e_one(),
        "E IV" | "EIV" => spaces::e_four(),
        "E V" | "EV" => spaces::e_five(),
        "E VII" | "EVII" => spaces::e_seven(),
        "E6" | "E7" | "E8" | "F4" | "G2" => spaces::exceptional_group(&canon),
        "SU" => spaces::special_unitary(need_n("SU(n)")?),
        "SPIN" => spaces::spin(need_n("Spin(m)")?),
        "SP" => spaces::symplectic(need_n("Sp(n)")?),
        _ => Err(Error::UnknownCase(format!("space {trimmed:?}"))),
    }
}

fn parenthesized(text: &str, prefix: &str) -> Option<u32> {
    let rest = text.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.parse().ok()
}

/// Why an entry admits no nontrivial quotient, if that is the case.
pub fn no_forms_reason(entry: &SpaceEntry) -> Option<String> {
    match entry.sigma {
        Sigma::NonReduced { rank } => Some(format!(
            "the restricted root system BC{rank} is non-reduced, so the deck group is trivial"
        )),
        Sigma::Reduced(sigma_ty) => match sigma_ty.family {
            Family::E8 | Family::F4 | Family::G2 => Some(format!(
                "the root lattice of {sigma_ty} already spans the weight lattice, so the deck group is trivial"
            )),
            _ => None,
        },
    }
}

/// The center data shared by every quotient of one entry.
pub struct FormSet {
    pub entry: SpaceEntry,
    pub datum: RootDatum,
    pub alcove: Alcove,
    pub group: CenterGroup,
    pub subgroups: Vec<Subgroup>,
}

pub fn enumerate_forms(entry: &SpaceEntry) -> Result<FormSet> {
    if let Some(reason) = no_forms_reason(entry) {
        return Err(Error::NoForms(reason));
    }
    let sigma_ty = match entry.sigma {
        Sigma::Reduced(ty) => ty,
        Sigma::NonReduced { .. } => unreachable!("caught by no_forms_reason"),
    };
    let datum = build_datum(sigma_ty)?;
    let alcove = build_alcove(datum.clone())?;
    let group = build_center_group(&alcove)?;
    let subs = subgroups(&group);
    Ok(FormSet {
        entry: entry.clone(),
        datum,
        alcove,
        group,
        subgroups: subs,
    })
}

/// Quotients by subgroups in the same class are isometric; the class tag
/// names the orbit of the subgroup under outer automorphisms of the
/// restricted system.
pub fn isometry_class(datum: &RootDatum, sub: &Subgroup) -> String {
    let l = datum.rank;
    if datum.ty.family == Family::D && l.is_multiple_of(2) && sub.order() == 2 {
        let spin_pair = sub.name == format!("gen=e{}", l - 1) || sub.name == format!("gen=e{l}");
        if l == 4 {
            // Triality permutes the three order-two subgroups.
            return "triality".to_string();
        }
        if spin_pair {
            return "half-spin".to_string();
        }
        if sub.name == "gen=e1" {
            return "vector".to_string();
        }
    }
    sub.name.clone()
}

/// Full analysis of one quotient: the subgroup, its cut polytope, and the
/// squared metric coefficients in Killing units.
pub struct Analysis {
    pub entry: SpaceEntry,
    pub datum: RootDatum,
    pub alcove: Alcove,
    pub group: CenterGroup,
    pub gamma: Subgroup,
    pub isometry_class: String,
    pub polytope: CutPolytope,
    /// Present when the rank is within the enumeration cap.
    pub vertices: Option<Vec<Vertex>>,
    pub facets: Option<Vec<CutFacet>>,
    pub metric: MetricResult,
}

pub fn analyze(entry: &SpaceEntry, gamma_query: &str, cap: u32) -> Result<Analysis> {
    let set = enumerate_forms(entry)?;
    let FormSet {
        entry,
        datum,
        alcove,
        group,
        subgroups: subs,
    } = set;
    let query = translate_class_query(&datum, gamma_query);
    let gamma = find_subgroup(&group, &subs, &query)?.clone();
    let class = isometry_class(&datum, &gamma);
    let polytope = cut_polytope(&alcove, &gamma);
    let within_cap = datum.rank <= cap as usize;
    let vertices = if within_cap {
        Some(enumerate_vertices(&polytope, cap)?)
    } else {
        None
    };
    let facets = vertices
        .as_ref()
        .map(|vs| cut_locus_description(&polytope, vs).facets);
    let i_alcove = injectivity_value(&polytope);
    let closed = diameter_closed_form(datum.ty, &gamma);
    let enumerated = vertices.as_ref().map(|vs| diameter_from_vertices(&polytope, vs));
    if let (Some(c), Some(e)) = (&closed, &enumerated) {
        assert_eq!(c, e, "closed form and vertex scan disagree for {}", entry.name);
    }
    let beyond_tables = closed.is_none() && enumerated.is_some();
    let d_sq_coeff = closed.or(enumerated).map(|d| d / &entry.psi_sq);
    let metric = MetricResult {
        i_sq_coeff: i_alcove / &entry.psi_sq,
        d_known: d_sq_coeff.is_some(),
        d_sq_coeff,
        beyond_tables,
    };
    Ok(Analysis {
        entry,
        datum,
        alcove,
        group,
        gamma,
        isometry_class: class,
        polytope,
        vertices,
        facets,
        metric,
    })
}

/// Lets the user name a quotient by its isometry class; the
/// representative subgroup is chosen deterministically.
fn translate_class_query(datum: &RootDatum, query: &str) -> String {
    let l = datum.rank;
    if datum.ty.family == Family::D && l.is_multiple_of(2) {
        match query.trim() {
            "half-spin" => return format!("gen=e{}", l - 1),
            "vector" => return "gen=e1".to_string(),
            _ => {}
        }
    }
    query.to_string()
}

/// One line of a summary table, metric coefficients in Killing units.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub label: String,
    pub name: String,
    pub sigma: String,
    pub gamma: String,
    pub gamma_order: usize,
    pub isometry_class: String,
    pub q_i: Rat,
    pub q_d: Option<Rat>,
    pub beyond_tables: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Quotients,
    Groups,
}

impl TableId {
    pub fn parse(text: &str) -> Result<TableId> {
        match text.trim() {
            "8.1" => Ok(TableId::Quotients),
            "8.2" => Ok(TableId::Groups),
            other => Err(Error::BadQuery(format!(
                "unknown table {other:?}; expected 8.1 or 8.2"
            ))),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            TableId::Quotients => "8.1",
            TableId::Groups => "8.2",
        }
    }
}

/// Row selection for table emission: an optional comma-derived label list
/// and optional inclusive parameter ranges overriding a family's default
/// instantiations.
#[derive(Debug, Clone, Default)]
pub struct TableFilter {
    /// Family labels or concrete names; empty keeps everything.
    pub only: Vec<String>,
    pub n: Option<(u32, u32)>,
    pub p: Option<(u32, u32)>,
    pub q: Option<(u32, u32)>,
}

impl TableFilter {
    pub fn with_only(list: &str) -> TableFilter {
        TableFilter {
            only: list
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
            ..TableFilter::default()
        }
    }
}

fn label_matches(term: &str, candidate: &str) -> bool {
    let squeeze = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
    term.eq_ignore_ascii_case(candidate)
        || squeeze(term).eq_ignore_ascii_case(&squeeze(candidate))
}

fn expand(range: (u32, u32)) -> std::ops::RangeInclusive<u32> {
    range.0..=range.1
}

/// Entries behind the quotient table, in printed order, honoring range
/// overrides. An override applies to a family when no label list is given
/// or when the list names that family.
pub fn quotient_table_entries(filter: &TableFilter) -> Result<Vec<SpaceEntry>> {
    let in_scope = |label: &str| {
        filter.only.is_empty() || filter.only.iter().any(|t| label_matches(t, label))
    };
    let pick = |label: &str, over: Option<(u32, u32)>, def: (u32, u32)| {
        if in_scope(label) {
            over.unwrap_or(def)
        } else {
            def
        }
    };
    let mut out = Vec::new();
    for n in expand(pick("A I", filter.n, (2, 8))) {
        out.push(spaces::a_one(n)?);
    }
    for n in expand(pick("A II", filter.n, (2, 4))) {
        out.push(spaces::a_two(n)?);
    }
    for p in expand(pick("A III", filter.p, (2, 4))) {
        out.push(spaces::a_three(p, p)?);
    }
    for n in expand(pick("C I", filter.n, (3, 5))) {
        out.push(spaces::c_one(n)?);
    }
    for p in expand(pick("C II", filter.p, (2, 4))) {
        out.push(spaces::c_two(p, p)?);
    }
    let rect_p = pick("BD I", filter.p, (3, 3));
    let rect_q = pick("BD I", filter.q, (5, 5));
    for p in expand(rect_p) {
        for q in expand(rect_q) {
            if p < q {
                out.push(spaces::real_grassmannian(p, q)?);
            }
        }
    }
    for q in expand(pick("S^q", filter.q, (3, 5))) {
        out.push(spaces::sphere(q)?);
    }
    for p in expand(pick("BD I", filter.p, (4, 6))) {
        if p >= 4 {
            out.push(spaces::real_grassmannian(p, p)?);
        }
    }
    for n in expand(pick("D III", filter.n, (4, 6))) {
        let entry = spaces::d_three(n)?;
        out.push(entry);
    }
    out.push(spaces::e_one()?);
    out.push(spaces::e_four()?);
    out.push(spaces::e_five()?);
    out.push(spaces::e_seven()?);
    Ok(out)
}

/// Entries behind the group table, in printed order, honoring range
/// overrides.
pub fn group_table_entries(filter: &TableFilter) -> Result<Vec<SpaceEntry>> {
    let in_scope = |label: &str| {
        filter.only.is_empty() || filter.only.iter().any(|t| label_matches(t, label))
    };
    let pick = |label: &str, def: (u32, u32)| {
        if in_scope(label) {
            filter.n.unwrap_or(def)
        } else {
            def
        }
    };
    let mut out = Vec::new();
    for n in expand(pick("SU(n)", (2, 8))) {
        out.push(spaces::special_unitary(n)?);
    }
    for n in expand(pick("Spin(2n+1)", (2, 4))) {
        out.push(spaces::spin(2 * n + 1)?);
    }
    for n in expand(pick("Sp(n)", (3, 5))) {
        out.push(spaces::symplectic(n)?);
    }
    for n in expand(pick("Spin(2n)", (4, 6))) {
        out.push(spaces::spin(2 * n)?);
    }
    out.push(spaces::exceptional_group("E6")?);
    out.push(spaces::exceptional_group("E7")?);
    Ok(out)
}

/// Emits the rows of one table: every nontrivial quotient of every
/// selected entry, largest deck group first, with isometric half-spin
/// quotients merged into a single row.
pub fn table_rows_filtered(
    table: TableId,
    filter: &TableFilter,
    cap: u32,
) -> Result<Vec<TableRow>> {
    let entries = match table {
        TableId::Quotients => quotient_table_entries(filter)?,
        TableId::Groups => group_table_entries(filter)?,
    };
    let keep = |entry: &SpaceEntry| {
        filter.only.is_empty()
            || filter
                .only
                .iter()
                .any(|t| label_matches(t, &entry.label) || label_matches(t, &entry.name))
    };
    let mut rows = Vec::new();
    for entry in entries {
        if keep(&entry) && no_forms_reason(&entry).is_none() {
            rows.extend(entry_rows(&entry, cap)?);
        }
    }
    Ok(rows)
}

pub fn table_rows(table: TableId, only: Option<&str>, cap: u32) -> Result<Vec<TableRow>> {
    let filter = match only {
        Some(list) => TableFilter::with_only(list),
        None => TableFilter::default(),
    };
    table_rows_filtered(table, &filter, cap)
}

/// One catalog entry together with its deck group summary, for listings.
pub struct ListingEntry {
    pub entry: SpaceEntry,
    pub center: crate::center::GroupStructure,
    /// Names of the nontrivial subgroups, largest first; empty when the
    /// space admits no proper quotients.
    pub forms: Vec<String>,
    /// Why `forms` is empty, when it is.
    pub no_forms: Option<String>,
}

/// Every bundled space from both tables, each with its center structure
/// and available quotient forms. Spaces whose restricted system is
/// non-reduced appear with an empty forms list and the reason.
pub fn catalog_listing() -> Result<Vec<ListingEntry>> {
    let filter = TableFilter::default();
    let mut out = Vec::new();
    let all = quotient_table_entries(&filter)?
        .into_iter()
        .chain(group_table_entries(&filter)?);
    for entry in all {
        if let Some(reason) = no_forms_reason(&entry) {
            out.push(ListingEntry {
                center: crate::center::GroupStructure::Trivial,
                forms: Vec::new(),
                no_forms: Some(reason),
                entry,
            });
            continue;
        }
        let set = enumerate_forms(&entry)?;
        let mut subs: Vec<&Subgroup> =
            set.subgroups.iter().filter(|s| !s.is_trivial()).collect();
        subs.sort_by(|a, b| b.order().cmp(&a.order()).then(a.name.cmp(&b.name)));
        let forms = subs.into_iter().map(|s| s.name.clone()).collect();
        out.push(ListingEntry {
            center: set.group.structure,
            forms,
            no_forms: None,
            entry: set.entry,
        });
    }
    Ok(out)
}

/// Table label for a quotient: the two isometric half-spin subgroups of
/// an even orthogonal system share a single printed row.
fn shown_gamma(datum: &RootDatum, sub: &Subgroup) -> String {
    let l = datum.rank;
    if datum.ty.family == Family::D
        && l.is_multiple_of(2)
        && (sub.name == format!("gen=e{}", l - 1) || sub.name == format!("gen=e{l}"))
    {
        return "half-spin".to_string();
    }
    sub.name.clone()
}

fn entry_rows(entry: &SpaceEntry, cap: u32) -> Result<Vec<TableRow>> {
    let set = enumerate_forms(entry)?;
    let mut picked: Vec<(usize, String, String)> = Vec::new();
    for sub in &set.subgroups {
        if sub.is_trivial() {
            continue;
        }
        let shown = shown_gamma(&set.datum, sub);
        if picked.iter().any(|(_, s, _)| *s == shown) {
            continue;
        }
        picked.push((sub.order(), shown, sub.name.clone()));
    }
    picked.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut rows = Vec::new();
    for (order, shown, query) in picked {
        let analysis = analyze(entry, &query, cap)?;
        let note = branch_note(entry, &analysis);
        rows.push(TableRow {
            label: entry.label.clone(),
            name: entry.name.clone(),
            sigma: entry.sigma.to_string(),
            gamma: shown,
            gamma_order: order,
            isometry_class: analysis.isometry_class.clone(),
            q_i: analysis.metric.i_sq_coeff.clone(),
            q_d: analysis.metric.d_sq_coeff.clone(),
            beyond_tables: analysis.metric.beyond_tables,
            note,
        });
    }
    Ok(rows)
}

/// Records which parity branch of a closed diameter form produced the
/// cell, where the form has one.
fn branch_note(entry: &SpaceEntry, analysis: &Analysis) -> Option<String> {
    let sigma_ty = analysis.datum.requested;
    let l = sigma_ty.rank;
    let parity = if l.is_multiple_of(2) { "even" } else { "odd" };
    match sigma_ty.family {
        Family::C => {
            if entry.label == "C II" {
                Some(format!("d branch: parity read on p = {l} ({parity})"))
            } else {
                Some(format!("d branch: rank {l} {parity}"))
            }
        }
        Family::D if analysis.gamma.name == "full" || analysis.gamma.order() == 4 => {
            Some(format!("d branch: rank {l} {parity}"))
        }
        Family::A if analysis.gamma.order() == 2 && analysis.metric.d_sq_coeff.is_some() => {
            let half = l.div_ceil(2);
            Some(format!(
                "d branch: (rank+1)/2 = {half} {}",
                if half.is_multiple_of(2) { "even" } else { "odd" }
            ))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    fn psi(entry: &SpaceEntry) -> Rat {
        entry.psi_sq.clone()
    }

    #[test]
    fn highest_root_norms_match_the_catalog() {
        let cases: Vec<(SpaceEntry, Rat)> = vec![
            (spaces::a_one(5).unwrap(), frac(1, 5)),
            (spaces::a_two(3).unwrap(), frac(1, 12)),
            (spaces::a_three(3, 3).unwrap(), frac(1, 6)),
            (spaces::c_one(4).unwrap(), frac(1, 5)),
            (spaces::c_two(2, 2).unwrap(), frac(1, 10)),
            (spaces::real_grassmannian(3, 5).unwrap(), frac(1, 6)),
            (spaces::sphere(2).unwrap(), frac(1, 2)),
            (spaces::sphere(3).unwrap(), frac(1, 4)),
            (spaces::sphere(4).unwrap(), frac(1, 6)),
            (spaces::sphere(5).unwrap(), frac(1, 8)),
            (spaces::sphere(9).unwrap(), frac(1, 16)),
            (spaces::real_grassmannian(4, 4).unwrap(), frac(1, 6)),
            (spaces::d_three(4).unwrap(), frac(1, 6)),
            (spaces::d_three(6).unwrap(), frac(1, 10)),
            (spaces::e_one().unwrap(), frac(1, 12)),
            (spaces::e_four().unwrap(), frac(1, 24)),
            (spaces::e_five().unwrap(), frac(1, 18)),
            (spaces::e_seven().unwrap(), frac(1, 18)),
            (spaces::special_unitary(6).unwrap(), frac(1, 12)),
            (spaces::spin(9).unwrap(), frac(1, 14)),
            (spaces::spin(8).unwrap(), frac(1, 12)),
            (spaces::symplectic(3).unwrap(), frac(1, 8)),
            (spaces::exceptional_group("E6").unwrap(), frac(1, 24)),
            (spaces::exceptional_group("E7").unwrap(), frac(1, 36)),
        ];
        for (entry, expected) in cases {
            assert_eq!(psi(&entry), expected, "{}", entry.name);
        }
    }

    #[test]
    fn sigma_types_match_the_catalog() {
        assert_eq!(
            spaces::a_two(4).unwrap().sigma,
            Sigma::Reduced(ty(Family::A, 3))
        );
        assert_eq!(
            spaces::a_three(2, 2).unwrap().sigma,
            Sigma::Reduced(ty(Family::C, 2))
        );
        assert_eq!(
            spaces::a_three(2, 5).unwrap().sigma,
            Sigma::NonReduced { rank: 2 }
        );
        assert_eq!(
            spaces::d_three(5).unwrap().sigma,
            Sigma::NonReduced { rank: 2 }
        );
        assert_eq!(
            spaces::d_three(6).unwrap().sigma,
            Sigma::Reduced(ty(Family::C, 3))
        );
        assert_eq!(
            spaces::real_grassmannian(5, 3).unwrap().sigma,
            Sigma::Reduced(ty(Family::B, 3))
        );
        assert_eq!(
            spaces::sphere(7).unwrap().sigma,
            Sigma::Reduced(ty(Family::A, 1))
        );
        assert_eq!(
            spaces::e_seven().unwrap().sigma,
            Sigma::Reduced(ty(Family::C, 3))
        );
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        assert!(spaces::a_one(1).is_err());
        assert!(spaces::c_one(2).is_err());
        assert!(spaces::real_grassmannian(2, 5).is_err());
        assert!(spaces::real_grassmannian(3, 3).is_err());
        assert!(spaces::d_three(3).is_err());
        assert!(spaces::spin(6).is_err());
        assert!(spaces::spin(4).is_err());
        assert!(spaces::symplectic(2).is_err());
        assert!(spaces::special_unitary(1).is_err());
        assert!(spaces::sphere(1).is_err());
    }

    #[test]
    fn resolver_accepts_labels_and_group_names() {
        let e = resolve_space("A I", Some(5), None, None).unwrap();
        assert_eq!(e.name, "SU(5)/SO(5)");
        let e = resolve_space("a iii", None, Some(3), None).unwrap();
        assert_eq!(e.name, "Gr_{3,3}(C)");
        let e = resolve_space("BD I", None, Some(5), Some(3)).unwrap();
        assert_eq!(e.name, "Gr_{3,5}(R)");
        let e = resolve_space("BD I", None, Some(1), Some(4)).unwrap();
        assert_eq!(e.name, "S^4");
        let e = resolve_space("S^3", None, None, None).unwrap();
        assert_eq!(e.name, "S^3");
        assert_eq!(e.psi_sq, frac(1, 4));
        let e = resolve_space("Spin(9)", None, None, None).unwrap();
        assert_eq!(e.delta, ty(Family::B, 4));
        let e = resolve_space("su(4)", None, None, None).unwrap();
        assert_eq!(e.name, "SU(4)");
        let e = resolve_space("E VII", None, None, None).unwrap();
        assert_eq!(e.name, "E7/(E6 x SO(2))");
        let e = resolve_space("E6", None, None, None).unwrap();
        assert_eq!(e.class, SpaceClass::Group);
        assert!(resolve_space("A I", None, None, None).is_err());
        assert!(resolve_space("H3", None, None, None).is_err());
        assert!(matches!(
            resolve_space("X IX", Some(2), None, None),
            Err(Error::UnknownCase(_))
        ));
    }

    #[test]
    fn dead_end_entries_report_why() {
        let bc = spaces::a_three(2, 4).unwrap();
        assert!(no_forms_reason(&bc).unwrap().contains("BC2"));
        assert!(matches!(enumerate_forms(&bc), Err(Error::NoForms(_))));
        let e8 = spaces::exceptional_group("E8").unwrap();
        assert!(no_forms_reason(&e8).is_some());
        assert!(no_forms_reason(&spaces::e_one().unwrap()).is_none());
    }

    #[test]
    fn sphere_quotient_is_projective_space() {
        // RP^q: half the sphere's diameter, injectivity radius unchanged
        // in alcove units until scaled.
        for q in 2..=6 {
            let entry = spaces::sphere(q).unwrap();
            let a = analyze(&entry, "Z2", crate::DEFAULT_RANK_CAP).unwrap();
            let half = frac(i64::from(q) - 1, 2);
            assert_eq!(a.metric.i_sq_coeff, half, "S^{q} i");
            assert_eq!(a.metric.d_sq_coeff.clone().unwrap(), half, "S^{q} d");
            assert!(!a.metric.beyond_tables);
        }
    }

    #[test]
    fn group_rows_double_the_quotient_rows() {
        // SU(n) and SU(n)/SO(n) share the restricted system; the group's
        // highest root halves in square, doubling both coefficients.
        for n in 2..=6 {
            let quo = spaces::a_one(n).unwrap();
            let grp = spaces::special_unitary(n).unwrap();
            let full = format!("Z{n}");
            let a = analyze(&quo, &full, 8).unwrap();
            let b = analyze(&grp, &full, 8).unwrap();
            assert_eq!(b.metric.i_sq_coeff, rat(2) * &a.metric.i_sq_coeff);
            assert_eq!(
                b.metric.d_sq_coeff.clone().unwrap(),
                rat(2) * a.metric.d_sq_coeff.clone().unwrap()
            );
        }
    }

    #[test]
    fn isometry_classes_merge_exactly_the_half_spin_pair() {
        let entry = spaces::real_grassmannian(6, 6).unwrap();
        let set = enumerate_forms(&entry).unwrap();
        let classes: Vec<String> = set
            .subgroups
            .iter()
            .map(|s| isometry_class(&set.datum, s))
            .collect();
        assert!(classes.contains(&"vector".to_string()));
        assert_eq!(
            classes.iter().filter(|c| *c == "half-spin").count(),
            2
        );
        let a = analyze(&entry, "gen=e5", 8).unwrap();
        let b = analyze(&entry, "gen=e6", 8).unwrap();
        assert_eq!(a.metric, b.metric);
        let c = analyze(&entry, "half-spin", 8).unwrap();
        assert_eq!(c.gamma.name, "gen=e5");
        // Triality at rank four merges all three order-two subgroups.
        let spin8 = spaces::spin(8).unwrap();
        let set8 = enumerate_forms(&spin8).unwrap();
        let classes8: Vec<String> = set8
            .subgroups
            .iter()
            .filter(|s| s.order() == 2)
            .map(|s| isometry_class(&set8.datum, s))
            .collect();
        assert_eq!(classes8, vec!["triality"; 3]);
        let v = analyze(&spin8, "gen=e1", 8).unwrap();
        let h = analyze(&spin8, "gen=e4", 8).unwrap();
        assert_eq!(v.metric, h.metric);
    }

    #[test]
    fn quotient_table_has_the_expected_rows() {
        let rows = table_rows(TableId::Quotients, None, 8).unwrap();
        let a1: Vec<&TableRow> = rows.iter().filter(|r| r.label == "A I").collect();
        let gammas: Vec<&str> = a1
            .iter()
            .filter(|r| r.name == "SU(6)/SO(6)")
            .map(|r| r.gamma.as_str())
            .collect();
        assert_eq!(gammas, vec!["Z6", "Z3", "Z2"]);
        let gr66: Vec<&str> = rows
            .iter()
            .filter(|r| r.name == "Gr_{6,6}(R)")
            .map(|r| r.gamma.as_str())
            .collect();
        assert_eq!(gr66, vec!["full", "gen=e1", "half-spin"]);
        let gr55: Vec<&str> = rows
            .iter()
            .filter(|r| r.name == "Gr_{5,5}(R)")
            .map(|r| r.gamma.as_str())
            .collect();
        assert_eq!(gr55, vec!["Z4", "Z2"]);
        assert!(rows.iter().any(|r| r.label == "E VII"));
        let only = table_rows(TableId::Quotients, Some("C II"), 8).unwrap();
        assert!(only.iter().all(|r| r.label == "C II"));
        assert_eq!(only.len(), 3);
        assert!(only[0].note.as_deref().unwrap().contains("parity read on p"));
    }

    #[test]
    fn range_overrides_rebuild_the_selected_family() {
        let filter = TableFilter {
            n: Some((2, 4)),
            ..TableFilter::with_only("A I")
        };
        let rows = table_rows_filtered(TableId::Quotients, &filter, 8).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            vec!["SU(2)/SO(2)", "SU(3)/SO(3)", "SU(4)/SO(4)", "SU(4)/SO(4)"]
        );
        let gammas: Vec<&str> = rows.iter().map(|r| r.gamma.as_str()).collect();
        assert_eq!(gammas, vec!["Z2", "Z3", "Z4", "Z2"]);

        // Grid override for the real Grassmannians: rectangles p < q plus
        // squares from the p range.
        let filter = TableFilter {
            p: Some((3, 4)),
            q: Some((5, 6)),
            ..TableFilter::with_only("BD I")
        };
        let rows = table_rows_filtered(TableId::Quotients, &filter, 8).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "Gr_{3,5}(R)",
                "Gr_{3,6}(R)",
                "Gr_{4,5}(R)",
                "Gr_{4,6}(R)",
                "Gr_{4,4}(R)",
                "Gr_{4,4}(R)",
                "Gr_{4,4}(R)",
            ]
        );

        // Entries whose restricted system is non-reduced carry no closed
        // forms and drop out of the table silently.
        let filter = TableFilter {
            n: Some((4, 7)),
            ..TableFilter::with_only("D III")
        };
        let rows = table_rows_filtered(TableId::Quotients, &filter, 8).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, vec!["SO(8)/U(4)", "SO(12)/U(6)"]);

        // An unscoped override hits every family reading that parameter,
        // and a value outside some family's validity is an error.
        let filter = TableFilter {
            n: Some((2, 4)),
            ..TableFilter::default()
        };
        assert!(matches!(
            table_rows_filtered(TableId::Quotients, &filter, 8),
            Err(Error::RankOutOfRange { .. })
        ));

        // Terms that match nothing yield an empty table rather than an
        // error, and spacing in a term is immaterial.
        assert!(table_rows(TableId::Quotients, Some("nope"), 8)
            .unwrap()
            .is_empty());
        let squeezed = table_rows(TableId::Quotients, Some("EVII"), 8).unwrap();
        assert!(!squeezed.is_empty());
        assert!(squeezed.iter().all(|r| r.label == "E VII"));

        // Group table: a scoped n range on one series leaves the others at
        // their defaults.
        let filter = TableFilter {
            n: Some((3, 3)),
            ..TableFilter::with_only("Spin(2n+1),Sp(n)")
        };
        let rows = table_rows_filtered(TableId::Groups, &filter, 8).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, vec!["Spin(7)", "Sp(3)"]);
    }

    #[test]
    fn spot_checked_cells_in_killing_units() {
        // Independent by-hand values for one row of each family.
        let rows = table_rows(TableId::Quotients, None, 8).unwrap();
        let cell = |name: &str, gamma: &str| -> (Rat, Option<Rat>) {
            let r = rows
                .iter()
                .find(|r| r.name == name && r.gamma == gamma)
                .unwrap_or_else(|| panic!("missing row {name} {gamma}"));
            (r.q_i.clone(), r.q_d.clone())
        };
        assert_eq!(cell("SU(5)/SO(5)", "Z5"), (rat(2), Some(rat(4))));
        assert_eq!(cell("SU(8)/Sp(4)", "Z4"), (rat(6), Some(rat(10))));
        assert_eq!(cell("Gr_{3,3}(C)", "Z2"), (frac(9, 2), Some(frac(15, 2))));
        assert_eq!(cell("Sp(4)/U(4)", "Z2"), (rat(5), Some(rat(10))));
        assert_eq!(cell("Gr_{2,2}(H)", "Z2"), (rat(5), Some(rat(10))));
        assert_eq!(cell("Gr_{3,5}(R)", "Z2"), (rat(3), Some(rat(9))));
        assert_eq!(cell("S^4", "Z2"), (frac(3, 2), Some(frac(3, 2))));
        assert_eq!(cell("Gr_{4,4}(R)", "full"), (rat(3), Some(rat(6))));
        assert_eq!(cell("Gr_{4,4}(R)", "half-spin"), (rat(3), Some(rat(12))));
        assert_eq!(cell("SO(8)/U(4)", "Z2"), (rat(3), Some(rat(6))));
        assert_eq!(cell("SO(12)/U(6)", "Z2"), (frac(15, 2), Some(frac(25, 2))));
        assert_eq!(cell("E6/Sp(4)", "Z3"), (rat(8), Some(rat(16))));
        assert_eq!(cell("E6/F4", "Z3"), (rat(8), Some(frac(32, 3))));
        assert_eq!(cell("E7/SU(8)", "Z2"), (frac(27, 2), Some(frac(63, 2))));
        assert_eq!(
            cell("E7/(E6 x SO(2))", "Z2"),
            (frac(27, 2), Some(frac(45, 2)))
        );
        let grows = table_rows(TableId::Groups, None, 8).unwrap();
        let gcell = |name: &str, gamma: &str| -> (Rat, Option<Rat>) {
            let r = grows
                .iter()
                .find(|r| r.name == name && r.gamma == gamma)
                .unwrap_or_else(|| panic!("missing row {name} {gamma}"));
            (r.q_i.clone(), r.q_d.clone())
        };
        assert_eq!(gcell("SU(4)", "Z4"), (rat(3), Some(rat(5))));
        assert_eq!(gcell("SU(6)", "Z2"), (rat(9), Some(rat(21))));
        assert_eq!(gcell("Spin(9)", "Z2"), (rat(7), Some(rat(28))));
        assert_eq!(gcell("Sp(3)", "Z2"), (rat(6), Some(frac(20, 2))));
        assert_eq!(gcell("Spin(12)", "half-spin"), (rat(15), Some(rat(40))));
        assert_eq!(gcell("E6", "Z3"), (rat(16), Some(rat(32))));
        assert_eq!(gcell("E7", "Z2"), (rat(27), Some(rat(63))));
    }

    #[test]
    fn middle_subgroups_fall_beyond_the_closed_forms() {
        let rows = table_rows(TableId::Quotients, None, 8).unwrap();
        let middle = rows
            .iter()
            .find(|r| r.name == "SU(8)/SO(8)" && r.gamma == "Z4")
            .unwrap();
        assert!(middle.beyond_tables);
        assert_eq!(middle.q_i, rat(6));
        assert!(middle.q_d.is_some());
        let full = rows
            .iter()
            .find(|r| r.name == "SU(8)/SO(8)" && r.gamma == "Z8")
            .unwrap();
        assert!(!full.beyond_tables);
    }

    #[test]
    fn analysis_carries_polytope_data_within_cap() {
        let entry = spaces::e_one().unwrap();
        let a = analyze(&entry, "Z3", 8).unwrap();
        assert_eq!(a.vertices.as_ref().unwrap().len(), 19);
        assert_eq!(a.facets.as_ref().unwrap().len(), 3);
        assert_eq!(a.group.order(), 3);
        // Above the cap the metric falls back to closed forms.
        let big = spaces::a_one(12).unwrap();
        let b = analyze(&big, "Z12", 8).unwrap();
        assert!(b.vertices.is_none());
        assert_eq!(b.metric.i_sq_coeff, frac(11, 2));
        assert_eq!(b.metric.d_sq_coeff.clone().unwrap(), frac(143, 6));
        assert!(b.metric.d_known);
        // A middle subgroup above the cap has no diameter at all.
        let c = analyze(&big, "Z3", 8).unwrap();
        assert!(!c.metric.d_known);
        assert!(c.metric.d_sq_coeff.is_none());
        assert_eq!(c.metric.i_sq_coeff, rat(12));
    }
}

//! The curvature and transitivity facts the case analysis invokes, encoded
//! as total decision procedures, each carrying its literature citation.

use crate::algebra::CompactAlgebra;
use crate::catalog::{self, CatalogError, Embedding, Su2Class};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Citation keys rendered into verdict traces.
pub mod cite {
    pub const GS1: &str = "[GS] Thm 1.1(1)";
    pub const GS2: &str = "[GS] Thm 1.1(2)";
    pub const FRANKEL: &str = "[Fr] intersection of totally geodesic submanifolds";
    pub const PV: &str = "[PV] totally geodesic orbits of non-faithful actions";
    pub const HK: &str = "[HK] positively curved 4-manifolds with symmetry";
    pub const AA: &str = "[AA] transitive sphere actions";
    pub const GG: &str = "[GG] maximal-rank subalgebra tables";
    pub const BB: &str = "[BB] homogeneous positive curvature in odd dimensions";
    pub const MYERS: &str = "Bonnet-Myers";
    pub const CATALOG: &str = "subalgebra catalog";
    pub const REP: &str = "representation calculus";
    pub const SPHERE_TABLE: &str = "classical transitive sphere table";
    pub const ADJOINT_MODEL: &str = "adjoint cohomogeneity-one model on S^7";
    pub const CONCAVITY: &str = "Killing-norm concavity argument";
    pub const SECOND_FORM: &str = "equivariance of the second fundamental form";
    pub const ASSUMPTION: &str = "standing assumptions";
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("unknown fact tag {0:?}")]
    UnknownFact(String),
    #[error("pair is not a transitive sphere pair")]
    NotASpherePair,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Outcome of the symmetry-rank bound for a torus of the given rank acting
/// on a positively curved n-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankBound {
    Allowed,
    ForcesSphereOrCp,
    Excluded,
}

/// k <= floor((n+1)/2), with equality forcing a sphere or complex
/// projective space.
pub fn symmetry_rank_bound(n: u32, torus_rank: u32) -> RankBound {
    let bound = n.div_ceil(2);
    if torus_rank > bound {
        RankBound::Excluded
    } else if torus_rank == bound {
        RankBound::ForcesSphereOrCp
    } else {
        RankBound::Allowed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixKind {
    TorusCircle,
    Su2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixOutcome {
    ForcesSphereCpHp,
    NoConclusion,
}

/// Fixed-point-set criterion: a circle with fixed set of codimension two,
/// or an SU(2) with fixed set of codimension less than four, forces a
/// sphere or projective space. The codimension comparison is exactly as
/// printed; boundary cases return NoConclusion.
pub fn fixed_point_criterion(kind: FixKind, fixed_set_dim: u32, n: u32) -> FixOutcome {
    let codim = n - fixed_set_dim;
    let fires = match kind {
        FixKind::TorusCircle => codim <= 2,
        FixKind::Su2 => codim < 4,
    };
    if fires {
        FixOutcome::ForcesSphereCpHp
    } else {
        FixOutcome::NoConclusion
    }
}

/// Dimension of the fixed-point set of the principal isotropy algebra at a
/// regular point: the trivial real multiplicity of g/k plus the normal
/// geodesic direction.
pub fn fixed_dim(k: &Embedding) -> Result<u32, CatalogError> {
    Ok(catalog::isotypic_of_quotient(k)?.trivial_real_mult() + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrankelOutcome {
    MustIntersect,
    NoObstruction,
}

/// Two compact totally geodesic submanifolds of dimensions d1, d2 in a
/// compact positively curved n-manifold must intersect when d1 + d2 >= n.
pub fn frankel(d1: u32, d2: u32, n: u32) -> FrankelOutcome {
    if d1 + d2 >= n {
        FrankelOutcome::MustIntersect
    } else {
        FrankelOutcome::NoObstruction
    }
}

/// A singular orbit G/H is totally geodesic as soon as the G-action on it
/// has positive-dimensional kernel, i.e. H contains a nonzero ideal of g.
pub fn totally_geodesic_by_ineffectivity(g: &CompactAlgebra, h: &Embedding) -> bool {
    catalog::contains_ideal(g, h).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactTag {
    S2xS2,
    Dim5PositivelyCurvedCover,
    S1xS3Pi1,
}

impl FactTag {
    pub fn parse(s: &str) -> Result<FactTag, ObstructionError> {
        match s {
            "s2xs2" => Ok(FactTag::S2xS2),
            "dim5_positively_curved_cover" => Ok(FactTag::Dim5PositivelyCurvedCover),
            "s1xs3_pi1" => Ok(FactTag::S1xS3Pi1),
            other => Err(ObstructionError::UnknownFact(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub tag: FactTag,
    pub statement: &'static str,
    pub citation: &'static str,
}

/// The closed table of topological facts; anything else fails loudly.
pub fn homogeneous_curvature_fact(tag: FactTag) -> Fact {
    match tag {
        FactTag::S2xS2 => Fact {
            tag,
            statement: "S^2 x S^2 carries no homogeneous positively curved metric",
            citation: cite::HK,
        },
        FactTag::Dim5PositivelyCurvedCover => Fact {
            tag,
            statement: "a positively curved homogeneous 5-manifold is finitely covered by S^5",
            citation: cite::BB,
        },
        FactTag::S1xS3Pi1 => Fact {
            tag,
            statement: "a space finitely covered by S^1 x S^3 has infinite fundamental group, so it is not positively curved",
            citation: cite::MYERS,
        },
    }
}

/// One side of an orbit pair: the whole group or a catalog embedding.
#[derive(Clone, Debug, PartialEq)]
pub enum HSide {
    Group,
    Emb(Embedding),
}

/// Effective pair left after stripping the slice kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct EffectivePair {
    pub h_eff: CompactAlgebra,
    pub k_eff: CompactAlgebra,
    pub kernel: CompactAlgebra,
    pub k_class: KClass,
}

/// What remains of k after stripping, as far as sphere-table matching
/// needs to distinguish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KClass {
    Trivial,
    Torus,
    DiagonalSu2,
    DefiningSu2(Su2Class),
    NamedPart(&'static str),
    Mixed,
}

/// Strips the largest ideal of h contained in k off both sides.
pub fn effective_pair(g: &CompactAlgebra, h: &HSide, k: &Embedding) -> EffectivePair {
    let (h_sub, kernel) = match h {
        HSide::Group => {
            // k contains no ideal of g by the standing assumptions, so the
            // kernel of the action on a fixed point is trivial
            (g.clone(), CompactAlgebra::trivial())
        }
        HSide::Emb(h_emb) => {
            let mut kernel = CompactAlgebra::trivial();
            let comps = catalog::sub_ideal_components(h_emb);
            let mut consumed_factors: Vec<usize> = Vec::new();
            for comp in &comps {
                use catalog::IdealComponent::*;
                let factor = match comp {
                    TorusPart(i)
                    | FullFactor(i)
                    | NamedWhole(i, _)
                    | NamedCenter(i, _)
                    | NamedSemisimple(i, _)
                    | Su2Part(i, _) => Some(*i),
                    _ => None,
                };
                // once a whole named part or factor is stripped, skip its
                // internal pieces
                if let Some(i) = factor {
                    if consumed_factors.contains(&i) {
                        continue;
                    }
                }
                if catalog::component_contained_in(h_emb, comp, k) {
                    kernel = kernel.sum(&catalog::component_algebra(h_emb, comp));
                    if let (Some(i), NamedWhole(_, _) | FullFactor(_) | TorusPart(_)) =
                        (factor, comp)
                    {
                        consumed_factors.push(i);
                    }
                }
            }
            (h_emb.sub.clone(), kernel)
        }
    };
    let h_eff = h_sub
        .subtract(&kernel)
        .expect("kernel is a sub-multiset of h");
    let k_eff = k
        .sub
        .subtract(&kernel)
        .expect("kernel is a sub-multiset of k");
    let k_class = classify_k(k, &kernel, &k_eff);
    EffectivePair {
        h_eff,
        k_eff,
        kernel,
        k_class,
    }
}

fn classify_k(k: &Embedding, kernel: &CompactAlgebra, k_eff: &CompactAlgebra) -> KClass {
    if k_eff.is_trivial() {
        return KClass::Trivial;
    }
    if k_eff.simples().is_empty() {
        return KClass::Torus;
    }
    let d = &k.descriptor;
    // a single surviving component determines the class
    let mut classes = Vec::new();
    for (i, p) in d.parts.iter().enumerate() {
        match p {
            catalog::FactorPart::Zero => {}
            catalog::FactorPart::Su2(c) => classes.push(KClass::DefiningSu2(*c)),
            catalog::FactorPart::Named(id) => {
                if catalog::named_algebra(k.host.simples()[i], id)
                    .map(|a| kernel.subtract(&a).is_none())
                    .unwrap_or(true)
                {
                    classes.push(KClass::NamedPart(id));
                }
            }
            catalog::FactorPart::MaxTorus | catalog::FactorPart::Full => {}
        }
    }
    for _ in &d.diag_blocks {
        classes.push(KClass::DiagonalSu2);
    }
    match classes.len() {
        0 => {
            if k_eff.simples().is_empty() {
                KClass::Torus
            } else {
                KClass::Mixed
            }
        }
        1 => classes.pop().unwrap(),
        _ => KClass::Mixed,
    }
}

/// True iff H acts transitively on a sphere of the given dimension with
/// stabilizer K, judged from the classical transitive-sphere table after
/// stripping the common ineffective kernel.
pub fn sphere_pair(g: &CompactAlgebra, h: &HSide, k: &Embedding, l: u32) -> bool {
    let pair = effective_pair(g, h, k);
    if pair.h_eff.dim() < pair.k_eff.dim() {
        return false;
    }
    if pair.h_eff.dim() - pair.k_eff.dim() != l {
        return false;
    }
    let h_name = pair.h_eff.render();
    match (h_name.as_str(), &pair.k_class, l) {
        // circle acting on itself
        ("t1", KClass::Trivial, 1) => true,
        // SO(3) = SU(2)/center on S^2, stabilizer a circle
        ("a1", KClass::Torus, 2) => true,
        // SU(2) acting on itself
        ("a1", KClass::Trivial, 3) => true,
        // SO(4) on S^3 with diagonal so(3); k sits diagonally after
        // stripping, since factor copies would have been absorbed
        ("a1+a1", KClass::DiagonalSu2, 3) => pair.k_eff.render() == "a1",
        // U(2) on S^3, stabilizer a non-central circle
        ("t1+a1", KClass::Torus, 3) => pair.k_eff.render() == "t1",
        // SO(5) = Sp(2) on S^4 with isotropy SO(4)
        ("b2", KClass::NamedPart("so4"), 4) => true,
        // SU(3) on S^5 with the reducible su(2)
        ("a2", KClass::DefiningSu2(Su2Class::Su3Reducible), 5) => true,
        // SO(7) on S^6 with isotropy SO(6)
        ("b3", KClass::NamedPart("so6"), 6) => true,
        // G2 on S^6 with isotropy SU(3)
        ("g2", KClass::NamedPart("a2"), 6) => true,
        _ => false,
    }
}

/// The slice kernel: the largest ideal of h acting trivially on the normal
/// sphere, i.e. the largest ideal of h contained in k.
pub fn slice_kernel(
    g: &CompactAlgebra,
    h: &HSide,
    k: &Embedding,
    l: u32,
) -> Result<CompactAlgebra, ObstructionError> {
    if !sphere_pair(g, h, k, l) {
        return Err(ObstructionError::NotASpherePair);
    }
    Ok(effective_pair(g, h, k).kernel)
}

/// Whether some almost-effective quotient of g can act transitively on a
/// sphere of the given dimension (supported for the dimensions the
/// analysis asks about).
pub fn group_transitive_on_sphere(g: &CompactAlgebra, l: u32) -> bool {
    let models: &[&str] = match l {
        1 => &["t1"],
        2 => &["a1"],
        3 => &["a1", "a1+a1", "t1+a1"],
        4 => &["b2"],
        5 => &["a2", "t1+a2", "a3"],
        6 => &["g2", "b3"],
        _ => &[],
    };
    models.iter().any(|m| {
        let model = CompactAlgebra::parse(m).expect("model strings parse");
        g.subtract(&model).is_some()
    })
}

/// One row of the classical transitive-sphere table, as matched by
/// `sphere_pair` after kernel stripping.
#[derive(Clone, Debug, Serialize)]
pub struct SphereTableRow {
    pub host: &'static str,
    pub isotropy: &'static str,
    pub sphere_dim: u32,
}

/// The rows of the classical table realizable at rank <= 3 that the
/// matcher knows about.
pub fn transitive_sphere_table() -> Vec<SphereTableRow> {
    vec![
        SphereTableRow {
            host: "t1",
            isotropy: "0",
            sphere_dim: 1,
        },
        SphereTableRow {
            host: "a1",
            isotropy: "t1",
            sphere_dim: 2,
        },
        SphereTableRow {
            host: "a1",
            isotropy: "0",
            sphere_dim: 3,
        },
        SphereTableRow {
            host: "2a1",
            isotropy: "a1 (diagonal)",
            sphere_dim: 3,
        },
        SphereTableRow {
            host: "t1+a1",
            isotropy: "t1 (non-central)",
            sphere_dim: 3,
        },
        SphereTableRow {
            host: "b2",
            isotropy: "2a1 (so(4))",
            sphere_dim: 4,
        },
        SphereTableRow {
            host: "a2",
            isotropy: "a1 (reducible)",
            sphere_dim: 5,
        },
        SphereTableRow {
            host: "b3",
            isotropy: "a3 (so(6))",
            sphere_dim: 6,
        },
        SphereTableRow {
            host: "g2",
            isotropy: "a2",
            sphere_dim: 6,
        },
    ]
}

/// Verdict kinds for one case of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    DiffeoSphere,
    Impossible,
    Survivor,
}

/// A verdict plus the ordered list of (filter, citation) reasons behind it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub reasons: Vec<Reason>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reason {
    pub filter: String,
    pub citation: String,
}

impl Verdict {
    pub fn survivor() -> Verdict {
        Verdict {
            kind: VerdictKind::Survivor,
            reasons: Vec::new(),
        }
    }

    pub fn concluded(kind: VerdictKind, reasons: Vec<(&str, &str)>) -> Verdict {
        assert!(kind == VerdictKind::Survivor || !reasons.is_empty());
        Verdict {
            kind,
            reasons: reasons
                .into_iter()
                .map(|(f, c)| Reason {
                    filter: f.to_string(),
                    citation: c.to_string(),
                })
                .collect(),
        }
    }
}

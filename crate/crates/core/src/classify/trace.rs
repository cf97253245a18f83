//! Replayable filter applications. Every step stored in a trace carries
//! the check that was run and its outcome; `replay` re-derives the outcome
//! from scratch, so traces can be audited standalone.

use crate::algebra::{enumerate_algebras, CompactAlgebra};
use crate::catalog::{self, FactorPart};
use crate::concavity::{self, Profile};
use crate::expr;
use crate::obstructions::{self as obs, FactTag, FixKind, HSide};
use crate::weights::su3_root_decomposition;
use serde::Serialize;

/// A check that can be re-run standalone from its serialized form.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum FilterCheck {
    SymmetryRankBound {
        n: u32,
        torus_rank: u32,
    },
    MaxDimForRank {
        rank: u32,
    },
    EnumerationEmpty {
        rank: u32,
        dim: u32,
    },
    NoMaxRankIsotropy {
        g: String,
        dim: u32,
    },
    FixedPointCriterion {
        kind: FixKind,
        fixed_set_dim: u32,
        n: u32,
    },
    FixedDim {
        k: String,
    },
    CentralizerDim {
        k: String,
    },
    KMaximal {
        k: String,
    },
    SpherePair {
        g: String,
        h: Option<String>,
        k: String,
        l: u32,
    },
    Frankel {
        d1: u32,
        d2: u32,
        n: u32,
    },
    Ineffectivity {
        g: String,
        h: String,
    },
    CurvatureFact {
        tag: FactTag,
    },
    InvariantCount {
        expr: String,
    },
    WeylPositions,
    RootInequivalence,
    TransitiveOnSphere {
        g: String,
        l: u32,
    },
    OrbitShape {
        h: String,
    },
    SecondFormComponent {
        component: SffComponent,
    },
    SymbolicInequivalence,
    ConcavityHorizon {
        f0: f64,
        df0: f64,
        eps: f64,
    },
    IdentityResidual {
        profile: String,
        step: f64,
        tol: f64,
    },
    SemisimpleReduction {
        g: String,
    },
    DiagramValid {
        g: String,
        k: String,
        h: Option<String>,
        h_prime: Option<String>,
        l: u32,
        l_prime: u32,
    },
    CircleFactorFixedDim {
        k: String,
        factor: usize,
    },
    Assumption {
        id: String,
    },
}

/// Second-fundamental-form components of the rank-three circle case, as
/// submodules of S^2(tangent) mapping to the normal plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SffComponent {
    TrivialTrivial,
    TrivialM1,
    TrivialM2,
    M1M1,
    M2M2,
    M1M2,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Outcome {
    Bool(bool),
    Count(u32),
    Tag(String),
    Real(f64),
}

/// One applied filter in a case trace.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub filter: FilterCheck,
    pub outcome: Outcome,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn tag(s: impl Into<String>) -> Outcome {
    Outcome::Tag(s.into())
}

/// Re-runs a check from scratch.
pub fn replay(check: &FilterCheck) -> Outcome {
    match check {
        FilterCheck::SymmetryRankBound { n, torus_rank } => {
            tag(format!("{:?}", obs::symmetry_rank_bound(*n, *torus_rank)))
        }
        FilterCheck::MaxDimForRank { rank } => {
            let max = (0..=21)
                .filter(|&d| !enumerate_algebras(*rank, d).unwrap_or_default().is_empty())
                .max()
                .unwrap_or(0);
            Outcome::Count(max)
        }
        FilterCheck::EnumerationEmpty { rank, dim } => Outcome::Bool(
            enumerate_algebras(*rank, *dim)
                .map(|v| v.is_empty())
                .unwrap_or(false),
        ),
        FilterCheck::NoMaxRankIsotropy { g, dim } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            Outcome::Bool(super::max_rank_isotropy_candidates(&g, *dim).is_empty())
        }
        FilterCheck::FixedPointCriterion {
            kind,
            fixed_set_dim,
            n,
        } => tag(format!(
            "{:?}",
            obs::fixed_point_criterion(*kind, *fixed_set_dim, *n)
        )),
        FilterCheck::FixedDim { k } => Outcome::Count(
            obs::fixed_dim(&catalog::lookup(k).expect("trace embeddings resolve")).unwrap(),
        ),
        FilterCheck::CentralizerDim { k } => Outcome::Count(
            catalog::centralizer_dim(&catalog::lookup(k).expect("trace embeddings resolve"))
                .unwrap(),
        ),
        FilterCheck::KMaximal { k } => {
            let e = catalog::lookup(k).expect("trace embeddings resolve");
            let maximal = e.descriptor.parts.iter().enumerate().all(|(i, p)| match p {
                FactorPart::Named(id) => catalog::named_subalgebras(e.host.simples()[i])
                    .iter()
                    .any(|n| n.id == *id && n.maximal),
                FactorPart::Full | FactorPart::Zero => true,
                _ => false,
            });
            Outcome::Bool(maximal)
        }
        FilterCheck::SpherePair { g, h, k, l } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            let k = catalog::lookup(k).expect("trace embeddings resolve");
            let h = match h {
                None => HSide::Group,
                Some(name) => HSide::Emb(catalog::lookup(name).expect("trace embeddings resolve")),
            };
            Outcome::Bool(obs::sphere_pair(&g, &h, &k, *l))
        }
        FilterCheck::Frankel { d1, d2, n } => tag(format!("{:?}", obs::frankel(*d1, *d2, *n))),
        FilterCheck::Ineffectivity { g, h } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            let h = catalog::lookup(h).expect("trace embeddings resolve");
            Outcome::Bool(obs::totally_geodesic_by_ineffectivity(&g, &h))
        }
        FilterCheck::CurvatureFact { tag: t } => tag(obs::homogeneous_curvature_fact(*t).statement),
        FilterCheck::InvariantCount { expr } => {
            match expr::eval_query(&format!("{expr}:inv")).expect("trace expressions parse") {
                expr::EvalOutput::Count(n) => Outcome::Count(n),
                _ => unreachable!("inv query returns a count"),
            }
        }
        FilterCheck::WeylPositions => Outcome::Count(su3_root_decomposition().len() as u32),
        FilterCheck::RootInequivalence => {
            let roots = su3_root_decomposition();
            let distinct = roots.iter().enumerate().all(|(i, a)| {
                roots.iter().skip(i + 1).all(|b| {
                    // canonical-sign inequality plus non-proportionality
                    a != b && {
                        let (x, y) = (a.components(), b.components());
                        x[0] * y[1] != x[1] * y[0]
                    }
                })
            });
            Outcome::Bool(distinct)
        }
        FilterCheck::TransitiveOnSphere { g, l } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            Outcome::Bool(obs::group_transitive_on_sphere(&g, *l))
        }
        FilterCheck::OrbitShape { h } => tag(orbit_shape(
            &catalog::lookup(h).expect("trace embeddings resolve"),
        )),
        FilterCheck::SecondFormComponent { component } => tag(sff_component_status(*component)),
        FilterCheck::SymbolicInequivalence => {
            Outcome::Bool(root_difference_planes_contain_center())
        }
        FilterCheck::ConcavityHorizon { f0, df0, eps } => {
            Outcome::Real(concavity::concave_positive_horizon(*f0, *df0, *eps))
        }
        FilterCheck::IdentityResidual { profile, step, tol } => {
            let p = Profile::parse(profile).expect("trace profiles parse");
            let report = concavity::verify_profile(&p, *step, *tol).expect("trace profiles sweep");
            Outcome::Bool(report.identity_pass)
        }
        FilterCheck::SemisimpleReduction { g } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            let ss = CompactAlgebra::new(g.simples().to_vec(), 0);
            tag(format!(
                "{} with finite principal isotropy",
                ss.render_compact()
            ))
        }
        FilterCheck::DiagramValid {
            g,
            k,
            h,
            h_prime,
            l,
            l_prime,
        } => {
            let g = CompactAlgebra::parse(g).expect("trace algebras parse");
            let k = catalog::lookup(k).expect("trace embeddings resolve");
            let side = |name: &Option<String>| match name {
                None => HSide::Group,
                Some(n) => HSide::Emb(catalog::lookup(n).expect("trace embeddings resolve")),
            };
            Outcome::Bool(
                super::validate_diagram(&g, &k, &side(h), &side(h_prime), (*l, *l_prime)).is_ok(),
            )
        }
        FilterCheck::CircleFactorFixedDim { k, factor } => {
            // fixed set of the circle sitting in one torus part of k, at a
            // regular point: everything commuting with that factor's torus,
            // minus k itself, plus the normal geodesic direction
            let k = catalog::lookup(k).expect("trace embeddings resolve");
            let g = &k.host;
            debug_assert!(matches!(k.descriptor.parts[*factor], FactorPart::MaxTorus));
            let trivial_g: u32 = g.abelian_rank()
                + g.simples()
                    .iter()
                    .enumerate()
                    .map(|(i, t)| if i == *factor { t.rank() } else { t.dim() })
                    .sum::<u32>();
            Outcome::Count(trivial_g - k.sub.dim() + 1)
        }
        FilterCheck::Assumption { .. } => tag("assumed"),
    }
}

/// Shape of the homogeneous space G/H° for a block-descriptor singular
/// isotropy: product of the per-factor quotients and the leftover center.
pub fn orbit_shape(h: &catalog::Embedding) -> String {
    let mut parts = Vec::new();
    if !h.descriptor.center {
        for _ in 0..h.host.abelian_rank() {
            parts.push("S1".to_string());
        }
    }
    for (i, p) in h.descriptor.parts.iter().enumerate() {
        let t = h.host.simples()[i];
        match p {
            FactorPart::Full => {}
            FactorPart::MaxTorus if t == crate::algebra::SimpleType::A1 => parts.push("S2".into()),
            FactorPart::Zero => {
                if !h.descriptor.diag_blocks.iter().any(|b| b.contains(&i)) {
                    parts.push(match t {
                        crate::algebra::SimpleType::A1 => "S3".into(),
                        other => format!("{}", other),
                    });
                }
            }
            other => parts.push(format!("{t}/{other:?}")),
        }
    }
    for b in &h.descriptor.diag_blocks {
        if b.len() == 2 {
            parts.push("S3".into());
        } else if b.len() > 2 {
            parts.push(format!("{}su2/diag", b.len()));
        }
    }
    parts.join("x")
}

/// Weight-level status of one second-fundamental-form component in the
/// rank-three circle case. The slice weight vanishes on k while the root
/// restrictions do not, which excludes every component except possibly the
/// cross term on balanced slope families.
pub fn sff_component_status(c: SffComponent) -> &'static str {
    match c {
        // target weight would have to vanish on k, but the slice weight is
        // nonzero on h and zero exactly on k
        SffComponent::TrivialTrivial => "excluded: slice weight is nonzero",
        // root restriction is nonzero on k, slice weight vanishes there
        SffComponent::TrivialM1 | SffComponent::TrivialM2 => {
            "excluded: root weight nonzero on k, slice weight zero on k"
        }
        SffComponent::M1M1 | SffComponent::M2M2 => {
            "excluded: doubled root weight nonzero on k, slice weight zero on k"
        }
        // (alpha1 +- alpha2)(k) = 2(a +- b): nonzero unless the slopes are
        // balanced, where only the slice-rotation scale separates them
        SffComponent::M1M2 => "excluded for slope families with a != -b and a != b; \
             balanced families additionally need the slice-weight scale to differ from |alpha1 +- alpha2|",
    }
}

/// The planes ker(alpha1 - alpha2) and ker(alpha1 + alpha2) in the maximal
/// torus both contain the center axis; a two-plane h avoiding the center
/// therefore never equalizes the two root restrictions.
pub fn root_difference_planes_contain_center() -> bool {
    let alpha1 = [0i64, 2, 0];
    let alpha2 = [0i64, 0, 2];
    let center_axis = [1i64, 0, 0];
    [1i64, -1].iter().all(|&sign| {
        let form: Vec<i64> = alpha1
            .iter()
            .zip(&alpha2)
            .map(|(x, y)| x + sign * y)
            .collect();
        form.iter()
            .zip(&center_axis)
            .map(|(f, c)| f * c)
            .sum::<i64>()
            == 0
    })
}

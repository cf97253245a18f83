//! Report assembly and rendering: per-case verdicts with their traces, the
//! candidate table, the survivor list and the resulting theorem, in text,
//! markdown and JSON.

use super::trace::{FilterCheck, Outcome, TraceStep};
use super::{CaseKey, ClassifyError, Enumeration, SingularCandidate};
use crate::algebra::CompactAlgebra;
use crate::obstructions::{Verdict, VerdictKind};
use crate::rep::frobenius_schur;
use serde::{Deserialize, Serialize};

/// Group-level display name of an algebra, e.g. `T^1 x SU(3)`.
pub fn group_display(g: &CompactAlgebra) -> String {
    let mut parts = Vec::new();
    if g.abelian_rank() == 1 {
        parts.push("T^1".to_string());
    } else if g.abelian_rank() > 1 {
        parts.push(format!("T^{}", g.abelian_rank()));
    }
    let simples = g.simples();
    let mut i = 0;
    while i < simples.len() {
        let t = simples[i];
        let run = simples[i..].iter().take_while(|x| **x == t).count();
        let base = match t.tag() {
            "a1" => "SU(2)",
            "a2" => "SU(3)",
            "b2" => "Spin(5)",
            "g2" => "G_2",
            "a3" => "SU(4)",
            "b3" => "Spin(7)",
            "c3" => "Sp(3)",
            other => other,
        };
        if run > 1 {
            parts.push(format!("{base}^{run}"));
        } else {
            parts.push(base.to_string());
        }
        i += run;
    }
    if parts.is_empty() {
        "{1}".to_string()
    } else {
        parts.join(" x ")
    }
}

fn isotropy_display(k_algebra: &str) -> String {
    match k_algebra {
        "0" => "{1}".to_string(),
        other => group_display(&CompactAlgebra::parse(other).expect("isotropy strings parse")),
    }
}

/// One singular-isotropy candidate as reported.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateInfo {
    pub name: String,
    pub iso: String,
    pub normal_sphere_dim: u32,
    pub positions: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn candidate_info(c: &SingularCandidate) -> CandidateInfo {
    match c {
        SingularCandidate::FixedPoint { l } => CandidateInfo {
            name: "fixed point (h = g)".into(),
            iso: "g".into(),
            normal_sphere_dim: *l,
            positions: 1,
            note: None,
        },
        SingularCandidate::Concrete { h, l } => CandidateInfo {
            name: h.name.clone(),
            iso: h.sub.render_compact(),
            normal_sphere_dim: *l,
            positions: h.class_size,
            note: None,
        },
        SingularCandidate::Family {
            iso,
            slice_kernel_is_k,
            l,
            label,
        } => CandidateInfo {
            name: label.to_string(),
            iso: iso.render_compact(),
            normal_sphere_dim: *l,
            positions: 1,
            note: Some(if *slice_kernel_is_k {
                "slice kernel equal to k".into()
            } else {
                "trivial slice kernel".into()
            }),
        },
    }
}

/// Verdict and trace for one enumerated case.
#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub d: u32,
    pub g: String,
    pub g_compact: String,
    pub g_display: String,
    pub k_name: String,
    pub k_algebra: String,
    pub candidates: Vec<CandidateInfo>,
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl CaseReport {
    pub fn new(
        key: &CaseKey,
        candidates: Vec<CandidateInfo>,
        verdict: Verdict,
        trace: Vec<TraceStep>,
    ) -> CaseReport {
        CaseReport {
            d: key.d,
            g: key.g.render(),
            g_compact: key.g.render_compact(),
            g_display: group_display(&key.g),
            k_name: key.k.name.clone(),
            k_algebra: key.k.sub.render(),
            candidates,
            verdict,
            trace,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseGroupReport {
    pub d: u32,
    pub notes: Vec<TraceStep>,
    pub cases: Vec<CaseReport>,
}

/// One row of the candidate table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub g: String,
    pub g_display: String,
    pub k: String,
    pub k_display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub version: u32,
    pub rows: Vec<TableRow>,
}

/// The full classification report.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub version: u32,
    pub dimension: u32,
    pub preamble: Vec<TraceStep>,
    pub groups: Vec<CaseGroupReport>,
    pub table: Vec<TableRow>,
    pub survivors: Vec<String>,
    pub theorem: String,
    pub remarks: Vec<String>,
}

pub(super) fn assemble(enumeration: Enumeration) -> Result<ClassificationReport, ClassifyError> {
    let mut groups = Vec::new();
    let mut table = Vec::new();
    let mut survivors = Vec::new();
    for g in &enumeration.groups {
        let mut cases = Vec::new();
        for key in &g.keys {
            let report = super::cases::evaluate(key)?;
            if report.verdict.kind == VerdictKind::Survivor {
                survivors.push(format!(
                    "{} / {}",
                    key.g.render_compact(),
                    if key.k.sub.is_trivial() {
                        "trivial".to_string()
                    } else {
                        key.k.sub.render()
                    }
                ));
            }
            if key.d == 2 {
                let n = table.len() as u32 + 1;
                table.push(TableRow {
                    n,
                    g: key.g.render(),
                    g_display: group_display(&key.g),
                    k: key.k.sub.render(),
                    k_display: isotropy_display(&key.k.sub.render()),
                });
            }
            cases.push(report);
        }
        groups.push(CaseGroupReport {
            d: g.d,
            notes: g.notes.clone(),
            cases,
        });
    }

    // the theorem is read off the verdicts, not asserted
    for group in &groups {
        for case in &group.cases {
            let g = CompactAlgebra::parse(&case.g).expect("case algebras parse");
            if g.semisimple_dim() > 6 {
                if case.verdict.kind == VerdictKind::Survivor {
                    return Err(ClassifyError::IncompleteAnalysis {
                        g: case.g.clone(),
                        k: case.k_name.clone(),
                        detail: "a pair above the semisimple-dimension threshold survived".into(),
                    });
                }
                if case.verdict.reasons.is_empty() {
                    return Err(ClassifyError::IncompleteAnalysis {
                        g: case.g.clone(),
                        k: case.k_name.clone(),
                        detail: "concluded without reasons".into(),
                    });
                }
            }
        }
    }
    let theorem = "Every admissible pair (G, K) whose semisimple part has dimension greater \
                   than 6 is classified DiffeoSphere or Impossible: a compact, positively curved, \
                   simply connected cohomogeneity-one 7-manifold with such symmetry is \
                   diffeomorphic to S^7. The unique remaining candidate pair is SU(2) x SU(2) \
                   with finite principal isotropy."
        .to_string();

    let remarks = vec![format!(
        "The irreducible su(2) inside sp(2) acts on C^4 by the 4-dimensional module V3, of {} \
         type; the associated normal homogeneous 7-manifold Sp(2)/SU(2) carries a \
         cohomogeneity-one action of SU(2) x SU(2) and shows that the surviving candidate row \
         is not vacuous.",
        frobenius_schur(3)
    )];

    Ok(ClassificationReport {
        version: 1,
        dimension: 7,
        preamble: enumeration.preamble,
        groups,
        table,
        survivors,
        theorem,
        remarks,
    })
}

impl ClassificationReport {
    pub fn golden(&self) -> GoldenTable {
        GoldenTable {
            version: self.version,
            rows: self.table.clone(),
        }
    }

    pub fn matches_golden(&self, golden: &GoldenTable) -> bool {
        self.golden() == *golden
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Cohomogeneity-one positive curvature in dimension 7\n\n");
        out.push_str("Preliminary bounds:\n\n");
        for s in &self.preamble {
            out.push_str(&format!("- {}\n", step_line(s)));
        }
        for group in &self.groups {
            out.push_str(&format!("\n## Corank d = {}\n\n", group.d));
            if group.cases.is_empty() {
                out.push_str("No cases: every required (rank, dimension) pair is empty.\n\n");
            }
            for note in &group.notes {
                out.push_str(&format!("- {}\n", step_line(note)));
            }
            for case in &group.cases {
                out.push_str(&format!(
                    "\n### G = {} ({}), K° = {}\n\n",
                    case.g_display,
                    case.g_compact,
                    isotropy_display(&case.k_algebra)
                ));
                out.push_str(&format!("Verdict: **{:?}**\n\n", case.verdict.kind));
                for r in &case.verdict.reasons {
                    out.push_str(&format!("- {} — {}\n", r.filter, r.citation));
                }
                if !case.candidates.is_empty() {
                    out.push_str("\nSingular candidates:\n\n");
                    for c in &case.candidates {
                        out.push_str(&format!(
                            "- {} ({}), normal sphere S^{}{}{}\n",
                            c.name,
                            c.iso,
                            c.normal_sphere_dim,
                            if c.positions > 1 {
                                format!(", {} positions", c.positions)
                            } else {
                                String::new()
                            },
                            c.note
                                .as_deref()
                                .map(|n| format!(" — {n}"))
                                .unwrap_or_default(),
                        ));
                    }
                }
                out.push_str("\nTrace:\n\n");
                for s in &case.trace {
                    out.push_str(&format!("- {}\n", step_line(s)));
                }
            }
        }
        out.push_str("\n## Candidate table\n\n");
        out.push_str("| n. | G | K° |\n|----|---|----|\n");
        for row in &self.table {
            out.push_str(&format!(
                "| {} | {} | {} |\n",
                row.n, row.g_display, row.k_display
            ));
        }
        out.push_str("\n## Survivors\n\n");
        for s in &self.survivors {
            out.push_str(&format!("- {s}\n"));
        }
        out.push_str(&format!("\n## Theorem\n\n{}\n", self.theorem));
        if !self.remarks.is_empty() {
            out.push_str("\n## Remarks\n\n");
            for r in &self.remarks {
                out.push_str(&format!("- {r}\n"));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Cohomogeneity-one positive curvature in dimension 7\n");
        out.push_str("====================================================\n\n");
        for group in &self.groups {
            out.push_str(&format!("Corank d = {}\n", group.d));
            if group.cases.is_empty() {
                out.push_str("  no cases (all enumerations empty)\n");
            }
            for case in &group.cases {
                out.push_str(&format!(
                    "  G = {:<16} K° = {:<8} -> {:?}\n",
                    case.g_compact,
                    isotropy_display(&case.k_algebra),
                    case.verdict.kind
                ));
                for r in &case.verdict.reasons {
                    out.push_str(&format!("      {} [{}]\n", r.filter, r.citation));
                }
            }
        }
        out.push_str("\nCandidate table:\n");
        for row in &self.table {
            out.push_str(&format!(
                "  {}. {:<16} {}\n",
                row.n, row.g_display, row.k_display
            ));
        }
        out.push_str("\nSurvivors: ");
        out.push_str(&self.survivors.join(", "));
        out.push_str(&format!("\n\n{}\n", self.theorem));
        out
    }
}

fn outcome_str(o: &Outcome) -> String {
    match o {
        Outcome::Bool(b) => b.to_string(),
        Outcome::Count(n) => n.to_string(),
        Outcome::Tag(t) => t.clone(),
        Outcome::Real(x) => format!("{x:.4}"),
    }
}

/// Compact single-line rendering of a trace step.
pub fn step_line(s: &TraceStep) -> String {
    let check = match &s.filter {
        FilterCheck::SymmetryRankBound { n, torus_rank } => {
            format!("symmetry rank bound (n = {n}, rank {torus_rank})")
        }
        FilterCheck::MaxDimForRank { rank } => format!("max dimension at rank {rank}"),
        FilterCheck::EnumerationEmpty { rank, dim } => {
            format!("no compact algebra of rank {rank}, dim {dim}")
        }
        FilterCheck::NoMaxRankIsotropy { g, dim } => {
            format!("no maximal-rank isotropy of dim {dim} in {g}")
        }
        FilterCheck::FixedPointCriterion {
            kind,
            fixed_set_dim,
            n,
        } => {
            format!("fixed-set criterion ({kind:?}, fix dim {fixed_set_dim}, n = {n})")
        }
        FilterCheck::FixedDim { k } => format!("fixed dimensions of {k}"),
        FilterCheck::CentralizerDim { k } => format!("centralizer dimension of {k}"),
        FilterCheck::KMaximal { k } => format!("maximality of {k}"),
        FilterCheck::SpherePair { h, k, l, .. } => match h {
            Some(h) => format!("sphere pair ({h} over {k}, S^{l})"),
            None => format!("sphere pair (g over {k}, S^{l})"),
        },
        FilterCheck::Frankel { d1, d2, n } => format!("intersection bound ({d1} + {d2} vs {n})"),
        FilterCheck::Ineffectivity { h, .. } => format!("action kernel through {h}"),
        FilterCheck::CurvatureFact { tag } => format!("curvature fact {tag:?}"),
        FilterCheck::InvariantCount { expr } => format!("invariant multiplicity of {expr}"),
        FilterCheck::WeylPositions => "Weyl positions of u(2)".to_string(),
        FilterCheck::RootInequivalence => "root-plane inequivalence".to_string(),
        FilterCheck::TransitiveOnSphere { g, l } => format!("{g} transitive on S^{l}"),
        FilterCheck::OrbitShape { h } => format!("orbit shape through {h}"),
        FilterCheck::SecondFormComponent { component } => {
            format!("second-form component {component:?}")
        }
        FilterCheck::SymbolicInequivalence => "inequivalence of the root planes over h".to_string(),
        FilterCheck::ConcavityHorizon { f0, df0, eps } => {
            format!("concavity horizon (f0 = {f0}, f0' = {df0}, eps = {eps})")
        }
        FilterCheck::IdentityResidual { profile, step, tol } => {
            format!("identity residual on {profile} (step {step}, tol {tol})")
        }
        FilterCheck::SemisimpleReduction { g } => format!("semisimple reduction of {g}"),
        FilterCheck::DiagramValid { l, l_prime, .. } => {
            format!("diagram validity (S^{l}, S^{l_prime})")
        }
        FilterCheck::CircleFactorFixedDim { k, factor } => {
            format!("fixed dimensions of the factor-{factor} circle in {k}")
        }
        FilterCheck::Assumption { id } => format!("assumption: {id}"),
    };
    let branch = s
        .branch
        .as_deref()
        .map(|b| format!("[{b}] "))
        .unwrap_or_default();
    let note = s
        .note
        .as_deref()
        .map(|n| format!(" — {n}"))
        .unwrap_or_default();
    format!(
        "{branch}{check} -> {} ({}){note}",
        outcome_str(&s.outcome),
        s.citation
    )
}

//! Curated catalog of the subalgebra embeddings the case analysis
//! quantifies over, with derived isotypic and centralizer data.
//!
//! Conjugacy is handled by finite hand-checked lists (Borel-de Siebenthal
//! tables for maximal-rank subalgebras, the known su(2) immersion classes),
//! not by a general conjugacy algorithm; every entry is cross-checked by
//! the representation engine in the test suite.

use crate::algebra::{CompactAlgebra, IdealSelector, SimpleType};
use crate::rep::{self, Su2Rep};
use crate::weights::{maximal_torus_root_module, TorusRep};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("catalog has no isotypic data for embedding {0:?}")]
    CatalogMiss(String),
    #[error("unknown embedding name {0:?}")]
    UnknownName(String),
}

/// The su(2) immersion classes the analysis needs, keyed by the defining
/// restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Su2Class {
    Su3Reducible,
    Su3Irreducible,
    Sp2Irreducible,
}

impl Su2Class {
    pub fn defining_rep(self) -> Su2Rep {
        match self {
            Su2Class::Su3Reducible => Su2Rep::from_pairs(&[(1, 1), (0, 1)]),
            Su2Class::Su3Irreducible => Su2Rep::irreducible(2),
            Su2Class::Sp2Irreducible => Su2Rep::irreducible(3),
        }
    }

    pub fn host_type(self) -> SimpleType {
        match self {
            Su2Class::Su3Reducible | Su2Class::Su3Irreducible => SimpleType::A2,
            Su2Class::Sp2Irreducible => SimpleType::B2,
        }
    }
}

/// How an embedded subalgebra meets one simple factor of the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorPart {
    Zero,
    Full,
    MaxTorus,
    Named(&'static str),
    Su2(Su2Class),
}

/// Symbolic knowledge about one slope of a torus line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slope {
    Zero,
    NonZero,
    Free,
}

/// A one-dimensional torus subalgebra with symbolic slopes: one coordinate
/// on the center, one per a1 factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineFamily {
    pub center: Slope,
    pub factors: Vec<Slope>,
}

impl LineFamily {
    pub fn nontrivial_projection(&self, factor: usize) -> bool {
        self.factors[factor] == Slope::NonZero
    }
}

/// Structured embedding descriptor: per-factor parts, diagonal su(2)
/// blocks across a1 factors, optional center inclusion, optional symbolic
/// torus line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub center: bool,
    pub parts: Vec<FactorPart>,
    pub diag_blocks: Vec<BTreeSet<usize>>,
    pub line: Option<LineFamily>,
}

/// A subalgebra of a host, up to conjugacy.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Embedding {
    pub name: String,
    pub host: CompactAlgebra,
    pub sub: CompactAlgebra,
    pub descriptor: Descriptor,
    /// Number of conjugate positions the class splits into under the
    /// relevant Weyl/automorphism action (1 unless stated).
    pub class_size: u32,
}

/// A named maximal-rank subalgebra of a simple type.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NamedSub {
    pub id: &'static str,
    simples: &'static [SimpleType],
    abelian: u32,
    pub maximal: bool,
}

impl NamedSub {
    pub fn algebra(&self) -> CompactAlgebra {
        CompactAlgebra::new(self.simples.to_vec(), self.abelian)
    }
}

use SimpleType::{A1, A2, A3, B2, B3, C3, G2};

/// Maximal-rank subalgebra classes of each simple type (Borel-de
/// Siebenthal lists, curated to one representative per abstract class the
/// analysis distinguishes).
pub fn named_subalgebras(t: SimpleType) -> &'static [NamedSub] {
    match t {
        A1 => &[],
        A2 => &[NamedSub {
            id: "u2",
            simples: &[A1],
            abelian: 1,
            maximal: true,
        }],
        B2 => &[
            NamedSub {
                id: "so4",
                simples: &[A1, A1],
                abelian: 0,
                maximal: true,
            },
            NamedSub {
                id: "u2",
                simples: &[A1],
                abelian: 1,
                maximal: true,
            },
        ],
        G2 => &[
            NamedSub {
                id: "a2",
                simples: &[A2],
                abelian: 0,
                maximal: true,
            },
            NamedSub {
                id: "2a1",
                simples: &[A1, A1],
                abelian: 0,
                maximal: true,
            },
        ],
        A3 => &[
            NamedSub {
                id: "u3",
                simples: &[A2],
                abelian: 1,
                maximal: true,
            },
            NamedSub {
                id: "u2xu2",
                simples: &[A1, A1],
                abelian: 1,
                maximal: true,
            },
        ],
        B3 => &[
            NamedSub {
                id: "so6",
                simples: &[A3],
                abelian: 0,
                maximal: true,
            },
            NamedSub {
                id: "so5xso2",
                simples: &[B2],
                abelian: 1,
                maximal: true,
            },
            NamedSub {
                id: "so4xso3",
                simples: &[A1, A1, A1],
                abelian: 0,
                maximal: true,
            },
        ],
        C3 => &[
            NamedSub {
                id: "u3",
                simples: &[A2],
                abelian: 1,
                maximal: true,
            },
            NamedSub {
                id: "sp1xsp2",
                simples: &[A1, B2],
                abelian: 0,
                maximal: true,
            },
        ],
    }
}

/// The maximal subalgebras of maximal rank of a simple host.
pub fn maximal_rank_subalgebras(host: SimpleType) -> Vec<(&'static str, CompactAlgebra)> {
    named_subalgebras(host)
        .iter()
        .filter(|n| n.maximal)
        .map(|n| (n.id, n.algebra()))
        .collect()
}

pub fn named_algebra(t: SimpleType, id: &str) -> Option<CompactAlgebra> {
    named_subalgebras(t)
        .iter()
        .find(|n| n.id == id)
        .map(|n| n.algebra())
}

/// All maximal-rank lattice options inside one simple factor, descending
/// by dimension: the factor itself, the named classes, the maximal torus.
pub fn factor_lattice(t: SimpleType) -> Vec<FactorPart> {
    let mut out = vec![FactorPart::Full];
    for n in named_subalgebras(t) {
        out.push(FactorPart::Named(n.id));
    }
    out.push(FactorPart::MaxTorus);
    out
}

pub fn part_algebra(t: SimpleType, part: &FactorPart) -> CompactAlgebra {
    match part {
        FactorPart::Zero => CompactAlgebra::trivial(),
        FactorPart::Full => CompactAlgebra::simple(t),
        FactorPart::MaxTorus => CompactAlgebra::torus(t.rank()),
        FactorPart::Named(id) => named_algebra(t, id).expect("named part belongs to its host type"),
        FactorPart::Su2(_) => CompactAlgebra::simple(A1),
    }
}

/// Containment of lattice parts inside one factor. Full contains
/// everything; every maximal-rank named class contains the standard
/// maximal torus.
pub fn part_contains(big: &FactorPart, small: &FactorPart) -> bool {
    match (big, small) {
        (FactorPart::Full, _) => true,
        (a, b) if a == b => true,
        (FactorPart::Named(_), FactorPart::MaxTorus) => true,
        _ => false,
    }
}

impl Embedding {
    fn build(
        name: &str,
        host: CompactAlgebra,
        descriptor: Descriptor,
        class_size: u32,
    ) -> Embedding {
        let mut sub = CompactAlgebra::trivial();
        if descriptor.center {
            sub = sub.sum(&CompactAlgebra::torus(host.abelian_rank()));
        }
        for (i, part) in descriptor.parts.iter().enumerate() {
            sub = sub.sum(&part_algebra(host.simples()[i], part));
        }
        for _ in &descriptor.diag_blocks {
            sub = sub.sum(&CompactAlgebra::simple(A1));
        }
        if descriptor.line.is_some() {
            sub = sub.sum(&CompactAlgebra::torus(1));
        }
        debug_assert!(sub.dim() <= host.dim() && sub.rank() <= host.rank());
        Embedding {
            name: name.to_string(),
            host,
            sub,
            descriptor,
            class_size,
        }
    }

    pub fn blocks(
        name: &str,
        host: CompactAlgebra,
        center: bool,
        parts: Vec<FactorPart>,
    ) -> Embedding {
        assert_eq!(parts.len(), host.simples().len());
        Embedding::build(
            name,
            host,
            Descriptor {
                center,
                parts,
                diag_blocks: vec![],
                line: None,
            },
            1,
        )
    }

    pub fn su2_diagonal(name: &str, host: CompactAlgebra, factors: BTreeSet<usize>) -> Embedding {
        for &i in &factors {
            assert_eq!(
                host.simples()[i],
                A1,
                "diagonal blocks live across a1 factors"
            );
        }
        let parts = vec![FactorPart::Zero; host.simples().len()];
        Embedding::build(
            name,
            host,
            Descriptor {
                center: false,
                parts,
                diag_blocks: vec![factors],
                line: None,
            },
            1,
        )
    }

    pub fn su2_defining(
        name: &str,
        host: CompactAlgebra,
        factor: usize,
        class: Su2Class,
    ) -> Embedding {
        assert_eq!(host.simples()[factor], class.host_type());
        let mut parts = vec![FactorPart::Zero; host.simples().len()];
        parts[factor] = FactorPart::Su2(class);
        Embedding::build(
            name,
            host,
            Descriptor {
                center: false,
                parts,
                diag_blocks: vec![],
                line: None,
            },
            1,
        )
    }

    pub fn line_family(name: &str, host: CompactAlgebra, line: LineFamily) -> Embedding {
        assert_eq!(line.factors.len(), host.simples().len());
        for (i, s) in line.factors.iter().enumerate() {
            if *s != Slope::Zero {
                assert_eq!(host.simples()[i], A1, "line slopes land in a1 factors");
            }
        }
        let parts = vec![FactorPart::Zero; host.simples().len()];
        Embedding::build(
            name,
            host,
            Descriptor {
                center: false,
                parts,
                diag_blocks: vec![],
                line: Some(line),
            },
            1,
        )
    }

    pub fn trivial_sub(name: &str, host: CompactAlgebra) -> Embedding {
        let parts = vec![FactorPart::Zero; host.simples().len()];
        Embedding::build(
            name,
            host,
            Descriptor {
                center: false,
                parts,
                diag_blocks: vec![],
                line: None,
            },
            1,
        )
    }

    pub fn full_max_torus(name: &str, host: CompactAlgebra) -> Embedding {
        let parts = vec![FactorPart::MaxTorus; host.simples().len()];
        Embedding::build(
            name,
            host,
            Descriptor {
                center: true,
                parts,
                diag_blocks: vec![],
                line: None,
            },
            1,
        )
    }

    pub fn with_class_size(mut self, n: u32) -> Embedding {
        self.class_size = n;
        self
    }

    /// True when this descriptor visibly contains the other (per-factor
    /// lattice containment; identical diagonal blocks and lines).
    pub fn contains(&self, other: &Embedding) -> bool {
        if self.host != other.host {
            return false;
        }
        if other.descriptor.center && !self.descriptor.center {
            return false;
        }
        for (a, b) in self.descriptor.parts.iter().zip(&other.descriptor.parts) {
            if !part_contains(a, b) {
                return false;
            }
        }
        for block in &other.descriptor.diag_blocks {
            let covered = self.descriptor.diag_blocks.contains(block)
                || block
                    .iter()
                    .all(|&i| self.descriptor.parts[i] == FactorPart::Full);
            if !covered {
                return false;
            }
        }
        if let Some(line) = &other.descriptor.line {
            if self.descriptor.line.as_ref() != Some(line) {
                // a line is also contained in anything holding the full
                // torus of every coordinate it touches
                let center_ok = line.center == Slope::Zero || self.descriptor.center;
                let factors_ok = line.factors.iter().enumerate().all(|(i, s)| {
                    *s == Slope::Zero
                        || matches!(
                            self.descriptor.parts[i],
                            FactorPart::Full | FactorPart::MaxTorus | FactorPart::Named(_)
                        )
                        || self.descriptor.diag_blocks.iter().any(|b| b.contains(&i))
                });
                if !(center_ok && factors_ok) {
                    return false;
                }
            }
        }
        true
    }
}

/// A module of an embedded subalgebra: complexified su(2) data, concrete
/// real torus data, or symbolic line data (trivial count plus the number
/// of planes with nonzero symbolic weight).
#[derive(Clone, Debug, PartialEq)]
pub enum QuotientModule {
    Su2(Su2Rep),
    Torus(TorusRep),
    SymbolicLine {
        trivial_mult: u32,
        nonzero_pairs: u32,
    },
}

impl QuotientModule {
    pub fn trivial_real_mult(&self) -> u32 {
        match self {
            QuotientModule::Su2(r) => r.mult(0),
            QuotientModule::Torus(r) => r.zero_mult,
            QuotientModule::SymbolicLine { trivial_mult, .. } => *trivial_mult,
        }
    }

    pub fn dim_real(&self) -> u64 {
        match self {
            QuotientModule::Su2(r) => r.dim(),
            QuotientModule::Torus(r) => r.dim_real(),
            QuotientModule::SymbolicLine {
                trivial_mult,
                nonzero_pairs,
            } => *trivial_mult as u64 + 2 * *nonzero_pairs as u64,
        }
    }

    pub fn render(&self) -> String {
        match self {
            QuotientModule::Su2(r) => r.render(),
            QuotientModule::Torus(r) => r.render(),
            QuotientModule::SymbolicLine {
                trivial_mult,
                nonzero_pairs,
            } => {
                format!("triv^{trivial_mult}+{nonzero_pairs} symbolic planes")
            }
        }
    }
}

fn su2_sub_shape(e: &Embedding) -> Option<Su2Shape> {
    let d = &e.descriptor;
    if d.center || d.line.is_some() {
        return None;
    }
    let su2_parts: Vec<(usize, Su2Class)> = d
        .parts
        .iter()
        .enumerate()
        .filter_map(|(i, p)| match p {
            FactorPart::Su2(c) => Some((i, *c)),
            _ => None,
        })
        .collect();
    let nonzero_parts = d
        .parts
        .iter()
        .filter(|p| !matches!(p, FactorPart::Zero | FactorPart::Su2(_)))
        .count();
    if nonzero_parts > 0 {
        return None;
    }
    match (d.diag_blocks.len(), su2_parts.len()) {
        (1, 0) => Some(Su2Shape::Diagonal(d.diag_blocks[0].clone())),
        (0, 1) => Some(Su2Shape::Defining(su2_parts[0].0, su2_parts[0].1)),
        _ => None,
    }
}

enum Su2Shape {
    Diagonal(BTreeSet<usize>),
    Defining(usize, Su2Class),
}

/// The full adjoint module of the host restricted to the subalgebra.
pub fn host_module(e: &Embedding) -> Result<QuotientModule, CatalogError> {
    if let Some(shape) = su2_sub_shape(e) {
        let mut out = Su2Rep::from_pairs(&[(0, e.host.abelian_rank())]);
        for (i, &t) in e.host.simples().iter().enumerate() {
            let factor_module = match &shape {
                Su2Shape::Diagonal(block) if block.contains(&i) => Su2Rep::irreducible(2),
                Su2Shape::Defining(f, class) if *f == i => {
                    rep::branch_adjoint(t, &class.defining_rep())
                        .expect("catalog su(2) classes branch on their hosts")
                }
                _ => Su2Rep::from_pairs(&[(0, t.dim())]),
            };
            out = out.add(&factor_module);
        }
        return Ok(QuotientModule::Su2(out));
    }
    let d = &e.descriptor;
    let all_torus = d.parts.iter().all(|p| matches!(p, FactorPart::MaxTorus))
        && (d.center || e.host.abelian_rank() == 0)
        && d.line.is_none()
        && d.diag_blocks.is_empty();
    if all_torus {
        let mut rep = maximal_torus_root_module(&e.host);
        rep.zero_mult += e.host.rank();
        return Ok(QuotientModule::Torus(rep));
    }
    if let Some(line) = &d.line {
        let mut trivial = e.host.abelian_rank();
        let mut nonzero = 0;
        for (i, slope) in line.factors.iter().enumerate() {
            debug_assert_eq!(e.host.simples()[i], A1);
            trivial += 1;
            match slope {
                Slope::Zero => trivial += 2,
                _ => nonzero += 1,
            }
        }
        return Ok(QuotientModule::SymbolicLine {
            trivial_mult: trivial,
            nonzero_pairs: nonzero,
        });
    }
    Err(CatalogError::CatalogMiss(e.name.clone()))
}

/// Adjoint of the host restricted to the subalgebra, minus the adjoint of
/// the subalgebra itself.
pub fn isotypic_of_quotient(e: &Embedding) -> Result<QuotientModule, CatalogError> {
    match host_module(e)? {
        QuotientModule::Su2(m) => {
            let q = m
                .remove_one(2)
                .ok_or_else(|| CatalogError::CatalogMiss(e.name.clone()))?;
            Ok(QuotientModule::Su2(q))
        }
        QuotientModule::Torus(mut m) => {
            m.zero_mult -= e.sub.rank();
            Ok(QuotientModule::Torus(m))
        }
        QuotientModule::SymbolicLine {
            trivial_mult,
            nonzero_pairs,
        } => Ok(QuotientModule::SymbolicLine {
            trivial_mult: trivial_mult - 1,
            nonzero_pairs,
        }),
    }
}

/// Dimension of the centralizer of the subalgebra in the host: the trivial
/// multiplicity of the restricted adjoint.
pub fn centralizer_dim(e: &Embedding) -> Result<u32, CatalogError> {
    Ok(host_module(e)?.trivial_real_mult())
}

/// A nonzero ideal of the host contained in the subalgebra, if any.
pub fn contains_ideal(g: &CompactAlgebra, e: &Embedding) -> Option<IdealSelector> {
    debug_assert_eq!(*g, e.host);
    let d = &e.descriptor;
    let mut factors = BTreeSet::new();
    for (i, p) in d.parts.iter().enumerate() {
        if matches!(p, FactorPart::Full) {
            factors.insert(i);
        }
    }
    for block in &d.diag_blocks {
        if block.len() == 1 {
            factors.extend(block.iter().copied());
        }
    }
    let mut abelian = 0;
    if d.center && g.abelian_rank() > 0 {
        abelian = g.abelian_rank();
    }
    if let Some(line) = &d.line {
        if line.factors.iter().all(|s| *s == Slope::Zero) && g.abelian_rank() > 0 {
            abelian = abelian.max(1);
        }
    }
    let sel = IdealSelector {
        factor_indices: factors,
        abelian_rank: abelian,
    };
    if sel.is_zero() {
        None
    } else {
        Some(sel)
    }
}

/// All su(2) subalgebra classes of the host that the analysis needs:
/// defining-representation classes inside su(3) and sp(2) factors, and
/// diagonal blocks across a1 factors.
pub fn su2_embeddings(host: &CompactAlgebra) -> Vec<Embedding> {
    let mut out = Vec::new();
    let host_tag = name_tag(host);
    for (i, &t) in host.simples().iter().enumerate() {
        match t {
            A2 => {
                out.push(Embedding::su2_defining(
                    &format!("su2_red_in_{host_tag}"),
                    host.clone(),
                    i,
                    Su2Class::Su3Reducible,
                ));
                out.push(Embedding::su2_defining(
                    &format!("su2_irr_in_{host_tag}"),
                    host.clone(),
                    i,
                    Su2Class::Su3Irreducible,
                ));
            }
            B2 => {
                out.push(Embedding::su2_defining(
                    &format!("su2_irr_in_{host_tag}"),
                    host.clone(),
                    i,
                    Su2Class::Sp2Irreducible,
                ));
            }
            _ => {}
        }
    }
    let a1_factors: Vec<usize> = host
        .simples()
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == A1)
        .map(|(i, _)| i)
        .collect();
    for size in 1..=a1_factors.len() {
        for subset in subsets_of_size(&a1_factors, size) {
            let name = if size == 1 {
                format!("su2_factor{}_in_{host_tag}", subset.iter().next().unwrap())
            } else {
                format!(
                    "diag{}_{}_in_{host_tag}",
                    size,
                    subset
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join("")
                )
            };
            out.push(Embedding::su2_diagonal(&name, host.clone(), subset));
        }
    }
    out
}

/// Torus subalgebra families of the given rank: the full maximal torus, or
/// symbolic rank-one lines when every simple factor is a1.
pub fn torus_embeddings(host: &CompactAlgebra, rank: u32) -> Vec<Embedding> {
    let host_tag = name_tag(host);
    if rank == host.rank() {
        return vec![Embedding::full_max_torus(
            &format!("t{}_in_{}", rank, host_tag),
            host.clone(),
        )];
    }
    if rank != 1 || host.simples().iter().any(|t| *t != A1) {
        return Vec::new();
    }
    let n = host.simples().len();
    let center = if host.abelian_rank() > 0 {
        Slope::Free
    } else {
        Slope::Zero
    };
    let mut out = Vec::new();
    for nonzero in (0..=n).rev() {
        let factors: Vec<Slope> = (0..n)
            .map(|i| {
                if i < nonzero {
                    Slope::NonZero
                } else {
                    Slope::Zero
                }
            })
            .collect();
        let line = if nonzero == 0 {
            if host.abelian_rank() == 0 {
                continue;
            }
            LineFamily {
                center: Slope::NonZero,
                factors,
            }
        } else {
            LineFamily { center, factors }
        };
        let name = match nonzero {
            0 => format!("t1_central_in_{host_tag}"),
            k if k == n => format!("t1_generic_in_{host_tag}"),
            _ => format!("t1_partial_in_{host_tag}"),
        };
        out.push(Embedding::line_family(&name, host.clone(), line));
    }
    out
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| items[i])
                    .collect(),
            );
        }
    }
    out
}

/// Short host tag usable inside embedding names, e.g. `t1xsu3` for t1+a2.
pub fn name_tag(host: &CompactAlgebra) -> String {
    host.render_compact().replace('+', "_")
}

/// Ideal components of the subalgebra cut out by a descriptor, used to
/// strip slice kernels off orbit pairs.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealComponent {
    CenterFull,
    TorusPart(usize),
    FullFactor(usize),
    NamedWhole(usize, &'static str),
    NamedCenter(usize, &'static str),
    NamedSemisimple(usize, &'static str),
    Su2Part(usize, Su2Class),
    DiagBlock(usize),
    Line,
}

pub fn sub_ideal_components(e: &Embedding) -> Vec<IdealComponent> {
    let mut out = Vec::new();
    let d = &e.descriptor;
    if d.center && e.host.abelian_rank() > 0 {
        out.push(IdealComponent::CenterFull);
    }
    for (i, p) in d.parts.iter().enumerate() {
        match p {
            FactorPart::Zero => {}
            FactorPart::Full => out.push(IdealComponent::FullFactor(i)),
            FactorPart::MaxTorus => out.push(IdealComponent::TorusPart(i)),
            FactorPart::Named(id) => {
                out.push(IdealComponent::NamedWhole(i, id));
                let alg = named_algebra(e.host.simples()[i], id).unwrap();
                if alg.abelian_rank() > 0 {
                    out.push(IdealComponent::NamedCenter(i, id));
                }
                if !alg.simples().is_empty() {
                    out.push(IdealComponent::NamedSemisimple(i, id));
                }
            }
            FactorPart::Su2(c) => out.push(IdealComponent::Su2Part(i, *c)),
        }
    }
    for (b, _) in d.diag_blocks.iter().enumerate() {
        out.push(IdealComponent::DiagBlock(b));
    }
    if d.line.is_some() {
        out.push(IdealComponent::Line);
    }
    out
}

pub fn component_algebra(e: &Embedding, comp: &IdealComponent) -> CompactAlgebra {
    match comp {
        IdealComponent::CenterFull => CompactAlgebra::torus(e.host.abelian_rank()),
        IdealComponent::TorusPart(i) => CompactAlgebra::torus(e.host.simples()[*i].rank()),
        IdealComponent::FullFactor(i) => CompactAlgebra::simple(e.host.simples()[*i]),
        IdealComponent::NamedWhole(i, id) => named_algebra(e.host.simples()[*i], id).unwrap(),
        IdealComponent::NamedCenter(i, id) => CompactAlgebra::torus(
            named_algebra(e.host.simples()[*i], id)
                .unwrap()
                .abelian_rank(),
        ),
        IdealComponent::NamedSemisimple(i, id) => {
            let alg = named_algebra(e.host.simples()[*i], id).unwrap();
            CompactAlgebra::new(alg.simples().to_vec(), 0)
        }
        IdealComponent::Su2Part(_, _) | IdealComponent::DiagBlock(_) => CompactAlgebra::simple(A1),
        IdealComponent::Line => CompactAlgebra::torus(1),
    }
}

/// Whether an ideal component of `h` lies inside the subalgebra of `k`.
pub fn component_contained_in(h: &Embedding, comp: &IdealComponent, k: &Embedding) -> bool {
    let kd = &k.descriptor;
    match comp {
        IdealComponent::CenterFull => kd.center,
        IdealComponent::TorusPart(i) => matches!(
            kd.parts.get(*i),
            Some(FactorPart::MaxTorus) | Some(FactorPart::Named(_)) | Some(FactorPart::Full)
        ),
        IdealComponent::FullFactor(i) => matches!(kd.parts.get(*i), Some(FactorPart::Full)),
        IdealComponent::NamedWhole(i, id) => {
            matches!(kd.parts.get(*i), Some(FactorPart::Full))
                || kd.parts.get(*i) == Some(&FactorPart::Named(id))
        }
        // the center of a maximal-rank named class lies in the standard
        // maximal torus of the factor
        IdealComponent::NamedCenter(i, id) => {
            matches!(
                kd.parts.get(*i),
                Some(FactorPart::MaxTorus) | Some(FactorPart::Full)
            ) || kd.parts.get(*i) == Some(&FactorPart::Named(id))
        }
        IdealComponent::NamedSemisimple(i, id) => match (*id, kd.parts.get(*i)) {
            (_, Some(FactorPart::Full)) => true,
            (id2, Some(FactorPart::Named(k_id))) => *k_id == id2,
            // the semisimple part of u(2) in su(3) is the reducible su(2)
            ("u2", Some(FactorPart::Su2(Su2Class::Su3Reducible))) if h.host.simples()[*i] == A2 => {
                true
            }
            _ => false,
        },
        IdealComponent::Su2Part(i, c) => kd.parts.get(*i) == Some(&FactorPart::Su2(*c)),
        IdealComponent::DiagBlock(b) => kd.diag_blocks.contains(&h.descriptor.diag_blocks[*b]),
        IdealComponent::Line => false,
    }
}

/// The standard named embeddings used by the classification run.
pub fn standard_embeddings() -> Vec<Embedding> {
    let a2 = CompactAlgebra::parse("a2").unwrap();
    let b2 = CompactAlgebra::parse("b2").unwrap();
    let g2 = CompactAlgebra::parse("g2").unwrap();
    let a3 = CompactAlgebra::parse("a3").unwrap();
    let b3 = CompactAlgebra::parse("b3").unwrap();
    let a1a2 = CompactAlgebra::parse("a1+a2").unwrap();
    let a1b2 = CompactAlgebra::parse("a1+b2").unwrap();
    let triple = CompactAlgebra::parse("3a1").unwrap();
    let t1a2 = CompactAlgebra::parse("t1+a2").unwrap();
    let t12a1 = CompactAlgebra::parse("t1+2a1").unwrap();
    let two_a1 = CompactAlgebra::parse("2a1").unwrap();

    let mut out = vec![
        // principal isotropy candidates, maximal-rank cases
        Embedding::blocks("t2_in_a2", a2.clone(), false, vec![FactorPart::MaxTorus]),
        Embedding::blocks("u2_in_b2", b2.clone(), false, vec![FactorPart::Named("u2")]),
        Embedding::blocks("a2_in_g2", g2.clone(), false, vec![FactorPart::Named("a2")]),
        Embedding::blocks(
            "t3_in_3a1",
            triple.clone(),
            false,
            vec![
                FactorPart::MaxTorus,
                FactorPart::MaxTorus,
                FactorPart::MaxTorus,
            ],
        ),
        Embedding::blocks(
            "t1_u2_in_a1a2",
            a1a2.clone(),
            false,
            vec![FactorPart::MaxTorus, FactorPart::Named("u2")],
        ),
        Embedding::blocks(
            "t1_so4_in_a1b2",
            a1b2.clone(),
            false,
            vec![FactorPart::MaxTorus, FactorPart::Named("so4")],
        ),
        Embedding::blocks("u3_in_a3", a3.clone(), false, vec![FactorPart::Named("u3")]),
        Embedding::blocks(
            "so6_in_b3",
            b3.clone(),
            false,
            vec![FactorPart::Named("so6")],
        ),
        // principal isotropy candidates, corank-two cases
        Embedding::su2_defining("su2_red_in_t1xsu3", t1a2.clone(), 0, Su2Class::Su3Reducible),
        Embedding::su2_defining(
            "su2_irr_in_t1xsu3",
            t1a2.clone(),
            0,
            Su2Class::Su3Irreducible,
        ),
        Embedding::su2_diagonal("su2_factor0_in_3su2", triple.clone(), [0].into())
            .with_class_size(3),
        Embedding::su2_diagonal("diag2_in_3su2", triple.clone(), [0, 1].into()).with_class_size(3),
        Embedding::su2_diagonal("diag3_in_3su2", triple.clone(), [0, 1, 2].into()),
        Embedding::trivial_sub("finite_in_2su2", two_a1.clone()),
        // representation-type reference classes
        Embedding::su2_defining("su2_red_in_su3", a2.clone(), 0, Su2Class::Su3Reducible),
        Embedding::su2_defining("su2_irr_in_su3", a2.clone(), 0, Su2Class::Su3Irreducible),
        Embedding::su2_defining("su2_irr_in_sp2", b2.clone(), 0, Su2Class::Sp2Irreducible),
        // singular isotropy candidates
        Embedding::blocks(
            "u2_in_su3",
            a2.clone(),
            false,
            vec![FactorPart::Named("u2")],
        )
        .with_class_size(3),
        Embedding::blocks(
            "su2xt2_in_3su2",
            triple.clone(),
            false,
            vec![FactorPart::Full, FactorPart::MaxTorus, FactorPart::MaxTorus],
        )
        .with_class_size(3),
        Embedding::blocks(
            "a1_u2_in_a1a2",
            a1a2.clone(),
            false,
            vec![FactorPart::Full, FactorPart::Named("u2")],
        ),
        Embedding::blocks(
            "a1_so4_in_a1b2",
            a1b2.clone(),
            false,
            vec![FactorPart::Full, FactorPart::Named("so4")],
        ),
        Embedding::blocks(
            "t1_sp2_in_a1b2",
            a1b2.clone(),
            false,
            vec![FactorPart::MaxTorus, FactorPart::Full],
        ),
        Embedding::blocks("su3_in_t1xsu3", t1a2.clone(), false, vec![FactorPart::Full]),
        Embedding::blocks(
            "u2_in_t1xsu3",
            t1a2.clone(),
            false,
            vec![FactorPart::Named("u2")],
        ),
        {
            let mut parts = vec![FactorPart::Zero];
            parts[0] = FactorPart::Su2(Su2Class::Su3Irreducible);
            Embedding::build(
                "su2_irr_plus_center_in_t1xsu3",
                t1a2.clone(),
                Descriptor {
                    center: true,
                    parts,
                    diag_blocks: vec![],
                    line: None,
                },
                1,
            )
        },
        {
            let mut parts = vec![FactorPart::Zero];
            parts[0] = FactorPart::Su2(Su2Class::Su3Reducible);
            Embedding::build(
                "su2_red_plus_center_in_t1xsu3",
                t1a2.clone(),
                Descriptor {
                    center: true,
                    parts,
                    diag_blocks: vec![],
                    line: None,
                },
                1,
            )
        },
        {
            let blocks = vec![[0usize, 1].into()];
            let mut parts = vec![FactorPart::Zero; 3];
            parts[2] = FactorPart::Full;
            Embedding::build(
                "2su2_in_3su2",
                triple.clone(),
                Descriptor {
                    center: false,
                    parts,
                    diag_blocks: blocks,
                    line: None,
                },
                1,
            )
            .with_class_size(3)
        },
        Embedding::su2_diagonal("su2diag_in_t1x2su2", t12a1.clone(), [0, 1].into()),
    ];
    out.extend(torus_embeddings(&t12a1, 1));
    out
}

pub fn lookup(name: &str) -> Result<Embedding, CatalogError> {
    standard_embeddings()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> CompactAlgebra {
        CompactAlgebra::parse(s).unwrap()
    }

    #[test]
    fn maximal_rank_lists() {
        let g2: Vec<_> = maximal_rank_subalgebras(G2)
            .into_iter()
            .map(|(n, a)| (n, a.render()))
            .collect();
        assert_eq!(
            g2,
            vec![("a2", "a2".to_string()), ("2a1", "a1+a1".to_string())]
        );
        let a2: Vec<_> = maximal_rank_subalgebras(A2)
            .into_iter()
            .map(|(_, a)| a.render())
            .collect();
        assert_eq!(a2, vec!["t1+a1"]);
        assert!(maximal_rank_subalgebras(A3)
            .iter()
            .any(|(_, a)| a.render() == "t1+a2"));
    }

    #[test]
    fn maximal_entries_have_full_rank_and_no_intermediate() {
        for t in SimpleType::ALL {
            let entries = named_subalgebras(t);
            for e in entries {
                assert_eq!(e.algebra().rank(), t.rank(), "{}", e.id);
                assert!(e.algebra().dim() < t.dim());
                // no catalog entry sits strictly between a maximal entry
                // and the host: the containment relation knows only
                // identical named classes and the maximal torus below them
                for other in entries {
                    if other.id != e.id && e.maximal {
                        assert!(
                            !part_contains(&FactorPart::Named(other.id), &FactorPart::Named(e.id)),
                            "{} sits inside {}",
                            e.id,
                            other.id
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn su2_embedding_classes() {
        let classes = su2_embeddings(&alg("a2"));
        assert_eq!(classes.len(), 2);
        let b2 = su2_embeddings(&alg("b2"));
        assert_eq!(b2.len(), 1);
        assert_eq!(b2[0].sub, alg("a1"));
        // three per-factor inclusions, three 2-diagonals, one 3-diagonal
        let triple = su2_embeddings(&alg("3a1"));
        assert_eq!(triple.len(), 7);
    }

    #[test]
    fn torus_families() {
        let fams = torus_embeddings(&alg("t1+2a1"), 1);
        let names: Vec<&str> = fams.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "t1_generic_in_t1_2a1",
                "t1_partial_in_t1_2a1",
                "t1_central_in_t1_2a1"
            ]
        );
        assert_eq!(torus_embeddings(&alg("a2"), 2).len(), 1);
        assert_eq!(torus_embeddings(&alg("a1"), 1).len(), 1);
    }

    #[test]
    fn quotient_isotypics() {
        // t1+2a1 over the diagonal su(2): one trivial line plus the adjoint
        let e = lookup("su2diag_in_t1x2su2").unwrap();
        let q = isotypic_of_quotient(&e).unwrap();
        match q {
            QuotientModule::Su2(m) => assert_eq!(m, Su2Rep::from_pairs(&[(0, 1), (2, 1)])),
            other => panic!("expected su2 module, got {other:?}"),
        }

        // 3a1 over a two-factor diagonal: trivial real multiplicity 3
        let e = lookup("diag2_in_3su2").unwrap();
        let q = isotypic_of_quotient(&e).unwrap();
        assert_eq!(q.trivial_real_mult(), 3);

        // t1+a2 over the reducible su(2): centralizer has real dimension 2
        let e = lookup("su2_red_in_t1xsu3").unwrap();
        assert_eq!(centralizer_dim(&e).unwrap(), 2);
        let e = lookup("su2_irr_in_t1xsu3").unwrap();
        assert_eq!(centralizer_dim(&e).unwrap(), 1);
    }

    #[test]
    fn quotient_dimensions_match() {
        for e in standard_embeddings() {
            if let Ok(q) = isotypic_of_quotient(&e) {
                assert_eq!(
                    q.dim_real(),
                    (e.host.dim() - e.sub.dim()) as u64,
                    "dimension mismatch for {}",
                    e.name
                );
            }
        }
    }

    #[test]
    fn ideal_detection() {
        let g = alg("3a1");
        let factor = Embedding::su2_diagonal("f0", g.clone(), [0].into());
        assert!(contains_ideal(&g, &factor).is_some());
        let diag = Embedding::su2_diagonal("d01", g.clone(), [0, 1].into());
        assert!(contains_ideal(&g, &diag).is_none());
        let h = lookup("2su2_in_3su2").unwrap();
        let sel = contains_ideal(&g, &h).unwrap();
        assert_eq!(g.ideal_algebra(&sel), alg("a1"));
        let central = lookup("t1_central_in_t1_2a1").unwrap();
        assert!(contains_ideal(&alg("t1+2a1"), &central).is_some());
        let generic = lookup("t1_generic_in_t1_2a1").unwrap();
        assert!(contains_ideal(&alg("t1+2a1"), &generic).is_none());
    }

    #[test]
    fn containment_checks() {
        let h = lookup("u2_in_su3").unwrap();
        let k = lookup("t2_in_a2").unwrap();
        // hosts differ only by name string; rebuild k on the same host value
        assert_eq!(h.host, k.host);
        assert!(h.contains(&k));
        assert!(!k.contains(&h));
        let g = lookup("su2xt2_in_3su2").unwrap();
        let t3 = lookup("t3_in_3a1").unwrap();
        assert!(g.contains(&t3));
    }
}

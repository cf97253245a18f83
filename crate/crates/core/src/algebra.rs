//! Compact Lie algebras of rank at most three, stored as a multiset of
//! simple factors plus an abelian center.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Simple types occurring in rank <= 3. Declaration order is the canonical
/// order (ascending dimension, then tag).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimpleType {
    A1,
    A2,
    B2,
    G2,
    A3,
    B3,
    C3,
}

impl SimpleType {
    pub const ALL: [SimpleType; 7] = [
        SimpleType::A1,
        SimpleType::A2,
        SimpleType::B2,
        SimpleType::G2,
        SimpleType::A3,
        SimpleType::B3,
        SimpleType::C3,
    ];

    pub fn rank(self) -> u32 {
        match self {
            SimpleType::A1 => 1,
            SimpleType::A2 | SimpleType::B2 | SimpleType::G2 => 2,
            SimpleType::A3 | SimpleType::B3 | SimpleType::C3 => 3,
        }
    }

    pub fn dim(self) -> u32 {
        match self {
            SimpleType::A1 => 3,
            SimpleType::A2 => 8,
            SimpleType::B2 => 10,
            SimpleType::G2 => 14,
            SimpleType::A3 => 15,
            SimpleType::B3 | SimpleType::C3 => 21,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            SimpleType::A1 => "a1",
            SimpleType::A2 => "a2",
            SimpleType::B2 => "b2",
            SimpleType::G2 => "g2",
            SimpleType::A3 => "a3",
            SimpleType::B3 => "b3",
            SimpleType::C3 => "c3",
        }
    }

    pub fn parse(s: &str) -> Option<SimpleType> {
        SimpleType::ALL.iter().copied().find(|t| t.tag() == s)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported rank {0}: the simple-type catalog covers rank <= 3")]
    UnsupportedRank(u32),
    #[error("cannot parse algebra {0:?}")]
    Parse(String),
}

/// A compact Lie algebra: simple factors (canonically sorted) plus the
/// dimension of the center.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CompactAlgebra {
    simples: Vec<SimpleType>,
    abelian_rank: u32,
}

impl CompactAlgebra {
    pub fn new(mut simples: Vec<SimpleType>, abelian_rank: u32) -> Self {
        simples.sort();
        CompactAlgebra {
            simples,
            abelian_rank,
        }
    }

    pub fn trivial() -> Self {
        CompactAlgebra {
            simples: Vec::new(),
            abelian_rank: 0,
        }
    }

    pub fn simple(t: SimpleType) -> Self {
        CompactAlgebra {
            simples: vec![t],
            abelian_rank: 0,
        }
    }

    pub fn torus(rank: u32) -> Self {
        CompactAlgebra {
            simples: Vec::new(),
            abelian_rank: rank,
        }
    }

    pub fn simples(&self) -> &[SimpleType] {
        &self.simples
    }

    pub fn abelian_rank(&self) -> u32 {
        self.abelian_rank
    }

    pub fn rank(&self) -> u32 {
        self.abelian_rank + self.simples.iter().map(|t| t.rank()).sum::<u32>()
    }

    pub fn dim(&self) -> u32 {
        self.abelian_rank + self.simples.iter().map(|t| t.dim()).sum::<u32>()
    }

    pub fn center_dim(&self) -> u32 {
        self.abelian_rank
    }

    /// Dimension of the semisimple part (sum of the simple factor dims).
    pub fn semisimple_dim(&self) -> u32 {
        self.simples.iter().map(|t| t.dim()).sum()
    }

    pub fn is_semisimple(&self) -> bool {
        self.abelian_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.simples.is_empty() && self.abelian_rank == 0
    }

    /// Direct sum of two algebras.
    pub fn sum(&self, other: &CompactAlgebra) -> CompactAlgebra {
        let mut simples = self.simples.clone();
        simples.extend_from_slice(&other.simples);
        CompactAlgebra::new(simples, self.abelian_rank + other.abelian_rank)
    }

    /// Removes `other`'s factors and abelian rank; `other` must be a
    /// sub-multiset.
    pub fn subtract(&self, other: &CompactAlgebra) -> Option<CompactAlgebra> {
        if other.abelian_rank > self.abelian_rank {
            return None;
        }
        let mut rest = self.simples.clone();
        for t in &other.simples {
            let pos = rest.iter().position(|x| x == t)?;
            rest.remove(pos);
        }
        Some(CompactAlgebra::new(
            rest,
            self.abelian_rank - other.abelian_rank,
        ))
    }

    /// Canonical rendering, e.g. `t1+a1+a1`. The trivial algebra is `0`.
    pub fn render(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        if self.abelian_rank > 0 {
            parts.push(format!("t{}", self.abelian_rank));
        }
        for t in &self.simples {
            parts.push(t.tag().to_string());
        }
        parts.join("+")
    }

    /// Compact rendering coalescing repeated factors, e.g. `t1+2a1`.
    pub fn render_compact(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        if self.abelian_rank > 0 {
            parts.push(format!("t{}", self.abelian_rank));
        }
        let mut i = 0;
        while i < self.simples.len() {
            let t = self.simples[i];
            let run = self.simples[i..].iter().take_while(|x| **x == t).count();
            if run > 1 {
                parts.push(format!("{}{}", run, t.tag()));
            } else {
                parts.push(t.tag().to_string());
            }
            i += run;
        }
        parts.join("+")
    }

    /// Parses both the canonical and the compact renderings.
    pub fn parse(s: &str) -> Result<CompactAlgebra, AlgebraError> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(CompactAlgebra::trivial());
        }
        let mut simples = Vec::new();
        let mut abelian = 0u32;
        for raw in s.split('+') {
            let part = raw.trim();
            if let Some(rank) = part.strip_prefix('t') {
                let r: u32 = rank.parse().map_err(|_| AlgebraError::Parse(s.into()))?;
                abelian += r;
                continue;
            }
            // optional multiplicity prefix, e.g. "2a1"
            let digits = part.chars().take_while(|c| c.is_ascii_digit()).count();
            let (mult, tag) =
                if digits > 0 && part[digits..].starts_with(|c: char| c.is_ascii_alphabetic()) {
                    (
                        part[..digits]
                            .parse::<u32>()
                            .map_err(|_| AlgebraError::Parse(s.into()))?,
                        &part[digits..],
                    )
                } else {
                    (1, part)
                };
            let t = SimpleType::parse(tag).ok_or_else(|| AlgebraError::Parse(s.into()))?;
            for _ in 0..mult {
                simples.push(t);
            }
        }
        Ok(CompactAlgebra::new(simples, abelian))
    }

    /// Dimension of the ideal selected by `sel`.
    pub fn ideal_dim(&self, sel: &IdealSelector) -> u32 {
        sel.abelian_rank
            + sel
                .factor_indices
                .iter()
                .map(|&i| self.simples[i].dim())
                .sum::<u32>()
    }

    /// The algebra carried by an ideal selector.
    pub fn ideal_algebra(&self, sel: &IdealSelector) -> CompactAlgebra {
        let simples = sel
            .factor_indices
            .iter()
            .map(|&i| self.simples[i])
            .collect();
        CompactAlgebra::new(simples, sel.abelian_rank)
    }
}

impl fmt::Display for CompactAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An ideal of a compact algebra: a subset of the simple factors plus an
/// abelian subspace, tracked by rank only.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealSelector {
    pub factor_indices: BTreeSet<usize>,
    pub abelian_rank: u32,
}

impl IdealSelector {
    pub fn factors<I: IntoIterator<Item = usize>>(idx: I) -> Self {
        IdealSelector {
            factor_indices: idx.into_iter().collect(),
            abelian_rank: 0,
        }
    }

    pub fn abelian(rank: u32) -> Self {
        IdealSelector {
            factor_indices: BTreeSet::new(),
            abelian_rank: rank,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.factor_indices.is_empty() && self.abelian_rank == 0
    }
}

/// (rank, dim, center dim) of an algebra.
pub fn algebra_invariants(a: &CompactAlgebra) -> (u32, u32, u32) {
    (a.rank(), a.dim(), a.center_dim())
}

/// Every compact algebra with exactly the given rank and dimension, in
/// canonical order. Exhaustive for rank <= 3.
pub fn enumerate_algebras(rank: u32, dim: u32) -> Result<Vec<CompactAlgebra>, AlgebraError> {
    if rank > 3 {
        return Err(AlgebraError::UnsupportedRank(rank));
    }
    let mut out = Vec::new();
    let mut stack: Vec<SimpleType> = Vec::new();
    enumerate_rec(rank, dim, 0, &mut stack, &mut out);
    out.sort();
    out.windows(2)
        .for_each(|w| debug_assert!(w[0] != w[1], "duplicate algebra in enumeration"));
    Ok(out)
}

fn enumerate_rec(
    rank: u32,
    dim: u32,
    min_type: usize,
    stack: &mut Vec<SimpleType>,
    out: &mut Vec<CompactAlgebra>,
) {
    let used_rank: u32 = stack.iter().map(|t| t.rank()).sum();
    let used_dim: u32 = stack.iter().map(|t| t.dim()).sum();
    if used_rank <= rank && used_dim <= dim {
        let abelian = rank - used_rank;
        if used_dim + abelian == dim {
            out.push(CompactAlgebra::new(stack.clone(), abelian));
        }
    }
    for (i, &t) in SimpleType::ALL.iter().enumerate().skip(min_type) {
        if used_rank + t.rank() <= rank && used_dim + t.dim() <= dim {
            stack.push(t);
            enumerate_rec(rank, dim, i, stack, out);
            stack.pop();
        }
    }
}

/// All proper nonzero ideals of `a`, as factor subsets plus abelian
/// sub-ranks, ordered by ascending dimension.
pub fn proper_ideals(a: &CompactAlgebra) -> Vec<IdealSelector> {
    let n = a.simples().len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        for ab in 0..=a.abelian_rank() {
            let sel = IdealSelector {
                factor_indices: (0..n).filter(|i| mask & (1 << i) != 0).collect(),
                abelian_rank: ab,
            };
            let whole = sel.factor_indices.len() == n && ab == a.abelian_rank();
            if !sel.is_zero() && !whole {
                out.push(sel);
            }
        }
    }
    out.sort_by_key(|sel| {
        (
            a.ideal_dim(sel),
            sel.abelian_rank,
            sel.factor_indices.clone(),
        )
    });
    out
}

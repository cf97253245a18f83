#![allow(dead_code)]

//! Independent oracles for the integration suites: brute-force weight
//! multiset arithmetic for su(2) modules, and a free generator of compact
//! algebras. Nothing here calls the implementation paths under test.

use cohomog7::algebra::{CompactAlgebra, SimpleType};
use cohomog7::rep::Su2Rep;
use std::collections::BTreeMap;

/// Weight multiset of a module, counted with multiplicity.
pub fn weight_multiset(r: &Su2Rep) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for (n, m) in r.iter() {
        let n = n as i64;
        let mut w = -n;
        while w <= n {
            *out.entry(w).or_insert(0) += m as u64;
            w += 2;
        }
    }
    out
}

/// Highest-weight peeling: reconstructs the isotypic decomposition from a
/// weight multiset.
pub fn peel(mut weights: BTreeMap<i64, u64>) -> Su2Rep {
    let mut out = Su2Rep::zero();
    while let Some((w, m)) = weights
        .iter()
        .rev()
        .find(|(_, &m)| m > 0)
        .map(|(&w, &m)| (w, m))
    {
        assert!(w >= 0, "weight multiset is not symmetric");
        out.add_mult(w as u32, m as u32);
        let mut x = -w;
        while x <= w {
            let entry = weights
                .get_mut(&x)
                .expect("peeling stays inside the multiset");
            assert!(*entry >= m, "peeling went negative at weight {x}");
            *entry -= m;
            x += 2;
        }
    }
    out
}

pub fn oracle_tensor(a: &Su2Rep, b: &Su2Rep) -> Su2Rep {
    let wa = weight_multiset(a);
    let wb = weight_multiset(b);
    let mut out = BTreeMap::new();
    for (&x, &mx) in &wa {
        for (&y, &my) in &wb {
            *out.entry(x + y).or_insert(0) += mx * my;
        }
    }
    peel(out)
}

fn flat_weights(r: &Su2Rep) -> Vec<i64> {
    let mut out = Vec::new();
    for (w, m) in weight_multiset(r) {
        for _ in 0..m {
            out.push(w);
        }
    }
    out
}

pub fn oracle_sym2(r: &Su2Rep) -> Su2Rep {
    let ws = flat_weights(r);
    let mut out = BTreeMap::new();
    for i in 0..ws.len() {
        for j in i..ws.len() {
            *out.entry(ws[i] + ws[j]).or_insert(0) += 1;
        }
    }
    peel(out)
}

pub fn oracle_alt2(r: &Su2Rep) -> Su2Rep {
    let ws = flat_weights(r);
    let mut out = BTreeMap::new();
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            *out.entry(ws[i] + ws[j]).or_insert(0) += 1;
        }
    }
    peel(out)
}

/// Adjoint branching oracle for su(n+1): weights of V (x) V* minus one
/// zero, reconstructed by peeling.
pub fn oracle_unitary_adjoint(defining: &Su2Rep) -> Su2Rep {
    let ws = flat_weights(defining);
    let mut out: BTreeMap<i64, u64> = BTreeMap::new();
    for &x in &ws {
        for &y in &ws {
            *out.entry(x - y).or_insert(0) += 1;
        }
    }
    let zero = out.get_mut(&0).expect("V (x) V* contains zero weights");
    *zero -= 1;
    peel(out)
}

/// Free generator: every multiset of simple factors plus abelian rank with
/// rank <= max_rank and dim <= max_dim.
pub fn brute_force_algebras(max_rank: u32, max_dim: u32) -> Vec<CompactAlgebra> {
    let mut out = Vec::new();
    let mut stack: Vec<SimpleType> = Vec::new();
    fn rec(
        max_rank: u32,
        max_dim: u32,
        min_type: usize,
        stack: &mut Vec<SimpleType>,
        out: &mut Vec<CompactAlgebra>,
    ) {
        let used_rank: u32 = stack.iter().map(|t| t.rank()).sum();
        let used_dim: u32 = stack.iter().map(|t| t.dim()).sum();
        for abelian in 0..=(max_rank - used_rank) {
            if used_dim + abelian <= max_dim {
                out.push(CompactAlgebra::new(stack.clone(), abelian));
            }
        }
        for (i, &t) in SimpleType::ALL.iter().enumerate().skip(min_type) {
            if used_rank + t.rank() <= max_rank && used_dim + t.dim() <= max_dim {
                stack.push(t);
                rec(max_rank, max_dim, i, stack, out);
                stack.pop();
            }
        }
    }
    rec(max_rank, max_dim, 0, &mut stack, &mut out);
    out.sort();
    out
}

//! Real torus modules: trivial lines plus two-dimensional weight-pair
//! modules, with exact integer weight vectors.
//!
//! A real module of a torus splits as `triv^a + sum of R_w`, where `R_w` is
//! the real 2-plane on which the torus rotates with weight `w`; `R_w` and
//! `R_{-w}` are equivalent, so weights are kept in a canonical sign (first
//! nonzero component positive).

use crate::algebra::{CompactAlgebra, SimpleType};
use crate::rep::RepError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// An integer weight of a torus, canonicalized up to sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    /// Canonicalizes so the first nonzero component is positive.
    pub fn new(v: Vec<i64>) -> Self {
        let mut v = v;
        if let Some(first) = v.iter().find(|&&c| c != 0) {
            if *first < 0 {
                for c in &mut v {
                    *c = -*c;
                }
            }
        }
        WeightVector(v)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn raw_add(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + sign * y).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// A real torus module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusRep {
    pub zero_mult: u32,
    #[serde(with = "pair_entries")]
    pairs: BTreeMap<WeightVector, u32>,
}

mod pair_entries {
    //! JSON-friendly encoding of the weight-pair map as an entry list.
    use super::WeightVector;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<WeightVector, u32>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        let entries: Vec<(&WeightVector, u32)> = map.iter().map(|(w, &m)| (w, m)).collect();
        entries.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<WeightVector, u32>, D::Error> {
        let entries: Vec<(WeightVector, u32)> = Vec::deserialize(de)?;
        Ok(entries.into_iter().collect())
    }
}

impl TorusRep {
    pub fn trivial(mult: u32) -> Self {
        TorusRep {
            zero_mult: mult,
            pairs: BTreeMap::new(),
        }
    }

    pub fn pair(w: WeightVector) -> Self {
        let mut r = TorusRep::default();
        r.add_pair(w, 1);
        r
    }

    /// Adds `m` copies of R_w; a zero weight degenerates to two trivial
    /// lines per copy.
    pub fn add_pair(&mut self, w: WeightVector, m: u32) {
        if m == 0 {
            return;
        }
        if w.is_zero() {
            self.zero_mult += 2 * m;
        } else {
            *self.pairs.entry(w).or_insert(0) += m;
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&WeightVector, u32)> + '_ {
        self.pairs.iter().map(|(w, &m)| (w, m))
    }

    pub fn pair_mult(&self, w: &WeightVector) -> u32 {
        self.pairs.get(w).copied().unwrap_or(0)
    }

    pub fn dim_real(&self) -> u64 {
        self.zero_mult as u64 + 2 * self.pairs.values().map(|&m| m as u64).sum::<u64>()
    }

    pub fn invariant_multiplicity(&self) -> u32 {
        self.zero_mult
    }

    pub fn add(&self, other: &TorusRep) -> TorusRep {
        let mut r = self.clone();
        r.zero_mult += other.zero_mult;
        for (w, m) in other.pairs() {
            r.add_pair(w.clone(), m);
        }
        r
    }

    /// Duality negates weights, which is invisible in canonical sign.
    pub fn dual(&self) -> TorusRep {
        self.clone()
    }

    /// Real tensor product.
    pub fn tensor(&self, other: &TorusRep) -> TorusRep {
        let mut out = TorusRep::trivial(self.zero_mult * other.zero_mult);
        for (w, m) in self.pairs() {
            out.add_pair(w.clone(), m * other.zero_mult);
        }
        for (w, m) in other.pairs() {
            out.add_pair(w.clone(), m * self.zero_mult);
        }
        for (w, m) in self.pairs() {
            for (v, k) in other.pairs() {
                // R_w (x) R_v = R_{w+v} + R_{w-v}
                out.add_pair(
                    WeightVector::new(WeightVector::raw_add(w.components(), v.components(), 1)),
                    m * k,
                );
                out.add_pair(
                    WeightVector::new(WeightVector::raw_add(w.components(), v.components(), -1)),
                    m * k,
                );
            }
        }
        out
    }

    pub fn sym2(&self) -> TorusRep {
        self.square(true)
    }

    pub fn alt2(&self) -> TorusRep {
        self.square(false)
    }

    fn square(&self, symmetric: bool) -> TorusRep {
        // flatten to a list of irreducible summands and expand pairwise
        let mut out = TorusRep::default();
        let z = self.zero_mult;
        out.zero_mult += if symmetric {
            z * (z + 1) / 2
        } else {
            z * z.saturating_sub(1) / 2
        };
        let terms: Vec<(WeightVector, u32)> = self.pairs().map(|(w, m)| (w.clone(), m)).collect();
        for (i, (w, m)) in terms.iter().enumerate() {
            // diagonal: S^2(R_w) = R_{2w} + triv, Alt^2(R_w) = triv
            if symmetric {
                out.add_pair(
                    WeightVector::new(w.components().iter().map(|c| 2 * c).collect()),
                    *m,
                );
                out.zero_mult += m;
            } else {
                out.zero_mult += m;
            }
            let dup = m * m.saturating_sub(1) / 2;
            if dup > 0 {
                let t = TorusRep::pair(w.clone()).tensor(&TorusRep::pair(w.clone()));
                out = out.add(&scale(&t, dup));
            }
            out = out.add(&scale(&TorusRep::pair(w.clone()), m * z));
            for (v, k) in &terms[i + 1..] {
                let t = TorusRep::pair(w.clone()).tensor(&TorusRep::pair(v.clone()));
                out = out.add(&scale(&t, m * k));
            }
        }
        out
    }

    /// Builds the real module underlying a complex weight multiset, which
    /// must be symmetric under negation.
    pub fn from_complex_weights(weights: &[Vec<i64>]) -> Option<TorusRep> {
        let mut counts: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        let mut zeros = 0u32;
        for w in weights {
            if w.iter().all(|&c| c == 0) {
                zeros += 1;
            } else {
                *counts.entry(w.clone()).or_insert(0) += 1;
            }
        }
        let mut rep = TorusRep::trivial(zeros);
        let keys: Vec<Vec<i64>> = counts.keys().cloned().collect();
        for w in keys {
            let m = counts[&w];
            if m == 0 {
                continue;
            }
            let neg: Vec<i64> = w.iter().map(|c| -c).collect();
            if counts.get(&neg).copied().unwrap_or(0) != m {
                return None;
            }
            counts.insert(neg, 0);
            counts.insert(w.clone(), 0);
            rep.add_pair(WeightVector::new(w), m as u32);
        }
        Some(rep)
    }

    /// Rendering like `triv^2+(1,-1)+(1,2)^2`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.zero_mult {
            0 => {}
            1 => parts.push("triv".to_string()),
            m => parts.push(format!("triv^{m}")),
        }
        for (w, m) in self.pairs() {
            if m == 1 {
                parts.push(w.to_string());
            } else {
                parts.push(format!("{w}^{m}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn scale(r: &TorusRep, c: u32) -> TorusRep {
    let mut out = TorusRep::trivial(r.zero_mult * c);
    for (w, m) in r.pairs() {
        out.add_pair(w.clone(), m * c);
    }
    out
}

impl fmt::Display for TorusRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Positive roots of each simple type, as integer vectors on the standard
/// maximal torus coordinates (root-lattice basis for g2).
pub fn positive_roots(t: SimpleType) -> Vec<Vec<i64>> {
    match t {
        SimpleType::A1 => vec![vec![2]],
        SimpleType::A2 => vec![vec![1, -1], vec![1, 2], vec![2, 1]],
        SimpleType::B2 => vec![vec![1, -1], vec![1, 1], vec![1, 0], vec![0, 1]],
        SimpleType::G2 => vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ],
        SimpleType::A3 => vec![
            vec![1, -1, 0],
            vec![0, 1, -1],
            vec![1, 0, -1],
            vec![2, 1, 1],
            vec![1, 2, 1],
            vec![1, 1, 2],
        ],
        SimpleType::B3 => vec![
            vec![1, -1, 0],
            vec![1, 1, 0],
            vec![1, 0, -1],
            vec![1, 0, 1],
            vec![0, 1, -1],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ],
        SimpleType::C3 => vec![
            vec![1, -1, 0],
            vec![1, 1, 0],
            vec![1, 0, -1],
            vec![1, 0, 1],
            vec![0, 1, -1],
            vec![0, 1, 1],
            vec![2, 0, 0],
            vec![0, 2, 0],
            vec![0, 0, 2],
        ],
    }
}

/// Adjoint module of a simple host restricted to a torus given by the
/// complex weights of the defining module.
pub fn branch_adjoint_torus(host: SimpleType, defining: &[Vec<i64>]) -> Result<TorusRep, RepError> {
    let n = defining.len() as u64;
    let weights: Vec<Vec<i64>> = match host {
        SimpleType::A1 | SimpleType::A2 | SimpleType::A3 => {
            let expected = host.rank() as u64 + 1;
            if n != expected {
                return Err(RepError::DimensionMismatch {
                    expected: expected.to_string(),
                    got: n,
                });
            }
            // V (x) V* minus one trivial summand
            let mut w = Vec::new();
            for (i, a) in defining.iter().enumerate() {
                for (j, b) in defining.iter().enumerate() {
                    if i != j {
                        w.push(WeightVector::raw_add(a, b, -1));
                    }
                }
            }
            let rank = defining.first().map(|v| v.len()).unwrap_or(0);
            for _ in 1..defining.len() {
                w.push(vec![0; rank]);
            }
            w
        }
        SimpleType::B2 | SimpleType::B3 => {
            let expected = 2 * host.rank() as u64 + 1;
            if n != expected {
                return Err(RepError::DimensionMismatch {
                    expected: expected.to_string(),
                    got: n,
                });
            }
            pairwise(defining, false)
        }
        SimpleType::C3 => {
            if n != 6 {
                return Err(RepError::DimensionMismatch {
                    expected: "6".into(),
                    got: n,
                });
            }
            pairwise(defining, true)
        }
        SimpleType::G2 => return Err(RepError::G2Unsupported),
    };
    let rep = TorusRep::from_complex_weights(&weights)
        .expect("adjoint weights of a compact algebra are symmetric under negation");
    debug_assert_eq!(rep.dim_real(), host.dim() as u64);
    Ok(rep)
}

fn pairwise(defining: &[Vec<i64>], with_diagonal: bool) -> Vec<Vec<i64>> {
    let mut w = Vec::new();
    for (i, a) in defining.iter().enumerate() {
        let start = if with_diagonal { i } else { i + 1 };
        for b in defining.iter().skip(start) {
            w.push(WeightVector::raw_add(a, b, 1));
        }
    }
    w
}

/// The three root planes of su(3) as modules of its maximal torus: three
/// two-dimensional, irreducible, pairwise inequivalent summands.
pub fn su3_root_decomposition() -> Vec<WeightVector> {
    let defining = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
    let rep = branch_adjoint_torus(SimpleType::A2, &defining)
        .expect("su(3) defining weights are well-formed");
    rep.pairs().map(|(w, _)| w.clone()).collect()
}

/// Adjoint of a compact algebra restricted to its full maximal torus,
/// minus the torus itself: the root planes.
pub fn maximal_torus_root_module(g: &CompactAlgebra) -> TorusRep {
    let rank = g.rank() as usize;
    let mut offset = g.abelian_rank() as usize;
    let mut rep = TorusRep::default();
    for &t in g.simples() {
        for root in positive_roots(t) {
            let mut w = vec![0i64; rank];
            w[offset..offset + root.len()].copy_from_slice(&root);
            rep.add_pair(WeightVector::new(w), 1);
        }
        offset += t.rank() as usize;
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec())
    }

    #[test]
    fn canonical_sign() {
        assert_eq!(wv(&[-1, 2]), wv(&[1, -2]));
        assert_eq!(wv(&[0, -3]).components(), &[0, 3]);
    }

    #[test]
    fn root_counts_match_dimensions() {
        for t in SimpleType::ALL {
            let roots = positive_roots(t);
            assert_eq!(2 * roots.len() as u32 + t.rank(), t.dim(), "{t}");
        }
    }

    #[test]
    fn su3_roots() {
        let roots = su3_root_decomposition();
        assert_eq!(roots, vec![wv(&[1, -1]), wv(&[1, 2]), wv(&[2, 1])]);
        // pairwise inequivalent, jointly six real dimensions
        for (i, a) in roots.iter().enumerate() {
            for b in roots.iter().skip(i + 1) {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn torus_tensor_and_squares() {
        let w = TorusRep::pair(wv(&[1, 0]));
        let v = TorusRep::pair(wv(&[0, 1]));
        let t = w.tensor(&v);
        assert_eq!(t.dim_real(), 4);
        assert_eq!(t.pair_mult(&wv(&[1, 1])), 1);
        assert_eq!(t.pair_mult(&wv(&[1, -1])), 1);

        let self_t = w.tensor(&w);
        assert_eq!(self_t.zero_mult, 2);
        assert_eq!(self_t.pair_mult(&wv(&[2, 0])), 1);

        let s = w.sym2();
        assert_eq!(s.zero_mult, 1);
        assert_eq!(s.pair_mult(&wv(&[2, 0])), 1);
        assert_eq!(w.alt2(), TorusRep::trivial(1));
    }

    #[test]
    fn torus_branching_dimension() {
        let rep =
            branch_adjoint_torus(SimpleType::A2, &[vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert_eq!(rep.dim_real(), 8);
        assert_eq!(rep.zero_mult, 2);
    }

    #[test]
    fn root_module_of_products() {
        let g = CompactAlgebra::parse("3a1").unwrap();
        let rep = maximal_torus_root_module(&g);
        assert_eq!(rep.dim_real(), 6);
        assert_eq!(rep.pair_mult(&wv(&[2, 0, 0])), 1);
        assert_eq!(rep.pair_mult(&wv(&[0, 2, 0])), 1);
        assert_eq!(rep.pair_mult(&wv(&[0, 0, 2])), 1);
    }

    #[test]
    fn rendering() {
        let mut r = TorusRep::trivial(2);
        r.add_pair(wv(&[1, -1]), 1);
        r.add_pair(wv(&[1, 2]), 2);
        assert_eq!(r.render(), "triv^2+(1,-1)+(1,2)^2");
    }

    #[test]
    fn json_round_trip() {
        let mut r = TorusRep::trivial(2);
        r.add_pair(wv(&[1, -1]), 1);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"zero_mult":2,"pairs":[[[1,-1],1]]}"#);
        let back: TorusRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}

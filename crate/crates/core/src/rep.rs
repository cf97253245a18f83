//! Exact su(2) representation calculus: Clebsch-Gordan products, symmetric
//! and alternating squares, invariant multiplicities, Frobenius-Schur types
//! and adjoint branching through the defining representation.
//!
//! Irreducibles are labeled by highest weight `n` (complex dimension n+1);
//! all bookkeeping here is complex.

use crate::algebra::SimpleType;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A finite-dimensional su(2) module as a multiset of irreducibles.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Su2Rep {
    mults: BTreeMap<u32, u32>,
}

impl Su2Rep {
    pub fn zero() -> Self {
        Su2Rep::default()
    }

    /// The irreducible V_n.
    pub fn irreducible(n: u32) -> Self {
        Su2Rep::from_pairs(&[(n, 1)])
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut r = Su2Rep::default();
        for &(n, m) in pairs {
            r.add_mult(n, m);
        }
        r
    }

    pub fn add_mult(&mut self, n: u32, m: u32) {
        if m > 0 {
            *self.mults.entry(n).or_insert(0) += m;
        }
    }

    pub fn mult(&self, n: u32) -> u32 {
        self.mults.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mults.iter().map(|(&n, &m)| (n, m))
    }

    pub fn dim(&self) -> u64 {
        self.iter().map(|(n, m)| (n as u64 + 1) * m as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Some(n) when the module is a single copy of V_n.
    pub fn as_single_irreducible(&self) -> Option<u32> {
        if self.mults.len() == 1 {
            let (&n, &m) = self.mults.iter().next().unwrap();
            if m == 1 {
                return Some(n);
            }
        }
        None
    }

    pub fn add(&self, other: &Su2Rep) -> Su2Rep {
        let mut r = self.clone();
        for (n, m) in other.iter() {
            r.add_mult(n, m);
        }
        r
    }

    pub fn scale(&self, c: u32) -> Su2Rep {
        let mut r = Su2Rep::default();
        for (n, m) in self.iter() {
            r.add_mult(n, m * c);
        }
        r
    }

    /// Removes one copy of V_n; None if absent.
    pub fn remove_one(&self, n: u32) -> Option<Su2Rep> {
        let mut r = self.clone();
        match r.mults.get_mut(&n) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                r.mults.remove(&n);
            }
            None => return None,
        }
        Some(r)
    }

    /// su(2) modules are self-dual.
    pub fn dual(&self) -> Su2Rep {
        self.clone()
    }

    /// Multiplicity of the trivial module.
    pub fn invariant_multiplicity(&self) -> u32 {
        self.mult(0)
    }

    /// Rendering in descending weight order, e.g. `V4+V2+2V0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&n, &m) in self.mults.iter().rev() {
            if m == 1 {
                parts.push(format!("V{n}"));
            } else {
                parts.push(format!("{m}V{n}"));
            }
        }
        parts.join("+")
    }
}

impl fmt::Display for Su2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Clebsch-Gordan product V_m x V_n = V_{m+n} + V_{m+n-2} + ... + V_{|m-n|},
/// extended bilinearly.
pub fn tensor(x: &Su2Rep, y: &Su2Rep) -> Su2Rep {
    let mut out = Su2Rep::default();
    for (m, mu) in x.iter() {
        for (n, nu) in y.iter() {
            let lo = m.max(n) - m.min(n);
            let mut label = m + n;
            loop {
                out.add_mult(label, mu * nu);
                if label < lo + 2 {
                    break;
                }
                label -= 2;
            }
        }
    }
    out
}

fn sym2_irr(n: u32) -> Su2Rep {
    // S^2(V_n) = V_{2n} + V_{2n-4} + ...
    let mut r = Su2Rep::default();
    let mut label = 2 * n;
    loop {
        r.add_mult(label, 1);
        if label < 4 {
            break;
        }
        label -= 4;
    }
    r
}

fn alt2_irr(n: u32) -> Su2Rep {
    // Alt^2(V_n) = V_{2n-2} + V_{2n-6} + ...
    let mut r = Su2Rep::default();
    if n == 0 {
        return r;
    }
    let mut label = 2 * n - 2;
    loop {
        r.add_mult(label, 1);
        if label < 4 {
            break;
        }
        label -= 4;
    }
    r
}

fn square_decomposition(x: &Su2Rep, diag: fn(u32) -> Su2Rep) -> Su2Rep {
    // S^2/Alt^2 of a sum: diagonal terms plus one full tensor per unordered
    // pair of distinct summands (counting multiplicity).
    let mut out = Su2Rep::default();
    let terms: Vec<(u32, u32)> = x.iter().collect();
    for (i, &(n, m)) in terms.iter().enumerate() {
        out = out.add(&diag(n).scale(m));
        let pairs = m * m.saturating_sub(1) / 2;
        if pairs > 0 {
            out = out.add(&tensor(&Su2Rep::irreducible(n), &Su2Rep::irreducible(n)).scale(pairs));
        }
        for &(n2, m2) in &terms[i + 1..] {
            out = out.add(&tensor(&Su2Rep::irreducible(n), &Su2Rep::irreducible(n2)).scale(m * m2));
        }
    }
    out
}

/// Symmetric square.
pub fn sym2(x: &Su2Rep) -> Su2Rep {
    square_decomposition(x, sym2_irr)
}

/// Alternating square.
pub fn alt2(x: &Su2Rep) -> Su2Rep {
    square_decomposition(x, alt2_irr)
}

/// Frobenius-Schur type of an irreducible su(2) module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrobeniusSchur {
    Orthogonal,
    Symplectic,
}

impl fmt::Display for FrobeniusSchur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusSchur::Orthogonal => f.write_str("orthogonal (real)"),
            FrobeniusSchur::Symplectic => f.write_str("symplectic (quaternionic)"),
        }
    }
}

/// V_n is real for even n and quaternionic for odd n.
pub fn frobenius_schur(n: u32) -> FrobeniusSchur {
    if n.is_multiple_of(2) {
        FrobeniusSchur::Orthogonal
    } else {
        FrobeniusSchur::Symplectic
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("defining restriction has dimension {got}, host expects {expected}")]
    DimensionMismatch { expected: String, got: u64 },
    #[error("g2 branching is catalog data, not computed from a defining module")]
    G2Unsupported,
}

/// Adjoint module of a simple host restricted to an su(2) subalgebra given
/// by the restriction of the defining module.
///
/// Routes: a_n uses V (x) V* minus a trivial summand, b_n the alternating
/// square, c_n the symmetric square. For b2 both realizations are accepted:
/// a 5-dimensional restriction is treated as so(5), a 4-dimensional one as
/// sp(2).
pub fn branch_adjoint(host: SimpleType, defining: &Su2Rep) -> Result<Su2Rep, RepError> {
    let dim = defining.dim();
    let route = match host {
        SimpleType::A1 | SimpleType::A2 | SimpleType::A3 => {
            let expected = host.rank() as u64 + 1;
            if dim != expected {
                return Err(RepError::DimensionMismatch {
                    expected: expected.to_string(),
                    got: dim,
                });
            }
            Route::AdjointOfUnitary
        }
        SimpleType::B2 => match dim {
            5 => Route::Alt2,
            4 => Route::Sym2,
            _ => {
                return Err(RepError::DimensionMismatch {
                    expected: "5 (so(5)) or 4 (sp(2))".into(),
                    got: dim,
                })
            }
        },
        SimpleType::B3 => {
            if dim != 7 {
                return Err(RepError::DimensionMismatch {
                    expected: "7".into(),
                    got: dim,
                });
            }
            Route::Alt2
        }
        SimpleType::C3 => {
            if dim != 6 {
                return Err(RepError::DimensionMismatch {
                    expected: "6".into(),
                    got: dim,
                });
            }
            Route::Sym2
        }
        SimpleType::G2 => return Err(RepError::G2Unsupported),
    };
    let out = match route {
        Route::AdjointOfUnitary => tensor(defining, &defining.dual())
            .remove_one(0)
            .expect("V (x) V* always contains a trivial summand"),
        Route::Alt2 => alt2(defining),
        Route::Sym2 => sym2(defining),
    };
    debug_assert_eq!(out.dim(), host.dim() as u64);
    Ok(out)
}

enum Route {
    AdjointOfUnitary,
    Alt2,
    Sym2,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: u32) -> Su2Rep {
        Su2Rep::irreducible(n)
    }

    #[test]
    fn tensor_reference_values() {
        assert_eq!(tensor(&v(5), &v(0)), v(5));
        assert_eq!(
            tensor(&v(2), &v(2)),
            Su2Rep::from_pairs(&[(4, 1), (2, 1), (0, 1)])
        );
        assert_eq!(
            tensor(&v(3), &v(3)),
            Su2Rep::from_pairs(&[(6, 1), (4, 1), (2, 1), (0, 1)])
        );
    }

    #[test]
    fn squares_reference_values() {
        assert_eq!(sym2(&v(1)), v(2));
        assert_eq!(alt2(&v(2)), v(2));
        assert_eq!(
            sym2(&Su2Rep::from_pairs(&[(0, 1), (2, 1)])),
            Su2Rep::from_pairs(&[(0, 2), (2, 1), (4, 1)])
        );
        // repeated summands: S^2(V1 + V1) = 3 S^2(V1)-type terms
        let s = sym2(&Su2Rep::from_pairs(&[(1, 2)]));
        assert_eq!(s.dim(), 10);
        assert_eq!(s, Su2Rep::from_pairs(&[(2, 3), (0, 1)]));
    }

    #[test]
    fn invariants_of_products() {
        assert_eq!(tensor(&v(2), &v(2)).invariant_multiplicity(), 1);
        assert_eq!(tensor(&v(4), &v(2)).invariant_multiplicity(), 0);
        // the fixed-vector space showing up in the rank-three circle case
        let space = tensor(&sym2(&Su2Rep::from_pairs(&[(0, 1), (2, 1)])), &v(2));
        assert_eq!(space.invariant_multiplicity(), 1);
    }

    #[test]
    fn frobenius_schur_types() {
        assert_eq!(frobenius_schur(3), FrobeniusSchur::Symplectic);
        assert_eq!(frobenius_schur(0), FrobeniusSchur::Orthogonal);
        assert_eq!(frobenius_schur(2), FrobeniusSchur::Orthogonal);
    }

    #[test]
    fn branching_reference_values() {
        let reducible = Su2Rep::from_pairs(&[(1, 1), (0, 1)]);
        assert_eq!(
            branch_adjoint(SimpleType::A2, &reducible).unwrap(),
            Su2Rep::from_pairs(&[(2, 1), (1, 2), (0, 1)])
        );
        assert_eq!(
            branch_adjoint(SimpleType::A2, &v(2)).unwrap(),
            Su2Rep::from_pairs(&[(4, 1), (2, 1)])
        );
        assert_eq!(
            branch_adjoint(SimpleType::B2, &v(3)).unwrap(),
            Su2Rep::from_pairs(&[(6, 1), (2, 1)])
        );
        // so(5) route with the principal 5-dimensional module agrees with
        // the sp(2) route in total dimension
        assert_eq!(
            branch_adjoint(SimpleType::B2, &v(4)).unwrap(),
            Su2Rep::from_pairs(&[(6, 1), (2, 1)])
        );
    }

    #[test]
    fn branching_errors() {
        assert_eq!(
            branch_adjoint(SimpleType::A2, &v(3)),
            Err(RepError::DimensionMismatch {
                expected: "3".into(),
                got: 4
            })
        );
        assert_eq!(
            branch_adjoint(SimpleType::G2, &v(6)),
            Err(RepError::G2Unsupported)
        );
    }

    #[test]
    fn rendering() {
        let r = Su2Rep::from_pairs(&[(2, 1), (1, 2), (0, 1)]);
        assert_eq!(r.render(), "V2+2V1+V0");
        assert_eq!(Su2Rep::zero().render(), "0");
    }
}

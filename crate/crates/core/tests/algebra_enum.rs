//! Exhaustiveness and parity of the compact-algebra enumeration, checked
//! against a free factor-multiset generator.

mod common;

use cohomog7::algebra::{enumerate_algebras, CompactAlgebra};
use common::brute_force_algebras;

#[test]
fn enumeration_agrees_with_free_generation() {
    let all = brute_force_algebras(3, 21);
    for rank in 0..=3u32 {
        for dim in 0..=21u32 {
            let expected: Vec<CompactAlgebra> = all
                .iter()
                .filter(|a| a.rank() == rank && a.dim() == dim)
                .cloned()
                .collect();
            let got = enumerate_algebras(rank, dim).unwrap();
            assert_eq!(got, expected, "rank {rank}, dim {dim}");
        }
    }
}

#[test]
fn parity_holds_everywhere() {
    for a in brute_force_algebras(3, 21) {
        assert_eq!(a.dim() % 2, a.rank() % 2, "{a}");
    }
    // consequence: enumeration is empty whenever dim and rank disagree mod 2
    for rank in 0..=3u32 {
        for dim in 0..=21u32 {
            if dim % 2 != rank % 2 {
                assert!(enumerate_algebras(rank, dim).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn no_structural_duplicates() {
    for rank in 0..=3u32 {
        for dim in 0..=21u32 {
            let got = enumerate_algebras(rank, dim).unwrap();
            for w in got.windows(2) {
                assert!(
                    w[0] < w[1],
                    "unsorted or duplicate entry at rank {rank}, dim {dim}"
                );
            }
        }
    }
}

#[test]
fn required_empty_slots() {
    for (rank, dim) in [
        (2, 7),
        (2, 9),
        (3, 8),
        (3, 10),
        (3, 12),
        (3, 14),
        (3, 16),
        (3, 20),
    ] {
        assert!(
            enumerate_algebras(rank, dim).unwrap().is_empty(),
            "({rank}, {dim})"
        );
    }
}

//! Deterministic candidate enumeration for the bounded invertibility and
//! density searches.
//!
//! Over `F_p` the full coefficient space is walked in lexicographic order when
//! `p^dim` fits the budget; otherwise a seeded sample is drawn. A sampled
//! search that finds nothing is `Inconclusive`, never a pass.

use crate::exactla::{FieldSpec, Mat, Scalar};
use crate::report::SearchBudget;

pub enum SearchKind {
    Exhaustive,
    Sampled,
    /// rational coefficients: nothing to enumerate, caller must supply
    /// witnesses
    NotEnumerable,
}

pub struct VectorSearch {
    pub kind: SearchKind,
    vectors: Box<dyn Iterator<Item = Mat>>,
}

impl Iterator for VectorSearch {
    type Item = Mat;
    fn next(&mut self) -> Option<Mat> {
        self.vectors.next()
    }
}

/// All (or a seeded sample of) coefficient columns of the given dimension.
pub fn coeff_vectors(field: FieldSpec, dim: usize, budget: &SearchBudget) -> VectorSearch {
    let FieldSpec::Prime(p) = field else {
        return VectorSearch {
            kind: SearchKind::NotEnumerable,
            vectors: Box::new(std::iter::empty()),
        };
    };
    let total = (p as f64).powi(dim as i32);
    if total <= budget.max_enumeration as f64 {
        let count = (p as u128).pow(dim as u32) as u64;
        let it = (0..count).map(move |mut n| {
            let mut entries = Vec::with_capacity(dim);
            for _ in 0..dim {
                entries.push(Scalar::Fp(n % p));
                n /= p;
            }
            Mat::col(field, entries)
        });
        VectorSearch {
            kind: SearchKind::Exhaustive,
            vectors: Box::new(it),
        }
    } else {
        let samples = budget.samples;
        let mut state = splitmix_seed(budget.seed);
        let it = (0..samples).map(move |_| {
            let entries = (0..dim)
                .map(|_| {
                    state = splitmix(state);
                    Scalar::Fp(state % p)
                })
                .collect();
            Mat::col(field, entries)
        });
        VectorSearch {
            kind: SearchKind::Sampled,
            vectors: Box::new(it),
        }
    }
}

fn splitmix_seed(seed: u64) -> u64 {
    splitmix(seed.wrapping_add(0x9e37_79b9_7f4a_7c15))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_walk_hits_every_vector() {
        let f = FieldSpec::prime(3).unwrap();
        let s = coeff_vectors(f, 2, &SearchBudget::default());
        assert!(matches!(s.kind, SearchKind::Exhaustive));
        let all: Vec<Mat> = s.collect();
        assert_eq!(all.len(), 9);
        let distinct: std::collections::BTreeSet<String> =
            all.iter().map(|m| format!("{:?}", m.entries())).collect();
        assert_eq!(distinct.len(), 9);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let f = FieldSpec::prime(1009).unwrap();
        let budget = SearchBudget {
            max_enumeration: 10,
            samples: 5,
            seed: 42,
        };
        let a: Vec<Mat> = coeff_vectors(f, 4, &budget).collect();
        let b: Vec<Mat> = coeff_vectors(f, 4, &budget).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }
}

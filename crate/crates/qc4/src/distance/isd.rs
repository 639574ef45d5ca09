//! Randomized low-weight codeword search: repeated information-set sampling
//! with weight-1 and weight-2 message sweeps. Used for fast upper bounds
//! while hunting ν candidates; results are deterministic for a fixed seed.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::linalg::{Gf4Matrix, Gf4Vector};
use crate::qc2::LinearCode;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Per-trial RNG stream derived from (seed, trial index).
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(splitmix64(seed ^ trial.wrapping_mul(0xa076_1d64_78bd_642f)))
}

/// Searches for a codeword of weight ≤ target. Each trial permutes the
/// columns, reduces to a systematic basis, and sweeps all weight-1 and
/// weight-2 messages. The first hit (in deterministic scan order) is
/// verified to lie in the code and returned.
pub fn low_weight_search(
    code: &LinearCode,
    target: u32,
    trials: u64,
    seed: u64,
) -> Result<Option<Gf4Vector>> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    let n = code.length();
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);

        let mut permuted = Gf4Matrix::zeros(k, n);
        for r in 0..k {
            for (c, &p) in perm.iter().enumerate() {
                permuted.set(r, c, code.basis().get(r, p));
            }
        }
        let (rref, rank) = permuted.row_reduce();
        debug_assert_eq!(rank, k);

        // undo the permutation; row operations keep rows inside the code
        let rows: Vec<Gf4Vector> = (0..k)
            .map(|r| {
                let mut coords = vec![Gf4::ZERO; n];
                for (c, &p) in perm.iter().enumerate() {
                    coords[p] = rref.get(r, c);
                }
                Gf4Vector::new(coords)
            })
            .collect();

        let mut hit: Option<Gf4Vector> = None;
        'scan: for i in 0..k {
            if rows[i].weight() as u32 <= target {
                hit = Some(rows[i].clone());
                break 'scan;
            }
            for j in i + 1..k {
                for s in Gf4::NONZERO {
                    let mut word = rows[i].clone();
                    word.scaled_add_assign(s, &rows[j]);
                    if (word.weight() as u32) <= target {
                        hit = Some(word);
                        break 'scan;
                    }
                }
            }
        }
        if let Some(word) = hit {
            // re-encode check: every reported codeword must be in the code
            if !code.contains(&word)? {
                return Err(Error::Invariant(
                    "low-weight search produced a vector outside the code".into(),
                ));
            }
            return Ok(Some(word));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming_like_code() -> LinearCode {
        // [7,4] binary Hamming generator embedded over GF(4)
        let rows = vec![
            Gf4Vector::from_digits(&[1, 0, 0, 0, 1, 1, 0]).unwrap(),
            Gf4Vector::from_digits(&[0, 1, 0, 0, 0, 1, 1]).unwrap(),
            Gf4Vector::from_digits(&[0, 0, 1, 0, 1, 1, 1]).unwrap(),
            Gf4Vector::from_digits(&[0, 0, 0, 1, 1, 0, 1]).unwrap(),
        ];
        LinearCode::from_generator(Gf4Matrix::from_rows(rows).unwrap())
    }

    #[test]
    fn generous_target_hits_immediately() {
        let code = hamming_like_code();
        let word = low_weight_search(&code, 7, 1, 42).unwrap().unwrap();
        assert!(word.weight() <= 7);
        assert!(code.contains(&word).unwrap());
    }

    #[test]
    fn finds_weight_three_words() {
        let code = hamming_like_code();
        let word = low_weight_search(&code, 3, 50, 1).unwrap().unwrap();
        assert_eq!(word.weight(), 3); // Hamming code has minimum distance 3
        assert!(code.contains(&word).unwrap());
    }

    #[test]
    fn zero_trials_find_nothing() {
        let code = hamming_like_code();
        assert!(low_weight_search(&code, 7, 0, 42).unwrap().is_none());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let code = hamming_like_code();
        let a = low_weight_search(&code, 3, 20, 7).unwrap();
        let b = low_weight_search(&code, 3, 20, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_dimension_is_an_error() {
        let zero = LinearCode::from_generator(Gf4Matrix::zeros(2, 5));
        assert!(matches!(
            low_weight_search(&zero, 1, 1, 0),
            Err(Error::ZeroDimension)
        ));
    }
}

//! Exact and bounding minimum-distance computation and weight enumeration —
//! the verification engine. Everything here is exact integer and field
//! arithmetic; there is no floating point on any enumeration path.
//!
//! Enumeration kernels run on read-only shares of the generator matrix and
//! merge worker results by min or by vector addition, so outputs do not
//! depend on scheduling or worker count.

mod bz;
mod gray;
mod isd;
mod macwilliams;
mod packed;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qc2::LinearCode;

pub use isd::low_weight_search;
pub use macwilliams::macwilliams_transform;

use packed::{kernel_words, pack_rows, Packed};

/// Hard cap for full-space minimum-distance enumeration (4^13 ≈ 6.7·10⁷).
pub const BRUTE_FORCE_CAP: usize = 13;

/// Hard cap for exhaustive weight enumeration (4^17 ≈ 1.7·10¹⁰).
pub const ENUMERATOR_CAP: usize = 17;

/// An exact distance or an honest (lower, upper) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistanceBound {
    Exact { value: u32 },
    Bounds { lower: u32, upper: u32 },
}

impl DistanceBound {
    pub fn exact(&self) -> Option<u32> {
        match *self {
            DistanceBound::Exact { value } => Some(value),
            DistanceBound::Bounds { .. } => None,
        }
    }

    pub fn lower(&self) -> u32 {
        match *self {
            DistanceBound::Exact { value } => value,
            DistanceBound::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> u32 {
        match *self {
            DistanceBound::Exact { value } => value,
            DistanceBound::Bounds { upper, .. } => upper,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    BruteForce,
    Bz,
    LowWeightSearch,
}

/// Enumeration counters exposed through the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorkStats {
    pub codewords_enumerated: u64,
    pub information_sets: u32,
    /// Wall-clock seconds; cleared wherever byte-stable output is required.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_secs: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    #[serde(flatten)]
    pub bound: DistanceBound,
    pub method: DistanceMethod,
    pub stats: WorkStats,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<u32> {
        self.bound.exact()
    }

    /// Drops volatile timing so serialized output is a pure function of the
    /// inputs.
    pub fn normalized_for_determinism(mut self) -> DistanceResult {
        self.stats.elapsed_secs = None;
        self
    }
}

/// Enumeration allowance for [`min_distance_bz`].
///
/// `WorkUnits` counts planned enumeration leaves and is checked before each
/// round, so identical budgets give identical results on any worker count;
/// `Seconds` is wall-clock and may cut a round anywhere.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Budget {
    Unlimited,
    Seconds { limit: f64 },
    WorkUnits { limit: u64 },
}

/// Weight distribution A_0..A_N of a code; exact integer counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn from_u64_counts(counts: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator {
            counts: counts.into_iter().map(BigUint::from).collect(),
        }
    }

    pub fn from_biguint_counts(counts: Vec<BigUint>) -> WeightEnumerator {
        WeightEnumerator { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> BigUint {
        self.counts
            .get(weight)
            .cloned()
            .unwrap_or_else(|| BigUint::from(0u8))
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// The smallest positive weight with a nonzero count: the code's
    /// minimum distance when the enumerator is exhaustive.
    pub fn min_positive_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| **c != BigUint::from(0u8))
            .map(|(w, _)| w)
    }
}

/// Offsets for a deterministic static partition of the message space: the
/// top `block_digits` message digits are fixed per block, the rest are
/// enumerated in Gray order.
fn partition_offsets<const W: usize>(
    rows: &[Packed<W>],
    block_digits: usize,
) -> (Vec<Packed<W>>, usize) {
    let k = rows.len();
    let b = block_digits.min(k);
    let fixed = &rows[k - b..];
    let mut offsets = Vec::with_capacity(4usize.pow(b as u32));
    for combo in 0..4usize.pow(b as u32) {
        let mut off = Packed::zero();
        let mut c = combo;
        for row in fixed {
            let digit = crate::gf4::Gf4::new((c % 4) as u8).expect("digit < 4");
            c /= 4;
            off.xor_assign(&row.scaled(digit));
        }
        offsets.push(off);
    }
    (offsets, k - b)
}

fn brute_force_kernel<const W: usize>(code: &LinearCode) -> (u32, u64) {
    let rows: Vec<Packed<W>> = pack_rows(code.basis());
    let (offsets, free) = partition_offsets(&rows, 3);
    offsets
        .par_iter()
        .map(|off| gray::min_nonzero_weight(&rows[..free], off))
        .reduce(|| (u32::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1))
}

/// Exact minimum weight by enumerating all 4^k codewords. Errors above
/// [`BRUTE_FORCE_CAP`] direct the caller to [`min_distance_bz`].
pub fn min_distance_bruteforce(code: &LinearCode) -> Result<DistanceResult> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    if k > BRUTE_FORCE_CAP {
        return Err(Error::CapacityExceeded {
            dimension: k,
            cap: "brute-force",
            limit: BRUTE_FORCE_CAP,
            hint: "use min_distance_bz",
        });
    }
    let start = std::time::Instant::now();
    let (best, visited) = match kernel_words(code.length()) {
        1 => brute_force_kernel::<1>(code),
        2 => brute_force_kernel::<2>(code),
        4 => brute_force_kernel::<4>(code),
        _ => brute_force_kernel::<8>(code),
    };
    debug_assert_eq!(visited, 4u64.pow(k as u32));
    Ok(DistanceResult {
        bound: DistanceBound::Exact { value: best },
        method: DistanceMethod::BruteForce,
        stats: WorkStats {
            codewords_enumerated: visited,
            information_sets: 0,
            elapsed_secs: Some(start.elapsed().as_secs_f64()),
        },
    })
}

/// Exact minimum distance by information-set enumeration, or honest bounds
/// when the budget runs out first.
pub fn min_distance_bz(code: &LinearCode, budget: Budget) -> Result<DistanceResult> {
    bz::min_distance_bz(code, budget)
}

fn enumerator_kernel<const W: usize>(code: &LinearCode) -> (Vec<u64>, u64) {
    let rows: Vec<Packed<W>> = pack_rows(code.basis());
    let (offsets, free) = partition_offsets(&rows, 3);
    offsets
        .par_iter()
        .map(|off| {
            let mut counts = vec![0u64; code.length() + 1];
            let visited = gray::accumulate_weights(&rows[..free], off, &mut counts);
            (counts, visited)
        })
        .reduce(
            || (vec![0u64; code.length() + 1], 0),
            |mut a, b| {
                for (x, y) in a.0.iter_mut().zip(&b.0) {
                    *x += y;
                }
                (a.0, a.1 + b.1)
            },
        )
}

/// Exact weight distribution A_0..A_N by full Gray-code enumeration.
pub fn weight_enumerator_exhaustive(code: &LinearCode) -> Result<WeightEnumerator> {
    let k = code.dimension();
    if k > ENUMERATOR_CAP {
        return Err(Error::CapacityExceeded {
            dimension: k,
            cap: "weight-enumeration",
            limit: ENUMERATOR_CAP,
            hint: "enumerate the dual and transform instead",
        });
    }
    let (counts, visited) = match kernel_words(code.length()) {
        1 => enumerator_kernel::<1>(code),
        2 => enumerator_kernel::<2>(code),
        4 => enumerator_kernel::<4>(code),
        _ => enumerator_kernel::<8>(code),
    };
    if visited != 4u64.pow(k as u32) {
        return Err(Error::Invariant(format!(
            "enumeration visited {visited} words, expected 4^{k}"
        )));
    }
    if counts[0] != 1 {
        return Err(Error::Invariant(format!(
            "found {} words of weight zero; the zero codeword should be unique",
            counts[0]
        )));
    }
    Ok(WeightEnumerator::from_u64_counts(counts))
}

//! Exact minimum distance by enumeration over a chain of information sets.
//!
//! Information sets are built by successive Gaussian eliminations that
//! prefer pivots on columns no earlier set used. Set i contributes
//! max(0, w + 1 − δᵢ) to the lower bound once all messages of weight ≤ w
//! have been enumerated against it, where δᵢ is its rank deficiency
//! relative to the new columns it claimed. The bound grows per completed
//! round until it meets the lightest codeword found.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::linalg::Gf4Matrix;
use crate::qc2::LinearCode;

use super::packed::{kernel_words, pack_rows, Packed};
use super::{Budget, DistanceBound, DistanceMethod, DistanceResult, WorkStats};

/// One systematic generator matrix: full rank k, identity on its pivot
/// columns, of which `new_columns` were not claimed by earlier sets.
struct InfoSet {
    matrix: Gf4Matrix,
    /// rank deficiency δ = k − #new_columns
    delta: usize,
}

/// Gaussian elimination with a column preference order: unused columns
/// first. Returns the systematic matrix and its pivot columns.
fn systematic_form(basis: &Gf4Matrix, used: &[bool]) -> (Gf4Matrix, Vec<usize>) {
    let mut m = basis.clone();
    let (rows, cols) = (m.nrows(), m.ncols());
    let order: Vec<usize> = (0..cols)
        .filter(|&c| !used[c])
        .chain((0..cols).filter(|&c| used[c]))
        .collect();
    let mut pivots = Vec::with_capacity(rows);
    let mut next_row = 0;
    for &col in &order {
        if next_row == rows {
            break;
        }
        let Some(pivot_row) = (next_row..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        // swap, normalize, eliminate
        for c in 0..cols {
            let (a, b) = (m.get(next_row, c), m.get(pivot_row, c));
            m.set(next_row, c, b);
            m.set(pivot_row, c, a);
        }
        let inv = m.get(next_row, col).inv().expect("pivot nonzero");
        for c in 0..cols {
            let v = m.get(next_row, c);
            m.set(next_row, c, inv * v);
        }
        for r in 0..rows {
            if r != next_row {
                let f = m.get(r, col);
                if !f.is_zero() {
                    for c in 0..cols {
                        let v = m.get(r, c) + f * m.get(next_row, c);
                        m.set(r, c, v);
                    }
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    (m, pivots)
}

fn build_info_sets(basis: &Gf4Matrix) -> Vec<InfoSet> {
    let k = basis.nrows();
    let mut used = vec![false; basis.ncols()];
    let mut sets = Vec::new();
    loop {
        let (matrix, pivots) = systematic_form(basis, &used);
        debug_assert_eq!(pivots.len(), k, "basis rows are independent");
        let new_columns: Vec<usize> = pivots.iter().copied().filter(|&c| !used[c]).collect();
        if new_columns.is_empty() {
            break;
        }
        for &c in &new_columns {
            used[c] = true;
        }
        sets.push(InfoSet {
            matrix,
            delta: k - new_columns.len(),
        });
    }
    sets
}

/// Leaves in one enumeration round: C(k, w) · 3^(w−1) weight-w messages with
/// the first nonzero scalar pinned to 1 (scalar multiples share weights).
fn round_cost(k: usize, w: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..w {
        c = c.saturating_mul((k - i) as u128) / (i as u128 + 1);
    }
    for _ in 1..w {
        c = c.saturating_mul(3);
    }
    c.min(u64::MAX as u128) as u64
}

struct LevelOutcome {
    best: u32,
    leaves: u64,
    completed: bool,
}

/// Enumerates all weight-w messages (first scalar pinned) against one
/// systematic matrix, in parallel over the first support position.
fn enumerate_level<const W: usize>(
    rows: &[Packed<W>],
    w: usize,
    stop: &AtomicBool,
    deadline: Option<(Instant, f64)>,
) -> LevelOutcome {
    let k = rows.len();
    let scaled: Vec<[Packed<W>; 3]> = rows
        .iter()
        .map(|r| [*r, r.scaled(Gf4::OMEGA), r.scaled(Gf4::OMEGA_SQ)])
        .collect();

    let outcome = (0..=(k - w))
        .into_par_iter()
        .map(|j1| {
            let mut best = u32::MAX;
            let mut leaves = 0u64;
            let mut next_check = 1u64 << 20;
            let completed = descend(
                &scaled,
                rows[j1],
                j1 + 1,
                w - 1,
                &mut best,
                &mut leaves,
                &mut next_check,
                stop,
                deadline,
            );
            (best, leaves, completed)
        })
        .reduce(
            || (u32::MAX, 0, true),
            |a, b| (a.0.min(b.0), a.1 + b.1, a.2 && b.2),
        );

    LevelOutcome {
        best: outcome.0,
        leaves: outcome.1,
        completed: outcome.2,
    }
}

#[allow(clippy::too_many_arguments)]
fn descend<const W: usize>(
    scaled: &[[Packed<W>; 3]],
    acc: Packed<W>,
    from: usize,
    remaining: usize,
    best: &mut u32,
    leaves: &mut u64,
    next_check: &mut u64,
    stop: &AtomicBool,
    deadline: Option<(Instant, f64)>,
) -> bool {
    let k = scaled.len();
    if remaining == 0 {
        let weight = acc.weight();
        if weight < *best {
            *best = weight;
        }
        *leaves += 1;
    } else if remaining == 1 {
        for row in &scaled[from..] {
            for variant in row {
                let weight = acc.xored(variant).weight();
                if weight < *best {
                    *best = weight;
                }
            }
        }
        *leaves += 3 * (k - from) as u64;
    } else {
        for j in from..=(k - remaining) {
            for variant in &scaled[j] {
                if !descend(
                    scaled,
                    acc.xored(variant),
                    j + 1,
                    remaining - 1,
                    best,
                    leaves,
                    next_check,
                    stop,
                    deadline,
                ) {
                    return false;
                }
            }
        }
    }
    if *leaves >= *next_check {
        *next_check = *leaves + (1 << 20);
        if stop.load(Ordering::Relaxed) {
            return false;
        }
        if let Some((start, limit)) = deadline {
            if start.elapsed().as_secs_f64() > limit {
                stop.store(true, Ordering::Relaxed);
                return false;
            }
        }
    }
    true
}

fn lower_bound(sets: &[InfoSet], done: &[usize]) -> u32 {
    sets.iter()
        .zip(done)
        .map(|(s, &w)| (w + 1).saturating_sub(s.delta) as u32)
        .sum()
}

pub(super) fn run<const W: usize>(code: &LinearCode, budget: Budget) -> Result<DistanceResult> {
    let start = Instant::now();
    let k = code.dimension();
    let sets = build_info_sets(code.basis());
    let packed_sets: Vec<Vec<Packed<W>>> = sets.iter().map(|s| pack_rows(&s.matrix)).collect();

    // seed the upper bound with the systematic rows
    let mut upper = packed_sets
        .iter()
        .flatten()
        .map(|r| r.weight())
        .min()
        .expect("k ≥ 1");
    let mut enumerated = 0u64;
    let mut done = vec![0usize; sets.len()];
    let mut spent_work = 0u64;
    let stop = AtomicBool::new(false);
    let deadline = match budget {
        Budget::Seconds { limit } => Some((start, limit)),
        _ => None,
    };

    'rounds: for w in 1..=k {
        for (i, set) in sets.iter().enumerate() {
            if lower_bound(&sets, &done) >= upper {
                break 'rounds;
            }
            // a round on this set only helps once w reaches its deficiency
            if set.delta > w {
                continue;
            }
            // catch up any skipped earlier rounds so the bound stays valid
            while done[i] < w {
                let level = done[i] + 1;
                let cost = round_cost(k, level);
                match budget {
                    Budget::WorkUnits { limit } if spent_work.saturating_add(cost) > limit => {
                        break 'rounds;
                    }
                    Budget::Seconds { limit } if start.elapsed().as_secs_f64() > limit => {
                        break 'rounds;
                    }
                    _ => {}
                }
                let outcome = enumerate_level(&packed_sets[i], level, &stop, deadline);
                enumerated += outcome.leaves;
                upper = upper.min(outcome.best);
                if !outcome.completed {
                    break 'rounds;
                }
                spent_work += cost;
                done[i] = level;
            }
        }
        if lower_bound(&sets, &done) >= upper {
            break;
        }
    }

    let lower = lower_bound(&sets, &done).min(upper);
    let bound = if lower >= upper {
        DistanceBound::Exact { value: upper }
    } else {
        DistanceBound::Bounds { lower, upper }
    };
    Ok(DistanceResult {
        bound,
        method: DistanceMethod::Bz,
        stats: WorkStats {
            codewords_enumerated: enumerated,
            information_sets: sets.len() as u32,
            elapsed_secs: Some(start.elapsed().as_secs_f64()),
        },
    })
}

pub fn min_distance_bz(code: &LinearCode, budget: Budget) -> Result<DistanceResult> {
    if code.dimension() == 0 {
        return Err(Error::ZeroDimension);
    }
    match kernel_words(code.length()) {
        1 => run::<1>(code, budget),
        2 => run::<2>(code, budget),
        4 => run::<4>(code, budget),
        _ => run::<8>(code, budget),
    }
}

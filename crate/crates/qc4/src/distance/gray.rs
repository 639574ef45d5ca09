//! Full enumeration of a coset of a GF(4) row space in Gray-code order:
//! every step changes one base-4 message digit by ±1, so every codeword is
//! one plane-XOR away from the previous one.

use super::packed::Packed;

/// Reflected mixed-radix (radix 4) Gray walker with focus pointers; each
/// `step` reports which digit moved and its old/new value, visiting all
/// 4^k digit strings in 4^k − 1 steps.
pub(crate) struct GrayWalker {
    digits: Vec<u8>,
    dirs: Vec<i8>,
    focus: Vec<usize>,
}

impl GrayWalker {
    pub fn new(k: usize) -> GrayWalker {
        GrayWalker {
            digits: vec![0; k],
            dirs: vec![1; k],
            focus: (0..=k).collect(),
        }
    }

    #[inline]
    pub fn step(&mut self) -> Option<(usize, u8, u8)> {
        let j = self.focus[0];
        self.focus[0] = 0;
        if j == self.digits.len() {
            return None;
        }
        let old = self.digits[j];
        let new = (old as i8 + self.dirs[j]) as u8;
        self.digits[j] = new;
        if new == 0 || new == 3 {
            self.dirs[j] = -self.dirs[j];
            self.focus[j] = self.focus[j + 1];
            self.focus[j + 1] = j + 1;
        }
        Some((j, old, new))
    }
}

/// Precomputed per-row deltas: a ±1 move on digit j adds the row scaled by
/// old ⊕ new, which is always the digit 1 or 3.
pub(crate) struct GrayDeltas<const W: usize> {
    by_one: Vec<Packed<W>>,
    by_omega_sq: Vec<Packed<W>>,
}

impl<const W: usize> GrayDeltas<W> {
    pub fn new(rows: &[Packed<W>]) -> Self {
        GrayDeltas {
            by_one: rows.to_vec(),
            by_omega_sq: rows
                .iter()
                .map(|r| r.scaled(crate::gf4::Gf4::OMEGA_SQ))
                .collect(),
        }
    }

    #[inline(always)]
    fn delta(&self, j: usize, flip: u8) -> &Packed<W> {
        if flip == 1 {
            &self.by_one[j]
        } else {
            &self.by_omega_sq[j]
        }
    }
}

/// Adds 1 to `counts[weight]` for every word of `offset + span(rows)`,
/// including `offset` itself. Returns the number of words visited (4^k).
pub(crate) fn accumulate_weights<const W: usize>(
    rows: &[Packed<W>],
    offset: &Packed<W>,
    counts: &mut [u64],
) -> u64 {
    let deltas = GrayDeltas::new(rows);
    let mut acc = *offset;
    let mut visited = 1u64;
    counts[acc.weight() as usize] += 1;
    let mut walker = GrayWalker::new(rows.len());
    while let Some((j, old, new)) = walker.step() {
        acc.xor_assign(deltas.delta(j, old ^ new));
        counts[acc.weight() as usize] += 1;
        visited += 1;
    }
    visited
}

/// Minimum weight over the nonzero words of `offset + span(rows)` (weight 0
/// can only be the zero word, which is skipped). Returns (min, visited);
/// min is `u32::MAX` when the coset contains only the zero word.
pub(crate) fn min_nonzero_weight<const W: usize>(
    rows: &[Packed<W>],
    offset: &Packed<W>,
) -> (u32, u64) {
    let deltas = GrayDeltas::new(rows);
    let mut acc = *offset;
    let mut best = u32::MAX;
    let w0 = acc.weight();
    if w0 > 0 {
        best = w0;
    }
    let mut visited = 1u64;
    let mut walker = GrayWalker::new(rows.len());
    while let Some((j, old, new)) = walker.step() {
        acc.xor_assign(deltas.delta(j, old ^ new));
        let w = acc.weight();
        visited += 1;
        if w < best && w > 0 {
            best = w;
        }
    }
    (best, visited)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walker_visits_every_string_once() {
        for k in 0..6 {
            let mut walker = GrayWalker::new(k);
            let mut seen = std::collections::HashSet::new();
            seen.insert(walker.digits.clone());
            while let Some((j, old, new)) = walker.step() {
                assert_eq!(old.abs_diff(new), 1, "digit moves by one");
                assert!(j < k);
                assert!(seen.insert(walker.digits.clone()), "revisited a string");
            }
            assert_eq!(seen.len(), 4usize.pow(k as u32));
        }
    }
}

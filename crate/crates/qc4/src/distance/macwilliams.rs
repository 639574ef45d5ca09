//! Exact weight-enumerator transform between a code and its dual over
//! GF(4): B(z) = 4^(−k) (1+3z)ⁿ A((1−z)/(1+3z)), expanded with integer
//! arithmetic only.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};

use super::WeightEnumerator;

fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigUint::from(0u8); n + 1];
        row[0] = BigUint::from(1u8);
        for j in 1..=i {
            row[j] = &table[i - 1][j - 1] + &table[i - 1][j];
        }
        table.push(row);
    }
    table
}

/// Weight enumerator of the dual of an [n, k] code over GF(4).
///
/// Coefficient of z^j in the dual enumerator:
/// B_j = 4^(−k) Σ_w A_w Σ_i (−1)^i C(w, i) 3^(j−i) C(n−w, j−i).
pub fn macwilliams_transform(
    a: &WeightEnumerator,
    n: usize,
    k: usize,
) -> Result<WeightEnumerator> {
    if a.counts().len() != n + 1 {
        return Err(Error::InvalidEnumerator(format!(
            "enumerator has {} entries, expected {}",
            a.counts().len(),
            n + 1
        )));
    }
    let expected_total = BigUint::from(4u8).pow(k as u32);
    if a.total() != expected_total {
        return Err(Error::InvalidEnumerator(format!(
            "coefficients sum to {}, expected 4^{k}",
            a.total()
        )));
    }

    let binom = binomials(n);
    let mut pow3 = Vec::with_capacity(n + 1);
    pow3.push(BigUint::from(1u8));
    for _ in 0..n {
        let next = pow3.last().expect("nonempty") * 3u8;
        pow3.push(next);
    }

    let scale = BigInt::from(expected_total);
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::from(0);
        for (w, a_w) in a.counts().iter().enumerate() {
            if a_w == &BigUint::from(0u8) {
                continue;
            }
            let mut kraw = BigInt::from(0);
            for i in j.saturating_sub(n - w)..=j.min(w) {
                let term = BigInt::from(&binom[w][i] * &binom[n - w][j - i] * &pow3[j - i]);
                if i % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from(a_w.clone()) * kraw;
        }
        let (q, r) = (acc.clone() / &scale, acc % &scale);
        if r != BigInt::from(0) {
            return Err(Error::Invariant(format!(
                "dual coefficient of z^{j} is not divisible by 4^{k}"
            )));
        }
        let b: BigUint = q.try_into().map_err(|_| {
            Error::Invariant(format!("dual coefficient of z^{j} is negative"))
        })?;
        counts.push(b);
    }

    let out = WeightEnumerator::from_biguint_counts(counts);
    let dual_total = BigUint::from(4u8).pow((n - k) as u32);
    if out.total() != dual_total {
        return Err(Error::Invariant(format!(
            "dual enumerator sums to {}, expected 4^{}",
            out.total(),
            n - k
        )));
    }
    Ok(out)
}

//! Extension fields GF(4^m), just enough to factor xⁿ−1 over GF(4): find a
//! primitive n-th root of unity and evaluate products of linear factors.
//! Elements are coefficient vectors over GF(4) modulo a deterministically
//! chosen irreducible polynomial, so results are stable across runs.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::poly::Poly;

/// An element of GF(4^m): `m` coefficients, ascending.
pub(crate) type ExtElem = Vec<Gf4>;

pub(crate) struct ExtField {
    m: usize,
    /// Coefficients 0..m of the monic reduction polynomial (index m is 1).
    reduction: Vec<Gf4>,
}

impl ExtField {
    /// GF(4^m) modulo the first monic irreducible of degree m in counter
    /// order of coefficient vectors.
    pub fn new(m: usize) -> ExtField {
        assert!(m >= 1, "extension degree must be positive");
        if m == 1 {
            // x + 1; any monic linear works
            return ExtField {
                m,
                reduction: vec![Gf4::ONE, Gf4::ONE],
            };
        }
        let mut idx: u128 = 1; // constant term must be nonzero
        loop {
            let mut coeffs = Vec::with_capacity(m + 1);
            let mut t = idx;
            for _ in 0..m {
                coeffs.push(Gf4::new((t % 4) as u8).expect("digit < 4"));
                t /= 4;
            }
            coeffs.push(Gf4::ONE);
            if t == 0 && !coeffs[0].is_zero() {
                let f = Poly::from_coeffs(coeffs.clone());
                if is_irreducible(&f) {
                    return ExtField {
                        m,
                        reduction: coeffs,
                    };
                }
            }
            idx += 1;
            assert!(
                idx >> (2 * m as u32) == 0,
                "no irreducible of degree {m} found"
            );
        }
    }

    pub fn zero(&self) -> ExtElem {
        vec![Gf4::ZERO; self.m]
    }

    pub fn one(&self) -> ExtElem {
        let mut e = self.zero();
        e[0] = Gf4::ONE;
        e
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| x + y).collect()
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut raw = vec![Gf4::ZERO; 2 * self.m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        // reduce by the monic modulus, high terms first
        for i in (self.m..raw.len()).rev() {
            let c = raw[i];
            if c.is_zero() {
                continue;
            }
            raw[i] = Gf4::ZERO;
            for j in 0..self.m {
                raw[i - self.m + j] += c * self.reduction[j];
            }
        }
        raw.truncate(self.m);
        raw
    }

    pub fn pow(&self, a: &ExtElem, e: &BigUint) -> ExtElem {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub fn is_one(&self, a: &ExtElem) -> bool {
        a[0] == Gf4::ONE && a[1..].iter().all(|c| c.is_zero())
    }

    /// Maps an element back into GF(4) when it lies in the base field.
    pub fn to_base_field(&self, a: &ExtElem) -> Option<Gf4> {
        a[1..].iter().all(|c| c.is_zero()).then(|| a[0])
    }

    /// A deterministic element of multiplicative order exactly n. Requires
    /// n | 4^m − 1, which holds when m is the order of 4 mod n.
    pub fn primitive_root_of_unity(&self, n: usize) -> Result<ExtElem> {
        if n == 1 {
            return Ok(self.one());
        }
        let group_order = BigUint::from(4u8).pow(self.m as u32) - 1u8;
        let n_big = BigUint::from(n);
        if &group_order % &n_big != BigUint::from(0u8) {
            return Err(Error::Invariant(format!(
                "{n} does not divide the order of GF(4^{})*",
                self.m
            )));
        }
        let exponent = &group_order / &n_big;
        let primes = prime_factors(n);
        let mut idx: u128 = 2;
        loop {
            let mut elem = self.zero();
            let mut t = idx;
            for c in elem.iter_mut() {
                *c = Gf4::new((t % 4) as u8).expect("digit < 4");
                t /= 4;
            }
            if t != 0 {
                return Err(Error::Invariant(format!(
                    "no primitive {n}-th root of unity in GF(4^{})",
                    self.m
                )));
            }
            let candidate = self.pow(&elem, &exponent);
            if !self.is_one(&candidate)
                && primes
                    .iter()
                    .all(|&p| !self.is_one(&self.pow(&candidate, &BigUint::from(n / p))))
            {
                return Ok(candidate);
            }
            idx += 1;
        }
    }
}

/// Rabin's irreducibility test over GF(4): f of degree m is irreducible iff
/// x^(4^m) ≡ x (mod f) and gcd(x^(4^(m/p)) − x, f) = 1 for every prime p | m.
fn is_irreducible(f: &Poly) -> bool {
    let Some(m) = f.degree() else {
        return false;
    };
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = Poly::monomial(1, Gf4::ONE);
    // iterated Frobenius: powers[j] = x^(4^j) mod f
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(x.clone());
    for _ in 0..m {
        let prev = powers.last().expect("nonempty");
        let sq = (prev * prev).div_rem(f).expect("nonzero modulus").1;
        let fourth = (&sq * &sq).div_rem(f).expect("nonzero modulus").1;
        powers.push(fourth);
    }
    if powers[m] != x {
        return false;
    }
    for p in prime_factors(m) {
        let diff = &powers[m / p] + &x;
        let g = match Poly::gcd(&diff, f) {
            Ok(g) => g,
            Err(_) => return false, // diff = 0: x^(4^(m/p)) = x, so f splits
        };
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn prime_factors(mut x: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            out.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields_have_irreducible_moduli() {
        for m in 1..=8 {
            let field = ExtField::new(m);
            assert_eq!(field.reduction.len(), m + 1);
            assert_eq!(*field.reduction.last().unwrap(), Gf4::ONE);
        }
    }

    #[test]
    fn multiplication_agrees_with_field_axioms() {
        let field = ExtField::new(3);
        let a: ExtElem = vec![Gf4::OMEGA, Gf4::ONE, Gf4::ZERO];
        let b: ExtElem = vec![Gf4::ONE, Gf4::OMEGA_SQ, Gf4::OMEGA];
        let c: ExtElem = vec![Gf4::ZERO, Gf4::ONE, Gf4::ONE];
        let ab_c = field.mul(&field.mul(&a, &b), &c);
        let a_bc = field.mul(&a, &field.mul(&b, &c));
        assert_eq!(ab_c, a_bc);
        let dist = field.mul(&a, &field.add(&b, &c));
        let expand = field.add(&field.mul(&a, &b), &field.mul(&a, &c));
        assert_eq!(dist, expand);
    }

    #[test]
    fn nonzero_elements_have_full_group_order() {
        // every nonzero element satisfies z^(4^m - 1) = 1
        let field = ExtField::new(2);
        let order = BigUint::from(15u8);
        for idx in 1u8..16 {
            let elem: ExtElem = vec![
                Gf4::new(idx % 4).unwrap(),
                Gf4::new(idx / 4).unwrap(),
            ];
            assert!(field.is_one(&field.pow(&elem, &order)));
        }
    }

    #[test]
    fn primitive_roots_have_exact_order() {
        for &n in &[3usize, 5, 7, 9, 21] {
            let m = crate::poly::multiplicative_order_of_4(n);
            let field = ExtField::new(m);
            let gamma = field.primitive_root_of_unity(n).unwrap();
            assert!(field.is_one(&field.pow(&gamma, &BigUint::from(n))));
            for d in 1..n {
                if n % d == 0 {
                    assert!(!field.is_one(&field.pow(&gamma, &BigUint::from(d))));
                }
            }
        }
    }
}

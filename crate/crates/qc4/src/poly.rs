//! Dense polynomials over GF(4), arithmetic in F₄[x]/(xⁿ−1) for odd n, the
//! compressed coefficient-string notation, and the factorization of xⁿ−1
//! into coset minimal polynomials.
//!
//! Coefficients are kept in ascending order with no trailing zeros; the zero
//! polynomial has an empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul};

use crate::cosets;
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::gf4ext::ExtField;
use crate::linalg::Gf4Vector;

/// Largest supported block length per circulant.
pub const MAX_BLOCK_LEN: usize = 255;

/// A polynomial over GF(4) in dense ascending-coefficient form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Gf4>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Gf4::ONE],
        }
    }

    /// `coeff · x^degree`
    pub fn monomial(degree: usize, coeff: Gf4) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Gf4::ZERO; degree + 1];
        coeffs[degree] = coeff;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Gf4>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_digits(digits: &[u8]) -> Result<Poly> {
        let coeffs = digits
            .iter()
            .map(|&d| {
                Gf4::new(d).ok_or_else(|| Error::Parse {
                    position: 0,
                    message: format!("digit {d} outside 0..=3"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Gf4] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Gf4 {
        self.coeffs.get(i).copied().unwrap_or(Gf4::ZERO)
    }

    pub fn leading_coeff(&self) -> Gf4 {
        self.coeffs.last().copied().unwrap_or(Gf4::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Gf4::ONE
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff().inv() {
            Some(inv) => self.scaled(inv),
            None => Poly::zero(),
        }
    }

    pub fn scaled(&self, s: Gf4) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| s * c).collect())
    }

    pub fn eval(&self, x: Gf4) -> Gf4 {
        let mut acc = Gf4::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient-wise conjugation (the Frobenius on coefficients).
    pub fn conj_coeffs(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    /// The plain reciprocal x^deg(p) · p(1/x); fixes polynomials with
    /// symmetric coefficients. Zero maps to zero.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// Quotient and remainder; errors when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(d_deg) = divisor.degree() else {
            return Err(Error::ZeroDivisor);
        };
        let lead_inv = divisor.leading_coeff().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Gf4::ZERO; self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let c = *rem.last().expect("nonempty") * lead_inv;
            let shift = rem.len() - 1 - d_deg;
            if !c.is_zero() {
                quot[shift] = c;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] += c * dc;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((Poly::from_coeffs(quot), Poly { coeffs: rem }))
    }

    /// True iff `self` divides `other`; the zero divisor is rejected.
    pub fn divides(&self, other: &Poly) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.div_rem_into(other)?.is_zero())
    }

    fn div_rem_into(&self, dividend: &Poly) -> Result<Poly> {
        dividend.div_rem(self).map(|(_, r)| r)
    }

    /// Monic gcd by Euclid's algorithm; gcd(0, 0) is an error.
    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Coefficient vector of a fixed length; the degree must fit.
    pub fn coeff_vector(&self, len: usize) -> Result<Gf4Vector> {
        if self.coeffs.len() > len {
            return Err(Error::DegreeTooLarge {
                degree: self.coeffs.len() - 1,
                limit: len,
            });
        }
        let mut v = self.coeffs.clone();
        v.resize(len, Gf4::ZERO);
        Ok(Gf4Vector::new(v))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Gf4::ZERO; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Gf4::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coeff_string(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Parses the compressed coefficient-string notation.
///
/// The grammar: a sequence of atoms, each a digit in {0,1,2,3} or a
/// parenthesized digit group, optionally followed by `^{k}` or `^k` meaning
/// k-fold repetition. Coefficients read in ascending order, so `"1101"` is
/// 1 + x + x³ and `"130^{2}21"` is 1 + ω²x + ωx⁴ + x⁵.
pub fn parse_coeff_string(s: &str) -> Result<Poly> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty coefficient string".into(),
        });
    }
    let mut coeffs: Vec<Gf4> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let atom_start = i;
        let mut group = Vec::new();
        match bytes[i] {
            b'0'..=b'3' => {
                group.push(Gf4::new(bytes[i] - b'0').expect("digit < 4"));
                i += 1;
            }
            b'(' => {
                i += 1;
                while i < bytes.len() && bytes[i] != b')' {
                    match bytes[i] {
                        b'0'..=b'3' => group.push(Gf4::new(bytes[i] - b'0').expect("digit < 4")),
                        c => {
                            return Err(Error::Parse {
                                position: i,
                                message: format!("unexpected byte {:?} inside group", c as char),
                            })
                        }
                    }
                    i += 1;
                }
                if i == bytes.len() {
                    return Err(Error::Parse {
                        position: atom_start,
                        message: "unterminated group".into(),
                    });
                }
                if group.is_empty() {
                    return Err(Error::Parse {
                        position: atom_start,
                        message: "empty group".into(),
                    });
                }
                i += 1; // consume ')'
            }
            c => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected byte {:?}", c as char),
                })
            }
        }
        let mut repeat = 1usize;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let braced = i < bytes.len() && bytes[i] == b'{';
            if braced {
                i += 1;
            }
            let digits_start = i;
            if braced {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            } else if i < bytes.len() && bytes[i].is_ascii_digit() {
                // an unbraced exponent binds to a single digit, so "130^221"
                // reads as 130^{2} followed by the coefficients 2, 1
                i += 1;
            }
            if i == digits_start {
                return Err(Error::Parse {
                    position: digits_start,
                    message: "exponent must be a decimal number".into(),
                });
            }
            repeat = s[digits_start..i].parse().map_err(|_| Error::Parse {
                position: digits_start,
                message: "exponent out of range".into(),
            })?;
            if repeat == 0 {
                return Err(Error::Parse {
                    position: digits_start,
                    message: "exponent must be at least 1".into(),
                });
            }
            if braced {
                if i == bytes.len() || bytes[i] != b'}' {
                    return Err(Error::Parse {
                        position: i,
                        message: "missing closing brace in exponent".into(),
                    });
                }
                i += 1;
            }
        }
        if group.len() * repeat + coeffs.len() > 4 * MAX_BLOCK_LEN {
            return Err(Error::Parse {
                position: atom_start,
                message: "coefficient string expands beyond the supported length".into(),
            });
        }
        for _ in 0..repeat {
            coeffs.extend_from_slice(&group);
        }
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Inverse of [`parse_coeff_string`]: digits in ascending order with maximal
/// single-digit runs of length ≥ 2 compressed as `d^{k}`.
pub fn format_coeff_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let coeffs = p.coeffs();
    let mut i = 0;
    while i < coeffs.len() {
        let digit = coeffs[i].digit();
        let mut run = 1;
        while i + run < coeffs.len() && coeffs[i + run].digit() == digit {
            run += 1;
        }
        if run >= 2 {
            out.push_str(&format!("{digit}^{{{run}}}"));
        } else {
            out.push_str(&digit.to_string());
        }
        i += run;
    }
    out
}

/// The quotient ring F₄[x]/(xⁿ−1) for an odd block length n; xⁿ−1 is then
/// squarefree, which everything downstream depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientContext {
    n: usize,
}

impl QuotientContext {
    pub fn new(n: usize) -> Result<QuotientContext> {
        if n == 0 || n > MAX_BLOCK_LEN {
            return Err(Error::LengthOutOfRange(n, MAX_BLOCK_LEN));
        }
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        Ok(QuotientContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// xⁿ − 1 (equal to xⁿ + 1 in characteristic 2).
    pub fn modulus(&self) -> Poly {
        let mut coeffs = vec![Gf4::ZERO; self.n + 1];
        coeffs[0] = Gf4::ONE;
        coeffs[self.n] = Gf4::ONE;
        Poly { coeffs }
    }

    /// Reduces exponents modulo n.
    pub fn reduce(&self, p: &Poly) -> Poly {
        if p.coeffs().len() <= self.n {
            return p.clone();
        }
        let mut coeffs = vec![Gf4::ZERO; self.n];
        for (i, &c) in p.coeffs().iter().enumerate() {
            coeffs[i % self.n] += c;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    pub fn addmod(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a + b))
    }

    /// The reversal ḡ(x) = Σ gᵢ x^(n−i) mod (xⁿ−1): pure index reversal with
    /// no coefficient conjugation.
    pub fn reciprocal(&self, g: &Poly) -> Result<Poly> {
        if g.coeffs().len() > self.n {
            return Err(Error::DegreeTooLarge {
                degree: g.coeffs().len() - 1,
                limit: self.n,
            });
        }
        let mut coeffs = vec![Gf4::ZERO; self.n];
        for (i, &c) in g.coeffs().iter().enumerate() {
            coeffs[(self.n - i) % self.n] += c;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Conjugate-reciprocal ν̄(x) = Σ ν̄ᵢ x^(n−i) mod (xⁿ−1).
    ///
    /// This is the adjoint of multiplication with respect to the Hermitian
    /// inner product on coefficient vectors: ⟨[f·g], [h]⟩ = ⟨[g], [f̄·h]⟩.
    /// The plain reversal without conjugation does not satisfy this identity
    /// (the test suite pins the distinction), so dual constructions use this
    /// variant throughout.
    pub fn hermitian_adjoint(&self, g: &Poly) -> Result<Poly> {
        self.reciprocal(g).map(|p| p.conj_coeffs())
    }

    /// The minimal polynomial over GF(4) of γ^rep for each 4-cyclotomic
    /// coset, keyed by the canonical coset representative and sorted by it.
    /// γ is a fixed primitive n-th root of unity chosen deterministically.
    pub fn minimal_polynomials(&self) -> Result<Vec<(usize, Poly)>> {
        let cosets = cosets::all_cosets(self.n)?;
        let m = multiplicative_order_of_4(self.n);
        let field = ExtField::new(m);
        let gamma = field.primitive_root_of_unity(self.n)?;

        let mut gamma_pow = Vec::with_capacity(self.n);
        let mut acc = field.one();
        for _ in 0..self.n {
            gamma_pow.push(acc.clone());
            acc = field.mul(&acc, &gamma);
        }

        let mut out = Vec::with_capacity(cosets.len());
        for coset in &cosets {
            // Π_{j in coset} (x − γ^j), computed in the extension field
            let mut poly = vec![field.one()];
            for &j in coset.members() {
                let root = &gamma_pow[j];
                let mut next = vec![field.zero(); poly.len() + 1];
                for (idx, c) in poly.iter().enumerate() {
                    next[idx + 1] = field.add(&next[idx + 1], c);
                    let t = field.mul(c, root);
                    next[idx] = field.add(&next[idx], &t); // −γ^j = γ^j in char 2
                }
                poly = next;
            }
            let coeffs = poly
                .iter()
                .map(|c| {
                    field.to_base_field(c).ok_or_else(|| {
                        Error::Invariant(format!(
                            "coset minimal polynomial for rep {} has a coefficient outside GF(4)",
                            coset.rep()
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.push((coset.rep(), Poly::from_coeffs(coeffs)));
        }

        let product = out
            .iter()
            .fold(Poly::one(), |acc, (_, factor)| &acc * factor);
        if product != self.modulus() {
            return Err(Error::Invariant(format!(
                "coset minimal polynomials do not multiply to x^{} - 1",
                self.n
            )));
        }
        Ok(out)
    }

    /// Irreducible factorization of xⁿ−1 over GF(4); factor degrees are the
    /// 4-cyclotomic coset sizes mod n.
    pub fn factor_xn_minus_1(&self) -> Result<Vec<Poly>> {
        Ok(self
            .minimal_polynomials()?
            .into_iter()
            .map(|(_, p)| p)
            .collect())
    }
}

/// Smallest m ≥ 1 with 4^m ≡ 1 (mod n); n must be odd, so 4 is a unit.
pub fn multiplicative_order_of_4(n: usize) -> usize {
    assert!(n % 2 == 1 && n > 0, "order of 4 requires odd n");
    if n == 1 {
        return 1;
    }
    let mut pow = 4 % n;
    let mut m = 1;
    while pow != 1 {
        pow = pow * 4 % n;
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn poly(digits: &[u8]) -> Poly {
        Poly::from_digits(digits).unwrap()
    }

    fn random_poly(rng: &mut impl Rng, max_len: usize) -> Poly {
        let len = rng.gen_range(0..=max_len);
        Poly::from_coeffs((0..len).map(|_| rng.gen()).collect())
    }

    #[test]
    fn parse_plain_digits() {
        let p = parse_coeff_string("1101").unwrap();
        assert_eq!(p, poly(&[1, 1, 0, 1]));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn parse_exponents_both_syntaxes() {
        let p = parse_coeff_string("130^{2}21").unwrap();
        assert_eq!(p, poly(&[1, 3, 0, 0, 2, 1]));
        assert_eq!(parse_coeff_string("130^221").unwrap(), p);
    }

    #[test]
    fn parse_groups() {
        let p = parse_coeff_string("3^{2}1^{2}(31)^{2}12(21)^{2}").unwrap();
        assert_eq!(p, poly(&[3, 3, 1, 1, 3, 1, 3, 1, 1, 2, 2, 1, 2, 1]));
        assert_eq!(p.degree(), Some(13));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_coeff_string("12x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_coeff_string("14") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_coeff_string("1^{0}").is_err());
        assert!(parse_coeff_string("1^").is_err());
        assert!(parse_coeff_string("(12").is_err());
        assert!(parse_coeff_string("()1").is_err());
        assert!(parse_coeff_string("").is_err());
    }

    #[test]
    fn format_compresses_runs() {
        assert_eq!(format_coeff_string(&poly(&[1, 1, 0, 1])), "1^{2}01");
        assert_eq!(format_coeff_string(&Poly::zero()), "0");
        assert_eq!(format_coeff_string(&poly(&[1, 3, 0, 0, 2, 1])), "130^{2}21");
    }

    #[test]
    fn parse_format_round_trip_random() {
        let mut rng = ChaCha12Rng::seed_from_u64(0x0107);
        for _ in 0..1000 {
            let p = random_poly(&mut rng, 40);
            let s = format_coeff_string(&p);
            assert_eq!(parse_coeff_string(&s).unwrap(), p, "string {s}");
        }
    }

    #[test]
    fn mulmod_identity_and_wraparound() {
        let ctx = QuotientContext::new(7).unwrap();
        let a = poly(&[1, 2, 0, 3]);
        assert_eq!(ctx.mulmod(&a, &Poly::one()), a);
        let xn_minus_1 = ctx.mulmod(&Poly::monomial(6, Gf4::ONE), &Poly::monomial(1, Gf4::ONE));
        assert_eq!(xn_minus_1, Poly::one());
    }

    /// Independent oracle: schoolbook multiply then long-divide by x⁷−1.
    #[test]
    fn mulmod_matches_long_division() {
        let ctx = QuotientContext::new(7).unwrap();
        let modulus = ctx.modulus();
        let mut rng = ChaCha12Rng::seed_from_u64(0xabcd);
        for _ in 0..200 {
            let a = random_poly(&mut rng, 12);
            let b = random_poly(&mut rng, 12);
            let (_, expected) = (&a * &b).div_rem(&modulus).unwrap();
            assert_eq!(ctx.mulmod(&a, &b), expected);
        }
    }

    #[test]
    fn quotient_ring_axioms_random() {
        let mut rng = ChaCha12Rng::seed_from_u64(0x2222);
        for &n in &[3usize, 9, 15, 31] {
            let ctx = QuotientContext::new(n).unwrap();
            for _ in 0..50 {
                let a = random_poly(&mut rng, n);
                let b = random_poly(&mut rng, n);
                let c = random_poly(&mut rng, n);
                assert_eq!(ctx.mulmod(&a, &b), ctx.mulmod(&b, &a));
                assert_eq!(
                    ctx.mulmod(&ctx.mulmod(&a, &b), &c),
                    ctx.mulmod(&a, &ctx.mulmod(&b, &c))
                );
                assert_eq!(
                    ctx.mulmod(&a, &ctx.addmod(&b, &c)),
                    ctx.addmod(&ctx.mulmod(&a, &b), &ctx.mulmod(&a, &c))
                );
            }
        }
    }

    #[test]
    fn gcd_trivia() {
        let f = poly(&[2, 0, 1]); // ω + x²
        assert_eq!(Poly::gcd(&f, &f).unwrap(), f.monic());
        // x² + 1 = (x + 1)² in characteristic 2
        let a = poly(&[1, 0, 1]);
        let b = poly(&[1, 1]);
        assert_eq!(Poly::gcd(&a, &b).unwrap(), b);
        assert!(matches!(
            Poly::gcd(&Poly::zero(), &Poly::zero()),
            Err(Error::GcdUndefined)
        ));
    }

    #[test]
    fn divides_examples() {
        let n7 = QuotientContext::new(7).unwrap().modulus();
        assert!(poly(&[1, 1]).divides(&n7).unwrap()); // x−1 | xⁿ−1
        assert!(poly(&[1, 1, 0, 1]).divides(&n7).unwrap()); // 1+x+x³ | x⁷−1
        assert!(!poly(&[0, 1]).divides(&n7).unwrap()); // x ∤ xⁿ−1
        assert!(matches!(
            Poly::zero().divides(&n7),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn gcd_consistent_with_divides() {
        let ctx = QuotientContext::new(21).unwrap();
        let g1 = parse_coeff_string("1101").unwrap();
        let gcd = Poly::gcd(&g1, &ctx.modulus()).unwrap();
        assert!(g1.divides(&ctx.modulus()).unwrap());
        assert_eq!(gcd, g1.monic());
    }

    #[test]
    fn reciprocal_examples() {
        let ctx = QuotientContext::new(7).unwrap();
        let g = poly(&[1, 1, 0, 1]);
        assert_eq!(ctx.reciprocal(&g).unwrap(), poly(&[1, 0, 0, 0, 1, 0, 1]));
        let c = poly(&[2]);
        assert_eq!(ctx.reciprocal(&c).unwrap(), c);
        let mut rng = ChaCha12Rng::seed_from_u64(0x777);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 7);
            let twice = ctx.reciprocal(&ctx.reciprocal(&p).unwrap()).unwrap();
            assert_eq!(twice, p);
        }
    }

    #[test]
    fn conj_coeffs_examples() {
        assert_eq!(poly(&[1, 2]).conj_coeffs(), poly(&[1, 3]));
        let binary = poly(&[1, 0, 1, 1]);
        assert_eq!(binary.conj_coeffs(), binary);
        let p = poly(&[2, 3, 1, 0, 2]);
        assert_eq!(p.conj_coeffs().conj_coeffs(), p);
    }

    #[test]
    fn factor_small_lengths() {
        let ctx = QuotientContext::new(3).unwrap();
        let factors = ctx.factor_xn_minus_1().unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|f| f.degree() == Some(1)));

        let ctx = QuotientContext::new(5).unwrap();
        let mut degrees: Vec<_> = ctx
            .factor_xn_minus_1()
            .unwrap()
            .iter()
            .map(|f| f.degree().unwrap())
            .collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 2, 2]);

        let ctx = QuotientContext::new(21).unwrap();
        let mut degrees: Vec<_> = ctx
            .factor_xn_minus_1()
            .unwrap()
            .iter()
            .map(|f| f.degree().unwrap())
            .collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn factors_are_pairwise_coprime() {
        for &n in &[9usize, 15, 21] {
            let ctx = QuotientContext::new(n).unwrap();
            let factors = ctx.factor_xn_minus_1().unwrap();
            for (i, f) in factors.iter().enumerate() {
                for g in &factors[i + 1..] {
                    assert_eq!(Poly::gcd(f, g).unwrap(), Poly::one());
                }
            }
        }
    }

    #[test]
    fn even_length_rejected() {
        assert!(matches!(QuotientContext::new(8), Err(Error::EvenLength(8))));
        assert!(QuotientContext::new(0).is_err());
    }

    #[test]
    fn order_of_4() {
        assert_eq!(multiplicative_order_of_4(3), 1);
        assert_eq!(multiplicative_order_of_4(5), 2);
        assert_eq!(multiplicative_order_of_4(7), 3);
        assert_eq!(multiplicative_order_of_4(21), 3);
        assert_eq!(multiplicative_order_of_4(37), 18);
    }
}

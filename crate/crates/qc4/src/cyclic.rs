//! Cyclic codes over GF(4): generator polynomials from defining sets, check
//! polynomials, Hermitian dual generators, and circulant matrices.

use crate::cosets::DefiningSet;
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::linalg::{Gf4Matrix, Gf4Vector};
use crate::poly::{format_coeff_string, Poly, QuotientContext};

/// A cyclic code ⟨g⟩ of odd length n, with g a monic divisor of xⁿ−1.
/// The zero code (g = xⁿ−1, dimension 0) is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    ctx: QuotientContext,
    gen: Poly,
    defining_set: Option<DefiningSet>,
}

impl CyclicCode {
    /// Builds ⟨g⟩ after normalizing g to monic form and checking that it
    /// divides xⁿ−1.
    pub fn from_gen_poly(n: usize, g: &Poly) -> Result<CyclicCode> {
        let ctx = QuotientContext::new(n)?;
        if g.is_zero() {
            return Err(Error::NotADivisor("0".into(), n));
        }
        let monic = g.monic();
        if !monic.divides(&ctx.modulus())? {
            return Err(Error::NotADivisor(format_coeff_string(&monic), n));
        }
        Ok(CyclicCode {
            ctx,
            gen: monic,
            defining_set: None,
        })
    }

    /// Generator polynomial from a defining set: the product of the minimal
    /// polynomials of the member cosets. Degree equals |elements(T)|.
    pub fn from_defining_set(t: &DefiningSet) -> Result<CyclicCode> {
        let ctx = QuotientContext::new(t.n())?;
        let minimal = ctx.minimal_polynomials()?;
        let mut gen = Poly::one();
        for (rep, poly) in &minimal {
            if t.reps().contains(rep) {
                gen = &gen * poly;
            }
        }
        debug_assert_eq!(gen.degree().unwrap_or(0), t.elements().len());
        Ok(CyclicCode {
            ctx,
            gen,
            defining_set: Some(t.clone()),
        })
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn context(&self) -> &QuotientContext {
        &self.ctx
    }

    pub fn gen_poly(&self) -> &Poly {
        &self.gen
    }

    pub fn defining_set(&self) -> Option<&DefiningSet> {
        self.defining_set.as_ref()
    }

    pub fn dimension(&self) -> usize {
        self.n() - self.gen.degree().expect("generator is nonzero")
    }

    /// h with g·h = xⁿ−1 exactly.
    pub fn check_poly(&self) -> Poly {
        let (q, r) = self
            .ctx
            .modulus()
            .div_rem(&self.gen)
            .expect("generator is nonzero");
        debug_assert!(r.is_zero());
        q
    }

    /// Monic generator of the Hermitian dual code: the conjugate reciprocal
    /// of the check polynomial. Orthogonality against the primal circulant is
    /// verified directly; a failure here means the adjoint convention broke
    /// and is reported as an error rather than silently accepted.
    pub fn hermitian_dual_gen(&self) -> Result<Poly> {
        let h = self.check_poly();
        let dual = h.reversed().conj_coeffs().monic();
        let primal_rows = Circulant::from_poly(&self.ctx.reduce(&self.gen), self.n())?.to_matrix();
        let dual_rows = Circulant::from_poly(&self.ctx.reduce(&dual), self.n())?.to_matrix();
        if !primal_rows.hermitian_gram(&dual_rows)?.is_zero() {
            return Err(Error::AdjointMismatch);
        }
        Ok(dual)
    }
}

/// An m×m circulant matrix: row i is the first row right-rotated i places,
/// equivalently the coefficient vector of xⁱ·p mod (x^m − 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circulant {
    m: usize,
    first_row: Gf4Vector,
}

impl Circulant {
    /// The circulant of multiplication by p; requires deg p < m.
    pub fn from_poly(p: &Poly, m: usize) -> Result<Circulant> {
        Ok(Circulant {
            m,
            first_row: p.coeff_vector(m)?,
        })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn first_row(&self) -> &Gf4Vector {
        &self.first_row
    }

    pub fn row(&self, i: usize) -> Gf4Vector {
        let mut coords = vec![Gf4::ZERO; self.m];
        for (j, c) in coords.iter_mut().enumerate() {
            *c = self.first_row.get((j + self.m - i % self.m) % self.m);
        }
        Gf4Vector::new(coords)
    }

    pub fn to_matrix(&self) -> Gf4Matrix {
        Gf4Matrix::from_rows((0..self.m).map(|i| self.row(i)).collect())
            .expect("rows share length m")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets;
    use crate::poly::parse_coeff_string;

    #[test]
    fn defining_set_generators() {
        let empty = cosets::DefiningSet::empty(21).unwrap();
        let full_code = CyclicCode::from_defining_set(&empty).unwrap();
        assert_eq!(full_code.gen_poly(), &Poly::one());
        assert_eq!(full_code.dimension(), 21);

        let all = cosets::DefiningSet::full(21).unwrap();
        let zero_code = CyclicCode::from_defining_set(&all).unwrap();
        assert_eq!(zero_code.gen_poly(), &zero_code.context().modulus());
        assert_eq!(zero_code.dimension(), 0);

        let c7 = cosets::DefiningSet::from_reps(21, &[7]).unwrap();
        let code = CyclicCode::from_defining_set(&c7).unwrap();
        assert_eq!(code.gen_poly().degree(), Some(1));
    }

    #[test]
    fn check_poly_edges() {
        let one = CyclicCode::from_gen_poly(9, &Poly::one()).unwrap();
        assert_eq!(one.check_poly(), one.context().modulus());
        let zero_code = CyclicCode::from_gen_poly(9, &one.context().modulus()).unwrap();
        assert_eq!(zero_code.check_poly(), Poly::one());
    }

    #[test]
    fn catalog_g1_check_poly_multiplies_back() {
        let g1 = parse_coeff_string("1101").unwrap();
        let code = CyclicCode::from_gen_poly(21, &g1).unwrap();
        let product = &g1 * &code.check_poly();
        assert_eq!(product, code.context().modulus());
    }

    #[test]
    fn dual_gen_edges() {
        let n = 9;
        let modulus = QuotientContext::new(n).unwrap().modulus();
        let zero_code = CyclicCode::from_gen_poly(n, &modulus).unwrap();
        assert_eq!(zero_code.hermitian_dual_gen().unwrap(), Poly::one());

        let g = Poly::from_digits(&[1, 1]).unwrap(); // x − 1
        let code = CyclicCode::from_gen_poly(3, &g).unwrap();
        let dual = code.hermitian_dual_gen().unwrap();
        assert_eq!(dual.degree(), Some(2));
        let dual_code = CyclicCode::from_gen_poly(3, &dual).unwrap();
        assert_eq!(code.dimension() + dual_code.dimension(), 3);
    }

    #[test]
    fn catalog_g1_dual_rows_are_orthogonal() {
        let g1 = parse_coeff_string("1101").unwrap();
        let code = CyclicCode::from_gen_poly(21, &g1).unwrap();
        let dual = code.hermitian_dual_gen().unwrap();
        let a = Circulant::from_poly(&g1, 21).unwrap().to_matrix();
        let b = Circulant::from_poly(&dual, 21).unwrap().to_matrix();
        assert!(a.hermitian_gram(&b).unwrap().is_zero());
    }

    /// For every divisor of xⁿ−1: complementary dimensions and mutual
    /// Hermitian orthogonality of ⟨g⟩ and ⟨g^⊥⟩.
    #[test]
    fn dual_dimensions_and_orthogonality_all_divisors() {
        for &n in &[3usize, 5, 7, 9, 15] {
            let ctx = QuotientContext::new(n).unwrap();
            let factors = ctx.factor_xn_minus_1().unwrap();
            let nf = factors.len();
            for mask in 0..1usize << nf {
                let mut g = Poly::one();
                for (i, f) in factors.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g = &g * f;
                    }
                }
                let code = CyclicCode::from_gen_poly(n, &g).unwrap();
                let dual_gen = code.hermitian_dual_gen().unwrap();
                let dual = CyclicCode::from_gen_poly(n, &dual_gen).unwrap();
                assert_eq!(code.dimension() + dual.dimension(), n);
                let a = Circulant::from_poly(&ctx.reduce(&g), n).unwrap().to_matrix();
                let b = Circulant::from_poly(&ctx.reduce(&dual_gen), n)
                    .unwrap()
                    .to_matrix();
                assert!(a.hermitian_gram(&b).unwrap().is_zero(), "n={n} g={g}");
            }
        }
    }

    /// Defining-set test matches generator-polynomial divisibility.
    #[test]
    fn defset_condition_matches_divisibility() {
        for &n in &[3usize, 5, 7, 9, 11, 13, 15, 21, 31] {
            let cosets = cosets::all_cosets(n).unwrap();
            let reps: Vec<_> = cosets.iter().map(|c| c.rep()).collect();
            let limit = 1usize << reps.len().min(10);
            for mask in 0..limit {
                let chosen: Vec<usize> = reps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                let t = DefiningSet::from_reps(n, &chosen).unwrap();
                let code = CyclicCode::from_defining_set(&t).unwrap();
                let dual_gen = code.hermitian_dual_gen().unwrap();
                let by_divisor = code.gen_poly().divides(&dual_gen).unwrap();
                assert_eq!(
                    t.is_dual_containing(),
                    by_divisor,
                    "n={n} reps={chosen:?}"
                );
            }
        }
    }

    #[test]
    fn circulant_shapes() {
        let id = Circulant::from_poly(&Poly::one(), 4).unwrap().to_matrix();
        assert_eq!(id, Gf4Matrix::identity(4));

        let zero = Circulant::from_poly(&Poly::zero(), 3).unwrap().to_matrix();
        assert!(zero.is_zero());

        // row i is the coefficient vector of xⁱ·p
        let ctx = QuotientContext::new(5).unwrap();
        let p = Poly::from_digits(&[1, 0, 2]).unwrap();
        let circ = Circulant::from_poly(&p, 5).unwrap();
        for i in 0..5 {
            let shifted = ctx.mulmod(&p, &Poly::monomial(i, Gf4::ONE));
            assert_eq!(circ.row(i), shifted.coeff_vector(5).unwrap());
        }

        // rank of the circulant equals n − deg gcd(p, xⁿ−1)
        let rank = circ.to_matrix().rank();
        let gcd = Poly::gcd(&p, &ctx.modulus()).unwrap();
        assert_eq!(rank, 5 - gcd.degree().unwrap());
    }

    #[test]
    fn circulant_rank_matches_gcd_for_divisors() {
        let n = 15;
        let ctx = QuotientContext::new(n).unwrap();
        for g in ctx.factor_xn_minus_1().unwrap() {
            let rank = Circulant::from_poly(&g, n).unwrap().to_matrix().rank();
            assert_eq!(rank, n - g.degree().unwrap());
        }
    }

    #[test]
    fn circulant_degree_guard() {
        let p = Poly::monomial(5, Gf4::ONE);
        assert!(matches!(
            Circulant::from_poly(&p, 4),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn non_divisor_rejected() {
        let p = Poly::from_digits(&[0, 1]).unwrap(); // x
        assert!(matches!(
            CyclicCode::from_gen_poly(7, &p),
            Err(Error::NotADivisor(..))
        ));
    }
}

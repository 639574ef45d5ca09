//! 4-cyclotomic cosets modulo an odd n, their skew-symmetry classification,
//! and defining sets of cyclic codes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_modulus(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::LengthOutOfRange(0, crate::poly::MAX_BLOCK_LEN));
    }
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    Ok(())
}

/// The orbit of a residue under multiplication by 4 modulo n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coset {
    n: usize,
    rep: usize,
    members: Vec<usize>,
}

impl Coset {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical representative: the smallest member.
    pub fn rep(&self) -> usize {
        self.rep
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.members.binary_search(&residue).is_ok()
    }

    /// Skew-symmetric iff n − 2·rep (mod n) lands back in the coset;
    /// otherwise reports the canonical representative of the partner coset
    /// C_{n−2i}, with which it forms a skew-asymmetric pair.
    pub fn classify(&self) -> CosetClass {
        let partner_seed = (2 * self.n - 2 * self.rep) % self.n;
        if self.contains(partner_seed) {
            CosetClass::SkewSymmetric
        } else {
            let partner = coset_of(partner_seed, self.n).expect("same modulus");
            CosetClass::PairedWith(partner.rep())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CosetClass {
    SkewSymmetric,
    PairedWith(usize),
}

/// The full coset containing residue i modulo n.
pub fn coset_of(i: usize, n: usize) -> Result<Coset> {
    check_modulus(n)?;
    if i >= n {
        return Err(Error::ResidueOutOfRange {
            residue: i,
            modulus: n,
        });
    }
    let mut members = vec![i];
    let mut next = i * 4 % n;
    while next != i {
        members.push(next);
        next = next * 4 % n;
    }
    members.sort_unstable();
    Ok(Coset {
        n,
        rep: members[0],
        members,
    })
}

/// All cosets modulo n, sorted by representative; they partition 0..n.
pub fn all_cosets(n: usize) -> Result<Vec<Coset>> {
    check_modulus(n)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let coset = coset_of(i, n)?;
        for &m in coset.members() {
            seen[m] = true;
        }
        out.push(coset);
    }
    Ok(out)
}

/// A union of full 4-cyclotomic cosets: the defining set of a cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSet {
    n: usize,
    reps: Vec<usize>,
    elements: Vec<usize>,
}

impl DefiningSet {
    /// Builds the union of the cosets containing the given residues.
    /// Residues are canonicalized to coset representatives and deduplicated,
    /// so partial cosets cannot be expressed.
    pub fn from_reps(n: usize, residues: &[usize]) -> Result<DefiningSet> {
        check_modulus(n)?;
        let mut reps = Vec::new();
        let mut elements = Vec::new();
        for &r in residues {
            let coset = coset_of(r, n)?;
            if !reps.contains(&coset.rep()) {
                reps.push(coset.rep());
                elements.extend_from_slice(coset.members());
            }
        }
        reps.sort_unstable();
        elements.sort_unstable();
        Ok(DefiningSet { n, reps, elements })
    }

    pub fn empty(n: usize) -> Result<DefiningSet> {
        check_modulus(n)?;
        Ok(DefiningSet {
            n,
            reps: Vec::new(),
            elements: Vec::new(),
        })
    }

    /// Every residue: the defining set of the zero code.
    pub fn full(n: usize) -> Result<DefiningSet> {
        DefiningSet::from_reps(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical coset representatives, ascending.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The union of the member cosets, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn cosets(&self) -> Vec<Coset> {
        self.reps
            .iter()
            .map(|&r| coset_of(r, self.n).expect("validated modulus"))
            .collect()
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.elements.binary_search(&residue).is_ok()
    }

    /// True iff T ∩ T⁻² = ∅ with T⁻² = {−2t mod n : t ∈ T}. This single
    /// condition rules out skew-symmetric member cosets and skew-asymmetric
    /// pairs inside T, and implies the cyclic code with defining set T
    /// contains its Hermitian dual.
    pub fn is_dual_containing(&self) -> bool {
        self.elements
            .iter()
            .all(|&t| !self.contains((2 * self.n - 2 * t) % self.n))
    }
}

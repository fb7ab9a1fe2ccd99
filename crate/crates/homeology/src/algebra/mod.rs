//! Exact linear algebra over `Z`, `Q` and `Z/p`.
//!
//! The integer side works with arbitrary-precision dense matrices and the
//! classical unimodular normal forms (Hermite, Smith); the field side is
//! plain Gaussian elimination. Finitely generated abelian groups are kept in
//! the unique invariant-factor canonical form, so group equality is
//! structural equality.

mod field;
mod group;
mod matrix;
mod normal_forms;
mod subquotient;

pub use field::{fp_kernel, fp_rank, fp_solve, rational_rank, rational_solve};
pub use group::AbelianGroup;
pub use matrix::IntMat;
pub use normal_forms::{ColumnHermite, SmithNormalForm};
pub use subquotient::{QuotientHom, QuotientPresentation, Subquotient};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("denominator lattice is not contained in the numerator lattice")]
    ContainmentViolation,
    #[error("vector is not in the span of the given lattice")]
    NotInSpan,
    #[error("torsion coefficient does not fit the JSON integer range")]
    TorsionOverflow,
}

/// Coefficient choice for every homological computation in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coeffs {
    /// The integers; results carry full torsion.
    Z,
    /// The rationals; results are free and `rank` is the dimension.
    Q,
    /// The prime field `Z/p`; `rank` is the dimension over `Z/p`.
    Mod(u64),
}

impl Coeffs {
    pub fn modp(p: u64) -> Result<Coeffs, AlgebraError> {
        if is_prime(p) {
            Ok(Coeffs::Mod(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Coeffs::Z)
    }

    /// Basis of the kernel of `m` over this coefficient ring, returned as
    /// integer columns (a saturated lattice basis over `Z` and `Q`, lifts of
    /// an `F_p`-basis for `Mod(p)`).
    pub fn kernel(&self, m: &IntMat) -> IntMat {
        match self {
            Coeffs::Z | Coeffs::Q => normal_forms::kernel_basis(m),
            Coeffs::Mod(p) => fp_kernel(m, *p),
        }
    }

    /// Replaces a spanning set by a canonical basis of the subgroup it
    /// generates over this ring: the Hermite basis over `Z`, the saturation
    /// over `Q`, and lifts of an independent subset over `Z/p`.
    pub fn span_basis(&self, gens: &IntMat) -> IntMat {
        match self {
            Coeffs::Z => normal_forms::image_basis(gens),
            Coeffs::Q => normal_forms::saturate(gens),
            Coeffs::Mod(p) => field::fp_column_basis(gens, *p),
        }
    }

    /// Presents the quotient of the span of `num` (columns must be
    /// independent over this ring) by the span of `den`.
    pub fn present_quotient(&self, num: &IntMat, den: &IntMat) -> QuotientPresentation {
        subquotient::present_quotient(self, num, den)
    }
}

impl std::fmt::Display for Coeffs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeffs::Z => write!(f, "Z"),
            Coeffs::Q => write!(f, "Q"),
            Coeffs::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Tensor product of two finitely generated abelian groups.
pub fn group_tensor(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let mut torsion: Vec<BigInt> = Vec::new();
    // free x torsion and torsion x free
    for d in a.torsion() {
        for _ in 0..b.free_rank() {
            torsion.push(d.clone());
        }
    }
    for e in b.torsion() {
        for _ in 0..a.free_rank() {
            torsion.push(e.clone());
        }
    }
    // torsion x torsion contributes Z/gcd
    for d in a.torsion() {
        for e in b.torsion() {
            let g = num_integer::Integer::gcd(d, e);
            torsion.push(g);
        }
    }
    AbelianGroup::normalized(a.free_rank() * b.free_rank(), torsion)
}

/// Direct sum of two finitely generated abelian groups.
pub fn group_direct_sum(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let mut torsion = a.torsion().to_vec();
    torsion.extend_from_slice(b.torsion());
    AbelianGroup::normalized(a.free_rank() + b.free_rank(), torsion)
}

/// Rank of an integer matrix over a field (`Q` behaves like `Z` here: the
/// rank over the fraction field).
pub fn field_rank(m: &IntMat, field: Coeffs) -> usize {
    match field {
        Coeffs::Z | Coeffs::Q => rational_rank(m),
        Coeffs::Mod(p) => fp_rank(m, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(Coeffs::modp(2).is_ok());
        assert!(Coeffs::modp(97).is_ok());
        assert!(Coeffs::modp(1).is_err());
        assert!(Coeffs::modp(91).is_err());
    }

    #[test]
    fn tensor_of_free_groups() {
        let a = AbelianGroup::free(2);
        let b = AbelianGroup::free(3);
        assert_eq!(group_tensor(&a, &b), AbelianGroup::free(6));
    }

    #[test]
    fn tensor_with_torsion() {
        // (Z + Z/2) (x) Z/4 = Z/4 + Z/2
        let a = AbelianGroup::normalized(1, vec![BigInt::from(2)]);
        let b = AbelianGroup::normalized(0, vec![BigInt::from(4)]);
        let t = group_tensor(&a, &b);
        assert_eq!(t.free_rank(), 0);
        assert_eq!(
            t.torsion().to_vec(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn tensor_bilinearity_on_random_groups() {
        // (A + B) (x) C  ==  (A (x) C) + (B (x) C), exercised over a grid of
        // small groups.
        let groups = [
            AbelianGroup::free(0),
            AbelianGroup::free(1),
            AbelianGroup::normalized(0, vec![BigInt::from(2)]),
            AbelianGroup::normalized(1, vec![BigInt::from(6)]),
            AbelianGroup::normalized(0, vec![BigInt::from(4), BigInt::from(12)]),
        ];
        for a in &groups {
            for b in &groups {
                for c in &groups {
                    let lhs = group_tensor(&group_direct_sum(a, b), c);
                    let rhs = group_direct_sum(&group_tensor(a, c), &group_tensor(b, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

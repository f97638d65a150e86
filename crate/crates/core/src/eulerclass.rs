//! Decides whether the Euler class of the normal bundle of the Seifert
//! fibration vanishes: there must be an integer `m` with
//! `m * a_i = 1 (mod b_i)` for every cone pair and `m * e(M) = chi(B)`.
//! For circle bundles (`n = 0`) the condition degenerates to
//! `m * b = 2 - 2g`.

use crate::invariants::SeifertInvariants;
use crate::numtheory::{gcd_i64, mod_inverse, solve_crt, CongruenceSystem};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Which clause of the decision procedure settled the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingReason {
    /// `n = 0`: circle bundle over a surface, decided by `m * b = 2 - 2g`.
    N0Bundle,
    /// The congruences `m * a_i = 1 (mod b_i)` have no common solution.
    CongruenceInconsistent,
    /// `e(M) != 0` but `chi(B)/e(M)` is not an integer compatible with the
    /// congruences.
    EulerCharMismatch,
    /// `e(M) != 0` and `m = chi(B)/e(M)` satisfies every congruence.
    Witness,
    /// `e(M) = 0` while `chi(B) != 0`, so no `m` can work.
    EulerNumberZeroChiNonzero,
    /// `e(M) = chi(B) = 0` and the congruences are consistent.
    ChiZeroEulerZero,
}

impl fmt::Display for VanishingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VanishingReason::N0Bundle => "n0-bundle",
            VanishingReason::CongruenceInconsistent => "congruence-inconsistent",
            VanishingReason::EulerCharMismatch => "euler-char-mismatch",
            VanishingReason::Witness => "witness",
            VanishingReason::EulerNumberZeroChiNonzero => "euler-number-zero-chi-nonzero",
            VanishingReason::ChiZeroEulerZero => "chi-zero-euler-zero",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingVerdict {
    pub vanishes: bool,
    pub witness_m: Option<BigInt>,
    pub reason: VanishingReason,
}

impl VanishingVerdict {
    fn no(reason: VanishingReason) -> Self {
        VanishingVerdict {
            vanishes: false,
            witness_m: None,
            reason,
        }
    }

    fn yes(witness: BigInt, reason: VanishingReason) -> Self {
        VanishingVerdict {
            vanishes: true,
            witness_m: Some(witness),
            reason,
        }
    }
}

/// The congruence system `m * a_i = 1 (mod b_i)`, i.e. `m = a_i^{-1}`.
fn witness_congruences(inv: &SeifertInvariants) -> CongruenceSystem {
    CongruenceSystem::from_pairs(inv.cone_pairs().iter().map(|&(a, o)| {
        let o = BigInt::from(o);
        let r = mod_inverse(&BigInt::from(a), &o).expect("cone pairs are coprime");
        (r, o)
    }))
}

/// Decides vanishing of the Euler class of the normal bundle, with a
/// witness `m` when it does. The input is normalized internally; the answer
/// only depends on the underlying oriented manifold.
pub fn euler_class_vanishes(inv: &SeifertInvariants) -> VanishingVerdict {
    let inv = inv.normalize();

    if inv.cone_point_count() == 0 {
        let target = 2 - 2 * i64::from(inv.genus());
        let b = inv.b();
        let witness = if b == 0 {
            (target == 0).then_some(0)
        } else {
            (target % b == 0).then(|| target / b)
        };
        return match witness {
            Some(m) => VanishingVerdict::yes(BigInt::from(m), VanishingReason::N0Bundle),
            None => VanishingVerdict::no(VanishingReason::N0Bundle),
        };
    }

    let Some((m0, l)) = solve_crt(&witness_congruences(&inv)) else {
        return VanishingVerdict::no(VanishingReason::CongruenceInconsistent);
    };

    let e = inv.euler_number();
    let chi = inv.orbifold_euler_char();
    if !e.is_zero() {
        let ratio = chi / e;
        if ratio.is_integer() {
            let m = ratio.to_integer();
            if ((&m - &m0) % &l).is_zero() {
                return VanishingVerdict::yes(m, VanishingReason::Witness);
            }
        }
        VanishingVerdict::no(VanishingReason::EulerCharMismatch)
    } else if !chi.is_zero() {
        VanishingVerdict::no(VanishingReason::EulerNumberZeroChiNonzero)
    } else {
        VanishingVerdict::yes(m0, VanishingReason::ChiZeroEulerZero)
    }
}

/// Easily checkable necessary condition for vanishing: the manifold is a
/// circle bundle over the torus, or `e(M) = chi(B) = 0`, or both are
/// nonzero with `chi(B)/e(M)` an integer.
pub fn necessary_condition(inv: &SeifertInvariants) -> bool {
    if inv.genus() == 1 && inv.cone_point_count() == 0 {
        return true;
    }
    let e = inv.euler_number();
    let chi = inv.orbifold_euler_char();
    if e.is_zero() {
        chi.is_zero()
    } else {
        !chi.is_zero() && (chi / e).is_integer()
    }
}

/// Necessary condition on the cone data alone: whenever `d = gcd(b_i, b_j)`,
/// the numerators must agree mod `d`.
pub fn gcd_necessary_condition(inv: &SeifertInvariants) -> bool {
    let inv = inv.normalize();
    let pairs = inv.cone_pairs();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let d = gcd_i64(pairs[i].1, pairs[j].1);
            if (pairs[i].0 - pairs[j].0).rem_euclid(d) != 0 {
                return false;
            }
        }
    }
    true
}

/// Whether the integer `b_1 ... b_n * chi(B)` is a multiple of the torsion
/// order `|T_1(M)| = b_1 ... b_n * |e(M)|`. Companion property check for
/// `euler_class_vanishes`; panics when `e(M) = 0`.
pub fn torsion_divisibility_check(inv: &SeifertInvariants) -> bool {
    let e = inv.euler_number();
    assert!(
        !e.is_zero(),
        "torsion_divisibility_check requires e(M) != 0"
    );
    let prod: BigInt = inv
        .cone_pairs()
        .iter()
        .map(|&(_, o)| BigInt::from(o))
        .product();
    let scaled_chi = inv.orbifold_euler_char() * crate::invariants::Rational::from_integer(prod);
    debug_assert!(scaled_chi.is_integer());
    let t = inv.torsion_order();
    (scaled_chi.to_integer() % t).is_zero()
}

//! Existence of a horizontal foliation, i.e. one everywhere transverse to
//! the Seifert fibres. For genus-zero hyperbolic bases (normalized so that
//! `0 < a_i < b_i`) the manifold admits one exactly when
//!
//!   1. `2 - n <= b <= -2`, or
//!   2. `b = -1` and some assignment of roles `(c/d, (d-c)/d, 1/d, ..., 1/d)`
//!      with coprime `0 < c < d` strictly dominates the fractions `a_i/b_i`, or
//!   3. `b = 1 - n` and the same holds for the complements `(b_i - a_i)/b_i`.
//!
//! Genus-zero Euclidean bases admit one exactly when `e(M) = 0` (the `e = 0`
//! manifolds have positive first Betti number and fibre over the circle by
//! tori; the converse is classical and not re-derived here). Spherical bases
//! get a flat `No`. Everything else is out of scope for this predicate.

use crate::invariants::{Geometry, Rational, SeifertInvariants};
use crate::numtheory::gcd_i64;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoliationAnswer {
    Yes,
    No,
    OutOfScope,
}

impl fmt::Display for FoliationAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FoliationAnswer::Yes => "yes",
            FoliationAnswer::No => "no",
            FoliationAnswer::OutOfScope => "out-of-scope",
        };
        f.write_str(s)
    }
}

/// Why the answer is `Yes`. The pair certificates record the coprime pair
/// `(c, d)` and which cone indices `(i, j)` received the roles `c/d` and
/// `(d-c)/d`; every other index was dominated by `1/d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoliationCertificate {
    /// `2 - n <= b <= -2`.
    BInRange,
    /// `b = -1`, fractions strictly below the assigned roles.
    Fractions { c: i64, d: i64, i: usize, j: usize },
    /// `b = 1 - n`, complements strictly below the assigned roles.
    Complements { c: i64, d: i64, i: usize, j: usize },
}

impl FoliationCertificate {
    /// 1, 2 or 3, matching the case split above.
    pub fn condition(&self) -> u8 {
        match self {
            FoliationCertificate::BInRange => 1,
            FoliationCertificate::Fractions { .. } => 2,
            FoliationCertificate::Complements { .. } => 3,
        }
    }
}

impl fmt::Display for FoliationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoliationCertificate::BInRange => f.write_str("cond1"),
            FoliationCertificate::Fractions { c, d, i, j } => {
                write!(f, "cond2 {c}/{d} @({i},{j})")
            }
            FoliationCertificate::Complements { c, d, i, j } => {
                write!(f, "cond3 {c}/{d} @({i},{j})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationVerdict {
    pub answer: FoliationAnswer,
    pub certificate: Option<FoliationCertificate>,
}

impl FoliationVerdict {
    fn no() -> Self {
        FoliationVerdict {
            answer: FoliationAnswer::No,
            certificate: None,
        }
    }

    fn out_of_scope() -> Self {
        FoliationVerdict {
            answer: FoliationAnswer::OutOfScope,
            certificate: None,
        }
    }

    fn yes(certificate: Option<FoliationCertificate>) -> Self {
        FoliationVerdict {
            answer: FoliationAnswer::Yes,
            certificate,
        }
    }
}

/// An eligible `(c, d)` role assignment found by the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EligiblePair {
    pub c: i64,
    pub d: i64,
    pub i: usize,
    pub j: usize,
}

/// Core search: visits eligible `(c, d, i, j)` in a fixed order (ordered
/// index pairs, then `d` ascending, then `c` ascending) and stops early if
/// the visitor returns true. Fractions are given as `(num, den)` pairs with
/// `0 < num < den`. Termination: every index outside `{i, j}` must satisfy
/// `num_k * d < den_k`, which bounds `d` by `(den_k - 1) / num_k`.
fn search_eligible(fractions: &[(i64, i64)], mut visit: impl FnMut(EligiblePair) -> bool) {
    let n = fractions.len();
    debug_assert!(n >= 3);
    debug_assert!(fractions.iter().all(|&(a, o)| 0 < a && a < o));
    let below =
        |a: i64, o: i64, c: i64, d: i64| (a as i128) * (d as i128) < (c as i128) * (o as i128);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let d_max = fractions
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, &(a, o))| (o - 1) / a)
                .min()
                .expect("n >= 3 leaves at least one rest index");
            for d in 2..=d_max {
                for c in 1..d {
                    if gcd_i64(c, d) != 1 {
                        continue;
                    }
                    let (ai, oi) = fractions[i];
                    let (aj, oj) = fractions[j];
                    if below(ai, oi, c, d)
                        && below(aj, oj, d - c, d)
                        && visit(EligiblePair { c, d, i, j })
                    {
                        return;
                    }
                }
            }
        }
    }
}

fn to_i64_fraction(r: &Rational) -> (i64, i64) {
    let num = i64::try_from(r.numer()).expect("fraction numerator fits i64");
    let den = i64::try_from(r.denom()).expect("fraction denominator fits i64");
    (num, den)
}

/// All eligible role assignments for fractions strictly between 0 and 1, in
/// deterministic search order. Requires `n >= 3`.
pub fn eligible_pairs(fractions: &[Rational]) -> Vec<EligiblePair> {
    assert!(fractions.len() >= 3, "need at least three fractions");
    let fracs: Vec<(i64, i64)> = fractions.iter().map(to_i64_fraction).collect();
    assert!(
        fracs.iter().all(|&(a, o)| 0 < a && a < o),
        "fractions must lie strictly between 0 and 1"
    );
    let mut out = Vec::new();
    search_eligible(&fracs, |p| {
        out.push(p);
        false
    });
    out
}

fn first_eligible(fractions: &[(i64, i64)]) -> Option<EligiblePair> {
    let mut found = None;
    search_eligible(fractions, |p| {
        found = Some(p);
        true
    });
    found
}

/// Decides existence of a horizontal foliation. Panics when the input is
/// not in normalized form, since the case split reads `b` off the
/// normalized representative.
pub fn admits_horizontal_foliation(inv: &SeifertInvariants) -> FoliationVerdict {
    assert!(
        inv.is_normalized(),
        "admits_horizontal_foliation requires a normalized tuple"
    );
    match inv.base_geometry() {
        Geometry::BadOrbifold => FoliationVerdict::out_of_scope(),
        _ if inv.genus() > 0 => FoliationVerdict::out_of_scope(),
        Geometry::Spherical => FoliationVerdict::no(),
        Geometry::Euclidean => {
            if inv.euler_number().is_zero() {
                FoliationVerdict::yes(None)
            } else {
                FoliationVerdict::no()
            }
        }
        Geometry::Hyperbolic => {
            let n = inv.cone_point_count() as i64;
            let b = inv.b();
            if 2 - n <= b && b <= -2 {
                FoliationVerdict::yes(Some(FoliationCertificate::BInRange))
            } else if b == -1 {
                match first_eligible(inv.cone_pairs()) {
                    Some(EligiblePair { c, d, i, j }) => {
                        FoliationVerdict::yes(Some(FoliationCertificate::Fractions { c, d, i, j }))
                    }
                    None => FoliationVerdict::no(),
                }
            } else if b == 1 - n {
                let complements: Vec<(i64, i64)> =
                    inv.cone_pairs().iter().map(|&(a, o)| (o - a, o)).collect();
                match first_eligible(&complements) {
                    Some(EligiblePair { c, d, i, j }) => {
                        FoliationVerdict::yes(Some(FoliationCertificate::Complements {
                            c,
                            d,
                            i,
                            j,
                        }))
                    }
                    None => FoliationVerdict::no(),
                }
            } else {
                FoliationVerdict::no()
            }
        }
    }
}

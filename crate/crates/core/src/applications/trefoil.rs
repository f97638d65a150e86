//! Dehn surgery on the right-handed trefoil. The exterior is Seifert
//! fibred over the disc with exceptional fibres of orders 2 and 3, the
//! regular fibre meeting the boundary in the slope `6*mu + lambda`.
//! Rewriting the filling slope `p*mu + q*lambda` in the fibre/section
//! basis makes the filled solid torus a third cone pair
//! `(sign(p - 6q) * q) / |p - 6q|` on top of the fixed data
//! `(0; -1, 1/2, 2/3)`. The sign conventions are pinned down by two
//! checks: `|H_1|` of the result must be `|p|`, and the foliation
//! classification over a large slope grid must match `p/q < 1`.

use crate::eulerclass::euler_class_vanishes;
use crate::foliations::{admits_horizontal_foliation, FoliationAnswer};
use crate::invariants::SeifertInvariants;
use crate::numtheory::gcd_i64;
use std::fmt;

/// A surgery slope `p/q` in lowest terms with `q > 0`, excluding the fibre
/// slope `6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurgerySlope {
    p: i64,
    q: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeError {
    ZeroDenominator,
    NotCoprime { p: i64, q: i64 },
    FibreSlope,
    OutOfRange,
}

/// Keeps every derived quantity (|p - 6q|, folded b, ...) inside i64.
const SLOPE_LIMIT: i64 = 1 << 40;

impl fmt::Display for SlopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeError::ZeroDenominator => write!(f, "q must be nonzero"),
            SlopeError::NotCoprime { p, q } => {
                write!(f, "p/q must be in lowest terms: gcd({p}, {q}) != 1")
            }
            SlopeError::FibreSlope => write!(f, "p/q = 6 is the fibre slope; surgery is excluded"),
            SlopeError::OutOfRange => write!(f, "|p| and |q| must be at most 2^40"),
        }
    }
}

impl std::error::Error for SlopeError {}

impl SurgerySlope {
    /// Negative `q` is folded into `p`; `q = 0` is rejected.
    pub fn new(p: i64, q: i64) -> Result<Self, SlopeError> {
        if q == 0 {
            return Err(SlopeError::ZeroDenominator);
        }
        let in_range = |x: i64| (-SLOPE_LIMIT..=SLOPE_LIMIT).contains(&x);
        if !in_range(p) || !in_range(q) {
            return Err(SlopeError::OutOfRange);
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        if gcd_i64(p, q) != 1 {
            return Err(SlopeError::NotCoprime { p, q });
        }
        if p == 6 * q {
            return Err(SlopeError::FibreSlope);
        }
        Ok(SurgerySlope { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Normalized Seifert invariants of `p/q` surgery on the right-handed
/// trefoil. When `|p - 6q| = 1` the third pair is an integer and folds
/// into `b`, leaving a lens space with two cone points.
pub fn trefoil_surgery(slope: SurgerySlope) -> SeifertInvariants {
    let fibre_coeff = slope.p - 6 * slope.q;
    let third = (slope.q * fibre_coeff.signum(), fibre_coeff.abs());
    SeifertInvariants::new(0, -1, [(1, 2), (2, 3), third])
        .expect("gcd(q, p - 6q) = gcd(q, p) = 1")
        .normalize()
}

/// Whether the surgered manifold carries a co-oriented taut foliation.
/// On these rational homology spheres that is the same as carrying a
/// horizontal foliation; lens-space fillings (`|p - 6q| = 1`) never do.
pub fn trefoil_ctf(slope: SurgerySlope) -> bool {
    let m = trefoil_surgery(slope);
    if m.cone_point_count() < 3 {
        return false;
    }
    admits_horizontal_foliation(&m).answer == FoliationAnswer::Yes
}

/// Whether the surgered manifold carries a co-oriented taut foliation with
/// zero Euler class.
pub fn trefoil_zero_euler_ctf(slope: SurgerySlope) -> bool {
    trefoil_ctf(slope) && euler_class_vanishes(&trefoil_surgery(slope)).vanishes
}

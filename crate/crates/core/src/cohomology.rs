//! Independent decision oracle through the second cohomology of the base
//! orbifold group. `H^2` is presented by generators `A_0, A_1, ..., A_n`
//! with relations `A_0 = b_i A_i`; the normal bundle is trivial exactly
//! when the Euler class of the holonomy of the base lies in the cyclic
//! subgroup generated by the Euler class of the central extension
//! `Z -> pi_1(M) -> pi_1(B)`. Membership is settled by integer linear
//! algebra, so this path shares no code with the congruence criterion.

use crate::invariants::SeifertInvariants;
use crate::numtheory::{lattice_member, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;

/// Presentation of `H^2` of the base orbifold group: `n` relations
/// `A_0 - b_i A_i = 0` over the generators `A_0, ..., A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Presentation {
    cone_orders: Vec<i64>,
}

impl H2Presentation {
    pub fn new(cone_orders: Vec<i64>) -> Self {
        assert!(
            cone_orders.iter().all(|&o| o >= 2),
            "cone orders must be >= 2"
        );
        Self { cone_orders }
    }

    pub fn for_manifold(inv: &SeifertInvariants) -> Self {
        Self::new(inv.cone_pairs().iter().map(|&(_, o)| o).collect())
    }

    pub fn cone_point_count(&self) -> usize {
        self.cone_orders.len()
    }

    pub fn cone_orders(&self) -> &[i64] {
        &self.cone_orders
    }

    /// `n x (n+1)` matrix whose row `i` encodes `A_0 - b_i A_i = 0`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.cone_orders.len();
        let mut m = IntMatrix::zeros(n, n + 1);
        for (i, &o) in self.cone_orders.iter().enumerate() {
            m[(i, 0)] = BigInt::from(1);
            m[(i, i + 1)] = BigInt::from(-o);
        }
        m
    }
}

/// An element of `H^2` written in the generators `A_0, ..., A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    coeffs: Vec<BigInt>,
}

impl CohomologyClass {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(num_traits::Zero::is_zero)
    }
}

/// Euler class of the central extension `Z -> pi_1(M) -> pi_1(B)`:
/// `-(b A_0 + a_1 A_1 + ... + a_n A_n)`.
pub fn euler_class_extension(inv: &SeifertInvariants) -> CohomologyClass {
    let inv = inv.normalize();
    let mut coeffs = vec![BigInt::from(-inv.b())];
    coeffs.extend(inv.cone_pairs().iter().map(|&(a, _)| BigInt::from(-a)));
    CohomologyClass::new(coeffs)
}

/// Euler class of the holonomy representation of the base orbifold group:
/// `(n - (2 - 2g)) A_0 - A_1 - ... - A_n`.
pub fn euler_class_holonomy(inv: &SeifertInvariants) -> CohomologyClass {
    let inv = inv.normalize();
    let n = inv.cone_point_count() as i64;
    let chi_surface = 2 - 2 * i64::from(inv.genus());
    let mut coeffs = vec![BigInt::from(n - chi_surface)];
    coeffs.extend(std::iter::repeat_n(BigInt::from(-1), n as usize));
    CohomologyClass::new(coeffs)
}

/// The unique representative with every `A_i` coefficient in `[0, b_i)`,
/// obtained by moving multiples of `b_i A_i = A_0` into the `A_0` slot.
/// Two classes are equal in `H^2` exactly when their normal forms agree.
pub fn normal_form(cls: &CohomologyClass, pres: &H2Presentation) -> CohomologyClass {
    let n = pres.cone_point_count();
    assert_eq!(cls.coeffs.len(), n + 1, "class does not match presentation");
    let mut head = cls.coeffs[0].clone();
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (i, &o) in pres.cone_orders().iter().enumerate() {
        let o = BigInt::from(o);
        let r = cls.coeffs[i + 1].mod_floor(&o);
        head += (&cls.coeffs[i + 1] - &r) / &o;
        coeffs[i + 1] = r;
    }
    coeffs[0] = head;
    CohomologyClass::new(coeffs)
}

/// Finds `m` with `euler_class_holonomy = m * euler_class_extension` in
/// `H^2`, if any, by solving the integer linear system whose columns are
/// the `n` relation vectors together with the extension class. `None`
/// means the normal bundle is nontrivial.
pub fn vanishes_via_oracle(inv: &SeifertInvariants) -> Option<BigInt> {
    let inv = inv.normalize();
    let n = inv.cone_point_count();
    let pres = H2Presentation::for_manifold(&inv);
    let relations = pres.relation_matrix();
    let extension = euler_class_extension(&inv);
    let target = euler_class_holonomy(&inv);

    let mut m = IntMatrix::zeros(n + 1, n + 1);
    for i in 0..n {
        for r in 0..=n {
            m[(r, i)] = relations[(i, r)].clone();
        }
    }
    for r in 0..=n {
        m[(r, n)] = extension.coeffs()[r].clone();
    }

    let x = lattice_member(&m, target.coeffs())?;
    Some(x[n].clone())
}

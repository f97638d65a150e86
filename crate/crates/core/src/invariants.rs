//! The Seifert invariant tuple `(g; b, a_1/b_1, ..., a_n/b_n)` and its
//! derived data: normal form, Euler number, orbifold Euler characteristic,
//! base geometry and first homology.

use crate::numtheory::{gcd_i64, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Exact rational number; holds Euler numbers and orbifold Euler
/// characteristics. Always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A closed oriented Seifert fibred manifold over an orientable base:
/// genus `g >= 0`, integer coefficient `b`, and cone pairs `(a_i, b_i)`
/// with `b_i >= 2` and `gcd(a_i, b_i) = 1`. A pair with order 1 folds its
/// numerator into `b` at construction, so it is never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor", into = "RawDescriptor")]
pub struct SeifertInvariants {
    genus: u32,
    b: i64,
    cone_pairs: Vec<(i64, i64)>,
}

/// JSON interchange form: `{"genus": g, "b": b, "cone": [[a1,b1],...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    genus: u32,
    b: i64,
    cone: Vec<(i64, i64)>,
}

impl From<SeifertInvariants> for RawDescriptor {
    fn from(inv: SeifertInvariants) -> Self {
        RawDescriptor {
            genus: inv.genus,
            b: inv.b,
            cone: inv.cone_pairs,
        }
    }
}

impl TryFrom<RawDescriptor> for SeifertInvariants {
    type Error = InvariantError;

    fn try_from(raw: RawDescriptor) -> Result<Self, InvariantError> {
        SeifertInvariants::new(raw.genus, raw.b, raw.cone)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// Cone pair with order `< 1`; 1-indexed position recorded.
    OrderNotPositive { index: usize, order: i64 },
    /// Cone pair whose numerator and order share a factor.
    NotCoprime { index: usize, a: i64, b: i64 },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::OrderNotPositive { index, order } => {
                write!(f, "cone pair {index}: order must be >= 1 (got {order})")
            }
            InvariantError::NotCoprime { index, a, b } => {
                write!(f, "cone pair {index}: gcd({a}, {b}) != 1")
            }
        }
    }
}

impl std::error::Error for InvariantError {}

/// Base orbifold of the fibration: a closed orientable genus-`g` surface
/// with cone points of the given orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseOrbifold {
    pub genus: u32,
    pub cone_orders: Vec<i64>,
    pub chi: Rational,
}

/// Geometry of the base orbifold, by the sign of its Euler characteristic.
/// Teardrops and asymmetric spindles are flagged separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
    BadOrbifold,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Geometry::Spherical => "spherical",
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
            Geometry::BadOrbifold => "bad-orbifold",
        };
        f.write_str(s)
    }
}

/// A finitely generated abelian group: free rank plus torsion coefficients
/// in divisibility order, each `>= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Order of the whole group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion_order())
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["Z".to_string(); self.rank];
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl SeifertInvariants {
    /// Builds a tuple from raw data, folding any order-1 pairs into `b`.
    pub fn new<I>(genus: u32, b: i64, cone_pairs: I) -> Result<Self, InvariantError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut b = b;
        let mut pairs = Vec::new();
        for (idx, (a, o)) in cone_pairs.into_iter().enumerate() {
            let index = idx + 1;
            if o < 1 {
                return Err(InvariantError::OrderNotPositive { index, order: o });
            }
            if gcd_i64(a, o) != 1 {
                return Err(InvariantError::NotCoprime { index, a, b: o });
            }
            if o == 1 {
                b += a;
            } else {
                pairs.push((a, o));
            }
        }
        Ok(Self {
            genus,
            b,
            cone_pairs: pairs,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The pairs `(a_i, b_i)` in stored order.
    pub fn cone_pairs(&self) -> &[(i64, i64)] {
        &self.cone_pairs
    }

    /// Number of cone points.
    pub fn cone_point_count(&self) -> usize {
        self.cone_pairs.len()
    }

    /// The equivalent tuple with every `a_i` reduced into `(0, b_i)`,
    /// pairs sorted by `(b_i, a_i)`, and `b` carrying the integer parts so
    /// the Euler number is unchanged. Homeomorphism invariant of the
    /// oriented fibred manifold among tuples in this form.
    pub fn normalize(&self) -> Self {
        let mut b = self.b;
        let mut pairs: Vec<(i64, i64)> = self
            .cone_pairs
            .iter()
            .map(|&(a, o)| {
                let r = a.rem_euclid(o);
                b += (a - r) / o;
                (r, o)
            })
            .collect();
        pairs.sort_unstable_by_key(|&(a, o)| (o, a));
        Self {
            genus: self.genus,
            b,
            cone_pairs: pairs,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.cone_pairs.iter().all(|&(a, o)| 0 < a && a < o)
            && self
                .cone_pairs
                .windows(2)
                .all(|w| (w[0].1, w[0].0) <= (w[1].1, w[1].0))
    }

    /// The same manifold with reversed orientation, renormalized.
    pub fn orientation_reverse(&self) -> Self {
        Self {
            genus: self.genus,
            b: -self.b,
            cone_pairs: self.cone_pairs.iter().map(|&(a, o)| (-a, o)).collect(),
        }
        .normalize()
    }

    /// Orientation- and fibre-preserving equivalence.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// `e(M) = b + sum a_i/b_i`, an invariant of the oriented fibration.
    pub fn euler_number(&self) -> Rational {
        let mut e = Rational::from_integer(BigInt::from(self.b));
        for &(a, o) in &self.cone_pairs {
            e += rational(a, o);
        }
        e
    }

    /// `chi(B) = 2 - 2g - n + sum 1/b_i`.
    pub fn orbifold_euler_char(&self) -> Rational {
        let n = self.cone_pairs.len() as i64;
        let mut chi = Rational::from_integer(BigInt::from(2 - 2 * i64::from(self.genus) - n));
        for &(_, o) in &self.cone_pairs {
            chi += rational(1, o);
        }
        chi
    }

    pub fn base_orbifold(&self) -> BaseOrbifold {
        BaseOrbifold {
            genus: self.genus,
            cone_orders: self.cone_pairs.iter().map(|&(_, o)| o).collect(),
            chi: self.orbifold_euler_char(),
        }
    }

    /// Teardrops (`g = 0`, one cone point) and spindles with distinct orders
    /// are bad; otherwise the sign of `chi(B)` decides.
    pub fn base_geometry(&self) -> Geometry {
        if self.genus == 0 {
            match self.cone_pairs.as_slice() {
                [_] => return Geometry::BadOrbifold,
                [(_, o1), (_, o2)] if o1 != o2 => return Geometry::BadOrbifold,
                _ => {}
            }
        }
        let chi = self.orbifold_euler_char();
        if chi.is_zero() {
            Geometry::Euclidean
        } else if chi.is_positive() {
            Geometry::Spherical
        } else {
            Geometry::Hyperbolic
        }
    }

    /// First homology, computed from the abelianized fundamental group:
    /// `Z^{2g}` plus the cokernel of the `(n+1) x (n+1)` relation matrix
    /// with rows `b_i e_i + a_i e_h` and `sum_i e_i - b e_h`.
    pub fn first_homology(&self) -> HomologyGroup {
        let n = self.cone_pairs.len();
        let mut m = IntMatrix::zeros(n + 1, n + 1);
        for (i, &(a, o)) in self.cone_pairs.iter().enumerate() {
            m[(i, i)] = BigInt::from(o);
            m[(i, n)] = BigInt::from(a);
        }
        for j in 0..n {
            m[(n, j)] = BigInt::from(1);
        }
        m[(n, n)] = BigInt::from(-self.b);

        let snf = smith_normal_form(&m);
        let diag = snf.s.diagonal();
        let zeroes = diag.iter().filter(|d| d.is_zero()).count();
        let torsion: Vec<BigInt> = diag
            .into_iter()
            .filter(|d| !d.is_zero() && !num_traits::One::is_one(d))
            .collect();
        HomologyGroup {
            rank: 2 * self.genus as usize + zeroes,
            torsion,
        }
    }

    /// Order of the torsion subgroup of `H_1(M)`. When `e(M) != 0` this is
    /// the exact integer `b_1 ... b_n * |e(M)|`; when `e(M) = 0` it falls
    /// back to the Smith normal form of the relation matrix.
    pub fn torsion_order(&self) -> BigInt {
        let e = self.euler_number();
        if e.is_zero() {
            return self.first_homology().torsion_order();
        }
        let prod: BigInt = self
            .cone_pairs
            .iter()
            .map(|&(_, o)| BigInt::from(o))
            .product();
        let t = Rational::from_integer(prod) * e.abs();
        debug_assert!(t.is_integer());
        t.to_integer()
    }

    /// `H_1(M)` finite, i.e. `g = 0` and `e(M) != 0`.
    pub fn is_rational_homology_sphere(&self) -> bool {
        self.genus == 0 && !self.euler_number().is_zero()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Compact descriptor `g;b;a1/b1,a2/b2,...` with an empty third field for
/// `n = 0`.
impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};", self.genus, self.b)?;
        for (i, (a, o)) in self.cone_pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}/{o}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseDescriptorError {
    /// Not of the three-field `g;b;...` shape.
    Shape,
    Genus(String),
    B(String),
    ConePair {
        index: usize,
        text: String,
    },
    Invariant(InvariantError),
}

impl fmt::Display for ParseDescriptorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseDescriptorError::Shape => {
                write!(f, "descriptor must have the shape g;b;a1/b1,a2/b2,...")
            }
            ParseDescriptorError::Genus(s) => write!(f, "genus: not a nonnegative integer: {s:?}"),
            ParseDescriptorError::B(s) => write!(f, "b: not an integer: {s:?}"),
            ParseDescriptorError::ConePair { index, text } => {
                write!(
                    f,
                    "cone pair {index}: expected a/b with integers, got {text:?}"
                )
            }
            ParseDescriptorError::Invariant(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ParseDescriptorError {}

impl From<InvariantError> for ParseDescriptorError {
    fn from(e: InvariantError) -> Self {
        ParseDescriptorError::Invariant(e)
    }
}

impl FromStr for SeifertInvariants {
    type Err = ParseDescriptorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(';').collect();
        let [g, b, cone] = parts.as_slice() else {
            return Err(ParseDescriptorError::Shape);
        };
        let genus: u32 = g
            .trim()
            .parse()
            .map_err(|_| ParseDescriptorError::Genus(g.trim().to_string()))?;
        let b: i64 = b
            .trim()
            .parse()
            .map_err(|_| ParseDescriptorError::B(b.trim().to_string()))?;
        let mut pairs = Vec::new();
        let cone = cone.trim();
        if !cone.is_empty() {
            for (idx, frac) in cone.split(',').enumerate() {
                let err = || ParseDescriptorError::ConePair {
                    index: idx + 1,
                    text: frac.trim().to_string(),
                };
                let (a, o) = frac.trim().split_once('/').ok_or_else(err)?;
                let a: i64 = a.trim().parse().map_err(|_| err())?;
                let o: i64 = o.trim().parse().map_err(|_| err())?;
                pairs.push((a, o));
            }
        }
        Ok(SeifertInvariants::new(genus, b, pairs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inv(genus: u32, b: i64, pairs: &[(i64, i64)]) -> SeifertInvariants {
        SeifertInvariants::new(genus, b, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn construction_folds_integer_pairs() {
        let m = inv(0, -1, &[(3, 1), (1, 2)]);
        assert_eq!(m.b(), 2);
        assert_eq!(m.cone_pairs(), &[(1, 2)]);
    }

    #[test]
    fn construction_rejects_bad_pairs() {
        assert_eq!(
            SeifertInvariants::new(0, 0, [(1, 0)]),
            Err(InvariantError::OrderNotPositive { index: 1, order: 0 })
        );
        assert_eq!(
            SeifertInvariants::new(0, 0, [(2, 4)]),
            Err(InvariantError::NotCoprime {
                index: 1,
                a: 2,
                b: 4
            })
        );
    }

    #[test]
    fn normalize_examples() {
        let m = inv(0, 0, &[(3, 2)]);
        assert_eq!(m.normalize(), inv(0, 1, &[(1, 2)]));
        assert_eq!(m.euler_number(), rational(3, 2));
        assert_eq!(m.normalize().euler_number(), rational(3, 2));

        let m = inv(0, 1, &[(2, 3), (-1, 5)]);
        assert_eq!(m.normalize(), inv(0, 0, &[(2, 3), (4, 5)]));

        let m = inv(0, -1, &[(1, 2), (1, 3), (1, 5)]);
        assert_eq!(m.normalize(), m);
    }

    #[test]
    fn orientation_reverse_examples() {
        let m = inv(0, -1, &[(1, 2), (1, 3), (1, 5)]);
        let r = m.orientation_reverse();
        assert_eq!(r, inv(0, -2, &[(1, 2), (2, 3), (4, 5)]));
        assert_eq!(r.euler_number(), -m.euler_number());
        assert_eq!(r.orientation_reverse(), m);

        let t = inv(1, 0, &[]);
        assert_eq!(t.orientation_reverse(), t);
    }

    #[test]
    fn equivalence_follows_the_reduction_moves() {
        // (b, 1/2, 2/3, a3/b3) reversed is (-b-3, 1/2, 1/3, (b3-a3)/b3)
        for (b, a3, b3) in [(-1i64, 2i64, 5i64), (0, 3, 7), (2, 1, 4)] {
            let x = inv(0, b, &[(1, 2), (2, 3), (a3, b3)]);
            let y = inv(0, -b - 3, &[(1, 2), (1, 3), (b3 - a3, b3)]);
            assert!(x.orientation_reverse().equivalent(&y));
        }

        let x = inv(0, -1, &[(1, 2), (1, 3)]);
        let y = inv(0, -1, &[(1, 2), (1, 5)]);
        assert!(!x.equivalent(&y));
    }

    #[test]
    fn euler_number_and_chi_tables() {
        for b in -3..=3 {
            let m = inv(0, b, &[(1, 2), (1, 2), (1, 2)]);
            assert_eq!(m.euler_number(), rational(2 * b + 3, 2));
            assert_eq!(m.orbifold_euler_char(), rational(1, 2));
        }
        for a in [1, 2, 3, 4] {
            let m = inv(0, -1, &[(1, 2), (1, 3), (a, 5)]);
            assert_eq!(m.orbifold_euler_char(), rational(1, 30));
        }
        let m = inv(0, -1, &[(1, 2), (1, 3), (1, 6)]);
        assert!(m.euler_number().is_zero());
        let torus = inv(1, 0, &[]);
        assert!(torus.orbifold_euler_char().is_zero());
        assert!(torus.euler_number().is_zero());
    }

    #[test]
    fn geometry_classification() {
        assert_eq!(
            inv(0, -1, &[(1, 2), (1, 3), (1, 5)]).base_geometry(),
            Geometry::Spherical
        );
        assert_eq!(
            inv(0, 0, &[(1, 2), (1, 4), (1, 4)]).base_geometry(),
            Geometry::Euclidean
        );
        assert_eq!(
            inv(0, 0, &[(1, 2), (1, 3), (1, 7)]).base_geometry(),
            Geometry::Hyperbolic
        );
        assert_eq!(inv(0, 0, &[(1, 3)]).base_geometry(), Geometry::BadOrbifold);
        assert_eq!(
            inv(0, 0, &[(1, 2), (1, 3)]).base_geometry(),
            Geometry::BadOrbifold
        );
        assert_eq!(
            inv(0, 0, &[(1, 3), (2, 3)]).base_geometry(),
            Geometry::Spherical
        );
        assert_eq!(inv(0, 2, &[]).base_geometry(), Geometry::Spherical);
        assert_eq!(inv(1, 1, &[]).base_geometry(), Geometry::Euclidean);
        assert_eq!(inv(2, 0, &[]).base_geometry(), Geometry::Hyperbolic);
    }

    #[test]
    fn first_homology_examples() {
        // Poincare sphere
        let h = inv(0, -1, &[(1, 2), (1, 3), (1, 5)]).first_homology();
        assert_eq!(
            h,
            HomologyGroup {
                rank: 0,
                torsion: vec![]
            }
        );

        // euler number zero gives one free factor; here no torsion at all
        let h = inv(0, -1, &[(1, 2), (1, 3), (1, 6)]).first_homology();
        assert_eq!(h.rank, 1);
        assert!(h.torsion.is_empty());

        // trivial circle bundle over the genus-g surface
        for g in 0..3u32 {
            let h = inv(g, 0, &[]).first_homology();
            assert_eq!(h.rank, 2 * g as usize + 1);
            assert!(h.torsion.is_empty());
        }

        // lens space L(4,1)
        let h = inv(0, 4, &[]).first_homology();
        assert_eq!(h.rank, 0);
        assert_eq!(h.torsion, vec![BigInt::from(4)]);
    }

    #[test]
    fn torsion_order_examples() {
        for b in -3..=3i64 {
            let m = inv(0, b, &[(1, 2), (1, 2), (1, 2)]);
            assert_eq!(m.torsion_order(), BigInt::from((4 * (2 * b + 3)).abs()));
        }
        for (b, a) in [(-1i64, 1i64), (0, 3), (1, 1)] {
            let m = inv(0, b, &[(1, 2), (1, 3), (a, 4)]);
            assert_eq!(
                m.torsion_order(),
                BigInt::from((2 * (12 * b + 10 + 3 * a)).abs())
            );
        }
        // e(M) = 0: falls back to the Smith normal form torsion.
        // Hand reduction of the 5x5 relation matrix gives Z + (Z/2)^2.
        let m = inv(0, -2, &[(1, 2), (1, 2), (1, 2), (1, 2)]);
        assert!(m.euler_number().is_zero());
        assert_eq!(m.torsion_order(), BigInt::from(4));
        let h = m.first_homology();
        assert_eq!(h.rank, 1);
        assert_eq!(h.torsion, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn rational_homology_sphere_predicate() {
        assert!(inv(0, -1, &[(1, 2), (1, 3), (1, 5)]).is_rational_homology_sphere());
        assert!(!inv(0, -1, &[(1, 2), (1, 3), (1, 6)]).is_rational_homology_sphere());
        assert!(!inv(1, 5, &[]).is_rational_homology_sphere());
    }

    #[test]
    fn descriptor_round_trip() {
        let m = inv(0, -1, &[(1, 2), (1, 3), (1, 5)]);
        assert_eq!(m.to_string(), "0;-1;1/2,1/3,1/5");
        assert_eq!("0;-1;1/2,1/3,1/5".parse::<SeifertInvariants>().unwrap(), m);

        let t = inv(1, 0, &[]);
        assert_eq!(t.to_string(), "1;0;");
        assert_eq!("1;0;".parse::<SeifertInvariants>().unwrap(), t);

        assert!(matches!(
            "0;0;1/0".parse::<SeifertInvariants>(),
            Err(ParseDescriptorError::Invariant(
                InvariantError::OrderNotPositive { index: 1, order: 0 }
            ))
        ));
        assert!("0;0".parse::<SeifertInvariants>().is_err());
        assert!("0;x;".parse::<SeifertInvariants>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = inv(0, -2, &[(1, 2), (2, 3)]);
        let json = m.to_json();
        assert_eq!(json, r#"{"genus":0,"b":-2,"cone":[[1,2],[2,3]]}"#);
        assert_eq!(SeifertInvariants::from_json(&json).unwrap(), m);
        assert!(SeifertInvariants::from_json(r#"{"genus":0,"b":0,"cone":[[2,4]]}"#).is_err());
        assert!(SeifertInvariants::from_json(r#"{"genus":0,"b":0}"#).is_err());
    }

    prop_compose! {
        /// Arbitrary valid tuple, not necessarily normalized.
        pub(crate) fn any_invariants(max_n: usize, max_order: i64)
            (genus in 0u32..3,
             b in -6i64..=6,
             raw in proptest::collection::vec((-20i64..=20, 2i64..=12), 0..=5))
            -> SeifertInvariants
        {
            let pairs: Vec<(i64, i64)> = raw
                .into_iter()
                .take(max_n)
                .map(|(a, o)| {
                    let o = 2 + (o - 2) % (max_order - 1);
                    // slide a to the nearest coprime value
                    let a = (0..).map(|k| a + k).find(|&x| gcd_i64(x, o) == 1).unwrap();
                    (a, o)
                })
                .collect();
            SeifertInvariants::new(genus, b, pairs).unwrap()
        }
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_preserves_e(m in any_invariants(5, 12)) {
            let n = m.normalize();
            prop_assert!(n.is_normalized());
            prop_assert_eq!(n.normalize(), n.clone());
            prop_assert_eq!(n.euler_number(), m.euler_number());
            prop_assert_eq!(n.orbifold_euler_char(), m.orbifold_euler_char());
            prop_assert!(m.equivalent(&n));
        }

        #[test]
        fn descriptor_round_trips_on_normalized_tuples(m in any_invariants(5, 12)) {
            let n = m.normalize();
            prop_assert_eq!(n.to_string().parse::<SeifertInvariants>().unwrap(), n.clone());
            prop_assert_eq!(SeifertInvariants::from_json(&n.to_json()).unwrap(), n);
        }

        #[test]
        fn orientation_reverse_flips_e(m in any_invariants(5, 12)) {
            let r = m.orientation_reverse();
            prop_assert_eq!(r.euler_number(), -m.euler_number());
            prop_assert_eq!(r.orbifold_euler_char(), m.orbifold_euler_char());
            prop_assert_eq!(r.orientation_reverse(), m.normalize());
        }

        #[test]
        fn h1_rank_formula(m in any_invariants(4, 9)) {
            let h = m.first_homology();
            let expected = 2 * m.genus() as usize
                + usize::from(m.euler_number().is_zero());
            prop_assert_eq!(h.rank, expected);
            for w in h.torsion.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }

        #[test]
        fn torsion_matches_closed_form(m in any_invariants(4, 9)) {
            // |T_1| = b_1 ... b_n |e(M)| whenever e(M) != 0
            if !m.euler_number().is_zero() {
                let snf_order = m.first_homology().torsion_order();
                prop_assert_eq!(snf_order, m.torsion_order());
            }
        }
    }
}

//! Deterministic enumeration of normalized Seifert tuples in a finite box,
//! with every derived invariant attached, and CSV/JSONL writers. Two runs
//! over equal bounds produce byte-identical output.

use crate::cohomology::vanishes_via_oracle;
use crate::eulerclass::{euler_class_vanishes, VanishingVerdict};
use crate::foliations::{admits_horizontal_foliation, FoliationAnswer, FoliationVerdict};
use crate::invariants::{Geometry, HomologyGroup, Rational, SeifertInvariants};
use crate::numtheory::gcd_i64;
use num_bigint::BigInt;
use std::fmt;
use std::io::{self, Write};

/// Finite enumeration box. `b` ranges over `b_min..=b_max`, the number of
/// cone points over `0..=max_cone_points`, cone orders over
/// `2..=max_cone_order`, and genus over `0..=genus_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusBounds {
    pub genus_max: u32,
    pub b_min: i64,
    pub b_max: i64,
    pub max_cone_points: usize,
    pub max_cone_order: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvalidBounds;

impl fmt::Display for InvalidBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "census bounds need max-cone-order >= 2 when cone points are allowed"
        )
    }
}

impl std::error::Error for InvalidBounds {}

impl CensusBounds {
    pub fn validate(&self) -> Result<(), InvalidBounds> {
        if self.max_cone_points > 0 && self.max_cone_order < 2 {
            return Err(InvalidBounds);
        }
        Ok(())
    }
}

/// The coprime pairs `(a, o)` with `2 <= o <= max_order` and `0 < a < o`,
/// sorted by `(o, a)`; the alphabet for normalized cone-pair multisets.
pub fn cone_pair_pool(max_order: i64) -> Vec<(i64, i64)> {
    let mut pool = Vec::new();
    for o in 2..=max_order {
        for a in 1..o {
            if gcd_i64(a, o) == 1 {
                pool.push((a, o));
            }
        }
    }
    pool
}

/// One census row: a normalized tuple with everything recomputable from it.
#[derive(Clone, Debug)]
pub struct CensusRecord {
    pub invariants: SeifertInvariants,
    pub geometry: Geometry,
    pub euler_number: Rational,
    pub chi: Rational,
    pub h1: HomologyGroup,
    pub enu_vanishes: bool,
    pub witness_m: Option<BigInt>,
    pub ctf: FoliationVerdict,
}

impl CensusRecord {
    pub fn for_manifold(inv: &SeifertInvariants) -> Self {
        let inv = inv.normalize();
        let verdict: VanishingVerdict = euler_class_vanishes(&inv);
        CensusRecord {
            geometry: inv.base_geometry(),
            euler_number: inv.euler_number(),
            chi: inv.orbifold_euler_char(),
            h1: inv.first_homology(),
            enu_vanishes: verdict.vanishes,
            witness_m: verdict.witness_m,
            ctf: admits_horizontal_foliation(&inv),
            invariants: inv,
        }
    }

    /// Rational homology sphere with a co-oriented taut foliation but no
    /// vanishing Euler class.
    pub fn ctf_without_zero_euler(&self) -> bool {
        self.invariants.is_rational_homology_sphere()
            && self.ctf.answer == FoliationAnswer::Yes
            && !self.enu_vanishes
    }

    /// The independent cohomological verdict; not stored, recomputed.
    pub fn oracle_witness(&self) -> Option<BigInt> {
        vanishes_via_oracle(&self.invariants)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CensusFilter {
    #[default]
    All,
    /// Keep rational homology spheres with `ctf = yes` and a nonvanishing
    /// Euler class.
    CtfNoZeroEuler,
}

impl CensusFilter {
    pub fn keeps(&self, record: &CensusRecord) -> bool {
        match self {
            CensusFilter::All => true,
            CensusFilter::CtfNoZeroEuler => record.ctf_without_zero_euler(),
        }
    }
}

impl std::str::FromStr for CensusFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(CensusFilter::All),
            "ctf-no-zero-euler" => Ok(CensusFilter::CtfNoZeroEuler),
            other => Err(format!("unknown filter {other:?}")),
        }
    }
}

/// Yields every normalized tuple in the box exactly once, ordered by
/// `(genus, b, n, pair sequence)`.
pub fn enumerate_census(bounds: &CensusBounds) -> CensusIter {
    let pool = cone_pair_pool(bounds.max_cone_order);
    let empty = bounds.b_min > bounds.b_max || (bounds.max_cone_points > 0 && pool.is_empty());
    CensusIter {
        bounds: *bounds,
        pool,
        state: if empty {
            None
        } else {
            Some(State {
                genus: 0,
                b: bounds.b_min,
                indices: Vec::new(),
            })
        },
    }
}

#[derive(Clone, Debug)]
struct State {
    genus: u32,
    b: i64,
    indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CensusIter {
    bounds: CensusBounds,
    pool: Vec<(i64, i64)>,
    state: Option<State>,
}

impl CensusIter {
    fn current(&self) -> Option<SeifertInvariants> {
        let s = self.state.as_ref()?;
        let pairs: Vec<(i64, i64)> = s.indices.iter().map(|&i| self.pool[i]).collect();
        Some(SeifertInvariants::new(s.genus, s.b, pairs).expect("pool pairs are valid"))
    }

    /// Odometer over (genus, b, non-decreasing index sequences by length).
    fn advance(&mut self) {
        let Some(s) = self.state.as_mut() else {
            return;
        };
        // next non-decreasing sequence of the same length
        let mut k = s.indices.len();
        while k > 0 {
            k -= 1;
            if s.indices[k] + 1 < self.pool.len() {
                let v = s.indices[k] + 1;
                for slot in s.indices[k..].iter_mut() {
                    *slot = v;
                }
                return;
            }
        }
        // lengths exhausted at this (genus, b): grow n, then b, then genus
        if s.indices.len() < self.bounds.max_cone_points {
            s.indices = vec![0; s.indices.len() + 1];
            return;
        }
        if s.b < self.bounds.b_max {
            s.b += 1;
            s.indices = Vec::new();
            return;
        }
        if s.genus < self.bounds.genus_max {
            s.genus += 1;
            s.b = self.bounds.b_min;
            s.indices = Vec::new();
            return;
        }
        self.state = None;
    }
}

impl Iterator for CensusIter {
    type Item = CensusRecord;

    fn next(&mut self) -> Option<CensusRecord> {
        let inv = self.current()?;
        self.advance();
        Some(CensusRecord::for_manifold(&inv))
    }
}

pub const CSV_HEADER: &str =
    "descriptor,geometry,e,chi,h1_rank,h1_torsion,enu_vanishes,witness_m,ctf,certificate";

fn torsion_field(h1: &HomologyGroup) -> String {
    h1.torsion
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

impl CensusRecord {
    /// One CSV line, no trailing newline. The descriptor contains commas
    /// and is quoted.
    pub fn csv_line(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{},{},{},{},{}",
            self.invariants,
            self.geometry,
            self.euler_number,
            self.chi,
            self.h1.rank,
            torsion_field(&self.h1),
            self.enu_vanishes,
            self.witness_m
                .as_ref()
                .map_or_else(String::new, BigInt::to_string),
            self.ctf.answer,
            self.ctf
                .certificate
                .as_ref()
                .map_or_else(String::new, |c| c.to_string()),
        )
    }

    pub fn json_line(&self) -> String {
        let value = serde_json::json!({
            "descriptor": self.invariants.to_string(),
            "invariants": &self.invariants,
            "geometry": self.geometry.to_string(),
            "e": self.euler_number.to_string(),
            "chi": self.chi.to_string(),
            "h1_rank": self.h1.rank,
            "h1_torsion": self.h1.torsion.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "enu_vanishes": self.enu_vanishes,
            "witness_m": self.witness_m.as_ref().map(BigInt::to_string),
            "ctf": self.ctf.answer.to_string(),
            "certificate": self.ctf.certificate.as_ref().map(|c| c.to_string()),
        });
        value.to_string()
    }
}

pub fn write_csv<W: Write>(
    records: impl Iterator<Item = CensusRecord>,
    out: &mut W,
) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

pub fn write_jsonl<W: Write>(
    records: impl Iterator<Item = CensusRecord>,
    out: &mut W,
) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.json_line())?;
    }
    Ok(())
}

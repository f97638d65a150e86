//! Exact integer arithmetic underpinning everything else: extended gcd,
//! simultaneous congruences with non-coprime moduli, and Smith normal form
//! over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Greatest common divisor of two machine integers, always nonnegative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a as i64
}

/// Extended Euclid. Returns `(g, x, y)` with `g = gcd(|a|, |b|) >= 0` and
/// `a*x + b*y = g` exactly. Both arguments zero give `(0, 0, 0)`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m >= 1`, reduced into `[0, m)`. `None` when
/// `gcd(a, m) != 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    assert!(*m >= BigInt::one(), "modulus must be >= 1");
    let (g, x, _) = ext_gcd(a, m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// A finite system of congruences `x = r_i (mod m_i)` with every `m_i >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CongruenceSystem {
    items: Vec<(BigInt, BigInt)>,
}

impl CongruenceSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, BigInt)>,
    {
        let mut sys = Self::new();
        for (r, m) in pairs {
            sys.push(r, m);
        }
        sys
    }

    /// Panics when `modulus < 1`.
    pub fn push(&mut self, residue: BigInt, modulus: BigInt) {
        assert!(modulus >= BigInt::one(), "modulus must be >= 1");
        self.items.push((residue, modulus));
    }

    pub fn items(&self) -> &[(BigInt, BigInt)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Solves a congruence system by pairwise merging; the moduli need not be
/// coprime. Returns the least nonnegative representative `m0` together with
/// the lcm `l` of all moduli, so the full solution set is `{m0 + r*l}`.
/// `None` when the system is inconsistent. The empty system gives `(0, 1)`.
pub fn solve_crt(sys: &CongruenceSystem) -> Option<(BigInt, BigInt)> {
    let mut r0 = BigInt::zero();
    let mut m0 = BigInt::one();
    for (r, m) in sys.items() {
        let (g, u, _) = ext_gcd(&m0, m);
        let diff = r - &r0;
        let (step, rem) = diff.div_rem(&g);
        if !rem.is_zero() {
            return None;
        }
        let lcm = &m0 / &g * m;
        r0 = (&r0 + &m0 * u * step).mod_floor(&lcm);
        m0 = lcm;
    }
    Some((r0, m0))
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_dst += k * row_src`
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let t = k * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    /// `col_dst += k * col_src`
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let t = k * &self[(i, src)];
            self[(i, dst)] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let t = -&self[(r, j)];
            self[(r, j)] = t;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The decomposition `u * a * v = s` with `u`, `v` unimodular and `s`
/// diagonal, nonnegative, each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_abs_pivot(s: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..s.rows() {
        for j in from..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if s[b].abs() <= s[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Clears column `t` below the pivot. Swaps shrink the pivot whenever a
/// division leaves a remainder, so this always terminates with the column
/// zero off the diagonal.
fn clear_pivot_column(s: &mut IntMatrix, u: &mut IntMatrix, t: usize) {
    let mut r = t + 1;
    while r < s.rows() {
        if s[(r, t)].is_zero() {
            r += 1;
            continue;
        }
        let q = -(&s[(r, t)] / &s[(t, t)]);
        if !q.is_zero() {
            s.add_row_multiple(r, t, &q);
            u.add_row_multiple(r, t, &q);
        }
        if s[(r, t)].is_zero() {
            r += 1;
        } else {
            // the remainder is strictly smaller than the pivot; promote it
            s.swap_rows(t, r);
            u.swap_rows(t, r);
        }
    }
}

/// Column analogue of `clear_pivot_column`. Returns true when a column swap
/// may have reintroduced entries below the pivot.
fn clear_pivot_row(s: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let mut dirtied = false;
    let mut c = t + 1;
    while c < s.cols() {
        if s[(t, c)].is_zero() {
            c += 1;
            continue;
        }
        let q = -(&s[(t, c)] / &s[(t, t)]);
        if !q.is_zero() {
            s.add_col_multiple(c, t, &q);
            v.add_col_multiple(c, t, &q);
        }
        if s[(t, c)].is_zero() {
            c += 1;
        } else {
            s.swap_cols(t, c);
            v.swap_cols(t, c);
            dirtied = true;
        }
    }
    dirtied
}

fn first_nondivisible(s: &IntMatrix, t: usize) -> Option<usize> {
    let d = &s[(t, t)];
    for i in t + 1..s.rows() {
        for j in t + 1..s.cols() {
            if !(&s[(i, j)] % d).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

/// Smith normal form by row and column reduction, selecting the smallest
/// nonzero entry in magnitude as the pivot to limit coefficient growth.
/// The identity `u * a * v = s` holds exactly.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    for t in 0..a.rows().min(a.cols()) {
        let Some((pi, pj)) = min_abs_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            clear_pivot_column(&mut s, &mut u, t);
            if clear_pivot_row(&mut s, &mut v, t) {
                continue;
            }
            match first_nondivisible(&s, t) {
                Some(i) => {
                    // fold the offending row into the pivot row; the next
                    // pass replaces the pivot by a proper divisor of itself
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { u, s, v }
}

/// Integer solution `x` of `b * x = v`, if one exists. The witness satisfies
/// the equation exactly.
pub fn lattice_member(b: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(v.len(), b.rows(), "dimension mismatch");
    let snf = smith_normal_form(b);
    let w = snf.u.mul_vec(v);
    let mut y = vec![BigInt::zero(); b.cols()];
    for (i, wi) in w.iter().enumerate() {
        let d = if i < b.cols() {
            snf.s[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !wi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = wi.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    let x = snf.v.mul_vec(&y);
    debug_assert_eq!(b.mul_vec(&x), v);
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn ext_gcd_degenerate() {
        assert_eq!(ext_gcd(&bi(0), &bi(0)), (bi(0), bi(0), bi(0)));
    }

    #[test]
    fn ext_gcd_examples() {
        let (g, x, y) = ext_gcd(&bi(6), &bi(4));
        assert_eq!(g, bi(2));
        assert_eq!(bi(6) * x + bi(4) * y, bi(2));

        let (g, x, y) = ext_gcd(&bi(1), &bi(5));
        assert_eq!(g, bi(1));
        assert_eq!(bi(1) * x + bi(5) * y, bi(1));
    }

    #[test]
    fn mod_inverse_basic() {
        assert_eq!(mod_inverse(&bi(2), &bi(3)), Some(bi(2)));
        assert_eq!(mod_inverse(&bi(8), &bi(9)), Some(bi(8)));
        assert_eq!(mod_inverse(&bi(2), &bi(4)), None);
        assert_eq!(mod_inverse(&bi(7), &bi(1)), Some(bi(0)));
    }

    fn crt_brute(sys: &CongruenceSystem) -> Vec<i64> {
        let l: i64 = sys.items().iter().fold(1i64, |acc, (_, m)| {
            let m: i64 = m.try_into().unwrap();
            acc / gcd_i64(acc, m) * m
        });
        (0..l)
            .filter(|&x| {
                sys.items().iter().all(|(r, m)| {
                    let r: i64 = r.try_into().unwrap();
                    let m: i64 = m.try_into().unwrap();
                    (x - r).rem_euclid(m) == 0
                })
            })
            .collect()
    }

    #[test]
    fn crt_examples() {
        let sys = CongruenceSystem::from_pairs([(bi(1), bi(2)), (bi(1), bi(3))]);
        assert_eq!(solve_crt(&sys), Some((bi(1), bi(6))));

        let sys = CongruenceSystem::from_pairs([(bi(1), bi(4)), (bi(3), bi(6))]);
        assert_eq!(solve_crt(&sys), Some((bi(9), bi(12))));
        assert_eq!(crt_brute(&sys), vec![9]);

        let sys = CongruenceSystem::from_pairs([(bi(1), bi(4)), (bi(2), bi(6))]);
        assert_eq!(solve_crt(&sys), None);
        assert!(crt_brute(&sys).is_empty());
    }

    #[test]
    fn crt_empty_system() {
        assert_eq!(solve_crt(&CongruenceSystem::new()), Some((bi(0), bi(1))));
    }

    #[test]
    fn snf_zero_and_identity() {
        let z = IntMatrix::from_rows(&[vec![0]]);
        let snf = smith_normal_form(&z);
        assert_eq!(snf.s, z);

        let id = IntMatrix::identity(4);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.s, id);
    }

    #[test]
    fn snf_divisibility_example() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.s.diagonal(), vec![bi(1), bi(6)]);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s);
    }

    #[test]
    fn lattice_member_examples() {
        let b = IntMatrix::from_rows(&[vec![2], vec![0]]);
        assert_eq!(lattice_member(&b, &[bi(4), bi(0)]), Some(vec![bi(2)]));
        assert_eq!(lattice_member(&b, &[bi(3), bi(0)]), None);

        let b = IntMatrix::from_rows(&[vec![1, 0], vec![0, 3]]);
        assert_eq!(
            lattice_member(&b, &[bi(5), bi(6)]),
            Some(vec![bi(5), bi(2)])
        );
    }

    fn check_snf(rows: &[Vec<i64>]) {
        let a = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s, "u*a*v != s");
        let diag = snf.s.diagonal();
        for (i, d) in diag.iter().enumerate() {
            assert!(!d.is_negative());
            if i + 1 < diag.len() && !d.is_zero() {
                assert!((&diag[i + 1] % d).is_zero(), "divisibility chain broken");
            }
            if d.is_zero() && i + 1 < diag.len() {
                assert!(diag[i + 1].is_zero());
            }
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "s not diagonal");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn ext_gcd_bezout(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            let (g, x, y) = ext_gcd(&bi(a), &bi(b));
            prop_assert!(g >= bi(0));
            prop_assert_eq!(&bi(a) * x + &bi(b) * y, g.clone());
            if a != 0 || b != 0 {
                prop_assert!((bi(a) % &g).is_zero() && (bi(b) % &g).is_zero());
            }
        }

        #[test]
        fn crt_matches_brute_force(
            pairs in proptest::collection::vec((0i64..20, 1i64..20), 0..4)
        ) {
            let sys = CongruenceSystem::from_pairs(
                pairs.iter().map(|&(r, m)| (bi(r % m), bi(m))),
            );
            let brute = crt_brute(&sys);
            match solve_crt(&sys) {
                Some((m0, l)) => {
                    let l64: i64 = (&l).try_into().unwrap();
                    let lcm = sys.items().iter().fold(1i64, |acc, (_, m)| {
                        let m: i64 = m.try_into().unwrap();
                        acc / gcd_i64(acc, m) * m
                    });
                    prop_assert_eq!(l64, lcm);
                    let m064: i64 = (&m0).try_into().unwrap();
                    prop_assert_eq!(brute, vec![m064]);
                }
                None => prop_assert!(brute.is_empty()),
            }
        }

        #[test]
        fn snf_reconstructs(
            rows in 1usize..5, cols in 1usize..5,
            seed in proptest::collection::vec(-30i64..30, 16)
        ) {
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()]).collect())
                .collect();
            check_snf(&m);
        }

        #[test]
        fn lattice_member_agrees_with_box_search(
            rows in 1usize..4, cols in 1usize..4,
            seed in proptest::collection::vec(-5i64..=5, 9),
            target in proptest::collection::vec(-10i64..=10, 3)
        ) {
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()]).collect())
                .collect();
            let b = IntMatrix::from_rows(&m);
            let v: Vec<BigInt> = (0..rows).map(|i| bi(target[i % target.len()])).collect();

            // brute force over a fixed coefficient box
            let bound = 20i64;
            let mut found = false;
            let mut coeffs = vec![-bound; cols];
            'outer: loop {
                let image: Vec<BigInt> = (0..rows)
                    .map(|i| (0..cols).map(|j| &b[(i, j)] * bi(coeffs[j])).sum())
                    .collect();
                if image == v {
                    found = true;
                    break;
                }
                #[allow(clippy::needless_range_loop)]
                for j in 0..cols {
                    coeffs[j] += 1;
                    if coeffs[j] <= bound {
                        continue 'outer;
                    }
                    coeffs[j] = -bound;
                }
                break;
            }

            match lattice_member(&b, &v) {
                Some(x) => prop_assert_eq!(b.mul_vec(&x), v),
                None => prop_assert!(!found, "brute force found a solution"),
            }
        }
    }
}

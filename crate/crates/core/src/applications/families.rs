//! Desk-scale verification of four families of genus-zero manifolds with
//! `n >= 3` cone points whose foliation and Euler-class behaviour admits a
//! closed-form description. Each check sweeps `b` over `[-2n, 2n]`; a
//! vanishing Euler class forces `|e(M)| <= |chi(B)| < n`, hence
//! `|b| < n + 1`, so the window decides the unbounded claims exactly.

use crate::eulerclass::euler_class_vanishes;
use crate::foliations::{admits_horizontal_foliation, FoliationAnswer};
use crate::invariants::{rational, Rational, SeifertInvariants};
use crate::numtheory::gcd_i64;

/// Desk-scale caps for the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    /// Largest number of cone points (the checks start at 3 or 4).
    pub max_n: usize,
    /// Largest uniform cone order for the equal-order family.
    pub max_c: i64,
    /// Largest cone order elsewhere.
    pub max_order: i64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            max_n: 6,
            max_c: 12,
            max_order: 30,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub family: u8,
    pub instances: usize,
    pub mismatches: Vec<String>,
}

impl FamilyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn manifold(b: i64, pairs: &[(i64, i64)]) -> SeifertInvariants {
    SeifertInvariants::new(0, b, pairs.iter().copied())
        .unwrap()
        .normalize()
}

fn admits(m: &SeifertInvariants) -> bool {
    admits_horizontal_foliation(m).answer == FoliationAnswer::Yes
}

/// All multisets of `n` pool pairs with fraction sum at most `bound`,
/// visited in lexicographic order.
fn multisets_with_sum_bound(
    pool: &[(i64, i64)],
    n: usize,
    bound: &Rational,
    f: &mut impl FnMut(&[(i64, i64)]),
) {
    fn rec(
        pool: &[(i64, i64)],
        start: usize,
        left: usize,
        sum: Rational,
        bound: &Rational,
        current: &mut Vec<(i64, i64)>,
        f: &mut impl FnMut(&[(i64, i64)]),
    ) {
        if left == 0 {
            f(current);
            return;
        }
        for idx in start..pool.len() {
            let (a, o) = pool[idx];
            let next = &sum + rational(a, o);
            if next > *bound {
                continue;
            }
            current.push((a, o));
            rec(pool, idx, left - 1, next, bound, current, f);
            current.pop();
        }
    }
    let mut current = Vec::with_capacity(n);
    rec(pool, 0, n, rational(0, 1), bound, &mut current, f);
}

/// All ascending pairwise-coprime order tuples of length `n` from
/// `[min, max]`.
fn coprime_order_sets(min: i64, max: i64, n: usize, f: &mut impl FnMut(&[i64])) {
    fn rec(min: i64, max: i64, left: usize, current: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if left == 0 {
            f(current);
            return;
        }
        let lo = current.last().map_or(min, |&o| o + 1);
        for o in lo..=max {
            if current.iter().any(|&p| gcd_i64(p, o) != 1) {
                continue;
            }
            current.push(o);
            rec(min, max, left - 1, current, f);
            current.pop();
        }
    }
    let mut current = Vec::with_capacity(n);
    rec(min, max, n, &mut current, f);
}

fn reduced_pool(max_order: i64) -> Vec<(i64, i64)> {
    crate::applications::census::cone_pair_pool(max_order)
}

/// `M(0; b, 1/c, ..., 1/c)` with `n >= 4` equal cone points:
/// a horizontal foliation exists iff `2-n <= b <= -2`, or `b = -1` and
/// `c >= 3`; for `c >= 2n-2` the Euler class vanishes iff `b = 2-n`; and
/// at the boundary `c = 2n-3` it also vanishes at `b = -1`.
fn check_family_equal_orders(params: &FamilyParams) -> FamilyReport {
    let mut mm = Vec::new();
    let mut instances = 0usize;
    for n in 4..=params.max_n {
        let ni = n as i64;
        for c in 2..=params.max_c {
            let pairs = vec![(1i64, c); n];
            let mut vanishing_b = Vec::new();
            for b in -2 * ni..=2 * ni {
                let m = manifold(b, &pairs);
                instances += 1;
                let expect_fol = (2 - ni <= b && b <= -2) || (b == -1 && c >= 3);
                if admits(&m) != expect_fol {
                    mm.push(format!("family 1a: {m}: foliation != {expect_fol}"));
                }
                if euler_class_vanishes(&m).vanishes {
                    vanishing_b.push(b);
                }
            }
            if c >= 2 * ni - 2 && vanishing_b != vec![2 - ni] {
                mm.push(format!(
                    "family 1b: n={n} c={c}: vanishing b set {vanishing_b:?} != [{}]",
                    2 - ni
                ));
            }
            if c == 2 * ni - 3 && !vanishing_b.contains(&-1) {
                mm.push(format!(
                    "family 1 boundary: n={n} c={c}: b=-1 does not vanish"
                ));
            }
        }
    }
    FamilyReport {
        family: 1,
        instances,
        mismatches: mm,
    }
}

/// `M(0; 2-n, a_1/b_1, ..., a_n/b_n)` with fraction sum at most `(n-2)/2`:
/// always has a horizontal foliation, and the Euler class vanishes iff
/// every numerator is 1.
fn check_family_b_extremal(params: &FamilyParams) -> FamilyReport {
    let mut mm = Vec::new();
    let mut instances = 0usize;
    for n in 3..=params.max_n {
        let ni = n as i64;
        // exhaustive over a small pool, plus spot instances near max_order
        let cap = match n {
            3..=4 => 7,
            5 => 5,
            _ => 4,
        };
        let pool = reduced_pool(cap.min(params.max_order));
        let bound = rational(ni - 2, 2);
        let mut check = |pairs: &[(i64, i64)]| {
            let m = manifold(2 - ni, pairs);
            instances += 1;
            if !admits(&m) {
                mm.push(format!("family 2: {m}: no horizontal foliation"));
            }
            let expect_vanish = pairs.iter().all(|&(a, _)| a == 1);
            if euler_class_vanishes(&m).vanishes != expect_vanish {
                mm.push(format!("family 2: {m}: vanishing != {expect_vanish}"));
            }
        };
        multisets_with_sum_bound(&pool, n, &bound, &mut check);
        if params.max_order >= 28 {
            let big: Vec<(i64, i64)> = (0..n as i64).map(|k| (1, params.max_order - k)).collect();
            check(&big);
            let mut bumped = big.clone();
            let o = bumped[0].1;
            let a = (2..o).find(|&a| gcd_i64(a, o) == 1).unwrap();
            bumped[0] = (a, o);
            if bumped
                .iter()
                .map(|&(a, o)| rational(a, o))
                .sum::<Rational>()
                <= bound
            {
                check(&bumped);
            }
        }
    }
    FamilyReport {
        family: 2,
        instances,
        mismatches: mm,
    }
}

/// `M(0; b, 1/b_1, ..., 1/b_n)` with pairwise-coprime orders `>= n` and
/// `n >= 4`: horizontal foliation iff `2-n <= b <= -1`, vanishing Euler
/// class iff `b = 2-n`.
fn check_family_coprime_orders(params: &FamilyParams) -> FamilyReport {
    let mut mm = Vec::new();
    let mut instances = 0usize;
    for n in 4..=params.max_n {
        let ni = n as i64;
        let max = params.max_order;
        let mut check = |orders: &[i64]| {
            let pairs: Vec<(i64, i64)> = orders.iter().map(|&o| (1, o)).collect();
            for b in -2 * ni..=2 * ni {
                let m = manifold(b, &pairs);
                instances += 1;
                let expect_fol = 2 - ni <= b && b <= -1;
                if admits(&m) != expect_fol {
                    mm.push(format!("family 3a: {m}: foliation != {expect_fol}"));
                }
                let expect_vanish = b == 2 - ni;
                if euler_class_vanishes(&m).vanishes != expect_vanish {
                    mm.push(format!("family 3b: {m}: vanishing != {expect_vanish}"));
                }
            }
        };
        coprime_order_sets(ni, max, n, &mut check);
    }
    FamilyReport {
        family: 3,
        instances,
        mismatches: mm,
    }
}

/// `M(0; b, a_1/b_1, ..., a_n/b_n)` with fraction sum at most `n/6` and
/// `n >= 4`: a horizontal foliation exists for every `2-n <= b <= -2`, and
/// for `b = -1` when `n <= 6`; the Euler class vanishes for at most one
/// `b` in `[2-n, (2-n)/2]`.
fn check_family_small_sum(params: &FamilyParams) -> FamilyReport {
    let mut mm = Vec::new();
    let mut instances = 0usize;
    for n in 4..=params.max_n {
        let ni = n as i64;
        let cap = match n {
            4 => 6,
            5 => 5,
            _ => 4,
        };
        let pool = reduced_pool(cap.min(params.max_order));
        let bound = rational(ni, 6);
        let mut check = |pairs: &[(i64, i64)]| {
            instances += 1;
            for b in 2 - ni..=-2 {
                let m = manifold(b, pairs);
                if !admits(&m) {
                    mm.push(format!("family 4a: {m}: no horizontal foliation"));
                }
            }
            if n <= 6 {
                let m = manifold(-1, pairs);
                if !admits(&m) {
                    mm.push(format!("family 4a: {m}: no horizontal foliation at b=-1"));
                }
            }
            let hi = (2 - ni).div_euclid(2);
            let vanishing: Vec<i64> = (2 - ni..=hi)
                .filter(|&b| euler_class_vanishes(&manifold(b, pairs)).vanishes)
                .collect();
            if vanishing.len() > 1 {
                mm.push(format!(
                    "family 4b: {:?}: vanishing at {vanishing:?}",
                    pairs
                ));
            }
        };
        multisets_with_sum_bound(&pool, n, &bound, &mut check);
        if params.max_order >= 30 {
            // a deliberately skewed instance: one large fraction, the rest tiny
            let mut skew: Vec<(i64, i64)> = vec![(23, 30)];
            skew.extend((1..n as i64).map(|k| (1, 24 + k)));
            if skew.iter().map(|&(a, o)| rational(a, o)).sum::<Rational>() <= bound {
                check(&skew);
            }
        }
    }
    FamilyReport {
        family: 4,
        instances,
        mismatches: mm,
    }
}

/// Runs one of the four family checks (1-4).
pub fn example_family_check(family: u8, params: &FamilyParams) -> FamilyReport {
    match family {
        1 => check_family_equal_orders(params),
        2 => check_family_b_extremal(params),
        3 => check_family_coprime_orders(params),
        4 => check_family_small_sum(params),
        other => panic!("no such example family: {other}"),
    }
}

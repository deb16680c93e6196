//! Simple braids (positive permutation braids) and their lattice operations.
//!
//! A simple braid is identified with its strand permutation. The prefix
//! order `u ≼ x` holds iff every pair of strands crossing in `u` also
//! crosses in `x` (pairs named by starting position).

use std::collections::BTreeSet;

use crate::braid::{BraidWord, Permutation};

pub type Simple = Permutation;

/// `σ_i` (0-based `i`) as a simple element.
pub fn atom(n: usize, i: usize) -> Simple {
    let mut p = Permutation::identity(n);
    p.swap_positions(i, i + 1);
    p
}

/// Generators `σ_{i+1}` (0-based `i`) that the simple can start with.
pub fn starting_set(s: &Simple) -> BTreeSet<usize> {
    let im = s.images();
    (0..s.len().saturating_sub(1)).filter(|&i| im[i] > im[i + 1]).collect()
}

/// Generators the simple can end with.
pub fn finishing_set(s: &Simple) -> BTreeSet<usize> {
    starting_set(&s.inverse())
}

pub fn starts_with(s: &Simple, i: usize) -> bool {
    s.apply(i) > s.apply(i + 1)
}

pub fn ends_with(s: &Simple, i: usize) -> bool {
    let inv = s.inverse();
    inv.apply(i) > inv.apply(i + 1)
}

/// `τ(s) = Δ s Δ^{-1}`, which sends `σ_i` to `σ_{n-i}`.
pub fn tau(s: &Simple) -> Simple {
    let n = s.len();
    Permutation::from_images_unchecked((0..n).map(|i| n - 1 - s.apply(n - 1 - i)).collect())
}

pub fn tau_pow(s: &Simple, p: i64) -> Simple {
    if p.rem_euclid(2) == 1 {
        tau(s)
    } else {
        s.clone()
    }
}

/// Right complement `∂s = s^{-1}Δ`.
pub fn right_complement(s: &Simple) -> Simple {
    s.inverse().then(&Permutation::half_twist(s.len()))
}

/// Left complement: the simple `c` with `c·s = Δ`.
pub fn left_complement(s: &Simple) -> Simple {
    Permutation::half_twist(s.len()).then(&s.inverse())
}

pub fn is_delta(s: &Simple) -> bool {
    s.images().iter().enumerate().all(|(i, &v)| v + i + 1 == s.len())
}

/// Product `a·b` when it is still simple.
pub fn product_if_simple(a: &Simple, b: &Simple) -> Option<Simple> {
    let ab = a.then(b);
    (ab.inversions() == a.inversions() + b.inversions()).then_some(ab)
}

/// `a^{-1}·b` when `a ≼ b`.
pub fn left_quotient(a: &Simple, b: &Simple) -> Option<Simple> {
    let q = a.inverse().then(b);
    (q.inversions() + a.inversions() == b.inversions()).then_some(q)
}

/// Strand pairs `(i, j)`, `i < j` by starting position, that cross.
fn crossing_pairs(s: &Simple) -> Vec<Vec<bool>> {
    let n = s.len();
    let mut c = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            c[i][j] = s.apply(i) > s.apply(j);
        }
    }
    c
}

fn from_crossing_pairs(c: &[Vec<bool>]) -> Simple {
    let n = c.len();
    let images = (0..n)
        .map(|i| {
            let right = (i + 1..n).filter(|&j| c[i][j]).count();
            let left = (0..i).filter(|&j| c[j][i]).count();
            i + right - left
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

pub fn is_prefix(u: &Simple, x: &Simple) -> bool {
    let (cu, cx) = (crossing_pairs(u), crossing_pairs(x));
    cu.iter().zip(&cx).all(|(ru, rx)| ru.iter().zip(rx).all(|(&a, &b)| !a || b))
}

/// Left lcm `u ∨ v` (smallest simple having both as prefixes).
pub fn join(u: &Simple, v: &Simple) -> Simple {
    let n = u.len();
    let mut c = crossing_pairs(u);
    let cv = crossing_pairs(v);
    for i in 0..n {
        for j in i + 1..n {
            c[i][j] |= cv[i][j];
        }
    }
    // transitive closure over i < j < k
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if !c[i][j] {
                    continue;
                }
                for k in j + 1..n {
                    if c[j][k] && !c[i][k] {
                        c[i][k] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    from_crossing_pairs(&c)
}

/// Left gcd `u ∧ v` (largest common prefix), by greedy atom extraction.
pub fn meet(u: &Simple, v: &Simple) -> Simple {
    let n = u.len();
    let mut g = Permutation::identity(n);
    let (mut ru, mut rv) = (u.clone(), v.clone());
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if starts_with(&ru, i) && starts_with(&rv, i) {
                g.swap_values(i, i + 1);
                ru.swap_positions(i, i + 1);
                rv.swap_positions(i, i + 1);
                continue 'outer;
            }
        }
        return g;
    }
}

/// A positive word realizing the simple; its length is the inversion number.
pub fn simple_to_word(s: &Simple) -> BraidWord {
    let mut rest = s.clone();
    let mut letters = Vec::with_capacity(s.inversions());
    'outer: loop {
        for i in 0..rest.len().saturating_sub(1) {
            if starts_with(&rest, i) {
                letters.push(i as i32 + 1);
                rest.swap_positions(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    BraidWord::new_unchecked(s.len().max(1), letters)
}

/// Generators (1-based) occurring in any positive word of the simple.
pub fn support(s: &Simple) -> BTreeSet<usize> {
    // σ_i occurs iff the first i positions are not mapped onto themselves
    let mut out = BTreeSet::new();
    let mut max_image = 0;
    for i in 0..s.len().saturating_sub(1) {
        max_image = max_image.max(s.apply(i));
        if max_image > i {
            out.insert(i + 1);
        }
    }
    out
}

//! Round curves and round multicurves on the punctured disk.
//!
//! A round multicurve without nesting is a partition of the punctures into
//! consecutive blocks; every block with at least two punctures carries one
//! curve. A curve is encoded by the conjugacy class of its boundary word in
//! the free group, up to inversion.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid::{underlying_permutation, BraidWord, Permutation};
use crate::error::{BraidError, Result};
use crate::free_group::{artin_apply, FreeWord};
use crate::garside::{normal_form, simple, GarsideNormalForm};

/// Consecutive block sizes `(n_1, …, n_m)` describing a round multicurve.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundBlockPartition {
    sizes: Vec<usize>,
}

impl RoundBlockPartition {
    /// An essential partition: at least two blocks, at least one of size ≥ 2.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(BraidError::InvalidPartition("empty block".into()));
        }
        if sizes.len() < 2 {
            return Err(BraidError::InvalidPartition("need at least two blocks".into()));
        }
        if sizes.iter().all(|&s| s < 2) {
            return Err(BraidError::InvalidPartition("no block encloses two punctures".into()));
        }
        Ok(RoundBlockPartition { sizes })
    }

    /// Any composition of `n`, essential or not; used for exterior bookkeeping.
    pub(crate) fn from_sizes_unchecked(sizes: Vec<usize>) -> Self {
        RoundBlockPartition { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn strands(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// 0-based position of the first puncture of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.sizes
            .iter()
            .map(|s| {
                let o = acc;
                acc += s;
                o
            })
            .collect()
    }

    /// Block index containing a 0-based puncture.
    pub fn block_of(&self, puncture: usize) -> usize {
        let mut acc = 0;
        for (b, s) in self.sizes.iter().enumerate() {
            acc += s;
            if puncture < acc {
                return b;
            }
        }
        panic!("puncture {puncture} outside partition")
    }

    pub fn reversed(&self) -> Self {
        RoundBlockPartition { sizes: self.sizes.iter().rev().copied().collect() }
    }

    /// Every essential partition of `n` punctures, fewest blocks first, then
    /// lexicographically descending in the block sizes.
    pub fn all_essential(n: usize) -> Vec<RoundBlockPartition> {
        let mut out = Vec::new();
        if n < 3 {
            return out;
        }
        // compositions of n ↔ subsets of the n-1 cut points
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut sizes = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    sizes.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            sizes.push(run);
            if let Ok(p) = RoundBlockPartition::new(sizes) {
                out.push(p);
            }
        }
        out.sort_by(|a, b| a.sizes.len().cmp(&b.sizes.len()).then_with(|| b.sizes.cmp(&a.sizes)));
        out
    }
}

impl fmt::Debug for RoundBlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RoundBlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for RoundBlockPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sizes.serialize(s)
    }
}

impl FromStr for RoundBlockPartition {
    type Err = BraidError;

    /// Parses `2+2+1` or the JSON array form `[2,2,1]`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let body = t.strip_prefix('[').and_then(|s| s.strip_suffix(']'));
        let (inner, sep) = match body {
            Some(b) => (b, ','),
            None => (t, '+'),
        };
        let mut sizes = Vec::new();
        for token in inner.split(sep) {
            let token = token.trim();
            let size = token.parse::<usize>().map_err(|_| BraidError::Parse {
                token: token.to_string(),
                message: "expected a positive block size".into(),
            })?;
            sizes.push(size);
        }
        RoundBlockPartition::new(sizes)
    }
}

/// Isotopy class of an unoriented simple closed curve, via its boundary word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    canonical: FreeWord,
}

impl CurveClass {
    /// Canonical representative: least rotation of the cyclically reduced
    /// word or of its inverse, ordering letters `x_1 < x_1^{-1} < x_2 < …`.
    pub fn from_word(w: &FreeWord) -> Result<Self> {
        let red = w.cyclically_reduced();
        if red.is_empty() {
            return Err(BraidError::precondition("curve word is trivial"));
        }
        let key = |v: &i32| 2 * v.unsigned_abs() + u32::from(*v < 0);
        let mut best: Option<Vec<i32>> = None;
        for cand in [red.clone(), red.inverse()] {
            let l = cand.letters();
            for r in 0..l.len() {
                let rot: Vec<i32> = l[r..].iter().chain(&l[..r]).copied().collect();
                if best.as_ref().is_none_or(|b| rot.iter().map(key).lt(b.iter().map(key))) {
                    best = Some(rot);
                }
            }
        }
        Ok(CurveClass { canonical: FreeWord::new(best.expect("nonempty")) })
    }

    pub fn word(&self) -> &FreeWord {
        &self.canonical
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.canonical)
    }
}

/// Whether the round curve around punctures `a..=b` (1-based) is essential in `D_n`.
pub fn is_essential_round(a: usize, b: usize, n: usize) -> bool {
    a < b && !(a == 1 && b == n)
}

/// Class of the round curve enclosing punctures `a..=b` (1-based), `x_a ⋯ x_b`.
pub fn round_curve_class(a: usize, b: usize, n: usize) -> Result<CurveClass> {
    if a == 0 || a >= b || b > n {
        return Err(BraidError::precondition(format!(
            "round curve needs 1 ≤ a < b ≤ n, got a={a}, b={b}, n={n}"
        )));
    }
    CurveClass::from_word(&FreeWord::new((a as i32)..=(b as i32)))
}

pub fn image_curve(w: &BraidWord, c: &CurveClass) -> Result<CurveClass> {
    if c.word().max_generator() > w.strands() {
        return Err(BraidError::StrandMismatch { left: c.word().max_generator(), right: w.strands() });
    }
    let mut cur = c.word().clone();
    for &v in w.letters() {
        let letter = BraidWord::new_unchecked(w.strands(), vec![v]);
        cur = artin_apply(&letter, &cur)?.cyclically_reduced();
    }
    CurveClass::from_word(&cur)
}

/// Block permutation induced by a strand permutation, if blocks go to equal-size blocks.
fn induced_block_permutation(perm: &Permutation, p: &RoundBlockPartition) -> Option<Permutation> {
    let offsets = p.offsets();
    let mut images = Vec::with_capacity(p.blocks());
    for (b, (&o, &s)) in offsets.iter().zip(p.sizes()).enumerate() {
        let target = p.block_of(perm.apply(o));
        if p.sizes()[target] != s {
            return None;
        }
        if (o..o + s).any(|q| p.block_of(perm.apply(q)) != target) {
            return None;
        }
        let _ = b;
        images.push(target);
    }
    Permutation::from_images(images).ok()
}

/// The block permutation if `w` preserves the round multicurve of `p`.
///
/// Checked literally: strands of each block land in one block of equal
/// size, and the image of each block curve is the round curve of that block.
pub fn preserves_partition(w: &BraidWord, p: &RoundBlockPartition) -> Result<Option<Permutation>> {
    if p.strands() != w.strands() {
        return Err(BraidError::StrandMismatch { left: p.strands(), right: w.strands() });
    }
    let perm = underlying_permutation(w);
    let Some(blocks) = induced_block_permutation(&perm, p) else {
        return Ok(None);
    };
    let offsets = p.offsets();
    let n = w.strands();
    for (b, (&o, &s)) in offsets.iter().zip(p.sizes()).enumerate() {
        if s < 2 {
            continue;
        }
        let t = blocks.apply(b);
        let img = image_curve(w, &round_curve_class(o + 1, o + s, n)?)?;
        let expected = round_curve_class(offsets[t] + 1, offsets[t] + p.sizes()[t], n)?;
        if img != expected {
            return Ok(None);
        }
    }
    Ok(Some(blocks))
}

/// Image of a consecutive partition under a simple braid, when every block
/// stays consecutive; returns the image partition and the block map.
pub(crate) fn simple_round_image(
    s: &simple::Simple,
    p: &RoundBlockPartition,
) -> Option<(RoundBlockPartition, Vec<usize>)> {
    let offsets = p.offsets();
    let mut images: Vec<(usize, usize, usize)> = Vec::with_capacity(p.blocks());
    for (b, (&o, &size)) in offsets.iter().zip(p.sizes()).enumerate() {
        let targets: Vec<usize> = (o..o + size).map(|q| s.apply(q)).collect();
        let lo = *targets.iter().min().expect("nonempty block");
        let hi = *targets.iter().max().expect("nonempty block");
        if hi - lo + 1 != size {
            return None;
        }
        images.push((lo, size, b));
    }
    images.sort();
    let sizes = images.iter().map(|&(_, s, _)| s).collect();
    let mut block_map = vec![0; p.blocks()];
    for (target, &(_, _, b)) in images.iter().enumerate() {
        block_map[b] = target;
    }
    Some((RoundBlockPartition::from_sizes_unchecked(sizes), block_map))
}

/// Partition after applying `Δ^p`.
pub(crate) fn delta_power_image(p: &RoundBlockPartition, power: i64) -> RoundBlockPartition {
    if power.rem_euclid(2) == 1 {
        p.reversed()
    } else {
        p.clone()
    }
}

/// Fast preservation test on a normal form: every normal-form factor must
/// carry the current round partition to a round partition, returning to `p`.
pub fn nf_preserves_partition(nf: &GarsideNormalForm, p: &RoundBlockPartition) -> Option<Permutation> {
    if p.strands() != nf.strands() {
        return None;
    }
    let m = p.blocks();
    let mut cur = delta_power_image(p, nf.delta_power());
    // block_pos[b] = current position of original block b
    let mut block_pos: Vec<usize> = if nf.delta_power().rem_euclid(2) == 1 {
        (0..m).rev().collect()
    } else {
        (0..m).collect()
    };
    for f in nf.factors() {
        let (next, map) = simple_round_image(f, &cur)?;
        for pos in block_pos.iter_mut() {
            *pos = map[*pos];
        }
        cur = next;
    }
    if &cur != p {
        return None;
    }
    Permutation::from_images(block_pos).ok()
}

/// Convenience wrapper over [`nf_preserves_partition`] for words.
pub fn preserves_partition_fast(w: &BraidWord, p: &RoundBlockPartition) -> Option<Permutation> {
    nf_preserves_partition(&normal_form(w), p)
}

//! Braid words, strand permutations and closure bookkeeping.
//!
//! Conventions used throughout the crate:
//!
//! * A word is read left to right. Letter `v > 0` is the positive generator
//!   `σ_v`, letter `v < 0` its inverse.
//! * Strands are tracked by position. The permutation of a braid sends the
//!   strand that starts at position `i` to the position where it ends, so
//!   `perm(w1·w2) = perm(w2) ∘ perm(w1)`.
//! * Positions are 0-based inside the crate; serialized forms are 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// A bijection of `{0, …, n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The permutation of the half twist `Δ`: `i ↦ n-1-i`.
    pub fn half_twist(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(BraidError::precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(BraidError::precondition("1-based images cannot contain 0"));
        }
        Self::from_images(images.iter().map(|v| v - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`, i.e. `other ∘ self`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Permutation { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    /// Number of inverted pairs.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles, each starting at its minimal element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub(crate) fn swap_values(&mut self, a: usize, b: usize) {
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    pub(crate) fn swap_positions(&mut self, a: usize, b: usize) {
        self.images.swap(a, b);
    }
}

impl Serialize for Permutation {
    /// 1-based image array.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_based())
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraidWord", into = "RawBraidWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawBraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraidWord> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawBraidWord) -> Result<Self> {
        BraidWord::new(raw.n, raw.letters)
    }
}

impl From<BraidWord> for RawBraidWord {
    fn from(w: BraidWord) -> Self {
        RawBraidWord { n: w.strands, letters: w.letters }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn new_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(Self::new(strands, letters.clone()).is_ok());
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    /// `σ_1 σ_2 ⋯ σ_{n-1}`.
    pub fn cycle_word(strands: usize) -> Self {
        BraidWord::new_unchecked(strands, (1..strands as i32).collect())
    }

    /// `Δ = (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯σ_1`.
    pub fn half_twist(strands: usize) -> Self {
        let mut letters = Vec::new();
        for top in (1..strands as i32).rev() {
            letters.extend(1..=top);
        }
        BraidWord::new_unchecked(strands, letters)
    }

    /// `Δ² = (σ_1⋯σ_{n-1})^n`.
    pub fn full_twist(strands: usize) -> Self {
        Self::cycle_word(strands).pow(strands as i64)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&v| v > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&v| v.signum() as i64).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|v| -v).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Integer power; negative exponents repeat the inverse.
    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &v in &self.letters {
            if out.last() == Some(&-v) {
                out.pop();
            } else {
                out.push(v);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Same letters read on a larger strand count.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: strands });
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Letters shifted by `offset` positions on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<Self> {
        let o = offset as i32;
        let letters = self.letters.iter().map(|&v| if v > 0 { v + o } else { v - o }).collect();
        BraidWord::new(strands, letters)
    }
}

impl std::str::FromStr for BraidWord {
    type Err = BraidError;

    /// `B4: 2 3 1 2`; a token `v^k` (or `v×k`) stands for `k` copies of `v`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (header, body) = match text.split_once(':') {
            Some((h, b)) => (h.trim(), b),
            None => match text.split_once(char::is_whitespace) {
                Some((h, b)) => (h.trim(), b),
                None => (text, ""),
            },
        };
        let strands = header
            .strip_prefix('B')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| BraidError::Parse {
                token: header.to_string(),
                message: "expected a header `Bn`".into(),
            })?;
        let mut letters = Vec::new();
        for token in body.split_whitespace() {
            let bad = |message: &str| BraidError::Parse { token: token.to_string(), message: message.into() };
            let (letter, reps) = match token.split_once(['^', '×']) {
                Some((l, k)) => (l, k.parse::<usize>().map_err(|_| bad("bad repetition count"))?),
                None => (token, 1),
            };
            let v = letter.parse::<i32>().map_err(|_| bad("expected a signed generator index"))?;
            if v == 0 || v.unsigned_abs() as usize >= strands.max(1) {
                return Err(bad(&format!("generator out of range for B{strands}")));
            }
            letters.extend(std::iter::repeat_n(v, reps));
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for v in &self.letters {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// One component of the closure of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClosureComponent {
    /// Strand positions in cycle order, starting at the minimal one (0-based).
    cycle: Vec<usize>,
}

impl ClosureComponent {
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn strands(&self) -> BTreeSet<usize> {
        self.cycle.iter().copied().collect()
    }

    pub fn min_strand(&self) -> usize {
        self.cycle[0]
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn contains(&self, strand: usize) -> bool {
        self.cycle.contains(&strand)
    }
}

pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    let mut at = Permutation::identity(w.strands());
    // `at` maps a starting position to the current position of that strand
    for &v in w.letters() {
        let i = v.unsigned_abs() as usize - 1;
        at.swap_values(i, i + 1);
    }
    at
}

pub fn closure_components(w: &BraidWord) -> Vec<ClosureComponent> {
    underlying_permutation(w)
        .cycles()
        .into_iter()
        .map(|cycle| ClosureComponent { cycle })
        .collect()
}

fn check_component(w: &BraidWord, c: &ClosureComponent) -> Result<()> {
    if closure_components(w).contains(c) {
        Ok(())
    } else {
        Err(BraidError::NotAComponent)
    }
}

/// Calls `f(letter, strand_left, strand_right)` for each letter, where the
/// strands are identified by their starting positions.
fn for_each_crossing(w: &BraidWord, mut f: impl FnMut(i32, usize, usize)) {
    let mut occupant: Vec<usize> = (0..w.strands()).collect();
    for &v in w.letters() {
        let i = v.unsigned_abs() as usize - 1;
        f(v, occupant[i], occupant[i + 1]);
        occupant.swap(i, i + 1);
    }
}

/// Signed count of crossings between two strands of the component `c`.
pub fn component_writhe(w: &BraidWord, c: &ClosureComponent) -> Result<i64> {
    check_component(w, c)?;
    let mut writhe = 0;
    for_each_crossing(w, |v, a, b| {
        if c.contains(a) && c.contains(b) {
            writhe += v.signum() as i64;
        }
    });
    Ok(writhe)
}

/// Deletes every strand outside `keep` (starting positions) together with its crossings.
pub fn restrict_to_strands(w: &BraidWord, keep: &BTreeSet<usize>) -> Result<BraidWord> {
    if keep.is_empty() || keep.iter().any(|&s| s >= w.strands()) {
        return Err(BraidError::precondition("strand set out of range"));
    }
    let mut occupant: Vec<usize> = (0..w.strands()).collect();
    let mut letters = Vec::new();
    for &v in w.letters() {
        let i = v.unsigned_abs() as usize - 1;
        let (a, b) = (occupant[i], occupant[i + 1]);
        if keep.contains(&a) && keep.contains(&b) {
            // kept strands strictly left of position i
            let rank = occupant[..i].iter().filter(|s| keep.contains(s)).count() as i32;
            letters.push(v.signum() * (rank + 1));
        }
        occupant.swap(i, i + 1);
    }
    BraidWord::new(keep.len(), letters)
}

/// The closed braid of one component: all other strands removed.
pub fn restrict_to_component(w: &BraidWord, c: &ClosureComponent) -> Result<BraidWord> {
    check_component(w, c)?;
    restrict_to_strands(w, &c.strands())
}

/// Generators occurring in a positive word (1-based indices).
pub fn positive_support(w: &BraidWord) -> Result<BTreeSet<usize>> {
    if !w.is_positive() {
        return Err(BraidError::NotPositive);
    }
    Ok(w.letters().iter().map(|&v| v as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
    }

    #[test]
    fn parse_text_format() {
        assert_eq!("B4: 2 3 1 2".parse::<BraidWord>().unwrap(), bw(4, &[2, 3, 1, 2]));
        assert_eq!("B3:".parse::<BraidWord>().unwrap(), BraidWord::identity(3));
        assert_eq!("B2: 1^3 -1".parse::<BraidWord>().unwrap(), bw(2, &[1, 1, 1, -1]));
        assert_eq!("B2 1×2".parse::<BraidWord>().unwrap(), bw(2, &[1, 1]));
        let err = "B3: 1 x 2".parse::<BraidWord>().unwrap_err();
        assert!(matches!(err, BraidError::Parse { ref token, .. } if token == "x"));
        let err = "B3: 1 3".parse::<BraidWord>().unwrap_err();
        assert!(matches!(err, BraidError::Parse { ref token, .. } if token == "3"));
        assert!("C3: 1".parse::<BraidWord>().is_err());
        let w = bw(4, &[2, -3, 1]);
        assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn permutation_examples() {
        assert!(underlying_permutation(&bw(3, &[])).is_identity());
        // strand at 1 ends at 3, 3 ends at 2, 2 ends at 1
        assert_eq!(underlying_permutation(&bw(3, &[1, 2])).one_based(), vec![3, 1, 2]);
        assert_eq!(underlying_permutation(&bw(3, &[1, 2])).cycles().len(), 1);
        assert_eq!(underlying_permutation(&bw(2, &[1, 1, 1])).one_based(), vec![2, 1]);
    }

    #[test]
    fn permutation_of_concatenation() {
        let w1 = bw(4, &[1, -3, 2]);
        let w2 = bw(4, &[3, 3, -1, 2]);
        let p12 = underlying_permutation(&w1.concat(&w2).unwrap());
        assert_eq!(p12, underlying_permutation(&w1).then(&underlying_permutation(&w2)));
    }

    #[test]
    fn components() {
        assert_eq!(closure_components(&bw(2, &[1, 1, 1])).len(), 1);
        assert_eq!(closure_components(&bw(2, &[1, 1])).len(), 2);
        let c = closure_components(&bw(3, &[1, 1, 2, 2]));
        assert_eq!(c.len(), 3);
        assert_eq!(c.iter().map(|c| c.min_strand()).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn writhe_examples() {
        let tref = bw(2, &[1, 1, 1]);
        let c = &closure_components(&tref)[0];
        assert_eq!(component_writhe(&tref, c).unwrap(), 3);

        let hopf = bw(2, &[1, 1]);
        let c = &closure_components(&hopf)[0];
        assert_eq!(component_writhe(&hopf, c).unwrap(), 0);

        let mut letters = Vec::new();
        for _ in 0..3 {
            letters.extend([2, 3, 1, 2]);
        }
        letters.extend([1; 5]);
        let cable = bw(4, &letters);
        let comps = closure_components(&cable);
        assert_eq!(comps.len(), 1);
        assert_eq!(component_writhe(&cable, &comps[0]).unwrap(), 17);
    }

    #[test]
    fn writhe_rejects_foreign_component() {
        let w = bw(2, &[1, 1, 1]);
        let other = closure_components(&bw(2, &[1, 1]))[0].clone();
        assert_eq!(component_writhe(&w, &other), Err(BraidError::NotAComponent));
    }

    #[test]
    fn restriction_examples() {
        let ft = BraidWord::full_twist(3);
        let keep: BTreeSet<usize> = [0, 1].into_iter().collect();
        let r = restrict_to_strands(&ft, &keep).unwrap();
        assert_eq!(r, bw(2, &[1, 1]));

        let w = bw(3, &[1, 1, 2, 2]);
        let comps = closure_components(&w);
        assert_eq!(restrict_to_component(&w, &comps[1]).unwrap(), BraidWord::identity(1));

        let knot = bw(3, &[1, 2, 1, -2]);
        let comps = closure_components(&knot);
        assert_eq!(comps.len(), 1);
        assert_eq!(restrict_to_component(&knot, &comps[0]).unwrap(), knot);
    }

    #[test]
    fn support_examples() {
        assert_eq!(positive_support(&bw(3, &[1, 1])).unwrap(), [1].into_iter().collect());
        assert_eq!(positive_support(&bw(3, &[2, 1, 2])).unwrap(), [1, 2].into_iter().collect());
        assert_eq!(positive_support(&bw(3, &[1, -2])), Err(BraidError::NotPositive));
    }

    #[test]
    fn word_helpers() {
        assert_eq!(BraidWord::half_twist(3).letters(), &[1, 2, 1]);
        assert_eq!(BraidWord::full_twist(2).letters(), &[1, 1]);
        assert_eq!(bw(3, &[1, -1, 2]).freely_reduced(), bw(3, &[2]));
        assert_eq!(bw(2, &[1]).shifted(1, 3).unwrap(), bw(3, &[2]));
        assert_eq!(bw(3, &[1, -2]).exponent_sum(), 0);
    }
}

//! The Artin action of `B_n` on the free group `F_n`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, fixing the
//! other generators. The action is applied letter by letter from the left of
//! the braid word, so `act(w1·w2, g) = act(w2, act(w1, g))`. The action is
//! faithful, which makes it an independent word-problem oracle.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// A freely reduced word in `x_1, …, x_n`; letter `k` is `x_k`, `-k` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeWord::default();
        for v in letters {
            w.push(v);
        }
        w
    }

    pub fn generator(k: usize) -> Self {
        FreeWord { letters: vec![k as i32] }
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

    fn push(&mut self, v: i32) {
        debug_assert!(v != 0);
        if self.letters.last() == Some(&-v) {
            self.letters.pop();
        } else {
            self.letters.push(v);
        }
    }

    fn extend_from(&mut self, other: &FreeWord) {
        for &v in &other.letters {
            self.push(v);
        }
    }

    fn extend_inverse_of(&mut self, other: &FreeWord) {
        for &v in other.letters.iter().rev() {
            self.push(-v);
        }
    }

    pub fn inverse(&self) -> Self {
        FreeWord { letters: self.letters.iter().rev().map(|v| -v).collect() }
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Removes matching letters from both ends (cyclic reduction).
    pub fn cyclically_reduced(&self) -> Self {
        let l = &self.letters;
        let (mut a, mut b) = (0, l.len());
        while b >= a + 2 && l[a] == -l[b - 1] {
            a += 1;
            b -= 1;
        }
        FreeWord { letters: l[a..b].to_vec() }
    }

    /// Substitutes generator images: `x_k ↦ images[k-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let mut out = FreeWord::default();
        for &v in &self.letters {
            let img = &images[v.unsigned_abs() as usize - 1];
            if v > 0 {
                out.extend_from(img);
            } else {
                out.extend_inverse_of(img);
            }
        }
        out
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&v| if v > 0 { format!("x{v}") } else { format!("x{}^-1", -v) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Image of `g` under one generator `σ_{|letter|}^{±1}`.
fn apply_letter(letter: i32, g: &FreeWord) -> FreeWord {
    let i = letter.unsigned_abs() as i32;
    let mut out = FreeWord::default();
    for &v in &g.letters {
        let k = v.abs();
        let sign = v.signum();
        // image of x_k as a short word
        let image: &[i32] = if letter > 0 {
            if k == i {
                &[i, i + 1, -i]
            } else if k == i + 1 {
                &[i]
            } else {
                &[k]
            }
        } else if k == i {
            &[i + 1]
        } else if k == i + 1 {
            &[-(i + 1), i, i + 1]
        } else {
            &[k]
        };
        if sign > 0 {
            for &x in image {
                out.push(x);
            }
        } else {
            for &x in image.iter().rev() {
                out.push(-x);
            }
        }
    }
    out
}

pub fn artin_apply(w: &BraidWord, g: &FreeWord) -> Result<FreeWord> {
    if let Some(&bad) = g.letters.iter().find(|v| v.unsigned_abs() as usize > w.strands()) {
        return Err(BraidError::GeneratorOutOfRange(bad));
    }
    Ok(w.letters().iter().fold(g.clone(), |acc, &v| apply_letter(v, &acc)))
}

/// Images of `x_1, …, x_n` under the action of `w`.
pub fn generator_images(w: &BraidWord) -> Vec<FreeWord> {
    (1..=w.strands())
        .map(|k| artin_apply(w, &FreeWord::generator(k)).expect("generator in range"))
        .collect()
}

/// Word problem via faithfulness of the Artin action: equal generator images.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::StrandMismatch { left: w1.strands(), right: w2.strands() });
    }
    let (r1, r2) = (w1.freely_reduced(), w2.freely_reduced());
    for k in 1..=w1.strands() {
        let g = FreeWord::generator(k);
        if artin_apply(&r1, &g)? != artin_apply(&r2, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

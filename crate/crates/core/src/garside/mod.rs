//! Garside structure of `B_n`: left normal forms, infimum and supremum,
//! cycling and decycling, and super summit sets.

pub mod simple;
mod summit;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, Permutation};
use simple::Simple;

pub use summit::{
    conjugate_test, inf_s, sup_s, super_summit_set, summit_representative, SummitSet,
    DEFAULT_SSS_BUDGET,
};

/// `Δ^p x_1 ⋯ x_r` with left-weighted simple factors, none equal to `1` or `Δ`.
///
/// Equality of normal forms decides equality in `B_n`. The derived order
/// compares `(strands, delta_power, factors)` lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Simple>,
}

impl GarsideNormalForm {
    pub fn identity(n: usize) -> Self {
        GarsideNormalForm { strands: n, delta_power: 0, factors: Vec::new() }
    }

    pub fn delta_power_of(n: usize, p: i64) -> Self {
        Self::from_parts(n, p, Vec::new())
    }

    pub fn simple(s: &Simple) -> Self {
        Self::from_parts(s.len(), 0, vec![s.clone()])
    }

    /// Normalizes an arbitrary product `Δ^p · s_1 ⋯ s_k` of simples.
    pub fn from_parts(n: usize, p: i64, simples: Vec<Simple>) -> Self {
        let mut nf = GarsideNormalForm::identity(n);
        if n <= 1 {
            return nf;
        }
        nf.delta_power = p;
        for s in simples {
            nf.push_simple(s);
        }
        nf.settle();
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    /// Appends a simple on the right and restores left-weightedness.
    fn push_simple(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let changed = left_weight(&mut self.factors, k - 1);
            if !changed {
                break;
            }
            k -= 1;
        }
    }

    /// Slides until stable, then moves `Δ` factors into the power and drops identities.
    fn settle(&mut self) {
        loop {
            let mut changed = false;
            for k in 0..self.factors.len().saturating_sub(1) {
                changed |= left_weight(&mut self.factors, k);
            }
            if !changed {
                break;
            }
        }
        let deltas = self.factors.iter().take_while(|f| simple::is_delta(f)).count();
        self.factors.drain(..deltas);
        self.delta_power += deltas as i64;
        self.factors.retain(|f| !f.is_identity());
        debug_assert!(self.factors.iter().all(|f| !simple::is_delta(f)));
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &GarsideNormalForm) -> GarsideNormalForm {
        debug_assert_eq!(self.strands, other.strands);
        if self.strands <= 1 {
            return self.clone();
        }
        // Δ^p A Δ^q B = Δ^{p+q} τ^q(A) B
        let mut simples: Vec<Simple> =
            self.factors.iter().map(|f| simple::tau_pow(f, other.delta_power)).collect();
        simples.extend(other.factors.iter().cloned());
        GarsideNormalForm::from_parts(self.strands, self.delta_power + other.delta_power, simples)
    }

    pub fn inverse(&self) -> GarsideNormalForm {
        let n = self.strands;
        let mut out = GarsideNormalForm::identity(n);
        for f in self.factors.iter().rev() {
            // f^{-1} = Δ^{-1} τ(∂f)
            let piece = GarsideNormalForm::from_parts(
                n,
                -1,
                vec![simple::tau(&simple::right_complement(f))],
            );
            out = out.mul(&piece);
        }
        out.mul(&GarsideNormalForm::delta_power_of(n, -self.delta_power))
    }

    /// `c^{-1} · self · c`.
    pub fn conjugate_by(&self, c: &GarsideNormalForm) -> GarsideNormalForm {
        c.inverse().mul(self).mul(c)
    }

    /// `τ^k(self) = Δ^k self Δ^{-k}`.
    pub fn tau_pow(&self, k: i64) -> GarsideNormalForm {
        GarsideNormalForm {
            strands: self.strands,
            delta_power: self.delta_power,
            factors: self.factors.iter().map(|f| simple::tau_pow(f, k)).collect(),
        }
    }

    /// Positive part `x_1 ⋯ x_r` as a normal form with zero `Δ`-power.
    pub fn positive_part(&self) -> GarsideNormalForm {
        GarsideNormalForm { strands: self.strands, delta_power: 0, factors: self.factors.clone() }
    }

    pub fn exponent_sum(&self) -> i64 {
        let n = self.strands as i64;
        let delta_len = n * (n - 1) / 2;
        self.delta_power * delta_len + self.factors.iter().map(|f| f.inversions() as i64).sum::<i64>()
    }

    /// A word for the element: `Δ`-power first, then the simple factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::half_twist(n);
        let mut w = delta.pow(self.delta_power);
        for f in &self.factors {
            w = w.concat(&simple::simple_to_word(f)).expect("same strand count");
        }
        w
    }

    /// Cycling `c(β) = Δ^p x_2 ⋯ x_r τ^p(x_1)`, with its conjugator `τ^p(x_1)`.
    pub fn cycling_with_conjugator(&self) -> (GarsideNormalForm, Simple) {
        match self.factors.first() {
            None => (self.clone(), Permutation::identity(self.strands)),
            Some(first) => {
                let c = simple::tau_pow(first, self.delta_power);
                let mut simples = self.factors[1..].to_vec();
                simples.push(c.clone());
                (GarsideNormalForm::from_parts(self.strands, self.delta_power, simples), c)
            }
        }
    }

    pub fn cycling(&self) -> GarsideNormalForm {
        self.cycling_with_conjugator().0
    }

    /// Decycling `d(β) = x_r Δ^p x_1 ⋯ x_{r-1}`; conjugating by `x_r^{-1}`.
    pub fn decycling(&self) -> GarsideNormalForm {
        match self.factors.last() {
            None => self.clone(),
            Some(last) => {
                let mut simples = vec![simple::tau_pow(last, self.delta_power)];
                simples.extend(self.factors[..self.factors.len() - 1].iter().cloned());
                GarsideNormalForm::from_parts(self.strands, self.delta_power, simples)
            }
        }
    }
}

/// Left-weights the adjacent pair at `k, k+1`; reports whether anything moved.
fn left_weight(factors: &mut [Simple], k: usize) -> bool {
    let (left, right) = factors.split_at_mut(k + 1);
    let a = &mut left[k];
    let b = &mut right[0];
    let n = a.len();
    let mut changed = false;
    'outer: loop {
        for i in 0..n - 1 {
            // σ_i can move from the front of b to the back of a
            if !simple::ends_with(a, i) && simple::starts_with(b, i) {
                a.swap_values(i, i + 1);
                b.swap_positions(i, i + 1);
                changed = true;
                continue 'outer;
            }
        }
        return changed;
    }
}

impl fmt::Debug for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF(B{}: Δ^{}", self.strands, self.delta_power)?;
        for x in &self.factors {
            write!(f, " {x:?}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for GarsideNormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GarsideNormalForm", 3)?;
        st.serialize_field("strands", &self.strands)?;
        st.serialize_field("delta_power", &self.delta_power)?;
        let factors: Vec<Vec<usize>> = self.factors.iter().map(|f| f.one_based()).collect();
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

pub fn simple_to_word(s: &Simple) -> BraidWord {
    simple::simple_to_word(s)
}

pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let mut nf = GarsideNormalForm::identity(n);
    if n <= 1 {
        return nf;
    }
    for &v in w.letters() {
        let i = v.unsigned_abs() as usize - 1;
        if v > 0 {
            nf.push_simple(simple::atom(n, i));
        } else {
            // σ_i^{-1} = Δ^{-1}·c with c·σ_i = Δ; move Δ^{-1} to the front
            for f in nf.factors.iter_mut() {
                *f = simple::tau(f);
            }
            nf.delta_power -= 1;
            nf.push_simple(simple::left_complement(&simple::atom(n, i)));
        }
    }
    nf.settle();
    nf
}

pub fn inf(nf: &GarsideNormalForm) -> i64 {
    nf.inf()
}

pub fn sup(nf: &GarsideNormalForm) -> i64 {
    nf.sup()
}

/// Number of full twists contained in a braid, together with the raw infimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FullTwists {
    /// `max(0, ⌊inf/2⌋)`; for `n = 1` every braid is trivial and this is `i64::MAX`.
    pub count: i64,
    pub inf: i64,
}

pub fn full_twist_count(w: &BraidWord) -> FullTwists {
    if w.strands() <= 1 {
        return FullTwists { count: i64::MAX, inf: 0 };
    }
    let inf = normal_form(w).inf();
    FullTwists { count: inf.div_euclid(2).max(0), inf }
}

/// Whether `Δ^{-2k}·w` is positive (`k ≥ 0`).
pub fn contains_full_twists(w: &BraidWord, k: i64) -> bool {
    w.strands() <= 1 || normal_form(w).inf() >= 2 * k
}

pub fn cycling(nf: &GarsideNormalForm) -> GarsideNormalForm {
    nf.cycling()
}

pub fn decycling(nf: &GarsideNormalForm) -> GarsideNormalForm {
    nf.decycling()
}

/// Checks the left-weighted invariant of a normal form.
pub fn is_left_weighted(nf: &GarsideNormalForm) -> bool {
    nf.factors.windows(2).all(|pair| {
        let fin = simple::finishing_set(&pair[0]);
        simple::starting_set(&pair[1]).is_subset(&fin)
    }) && nf.factors.iter().all(|f| !f.is_identity() && !simple::is_delta(f))
}

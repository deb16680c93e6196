//! Super summit sets and the conjugacy test.
//!
//! A summit element is reached by iterated cycling (raising `inf`) and then
//! iterated decycling (lowering `sup`). The set is then closed under
//! conjugation by minimal simple conjugators: for each atom `σ_i`, the
//! smallest simple `ρ ≽ σ_i` with `ρ^{-1}βρ` still in the set.

use std::collections::{HashMap, HashSet, VecDeque};

use super::simple::{self, Simple};
use super::{normal_form, GarsideNormalForm};
use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

pub const DEFAULT_SSS_BUDGET: usize = 1_000_000;

/// A super summit set in canonical (sorted) order, with a conjugator for each element.
#[derive(Debug, Clone)]
pub struct SummitSet {
    elements: Vec<GarsideNormalForm>,
    // conjugators[i]^{-1} · input · conjugators[i] = elements[i]
    conjugators: Vec<GarsideNormalForm>,
}

impl SummitSet {
    pub fn elements(&self) -> &[GarsideNormalForm] {
        &self.elements
    }

    pub fn conjugator(&self, index: usize) -> &GarsideNormalForm {
        &self.conjugators[index]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn inf_s(&self) -> i64 {
        self.elements[0].inf()
    }

    pub fn sup_s(&self) -> i64 {
        self.elements[0].sup()
    }

    pub fn contains(&self, nf: &GarsideNormalForm) -> bool {
        self.elements.binary_search(nf).is_ok()
    }
}

/// Iterates `step` until the tracked bound stops improving along a periodic orbit.
fn iterate_to_extremum(
    start: GarsideNormalForm,
    conj: GarsideNormalForm,
    step: impl Fn(&GarsideNormalForm) -> (GarsideNormalForm, GarsideNormalForm),
    score: impl Fn(&GarsideNormalForm) -> i64,
) -> (GarsideNormalForm, GarsideNormalForm) {
    let (mut cur, mut conj) = (start, conj);
    let mut best = score(&cur);
    let mut seen: HashSet<GarsideNormalForm> = HashSet::new();
    seen.insert(cur.clone());
    loop {
        let (next, c) = step(&cur);
        conj = conj.mul(&c);
        cur = next;
        let s = score(&cur);
        if s > best {
            best = s;
            seen.clear();
            seen.insert(cur.clone());
        } else if !seen.insert(cur.clone()) {
            return (cur, conj);
        }
    }
}

/// An element of the super summit set conjugate to `nf`, with the conjugator used.
pub fn summit_representative(nf: &GarsideNormalForm) -> (GarsideNormalForm, GarsideNormalForm) {
    let n = nf.strands();
    let id = GarsideNormalForm::identity(n);
    if nf.factors().is_empty() {
        return (nf.clone(), id);
    }
    let cycle = |x: &GarsideNormalForm| {
        let (c, s) = x.cycling_with_conjugator();
        (c, GarsideNormalForm::simple(&s))
    };
    let decycle = |x: &GarsideNormalForm| {
        let conj = match x.factors().last() {
            Some(last) => GarsideNormalForm::simple(last).inverse(),
            None => GarsideNormalForm::identity(n),
        };
        (x.decycling(), conj)
    };
    let (up, c1) = iterate_to_extremum(nf.clone(), id, cycle, |x| x.inf());
    iterate_to_extremum(up, c1, decycle, |x| -x.sup())
}

/// One enlargement step towards the minimal `s' ≽ s` with `inf(s'^{-1} α s') ≥ inf(α)`.
///
/// Writing `α = Δ^p a`, the condition is `τ^p(s) ≼ a·s`; any valid `s' ≽ s`
/// satisfies `a·s' ≽ τ^p(s) ∨ a·s = a·s·v`, so `s·v` is a lower bound.
fn inf_step(alpha: &GarsideNormalForm, s: &Simple) -> Simple {
    let mut u = simple::tau_pow(s, alpha.delta_power());
    for y in alpha.factors().iter().chain(std::iter::once(s)) {
        // y ∨ u = y · u'
        let j = simple::join(y, &u);
        u = simple::left_quotient(y, &j).expect("y is a prefix of the join");
    }
    simple::product_if_simple(s, &u)
        .expect("minimal conjugator stays below Δ")
}

fn minimal_conjugator(
    alpha: &GarsideNormalForm,
    alpha_inv: &GarsideNormalForm,
    atom: usize,
) -> Simple {
    let mut s = simple::atom(alpha.strands(), atom);
    loop {
        let t = inf_step(alpha, &s);
        let t = inf_step(alpha_inv, &t);
        if t == s {
            return s;
        }
        s = t;
    }
}

fn conjugate_by_simple(alpha: &GarsideNormalForm, s: &Simple) -> GarsideNormalForm {
    alpha.conjugate_by(&GarsideNormalForm::simple(s))
}

fn compute_sss(w: &BraidWord, budget: usize) -> Result<SummitSet> {
    let nf = normal_form(w);
    let n = nf.strands();
    let (start, start_conj) = summit_representative(&nf);

    // nodes store the parent index and the simple used to reach them
    let mut nodes: Vec<(GarsideNormalForm, Option<(usize, Simple)>)> = vec![(start.clone(), None)];
    let mut index: HashMap<GarsideNormalForm, usize> = HashMap::new();
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        let alpha = nodes[cur].0.clone();
        if alpha.factors().is_empty() {
            // Δ^p: conjugates are Δ^p itself
            continue;
        }
        let alpha_inv = alpha.inverse();
        for atom in 0..n - 1 {
            let rho = minimal_conjugator(&alpha, &alpha_inv, atom);
            let next = conjugate_by_simple(&alpha, &rho);
            debug_assert_eq!(next.inf(), alpha.inf());
            debug_assert_eq!(next.sup(), alpha.sup());
            if !index.contains_key(&next) {
                if nodes.len() >= budget {
                    return Err(BraidError::BudgetExceeded(budget));
                }
                index.insert(next.clone(), nodes.len());
                queue.push_back(nodes.len());
                nodes.push((next, Some((cur, rho))));
            }
        }
    }

    // conjugators from the input: start_conj · ρ_1 · ρ_2 ⋯ along the BFS tree
    let mut conjugators: Vec<GarsideNormalForm> = Vec::with_capacity(nodes.len());
    for (_, parent) in &nodes {
        let c = match parent {
            None => start_conj.clone(),
            Some((p, rho)) => conjugators[*p].mul(&GarsideNormalForm::simple(rho)),
        };
        conjugators.push(c);
    }
    let mut pairs: Vec<(GarsideNormalForm, GarsideNormalForm)> =
        nodes.into_iter().map(|(e, _)| e).zip(conjugators).collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let (elements, conjugators) = pairs.into_iter().unzip();
    Ok(SummitSet { elements, conjugators })
}

/// The super summit set of `w` in canonical order, capped at `budget` elements.
pub fn super_summit_set(w: &BraidWord, budget: usize) -> Result<SummitSet> {
    compute_sss(w, budget)
}

pub fn inf_s(w: &BraidWord) -> Result<i64> {
    let nf = normal_form(w);
    Ok(summit_representative(&nf).0.inf())
}

pub fn sup_s(w: &BraidWord) -> Result<i64> {
    let nf = normal_form(w);
    Ok(summit_representative(&nf).0.sup())
}

/// Conjugacy in `B_n`: equal super summit sets.
pub fn conjugate_test(w1: &BraidWord, w2: &BraidWord, budget: usize) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::StrandMismatch { left: w1.strands(), right: w2.strands() });
    }
    if w1.exponent_sum() != w2.exponent_sum() {
        return Ok(false);
    }
    if crate::braid::underlying_permutation(w1).cycles().len()
        != crate::braid::underlying_permutation(w2).cycles().len()
    {
        return Ok(false);
    }
    let (r1, _) = summit_representative(&normal_form(w1));
    let (r2, _) = summit_representative(&normal_form(w2));
    if r1.inf() != r2.inf() || r1.sup() != r2.sup() {
        return Ok(false);
    }
    let sss = compute_sss(w1, budget)?;
    Ok(sss.contains(&r2))
}

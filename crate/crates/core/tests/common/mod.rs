#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use braidsat_core::garside::{normal_form, GarsideNormalForm};
use braidsat_core::{BraidWord, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bw(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn random_word(r: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let v = r.gen_range(1..n as i32);
            if r.gen_bool(0.5) {
                v
            } else {
                -v
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_positive(r: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    BraidWord::new(n, (0..len).map(|_| r.gen_range(1..n as i32)).collect()).unwrap()
}

/// Applies random braid relations and free insertions; the result is the same element.
pub fn scramble(r: &mut ChaCha8Rng, w: &BraidWord, moves: usize) -> BraidWord {
    let n = w.strands() as i32;
    let mut l = w.letters().to_vec();
    for _ in 0..moves {
        match r.gen_range(0..3) {
            0 => {
                let v = r.gen_range(1..n);
                let v = if r.gen_bool(0.5) { v } else { -v };
                let at = r.gen_range(0..=l.len());
                l.splice(at..at, [v, -v]);
            }
            1 if l.len() >= 2 => {
                let at = r.gen_range(0..l.len() - 1);
                if (l[at].abs() - l[at + 1].abs()).abs() >= 2 {
                    l.swap(at, at + 1);
                }
            }
            _ if l.len() >= 3 => {
                let at = r.gen_range(0..l.len() - 2);
                let (a, b, c) = (l[at], l[at + 1], l[at + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    l[at] = b;
                    l[at + 1] = a;
                    l[at + 2] = b;
                }
            }
            _ => {}
        }
    }
    BraidWord::new(w.strands(), l).unwrap()
}

pub fn all_words(n: usize, max_len: usize, positive_only: bool) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..n as i32)
        .flat_map(|v| if positive_only { vec![v] } else { vec![v, -v] })
        .collect();
    let mut out = vec![BraidWord::identity(n)];
    let mut frontier = vec![Vec::<i32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &a in &alphabet {
                let mut x = w.clone();
                x.push(a);
                out.push(BraidWord::new(n, x.clone()).unwrap());
                next.push(x);
            }
        }
        frontier = next;
    }
    out
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut out);
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == idx.len() {
        out.push(Permutation::from_images(idx.clone()).unwrap());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}

/// Super summit set by brute force: close the summit element under
/// conjugation by every simple braid, keeping elements with the same inf and sup.
pub fn brute_force_sss(start: &GarsideNormalForm) -> BTreeSet<GarsideNormalForm> {
    let simples: Vec<GarsideNormalForm> =
        all_perms(start.strands()).iter().map(GarsideNormalForm::simple).collect();
    let (inf, sup) = (start.inf(), start.sup());
    let mut seen: HashSet<GarsideNormalForm> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in &simples {
            let y = x.conjugate_by(s);
            assert!(y.inf() <= inf && y.sup() >= sup, "summit element is not extremal");
            if y.inf() == inf && y.sup() == sup && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn shuffle_conjugate(r: &mut ChaCha8Rng, w: &BraidWord, len: usize) -> BraidWord {
    let a = random_word(r, w.strands(), len);
    let mut l = a.inverse().letters().to_vec();
    l.extend_from_slice(w.letters());
    l.extend_from_slice(a.letters());
    let mut out = BraidWord::new(w.strands(), l).unwrap();
    if r.gen_bool(0.5) {
        out = scramble(r, &out, 6);
    }
    out
}

pub fn nf(w: &BraidWord) -> GarsideNormalForm {
    normal_form(w)
}

pub fn pick<'a, T>(r: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    xs.choose(r).unwrap()
}

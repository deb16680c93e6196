//! Round reductions and regular forms.
//!
//! A braid preserving a round partition factors as a cabled exterior braid
//! followed by braids inside the tubes. Sliding the tube contents to the end
//! and conjugating gathers them into one interior per exterior component.

use serde::Serialize;

use crate::braid::{closure_components, underlying_permutation, BraidWord, Permutation};
use crate::curves::{delta_power_image, nf_preserves_partition, simple_round_image, RoundBlockPartition};
use crate::error::{BraidError, Result};
use crate::garside::simple::Simple;
use crate::garside::{normal_form, super_summit_set, GarsideNormalForm};
use crate::satellite::cable;

/// A conjugate of the input that preserves a round partition.
#[derive(Debug, Clone, Serialize)]
pub struct RoundReduction {
    /// `conjugator^{-1} · input · conjugator = representative`.
    pub conjugator: BraidWord,
    pub representative: GarsideNormalForm,
    pub partition: RoundBlockPartition,
    pub block_permutation: Permutation,
}

/// Exterior braid on `m` strands, tube sizes by starting position, and one
/// interior braid per closure component of the exterior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularForm {
    exterior: BraidWord,
    sizes: Vec<usize>,
    interiors: Vec<BraidWord>,
}

impl RegularForm {
    /// Interiors follow the order of `closure_components(exterior)`.
    pub fn new(exterior: BraidWord, sizes: Vec<usize>, interiors: Vec<BraidWord>) -> Result<Self> {
        if sizes.len() != exterior.strands() || sizes.contains(&0) {
            return Err(BraidError::precondition("one positive tube size per exterior strand"));
        }
        let comps = closure_components(&exterior);
        if comps.len() != interiors.len() {
            return Err(BraidError::precondition(format!(
                "{} interiors for {} exterior components",
                interiors.len(),
                comps.len()
            )));
        }
        for (c, inner) in comps.iter().zip(&interiors) {
            let size = sizes[c.min_strand()];
            if c.cycle().iter().any(|&s| sizes[s] != size) {
                return Err(BraidError::precondition("tube sizes vary along an exterior component"));
            }
            if inner.strands() != size {
                return Err(BraidError::StrandMismatch { left: inner.strands(), right: size });
            }
        }
        Ok(RegularForm { exterior, sizes, interiors })
    }

    pub fn exterior(&self) -> &BraidWord {
        &self.exterior
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn interiors(&self) -> &[BraidWord] {
        &self.interiors
    }

    pub fn strands(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The braid on `Σ sizes` strands: cabled exterior, then each interior in
    /// the tube at its component's minimal strand.
    pub fn render(&self) -> BraidWord {
        let n = self.strands();
        let mut w = cable(&self.exterior, &self.sizes).expect("sizes checked at construction");
        for (c, inner) in closure_components(&self.exterior).iter().zip(&self.interiors) {
            let offset: usize = self.sizes[..c.min_strand()].iter().sum();
            let placed = inner.shifted(offset, n).expect("interior fits its tube");
            w = w.concat(&placed).expect("same strand count");
        }
        w
    }
}

/// First round reduction found in the super summit set.
///
/// Partitions are scanned in the order of [`RoundBlockPartition::all_essential`];
/// for each, the summit elements in canonical order.
pub fn find_round_reduction(w: &BraidWord, budget: usize) -> Result<Option<RoundReduction>> {
    let n = w.strands();
    if n < 3 {
        return Ok(None);
    }
    let sss = super_summit_set(w, budget)?;
    for p in RoundBlockPartition::all_essential(n) {
        for (i, e) in sss.elements().iter().enumerate() {
            if let Some(block_permutation) = nf_preserves_partition(e, &p) {
                return Ok(Some(RoundReduction {
                    conjugator: sss.conjugator(i).to_word(),
                    representative: e.clone(),
                    partition: p,
                    block_permutation,
                }));
            }
        }
    }
    Ok(None)
}

/// A stretch of the braid, relative to the partition in force before it.
enum Piece {
    /// Braids inside the tubes, by current block position.
    Interior(Vec<BraidWord>),
    /// A braid on the tubes themselves.
    Exterior(BraidWord),
}

fn interior_half_twists(q: &RoundBlockPartition, power: i64) -> Piece {
    Piece::Interior(q.sizes().iter().map(|&s| BraidWord::half_twist(s).pow(power)).collect())
}

/// Splits a simple factor into tube contents and the block permutation braid.
fn split_simple(s: &Simple, q: &RoundBlockPartition) -> (Piece, Piece, RoundBlockPartition) {
    let (next, block_map) = simple_round_image(s, q).expect("factor keeps the partition round");
    let mut interiors = Vec::with_capacity(q.blocks());
    for (&o, &size) in q.offsets().iter().zip(q.sizes()) {
        let lo = (o..o + size).map(|x| s.apply(x)).min().expect("nonempty block");
        let rel = Permutation::from_images((o..o + size).map(|x| s.apply(x) - lo).collect())
            .expect("block lands on an interval");
        interiors.push(crate::garside::simple_to_word(&rel));
    }
    let exterior = Permutation::from_images(block_map).expect("block map is a bijection");
    (
        Piece::Interior(interiors),
        Piece::Exterior(crate::garside::simple_to_word(&exterior)),
        next,
    )
}

fn pieces_of(nf: &GarsideNormalForm, p: &RoundBlockPartition) -> Vec<Piece> {
    let m = p.blocks();
    let mut out = Vec::new();
    let mut q = p.clone();
    let power = nf.delta_power();
    for _ in 0..power.unsigned_abs() {
        let r = q.reversed();
        if power > 0 {
            // Δ = (Δ on each tube) · cable(Δ_m)
            out.push(interior_half_twists(&q, 1));
            out.push(Piece::Exterior(BraidWord::half_twist(m)));
        } else {
            // Δ^{-1} = cable(Δ_m)^{-1} · (Δ^{-1} on each tube)
            out.push(Piece::Exterior(BraidWord::half_twist(m).inverse()));
            out.push(interior_half_twists(&r, -1));
        }
        q = r;
    }
    debug_assert_eq!(q, delta_power_image(p, power));
    for f in nf.factors() {
        let (inner, outer, next) = split_simple(f, &q);
        out.push(inner);
        out.push(outer);
        q = next;
    }
    debug_assert_eq!(&q, p);
    out
}

/// Regular form of a braid preserving `p`, and the conjugator `A` with
/// `render = A^{-1} · w · A`.
pub fn extract_regular_form(w: &BraidWord, p: &RoundBlockPartition) -> Result<(RegularForm, BraidWord)> {
    if p.strands() != w.strands() {
        return Err(BraidError::StrandMismatch { left: p.strands(), right: w.strands() });
    }
    let nf = normal_form(w);
    if nf_preserves_partition(&nf, p).is_none() {
        return Err(BraidError::PartitionNotPreserved);
    }
    let m = p.blocks();
    let pieces = pieces_of(&nf, p);

    // exterior permutation after each piece, to slide tube contents to the end
    let mut exterior = BraidWord::identity(m);
    for piece in &pieces {
        if let Piece::Exterior(e) = piece {
            exterior = exterior.concat(e)?;
        }
    }
    let total = underlying_permutation(&exterior);
    let mut done = Permutation::identity(m);
    let mut gathered: Vec<BraidWord> = p.sizes().iter().map(|&s| BraidWord::identity(s)).collect();
    for piece in &pieces {
        match piece {
            Piece::Exterior(e) => done = done.then(&underlying_permutation(e)),
            Piece::Interior(blocks) => {
                // block at position j now sits where the remaining exterior sends it
                let rest = done.inverse().then(&total);
                for (j, inner) in blocks.iter().enumerate() {
                    let at = rest.apply(j);
                    gathered[at] = gathered[at].concat(inner)?;
                }
            }
        }
    }

    // gather along each exterior component: G = J_{j1} J_{j2} ⋯ J_{jk}
    let offsets = p.offsets();
    let n = w.strands();
    let mut conj_blocks: Vec<BraidWord> = p.sizes().iter().map(|&s| BraidWord::identity(s)).collect();
    let mut interiors = Vec::new();
    let comps = closure_components(&exterior);
    for c in &comps {
        let cyc = c.cycle();
        let mut g = BraidWord::identity(p.sizes()[cyc[0]]);
        let mut prev = BraidWord::identity(p.sizes()[cyc[0]]);
        for &j in cyc {
            g = g.concat(&gathered[j])?;
            // A_{j_t} = J_{j_t}^{-1} A_{j_{t-1}}
            let a = gathered[j].inverse().concat(&prev)?;
            conj_blocks[j] = a.clone();
            prev = a;
        }
        interiors.push(normal_form(&g).to_word());
    }
    let mut conjugator = BraidWord::identity(n);
    for (j, a) in conj_blocks.iter().enumerate() {
        conjugator = conjugator.concat(&a.shifted(offsets[j], n)?)?;
    }
    let conjugator = normal_form(&conjugator).to_word();

    let exterior = normal_form(&exterior).to_word();
    let form = RegularForm::new(exterior, p.sizes().to_vec(), interiors)?;
    let lhs = normal_form(&form.render());
    let rhs = nf.conjugate_by(&normal_form(&conjugator));
    if lhs != rhs {
        return Err(BraidError::internal("regular form does not reproduce the conjugate"));
    }
    Ok((form, conjugator))
}

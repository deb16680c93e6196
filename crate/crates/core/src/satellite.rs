//! Braided satellites: cabling, construction, positivity criteria and the
//! full-twist thresholds for fully positive satellites.

use serde::Serialize;

use crate::braid::{closure_components, component_writhe, underlying_permutation, BraidWord};
use crate::error::{BraidError, Result};
use crate::garside::{full_twist_count, inf_s, normal_form};
use crate::reduction::RegularForm;

/// Replaces exterior strand `j` (by starting position) with `sizes[j]` parallel
/// strands; sizes must be constant along each closure component.
pub fn cable(w: &BraidWord, sizes: &[usize]) -> Result<BraidWord> {
    let perm = underlying_permutation(w);
    if sizes.len() == w.strands() && (0..sizes.len()).any(|j| sizes[perm.apply(j)] != sizes[j]) {
        return Err(BraidError::precondition("sizes vary along a closure component"));
    }
    cable_open(w, sizes)
}

/// Cabling without the closure condition: the result need not close up into tubes.
pub fn cable_open(w: &BraidWord, sizes: &[usize]) -> Result<BraidWord> {
    if sizes.len() != w.strands() || sizes.contains(&0) {
        return Err(BraidError::precondition("one positive size per strand"));
    }
    let n: usize = sizes.iter().sum();
    let mut cur = sizes.to_vec();
    let mut letters = Vec::new();
    for &v in w.letters() {
        let i = v.unsigned_abs() as usize - 1;
        let o: usize = cur[..i].iter().sum();
        let (a, b) = (cur[i], cur[i + 1]);
        if v > 0 {
            letters.extend(block_crossing(o, a, b));
        } else {
            // inverse of the positive crossing that starts from sizes (b, a)
            letters.extend(block_crossing(o, b, a).iter().rev().map(|x| -x));
        }
        cur.swap(i, i + 1);
    }
    BraidWord::new(n, letters)
}

/// Block of `a` strands at offset `o` passing over to the right of `b` strands.
fn block_crossing(o: usize, a: usize, b: usize) -> Vec<i32> {
    let mut out = Vec::with_capacity(a * b);
    for j in (0..a).rev() {
        out.extend((o + j + 1..=o + j + b).map(|x| x as i32));
    }
    out
}

/// Companion braid and one pattern braid per closure component of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteSpec {
    companion: BraidWord,
    patterns: Vec<BraidWord>,
}

impl SatelliteSpec {
    /// Patterns follow the order of `closure_components(companion)`.
    pub fn new(companion: BraidWord, patterns: Vec<BraidWord>) -> Result<Self> {
        let comps = closure_components(&companion).len();
        if patterns.len() != comps {
            return Err(BraidError::precondition(format!(
                "{} patterns for {comps} companion components",
                patterns.len()
            )));
        }
        Ok(SatelliteSpec { companion, patterns })
    }

    pub fn companion(&self) -> &BraidWord {
        &self.companion
    }

    pub fn patterns(&self) -> &[BraidWord] {
        &self.patterns
    }

    /// Some pattern has more than one strand.
    pub fn is_nontrivial(&self) -> bool {
        self.patterns.iter().any(|p| p.strands() >= 2)
    }
}

/// The satellite braid and its regular form; interior `i` is `Δ^{-2w(C_i)} β_i`.
pub fn build_satellite(s: &SatelliteSpec) -> Result<(BraidWord, RegularForm)> {
    let ext = s.companion();
    let comps = closure_components(ext);
    let mut sizes = vec![0; ext.strands()];
    let mut interiors = Vec::with_capacity(comps.len());
    for (c, pattern) in comps.iter().zip(s.patterns()) {
        for &j in c.cycle() {
            sizes[j] = pattern.strands();
        }
        let w = component_writhe(ext, c)?;
        let framed = BraidWord::full_twist(pattern.strands()).pow(-w).concat(pattern)?;
        interiors.push(normal_form(&framed).to_word());
    }
    let form = RegularForm::new(ext.clone(), sizes, interiors)?;
    Ok((form.render(), form))
}

/// Both readings of the regular-form positivity criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityVerdict {
    pub k: i64,
    pub exterior_ok: bool,
    pub interiors_ok: Vec<bool>,
    /// Exterior and every interior pass.
    pub componentwise: bool,
    /// `inf_s` of the rendered braid is at least `2k`.
    pub direct: bool,
}

impl PositivityVerdict {
    pub fn agree(&self) -> bool {
        self.componentwise == self.direct
    }
}

/// Exterior needs `k` full twists, interior `i` needs `k·b(C_i)`.
pub fn check_regular_positive(r: &RegularForm, k: i64) -> Result<PositivityVerdict> {
    if k < 0 {
        return Err(BraidError::precondition("k must be non-negative"));
    }
    let exterior_ok = contains_twists(r.exterior(), k);
    let comps = closure_components(r.exterior());
    let interiors_ok: Vec<bool> = comps
        .iter()
        .zip(r.interiors())
        .map(|(c, inner)| contains_twists(inner, k * c.len() as i64))
        .collect();
    let componentwise = exterior_ok && interiors_ok.iter().all(|&b| b);
    let direct = inf_s(&r.render())? >= 2 * k;
    Ok(PositivityVerdict { k, exterior_ok, interiors_ok, componentwise, direct })
}

/// Positive with at least `k` full twists (`Δ_1` is trivial, so `B_1` always passes).
fn contains_twists(w: &BraidWord, k: i64) -> bool {
    let ft = full_twist_count(w);
    ft.inf >= 0 && ft.count >= k
}

/// Minimum full twists in the pattern on a component with genus `g`, braid index `b`.
pub fn threshold_full_twists(g: i64, b: i64, k: i64) -> Result<i64> {
    if k <= 0 {
        return Err(BraidError::precondition("k must be positive"));
    }
    if g < 0 || b < 1 {
        return Err(BraidError::precondition("need g ≥ 0 and b ≥ 1"));
    }
    Ok(2 * g + (k + 1) * b - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentStats {
    /// Starting positions (1-based) of the component's strands.
    pub strands: Vec<usize>,
    pub braid_index: i64,
    pub writhe: i64,
    pub genus: i64,
}

/// Per-component braid index, writhe and genus of a fully positive braid.
pub fn companion_stats(w: &BraidWord) -> Result<Vec<ComponentStats>> {
    if !w.is_positive() || full_twist_count(w).count < 1 {
        return Err(BraidError::precondition("companion must be positive with a full twist"));
    }
    closure_components(w)
        .iter()
        .map(|c| {
            let b = c.len() as i64;
            let writhe = component_writhe(w, c)?;
            let twice = writhe - b + 1;
            if twice < 0 || twice % 2 != 0 {
                return Err(BraidError::internal(format!(
                    "component writhe {writhe} and index {b} give no integral genus"
                )));
            }
            let mut strands: Vec<usize> = c.cycle().iter().map(|s| s + 1).collect();
            strands.sort();
            Ok(ComponentStats { strands, braid_index: b, writhe, genus: twice / 2 })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentThreshold {
    pub stats: ComponentStats,
    pub pattern_strands: usize,
    /// `2g + 2b - 1`.
    pub required: i64,
    /// Full twists of the pattern braid itself.
    pub observed: i64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub components: Vec<ComponentThreshold>,
    /// Companion has one strand: the satellite is the pattern in a standard solid torus.
    pub degenerate: bool,
    pub condition_b: bool,
    pub rendered: BraidWord,
    pub rendered_inf_s: i64,
    pub condition_a: bool,
    pub biconditional_holds: bool,
}

/// Evaluates both sides of the characterization of fully positive satellites.
pub fn verify_main_theorem(s: &SatelliteSpec) -> Result<ThresholdReport> {
    if !s.is_nontrivial() {
        return Err(BraidError::precondition("every pattern is a single strand"));
    }
    let stats = companion_stats(s.companion())?;
    let mut components = Vec::with_capacity(stats.len());
    for (st, pattern) in stats.into_iter().zip(s.patterns()) {
        let required = threshold_full_twists(st.genus, st.braid_index, 1)?;
        let ft = full_twist_count(pattern);
        let observed = if ft.inf < 0 { ft.inf.div_euclid(2) } else { ft.count };
        components.push(ComponentThreshold {
            stats: st,
            pattern_strands: pattern.strands(),
            required,
            observed,
            satisfied: ft.inf >= 0 && observed >= required,
        });
    }
    let condition_b = components.iter().all(|c| c.satisfied);
    let (rendered, _) = build_satellite(s)?;
    let rendered_inf_s = inf_s(&rendered)?;
    let condition_a = rendered_inf_s >= 2;
    Ok(ThresholdReport {
        components,
        degenerate: s.companion().strands() == 1,
        condition_b,
        rendered,
        rendered_inf_s,
        condition_a,
        biconditional_holds: condition_a == condition_b,
    })
}

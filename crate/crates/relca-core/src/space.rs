//! The space of acceptable families: interval enumeration, pruning, closure
//! images and sublattice verification.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::engine::{
    ef_closure, family_join, family_leq, family_meet, is_saturated, is_self_supported, pq_closure, rca_gfp,
    rca_lfp, Family,
};
use crate::error::{Error, Result};
use crate::relational::RelationalContextFamily;
use crate::scaling::{column, ScaledAttribute};
use crate::set::{FixedBitSet, ObjSet};

/// Default limit on the number of candidate families.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// The families between `lo` and `hi`, indexed by bitmasks over the scaled
/// attributes of `hi` that `lo` lacks.
struct Interval<'a> {
    rcf: &'a RelationalContextFamily,
    lo: Vec<Vec<ScaledAttribute>>,
    delta: Vec<(usize, ScaledAttribute, ObjSet)>,
}

impl<'a> Interval<'a> {
    fn new(lo: &Family, hi: &Family, rcf: &'a RelationalContextFamily, budget: u128) -> Result<Self> {
        if !family_leq(lo, hi)? {
            return Err(Error::InvalidArgument("interval bounds are not ordered".to_string()));
        }
        let lo_sets = lo.scaled_sets();
        let mut delta = Vec::new();
        for (x, set) in hi.scaled_sets().into_iter().enumerate() {
            for a in set {
                if lo_sets[x].binary_search(&a).is_err() {
                    let col = column(&a, rcf.relations());
                    delta.push((x, a, col));
                }
            }
        }
        let size = interval_size_of(delta.len());
        if delta.len() >= 64 || size > budget {
            return Err(Error::BudgetExceeded { size, budget });
        }
        Ok(Interval { rcf, lo: lo_sets, delta })
    }

    fn size(&self) -> u64 {
        1u64 << self.delta.len()
    }

    fn family(&self, mask: u64) -> Family {
        Family::from_contexts(self.rcf.contexts().iter().enumerate().map(|(x, k0)| {
            let base = self.lo[x].iter().map(|a| (a.clone(), column(a, self.rcf.relations())));
            let extra = self
                .delta
                .iter()
                .enumerate()
                .filter(|(i, (z, _, _))| *z == x && mask >> i & 1 == 1)
                .map(|(_, (_, a, col))| (a.clone(), col.clone()));
            k0.with_scaled(base.chain(extra))
        }))
    }

    /// The mask of `o`, if it lies in the interval.
    fn mask_of(&self, o: &Family) -> Option<u64> {
        let sets = o.scaled_sets();
        let mut mask = 0u64;
        for (x, set) in sets.iter().enumerate() {
            if !self.lo[x].iter().all(|a| set.binary_search(a).is_ok()) {
                return None;
            }
            for a in set {
                if self.lo[x].binary_search(a).is_ok() {
                    continue;
                }
                let i = self.delta.iter().position(|(z, b, _)| *z == x && b == a)?;
                mask |= 1 << i;
            }
        }
        Some(mask)
    }

    /// Masks in canonical order: fewer attributes first, then lexicographic
    /// on the ascending attribute positions.
    fn canonical_masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = (0..self.size()).collect();
        masks.sort_by(|a, b| {
            a.count_ones().cmp(&b.count_ones()).then_with(|| bits(*a).cmp(bits(*b)))
        });
        masks
    }
}

fn bits(mask: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn interval_size_of(delta: usize) -> u128 {
    if delta >= 127 {
        u128::MAX
    } else {
        1u128 << delta
    }
}

/// Number of families between `lo` and `hi`.
pub fn interval_size(lo: &Family, hi: &Family) -> Result<u128> {
    if !family_leq(lo, hi)? {
        return Err(Error::InvalidArgument("interval bounds are not ordered".to_string()));
    }
    Ok(interval_size_of(hi.attribute_total() - lo.attribute_total()))
}

/// All families between `lo` and `hi`, in canonical order.
pub fn enumerate_interval(lo: &Family, hi: &Family, rcf: &RelationalContextFamily, budget: u128) -> Result<Vec<Family>> {
    let iv = Interval::new(lo, hi, rcf, budget)?;
    Ok(iv.canonical_masks().into_iter().map(|m| iv.family(m)).collect())
}

/// Result of enumerating the acceptable families of a relational context family.
#[derive(Clone, Debug)]
pub struct SolutionSpaceReport {
    pub lfp: Family,
    pub gfp: Family,
    pub interval_size: u128,
    /// Acceptable families in canonical order.
    pub acceptable: Vec<Family>,
    /// Candidates whose fixed-point status was evaluated.
    pub tested: usize,
    /// Candidates skipped because pruning ruled them out.
    pub pruned_count: usize,
    /// Whether the acceptable set is closed under the meet and join of the
    /// family space.
    pub is_lattice: bool,
    /// Whether the acceptable set is a complete lattice under its own order.
    pub is_complete_lattice: bool,
}

/// Enumerates `fp(EF*) ∩ fp(PQ*)` by testing every family in `[lfp, gfp]`.
///
/// With pruning, each rejected candidate `O` is compared with its two closure
/// images. If `O ⪯ PQ*∞(EF*∞(O))`, the families in `[O, PQ*∞(EF*∞(O))[` are
/// skipped. If `EF*∞(PQ*∞(O)) ⪯ O`, those in `]EF*∞(PQ*∞(O)), O]` are skipped.
/// Candidates are visited in canonical order.
pub fn enumerate_acceptable(rcf: &RelationalContextFamily, budget: u128, use_pruning: bool) -> Result<SolutionSpaceReport> {
    let lfp = rca_lfp(rcf)?;
    let gfp = rca_gfp(rcf)?;
    let iv = Interval::new(&lfp, &gfp, rcf, budget)?;
    let order = iv.canonical_masks();
    let mut pruned = FixedBitSet::with_capacity(order.len());
    let mut accepted: Vec<u64> = Vec::new();
    let (mut tested, mut pruned_count) = (0, 0);
    for &mask in &order {
        if pruned.contains(mask as usize) {
            pruned_count += 1;
            continue;
        }
        tested += 1;
        let o = iv.family(mask);
        if is_saturated(&o, rcf) && is_self_supported(&o, rcf) {
            accepted.push(mask);
            continue;
        }
        if !use_pruning {
            continue;
        }
        let upper = pq_closure(&ef_closure(&o, rcf)?, rcf)?;
        if let Some(up) = iv.mask_of(&upper) {
            if mask & !up == 0 {
                let free = up & !mask;
                for sub in submasks(free) {
                    if sub != free {
                        pruned.insert((mask | sub) as usize);
                    }
                }
            }
        }
        let lower = ef_closure(&pq_closure(&o, rcf)?, rcf)?;
        if let Some(low) = iv.mask_of(&lower) {
            if low & !mask == 0 {
                let free = mask & !low;
                for sub in submasks(free) {
                    if sub != 0 {
                        pruned.insert((low | sub) as usize);
                    }
                }
            }
        }
    }
    let acceptable: Vec<Family> = accepted.into_iter().map(|m| iv.family(m)).collect();
    let is_lattice = verify_complete_sublattice(&acceptable, rcf)?;
    let is_complete_lattice = verify_complete_lattice(&acceptable)?;
    Ok(SolutionSpaceReport {
        interval_size: interval_size_of(iv.delta.len()),
        lfp,
        gfp,
        acceptable,
        tested,
        pruned_count,
        is_lattice,
        is_complete_lattice,
    })
}

fn submasks(free: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(free);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & free) };
        Some(cur)
    })
}

/// The two composite closure images of a family and how they relate.
#[derive(Clone, Debug)]
pub struct ClosureImageReport {
    /// `PQ*∞(EF*∞(O))`.
    pub upper: Family,
    /// `EF*∞(PQ*∞(O))`.
    pub lower: Family,
    pub lower_leq_upper: bool,
    pub strict: bool,
    /// `O ⪯ upper`: `[O, upper[` holds no acceptable family.
    pub below_upper: bool,
    /// `lower ⪯ O`: `]lower, O]` holds no acceptable family.
    pub above_lower: bool,
}

pub fn closure_image_report(o: &Family, rcf: &RelationalContextFamily) -> Result<ClosureImageReport> {
    let upper = pq_closure(&ef_closure(o, rcf)?, rcf)?;
    let lower = ef_closure(&pq_closure(o, rcf)?, rcf)?;
    let lower_leq_upper = family_leq(&lower, &upper)?;
    Ok(ClosureImageReport {
        strict: lower_leq_upper && lower != upper,
        lower_leq_upper,
        below_upper: family_leq(o, &upper)?,
        above_lower: family_leq(&lower, o)?,
        upper,
        lower,
    })
}

/// Whether `families` is non-empty and closed under pairwise meet and join.
/// On a finite set this is closure under arbitrary non-empty meets and joins.
pub fn verify_complete_sublattice(families: &[Family], _rcf: &RelationalContextFamily) -> Result<bool> {
    if families.is_empty() {
        return Ok(false);
    }
    let keys: BTreeSet<Vec<Vec<ScaledAttribute>>> = families.iter().map(Family::scaled_sets).collect();
    for (i, o) in families.iter().enumerate() {
        for p in &families[i + 1..] {
            if !keys.contains(&family_meet(o, p)?.scaled_sets()) || !keys.contains(&family_join(o, p)?.scaled_sets()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `families`, ordered by `⪯`, is a non-empty lattice: every pair has
/// a least upper bound and a greatest lower bound inside the set. Being
/// finite, it is then complete.
pub fn verify_complete_lattice(families: &[Family]) -> Result<bool> {
    if families.is_empty() {
        return Ok(false);
    }
    let n = families.len();
    let mut leq = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = family_leq(&families[i], &families[j])?;
        }
    }
    let bound = |i: usize, j: usize, up: bool| {
        let ok = |k: usize| if up { leq[i][k] && leq[j][k] } else { leq[k][i] && leq[k][j] };
        let cands: Vec<usize> = (0..n).filter(|&k| ok(k)).collect();
        cands.iter().any(|&k| cands.iter().all(|&l| if up { leq[k][l] } else { leq[l][k] }))
    };
    Ok((0..n).all(|i| (i..n).all(|j| bound(i, j, true) && bound(i, j, false))))
}

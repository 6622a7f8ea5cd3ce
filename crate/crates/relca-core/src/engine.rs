//! Context-lattice pairs, families, the expansion and contraction functions
//! and both fixed-point semantics.

use alloc::format;
use alloc::vec::Vec;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::{concept_names, fca, ConceptLattice};
use crate::relational::RelationalContextFamily;
use crate::scaling::{column, purge, scale_context, supported, ScaledAttribute};
use crate::set::ObjSet;

/// `<K, FCA(K)>`.
#[derive(Clone, Debug)]
pub struct ContextLatticePair {
    lattice: ConceptLattice,
}

/// `T(K)`.
pub fn make_pair(k: &FormalContext) -> ContextLatticePair {
    ContextLatticePair { lattice: fca(k) }
}

impl ContextLatticePair {
    pub fn context(&self) -> &FormalContext {
        self.lattice.context()
    }

    pub fn lattice(&self) -> &ConceptLattice {
        &self.lattice
    }
}

impl PartialEq for ContextLatticePair {
    fn eq(&self, other: &Self) -> bool {
        self.context() == other.context()
    }
}

impl Eq for ContextLatticePair {}

/// An indexed family of context-lattice pairs, one per context of the
/// relational context family. Equality is attribute-set equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pairs: Vec<ContextLatticePair>,
}

impl Family {
    pub fn from_contexts(contexts: impl IntoIterator<Item = FormalContext>) -> Self {
        Family { pairs: contexts.into_iter().map(|k| make_pair(&k)).collect() }
    }

    /// Builds the family whose context `x` is `K⁰_x` plus `sets[x]`.
    /// Incidence comes from the relations. Fails unless every attribute is
    /// in the attribute language over `N(K⁰)`.
    pub fn from_scaled(rcf: &RelationalContextFamily, sets: &[Vec<ScaledAttribute>]) -> Result<Self> {
        if sets.len() != rcf.len() {
            return Err(Error::Incompatible(format!("{} attribute sets for {} contexts", sets.len(), rcf.len())));
        }
        for (x, set) in sets.iter().enumerate() {
            if let Some(a) = set.iter().find(|a| !rcf.in_language(x, a)) {
                return Err(Error::InvalidArgument(format!(
                    "attribute {a:?} is not in the language of context {}",
                    rcf.contexts()[x].id()
                )));
            }
        }
        Ok(Self::from_scaled_unchecked(rcf, sets))
    }

    pub(crate) fn from_scaled_unchecked(rcf: &RelationalContextFamily, sets: &[Vec<ScaledAttribute>]) -> Self {
        Family::from_contexts(rcf.contexts().iter().zip(sets).map(|(k, set)| {
            k.with_scaled(set.iter().map(|a| (a.clone(), column(a, rcf.relations()))))
        }))
    }

    pub fn pairs(&self) -> &[ContextLatticePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn context(&self, x: usize) -> &FormalContext {
        self.pairs[x].context()
    }

    pub fn lattice(&self, x: usize) -> &ConceptLattice {
        self.pairs[x].lattice()
    }

    pub fn lattices(&self) -> Vec<&ConceptLattice> {
        self.pairs.iter().map(|p| p.lattice()).collect()
    }

    /// Scaled attributes per context, in canonical order.
    pub fn scaled_sets(&self) -> Vec<Vec<ScaledAttribute>> {
        self.pairs.iter().map(|p| p.context().scaled_vec()).collect()
    }

    pub fn attribute_total(&self) -> usize {
        self.pairs.iter().map(|p| p.context().attribute_count() - p.context().base_count()).sum()
    }
}

/// `T(K⁰)`, the least element of the family space.
pub fn bottom_family(rcf: &RelationalContextFamily) -> Family {
    Family::from_contexts(rcf.contexts().iter().cloned())
}

/// Every context extended with its whole attribute language over `N(K⁰)`.
pub fn top_family(rcf: &RelationalContextFamily) -> Result<Family> {
    let sets = (0..rcf.len()).map(|x| rcf.full_language(x)).collect::<Result<Vec<_>>>()?;
    Ok(Family::from_scaled_unchecked(rcf, &sets))
}

/// `EF*(O) = T(σ*(k(O), R, l(O)))`.
pub fn ef_star(o: &Family, rcf: &RelationalContextFamily) -> Family {
    let lattices = o.lattices();
    let mut pairs = Vec::with_capacity(o.len());
    for x in 0..o.len() {
        let k = scale_context(o.context(x), x, rcf.operators(), rcf.relations(), &lattices, rcf.config())
            .expect("family covers every context");
        if &k == o.context(x) {
            pairs.push(o.pairs[x].clone());
        } else {
            pairs.push(make_pair(&k));
        }
    }
    Family { pairs }
}

/// `PQ*(O) = T(π*(l(O)))`.
pub fn pq_star(o: &Family, rcf: &RelationalContextFamily) -> Family {
    let lattices = o.lattices();
    let mut pairs = Vec::with_capacity(o.len());
    for x in 0..o.len() {
        let k = purge(o.lattice(x), rcf.relations(), &lattices);
        if &k == o.context(x) {
            pairs.push(o.pairs[x].clone());
        } else {
            pairs.push(make_pair(&k));
        }
    }
    Family { pairs }
}

/// `1 + Σ_x |D^x|`: no closure needs more steps.
pub fn iteration_cap(rcf: &RelationalContextFamily) -> usize {
    rcf.language_bound().saturating_add(1)
}

fn iterate(o: &Family, rcf: &RelationalContextFamily, step: fn(&Family, &RelationalContextFamily) -> Family) -> Result<Vec<Family>> {
    let cap = iteration_cap(rcf);
    let mut trace = alloc::vec![o.clone()];
    for _ in 0..cap {
        let last = trace.last().expect("non-empty");
        let next = step(last, rcf);
        if &next == last {
            return Ok(trace);
        }
        trace.push(next);
    }
    Err(Error::IterationCap(cap))
}

/// The successive families `O, EF*(O), EF*²(O), ..` up to the fixed point.
pub fn ef_trace(o: &Family, rcf: &RelationalContextFamily) -> Result<Vec<Family>> {
    iterate(o, rcf, ef_star)
}

/// The successive families `O, PQ*(O), ..` up to the fixed point.
pub fn pq_trace(o: &Family, rcf: &RelationalContextFamily) -> Result<Vec<Family>> {
    iterate(o, rcf, pq_star)
}

/// `EF*∞(O)`.
pub fn ef_closure(o: &Family, rcf: &RelationalContextFamily) -> Result<Family> {
    Ok(ef_trace(o, rcf)?.pop().expect("non-empty"))
}

/// `PQ*∞(O)`.
pub fn pq_closure(o: &Family, rcf: &RelationalContextFamily) -> Result<Family> {
    Ok(pq_trace(o, rcf)?.pop().expect("non-empty"))
}

/// The classical RCA result, `lfp(EF*)`.
pub fn rca_lfp(rcf: &RelationalContextFamily) -> Result<Family> {
    ef_closure(&bottom_family(rcf), rcf)
}

/// The dual result, `gfp(PQ*)`.
pub fn rca_gfp(rcf: &RelationalContextFamily) -> Result<Family> {
    pq_closure(&top_family(rcf)?, rcf)
}

/// Every scaled attribute belongs to the attribute language over `N(K⁰)`.
pub fn is_well_formed(o: &Family, rcf: &RelationalContextFamily) -> bool {
    o.len() == rcf.len()
        && (0..o.len()).all(|x| {
            let k = o.context(x);
            let k0 = &rcf.contexts()[x];
            k.objects() == k0.objects()
                && k.attributes()[..k.base_count()] == *k0.attributes()
                && k.scaled().all(|a| rcf.in_language(x, a))
        })
}

/// Attributes that `EF*` would add, per context.
pub fn missing_attributes(o: &Family, rcf: &RelationalContextFamily) -> Vec<(usize, ScaledAttribute)> {
    let names: Vec<Vec<ObjSet>> = o.pairs.iter().map(|p| concept_names(p.lattice())).collect();
    (0..o.len())
        .flat_map(|x| {
            rcf.language(x, &names)
                .into_iter()
                .filter(move |a| o.context(x).scaled_index(a).is_none())
                .map(move |a| (x, a))
        })
        .collect()
}

/// Attributes that `PQ*` would remove, per context.
pub fn unsupported_attributes(o: &Family, rcf: &RelationalContextFamily) -> Vec<(usize, ScaledAttribute)> {
    let lattices = o.lattices();
    (0..o.len())
        .flat_map(|x| {
            o.context(x)
                .scaled()
                .filter(|a| !supported(a, rcf.relations(), &lattices))
                .cloned()
                .map(move |a| (x, a))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `EF*(O) = O`.
pub fn is_saturated(o: &Family, rcf: &RelationalContextFamily) -> bool {
    missing_attributes(o, rcf).is_empty()
}

/// `PQ*(O) = O`.
pub fn is_self_supported(o: &Family, rcf: &RelationalContextFamily) -> bool {
    unsupported_attributes(o, rcf).is_empty()
}

pub fn is_acceptable(o: &Family, rcf: &RelationalContextFamily) -> bool {
    is_well_formed(o, rcf) && is_saturated(o, rcf) && is_self_supported(o, rcf)
}

fn piecewise(
    o: &Family,
    p: &Family,
    f: fn(&FormalContext, &FormalContext) -> Result<FormalContext>,
) -> Result<Family> {
    if o.len() != p.len() {
        return Err(Error::Incompatible(format!("families of {} and {} contexts", o.len(), p.len())));
    }
    let contexts = (0..o.len()).map(|x| f(o.context(x), p.context(x))).collect::<Result<Vec<_>>>()?;
    Ok(Family::from_contexts(contexts))
}

pub fn family_meet(o: &Family, p: &Family) -> Result<Family> {
    piecewise(o, p, FormalContext::meet)
}

pub fn family_join(o: &Family, p: &Family) -> Result<Family> {
    piecewise(o, p, FormalContext::join)
}

/// `O ⪯ O′`: per-context attribute inclusion.
pub fn family_leq(o: &Family, p: &Family) -> Result<bool> {
    if o.len() != p.len() {
        return Err(Error::Incompatible(format!("families of {} and {} contexts", o.len(), p.len())));
    }
    for x in 0..o.len() {
        if !o.context(x).leq(p.context(x))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// There is a single acceptable family exactly when both semantics agree.
pub fn has_unique_solution(rcf: &RelationalContextFamily) -> Result<bool> {
    Ok(rca_lfp(rcf)? == rca_gfp(rcf)?)
}

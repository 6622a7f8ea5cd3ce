//! Concept lattices.

use alloc::string::String;
use alloc::vec::Vec;

use crate::context::{Attribute, FormalContext};
use crate::error::{Error, Result};
use crate::set::{extent_cmp, full, FixedBitSet, ObjSet};

/// Largest object count for which `all_names` enumerates the powerset.
pub const NAME_LIMIT: usize = 20;

/// A formal concept. The intent holds attribute indices of the owning context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concept {
    pub extent: ObjSet,
    pub intent: FixedBitSet,
}

/// All concepts of a context, sorted by extent: larger first, then
/// lexicographic on object order. The top is first and the bottom last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptLattice {
    context: FormalContext,
    concepts: Vec<Concept>,
}

/// Computes the concept lattice of `k`.
///
/// Extents are the closure system generated by the attribute columns, so they
/// are collected by intersecting every known extent with each column in turn.
pub fn fca(k: &FormalContext) -> ConceptLattice {
    let mut extents: Vec<ObjSet> = alloc::vec![k.all_objects()];
    for col in k.columns() {
        let mut next: Vec<ObjSet> = extents
            .iter()
            .map(|e| {
                let mut x = e.clone();
                x.intersect_with(col);
                x
            })
            .collect();
        extents.append(&mut next);
        extents.sort_by(extent_cmp);
        extents.dedup();
    }
    let concepts = extents
        .into_iter()
        .map(|extent| {
            let intent = k.derive_intent(&extent).expect("extent within context");
            Concept { extent, intent }
        })
        .collect();
    ConceptLattice { context: k.clone(), concepts }
}

/// The context extraction function: attributes are the union of all intents
/// and each column is the union of the extents whose intent has the attribute.
pub fn kappa(l: &ConceptLattice) -> FormalContext {
    let k = &l.context;
    let mut used = FixedBitSet::with_capacity(k.attribute_count());
    for c in &l.concepts {
        used.union_with(&c.intent);
    }
    let mut columns: Vec<ObjSet> = alloc::vec![ObjSet::with_capacity(k.object_count()); k.attribute_count()];
    for c in &l.concepts {
        for m in c.intent.ones() {
            columns[m].union_with(&c.extent);
        }
    }
    let base: Vec<String> = (0..k.base_count())
        .filter(|&m| used.contains(m))
        .map(|m| match &k.attributes()[m] {
            Attribute::Plain(n) => n.clone(),
            Attribute::Scaled(_) => unreachable!("base prefix is plain"),
        })
        .collect();
    let base_cols = (0..k.base_count()).filter(|&m| used.contains(m)).map(|m| columns[m].clone()).collect();
    let out = FormalContext::from_columns(k.id(), k.objects().to_vec(), base, base_cols)
        .expect("extracted from a valid context");
    out.with_scaled(
        (k.base_count()..k.attribute_count())
            .filter(|&m| used.contains(m))
            .map(|m| (k.attributes()[m].as_scaled().cloned().expect("scaled suffix"), columns[m].clone())),
    )
}

/// `N(K) = 2^G`, in canonical order.
pub fn all_names(k: &FormalContext) -> Result<Vec<ObjSet>> {
    powerset(k.object_count())
}

pub(crate) fn powerset(n: usize) -> Result<Vec<ObjSet>> {
    if n > NAME_LIMIT {
        return Err(Error::NameLimit { count: n, limit: NAME_LIMIT });
    }
    let mut out: Vec<ObjSet> = (0u64..1 << n)
        .map(|mask| {
            let mut s = ObjSet::with_capacity(n);
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    out.sort_by(extent_cmp);
    Ok(out)
}

/// `N(L)`: the extents present in `l`.
pub fn concept_names(l: &ConceptLattice) -> Vec<ObjSet> {
    l.concepts.iter().map(|c| c.extent.clone()).collect()
}

/// `L ⪯ L′`, decided by attribute inclusion of the extracted contexts.
pub fn lattice_leq(l: &ConceptLattice, r: &ConceptLattice) -> Result<bool> {
    kappa(l).leq(&kappa(r))
}

impl ConceptLattice {
    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn top(&self) -> usize {
        0
    }

    pub fn bottom(&self) -> usize {
        self.concepts.len() - 1
    }

    /// Index of the concept with the given extent.
    pub fn find(&self, extent: &ObjSet) -> Option<usize> {
        if extent.len() != self.context.object_count() {
            let mut e = ObjSet::with_capacity(self.context.object_count());
            for g in extent.ones() {
                if g >= e.len() {
                    return None;
                }
                e.insert(g);
            }
            return self.concepts.binary_search_by(|c| extent_cmp(&c.extent, &e)).ok();
        }
        self.concepts.binary_search_by(|c| extent_cmp(&c.extent, extent)).ok()
    }

    pub fn has_name(&self, extent: &ObjSet) -> bool {
        self.find(extent).is_some()
    }

    /// Concept order: `i ≤ j` iff extent(i) ⊆ extent(j).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.concepts[i].extent.is_subset(&self.concepts[j].extent)
    }

    /// Direct superconcepts of `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.leq(i, j)).collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| k != j && self.leq(k, j)))
            .collect()
    }

    /// Direct subconcepts of `i`.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        let below: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.leq(j, i)).collect();
        below
            .iter()
            .copied()
            .filter(|&j| !below.iter().any(|&k| k != j && self.leq(j, k)))
            .collect()
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_covers(i).into_iter().map(move |j| (i, j)))
            .collect()
    }

    /// Concept whose extent is the column of attribute `m`.
    pub fn attribute_concept(&self, m: usize) -> usize {
        self.find(self.context.column(m)).expect("attribute extents are closed")
    }

    /// Concept generated by object `g`.
    pub fn object_concept(&self, g: usize) -> usize {
        let mut s = ObjSet::with_capacity(self.context.object_count());
        s.insert(g);
        let intent = self.context.derive_intent(&s).expect("object in context");
        let extent = self.context.derive_extent(&intent).expect("intent in context");
        self.find(&extent).expect("closed extent")
    }

    /// Attributes whose attribute concept is `i` (reduced labelling).
    pub fn introduced_attributes(&self, i: usize) -> Vec<usize> {
        (0..self.context.attribute_count())
            .filter(|&m| self.attribute_concept(m) == i)
            .collect()
    }

    /// Objects whose object concept is `i` (reduced labelling).
    pub fn introduced_objects(&self, i: usize) -> Vec<usize> {
        (0..self.context.object_count())
            .filter(|&g| self.object_concept(g) == i)
            .collect()
    }

    pub fn full_extent(&self) -> ObjSet {
        full(self.context.object_count())
    }
}

//! Relational scaling: relations, scaled attributes, the attribute language,
//! the scaling function and the purge.

use core::cmp::Ordering;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::{concept_names, kappa, ConceptLattice};
use crate::set::{extent_cmp, ObjSet};

/// Relational scaling operators. `LeqCard` and `GeqCard` carry a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelOp {
    /// `∃r`: `r(g) ≠ ∅`.
    Existential,
    /// `∃r.C`: `r(g) ∩ ext(C) ≠ ∅`.
    QualifiedExistential,
    /// `∀r.C`: `r(g) ⊆ ext(C)`.
    UniversalWide,
    /// `∀∃r.C`: `r(g) ≠ ∅` and `r(g) ⊆ ext(C)`.
    StrictUniversal,
    /// `∀C.r`: `ext(C) ⊆ r(g)`.
    ContainsWide,
    /// `∀∃C.r`: `ext(C) ≠ ∅` and `ext(C) ⊆ r(g)`.
    StrictContains,
    /// `≤n r.C`: `|r(g) ∩ ext(C)| ≤ n`.
    LeqCard,
    /// `≥n r.C`: `|r(g) ∩ ext(C)| ≥ n`.
    GeqCard,
}

impl RelOp {
    pub const ALL: [RelOp; 8] = [
        RelOp::Existential,
        RelOp::QualifiedExistential,
        RelOp::UniversalWide,
        RelOp::StrictUniversal,
        RelOp::ContainsWide,
        RelOp::StrictContains,
        RelOp::LeqCard,
        RelOp::GeqCard,
    ];

    pub fn is_qualified(self) -> bool {
        self != RelOp::Existential
    }

    pub fn has_bound(self) -> bool {
        matches!(self, RelOp::LeqCard | RelOp::GeqCard)
    }
}

/// An element `ς r.C` of the attribute language.
///
/// `relation` indexes the relation list of the owning family. `target` is
/// `None` only for the unqualified `∃r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledAttribute {
    pub op: RelOp,
    pub relation: usize,
    pub bound: Option<usize>,
    pub target: Option<ObjSet>,
}

impl ScaledAttribute {
    pub fn new(op: RelOp, relation: usize, bound: Option<usize>, target: Option<ObjSet>) -> Result<Self> {
        if op.has_bound() != bound.is_some() || bound == Some(0) {
            return Err(Error::InvalidArgument(format!("bound {bound:?} does not fit {op:?}")));
        }
        if op.is_qualified() != target.is_some() {
            return Err(Error::InvalidArgument(format!("target presence does not fit {op:?}")));
        }
        Ok(ScaledAttribute { op, relation, bound, target })
    }

    /// `∃r.C`.
    pub fn exists(relation: usize, target: ObjSet) -> Self {
        ScaledAttribute { op: RelOp::QualifiedExistential, relation, bound: None, target: Some(target) }
    }

    /// Whether some relation image could make the attribute hold.
    pub fn satisfiable(&self, codomain_len: usize) -> bool {
        let t = self.target.as_ref().map_or(0, |t| t.count_ones(..));
        match self.op {
            RelOp::Existential => codomain_len > 0,
            RelOp::QualifiedExistential | RelOp::StrictUniversal | RelOp::StrictContains => t > 0,
            RelOp::GeqCard => self.bound.is_some_and(|n| n <= t),
            RelOp::UniversalWide | RelOp::ContainsWide | RelOp::LeqCard => true,
        }
    }
}

impl Ord for ScaledAttribute {
    fn cmp(&self, other: &Self) -> Ordering {
        self.op
            .cmp(&other.op)
            .then(self.relation.cmp(&other.relation))
            .then(self.bound.cmp(&other.bound))
            .then_with(|| match (&self.target, &other.target) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(a), Some(b)) => extent_cmp(a, b),
            })
    }
}

impl PartialOrd for ScaledAttribute {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A binary relation from the objects of context `domain` to those of
/// `codomain`, stored as one image per domain object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    id: String,
    domain: usize,
    codomain: usize,
    codomain_len: usize,
    images: Vec<ObjSet>,
}

impl Relation {
    pub fn new(
        id: impl Into<String>,
        domain: usize,
        codomain: usize,
        domain_len: usize,
        codomain_len: usize,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let id = id.into();
        let mut images = alloc::vec![ObjSet::with_capacity(codomain_len); domain_len];
        for &(g, h) in pairs {
            if g >= domain_len || h >= codomain_len {
                return Err(Error::InvalidArgument(format!("pair ({g}, {h}) outside relation {id}")));
            }
            images[g].insert(h);
        }
        Ok(Relation { id, domain, codomain, codomain_len, images })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn domain_len(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain_len
    }

    /// `r(g)`.
    pub fn image(&self, g: usize) -> Result<&ObjSet> {
        self.images
            .get(g)
            .ok_or_else(|| Error::InvalidArgument(format!("object {g} outside domain of {}", self.id)))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .flat_map(|(g, img)| img.ones().map(move |h| (g, h)))
            .collect()
    }
}

/// Evaluates the scaling condition of `a` on the image `r(g)`.
pub fn holds_on(image: &ObjSet, a: &ScaledAttribute) -> bool {
    let target = a.target.as_ref();
    let inter = || target.map_or(0, |t| image.intersection_count(t));
    match a.op {
        RelOp::Existential => !image.is_clear(),
        RelOp::QualifiedExistential => inter() > 0,
        RelOp::UniversalWide => target.is_some_and(|t| image.is_subset(t)),
        RelOp::StrictUniversal => !image.is_clear() && target.is_some_and(|t| image.is_subset(t)),
        RelOp::ContainsWide => target.is_some_and(|t| t.is_subset(image)),
        RelOp::StrictContains => target.is_some_and(|t| !t.is_clear() && t.is_subset(image)),
        RelOp::LeqCard => a.bound.is_some_and(|n| inter() <= n),
        RelOp::GeqCard => a.bound.is_some_and(|n| inter() >= n),
    }
}

/// Whether object `g` of the relation's domain has attribute `a`.
pub fn holds(g: usize, a: &ScaledAttribute, relations: &[Relation]) -> Result<bool> {
    let r = relations
        .get(a.relation)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown relation {}", a.relation)))?;
    Ok(holds_on(r.image(g)?, a))
}

/// The incidence column of `a` over the domain objects of its relation.
pub fn column(a: &ScaledAttribute, relations: &[Relation]) -> ObjSet {
    let r = &relations[a.relation];
    let mut col = ObjSet::with_capacity(r.domain_len());
    for g in 0..r.domain_len() {
        if holds_on(&r.images[g], a) {
            col.insert(g);
        }
    }
    col
}

/// Options of the attribute language.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalingConfig {
    /// Keep attributes that no relation image can satisfy (such as `∃r.⊥`).
    pub keep_unsatisfiable: bool,
    /// Inclusive range of cardinality bounds, clipped to `1..=|G_z|`.
    pub bounds: Option<(usize, usize)>,
}

impl ScalingConfig {
    pub fn bound_range(&self, codomain_len: usize) -> core::ops::RangeInclusive<usize> {
        let (lo, hi) = self.bounds.unwrap_or((1, codomain_len));
        lo.max(1)..=hi.min(codomain_len)
    }

    fn admits(&self, a: &ScaledAttribute, codomain_len: usize) -> bool {
        self.keep_unsatisfiable || a.satisfiable(codomain_len)
    }
}

/// `D^x`: every `ς r.c` for `ς ∈ ops`, `r` with domain `x` and `c` among the
/// names of `r`'s codomain. `names[z]` lists the names of context `z`.
pub fn attribute_language(
    x: usize,
    ops: &[RelOp],
    relations: &[Relation],
    names: &[Vec<ObjSet>],
    config: &ScalingConfig,
) -> Vec<ScaledAttribute> {
    let mut out = Vec::new();
    for (ri, r) in relations.iter().enumerate().filter(|(_, r)| r.domain == x) {
        let n = r.codomain_len();
        for &op in ops {
            let mut push = |a: ScaledAttribute| {
                if config.admits(&a, n) {
                    out.push(a);
                }
            };
            if !op.is_qualified() {
                push(ScaledAttribute { op, relation: ri, bound: None, target: None });
                continue;
            }
            for c in &names[r.codomain] {
                if op.has_bound() {
                    for b in config.bound_range(n) {
                        push(ScaledAttribute { op, relation: ri, bound: Some(b), target: Some(c.clone()) });
                    }
                } else {
                    push(ScaledAttribute { op, relation: ri, bound: None, target: Some(c.clone()) });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether `a` belongs to `D^x` over all names `N(K⁰)`.
pub fn in_full_language(
    x: usize,
    a: &ScaledAttribute,
    ops: &[RelOp],
    relations: &[Relation],
    config: &ScalingConfig,
) -> bool {
    let Some(r) = relations.get(a.relation) else {
        return false;
    };
    let n = r.codomain_len();
    r.domain == x
        && ops.contains(&a.op)
        && a.op.is_qualified() == a.target.is_some()
        && a.op.has_bound() == a.bound.is_some()
        && a.bound.is_none_or(|b| config.bound_range(n).contains(&b))
        && a.target.as_ref().is_none_or(|t| t.len() == n || t.ones().all(|h| h < n))
        && config.admits(a, n)
}

/// `σ`: extends `k` (context `x`) with every attribute of `D^x` over the names
/// of `lattices`, with incidence given by the scaling conditions.
pub fn scale_context(
    k: &FormalContext,
    x: usize,
    ops: &[RelOp],
    relations: &[Relation],
    lattices: &[&ConceptLattice],
    config: &ScalingConfig,
) -> Result<FormalContext> {
    for r in relations.iter().filter(|r| r.domain == x) {
        if r.codomain >= lattices.len() {
            return Err(Error::InvalidArgument(format!("no lattice for codomain of {}", r.id)));
        }
    }
    let names: Vec<Vec<ObjSet>> = lattices.iter().map(|l| concept_names(l)).collect();
    let new: Vec<_> = attribute_language(x, ops, relations, &names, config)
        .into_iter()
        .filter(|a| k.scaled_index(a).is_none())
        .map(|a| {
            let col = column(&a, relations);
            (a, col)
        })
        .collect();
    if new.is_empty() {
        return Ok(k.clone());
    }
    Ok(k.with_scaled(new))
}

/// `π`: the context of `l` without the scaled attributes whose target is not a
/// concept of the codomain lattice.
pub fn purge(l: &ConceptLattice, relations: &[Relation], lattices: &[&ConceptLattice]) -> FormalContext {
    kappa(l).retain_scaled(|a| supported(a, relations, lattices))
}

pub(crate) fn supported(a: &ScaledAttribute, relations: &[Relation], lattices: &[&ConceptLattice]) -> bool {
    match &a.target {
        None => true,
        Some(t) => lattices[relations[a.relation].codomain].has_name(t),
    }
}

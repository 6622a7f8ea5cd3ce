//! Description-logic export of a family of concept lattices.

use relca_core::engine::Family;
use relca_core::RelationalContextFamily;

use crate::render;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub tbox: Vec<String>,
    pub abox: Vec<String>,
}

impl KnowledgeBase {
    pub fn to_text(&self) -> String {
        let mut s = String::from("# TBox\n");
        for a in &self.tbox {
            s.push_str(a);
            s.push('\n');
        }
        s.push_str("# ABox\n");
        for a in &self.abox {
            s.push_str(a);
            s.push('\n');
        }
        s
    }
}

/// Axioms for every concept with a non-empty extent.
///
/// The top concept of context `x` is subsumed by `⊤x` and its intent. Each
/// other concept is subsumed by its upper covers and the attributes it
/// introduces. Two lower covers of a concept with disjoint extents give a
/// disjointness axiom. The ABox places every object in its object concept
/// and lists the relation pairs.
pub fn export_tbox(family: &Family, rcf: &RelationalContextFamily) -> KnowledgeBase {
    let mut kb = KnowledgeBase::default();
    for x in 0..family.len() {
        let l = family.lattice(x);
        let k = l.context();
        let name = |i: usize| render::concept_name(rcf, x, &l.concepts()[i].extent);
        let attr = |m: usize| render::attribute_unicode(rcf, &k.attributes()[m]);
        let mut disjoint: Vec<(usize, usize)> = Vec::new();
        for (i, c) in l.concepts().iter().enumerate() {
            if c.extent.is_clear() {
                continue;
            }
            let mut rhs: Vec<String> = if i == l.top() {
                let mut v = vec![format!("⊤{}", k.id())];
                v.extend(c.intent.ones().map(attr));
                v
            } else {
                let mut v: Vec<String> = l.upper_covers(i).into_iter().map(name).collect();
                v.extend(l.introduced_attributes(i).into_iter().map(attr));
                v
            };
            rhs.dedup();
            kb.tbox.push(format!("{} ⊑ {}", name(i), rhs.join(" ⊓ ")));
            let lows: Vec<usize> = l.lower_covers(i).into_iter().filter(|&j| !l.concepts()[j].extent.is_clear()).collect();
            for (p, &a) in lows.iter().enumerate() {
                for &b in &lows[p + 1..] {
                    if l.concepts()[a].extent.is_disjoint(&l.concepts()[b].extent) && !disjoint.contains(&(a, b)) {
                        disjoint.push((a, b));
                    }
                }
            }
        }
        for (a, b) in disjoint {
            kb.tbox.push(format!("{} ⊓ {} ⊑ ⊥", name(a), name(b)));
        }
    }
    for x in 0..family.len() {
        let l = family.lattice(x);
        for (g, o) in l.context().objects().iter().enumerate() {
            let c = l.object_concept(g);
            kb.abox.push(format!("{}({o})", render::concept_name(rcf, x, &l.concepts()[c].extent)));
        }
    }
    for r in rcf.relations() {
        let (d, c) = (&rcf.contexts()[r.domain()], &rcf.contexts()[r.codomain()]);
        for (g, h) in r.pairs() {
            kb.abox.push(format!("{}({},{})", r.id(), d.objects()[g], c.objects()[h]));
        }
    }
    kb
}

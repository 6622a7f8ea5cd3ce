//! Small random relational context families.

use proptest::prelude::*;
use relca::rcf::{ContextSource, PlainContext, RcfDocument, RelationSource};
use relca_core::scaling::RelOp;
use relca_core::RelationalContextFamily;

/// Largest family space the generator lets through.
pub const SPACE_LIMIT: u32 = 14;

const NAMES: [&str; 2] = ["abcd", "efgh"];

#[derive(Clone, Debug)]
pub struct Instance {
    pub doc: RcfDocument,
    pub rcf: RelationalContextFamily,
    /// Membership bits used to pick families from the attribute language.
    pub pick: Vec<bool>,
    pub extra: Vec<bool>,
}

impl Instance {
    pub fn language_size(&self) -> usize {
        (0..self.rcf.len()).map(|x| self.rcf.full_language(x).unwrap().len()).sum()
    }
}

fn document(
    n_ctx: usize,
    objs: [usize; 2],
    attrs: [usize; 2],
    inc: Vec<bool>,
    rels: Vec<(usize, usize, Vec<bool>, Option<usize>)>,
    ops: Vec<RelOp>,
) -> RcfDocument {
    let contexts = (0..n_ctx)
        .map(|x| {
            let objects: Vec<String> = NAMES[x].chars().take(objs[x]).map(String::from).collect();
            let attributes: Vec<String> = (0..attrs[x]).map(|m| format!("m{x}{m}")).collect();
            let rows = (0..objs[x]).map(|g| (0..attrs[x]).map(|m| inc[x * 8 + g * 2 + m]).collect()).collect();
            ContextSource::Plain(PlainContext { id: format!("k{x}"), objects, attributes, rows })
        })
        .collect();
    let relations = rels
        .into_iter()
        .enumerate()
        .map(|(i, (d, c, bits, rotation))| {
            let (d, c) = (d % n_ctx, c % n_ctx);
            let mut pairs = Vec::new();
            for g in 0..objs[d] {
                for h in 0..objs[c] {
                    let hit = match rotation {
                        Some(k) => h == (g + k) % objs[c],
                        None => bits[g * 4 + h],
                    };
                    if hit {
                        pairs.push((NAMES[d][g..g + 1].to_string(), NAMES[c][h..h + 1].to_string()));
                    }
                }
            }
            RelationSource { id: format!("r{i}"), from: format!("k{d}"), to: format!("k{c}"), pairs }
        })
        .collect();
    RcfDocument { contexts, relations, operators: ops, bounds: None, keep_unsatisfiable: false }
}

/// At most two contexts of at most four objects, at most two relations and
/// operators drawn from `{E, AE}`. Half of the relations are rotations
/// `g ↦ g + k`, which give symmetric instances with several solutions. Instances whose family space exceeds
/// `2^SPACE_LIMIT` are rejected.
pub fn instance() -> impl Strategy<Value = Instance> {
    let ops = prop_oneof![
        Just(vec![RelOp::QualifiedExistential]),
        Just(vec![RelOp::StrictUniversal]),
        Just(vec![RelOp::QualifiedExistential, RelOp::StrictUniversal]),
    ];
    let rel = (
        0usize..2,
        0usize..2,
        proptest::collection::vec(proptest::bool::weighted(0.35), 16),
        proptest::option::weighted(0.5, 0usize..4),
    );
    let rels = prop_oneof![
        1 => proptest::collection::vec(rel.clone(), 0..=0),
        3 => proptest::collection::vec(rel.clone(), 1..=1),
        6 => proptest::collection::vec(rel, 2..=2),
    ];
    (
        1usize..=2,
        [prop_oneof![3 => 1usize..=3, 1 => Just(4usize)], prop_oneof![3 => 1usize..=3, 1 => Just(4usize)]],
        [prop_oneof![3 => Just(0usize), 2 => 1usize..=2], prop_oneof![3 => Just(0usize), 2 => 1usize..=2]],
        proptest::collection::vec(any::<bool>(), 16),
        rels,
        ops,
        proptest::collection::vec(any::<bool>(), 64),
        proptest::collection::vec(any::<bool>(), 64),
    )
        .prop_map(|(n_ctx, objs, attrs, inc, rels, ops, pick, extra)| {
            let doc = document(n_ctx, objs, attrs, inc, rels, ops);
            let rcf = doc.to_family().expect("generated document is valid");
            Instance { doc, rcf, pick, extra }
        })
        .prop_filter("family space too large", |i| i.language_size() <= SPACE_LIMIT as usize)
}

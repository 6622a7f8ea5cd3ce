//! Brute-force reference for the acceptable-family space.
//!
//! Shares no code with the engine beyond the input types. Objects and
//! attributes are `u64` masks, the language is rebuilt from the definition,
//! satisfiability is decided by trying every possible image, and concept
//! names come from testing every object subset for closure.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::relational::RelationalContextFamily;
use crate::scaling::{RelOp, ScaledAttribute};
use crate::set::{extent_cmp, ObjSet};

/// Largest context size the oracle accepts.
pub const ORACLE_OBJECT_LIMIT: usize = 6;

/// One family of the space, with its fixed-point status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleEntry {
    /// Scaled attributes per context, in canonical order.
    pub sets: Vec<Vec<ScaledAttribute>>,
    pub saturated: bool,
    pub self_supported: bool,
}

impl OracleEntry {
    pub fn acceptable(&self) -> bool {
        self.saturated && self.self_supported
    }
}

struct Atom {
    op: RelOp,
    relation: usize,
    codomain: usize,
    bound: u32,
    target: Option<u64>,
    column: u64,
}

fn cond(op: RelOp, bound: u32, image: u64, target: Option<u64>) -> bool {
    let t = target.unwrap_or(0);
    let meet = (image & t).count_ones();
    match op {
        RelOp::Existential => image != 0,
        RelOp::QualifiedExistential => meet >= 1,
        RelOp::UniversalWide => image & !t == 0,
        RelOp::StrictUniversal => image != 0 && image & !t == 0,
        RelOp::ContainsWide => t & !image == 0,
        RelOp::StrictContains => t != 0 && t & !image == 0,
        RelOp::LeqCard => meet <= bound,
        RelOp::GeqCard => meet >= bound,
    }
}

fn to_mask(s: &ObjSet) -> u64 {
    s.ones().fold(0, |m, i| m | 1 << i)
}

fn to_set(mask: u64, n: usize) -> ObjSet {
    let mut s = ObjSet::with_capacity(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            s.insert(i);
        }
    }
    s
}

/// Closed extents of a context given by its attribute columns, as a bitmask
/// over object subsets.
fn closed_extents(n: usize, columns: &[u64]) -> u64 {
    let all = (1u64 << n) - 1;
    let mut out = 0u64;
    for e in 0..=all {
        let ext = columns.iter().filter(|&&c| e & !c == 0).fold(all, |acc, &c| acc & c);
        if ext == e {
            out |= 1 << e;
        }
    }
    out
}

/// Enumerates every well-formed family and tags each with its saturation and
/// self-support status.
pub fn oracle_enumerate(rcf: &RelationalContextFamily, budget: u128) -> Result<Vec<OracleEntry>> {
    let sizes: Vec<usize> = rcf.contexts().iter().map(|k| k.object_count()).collect();
    if let Some(k) = rcf.contexts().iter().find(|k| k.object_count() > ORACLE_OBJECT_LIMIT) {
        return Err(Error::InvalidArgument(format!("oracle handles at most {ORACLE_OBJECT_LIMIT} objects, {} has {}", k.id(), k.object_count())));
    }
    let cfg = rcf.config();
    let mut atoms: Vec<Vec<Atom>> = sizes.iter().map(|_| Vec::new()).collect();
    for (ri, r) in rcf.relations().iter().enumerate() {
        let n = sizes[r.codomain()];
        let images: Vec<u64> = (0..sizes[r.domain()]).map(|g| to_mask(r.image(g).expect("in domain"))).collect();
        let (blo, bhi) = cfg.bounds.unwrap_or((1, n));
        for &op in rcf.operators() {
            let targets: Vec<Option<u64>> = if op == RelOp::Existential {
                alloc::vec![None]
            } else {
                (0..1u64 << n).map(Some).collect()
            };
            let bounds: Vec<u32> = if matches!(op, RelOp::LeqCard | RelOp::GeqCard) {
                (blo.max(1)..=bhi.min(n)).map(|b| b as u32).collect()
            } else {
                alloc::vec![0]
            };
            for &target in &targets {
                for &bound in &bounds {
                    let possible = (0..1u64 << n).any(|img| cond(op, bound, img, target));
                    if !possible && !cfg.keep_unsatisfiable {
                        continue;
                    }
                    let column = images
                        .iter()
                        .enumerate()
                        .filter(|(_, &img)| cond(op, bound, img, target))
                        .fold(0, |m, (g, _)| m | 1 << g);
                    atoms[r.domain()].push(Atom { op, relation: ri, codomain: r.codomain(), bound, target, column });
                }
            }
        }
    }
    let total: usize = atoms.iter().map(Vec::len).sum();
    let size = if total >= 127 { u128::MAX } else { 1u128 << total };
    if total >= 64 || size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let base: Vec<Vec<u64>> = rcf.contexts().iter().map(|k| k.columns().iter().map(to_mask).collect()).collect();

    // names[x][s]: closed extents of context x with the atom subset s.
    let mut names: Vec<Vec<u64>> = Vec::new();
    for x in 0..sizes.len() {
        let mut per = Vec::with_capacity(1 << atoms[x].len());
        for s in 0u64..1 << atoms[x].len() {
            let mut cols = base[x].clone();
            cols.extend(atoms[x].iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).map(|(_, a)| a.column));
            per.push(closed_extents(sizes[x], &cols));
        }
        names.push(per);
    }

    let attribute = |a: &Atom| ScaledAttribute {
        op: a.op,
        relation: a.relation,
        bound: matches!(a.op, RelOp::LeqCard | RelOp::GeqCard).then_some(a.bound as usize),
        target: a.target.map(|t| to_set(t, sizes[a.codomain])),
    };
    let mut out = Vec::new();
    let mut choice = alloc::vec![0u64; sizes.len()];
    loop {
        let named = |a: &Atom| a.target.is_none_or(|t| names[a.codomain][choice[a.codomain] as usize] >> t & 1 == 1);
        let mut saturated = true;
        let mut self_supported = true;
        for x in 0..sizes.len() {
            for (i, a) in atoms[x].iter().enumerate() {
                let chosen = choice[x] >> i & 1 == 1;
                let ok = named(a);
                saturated &= chosen || !ok;
                self_supported &= !chosen || ok;
            }
        }
        let sets = (0..sizes.len())
            .map(|x| {
                let mut v: Vec<ScaledAttribute> = atoms[x]
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| choice[x] >> i & 1 == 1)
                    .map(|(_, a)| attribute(a))
                    .collect();
                v.sort_by(|a, b| {
                    (a.op, a.relation, a.bound).cmp(&(b.op, b.relation, b.bound)).then_with(|| match (&a.target, &b.target) {
                        (Some(s), Some(t)) => extent_cmp(s, t),
                        (s, t) => s.is_some().cmp(&t.is_some()),
                    })
                });
                v
            })
            .collect();
        out.push(OracleEntry { sets, saturated, self_supported });
        let mut x = 0;
        loop {
            if x == sizes.len() {
                return Ok(out);
            }
            choice[x] += 1;
            if choice[x] < 1 << atoms[x].len() {
                break;
            }
            choice[x] = 0;
            x += 1;
        }
    }
}

/// The acceptable attribute sets found by the oracle.
pub fn oracle_acceptable(rcf: &RelationalContextFamily, budget: u128) -> Result<Vec<Vec<Vec<ScaledAttribute>>>> {
    Ok(oracle_enumerate(rcf, budget)?.into_iter().filter(OracleEntry::acceptable).map(|e| e.sets).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_extents_of_small_contexts() {
        // No attributes: only the full set is closed.
        assert_eq!(closed_extents(2, &[]), 1 << 0b11);
        // Columns {0} and {1}: extents 11, 01, 10, 00.
        assert_eq!(closed_extents(2, &[0b01, 0b10]), 0b1111);
        assert_eq!(closed_extents(0, &[]), 0b1);
    }
}

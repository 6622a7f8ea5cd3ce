//! Relational context families `<K⁰, R>` with their operator set `Ω`.

use alloc::format;
use alloc::vec::Vec;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::all_names;
use crate::scaling::{attribute_language, in_full_language, RelOp, Relation, ScaledAttribute, ScalingConfig};
use crate::set::ObjSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalContextFamily {
    contexts: Vec<FormalContext>,
    relations: Vec<Relation>,
    operators: Vec<RelOp>,
    config: ScalingConfig,
}

impl RelationalContextFamily {
    pub fn new(
        contexts: Vec<FormalContext>,
        relations: Vec<Relation>,
        mut operators: Vec<RelOp>,
        config: ScalingConfig,
    ) -> Result<Self> {
        for (i, k) in contexts.iter().enumerate() {
            if contexts[..i].iter().any(|o| o.id() == k.id()) {
                return Err(Error::InvalidArgument(format!("duplicate context {}", k.id())));
            }
            if k.base_count() != k.attribute_count() {
                return Err(Error::InvalidArgument(format!("initial context {} has scaled attributes", k.id())));
            }
        }
        for (i, r) in relations.iter().enumerate() {
            if relations[..i].iter().any(|o| o.id() == r.id()) {
                return Err(Error::InvalidArgument(format!("duplicate relation {}", r.id())));
            }
            let (Some(d), Some(c)) = (contexts.get(r.domain()), contexts.get(r.codomain())) else {
                return Err(Error::InvalidArgument(format!("relation {} has a dangling endpoint", r.id())));
            };
            if d.object_count() != r.domain_len() || c.object_count() != r.codomain_len() {
                return Err(Error::InvalidArgument(format!("relation {} does not fit its contexts", r.id())));
            }
        }
        operators.sort();
        operators.dedup();
        Ok(RelationalContextFamily { contexts, relations, operators, config })
    }

    pub fn contexts(&self) -> &[FormalContext] {
        &self.contexts
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn operators(&self) -> &[RelOp] {
        &self.operators
    }

    pub fn config(&self) -> &ScalingConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.contexts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty()
    }

    pub fn context_index(&self, id: &str) -> Option<usize> {
        self.contexts.iter().position(|k| k.id() == id)
    }

    pub fn relation_index(&self, id: &str) -> Option<usize> {
        self.relations.iter().position(|r| r.id() == id)
    }

    /// Same family with another scaling configuration.
    pub fn with_config(&self, config: ScalingConfig) -> Self {
        RelationalContextFamily { config, ..self.clone() }
    }

    /// `D^x` over the given per-context name sets.
    pub fn language(&self, x: usize, names: &[Vec<ObjSet>]) -> Vec<ScaledAttribute> {
        attribute_language(x, &self.operators, &self.relations, names, &self.config)
    }

    /// `D^x` over `N(K⁰)`.
    pub fn full_language(&self, x: usize) -> Result<Vec<ScaledAttribute>> {
        let names = self.all_names()?;
        Ok(self.language(x, &names))
    }

    fn all_names(&self) -> Result<Vec<Vec<ObjSet>>> {
        self.contexts
            .iter()
            .enumerate()
            .map(|(z, k)| {
                if self.relations.iter().any(|r| r.codomain() == z) {
                    all_names(k)
                } else {
                    Ok(Vec::new())
                }
            })
            .collect()
    }

    pub fn in_language(&self, x: usize, a: &ScaledAttribute) -> bool {
        in_full_language(x, a, &self.operators, &self.relations, &self.config)
    }

    /// Upper bound on `Σ_x |D^x|` computed without enumerating names.
    pub fn language_bound(&self) -> usize {
        let mut total: usize = 0;
        for r in &self.relations {
            let n = r.codomain_len();
            let names = if n >= usize::BITS as usize { usize::MAX } else { 1usize << n };
            for op in &self.operators {
                let per = match (op.is_qualified(), op.has_bound()) {
                    (false, _) => 1,
                    (true, false) => names,
                    (true, true) => names.saturating_mul(self.config.bound_range(n).count()),
                };
                total = total.saturating_add(per);
            }
        }
        total
    }
}

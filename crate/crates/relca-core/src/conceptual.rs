//! Conceptual scaling of many-valued contexts.

use core::fmt;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::set::ObjSet;

/// A value of a many-valued attribute.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(i64),
    Text(String),
}

impl Value {
    pub fn parse(s: &str) -> Value {
        s.parse().map(Value::Int).unwrap_or_else(|_| Value::Text(s.to_string()))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

/// `<G, N, W, J>` with `J` as a partial function from (object, attribute).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManyValuedContext {
    pub id: String,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    /// `values[g][n]`.
    pub values: Vec<Vec<Option<Value>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConceptualOp {
    /// `n = v` for one value.
    Dichotomic,
    /// `n = w`.
    Nominal,
    /// `n ≤ w`.
    Ordinal,
    /// `n ≤ w` and `n ≥ w`.
    InterOrdinal,
    /// `n ≠ w`.
    Contranominal,
}

/// How to scale one many-valued attribute. Empty `thresholds` means every
/// value the attribute takes, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleSpec {
    pub attribute: String,
    pub op: ConceptualOp,
    pub thresholds: Vec<Value>,
}

fn int(v: &Value, attr: &str) -> Result<i64> {
    match v {
        Value::Int(i) => Ok(*i),
        Value::Text(t) => Err(Error::InvalidArgument(format!("value {t} of {attr} is not ordered"))),
    }
}

/// Turns `mv` into a one-valued context with one column per generated
/// predicate. Objects without a value never satisfy a predicate.
pub fn conceptual_scale(mv: &ManyValuedContext, specs: &[ScaleSpec]) -> Result<FormalContext> {
    let mut names = Vec::new();
    let mut columns = Vec::new();
    let g = mv.objects.len();
    for spec in specs {
        let n = mv
            .attributes
            .iter()
            .position(|a| *a == spec.attribute)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown many-valued attribute {}", spec.attribute)))?;
        let cell = |o: usize| mv.values.get(o).and_then(|row| row.get(n)).and_then(Option::as_ref);
        let mut ws = spec.thresholds.clone();
        if ws.is_empty() {
            ws = (0..g).filter_map(cell).cloned().collect();
            ws.sort();
            ws.dedup();
        }
        if spec.op == ConceptualOp::Dichotomic && ws.len() != 1 {
            return Err(Error::InvalidArgument(format!("dichotomic scaling of {} needs one value", spec.attribute)));
        }
        let mut emit = |label: String, pred: &dyn Fn(&Value) -> Result<bool>| -> Result<()> {
            let mut col = ObjSet::with_capacity(g);
            for o in 0..g {
                if let Some(v) = cell(o) {
                    if pred(v)? {
                        col.insert(o);
                    }
                }
            }
            names.push(label);
            columns.push(col);
            Ok(())
        };
        let a = &spec.attribute;
        for w in &ws {
            match spec.op {
                ConceptualOp::Dichotomic | ConceptualOp::Nominal => emit(format!("{a}={w}"), &|v| Ok(v == w))?,
                ConceptualOp::Contranominal => emit(format!("{a}!={w}"), &|v| Ok(v != w))?,
                ConceptualOp::Ordinal => {
                    let t = int(w, a)?;
                    emit(format!("{a}<={w}"), &|v| Ok(int(v, a)? <= t))?
                }
                ConceptualOp::InterOrdinal => {
                    let t = int(w, a)?;
                    emit(format!("{a}<={w}"), &|v| Ok(int(v, a)? <= t))?;
                    emit(format!("{a}>={w}"), &|v| Ok(int(v, a)? >= t))?
                }
            }
        }
    }
    FormalContext::from_columns(mv.id.clone(), mv.objects.clone(), names, columns)
}

//! Text renderings of attributes and concept names.

use relca_core::name;
use relca_core::scaling::{RelOp, ScaledAttribute};
use relca_core::{Attribute, ObjSet, RelationalContextFamily};

/// File keyword of an operator.
pub fn keyword(op: RelOp) -> &'static str {
    match op {
        RelOp::Existential => "SOME",
        RelOp::QualifiedExistential => "E",
        RelOp::UniversalWide => "A",
        RelOp::StrictUniversal => "AE",
        RelOp::ContainsWide => "CW",
        RelOp::StrictContains => "CS",
        RelOp::LeqCard => "LE",
        RelOp::GeqCard => "GE",
    }
}

pub fn parse_keyword(s: &str) -> Option<RelOp> {
    RelOp::ALL.into_iter().find(|&op| keyword(op) == s)
}

/// Name of an extent of context `z`.
pub fn concept_name(rcf: &RelationalContextFamily, z: usize, extent: &ObjSet) -> String {
    name::render(extent, rcf.contexts()[z].objects())
}

fn parts(rcf: &RelationalContextFamily, a: &ScaledAttribute) -> (String, Option<String>) {
    let r = &rcf.relations()[a.relation];
    let target = a.target.as_ref().map(|t| concept_name(rcf, r.codomain(), t));
    (r.id().to_string(), target)
}

/// ASCII file syntax, such as `E p.DE` or `LE 2 p.AB`.
pub fn ascii(rcf: &RelationalContextFamily, a: &ScaledAttribute) -> String {
    let (r, t) = parts(rcf, a);
    let t = t.unwrap_or_default();
    let kw = keyword(a.op);
    match a.op {
        RelOp::Existential => format!("{kw} {r}"),
        RelOp::ContainsWide | RelOp::StrictContains => format!("{kw} {t}.{r}"),
        RelOp::LeqCard | RelOp::GeqCard => format!("{kw} {} {r}.{t}", a.bound.unwrap_or(0)),
        _ => format!("{kw} {r}.{t}"),
    }
}

/// Description-logic rendering, such as `∃p.DE` or `≤2 p.AB`.
pub fn unicode(rcf: &RelationalContextFamily, a: &ScaledAttribute) -> String {
    let (r, t) = parts(rcf, a);
    let t = t.unwrap_or_default();
    let n = a.bound.unwrap_or(0);
    match a.op {
        RelOp::Existential => format!("∃{r}"),
        RelOp::QualifiedExistential => format!("∃{r}.{t}"),
        RelOp::UniversalWide => format!("∀{r}.{t}"),
        RelOp::StrictUniversal => format!("∀∃{r}.{t}"),
        RelOp::ContainsWide => format!("∀{t}.{r}"),
        RelOp::StrictContains => format!("∀∃{t}.{r}"),
        RelOp::LeqCard => format!("≤{n} {r}.{t}"),
        RelOp::GeqCard => format!("≥{n} {r}.{t}"),
    }
}

pub fn attribute_ascii(rcf: &RelationalContextFamily, a: &Attribute) -> String {
    match a {
        Attribute::Plain(n) => n.clone(),
        Attribute::Scaled(s) => ascii(rcf, s),
    }
}

pub fn attribute_unicode(rcf: &RelationalContextFamily, a: &Attribute) -> String {
    match a {
        Attribute::Plain(n) => n.clone(),
        Attribute::Scaled(s) => unicode(rcf, s),
    }
}

/// Parses the ASCII syntax of a scaled attribute of context `x`.
pub fn parse_scaled(rcf: &RelationalContextFamily, x: usize, text: &str) -> Result<ScaledAttribute, String> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let op = toks.first().and_then(|k| parse_keyword(k)).ok_or_else(|| format!("unknown operator in `{text}`"))?;
    let relation = |id: &str| -> Result<usize, String> {
        let ri = rcf.relation_index(id).ok_or_else(|| format!("unknown relation `{id}`"))?;
        if rcf.relations()[ri].domain() != x {
            return Err(format!("relation `{id}` does not start at context {}", rcf.contexts()[x].id()));
        }
        Ok(ri)
    };
    let target = |ri: usize, t: &str| -> Result<ObjSet, String> {
        let z = rcf.relations()[ri].codomain();
        name::parse(t, rcf.contexts()[z].objects()).ok_or_else(|| format!("`{t}` is not a concept name of {}", rcf.contexts()[z].id()))
    };
    let qualified = |s: &str, reversed: bool| -> Result<(usize, ObjSet), String> {
        let (a, b) = if reversed { s.rsplit_once('.') } else { s.split_once('.') }.ok_or_else(|| format!("malformed `{s}`"))?;
        let (r, t) = if reversed { (b, a) } else { (a, b) };
        let ri = relation(r)?;
        Ok((ri, target(ri, t)?))
    };
    let (relation, bound, target) = match (op, toks.as_slice()) {
        (RelOp::Existential, [_, r]) => (relation(r)?, None, None),
        (RelOp::ContainsWide | RelOp::StrictContains, [_, s]) => {
            let (ri, t) = qualified(s, true)?;
            (ri, None, Some(t))
        }
        (RelOp::LeqCard | RelOp::GeqCard, [_, n, s]) => {
            let n: usize = n.parse().map_err(|_| format!("bad bound `{n}`"))?;
            let (ri, t) = qualified(s, false)?;
            (ri, Some(n), Some(t))
        }
        (RelOp::QualifiedExistential | RelOp::UniversalWide | RelOp::StrictUniversal, [_, s]) => {
            let (ri, t) = qualified(s, false)?;
            (ri, None, Some(t))
        }
        _ => return Err(format!("malformed attribute `{text}`")),
    };
    ScaledAttribute::new(op, relation, bound, target).map_err(|e| e.to_string())
}

//! The `.rcf` text format for relational context families and the solution
//! format for families of scaled contexts.
//!
//! ```text
//! # comment
//! context 1
//! objects: a b c
//! attributes: m1, m2
//! a: . x
//! b: . x
//! c: x .
//! end
//!
//! mvcontext people
//! objects: Alice Bob
//! attributes: age, shoesize
//! Alice: 12 32
//! Bob: 14 -
//! scale age nominal
//! scale shoesize ordinal 35
//! end
//!
//! relation p: 1 -> 2
//! a->d b->e
//! end
//!
//! operators: E AE
//! bounds: 1..2
//! keep-unsatisfiable: yes
//! ```
//!
//! A solution file holds one `context` block per context of the family. Its
//! attribute list carries the base attributes followed by scaled attributes
//! in the ASCII syntax (`E p.DE`, `LE 2 p.{a,b}`). Incidence rows are optional
//! and are checked against the relations when present.

use std::fmt::Write as _;

use relca_core::conceptual::{conceptual_scale, ConceptualOp, ManyValuedContext, ScaleSpec, Value};
use relca_core::engine::Family;
use relca_core::scaling::{RelOp, Relation, ScaledAttribute};
use relca_core::{Attribute, FormalContext, RelationalContextFamily, ScalingConfig};

use crate::render;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainContext {
    pub id: String,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub rows: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleLine {
    pub attribute: String,
    pub op: ConceptualOp,
    pub thresholds: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManyValuedSource {
    pub id: String,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    /// `None` is written `-`.
    pub values: Vec<Vec<Option<String>>>,
    pub scales: Vec<ScaleLine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextSource {
    Plain(PlainContext),
    ManyValued(ManyValuedSource),
}

impl ContextSource {
    pub fn id(&self) -> &str {
        match self {
            ContextSource::Plain(c) => &c.id,
            ContextSource::ManyValued(c) => &c.id,
        }
    }

    fn objects(&self) -> &[String] {
        match self {
            ContextSource::Plain(c) => &c.objects,
            ContextSource::ManyValued(c) => &c.objects,
        }
    }

    fn build(&self) -> relca_core::Result<FormalContext> {
        match self {
            ContextSource::Plain(c) => FormalContext::new(c.id.clone(), c.objects.clone(), c.attributes.clone(), &c.rows),
            ContextSource::ManyValued(c) => {
                let mv = ManyValuedContext {
                    id: c.id.clone(),
                    objects: c.objects.clone(),
                    attributes: c.attributes.clone(),
                    values: c.values.iter().map(|r| r.iter().map(|v| v.as_deref().map(Value::parse)).collect()).collect(),
                };
                let specs: Vec<ScaleSpec> = c
                    .scales
                    .iter()
                    .map(|s| ScaleSpec {
                        attribute: s.attribute.clone(),
                        op: s.op,
                        thresholds: s.thresholds.iter().map(|t| Value::parse(t)).collect(),
                    })
                    .collect();
                conceptual_scale(&mv, &specs)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSource {
    pub id: String,
    pub from: String,
    pub to: String,
    pub pairs: Vec<(String, String)>,
}

/// Parsed `.rcf` document. Without an `operators` line the operator set is
/// `{E}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcfDocument {
    pub contexts: Vec<ContextSource>,
    pub relations: Vec<RelationSource>,
    pub operators: Vec<RelOp>,
    pub bounds: Option<(usize, usize)>,
    pub keep_unsatisfiable: bool,
}

impl RcfDocument {
    pub fn config(&self) -> ScalingConfig {
        ScalingConfig { keep_unsatisfiable: self.keep_unsatisfiable, bounds: self.bounds }
    }

    /// Builds the family. Cannot fail on a document returned by [`parse_rcf`].
    pub fn to_family(&self) -> relca_core::Result<RelationalContextFamily> {
        let contexts = self.contexts.iter().map(ContextSource::build).collect::<relca_core::Result<Vec<_>>>()?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let find = |id: &str| {
                self.contexts
                    .iter()
                    .position(|c| c.id() == id)
                    .ok_or_else(|| relca_core::Error::InvalidArgument(format!("unknown context {id}")))
            };
            let (d, c) = (find(&r.from)?, find(&r.to)?);
            let (dk, ck) = (&contexts[d], &contexts[c]);
            let mut pairs = Vec::new();
            for (g, h) in &r.pairs {
                match (dk.object_index(g), ck.object_index(h)) {
                    (Some(g), Some(h)) => pairs.push((g, h)),
                    _ => return Err(relca_core::Error::InvalidArgument(format!("unknown object in {g}->{h}"))),
                }
            }
            relations.push(Relation::new(r.id.clone(), d, c, dk.object_count(), ck.object_count(), &pairs)?);
        }
        RelationalContextFamily::new(contexts, relations, self.operators.clone(), self.config())
    }
}

struct Line<'a> {
    no: usize,
    raw: &'a str,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, token: &str, message: impl Into<String>) -> ParseError {
        let byte = if token.is_empty() { None } else { self.raw.find(token) };
        let byte = byte.unwrap_or_else(|| self.raw.len() - self.raw.trim_start().len());
        ParseError { line: self.no, column: self.raw[..byte].chars().count() + 1, message: message.into() }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split_once('#').map_or(raw, |(a, _)| a);
            Line { no: i + 1, raw, text: body.trim() }
        })
        .filter(|l| !l.text.is_empty())
        .collect()
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

fn is_plain_attribute(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || ",#{}".contains(c))
}

/// Splits on commas outside braces.
fn split_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn block_end<'a, 'b>(ls: &'b [Line<'a>], start: usize) -> Result<usize, ParseError> {
    ls[start + 1..]
        .iter()
        .position(|l| l.text == "end")
        .map(|p| start + 1 + p)
        .ok_or_else(|| ls[start].err("", "block has no matching `end`"))
}

fn header<'a>(l: &Line<'a>, key: &str) -> Result<&'a str, ParseError> {
    let rest = l.text.strip_prefix(key).and_then(|r| r.strip_prefix(':')).ok_or_else(|| l.err("", format!("expected `{key}:`")))?;
    Ok(rest.trim())
}

struct ContextBody {
    objects: Vec<String>,
    attributes: Vec<(String, usize)>,
    attribute_line: usize,
    rows: Option<Vec<Vec<bool>>>,
}

/// Parses `objects:`, `attributes:` and incidence rows.
fn context_body(ls: &[Line<'_>], head: &Line<'_>) -> Result<ContextBody, ParseError> {
    let first = ls.first().ok_or_else(|| head.err("", "missing `objects:` line"))?;
    let objects: Vec<String> = header(first, "objects")?.split_whitespace().map(str::to_string).collect();
    for (i, o) in objects.iter().enumerate() {
        if !is_ident(o) {
            return Err(first.err(o, format!("invalid object name `{o}`")));
        }
        if objects[..i].contains(o) {
            return Err(first.err(o, format!("duplicate object `{o}`")));
        }
    }
    let second = ls.get(1).ok_or_else(|| head.err("", "missing `attributes:` line"))?;
    let attrs = split_list(header(second, "attributes")?);
    if attrs.iter().any(String::is_empty) {
        return Err(second.err(",", "empty attribute name"));
    }
    let attributes: Vec<(String, usize)> = attrs.into_iter().map(|a| (a, second.no)).collect();
    let mut rows: Vec<Option<Vec<bool>>> = vec![None; objects.len()];
    let mut seen = false;
    for l in &ls[2..] {
        let (o, cells) = l.text.split_once(':').ok_or_else(|| l.err("", "expected an incidence row `object: cells`"))?;
        let o = o.trim();
        let g = objects.iter().position(|x| x == o).ok_or_else(|| l.err(o, format!("unknown object `{o}`")))?;
        if rows[g].is_some() {
            return Err(l.err(o, format!("second row for object `{o}`")));
        }
        let mut row = Vec::new();
        for c in cells.split_whitespace() {
            match c {
                "x" | "X" => row.push(true),
                "." => row.push(false),
                _ => return Err(l.err(c, format!("cell `{c}` is neither `x` nor `.`"))),
            }
        }
        if row.len() != attributes.len() {
            return Err(l.err(o, format!("row has {} cells, expected {}", row.len(), attributes.len())));
        }
        rows[g] = Some(row);
        seen = true;
    }
    let rows = if seen {
        if let Some(g) = rows.iter().position(Option::is_none) {
            return Err(head.err("", format!("object `{}` has no incidence row", objects[g])));
        }
        Some(rows.into_iter().map(Option::unwrap).collect())
    } else {
        None
    };
    Ok(ContextBody { objects, attributes, attribute_line: second.no, rows })
}

fn scale_op(s: &str) -> Option<ConceptualOp> {
    Some(match s {
        "dichotomic" => ConceptualOp::Dichotomic,
        "nominal" => ConceptualOp::Nominal,
        "ordinal" => ConceptualOp::Ordinal,
        "interordinal" => ConceptualOp::InterOrdinal,
        "contranominal" => ConceptualOp::Contranominal,
        _ => return None,
    })
}

fn scale_keyword(op: ConceptualOp) -> &'static str {
    match op {
        ConceptualOp::Dichotomic => "dichotomic",
        ConceptualOp::Nominal => "nominal",
        ConceptualOp::Ordinal => "ordinal",
        ConceptualOp::InterOrdinal => "interordinal",
        ConceptualOp::Contranominal => "contranominal",
    }
}

fn mv_body(ls: &[Line<'_>], head: &Line<'_>, id: String) -> Result<ManyValuedSource, ParseError> {
    let first = ls.first().ok_or_else(|| head.err("", "missing `objects:` line"))?;
    let objects: Vec<String> = header(first, "objects")?.split_whitespace().map(str::to_string).collect();
    for (i, o) in objects.iter().enumerate() {
        if !is_ident(o) || objects[..i].contains(o) {
            return Err(first.err(o, format!("invalid or duplicate object `{o}`")));
        }
    }
    let second = ls.get(1).ok_or_else(|| head.err("", "missing `attributes:` line"))?;
    let attributes = split_list(header(second, "attributes")?);
    for a in &attributes {
        if !is_ident(a) {
            return Err(second.err(a, format!("invalid many-valued attribute `{a}`")));
        }
    }
    let mut values: Vec<Option<Vec<Option<String>>>> = vec![None; objects.len()];
    let mut scales = Vec::new();
    for l in &ls[2..] {
        if let Some(rest) = l.text.strip_prefix("scale ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let [attr, op, thresholds @ ..] = toks.as_slice() else {
                return Err(l.err("", "expected `scale attribute kind [values]`"));
            };
            if !attributes.iter().any(|a| a == attr) {
                return Err(l.err(attr, format!("unknown many-valued attribute `{attr}`")));
            }
            let op = scale_op(op).ok_or_else(|| l.err(op, format!("unknown scale `{op}`")))?;
            scales.push(ScaleLine { attribute: attr.to_string(), op, thresholds: thresholds.iter().map(|t| t.to_string()).collect() });
            continue;
        }
        let (o, cells) = l.text.split_once(':').ok_or_else(|| l.err("", "expected a value row or a `scale` line"))?;
        let o = o.trim();
        let g = objects.iter().position(|x| x == o).ok_or_else(|| l.err(o, format!("unknown object `{o}`")))?;
        if values[g].is_some() {
            return Err(l.err(o, format!("second row for object `{o}`")));
        }
        let row: Vec<Option<String>> = cells.split_whitespace().map(|c| (c != "-").then(|| c.to_string())).collect();
        if row.len() != attributes.len() {
            return Err(l.err(o, format!("row has {} values, expected {}", row.len(), attributes.len())));
        }
        values[g] = Some(row);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(g, r)| r.ok_or_else(|| head.err("", format!("object `{}` has no value row", objects[g]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ManyValuedSource { id, objects, attributes, values, scales })
}

fn operators(l: &Line<'_>, rest: &str) -> Result<Vec<RelOp>, ParseError> {
    let mut ops = Vec::new();
    for k in rest.split_whitespace() {
        ops.push(render::parse_keyword(k).ok_or_else(|| l.err(k, format!("unknown operator `{k}`")))?);
    }
    ops.sort();
    ops.dedup();
    Ok(ops)
}

pub fn parse_rcf(text: &str) -> Result<RcfDocument, ParseError> {
    let ls = lines(text);
    let mut doc = RcfDocument { contexts: Vec::new(), relations: Vec::new(), operators: vec![RelOp::QualifiedExistential], bounds: None, keep_unsatisfiable: false };
    let mut relation_lines = Vec::new();
    let mut i = 0;
    while i < ls.len() {
        let l = &ls[i];
        let (key, rest) = l.text.split_once([' ', ':']).map_or((l.text, ""), |(k, r)| (k, r.trim()));
        match key {
            "context" | "mvcontext" => {
                let id = rest.to_string();
                if !is_ident(&id) {
                    return Err(l.err(rest, format!("invalid context id `{id}`")));
                }
                if doc.contexts.iter().any(|c| c.id() == id) {
                    return Err(l.err(rest, format!("duplicate context `{id}`")));
                }
                let end = block_end(&ls, i)?;
                let body = &ls[i + 1..end];
                let source = if key == "context" {
                    let b = context_body(body, l)?;
                    let attr_line = body.iter().find(|x| x.no == b.attribute_line).unwrap_or(l);
                    for (k, (a, _)) in b.attributes.iter().enumerate() {
                        if !is_plain_attribute(a) {
                            return Err(attr_line.err(a, format!("initial contexts take plain attribute names, found `{a}`")));
                        }
                        if b.attributes[..k].iter().any(|(o, _)| o == a) {
                            return Err(attr_line.err(a, format!("duplicate attribute `{a}`")));
                        }
                    }
                    let rows = b.rows.unwrap_or_else(|| vec![Vec::new(); b.objects.len()]);
                    if rows.iter().any(|r| r.len() != b.attributes.len()) {
                        return Err(l.err("", "incidence rows are missing"));
                    }
                    ContextSource::Plain(PlainContext { id, objects: b.objects, attributes: b.attributes.into_iter().map(|(a, _)| a).collect(), rows })
                } else {
                    let s = ContextSource::ManyValued(mv_body(body, l, id)?);
                    s.build().map_err(|e| l.err("", e.to_string()))?;
                    s
                };
                doc.contexts.push(source);
                i = end + 1;
                continue;
            }
            "relation" => {
                let (id, ends) = rest.split_once(':').ok_or_else(|| l.err("", "expected `relation id: from -> to`"))?;
                let id = id.trim();
                let (from, to) = ends.split_once("->").ok_or_else(|| l.err("", "expected `from -> to`"))?;
                let (from, to) = (from.trim(), to.trim());
                if !is_ident(id) {
                    return Err(l.err(id, format!("invalid relation id `{id}`")));
                }
                if doc.relations.iter().any(|r| r.id == id) {
                    return Err(l.err(id, format!("duplicate relation `{id}`")));
                }
                let end = block_end(&ls, i)?;
                let mut pairs = Vec::new();
                let mut pair_lines = Vec::new();
                for pl in &ls[i + 1..end] {
                    for tok in pl.text.split_whitespace() {
                        let (g, h) = tok.split_once("->").ok_or_else(|| pl.err(tok, format!("expected `a->b`, found `{tok}`")))?;
                        pairs.push((g.to_string(), h.to_string()));
                        pair_lines.push((pl, tok));
                    }
                }
                doc.relations.push(RelationSource { id: id.to_string(), from: from.to_string(), to: to.to_string(), pairs });
                relation_lines.push((l, from, to, pair_lines));
                i = end + 1;
                continue;
            }
            "operators" => doc.operators = operators(l, rest)?,
            "bounds" => {
                let (a, b) = rest.split_once("..").ok_or_else(|| l.err(rest, "expected `bounds: lo..hi`"))?;
                let lo = a.trim().parse().map_err(|_| l.err(a, format!("bad bound `{a}`")))?;
                let hi = b.trim().parse().map_err(|_| l.err(b, format!("bad bound `{b}`")))?;
                if lo > hi || lo == 0 {
                    return Err(l.err(rest, "bounds need 1 <= lo <= hi"));
                }
                doc.bounds = Some((lo, hi));
            }
            "keep-unsatisfiable" => {
                doc.keep_unsatisfiable = match rest {
                    "yes" | "true" => true,
                    "no" | "false" => false,
                    _ => return Err(l.err(rest, "expected `yes` or `no`")),
                }
            }
            "end" => return Err(l.err("end", "`end` outside a block")),
            _ => return Err(l.err(key, format!("unknown directive `{key}`"))),
        }
        i += 1;
    }
    for ((l, from, to, pair_lines), r) in relation_lines.iter().zip(&doc.relations) {
        let find = |id: &str| doc.contexts.iter().find(|c| c.id() == id).ok_or_else(|| l.err(id, format!("unknown context `{id}`")));
        let (d, c) = (find(from)?, find(to)?);
        for ((pl, tok), (g, h)) in pair_lines.iter().zip(&r.pairs) {
            if !d.objects().contains(g) {
                return Err(pl.err(tok, format!("`{g}` is not an object of context {from}")));
            }
            if !c.objects().contains(h) {
                return Err(pl.err(tok, format!("`{h}` is not an object of context {to}")));
            }
        }
    }
    doc.to_family().map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })?;
    Ok(doc)
}

fn cells(row: impl IntoIterator<Item = bool>) -> String {
    row.into_iter().map(|b| if b { "x" } else { "." }).collect::<Vec<_>>().join(" ")
}

/// Canonical text of a document. `parse_rcf(write_rcf(d)) == d`.
pub fn write_rcf(doc: &RcfDocument) -> String {
    let mut s = String::new();
    for c in &doc.contexts {
        match c {
            ContextSource::Plain(c) => {
                let _ = writeln!(s, "context {}\nobjects: {}\nattributes: {}", c.id, c.objects.join(" "), c.attributes.join(", "));
                if !c.attributes.is_empty() {
                    for (o, row) in c.objects.iter().zip(&c.rows) {
                        let _ = writeln!(s, "{o}: {}", cells(row.iter().copied()));
                    }
                }
            }
            ContextSource::ManyValued(c) => {
                let _ = writeln!(s, "mvcontext {}\nobjects: {}\nattributes: {}", c.id, c.objects.join(" "), c.attributes.join(", "));
                for (o, row) in c.objects.iter().zip(&c.values) {
                    let vals: Vec<&str> = row.iter().map(|v| v.as_deref().unwrap_or("-")).collect();
                    let _ = writeln!(s, "{o}: {}", vals.join(" "));
                }
                for sc in &c.scales {
                    let mut line = format!("scale {} {}", sc.attribute, scale_keyword(sc.op));
                    for t in &sc.thresholds {
                        line.push(' ');
                        line.push_str(t);
                    }
                    let _ = writeln!(s, "{line}");
                }
            }
        }
        s.push_str("end\n\n");
    }
    for r in &doc.relations {
        let _ = writeln!(s, "relation {}: {} -> {}", r.id, r.from, r.to);
        if !r.pairs.is_empty() {
            let pairs: Vec<String> = r.pairs.iter().map(|(g, h)| format!("{g}->{h}")).collect();
            let _ = writeln!(s, "{}", pairs.join(" "));
        }
        s.push_str("end\n\n");
    }
    let ops: Vec<&str> = doc.operators.iter().map(|&o| render::keyword(o)).collect();
    let _ = writeln!(s, "operators: {}", ops.join(" "));
    if let Some((lo, hi)) = doc.bounds {
        let _ = writeln!(s, "bounds: {lo}..{hi}");
    }
    if doc.keep_unsatisfiable {
        s.push_str("keep-unsatisfiable: yes\n");
    }
    s
}

/// Text of a family of scaled contexts. Rows are included when `rows` is set.
pub fn write_solution(family: &Family, rcf: &RelationalContextFamily, rows: bool) -> String {
    let mut s = String::new();
    for x in 0..family.len() {
        let k = family.context(x);
        let attrs: Vec<String> = k.attributes().iter().map(|a| render::attribute_ascii(rcf, a)).collect();
        let _ = writeln!(s, "context {}\nobjects: {}\nattributes: {}", k.id(), k.objects().join(" "), attrs.join(", "));
        if rows && k.attribute_count() > 0 {
            for (g, o) in k.objects().iter().enumerate() {
                let _ = writeln!(s, "{o}: {}", cells((0..k.attribute_count()).map(|m| k.incidence(g, m))));
            }
        }
        s.push_str("end\n\n");
    }
    s
}

/// Parses a solution file against `rcf`.
pub fn parse_solution(text: &str, rcf: &RelationalContextFamily) -> Result<Family, ParseError> {
    let ls = lines(text);
    let mut sets: Vec<Option<Vec<ScaledAttribute>>> = vec![None; rcf.len()];
    let mut checks = Vec::new();
    let mut i = 0;
    while i < ls.len() {
        let l = &ls[i];
        let Some(id) = l.text.strip_prefix("context ").map(str::trim) else {
            return Err(l.err("", "solution files hold `context` blocks only"));
        };
        let x = rcf.context_index(id).ok_or_else(|| l.err(id, format!("unknown context `{id}`")))?;
        if sets[x].is_some() {
            return Err(l.err(id, format!("duplicate context `{id}`")));
        }
        let end = block_end(&ls, i)?;
        let body = &ls[i + 1..end];
        let b = context_body(body, l)?;
        let k0 = &rcf.contexts()[x];
        if b.objects != k0.objects() {
            return Err(body[0].err("", format!("objects differ from those of context {id}")));
        }
        let attr_line = &body[1];
        let mut base = Vec::new();
        let mut scaled: Vec<ScaledAttribute> = Vec::new();
        for (a, _) in &b.attributes {
            if a.contains(char::is_whitespace) {
                let s = render::parse_scaled(rcf, x, a).map_err(|m| attr_line.err(a, m))?;
                if !rcf.in_language(x, &s) {
                    return Err(attr_line.err(a, format!("`{a}` is not in the attribute language of context {id}")));
                }
                if scaled.contains(&s) {
                    return Err(attr_line.err(a, format!("duplicate attribute `{a}`")));
                }
                scaled.push(s);
            } else {
                base.push(a.clone());
            }
        }
        let expected: Vec<String> = k0.attributes().iter().map(|a| render::attribute_ascii(rcf, a)).collect();
        if base != expected {
            return Err(attr_line.err("", format!("base attributes of context {id} must be `{}`", expected.join(", "))));
        }
        if let Some(rows) = b.rows {
            checks.push((x, l.no, b.attributes.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>(), rows));
        }
        scaled.sort();
        sets[x] = Some(scaled);
        i = end + 1;
    }
    let missing = sets.iter().position(Option::is_none);
    if let Some(x) = missing {
        let line = ls.last().map_or(1, |l| l.no);
        return Err(ParseError { line, column: 1, message: format!("context `{}` is missing", rcf.contexts()[x].id()) });
    }
    let sets: Vec<Vec<ScaledAttribute>> = sets.into_iter().map(Option::unwrap).collect();
    let family = Family::from_scaled(rcf, &sets).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })?;
    for (x, line, attrs, rows) in checks {
        let k = family.context(x);
        for (g, row) in rows.iter().enumerate() {
            for (a, &cell) in attrs.iter().zip(row) {
                let attr = if a.contains(char::is_whitespace) {
                    Attribute::Scaled(render::parse_scaled(rcf, x, a).expect("checked above"))
                } else {
                    Attribute::Plain(a.clone())
                };
                let m = k.attribute_index(&attr).expect("attribute present");
                if k.incidence(g, m) != cell {
                    return Err(ParseError {
                        line,
                        column: 1,
                        message: format!("cell ({}, {a}) of context {} disagrees with the relations", k.objects()[g], k.id()),
                    });
                }
            }
        }
    }
    Ok(family)
}

#![allow(dead_code)]

use relca_core::engine::Family;
use relca_core::name;
use relca_core::scaling::{RelOp, Relation, ScaledAttribute, ScalingConfig};
use relca_core::{Attribute, ConceptLattice, FormalContext, RelationalContextFamily};

/// Context whose objects are the characters of `objs`; rows use `x` and `.`.
pub fn ctx(id: &str, objs: &str, attrs: &[&str], rows: &[&str]) -> FormalContext {
    let objects: Vec<String> = objs.chars().map(String::from).collect();
    let rows: Vec<Vec<bool>> = if rows.is_empty() {
        vec![vec![]; objects.len()]
    } else {
        rows.iter().map(|r| r.chars().map(|c| c == 'x').collect()).collect()
    };
    FormalContext::new(id, objects, attrs.iter().map(|s| s.to_string()).collect(), &rows).unwrap()
}

/// Relation given as `"a->d b->e"`.
pub fn rel(id: &str, dom: (usize, &FormalContext), cod: (usize, &FormalContext), pairs: &str) -> Relation {
    let p: Vec<(usize, usize)> = pairs
        .split_whitespace()
        .map(|t| {
            let (g, h) = t.split_once("->").unwrap();
            (dom.1.object_index(g).unwrap(), cod.1.object_index(h).unwrap())
        })
        .collect();
    Relation::new(id, dom.0, cod.0, dom.1.object_count(), cod.1.object_count(), &p).unwrap()
}

pub fn mutual_with(config: ScalingConfig) -> RelationalContextFamily {
    let k1 = ctx("1", "abc", &["m1", "m2", "m3"], &[".x.", ".x.", "x.x"]);
    let k2 = ctx("2", "def", &["n1", "n2"], &["x.", "xx", ".."]);
    let p = rel("p", (0, &k1), (1, &k2), "a->d b->e c->f");
    let q = rel("q", (1, &k2), (0, &k1), "d->a e->b f->c");
    RelationalContextFamily::new(vec![k1, k2], vec![p, q], vec![RelOp::QualifiedExistential], config).unwrap()
}

pub fn mutual() -> RelationalContextFamily {
    mutual_with(ScalingConfig::default())
}

pub fn cycle_with(config: ScalingConfig) -> RelationalContextFamily {
    let k0 = ctx("0", "abcd", &[], &[]);
    let r = rel("r", (0, &k0), (0, &k0), "a->b b->a c->d d->c a->a b->b");
    RelationalContextFamily::new(vec![k0], vec![r], vec![RelOp::QualifiedExistential], config).unwrap()
}

pub fn cycle() -> RelationalContextFamily {
    cycle_with(ScalingConfig::default())
}

pub fn crossed_with(config: ScalingConfig) -> RelationalContextFamily {
    let k3 = ctx("3", "ab", &[], &[]);
    let k4 = ctx("4", "cd", &[], &[]);
    let p = rel("p", (0, &k3), (1, &k4), "a->c b->d");
    let q = rel("q", (1, &k4), (0, &k3), "c->a d->b");
    RelationalContextFamily::new(vec![k3, k4], vec![p, q], vec![RelOp::QualifiedExistential], config).unwrap()
}

pub fn crossed() -> RelationalContextFamily {
    crossed_with(ScalingConfig::default())
}

/// `"p.DE"` as `∃p.DE`.
pub fn ex(rcf: &RelationalContextFamily, text: &str) -> ScaledAttribute {
    let (r, t) = text.split_once('.').unwrap();
    let ri = rcf.relation_index(r).unwrap();
    let cod = &rcf.contexts()[rcf.relations()[ri].codomain()];
    ScaledAttribute::exists(ri, name::parse(t, cod.objects()).unwrap())
}

pub fn sets(rcf: &RelationalContextFamily, per: &[&[&str]]) -> Vec<Vec<ScaledAttribute>> {
    per.iter()
        .map(|s| {
            let mut v: Vec<ScaledAttribute> = s.iter().map(|t| ex(rcf, t)).collect();
            v.sort();
            v
        })
        .collect()
}

pub fn fam(rcf: &RelationalContextFamily, per: &[&[&str]]) -> Family {
    Family::from_scaled(rcf, &sets(rcf, per)).unwrap()
}

/// `"p.DE"` style label of an attribute (plain attributes by name).
pub fn label(rcf: &RelationalContextFamily, a: &Attribute) -> String {
    match a {
        Attribute::Plain(n) => n.clone(),
        Attribute::Scaled(s) => {
            let r = &rcf.relations()[s.relation];
            let cod = &rcf.contexts()[r.codomain()];
            format!("{}.{}", r.id(), name::render(s.target.as_ref().unwrap(), cod.objects()))
        }
    }
}

/// `(extent name, intent labels)` per concept, in lattice order.
pub fn concepts(rcf: &RelationalContextFamily, l: &ConceptLattice) -> Vec<(String, Vec<String>)> {
    let k = l.context();
    l.concepts()
        .iter()
        .map(|c| {
            (
                name::render(&c.extent, k.objects()),
                c.intent.ones().map(|m| label(rcf, &k.attributes()[m])).collect(),
            )
        })
        .collect()
}

pub fn scaled_labels(rcf: &RelationalContextFamily, k: &FormalContext) -> Vec<String> {
    k.attributes()[k.base_count()..].iter().map(|a| label(rcf, a)).collect()
}

pub fn owned(v: &[(&str, &[&str])]) -> Vec<(String, Vec<String>)> {
    v.iter().map(|(n, i)| (n.to_string(), i.iter().map(|s| s.to_string()).collect())).collect()
}

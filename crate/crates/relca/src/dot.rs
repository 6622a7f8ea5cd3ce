//! Graphviz export of concept lattices.

use std::fmt::Write as _;

use relca_core::engine::Family;
use relca_core::RelationalContextFamily;

use crate::render;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One `digraph` for context `x` of `family`. Edges run from each concept to
/// its lower covers. With `reduced`, nodes show only introduced attributes
/// and objects, otherwise full intents and extents.
pub fn export_dot(family: &Family, rcf: &RelationalContextFamily, x: usize, reduced: bool) -> String {
    let l = family.lattice(x);
    let k = l.context();
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", escape(k.id()));
    s.push_str("  node [shape=box];\n  edge [dir=none];\n");
    for (i, c) in l.concepts().iter().enumerate() {
        let (attrs, objs): (Vec<usize>, Vec<usize>) = if reduced {
            (l.introduced_attributes(i), l.introduced_objects(i))
        } else {
            (c.intent.ones().collect(), c.extent.ones().collect())
        };
        let attrs: Vec<String> = attrs.iter().map(|&m| render::attribute_unicode(rcf, &k.attributes()[m])).collect();
        let objs: Vec<&str> = objs.iter().map(|&g| k.objects()[g].as_str()).collect();
        let name = render::concept_name(rcf, x, &c.extent);
        let label = format!("{}\\n{}\\n{}", escape(&name), escape(&attrs.join(", ")), escape(&objs.join(", ")));
        let _ = writeln!(s, "  c{i} [label=\"{label}\"];");
    }
    for (lower, upper) in l.covering_pairs() {
        let _ = writeln!(s, "  c{upper} -> c{lower};");
    }
    s.push_str("}\n");
    s
}

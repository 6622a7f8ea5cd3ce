//! Concept names: canonical renderings of extents.

use alloc::string::String;
use alloc::vec::Vec;

use crate::set::ObjSet;

/// Rendering of the empty extent.
pub const BOT: &str = "BOT";

/// Whether extents of `objects` can be written as a bare concatenation of
/// uppercase object names without ambiguity.
pub fn compact_names(objects: &[String]) -> bool {
    let mut seen: Vec<char> = Vec::with_capacity(objects.len());
    for o in objects {
        let mut chars = o.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return false;
        };
        if !c.is_alphanumeric() {
            return false;
        }
        let u = c.to_uppercase().next().unwrap_or(c);
        if seen.contains(&u) {
            return false;
        }
        seen.push(u);
    }
    !(seen.contains(&'B') && seen.contains(&'O') && seen.contains(&'T'))
}

/// Renders an extent over `objects`.
///
/// `{a,b}` is used instead of `AB` whenever the compact form could collide.
pub fn render(extent: &ObjSet, objects: &[String]) -> String {
    if extent.is_clear() {
        return String::from(BOT);
    }
    let mut out = String::new();
    if compact_names(objects) {
        for i in extent.ones() {
            out.extend(objects[i].chars().flat_map(char::to_uppercase));
        }
    } else {
        out.push('{');
        for (k, i) in extent.ones().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&objects[i]);
        }
        out.push('}');
    }
    out
}

/// Parses a rendered name back into an extent over `objects`.
pub fn parse(text: &str, objects: &[String]) -> Option<ObjSet> {
    let mut set = ObjSet::with_capacity(objects.len());
    if text == BOT || text == "{}" {
        return Some(set);
    }
    if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        for part in inner.split(',') {
            let i = objects.iter().position(|o| o == part.trim())?;
            set.insert(i);
        }
        return Some(set);
    }
    if !compact_names(objects) {
        return None;
    }
    let mut last: Option<usize> = None;
    for c in text.chars() {
        let i = objects
            .iter()
            .position(|o| o.chars().flat_map(char::to_uppercase).eq(c.to_uppercase()))?;
        if last.is_some_and(|l| l >= i) {
            return None;
        }
        last = Some(i);
        set.insert(i);
    }
    Some(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set_of;
    use alloc::string::ToString;
    use alloc::vec;

    fn objs(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn compact_rendering() {
        let g = objs(&["a", "b", "c"]);
        assert_eq!(render(&set_of(3, [0, 1]), &g), "AB");
        assert_eq!(render(&set_of(3, []), &g), "BOT");
        assert_eq!(parse("AB", &g), Some(set_of(3, [0, 1])));
        assert_eq!(parse("BA", &g), None);
        assert_eq!(parse("BOT", &g), Some(set_of(3, [])));
    }

    #[test]
    fn braced_rendering() {
        let g = objs(&["Alice", "Bob"]);
        assert_eq!(render(&set_of(2, [0, 1]), &g), "{Alice,Bob}");
        assert_eq!(parse("{Bob}", &g), Some(set_of(2, [1])));
        let bot = objs(&["b", "o", "t"]);
        assert!(!compact_names(&bot));
        assert_eq!(render(&set_of(3, [0, 1, 2]), &bot), "{b,o,t}");
    }

    #[test]
    fn rendering_is_injective_on_small_powersets() {
        for g in [objs(&["a", "b", "c", "d"]), objs(&["x", "yy", "z"]), objs(&["b", "o", "t"])] {
            let n = g.len();
            let mut seen = vec![];
            for mask in 0u32..(1 << n) {
                let s = set_of(n, (0..n).filter(|i| mask >> i & 1 == 1));
                let r = render(&s, &g);
                assert_eq!(parse(&r, &g), Some(s));
                assert!(!seen.contains(&r));
                seen.push(r);
            }
        }
    }
}

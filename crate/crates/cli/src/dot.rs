//! Graphviz output: one node per generator, one edge per boundary incidence.

use std::collections::BTreeSet;

use polygraph_core::Presentation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(p: &Presentation, name: &str) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for g in p.generators() {
        out.push_str(&format!("  {} [label={}, shape=box, dim={}];\n", quote(&g.name), quote(&format!("{} ({})", g.name, g.dim)), g.dim));
    }
    for g in p.generators() {
        for (side, t) in [("s", &g.src), ("t", &g.tgt)] {
            let Some(t) = t else { continue };
            let seen: BTreeSet<String> = t.generators().into_iter().collect();
            for h in seen {
                out.push_str(&format!("  {} -> {} [label={side}];\n", quote(&g.name), quote(&h)));
            }
        }
    }
    out.push_str("}\n");
    out
}

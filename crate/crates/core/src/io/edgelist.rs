//! Plain edge lists: the order on the first line, then one `u v` pair per
//! line. Labels are 0-based unless `one_based` is set. Blank lines and lines
//! starting with `#` are skipped.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn parse(text: &str, one_based: bool) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, msg: String| Error::Parse { line, msg };

    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| bad(line, format!("expected a vertex count, got {header:?}")))?;
    if n > MAX_ORDER {
        return Err(bad(line, format!("order {n} exceeds {MAX_ORDER}")));
    }

    let shift = one_based as usize;
    let mut g = Graph::new(n);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(bad(line, format!("expected two vertices, got {text:?}")));
        };
        let label = |s: &str| -> Result<usize> {
            let x: usize = s.parse().map_err(|_| bad(line, format!("bad vertex {s:?}")))?;
            x.checked_sub(shift)
                .filter(|&v| v < n)
                .ok_or_else(|| bad(line, format!("vertex {x} out of range")))
        };
        let (u, v) = (label(a)?, label(b)?);
        if u == v {
            return Err(bad(line, format!("self-loop at {a}")));
        }
        if g.has_edge(u, v) {
            return Err(bad(line, format!("duplicate edge {a} {b}")));
        }
        g.put(u, v, true);
    }
    Ok(g)
}

pub fn emit(g: &Graph, one_based: bool) -> String {
    let shift = one_based as usize;
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + shift, v + shift));
    }
    out
}

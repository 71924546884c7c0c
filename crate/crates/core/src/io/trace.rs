//! Line format for rewrite traces: the initial graph as graph6, then one
//! move per line, e.g. `B 0 4 5 70 78` or `A 0 2 0 6` (vertices, then cM₂
//! before and after).

use super::graph6;
use crate::error::{Error, Result};
use crate::indices::IndexValue;
use crate::rewrites::{Move, RewriteTrace, TraceStep};

pub fn to_text(trace: &RewriteTrace) -> Result<String> {
    let mut out = graph6::encode(&trace.initial)?;
    out.push('\n');
    for s in &trace.steps {
        out.push_str(&format!("{} {} {}\n", s.mv, s.before, s.after));
    }
    Ok(out)
}

/// Parses a trace and replays it, so the result is a checked certificate.
pub fn from_text(text: &str) -> Result<RewriteTrace> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing initial graph".into(),
    })?;
    let initial = graph6::decode(head.trim())?;

    let mut steps = Vec::new();
    for (i, line) in lines {
        let bad = |msg: &str| Error::Parse {
            line: i + 1,
            msg: format!("{msg}: {line:?}"),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let nums = fields[1..]
            .iter()
            .map(|f| f.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("non-numeric field"))?;
        let vertex = |x: i64| usize::try_from(x).map_err(|_| bad("negative vertex"));
        let (mv, values) = match (fields[0], nums.len()) {
            ("A", 4) => (
                Move::A {
                    u: vertex(nums[0])?,
                    v: vertex(nums[1])?,
                },
                &nums[2..],
            ),
            ("B", 5) | ("C", 5) => {
                let (u, v, w) = (vertex(nums[0])?, vertex(nums[1])?, vertex(nums[2])?);
                let mv = if fields[0] == "B" { Move::B { u, v, w } } else { Move::C { u, v, w } };
                (mv, &nums[3..])
            }
            _ => return Err(bad("malformed move")),
        };
        steps.push(TraceStep {
            mv,
            before: IndexValue(values[0]),
            after: IndexValue(values[1]),
        });
    }

    let mut trace = RewriteTrace {
        final_graph: initial.clone(),
        initial,
        steps,
    };
    let mut g = trace.initial.clone();
    for s in &trace.steps {
        g = crate::rewrites::apply_move(&g, s.mv)?;
    }
    trace.final_graph = g;
    trace.replay()?;
    Ok(trace)
}

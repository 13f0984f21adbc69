// === generator specs: tiny grammar for building graphs on the command line
//
//   path-of-squares:M            M-vertex path of squares (M even, >= 4)
//   k2m:M                        complete bipartite K_{2,M-2} on M vertices
//   gnp:N,P,SEED                 seeded G(N, P) sample
//   glue:SPEC@U,V+SPEC@X,Y       glue the second graph's non-edge {X,Y}
//                                onto the first's non-edge {U,V}
//
// Vertex anchors are 0-based, matching edge-list files. Glue specs do not
// nest.

use squarelab_core::error::{Error, Result};
use squarelab_core::extremal::{
    complete_bipartite, glue_along_nonedges, path_of_squares, GlueOrientation,
};
use squarelab_core::randlab::sample_gnp;
use squarelab_core::Graph;

fn bad(spec: &str, reason: impl Into<String>) -> Error {
    Error::GenSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_num<T: std::str::FromStr>(spec: &str, field: &str, s: &str) -> Result<T> {
    s.trim()
        .parse::<T>()
        .map_err(|_| bad(spec, format!("cannot parse {field} from `{}`", s.trim())))
}

/// Build the graph described by `spec`.
pub fn build(spec: &str) -> Result<Graph> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad(spec, "expected KIND:ARGS"))?;
    match kind {
        "path-of-squares" => path_of_squares(parse_num(spec, "vertex count", rest)?),
        "k2m" => {
            let m: usize = parse_num(spec, "vertex count", rest)?;
            if m < 3 {
                return Err(bad(spec, "k2m needs at least 3 vertices"));
            }
            Ok(complete_bipartite(2, m - 2))
        }
        "gnp" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                return Err(bad(spec, "gnp takes N,P,SEED"));
            }
            let n: usize = parse_num(spec, "n", parts[0])?;
            let p: f64 = parse_num(spec, "p", parts[1])?;
            let seed: u64 = parse_num(spec, "seed", parts[2])?;
            sample_gnp(n, p, seed)
        }
        "glue" => {
            let (left, right) = rest
                .split_once('+')
                .ok_or_else(|| bad(spec, "glue takes SPEC@U,V+SPEC@X,Y"))?;
            let (g1, f1) = parse_anchored(spec, left)?;
            let (g2, f2) = parse_anchored(spec, right)?;
            glue_along_nonedges(&g1, f1, &g2, f2, GlueOrientation::LowerToLower)
        }
        _ => Err(bad(spec, format!("unknown generator `{kind}`"))),
    }
}

fn parse_anchored(spec: &str, part: &str) -> Result<(Graph, (usize, usize))> {
    let (inner, anchor) = part
        .rsplit_once('@')
        .ok_or_else(|| bad(spec, format!("missing @U,V anchor in `{part}`")))?;
    if inner.starts_with("glue:") {
        return Err(bad(spec, "glue specs do not nest"));
    }
    let (u, v) = anchor
        .split_once(',')
        .ok_or_else(|| bad(spec, format!("anchor `{anchor}` is not U,V")))?;
    let g = build(inner)?;
    Ok((
        g,
        (
            parse_num(spec, "anchor vertex", u)?,
            parse_num(spec, "anchor vertex", v)?,
        ),
    ))
}

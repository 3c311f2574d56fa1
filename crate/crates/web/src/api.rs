use fortress::classify::classify;
use fortress::forcing::closure;
use fortress::forts::{is_minimal_fort, minimal_forts};
use fortress::graph6::{parse_graph6, to_graph6};
use fortress::structure::{
    adjusted_fort, adjusted_pgs_fort, leaf_to_leaf_fort, leg_to_leaf, standard_path_fort,
    standard_two_leg_fort, star_centers, tree_shape, PathEnd,
};
use fortress::{Error, FamilySpec, Graph, SearchLimit, VertexSet};
use serde_json::json;

use crate::layout::layout;

/// Largest order the page will search exhaustively.
pub const BROWSER_MAX_EXACT: usize = 16;

/// Reads graph6, or an edge list when the text has more than one line.
pub fn read(text: &str) -> fortress::Result<Graph> {
    let text = text.trim();
    if text.lines().count() > 1 {
        Graph::parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

fn render(value: serde_json::Value) -> fortress::Result<String> {
    Ok(value.to_string())
}

pub fn analyze(text: &str) -> fortress::Result<String> {
    let g = read(text)?;
    let limit = SearchLimit::new(BROWSER_MAX_EXACT);
    let c = classify(&g, limit)?;
    let exact = if g.n() <= BROWSER_MAX_EXACT {
        Some(minimal_forts(&g, limit)?)
    } else {
        None
    };
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    let positions: Vec<[f64; 2]> = layout(&g).into_iter().map(|(x, y)| [x, y]).collect();
    let rounds: Vec<VertexSet> = star_centers(&g)
        .layers
        .into_iter()
        .map(|l| l.centers)
        .collect();
    render(json!({
        "graph": to_graph6(&g)?,
        "n": g.n(),
        "edges": edges,
        "positions": positions,
        "is_tree": g.is_tree(),
        "tree_shape": if g.is_tree() { Some(tree_shape(&g)?) } else { None },
        "leaves": g.leaves(),
        "well_failed": c.well_failed,
        "well_forced": c.well_forced,
        "method": c.method,
        "z_number": exact.as_ref().map(|r| r.z_number),
        "f_number": exact.as_ref().map(|r| r.f_number),
        "minimal_forts": exact.as_ref().map(|r| &r.minimal_forts),
        "star_centers": rounds,
    }))
}

pub fn force(text: &str, blue: &[u32]) -> fortress::Result<String> {
    let g = read(text)?;
    let mut start = VertexSet::empty(g.n());
    for &v in blue {
        let v = v as usize;
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        start.insert(v);
    }
    let trace = closure(&g, &start);
    render(json!({
        "forces": trace.forces,
        "final_blue": trace.final_blue,
        "zero_forcing": trace.final_blue.len() == g.n(),
        "fort": trace.final_blue.complement(),
    }))
}

pub fn construct(text: &str, kind: &str, a: u32, b: u32) -> fortress::Result<String> {
    let t = read(text)?;
    let (a, b) = (a as usize, b as usize);
    let w = match kind {
        "path" => standard_path_fort(&t, if a == 0 { PathEnd::Low } else { PathEnd::High })?,
        "two-leg" => standard_two_leg_fort(&t, &leg_to_leaf(&t, a)?, &leg_to_leaf(&t, b)?)?,
        "adjusted" => adjusted_fort(&t)?,
        "adjusted-pgs" => adjusted_pgs_fort(&t)?,
        "leaf-to-leaf" => leaf_to_leaf_fort(&t, a, b)?,
        other => {
            return Err(Error::Precondition(format!(
                "unknown construction {other:?}"
            )))
        }
    };
    render(json!({ "fort": w, "minimal": is_minimal_fort(&t, &w) }))
}

pub fn family(name: &str, n: u32, legs: &str) -> fortress::Result<String> {
    let n = n as usize;
    let legs = || -> fortress::Result<Vec<usize>> {
        legs.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| Error::InvalidFamily(format!("bad leg length {s:?}")))
            })
            .collect()
    };
    let g = match name {
        "path" => FamilySpec::Path(n).generate()?,
        "cycle" => FamilySpec::Cycle(n).generate()?,
        "complete" => FamilySpec::Complete(n).generate()?,
        "star" => FamilySpec::Star(n).generate()?,
        "generalized-star" => FamilySpec::GeneralizedStar(legs()?).generate()?,
        "star222" => FamilySpec::Star222.generate()?,
        "petersen" => FamilySpec::Petersen.generate()?,
        "layered-star-tree" => fortress::families::layered_star_tree(),
        "leafy-triangle" => fortress::families::leafy_triangle_graph(),
        other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
    };
    to_graph6(&g)
}

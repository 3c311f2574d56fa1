//! JSON and text renderings of the analyses.

use std::fmt::Write as _;

use fortress::classify::{classify, Method};
use fortress::forts::{minimal_forts, FortReport};
use fortress::graph6::to_graph6;
use fortress::structure::{star_centers, tree_shape, TreeShape};
use fortress::{Graph, Result, SearchLimit, VertexSet};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Irrelevant {
    pub fort: VertexSet,
    pub zero_forcing: VertexSet,
    pub failed_zero_forcing: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub forts: Option<[VertexSet; 2]>,
    pub zero_forcing_sets: Option<[VertexSet; 2]>,
}

/// Output of `classify`. Fields that need the exact search are `null` for
/// trees above the search limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub z_number: Option<usize>,
    pub f_number: Option<usize>,
    pub minimal_forts: Option<Vec<VertexSet>>,
    pub fort_sizes: Option<Vec<usize>>,
    pub well_failed: bool,
    pub well_forced: bool,
    pub method: Method,
    pub witnesses: Witnesses,
    pub irrelevant: Option<Irrelevant>,
    /// Star centers by round.
    pub star_centers: Vec<VertexSet>,
    pub tree_shape: Option<TreeShape>,
}

impl Report {
    pub fn build(g: &Graph, limit: SearchLimit) -> Result<Self> {
        let c = classify(g, limit)?;
        let exact: Option<FortReport> = match c.method {
            Method::TreeFastpath => None,
            _ => Some(minimal_forts(g, limit)?),
        };
        let tree = g.is_tree();
        Ok(Report {
            graph: to_graph6(g)?,
            n: g.n(),
            m: g.m(),
            z_number: exact.as_ref().map(|r| r.z_number),
            f_number: exact.as_ref().map(|r| r.f_number),
            fort_sizes: exact.as_ref().map(FortReport::sizes),
            irrelevant: exact.as_ref().map(|r| Irrelevant {
                fort: r.fort_irrelevant.clone(),
                zero_forcing: r.zf_irrelevant.clone(),
                failed_zero_forcing: r.failed_zf_irrelevant.clone(),
            }),
            minimal_forts: exact.map(|r| r.minimal_forts),
            well_failed: c.well_failed,
            well_forced: c.well_forced,
            method: c.method,
            witnesses: Witnesses {
                forts: c.fort_witnesses,
                zero_forcing_sets: c.zfs_witnesses,
            },
            star_centers: star_centers(g)
                .layers
                .into_iter()
                .map(|l| l.centers)
                .collect(),
            tree_shape: if tree { Some(tree_shape(g)?) } else { None },
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes = |b: bool| if b { "yes" } else { "no" };
        let opt =
            |v: Option<usize>| v.map_or("n/a (above search limit)".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "graph        {} (n = {}, m = {})",
            self.graph, self.n, self.m
        );
        let _ = writeln!(out, "Z            {}", opt(self.z_number));
        let _ = writeln!(out, "F            {}", opt(self.f_number));
        if let (Some(forts), Some(sizes)) = (&self.minimal_forts, &self.fort_sizes) {
            let _ = writeln!(out, "minimal forts {} (sizes {:?})", forts.len(), sizes);
        }
        let _ = writeln!(
            out,
            "well-failed  {} [{}]",
            yes(self.well_failed),
            self.method.name()
        );
        if let Some([a, b]) = &self.witnesses.forts {
            let _ = writeln!(out, "             minimal forts {a} and {b}");
        }
        let _ = writeln!(
            out,
            "well-forced  {} [{}]",
            yes(self.well_forced),
            self.method.name()
        );
        if let Some([a, b]) = &self.witnesses.zero_forcing_sets {
            let _ = writeln!(out, "             minimal zero forcing sets {a} and {b}");
        }
        if let Some(irr) = &self.irrelevant {
            let _ = writeln!(out, "irrelevant   fort {}", irr.fort);
            let _ = writeln!(out, "             zero forcing {}", irr.zero_forcing);
            let _ = writeln!(
                out,
                "             failed zero forcing {}",
                irr.failed_zero_forcing
            );
        }
        let rounds: Vec<String> = self
            .star_centers
            .iter()
            .enumerate()
            .map(|(i, c)| format!("B{i} {c}"))
            .collect();
        let rounds = if rounds.is_empty() {
            "none".to_string()
        } else {
            rounds.join(", ")
        };
        let _ = writeln!(out, "star centers {rounds}");
        if let Some(shape) = &self.tree_shape {
            let _ = writeln!(out, "tree shape   {}", shape_text(shape));
        }
        out
    }
}

pub fn shape_text(shape: &TreeShape) -> String {
    match shape {
        TreeShape::Path { n } => format!("path on {n} vertices"),
        TreeShape::GeneralizedStar { center, legs } => {
            format!("generalized star, center {center}, legs {legs:?}")
        }
        TreeShape::DoubleGeneralizedStar { centers, legs } => format!(
            "double generalized star, centers {} and {}, legs {:?} and {:?}",
            centers[0], centers[1], legs[0], legs[1]
        ),
        TreeShape::Star222 { center } => format!("star222, center {center}"),
        TreeShape::Other => "other".to_string(),
    }
}

pub fn set_lines(sets: &[VertexSet]) -> String {
    sets.iter().map(|s| format!("{s}\n")).collect()
}

//! The `fortress` command line.
//!
//! [`run`] parses an argument list and returns the exit code with the text
//! to print: 0 on success, 1 when an analysis fails (a verification suite
//! or a construction check), 2 for usage errors, unreadable input and
//! refused searches.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::fs;

use clap::Parser;
use fortress::classify::{is_well_failed_tree_fastpath, is_well_forced_tree_fastpath};
use fortress::families::{layered_star_tree, leafy_triangle_graph};
use fortress::forcing::SearchLimit;
use fortress::forts::{
    irrelevant_vertices, is_minimal_fort, minimal_forts, minimal_zero_forcing_sets,
    IrrelevanceKind, ZfsMethod,
};
use fortress::graph6::{parse_graph6, to_graph6};
use fortress::structure::{
    adjusted_fort, adjusted_pgs_fort, fort_spanning_path, has_double_pendant, is_leafy,
    leaf_to_leaf_fort, leg_to_leaf, pendent_generalized_stars, standard_path_fort,
    standard_two_leg_fort, star_centers, tree_shape, PathEnd,
};
use fortress::verify::{verify_corpus, Suite, VerifyOptions};
use fortress::{Error, FamilySpec, Graph, VertexSet};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    Cli, Command, ConstructKind, EndArg, FamilyName, GraphArgs, KindArg, VerifyArgs, ZfsMethodArg,
};
use crate::report::{set_lines, shape_text, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ANALYSIS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Analysis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Disagreement(_) => Failure::Analysis(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(out) => (EXIT_OK, out),
        Err(Failure::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Analysis(msg)) => (EXIT_ANALYSIS, msg),
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Classify(a) => classify_cmd(&a),
        Command::Forts(a) => forts_cmd(&a),
        Command::Zfs { graph, method } => zfs_cmd(&graph, method),
        Command::Irrelevant { graph, kind } => irrelevant_cmd(&graph, kind),
        Command::Tree(a) => tree_cmd(&a),
        Command::Construct {
            graph,
            kind,
            leaves,
            end,
            fort,
            through,
        } => construct_cmd(&graph, kind, &leaves, end, &fort, through),
        Command::Verify(a) => verify_cmd(&a),
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Reads the graph named by exactly one of `--g6`, `--edges`, `--family`.
pub fn read_graph(a: &GraphArgs) -> fortress::Result<Graph> {
    let src = &a.source;
    if let Some(text) = &src.g6 {
        return parse_graph6(text);
    }
    if let Some(path) = &src.edges {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::EdgeList(format!("{}: {e}", path.display())))?;
        return Graph::parse_edge_list(&text);
    }
    let family = src.family.expect("clap enforces one graph source");
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidFamily(format!("--family {family:?} needs --{flag}")))
    };
    let spec = match family {
        FamilyName::Path => FamilySpec::Path(need(a.n, "n")?),
        FamilyName::Cycle => FamilySpec::Cycle(need(a.n, "n")?),
        FamilyName::Complete => FamilySpec::Complete(need(a.n, "n")?),
        FamilyName::CompleteBipartite => {
            FamilySpec::CompleteBipartite(need(a.m, "m")?, need(a.n, "n")?)
        }
        FamilyName::Star => FamilySpec::Star(need(a.n, "n")?),
        FamilyName::GeneralizedStar => FamilySpec::GeneralizedStar(a.legs.clone()),
        FamilyName::DoubleGeneralizedStar => {
            FamilySpec::DoubleGeneralizedStar(a.legs.clone(), a.legs2.clone())
        }
        FamilyName::Star222 => FamilySpec::Star222,
        FamilyName::Petersen => FamilySpec::Petersen,
        FamilyName::LayeredStarTree => return Ok(layered_star_tree()),
        FamilyName::LeafyTriangle => return Ok(leafy_triangle_graph()),
    };
    spec.generate()
}

fn limit(a: &GraphArgs) -> SearchLimit {
    SearchLimit::new(a.output.max_exact)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Renders in the requested mode; DOT highlights `highlight`.
fn emit<T: Serialize>(
    a: &GraphArgs,
    g: &Graph,
    json: &T,
    text: impl FnOnce() -> String,
    highlight: Option<&VertexSet>,
) -> String {
    if a.output.dot {
        g.to_dot(highlight)
    } else if a.output.json {
        to_json(json)
    } else {
        text()
    }
}

fn classify_cmd(a: &GraphArgs) -> Outcome {
    let g = read_graph(a)?;
    let report = Report::build(&g, limit(a))?;
    let highlight = report
        .minimal_forts
        .as_ref()
        .and_then(|f| f.first().cloned());
    Ok(emit(
        a,
        &g,
        &report,
        || report.to_text(),
        highlight.as_ref(),
    ))
}

fn forts_cmd(a: &GraphArgs) -> Outcome {
    let g = read_graph(a)?;
    let r = minimal_forts(&g, limit(a))?;
    let json = json!({
        "graph": to_graph6(&g)?,
        "n": g.n(),
        "minimal_forts": r.minimal_forts,
        "fort_sizes": r.sizes(),
        "z_number": r.z_number,
        "f_number": r.f_number,
    });
    let text = || {
        format!(
            "{} minimal forts (sizes {:?}), Z = {}, F = {}\n{}",
            r.minimal_forts.len(),
            r.sizes(),
            r.z_number,
            r.f_number,
            set_lines(&r.minimal_forts)
        )
    };
    Ok(emit(a, &g, &json, text, r.minimal_forts.first()))
}

fn zfs_cmd(a: &GraphArgs, method: ZfsMethodArg) -> Outcome {
    let g = read_graph(a)?;
    let (m, name) = match method {
        ZfsMethodArg::Direct => (ZfsMethod::Direct, "direct"),
        ZfsMethodArg::Cover => (ZfsMethod::Cover, "cover"),
    };
    let sets = minimal_zero_forcing_sets(&g, m, limit(a))?;
    let mut sizes: Vec<usize> = sets.iter().map(VertexSet::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let json = json!({
        "graph": to_graph6(&g)?,
        "method": name,
        "minimal_zero_forcing_sets": sets,
        "sizes": sizes,
    });
    let text = || {
        format!(
            "{} minimal zero forcing sets (sizes {:?})\n{}",
            sets.len(),
            sizes,
            set_lines(&sets)
        )
    };
    Ok(emit(a, &g, &json, text, sets.first()))
}

fn irrelevant_cmd(a: &GraphArgs, kind: Option<KindArg>) -> Outcome {
    let g = read_graph(a)?;
    let kinds: Vec<IrrelevanceKind> = match kind {
        None => IrrelevanceKind::ALL.to_vec(),
        Some(KindArg::Fort) => vec![IrrelevanceKind::Fort],
        Some(KindArg::ZeroForcing) => vec![IrrelevanceKind::ZeroForcing],
        Some(KindArg::FailedZeroForcing) => vec![IrrelevanceKind::FailedZeroForcing],
    };
    let mut map = serde_json::Map::new();
    map.insert("graph".into(), to_graph6(&g)?.into());
    let mut text = String::new();
    let mut first = None;
    for k in kinds {
        let set = irrelevant_vertices(&g, k, limit(a))?;
        text.push_str(&format!("{:<20} {set}\n", k.name()));
        map.insert(
            k.name().into(),
            serde_json::to_value(&set).expect("serializable"),
        );
        first.get_or_insert(set);
    }
    Ok(emit(a, &g, &map, || text, first.as_ref()))
}

fn tree_cmd(a: &GraphArgs) -> Outcome {
    let t = read_graph(a)?;
    let shape = tree_shape(&t)?;
    let d = star_centers(&t);
    let stars = pendent_generalized_stars(&t)?;
    let well_failed = is_well_failed_tree_fastpath(&t)?;
    let well_forced = is_well_forced_tree_fastpath(&t)?;
    let rounds: Vec<_> = d
        .layers
        .iter()
        .map(|l| json!({ "centers": l.centers, "removed": l.removed }))
        .collect();
    let json = json!({
        "graph": to_graph6(&t)?,
        "n": t.n(),
        "tree_shape": shape,
        "leafy": is_leafy(&t),
        "double_pendant": has_double_pendant(&t),
        "star_rounds": rounds,
        "star_centers": d.all_centers,
        "residual": d.residual,
        "pendent_generalized_stars": stars,
        "well_failed": well_failed,
        "well_forced": well_forced,
    });
    let text = || {
        let mut s = format!("shape        {}\n", shape_text(&shape));
        s.push_str(&format!("leafy        {}\n", is_leafy(&t)));
        for (i, l) in d.layers.iter().enumerate() {
            s.push_str(&format!(
                "round {i}      centers {} removed {}\n",
                l.centers, l.removed
            ));
        }
        s.push_str(&format!("residual     {}\n", d.residual));
        for r in &stars {
            let legs: Vec<&Vec<usize>> = r.legs.iter().map(|l| &l.vertices).collect();
            s.push_str(&format!("pendent star center {} legs {legs:?}\n", r.center));
        }
        s.push_str(&format!(
            "well-failed  {well_failed}\nwell-forced  {well_forced}\n"
        ));
        s
    };
    Ok(emit(a, &t, &json, text, Some(&d.all_centers)))
}

fn two(values: &[usize], flag: &str) -> std::result::Result<(usize, usize), Failure> {
    match values {
        [x, y] => Ok((*x, *y)),
        _ => Err(usage(format!(
            "--{flag} takes exactly two comma-separated vertices"
        ))),
    }
}

fn construct_cmd(
    a: &GraphArgs,
    kind: ConstructKind,
    leaves: &[usize],
    end: EndArg,
    fort: &[usize],
    through: Option<usize>,
) -> Outcome {
    let t = read_graph(a)?;
    let g6 = to_graph6(&t)?;
    if kind == ConstructKind::SpanningPath {
        let x = through.ok_or_else(|| usage("spanning-path needs --through"))?;
        if let Some(&bad) = fort.iter().find(|&&v| v >= t.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: t.n(),
            }
            .into());
        }
        let w = VertexSet::from_members(t.n(), fort.iter().copied());
        let path = fort_spanning_path(&t, &w, x)?;
        let json = json!({ "graph": g6, "fort": w, "through": x, "path": path });
        let text = || format!("{path:?}\n");
        return Ok(emit(a, &t, &json, text, Some(&w)));
    }
    let (name, w) = match kind {
        ConstructKind::Path => {
            let e = match end {
                EndArg::Low => PathEnd::Low,
                EndArg::High => PathEnd::High,
            };
            ("path", standard_path_fort(&t, e)?)
        }
        ConstructKind::TwoLeg => {
            let (x, y) = two(leaves, "leaves")?;
            let (lx, ly) = (leg_to_leaf(&t, x)?, leg_to_leaf(&t, y)?);
            ("two-leg", standard_two_leg_fort(&t, &lx, &ly)?)
        }
        ConstructKind::Adjusted => ("adjusted", adjusted_fort(&t)?),
        ConstructKind::AdjustedPgs => ("adjusted-pgs", adjusted_pgs_fort(&t)?),
        ConstructKind::LeafToLeaf => {
            let (x, y) = two(leaves, "leaves")?;
            ("leaf-to-leaf", leaf_to_leaf_fort(&t, x, y)?)
        }
        ConstructKind::SpanningPath => unreachable!("handled above"),
    };
    let minimal = is_minimal_fort(&t, &w);
    let json = json!({ "graph": g6, "kind": name, "fort": w, "size": w.len(), "minimal": minimal });
    let text = || {
        format!(
            "{name} fort {w} ({} vertices, minimal: {minimal})\n",
            w.len()
        )
    };
    let out = emit(a, &t, &json, text, Some(&w));
    if minimal {
        Ok(out)
    } else {
        Err(Failure::Analysis(out))
    }
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let suites = if a.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suites
            .iter()
            .map(|s| s.parse::<Suite>())
            .collect::<fortress::Result<Vec<_>>>()?
    };
    let opts = VerifyOptions {
        trees_max: a.trees_max,
        random_trees: a.random_trees,
        random_tree_max: a.random_tree_max,
        random_graphs: a.random_graphs,
        random_graph_max: a.random_graph_max,
        constructions: a.constructions,
        seed: a.seed,
        limit: SearchLimit::new(a.max_exact),
        suites,
        ..VerifyOptions::default()
    };
    if a.jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let report = match a.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(|| verify_corpus(&opts))?,
        None => verify_corpus(&opts)?,
    };
    let out = if a.json {
        to_json(&report)
    } else {
        report.to_string()
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Analysis(out))
    }
}

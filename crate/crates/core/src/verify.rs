//! Corpus verification: each structural theorem is checked against exact
//! computation on exhaustive and seeded random graph collections.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::brute;
use crate::classify::{classify, is_well_failed_tree_fastpath, is_well_forced_tree_fastpath};
use crate::error::{Error, Result};
use crate::families::{layered_star_tree, leafy_triangle_graph, FamilySpec};
use crate::forcing::{
    failed_zero_forcing_number, for_each_k_subset, zero_forcing_number, BitGraph, SearchLimit,
};
use crate::forts::{
    irrelevant_vertices, is_minimal_fort, minimal_fort_list, minimal_forts,
    minimal_zero_forcing_sets, FortReport, IrrelevanceKind, ZfsMethod,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::structure::{
    adjusted_fort, adjusted_pgs_fort, fort_spanning_path, has_double_pendant,
    is_fort_spanning_path, is_leafy, leaf_to_leaf_fort, pendent_generalized_stars, pendent_legs,
    standard_two_leg_fort, star_centers, tree_shape, TreeShape,
};
use crate::trees::{enumerate_trees, random_tree};
use crate::vertex_set::VertexSet;

/// Number of unlabelled trees on `n` vertices, indexed by `n`.
pub const TREE_COUNTS: [usize; 11] = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

/// Largest order at which the definitional oracle in [`brute`] is run.
pub const BRUTE_CHECK_ORDER: usize = 10;

/// Equivalence of failed, stalled and fort complements is checked up to here.
pub const EQUIVALENCE_ORDER: usize = 7;

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    PathLaw,
    CycleLaw,
    Petersen,
    TreeTheorem,
    Equivalence,
    Irrelevance,
    CoverDuality,
    ParameterIdentity,
    Constructions,
    FailedIrrelevance,
    Families,
    LayeredTree,
    WellFailedForms,
    WellForcedTrees,
    WellForcedCorollary,
    LeafyGraphs,
    DoublePendantFree,
    FortSizeBound,
    StarRemoval,
    SpanningPaths,
    PendentStars,
    Bruteforce,
}

impl Suite {
    pub const ALL: [Suite; 22] = [
        Suite::PathLaw,
        Suite::CycleLaw,
        Suite::Petersen,
        Suite::TreeTheorem,
        Suite::Equivalence,
        Suite::Irrelevance,
        Suite::CoverDuality,
        Suite::ParameterIdentity,
        Suite::Constructions,
        Suite::FailedIrrelevance,
        Suite::Families,
        Suite::LayeredTree,
        Suite::WellFailedForms,
        Suite::WellForcedTrees,
        Suite::WellForcedCorollary,
        Suite::LeafyGraphs,
        Suite::DoublePendantFree,
        Suite::FortSizeBound,
        Suite::StarRemoval,
        Suite::SpanningPaths,
        Suite::PendentStars,
        Suite::Bruteforce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PathLaw => "path_law",
            Suite::CycleLaw => "cycle_law",
            Suite::Petersen => "petersen",
            Suite::TreeTheorem => "tree_theorem",
            Suite::Equivalence => "equivalence",
            Suite::Irrelevance => "irrelevance",
            Suite::CoverDuality => "cover_duality",
            Suite::ParameterIdentity => "parameter_identity",
            Suite::Constructions => "constructions",
            Suite::FailedIrrelevance => "failed_irrelevance",
            Suite::Families => "families",
            Suite::LayeredTree => "layered_tree",
            Suite::WellFailedForms => "well_failed_forms",
            Suite::WellForcedTrees => "well_forced_trees",
            Suite::WellForcedCorollary => "well_forced_corollary",
            Suite::LeafyGraphs => "leafy_graphs",
            Suite::DoublePendantFree => "double_pendant_free",
            Suite::FortSizeBound => "fort_size_bound",
            Suite::StarRemoval => "star_removal",
            Suite::SpanningPaths => "spanning_paths",
            Suite::PendentStars => "pendent_stars",
            Suite::Bruteforce => "bruteforce",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::PathLaw => "P_n is well-failed iff n is 1, 2, 3, 4 or 6 (n <= 12)",
            Suite::CycleLaw => "C_n is well-failed iff n <= 5 or n = 7 (n <= 12)",
            Suite::Petersen => "Petersen graph: Z = 5, F = 6, all minimal forts of size 4",
            Suite::TreeTheorem => "tree rule agrees with exact search; tree counts per order",
            Suite::Equivalence => "maximal failed = maximal stalled = minimal fort complements",
            Suite::Irrelevance => "fort-irrelevant = zf-irrelevant, = star centers on trees",
            Suite::CoverDuality => "minimal zero forcing sets = minimal covers of minimal forts",
            Suite::ParameterIdentity => "F(G) = n - (smallest minimal fort size)",
            Suite::Constructions => "explicit fort constructions give minimal forts",
            Suite::FailedIrrelevance => "failed-zf-irrelevant vertices are path endpoints only",
            Suite::Families => "K_n and K_{m,n} are well-failed with minimal forts of size 2",
            Suite::LayeredTree => "layered star tree: star rounds, residual edge, well-forced",
            Suite::WellFailedForms => "equivalent forms of well-failed agree",
            Suite::WellForcedTrees => "star-removal rule for well-forced trees agrees with exact search",
            Suite::WellForcedCorollary => "well-failed trees other than paths and star222 are well-forced",
            Suite::LeafyGraphs => "leafy graphs are well-failed",
            Suite::DoublePendantFree => "without double pendants every tree vertex is in a minimal fort",
            Suite::FortSizeBound => "a minimal fort of a tree containing a vertex outside every double pendant has >= 3 vertices",
            Suite::StarRemoval => "fort-irrelevance survives a single star removal",
            Suite::SpanningPaths => "every minimal fort of a tree contains a spanning leaf-to-leaf path through each member",
            Suite::PendentStars => "trees without double pendants of other shapes have two pendent generalized stars",
            Suite::Bruteforce => "search kernels agree with the definitional oracle (n <= 10)",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Exhaustive trees on `1..=trees_max` vertices.
    pub trees_max: usize,
    pub random_trees: usize,
    pub random_tree_max: usize,
    pub random_graphs: usize,
    pub random_graph_max: usize,
    /// Random instances per construction.
    pub constructions: usize,
    pub construction_max: usize,
    pub leafy_graphs: usize,
    pub seed: u64,
    pub limit: SearchLimit,
    pub suites: Vec<Suite>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trees_max: 9,
            random_trees: 500,
            random_tree_max: 14,
            random_graphs: 200,
            random_graph_max: 7,
            constructions: 200,
            construction_max: 16,
            leafy_graphs: 100,
            seed: 0,
            limit: SearchLimit::default(),
            suites: Suite::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub label: String,
    pub graph: Graph,
}

impl Case {
    fn new(label: impl Into<String>, graph: Graph) -> Self {
        Case {
            label: label.into(),
            graph,
        }
    }

    fn family(spec: FamilySpec) -> Self {
        let graph = spec.generate().expect("valid family parameters");
        Case::new(spec.to_string(), graph)
    }
}

/// A separate deterministic random stream per corpus component.
fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(tag);
    rng
}

/// Every graph the suites run over.
#[derive(Clone, Debug)]
pub struct Corpus {
    /// Exhaustive trees, then seeded random trees.
    pub trees: Vec<Case>,
    /// Trees found per order by the exhaustive enumeration.
    pub tree_counts: Vec<(usize, usize)>,
    pub random_graphs: Vec<Case>,
    pub families: Vec<Case>,
}

impl Corpus {
    pub fn build(opts: &VerifyOptions) -> Result<Self> {
        let mut trees = Vec::new();
        let mut tree_counts = Vec::new();
        for n in 1..=opts.trees_max {
            let all = enumerate_trees(n)?;
            tree_counts.push((n, all.len()));
            for (i, t) in all.into_iter().enumerate() {
                trees.push(Case::new(format!("tree n={n} #{i}"), t));
            }
        }
        let mut rng = stream(opts.seed, 1);
        for i in 0..opts.random_trees {
            let n = rng.random_range(1..=opts.random_tree_max.max(1));
            trees.push(Case::new(
                format!("random tree #{i}"),
                random_tree(n, &mut rng),
            ));
        }
        let mut rng = stream(opts.seed, 2);
        let random_graphs = (0..opts.random_graphs)
            .map(|i| {
                let n = rng.random_range(1..=opts.random_graph_max.max(1));
                let p = rng.random_range(0.15..0.85);
                Case::new(format!("random graph #{i}"), random_graph(n, p, &mut rng))
            })
            .collect();
        Ok(Corpus {
            trees,
            tree_counts,
            random_graphs,
            families: family_corpus(),
        })
    }

    pub fn all(&self) -> impl Iterator<Item = &Case> {
        self.trees
            .iter()
            .chain(&self.random_graphs)
            .chain(&self.families)
    }

    pub fn len(&self) -> usize {
        self.trees.len() + self.random_graphs.len() + self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("edges in range")
}

/// The named families and fixtures included in every corpus.
pub fn family_corpus() -> Vec<Case> {
    let mut specs = Vec::new();
    specs.extend((1..=12).map(FamilySpec::Path));
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((1..=7).map(FamilySpec::Complete));
    for m in 1..=5 {
        specs.extend((m..=5).map(|n| FamilySpec::CompleteBipartite(m, n)));
    }
    specs.push(FamilySpec::Petersen);
    specs.push(FamilySpec::Star222);
    let mut cases: Vec<Case> = specs.into_iter().map(Case::family).collect();
    cases.push(Case::new("layered star tree", layered_star_tree()));
    cases.push(Case::new("leafy triangle graph", leafy_triangle_graph()));
    cases
}

/// A tree with no double pendants and at most `max_n` vertices: a random
/// tree whose surplus leaves at each vertex are each extended by one vertex.
pub fn random_double_pendant_free_tree<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> Graph {
    loop {
        let m = rng.random_range(2..=(max_n / 2).max(2));
        let t = random_tree(m, rng);
        let mut edges: Vec<(usize, usize)> = t.edges().collect();
        let mut n = m;
        for v in 0..m {
            for &u in t.pendant_neighbors(v).iter().skip(1) {
                edges.push((u, n));
                n += 1;
            }
        }
        if n <= max_n {
            let g = Graph::from_edge_list(n, &edges).expect("edges in range");
            debug_assert!(g.is_tree() && !has_double_pendant(&g));
            return g;
        }
    }
}

fn random_legs<R: Rng + ?Sized>(
    rng: &mut R,
    count: std::ops::RangeInclusive<usize>,
    len: std::ops::RangeInclusive<usize>,
) -> Vec<usize> {
    let k = rng.random_range(count);
    (0..k).map(|_| rng.random_range(len.clone())).collect()
}

/// A graph in which every vertex of degree at least two has two or more
/// pendant neighbors: a random core with pendants hung on every core vertex.
pub fn random_leafy_graph<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> Graph {
    loop {
        let k = rng.random_range(1..=5);
        let core = random_graph(k, 0.5, rng);
        let mut edges: Vec<(usize, usize)> = core.edges().collect();
        let mut n = k;
        for v in 0..k {
            for _ in 0..rng.random_range(2..=3) {
                edges.push((v, n));
                n += 1;
            }
        }
        if n <= max_n {
            return Graph::from_edge_list(n, &edges).expect("edges in range");
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Construction {
    TwoLeg { first: usize, second: usize },
    Adjusted,
    AdjustedPgs,
    LeafToLeaf { a: usize, b: usize },
}

struct Instance {
    case: Case,
    construction: Construction,
}

fn construction_instances(opts: &VerifyOptions) -> Vec<Instance> {
    let max_n = opts.construction_max;
    let count = opts.constructions;
    let mut out = Vec::new();

    let mut rng = stream(opts.seed, 3);
    while out.len() < count {
        let legs = random_legs(&mut rng, 3..=5, 1..=4);
        if 1 + legs.iter().sum::<usize>() > max_n {
            continue;
        }
        let mut pick: Vec<usize> = (0..legs.len()).collect();
        pick.shuffle(&mut rng);
        let case = Case::family(FamilySpec::GeneralizedStar(legs));
        let construction = Construction::TwoLeg {
            first: pick[0],
            second: pick[1],
        };
        out.push(Instance { case, construction });
    }

    let mut rng = stream(opts.seed, 4);
    while out.len() < 2 * count {
        let legs = random_legs(&mut rng, 3..=5, 2..=4);
        if legs.iter().sum::<usize>() < max_n {
            let case = Case::family(FamilySpec::GeneralizedStar(legs));
            out.push(Instance {
                case,
                construction: Construction::Adjusted,
            });
        }
    }

    let mut rng = stream(opts.seed, 5);
    while out.len() < 3 * count {
        let a = random_legs(&mut rng, 2..=3, 2..=3);
        let b = random_legs(&mut rng, 2..=3, 2..=3);
        if 2 + a.iter().chain(&b).sum::<usize>() <= max_n {
            let case = Case::family(FamilySpec::DoubleGeneralizedStar(a, b));
            out.push(Instance {
                case,
                construction: Construction::AdjustedPgs,
            });
        }
    }

    let mut rng = stream(opts.seed, 6);
    let mut i = 0;
    while out.len() < 4 * count {
        let t = random_double_pendant_free_tree(max_n, &mut rng);
        let mut leaves = t.leaves();
        if leaves.len() < 2 {
            continue;
        }
        leaves.shuffle(&mut rng);
        let case = Case::new(format!("double-pendant-free tree #{i}"), t);
        let construction = Construction::LeafToLeaf {
            a: leaves[0],
            b: leaves[1],
        };
        out.push(Instance { case, construction });
        i += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub label: String,
    /// Absent for failures not tied to a single graph.
    pub graph6: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub description: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// The first few failures, in corpus order.
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            description: suite.description(),
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), Counterexample>) {
        self.checked += 1;
        if let Err(c) = outcome {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub corpus_size: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|r| r.suite == suite)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "corpus: {} graphs, seed {}", self.corpus_size, self.seed)?;
        for r in &self.suites {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<22} {:>6} checked {:>4} failed  {}",
                r.suite.name(),
                r.checked,
                r.failed,
                r.description
            )?;
            for c in &r.counterexamples {
                let g6 = c.graph6.as_deref().unwrap_or("-");
                writeln!(f, "     {} [{g6}]: {}", c.label, c.detail)?;
            }
        }
        Ok(())
    }
}

pub fn verify_corpus(opts: &VerifyOptions) -> Result<VerifyReport> {
    let corpus = Corpus::build(opts)?;
    Ok(VerifyReport {
        seed: opts.seed,
        corpus_size: corpus.len(),
        suites: opts
            .suites
            .iter()
            .map(|&s| run_suite(s, &corpus, opts))
            .collect(),
    })
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn counterexample(case: &Case, detail: String) -> Counterexample {
    Counterexample {
        label: case.label.clone(),
        graph6: to_graph6(&case.graph).ok(),
        detail,
    }
}

/// Runs `check` over `items` (in parallel when enabled) and records the
/// outcomes in input order.
fn run_items<T, C, F>(report: &mut SuiteReport, items: &[T], case: C, check: F)
where
    T: Sync,
    C: Fn(&T) -> &Case + Sync,
    F: Fn(&T) -> Check + Sync,
{
    let eval = |item: &T| check(item).map_err(|d| counterexample(case(item), d));
    #[cfg(feature = "parallel")]
    let outcomes: Vec<_> = items.par_iter().map(eval).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<_> = items.iter().map(eval).collect();
    for o in outcomes {
        report.record(o);
    }
}

fn run_cases<'a>(
    report: &mut SuiteReport,
    cases: impl IntoIterator<Item = &'a Case>,
    check: impl Fn(&Graph) -> Check + Sync,
) {
    let cases: Vec<&Case> = cases.into_iter().collect();
    run_items(report, &cases, |c| c, |c| check(&c.graph));
}

fn err(e: Error) -> String {
    e.to_string()
}

fn exact(g: &Graph, limit: SearchLimit) -> std::result::Result<FortReport, String> {
    minimal_forts(g, limit).map_err(err)
}

fn masks(sets: &[VertexSet]) -> Vec<u64> {
    let mut m: Vec<u64> = sets.iter().map(|s| s.to_mask().expect("n <= 64")).collect();
    m.sort_unstable();
    m
}

fn all_same_size(masks: &[u64]) -> bool {
    masks
        .windows(2)
        .all(|w| w[0].count_ones() == w[1].count_ones())
}

/// `F(G)` straight from the definition: the largest set whose closure is
/// not everything.
fn failed_number_by_scan(g: &Graph, limit: SearchLimit) -> std::result::Result<usize, String> {
    limit.check(g.n()).map_err(err)?;
    let bg = BitGraph::new(g).ok_or("order above 64")?;
    let n = bg.n();
    for k in (0..n).rev() {
        let mut failed = false;
        for_each_k_subset(n, k, |s| {
            failed = bg.closure(s) != bg.full();
            !failed
        });
        if failed {
            return Ok(k);
        }
    }
    Err("null graph".into())
}

fn path_endpoints(g: &Graph) -> VertexSet {
    if g.n() == 1 {
        g.vertices()
    } else {
        VertexSet::from_members(g.n(), g.leaves())
    }
}

/// Leaves sharing their neighbor with another leaf.
fn double_pendant_vertices(t: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(t.n());
    for v in 0..t.n() {
        let p = t.pendant_neighbors(v);
        if p.len() >= 2 {
            for u in p {
                out.insert(u);
            }
        }
    }
    out
}

pub fn run_suite(suite: Suite, corpus: &Corpus, opts: &VerifyOptions) -> SuiteReport {
    let limit = opts.limit;
    let mut r = SuiteReport::new(suite);
    let small = |max: usize| corpus.all().filter(move |c| c.graph.n() <= max);
    match suite {
        Suite::PathLaw => {
            let cases: Vec<Case> = (1..=12)
                .map(|n| Case::family(FamilySpec::Path(n)))
                .collect();
            run_cases(&mut r, &cases, |g| {
                let expected = matches!(g.n(), 1 | 2 | 3 | 4 | 6);
                let got = classify(g, limit).map_err(err)?.well_failed;
                ensure(got == expected, || {
                    format!("well_failed = {got}, expected {expected}")
                })
            });
        }
        Suite::CycleLaw => {
            let cases: Vec<Case> = (3..=12)
                .map(|n| Case::family(FamilySpec::Cycle(n)))
                .collect();
            run_cases(&mut r, &cases, |g| {
                let expected = g.n() <= 5 || g.n() == 7;
                let got = classify(g, limit).map_err(err)?.well_failed;
                ensure(got == expected, || {
                    format!("well_failed = {got}, expected {expected}")
                })
            });
        }
        Suite::Petersen => {
            let cases = [Case::family(FamilySpec::Petersen)];
            run_cases(&mut r, &cases, |g| {
                let z = zero_forcing_number(g, limit).map_err(err)?;
                let f = failed_zero_forcing_number(g, limit).map_err(err)?;
                let report = exact(g, limit)?;
                let wf = classify(g, limit).map_err(err)?.well_failed;
                ensure(z == 5 && f == 6 && report.sizes() == [4] && wf, || {
                    format!(
                        "Z = {z}, F = {f}, fort sizes {:?}, well_failed = {wf}",
                        report.sizes()
                    )
                })
            });
        }
        Suite::TreeTheorem => {
            for &(n, count) in &corpus.tree_counts {
                let expected = TREE_COUNTS[n];
                r.record(if count == expected {
                    Ok(())
                } else {
                    Err(Counterexample {
                        label: format!("trees on {n} vertices"),
                        graph6: None,
                        detail: format!("enumerated {count}, expected {expected}"),
                    })
                });
            }
            run_cases(&mut r, &corpus.trees, |t| {
                let fast = is_well_failed_tree_fastpath(t).map_err(err)?;
                let report = exact(t, limit)?;
                let exact = report.min_size == report.max_size;
                ensure(fast == exact, || {
                    format!(
                        "tree rule says {fast}, minimal fort sizes {:?}",
                        report.sizes()
                    )
                })
            });
        }
        Suite::Equivalence => {
            run_cases(&mut r, small(EQUIVALENCE_ORDER), |g| {
                let failed = brute::maximal_failed_sets(g).map_err(err)?;
                let stalled = brute::maximal_stalled_sets(g).map_err(err)?;
                let full = g.vertices().to_mask().expect("small");
                let mut complements: Vec<u64> = brute::minimal_forts(g)
                    .map_err(err)?
                    .into_iter()
                    .map(|w| full & !w)
                    .collect();
                complements.sort_unstable();
                let fast = masks(&crate::forts::maximal_failed_sets(g, limit).map_err(err)?);
                ensure(
                    failed == stalled && stalled == complements && complements == fast,
                    || {
                        format!("failed {failed:?}, stalled {stalled:?}, complements {complements:?}, search {fast:?}")
                    },
                )
            });
        }
        Suite::Irrelevance => {
            run_cases(&mut r, corpus.all(), |g| {
                let fort = irrelevant_vertices(g, IrrelevanceKind::Fort, limit).map_err(err)?;
                let zf =
                    irrelevant_vertices(g, IrrelevanceKind::ZeroForcing, limit).map_err(err)?;
                ensure(fort == zf, || {
                    format!("fort-irrelevant {fort}, zf-irrelevant {zf}")
                })?;
                if g.is_tree() {
                    let centers = star_centers(g).all_centers;
                    ensure(fort == centers, || {
                        format!("irrelevant {fort}, star centers {centers}")
                    })?;
                }
                Ok(())
            });
        }
        Suite::CoverDuality => {
            run_cases(&mut r, corpus.all(), |g| {
                let direct = minimal_zero_forcing_sets(g, ZfsMethod::Direct, limit).map_err(err)?;
                let cover = minimal_zero_forcing_sets(g, ZfsMethod::Cover, limit).map_err(err)?;
                ensure(direct == cover, || {
                    format!("{} direct vs {} covers", direct.len(), cover.len())
                })
            });
        }
        Suite::ParameterIdentity => {
            run_cases(&mut r, corpus.all(), |g| {
                let f = failed_number_by_scan(g, limit)?;
                let report = exact(g, limit)?;
                let by_fort = failed_zero_forcing_number(g, limit).map_err(err)?;
                ensure(f == g.n() - report.min_size && f == by_fort, || {
                    format!(
                        "F = {f}, n - min fort = {}, smallest fort gives {by_fort}",
                        g.n() - report.min_size
                    )
                })
            });
        }
        Suite::Constructions => {
            let instances = construction_instances(opts);
            run_items(
                &mut r,
                &instances,
                |i| &i.case,
                |i| {
                    let t = &i.case.graph;
                    let w = match i.construction {
                        Construction::TwoLeg { first, second } => {
                            let legs = pendent_legs(t, 0);
                            standard_two_leg_fort(t, &legs[first], &legs[second])
                        }
                        Construction::Adjusted => adjusted_fort(t),
                        Construction::AdjustedPgs => adjusted_pgs_fort(t),
                        Construction::LeafToLeaf { a, b } => {
                            leaf_to_leaf_fort(t, a, b).and_then(|w| {
                                if w.contains(a) && w.contains(b) {
                                    Ok(w)
                                } else {
                                    Err(Error::Precondition(format!("{w} misses leaf {a} or {b}")))
                                }
                            })
                        }
                    }
                    .map_err(err)?;
                    ensure(is_minimal_fort(t, &w), || {
                        format!("{:?} produced {w}, not a minimal fort", i.construction)
                    })
                },
            );
        }
        Suite::FailedIrrelevance => {
            run_cases(&mut r, corpus.all(), |g| {
                let irr = irrelevant_vertices(g, IrrelevanceKind::FailedZeroForcing, limit)
                    .map_err(err)?;
                let expected = if g.is_path() {
                    path_endpoints(g)
                } else {
                    VertexSet::empty(g.n())
                };
                ensure(irr == expected, || {
                    format!("got {irr}, expected {expected}")
                })
            });
        }
        Suite::Families => {
            let mut pairs = Vec::new();
            for n in 2..=7 {
                pairs.push((Case::family(FamilySpec::Complete(n)), true));
            }
            for m in 1..=5 {
                for n in m..=5 {
                    pairs.push((Case::family(FamilySpec::CompleteBipartite(m, n)), m >= 2));
                }
            }
            pairs.push((Case::family(FamilySpec::Petersen), false));
            run_items(
                &mut r,
                &pairs,
                |p| &p.0,
                |(case, pairs_only)| {
                    let g = &case.graph;
                    let wf = classify(g, limit).map_err(err)?.well_failed;
                    ensure(wf, || "not well-failed".into())?;
                    if *pairs_only {
                        let sizes = exact(g, limit)?.sizes();
                        ensure(sizes == [2], || format!("minimal fort sizes {sizes:?}"))?;
                    }
                    Ok(())
                },
            );
        }
        Suite::LayeredTree => {
            let cases = [Case::new("layered star tree", layered_star_tree())];
            run_cases(&mut r, &cases, |t| {
                let d = star_centers(t);
                let layers: Vec<Vec<usize>> = d.layers.iter().map(|l| l.centers.to_vec()).collect();
                ensure(layers == [vec![2, 8, 14], vec![4, 12]], || {
                    format!("star rounds {layers:?}")
                })?;
                let residual = d.residual.to_vec();
                ensure(residual == [5, 6] && t.has_edge(5, 6), || {
                    format!("residual {residual:?}")
                })?;
                let c = classify(t, limit).map_err(err)?;
                ensure(c.well_forced, || "not well-forced".into())
            });
        }
        Suite::WellFailedForms => {
            run_cases(&mut r, corpus.all(), |g| {
                let report = exact(g, limit)?;
                let by_sizes = report.min_size == report.max_size;
                let f = failed_number_by_scan(g, limit)?;
                let by_f = g.n() - f == report.max_size;
                let classified = classify(g, limit).map_err(err)?.well_failed;
                ensure(by_sizes == by_f && by_f == classified, || {
                    format!("sizes {by_sizes}, n - F {by_f}, classify {classified}")
                })?;
                if g.n() <= BRUTE_CHECK_ORDER {
                    let maximal = brute::maximal_failed_sets(g).map_err(err)?;
                    let by_def = all_same_size(&maximal);
                    ensure(by_def == by_sizes, || format!("definition gives {by_def}"))?;
                }
                Ok(())
            });
        }
        Suite::WellForcedTrees => {
            run_cases(&mut r, &corpus.trees, |t| {
                let fast = is_well_forced_tree_fastpath(t).map_err(err)?;
                let report = exact(t, limit)?;
                let exact = all_same_size(&masks(&report.minimal_zero_forcing_sets));
                ensure(fast == exact, || {
                    format!("tree rule says {fast}, exact search {exact}")
                })?;
                if t.n() <= BRUTE_CHECK_ORDER {
                    let by_def = all_same_size(&brute::minimal_zero_forcing_sets(t).map_err(err)?);
                    ensure(by_def == exact, || format!("definition gives {by_def}"))?;
                }
                Ok(())
            });
        }
        Suite::WellForcedCorollary => {
            run_cases(&mut r, &corpus.trees, |t| {
                let shape = tree_shape(t).map_err(err)?;
                let excluded = matches!(shape, TreeShape::Path { .. } | TreeShape::Star222 { .. });
                if excluded || !is_well_failed_tree_fastpath(t).map_err(err)? {
                    return Ok(());
                }
                let c = classify(t, limit).map_err(err)?;
                ensure(c.well_failed && c.well_forced, || format!("{c:?}"))
            });
        }
        Suite::LeafyGraphs => {
            let mut rng = stream(opts.seed, 7);
            let mut cases = vec![Case::new("leafy triangle graph", leafy_triangle_graph())];
            for i in 0..opts.leafy_graphs {
                let g = random_leafy_graph(opts.construction_max, &mut rng);
                cases.push(Case::new(format!("random leafy graph #{i}"), g));
            }
            run_cases(&mut r, &cases, |g| {
                ensure(is_leafy(g), || {
                    "generator produced a non-leafy graph".into()
                })?;
                let sizes = exact(g, limit)?.sizes();
                ensure(sizes.len() == 1, || format!("minimal fort sizes {sizes:?}"))
            });
        }
        Suite::DoublePendantFree => {
            let cases = corpus
                .trees
                .iter()
                .filter(|c| !has_double_pendant(&c.graph));
            run_cases(&mut r, cases, |t| {
                let irr = irrelevant_vertices(t, IrrelevanceKind::Fort, limit).map_err(err)?;
                ensure(irr.is_empty(), || {
                    format!("vertices {irr} are in no minimal fort")
                })
            });
        }
        Suite::FortSizeBound => {
            let cases = corpus.trees.iter().filter(|c| c.graph.n() >= 3);
            run_cases(&mut r, cases, |t| {
                let dp = double_pendant_vertices(t);
                for w in minimal_fort_list(t, limit).map_err(err)? {
                    ensure(w.is_subset(&dp) || w.len() >= 3, || {
                        format!("minimal fort {w}")
                    })?;
                }
                Ok(())
            });
        }
        Suite::StarRemoval => {
            run_cases(&mut r, &corpus.trees, |t| {
                let irr = irrelevant_vertices(t, IrrelevanceKind::Fort, limit).map_err(err)?;
                for v in 0..t.n() {
                    let pendants = t.pendant_neighbors(v);
                    if pendants.len() < 2 {
                        continue;
                    }
                    let mut keep = t.vertices();
                    keep.remove(v);
                    for u in pendants {
                        keep.remove(u);
                    }
                    if keep.is_empty() {
                        continue;
                    }
                    let (sub, old_of) = t.induced_subgraph(&keep);
                    let sub_irr =
                        irrelevant_vertices(&sub, IrrelevanceKind::Fort, limit).map_err(err)?;
                    for (i, &o) in old_of.iter().enumerate() {
                        ensure(sub_irr.contains(i) == irr.contains(o), || {
                            format!("removing the star at {v} changes vertex {o}")
                        })?;
                    }
                }
                Ok(())
            });
        }
        Suite::SpanningPaths => {
            let cases = corpus
                .trees
                .iter()
                .filter(|c| (2..=BRUTE_CHECK_ORDER).contains(&c.graph.n()));
            run_cases(&mut r, cases, |t| {
                for w in minimal_fort_list(t, limit).map_err(err)? {
                    for x in w.iter() {
                        let path = fort_spanning_path(t, &w, x).map_err(err)?;
                        ensure(is_fort_spanning_path(t, &w, x, &path), || {
                            format!("path {path:?} for fort {w} through {x}")
                        })?;
                    }
                }
                Ok(())
            });
        }
        Suite::PendentStars => {
            let cases = corpus
                .trees
                .iter()
                .filter(|c| !has_double_pendant(&c.graph));
            run_cases(&mut r, cases, |t| {
                if tree_shape(t).map_err(err)? != TreeShape::Other {
                    return Ok(());
                }
                let count = pendent_generalized_stars(t).map_err(err)?.len();
                ensure(count >= 2, || format!("{count} pendent generalized stars"))
            });
        }
        Suite::Bruteforce => {
            run_cases(&mut r, small(BRUTE_CHECK_ORDER), |g| {
                let fast = masks(&minimal_fort_list(g, limit).map_err(err)?);
                let def = brute::minimal_forts(g).map_err(err)?;
                ensure(fast == def, || format!("minimal forts {fast:?} vs {def:?}"))?;
                let z = zero_forcing_number(g, limit).map_err(err)?;
                let z_def = brute::zero_forcing_number(g).map_err(err)?;
                ensure(z == z_def, || format!("Z = {z} vs {z_def}"))?;
                let zfs =
                    masks(&minimal_zero_forcing_sets(g, ZfsMethod::Direct, limit).map_err(err)?);
                let zfs_def = brute::minimal_zero_forcing_sets(g).map_err(err)?;
                ensure(zfs == zfs_def, || "minimal zero forcing sets differ".into())?;
                let f_def = brute::failed_zero_forcing_number(g).map_err(err)?;
                let f = failed_zero_forcing_number(g, limit).map_err(err)?;
                ensure(f_def == Some(f), || format!("F = {f} vs {f_def:?}"))
            });
        }
    }
    r
}

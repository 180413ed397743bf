//! Exhaustive classification of generalized Halin graphs by curvature sign.
//!
//! Every rooted ordered tree on `n` vertices is generated (rootings and
//! embeddings over-count heavily; deduplication happens on the canonical
//! form of the finished graph). Each isomorphism class keeps the
//! representative built from the lexicographically least preorder code, is
//! optionally screened by [`prune_negative`], and otherwise gets an exact
//! curvature report.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::curvature::{curvature_report, CurvatureError, CurvatureReport};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::halin::{build_halin, is_halin, prune_negative, wheel, wheel_sub1, wheel_sub2, HalinGraph, PlaneTree};
use crate::rational::format_rational;

/// Largest order of a positively curved generalized Halin graph.
pub const THEOREM_BOUND: usize = 12;

/// Exact curvature evaluator plugged into the classification.
pub type CurvatureEngine = fn(&Graph) -> Result<CurvatureReport, CurvatureError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n_max must be ≥ {min}, got {got}")]
    NMaxTooSmall { got: usize, min: usize },
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Preorder child-count codes of every rooted ordered tree on `n` vertices,
/// in lexicographic order (Catalan(n−1) of them).
pub fn ordered_tree_codes(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, slots: usize, code: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = code.len();
        if i == n {
            if slots == 0 {
                out.push(code.clone());
            }
            return;
        }
        if slots == 0 {
            return;
        }
        let remaining_after = n - i - 1;
        // slots - 1 + c open positions must be fillable by the remaining vertices,
        // and must stay positive until the last vertex.
        for c in 0..=remaining_after {
            let open = slots - 1 + c;
            if open > remaining_after || (open == 0 && remaining_after > 0) {
                continue;
            }
            code.push(c);
            extend(n, open, code, out);
            code.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, 1, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

fn code_max_degree(code: &[usize]) -> usize {
    code.iter()
        .enumerate()
        .map(|(i, &c)| c + usize::from(i > 0))
        .max()
        .unwrap_or(0)
}

/// Every rooted ordered tree on `n ≥ 4` vertices with maximum degree ≥ 3.
pub fn rooted_plane_trees(n: usize) -> Vec<PlaneTree> {
    ordered_tree_codes(n)
        .into_iter()
        .filter(|c| code_max_degree(c) >= 3)
        .map(|c| PlaneTree::from_preorder_counts(&c).expect("generated code is a valid tree"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyLabel {
    Wheel(usize),
    WheelSub1(usize),
    WheelSub2(usize),
    /// 1-based index in (vertex count, canonical form) order.
    Sporadic(usize),
    /// Not a wheel family member and not among the known sporadic classes.
    Unlisted,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::Wheel(n) => write!(f, "W:{n}"),
            FamilyLabel::WheelSub1(n) => write!(f, "W1:{n}"),
            FamilyLabel::WheelSub2(n) => write!(f, "W2:{n}"),
            FamilyLabel::Sporadic(i) => write!(f, "sporadic:{i}"),
            FamilyLabel::Unlisted => f.write_str("unlisted"),
        }
    }
}

/// Wheel-family membership by canonical-form equality with the templates.
pub fn wheel_family(g: &Graph) -> Option<FamilyLabel> {
    let n = g.n();
    let form = canonical_form(g);
    let same = |h: Result<HalinGraph, _>| h.is_ok_and(|h| canonical_form(&h.graph) == form);
    if same(wheel(n)) {
        Some(FamilyLabel::Wheel(n))
    } else if same(wheel_sub1(n)) {
        Some(FamilyLabel::WheelSub1(n))
    } else if same(wheel_sub2(n)) {
        Some(FamilyLabel::WheelSub2(n))
    } else {
        None
    }
}

/// Family of `g`; sporadic indices refer to positions in `sporadics`, which
/// must be sorted by (vertex count, canonical form).
pub fn recognize_family(g: &Graph, sporadics: &[CanonicalForm]) -> FamilyLabel {
    if let Some(label) = wheel_family(g) {
        return label;
    }
    let form = canonical_form(g);
    sporadics
        .iter()
        .position(|s| *s == form)
        .map_or(FamilyLabel::Unlisted, |i| FamilyLabel::Sporadic(i + 1))
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    pub use_pruning: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Process trees in reverse generation order.
    pub reverse_order: bool,
    pub engine: CurvatureEngine,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            use_pruning: true,
            workers: None,
            reverse_order: false,
            engine: curvature_report,
        }
    }
}

/// One positively curved isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub canonical: CanonicalForm,
    /// Built from the least preorder code among the class's trees.
    pub representative: HalinGraph,
    /// Curvature of the canonically labeled graph (edge ids match `canonical`).
    pub report: CurvatureReport,
    pub family: FamilyLabel,
    pub is_halin: bool,
}

impl ClassRecord {
    pub fn n(&self) -> usize {
        self.representative.n()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilyCounts {
    pub wheel: usize,
    pub wheel_sub1: usize,
    pub wheel_sub2: usize,
    pub sporadic: usize,
}

impl fmt::Display for FamilyCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "W:{} W':{} W'':{} sporadic:{}",
            self.wheel, self.wheel_sub1, self.wheel_sub2, self.sporadic
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub n_max: usize,
    /// Positively curved classes sorted by (vertex count, canonical form).
    pub classes: Vec<ClassRecord>,
    pub family_counts: FamilyCounts,
    /// Positively curved classes per vertex count.
    pub positive_per_n: BTreeMap<usize, usize>,
    /// All generalized Halin isomorphism classes per vertex count.
    pub examined_per_n: BTreeMap<usize, usize>,
    /// Classes discarded by [`prune_negative`] before exact curvature.
    pub pruned_count: usize,
    /// A non-positive class per vertex count whose minimum curvature is exactly 0.
    pub zero_min_classes: Vec<(CanonicalForm, HalinGraph)>,
}

impl ClassificationResult {
    pub fn halin_only(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.iter().filter(|c| c.is_halin)
    }

    pub fn canonical_forms(&self) -> Vec<&CanonicalForm> {
        self.classes.iter().map(|c| &c.canonical).collect()
    }
}

/// Canonical form → least preorder code, for all generalized Halin graphs on `n` vertices.
fn classes_on(n: usize, reverse: bool) -> BTreeMap<CanonicalForm, Vec<usize>> {
    let mut codes: Vec<Vec<usize>> = ordered_tree_codes(n)
        .into_iter()
        .filter(|c| code_max_degree(c) >= 3)
        .collect();
    if reverse {
        codes.reverse();
    }
    let merged = codes
        .into_par_iter()
        .fold(HashMap::<CanonicalForm, Vec<usize>>::new, |mut acc, code| {
            let tree = PlaneTree::from_preorder_counts(&code).expect("generated code is a valid tree");
            let form = canonical_form(&build_halin(&tree).graph);
            match acc.get_mut(&form) {
                Some(best) if *best <= code => {}
                Some(best) => *best = code,
                None => {
                    acc.insert(form, code);
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (form, code) in b {
                match a.get_mut(&form) {
                    Some(best) if *best <= code => {}
                    Some(best) => *best = code,
                    None => {
                        a.insert(form, code);
                    }
                }
            }
            a
        });
    merged.into_iter().collect()
}

enum Outcome {
    Pruned,
    Rejected(Option<HalinGraph>),
    Positive(HalinGraph, CurvatureReport),
}

fn run(n_max: usize, opts: &EnumerateOptions) -> Result<ClassificationResult, EnumerateError> {
    let mut examined_per_n = BTreeMap::new();
    let mut positive_per_n = BTreeMap::new();
    let mut pruned_count = 0;
    let mut found: Vec<(CanonicalForm, HalinGraph, CurvatureReport)> = Vec::new();
    let mut zero_min_classes = Vec::new();

    for n in 4..=n_max {
        let classes = classes_on(n, opts.reverse_order);
        examined_per_n.insert(n, classes.len());
        let outcomes: Vec<(CanonicalForm, Outcome)> = classes
            .into_par_iter()
            .map(|(form, code)| {
                let tree = PlaneTree::from_preorder_counts(&code).expect("valid code");
                let h = build_halin(&tree);
                if opts.use_pruning && prune_negative(&h) {
                    return Ok((form, Outcome::Pruned));
                }
                let canon = form.to_graph().expect("canonical form decodes");
                let report = (opts.engine)(&canon)?;
                let outcome = if report.positively_curved {
                    Outcome::Positive(h, report)
                } else if num_traits::Zero::is_zero(&report.min_curvature) {
                    Outcome::Rejected(Some(h))
                } else {
                    Outcome::Rejected(None)
                };
                Ok((form, outcome))
            })
            .collect::<Result<_, EnumerateError>>()?;
        let mut positive = 0;
        for (form, outcome) in outcomes {
            match outcome {
                Outcome::Pruned => pruned_count += 1,
                Outcome::Rejected(Some(h)) => zero_min_classes.push((form, h)),
                Outcome::Rejected(None) => {}
                Outcome::Positive(h, report) => {
                    positive += 1;
                    found.push((form, h, report));
                }
            }
        }
        positive_per_n.insert(n, positive);
    }

    found.sort_by(|a, b| (a.1.n(), &a.0).cmp(&(b.1.n(), &b.0)));
    let labels: Vec<Option<FamilyLabel>> = found.par_iter().map(|(_, h, _)| wheel_family(&h.graph)).collect();
    let mut family_counts = FamilyCounts::default();
    let mut next_sporadic = 0;
    let classes = found
        .into_iter()
        .zip(labels)
        .map(|((canonical, representative, report), label)| {
            let family = label.unwrap_or_else(|| {
                next_sporadic += 1;
                FamilyLabel::Sporadic(next_sporadic)
            });
            match family {
                FamilyLabel::Wheel(_) => family_counts.wheel += 1,
                FamilyLabel::WheelSub1(_) => family_counts.wheel_sub1 += 1,
                FamilyLabel::WheelSub2(_) => family_counts.wheel_sub2 += 1,
                _ => family_counts.sporadic += 1,
            }
            ClassRecord {
                is_halin: is_halin(&representative),
                canonical,
                representative,
                report,
                family,
            }
        })
        .collect();

    Ok(ClassificationResult {
        n_max,
        classes,
        family_counts,
        positive_per_n,
        examined_per_n,
        pruned_count,
        zero_min_classes,
    })
}

/// Classifies all generalized Halin graphs on `4..=n_max` vertices.
pub fn enumerate_halin_with(
    n_max: usize,
    opts: &EnumerateOptions,
) -> Result<ClassificationResult, EnumerateError> {
    if n_max < 4 {
        return Err(EnumerateError::NMaxTooSmall { got: n_max, min: 4 });
    }
    match opts.workers {
        None => run(n_max, opts),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| EnumerateError::Pool(e.to_string()))?
            .install(|| run(n_max, opts)),
    }
}

pub fn enumerate_halin(n_max: usize, use_pruning: bool) -> Result<ClassificationResult, EnumerateError> {
    enumerate_halin_with(
        n_max,
        &EnumerateOptions {
            use_pruning,
            ..EnumerateOptions::default()
        },
    )
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub passed: bool,
    /// One line per failed check.
    pub failures: Vec<String>,
    pub family_counts: FamilyCounts,
    pub halin_only_count: usize,
    pub result: ClassificationResult,
}

impl TheoremReport {
    /// Human-readable summary listing every class with its minimum curvature.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.result.classes {
            out.push_str(&format!(
                "{:>2}  {:<12} {:<8} min {:<6} {}\n",
                c.n(),
                c.family.to_string(),
                if c.is_halin { "halin" } else { "general" },
                format_rational(&c.report.min_curvature),
                c.canonical
            ));
        }
        out.push_str(&format!("counts {}\n", self.family_counts));
        out.push_str(&format!("halin-only {}\n", self.halin_only_count));
        for f in &self.failures {
            out.push_str(&format!("FAIL {f}\n"));
        }
        out.push_str(if self.passed { "PASS\n" } else { "FAILED\n" });
        out
    }
}

fn check_range(
    failures: &mut Vec<String>,
    name: &str,
    got: Vec<usize>,
    want: std::ops::RangeInclusive<usize>,
) {
    let want: Vec<usize> = want.collect();
    if got != want {
        failures.push(format!("{name} orders {got:?}, expected {want:?}"));
    }
}

/// Checks the classification on `4..=n_max` (`n_max ≥ 12`) against the
/// expected list: `W_4..W_12`, `W'_5..W'_9`, `W''_6..W''_10`, eight sporadic
/// classes, nothing above 12 vertices, and eleven classes without degree-2
/// vertices (nine wheels and two sporadic).
pub fn verify_theorem_with(n_max: usize, opts: &EnumerateOptions) -> Result<TheoremReport, EnumerateError> {
    if n_max < THEOREM_BOUND {
        return Err(EnumerateError::NMaxTooSmall {
            got: n_max,
            min: THEOREM_BOUND,
        });
    }
    let result = enumerate_halin_with(n_max, opts)?;
    let mut failures = Vec::new();
    let within: Vec<&ClassRecord> = result.classes.iter().filter(|c| c.n() <= THEOREM_BOUND).collect();
    let orders = |pick: fn(&FamilyLabel) -> Option<usize>| -> Vec<usize> {
        within.iter().filter_map(|c| pick(&c.family)).collect()
    };
    check_range(&mut failures, "W", orders(|f| match f { FamilyLabel::Wheel(n) => Some(*n), _ => None }), 4..=12);
    check_range(&mut failures, "W'", orders(|f| match f { FamilyLabel::WheelSub1(n) => Some(*n), _ => None }), 5..=9);
    check_range(&mut failures, "W''", orders(|f| match f { FamilyLabel::WheelSub2(n) => Some(*n), _ => None }), 6..=10);
    let sporadic = within.iter().filter(|c| matches!(c.family, FamilyLabel::Sporadic(_))).count();
    if sporadic != 8 {
        failures.push(format!("{sporadic} sporadic classes, expected 8"));
    }
    if within.len() != 27 {
        failures.push(format!("{} classes with ≤ 12 vertices, expected 27", within.len()));
    }
    for (&n, &count) in result.positive_per_n.range(THEOREM_BOUND + 1..) {
        if count != 0 {
            failures.push(format!("{count} positively curved classes on {n} vertices, expected 0"));
        }
    }
    let halin_only_count = within.iter().filter(|c| c.is_halin).count();
    let halin_wheels = within.iter().filter(|c| c.is_halin && matches!(c.family, FamilyLabel::Wheel(_))).count();
    if halin_only_count != 11 || halin_wheels != 9 {
        failures.push(format!(
            "{halin_only_count} classes without degree-2 vertices ({halin_wheels} wheels), expected 11 (9 wheels)"
        ));
    }
    Ok(TheoremReport {
        passed: failures.is_empty(),
        failures,
        family_counts: result.family_counts.clone(),
        halin_only_count,
        result,
    })
}

pub fn verify_theorem(n_max: usize) -> Result<TheoremReport, EnumerateError> {
    verify_theorem_with(n_max, &EnumerateOptions::default())
}

#[derive(Serialize)]
struct ClassJson<'a> {
    canonical_graph6: &'a str,
    n: usize,
    family: String,
    is_halin: bool,
    min_curvature: String,
    edges: Vec<(usize, usize, String)>,
    degree_sequence: Vec<usize>,
    max_tree_degree: usize,
    tree_preorder_counts: Vec<usize>,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    n_max: usize,
    halin_only: bool,
    counts: &'a FamilyCounts,
    positive_per_n: &'a BTreeMap<usize, usize>,
    examined_per_n: &'a BTreeMap<usize, usize>,
    pruned_count: usize,
    classes: Vec<ClassJson<'a>>,
}

/// Deterministic JSON for a classification, optionally restricted to classes
/// without degree-2 vertices.
pub fn classification_json(result: &ClassificationResult, halin_only: bool) -> String {
    let classes = result
        .classes
        .iter()
        .filter(|c| !halin_only || c.is_halin)
        .map(|c| ClassJson {
            canonical_graph6: c.canonical.as_str(),
            n: c.n(),
            family: c.family.to_string(),
            is_halin: c.is_halin,
            min_curvature: format_rational(&c.report.min_curvature),
            edges: c
                .report
                .edges
                .iter()
                .map(|(e, k)| (e.x, e.y, format_rational(k)))
                .collect(),
            degree_sequence: c.representative.graph.degree_sequence(),
            max_tree_degree: c.representative.tree.max_degree(),
            tree_preorder_counts: c.representative.tree.preorder_counts(),
        })
        .collect();
    let doc = ResultJson {
        n_max: result.n_max,
        halin_only,
        counts: &result.family_counts,
        positive_per_n: &result.positive_per_n,
        examined_per_n: &result.examined_per_n,
        pruned_count: result.pruned_count,
        classes,
    };
    serde_json::to_string_pretty(&doc).expect("classification serializes")
}

//! Command-line runner: every subcommand produces a versioned JSON (or plain
//! text) report and an exit code of 0 (verified), 1 (refuted or mismatch) or
//! 2 (usage error).

use std::fs;
use std::time::Instant;

use biplanarity::biplanar::{
    biplanar_crossing_k9, crossing_le_1, planarize, refute_k9_certificate, thickness_at_most_2, ClaimedPair,
    CrossingDecision, Refutation, ThicknessDecision,
};
use biplanarity::enumeration::{
    enumerate_triangulations, find_biplanar_k8, is_maximal_planar, verify_theorem1_on, TriangulationCatalog,
};
use biplanarity::planarity::{planar, subdivision_oracle, MAX_ORACLE_VERTICES};
use biplanarity::theorems::{nu_upper_bound, theorem2_sweep};
use biplanarity::{is_planar, Graph, PlanarityResult};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20240229;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "biplanarity",
    version,
    about = "Exact planarity and biplanarity verifications"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Planarity of a graph6 graph, with an embedding or a Kuratowski subdivision.
    Planar { graph6: String },
    /// The complement of a graph6 graph and its planarity.
    Complement { graph6: String },
    /// Maximal planar graphs on n vertices (4..=9), one per isomorphism class.
    EnumerateTriangulations {
        n: usize,
        /// Also write the catalog, one graph6 per line, to this file.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Every 9-vertex maximal planar graph has a nonplanar complement.
    VerifyK9 {
        /// Read the 9-vertex catalog from this file instead of generating it.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// A maximal planar graph on 8 vertices with a planar complement.
    FindBiplanarK8,
    /// Whether a graph6 graph on at most 9 vertices splits into two planar graphs.
    Thickness2 { graph6: String },
    /// Whether a graph6 graph has a drawing with at most one crossing.
    CrossingLe1 { graph6: String },
    /// The biplanar crossing number of K9 with its witness.
    BiplanarCrossingK9,
    /// Check claimed biplanar splits of K9: a JSON file, or seeded random claims.
    RefuteK9Cert {
        /// File holding {"n", "first", "second"} rotation lists.
        path: Option<String>,
        /// Number of random claims to generate when no file is given.
        #[arg(long, default_value_t = 1000)]
        fuzz: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Certificates for every generated pentagon instance.
    Theorem2Sweep,
    /// Upper bound on the largest n for which K_n has thickness at most k.
    NuBound { k: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub value: Value,
    /// What backs the value: a certificate index or an oracle re-check.
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub certificates: Vec<Value>,
    pub elapsed_ms: u64,
}

impl RunReport {
    fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            verdicts: Vec::new(),
            certificates: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn verdict(&mut self, name: &str, value: impl Into<Value>, evidence: &str) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            value: value.into(),
            evidence: evidence.to_string(),
        });
    }

    fn certificate(&mut self, c: impl Serialize) -> usize {
        self.certificates
            .push(serde_json::to_value(c).expect("certificates serialize"));
        self.certificates.len() - 1
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| &v.value)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize"),
            Format::Text => {
                let mut out = format!("{} ({} ms)\n", self.command, self.elapsed_ms);
                for v in &self.verdicts {
                    out += &format!("  {} = {} [{}]\n", v.name, v.value, v.evidence);
                }
                out += &format!("  certificates: {}\n", self.certificates.len());
                out
            }
        }
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub code: i32,
    /// Rendered report on success or refutation, error text on usage errors.
    pub output: String,
    pub report: Option<RunReport>,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return RunOutcome {
                code,
                output: e.to_string(),
                report: None,
            };
        }
    };
    let start = Instant::now();
    match execute(&cli.command) {
        Ok((ok, mut report)) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            RunOutcome {
                code: if ok { 0 } else { 1 },
                output: report.render(cli.format),
                report: Some(report),
            }
        }
        Err(UsageError(msg)) => RunOutcome {
            code: 2,
            output: format!("error: {msg}"),
            report: None,
        },
    }
}

fn parse_graph(text: &str) -> Result<Graph, UsageError> {
    Graph::from_graph6(text.trim()).map_err(|e| UsageError(format!("malformed graph6 {text:?}: {e}")))
}

fn execute(command: &Command) -> Result<(bool, RunReport), UsageError> {
    match command {
        Command::Planar { graph6 } => {
            let g = parse_graph(graph6)?;
            let mut r = RunReport::new("planar", json!({ "graph6": graph6 }));
            let ok = planarity_verdict(&mut r, &g, "planar")?;
            Ok((ok, r))
        }
        Command::Complement { graph6 } => {
            let g = parse_graph(graph6)?;
            let c = g.complement();
            let mut r = RunReport::new("complement", json!({ "graph6": graph6 }));
            r.verdict("complement_graph6", c.to_graph6(), "direct");
            r.verdict("complement_edges", c.edge_count(), "direct");
            let ok = planarity_verdict(&mut r, &c, "complement_planar")?;
            Ok((ok, r))
        }
        Command::EnumerateTriangulations { n, catalog } => {
            let c = enumerate_triangulations(*n)?;
            let mut r = RunReport::new("enumerate-triangulations", json!({ "n": n, "catalog": catalog }));
            if let Some(path) = catalog {
                fs::write(path, c.to_lines())?;
            }
            let all_maximal = c.members().iter().all(is_maximal_planar);
            r.verdict("count", c.len(), "canonical forms, certificate 0");
            r.verdict("all_maximal_planar", all_maximal, "edge count and planarity re-check");
            r.certificate(c.members().iter().map(Graph::to_graph6).collect::<Vec<_>>());
            Ok((all_maximal, r))
        }
        Command::VerifyK9 { catalog } => {
            let loaded;
            let c = match catalog {
                Some(path) => {
                    loaded = TriangulationCatalog::from_lines(&fs::read_to_string(path)?)?;
                    if loaded.vertex_count() != 9 {
                        return Err(UsageError(format!("catalog {path} is not on 9 vertices")));
                    }
                    &loaded
                }
                None => enumerate_triangulations(9)?,
            };
            let mut r = RunReport::new("verify-k9", json!({ "catalog": catalog }));
            let count = c.len();
            let (nonplanar, failures) = match verify_theorem1_on(c) {
                Ok(report) => {
                    let n = report.entries.iter().filter(|e| e.witness_valid).count();
                    for entry in report.entries {
                        r.certificate(entry);
                    }
                    (n, Vec::new())
                }
                Err(e) => (0, vec![e.to_string()]),
            };
            r.verdict("triangulations", count, "canonical forms, re-validated");
            r.verdict(
                "nonplanar_complements",
                nonplanar,
                "subdivision witness per certificate",
            );
            r.verdict(
                "k9_biplanar",
                false,
                "every maximal planar first side has a nonplanar complement",
            );
            if !failures.is_empty() {
                r.verdict("failure", failures.join("; "), "planarity test");
            }
            Ok((failures.is_empty() && count == 50 && nonplanar == 50, r))
        }
        Command::FindBiplanarK8 => {
            let pair = find_biplanar_k8()?;
            let mut r = RunReport::new("find-biplanar-k8", json!({}));
            let valid = pair.validate().is_ok();
            let (a, b) = (pair.first().graph(), pair.second().graph());
            r.verdict("pair_valid", valid, "partition and Euler checks, certificate 0");
            r.verdict("total_edges", a.edge_count() + b.edge_count(), "certificate 0");
            r.verdict("first_edges", a.edge_count(), "certificate 0");
            r.verdict("second_edges", b.edge_count(), "certificate 0");
            let oracle = subdivision_oracle(a)?.is_none() && subdivision_oracle(b)?.is_none();
            r.verdict("sides_planar_by_oracle", oracle, "subdivision oracle");
            r.certificate(pair.to_json());
            Ok((valid && oracle && a.edge_count() + b.edge_count() == 28, r))
        }
        Command::Thickness2 { graph6 } => {
            let g = parse_graph(graph6)?;
            let decision = thickness_at_most_2(&g)?;
            let mut r = RunReport::new("thickness2", json!({ "graph6": graph6 }));
            r.verdict("biplanar", decision.is_biplanar(), "certificate 0");
            let ok = match decision {
                ThicknessDecision::AtMostTwo(pair) => {
                    let valid = pair.validate().is_ok();
                    r.verdict("pair_valid", valid, "partition and Euler checks");
                    r.certificate(pair.to_json());
                    valid
                }
                ThicknessDecision::MoreThanTwo(reason) => {
                    r.certificate(reason);
                    true
                }
            };
            Ok((ok, r))
        }
        Command::CrossingLe1 { graph6 } => {
            let g = parse_graph(graph6)?;
            let decision = crossing_le_1(&g)?;
            let mut r = RunReport::new("crossing-le1", json!({ "graph6": graph6 }));
            r.verdict(
                "at_most_one_crossing",
                decision != CrossingDecision::AtLeastTwo,
                "certificate 0",
            );
            let ok = match &decision {
                CrossingDecision::OneCrossing { first, second } => {
                    let recheck = planar(&planarize(&g, *first, *second)?);
                    r.verdict("planarization_planar", recheck, "planarity re-check");
                    recheck
                }
                _ => true,
            };
            r.certificate(decision);
            Ok((ok, r))
        }
        Command::BiplanarCrossingK9 => {
            let w = biplanar_crossing_k9()?;
            let mut r = RunReport::new("biplanar-crossing-k9", json!({}));
            let comp = w.triangulation.complement();
            let (e, f) = w.crossing;
            let upper = is_maximal_planar(&w.triangulation) && planar(&planarize(&comp, e, f)?);
            r.verdict("value", w.value, "certificate 0");
            r.verdict("upper_bound_witness_valid", upper, "planarization re-check");
            r.verdict(
                "lower_bound_triangulations",
                w.lower_bound_checked,
                "nonplanar complement witnesses",
            );
            r.certificate(&w);
            Ok((upper && w.value == 1, r))
        }
        Command::RefuteK9Cert { path, fuzz, seed } => {
            let claims: Vec<ClaimedPair> = match path {
                Some(p) => vec![serde_json::from_str(&fs::read_to_string(p)?)?],
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    (0..*fuzz).map(|_| random_claim(&mut rng)).collect()
                }
            };
            let inputs = match path {
                Some(p) => json!({ "path": p }),
                None => json!({ "fuzz": fuzz, "seed": seed }),
            };
            let mut r = RunReport::new("refute-k9-cert", inputs);
            let outcomes: Vec<Refutation> = claims.iter().map(refute_k9_certificate).collect();
            let accepted = outcomes.iter().filter(|o| !o.is_rejected()).count();
            r.verdict("claims", claims.len(), "input");
            r.verdict("rejected", claims.len() - accepted, "named violation per certificate");
            r.verdict("accepted", accepted, "named violation per certificate");
            for o in outcomes {
                r.certificate(o);
            }
            Ok((accepted == 0, r))
        }
        Command::Theorem2Sweep => {
            let s = theorem2_sweep()?;
            let mut r = RunReport::new("theorem2-sweep", json!({}));
            r.verdict("instances", s.instances, "generated family");
            r.verdict("zero_chords", s.zero_chords, "verified certificates");
            r.verdict("one_chord", s.one_chord, "verified certificates");
            r.verdict("two_chords", s.two_chords, "verified certificates");
            r.verdict("failures", s.failures.len(), "certificate check and planarity test");
            let ok = s.failures.is_empty();
            r.certificate(s);
            Ok((ok, r))
        }
        Command::NuBound { k } => {
            let value = nu_upper_bound(*k)?;
            let mut r = RunReport::new("nu-bound", json!({ "k": k }));
            let exceeds = value * (value - 1) / 2 > k * (3 * value - 6);
            r.verdict("value", value, "integer square root");
            r.verdict("edges_exceed_k_planar_graphs", exceeds, "edge count re-check");
            Ok((exceeds, r))
        }
    }
}

/// Adds a planarity verdict backed by a validated certificate, and by the
/// brute-force oracle when the graph is small enough.
fn planarity_verdict(r: &mut RunReport, g: &Graph, name: &str) -> Result<bool, UsageError> {
    let result = is_planar(g);
    let valid = match &result {
        PlanarityResult::Planar { embedding } => embedding.is_plane(),
        PlanarityResult::Nonplanar { subdivision } => subdivision.validate(g).is_ok(),
    };
    let index = r.certificate(&result);
    r.verdict(name, result.is_planar(), &format!("certificate {index}"));
    r.verdict(&format!("{name}_certificate_valid"), valid, "stand-alone validation");
    let mut agrees = true;
    if g.vertex_count() <= MAX_ORACLE_VERTICES {
        agrees = subdivision_oracle(g)?.is_none() == result.is_planar();
        r.verdict(&format!("{name}_oracle_agrees"), agrees, "subdivision oracle");
    }
    Ok(valid && agrees)
}

/// A random claimed split of `K9`: a random edge bipartition, each side
/// embedded when planar and given arbitrary rotations otherwise, with one
/// edge dropped from one claim in ten.
pub fn random_claim(rng: &mut impl Rng) -> ClaimedPair {
    let mut edges: Vec<(usize, usize)> = Graph::complete(9).edges().collect();
    edges.shuffle(rng);
    if rng.gen_ratio(1, 10) {
        edges.pop();
    }
    let split = rng.gen_range(8..=28).min(edges.len());
    let mut side = |es: &[(usize, usize)]| {
        let g = Graph::from_edges(9, es).expect("edges of K9");
        match is_planar(&g).into_embedding() {
            Some(e) => (0..9).map(|v| e.rotation(v).to_vec()).collect(),
            None => (0..9)
                .map(|v| {
                    let mut rot = g.neighbors(v).to_vec();
                    rot.shuffle(rng);
                    rot
                })
                .collect(),
        }
    };
    let first = side(&edges[..split]);
    let second = side(&edges[split..]);
    ClaimedPair { n: 9, first, second }
}

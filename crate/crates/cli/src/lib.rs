//! Argument handling and rendering for the `tsglab` binary. All domain work
//! happens in the `tsglab` library; this crate only parses, dispatches and
//! formats.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tsglab::classifier::{self, GroupId};
use tsglab::embedder::{self, check_edge_hypotheses, plan_embedding};
use tsglab::oracle::{self, VerificationReport};
use tsglab::perm::Permutation;
use tsglab::realizability;

pub const SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;
pub const SEED_ENV: &str = "TSGLAB_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "tsglab",
    version,
    about = "Topological symmetry groups of complete graphs K_{4r+3} in S^3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Output {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every group that is TSG+ of some embedding of K_n (n = 4r+3).
    Classify {
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether one group occurs for K_n, with the matching clause.
    Admits {
        n: usize,
        /// Group name: Z2, Z<p>, D<p>, Z<p>xZ<q>, A4, S4, A5.
        group: String,
        #[command(flatten)]
        out: Output,
    },
    /// Is an automorphism of K_n with this cycle structure realizable?
    CheckPerm {
        /// 1-indexed cycle notation, e.g. "(1 2 3)(4 5 6)".
        permutation: String,
        #[arg(long)]
        n: usize,
        /// Order of the inducing diffeomorphism (defaults to the permutation's order).
        #[arg(long)]
        order: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Run one of the lemma verifications.
    Verify {
        #[arg(value_enum)]
        lemma: Lemma,
        /// Point count (d2).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        q_max: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        /// Overrides TSGLAB_SEED; the default is 42.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Symbolic vertex embedding for an admitted (n, group), with the edge
    /// hypotheses checked.
    Plan {
        n: usize,
        group: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Orbits,
    D2,
    FixedVertex,
    Pq,
    #[value(name = "3cycle")]
    ThreeCycle,
}

/// Result of one invocation: exit status plus what goes to each stream.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: 0, stdout, stderr: String::new() }
    }

    fn negative(stdout: String) -> Self {
        Outcome { status: 1, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }

    fn with_status(mut self, status: u8) -> Self {
        self.status = status;
        self
    }
}

fn render_json(mut value: Value) -> String {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

/// Seed precedence: explicit flag, then `TSGLAB_SEED`, then 42.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, String> {
    match (flag, env) {
        (Some(seed), _) => Ok(seed),
        (None, Some(raw)) => raw
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_ENV}={raw:?} is not an unsigned integer")),
        (None, None) => Ok(DEFAULT_SEED),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// `progress` receives diagnostic lines from long-running verifications.
pub fn run<I, T>(args: I, seed_env: Option<&str>, progress: &(dyn Fn(String) + Sync)) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome { status: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    dispatch(cli.command, seed_env, progress)
}

fn dispatch(command: Command, seed_env: Option<&str>, progress: &(dyn Fn(String) + Sync)) -> Outcome {
    match command {
        Command::Classify { n, out } => classify(n, out),
        Command::Admits { n, group, out } => admits(n, &group, out),
        Command::CheckPerm { permutation, n, order, out } => check_perm(&permutation, n, order, out),
        Command::Verify { lemma, n, n_max, q_max, p, q, trials, seed, out } => {
            let seed = match resolve_seed(seed, seed_env) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(e),
            };
            let limits = Limits { n, n_max, q_max, p, q, trials, seed };
            verify(lemma, limits, out, progress)
        }
        Command::Plan { n, group, out } => plan(n, &group, out),
    }
}

fn classify(n: usize, out: Output) -> Outcome {
    let groups = match classifier::enumerate_tsg(n) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if out.json {
        return Outcome::ok(render_json(json!({ "n": n, "groups": groups })));
    }
    let names: Vec<String> = groups.iter().map(ToString::to_string).collect();
    Outcome::ok(format!("K_{n}: {} groups\n{}\n", groups.len(), names.join(" ")))
}

fn admits(n: usize, group: &str, out: Output) -> Outcome {
    let g: GroupId = match group.parse() {
        Ok(g) => g,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    let witness = match classifier::admits(n, g) {
        Ok(w) => w,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let obstruction = if g == GroupId::Dihedral(2) {
        classifier::d2_obstruction(n).ok()
    } else {
        None
    };
    let status = if witness.admitted { 0 } else { 1 };
    if out.json {
        let mut value = json!({
            "n": n,
            "group": g,
            "admitted": witness.admitted,
            "clause": witness.clause,
            "reason": witness.reason,
        });
        if let Some(o) = &obstruction {
            value["d2_obstruction"] = json!(o);
        }
        return Outcome::ok(render_json(value)).with_status(status);
    }
    let mut text = if witness.admitted {
        format!(
            "admitted: {g} on K_{n} via clause {} ({})\n",
            witness.clause.as_deref().unwrap_or("?"),
            witness.reason
        )
    } else {
        format!("rejected: {}\n", witness.reason)
    };
    if let Some(o) = obstruction {
        text.push_str(&o.render());
    }
    Outcome::ok(text).with_status(status)
}

fn check_perm(input: &str, n: usize, order: Option<u64>, out: Output) -> Outcome {
    let perm = match Permutation::parse(input, n) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let ct = perm.cycle_type();
    let m = order.unwrap_or_else(|| perm.order());
    let verdict = match realizability::check(&ct, m) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let status = if verdict.realizable { 0 } else { 1 };
    if out.json {
        return Outcome::ok(render_json(json!({
            "permutation": perm,
            "n": n,
            "order": m,
            "cycle_type": ct,
            "realizable": verdict.realizable,
            "condition": verdict.condition,
            "reason": verdict.reason,
        })))
        .with_status(status);
    }
    let text = match verdict.condition {
        Some(c) => format!("realizable via condition {c} ({ct}, order {m})\n"),
        None => format!("not realizable: {} ({ct}, order {m})\n", verdict.reason),
    };
    Outcome::ok(text).with_status(status)
}

struct Limits {
    n: Option<usize>,
    n_max: Option<usize>,
    q_max: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    trials: Option<u64>,
    seed: u64,
}

fn verify(lemma: Lemma, l: Limits, out: Output, progress: &(dyn Fn(String) + Sync)) -> Outcome {
    let pair = || -> Result<(usize, usize), String> {
        match (l.p, l.q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => Err("this lemma needs --p and --q".into()),
        }
    };
    progress(format!("verify {lemma:?}: running"));
    let result: Result<VerificationReport, String> = match lemma {
        Lemma::Orbits => oracle::verify_orbits_lemma(l.n_max.unwrap_or(40), l.trials.unwrap_or(10_000), l.seed)
            .map_err(|e| e.to_string()),
        Lemma::D2 => oracle::verify_d2_lemma(l.n.unwrap_or(7)).map_err(|e| e.to_string()),
        Lemma::FixedVertex => pair().and_then(|(p, q)| {
            oracle::verify_fixed_vertex_lemma(p, q, l.n_max.unwrap_or(63)).map_err(|e| e.to_string())
        }),
        Lemma::ThreeCycle => pair().and_then(|(p, q)| {
            oracle::verify_3cycle_consequences(p, q, l.n_max.unwrap_or(63)).map_err(|e| e.to_string())
        }),
        Lemma::Pq => oracle::verify_pq_lemma_with(l.q_max.unwrap_or(27), l.n_max.unwrap_or(63), progress)
            .map_err(|e| e.to_string()),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    progress(format!("verify {lemma:?}: done in {} ms", report.elapsed_ms));
    let status = if report.is_consistent() { 0 } else { 1 };
    if out.json {
        return Outcome::ok(render_json(json!(report))).with_status(status);
    }
    let mut text = format!(
        "lemma {}: {} ({} cases, {} counterexamples, {} ms)\n",
        report.lemma,
        report.verdict(),
        report.cases,
        report.counterexamples.len(),
        report.elapsed_ms
    );
    if let Some(seed) = report.seed {
        text.push_str(&format!("seed: {seed}\n"));
    }
    text.push_str(&format!("params: {}\n", report.params));
    for c in &report.counterexamples {
        text.push_str(&format!("counterexample: {c}\n"));
    }
    Outcome::ok(text).with_status(status)
}

fn plan(n: usize, group: &str, out: Output) -> Outcome {
    let g: GroupId = match group.parse() {
        Ok(g) => g,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    let plan = match plan_embedding(n, g) {
        Ok(p) => p,
        Err(embedder::EmbedError::NotAdmitted { reason, .. }) => {
            return if out.json {
                Outcome::negative(render_json(json!({ "n": n, "group": g, "admitted": false, "reason": reason })))
            } else {
                Outcome::negative(format!("rejected: {reason}\n"))
            };
        }
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let verdict = match check_edge_hypotheses(&plan) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let status = if verdict.pass { 0 } else { 1 };
    if out.json {
        let mut value = plan.to_json();
        value["hypotheses"] = json!(verdict);
        return Outcome::ok(render_json(value)).with_status(status);
    }
    let mut text = plan.render();
    text.push_str(&format!(
        "edge hypotheses: {}\n",
        if verdict.pass { "all satisfied" } else { "FAILED" }
    ));
    for (name, h) in [
        ("preamble", &verdict.preamble),
        ("(1)", &verdict.no_intersection_pair),
        ("(2)", &verdict.pairs_fixed_or_swapped),
        ("(3)", &verdict.invariant_arcs),
    ] {
        for w in &h.witnesses {
            text.push_str(&format!("  {name}: {w}\n"));
        }
    }
    Outcome::ok(text).with_status(status)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_precedence() {
        assert_eq!(resolve_seed(Some(5), Some("9")), Ok(5));
        assert_eq!(resolve_seed(None, Some("9")), Ok(9));
        assert_eq!(resolve_seed(None, None), Ok(42));
        assert!(resolve_seed(None, Some("x")).is_err());
    }

    #[test]
    fn schema_is_stamped() {
        let v: Value = serde_json::from_str(&render_json(json!({ "a": 1 }))).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["a"], 1);
    }
}

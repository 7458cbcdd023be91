use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use grprime::correspondence::CorrespondenceReport;
use grprime::finring::{is_prime_ring, RingExpr};
use grprime::grfilter::{FilterSpec, WitnessOutcome, DEFAULT_SEED};
use grprime::leavitt::{is_leavitt_prime, DirectedGraph, LeavittRing, Mt3};
use grprime::{Error, FiniteRing, GradedSpec, Limits};

mod output;

use output::Report;

/// Primeness and grading checks for finite rings, Leavitt path rings and
/// filter subrings of group rings.
#[derive(Parser, Debug)]
#[command(name = "grprime", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit stable key=value lines instead of the human report.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Largest ring order accepted.
    #[arg(long, global = true, default_value_t = Limits::default().max_order)]
    max_order: usize,
    /// Largest ideal lattice enumerated.
    #[arg(long, global = true, default_value_t = Limits::default().max_lattice)]
    max_lattice: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the ideal lattice of a ring.
    Ideals { ring: PathBuf },
    /// Decide primeness of a ring, or of the ideal generated by --ideal.
    Prime {
        ring: PathBuf,
        /// Comma-separated generators, e.g. `2,4`.
        #[arg(long, value_delimiter = ',')]
        ideal: Option<Vec<usize>>,
    },
    /// Classify a grading: strong, symmetric, ideally symmetric, nearly epsilon-strong.
    Classify { graded: PathBuf },
    /// Decide graded primeness and list the graded prime ideals.
    GradedPrime { graded: PathBuf },
    /// Check the ideal correspondences between S_e and S.
    Correspondence { graded: PathBuf },
    /// Decide primeness of a Leavitt path ring.
    Leavitt {
        graph: PathBuf,
        /// File holding the coefficient ring expression.
        #[arg(long)]
        coeff: PathBuf,
        /// Also check v αβ* w = 0 for a violating pair, with paths up to this length.
        #[arg(long)]
        orthogonality_depth: Option<usize>,
    },
    /// Validate, classify or probe a filter subring of a group ring.
    Filter {
        spec: PathBuf,
        #[arg(long, conflicts_with = "witness")]
        classify: bool,
        /// Run seeded witness searches on random pairs (filters over Z).
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 100, requires = "witness")]
        trials: usize,
        /// Degree bound; defaults to width(a) + width(b) + 1 per pair.
        #[arg(long, requires = "witness")]
        bound: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED, requires = "witness")]
        seed: u64,
        /// Largest support width of random elements.
        #[arg(long, default_value_t = 3, requires = "witness")]
        width: u64,
    },
}

fn read(path: &FsPath) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_ring(path: &FsPath, limits: Limits) -> Result<FiniteRing> {
    let text = read(path)?;
    let expr = RingExpr::parse(&text).with_context(|| format!("in {}", path.display()))?;
    Ok(expr.build(limits).with_context(|| format!("in {}", path.display()))?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn run(cli: Cli) -> Result<Report> {
    let limits = Limits {
        max_order: cli.global.max_order,
        max_lattice: cli.global.max_lattice,
    };
    let mut report = Report::default();
    match cli.command {
        Command::Ideals { ring } => {
            let r = load_ring(&ring, limits)?;
            let ideals = r.all_ideals()?;
            report.line(format!("ideals: {}", ideals.len()), [("ideals", ideals.len().to_string())]);
            for (k, i) in ideals.iter().enumerate() {
                report.line(format!("ideal {i}"), [(format!("ideal.{k}").as_str(), i.to_string())]);
            }
        }
        Command::Prime { ring, ideal } => {
            let r = load_ring(&ring, limits)?;
            match ideal {
                None => {
                    let p = is_prime_ring(&r)?;
                    report.line(format!("prime: {}", yes(p)), [("prime", yes(p).to_lowercase())]);
                }
                Some(gens) => {
                    let i = r.generate_ideal(&gens)?;
                    let p = grprime::finring::is_prime_ideal(&r, &i)?;
                    report.line(
                        format!("ideal {i}: prime: {}", yes(p)),
                        [("ideal", i.to_string()), ("prime", yes(p).to_lowercase())],
                    );
                }
            }
        }
        Command::Classify { graded } => {
            let s = GradedSpec::parse(&read(&graded)?)?.build(limits)?;
            let c = s.classify_grading()?;
            report.line(
                format!(
                    "strongly: {}, symmetrically: {}, ideally: {}, nearly-eps: {}",
                    yes(c.strongly),
                    yes(c.symmetrically),
                    yes(c.ideally_symmetrically),
                    yes(c.nearly_epsilon_strongly)
                ),
                [
                    ("strongly", yes(c.strongly).to_lowercase()),
                    ("symmetrically", yes(c.symmetrically).to_lowercase()),
                    ("ideally", yes(c.ideally_symmetrically).to_lowercase()),
                    ("nearly_eps", yes(c.nearly_epsilon_strongly).to_lowercase()),
                ],
            );
        }
        Command::GradedPrime { graded } => {
            let s = GradedSpec::parse(&read(&graded)?)?.build(limits)?;
            let p = s.is_graded_prime_ring()?;
            report.line(format!("graded prime: {}", yes(p)), [("graded_prime", yes(p).to_lowercase())]);
            let mut k = 0;
            for i in s.all_graded_ideals()? {
                if i.is_proper() && s.is_graded_prime_ideal(&i)? {
                    report.line(
                        format!("graded prime ideal {i}"),
                        [(format!("graded_prime_ideal.{k}").as_str(), i.to_string())],
                    );
                    k += 1;
                }
            }
        }
        Command::Correspondence { graded } => {
            let s = GradedSpec::parse(&read(&graded)?)?.build(limits)?;
            let first = s.verify_bijection_identity_generated()?;
            push_report(&mut report, "identity-generated", &first);
            match s.verify_bijection_ideally_symmetric() {
                Ok(second) => push_report(&mut report, "ideally-symmetric", &second),
                Err(Error::Hypothesis(why)) => report.line(
                    format!("ideally-symmetric: skipped ({why})"),
                    [("ideally_symmetric", "skipped".to_string())],
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Leavitt {
            graph,
            coeff,
            orthogonality_depth,
        } => {
            let g = DirectedGraph::parse(&read(&graph)?).with_context(|| format!("in {}", graph.display()))?;
            let r = load_ring(&coeff, limits)?;
            let verdict = is_leavitt_prime(&g, &r)?;
            let (mt3_text, mt3_key) = match &verdict.mt3 {
                Mt3::Satisfied(_) => ("PASS".to_string(), "pass".to_string()),
                Mt3::Violated(v, w) => (
                    format!("FAIL ({},{})", g.vertex_name(*v), g.vertex_name(*w)),
                    format!("fail,{},{}", g.vertex_name(*v), g.vertex_name(*w)),
                ),
            };
            report.line(
                format!("MT-3: {mt3_text}; prime: {}", yes(verdict.is_prime())),
                [
                    ("mt3", mt3_key),
                    ("coefficients_prime", yes(verdict.coefficients_prime).to_lowercase()),
                    ("prime", yes(verdict.is_prime()).to_lowercase()),
                ],
            );
            if let Some(depth) = orthogonality_depth {
                match verdict.mt3 {
                    Mt3::Violated(v, w) => {
                        let l = LeavittRing::new(g, r)?;
                        let ok = l.verify_corner_orthogonality(v, w, depth)?;
                        let verdict = if ok { "PASS" } else { "FAIL" };
                        report.line(
                            format!("orthogonality (depth {depth}): {verdict}"),
                            [("orthogonality", verdict.to_lowercase())],
                        );
                    }
                    Mt3::Satisfied(_) => report.line(
                        "orthogonality: not applicable (MT-3 holds)".to_string(),
                        [("orthogonality", "n/a".to_string())],
                    ),
                }
            }
        }
        Command::Filter {
            spec,
            classify,
            witness,
            trials,
            bound,
            seed,
            width,
        } => {
            let f = FilterSpec::parse(&read(&spec)?)?.build(limits)?;
            let valid = f.validate();
            report.line(
                format!("filter: {}", if valid { "VALID" } else { "INVALID" }),
                [("valid", yes(valid).to_lowercase())],
            );
            if !valid {
                return Ok(report);
            }
            if classify {
                let c = f.classify()?;
                let ideally = match c.ideally_symmetric {
                    Some(b) => yes(b).to_string(),
                    None => "UNKNOWN".to_string(),
                };
                let flags = [
                    ("strongly", yes(c.strongly).to_string()),
                    ("symmetric", yes(c.symmetric).to_string()),
                    ("inverse-equal", yes(c.inverse_equal).to_string()),
                    ("ideally", ideally),
                    ("nearly-eps", yes(c.nearly_eps).to_string()),
                    ("R-idempotent", yes(c.r_idempotent).to_string()),
                    ("R-fully-idempotent", yes(c.r_fully_idempotent).to_string()),
                ];
                let text = flags.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join(", ");
                let kv: Vec<(String, String)> = flags
                    .iter()
                    .map(|(k, v)| (k.replace('-', "_").to_lowercase(), v.to_lowercase()))
                    .collect();
                report.line(text, kv.iter().map(|(k, v)| (k.as_str(), v.clone())));
            }
            if witness {
                let z = f.z_ring()?;
                let mut found = 0;
                let list = match bound {
                    None => z.run_trials(trials, width, seed)?,
                    Some(b) => {
                        let mut t = z.run_trials(trials, width, seed)?;
                        for trial in &mut t {
                            trial.bound = b;
                            trial.outcome = z.witness_search(&trial.a, &trial.b, b)?;
                        }
                        t
                    }
                };
                for (k, t) in list.iter().enumerate() {
                    let outcome = match t.outcome {
                        WitnessOutcome::NotNeeded => "ab != 0".to_string(),
                        WitnessOutcome::Found { degree, coeff } => format!("s = {coeff}·x^{degree}"),
                        WitnessOutcome::NoneWithinBound => format!("no witness with |degree| <= {}", t.bound),
                    };
                    if t.outcome != WitnessOutcome::NoneWithinBound {
                        found += 1;
                    }
                    report.line(
                        format!("trial {}: a = {}; b = {}; {outcome}", k + 1, z.display(&t.a), z.display(&t.b)),
                        [(format!("trial.{}", k + 1).as_str(), outcome.clone())],
                    );
                }
                report.line(
                    format!("witnesses: {found}/{} (seed {seed})", list.len()),
                    [("witnesses", found.to_string()), ("trials", list.len().to_string()), ("seed", seed.to_string())],
                );
            }
            if !classify && !witness && matches!(f.group(), grprime::GradingGroup::Finite(_)) {
                let s = f.build_subring(limits)?;
                report.line(format!("order: {}", s.ring().order()), [("order", s.ring().order().to_string())]);
            }
        }
    }
    Ok(report)
}

fn push_report(report: &mut Report, section: &str, r: &CorrespondenceReport) {
    report.line(format!("{section}:"), std::iter::empty::<(&str, String)>());
    for c in &r.checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        report.line(
            format!("check {}: {verdict} ({})", c.name, c.details),
            [(format!("{section}.{}", c.name).as_str(), verdict.to_lowercase())],
        );
    }
    let all = if r.all_passed() { "PASS" } else { "FAIL" };
    report.line(format!("{section}: {all}"), [(format!("{section}.all").as_str(), all.to_lowercase())]);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let porcelain = cli.global.porcelain;
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render(porcelain));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}


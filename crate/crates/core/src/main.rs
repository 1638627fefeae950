use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use transversal::algebra::{self, SpecialKind};
use transversal::manifest::RunManifest;
use transversal::solver::{self, Guards};
use transversal::verify::{self, BoundId};
use transversal::{deficiency, hgfile, matching, probability, Error, Hypergraph};

#[derive(Parser)]
#[command(name = "transversal", version, about = "Transversals of linear uniform hypergraphs")]
struct Cli {
    /// Worker threads for independent instances and trials.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a hypergraph family member as `.hg` or DOT.
    Gen(GenArgs),
    /// Exact transversal number of a `.hg` file.
    Solve {
        file: PathBuf,
        /// Exhaustive subset scan instead of branch and bound.
        #[arg(long)]
        bruteforce: bool,
        /// Also list every minimum transversal.
        #[arg(long)]
        all: bool,
    },
    /// Deficiency of a 4-uniform `.hg` file.
    Defic { file: PathBuf },
    /// Dual-graph matching identity for a `.hg` file with maximum degree 2.
    Dual { file: PathBuf },
    #[command(subcommand)]
    Prob(ProbCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ag,
    Pg,
    Residual,
    Lk,
    #[value(name = "calF")]
    CalF,
    Special,
    FanoComplement,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Hg,
    Dot,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// Catalog name such as `H10` or `H14,5`.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_deg: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, required_if_eq("family", "random"))]
    seed: Option<u64>,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "hg")]
    format: Format,
}

#[derive(Subcommand)]
enum ProbCommand {
    /// Balanced-split bound and the threshold condition at one point.
    Bound {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: f64,
    },
    /// Least k in a window where the threshold condition holds.
    Threshold {
        #[arg(long, default_value_t = 2)]
        k_lo: u64,
        #[arg(long, default_value_t = 4000)]
        k_hi: u64,
        #[arg(long, default_value_t = 5.0)]
        coef: f64,
    },
    /// Maximum of the envelope function, plus its threshold for `--coef`.
    Envelope {
        #[arg(long)]
        coef: Option<f64>,
    },
    /// Random k-subsets of every line of PG(2, p).
    Shrink {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// τ profile of shrunk projective planes.
    Mc {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Property suite and deficiency identity for every shipped catalog entry.
    Catalog {
        /// Print a text table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Check a bound on every instance of a corpus.
    Bounds {
        /// Directory of `.hg` files, or `builtin` for seeded random instances.
        #[arg(long)]
        corpus: String,
        #[arg(long)]
        bound: BoundId,
        #[arg(long)]
        seed: Option<u64>,
        /// Size of the builtin corpus.
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Residual affine planes against `(n + m)/(q + 1)`.
    Residual {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        table: bool,
    },
}

/// Outcome of a command that did not error.
enum Outcome {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let manifest = RunManifest::new(std::env::args().skip(1).collect());
    match run(cli.command, manifest) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::GuardExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn env_usize(name: &str, default: usize) -> anyhow::Result<usize> {
    match std::env::var(name) {
        Ok(v) => v.parse().with_context(|| format!("{name}={v} is not a non-negative integer")),
        Err(_) => Ok(default),
    }
}

fn guards() -> anyhow::Result<Guards> {
    let d = Guards::default();
    Ok(Guards {
        bruteforce_n: env_usize("TRANSVERSAL_BRUTEFORCE_MAX_N", d.bruteforce_n)?,
        enumerate_n: env_usize("TRANSVERSAL_ENUM_MAX_N", d.enumerate_n)?,
        enumerate_tau: env_usize("TRANSVERSAL_ENUM_MAX_TAU", d.enumerate_tau)?,
    })
}

fn read_input(path: &Path, manifest: &mut RunManifest) -> anyhow::Result<Hypergraph> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    manifest.add_input(&path.display().to_string(), &bytes);
    let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    hgfile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn emit(mut body: Value, mut manifest: RunManifest, start: Instant) -> anyhow::Result<()> {
    manifest.elapsed_ms = start.elapsed().as_millis() as u64;
    body["manifest"] = serde_json::to_value(&manifest)?;
    write_stdout(&(serde_json::to_string_pretty(&body)? + "\n"))
}

/// A closed pipe downstream (`| head`) is not an error.
fn write_stdout(text: &str) -> anyhow::Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    }
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("--family {family} needs --{flag}"))
}

fn run(command: Command, mut manifest: RunManifest) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    match command {
        Command::Gen(args) => gen(args, manifest, start),
        Command::Solve { file, bruteforce, all } => {
            let h = read_input(&file, &mut manifest)?;
            let g = guards()?;
            let r = if bruteforce { solver::tau_bruteforce_with(&h, &g)? } else { solver::tau(&h) };
            let mut body = json!({
                "tau": r.tau,
                "witness": one_based(&r.witness),
                "nodes": r.nodes_explored,
                "method": r.method,
            });
            if all {
                let list = solver::enumerate_min_transversals_with(&h, &g)?;
                body["all"] = json!(list.iter().map(|t| one_based(t)).collect::<Vec<_>>());
            }
            body["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            emit(body, manifest, start)?;
            Ok(Outcome::Ok)
        }
        Command::Defic { file } => {
            let h = read_input(&file, &mut manifest)?;
            let max_n = env_usize("TRANSVERSAL_DEFIC_MAX_N", deficiency::DEFICIENCY_MAX_N)?;
            let d = deficiency::deficiency_visit(&h, max_n, &mut |_| {})?;
            let set: Vec<Value> = d
                .set
                .embeddings
                .iter()
                .map(|e| json!({"kind": e.kind.name(), "edges": one_based(&e.edge_indices)}))
                .collect();
            let body = json!({
                "value": d.value,
                "set": set,
                "estar": one_based(&d.estar),
                "partition_counts": d.counts,
                "nodes": d.nodes,
            });
            emit(body, manifest, start)?;
            Ok(Outcome::Ok)
        }
        Command::Dual { file } => {
            let h = read_input(&file, &mut manifest)?;
            let d = matching::check_dual_identity(&h)?;
            let ok = d.identity_holds;
            emit(serde_json::to_value(d)?, manifest, start)?;
            Ok(verdict(ok))
        }
        Command::Prob(p) => prob(p, manifest, start),
        Command::Verify(v) => verify_cmd(v, manifest, start),
    }
}

fn gen(args: GenArgs, mut manifest: RunManifest, start: Instant) -> anyhow::Result<Outcome> {
    let (h, label) = match args.family {
        Family::Ag => {
            let q = need(args.q, "q", "ag")?;
            (algebra::affine_plane(q)?, format!("AG(2,{q})"))
        }
        Family::Pg => {
            let q = need(args.q, "q", "pg")?;
            (algebra::projective_plane(q)?, format!("PG(2,{q})"))
        }
        Family::Residual => {
            let q = need(args.q, "q", "residual")?;
            let s = need(args.s, "s", "residual")?;
            (algebra::affine_residual(q, s)?, format!("AG(2,{q}) minus {s} collinear points"))
        }
        Family::Lk => {
            let k = need(args.k, "k", "lk")?;
            (algebra::l_k(k)?, format!("L_{k}"))
        }
        Family::CalF => {
            let i = need(args.i, "i", "calF")?;
            (algebra::family_f(i), format!("F_{i}"))
        }
        Family::Special => {
            let name = need(args.name, "name", "special")?;
            let kind: SpecialKind = name.parse()?;
            (algebra::special(kind)?, kind.name().to_string())
        }
        Family::FanoComplement => (algebra::fano_complement(), "complement of the Fano plane".to_string()),
        Family::Random => {
            let n = need(args.n, "n", "random")?;
            let k = need(args.k, "k", "random")?;
            let max_deg = need(args.max_deg, "max-deg", "random")?;
            let m = need(args.m, "m", "random")?;
            let seed = need(args.seed, "seed", "random")?;
            manifest.seeds.push(seed);
            let h = algebra::random_linear(n, k, max_deg, m, seed)?;
            (h, format!("random linear n={n} k={k} max_deg={max_deg} m={m} seed={seed}"))
        }
    };
    let text = match args.format {
        Format::Hg => hgfile::write(&h, Some(&label)),
        Format::Dot => hgfile::to_dot(&h),
    };
    match args.out {
        Some(path) => {
            std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
            let body = json!({"family": label, "n": h.n(), "m": h.m(), "out": path.display().to_string()});
            emit(body, manifest, start)?;
        }
        None => write_stdout(&text)?,
    }
    Ok(Outcome::Ok)
}

fn prob(command: ProbCommand, mut manifest: RunManifest, start: Instant) -> anyhow::Result<Outcome> {
    let body = match command {
        ProbCommand::Bound { k, n, c } => {
            let t = (c * (k as f64).ln() / k as f64 * n as f64).floor() as u64;
            let mut body = json!({
                "k": k,
                "n": n,
                "c": c,
                "t": t,
                "final_bound": probability::final_bound(k, n, c)?,
                "condition_holds": probability::check_condition(k, c, n),
            });
            // The exact product is only formed for small hosts.
            if n <= 2000 {
                let exact = probability::balanced_bound(k, n, t)?;
                body["balanced_bound"] = json!(exact.to_string());
                body["balanced_bound_f64"] = json!(probability::to_f64(&exact));
            }
            body
        }
        ProbCommand::Threshold { k_lo, k_hi, coef } => {
            serde_json::to_value(probability::threshold_scan_coef(k_lo, k_hi, coef)?)?
        }
        ProbCommand::Envelope { coef } => {
            let e = probability::envelope_maximum();
            let mut body = json!({"max": e.max, "argmax": e.argmax, "below_ln5": e.max < 5f64.ln()});
            if let Some(c) = coef {
                body["coef"] = json!(c);
                body["threshold"] = json!(probability::envelope_threshold(c));
            }
            body
        }
        ProbCommand::Shrink { p, k, seed, out } => {
            manifest.seeds.push(seed);
            let host = algebra::projective_plane(p)?;
            let h = probability::shrink(&host, k, seed)?;
            let mut body = json!({"p": p, "k": k, "seed": seed, "n": h.n(), "m": h.m()});
            let text = hgfile::write(&h, Some(&format!("PG(2,{p}) shrunk to {k} points per line, seed {seed}")));
            match out {
                Some(path) => {
                    std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                    body["out"] = json!(path.display().to_string());
                }
                None => body["hg"] = json!(text),
            }
            body
        }
        ProbCommand::Mc { p, trials, seed } => {
            manifest.seeds.push(seed);
            serde_json::to_value(probability::mc_tau_profile(p, trials, seed)?)?
        }
    };
    emit(body, manifest, start)?;
    Ok(Outcome::Ok)
}

fn verify_cmd(command: VerifyCommand, mut manifest: RunManifest, start: Instant) -> anyhow::Result<Outcome> {
    match command {
        VerifyCommand::Catalog { table } => {
            let mut entries = Vec::new();
            let mut all_ok = true;
            let mut text = String::new();
            if table {
                writeln!(text, "{:<8} {:>3} {:>3} {:>3} {:>6} {:>6}  failures", "name", "n", "m", "tau", "defic", "weight")?;
            }
            for kind in SpecialKind::shipped() {
                let h = algebra::special(kind)?;
                let tau = solver::tau(&h).tau;
                let defic = deficiency::deficiency(&h)?.value;
                let weight = kind.class().weight();
                let identity = defic == weight && weight == 45 * tau as i64 - 6 * h.n() as i64 - 13 * h.m() as i64;
                let report = verify::catalog_property_suite(kind)?;
                let failed: String = report.failures().map(|c| c.id).collect();
                all_ok &= identity && failed.is_empty();
                if table {
                    let shown = if failed.is_empty() { "-".to_string() } else { failed.clone() };
                    writeln!(text, "{:<8} {:>3} {:>3} {:>3} {:>6} {:>6}  {shown}", kind.name(), h.n(), h.m(), tau, defic, weight)?;
                }
                entries.push(json!({
                    "name": kind.name(),
                    "n": h.n(),
                    "m": h.m(),
                    "tau": tau,
                    "defic": defic,
                    "weight": weight,
                    "identity_holds": identity,
                    "report": report,
                }));
            }
            if table {
                write_stdout(&text)?;
            } else {
                emit(json!({"entries": entries, "all_pass": all_ok}), manifest, start)?;
            }
            Ok(verdict(all_ok))
        }
        VerifyCommand::Bounds { corpus, bound, seed, count } => {
            let instances: Vec<(String, Hypergraph)> = if corpus == "builtin" {
                let Some(seed) = seed else { bail!("--corpus builtin needs --seed") };
                manifest.seeds.push(seed);
                verify::builtin_corpus(bound, count, seed)
            } else {
                let mut paths: Vec<PathBuf> = std::fs::read_dir(&corpus)
                    .with_context(|| format!("--corpus {corpus}"))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "hg"))
                    .collect();
                paths.sort();
                paths
                    .iter()
                    .map(|p| Ok((p.display().to_string(), read_input(p, &mut manifest)?)))
                    .collect::<anyhow::Result<_>>()?
            };
            let mut rows = Vec::new();
            let mut skipped = Vec::new();
            let mut violations = 0;
            for (name, h) in &instances {
                match verify::bound_check(h, bound) {
                    Ok(c) => {
                        violations += usize::from(!c.holds);
                        rows.push(json!({"name": name, "n": h.n(), "m": h.m(), "check": c}));
                    }
                    Err(Error::Hypothesis { reason, .. }) => skipped.push(json!({"name": name, "reason": reason})),
                    Err(e) => return Err(e.into()),
                }
            }
            let body = json!({
                "bound": bound.name(),
                "checked": rows.len(),
                "violations": violations,
                "instances": rows,
                "skipped": skipped,
            });
            emit(body, manifest, start)?;
            Ok(verdict(violations == 0))
        }
        VerifyCommand::Residual { q, table } => {
            let rows: Vec<_> = (1..=q as usize).map(|s| verify::residual_plane_check(q, s)).collect::<Result<_, _>>()?;
            let ok = rows.iter().all(|r| r.holds);
            if table {
                let mut text = String::new();
                writeln!(text, "{:>3} {:>4} {:>4} {:>4} {:>10}", "s", "tau", "n", "m", "(n+m)/(q+1)")?;
                for r in &rows {
                    writeln!(text, "{:>3} {:>4} {:>4} {:>4} {:>10}", r.s, r.tau, r.n, r.m, (r.n + r.m) as f64 / (q + 1) as f64)?;
                }
                write_stdout(&text)?;
            } else {
                emit(json!({"q": q, "rows": rows, "all_hold": ok}), manifest, start)?;
            }
            Ok(verdict(ok))
        }
    }
}

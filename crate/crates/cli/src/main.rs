use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use splithp::cert::{validate_certificate, Certificate};
use splithp::format::{corpus_files, read_graph, render_graph, write_corpus, FormatError, GraphFile};
use splithp::gen::{generate, GenKind, GenSpec};
use splithp::invariants::check_all;
use splithp::bench::{bench_one, CSV_HEADER};
use splithp::oracle::{ham_path_oracle, OracleBudget};
use splithp::reduction::reduce_all;
use splithp::sweep::par_map;
use splithp::{solve, SolveError};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Hamiltonian paths in split graphs.
///
/// Exit codes: 0 = YES / valid / clean, 1 = NO / invalid / violations, 2 = error.
#[derive(Parser)]
#[command(name = "splithp", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a split graph has a Hamiltonian path.
    Solve {
        input: PathBuf,
        /// also write the full certificate here
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// print (claim, case) records
        #[arg(long)]
        trace: bool,
    },
    /// Exact exponential-time decision.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 50_000_000)]
        max_nodes: u64,
    },
    /// Validate a certificate against a graph.
    Check { graph: PathBuf, certificate: PathBuf },
    /// Write one Hamiltonian path instance per clique-independent edge.
    Reduce {
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Generate an instance, or a corpus with `--count`.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// number of consecutive seeds; writes a corpus directory
        #[arg(long)]
        count: Option<u64>,
        /// file (single instance) or directory (corpus); stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant checks plus solve-and-validate over a corpus directory.
    Sweep {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// CSV timings of solve, plus the oracle for n <= 20.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, default_value = "PROPERTY_A")]
        kind: GenKind,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    kind: GenKind,
    #[arg(long)]
    nk: usize,
    #[arg(long)]
    ni: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    short_cycles: Option<usize>,
    #[arg(long)]
    ik_paths: Option<usize>,
}

impl SpecArgs {
    fn spec(&self, seed: u64) -> GenSpec {
        let mut s = GenSpec::new(self.kind, self.nk, self.ni, seed);
        s.extras.short_cycles = self.short_cycles;
        s.extras.ik_paths = self.ik_paths;
        s
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<GraphFile> {
    read_graph(path).with_context(|| path.display().to_string())
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Solve { input, certificate, json, trace } => cmd_solve(&input, certificate.as_deref(), json, trace),
        Cmd::Oracle { input, max_n, max_nodes } => {
            let f = load(&input)?;
            let b = OracleBudget::new(max_n, max_nodes)?;
            match ham_path_oracle(&f.graph, &b)? {
                Some(p) => {
                    println!("verdict YES\npath {}", join(&p));
                    Ok(0)
                }
                None => {
                    println!("verdict NO");
                    Ok(1)
                }
            }
        }
        Cmd::Check { graph, certificate } => {
            let f = load(&graph)?;
            let text = fs::read_to_string(&certificate).with_context(|| certificate.display().to_string())?;
            let c = Certificate::parse_text(&text).with_context(|| certificate.display().to_string())?;
            match validate_certificate(&f.graph, &c) {
                Ok(()) => {
                    println!("valid");
                    Ok(0)
                }
                Err(e) => {
                    println!("invalid {e}");
                    Ok(1)
                }
            }
        }
        Cmd::Reduce { input, out_dir } => {
            let f = load(&input)?;
            let p = f.partition()?;
            let insts = reduce_all(&f.graph, &p)?;
            fs::create_dir_all(&out_dir)?;
            let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("instance");
            for (j, inst) in insts.iter().enumerate() {
                let (u, v) = inst.source_edge;
                let comments = vec![format!("reduced-from edge {u} {v}")];
                let text = render_graph(&inst.graph, Some(&inst.partition.clique), &comments);
                fs::write(out_dir.join(format!("{stem}_{}.graph", j + 1)), text)?;
            }
            println!("wrote {} instances to {}", insts.len(), out_dir.display());
            Ok(0)
        }
        Cmd::Gen { spec, count, out } => cmd_gen(&spec, count, out.as_deref()),
        Cmd::Sweep { corpus } => cmd_sweep(&corpus),
        Cmd::Bench { sizes, seeds, kind } => cmd_bench(&sizes, &seeds, kind),
    }
}

fn join(v: &[splithp::Vertex]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_solve(input: &Path, certificate: Option<&Path>, json: bool, trace: bool) -> Result<u8> {
    let f = load(input)?;
    let c = solve(&f.graph)?;
    if let Some(path) = certificate {
        fs::write(path, c.to_text()).with_context(|| path.display().to_string())?;
    }
    if json {
        println!("{}", c.to_json());
    } else {
        let text = c.to_text();
        for line in text.lines().filter(|l| trace || !l.starts_with("trace ")) {
            println!("{line}");
        }
    }
    Ok(if c.is_yes() { 0 } else { 1 })
}

fn cmd_gen(args: &SpecArgs, count: Option<u64>, out: Option<&Path>) -> Result<u8> {
    if let Some(count) = count {
        let Some(dir) = out else { bail!("--count needs --out <dir>") };
        let specs: Vec<GenSpec> = (0..count).map(|i| args.spec(args.seed + i)).collect();
        let entries = write_corpus(&specs, dir)?;
        println!("wrote {} instances to {}", entries.len(), dir.display());
        return Ok(0);
    }
    let spec = args.spec(args.seed);
    let gd = generate(&spec)?;
    let mut comments = vec![format!("kind {} nk {} ni {} seed {}", spec.kind, spec.nk, spec.ni, spec.seed)];
    if let Some(pl) = &gd.planted {
        comments.push(format!("planted {} {}", if pl.cycle { "cycle" } else { "path" }, join(&pl.sequence)));
    }
    let text = render_graph(&gd.graph, Some(&gd.partition.clique), &comments);
    match out {
        Some(path) => fs::write(path, text).with_context(|| path.display().to_string())?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(0)
}

enum Outcome {
    Clean,
    OutOfScope,
    Violations(Vec<String>),
}

fn sweep_one(path: &Path) -> Result<Outcome, FormatError> {
    let f = read_graph(path)?;
    let p = f.partition()?;
    let mut bad: Vec<String> = check_all(&f.graph, &p).iter().map(|v| v.to_string()).collect();
    match solve(&f.graph) {
        Ok(c) => {
            if let Err(e) = validate_certificate(&f.graph, &c) {
                bad.push(format!("certificate rejected: {e}"));
            }
        }
        Err(SolveError::SolverScopeExceeded(_)) if bad.is_empty() => return Ok(Outcome::OutOfScope),
        Err(e) => bad.push(format!("solve failed: {e}")),
    }
    Ok(if bad.is_empty() { Outcome::Clean } else { Outcome::Violations(bad) })
}

fn cmd_sweep(corpus: &Path) -> Result<u8> {
    let files = corpus_files(corpus)?;
    let results = par_map(&files, |f| sweep_one(f));
    let (mut clean, mut scope, mut violations) = (0, 0, 0);
    for (file, r) in files.iter().zip(results) {
        match r.with_context(|| file.display().to_string())? {
            Outcome::Clean => clean += 1,
            Outcome::OutOfScope => scope += 1,
            Outcome::Violations(vs) => {
                violations += 1;
                for v in vs {
                    println!("{}: {v}", file.display());
                }
            }
        }
    }
    println!("instances {} clean {clean} out-of-scope {scope} violations {violations}", files.len());
    Ok(if violations == 0 { 0 } else { 1 })
}

fn cmd_bench(sizes: &[usize], seeds: &[u64], kind: GenKind) -> Result<u8> {
    println!("{CSV_HEADER}");
    for &n in sizes {
        for &seed in seeds {
            println!("{}", bench_one(kind, n, seed)?.csv());
        }
    }
    Ok(0)
}

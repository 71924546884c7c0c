use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cm2_core::io::{self as gio, GraphFormat};
use cm2_core::{
    check_claims, climb, cm2, m2, optimal_m, split_closed_form, verify_conjecture, ClimbConfig, Graph,
    OrientationContext, Policy, ScanOptions,
};

#[derive(Parser)]
#[command(name = "cm2", version, about = "Exact complementary second Zagreb index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print cM₂ and/or M₂ of a graph.
    Index {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
    },
    /// Tabulate cM₂(K_m ∨ K̄_{n−m}) over m and report the argmax.
    Extremal {
        #[arg(long)]
        n: usize,
    },
    /// Scan every labeled graph of order n and check that the maxima are complete split graphs.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "CM2_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        allow_n8: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append the one-line CSV summary to this file (header written when new).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        sample_cap: usize,
    },
    /// Hill-climb with the monotone rewrite moves.
    Climb {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PolicyArg::First)]
        policy: PolicyArg,
        #[arg(long)]
        allow_plateau_a: bool,
        /// Seed for the extra random starts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also climb from this many seeded random graphs of the same order.
        #[arg(long, default_value_t = 0)]
        starts: usize,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Evaluate the maximizer structure predicates.
    Claims {
        #[command(flatten)]
        input: Input,
    },
    /// Show the degree orientation and the X/Y split.
    Orient {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for stdin.
    file: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
    format: FormatArg,
    /// Edge-list labels start at 1.
    #[arg(long)]
    one_based: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Cm2,
    M2,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    First,
    Best,
}

enum Failure {
    Input(String),
    Unverified,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

impl Input {
    fn load(&self) -> Result<Graph, Failure> {
        let text = if self.file == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(&self.file).map_err(|e| Failure::Input(format!("{}: {e}", self.file)))?
        };
        let format = match self.format {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Edgelist => GraphFormat::EdgeList,
        };
        Ok(gio::read_graph(&text, format, self.one_based)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unverified) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Index { input, which } => {
            let g = input.load()?;
            if which != Which::M2 {
                writeln!(out, "cm2 {}", cm2(&g))?;
            }
            if which != Which::Cm2 {
                writeln!(out, "m2 {}", m2(&g))?;
            }
        }
        Command::Extremal { n } => {
            let opt = optimal_m(n)?;
            writeln!(out, "{:>6} {:>24}", "m", "cm2")?;
            for m in 1..n {
                writeln!(out, "{m:>6} {:>24}", split_closed_form(m, n)?)?;
            }
            writeln!(out, "argmax m*={} value={}", opt.m_star, opt.value)?;
            let ties: Vec<String> = opt.ties.iter().map(|m| m.to_string()).collect();
            writeln!(out, "ties {}", ties.join(" "))?;
        }
        Command::Verify {
            n,
            jobs,
            allow_n8,
            out: json_path,
            csv,
            sample_cap,
        } => {
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
            let verdict = verify_conjecture(
                n,
                &ScanOptions {
                    sample_cap,
                    jobs,
                    allow_n8,
                },
            )?;
            let r = &verdict.report;
            writeln!(out, "n {}", r.n)?;
            writeln!(out, "graphs_scanned {}", r.graphs_scanned)?;
            writeln!(out, "global_max {}", r.global_max)?;
            writeln!(out, "closed_form_max {}", r.closed_form_max)?;
            writeln!(out, "optimal_ms {:?}", r.optimal_ms)?;
            writeln!(out, "maximizer_count {}", r.maximizer_count)?;
            writeln!(out, "non_split_maximizers {}", r.non_split_maximizers)?;
            writeln!(out, "claim_failures {}", r.claim_failures)?;
            writeln!(out, "elapsed_ms {}", r.elapsed.as_millis())?;
            if let Some(g) = &verdict.counterexample {
                writeln!(out, "counterexample {}", gio::graph6::encode(g)?)?;
            }
            writeln!(out, "verified {}", verdict.passed)?;
            if let Some(path) = json_path {
                fs::write(&path, gio::report::to_json(r) + "\n")?;
            }
            if let Some(path) = csv {
                let fresh = !path.exists();
                let mut f = fs::OpenOptions::new().create(true).append(true).open(&path)?;
                if fresh {
                    writeln!(f, "{}", gio::report::CSV_HEADER)?;
                }
                writeln!(f, "{}", gio::report::csv_row(r))?;
            }
            if !verdict.passed {
                return Err(Failure::Unverified);
            }
        }
        Command::Climb {
            input,
            policy,
            allow_plateau_a,
            seed,
            starts,
            trace,
        } => {
            let g = input.load()?;
            let config = ClimbConfig {
                policy: match policy {
                    PolicyArg::First => Policy::FirstImprovement,
                    PolicyArg::Best => Policy::BestImprovement,
                },
                allow_plateau_a,
            };
            let t = climb(&g, &config);
            writeln!(out, "initial_cm2 {}", cm2(&t.initial))?;
            writeln!(out, "final_cm2 {}", cm2(&t.final_graph))?;
            writeln!(out, "steps {}", t.steps.len())?;
            writeln!(out, "final_graph {}", gio::graph6::encode(&t.final_graph)?)?;
            match t.final_graph.is_complete_split() {
                Some(w) => writeln!(out, "complete_split yes m={}", w.m)?,
                None => writeln!(out, "complete_split no")?,
            }
            if let Some(path) = trace {
                fs::write(&path, gio::trace::to_text(&t)?)?;
            }
            if starts > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut reached = 0;
                for _ in 0..starts {
                    let p = rng.random_range(1..=9) as f64 / 10.0;
                    let start = Graph::random_with(g.order(), p, &mut rng)?;
                    if climb(&start, &config).final_graph.is_complete_split().is_some() {
                        reached += 1;
                    }
                }
                writeln!(out, "random_starts {starts} reached_complete_split {reached}")?;
            }
        }
        Command::Claims { input } => {
            let g = input.load()?;
            let report = check_claims(&g);
            writeln!(out, "{:<26} {:<6} counterexample", "claim", "result")?;
            for o in &report.outcomes {
                let cx = match &o.counterexample {
                    Some(vs) => vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
                    None => "-".into(),
                };
                let result = if o.passed() { "pass" } else { "fail" };
                writeln!(out, "{:<26} {result:<6} {cx}", o.claim.name())?;
            }
        }
        Command::Orient { input } => {
            let g = input.load()?;
            let ctx = OrientationContext::orient(&g);
            let f = ctx.mixed();
            let arcs: Vec<String> = f.arcs().map(|(u, v)| format!("{u}->{v}")).collect();
            let edges: Vec<String> = f.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "arcs {}", arcs.join(" "))?;
            writeln!(out, "edges {}", edges.join(" "))?;
            writeln!(out, "{:>6} {:>4} {:>4} {:>4} set", "vertex", "d+", "d-", "d")?;
            for u in 0..ctx.order() {
                let d = ctx.degrees(u);
                let set = if ctx.in_x(u) { "X" } else { "Y" };
                writeln!(out, "{u:>6} {:>4} {:>4} {:>4} {set}", d.out, d.inn, d.total)?;
            }
        }
    }
    Ok(())
}

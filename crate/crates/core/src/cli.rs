//! Command-line front end. [`dispatch`] is the whole program minus process I/O.

use crate::cliques::{clique_connected, enumerate_cliques};
use crate::error::Error;
use crate::graph::{
    complete_graph, complete_multipartite, graph_from_graph6, graph_to_graph6, turan_graph, Graph,
};
use crate::lab::{
    check_lower_bound, conjectured_extremal, enumerate_graphs, scan, scan_all, verify_balancing,
    verify_monotonicity, ScanOptions, ScanParams, ScanRecord,
};
use crate::packing::{find_disjoint_packing, FreenessQuery};
use crate::tensor::{spectral_radius_of, weakly_irreducible, SolverOptions};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "clique-spectra", version, about = "t-clique spectral radius and kK_{r+1}-free extremal scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 1.0)]
    pub shift: f64,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            tol: self.tol,
            max_iters: self.max_iters,
            shift: self.shift,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// t-clique spectral radius of a graph.
    Rho {
        /// graph6 string, or "-" for standard input.
        graph: Option<String>,
        /// Build the graph instead, e.g. "turan 6 3", "join-turan 7 2 2", "multipartite 3,3".
        #[arg(long, conflicts_with = "graph")]
        construct: Option<String>,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Count (or list) the t-cliques of a graph.
    Cliques {
        graph: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        list: bool,
    },
    /// Decide kK_{r+1}-freeness.
    Free {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        witness: bool,
    },
    /// Print the graph6 of a named construction.
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Exhaustive search for the ρ_t maximiser among kK_{r+1}-free graphs.
    Scan {
        #[arg(long, conflicts_with = "g6", required_unless_present = "g6")]
        all_n: Option<usize>,
        /// File with one graph6 per line ("-" for standard input).
        #[arg(long)]
        g6: Option<String>,
        /// Vertex count of the population when reading graph6 (default: first graph).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1e-9)]
        tie_tol: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        no_prune: bool,
        /// Also write a one-row CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run one of the structural checks; exit status 1 when it fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// ρ_t(K_{k-1} ∨ T_r(n-k+1)) >= (t/n) c_t.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Moving a vertex from a larger to a smaller part raises ρ_t.
    Balancing {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Part sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1)]
        parts: Vec<usize>,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Adding an edge that creates a t-clique raises ρ_t strictly.
    Monotonicity {
        graph: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Weak irreducibility equals t-clique connectivity on every graph up to n vertices.
    ConnectivityEquiv {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
}

/// Exit status and the text destined for standard output / standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

struct Output {
    text: String,
    passed: bool,
    notes: String,
}

impl Output {
    fn doc<T: Serialize>(value: &T) -> Self {
        Output {
            text: serde_json::to_string_pretty(value).expect("output serialises"),
            passed: true,
            notes: String::new(),
        }
    }
}

fn read_graph(arg: &str, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    if arg == "-" {
        let mut line = String::new();
        BufReader::new(stdin).read_line(&mut line)?;
        Ok(graph_from_graph6(&line)?)
    } else {
        Ok(graph_from_graph6(arg)?)
    }
}

/// Builds a graph from a construction spec such as `turan 6 3`.
pub fn construct_from_spec(words: &[&str]) -> Result<Graph, Error> {
    let bad = || {
        Error::InvalidArgument(format!(
            "unknown construction {:?}; expected turan N R | join-turan N K R | multipartite S1,S2,.. | complete N",
            words.join(" ")
        ))
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match words {
        ["turan", n, r] => turan_graph(num(n)?, num(r)?),
        ["join-turan", n, k, r] => conjectured_extremal(num(n)?, num(k)?, num(r)?),
        ["complete", n] => complete_graph(num(n)?),
        ["multipartite", rest @ ..] if !rest.is_empty() => {
            let sizes = rest
                .iter()
                .flat_map(|w| w.split(','))
                .filter(|s| !s.is_empty())
                .map(num)
                .collect::<Result<Vec<_>, _>>()?;
            complete_multipartite(&sizes)
        }
        _ => Err(bad()),
    }
}

fn run(cli: Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match cli.command {
        Command::Rho {
            graph,
            construct,
            t,
            solver,
        } => {
            let g = match (graph, construct) {
                (_, Some(spec)) => {
                    let words: Vec<&str> = spec.split_whitespace().collect();
                    construct_from_spec(&words)?
                }
                (Some(arg), None) => read_graph(&arg, stdin)?,
                (None, None) => {
                    return Err(Failure::Usage("rho needs a graph6 argument or --construct".into()))
                }
            };
            if t < 2 || t > g.n() {
                return Err(Failure::Usage(format!("need 2 <= t <= n (t={t}, n={})", g.n())));
            }
            let res = spectral_radius_of(&enumerate_cliques(&g, t)?, &solver.options())?;
            let mut out = Output::doc(&res);
            if !res.converged {
                out.notes = format!("warning: power iteration did not converge in {} iterations\n", solver.max_iters);
            }
            Ok(out)
        }
        Command::Cliques { graph, t, list } => {
            let g = read_graph(&graph, stdin)?;
            let cs = enumerate_cliques(&g, t)?;
            let lists: Option<Vec<Vec<usize>>> =
                list.then(|| cs.cliques().iter().map(|c| c.vertices().collect()).collect());
            Ok(Output::doc(&json!({
                "graph6": graph_to_graph6(&g),
                "t": t,
                "count": cs.len(),
                "cliques": lists,
            })))
        }
        Command::Free { graph, k, r, witness } => {
            let g = read_graph(&graph, stdin)?;
            let q = FreenessQuery::new(k, r)?;
            let packing = find_disjoint_packing(&g, q);
            Ok(Output::doc(&json!({
                "graph6": graph_to_graph6(&g),
                "k": k,
                "r": r,
                "free": packing.is_none(),
                "witness": if witness { packing.map(|p| p.vertex_lists()) } else { None },
            })))
        }
        Command::Construct { spec } => {
            let words: Vec<&str> = spec.iter().flat_map(|s| s.split_whitespace()).collect();
            let g = construct_from_spec(&words)?;
            Ok(Output {
                text: graph_to_graph6(&g),
                passed: true,
                notes: String::new(),
            })
        }
        Command::Scan {
            all_n,
            g6,
            n,
            k,
            r,
            t,
            tie_tol,
            threads,
            no_prune,
            csv,
            solver,
        } => {
            let opts = ScanOptions {
                solver: solver.options(),
                tie_tol,
                prune: !no_prune,
                threads,
            };
            let (record, stats) = match (all_n, g6) {
                (Some(n), _) => scan_all(ScanParams { n, k, r, t }, &opts)?,
                (None, Some(path)) => {
                    let text = if path == "-" {
                        let mut s = String::new();
                        stdin.read_to_string(&mut s)?;
                        s
                    } else {
                        std::fs::read_to_string(&path)?
                    };
                    let graphs = text
                        .lines()
                        .enumerate()
                        .filter(|(_, l)| !l.trim().is_empty())
                        .map(|(i, l)| {
                            graph_from_graph6(l)
                                .map_err(|e| Failure::Usage(format!("line {}: {e}", i + 1)))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let n = match n.or_else(|| graphs.first().map(Graph::n)) {
                        Some(n) => n,
                        None => return Err(Failure::Usage("graph6 population is empty".into())),
                    };
                    scan(graphs, &format!("graph6 file {path}"), ScanParams { n, k, r, t }, &opts)?
                }
                (None, None) => return Err(Failure::Usage("scan needs --all-n or --g6".into())),
            };
            if let Some(path) = csv {
                std::fs::write(path, format!("{}\n{}\n", ScanRecord::CSV_HEADER, record.csv_row()))?;
            }
            let mut out = Output::doc(&record);
            out.notes = format!(
                "solved {} graphs, pruned {}, unconverged {}\n",
                stats.solved, stats.pruned, stats.unconverged
            );
            Ok(out)
        }
        Command::Verify(v) => verify(v, stdin),
    }
}

/// A check report with its pass flag appended; serialised in one pass so the
/// report's float formatting survives.
#[derive(Serialize)]
struct Verified<T> {
    #[serde(flatten)]
    report: T,
    pass: bool,
}

fn verified<T: Serialize>(report: T, pass: bool) -> Result<Output, Failure> {
    let mut out = Output::doc(&Verified { report, pass });
    out.passed = pass;
    Ok(out)
}

fn verify(cmd: VerifyCommand, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match cmd {
        VerifyCommand::LowerBound { n, k, r, t, solver } => {
            let rep = check_lower_bound(n, k, r, t, &solver.options())?;
            let pass = rep.holds;
            verified(rep, pass)
        }
        VerifyCommand::Balancing {
            k,
            t,
            parts,
            i,
            j,
            solver,
        } => {
            let rep = verify_balancing(k, t, &parts, i, j, &solver.options())?;
            let pass = rep.increased;
            verified(rep, pass)
        }
        VerifyCommand::Monotonicity {
            graph,
            u,
            v,
            t,
            solver,
        } => {
            let g = read_graph(&graph, stdin)?;
            let rep = verify_monotonicity(&g, (u, v), t, &solver.options())?;
            // A report whose hypotheses fail is not a counterexample.
            let pass = !rep.applicable || rep.strict;
            verified(rep, pass)
        }
        VerifyCommand::ConnectivityEquiv { n } => {
            if n > 6 {
                return Err(Failure::Usage(format!("connectivity-equiv supports n <= 6 (got {n})")));
            }
            let mut checked = 0u64;
            let mut mismatches = Vec::new();
            for m in 2..=n {
                for g in enumerate_graphs(m)? {
                    for t in 2..=m {
                        checked += 1;
                        if weakly_irreducible(&g, t)? != clique_connected(&g, t) {
                            mismatches.push(json!({"graph6": graph_to_graph6(&g), "t": t}));
                        }
                    }
                }
            }
            let pass = mismatches.is_empty();
            verified(json!({"max_n": n, "checked": checked, "mismatches": mismatches}), pass)
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let output_path = cli.output.clone();
    match run(cli, stdin) {
        Ok(out) => {
            let mut text = out.text;
            text.push('\n');
            let mut stderr = out.notes;
            let stdout = match output_path {
                Some(path) => match std::fs::write(&path, &text) {
                    Ok(()) => String::new(),
                    Err(e) => {
                        stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                        return Outcome { code: 1, stdout: String::new(), stderr };
                    }
                },
                None => text,
            };
            let code = if out.passed { 0 } else { 1 };
            if !out.passed {
                stderr.push_str("verification failed\n");
            }
            Outcome { code, stdout, stderr }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Runtime(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let argv = std::iter::once("clique-spectra").chain(args.iter().copied());
        dispatch(argv, &mut std::io::empty())
    }

    #[test]
    fn construct_specs() {
        assert_eq!(construct_from_spec(&["turan", "4", "2"]).unwrap().edge_count(), 4);
        assert_eq!(construct_from_spec(&["multipartite", "3,3"]).unwrap().edge_count(), 9);
        assert_eq!(construct_from_spec(&["multipartite", "3", "3"]).unwrap().edge_count(), 9);
        assert_eq!(construct_from_spec(&["complete", "5"]).unwrap().edge_count(), 10);
        assert!(construct_from_spec(&["petersen"]).is_err());
        assert!(construct_from_spec(&["turan", "x", "2"]).is_err());
    }

    #[test]
    fn argument_errors_exit_two() {
        assert_eq!(run_args(&["rho", "C~"]).code, 2);
        assert_eq!(run_args(&["rho", "C~", "--t", "9"]).code, 2);
        assert_eq!(run_args(&["free", "C", "--k", "1", "--r", "2"]).code, 2);
        assert_eq!(run_args(&["bogus"]).code, 2);
        assert_eq!(run_args(&["verify", "connectivity-equiv", "--n", "7"]).code, 2);
    }

    #[test]
    fn failed_verification_exits_one() {
        // Moving a vertex between equal-ish parts in the wrong direction is rejected as usage.
        let out = run_args(&["verify", "balancing", "--k", "1", "--t", "2", "--parts", "2,2", "--i", "0", "--j", "1"]);
        assert_eq!(out.code, 2);
        let out = run_args(&["verify", "balancing", "--k", "1", "--t", "2", "--parts", "3,1", "--i", "0", "--j", "1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let out = run_args(&["verify", "balancing", "--k", "1", "--t", "2", "--parts", "3,1", "--i", "0", "--j", "1", "--max-iters", "1"]);
        assert_eq!(out.code, 1);
    }
}

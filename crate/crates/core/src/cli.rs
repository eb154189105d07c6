//! The `tga` command line.
//!
//! Exit status: 0 for success or a true answer, 1 for a false answer (not a
//! member, not equal, an oracle disagreement), 2 for usage or data errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::minimal_generators;
use crate::graph::{Edge, Graph};
use crate::oracle;
use crate::report::{
    log_entries, weight_map, AdmissibleReport, CertificateReport, DecompositionReport, EqualityReport,
    GeneratorsReport, LaurentReport, MembershipReport, NormalizeReport, RelationReport,
};
use crate::semigroup::{decompose_to_generators, membership, WeightVector};
use crate::spectra::{
    check_laurent_basis, enumerate_admissible_capped, laurent_free_generators, to_dot, AdmissibleSubgraph,
    DEFAULT_SUBSET_CAP,
};
use crate::toric::{enumerate_relations, equal_pair_words, pairs_to_cycles, Bounds};
use crate::words::{to_standard_form, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "tga",
    version,
    about = "Generators, membership, word equality, toric relations and spectra of normalized graph edge algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators: edges, then exceptional pairs.
    Generators { graph: PathBuf },
    /// Membership of a weight vector such as `a=1,c=1`, with a certificate on failure.
    Member { graph: PathBuf, weight: String },
    /// Decomposition of a member into edges and exceptional pairs.
    Decompose { graph: PathBuf, weight: String },
    /// Standard form of a word with the moves reaching it.
    Normalize { graph: PathBuf, word: String },
    /// Whether two words have equal weight, with a move log turning one into the other.
    Equal { graph: PathBuf, left: String, right: String },
    /// Relations of the toric ideal in edge and pair variables.
    Relations {
        graph: PathBuf,
        /// Longest rotation or destroying walk (default twice the vertex count).
        #[arg(long)]
        max_walk: Option<usize>,
        /// Most edges in a shifting configuration (default the vertex count).
        #[arg(long)]
        max_support: Option<usize>,
        /// Print `LHS - RHS`.
        #[arg(long)]
        binomial: bool,
    },
    /// Admissible subgraphs and the primes they index.
    Admissible {
        graph: PathBuf,
        /// Largest edge count for subset enumeration.
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: usize,
    },
    /// A free generating set of the Laurent lattice of an admissible subgraph,
    /// given as edges separated by commas or spaces.
    Laurent { graph: PathBuf, edges: String },
    /// Brute-force cross-checks on a family of small graphs.
    Oracle {
        #[arg(value_enum)]
        check: OracleCheck,
        /// Largest vertex count; 6 adds seeded random graphs.
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        /// Longest generator word whose fiber is saturated.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_SEED)]
        seed: u64,
        /// Number of random graphs on 6 vertices.
        #[arg(long, default_value_t = oracle::DEFAULT_RANDOM_GRAPHS)]
        random: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    Gens,
    Congruence,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    Graph::parse(&text)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn parse_edges(g: &Graph, text: &str) -> Result<Vec<Edge>> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(|s| g.parse_edge(s)).collect()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let format = if cli.json { Format::Json } else { cli.format };
    let json = format == Format::Json;
    match &cli.command {
        Command::Generators { graph } => {
            let g = read_graph(graph)?;
            let gens = minimal_generators(&g);
            if json {
                emit(out, &GeneratorsReport::new(&g, &gens))?;
            } else {
                for x in &gens {
                    writeln!(out, "{}", x.token(&g))?;
                }
            }
            Ok(0)
        }
        Command::Member { graph, weight } => {
            let g = read_graph(graph)?;
            let f = WeightVector::parse(&g, weight)?;
            let answer = membership(&g, &f)?;
            if json {
                emit(
                    out,
                    &MembershipReport {
                        weight: weight_map(&g, &f),
                        member: answer.is_ok(),
                        certificate: answer.as_ref().err().map(|c| CertificateReport::new(&g, c)),
                    },
                )?;
            } else {
                match &answer {
                    Ok(()) => writeln!(out, "member")?,
                    Err(c) => writeln!(out, "not a member\ncertificate {}", c.display(&g))?,
                }
            }
            Ok(if answer.is_ok() { 0 } else { 1 })
        }
        Command::Decompose { graph, weight } => {
            let g = read_graph(graph)?;
            let f = WeightVector::parse(&g, weight)?;
            match decompose_to_generators(&g, &f) {
                Ok(d) => {
                    let r = DecompositionReport::new(&g, &f, &d);
                    if json {
                        emit(out, &r)?;
                    } else {
                        writeln!(out, "{}", r.word)?;
                    }
                    Ok(0)
                }
                Err(Error::NotMember(c)) => {
                    if json {
                        emit(
                            out,
                            &MembershipReport {
                                weight: weight_map(&g, &f),
                                member: false,
                                certificate: Some(CertificateReport::new(&g, &c)),
                            },
                        )?;
                    } else {
                        writeln!(out, "not a member\ncertificate {}", c.display(&g))?;
                    }
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Normalize { graph, word } => {
            let g = read_graph(graph)?;
            let w = pairs_to_cycles(&Word::parse(&g, word)?);
            let (s, log) = to_standard_form(&g, &w);
            if json {
                emit(
                    out,
                    &NormalizeReport { input: w.display(&g), standard: s.display(&g), log: log_entries(&g, &log) },
                )?;
            } else {
                writeln!(out, "{}", s.display(&g))?;
                write!(out, "{}", log.display(&g))?;
            }
            Ok(0)
        }
        Command::Equal { graph, left, right } => {
            let g = read_graph(graph)?;
            let (a, b) = (Word::parse(&g, left)?, Word::parse(&g, right)?);
            let log = equal_pair_words(&g, &a, &b)?;
            if json {
                emit(
                    out,
                    &EqualityReport {
                        left: a.display(&g),
                        right: b.display(&g),
                        equal: log.is_some(),
                        moves: log.as_ref().map_or(0, |l| l.move_count()),
                        log: log.as_ref().map(|l| log_entries(&g, l)).unwrap_or_default(),
                    },
                )?;
            } else {
                match &log {
                    Some(l) => {
                        let k = l.move_count();
                        writeln!(out, "equal ({k} move{})", if k == 1 { "" } else { "s" })?;
                        write!(out, "{}", l.display(&g))?;
                    }
                    None => writeln!(out, "not equal")?,
                }
            }
            Ok(if log.is_some() { 0 } else { 1 })
        }
        Command::Relations { graph, max_walk, max_support, binomial } => {
            let g = read_graph(graph)?;
            let d = Bounds::for_graph(&g);
            let (mw, ms) = (max_walk.unwrap_or(d.max_walk), max_support.unwrap_or(d.max_support));
            if mw == 0 || ms == 0 {
                return Err(Error::Precondition("bounds must be at least 1".into()));
            }
            let rels = enumerate_relations(&g, mw, ms)?;
            if json {
                emit(out, &rels.iter().map(|r| RelationReport::new(&g, r)).collect::<Vec<_>>())?;
            } else {
                for r in &rels {
                    if *binomial {
                        writeln!(out, "{}", r.binomial(&g))?;
                    } else {
                        writeln!(out, "{}  # {}", r.display(&g), r.class().name())?;
                    }
                }
            }
            Ok(0)
        }
        Command::Admissible { graph, cap } => {
            let g = read_graph(graph)?;
            let ks = enumerate_admissible_capped(&g, *cap)?;
            match format {
                Format::Json => emit(out, &AdmissibleReport::new(&g, &ks))?,
                Format::Dot => {
                    for k in &ks {
                        write!(out, "{}", to_dot(&g, k))?;
                    }
                }
                Format::Text => {
                    for d in AdmissibleReport::new(&g, &ks).subgraphs {
                        writeln!(out, "{{{}}} : ({})", d.subgraph.join(", "), d.generators.join(", "))?;
                    }
                }
            }
            Ok(0)
        }
        Command::Laurent { graph, edges } => {
            let g = read_graph(graph)?;
            let k = AdmissibleSubgraph::new(&g, &parse_edges(&g, edges)?)?;
            let gens = laurent_free_generators(&g, &k);
            check_laurent_basis(&g, &k, &gens)?;
            match format {
                Format::Json => emit(out, &LaurentReport::new(&g, &k, &gens, true))?,
                Format::Dot => write!(out, "{}", to_dot(&g, &k))?,
                Format::Text => {
                    let names: Vec<String> = gens.iter().map(|&e| g.edge_name(e)).collect();
                    writeln!(out, "{}", names.join(" "))?;
                }
            }
            Ok(0)
        }
        Command::Oracle { check, max_vertices, max_len, seed, random } => {
            if *max_vertices > 6 {
                return Err(Error::Precondition("the oracle family stops at 6 vertices".into()));
            }
            let family = oracle::graph_family(*max_vertices, *random, *seed);
            writeln!(out, "seed {seed}, {} graphs", family.len())?;
            let mut failures = 0;
            for (i, g) in family.iter().enumerate() {
                let edges: Vec<String> = g.edges().iter().map(|&e| g.edge_name(e)).collect();
                match check {
                    OracleCheck::Gens => {
                        let c = oracle::check_generators(g);
                        if !c.agrees() {
                            failures += 1;
                            writeln!(
                                out,
                                "graph {i} [{}]: {} missing, {} extra",
                                edges.join(" "),
                                c.missing.len(),
                                c.extra.len()
                            )?;
                        }
                    }
                    OracleCheck::Congruence => {
                        let bad = oracle::congruence_failures(g, *max_len)?;
                        if !bad.is_empty() {
                            failures += 1;
                            let first: Vec<String> = bad.iter().take(3).map(|f| f.display(g)).collect();
                            writeln!(out, "graph {i} [{}]: split fibers {}", edges.join(" "), first.join("; "))?;
                        }
                    }
                }
            }
            writeln!(out, "{} of {} graphs agree", family.len() - failures, family.len())?;
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

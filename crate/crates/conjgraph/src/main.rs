//! Command-line surface: analyze class graphs of catalog or file-loaded
//! groups, export graphs, run the verification suites, and validate group
//! documents.
//!
//! Exit status: 0 when everything checked is verified or vacuous, 1 when a
//! counterexample was found, 2 on usage or IO errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use conjgraph::classgraph::{export_graph, isolated_pairs, size_collapsed};
use conjgraph::constructions::{
    agl_semilinear, catalog_build, example1_pair, example2_composite, GroupPair,
};
use conjgraph::error::{GroupError, Result};
use conjgraph::group::Subgroup;
use conjgraph::io::{document_pair, parse_group_file};
use conjgraph::structure::classify_structure;
use conjgraph::theorems::{run_corpus_with_extra, PairContext, Suite};

#[derive(Parser)]
#[command(
    name = "conjgraph",
    about = "Conjugacy-class graphs of normal subgroups: analysis and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the available group builders and spec syntax.
    Catalog,
    /// Class sizes, graph summary, isolated pairs and structure of (G, N).
    Analyze {
        /// Group spec, e.g. sym:4, dih:10, ea:3,2, q8, agl1:8, ex1, ex2,
        /// file:<path>#<subgroup>.
        #[arg(long)]
        group: String,
        /// Named normal subgroup (file documents and agl1:8); default N = G
        /// for catalog groups, the built-in pair for ex1/ex2.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Export the class graph of (G, N).
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        normal: Option<String>,
        /// dot or json.
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Run verification suites over the built-in corpus.
    Verify {
        /// Comma-separated suite list (theoremA, corB, corC, lemma1, lemma2,
        /// lemma3, step1, diameter_bound, complete_components) or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Directory of extra group documents to include.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Skip catalog groups larger than this.
        #[arg(long, default_value_t = 2000)]
        max_order: u64,
        /// Emit the full json report on stdout instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Load and validate a group document.
    Import {
        #[arg(long)]
        file: PathBuf,
        /// Validate only (always on; flag kept for scripting clarity).
        #[arg(long)]
        check: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Catalog => {
            print!("{}", catalog_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { group, normal } => {
            let pair = resolve_spec(&group, normal.as_deref())?;
            analyze(&pair)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph {
            group,
            normal,
            format,
        } => {
            let pair = resolve_spec(&group, normal.as_deref())?;
            let graph = conjgraph::build_graph(&pair.group, &pair.normal)?;
            print!("{}", export_graph(&graph, &format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            corpus,
            max_order,
            json,
        } => {
            let suites = parse_suites(&suite)?;
            let extra = match &corpus {
                None => Vec::new(),
                Some(dir) => load_corpus_dir(dir),
            };
            let report = run_corpus_with_extra(&suites, max_order, extra)?;
            if json {
                let mut text = serde_json::to_string_pretty(&report)?;
                text.push('\n');
                print!("{text}");
            } else {
                print_verify_summary(&report);
            }
            Ok(if report.counterexamples == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Import { file, check: _ } => {
            let text = std::fs::read_to_string(&file)?;
            let doc = parse_group_file(&text)?;
            let group = conjgraph::io::build_group(&doc)?;
            println!("document `{}`: valid", doc.name);
            println!("degree: {}", doc.degree);
            println!("order: {}", group.order());
            for (name, _) in &doc.normal_subgroups {
                let pair = document_pair(&doc, Some(name))?;
                println!("normal subgroup {name}: order {}", pair.normal.order());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn catalog_text() -> String {
    let mut out = String::new();
    out.push_str("group specs:\n");
    for line in [
        "  sym:n          symmetric group on n points",
        "  alt:n          alternating group on n points",
        "  cyc:n          cyclic group of order n",
        "  dih:n          dihedral group of order n (n even)",
        "  ea:p,k         elementary abelian group of order p^k",
        "  q8             quaternion group of order 8",
        "  agl1:8         semilinear affine group of order 168 on F8 (normal subgroup A = translations)",
        "  ex1            order-2420 affine pair with normal subgroup of order 605",
        "  ex2            order-9072 direct-product pair with abelian normal subgroup of order 72",
        "  file:<path>#<subgroup>   group document from disk",
    ] {
        out.push_str(line);
        out.push('\n');
    }
    out
}

fn parse_params(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| GroupError::InvalidParams(format!("bad integer parameter `{t}`")))
        })
        .collect()
}

fn no_normal_expected(spec: &str, normal: Option<&str>) -> Result<()> {
    match normal {
        None => Ok(()),
        Some(n) => Err(GroupError::InvalidParams(format!(
            "spec `{spec}` has no named normal subgroup `{n}`"
        ))),
    }
}

fn resolve_spec(spec: &str, normal: Option<&str>) -> Result<GroupPair> {
    match spec {
        "ex1" => {
            no_normal_expected(spec, normal)?;
            return example1_pair();
        }
        "ex2" => {
            no_normal_expected(spec, normal)?;
            return example2_composite();
        }
        "q8" => {
            no_normal_expected(spec, normal)?;
            let g = catalog_build("quaternion8", &[])?;
            return Ok(GroupPair {
                normal: Subgroup::full(&g),
                group: g,
                label: "q8".into(),
            });
        }
        "agl1:8" => {
            let pair = agl_semilinear(8)?;
            return match normal {
                Some("A") => Ok(pair),
                None => Ok(GroupPair {
                    normal: Subgroup::full(&pair.group),
                    group: pair.group,
                    label: "agl1:8".into(),
                }),
                Some(other) => Err(GroupError::InvalidParams(format!(
                    "agl1:8 has one named normal subgroup, `A`, not `{other}`"
                ))),
            };
        }
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("file:") {
        let (path, fragment) = match rest.split_once('#') {
            Some((p, f)) => (p, Some(f)),
            None => (rest, None),
        };
        let sub = match (fragment, normal) {
            (Some(f), None) | (None, Some(f)) => Some(f),
            (None, None) => None,
            (Some(_), Some(_)) => {
                return Err(GroupError::InvalidParams(
                    "subgroup given both in the spec fragment and --normal".into(),
                ))
            }
        };
        let text = std::fs::read_to_string(path)?;
        let doc = parse_group_file(&text)?;
        return document_pair(&doc, sub);
    }
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, parse_params(p)?),
        None => (spec, Vec::new()),
    };
    let builder = match name {
        "sym" => "symmetric",
        "cyc" => "cyclic",
        "dih" => "dihedral",
        "alt" => "alternating",
        "ea" => "elementary_abelian",
        other => {
            return Err(GroupError::UnknownCatalog(other.to_string()));
        }
    };
    no_normal_expected(spec, normal)?;
    let g = catalog_build(builder, &params)?;
    Ok(GroupPair {
        normal: Subgroup::full(&g),
        group: g,
        label: spec.to_string(),
    })
}

fn analyze(pair: &GroupPair) -> Result<()> {
    let ctx = PairContext::new(pair)?;
    println!("group: {}", ctx.label);
    println!("|G| = {}", ctx.group.order());
    println!("|N| = {}", ctx.normal.order());

    let mut distinct: Vec<u64> = ctx.classes.iter().map(|c| c.size).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let set_text: Vec<String> = distinct.iter().map(|s| s.to_string()).collect();
    println!("class sizes: {{{}}}", set_text.join(", "));
    let mult_text: Vec<String> = distinct
        .iter()
        .map(|&s| {
            format!(
                "{s}x{}",
                ctx.classes.iter().filter(|c| c.size == s).count()
            )
        })
        .collect();
    println!("class size multiplicities: {}", mult_text.join(" "));

    let edge_count = ctx
        .graph
        .adjacency
        .iter()
        .map(|row| row.iter().filter(|&&a| a).count())
        .sum::<usize>()
        / 2;
    println!(
        "graph: {} vertices, {} edges, {} component(s)",
        ctx.summary.vertex_count, edge_count, ctx.summary.component_count
    );
    println!("diameter: {}", ctx.summary.diameter);
    let sg = size_collapsed(&ctx.graph);
    println!(
        "size-collapsed graph: {} vertices, {} edges between distinct sizes",
        sg.sizes.len(),
        sg.edges.iter().filter(|(i, j)| i != j).count()
    );

    let pairs = isolated_pairs(&ctx.graph);
    if pairs.is_empty() {
        println!("isolated pairs: none");
    } else {
        let text: Vec<String> = pairs
            .iter()
            .map(|&(i, j)| {
                format!(
                    "({}, {})",
                    ctx.graph.vertices[i].size, ctx.graph.vertices[j].size
                )
            })
            .collect();
        println!("isolated pairs: {}", text.join(" "));
    }

    let report = classify_structure(ctx.normal.group())?;
    println!("structure of N: {}", report.describe());
    Ok(())
}

fn parse_suites(text: &str) -> Result<Vec<Suite>> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    text.split(',')
        .map(|t| {
            Suite::parse(t.trim()).ok_or_else(|| {
                GroupError::InvalidParams(format!("unknown suite `{}`", t.trim()))
            })
        })
        .collect()
}

/// Load every readable json group document in the directory; unreadable
/// entries produce a warning and are skipped.
fn load_corpus_dir(dir: &Path) -> Vec<GroupPair> {
    let mut pairs = Vec::new();
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("warning: cannot read corpus directory {}: {e}", dir.display());
            return pairs;
        }
    };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for path in paths {
        let loaded = std::fs::read_to_string(&path)
            .map_err(GroupError::from)
            .and_then(|text| parse_group_file(&text))
            .and_then(|doc| {
                let mut out = vec![document_pair(&doc, None)?];
                for name in doc.normal_subgroups.keys() {
                    out.push(document_pair(&doc, Some(name))?);
                }
                Ok(out)
            });
        match loaded {
            Ok(mut p) => pairs.append(&mut p),
            Err(e) => eprintln!("warning: skipping {}: {e}", path.display()),
        }
    }
    pairs
}

fn print_verify_summary(report: &conjgraph::theorems::Report) {
    for entry in &report.entries {
        for outcome in &entry.outcomes {
            println!(
                "{}: {} [{}] {:?}",
                entry.label,
                outcome.statement,
                match outcome.applicability {
                    conjgraph::theorems::Applicability::Applies => "applies",
                    conjgraph::theorems::Applicability::Vacuous => "vacuous",
                },
                outcome.verdict
            );
        }
    }
    println!(
        "entries: {}, counterexamples: {}, non-vacuous factorization checks: {}",
        report.entries.len(),
        report.counterexamples,
        report.non_vacuous_theorem_a
    );
}

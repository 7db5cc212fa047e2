//! `cvt`: construct the Praeger-Xu graph families, compute automorphism
//! groups, verify cycle-decomposition uniqueness, classify cubic
//! vertex-transitive pairs, and find verified semiregular subgroups.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/contract error.

use clap::{Parser, Subcommand};
use cvt_cli::report;
use cvt_cli::{corpus, families, verify};
use cvt_core::construct::{
    circular_ladder, k33, k4, moebius_ladder, px_graph, q3, spx_graph, wreath_group, WreathTarget,
};
use cvt_core::finder::{find_semiregular, max_semiregular_bruteforce, OracleMode};
use cvt_core::graph::{automorphism_group, Graph, SearchBudget};
use cvt_core::perm::{PermGroup, DESK_CAP};
use cvt_core::quotient::classify;
use cvt_core::Error;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cvt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph family member and write its files
    Construct {
        /// px | spx | ladder | moebius | k4 | k33 | q3
        family: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// also write the wreath group acting on a px/spx graph
        #[arg(long)]
        with_group: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Compute the automorphism group of a graph file
    Aut {
        #[arg(long)]
        graph: PathBuf,
        /// search node budget
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Reproduce the r = 4 uniqueness check for arc-transitive 4-cycle
    /// decompositions
    DecompVerify {
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Classify a cubic vertex-transitive pair with an abelian normal
    /// non-semiregular subgroup
    Classify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Find a verified semiregular subgroup
    FindSemiregular {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// also run the brute-force oracle and compare orders
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Generate the desk-scale corpus of cubic vertex-transitive pairs
    Corpus {
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Run the verification suite and emit a pass/fail matrix
    VerifyPaper {
        /// restrict to named sections (repeatable)
        #[arg(long)]
        section: Vec<String>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // input-contract violations exit 2, verification failures 1
            match e.downcast_ref::<Error>() {
                Some(
                    Error::NotCubic
                    | Error::NotFourValent
                    | Error::Disconnected
                    | Error::NotVertexTransitive
                    | Error::NotAutomorphism
                    | Error::DegreeMismatch { .. }
                    | Error::ParamRange(_)
                    | Error::Parse(_)
                    | Error::Io(_)
                    | Error::InvalidPartition
                    | Error::InvalidConnectionSet
                    | Error::NotInParent
                    | Error::PointOutOfRange { .. }
                    | Error::NotAPermutation { .. },
                ) => ExitCode::from(2),
                Some(_) => ExitCode::from(1),
                None => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Construct {
            family,
            r,
            s,
            n,
            with_group,
            out,
            format,
        } => construct_cmd(&family, r, s, n, with_group, &out, &format),
        Command::Aut { graph, cap, out } => aut_cmd(&graph, cap, &out),
        Command::DecompVerify { out } => decomp_verify_cmd(&out),
        Command::Classify { graph, group, out } => classify_cmd(&graph, &group, &out),
        Command::FindSemiregular {
            graph,
            group,
            oracle,
            cap,
            out,
        } => find_semiregular_cmd(&graph, &group, oracle, cap.unwrap_or(DESK_CAP), &out),
        Command::Corpus {
            out,
            max_order,
            max_vertices,
        } => corpus_cmd(&out, max_order, max_vertices),
        Command::VerifyPaper { section, out } => verify_paper_cmd(&section, &out),
    }
}

fn write_out(out_dir: &Path, name: &str, contents: &str) -> anyhow::Result<PathBuf> {
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join(name);
    std::fs::write(&path, contents)?;
    Ok(path)
}

#[derive(Serialize)]
struct ConstructData {
    family: String,
    vertices: usize,
    edges: usize,
    edge_list: Vec<(usize, usize)>,
    graph_file: String,
    group_file: Option<String>,
    labels: Option<Vec<String>>,
}

fn construct_cmd(
    family: &str,
    r: Option<usize>,
    s: Option<usize>,
    n: Option<usize>,
    with_group: bool,
    out: &Path,
    format: &str,
) -> anyhow::Result<ExitCode> {
    if format != "json" {
        return Err(Error::ParamRange(format!("unsupported format {format}")).into());
    }
    let need = |opt: Option<usize>, what: &str| -> anyhow::Result<usize> {
        opt.ok_or_else(|| Error::ParamRange(format!("{family} requires --{what}")).into())
    };
    let reject_group = |with_group: bool| -> anyhow::Result<()> {
        if with_group {
            return Err(Error::ParamRange("--with-group applies to px/spx".into()).into());
        }
        Ok(())
    };
    let (name, graph, group): (String, Graph, Option<PermGroup>) = match family {
        "px" => {
            let (r, s) = (need(r, "r")?, need(s, "s")?);
            let g = px_graph(r, s)?;
            let w = with_group
                .then(|| wreath_group(r, s, WreathTarget::Px))
                .transpose()?;
            (format!("px-{r}-{s}"), g, w)
        }
        "spx" => {
            let (r, s) = (need(r, "r")?, need(s, "s")?);
            let g = spx_graph(r, s)?;
            let w = with_group
                .then(|| wreath_group(r, s, WreathTarget::Spx))
                .transpose()?;
            (format!("spx-{r}-{s}"), g, w)
        }
        "ladder" => {
            let n = need(n, "n")?;
            reject_group(with_group)?;
            (format!("ladder-{n}"), circular_ladder(n)?, None)
        }
        "moebius" => {
            let n = need(n, "n")?;
            reject_group(with_group)?;
            (format!("moebius-{n}"), moebius_ladder(n)?, None)
        }
        "k4" => {
            reject_group(with_group)?;
            ("k4".into(), k4(), None)
        }
        "k33" => {
            reject_group(with_group)?;
            ("k33".into(), k33(), None)
        }
        "q3" => {
            reject_group(with_group)?;
            ("q3".into(), q3(), None)
        }
        other => {
            return Err(Error::ParamRange(format!("unknown family {other}")).into());
        }
    };
    let graph_file = write_out(out, &format!("{name}.graph.txt"), &graph.to_text())?;
    let group_file = match &group {
        Some(g) => Some(
            write_out(out, &format!("{name}.group.txt"), &g.to_text())?
                .display()
                .to_string(),
        ),
        None => None,
    };
    let data = ConstructData {
        family: name.clone(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        edge_list: graph.edges(),
        graph_file: graph_file.display().to_string(),
        group_file,
        labels: graph.labels().map(|l| l.to_vec()),
    };
    let rendered = report::render(&report::make(&format!("construct {family}"), vec![], data))?;
    write_out(out, &format!("{name}.json"), &rendered)?;
    print!("{rendered}");
    eprintln!("wrote {name} ({} vertices)", graph.vertex_count());
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct AutData {
    order: String,
    generator_count: usize,
    group_file: String,
    vertex_transitive: bool,
}

fn aut_cmd(graph_path: &Path, cap: Option<u64>, out: &Path) -> anyhow::Result<ExitCode> {
    let digest = report::digest_file(graph_path)?;
    let graph = Graph::parse_text(&std::fs::read_to_string(graph_path)?)?;
    let mut budget = cap.map_or_else(SearchBudget::default, SearchBudget::new);
    let aut = automorphism_group(&graph, &mut budget)?;
    let stem = file_stem(graph_path);
    let group_file = write_out(out, &format!("{stem}.aut.group.txt"), &aut.to_text())?;
    let data = AutData {
        order: aut.order().to_string(),
        generator_count: aut.generators().len(),
        group_file: group_file.display().to_string(),
        vertex_transitive: aut.is_transitive(),
    };
    let rendered = report::render(&report::make("aut", vec![digest], data))?;
    write_out(out, &format!("{stem}.aut.json"), &rendered)?;
    print!("{rendered}");
    eprintln!("automorphism group order {}", aut.order());
    Ok(ExitCode::SUCCESS)
}

fn decomp_verify_cmd(out: &Path) -> anyhow::Result<ExitCode> {
    let r4 = cvt_core::decomp::verify_r4_unique_class()?;
    let pass = r4.pass;
    let rendered = report::render(&report::make("decomp-verify", vec![], &r4))?;
    write_out(out, "r4-decompositions.json", &rendered)?;
    print!("{rendered}");
    for g in &r4.graphs {
        eprintln!(
            "px(4,{}): {} decompositions, {} arc-transitive, {} class(es)",
            g.s, g.decomposition_count, g.arc_transitive_count, g.conjugacy_class_count
        );
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct ClassifyData {
    family: String,
    witness: String,
    p: u64,
    k: Option<usize>,
    matching_size: Option<usize>,
    merged_vertices: Option<usize>,
    recognized_r: Option<usize>,
    recognized_s: Option<usize>,
}

fn classify_cmd(graph_path: &Path, group_path: &Path, out: &Path) -> anyhow::Result<ExitCode> {
    let digests = vec![
        report::digest_file(graph_path)?,
        report::digest_file(group_path)?,
    ];
    let graph = Graph::parse_text(&std::fs::read_to_string(graph_path)?)?;
    let group = PermGroup::parse_text(&std::fs::read_to_string(group_path)?)?;
    let c = classify(&graph, &group, None)?;
    let data = ClassifyData {
        family: c.family.name(),
        witness: c.witness.to_string(),
        p: c.diagnostics.p,
        k: c.diagnostics.k,
        matching_size: c.diagnostics.matching.as_ref().map(|m| m.len()),
        merged_vertices: c.diagnostics.merged_vertices,
        recognized_r: c.diagnostics.recognized.map(|(r, _)| r),
        recognized_s: c.diagnostics.recognized.map(|(_, s)| s),
    };
    let rendered = report::render(&report::make("classify", digests, data))?;
    write_out(
        out,
        &format!("{}.classify.json", file_stem(graph_path)),
        &rendered,
    )?;
    print!("{rendered}");
    eprintln!("classified as {}", c.family.name());
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OracleData {
    mode: String,
    order: String,
}

#[derive(Serialize)]
struct WitnessData {
    strategy: String,
    order: String,
    generators: Vec<String>,
    oracle: Option<OracleData>,
}

fn find_semiregular_cmd(
    graph_path: &Path,
    group_path: &Path,
    oracle: bool,
    cap: usize,
    out: &Path,
) -> anyhow::Result<ExitCode> {
    let digests = vec![
        report::digest_file(graph_path)?,
        report::digest_file(group_path)?,
    ];
    let graph = Graph::parse_text(&std::fs::read_to_string(graph_path)?)?;
    let group = PermGroup::parse_text(&std::fs::read_to_string(group_path)?)?;
    let witness = find_semiregular(&graph, &group, cap)?;
    let oracle_data = if oracle {
        let m = max_semiregular_bruteforce(&graph, &group, cap)?;
        anyhow::ensure!(
            witness.order <= m.witness.order,
            "witness order {} exceeds oracle maximum {}",
            witness.order,
            m.witness.order
        );
        Some(OracleData {
            mode: match m.mode {
                OracleMode::FullSubgroupScan => "full-subgroup-scan".into(),
                OracleMode::CyclicOnly => "cyclic-only".into(),
            },
            order: m.witness.order.to_string(),
        })
    } else {
        None
    };
    let data = WitnessData {
        strategy: witness.strategy.tag().to_string(),
        order: witness.order.to_string(),
        generators: witness.generators.iter().map(|g| g.to_string()).collect(),
        oracle: oracle_data,
    };
    let rendered = report::render(&report::make("find-semiregular", digests, data))?;
    write_out(
        out,
        &format!("{}.semiregular.json", file_stem(graph_path)),
        &rendered,
    )?;
    print!("{rendered}");
    eprintln!(
        "found semiregular subgroup of order {} via {}",
        witness.order,
        witness.strategy.tag()
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CorpusEntry {
    name: String,
    vertices: usize,
    group_order: String,
    group_kind: String,
    graph_file: String,
    group_file: String,
}

fn corpus_cmd(
    out: &Path,
    max_order: Option<u128>,
    max_vertices: Option<usize>,
) -> anyhow::Result<ExitCode> {
    let mut opts = corpus::CorpusOptions::default();
    if let Some(m) = max_order {
        opts.max_group_order = m;
    }
    if let Some(m) = max_vertices {
        opts.max_vertices = m;
    }
    let table = families::parse_catalogue(corpus::embedded_table())?;
    let instances = corpus::build_corpus(&table, &opts)?;
    let mut entries = Vec::new();
    for inst in &instances {
        let graph_file = write_out(
            out,
            &format!("{}.graph.txt", inst.name),
            &inst.graph.to_text(),
        )?;
        let group_file = write_out(
            out,
            &format!("{}.group.txt", inst.name),
            &inst.group.to_text(),
        )?;
        entries.push(CorpusEntry {
            name: inst.name.clone(),
            vertices: inst.graph.vertex_count(),
            group_order: inst.group.order().to_string(),
            group_kind: inst.group_kind.to_string(),
            graph_file: graph_file.display().to_string(),
            group_file: group_file.display().to_string(),
        });
    }
    let rendered = report::render(&report::make("corpus", vec![], &entries))?;
    write_out(out, "corpus.json", &rendered)?;
    print!("{rendered}");
    eprintln!(
        "wrote {} corpus instances to {}",
        entries.len(),
        out.display()
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyData {
    sections: Vec<verify::CriterionResult>,
    pass: bool,
}

fn verify_paper_cmd(sections: &[String], out: &Path) -> anyhow::Result<ExitCode> {
    let results = verify::run_sections(sections)?;
    let pass = results.iter().all(|r| r.pass);
    let data = VerifyData {
        sections: results,
        pass,
    };
    let rendered = report::render(&report::make("verify-paper", vec![], &data))?;
    write_out(out, "verify-paper.json", &rendered)?;
    print!("{rendered}");
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".into())
}

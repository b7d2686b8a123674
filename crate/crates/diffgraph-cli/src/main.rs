//! Command-line front end: classify groups, verify predictions over a
//! corpus, sweep group families into a CSV atlas, export graphs as DOT.
//!
//! Exit codes: 0 success/agreement, 1 parse or semantic error, 2 theorem
//! mismatch, 3 resource cap exceeded, 4 I/O error.

use diffgraph_cli::{corpus, dot, json};

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use diffgraph::graph::{self, SimpleGraph};
use diffgraph::group::{self, Group, GroupError};
use diffgraph::recognize::Witness;
use diffgraph::spec::GroupSpec;
use diffgraph::theorems::{self, ClassReport, GraphClass};
use diffgraph::{DEFAULT_ELEMENT_CAP, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "diffgraph",
    about = "Power, enhanced power, commuting and difference graphs of finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one group: build its difference graph, run all class
    /// recognizers, and compare against structural predictions.
    Classify {
        /// Group description, e.g. "D30", "Z2 x Z9", "S5"
        spec: Option<String>,
        /// Read the group from a raw Cayley table file instead
        #[arg(long, value_name = "FILE")]
        cayley: Option<PathBuf>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Also write the difference graph as DOT
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Element cap for group realization
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        max_elements: usize,
        /// Seed for sampled validation of large Cayley tables
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Verify prediction/observation agreement for each group; exit 2 on
    /// any mismatch.
    Verify {
        /// Group descriptions
        #[arg(required = true)]
        specs: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        max_elements: usize,
    },
    /// Enumerate a corpus of groups up to a maximum order, verify each,
    /// and write a CSV atlas.
    Sweep {
        #[arg(long)]
        max_order: usize,
        /// all | nilpotent | cyclic | dihedral | dicyclic | products |
        /// symmetric | alternating
        #[arg(long, default_value = "all")]
        families: String,
        /// Write one CSV row per group
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Worker threads (row order is independent of parallelism)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        max_elements: usize,
    },
    /// Write one of the four graphs of a group as DOT.
    #[command(allow_missing_positional = true)]
    Export {
        /// Group description
        spec: Option<String>,
        /// Which graph to export
        #[arg(value_enum)]
        kind: ExportKind,
        /// Output path
        path: PathBuf,
        #[arg(long, value_name = "FILE")]
        cayley: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        max_elements: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportKind {
    Power,
    Enhanced,
    Commuting,
    Difference,
}

impl ExportKind {
    fn name(self) -> &'static str {
        match self {
            ExportKind::Power => "power",
            ExportKind::Enhanced => "enhanced",
            ExportKind::Commuting => "commuting",
            ExportKind::Difference => "difference",
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn group_failure(e: GroupError) -> Failure {
    match e {
        GroupError::TooLarge { .. } => Failure::new(3, e.to_string()),
        other => Failure::new(1, other.to_string()),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new(4, format!("{}: {e}", path.display()))
}

/// Load a group from a spec string or a Cayley table file.
fn load_group(
    spec: &Option<String>,
    cayley: &Option<PathBuf>,
    cap: usize,
    seed: u64,
) -> Result<(Group, Option<GroupSpec>, String), Failure> {
    match (spec, cayley) {
        (Some(_), Some(_)) => Err(Failure::new(
            1,
            "give either a group description or --cayley, not both",
        )),
        (None, None) => Err(Failure::new(
            1,
            "missing group description (or --cayley FILE)",
        )),
        (Some(text), None) => {
            let parsed = diffgraph::spec::parse(text).map_err(|e| Failure::new(1, e.to_string()))?;
            let g = group::realize(&parsed, cap).map_err(group_failure)?;
            let label = text.clone();
            Ok((g, Some(parsed), label))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            let g = group::from_cayley_text(&text, cap, seed).map_err(group_failure)?;
            let label = format!("cayley:{}", path.display());
            Ok((g, None, label))
        }
    }
}

fn witness_text(d: &SimpleGraph, w: &Witness) -> String {
    let touched = w.touched_vertices();
    if touched.is_empty() || touched.len() > 12 {
        return w.kind().to_string();
    }
    let names: Vec<&str> = touched.iter().map(|&v| d.label(v)).collect();
    format!("{} {{{}}}", w.kind(), names.join(", "))
}

fn print_report(report: &ClassReport) {
    let prof = &report.profile;
    println!("group {}  order {}", report.spec, prof.order);
    let spectrum: Vec<String> = prof.spectrum.iter().map(|o| o.to_string()).collect();
    println!(
        "spectrum {{{}}}  exponent {}  eppo {}  nilpotent {}",
        spectrum.join(", "),
        prof.exponent,
        prof.eppo,
        prof.nilpotent
    );
    println!(
        "condition A {}  condition B {}  family {}",
        prof.condition_a, prof.condition_b, prof.family
    );
    if let Some(sylow) = &prof.sylow {
        let parts: Vec<String> = sylow
            .iter()
            .map(|s| format!("{}^[size {}, exp {}]", s.prime, s.size, s.exponent))
            .collect();
        println!("sylow {}", parts.join("  "));
    }
    println!(
        "difference graph: {} vertices, {} edges",
        report.difference.vertex_count(),
        report.difference.edge_count()
    );
    if report.profile.eppo {
        println!("EPPO group: difference graph empty, class questions vacuous");
    }
    println!();
    println!(
        "{:<12} {:<9} {:<9} {:<7} witness",
        "class", "observed", "predicted", "agrees"
    );
    for (class, res) in &report.classes {
        let observed = json::status_str(res.observed.status);
        let predicted = res
            .predicted
            .map(|p| p.to_string())
            .unwrap_or_else(|| "-".into());
        let agrees = match res.agrees {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let witness = res
            .observed
            .witness
            .as_ref()
            .map(|w| witness_text(&report.difference, w))
            .unwrap_or_default();
        println!(
            "{:<12} {:<9} {:<9} {:<7} {}",
            class.name(),
            observed,
            predicted,
            agrees,
            witness
        );
    }
}

fn cmd_classify(
    spec: Option<String>,
    cayley: Option<PathBuf>,
    json_out: bool,
    dot_path: Option<PathBuf>,
    cap: usize,
    seed: u64,
) -> Result<u8, Failure> {
    let (g, parsed, label) = load_group(&spec, &cayley, cap, seed)?;
    let mut report = theorems::verify(&g, parsed.as_ref());
    report.spec = label.clone();
    if let Some(path) = dot_path {
        let name = format!("{label} difference");
        let text = dot::graph_to_dot(&name, &report.difference);
        std::fs::write(&path, text).map_err(|e| io_failure(&path, e))?;
    }
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&json::report_to_json(&report)).unwrap()
        );
    } else {
        print_report(&report);
    }
    Ok(0)
}

fn cmd_verify(specs: Vec<String>, json_out: bool, cap: usize) -> Result<u8, Failure> {
    let mut mismatch_total = 0usize;
    let mut reports = Vec::new();
    for text in &specs {
        let parsed = diffgraph::spec::parse(text).map_err(|e| Failure::new(1, e.to_string()))?;
        let g = group::realize(&parsed, cap).map_err(group_failure)?;
        reports.push(theorems::verify(&g, Some(&parsed)));
    }
    if json_out {
        let arr: Vec<serde_json::Value> = reports.iter().map(json::report_to_json).collect();
        println!("{}", serde_json::to_string_pretty(&arr).unwrap());
    }
    for report in &reports {
        let mismatches = report.mismatches();
        if !json_out {
            let verdicts: Vec<String> = report
                .classes
                .iter()
                .filter(|(_, r)| r.predicted.is_some())
                .map(|(c, r)| {
                    format!(
                        "{}={}{}",
                        c.name(),
                        json::status_str(r.observed.status),
                        if r.agrees == Some(false) { "!" } else { "" }
                    )
                })
                .collect();
            let note = if report.has_predictions() {
                verdicts.join(" ")
            } else {
                "no applicable predictions".into()
            };
            println!(
                "{:<16} order {:<6} {}",
                report.spec,
                report.profile.order,
                note
            );
        }
        for class in &mismatches {
            let res = report.get(*class);
            let witness = res
                .observed
                .witness
                .as_ref()
                .map(|w| witness_text(&report.difference, w))
                .unwrap_or_default();
            eprintln!(
                "mismatch: {} {}: predicted {:?}, observed {} ({})",
                report.spec,
                class.name(),
                res.predicted.unwrap(),
                json::status_str(res.observed.status),
                witness
            );
        }
        mismatch_total += mismatches.len();
    }
    if mismatch_total > 0 {
        eprintln!("{mismatch_total} mismatch(es)");
        Ok(2)
    } else {
        Ok(0)
    }
}

struct SweepRow {
    report: ClassReport,
}

fn sweep_row(text: &str, cap: usize) -> Result<SweepRow, Failure> {
    let parsed = diffgraph::spec::parse(text).map_err(|e| Failure::new(1, e.to_string()))?;
    let g = group::realize(&parsed, cap).map_err(group_failure)?;
    Ok(SweepRow {
        report: theorems::verify(&g, Some(&parsed)),
    })
}

fn cmd_sweep(
    max_order: usize,
    families: String,
    csv_path: Option<PathBuf>,
    jobs: usize,
    cap: usize,
) -> Result<u8, Failure> {
    let families = corpus::Families::parse(&families)
        .ok_or_else(|| Failure::new(1, format!("unknown family filter '{families}'")))?;
    let specs = corpus::corpus(max_order, families);
    let rows: Mutex<Vec<Option<SweepRow>>> =
        Mutex::new((0..specs.len()).map(|_| None).collect());
    let skipped = AtomicUsize::new(0);
    let next = AtomicUsize::new(0);
    let workers = jobs.max(1).min(specs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= specs.len() {
                    break;
                }
                match sweep_row(&specs[i], cap) {
                    Ok(row) => {
                        if families.admits_report(&row.report) {
                            rows.lock().unwrap()[i] = Some(row);
                        }
                    }
                    Err(f) if f.code == 3 => {
                        skipped.fetch_add(1, Ordering::Relaxed);
                        eprintln!("warning: skipping {}: {}", specs[i], f.message);
                    }
                    Err(f) => {
                        skipped.fetch_add(1, Ordering::Relaxed);
                        eprintln!("warning: {} failed: {}", specs[i], f.message);
                    }
                }
            });
        }
    });
    let mut rows: Vec<SweepRow> = rows.into_inner().unwrap().into_iter().flatten().collect();
    rows.sort_by(|a, b| a.report.spec.cmp(&b.report.spec));

    let mut mismatches = 0usize;
    for row in &rows {
        for class in row.report.mismatches() {
            let res = row.report.get(class);
            eprintln!(
                "mismatch: {} {}: predicted {:?}, observed {}",
                row.report.spec,
                class.name(),
                res.predicted.unwrap(),
                json::status_str(res.observed.status)
            );
            mismatches += 1;
        }
    }

    if let Some(path) = &csv_path {
        write_atlas(path, &rows).map_err(|e| io_failure(path, e))?;
    }
    println!(
        "swept {} groups ({} skipped), {} mismatches",
        rows.len(),
        skipped.load(Ordering::Relaxed),
        mismatches
    );
    Ok(if mismatches > 0 { 2 } else { 0 })
}

fn write_atlas(path: &Path, rows: &[SweepRow]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    let mut header = vec![
        "spec".to_string(),
        "order".into(),
        "spectrum".into(),
        "exponent".into(),
        "eppo".into(),
        "nilpotent".into(),
        "condition_a".into(),
        "condition_b".into(),
        "family".into(),
        "d_vertices".into(),
        "d_edges".into(),
    ];
    for class in GraphClass::ALL {
        header.push(format!("{}_observed", class.name()));
        header.push(format!("{}_predicted", class.name()));
        header.push(format!("{}_agrees", class.name()));
    }
    w.write_record(&header)?;
    for row in rows {
        let r = &row.report;
        let prof = &r.profile;
        let spectrum: Vec<String> = prof.spectrum.iter().map(|o| o.to_string()).collect();
        let mut record = vec![
            r.spec.clone(),
            prof.order.to_string(),
            spectrum.join(";"),
            prof.exponent.to_string(),
            prof.eppo.to_string(),
            prof.nilpotent.to_string(),
            prof.condition_a.to_string(),
            prof.condition_b.to_string(),
            prof.family.to_string(),
            r.difference.vertex_count().to_string(),
            r.difference.edge_count().to_string(),
        ];
        for (_, res) in &r.classes {
            record.push(json::status_str(res.observed.status).to_string());
            record.push(
                res.predicted
                    .map(|p| p.to_string())
                    .unwrap_or_default(),
            );
            record.push(res.agrees.map(|a| a.to_string()).unwrap_or_default());
        }
        w.write_record(&record)?;
    }
    w.flush()
}

fn cmd_export(
    spec: Option<String>,
    kind: ExportKind,
    path: PathBuf,
    cayley: Option<PathBuf>,
    cap: usize,
    seed: u64,
) -> Result<u8, Failure> {
    let (g, _, label) = load_group(&spec, &cayley, cap, seed)?;
    let graph = match kind {
        ExportKind::Power => graph::power_graph(&g),
        ExportKind::Enhanced => graph::enhanced_power_graph(&g),
        ExportKind::Commuting => graph::commuting_graph(&g),
        ExportKind::Difference => graph::difference_graph(&g),
    };
    let name = format!("{label} {}", kind.name());
    let text = dot::graph_to_dot(&name, &graph);
    std::fs::write(&path, text).map_err(|e| io_failure(&path, e))?;
    println!(
        "{} vertices, {} edges",
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify {
            spec,
            cayley,
            json,
            dot,
            max_elements,
            seed,
        } => cmd_classify(spec, cayley, json, dot, max_elements, seed),
        Command::Verify {
            specs,
            json,
            max_elements,
        } => cmd_verify(specs, json, max_elements),
        Command::Sweep {
            max_order,
            families,
            csv,
            jobs,
            max_elements,
        } => cmd_sweep(max_order, families, csv, jobs, max_elements),
        Command::Export {
            spec,
            kind,
            path,
            cayley,
            max_elements,
            seed,
        } => cmd_export(spec, kind, path, cayley, max_elements, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

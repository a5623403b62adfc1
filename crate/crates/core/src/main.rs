use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use homleibniz::algebra::{semidirect_product, yau_twist};
use homleibniz::corpus;
use homleibniz::io::{parse_algebra, parse_matrix_str, read_text, write_algebra, write_text};
use homleibniz::linalg::zero_vector;
use homleibniz::report::{build_report, Check, Report};
use homleibniz::Error;

#[derive(Parser)]
#[command(name = "homleibniz", version, about = "Exact analysis of split regular Hom-Leibniz algebras")]
struct Cli {
    /// Also write the full JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Print nothing on standard output.
    #[arg(long, global = true)]
    quiet: bool,
    /// Run every structural verifier and exit 1 if any fails.
    #[arg(long, global = true)]
    check_all: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hom-Leibniz identity, regularity and the Hom-Lie identities.
    Validate { path: PathBuf },
    /// Compute the root-space decomposition for the file's H.
    Decompose { path: PathBuf },
    /// Connection classes of roots with certificates.
    Connections { path: PathBuf },
    /// Class ideals and the decomposition L = U + sum I_[a].
    Decomposition { path: PathBuf },
    /// Simplicity verdict.
    Simplicity { path: PathBuf },
    /// Write the semidirect product L x| L/J as an algebra file.
    Semidirect { path: PathBuf, out: PathBuf },
    /// Write the Yau twist by the matrix in PSI as an algebra file.
    Twist { path: PathBuf, psi: PathBuf, out: PathBuf },
    /// Everything.
    Report { path: PathBuf },
    /// List the bundled algebras, or print one of them.
    Corpus { name: Option<String> },
}

const MATH: u8 = 1;
const INPUT: u8 = 2;

fn fail(e: &Error) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(if e.is_input_error() { INPUT } else { MATH })
}

fn mark(holds: bool) -> &'static str {
    if holds {
        "✓"
    } else {
        "✗"
    }
}

fn tuple(values: &[String]) -> String {
    format!("({})", values.join(", "))
}

fn describe_basis(labels: &[String], basis: &[Vec<String>]) -> String {
    if basis.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = basis
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .zip(labels)
                .filter(|(c, _)| c.as_str() != "0")
                .map(|(c, l)| match c.as_str() {
                    "1" => l.clone(),
                    "-1" => format!("-{l}"),
                    _ => format!("{c}*{l}"),
                })
                .collect();
            terms.join(" + ").replace("+ -", "- ")
        })
        .collect();
    format!("span{{{}}}", parts.join(", "))
}

fn validity_line(r: &Report) -> String {
    let names = ["Hom-Leibniz", "regular", "Hom-Lie"];
    let parts: Vec<String> = r
        .validity
        .iter()
        .zip(names)
        .map(|(c, name)| {
            if c.holds {
                format!("{name} {}", mark(true))
            } else {
                format!("{name} {} (witness {})", mark(false), c.detail.clone().unwrap_or_default())
            }
        })
        .collect();
    parts.join(", ")
}

fn decomposition_text(r: &Report, out: &mut Vec<String>) {
    let Some(d) = &r.decomposition else { return };
    let labels = &r.algebra.basis;
    out.push(format!("H = {}", describe_basis(labels, &d.h_basis)));
    out.push(format!("roots ({}):", d.roots.len()));
    for root in &d.roots {
        out.push(format!("  {}  L = {}", tuple(&root.values), describe_basis(labels, &root.space)));
    }
    out.push(format!("symmetric: {}", if d.symmetric { "yes" } else { "no" }));
}

fn classes_text(classes: &[Vec<Vec<String>>]) -> String {
    let shown: Vec<String> = classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|r| tuple(r)).collect::<Vec<_>>().join(", ")))
        .collect();
    shown.join(" ")
}

fn connections_text(r: &Report, out: &mut Vec<String>) {
    let Some(c) = &r.connections else { return };
    out.push(format!("connection classes ({}): {}", c.classes.len(), classes_text(&c.classes)));
    for cert in &c.certificates {
        let chain: Vec<String> = cert.chain.iter().map(|x| tuple(x)).collect();
        out.push(format!(
            "  {} -> {}: chain [{}], n = {}, m = {}, sign {}",
            tuple(&cert.from),
            tuple(&cert.to),
            chain.join(", "),
            cert.start_shift,
            cert.end_shift,
            if cert.end_sign > 0 { "+" } else { "-" }
        ));
    }
}

fn global_text(r: &Report, out: &mut Vec<String>) {
    let Some(g) = &r.global else { return };
    let labels = &r.algebra.basis;
    out.push(format!("U = {}", describe_basis(labels, &g.u)));
    for s in &g.summands {
        let class: Vec<String> = s.class_roots.iter().map(|x| tuple(x)).collect();
        out.push(format!("I[{}] = {}", class.join(", "), describe_basis(labels, &s.i)));
    }
    out.push(format!("direct: {} ({})", if g.direct { "yes" } else { "no" }, g.direct_reason));
}

fn j_text(r: &Report, out: &mut Vec<String>) {
    let labels = &r.algebra.basis;
    if let Some(j) = &r.j {
        out.push(format!("J = {}", describe_basis(labels, j)));
    }
    let Some(s) = &r.j_split else { return };
    let list = |rs: &[Vec<String>]| rs.iter().map(|x| tuple(x)).collect::<Vec<_>>().join(", ");
    out.push(format!("Lambda^J = {{{}}}", list(&s.lambda_j)));
    out.push(format!("Lambda^notJ = {{{}}}", list(&s.lambda_not_j)));
    if !s.mixed.is_empty() {
        out.push(format!("mixed = {{{}}}", list(&s.mixed)));
    }
    out.push(format!("maximal length: {}", mark(s.maximal_length)));
    out.push(format!(
        "root-multiplicative: {} (literal order: {})",
        mark(s.root_multiplicative.holds),
        mark(s.root_multiplicative_literal)
    ));
}

fn verdict_text(r: &Report, out: &mut Vec<String>) {
    let Some(v) = &r.verdict else { return };
    out.push(format!("verdict: {}", v.status));
    for c in &v.certificate {
        out.push(format!("  {} {}", mark(c.holds), c.property));
    }
    if let Some(w) = &v.witness {
        let mut line = format!("  witness: {}", w.kind);
        if let Some(source) = &w.source {
            line.push_str(&format!(" ({source})"));
        }
        if let Some(detail) = &w.detail {
            line.push_str(&format!(": {detail}"));
        }
        out.push(line);
    }
    for reason in &v.reasons {
        out.push(format!("  {reason}"));
    }
    for note in &v.notes {
        out.push(format!("  note: {note}"));
    }
}

fn semidirect_text(r: &Report, out: &mut Vec<String>) {
    let Some(s) = &r.semidirect else { return };
    out.push(format!("semidirect product: dim {}, Hom-Lie {}", s.dim, mark(s.hom_lie.holds)));
    for w in &s.weights {
        out.push(format!("  weights with {} embedding: {}", w.embedding, mark(w.holds)));
        for m in &w.mismatches {
            out.push(format!("    {m}"));
        }
    }
}

fn checks_text(checks: &[&Check], out: &mut Vec<String>) {
    for c in checks {
        let mut line = format!("{} {}", mark(c.holds), c.property);
        if let Some(w) = &c.witness {
            line.push_str(&format!(" (witness {w})"));
        }
        out.push(line);
    }
}

/// Which stage a command needs; missing it is a mathematical error.
fn stage_present(r: &Report, command: &Command) -> bool {
    match command {
        Command::Validate { .. } => true,
        Command::Decompose { .. } => r.decomposition.is_some(),
        Command::Connections { .. } => r.connections.is_some(),
        Command::Decomposition { .. } => r.global.is_some(),
        Command::Simplicity { .. } => r.verdict.is_some(),
        _ => r.error.is_none(),
    }
}

fn analyse(cli: &Cli, path: &Path) -> ExitCode {
    let (a, h) = match parse_algebra(path) {
        Ok(x) => x,
        Err(e) => return fail(&e),
    };
    let report = build_report(&a, &h);
    if let Some(json) = &cli.json {
        if let Err(e) = write_text(json, &report.to_json()) {
            return fail(&e);
        }
    }
    let mut out = Vec::new();
    match &cli.command {
        Command::Validate { .. } => out.push(validity_line(&report)),
        Command::Decompose { .. } => decomposition_text(&report, &mut out),
        Command::Connections { .. } => connections_text(&report, &mut out),
        Command::Decomposition { .. } => global_text(&report, &mut out),
        Command::Simplicity { .. } => verdict_text(&report, &mut out),
        _ => {
            out.push(format!("{} (dim {})", report.algebra.name, report.algebra.dim));
            out.push(validity_line(&report));
            decomposition_text(&report, &mut out);
            j_text(&report, &mut out);
            connections_text(&report, &mut out);
            global_text(&report, &mut out);
            semidirect_text(&report, &mut out);
            verdict_text(&report, &mut out);
        }
    }
    let violations = report.violations();
    if cli.check_all {
        out.push(format!(
            "checks: {} run, {} failed",
            report.checks.len(),
            violations.len()
        ));
        checks_text(&violations, &mut out);
    }
    if !cli.quiet {
        for line in &out {
            println!("{line}");
        }
    }
    let mut code = 0;
    if !stage_present(&report, &cli.command) {
        if let Some(e) = &report.error {
            eprintln!("{}", e.message);
        }
        code = MATH;
    }
    if cli.check_all && (!violations.is_empty() || report.error.is_some()) {
        code = MATH;
    }
    ExitCode::from(code)
}

fn semidirect(path: &Path, out: &Path) -> Result<String, Error> {
    let (a, h) = parse_algebra(path)?;
    let sp = semidirect_product(&a)?;
    let zero = zero_vector(a.dim());
    let h_hat: Vec<_> = h.iter().map(|x| sp.pair(&zero, x)).collect();
    write_text(out, &write_algebra(&sp.algebra, &h_hat))?;
    Ok(format!(
        "wrote {} (dim {} = 2*{} - dim J {})",
        out.display(),
        sp.algebra.dim(),
        a.dim(),
        sp.j.dim()
    ))
}

fn twist(path: &Path, psi: &Path, out: &Path) -> Result<String, Error> {
    let (a, h) = parse_algebra(path)?;
    let m = parse_matrix_str(&read_text(psi)?, &psi.display().to_string())?;
    let t = yau_twist(&a, &m)?;
    write_text(out, &write_algebra(&t, &h))?;
    Ok(format!("wrote {}", out.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let written = match &cli.command {
        Command::Semidirect { path, out } => semidirect(path, out),
        Command::Twist { path, psi, out } => twist(path, psi, out),
        Command::Corpus { name: None } => Ok(corpus::names().collect::<Vec<_>>().join("\n")),
        Command::Corpus { name: Some(n) } => corpus::source(n)
            .map(|s| s.trim_end().to_string())
            .ok_or_else(|| Error::Io(format!("no corpus algebra named {n:?}"))),
        Command::Validate { path }
        | Command::Decompose { path }
        | Command::Connections { path }
        | Command::Decomposition { path }
        | Command::Simplicity { path }
        | Command::Report { path } => return analyse(&cli, path),
    };
    match written {
        Ok(msg) => {
            if !cli.quiet {
                println!("{msg}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

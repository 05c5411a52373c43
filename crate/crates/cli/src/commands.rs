//! Command implementations. Each returns the text to print and whether a
//! counterexample was found.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use superorbit::analysis::verify::{
    check_jacobi, family_sweep, jacobi_line, verify, Claim, Counterexample, InstanceLine, SweepItem, SweepRange,
    VerifyReport,
};
use superorbit::analysis::{analyze_partition, OrbitReport, TableRow};
use superorbit::exceptional::{
    analyze_orbit, check_sample_commutators, classification_table, classify, find_orbit, orbit_labels, orbit_reps,
    ExceptionalKind,
};
use superorbit::matrixalg::osp::build_osp_for;
use superorbit::matrixalg::{build_gl, build_psl, build_sl, DynkinPyramid, MatrixFamily, SuperPartition};
use superorbit::{Error, Rational, RationalFunction, Scalar};

use crate::cache::load_or_build;
use crate::{AlgebraArg, AnalyzeArgs, Command, EnumerateArgs, FamilyArg, Format, TablesArgs, VerifyArgs};
use crate::{EXIT_COUNTEREXAMPLE, EXIT_USAGE};

/// A failed command.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input.
    Usage(String),
    /// A computation failed.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_COUNTEREXAMPLE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Failed(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownLabel(_) | Error::InvalidPartition(_) | Error::InvalidAlgebra(_) | Error::Field(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Text to print and the counterexample flag.
pub struct Output {
    pub text: String,
    pub counterexamples: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, counterexamples: false }
    }
}

pub fn run(command: &Command) -> CliResult<Output> {
    match command {
        Command::Analyze(a) => analyze(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Tables(a) => tables(a),
        Command::Verify(a) => run_verify(a),
    }
}

/// D(2,1;α) parameter mode.
enum Alpha {
    Symbolic,
    Value(Rational),
}

fn parse_alpha(s: &str) -> CliResult<Alpha> {
    if s.eq_ignore_ascii_case("symbolic") {
        return Ok(Alpha::Symbolic);
    }
    Rational::parse_text(s)
        .map(Alpha::Value)
        .map_err(|e| CliError::Usage(format!("invalid --alpha `{s}`: {e}")))
}

fn exceptional_kind(a: AlgebraArg) -> Option<ExceptionalKind> {
    match a {
        AlgebraArg::D21 => Some(ExceptionalKind::D21),
        AlgebraArg::G3 => Some(ExceptionalKind::G3),
        AlgebraArg::F4 => Some(ExceptionalKind::F4),
        _ => None,
    }
}

fn matrix_family(a: AlgebraArg) -> Option<MatrixFamily> {
    match a {
        AlgebraArg::Gl => Some(MatrixFamily::Gl),
        AlgebraArg::Sl => Some(MatrixFamily::Sl),
        AlgebraArg::Psl => Some(MatrixFamily::Psl),
        AlgebraArg::Osp => Some(MatrixFamily::Osp),
        _ => None,
    }
}

fn family(f: FamilyArg) -> MatrixFamily {
    match f {
        FamilyArg::Gl => MatrixFamily::Gl,
        FamilyArg::Sl => MatrixFamily::Sl,
        FamilyArg::Psl => MatrixFamily::Psl,
        FamilyArg::Osp => MatrixFamily::Osp,
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn render_report(r: &OrbitReport, format: Format) -> String {
    with_newline(match format {
        Format::Json => r.to_json(),
        Format::Md => r.to_markdown(),
        Format::Ascii => r.to_ascii(),
    })
}

fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    serde_json::to_string_pretty(v).map(with_newline).map_err(|e| CliError::Failed(e.to_string()))
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn analyze(a: &AnalyzeArgs) -> CliResult<Output> {
    if let Some(kind) = exceptional_kind(a.algebra) {
        let label = a
            .orbit
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("--orbit is required for {}; {}", kind.title(), label_hint(kind))))?;
        let text = match (kind, parse_alpha(&a.alpha)?) {
            (ExceptionalKind::D21, Alpha::Symbolic) => {
                let alpha = RationalFunction::variable().expect("ℚ(α) has a generator");
                analyze_exceptional(kind, Some(&alpha), label, a)?
            }
            (_, Alpha::Value(q)) => analyze_exceptional(kind, Some(&q), label, a)?,
            (_, Alpha::Symbolic) => analyze_exceptional::<Rational>(kind, None, label, a)?,
        };
        return Ok(Output::ok(text));
    }
    let fam = matrix_family(a.algebra).expect("matrix family");
    let text = a
        .partition
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("--partition is required for {}", fam.as_str())))?;
    let p: SuperPartition = text.parse()?;
    let (m, n) = (p.m(), p.n());
    let alg = match fam {
        MatrixFamily::Gl => build_gl::<Rational>(m, n)?,
        MatrixFamily::Sl => build_sl(m, n)?,
        MatrixFamily::Psl if m == n => build_psl(n)?,
        MatrixFamily::Psl => return Err(CliError::Usage(format!("psl needs a partition of (n|n), got ({m}|{n})"))),
        MatrixFamily::Osp => build_osp_for(&p)?,
    };
    let report = analyze_partition(&alg, &p, a.center)?;
    let mut out = render_report(&report, a.format);
    if a.format == Format::Ascii {
        out.push_str("  pyramid:\n");
        for line in DynkinPyramid::new(&p).render_ascii().lines() {
            out.push_str(&format!("    {line}\n"));
        }
    }
    Ok(Output::ok(out))
}

fn label_hint(kind: ExceptionalKind) -> String {
    format!("accepted labels for {}: {}", kind.title(), orbit_labels(kind).join(", "))
}

fn analyze_exceptional<S: Scalar>(kind: ExceptionalKind, alpha: Option<&S>, label: &str, a: &AnalyzeArgs) -> CliResult<String> {
    let x = load_or_build(kind, alpha)?;
    let reps = orbit_reps(&x)?;
    let rep = find_orbit(&reps, label)
        .map_err(|_| CliError::Usage(format!("unknown orbit label `{label}`; {}", label_hint(kind))))?;
    let report = analyze_orbit(&x, rep, a.center)?;
    Ok(render_report(&report, a.format))
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn enumerate(a: &EnumerateArgs) -> CliResult<Output> {
    let items = family_sweep(family(a.algebra), a.max)?;
    let text = match a.format {
        Format::Json => to_json(&items)?,
        Format::Md => sweep_markdown(&items),
        Format::Ascii => sweep_ascii(&items),
    };
    Ok(Output::ok(text))
}

fn criterion_text(r: &OrbitReport) -> &'static str {
    match r.flags.criterion {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn sweep_markdown(items: &[SweepItem]) -> String {
    let tick = |b: bool| if b { "✓" } else { " " };
    let mut s = String::from(
        "| orbit | dim g^e | reachable | strongly reachable | Panyushev | criterion |\n|---|---:|:---:|:---:|:---:|:---:|\n",
    );
    for it in items {
        let f = &it.report.flags;
        s.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            it.instance,
            it.report.dims.ge,
            tick(f.reachable),
            tick(f.strongly_reachable),
            tick(f.panyushev_generated),
            criterion_text(&it.report)
        ));
    }
    s
}

fn sweep_ascii(items: &[SweepItem]) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let width = items.iter().map(|it| it.instance.chars().count()).max().unwrap_or(5).max(5);
    let mut s = format!(
        "{:<width$}  {:>7}  {:>9}  {:>6}  {:>9}  {:>9}\n",
        "orbit", "dim g^e", "reachable", "strong", "panyushev", "criterion"
    );
    for it in items {
        let f = &it.report.flags;
        let pad = width - it.instance.chars().count();
        s.push_str(&format!(
            "{}{}  {:>7}  {:>9}  {:>6}  {:>9}  {:>9}\n",
            it.instance,
            " ".repeat(pad),
            it.report.dims.ge,
            yn(f.reachable),
            yn(f.strongly_reachable),
            yn(f.panyushev_generated),
            criterion_text(&it.report)
        ));
    }
    s
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TableDocument {
    algebra: String,
    rows: Vec<TableRow>,
}

fn classify_kind(kind: ExceptionalKind, alpha: &Alpha) -> CliResult<Vec<OrbitReport>> {
    Ok(match (kind, alpha) {
        (ExceptionalKind::D21, Alpha::Symbolic) => {
            let a = RationalFunction::variable().expect("ℚ(α) has a generator");
            classify(&load_or_build(kind, Some(&a))?)?
        }
        (_, Alpha::Value(q)) => classify(&load_or_build(kind, Some(q))?)?,
        (_, Alpha::Symbolic) => classify(&load_or_build::<Rational>(kind, None)?)?,
    })
}

fn tables(a: &TablesArgs) -> CliResult<Output> {
    let alpha = parse_alpha(&a.alpha)?;
    let mut rendered = Vec::new();
    for kind in ExceptionalKind::ALL {
        let reports = classify_kind(kind, &alpha)?;
        let text = match a.format {
            Format::Json => to_json(&TableDocument {
                algebra: kind.title().to_string(),
                rows: reports.iter().map(TableRow::from).collect(),
            })?,
            _ => classification_table(kind, &reports),
        };
        rendered.push((kind, text));
    }
    let Some(dir) = &a.out else {
        let joined = rendered.into_iter().map(|(_, t)| t).collect::<Vec<_>>().join("\n");
        return Ok(Output::ok(joined));
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::Failed(format!("create {}: {e}", dir.display())))?;
    let ext = if a.format == Format::Json { "json" } else { "md" };
    let mut log = String::new();
    for (kind, text) in rendered {
        let path = dir.join(format!("{}.{ext}", kind.as_str().to_ascii_lowercase()));
        std::fs::write(&path, text).map_err(|e| CliError::Failed(format!("write {}: {e}", path.display())))?;
        log.push_str(&format!("wrote {}\n", path.display()));
    }
    Ok(Output::ok(log))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

const COMMUTATORS: &str = "commutators";

fn claim_list() -> String {
    let mut names: Vec<&str> = Claim::ALL.iter().map(|c| c.name()).collect();
    names.push(COMMUTATORS);
    names.join(", ")
}

fn default_bound(range: &SweepRange, f: MatrixFamily) -> usize {
    let b = match f {
        MatrixFamily::Gl => range.gl,
        MatrixFamily::Sl => range.sl,
        MatrixFamily::Psl => range.psl,
        MatrixFamily::Osp => range.osp,
    };
    b.expect("default range covers every family")
}

fn sweep_range(a: &VerifyArgs) -> CliResult<SweepRange> {
    let full = SweepRange::default();
    let fam = a.family.map(family).or_else(|| a.algebra.and_then(matrix_family));
    let mut range = match fam {
        Some(f) => SweepRange::only(f, a.max.unwrap_or_else(|| default_bound(&full, f))),
        None if a.max.is_some() => {
            return Err(CliError::Usage("--max needs --family (or a matrix --algebra)".into()));
        }
        None if a.max_n.is_some() => SweepRange::only(MatrixFamily::Psl, 0),
        None => full,
    };
    if let Some(n) = a.max_n {
        range.psl = Some(n);
    }
    Ok(range)
}

fn exceptional_kinds(a: &VerifyArgs) -> Vec<ExceptionalKind> {
    match a.algebra.and_then(exceptional_kind) {
        Some(k) => vec![k],
        None => ExceptionalKind::ALL.to_vec(),
    }
}

fn jacobi_of(kind: ExceptionalKind, alpha: &Alpha) -> CliResult<InstanceLine> {
    Ok(match (kind, alpha) {
        (ExceptionalKind::D21, Alpha::Symbolic) => {
            let a = RationalFunction::variable().expect("ℚ(α) has a generator");
            jacobi_line(&load_or_build(kind, Some(&a))?.algebra)
        }
        (_, Alpha::Value(q)) => jacobi_line(&load_or_build(kind, Some(q))?.algebra),
        (_, Alpha::Symbolic) => jacobi_line(&load_or_build::<Rational>(kind, None)?.algebra),
    })
}

fn commutator_lines(kind: ExceptionalKind, alpha: &Alpha) -> CliResult<Vec<InstanceLine>> {
    let checks = match (kind, alpha) {
        (ExceptionalKind::D21, Alpha::Symbolic) => {
            let a = RationalFunction::variable().expect("ℚ(α) has a generator");
            check_sample_commutators(&load_or_build(kind, Some(&a))?)?
        }
        (_, Alpha::Value(q)) => check_sample_commutators(&load_or_build(kind, Some(q))?)?,
        (_, Alpha::Symbolic) => check_sample_commutators(&load_or_build::<Rational>(kind, None)?)?,
    };
    Ok(checks
        .into_iter()
        .map(|c| InstanceLine {
            instance: format!("{}: {}", kind.title(), c.text),
            holds: c.holds,
            data: format!("computed {}", c.computed),
        })
        .collect())
}

fn report_from_lines(claim: &str, range: String, lines: Vec<InstanceLine>, start: Instant) -> VerifyReport {
    let counterexamples = lines
        .iter()
        .filter(|l| !l.holds)
        .map(|l| Counterexample { instance: l.instance.clone(), detail: l.data.clone() })
        .collect();
    VerifyReport { claim: claim.to_string(), range, instances: lines.len(), counterexamples, lines, elapsed_ms: start.elapsed().as_millis() }
}

fn run_verify(a: &VerifyArgs) -> CliResult<Output> {
    let alpha = parse_alpha(&a.alpha)?;
    let exceptional = a.algebra.and_then(exceptional_kind).is_some();
    let start = Instant::now();
    let report = if a.claim == COMMUTATORS {
        let kinds = exceptional_kinds(a);
        let mut lines = Vec::new();
        for &k in &kinds {
            lines.extend(commutator_lines(k, &alpha)?);
        }
        let range = kinds.iter().map(|k| k.title()).collect::<Vec<_>>().join(", ");
        report_from_lines(COMMUTATORS, range, lines, start)
    } else {
        let claim: Claim = a
            .claim
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown claim `{}`; expected one of: {}", a.claim, claim_list())))?;
        if exceptional && claim != Claim::Jacobi {
            return Err(CliError::Usage(format!("--algebra D21/G3/F4 applies to jacobi and {COMMUTATORS} only")));
        }
        if claim == Claim::Jacobi && (exceptional || (a.family.is_none() && a.algebra.is_none() && a.max.is_none())) {
            let mut lines = Vec::new();
            let mut range = Vec::new();
            if !exceptional {
                let full = SweepRange::default();
                lines.extend(check_jacobi(&full)?.lines);
                range.push(full.to_string());
            }
            for k in exceptional_kinds(a) {
                lines.push(jacobi_of(k, &alpha)?);
                range.push(k.title().to_string());
            }
            report_from_lines(claim.name(), range.join(", "), lines, start)
        } else {
            verify(claim, &sweep_range(a)?)?
        }
    };
    let report = VerifyReport { elapsed_ms: start.elapsed().as_millis(), ..report };
    let text = match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).map_err(|e| CliError::Failed(e.to_string()))?;
            if let Some(o) = v.as_object_mut() {
                o.remove("elapsed_ms");
            }
            to_json(&v)?
        }
        Format::Md => verify_markdown(&report),
        Format::Ascii => with_newline(report.summary()),
    };
    Ok(Output { text, counterexamples: !report.holds() })
}

fn verify_markdown(r: &VerifyReport) -> String {
    let mut s = format!(
        "## {}\n\nRange: {}\n\n{} instances, {} counterexamples, {} ms\n\n| instance | holds | data |\n|---|:---:|---|\n",
        r.claim,
        r.range,
        r.instances,
        r.counterexamples.len(),
        r.elapsed_ms
    );
    for l in &r.lines {
        s.push_str(&format!("| {} | {} | {} |\n", l.instance, if l.holds { "✓" } else { "✗" }, l.data));
    }
    s
}

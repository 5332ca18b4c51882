//! Command-line front end: census listings, bundle reports, transformation
//! search, the consistency suite, and grid rendering, in text, JSON or SVG.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mubcurves::gf::Field;
use mubcurves::mub::bundle_report;
use mubcurves::phasespace::{
    enumerate_bundles, enumerate_structures, equation_string, sample_structures, Bundle, Curve,
    CurveClass, ENUMERATION_MAX,
};
use mubcurves::render::{ascii_bundle, svg_bundle};
use mubcurves::transforms::find_transformation;
use mubcurves::verify::run_suite;

#[derive(Parser)]
#[command(
    name = "mubcurves",
    version,
    about = "Additive curves over GF(2^n), their operator classes and mutually unbiased bases",
    after_help = "Set MUBCURVES_THREADS to cap the enumeration thread pool."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Args)]
struct CommonArgs {
    /// Field degree n for GF(2^n)
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CurvesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Use a seeded randomized search instead of the exhaustive census
    #[arg(long)]
    sampled: bool,
    /// Number of random parametrizations to try in sampled mode
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Seed for sampled mode
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Source bundle label
    #[arg(long)]
    src: String,
    /// Destination bundle label
    #[arg(long)]
    dst: String,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Bundle label to draw
    #[arg(long)]
    bundle: String,
}

#[derive(Subcommand)]
enum Command {
    /// Describe GF(2^n): modulus, self-dual basis, element table
    Field(CommonArgs),
    /// List the census of additive nonsingular curves
    Curves(CurvesArgs),
    /// List the bundles of mutually nonintersecting curves
    Bundles(CommonArgs),
    /// Report every bundle: operators, factorizations, separability
    Tables(CommonArgs),
    /// Search for a per-qubit rotation word mapping one bundle onto another
    Transform(TransformArgs),
    /// Run the consistency suite and report each check
    Verify(CommonArgs),
    /// Draw a bundle as a phase-space grid
    Render(RenderArgs),
}

/// Failures sorted by exit code: usage problems exit 2, a failed
/// verification exits 1.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<mubcurves::Error> for Failure {
    fn from(e: mubcurves::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("MUBCURVES_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Field(args) => cmd_field(args),
        Command::Curves(args) => cmd_curves(args),
        Command::Bundles(args) => cmd_bundles(args),
        Command::Tables(args) => cmd_tables(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Render(args) => cmd_render(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    let body = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(out, &format!("{body}\n"))
}

fn no_svg(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::Usage(format!(
            "{command} supports text or json output, not svg"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ElementJson {
    val: u16,
    display: String,
    trace: u8,
}

#[derive(Serialize)]
struct FieldJson {
    n: u32,
    order: u32,
    modulus: u32,
    modulus_string: String,
    basis: Vec<u16>,
    self_dual: bool,
    elements: Vec<ElementJson>,
}

fn cmd_field(args: CommonArgs) -> Result<(), Failure> {
    no_svg(args.format, "field")?;
    let field = Field::new(args.n)?;
    let elements: Vec<ElementJson> = field
        .elements()
        .map(|x| ElementJson {
            val: x.val(),
            display: field.display(x),
            trace: field.trace(x),
        })
        .collect();
    if args.format == Format::Json {
        return emit_json(
            &args.out,
            &FieldJson {
                n: field.degree(),
                order: field.order(),
                modulus: field.modulus(),
                modulus_string: field.modulus_string(),
                basis: field.basis().iter().map(|b| b.val()).collect(),
                self_dual: field.basis_is_self_dual(),
                elements,
            },
        );
    }
    let mut text = format!(
        "GF({}), degree {}, modulus {}\n",
        field.order(),
        field.degree(),
        field.modulus_string()
    );
    let basis: Vec<String> = field.basis().iter().map(|b| field.display(*b)).collect();
    let _ = writeln!(
        text,
        "basis: {} ({})",
        basis.join(", "),
        if field.basis_is_self_dual() {
            "self-dual"
        } else {
            "not self-dual"
        }
    );
    let _ = writeln!(text, "val  name  trace");
    for e in &elements {
        let _ = writeln!(text, "{:>3}  {:<4}  {}", e.val, e.display, e.trace);
    }
    emit(&args.out, &text)
}

fn kind_string(curve: &Curve) -> String {
    let kind = curve.kind();
    let mut parts = vec![kind.class.as_str().to_string()];
    if kind.alpha_degenerate {
        parts.push("alpha-degenerate".into());
    }
    if kind.beta_degenerate {
        parts.push("beta-degenerate".into());
    }
    if kind.symmetric {
        parts.push("symmetric".into());
    }
    parts.join(", ")
}

fn census_summary(census: &[Curve]) -> (usize, usize, usize) {
    let mut rays = 0;
    let mut regular = 0;
    let mut exceptional = 0;
    for curve in census {
        match curve.kind().class {
            CurveClass::Ray => rays += 1,
            CurveClass::RegularAlpha | CurveClass::RegularBeta => regular += 1,
            CurveClass::Exceptional => exceptional += 1,
        }
    }
    (rays, regular, exceptional)
}

#[derive(Serialize)]
struct CensusJson {
    n: u32,
    exhaustive: bool,
    count: usize,
    rays: usize,
    regular: usize,
    exceptional: usize,
    curves: Vec<mubcurves::phasespace::CurveJson>,
}

fn cmd_curves(args: CurvesArgs) -> Result<(), Failure> {
    let common = args.common;
    no_svg(common.format, "curves")?;
    let field = Field::new(common.n)?;
    let census = if args.sampled {
        sample_structures(&field, args.samples, args.seed)
    } else if common.n <= ENUMERATION_MAX {
        enumerate_structures(&field)?
    } else {
        return Err(Failure::Usage(format!(
            "the exhaustive census is capped at n <= {ENUMERATION_MAX}; \
             pass --sampled for a randomized, non-exhaustive search"
        )));
    };
    let (rays, regular, exceptional) = census_summary(&census);
    if common.format == Format::Json {
        return emit_json(
            &common.out,
            &CensusJson {
                n: common.n,
                exhaustive: !args.sampled,
                count: census.len(),
                rays,
                regular,
                exceptional,
                curves: census.iter().map(Curve::to_json).collect(),
            },
        );
    }
    let mut text = String::new();
    for (i, curve) in census.iter().enumerate() {
        let _ = writeln!(
            text,
            "{:>3}. {}  ({})",
            i + 1,
            equation_string(&field, curve),
            kind_string(curve)
        );
    }
    let _ = writeln!(
        text,
        "{} structures: {rays} rays, {regular} regular, {exceptional} exceptional{}",
        census.len(),
        if args.sampled {
            " (sampled, not exhaustive)"
        } else {
            ""
        }
    );
    emit(&common.out, &text)
}

fn bundles_for(field: &Field) -> Result<Vec<Bundle>, Failure> {
    Ok(enumerate_bundles(field)?)
}

fn bundle_by_label<'a>(bundles: &'a [Bundle], label: &str) -> Result<&'a Bundle, Failure> {
    bundles
        .iter()
        .find(|b| b.label() == label || b.table_label() == Some(label))
        .ok_or_else(|| {
            Failure::Usage(format!(
                "no bundle labeled {label:?}; known labels: {}",
                bundles
                    .iter()
                    .map(bundle_heading)
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        })
}

fn bundle_heading(bundle: &Bundle) -> String {
    match bundle.table_label() {
        Some(t) if t != bundle.label() => format!("{} ({t})", bundle.label()),
        _ => bundle.label().to_string(),
    }
}

fn cmd_bundles(args: CommonArgs) -> Result<(), Failure> {
    no_svg(args.format, "bundles")?;
    let field = Field::new(args.n)?;
    let bundles = bundles_for(&field)?;
    if args.format == Format::Json {
        let list: Vec<_> = bundles.iter().map(Bundle::to_json).collect();
        return emit_json(&args.out, &list);
    }
    let mut text = String::new();
    for bundle in &bundles {
        let _ = writeln!(text, "{}", bundle_heading(bundle));
        for (i, curve) in bundle.curves().iter().enumerate() {
            let _ = writeln!(text, "  {}. {}", i + 1, equation_string(&field, curve));
        }
    }
    let _ = writeln!(text, "{} bundles", bundles.len());
    emit(&args.out, &text)
}

fn cmd_tables(args: CommonArgs) -> Result<(), Failure> {
    no_svg(args.format, "tables")?;
    let field = Field::new(args.n)?;
    let bundles = bundles_for(&field)?;
    let reports = bundles
        .iter()
        .map(|b| bundle_report(&field, b))
        .collect::<Result<Vec<_>, _>>()?;
    if args.format == Format::Json {
        let list: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
        return emit_json(&args.out, &list);
    }
    let mut text = String::new();
    for report in &reports {
        let _ = writeln!(
            text,
            "# {}{}",
            report.label,
            match report.table_label.as_deref() {
                Some(t) if t != report.label => format!(" ({t})"),
                _ => String::new(),
            }
        );
        let _ = writeln!(
            text,
            "basis | curve | operators | factorized | separability"
        );
        for row in &report.rows {
            let _ = writeln!(
                text,
                "{} | {} | {} | {} | {}",
                row.index,
                row.equation,
                row.operator_labels.join(", "),
                row.tensor_strings.join(", "),
                row.separability.verdict()
            );
        }
        let _ = writeln!(text);
    }
    emit(&args.out, &text)
}

#[derive(Serialize)]
struct TransformJson {
    src: String,
    dst: String,
    word: Option<String>,
}

fn cmd_transform(args: TransformArgs) -> Result<(), Failure> {
    let common = args.common;
    no_svg(common.format, "transform")?;
    let field = Field::new(common.n)?;
    let bundles = bundles_for(&field)?;
    let src = bundle_by_label(&bundles, &args.src)?;
    let dst = bundle_by_label(&bundles, &args.dst)?;
    let word = find_transformation(&field, src, dst)?.map(|lc| lc.to_string());
    if common.format == Format::Json {
        return emit_json(
            &common.out,
            &TransformJson {
                src: args.src,
                dst: args.dst,
                word,
            },
        );
    }
    let text = format!("{}\n", word.as_deref().unwrap_or("none"));
    emit(&common.out, &text)
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn cmd_verify(args: CommonArgs) -> Result<(), Failure> {
    no_svg(args.format, "verify")?;
    let checks = run_suite(args.n)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    if args.format == Format::Json {
        let list: Vec<CheckJson> = checks
            .iter()
            .map(|c| CheckJson {
                name: c.name,
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect();
        emit_json(&args.out, &list)?;
    } else {
        let mut text = String::new();
        for c in &checks {
            let _ = writeln!(
                text,
                "{} {}: {}",
                if c.passed { "ok  " } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let _ = writeln!(
            text,
            "{}",
            if failed == 0 {
                format!("all {} checks passed", checks.len())
            } else {
                format!("{failed} of {} checks failed", checks.len())
            }
        );
        emit(&args.out, &text)?;
    }
    if failed > 0 {
        return Err(Failure::Verification(format!(
            "{failed} of {} checks failed",
            checks.len()
        )));
    }
    Ok(())
}

fn cmd_render(args: RenderArgs) -> Result<(), Failure> {
    let common = args.common;
    let field = Field::new(common.n)?;
    let bundles = bundles_for(&field)?;
    let bundle = bundle_by_label(&bundles, &args.bundle)?;
    let content = match common.format {
        Format::Text => ascii_bundle(&field, bundle),
        Format::Svg => svg_bundle(&field, bundle),
        Format::Json => {
            return Err(Failure::Usage(
                "render supports text or svg output, not json".into(),
            ))
        }
    };
    emit(&common.out, &content)
}

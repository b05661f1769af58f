//! The `rspin` command-line tool.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
//! errors and 3 when a resource budget is exceeded.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use frob_algebra::{check_knowledgeable, presets, AlgebraError, Conventions, FrobeniusAlgebra, LinearMap};
use graded_center::CenterError;
use plcw_core::{check_admissible, enumerate_structures, parse_surface, write_bordism, Bordism, Marking, PlcwError, VertexRole};
use state_sum::generators::Generator;
use state_sum::{evaluate, StateSumData, StateSumError, Word};

pub use report::{Format, RunReport};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "rspin", version, about = "r-spin surfaces, Λ_r-Frobenius algebras and state sums")]
pub struct Cli {
    /// The integer r; overrides or supplies the value in input files.
    #[arg(long, global = true)]
    pub r: Option<u32>,
    /// Cap on enumerated candidate markings and on intermediate tensor sizes.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Report)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a marked surface: structure and the vertex conditions.
    Validate { surface: PathBuf },
    /// Count r-spin structures on a surface up to fixed moves.
    Enumerate { surface: PathBuf },
    /// The Z/r-graded center of an algebra (file or preset name).
    Center { algebra: String },
    /// Check the Frobenius, closed Λ_r and knowledgeable axioms.
    Axioms { algebra: String },
    /// Evaluate a bordism file or a generator word with the state sum.
    Evaluate {
        algebra: String,
        bordism: Option<PathBuf>,
        /// A generator word such as `cup | cylinder(1) ; pants(1, 1)`.
        #[arg(long, conflicts_with = "bordism")]
        word: Option<String>,
    },
    /// Write every generator bordism for the given r into a directory.
    Generators { dir: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<PlcwError> for CliError {
    fn from(e: PlcwError) -> Self {
        let code = if matches!(e, PlcwError::Budget { .. }) { EXIT_BUDGET } else { EXIT_INPUT };
        CliError { code, message: e.to_string() }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<CenterError> for CliError {
    fn from(e: CenterError) -> Self {
        let code = match e {
            CenterError::NotLambdaR(_) | CenterError::NotIdempotent(_) => EXIT_FAIL,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<StateSumError> for CliError {
    fn from(e: StateSumError) -> Self {
        match e {
            StateSumError::Budget(_) => CliError { code: EXIT_BUDGET, message: e.to_string() },
            StateSumError::Plcw(p) => p.into(),
            StateSumError::Center(c) => c.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code with the text for stdout, or the error text for stderr.
pub fn run_args<I, T>(args: I) -> (u8, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            return (code, e.to_string());
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    if let Some(j) = cli.jobs {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run(&cli, echo) {
        Ok(rep) => (if rep.passed() { EXIT_PASS } else { EXIT_FAIL }, rep.render(cli.format)),
        Err(e) => (e.code, format!("error: {}\n", e.message)),
    }
}

pub fn run(cli: &Cli, echo: String) -> Result<RunReport, CliError> {
    let mut rep = RunReport::new(echo);
    match &cli.command {
        Command::Validate { surface } => validate(cli, surface, &mut rep)?,
        Command::Enumerate { surface } => enumerate(cli, surface, &mut rep)?,
        Command::Center { algebra } => center(cli, algebra, &mut rep)?,
        Command::Axioms { algebra } => axioms(cli, algebra, &mut rep)?,
        Command::Evaluate { algebra, bordism, word } => evaluate_cmd(cli, algebra, bordism.as_deref(), word.as_deref(), &mut rep)?,
        Command::Generators { dir } => generators(cli, dir, &mut rep)?,
    }
    Ok(rep)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn pick_r(cli: &Cli, from_file: Option<u32>) -> Result<u32, CliError> {
    match (cli.r, from_file) {
        (Some(a), Some(b)) if a != b => Err(CliError::input(format!("--r {a} disagrees with r {b} in the input"))),
        (Some(r), _) | (None, Some(r)) => {
            if r == 0 {
                Err(CliError::input("r must be positive"))
            } else {
                Ok(r)
            }
        }
        (None, None) => Err(CliError::input("r is not set; pass --r")),
    }
}

/// Complex and marking of a surface file; the standard marking when the
/// file has none.
fn load_surface(cli: &Cli, path: &Path, rep: &mut RunReport) -> Result<(plcw_core::PlcwComplex, Marking), CliError> {
    let text = read(path)?;
    rep.input("surface", text.as_bytes());
    let sf = parse_surface(&text)?;
    let r = pick_r(cli, sf.r)?;
    let m = match sf.marking {
        Some(m) => m,
        None => Marking::standard(&sf.complex, r),
    };
    Ok((sf.complex, m))
}

fn load_algebra(name: &str, rep: &mut RunReport) -> Result<FrobeniusAlgebra, CliError> {
    let path = Path::new(name);
    if path.is_file() {
        let text = read(path)?;
        rep.input("algebra", text.as_bytes());
        Ok(frob_algebra::format::parse_algebra(&text)?)
    } else {
        let a = presets::by_name(name)?;
        rep.input("algebra", frob_algebra::format::write_algebra(&a).as_bytes());
        Ok(a)
    }
}

fn validate(cli: &Cli, path: &Path, rep: &mut RunReport) -> Result<(), CliError> {
    let (k, m) = load_surface(cli, path, rep)?;
    rep.result("r", m.r);
    rep.result("cells", format!("{} vertices, {} edges, {} faces", k.vertices.len(), k.edges.len(), k.faces.len()));
    if let Err(e) = k.validate() {
        rep.check("structure", 0, 1);
        rep.note(e.to_string());
        return Ok(());
    }
    rep.check("structure", 1, 1);
    let adm = match check_admissible(&k, &m) {
        Ok(a) => a,
        Err(e) => {
            rep.check("marking", 0, 1);
            rep.note(e.to_string());
            return Ok(());
        }
    };
    rep.check("marking", 1, 1);
    let mut passed = 0;
    let mut total = 0;
    for v in &adm.vertices {
        let role = match v.role {
            VertexRole::Interior => "interior".to_string(),
            VertexRole::Puncture => "puncture".to_string(),
            VertexRole::ClosedBoundary(c) => format!("closed boundary {c}"),
            VertexRole::OtherBoundary => "other boundary".to_string(),
        };
        let verdict = match v.pass {
            None => "skipped",
            Some(true) => "pass",
            Some(false) => "fail",
        };
        if let Some(p) = v.pass {
            total += 1;
            passed += usize::from(p);
        }
        rep.result(
            format!("vertex {}", k.vertices[v.vertex]),
            format!("{role}; D={} N={} sum={} defect={} {verdict}", v.d, v.n, v.s_hat_sum, v.defect),
        );
    }
    rep.check("admissibility", passed, total);
    Ok(())
}

fn enumerate(cli: &Cli, path: &Path, rep: &mut RunReport) -> Result<(), CliError> {
    let (k, m) = load_surface(cli, path, rep)?;
    k.validate()?;
    let en = enumerate_structures(&k, m.r, u128::from(cli.budget))?;
    rep.result("r", m.r);
    rep.result("candidates", en.candidates);
    rep.result("admissible", en.admissible.len());
    rep.result("classes", en.class_count());
    let sizes = en.class_sizes().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    rep.result("class sizes", if sizes.is_empty() { "-".into() } else { sizes });
    Ok(())
}

fn fmt_vec(v: &[frob_algebra::Q]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn center(cli: &Cli, name: &str, rep: &mut RunReport) -> Result<(), CliError> {
    let a = load_algebra(name, rep)?;
    let r = pick_r(cli, a.r)?;
    let gc = graded_center::graded_center(&a, r, &Conventions::default())?;
    rep.result("algebra", &a.name);
    rep.result("basis", a.basis_names.join(" "));
    rep.result("r", r);
    rep.result("window element", fmt_vec(&a.window_element()));
    rep.result("dims", gc.dims().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    for c in &gc.components {
        rep.result(format!("C_{} super dimension", c.x), c.space().super_dim());
        for j in 0..c.dim() {
            rep.result(format!("C_{} basis {j}", c.x), fmt_vec(&c.incl.matrix.col(j)));
        }
    }
    Ok(())
}

fn axioms(cli: &Cli, name: &str, rep: &mut RunReport) -> Result<(), CliError> {
    let a = load_algebra(name, rep)?;
    let r = pick_r(cli, a.r)?;
    let conv = Conventions::default();
    rep.result("algebra", &a.name);
    rep.result("r", r);
    let fails = a.axiom_failures();
    rep.check("Frobenius algebra axioms", usize::from(fails.is_empty()), 1);
    for f in fails {
        rep.note(format!("failed {f}"));
    }
    let nak = a.nakayama()?;
    rep.check("N^r = id", usize::from(nak.pow(r) == LinearMap::identity(&a.space)), 1);
    let gc = match graded_center::graded_center(&a, r, &conv) {
        Ok(gc) => gc,
        Err(e @ (CenterError::NotLambdaR(_) | CenterError::NotIdempotent(_))) => {
            rep.check("graded center", 0, 1);
            rep.note(e.to_string());
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let closed = gc.family.check(&conv);
    let known = check_knowledgeable(&a, &gc.family, &gc.iota, &gc.pi, &conv)?;
    for report in [closed, known] {
        for (name, p, t) in report.summary() {
            rep.check(format!("{}: {name}", report.title), p, t);
        }
        for e in report.failures().take(5) {
            rep.note(format!("{}: {} failed at {}", report.title, e.relation, e.at));
        }
    }
    Ok(())
}

fn labels(ls: &[Option<i64>]) -> String {
    if ls.is_empty() {
        return "empty".into();
    }
    ls.iter().map(|l| l.map_or_else(|| "I".to_string(), |x| format!("S1_{x}"))).collect::<Vec<_>>().join(" ")
}

fn evaluate_cmd(cli: &Cli, name: &str, path: Option<&Path>, word: Option<&str>, rep: &mut RunReport) -> Result<(), CliError> {
    let a = load_algebra(name, rep)?;
    let b: Bordism = match (path, word) {
        (Some(p), None) => {
            let text = read(p)?;
            rep.input("bordism", text.as_bytes());
            let mut sf = parse_surface(&text)?;
            if sf.r.is_none() {
                let r = pick_r(cli, None)?;
                sf.marking = Some(Marking::standard(&sf.complex, r));
            } else {
                pick_r(cli, sf.r)?;
            }
            sf.to_bordism()?
        }
        (None, Some(w)) => {
            rep.input("word", w.as_bytes());
            let r = pick_r(cli, None)?;
            Word::parse(w)?.bordism(r)?
        }
        _ => return Err(CliError::input("give either a bordism file or --word")),
    };
    let r = b.marking.r;
    let data = StateSumData::new(&a, r)?;
    let budget = usize::try_from(cli.budget).unwrap_or(usize::MAX);
    let map = evaluate(&b, &data, budget)?;
    rep.result("algebra", &a.name);
    rep.result("r", r);
    rep.result("source", labels(&b.source_labels()));
    rep.result("target", labels(&b.target_labels()));
    rep.result("shape", format!("{} -> {}", map.source.dim(), map.target.dim()));
    if map.source.dim() == 1 && map.target.dim() == 1 && b.source.is_empty() && b.target.is_empty() {
        rep.result("value", map.scalar());
    } else {
        rep.result("matrix", &map.matrix);
    }
    Ok(())
}

fn file_name(g: Generator) -> String {
    let s = g.to_string().replace(", ", "_").replace('(', "_").replace(')', "");
    format!("{s}.surf")
}

fn generators(cli: &Cli, dir: &Path, rep: &mut RunReport) -> Result<(), CliError> {
    let r = pick_r(cli, None)?;
    fs::create_dir_all(dir).map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
    rep.result("r", r);
    let mut written = 0;
    for g in Generator::all(r) {
        let b = g.bordism(r)?;
        let name = file_name(g);
        let text = write_bordism(&b);
        fs::write(dir.join(&name), &text).map_err(|e| CliError::input(format!("{name}: {e}")))?;
        rep.result(g.to_string(), format!("{name} {}", report::digest(text.as_bytes())));
        written += 1;
    }
    rep.result("files", written);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_file_names() {
        assert_eq!(file_name(Generator::Pants(0, 1)), "pants_0_1.surf");
        assert_eq!(file_name(Generator::Cup), "cup.surf");
    }

    #[test]
    fn r_sources_must_agree() {
        let cli = Cli::try_parse_from(["rspin", "--r", "3", "center", "k"]).unwrap();
        assert_eq!(pick_r(&cli, Some(3)), Ok(3));
        assert_eq!(pick_r(&cli, Some(2)).unwrap_err().code, EXIT_INPUT);
        let cli = Cli::try_parse_from(["rspin", "center", "k"]).unwrap();
        assert_eq!(pick_r(&cli, None).unwrap_err().code, EXIT_INPUT);
    }
}

//! The `lowply` command line.
//!
//! Exit codes: 0 success, 1 failed re-check, 2 I/O, parse or mismatch
//! errors, 3 layout precondition failures, 4 bench bound violations.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, to_csv, to_json, BenchConfig, Family};
use crate::domination::{longest_fd_chain, verify_certificate, DominationError};
use crate::drawing::Drawing;
use crate::heavy_path::decompose;
use crate::layout::{
    layout_logply, radial_layout, regular_star_layout, star_ply2_layout, LayoutConfig, SectorMode,
    DEFAULT_ANGLE_STEP,
};
use crate::ply::{candidate_ply, exact_ply, ply_disks, sample_ply, DEFAULT_TOL};
use crate::svg::{emit_svg, SvgOptions};
use crate::tree::{complete_kary, path, random_tree, star, RootedTree, TreeFormat};

#[derive(Parser, Debug)]
#[command(name = "lowply", version, about = "Low-ply drawings of trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a tree file.
    Gen(GenArgs),
    /// Draw a tree and write drawing JSON.
    Draw(DrawArgs),
    /// Compute the ply-number of a drawing.
    Ply(PlyArgs),
    /// Emit a first-hand domination chain certificate for a drawing.
    Certify(CertifyArgs),
    /// Run the benchmark harness.
    Bench(BenchArgs),
    /// Dump the heavy-path decomposition of a tree as JSON.
    Decompose(DecomposeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum GenFamily {
    Path,
    Kary,
    Star,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FormatArg {
    EdgeList,
    Json,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Tree family.
    #[arg(long, value_enum)]
    pub family: GenFamily,
    /// Vertex count (path, random) or leaf count (star).
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Arity of complete k-ary trees.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Height of complete k-ary trees.
    #[arg(long, default_value_t = 3)]
    pub height: usize,
    /// Maximum degree of random trees.
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    /// Seed for random trees.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
    pub format: FormatArg,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Algo {
    Logply,
    Star2,
    RegularStar,
    Radial,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ModeArg {
    Half,
    Quarter,
}

#[derive(Args, Debug)]
pub struct DrawArgs {
    /// Tree file (edge list or JSON, detected from content).
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Drawing algorithm.
    #[arg(long, value_enum, default_value_t = Algo::Logply)]
    pub algo: Algo,
    /// Sector shape for logply.
    #[arg(long, value_enum, default_value_t = ModeArg::Quarter)]
    pub mode: ModeArg,
    /// Geometric base b for logply (at least 6).
    #[arg(long, default_value_t = 6.0)]
    pub base: f64,
    /// Anchor inflation λ for logply; defaults to √2 in quarter mode, 1 in half mode.
    #[arg(long)]
    pub inflation: Option<f64>,
    /// Minimum edge length for logply.
    #[arg(long, default_value_t = 1.0)]
    pub unit: f64,
    /// Radius ratio between consecutive star2 leaves.
    #[arg(long, default_value_t = 2.0)]
    pub ratio: f64,
    /// Angle step between consecutive star2 leaves, radians.
    #[arg(long, default_value_t = DEFAULT_ANGLE_STEP)]
    pub angle_step: f64,
    /// Leaf circle radius for regular-star.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Per-level shrink factor toward the root for radial.
    #[arg(long, default_value_t = 1.0)]
    pub shrink: f64,
    /// Output drawing JSON.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write an SVG rendering.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Draw ply-disks in the SVG.
    #[arg(long)]
    pub show_ply_disks: bool,
    /// Draw logply sectors in the SVG.
    #[arg(long)]
    pub show_sectors: bool,
    /// Seed recorded in the drawing metadata.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MethodArg {
    Exact,
    Candidate,
    Sample,
}

#[derive(Args, Debug)]
pub struct PlyArgs {
    /// Drawing JSON.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    pub method: MethodArg,
    /// Sample count for the sampling method.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Relative tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for the sampling method.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Tree file the drawing was made from.
    #[arg(long)]
    pub tree: PathBuf,
    /// Drawing JSON.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FamilyArg {
    Kary,
    Random,
    Star,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ReportArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Arity for the kary family.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Largest height for the kary family.
    #[arg(long, default_value_t = 4)]
    pub max_h: usize,
    /// Largest size for the random and star families.
    #[arg(long, default_value_t = 1000)]
    pub max_n: usize,
    /// Maximum degree for the random family.
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    /// Random trees per size.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Quarter)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 6.0)]
    pub base: f64,
    #[arg(long)]
    pub inflation: Option<f64>,
    #[arg(long, value_enum, default_value_t = ReportArg::Csv)]
    pub report: ReportArg,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Report file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Tree file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| fail(2, format!("{}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn read_tree(path: &Path) -> Result<RootedTree, Failure> {
    let text = read(path)?;
    RootedTree::parse(&text, TreeFormat::sniff(&text)).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn read_drawing(path: &Path) -> Result<Drawing, Failure> {
    let text = read(path)?;
    Drawing::from_json(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn layout_config(mode: ModeArg, base: f64, inflation: Option<f64>, unit: f64) -> LayoutConfig {
    let mode = match mode {
        ModeArg::Half => SectorMode::HalfDisk,
        ModeArg::Quarter => SectorMode::QuarterDisk,
    };
    let default = match mode {
        SectorMode::HalfDisk => 1.0,
        SectorMode::QuarterDisk => std::f64::consts::SQRT_2,
    };
    LayoutConfig {
        mode,
        base,
        inflation: inflation.unwrap_or(default),
        unit,
    }
}

/// Moves a drawing of `star(k)` onto a star-shaped `tree` whose root is the
/// center; the `i`-th child takes leaf `i + 1`'s position.
fn onto_star(tree: &RootedTree, d: Drawing) -> Result<Drawing, Failure> {
    let kids = tree.children(tree.root());
    if kids.len() + 1 != tree.len() {
        return Err(fail(3, format!("tree is not a star centered at its root {}", tree.id(tree.root()))));
    }
    let mut pos = vec![d.position(0); tree.len()];
    for (i, &c) in kids.iter().enumerate() {
        pos[c] = d.position(i + 1);
    }
    Ok(Drawing::of_tree(tree, pos, d.meta))
}

fn gen(a: GenArgs) -> Result<(), Failure> {
    let tree = match a.family {
        GenFamily::Path => path(a.n),
        GenFamily::Kary => complete_kary(a.k, a.height),
        GenFamily::Star => star(a.n),
        GenFamily::Random => random_tree(a.n, a.max_degree, a.seed),
    }
    .map_err(|e| fail(2, e))?;
    let format = match a.format {
        FormatArg::EdgeList => TreeFormat::EdgeList,
        FormatArg::Json => TreeFormat::Json,
    };
    let mut text = tree.serialize(format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_or_print(a.out.as_deref(), &text)
}

fn draw(a: DrawArgs) -> Result<(), Failure> {
    let tree = read_tree(&a.input)?;
    let leaves = tree.len() - 1;
    let mut sectors = Vec::new();
    let mut drawing = match a.algo {
        Algo::Logply => {
            let cfg = layout_config(a.mode, a.base, a.inflation, a.unit);
            let (d, plan) = layout_logply(&tree, &cfg).map_err(|e| fail(3, e))?;
            sectors = plan.nodes.iter().map(|n| n.sector).collect();
            d
        }
        Algo::Star2 => onto_star(&tree, star_ply2_layout(leaves, a.ratio, a.angle_step).map_err(|e| fail(3, e))?)?,
        Algo::RegularStar => onto_star(&tree, regular_star_layout(leaves, a.radius).map_err(|e| fail(3, e))?)?,
        Algo::Radial => radial_layout(&tree, a.shrink).map_err(|e| fail(3, e))?,
    };
    drawing.meta.seed = a.seed;
    write_or_print(Some(&a.out), &drawing.to_json())?;
    if let Some(svg) = &a.svg {
        let opts = SvgOptions {
            show_ply_disks: a.show_ply_disks,
            show_sectors: a.show_sectors,
            sectors: &sectors,
        };
        write_or_print(Some(svg), &emit_svg(&drawing, &opts))?;
    }
    Ok(())
}

fn ply(a: PlyArgs) -> Result<(), Failure> {
    let d = read_drawing(&a.input)?;
    let disks = ply_disks(&d).map_err(|e| fail(2, e))?;
    let report = match a.method {
        MethodArg::Exact => exact_ply(&disks, a.tol),
        MethodArg::Candidate => candidate_ply(&disks, a.tol),
        MethodArg::Sample => sample_ply(&disks, a.samples, a.seed, a.tol),
    }
    .map_err(|e| fail(2, e))?;
    emit(&format!("{}\n", report.to_json()));
    Ok(())
}

fn certify(a: CertifyArgs) -> Result<(), Failure> {
    let tree = read_tree(&a.tree)?;
    let d = read_drawing(&a.input)?;
    let code = |e: DominationError| fail(2, e);
    let cert = longest_fd_chain(&tree, &d).map_err(code)?;
    let ok = verify_certificate(&tree, &d, &cert).map_err(code)?;
    emit(&format!("{}\n", cert.to_json()));
    emit(if ok { "recheck: pass\n" } else { "recheck: fail\n" });
    if ok {
        Ok(())
    } else {
        Err(fail(1, "certificate failed the independent re-check"))
    }
}

fn bench(a: BenchArgs) -> Result<(), Failure> {
    let cfg = BenchConfig {
        family: match a.family {
            FamilyArg::Kary => Family::Kary,
            FamilyArg::Random => Family::Random,
            FamilyArg::Star => Family::Star,
        },
        k: a.k,
        max_h: a.max_h,
        max_n: a.max_n,
        max_degree: a.max_degree,
        count: a.count,
        seed: a.seed,
        layout: layout_config(a.mode, a.base, a.inflation, 1.0),
        jobs: a.jobs,
    };
    let rows = run_bench(&cfg).map_err(|e| fail(3, e))?;
    let text = match a.report {
        ReportArg::Csv => to_csv(&rows),
        ReportArg::Json => to_json(&rows) + "\n",
    };
    write_or_print(a.out.as_deref(), &text)?;
    let bad = rows.iter().filter(|r| !r.ok).count();
    if bad > 0 {
        return Err(fail(4, format!("{bad} instance(s) violate their bounds")));
    }
    Ok(())
}

fn decompose_cmd(a: DecomposeArgs) -> Result<(), Failure> {
    let tree = read_tree(&a.input)?;
    emit(&format!("{}\n", decompose(&tree).to_json(&tree)));
    Ok(())
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Draw(a) => draw(a),
        Command::Ply(a) => ply(a),
        Command::Certify(a) => certify(a),
        Command::Bench(a) => bench(a),
        Command::Decompose(a) => decompose_cmd(a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("lowply: {}", f.message);
            f.code
        }
    }
}

//! Command-line front end: cone data, the face-type table, membership
//! verdicts, witness distributions and region sweeps.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gammaface::catalog::RayCatalog;
use gammaface::entspace::{elemental_inequalities, GroundSet, SetFunctionJson};
use gammaface::faces::{membership, region_sample, witness, Face, FacePoint, Params, VerdictReport, VerdictStatus};
use gammaface::{ExactInequality, DEFAULT_TOL};
use serde::Serialize;

/// Exit code for any failure other than a negative verdict.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "gammaface", version, about = "Polymatroid cone faces and their entropic points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the elemental inequalities of Γ_n.
    Inequalities {
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// Enumerate and name the extreme rays of Γ_n.
    Rays {
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// List every pair of extreme rays with whether it spans a 2-face.
    Faces {
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// Write the table of 2-face types of Γ_4.
    Table {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether a face point is entropic. Exit code 0 = Entropic,
    /// 1 = NotEntropic, 2 = Uncharacterized, 3 = error.
    Membership {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a distribution realizing a face point, verify it and write it.
    Witness {
        #[command(flatten)]
        point: PointArgs,
        /// Exact lattice parameter: `k` sets the lattice coordinate to
        /// log2 k; `k1,k2` sets both coordinates of the grid face.
        #[arg(long)]
        k: Option<String>,
        /// Number partition `α1,α2,...` for the partition face.
        #[arg(long)]
        partition: Option<String>,
        /// File receiving the distribution as JSON (the report goes to
        /// standard output).
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample membership on a grid and write `a,b,status` rows.
    Region {
        /// Face as `(ray1,ray2)` or a type id.
        #[arg(long)]
        face: String,
        /// Grid as `AMAX,BMAX,STEP`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConeArgs {
    /// Number of random variables, 2 to 4.
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PointArgs {
    /// Face as `(ray1,ray2)`, e.g. `(U23^123,U12^12)`, or a type id.
    #[arg(long)]
    face: String,
    /// Coordinate on the first ray, in bits.
    #[arg(long)]
    a: Option<f64>,
    /// Coordinate on the second ray, in bits.
    #[arg(long)]
    b: Option<f64>,
    /// Matching tolerance, also the witness round-trip bound.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

fn emit(output: &OutputArgs, body: &[u8]) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(body).context("writing to standard output"),
    }
}

fn json_bytes<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s.into_bytes())
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(w.into_inner()?)
}

fn ground(n: usize) -> Result<GroundSet> {
    ensure!((2..=4).contains(&n), "--n must be 2, 3 or 4, got {n}");
    Ok(GroundSet::new(n)?)
}

fn check_tol(tol: f64) -> Result<()> {
    ensure!(tol > 0.0 && tol.is_finite(), "--tol must be positive, got {tol}");
    Ok(())
}

/// Subset column headers such as `h1`, `h12`.
fn subset_columns(g: GroundSet) -> Vec<String> {
    g.subsets().map(|s| format!("h{s}")).collect()
}

#[derive(Serialize)]
struct InequalityRow {
    index: usize,
    #[serde(flatten)]
    kind: gammaface::entspace::InequalityKind,
    text: String,
    coefficients: SetFunctionJson,
}

fn cmd_inequalities(cone: &ConeArgs) -> Result<()> {
    let g = ground(cone.n)?;
    let ineqs: Vec<ExactInequality> = elemental_inequalities(g);
    let body = match cone.output.format {
        Format::Json => {
            let rows: Vec<InequalityRow> = ineqs
                .iter()
                .map(|q| InequalityRow {
                    index: q.index,
                    kind: q.kind,
                    text: q.kind.to_string(),
                    coefficients: q.coefficients().to_json(),
                })
                .collect();
            json_bytes(&rows)?
        }
        Format::Csv => {
            let mut header = vec!["index".to_string(), "inequality".to_string()];
            header.extend(subset_columns(g));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows = ineqs.iter().map(|q| {
                let mut row = vec![q.index.to_string(), q.kind.to_string()];
                row.extend(q.coefficients().values().iter().map(ToString::to_string));
                row
            });
            csv_bytes(&header, rows)?
        }
    };
    emit(&cone.output, &body)
}

#[derive(Serialize)]
struct RayRow {
    index: usize,
    name: String,
    #[serde(flatten)]
    rep: SetFunctionJson,
    tight: Vec<usize>,
}

fn cmd_rays(cone: &ConeArgs) -> Result<()> {
    let cat = RayCatalog::build(ground(cone.n)?.size())?;
    let body = match cone.output.format {
        Format::Json => {
            let rows: Vec<RayRow> = cat
                .rays()
                .iter()
                .zip(cat.names())
                .enumerate()
                .map(|(index, (r, name))| RayRow {
                    index,
                    name: name.to_string(),
                    rep: r.rep.to_json(),
                    tight: r.tight.iter().copied().collect(),
                })
                .collect();
            json_bytes(&rows)?
        }
        Format::Csv => {
            let mut header = vec!["index".to_string(), "name".to_string()];
            header.extend(subset_columns(cat.ground()));
            header.push("tight".into());
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows = cat.rays().iter().zip(cat.names()).enumerate().map(|(i, (r, name))| {
                let mut row = vec![i.to_string(), name.to_string()];
                row.extend(r.integers().iter().map(ToString::to_string));
                row.push(r.tight.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
                row
            });
            csv_bytes(&header, rows)?
        }
    };
    emit(&cone.output, &body)
}

fn cmd_faces(cone: &ConeArgs) -> Result<()> {
    let cat = RayCatalog::build(ground(cone.n)?.size())?;
    let body = match cone.output.format {
        Format::Json => json_bytes(cat.faces())?,
        Format::Csv => csv_bytes(
            &["ray_i", "ray_j", "is_2face"],
            cat.faces()
                .iter()
                .map(|f| vec![f.i.to_string(), f.j.to_string(), f.is_2face.to_string()]),
        )?,
    };
    emit(&cone.output, &body)
}

fn cmd_table(output: &OutputArgs) -> Result<()> {
    let cat = RayCatalog::build(4)?;
    let types = cat.face_types();
    let body = match output.format {
        Format::Json => json_bytes(types)?,
        Format::Csv => csv_bytes(
            &["type_id", "ray1", "ray2", "count", "status", "theorem"],
            types.iter().map(|t| {
                vec![
                    t.id.to_string(),
                    t.ray1.to_string(),
                    t.ray2.to_string(),
                    t.count.to_string(),
                    t.status.to_string(),
                    t.theorem.map(|x| x.to_string()).unwrap_or_default(),
                ]
            }),
        )?,
    };
    emit(output, &body)
}

fn face_point(cat: &RayCatalog, point: &PointArgs, a: f64, b: f64) -> Result<FacePoint> {
    check_tol(point.tol)?;
    let face = Face::resolve(cat, &point.face)?;
    Ok(FacePoint::new(face, a, b)?)
}

fn required(v: Option<f64>, flag: &str) -> Result<f64> {
    v.with_context(|| format!("{flag} is required"))
}

fn cmd_membership(point: &PointArgs, output: &OutputArgs) -> Result<VerdictStatus> {
    let cat = RayCatalog::build(4)?;
    let fp = face_point(&cat, point, required(point.a, "--a")?, required(point.b, "--b")?)?;
    let verdict = membership(&fp, point.tol)?;
    let report = VerdictReport::new(&fp, &verdict);
    let body = match output.format {
        Format::Json => json_bytes(&report)?,
        Format::Csv => csv_bytes(
            &["face", "a", "b", "status"],
            [vec![report.face.clone(), report.a.to_string(), report.b.to_string(), format!("{:?}", report.status)]],
        )?,
    };
    emit(output, &body)?;
    Ok(verdict.status)
}

fn parse_list(s: &str, flag: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|x| x.trim().parse::<u64>().with_context(|| format!("{flag}: `{x}` is not a nonnegative integer")))
        .collect()
}

fn params(k: Option<&str>, partition: Option<&str>) -> Result<Option<Params>> {
    Ok(match (k, partition) {
        (Some(_), Some(_)) => bail!("--k and --partition are exclusive"),
        (Some(k), None) => match parse_list(k, "--k")?.as_slice() {
            [k] => Some(Params::K(*k)),
            [k1, k2] => Some(Params::K1K2(*k1, *k2)),
            _ => bail!("--k takes `k` or `k1,k2`"),
        },
        (None, Some(p)) => Some(Params::Partition(parse_list(p, "--partition")?)),
        (None, None) => None,
    })
}

#[derive(Serialize)]
struct WitnessReport {
    face: String,
    a: f64,
    b: f64,
    alphabets: Vec<u32>,
    outcomes: usize,
    max_error: f64,
    tol: f64,
    out: String,
}

fn cmd_witness(point: &PointArgs, k: Option<&str>, partition: Option<&str>, out: &PathBuf) -> Result<()> {
    let cat = RayCatalog::build(4)?;
    let params = params(k, partition)?;
    let (a, b) = match params {
        // coordinates the parameters do not pin default to 0
        Some(_) => (point.a.unwrap_or(0.0), point.b.unwrap_or(0.0)),
        None => (required(point.a, "--a")?, required(point.b, "--b")?),
    };
    let fp = face_point(&cat, point, a, b)?;
    let w = witness(&cat, &fp, params.as_ref(), point.tol)?;
    // compact: witness files can hold millions of outcomes
    let mut dist = serde_json::to_string(&w.dist.to_json())?;
    dist.push('\n');
    fs::write(out, dist).with_context(|| format!("writing {}", out.display()))?;
    let report = WitnessReport {
        face: fp.face.label(),
        a: w.a,
        b: w.b,
        alphabets: w.dist.alphabets().to_vec(),
        outcomes: w.dist.outcomes().len(),
        max_error: w.max_error,
        tol: point.tol,
        out: out.display().to_string(),
    };
    io::stdout().write_all(&json_bytes(&report)?)?;
    Ok(())
}

/// Grid coordinates printed without binary noise such as `0.30000000000000004`.
fn grid_number(x: f64) -> String {
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn tidy(x: f64) -> f64 {
    grid_number(x).parse().unwrap_or(x)
}

#[derive(Serialize)]
struct RegionRow {
    a: f64,
    b: f64,
    status: VerdictStatus,
}

fn cmd_region(face: &str, grid: &str, tol: f64, output: &OutputArgs) -> Result<()> {
    check_tol(tol)?;
    let cat = RayCatalog::build(4)?;
    let face = Face::resolve(&cat, face)?;
    let parts: Vec<f64> = grid
        .split(',')
        .map(|x| x.trim().parse::<f64>().with_context(|| format!("--grid: `{x}` is not a number")))
        .collect::<Result<_>>()?;
    let [a_max, b_max, step] = parts[..] else {
        bail!("--grid takes AMAX,BMAX,STEP");
    };
    let rows = region_sample(&face, a_max, b_max, step, tol)?;
    let body = match output.format {
        Format::Json => json_bytes(
            &rows
                .iter()
                .map(|(a, b, v)| RegionRow {
                    a: tidy(*a),
                    b: tidy(*b),
                    status: v.status,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Csv => csv_bytes(
            &["a", "b", "status"],
            rows.iter()
                .map(|(a, b, v)| vec![grid_number(*a), grid_number(*b), format!("{:?}", v.status)]),
        )?,
    };
    emit(output, &body)
}

/// Runs the command; `Some(status)` for membership queries.
fn run(cli: &Cli) -> Result<Option<VerdictStatus>> {
    match &cli.command {
        Command::Inequalities { cone } => cmd_inequalities(cone)?,
        Command::Rays { cone } => cmd_rays(cone)?,
        Command::Faces { cone } => cmd_faces(cone)?,
        Command::Table { output } => cmd_table(output)?,
        Command::Membership { point, output } => return cmd_membership(point, output).map(Some),
        Command::Witness {
            point,
            k,
            partition,
            out,
        } => cmd_witness(point, k.as_deref(), partition.as_deref(), out)?,
        Command::Region {
            face,
            grid,
            tol,
            output,
        } => cmd_region(face, grid, *tol, output)?,
    }
    Ok(None)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(None | Some(VerdictStatus::Entropic)) => ExitCode::SUCCESS,
        Ok(Some(VerdictStatus::NotEntropic)) => ExitCode::from(1),
        Ok(Some(VerdictStatus::Uncharacterized)) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

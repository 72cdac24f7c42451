//! `sigcurve`: signature curves and convergence studies from the command line.
//!
//! Exit codes: 0 success, 2 malformed input or arguments, 3 geometric
//! degeneracy in the samples, 4 curve model evaluated outside its domain.

mod config;
mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigcurve::affine2::{affine_signature, AffineVariant, SegmentRule};
use sigcurve::euclid2::{euclid_signature2, KappaSVariant};
use sigcurve::euclid3::{euclid_signature3, HeightRoute, Sig3Options, TauVariant};
use sigcurve::harness::{
    residual_order, run_convergence, ConvergenceReport, Estimator, Expansion, Quantity, StudyConfig,
};
use sigcurve::io::{fmt_num, parse_points, write_report, write_signature};
use sigcurve::oracle::{
    builtin_curve, oracle_affine2, oracle_euclid2, oracle_euclid3, study_partition, CurveModel,
    CurveParams, PartitionKind, PartitionSpec,
};
use sigcurve::{Error, ErrorClass, Point2, Point3, PolyCurve2, PolyCurve3, SignatureCurve};
use svg::{Plot, Series, Style};

#[derive(Parser)]
#[command(
    name = "sigcurve",
    version,
    about = "Invariant signature curves of sampled planar and space curves"
)]
struct Cli {
    /// Read default flags from a key=value file; command-line flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euclidean signature (κ, κ_s) of a planar curve.
    #[command(name = "sig2d-euclid", args_override_self = true)]
    Sig2dEuclid {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
        /// κ_s stencil.
        #[arg(long, value_enum, default_value = "s5")]
        variant: VariantArg,
        #[command(flatten)]
        output: Output,
    },
    /// Equi-affine signature (κ, κ_s) of a planar curve.
    #[command(name = "sig2d-affine", args_override_self = true)]
    Sig2dAffine {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
        /// κ_s formula.
        #[arg(long, value_enum, default_value = "new")]
        variant: VariantArg,
        /// Affine segment-length estimate.
        #[arg(long, value_enum, default_value = "four-point")]
        segments: SegmentArg,
        #[command(flatten)]
        output: Output,
    },
    /// Euclidean signature (κ, κ_s, τ, τ_s) of a space curve.
    #[command(name = "sig3d", args_override_self = true)]
    Sig3d {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
        /// κ_s stencil.
        #[arg(long, value_enum, default_value = "s5")]
        variant: VariantArg,
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Error of an estimator against the exact invariants over a ladder of step sizes.
    #[command(name = "convergence", args_override_self = true)]
    Convergence {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        sampling: Sampling,
        /// Step sizes, comma-separated and strictly decreasing.
        #[arg(long, value_parser = parse_list, default_value = "0.1,0.05,0.025,0.0125")]
        scales: NumList,
        /// Signature to study; defaults to euclid2 or euclid3 by curve dimension.
        #[arg(long, value_enum)]
        estimator: Option<EstimatorArg>,
        #[arg(long, value_enum, default_value = "kappa-s")]
        quantity: QuantityArg,
        /// Stencil or formula variant (s1..s5 for Euclidean, old|new for affine).
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_enum, default_value = "four-point")]
        segments: SegmentArg,
        #[command(flatten)]
        space: SpaceArgs,
        /// Measure the remainder of a leading-order expansion instead of the estimator error.
        #[arg(long, value_enum)]
        expansion: Option<ExpansionArg>,
        #[command(flatten)]
        output: Output,
    },
    /// Exact signature of a built-in curve at the partition points.
    #[command(name = "oracle", args_override_self = true)]
    Oracle {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        sampling: Sampling,
        /// Equi-affine instead of Euclidean invariants (planar curves).
        #[arg(long)]
        affine: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceSel {
    /// Point CSV, one point per line.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Built-in curve: polar_cos, circle, ellipse, helix, sqrt_helix.
    #[arg(long)]
    curve: Option<String>,
}

#[derive(Args)]
struct Source {
    #[command(flatten)]
    sel: SourceSel,
    #[command(flatten)]
    params: ParamArgs,
    /// Treat file input as a closed curve.
    #[arg(long)]
    closed: bool,
}

#[derive(Args)]
struct CurveArgs {
    /// Built-in curve: polar_cos, circle, ellipse, helix, sqrt_helix.
    #[arg(long)]
    curve: String,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    /// polar_cos amplitude.
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    eps: f64,
    /// polar_cos frequency.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k: f64,
    /// Circle radius.
    #[arg(long = "R", default_value_t = 1.0, allow_negative_numbers = true)]
    r: f64,
    /// Ellipse semi-axis or helix radius.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a: f64,
    /// Ellipse semi-axis or helix pitch.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
}

impl ParamArgs {
    fn model(&self, name: &str) -> sigcurve::Result<CurveModel> {
        let p = CurveParams {
            eps: self.eps,
            k: self.k,
            r: self.r,
            a: self.a,
            b: self.b,
        };
        builtin_curve(name, &p)
    }
}

#[derive(Args)]
struct Sampling {
    #[arg(long, value_enum, default_value = "regular")]
    partition: PartitionArg,
    /// Step weights of the pattern partition, comma-separated.
    #[arg(long, value_parser = parse_list)]
    weights: Option<NumList>,
    /// Step size Δt.
    #[arg(long, default_value_t = 0.05)]
    dt: f64,
    /// Parameter range `lo,hi`; values may be written as multiples of pi, e.g. `pi/2,3pi/2`.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    range: Option<(f64, f64)>,
    /// Seed of the jittered partition.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Jitter amplitude as a fraction of Δt.
    #[arg(long, default_value_t = 0.5)]
    amplitude: f64,
}

impl Sampling {
    fn kind(&self) -> PartitionKind {
        match self.partition {
            PartitionArg::Regular => PartitionKind::Regular,
            PartitionArg::Pattern => match &self.weights {
                Some(w) => PartitionKind::Pattern(w.0.clone()),
                None => PartitionKind::default_pattern(),
            },
            PartitionArg::Jitter => PartitionKind::Jitter {
                seed: self.seed,
                amplitude: self.amplitude,
            },
        }
    }

    fn partition(&self, model: &CurveModel) -> sigcurve::Result<(Vec<f64>, bool)> {
        let spec = PartitionSpec {
            kind: self.kind(),
            dt: self.dt,
            range: self.range.unwrap_or_else(|| model.domain()),
        };
        study_partition(model, &spec)
    }
}

#[derive(Args)]
struct SpaceArgs {
    /// Torsion estimator.
    #[arg(long, value_enum, default_value = "t1")]
    tau: TauArg,
    /// How tetrahedron heights are computed.
    #[arg(long, value_enum, default_value = "signed-volume")]
    height: HeightArg,
}

#[derive(Args)]
struct Output {
    /// Output CSV; standard output when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also write an SVG plot, by default next to --out.
    #[arg(long, value_name = "FILE", num_args = 0..=1)]
    plot: Option<Option<PathBuf>>,
}

impl Output {
    /// Plot path, or `None` when no plot was requested.
    fn plot_path(&self) -> Option<PathBuf> {
        match self.plot.as_ref()? {
            Some(p) => Some(p.clone()),
            None => Some(match &self.out {
                Some(out) => out.with_extension("svg"),
                None => PathBuf::from("signature.svg"),
            }),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionArg {
    Regular,
    Pattern,
    Jitter,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    S1,
    S2,
    S3,
    S4,
    S5,
    Old,
    New,
}

impl VariantArg {
    fn euclid(self) -> sigcurve::Result<KappaSVariant> {
        Ok(match self {
            VariantArg::S1 => KappaSVariant::S1,
            VariantArg::S2 => KappaSVariant::S2,
            VariantArg::S3 => KappaSVariant::S3,
            VariantArg::S4 => KappaSVariant::S4,
            VariantArg::S5 => KappaSVariant::S5,
            _ => return Err(Error::InvalidStudy("Euclidean stencils are s1..s5".into())),
        })
    }

    fn affine(self) -> sigcurve::Result<AffineVariant> {
        match self {
            VariantArg::Old => Ok(AffineVariant::Old),
            VariantArg::New => Ok(AffineVariant::New),
            _ => Err(Error::InvalidStudy("affine formulas are old|new".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SegmentArg {
    FourPoint,
    TriangleForward,
    TriangleBackward,
}

impl From<SegmentArg> for SegmentRule {
    fn from(s: SegmentArg) -> Self {
        match s {
            SegmentArg::FourPoint => SegmentRule::FourPoint,
            SegmentArg::TriangleForward => SegmentRule::TriangleForward,
            SegmentArg::TriangleBackward => SegmentRule::TriangleBackward,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TauArg {
    T1,
    T2,
}

#[derive(Clone, Copy, ValueEnum)]
enum HeightArg {
    SignedVolume,
    CayleyMenger,
}

impl SpaceArgs {
    fn options(&self, variant: KappaSVariant) -> Sig3Options {
        Sig3Options {
            kappa_s: variant,
            tau: match self.tau {
                TauArg::T1 => TauVariant::T1,
                TauArg::T2 => TauVariant::T2,
            },
            height: match self.height {
                HeightArg::SignedVolume => HeightRoute::SignedVolume,
                HeightArg::CayleyMenger => HeightRoute::CayleyMenger,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EstimatorArg {
    Euclid2,
    Affine,
    Euclid3,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Kappa,
    KappaS,
    Tau,
    TauS,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpansionArg {
    Euclid2K,
    Euclid3K,
    Tau1,
    Tau2,
    Tau2Rederived,
    AffineK,
}

#[derive(Clone, Debug)]
struct NumList(Vec<f64>);

/// A number, optionally written as a multiple or fraction of pi (`pi`, `-pi/2`, `3pi/2`, `1.5*pi`).
fn parse_num(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("invalid number '{s}'");
    let Some(pos) = s.find("pi") else {
        return s.parse().map_err(|_| bad());
    };
    let coef = match s[..pos].trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = &s[pos + 2..];
    let div = match rest.strip_prefix('/') {
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
        None if rest.is_empty() => 1.0,
        None => return Err(bad()),
    };
    Ok(coef * std::f64::consts::PI / div)
}

fn parse_list(s: &str) -> Result<NumList, String> {
    s.split(',')
        .map(parse_num)
        .collect::<Result<Vec<_>, _>>()
        .map(NumList)
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    match parse_list(s)?.0[..] {
        [lo, hi] => Ok((lo, hi)),
        _ => Err(format!("range needs two values lo,hi, got '{s}'")),
    }
}

/// Failure of a subcommand with its exit code.
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e.class() {
                ErrorClass::Input => 2,
                ErrorClass::Geometry => 3,
                ErrorClass::Domain => 4,
            },
            Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: &Output, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Outcome {
    match &out.out {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| Failure::Io(format!("cannot create {}: {e}", path.display())))?;
            let mut w = io::BufWriter::new(file);
            write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            // A closed downstream pipe (`| head`) is not an error.
            match write(&mut w).and_then(|_| w.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
                _ => {}
            }
        }
    }
    Ok(())
}

fn write_svg(path: &Path, plot: &Plot) -> Outcome {
    fs::write(path, plot.render())
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

/// Planar samples with the curve model they came from, if any.
fn load2(
    source: &Source,
    sampling: &Sampling,
) -> Result<(PolyCurve2, Option<CurveModel>), Failure> {
    match (&source.sel.input, &source.sel.curve) {
        (Some(path), _) => {
            let pts: Vec<Point2> = parse_points(&read_file(path)?)?;
            Ok((PolyCurve2::new(pts, source.closed)?, None))
        }
        (None, Some(name)) => {
            let model = source.params.model(name)?;
            let (ts, closed) = sampling.partition(&model)?;
            Ok((model.sample2(&ts, closed)?, Some(model)))
        }
        (None, None) => unreachable!("clap requires an input source"),
    }
}

fn load3(
    source: &Source,
    sampling: &Sampling,
) -> Result<(PolyCurve3, Option<CurveModel>), Failure> {
    match (&source.sel.input, &source.sel.curve) {
        (Some(path), _) => {
            let pts: Vec<Point3> = parse_points(&read_file(path)?)?;
            Ok((PolyCurve3::new(pts, source.closed)?, None))
        }
        (None, Some(name)) => {
            let model = source.params.model(name)?;
            let (ts, closed) = sampling.partition(&model)?;
            Ok((model.sample3(&ts, closed)?, Some(model)))
        }
        (None, None) => unreachable!("clap requires an input source"),
    }
}

fn report_skipped(sig: &SignatureCurve) {
    if let Some((i, e)) = sig.skipped.first() {
        eprintln!(
            "note: skipped {} indices (first at {i}: {e})",
            sig.skipped.len()
        );
    }
}

/// Exact values along the samples, skipping parameters where the oracle fails.
fn overlay(
    sig: &SignatureCurve,
    f: impl Fn(f64) -> sigcurve::Result<(f64, f64)>,
) -> Vec<(f64, f64)> {
    sig.samples
        .iter()
        .filter_map(|s| s.t)
        .filter_map(|t| f(t).ok())
        .collect()
}

fn signature_plot(
    title: &str,
    x: &str,
    y: &str,
    estimate: Vec<(f64, f64)>,
    exact: Option<Vec<(f64, f64)>>,
) -> Plot {
    let mut series = Vec::new();
    if let Some(points) = exact {
        series.push(Series {
            label: "exact".into(),
            color: "#d62728",
            style: Style::Line,
            points,
        });
    }
    series.push(Series {
        label: "estimate".into(),
        color: "#1f3b73",
        style: Style::Dots,
        points: estimate,
    });
    Plot {
        title: title.into(),
        x_label: x.into(),
        y_label: y.into(),
        series,
    }
}

fn planar_plot(sig: &SignatureCurve, title: &str, exact: Option<Vec<(f64, f64)>>) -> Plot {
    let est = sig.samples.iter().map(|s| (s.kappa, s.kappa_s)).collect();
    signature_plot(
        title,
        "curvature",
        "derivative of the curvature",
        est,
        exact,
    )
}

fn cmd_planar(
    source: &Source,
    sampling: &Sampling,
    output: &Output,
    affine: Option<(AffineVariant, SegmentRule)>,
    variant: VariantArg,
) -> Outcome {
    let (curve, model) = load2(source, sampling)?;
    let sig = match affine {
        Some((v, rule)) => affine_signature(&curve, v, rule)?,
        None => euclid_signature2(&curve, variant.euclid()?)?,
    };
    report_skipped(&sig);
    write_output(output, |w| write_signature(w, &sig, false))?;
    if let Some(path) = output.plot_path() {
        let exact = model.map(|m| match affine {
            Some(_) => overlay(&sig, |t| oracle_affine2(&m, t)),
            None => overlay(&sig, |t| oracle_euclid2(&m, t)),
        });
        let title = if affine.is_some() {
            "Equi-affine signature"
        } else {
            "Euclidean signature"
        };
        write_svg(&path, &planar_plot(&sig, title, exact))?;
    }
    Ok(())
}

fn cmd_sig3d(source: &Source, sampling: &Sampling, output: &Output, opts: Sig3Options) -> Outcome {
    let (curve, model) = load3(source, sampling)?;
    let sig = euclid_signature3(&curve, opts)?;
    write_output(output, |w| write_signature(w, &sig, true))?;
    if let Some(path) = output.plot_path() {
        let stem = path.with_extension("");
        let stem = stem.to_string_lossy();
        let exact = |f: fn(&sigcurve::oracle::OracleSample) -> (f64, f64)| {
            model
                .as_ref()
                .map(|m| overlay(&sig, |t| oracle_euclid3(m, t).map(|o| f(&o))))
        };
        let kappa = signature_plot(
            "Derivative of the Curvature vs Curvature",
            "curvature",
            "derivative of the curvature",
            sig.samples.iter().map(|s| (s.kappa, s.kappa_s)).collect(),
            exact(|o| (o.kappa, o.kappa_s)),
        );
        let tau = signature_plot(
            "Derivative of the Torsion vs Torsion",
            "torsion",
            "derivative of the torsion",
            sig.samples
                .iter()
                .filter_map(|s| Some((s.tau?, s.tau_s?)))
                .collect(),
            exact(|o| (o.tau, o.tau_s)),
        );
        write_svg(Path::new(&format!("{stem}-curvature.svg")), &kappa)?;
        write_svg(Path::new(&format!("{stem}-torsion.svg")), &tau)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_convergence(
    curve: &CurveArgs,
    sampling: &Sampling,
    scales: &NumList,
    estimator: Option<EstimatorArg>,
    quantity: QuantityArg,
    variant: Option<VariantArg>,
    segments: SegmentArg,
    space: &SpaceArgs,
    expansion: Option<ExpansionArg>,
    output: &Output,
) -> Outcome {
    let model = curve.params.model(&curve.curve)?;
    let estimator = match estimator.unwrap_or(if model.dim() == 3 {
        EstimatorArg::Euclid3
    } else {
        EstimatorArg::Euclid2
    }) {
        EstimatorArg::Euclid2 => Estimator::Euclid2 {
            variant: variant.unwrap_or(VariantArg::S5).euclid()?,
        },
        EstimatorArg::Affine => Estimator::Affine {
            variant: variant.unwrap_or(VariantArg::New).affine()?,
            rule: segments.into(),
        },
        EstimatorArg::Euclid3 => Estimator::Euclid3 {
            options: space.options(variant.unwrap_or(VariantArg::S5).euclid()?),
        },
    };
    let cfg = StudyConfig {
        curve: model,
        partition: sampling.kind(),
        range: sampling.range,
        scales: scales.0.clone(),
        estimator,
        quantity: match quantity {
            QuantityArg::Kappa => Quantity::Kappa,
            QuantityArg::KappaS => Quantity::KappaS,
            QuantityArg::Tau => Quantity::Tau,
            QuantityArg::TauS => Quantity::TauS,
        },
    };
    let report = match expansion {
        None => run_convergence(&cfg)?,
        Some(e) => residual_order(
            &cfg,
            match e {
                ExpansionArg::Euclid2K => Expansion::Euclid2K,
                ExpansionArg::Euclid3K => Expansion::Euclid3K,
                ExpansionArg::Tau1 => Expansion::Tau1,
                ExpansionArg::Tau2 => Expansion::Tau2,
                ExpansionArg::Tau2Rederived => Expansion::Tau2Rederived,
                ExpansionArg::AffineK => Expansion::AffineK,
            },
        )?,
    };
    write_output(output, |w| write_report(w, &report))?;
    if output.out.is_some() {
        eprintln!("{}", report.summary());
    }
    if let Some(path) = output.plot_path() {
        write_svg(&path, &convergence_plot(&report))?;
    }
    Ok(())
}

fn convergence_plot(report: &ConvergenceReport) -> Plot {
    let log = |f: fn(&sigcurve::harness::ScaleResult) -> f64| {
        report
            .rows
            .iter()
            .filter(|r| f(r) > 0.0)
            .map(|r| (r.scale.log10(), f(r).log10()))
            .collect::<Vec<_>>()
    };
    Plot {
        title: format!("Convergence ({})", report.summary()),
        x_label: "log10 step".into(),
        y_label: "log10 error".into(),
        series: vec![
            Series {
                label: "max error".into(),
                color: "#1f3b73",
                style: Style::Line,
                points: log(|r| r.max_err),
            },
            Series {
                label: "rms error".into(),
                color: "#d62728",
                style: Style::Line,
                points: log(|r| r.l2_err),
            },
        ],
    }
}

fn cmd_oracle(curve: &CurveArgs, sampling: &Sampling, affine: bool, output: &Output) -> Outcome {
    let model = curve.params.model(&curve.curve)?;
    let (ts, _) = sampling.partition(&model)?;
    let spatial = model.dim() == 3;
    if spatial && affine {
        return Err(
            Error::InvalidStudy("affine invariants are defined for planar curves".into()).into(),
        );
    }
    let mut rows = Vec::with_capacity(ts.len());
    for &t in &ts {
        rows.push(if spatial {
            let o = oracle_euclid3(&model, t)?;
            vec![t, o.kappa, o.kappa_s, o.tau, o.tau_s]
        } else {
            let (k, ks) = if affine {
                oracle_affine2(&model, t)?
            } else {
                oracle_euclid2(&model, t)?
            };
            vec![t, k, ks]
        });
    }
    write_output(output, |w| {
        writeln!(
            w,
            "{}",
            if spatial {
                "t,kappa,kappa_s,tau,tau_s"
            } else {
                "t,kappa,kappa_s"
            }
        )?;
        for r in &rows {
            let cells: Vec<String> = r.iter().copied().map(fmt_num).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    })?;
    if let Some(path) = output.plot_path() {
        let kappa = rows.iter().map(|r| (r[1], r[2])).collect();
        write_svg(
            &path,
            &signature_plot(
                "Exact signature",
                "curvature",
                "derivative of the curvature",
                kappa,
                None,
            ),
        )?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Sig2dEuclid {
            source,
            sampling,
            variant,
            output,
        } => cmd_planar(&source, &sampling, &output, None, variant),
        Command::Sig2dAffine {
            source,
            sampling,
            variant,
            segments,
            output,
        } => {
            let affine = Some((variant.affine()?, segments.into()));
            cmd_planar(&source, &sampling, &output, affine, variant)
        }
        Command::Sig3d {
            source,
            sampling,
            variant,
            space,
            output,
        } => cmd_sig3d(
            &source,
            &sampling,
            &output,
            space.options(variant.euclid()?),
        ),
        Command::Convergence {
            curve,
            sampling,
            scales,
            estimator,
            quantity,
            variant,
            segments,
            space,
            expansion,
            output,
        } => cmd_convergence(
            &curve, &sampling, &scales, estimator, quantity, variant, segments, &space, expansion,
            &output,
        ),
        Command::Oracle {
            curve,
            sampling,
            affine,
            output,
        } => cmd_oracle(&curve, &sampling, affine, &output),
    }
}

fn main() -> ExitCode {
    let argv = match config::expand(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

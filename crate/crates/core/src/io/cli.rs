//! `confocal generate | construct | verify | render`.
//!
//! Exit status: 0 success, 1 some check failed, 2 usage or domain error.

use super::obj::{default_slices, render_obj, Slice};
use super::svg::{render_svg, SvgOptions};
use super::{ConstructionDoc, NetDocument};
use crate::construct::{build_by_polarity, check_path_independence, ConstructionPlan};
use crate::error::{Error, Result};
use crate::lattice::{DiscreteNet, NetIndex, Window};
use crate::param::{generate, Kind, Step};
use crate::verify::{self, applicable_checks, run_check, CheckInput, CheckReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::TAU;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "confocal", version, about = "Discrete confocal coordinate systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a closed-form net and write it as a JSON document.
    Generate {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a net by successive polar steps from one seed point.
    Construct {
        #[command(flatten)]
        kind: KindArgs,
        /// Take family, u-values and window from a document instead of a kind.
        #[arg(long, conflicts_with_all = ["kind", "preset"])]
        from: Option<PathBuf>,
        /// Seed index in half-step units, e.g. `0,1` (default: regular point nearest the window centre).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        seed: Option<Vec<i64>>,
        /// Seed coordinates (default: the closed-form point at the seed).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        seed_point: Option<Vec<f64>>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant checks on a document.
    Verify {
        file: PathBuf,
        /// Comma-separated check names (default: all applicable).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, default_value_t = verify::DEFAULT_TOL)]
        tol: f64,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Draw a 2D net as SVG or export coordinate surfaces of a 3D net as OBJ.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit the classical conics (SVG).
        #[arg(long)]
        no_conics: bool,
        /// Slices `axis:q`, axis counted from 1 (OBJ; default: window middle).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        slices: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Svg,
    Obj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindName {
    TrigHyp,
    EllipticIc,
    HyperbolicIc,
    Pencil,
    Concentric,
    Gamma,
    #[value(name = "elliptic-3d")]
    Elliptic3d,
}

impl KindName {
    fn default_kind(self) -> Kind {
        match self {
            KindName::TrigHyp => Kind::fig_trig(),
            KindName::EllipticIc => Kind::fig_ic(),
            KindName::HyperbolicIc => Kind::fig_hyp_ic(),
            KindName::Pencil => Kind::fig_pencil(),
            KindName::Concentric => Kind::fig_concentric(),
            KindName::Gamma => Kind::fig_gamma(),
            KindName::Elliptic3d => Kind::fig_3d(),
        }
    }
}

/// Kind selection; unspecified parameters default to the kind's figure preset.
#[derive(Debug, Clone, Args)]
struct KindArgs {
    #[arg(long, value_enum)]
    kind: Option<KindName>,
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Kind::PRESETS))]
    preset: Option<String>,
    #[arg(short = 'a', allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(short = 'b', allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(short = 'c', allow_negative_numbers = true)]
    c: Option<f64>,
    /// Steps per period (trig), per quarter period (IC kinds) or for all axes (3D).
    #[arg(short = 'm')]
    m: Option<f64>,
    #[arg(long)]
    m1: Option<u32>,
    #[arg(long)]
    m2: Option<u32>,
    #[arg(long)]
    m3: Option<u32>,
    #[arg(short = 'k')]
    k: Option<f64>,
    /// Step of the pencil kind, or an explicit step of the hyperbolic IC kind.
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    delta2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c2: Option<f64>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    alpha: Option<Vec<i64>>,
    /// Window `lo:hi` per axis in half-step units, e.g. `-8:8,0:4`.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

fn whole(v: f64, what: &str) -> Result<u32> {
    if v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64 {
        return Err(Error::Usage(format!("{what} must be a non-negative integer, got {v}")));
    }
    Ok(v as u32)
}

impl KindArgs {
    fn given(&self) -> bool {
        self.kind.is_some() || self.preset.is_some()
    }

    fn resolve(&self) -> Result<Kind> {
        let mut kind = match (&self.preset, self.kind) {
            (Some(p), k) => {
                let kind = Kind::preset(p).ok_or_else(|| Error::Usage(format!("unknown preset '{p}'")))?;
                if let Some(k) = k {
                    if k.default_kind().name() != kind.name() {
                        return Err(Error::Usage(format!(
                            "preset '{p}' is of kind {}, not {}",
                            kind.name(),
                            k.default_kind().name()
                        )));
                    }
                }
                kind
            }
            (None, Some(k)) => k.default_kind(),
            (None, None) => return Err(Error::Usage("one of --kind or --preset is required".into())),
        };
        let set = |t: &mut f64, v: Option<f64>| {
            if let Some(v) = v {
                *t = v;
            }
        };
        match &mut kind {
            Kind::TrigHyp {
                a,
                b,
                m,
                delta2,
                c1,
                c2,
            } => {
                set(a, self.a);
                set(b, self.b);
                if let Some(v) = self.m {
                    *m = whole(v, "m")?;
                    *delta2 = TAU / *m as f64;
                }
                set(delta2, self.delta2);
                set(c1, self.c1);
                set(c2, self.c2);
            }
            Kind::EllipticIc { a, b, k, m, c1, c2 } => {
                set(a, self.a);
                set(b, self.b);
                set(k, self.k);
                set(m, self.m);
                set(c1, self.c1);
                set(c2, self.c2);
            }
            Kind::HyperbolicIc {
                a,
                b,
                k,
                step,
                c1,
                c2,
            } => {
                set(a, self.a);
                set(b, self.b);
                set(k, self.k);
                match (self.m, self.delta) {
                    (Some(_), Some(_)) => return Err(Error::Usage("give either -m or --delta".into())),
                    (Some(m), None) => *step = Step::QuarterPeriod { m },
                    (None, Some(delta)) => *step = Step::Value { delta },
                    _ => {}
                }
                set(c1, self.c1);
                set(c2, self.c2);
            }
            Kind::Pencil {
                a,
                b,
                delta,
                c1,
                c2,
            } => {
                set(a, self.a);
                set(b, self.b);
                set(delta, self.delta);
                set(c1, self.c1);
                set(c2, self.c2);
            }
            Kind::Concentric { a, b, l, c1, c2 } => {
                set(a, self.a);
                set(b, self.b);
                if let Some(v) = self.l {
                    *l = v;
                }
                set(c1, self.c1);
                set(c2, self.c2);
            }
            Kind::Gamma { alpha } => {
                if let Some(v) = &self.alpha {
                    *alpha = v.clone();
                }
            }
            Kind::Elliptic3d {
                a,
                b,
                c,
                m1,
                m2,
                m3,
            } => {
                set(a, self.a);
                set(b, self.b);
                set(c, self.c);
                if let Some(v) = self.m {
                    let m = whole(v, "m")?;
                    (*m1, *m2, *m3) = (m, m, m);
                }
                for (t, v) in [(m1, self.m1), (m2, self.m2), (m3, self.m3)] {
                    if let Some(v) = v {
                        *t = v;
                    }
                }
            }
        }
        Ok(kind)
    }

    fn window(&self) -> Result<Option<Window>> {
        self.window.as_deref().map(parse_window).transpose()
    }
}

/// `lo:hi,lo:hi,...` in half-step units.
pub fn parse_window(s: &str) -> Result<Window> {
    let bad = || Error::Usage(format!("window '{s}' is not of the form lo:hi,lo:hi"));
    let ranges = s
        .split(',')
        .map(|r| {
            let (lo, hi) = r.split_once(':').ok_or_else(bad)?;
            Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
        })
        .collect::<Result<Vec<(i64, i64)>>>()?;
    Window::from_ranges(&ranges).map_err(|e| Error::Usage(e.to_string()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn relative_deviation(a: &DiscreteNet, b: &DiscreteNet) -> f64 {
    let scale = b.scale().max(f64::MIN_POSITIVE);
    a.indices()
        .filter_map(|i| {
            let (p, q) = (a.point(&i)?, b.point(&i)?);
            Some(p.iter().zip(q).fold(0.0f64, |m, (x, y)| m.max((x - y).abs())))
        })
        .fold(0.0, f64::max)
        / scale
}

// regular vertex closest to the middle of the window
fn central_regular(net: &DiscreteNet) -> Option<NetIndex> {
    let w = net.window();
    net.indices()
        .filter(|i| net.regular_point(i).is_some())
        .min_by_key(|i| {
            (0..w.dim())
                .map(|a| (2 * i.q()[a] - w.lo()[a] - w.hi()[a]).abs())
                .sum::<i64>()
        })
}

fn cmd_generate(kind: &KindArgs, out: &Option<PathBuf>) -> Result<i32> {
    let g = generate(&kind.resolve()?, kind.window()?)?;
    let doc = NetDocument::from_generated(&g);
    emit(out, &doc.to_json()?)?;
    eprintln!(
        "{}: {} sites, {} present, {} degenerate",
        g.kind.name(),
        g.net.window().len(),
        g.net.present_count(),
        g.net.flags().iter().filter(|f| **f == crate::lattice::PointFlag::Degenerate).count()
    );
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    kind: &KindArgs,
    from: &Option<PathBuf>,
    seed: &Option<Vec<i64>>,
    seed_point: &Option<Vec<f64>>,
    trials: usize,
    rng_seed: u64,
    out: &Option<PathBuf>,
) -> Result<i32> {
    // reference net: closed form (kind) or the stored document
    let (family, useqs, reference, params, info) = match from {
        Some(path) => {
            let doc = NetDocument::read(path)?;
            (doc.family()?, doc.u_sequences.clone(), doc.net()?, doc.params.clone(), doc.info.clone())
        }
        None if kind.given() => {
            let g = generate(&kind.resolve()?, kind.window()?)?;
            (g.family, g.useqs, g.net, Some(g.kind), g.info)
        }
        None => return Err(Error::Usage("construct needs --kind/--preset or --from".into())),
    };
    let seed_index = match seed {
        Some(q) => NetIndex(q.clone()),
        None => central_regular(&reference)
            .ok_or_else(|| Error::Domain("reference net has no regular point".into()))?,
    };
    let seed_x = match seed_point {
        Some(x) => x.clone(),
        None => reference
            .point(&seed_index)
            .ok_or_else(|| Error::Domain(format!("no reference point at seed {seed_index}")))?
            .to_vec(),
    };
    let plan = ConstructionPlan::new(
        family.clone(),
        useqs.clone(),
        seed_index.clone(),
        seed_x,
        reference.window().clone(),
    )?;
    let built = build_by_polarity(&plan)?;
    let paths = check_path_independence(&plan, trials, rng_seed)?;
    let dev = seed_point
        .is_none()
        .then(|| relative_deviation(&built.net, &reference));
    eprintln!(
        "constructed {} vertices; path independence over {} pairs: max discrepancy {:.3e}{}",
        built.computed,
        paths.trials,
        paths.max_discrepancy,
        dev.map(|d| format!("; deviation from reference {d:.3e}")).unwrap_or_default()
    );
    let mut doc = NetDocument::new(&family, params, info, &built.net, &useqs);
    doc.construction = Some(ConstructionDoc::new(seed_index, &built, &paths, dev));
    emit(out, &doc.to_json()?)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    file: &PathBuf,
    checks: &Option<Vec<String>>,
    tol: f64,
    out: &Option<PathBuf>,
    format: ReportFormat,
) -> Result<i32> {
    if !(tol > 0.0) {
        return Err(Error::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let doc = NetDocument::read(file)?;
    let net = doc.net()?;
    let family = doc.family()?;
    let model = doc.model().transpose()?;
    let names: Vec<String> = match checks {
        Some(c) => c.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => applicable_checks(model.as_ref(), net.dim())
            .into_iter()
            .map(String::from)
            .collect(),
    };
    let input = CheckInput {
        net: &net,
        family: &family,
        useqs: &doc.u_sequences,
        model: model.as_ref(),
    };
    let mut reports: Vec<CheckReport> = Vec::new();
    for name in &names {
        reports.extend(run_check(name, &input, tol)?);
    }
    let json = verify::reports_to_json(&reports);
    match format {
        ReportFormat::Text => print!("{}", verify::summary(&reports)),
        ReportFormat::Json => println!("{json}"),
    }
    if let Some(p) = out {
        std::fs::write(p, json + "\n")?;
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn parse_slice(s: &str) -> Result<Slice> {
    let bad = || Error::Usage(format!("slice '{s}' is not of the form axis:q"));
    let (a, q) = s.split_once(':').ok_or_else(bad)?;
    let axis: usize = a.trim().parse().map_err(|_| bad())?;
    if axis == 0 {
        return Err(bad());
    }
    Ok(Slice {
        axis: axis - 1,
        q: q.trim().parse().map_err(|_| bad())?,
    })
}

fn cmd_render(
    file: &PathBuf,
    format: RenderFormat,
    out: &Option<PathBuf>,
    no_conics: bool,
    slices: &Option<Vec<String>>,
) -> Result<i32> {
    let doc = NetDocument::read(file)?;
    let net = doc.net()?;
    let text = match format {
        RenderFormat::Svg => render_svg(
            &net,
            &doc.family()?,
            &doc.u_sequences,
            &SvgOptions { conics: !no_conics },
        )?,
        RenderFormat::Obj => {
            let sl = match slices {
                Some(v) => v.iter().map(|s| parse_slice(s)).collect::<Result<Vec<_>>>()?,
                None => default_slices(&net),
            };
            render_obj(&net, &sl)?
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// Run the driver on `args` (including the program name); returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let res = match &cli.cmd {
        Command::Generate { kind, out } => cmd_generate(kind, out),
        Command::Construct {
            kind,
            from,
            seed,
            seed_point,
            trials,
            rng_seed,
            out,
        } => cmd_construct(kind, from, seed, seed_point, *trials, *rng_seed, out),
        Command::Verify {
            file,
            checks,
            tol,
            out,
            format,
        } => cmd_verify(file, checks, *tol, out, *format),
        Command::Render {
            file,
            format,
            out,
            no_conics,
            slices,
        } => cmd_render(file, *format, out, *no_conics, slices),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_syntax() {
        let w = parse_window("-8:8, 0:4").unwrap();
        assert_eq!(w.lo(), &[-8, 0]);
        assert!(parse_window("1-2").is_err());
        assert!(parse_window("3:1").is_err());
    }

    #[test]
    fn kind_overrides() {
        let args = KindArgs::parse_from_kind(&["--kind", "trig-hyp", "-m", "16", "-a", "3"]);
        match args.resolve().unwrap() {
            Kind::TrigHyp { a, m, delta2, .. } => {
                assert_eq!((a, m), (3.0, 16));
                assert_eq!(delta2, TAU / 16.0);
            }
            other => panic!("{other:?}"),
        }
    }

    impl KindArgs {
        fn parse_from_kind(a: &[&str]) -> Self {
            #[derive(Parser)]
            struct W {
                #[command(flatten)]
                k: KindArgs,
            }
            W::parse_from(std::iter::once("x").chain(a.iter().copied())).k
        }
    }
}

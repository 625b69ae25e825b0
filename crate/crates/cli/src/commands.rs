use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, ValueEnum};
use serde::Serialize;
use twistal::groups::{enumerate_homs, SearchOptions};
use twistal::knot::{parse_knot, KnotFormat};
use twistal::obstruct::{fibering_evidence, symplectic_obstruction, EulerClassKind};
use twistal::twisted::{divisibility_on_kernel, splice_degree, twisted_alexander};
use twistal::{fixtures, BoundRow, BundleData, CohomClass, ComplexityReport, FiniteQuotient, Method, PermGroup, Presentation, Ring, TwistedAlexResult};

use crate::cache::Cache;
use crate::error::CliError;
use crate::input::{self, Format, HomArgs, InputArgs, LabelledHom, PruneArg, RingArgs};
use crate::report::AlexReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Column deletion for deficiency-one presentations, gcd of minors otherwise.
    #[default]
    Auto,
    Wada,
    Gcd,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

#[derive(Args, Clone, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `ab` for the abelianization class, or comma-separated generator values.
    #[arg(long, default_value = "ab")]
    pub phi: String,
    #[command(flatten)]
    pub homs: HomArgs,
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    #[arg(long, env = "TWISTAL_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

struct Computed {
    input: input::Loaded,
    phi: CohomClass,
    runs: Vec<(Option<LabelledHom>, TwistedAlexResult)>,
}

fn resolve_method(arg: MethodArg, p: &Presentation) -> Method {
    match arg {
        MethodArg::Auto => Method::default_for(p),
        MethodArg::Wada => Method::WadaColumnDeletion,
        MethodArg::Gcd => Method::GcdOfMinors,
    }
}

fn compute_one(
    p: &Presentation,
    phi: &CohomClass,
    q: &FiniteQuotient,
    ring: &Ring,
    method: Method,
    cache: Option<&Cache>,
) -> Result<TwistedAlexResult, CliError> {
    let key = cache.map(|_| Cache::key(p, phi, q, ring, method));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(hit) = c.get(k) {
            return Ok(hit);
        }
    }
    let r = twisted_alexander(p, phi, q, ring, method)?;
    if let (Some(c), Some(k)) = (cache, &key) {
        c.put(k, &r)?;
    }
    Ok(r)
}

fn compute(args: &ComputeArgs, trivial_if_empty: bool) -> Result<Computed, CliError> {
    let input = input::load(&args.input)?;
    let p = &input.presentation;
    let phi = input::parse_phi(&args.phi, p)?;
    let ring = args.ring.ring()?;
    let method = resolve_method(args.method, p);
    let cache = args.cache_dir.clone().map(Cache::new).transpose()?;
    let homs = input::collect_homs(&args.homs, p)?;
    let mut runs = Vec::new();
    if homs.is_empty() && trivial_if_empty {
        let q = FiniteQuotient::trivial(p.clone());
        runs.push((None, compute_one(p, &phi, &q, &ring, method, cache.as_ref())?));
    }
    for h in homs {
        let r = compute_one(p, &phi, &h.quotient, &ring, method, cache.as_ref())?;
        runs.push((Some(h), r));
    }
    Ok(Computed { input, phi, runs })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

pub fn alex(args: &ComputeArgs) -> Result<String, CliError> {
    let c = compute(args, true)?;
    let reports: Vec<AlexReport> = c
        .runs
        .into_iter()
        .map(|(h, mut result)| {
            result.notes.extend(c.input.notes.iter().cloned());
            AlexReport {
                input: c.input.info.clone(),
                phi: c.phi.values().to_vec(),
                hom_label: h.as_ref().map(|h| h.label.clone()),
                group: h.as_ref().map(|h| h.group.clone()),
                hom: h.as_ref().map(|h| h.quotient.to_cycle_map()),
                result,
            }
        })
        .collect();
    Ok(match args.output {
        OutputFormat::Json if reports.len() == 1 => to_json(&reports[0]),
        OutputFormat::Json => to_json(&reports),
        OutputFormat::Text => reports.iter().map(AlexReport::to_text).collect::<Vec<_>>().join("\n"),
    })
}

#[derive(Args, Clone, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Target group (`Z5`, `D4`, `S4`, `A5`). Repeatable.
    #[arg(long, required = true)]
    pub group: Vec<String>,
    #[arg(long)]
    pub surjective_only: bool,
    /// Keep one hom per conjugacy class.
    #[arg(long)]
    pub up_to_conjugacy: bool,
    #[arg(long, value_enum, default_value = "auto")]
    pub conjugacy_prune: PruneArg,
    #[arg(long)]
    pub max_results: Option<usize>,
    #[arg(long, default_value_t = twistal::groups::DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub output: OutputFormat,
}

#[derive(Serialize)]
struct FoundHom {
    group: String,
    surjective: bool,
    images: std::collections::BTreeMap<String, String>,
}

pub fn search(args: &SearchArgs) -> Result<String, CliError> {
    let input = input::load(&args.input)?;
    let mut found = Vec::new();
    for spec in &args.group {
        let group = Arc::new(PermGroup::from_spec_with_cap(spec, args.order_cap)?);
        let opts = SearchOptions {
            surjective_only: args.surjective_only,
            up_to_conjugacy: args.up_to_conjugacy,
            conjugacy_prune: args.conjugacy_prune.into(),
            max_results: args.max_results,
            order_cap: args.order_cap,
        };
        for q in enumerate_homs(&input.presentation, group.clone(), opts)? {
            found.push(FoundHom {
                group: group.name(),
                surjective: q.is_surjective(),
                images: q.to_cycle_map(),
            });
        }
    }
    Ok(match args.output {
        OutputFormat::Json => to_json(&found),
        OutputFormat::Text => {
            let mut s = format!("{} homomorphisms\n", found.len());
            for f in &found {
                let images: Vec<String> = f.images.iter().map(|(k, v)| format!("{k}->{v}")).collect();
                s.push_str(&format!("{}: {}\n", f.group, images.join(" ")));
            }
            s
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EulerArg {
    Zero,
    NonTorsion,
}

#[derive(Args, Clone, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub compute: ComputeArgs,
    /// Self-intersection of the class.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub sigma_sq: i64,
    /// Declared kind of the Euler class of the bundle.
    #[arg(long, value_enum)]
    pub euler: Option<EulerArg>,
    /// Assert that b2+ exceeds one.
    #[arg(long)]
    pub b2plus: bool,
    /// Externally known norm value, used for the upper bound.
    #[arg(long)]
    pub chi_upper: Option<i64>,
    /// Bound the splice of two copies of the knot exterior: degree + 2|G|.
    #[arg(long)]
    pub splice: bool,
}

pub fn bound(args: &BoundArgs) -> Result<String, CliError> {
    let c = compute(&args.compute, false)?;
    if c.runs.is_empty() {
        return Err(CliError::Input("bound needs --hom or --group".into()));
    }
    let p = &c.input.presentation;
    let mut rows = Vec::new();
    let mut labelled = Vec::new();
    for (i, (h, r)) in c.runs.iter().enumerate() {
        let h = h.as_ref().expect("bound runs only on given homs");
        let order = h.quotient.target().order();
        let div = divisibility_on_kernel(p, &c.phi, &h.quotient)?;
        let deg = if args.splice { splice_degree(r.h1_degree, order) } else { r.h1_degree };
        rows.push(BoundRow::new(h.group.clone(), i, deg, order, div, args.sigma_sq, r.monic)?);
        labelled.push((h.label.clone(), r.clone()));
    }
    let symplectic = if labelled.iter().all(|(_, r)| r.ring == "Z") {
        Some(symplectic_obstruction(&labelled)?)
    } else {
        None
    };
    let bundle = BundleData::new(
        args.euler.map(|e| match e {
            EulerArg::Zero => EulerClassKind::Zero,
            EulerArg::NonTorsion => EulerClassKind::NonTorsion,
        }),
        args.sigma_sq,
        args.b2plus,
    );
    let report = ComplexityReport::new(bundle, rows, args.chi_upper, symplectic, fibering_evidence(&labelled));
    Ok(match args.compute.output {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => report.to_text(),
    })
}

#[derive(Args, Clone, Debug)]
pub struct FixturesArgs {
    /// Directory to write the corpus into.
    #[arg(long, default_value = "fixtures")]
    pub dir: PathBuf,
}

pub fn write_fixtures(args: &FixturesArgs) -> Result<String, CliError> {
    fs::create_dir_all(&args.dir).map_err(|e| CliError::io(&args.dir, e))?;
    let mut written = Vec::new();
    for (name, text) in fixtures::corpus() {
        let path = args.dir.join(name);
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        written.push(path.display().to_string());
    }
    Ok(written.join("\n"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParseTarget {
    Pres,
    Pd,
}

#[derive(Args, Clone, Debug)]
pub struct ParseArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "pres")]
    pub to: ParseTarget,
}

pub fn convert(args: &ParseArgs) -> Result<String, CliError> {
    if args.to == ParseTarget::Pd {
        let format = match args.input.format {
            Format::Pd => KnotFormat::Pd,
            Format::Dt => KnotFormat::Dt,
            Format::Braid => KnotFormat::Braid,
            Format::Pres => return Err(CliError::Input("a presentation cannot be turned into a PD code".into())),
        };
        let (_, text) = input::source_text(&args.input)?;
        return Ok(parse_knot(format, &text)?.emit());
    }
    let loaded = input::load(&args.input)?;
    Ok(loaded.presentation.to_text()?)
}

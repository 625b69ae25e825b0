use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use twistal::groups::{enumerate_homs, ConjugacyPrune, SearchOptions, DEFAULT_ORDER_CAP};
use twistal::knot::{parse_knot, wirtinger, zero_surgery, KnotFormat};
use twistal::laurent::is_prime;
use twistal::{CohomClass, FiniteQuotient, PermGroup, Presentation, PresentationKind, Ring};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Pres,
    Pd,
    Dt,
    Braid,
}

/// Which space the presentation should describe.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Manifold {
    /// Knot exterior for diagrams and zero-surgery files, otherwise as given.
    #[default]
    Auto,
    Exterior,
    Closed,
}

#[derive(Args, Clone, Debug)]
pub struct InputArgs {
    #[arg(long, value_enum, default_value = "pres")]
    pub format: Format,
    /// Read the input from this file.
    #[arg(long, short = 'f', conflicts_with = "input")]
    pub file: Option<PathBuf>,
    /// Inline input text.
    #[arg(long, required_unless_present = "file")]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    pub manifold: Manifold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    pub source: String,
    pub format: Format,
    pub manifold: String,
    pub generators: usize,
    pub relators: usize,
}

pub struct Loaded {
    pub presentation: Presentation,
    pub info: InputInfo,
    pub notes: Vec<String>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// `(source label, text)`.
pub fn source_text(args: &InputArgs) -> Result<(String, String), CliError> {
    match (&args.file, &args.input) {
        (Some(path), _) => Ok((path.display().to_string(), read_text(path)?)),
        (None, Some(text)) => Ok(("inline".to_string(), text.clone())),
        (None, None) => Err(CliError::Input("give --file or --input".into())),
    }
}

pub fn load(args: &InputArgs) -> Result<Loaded, CliError> {
    let (source, text) = source_text(args)?;
    let mut notes = Vec::new();
    let (presentation, manifold) = match args.format {
        Format::Pres => {
            let p = Presentation::parse(&text)?;
            resolve_presentation(p, args.manifold, &mut notes)?
        }
        Format::Pd | Format::Dt | Format::Braid => {
            let format = match args.format {
                Format::Pd => KnotFormat::Pd,
                Format::Dt => KnotFormat::Dt,
                _ => KnotFormat::Braid,
            };
            let d = wirtinger(&parse_knot(format, &text)?)?;
            match args.manifold {
                Manifold::Closed => (zero_surgery(&d)?, "closed"),
                _ => (d.presentation, "exterior"),
            }
        }
    };
    let info = InputInfo {
        source,
        format: args.format,
        manifold: manifold.to_string(),
        generators: presentation.generator_count(),
        relators: presentation.relators().len(),
    };
    Ok(Loaded {
        presentation,
        info,
        notes,
    })
}

fn resolve_presentation(
    p: Presentation,
    manifold: Manifold,
    notes: &mut Vec<String>,
) -> Result<(Presentation, &'static str), CliError> {
    let surgery = p.kind() == PresentationKind::ZeroSurgery;
    match manifold {
        Manifold::Auto | Manifold::Exterior if surgery => {
            notes.push("computed on the knot exterior: the longitude relator was dropped".into());
            Ok((p.knot_exterior()?, "exterior"))
        }
        Manifold::Auto => Ok((p, "as-given")),
        Manifold::Exterior => Ok((p, "exterior")),
        Manifold::Closed if surgery => Ok((p, "closed")),
        Manifold::Closed => {
            let lambda = p.peripheral_word("longitude").cloned().ok_or_else(|| {
                CliError::Input("--manifold closed needs a declared peripheral longitude".into())
            })?;
            notes.push("closed up by adding the longitude as a relator".into());
            let closed = p.with_relator(lambda)?.with_kind(PresentationKind::ZeroSurgery);
            Ok((closed, "closed"))
        }
    }
}

/// `ab` (or `abelianization`) or a comma-separated list of generator values.
pub fn parse_phi(spec: &str, p: &Presentation) -> Result<CohomClass, CliError> {
    let spec = spec.trim();
    if spec == "ab" || spec == "abelianization" {
        return Ok(CohomClass::abelianization(p)?);
    }
    let values = spec
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("--phi: '{v}' is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CohomClass::new(p, values)?)
}

#[derive(Args, Clone, Debug)]
pub struct RingArgs {
    /// Characteristic of the prime field used for coefficients.
    #[arg(long, default_value_t = 53)]
    pub prime: u64,
    /// Coefficient ring tag (`Z`, `F53`, `F53^2`); overrides --prime.
    #[arg(long)]
    pub ring: Option<String>,
}

impl RingArgs {
    pub fn ring(&self) -> Result<Ring, CliError> {
        if let Some(tag) = &self.ring {
            return Ok(Ring::parse(tag)?);
        }
        if !is_prime(self.prime) {
            return Err(CliError::Input(format!("--prime {} is not prime", self.prime)));
        }
        Ok(Ring::prime_field(self.prime)?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum PruneArg {
    #[default]
    Auto,
    On,
    Off,
}

impl From<PruneArg> for ConjugacyPrune {
    fn from(p: PruneArg) -> Self {
        match p {
            PruneArg::Auto => ConjugacyPrune::Auto,
            PruneArg::On => ConjugacyPrune::On,
            PruneArg::Off => ConjugacyPrune::Off,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct HomArgs {
    /// JSON file with generator images in cycle notation. Repeatable.
    #[arg(long)]
    pub hom: Vec<PathBuf>,
    /// Search epimorphisms onto this group (`Z5`, `D4`, `S4`, `A5`), one per
    /// conjugacy class. Repeatable.
    #[arg(long)]
    pub group: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

/// A quotient and the label it is reported under.
pub struct LabelledHom {
    pub label: String,
    pub group: String,
    pub quotient: FiniteQuotient,
}

pub fn collect_homs(args: &HomArgs, p: &Presentation) -> Result<Vec<LabelledHom>, CliError> {
    let mut out = Vec::new();
    for path in &args.hom {
        let text = read_text(path)?;
        let value: Value = serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.clone(),
            source,
        })?;
        let entries = match value {
            Value::Array(items) => items,
            other => vec![other],
        };
        for (i, entry) in entries.iter().enumerate() {
            let (group, images) = hom_entry(entry)
                .ok_or_else(|| CliError::Input(format!("{}: entry {i} is not a hom", path.display())))?;
            let target = match &group {
                Some(spec) => Some(Arc::new(PermGroup::from_spec_with_cap(spec, args.order_cap)?)),
                None => None,
            };
            let quotient = FiniteQuotient::from_cycle_map(p.clone(), target, &images)?;
            out.push(LabelledHom {
                label: format!("{}#{i}", path.display()),
                group: group.unwrap_or_else(|| quotient.target().name()),
                quotient,
            });
        }
    }
    for spec in &args.group {
        let group = Arc::new(PermGroup::from_spec_with_cap(spec, args.order_cap)?);
        let opts = SearchOptions {
            surjective_only: true,
            up_to_conjugacy: true,
            order_cap: args.order_cap,
            ..SearchOptions::default()
        };
        for (i, q) in enumerate_homs(p, group.clone(), opts)?.enumerate() {
            out.push(LabelledHom {
                label: format!("{}#{i}", group.name()),
                group: group.name(),
                quotient: q,
            });
        }
    }
    Ok(out)
}

/// Either `{"a": "(1 2)", ...}` or `{"group": "A5", "images": {...}}`.
fn hom_entry(v: &Value) -> Option<(Option<String>, BTreeMap<String, String>)> {
    let obj = v.as_object()?;
    let (group, images) = match obj.get("images") {
        Some(images) => (obj.get("group").and_then(Value::as_str).map(str::to_string), images.as_object()?),
        None => (None, obj),
    };
    let map = images
        .iter()
        .map(|(k, v)| Some((k.clone(), v.as_str()?.to_string())))
        .collect::<Option<BTreeMap<_, _>>>()?;
    Some((group, map))
}

//! The decision pipeline behind `spinobstruct analyze`.

use std::path::Path;
use std::time::Instant;

use spinobstruct_core::catalog::{build_framed, build_target, CatalogError, GaugeSpec, ManifoldSpec};
use spinobstruct_core::groups::models::ModelError;
use spinobstruct_core::groups::word::format_word_with;
use spinobstruct_core::groups::{
    count_spin_structures, exists_sping, spin_exists, spinc_exists, FramedGroup, FramedSource, SpinGError, SpinGOptions, TcError,
    WitnessMode,
};

use crate::config::{Config, ConfigError, Resolver};
use crate::report::{abelian_text, obstruction_text, AnalysisReport, GroupSummary, TargetReport, Timing, WitnessReport};

pub const EXIT_EXISTS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_NONE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(ConfigError),
    #[error("resource cap exceeded: {0}")]
    Cap(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Cap(_) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

fn is_cap(e: &CatalogError) -> bool {
    matches!(e, CatalogError::Tc(TcError::Exceeded(_)) | CatalogError::Model(ModelError::Tc(TcError::Exceeded(_))))
}

impl From<CatalogError> for RunError {
    fn from(e: CatalogError) -> Self {
        if is_cap(&e) {
            RunError::Cap(e.to_string())
        } else {
            RunError::Config(ConfigError::Catalog(e))
        }
    }
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Catalog(c) => c.into(),
            other => RunError::Config(other),
        }
    }
}

impl From<SpinGError> for RunError {
    fn from(e: SpinGError) -> Self {
        match e {
            SpinGError::Model(ModelError::Tc(TcError::Exceeded(n))) => RunError::Cap(TcError::Exceeded(n).to_string()),
            other => RunError::Config(ConfigError::Invalid(other.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Search for the largest-image witness and put witness tables in the report.
    pub witnesses: bool,
    pub conjugacy_dedup: bool,
    pub max_cosets: usize,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            witnesses: false,
            conjugacy_dedup: true,
            max_cosets: spinobstruct_core::groups::DEFAULT_MAX_COSETS,
            timings: false,
        }
    }
}

fn summarize(f: &FramedGroup) -> GroupSummary {
    let (ab, z_ab) = abelian_text(&f.abelian_invariants());
    let (kind, presentation, z) = match f.source() {
        FramedSource::Presented { presentation, z } => {
            ("presented", Some(presentation.to_string()), format_word_with(z, presentation.generators()))
        }
        FramedSource::Finite { group, z } => ("finite", None, group.label(*z).to_string()),
    };
    GroupSummary {
        kind: kind.into(),
        order: f.order(),
        generators: f.generator_names(),
        presentation,
        z,
        z_is_identity: f.z_is_identity(),
        i_star_injective: f.i_star_injective(),
        abelianization: ab,
        z_in_abelianization: z_ab,
    }
}

struct Clock {
    on: bool,
    entries: Vec<Timing>,
    last: Instant,
}

impl Clock {
    fn lap(&mut self, step: impl Into<String>) {
        let now = Instant::now();
        if self.on {
            self.entries.push(Timing { step: step.into(), micros: (now - self.last).as_micros() as u64 });
        }
        self.last = now;
    }
}

/// Runs every target against the framed group of `manifold`.
pub fn analyze_specs(manifold: &ManifoldSpec, targets: &[GaugeSpec], opts: &AnalyzeOptions) -> Result<AnalysisReport, RunError> {
    let mut clock = Clock { on: opts.timings, entries: Vec::new(), last: Instant::now() };
    let framed = build_framed(manifold, opts.max_cosets)?;
    clock.lap("framed group");
    let spin_c = spinc_exists(&framed);
    let spin = spin_exists(&framed);
    let spin_count = count_spin_structures(&framed).to_string();
    clock.lap("spin and spin^c");
    let sopts = SpinGOptions {
        up_to_conjugacy: opts.conjugacy_dedup,
        witness: if opts.witnesses { WitnessMode::LargestImage } else { WitnessMode::First },
        ..SpinGOptions::default()
    };
    let mut reports = Vec::new();
    for spec in targets {
        let target = build_target(spec, opts.max_cosets)?;
        let d = exists_sping(&framed, &target, &sopts)?;
        let status = match (&d.obstruction, d.exists, d.complete) {
            (_, true, _) => "exists".to_string(),
            (Some(o), false, true) => obstruction_text(o).to_string(),
            (_, false, false) => "none found (bounded search)".to_string(),
            (None, false, true) => "obstructed".to_string(),
        };
        let name = target.name();
        clock.lap(format!("target {name}"));
        reports.push(TargetReport {
            tag: spec.tag().into(),
            name,
            exists: d.exists,
            reason: d.obstruction.as_ref().map(|o| o.reason().to_string()),
            status,
            complete: d.complete,
            witness: if opts.witnesses { d.witness.as_ref().map(|w| WitnessReport::new(w, &d.source_generators)) } else { None },
        });
    }
    let exists_any = if targets.is_empty() { spin } else { reports.iter().any(|t| t.exists) };
    Ok(AnalysisReport {
        manifold: manifold.label(),
        manifold_type: manifold.tag().into(),
        group: summarize(&framed),
        spin_c,
        spin,
        spin_count,
        targets: reports,
        exists_any,
        timings: opts.timings.then_some(clock.entries),
    })
}

/// Resolves `cfg` (with `group_file` paths relative to `base`) and analyzes it.
pub fn analyze(cfg: &Config, base: &Path, opts: &AnalyzeOptions) -> Result<AnalysisReport, RunError> {
    let resolver = Resolver::new(base, opts.max_cosets);
    let manifold = resolver.manifold(&cfg.manifold)?;
    let targets = cfg.gauge.items().iter().map(|g| resolver.gauge(g)).collect::<Result<Vec<_>, _>>()?;
    analyze_specs(&manifold, &targets, opts)
}

pub fn exit_code(report: &AnalysisReport) -> i32 {
    if report.exists_any {
        EXIT_EXISTS
    } else {
        EXIT_NONE
    }
}

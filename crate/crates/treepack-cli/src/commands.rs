//! Command implementations: decompose, solve, bench, generate, fixtures.
//!
//! Each command returns a [`Report`] — command echo, input digest, stage
//! timings, payload digest/location, and verification verdicts. The caller
//! derives the exit code from the verdicts: zero exactly when every verdict
//! is true (an empty verdict list is vacuously true).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use num_traits::Zero;
use serde_json::Value;

use treepack_core::constructions::{
    cover_from_layering, fat_cover, grid_path_layered_decomposition,
    narrow_strip_decomposition, power_decomposition, unit_disk_layered_decomposition,
    GeneralCover,
};
use treepack_core::family::{
    exact_mwis, verify_distance_packing, verify_packing, SubgraphFamily, WeightMap,
};
use treepack_core::fixtures::{fixture, fixture_names, FixtureData};
use treepack_core::generators::{bfs_layering, generate, random_tree_decomposition, random_weights, GenSpec};
use treepack_core::geometry::{
    fatness_constant, horizontal_part, intersection_graph, FatKind, FatnessProfile,
    GeometricInstance,
};
use treepack_core::graph::Graph;
use treepack_core::ptas::{ptas_distance_d, ptas_over_cover, shifting_ptas};
use treepack_core::rational::{ceil_u64, format_rational, parse_rational, rat_u};
use treepack_core::solver::{solve_packing, PackingInstance};
use treepack_core::treedec::{
    independence_number, layered_independence_number, validate_decomposition, Layering,
    TreeDecomposition,
};
use treepack_core::Rational;

use crate::formats::{
    approx_to_json, decomposition_from_json, decomposition_to_json, digest_label,
    family_from_json, genspec_from_json, genspec_to_json, graph_to_json, instance_to_json,
    load_input, payload_digest, read_json, render, solution_to_json, InputData, LoadedInput,
};

// ---------------------------------------------------------------------------
// Run reports
// ---------------------------------------------------------------------------

/// Everything a command run reports: the echoed command line, the input
/// digest, informational notes, per-stage timings, the payload (inline or
/// written to a file) with its timing-independent digest, and the
/// verification verdicts that decide the exit code.
pub struct Report {
    command: String,
    input_label: Option<String>,
    input_digest: Option<String>,
    notes: Vec<String>,
    timings: Vec<(&'static str, u128)>,
    payload_digest: Option<String>,
    payload_location: Option<String>,
    payload_inline: Option<String>,
    no_verify: bool,
    verdicts: Vec<(&'static str, bool)>,
}

impl Report {
    fn new(command: String) -> Self {
        Report {
            command,
            input_label: None,
            input_digest: None,
            notes: Vec::new(),
            timings: Vec::new(),
            payload_digest: None,
            payload_location: None,
            payload_inline: None,
            no_verify: false,
            verdicts: Vec::new(),
        }
    }

    fn set_input(&mut self, loaded: &LoadedInput) {
        self.input_label = Some(loaded.label.clone());
        self.input_digest = Some(loaded.digest.clone());
    }

    fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    fn stage(&mut self, name: &'static str, started: Instant) {
        self.timings.push((name, started.elapsed().as_millis()));
    }

    /// Writes a JSON payload to `out` (or keeps it for stdout) and records
    /// its digest, computed with all `elapsed_ms` fields zeroed so timings
    /// never affect reproducibility checks.
    fn attach_json(&mut self, v: &Value, out: Option<&Path>) -> Result<()> {
        self.payload_digest = Some(payload_digest(v));
        let text = render(v);
        match out {
            Some(path) => {
                fs::write(path, &text)
                    .with_context(|| format!("cannot write {}", path.display()))?;
                self.payload_location = Some(path.display().to_string());
            }
            None => self.payload_inline = Some(text),
        }
        Ok(())
    }

    /// Whether every verdict passed (vacuously true when none were run).
    pub fn all_verdicts_true(&self) -> bool {
        self.verdicts.iter().all(|&(_, ok)| ok)
    }

    /// Prints the report to stdout.
    pub fn print(&self) {
        // Write through a fallible handle so a closed pipe (e.g. `| head`)
        // ends output quietly instead of panicking.
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let _ = self.write_to(&mut out);
    }

    fn write_to(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "command: {}", self.command)?;
        if let Some(label) = &self.input_label {
            writeln!(out, "input: {label}")?;
        }
        if let Some(digest) = &self.input_digest {
            writeln!(out, "instance digest: {digest}")?;
        }
        for line in &self.notes {
            writeln!(out, "{line}")?;
        }
        if !self.timings.is_empty() {
            let parts: Vec<String> =
                self.timings.iter().map(|(name, ms)| format!("{name}={ms}")).collect();
            writeln!(out, "stage timings (ms): {}", parts.join(" "))?;
        }
        if let Some(digest) = &self.payload_digest {
            writeln!(out, "payload digest: {digest} (timings zeroed)")?;
        }
        if let Some(location) = &self.payload_location {
            writeln!(out, "payload: written to {location}")?;
        }
        if let Some(inline) = &self.payload_inline {
            writeln!(out, "payload:")?;
            write!(out, "{inline}")?;
        }
        if self.no_verify {
            writeln!(
                out,
                "verification: SKIPPED (--no-verify is for timing runs only; no verdicts were checked)"
            )?;
        } else if self.verdicts.is_empty() {
            writeln!(out, "verdicts: none")?;
        } else {
            let parts: Vec<String> =
                self.verdicts.iter().map(|(name, ok)| format!("{name}={ok}")).collect();
            writeln!(out, "verdicts: {}", parts.join(" "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Shared argument plumbing
// ---------------------------------------------------------------------------

/// Named decomposition constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Layered decomposition for equal-radius disks (cell bound 8).
    #[value(name = "unit_disk_layered")]
    UnitDiskLayered,
    /// Layered decomposition for grid paths spanning at most `ell` columns
    /// (cell bound `4*ell - 1`).
    #[value(name = "grid_path_layered")]
    GridPathLayered,
    /// Row decomposition for instances confined to `ell` columns.
    #[value(name = "narrow_strip")]
    NarrowStrip,
    /// Decomposition of the `2d`-th graph power with the same tree and
    /// layering (cell bound `(1 + 4d) * k`).
    #[value(name = "power")]
    Power,
    /// `(r-1)/r`-general cover built by dropping layers modulo `r`.
    #[value(name = "layer_cover")]
    LayerCover,
    /// `(1 - 1/r0)`-general cover for fat objects via shifted hierarchical
    /// grids.
    #[value(name = "fat_cover")]
    FatCover,
}

impl Construction {
    fn name(self) -> &'static str {
        match self {
            Construction::UnitDiskLayered => "unit_disk_layered",
            Construction::GridPathLayered => "grid_path_layered",
            Construction::NarrowStrip => "narrow_strip",
            Construction::Power => "power",
            Construction::LayerCover => "layer_cover",
            Construction::FatCover => "fat_cover",
        }
    }
}

/// Solver modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMode {
    /// Exact dynamic program over a tree decomposition.
    Exact,
    /// `(1 - h/r)`-approximation over a general cover.
    PtasCover,
    /// `(1 - eps)`-approximation by slab shifting (single objects only).
    PtasShift,
    /// Distance-`d` packing approximation via graph powers (even `d`).
    PtasDistance,
}

impl SolveMode {
    fn name(self) -> &'static str {
        match self {
            SolveMode::Exact => "exact",
            SolveMode::PtasCover => "ptas-cover",
            SolveMode::PtasShift => "ptas-shift",
            SolveMode::PtasDistance => "ptas-distance",
        }
    }
}

/// Input selection shared by decompose/solve.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance or graph JSON file.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Built-in fixture name (see `treepack fixtures`).
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
}

fn echo_suffix(args: &[String]) -> String {
    let mut echo = String::from("treepack");
    for a in args {
        echo.push(' ');
        echo.push_str(a);
    }
    echo
}

/// Builds the command-echo line from the process arguments.
pub fn command_echo() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    echo_suffix(&args)
}

// ---------------------------------------------------------------------------
// Default constructions per instance kind
// ---------------------------------------------------------------------------

fn max_path_span(paths: &[treepack_core::geometry::GridPath]) -> u64 {
    let mut span: i64 = 1;
    for p in paths {
        let (lo, hi) = horizontal_part(p);
        span = span.max(hi - lo + 1);
    }
    span.max(1) as u64
}

fn narrow_strip_ell(inst: &GeometricInstance) -> Result<u64> {
    match inst {
        GeometricInstance::GridPaths { paths, .. } => {
            let mut lo = i64::MAX;
            let mut hi = i64::MIN;
            for p in paths {
                let (a, b) = horizontal_part(p);
                lo = lo.min(a);
                hi = hi.max(b);
            }
            if paths.is_empty() {
                bail!("cannot derive a column bound for an empty instance");
            }
            Ok(((hi - lo + 1).max(1)) as u64)
        }
        GeometricInstance::Rectangles { rects } => {
            let lo = rects.iter().map(|r| r.x1).min();
            let hi = rects.iter().map(|r| r.x2).max();
            match (lo, hi) {
                (Some(lo), Some(hi)) => Ok(((hi - lo + 1).max(1)) as u64),
                _ => bail!("cannot derive a column bound for an empty instance"),
            }
        }
        GeometricInstance::UnitDisks { radius, centers } => {
            let min_x = centers.iter().map(|p| p.x.clone()).min();
            let max_x = centers.iter().map(|p| p.x.clone()).max();
            match (min_x, max_x) {
                (Some(lo), Some(hi)) => {
                    let span = hi - lo + radius * rat_u(2);
                    Ok(ceil_u64(&span, "column bound")? + 1)
                }
                _ => bail!("cannot derive a column bound for an empty instance"),
            }
        }
        other => bail!(
            "the narrow-strip construction does not apply to {} instances",
            other.kind_name()
        ),
    }
}

/// Builds the default decomposition + layering for a geometric instance:
/// `unit_disk_layered` for equal disks, `grid_path_layered` for paths, and
/// `narrow_strip` (with an all-zero layering) for rectangles.
fn default_decomposition(
    inst: &GeometricInstance,
    ell: Option<u64>,
) -> Result<(TreeDecomposition, Layering, &'static str)> {
    match inst {
        GeometricInstance::UnitDisks { .. } => {
            let (td, lay) = unit_disk_layered_decomposition(inst)?;
            Ok((td, lay, "unit_disk_layered"))
        }
        GeometricInstance::GridPaths { paths, .. } => {
            let ell = match ell {
                Some(e) => e,
                None => max_path_span(paths),
            };
            let (td, lay) = grid_path_layered_decomposition(inst, ell)?;
            Ok((td, lay, "grid_path_layered"))
        }
        GeometricInstance::Rectangles { rects } => {
            let ell = match ell {
                Some(e) => e,
                None => narrow_strip_ell(inst)?,
            };
            let td = narrow_strip_decomposition(inst, ell)?;
            Ok((td, Layering::new(vec![0; rects.len()]), "narrow_strip"))
        }
        other => bail!(
            "no default decomposition exists for {} instances; supply --decomposition FILE \
             or use a cover-based mode",
            other.kind_name()
        ),
    }
}

/// Builds the named decomposition + layering (`narrow_strip` pairs with an
/// all-zero layering, which is valid because it keeps every edge inside one
/// layer).
fn layered_by_name(
    inst: &GeometricInstance,
    name: Construction,
    ell: Option<u64>,
) -> Result<(TreeDecomposition, Layering, &'static str)> {
    match name {
        Construction::UnitDiskLayered => {
            let (td, lay) = unit_disk_layered_decomposition(inst)?;
            Ok((td, lay, "unit_disk_layered"))
        }
        Construction::GridPathLayered => {
            let ell = match (ell, inst) {
                (Some(e), _) => e,
                (None, GeometricInstance::GridPaths { paths, .. }) => max_path_span(paths),
                (None, _) => 1,
            };
            let (td, lay) = grid_path_layered_decomposition(inst, ell)?;
            Ok((td, lay, "grid_path_layered"))
        }
        Construction::NarrowStrip => {
            let ell = match ell {
                Some(e) => e,
                None => narrow_strip_ell(inst)?,
            };
            let td = narrow_strip_decomposition(inst, ell)?;
            Ok((td, Layering::new(vec![0; inst.len()]), "narrow_strip"))
        }
        other => bail!(
            "--construction {} does not produce the decomposition + layering this mode needs",
            other.name()
        ),
    }
}

/// Resolves the decomposition + layering a solve mode works over, from (in
/// priority order) a decomposition file, an explicit construction name, or
/// the instance kind's default. Built-in fixture graphs get a deterministic
/// derived decomposition (elimination order) and a breadth-first layering;
/// abstract graph files must bring their own.
fn resolve_decomposition(
    data: &InputData,
    is_fixture: bool,
    construction: Option<Construction>,
    ell: Option<u64>,
    decomposition: Option<&Path>,
    need_layering: bool,
) -> Result<(TreeDecomposition, Option<Layering>, String)> {
    if let Some(path) = decomposition {
        let (td, lay) = decomposition_from_json(&read_json(path)?)?;
        if need_layering && lay.is_none() {
            bail!(
                "this mode needs a layering; add a \"layering\" field to {}",
                path.display()
            );
        }
        return Ok((td, lay, format!("file:{}", path.display())));
    }
    match data {
        InputData::Geometric(inst) => {
            let (td, lay, name) = match construction {
                Some(c) => layered_by_name(inst, c, ell)?,
                None => default_decomposition(inst, ell)?,
            };
            Ok((td, Some(lay), name.to_string()))
        }
        InputData::Abstract(g) if is_fixture => {
            let td = random_tree_decomposition(g, 0)?;
            let lay = bfs_layering(g)?;
            Ok((td, Some(lay), "derived (elimination order)".to_string()))
        }
        InputData::Abstract(_) => bail!(
            "an abstract graph has no geometry to build a decomposition from; \
             supply --decomposition FILE"
        ),
    }
}

// ---------------------------------------------------------------------------
// Fatness profiles and covers
// ---------------------------------------------------------------------------

fn aspect_bound(pairs: impl Iterator<Item = (Rational, Rational)>) -> Result<Rational> {
    let mut t = rat_u(1);
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            bail!("a zero-extent object has unbounded aspect ratio; fatten it first");
        }
        let ratio = if a >= b { a / b } else { b / a };
        if ratio > t {
            t = ratio;
        }
    }
    Ok(t)
}

/// Derives the fatness profile of an instance: balls for disks, boxes with
/// the measured aspect bound for rectangles and boxes.
fn derive_profile(inst: &GeometricInstance) -> Result<FatnessProfile> {
    match inst {
        GeometricInstance::UnitDisks { .. } | GeometricInstance::Disks { .. } => {
            Ok(fatness_constant(FatKind::Balls, 2, &rat_u(1))?)
        }
        GeometricInstance::Rectangles { rects } => {
            let t = aspect_bound(rects.iter().map(|r| {
                (rat_u((r.x2 - r.x1).max(0) as u64), rat_u((r.y2 - r.y1).max(0) as u64))
            }))?;
            Ok(fatness_constant(FatKind::Boxes, 2, &t)?)
        }
        GeometricInstance::Boxes { d, boxes } => {
            let mut t = rat_u(1);
            for b in boxes {
                let lo = b.sides.iter().min();
                let hi = b.sides.iter().max();
                if let (Some(lo), Some(hi)) = (lo, hi) {
                    t = t.max(aspect_bound(std::iter::once((hi.clone(), lo.clone())))?);
                }
            }
            Ok(fatness_constant(FatKind::Boxes, *d, &t)?)
        }
        other => bail!("no fatness profile for {} instances", other.kind_name()),
    }
}

/// Builds the cover a `ptas-cover` run works over: `layer_cover` on top of
/// the kind's layered decomposition where one exists, `fat_cover` for
/// free-radius disks and boxes, honoring an explicit `--construction`.
fn resolve_cover(
    g: &Graph,
    data: &InputData,
    is_fixture: bool,
    construction: Option<Construction>,
    ell: Option<u64>,
    decomposition: Option<&Path>,
    r: u64,
) -> Result<(GeneralCover, String)> {
    // Free-radius disks and boxes have no layered default, so they take the
    // fat-cover route unless the user pinned something else.
    let use_fat = match construction {
        Some(Construction::FatCover) => true,
        Some(_) => false,
        None => {
            decomposition.is_none()
                && matches!(
                    data,
                    InputData::Geometric(GeometricInstance::Disks { .. })
                        | InputData::Geometric(GeometricInstance::Boxes { .. })
                )
        }
    };
    if use_fat {
        let inst = match data {
            InputData::Geometric(inst) => inst,
            InputData::Abstract(_) => {
                bail!("fat_cover needs geometric objects, not an abstract graph")
            }
        };
        let profile = derive_profile(inst)?;
        let cover = fat_cover(inst, &profile, r)?;
        return Ok((cover, format!("fat_cover(d={} c={} r0={r})", profile.d, profile.c)));
    }
    // Everything else is a layer cover; `--construction layer_cover` says
    // nothing about the decomposition underneath, so the default applies,
    // while an explicit layered construction name is honored.
    let base = match construction {
        Some(Construction::LayerCover) | None => None,
        other => other,
    };
    let (td, lay, name) = resolve_decomposition(data, is_fixture, base, ell, decomposition, true)?;
    let lay = lay.expect("resolve_decomposition honors need_layering");
    let cover = cover_from_layering(g, &td, &lay, r as usize)?;
    Ok((cover, format!("layer_cover(r={r}) over {name}")))
}

// ---------------------------------------------------------------------------
// Families and weights
// ---------------------------------------------------------------------------

fn member_weights(fam: &SubgraphFamily, vertex_weights: &WeightMap) -> Result<WeightMap> {
    let weights: Vec<Rational> = fam
        .members()
        .iter()
        .map(|member| {
            let mut sum = Rational::zero();
            for &v in member {
                sum = sum + vertex_weights.get(v);
            }
            sum
        })
        .collect();
    Ok(WeightMap::new(weights)?)
}

/// Builds the packing family from its spec string. Member weights are the
/// sums of the members' vertex weights, unless an explicit family file
/// carries its own.
fn build_family(g: &Graph, spec: &str, vertex_weights: &WeightMap) -> Result<(SubgraphFamily, WeightMap)> {
    let (fam, explicit) = match spec {
        "k1" => (SubgraphFamily::singletons(g.n()), None),
        "k2" => {
            let members: Vec<Vec<usize>> =
                g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
            (SubgraphFamily::new(g, members)?, None)
        }
        "k1k2" => {
            let mut members: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
            members.extend(g.edges().iter().map(|&(u, v)| vec![u, v]));
            (SubgraphFamily::new(g, members)?, None)
        }
        other => match other.strip_prefix("explicit:") {
            Some(path) => family_from_json(g, &read_json(Path::new(path))?)?,
            None => bail!(
                "unknown family spec {other:?} (expected k1, k2, k1k2, or explicit:<file>)"
            ),
        },
    };
    let weights = match explicit {
        Some(w) => w,
        None => member_weights(&fam, vertex_weights)?,
    };
    Ok((fam, weights))
}

/// Resolves vertex/object weights: embedded in the input file, else drawn
/// from `--seed` (integers in `[1, 9]`), else all-ones.
fn resolve_vertex_weights(
    loaded: &LoadedInput,
    n: usize,
    seed: Option<u64>,
) -> Result<(WeightMap, &'static str)> {
    match (&loaded.weights, seed) {
        (Some(w), _) => {
            w.check_len(n)?;
            Ok((w.clone(), "from input"))
        }
        (None, Some(seed)) => Ok((random_weights(n, 9, seed)?, "seeded random in [1, 9]")),
        (None, None) => Ok((WeightMap::unit(n), "unit")),
    }
}

/// The size constant the shifting scheme needs, inferred from the instance:
/// the maximum rectangle width, the maximum horizontal part of a path, or
/// the (integer) disk radius.
fn infer_shift_constant(inst: &GeometricInstance) -> Result<u64> {
    match inst {
        GeometricInstance::GridPaths { paths, .. } => {
            let mut c: i64 = 1;
            for p in paths {
                let (lo, hi) = horizontal_part(p);
                c = c.max(hi - lo);
            }
            Ok(c.max(1) as u64)
        }
        GeometricInstance::Rectangles { rects } => {
            let c = rects.iter().map(|r| r.x2 - r.x1).max().unwrap_or(1);
            Ok(c.max(1) as u64)
        }
        GeometricInstance::UnitDisks { radius, .. } => {
            if radius.is_integer() && radius > &Rational::zero() {
                ceil_u64(radius, "size constant").map_err(Into::into)
            } else {
                bail!(
                    "the shifting scheme needs an integer disk radius (got {}); \
                     scale the instance or pass --c explicitly",
                    format_rational(radius)
                )
            }
        }
        other => bail!("the shifting scheme does not support {} instances", other.kind_name()),
    }
}

fn resolve_r(r: Option<u64>, eps: Option<&Rational>, h_max: usize) -> Result<u64> {
    if let Some(r) = r {
        return Ok(r);
    }
    let eps = eps.ok_or_else(|| anyhow!("this mode needs --r or --eps"))?;
    if eps <= &Rational::zero() || eps >= &rat_u(1) {
        bail!("--eps must lie strictly between 0 and 1");
    }
    let h = h_max.max(1) as u64;
    let inv = ceil_u64(&(rat_u(1) / eps), "approximation parameter")?;
    inv.checked_mul(h).ok_or_else(|| anyhow!("approximation parameter overflows"))
}

fn parse_eps(eps: Option<&str>) -> Result<Option<Rational>> {
    match eps {
        Some(s) => Ok(Some(parse_rational(s)?)),
        None => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

/// Arguments of `treepack generate`.
#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Generator spec JSON file.
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
    /// Emit a built-in fixture instead of generating.
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// Override the spec's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the instance here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

/// Generates a random instance from a spec file, or emits a fixture.
pub fn cmd_generate(args: &GenerateArgs, echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    let started = Instant::now();
    let payload = match (&args.spec, &args.fixture) {
        (Some(path), None) => {
            let mut spec: GenSpec = genspec_from_json(&read_json(path)?)?;
            if let Some(seed) = args.seed {
                spec.seed = seed;
            }
            let inst = generate(&spec)?;
            report.note(format!(
                "generated: kind={} n={} extent={} seed={}",
                inst.kind_name(),
                spec.n,
                spec.extent,
                spec.seed
            ));
            report.note(format!(
                "spec digest: {}",
                digest_label(render(&genspec_to_json(&spec)).as_bytes())
            ));
            instance_to_json(&inst, None)
        }
        (None, Some(name)) => {
            let fx = fixture(name)?;
            let payload = match &fx.data {
                FixtureData::Graph(g) => {
                    report.note(format!("fixture: {} (graph, n={})", fx.name, g.n()));
                    graph_to_json(g, None)
                }
                FixtureData::Instance(inst) => {
                    report.note(format!(
                        "fixture: {} ({}, n={})",
                        fx.name,
                        inst.kind_name(),
                        inst.len()
                    ));
                    instance_to_json(inst, None)
                }
            };
            payload
        }
        (Some(_), Some(_)) => bail!("--spec and --fixture are mutually exclusive"),
        (None, None) => bail!("one of --spec or --fixture is required"),
    };
    report.stage("generate", started);
    report.attach_json(&payload, args.out.as_deref())?;
    Ok(report)
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

/// Lists the built-in fixture registry.
pub fn cmd_fixtures(echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    for name in fixture_names() {
        let fx = fixture(name)?;
        let kind = match &fx.data {
            FixtureData::Graph(_) => "graph",
            FixtureData::Instance(inst) => inst.kind_name(),
        };
        let facts: Vec<String> =
            fx.facts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        report.note(format!("{name:<18} {kind:<12} {}", facts.join(" ")));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

/// Arguments of `treepack decompose`.
#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// Which construction to run.
    #[arg(long, value_enum)]
    pub construction: Construction,
    /// Column bound for the strip/path constructions (derived from the
    /// instance when omitted).
    #[arg(long)]
    pub ell: Option<u64>,
    /// Power radius for the `power` construction.
    #[arg(long)]
    pub d: Option<usize>,
    /// Cover parameter for `layer_cover` (each vertex joins `r-1` of `r`
    /// elements).
    #[arg(long)]
    pub r: Option<u64>,
    /// Cover parameter for `fat_cover` (membership fraction at least
    /// `1 - 1/r0`); falls back to --r.
    #[arg(long)]
    pub r0: Option<u64>,
    /// Base decomposition file for the `power` / `layer_cover`
    /// constructions (otherwise the kind's default is built).
    #[arg(long, value_name = "FILE")]
    pub decomposition: Option<PathBuf>,
    /// Skip the validity re-checks (timing runs only).
    #[arg(long)]
    pub no_verify: bool,
    /// Write the decomposition/cover here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn decomposition_stats(
    report: &mut Report,
    g: &Graph,
    td: &TreeDecomposition,
    lay: Option<&Layering>,
) -> Result<()> {
    report.note(format!("nodes: {}", td.n_nodes()));
    report.note(format!("width: {}", td.width()));
    report.note(format!("independence number: {}", independence_number(g, td)?));
    if let Some(lay) = lay {
        report.note(format!(
            "layered independence number: {}",
            layered_independence_number(g, td, lay)?
        ));
    }
    Ok(())
}

/// Runs one construction and writes the decomposition or cover it builds.
pub fn cmd_decompose(args: &DecomposeArgs, echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    report.no_verify = args.no_verify;

    let t_load = Instant::now();
    let loaded = load_input(args.io.input.as_deref(), args.io.fixture.as_deref())?;
    report.set_input(&loaded);
    let (g, geo) = match &loaded.data {
        InputData::Geometric(inst) => (intersection_graph(inst), Some(inst)),
        InputData::Abstract(g) => (g.clone(), None),
    };
    report.stage("load", t_load);

    let t_build = Instant::now();
    match args.construction {
        Construction::UnitDiskLayered
        | Construction::GridPathLayered
        | Construction::NarrowStrip => {
            let inst = geo.ok_or_else(|| {
                anyhow!("this construction needs a geometric instance, not an abstract graph")
            })?;
            let (td, lay, name) = layered_by_name(inst, args.construction, args.ell)?;
            report.stage("construct", t_build);
            report.note(format!("construction: {name}"));
            decomposition_stats(&mut report, &g, &td, Some(&lay))?;
            if !args.no_verify {
                let t_verify = Instant::now();
                report
                    .verdicts
                    .push(("decomposition_valid", validate_decomposition(&g, &td).is_valid()));
                report.verdicts.push(("layering_valid", lay.validate_for(&g).is_ok()));
                report.stage("verify", t_verify);
            }
            report.attach_json(&decomposition_to_json(&td, Some(&lay)), args.out.as_deref())?;
        }
        Construction::Power => {
            let d = args.d.ok_or_else(|| anyhow!("--d is required for power"))?;
            let (td, lay, base_name) = resolve_decomposition(
                &loaded.data,
                loaded.fixture,
                None,
                args.ell,
                args.decomposition.as_deref(),
                true,
            )?;
            let lay = lay.expect("need_layering was set");
            let (pg, ptd, play) = power_decomposition(&g, &td, &lay, d)?;
            report.stage("construct", t_build);
            report.note(format!("construction: power(d={d}) over {base_name}"));
            report.note(format!(
                "power graph: exponent {}, n={} edges={}",
                2 * d,
                pg.n(),
                pg.edge_count()
            ));
            decomposition_stats(&mut report, &pg, &ptd, Some(&play))?;
            if !args.no_verify {
                let t_verify = Instant::now();
                report
                    .verdicts
                    .push(("decomposition_valid", validate_decomposition(&pg, &ptd).is_valid()));
                report.verdicts.push(("layering_valid", play.validate_for(&pg).is_ok()));
                report.stage("verify", t_verify);
            }
            report.attach_json(&decomposition_to_json(&ptd, Some(&play)), args.out.as_deref())?;
        }
        Construction::LayerCover => {
            let r = args.r.ok_or_else(|| anyhow!("--r is required for layer_cover"))?;
            let (td, lay, base_name) = resolve_decomposition(
                &loaded.data,
                loaded.fixture,
                None,
                args.ell,
                args.decomposition.as_deref(),
                true,
            )?;
            let lay = lay.expect("need_layering was set");
            let cover = cover_from_layering(&g, &td, &lay, r as usize)?;
            report.stage("construct", t_build);
            report.note(format!("construction: layer_cover(r={r}) over {base_name}"));
            cover_stats(&mut report, &g, &cover);
            if !args.no_verify {
                let t_verify = Instant::now();
                report.verdicts.push(("cover_valid", cover.validate(&g).is_ok()));
                report.stage("verify", t_verify);
            }
            report.attach_json(&crate::formats::cover_to_json(&cover), args.out.as_deref())?;
        }
        Construction::FatCover => {
            let r0 = args
                .r0
                .or(args.r)
                .ok_or_else(|| anyhow!("--r0 (or --r) is required for fat_cover"))?;
            let inst = geo.ok_or_else(|| {
                anyhow!("fat_cover needs geometric objects, not an abstract graph")
            })?;
            let profile = derive_profile(inst)?;
            let cover = fat_cover(inst, &profile, r0)?;
            report.stage("construct", t_build);
            report.note(format!(
                "construction: fat_cover(r0={r0}) with profile d={} c={}",
                profile.d, profile.c
            ));
            cover_stats(&mut report, &g, &cover);
            if !args.no_verify {
                let t_verify = Instant::now();
                report.verdicts.push(("cover_valid", cover.validate(&g).is_ok()));
                report.stage("verify", t_verify);
            }
            report.attach_json(&crate::formats::cover_to_json(&cover), args.out.as_deref())?;
        }
    }
    Ok(report)
}

fn cover_stats(report: &mut Report, g: &Graph, cover: &GeneralCover) {
    report.note(format!("elements: {}", cover.elements.len()));
    report.note(format!("beta: {}", format_rational(&cover.beta)));
    report.note(format!("max bag independence: {}", cover.independence_number(g)));
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

/// Arguments of `treepack solve`.
#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// How to solve.
    #[arg(long, value_enum)]
    pub mode: SolveMode,
    /// Packing family: k1, k2, k1k2, or explicit:<file>.
    #[arg(long, default_value = "k1")]
    pub family: String,
    /// Approximation tolerance as an exact rational, e.g. 1/3.
    #[arg(long)]
    pub eps: Option<String>,
    /// Approximation parameter (overrides the value derived from --eps).
    #[arg(long)]
    pub r: Option<u64>,
    /// Packing distance for ptas-distance (even, at least 2).
    #[arg(long)]
    pub d: Option<usize>,
    /// Size constant for ptas-shift (inferred from the instance when
    /// omitted).
    #[arg(long)]
    pub c: Option<u64>,
    /// Column bound for strip/path constructions (derived when omitted).
    #[arg(long)]
    pub ell: Option<u64>,
    /// Force a construction instead of the instance kind's default.
    #[arg(long, value_enum)]
    pub construction: Option<Construction>,
    /// Use this decomposition file instead of constructing one.
    #[arg(long, value_name = "FILE")]
    pub decomposition: Option<PathBuf>,
    /// Draw missing weights from this seed (integers in [1, 9]) instead of
    /// using unit weights.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (parallelizes bench cells only; solver pipelines stay
    /// sequential for reproducibility).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Skip the independent re-verification (timing runs only).
    #[arg(long)]
    pub no_verify: bool,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

/// Solves a packing problem exactly or approximately.
pub fn cmd_solve(args: &SolveArgs, echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    report.no_verify = args.no_verify;

    let t_load = Instant::now();
    let loaded = load_input(args.io.input.as_deref(), args.io.fixture.as_deref())?;
    report.set_input(&loaded);
    let (g, geo) = match &loaded.data {
        InputData::Geometric(inst) => (intersection_graph(inst), Some(inst)),
        InputData::Abstract(g) => (g.clone(), None),
    };
    let (vertex_weights, weight_source) = resolve_vertex_weights(&loaded, g.n(), args.seed)?;
    let (fam, fam_weights) = build_family(&g, &args.family, &vertex_weights)?;
    report.note(format!(
        "instance: n={} edges={} family={} (h_max={}) weights: {}",
        g.n(),
        g.edge_count(),
        fam.len(),
        fam.h_max(),
        weight_source
    ));
    report.stage("load", t_load);

    let eps = parse_eps(args.eps.as_deref())?;

    match args.mode {
        SolveMode::Exact => {
            let t_prepare = Instant::now();
            let (td, _lay, name) = resolve_decomposition(
                &loaded.data,
                loaded.fixture,
                args.construction,
                args.ell,
                args.decomposition.as_deref(),
                false,
            )?;
            report.note(format!("mode: exact over {name}"));
            let inst = PackingInstance::new(g.clone(), fam.clone(), fam_weights.clone())?;
            report.stage("prepare", t_prepare);

            let t_solve = Instant::now();
            let sol = solve_packing(&inst, &td)?;
            report.stage("solve", t_solve);
            report.note(format!("weight: {}", format_rational(&sol.weight)));

            if !args.no_verify {
                let t_verify = Instant::now();
                verify_solution(&mut report, &g, &fam, &fam_weights, &sol.chosen, &sol.weight, None);
                report.verdicts.push(("solver_verified", sol.verified));
                report.stage("verify", t_verify);
            }
            report.attach_json(
                &solution_to_json(&sol, total_ms(&report, "solve")),
                args.out.as_deref(),
            )?;
        }
        SolveMode::PtasCover => {
            let t_prepare = Instant::now();
            let r = resolve_r(args.r, eps.as_ref(), fam.h_max())?;
            let (cover, name) = resolve_cover(
                &g,
                &loaded.data,
                loaded.fixture,
                args.construction,
                args.ell,
                args.decomposition.as_deref(),
                r,
            )?;
            report.note(format!("mode: ptas-cover r={r} over {name}"));
            let inst = PackingInstance::new(g.clone(), fam.clone(), fam_weights.clone())?;
            report.stage("prepare", t_prepare);

            let t_solve = Instant::now();
            let res = ptas_over_cover(&inst, &cover, r)?;
            report.stage("solve", t_solve);
            report.note(format!(
                "weight: {} (guarantee {} of optimum)",
                format_rational(&res.solution.weight),
                format_rational(&res.guarantee)
            ));

            if !args.no_verify {
                let t_verify = Instant::now();
                verify_solution(
                    &mut report,
                    &g,
                    &fam,
                    &fam_weights,
                    &res.solution.chosen,
                    &res.solution.weight,
                    None,
                );
                report.verdicts.push(("solver_verified", res.solution.verified));
                report.stage("verify", t_verify);
            }
            report.attach_json(
                &approx_to_json(&res, total_ms(&report, "solve")),
                args.out.as_deref(),
            )?;
        }
        SolveMode::PtasDistance => {
            let t_prepare = Instant::now();
            let d = args.d.ok_or_else(|| anyhow!("--d is required for ptas-distance"))?;
            let r = resolve_r(args.r, eps.as_ref(), fam.h_max())?;
            let (td, lay, name) = resolve_decomposition(
                &loaded.data,
                loaded.fixture,
                args.construction,
                args.ell,
                args.decomposition.as_deref(),
                true,
            )?;
            let lay = lay.expect("need_layering was set");
            report.note(format!("mode: ptas-distance d={d} r={r} over {name}"));
            let inst = PackingInstance::new(g.clone(), fam.clone(), fam_weights.clone())?;
            report.stage("prepare", t_prepare);

            let t_solve = Instant::now();
            let res = ptas_distance_d(&inst, &td, &lay, r, d)?;
            report.stage("solve", t_solve);
            report.note(format!(
                "weight: {} (guarantee {} of the distance-{d} optimum)",
                format_rational(&res.solution.weight),
                format_rational(&res.guarantee)
            ));

            if !args.no_verify {
                let t_verify = Instant::now();
                verify_solution(
                    &mut report,
                    &g,
                    &fam,
                    &fam_weights,
                    &res.solution.chosen,
                    &res.solution.weight,
                    Some(d),
                );
                report.verdicts.push(("solver_verified", res.solution.verified));
                report.stage("verify", t_verify);
            }
            report.attach_json(
                &approx_to_json(&res, total_ms(&report, "solve")),
                args.out.as_deref(),
            )?;
        }
        SolveMode::PtasShift => {
            let t_prepare = Instant::now();
            let eps = eps.ok_or_else(|| anyhow!("--eps is required for ptas-shift"))?;
            if args.family != "k1" {
                bail!("ptas-shift packs single objects only; use --family k1");
            }
            let inst = geo.ok_or_else(|| {
                anyhow!("ptas-shift needs a geometric instance, not an abstract graph")
            })?;
            let c = match args.c {
                Some(c) => c,
                None => infer_shift_constant(inst)?,
            };
            report.note(format!("mode: ptas-shift eps={} c={c}", format_rational(&eps)));
            report.stage("prepare", t_prepare);

            let t_solve = Instant::now();
            let res = shifting_ptas(inst, &vertex_weights, &eps, c)?;
            report.stage("solve", t_solve);
            report.note(format!(
                "weight: {} (guarantee {} of optimum)",
                format_rational(&res.solution.weight),
                format_rational(&res.guarantee)
            ));

            if !args.no_verify {
                let t_verify = Instant::now();
                verify_solution(
                    &mut report,
                    &g,
                    &fam,
                    &fam_weights,
                    &res.solution.chosen,
                    &res.solution.weight,
                    None,
                );
                report.verdicts.push(("solver_verified", res.solution.verified));
                report.stage("verify", t_verify);
            }
            report.attach_json(
                &approx_to_json(&res, total_ms(&report, "solve")),
                args.out.as_deref(),
            )?;
        }
    }
    Ok(report)
}

/// CLI-side re-verification, independent of the solvers: the chosen members
/// must form a valid (distance-)packing and their recomputed weight must
/// equal the reported one.
fn verify_solution(
    report: &mut Report,
    g: &Graph,
    fam: &SubgraphFamily,
    weights: &WeightMap,
    chosen: &[usize],
    claimed: &Rational,
    distance: Option<usize>,
) {
    let packing_ok = match distance {
        Some(d) => verify_distance_packing(g, fam, chosen, d),
        None => verify_packing(g, fam, chosen),
    };
    report.verdicts.push(("packing_valid", packing_ok));
    report.verdicts.push(("weight_consistent", &weights.total(chosen) == claimed));
}

fn total_ms(report: &Report, stage: &str) -> u64 {
    report
        .timings
        .iter()
        .find(|(name, _)| *name == stage)
        .map(|&(_, ms)| ms as u64)
        .unwrap_or(0)
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// Arguments of `treepack bench`.
#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Bench spec JSON: {"generators": [...], "modes": [...], "seeds": [...]}.
    #[arg(long, value_name = "FILE")]
    pub spec: PathBuf,
    /// Prefix for the output files <prefix>.csv and <prefix>.md (stdout when
    /// omitted).
    #[arg(long, value_name = "PREFIX")]
    pub out: Option<PathBuf>,
    /// Worker threads for running bench cells in parallel (0 = rayon's
    /// default). Row order is independent of the thread count.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Compute the exact optimum (the `exact` and `ratio` columns) only for
    /// instances up to this size.
    #[arg(long, default_value_t = 40)]
    pub exact_cap: usize,
    /// Skip the per-cell verification verdicts (timing runs only).
    #[arg(long)]
    pub no_verify: bool,
}

#[derive(Clone)]
struct BenchMode {
    mode: SolveMode,
    eps: Option<Rational>,
    r: Option<u64>,
    d: Option<usize>,
    c: Option<u64>,
}

struct BenchRow {
    instance: String,
    n: usize,
    mode: &'static str,
    param: String,
    weight: String,
    exact: String,
    ratio: String,
    ms: u128,
    verified: bool,
}

fn parse_bench_spec(v: &Value) -> Result<(Vec<GenSpec>, Vec<BenchMode>, Option<Vec<u64>>)> {
    let m = v.as_object().ok_or_else(|| anyhow!("a bench spec must be a JSON object"))?;
    let generators = m
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("a bench spec needs a \"generators\" array"))?
        .iter()
        .map(genspec_from_json)
        .collect::<Result<Vec<_>>>()?;
    let modes = m
        .get("modes")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("a bench spec needs a \"modes\" array"))?
        .iter()
        .map(|entry| {
            let em = entry
                .as_object()
                .ok_or_else(|| anyhow!("every mode entry must be an object"))?;
            let mode_str = em
                .get("mode")
                .and_then(Value::as_str)
                .ok_or_else(|| anyhow!("every mode entry needs a \"mode\" string"))?;
            let mode = match mode_str {
                "exact" => SolveMode::Exact,
                "ptas-cover" => SolveMode::PtasCover,
                "ptas-shift" => SolveMode::PtasShift,
                "ptas-distance" => SolveMode::PtasDistance,
                other => bail!("unknown bench mode {other:?}"),
            };
            let eps = match em.get("eps") {
                Some(e) => Some(parse_rational(
                    e.as_str().ok_or_else(|| anyhow!("\"eps\" must be a \"p/q\" string"))?,
                )?),
                None => None,
            };
            Ok(BenchMode {
                mode,
                eps,
                r: em.get("r").and_then(Value::as_u64),
                d: em.get("d").and_then(Value::as_u64).map(|d| d as usize),
                c: em.get("c").and_then(Value::as_u64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let seeds = match m.get("seeds") {
        Some(v) => Some(
            v.as_array()
                .ok_or_else(|| anyhow!("\"seeds\" must be an array"))?
                .iter()
                .map(|s| s.as_u64().ok_or_else(|| anyhow!("seeds must be integers")))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    Ok((generators, modes, seeds))
}

fn bench_cell(spec: &GenSpec, mode: &BenchMode, exact_cap: usize) -> Result<BenchRow> {
    let inst = generate(spec)?;
    let g = intersection_graph(&inst);
    let weights = random_weights(g.n(), 9, spec.seed)?;
    let label = format!(
        "{}[n={} extent={} seed={}]",
        inst.kind_name(),
        spec.n,
        spec.extent,
        spec.seed
    );
    let data = InputData::Geometric(inst.clone());

    let started = Instant::now();
    let (weight, verified, param, oracle_distance) = match mode.mode {
        SolveMode::Exact => {
            let (td, _, _) = resolve_decomposition(&data, false, None, None, None, false)?;
            let pinst = PackingInstance::mwis(g.clone(), weights.clone())?;
            let sol = solve_packing(&pinst, &td)?;
            (sol.weight, sol.verified, "-".to_string(), None)
        }
        SolveMode::PtasCover => {
            let r = resolve_r(mode.r, mode.eps.as_ref(), 1)?;
            let (cover, _) = resolve_cover(&g, &data, false, None, None, None, r)?;
            let pinst = PackingInstance::mwis(g.clone(), weights.clone())?;
            let res = ptas_over_cover(&pinst, &cover, r)?;
            (res.solution.weight, res.solution.verified, format!("r={r}"), None)
        }
        SolveMode::PtasShift => {
            let eps = mode
                .eps
                .clone()
                .ok_or_else(|| anyhow!("ptas-shift bench cells need \"eps\""))?;
            let c = match mode.c {
                Some(c) => c,
                None => infer_shift_constant(&inst)?,
            };
            let res = shifting_ptas(&inst, &weights, &eps, c)?;
            (
                res.solution.weight,
                res.solution.verified,
                format!("eps={}", format_rational(&eps)),
                None,
            )
        }
        SolveMode::PtasDistance => {
            let d = mode
                .d
                .ok_or_else(|| anyhow!("ptas-distance bench cells need \"d\""))?;
            let r = resolve_r(mode.r, mode.eps.as_ref(), 1)?;
            let (td, lay, _) = resolve_decomposition(&data, false, None, None, None, true)?;
            let lay = lay.expect("need_layering was set");
            let pinst = PackingInstance::mwis(g.clone(), weights.clone())?;
            let res = ptas_distance_d(&pinst, &td, &lay, r, d)?;
            (
                res.solution.weight,
                res.solution.verified,
                format!("d={d} r={r}"),
                Some(d),
            )
        }
    };
    let ms = started.elapsed().as_millis();

    let (exact, ratio) = if g.n() <= exact_cap {
        let opt = match oracle_distance {
            Some(d) => exact_mwis(&g.power(d - 1), &weights)?.0,
            None => exact_mwis(&g, &weights)?.0,
        };
        let ratio = if opt.is_zero() {
            "1".to_string()
        } else {
            format_rational(&(&weight / &opt))
        };
        (format_rational(&opt), ratio)
    } else {
        (String::new(), String::new())
    };

    Ok(BenchRow {
        instance: label,
        n: g.n(),
        mode: mode.mode.name(),
        param,
        weight: format_rational(&weight),
        exact,
        ratio,
        ms,
        verified,
    })
}

fn render_csv(rows: &[BenchRow], zero_ms: bool) -> String {
    let mut out = String::from("instance,n,mode,param,weight,exact,ratio,ms\n");
    for row in rows {
        let ms = if zero_ms { 0 } else { row.ms };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.instance, row.n, row.mode, row.param, row.weight, row.exact, row.ratio, ms
        ));
    }
    out
}

fn render_markdown(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "| instance | n | mode | param | weight | exact | ratio | ms |\n\
         | --- | --- | --- | --- | --- | --- | --- | --- |\n",
    );
    for row in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            row.instance, row.n, row.mode, row.param, row.weight, row.exact, row.ratio, row.ms
        ));
    }
    out
}

/// Runs a generators × modes × seeds benchmark matrix and renders the
/// results as CSV and markdown.
pub fn cmd_bench(args: &BenchArgs, echo: String) -> Result<Report> {
    let mut report = Report::new(echo);
    report.no_verify = args.no_verify;

    let t_load = Instant::now();
    let spec_value = read_json(&args.spec)?;
    let (generators, modes, seeds) = parse_bench_spec(&spec_value)?;
    report.input_label = Some(args.spec.display().to_string());
    report.input_digest = Some(digest_label(render(&spec_value).as_bytes()));
    report.stage("load", t_load);

    let mut cells: Vec<(GenSpec, BenchMode)> = Vec::new();
    for gen in &generators {
        for mode in &modes {
            match &seeds {
                Some(list) => {
                    for &seed in list {
                        cells.push((GenSpec { seed, ..gen.clone() }, mode.clone()));
                    }
                }
                None => cells.push((gen.clone(), mode.clone())),
            }
        }
    }
    report.note(format!(
        "matrix: {} generators x {} modes x {} seeds = {} cells",
        generators.len(),
        modes.len(),
        seeds.as_ref().map_or(1, Vec::len),
        cells.len()
    ));

    let t_run = Instant::now();
    let exact_cap = args.exact_cap;
    let run_all = || -> Result<Vec<BenchRow>> {
        use rayon::prelude::*;
        cells
            .par_iter()
            .map(|(spec, mode)| bench_cell(spec, mode, exact_cap))
            .collect()
    };
    let rows = if args.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(args.threads)
            .build()
            .context("cannot build thread pool")?
            .install(run_all)?
    } else {
        run_all()?
    };
    report.stage("run", t_run);

    let csv = render_csv(&rows, false);
    let markdown = render_markdown(&rows);
    report.payload_digest = Some(digest_label(render_csv(&rows, true).as_bytes()));
    match &args.out {
        Some(prefix) => {
            let csv_path = prefix.with_extension("csv");
            let md_path = prefix.with_extension("md");
            fs::write(&csv_path, &csv)
                .with_context(|| format!("cannot write {}", csv_path.display()))?;
            fs::write(&md_path, &markdown)
                .with_context(|| format!("cannot write {}", md_path.display()))?;
            report.payload_location =
                Some(format!("{} and {}", csv_path.display(), md_path.display()));
        }
        None => {
            report.payload_inline = Some(format!("{csv}\n{markdown}"));
        }
    }
    if !args.no_verify && !rows.is_empty() {
        report
            .verdicts
            .push(("cells_verified", rows.iter().all(|row| row.verified)));
    }
    Ok(report)
}

//! JSON file formats, canonical serialization, and content digests.
//!
//! Every format is built and parsed by hand through [`serde_json::Value`]
//! so that key order is fixed by this module alone: re-serializing the same
//! data always yields byte-identical output. Rationals travel as `"p/q"`
//! strings in lowest terms (plain integers omit the denominator).
//!
//! Formats:
//! - graph: `{"n": int, "edges": [[u,v],...], "weights": ["p/q",...]?}`
//! - instance: `{"kind": "...", kind-specific scalars, "objects": [...],
//!   "weights": [...]? }`
//! - decomposition: `{"tree_edges": [[s,t],...], "bags": {"t": [v,...]},
//!   "layering": [int,...]?}`
//! - cover: `{"beta": "p/q", "elements": [{"vertices": [...],
//!   "decomposition": {...}}]}`
//! - solution: `{"weight": "p/q", "chosen": [...], "verified": bool,
//!   "elapsed_ms": int}`; approximate results extend it with
//!   `{"guarantee": "p/q", "winner": int, "per_element": [{"index", "weight"}]}`
//! - generator spec: `{"kind": "...", kind knobs, "n", "extent", "seed"}`

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{Map, Value};

use treepack_core::family::{SubgraphFamily, WeightMap};
use treepack_core::fixtures::{fixture, FixtureData};
use treepack_core::generators::{GenKind, GenSpec};
use treepack_core::geometry::{
    BoxD, ContactMode, Disk, GeometricInstance, GridPath, Point2, RectI,
};
use treepack_core::graph::Graph;
use treepack_core::ptas::ApproxResult;
use treepack_core::rational::{format_rational, parse_rational};
use treepack_core::solver::PackingSolution;
use treepack_core::treedec::{Layering, TreeDecomposition};
use treepack_core::Rational;

// ---------------------------------------------------------------------------
// Value helpers
// ---------------------------------------------------------------------------

/// Builds a JSON object with the given keys in the given order.
pub fn obj(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// A rational as its canonical `"p/q"` string value.
pub fn rat_value(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn as_obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| anyhow!("{what} must be a JSON object"))
}

fn as_arr<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| anyhow!("{what} must be a JSON array"))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| anyhow!("{what} is missing the \"{key}\" field"))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| anyhow!("{what} must be a nonnegative integer"))
}

fn u64_of(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| anyhow!("{what} must be a nonnegative integer"))
}

fn i64_of(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| anyhow!("{what} must be an integer"))
}

fn bool_of(v: &Value, what: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| anyhow!("{what} must be a boolean"))
}

fn rat_of(v: &Value, what: &str) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| anyhow!("{what} must be a \"p/q\" string"))?;
    parse_rational(s).map_err(|e| anyhow!("{what}: {e}"))
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_arr(v, what)?.iter().map(|x| usize_of(x, what)).collect()
}

fn pair_list(v: &Value, what: &str) -> Result<Vec<(usize, usize)>> {
    as_arr(v, what)?
        .iter()
        .map(|e| {
            let pair = as_arr(e, what)?;
            if pair.len() != 2 {
                bail!("every entry of {what} must be a two-element array");
            }
            Ok((usize_of(&pair[0], what)?, usize_of(&pair[1], what)?))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Canonical output and digests
// ---------------------------------------------------------------------------

/// Canonical text form of a JSON value: pretty-printed, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing built JSON cannot fail");
    s.push('\n');
    s
}

/// 64-bit FNV-1a hash, used for content digests in run reports.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Digest label for a byte string.
pub fn digest_label(bytes: &[u8]) -> String {
    format!("fnv1a64:{:016x}", fnv1a64(bytes))
}

/// Zeroes every `elapsed_ms` field, recursively. Digests are computed over
/// the result so that timings never enter the reproducibility-checked
/// region of a payload.
pub fn zero_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, val) in map.iter_mut() {
                if k == "elapsed_ms" {
                    *val = Value::from(0u64);
                } else {
                    zero_timings(val);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                zero_timings(item);
            }
        }
        _ => {}
    }
}

/// Digest of a payload with timings zeroed out.
pub fn payload_digest(v: &Value) -> String {
    let mut clone = v.clone();
    zero_timings(&mut clone);
    digest_label(render(&clone).as_bytes())
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

fn weights_to_json(w: &WeightMap) -> Value {
    Value::Array(w.as_slice().iter().map(rat_value).collect())
}

fn weights_from_json(v: &Value) -> Result<WeightMap> {
    let entries: Vec<Rational> = as_arr(v, "\"weights\"")?
        .iter()
        .map(|x| rat_of(x, "weight entry"))
        .collect::<Result<_>>()?;
    WeightMap::new(entries).map_err(|e| anyhow!("invalid weights: {e}"))
}

// ---------------------------------------------------------------------------
// Geometric instances
// ---------------------------------------------------------------------------

fn point_to_json(p: &Point2) -> Value {
    obj(vec![("x", rat_value(&p.x)), ("y", rat_value(&p.y))])
}

fn point_from_json(v: &Value) -> Result<Point2> {
    let m = as_obj(v, "a point")?;
    Ok(Point2::new(
        rat_of(field(m, "x", "a point")?, "point x")?,
        rat_of(field(m, "y", "a point")?, "point y")?,
    ))
}

fn mode_to_str(mode: ContactMode) -> &'static str {
    match mode {
        ContactMode::Vertex => "v",
        ContactMode::Edge => "e",
    }
}

fn mode_from_str(s: &str) -> Result<ContactMode> {
    match s {
        "v" => Ok(ContactMode::Vertex),
        "e" => Ok(ContactMode::Edge),
        other => bail!("contact mode must be \"v\" or \"e\", got {other:?}"),
    }
}

/// Serializes an instance, with optional per-object weights.
pub fn instance_to_json(inst: &GeometricInstance, weights: Option<&WeightMap>) -> Value {
    let mut fields: Vec<(&str, Value)> = vec![("kind", Value::from(inst.kind_name()))];
    let objects: Vec<Value> = match inst {
        GeometricInstance::UnitDisks { radius, centers } => {
            fields.push(("radius", rat_value(radius)));
            centers.iter().map(point_to_json).collect()
        }
        GeometricInstance::Disks { disks } => disks
            .iter()
            .map(|d| {
                obj(vec![
                    ("x", rat_value(&d.center.x)),
                    ("y", rat_value(&d.center.y)),
                    ("radius", rat_value(&d.radius)),
                ])
            })
            .collect(),
        GeometricInstance::Rectangles { rects } => rects
            .iter()
            .map(|r| {
                obj(vec![
                    ("x1", Value::from(r.x1)),
                    ("y1", Value::from(r.y1)),
                    ("x2", Value::from(r.x2)),
                    ("y2", Value::from(r.y2)),
                ])
            })
            .collect(),
        GeometricInstance::GridPaths { mode, paths } => {
            fields.push(("mode", Value::from(mode_to_str(*mode))));
            paths
                .iter()
                .map(|p| {
                    let pts: Vec<Value> = p
                        .points()
                        .iter()
                        .map(|&(x, y)| Value::Array(vec![Value::from(x), Value::from(y)]))
                        .collect();
                    obj(vec![("points", Value::Array(pts))])
                })
                .collect()
        }
        GeometricInstance::Boxes { d, boxes } => {
            fields.push(("d", Value::from(*d as u64)));
            boxes
                .iter()
                .map(|b| {
                    obj(vec![
                        ("center", Value::Array(b.center.iter().map(rat_value).collect())),
                        ("sides", Value::Array(b.sides.iter().map(rat_value).collect())),
                    ])
                })
                .collect()
        }
    };
    fields.push(("objects", Value::Array(objects)));
    if let Some(w) = weights {
        fields.push(("weights", weights_to_json(w)));
    }
    obj(fields)
}

/// Parses an instance file value, returning the instance and its embedded
/// weights (if any).
pub fn instance_from_json(v: &Value) -> Result<(GeometricInstance, Option<WeightMap>)> {
    let m = as_obj(v, "an instance file")?;
    let kind = field(m, "kind", "an instance file")?
        .as_str()
        .ok_or_else(|| anyhow!("\"kind\" must be a string"))?;
    let objects = as_arr(field(m, "objects", "an instance file")?, "\"objects\"")?;
    let inst = match kind {
        "unit_disks" => {
            let radius = rat_of(field(m, "radius", "a unit_disks file")?, "\"radius\"")?;
            let centers =
                objects.iter().map(point_from_json).collect::<Result<Vec<_>>>()?;
            GeometricInstance::UnitDisks { radius, centers }
        }
        "disks" => {
            let disks = objects
                .iter()
                .map(|o| {
                    let om = as_obj(o, "a disk record")?;
                    Ok(Disk {
                        center: Point2::new(
                            rat_of(field(om, "x", "a disk record")?, "disk x")?,
                            rat_of(field(om, "y", "a disk record")?, "disk y")?,
                        ),
                        radius: rat_of(field(om, "radius", "a disk record")?, "disk radius")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricInstance::Disks { disks }
        }
        "rectangles" => {
            let rects = objects
                .iter()
                .map(|o| {
                    let om = as_obj(o, "a rectangle record")?;
                    Ok(RectI {
                        x1: i64_of(field(om, "x1", "a rectangle record")?, "x1")?,
                        y1: i64_of(field(om, "y1", "a rectangle record")?, "y1")?,
                        x2: i64_of(field(om, "x2", "a rectangle record")?, "x2")?,
                        y2: i64_of(field(om, "y2", "a rectangle record")?, "y2")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricInstance::Rectangles { rects }
        }
        "grid_paths" => {
            let mode = mode_from_str(
                field(m, "mode", "a grid_paths file")?
                    .as_str()
                    .ok_or_else(|| anyhow!("\"mode\" must be a string"))?,
            )?;
            let paths = objects
                .iter()
                .map(|o| {
                    let om = as_obj(o, "a path record")?;
                    let pts = as_arr(field(om, "points", "a path record")?, "\"points\"")?
                        .iter()
                        .map(|p| {
                            let pair = as_arr(p, "a path point")?;
                            if pair.len() != 2 {
                                bail!("path points must be [x, y] pairs");
                            }
                            Ok((i64_of(&pair[0], "path x")?, i64_of(&pair[1], "path y")?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    GridPath::new(pts).map_err(|e| anyhow!("invalid grid path: {e}"))
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricInstance::GridPaths { mode, paths }
        }
        "boxes" => {
            let d = usize_of(field(m, "d", "a boxes file")?, "\"d\"")?;
            let boxes = objects
                .iter()
                .map(|o| {
                    let om = as_obj(o, "a box record")?;
                    let center = as_arr(field(om, "center", "a box record")?, "\"center\"")?
                        .iter()
                        .map(|x| rat_of(x, "box center entry"))
                        .collect::<Result<Vec<_>>>()?;
                    let sides = as_arr(field(om, "sides", "a box record")?, "\"sides\"")?
                        .iter()
                        .map(|x| rat_of(x, "box side entry"))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(BoxD { center, sides })
                })
                .collect::<Result<Vec<_>>>()?;
            GeometricInstance::Boxes { d, boxes }
        }
        other => bail!(
            "unknown instance kind {other:?} (expected unit_disks, disks, rectangles, \
             grid_paths, or boxes)"
        ),
    };
    inst.validate().map_err(|e| anyhow!("invalid instance: {e}"))?;
    let weights = match m.get("weights") {
        Some(w) => Some(weights_from_json(w)?),
        None => None,
    };
    Ok((inst, weights))
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Serializes an abstract graph, with optional vertex weights.
pub fn graph_to_json(g: &Graph, weights: Option<&WeightMap>) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|&(u, v)| Value::Array(vec![Value::from(u as u64), Value::from(v as u64)]))
        .collect();
    let mut fields =
        vec![("n", Value::from(g.n() as u64)), ("edges", Value::Array(edges))];
    if let Some(w) = weights {
        fields.push(("weights", weights_to_json(w)));
    }
    obj(fields)
}

/// Parses a graph file value, returning the graph and its embedded weights
/// (if any).
pub fn graph_from_json(v: &Value) -> Result<(Graph, Option<WeightMap>)> {
    let m = as_obj(v, "a graph file")?;
    let n = usize_of(field(m, "n", "a graph file")?, "\"n\"")?;
    let edges = pair_list(field(m, "edges", "a graph file")?, "\"edges\"")?;
    let g = Graph::build(n, &edges).map_err(|e| anyhow!("invalid graph: {e}"))?;
    let weights = match m.get("weights") {
        Some(w) => Some(weights_from_json(w)?),
        None => None,
    };
    Ok((g, weights))
}

// ---------------------------------------------------------------------------
// Decompositions, layerings, covers
// ---------------------------------------------------------------------------

/// Serializes a tree decomposition, with an optional layering.
pub fn decomposition_to_json(td: &TreeDecomposition, lay: Option<&Layering>) -> Value {
    let tree_edges: Vec<Value> = td
        .tree_edges()
        .iter()
        .map(|&(s, t)| Value::Array(vec![Value::from(s as u64), Value::from(t as u64)]))
        .collect();
    let mut bags = Map::new();
    for (t, bag) in td.bags().iter().enumerate() {
        bags.insert(
            t.to_string(),
            Value::Array(bag.iter().map(|&v| Value::from(v as u64)).collect()),
        );
    }
    let mut fields =
        vec![("tree_edges", Value::Array(tree_edges)), ("bags", Value::Object(bags))];
    if let Some(lay) = lay {
        fields.push((
            "layering",
            Value::Array(lay.as_slice().iter().map(|&l| Value::from(l as u64)).collect()),
        ));
    }
    obj(fields)
}

/// Parses a decomposition file value, returning the decomposition and its
/// embedded layering (if any).
pub fn decomposition_from_json(v: &Value) -> Result<(TreeDecomposition, Option<Layering>)> {
    let m = as_obj(v, "a decomposition file")?;
    let tree_edges =
        pair_list(field(m, "tree_edges", "a decomposition file")?, "\"tree_edges\"")?;
    let bag_map = as_obj(field(m, "bags", "a decomposition file")?, "\"bags\"")?;
    let mut bags = vec![Vec::new(); bag_map.len()];
    for (key, val) in bag_map {
        let t: usize = key
            .parse()
            .map_err(|_| anyhow!("bag key {key:?} is not a node index"))?;
        if t >= bags.len() {
            bail!(
                "bag key {t} is out of range: the map has {} entries, so node indices \
                 must cover exactly 0..{}",
                bags.len(),
                bags.len()
            );
        }
        bags[t] = usize_list(val, "a bag")?;
    }
    let td = TreeDecomposition::new(bags, &tree_edges)
        .map_err(|e| anyhow!("invalid decomposition: {e}"))?;
    let lay = match m.get("layering") {
        Some(v) => Some(Layering::new(usize_list(v, "\"layering\"")?)),
        None => None,
    };
    Ok((td, lay))
}

/// Serializes a general cover.
pub fn cover_to_json(cover: &treepack_core::constructions::GeneralCover) -> Value {
    let elements: Vec<Value> = cover
        .elements
        .iter()
        .map(|el| {
            obj(vec![
                (
                    "vertices",
                    Value::Array(el.vertices.iter().map(|&v| Value::from(v as u64)).collect()),
                ),
                ("decomposition", decomposition_to_json(&el.decomposition, None)),
            ])
        })
        .collect();
    obj(vec![("beta", rat_value(&cover.beta)), ("elements", Value::Array(elements))])
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

/// Serializes an exact solver result.
pub fn solution_to_json(sol: &PackingSolution, elapsed_ms: u64) -> Value {
    obj(vec![
        ("weight", rat_value(&sol.weight)),
        (
            "chosen",
            Value::Array(sol.chosen.iter().map(|&i| Value::from(i as u64)).collect()),
        ),
        ("verified", Value::from(sol.verified)),
        ("elapsed_ms", Value::from(elapsed_ms)),
    ])
}

/// Serializes an approximation result: the solution fields plus guarantee,
/// winning element/shift index, and the per-element weight log.
pub fn approx_to_json(res: &ApproxResult, elapsed_ms: u64) -> Value {
    let mut v = solution_to_json(&res.solution, elapsed_ms);
    let m = v.as_object_mut().expect("solution JSON is an object");
    m.insert("guarantee".into(), rat_value(&res.guarantee));
    m.insert("winner".into(), Value::from(res.winner as u64));
    m.insert(
        "per_element".into(),
        Value::Array(
            res.per_element
                .iter()
                .map(|e| {
                    obj(vec![
                        ("index", Value::from(e.index as u64)),
                        ("weight", rat_value(&e.weight)),
                    ])
                })
                .collect(),
        ),
    );
    v
}

// ---------------------------------------------------------------------------
// Generator specs
// ---------------------------------------------------------------------------

/// Serializes a generator spec; kind-specific knobs sit next to the common
/// fields, tagged by `"kind"`.
pub fn genspec_to_json(spec: &GenSpec) -> Value {
    let mut fields: Vec<(&str, Value)> = Vec::new();
    match &spec.kind {
        GenKind::UnitDisks { radius } => {
            fields.push(("kind", Value::from("unit_disks")));
            fields.push(("radius", rat_value(radius)));
        }
        GenKind::Disks { min_radius, max_radius } => {
            fields.push(("kind", Value::from("disks")));
            fields.push(("min_radius", rat_value(min_radius)));
            fields.push(("max_radius", rat_value(max_radius)));
        }
        GenKind::Rectangles { min_width, max_width, max_height } => {
            fields.push(("kind", Value::from("rectangles")));
            fields.push(("min_width", Value::from(*min_width)));
            fields.push(("max_width", Value::from(*max_width)));
            fields.push(("max_height", Value::from(*max_height)));
        }
        GenKind::GridPaths { mode, max_bends, horizontal_budget, require_edge } => {
            fields.push(("kind", Value::from("grid_paths")));
            fields.push(("mode", Value::from(mode_to_str(*mode))));
            fields.push(("max_bends", Value::from(*max_bends)));
            fields.push(("horizontal_budget", Value::from(*horizontal_budget)));
            fields.push(("require_edge", Value::from(*require_edge)));
        }
        GenKind::Boxes { d, max_side } => {
            fields.push(("kind", Value::from("boxes")));
            fields.push(("d", Value::from(*d as u64)));
            fields.push(("max_side", Value::from(*max_side)));
        }
    }
    fields.push(("n", Value::from(spec.n as u64)));
    fields.push(("extent", Value::from(spec.extent)));
    fields.push(("seed", Value::from(spec.seed)));
    obj(fields)
}

/// Parses a generator spec value.
pub fn genspec_from_json(v: &Value) -> Result<GenSpec> {
    let m = as_obj(v, "a generator spec")?;
    let kind_name = field(m, "kind", "a generator spec")?
        .as_str()
        .ok_or_else(|| anyhow!("\"kind\" must be a string"))?;
    let kind = match kind_name {
        "unit_disks" => GenKind::UnitDisks {
            radius: rat_of(field(m, "radius", "a unit_disks spec")?, "\"radius\"")?,
        },
        "disks" => GenKind::Disks {
            min_radius: rat_of(field(m, "min_radius", "a disks spec")?, "\"min_radius\"")?,
            max_radius: rat_of(field(m, "max_radius", "a disks spec")?, "\"max_radius\"")?,
        },
        "rectangles" => GenKind::Rectangles {
            min_width: u64_of(field(m, "min_width", "a rectangles spec")?, "\"min_width\"")?,
            max_width: u64_of(field(m, "max_width", "a rectangles spec")?, "\"max_width\"")?,
            max_height: u64_of(
                field(m, "max_height", "a rectangles spec")?,
                "\"max_height\"",
            )?,
        },
        "grid_paths" => GenKind::GridPaths {
            mode: mode_from_str(
                field(m, "mode", "a grid_paths spec")?
                    .as_str()
                    .ok_or_else(|| anyhow!("\"mode\" must be a string"))?,
            )?,
            max_bends: u64_of(field(m, "max_bends", "a grid_paths spec")?, "\"max_bends\"")?,
            horizontal_budget: u64_of(
                field(m, "horizontal_budget", "a grid_paths spec")?,
                "\"horizontal_budget\"",
            )?,
            require_edge: bool_of(
                field(m, "require_edge", "a grid_paths spec")?,
                "\"require_edge\"",
            )?,
        },
        "boxes" => GenKind::Boxes {
            d: usize_of(field(m, "d", "a boxes spec")?, "\"d\"")?,
            max_side: u64_of(field(m, "max_side", "a boxes spec")?, "\"max_side\"")?,
        },
        other => bail!("unknown generator kind {other:?}"),
    };
    Ok(GenSpec {
        kind,
        n: usize_of(field(m, "n", "a generator spec")?, "\"n\"")?,
        extent: u64_of(field(m, "extent", "a generator spec")?, "\"extent\"")?,
        seed: u64_of(field(m, "seed", "a generator spec")?, "\"seed\"")?,
    })
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// Parses an explicit family file: `{"members": [[v,...],...],
/// "weights": ["p/q",...]?}`. Member weights default to the sum of the
/// member's vertex weights when the file has no `"weights"` field.
pub fn family_from_json(
    g: &Graph,
    v: &Value,
) -> Result<(SubgraphFamily, Option<WeightMap>)> {
    let m = as_obj(v, "a family file")?;
    let members = as_arr(field(m, "members", "a family file")?, "\"members\"")?
        .iter()
        .map(|entry| usize_list(entry, "a family member"))
        .collect::<Result<Vec<_>>>()?;
    let fam =
        SubgraphFamily::new(g, members).map_err(|e| anyhow!("invalid family: {e}"))?;
    let weights = match m.get("weights") {
        Some(w) => {
            let w = weights_from_json(w)?;
            w.check_len(fam.len()).map_err(|e| anyhow!("family weights: {e}"))?;
            Some(w)
        }
        None => None,
    };
    Ok((fam, weights))
}

// ---------------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------------

/// What an input file or fixture contained.
pub enum InputData {
    /// A geometric instance; the graph is its intersection graph.
    Geometric(GeometricInstance),
    /// A bare graph.
    Abstract(Graph),
}

/// A loaded problem input: label and digest for the report, the data, and
/// any vertex/object weights embedded next to it.
pub struct LoadedInput {
    /// Short label for report lines (file path or fixture name).
    pub label: String,
    /// Content digest of the canonical serialized input.
    pub digest: String,
    /// The instance or graph.
    pub data: InputData,
    /// Weights embedded in the input, if any.
    pub weights: Option<WeightMap>,
    /// Whether the input is a built-in fixture. Abstract fixture graphs get
    /// a deterministic derived decomposition; abstract graph files require
    /// an explicit one.
    pub fixture: bool,
}

/// Reads and parses a JSON file.
pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Loads a problem input from `--input` or `--fixture` (exactly one must be
/// given). Input files may be instance JSON (recognized by a `"kind"`
/// field) or graph JSON (recognized by `"n"`).
pub fn load_input(input: Option<&Path>, fixture_name: Option<&str>) -> Result<LoadedInput> {
    match (input, fixture_name) {
        (Some(path), None) => {
            let v = read_json(path)?;
            let m = as_obj(&v, "an input file")?;
            let (data, weights) = if m.contains_key("kind") {
                let (inst, w) = instance_from_json(&v)?;
                (InputData::Geometric(inst), w)
            } else if m.contains_key("n") {
                let (g, w) = graph_from_json(&v)?;
                (InputData::Abstract(g), w)
            } else {
                bail!(
                    "{} is neither an instance file (no \"kind\") nor a graph file (no \"n\")",
                    path.display()
                );
            };
            let canonical = match &data {
                InputData::Geometric(inst) => instance_to_json(inst, weights.as_ref()),
                InputData::Abstract(g) => graph_to_json(g, weights.as_ref()),
            };
            Ok(LoadedInput {
                label: path.display().to_string(),
                digest: digest_label(render(&canonical).as_bytes()),
                data,
                weights,
                fixture: false,
            })
        }
        (None, Some(name)) => {
            let fx = fixture(name).map_err(|e| anyhow!("{e}"))?;
            let (data, canonical) = match fx.data {
                FixtureData::Graph(g) => {
                    let v = graph_to_json(&g, None);
                    (InputData::Abstract(g), v)
                }
                FixtureData::Instance(inst) => {
                    let v = instance_to_json(&inst, None);
                    (InputData::Geometric(inst), v)
                }
            };
            Ok(LoadedInput {
                label: format!("fixture:{name}"),
                digest: digest_label(render(&canonical).as_bytes()),
                data,
                weights: None,
                fixture: true,
            })
        }
        (Some(_), Some(_)) => bail!("--input and --fixture are mutually exclusive"),
        (None, None) => bail!("one of --input or --fixture is required"),
    }
}

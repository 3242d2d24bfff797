use std::fs;
use std::path::{Path, PathBuf};

use pht_core::geometry::{is_center, CENTER_TOL};
use pht_core::monodromy::VineRecord;
use pht_core::{Point, Polygon};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const VINES_HEADER: [&str; 7] = [
    "section_id",
    "theta",
    "birth",
    "death",
    "birth_vertex",
    "death_vertex",
    "essential",
];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawShape {
    vertices: Vec<[f64; 2]>,
    #[serde(default)]
    center: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct RawShapeOut<'a> {
    vertices: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<&'a Point>,
}

/// A parsed polygon file with its optional declared center.
#[derive(Clone, Debug)]
pub struct ShapeFile {
    pub path: PathBuf,
    pub polygon: Polygon,
    pub center: Option<Point>,
}

impl ShapeFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        let raw: RawShape = serde_json::from_str(&text).map_err(|e| CliError::Parse {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        let polygon = Polygon::new(raw.vertices.into_iter().map(Point::from).collect())?;
        let center = raw.center.map(Point::from);
        if let Some(c) = center {
            if !is_center(&polygon, c, CENTER_TOL * polygon.scale()) {
                return Err(CliError::Input(format!(
                    "{}: declared center ({}, {}) is not in the kernel",
                    path.display(),
                    c.x,
                    c.y
                )));
            }
        }
        Ok(Self {
            path: path.to_owned(),
            polygon,
            center,
        })
    }
}

pub fn shape_json(p: &Polygon, center: Option<&Point>) -> Result<String, CliError> {
    let raw = RawShapeOut {
        vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        center,
    };
    to_json(&raw)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Input(e.to_string()))
}

pub fn vines_csv(rows: &[VineRecord]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record(VINES_HEADER).map_err(fail)?;
    for r in rows {
        w.serialize(r).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Write `contents` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

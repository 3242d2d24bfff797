use std::path::Path;

use pht_core::corpus::CorpusSpec;
use pht_core::geometry::{
    choose_center, convex_hull, is_general_position, kernel, sectors, KernelPolygon,
    ParallelWitness, Sector, PARALLEL_TOL,
};
use pht_core::monodromy::{analyze, export_vines, MonodromyError, VineRecord};
use pht_core::persistence::DiagramPoint;
use pht_core::pht::{decompose_check, is_simple_dgm0, pht, plan_directions, SimplicityReport};
use pht_core::{Point, Polygon};
use serde::Serialize;

use crate::error::CliError;
use crate::io::{emit, shape_json, to_json, vines_csv, ShapeFile};
use crate::{svg, Cli, Command, Kind, Shared};

pub fn run(cli: Cli) -> Result<(), CliError> {
    let s = cli.shared;
    match cli.command {
        Command::Check {
            shape,
            require_star,
            require_general_position,
            require_simple,
            out,
        } => check(
            &s,
            &shape,
            [require_star, require_general_position, require_simple],
            out.as_deref(),
        ),
        Command::Pht { shape, out, svg } => transform(&s, &shape, out.as_deref(), svg.as_deref()),
        Command::Decompose { shape, out } => decompose(&s, &shape, out.as_deref()),
        Command::Monodromy {
            shape,
            out,
            verdict,
        } => monodromy(&s, &shape, out.as_deref(), verdict.as_deref()),
        Command::Generate {
            kind,
            n,
            k,
            turns,
            out,
        } => generate(&s, kind, n, k, turns, out.as_deref()),
    }
}

/// Center declared in the file, else the chosen kernel point.
fn center_of(shape: &ShapeFile, k: &KernelPolygon) -> Option<Point> {
    shape.center.or_else(|| choose_center(k).ok())
}

#[derive(Serialize)]
struct CheckReport {
    vertices: usize,
    star_shaped: bool,
    kernel: Vec<Point>,
    center: Option<Point>,
    general_position: bool,
    general_position_witness: Option<ParallelWitness>,
    simple: bool,
    simplicity: SimplicityReport,
}

fn check(s: &Shared, path: &Path, require: [bool; 3], out: Option<&Path>) -> Result<(), CliError> {
    let shape = ShapeFile::load(path)?;
    let p = &shape.polygon;
    let k = kernel(p);
    let center = center_of(&shape, &k);
    let (general_position, witness) = is_general_position(p, PARALLEL_TOL);
    let simplicity = is_simple_dgm0(p, &plan_directions(p, s.refine), s.tol)?;
    let report = CheckReport {
        vertices: p.len(),
        star_shaped: center.is_some(),
        kernel: k.vertices.clone(),
        center,
        general_position,
        general_position_witness: witness,
        simple: simplicity.simple,
        simplicity,
    };
    emit(out, &to_json(&report)?)?;
    let failed: Vec<&str> = [
        (require[0] && !report.star_shaped, "star-shaped"),
        (require[1] && !report.general_position, "general position"),
        (require[2] && !report.simple, "simple"),
    ]
    .iter()
    .filter(|(f, _)| *f)
    .map(|&(_, name)| name)
    .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "required predicates do not hold: {}",
            failed.join(", ")
        )))
    }
}

fn star_sectors(p: &Polygon, center: Option<Point>) -> Vec<Sector> {
    center
        .and_then(|c| sectors(p, c, &convex_hull(p)).ok())
        .unwrap_or_default()
}

fn transform(
    s: &Shared,
    path: &Path,
    out: Option<&Path>,
    svg_path: Option<&Path>,
) -> Result<(), CliError> {
    let shape = ShapeFile::load(path)?;
    let p = &shape.polygon;
    let plan = plan_directions(p, s.refine);
    let sample = pht(p, &plan, shape.center)?;
    let json = to_json(&sample.entries)?;
    let picture = match svg_path {
        None => None,
        Some(_) => {
            let secs = star_sectors(p, center_of(&shape, &kernel(p)));
            let (vines, loose): (Vec<VineRecord>, Vec<DiagramPoint>) =
                match analyze(p, &plan, s.tol) {
                    Ok((_, v)) => (export_vines(&v.sections), Vec::new()),
                    Err(MonodromyError::NotSimple { .. }) => (
                        Vec::new(),
                        sample
                            .entries
                            .iter()
                            .flat_map(|e| e.diagram.points().to_vec())
                            .collect(),
                    ),
                    Err(e) => return Err(e.into()),
                };
            Some(svg::render(p, &secs, &vines, &loose))
        }
    };
    emit(out, &json)?;
    if let (Some(sp), Some(text)) = (svg_path, picture) {
        emit(Some(sp), &text)?;
    }
    Ok(())
}

fn decompose(s: &Shared, path: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let shape = ShapeFile::load(path)?;
    let p = &shape.polygon;
    let c = center_of(&shape, &kernel(p)).ok_or_else(|| {
        CliError::Input(format!(
            "{}: polygon is not star-shaped (empty kernel)",
            shape.path.display()
        ))
    })?;
    let report = decompose_check(p, c, &plan_directions(p, s.refine), s.tol)?;
    emit(out, &to_json(&report)?)?;
    if report.verdict {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "sector decomposition gap {} exceeds {}; planar star-shaped polygons are always sectorial, so this indicates a numerical or implementation fault",
            report.max_gap, s.tol
        )))
    }
}

#[derive(Serialize)]
struct VerdictSummary<'a> {
    trivial: bool,
    covering: bool,
    section_count: usize,
    #[serde(flatten)]
    verdict: &'a pht_core::monodromy::MonodromyVerdict,
}

fn monodromy(
    s: &Shared,
    path: &Path,
    out: Option<&Path>,
    verdict_path: Option<&Path>,
) -> Result<(), CliError> {
    let shape = ShapeFile::load(path)?;
    let p = &shape.polygon;
    let (_, verdict) = analyze(p, &plan_directions(p, s.refine), s.tol)?;
    let csv = vines_csv(&export_vines(&verdict.sections))?;
    let json = to_json(&VerdictSummary {
        trivial: verdict.trivial,
        covering: verdict.covering,
        section_count: verdict.sections.len(),
        verdict: &verdict,
    })?;
    if let Some(o) = out {
        emit(Some(o), &csv)?;
    }
    match verdict_path {
        Some(v) => emit(Some(v), &json)?,
        None => {
            let w = verdict
                .witness_loop
                .map(|w| {
                    format!(
                        "; witness at theta {}: ({}, {}) returns as ({}, {})",
                        w.theta, w.start.birth, w.start.death, w.end.birth, w.end.death
                    )
                })
                .unwrap_or_default();
            println!(
                "{} monodromy, {} sections{w}",
                if verdict.trivial {
                    "trivial"
                } else {
                    "non-trivial"
                },
                verdict.sections.len()
            );
        }
    }
    Ok(())
}

fn generate(
    s: &Shared,
    kind: Kind,
    n: Option<usize>,
    k: Option<usize>,
    turns: f64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let count = |name: &str| {
        n.or(k)
            .ok_or_else(|| CliError::Input(format!("{name} needs a vertex count (--n or --k)")))
    };
    let spec = match kind {
        Kind::RegularNgon => CorpusSpec::RegularNgon {
            n: count("regular_ngon")?,
        },
        Kind::RandomStar => CorpusSpec::RandomStar {
            k: count("random_star")?,
            seed: s.seed,
        },
        Kind::Convex => CorpusSpec::Convex {
            k: count("convex")?,
            seed: s.seed,
        },
        Kind::Spiral => CorpusSpec::Spiral {
            turns,
            k: k.or(n).unwrap_or(12),
        },
    };
    let p = spec.generate()?;
    emit(out, &shape_json(&p, None)?)
}

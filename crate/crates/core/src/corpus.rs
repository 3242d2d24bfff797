//! Deterministic shape generators and the fixed shapes used in tests.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{kernel, GeometryError, Point, Polygon};

/// Resample cap for the rejection samplers.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CorpusError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("no valid shape after {attempts} attempts")]
    Exhausted { attempts: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Generator kind and parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorpusSpec {
    RegularNgon { n: usize },
    RandomStar { k: usize, seed: u64 },
    Spiral { turns: f64, k: usize },
    Convex { k: usize, seed: u64 },
}

impl CorpusSpec {
    pub fn generate(&self) -> Result<Polygon, CorpusError> {
        match *self {
            CorpusSpec::RegularNgon { n } => regular_ngon(n),
            CorpusSpec::RandomStar { k, seed } => random_star(k, seed),
            CorpusSpec::Spiral { turns, k } => spiral(turns, k),
            CorpusSpec::Convex { k, seed } => convex(k, seed),
        }
    }
}

fn polygon(raw: &[(f64, f64)]) -> Polygon {
    Polygon::new(raw.iter().map(|&p| p.into()).collect()).expect("fixture is a valid polygon")
}

pub fn unit_square() -> Polygon {
    polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
}

/// A square with a notch cut into its top edge.
pub fn arrowhead() -> Polygon {
    polygon(&[(0.0, 0.0), (4.0, 0.0), (4.0, 3.0), (2.0, 1.0), (0.0, 3.0)])
}

/// The arrowhead with its upper vertices nudged into general position.
pub fn perturbed_arrowhead() -> Polygon {
    polygon(&[(0.0, 0.0), (4.0, 0.0), (4.1, 3.2), (2.0, 1.1), (-0.1, 2.9)])
}

/// Tall middle tower flanked by two identical prongs. Pointing down, both
/// prongs are born at the same height and die at the same height.
pub fn twin_prongs() -> Polygon {
    polygon(&[
        (-4.0, 0.0),
        (4.0, 0.0),
        (4.0, 3.0),
        (1.0, 1.5),
        (0.0, 5.0),
        (-1.0, 1.5),
        (-4.0, 3.0),
    ])
}

/// Five-armed star with slightly irregular arms (vertices in general
/// position).
pub fn five_armed_star() -> Polygon {
    let raw: Vec<(f64, f64)> = (0..10)
        .map(|j| {
            let jf = j as f64;
            let base = if j % 2 == 0 { 1.0 } else { 0.38 };
            let r = base * (1.0 + 0.04 * (1.7 * jf + 0.3).sin());
            let a = PI / 2.0 + jf * PI / 5.0 + 0.03 * (2.3 * jf + 1.1).cos();
            (r * a.cos(), r * a.sin())
        })
        .collect();
    polygon(&raw)
}

/// The spiral used for the monodromy regression.
pub fn bundled_spiral() -> Polygon {
    spiral(1.5, 24).expect("bundled spiral parameters are valid")
}

pub fn regular_ngon(n: usize) -> Result<Polygon, CorpusError> {
    if n < 3 {
        return Err(CorpusError::InvalidParameters(format!(
            "regular_ngon needs n >= 3, got {n}"
        )));
    }
    let raw = (0..n)
        .map(|j| {
            let a = TAU * j as f64 / n as f64;
            Point::new(a.cos(), a.sin())
        })
        .collect();
    Ok(Polygon::new(raw)?)
}

/// Sorted random angles around the origin with random radii. Every angular
/// gap is below π, so the origin sees the whole polygon; samples whose
/// kernel is too thin are rejected.
pub fn random_star(k: usize, seed: u64) -> Result<Polygon, CorpusError> {
    if k < 3 {
        return Err(CorpusError::InvalidParameters(format!(
            "random_star needs k >= 3, got {k}"
        )));
    }
    let (r_min, r_max) = (0.35, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut angles: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        if !gaps_ok(&angles, 0.2 * TAU / k as f64, 0.8 * PI) {
            continue;
        }
        let raw: Vec<Point> = angles
            .iter()
            .map(|&a| {
                let r = rng.gen_range(r_min..r_max);
                Point::new(r * a.cos(), r * a.sin())
            })
            .collect();
        let Ok(p) = Polygon::new(raw) else { continue };
        if p.len() != k {
            continue;
        }
        let ker = kernel(&p);
        if ker.is_empty() || ker.area() < 1e-3 * p.area() {
            continue;
        }
        return Ok(p);
    }
    Err(CorpusError::Exhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// Random convex polygon: sorted random points on the unit circle.
pub fn convex(k: usize, seed: u64) -> Result<Polygon, CorpusError> {
    if k < 3 {
        return Err(CorpusError::InvalidParameters(format!(
            "convex needs k >= 3, got {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut angles: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        if !gaps_ok(&angles, 0.25 * TAU / k as f64, 0.9 * PI) {
            continue;
        }
        let raw: Vec<Point> = angles
            .iter()
            .map(|&a| Point::new(a.cos(), a.sin()))
            .collect();
        match Polygon::new(raw) {
            Ok(p) if p.len() == k => return Ok(p),
            _ => continue,
        }
    }
    Err(CorpusError::Exhausted {
        attempts: MAX_ATTEMPTS,
    })
}

fn gaps_ok(sorted: &[f64], min_gap: f64, max_gap: f64) -> bool {
    let n = sorted.len();
    (0..n).all(|i| {
        let next = if i + 1 < n {
            sorted[i + 1]
        } else {
            sorted[0] + TAU
        };
        let g = next - sorted[i];
        g >= min_gap && g <= max_gap
    })
}

/// Thick logarithmic spiral band with `k` vertices (`k / 2` on each side)
/// winding `turns` times around the origin.
pub fn spiral(turns: f64, k: usize) -> Result<Polygon, CorpusError> {
    if k < 6 || !k.is_multiple_of(2) || turns.is_nan() || turns <= 0.0 {
        return Err(CorpusError::InvalidParameters(format!(
            "spiral needs an even k >= 6 and turns > 0, got k={k}, turns={turns}"
        )));
    }
    let n = k / 2;
    let growth: f64 = 3.0;
    let rate = growth.ln() / TAU;
    let half_width = 0.15;
    let sweep = TAU * turns;
    let centre = |j: usize| {
        let phi = sweep * j as f64 / (n - 1) as f64;
        (phi, (rate * phi).exp())
    };
    let mut raw = Vec::with_capacity(k);
    for j in 0..n {
        let (phi, r) = centre(j);
        raw.push(Point::new(
            r * (1.0 + half_width) * phi.cos(),
            r * (1.0 + half_width) * phi.sin(),
        ));
    }
    for j in (0..n).rev() {
        let (phi, r) = centre(j);
        raw.push(Point::new(
            r * (1.0 - half_width) * phi.cos(),
            r * (1.0 - half_width) * phi.sin(),
        ));
    }
    let p = Polygon::new(raw)?;
    if p.len() != k {
        return Err(CorpusError::InvalidParameters(format!(
            "spiral with k={k} has collinear vertices"
        )));
    }
    Ok(p)
}

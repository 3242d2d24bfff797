use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::PersistenceError;

/// One birth–death pair. Essential classes have `death == +∞`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub birth: f64,
    #[serde(serialize_with = "ser_death", deserialize_with = "de_death")]
    pub death: f64,
    pub birth_vertex: Option<usize>,
    pub death_vertex: Option<usize>,
}

impl DiagramPoint {
    pub fn finite(
        birth: f64,
        death: f64,
        birth_vertex: Option<usize>,
        death_vertex: Option<usize>,
    ) -> Self {
        Self {
            birth,
            death,
            birth_vertex,
            death_vertex,
        }
    }

    pub fn essential(birth: f64, birth_vertex: Option<usize>) -> Self {
        Self {
            birth,
            death: f64::INFINITY,
            birth_vertex,
            death_vertex: None,
        }
    }

    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    /// ℓ∞ distance to the diagonal, `(death - birth) / 2`.
    pub fn diagonal_distance(&self) -> f64 {
        if self.is_essential() {
            f64::INFINITY
        } else {
            0.5 * (self.death - self.birth)
        }
    }

    /// ℓ∞ distance, extended so that two essential points compare births
    /// and an essential point is infinitely far from a finite one.
    pub fn linf(&self, other: &DiagramPoint) -> f64 {
        match (self.is_essential(), other.is_essential()) {
            (true, true) => (self.birth - other.birth).abs(),
            (false, false) => (self.birth - other.birth)
                .abs()
                .max((self.death - other.death).abs()),
            _ => f64::INFINITY,
        }
    }
}

pub(crate) fn ser_death<S: Serializer>(death: &f64, s: S) -> Result<S::Ok, S::Error> {
    if death.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*death)
    }
}

fn de_death<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Death {
        Num(f64),
        Str(String),
    }
    match Death::deserialize(d)? {
        Death::Num(x) => Ok(x),
        Death::Str(s) if s == "inf" => Ok(f64::INFINITY),
        Death::Str(s) => Err(de::Error::custom(format!("invalid death value {s:?}"))),
    }
}

/// Finite multiset of diagram points; the diagonal is implicit.
///
/// Points are kept sorted by `(birth, death, birth_vertex)` so equal
/// multisets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PersistenceDiagram {
    points: Vec<DiagramPoint>,
}

impl PersistenceDiagram {
    pub fn new(mut points: Vec<DiagramPoint>) -> Self {
        points.sort_by(|a, b| {
            a.birth
                .total_cmp(&b.birth)
                .then(a.death.total_cmp(&b.death))
                .then(a.birth_vertex.cmp(&b.birth_vertex))
                .then(a.death_vertex.cmp(&b.death_vertex))
        });
        Self { points }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn points(&self) -> &[DiagramPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn essential(&self) -> impl Iterator<Item = &DiagramPoint> {
        self.points.iter().filter(|p| p.is_essential())
    }

    pub fn finite(&self) -> impl Iterator<Item = &DiagramPoint> {
        self.points.iter().filter(|p| !p.is_essential())
    }

    /// Multiset union.
    pub fn union(&self, other: &PersistenceDiagram) -> PersistenceDiagram {
        let mut pts = self.points.clone();
        pts.extend_from_slice(&other.points);
        Self::new(pts)
    }

    /// Remove the essential point of least birth (ties: lowest birth vertex),
    /// returning the reduced diagram and the removed point.
    pub fn reduce_with(&self) -> Result<(PersistenceDiagram, DiagramPoint), PersistenceError> {
        let idx = self
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_essential())
            .min_by(|(_, a), (_, b)| {
                a.birth
                    .total_cmp(&b.birth)
                    .then(a.birth_vertex.cmp(&b.birth_vertex))
            })
            .map(|(i, _)| i)
            .ok_or(PersistenceError::NoEssentialClass)?;
        let mut pts = self.points.clone();
        let removed = pts.remove(idx);
        Ok((Self { points: pts }, removed))
    }

    pub fn reduce(&self) -> Result<PersistenceDiagram, PersistenceError> {
        self.reduce_with().map(|(d, _)| d)
    }

    /// Inverse of [`reduce`](Self::reduce).
    pub fn unreduce(&self, essential: DiagramPoint) -> PersistenceDiagram {
        let mut pts = self.points.clone();
        pts.push(essential);
        Self::new(pts)
    }

    /// Same diagram with every vertex label passed through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> Option<usize>) -> PersistenceDiagram {
        Self::new(
            self.points
                .iter()
                .map(|p| DiagramPoint {
                    birth_vertex: p.birth_vertex.and_then(&f),
                    death_vertex: p.death_vertex.and_then(&f),
                    ..*p
                })
                .collect(),
        )
    }
}

impl FromIterator<DiagramPoint> for PersistenceDiagram {
    fn from_iter<I: IntoIterator<Item = DiagramPoint>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

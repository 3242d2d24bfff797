//! Exact bottleneck distance by binary search over candidate costs with a
//! bipartite perfect-matching feasibility test.

use serde::Serialize;

use super::diagram::{DiagramPoint, PersistenceDiagram};

/// One side of a matched pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Matched {
    Point(DiagramPoint),
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Matching {
    pub pairs: Vec<(Matched, Matched)>,
    pub cost: f64,
}

/// Augmented bipartite instance. Left nodes are the points of `a` followed
/// by diagonal copies of the points of `b`; right nodes are the points of
/// `b` followed by diagonal copies of the points of `a`.
struct Instance<'a> {
    a: &'a [DiagramPoint],
    b: &'a [DiagramPoint],
    diagonal: bool,
}

impl Instance<'_> {
    fn size(&self) -> (usize, usize) {
        if self.diagonal {
            let n = self.a.len() + self.b.len();
            (n, n)
        } else {
            (self.a.len(), self.b.len())
        }
    }

    fn weight(&self, left: usize, right: usize) -> f64 {
        let (na, nb) = (self.a.len(), self.b.len());
        match (left < na, right < nb) {
            (true, true) => self.a[left].linf(&self.b[right]),
            (true, false) => {
                if right - nb == left {
                    self.a[left].diagonal_distance()
                } else {
                    f64::INFINITY
                }
            }
            (false, true) => {
                if left - na == right {
                    self.b[right].diagonal_distance()
                } else {
                    f64::INFINITY
                }
            }
            (false, false) => 0.0,
        }
    }

    fn candidates(&self) -> Vec<f64> {
        let (nl, nr) = self.size();
        let mut c: Vec<f64> = (0..nl)
            .flat_map(|l| (0..nr).map(move |r| (l, r)))
            .map(|(l, r)| self.weight(l, r))
            .filter(|w| w.is_finite())
            .collect();
        c.push(0.0);
        c.sort_by(f64::total_cmp);
        c.dedup();
        c
    }

    /// Perfect matching using only edges of weight `<= eps`, if one exists.
    fn perfect_matching(&self, eps: f64) -> Option<Vec<usize>> {
        let (nl, nr) = self.size();
        if nl != nr {
            return None;
        }
        let adj: Vec<Vec<usize>> = (0..nl)
            .map(|l| (0..nr).filter(|&r| self.weight(l, r) <= eps).collect())
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; nr];
        for l in 0..nl {
            let mut seen = vec![false; nr];
            if !augment(l, &adj, &mut match_right, &mut seen) {
                return None;
            }
        }
        let mut match_left = vec![usize::MAX; nl];
        for (r, l) in match_right.iter().enumerate() {
            match_left[l.expect("perfect")] = r;
        }
        Some(match_left)
    }

    fn solve(&self) -> (f64, Matching) {
        let cands = self.candidates();
        let (mut lo, mut hi) = (0usize, cands.len());
        // smallest candidate index with a perfect matching; `hi == len` means none
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.perfect_matching(cands[mid]).is_some() {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let (cost, assignment) = if lo < cands.len() {
            (cands[lo], self.perfect_matching(cands[lo]))
        } else {
            (f64::INFINITY, self.perfect_matching(f64::INFINITY))
        };
        let pairs = assignment.map(|m| self.pairs(&m)).unwrap_or_default();
        (cost, Matching { pairs, cost })
    }

    fn pairs(&self, match_left: &[usize]) -> Vec<(Matched, Matched)> {
        let (na, nb) = (self.a.len(), self.b.len());
        match_left
            .iter()
            .enumerate()
            .filter_map(|(l, &r)| {
                let left = if l < na {
                    Matched::Point(self.a[l])
                } else {
                    Matched::Diagonal
                };
                let right = if r < nb {
                    Matched::Point(self.b[r])
                } else {
                    Matched::Diagonal
                };
                match (left, right) {
                    (Matched::Diagonal, Matched::Diagonal) => None,
                    pair => Some(pair),
                }
            })
            .collect()
    }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_right[r].is_none_or(|other| augment(other, adj, match_right, seen)) {
            match_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// Bottleneck distance and an optimal matching. Matching a finite point to
/// the diagonal costs `(death - birth) / 2`; essential points only match
/// essential points. The result is `+∞` when essential counts differ.
pub fn bottleneck(a: &PersistenceDiagram, b: &PersistenceDiagram) -> (f64, Matching) {
    Instance {
        a: a.points(),
        b: b.points(),
        diagonal: true,
    }
    .solve()
}

/// Bottleneck distance with the diagonal option disabled: every point must
/// be matched to a point of the other diagram.
pub fn bottleneck_no_diagonal(a: &PersistenceDiagram, b: &PersistenceDiagram) -> (f64, Matching) {
    Instance {
        a: a.points(),
        b: b.points(),
        diagonal: false,
    }
    .solve()
}

/// Multiset equality up to `tol` in ℓ∞, without diagonal matches.
pub fn multiset_equal(a: &PersistenceDiagram, b: &PersistenceDiagram, tol: f64) -> bool {
    Instance {
        a: a.points(),
        b: b.points(),
        diagonal: false,
    }
    .perfect_matching(tol)
    .is_some()
}

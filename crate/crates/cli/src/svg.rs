use std::fmt::Write;

use pht_core::geometry::Sector;
use pht_core::monodromy::VineRecord;
use pht_core::persistence::DiagramPoint;
use pht_core::Polygon;

const PANEL: f64 = 400.0;
const MARGIN: f64 = 24.0;
const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Affine map from a data box onto a panel, y pointing up.
struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
    offset: f64,
}

impl Frame {
    fn fit(xs: impl Iterator<Item = (f64, f64)>, offset: f64) -> Self {
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for (x, y) in xs {
            lo_x = lo_x.min(x);
            lo_y = lo_y.min(y);
            hi_x = hi_x.max(x);
            hi_y = hi_y.max(y);
        }
        if !lo_x.is_finite() {
            (lo_x, lo_y, hi_x, hi_y) = (0.0, 0.0, 1.0, 1.0);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-12);
        Self {
            x0: lo_x,
            y0: lo_y,
            scale: (PANEL - 2.0 * MARGIN) / span,
            offset,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.offset + MARGIN + (x - self.x0) * self.scale,
            PANEL - MARGIN - (y - self.y0) * self.scale,
        )
    }
}

fn polyline(frame: &Frame, pts: impl Iterator<Item = (f64, f64)>, close: bool) -> String {
    let mut d = String::new();
    for (i, (x, y)) in pts.enumerate() {
        let (u, v) = frame.map(x, y);
        let _ = write!(d, "{}{u:.3},{v:.3} ", if i == 0 { "M" } else { "L" });
    }
    if close {
        d.push('Z');
    }
    d.trim_end().to_owned()
}

/// Two panels: the polygon with its sectors, and every section's track
/// through the birth–death plane. Essential classes are drawn along a line
/// above the finite points. `loose` points (used when no sections could be
/// built) are drawn as grey dots.
pub fn render(
    p: &Polygon,
    sectors: &[Sector],
    vines: &[VineRecord],
    loose: &[DiagramPoint],
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{PANEL}" viewBox="0 0 {w} {PANEL}">"#,
        w = 2.0 * PANEL
    );
    out.push_str("<g id=\"shape\">\n");
    let left = Frame::fit(p.vertices().iter().map(|v| (v.x, v.y)), 0.0);
    for s in sectors {
        let d = polyline(&left, s.region.vertices().iter().map(|v| (v.x, v.y)), true);
        let color = PALETTE[s.index % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<path class="sector" d="{d}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="0.5"/>"#
        );
    }
    let d = polyline(&left, p.vertices().iter().map(|v| (v.x, v.y)), true);
    let _ = writeln!(
        out,
        r#"<path class="polygon" d="{d}" fill="none" stroke="black" stroke-width="1.5"/>"#
    );
    if let Some(s) = sectors.first() {
        let (u, v) = left.map(s.center.x, s.center.y);
        let _ = writeln!(
            out,
            r#"<circle class="center" cx="{u:.3}" cy="{v:.3}" r="3" fill="black"/>"#
        );
    }
    out.push_str("</g>\n<g id=\"diagram\">\n");

    let finite: Vec<f64> = vines
        .iter()
        .flat_map(|r| [r.birth, r.death])
        .chain(loose.iter().flat_map(|q| [q.birth, q.death]))
        .filter(|x| x.is_finite())
        .collect();
    let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if lo.is_finite() {
        (lo, hi)
    } else {
        (-1.0, 1.0)
    };
    let top = hi + 0.1 * (hi - lo).max(1e-9);
    let right = Frame::fit([(lo, lo), (top, top)].into_iter(), PANEL);
    let diag = polyline(&right, [(lo, lo), (top, top)].into_iter(), false);
    let _ = writeln!(
        out,
        r##"<path class="diagonal" d="{diag}" stroke="#999" stroke-dasharray="4 3" fill="none"/>"##
    );

    let mut ids: Vec<usize> = vines.iter().map(|r| r.section_id).collect();
    ids.dedup();
    for id in ids {
        let rows: Vec<&VineRecord> = vines.iter().filter(|r| r.section_id == id).collect();
        let pts = rows
            .iter()
            .map(|r| (r.birth, if r.death.is_finite() { r.death } else { top }));
        let d = polyline(&right, pts, false);
        let color = PALETTE[id % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<path class="section" data-section="{id}" d="{d}" fill="none" stroke="{color}" stroke-width="1.2"/>"#
        );
    }
    for q in loose {
        let (u, v) = right.map(q.birth, if q.death.is_finite() { q.death } else { top });
        let _ = writeln!(
            out,
            r##"<circle class="point" cx="{u:.3}" cy="{v:.3}" r="1.5" fill="#777"/>"##
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

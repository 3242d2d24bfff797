//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with a short detail and its wall time against the budget.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pht_core::corpus::{
    arrowhead, bundled_spiral, convex, five_armed_star, perturbed_arrowhead, random_star,
    regular_ngon, twin_prongs, unit_square,
};
use pht_core::geometry::{
    choose_center, convex_hull, is_general_position, kernel, sectors, Sector, PARALLEL_TOL,
};
use pht_core::monodromy::analyze;
use pht_core::persistence::{
    bottleneck, boundary_sweep_diagram, lower_star_diagram, multiset_equal, sector_diagram,
    sector_diagram_lower_star, triangulate, DiagramPoint, PersistenceDiagram,
};
use pht_core::pht::{
    decompose_check, pht, pht_at, plan_directions, sector_trivial_direction, stability_audit,
};
use pht_core::{Direction, Point, Polygon};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 200 seeded star-shaped polygons with 8 to 24 vertices.
fn star_corpus() -> Vec<Polygon> {
    (0..200u64)
        .map(|seed| random_star(8 + (seed % 17) as usize, seed).expect("generator succeeds"))
        .collect()
}

fn general_position_stars(count: usize) -> Vec<Polygon> {
    (1000u64..)
        .map(|seed| random_star(8 + (seed % 17) as usize, seed).expect("generator succeeds"))
        .filter(|p| is_general_position(p, PARALLEL_TOL).0)
        .take(count)
        .collect()
}

/// Fixed and generated shapes that have a nonempty kernel.
fn star_shaped_fixtures() -> Vec<Polygon> {
    let mut v = vec![
        unit_square(),
        arrowhead(),
        perturbed_arrowhead(),
        twin_prongs(),
        five_armed_star(),
    ];
    v.extend((3..=12).map(|n| regular_ngon(n).unwrap()));
    v.extend((0..20).map(|seed| convex(5 + (seed % 10) as usize, seed).unwrap()));
    v
}

fn center(p: &Polygon) -> Point {
    choose_center(&kernel(p)).expect("star-shaped")
}

fn uniform(n: usize) -> Vec<f64> {
    (0..n).map(|i| TAU * i as f64 / n as f64).collect()
}

fn decomposition() -> Outcome {
    let mut angles = 0;
    let mut worst: f64 = 0.0;
    for (i, p) in star_corpus().iter().enumerate() {
        let plan = plan_directions(p, 0);
        let r = decompose_check(p, center(p), &plan, TOL).map_err(|e| format!("shape {i}: {e}"))?;
        angles += r.records.len();
        worst = worst.max(r.max_gap);
        ensure(r.verdict, || format!("shape {i}: gap {}", r.max_gap))?;
    }
    Ok(format!("200 shapes, {angles} angles, max gap {worst:e}"))
}

fn oracle_equivalence() -> Outcome {
    let thetas = uniform(32);
    let mut worst: f64 = 0.0;
    for (i, p) in star_corpus().iter().enumerate() {
        let c = center(p);
        let t = triangulate(p).map_err(|e| e.to_string())?;
        for &theta in &thetas {
            let v = Direction::new(theta);
            let a = boundary_sweep_diagram(p, c, v).map_err(|e| e.to_string())?;
            let b = lower_star_diagram(&t, v);
            let (gap, _) = bottleneck(&a, &b);
            worst = worst.max(gap);
            ensure(gap <= TOL, || {
                format!("shape {i}, theta {theta}: gap {gap}")
            })?;
        }
    }
    Ok(format!("200 shapes x 32 directions, max gap {worst:e}"))
}

fn stability() -> Outcome {
    let mut shapes: Vec<Polygon> = star_corpus().into_iter().take(40).collect();
    shapes.extend([
        arrowhead(),
        perturbed_arrowhead(),
        twin_prongs(),
        five_armed_star(),
        bundled_spiral(),
    ]);
    shapes.extend((0..5).map(|s| convex(8, s).unwrap()));
    let thetas = uniform(128);
    let mut worst: f64 = 0.0;
    for (i, p) in shapes.iter().enumerate() {
        let r = stability_audit(&pht_at(p, &thetas, None).map_err(|e| e.to_string())?, TOL)
            .map_err(|e| e.to_string())?;
        ensure(r.pairs.len() == 128, || {
            format!("shape {i}: {} pairs", r.pairs.len())
        })?;
        worst = worst.max(r.worst_ratio);
        ensure(r.holds, || {
            format!("shape {i}: bound violated, worst ratio {}", r.worst_ratio)
        })?;
    }
    Ok(format!(
        "{} shapes x 128 pairs, worst gap/(K|u-v|) {worst:.4}",
        shapes.len()
    ))
}

fn trivial_monodromy() -> Outcome {
    let mut sections = 0;
    for (i, p) in general_position_stars(100).iter().enumerate() {
        let (_, v) =
            analyze(p, &plan_directions(p, 0), TOL).map_err(|e| format!("shape {i}: {e}"))?;
        ensure(v.covering, || format!("shape {i}: covering fails"))?;
        ensure(v.trivial, || {
            format!("shape {i}: non-trivial, witness {:?}", v.witness_loop)
        })?;
        sections += v.sections.len();
    }
    Ok(format!(
        "100 general-position shapes trivial with exact covering, {sections} sections"
    ))
}

fn nontrivial_monodromy() -> Outcome {
    let p = bundled_spiral();
    ensure(kernel(&p).is_empty(), || "spiral has a center".into())?;
    let plan = plan_directions(&p, 0);
    let (_, first) = analyze(&p, &plan, TOL).map_err(|e| e.to_string())?;
    let (_, second) = analyze(&p, &plan, TOL).map_err(|e| e.to_string())?;
    ensure(!first.trivial, || "spiral reported trivial".into())?;
    let w = first.witness_loop.ok_or("no witness loop")?;
    ensure(w.start.linf(&w.end) > TOL, || {
        "witness returns to its start".into()
    })?;
    ensure(first == second, || "verdicts differ between runs".into())?;
    Ok(format!(
        "witness at theta {:.4}: ({:.4}, {:.4}) -> ({:.4}, {:.4}); deterministic",
        w.theta, w.start.birth, w.start.death, w.end.birth, w.end.death
    ))
}

fn corpus_sectors() -> Vec<Sector> {
    star_corpus()
        .into_iter()
        .chain(star_shaped_fixtures())
        .flat_map(|p| sectors(&p, center(&p), &convex_hull(&p)).expect("center in kernel"))
        .collect()
}

fn trivial_direction() -> Outcome {
    let secs = corpus_sectors();
    for s in &secs {
        let v = sector_trivial_direction(s).map_err(|e| e.to_string())?;
        // Independent check on a triangulation of the sector region.
        let d = sector_diagram_lower_star(s, v).map_err(|e| e.to_string())?;
        let red = d.reduce().map_err(|e| e.to_string())?;
        ensure(red.is_empty(), || {
            format!("sector {} keeps {} classes", s.index, red.len())
        })?;
        ensure(
            (d.points()[0].birth - v.height(s.center)).abs() <= TOL,
            || "essential not born at center".into(),
        )?;
    }
    Ok(format!(
        "{} sectors, all reduced diagrams empty",
        secs.len()
    ))
}

fn strict_arcs() -> Outcome {
    let mut shapes = general_position_stars(100);
    shapes.extend([
        unit_square(),
        arrowhead(),
        perturbed_arrowhead(),
        five_armed_star(),
    ]);
    shapes.extend((0..20).map(|seed| convex(5 + (seed % 10) as usize, seed).unwrap()));
    let (mut checked, mut predicted) = (0, 0);
    for (i, p) in shapes.iter().enumerate() {
        let plan = plan_directions(p, 0);
        let (_, v) = analyze(p, &plan, TOL).map_err(|e| format!("shape {i}: {e}"))?;
        let secs = sectors(p, center(p), &convex_hull(p)).map_err(|e| e.to_string())?;
        for s in v.sections.iter().filter(|s| !s.essential) {
            checked += 1;
            let missed = plan
                .samples
                .iter()
                .any(|smp| !s.support.contains(smp.theta));
            ensure(missed, || {
                format!("shape {i}, section {}: support covers every sample", s.id)
            })?;
            let labels = s.vertex_labels();
            let host_predicts = secs
                .iter()
                .filter(|sec| {
                    let ids: Vec<usize> = sec.polygon_vertices().collect();
                    labels.iter().all(|l| ids.contains(l))
                })
                .any(|sec| {
                    sector_trivial_direction(sec)
                        .map(|d| !s.support.contains(d.theta()))
                        .unwrap_or(false)
                });
            predicted += usize::from(host_predicts);
        }
    }
    ensure(predicted == checked, || {
        format!(
            "host sector direction inside support for {} sections",
            checked - predicted
        )
    })?;
    Ok(format!("{checked} non-essential sections on strict arcs, excluded direction predicted by host sector for all"))
}

fn regular_ngons() -> Outcome {
    let mut failing_gp = 0;
    let mut entries = 0;
    for n in 3..=12 {
        let p = regular_ngon(n).unwrap();
        failing_gp += usize::from(!is_general_position(&p, PARALLEL_TOL).0);
        let s = pht(&p, &plan_directions(&p, 3), None).map_err(|e| e.to_string())?;
        for e in &s.entries {
            entries += 1;
            ensure(
                e.diagram.len() == 1 && e.diagram.points()[0].is_essential(),
                || format!("{n}-gon at theta {}: {} points", e.theta, e.diagram.len()),
            )?;
        }
    }
    Ok(format!("{entries} diagrams over n = 3..12 all single essential points; {failing_gp} of 10 fail general position"))
}

fn convex_one_section() -> Outcome {
    for seed in 0..20u64 {
        let p = convex(5 + (seed % 16) as usize, seed).unwrap();
        let (_, v) = analyze(&p, &plan_directions(&p, 0), TOL).map_err(|e| e.to_string())?;
        ensure(v.trivial && v.sections.len() == 1, || {
            format!("seed {seed}: {} sections", v.sections.len())
        })?;
        let s = &v.sections[0];
        ensure(s.essential && s.support.full_circle, || {
            format!("seed {seed}: section not essential")
        })?;
    }
    Ok("20 convex polygons, one essential full-circle section each".into())
}

fn arrowhead_golden() -> Outcome {
    let p = arrowhead();
    // Looking down, heights are -y: both top corners sit at -3 and the notch
    // vertex (2, 1) joins them at -1.
    let v = Direction::new(1.5 * PI);
    let d = lower_star_diagram(&triangulate(&p).map_err(|e| e.to_string())?, v);
    let expect = PersistenceDiagram::new(vec![
        DiagramPoint::essential(-3.0, None),
        DiagramPoint::finite(-3.0, -1.0, None, None),
    ]);
    ensure(multiset_equal(&d, &expect, 1e-12), || {
        format!("diagram {:?}", d.points())
    })?;
    let secs = sectors(&p, Point::new(2.0, 0.5), &convex_hull(&p)).map_err(|e| e.to_string())?;
    let fin = d.finite().next().copied().ok_or("no finite class")?;
    let mut housing = Vec::new();
    for s in &secs {
        let red = sector_diagram(s, v).reduce().map_err(|e| e.to_string())?;
        if !red.is_empty() {
            housing.push(s.index);
            ensure(
                multiset_equal(&red, &PersistenceDiagram::new(vec![fin]), 1e-12),
                || format!("sector {} diagram {:?}", s.index, red.points()),
            )?;
            let ids: Vec<usize> = s.polygon_vertices().collect();
            ensure(
                [fin.birth_vertex, fin.death_vertex]
                    .iter()
                    .flatten()
                    .all(|l| ids.contains(l)),
                || "class labels outside the sector".into(),
            )?;
            ensure(s.hull_edge.0.y == 3.0 && s.hull_edge.1.y == 3.0, || {
                "housing sector is not the top one".into()
            })?;
        }
    }
    ensure(housing.len() == 1, || {
        format!("class split over sectors {housing:?}")
    })?;
    Ok("{(-3, inf), (-3, -1)} at 3pi/2; finite class housed in the top sector only".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "sector decomposition on 200 star-shaped polygons",
            60,
            decomposition,
        ),
        (
            "boundary sweep agrees with lower-star sweep",
            30,
            oracle_equivalence,
        ),
        ("stability with Lipschitz constant max |w|", 30, stability),
        (
            "trivial monodromy in general position",
            60,
            trivial_monodromy,
        ),
        (
            "non-trivial monodromy of the spiral",
            5,
            nontrivial_monodromy,
        ),
        (
            "every sector has a trivialising direction",
            10,
            trivial_direction,
        ),
        (
            "non-essential sections live on strict arcs",
            10,
            strict_arcs,
        ),
        (
            "regular polygons have a single diagram point",
            5,
            regular_ngons,
        ),
        ("convex polygons have one section", 5, convex_one_section),
        ("arrowhead golden diagram", 1, arrowhead_golden),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_budget = took <= Duration::from_secs(*budget);
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2}. {name}: {detail} [{:.2} s / {budget} s{}]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64(),
            if in_budget { "" } else { ", over budget" }
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

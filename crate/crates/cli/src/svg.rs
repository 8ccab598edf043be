//! Planar pictures of a problem and its solution.
//!
//! Drawn back to front: the `[q, p]` rectangle (dashed), for each point the
//! square of Chebyshev radius `Δ − wᵢ` around it, the 45° boundary lines of
//! the constraint, the unconstrained solution box, the points (hollow) and
//! the reported location (filled). Markers carry `data-x`/`data-y` with the
//! original coordinates.

use std::fmt::Write as _;

use tropolocate_core::location::solve_unconstrained;
use tropolocate_core::{LocationConstraint, LocationProblem, Result, SolutionReport};

pub const CANVAS: f64 = 800.0;
const MARGIN: f64 = 40.0;

/// Equal-aspect affine map from data to canvas coordinates (y up).
#[derive(Clone, Copy, Debug)]
struct View {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    scale: f64,
}

impl View {
    fn fit(xs: &[f64], ys: &[f64]) -> View {
        let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
        let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (cx, cy) = ((min(xs) + max(xs)) / 2.0, (min(ys) + max(ys)) / 2.0);
        let half = ((max(xs) - min(xs)).max(max(ys) - min(ys)) / 2.0 * 1.1).max(1.0);
        View {
            x0: cx - half,
            y0: cy - half,
            x1: cx + half,
            y1: cy + half,
            scale: (CANVAS - 2.0 * MARGIN) / (2.0 * half),
        }
    }

    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        CANVAS - MARGIN - (y - self.y0) * self.scale
    }

    /// Part of `y = x + c` inside the view.
    fn diagonal(&self, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let from = self.x0.max(self.y0 - c);
        let to = self.x1.min(self.y1 - c);
        (from < to).then_some(((from, from + c), (to, to + c)))
    }
}

/// Canvas coordinate with two decimals.
fn px(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Data coordinate in shortest round-trip form.
fn num(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else {
        v.to_string()
    }
}

/// Boundary lines `x₂ = x₁ − a₁₂` and `x₂ = x₁ + a₂₁` of `A ⊗ x ≤ x`.
fn constraint_offsets(problem: &LocationProblem) -> Vec<(&'static str, f64)> {
    let Some(a) = problem.constraint().matrix() else {
        return vec![];
    };
    let mut out = vec![];
    if a.get(0, 1).is_finite() {
        out.push(("a12", -a.get(0, 1).value()));
    }
    if a.get(1, 0).is_finite() {
        out.push(("a21", a.get(1, 0).value()));
    }
    out
}

/// Renders a two-dimensional problem. `rep` is the solution to mark.
pub fn render(problem: &LocationProblem, rep: &SolutionReport) -> Result<String> {
    let free = solve_unconstrained(&problem.with_constraint(LocationConstraint::None)?)?;
    let bx = free
        .solution_box
        .as_ref()
        .expect("unconstrained solution has a box");
    let (p, q) = (rep.p.to_f64s(), rep.q.to_f64s());
    let (lo, hi) = (bx.lower.to_f64s(), bx.upper.to_f64s());
    let w = rep.witness.to_f64s();
    let points: Vec<Vec<f64>> = problem.points().iter().map(|r| r.to_f64s()).collect();
    let radii: Vec<f64> = problem.weights().iter().map(|wi| rep.delta - wi).collect();

    let mut xs = vec![p[0], q[0], lo[0], hi[0], w[0]];
    let mut ys = vec![p[1], q[1], lo[1], hi[1], w[1]];
    for (r, &rad) in points.iter().zip(&radii) {
        let rad = rad.max(0.0);
        xs.extend([r[0] - rad, r[0] + rad]);
        ys.extend([r[1] - rad, r[1] + rad]);
    }
    let v = View::fit(&xs, &ys);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(
        s,
        "<title>{} problem, optimal value {}</title>",
        rep.constraint_kind,
        num(rep.delta)
    );
    let _ = writeln!(
        s,
        r#"<rect width="{c}" height="{c}" fill="white"/>"#,
        c = CANVAS
    );

    // [q, p]; q ≤ p componentwise is not guaranteed once weights differ.
    let (rx0, rx1) = (q[0].min(p[0]), q[0].max(p[0]));
    let (ry0, ry1) = (q[1].min(p[1]), q[1].max(p[1]));
    let _ = writeln!(
        s,
        r##"<rect class="enclosing" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#555" stroke-width="1" stroke-dasharray="6 4"/>"##,
        px(v.x(rx0)),
        px(v.y(ry1)),
        px((rx1 - rx0) * v.scale),
        px((ry1 - ry0) * v.scale)
    );

    for (r, &rad) in points.iter().zip(&radii) {
        if rad > 0.0 {
            let _ = writeln!(
                s,
                r##"<rect class="level" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#9ab" stroke-width="1"/>"##,
                px(v.x(r[0] - rad)),
                px(v.y(r[1] + rad)),
                px(2.0 * rad * v.scale),
                px(2.0 * rad * v.scale)
            );
        }
    }

    for (name, c) in constraint_offsets(problem) {
        if let Some(((ax, ay), (bx_, by))) = v.diagonal(c) {
            let _ = writeln!(
                s,
                r##"<line class="constraint" data-entry="{name}" data-offset="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c33" stroke-width="1.5"/>"##,
                num(c),
                px(v.x(ax)),
                px(v.y(ay)),
                px(v.x(bx_)),
                px(v.y(by))
            );
        }
    }

    if lo[0] < hi[0] && lo[1] < hi[1] {
        let _ = writeln!(
            s,
            r##"<rect class="solution" x="{}" y="{}" width="{}" height="{}" fill="#36c" fill-opacity="0.25" stroke="#36c" stroke-width="4"/>"##,
            px(v.x(lo[0])),
            px(v.y(hi[1])),
            px((hi[0] - lo[0]) * v.scale),
            px((hi[1] - lo[1]) * v.scale)
        );
    } else {
        let _ = writeln!(
            s,
            r##"<line class="solution" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#36c" stroke-width="6" stroke-linecap="round"/>"##,
            px(v.x(lo[0])),
            px(v.y(lo[1])),
            px(v.x(hi[0])),
            px(v.y(hi[1]))
        );
    }

    for r in &points {
        let _ = writeln!(
            s,
            r#"<circle class="point" data-x="{}" data-y="{}" cx="{}" cy="{}" r="6" fill="white" stroke="black" stroke-width="2"/>"#,
            num(r[0]),
            num(r[1]),
            px(v.x(r[0])),
            px(v.y(r[1]))
        );
    }
    let _ = writeln!(
        s,
        r#"<circle class="witness" data-x="{}" data-y="{}" cx="{}" cy="{}" r="7" fill="black"/>"#,
        num(w[0]),
        num(w[1]),
        px(v.x(w[0])),
        px(v.y(w[1]))
    );
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropolocate_core::location::solve;
    use tropolocate_core::TropMatrix;

    fn worked(constraint: LocationConstraint) -> (LocationProblem, SolutionReport) {
        let prob =
            LocationProblem::new(&[[-2.0, 5.0], [6.0, 13.0]], &[0.0, 0.0], constraint).unwrap();
        let rep = solve(&prob, 1e-9).unwrap();
        (prob, rep)
    }

    #[test]
    fn unconstrained_markers() {
        let (prob, rep) = worked(LocationConstraint::None);
        let svg = render(&prob, &rep).unwrap();
        assert_eq!(svg.matches(r#"class="point""#).count(), 2);
        assert_eq!(svg.matches(r#"class="witness""#).count(), 1);
        assert!(svg.contains(r#"class="witness" data-x="2" data-y="9""#));
        assert!(!svg.contains("constraint"));
        assert_eq!(svg, render(&prob, &rep).unwrap());
    }

    #[test]
    fn equality_lines() {
        let a = TropMatrix::from_rows(&[[0.0, -3.0], [-5.0, -2.0]]).unwrap();
        let (prob, rep) = worked(LocationConstraint::Equality(a));
        let svg = render(&prob, &rep).unwrap();
        assert_eq!(svg.matches(r#"class="constraint""#).count(), 2);
        assert!(svg.contains(r#"data-offset="3""#) && svg.contains(r#"data-offset="-5""#));
        assert!(svg.contains(r#"class="witness" data-x="8" data-y="3""#));
    }

    #[test]
    fn single_point() {
        let prob = LocationProblem::unweighted(&[[3.0, -1.0]]).unwrap();
        let rep = solve(&prob, 1e-9).unwrap();
        let svg = render(&prob, &rep).unwrap();
        assert!(svg.contains(r#"class="witness" data-x="3" data-y="-1""#));
        // Degenerate [q, p] rectangle and a zero-length solution stroke.
        assert!(svg.contains(r#"width="0.00" height="0.00""#));
        assert!(svg.contains(r#"<line class="solution""#));
    }

    #[test]
    fn view_is_square_and_contains_everything() {
        let v = View::fit(&[0.0, 10.0], &[0.0, 2.0]);
        assert!((v.x1 - v.x0 - (v.y1 - v.y0)).abs() < 1e-12);
        for (x, y) in [(0.0, 0.0), (10.0, 2.0)] {
            assert!((MARGIN..=CANVAS - MARGIN).contains(&v.x(x)));
            assert!((MARGIN..=CANVAS - MARGIN).contains(&v.y(y)));
        }
        assert!(v.diagonal(100.0).is_none());
    }
}

//! Text and SVG renderings of cell diagrams and Ext charts.
//!
//! Cell diagrams put degree 0 at the top and grow downward. Charts put the
//! stem `t - s` on the horizontal axis and the filtration `s` on the vertical
//! one, with `s = 0` at the bottom.

use std::fmt::Write;

use crate::a1algebra::Gen;
use crate::a1modules::{A1Module, GradedA1Module};
use crate::resolutions::ExtChart;

fn edges(m: &A1Module, g: Gen, d: i32) -> Vec<(usize, usize)> {
    let mat = m.sq(g, d);
    (0..m.dim(d))
        .flat_map(|i| mat.column(i).ones().map(move |j| (i, j)).collect::<Vec<_>>())
        .collect()
}

/// One line per degree: the cells as `o`, then the nonzero `Sq1` and `Sq2`
/// edges leaving that degree, with cells named `degree.index`.
pub fn ascii_cells(m: &A1Module) -> String {
    let mut out = String::new();
    writeln!(out, "{}", m.name()).unwrap();
    if m.is_zero() {
        out.push_str("  (zero module)\n");
        return out;
    }
    let width = m.degrees().map(|d| m.dim(d)).max().unwrap_or(0) * 2;
    for d in m.degrees() {
        let cells = vec!["o"; m.dim(d)].join(" ");
        let mut labels = Vec::new();
        for g in [Gen::Sq1, Gen::Sq2] {
            for (i, j) in edges(m, g, d) {
                labels.push(format!("{g:?} {d}.{i}->{}.{j}", d + g.degree()));
            }
        }
        let line = format!("{d:>4} | {cells:<width$} {}", labels.join("  "));
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

const CELL_DX: f64 = 40.0;
const CELL_DY: f64 = 40.0;
const MARGIN: f64 = 50.0;

/// Cells as circles, `Sq1` as straight segments and `Sq2` as arcs bowing to
/// the right. Degree increases downward.
pub fn svg_cells(m: &A1Module) -> String {
    let lo = m.bottom_degree().unwrap_or(0);
    let hi = m.top_degree().unwrap_or(0);
    let widest = m.degrees().map(|d| m.dim(d)).max().unwrap_or(1).max(1);
    let width = 2.0 * MARGIN + CELL_DX * widest as f64 + 40.0;
    let height = 2.0 * MARGIN + CELL_DY * (hi - lo) as f64;
    let pos = |d: i32, i: usize| (MARGIN + 20.0 + CELL_DX * i as f64, MARGIN + CELL_DY * (d - lo) as f64);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{}</title>", xml_escape(m.name())).unwrap();
    for d in m.degrees() {
        let (_, y) = pos(d, 0);
        writeln!(
            out,
            r#"  <text x="10" y="{}" font-family="monospace" font-size="12">{d}</text>"#,
            y + 4.0
        )
        .unwrap();
    }
    for d in m.degrees() {
        for (i, j) in edges(m, Gen::Sq1, d) {
            let (x1, y1) = pos(d, i);
            let (x2, y2) = pos(d + 1, j);
            writeln!(
                out,
                r#"  <line class="sq1" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1.5"/>"#
            )
            .unwrap();
        }
        for (i, j) in edges(m, Gen::Sq2, d) {
            let (x1, y1) = pos(d, i);
            let (x2, y2) = pos(d + 2, j);
            let cx = x1.max(x2) + 30.0;
            let cy = (y1 + y2) / 2.0;
            writeln!(
                out,
                r#"  <path class="sq2" d="M {x1} {y1} Q {cx} {cy} {x2} {y2}" fill="none" stroke="black" stroke-width="1.5"/>"#
            )
            .unwrap();
        }
    }
    for d in m.degrees() {
        for i in 0..m.dim(d) {
            let (x, y) = pos(d, i);
            writeln!(
                out,
                r#"  <circle class="cell" cx="{x}" cy="{y}" r="5" fill="white" stroke="black" stroke-width="1.5"/>"#
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn stem_range(chart: &ExtChart) -> (i32, i32) {
    let lo = chart.entries().map(|((s, t), _)| t - s as i32).min().unwrap_or(0).min(0);
    (lo, chart.reliable_max_t().max(lo))
}

/// A grid with stems across and filtrations up. Digits are counts (`+` for
/// ten or more), `.` is zero and `?` marks the unstable region.
pub fn ascii_chart(chart: &ExtChart) -> String {
    let (lo, hi) = stem_range(chart);
    let mut out = String::new();
    for s in (0..=chart.max_s()).rev() {
        write!(out, "{s:>3} |").unwrap();
        for n in lo..=hi {
            let c = match chart.get(s, n + s as i32) {
                None => '?',
                Some(0) => '.',
                Some(k) if k < 10 => char::from_digit(k as u32, 10).unwrap(),
                Some(_) => '+',
            };
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    write!(out, "    +").unwrap();
    for _ in lo..=hi {
        out.push_str("--");
    }
    out.push('\n');
    write!(out, "     ").unwrap();
    for n in lo..=hi {
        write!(out, "{:>2}", n.rem_euclid(10)).unwrap();
    }
    out.push('\n');
    writeln!(out, "stem t-s across, filtration s up; '?' = beyond reliable t <= {}", chart.reliable_max_t()).unwrap();
    out
}

const CHART_STEP: f64 = 30.0;

/// Dot chart: each class is a dot, several classes in one bidegree sit side
/// by side. The unstable region is shaded.
pub fn svg_chart(chart: &ExtChart) -> String {
    let (lo, hi) = stem_range(chart);
    let cols = (hi - lo + 1) as f64;
    let rows = (chart.max_s() + 1) as f64;
    let width = 2.0 * MARGIN + CHART_STEP * cols;
    let height = 2.0 * MARGIN + CHART_STEP * rows;
    let x_of = |n: i32| MARGIN + CHART_STEP * ((n - lo) as f64 + 0.5);
    let y_of = |s: usize| height - MARGIN - CHART_STEP * (s as f64 + 0.5);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "  <title>Ext chart, stem t-s horizontal, filtration s vertical</title>").unwrap();
    for s in 0..=chart.max_s() {
        for n in lo..=hi {
            if chart.get(s, n + s as i32).is_none() {
                let (x, y) = (x_of(n) - CHART_STEP / 2.0, y_of(s) - CHART_STEP / 2.0);
                writeln!(
                    out,
                    r##"  <rect class="unstable" x="{x}" y="{y}" width="{CHART_STEP}" height="{CHART_STEP}" fill="#dddddd"/>"##
                )
                .unwrap();
            }
        }
    }
    let base = height - MARGIN;
    writeln!(
        out,
        r#"  <line x1="{MARGIN}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        width - MARGIN
    )
    .unwrap();
    writeln!(out, r#"  <line x1="{MARGIN}" y1="{base}" x2="{MARGIN}" y2="{MARGIN}" stroke="black"/>"#).unwrap();
    for n in lo..=hi {
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="middle">{n}</text>"#,
            x_of(n),
            base + 14.0
        )
        .unwrap();
    }
    for s in 0..=chart.max_s() {
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="end">{s}</text>"#,
            MARGIN - 4.0,
            y_of(s) + 3.0
        )
        .unwrap();
    }
    for ((s, t), k) in chart.entries() {
        let n = t - s as i32;
        for i in 0..k {
            let off = (i as f64 - (k as f64 - 1.0) / 2.0) * 7.0;
            writeln!(
                out,
                r#"  <circle class="class" cx="{}" cy="{}" r="3" fill="black"/>"#,
                x_of(n) + off,
                y_of(s)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::a1algebra::parse_element;
    use crate::a1modules::{cyclic_quotient, f2, free_module};
    use crate::resolutions::{ext_chart, minimal_resolution};

    fn cells_line_count(text: &str) -> usize {
        text.lines().filter(|l| l.contains('|')).count()
    }

    #[test]
    fn ascii_f2_is_one_cell() {
        let text = ascii_cells(&f2());
        assert_eq!(cells_line_count(&text), 1);
        assert_eq!(text.matches('o').count(), 1);
    }

    #[test]
    fn ascii_ku_module_has_one_arc() {
        let m = cyclic_quotient(&[parse_element("Sq1").unwrap(), parse_element("Sq3").unwrap()], "ku");
        let text = ascii_cells(&m);
        assert_eq!(text.matches(" o").count(), 2);
        assert_eq!(text.matches("Sq2 ").count(), 1);
        assert_eq!(text.matches("Sq1 ").count(), 0);
    }

    #[test]
    fn ascii_a1_degree_three_has_two_cells() {
        let text = ascii_cells(&free_module(&[0]));
        let row = text.lines().find(|l| l.trim_start().starts_with("3 |")).unwrap();
        assert!(row.contains("o o"));
        assert_eq!(text.matches('o').count(), 8);
    }

    #[test]
    fn svg_cells_counts() {
        let svg = svg_cells(&free_module(&[0]));
        assert_eq!(svg.matches("class=\"cell\"").count(), 8);
        assert!(svg.contains("class=\"sq1\""));
        assert!(svg.contains("class=\"sq2\""));
    }

    #[test]
    fn ascii_chart_marks_unstable() {
        let chart = ext_chart(&minimal_resolution(&f2(), 3, 12));
        let text = ascii_chart(&chart);
        assert!(text.contains('?'));
        let bottom = text.lines().nth(3).unwrap();
        assert!(bottom.starts_with("  0 | 1"));
    }

    #[test]
    fn svg_chart_dots_match_entries() {
        let chart = ext_chart(&minimal_resolution(&f2(), 4, 16));
        let total: usize = chart.entries().map(|(_, k)| k).sum();
        assert_eq!(svg_chart(&chart).matches("class=\"class\"").count(), total);
    }
}

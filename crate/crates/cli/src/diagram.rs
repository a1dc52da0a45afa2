//! Momentum-line diagram: one horizontal axis, a tick per critical value
//! labelled with the value and the number of fixed points over it, and a
//! marker at the chosen level.

use quotient_core::exactalg::format_rational;
use quotient_core::{CriticalLevel, Rational};
use num_traits::ToPrimitive;
use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 140.0;
const MARGIN: f64 = 60.0;
const AXIS_Y: f64 = 70.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(title: &str, levels: &[CriticalLevel], level: &Rational) -> String {
    let lo = levels.first().map(|l| l.value.clone()).unwrap_or_default();
    let hi = levels.last().map(|l| l.value.clone()).unwrap_or_default();
    let span = &hi - &lo;
    let x = |v: &Rational| -> f64 {
        if span == Rational::default() {
            WIDTH / 2.0
        } else {
            MARGIN + ((v - &lo) / &span).to_f64().unwrap_or(0.0) * (WIDTH - 2.0 * MARGIN)
        }
    };
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="12">"#,
        w = WIDTH,
        h = HEIGHT
    )
    .unwrap();
    writeln!(s, r#"  <title>{}</title>"#, escape(title)).unwrap();
    writeln!(
        s,
        r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.5"/>"#,
        MARGIN / 2.0,
        AXIS_Y,
        WIDTH - MARGIN / 2.0,
        AXIS_Y
    )
    .unwrap();
    for l in levels {
        let px = x(&l.value);
        writeln!(
            s,
            r#"  <line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#,
            AXIS_Y - 8.0,
            AXIS_Y + 8.0
        )
        .unwrap();
        writeln!(
            s,
            r#"  <text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            AXIS_Y - 14.0,
            escape(&format_rational(&l.value))
        )
        .unwrap();
        writeln!(
            s,
            r#"  <text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            AXIS_Y + 24.0,
            l.fixed_points.len()
        )
        .unwrap();
    }
    if levels.is_empty() || (level >= &lo && level <= &hi) {
        let px = x(level);
        writeln!(
            s,
            r#"  <path d="M {px:.2} {:.2} l -6 -10 l 12 0 z" fill="crimson"/>"#,
            AXIS_Y - 30.0
        )
        .unwrap();
        writeln!(
            s,
            r#"  <text x="{px:.2}" y="{:.2}" text-anchor="middle" fill="crimson">level {}</text>"#,
            AXIS_Y - 44.0,
            escape(&format_rational(level))
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"  <text x="{:.2}" y="{:.2}">fixed points per critical value shown below the axis</text>"#,
        MARGIN / 2.0,
        HEIGHT - 10.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

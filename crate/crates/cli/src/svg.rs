//! Horizontal number-line rulers with one tick per jump.
//!
//! Tick positions are the only decimals in any output; every tick carries
//! its exact value as a label and a `<title>`.

use std::fmt::Write;

use jumpcoef::rational::{format_rational, to_f64, Rational};
use num_traits::Zero;

const WIDTH: f64 = 1000.0;
const LEFT: f64 = 40.0;
const RIGHT: f64 = 40.0;
const ROW: f64 = 110.0;

pub struct Ruler {
    pub label: String,
    pub cutoff: Rational,
    pub ticks: Vec<Rational>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Rulers share one scale, running from 0 to the largest cutoff.
pub fn render(rulers: &[Ruler]) -> String {
    let top = rulers
        .iter()
        .map(|r| r.cutoff.clone())
        .max()
        .filter(|c| !c.is_zero())
        .unwrap_or_else(|| Rational::from_integer(1.into()));
    let span = WIDTH - LEFT - RIGHT;
    let x_of = |v: &Rational| LEFT + span * to_f64(v) / to_f64(&top);
    let height = ROW * rulers.len() as f64 + 10.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    out.push_str(
        "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n",
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"#
    );
    out.push_str("<style>.axis{stroke:black;stroke-width:1.5}.tick{stroke:black;stroke-width:1}text{font-family:sans-serif;font-size:9px;text-anchor:middle}</style>\n");

    for (row, ruler) in rulers.iter().enumerate() {
        let base = ROW * row as f64 + 30.0;
        let axis_y = base + 30.0;
        let _ = writeln!(out, r#"<g class="ruler" id="ruler-{row}">"#);
        let _ = writeln!(
            out,
            r#"<text class="caption" x="{LEFT}" y="{base:.1}" style="text-anchor:start;font-size:12px">{}</text>"#,
            escape(&ruler.label)
        );
        let _ = writeln!(
            out,
            r#"<line class="axis" x1="{LEFT}" y1="{axis_y:.1}" x2="{:.3}" y2="{axis_y:.1}"/>"#,
            x_of(&ruler.cutoff)
        );
        for (k, t) in ruler.ticks.iter().enumerate() {
            let x = x_of(t);
            let label = format_rational(t);
            // stagger labels over three rows so dense clusters stay legible
            let ly = axis_y + 16.0 + 11.0 * (k % 3) as f64;
            let _ = writeln!(
                out,
                r#"<line class="tick" x1="{x:.3}" y1="{:.1}" x2="{x:.3}" y2="{:.1}"><title>{label}</title></line>"#,
                axis_y - 8.0,
                axis_y + 8.0
            );
            let _ = writeln!(
                out,
                r#"<text class="label" x="{x:.3}" y="{ly:.1}">{label}</text>"#
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use jumpcoef::rational::{int, rat};

    #[test]
    fn one_tick_per_jump() {
        let r = Ruler {
            label: "(s^3, t^4)".into(),
            cutoff: int(1),
            ticks: vec![rat(7, 12), rat(5, 6), rat(11, 12), int(1)],
        };
        let svg = render(&[r]);
        assert_eq!(svg.matches(r#"class="tick""#).count(), 4);
        assert!(svg.contains(">7/12</text>"));
        assert!(svg.contains(r#"x1="960.000""#));
    }

    #[test]
    fn labels_are_escaped() {
        let r = Ruler {
            label: "a<b".into(),
            cutoff: int(2),
            ticks: vec![],
        };
        assert!(render(&[r]).contains("a&lt;b"));
    }
}

//! Standalone SVG 1.1 scatterplots.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlotError {
    #[error("plot has no points")]
    NoPoints,
    #[error("plot area {width}x{height} leaves no room inside a margin of {margin}")]
    TooSmall {
        width: u32,
        height: u32,
        margin: u32,
    },
    #[error("non-finite point coordinate")]
    NonFinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    title: String,
    x_label: String,
    y_label: String,
    points: Vec<(f64, f64)>,
    width: u32,
    height: u32,
    margin: u32,
}

impl PlotSpec {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
        points: Vec<(f64, f64)>,
        width: u32,
        height: u32,
        margin: u32,
    ) -> Result<Self, PlotError> {
        if points.is_empty() {
            return Err(PlotError::NoPoints);
        }
        if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(PlotError::NonFinite);
        }
        if width <= 2 * margin || height <= 2 * margin {
            return Err(PlotError::TooSmall {
                width,
                height,
                margin,
            });
        }
        Ok(PlotSpec {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            points,
            width,
            height,
            margin,
        })
    }

    /// 640x480 with a 60 pixel margin.
    pub fn with_defaults(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
        points: Vec<(f64, f64)>,
    ) -> Result<Self, PlotError> {
        PlotSpec::new(title, x_label, y_label, points, 640, 480, 60)
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// Data range of one axis and the padded range mapped onto the plot area.
struct Axis {
    min: f64,
    max: f64,
    lo: f64,
    hi: f64,
}

impl Axis {
    fn new(values: impl Iterator<Item = f64>) -> Axis {
        let (min, max) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
            (a.min(v), b.max(v))
        });
        let (lo, hi) = if max > min {
            (min, max)
        } else {
            (min - 0.5, max + 0.5)
        };
        let pad = 0.05 * (hi - lo);
        Axis {
            min,
            max,
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    /// Fraction of the padded range, 0 at `lo` and 1 at `hi`.
    fn unit(&self, v: f64) -> f64 {
        (v - self.lo) / (self.hi - self.lo)
    }
}

pub fn scatter_svg(spec: &PlotSpec) -> String {
    let (w, h, m) = (spec.width as f64, spec.height as f64, spec.margin as f64);
    let plot_w = w - 2.0 * m;
    let plot_h = h - 2.0 * m;
    let xa = Axis::new(spec.points.iter().map(|p| p.0));
    let ya = Axis::new(spec.points.iter().map(|p| p.1));
    let px = |x: f64| m + xa.unit(x) * plot_w;
    let py = |y: f64| h - m - ya.unit(y) * plot_h;
    let bottom = h - m;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        spec.width, spec.height, spec.width, spec.height
    )
    .unwrap();
    s.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">{}</text>",
        coord(w / 2.0),
        coord(m / 2.0),
        escape(&spec.title)
    )
    .unwrap();

    s.push_str("<g stroke=\"black\" stroke-width=\"1\">\n");
    writeln!(
        s,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        coord(m),
        coord(bottom),
        coord(w - m),
        coord(bottom)
    )
    .unwrap();
    writeln!(
        s,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        coord(m),
        coord(m),
        coord(m),
        coord(bottom)
    )
    .unwrap();
    for x in ticks(&xa) {
        let x = px(x);
        writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            coord(x),
            coord(bottom),
            coord(x),
            coord(bottom + 5.0)
        )
        .unwrap();
    }
    for y in ticks(&ya) {
        let y = py(y);
        writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            coord(m - 5.0),
            coord(y),
            coord(m),
            coord(y)
        )
        .unwrap();
    }
    s.push_str("</g>\n");

    s.push_str("<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n");
    for x in ticks(&xa) {
        writeln!(
            s,
            "<text class=\"x-tick\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            coord(px(x)),
            coord(bottom + 18.0),
            tick_label(x)
        )
        .unwrap();
    }
    for y in ticks(&ya) {
        writeln!(
            s,
            "<text class=\"y-tick\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            coord(m - 8.0),
            coord(py(y) + 4.0),
            tick_label(y)
        )
        .unwrap();
    }
    writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
        coord(m + plot_w / 2.0),
        coord(h - m / 4.0),
        escape(&spec.x_label)
    )
    .unwrap();
    writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 {} {})\">{}</text>",
        coord(m / 4.0),
        coord(m + plot_h / 2.0),
        coord(m / 4.0),
        coord(m + plot_h / 2.0),
        escape(&spec.y_label)
    )
    .unwrap();
    s.push_str("</g>\n");

    s.push_str("<g fill=\"steelblue\" stroke=\"navy\" stroke-width=\"0.5\">\n");
    for &(x, y) in &spec.points {
        writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\"/>",
            coord(px(x)),
            coord(py(y))
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

fn ticks(axis: &Axis) -> Vec<f64> {
    if axis.max > axis.min {
        vec![axis.min, axis.max]
    } else {
        vec![axis.min]
    }
}

fn coord(v: f64) -> String {
    format!("{v:.2}")
}

/// Up to four decimals, trailing zeros removed.
fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

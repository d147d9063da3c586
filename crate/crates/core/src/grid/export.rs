use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{raw_crossings, GridDiagram, GridError, StrandRole};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Ascii,
    Svg,
    Json,
}

impl FromStr for ExportFormat {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" => Ok(ExportFormat::Ascii),
            "svg" => Ok(ExportFormat::Svg),
            "json" => Ok(ExportFormat::Json),
            _ => Err(GridError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn export(g: &GridDiagram, format: ExportFormat) -> String {
    match format {
        ExportFormat::Ascii => to_ascii(g),
        ExportFormat::Svg => to_svg(g),
        ExportFormat::Json => g.to_json(),
    }
}

fn to_ascii(g: &GridDiagram) -> String {
    let mut out = String::with_capacity(g.n() * (g.n() * 2 + 1));
    for r in 0..g.n() {
        for c in 0..g.n() {
            out.push(if g.x_in_row(r) == c {
                'X'
            } else if g.o_in_row(r) == c {
                'O'
            } else {
                '\u{b7}'
            });
        }
        out.push('\n');
    }
    out
}

const CELL: usize = 24;
const MARGIN: usize = 12;

fn centre(i: usize) -> usize {
    MARGIN + i * CELL + CELL / 2
}

fn to_svg(g: &GridDiagram) -> String {
    let n = g.n();
    let size = n * CELL + 2 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" ",
        "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n",
        "<style>.grid{stroke:#ddd;stroke-width:1}.h,.v{stroke-width:2;fill:none}",
        ".long{stroke:#c0392b}.short{stroke:#222}.gap{fill:#fff}",
        "text{font-family:monospace;font-size:16px;text-anchor:middle;dominant-baseline:central}</style>\n",
    ));
    let _ = writeln!(s, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
    for i in 0..=n {
        let p = MARGIN + i * CELL;
        let end = MARGIN + n * CELL;
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{p}" y1="{MARGIN}" x2="{p}" y2="{end}"/>"#
        );
        let _ = writeln!(
            s,
            r#"<line class="grid" x1="{MARGIN}" y1="{p}" x2="{end}" y2="{p}"/>"#
        );
    }
    let kind = |role: StrandRole| if role.is_long() { "long" } else { "short" };
    for r in 0..n {
        let (x1, x2, y) = (centre(g.o_in_row(r)), centre(g.x_in_row(r)), centre(r));
        let _ = writeln!(
            s,
            r#"<line class="h {}" x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" marker-end="url(#arrow)"/>"#,
            kind(g.row_roles()[r])
        );
    }
    // Verticals pass over: blank the horizontal around each crossing first.
    let half = CELL / 4;
    for (r, c) in raw_crossings(g) {
        let _ = writeln!(
            s,
            r#"<rect class="gap" x="{}" y="{}" width="{}" height="{}"/>"#,
            centre(c) - half,
            centre(r) - half,
            2 * half,
            2 * half
        );
    }
    for c in 0..n {
        let (y1, y2, x) = (
            centre(g.x_in_column(c)),
            centre(g.o_in_column(c)),
            centre(c),
        );
        let _ = writeln!(
            s,
            r#"<line class="v {}" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" marker-end="url(#arrow)"/>"#,
            kind(g.column_roles()[c])
        );
    }
    for r in 0..n {
        for (c, label) in [(g.x_in_row(r), 'X'), (g.o_in_row(r), 'O')] {
            let (x, y) = (centre(c), centre(r));
            let _ = writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#,
                x - 8,
                y - 8,
                16,
                16
            );
            let _ = writeln!(s, r#"<text x="{x}" y="{y}">{label}</text>"#);
        }
    }
    s.push_str("</svg>\n");
    s
}

/// JSON layout of a grid. Marker columns are 1-based, listed by row from the
/// top.
#[derive(Serialize, Deserialize)]
struct GridJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "O")]
    o: Vec<usize>,
    column_roles: Vec<StrandRole>,
    row_roles: Vec<StrandRole>,
    long_vertical_order: Vec<usize>,
    long_horizontal_order: Vec<usize>,
}

impl GridDiagram {
    pub fn to_json(&self) -> String {
        let one_based = |v: &[usize]| v.iter().map(|c| c + 1).collect::<Vec<_>>();
        let doc = GridJson {
            n: self.n(),
            x: one_based(self.x_columns()),
            o: one_based(self.o_columns()),
            column_roles: self.column_roles().to_vec(),
            row_roles: self.row_roles().to_vec(),
            long_vertical_order: one_based(self.long_vertical_order()),
            long_horizontal_order: one_based(self.long_horizontal_order()),
        };
        serde_json::to_string_pretty(&doc).expect("grid JSON serializes")
    }

    /// Parses the output of [`GridDiagram::to_json`]. The long-strand orders
    /// must agree with the roles.
    pub fn from_json(text: &str) -> Result<GridDiagram, GridError> {
        let doc: GridJson =
            serde_json::from_str(text).map_err(|e| GridError::Json(e.to_string()))?;
        let zero_based = |v: Vec<usize>| {
            v.into_iter()
                .map(|c| {
                    c.checked_sub(1)
                        .ok_or_else(|| GridError::Json("indices are 1-based".into()))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        if doc.x.len() != doc.n {
            return Err(GridError::Json(format!(
                "n = {} but {} rows",
                doc.n,
                doc.x.len()
            )));
        }
        let lv = zero_based(doc.long_vertical_order)?;
        let lh = zero_based(doc.long_horizontal_order)?;
        let g = GridDiagram::new(
            zero_based(doc.x)?,
            zero_based(doc.o)?,
            doc.column_roles,
            doc.row_roles,
        )?;
        if g.long_vertical_order() != lv || g.long_horizontal_order() != lh {
            return Err(GridError::Json(
                "long strand orders disagree with the roles".into(),
            ));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::build_grid;
    use crate::orbit::OrbitCombinatorics;

    fn trefoil() -> GridDiagram {
        build_grid(&OrbitCombinatorics::new(&"xyxyy".parse().unwrap())).unwrap()
    }

    #[test]
    fn ascii_has_one_x_and_one_o_per_line() {
        let text = export(&trefoil(), ExportFormat::Ascii);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        for l in lines {
            assert_eq!(l.chars().count(), 8);
            assert_eq!(l.matches('X').count(), 1);
            assert_eq!(l.matches('O').count(), 1);
        }
    }

    #[test]
    fn svg_marks_every_crossing() {
        let svg = export(&trefoil(), ExportFormat::Svg);
        assert_eq!(svg.matches(r#"class="gap""#).count(), 6);
        assert!(svg.starts_with("<svg"));
    }

    #[test]
    fn json_round_trips() {
        let g = trefoil();
        let back = GridDiagram::from_json(&export(&g, ExportFormat::Json)).unwrap();
        assert_eq!(back, g);
        assert!(export(&g, ExportFormat::Json).contains(r#""c_long": 1"#));
    }

    #[test]
    fn unknown_format() {
        assert_eq!(
            "png".parse::<ExportFormat>(),
            Err(GridError::UnknownFormat("png".into()))
        );
        assert_eq!("SVG".parse::<ExportFormat>(), Ok(ExportFormat::Svg));
    }
}

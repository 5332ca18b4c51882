//! Plain-text and SVG views of the phase-space grid.
//!
//! Alpha runs left to right, beta bottom to top, and the origin sits in the
//! bottom-left corner as 'o'. In a bundle view every other cell shows the
//! 1-based report index of the curve through that point; a single-curve view
//! marks the curve's points with 'x'.

use crate::gf::Field;
use crate::phasespace::{Bundle, Curve};

fn grid_to_text(d: usize, grid: &[Vec<char>]) -> String {
    let mut out = String::new();
    for (b, row) in grid.iter().enumerate().rev() {
        out.push_str(&format!(" {b} |"));
        for &cell in row {
            out.push(' ');
            out.push(cell);
        }
        out.push('\n');
    }
    out.push_str("   +");
    out.push_str(&"-".repeat(2 * d));
    out.push('\n');
    out.push_str("    ");
    for a in 0..d {
        out.push_str(&format!(" {a}"));
    }
    out.push('\n');
    out
}

pub fn ascii_curve(field: &Field, curve: &Curve) -> String {
    let d = field.order() as usize;
    let mut grid = vec![vec!['.'; d]; d];
    grid[0][0] = 'o';
    for p in curve.nonzero_points() {
        grid[p.beta.val() as usize][p.alpha.val() as usize] = 'x';
    }
    grid_to_text(d, &grid)
}

pub fn ascii_bundle(field: &Field, bundle: &Bundle) -> String {
    let d = field.order() as usize;
    let mut grid = vec![vec!['.'; d]; d];
    grid[0][0] = 'o';
    for (i, curve) in bundle.curves().iter().enumerate() {
        let mark = char::from_digit((i + 1) as u32, 10).unwrap_or('?');
        for p in curve.nonzero_points() {
            grid[p.beta.val() as usize][p.alpha.val() as usize] = mark;
        }
    }
    grid_to_text(d, &grid)
}

const PALETTE: [&str; 9] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f",
];

const CELL: usize = 40;
const MARGIN: usize = 50;

fn svg_open(d: usize) -> (String, usize) {
    let side = 2 * MARGIN + d * CELL;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{side}\" height=\"{side}\" \
         viewBox=\"0 0 {side} {side}\">\n"
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{side}\" height=\"{side}\" fill=\"#ffffff\"/>\n"
    ));
    (out, side)
}

fn svg_cell(out: &mut String, d: usize, a: usize, b: usize, fill: &str, text: &str) {
    let x = MARGIN + a * CELL;
    let y = MARGIN + (d - 1 - b) * CELL;
    out.push_str(&format!(
        "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" \
         stroke=\"#333333\"/>\n"
    ));
    if !text.is_empty() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
             font-size=\"16\" fill=\"#000000\">{text}</text>\n",
            x + CELL / 2,
            y + CELL / 2 + 6,
        ));
    }
}

fn svg_axes(out: &mut String, d: usize, side: usize) {
    for a in 0..d {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
             font-size=\"14\" fill=\"#000000\">{a}</text>\n",
            MARGIN + a * CELL + CELL / 2,
            MARGIN + d * CELL + 20,
        ));
    }
    for b in 0..d {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
             font-size=\"14\" fill=\"#000000\">{b}</text>\n",
            MARGIN - 20,
            MARGIN + (d - 1 - b) * CELL + CELL / 2 + 5,
        ));
    }
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
         font-size=\"14\" fill=\"#000000\">alpha</text>\n",
        MARGIN + d * CELL / 2,
        side - 8,
    ));
    out.push_str(&format!(
        "<text x=\"12\" y=\"{}\" text-anchor=\"middle\" font-family=\"monospace\" \
         font-size=\"14\" fill=\"#000000\">beta</text>\n",
        MARGIN + d * CELL / 2,
    ));
}

pub fn svg_bundle(field: &Field, bundle: &Bundle) -> String {
    let d = field.order() as usize;
    let (mut out, side) = svg_open(d);
    let mut owner = vec![vec![None; d]; d];
    for (i, curve) in bundle.curves().iter().enumerate() {
        for p in curve.nonzero_points() {
            owner[p.beta.val() as usize][p.alpha.val() as usize] = Some(i);
        }
    }
    for (b, row) in owner.iter().enumerate() {
        for (a, cell) in row.iter().enumerate() {
            match *cell {
                Some(i) => {
                    let fill = PALETTE[i % PALETTE.len()];
                    svg_cell(&mut out, d, a, b, fill, &(i + 1).to_string());
                }
                None => svg_cell(&mut out, d, a, b, "#ffffff", "o"),
            }
        }
    }
    svg_axes(&mut out, d, side);
    out.push_str("</svg>\n");
    out
}

pub fn svg_curve(field: &Field, curve: &Curve) -> String {
    let d = field.order() as usize;
    let (mut out, side) = svg_open(d);
    for b in 0..d {
        for a in 0..d {
            let origin = a == 0 && b == 0;
            let on = !origin
                && curve
                    .nonzero_points()
                    .any(|p| p.alpha.val() as usize == a && p.beta.val() as usize == b);
            let (fill, text) = if on {
                (PALETTE[0], "x")
            } else if origin {
                ("#ffffff", "o")
            } else {
                ("#ffffff", "")
            };
            svg_cell(&mut out, d, a, b, fill, text);
        }
    }
    svg_axes(&mut out, d, side);
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasespace::enumerate_bundles;

    #[test]
    fn ray_bundle_ascii_layout() {
        let f = Field::new(2).unwrap();
        let bundles = enumerate_bundles(&f).unwrap();
        let text = ascii_bundle(&f, &bundles[0]);
        // Report order in the ray bundle: slopes 0, 1, s, s2, then the
        // vertical axis; the beta = 0 line is curve 1 and the alpha = 0
        // column curve 5.
        let expected = concat!(
            " 3 | 5 4 3 2\n",
            " 2 | 5 3 2 4\n",
            " 1 | 5 2 4 3\n",
            " 0 | o 1 1 1\n",
            "   +--------\n",
            "     0 1 2 3\n",
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn single_curve_ascii_marks_points() {
        let f = Field::new(2).unwrap();
        let bundles = enumerate_bundles(&f).unwrap();
        let curve = &bundles[0].curves()[0];
        let text = ascii_curve(&f, curve);
        assert_eq!(text.matches('x').count(), 3);
        assert_eq!(text.matches('o').count(), 1);
    }

    #[test]
    fn svg_is_deterministic_and_covers_the_grid() {
        let f = Field::new(2).unwrap();
        let bundles = enumerate_bundles(&f).unwrap();
        let svg = svg_bundle(&f, &bundles[3]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), 17); // background + 16 cells
        assert_eq!(svg, svg_bundle(&f, &bundles[3]));
    }
}

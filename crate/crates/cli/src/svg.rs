//! Self-contained SVG heatmap of |chi| with a color bar. All geometry is
//! integral and all colors are rounded to 8-bit hex, so the same matrix
//! always renders to the same bytes.

use qpt_core::qpt::ProcessMatrix;

const CELL: i32 = 36;
const LEFT: i32 = 34;
const TOP: i32 = 12;
const GRID: i32 = 9 * CELL;
const BAR_GAP: i32 = 22;
const BAR_W: i32 = 18;
const WIDTH: i32 = LEFT + GRID + BAR_GAP + BAR_W + 64;
const HEIGHT: i32 = TOP + GRID + 34;

/// Anchor points of the viridis color map, linearly interpolated.
const VIRIDIS: [(f64, [f64; 3]); 5] = [
    (0.00, [68.0, 1.0, 84.0]),
    (0.25, [59.0, 82.0, 139.0]),
    (0.50, [33.0, 145.0, 140.0]),
    (0.75, [94.0, 201.0, 98.0]),
    (1.00, [253.0, 231.0, 37.0]),
];

fn color(x: f64) -> String {
    let x = x.clamp(0.0, 1.0);
    let mut rgb = VIRIDIS[4].1;
    for w in VIRIDIS.windows(2) {
        let (x0, c0) = w[0];
        let (x1, c1) = w[1];
        if x <= x1 {
            let f = if x1 > x0 { (x - x0) / (x1 - x0) } else { 0.0 };
            rgb = [
                c0[0] + f * (c1[0] - c0[0]),
                c0[1] + f * (c1[1] - c0[1]),
                c0[2] + f * (c1[2] - c0[2]),
            ];
            break;
        }
    }
    format!(
        "#{:02x}{:02x}{:02x}",
        rgb[0].round() as u8,
        rgb[1].round() as u8,
        rgb[2].round() as u8
    )
}

/// Render |chi| as a 9x9 heatmap with 1-based axis labels and a color
/// bar spanning [0, max |chi|].
pub fn chi_heatmap_svg(chi: &ProcessMatrix, title: &str) -> String {
    let m = chi.matrix();
    let mut max_abs: f64 = 0.0;
    for r in 0..9 {
        for c in 0..9 {
            max_abs = max_abs.max(m[(r, c)].norm());
        }
    }
    let scale = if max_abs > 0.0 { max_abs } else { 1.0 };

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"11\">\n"
    ));
    s.push_str(&format!(
        "<title>{title}</title>\n<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    for r in 0..9 {
        for c in 0..9 {
            let v = m[(r, c)].norm() / scale;
            let x = LEFT + c as i32 * CELL;
            let y = TOP + r as i32 * CELL;
            s.push_str(&format!(
                "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\"/>\n",
                color(v)
            ));
        }
    }
    s.push_str(&format!(
        "<rect x=\"{LEFT}\" y=\"{TOP}\" width=\"{GRID}\" height=\"{GRID}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));

    // 1-based row and column labels
    for i in 0..9 {
        let cx = LEFT + i * CELL + CELL / 2;
        let cy = TOP + i * CELL + CELL / 2;
        s.push_str(&format!(
            "<text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            TOP + GRID + 16,
            i + 1
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
            LEFT - 8,
            cy + 4,
            i + 1
        ));
    }

    // color bar, drawn as stacked samples from the map
    let bar_x = LEFT + GRID + BAR_GAP;
    let samples = 64;
    let sample_h = GRID as f64 / samples as f64;
    for i in 0..samples {
        let frac = 1.0 - (i as f64 + 0.5) / samples as f64;
        let y = TOP as f64 + i as f64 * sample_h;
        s.push_str(&format!(
            "<rect x=\"{bar_x}\" y=\"{y:.2}\" width=\"{BAR_W}\" height=\"{:.2}\" fill=\"{}\"/>\n",
            sample_h + 0.1,
            color(frac)
        ));
    }
    s.push_str(&format!(
        "<rect x=\"{bar_x}\" y=\"{TOP}\" width=\"{BAR_W}\" height=\"{GRID}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));
    s.push_str(&format!(
        "<text x=\"{}\" y=\"{}\">{max_abs:.4}</text>\n",
        bar_x + BAR_W + 6,
        TOP + 10
    ));
    s.push_str(&format!(
        "<text x=\"{}\" y=\"{}\">0.0000</text>\n",
        bar_x + BAR_W + 6,
        TOP + GRID
    ));
    s.push_str("</svg>\n");
    s
}

//! CSV and SVG emission for trajectories and phase portraits.
//!
//! CSV schema per trajectory: `t,x,y` rows, one file per seed, plus an
//! `index.csv` listing the files with their seeds. The SVG portrait draws
//! trajectories as polylines, nullclines dashed, and equilibria as labeled
//! markers.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use super::{Portrait, Trajectory};

pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::from("t,x,y\n");
    for (t, s) in &traj.samples {
        let _ = writeln!(out, "{t},{x},{y}", x = s.x, y = s.y);
    }
    out
}

/// Writes one CSV per trajectory plus an index; returns the file names.
pub fn write_portrait_csv(portrait: &Portrait, dir: &Path) -> std::io::Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let mut index = String::from("file,x0,y0,samples\n");
    let mut names = Vec::new();
    for (k, traj) in portrait.trajectories.iter().enumerate() {
        let name = format!("trajectory_{k:04}.csv");
        let (_, first) = traj.samples[0];
        let _ = writeln!(
            index,
            "{name},{},{},{}",
            first.x,
            first.y,
            traj.samples.len()
        );
        fs::write(dir.join(&name), trajectory_csv(traj))?;
        names.push(name);
    }
    let mut f = fs::File::create(dir.join("index.csv"))?;
    f.write_all(index.as_bytes())?;
    names.push("index.csv".into());
    Ok(names)
}

/// Renders the portrait as a standalone SVG document.
pub fn portrait_svg(portrait: &Portrait, width: u32, height: u32) -> String {
    let w = portrait.window;
    let (pw, ph) = (width as f64, height as f64);
    let margin = 40.0;
    let sx = (pw - 2.0 * margin) / (w.x1 - w.x0);
    let sy = (ph - 2.0 * margin) / (w.y1 - w.y0);
    let px = |x: f64| margin + (x - w.x0) * sx;
    let py = |y: f64| ph - margin - (y - w.y0) * sy;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    // frame
    let _ = writeln!(
        svg,
        r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="black" stroke-width="1"/>"#,
        margin,
        margin,
        pw - 2.0 * margin,
        ph - 2.0 * margin
    );

    let polyline = |pts: &[(f64, f64)], style: &str| -> String {
        let mut d = String::new();
        for (x, y) in pts {
            if *x < w.x0 || *x > w.x1 || *y < w.y0 || *y > w.y1 {
                continue;
            }
            let _ = write!(d, "{:.2},{:.2} ", px(*x), py(*y));
        }
        if d.is_empty() {
            String::new()
        } else {
            format!(r#"<polyline points="{d}" fill="none" {style}/>"#)
        }
    };

    for traj in &portrait.trajectories {
        let pts: Vec<(f64, f64)> = traj.samples.iter().map(|(_, s)| (s.x, s.y)).collect();
        let _ = writeln!(
            svg,
            "{}",
            polyline(&pts, r#"stroke="steelblue" stroke-width="0.8" opacity="0.7""#)
        );
    }
    for null in &portrait.nullclines {
        let _ = writeln!(
            svg,
            "{}",
            polyline(
                null,
                r#"stroke="gray" stroke-width="1.2" stroke-dasharray="6,4""#
            )
        );
    }
    for (x, y, label) in &portrait.equilibria {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="crimson"/><text x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif">{}</text>"#,
            px(*x),
            py(*y),
            px(*x) + 6.0,
            py(*y) - 6.0,
            label
        );
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{FloatParams, State};
    use crate::simulate::Tolerances;

    #[test]
    fn csv_is_time_ordered() {
        let traj = Trajectory {
            params: FloatParams {
                alpha: 1.0,
                beta: 1.0,
                gamma: 1.0,
                delta: 1.0,
                eta: 1.0,
            },
            samples: vec![(0.0, State::new(1.0, 2.0)), (0.5, State::new(1.1, 1.9))],
            tolerances: Tolerances::default(),
            events: vec![],
        };
        let csv = trajectory_csv(&traj);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,x,y");
        assert!(lines[1].starts_with("0,1"));
        assert_eq!(lines.len(), 3);
    }
}

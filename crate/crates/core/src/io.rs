//! Point CSV ingestion and CSV serialization of signatures and reports.
//!
//! Input: one point per line, comma-separated coordinates, optional header
//! line, `#` starts a comment. Output numbers carry 17 significant digits so
//! a written file re-reads to the same doubles.

use std::io::{self, Write};

use crate::curve::SignatureCurve;
use crate::error::{Error, Result};
use crate::geom::Coords;
use crate::harness::ConvergenceReport;

/// Formats `x` with 17 significant digits.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses point rows of dimension `P::DIM`.
pub fn parse_points<P: Coords>(text: &str) -> Result<Vec<P>> {
    let mut points = Vec::new();
    let mut header_allowed = true;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> =
            fields.iter().map(|f| f.parse::<f64>()).collect();
        let first = std::mem::replace(&mut header_allowed, false);
        match parsed {
            Ok(v) => {
                if v.len() != P::DIM {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected {} coordinates, found {}", P::DIM, v.len()),
                    });
                }
                if v.iter().any(|c| !c.is_finite()) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "non-finite coordinate".into(),
                    });
                }
                points.push(P::from_slice(&v));
            }
            // The first non-comment line may be a header of non-numeric names.
            Err(_) if first && fields.iter().all(|f| f.parse::<f64>().is_err()) => {}
            Err(e) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("{e} in '{line}'"),
                });
            }
        }
    }
    Ok(points)
}

/// Writes points with a header naming the coordinates.
pub fn write_points<P: Coords, W: Write>(mut w: W, points: &[P]) -> io::Result<()> {
    writeln!(w, "{}", ["x", "y", "z"][..P::DIM].join(","))?;
    for p in points {
        let row: Vec<String> = p.to_vec().into_iter().map(fmt_num).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

/// Writes `index,t,kappa,kappa_s` (plus `tau,tau_s` for space curves).
///
/// `t` is empty when the samples carry no parameter.
pub fn write_signature<W: Write>(mut w: W, sig: &SignatureCurve, spatial: bool) -> io::Result<()> {
    let header = if spatial {
        "index,t,kappa,kappa_s,tau,tau_s"
    } else {
        "index,t,kappa,kappa_s"
    };
    writeln!(w, "{header}")?;
    for s in &sig.samples {
        let t = s.t.map(fmt_num).unwrap_or_default();
        write!(
            w,
            "{},{},{},{}",
            s.index,
            t,
            fmt_num(s.kappa),
            fmt_num(s.kappa_s)
        )?;
        if spatial {
            let opt = |v: Option<f64>| v.map(fmt_num).unwrap_or_default();
            write!(w, ",{},{}", opt(s.tau), opt(s.tau_s))?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Writes `scale,n,max_err,l2_err` rows followed by a `# ` summary line.
pub fn write_report<W: Write>(mut w: W, report: &ConvergenceReport) -> io::Result<()> {
    writeln!(w, "scale,n,max_err,l2_err")?;
    for r in &report.rows {
        writeln!(
            w,
            "{},{},{},{}",
            fmt_num(r.scale),
            r.n,
            fmt_num(r.max_err),
            fmt_num(r.l2_err)
        )?;
    }
    writeln!(w, "# {}", report.summary())
}

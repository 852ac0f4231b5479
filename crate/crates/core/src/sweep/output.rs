use std::io::{self, Write};

use super::{RunReport, Series};
use crate::catalog::Value;

/// Bumped whenever the report JSON layout changes.
pub const SCHEMA_VERSION: u32 = 1;

impl RunReport {
    /// Pretty JSON with a trailing newline. Field order is fixed by the
    /// struct definitions, so equal reports give equal bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes non-skipped samples as CSV: `t,value` for scalars and radii (one
/// row per radius), `t,x,y` for points, `t,v1,…,vk` for vectors.
pub fn write_series_csv<W: Write>(series: &Series, mut w: W) -> io::Result<()> {
    let first = series.points.iter().find_map(|p| p.value.as_ref());
    let header = match first {
        Some(Value::Point(_)) => "t,x,y".to_string(),
        Some(Value::Vector(v)) => {
            let cols: Vec<String> = (1..=v.len()).map(|i| format!("v{i}")).collect();
            format!("t,{}", cols.join(","))
        }
        _ => "t,value".to_string(),
    };
    writeln!(w, "{header}")?;
    for p in &series.points {
        let Some(v) = &p.value else { continue };
        let t = fmt(p.t);
        match v {
            Value::Radii(rs) => {
                for r in rs {
                    writeln!(w, "{t},{}", fmt(*r))?;
                }
            }
            other => {
                let cols: Vec<String> = other.components().into_iter().map(fmt).collect();
                writeln!(w, "{t},{}", cols.join(","))?;
            }
        }
    }
    Ok(())
}

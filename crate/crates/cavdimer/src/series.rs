//! Time series of populations, written as CSV or JSON.

use std::io::Write;

use cavdimer_core::{LocalAmplitudes, Mode};
use serde::Serialize;

use crate::config::SimulationConfig;
use crate::error::CliResult;

pub const COLUMNS: [&str; 9] =
    ["t", "p_atom1", "p_atom2", "p_cav1", "p_cav2", "p_field_total", "p_mode_m1", "p_mode_m2", "norm"];

pub type Row = [f64; 9];

/// One row from the amplitudes at `t`. `ground` is the `|gg00⟩` weight, which
/// enters only the norm.
pub fn row(t: f64, amps: &LocalAmplitudes, ground: f64) -> Row {
    let p_cav1 = amps.a.norm_sqr();
    let p_cav2 = amps.b.norm_sqr();
    let p_atom1 = amps.c.norm_sqr();
    let p_atom2 = amps.d.norm_sqr();
    let deloc = amps.to_delocalized();
    [
        t,
        p_atom1,
        p_atom2,
        p_cav1,
        p_cav2,
        p_cav1 + p_cav2,
        deloc.field_mode_population(Mode::Antisymmetric),
        deloc.field_mode_population(Mode::Symmetric),
        ground + p_cav1 + p_cav2 + p_atom1 + p_atom2,
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TimeSeries {
    pub config: SimulationConfig,
    pub rows: Vec<Row>,
}

impl TimeSeries {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = COLUMNS.iter().position(|&c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> CliResult<()> {
        writeln!(w, "{}", COLUMNS.join(","))?;
        for r in &self.rows {
            write_csv_record(&mut w, r.iter().map(|&x| Some(x)))?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> CliResult<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)?;
        Ok(())
    }
}

/// Full-precision (17 significant digits) CSV field; missing values are
/// empty.
pub(crate) fn format_number(x: Option<f64>) -> String {
    match x {
        Some(x) if x.is_finite() => format!("{x:.16e}"),
        Some(x) => format!("{x}"),
        None => String::new(),
    }
}

pub(crate) fn write_csv_record<W: Write, I: IntoIterator<Item = Option<f64>>>(w: &mut W, fields: I) -> CliResult<()> {
    let line: Vec<String> = fields.into_iter().map(format_number).collect();
    writeln!(w, "{}", line.join(","))?;
    Ok(())
}

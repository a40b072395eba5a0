//! Regenerates the two binary-channel capacity tables: the non-symmetric
//! channel (`table1`) and the BSC (`table2`), for d = 0.05, 0.10, …, 0.95.

use std::io::Write;

use dmc_capacity::analytic::{bsc_capacity_exact, bsc_capacity_estimate, nonsym_capacity_estimate, renyi_half};
use dmc_capacity::channel::{make_bsc, make_nonsymmetric_binary};
use dmc_capacity::{ba_capacity, SolverConfig};

use crate::{CliError, DEFAULT_EPSILON};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    /// Non-symmetric binary channel.
    Table1,
    /// Binary symmetric channel.
    Table2,
}

impl Table {
    pub fn header(self) -> &'static [&'static str] {
        match self {
            Table::Table1 => &["d", "capacity", "renyi_half_over_two", "estimate"],
            Table::Table2 => &["d", "capacity", "theory", "renyi_half_over_two", "estimate"],
        }
    }
}

/// One table row at full precision. `theory` is only present for the BSC.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub d: f64,
    pub capacity: f64,
    pub theory: Option<f64>,
    pub renyi_half_over_two: f64,
    pub estimate: f64,
}

pub fn grid() -> impl Iterator<Item = f64> {
    (1..=19).map(|i| i as f64 / 20.0)
}

pub fn reproduce(table: Table) -> Result<Vec<TableRow>, CliError> {
    let config = SolverConfig::with_epsilon(DEFAULT_EPSILON);
    grid()
        .map(|d| {
            let channel = match table {
                Table::Table1 => make_nonsymmetric_binary(d)?,
                Table::Table2 => make_bsc(d)?,
            };
            let result = ba_capacity(&channel, &config)?;
            if !result.converged {
                return Err(CliError::Runtime(format!("solver did not converge at d = {d}")));
            }
            Ok(TableRow {
                d,
                capacity: result.capacity(),
                theory: match table {
                    Table::Table1 => None,
                    Table::Table2 => Some(bsc_capacity_exact(d)?),
                },
                renyi_half_over_two: renyi_half(channel.row(0), channel.row(1))? / 2.0,
                estimate: match table {
                    Table::Table1 => nonsym_capacity_estimate(d)?,
                    Table::Table2 => bsc_capacity_estimate(d)?,
                },
            })
        })
        .collect()
}

/// Writes rows rounded to 4 decimals (d to 2).
pub fn write_table<W: Write>(table: Table, rows: &[TableRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(table.header())?;
    for row in rows {
        let mut record = vec![format!("{:.2}", row.d), format!("{:.4}", row.capacity)];
        if let Some(theory) = row.theory {
            record.push(format!("{theory:.4}"));
        }
        record.push(format!("{:.4}", row.renyi_half_over_two));
        record.push(format!("{:.4}", row.estimate));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

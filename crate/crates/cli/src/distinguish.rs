//! Monte-Carlo error rates of the LLR distinguisher at one or more sample
//! counts.

use std::io::{Read, Write};

use dmc_capacity::channel::make_wht_sparse_channel;
use dmc_capacity::distinguisher::estimate_error_rates_with;
use dmc_capacity::Execution;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistinguishRow {
    pub samples: u64,
    pub false_accept_biased: f64,
    pub false_accept_uniform: f64,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistinguishConfig {
    pub n: u32,
    pub k: usize,
    pub d: f64,
    pub samples: Vec<u64>,
    pub trials: u64,
    pub seed: u64,
}

pub fn run(config: &DistinguishConfig, exec: Execution) -> Result<Vec<DistinguishRow>, CliError> {
    let channel = make_wht_sparse_channel(config.n, config.k, config.d, None)?;
    config
        .samples
        .iter()
        .map(|&samples| {
            let r = estimate_error_rates_with(&channel, samples, config.trials, config.seed, exec)?;
            Ok(DistinguishRow {
                samples,
                false_accept_biased: r.false_accept_biased,
                false_accept_uniform: r.false_accept_uniform,
                trials: r.trials,
                seed: r.seed,
            })
        })
        .collect()
}

pub fn write_rows<W: Write>(rows: &[DistinguishRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<DistinguishRow>, CliError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(CliError::from)
}

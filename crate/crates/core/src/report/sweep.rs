//! `gaudin sweep`: one verdict row per grid value, computed in parallel and
//! emitted in grid order.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use super::run::{error_exit_code, run_config, RunOptions};
use crate::error::{Error, Result};
use crate::gaudin::config::GaudinConfig;

/// Which scalar the sweep varies: `z<i>` or `mu<i>` (an `h` coordinate),
/// both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    Z(usize),
    MuH(usize),
}

impl FromStr for SweepParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parse = |rest: &str| {
            rest.trim_start_matches(['_', '[']).trim_end_matches(']').parse::<usize>().ok().filter(|&i| i >= 1)
        };
        if let Some(rest) = t.strip_prefix("mu") {
            return parse(rest).map(SweepParam::MuH).ok_or_else(|| Error::Parse(format!("bad sweep parameter `{s}`")));
        }
        if let Some(rest) = t.strip_prefix('z') {
            return parse(rest).map(SweepParam::Z).ok_or_else(|| Error::Parse(format!("bad sweep parameter `{s}`")));
        }
        Err(Error::Parse(format!("bad sweep parameter `{s}`; expected z<i> or mu<i>")))
    }
}

impl std::fmt::Display for SweepParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepParam::Z(i) => write!(f, "z{i}"),
            SweepParam::MuH(i) => write!(f, "mu{i}"),
        }
    }
}

pub const CSV_HEADER: &str =
    "index,param,value,status,dim_V,dim_M,dim_algebra,commutative,cyclic,frobenius,eigenspaces_one,perfectly_integrable,exit_code,note";

fn set_param(config: &mut GaudinConfig, param: SweepParam, value: &str) -> Result<()> {
    match param {
        SweepParam::Z(i) => {
            let slot = config
                .z
                .get_mut(i - 1)
                .ok_or_else(|| Error::config(format!("z[{}]", i - 1), "no such point"))?;
            *slot = value.to_string();
        }
        SweepParam::MuH(i) => {
            let r = config.algebra.rank;
            if config.mu.h.is_empty() {
                config.mu.h = vec!["0".to_string(); r];
            }
            let slot = config
                .mu
                .h
                .get_mut(i - 1)
                .ok_or_else(|| Error::config(format!("mu.h[{}]", i - 1), "no such coordinate"))?;
            *slot = value.to_string();
        }
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Builds the CSV text; rows whose config is rejected become warning rows.
pub fn run_sweep(base: &GaudinConfig, param: SweepParam, grid: &[String], opts: &RunOptions) -> Result<String> {
    let rows: Vec<String> = grid
        .par_iter()
        .enumerate()
        .map(|(k, value)| {
            let mut cfg = base.clone();
            let prefix = format!("{k},{param},{}", csv_field(value));
            if let Err(e) = set_param(&mut cfg, param, value) {
                return format!("{prefix},warning,,,,,,,,,{},{}", error_exit_code(&e), csv_field(&format!("skipped: {e}")));
            }
            match run_config(cfg, None, &RunOptions { out: None, ..opts.clone() }) {
                Ok(o) => {
                    let v = &o.verdict;
                    format!(
                        "{prefix},ok,{},{},{},{},{},{},{},{},{},",
                        v.dims.v,
                        v.dims.m,
                        v.dims.algebra,
                        v.commutative.commutative,
                        v.cyclic.found,
                        v.frobenius.certified,
                        v.eigen.all_eigenspaces_one,
                        v.perfectly_integrable,
                        o.exit_code()
                    )
                }
                Err(e) => {
                    let status = if matches!(e, Error::Config { .. }) { "warning" } else { "error" };
                    format!("{prefix},{status},,,,,,,,,{},{}", error_exit_code(&e), csv_field(&format!("skipped: {e}")))
                }
            }
        })
        .collect();
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").expect("string write");
    for r in rows {
        writeln!(out, "{r}").expect("string write");
    }
    Ok(out)
}

/// Parses `2,3,4` or `2:5` (inclusive integer range) into grid values.
pub fn parse_grid(text: &str) -> Result<Vec<String>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = t.split_once(':') {
        let a: i64 = a.trim().parse().map_err(|_| Error::Parse(format!("bad grid `{text}`")))?;
        let b: i64 = b.trim().parse().map_err(|_| Error::Parse(format!("bad grid `{text}`")))?;
        return Ok((a..=b).map(|v| v.to_string()).collect());
    }
    Ok(t.split(',').map(|s| s.trim().to_string()).collect())
}

//! Helpers shared by the randomized identity checkers.

use rayon::prelude::*;

use crate::arith::{interpolate, Field, LaurentSeries, Ring, Sampler};
use crate::error::Result;
use crate::report::Report;
use crate::spin::{OpProduct, SpinVector};
use crate::Gq;

fn trial_sampler(seed: u64, stream: u64, k: usize) -> Sampler {
    Sampler::for_trial(seed, stream, k as u64)
}

/// Runs `body` on `trials` independent samplers and merges the reports.
pub(crate) fn run_trials<B>(mut report: Report, trials: usize, seed: u64, stream: u64, body: B) -> Report
where
    B: Fn(&mut Sampler, &mut Report) -> Result<()> + Sync,
{
    let parts: Vec<Report> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut r = Report::new(report.property.clone(), report.big_n);
            let mut s = trial_sampler(seed, stream, k);
            if let Err(e) = body(&mut s, &mut r) {
                r.error(format!("trial {k}"), &e);
            }
            r
        })
        .collect();
    for r in parts {
        report.merge(r);
    }
    report
}

pub(crate) fn stream_id(tag: &str, big_n: usize) -> u64 {
    tag.bytes().fold(big_n as u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64))
}

pub(crate) fn compare_ops<F: Field>(
    r: &mut Report,
    label: &str,
    point: impl Fn() -> String,
    sites: usize,
    lhs: &OpProduct<F>,
    rhs: &OpProduct<F>,
) {
    let a = lhs.columns(sites);
    let b = rhs.columns(sites);
    r.check(|| format!("{label}, {}", point()), &Cols(a), &Cols(b));
}

/// Matrix columns, displayed compactly for reports.
#[derive(PartialEq)]
struct Cols<F>(Vec<SpinVector<F>>);

impl<F: Ring> std::fmt::Display for Cols<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cols: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", cols.join("; "))
    }
}

pub(crate) fn interpolate_in_first<G>(lo: i64, hi: i64, g: G) -> Result<LaurentSeries<Gq>>
where
    G: Fn(&Gq) -> Result<Gq> + Sync,
{
    let (lo, hi) = (lo - 2, hi + 2);
    let needed = (hi - lo) as usize + 3;
    let nodes: Vec<(Gq, Result<Gq>)> = (0..needed + 8)
        .into_par_iter()
        .map(|k| {
            let l = Gq::from(k as i64 + 2);
            let v = g(&l);
            (l, v)
        })
        .collect();
    let samples: Vec<(Gq, Gq)> = nodes
        .into_iter()
        .filter_map(|(l, v)| v.ok().map(|v| (l, v)))
        .take(needed)
        .collect();
    interpolate(lo, hi, 1, &samples)
}

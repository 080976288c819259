//! Parameter sweeps rendered as CSV, one row per equilibrium per sample.
//!
//! Samples are independent, so they are solved on a small thread pool; rows
//! are assembled in ascending sample order afterwards, which keeps the
//! output byte-identical from run to run regardless of scheduling.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use gess_core::{
    find_all_gess, mac_find_gess, mac_verify_conditions, verify_conditions, InvasionGrid,
};

use crate::config::{Instance, ScenarioConfig};

/// One sample's worth of table rows plus any verification warnings.
struct Chunk {
    rows: String,
    warnings: Vec<String>,
}

fn solve_sample(
    config: &ScenarioConfig,
    sample: f64,
    equality_tol: f64,
    grid: &InvasionGrid,
) -> Result<Chunk, String> {
    let swept_name = config
        .sweep
        .as_ref()
        .map(|s| s.variable.as_str())
        .unwrap_or("value");
    let mut rows = String::new();
    let mut warnings = Vec::new();
    match config.instance(Some(sample))? {
        Instance::Matrix(game) => {
            for (idx, r) in find_all_gess(&game, equality_tol)
                .map_err(|e| e.to_string())?
                .iter()
                .enumerate()
            {
                let verdict = verify_conditions(&game, &r.profile, grid);
                if !verdict.passed {
                    warnings.push(format!(
                        "{swept_name}={sample:.6} equilibrium {idx} failed verification \
                         (margin {:.6})",
                        verdict.worst_violation
                    ));
                }
                let _ = write!(rows, "{sample:.6},{idx},{}", r.kind.as_str());
                for q in r.profile.probs() {
                    let _ = write!(rows, ",{q:.6}");
                }
                let _ = writeln!(rows, ",{:.6},,{:.6}", r.aggregate, verdict.worst_violation);
            }
        }
        Instance::Mac(params) => {
            for (idx, eq) in mac_find_gess(&params, equality_tol)
                .map_err(|e| e.to_string())?
                .iter()
                .enumerate()
            {
                let verdict = mac_verify_conditions(&params, &eq.profile, grid);
                if !verdict.passed {
                    warnings.push(format!(
                        "{swept_name}={sample:.6} equilibrium {idx} failed verification \
                         (margin {:.6})",
                        verdict.worst_violation
                    ));
                }
                let _ = write!(rows, "{sample:.6},{idx},{}", eq.kind.as_str());
                for q in eq.profile.probs() {
                    let _ = write!(rows, ",{q:.6}");
                }
                let _ = writeln!(
                    rows,
                    ",{:.6},{:.6},{:.6}",
                    eq.aggregate, eq.success_prob, verdict.worst_violation
                );
            }
        }
    }
    Ok(Chunk { rows, warnings })
}

/// Builds the sweep table. Returns the CSV text plus any verification
/// warnings; a failed verification shows up as a negative margin in its row
/// rather than aborting the sweep.
pub fn sweep_csv(
    config: &ScenarioConfig,
    equality_tol: f64,
    grid: &InvasionGrid,
) -> Result<(String, Vec<String>), String> {
    if config.sweep.is_none() {
        return Err("this command needs a sweep section in the config".into());
    }
    let samples = config.sweep_samples();
    let n = config.n_groups();

    let mut csv = String::from("swept_var,eq_index,kind");
    for i in 1..=n {
        let _ = write!(csv, ",q_{i}");
    }
    csv.push_str(",aggregate,p_S,oracle_margin\n");

    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(samples.len())
        .max(1);
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<Chunk, String>)>();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            let samples = &samples;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(&sample) = samples.get(idx) else { break };
                let chunk = solve_sample(config, sample, equality_tol, grid);
                if tx.send((idx, chunk)).is_err() {
                    break;
                }
            });
        }
    });
    drop(tx);

    let mut chunks: Vec<(usize, Result<Chunk, String>)> = rx.into_iter().collect();
    chunks.sort_by_key(|&(idx, _)| idx);

    let mut warnings = Vec::new();
    for (_, chunk) in chunks {
        let chunk = chunk?;
        csv.push_str(&chunk.rows);
        warnings.extend(chunk.warnings);
    }
    Ok((csv, warnings))
}

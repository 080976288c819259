//! Canned parameter studies, written out as CSV files ready for plotting.

use std::fmt::Write as _;
use std::path::Path;

use gess_core::{
    mac_find_gess, mac_fully_mixed, standard_reference_strategy, GroupWeights, InvasionGrid,
    MacKind, MacParams,
};

use crate::config::{
    GameKind, GameSection, MacSection, ScenarioConfig, SweepSection, SweptVariable,
};
use crate::sweep::sweep_csv;

const MAC_DELTA: f64 = 0.2;
const MAC_MU: f64 = 1.0;

/// The scenario families with a canned study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    HawkDove,
    StagHunt,
    PrisonersDilemma,
    Mac,
}

fn alpha_sweep_config(kind: GameKind) -> ScenarioConfig {
    ScenarioConfig {
        game: GameSection {
            kind,
            value: None,
            cost: None,
            payoff: None,
            mac: None,
        },
        weights: None,
        sweep: Some(SweepSection {
            variable: SweptVariable::Alpha,
            start: 0.01,
            stop: 0.99,
            step: 0.01,
        }),
        tol: None,
        grid: None,
        out: None,
    }
}

fn mac_sweep_config(weights: Vec<f64>) -> ScenarioConfig {
    ScenarioConfig {
        game: GameSection {
            kind: GameKind::MacAloha,
            value: None,
            cost: None,
            payoff: None,
            mac: Some(MacSection {
                delta: MAC_DELTA,
                gamma: None,
                mu: Some(MAC_MU),
            }),
        },
        weights: Some(weights),
        sweep: Some(SweepSection {
            variable: SweptVariable::Gamma,
            start: 0.0,
            stop: 0.9,
            step: 0.01,
        }),
        tol: None,
        grid: None,
        out: None,
    }
}

fn mac_gammas() -> Vec<f64> {
    (0..=90).map(|i| i as f64 * 0.01).collect()
}

fn write_file(out_dir: &Path, name: &str, contents: &str) -> Result<(), String> {
    let path = out_dir.join(name);
    std::fs::write(&path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn equilibria_file(
    config: &ScenarioConfig,
    equality_tol: f64,
    grid: &InvasionGrid,
    out_dir: &Path,
    name: &str,
) -> Result<(), String> {
    let (csv, warnings) = sweep_csv(config, equality_tol, grid)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    write_file(out_dir, name, &csv)
}

fn mac_params(gamma: f64, alpha: f64) -> Result<MacParams, String> {
    let weights = GroupWeights::pair(alpha).map_err(|e| e.to_string())?;
    MacParams::new(MAC_DELTA, gamma, MAC_MU, weights).map_err(|e| e.to_string())
}

fn mac_extras(equality_tol: f64, out_dir: &Path) -> Result<(), String> {
    let mut baseline = String::from("gamma,q_std\n");
    let mut success = String::from("gamma,p_S\n");
    let mut pure_mixed = String::from("gamma,q_1,q_2\n");
    for gamma in mac_gammas() {
        let params = mac_params(gamma, 0.4)?;
        let _ = writeln!(
            baseline,
            "{gamma:.6},{:.6}",
            standard_reference_strategy(&params)
        );
        if let Some(eq) = mac_fully_mixed(&params) {
            let _ = writeln!(success, "{gamma:.6},{:.6}", eq.success_prob);
        }
        let lopsided = mac_params(gamma, 0.15)?;
        for eq in mac_find_gess(&lopsided, equality_tol).map_err(|e| e.to_string())? {
            if eq.kind == MacKind::PureMixed {
                let q = eq.profile.probs();
                let _ = writeln!(pure_mixed, "{gamma:.6},{:.6},{:.6}", q[0], q[1]);
            }
        }
    }
    write_file(out_dir, "mac_std_baseline.csv", &baseline)?;
    write_file(out_dir, "mac_success.csv", &success)?;
    write_file(out_dir, "mac_pure_mixed.csv", &pure_mixed)
}

/// Renders one preset into `out_dir`, creating it if needed.
pub fn run_preset(
    preset: Preset,
    equality_tol: f64,
    grid: &InvasionGrid,
    out_dir: &Path,
) -> Result<(), String> {
    std::fs::create_dir_all(out_dir)
        .map_err(|e| format!("cannot create {}: {e}", out_dir.display()))?;
    match preset {
        Preset::HawkDove => equilibria_file(
            &alpha_sweep_config(GameKind::HawkDove),
            equality_tol,
            grid,
            out_dir,
            "hd_equilibria.csv",
        ),
        Preset::StagHunt => equilibria_file(
            &alpha_sweep_config(GameKind::StagHunt),
            equality_tol,
            grid,
            out_dir,
            "sh_equilibria.csv",
        ),
        Preset::PrisonersDilemma => equilibria_file(
            &alpha_sweep_config(GameKind::PrisonersDilemma),
            equality_tol,
            grid,
            out_dir,
            "pd_equilibria.csv",
        ),
        Preset::Mac => {
            equilibria_file(
                &mac_sweep_config(vec![0.4, 0.6]),
                equality_tol,
                grid,
                out_dir,
                "mac_equilibria.csv",
            )?;
            mac_extras(equality_tol, out_dir)
        }
    }
}

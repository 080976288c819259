//! Scenario configuration: strict JSON in, validated game instances out.
//!
//! Configs are rejected loudly rather than repaired: unknown fields fail
//! parsing, and cross-field rules (which game kind allows which section,
//! what a sweep may vary) fail validation with a message naming the field.
//! Sweep reproducibility depends on configs meaning exactly one thing.

use std::fmt;
use std::path::PathBuf;

use serde::Deserialize;

use gess_core::{GroupGame, GroupWeights, MacParams, PayoffMatrix2};

/// Default mutant-grid resolution for verification and sweeps.
pub const DEFAULT_GRID: f64 = 0.01;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub game: GameSection,
    /// Group weights, summing to one. Omitted exactly when a weight sweep
    /// supplies them.
    #[serde(default)]
    pub weights: Option<Vec<f64>>,
    #[serde(default)]
    pub sweep: Option<SweepSection>,
    /// Solver equality tolerance override.
    #[serde(default)]
    pub tol: Option<f64>,
    /// Verification grid resolution override.
    #[serde(default)]
    pub grid: Option<f64>,
    /// Output file for sweep CSV.
    #[serde(default)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSection {
    pub kind: GameKind,
    /// Reward split by two passive players; hawk-dove only.
    #[serde(default)]
    pub value: Option<f64>,
    /// Injury cost of an escalated fight; hawk-dove only.
    #[serde(default)]
    pub cost: Option<f64>,
    /// Full payoff matrix; generic-2x2 only.
    #[serde(default)]
    pub payoff: Option<PayoffSection>,
    /// Channel parameters; mac-aloha only.
    #[serde(default)]
    pub mac: Option<MacSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum GameKind {
    #[serde(rename = "generic-2x2")]
    Generic2x2,
    #[serde(rename = "hawk-dove")]
    HawkDove,
    #[serde(rename = "stag-hunt")]
    StagHunt,
    #[serde(rename = "prisoners-dilemma")]
    PrisonersDilemma,
    #[serde(rename = "mac-aloha")]
    MacAloha,
}

impl GameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GameKind::Generic2x2 => "generic-2x2",
            GameKind::HawkDove => "hawk-dove",
            GameKind::StagHunt => "stag-hunt",
            GameKind::PrisonersDilemma => "prisoners-dilemma",
            GameKind::MacAloha => "mac-aloha",
        }
    }

    /// Display names for the two actions, first action first.
    pub fn action_names(self) -> (&'static str, &'static str) {
        match self {
            GameKind::Generic2x2 => ("A", "B"),
            GameKind::HawkDove => ("H", "D"),
            GameKind::StagHunt => ("S", "H"),
            GameKind::PrisonersDilemma => ("C", "D"),
            GameKind::MacAloha => ("T", "S"),
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PayoffSection {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MacSection {
    pub delta: f64,
    /// Omitted exactly when gamma is the swept variable.
    #[serde(default)]
    pub gamma: Option<f64>,
    #[serde(default)]
    pub mu: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub variable: SweptVariable,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweptVariable {
    /// Weight of the first of two groups; the second gets the complement.
    Alpha,
    /// Capture probability of the access game.
    Gamma,
}

impl SweptVariable {
    pub fn as_str(self) -> &'static str {
        match self {
            SweptVariable::Alpha => "alpha",
            SweptVariable::Gamma => "gamma",
        }
    }
}

/// A fully built, solvable game.
pub enum Instance {
    Matrix(GroupGame),
    Mac(MacParams),
}

impl Instance {
    pub fn n_groups(&self) -> usize {
        match self {
            Instance::Matrix(g) => g.n_groups(),
            Instance::Mac(p) => p.n_groups(),
        }
    }
}

pub fn load(path: &std::path::Path) -> Result<ScenarioConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let config: ScenarioConfig =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    config.validate()?;
    Ok(config)
}

impl ScenarioConfig {
    fn validate(&self) -> Result<(), String> {
        let kind = self.game.kind;
        if (self.game.value.is_some() || self.game.cost.is_some()) && kind != GameKind::HawkDove {
            return Err(format!("game.value/game.cost only apply to hawk-dove, not {kind}"));
        }
        match (kind, self.game.payoff.is_some()) {
            (GameKind::Generic2x2, false) => {
                return Err("game.payoff is required for generic-2x2".into())
            }
            (GameKind::Generic2x2, true) => {}
            (_, true) => return Err(format!("game.payoff does not apply to {kind}")),
            (_, false) => {}
        }
        match (kind, self.game.mac.is_some()) {
            (GameKind::MacAloha, false) => {
                return Err("game.mac is required for mac-aloha".into())
            }
            (GameKind::MacAloha, true) => {}
            (_, true) => return Err(format!("game.mac does not apply to {kind}")),
            (_, false) => {}
        }

        if let Some(sweep) = &self.sweep {
            if !(sweep.step.is_finite() && sweep.step > 0.0) {
                return Err(format!("sweep.step must be positive, got {}", sweep.step));
            }
            if !sweep.start.is_finite() || !sweep.stop.is_finite() {
                return Err("sweep.start/sweep.stop must be finite".into());
            }
            match sweep.variable {
                SweptVariable::Alpha => {
                    if self.weights.is_some() {
                        return Err(
                            "weights and an alpha sweep are mutually exclusive; \
                             the sweep supplies (alpha, 1 - alpha)"
                                .into(),
                        );
                    }
                    if kind == GameKind::MacAloha
                        && self.game.mac.is_none_or(|m| m.gamma.is_none())
                    {
                        return Err("game.mac.gamma is required when sweeping alpha".into());
                    }
                }
                SweptVariable::Gamma => {
                    if kind != GameKind::MacAloha {
                        return Err(format!("gamma sweeps only apply to mac-aloha, not {kind}"));
                    }
                    if self.game.mac.is_some_and(|m| m.gamma.is_some()) {
                        return Err(
                            "game.mac.gamma and a gamma sweep are mutually exclusive".into()
                        );
                    }
                    if self.weights.is_none() {
                        return Err("weights are required when sweeping gamma".into());
                    }
                }
            }
        } else {
            if self.weights.is_none() {
                return Err("weights are required unless an alpha sweep supplies them".into());
            }
            if kind == GameKind::MacAloha && self.game.mac.is_none_or(|m| m.gamma.is_none()) {
                return Err("game.mac.gamma is required unless a gamma sweep supplies it".into());
            }
        }

        if let Some(t) = self.tol {
            if !(t.is_finite() && t > 0.0) {
                return Err(format!("tol must be positive, got {t}"));
            }
        }
        if let Some(g) = self.grid {
            if !(g.is_finite() && g > 0.0 && g <= 0.5) {
                return Err(format!("grid must lie in (0, 0.5], got {g}"));
            }
        }
        Ok(())
    }

    /// Number of groups this scenario plays with.
    pub fn n_groups(&self) -> usize {
        match &self.weights {
            Some(w) => w.len(),
            None => 2,
        }
    }

    fn payoff_matrix(&self) -> Result<PayoffMatrix2, String> {
        match self.game.kind {
            GameKind::HawkDove => PayoffMatrix2::hawk_dove(
                self.game.value.unwrap_or(2.0),
                self.game.cost.unwrap_or(3.0),
            )
            .map_err(|e| format!("hawk-dove parameters: {e}")),
            GameKind::StagHunt => Ok(PayoffMatrix2::stag_hunt()),
            GameKind::PrisonersDilemma => Ok(PayoffMatrix2::prisoners_dilemma()),
            GameKind::Generic2x2 => {
                let p = self.game.payoff.expect("validated");
                PayoffMatrix2::new(p.a, p.b, p.c, p.d).map_err(|e| format!("game.payoff: {e}"))
            }
            GameKind::MacAloha => Err("mac-aloha has no payoff matrix".into()),
        }
    }

    fn weights_at(&self, swept_alpha: Option<f64>) -> Result<GroupWeights, String> {
        match (swept_alpha, &self.weights) {
            (Some(alpha), None) => GroupWeights::pair(alpha)
                .map_err(|e| format!("swept alpha {alpha}: {e}")),
            (None, Some(w)) => {
                GroupWeights::new(w.clone()).map_err(|e| format!("weights: {e}"))
            }
            _ => unreachable!("validated"),
        }
    }

    /// Builds the game with the swept variable, if any, set to `swept`.
    pub fn instance(&self, swept: Option<f64>) -> Result<Instance, String> {
        let swept_alpha = match (self.sweep.as_ref().map(|s| s.variable), swept) {
            (Some(SweptVariable::Alpha), Some(v)) => Some(v),
            _ => None,
        };
        if self.game.kind == GameKind::MacAloha {
            let mac = self.game.mac.expect("validated");
            let gamma = match (self.sweep.as_ref().map(|s| s.variable), swept) {
                (Some(SweptVariable::Gamma), Some(v)) => v,
                _ => mac.gamma.expect("validated"),
            };
            let params = MacParams::new(
                mac.delta,
                gamma,
                mac.mu.unwrap_or(1.0),
                self.weights_at(swept_alpha)?,
            )
            .map_err(|e| format!("game.mac: {e}"))?;
            Ok(Instance::Mac(params))
        } else {
            let game = GroupGame::new(self.payoff_matrix()?, self.weights_at(swept_alpha)?);
            Ok(Instance::Matrix(game))
        }
    }

    /// Builds the game for commands that need a single fixed scenario.
    pub fn fixed_instance(&self) -> Result<Instance, String> {
        if self.sweep.is_some() {
            return Err(
                "this command needs a fixed scenario; remove the sweep section".into(),
            );
        }
        self.instance(None)
    }

    /// Sweep sample points, ascending. Empty when start exceeds stop.
    pub fn sweep_samples(&self) -> Vec<f64> {
        let Some(sweep) = &self.sweep else { return Vec::new() };
        if sweep.start > sweep.stop {
            return Vec::new();
        }
        let count = ((sweep.stop - sweep.start) / sweep.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| sweep.start + i as f64 * sweep.step).collect()
    }
}

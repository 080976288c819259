//! The verify subcommand: check a supplied profile against the stability
//! conditions, then poke it with a few seeded random deviations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gess_core::{
    group_utility, mac_bracket, mac_verify_conditions, post_mutation_utility, tol,
    verify_conditions, verify_gess_definition, GroupGame, GroupProfile, InvasionGrid, MacParams,
    MixedStrategy, Verdict, Witness,
};

use crate::config::Instance;
use crate::report::{fmt_probs, fmt_verdict};

const SPOT_SAMPLES: usize = 64;

pub fn parse_profile(text: &str, n: usize) -> Result<GroupProfile, String> {
    let parts: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.len() != n {
        return Err(format!(
            "profile has {} entries but the scenario has {n} groups",
            parts.len()
        ));
    }
    let mut probs = Vec::with_capacity(n);
    for part in &parts {
        let v: f64 = part
            .parse()
            .map_err(|_| format!("profile entry '{part}' is not a number"))?;
        probs.push(v);
    }
    GroupProfile::from_probs(&probs).map_err(|e| e.to_string())
}

/// Random deviations scored the same way the exhaustive definition check
/// scores them. The seed picks the deviations, nothing else.
fn spot_check_matrix(
    game: &GroupGame,
    profile: &GroupProfile,
    grid: &InvasionGrid,
    seed: u64,
) -> Verdict {
    let band = tol::ORACLE_REL_TOL * game.payoff.scale();
    let half_step = grid.resolution / 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    let mut witness = None;
    let mut drawn = 0;
    while drawn < SPOT_SAMPLES {
        let i = rng.gen_range(0..game.n_groups());
        let p: f64 = rng.gen_range(0.0..=1.0);
        if (p - profile.p(i)).abs() < half_step {
            continue;
        }
        drawn += 1;
        let base = group_utility(game, profile, i);
        let mutant = MixedStrategy::new(p).expect("sampled in range");
        let mut score = f64::INFINITY;
        let mut eps_at = grid.eps[0];
        for &eps in &grid.eps {
            let margin = base - post_mutation_utility(game, profile, i, mutant, eps).unwrap();
            if margin < score {
                score = margin;
                eps_at = eps;
            }
            if margin > band {
                break;
            }
        }
        if score < worst {
            worst = score;
            witness = Some(Witness { group: i, mutant: p, eps: eps_at });
        }
    }
    Verdict { passed: worst > -band, worst_violation: worst, witness }
}

/// Same idea for the access game, using the response slope per group.
fn spot_check_mac(
    params: &MacParams,
    profile: &GroupProfile,
    grid: &InvasionGrid,
    seed: u64,
) -> Verdict {
    let band = tol::ORACLE_REL_TOL;
    let half_step = grid.resolution / 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    let mut witness = None;
    let mut drawn = 0;
    while drawn < SPOT_SAMPLES {
        let i = rng.gen_range(0..params.n_groups());
        let p: f64 = rng.gen_range(0.0..=1.0);
        let qi = profile.p(i);
        if (p - qi).abs() < half_step {
            continue;
        }
        drawn += 1;
        let b = mac_bracket(params, profile, i);
        let max_dev = qi.max(1.0 - qi);
        let margin = if b.abs() * max_dev <= band {
            (1.0 - params.gamma) * params.weights.get(i) * (p - qi) * (p - qi)
        } else {
            (qi - p) * b
        };
        if margin < worst {
            worst = margin;
            witness = Some(Witness { group: i, mutant: p, eps: 0.0 });
        }
    }
    Verdict { passed: worst > -band, worst_violation: worst, witness }
}

/// Runs every applicable check and prints one verdict line each. Returns
/// whether the profile passed all of them.
pub fn run_verify(
    instance: &Instance,
    profile: &GroupProfile,
    grid: &InvasionGrid,
    seed: u64,
) -> bool {
    println!("profile under test: q={}", fmt_probs(profile));
    match instance {
        Instance::Matrix(game) => {
            let by_def = verify_gess_definition(game, profile, grid);
            let by_cond = verify_conditions(game, profile, grid);
            let spot = spot_check_matrix(game, profile, grid, seed);
            println!("{}", fmt_verdict("definition", &by_def));
            println!("{}", fmt_verdict("conditions", &by_cond));
            println!("{}", fmt_verdict("random spot check", &spot));
            by_def.passed && by_cond.passed && spot.passed
        }
        Instance::Mac(params) => {
            let by_cond = mac_verify_conditions(params, profile, grid);
            let spot = spot_check_mac(params, profile, grid, seed);
            println!("{}", fmt_verdict("conditions", &by_cond));
            println!("{}", fmt_verdict("random spot check", &spot));
            by_cond.passed && spot.passed
        }
    }
}

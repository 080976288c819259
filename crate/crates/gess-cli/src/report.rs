//! The solve report: everything known about one scenario, verified.

use gess_core::{
    ess_candidates_2x2, find_all_gess, is_ess, mac_find_gess, mac_thresholds,
    mac_verify_conditions, standard_reference_strategy, tol, verify_conditions,
    verify_gess_definition, GroupGame, GroupProfile, InvasionGrid, MacParams, SupportLabel,
    Verdict,
};

use crate::claims::claims_audit;
use crate::config::{GameKind, Instance, ScenarioConfig};

pub fn fmt_probs(profile: &GroupProfile) -> String {
    let parts: Vec<String> = profile.probs().iter().map(|q| format!("{q:.6}")).collect();
    format!("({})", parts.join(", "))
}

pub fn fmt_support(support: &[SupportLabel], kind: GameKind) -> String {
    let (first, second) = kind.action_names();
    let parts: Vec<&str> = support
        .iter()
        .map(|s| match s {
            SupportLabel::PureA => first,
            SupportLabel::PureB => second,
            SupportLabel::Mixer => "mix",
        })
        .collect();
    format!("({})", parts.join(", "))
}

fn fmt_values(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:.6}")).collect();
    format!("({})", parts.join(", "))
}

pub fn fmt_verdict(label: &str, v: &Verdict) -> String {
    let mut s = format!(
        "{label} {} (worst margin {:.6}",
        if v.passed { "PASS" } else { "FAIL" },
        v.worst_violation
    );
    if let Some(w) = &v.witness {
        s.push_str(&format!(
            "; tightest deviation: group {} to {:.6}",
            w.group + 1,
            w.mutant
        ));
    }
    s.push(')');
    s
}

/// Solves the configured scenario, verifies every equilibrium, and prints
/// the report. Returns whether all verifications passed.
pub fn run_scenario(
    config: &ScenarioConfig,
    equality_tol: f64,
    grid: &InvasionGrid,
) -> Result<bool, String> {
    match config.fixed_instance()? {
        Instance::Matrix(game) => matrix_report(config, &game, equality_tol, grid),
        Instance::Mac(params) => mac_report(config, &params, equality_tol, grid),
    }
}

fn matrix_report(
    config: &ScenarioConfig,
    game: &GroupGame,
    equality_tol: f64,
    grid: &InvasionGrid,
) -> Result<bool, String> {
    let kind = config.game.kind;
    let m = &game.payoff;
    println!("scenario: {kind}");
    println!(
        "payoff: a={:.6} b={:.6} c={:.6} d={:.6} (curvature delta={:.6})",
        m.a,
        m.b,
        m.c,
        m.d,
        m.delta()
    );
    println!(
        "weights: {}",
        fmt_values(&(0..game.n_groups()).map(|i| game.weights.get(i)).collect::<Vec<_>>())
    );

    println!();
    println!("single-population baseline:");
    for q in ess_candidates_2x2(m) {
        let report = is_ess(m, q, tol::ESS_TOL);
        let mut line = format!(
            "  candidate q={q:.6}: nash={} stable={}",
            report.is_nash, report.is_ess
        );
        if let Some(w) = report.witness {
            line.push_str(&format!(" (deviation that decides: {w:.6})"));
        }
        println!("{line}");
    }

    let results = find_all_gess(game, equality_tol).map_err(|e| e.to_string())?;
    println!();
    println!("group equilibria ({}):", results.len());
    let mut all_passed = true;
    for (i, r) in results.iter().enumerate() {
        println!(
            "  [{i}] kind={} support={}",
            r.kind.as_str(),
            fmt_support(&r.support, kind)
        );
        println!(
            "      q={} aggregate={:.6}",
            fmt_probs(&r.profile),
            r.aggregate
        );
        println!("      brackets={}", fmt_values(&r.brackets));
        let by_def = verify_gess_definition(game, &r.profile, grid);
        let by_cond = verify_conditions(game, &r.profile, grid);
        all_passed &= by_def.passed && by_cond.passed;
        println!(
            "      {} | {}",
            fmt_verdict("definition", &by_def),
            fmt_verdict("conditions", &by_cond)
        );
        for note in &r.notes {
            println!("      note: {note}");
        }
    }

    print_claims(kind, None);
    Ok(all_passed)
}

fn mac_report(
    config: &ScenarioConfig,
    params: &MacParams,
    equality_tol: f64,
    grid: &InvasionGrid,
) -> Result<bool, String> {
    let kind = config.game.kind;
    println!("scenario: {kind}");
    println!(
        "channel: delta={:.6} gamma={:.6} mu={:.6}",
        params.delta, params.gamma, params.mu
    );
    println!(
        "weights: {}",
        fmt_values(
            &(0..params.n_groups()).map(|i| params.weights.get(i)).collect::<Vec<_>>()
        )
    );
    let t = mac_thresholds(params);
    println!(
        "thresholds: all-transmit above gamma={:.6}; all-mixing below gamma={:.6}",
        t.gamma_upper, t.gamma_lower_exact
    );
    println!(
        "stand-alone reference strategy q_std={:.6}",
        standard_reference_strategy(params)
    );

    let results = mac_find_gess(params, equality_tol).map_err(|e| e.to_string())?;
    println!();
    println!("group equilibria ({}):", results.len());
    let mut all_passed = true;
    for (i, eq) in results.iter().enumerate() {
        println!(
            "  [{i}] kind={} support={}",
            eq.kind.as_str(),
            fmt_support(&eq.support, kind)
        );
        println!(
            "      q={} aggregate={:.6} success_prob={:.6}",
            fmt_probs(&eq.profile),
            eq.aggregate,
            eq.success_prob
        );
        println!("      brackets={}", fmt_values(&eq.brackets));
        let verdict = mac_verify_conditions(params, &eq.profile, grid);
        all_passed &= verdict.passed;
        println!("      {}", fmt_verdict("conditions", &verdict));
        for note in &eq.notes {
            println!("      note: {note}");
        }
    }

    print_claims(kind, Some(&t));
    Ok(all_passed)
}

fn print_claims(kind: GameKind, thresholds: Option<&gess_core::MacThresholds>) {
    let items = claims_audit(kind, thresholds);
    if items.is_empty() {
        return;
    }
    println!();
    println!("reference-claims audit:");
    for item in items {
        println!("  - {item}");
    }
}

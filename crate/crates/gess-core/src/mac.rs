//! Medium-access game: groups of radio nodes sharing a slotted channel.
//!
//! Each node transmits in a slot with some probability. A transmission
//! succeeds outright with probability `1 - delta` when nobody else is on the
//! air; a collision is still captured with probability `gamma`. Nodes in the
//! same group share their throughput, so a group weighs the collisions its
//! own members inflict on each other; `mu` scales slot frequency and hence
//! every rate linearly.
//!
//! The structure mirrors the general two-action solver: each group gets a
//! scalar response ("bracket") whose sign says whether more airtime helps,
//! transmit-always and stay-silent groups need the matching sign, and mixing
//! groups need the bracket to vanish. The bracket here is strictly decreasing
//! in the group's own rate, which orders equilibria by group weight and cuts
//! the support search down sharply.

use thiserror::Error;

use crate::game::{GroupProfile, GroupWeights};
use crate::oracle::{InvasionGrid, Verdict, Witness};
use crate::solver::{SolverError, SupportLabel, MAX_GROUPS};
use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum MacError {
    #[error("failure probability delta must lie strictly inside (0, 1), got {0}")]
    InvalidDelta(f64),
    #[error("capture probability gamma must lie in [0, 1], got {0}")]
    InvalidGamma(f64),
    #[error("rate scale mu must be finite and positive, got {0}")]
    InvalidMu(f64),
}

/// Channel and population parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct MacParams {
    /// Probability a clear transmission still fails.
    pub delta: f64,
    /// Probability a collided transmission is captured anyway. `gamma = 1`
    /// makes collisions free and is accepted, though mixing equilibria then
    /// no longer exist.
    pub gamma: f64,
    /// Slot rate multiplier; scales all throughput linearly.
    pub mu: f64,
    pub weights: GroupWeights,
}

impl MacParams {
    pub fn new(delta: f64, gamma: f64, mu: f64, weights: GroupWeights) -> Result<Self, MacError> {
        if !(delta.is_finite() && delta > 0.0 && delta < 1.0) {
            return Err(MacError::InvalidDelta(delta));
        }
        if !(gamma.is_finite() && (0.0..=1.0).contains(&gamma)) {
            return Err(MacError::InvalidGamma(gamma));
        }
        if !(mu.is_finite() && mu > 0.0) {
            return Err(MacError::InvalidMu(mu));
        }
        Ok(MacParams { delta, gamma, mu, weights })
    }

    pub fn n_groups(&self) -> usize {
        self.weights.len()
    }
}

/// Capture-threshold summary for a parameter set.
///
/// `gamma_upper` is where transmit-always becomes an equilibrium for every
/// group. The two lower values bound the all-mixing regime from above:
/// `gamma_lower_exact` is the bound the closed-form solution actually
/// satisfies (and the one [`mac_fully_mixed`] enforces through its interior
/// check), while `gamma_lower_reference` is a commonly quoted variant that
/// differs in one denominator term and overstates nothing but the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacThresholds {
    pub gamma_lower_reference: f64,
    pub gamma_lower_exact: f64,
    pub gamma_upper: f64,
}

/// How an equilibrium of the access game is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacKind {
    /// Every group pure with strict bracket signs.
    Strong,
    /// Every group pure, at least one bracket tying zero.
    Weak,
    /// Every group strictly interior.
    FullyMixed,
    /// Some groups pure, some interior.
    PureMixed,
}

impl MacKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MacKind::Strong => "strong",
            MacKind::Weak => "weak",
            MacKind::FullyMixed => "fully-mixed",
            MacKind::PureMixed => "pure-mixed",
        }
    }
}

/// An equilibrium of the access game. The first action is "transmit", so
/// [`SupportLabel::PureA`] marks an always-transmit group and
/// [`SupportLabel::PureB`] a silent one.
#[derive(Debug, Clone, PartialEq)]
pub struct MacEquilibrium {
    pub profile: GroupProfile,
    pub kind: MacKind,
    pub support: Vec<SupportLabel>,
    pub brackets: Vec<f64>,
    /// Population transmission rate `sum_i alpha_i q_i`.
    pub aggregate: f64,
    /// Slot success probability at the profile.
    pub success_prob: f64,
    pub notes: Vec<String>,
}

/// Combined throughput rate of a same-group pair both transmitting with
/// probability `q`; both directions count because the pair shares utility.
pub fn intra_payoff(params: &MacParams, q: f64) -> f64 {
    params.mu * q * ((1.0 - params.delta) * (2.0 - params.gamma) - 2.0 * (1.0 - params.gamma) * q)
}

/// Throughput rate of a node transmitting at `qi` against an outside node
/// transmitting at `qj`.
pub fn inter_payoff(params: &MacParams, qi: f64, qj: f64) -> f64 {
    params.mu * qi * (1.0 - params.delta - (1.0 - params.gamma) * qj)
}

fn aggregate_rate(params: &MacParams, profile: &GroupProfile) -> f64 {
    (0..params.n_groups())
        .map(|j| params.weights.get(j) * profile.p(j))
        .sum()
}

/// Shared utility rate of group `i`: the weighted mix of its internal pair
/// rate and its rate against every other group.
pub fn mac_group_throughput(params: &MacParams, profile: &GroupProfile, i: usize) -> f64 {
    let qi = profile.p(i);
    let y = aggregate_rate(params, profile);
    params.mu
        * qi
        * (1.0 - params.delta
            + (1.0 - params.gamma) * (params.weights.get(i) * (1.0 - params.delta - qi) - y))
}

/// First-order response of group `i`: positive means the group gains by
/// transmitting more. Deliberately independent of `mu`.
pub fn mac_bracket(params: &MacParams, profile: &GroupProfile, i: usize) -> f64 {
    let qi = profile.p(i);
    let y = aggregate_rate(params, profile);
    bracket_at(params, params.weights.get(i), qi, y)
}

fn bracket_at(params: &MacParams, alpha: f64, qi: f64, y: f64) -> f64 {
    1.0 - params.delta
        + (1.0 - params.gamma) * (alpha * (1.0 - params.delta - 2.0 * qi) - y)
}

/// Capture thresholds delimiting the equilibrium regimes.
pub fn mac_thresholds(params: &MacParams) -> MacThresholds {
    let d = params.delta;
    let n = params.n_groups() as f64;
    let mut upper = f64::MIN;
    let mut lower_ref = f64::MAX;
    let mut lower_exact = f64::MAX;
    for i in 0..params.n_groups() {
        let alpha = params.weights.get(i);
        upper = upper.max(1.0 - (1.0 - d) / (alpha * (1.0 + d) + 1.0));
        let head = alpha * (n + 2.0) * (1.0 + d);
        lower_ref = lower_ref.min((head - (1.0 - d)) / (head + (1.0 + d)));
        lower_exact = lower_exact.min((head - (1.0 - d)) / (head + (1.0 - d)));
    }
    MacThresholds {
        gamma_lower_reference: lower_ref,
        gamma_lower_exact: lower_exact,
        gamma_upper: upper,
    }
}

/// The all-mixing equilibrium in closed form, when it exists.
///
/// Requires `gamma < 1` (otherwise no bracket can vanish) and every
/// component strictly inside (0, 1); the interior check is what enforces
/// `gamma < gamma_lower_exact`. The curvature requirement holds
/// automatically here: a mutant share `eps` of strategy `p` in group `i`
/// shifts the group rate by `-eps^2 mu (1 - gamma) alpha_i (p - q_i)^2` at
/// second order, strictly negative for `gamma < 1`.
pub fn mac_fully_mixed(params: &MacParams) -> Option<MacEquilibrium> {
    if params.gamma >= 1.0 {
        return None;
    }
    let d = params.delta;
    let g = params.gamma;
    let n = params.n_groups() as f64;
    let mut probs = Vec::with_capacity(params.n_groups());
    for i in 0..params.n_groups() {
        let alpha = params.weights.get(i);
        let q = (1.0 - d) * (1.0 + g + (1.0 - g) * (n + 2.0) * alpha)
            / (2.0 * (n + 2.0) * (1.0 - g) * alpha);
        if !(q > 0.0 && q < 1.0) {
            return None;
        }
        probs.push(q);
    }
    let support = vec![SupportLabel::Mixer; params.n_groups()];
    Some(make_equilibrium(params, probs, support, Vec::new()))
}

fn make_equilibrium(
    params: &MacParams,
    probs: Vec<f64>,
    support: Vec<SupportLabel>,
    notes: Vec<String>,
) -> MacEquilibrium {
    let profile = GroupProfile::from_probs(&probs).expect("access-game solver produced an invalid profile");
    let brackets: Vec<f64> = (0..params.n_groups())
        .map(|i| mac_bracket(params, &profile, i))
        .collect();
    let mixers = support.iter().filter(|&&s| s == SupportLabel::Mixer).count();
    let kind = if mixers == params.n_groups() {
        MacKind::FullyMixed
    } else if mixers > 0 {
        MacKind::PureMixed
    } else if notes.iter().any(|n| n.contains("boundary")) {
        MacKind::Weak
    } else {
        MacKind::Strong
    };
    let aggregate = aggregate_rate(params, &profile);
    let success_prob = success_probability(params, &profile);
    MacEquilibrium { profile, kind, support, brackets, aggregate, success_prob, notes }
}

/// Rules out support patterns that contradict the bracket's monotone
/// structure. Only strict weight comparisons prune; equal weights keep every
/// labelling and the sign checks sort them out.
fn support_admissible(labels: &[SupportLabel], weights: &GroupWeights) -> bool {
    let n = labels.len();
    let has_t = labels.contains(&SupportLabel::PureA);
    let has_s = labels.contains(&SupportLabel::PureB);
    // Transmit-always and silent groups would need the population rate to be
    // simultaneously low and high.
    if has_t && has_s {
        return false;
    }
    // The bracket's own-weight terms make heavier groups throttle first, so a
    // pure group strictly heavier than a mixing group is contradictory.
    for i in 0..n {
        if labels[i] != SupportLabel::Mixer {
            continue;
        }
        for (j, label) in labels.iter().enumerate() {
            if *label != SupportLabel::Mixer && weights.get(j) > weights.get(i) {
                return false;
            }
        }
    }
    true
}

/// Finds every equilibrium of the access game by support enumeration.
///
/// `equality_tol` is the band within which a pure group's bracket counts as
/// tying zero; such profiles are kept (curvature is negative whenever
/// mixing is possible at all) and marked accordingly.
pub fn mac_find_gess(
    params: &MacParams,
    equality_tol: f64,
) -> Result<Vec<MacEquilibrium>, SolverError> {
    let n = params.n_groups();
    if n > MAX_GROUPS {
        return Err(SolverError::TooManyGroups { n, max: MAX_GROUPS });
    }
    let d = params.delta;
    let g = params.gamma;

    let mut results: Vec<MacEquilibrium> = Vec::new();
    let total = 3usize.pow(n as u32);
    let mut labels = vec![SupportLabel::PureA; n];
    for code in 0..total {
        let mut rest = code;
        let mut mixers = 0usize;
        for slot in labels.iter_mut() {
            *slot = match rest % 3 {
                0 => SupportLabel::PureA,
                1 => SupportLabel::PureB,
                _ => {
                    mixers += 1;
                    SupportLabel::Mixer
                }
            };
            rest /= 3;
        }
        if !support_admissible(&labels, &params.weights) {
            continue;
        }
        if mixers > 0 && g >= 1.0 {
            // Free collisions leave the bracket pinned at 1 - delta > 0.
            continue;
        }

        let y = if mixers == 0 {
            labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == SupportLabel::PureA)
                .map(|(j, _)| params.weights.get(j))
                .sum::<f64>()
        } else {
            let mut w_t = 0.0;
            let mut s_m = 0.0;
            for (j, &l) in labels.iter().enumerate() {
                match l {
                    SupportLabel::PureA => w_t += params.weights.get(j),
                    SupportLabel::Mixer => s_m += params.weights.get(j),
                    SupportLabel::PureB => {}
                }
            }
            let m = mixers as f64;
            (2.0 * (1.0 - g) * w_t + m * (1.0 - d) + (1.0 - g) * (1.0 - d) * s_m)
                / ((1.0 - g) * (m + 2.0))
        };

        let mut probs = Vec::with_capacity(n);
        let mut feasible = true;
        for (i, &l) in labels.iter().enumerate() {
            let q = match l {
                SupportLabel::PureA => 1.0,
                SupportLabel::PureB => 0.0,
                SupportLabel::Mixer => {
                    let alpha = params.weights.get(i);
                    let q = (1.0 - d + (1.0 - g) * (alpha * (1.0 - d) - y))
                        / (2.0 * (1.0 - g) * alpha);
                    if !q.is_finite() {
                        return Err(SolverError::SingularMixerSystem);
                    }
                    if !(q > 0.0 && q < 1.0) {
                        feasible = false;
                        break;
                    }
                    q
                }
            };
            probs.push(q);
        }
        if !feasible {
            continue;
        }

        let mut ties = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            let b = bracket_at(params, params.weights.get(i), probs[i], y);
            let ok = match l {
                SupportLabel::PureA => b >= -equality_tol,
                SupportLabel::PureB => b <= equality_tol,
                SupportLabel::Mixer => true,
            };
            if !ok {
                feasible = false;
                break;
            }
            if l != SupportLabel::Mixer && b.abs() <= equality_tol {
                ties.push(i);
            }
        }
        if !feasible {
            continue;
        }
        if !ties.is_empty() && g >= 1.0 {
            // A tie needs negative curvature to hold, and free collisions
            // leave none.
            continue;
        }

        let mut notes = Vec::new();
        if !ties.is_empty() {
            notes.push(format!("boundary: bracket ties zero for pure group(s) {:?}", ties));
        }
        results.push(make_equilibrium(params, probs, labels.clone(), notes));
    }

    results.sort_by(|a, b| {
        a.support.cmp(&b.support).then_with(|| {
            a.profile
                .probs()
                .iter()
                .zip(b.profile.probs())
                .map(|(x, y)| x.total_cmp(&y))
                .find(|o| *o != std::cmp::Ordering::Equal)
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(results)
}

/// Probability that a slot carries a success: either a lone transmission
/// from a random pair, or a collision rescued by capture.
pub fn success_probability(params: &MacParams, profile: &GroupProfile) -> f64 {
    let n = params.n_groups();
    let solo = aggregate_rate(params, profile);
    let mut exactly_one = 0.0;
    for i in 0..n {
        let ai = params.weights.get(i);
        let pi = profile.p(i);
        exactly_one += 2.0 * ai * ai * pi * (1.0 - pi);
        for j in (i + 1)..n {
            let aj = params.weights.get(j);
            let pj = profile.p(j);
            exactly_one += ai * aj * (pi * (1.0 - pj) + pj * (1.0 - pi));
        }
    }
    params.mu * (params.gamma * solo + (1.0 - params.gamma) * exactly_one)
}

/// Transmission probability a selfish stand-alone node would settle on:
/// `min(1, (1 - delta) / (1 - gamma))`.
pub fn standard_reference_strategy(params: &MacParams) -> f64 {
    if params.gamma >= 1.0 {
        1.0
    } else {
        ((1.0 - params.delta) / (1.0 - params.gamma)).min(1.0)
    }
}

/// First-order verification for access-game profiles, mirroring the general
/// conditions check: mutants gain at rate `(q_i - p) * bracket_i`, and
/// binding groups fall back to the curvature term
/// `(1 - gamma) alpha_i (p - q_i)^2`. Margins are `mu`-free by construction.
pub fn mac_verify_conditions(
    params: &MacParams,
    profile: &GroupProfile,
    grid: &InvasionGrid,
) -> Verdict {
    let slack = tol::ORACLE_REL_TOL;
    let half_step = grid.resolution / 2.0;
    let mutants = grid.mutants();

    let mut worst = f64::INFINITY;
    let mut witness = None;
    for i in 0..params.n_groups() {
        let qi = profile.p(i);
        let alpha = params.weights.get(i);
        let b = mac_bracket(params, profile, i);
        let max_dev = mutants
            .iter()
            .filter(|&&p| (p - qi).abs() >= half_step)
            .map(|&p| (p - qi).abs())
            .fold(0.0, f64::max);
        let binding = b.abs() * max_dev <= slack;
        for &p in &mutants {
            if (p - qi).abs() < half_step {
                continue;
            }
            let margin = if binding {
                (1.0 - params.gamma) * alpha * (p - qi) * (p - qi)
            } else {
                (qi - p) * b
            };
            if margin < worst {
                worst = margin;
                witness = Some(Witness { group: i, mutant: p, eps: 0.0 });
            }
        }
    }
    if !worst.is_finite() {
        worst = 0.0;
    }
    Verdict { passed: worst > -slack, worst_violation: worst, witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(delta: f64, gamma: f64) -> MacParams {
        MacParams::new(delta, gamma, 1.0, GroupWeights::new(vec![0.4, 0.6]).unwrap()).unwrap()
    }

    fn profile(probs: &[f64]) -> GroupProfile {
        GroupProfile::from_probs(probs).unwrap()
    }

    #[test]
    fn parameter_validation() {
        let w = GroupWeights::new(vec![0.4, 0.6]).unwrap();
        assert!(matches!(
            MacParams::new(0.0, 0.5, 1.0, w.clone()),
            Err(MacError::InvalidDelta(_))
        ));
        assert!(matches!(
            MacParams::new(1.0, 0.5, 1.0, w.clone()),
            Err(MacError::InvalidDelta(_))
        ));
        assert!(matches!(
            MacParams::new(0.2, -0.1, 1.0, w.clone()),
            Err(MacError::InvalidGamma(_))
        ));
        assert!(matches!(
            MacParams::new(0.2, 0.5, 0.0, w.clone()),
            Err(MacError::InvalidMu(_))
        ));
        assert!(MacParams::new(0.2, 1.0, 1.0, w).is_ok(), "free capture is allowed");
    }

    #[test]
    fn throughput_matches_pairwise_decomposition() {
        // U_i must equal the weighted sum of the internal pair rate and the
        // cross-group rates; the closed form above is just that sum expanded.
        let p = params(0.2, 0.3);
        let q = profile(&[0.7, 0.35]);
        for i in 0..2 {
            let qi = q.p(i);
            let direct: f64 = p.weights.get(i) * intra_payoff(&p, qi)
                + (0..2)
                    .filter(|&j| j != i)
                    .map(|j| p.weights.get(j) * inter_payoff(&p, qi, q.p(j)))
                    .sum::<f64>();
            assert!((mac_group_throughput(&p, &q, i) - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn thresholds_frozen_values() {
        let t = mac_thresholds(&params(0.2, 0.1));
        assert!((t.gamma_upper - 0.5348837209302325).abs() < 1e-12);
        assert!((t.gamma_lower_reference - 0.358974358974359).abs() < 1e-12);
        assert!((t.gamma_lower_exact - 0.4117647058823529).abs() < 1e-12);
        assert!(t.gamma_lower_reference < t.gamma_lower_exact);
        assert!(t.gamma_lower_exact < t.gamma_upper);
    }

    #[test]
    fn fully_mixed_frozen_point() {
        let eq = mac_fully_mixed(&params(0.2, 0.1)).expect("inside the mixing window");
        let probs = eq.profile.probs();
        assert!((probs[0] - 127.0 / 180.0).abs() < 1e-12);
        assert!((probs[1] - 163.0 / 270.0).abs() < 1e-12);
        assert!((eq.aggregate - 0.6444444444444445).abs() < 1e-12);
        assert_eq!(eq.kind, MacKind::FullyMixed);
        for b in &eq.brackets {
            assert!(b.abs() < 1e-9, "brackets vanish at the mixing point");
        }
    }

    #[test]
    fn fully_mixed_window_boundaries() {
        // Exists strictly below the exact lower threshold, not above it.
        let t = mac_thresholds(&params(0.2, 0.0));
        assert!(mac_fully_mixed(&params(0.2, t.gamma_lower_exact - 1e-6)).is_some());
        assert!(mac_fully_mixed(&params(0.2, t.gamma_lower_exact + 1e-6)).is_none());
        // The commonly quoted variant sits inside the true window.
        assert!(mac_fully_mixed(&params(0.2, t.gamma_lower_reference + 1e-6)).is_some());
        assert!(mac_fully_mixed(&params(0.2, 1.0)).is_none());
    }

    #[test]
    fn regimes_across_gamma() {
        let tol = tol::EQUALITY_TOL;

        // Low capture: only the all-mixing equilibrium.
        let low = mac_find_gess(&params(0.2, 0.1), tol).unwrap();
        assert_eq!(low.len(), 1);
        assert_eq!(low[0].kind, MacKind::FullyMixed);
        let expect = mac_fully_mixed(&params(0.2, 0.1)).unwrap();
        for (got, want) in low[0].profile.probs().iter().zip(expect.profile.probs()) {
            assert!((got - want).abs() < 1e-12, "support path matches the closed form");
        }

        // Middle band: the light group saturates, the heavy one mixes.
        let mid = mac_find_gess(&params(0.2, 0.45), tol).unwrap();
        assert_eq!(mid.len(), 1);
        assert_eq!(mid[0].kind, MacKind::PureMixed);
        assert_eq!(mid[0].support, vec![SupportLabel::PureA, SupportLabel::Mixer]);
        let probs = mid[0].profile.probs();
        assert_eq!(probs[0], 1.0);
        assert!((probs[1] - 422.0 / 495.0).abs() < 1e-12);
        assert!((mid[0].aggregate - 752.0 / 825.0).abs() < 1e-12);
        assert!((mid[0].brackets[0] - 0.034666666666666665).abs() < 1e-10);

        // High capture: everyone transmits flat out.
        let high = mac_find_gess(&params(0.2, 0.6), tol).unwrap();
        assert_eq!(high.len(), 1);
        assert_eq!(high[0].kind, MacKind::Strong);
        assert_eq!(high[0].profile.probs(), vec![1.0, 1.0]);

        // Free collisions: same, with flat brackets.
        let free = mac_find_gess(&params(0.2, 1.0), tol).unwrap();
        assert_eq!(free.len(), 1);
        assert_eq!(free[0].profile.probs(), vec![1.0, 1.0]);
        assert!(free[0].brackets.iter().all(|&b| (b - 0.8).abs() < 1e-12));
    }

    #[test]
    fn all_transmit_boundary_is_weak() {
        let t = mac_thresholds(&params(0.2, 0.0));
        let at = mac_find_gess(&params(0.2, t.gamma_upper), 1e-9).unwrap();
        let all_t: Vec<_> = at
            .iter()
            .filter(|e| e.profile.probs() == vec![1.0, 1.0])
            .collect();
        assert_eq!(all_t.len(), 1);
        assert_eq!(all_t[0].kind, MacKind::Weak);
        assert!(all_t[0].notes.iter().any(|n| n.contains("boundary")));
    }

    #[test]
    fn three_group_pure_mixed_frozen_point() {
        let p = MacParams::new(
            0.2,
            0.3,
            1.0,
            GroupWeights::new(vec![0.2, 0.3, 0.5]).unwrap(),
        )
        .unwrap();
        let found = mac_find_gess(&p, tol::EQUALITY_TOL).unwrap();
        assert_eq!(found.len(), 1);
        let eq = &found[0];
        assert_eq!(
            eq.support,
            vec![SupportLabel::PureA, SupportLabel::Mixer, SupportLabel::Mixer]
        );
        let probs = eq.profile.probs();
        assert_eq!(probs[0], 1.0);
        assert!((probs[1] - 193.0 / 210.0).abs() < 1e-12);
        assert!((probs[2] - 249.0 / 350.0).abs() < 1e-12);
        assert!((eq.brackets[0] - 0.05).abs() < 1e-12);
    }

    #[test]
    fn silence_never_holds() {
        // At an all-silent profile any group's bracket is 1 - delta plus a
        // positive internal term, so someone always wants airtime.
        for gamma in [0.0, 0.3, 0.7, 0.99] {
            for delta in [0.1, 0.5, 0.9] {
                let found = mac_find_gess(&params(delta, gamma), tol::EQUALITY_TOL).unwrap();
                assert!(found
                    .iter()
                    .all(|e| e.profile.probs().iter().any(|&q| q > 0.0)));
            }
        }
    }

    #[test]
    fn support_pruning_respects_weight_order() {
        use SupportLabel::{Mixer, PureA, PureB};
        let w = GroupWeights::new(vec![0.4, 0.6]).unwrap();
        assert!(!support_admissible(&[PureA, PureB], &w), "transmit and silent clash");
        assert!(!support_admissible(&[Mixer, PureA], &w), "heavy pure above light mixer");
        assert!(!support_admissible(&[Mixer, PureB], &w));
        assert!(support_admissible(&[PureA, Mixer], &w));
        assert!(support_admissible(&[Mixer, Mixer], &w));
        assert!(support_admissible(&[PureA, PureA], &w));

        // Equal weights never prune by themselves.
        let even = GroupWeights::new(vec![0.5, 0.5]).unwrap();
        assert!(support_admissible(&[Mixer, PureA], &even));
    }

    #[test]
    fn success_probability_frozen_point() {
        let p = params(0.2, 0.2);
        let ps = success_probability(&p, &profile(&[0.5, 0.5]));
        assert!((ps - 0.404).abs() < 1e-12);
    }

    #[test]
    fn success_probability_scales_with_mu() {
        let base = params(0.2, 0.2);
        let scaled = MacParams::new(0.2, 0.2, 2.5, base.weights.clone()).unwrap();
        let q = profile(&[0.7, 0.35]);
        assert!(
            (success_probability(&scaled, &q) - 2.5 * success_probability(&base, &q)).abs() < 1e-12
        );
        assert_eq!(mac_bracket(&base, &q, 0), mac_bracket(&scaled, &q, 0));
    }

    #[test]
    fn standard_reference_strategy_caps_at_one() {
        assert!((standard_reference_strategy(&params(0.2, 0.1)) - 8.0 / 9.0).abs() < 1e-12);
        assert_eq!(standard_reference_strategy(&params(0.2, 0.5)), 1.0);
        assert_eq!(standard_reference_strategy(&params(0.2, 1.0)), 1.0);
    }

    #[test]
    fn conditions_verdict_for_access_profiles() {
        let grid = InvasionGrid::default();

        let eq = mac_fully_mixed(&params(0.2, 0.1)).unwrap();
        let good = mac_verify_conditions(&params(0.2, 0.1), &eq.profile, &grid);
        assert!(good.passed);
        assert!(good.worst_violation > 0.0);

        // All-transmit far below its threshold is invadable.
        let bad = mac_verify_conditions(&params(0.2, 0.1), &profile(&[1.0, 1.0]), &grid);
        assert!(!bad.passed);
        assert!(bad.witness.unwrap().mutant < 1.0);
    }
}

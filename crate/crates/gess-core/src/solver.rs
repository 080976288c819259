//! Equilibrium solver for group games over two actions.
//!
//! A profile `q` resists invasion when, for every group `i` and every mutant
//! strategy `p`, the first-order utility response
//!
//! ```text
//! F_i(p, q) = (q_i - p) * B_i(q)
//! ```
//!
//! is nonnegative, with the tie-breaking curvature requirement that any exact
//! tie at `p != q_i` comes with `delta < 0`. The scalar `B_i(q)` (the
//! "bracket" of group `i`) is
//!
//! ```text
//! B_i(q) = alpha_i * (J(q_i,1) - J(q_i,0)) + sum_j alpha_j * (J(1,q_j) - J(0,q_j))
//! ```
//!
//! which turns equilibrium search into a sign problem: a group at the first
//! action needs `B_i >= 0`, a group at the second needs `B_i <= 0`, and a
//! mixing group needs `B_i = 0` exactly. The solver enumerates the possible
//! support patterns, solves the linear system the mixers impose, and checks
//! the sign conditions for the pure groups.

use thiserror::Error;

use crate::game::{pairwise_payoff, GroupGame, GroupProfile};
use crate::oracle::Verdict;
use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("payoff matrix has a = c and b = d; own actions never change own payoffs")]
    DegenerateGame,
    #[error("support enumeration over {n} groups exceeds the limit of {max}")]
    TooManyGroups { n: usize, max: usize },
    #[error("mixer subsystem produced a non-finite strategy")]
    SingularMixerSystem,
}

/// Maximum group count accepted by [`find_all_gess`]; support enumeration is
/// exponential in the number of groups.
pub const MAX_GROUPS: usize = 12;

/// Where each group sits in an equilibrium candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SupportLabel {
    /// Plays the first action with probability one.
    PureA,
    /// Plays the second action with probability one.
    PureB,
    /// Plays a strictly interior mix.
    Mixer,
}

/// How strictly the sign conditions hold at a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GessKind {
    /// All groups pure, all bracket signs strict.
    Strong,
    /// At least one bracket ties zero, so stability leans on the curvature
    /// condition `delta < 0`.
    Weak,
    /// Every group mixes; all brackets vanish simultaneously.
    FullyMixed,
}

impl GessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GessKind::Strong => "strong",
            GessKind::Weak => "weak",
            GessKind::FullyMixed => "fully-mixed",
        }
    }
}

/// An equilibrium found by the solver, with the diagnostics used to audit it.
#[derive(Debug, Clone, PartialEq)]
pub struct GessResult {
    pub profile: GroupProfile,
    pub kind: GessKind,
    pub support: Vec<SupportLabel>,
    /// Bracket value of each group at the profile.
    pub brackets: Vec<f64>,
    pub delta: f64,
    /// Population share playing the first action, `sum_i alpha_i q_i`.
    pub aggregate: f64,
    /// Filled in by the verification pass; the solver itself leaves it empty.
    pub oracle_verdict: Option<Verdict>,
    pub notes: Vec<String>,
}

/// Bracket of group `i` at `profile`; its sign is the direction in which the
/// group gains by shifting weight toward the first action.
pub fn bracket(game: &GroupGame, profile: &GroupProfile, i: usize) -> f64 {
    let m = &game.payoff;
    let qi = profile.p(i);
    let own = game.weights.get(i) * (pairwise_payoff(m, qi, 1.0) - pairwise_payoff(m, qi, 0.0));
    let field: f64 = (0..game.n_groups())
        .map(|j| {
            let qj = profile.p(j);
            game.weights.get(j) * (pairwise_payoff(m, 1.0, qj) - pairwise_payoff(m, 0.0, qj))
        })
        .sum();
    own + field
}

fn all_brackets(game: &GroupGame, profile: &GroupProfile) -> Vec<f64> {
    (0..game.n_groups()).map(|i| bracket(game, profile, i)).collect()
}

fn aggregate_share(game: &GroupGame, probs: &[f64]) -> f64 {
    probs
        .iter()
        .enumerate()
        .map(|(j, &q)| game.weights.get(j) * q)
        .sum()
}

fn make_result(
    game: &GroupGame,
    probs: Vec<f64>,
    support: Vec<SupportLabel>,
    kind: GessKind,
    notes: Vec<String>,
) -> GessResult {
    let profile = GroupProfile::from_probs(&probs).expect("solver produced an invalid profile");
    let brackets = all_brackets(game, &profile);
    let aggregate = aggregate_share(game, &probs);
    GessResult {
        profile,
        kind,
        support,
        brackets,
        delta: game.payoff.delta(),
        aggregate,
        oracle_verdict: None,
        notes,
    }
}

/// The unique all-mixing equilibrium candidate, if it is admissible.
///
/// Solving `B_i(q) = 0` for every group gives the closed form
///
/// ```text
/// q_i = (d - b + ((N+1) alpha_i - 1)(d - c)) / ((N+1) alpha_i delta)
/// ```
///
/// which is an equilibrium exactly when `delta < 0` and every component lies
/// strictly inside (0, 1). Returns `None` otherwise, including for
/// `delta >= 0`.
pub fn fully_mixed_gess(game: &GroupGame) -> Option<GessResult> {
    let m = &game.payoff;
    let delta = m.delta();
    if delta >= 0.0 {
        return None;
    }
    let n = game.n_groups() as f64;
    let mut probs = Vec::with_capacity(game.n_groups());
    for i in 0..game.n_groups() {
        let alpha = game.weights.get(i);
        let q = (m.d - m.b + ((n + 1.0) * alpha - 1.0) * (m.d - m.c)) / ((n + 1.0) * alpha * delta);
        if !(q > 0.0 && q < 1.0) {
            return None;
        }
        probs.push(q);
    }
    let support = vec![SupportLabel::Mixer; game.n_groups()];
    Some(make_result(game, probs, support, GessKind::FullyMixed, Vec::new()))
}

/// Closed-form screening values for an all-pure profile. `h` is the weighted
/// payoff advantage of the first action across the current split:
/// `sum_{first-action groups} alpha_j (a - c) + sum_{rest} alpha_j (b - d)`.
struct PureScreen {
    h: f64,
    /// Verdict of the literal per-group double-inequality screen. Kept as a
    /// diagnostic; the direct sign test is authoritative and the two are known
    /// to disagree on some inputs.
    literal: bool,
}

fn pure_screen(game: &GroupGame, pattern: &[bool]) -> PureScreen {
    let m = &game.payoff;
    let n = game.n_groups();
    let h: f64 = (0..n)
        .map(|j| {
            let w = game.weights.get(j);
            if pattern[j] {
                w * (m.a - m.c)
            } else {
                w * (m.b - m.d)
            }
        })
        .sum();
    let n_first = pattern.iter().filter(|&&x| x).count();
    let literal = if n_first == n {
        let max_w = (0..n).map(|j| game.weights.get(j)).fold(f64::MIN, f64::max);
        m.a - m.c > max_w * (m.b - m.a)
    } else if n_first == 0 {
        let min_w = (0..n).map(|j| game.weights.get(j)).fold(f64::MAX, f64::min);
        m.b - m.d < min_w * (m.d - m.c)
    } else {
        (0..n).all(|i| {
            let w = game.weights.get(i);
            w * (m.d - m.c) > h && h > w * (m.b - m.a)
        })
    };
    PureScreen { h, literal }
}

/// Enumerates all `2^N` pure profiles and keeps those whose bracket signs
/// support them.
///
/// A pure profile is a strong equilibrium when every first-action group has a
/// strictly positive bracket and every second-action group a strictly
/// negative one. Sign ties within `equality_tol` demote the profile to weak,
/// which is only admissible when `delta < 0`.
///
/// Errors on matrices with `a = c` and `b = d`: there a player's own action
/// never changes its own payoff and the sign test carries no information.
pub fn strong_gess_all(game: &GroupGame, equality_tol: f64) -> Result<Vec<GessResult>, SolverError> {
    let m = &game.payoff;
    if m.a == m.c && m.b == m.d {
        return Err(SolverError::DegenerateGame);
    }
    let n = game.n_groups();
    if n > MAX_GROUPS {
        return Err(SolverError::TooManyGroups { n, max: MAX_GROUPS });
    }
    let delta = m.delta();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let pattern: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        let probs: Vec<f64> = pattern.iter().map(|&x| if x { 1.0 } else { 0.0 }).collect();
        let profile = GroupProfile::from_probs(&probs).unwrap();
        let brackets = all_brackets(game, &profile);

        let mut ok = true;
        let mut ties = Vec::new();
        for i in 0..n {
            let b = brackets[i];
            if b.abs() <= equality_tol {
                ties.push(i);
            } else if pattern[i] != (b > 0.0) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        if !ties.is_empty() && delta >= 0.0 {
            // A tied bracket leaves a direction of costless drift; without
            // negative curvature the profile cannot hold it.
            continue;
        }

        let mut notes = Vec::new();
        if !ties.is_empty() {
            notes.push(format!(
                "boundary: bracket ties zero for group(s) {:?}",
                ties
            ));
        }
        let screen = pure_screen(game, &pattern);
        if !screen.literal {
            notes.push(format!(
                "closed-form screen (H = {:.6}) disagrees with the direct sign test; \
                 the sign test is authoritative",
                screen.h
            ));
        }
        let kind = if ties.is_empty() { GessKind::Strong } else { GessKind::Weak };
        let support = pattern
            .iter()
            .map(|&x| if x { SupportLabel::PureA } else { SupportLabel::PureB })
            .collect();
        out.push(make_result(game, probs, support, kind, notes));
    }
    out.sort_by(support_order);
    Ok(out)
}

/// Solves for an equilibrium with the given support pattern, which must mix
/// at least one group and pin at least one to a pure action.
///
/// Every mixer imposes `B_i(q) = 0`. Summing those equations eliminates the
/// individual strategies in favor of the population aggregate
/// `y = sum_j alpha_j q_j`, which has the closed form
///
/// ```text
/// y = (delta * W_A + S_M (d - c) + k (d - b)) / (delta * (k + 1))
/// ```
///
/// with `W_A` the weight on first-action groups, `S_M` the weight on mixers
/// and `k` the mixer count. Back-substitution recovers each mixer strategy.
/// The candidate stands only if every mixer lands strictly inside (0, 1) and
/// every pure group's bracket sign holds, ties allowed; mixers bind an exact
/// equality, so `delta < 0` is required throughout.
///
/// # Panics
///
/// Panics if the support has no mixer, no pure group, or the wrong length.
pub fn mixed_support_solve(
    game: &GroupGame,
    support: &[SupportLabel],
    equality_tol: f64,
) -> Result<Option<GessResult>, SolverError> {
    let n = game.n_groups();
    assert_eq!(support.len(), n, "support/group count mismatch");
    let mixers = support.iter().filter(|&&s| s == SupportLabel::Mixer).count();
    assert!(mixers >= 1, "support must mix at least one group");
    assert!(mixers < n, "support must pin at least one group");

    let m = &game.payoff;
    let delta = m.delta();
    if delta >= 0.0 {
        return Ok(None);
    }

    let mut w_first = 0.0;
    let mut w_mix = 0.0;
    for (i, s) in support.iter().enumerate() {
        match s {
            SupportLabel::PureA => w_first += game.weights.get(i),
            SupportLabel::Mixer => w_mix += game.weights.get(i),
            SupportLabel::PureB => {}
        }
    }
    let k = mixers as f64;
    let y = (delta * w_first + w_mix * (m.d - m.c) + k * (m.d - m.b)) / (delta * (k + 1.0));

    let mut probs = Vec::with_capacity(n);
    for (i, s) in support.iter().enumerate() {
        let q = match s {
            SupportLabel::PureA => 1.0,
            SupportLabel::PureB => 0.0,
            SupportLabel::Mixer => {
                let alpha = game.weights.get(i);
                let q = ((m.d - m.b) + alpha * (m.d - m.c) - delta * y) / (delta * alpha);
                if !q.is_finite() {
                    return Err(SolverError::SingularMixerSystem);
                }
                if !(q > 0.0 && q < 1.0) {
                    return Ok(None);
                }
                q
            }
        };
        probs.push(q);
    }

    let profile = GroupProfile::from_probs(&probs).unwrap();
    let mut ties = Vec::new();
    for (i, s) in support.iter().enumerate() {
        let b = bracket(game, &profile, i);
        match s {
            SupportLabel::PureA if b < -equality_tol => return Ok(None),
            SupportLabel::PureB if b > equality_tol => return Ok(None),
            SupportLabel::PureA | SupportLabel::PureB if b.abs() <= equality_tol => ties.push(i),
            _ => {}
        }
    }

    let mut notes = Vec::new();
    if !ties.is_empty() {
        notes.push(format!("boundary: bracket ties zero for pure group(s) {:?}", ties));
    }
    Ok(Some(make_result(game, probs, support.to_vec(), GessKind::Weak, notes)))
}

fn support_order(a: &GessResult, b: &GessResult) -> std::cmp::Ordering {
    a.support
        .cmp(&b.support)
        .then_with(|| {
            let pa = a.profile.probs();
            let pb = b.profile.probs();
            for (x, y) in pa.iter().zip(pb.iter()) {
                let ord = x.total_cmp(y);
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
}

fn max_norm_distance(a: &GessResult, b: &GessResult) -> f64 {
    a.profile
        .probs()
        .iter()
        .zip(b.profile.probs())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Finds every equilibrium of the game: all supported pure profiles, the
/// fully mixed candidate, and every mixed support pattern.
///
/// Results come back deduplicated (solutions closer than
/// `equality_tol * 10` in the max norm are merged) and in a deterministic
/// order: by support pattern, then by profile. Oracle verdicts are left empty
/// for the caller to fill.
pub fn find_all_gess(game: &GroupGame, equality_tol: f64) -> Result<Vec<GessResult>, SolverError> {
    let n = game.n_groups();
    if n > MAX_GROUPS {
        return Err(SolverError::TooManyGroups { n, max: MAX_GROUPS });
    }

    let mut results = strong_gess_all(game, equality_tol)?;
    if let Some(mixed) = fully_mixed_gess(game) {
        results.push(mixed);
    }

    // Every support with at least one mixer and at least one pure group,
    // walked as a base-3 counter.
    let total = 3usize.pow(n as u32);
    let mut labels = vec![SupportLabel::PureA; n];
    for code in 0..total {
        let mut rest = code;
        let mut mixers = 0;
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
        if mixers == 0 || mixers == n {
            continue;
        }
        if let Some(result) = mixed_support_solve(game, &labels, equality_tol)? {
            results.push(result);
        }
    }

    results.sort_by(support_order);
    let merge_dist = equality_tol * tol::DEDUP_FACTOR;
    let mut unique: Vec<GessResult> = Vec::with_capacity(results.len());
    for r in results {
        if unique.iter().all(|kept| max_norm_distance(kept, &r) > merge_dist) {
            unique.push(r);
        }
    }
    Ok(unique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GroupWeights, PayoffMatrix2};
    use crate::tol::EQUALITY_TOL;

    fn hd_game(alpha: f64) -> GroupGame {
        GroupGame::new(
            PayoffMatrix2::hawk_dove(2.0, 3.0).unwrap(),
            GroupWeights::pair(alpha).unwrap(),
        )
    }

    fn sh_game(alpha: f64) -> GroupGame {
        GroupGame::new(PayoffMatrix2::stag_hunt(), GroupWeights::pair(alpha).unwrap())
    }

    fn pd_game(alpha: f64) -> GroupGame {
        GroupGame::new(
            PayoffMatrix2::prisoners_dilemma(),
            GroupWeights::pair(alpha).unwrap(),
        )
    }

    #[test]
    fn bracket_hand_values_hawk_dove() {
        let game = hd_game(0.4);
        let profile = GroupProfile::from_probs(&[1.0, 0.0]).unwrap();
        assert!((bracket(&game, &profile, 0) - (-0.6)).abs() < 1e-12);
        assert!((bracket(&game, &profile, 1) - (-0.2)).abs() < 1e-12);
    }

    #[test]
    fn bracket_matches_closed_form() {
        let game = GroupGame::new(
            PayoffMatrix2::new(0.7, -1.1, 0.4, 1.3).unwrap(),
            GroupWeights::new(vec![0.25, 0.35, 0.4]).unwrap(),
        );
        let m = &game.payoff;
        let delta = m.delta();
        let profile = GroupProfile::from_probs(&[0.2, 0.85, 0.5]).unwrap();
        let y: f64 = (0..3).map(|j| game.weights.get(j) * profile.p(j)).sum();
        for i in 0..3 {
            let alpha = game.weights.get(i);
            let closed =
                alpha * (profile.p(i) * delta + m.c - m.d) + (m.b - m.d) + delta * y;
            assert!((bracket(&game, &profile, i) - closed).abs() < 1e-12);
        }
    }

    #[test]
    fn bracket_single_group_prefers_restraint() {
        // A lone group internalizes every collision, so at the classical
        // mixed point 2/3 it still gains by moving off Hawk: the field term
        // vanishes there and only alpha * (q delta + c - d) = -2 remains.
        let game = GroupGame::new(
            PayoffMatrix2::hawk_dove(2.0, 3.0).unwrap(),
            GroupWeights::new(vec![1.0]).unwrap(),
        );
        let profile = GroupProfile::from_probs(&[2.0 / 3.0]).unwrap();
        assert!((bracket(&game, &profile, 0) - (-2.0)).abs() < 1e-12);
    }

    #[test]
    fn fully_mixed_hawk_dove_at_point_four() {
        let game = hd_game(0.4);
        let result = fully_mixed_gess(&game).expect("exists for alpha = 0.4");
        let probs = result.profile.probs();
        assert!((probs[0] - 4.0 / 9.0).abs() < 1e-12);
        assert!((probs[1] - 2.0 / 27.0).abs() < 1e-12);
        assert!((result.aggregate - 2.0 / 9.0).abs() < 1e-12);
        assert_eq!(result.kind, GessKind::FullyMixed);
        for b in &result.brackets {
            assert!(b.abs() < 1e-12, "all brackets vanish at the mixed point");
        }
    }

    #[test]
    fn fully_mixed_absent_outside_window() {
        assert!(fully_mixed_gess(&hd_game(0.3)).is_none());
        assert!(fully_mixed_gess(&hd_game(0.7)).is_none());
        assert!(fully_mixed_gess(&sh_game(0.4)).is_none(), "delta > 0");
        assert!(fully_mixed_gess(&pd_game(0.4)).is_none(), "delta = 0");
    }

    #[test]
    fn strong_profiles_hawk_dove_small_alpha() {
        let results = strong_gess_all(&hd_game(0.2), EQUALITY_TOL).unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].profile.probs(), vec![1.0, 0.0]);
        assert_eq!(results[0].kind, GessKind::Strong);

        assert!(strong_gess_all(&hd_game(0.3), EQUALITY_TOL).unwrap().is_empty());
    }

    #[test]
    fn strong_profile_boundary_tie_goes_weak() {
        // At alpha = 0.25 the first group's bracket is exactly zero; with
        // delta < 0 the profile survives as a weak equilibrium.
        let results = strong_gess_all(&hd_game(0.25), EQUALITY_TOL).unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].kind, GessKind::Weak);
        assert!(results[0].notes.iter().any(|n| n.contains("boundary")));

        // Same tie in Stag Hunt has delta > 0 and the profile is dropped.
        let sh = strong_gess_all(&sh_game(0.25), EQUALITY_TOL).unwrap();
        assert!(sh.iter().all(|r| r.profile.probs() != vec![1.0, 0.0]));
    }

    #[test]
    fn strong_profiles_stag_hunt_windows() {
        let results = strong_gess_all(&sh_game(0.3), EQUALITY_TOL).unwrap();
        let profiles: Vec<Vec<f64>> = results.iter().map(|r| r.profile.probs()).collect();
        assert_eq!(
            profiles,
            vec![vec![1.0, 1.0], vec![1.0, 0.0], vec![0.0, 0.0]],
            "sorted by support: both-first, split, both-second"
        );

        let small = strong_gess_all(&sh_game(0.1), EQUALITY_TOL).unwrap();
        assert_eq!(small.len(), 2, "split profile needs alpha > 1/4");
    }

    #[test]
    fn strong_profiles_prisoners_dilemma() {
        let big = strong_gess_all(&pd_game(0.7), EQUALITY_TOL).unwrap();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].profile.probs(), vec![1.0, 0.0]);
        assert!(
            big[0].notes.iter().any(|n| n.contains("closed-form screen")),
            "literal screen is known to disagree here"
        );

        let small = strong_gess_all(&pd_game(0.3), EQUALITY_TOL).unwrap();
        assert_eq!(small.len(), 1);
        assert_eq!(small[0].profile.probs(), vec![0.0, 1.0]);
    }

    #[test]
    fn degenerate_matrix_is_rejected() {
        let game = GroupGame::new(
            PayoffMatrix2::new(1.0, 1.0, 1.0, 1.0).unwrap(),
            GroupWeights::pair(0.4).unwrap(),
        );
        assert_eq!(strong_gess_all(&game, EQUALITY_TOL), Err(SolverError::DegenerateGame));
        assert_eq!(find_all_gess(&game, EQUALITY_TOL), Err(SolverError::DegenerateGame));
    }

    #[test]
    fn mixed_support_hawk_dove_window() {
        use SupportLabel::{Mixer, PureA, PureB};

        // alpha = 0.3 sits inside (1/4, 1/3): the first group mixes at
        // (1 - alpha) / (3 alpha) = 7/9 while the second stays passive.
        let found = mixed_support_solve(&hd_game(0.3), &[Mixer, PureB], EQUALITY_TOL)
            .unwrap()
            .expect("present for alpha = 0.3");
        let probs = found.profile.probs();
        assert!((probs[0] - 7.0 / 9.0).abs() < 1e-12);
        assert_eq!(probs[1], 0.0);
        assert_eq!(found.kind, GessKind::Weak);

        // Below the window the mixer would have to leave [0, 1]...
        assert!(mixed_support_solve(&hd_game(0.2), &[Mixer, PureB], EQUALITY_TOL)
            .unwrap()
            .is_none());
        // ...and above it the passive group's bracket turns positive.
        assert!(mixed_support_solve(&hd_game(0.4), &[Mixer, PureB], EQUALITY_TOL)
            .unwrap()
            .is_none());

        // The mirrored support solves to a negative mix for every alpha.
        for alpha in [0.1, 0.2, 0.3, 0.45] {
            assert!(mixed_support_solve(&hd_game(alpha), &[PureA, Mixer], EQUALITY_TOL)
                .unwrap()
                .is_none());
        }

        // Positive delta forbids mixers outright.
        assert!(mixed_support_solve(&sh_game(0.3), &[Mixer, PureA], EQUALITY_TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn find_all_hawk_dove_regimes() {
        // One equilibrium in each weight regime, of the expected kind.
        let strong = find_all_gess(&hd_game(0.2), EQUALITY_TOL).unwrap();
        assert_eq!(strong.len(), 1);
        assert_eq!(strong[0].kind, GessKind::Strong);
        assert_eq!(strong[0].profile.probs(), vec![1.0, 0.0]);

        let weak = find_all_gess(&hd_game(0.3), EQUALITY_TOL).unwrap();
        assert_eq!(weak.len(), 1);
        assert_eq!(weak[0].kind, GessKind::Weak);
        assert!((weak[0].profile.probs()[0] - 7.0 / 9.0).abs() < 1e-12);

        let mixed = find_all_gess(&hd_game(0.4), EQUALITY_TOL).unwrap();
        assert_eq!(mixed.len(), 1);
        assert_eq!(mixed[0].kind, GessKind::FullyMixed);
    }

    #[test]
    fn find_all_stag_hunt_and_dilemma() {
        let sh = find_all_gess(&sh_game(0.1), EQUALITY_TOL).unwrap();
        let profiles: Vec<Vec<f64>> = sh.iter().map(|r| r.profile.probs()).collect();
        assert_eq!(profiles, vec![vec![1.0, 1.0], vec![0.0, 0.0]]);

        let pd = find_all_gess(&pd_game(0.3), EQUALITY_TOL).unwrap();
        assert_eq!(pd.len(), 1);
        assert_eq!(pd[0].profile.probs(), vec![0.0, 1.0]);
    }

    #[test]
    fn find_all_three_uniform_stag_hunt() {
        // With three equal groups the split profiles where exactly one group
        // hunts stag also hold: the lone stag group still earns its bracket
        // 1/3 > 0 and each hare group sits at -1/3 < 0.
        let game = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::new(vec![1.0 / 3.0; 3]).unwrap(),
        );
        let results = find_all_gess(&game, EQUALITY_TOL).unwrap();
        let profiles: Vec<Vec<f64>> = results.iter().map(|r| r.profile.probs()).collect();
        assert_eq!(
            profiles,
            vec![
                vec![1.0, 1.0, 1.0],
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 0.0, 0.0],
            ]
        );
        assert!(results.iter().all(|r| r.kind == GessKind::Strong));
    }

    #[test]
    fn group_count_limit_is_enforced() {
        let n = MAX_GROUPS + 1;
        let game = GroupGame::new(
            PayoffMatrix2::hawk_dove(2.0, 3.0).unwrap(),
            GroupWeights::new(vec![1.0 / n as f64; n]).unwrap(),
        );
        assert!(matches!(
            find_all_gess(&game, EQUALITY_TOL),
            Err(SolverError::TooManyGroups { .. })
        ));
    }

    #[test]
    fn results_are_ordered_and_deduplicated() {
        let game = sh_game(0.3);
        let results = find_all_gess(&game, EQUALITY_TOL).unwrap();
        for pair in results.windows(2) {
            assert_ne!(
                support_order(&pair[0], &pair[1]),
                std::cmp::Ordering::Greater
            );
            assert!(max_norm_distance(&pair[0], &pair[1]) > EQUALITY_TOL * 10.0);
        }
    }
}

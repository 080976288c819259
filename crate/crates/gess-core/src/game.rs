//! Core model: a symmetric two-action game played across N groups that each
//! share a common utility.
//!
//! Individuals are matched pairwise and play a 2x2 payoff matrix. Every
//! member of group `i` plays the same mixed strategy `q_i`, and the group's
//! utility is the weighted average payoff of its members against the whole
//! population, including the group's own interactions with itself:
//!
//! ```text
//! U_i(q) = sum_j alpha_j * J(q_i, q_j)
//! ```
//!
//! where `J(p, q)` is the expected pairwise payoff of a `p`-player against a
//! `q`-player and `alpha_j` is the population share of group `j`.

use thiserror::Error;

use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum GameError {
    #[error("strategy probability must lie in [0, 1] and be finite, got {0}")]
    StrategyOutOfRange(f64),
    #[error("payoff entries must be finite")]
    NonFinitePayoff,
    #[error("group weights must be strictly positive, got {0}")]
    NonPositiveWeight(f64),
    #[error("group weights must sum to 1 (sum deviates by {0:e})")]
    WeightSumOffOne(f64),
    #[error("at least one group is required")]
    NoGroups,
    #[error("profile has {profile} strategies but the game has {groups} groups")]
    ProfileSizeMismatch { profile: usize, groups: usize },
    #[error("mutation share must lie strictly in (0, 1), got {0}")]
    MutationShareOutOfRange(f64),
}

/// A mixed strategy over two actions, stored as the probability of the first
/// action.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedStrategy(f64);

impl MixedStrategy {
    pub fn new(p: f64) -> Result<Self, GameError> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(GameError::StrategyOutOfRange(p));
        }
        Ok(MixedStrategy(p))
    }

    /// Probability of the first action.
    pub fn p(self) -> f64 {
        self.0
    }
}

/// Payoff matrix of a symmetric two-action pairwise game.
///
/// Rows are the focal player's action, columns the opponent's:
///
/// ```text
///          opponent A   opponent B
/// play A       a            b
/// play B       c            d
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffMatrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl PayoffMatrix2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, GameError> {
        if ![a, b, c, d].iter().all(|x| x.is_finite()) {
            return Err(GameError::NonFinitePayoff);
        }
        Ok(PayoffMatrix2 { a, b, c, d })
    }

    /// The interaction term `a - b - c + d`.
    ///
    /// Its sign controls whether mixed equilibria can be stable: the invasion
    /// curvature [`omega`] equals `(p - q)^2 * delta`.
    pub fn delta(&self) -> f64 {
        self.a - self.b - self.c + self.d
    }

    /// Largest payoff magnitude, used to scale relative tolerances.
    pub fn scale(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }

    /// Hawk-Dove contest over a resource worth `v` with fight cost `c > v`:
    /// `[[(v-c)/2, v], [0, v/2]]` with the first action being Hawk.
    pub fn hawk_dove(v: f64, c: f64) -> Result<Self, GameError> {
        PayoffMatrix2::new((v - c) / 2.0, v, 0.0, v / 2.0)
    }

    /// Stag Hunt instance `[[2, 0], [1, 1]]`, first action hunting stag.
    pub fn stag_hunt() -> Self {
        PayoffMatrix2 { a: 2.0, b: 0.0, c: 1.0, d: 1.0 }
    }

    /// Prisoner's Dilemma instance `[[2, 0], [3, 1]]`, first action
    /// cooperating. Defection dominates: `c > a > d > b`.
    pub fn prisoners_dilemma() -> Self {
        PayoffMatrix2 { a: 2.0, b: 0.0, c: 3.0, d: 1.0 }
    }
}

/// Population shares of the groups. Strictly positive, sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupWeights(Vec<f64>);

impl GroupWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self, GameError> {
        if weights.is_empty() {
            return Err(GameError::NoGroups);
        }
        for &w in &weights {
            if !w.is_finite() || w <= 0.0 {
                return Err(GameError::NonPositiveWeight(w));
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > tol::WEIGHT_SUM_TOL {
            return Err(GameError::WeightSumOffOne(sum - 1.0));
        }
        Ok(GroupWeights(weights))
    }

    /// Two groups of shares `alpha` and `1 - alpha`.
    pub fn pair(alpha: f64) -> Result<Self, GameError> {
        GroupWeights::new(vec![alpha, 1.0 - alpha])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// A two-action pairwise game together with the group structure it is played
/// over.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupGame {
    pub payoff: PayoffMatrix2,
    pub weights: GroupWeights,
}

impl GroupGame {
    pub fn new(payoff: PayoffMatrix2, weights: GroupWeights) -> Self {
        GroupGame { payoff, weights }
    }

    pub fn n_groups(&self) -> usize {
        self.weights.len()
    }
}

/// One mixed strategy per group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupProfile(Vec<MixedStrategy>);

impl GroupProfile {
    pub fn new(strategies: Vec<MixedStrategy>) -> Result<Self, GameError> {
        if strategies.is_empty() {
            return Err(GameError::NoGroups);
        }
        Ok(GroupProfile(strategies))
    }

    /// Builds a profile from raw first-action probabilities.
    pub fn from_probs(probs: &[f64]) -> Result<Self, GameError> {
        let strategies = probs
            .iter()
            .map(|&p| MixedStrategy::new(p))
            .collect::<Result<Vec<_>, _>>()?;
        GroupProfile::new(strategies)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First-action probability of group `i`.
    pub fn p(&self, i: usize) -> f64 {
        self.0[i].p()
    }

    pub fn probs(&self) -> Vec<f64> {
        self.0.iter().map(|s| s.p()).collect()
    }
}

/// Expected payoff `J(p, q)` of a `p`-player matched against a `q`-player.
pub fn pairwise_payoff(m: &PayoffMatrix2, p: f64, q: f64) -> f64 {
    p * q * m.a + p * (1.0 - q) * m.b + (1.0 - p) * q * m.c + (1.0 - p) * (1.0 - q) * m.d
}

/// Utility of group `i` under `profile`: the weighted average pairwise payoff
/// of its members against every group, its own included.
///
/// # Panics
///
/// Panics if `i` is out of range or the profile length does not match the
/// game's group count.
pub fn group_utility(game: &GroupGame, profile: &GroupProfile, i: usize) -> f64 {
    assert_eq!(
        profile.len(),
        game.n_groups(),
        "profile/group count mismatch"
    );
    let qi = profile.p(i);
    let mut u = 0.0;
    for j in 0..game.n_groups() {
        u += game.weights.get(j) * pairwise_payoff(&game.payoff, qi, profile.p(j));
    }
    u
}

/// Invasion curvature `J(p,p) - J(p,q) - J(q,p) + J(q,q)`.
///
/// This is the second-order coefficient picked up when a share of a group
/// moves from `q` to `p`; for two actions it collapses to
/// `(p - q)^2 * delta`.
pub fn omega(m: &PayoffMatrix2, p: f64, q: f64) -> f64 {
    pairwise_payoff(m, p, p) - pairwise_payoff(m, p, q) - pairwise_payoff(m, q, p)
        + pairwise_payoff(m, q, q)
}

/// Utility of group `i` after a share `eps` of it switches to `mutant` while
/// every other group stays put.
///
/// The group then effectively plays the blend `eps * mutant + (1-eps) * q_i`,
/// and the blend meets itself in the group's internal interactions. Evaluated
/// directly from [`group_utility`] on the blended profile.
pub fn post_mutation_utility(
    game: &GroupGame,
    profile: &GroupProfile,
    i: usize,
    mutant: MixedStrategy,
    eps: f64,
) -> Result<f64, GameError> {
    if !eps.is_finite() || eps <= 0.0 || eps >= 1.0 {
        return Err(GameError::MutationShareOutOfRange(eps));
    }
    let blend = profile.p(i) + eps * (mutant.p() - profile.p(i));
    let mut probs = profile.probs();
    probs[i] = blend;
    let blended = GroupProfile::from_probs(&probs)?;
    Ok(group_utility(game, &blended, i))
}

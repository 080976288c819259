//! Equilibria of two-action games played between groups that pool payoffs.
//!
//! The population splits into a few groups; members of a group share one
//! utility, so a group "plays" a transmission-style mixed strategy and cares
//! about the matches its own members create with each other as well as with
//! outsiders. A profile of group strategies is stable when no vanishing
//! mutant share inside any single group can profit, which generalizes the
//! classical single-population stability notion and collapses back to it
//! when one group holds everyone.
//!
//! Layout:
//!
//! * [`game`]: payoff matrices, weights, profiles, utilities.
//! * [`ess`]: the classical single-population baseline.
//! * [`solver`]: closed-form equilibrium search by support enumeration.
//! * [`oracle`]: independent verification by simulated invasion and by
//!   first-order margins, plus exhaustive grid search.
//! * [`mac`]: a concrete application, groups of radios sharing a slotted
//!   channel.
//! * [`tol`]: the numeric tolerances used across the crate.

pub mod ess;
pub mod game;
pub mod mac;
pub mod oracle;
pub mod solver;
pub mod tol;

pub use ess::{ess_candidates_2x2, is_ess, is_nash_symmetric, EssReport};
pub use game::{
    group_utility, omega, pairwise_payoff, post_mutation_utility, GameError, GroupGame,
    GroupProfile, GroupWeights, MixedStrategy, PayoffMatrix2,
};
pub use mac::{
    inter_payoff, intra_payoff, mac_bracket, mac_find_gess, mac_fully_mixed,
    mac_group_throughput, mac_thresholds, mac_verify_conditions, standard_reference_strategy,
    success_probability, MacEquilibrium, MacError, MacKind, MacParams, MacThresholds,
};
pub use oracle::{
    grid_search_equilibria, strict_group_nash_check, verify_conditions, verify_gess_definition,
    GridCluster, InvasionGrid, Verdict, Witness,
};
pub use solver::{
    bracket, find_all_gess, fully_mixed_gess, mixed_support_solve, strong_gess_all, GessKind,
    GessResult, SolverError, SupportLabel, MAX_GROUPS,
};

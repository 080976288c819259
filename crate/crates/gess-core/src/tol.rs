//! Numerical tolerances used across the crate.
//!
//! Everything here is a deliberate, named constant so that the solver, the
//! verification oracle, and the test suites all agree on what "zero" means.
//! Callers can pass their own equality tolerance to the solver entry points;
//! these are the defaults and the fixed internal policies.

/// Default tolerance for bracket sign ties in the solver.
///
/// A bracket whose magnitude is at or below this is treated as an exact
/// equality: the profile sits on a boundary between support patterns and is
/// classified as weak rather than strong.
pub const EQUALITY_TOL: f64 = 1e-9;

/// Group weights must sum to one within this bound. Weights are validated,
/// never silently renormalized.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Relative tolerance of the verification oracle, scaled by the payoff
/// magnitude `max(|a|, |b|, |c|, |d|)`. Grid evaluation amplifies roundoff
/// roughly linearly in grid size, so this is looser than [`EQUALITY_TOL`].
pub const ORACLE_REL_TOL: f64 = 1e-7;

/// Two equilibrium profiles closer than `equality_tol * DEDUP_FACTOR` in the
/// max norm are considered the same solution found through different routes.
pub const DEDUP_FACTOR: f64 = 10.0;

/// Tolerance used by the classical single-population analysis, which works on
/// closed forms and needs no grid headroom.
pub const ESS_TOL: f64 = 1e-9;

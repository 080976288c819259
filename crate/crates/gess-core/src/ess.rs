//! Classical single-population analysis of the 2x2 game.
//!
//! This is the baseline the group-level results are compared against. All
//! verdicts are closed-form: for two actions the best-reply comparison only
//! needs `J(1,q)`, `J(0,q)` and `J(q,q)`, and stability against a tying
//! reply reduces to the sign of `delta`.

use crate::game::{pairwise_payoff, PayoffMatrix2};

/// Outcome of testing one candidate strategy.
///
/// `witness` is the deviation that broke a condition when a verdict is
/// negative. For a pure candidate that passes only through a payoff tie, it
/// holds the tying best reply instead, marking the equilibrium as non-strict.
#[derive(Debug, Clone, PartialEq)]
pub struct EssReport {
    pub candidate: f64,
    pub is_nash: bool,
    pub is_ess: bool,
    pub witness: Option<f64>,
}

/// Whether `q` is a symmetric Nash equilibrium: no pure reply beats `q`
/// against itself.
pub fn is_nash_symmetric(m: &PayoffMatrix2, q: f64, tol: f64) -> bool {
    let own = pairwise_payoff(m, q, q);
    let best = pairwise_payoff(m, 1.0, q).max(pairwise_payoff(m, 0.0, q));
    own >= best - tol
}

/// Full evolutionary stability test of `q`: Nash, plus every tying reply `p`
/// must do worse against itself than `q` does against it.
pub fn is_ess(m: &PayoffMatrix2, q: f64, tol: f64) -> EssReport {
    let j1 = pairwise_payoff(m, 1.0, q);
    let j0 = pairwise_payoff(m, 0.0, q);
    let own = pairwise_payoff(m, q, q);

    if own < j1.max(j0) - tol {
        let witness = if j1 > j0 { 1.0 } else { 0.0 };
        return EssReport { candidate: q, is_nash: false, is_ess: false, witness: Some(witness) };
    }

    let delta = m.delta();
    if q > 0.0 && q < 1.0 {
        // Interior Nash means indifference, so every strategy ties; stability
        // holds exactly when delta < 0.
        let far_reply = if q <= 0.5 { 1.0 } else { 0.0 };
        if delta < -tol {
            EssReport { candidate: q, is_nash: true, is_ess: true, witness: None }
        } else {
            EssReport { candidate: q, is_nash: true, is_ess: false, witness: Some(far_reply) }
        }
    } else {
        // Pure candidate. A strict best reply settles it; a tie falls back to
        // the stability condition against the other pure strategy.
        let other = 1.0 - q;
        let gap = own - pairwise_payoff(m, other, q);
        if gap > tol {
            EssReport { candidate: q, is_nash: true, is_ess: true, witness: None }
        } else if delta < -tol {
            EssReport { candidate: q, is_nash: true, is_ess: true, witness: Some(other) }
        } else {
            EssReport { candidate: q, is_nash: true, is_ess: false, witness: Some(other) }
        }
    }
}

/// Candidate equilibria of the 2x2 game: both pure strategies, plus the
/// indifference point `(d - b) / delta` when it lies strictly inside (0, 1).
pub fn ess_candidates_2x2(m: &PayoffMatrix2) -> Vec<f64> {
    let mut out = vec![0.0];
    let delta = m.delta();
    if delta != 0.0 {
        let interior = (m.d - m.b) / delta;
        if interior > 0.0 && interior < 1.0 {
            out.push(interior);
        }
    }
    out.push(1.0);
    out
}

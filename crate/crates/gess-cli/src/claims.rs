//! Audit of reference claims the solver does not reproduce.
//!
//! Several widely circulated statements about these example games disagree
//! with what the sign conditions actually admit. Reports list each such claim
//! next to the computed result so the difference is explicit rather than
//! silently patched over.

use gess_core::MacThresholds;

use crate::config::GameKind;

pub fn claims_audit(kind: GameKind, thresholds: Option<&MacThresholds>) -> Vec<String> {
    match kind {
        GameKind::HawkDove => vec![
            "reference claim: a weak equilibrium with support (H, q_2) exists at small \
             weights; computed result: the group-2 indifference equation has no root in \
             (0, 1) at any weight, and the weak family is (q_1, D) instead"
                .into(),
            "reference claim: the weak-equilibrium window ends at 0.37; computed result: \
             the (q_1, D) family exists exactly on (0.25, 1/3), so the upper boundary is \
             0.333333"
                .into(),
        ],
        GameKind::PrisonersDilemma => vec![
            "reference claim: (C, C) is an equilibrium at every weight split; computed \
             result: the lighter group gains by defecting, and at the even split the tied \
             response lacks negative curvature; not reproduced"
                .into(),
            "reference claim: (D, D) is an equilibrium at every weight split; computed \
             result: the heavier group gains by cooperating, and at the even split the \
             tied response lacks negative curvature; not reproduced"
                .into(),
        ],
        GameKind::MacAloha => {
            let t = thresholds.expect("access-game audits need thresholds");
            vec![format!(
                "reference accounts of the all-mixing window's upper boundary disagree: a \
                 quoted closed form gives {:.6}, a quoted numeric value gives 0.3, and the \
                 bound consistent with the closed-form solution is {:.6}; the solver gates \
                 on the consistent bound",
                t.gamma_lower_reference, t.gamma_lower_exact,
            )]
        }
        GameKind::StagHunt | GameKind::Generic2x2 => Vec::new(),
    }
}

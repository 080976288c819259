//! Independent verification of claimed equilibria.
//!
//! The solver works through sign conditions on a per-group scalar. Everything
//! here deliberately avoids that shortcut and goes back to utilities: inject a
//! mutant share into one group, recompute the group's utility from scratch,
//! and watch whether the mutation pays. The two layers agreeing is the main
//! correctness argument of the crate, so this module must not share formulas
//! with the solver beyond the utility definition itself.
//!
//! Two checks are offered:
//!
//! * [`verify_gess_definition`] plays out actual invasions over a grid of
//!   mutant strategies and mutation shares.
//! * [`verify_conditions`] evaluates the first-order response
//!   `F_i(p) = alpha_i * omega(p, q_i) - U_i(p, rest) + U_i(q)` pointwise and,
//!   where it vanishes, falls back to the curvature requirement.
//!
//! Both report a [`Verdict`] whose `worst_violation` is the smallest margin
//! seen; negative beyond tolerance means the profile fails.

use std::collections::{BTreeMap, BTreeSet};

use crate::game::{
    group_utility, omega, pairwise_payoff, post_mutation_utility, GroupGame, GroupProfile,
    MixedStrategy,
};
use crate::solver::SolverError;
use crate::tol;

/// Mutant strategies and mutation shares probed by the oracles.
#[derive(Debug, Clone)]
pub struct InvasionGrid {
    /// Mutation shares, ascending. Small values probe the first-order
    /// behaviour; larger ones catch effects the expansion misses.
    pub eps: Vec<f64>,
    /// Spacing of the mutant strategy grid over [0, 1].
    pub resolution: f64,
}

impl Default for InvasionGrid {
    fn default() -> Self {
        // 20 shares spread geometrically over [1e-4, 0.2].
        let lo: f64 = 1e-4;
        let hi: f64 = 0.2;
        let ratio = (hi / lo).powf(1.0 / 19.0);
        let eps = (0..20).map(|k| lo * ratio.powi(k)).collect();
        InvasionGrid { eps, resolution: 0.01 }
    }
}

impl InvasionGrid {
    /// Mutant strategies probed: multiples of `resolution` across [0, 1].
    pub fn mutants(&self) -> Vec<f64> {
        let k = steps(self.resolution);
        (0..=k).map(|i| i as f64 / k as f64).collect()
    }
}

fn steps(resolution: f64) -> usize {
    assert!(
        resolution.is_finite() && resolution > 0.0 && resolution <= 0.5,
        "grid resolution must lie in (0, 0.5]"
    );
    ((1.0 / resolution).round() as usize).max(2)
}

/// The single worst deviation found by a check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub group: usize,
    pub mutant: f64,
    /// Mutation share at the worst margin; zero for first-order checks.
    pub eps: f64,
}

/// Outcome of a verification pass.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub passed: bool,
    /// Smallest margin encountered; values below the tolerance band are
    /// violations and flip `passed`.
    pub worst_violation: f64,
    pub witness: Option<Witness>,
}

fn utility_with_mutant(game: &GroupGame, profile: &GroupProfile, i: usize, p: f64) -> f64 {
    let mut probs = profile.probs();
    probs[i] = p;
    let moved = GroupProfile::from_probs(&probs).expect("mutant strategy out of range");
    group_utility(game, &moved, i)
}

/// Checks the defining property directly: no group may profit from any
/// mutant share on the grid.
///
/// For each group, each mutant strategy and each share `eps`, the margin is
/// `U_i(q) - U_i(after mutation)`. A deviation counts as an invasion when its
/// margin goes below tolerance before ever clearing it: a dip that happens
/// only after the margin has already been clearly positive is the expected
/// large-share behaviour of a merely first-order-stable profile, not a way
/// for a vanishing mutation to gain a foothold.
pub fn verify_gess_definition(game: &GroupGame, profile: &GroupProfile, grid: &InvasionGrid) -> Verdict {
    let tol = tol::ORACLE_REL_TOL * game.payoff.scale();
    let half_step = grid.resolution / 2.0;
    let mutants = grid.mutants();

    let mut worst = f64::INFINITY;
    let mut witness = None;
    for i in 0..game.n_groups() {
        let qi = profile.p(i);
        let base = group_utility(game, profile, i);
        for &p in &mutants {
            if (p - qi).abs() < half_step {
                continue;
            }
            let mutant = MixedStrategy::new(p).unwrap();
            let mut score = f64::INFINITY;
            let mut eps_at = grid.eps[0];
            for &eps in &grid.eps {
                let margin = base - post_mutation_utility(game, profile, i, mutant, eps).unwrap();
                if margin < score {
                    score = margin;
                    eps_at = eps;
                }
                if margin > tol {
                    break;
                }
            }
            if score < worst {
                worst = score;
                witness = Some(Witness { group: i, mutant: p, eps: eps_at });
            }
        }
    }
    if !worst.is_finite() {
        worst = 0.0;
    }
    Verdict { passed: worst > -tol, worst_violation: worst, witness }
}

/// Checks the first-order characterization on a mutant grid.
///
/// Groups whose response `F_i` stays inside the tolerance band across every
/// mutant are treated as binding an equality; for them stability must come
/// from strictly negative curvature `omega(p, q_i) < 0`, and a nonnegative
/// curvature is reported as a violation. All other groups simply need
/// `F_i >= 0` up to tolerance.
pub fn verify_conditions(game: &GroupGame, profile: &GroupProfile, grid: &InvasionGrid) -> Verdict {
    let slack = tol::ORACLE_REL_TOL * game.payoff.scale();
    verify_conditions_with_slack(game, profile, grid, slack)
}

pub(crate) fn verify_conditions_with_slack(
    game: &GroupGame,
    profile: &GroupProfile,
    grid: &InvasionGrid,
    slack: f64,
) -> Verdict {
    let half_step = grid.resolution / 2.0;
    let mutants = grid.mutants();

    let mut worst = f64::INFINITY;
    let mut witness = None;
    let update = |margin: f64, i: usize, p: f64, worst: &mut f64, witness: &mut Option<Witness>| {
        if margin < *worst {
            *worst = margin;
            *witness = Some(Witness { group: i, mutant: p, eps: 0.0 });
        }
    };

    for i in 0..game.n_groups() {
        let qi = profile.p(i);
        let alpha = game.weights.get(i);
        let base = group_utility(game, profile, i);

        let probed: Vec<(f64, f64)> = mutants
            .iter()
            .filter(|&&p| (p - qi).abs() >= half_step)
            .map(|&p| {
                let f = alpha * omega(&game.payoff, p, qi) - utility_with_mutant(game, profile, i, p)
                    + base;
                (p, f)
            })
            .collect();

        let max_abs = probed.iter().map(|&(_, f)| f.abs()).fold(0.0, f64::max);
        if max_abs <= slack {
            // The response vanishes everywhere it could, so this group binds
            // an equality and stability rests on curvature alone.
            for &(p, _) in &probed {
                let om = omega(&game.payoff, p, qi);
                let margin = if om < 0.0 { -om } else { -(om + 2.0 * slack) };
                update(margin, i, p, &mut worst, &mut witness);
            }
        } else {
            for &(p, f) in &probed {
                update(f, i, p, &mut worst, &mut witness);
            }
        }
    }
    if !worst.is_finite() {
        worst = 0.0;
    }
    Verdict { passed: worst > -slack, worst_violation: worst, witness }
}

/// True when every group strictly prefers its equilibrium strategy to any
/// wholesale switch, holding the other groups fixed.
///
/// This is a different solution concept from invasion resistance: moving the
/// whole group shifts the opponent pool too, so neither property implies the
/// other in general.
pub fn strict_group_nash_check(game: &GroupGame, profile: &GroupProfile, resolution: f64) -> bool {
    let tol = tol::ORACLE_REL_TOL * game.payoff.scale();
    let half_step = resolution / 2.0;
    let k = steps(resolution);
    let mutants: Vec<f64> = (0..=k).map(|i| i as f64 / k as f64).collect();
    for i in 0..game.n_groups() {
        let qi = profile.p(i);
        let base = group_utility(game, profile, i);
        for &p in &mutants {
            if (p - qi).abs() < half_step {
                continue;
            }
            if base - utility_with_mutant(game, profile, i, p) <= tol {
                return false;
            }
        }
    }
    true
}

/// A connected set of accepted grid points, summarized by its best member.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCluster {
    /// Member with the largest acceptance margin (ties broken toward the
    /// lexicographically smallest profile).
    pub representative: GroupProfile,
    /// Acceptance margin of the representative: for a group held at a bound,
    /// the rate at which deviations lose; for a mixer-like group, the unused
    /// width of the vanishing band. Positive clears the test comfortably.
    pub margin: f64,
    /// Number of grid points in the cluster.
    pub size: usize,
}

/// Maximum group count for exhaustive grid search; the scan is
/// `(1/resolution + 1)^N` profiles with an inner loop of the same width.
pub const MAX_GRID_GROUPS: usize = 3;

/// Zoom applied when rescanning a coarse cluster's bounding box.
const REFINE_FACTOR: usize = 10;

/// Scans every profile on a uniform grid, clusters the points that pass a
/// first-order acceptance test, then rescans each cluster's bounding box at
/// [`REFINE_FACTOR`] times finer resolution to pin the cluster down.
///
/// The per-group test normalizes the first-order gain of each deviation by
/// its distance, so it measures a response rate rather than a raw gain;
/// otherwise a profile pinned close to a bound could sneak through on small
/// deviations alone. A group passes when no deviation direction gains at a
/// rate beyond the acceptance band. A group whose response rate vanishes
/// within the band is mixer-like and must show negative curvature when its
/// strategy is interior; at 0 or 1 it is kept as is, because the band cannot
/// tell a tie from a strictly favourable rate too small to resolve, and the
/// finer pass settles most such cases.
///
/// The band is `|delta| * resolution + rel_tol * scale`: wide enough that
/// the grid neighbours of any true equilibrium are kept, tight enough that
/// accepted points stay near one. When a group carries little weight its
/// rates respond slowly along its own axis, so the band's footprint can
/// stretch across many grid steps; the refinement pass shrinks the footprint
/// tenfold and drops coarse clusters whose members all fail the tighter
/// band.
///
/// Fails on degenerate matrices (`a = c`, `b = d`), where the acceptance test
/// carries no information, and on more than [`MAX_GRID_GROUPS`] groups.
pub fn grid_search_equilibria(
    game: &GroupGame,
    resolution: f64,
) -> Result<Vec<GridCluster>, SolverError> {
    let n = game.n_groups();
    if n > MAX_GRID_GROUPS {
        return Err(SolverError::TooManyGroups { n, max: MAX_GRID_GROUPS });
    }
    let m = &game.payoff;
    if m.a == m.c && m.b == m.d {
        return Err(SolverError::DegenerateGame);
    }
    let k = steps(resolution);
    let slack = m.delta().abs() * resolution + tol::ORACLE_REL_TOL * m.scale();
    let full_lo = vec![0usize; n];
    let full_hi = vec![k; n];
    let coarse_mutants: Vec<usize> = (0..=k).collect();
    let coarse = scan_lattice(game, k, &full_lo, &full_hi, &coarse_mutants, slack);

    let kf = k * REFINE_FACTOR;
    let fine_slack = m.delta().abs() / kf as f64 + tol::ORACLE_REL_TOL * m.scale();
    let fine_mutants: Vec<usize> = (0..=k).map(|i| i * REFINE_FACTOR).collect();

    let mut clusters = Vec::new();
    for members in connected_components(&coarse, k) {
        // Bounding box padded by one coarse step, in fine lattice units.
        let mut lo = vec![usize::MAX; n];
        let mut hi = vec![0usize; n];
        for point in &members {
            for i in 0..n {
                lo[i] = lo[i].min(point[i].saturating_sub(1) * REFINE_FACTOR);
                hi[i] = hi[i].max((point[i] + 1).min(k) * REFINE_FACTOR);
            }
        }
        let fine = scan_lattice(game, kf, &lo, &hi, &fine_mutants, fine_slack);
        for fine_members in connected_components(&fine, kf) {
            clusters.push(summarize(&fine, &fine_members, kf));
        }
    }

    // Padded boxes of nearby coarse clusters can overlap and resurface the
    // same fine cluster; keep the better copy of any pair within one coarse
    // step of each other.
    dedup_within(&mut clusters, resolution);
    Ok(clusters)
}

/// First-order acceptance test over every lattice profile inside an
/// axis-aligned box, against a fixed set of mutant strategies given as
/// indices on the same lattice.
fn scan_lattice(
    game: &GroupGame,
    k: usize,
    lo: &[usize],
    hi: &[usize],
    mutants: &[usize],
    slack: f64,
) -> BTreeMap<Vec<usize>, f64> {
    let n = game.n_groups();
    let m = &game.payoff;
    let w: Vec<f64> = (0..n).map(|i| game.weights.get(i)).collect();
    let q = |x: usize| x as f64 / k as f64;

    // Pairwise payoffs between lattice values and mutants, both ways; the
    // profile loop below is table lookups and weighted sums.
    let cand_vs_mut: Vec<Vec<f64>> = (0..=k)
        .map(|x| mutants.iter().map(|&p| pairwise_payoff(m, q(x), q(p))).collect())
        .collect();
    let mut_vs_cand: Vec<Vec<f64>> = mutants
        .iter()
        .map(|&p| (0..=k).map(|x| pairwise_payoff(m, q(p), q(x))).collect())
        .collect();
    let diag: Vec<f64> = (0..=k).map(|x| pairwise_payoff(m, q(x), q(x))).collect();

    let mut accepted = BTreeMap::new();
    let mut coords = lo.to_vec();
    // Weighted opponent sums per mutant: v[mi] = sum_j w_j * J(p_mi, q_j).
    let mut v = vec![0.0f64; mutants.len()];

    'profiles: loop {
        for (mi, slot) in v.iter_mut().enumerate() {
            *slot = (0..n).map(|j| w[j] * mut_vs_cand[mi][coords[j]]).sum();
        }

        // For a mutant p of group i the first-order gain is
        //   F_i(p) = w_i * (J(q_i, q_i) - J(q_i, p)) + sum_j w_j J(q_i, q_j) - v[p]
        // after expanding utilities through the shared weighted sums;
        // dividing by the deviation distance turns it into a rate.
        let mut margin = f64::INFINITY;
        let mut ok = true;
        'groups: for i in 0..n {
            let ki = coords[i];
            let u: f64 = (0..n)
                .map(|j| w[j] * pairwise_payoff(m, q(ki), q(coords[j])))
                .sum();
            let mut min_rate = f64::INFINITY;
            let mut max_abs_rate = 0.0f64;
            for (mi, &kp) in mutants.iter().enumerate() {
                if kp == ki {
                    continue;
                }
                let dist = (kp as f64 - ki as f64).abs() / k as f64;
                let rate = (w[i] * (diag[ki] - cand_vs_mut[ki][mi]) + u - v[mi]) / dist;
                if rate < -slack {
                    ok = false;
                    break 'groups;
                }
                min_rate = min_rate.min(rate);
                max_abs_rate = max_abs_rate.max(rate.abs());
            }
            let group_margin = if max_abs_rate > slack {
                min_rate
            } else if ki == 0 || ki == k {
                // A vanishing rate at a bound is either a tie or a strictly
                // favourable response too small to resolve; one-sided
                // deviations cannot flip it, so the point stands.
                slack - max_abs_rate
            } else {
                // The rate vanishes at an interior strategy; the point is
                // mixer-like and needs negative curvature per unit distance.
                let mut bad_curvature: Option<f64> = None;
                for (mi, &kp) in mutants.iter().enumerate() {
                    if kp == ki {
                        continue;
                    }
                    let dist = (kp as f64 - ki as f64).abs() / k as f64;
                    let om = diag[kp] - mut_vs_cand[mi][ki] - cand_vs_mut[ki][mi] + diag[ki];
                    let om_rate = om / (dist * dist);
                    if om_rate >= 0.0 {
                        bad_curvature =
                            Some(bad_curvature.map_or(om_rate, |b: f64| b.max(om_rate)));
                    }
                }
                match bad_curvature {
                    Some(om) => -(om + 2.0 * slack),
                    None => slack - max_abs_rate,
                }
            };
            if group_margin < -slack {
                ok = false;
                break 'groups;
            }
            margin = margin.min(group_margin);
        }
        if ok {
            accepted.insert(coords.clone(), margin);
        }

        // Advance the odometer inside the box.
        let mut pos = 0;
        loop {
            if pos == n {
                break 'profiles;
            }
            coords[pos] += 1;
            if coords[pos] <= hi[pos] {
                break;
            }
            coords[pos] = lo[pos];
            pos += 1;
        }
    }

    accepted
}

/// Flood-fills Chebyshev-adjacent accepted points; components come back in
/// order of their lexicographically smallest member.
fn connected_components(
    accepted: &BTreeMap<Vec<usize>, f64>,
    k: usize,
) -> Vec<Vec<Vec<usize>>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut components = Vec::new();
    for start in accepted.keys() {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start.clone());
        let mut queue = vec![start.clone()];
        let mut members = Vec::new();
        while let Some(point) = queue.pop() {
            for neighbor in chebyshev_neighbors(&point, k) {
                if accepted.contains_key(&neighbor) && !seen.contains(&neighbor) {
                    seen.insert(neighbor.clone());
                    queue.push(neighbor);
                }
            }
            members.push(point);
        }
        components.push(members);
    }
    components
}

fn summarize(
    accepted: &BTreeMap<Vec<usize>, f64>,
    members: &[Vec<usize>],
    k: usize,
) -> GridCluster {
    let mut best: Option<(&Vec<usize>, f64)> = None;
    for point in members {
        let margin = accepted[point];
        let better = match &best {
            None => true,
            Some((bp, bm)) => margin > *bm || (margin == *bm && point < *bp),
        };
        if better {
            best = Some((point, margin));
        }
    }
    let (coords, margin) = best.expect("cluster has at least one member");
    let probs: Vec<f64> = coords.iter().map(|&c| c as f64 / k as f64).collect();
    GridCluster {
        representative: GroupProfile::from_probs(&probs).unwrap(),
        margin,
        size: members.len(),
    }
}

/// Sorts clusters by representative and collapses any pair within `radius`
/// (max-norm) of each other, keeping the larger margin.
fn dedup_within(clusters: &mut Vec<GridCluster>, radius: f64) {
    let by_profile = |a: &GridCluster, b: &GridCluster| {
        let pa = a.representative.probs();
        let pb = b.representative.probs();
        pa.iter()
            .zip(pb.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| *o != std::cmp::Ordering::Equal)
            .unwrap_or(std::cmp::Ordering::Equal)
    };
    clusters.sort_by(by_profile);
    let mut kept: Vec<GridCluster> = Vec::new();
    for cluster in clusters.drain(..) {
        let close = kept.iter_mut().find(|e| {
            e.representative
                .probs()
                .iter()
                .zip(cluster.representative.probs().iter())
                .all(|(x, y)| (x - y).abs() <= radius + 1e-12)
        });
        match close {
            Some(existing) if cluster.margin > existing.margin => *existing = cluster,
            Some(_) => {}
            None => kept.push(cluster),
        }
    }
    kept.sort_by(by_profile);
    *clusters = kept;
}

fn chebyshev_neighbors(point: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = point.len();
    let mut out = Vec::new();
    let mut offsets = vec![-1i32; n];
    loop {
        if offsets.iter().any(|&o| o != 0) {
            let mut neighbor = Vec::with_capacity(n);
            let mut valid = true;
            for (c, &o) in point.iter().zip(offsets.iter()) {
                let moved = *c as i64 + o as i64;
                if moved < 0 || moved > k as i64 {
                    valid = false;
                    break;
                }
                neighbor.push(moved as usize);
            }
            if valid {
                out.push(neighbor);
            }
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            offsets[pos] += 1;
            if offsets[pos] <= 1 {
                break;
            }
            offsets[pos] = -1;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GroupGame, GroupWeights, PayoffMatrix2};

    fn hd_game(alpha: f64) -> GroupGame {
        GroupGame::new(
            PayoffMatrix2::hawk_dove(2.0, 3.0).unwrap(),
            GroupWeights::pair(alpha).unwrap(),
        )
    }

    fn profile(probs: &[f64]) -> GroupProfile {
        GroupProfile::from_probs(probs).unwrap()
    }

    #[test]
    fn default_grid_shape() {
        let grid = InvasionGrid::default();
        assert_eq!(grid.eps.len(), 20);
        assert!(grid.eps.windows(2).all(|w| w[0] < w[1]));
        assert!((grid.eps[0] - 1e-4).abs() < 1e-12);
        assert!((grid.eps[19] - 0.2).abs() < 1e-12);
        assert_eq!(grid.mutants().len(), 101);
    }

    #[test]
    fn definition_check_accepts_known_equilibria() {
        let grid = InvasionGrid::default();

        let strong = verify_gess_definition(&hd_game(0.2), &profile(&[1.0, 0.0]), &grid);
        assert!(strong.passed);
        assert!(strong.worst_violation > 0.0, "strict profile clears every margin");

        let mixed = verify_gess_definition(
            &hd_game(0.4),
            &profile(&[4.0 / 9.0, 2.0 / 27.0]),
            &grid,
        );
        assert!(mixed.passed, "worst = {:?}", mixed);
    }

    #[test]
    fn definition_check_rejects_invadable_profiles() {
        let grid = InvasionGrid::default();

        let both_aggressive = verify_gess_definition(&hd_game(0.2), &profile(&[1.0, 1.0]), &grid);
        assert!(!both_aggressive.passed);
        let w = both_aggressive.witness.unwrap();
        assert!(w.mutant < 1.0, "invader backs off the aggressive action");

        let pd = GroupGame::new(
            PayoffMatrix2::prisoners_dilemma(),
            GroupWeights::pair(0.3).unwrap(),
        );
        assert!(!verify_gess_definition(&pd, &profile(&[1.0, 1.0]), &grid).passed);
        assert!(verify_gess_definition(&pd, &profile(&[0.0, 1.0]), &grid).passed);
    }

    #[test]
    fn conditions_check_margins_scale_with_resolution() {
        // At (1, 0) with alpha = 0.2 the per-group responses are 0.2 and -0.1;
        // the nearest probed mutant sits one step away, so the smallest margin
        // is 0.1 * 0.01.
        let grid = InvasionGrid::default();
        let verdict = verify_conditions(&hd_game(0.2), &profile(&[1.0, 0.0]), &grid);
        assert!(verdict.passed);
        assert!((verdict.worst_violation - 1e-3).abs() < 1e-9);
        assert_eq!(verdict.witness.unwrap().group, 1);
    }

    #[test]
    fn conditions_check_handles_binding_groups() {
        let grid = InvasionGrid::default();

        let mixed = verify_conditions(&hd_game(0.4), &profile(&[4.0 / 9.0, 2.0 / 27.0]), &grid);
        assert!(mixed.passed);
        assert!(mixed.worst_violation > 0.0, "curvature margin stays positive");

        // A binding group without negative curvature must fail: two identical
        // coordination groups at the interior tie have zero response but
        // positive curvature.
        let sh = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::pair(0.5).unwrap(),
        );
        let tie = verify_conditions(&sh, &profile(&[0.5, 0.5]), &grid);
        assert!(!tie.passed);
    }

    #[test]
    fn conditions_and_definition_agree_on_rejection() {
        let grid = InvasionGrid::default();
        let game = hd_game(0.3);
        for probs in [[1.0, 0.0], [0.0, 0.0], [1.0, 1.0], [0.3, 0.3]] {
            let d = verify_gess_definition(&game, &profile(&probs), &grid);
            let c = verify_conditions(&game, &profile(&probs), &grid);
            assert_eq!(d.passed, c.passed, "profile {:?}", probs);
        }
    }

    #[test]
    fn group_nash_differs_from_invasion_resistance() {
        // Strict dominance case: the split profile is both.
        let pd = GroupGame::new(
            PayoffMatrix2::prisoners_dilemma(),
            GroupWeights::pair(0.7).unwrap(),
        );
        assert!(strict_group_nash_check(&pd, &profile(&[1.0, 0.0]), 0.01));

        // Coordination case: (1, 0) resists invasions, yet the first group
        // would happily switch wholesale once the second plays the safe action.
        let sh = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::pair(0.3).unwrap(),
        );
        let grid = InvasionGrid::default();
        assert!(verify_gess_definition(&sh, &profile(&[1.0, 0.0]), &grid).passed);
        assert!(!strict_group_nash_check(&sh, &profile(&[1.0, 0.0]), 0.01));
    }

    #[test]
    fn grid_search_finds_single_equilibria() {
        let clusters = grid_search_equilibria(&hd_game(0.2), 0.01).unwrap();
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].representative.probs(), vec![1.0, 0.0]);

        let mixed = grid_search_equilibria(&hd_game(0.4), 0.01).unwrap();
        assert_eq!(mixed.len(), 1);
        let rep = mixed[0].representative.probs();
        assert!((rep[0] - 4.0 / 9.0).abs() <= 0.02);
        assert!((rep[1] - 2.0 / 27.0).abs() <= 0.02);
    }

    #[test]
    fn grid_search_finds_coordination_multiplicity() {
        let sh = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::pair(0.3).unwrap(),
        );
        let clusters = grid_search_equilibria(&sh, 0.01).unwrap();
        let reps: Vec<Vec<f64>> = clusters.iter().map(|c| c.representative.probs()).collect();
        assert_eq!(
            reps,
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]],
            "sorted by profile"
        );
    }

    #[test]
    fn grid_search_three_uniform_groups() {
        let game = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::new(vec![1.0 / 3.0; 3]).unwrap(),
        );
        let clusters = grid_search_equilibria(&game, 0.05).unwrap();
        let reps: Vec<Vec<f64>> = clusters.iter().map(|c| c.representative.probs()).collect();
        assert_eq!(
            reps,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 1.0, 0.0],
                vec![1.0, 0.0, 0.0],
                vec![1.0, 1.0, 1.0],
            ],
            "all five coordination splits survive with equal weights"
        );
    }

    #[test]
    fn grid_search_rejects_unsupported_inputs() {
        let degenerate = GroupGame::new(
            PayoffMatrix2::new(1.0, 1.0, 1.0, 1.0).unwrap(),
            GroupWeights::pair(0.4).unwrap(),
        );
        assert_eq!(
            grid_search_equilibria(&degenerate, 0.1),
            Err(SolverError::DegenerateGame)
        );

        let four = GroupGame::new(
            PayoffMatrix2::stag_hunt(),
            GroupWeights::new(vec![0.25; 4]).unwrap(),
        );
        assert!(matches!(
            grid_search_equilibria(&four, 0.1),
            Err(SolverError::TooManyGroups { .. })
        ));
    }

    #[test]
    fn cluster_merging_counts_neighbors() {
        // Hawk-Dove near the weak-regime boundary keeps a short segment of
        // grid points; they must merge into one cluster rather than surface
        // as separate equilibria.
        let clusters = grid_search_equilibria(&hd_game(0.3), 0.01).unwrap();
        assert_eq!(clusters.len(), 1);
        assert!(clusters[0].size >= 1);
        let rep = clusters[0].representative.probs();
        assert!((rep[0] - 7.0 / 9.0).abs() <= 0.02);
        assert!(rep[1] <= 0.01);
    }
}

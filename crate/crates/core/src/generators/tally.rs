//! Counter-strip reduction instances.
//!
//! One strip per cyclic unary acceptor. Each state is represented by a
//! pixel on a looped conveyor that the round `RDLU` advances by exactly one
//! station, and the fixed suffix `LDRDLD` routes every accepting
//! representative into a shared goal column while non-accepting
//! representatives fall into closed two-cell traps. Occupancy and covering
//! variants reuse the same layout.
//!
//! Layout of one strip (top corridor level `t`, stations `k = 1..=2m` from
//! east to west at `x = -6(k-1)`):
//!
//! - per station a five-cell corridor row; the representative sits two
//!   cells east of the west end (or on the west end itself for accepting
//!   stations whose arrival leg runs at depth `t-2`);
//! - transfer legs alternate between depths `t-2` and `t-4`, each with a
//!   drop column at its east end and a rise column at its west end;
//! - non-accepting stations hang a trap column off the corridor's west
//!   end: slides entering it oscillate between its closed ends;
//! - accepting stations hang an exit column reaching a private depth,
//!   followed by a one-cell jog east and a private row running west into
//!   the shared goal column; depths are staggered so exit plumbing of
//!   different stations never collides;
//! - a wrap drop, a floor row, and a return riser connect the westmost
//!   station back to the row-zero representative `p0`.

use std::collections::HashSet;

use crate::automata::{tally_intersection_smallest, TallyAutomaton};
use crate::dynamics::{apply, singleton_apply, singleton_move, Direction, Model, Semantics, Word};
use crate::geometry::{classify, Config, Pixel, Polyomino};

use super::kit::{shift, GridBuilder};
use super::GeneratorError;

/// Cap on the rounds simulated by the acceptance-packing self-check.
const PACKING_CHECK_CAP: u64 = 1_500;
/// Cap on the rounds simulated when verifying covering instances.
const COVER_CHECK_CAP: u64 = 256;
/// Cap on trap-closure sizes; the closed orbits have two cells.
const TRAP_CLOSURE_CAP: usize = 64;

fn px(x: i32, y: i32) -> Pixel {
    Pixel { x, y }
}

/// A conveyor-strip instance built by [`gen_tally`].
#[derive(Debug, Clone)]
pub struct TallyInstance {
    pub polyomino: Polyomino,
    /// One particle per strip, on the representative of each initial state.
    pub initial: Config,
    /// `representatives[i][j]` stands for state `j` of automaton `i`.
    pub representatives: Vec<Vec<Pixel>>,
    /// Union of all accepting-state representatives.
    pub accepting: Config,
    /// The shared goal column, listed bottom to top; both ends have degree 1.
    pub goal: Vec<Pixel>,
    /// Bottom of the goal column, where gathering completes.
    pub goal_bottom: Pixel,
    pub automata: Vec<TallyAutomaton>,
    pub as_maze: bool,
}

impl TallyInstance {
    /// The four-move round advancing every strip by one station.
    pub fn advance_cycle() -> Word {
        "RDLU".parse().expect("fixed word")
    }

    /// The fixed suffix gathering accepting representatives at the goal
    /// bottom.
    pub fn collect_suffix() -> Word {
        "LDRDLD".parse().expect("fixed word")
    }
}

/// Covering variant built from the same strips; see [`gen_tiltcover`].
#[derive(Debug, Clone)]
pub struct TiltCoverInstance {
    pub polyomino: Polyomino,
    /// Complement of the strip instance's start configuration.
    pub initial: Config,
    /// Everything except the accepting representatives must be covered.
    pub target: Config,
    /// The deterministic four-move cycle driving the covering question.
    pub cycle: Word,
    /// The underlying strip instance.
    pub tally: TallyInstance,
}

/// Occupancy variant with an extended goal column; see
/// [`gen_occupancy_variant`].
#[derive(Debug, Clone)]
pub struct OccupancyInstance {
    pub polyomino: Polyomino,
    pub initial: Config,
    /// The k-th goal pixel from the top; occupiable exactly when all k
    /// particles can be packed into the goal column.
    pub probe: Pixel,
    /// The k topmost goal pixels.
    pub goal_config: Config,
    /// The timing/interaction model the instance is built for.
    pub semantics: Semantics,
    /// The underlying strip instance.
    pub tally: TallyInstance,
}

// ===========================================================================
// Layout
// ===========================================================================

/// Per-strip geometry plan. All coordinates are absolute; the builder
/// normalizes at the end.
struct StripPlan {
    /// Corridor level of this strip.
    t: i32,
    /// Number of looped stations (cycle length minus one; always even).
    stations: usize,
    /// `accepting[k]` for stations `1..=stations`; index 0 is `p0`.
    accepting: Vec<bool>,
    /// West-to-east rank (1-based) among accepting stations, or 0.
    acc_rank: Vec<usize>,
    /// Floor level of the wrap row.
    floor: i32,
}

impl StripPlan {
    fn new(t: i32, a: &TallyAutomaton) -> StripPlan {
        let stations = a.cycle_length() - 1;
        let mut accepting = vec![false; stations + 1];
        for &j in a.accepting_indices() {
            accepting[j] = true;
        }
        // Westmost accepting station (largest k) gets rank 1: exit depths
        // grow toward the east so western exit rows pass under eastern
        // exit columns without touching them.
        let mut acc_rank = vec![0usize; stations + 1];
        let mut rank = 0;
        for k in (1..=stations).rev() {
            if accepting[k] {
                rank += 1;
                acc_rank[k] = rank;
            }
        }
        let depth = 11.max(4 * rank as i32 + 7);
        StripPlan {
            t,
            stations,
            accepting,
            acc_rank,
            floor: t - depth,
        }
    }

    fn x_station(k: usize) -> i32 {
        -6 * (k as i32 - 1)
    }

    fn x_end(&self) -> i32 {
        StripPlan::x_station(self.stations)
    }

    fn x_west(&self) -> i32 {
        self.x_end() - 2
    }

    /// Depth of the transfer leg leaving station `k` (for `k < stations`).
    fn leg_depth(&self, k: usize) -> i32 {
        if k % 2 == 1 {
            self.t - 2
        } else {
            self.t - 4
        }
    }

    /// Exit-column bottom for accepting station `k`.
    fn exit_catch(&self, k: usize) -> i32 {
        self.t - 1 - 4 * self.acc_rank[k] as i32
    }

    /// Private exit-row level for accepting station `k`.
    fn exit_run(&self, k: usize) -> i32 {
        self.exit_catch(k) - 2
    }

    /// Whether station `k` puts its representative on the corridor's west
    /// end: accepting stations whose arrival leg runs at depth `t-2`
    /// (even `k`) are entered through their exit column instead of a
    /// dedicated rise.
    fn west_rep(&self, k: usize) -> bool {
        k >= 2 && self.accepting[k] && self.leg_depth(k - 1) == self.t - 2
    }

    /// Deepest private exit level, or the corridor level when the strip
    /// has no accepting station (impossible for valid acceptors).
    fn deepest_exit(&self) -> i32 {
        (1..=self.stations)
            .filter(|&k| self.accepting[k])
            .map(|k| self.exit_run(k))
            .min()
            .unwrap_or(self.t)
    }

    fn lay(&self, g: &mut GridBuilder, x_goal: i32) -> Vec<Pixel> {
        let t = self.t;
        let n = self.stations;
        let b = self.floor;
        let mut reps = vec![px(0, 0); n + 1];
        reps[0] = px(self.x_west(), b);

        for k in 1..=n {
            let xk = StripPlan::x_station(k);
            g.row(xk, xk + 4, t);
            reps[k] = if self.west_rep(k) {
                px(xk, t)
            } else {
                px(xk + 2, t)
            };
            if self.accepting[k] {
                let catch = self.exit_catch(k);
                let run = self.exit_run(k);
                g.column(xk, catch, t - 1);
                // Station 1 sits against the full-height return riser two
                // cells east of its bay, so its jog bridges across the
                // riser and descends one column further east.
                let stub_x = if k == 1 { xk + 3 } else { xk + 1 };
                if k == 1 {
                    g.row(xk + 1, xk + 3, catch);
                }
                g.column(stub_x, run, catch);
                g.row(x_goal, stub_x, run);
            } else {
                // Trap column: a pocket below and a cap above the corridor
                // junction. Stations over a depth `t-4` leg keep the pocket
                // right below the corridor so the air beside it stays open;
                // the others sink it below both leg levels.
                let shallow = k < n && self.leg_depth(k) == t - 4;
                let pocket = if shallow { t - 2 } else { t - 5 };
                g.column(xk, pocket, t + 1);
            }
        }

        // Transfer legs with their drop (east) and rise (west) columns.
        for k in 1..n {
            let xk = StripPlan::x_station(k);
            let xn = StripPlan::x_station(k + 1);
            let d = self.leg_depth(k);
            let west = if self.west_rep(k + 1) { xn } else { xn + 2 };
            g.row(west, xk + 4, d);
            g.column(xk + 4, d, t);
            if !self.west_rep(k + 1) {
                g.column(xn + 2, d, t);
            }
        }

        // Wrap: drop at the west end, floor row east, return leg, riser
        // back up to station 1.
        g.column(self.x_end() + 4, b, t);
        g.row(self.x_west(), 6, b);
        g.row(2, 6, b - 1);
        g.column(2, b - 1, t);
        reps
    }
}

fn build_tally(
    automata: &[TallyAutomaton],
    top_extension: usize,
    as_maze: bool,
) -> Result<TallyInstance, GeneratorError> {
    if automata.is_empty() {
        return Err(GeneratorError::InvalidTallyShape(
            "at least one cyclic acceptor is required".into(),
        ));
    }
    let mut plans = Vec::with_capacity(automata.len());
    let mut t = 0i32;
    for a in automata {
        let plan = StripPlan::new(t, a);
        t = plan.floor - 3;
        plans.push(plan);
    }
    let x_goal = plans.iter().map(|p| p.x_end()).min().unwrap() - 6;
    let y_goal_top = plans[0].t - 7 + top_extension as i32;
    let y_goal_bottom = plans.last().unwrap().deepest_exit() - 1;

    let mut g = GridBuilder::new();
    let mut reps_raw = Vec::with_capacity(plans.len());
    for plan in &plans {
        reps_raw.push(plan.lay(&mut g, x_goal));
    }
    g.column(x_goal, y_goal_bottom, y_goal_top);
    g.fill_enclosed_cavities();

    let (poly, off) = g.build_normalized()?;
    let representatives: Vec<Vec<Pixel>> = reps_raw
        .iter()
        .map(|v| v.iter().map(|&q| shift(q, off)).collect())
        .collect();
    let goal: Vec<Pixel> = (y_goal_bottom..=y_goal_top)
        .map(|y| shift(px(x_goal, y), off))
        .collect();
    let goal_bottom = goal[0];
    let initial: Config = automata
        .iter()
        .zip(&representatives)
        .map(|(a, reps)| reps[a.initial_index()])
        .collect();
    let accepting: Config = automata
        .iter()
        .zip(&representatives)
        .flat_map(|(a, reps)| a.accepting_indices().iter().map(|&j| reps[j]))
        .collect();

    let inst = TallyInstance {
        polyomino: poly,
        initial,
        representatives,
        accepting,
        goal,
        goal_bottom,
        automata: automata.to_vec(),
        as_maze,
    };
    verify_tally(&inst)?;
    Ok(inst)
}

// ===========================================================================
// Self-verification
// ===========================================================================

fn degree(p: &Polyomino, q: Pixel) -> usize {
    [(0, 1), (0, -1), (1, 0), (-1, 0)]
        .iter()
        .filter(|(dx, dy)| p.contains(px(q.x + dx, q.y + dy)))
        .count()
}

/// All pixels reachable from `start` under arbitrary full-tilt moves.
fn ft_closure(p: &Polyomino, start: Pixel, cap: usize) -> Result<HashSet<Pixel>, GeneratorError> {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(q) = stack.pop() {
        for d in [
            Direction::U,
            Direction::D,
            Direction::L,
            Direction::R,
        ] {
            let r = singleton_move(p, q, d, Model::FullTilt)?;
            if seen.insert(r) {
                stack.push(r);
            }
        }
        if seen.len() > cap {
            return Err(GeneratorError::verify(
                "trap-closure",
                format!("closure from {start:?} exceeds {cap} pixels"),
            ));
        }
    }
    Ok(seen)
}

fn verify_tally(inst: &TallyInstance) -> Result<(), GeneratorError> {
    let p = &inst.polyomino;
    let cycle = TallyInstance::advance_cycle();
    let suffix = TallyInstance::collect_suffix();
    let goal_set: HashSet<Pixel> = inst.goal.iter().copied().collect();
    let rep_set: HashSet<Pixel> = inst
        .representatives
        .iter()
        .flat_map(|v| v.iter().copied())
        .collect();

    // (a) every representative advances one station per round.
    for (i, (a, reps)) in inst
        .automata
        .iter()
        .zip(&inst.representatives)
        .enumerate()
    {
        let rho = a.cycle_length();
        for j in 0..rho {
            let got = singleton_apply(p, reps[j], &cycle, Model::FullTilt)?;
            let want = reps[(j + 1) % rho];
            if got != want {
                return Err(GeneratorError::verify(
                    "advance-cycle",
                    format!(
                        "strip {i} state {j}: round moved {:?} to {got:?}, expected {want:?}",
                        reps[j]
                    ),
                ));
            }
        }
    }

    // (b) the suffix routes accepting representatives to the goal bottom,
    // one by one and as a whole set.
    for (i, (a, reps)) in inst
        .automata
        .iter()
        .zip(&inst.representatives)
        .enumerate()
    {
        for &j in a.accepting_indices() {
            let got = singleton_apply(p, reps[j], &suffix, Model::FullTilt)?;
            if got != inst.goal_bottom {
                return Err(GeneratorError::verify(
                    "collect-suffix",
                    format!("strip {i} accepting state {j} ends at {got:?}"),
                ));
            }
        }
    }
    let gathered = apply(p, &inst.accepting, &suffix, Semantics::FULL_TILT_MERGING)?;
    if gathered.len() != 1 || !gathered.contains(inst.goal_bottom) {
        return Err(GeneratorError::verify(
            "collect-suffix",
            format!("accepting set ends at {gathered:?}"),
        ));
    }

    // (c) leaving the conveyor at a non-accepting station is irreversible:
    // a west move followed by either vertical move enters a closed orbit
    // that touches neither representatives nor the goal area. The row-zero
    // representative has no trap column (its west and vertical moves are
    // no-ops), so it is checked by endpoint instead.
    for (i, (a, reps)) in inst
        .automata
        .iter()
        .zip(&inst.representatives)
        .enumerate()
    {
        let rho = a.cycle_length();
        let accepting: HashSet<usize> = a.accepting_indices().iter().copied().collect();
        for j in 1..rho {
            if accepting.contains(&j) {
                continue;
            }
            let west = singleton_move(p, reps[j], Direction::L, Model::FullTilt)?;
            for v in [Direction::U, Direction::D] {
                let start = singleton_move(p, west, v, Model::FullTilt)?;
                let closure = ft_closure(p, start, TRAP_CLOSURE_CAP)?;
                if closure.iter().any(|q| rep_set.contains(q) || goal_set.contains(q)) {
                    return Err(GeneratorError::verify(
                        "reject-trap",
                        format!("strip {i} state {j}: deviation via {v:?} escapes"),
                    ));
                }
            }
        }
        let stray = singleton_apply(p, reps[0], &suffix, Model::FullTilt)?;
        if rep_set.contains(&stray) || goal_set.contains(&stray) {
            return Err(GeneratorError::verify(
                "reject-trap",
                format!("strip {i} state 0: suffix endpoint {stray:?} escapes"),
            ));
        }
    }

    // (d) acceptance packing: after any number of rounds the configuration
    // sits inside the accepting representatives exactly when every
    // acceptor accepts that round count.
    let mut bound: u64 = 3;
    for a in &inst.automata {
        bound = bound.saturating_mul(a.cycle_length() as u64);
    }
    let bound = bound.min(PACKING_CHECK_CAP);
    let mut cur = inst.initial.clone();
    for l in 0..=bound {
        let all_accept = inst.automata.iter().all(|a| a.accepts_length(l));
        let packed = cur.is_subset_of(&inst.accepting);
        if all_accept != packed {
            return Err(GeneratorError::verify(
                "accept-packing",
                format!("round {l}: joint acceptance {all_accept} but packing {packed}"),
            ));
        }
        cur = apply(p, &cur, &cycle, Semantics::FULL_TILT_MERGING)?;
    }

    // Goal column ends must be dead ends.
    for end in [inst.goal_bottom, *inst.goal.last().unwrap()] {
        if degree(p, end) != 1 {
            return Err(GeneratorError::verify(
                "goal-dead-ends",
                format!("goal end {end:?} has degree {}", degree(p, end)),
            ));
        }
    }

    let report = classify(p);
    if !report.simple {
        return Err(GeneratorError::verify(
            "simple-shape",
            format!("classification reports {} holes", report.hole_count),
        ));
    }
    if inst.as_maze && !report.maze {
        // The strips rely on corridor pockets that are filled in, which
        // produces 2x2 blocks; no decoration of this family is thin, so a
        // maze request cannot be honored.
        return Err(GeneratorError::verify(
            "maze-form",
            "strip corridors require filled pockets incompatible with thinness".to_string(),
        ));
    }
    Ok(())
}

// ===========================================================================
// Public generators
// ===========================================================================

/// Builds the counter-strip polyomino for a family of cyclic unary
/// acceptors, with one conveyor strip per acceptor and a shared goal
/// column.
///
/// The returned instance has been verified by simulation: representatives
/// advance one station per `RDLU` round, `LDRDLD` gathers every subset of
/// accepting representatives at the goal bottom, deviations at
/// non-accepting stations trap, and the shape is simple.
///
/// # Errors
///
/// [`GeneratorError::InvalidTallyShape`] for an empty family,
/// [`GeneratorError::VerificationFailed`] if a built shape violates its
/// contract (including `maze = true`, which this family cannot honor).
pub fn gen_tally(
    automata: &[TallyAutomaton],
    maze: bool,
) -> Result<TallyInstance, GeneratorError> {
    build_tally(automata, 1, maze)
}

/// Wraps [`gen_tally`] into a covering instance: the complement of the
/// start configuration must cover the complement of the accepting
/// representatives under repetitions of the fixed cycle `LURD`.
///
/// Verified by simulation in both the full-tilt and single-step blocking
/// models: covering after `l` rounds coincides with joint acceptance of
/// `l` for every `l` up to the smallest jointly accepted length (or a
/// fixed cap when the intersection is empty).
pub fn gen_tiltcover(
    automata: &[TallyAutomaton],
    maze: bool,
) -> Result<TiltCoverInstance, GeneratorError> {
    let tally = build_tally(automata, 1, maze)?;
    let p = tally.polyomino.clone();
    let initial: Config = p
        .pixels()
        .iter()
        .copied()
        .filter(|q| !tally.initial.contains(*q))
        .collect();
    let target: Config = p
        .pixels()
        .iter()
        .copied()
        .filter(|q| !tally.accepting.contains(*q))
        .collect();
    let cycle: Word = "LURD".parse().expect("fixed word");

    let smallest = tally_intersection_smallest(&tally.automata, COVER_CHECK_CAP);
    let rounds = smallest.unwrap_or(48).min(COVER_CHECK_CAP);
    for sem in [Semantics::FULL_TILT_BLOCKING, Semantics::SINGLE_STEP_BLOCKING] {
        let mut cur = initial.clone();
        for l in 0..=rounds {
            let covered = target.is_subset_of(&cur);
            let expect = tally.automata.iter().all(|a| a.accepts_length(l));
            if covered != expect {
                return Err(GeneratorError::verify(
                    "cover-duality",
                    format!("{sem:?}: after {l} rounds covered={covered}, acceptance={expect}"),
                ));
            }
            cur = apply(&p, &cur, &cycle, sem)?;
        }
    }
    Ok(TiltCoverInstance {
        polyomino: p,
        initial,
        target,
        cycle,
        tally,
    })
}

/// Builds the occupancy variant: the goal column is extended upward by
/// `k` pixels and the probe is the k-th goal pixel from the top, so that
/// under blocking semantics the probe can be occupied exactly when all
/// `k` particles reach the goal column and are packed upward.
///
/// # Errors
///
/// As [`gen_tally`]; additionally rejects `k = 0`.
pub fn gen_occupancy_variant(
    automata: &[TallyAutomaton],
    k: usize,
) -> Result<OccupancyInstance, GeneratorError> {
    if k == 0 {
        return Err(GeneratorError::InvalidTallyShape(
            "particle count k must be at least 1".into(),
        ));
    }
    let tally = build_tally(automata, k, false)?;
    let p = tally.polyomino.clone();
    let len = tally.goal.len();
    let probe = tally.goal[len - k];
    let goal_config: Config = tally.goal[len - k..].iter().copied().collect();
    let semantics = Semantics::FULL_TILT_BLOCKING;

    // Positive witness: with at least k particles and a jointly accepted
    // round count, advance, collect, and pack upward; the probe must then
    // be covered.
    if k <= automata.len() {
        if let Some(l) = tally_intersection_smallest(&tally.automata, COVER_CHECK_CAP) {
            let up: Word = "U".parse().expect("fixed word");
            let w = TallyInstance::advance_cycle()
                .repeated(l as usize)
                .concat(&TallyInstance::collect_suffix())
                .concat(&up);
            let end = apply(&p, &tally.initial, &w, semantics)?;
            if !end.contains(probe) || !goal_config.is_subset_of(&end) {
                return Err(GeneratorError::verify(
                    "probe-witness",
                    format!("packing after {l} rounds leaves {end:?}"),
                ));
            }
        }
    }
    Ok(OccupancyInstance {
        polyomino: p,
        initial: tally.initial.clone(),
        probe,
        goal_config,
        semantics,
        tally,
    })
}

// ===========================================================================
// Tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::tally_cycle;
    use crate::oracle;

    fn figure_pair() -> Vec<TallyAutomaton> {
        vec![
            tally_cycle(7, &[1, 3, 4], 3).unwrap(),
            tally_cycle(5, &[2, 3], 4).unwrap(),
        ]
    }

    #[test]
    fn figure_pair_gathers_after_eight_rounds() {
        let inst = gen_tally(&figure_pair(), false).unwrap();
        assert_eq!(
            tally_intersection_smallest(&inst.automata, 1_000),
            Some(8)
        );
        let w = TallyInstance::advance_cycle()
            .repeated(8)
            .concat(&TallyInstance::collect_suffix());
        let end = apply(
            &inst.polyomino,
            &inst.initial,
            &w,
            Semantics::FULL_TILT_MERGING,
        )
        .unwrap();
        assert_eq!(end.len(), 1);
        assert!(end.contains(inst.goal_bottom));
    }

    #[test]
    fn single_counter_gathers_after_one_round() {
        let a = tally_cycle(3, &[1], 0).unwrap();
        let inst = gen_tally(&[a], false).unwrap();
        let w = TallyInstance::advance_cycle()
            .repeated(1)
            .concat(&TallyInstance::collect_suffix());
        let end = apply(
            &inst.polyomino,
            &inst.initial,
            &w,
            Semantics::FULL_TILT_MERGING,
        )
        .unwrap();
        assert_eq!(end.len(), 1);
        assert!(end.contains(inst.goal_bottom));
    }

    #[test]
    fn empty_intersection_still_builds() {
        let pair = vec![
            tally_cycle(3, &[1], 0).unwrap(),
            tally_cycle(3, &[2], 0).unwrap(),
        ];
        assert_eq!(tally_intersection_smallest(&pair, 1_000), None);
        let inst = gen_tally(&pair, false).unwrap();
        assert_eq!(inst.initial.len(), 2);
    }

    #[test]
    fn maze_request_is_refused() {
        let a = tally_cycle(3, &[1], 0).unwrap();
        match gen_tally(&[a], true) {
            Err(GeneratorError::VerificationFailed { invariant, .. }) => {
                assert_eq!(invariant, "maze-form");
            }
            other => panic!("expected a named verification failure, got {other:?}"),
        }
    }

    #[test]
    fn tiltcover_pair_covers_at_eight_in_both_models() {
        let inst = gen_tiltcover(&figure_pair(), false).unwrap();
        for sem in [Semantics::FULL_TILT_BLOCKING, Semantics::SINGLE_STEP_BLOCKING] {
            let reps = oracle::tilt_cover_deterministic(
                &inst.polyomino,
                &inst.initial,
                &inst.target,
                &inst.cycle,
                sem,
                64,
            )
            .unwrap();
            assert_eq!(reps, Some(8), "cover repetitions under {sem:?}");
        }
    }

    #[test]
    fn tiltcover_empty_intersection_never_covers() {
        let pair = vec![
            tally_cycle(3, &[1], 0).unwrap(),
            tally_cycle(3, &[2], 0).unwrap(),
        ];
        let inst = gen_tiltcover(&pair, false).unwrap();
        let reps = oracle::tilt_cover_deterministic(
            &inst.polyomino,
            &inst.initial,
            &inst.target,
            &inst.cycle,
            Semantics::FULL_TILT_BLOCKING,
            64,
        )
        .unwrap();
        assert_eq!(reps, None);
    }

    #[test]
    fn occupancy_single_counter_probe_is_reachable() {
        let a = tally_cycle(3, &[1], 0).unwrap();
        let inst = gen_occupancy_variant(&[a], 1).unwrap();
        let hit = oracle::occupancy(
            &inst.polyomino,
            &inst.initial,
            inst.probe,
            inst.semantics,
            5_000_000,
        )
        .unwrap();
        assert!(hit);
    }

    #[test]
    fn occupancy_empty_intersection_probe_is_unreachable() {
        let pair = vec![
            tally_cycle(3, &[1], 0).unwrap(),
            tally_cycle(3, &[2], 0).unwrap(),
        ];
        let inst = gen_occupancy_variant(&pair, 2).unwrap();
        let hit = oracle::occupancy(
            &inst.polyomino,
            &inst.initial,
            inst.probe,
            inst.semantics,
            20_000_000,
        )
        .unwrap();
        assert!(!hit);
    }

    #[test]
    fn goal_ends_have_degree_one_and_shape_is_simple() {
        let inst = gen_tally(&figure_pair(), false).unwrap();
        let report = classify(&inst.polyomino);
        assert!(report.simple);
        assert_eq!(degree(&inst.polyomino, inst.goal_bottom), 1);
        assert_eq!(degree(&inst.polyomino, *inst.goal.last().unwrap()), 1);
    }
}

#[cfg(test)]
mod debug_tests {
    use super::*;
    use crate::automata::tally_cycle;

    #[test]
    #[ignore]
    fn dump_single_strip() {
        let a = tally_cycle(3, &[1], 0).unwrap();
        let plan = StripPlan::new(0, &a);
        let x_goal = plan.x_end() - 6;
        let mut g = GridBuilder::new();
        let reps = plan.lay(&mut g, x_goal);
        let y_bot = plan.deepest_exit() - 1;
        let y_top = plan.t - 7 + 1;
        g.column(x_goal, y_bot, y_top);
        let filled = g.fill_enclosed_cavities();
        eprintln!("reps: {reps:?}  goal=({x_goal},{y_bot})..({x_goal},{y_top})");
        eprintln!("filled: {filled:?}");
        let pixels: Vec<Pixel> = g.pixels().collect();
        let minx = pixels.iter().map(|p| p.x).min().unwrap();
        let maxx = pixels.iter().map(|p| p.x).max().unwrap();
        let miny = pixels.iter().map(|p| p.y).min().unwrap();
        let maxy = pixels.iter().map(|p| p.y).max().unwrap();
        for y in (miny..=maxy).rev() {
            let mut line = String::new();
            for x in minx..=maxx {
                let c = if reps.contains(&px(x, y)) {
                    'o'
                } else if g.contains(x, y) {
                    '#'
                } else {
                    '.'
                };
                line.push(c);
            }
            eprintln!("{y:4} {line}");
        }
        let poly = g.build_raw().unwrap();
        let suffix: Word = "LDRDLD".parse().unwrap();
        let mut q = reps[1];
        for d in suffix.iter() {
            let next = singleton_move(&poly, q, d, Model::FullTilt).unwrap();
            eprintln!("  {d:?}: {q:?} -> {next:?}");
            q = next;
        }
        panic!("debug dump");
    }
}

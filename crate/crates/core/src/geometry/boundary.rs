//! Boundary extraction and rasterization.
//!
//! The boundary of a polyomino is a set of closed loops of lattice sides:
//! one outer loop and one loop per hole. Every side is oriented with the
//! interior of the polyomino on its left, which makes the outer loop run
//! counterclockwise and hole loops clockwise. A loop is stored as its
//! ordered corner vertices, starting from the `(y, x)`-least corner;
//! consecutive corners differ in exactly one coordinate, and the corner
//! count of every loop is even and at least 4.
//!
//! Boundaries are the sparse representation of a polyomino: a shape with a
//! handful of corners but astronomically many pixels is still cheap to
//! store, slide on (see [`super::project`]) and analyze. [`materialize`]
//! converts back to an explicit pixel set under a budget.

use std::collections::HashMap;

use super::{GeometryError, Pixel, Polyomino};
use crate::dynamics::Direction;

/// One closed boundary loop, as ordered corner vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryLoop {
    /// Corner vertices in walk order (counterclockwise for the outer loop,
    /// clockwise for holes), starting at the `(y, x)`-least corner.
    pub corners: Vec<(i32, i32)>,
    /// True for the outer loop, false for hole loops.
    pub outer: bool,
}

/// The full boundary of a polyomino: outer loop first, then hole loops
/// ordered by their starting corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub loops: Vec<BoundaryLoop>,
}

impl BoundaryLoop {
    /// Walk direction from corner `i` to corner `i + 1` (cyclically).
    fn leg_direction(&self, i: usize) -> Direction {
        let a = self.corners[i];
        let b = self.corners[(i + 1) % self.corners.len()];
        direction_between(a, b)
    }

    /// Yields `(vertex, incoming, outgoing)` for every corner.
    pub fn turns(&self) -> impl Iterator<Item = ((i32, i32), Direction, Direction)> + '_ {
        let n = self.corners.len();
        (0..n).map(move |i| {
            let incoming = self.leg_direction((i + n - 1) % n);
            let outgoing = self.leg_direction(i);
            (self.corners[i], incoming, outgoing)
        })
    }

    /// Twice the signed area enclosed by the loop (positive when
    /// counterclockwise).
    pub fn signed_area2(&self) -> i64 {
        let n = self.corners.len();
        let mut s = 0i64;
        for i in 0..n {
            let (x0, y0) = self.corners[i];
            let (x1, y1) = self.corners[(i + 1) % n];
            s += x0 as i64 * y1 as i64 - x1 as i64 * y0 as i64;
        }
        s
    }
}

impl Boundary {
    pub fn outer(&self) -> &BoundaryLoop {
        &self.loops[0]
    }

    pub fn hole_loops(&self) -> &[BoundaryLoop] {
        &self.loops[1..]
    }

    /// Total corner count over all loops.
    pub fn corner_count(&self) -> usize {
        self.loops.iter().map(|l| l.corners.len()).sum()
    }
}

fn direction_between(a: (i32, i32), b: (i32, i32)) -> Direction {
    if b.0 > a.0 {
        Direction::R
    } else if b.0 < a.0 {
        Direction::L
    } else if b.1 > a.1 {
        Direction::U
    } else {
        Direction::D
    }
}

/// Preference of a turn from `incoming` to `outgoing`: right turn > straight
/// ahead > left turn.
///
/// At a point-contact vertex two passages meet. With the interior on the
/// left of every side, taking the rightmost turn keeps each passage hugging
/// the complement wedge on its right — and the two wedges at a pinch always
/// belong to different complement regions of a connected polyomino, so this
/// is exactly the choice that keeps distinct loops from being stitched into
/// one walk.
fn turn_rank(incoming: Direction, outgoing: Direction) -> u8 {
    if outgoing == incoming.turn_right() {
        2
    } else if outgoing == incoming {
        1
    } else {
        0
    }
}

/// Extracts the boundary loops of a polyomino.
///
/// Every pixel side with a missing neighbor contributes one directed side
/// with the interior on its left. Sides are stitched into loops; where two
/// passages touch at a point-contact vertex the walk always takes the
/// rightmost available turn, which keeps each passage on the boundary of
/// its own complement region.
pub fn extract_boundary(p: &Polyomino) -> Boundary {
    // Directed unit sides, keyed by start vertex. (dx, dy) is the walk step.
    #[derive(Clone, Copy)]
    struct Side {
        to: (i32, i32),
        dir: Direction,
        used: bool,
    }

    let mut by_start: HashMap<(i32, i32), Vec<Side>> = HashMap::new();
    let mut starts: Vec<(i32, i32)> = Vec::new();
    let mut add = |from: (i32, i32), to: (i32, i32), dir: Direction| {
        by_start.entry(from).or_default().push(Side {
            to,
            dir,
            used: false,
        });
    };

    for &q in p.pixels() {
        let (x, y) = (q.x, q.y);
        if !p.contains(q.step(Direction::D)) {
            add((x, y), (x + 1, y), Direction::R);
        }
        if !p.contains(q.step(Direction::R)) {
            add((x + 1, y), (x + 1, y + 1), Direction::U);
        }
        if !p.contains(q.step(Direction::U)) {
            add((x + 1, y + 1), (x, y + 1), Direction::L);
        }
        if !p.contains(q.step(Direction::L)) {
            add((x, y + 1), (x, y), Direction::D);
        }
    }
    for (&v, _) in by_start.iter() {
        starts.push(v);
    }
    // Deterministic processing order: (y, x) on vertices.
    starts.sort_by_key(|&(x, y)| (y, x));

    let mut loops: Vec<BoundaryLoop> = Vec::new();
    for &start in &starts {
        loop {
            // Pick the first unused side leaving `start`, in fixed direction
            // order, as a fresh loop seed.
            let seed = {
                let sides = by_start.get_mut(&start).unwrap();
                let mut pick: Option<usize> = None;
                for (i, s) in sides.iter().enumerate() {
                    if !s.used && pick.is_none_or(|j| sides[j].dir as usize > s.dir as usize) {
                        pick = Some(i);
                    }
                }
                match pick {
                    Some(i) => {
                        sides[i].used = true;
                        sides[i]
                    }
                    None => break,
                }
            };

            // Walk until back at the seed's start vertex with the loop
            // closed. Record direction changes as corners.
            let mut vertices: Vec<((i32, i32), Direction)> = vec![(start, seed.dir)];
            let mut at = seed.to;
            let mut dir = seed.dir;
            while at != start {
                let sides = by_start.get_mut(&at).unwrap();
                let mut pick: Option<usize> = None;
                for (i, s) in sides.iter().enumerate() {
                    if s.used {
                        continue;
                    }
                    if pick.is_none_or(|j| turn_rank(dir, sides[j].dir) < turn_rank(dir, s.dir)) {
                        pick = Some(i);
                    }
                }
                let i = pick.expect("boundary walk must continue until closed");
                sides[i].used = true;
                let s = sides[i];
                vertices.push((at, s.dir));
                at = s.to;
                dir = s.dir;
            }

            // Keep only vertices where the direction changes.
            let n = vertices.len();
            let mut corners: Vec<(i32, i32)> = Vec::new();
            for i in 0..n {
                let prev_dir = vertices[(i + n - 1) % n].1;
                if vertices[i].1 != prev_dir {
                    corners.push(vertices[i].0);
                }
            }
            debug_assert!(corners.len() >= 4 && corners.len() % 2 == 0);

            // Rotate to start at the (y, x)-least corner.
            let least = corners
                .iter()
                .enumerate()
                .min_by_key(|&(_, &(x, y))| (y, x))
                .map(|(i, _)| i)
                .unwrap();
            corners.rotate_left(least);

            let mut bl = BoundaryLoop {
                corners,
                outer: false,
            };
            bl.outer = bl.signed_area2() > 0;
            loops.push(bl);
        }
    }

    // Outer loop first, then holes by starting corner.
    loops.sort_by_key(|l| {
        let (x, y) = l.corners[0];
        (!l.outer, y, x)
    });
    debug_assert_eq!(loops.iter().filter(|l| l.outer).count(), 1);

    Boundary { loops }
}

/// Rasterizes a boundary back into an explicit pixel set.
///
/// Fails with [`GeometryError::BudgetExceeded`] carrying the would-be pixel
/// count when the enclosed area is larger than `budget`.
pub fn materialize(b: &Boundary, budget: u64) -> Result<Polyomino, GeometryError> {
    // Vertical sides as (x, y0, y1) with y0 < y1, from all loops.
    let mut vsides: Vec<(i32, i32, i32)> = Vec::new();
    let mut ymin = i32::MAX;
    let mut ymax = i32::MIN;
    for l in &b.loops {
        let n = l.corners.len();
        for i in 0..n {
            let (x0, y0) = l.corners[i];
            let (x1, y1) = l.corners[(i + 1) % n];
            if x0 == x1 {
                vsides.push((x0, y0.min(y1), y0.max(y1)));
                ymin = ymin.min(y0.min(y1));
                ymax = ymax.max(y0.max(y1));
            }
        }
    }
    vsides.sort_unstable();

    // Even-odd fill per row. First pass counts, second pass fills.
    let mut count: u64 = 0;
    let mut rows: Vec<(i32, Vec<i32>)> = Vec::new();
    for y in ymin..ymax {
        let mut xs: Vec<i32> = vsides
            .iter()
            .filter(|&&(_, y0, y1)| y0 <= y && y < y1)
            .map(|&(x, _, _)| x)
            .collect();
        xs.sort_unstable();
        debug_assert!(xs.len() % 2 == 0);
        for pair in xs.chunks(2) {
            count += (pair[1] - pair[0]) as u64;
        }
        rows.push((y, xs));
    }
    if count > budget {
        return Err(GeometryError::BudgetExceeded(count));
    }

    let mut pixels = Vec::with_capacity(count as usize);
    for (y, xs) in rows {
        for pair in xs.chunks(2) {
            for x in pair[0]..pair[1] {
                pixels.push(Pixel::new(x, y));
            }
        }
    }
    Polyomino::from_pixels(pixels)
}

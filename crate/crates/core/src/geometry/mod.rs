//! Pixel sets, segment structure and shape analysis.
//!
//! A [`Polyomino`] is a nonempty, edge-connected, finite set of unit cells
//! ("pixels") of the square lattice. The `x` axis points east and the `y` axis
//! points north, so "up" means increasing `y`. Pixels are ordered
//! lexicographically by `(y, x)` — south to north, then west to east — and
//! every iteration in the crate walks pixel sets in that order, which makes
//! all downstream algorithms deterministic without extra tie-break rules.
//!
//! Beyond membership, a polyomino precomputes its maximal horizontal and
//! vertical runs of pixels ([`Segment`]s) together with, for every pixel and
//! compass direction, the neighbor pixel (if present) and the slide
//! destination (the last pixel of the run in that direction). Those tables
//! are what the dynamics and automata layers run on.

mod boundary;
mod grid;
mod project;
mod significant;

pub use boundary::{extract_boundary, materialize, Boundary, BoundaryLoop};
pub use grid::parse_grid;
pub use project::{project, SideIndex};
pub use significant::{significant_pixels, verify_significant_pixels, SignificantPixels};

use std::collections::HashMap;
use std::fmt;

use crate::dynamics::Direction;

// ===========================================================================
// Pixels
// ===========================================================================

/// A unit cell of the square lattice, identified by the coordinates of its
/// south-west corner.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pixel {
    pub x: i32,
    pub y: i32,
}

impl Pixel {
    pub const fn new(x: i32, y: i32) -> Self {
        Pixel { x, y }
    }

    /// The adjacent pixel in the given compass direction (always defined on
    /// the infinite lattice; membership in a polyomino is a separate check).
    pub fn step(self, d: Direction) -> Pixel {
        let (dx, dy) = d.offset();
        Pixel::new(self.x + dx, self.y + dy)
    }
}

/// Pixels compare lexicographically by `(y, x)`: south before north, then
/// west before east.
impl Ord for Pixel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Pixel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Pixel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Pixel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// Convenience constructor used heavily in tests.
pub const fn px(x: i32, y: i32) -> Pixel {
    Pixel::new(x, y)
}

// ===========================================================================
// Configurations
// ===========================================================================

/// A set of occupied pixels, stored sorted in `(y, x)` order without
/// duplicates. A configuration on a polyomino is expected to be a subset of
/// its pixels; operations that require this validate it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Config(Vec<Pixel>);

impl Config {
    pub fn new(mut pixels: Vec<Pixel>) -> Self {
        pixels.sort();
        pixels.dedup();
        Config(pixels)
    }

    pub fn singleton(p: Pixel) -> Self {
        Config(vec![p])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: Pixel) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn pixels(&self) -> &[Pixel] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Pixel> + '_ {
        self.0.iter().copied()
    }

    /// True if every pixel of `self` is also in `other`.
    pub fn is_subset_of(&self, other: &Config) -> bool {
        self.iter().all(|p| other.contains(p))
    }
}

impl FromIterator<Pixel> for Config {
    fn from_iter<I: IntoIterator<Item = Pixel>>(iter: I) -> Self {
        Config::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

// ===========================================================================
// Segments
// ===========================================================================

/// Orientation of a maximal run of pixels.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    /// A run within one row (constant `y`).
    Horizontal,
    /// A run within one column (constant `x`).
    Vertical,
}

/// A maximal run of pixels in a row or column of a polyomino.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub axis: Axis,
    /// Member pixels ordered west to east (rows) or south to north (columns).
    pub pixels: Vec<Pixel>,
    /// Number of endpoints of the run that are corner pixels of the
    /// polyomino (0, 1 or 2; a one-pixel run counts its single pixel once).
    pub corner_endpoint_count: usize,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    /// First and last pixel of the run (equal for a one-pixel run).
    pub fn endpoints(&self) -> (Pixel, Pixel) {
        (self.pixels[0], *self.pixels.last().unwrap())
    }
}

// ===========================================================================
// Errors
// ===========================================================================

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("polyomino has no pixels")]
    EmptyPolyomino,
    #[error("pixel set is not edge-connected")]
    DisconnectedPolyomino,
    #[error("illegal character {ch:?} at row {row}, column {col}")]
    IllegalCharacter { ch: char, row: usize, col: usize },
    #[error("pixel {0} lies outside the polyomino")]
    PixelOutsidePolyomino(Pixel),
    #[error("materialization would produce {0} pixels, over budget")]
    BudgetExceeded(u64),
}

// ===========================================================================
// Polyomino
// ===========================================================================

/// Internal record of one maximal run: the pixel indices of its members in
/// axis order, plus the position of each member within the run.
#[derive(Clone, Debug)]
struct Run {
    members: Vec<u32>,
}

/// A nonempty edge-connected pixel set with precomputed segment structure.
///
/// Construction sorts pixels into `(y, x)` order, checks connectivity, and
/// builds for every pixel: its row and column run, its four neighbors, and
/// its four full-tilt slide destinations (the run endpoint in each
/// direction).
#[derive(Clone)]
pub struct Polyomino {
    pixels: Vec<Pixel>,
    index: HashMap<Pixel, u32>,
    row_run_of: Vec<u32>,
    col_run_of: Vec<u32>,
    row_runs: Vec<Run>,
    col_runs: Vec<Run>,
    /// `neighbor[d][i]`: index of pixel `i`'s neighbor toward direction `d`.
    neighbor: [Vec<Option<u32>>; 4],
    /// `slide[d][i]`: index of the endpoint of `i`'s run toward `d`.
    slide: [Vec<u32>; 4],
}

impl Polyomino {
    /// Builds a polyomino from an arbitrary collection of pixels.
    ///
    /// Duplicates are ignored. Fails if the set is empty or not
    /// edge-connected.
    pub fn from_pixels<I: IntoIterator<Item = Pixel>>(iter: I) -> Result<Self, GeometryError> {
        let mut pixels: Vec<Pixel> = iter.into_iter().collect();
        pixels.sort();
        pixels.dedup();
        if pixels.is_empty() {
            return Err(GeometryError::EmptyPolyomino);
        }

        let index: HashMap<Pixel, u32> = pixels
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as u32))
            .collect();

        // Edge-connectivity check by breadth-first search from pixel 0.
        let mut seen = vec![false; pixels.len()];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut reached = 1usize;
        while let Some(i) = queue.pop_front() {
            for d in Direction::ALL {
                let q = pixels[i as usize].step(d);
                if let Some(&j) = index.get(&q) {
                    if !seen[j as usize] {
                        seen[j as usize] = true;
                        reached += 1;
                        queue.push_back(j);
                    }
                }
            }
        }
        if reached != pixels.len() {
            return Err(GeometryError::DisconnectedPolyomino);
        }

        // Row runs: pixels sharing a row are consecutive in (y, x) order, so
        // runs are breaks in x-adjacency.
        let n = pixels.len();
        let mut row_run_of = vec![0u32; n];
        let mut row_runs: Vec<Run> = Vec::new();
        for i in 0..n {
            let fresh = i == 0
                || pixels[i].y != pixels[i - 1].y
                || pixels[i].x != pixels[i - 1].x + 1;
            if fresh {
                row_runs.push(Run { members: Vec::new() });
            }
            let r = row_runs.len() - 1;
            row_run_of[i] = r as u32;
            row_runs[r].members.push(i as u32);
        }

        // Column runs: sort indices by (x, y) and look for breaks in
        // y-adjacency.
        let mut by_col: Vec<u32> = (0..n as u32).collect();
        by_col.sort_by_key(|&i| (pixels[i as usize].x, pixels[i as usize].y));
        let mut col_run_of = vec![0u32; n];
        let mut col_runs: Vec<Run> = Vec::new();
        for (k, &i) in by_col.iter().enumerate() {
            let p = pixels[i as usize];
            let fresh = k == 0 || {
                let q = pixels[by_col[k - 1] as usize];
                p.x != q.x || p.y != q.y + 1
            };
            if fresh {
                col_runs.push(Run { members: Vec::new() });
            }
            let r = col_runs.len() - 1;
            col_run_of[i as usize] = r as u32;
            col_runs[r].members.push(i);
        }

        // Neighbor and slide tables.
        let mut neighbor: [Vec<Option<u32>>; 4] = Default::default();
        let mut slide: [Vec<u32>; 4] = Default::default();
        for d in Direction::ALL {
            let mut nb = Vec::with_capacity(n);
            let mut sl = Vec::with_capacity(n);
            for i in 0..n {
                let p = pixels[i];
                nb.push(index.get(&p.step(d)).copied());
                let run = match d {
                    Direction::L | Direction::R => &row_runs[row_run_of[i] as usize],
                    Direction::U | Direction::D => &col_runs[col_run_of[i] as usize],
                };
                // Runs are ordered toward increasing coordinate, so D and L
                // stop at the first member, U and R at the last.
                let end = match d {
                    Direction::D | Direction::L => run.members[0],
                    Direction::U | Direction::R => *run.members.last().unwrap(),
                };
                sl.push(end);
            }
            neighbor[d as usize] = nb;
            slide[d as usize] = sl;
        }

        Ok(Polyomino {
            pixels,
            index,
            row_run_of,
            col_run_of,
            row_runs,
            col_runs,
            neighbor,
            slide,
        })
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All pixels in `(y, x)` order.
    pub fn pixels(&self) -> &[Pixel] {
        &self.pixels
    }

    pub fn contains(&self, p: Pixel) -> bool {
        self.index.contains_key(&p)
    }

    pub fn pixel_index(&self, p: Pixel) -> Option<usize> {
        self.index.get(&p).map(|&i| i as usize)
    }

    /// The full configuration: every pixel occupied.
    pub fn full_config(&self) -> Config {
        Config::new(self.pixels.clone())
    }

    /// Neighbor of pixel index `i` toward `d`, if present.
    pub(crate) fn neighbor_idx(&self, i: usize, d: Direction) -> Option<u32> {
        self.neighbor[d as usize][i]
    }

    /// Slide destination (run endpoint) of pixel index `i` toward `d`.
    pub(crate) fn slide_idx(&self, i: usize, d: Direction) -> u32 {
        self.slide[d as usize][i]
    }

    pub(crate) fn pixel_at(&self, i: usize) -> Pixel {
        self.pixels[i]
    }

    /// Members (as indices, in axis order) of the run through pixel `i`
    /// along the axis of direction `d`.
    pub(crate) fn run_members(&self, i: usize, d: Direction) -> &[u32] {
        match d {
            Direction::L | Direction::R => &self.row_runs[self.row_run_of[i] as usize].members,
            Direction::U | Direction::D => &self.col_runs[self.col_run_of[i] as usize].members,
        }
    }

    /// Identifier of the run through pixel `i` along the axis of `d`,
    /// unique within that axis.
    pub(crate) fn run_id(&self, i: usize, d: Direction) -> u32 {
        match d {
            Direction::L | Direction::R => self.row_run_of[i],
            Direction::U | Direction::D => self.col_run_of[i],
        }
    }

    /// Member index lists of every run along the axis of `d`, each ordered
    /// toward increasing coordinate.
    pub(crate) fn runs_along(&self, d: Direction) -> impl Iterator<Item = &[u32]> + '_ {
        let runs = match d {
            Direction::L | Direction::R => &self.row_runs,
            Direction::U | Direction::D => &self.col_runs,
        };
        runs.iter().map(|r| r.members.as_slice())
    }

    /// True if `p` has two missing neighbor sides in perpendicular
    /// directions — the pixel sits in a convex corner of the shape.
    pub fn is_corner_pixel(&self, p: Pixel) -> bool {
        if !self.contains(p) {
            return false;
        }
        let miss = |d: Direction| !self.contains(p.step(d));
        (miss(Direction::U) || miss(Direction::D)) && (miss(Direction::L) || miss(Direction::R))
    }

    /// Number of present neighbors of `p` (its degree in the adjacency
    /// graph of the pixels).
    pub fn degree(&self, p: Pixel) -> usize {
        Direction::ALL
            .into_iter()
            .filter(|&d| self.contains(p.step(d)))
            .count()
    }

    /// Maximal horizontal runs, south to north then west to east.
    pub fn row_segments(&self) -> Vec<Segment> {
        self.row_runs
            .iter()
            .map(|r| self.run_to_segment(r, Axis::Horizontal))
            .collect()
    }

    /// Maximal vertical runs, west to east then south to north.
    pub fn column_segments(&self) -> Vec<Segment> {
        self.col_runs
            .iter()
            .map(|r| self.run_to_segment(r, Axis::Vertical))
            .collect()
    }

    fn run_to_segment(&self, run: &Run, axis: Axis) -> Segment {
        let pixels: Vec<Pixel> = run.members.iter().map(|&i| self.pixels[i as usize]).collect();
        let mut corner_endpoint_count = 0;
        let last = pixels.len() - 1;
        if self.is_corner_pixel(pixels[0]) {
            corner_endpoint_count += 1;
        }
        if last > 0 && self.is_corner_pixel(pixels[last]) {
            corner_endpoint_count += 1;
        }
        Segment {
            axis,
            pixels,
            corner_endpoint_count,
        }
    }

    /// Bounding box as `(min, max)` pixel corners (inclusive).
    pub fn bounding_box(&self) -> (Pixel, Pixel) {
        let mut min = self.pixels[0];
        let mut max = self.pixels[0];
        for &p in &self.pixels {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        (min, max)
    }

    /// A copy translated so the `(y, x)`-least pixel sits at the origin.
    pub fn normalized(&self) -> Polyomino {
        let first = self.pixels[0];
        let moved = self
            .pixels
            .iter()
            .map(|p| Pixel::new(p.x - first.x, p.y - first.y));
        Polyomino::from_pixels(moved).expect("translation preserves validity")
    }
}

impl fmt::Debug for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyomino({} pixels)", self.pixels.len())
    }
}

// The derived tables are functions of the pixel set, so pixel equality is
// polyomino equality.
impl PartialEq for Polyomino {
    fn eq(&self, other: &Self) -> bool {
        self.pixels == other.pixels
    }
}

impl Eq for Polyomino {}

// ===========================================================================
// Shape classification
// ===========================================================================

/// Summary of a polyomino's shape, as produced by [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub pixel_count: usize,
    pub hole_count: usize,
    /// No holes.
    pub simple: bool,
    /// No 2x2 block of pixels.
    pub thin: bool,
    /// Thin, and every corner pixel has at most one neighbor (exactly one
    /// except in the single-pixel polyomino).
    pub maze: bool,
    /// Fills its bounding box exactly.
    pub rectangle: bool,
    /// Total boundary corners over all loops (outer and holes).
    pub corners: usize,
    /// Convex boundary corners.
    pub convex_corners: usize,
    /// Reflex boundary corners.
    pub reflex_corners: usize,
    /// Pixels with two perpendicular missing sides.
    pub corner_pixel_count: usize,
}

/// Classifies a polyomino's shape.
///
/// Corners are counted by walking every boundary loop: a left turn is a
/// convex corner, a right turn a reflex corner. Over all loops the balance
/// `convex - reflex = 4 - 4 * holes` holds exactly (each point contact
/// contributes one right turn to each of the two passages crossing it).
/// Holes are counted independently of the boundary walk as the bounded
/// connected components of the complement, found by flood fill around the
/// bounding box.
pub fn classify(p: &Polyomino) -> ShapeReport {
    let (min, max) = p.bounding_box();

    let mut convex = 0usize;
    let mut reflex = 0usize;
    for l in &extract_boundary(p).loops {
        for (_, din, dout) in l.turns() {
            if dout == din.turn_left() {
                convex += 1;
            } else {
                reflex += 1;
            }
        }
    }

    // Hole count: flood-fill the complement from outside the bounding box;
    // complement cells never reached belong to holes. Complement regions are
    // 4-connected (diagonal solid contacts separate them).
    let hole_count = {
        let w = (max.x - min.x + 3) as usize;
        let h = (max.y - min.y + 3) as usize;
        let at = |x: i32, y: i32| ((y - min.y + 1) as usize) * w + ((x - min.x + 1) as usize);
        let mut outside = vec![false; w * h];
        let mut queue = std::collections::VecDeque::new();
        let start = (min.x - 1, min.y - 1);
        outside[at(start.0, start.1)] = true;
        queue.push_back(start);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if nx < min.x - 1 || nx > max.x + 1 || ny < min.y - 1 || ny > max.y + 1 {
                    continue;
                }
                if p.contains(Pixel::new(nx, ny)) || outside[at(nx, ny)] {
                    continue;
                }
                outside[at(nx, ny)] = true;
                queue.push_back((nx, ny));
            }
        }
        let mut holes = 0usize;
        let mut hole_seen = vec![false; w * h];
        for y in min.y..=max.y {
            for x in min.x..=max.x {
                if p.contains(Pixel::new(x, y)) || outside[at(x, y)] || hole_seen[at(x, y)] {
                    continue;
                }
                holes += 1;
                let mut queue = std::collections::VecDeque::new();
                hole_seen[at(x, y)] = true;
                queue.push_back((x, y));
                while let Some((cx, cy)) = queue.pop_front() {
                    for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                        let (nx, ny) = (cx + dx, cy + dy);
                        if nx < min.x || nx > max.x || ny < min.y || ny > max.y {
                            continue;
                        }
                        if p.contains(Pixel::new(nx, ny))
                            || outside[at(nx, ny)]
                            || hole_seen[at(nx, ny)]
                        {
                            continue;
                        }
                        hole_seen[at(nx, ny)] = true;
                        queue.push_back((nx, ny));
                    }
                }
            }
        }
        holes
    };

    let thin = !p.pixels().iter().any(|&q| {
        p.contains(q.step(Direction::R))
            && p.contains(q.step(Direction::U))
            && p.contains(q.step(Direction::U).step(Direction::R))
    });

    let corner_pixels: Vec<Pixel> = p
        .pixels()
        .iter()
        .copied()
        .filter(|&q| p.is_corner_pixel(q))
        .collect();

    let maze = thin && corner_pixels.iter().all(|&q| p.degree(q) <= 1);

    let area = ((max.x - min.x + 1) as usize) * ((max.y - min.y + 1) as usize);
    let rectangle = area == p.len();

    ShapeReport {
        pixel_count: p.len(),
        hole_count,
        simple: hole_count == 0,
        thin,
        maze,
        rectangle,
        corners: convex + reflex,
        convex_corners: convex,
        reflex_corners: reflex,
        corner_pixel_count: corner_pixels.len(),
    }
}

// ===========================================================================
// Tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pixels: &[(i32, i32)]) -> Polyomino {
        Polyomino::from_pixels(pixels.iter().map(|&(x, y)| px(x, y))).unwrap()
    }

    #[test]
    fn pixel_order_is_south_then_west_first() {
        let mut v = vec![px(1, 1), px(0, 0), px(1, 0), px(0, 1)];
        v.sort();
        assert_eq!(v, vec![px(0, 0), px(1, 0), px(0, 1), px(1, 1)]);
    }

    #[test]
    fn from_pixels_rejects_empty_and_disconnected() {
        assert_eq!(
            Polyomino::from_pixels(std::iter::empty()).unwrap_err(),
            GeometryError::EmptyPolyomino
        );
        assert_eq!(
            Polyomino::from_pixels([px(0, 0), px(2, 0)]).unwrap_err(),
            GeometryError::DisconnectedPolyomino
        );
        // Diagonal contact is not edge-connectivity.
        assert_eq!(
            Polyomino::from_pixels([px(0, 0), px(1, 1)]).unwrap_err(),
            GeometryError::DisconnectedPolyomino
        );
    }

    #[test]
    fn runs_and_slides_on_an_l_tromino() {
        // ##
        // #.
        let p = poly(&[(0, 0), (0, 1), (1, 1)]);
        let i = p.pixel_index(px(0, 0)).unwrap();
        assert_eq!(p.pixel_at(p.slide_idx(i, Direction::U) as usize), px(0, 1));
        assert_eq!(p.pixel_at(p.slide_idx(i, Direction::R) as usize), px(0, 0));
        let j = p.pixel_index(px(1, 1)).unwrap();
        assert_eq!(p.pixel_at(p.slide_idx(j, Direction::L) as usize), px(0, 1));
        assert_eq!(p.pixel_at(p.slide_idx(j, Direction::D) as usize), px(1, 1));
        assert_eq!(p.row_segments().len(), 2);
        assert_eq!(p.column_segments().len(), 2);
    }

    #[test]
    fn segment_corner_endpoints() {
        // 1x3 row: both ends are corner pixels.
        let p = poly(&[(0, 0), (1, 0), (2, 0)]);
        let segs = p.row_segments();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].corner_endpoint_count, 2);
        assert_eq!(segs[0].endpoints(), (px(0, 0), px(2, 0)));
        // Its three column segments have one corner endpoint each... except
        // the middle pixel, which is not a corner pixel (only N and S sides
        // missing — parallel, not perpendicular).
        assert!(!p.is_corner_pixel(px(1, 0)));
        assert!(p.is_corner_pixel(px(0, 0)));
    }

    #[test]
    fn classify_unit_pixel() {
        let p = poly(&[(0, 0)]);
        let r = classify(&p);
        assert!(r.simple && r.thin && r.maze && r.rectangle);
        assert_eq!(r.corners, 4);
        assert_eq!(r.convex_corners, 4);
        assert_eq!(r.reflex_corners, 0);
        assert_eq!(r.corner_pixel_count, 1);
    }

    #[test]
    fn classify_rectangle_block() {
        let p = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let r = classify(&p);
        assert!(r.simple && r.rectangle);
        assert!(!r.thin && !r.maze);
        assert_eq!(r.convex_corners, 4);
        assert_eq!(r.reflex_corners, 0);
    }

    #[test]
    fn classify_plus_pentomino_is_simple_thin_maze() {
        let p = poly(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
        let r = classify(&p);
        assert!(r.simple && r.thin && r.maze);
        assert!(!r.rectangle);
        assert_eq!(r.corner_pixel_count, 4);
        assert_eq!(r.convex_corners, 8);
        assert_eq!(r.reflex_corners, 4);
    }

    #[test]
    fn classify_counts_holes_and_their_corners() {
        // 3x3 block with the middle missing: one hole, 4 convex corners on
        // the outer loop and 4 reflex corners on the hole loop.
        let ring: Vec<(i32, i32)> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&(x, y)| !(x == 1 && y == 1))
            .collect();
        let p = poly(&ring);
        let r = classify(&p);
        assert_eq!(r.hole_count, 1);
        assert!(!r.simple);
        assert_eq!(r.convex_corners, 4);
        assert_eq!(r.reflex_corners, 4);
        // Convex minus reflex is 4 minus 4 per hole.
        assert_eq!(r.convex_corners as i64 - r.reflex_corners as i64, 0);
    }

    #[test]
    fn classify_counts_point_contact_passages_as_reflex_turns() {
        // Sealed diagonal contact: both the outer loop and the hole loop
        // turn right at the shared vertex, keeping the corner balance.
        let p = Polyomino::from_pixels(
            [(0, 0), (1, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)]
                .map(|(x, y)| px(x, y)),
        )
        .unwrap();
        let r = classify(&p);
        assert_eq!(r.hole_count, 1);
        assert_eq!(r.corners, 10);
        assert_eq!(r.convex_corners, 5);
        assert_eq!(r.reflex_corners, 5);
        assert_eq!(
            r.convex_corners as i64 - r.reflex_corners as i64,
            4 - 4 * r.hole_count as i64
        );
    }

    #[test]
    fn corner_balance_matches_hole_count() {
        // On any polyomino, convex - reflex = 4 - 4 * holes.
        for pixels in [
            vec![(0, 0), (1, 0), (2, 0), (1, 1)],       // T tetromino
            vec![(0, 0), (0, 1), (1, 1), (2, 1), (2, 2)], // zigzag
        ] {
            let p = poly(&pixels);
            let r = classify(&p);
            assert_eq!(
                r.convex_corners as i64 - r.reflex_corners as i64,
                4 - 4 * r.hole_count as i64
            );
        }
    }

    #[test]
    fn t_tetromino_is_a_maze() {
        let p = poly(&[(0, 1), (1, 1), (2, 1), (1, 0)]);
        let r = classify(&p);
        assert!(r.simple && r.thin && r.maze);
    }

    #[test]
    fn normalized_translates_least_pixel_to_origin() {
        let p = poly(&[(5, 7), (6, 7), (5, 8)]);
        let q = p.normalized();
        assert_eq!(q.pixels()[0], px(0, 0));
        assert_eq!(q.len(), 3);
    }
}

//! Sparse single-particle slides from boundary data alone.
//!
//! A full-tilt slide destination depends only on the nearest blocking wall,
//! so it can be answered from the boundary sides without materializing the
//! pixel set. [`SideIndex`] sorts the vertical sides by `x` and the
//! horizontal sides by `y`; a slide query binary-searches to the pixel's
//! coordinate and scans toward the move direction for the first side that
//! crosses the pixel's row or column. Because run walls alternate solidity
//! along a lane, that first crossing side is guaranteed to be the wall of
//! the pixel's own run.
//!
//! The index also answers point-in-polyomino queries by ray parity, which
//! makes it the workhorse behind sparse significant-pixel extraction and the
//! sparse tilt automaton.

use super::{Boundary, GeometryError, Pixel};
use crate::dynamics::Direction;

/// A vertical boundary side at `x`, spanning `y0 <= y < y1` in pixel rows.
#[derive(Clone, Copy, Debug)]
struct VSide {
    x: i32,
    y0: i32,
    y1: i32,
}

/// A horizontal boundary side at `y`, spanning `x0 <= x < x1` in pixel
/// columns.
#[derive(Clone, Copy, Debug)]
struct HSide {
    y: i32,
    x0: i32,
    x1: i32,
}

/// Boundary sides indexed for axis-parallel queries.
#[derive(Clone, Debug)]
pub struct SideIndex {
    /// Sorted by `(x, y0)`.
    vsides: Vec<VSide>,
    /// Sorted by `(y, x0)`.
    hsides: Vec<HSide>,
}

impl SideIndex {
    pub fn build(b: &Boundary) -> SideIndex {
        let mut vsides = Vec::new();
        let mut hsides = Vec::new();
        for l in &b.loops {
            let n = l.corners.len();
            for i in 0..n {
                let (ax, ay) = l.corners[i];
                let (bx, by) = l.corners[(i + 1) % n];
                if ax == bx {
                    vsides.push(VSide {
                        x: ax,
                        y0: ay.min(by),
                        y1: ay.max(by),
                    });
                } else {
                    hsides.push(HSide {
                        y: ay,
                        x0: ax.min(bx),
                        x1: ax.max(bx),
                    });
                }
            }
        }
        vsides.sort_unstable_by_key(|s| (s.x, s.y0));
        hsides.sort_unstable_by_key(|s| (s.y, s.x0));
        SideIndex { vsides, hsides }
    }

    /// Even-odd point-in-polyomino test: a pixel is inside exactly when a
    /// westward ray from its center crosses an odd number of vertical sides.
    pub fn contains(&self, p: Pixel) -> bool {
        let mut crossings = 0usize;
        // Sides are sorted by x; only those with x <= p.x matter.
        let cut = self.vsides.partition_point(|s| s.x <= p.x);
        for s in &self.vsides[..cut] {
            if s.y0 <= p.y && p.y < s.y1 {
                crossings += 1;
            }
        }
        crossings % 2 == 1
    }

    /// Nearest vertical side at or west of column `x` that crosses row `y`.
    fn wall_west(&self, x: i32, y: i32) -> Option<i32> {
        let cut = self.vsides.partition_point(|s| s.x <= x);
        self.vsides[..cut]
            .iter()
            .rev()
            .find(|s| s.y0 <= y && y < s.y1)
            .map(|s| s.x)
    }

    /// Nearest vertical side strictly east of column `x` crossing row `y`.
    fn wall_east(&self, x: i32, y: i32) -> Option<i32> {
        let cut = self.vsides.partition_point(|s| s.x <= x);
        self.vsides[cut..]
            .iter()
            .find(|s| s.y0 <= y && y < s.y1)
            .map(|s| s.x)
    }

    /// Nearest horizontal side at or south of row `y` crossing column `x`.
    fn wall_south(&self, x: i32, y: i32) -> Option<i32> {
        let cut = self.hsides.partition_point(|s| s.y <= y);
        self.hsides[..cut]
            .iter()
            .rev()
            .find(|s| s.x0 <= x && x < s.x1)
            .map(|s| s.y)
    }

    /// Nearest horizontal side strictly north of row `y` crossing column
    /// `x`.
    fn wall_north(&self, x: i32, y: i32) -> Option<i32> {
        let cut = self.hsides.partition_point(|s| s.y <= y);
        self.hsides[cut..]
            .iter()
            .find(|s| s.x0 <= x && x < s.x1)
            .map(|s| s.y)
    }
}

/// Slides a single particle from `p` toward `d` until it hits a wall,
/// using only boundary information.
///
/// Fails with [`GeometryError::PixelOutsidePolyomino`] when `p` is not a
/// pixel of the shape.
pub fn project(idx: &SideIndex, p: Pixel, d: Direction) -> Result<Pixel, GeometryError> {
    if !idx.contains(p) {
        return Err(GeometryError::PixelOutsidePolyomino(p));
    }
    // The particle is inside, so a wall exists in every direction and the
    // first side encountered is its run's wall.
    let q = match d {
        Direction::L => {
            let x = idx.wall_west(p.x, p.y).expect("inside pixels are walled");
            Pixel::new(x, p.y)
        }
        Direction::R => {
            let x = idx.wall_east(p.x, p.y).expect("inside pixels are walled");
            Pixel::new(x - 1, p.y)
        }
        Direction::D => {
            let y = idx.wall_south(p.x, p.y).expect("inside pixels are walled");
            Pixel::new(p.x, y)
        }
        Direction::U => {
            let y = idx.wall_north(p.x, p.y).expect("inside pixels are walled");
            Pixel::new(p.x, y - 1)
        }
    };
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{extract_boundary, parse_grid, px};

    fn index_of(grid: &str) -> (crate::geometry::Polyomino, SideIndex) {
        let (p, _, _) = parse_grid(grid).unwrap();
        let b = extract_boundary(&p);
        (p, SideIndex::build(&b))
    }

    #[test]
    fn contains_matches_membership() {
        let (p, idx) = index_of("###\n#.#\n##.");
        for x in -1..4 {
            for y in -1..4 {
                let q = px(x, y);
                assert_eq!(idx.contains(q), p.contains(q), "at {q:?}");
            }
        }
    }

    #[test]
    fn project_agrees_with_dense_slides_exhaustively() {
        for grid in [
            "#",
            "####",
            "###\n###",
            "###\n#.#\n###",
            "###\n#.#\n##.",
            "###\n###\n.##",
            "#...\n####\n..#.",
        ] {
            let (p, idx) = index_of(grid);
            for (i, &q) in p.pixels().iter().enumerate() {
                for d in Direction::ALL {
                    let sparse = project(&idx, q, d).unwrap();
                    let dense = p.pixel_at(p.slide_idx(i, d) as usize);
                    assert_eq!(sparse, dense, "grid:\n{grid}\npixel {q:?} dir {d:?}");
                }
            }
        }
    }

    #[test]
    fn project_rejects_outside_pixels() {
        let (_, idx) = index_of("###\n#.#\n###");
        assert_eq!(
            project(&idx, px(1, 1), Direction::L),
            Err(GeometryError::PixelOutsidePolyomino(px(1, 1)))
        );
        assert!(project(&idx, px(9, 9), Direction::U).is_err());
    }

    #[test]
    fn project_on_a_sparse_giant_is_exact() {
        // 1 x 1_000_000 corridor: never materialized.
        let b = crate::geometry::Boundary {
            loops: vec![crate::geometry::BoundaryLoop {
                corners: vec![(0, 0), (1_000_000, 0), (1_000_000, 1), (0, 1)],
                outer: true,
            }],
        };
        let idx = SideIndex::build(&b);
        assert_eq!(project(&idx, px(123_456, 0), Direction::R).unwrap(), px(999_999, 0));
        assert_eq!(project(&idx, px(123_456, 0), Direction::L).unwrap(), px(0, 0));
        assert_eq!(project(&idx, px(123_456, 0), Direction::U).unwrap(), px(123_456, 0));
    }
}

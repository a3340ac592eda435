//! Shared construction kit for building polyominoes cell by cell.

use std::collections::{HashSet, VecDeque};

use crate::geometry::{GeometryError, Pixel, Polyomino};

/// Accumulates pixels with row/column helpers; the generators lay their
/// shapes out in absolute coordinates and translate at the end.
#[derive(Debug, Clone, Default)]
pub struct GridBuilder {
    cells: HashSet<Pixel>,
}

impl GridBuilder {
    pub fn new() -> Self {
        GridBuilder::default()
    }

    pub fn cell(&mut self, x: i32, y: i32) -> &mut Self {
        self.cells.insert(Pixel { x, y });
        self
    }

    /// Horizontal run of cells spanning `x1..=x2` (either order) at `y`.
    pub fn row(&mut self, x1: i32, x2: i32, y: i32) -> &mut Self {
        let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
        for x in lo..=hi {
            self.cells.insert(Pixel { x, y });
        }
        self
    }

    /// Vertical run of cells at `x` spanning `y1..=y2` (either order).
    pub fn column(&mut self, x: i32, y1: i32, y2: i32) -> &mut Self {
        let (lo, hi) = if y1 <= y2 { (y1, y2) } else { (y2, y1) };
        for y in lo..=hi {
            self.cells.insert(Pixel { x, y });
        }
        self
    }

    /// Removes a cell if present; used to carve one-cell holes.
    pub fn carve(&mut self, x: i32, y: i32) -> bool {
        self.cells.remove(&Pixel { x, y })
    }

    pub fn contains(&self, x: i32, y: i32) -> bool {
        self.cells.contains(&Pixel { x, y })
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn pixels(&self) -> impl Iterator<Item = Pixel> + '_ {
        self.cells.iter().copied()
    }

    /// Fills every enclosed pocket of empty cells and returns the filled
    /// positions. An empty cell is enclosed when a flood fill of the
    /// complement started outside the bounding box cannot reach it.
    ///
    /// Generators call this after laying out their corridors: a filled
    /// pocket can lengthen slide runs, so any caller must re-verify its
    /// movement contracts afterwards.
    pub fn fill_enclosed_cavities(&mut self) -> Vec<Pixel> {
        if self.cells.is_empty() {
            return Vec::new();
        }
        let min_x = self.cells.iter().map(|p| p.x).min().unwrap() - 1;
        let max_x = self.cells.iter().map(|p| p.x).max().unwrap() + 1;
        let min_y = self.cells.iter().map(|p| p.y).min().unwrap() - 1;
        let max_y = self.cells.iter().map(|p| p.y).max().unwrap() + 1;
        let width = (max_x - min_x + 1) as usize;
        let height = (max_y - min_y + 1) as usize;
        let idx = |x: i32, y: i32| ((y - min_y) as usize) * width + ((x - min_x) as usize);

        let mut outside = vec![false; width * height];
        let mut queue = VecDeque::new();
        outside[idx(min_x, min_y)] = true;
        queue.push_back((min_x, min_y));
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if nx < min_x || nx > max_x || ny < min_y || ny > max_y {
                    continue;
                }
                if outside[idx(nx, ny)] || self.cells.contains(&Pixel { x: nx, y: ny }) {
                    continue;
                }
                outside[idx(nx, ny)] = true;
                queue.push_back((nx, ny));
            }
        }

        let mut filled = Vec::new();
        for y in min_y..=max_y {
            for x in min_x..=max_x {
                let p = Pixel { x, y };
                if !outside[idx(x, y)] && !self.cells.contains(&p) {
                    filled.push(p);
                }
            }
        }
        for &p in &filled {
            self.cells.insert(p);
        }
        filled.sort_by_key(|p| (p.y, p.x));
        filled
    }

    /// Builds the polyomino in place, without translating coordinates.
    pub fn build_raw(&self) -> Result<Polyomino, GeometryError> {
        Polyomino::from_pixels(self.cells.iter().copied())
    }

    /// Builds the polyomino translated so its lexicographically least
    /// pixel (bottom-most, then left-most) sits at the origin, and returns
    /// the applied offset so that annotation pixels can be shifted the
    /// same way.
    pub fn build_normalized(&self) -> Result<(Polyomino, (i32, i32)), GeometryError> {
        let poly = self.build_raw()?;
        let anchor = poly.pixels()[0];
        let offset = (-anchor.x, -anchor.y);
        let shifted = Polyomino::from_pixels(
            poly.pixels()
                .iter()
                .map(|p| Pixel { x: p.x + offset.0, y: p.y + offset.1 }),
        )?;
        Ok((shifted, offset))
    }
}

/// Applies a builder offset to an annotation pixel.
pub(crate) fn shift(p: Pixel, offset: (i32, i32)) -> Pixel {
    Pixel { x: p.x + offset.0, y: p.y + offset.1 }
}

//! Significant pixels: the closed pixel set that anchors tilt automata.
//!
//! A *corner pixel* has two perpendicular boundary sides, so a lone
//! full-tilt particle can come to rest there from two perpendicular
//! directions. *Helper pixels* patch the gaps between corner pixels: at
//! every reflex boundary corner, each of the two meeting sides is extended
//! past the corner until the extension ray runs out of solid material on
//! either flank; the pixel on the extended side's solid flank at the far
//! end of that stretch is a helper. Corners and helpers together form the
//! significant pixels, a set closed under single-particle full-tilt moves
//! that every particle enters after at most two perpendicular moves — the
//! state set of the polyomino's tilt automaton.
//!
//! Everything here works on the boundary representation alone (via
//! [`SideIndex`] queries), so significant pixels of a shape with few
//! corners but a huge pixel count stay cheap to find.

use super::{extract_boundary, project, Pixel, Polyomino, SideIndex};
use super::Boundary;
use crate::dynamics::Direction;

/// The significant pixels of a polyomino: corner pixels, helper pixels and
/// their union, each sorted in `(y, x)` order without duplicates. A helper
/// that lands on a corner pixel appears in both component sets but once in
/// the union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignificantPixels {
    pub corners: Vec<Pixel>,
    pub helpers: Vec<Pixel>,
    pub all: Vec<Pixel>,
}

impl SignificantPixels {
    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn contains(&self, p: Pixel) -> bool {
        self.all.binary_search(&p).is_ok()
    }

    /// Position of `p` within the sorted union, if significant.
    pub fn index_of(&self, p: Pixel) -> Option<usize> {
        self.all.binary_search(&p).ok()
    }
}

/// Pixel on the interior (left) flank of the side arriving at vertex `v`
/// with walk direction `din`.
fn arrive_interior(v: (i32, i32), din: Direction) -> Pixel {
    let (x, y) = v;
    match din {
        Direction::R => Pixel::new(x - 1, y),
        Direction::L => Pixel::new(x, y - 1),
        Direction::U => Pixel::new(x - 1, y - 1),
        Direction::D => Pixel::new(x, y),
    }
}

/// Pixel on the interior (left) flank of the side leaving vertex `v` with
/// walk direction `dout`.
fn leave_interior(v: (i32, i32), dout: Direction) -> Pixel {
    let (x, y) = v;
    match dout {
        Direction::R => Pixel::new(x, y),
        Direction::L => Pixel::new(x - 1, y - 1),
        Direction::U => Pixel::new(x - 1, y),
        Direction::D => Pixel::new(x, y - 1),
    }
}

/// At a right turn arriving with `din`, the quadrant pixel that decides
/// between an ordinary reflex corner (pixel present) and a point contact
/// (pixel absent). The quadrant on the arrival side's right is absent
/// whenever the arrival side exists, so this diagonally opposite quadrant
/// is the only unknown.
fn pinch_discriminator(v: (i32, i32), din: Direction) -> Pixel {
    let (x, y) = v;
    match din {
        Direction::R => Pixel::new(x, y),
        Direction::L => Pixel::new(x - 1, y - 1),
        Direction::U => Pixel::new(x - 1, y),
        Direction::D => Pixel::new(x, y - 1),
    }
}

/// Left and right flank pixels of the unit segment leaving vertex `v` in
/// ray direction `r`.
fn flank_pixels(v: (i32, i32), r: Direction) -> (Pixel, Pixel) {
    let (x, y) = v;
    match r {
        Direction::R => (Pixel::new(x, y), Pixel::new(x, y - 1)),
        Direction::L => (Pixel::new(x - 1, y - 1), Pixel::new(x - 1, y)),
        Direction::U => (Pixel::new(x - 1, y), Pixel::new(x, y)),
        Direction::D => (Pixel::new(x, y - 1), Pixel::new(x - 1, y - 1)),
    }
}

/// Marches the extension ray of a boundary side from vertex `v` in
/// direction `r` while pixels on both flanks keep the ray embedded in the
/// shape, and returns the pixel on the solid flank of the last such
/// segment. `solid_is_left` says which flank carried the original side's
/// interior. Returns nothing when the ray cannot advance at all.
fn helper_along(
    idx: &SideIndex,
    v: (i32, i32),
    r: Direction,
    solid_is_left: bool,
) -> Option<Pixel> {
    let (fl, fr) = flank_pixels(v, r);
    if !idx.contains(fl) || !idx.contains(fr) {
        return None;
    }
    let el = project(idx, fl, r).expect("flank pixel is inside");
    let er = project(idx, fr, r).expect("flank pixel is inside");
    // The ray stays double-flanked until the nearer of the two runs ends.
    let stop = match r {
        Direction::R => el.x.min(er.x),
        Direction::L => el.x.max(er.x),
        Direction::U => el.y.min(er.y),
        Direction::D => el.y.max(er.y),
    };
    let solid = if solid_is_left { fl } else { fr };
    Some(match r {
        Direction::R | Direction::L => Pixel::new(stop, solid.y),
        Direction::U | Direction::D => Pixel::new(solid.x, stop),
    })
}

/// Computes the significant pixels of the polyomino a boundary encloses.
///
/// The boundary must come from [`extract_boundary`] (or round-trip through
/// it); the function panics if the derived set fails its own closure or
/// size invariants, which cannot happen for a genuine boundary.
///
/// Corner pixels are harvested per boundary corner: a left (convex) turn
/// contributes the pixel wedged between its two sides, and a point-contact
/// right turn contributes the two diagonal pixels meeting there. Ordinary
/// reflex right turns contribute no corner pixel but spawn the two helper
/// extension rays.
pub fn significant_pixels(b: &Boundary) -> SignificantPixels {
    let idx = SideIndex::build(b);
    let mut corners: Vec<Pixel> = Vec::new();
    let mut helpers: Vec<Pixel> = Vec::new();
    let mut total_turns = 0usize;
    let mut convex_turns = 0usize;

    for l in &b.loops {
        for (v, din, dout) in l.turns() {
            total_turns += 1;
            if dout == din.turn_left() {
                convex_turns += 1;
                corners.push(arrive_interior(v, din));
                continue;
            }
            debug_assert_eq!(dout, din.turn_right(), "boundary corners never reverse");
            if !idx.contains(pinch_discriminator(v, din)) {
                // Point contact: both diagonal pixels have two
                // perpendicular boundary sides meeting at `v`.
                corners.push(arrive_interior(v, din));
                corners.push(leave_interior(v, dout));
                continue;
            }
            // Ordinary reflex corner: extend each incident side past `v`.
            // The arriving side continues along its own direction with its
            // interior still on the left; the leaving side extends
            // backwards, putting its interior on the ray's right.
            if let Some(h) = helper_along(&idx, v, din, true) {
                helpers.push(h);
            }
            if let Some(h) = helper_along(&idx, v, dout.opposite(), false) {
                helpers.push(h);
            }
        }
    }

    corners.sort();
    corners.dedup();
    helpers.sort();
    helpers.dedup();
    let mut all = corners.clone();
    all.extend_from_slice(&helpers);
    all.sort();
    all.dedup();

    assert!(
        all.len() <= 2 * total_turns - convex_turns,
        "significant pixel count {} exceeds 2n - n_c = {}",
        all.len(),
        2 * total_turns - convex_turns
    );
    for &p in &all {
        for d in Direction::ALL {
            let q = project(&idx, p, d).expect("significant pixels are inside");
            assert!(
                all.binary_search(&q).is_ok(),
                "significant pixels not closed: {p:?} slides {d} to non-member {q:?}"
            );
        }
    }

    SignificantPixels { corners, helpers, all }
}

/// Re-derives every defining property of a significant pixel set against an
/// explicit polyomino, returning the first violation as text.
///
/// Checked: membership in the polyomino; exact agreement of the corner set
/// with the polyomino's corner pixels; closure under single-particle moves;
/// that any two perpendicular moves take *every* pixel into the set; and
/// the size bound `|S| <= 2n - n_c` against the boundary corner counts.
pub fn verify_significant_pixels(p: &Polyomino, s: &SignificantPixels) -> Result<(), String> {
    for &q in &s.all {
        if !p.contains(q) {
            return Err(format!("significant pixel {q:?} lies outside the polyomino"));
        }
    }

    let true_corners: Vec<Pixel> = p
        .pixels()
        .iter()
        .copied()
        .filter(|&q| p.is_corner_pixel(q))
        .collect();
    if true_corners != s.corners {
        return Err(format!(
            "corner pixels disagree: harvested {:?}, polyomino has {:?}",
            s.corners, true_corners
        ));
    }

    let slide = |q: Pixel, d: Direction| {
        let i = p.pixel_index(q).expect("membership checked above");
        p.pixel_at(p.slide_idx(i, d) as usize)
    };
    for &q in &s.all {
        for d in Direction::ALL {
            let r = slide(q, d);
            if !s.contains(r) {
                return Err(format!("not closed: {q:?} slides {d} to {r:?}"));
            }
        }
    }

    for &q in p.pixels() {
        for v in Direction::ALL {
            for w in Direction::ALL {
                if !v.is_perpendicular_to(w) {
                    continue;
                }
                let r = slide(slide(q, v), w);
                if !s.contains(r) {
                    return Err(format!(
                        "pixel {q:?} escapes after moves {v}{w}: lands on {r:?}"
                    ));
                }
            }
        }
    }

    let b = extract_boundary(p);
    let mut convex = 0usize;
    for l in &b.loops {
        for (_, din, dout) in l.turns() {
            if dout == din.turn_left() {
                convex += 1;
            }
        }
    }
    let bound = 2 * b.corner_count() - convex;
    if s.all.len() > bound {
        return Err(format!(
            "size bound violated: {} significant pixels, bound {bound}",
            s.all.len()
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{parse_grid, px};

    fn significant_of(grid: &str) -> (Polyomino, SignificantPixels) {
        let (p, _, _) = parse_grid(grid).unwrap();
        let s = significant_pixels(&extract_boundary(&p));
        (p, s)
    }

    #[test]
    fn rectangle_has_corner_pixels_only() {
        let (p, s) = significant_of("###\n###");
        assert_eq!(s.corners, vec![px(0, 0), px(2, 0), px(0, 1), px(2, 1)]);
        assert!(s.helpers.is_empty());
        assert_eq!(s.all, s.corners);
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn row_has_two_significant_pixels() {
        let (p, s) = significant_of("###");
        assert_eq!(s.all, vec![px(0, 0), px(2, 0)]);
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn l_tromino_helper_lands_on_a_corner() {
        let (p, s) = significant_of("#.\n##");
        assert_eq!(s.corners, vec![px(0, 0), px(1, 0), px(0, 1)]);
        // Both reflex extensions run to the far corner pixel, so the union
        // stays at three pixels, within the bound 2*6 - 5 = 7.
        assert_eq!(s.helpers, vec![px(0, 0)]);
        assert_eq!(s.all.len(), 3);
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn plus_pentomino_center_is_the_only_helper() {
        let (p, s) = significant_of(".#.\n###\n.#.");
        assert_eq!(s.corners.len(), 4);
        assert_eq!(s.helpers, vec![px(1, 1)]);
        assert_eq!(s.all.len(), 5);
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn seven_state_fixture() {
        // Full 3x3 block minus its south-west pixel: five corner pixels and
        // two helpers from the single reflex corner.
        let (p, s) = significant_of("###\n###\n.##");
        assert_eq!(
            s.corners,
            vec![px(1, 0), px(2, 0), px(0, 1), px(0, 2), px(2, 2)]
        );
        assert_eq!(s.helpers, vec![px(2, 1), px(1, 2)]);
        assert_eq!(s.all.len(), 7);
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn point_contact_pixels_are_significant() {
        let (p, s) = significant_of("###\n#.#\n##.");
        // The two pixels meeting diagonally at the pinch are corner pixels.
        assert!(s.corners.contains(&px(1, 0)));
        assert!(s.corners.contains(&px(2, 1)));
        verify_significant_pixels(&p, &s).unwrap();
    }

    #[test]
    fn verification_passes_on_assorted_shapes() {
        for grid in [
            "#",
            "##\n##",
            "#..\n###\n..#",
            "###\n#.#\n###",
            "##.\n.##",
            "####\n#..#\n####",
            "#####\n#...#\n###.#\n..###",
        ] {
            let (p, s) = significant_of(grid);
            verify_significant_pixels(&p, &s).unwrap_or_else(|e| {
                panic!("verification failed on\n{grid}\n: {e}");
            });
        }
    }

    #[test]
    fn sparse_boundary_needs_no_materialization() {
        // A 1000 x 1000 square from a hand-built boundary.
        use crate::geometry::BoundaryLoop;
        let b = Boundary {
            loops: vec![BoundaryLoop {
                corners: vec![(0, 0), (1000, 0), (1000, 1000), (0, 1000)],
                outer: true,
            }],
        };
        let s = significant_pixels(&b);
        assert_eq!(
            s.all,
            vec![px(0, 0), px(999, 0), px(0, 999), px(999, 999)]
        );
    }
}

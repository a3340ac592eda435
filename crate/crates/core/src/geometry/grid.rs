//! ASCII grid parsing.
//!
//! Grids are drawn top line first, so the first text row holds the pixels
//! with the highest `y`. Characters:
//!
//! * `#` — free pixel,
//! * `o` — occupied pixel (a particle),
//! * `X` — target pixel,
//! * `@` — occupied target pixel,
//! * `.` or space — outside the polyomino.
//!
//! Trailing blank lines are ignored; lines may have different lengths (short
//! lines are padded with outside cells).

use super::{Config, GeometryError, Pixel, Polyomino};

/// Parses an ASCII grid into a polyomino plus the occupied and target pixel
/// sets drawn on it.
///
/// Fails on characters outside the legend (reported with 0-based text row
/// and column), on an empty pixel set, and on a disconnected pixel set.
pub fn parse_grid(text: &str) -> Result<(Polyomino, Config, Config), GeometryError> {
    let lines: Vec<&str> = {
        let mut ls: Vec<&str> = text.lines().collect();
        while ls.last().is_some_and(|l| l.trim().is_empty()) {
            ls.pop();
        }
        ls
    };

    let height = lines.len() as i32;
    let mut pixels = Vec::new();
    let mut occupied = Vec::new();
    let mut targets = Vec::new();

    for (row, line) in lines.iter().enumerate() {
        let y = height - 1 - row as i32;
        for (col, ch) in line.chars().enumerate() {
            let p = Pixel::new(col as i32, y);
            match ch {
                '#' => pixels.push(p),
                'o' => {
                    pixels.push(p);
                    occupied.push(p);
                }
                'X' => {
                    pixels.push(p);
                    targets.push(p);
                }
                '@' => {
                    pixels.push(p);
                    occupied.push(p);
                    targets.push(p);
                }
                '.' | ' ' => {}
                other => {
                    return Err(GeometryError::IllegalCharacter {
                        ch: other,
                        row,
                        col,
                    })
                }
            }
        }
    }

    let poly = Polyomino::from_pixels(pixels)?;
    Ok((poly, Config::new(occupied), Config::new(targets)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::px;

    #[test]
    fn parses_top_line_as_highest_row() {
        let (p, c, t) = parse_grid("##\n#o").unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.contains(px(0, 1)) && p.contains(px(1, 0)));
        assert_eq!(c.pixels(), &[px(1, 0)]);
        assert!(t.is_empty());
    }

    #[test]
    fn parses_targets_and_overlaps() {
        let (p, c, t) = parse_grid("X@\n##").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(c.pixels(), &[px(1, 1)]);
        assert_eq!(t.pixels(), &[px(0, 1), px(1, 1)]);
    }

    #[test]
    fn dots_and_spaces_are_outside() {
        let (p, _, _) = parse_grid("#.#\n###").unwrap();
        assert_eq!(p.len(), 5);
        let (q, _, _) = parse_grid("# #\n###").unwrap();
        assert_eq!(q.len(), 5);
    }

    #[test]
    fn reports_illegal_characters_with_position() {
        let err = parse_grid("##\n#?").unwrap_err();
        assert_eq!(
            err,
            GeometryError::IllegalCharacter {
                ch: '?',
                row: 1,
                col: 1
            }
        );
    }

    #[test]
    fn rejects_empty_and_disconnected_grids() {
        assert_eq!(parse_grid("...\n...").unwrap_err(), GeometryError::EmptyPolyomino);
        assert_eq!(
            parse_grid("#.#").unwrap_err(),
            GeometryError::DisconnectedPolyomino
        );
    }

    #[test]
    fn seven_pixel_worked_example_grid() {
        // The L-shaped 8-pixel example used across the automata tests:
        // a 3x3 block missing its bottom-left pixel.
        let (p, _, _) = parse_grid("###\n###\n.##").unwrap();
        assert_eq!(p.len(), 8);
        assert!(!p.contains(px(0, 0)));
    }
}

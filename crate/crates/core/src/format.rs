//! Text interchange formats: ASCII grid rendering, instance files with
//! metadata, boundary loop lists, and automaton tables.
//!
//! All formats are line-oriented and bit-exact: serializing a parsed
//! canonical file reproduces it byte for byte, and parsing a serialized
//! value recovers the value. Grids draw the highest row first with `#`
//! for free pixels, `o` for particles, `X` for targets, `@` for both,
//! and `.` for cells outside the polyomino. Canonical grids touch the
//! left and bottom edge; rendering translates arbitrary coordinates so
//! the bounding box sits at the origin.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automata::{Acceptor, AutomataError, SemiAutomaton};
use crate::geometry::{Boundary, BoundaryLoop, Config, GeometryError, Pixel, Polyomino};

/// Errors from parsing or assembling interchange text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    /// A line could not be read; `line` is 1-based.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// The text parsed but describes an inconsistent object.
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

// ---------------------------------------------------------------------------
// Grid rendering
// ---------------------------------------------------------------------------

/// Draws a polyomino with its particles and targets as an ASCII grid,
/// highest row first, bounding box translated to the origin. Ends with a
/// newline.
///
/// # Panics
///
/// If `occupied` or `targets` contain pixels outside the polyomino.
pub fn render_ascii(p: &Polyomino, occupied: &Config, targets: &Config) -> String {
    for c in [occupied, targets] {
        assert!(
            c.pixels().iter().all(|&q| p.pixel_index(q).is_some()),
            "marked pixels must lie on the polyomino"
        );
    }
    let min_x = p.pixels().iter().map(|q| q.x).min().unwrap();
    let max_x = p.pixels().iter().map(|q| q.x).max().unwrap();
    let min_y = p.pixels().iter().map(|q| q.y).min().unwrap();
    let max_y = p.pixels().iter().map(|q| q.y).max().unwrap();

    let mut out = String::new();
    for y in (min_y..=max_y).rev() {
        let mut line = String::new();
        for x in min_x..=max_x {
            let q = Pixel::new(x, y);
            let ch = if p.pixel_index(q).is_none() {
                '.'
            } else {
                match (occupied.contains(q), targets.contains(q)) {
                    (true, true) => '@',
                    (true, false) => 'o',
                    (false, true) => 'X',
                    (false, false) => '#',
                }
            };
            line.push(ch);
        }
        // Canonical grids carry no trailing outside cells.
        out.push_str(line.trim_end_matches('.'));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

/// A grid plus an ordered list of `key: value` metadata pairs, separated
/// in text by a `---` line.
///
/// Pixel-list values use the form `x,y;x,y;...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub polyomino: Polyomino,
    pub occupied: Config,
    pub targets: Config,
    pub metadata: Vec<(String, String)>,
}

impl InstanceFile {
    pub fn new(polyomino: Polyomino, occupied: Config, targets: Config) -> InstanceFile {
        InstanceFile {
            polyomino,
            occupied,
            targets,
            metadata: Vec::new(),
        }
    }

    /// The value stored under `key`, if any.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Stores `value` under `key`, replacing an existing entry in place.
    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        let value = value.into();
        match self.metadata.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value,
            None => self.metadata.push((key.to_owned(), value)),
        }
    }

    /// Stores a pixel list under `key` in the `x,y;x,y;...` form.
    pub fn set_pixels(&mut self, key: &str, pixels: &[Pixel]) {
        let value = pixels
            .iter()
            .map(|q| format!("{},{}", q.x, q.y))
            .collect::<Vec<_>>()
            .join(";");
        self.set(key, value);
    }

    /// Reads a pixel list stored under `key`.
    pub fn pixel_list(&self, key: &str) -> Option<Result<Vec<Pixel>, FormatError>> {
        self.get(key).map(parse_pixel_list)
    }

    /// Serializes to the canonical text form: grid, then `---` and the
    /// metadata pairs when present.
    pub fn serialize(&self) -> String {
        let mut out = render_ascii(&self.polyomino, &self.occupied, &self.targets);
        if !self.metadata.is_empty() {
            out.push_str("---\n");
            for (k, v) in &self.metadata {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        out
    }

    /// Parses the text form produced by [`InstanceFile::serialize`].
    pub fn parse(text: &str) -> Result<InstanceFile, FormatError> {
        let mut grid = String::new();
        let mut metadata = Vec::new();
        let mut in_meta = false;
        for (i, line) in text.lines().enumerate() {
            if line.trim() == "---" {
                if in_meta {
                    return Err(syntax(i + 1, "second metadata separator"));
                }
                in_meta = true;
            } else if !in_meta {
                grid.push_str(line);
                grid.push('\n');
            } else if !line.trim().is_empty() {
                let (k, v) = line
                    .split_once(':')
                    .ok_or_else(|| syntax(i + 1, "expected `key: value`"))?;
                metadata.push((k.trim().to_owned(), v.trim().to_owned()));
            }
        }
        let (polyomino, occupied, targets) = crate::geometry::parse_grid(&grid)?;
        Ok(InstanceFile {
            polyomino,
            occupied,
            targets,
            metadata,
        })
    }
}

/// Parses a `x,y;x,y;...` pixel list. The empty string is the empty
/// list.
pub fn parse_pixel_list(text: &str) -> Result<Vec<Pixel>, FormatError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|entry| {
            let (x, y) = entry
                .split_once(',')
                .ok_or_else(|| FormatError::Invalid(format!("bad pixel entry {entry:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<i32>()
                    .map_err(|_| FormatError::Invalid(format!("bad coordinate {s:?}")))
            };
            Ok(Pixel::new(parse(x)?, parse(y)?))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Boundary interchange
// ---------------------------------------------------------------------------

/// Serializes a boundary as one line per loop — the outer loop first —
/// with each line the comma-separated flat list of corner coordinates
/// `x,y,x,y,...`.
pub fn serialize_boundary(b: &Boundary) -> String {
    assert!(
        b.loops.first().is_some_and(|l| l.outer) && b.loops.iter().skip(1).all(|l| !l.outer),
        "boundaries store the outer loop first"
    );
    let mut out = String::new();
    for l in &b.loops {
        let flat: Vec<String> = l
            .corners
            .iter()
            .flat_map(|&(x, y)| [x.to_string(), y.to_string()])
            .collect();
        out.push_str(&flat.join(","));
        out.push('\n');
    }
    out
}

/// Parses the boundary form written by [`serialize_boundary`].
///
/// Checks that each line holds an even number of at least eight
/// integers, that consecutive corners share exactly one axis, and that
/// the walk orientation matches the loop's role (the outer loop encloses
/// positive area, holes negative).
pub fn parse_boundary(text: &str) -> Result<Boundary, FormatError> {
    let mut loops = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let nums: Vec<i32> = line
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i32>()
                    .map_err(|_| syntax(i + 1, format!("bad coordinate {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        if nums.len() % 2 != 0 || nums.len() < 8 {
            return Err(syntax(
                i + 1,
                "a loop needs an even list of at least eight coordinates",
            ));
        }
        let corners: Vec<(i32, i32)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
        for k in 0..corners.len() {
            let a = corners[k];
            let b = corners[(k + 1) % corners.len()];
            if (a.0 == b.0) == (a.1 == b.1) {
                return Err(syntax(
                    i + 1,
                    format!("corners {a:?} and {b:?} do not share exactly one axis"),
                ));
            }
        }
        let outer = loops.is_empty();
        let l = BoundaryLoop { corners, outer };
        let area = l.signed_area2();
        if outer && area <= 0 {
            return Err(syntax(i + 1, "outer loop must wind counterclockwise"));
        }
        if !outer && area >= 0 {
            return Err(syntax(i + 1, "hole loops must wind clockwise"));
        }
        loops.push(l);
    }
    if loops.is_empty() {
        return Err(FormatError::Invalid("boundary text holds no loops".into()));
    }
    Ok(Boundary { loops })
}

// ---------------------------------------------------------------------------
// Automaton tables
// ---------------------------------------------------------------------------

/// Letter names for tilt automata, positionally matching the move
/// directions.
pub const TILT_LETTER_NAMES: [&str; 4] = ["U", "D", "L", "R"];

/// An automaton together with its letter names and the optional initial
/// and accepting decoration from the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonFile {
    pub automaton: SemiAutomaton,
    pub letter_names: Vec<String>,
    pub initial: Option<usize>,
    pub accepting: Option<Vec<usize>>,
}

impl AutomatonFile {
    /// Wraps a bare transition system.
    ///
    /// # Panics
    ///
    /// If the name count does not match the alphabet.
    pub fn from_semi(automaton: SemiAutomaton, letter_names: Vec<String>) -> AutomatonFile {
        assert_eq!(
            automaton.alphabet_len(),
            letter_names.len(),
            "one name per letter"
        );
        AutomatonFile {
            automaton,
            letter_names,
            initial: None,
            accepting: None,
        }
    }

    /// Wraps an acceptor, keeping its initial and accepting states.
    pub fn from_acceptor(acceptor: &Acceptor, letter_names: Vec<String>) -> AutomatonFile {
        let mut f = AutomatonFile::from_semi(acceptor.automaton().clone(), letter_names);
        f.initial = Some(acceptor.initial());
        f.accepting = Some(acceptor.accepting().to_vec());
        f
    }

    /// Rebuilds the acceptor when the decoration is present.
    pub fn to_acceptor(&self) -> Result<Acceptor, FormatError> {
        let initial = self
            .initial
            .ok_or_else(|| FormatError::Invalid("automaton text has no initial state".into()))?;
        let accepting = self
            .accepting
            .clone()
            .ok_or_else(|| FormatError::Invalid("automaton text has no accepting states".into()))?;
        Ok(Acceptor::new(self.automaton.clone(), initial, accepting)?)
    }

    /// Serializes to the canonical table: `states:`/`alphabet:` headers,
    /// optional `initial:`/`accepting:` lines, then one `src letter dst`
    /// line per transition, source-major.
    pub fn serialize(&self) -> String {
        let mut out = format!("states: {}\n", self.automaton.state_count());
        let _ = writeln!(out, "alphabet: {}", self.letter_names.join(","));
        if let Some(i) = self.initial {
            let _ = writeln!(out, "initial: {i}");
        }
        if let Some(acc) = &self.accepting {
            let list: Vec<String> = acc.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "accepting: {}", list.join(","));
        }
        for src in 0..self.automaton.state_count() {
            for (letter, name) in self.letter_names.iter().enumerate() {
                let _ = writeln!(out, "{src} {name} {}", self.automaton.next(src, letter));
            }
        }
        out
    }

    /// Parses the table form written by [`AutomatonFile::serialize`].
    ///
    /// Headers may appear in any order before the body; the body must
    /// define every `(source, letter)` transition exactly once.
    pub fn parse(text: &str) -> Result<AutomatonFile, FormatError> {
        let mut states: Option<usize> = None;
        let mut letter_names: Option<Vec<String>> = None;
        let mut initial = None;
        let mut accepting = None;
        let mut body: Vec<(usize, usize, String, String)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "states" => {
                        states = Some(value.parse::<usize>().map_err(|_| {
                            syntax(i + 1, format!("bad state count {value:?}"))
                        })?);
                    }
                    "alphabet" => {
                        let names: Vec<String> =
                            value.split(',').map(|s| s.trim().to_owned()).collect();
                        if names.iter().any(|n| n.is_empty()) {
                            return Err(syntax(i + 1, "empty letter name"));
                        }
                        letter_names = Some(names);
                    }
                    "initial" => {
                        initial = Some(value.parse::<usize>().map_err(|_| {
                            syntax(i + 1, format!("bad initial state {value:?}"))
                        })?);
                    }
                    "accepting" => {
                        let list: Vec<usize> = if value.is_empty() {
                            Vec::new()
                        } else {
                            value
                                .split(',')
                                .map(|s| {
                                    s.trim().parse::<usize>().map_err(|_| {
                                        syntax(i + 1, format!("bad accepting state {s:?}"))
                                    })
                                })
                                .collect::<Result<_, _>>()?
                        };
                        accepting = Some(list);
                    }
                    other => return Err(syntax(i + 1, format!("unknown header {other:?}"))),
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let (src, name, dst) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), Some(c), None) => (a, b, c),
                _ => return Err(syntax(i + 1, "expected `src letter dst`")),
            };
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| syntax(i + 1, format!("bad state {s:?}")))
            };
            body.push((num(src)?, num(dst)?, name.to_owned(), line.to_owned()));
        }

        let states =
            states.ok_or_else(|| FormatError::Invalid("missing `states:` header".into()))?;
        let letter_names =
            letter_names.ok_or_else(|| FormatError::Invalid("missing `alphabet:` header".into()))?;
        let letter_of: HashMap<&str, usize> = letter_names
            .iter()
            .enumerate()
            .map(|(k, n)| (n.as_str(), k))
            .collect();
        if letter_of.len() != letter_names.len() {
            return Err(FormatError::Invalid("duplicate letter name".into()));
        }

        let mut table: Vec<Option<usize>> = vec![None; states * letter_names.len()];
        for (src, dst, name, line) in body {
            let letter = *letter_of
                .get(name.as_str())
                .ok_or_else(|| FormatError::Invalid(format!("unknown letter in {line:?}")))?;
            if src >= states || dst >= states {
                return Err(FormatError::Invalid(format!("state out of range in {line:?}")));
            }
            let slot = &mut table[letter * states + src];
            if slot.is_some() {
                return Err(FormatError::Invalid(format!("duplicate transition {line:?}")));
            }
            *slot = Some(dst);
        }
        let mut rows = Vec::with_capacity(letter_names.len());
        for letter in 0..letter_names.len() {
            let row: Option<Vec<usize>> =
                (0..states).map(|s| table[letter * states + s]).collect();
            let row = row.ok_or_else(|| {
                FormatError::Invalid(format!(
                    "incomplete table: letter {:?} lacks a transition",
                    letter_names[letter]
                ))
            })?;
            rows.push(row);
        }
        Ok(AutomatonFile {
            automaton: SemiAutomaton::new(states, rows)?,
            letter_names,
            initial,
            accepting,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{extract_boundary, materialize, parse_grid};
    use crate::sampling::{random_automaton, rng_from_seed};

    #[test]
    fn grids_round_trip_through_render() {
        for text in ["#\n", "oo\n##\n", "X@\n#oo\n", "..#\n###\n#\n"] {
            let (p, c, t) = parse_grid(text).unwrap();
            assert_eq!(render_ascii(&p, &c, &t), text);
        }
    }

    #[test]
    fn rendering_translates_to_the_origin() {
        let (p, c, t) = parse_grid("...\n.#.\n").unwrap();
        assert_eq!(render_ascii(&p, &c, &t), "#\n");
    }

    #[test]
    fn instance_files_round_trip_with_metadata() {
        let (p, c, t) = parse_grid("o#X\n###\n").unwrap();
        let mut f = InstanceFile::new(p, c, t);
        f.set("model", "ft-merge");
        f.set_pixels("reps", &[Pixel::new(0, 1), Pixel::new(2, 0)]);
        let text = f.serialize();
        let back = InstanceFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.serialize(), text);
        assert_eq!(back.get("model"), Some("ft-merge"));
        assert_eq!(
            back.pixel_list("reps").unwrap().unwrap(),
            vec![Pixel::new(0, 1), Pixel::new(2, 0)]
        );
        assert!(back.pixel_list("absent").is_none());
    }

    #[test]
    fn instance_files_without_metadata_have_no_separator() {
        let (p, c, t) = parse_grid("##\n").unwrap();
        let f = InstanceFile::new(p, c, t);
        assert_eq!(f.serialize(), "##\n");
        assert_eq!(InstanceFile::parse("##\n").unwrap(), f);
    }

    #[test]
    fn malformed_metadata_reports_its_line() {
        let err = InstanceFile::parse("##\n---\nnonsense\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 3,
                message: "expected `key: value`".into()
            }
        );
    }

    #[test]
    fn boundaries_round_trip_including_holes() {
        for grid in ["##\n##\n", "###\n#.#\n###\n"] {
            let p = parse_grid(grid).unwrap().0;
            let b = extract_boundary(&p);
            let text = serialize_boundary(&b);
            let back = parse_boundary(&text).unwrap();
            assert_eq!(serialize_boundary(&back), text);
            let q = materialize(&back, 1 << 10).unwrap();
            assert_eq!(q.pixels(), p.pixels());
        }
    }

    #[test]
    fn boundary_parse_rejects_malformed_lines() {
        assert!(matches!(
            parse_boundary("0,0,3,0,3\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_boundary("0,0,1,1,2,0,0,0\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        // Clockwise outer walk: the rectangle corners in reverse.
        assert!(matches!(
            parse_boundary("0,0,0,1,2,1,2,0\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(parse_boundary("\n").is_err());
    }

    #[test]
    fn automaton_tables_round_trip() {
        let mut rng = rng_from_seed(42);
        for _ in 0..10 {
            let a = random_automaton(&mut rng, 5, 2);
            let f = AutomatonFile::from_semi(a, vec!["0".into(), "1".into()]);
            let text = f.serialize();
            let back = AutomatonFile::parse(&text).unwrap();
            assert_eq!(back, f);
            assert_eq!(back.serialize(), text);
        }
    }

    #[test]
    fn acceptor_decoration_survives_the_round_trip() {
        let a = SemiAutomaton::new(3, vec![vec![1, 2, 2], vec![0, 1, 2]]).unwrap();
        let acc = Acceptor::new(a, 0, vec![1]).unwrap();
        let f = AutomatonFile::from_acceptor(&acc, vec!["0".into(), "1".into()]);
        let back = AutomatonFile::parse(&f.serialize()).unwrap();
        assert_eq!(back.initial, Some(0));
        assert_eq!(back.accepting, Some(vec![1]));
        let acc2 = back.to_acceptor().unwrap();
        assert!(acc2.accepts(&[0]));
        assert!(!acc2.accepts(&[0, 0]));
    }

    #[test]
    fn automaton_parse_rejects_bad_tables() {
        let ok = "states: 2\nalphabet: U,D\n0 U 1\n0 D 0\n1 U 1\n1 D 0\n";
        assert!(AutomatonFile::parse(ok).is_ok());
        let missing = "states: 2\nalphabet: U,D\n0 U 1\n0 D 0\n1 U 1\n";
        assert!(matches!(
            AutomatonFile::parse(missing),
            Err(FormatError::Invalid(_))
        ));
        let dup = format!("{ok}1 D 0\n");
        assert!(matches!(
            AutomatonFile::parse(&dup),
            Err(FormatError::Invalid(_))
        ));
        let unknown = "states: 1\nalphabet: U\n0 Q 0\n";
        assert!(matches!(
            AutomatonFile::parse(unknown),
            Err(FormatError::Invalid(_))
        ));
        let headerless = "0 U 0\n";
        assert!(AutomatonFile::parse(headerless).is_err());
    }
}

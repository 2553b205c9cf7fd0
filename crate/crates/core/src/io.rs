//! Text formats for facet lists and BBC sequences.
//!
//! One face per line. Lines starting with `#` and trailing `# ...` comments
//! are ignored. Three encodings exist:
//!
//! * `sign`: a cube face such as `0+-0`;
//! * `complement`: a simplicial face as its complement 0/1 vector, `00110`;
//! * `vertices`: a simplicial face as a vertex list, `1 2 5`, or, with the
//!   encoding given explicitly, a run of single-digit labels such as `01234`.
//!
//! Without an explicit encoding the format is detected per line: `+`/`-`
//! means sign vectors, several whitespace-separated tokens mean a vertex
//! list, and a single token of `0`/`1` characters means a complement vector.
//! Any other single token is ambiguous and rejected.
//!
//! BBC sequence files hold one ball per block; blocks are separated by blank
//! lines or by lines starting with `ball`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bbc::{validate_bbc, BbcSequence};
use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::face::{SignVector, VertexSet, MAX_AMBIENT};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Encoding {
    #[default]
    Auto,
    Vertices,
    Complement,
    Sign,
}

impl FromStr for Encoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Self::Auto),
            "vertices" => Ok(Self::Vertices),
            "complement" => Ok(Self::Complement),
            "sign" => Ok(Self::Sign),
            other => Err(Error::InvalidParameters(format!("unknown encoding {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    One,
}

impl IndexBase {
    pub fn from_int(b: u8) -> Result<Self> {
        match b {
            0 => Ok(Self::Zero),
            1 => Ok(Self::One),
            other => Err(Error::InvalidParameters(format!(
                "index base must be 0 or 1 (got {other})"
            ))),
        }
    }

    fn offset(self) -> usize {
        match self {
            Self::Zero => 0,
            Self::One => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedComplex {
    Simplicial(SimplicialComplex),
    Cubical(CubicalComplex),
}

enum Line {
    Sign(SignVector),
    Complement(VertexSet),
    Vertices(Vec<usize>),
}

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

fn parse_line(text: &str, line: usize, encoding: Encoding, base: IndexBase) -> Result<Line> {
    let err = |reason: String| Error::Parse { line, reason };
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let encoding = match encoding {
        Encoding::Auto => {
            if text.contains(['+', '-']) {
                Encoding::Sign
            } else if tokens.len() > 1 {
                Encoding::Vertices
            } else if text.chars().all(|c| c == '0' || c == '1') {
                Encoding::Complement
            } else {
                return Err(err(format!(
                    "{text:?} is ambiguous; pass an explicit encoding (vertices or complement)"
                )));
            }
        }
        e => e,
    };
    match encoding {
        Encoding::Sign => text
            .parse::<SignVector>()
            .map(Line::Sign)
            .map_err(|e| err(e.to_string())),
        Encoding::Complement => VertexSet::from_complement_str(text)
            .map(Line::Complement)
            .map_err(|e| err(e.to_string())),
        Encoding::Vertices => {
            let labels: Vec<usize> = if tokens.len() == 1 && text.chars().all(|c| c.is_ascii_digit()) && text.len() > 1
            {
                text.chars().map(|c| c as usize - '0' as usize).collect()
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad vertex label {t:?}"))))
                    .collect::<Result<_>>()?
            };
            labels
                .into_iter()
                .map(|l| {
                    l.checked_sub(base.offset())
                        .ok_or_else(|| err(format!("label {l} below index base {}", base.offset())))
                })
                .collect::<Result<Vec<_>>>()
                .map(Line::Vertices)
        }
        Encoding::Auto => unreachable!(),
    }
}

fn parse_lines<'a>(
    lines: impl IntoIterator<Item = (usize, &'a str)>,
    encoding: Encoding,
    base: IndexBase,
    n_vertices: Option<usize>,
) -> Result<ParsedComplex> {
    let mut signs = Vec::new();
    let mut complements = Vec::new();
    let mut vertex_lists: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut first_line = 0;
    for (no, raw) in lines {
        let text = content(raw);
        if text.is_empty() {
            continue;
        }
        if first_line == 0 {
            first_line = no;
        }
        match parse_line(text, no, encoding, base)? {
            Line::Sign(s) => signs.push((no, s)),
            Line::Complement(c) => complements.push((no, c)),
            Line::Vertices(v) => vertex_lists.push((no, v)),
        }
    }
    let kinds = [!signs.is_empty(), !complements.is_empty(), !vertex_lists.is_empty()];
    if kinds.iter().filter(|&&k| k).count() > 1 {
        return Err(Error::Parse {
            line: first_line,
            reason: "mixed face encodings".into(),
        });
    }
    if !signs.is_empty() {
        let n = signs[0].1.ambient_dim();
        if let Some((no, s)) = signs.iter().find(|(_, s)| s.ambient_dim() != n) {
            return Err(Error::Parse {
                line: *no,
                reason: format!("{s} has length {} (expected {n})", s.ambient_dim()),
            });
        }
        return CubicalComplex::from_facets(n, signs.into_iter().map(|(_, s)| s)).map(ParsedComplex::Cubical);
    }
    if !complements.is_empty() {
        let n = complements[0].1.ambient();
        if let Some((no, c)) = complements.iter().find(|(_, c)| c.ambient() != n) {
            return Err(Error::Parse {
                line: *no,
                reason: format!("vector of length {} (expected {n})", c.ambient()),
            });
        }
        return SimplicialComplex::from_facets(n, complements.into_iter().map(|(_, c)| c))
            .map(ParsedComplex::Simplicial);
    }
    let max_label = vertex_lists.iter().flat_map(|(_, v)| v.iter().copied()).max();
    let n = match (n_vertices, max_label) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    if n > MAX_AMBIENT {
        return Err(Error::AmbientOutOfRange(n));
    }
    let mut masks = Vec::with_capacity(vertex_lists.len());
    for (no, labels) in vertex_lists {
        let set = VertexSet::from_vertices(n, labels).map_err(|e| Error::Parse {
            line: no,
            reason: e.to_string(),
        })?;
        masks.push(set.members());
    }
    SimplicialComplex::from_masks(n, masks).map(ParsedComplex::Simplicial)
}

/// Parses a facet list. For vertex lists the vertex range is the largest
/// label plus one.
pub fn parse_complex(text: &str, encoding: Encoding, base: IndexBase) -> Result<ParsedComplex> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)), encoding, base, None)
}

pub fn parse_simplicial(text: &str, encoding: Encoding, base: IndexBase) -> Result<SimplicialComplex> {
    match parse_complex(text, encoding, base)? {
        ParsedComplex::Simplicial(s) => Ok(s),
        ParsedComplex::Cubical(_) => Err(Error::Parse {
            line: 1,
            reason: "expected simplicial faces".into(),
        }),
    }
}

pub fn parse_cubical(text: &str) -> Result<CubicalComplex> {
    match parse_complex(text, Encoding::Sign, IndexBase::Zero)? {
        ParsedComplex::Cubical(c) => Ok(c),
        ParsedComplex::Simplicial(_) => unreachable!("sign encoding yields cubical complexes"),
    }
}

/// Parses a BBC sequence: one ball per block. The ball `T_i` of the `j`-th
/// block (0-based) gets the vertex range `d + j`, where `d` is the facet size
/// of the first ball.
pub fn parse_bbc_sequence(text: &str, encoding: Encoding, base: IndexBase) -> Result<BbcSequence> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        let is_separator = trimmed.is_empty() || trimmed.starts_with("ball");
        if is_separator {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
        } else if !content(raw).is_empty() {
            blocks.last_mut().unwrap().push((i + 1, raw));
        }
    }
    blocks.retain(|b| !b.is_empty());
    let first = blocks.first().ok_or(Error::EmptyComplex)?;
    let first_complex = match parse_lines(first.iter().copied(), encoding, base, None)? {
        ParsedComplex::Simplicial(s) => s,
        ParsedComplex::Cubical(_) => {
            return Err(Error::Parse {
                line: first[0].0,
                reason: "BBC balls are simplicial".into(),
            })
        }
    };
    let d = first_complex.pure_facet_size().ok_or(Error::Parse {
        line: first[0].0,
        reason: "first ball is not pure".into(),
    })?;
    let mut balls = Vec::with_capacity(blocks.len());
    for (j, block) in blocks.iter().enumerate() {
        let n = d + j;
        let ball = match parse_lines(block.iter().copied(), encoding, base, Some(n))? {
            ParsedComplex::Simplicial(s) if s.n_vertices() == n => s,
            ParsedComplex::Simplicial(s) => s.with_vertex_range(n).map_err(|e| Error::Parse {
                line: block[0].0,
                reason: format!("ball {j} does not fit on {n} vertices: {e}"),
            })?,
            ParsedComplex::Cubical(_) => {
                return Err(Error::Parse {
                    line: block[0].0,
                    reason: "BBC balls are simplicial".into(),
                })
            }
        };
        balls.push(ball);
    }
    validate_bbc(balls, d)
}

/// Canonical text of a cubical complex: sorted facets, one per line.
pub fn serialize_cubical(c: &CubicalComplex) -> String {
    let mut lines: Vec<String> = c.facets().iter().map(|f| f.to_string()).collect();
    lines.sort();
    let mut out = String::new();
    for l in lines {
        writeln!(out, "{l}").unwrap();
    }
    out
}

/// Canonical text of a simplicial complex in the requested encoding
/// (`complement` by default; `vertices` writes space-separated labels).
pub fn serialize_simplicial(s: &SimplicialComplex, encoding: Encoding, base: IndexBase) -> String {
    let mut lines: Vec<String> = match encoding {
        Encoding::Vertices => s
            .facets()
            .map(|f| {
                f.vertices()
                    .map(|v| (v + base.offset()).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect(),
        _ => s.facets().map(|f| f.to_complement_string()).collect(),
    };
    lines.sort();
    let mut out = String::new();
    for l in lines {
        writeln!(out, "{l}").unwrap();
    }
    out
}

pub fn serialize_bbc_sequence(seq: &BbcSequence) -> String {
    let mut out = String::new();
    for (j, ball) in seq.balls().iter().enumerate() {
        writeln!(out, "ball {}", seq.d() + j).unwrap();
        out.push_str(&serialize_simplicial(ball, Encoding::Complement, IndexBase::Zero));
    }
    out
}

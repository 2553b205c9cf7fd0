//! Embedded reference data: the pentagon BBC sequence, the facets of the
//! neighborly cubical 3-sphere on the 6-cube graph, and the BBC sequence of
//! the Altshuler sphere.
//!
//! Payloads are kept exactly as tabulated, including the original index base
//! and one known misprint (see [`PENTAGON_BOUNDARIES`]), and converted on load.

use crate::bbc::BbcSequence;
use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::face::SignVector;
use crate::io::{parse_bbc_sequence, parse_simplicial, Encoding, IndexBase};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    BbcSequence,
    CubicalFacets,
    SimplicialFacets,
}

impl FixtureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::BbcSequence => "bbc_sequence",
            Self::CubicalFacets => "cubical_facets",
            Self::SimplicialFacets => "simplicial_facets",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub encoding: Encoding,
    pub payload: &'static str,
    pub index_base: u8,
}

/// Balls `T_3, T_4, T_5` of the pentagon sequence, complement encoded.
pub const PENTAGON_SEQUENCE: &str = "\
ball 3
000
ball 4
0010
1000
ball 5
00110
10010
11000
";

/// Boundaries `∂T_3, ∂T_4, ∂T_5` as tabulated, bases marked with `*`. The
/// last row lists `11001` twice and omits `11100`; [`pentagon_boundaries`]
/// keeps the row as printed.
pub const PENTAGON_BOUNDARIES: [&str; 3] = [
    "*001 *100 010",
    "*0011 *1001 *1100 0110",
    "00111 10011 11001 11001 01110",
];

/// Facets of the cubical 3-sphere by type; `±` stands for both signs.
pub const PENTAGON_SPHERE_PATTERNS: &str = "\
# type 3
000±--
# type 2
00±0+-
0±00--
±000+-
# type 1
00±±0+
±00±0+
±±000+
0±±00-
# type 0
00±±±0
±00±±0
±±00±0
±±±000
0±±±00
";

/// Balls `A_5, ..., A_10`, one facet per line, 0-based single-digit labels.
pub const ALTSHULER_SEQUENCE: &str = "\
ball 5
01234
ball 6
01235
01245
12345
ball 7
01236
01356
01456
12346
13456
23456
ball 8
01237
01267
01357
01457
02367
03567
04567
12347
13457
23457
ball 9
01238
01268
01358
01458
01678
02368
03568
04568
04678
13458
23458
23578
23678
35678
45678
ball 10
01239
01269
01359
01459
01489
01679
02369
03569
04569
04679
13459
13489
23459
23489
23579
23679
24589
25789
26789
35679
45679
";

/// Boundaries `∂A_5, ..., ∂A_10`; the base `B_i` of `A_{i+1}` is marked with `*`.
pub const ALTSHULER_BOUNDARIES: [&str; 6] = [
    "*0123 *0124 0134 0234 *1234",
    "*0123 0124 *0135 *0145 0235 \
     0245 *1234 *1345 *2345",
    "*0123 *0126 *0135 *0145 0146 \
     *0236 *0356 *0456 *1234 1246 \
     *1345 *2345 2356 2456",
    "*0123 *0126 *0135 *0145 0147 \
     *0167 *0236 *0356 *0456 *0467 \
     1234 1247 1267 *1345 *2345 \
     *2357 *2367 2457 *3567 *4567",
    "*0123 *0126 *0135 *0145 *0148 \
     *0167 0178 *0236 *0356 *0456 \
     *0467 0478 1238 1268 *1345 \
     *1348 1678 *2345 *2348 *2357 \
     *2367 *2458 *2578 *2678 *3567 \
     *4567 4578",
    "0123 0126 0135 0145 0148 \
     0167 0179 0189 0236 0356 \
     0456 0467 0479 0489 1239 \
     1269 1345 1348 1389 1679 \
     2345 2348 2357 2367 2389 \
     2458 2578 2678 2689 3567 \
     4567 4579 4589 5789 6789",
];

pub const FIXTURES: [Fixture; 3] = [
    Fixture {
        name: "pentagon",
        kind: FixtureKind::BbcSequence,
        encoding: Encoding::Complement,
        payload: PENTAGON_SEQUENCE,
        index_base: 1,
    },
    Fixture {
        name: "pentagon-sphere",
        kind: FixtureKind::CubicalFacets,
        encoding: Encoding::Sign,
        payload: PENTAGON_SPHERE_PATTERNS,
        index_base: 1,
    },
    Fixture {
        name: "altshuler",
        kind: FixtureKind::BbcSequence,
        encoding: Encoding::Vertices,
        payload: ALTSHULER_SEQUENCE,
        index_base: 0,
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

pub enum FixtureData {
    Sequence(BbcSequence),
    Cubical(CubicalComplex),
}

impl Fixture {
    fn base(&self) -> IndexBase {
        IndexBase::from_int(self.index_base).expect("fixture index base is 0 or 1")
    }

    pub fn load(&self) -> Result<FixtureData> {
        match self.kind {
            FixtureKind::BbcSequence => {
                parse_bbc_sequence(self.payload, self.encoding, self.base()).map(FixtureData::Sequence)
            }
            FixtureKind::CubicalFacets => expand_patterns(self.payload).map(FixtureData::Cubical),
            FixtureKind::SimplicialFacets => Err(Error::Internal("no simplicial fixtures".into())),
        }
    }
}

/// Expands rows of `0`, `+`, `-`, `±` into all matching sign vectors.
pub fn expand_patterns(text: &str) -> Result<CubicalComplex> {
    let mut facets = Vec::new();
    let mut n = None;
    for (no, raw) in text.lines().enumerate() {
        let row = raw.split('#').next().unwrap_or("").trim();
        if row.is_empty() {
            continue;
        }
        let chars: Vec<char> = row.chars().collect();
        if *n.get_or_insert(chars.len()) != chars.len() {
            return Err(Error::Parse {
                line: no + 1,
                reason: "row length differs".into(),
            });
        }
        let mut partial = vec![String::new()];
        for c in chars {
            let options: &[char] = match c {
                '0' | '+' | '-' => &[c][..],
                '±' => &['+', '-'],
                other => {
                    return Err(Error::Parse {
                        line: no + 1,
                        reason: format!("bad pattern character {other:?}"),
                    })
                }
            };
            partial = partial
                .into_iter()
                .flat_map(|p| options.iter().map(move |o| format!("{p}{o}")))
                .collect();
        }
        for p in partial {
            facets.push(p.parse::<SignVector>().map_err(|e| Error::Parse {
                line: no + 1,
                reason: e.to_string(),
            })?);
        }
    }
    CubicalComplex::from_facets(n.unwrap_or(0), facets)
}

/// One tabulated boundary row: the listed facets and the marked subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedBoundary {
    pub listed: Vec<u64>,
    pub marked: SimplicialComplex,
}

fn parse_marked(row: &str, n: usize, encoding: Encoding) -> Result<MarkedBoundary> {
    let mut listed = Vec::new();
    let mut marked = String::new();
    for token in row.split_whitespace() {
        let (bold, face) = match token.strip_prefix('*') {
            Some(f) => (true, f),
            None => (false, token),
        };
        let s = parse_simplicial(face, encoding, IndexBase::Zero)?.with_vertex_range(n)?;
        listed.push(s.facet_masks()[0]);
        if bold {
            marked.push_str(face);
            marked.push('\n');
        }
    }
    let marked = if marked.is_empty() {
        SimplicialComplex::from_masks(n, std::iter::empty())?
    } else {
        parse_simplicial(&marked, encoding, IndexBase::Zero)?.with_vertex_range(n)?
    };
    Ok(MarkedBoundary { listed, marked })
}

pub fn pentagon_sequence() -> BbcSequence {
    parse_bbc_sequence(PENTAGON_SEQUENCE, Encoding::Complement, IndexBase::One).expect("pentagon fixture is valid")
}

pub fn pentagon_boundaries() -> Vec<MarkedBoundary> {
    PENTAGON_BOUNDARIES
        .iter()
        .enumerate()
        .map(|(j, row)| parse_marked(row, 3 + j, Encoding::Complement).expect("pentagon boundary row parses"))
        .collect()
}

pub fn pentagon_sphere() -> CubicalComplex {
    expand_patterns(PENTAGON_SPHERE_PATTERNS).expect("pattern fixture is valid")
}

/// The BBC sequence `A_5, ..., A_10` of the Altshuler sphere (`d = 5`, `n = 11`).
pub fn altshuler_sequence() -> BbcSequence {
    parse_bbc_sequence(ALTSHULER_SEQUENCE, Encoding::Vertices, IndexBase::Zero).expect("Altshuler fixture is valid")
}

pub fn altshuler_boundaries() -> Vec<MarkedBoundary> {
    ALTSHULER_BOUNDARIES
        .iter()
        .enumerate()
        .map(|(j, row)| parse_marked(row, 5 + j, Encoding::Vertices).expect("Altshuler boundary row parses"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbc::{bbc_from_cyclic, build_direct};

    #[test]
    fn altshuler_counts_and_apex() {
        let seq = altshuler_sequence();
        assert_eq!((seq.d(), seq.n()), (5, 11));
        assert_eq!(seq.ball(10).num_facets(), 21);
        let rows = altshuler_boundaries();
        assert_eq!(rows[5].listed.len(), 35);
        for i in 6..=10 {
            assert!(
                seq.ball(i).facet_masks().iter().all(|f| f >> (i - 1) & 1 == 1),
                "apex of A_{i}"
            );
        }
    }

    #[test]
    fn altshuler_boundaries_match_rows() {
        let seq = altshuler_sequence();
        for (j, row) in altshuler_boundaries().iter().enumerate() {
            let i = 5 + j;
            let computed = seq.ball(i).boundary().unwrap();
            let mut listed = row.listed.clone();
            listed.sort_unstable();
            assert_eq!(computed.facet_masks(), &listed[..], "boundary of A_{i}");
            if i < 10 {
                assert_eq!(seq.base(i + 1).unwrap(), row.marked, "marked base in row A_{i}");
            } else {
                assert!(row.marked.is_void());
            }
        }
    }

    #[test]
    fn pentagon_rows() {
        let seq = pentagon_sequence();
        assert_eq!(seq, bbc_from_cyclic(3, 6).unwrap());
        let rows = pentagon_boundaries();
        for (j, row) in rows.iter().enumerate().take(2) {
            let i = 3 + j;
            let mut listed = row.listed.clone();
            listed.sort_unstable();
            assert_eq!(seq.ball(i).boundary().unwrap().facet_masks(), &listed[..]);
            assert_eq!(seq.base(i + 1).unwrap(), row.marked);
        }
        // the printed last row repeats 11001 in place of 11100
        let computed = seq.ball(5).boundary().unwrap();
        let missing: Vec<u64> = computed
            .facet_masks()
            .iter()
            .copied()
            .filter(|f| !rows[2].listed.contains(f))
            .collect();
        assert_eq!(missing, vec![0b11000]);
        assert_eq!(rows[2].listed.len(), 5);
    }

    #[test]
    fn pattern_table_is_the_direct_construction() {
        let s = pentagon_sphere();
        assert_eq!(s.num_facets(), 64);
        assert_eq!(s, build_direct(&bbc_from_cyclic(3, 6).unwrap()).unwrap());
    }

    #[test]
    fn all_fixtures_load() {
        for f in &FIXTURES {
            f.load().unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
        assert!(fixture("altshuler").is_some());
        assert!(fixture("nope").is_none());
    }
}

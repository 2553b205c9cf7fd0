//! Faces of the `n`-cube as sign vectors and faces of simplices as vertex sets.
//!
//! A non-empty face of the `n`-cube is a vector in `{-1, 0, +1}^n`; its
//! dimension is the number of zero entries. A vector is stored as a pair of
//! `n`-bit masks: the support (bit `i` set iff entry `i` is non-zero) and the
//! sign (bit `i` set iff entry `i` is `-1`). Sign bits outside the support are
//! always cleared, so equality and hashing are plain mask comparisons.
//!
//! Text form uses `+`, `-` and `0`, with entry `1` leftmost.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{bits, k_subsets, low_mask, submasks};
use crate::error::{Error, Result};

pub const MAX_AMBIENT: usize = 64;

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_AMBIENT {
        Err(Error::AmbientOutOfRange(n))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    n: u8,
    support: u64,
    sign: u64,
}

impl SignVector {
    /// Builds a face from raw masks, clearing sign bits outside the support.
    pub fn from_masks(n: usize, support: u64, sign: u64) -> Result<Self> {
        check_ambient(n)?;
        let full = low_mask(n);
        if support & !full != 0 || sign & !full != 0 {
            return Err(Error::AmbientOutOfRange(n));
        }
        Ok(Self::from_masks_unchecked(n, support, sign))
    }

    pub(crate) fn from_masks_unchecked(n: usize, support: u64, sign: u64) -> Self {
        Self {
            n: n as u8,
            support,
            sign: sign & support,
        }
    }

    pub fn from_entries(entries: &[i8]) -> Result<Self> {
        check_ambient(entries.len())?;
        let mut support = 0;
        let mut sign = 0;
        for (i, &e) in entries.iter().enumerate() {
            match e {
                0 => {}
                1 => support |= 1 << i,
                -1 => {
                    support |= 1 << i;
                    sign |= 1 << i;
                }
                other => return Err(Error::InvalidEntry(other.into())),
            }
        }
        Ok(Self::from_masks_unchecked(entries.len(), support, sign))
    }

    /// The whole cube `0...0`.
    pub fn cube(n: usize) -> Result<Self> {
        Self::from_masks(n, 0, 0)
    }

    /// A vertex of the cube; bit `i` of `negative` selects `-1` at entry `i`.
    pub fn vertex(n: usize, negative: u64) -> Result<Self> {
        Self::from_masks(n, low_mask(n), negative)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n as usize
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn sign_mask(&self) -> u64 {
        self.sign
    }

    /// Mask of the zero entries.
    pub fn zero_mask(&self) -> u64 {
        !self.support & low_mask(self.ambient_dim())
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.support.count_ones() as usize
    }

    pub fn is_vertex(&self) -> bool {
        self.dim() == 0
    }

    /// Entry `i` (0-based) as `-1`, `0` or `1`.
    pub fn entry(&self, i: usize) -> i8 {
        if self.support >> i & 1 == 0 {
            0
        } else if self.sign >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn entries(&self) -> Vec<i8> {
        (0..self.ambient_dim()).map(|i| self.entry(i)).collect()
    }

    /// The simplicial face encoded by `|self|`: the set of zero positions.
    pub fn zero_set(&self) -> VertexSet {
        VertexSet {
            n: self.n,
            members: self.zero_mask(),
        }
    }

    /// Face order of the cube: `self <= other` iff `self` agrees with `other`
    /// at every non-zero entry of `other`.
    pub fn is_subface_of(&self, other: &SignVector) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        Ok(self.le_unchecked(other))
    }

    #[inline]
    pub(crate) fn le_unchecked(&self, other: &SignVector) -> bool {
        self.support & other.support == other.support && (self.sign ^ other.sign) & other.support == 0
    }

    /// All `k`-dimensional faces of this face.
    pub fn subfaces(&self, k: usize) -> Result<Vec<SignVector>> {
        let dim = self.dim();
        if k > dim {
            return Err(Error::DimensionOutOfRange { k, max: dim });
        }
        let zeros: Vec<usize> = bits(self.zero_mask()).collect();
        let mut out = Vec::new();
        for pick in k_subsets(dim, dim - k) {
            let fixed = bits(pick).fold(0u64, |m, j| m | 1 << zeros[j]);
            for neg in submasks(fixed) {
                out.push(Self::from_masks_unchecked(
                    self.ambient_dim(),
                    self.support | fixed,
                    self.sign | neg,
                ));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Every non-empty face of this face, including itself.
    pub fn all_subfaces(&self) -> impl Iterator<Item = SignVector> + '_ {
        let zeros = self.zero_mask();
        submasks(zeros).flat_map(move |fixed| {
            submasks(fixed)
                .map(move |neg| Self::from_masks_unchecked(self.ambient_dim(), self.support | fixed, self.sign | neg))
        })
    }

    /// The `2 * dim` faces of codimension one.
    pub fn ridges(&self) -> impl Iterator<Item = SignVector> + '_ {
        bits(self.zero_mask()).flat_map(move |i| {
            let bit = 1u64 << i;
            [0, bit]
                .into_iter()
                .map(move |neg| Self::from_masks_unchecked(self.ambient_dim(), self.support | bit, self.sign | neg))
        })
    }

    /// Entry-wise product with the `±1` vector whose `-1` entries are the set
    /// bits of `negative`.
    pub fn flip(&self, negative: u64) -> SignVector {
        Self::from_masks_unchecked(self.ambient_dim(), self.support, self.sign ^ negative)
    }

    /// Entry-wise product with a full-support `±1` vector.
    pub fn sign_flip(&self, eps: &SignVector) -> Result<SignVector> {
        if eps.n != self.n {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim(),
                right: eps.ambient_dim(),
            });
        }
        if !eps.is_vertex() {
            return Err(Error::InvalidParameters(format!("{eps} is not a ±1 vector")));
        }
        Ok(self.flip(eps.sign))
    }

    /// Appends one entry at the end (index `n`).
    pub fn push(&self, entry: i8) -> Result<SignVector> {
        let n = self.ambient_dim();
        check_ambient(n + 1)?;
        let bit = 1u64 << n;
        let (support, sign) = match entry {
            0 => (self.support, self.sign),
            1 => (self.support | bit, self.sign),
            -1 => (self.support | bit, self.sign | bit),
            other => return Err(Error::InvalidEntry(other.into())),
        };
        Ok(Self::from_masks_unchecked(n + 1, support, sign))
    }

    /// Drops the last entry.
    pub fn truncate_last(&self) -> SignVector {
        let n = self.ambient_dim() - 1;
        let keep = low_mask(n);
        Self::from_masks_unchecked(n, self.support & keep, self.sign & keep)
    }

    /// Entries in reverse order.
    pub fn reversed(&self) -> SignVector {
        let n = self.ambient_dim();
        let rev = |m: u64| m.reverse_bits() >> (64 - n);
        Self::from_masks_unchecked(n, rev(self.support), rev(self.sign))
    }

    /// Number of trailing non-zero entries.
    pub fn trailing_nonzeros(&self) -> usize {
        let n = self.ambient_dim();
        let shifted = self.support << (64 - n);
        shifted.leading_ones() as usize
    }

    /// Number of leading non-zero entries.
    pub fn leading_nonzeros(&self) -> usize {
        self.support.trailing_ones().min(self.n as u32) as usize
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.ambient_dim() {
            let c = match self.entry(i) {
                0 => '0',
                1 => '+',
                _ => '-',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut entries = Vec::with_capacity(s.len());
        for (col, c) in s.chars().enumerate() {
            entries.push(match c {
                '+' => 1,
                '-' => -1,
                '0' => 0,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        reason: format!("unexpected character {other:?} at column {}", col + 1),
                    })
                }
            });
        }
        Self::from_entries(&entries)
    }
}

/// A subset of `{0, .., n-1}`. Its complement encoding is the 0/1 vector of
/// length `n` with a `1` exactly at the non-members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexSet {
    n: u8,
    members: u64,
}

impl VertexSet {
    pub fn new(n: usize, members: u64) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::AmbientOutOfRange(n));
        }
        if members & !low_mask(n) != 0 {
            let vertex = (64 - members.leading_zeros() - 1) as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self { n: n as u8, members })
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = 0u64;
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            members |= 1 << v;
        }
        Self::new(n, members)
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> u64 {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.members >> v & 1 == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        bits(self.members)
    }

    /// Characteristic vector of the complement, as a mask.
    pub fn complement_encode(&self) -> u64 {
        !self.members & low_mask(self.ambient())
    }

    pub fn complement_decode(n: usize, encoded: u64) -> Result<Self> {
        if n > MAX_AMBIENT || encoded & !low_mask(n) != 0 {
            return Err(Error::AmbientOutOfRange(n));
        }
        Ok(Self {
            n: n as u8,
            members: !encoded & low_mask(n),
        })
    }

    /// Complement encoding as a `0`/`1` string, position `1` leftmost.
    pub fn to_complement_string(&self) -> String {
        let enc = self.complement_encode();
        (0..self.ambient())
            .map(|i| if enc >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn from_complement_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut enc = 0u64;
        let mut n = 0;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => enc |= 1 << i.min(63),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        reason: format!("unexpected character {other:?} in complement vector"),
                    })
                }
            }
            n = i + 1;
            if n > MAX_AMBIENT {
                return Err(Error::AmbientOutOfRange(n));
            }
        }
        Self::complement_decode(n, enc)
    }
}

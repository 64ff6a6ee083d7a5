//! Permutations of the six labels `1..=6`.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, ..., 6}` stored as its image list.
///
/// Products compose left to right: `(s * t)(i) = t(s(i))`. Acting on a
/// labeled configuration, `s` sends point `i` to the slot holding point `s(i)`
/// (see `Config6::relabel`), and with this product convention that action is
/// a left action.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; 6]);

impl Perm {
    pub fn identity() -> Self {
        Perm([1, 2, 3, 4, 5, 6])
    }

    pub fn from_images(images: [u8; 6]) -> Result<Self> {
        let mut seen = [false; 6];
        for &v in &images {
            if !(1..=6).contains(&v) || seen[v as usize - 1] {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[1, 2, 3], &[4, 5]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self> {
        let mut img = [1, 2, 3, 4, 5, 6];
        let mut touched = [false; 6];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if !(1..=6).contains(&a) || touched[a as usize - 1] {
                    return Err(Error::BadPermutation(format!("{cycles:?}")));
                }
                touched[a as usize - 1] = true;
                img[a as usize - 1] = cyc[(k + 1) % cyc.len()];
            }
        }
        Perm::from_images(img)
    }

    /// Image of the label `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn images(&self) -> [u8; 6] {
        self.0
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let mut img = [0u8; 6];
        for (i, v) in img.iter_mut().enumerate() {
            *v = other.0[self.0[i] as usize - 1];
        }
        Perm(img)
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; 6];
        for (i, &v) in self.0.iter().enumerate() {
            img[v as usize - 1] = i as u8 + 1;
        }
        Perm(img)
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity()
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 6];
        let mut out = Vec::new();
        for start in 1..=6u8 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start as usize - 1] = true;
            let mut cur = self.0[start as usize - 1];
            while cur != start {
                seen[cur as usize - 1] = true;
                cyc.push(cur);
                cur = self.0[cur as usize - 1];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths, sorted descending (a partition of 6).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn fixed_points(&self) -> usize {
        (1..=6).filter(|&i| self.apply(i) == i).count()
    }

    /// All 720 permutations in lexicographic order of image lists.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(720);
        let mut cur = [1u8, 2, 3, 4, 5, 6];
        loop {
            out.push(Perm(cur));
            // next lexicographic permutation
            let Some(i) = (0..5).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..6).rev().find(|&j| cur[j] > cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<u8>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: String = c.iter().map(|d| char::from(b'0' + d)).collect();
            write!(f, "({s})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses cycle notation with single-digit labels, e.g. `(123)(45)` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadPermutation(s.to_string());
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" {
            return Ok(Perm::identity());
        }
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut cur: Option<Vec<u8>> = None;
        for ch in s.chars().filter(|c| !c.is_whitespace() && *c != ',') {
            match ch {
                '(' if cur.is_none() => cur = Some(Vec::new()),
                ')' => cycles.push(cur.take().ok_or_else(bad)?),
                d @ '1'..='6' => cur.as_mut().ok_or_else(bad)?.push(d as u8 - b'0'),
                _ => return Err(bad()),
            }
        }
        if cur.is_some() {
            return Err(bad());
        }
        let refs: Vec<&[u8]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(&refs)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(de::Error::custom)
    }
}

//! Signed permutations in one-line notation: the elements of the
//! hyperoctahedral groups W_n.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on `enumerate_group`; |W_6| = 46080 is still comfortable.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

/// An element of W_n stored as the one-line word (w(1), ..., w(n)).
///
/// Entries are signed; the defining symmetry w(-i) = -w(i) is implicit.
/// All public positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    entries: Vec<i32>,
}

/// A member of the tau invariant: either the simple reflection tag for
/// positions (j-1, j), written Simple(j), or the sign tag Prime(j) for
/// position j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    Simple(usize),
    Prime(usize),
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            entries: (1..=n as i32).collect(),
        }
    }

    /// Builds a word from its entries, rejecting anything whose absolute
    /// values are not a permutation of 1..n.
    pub fn from_entries(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::BadWord(format!("{entries:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// w(i) for a 1-based position.
    pub fn entry(&self, i: usize) -> i32 {
        assert!(i >= 1 && i <= self.n(), "position {i} out of range");
        self.entries[i - 1]
    }

    /// w(j) extended to negative arguments by w(-j) = -w(j).
    pub fn eval(&self, j: i32) -> i32 {
        assert!(j != 0 && j.unsigned_abs() as usize <= self.n());
        let v = self.entries[(j.unsigned_abs() - 1) as usize];
        if j > 0 {
            v
        } else {
            -v
        }
    }

    /// Composition (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing words of different sizes");
        let entries = (1..=self.n() as i32).map(|i| self.eval(other.eval(i))).collect();
        SignedPermutation { entries }
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0; self.n()];
        for (pos, &v) in self.entries.iter().enumerate() {
            let i = pos as i32 + 1;
            entries[(v.unsigned_abs() - 1) as usize] = if v > 0 { i } else { -i };
        }
        SignedPermutation { entries }
    }

    /// Right multiplication by the transposition of positions j and j+1.
    pub fn right_mult_s(&self, j: usize) -> Result<Self> {
        if j < 1 || j + 1 > self.n() {
            return Err(Error::IndexOutOfRange { index: j, n: self.n() });
        }
        let mut entries = self.entries.clone();
        entries.swap(j - 1, j);
        Ok(SignedPermutation { entries })
    }

    /// Right multiplication by the sign change at position j.
    pub fn right_mult_t(&self, j: usize) -> Result<Self> {
        if j < 1 || j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, n: self.n() });
        }
        let mut entries = self.entries.clone();
        entries[j - 1] = -entries[j - 1];
        Ok(SignedPermutation { entries })
    }

    /// The tau invariant at level k: Simple(j+1) marks a descent
    /// w(j) > w(j+1); Prime(j) marks a negative entry at position j <= k.
    pub fn tau(&self, k: usize) -> BTreeSet<Root> {
        let mut out = BTreeSet::new();
        for j in 1..self.n() {
            if self.entry(j) > self.entry(j + 1) {
                out.insert(Root::Simple(j + 1));
            }
        }
        for j in 1..=self.n().min(k) {
            if self.entry(j) < 0 {
                out.insert(Root::Prime(j));
            }
        }
        out
    }

    /// Extends a word of W_m to W_n by fixing positions above m.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n() {
            return Err(Error::IndexOutOfRange { index: n, n: self.n() });
        }
        let mut entries = self.entries.clone();
        entries.extend(self.n() as i32 + 1..=n as i32);
        Ok(SignedPermutation { entries })
    }

    /// Splits w = x . w' where x has a positive increasing prefix of length m
    /// and w' moves only +-1..+-m. The decomposition is unique.
    pub fn parabolic_decompose(&self, m: usize) -> Result<(Self, Self)> {
        let n = self.n();
        if m < 1 || m > n {
            return Err(Error::IndexOutOfRange { index: m, n });
        }
        let mut prefix: Vec<i32> = self.entries[..m].iter().map(|e| e.abs()).collect();
        prefix.sort_unstable();
        let mut x_entries = prefix.clone();
        x_entries.extend_from_slice(&self.entries[m..]);
        let x = SignedPermutation { entries: x_entries };
        let w_small: Vec<i32> = self.entries[..m]
            .iter()
            .map(|&e| {
                let p = prefix.binary_search(&e.abs()).expect("prefix value present") as i32 + 1;
                if e > 0 {
                    p
                } else {
                    -p
                }
            })
            .collect();
        let w_small = SignedPermutation { entries: w_small };
        debug_assert_eq!(
            x.compose(&w_small.embed(n).expect("m <= n")),
            *self,
            "parabolic factors recompose"
        );
        Ok((x, w_small))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation { entries: Vec::new() });
        }
        let entries = s
            .split(',')
            .map(|p| p.trim().parse::<i32>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<i32>>>()?;
        SignedPermutation::from_entries(entries)
    }
}

/// All 2^n n! elements of W_n in lexicographic order, where candidate values
/// at each position are ordered 1 < -1 < 2 < -2 < ...
pub fn enumerate_group(n: usize) -> Result<Vec<SignedPermutation>> {
    enumerate_group_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_group_capped(n: usize, cap: usize) -> Result<Vec<SignedPermutation>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    fill(n, &mut used, &mut word, &mut out);
    Ok(out)
}

fn fill(n: usize, used: &mut Vec<bool>, word: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
    if word.len() == n {
        out.push(SignedPermutation { entries: word.clone() });
        return;
    }
    for a in 1..=n {
        if used[a] {
            continue;
        }
        used[a] = true;
        for v in [a as i32, -(a as i32)] {
            word.push(v);
            fill(n, used, word, out);
            word.pop();
        }
        used[a] = false;
    }
}

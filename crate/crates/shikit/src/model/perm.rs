//! Permutations of `[n]` and signed permutations of `[±n]`.
//!
//! A signed permutation is stored through its window `[w(1), ..., w(n)]`;
//! the full map is determined by `w(-i) = -w(i)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<i32>,
}

impl Permutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let n = word.len() as i32;
        let mut seen = vec![false; word.len()];
        for &v in &word {
            if v < 1 || v > n || seen[(v - 1) as usize] {
                return Err(Error::InvalidWindow(format!("{word:?} is not a permutation")));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// `w(i)` for a position `i` in `[n]` (1-based).
    pub fn value(&self, i: i32) -> i32 {
        self.word[(i - 1) as usize]
    }

    /// The position `i` with `w(i) = v`.
    pub fn position_of(&self, v: i32) -> i32 {
        self.word.iter().position(|&x| x == v).map(|p| p as i32 + 1).expect("value in range")
    }

    /// All permutations of `[n]` in lexicographic order of their words.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n as i32)
            .permutations(n)
            .map(|word| Permutation { word })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `1,3,2` as well as the compact digit form `132` (single digits only).
    fn from_str(s: &str) -> Result<Self> {
        let word = parse_int_list(s)?;
        Permutation::new(word)
    }
}

/// A signed permutation given by its window `[w(1), ..., w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWindow {
    window: Vec<i32>,
}

impl SignedWindow {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len() as i32;
        let mut seen = vec![false; window.len()];
        for &v in &window {
            let a = v.abs();
            if a < 1 || a > n || seen[(a - 1) as usize] {
                return Err(Error::InvalidWindow(format!(
                    "{window:?} is not a signed permutation window"
                )));
            }
            seen[(a - 1) as usize] = true;
        }
        Ok(SignedWindow { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedWindow { window: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for a signed position `i` in `[±n]`, using `w(-i) = -w(i)`.
    pub fn value(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    /// The signed position `i` with `w(i) = v`.
    pub fn position_of(&self, v: i32) -> i32 {
        for (k, &x) in self.window.iter().enumerate() {
            if x == v {
                return k as i32 + 1;
            }
            if x == -v {
                return -(k as i32 + 1);
            }
        }
        panic!("value {v} out of range");
    }

    /// All `2^n n!` windows, in lexicographic order of their window vectors.
    pub fn all(n: usize) -> Vec<SignedWindow> {
        let mut out = Vec::new();
        for perm in (1..=n as i32).permutations(n) {
            for mask in 0..(1u32 << n) {
                let window = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if mask & (1 << k) != 0 { -v } else { v })
                    .collect();
                out.push(SignedWindow { window });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(","))
    }
}

impl FromStr for SignedWindow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let window = parse_int_list(s)?;
        SignedWindow::new(window)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if !s.contains(',') && !s.contains('-') && s.chars().all(|c| c.is_ascii_digit()) && s.len() > 1 {
        // compact digit form
        return Ok(s.chars().map(|c| c.to_digit(10).unwrap() as i32).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}` in `{s}`")))
        })
        .collect()
}

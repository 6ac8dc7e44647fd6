//! Reflected ternary Gray codes.

use crate::error::{invalid, Result};

pub const MAX_GRAY_DIGITS: usize = 12;

/// All `3^x` ternary words of length `x`, consecutive words differing in
/// exactly one digit. Digit 0 is the leftmost (most significant) one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayCode {
    digits: usize,
    flat: Vec<u8>,
    /// `rank[base3(word)]` is the word's index in the sequence.
    rank: Vec<u32>,
}

impl GrayCode {
    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn word(&self, index: usize) -> &[u8] {
        &self.flat[index * self.digits..(index + 1) * self.digits]
    }

    pub fn words(&self) -> impl Iterator<Item = &[u8]> {
        self.flat.chunks(self.digits)
    }

    /// Position of `word` in the sequence.
    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        if word.len() != self.digits || word.iter().any(|&d| d > 2) {
            return None;
        }
        Some(self.rank[base3(word)] as usize)
    }
}

fn base3(word: &[u8]) -> usize {
    word.iter().fold(0, |acc, &d| acc * 3 + d as usize)
}

/// Reflected ternary Gray code on `x` digits: the leading digit runs
/// 0, 1, 2 and the suffix sequence is traversed forward under even leading
/// digits and backward under odd ones.
pub fn ternary_gray(x: usize) -> Result<GrayCode> {
    if x == 0 || x > MAX_GRAY_DIGITS {
        return Err(invalid(format!(
            "Gray code digit count {x} outside 1..={MAX_GRAY_DIGITS}"
        )));
    }
    let mut seq: Vec<Vec<u8>> = vec![vec![0], vec![1], vec![2]];
    for _ in 1..x {
        let mut next = Vec::with_capacity(seq.len() * 3);
        for lead in 0..3u8 {
            let suffixes: Box<dyn Iterator<Item = &Vec<u8>>> = if lead % 2 == 0 {
                Box::new(seq.iter())
            } else {
                Box::new(seq.iter().rev())
            };
            for s in suffixes {
                let mut w = Vec::with_capacity(s.len() + 1);
                w.push(lead);
                w.extend_from_slice(s);
                next.push(w);
            }
        }
        seq = next;
    }
    let mut rank = vec![0u32; seq.len()];
    for (i, w) in seq.iter().enumerate() {
        rank[base3(w)] = i as u32;
    }
    Ok(GrayCode {
        digits: x,
        flat: seq.concat(),
        rank,
    })
}

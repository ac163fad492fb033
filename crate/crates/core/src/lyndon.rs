//! Lyndon words over an ordered alphabet: recognition, generation,
//! standard factorization and the associated bracketing.
//!
//! A word is Lyndon when it is strictly smaller than every proper nonempty
//! suffix. The bracketings of Lyndon words form a basis of the free Lie
//! algebra; the factorization convention here takes the *longest* proper
//! Lyndon suffix as the right factor, which fixes the basis element b(w)
//! uniquely.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered list of generator names; the letter order is the list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    /// Single-character letters a, b, c, ... for ad-hoc alphabets.
    pub fn latin(k: usize) -> Self {
        assert!(k >= 1 && k <= 26);
        Alphabet {
            names: (0..k)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Words print as juxtaposed names, dot-separated once any name is
    /// longer than one character ("aab" vs "x1.x1.w1").
    pub fn format_word(&self, w: &Word) -> String {
        let dotted = self.names.iter().any(|n| n.chars().count() > 1);
        let parts: Vec<&str> = w.letters().iter().map(|&i| self.name(i as usize)).collect();
        if dotted {
            parts.join(".")
        } else {
            parts.concat()
        }
    }
}

/// A nonempty word over letter indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        assert!(!letters.is_empty(), "words are nonempty");
        Word(letters)
    }

    pub fn letter(i: u8) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn multidegree(&self, nletters: usize) -> MultiDegree {
        let mut counts = vec![0u32; nletters];
        for &l in &self.0 {
            counts[l as usize] += 1;
        }
        MultiDegree::new(counts)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            if l < 26 {
                write!(f, "{}", (b'a' + l) as char)?;
            } else {
                write!(f, "<{l}>")?;
            }
        }
        Ok(())
    }
}

/// A vector of letter multiplicities. Ordered by total degree first, then
/// lexicographically, so sorted maps iterate in reporting order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(counts: Vec<u32>) -> Self {
        MultiDegree(counts)
    }

    pub fn zero(nletters: usize) -> Self {
        MultiDegree(vec![0; nletters])
    }

    pub fn unit(nletters: usize, i: usize) -> Self {
        let mut v = vec![0; nletters];
        v[i] = 1;
        MultiDegree(v)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), other.len());
        MultiDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise difference, `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    /// Decrement slot `i`, `None` if it is already zero.
    pub fn sub_letter(&self, i: usize) -> Option<MultiDegree> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(MultiDegree(v))
    }

    pub fn scale(&self, k: u32) -> MultiDegree {
        MultiDegree(self.0.iter().map(|c| c * k).collect())
    }

    /// Componentwise quotient by `k`, `None` unless every entry is divisible.
    pub fn try_div(&self, k: u32) -> Option<MultiDegree> {
        self.0
            .iter()
            .map(|&c| (c % k == 0).then_some(c / k))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    /// Sum over the given slots (used for W-degree).
    pub fn degree_over(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All multidegrees over `nletters` slots with `1 <= total <= cutoff`,
/// in (total, lex) order.
pub fn multidegrees_up_to(nletters: usize, cutoff: u32) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    if nletters == 0 {
        return out;
    }
    for total in 1..=cutoff {
        let mut stack = vec![(Vec::new(), total)];
        while let Some((prefix, rest)) = stack.pop() {
            if prefix.len() + 1 == nletters {
                let mut v = prefix;
                v.push(rest);
                out.push(MultiDegree::new(v));
                continue;
            }
            // push in reverse so the lexicographically smallest pops last
            for c in (0..=rest).rev() {
                let mut v = prefix.clone();
                v.push(c);
                stack.push((v, rest - c));
            }
        }
    }
    // DFS emits each total-degree block in lex order already; sort to be safe
    out.sort();
    out
}

/// The classical Lyndon condition: strictly smaller than every proper suffix.
pub fn is_lyndon(w: &Word) -> bool {
    let s = w.letters();
    (1..s.len()).all(|i| s < &s[i..])
}

/// Lyndon bracketing tree; the foliage reads back the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(u8),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn foliage(&self) -> Word {
        fn collect(t: &BracketTree, out: &mut Vec<u8>) {
            match t {
                BracketTree::Leaf(l) => out.push(*l),
                BracketTree::Node(a, b) => {
                    collect(a, out);
                    collect(b, out);
                }
            }
        }
        let mut v = Vec::new();
        collect(self, &mut v);
        Word::new(v)
    }
}

/// Split a Lyndon word `w = uv` where `v` is the longest proper Lyndon
/// suffix. Both factors are Lyndon and `u < v`.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word)> {
    if w.len() < 2 || !is_lyndon(w) {
        return Err(Error::NotLyndon(format!("{w:?}")));
    }
    let s = w.letters();
    for i in 1..s.len() {
        let v = Word::new(s[i..].to_vec());
        if is_lyndon(&v) {
            let u = Word::new(s[..i].to_vec());
            debug_assert!(is_lyndon(&u));
            debug_assert!(u < v);
            return Ok((u, v));
        }
    }
    unreachable!("the final letter is always a Lyndon suffix");
}

/// The basis bracketing b(w): a leaf for letters, otherwise
/// [b(u), b(v)] over the standard factorization.
pub fn bracketing(w: &Word) -> Result<BracketTree> {
    if w.len() == 1 {
        return Ok(BracketTree::Leaf(w.letters()[0]));
    }
    let (u, v) = standard_factorization(w)?;
    Ok(BracketTree::Node(
        Box::new(bracketing(&u)?),
        Box::new(bracketing(&v)?),
    ))
}

/// All Lyndon words of length <= maxlen over `nletters` letters, in
/// lexicographic order (Duval's successor iteration).
pub fn lyndon_words_up_to(nletters: usize, maxlen: u32) -> Vec<Word> {
    assert!(nletters >= 1);
    let n = maxlen as usize;
    let k = nletters as u8;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Word::new(w.clone()));
        // extend periodically to the maximum length
        let period = w.len();
        while w.len() < n {
            let c = w[w.len() - period];
            w.push(c);
        }
        // strip trailing maximal letters, then increment
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return out,
        }
    }
}

/// All Lyndon words of exact total length `n`, in lexicographic order.
pub fn lyndon_words_of_length(nletters: usize, n: u32) -> Vec<Word> {
    lyndon_words_up_to(nletters, n)
        .into_iter()
        .filter(|w| w.len() == n as usize)
        .collect()
}

/// All Lyndon words of exact multidegree `alpha`, in lexicographic order.
pub fn lyndon_words_of_multidegree(alpha: &MultiDegree) -> Vec<Word> {
    assert!(!alpha.is_zero());
    lyndon_words_up_to(alpha.len(), alpha.total())
        .into_iter()
        .filter(|w| w.len() == alpha.total() as usize && &w.multidegree(alpha.len()) == alpha)
        .collect()
}

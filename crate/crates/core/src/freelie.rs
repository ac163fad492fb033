//! Free Lie algebra arithmetic inside the tensor algebra.
//!
//! Lie elements are carried as noncommutative polynomials: the bracket and
//! ad-closure are then plain polynomial algebra, and Lyndon coordinates are
//! extracted only when a rank computation needs them. Expansion against the
//! Lyndon basis is triangular peeling: the lex-smallest monomial of a Lie
//! element is always a Lyndon word, with the same coefficient as the basis
//! element it identifies. A non-Lyndon leading monomial is exactly the
//! membership failure, so the expansion doubles as a Lie-membership test.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::lyndon::{
    bracketing, is_lyndon, lyndon_words_of_multidegree, BracketTree, MultiDegree, Word,
};
use crate::rational::Rational;

/// A sparse element of the tensor algebra: word -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPolynomial {
    nletters: usize,
    terms: BTreeMap<Word, Rational>,
}

impl NCPolynomial {
    pub fn zero(nletters: usize) -> Self {
        NCPolynomial { nletters, terms: BTreeMap::new() }
    }

    pub fn letter(i: u8, nletters: usize) -> Self {
        debug_assert!((i as usize) < nletters);
        Self::term(Word::letter(i), Rational::one(), nletters)
    }

    pub fn term(word: Word, coeff: Rational, nletters: usize) -> Self {
        let mut p = NCPolynomial::zero(nletters);
        p.add_term(&word, &coeff);
        p
    }

    pub fn nletters(&self) -> usize {
        self.nletters
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Rational> {
        self.terms.get(w)
    }

    /// Lexicographically smallest monomial, if any.
    pub fn lex_min(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, word: &Word, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(word) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(word);
                }
            }
            None => {
                self.terms.insert(word.clone(), coeff.clone());
            }
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, c: &Rational, other: &NCPolynomial) {
        debug_assert_eq!(self.nletters, other.nletters);
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w, &(c * v));
        }
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        out
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out.add_scaled(&-&Rational::one(), other);
        out
    }

    pub fn scaled(&self, c: &Rational) -> NCPolynomial {
        let mut out = NCPolynomial::zero(self.nletters);
        out.add_scaled(c, self);
        out
    }

    /// Concatenation (tensor) product.
    pub fn mul(&self, other: &NCPolynomial) -> NCPolynomial {
        debug_assert_eq!(self.nletters, other.nletters);
        let mut out = NCPolynomial::zero(self.nletters);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(&u.concat(v), &(a * b));
            }
        }
        out
    }

    /// The multidegree shared by every monomial; `None` when zero or mixed.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.multidegree(self.nletters);
        for w in iter {
            if w.multidegree(self.nletters) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Split into multihomogeneous components.
    pub fn components(&self) -> BTreeMap<MultiDegree, NCPolynomial> {
        let mut out: BTreeMap<MultiDegree, NCPolynomial> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.multidegree(self.nletters))
                .or_insert_with(|| NCPolynomial::zero(self.nletters))
                .add_term(w, c);
        }
        out
    }

    /// The same element viewed over a different alphabet size. Every letter
    /// used must still fit.
    pub fn reletter(&self, nletters: usize) -> NCPolynomial {
        let mut out = NCPolynomial::zero(nletters);
        for (w, c) in &self.terms {
            debug_assert!(w.letters().iter().all(|&l| (l as usize) < nletters));
            out.add_term(w, c);
        }
        out
    }
}

/// The Lie bracket pq - qp in the tensor algebra.
pub fn bracket(p: &NCPolynomial, q: &NCPolynomial) -> NCPolynomial {
    p.mul(q).sub(&q.mul(p))
}

/// Expand a bracketing tree into the tensor algebra.
pub fn realize(t: &BracketTree, nletters: usize) -> NCPolynomial {
    match t {
        BracketTree::Leaf(i) => NCPolynomial::letter(*i, nletters),
        BracketTree::Node(a, b) => bracket(&realize(a, nletters), &realize(b, nletters)),
    }
}

/// Coordinates of a Lie element in the Lyndon basis: w -> coefficient of b(w).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LieCoordinates {
    pub coords: BTreeMap<Word, Rational>,
}

/// Cached combinatorics for one alphabet size: Lyndon bases per multidegree,
/// realized basis elements, and expansions of [x_i, b(w)].
///
/// The caches depend only on the number of letters, so one context can be
/// shared across every presentation with the same alphabet size.
pub struct FreeLieContext {
    nletters: usize,
    basis: BTreeMap<MultiDegree, Rc<Vec<Word>>>,
    column: HashMap<Word, usize>,
    realized: HashMap<Word, Rc<NCPolynomial>>,
    ad_coords: HashMap<(u8, Word), Rc<SparseVector>>,
}

impl FreeLieContext {
    pub fn new(nletters: usize) -> Self {
        FreeLieContext {
            nletters,
            basis: BTreeMap::new(),
            column: HashMap::new(),
            realized: HashMap::new(),
            ad_coords: HashMap::new(),
        }
    }

    pub fn nletters(&self) -> usize {
        self.nletters
    }

    /// Sorted Lyndon words of the given multidegree (a basis of that
    /// component of the free Lie algebra).
    pub fn lyndon_basis(&mut self, alpha: &MultiDegree) -> Rc<Vec<Word>> {
        debug_assert_eq!(alpha.len(), self.nletters);
        if let Some(b) = self.basis.get(alpha) {
            return Rc::clone(b);
        }
        let words = lyndon_words_of_multidegree(alpha);
        for (j, w) in words.iter().enumerate() {
            self.column.insert(w.clone(), j);
        }
        let rc = Rc::new(words);
        self.basis.insert(alpha.clone(), Rc::clone(&rc));
        rc
    }

    /// Dimension of the free Lie algebra component (by basis count).
    pub fn component_dim(&mut self, alpha: &MultiDegree) -> usize {
        self.lyndon_basis(alpha).len()
    }

    /// The realized basis element b(w) as a polynomial.
    pub fn realized(&mut self, w: &Word) -> Rc<NCPolynomial> {
        if let Some(p) = self.realized.get(w) {
            return Rc::clone(p);
        }
        let tree = bracketing(w).expect("basis words are Lyndon");
        let p = Rc::new(realize(&tree, self.nletters));
        debug_assert_eq!(p.lex_min().map(|(m, _)| m), Some(w));
        debug_assert!(p.lex_min().map_or(false, |(_, c)| c.is_one()));
        self.realized.insert(w.clone(), Rc::clone(&p));
        p
    }

    /// Triangular peeling against the Lyndon basis. Errors with
    /// [`Error::NotLieElement`] when the input is not a Lie element.
    pub fn lyndon_expand(&mut self, p: &NCPolynomial) -> Result<LieCoordinates> {
        let mut coords = LieCoordinates::default();
        for (_, component) in p.components() {
            let mut residual = component;
            while let Some((m, c)) = residual.lex_min() {
                if !is_lyndon(m) {
                    return Err(Error::NotLieElement(format!("{:?}", m)));
                }
                let (m, c) = (m.clone(), c.clone());
                let basis_poly = self.realized(&m);
                residual.add_scaled(&-&c, &basis_poly);
                coords.coords.insert(m, c);
            }
        }
        Ok(coords)
    }

    /// Rebuild the polynomial from Lyndon coordinates.
    pub fn coords_to_poly(&mut self, coords: &LieCoordinates) -> NCPolynomial {
        let mut p = NCPolynomial::zero(self.nletters);
        for (w, c) in &coords.coords {
            let b = self.realized(w);
            p.add_scaled(c, &b);
        }
        p
    }

    /// Expand a homogeneous Lie element into a sparse coordinate vector over
    /// the Lyndon basis of its multidegree.
    pub fn expand_to_vector(&mut self, p: &NCPolynomial) -> Result<(MultiDegree, SparseVector)> {
        let alpha = p.multidegree().ok_or_else(|| {
            Error::Internal("expand_to_vector needs a nonzero homogeneous element".into())
        })?;
        self.lyndon_basis(&alpha);
        let coords = self.lyndon_expand(p)?;
        let mut v = SparseVector::new();
        for (w, c) in &coords.coords {
            let col = *self
                .column
                .get(w)
                .expect("expansion produced a word outside its component basis");
            v.add_to(col, c);
        }
        Ok((alpha, v))
    }

    /// Rebuild the polynomial form of a coordinate vector in the component
    /// of multidegree `alpha`.
    pub fn vector_to_poly(&mut self, alpha: &MultiDegree, v: &SparseVector) -> NCPolynomial {
        let basis = self.lyndon_basis(alpha);
        let mut p = NCPolynomial::zero(self.nletters);
        for (col, c) in v.iter() {
            let b = self.realized(&basis[col]);
            p.add_scaled(c, &b);
        }
        p
    }

    /// Coordinates of [x_i, b(w)] in the component of degree(w) + e_i.
    /// These expansions depend only on the alphabet size, so they are cached
    /// and shared by every ideal-closure run.
    pub fn ad_letter_coords(&mut self, i: u8, w: &Word) -> Rc<SparseVector> {
        let key = (i, w.clone());
        if let Some(v) = self.ad_coords.get(&key) {
            return Rc::clone(v);
        }
        let basis_poly = self.realized(w);
        let gen = NCPolynomial::letter(i, self.nletters);
        let p = bracket(&gen, &basis_poly);
        let v = if p.is_zero() {
            SparseVector::new()
        } else {
            let (_, v) = self
                .expand_to_vector(&p)
                .expect("a bracket of Lie elements is a Lie element");
            v
        };
        let rc = Rc::new(v);
        self.ad_coords.insert(key, Rc::clone(&rc));
        rc
    }

    /// Apply ad(x_i) to a coordinate vector in the component of `alpha`,
    /// landing in the component of `alpha + e_i`.
    pub fn ad_letter_vector(&mut self, i: u8, alpha: &MultiDegree, v: &SparseVector) -> SparseVector {
        let basis = self.lyndon_basis(alpha);
        let mut out = SparseVector::new();
        for (col, c) in v.iter() {
            let ad = self.ad_letter_coords(i, &basis[col]);
            out.add_scaled(c, &ad);
        }
        out
    }
}

/// Contexts keyed by alphabet size. The caches are independent of generator
/// names and relations, so a pool can be shared across a whole corpus run.
#[derive(Default)]
pub struct ContextPool {
    map: HashMap<usize, FreeLieContext>,
}

impl ContextPool {
    pub fn new() -> Self {
        ContextPool::default()
    }

    pub fn ctx(&mut self, nletters: usize) -> &mut FreeLieContext {
        self.map
            .entry(nletters)
            .or_insert_with(|| FreeLieContext::new(nletters))
    }
}

//! Word equivalence by local moves, and the permutations words induce.
//!
//! Two words are equivalent when one can be turned into the other by a
//! sequence of moves, each acting on adjacent letters:
//!
//! - doubling or collapsing a letter, `x ~ xx`;
//! - the braid move `xyx ~ yxy`;
//! - swapping the first two letters of a triple whose third letter lies
//!   strictly between them, `xzy ~ zxy` for `x < y < z`;
//! - swapping the last two letters of a triple whose first letter lies
//!   strictly between them, `yxz ~ yzx` for `x < y < z`.
//!
//! Moves never change the set of letters used, and the induced permutation
//! of every word (see [`hecke_permutation`]) is invariant under all of
//! them. Because doubling can grow a word without bound, plain equivalence
//! is not decidable by exhausting words of the input lengths; the bounded
//! search [`equivalent_through`] explores words up to a given length, while
//! [`words_equivalent`] decides full equivalence through the tableau class
//! engine.

use std::collections::{BTreeSet, HashSet};

use crate::classes::cached_partition;
use crate::core::Word;
use crate::error::{Error, Result};
use crate::insertion::insert_word;

/// A permutation of the positive integers fixing all but finitely many
/// points, in one-line notation.
///
/// The stored image list is canonical: trailing fixed points are trimmed,
/// so equal permutations compare equal regardless of how they were built.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeckePerm {
    images: Vec<u32>,
}

impl HeckePerm {
    /// The identity permutation.
    pub fn identity() -> HeckePerm {
        HeckePerm::default()
    }

    /// Builds a permutation from the images of `1..=m`.
    ///
    /// The list must be a rearrangement of `1..=m`.
    pub fn from_images(images: Vec<u32>) -> Result<HeckePerm> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v as usize > images.len() || seen[v as usize - 1] {
                return Err(Error::WordParse(format!("{images:?} is not a permutation")));
            }
            seen[v as usize - 1] = true;
        }
        let mut perm = HeckePerm { images };
        perm.trim();
        Ok(perm)
    }

    fn trim(&mut self) {
        while self
            .images
            .last()
            .is_some_and(|&v| v as usize == self.images.len())
        {
            self.images.pop();
        }
    }

    /// The canonical one-line image list, with trailing fixed points
    /// trimmed. The identity yields an empty list.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The image of `i`.
    pub fn image_of(&self, i: u32) -> u32 {
        assert!(i >= 1, "points are 1-indexed");
        self.images.get(i as usize - 1).copied().unwrap_or(i)
    }

    /// The Demazure product with the adjacent transposition `s_i`: applies
    /// `s_i` on the right if that creates a new inversion, and absorbs it
    /// otherwise.
    pub fn demazure_right(&self, i: u32) -> HeckePerm {
        let i = i as usize;
        assert!(i >= 1, "transpositions are 1-indexed");
        let mut images = self.images.clone();
        while images.len() < i + 1 {
            images.push(images.len() as u32 + 1);
        }
        if images[i - 1] < images[i] {
            images.swap(i - 1, i);
        }
        let mut perm = HeckePerm { images };
        perm.trim();
        perm
    }

    /// The number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let m = self.images.len();
        (0..m)
            .map(|i| (i + 1..m).filter(|&j| self.images[i] > self.images[j]).count())
            .sum()
    }

    /// A reduced word: indices of adjacent transpositions whose product,
    /// applied left to right, is this permutation. Its length equals
    /// [`coxeter_length`](Self::coxeter_length).
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut rest = self.clone();
        let mut stripped = Vec::new();
        while let Some(i) = rest
            .images
            .windows(2)
            .position(|w| w[0] > w[1])
        {
            rest.images.swap(i, i + 1);
            rest.trim();
            stripped.push(i as u32 + 1);
        }
        stripped.reverse();
        stripped
    }
}

/// The permutation a word induces: the Demazure product
/// `s_{w_1} * s_{w_2} * ... * s_{w_k}`.
///
/// Equivalent words induce equal permutations.
pub fn hecke_permutation(w: &Word) -> HeckePerm {
    w.letters()
        .iter()
        .fold(HeckePerm::identity(), |u, &a| u.demazure_right(a))
}

/// The Demazure product of two permutations.
///
/// Computed by folding a reduced word of `v` into `u`; the result does not
/// depend on the choice of reduced word.
pub fn hecke_product(u: &HeckePerm, v: &HeckePerm) -> HeckePerm {
    v.reduced_word()
        .into_iter()
        .fold(u.clone(), |acc, i| acc.demazure_right(i))
}

/// The length of the one-line image list needed to write the permutation;
/// every point beyond is fixed.
pub fn coxeter_length(p: &HeckePerm) -> usize {
    p.coxeter_length()
}

/// How a primitive pair of equivalent words is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimitivePairKind {
    /// `p` and `pp`.
    DoubledLetter,
    /// `pqp` and `qpq` for distinct `p`, `q`.
    Braid,
    /// `xzy` and `zxy` for `x < y < z`.
    LeadingSwap,
    /// `yxz` and `yzx` for `x < y < z`.
    TrailingSwap,
}

/// A minimal pair of equivalent words, one move apart.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimitivePair {
    pub a: Word,
    pub b: Word,
    pub kind: PrimitivePairKind,
}

/// All primitive pairs over the alphabet `{1, ..., n}`: the defining moves
/// applied to single letters and triples, with no surrounding context.
///
/// There are `n` doubled letters, `n(n-1)` braids, and `binom(n, 3)` pairs
/// of each swap kind.
pub fn primitive_pairs(n: u32) -> Vec<PrimitivePair> {
    let word = |letters: Vec<u32>| Word::new(letters).expect("letters are positive");
    let mut pairs = Vec::new();
    for p in 1..=n {
        pairs.push(PrimitivePair {
            a: word(vec![p]),
            b: word(vec![p, p]),
            kind: PrimitivePairKind::DoubledLetter,
        });
    }
    for p in 1..=n {
        for q in 1..=n {
            if p != q {
                pairs.push(PrimitivePair {
                    a: word(vec![p, q, p]),
                    b: word(vec![q, p, q]),
                    kind: PrimitivePairKind::Braid,
                });
            }
        }
    }
    for x in 1..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                pairs.push(PrimitivePair {
                    a: word(vec![x, z, y]),
                    b: word(vec![z, x, y]),
                    kind: PrimitivePairKind::LeadingSwap,
                });
                pairs.push(PrimitivePair {
                    a: word(vec![y, x, z]),
                    b: word(vec![y, z, x]),
                    kind: PrimitivePairKind::TrailingSwap,
                });
            }
        }
    }
    pairs
}

/// Words one move away from `w`, keeping lengths at most `max_len`.
///
/// Collapses act wherever two adjacent letters agree, doublings at every
/// position (when the longer word fits the bound), braids and swaps at
/// every triple of adjacent positions.
pub fn kknuth_neighbors(w: &Word, max_len: usize) -> BTreeSet<Word> {
    let letters = w.letters();
    let len = letters.len();
    let word = |v: Vec<u32>| Word::new(v).expect("letters are positive");
    let mut out = BTreeSet::new();
    for i in 0..len.saturating_sub(1) {
        if letters[i] == letters[i + 1] {
            let mut v = letters.to_vec();
            v.remove(i);
            out.insert(word(v));
        }
    }
    if len + 1 <= max_len {
        for i in 0..len {
            let mut v = letters.to_vec();
            v.insert(i, letters[i]);
            out.insert(word(v));
        }
    }
    for i in 0..len.saturating_sub(2) {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        if a == c && a != b {
            let mut v = letters.to_vec();
            (v[i], v[i + 1], v[i + 2]) = (b, a, b);
            out.insert(word(v));
        }
        if a != b && a.min(b) < c && c < a.max(b) {
            let mut v = letters.to_vec();
            v.swap(i, i + 1);
            out.insert(word(v));
        }
        if b != c && b.min(c) < a && a < b.max(c) {
            let mut v = letters.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(word(v));
        }
    }
    out
}

/// Decides whether `w1` can reach `w2` through words of length at most `k`.
///
/// Errors if either input is already longer than `k`. This relation is
/// strictly finer than full equivalence: two equivalent words may be
/// connected only through words longer than both.
pub fn equivalent_through(w1: &Word, w2: &Word, k: usize) -> Result<bool> {
    for w in [w1, w2] {
        if w.len() > k {
            return Err(Error::LengthBound { len: w.len(), bound: k });
        }
    }
    if w1 == w2 {
        return Ok(true);
    }
    if w1.support() != w2.support() {
        return Ok(false);
    }
    // Bidirectional search: grow the smaller side until the frontiers meet
    // or one side's component is exhausted.
    let mut seen_a: HashSet<Word> = [w1.clone()].into();
    let mut seen_b: HashSet<Word> = [w2.clone()].into();
    let mut frontier_a = vec![w1.clone()];
    let mut frontier_b = vec![w2.clone()];
    while !frontier_a.is_empty() && !frontier_b.is_empty() {
        if frontier_a.len() > frontier_b.len() {
            std::mem::swap(&mut frontier_a, &mut frontier_b);
            std::mem::swap(&mut seen_a, &mut seen_b);
        }
        let mut next = Vec::new();
        for w in frontier_a.drain(..) {
            for nb in kknuth_neighbors(&w, k) {
                if seen_b.contains(&nb) {
                    return Ok(true);
                }
                if seen_a.insert(nb.clone()) {
                    next.push(nb);
                }
            }
        }
        frontier_a = next;
    }
    Ok(false)
}

/// Decides full equivalence of two words, with no bound on the lengths of
/// intermediate words.
///
/// Every word is equivalent to the row word of its insertion tableau, so
/// the question reduces to whether the two insertion tableaux fall in the
/// same class; that is settled by the exhaustive partition of all tableaux
/// on the letters involved. Equal tableaux short-circuit the computation;
/// otherwise the cost grows steeply with the largest letter.
pub fn words_equivalent(w1: &Word, w2: &Word) -> bool {
    if w1.support() != w2.support() {
        return false;
    }
    let first = insert_word(w1);
    let second = insert_word(w2);
    if first == second {
        return true;
    }
    let partition = cached_partition(w1.max_letter());
    partition
        .joined(&first, &second)
        .expect("insertion tableaux live in the universe of their letters")
}

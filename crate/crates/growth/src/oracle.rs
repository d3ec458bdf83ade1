//! Brute-force ground truth: enumerate elements and reduced words directly
//! from the rewriting relations.
//!
//! Words are rewritten with shuffles (adjacent generators commute when their
//! nodes share an edge) and the cancellation rule of the structure: inverse
//! pairs in the Artin group, equal pairs in the Coxeter group, nothing in the
//! monoid. Elements are identified by a canonical form, the lexicographically
//! least word among all shuffle-equivalent reduced words; this is a complete
//! invariant because all reduced words of an element are shuffle-equivalent.
//!
//! Everything here is deliberately simple and independent of the matrix
//! machinery it is used to check.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{enumerate_cliques, Clique, Graph};
use crate::scalar::Scalar;
use crate::spherical::{Structure, TypeCountTable};

/// Default ceiling on the number of enumerated words.
pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration cap of {cap} words exceeded at depth {depth}")]
    CapExceeded { depth: usize, cap: usize },
}

/// Letter sign; `Plus` precedes `Minus` in the letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A generator or its inverse. The sign is always `Plus` in the monoid and
/// the Coxeter group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub node: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(node: usize) -> Self {
        Letter {
            node,
            sign: Sign::Plus,
        }
    }

    pub fn negative(node: usize) -> Self {
        Letter {
            node,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            node: self.node,
            sign: match self.sign {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
            },
        }
    }
}

/// A geodesic word: no letter can be cancelled against a later one after
/// shuffles. Built from the empty word through [`append_and_reduce`], which
/// maintains the invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord::default()
    }

    #[cfg(test)]
    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        ReducedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

/// The lexicographically least reduced word among all shuffle-equivalent
/// ones. Two reduced words have equal canonical forms exactly when they
/// represent the same element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    word: ReducedWord,
}

impl CanonicalForm {
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn into_word(self) -> ReducedWord {
        self.word
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }
}

/// Result of appending one letter to a reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AppendOutcome {
    /// The word grew by one letter and is still reduced.
    Extended(ReducedWord),
    /// The letter cancelled against an earlier one; the returned word is one
    /// letter shorter.
    Cancelled(ReducedWord),
}

/// Appends `g` to `w`, applying the length-reducing relation of the structure
/// when possible.
///
/// Scanning from the right, a cancellable partner is a letter with the same
/// node (equal letter in the Coxeter group, inverse letter in the Artin
/// group) that commutes past every intervening letter. If one is found the
/// partner is removed; otherwise `w·g` is reduced. The monoid has no
/// length-reducing relations, so it always extends.
pub fn append_and_reduce(
    w: &ReducedWord,
    g: Letter,
    graph: &Graph,
    s: Structure,
) -> AppendOutcome {
    debug_assert!(g.node >= 1 && g.node <= graph.node_count());
    debug_assert!(s == Structure::Raag || g.sign == Sign::Plus);
    if s != Structure::Monoid {
        for p in (0..w.letters.len()).rev() {
            let l = w.letters[p];
            if l.node == g.node {
                let cancels = match s {
                    Structure::Racg => true,
                    Structure::Raag => l.sign != g.sign,
                    Structure::Monoid => unreachable!(),
                };
                if cancels {
                    let mut letters = w.letters.clone();
                    letters.remove(p);
                    return AppendOutcome::Cancelled(ReducedWord { letters });
                }
                // An equal-node, non-cancelling letter blocks everything
                // before it from reaching the end.
                break;
            }
            if !graph.adjacent(l.node, g.node) {
                break;
            }
        }
    }
    let mut letters = w.letters.clone();
    letters.push(g);
    AppendOutcome::Extended(ReducedWord { letters })
}

/// Greedy front extraction: repeatedly emit the least letter that can be
/// shuffled to the front of what remains. This yields the lexicographically
/// least shuffle-equivalent word, with letters ordered by node and then
/// `Plus < Minus`.
pub fn canonical_form(w: &ReducedWord, graph: &Graph) -> CanonicalForm {
    let n = w.letters.len();
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        'candidates: for p in 0..n {
            if used[p] {
                continue;
            }
            for (q, earlier) in w.letters.iter().enumerate().take(p) {
                if !used[q] && !graph.adjacent(earlier.node, w.letters[p].node) {
                    continue 'candidates;
                }
            }
            match best {
                None => best = Some(p),
                Some(b) if w.letters[p] < w.letters[b] => best = Some(p),
                _ => {}
            }
        }
        let b = best.expect("the first unused letter is always front-movable");
        used[b] = true;
        out.push(w.letters[b]);
    }
    CanonicalForm {
        word: ReducedWord { letters: out },
    }
}

/// The type of a reduced word: the nodes whose letter can be shuffled to the
/// end. For a reduced word this is always a clique.
pub fn word_type(w: &ReducedWord, graph: &Graph) -> Clique {
    let letters = &w.letters;
    let mut nodes = Vec::new();
    'positions: for p in 0..letters.len() {
        for q in p + 1..letters.len() {
            if !graph.adjacent(letters[p].node, letters[q].node) {
                continue 'positions;
            }
        }
        nodes.push(letters[p].node);
    }
    nodes.sort_unstable();
    Clique::new(graph, nodes).expect("the type of a reduced word is a clique")
}

/// The generating alphabet of the structure, in a fixed order.
pub fn alphabet(graph: &Graph, s: Structure) -> Vec<Letter> {
    match s {
        Structure::Raag => graph
            .nodes()
            .flat_map(|v| [Letter::positive(v), Letter::negative(v)])
            .collect(),
        _ => graph.nodes().map(Letter::positive).collect(),
    }
}

/// Counts elements by length and type up to `depth`, by breadth-first
/// generation from the empty word with canonical-form deduplication.
pub fn count_elements_by_type<T: Scalar>(
    graph: &Graph,
    s: Structure,
    depth: usize,
    cap: usize,
) -> Result<TypeCountTable<T>, OracleError> {
    let idx = enumerate_cliques(graph);
    let mut table = TypeCountTable::empty(s, &idx, depth);
    let letters = alphabet(graph, s);
    let mut level: HashSet<ReducedWord> = HashSet::new();
    level.insert(ReducedWord::empty());
    let mut total: usize = 1;
    for n in 1..=depth {
        let mut next: HashSet<ReducedWord> = HashSet::new();
        for w in &level {
            for &g in &letters {
                if let AppendOutcome::Extended(longer) = append_and_reduce(w, g, graph, s) {
                    let canon = canonical_form(&longer, graph).into_word();
                    if next.contains(&canon) {
                        continue;
                    }
                    total += 1;
                    if total > cap {
                        return Err(OracleError::CapExceeded { depth: n, cap });
                    }
                    let t = word_type(&canon, graph);
                    table.add_count(n, &t, T::one());
                    next.insert(canon);
                }
            }
        }
        level = next;
    }
    Ok(table)
}

/// Counts reduced words by length and type up to `depth`, by depth-first
/// enumeration without deduplication.
pub fn count_geodesics_by_type<T: Scalar>(
    graph: &Graph,
    s: Structure,
    depth: usize,
    cap: usize,
) -> Result<TypeCountTable<T>, OracleError> {
    let idx = enumerate_cliques(graph);
    let letters = alphabet(graph, s);
    let mut dfs = GeodesicDfs {
        graph,
        s,
        depth,
        cap,
        table: TypeCountTable::empty(s, &idx, depth),
        total: 1,
    };
    dfs.visit(&ReducedWord::empty(), 0, &letters)?;
    Ok(dfs.table)
}

struct GeodesicDfs<'a, T> {
    graph: &'a Graph,
    s: Structure,
    depth: usize,
    cap: usize,
    table: TypeCountTable<T>,
    total: usize,
}

impl<T: Scalar> GeodesicDfs<'_, T> {
    fn visit(&mut self, w: &ReducedWord, n: usize, letters: &[Letter]) -> Result<(), OracleError> {
        if n == self.depth {
            return Ok(());
        }
        for &g in letters {
            if let AppendOutcome::Extended(longer) = append_and_reduce(w, g, self.graph, self.s) {
                self.total += 1;
                if self.total > self.cap {
                    return Err(OracleError::CapExceeded {
                        depth: n + 1,
                        cap: self.cap,
                    });
                }
                let t = word_type(&longer, self.graph);
                self.table.add_count(n + 1, &t, T::one());
                self.visit(&longer, n + 1, letters)?;
            }
        }
        Ok(())
    }
}

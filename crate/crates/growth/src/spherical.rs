//! Spherical growth: counts of *elements* by length and type.
//!
//! Three structures share one defining graph: the trace monoid (words up to
//! shuffles of adjacent generators), the right-angled Artin group (inverses
//! added), and the right-angled Coxeter group (generators made involutions).
//! Elements are classified by their type (the clique of generators a reduced
//! word can end in) and counted either in closed form through the clique
//! polynomial, or length-by-length through the strict branching matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::exact::{
    json_decimal_array, poly_substitute_mobius, series_compose, RationalFunction, Series,
    SquareMatrix,
};
use crate::graph::{
    clique_polynomial, enumerate_cliques, induced_delete, Clique, CliqueIndex, Graph, GraphError,
};
use crate::scalar::Scalar;

/// Which of the three right-angled structures is being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    /// The trace (Cartier-Foata) monoid of the graph.
    Monoid,
    /// The right-angled Artin group.
    Raag,
    /// The right-angled Coxeter group.
    Racg,
}

impl Structure {
    pub const ALL: [Structure; 3] = [Structure::Monoid, Structure::Raag, Structure::Racg];

    pub fn label(self) -> &'static str {
        match self {
            Structure::Monoid => "monoid",
            Structure::Raag => "raag",
            Structure::Racg => "racg",
        }
    }

    /// Number of length-one elements per node: `x_i` alone, or `x_i^(+-1)`.
    pub fn letters_per_node(self) -> i64 {
        match self {
            Structure::Raag => 2,
            _ => 1,
        }
    }

    /// Coefficients `(a, b, c)` of the argument `a t/(b + c t)` substituted
    /// into the clique polynomial for the closed-form spherical series.
    fn mobius_coeffs(self) -> (i64, i64, i64) {
        match self {
            Structure::Monoid => (-1, 1, 0),
            Structure::Racg => (-1, 1, 1),
            Structure::Raag => (-2, 1, 1),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Structure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monoid" => Ok(Structure::Monoid),
            "raag" => Ok(Structure::Raag),
            "racg" => Ok(Structure::Racg),
            other => Err(format!("unknown structure `{other}`")),
        }
    }
}

/// Counts indexed by (length, type): `count(n, C)` elements (or words) of
/// length `n` whose type is the clique `C`. Row `0` holds the identity, whose
/// type is the empty clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeCountTable<T> {
    structure: Structure,
    cliques: Vec<Clique>,
    pos: HashMap<Vec<usize>, usize>,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> TypeCountTable<T> {
    /// A table over the cliques of `idx` (plus the empty clique) with the
    /// identity row filled in and everything else zero.
    pub(crate) fn empty(structure: Structure, idx: &CliqueIndex, order: usize) -> Self {
        let mut cliques = Vec::with_capacity(idx.len() + 1);
        cliques.push(Clique::empty());
        cliques.extend(idx.cliques().iter().cloned());
        let pos = cliques
            .iter()
            .enumerate()
            .map(|(i, c)| (c.nodes().to_vec(), i))
            .collect();
        let mut rows = vec![vec![T::zero(); cliques.len()]; order + 1];
        rows[0][0] = T::one();
        TypeCountTable {
            structure,
            cliques,
            pos,
            rows,
        }
    }

    /// Fills rows `1..=order` from per-length vectors over the non-empty
    /// cliques of the index.
    pub(crate) fn from_level_vectors(
        structure: Structure,
        idx: &CliqueIndex,
        order: usize,
        vectors: Vec<Vec<T>>,
    ) -> Self {
        let mut table = Self::empty(structure, idx, order);
        for (n, v) in vectors.into_iter().enumerate() {
            for (i, count) in v.into_iter().enumerate() {
                table.rows[n + 1][i + 1] = count;
            }
        }
        table
    }

    pub(crate) fn add_count(&mut self, n: usize, clique: &Clique, amount: T) {
        let i = self.pos[clique.nodes()];
        self.rows[n][i] = self.rows[n][i].clone() + amount;
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// All types, the empty clique first, then the canonical clique order.
    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn count(&self, n: usize, clique: &Clique) -> T {
        match self.pos.get(clique.nodes()) {
            Some(&i) => self.rows[n][i].clone(),
            None => T::zero(),
        }
    }

    /// Total count per length, summed over all types.
    pub fn totals(&self) -> Vec<T> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(T::zero(), |acc, c| acc + c.clone()))
            .collect()
    }

    /// Per-length totals restricted to types contained in `allowed`.
    pub fn restricted_totals(&self, allowed: &[usize]) -> Vec<T> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for (i, c) in row.iter().enumerate() {
                    if self.cliques[i].is_subset_of(allowed) {
                        acc = acc + c.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// The generating series of one type, `sum_n count(n, C) t^n`, truncated
    /// at the table order.
    pub fn per_type_series(&self, clique: &Clique) -> Series<T> {
        Series::new((0..=self.order()).map(|n| self.count(n, clique)).collect())
    }

    /// `{"structure":..,"rows":[{"n":..,"type":[..],"count":".."},..]}` with
    /// zero counts omitted.
    pub fn to_json_string(&self) -> String {
        let mut rows = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (i, count) in row.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                let nodes: Vec<String> = self.cliques[i]
                    .nodes()
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                rows.push(format!(
                    "{{\"n\":{n},\"type\":[{}],\"count\":\"{count}\"}}",
                    nodes.join(",")
                ));
            }
        }
        format!(
            "{{\"structure\":\"{}\",\"rows\":[{}]}}",
            self.structure.label(),
            rows.join(",")
        )
    }
}

/// The closed-form spherical growth series: the reciprocal of the clique
/// polynomial at `-t`, `-t/(1+t)` or `-2t/(1+t)` depending on the structure.
pub fn spherical_gf_closed<T: Scalar>(g: &Graph, s: Structure) -> RationalFunction<T> {
    let p = clique_polynomial::<T>(g);
    let (a, b, c) = s.mobius_coeffs();
    let substituted = poly_substitute_mobius(&p, T::from(a), T::from(b), T::from(c))
        .expect("argument has no pole at the origin");
    substituted
        .reciprocal()
        .expect("clique polynomial substitution has constant term 1")
}

/// The series of elements whose type is contained in `allowed`:
/// `p_(G - M)(arg) / p_G(arg)` for the structure's argument.
pub fn spherical_gf_restricted<T: Scalar>(
    g: &Graph,
    s: Structure,
    allowed: &[usize],
) -> Result<RationalFunction<T>, GraphError> {
    let (sub, _) = induced_delete(g, allowed)?;
    let (a, b, c) = s.mobius_coeffs();
    let p_full = clique_polynomial::<T>(g);
    let p_sub = clique_polynomial::<T>(&sub);
    let full = poly_substitute_mobius(&p_full, T::from(a), T::from(b), T::from(c))
        .expect("argument has no pole at the origin");
    let part = poly_substitute_mobius(&p_sub, T::from(a), T::from(b), T::from(c))
        .expect("argument has no pole at the origin");
    Ok(&part / &full)
}

/// The clique `C'` branches strictly to `C` when `C - C' = {i}`, `C` is the
/// maximal clique of `C' ∪ {i}` containing `i`, and `i` is the largest node
/// of `C`. Returns every strict branch target of `source`.
///
/// The last condition is `i = max C`, not `i > max C'`: appending a generator
/// drops the source nodes that are not linked to it, so the new node only has
/// to dominate what remains. On the edgeless graph on two nodes, {2} must
/// branch to {1}, since the infinite dihedral group has two elements of every
/// length; that settles the reading.
pub(crate) fn strict_branch_targets(g: &Graph, source: &Clique) -> Vec<Clique> {
    let mut out = Vec::new();
    for i in g.nodes() {
        if source.contains(i) {
            continue;
        }
        let target = branch_target(g, source, i);
        if target.max_node() == Some(i) {
            out.push(target);
        }
    }
    out
}

/// Weak branching drops the maximality-of-`i` condition: every node outside
/// the source produces a branch.
pub(crate) fn weak_branch_targets(g: &Graph, source: &Clique) -> Vec<Clique> {
    g.nodes()
        .filter(|&i| !source.contains(i))
        .map(|i| branch_target(g, source, i))
        .collect()
}

/// The maximal clique of `source ∪ {i}` containing `i`: the nodes of `source`
/// adjacent to `i`, plus `i` itself.
fn branch_target(g: &Graph, source: &Clique, i: usize) -> Clique {
    let mut nodes: Vec<usize> = source
        .nodes()
        .iter()
        .copied()
        .filter(|&v| g.adjacent(v, i))
        .collect();
    nodes.push(i);
    nodes.sort_unstable();
    Clique::from_sorted_unchecked(nodes)
}

/// The strict branching matrix: entry `(i, j)` is 1 exactly when clique
/// `C_j` branches strictly to `C_i`.
pub fn branching_matrix_strict<T: Scalar>(g: &Graph, idx: &CliqueIndex) -> SquareMatrix<T> {
    let mut b = SquareMatrix::zeros(idx.len());
    for (j, source) in idx.iter().enumerate() {
        for target in strict_branch_targets(g, source) {
            let i = idx.position(&target).expect("branch target is a clique");
            b.set(i, j, T::one());
        }
    }
    b
}

/// The vector of length-one counts over the non-empty cliques: one element
/// per singleton (two in the Artin group), zero on larger cliques.
pub(crate) fn length_one_vector<T: Scalar>(idx: &CliqueIndex, s: Structure) -> Vec<T> {
    idx.iter()
        .map(|c| {
            if c.size() == 1 {
                T::from(s.letters_per_node())
            } else {
                T::zero()
            }
        })
        .collect()
}

/// Per-type element counts for lengths `0..=order`, by iterating the strict
/// branching recurrence: `I + B0` for the monoid, `I + 2 B0` for the Artin
/// group, `B0` for the Coxeter group.
pub fn spherical_type_series<T: Scalar>(
    g: &Graph,
    s: Structure,
    order: usize,
) -> TypeCountTable<T> {
    let idx = enumerate_cliques(g);
    let b0 = branching_matrix_strict::<T>(g, &idx);
    let step = match s {
        Structure::Monoid => SquareMatrix::identity(idx.len()).add(&b0),
        Structure::Raag => SquareMatrix::identity(idx.len()).add(&b0.scaled(&T::from(2))),
        Structure::Racg => b0,
    };
    let v1 = length_one_vector(&idx, s);
    let vectors = step
        .resolvent_apply(&v1, order)
        .expect("vector built from the same index");
    TypeCountTable::from_level_vectors(s, &idx, order, vectors)
}

/// The four per-type functional relations tying the three structures
/// together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Monoid from Coxeter: `M^C(t) = W^C(t/(1-t))`.
    MonoidFromRacg,
    /// Artin from Coxeter: `A^C(t) = W^C(2t/(1-t))`.
    RaagFromRacg,
    /// Coxeter from monoid (inverted form): `W^C(t) = M^C(t/(1+t))`.
    RacgFromMonoid,
    /// Artin from monoid (inverted form): `A^C(t) = M^C(2t/(1+t))`.
    RaagFromMonoid,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::MonoidFromRacg,
        Relation::RaagFromRacg,
        Relation::RacgFromMonoid,
        Relation::RaagFromMonoid,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Relation::MonoidFromRacg => "monoid(t) = racg(t/(1-t))",
            Relation::RaagFromRacg => "raag(t) = racg(2t/(1-t))",
            Relation::RacgFromMonoid => "racg(t) = monoid(t/(1+t))",
            Relation::RaagFromMonoid => "raag(t) = monoid(2t/(1+t))",
        }
    }

    /// The substituted argument as a rational function of `t`.
    fn inner<T: Scalar>(self) -> RationalFunction<T> {
        let (num, den) = match self {
            Relation::MonoidFromRacg => ([0, 1], [1, -1]),
            Relation::RaagFromRacg => ([0, 2], [1, -1]),
            Relation::RacgFromMonoid => ([0, 1], [1, 1]),
            Relation::RaagFromMonoid => ([0, 2], [1, 1]),
        };
        RationalFunction::from_i64(&num, &den).expect("fixed nonzero denominator")
    }
}

/// One coefficient that failed a functional-relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMismatch {
    pub relation: Relation,
    pub clique: Clique,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking all four functional relations per type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub order: usize,
    pub mismatches: Vec<RelationMismatch>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        let rows: Vec<String> = self
            .mismatches
            .iter()
            .map(|m| {
                let nodes: Vec<String> =
                    m.clique.nodes().iter().map(|v| v.to_string()).collect();
                format!(
                    "{{\"relation\":\"{}\",\"type\":[{}],\"n\":{},\"lhs\":\"{}\",\"rhs\":\"{}\"}}",
                    m.relation.label(),
                    nodes.join(","),
                    m.n,
                    m.lhs,
                    m.rhs
                )
            })
            .collect();
        format!(
            "{{\"order\":{},\"ok\":{},\"mismatches\":[{}]}}",
            self.order,
            self.ok(),
            rows.join(",")
        )
    }
}

/// Checks, through the given order and for every non-empty clique `C`, that
/// the per-type series of the three structures satisfy the four functional
/// relations. A mismatch signals an implementation bug, not a property of the
/// input graph.
pub fn verify_functional_relations<T: Scalar>(g: &Graph, order: usize) -> RelationReport {
    let monoid = spherical_type_series::<T>(g, Structure::Monoid, order);
    let raag = spherical_type_series::<T>(g, Structure::Raag, order);
    let racg = spherical_type_series::<T>(g, Structure::Racg, order);
    let idx = enumerate_cliques(g);
    let mut mismatches = Vec::new();
    for clique in idx.iter() {
        let m_series = monoid.per_type_series(clique);
        let a_series = raag.per_type_series(clique);
        let w_series = racg.per_type_series(clique);
        for relation in Relation::ALL {
            let (lhs, outer) = match relation {
                Relation::MonoidFromRacg => (&m_series, &w_series),
                Relation::RaagFromRacg => (&a_series, &w_series),
                Relation::RacgFromMonoid => (&w_series, &m_series),
                Relation::RaagFromMonoid => (&a_series, &m_series),
            };
            let rhs = series_compose(outer, &relation.inner::<T>(), order)
                .expect("inner argument vanishes at the origin");
            for n in 0..=order {
                if lhs.coeff(n) != rhs.coeff(n) {
                    mismatches.push(RelationMismatch {
                        relation,
                        clique: clique.clone(),
                        n,
                        lhs: lhs.coeff(n).to_string(),
                        rhs: rhs.coeff(n).to_string(),
                    });
                }
            }
        }
    }
    RelationReport { order, mismatches }
}

/// `{"coeffs":["..."]}` for a standalone polynomial (the clique polynomial in
/// the command-line output).
pub fn polynomial_json<T: Scalar>(p: &crate::exact::Polynomial<T>) -> String {
    if p.is_zero() {
        return "{\"coeffs\":[\"0\"]}".to_string();
    }
    format!("{{\"coeffs\":{}}}", json_decimal_array(p.coeffs()))
}

//! Geodesic growth: counts of *reduced words* by length and type.
//!
//! Words branch more freely than elements: appending any generator outside
//! the current type yields a longer reduced word, and every generator inside
//! the type extends the word without changing it. The counting matrices are
//! therefore the weak branching matrix `B1` together with the diagonal matrix
//! of clique sizes.

use crate::exact::{RationalFunction, SquareMatrix};
use crate::graph::{enumerate_cliques, CliqueIndex, Graph};
use crate::scalar::Scalar;
use crate::spherical::{length_one_vector, weak_branch_targets, Structure, TypeCountTable};

/// Reduced-word counts share the table representation with element counts;
/// they differ in their invariants (monoid totals are `m^n`, and every entry
/// dominates the corresponding element count).
pub type GeodesicCountTable<T> = TypeCountTable<T>;

/// The weak branching matrix: entry `(i, j)` is 1 exactly when `C_j` branches
/// weakly to `C_i`. Entrywise it dominates the strict matrix.
pub fn branching_matrix_weak<T: Scalar>(g: &Graph, idx: &CliqueIndex) -> SquareMatrix<T> {
    let mut b = SquareMatrix::zeros(idx.len());
    for (j, source) in idx.iter().enumerate() {
        for target in weak_branch_targets(g, source) {
            let i = idx.position(&target).expect("branch target is a clique");
            b.set(i, j, T::one());
        }
    }
    b
}

/// The diagonal matrix of clique cardinalities in index order.
pub fn diagonal_matrix<T: Scalar>(idx: &CliqueIndex) -> SquareMatrix<T> {
    SquareMatrix::diagonal(idx.iter().map(|c| T::from(c.size() as i64)).collect())
}

fn step_matrix<T: Scalar>(g: &Graph, idx: &CliqueIndex, s: Structure) -> SquareMatrix<T> {
    let b1 = branching_matrix_weak::<T>(g, idx);
    match s {
        Structure::Monoid => diagonal_matrix::<T>(idx).add(&b1),
        Structure::Raag => diagonal_matrix::<T>(idx).add(&b1.scaled(&T::from(2))),
        Structure::Racg => b1,
    }
}

/// Per-type reduced-word counts for lengths `0..=order`, by iterating the
/// weak branching recurrence: `D + B1`, `D + 2 B1` or `B1` per structure.
pub fn geodesic_type_series<T: Scalar>(
    g: &Graph,
    s: Structure,
    order: usize,
) -> GeodesicCountTable<T> {
    let idx = enumerate_cliques(g);
    let step = step_matrix::<T>(g, &idx, s);
    let v1 = length_one_vector(&idx, s);
    let vectors = step
        .resolvent_apply(&v1, order)
        .expect("vector built from the same index");
    TypeCountTable::from_level_vectors(s, &idx, order, vectors)
}

/// The exact geodesic growth series: `1 + 1' t [I - Mt]^{-1} v_1` where `M`
/// is the structure's step matrix, summed by the all-ones row vector.
pub fn geodesic_gf_exact<T: Scalar>(g: &Graph, s: Structure) -> RationalFunction<T> {
    let idx = enumerate_cliques(g);
    if idx.is_empty() {
        return RationalFunction::one();
    }
    let step = step_matrix::<T>(g, &idx, s);
    let v1 = length_one_vector(&idx, s);
    let components = step
        .resolvent_exact(&v1)
        .expect("I - Mt has determinant with constant term 1");
    let mut acc = RationalFunction::one();
    for component in &components {
        acc = &acc + component;
    }
    acc
}

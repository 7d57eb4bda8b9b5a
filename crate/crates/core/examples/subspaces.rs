//! Canonical matrices, subspace distance and duality.

use subspace_codes::linalg::{CanonicalMatrices, Matrix, Subspace};

fn main() -> subspace_codes::Result<()> {
    let m = Matrix::from_rows(3, 6, &[[1, 2, 0, 1, 0, 2], [2, 1, 1, 0, 1, 1], [0, 0, 1, 2, 1, 0]])?;
    let (r, rank) = m.rref();
    println!("rank {rank}, canonical matrix:\n{r:?}");

    let u = Subspace::span(&m);
    let w = Subspace::coordinate(3, 6, &[3, 4, 5]);
    println!("dim(U + W) = {}, dim(U ∩ W) = {}", u.sum_dim(&w)?, u.intersect_dim(&w)?);
    println!("d(U, W) = {}, d(U^perp, W^perp) = {}", u.distance(&w)?, u.dual().distance(&w.dual())?);

    let lines = CanonicalMatrices::new(2, 4, 2).count();
    println!("lines of PG(3,2): {lines}");
    let inside: Vec<_> = u.subspaces(2).collect();
    println!("U contains {} lines, e.g. {:?}", inside.len(), inside[inside.len() / 2]);
    Ok(())
}

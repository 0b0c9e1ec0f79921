//! Inputs shared by the benchmarks.

use std::sync::Arc;

use filtralab_core::{AmbientRing, ExponentVector, MonomialIdeal};

pub fn ideal(vars: &[&str], gens: &[&[u32]]) -> MonomialIdeal {
    let ring: Arc<AmbientRing> = AmbientRing::polynomial(vars.iter().copied());
    MonomialIdeal::from_generators(&ring, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect())
        .expect("valid generators")
}

/// (x^3, y^3, z^3, x^2 y, x y^2, y z^2, x y z)
pub fn marley() -> MonomialIdeal {
    ideal(
        &["x", "y", "z"],
        &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 1, 0], &[1, 2, 0], &[0, 1, 2], &[1, 1, 1]],
    )
}

/// (x^4, x^3 y, x y^3, y^4)
pub fn plane() -> MonomialIdeal {
    ideal(&["x", "y"], &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]])
}

/// (x^5, x^2 y^2, y^5)
pub fn sparse_plane() -> MonomialIdeal {
    ideal(&["x", "y"], &[&[5, 0], &[2, 2], &[0, 5]])
}

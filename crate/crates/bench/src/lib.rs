//! Shared inputs for the benchmarks in `benches/`.

use sextic_core::plane::ref6;
use sextic_core::random::{random_config, rng_for};
use sextic_core::torsion::{conic_product_pencil, NodalSextic};
use sextic_core::Config6;

/// The reference configuration followed by `n` seeded random ones.
pub fn configs(n: usize) -> Vec<Config6> {
    let mut out = vec![ref6()];
    out.extend((0..n as u64).map(|i| random_config(&mut rng_for(99, i))));
    out
}

/// First nodal member of the conic-product pencil on `c`.
pub fn pencil_member(c: &Config6) -> NodalSextic {
    conic_product_pencil(c)
        .expect("general position")
        .first_nodal_member(c)
        .expect("nodal member")
        .1
}

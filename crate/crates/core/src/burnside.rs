//! Irreducibility of a module via the Burnside criterion: a collection of
//! operators on an `m`-dimensional space acts irreducibly (in the strong,
//! absolute sense) iff the unital associative algebra they generate has
//! dimension `m^2`.

use crate::matrix::LinearMap;
use crate::subspace::RrefBuilder;

/// Dimension of the unital associative envelope of the given operators.
pub fn envelope_dim(m: usize, maps: &[LinearMap]) -> usize {
    if m == 0 {
        return 0;
    }
    let mut span = RrefBuilder::new(m * m);
    let mut queue: Vec<LinearMap> = Vec::new();
    let id = LinearMap::identity(m);
    if span.insert(id.flatten()) {
        queue.push(id);
    }
    for g in maps {
        assert_eq!(g.domain(), m);
        assert_eq!(g.codomain(), m);
        if span.insert(g.flatten()) {
            queue.push(g.clone());
        }
    }
    // Close the span under right multiplication by generators; every word in
    // the generators is reached this way, and the loop adds at most m^2
    // basis elements.
    while let Some(w) = queue.pop() {
        for g in maps {
            let prod = w.compose(g);
            if span.insert(prod.flatten()) {
                queue.push(prod);
            }
        }
    }
    span.rank()
}

pub fn is_irreducible(m: usize, maps: &[LinearMap]) -> bool {
    envelope_dim(m, maps) == m * m
}

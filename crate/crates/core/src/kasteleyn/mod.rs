//! Matching-counting engines.
//!
//! | engine      | applies to                 | cost            |
//! |-------------|----------------------------|-----------------|
//! | determinant | planar bipartite           | `O(n^3)` bigint |
//! | Pfaffian    | planar                     | `O(n^3)` bigint |
//! | permanent   | bipartite, ≤ 20 per side   | `O(2^n n)`      |
//! | brute force | ≤ 40 vertices              | exponential     |

mod brute;
mod permanent;
mod pfaffian;
mod signs;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use brute::{
    all_matchings, brute_force, brute_force_count, brute_force_weighted, brute_force_with_cap,
    Semiring, BRUTE_FORCE_MAX_VERTICES,
};
pub use permanent::{biadjacency, permanent_count, permanent_ryser, MAX_PERMANENT_SIDE};
pub use pfaffian::{pfaffian_count, pfaffian_orientation, pfaffian_weighted, OrientedSkewMatrix};
pub use signs::{
    count_det, face_condition_holds, sign_assignment, weighted_det, KasteleynEntry, KasteleynMatrix,
};

use crate::error::{Error, Result};
use crate::grid::PlaneGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Det,
    Pfaffian,
    Permanent,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Det,
        Method::Pfaffian,
        Method::Permanent,
        Method::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Pfaffian => "pfaffian",
            Method::Permanent => "permanent",
            Method::Brute => "brute",
        }
    }

    /// Whether the engine can run on `g` at all (ignoring size caps).
    pub fn applies_to(self, g: &PlaneGraph) -> bool {
        match self {
            Method::Det => g.is_bipartite() && g.is_planar_embedded(),
            Method::Pfaffian => g.is_planar_embedded(),
            Method::Permanent => g.is_bipartite(),
            Method::Brute => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown method `{s}` (det|pfaffian|permanent|brute)"
                ))
            })
    }
}

/// Engine chosen when none is forced: planar bipartite → determinant,
/// planar → Pfaffian, bipartite → permanent, otherwise brute force.
pub fn select_method(g: &PlaneGraph) -> Method {
    if Method::Det.applies_to(g) {
        Method::Det
    } else if Method::Pfaffian.applies_to(g) {
        Method::Pfaffian
    } else if Method::Permanent.applies_to(g) {
        Method::Permanent
    } else {
        Method::Brute
    }
}

/// Number of perfect matchings with the automatically selected engine.
/// Edge weights are ignored.
pub fn count_matchings(g: &PlaneGraph) -> Result<BigInt> {
    count_with(g, select_method(g))
}

/// Number of perfect matchings using a specific engine.
pub fn count_with(g: &PlaneGraph, method: Method) -> Result<BigInt> {
    let g = &unweighted(g);
    match method {
        Method::Det => {
            if let Some(bp) = g.bipartition() {
                if !bp.is_balanced() {
                    return Ok(BigInt::from(0));
                }
            }
            count_det(&sign_assignment(g)?)
        }
        Method::Pfaffian => pfaffian_count(g),
        Method::Permanent => permanent_count(g),
        Method::Brute => brute_force_count(g),
    }
}

/// Weighted sum over matchings of the product of edge weights.
pub fn weighted_sum(g: &PlaneGraph) -> Result<BigRational> {
    weighted_sum_with(g, select_method(g))
}

pub fn weighted_sum_with(g: &PlaneGraph, method: Method) -> Result<BigRational> {
    match method {
        Method::Det => weighted_det(&sign_assignment(g)?),
        Method::Pfaffian => pfaffian_weighted(g),
        Method::Permanent if g.edges().iter().all(|e| e.weight.is_integer()) => {
            permanent_count(g).map(BigRational::from_integer)
        }
        Method::Permanent | Method::Brute => brute_force_weighted(g),
    }
}

fn unweighted(g: &PlaneGraph) -> PlaneGraph {
    if g.is_unit_weighted() {
        g.clone()
    } else {
        g.with_weights(|_, _| BigRational::from_integer(1.into()))
    }
}

//! Random hosts for the local rewrites: the rewrite pattern plus a handful
//! of extra vertices wired to the pattern's outer vertices with random
//! positive rational weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use super::{KenyonSite, UrbanRenewalSite};
use crate::grid::{Edge, Embedding, PlaneGraph};

fn random_weight(rng: &mut impl Rng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(1..=5)),
        BigInt::from(rng.gen_range(1..=3)),
    )
}

fn unit(u: usize, v: usize) -> Edge {
    Edge {
        u,
        v,
        weight: BigRational::one(),
    }
}

/// Joins random pairs of `outer` (skipping pairs in `taken`) and returns the
/// finished graph on `n` vertices.
fn wire(
    rng: &mut impl Rng,
    n: usize,
    mut edges: Vec<Edge>,
    outer: &[usize],
    density: f64,
) -> PlaneGraph {
    for (i, &a) in outer.iter().enumerate() {
        for &b in &outer[i + 1..] {
            let taken = edges
                .iter()
                .any(|e| (e.u, e.v) == (a, b) || (e.u, e.v) == (b, a));
            if !taken && rng.gen_bool(density) {
                edges.push(Edge {
                    u: a,
                    v: b,
                    weight: random_weight(rng),
                });
            }
        }
    }
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    PlaneGraph::new(labels, vec![None; n], edges, Embedding::None).expect("host is a simple graph")
}

/// A weighted 4-cycle `t-u-v-w` with unit pendants to `p, q, r, s`, inside
/// a random host of at most 20 vertices.
pub fn urban_renewal_host(rng: &mut impl Rng) -> (PlaneGraph, UrbanRenewalSite) {
    let site = UrbanRenewalSite {
        p: 0,
        q: 1,
        r: 2,
        s: 3,
        t: 4,
        u: 5,
        v: 6,
        w: 7,
    };
    let extra = 2 * rng.gen_range(0..=6);
    let n = 8 + extra;
    let mut edges = vec![
        unit(site.p, site.t),
        unit(site.q, site.u),
        unit(site.r, site.v),
        unit(site.s, site.w),
    ];
    for (a, b) in [
        (site.t, site.u),
        (site.u, site.v),
        (site.v, site.w),
        (site.w, site.t),
    ] {
        edges.push(Edge {
            u: a,
            v: b,
            weight: random_weight(rng),
        });
    }
    let outer: Vec<usize> = [0, 1, 2, 3].into_iter().chain(8..n).collect();
    (wire(rng, n, edges, &outer, 0.35), site)
}

/// The unit ladder `p-q / r-s / t-u` inside a random host where only
/// `p, q, t, u` see the outside.
pub fn kenyon_host(rng: &mut impl Rng) -> (PlaneGraph, KenyonSite) {
    let site = KenyonSite {
        p: 0,
        q: 1,
        r: 2,
        s: 3,
        t: 4,
        u: 5,
    };
    let extra = 2 * rng.gen_range(0..=6);
    let n = 6 + extra;
    let edges = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]
        .map(|(a, b)| unit(a, b))
        .to_vec();
    let outer: Vec<usize> = [0, 1, 4, 5].into_iter().chain(6..n).collect();
    (wire(rng, n, edges, &outer, 0.35), site)
}

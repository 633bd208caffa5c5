//! Factored tilings counts for the regions whose counts are tabulated only
//! numerically. Each entry is the full prime factorization.

use dimers::analysis::factorize;
use dimers::families::*;
use dimers::kasteleyn::{count_matchings, permanent_count, pfaffian_count};
use dimers::PlaneGraph;

fn factored(g: &PlaneGraph) -> String {
    factorize(&count_matchings(g).unwrap()).unwrap().to_string()
}

fn check(rows: &[(u32, &str)], graph: impl Fn(u32) -> PlaneGraph) {
    for &(n, want) in rows {
        assert_eq!(factored(&graph(n)), want, "n={n}");
    }
}

#[test]
fn hexagon_minus_central_triangle() {
    let rows = [
        (1, "2"),
        (2, "2 * 3^3"),
        (3, "2^5 * 3^3 * 5"),
        (4, "2^5 * 5^7"),
        (5, "2^2 * 5^7 * 7^5"),
        (6, "2^8 * 3^3 * 5 * 7^11"),
        (7, "2^13 * 3^9 * 7^11 * 11"),
        (8, "2^13 * 3^18 * 7^5 * 11^7"),
        (9, "2^8 * 3^18 * 11^13 * 13^5"),
        (10, "2^2 * 3^9 * 11^19 * 13^11"),
        (11, "2^10 * 3^3 * 11^19 * 13^17 * 17"),
        (12, "2^16 * 11^13 * 13^23 * 17^7"),
    ];
    check(&rows, |n| {
        holey_hexagon(HoleyKind::CentralTriangle, n)
            .unwrap()
            .dual_graph()
    });
}

#[test]
fn hexagon_with_notched_long_sides() {
    let rows = [
        (1, "2^7 * 7^2"),
        (2, "2^2 * 7^4 * 11^4 * 13^2"),
        (3, "2^10 * 3^3 * 5^8 * 13^2 * 17^4 * 19^2"),
        (4, "2^2 * 5^2 * 7^2 * 11^3 * 13^4 * 17^4 * 19^8 * 23^4"),
    ];
    check(&rows, |n| {
        holey_hexagon(HoleyKind::ThreeSides, n)
            .unwrap()
            .dual_graph()
    });
}

#[test]
fn diamond_minus_knight_pair() {
    let rows = [
        (2, "2"),
        (3, "2^3"),
        (4, "2^5 * 5"),
        (5, "2^9 * 3^2"),
        (6, "2^17 * 3"),
        (7, "2^22 * 3^2"),
        (8, "2^24 * 3^2 * 73"),
        (9, "2^31 * 3^2 * 5^2 * 11"),
        (10, "2^47 * 3^2 * 5"),
    ];
    check(&rows, |n| {
        aztec(AztecSpec::new(AztecKind::KnightPairRemoved, n))
            .unwrap()
            .dual_graph()
    });
}

#[test]
fn intruded_squares() {
    let rows = [
        (2, "2 * 3^2"),
        (4, "2^2 * 3^6 * 13^2"),
        (6, "2^3 * 3^2 * 5^4 * 7^2 * 3187^2"),
        (8, "2^4 * 27487^2 * 11771899^2"),
        (10, "2^5 * 2534588575976069659^2"),
    ];
    check(&rows, |n| {
        aztec(AztecSpec::new(AztecKind::IntrudedSquare, n))
            .unwrap()
            .dual_graph()
    });
}

#[test]
fn triangle_graphs() {
    let rows = [
        (3, "2"),
        (4, "2 * 3"),
        (7, "2^2 * 3^2 * 61"),
        (8, "2^2 * 11 * 29^2"),
        (11, "2^3 * 3^3 * 5^2 * 7^2 * 19 * 461"),
        (12, "2^3 * 5^2 * 37^2 * 41 * 139^2"),
        (15, "2^4 * 73 * 149 * 757 * 33721 * 523657"),
        (16, "2^4 * 3^8 * 17 * 37^2 * 703459^2"),
    ];
    for (n, want) in rows {
        let count = pfaffian_count(&triangle_graph(n).unwrap()).unwrap();
        assert_eq!(factorize(&count).unwrap().to_string(), want, "n={n}");
    }
}

#[test]
fn hypercube() {
    let counts: Vec<String> = (1..=5)
        .map(|n| {
            permanent_count(&cube_graph(n).unwrap())
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(counts, ["1", "2", "9", "272", "589185"]);
    let fc = factorize(&589185.into()).unwrap();
    assert_eq!(fc.to_string(), "3^2 * 5 * 13093");
}

#[test]
fn aztec_rectangles_with_a_hole() {
    let centre = |n| {
        aztec(AztecSpec::new(AztecKind::RectCenterHole, n))
            .unwrap()
            .dual_graph()
    };
    check(
        &[(1, "2^3"), (2, "2^8 * 3^2"), (3, "2^15 * 3^2 * 5^2")],
        centre,
    );
    let beside = |n| {
        aztec(AztecSpec::new(AztecKind::RectAdjacentHole, n))
            .unwrap()
            .dual_graph()
    };
    check(&[(1, "2"), (2, "2^5 * 3"), (3, "2^11 * 3^2 * 5")], beside);
}

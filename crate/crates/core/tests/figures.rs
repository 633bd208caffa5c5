//! Region generators reproduce hand-drawn pictures character for character
//! (up to translation).

use dimers::families::*;
use dimers::{SquareRegion, TriRegion};

fn tri(text: &str) -> TriRegion {
    TriRegion::parse(text).unwrap().normalized()
}

fn sq(text: &str) -> SquareRegion {
    SquareRegion::parse(text).unwrap().normalized()
}

fn hex(a: u32, b: u32, c: u32) -> HexagonSpec {
    HexagonSpec::new(a, b, c).unwrap()
}

#[test]
fn regular_hexagon_of_side_four() {
    let picture = "
    AVAVAVAVA
   AVAVAVAVAVA
  AVAVAVAVAVAVA
 AVAVAVAVAVAVAVA
 VAVAVAVAVAVAVAV
  VAVAVAVAVAVAV
   VAVAVAVAVAV
    VAVAVAVAV
";
    assert_eq!(hexagon(hex(4, 4, 4)).normalized(), tri(picture));
}

#[test]
fn notched_long_sides() {
    let picture = "
                       AVAVAVAVAVAVAVAVA
                      AVAVAVAVAVAVAVAVAVA
                     AVAVAVAVAVAVAVAVAVAVA
                    AVAVAVAVAVAVAVAVAVAVAVA
                   AVAVAVAVAVAVAVAVAVAVAVAVA
                   VAVAVAVAVAVAVAVAVAVAVAVAV
                 AVAVAVAVAVAVAVAVAVAVAVAVAVAVA
                AVAVAVAVAVAVAVAVAVAVAVAVAVAVAVA
               AVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVA
              AVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVA
             AVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVA
             VAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAV
              VAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAV
               VAVAVAVAVAVAVAVAVAVAVAVAVAVAVAVAV
                VAVAVAVAVAVAVAVAVAVAVAVAVAVAVAV
                 VAVAVAVAVAVAVAVAVAVAVAVAVAVAV
                  VAVAVAVAVAVAVAVAVAVAVAVAVAV
                   VAVAVAVAVAVAVAVAVAVAVAVAV
                    VAVAVAVAVAV VAVAVAVAVAV
";
    assert_eq!(
        holey_hexagon(HoleyKind::ThreeSides, 4)
            .unwrap()
            .normalized(),
        tri(picture)
    );
}

#[test]
fn holey_hexagon_pair() {
    let opposite = "
  AVAVAVA
 AVAVAVAVA
AVAVA AVAVA
VAVAV VAVAV
 VAVAVAVAV
  VAVAVAV
";
    let adjacent = "
  AVAVAVA
 AVAVAVAVA
AVAV VAVAVA
VAVA AVAVAV
 VAVAVAVAV
  VAVAVAV
";
    assert_eq!(
        holey_hexagon(HoleyKind::OppositePair, 3)
            .unwrap()
            .normalized(),
        tri(opposite)
    );
    assert_eq!(
        holey_hexagon(HoleyKind::AdjacentPair, 3)
            .unwrap()
            .normalized(),
        tri(adjacent)
    );
}

#[test]
fn aztec_diamond_of_order_five() {
    let picture = "
    XX
   XXXX
  XXXXXX
 XXXXXXXX
XXXXXXXXXX
XXXXXXXXXX
 XXXXXXXX
  XXXXXX
   XXXX
    XX
";
    assert_eq!(
        aztec(AztecSpec::diamond(5)).unwrap().normalized(),
        sq(picture)
    );
}

#[test]
fn diamond_with_central_pair_removed() {
    let picture = "
    XX
   XXXX
  XXXXXX
 XXXXXXXX
XXXX XXXXX
XXXX XXXXX
 XXXXXXXX
  XXXXXX
   XXXX
    XX
";
    let r = aztec(AztecSpec::new(AztecKind::CenterPairRemoved, 5)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

#[test]
fn diamond_with_knight_pair_removed() {
    let picture = "
    XX
   XXXX
  XXXXXX
 XXXX XXX
XXXXXXXXXX
XXXX XXXXX
 XXXXXXXX
  XXXXXX
   XXXX
    XX
";
    let r = aztec(AztecSpec::new(AztecKind::KnightPairRemoved, 5)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

#[test]
fn rectangle_with_central_hole() {
    let picture = "
   XX
  XXXX
 XXXXXX
XXXXXXXX
XXXX XXXX
 XXXXXXXX
  XXXXXX
   XXXX
    XX
";
    let r = aztec(AztecSpec::new(AztecKind::RectCenterHole, 2)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

const INTRUDED_HALF: &str = "
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXX  XXXXXXXXXXX
XX  XXXXXXXXXXXX
X  XXXXXXXXXXXXX
  XXXXXXXXXXXXXX
";

const INTRUDED_FULL: &str = "
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXX
XXXXXXX  XXXXXXX
XXXXXX  XXXXXXXX
XXXXX  XXXXXXXXX
XXXX  XXXXXXXXXX
XXX  XXXXXXXXXXX
XX  XXXXXXXXXXXX
X  XXXXXXXXXXXXX
  XXXXXXXXXXXXXX
";

#[test]
fn intruded_squares() {
    let half = aztec(AztecSpec::new(AztecKind::IntrudedSquare, 8)).unwrap();
    assert_eq!(half.normalized(), sq(INTRUDED_HALF));
    let full = aztec(AztecSpec::intruded(8, 8)).unwrap();
    assert_eq!(full.normalized(), sq(INTRUDED_FULL));
    let g = full.dual_graph();
    assert_eq!(dimers::count_matchings(&g).unwrap(), 1.into());
}

#[test]
fn pillow_zero_mod_four() {
    let picture = "
            XXXX
         XXXXXXXX
      XXXXXXXXXXXX
   XXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXXXXXX
 XXXXXXXXXXXXXXXX
  XXXXXXXXXXXX
   XXXXXXXX
    XXXX
";
    let r = aztec(AztecSpec::new(AztecKind::Pillow0Mod4, 5)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

#[test]
fn pillow_two_mod_four() {
    let picture = "
                  XX
               XXXXXX
            XXXXXXXXXX
         XXXXXXXXXXXXXX
      XXXXXXXXXXXXXXXXXX
   XXXXXXXXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXXXXXXXXXXXX
XXXXXXXXXXXXXXXXXXXXXXXXXX
 XXXXXXXXXXXXXXXXXXXXXX
  XXXXXXXXXXXXXXXXXX
   XXXXXXXXXXXXXX
    XXXXXXXXXX
     XXXXXX
      XX
";
    let r = aztec(AztecSpec::new(AztecKind::Pillow2Mod4, 7)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

#[test]
fn window_of_orders_eight_and_two() {
    let picture = "
       XX
      XXXX
     XXXXXX
    XXXXXXXX
   XXXXXXXXXX
  XXXXXXXXXXXX
 XXXXXX  XXXXXX
XXXXXX    XXXXXX
XXXXXX    XXXXXX
 XXXXXX  XXXXXX
  XXXXXXXXXXXX
   XXXXXXXXXX
    XXXXXXXX
     XXXXXX
      XXXX
       XX
";
    let r = aztec(AztecSpec::window(2, 6)).unwrap();
    assert_eq!(r.normalized(), sq(picture));
}

//! Random instances for the property suites. Everything is drawn from a
//! caller-provided generator so runs are reproducible from a seed.

use pseudoeuclid::{EquilateralHyperbola, ExtendedAngle, HyperbolicNumber, KleinIndex, Motion, Point, Triangle};
use rand::Rng;

pub fn klein<R: Rng>(rng: &mut R) -> KleinIndex {
    KleinIndex::ALL[rng.gen_range(0..4)]
}

pub fn angle<R: Rng>(rng: &mut R, max: f64) -> ExtendedAngle {
    ExtendedAngle::new(rng.gen_range(-max..=max), klein(rng)).expect("bounded angle")
}

pub fn point<R: Rng>(rng: &mut R, half: f64) -> Point {
    Point::new(rng.gen_range(-half..half), rng.gen_range(-half..half))
}

/// A translation plus a `k = ±1` rotation with `|θ| ≤ max_theta`.
pub fn motion<R: Rng>(rng: &mut R, max_theta: f64) -> Motion {
    let k = if rng.gen() { KleinIndex::P1 } else { KleinIndex::M1 };
    let rotation = ExtendedAngle::new(rng.gen_range(-max_theta..=max_theta), k).expect("bounded angle");
    Motion::new(point(rng, 10.0).as_number(), rotation).expect("real rotation")
}

/// Relative margin kept between a side and the null lines, and between the
/// area and the product of two sides.
const MARGIN: f64 = 0.1;

fn well_conditioned(a: Point, b: Point, c: Point) -> bool {
    let sides = [a.vector_to(b), b.vector_to(c), a.vector_to(c)];
    if sides
        .iter()
        .any(|v| v.norm_sqr() < 1e-2 || v.square_module().abs() < MARGIN * v.norm_sqr())
    {
        return false;
    }
    let (u, v) = (sides[0], sides[2]);
    u.cross(v).abs() >= MARGIN * (u.norm_sqr() * v.norm_sqr()).sqrt()
}

/// Vertices uniform in `[-10, 10)²`, rejected until every side is clearly of
/// the first or second kind and the triangle is not flat.
pub fn triangle<R: Rng>(rng: &mut R) -> Triangle {
    loop {
        let (a, b, c) = (point(rng, 10.0), point(rng, 10.0), point(rng, 10.0));
        if well_conditioned(a, b, c) {
            if let Ok(t) = Triangle::new(a, b, c) {
                return t;
            }
        }
    }
}

/// Center in `[-10, 10)²` and `P` with `0.1 ≤ |P| < 20`, either sign.
pub fn hyperbola<R: Rng>(rng: &mut R) -> EquilateralHyperbola {
    let p = rng.gen_range(0.1..20.0) * if rng.gen() { 1.0 } else { -1.0 };
    EquilateralHyperbola::new(point(rng, 10.0), p).expect("nonzero P")
}

pub fn number<R: Rng>(rng: &mut R, half: f64) -> HyperbolicNumber {
    point(rng, half).as_number()
}

use stableshell::constructions::*;
use stableshell::shelling::{
    check_interlacing_theorem, is_shelling, is_stable_shelling, subdivided_relative_complexes,
};
use stableshell::subdivision::{subdivide, Subdivision};
use stableshell::IntPolynomial;

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

#[test]
fn table_top_step_of_nonstable_pile() {
    let s = nonstable_pile_order().unwrap();
    let rel = subdivided_relative_complexes(&s.complex, &s.order, Subdivision::Barycentric).unwrap();
    // Present faces of the last cube: 2 edges, 3 squares and the cube itself.
    // Chains ending in them give f = (6, 54, 96, 48), so h = 6x + 36x^2 + 6x^3.
    assert_eq!(rel[5].h_polynomial(), poly(&[0, 6, 36, 6]));
}

#[test]
fn barycentric_cube_boundaries() {
    let expected = [poly(&[1, 1]), poly(&[1, 6, 1]), poly(&[1, 23, 23, 1])];
    for (d, h) in (1..=3).zip(expected) {
        let c = cube_boundary(d).unwrap().complex;
        assert_eq!(subdivide(&c, Subdivision::Barycentric).unwrap().complex.h_polynomial(), h, "d={d}");
    }
}

#[test]
fn gallery_verdicts_match() {
    for s in gallery().unwrap() {
        let sh = is_shelling(&s.complex, &s.order).unwrap();
        let st = is_stable_shelling(&s.complex, &s.order).unwrap();
        assert_eq!((sh.ok, st.ok), (s.expected.is_shelling, s.expected.is_stable), "{}", s.name);
    }
}

#[test]
fn open_simplices() {
    for d in 0..=4 {
        for l in 0..=d + 1 {
            assert_eq!(simplex_relative(d, l).unwrap().h_polynomial(), IntPolynomial::monomial(l, 1.into()));
        }
    }
}

#[test]
fn theorem_on_small_scenarios() {
    for s in [cube_boundary(3).unwrap(), pile_of_cubes(&[1, 3, 2]).unwrap(), capped(3, 1).unwrap()] {
        for sub in [Subdivision::Barycentric, Subdivision::Edgewise(2)] {
            let t = check_interlacing_theorem(&s.complex, &s.order, sub).unwrap();
            assert!(t.additive && t.ordering_found && t.real_rooted, "{} {sub:?}: {t:?}", s.name);
        }
    }
}

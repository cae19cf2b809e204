use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use stableshell::cellcomplex::{is_stable_by_face_lattice, is_stable_by_opposing_pairs, Complex};
use stableshell::constructions::{cube_boundary, pile_of_cubes};
use stableshell::eulerian::{colored_eulerian, colored_eulerian_by_descents, DEFAULT_BUDGET};
use stableshell::lineshell::{cube_polytope, line_shelling_order, random_line_search, LineQuery};
use stableshell::polyreal::{f_from_h, h_from_f, interlaces, interlaces_unreduced, is_real_rooted, reverse, veronese_section};
use stableshell::shelling::{is_shelling, is_stable_shelling, ShellingOrder};
use stableshell::subdivision::{subdivide, Subdivision};
use stableshell::verify::unit_cube;
use stableshell::IntPolynomial;

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..=50, 0..7).prop_map(|c| IntPolynomial::from_i64(&c))
}

/// Product of `(x + a)` over the given integers: real-rooted by construction.
fn from_roots(roots: &[i64]) -> IntPolynomial {
    roots.iter().fold(IntPolynomial::one(), |acc, &a| acc * IntPolynomial::from_i64(&[a, 1]))
}

/// Sign changes of `p` on a fine rational grid; a lower bound on the real roots.
fn grid_sign_changes(p: &IntPolynomial) -> usize {
    let mut last = std::cmp::Ordering::Equal;
    let mut changes = 0;
    for k in -4000i64..=4000 {
        let s = p.sign_at(&BigRational::new(BigInt::from(k), BigInt::from(97)));
        if s != std::cmp::Ordering::Equal {
            if last != std::cmp::Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

proptest! {
    #[test]
    fn h_and_f_are_inverse(p in poly(), extra in 0usize..3) {
        let m = p.degree().unwrap_or(0) + extra;
        prop_assert_eq!(f_from_h(&h_from_f(&p, m).unwrap(), m).unwrap(), p.clone());
        prop_assert_eq!(h_from_f(&f_from_h(&p, m).unwrap(), m).unwrap(), p);
    }

    #[test]
    fn reverse_is_an_involution(p in poly(), extra in 0usize..3) {
        let d = p.degree().unwrap_or(0) + extra;
        prop_assert_eq!(reverse(&reverse(&p, d).unwrap(), d).unwrap(), p);
    }

    #[test]
    fn veronese_sections_reassemble(p in poly(), r in 1usize..5) {
        let mut sum = IntPolynomial::zero();
        for l in 0..r {
            let sec = veronese_section(&p, r, l).unwrap();
            for (k, c) in sec.coeffs().iter().enumerate() {
                sum = sum + IntPolynomial::monomial(k * r + l, c.clone());
            }
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn products_of_linear_factors_are_real_rooted(roots in prop::collection::vec(-9i64..=9, 1..6)) {
        prop_assert!(is_real_rooted(&from_roots(&roots)));
    }

    #[test]
    fn grid_sign_changes_bound_the_real_roots(p in poly()) {
        prop_assume!(!p.is_zero());
        let sf = p.squarefree_part();
        let changes = grid_sign_changes(&sf);
        prop_assert!(changes <= sf.degree().unwrap());
        if changes == sf.degree().unwrap() {
            prop_assert!(is_real_rooted(&p));
        }
    }

    #[test]
    fn distinct_grid_roots_are_all_seen(roots in prop::collection::btree_set(-30i64..=30, 1..6)) {
        let r: Vec<i64> = roots.into_iter().collect();
        let p = from_roots(&r);
        prop_assert_eq!(grid_sign_changes(&p), r.len());
        prop_assert!(is_real_rooted(&p));
    }

    #[test]
    fn interlacing_agrees_with_unreduced_on_coprime_pairs(
        a in prop::collection::btree_set(1i64..30, 1..4),
        b in prop::collection::btree_set(1i64..30, 1..4),
    ) {
        prop_assume!(a.is_disjoint(&b));
        let p = from_roots(&a.iter().copied().collect::<Vec<_>>());
        let q = from_roots(&b.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(interlaces(&p, &q).unwrap(), interlaces_unreduced(&p, &q).unwrap());
    }

    #[test]
    fn interlacing_pairs_have_real_rooted_combinations(
        a in prop::collection::btree_set(1i64..30, 1..4),
        b in prop::collection::btree_set(1i64..30, 1..4),
        s in 0i64..=5,
    ) {
        let p = from_roots(&a.iter().copied().collect::<Vec<_>>());
        let q = from_roots(&b.iter().copied().collect::<Vec<_>>());
        if interlaces(&p, &q).unwrap() {
            let combo = p.scale(&BigInt::from(s)) + q.scale(&BigInt::from(5 - s));
            prop_assert!(is_real_rooted(&combo));
        }
    }

    #[test]
    fn eulerian_formula_matches_descents(d in 1usize..5, r in 1usize..4, l in 0usize..5) {
        prop_assume!(l <= d);
        prop_assert_eq!(
            colored_eulerian(d, l, r).unwrap(),
            colored_eulerian_by_descents(d, l, r, DEFAULT_BUDGET).unwrap()
        );
    }

    #[test]
    fn eulerian_convex_combinations_are_real_rooted(d in 1usize..5, r in 2usize..4, w in prop::collection::vec(0i64..4, 5)) {
        let mut combo = IntPolynomial::zero();
        for (l, &wl) in w.iter().enumerate().take(d + 1) {
            combo = combo + colored_eulerian(d, l, r).unwrap().scale(&BigInt::from(wl));
        }
        prop_assert!(is_real_rooted(&combo));
    }

    #[test]
    fn stable_orders_are_shellings(heights in prop::collection::vec(1usize..3, 1..4), seed in any::<u64>()) {
        let s = pile_of_cubes(&heights).unwrap();
        let n = s.complex.len();
        let mut order: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (x >> 33) as usize % (i + 1));
        }
        let so = ShellingOrder::new(order, n).unwrap();
        if is_stable_shelling(&s.complex, &so).unwrap().ok {
            prop_assert!(is_shelling(&s.complex, &so).unwrap().ok);
        }
    }

    #[test]
    fn random_line_search_is_reproducible(seed in any::<u64>()) {
        let p = cube_polytope(2).unwrap();
        prop_assert_eq!(random_line_search(&p, 5, seed, 10_000).unwrap(), random_line_search(&p, 5, seed, 10_000).unwrap());
    }

    #[test]
    fn reversed_lines_reverse_the_order(px in 1i64..7, py in 1i64..7, vx in -9i64..=9, vy in -9i64..=9) {
        let q = |n: i64| BigRational::new(n.into(), 8.into());
        let z = |n: i64| BigRational::from_integer(n.into());
        let p = cube_polytope(2).unwrap();
        let Ok(line) = LineQuery::new(vec![q(px), q(py)], vec![z(vx), z(vy)]) else { return Ok(()) };
        let Ok(fwd) = line_shelling_order(&p, &line) else { return Ok(()) };
        let bwd = line_shelling_order(&p, &line.reversed()).unwrap();
        let mut rev = fwd.order.clone();
        rev.reverse();
        prop_assert_eq!(&bwd.order, &rev);
        for (i, &f) in fwd.order.iter().enumerate() {
            let j = bwd.order.iter().position(|&g| g == f).unwrap();
            let mut complement: Vec<usize> = p.neighbors(f).iter().copied().filter(|n| !fwd.removed[i].contains(n)).collect();
            complement.sort();
            let mut got = bwd.removed[j].clone();
            got.sort();
            prop_assert_eq!(got, complement);
        }
    }
}

#[test]
fn stability_rules_agree_on_every_subset() {
    for d in 1..=3 {
        let c = unit_cube(d).unwrap();
        let cell = c.cell(0);
        for mask in 0..1u64 << (2 * d) {
            assert_eq!(is_stable_by_face_lattice(cell, mask), is_stable_by_opposing_pairs(cell, mask).unwrap(), "d={d} mask={mask:b}");
        }
    }
}

#[test]
fn face_counts_of_subdivided_cubes() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for d in 1..=3 {
        let c = unit_cube(d).unwrap();
        let sd = subdivide(&c, Subdivision::Barycentric).unwrap().complex;
        assert_eq!(sd.len(), 2usize.pow(d as u32) * fact(d), "sd d={d}");
        for r in 2..=3 {
            let ew = subdivide(&c, Subdivision::Edgewise(r)).unwrap().complex;
            assert_eq!(ew.len(), r.pow(d as u32) * fact(d), "edgewise d={d} r={r}");
        }
    }
}

#[test]
fn subdivided_spheres_have_symmetric_h() {
    for d in 1..=3 {
        let c: Complex = cube_boundary(d).unwrap().complex;
        for s in [Subdivision::Barycentric, Subdivision::Edgewise(2), Subdivision::Edgewise(3)] {
            let h = subdivide(&c, s).unwrap().complex.h_polynomial();
            assert_eq!(reverse(&h, d).unwrap(), h, "d={d} {s:?}");
            assert_eq!(h.coeff(0), BigInt::from(1));
        }
    }
}

//! Named verification suites with exact checks of the main computations.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cellcomplex::{is_stable_relative, Complex, CubeChart, Face, RelativeComplex, VertexId};
use crate::constructions::{
    capped, cube_boundary, cuboid_boundary, gallery, nonstable_pile_order, pile_of_cubes,
    simplex_relative, stacked_simplicial, NamedScenario,
};
use crate::error::{Error, Result};
use crate::eulerian::{
    colored_eulerian, colored_eulerian_by_descents, eulerian_degree, hstar_by_interpolation,
    hstar_halfopen_cube, type_b_eulerian, HalfOpenBox,
};
use crate::lineshell::{
    cube_polytope, is_stable_line_shelling, quadrilateral, random_line_search, simplex_polytope,
    strong_stability_steps, facet_region_steps, LineQuery, Q, FM_BUDGET,
};
use crate::polyreal::{
    convolution_power, is_interlacing_sequence, is_real_rooted, reverse, veronese_section,
    IntPolynomial,
};
use crate::shelling::{
    check_interlacing_theorem, is_shelling, is_stable_shelling, shelling_steps,
    subdivided_relative_complexes,
};
use crate::subdivision::{
    barycentric, edgewise_cubical, edgewise_simplicial, h_edgewise_from_h, h_sd_from_h, subdivide,
    Subdivision,
};

pub const SUITES: [&str; 13] = [
    "table-top",
    "cube-boundary-sd",
    "half-open-simplex",
    "sd-transform",
    "interlacing-ladder",
    "eulerian-3way",
    "piles",
    "cuboids",
    "capped",
    "edgewise-simplicial",
    "edgewise-cubical",
    "line-shelling",
    "subdivision-theorem",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

/// Settings shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seed: u64,
    pub budget: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { seed: 2024, budget: crate::eulerian::DEFAULT_BUDGET }
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, got: &T, want: &T) {
        self.push(name, got == want, format!("got {got}, expected {want}"));
    }
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn xpow(k: usize) -> IntPolynomial {
    IntPolynomial::monomial(k, BigInt::from(1))
}

pub fn run_suite(id: &str, s: Settings) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Checks::default();
    match id {
        "table-top" => table_top(&mut c)?,
        "cube-boundary-sd" => cube_boundary_sd(&mut c, s)?,
        "half-open-simplex" => half_open_simplex(&mut c)?,
        "sd-transform" => sd_transform(&mut c)?,
        "interlacing-ladder" => interlacing_ladder(&mut c)?,
        "eulerian-3way" => eulerian_3way(&mut c, s)?,
        "piles" => piles(&mut c)?,
        "cuboids" => cuboids(&mut c)?,
        "capped" => capped_suite(&mut c)?,
        "edgewise-simplicial" => edgewise_simplicial_suite(&mut c)?,
        "edgewise-cubical" => edgewise_cubical_suite(&mut c, s)?,
        "line-shelling" => line_shelling(&mut c, s)?,
        "subdivision-theorem" => subdivision_theorem(&mut c)?,
        _ => return Err(Error::Parse(format!("unknown suite {id}; known: {}", SUITES.join(", ")))),
    }
    Ok(SuiteReport {
        id: id.to_string(),
        passed: c.0.iter().all(|k| k.passed),
        checks: c.0,
        wall_ms: start.elapsed().as_millis(),
    })
}

pub fn run_all(s: Settings) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|id| run_suite(id, s)).collect()
}

/// A single closed d-cube on vertices `0..2^d`.
pub fn unit_cube(d: usize) -> Result<Complex> {
    Complex::cubical(vec![CubeChart::new(d, (0..1u32 << d).map(VertexId).collect())?])
}

/// The cube minus the facets of the half-open box normal form with parameter `l`.
pub fn cube_relative(d: usize, l: usize) -> Result<RelativeComplex> {
    let cube = unit_cube(d)?;
    let facets = cube.cell(0).facets();
    let gens: Vec<Face> = HalfOpenBox::new(d, 1, l)?
        .removed_facets()
        .into_iter()
        .map(|(axis, upper)| facets[2 * axis + usize::from(upper)].clone())
        .collect();
    RelativeComplex::generated(cube, &gens)
}

/// Every relative complex of the d-cube given by a stable set of removed facets.
pub fn stable_cube_relatives(d: usize) -> Result<Vec<(u64, RelativeComplex)>> {
    let cube = unit_cube(d)?;
    let cell = cube.cell(0).clone();
    let facets = cell.facets();
    let mut out = Vec::new();
    for mask in 0..1u64 << (2 * d) {
        if is_stable_relative(&cell, mask) {
            let gens: Vec<Face> =
                (0..2 * d).filter(|k| mask >> k & 1 == 1).map(|k| facets[k].clone()).collect();
            out.push((mask, RelativeComplex::generated(cube.clone(), &gens)?));
        }
    }
    Ok(out)
}

fn table_top(c: &mut Checks) -> Result<()> {
    let s = nonstable_pile_order()?;
    let steps = shelling_steps(&s.complex, &s.order)?;
    let last = &steps[5];
    let cell = s.complex.cell(last.cell);
    c.push(
        "last step removes an opposing pair on both sides",
        !last.is_stable_step(cell) && last.is_shelling_step(cell),
        format!("removed facets {:?}", last.intersection_facets),
    );
    let h = barycentric(&last.relative(&s.complex))?.h_polynomial();
    c.eq("h(sd) of the table-top", &h, &poly(&[0, 22, 4, 22]));
    c.push("h(sd) of the table-top is not real-rooted", !is_real_rooted(&h), format!("h = {h}"));
    Ok(())
}

fn cube_boundary_sd(c: &mut Checks, s: Settings) -> Result<()> {
    for d in 1..=4 {
        let h = subdivide(&cube_boundary(d)?.complex, Subdivision::Barycentric)?.complex.h_polynomial();
        c.eq(format!("d={d} vs signed-permutation descents"), &h, &type_b_eulerian(d, s.budget)?);
        c.eq(format!("d={d} vs A^(2)_(d,0)"), &h, &colored_eulerian(d, 0, 2)?);
    }
    Ok(())
}

fn half_open_simplex(c: &mut Checks) -> Result<()> {
    for d in 0..=6 {
        for l in 0..=d + 1 {
            c.eq(format!("d={d} l={l}"), &simplex_relative(d, l)?.h_polynomial(), &xpow(l));
        }
    }
    Ok(())
}

fn sd_transform(c: &mut Checks) -> Result<()> {
    for d in 0..=5 {
        for l in 0..=d + 1 {
            let rc = simplex_relative(d, l)?;
            let got = barycentric(&rc)?.h_polynomial();
            c.eq(format!("simplex d={d} l={l}"), &got, &h_sd_from_h(&rc.h_polynomial(), d + 1)?);
        }
    }
    for d in 1..=3 {
        for (mask, rc) in stable_cube_relatives(d)? {
            let got = barycentric(&rc)?.h_polynomial();
            let h = rc.h_polynomial();
            c.eq(format!("cube d={d} removed={mask:b} h={h}"), &got, &h_sd_from_h(&h, d + 1)?);
            let l = mask.count_ones() as usize;
            c.eq(
                format!("cube d={d} removed={mask:b} vs half-open box h*"),
                &got,
                &hstar_halfopen_cube(d, l, 2)?,
            );
        }
    }
    Ok(())
}

/// `(A_{d,0}, ..., A_{d,d}, x I_d A_{d,d}, ..., x I_d A_{d,0})` for `r` colors.
pub fn ladder(d: usize, r: usize) -> Result<Vec<IntPolynomial>> {
    let a = (0..=d).map(|l| colored_eulerian(d, l, r)).collect::<Result<Vec<_>>>()?;
    let mut seq = a.clone();
    for p in a.iter().rev() {
        seq.push(reverse(p, d)?.shift(1));
    }
    Ok(seq)
}

fn interlacing_ladder(c: &mut Checks) -> Result<()> {
    for d in 1..=5 {
        c.push(format!("r=2 d={d}"), is_interlacing_sequence(&ladder(d, 2)?)?, "");
    }
    for r in [2, 3] {
        for d in 1..=4 {
            c.push(format!("r={r} d={d} colored"), is_interlacing_sequence(&ladder(d, r)?)?, "");
        }
    }
    // One color leaves a degree gap between the two halves.
    c.push("r=1 d=2 is rejected", !is_interlacing_sequence(&ladder(2, 1)?)?, "");
    Ok(())
}

fn eulerian_3way(c: &mut Checks, s: Settings) -> Result<()> {
    for d in 1..=4 {
        for r in 1..=3 {
            for l in 0..=d {
                let a = colored_eulerian(d, l, r)?;
                let by_desc = colored_eulerian_by_descents(d, l, r, s.budget)?;
                let bx = HalfOpenBox::new(d, r, l)?;
                let ehr = hstar_by_interpolation(&bx, s.budget)?;
                let tag = format!("d={d} r={r} l={l}");
                c.eq(format!("{tag} descents"), &by_desc, &a);
                c.eq(format!("{tag} lattice points"), &ehr.hstar, &a);
                c.push(
                    format!("{tag} degree"),
                    a.degree() == Some(eulerian_degree(d, l, r)),
                    format!("degree {:?}", a.degree()),
                );
                c.push(
                    format!("{tag} counts fit a polynomial with the right constant term"),
                    ehr.polynomial_check
                        && ehr.constant_term == num_rational::BigRational::from_integer(bx.euler_characteristic().into()),
                    format!("constant term {}", ehr.constant_term),
                );
            }
        }
    }
    Ok(())
}

fn scenario_verdicts(c: &mut Checks, s: &NamedScenario) -> Result<()> {
    let sh = is_shelling(&s.complex, &s.order)?;
    let st = is_stable_shelling(&s.complex, &s.order)?;
    c.push(
        format!("{} verdicts", s.name),
        sh.ok == s.expected.is_shelling && st.ok == s.expected.is_stable,
        format!("shelling {:?}, stable {:?}", sh, st),
    );
    Ok(())
}

fn piles(c: &mut Checks) -> Result<()> {
    for a in [&[2usize, 2][..], &[1, 3, 2], &[2, 2, 2]] {
        scenario_verdicts(c, &pile_of_cubes(a)?)?;
    }
    let s = nonstable_pile_order()?;
    scenario_verdicts(c, &s)?;
    let st = is_stable_shelling(&s.complex, &s.order)?;
    c.push("non-stable order fails at step 6", st.failing_step == Some(6), format!("{st:?}"));
    Ok(())
}

fn sd_sum_checks(c: &mut Checks, s: &NamedScenario) -> Result<()> {
    let total = subdivide(&s.complex, Subdivision::Barycentric)?.complex.h_polynomial();
    let parts: IntPolynomial = subdivided_relative_complexes(&s.complex, &s.order, Subdivision::Barycentric)?
        .iter()
        .map(|r| r.h_polynomial())
        .sum();
    c.push(format!("{} h(sd) real-rooted", s.name), is_real_rooted(&total), format!("h = {total}"));
    c.eq(format!("{} h(sd) = sum over steps", s.name), &parts, &total);
    Ok(())
}

fn cuboids(c: &mut Checks) -> Result<()> {
    let mut cases: Vec<(usize, usize)> = (1..=3).flat_map(|d| (0..=d).map(move |l| (d, l))).collect();
    cases.extend((0..=2).map(|l| (4, l)));
    for (d, l) in cases {
        let s = cuboid_boundary(d, l)?;
        let expected_cells: usize = (0..d)
            .map(|i| 2 * (1usize << (l - usize::from(i < l))))
            .sum();
        c.eq(format!("{} cell count", s.name), &s.complex.len(), &expected_cells);
        scenario_verdicts(c, &s)?;
        sd_sum_checks(c, &s)?;
    }
    Ok(())
}

fn capped_suite(c: &mut Checks) -> Result<()> {
    for (l, cells) in [(1, 10usize), (2, 14)] {
        let s = capped(3, l)?;
        c.eq(format!("{} cell count", s.name), &s.complex.len(), &cells);
        scenario_verdicts(c, &s)?;
        sd_sum_checks(c, &s)?;
    }
    Ok(())
}

fn edgewise_simplicial_suite(c: &mut Checks) -> Result<()> {
    for d in 1..=3 {
        for l in 1..=d + 1 {
            for r in 1..=4 {
                let h = edgewise_simplicial(&simplex_relative(d, l)?, r)?.h_polynomial();
                let tag = format!("d={d} l={l} r={r}");
                if l <= r {
                    let p = veronese_section(&convolution_power(r, d + 1), r, r - l)?.shift(1);
                    c.eq(format!("{tag} section formula"), &h, &p);
                }
                c.eq(format!("{tag} transform"), &h, &h_edgewise_from_h(&xpow(l), d, r)?);
            }
        }
    }
    let mut scenarios = Vec::new();
    for d in 2..=4 {
        for k in 0..=2 {
            scenarios.push(stacked_simplicial(d, k)?);
        }
    }
    for s in &scenarios {
        let dim = s.complex.dim();
        for r in dim + 1..=dim + 2 {
            let sub = subdivide(&s.complex, Subdivision::Edgewise(r))?.complex;
            let h = sub.h_polynomial();
            c.push(format!("{} r={r} real-rooted", s.name), is_real_rooted(&h), format!("h = {h}"));
            c.eq(
                format!("{} r={r} transform", s.name),
                &h,
                &h_edgewise_from_h(&s.complex.h_polynomial(), dim, r)?,
            );
        }
    }
    // Every nonnegative h with small coefficients.
    for d in 1..=3usize {
        let mut bad = Vec::new();
        let mut count = 0;
        for code in 0..3usize.pow(d as u32 + 2) {
            let coeffs: Vec<i64> = (0..d + 2).map(|k| (code / 3usize.pow(k as u32) % 3) as i64).collect();
            let h = poly(&coeffs);
            if h.is_zero() {
                continue;
            }
            for r in d + 1..=d + 2 {
                count += 1;
                let e = h_edgewise_from_h(&h, d, r)?;
                if !is_real_rooted(&e) {
                    bad.push(format!("{h} r={r}"));
                }
            }
        }
        c.push(
            format!("d={d}: transforms of nonnegative h are real-rooted"),
            bad.is_empty(),
            format!("{count} cases, failures {bad:?}"),
        );
    }
    Ok(())
}

fn edgewise_cubical_suite(c: &mut Checks, s: Settings) -> Result<()> {
    for d in 1..=3 {
        for r in 1..=3 {
            for l in 0..=2 * d {
                let h = edgewise_cubical(&cube_relative(d, l)?, r)?.h_polynomial();
                let tag = format!("d={d} l={l} r={r}");
                c.eq(format!("{tag} closed form"), &h, &hstar_halfopen_cube(d, l, r)?);
                let ehr = hstar_by_interpolation(&HalfOpenBox::new(d, r, l)?, s.budget)?;
                c.eq(format!("{tag} lattice points"), &h, &ehr.hstar);
            }
        }
    }
    let h = subdivide(&cube_boundary(3)?.complex, Subdivision::Edgewise(2))?.complex.h_polynomial();
    c.push("boundary of the 3-cube, r=2, real-rooted", is_real_rooted(&h), format!("h = {h}"));
    Ok(())
}

fn rational(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn line_shelling(c: &mut Checks, s: Settings) -> Result<()> {
    let cube = cube_polytope(3)?;
    let st = random_line_search(&cube, 100, s.seed, FM_BUDGET)?;
    let generic = st.trials - st.genericity_failures;
    c.push(
        "cube: every generic line gives a stable, strongly stable shelling",
        generic > 0 && st.shelling == generic && st.stable == generic && st.strongly_stable == generic,
        format!("{st:?}"),
    );
    c.push("cube: implication chain holds", st.chain_violations == 0, "");
    let quad = quadrilateral();
    let st = random_line_search(&quad, 100, s.seed, FM_BUDGET)?;
    let generic = st.trials - st.genericity_failures;
    c.push(
        "quadrilateral: every generic line gives a stable shelling",
        generic > 0 && st.stable == generic && st.shelling == generic,
        format!("{st:?}"),
    );
    c.push("quadrilateral: implication chain holds", st.chain_violations == 0, "");
    let tri = simplex_polytope(2)?;
    let st = random_line_search(&tri, 50, s.seed, FM_BUDGET)?;
    c.push(
        "triangle: strongly stable",
        st.strongly_stable == st.trials - st.genericity_failures && st.chain_violations == 0,
        format!("{st:?}"),
    );
    let l = LineQuery::new(vec![rational(2, 1), rational(1, 2)], vec![rational(2, 1), rational(5, 1)])?;
    let strong = strong_stability_steps(&quad, &l, FM_BUDGET)?;
    let region = facet_region_steps(&quad, &l, FM_BUDGET)?;
    let stable = is_stable_line_shelling(&quad, &l)?;
    c.push(
        "quadrilateral line: third point fails the strong test only",
        strong == [true, true, false, true] && region.iter().all(|&b| b) && stable.stable.ok,
        format!("strong {strong:?}, facet {region:?}"),
    );
    Ok(())
}

fn registered(s: &NamedScenario) -> [Subdivision; 2] {
    let r = match s.complex.kind() {
        crate::cellcomplex::Kind::Cubical => 2,
        crate::cellcomplex::Kind::Simplicial => s.complex.dim() + 1,
    };
    [Subdivision::Barycentric, Subdivision::Edgewise(r)]
}

fn subdivision_theorem(c: &mut Checks) -> Result<()> {
    for s in gallery()? {
        if !s.expected.is_stable {
            continue;
        }
        for sub in registered(&s) {
            let t = check_interlacing_theorem(&s.complex, &s.order, sub)?;
            c.push(
                format!("{} {sub:?}", s.name),
                t.additive && t.ordering_found && t.real_rooted,
                format!("h = {}, order {:?}", t.h_total, t.interlacing_order),
            );
        }
    }
    let s = nonstable_pile_order()?;
    let t = check_interlacing_theorem(&s.complex, &s.order, Subdivision::Barycentric)?;
    c.push(
        "non-stable pile: table-top step is incomparable",
        t.incomparable_pairs.iter().any(|&(i, j)| i == 6 || j == 6),
        format!("step h {:?}", t.step_h.iter().map(|h| h.to_string()).collect::<Vec<_>>()),
    );
    Ok(())
}

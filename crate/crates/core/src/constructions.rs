//! Generators for the named complexes and their shelling orders.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cellcomplex::{Complex, ComplexJson, CubeChart, Face, RelativeComplex, VertexId};
use crate::error::{Error, Result};
use crate::shelling::ShellingOrder;

/// Expected verdicts of a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub is_shelling: bool,
    pub is_stable: bool,
}

impl Expected {
    pub const STABLE: Expected = Expected { is_shelling: true, is_stable: true };
}

/// A complex with its intended shelling order and expected verdicts.
#[derive(Clone, Debug)]
pub struct NamedScenario {
    pub name: String,
    pub complex: Complex,
    pub order: ShellingOrder,
    pub expected: Expected,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub name: String,
    pub complex: ComplexJson,
    pub order: Vec<usize>,
    pub expected: Expected,
}

impl NamedScenario {
    pub fn to_json(&self) -> ScenarioJson {
        ScenarioJson {
            name: self.name.clone(),
            complex: self.complex.to_json(),
            order: self.order.as_slice().to_vec(),
            expected: self.expected,
        }
    }

    /// The complex listed in shelling order, with the identity order.
    pub fn in_order(&self) -> Result<NamedScenario> {
        let cells = self.order.as_slice().iter().map(|&i| self.complex.cell(i).clone()).collect();
        Ok(NamedScenario {
            name: self.name.clone(),
            complex: Complex::new(cells)?,
            order: ShellingOrder::identity(self.complex.len()),
            expected: self.expected,
        })
    }
}

impl ScenarioJson {
    pub fn to_scenario(&self) -> Result<NamedScenario> {
        let complex = self.complex.to_complex()?;
        let order = ShellingOrder::new(self.order.clone(), complex.len())?;
        Ok(NamedScenario { name: self.name.clone(), complex, order, expected: self.expected })
    }
}

/// Assigns vertex ids to lattice points in first-seen order.
#[derive(Default)]
struct Lattice {
    ids: HashMap<Vec<i64>, VertexId>,
}

impl Lattice {
    fn id(&mut self, p: &[i64]) -> VertexId {
        let next = VertexId(self.ids.len() as u32);
        *self.ids.entry(p.to_vec()).or_insert(next)
    }

    /// Axis-parallel box at `origin` spanning `len` along each free axis (ascending).
    fn boxed(&mut self, origin: &[i64], free: &[(usize, i64)]) -> CubeChart {
        let k = free.len();
        let corners = (0..1usize << k)
            .map(|idx| {
                let mut p = origin.to_vec();
                for (j, &(axis, len)) in free.iter().enumerate() {
                    if idx >> (k - 1 - j) & 1 == 1 {
                        p[axis] += len;
                    }
                }
                self.id(&p)
            })
            .collect();
        CubeChart::new(k, corners).expect("distinct box corners")
    }
}

fn check_range(what: &str, v: usize, lo: usize, hi: usize) -> Result<()> {
    if v < lo || v > hi {
        return Err(Error::Range(format!("{what} = {v} outside {lo}..={hi}")));
    }
    Ok(())
}

/// Boundary of the d-cube; vertex ids are binary indices with coordinate 1 most significant.
pub fn cube_boundary(d: usize) -> Result<NamedScenario> {
    check_range("d", d, 1, 5)?;
    let mut lat = Lattice::default();
    for idx in 0..1usize << d {
        let p: Vec<i64> = (0..d).map(|a| (idx >> (d - 1 - a) & 1) as i64).collect();
        lat.id(&p);
    }
    let mut charts = Vec::with_capacity(2 * d);
    for side in 0..2 {
        for i in 0..d {
            let mut origin = vec![0; d];
            origin[i] = side;
            let free: Vec<(usize, i64)> = (0..d).filter(|&a| a != i).map(|a| (a, 1)).collect();
            charts.push(lat.boxed(&origin, &free));
        }
    }
    let complex = Complex::cubical(charts)?;
    Ok(NamedScenario {
        name: format!("cube-boundary-{d}"),
        order: ShellingOrder::identity(complex.len()),
        complex,
        expected: Expected::STABLE,
    })
}

/// Unit cubes of the box `[0,a_1] x ... x [0,a_d]` in lexicographic order.
pub fn pile_of_cubes(a: &[usize]) -> Result<NamedScenario> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::Range(format!("pile sizes must be positive, got {a:?}")));
    }
    let total = a.iter().try_fold(1usize, |acc, &x| acc.checked_mul(x));
    if total.is_none_or(|t| t > 500) {
        return Err(Error::BudgetExceeded(format!("pile {a:?} has more than 500 cubes")));
    }
    let d = a.len();
    let mut lat = Lattice::default();
    for p in a.iter().map(|&x| 0..=x as i64).multi_cartesian_product() {
        lat.id(&p);
    }
    let free: Vec<(usize, i64)> = (0..d).map(|i| (i, 1)).collect();
    let charts: Vec<CubeChart> = a
        .iter()
        .map(|&x| 0..x as i64)
        .multi_cartesian_product()
        .map(|z| lat.boxed(&z, &free))
        .collect();
    let complex = Complex::cubical(charts)?;
    Ok(NamedScenario {
        name: format!("pile-{}", a.iter().join("-")),
        order: ShellingOrder::identity(complex.len()),
        complex,
        expected: Expected::STABLE,
    })
}

/// The pile `P_3(1,3,2)` with a shelling that is not stable at its last step.
pub fn nonstable_pile_order() -> Result<NamedScenario> {
    let pile = pile_of_cubes(&[1, 3, 2])?;
    // Lexicographic indices of (0,0,0),(0,1,0),(0,2,0),(0,0,1),(0,2,1),(0,1,1).
    let order = ShellingOrder::new(vec![0, 2, 4, 1, 5, 3], pile.complex.len())?;
    Ok(NamedScenario {
        name: "pile-nonstable".into(),
        complex: pile.complex,
        order,
        expected: Expected { is_shelling: true, is_stable: false },
    })
}

/// Boundary of `[0,2]^d` cut by the hyperplanes `x_1 = 1, ..., x_l = 1`.
pub fn cuboid_boundary(d: usize, l: usize) -> Result<NamedScenario> {
    check_range("d", d, 1, 4)?;
    check_range("l", l, 0, d)?;
    let mut lat = Lattice::default();
    let mut charts = Vec::new();
    for side in [0i64, 2] {
        for i in 0..d {
            let axes: Vec<usize> = (0..d).filter(|&a| a != i).collect();
            let pieces = axes
                .iter()
                .map(|&a| if a < l { vec![(0i64, 1i64), (1, 1)] } else { vec![(0, 2)] })
                .multi_cartesian_product();
            for piece in pieces {
                let mut origin = vec![0i64; d];
                origin[i] = side;
                let mut free = Vec::new();
                for (&a, &(start, len)) in axes.iter().zip(&piece) {
                    origin[a] = start;
                    free.push((a, len));
                }
                charts.push(lat.boxed(&origin, &free));
            }
        }
    }
    let complex = Complex::cubical(charts)?;
    Ok(NamedScenario {
        name: format!("cuboid-{d}-{l}"),
        order: ShellingOrder::identity(complex.len()),
        complex,
        expected: Expected::STABLE,
    })
}

/// A boundary cell with coordinates and outward normal, used for capping.
#[derive(Clone, Debug)]
struct GeoCell {
    origin: Vec<i64>,
    free: Vec<usize>,
    normal: (usize, i64),
    corners: Vec<VertexId>,
}

impl GeoCell {
    fn point(&self, idx: usize) -> Vec<i64> {
        let k = self.free.len();
        let mut p = self.origin.clone();
        for (j, &a) in self.free.iter().enumerate() {
            p[a] += (idx >> (k - 1 - j) & 1) as i64;
        }
        p
    }
}

fn cube_cells(d: usize) -> Vec<GeoCell> {
    let mut out = Vec::new();
    for side in 0..2i64 {
        for i in 0..d {
            let mut origin = vec![0; d];
            origin[i] = side;
            let free: Vec<usize> = (0..d).filter(|&a| a != i).collect();
            let mut c = GeoCell { origin, free, normal: (i, 2 * side - 1), corners: Vec::new() };
            c.corners = (0..1usize << (d - 1))
                .map(|idx| {
                    let p = c.point(idx);
                    VertexId(p.iter().fold(0u32, |acc, &x| acc * 2 + x as u32))
                })
                .collect();
            out.push(c);
        }
    }
    out
}

/// Replaces the cell at position `k` by the other boundary cells of a cube glued on it.
fn cap(cells: &mut Vec<GeoCell>, k: usize, next_id: &mut u32) -> Result<()> {
    let f = cells
        .get(k)
        .cloned()
        .ok_or_else(|| Error::Range(format!("no facet at position {k}")))?;
    let (n, s) = f.normal;
    let mut ids: BTreeMap<Vec<i64>, VertexId> = BTreeMap::new();
    for idx in 0..f.corners.len() {
        ids.insert(f.point(idx), f.corners[idx]);
    }
    let far = f.origin[n] + s;
    let mut id_of = |p: &[i64]| -> VertexId {
        *ids.entry(p.to_vec()).or_insert_with(|| {
            *next_id += 1;
            VertexId(*next_id - 1)
        })
    };
    let mut all_axes = f.free.clone();
    all_axes.push(n);
    all_axes.sort_unstable();
    let low_n = f.origin[n].min(far);
    let mut make = |fixed: usize, value: i64, normal: (usize, i64)| -> GeoCell {
        let mut origin = f.origin.clone();
        origin[n] = low_n;
        origin[fixed] = value;
        let free: Vec<usize> = all_axes.iter().copied().filter(|&a| a != fixed).collect();
        let mut c = GeoCell { origin, free, normal, corners: Vec::new() };
        c.corners = (0..f.corners.len()).map(|idx| id_of(&c.point(idx))).collect();
        c
    };
    let mut new_cells = Vec::new();
    for &a in &f.free {
        new_cells.push(make(a, f.origin[a], (a, -1)));
    }
    new_cells.push(make(n, far, (n, s)));
    for &a in &f.free {
        new_cells.push(make(a, f.origin[a] + 1, (a, 1)));
    }
    cells.splice(k..=k, new_cells);
    Ok(())
}

/// The d-cube boundary capped successively at the given positions of the current order.
pub fn l_fold_capped(d: usize, caps: &[usize]) -> Result<NamedScenario> {
    check_range("d", d, 2, 5)?;
    let mut cells = cube_cells(d);
    let mut next_id = 1u32 << d;
    for &k in caps {
        cap(&mut cells, k, &mut next_id)?;
        cubical_from(&cells)?;
    }
    let complex = cubical_from(&cells)?;
    Ok(NamedScenario {
        name: format!("capped-{d}-{}", caps.len()),
        order: ShellingOrder::identity(complex.len()),
        complex,
        expected: Expected::STABLE,
    })
}

/// Default cap positions: first the facet `x_1 = 1`, then each later cap on the
/// first cell not created by the previous one.
pub fn default_caps(d: usize, l: usize) -> Vec<usize> {
    let mut caps = Vec::with_capacity(l);
    // Cells created by the previous cap occupy positions prev..prev+2d-1.
    let mut prev: Option<usize> = None;
    for j in 0..l {
        let k = match (j, prev) {
            (0, _) => d,
            (_, Some(p)) if p > 0 => 0,
            (_, Some(p)) => p + 2 * d - 1,
            _ => unreachable!(),
        };
        caps.push(k);
        prev = Some(k);
    }
    caps
}

pub fn capped(d: usize, l: usize) -> Result<NamedScenario> {
    l_fold_capped(d, &default_caps(d, l))
}

fn cubical_from(cells: &[GeoCell]) -> Result<Complex> {
    Complex::cubical(
        cells
            .iter()
            .map(|c| CubeChart::new(c.free.len(), c.corners.clone()))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// A d-simplex on vertices `1..=d+1` minus the facets omitting vertices `1..=l`.
pub fn simplex_relative(d: usize, l: usize) -> Result<RelativeComplex> {
    check_range("l", l, 0, d + 1)?;
    let vertices: Vec<VertexId> = (1..=d as u32 + 1).map(VertexId).collect();
    let complex = Complex::simplicial(vec![vertices.clone()])?;
    let gens: Vec<Face> = (1..=l as u32)
        .map(|k| vertices.iter().copied().filter(|v| v.0 != k).collect())
        .collect();
    RelativeComplex::generated(complex, &gens)
}

/// Boundary of a d-simplex stacked `k` times, each time over the first facet
/// of the order, with the new facets placed first.
pub fn stacked_simplicial(d: usize, k: usize) -> Result<NamedScenario> {
    check_range("d", d, 1, 6)?;
    if k > 0 && d < 2 {
        return Err(Error::Range("stacking needs d >= 2".into()));
    }
    let all: Vec<VertexId> = (0..=d as u32).map(VertexId).collect();
    let mut facets: Vec<Vec<VertexId>> = (0..=d)
        .map(|j| all.iter().copied().filter(|v| v.0 as usize != j).collect())
        .collect();
    for step in 0..k {
        let apex = VertexId((d + 1 + step) as u32);
        let base = facets[0].clone();
        let new: Vec<Vec<VertexId>> = base
            .iter()
            .map(|u| {
                let mut f: Vec<VertexId> = base.iter().copied().filter(|w| w != u).collect();
                f.push(apex);
                f
            })
            .collect();
        facets.splice(0..1, new);
    }
    let complex = Complex::simplicial(facets)?;
    Ok(NamedScenario {
        name: format!("stacked-{d}-{k}"),
        order: ShellingOrder::identity(complex.len()),
        complex,
        expected: Expected::STABLE,
    })
}

/// Builds a scenario by name and integer parameters.
pub fn by_name(name: &str, params: &[usize]) -> Result<NamedScenario> {
    let need = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::Parse(format!("{name} takes {n} parameter(s), got {}", params.len())));
        }
        Ok(())
    };
    match name {
        "cube" | "cube-boundary" => {
            need(1)?;
            cube_boundary(params[0])
        }
        "pile" => pile_of_cubes(params),
        "pile-nonstable" => {
            need(0)?;
            nonstable_pile_order()
        }
        "cuboid" => {
            need(2)?;
            cuboid_boundary(params[0], params[1])
        }
        "capped" => {
            need(2)?;
            capped(params[0], params[1])
        }
        "stacked" => {
            need(2)?;
            stacked_simplicial(params[0], params[1])
        }
        _ => Err(Error::Parse(format!("unknown construction {name}"))),
    }
}

/// Every scenario used by the verification suites.
pub fn gallery() -> Result<Vec<NamedScenario>> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push(cube_boundary(d)?);
    }
    for a in [&[2usize, 1][..], &[2, 2], &[1, 3, 2], &[2, 2, 2]] {
        out.push(pile_of_cubes(a)?);
    }
    out.push(nonstable_pile_order()?);
    for d in 1..=3 {
        for l in 0..=d {
            out.push(cuboid_boundary(d, l)?);
        }
    }
    for l in 0..=2 {
        out.push(cuboid_boundary(4, l)?);
    }
    for l in 1..=2 {
        out.push(capped(3, l)?);
    }
    for d in 2..=3 {
        for k in 0..=2 {
            out.push(stacked_simplicial(d, k)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::{is_shelling, is_stable_shelling};

    #[test]
    fn counts() {
        assert_eq!(cube_boundary(3).unwrap().complex.len(), 6);
        assert_eq!(cuboid_boundary(2, 1).unwrap().complex.len(), 6);
        assert_eq!(cuboid_boundary(4, 2).unwrap().complex.len(), 24);
        let c1 = capped(3, 1).unwrap().complex;
        assert_eq!((c1.len(), c1.vertices().len()), (10, 12));
        assert_eq!(capped(3, 2).unwrap().complex.len(), 14);
        assert_eq!(stacked_simplicial(3, 1).unwrap().complex.len(), 6);
    }

    #[test]
    fn nonstable_fails_at_six() {
        let s = nonstable_pile_order().unwrap();
        assert!(is_shelling(&s.complex, &s.order).unwrap().ok);
        assert_eq!(is_stable_shelling(&s.complex, &s.order).unwrap().failing_step, Some(6));
    }
}

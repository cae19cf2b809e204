//! Line shellings of rational polytopes, visibility and (strong) stability.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cellcomplex::{face_of, is_stable_relative, Cell, CubeChart, SimplexCell, VertexId};
use crate::error::{Error, Result};
use crate::shelling::{steps_of_cells, Verdict};

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

/// Parses a comma-separated list of rationals such as `1/4,1/3`.
pub fn parse_vector(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_rational).collect()
}

/// The half-space `<a, y> <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalHyperplane {
    pub a: Vec<Q>,
    pub b: Q,
}

impl RationalHyperplane {
    /// Sign of `<a, y> - b`.
    pub fn side(&self, y: &[Q]) -> Ordering {
        dot(&self.a, y).cmp(&self.b)
    }
}

/// Rank of a list of rational vectors.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn affine_rank(points: &[&Vec<Q>]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => rank(
            rest.iter()
                .map(|p| p.iter().zip(p0.iter()).map(|(a, b)| a - b).collect())
                .collect(),
        ),
    }
}

/// A full-dimensional polytope given by vertices, facet inequalities and incidences.
#[derive(Clone, Debug)]
pub struct PolytopeHV {
    vertices: Vec<Vec<Q>>,
    facets: Vec<RationalHyperplane>,
    incidence: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl PolytopeHV {
    pub fn new(
        vertices: Vec<Vec<Q>>,
        facets: Vec<RationalHyperplane>,
        incidence: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let d = vertices.first().map_or(0, |v| v.len());
        if d == 0 {
            return Err(Error::InvalidPolytope("no vertices".into()));
        }
        if facets.len() != incidence.len() {
            return Err(Error::InvalidPolytope("one incidence list per facet is required".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != d) {
            return Err(Error::InvalidPolytope(format!("vertex {v:?} is not in dimension {d}")));
        }
        let mut inc = Vec::with_capacity(facets.len());
        for (i, (h, listed)) in facets.iter().zip(&incidence).enumerate() {
            if h.a.len() != d || h.a.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidPolytope(format!("facet {i} has a bad normal")));
            }
            let listed: BTreeSet<usize> = listed.iter().copied().collect();
            let mut on = Vec::new();
            for (k, v) in vertices.iter().enumerate() {
                match h.side(v) {
                    Ordering::Greater => {
                        return Err(Error::InvalidPolytope(format!("vertex {k} violates facet {i}")))
                    }
                    Ordering::Equal => on.push(k),
                    Ordering::Less => {}
                }
            }
            if on != listed.iter().copied().collect::<Vec<_>>() {
                return Err(Error::InvalidPolytope(format!(
                    "facet {i} lists vertices {listed:?} but contains {on:?}"
                )));
            }
            let pts: Vec<&Vec<Q>> = on.iter().map(|&k| &vertices[k]).collect();
            if affine_rank(&pts) != d - 1 {
                return Err(Error::InvalidPolytope(format!("facet {i} does not span a hyperplane")));
            }
            inc.push(on);
        }
        let all: Vec<&Vec<Q>> = vertices.iter().collect();
        if affine_rank(&all) != d {
            return Err(Error::InvalidPolytope("vertices are not full-dimensional".into()));
        }
        let neighbors = (0..inc.len())
            .map(|i| {
                (0..inc.len())
                    .filter(|&j| {
                        if i == j {
                            return false;
                        }
                        let common: Vec<&Vec<Q>> = inc[i]
                            .iter()
                            .filter(|k| inc[j].contains(k))
                            .map(|&k| &vertices[k])
                            .collect();
                        !common.is_empty() && affine_rank(&common) + 2 == d
                    })
                    .collect()
            })
            .collect();
        Ok(PolytopeHV { vertices, facets, incidence: inc, neighbors })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[RationalHyperplane] {
        &self.facets
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// Facets meeting facet `i` in a ridge.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    fn ridge(&self, i: usize, j: usize) -> Vec<usize> {
        self.incidence[i].iter().copied().filter(|k| self.incidence[j].contains(k)).collect()
    }

    /// Facet `i` as a simplex or combinatorial cube on the vertex indices.
    pub fn facet_cell(&self, i: usize) -> Result<Cell> {
        let d = self.dim();
        let verts = &self.incidence[i];
        let ids = |v: &[usize]| v.iter().map(|&k| VertexId(k as u32)).collect::<Vec<_>>();
        if verts.len() == d {
            return Ok(Cell::Simplex(SimplexCell::new(ids(verts))?));
        }
        let k = d - 1;
        let unsupported = || Error::UnsupportedInput(format!("facet {i} is neither a simplex nor a cube"));
        if k >= 16 || verts.len() != 1 << k {
            return Err(unsupported());
        }
        let ridges: Vec<Vec<usize>> = self.neighbors[i].iter().map(|&j| self.ridge(i, j)).collect();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut used = vec![false; ridges.len()];
        for a in 0..ridges.len() {
            if used[a] {
                continue;
            }
            let partner = (a + 1..ridges.len()).find(|&b| {
                !used[b]
                    && ridges[a].iter().all(|x| !ridges[b].contains(x))
                    && ridges[a].len() + ridges[b].len() == verts.len()
            });
            let b = partner.ok_or_else(unsupported)?;
            used[a] = true;
            used[b] = true;
            pairs.push((a, b));
        }
        if pairs.len() != k {
            return Err(unsupported());
        }
        let mut corners: Vec<Option<VertexId>> = vec![None; verts.len()];
        for &v in verts {
            let idx = pairs
                .iter()
                .fold(0usize, |acc, &(_, b)| acc * 2 + usize::from(ridges[b].contains(&v)));
            if corners[idx].replace(VertexId(v as u32)).is_some() {
                return Err(unsupported());
            }
        }
        let corners: Vec<VertexId> = corners.into_iter().collect::<Option<_>>().ok_or_else(unsupported)?;
        Ok(Cell::Cube(CubeChart::new(k, corners)?))
    }

    /// Local facet index, in `facet_cell(i)`, of the ridge shared with facet `j`.
    fn local_ridge_index(&self, cell: &Cell, i: usize, j: usize) -> usize {
        let ridge = face_of(&self.ridge(i, j).iter().map(|&k| VertexId(k as u32)).collect::<Vec<_>>());
        cell.facets().iter().position(|f| *f == ridge).expect("ridge is a facet of the cell")
    }

    pub fn to_json(&self) -> PolytopeJson {
        let s = |x: &Q| RatJson::Text(x.to_string());
        PolytopeJson {
            vertices: self.vertices.iter().map(|v| v.iter().map(s).collect()).collect(),
            facets: self
                .facets
                .iter()
                .zip(&self.incidence)
                .map(|(h, inc)| FacetJson { a: h.a.iter().map(s).collect(), b: s(&h.b), vertices: inc.clone() })
                .collect(),
        }
    }
}

/// A rational number in JSON: an integer or a `"p/q"` string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatJson {
    Int(i64),
    Text(String),
}

impl RatJson {
    pub fn value(&self) -> Result<Q> {
        match self {
            RatJson::Int(n) => Ok(q(*n)),
            RatJson::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FacetJson {
    pub a: Vec<RatJson>,
    pub b: RatJson,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<RatJson>>,
    pub facets: Vec<FacetJson>,
}

impl PolytopeJson {
    pub fn to_polytope(&self) -> Result<PolytopeHV> {
        let vec = |v: &[RatJson]| v.iter().map(RatJson::value).collect::<Result<Vec<_>>>();
        let vertices = self.vertices.iter().map(|v| vec(v)).collect::<Result<Vec<_>>>()?;
        let facets = self
            .facets
            .iter()
            .map(|f| Ok(RationalHyperplane { a: vec(&f.a)?, b: f.b.value()? }))
            .collect::<Result<Vec<_>>>()?;
        let incidence = self.facets.iter().map(|f| f.vertices.clone()).collect();
        PolytopeHV::new(vertices, facets, incidence)
    }
}

/// The cube `[0,1]^d` with facets ordered `x_1 = 0, ..., x_d = 0, x_1 = 1, ..., x_d = 1`.
pub fn cube_polytope(d: usize) -> Result<PolytopeHV> {
    if d == 0 || d > 6 {
        return Err(Error::Range(format!("d = {d} outside 1..=6")));
    }
    let vertices: Vec<Vec<Q>> = (0..1usize << d)
        .map(|idx| (0..d).map(|a| q((idx >> (d - 1 - a) & 1) as i64)).collect())
        .collect();
    let mut facets = Vec::new();
    let mut incidence = Vec::new();
    for side in 0..2 {
        for i in 0..d {
            let mut a = vec![q(0); d];
            a[i] = q(2 * side - 1);
            facets.push(RationalHyperplane { a, b: q(side) });
            incidence.push(
                (0..vertices.len())
                    .filter(|&k| vertices[k][i] == q(side))
                    .collect(),
            );
        }
    }
    PolytopeHV::new(vertices, facets, incidence)
}

/// The simplex `conv(0, e_1, ..., e_d)`.
pub fn simplex_polytope(d: usize) -> Result<PolytopeHV> {
    if d == 0 || d > 6 {
        return Err(Error::Range(format!("d = {d} outside 1..=6")));
    }
    let mut vertices = vec![vec![q(0); d]];
    for i in 0..d {
        let mut e = vec![q(0); d];
        e[i] = q(1);
        vertices.push(e);
    }
    let mut facets = Vec::new();
    let mut incidence = Vec::new();
    for i in 0..d {
        let mut a = vec![q(0); d];
        a[i] = q(-1);
        facets.push(RationalHyperplane { a, b: q(0) });
        incidence.push((0..=d).filter(|&k| k != i + 1).collect());
    }
    facets.push(RationalHyperplane { a: vec![q(1); d], b: q(1) });
    incidence.push((1..=d).collect());
    PolytopeHV::new(vertices, facets, incidence)
}

/// The trapezoid with vertices (0,0), (4,0), (3,1), (1,1); facets bottom, top, left, right.
pub fn quadrilateral() -> PolytopeHV {
    let p = |x: i64, y: i64| vec![q(x), q(y)];
    let h = |a: i64, b: i64, c: i64| RationalHyperplane { a: vec![q(a), q(b)], b: q(c) };
    PolytopeHV::new(
        vec![p(0, 0), p(4, 0), p(3, 1), p(1, 1)],
        vec![h(0, -1, 0), h(0, 1, 1), h(-1, 1, 0), h(1, 1, 4)],
        vec![vec![0, 1], vec![2, 3], vec![0, 3], vec![1, 2]],
    )
    .expect("valid quadrilateral")
}

/// An oriented line `p + t v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineQuery {
    pub p: Vec<Q>,
    pub v: Vec<Q>,
}

impl LineQuery {
    pub fn new(p: Vec<Q>, v: Vec<Q>) -> Result<Self> {
        if p.len() != v.len() {
            return Err(Error::Genericity("point and direction differ in dimension".into()));
        }
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::Genericity("direction is zero".into()));
        }
        Ok(LineQuery { p, v })
    }

    pub fn at(&self, t: &Q) -> Vec<Q> {
        self.p.iter().zip(&self.v).map(|(p, v)| p + t * v).collect()
    }

    pub fn reversed(&self) -> LineQuery {
        LineQuery { p: self.p.clone(), v: self.v.iter().map(|x| -x).collect() }
    }
}

/// Parameter at which the line meets each facet hyperplane, in facet order.
pub fn line_intersections(p: &PolytopeHV, l: &LineQuery) -> Result<Vec<(usize, Q)>> {
    if l.p.len() != p.dim() {
        return Err(Error::Genericity("line and polytope differ in dimension".into()));
    }
    let mut out = Vec::with_capacity(p.facets.len());
    let (mut lower, mut upper): (Option<Q>, Option<Q>) = (None, None);
    for (i, h) in p.facets.iter().enumerate() {
        let av = dot(&h.a, &l.v);
        if av.is_zero() {
            return Err(Error::Genericity(format!("line is parallel to facet {i}")));
        }
        let t = (&h.b - dot(&h.a, &l.p)) / &av;
        if av.is_positive() {
            upper = Some(upper.map_or(t.clone(), |u| u.min(t.clone())));
        } else {
            lower = Some(lower.map_or(t.clone(), |u| u.max(t.clone())));
        }
        out.push((i, t));
    }
    let mut ts: Vec<&Q> = out.iter().map(|(_, t)| t).collect();
    ts.sort();
    if ts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Genericity("two facet hyperplanes are met at the same point".into()));
    }
    match (lower, upper) {
        (Some(lo), Some(hi)) if lo < hi => Ok(out),
        _ => Err(Error::Genericity("line misses the interior of the polytope".into())),
    }
}

/// The facet order induced by a line with visibility data.
#[derive(Clone, Debug, Serialize)]
pub struct LineShellingResult {
    /// Facet indices in shelling order.
    pub order: Vec<usize>,
    /// Number of facets met before passing through infinity.
    pub before_infinity: usize,
    /// Line parameter of each `q_i`, in order.
    #[serde(serialize_with = "ser_rationals")]
    pub params: Vec<Q>,
    /// Per step, the neighbouring facets whose common ridge is visible from `q_i`.
    pub visible: Vec<Vec<usize>>,
    /// Per step, the neighbouring facets whose common ridge is removed.
    pub removed: Vec<Vec<usize>>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn line_shelling_order(p: &PolytopeHV, l: &LineQuery) -> Result<LineShellingResult> {
    let hits = line_intersections(p, l)?;
    let mut pos: Vec<(usize, Q)> = Vec::new();
    let mut neg: Vec<(usize, Q)> = Vec::new();
    for (i, t) in hits {
        if dot(&p.facets[i].a, &l.v).is_positive() {
            pos.push((i, t));
        } else {
            neg.push((i, t));
        }
    }
    pos.sort_by(|a, b| a.1.cmp(&b.1));
    neg.sort_by(|a, b| a.1.cmp(&b.1));
    let before_infinity = pos.len();
    let seq: Vec<(usize, Q)> = pos.into_iter().chain(neg).collect();
    let mut visible = Vec::with_capacity(seq.len());
    let mut removed = Vec::with_capacity(seq.len());
    for (step, (i, t)) in seq.iter().enumerate() {
        let qi = l.at(t);
        let (vis, covis): (Vec<usize>, Vec<usize>) = p.neighbors[*i]
            .iter()
            .partition(|&&j| p.facets[j].side(&qi) == Ordering::Greater);
        removed.push(if step < before_infinity { vis.clone() } else { covis });
        visible.push(vis);
    }
    Ok(LineShellingResult {
        order: seq.iter().map(|(i, _)| *i).collect(),
        before_infinity,
        params: seq.into_iter().map(|(_, t)| t).collect(),
        visible,
        removed,
    })
}

/// Stability of a line shelling with the data it was decided on.
#[derive(Clone, Debug, Serialize)]
pub struct LineStability {
    pub shelling: Verdict,
    pub stable: Verdict,
    /// Whether the visibility-based removed sets equal the intersections with earlier facets.
    pub removed_matches_intersection: bool,
    pub result: LineShellingResult,
}

pub fn is_stable_line_shelling(p: &PolytopeHV, l: &LineQuery) -> Result<LineStability> {
    let result = line_shelling_order(p, l)?;
    let cells = (0..p.facets.len()).map(|i| p.facet_cell(i)).collect::<Result<Vec<_>>>()?;
    let steps = steps_of_cells(&cells, &result.order);
    let mut matches = true;
    let mut stable_flags = Vec::with_capacity(steps.len());
    for (step, removed) in steps.iter().zip(&result.removed) {
        let cell = &cells[step.cell];
        let mask = removed
            .iter()
            .fold(0u64, |m, &j| m | 1 << p.local_ridge_index(cell, step.cell, j));
        matches &= mask == step.removed_mask && step.generated_by_facets;
        stable_flags.push(is_stable_relative(cell, mask));
    }
    Ok(LineStability {
        shelling: Verdict::from_steps(steps.iter().map(|s| s.is_shelling_step(&cells[s.cell]))),
        stable: Verdict::from_steps(stable_flags.into_iter()),
        removed_matches_intersection: matches,
        result,
    })
}

/// Exact feasibility of `{y : A_eq y = b_eq, A y <= b}` by Fourier-Motzkin elimination.
pub fn fm_feasible(
    equalities: &[(Vec<Q>, Q)],
    inequalities: &[(Vec<Q>, Q)],
    budget: usize,
) -> Result<bool> {
    let mut eqs: Vec<(Vec<Q>, Q)> = equalities.to_vec();
    let mut rows: Vec<(Vec<Q>, Q)> = inequalities.to_vec();
    let n = eqs.iter().chain(&rows).map(|r| r.0.len()).max().unwrap_or(0);
    while let Some((a, b)) = eqs.pop() {
        let Some(j) = a.iter().position(|x| !x.is_zero()) else {
            if !b.is_zero() {
                return Ok(false);
            }
            continue;
        };
        for (ra, rb) in eqs.iter_mut().chain(rows.iter_mut()) {
            if !ra[j].is_zero() {
                let f = &ra[j] / &a[j];
                for (x, y) in ra.iter_mut().zip(&a) {
                    *x -= &f * y;
                }
                *rb -= &f * &b;
            }
        }
    }
    for k in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in rows {
            match a[k].cmp(&Q::zero()) {
                Ordering::Greater => pos.push((a, b)),
                Ordering::Less => neg.push((a, b)),
                Ordering::Equal => rest.push((a, b)),
            }
        }
        if rest.len() + pos.len() * neg.len() > budget {
            return Err(Error::BudgetExceeded(format!(
                "Fourier-Motzkin elimination needs more than {budget} rows"
            )));
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (sp, sn) = (Q::one() / &pa[k], -(Q::one() / &na[k]));
                let a: Vec<Q> = pa.iter().zip(na).map(|(x, y)| x * &sp + y * &sn).collect();
                rest.push((a, pb * &sp + nb * &sn));
            }
        }
        rest.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        rest.dedup_by(|x, y| x.0 == y.0);
        rows = rest;
    }
    Ok(rows.iter().all(|(_, b)| !b.is_negative()))
}

pub const FM_BUDGET: usize = 100_000;

/// Whether some point of facet `i` lies on every listed hyperplane.
fn facet_meets(p: &PolytopeHV, i: usize, on: &[usize], budget: usize) -> Result<bool> {
    if p.dim() > 4 {
        return Err(Error::BudgetExceeded("region tests support dimension at most 4".into()));
    }
    let eqs: Vec<(Vec<Q>, Q)> = std::iter::once(i)
        .chain(on.iter().copied())
        .map(|j| (p.facets[j].a.clone(), p.facets[j].b.clone()))
        .collect();
    let ineqs: Vec<(Vec<Q>, Q)> = p.facets.iter().map(|h| (h.a.clone(), h.b.clone())).collect();
    fm_feasible(&eqs, &ineqs, budget)
}

/// Per step, whether the closure of the region of the facet arrangement containing
/// `q_i` meets `sigma_i`.
pub fn strong_stability_steps(p: &PolytopeHV, l: &LineQuery, budget: usize) -> Result<Vec<bool>> {
    let r = line_shelling_order(p, l)?;
    r.order
        .iter()
        .zip(&r.params)
        .map(|(&i, t)| {
            let qi = l.at(t);
            let beyond: Vec<usize> = (0..p.facets.len())
                .filter(|&j| j != i && p.facets[j].side(&qi) == Ordering::Greater)
                .collect();
            facet_meets(p, i, &beyond, budget)
        })
        .collect()
}

pub fn is_strongly_stable(p: &PolytopeHV, l: &LineQuery, budget: usize) -> Result<bool> {
    Ok(strong_stability_steps(p, l, budget)?.into_iter().all(|b| b))
}

/// Per step, the weaker condition using only the hyperplanes of facets adjacent to `sigma_i`.
pub fn facet_region_steps(p: &PolytopeHV, l: &LineQuery, budget: usize) -> Result<Vec<bool>> {
    let r = line_shelling_order(p, l)?;
    r.order
        .iter()
        .zip(&r.visible)
        .map(|(&i, vis)| facet_meets(p, i, vis, budget))
        .collect()
}

pub fn satisfies_facet_region_condition(p: &PolytopeHV, l: &LineQuery, budget: usize) -> Result<bool> {
    Ok(facet_region_steps(p, l, budget)?.into_iter().all(|b| b))
}

/// A nearby direction that makes the line generic, if one is found.
pub fn suggest_direction(p: &PolytopeHV, l: &LineQuery) -> Option<Vec<Q>> {
    let d = l.v.len();
    for k in 1..=200i64 {
        let v: Vec<Q> = (0..d)
            .map(|a| &l.v[a] + Q::new(BigInt::from(1), BigInt::from(97 * k + 13 * a as i64 + 1)))
            .collect();
        if let Ok(cand) = LineQuery::new(l.p.clone(), v.clone()) {
            if line_intersections(p, &cand).is_ok() {
                return Some(v);
            }
        }
    }
    None
}

/// Counts over sampled lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LineSearchStats {
    pub seed: u64,
    pub trials: usize,
    pub genericity_failures: usize,
    pub shelling: usize,
    pub stable: usize,
    pub strongly_stable: usize,
    pub facet_region: usize,
    /// Instances breaking strong => facet-region => stable.
    pub chain_violations: usize,
    /// Instances that are stable although the facet-region condition fails.
    pub stable_without_region: usize,
}

/// A random line through the interior: a positive integer combination of the
/// vertices as base point and an integer direction.
pub fn random_line(p: &PolytopeHV, rng: &mut ChaCha8Rng) -> LineQuery {
    let d = p.dim();
    let weights: Vec<i64> = (0..p.vertices.len()).map(|_| rng.gen_range(1..=6)).collect();
    let total = q(weights.iter().sum());
    let point: Vec<Q> = (0..d)
        .map(|a| p.vertices.iter().zip(&weights).map(|(v, &w)| &v[a] * q(w)).sum::<Q>() / &total)
        .collect();
    loop {
        let v: Vec<Q> = (0..d).map(|_| q(rng.gen_range(-12..=12))).collect();
        if let Ok(l) = LineQuery::new(point.clone(), v) {
            return l;
        }
    }
}

pub fn random_line_search(p: &PolytopeHV, trials: usize, seed: u64, budget: usize) -> Result<LineSearchStats> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = LineSearchStats { seed, trials, ..Default::default() };
    for _ in 0..trials {
        let l = random_line(p, &mut rng);
        let stab = match is_stable_line_shelling(p, &l) {
            Ok(s) => s,
            Err(Error::Genericity(_)) => {
                st.genericity_failures += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let strong = is_strongly_stable(p, &l, budget)?;
        let region = satisfies_facet_region_condition(p, &l, budget)?;
        st.shelling += usize::from(stab.shelling.ok);
        st.stable += usize::from(stab.stable.ok);
        st.strongly_stable += usize::from(strong);
        st.facet_region += usize::from(region);
        st.chain_violations += usize::from((strong && !region) || (region && !stab.stable.ok));
        st.stable_without_region += usize::from(stab.stable.ok && !region);
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrilateral_separates_strong_from_facet_condition() {
        let p = quadrilateral();
        let l = LineQuery::new(vec![q(2), Q::new(1.into(), 2.into())], vec![q(2), q(5)]).unwrap();
        let r = line_shelling_order(&p, &l).unwrap();
        assert_eq!(r.order, vec![1, 3, 2, 0]);
        assert_eq!(strong_stability_steps(&p, &l, FM_BUDGET).unwrap(), vec![true, true, false, true]);
        assert!(satisfies_facet_region_condition(&p, &l, FM_BUDGET).unwrap());
        assert!(is_stable_line_shelling(&p, &l).unwrap().stable.ok);
    }

    #[test]
    fn fm_detects_infeasible_box() {
        let e = |v: &[i64]| v.iter().map(|&x| q(x)).collect::<Vec<_>>();
        let rows = vec![(e(&[1, 0]), q(1)), (e(&[-1, 0]), q(-2))];
        assert!(!fm_feasible(&[], &rows, 100).unwrap());
        assert!(fm_feasible(&[(e(&[1, 1]), q(0))], &[(e(&[1, 0]), q(1))], 100).unwrap());
    }
}

//! Barycentric and edgewise subdivisions and their h-polynomial transforms.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cellcomplex::{face_of, Cell, Complex, Face, Kind, RelativeComplex, VertexId};
use crate::error::{Error, Result};
use crate::eulerian::colored_eulerian;
use crate::polyreal::{convolution_power, veronese_section, IntPolynomial};

/// The subdivisions understood by the shelling machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "r")]
pub enum Subdivision {
    Trivial,
    Barycentric,
    Edgewise(usize),
}

/// A simplicial subdivision with, per new vertex, the original face whose
/// relative interior contains it.
#[derive(Clone, Debug)]
pub struct Subdivided {
    pub complex: Complex,
    pub support: HashMap<VertexId, Face>,
    /// Human-readable origin of each new vertex (a chain element or lattice point).
    pub labels: BTreeMap<VertexId, String>,
}

impl Subdivided {
    /// Smallest original face containing a face of the subdivision.
    pub fn carrier(&self, original: &Complex, face: &[VertexId]) -> Face {
        let mut union: Vec<VertexId> = face
            .iter()
            .flat_map(|v| self.support[v].iter().copied())
            .collect();
        union = face_of(&union);
        original
            .smallest_face_containing(&union)
            .expect("supports lie in a common cell")
    }

    /// Restriction to a relative complex: faces carried by removed faces are removed.
    pub fn relative(&self, rc: &RelativeComplex) -> Result<RelativeComplex> {
        let removed: HashSet<Face> = self
            .complex
            .faces()
            .keys()
            .filter(|f| rc.removed().contains(&self.carrier(rc.ambient(), f)))
            .cloned()
            .collect();
        RelativeComplex::new(self.complex.clone(), removed)
    }
}

pub fn subdivide(c: &Complex, s: Subdivision) -> Result<Subdivided> {
    match s {
        Subdivision::Trivial => {
            let support = c.vertices().into_iter().map(|v| (v, vec![v])).collect();
            let labels = c.vertices().into_iter().map(|v| (v, format!("{}", v.0))).collect();
            Ok(Subdivided { complex: c.clone(), support, labels })
        }
        Subdivision::Barycentric => barycentric_complex(c),
        Subdivision::Edgewise(r) => match c.kind() {
            Kind::Simplicial => edgewise_simplicial_complex(c, r),
            Kind::Cubical => edgewise_cubical_complex(c, r),
        },
    }
}

/// Faces of a cell with their dimensions and covering relations.
fn cell_lattice(cell: &Cell) -> (Vec<Face>, Vec<Vec<usize>>) {
    let faces: Vec<Face> = cell.faces().into_iter().filter(|f| !f.is_empty()).collect();
    let dims: Vec<usize> = faces
        .iter()
        .map(|f| match cell {
            Cell::Simplex(_) => f.len() - 1,
            Cell::Cube(c) => c
                .bounding_pattern(f)
                .expect("face")
                .iter()
                .filter(|x| x.is_none())
                .count(),
        })
        .collect();
    let below = (0..faces.len())
        .map(|i| {
            (0..faces.len())
                .filter(|&j| {
                    dims[j] + 1 == dims[i]
                        && faces[j].iter().all(|v| faces[i].binary_search(v).is_ok())
                })
                .collect()
        })
        .collect();
    (faces, below)
}

fn barycentric_complex(c: &Complex) -> Result<Subdivided> {
    let mut all: Vec<(isize, Face)> = c
        .faces()
        .iter()
        .filter(|(f, _)| !f.is_empty())
        .map(|(f, &d)| (d, f.clone()))
        .collect();
    all.sort();
    let id_of: HashMap<Face, VertexId> = all
        .iter()
        .enumerate()
        .map(|(i, (_, f))| (f.clone(), VertexId(i as u32)))
        .collect();
    let mut simplices = Vec::new();
    for cell in c.cells() {
        let (faces, below) = cell_lattice(cell);
        let top = faces
            .iter()
            .position(|f| *f == cell.vertices())
            .expect("cell is a face of itself");
        let mut stack = vec![vec![top]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty");
            if below[last].is_empty() {
                simplices.push(chain.iter().map(|&i| id_of[&faces[i]]).collect::<Vec<_>>());
                continue;
            }
            for &j in &below[last] {
                let mut next = chain.clone();
                next.push(j);
                stack.push(next);
            }
        }
    }
    let complex = Complex::simplicial(simplices)?;
    let support = id_of.iter().map(|(f, &v)| (v, f.clone())).collect();
    let labels = id_of
        .iter()
        .map(|(f, &v)| (v, format!("{:?}", f.iter().map(|x| x.0).collect::<Vec<_>>())))
        .collect();
    Ok(Subdivided { complex, support, labels })
}

/// Barycentric subdivision of a relative complex.
pub fn barycentric(rc: &RelativeComplex) -> Result<RelativeComplex> {
    barycentric_complex(rc.ambient())?.relative(rc)
}

/// Partial sums `(x_1, x_1 + x_2, ...)`.
fn iota(x: &[i64]) -> Vec<i64> {
    x.iter()
        .scan(0i64, |s, &v| {
            *s += v;
            Some(*s)
        })
        .collect()
}

/// The edgewise face test for two lattice points.
pub fn edgewise_compatible(x: &[i64], y: &[i64]) -> bool {
    let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let s = iota(&diff);
    s.iter().all(|&v| v == 0 || v == 1) || s.iter().all(|&v| v == 0 || v == -1)
}

/// Maximal cliques of a small graph given by adjacency sets.
fn maximal_cliques(adj: &[HashSet<usize>]) -> Vec<Vec<usize>> {
    fn bk(
        adj: &[HashSet<usize>],
        r: &mut Vec<usize>,
        p: HashSet<usize>,
        mut x: HashSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = *p.union(&x).max_by_key(|u| adj[**u].intersection(&p).count()).expect("nonempty");
        let mut p = p;
        let cands: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
        for v in cands {
            r.push(v);
            bk(
                adj,
                r,
                p.intersection(&adj[v]).copied().collect(),
                x.intersection(&adj[v]).copied().collect(),
                out,
            );
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(adj, &mut Vec::new(), (0..adj.len()).collect(), HashSet::new(), &mut out);
    out.sort();
    out
}

/// Lattice points of one cell with their gluing keys and supports.
struct LocalPoint {
    coords: Vec<i64>,
    key: Vec<u32>,
    support: Face,
    label: String,
}

fn glue(per_cell: Vec<Vec<LocalPoint>>, dim: usize) -> Result<Subdivided> {
    let mut ids: HashMap<Vec<u32>, VertexId> = HashMap::new();
    let mut support = HashMap::new();
    let mut labels = BTreeMap::new();
    let mut simplices = Vec::new();
    for (ci, points) in per_cell.iter().enumerate() {
        let local_ids: Vec<VertexId> = points
            .iter()
            .map(|p| {
                let next = VertexId(ids.len() as u32);
                let id = *ids.entry(p.key.clone()).or_insert(next);
                support.entry(id).or_insert_with(|| p.support.clone());
                labels.entry(id).or_insert_with(|| p.label.clone());
                id
            })
            .collect();
        let adj: Vec<HashSet<usize>> = (0..points.len())
            .map(|i| {
                (0..points.len())
                    .filter(|&j| j != i && edgewise_compatible(&points[i].coords, &points[j].coords))
                    .collect()
            })
            .collect();
        for clique in maximal_cliques(&adj) {
            if clique.len() != dim + 1 {
                return Err(Error::InvalidComplex(format!(
                    "edgewise subdivision of cell {ci} produced a non-maximal simplex of size {}",
                    clique.len()
                )));
            }
            simplices.push(clique.iter().map(|&i| local_ids[i]).collect());
        }
    }
    Ok(Subdivided { complex: Complex::simplicial(simplices)?, support, labels })
}

fn edgewise_simplicial_complex(c: &Complex, r: usize) -> Result<Subdivided> {
    if r == 0 {
        return Err(Error::Range("edgewise factor must be positive".into()));
    }
    let d = c.dim();
    let mut per_cell = Vec::new();
    for cell in c.cells() {
        let verts = cell.vertices();
        let mut points = Vec::new();
        for x in compositions(r, d + 1) {
            let key: Vec<u32> = verts
                .iter()
                .zip(&x)
                .filter(|(_, &m)| m > 0)
                .flat_map(|(v, &m)| [v.0, m as u32])
                .collect();
            let support: Face = verts.iter().zip(&x).filter(|(_, &m)| m > 0).map(|(v, _)| *v).collect();
            let label = format!(
                "{:?}",
                verts.iter().zip(&x).filter(|(_, &m)| m > 0).map(|(v, &m)| (v.0, m)).collect::<Vec<_>>()
            );
            points.push(LocalPoint { coords: x, key, support, label });
        }
        per_cell.push(points);
    }
    glue(per_cell, d)
}

/// Nonnegative integer vectors of length `n` summing to `r`, lexicographic.
fn compositions(r: usize, n: usize) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![r as i64]];
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, n - 1) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

fn edgewise_cubical_complex(c: &Complex, r: usize) -> Result<Subdivided> {
    if r == 0 {
        return Err(Error::Range("edgewise factor must be positive".into()));
    }
    c.check_chart_coherence()?;
    let d = c.dim();
    let mut per_cell = Vec::new();
    for cell in c.cells() {
        let Cell::Cube(chart) = cell else {
            return Err(Error::UnsupportedInput("expected cubes".into()));
        };
        let mut points = Vec::new();
        let n = (r + 1).pow(d as u32);
        for code in 0..n {
            let z: Vec<i64> = (0..d)
                .map(|axis| (code / (r + 1).pow((d - 1 - axis) as u32) % (r + 1)) as i64)
                .collect();
            let pattern: Vec<Option<bool>> = z
                .iter()
                .map(|&v| {
                    if v == 0 {
                        Some(false)
                    } else if v == r as i64 {
                        Some(true)
                    } else {
                        None
                    }
                })
                .collect();
            let corners = chart.induced_corners(&pattern);
            let free: Vec<i64> = z
                .iter()
                .zip(&pattern)
                .filter(|(_, p)| p.is_none())
                .map(|(&v, _)| v)
                .collect();
            let mut key: Vec<u32> = corners.iter().map(|v| v.0).collect();
            key.push(u32::MAX);
            key.extend(free.iter().map(|&v| v as u32));
            let label = format!("{:?}@{:?}", corners.iter().map(|v| v.0).collect::<Vec<_>>(), free);
            points.push(LocalPoint { coords: z, key, support: face_of(&corners), label });
        }
        per_cell.push(points);
    }
    glue(per_cell, d)
}

fn require_kind(rc: &RelativeComplex, kind: Kind) -> Result<()> {
    if rc.ambient().kind() != kind {
        return Err(Error::UnsupportedInput(format!("expected a {kind:?} complex")));
    }
    Ok(())
}

/// r-th edgewise subdivision of a simplicial relative complex.
pub fn edgewise_simplicial(rc: &RelativeComplex, r: usize) -> Result<RelativeComplex> {
    require_kind(rc, Kind::Simplicial)?;
    edgewise_simplicial_complex(rc.ambient(), r)?.relative(rc)
}

/// r-th edgewise subdivision of a cubical relative complex.
pub fn edgewise_cubical(rc: &RelativeComplex, r: usize) -> Result<RelativeComplex> {
    require_kind(rc, Kind::Cubical)?;
    edgewise_cubical_complex(rc.ambient(), r)?.relative(rc)
}

/// `sum_l h_l A_{d,l}^{(1)}`.
pub fn h_sd_from_h(h: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(Error::InvalidDegree(format!("degree of {h} exceeds {d}")));
    }
    let mut out = IntPolynomial::zero();
    for (l, c) in h.coeffs().iter().enumerate() {
        out = out + colored_eulerian(d, l, 1)?.scale(c);
    }
    Ok(out)
}

/// `((1 + ... + x^{r-1})^{d+1} h)^{<r,0>}`.
pub fn h_edgewise_from_h(h: &IntPolynomial, d: usize, r: usize) -> Result<IntPolynomial> {
    if h.degree().is_some_and(|deg| deg > d + 1) {
        return Err(Error::InvalidDegree(format!("degree of {h} exceeds {}", d + 1)));
    }
    veronese_section(&(convolution_power(r, d + 1) * h), r, 0)
}

/// The triangulation of `[-1,1]^d` cut out by `x_i = ±x_j` and `x_i = 0`.
#[derive(Clone, Debug)]
pub struct CubeRealization {
    pub points: Vec<Vec<i64>>,
    /// Maximal simplices as indices into `points`.
    pub simplices: Vec<Vec<usize>>,
    pub complex: Complex,
}

/// One simplex per signed permutation, spanned by the origin and the partial
/// sums `eps_1 e_{pi_1}, eps_1 e_{pi_1} + eps_2 e_{pi_2}, ...`.
pub fn barycentric_cube_realization(d: usize) -> Result<CubeRealization> {
    if d == 0 || d > 4 {
        return Err(Error::BudgetExceeded(format!("realization supported for 1 <= d <= 4, got {d}")));
    }
    use itertools::Itertools;
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut simplices = Vec::new();
    for pi in (0..d).permutations(d) {
        for mask in 0..1u32 << d {
            let mut p = vec![0i64; d];
            let mut verts = vec![p.clone()];
            for &axis in &pi {
                p[axis] = if mask >> axis & 1 == 1 { -1 } else { 1 };
                verts.push(p.clone());
            }
            let ids = verts
                .into_iter()
                .map(|v| {
                    let n = index.len();
                    *index.entry(v).or_insert(n)
                })
                .collect();
            simplices.push(ids);
        }
    }
    let mut points = vec![Vec::new(); index.len()];
    for (p, &i) in &index {
        points[i] = p.clone();
    }
    let complex = Complex::simplicial(
        simplices
            .iter()
            .map(|s: &Vec<usize>| s.iter().map(|&i| VertexId(i as u32)).collect())
            .collect(),
    )?;
    Ok(CubeRealization { points, simplices, complex })
}

/// Absolute determinant of the edge vectors of a lattice simplex.
pub fn simplex_volume_factor(points: &[Vec<i64>]) -> BigInt {
    let n = points.len() - 1;
    let mut m: Vec<Vec<num_rational::BigRational>> = (1..=n)
        .map(|i| {
            points[i]
                .iter()
                .zip(&points[0])
                .map(|(a, b)| num_rational::BigRational::from_integer(BigInt::from(a - b)))
                .collect()
        })
        .collect();
    let mut det = num_rational::BigRational::from_integer(BigInt::from(1));
    use num_traits::{Signed, Zero};
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col].clone();
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in rest.iter_mut() {
            let f = row[col].clone() / pivot[col].clone();
            for (x, p) in row.iter_mut().zip(pivot).skip(col) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
    }
    det.abs().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_diagonal() {
        assert!(edgewise_compatible(&[1, 0], &[0, 1]));
        assert!(!edgewise_compatible(&[1, 1], &[0, 0]));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 3).len(), 6);
    }
}

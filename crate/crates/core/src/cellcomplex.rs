//! Cubical and simplicial complexes, relative complexes and stability of cells.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyreal::{h_from_f, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

/// A face as its sorted vertex set; the empty vector is the empty face.
pub type Face = Vec<VertexId>;

/// Sorted, deduplicated copy of a vertex list.
pub fn face_of(vertices: &[VertexId]) -> Face {
    let mut f = vertices.to_vec();
    f.sort_unstable();
    f.dedup();
    f
}

fn is_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Face pattern of a cube: `Some(b)` fixes a coordinate to `b`, `None` leaves it free.
pub type Pattern = Vec<Option<bool>>;

/// A cube cell given by its corners in binary-counter order, coordinate 1 most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeChart {
    dim: usize,
    corners: Vec<VertexId>,
}

impl CubeChart {
    pub fn new(dim: usize, corners: Vec<VertexId>) -> Result<Self> {
        if dim >= usize::BITS as usize - 1 || corners.len() != 1 << dim {
            return Err(Error::InvalidComplex(format!(
                "a {dim}-cube needs {} corners, got {}",
                1usize.checked_shl(dim as u32).unwrap_or(0),
                corners.len()
            )));
        }
        if face_of(&corners).len() != corners.len() {
            return Err(Error::InvalidComplex(format!(
                "cube corners are not distinct: {corners:?}"
            )));
        }
        Ok(CubeChart { dim, corners })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn corners(&self) -> &[VertexId] {
        &self.corners
    }

    /// Bit of corner `idx` along `axis` (axis 0 is the most significant).
    pub fn bit(&self, idx: usize, axis: usize) -> bool {
        idx >> (self.dim - 1 - axis) & 1 == 1
    }

    pub fn corner_index(&self, v: VertexId) -> Option<usize> {
        self.corners.iter().position(|&c| c == v)
    }

    pub fn matches(&self, idx: usize, pattern: &[Option<bool>]) -> bool {
        pattern
            .iter()
            .enumerate()
            .all(|(axis, p)| p.is_none_or(|b| self.bit(idx, axis) == b))
    }

    /// All `3^d` patterns.
    pub fn patterns(&self) -> Vec<Pattern> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.dim {
            out = out
                .into_iter()
                .flat_map(|p: Pattern| {
                    [None, Some(false), Some(true)].into_iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    pub fn pattern_vertices(&self, pattern: &[Option<bool>]) -> Face {
        face_of(
            &(0..self.corners.len())
                .filter(|&i| self.matches(i, pattern))
                .map(|i| self.corners[i])
                .collect::<Vec<_>>(),
        )
    }

    /// Smallest face pattern containing the given corners.
    pub fn bounding_pattern(&self, vertices: &[VertexId]) -> Option<Pattern> {
        let idx = vertices
            .iter()
            .map(|&v| self.corner_index(v))
            .collect::<Option<Vec<_>>>()?;
        let first = *idx.first()?;
        Some(
            (0..self.dim)
                .map(|axis| {
                    let b = self.bit(first, axis);
                    idx.iter().all(|&i| self.bit(i, axis) == b).then_some(b)
                })
                .collect(),
        )
    }

    /// Corners of a face in the chart induced on it: free axes keep their
    /// order and the origin is where the free coordinates vanish.
    pub fn induced_corners(&self, pattern: &[Option<bool>]) -> Vec<VertexId> {
        (0..self.corners.len())
            .filter(|&i| self.matches(i, pattern))
            .map(|i| self.corners[i])
            .collect()
    }

    /// Facet pattern with index `2 * axis + side`.
    pub fn facet_pattern(&self, index: usize) -> Pattern {
        let mut p = vec![None; self.dim];
        p[index / 2] = Some(index % 2 == 1);
        p
    }
}

/// A simplex cell given by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexCell {
    vertices: Face,
}

impl SimplexCell {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        let f = face_of(&vertices);
        if f.is_empty() || f.len() != vertices.len() {
            return Err(Error::InvalidComplex(format!(
                "simplex vertices must be nonempty and distinct: {vertices:?}"
            )));
        }
        Ok(SimplexCell { vertices: f })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Cube(CubeChart),
    Simplex(SimplexCell),
}

impl Cell {
    pub fn dim(&self) -> usize {
        match self {
            Cell::Cube(c) => c.dim,
            Cell::Simplex(s) => s.vertices.len() - 1,
        }
    }

    pub fn vertices(&self) -> Face {
        match self {
            Cell::Cube(c) => face_of(&c.corners),
            Cell::Simplex(s) => s.vertices.clone(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Cell::Cube(_) => Kind::Cubical,
            Cell::Simplex(_) => Kind::Simplicial,
        }
    }

    /// Every face including the empty face and the cell itself.
    pub fn faces(&self) -> Vec<Face> {
        let mut out = vec![Vec::new()];
        match self {
            Cell::Cube(c) => out.extend(c.patterns().iter().map(|p| c.pattern_vertices(p))),
            Cell::Simplex(s) => {
                let n = s.vertices.len();
                for mask in 1u64..1 << n {
                    out.push(
                        (0..n)
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| s.vertices[i])
                            .collect(),
                    );
                }
            }
        }
        out
    }

    /// Facets in canonical order: for cubes index `2 * axis + side`, for
    /// simplices index `k` omits the `k`-th smallest vertex. A point has the
    /// empty face as its only facet.
    pub fn facets(&self) -> Vec<Face> {
        if self.dim() == 0 {
            return vec![Vec::new()];
        }
        match self {
            Cell::Cube(c) => (0..2 * c.dim)
                .map(|i| c.pattern_vertices(&c.facet_pattern(i)))
                .collect(),
            Cell::Simplex(s) => (0..s.vertices.len())
                .map(|k| {
                    let mut f = s.vertices.clone();
                    f.remove(k);
                    f
                })
                .collect(),
        }
    }

    pub fn facet_count(&self) -> usize {
        if self.dim() == 0 {
            return 1;
        }
        match self {
            Cell::Cube(c) => 2 * c.dim,
            Cell::Simplex(s) => s.vertices.len(),
        }
    }

    /// Bitmask of the facets containing `face`.
    pub fn facets_containing(&self, face: &[VertexId]) -> u64 {
        self.facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| is_subset(face, f))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Smallest face of the cell containing the vertices.
    pub fn smallest_face_containing(&self, vertices: &[VertexId]) -> Option<Face> {
        let all = self.vertices();
        if !is_subset(&face_of(vertices), &all) {
            return None;
        }
        match self {
            Cell::Cube(c) => {
                if vertices.is_empty() {
                    return Some(Vec::new());
                }
                Some(c.pattern_vertices(&c.bounding_pattern(vertices)?))
            }
            Cell::Simplex(_) => Some(face_of(vertices)),
        }
    }

    pub fn is_face(&self, vertices: &[VertexId]) -> bool {
        self.smallest_face_containing(vertices)
            .is_some_and(|f| f == face_of(vertices))
    }

    /// Opposing facet pairs of a cube.
    pub fn opposing_pairs(&self) -> Result<Vec<(usize, usize)>> {
        match self {
            Cell::Cube(c) => Ok((0..c.dim).map(|i| (2 * i, 2 * i + 1)).collect()),
            Cell::Simplex(_) => Err(Error::UnsupportedInput(
                "opposing facets are defined for cubes only".into(),
            )),
        }
    }
}

fn all_facets_mask(cell: &Cell) -> u64 {
    let n = cell.facet_count();
    assert!(n < 64, "too many facets for a bitmask");
    (1u64 << n) - 1
}

/// Face-lattice rule: the removed facets, or their complement, are exactly the
/// facets containing some nonempty face.
pub fn is_stable_by_face_lattice(cell: &Cell, removed: u64) -> bool {
    let all = all_facets_mask(cell);
    let complement = all & !removed;
    cell.faces()
        .iter()
        .filter(|f| !f.is_empty())
        .map(|f| cell.facets_containing(f))
        .any(|m| m == removed || m == complement)
}

/// Cube rule: the removed facets, or their complement, contain no opposing pair.
pub fn is_stable_by_opposing_pairs(cell: &Cell, removed: u64) -> Result<bool> {
    let pairs = cell.opposing_pairs()?;
    let all = all_facets_mask(cell);
    let free = |m: u64| pairs.iter().all(|&(a, b)| m >> a & 1 == 0 || m >> b & 1 == 0);
    Ok(free(removed) || free(all & !removed))
}

/// Whether the cell minus the subcomplex generated by the removed facets is stable.
pub fn is_stable_relative(cell: &Cell, removed: u64) -> bool {
    let by_lattice = is_stable_by_face_lattice(cell, removed);
    if let Cell::Cube(_) = cell {
        let by_pairs = is_stable_by_opposing_pairs(cell, removed).expect("cube");
        assert_eq!(by_lattice, by_pairs, "stability rules disagree on mask {removed:b}");
    }
    by_lattice
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cubical,
    Simplicial,
}

/// A pure complex of cubes or simplices with its face table.
#[derive(Clone, Debug)]
pub struct Complex {
    kind: Kind,
    dim: usize,
    cells: Vec<Cell>,
    faces: HashMap<Face, isize>,
    vertex_cells: BTreeMap<VertexId, Vec<usize>>,
}

impl Complex {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        let first = cells
            .first()
            .ok_or_else(|| Error::InvalidComplex("a complex needs at least one cell".into()))?;
        let (kind, dim) = (first.kind(), first.dim());
        for (i, c) in cells.iter().enumerate() {
            if c.kind() != kind {
                return Err(Error::InvalidComplex(format!(
                    "cell {i} mixes cubes and simplices"
                )));
            }
            if c.dim() != dim {
                return Err(Error::InvalidComplex(format!(
                    "not pure: cell {i} has dimension {}, cell 0 has {dim}",
                    c.dim()
                )));
            }
        }
        let mut vertex_cells: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, c) in cells.iter().enumerate() {
            for v in c.vertices() {
                vertex_cells.entry(v).or_default().push(i);
            }
        }
        let complex = Complex {
            kind,
            dim,
            faces: HashMap::new(),
            cells,
            vertex_cells,
        };
        complex.check_intersections()?;
        let mut faces = HashMap::new();
        for c in &complex.cells {
            for f in c.faces() {
                let d = face_dim(c, &f);
                faces.insert(f, d);
            }
        }
        Ok(Complex { faces, ..complex })
    }

    pub fn cubical(charts: Vec<CubeChart>) -> Result<Self> {
        Self::new(charts.into_iter().map(Cell::Cube).collect())
    }

    pub fn simplicial(simplices: Vec<Vec<VertexId>>) -> Result<Self> {
        Self::new(
            simplices
                .into_iter()
                .map(|s| SimplexCell::new(s).map(Cell::Simplex))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    fn check_intersections(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for (i, c) in self.cells.iter().enumerate() {
            if !seen.insert(c.vertices()) {
                return Err(Error::InvalidComplex(format!("cell {i} is repeated")));
            }
        }
        if self.kind == Kind::Simplicial {
            return Ok(());
        }
        for (i, a) in self.cells.iter().enumerate() {
            let va = a.vertices();
            let mut partners: Vec<usize> = va
                .iter()
                .flat_map(|v| self.vertex_cells[v].iter().copied())
                .filter(|&j| j > i)
                .collect();
            partners.sort_unstable();
            partners.dedup();
            for j in partners {
                let b = &self.cells[j];
                let common: Face = va
                    .iter()
                    .copied()
                    .filter(|v| b.vertices().binary_search(v).is_ok())
                    .collect();
                if !a.is_face(&common) || !b.is_face(&common) {
                    return Err(Error::InvalidComplex(format!(
                        "cells {i} and {j} meet in {common:?}, which is not a face of both"
                    )));
                }
                let sub = |c: &Cell| -> HashSet<Face> {
                    c.faces().into_iter().filter(|f| is_subset(f, &common)).collect()
                };
                if sub(a) != sub(b) {
                    return Err(Error::InvalidComplex(format!(
                        "cells {i} and {j} induce different face structures on {common:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Face table: every face with its dimension, `-1` for the empty face.
    pub fn faces(&self) -> &HashMap<Face, isize> {
        &self.faces
    }

    pub fn face_dim(&self, f: &[VertexId]) -> Option<isize> {
        self.faces.get(f).copied()
    }

    pub fn contains_face(&self, f: &[VertexId]) -> bool {
        self.faces.contains_key(f)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.vertex_cells.keys().copied().collect()
    }

    /// Indices of cells containing every given vertex.
    pub fn cells_containing(&self, vertices: &[VertexId]) -> Vec<usize> {
        let Some(first) = vertices.first() else {
            return (0..self.cells.len()).collect();
        };
        let Some(cands) = self.vertex_cells.get(first) else {
            return Vec::new();
        };
        cands
            .iter()
            .copied()
            .filter(|&i| is_subset(&face_of(vertices), &self.cells[i].vertices()))
            .collect()
    }

    /// Smallest face containing the vertices, if some cell contains them all.
    pub fn smallest_face_containing(&self, vertices: &[VertexId]) -> Option<Face> {
        let i = *self.cells_containing(vertices).first()?;
        self.cells[i].smallest_face_containing(vertices)
    }

    /// Faces of the complex contained in `face`.
    pub fn subfaces(&self, face: &[VertexId]) -> Vec<Face> {
        match self.cells_containing(face).first() {
            Some(&i) => self.cells[i]
                .faces()
                .into_iter()
                .filter(|f| is_subset(f, face))
                .collect(),
            None => Vec::new(),
        }
    }

    /// Subcomplex generated by the given faces.
    pub fn closure(&self, generators: &[Face]) -> Result<HashSet<Face>> {
        let mut out = HashSet::new();
        for g in generators {
            if !self.contains_face(g) {
                return Err(Error::InvalidComplex(format!("{g:?} is not a face")));
            }
            out.extend(self.subfaces(g));
        }
        Ok(out)
    }

    pub fn f_polynomial(&self) -> IntPolynomial {
        f_from_faces(self.faces.values().copied())
    }

    pub fn h_polynomial(&self) -> IntPolynomial {
        h_from_f(&self.f_polynomial(), self.dim + 1).expect("degree bounded by dimension")
    }

    /// Number of faces in each dimension `-1..=dim`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 2];
        for &d in self.faces.values() {
            counts[(d + 1) as usize] += 1;
        }
        counts
    }

    /// Rejects cube complexes whose cells induce different charts on a shared face.
    pub fn check_chart_coherence(&self) -> Result<()> {
        let mut charts: HashMap<Face, (usize, Vec<VertexId>)> = HashMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            let Cell::Cube(chart) = c else {
                return Err(Error::UnsupportedInput("chart coherence needs cubes".into()));
            };
            for p in chart.patterns() {
                let induced = chart.induced_corners(&p);
                let key = face_of(&induced);
                match charts.get(&key) {
                    Some((j, other)) if *other != induced => {
                        return Err(Error::InvalidComplex(format!(
                            "cells {j} and {i} orient the shared face {key:?} differently"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        charts.insert(key, (i, induced));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            kind: self.kind,
            dim: self.dim,
            cells: self
                .cells
                .iter()
                .map(|c| match c {
                    Cell::Cube(ch) => CellJson::Cube { corners: ch.corners.iter().map(|v| v.0).collect() },
                    Cell::Simplex(s) => CellJson::Simplex { vertices: s.vertices.iter().map(|v| v.0).collect() },
                })
                .collect(),
            removed: None,
        }
    }
}

fn face_dim(cell: &Cell, f: &[VertexId]) -> isize {
    if f.is_empty() {
        return -1;
    }
    match cell {
        Cell::Simplex(_) => f.len() as isize - 1,
        Cell::Cube(c) => c
            .bounding_pattern(f)
            .map(|p| p.iter().filter(|x| x.is_none()).count() as isize)
            .expect("face of the cell"),
    }
}

fn f_from_faces(dims: impl Iterator<Item = isize>) -> IntPolynomial {
    let mut counts: Vec<i64> = Vec::new();
    for d in dims {
        let k = (d + 1) as usize;
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    IntPolynomial::from_i64(&counts)
}

/// JSON interchange format for complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub kind: Kind,
    pub dim: usize,
    pub cells: Vec<CellJson>,
    /// Faces generating the removed subcomplex of a relative complex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellJson {
    Cube { corners: Vec<u32> },
    Simplex { vertices: Vec<u32> },
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<Complex> {
        let ids = |v: &[u32]| v.iter().map(|&x| VertexId(x)).collect::<Vec<_>>();
        let cells = self
            .cells
            .iter()
            .map(|c| match (self.kind, c) {
                (Kind::Cubical, CellJson::Cube { corners }) => {
                    CubeChart::new(self.dim, ids(corners)).map(Cell::Cube)
                }
                (Kind::Simplicial, CellJson::Simplex { vertices }) => {
                    if vertices.len() != self.dim + 1 {
                        return Err(Error::InvalidComplex(format!(
                            "a {}-simplex needs {} vertices, got {}",
                            self.dim,
                            self.dim + 1,
                            vertices.len()
                        )));
                    }
                    SimplexCell::new(ids(vertices)).map(Cell::Simplex)
                }
                _ => Err(Error::InvalidComplex(format!(
                    "cell {c:?} does not match kind {:?}",
                    self.kind
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Complex::new(cells)
    }

    pub fn to_relative(&self) -> Result<RelativeComplex> {
        let complex = self.to_complex()?;
        let gens: Vec<Face> = self
            .removed
            .iter()
            .flatten()
            .map(|f| face_of(&f.iter().map(|&x| VertexId(x)).collect::<Vec<_>>()))
            .collect();
        RelativeComplex::generated(complex, &gens)
    }
}

/// A complex minus a subcomplex.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    ambient: Complex,
    removed: HashSet<Face>,
}

impl RelativeComplex {
    pub fn new(ambient: Complex, removed: HashSet<Face>) -> Result<Self> {
        for f in &removed {
            if !ambient.contains_face(f) {
                return Err(Error::InvalidComplex(format!("removed set has non-face {f:?}")));
            }
            for g in ambient.subfaces(f) {
                if !removed.contains(&g) {
                    return Err(Error::InvalidComplex(format!(
                        "removed set is not a subcomplex: {f:?} is removed but {g:?} is not"
                    )));
                }
            }
        }
        Ok(RelativeComplex { ambient, removed })
    }

    pub fn whole(ambient: Complex) -> Self {
        RelativeComplex { ambient, removed: HashSet::new() }
    }

    pub fn generated(ambient: Complex, generators: &[Face]) -> Result<Self> {
        let removed = ambient.closure(generators)?;
        Ok(RelativeComplex { ambient, removed })
    }

    pub fn ambient(&self) -> &Complex {
        &self.ambient
    }

    pub fn removed(&self) -> &HashSet<Face> {
        &self.removed
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim
    }

    pub fn is_present(&self, f: &[VertexId]) -> bool {
        self.ambient.contains_face(f) && !self.removed.contains(f)
    }

    pub fn present_faces(&self) -> impl Iterator<Item = (&Face, isize)> {
        self.ambient
            .faces
            .iter()
            .filter(|(f, _)| !self.removed.contains(*f))
            .map(|(f, &d)| (f, d))
    }

    pub fn f_polynomial(&self) -> IntPolynomial {
        f_from_faces(self.present_faces().map(|(_, d)| d))
    }

    pub fn h_polynomial(&self) -> IntPolynomial {
        h_from_f(&self.f_polynomial(), self.dim() + 1).expect("degree bounded by dimension")
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.present_faces()
            .filter(|(_, d)| *d >= 0)
            .map(|(_, d)| if d % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().map(|&x| VertexId(x)).collect()
    }

    #[test]
    fn square_facets_are_axis_sides() {
        let sq = Cell::Cube(CubeChart::new(2, ids(&[0, 1, 2, 3])).unwrap());
        // corner index 0b10 has coordinate 1 set.
        assert_eq!(sq.facets(), vec![ids(&[0, 1]), ids(&[2, 3]), ids(&[0, 2]), ids(&[1, 3])]);
        assert_eq!(sq.faces().len(), 10);
    }

    #[test]
    fn rejects_bad_intersections() {
        let a = CubeChart::new(2, ids(&[0, 1, 2, 3])).unwrap();
        let b = CubeChart::new(2, ids(&[0, 3, 4, 5])).unwrap();
        assert!(Complex::cubical(vec![a, b]).is_err());
    }
}

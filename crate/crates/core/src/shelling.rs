//! Shelling orders, their per-step relative complexes and stability.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::cellcomplex::{is_stable_relative, Cell, Complex, Face, RelativeComplex};
use crate::error::{Error, Result};
use crate::polyreal::{
    compare_root_lists, descending_roots, interlaces, is_interlacing_sequence, is_real_rooted,
    IntPolynomial,
};
use crate::subdivision::{subdivide, Subdivision};

/// A linear order of the cells of a complex, as cell indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingOrder(Vec<usize>);

impl ShellingOrder {
    pub fn new(order: Vec<usize>, cells: usize) -> Result<Self> {
        let mut seen = vec![false; cells];
        for &i in &order {
            if i >= cells || std::mem::replace(&mut seen[i], true) {
                return Err(Error::UnsupportedInput(format!(
                    "{order:?} is not a permutation of 0..{cells}"
                )));
            }
        }
        if order.len() != cells {
            return Err(Error::UnsupportedInput(format!(
                "{order:?} is not a permutation of 0..{cells}"
            )));
        }
        Ok(ShellingOrder(order))
    }

    pub fn identity(cells: usize) -> Self {
        ShellingOrder((0..cells).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        ShellingOrder(self.0.iter().rev().copied().collect())
    }
}

/// The relative complex contributed by one cell of a shelling.
#[derive(Clone, Debug)]
pub struct ShellingStep {
    /// Position in the order, starting at 0.
    pub index: usize,
    /// Cell index in the complex.
    pub cell: usize,
    /// Faces of the cell lying in earlier cells.
    pub intersection: HashSet<Face>,
    /// Facets of the cell lying in earlier cells, as local facet indices.
    pub intersection_facets: Vec<usize>,
    /// Bitmask form of `intersection_facets`.
    pub removed_mask: u64,
    /// Whether `intersection` is generated by `intersection_facets`.
    pub generated_by_facets: bool,
}

impl ShellingStep {
    /// The cell minus its intersection with the earlier cells.
    pub fn relative(&self, c: &Complex) -> RelativeComplex {
        let ambient = Complex::new(vec![c.cell(self.cell).clone()]).expect("single cell");
        RelativeComplex::new(ambient, self.intersection.clone()).expect("intersection is a subcomplex")
    }

    /// The removed facets as vertex sets.
    pub fn removed_facets(&self, c: &Complex) -> Vec<Face> {
        let facets = c.cell(self.cell).facets();
        self.intersection_facets.iter().map(|&k| facets[k].clone()).collect()
    }

    /// Whether this step extends a shelling: the intersection is pure of
    /// codimension one and its facets begin a shelling of the cell boundary.
    pub fn is_shelling_step(&self, cell: &Cell) -> bool {
        if self.index == 0 {
            return true;
        }
        if self.intersection_facets.is_empty() || !self.generated_by_facets {
            return false;
        }
        let all = (1u64 << cell.facet_count()) - 1;
        match cell {
            Cell::Simplex(_) => true,
            Cell::Cube(_) => {
                if self.removed_mask == all || cell.dim() == 0 {
                    return true;
                }
                let pairs = cell.opposing_pairs().expect("cube");
                pairs.iter().any(|&(a, b)| {
                    let (ha, hb) = (self.removed_mask >> a & 1 == 1, self.removed_mask >> b & 1 == 1);
                    ha != hb
                })
            }
        }
    }

    /// Whether the step's relative complex is stable.
    pub fn is_stable_step(&self, cell: &Cell) -> bool {
        self.generated_by_facets && is_stable_relative(cell, self.removed_mask)
    }
}

pub fn shelling_steps(c: &Complex, so: &ShellingOrder) -> Result<Vec<ShellingStep>> {
    if so.0.len() != c.len() {
        return Err(Error::UnsupportedInput("order length does not match the complex".into()));
    }
    Ok(steps_of_cells(c.cells(), &so.0))
}

/// Shelling steps of a list of cells taken in the given order; the cells need
/// not form a single-kind complex.
pub fn steps_of_cells(cells: &[Cell], order: &[usize]) -> Vec<ShellingStep> {
    let mut seen: HashSet<Face> = HashSet::new();
    let mut steps = Vec::with_capacity(order.len());
    for (index, &ci) in order.iter().enumerate() {
        let cell = &cells[ci];
        let faces = cell.faces();
        let intersection: HashSet<Face> = faces.iter().filter(|f| seen.contains(*f)).cloned().collect();
        let facets = cell.facets();
        let intersection_facets: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| intersection.contains(*f))
            .map(|(k, _)| k)
            .collect();
        let removed_mask = intersection_facets.iter().fold(0u64, |m, &k| m | 1 << k);
        let generated: HashSet<Face> = faces
            .iter()
            .filter(|f| {
                intersection_facets
                    .iter()
                    .any(|&k| f.iter().all(|v| facets[k].binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        steps.push(ShellingStep {
            index,
            cell: ci,
            generated_by_facets: generated == intersection,
            intersection,
            intersection_facets,
            removed_mask,
        });
        seen.extend(faces);
    }
    steps
}

/// Outcome of a shelling or stability check; `failing_step` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub failing_step: Option<usize>,
}

impl Verdict {
    pub(crate) fn from_steps(flags: impl Iterator<Item = bool>) -> Self {
        let mut failing = None;
        for (i, ok) in flags.enumerate() {
            if !ok {
                failing = Some(i + 1);
                break;
            }
        }
        Verdict { ok: failing.is_none(), failing_step: failing }
    }
}

pub fn is_shelling(c: &Complex, so: &ShellingOrder) -> Result<Verdict> {
    let steps = shelling_steps(c, so)?;
    Ok(Verdict::from_steps(steps.iter().map(|s| s.is_shelling_step(c.cell(s.cell)))))
}

pub fn is_stable_shelling(c: &Complex, so: &ShellingOrder) -> Result<Verdict> {
    let steps = shelling_steps(c, so)?;
    Ok(Verdict::from_steps(steps.iter().map(|s| s.is_stable_step(c.cell(s.cell)))))
}

/// Relative complexes of a shelling after subdividing: the subdivision of each
/// cell minus the subdivision of its intersection with the earlier cells.
pub fn subdivided_relative_complexes(
    c: &Complex,
    so: &ShellingOrder,
    subdiv: Subdivision,
) -> Result<Vec<RelativeComplex>> {
    let steps = shelling_steps(c, so)?;
    let sub = subdivide(c, subdiv)?;
    let mut by_cell: HashMap<Face, Vec<usize>> = HashMap::new();
    for (k, cell) in sub.complex.cells().iter().enumerate() {
        by_cell.entry(sub.carrier(c, &cell.vertices())).or_default().push(k);
    }
    steps
        .iter()
        .map(|step| {
            let cell_vertices = c.cell(step.cell).vertices();
            let cells: Vec<Cell> = by_cell
                .get(&cell_vertices)
                .map(|ks| ks.iter().map(|&k| sub.complex.cell(k).clone()).collect())
                .unwrap_or_default();
            let ambient = Complex::new(cells)?;
            let removed: HashSet<Face> = ambient
                .faces()
                .keys()
                .filter(|f| step.intersection.contains(&sub.carrier(c, f)))
                .cloned()
                .collect();
            RelativeComplex::new(ambient, removed)
        })
        .collect()
}

/// Report of the interlacing criterion for real-rootedness of a subdivision.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub step_h: Vec<IntPolynomial>,
    pub h_total: IntPolynomial,
    /// `sum of step_h == h_total`.
    pub additive: bool,
    /// Steps whose h-polynomial is not real-rooted (1-based).
    pub non_real_rooted_steps: Vec<usize>,
    /// Pairs of steps comparable in neither direction (1-based).
    pub incomparable_pairs: Vec<(usize, usize)>,
    pub pairwise_ok: bool,
    pub ordering_found: bool,
    /// Step positions (1-based) forming an interlacing sequence, if found.
    pub interlacing_order: Option<Vec<usize>>,
    pub real_rooted: bool,
}

fn safe_interlaces(p: &IntPolynomial, q: &IntPolynomial) -> bool {
    interlaces(p, q).unwrap_or(false)
}

/// Candidate order: increasing by the descending root list.
fn root_sorted(hs: &[IntPolynomial]) -> Option<Vec<usize>> {
    let mut keyed: Vec<(usize, Vec<_>)> = hs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let roots = if h.degree().unwrap_or(0) == 0 { Ok(Vec::new()) } else { descending_roots(h) };
            roots.map(|r| (i, r))
        })
        .collect::<Result<_>>()
        .ok()?;
    // Insertion sort keeps equal keys in input order and lets the comparator refine in place.
    for i in 1..keyed.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = keyed.split_at_mut(j);
            if compare_root_lists(&mut left[j - 1].1, &mut right[0].1) == Ordering::Greater {
                keyed.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    Some(keyed.into_iter().map(|(i, _)| i).collect())
}

pub fn check_interlacing_theorem(
    c: &Complex,
    so: &ShellingOrder,
    subdiv: Subdivision,
) -> Result<TheoremReport> {
    let rel = subdivided_relative_complexes(c, so, subdiv)?;
    let step_h: Vec<IntPolynomial> = rel.iter().map(|r| r.h_polynomial()).collect();
    let h_total = subdivide(c, subdiv)?.complex.h_polynomial();
    let additive = step_h.iter().cloned().sum::<IntPolynomial>() == h_total;
    let non_real_rooted_steps: Vec<usize> = step_h
        .iter()
        .enumerate()
        .filter(|(_, h)| !is_real_rooted(h))
        .map(|(i, _)| i + 1)
        .collect();
    let mut incomparable_pairs = Vec::new();
    for i in 0..step_h.len() {
        for j in i..step_h.len() {
            if !safe_interlaces(&step_h[i], &step_h[j]) && !safe_interlaces(&step_h[j], &step_h[i]) {
                incomparable_pairs.push((i + 1, j + 1));
            }
        }
    }
    let pairwise_ok = incomparable_pairs.is_empty();
    let mut candidates = Vec::new();
    if let Some(sorted) = root_sorted(&step_h) {
        candidates.push(sorted.iter().rev().copied().collect::<Vec<_>>());
        candidates.push(sorted);
    }
    candidates.push((0..step_h.len()).collect());
    let interlacing_order = if pairwise_ok {
        candidates.into_iter().find(|order| {
            let seq: Vec<IntPolynomial> = order.iter().map(|&i| step_h[i].clone()).collect();
            is_interlacing_sequence(&seq).unwrap_or(false)
        })
    } else {
        None
    };
    Ok(TheoremReport {
        additive,
        non_real_rooted_steps,
        incomparable_pairs,
        pairwise_ok,
        ordering_found: interlacing_order.is_some(),
        interlacing_order: interlacing_order.map(|o| o.into_iter().map(|i| i + 1).collect()),
        real_rooted: is_real_rooted(&h_total),
        h_total,
        step_h,
    })
}

/// Per-step entry of a shelling report.
#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub cell: usize,
    pub removed_facets: Vec<Vec<u32>>,
    pub shelling_step: bool,
    pub stable: bool,
    pub h_coeffs: IntPolynomial,
}

/// Combined shelling, stability and interlacing report.
#[derive(Clone, Debug, Serialize)]
pub struct ShellingReport {
    pub steps: Vec<StepReport>,
    pub is_shelling: Verdict,
    pub is_stable: Verdict,
    pub h_total: IntPolynomial,
    pub real_rooted: bool,
    pub interlacing_order: Option<Vec<usize>>,
    pub pairwise_ok: bool,
}

pub fn shelling_report(c: &Complex, so: &ShellingOrder, subdiv: Subdivision) -> Result<ShellingReport> {
    let steps = shelling_steps(c, so)?;
    let theorem = check_interlacing_theorem(c, so, subdiv)?;
    let reports = steps
        .iter()
        .zip(&theorem.step_h)
        .map(|(s, h)| StepReport {
            cell: s.cell,
            removed_facets: s
                .removed_facets(c)
                .into_iter()
                .map(|f| f.into_iter().map(|v| v.0).collect())
                .collect(),
            shelling_step: s.is_shelling_step(c.cell(s.cell)),
            stable: s.is_stable_step(c.cell(s.cell)),
            h_coeffs: h.clone(),
        })
        .collect();
    Ok(ShellingReport {
        steps: reports,
        is_shelling: is_shelling(c, so)?,
        is_stable: is_stable_shelling(c, so)?,
        h_total: theorem.h_total,
        real_rooted: theorem.real_rooted,
        interlacing_order: theorem.interlacing_order,
        pairwise_ok: theorem.pairwise_ok,
    })
}

//! Evacuation of straight tableaux, its extension to skew shapes, and
//! Robinson–Schensted insertion for permutations.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jdt::{evacuation_positions, slide_in_through, slide_out_through, slide_vacating, SlideDirection};
use crate::shape::{Cell, SkewShape};
use crate::tableau::{StandardTableau, Tableau};

/// One state `Q_s` of the evacuation procedure: the tableau and which cells
/// are already frozen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvacuationFrame {
    pub tableau: Tableau,
    pub frozen: BTreeSet<Cell>,
}

/// Rows on separate lines; frozen entries are bracketed, e.g. `[7]`.
impl fmt::Display for EvacuationFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.tableau;
        for i in 1..=t.shape().num_rows() {
            if i > 1 {
                writeln!(f)?;
            }
            let (a, b) = t.shape().row_span(i);
            let line: Vec<String> = (a..=b)
                .map(|j| {
                    let c = Cell::new(i, j);
                    if self.frozen.contains(&c) {
                        format!("[{}]", t.at(c))
                    } else {
                        t.at(c).to_string()
                    }
                })
                .collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `Sch(Q)` for straight `Q`.
pub fn evacuate(q: &StandardTableau) -> Result<StandardTableau> {
    if !q.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    StandardTableau::from_positions_in(q.shape().clone(), &evacuation_positions(q))
}

/// `Sch(Q)` together with the states `Q_1, …, Q_n`.
///
/// Step `s`: drop the entry 1 of the active (unfrozen) part, lower the rest
/// by one, slide into the freed corner, and freeze the value `n - s + 1` in
/// the cell the slide vacates.
pub fn evacuate_traced(q: &StandardTableau) -> Result<(StandardTableau, Vec<EvacuationFrame>)> {
    if !q.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    let n = q.size();
    let mut active = q.positions();
    let mut frozen_at: Vec<Cell> = vec![Cell::new(0, 0); n];
    let mut frames = Vec::with_capacity(n);
    let mut frozen = BTreeSet::new();
    for m in (1..=n).rev() {
        let corner = active[0];
        let rest = StandardTableau::from_positions(&active[1..])?;
        let (slid, vacated) = slide_vacating(&rest, corner, SlideDirection::Inward)?;
        frozen_at[m - 1] = vacated;
        frozen.insert(vacated);
        active = slid.positions();

        let mut value_at = std::collections::BTreeMap::new();
        for (k, &c) in active.iter().enumerate() {
            value_at.insert(c, k as u32 + 1);
        }
        for v in m..=n {
            value_at.insert(frozen_at[v - 1], v as u32);
        }
        let tableau = Tableau::from_fn(q.shape().clone(), |c| value_at[&c]);
        frames.push(EvacuationFrame { tableau, frozen: frozen.clone() });
    }
    let result = StandardTableau::from_positions_in(q.shape().clone(), &frozen_at)?;
    Ok((result, frames))
}

/// `S̃ch(Q)`, using the row-reading tableau of the inner shape as the
/// auxiliary straight tableau.
pub fn skew_evacuate(q: &StandardTableau) -> Result<StandardTableau> {
    let inner = q.shape().canonical().inner().clone();
    let p = StandardTableau::row_order(SkewShape::straight(inner));
    skew_evacuate_with(q, &p)
}

/// `S̃ch(Q) = j_{[V : j^P(Q)]}(Sch(j^P(Q)))` for an explicit straight `P`
/// that `Q` extends.
pub fn skew_evacuate_with(q: &StandardTableau, p: &StandardTableau) -> Result<StandardTableau> {
    if !p.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    let (straightened, vacating) = slide_in_through(p, q)?;
    let evacuated = evacuate(&straightened)?;
    let (back, _) = slide_out_through(&evacuated, &vacating)?;
    StandardTableau::from_positions_in(q.shape().clone(), &back.positions())
}

/// `Δ(P, Q) = (j^P(Q), j_Q(P))` for straight `P` extended by `Q`.
pub fn delta(p: &StandardTableau, q: &StandardTableau) -> Result<(StandardTableau, StandardTableau)> {
    if !p.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    let (upper, _) = slide_in_through(p, q)?;
    let (lower, _) = slide_out_through(p, q)?;
    Ok((upper, lower))
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `{i : w(i) > w(i+1)}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.images.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }

    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&d| d as u64).sum()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { images: cur })
        })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Reverse the word, then replace each `v` by `n + 1 - v`.
pub fn reverse_complement(w: &Permutation) -> Permutation {
    let n = w.len();
    Permutation { images: w.images.iter().rev().map(|&v| n + 1 - v).collect() }
}

/// Insertion and recording tableaux of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsPair {
    pub insertion: StandardTableau,
    pub recording: StandardTableau,
}

/// Robinson–Schensted row insertion.
pub fn rs_insert(w: &Permutation) -> RsPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &v) in w.images().iter().enumerate() {
        let mut x = v as u32;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    RsPair {
        insertion: StandardTableau::from_rows(p).expect("row insertion yields a standard tableau"),
        recording: StandardTableau::from_rows(q).expect("recording tableau is standard"),
    }
}

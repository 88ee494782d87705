//! Partitions, cells and skew shapes.
//!
//! Cells are `(row, col)`, both 1-based, rows growing downward and columns
//! growing to the right (English notation). A skew shape `λ/μ` is the set of
//! cells `(i, j)` with `μ_i < j ≤ λ_i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty partition is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zero parts are dropped; any other zero or increase is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as u32).collect()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        SkewShape::straight(self.clone()).cells()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A 1-based `(row, col)` position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Componentwise `≤`, the order in which Young diagrams are ideals.
    pub fn le(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew diagram `outer / inner`.
///
/// Two shapes with different `(outer, inner)` may have the same cell set
/// (`2,2/2` and `3,2/3`). They are kept distinct; [`SkewShape::canonical`]
/// picks one representative per cell set.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained {
                outer: outer.parts.iter().map(|&p| p as u32).collect(),
                inner: inner.parts.iter().map(|&p| p as u32).collect(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// `n = |λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of rows of the outer partition.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns `first..=last` occupied in row `i`; empty when `first > last`.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.num_rows() && {
            let (a, b) = self.row_span(c.row);
            c.col >= a && c.col <= b
        }
    }

    /// All cells, rows ascending then columns ascending.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.num_rows() {
            let (a, b) = self.row_span(i);
            out.extend((a..=b).map(|j| Cell::new(i, j)));
        }
        out
    }

    /// True when the cell set is an order ideal, i.e. a Young diagram.
    pub fn is_straight(&self) -> bool {
        self.canonical().inner.is_empty()
    }

    /// The representative of this cell set produced by [`SkewShape::from_cells`].
    pub fn canonical(&self) -> SkewShape {
        SkewShape::from_cells(&self.cells()).expect("cells of a skew shape form a skew shape")
    }

    /// Same cell set, regardless of the `(outer, inner)` encoding.
    pub fn same_cells(&self, other: &SkewShape) -> bool {
        self.size() == other.size() && self.cells() == other.cells()
    }

    /// Rebuilds a shape from its cells.
    ///
    /// The outer partition is the order ideal generated by the cells; the
    /// inner partition is that ideal minus the cells. Rows with no cells get
    /// `λ_i = μ_i = λ_{i+1}`, and trailing empty rows are dropped. Fails when
    /// the set is not convex.
    pub fn from_cells(cells: &[Cell]) -> Result<SkewShape> {
        if cells.is_empty() {
            return Ok(SkewShape::default());
        }
        let rows = cells.iter().map(|c| c.row).max().unwrap();
        let mut lo = vec![usize::MAX; rows + 1];
        let mut hi = vec![0usize; rows + 1];
        let mut count = vec![0usize; rows + 1];
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(Error::NotASkewShape);
            }
            lo[c.row] = lo[c.row].min(c.col);
            hi[c.row] = hi[c.row].max(c.col);
            count[c.row] += 1;
        }
        let mut outer = vec![0usize; rows + 1];
        let mut inner = vec![0usize; rows + 1];
        let mut below = 0;
        for i in (1..=rows).rev() {
            if count[i] == 0 {
                outer[i] = below;
                inner[i] = below;
            } else {
                if count[i] != hi[i] - lo[i] + 1 {
                    return Err(Error::NotASkewShape);
                }
                outer[i] = hi[i].max(below);
                inner[i] = lo[i] - 1;
                if outer[i] != hi[i] {
                    return Err(Error::NotASkewShape);
                }
            }
            below = outer[i];
        }
        let outer = Partition::new(outer[1..].to_vec()).map_err(|_| Error::NotASkewShape)?;
        let inner = Partition::new(inner[1..].to_vec()).map_err(|_| Error::NotASkewShape)?;
        let shape = SkewShape::new(outer, inner).map_err(|_| Error::NotASkewShape)?;
        if shape.size() != cells.len() {
            return Err(Error::NotASkewShape);
        }
        Ok(shape)
    }

    /// Removable corners of the canonical inner partition: the cells an
    /// inward slide can start from that actually move something.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let c = self.canonical();
        (1..=c.inner.len())
            .filter(|&i| c.inner.part(i) > c.inner.part(i + 1))
            .map(|i| Cell::new(i, c.inner.part(i)))
            .collect()
    }

    /// Addable corners of the canonical outer partition.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let c = self.canonical();
        (1..=c.outer.len() + 1)
            .filter(|&i| i == 1 || c.outer.part(i) < c.outer.part(i - 1))
            .map(|i| Cell::new(i, c.outer.part(i) + 1))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.splitn(2, '/');
        let outer: Partition = it.next().unwrap_or("").parse()?;
        let inner: Partition = match it.next() {
            Some(t) => t.parse()?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}

/// True when `set` is order-convex and hence the cell set of a skew shape.
pub fn is_skew_cell_set(cells: &[Cell]) -> bool {
    SkewShape::from_cells(cells).is_ok()
}

/// Every nonempty partition of size at most `max_size`, by size and then
/// in decreasing lexicographic order.
pub fn enumerate_partitions(max_size: usize) -> Vec<Partition> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=left.min(cap)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every nonempty skew shape with at most `max_cells` cells, `ℓ(λ) ≤ max_rows`
/// and `λ_1 ≤ max_cols`, one canonical representative per cell set.
///
/// Sorted by size, then outer, then inner partition.
pub fn enumerate_skew_shapes(max_cells: usize, max_rows: usize, max_cols: usize) -> Vec<SkewShape> {
    let mut found = BTreeSet::new();
    let mut outer = Vec::with_capacity(max_rows);
    let mut inner = Vec::with_capacity(max_rows);
    grow_rows(max_cells, max_rows, max_cols, max_cols, &mut outer, &mut inner, 0, &mut found);
    let mut shapes: Vec<SkewShape> = found.into_iter().collect();
    shapes.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    shapes
}

#[allow(clippy::too_many_arguments)]
fn grow_rows(
    max_cells: usize,
    max_rows: usize,
    outer_cap: usize,
    inner_cap: usize,
    outer: &mut Vec<usize>,
    inner: &mut Vec<usize>,
    used: usize,
    found: &mut BTreeSet<SkewShape>,
) {
    if used > 0 {
        let shape = SkewShape::from_parts(outer, inner).expect("rows built within bounds");
        found.insert(shape.canonical());
    }
    if outer.len() == max_rows {
        return;
    }
    for lam in (1..=outer_cap).rev() {
        for mu in 0..=inner_cap.min(lam) {
            let add = lam - mu;
            if used + add > max_cells {
                continue;
            }
            outer.push(lam);
            inner.push(mu);
            grow_rows(max_cells, max_rows, lam, mu, outer, inner, used + add, found);
            outer.pop();
            inner.pop();
        }
    }
}

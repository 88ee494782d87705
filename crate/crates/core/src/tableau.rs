//! Fillings of skew shapes: semistandard (entries start at 0) and standard.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition, SkewShape};

/// Default cap on `n` for anything that enumerates standard tableaux.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// Enumeration cap: `TABLEAUX_BUDGET` if set and parseable, otherwise
/// [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumeration_limit() -> usize {
    std::env::var("TABLEAUX_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

/// A filling of a skew shape by non-negative integers.
///
/// `rows[i - 1]` holds the entries of row `i` from column `μ_i + 1` to `λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows given for shape {shape} with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_len(i + 1) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, shape {shape} needs {}",
                    i + 1,
                    r.len(),
                    shape.row_len(i + 1)
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = SkewShape::straight(Partition::new(rows.iter().map(Vec::len).collect())?);
        Tableau::new(shape, rows)
    }

    pub fn from_fn(shape: SkewShape, mut f: impl FnMut(Cell) -> u32) -> Self {
        let rows = (1..=shape.num_rows())
            .map(|i| {
                let (a, b) = shape.row_span(i);
                (a..=b).map(|j| f(Cell::new(i, j))).collect()
            })
            .collect();
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        if !self.shape.contains(c) {
            return None;
        }
        let offset = self.shape.inner().part(c.row) + 1;
        Some(self.rows[c.row - 1][c.col - offset])
    }

    /// Entry at a cell known to be in the shape.
    pub fn at(&self, c: Cell) -> u32 {
        self.get(c).unwrap_or_else(|| panic!("{c} is not a cell of {}", self.shape))
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, r)| {
            let offset = self.shape.inner().part(i + 1) + 1;
            r.iter().enumerate().map(move |(k, &v)| (Cell::new(i + 1, offset + k), v))
        })
    }

    /// Row-major entry list, the key for lexicographic ordering.
    pub fn flat(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `|T|`, the sum of all entries.
    pub fn volume(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_ssyt(&self) -> bool {
        self.entries().all(|(c, v)| {
            let left_ok = self.get(Cell::new(c.row, c.col.wrapping_sub(1))).is_none_or(|l| l <= v);
            let up_ok = c.row == 1 || self.get(Cell::new(c.row - 1, c.col)).is_none_or(|u| u < v);
            left_ok && up_ok
        })
    }

    /// Entries are `1..=n`, each once, strictly increasing along rows and columns.
    pub fn is_syt(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.entries() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.entries().all(|(c, v)| {
            let left_ok = self.get(Cell::new(c.row, c.col.wrapping_sub(1))).is_none_or(|l| l < v);
            let up_ok = c.row == 1 || self.get(Cell::new(c.row - 1, c.col)).is_none_or(|u| u < v);
            left_ok && up_ok
        })
    }

    /// `Y(T)`: the entries sorted into a weakly increasing sequence.
    pub fn reading_partition(&self) -> ReadingPartition {
        let mut values: Vec<u64> = self.rows.iter().flatten().map(|&v| v as u64).collect();
        values.sort_unstable();
        ReadingPartition { values }
    }

    /// Rows joined by `" / "` on one line.
    pub fn compact(&self) -> String {
        self.to_string().replace('\n', " / ")
    }

    /// Parses a filling of a given shape from a bare entry list per row
    /// (no `.` placeholders), as used by the `--syt` / `--ssyt` flags.
    pub fn parse_for_shape(shape: SkewShape, s: &str) -> Result<Self> {
        let rows: Vec<Vec<u32>> = split_rows(s)
            .into_iter()
            .map(|line| {
                line.split_whitespace()
                    .filter(|tok| *tok != ".")
                    .map(parse_entry)
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<_>>()?;
        let mut rows = rows;
        while rows.len() < shape.num_rows() {
            rows.push(Vec::new());
        }
        Tableau::new(shape, rows)
    }
}

fn parse_entry(tok: &str) -> Result<u32> {
    tok.parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))
}

fn split_rows(s: &str) -> Vec<&str> {
    let s = s.trim_matches(|c: char| c == '\n' || c == '\r');
    if s.trim().is_empty() {
        return Vec::new();
    }
    s.split(['\n', '/']).map(str::trim).collect()
}

/// One row per line, entries separated by single spaces, `.` for inner cells.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let dots = std::iter::repeat_n(".".to_string(), self.shape.inner().part(i + 1));
            let vals = r.iter().map(u32::to_string);
            let line: Vec<String> = dots.chain(vals).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Inverse of `Display`; rows may also be separated by `/`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in split_rows(s) {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let dots = toks.iter().take_while(|t| **t == ".").count();
            let vals = toks[dots..].iter().map(|t| parse_entry(t)).collect::<Result<Vec<u32>>>()?;
            outer.push(toks.len());
            inner.push(dots);
            rows.push(vals);
        }
        // trailing all-dot rows carry no cells
        while outer.last().is_some() && outer.last() == inner.last() {
            outer.pop();
            inner.pop();
            rows.pop();
        }
        let shape = SkewShape::from_parts(&outer, &inner)?;
        Tableau::new(shape, rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Tableau", 2)?;
        st.serialize_field("shape", &self.shape.to_string())?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

/// `Des` from the position of each entry: `positions[k - 1]` is the cell of `k`.
///
/// Works for any injective filling by `1..=n`, holes included.
pub fn descent_set_of(positions: &[Cell]) -> BTreeSet<usize> {
    positions
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1].row > w[0].row)
        .map(|(k, _)| k + 1)
        .collect()
}

/// A tableau validated to be standard.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn new(t: Tableau) -> Result<Self> {
        if !t.is_syt() {
            return Err(Error::NotStandard(t.compact()));
        }
        Ok(StandardTableau(t))
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        StandardTableau::new(Tableau::from_rows(rows)?)
    }

    /// Places `k` at `positions[k - 1]`; the cells must form a skew shape.
    pub fn from_positions(positions: &[Cell]) -> Result<Self> {
        let shape = SkewShape::from_cells(positions)?;
        Self::from_positions_in(shape, positions)
    }

    /// As [`from_positions`](Self::from_positions) but keeping the given encoding of the shape.
    pub fn from_positions_in(shape: SkewShape, positions: &[Cell]) -> Result<Self> {
        if positions.len() != shape.size() || positions.iter().any(|&c| !shape.contains(c)) {
            return Err(Error::ShapeMismatch(format!("positions do not cover {shape}")));
        }
        let mut t = Tableau::from_fn(shape, |_| 0);
        for (k, &c) in positions.iter().enumerate() {
            let offset = t.shape.inner().part(c.row) + 1;
            t.rows[c.row - 1][c.col - offset] = k as u32 + 1;
        }
        StandardTableau::new(t)
    }

    /// Row-reading superstandard tableau: `1..=n` filled row by row.
    pub fn row_order(shape: SkewShape) -> Self {
        let mut k = 0;
        StandardTableau(Tableau::from_fn(shape, |_| {
            k += 1;
            k
        }))
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    pub fn shape(&self) -> &SkewShape {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `positions()[k - 1] = Q(k)`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size()];
        for (c, v) in self.0.entries() {
            pos[v as usize - 1] = c;
        }
        pos
    }

    /// `Q(k)`, the cell holding `k`.
    pub fn position_of(&self, k: usize) -> Result<Cell> {
        let n = self.size();
        if k == 0 || k > n {
            return Err(Error::EntryOutOfRange { k, n });
        }
        Ok(self.0.entries().find(|&(_, v)| v as usize == k).map(|(c, _)| c).unwrap())
    }

    /// `{k : k + 1 lies in a lower row than k}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        descent_set_of(&self.positions())
    }

    /// Sum of the descents.
    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&d| d as u64).sum()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(s.parse()?)
    }
}

/// A weakly increasing list of non-negative integers (zeros allowed).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ReadingPartition {
    values: Vec<u64>,
}

impl ReadingPartition {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(values));
        }
        Ok(ReadingPartition { values })
    }

    pub fn zeros(n: usize) -> Self {
        ReadingPartition { values: vec![0; n] }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl fmt::Display for ReadingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ReadingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ReadingPartition::default());
        }
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        ReadingPartition::new(values)
    }
}

/// Row-major neighbour indices used by the enumerators.
struct Layout {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

impl Layout {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let index = |c: Cell| cells.iter().position(|&d| d == c);
        let left = cells
            .iter()
            .map(|c| if c.col > 1 { index(Cell::new(c.row, c.col - 1)) } else { None })
            .collect();
        let up = cells
            .iter()
            .map(|c| if c.row > 1 { index(Cell::new(c.row - 1, c.col)) } else { None })
            .collect();
        Layout { cells, left, up }
    }
}

/// All standard tableaux of `shape`, sorted lexicographically by row-major entries.
pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<StandardTableau>> {
    enumerate_syt_with_limit(shape, enumeration_limit())
}

pub fn enumerate_syt_with_limit(shape: &SkewShape, limit: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > limit {
        return Err(Error::LimitExceeded { size: n, limit });
    }
    let layout = Layout::new(shape);
    let mut out = Vec::new();
    let mut values = vec![0u32; n];
    fill_standard(&layout, &mut values, 1, &mut out);
    out.sort_unstable();
    Ok(out
        .into_iter()
        .map(|flat| {
            let mut it = flat.into_iter();
            StandardTableau(Tableau::from_fn(shape.clone(), |_| it.next().unwrap()))
        })
        .collect())
}

fn fill_standard(layout: &Layout, values: &mut [u32], k: u32, out: &mut Vec<Vec<u32>>) {
    if k as usize > values.len() {
        out.push(values.to_vec());
        return;
    }
    for i in 0..values.len() {
        if values[i] != 0 {
            continue;
        }
        let ready = |nb: Option<usize>| nb.is_none_or(|j| values[j] != 0);
        if ready(layout.left[i]) && ready(layout.up[i]) {
            values[i] = k;
            fill_standard(layout, values, k + 1, out);
            values[i] = 0;
        }
    }
}

/// A random linear extension of the cells of `shape`, built by repeatedly
/// placing the next entry in a random available cell.
pub fn random_syt<R: Rng + ?Sized>(shape: &SkewShape, rng: &mut R) -> StandardTableau {
    let cells = shape.cells();
    let mut placed = vec![false; cells.len()];
    let idx = |c: Cell| cells.binary_search(&c).ok();
    let mut order = Vec::with_capacity(cells.len());
    while order.len() < cells.len() {
        let ready: Vec<usize> = (0..cells.len())
            .filter(|&i| {
                let c = cells[i];
                let ok = |nb: Option<usize>| nb.is_none_or(|j| placed[j]);
                !placed[i]
                    && ok(if c.col > 1 { idx(Cell::new(c.row, c.col - 1)) } else { None })
                    && ok(if c.row > 1 { idx(Cell::new(c.row - 1, c.col)) } else { None })
            })
            .collect();
        let &i = ready.choose(rng).expect("some cell is always available");
        placed[i] = true;
        order.push(cells[i]);
    }
    StandardTableau::from_positions_in(shape.clone(), &order).expect("linear extension")
}

/// Lazily yields every semistandard tableau of `shape` with entries in
/// `0..=max_entry`, in lexicographic row-major order.
pub fn enumerate_ssyt_bounded(shape: &SkewShape, max_entry: u32) -> SsytIter {
    SsytIter::new(shape.clone(), max_entry)
}

pub struct SsytIter {
    shape: SkewShape,
    layout: Layout,
    max_entry: u32,
    current: Vec<u32>,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl SsytIter {
    fn new(shape: SkewShape, max_entry: u32) -> Self {
        let layout = Layout::new(&shape);
        let n = layout.cells.len();
        SsytIter { shape, layout, max_entry, current: vec![0; n], state: IterState::Fresh }
    }

    fn lower_bound(&self, i: usize) -> u32 {
        let l = self.layout.left[i].map_or(0, |j| self.current[j]);
        let u = self.layout.up[i].map_or(0, |j| self.current[j] + 1);
        l.max(u)
    }

    /// Minimal completion of positions `from..`; false if it exceeds the bound.
    fn fill_min(&mut self, from: usize) -> bool {
        for i in from..self.current.len() {
            let v = self.lower_bound(i);
            if v > self.max_entry {
                return false;
            }
            self.current[i] = v;
        }
        true
    }

    fn advance(&mut self) -> bool {
        for p in (0..self.current.len()).rev() {
            if self.current[p] < self.max_entry {
                self.current[p] += 1;
                if self.fill_min(p + 1) {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let ok = match self.state {
            IterState::Fresh => self.fill_min(0),
            IterState::Running => self.advance(),
            IterState::Done => false,
        };
        if !ok {
            self.state = IterState::Done;
            return None;
        }
        self.state = IterState::Running;
        let mut it = self.current.iter().copied();
        Some(Tableau::from_fn(self.shape.clone(), |_| it.next().unwrap()))
    }
}

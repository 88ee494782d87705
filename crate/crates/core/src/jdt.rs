//! Jeu de taquin on standard tableaux.
//!
//! An inward slide starts from an empty cell `c` on the north-west boundary
//! and repeatedly pulls the smaller of the east and south neighbours into
//! the hole. An outward slide starts on the south-east boundary and pulls the
//! larger of the west and north neighbours. The cell the hole ends in is the
//! *vacated* cell.
//!
//! A slide into `c` is legal when `c` is empty, the occupied cells plus `c`
//! still form a skew shape, and no occupied cell lies weakly north-west of
//! `c` (inward) or weakly south-east of it (outward). This admits slides
//! that move nothing; they vacate `c` itself, which is what the vacating
//! tableau bookkeeping needs.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::shape::{Cell, SkewShape};
use crate::tableau::{descent_set_of, StandardTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlideDirection {
    /// u-slide: into a cell on the north-west boundary.
    Inward,
    /// d-slide: into a cell on the south-east boundary.
    Outward,
}

impl SlideDirection {
    fn name(self) -> &'static str {
        match self {
            SlideDirection::Inward => "inward",
            SlideDirection::Outward => "outward",
        }
    }
}

/// An injective filling of a set of cells by `1..=n`, possibly with one
/// empty cell. Intermediate state of a slide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoledTableau {
    positions: Vec<Cell>,
    hole: Option<Cell>,
}

impl HoledTableau {
    pub fn positions(&self) -> &[Cell] {
        &self.positions
    }

    pub fn hole(&self) -> Option<Cell> {
        self.hole
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        descent_set_of(&self.positions)
    }
}

/// Bounding-box grid; `*` marks the hole and `.` any other empty cell.
/// Trailing empty cells of each row are dropped.
impl fmt::Display for HoledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.positions.iter().chain(self.hole.iter());
        let rows = cells.clone().map(|c| c.row).max().unwrap_or(0);
        let cols = cells.map(|c| c.col).max().unwrap_or(0);
        let mut grid = vec![vec![".".to_string(); cols]; rows];
        for (k, c) in self.positions.iter().enumerate() {
            grid[c.row - 1][c.col - 1] = (k + 1).to_string();
        }
        if let Some(h) = self.hole {
            grid[h.row - 1][h.col - 1] = "*".to_string();
        }
        for (i, mut row) in grid.into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            while row.last().is_some_and(|s| s == ".") {
                row.pop();
            }
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dense working grid; 0 means empty.
#[derive(Clone)]
struct Board {
    grid: Vec<Vec<u32>>,
    pos: Vec<Cell>,
}

impl Board {
    fn new(positions: Vec<Cell>) -> Self {
        let mut b = Board { grid: Vec::new(), pos: Vec::with_capacity(positions.len()) };
        for (k, &c) in positions.iter().enumerate() {
            b.put(c, k as u32 + 1);
        }
        b.pos = positions;
        b
    }

    fn from_tableau(q: &StandardTableau) -> Self {
        Board::new(q.positions())
    }

    fn get(&self, row: usize, col: usize) -> u32 {
        if row == 0 || col == 0 {
            return 0;
        }
        self.grid.get(row - 1).and_then(|r| r.get(col - 1)).copied().unwrap_or(0)
    }

    fn put(&mut self, c: Cell, v: u32) {
        if self.grid.len() < c.row {
            self.grid.resize(c.row, Vec::new());
        }
        let r = &mut self.grid[c.row - 1];
        if r.len() < c.col {
            r.resize(c.col, 0);
        }
        r[c.col - 1] = v;
        if v != 0 {
            let k = v as usize - 1;
            if k < self.pos.len() {
                self.pos[k] = c;
            }
        }
    }

    fn check_legal(&self, c: Cell, dir: SlideDirection) -> Result<()> {
        let illegal = || Error::IllegalSlide { cell: c, direction: dir.name() };
        if c.row == 0 || c.col == 0 || self.get(c.row, c.col) != 0 {
            return Err(illegal());
        }
        let blocked = match dir {
            SlideDirection::Inward => self.pos.iter().any(|&s| s.le(c)),
            SlideDirection::Outward => self.pos.iter().any(|&s| c.le(s)),
        };
        if blocked {
            return Err(illegal());
        }
        let mut with = self.pos.clone();
        with.push(c);
        if SkewShape::from_cells(&with).is_err() {
            return Err(illegal());
        }
        Ok(())
    }

    fn snapshot(&self, hole: Option<Cell>) -> HoledTableau {
        HoledTableau { positions: self.pos.clone(), hole }
    }

    /// Runs one slide and returns the vacated cell.
    fn slide(&mut self, c: Cell, dir: SlideDirection, trace: Option<&mut Vec<HoledTableau>>) -> Result<Cell> {
        self.check_legal(c, dir)?;
        Ok(self.slide_unchecked(c, dir, trace))
    }

    fn slide_unchecked(&mut self, c: Cell, dir: SlideDirection, mut trace: Option<&mut Vec<HoledTableau>>) -> Cell {
        let mut hole = c;
        if let Some(t) = trace.as_deref_mut() {
            t.push(self.snapshot(Some(hole)));
        }
        loop {
            let next = match dir {
                SlideDirection::Inward => {
                    let e = self.get(hole.row, hole.col + 1);
                    let s = self.get(hole.row + 1, hole.col);
                    debug_assert!(e == 0 || e != s);
                    match (e, s) {
                        (0, 0) => None,
                        (e, 0) => Some((Cell::new(hole.row, hole.col + 1), e)),
                        (0, s) => Some((Cell::new(hole.row + 1, hole.col), s)),
                        (e, s) if e < s => Some((Cell::new(hole.row, hole.col + 1), e)),
                        (_, s) => Some((Cell::new(hole.row + 1, hole.col), s)),
                    }
                }
                SlideDirection::Outward => {
                    let w = self.get(hole.row, hole.col - 1);
                    let n = self.get(hole.row - 1, hole.col);
                    match (w, n) {
                        (0, 0) => None,
                        (w, 0) => Some((Cell::new(hole.row, hole.col - 1), w)),
                        (0, n) => Some((Cell::new(hole.row - 1, hole.col), n)),
                        (w, n) if w > n => Some((Cell::new(hole.row, hole.col - 1), w)),
                        (_, n) => Some((Cell::new(hole.row - 1, hole.col), n)),
                    }
                }
            };
            let Some((from, v)) = next else { break };
            self.put(from, 0);
            self.put(hole, v);
            hole = from;
            if let Some(t) = trace.as_deref_mut() {
                t.push(self.snapshot(Some(hole)));
            }
        }
        if let Some(t) = trace {
            t.push(self.snapshot(None));
        }
        hole
    }

    /// Same as `self.shape().inner_corners()`, read off the grid directly.
    fn inner_corners(&self) -> Vec<Cell> {
        let rows = self.grid.len();
        let mut inner = vec![0usize; rows + 1];
        let mut reach = 0;
        for i in (1..=rows).rev() {
            let row = &self.grid[i - 1];
            let first = row.iter().position(|&v| v != 0);
            let last = row.iter().rposition(|&v| v != 0);
            inner[i - 1] = match first {
                Some(j) => j,
                None => reach,
            };
            if let Some(j) = last {
                reach = reach.max(j + 1);
            }
        }
        (1..=rows)
            .filter(|&i| inner[i - 1] > inner[i])
            .map(|i| Cell::new(i, inner[i - 1]))
            .collect()
    }

    fn to_standard(&self) -> StandardTableau {
        StandardTableau::from_positions(&self.pos).expect("slides preserve standardness")
    }

    fn shape(&self) -> SkewShape {
        SkewShape::from_cells(&self.pos).expect("slides preserve skewness")
    }
}

/// Cells of `Sch(q)` in order of entry, for straight `q`.
///
/// Entries are never renumbered: only their relative order matters to the
/// slides, and frozen cells are simply emptied.
pub(crate) fn evacuation_positions(q: &StandardTableau) -> Vec<Cell> {
    let n = q.size();
    let mut b = Board::from_tableau(q);
    let mut out = vec![Cell::new(0, 0); n];
    let corner = Cell::new(1, 1);
    for m in (1..=n).rev() {
        b.grid[0][0] = 0;
        let vacated = b.slide_unchecked(corner, SlideDirection::Inward, None);
        b.grid[vacated.row - 1][vacated.col - 1] = 0;
        out[m - 1] = vacated;
    }
    out
}

/// One slide of `q` into `c`.
pub fn slide_into(q: &StandardTableau, c: Cell, dir: SlideDirection) -> Result<StandardTableau> {
    Ok(slide_vacating(q, c, dir)?.0)
}

/// One slide, also returning the vacated cell.
pub fn slide_vacating(q: &StandardTableau, c: Cell, dir: SlideDirection) -> Result<(StandardTableau, Cell)> {
    let mut b = Board::from_tableau(q);
    let v = b.slide(c, dir, None)?;
    Ok((b.to_standard(), v))
}

/// One slide with every intermediate state: the first frame has the hole at
/// `c`, the last has no hole.
pub fn slide_traced(
    q: &StandardTableau,
    c: Cell,
    dir: SlideDirection,
) -> Result<(StandardTableau, Vec<HoledTableau>)> {
    let mut b = Board::from_tableau(q);
    let mut frames = Vec::new();
    b.slide(c, dir, Some(&mut frames))?;
    Ok((b.to_standard(), frames))
}

/// Cells a slide of `q` can start from and move at least one entry:
/// inner corners (inward) followed by outer corners (outward).
pub fn slide_cells(q: &StandardTableau) -> Vec<(Cell, SlideDirection)> {
    slide_cells_of(q.shape())
}

fn slide_cells_of(shape: &SkewShape) -> Vec<(Cell, SlideDirection)> {
    let inward = shape.inner_corners().into_iter().map(|c| (c, SlideDirection::Inward));
    let outward = shape.outer_corners().into_iter().map(|c| (c, SlideDirection::Outward));
    inward.chain(outward).collect()
}

/// `⌜Q`: slides into the first inner corner (row-major) until straight.
pub fn rectify(q: &StandardTableau) -> StandardTableau {
    let mut b = Board::from_tableau(q);
    while let Some(&c) = b.inner_corners().first() {
        b.slide_unchecked(c, SlideDirection::Inward, None);
    }
    b.to_standard()
}

/// Rectification with the intermediate frames of every slide.
pub fn rectify_traced(q: &StandardTableau) -> (StandardTableau, Vec<(Cell, Vec<HoledTableau>)>) {
    let mut b = Board::from_tableau(q);
    let mut steps = Vec::new();
    while let Some(&c) = b.inner_corners().first() {
        let mut frames = Vec::new();
        b.slide_unchecked(c, SlideDirection::Inward, Some(&mut frames));
        steps.push((c, frames));
    }
    (b.to_standard(), steps)
}

/// Rectification choosing each inner corner uniformly at random.
pub fn rectify_with_rng<R: Rng + ?Sized>(q: &StandardTableau, rng: &mut R) -> StandardTableau {
    let mut b = Board::from_tableau(q);
    loop {
        let corners = b.inner_corners();
        let Some(&c) = corners.choose(rng) else { break };
        b.slide_unchecked(c, SlideDirection::Inward, None);
    }
    b.to_standard()
}

/// Checks that `y`'s cells extend `x`'s: disjoint, the union is a skew
/// shape, and no cell of `y` is weakly north-west of a cell of `x`.
pub fn check_extension(x: &StandardTableau, y: &StandardTableau) -> Result<()> {
    let xs = x.positions();
    let ys = y.positions();
    if let Some(c) = xs.iter().find(|c| ys.contains(c)) {
        return Err(Error::NotAnExtension(format!("cell {c} is in both tableaux")));
    }
    let mut union = xs.clone();
    union.extend_from_slice(&ys);
    if SkewShape::from_cells(&union).is_err() {
        return Err(Error::NotAnExtension("union is not a skew shape".into()));
    }
    for &a in &xs {
        if let Some(b) = ys.iter().find(|&&b| b.le(a)) {
            return Err(Error::NotAnExtension(format!("{b} lies north-west of {a}")));
        }
    }
    Ok(())
}

/// `(j_Y(X), [V : j_Y(X)])`: slides `x` outward into the cells of `y` in
/// increasing order of their entries. The vacated cell of the `k`-th slide
/// gets label `k`.
pub fn slide_out_through(x: &StandardTableau, y: &StandardTableau) -> Result<(StandardTableau, StandardTableau)> {
    check_extension(x, y)?;
    let mut b = Board::from_tableau(x);
    let vacated = y
        .positions()
        .into_iter()
        .map(|c| b.slide(c, SlideDirection::Outward, None))
        .collect::<Result<Vec<Cell>>>()?;
    Ok((b.to_standard(), StandardTableau::from_positions(&vacated)?))
}

/// `(j^X(Y), [V : j^X(Y)])`: slides `y` inward into the cells of `x` in
/// decreasing order of their entries. The vacated cell of the slide into
/// `X(k)` gets label `k`.
pub fn slide_in_through(x: &StandardTableau, y: &StandardTableau) -> Result<(StandardTableau, StandardTableau)> {
    check_extension(x, y)?;
    let mut b = Board::from_tableau(y);
    let xs = x.positions();
    let mut vacated = vec![Cell::new(0, 0); xs.len()];
    for (k, &c) in xs.iter().enumerate().rev() {
        vacated[k] = b.slide(c, SlideDirection::Inward, None)?;
    }
    Ok((b.to_standard(), StandardTableau::from_positions(&vacated)?))
}

/// Direction-tagged form of [`slide_out_through`] / [`slide_in_through`].
///
/// `Outward`: `order` extends `x`; returns `(j_order(x), [V : j_order(x)])`.
/// `Inward`: `x` extends `order`; returns `(j^order(x), [V : j^order(x)])`.
pub fn slide_sequence_with_vacating(
    x: &StandardTableau,
    order: &StandardTableau,
    dir: SlideDirection,
) -> Result<(StandardTableau, StandardTableau)> {
    match dir {
        SlideDirection::Outward => slide_out_through(x, order),
        SlideDirection::Inward => slide_in_through(order, x),
    }
}

/// Dual equivalence of two tableaux of the same shape.
///
/// The verdict is whether both rectify to the same straight shape. `trials`
/// random common slide sequences (seeded by `seed`) are additionally run and
/// any shape disagreement along the way makes the answer `false`.
pub fn dual_equivalent(p: &StandardTableau, q: &StandardTableau, trials: usize, seed: u64) -> Result<bool> {
    if !p.shape().same_cells(q.shape()) {
        return Err(Error::ShapeMismatch(format!("{} vs {}", p.shape(), q.shape())));
    }
    if !rectify(p).shape().same_cells(rectify(q).shape()) {
        return Ok(false);
    }
    let n = p.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut a = Board::from_tableau(p);
        let mut b = Board::from_tableau(q);
        let steps = rng.gen_range(1..=2 * n + 2);
        for _ in 0..steps {
            let options = slide_cells_of(&a.shape());
            let Some(&(c, dir)) = options.choose(&mut rng) else { break };
            a.slide(c, dir, None)?;
            b.slide(c, dir, None)?;
            let (sa, sb) = (a.shape(), b.shape());
            if !sa.same_cells(&sb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn running_example() -> StandardTableau {
        syt(". . 2 3 / . 1 5 6 / 4 7 / 8")
    }

    #[test]
    fn first_slide_of_running_example() {
        let (r, frames) = slide_traced(&running_example(), Cell::new(1, 2), SlideDirection::Inward).unwrap();
        assert_eq!(r, syt(". 1 2 3 / . 5 6 / 4 7 / 8"));
        assert_eq!(r.position_of(1).unwrap(), Cell::new(1, 2));
        assert_eq!(r.position_of(5).unwrap(), Cell::new(2, 2));
        assert_eq!(r.position_of(6).unwrap(), Cell::new(2, 3));
        let shown: Vec<String> = frames.iter().map(|f| f.to_string().replace('\n', " / ")).collect();
        assert_eq!(
            shown,
            vec![
                ". * 2 3 / . 1 5 6 / 4 7 / 8",
                ". 1 2 3 / . * 5 6 / 4 7 / 8",
                ". 1 2 3 / . 5 * 6 / 4 7 / 8",
                ". 1 2 3 / . 5 6 * / 4 7 / 8",
                ". 1 2 3 / . 5 6 / 4 7 / 8",
            ]
        );
    }

    #[test]
    fn later_slides_of_running_example() {
        let q1 = syt(". 1 2 3 / . 5 6 / 4 7 / 8");
        let q2 = slide_into(&q1, Cell::new(2, 1), SlideDirection::Inward).unwrap();
        assert_eq!(q2, syt(". 1 2 3 / 4 5 6 / 7 / 8"));
        let q3 = slide_into(&q2, Cell::new(1, 1), SlideDirection::Inward).unwrap();
        assert_eq!(q3, syt("1 2 3 / 4 5 6 / 7 / 8"));
        assert_eq!(rectify(&running_example()), q3);
    }

    #[test]
    fn board_corners_match_shape_corners() {
        for s in ["4,4,4,3/2,1,1", "3,3,1/3,1", "5,2,2/4,2", "3,1/1", "2", "3,3/3"] {
            let shape: SkewShape = s.parse().unwrap();
            for q in crate::tableau::enumerate_syt(&shape).unwrap().into_iter().take(50) {
                let b = Board::from_tableau(&q);
                assert_eq!(b.inner_corners(), shape.inner_corners(), "{s}");
                for (c, dir) in slide_cells(&q) {
                    let mut b2 = b.clone();
                    b2.slide(c, dir, None).unwrap();
                    assert_eq!(b2.inner_corners(), b2.shape().inner_corners(), "{s} after {c}");
                }
            }
        }
    }

    #[test]
    fn rectify_examples() {
        let straight = syt("1 3 / 2");
        assert_eq!(rectify(&straight), straight);
        assert_eq!(rectify(&syt(". 1 / 2 3")), syt("1 3 / 2"));
    }

    #[test]
    fn illegal_slides() {
        let q = syt("1 2 / 3");
        assert!(slide_into(&q, Cell::new(1, 1), SlideDirection::Inward).is_err());
        assert!(slide_into(&q, Cell::new(3, 3), SlideDirection::Outward).is_err());
        assert!(slide_into(&q, Cell::new(2, 3), SlideDirection::Outward).is_err());
        assert!(slide_into(&syt(". . 1"), Cell::new(1, 1), SlideDirection::Inward).is_err());
    }

    #[test]
    fn single_cell_out_and_back() {
        let q = syt("1");
        let out = slide_into(&q, Cell::new(1, 2), SlideDirection::Outward).unwrap();
        assert_eq!(out.position_of(1).unwrap(), Cell::new(1, 2));
        let back = slide_into(&out, Cell::new(1, 1), SlideDirection::Inward).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn vacating_one_step() {
        let x = syt("1");
        let y = syt(". 1");
        let (jx, v) = slide_out_through(&x, &y).unwrap();
        assert_eq!(jx, syt(". 1"));
        assert_eq!(v, syt("1"));
        let (jy, w) = slide_in_through(&x, &y).unwrap();
        assert_eq!(jy, syt("1"));
        assert_eq!(w, syt(". 1"));
        // [V : j^X(Y)] = j_Y(X)
        assert_eq!(w, jx);
    }

    #[test]
    fn vacating_with_column() {
        let x = syt("1");
        for y in [syt(". 1 / 2"), syt(". 2 / 1")] {
            let (jx, v) = slide_out_through(&x, &y).unwrap();
            let (jy, w) = slide_in_through(&x, &y).unwrap();
            assert_eq!(w, jx);
            assert_eq!(v, jy);
            assert_eq!(slide_out_through(&jy, &w).unwrap().0, y);
            assert_eq!(slide_in_through(&v, &jx).unwrap().0, x);
        }
        let (jx, v) = slide_out_through(&x, &syt(". 1 / 2")).unwrap();
        assert_eq!(jx, syt(". 1"));
        assert_eq!(v, syt("1 / 2"));
        // (2,1) is missing, so a column at (1,2),(2,2) does not extend x
        assert!(slide_out_through(&x, &syt(". 1 / . 2")).is_err());
    }

    #[test]
    fn extension_violations() {
        assert!(check_extension(&syt("1"), &syt("1")).is_err());
        assert!(check_extension(&syt(". 1"), &syt("1")).is_err());
        assert!(check_extension(&syt("1"), &syt(". . 1")).is_err());
        assert!(slide_out_through(&syt("1 2"), &syt("1")).is_err());
    }

    #[test]
    fn dual_equivalence_examples() {
        let a = syt("1 2 / 3");
        let b = syt("1 3 / 2");
        assert!(dual_equivalent(&a, &b, 20, 7).unwrap());
        assert!(dual_equivalent(&a, &a, 20, 7).unwrap());
        let s1 = syt(". 1 / 2 3");
        let s2 = syt(". 2 / 1 3");
        assert_eq!(rectify(&s1).shape().canonical(), rectify(&s2).shape().canonical());
        assert!(dual_equivalent(&s1, &s2, 50, 1).unwrap());
        // . 1 / 2 rectifies to a column, . 2 / 1 to a row
        assert!(!dual_equivalent(&syt(". 1 / 2"), &syt(". 2 / 1"), 5, 1).unwrap());
        assert!(dual_equivalent(&a, &syt("1 2 3"), 1, 1).is_err());
    }

    #[test]
    fn descents_constant_through_each_move() {
        let q = running_example();
        for (c, dir) in slide_cells(&q) {
            let (_, frames) = slide_traced(&q, c, dir).unwrap();
            for f in &frames {
                assert_eq!(f.descent_set(), q.descent_set());
            }
        }
    }
}

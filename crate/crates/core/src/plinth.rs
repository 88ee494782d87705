//! Agreement between semistandard and standard tableaux, and plinths.
//!
//! A semistandard `T` agrees with a standard `Q` when `T` is weakly
//! increasing along the order `Q(1), Q(2), …, Q(n)` and strictly increasing
//! across every descent of `Q`. Every semistandard tableau agrees with
//! exactly one standard tableau of its shape ([`order_of`]). The plinth of
//! `Q` is the cellwise-smallest semistandard tableau agreeing with `Q`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{Cell, SkewShape};
use crate::tableau::{enumerate_syt, StandardTableau, Tableau};

/// A plinth together with the standard tableau it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlinthTable {
    pub base: Tableau,
    pub witness: StandardTableau,
}

impl PlinthTable {
    pub fn volume(&self) -> u64 {
        self.base.volume()
    }
}

/// Does `t` agree with `q`?
pub fn agrees(t: &Tableau, q: &StandardTableau) -> Result<bool> {
    if !t.shape().same_cells(q.shape()) {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape(), q.shape())));
    }
    let pos = q.positions();
    Ok(pos.windows(2).all(|w| {
        let (a, b) = (t.at(w[0]), t.at(w[1]));
        if w[1].row > w[0].row {
            a < b
        } else {
            a <= b
        }
    }))
}

/// The unique standard tableau `Q^T` that `t` agrees with.
///
/// Cells are ordered by entry; cells with equal entries lie in distinct
/// columns and are ordered left to right.
pub fn order_of(t: &Tableau) -> Result<StandardTableau> {
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    let mut cells: Vec<(u32, Cell)> = t.entries().map(|(c, v)| (v, c)).collect();
    cells.sort_unstable_by_key(|&(v, c)| (v, c.col));
    let positions: Vec<Cell> = cells.into_iter().map(|(_, c)| c).collect();
    let q = StandardTableau::from_positions_in(t.shape().clone(), &positions)?;
    assert!(agrees(t, &q)?, "order_of produced a non-agreeing order for {}", t.compact());
    Ok(q)
}

/// `p(Q)`: the entry at `Q(k)` is the number of descents of `Q` below `k`.
pub fn plinth_of(q: &StandardTableau) -> Tableau {
    let pos = q.positions();
    let mut value = vec![0u32; pos.len()];
    let mut level = 0;
    for k in 1..pos.len() {
        if pos[k].row > pos[k - 1].row {
            level += 1;
        }
        value[k] = level;
    }
    Tableau::from_fn(q.shape().clone(), |c| value[q.tableau().at(c) as usize - 1])
}

/// `|p(Q)|`.
pub fn plinth_volume(q: &StandardTableau) -> u64 {
    let n = q.size() as u64;
    q.descent_set().iter().map(|&d| n - d as u64).sum()
}

/// One plinth per standard tableau of `shape`, in the enumeration order of
/// [`enumerate_syt`].
pub fn plinth_set(shape: &SkewShape) -> Result<Vec<PlinthTable>> {
    Ok(enumerate_syt(shape)?
        .into_iter()
        .map(|q| PlinthTable { base: plinth_of(&q), witness: q })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_ssyt_bounded;
    use std::collections::BTreeSet;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn agreement_examples() {
        let p = tab("0 0 0 / 1 1");
        assert!(agrees(&p, &syt("1 2 3 / 4 5")).unwrap());
        assert!(!agrees(&p, &syt("1 2 5 / 3 4")).unwrap());
        assert!(agrees(&tab("0 0 0 0"), &syt("1 2 3 4")).unwrap());
        assert!(agrees(&p, &syt("1 2 3 / 4")).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_of(&tab("0 0 1")).unwrap(), syt("1 2 3"));
        // equal entries are ordered by column: (2,1) precedes (1,2)
        assert_eq!(order_of(&tab("0 1 / 1 2")).unwrap(), syt("1 3 / 2 4"));
        assert!(order_of(&tab("0 / 0")).is_err());
    }

    #[test]
    fn minimal_ssyt_is_a_plinth() {
        let t = tab(". . 0 0 / . 0 1 1 / . 1 2 2 / 0 2 3");
        let q = order_of(&t).unwrap();
        assert_eq!(q, syt(". . 3 4 / . 2 6 7 / . 5 9 10 / 1 8 11"));
        assert_eq!(plinth_of(&q), t);
    }

    #[test]
    fn plinth_examples() {
        assert_eq!(plinth_of(&syt("1 2 3 / 4 5")), tab("0 0 0 / 1 1"));
        let q = syt("1 2 7 / 3 5 / 4 6");
        let p = plinth_of(&q);
        let along: Vec<u32> = q.positions().iter().map(|&c| p.at(c)).collect();
        assert_eq!(along, vec![0, 0, 1, 2, 2, 3, 3]);
        assert_eq!(p.volume(), 11);
        assert_eq!(plinth_volume(&q), 11);
        assert_eq!(plinth_of(&syt("1")), tab("0"));
    }

    #[test]
    fn plinth_sets() {
        let vols: BTreeSet<u64> = plinth_set(&shape("3,2")).unwrap().iter().map(|p| p.volume()).collect();
        assert_eq!(vols, BTreeSet::from([2, 3, 4, 5, 6]));
        let single = plinth_set(&shape("1")).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].base, tab("0"));
        let skew: Vec<u64> = plinth_set(&shape("2,2/1")).unwrap().iter().map(|p| p.volume()).collect();
        assert_eq!(skew.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([1, 2]));
    }

    // Brute-force oracle: the cellwise minimum over agreeing SsYT with entries ≤ n.
    fn brute_minimal(q: &StandardTableau) -> Option<Tableau> {
        let agreeing: Vec<Tableau> = enumerate_ssyt_bounded(q.shape(), q.size() as u32)
            .filter(|t| agrees(t, q).unwrap())
            .collect();
        agreeing
            .iter()
            .find(|m| agreeing.iter().all(|t| m.entries().all(|(c, v)| v <= t.at(c))))
            .cloned()
    }

    #[test]
    fn closed_form_matches_minimal_element() {
        for s in ["3,2", "2,2,1", "3,3/1", "3,2,1/2", "2,2/1", "4,1/1", "3,1,1/1,1"] {
            for q in enumerate_syt(&shape(s)).unwrap() {
                assert_eq!(Some(plinth_of(&q)), brute_minimal(&q), "{}", q.tableau().compact());
            }
        }
    }
}

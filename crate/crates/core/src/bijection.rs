//! The volume-preserving bijection between semistandard tableaux and
//! (plinth, partition) pairs, and its one-row prototype between particle
//! configurations and partitions with `n` parts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plinth::{order_of, plinth_of};
use crate::tableau::{ReadingPartition, StandardTableau, Tableau};

/// Occupation numbers `ξ_1, …, ξ_n` of `n` boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ParticleConfig {
    pub counts: Vec<u64>,
}

/// Image of a semistandard tableau: its plinth and the reading partition of
/// the residue `T - p(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SsytDecomposition {
    pub plinth: Tableau,
    pub witness: StandardTableau,
    pub diagram: ReadingPartition,
}

/// `y_1 = ξ_n`, `y_k - y_{k-1} = ξ_{n-k+1}`.
pub fn b0_forward(config: &ParticleConfig) -> ReadingPartition {
    let mut acc = 0;
    let values = config
        .counts
        .iter()
        .rev()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect();
    ReadingPartition::new(values).expect("partial sums are increasing")
}

pub fn b0_inverse(y: &ReadingPartition) -> ParticleConfig {
    let v = y.values();
    let n = v.len();
    let counts = (1..=n)
        .map(|k| {
            // ξ_k = y_{n-k+1} - y_{n-k}
            let i = n - k;
            v[i] - if i == 0 { 0 } else { v[i - 1] }
        })
        .collect();
    ParticleConfig { counts }
}

/// `T ↦ (p(Q^T), Y(T - p(Q^T)))`.
pub fn decompose(t: &Tableau) -> Result<SsytDecomposition> {
    let q = order_of(t)?;
    let plinth = plinth_of(&q);
    // residue read along Q^T is already weakly increasing
    let residue: Vec<u64> = q
        .positions()
        .iter()
        .map(|&c| {
            let (a, b) = (t.at(c), plinth.at(c));
            debug_assert!(a >= b);
            (a - b) as u64
        })
        .collect();
    let diagram = ReadingPartition::new(residue)
        .expect("residue along the agreeing order is weakly increasing");
    Ok(SsytDecomposition { plinth, witness: q, diagram })
}

/// `T = p(Q) + f_Y` with `(f_Y)_{Q(k)} = y_k`.
pub fn recompose(q: &StandardTableau, y: &ReadingPartition) -> Result<Tableau> {
    let n = q.size();
    if y.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: y.len() });
    }
    let plinth = plinth_of(q);
    let ys = y.values();
    let t = Tableau::from_fn(q.shape().clone(), |c| {
        let k = q.tableau().at(c) as usize;
        plinth.at(c) + ys[k - 1] as u32
    });
    debug_assert!(t.is_ssyt());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::SkewShape;
    use crate::tableau::enumerate_ssyt_bounded;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn rp(v: &[u64]) -> ReadingPartition {
        ReadingPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn b0_examples() {
        let cases: [(&[u64], &[u64]); 3] =
            [(&[1, 0, 2], &[2, 2, 3]), (&[0, 0, 0, 0], &[0, 0, 0, 0]), (&[0, 0, 1], &[1, 1, 1])];
        for (xi, y) in cases {
            let c = ParticleConfig { counts: xi.to_vec() };
            assert_eq!(b0_forward(&c), rp(y));
            assert_eq!(b0_inverse(&rp(y)), c);
        }
        let c = ParticleConfig { counts: vec![1, 0, 2] };
        let weighted: u64 = c.counts.iter().enumerate().map(|(k, &x)| (k as u64 + 1) * x).sum();
        assert_eq!(b0_forward(&c).sum(), weighted);
    }

    #[test]
    fn decompose_examples() {
        let p = tab("0 0 0 / 1 1");
        let d = decompose(&p).unwrap();
        assert_eq!(d.plinth, p);
        assert_eq!(d.diagram, ReadingPartition::zeros(5));

        let d = decompose(&tab("0 1 1 / 2 3")).unwrap();
        assert_eq!(d.plinth, p);
        assert_eq!(d.diagram, rp(&[0, 1, 1, 1, 2]));
        assert!(decompose(&tab("0 / 0")).is_err());
    }

    #[test]
    fn recompose_examples() {
        let row = syt("1 2 3 / 4 5");
        assert_eq!(recompose(&row, &ReadingPartition::zeros(5)).unwrap(), tab("0 0 0 / 1 1"));
        assert_eq!(recompose(&row, &rp(&[0, 1, 1, 1, 2])).unwrap(), tab("0 1 1 / 2 3"));
        // plinth of this Q is 0,0,1,1,1 along Q(1..5)
        let q = syt("1 2 5 / 3 4");
        let t = recompose(&q, &rp(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(t, tab("1 1 2 / 2 2"));
        assert!(t.is_ssyt());
        assert_eq!(decompose(&t).unwrap().witness, q);
        assert!(recompose(&q, &rp(&[0, 0])).is_err());
    }

    #[test]
    fn empty_tableau() {
        let e = Tableau::from_fn(SkewShape::default(), |_| 0);
        let d = decompose(&e).unwrap();
        assert!(d.diagram.is_empty());
        assert_eq!(recompose(&d.witness, &d.diagram).unwrap(), e);
    }

    #[test]
    fn round_trip_small() {
        for s in ["2,1", "2,2/1", "3,1/1", "2,2"] {
            let shape: SkewShape = s.parse().unwrap();
            for t in enumerate_ssyt_bounded(&shape, 3) {
                let d = decompose(&t).unwrap();
                assert_eq!(d.plinth.volume() + d.diagram.sum(), t.volume());
                assert_eq!(recompose(&d.witness, &d.diagram).unwrap(), t);
            }
        }
    }
}

//! Truncated power series in `q` with exact integer coefficients, and three
//! independent ways of computing the volume generating function of
//! semistandard tableaux of a skew shape.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plinth::plinth_set;
use crate::shape::{Cell, SkewShape};
use crate::tableau::{enumerate_syt, enumeration_limit};

/// `c_0 + c_1 q + … + c_N q^N`; coefficients above `N` are unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QSeries {
    coeffs: Vec<i128>,
    trunc: usize,
}

impl QSeries {
    pub fn zero(trunc: usize) -> Self {
        QSeries { coeffs: vec![0; trunc + 1], trunc }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(1, 0, trunc)
    }

    pub fn monomial(c: i128, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients past `trunc` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<i128>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, 0);
        QSeries { coeffs, trunc }
    }

    /// Series whose `k`-th coefficient counts the exponents equal to `k`.
    pub fn from_exponents(exps: impl IntoIterator<Item = u64>, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for e in exps {
            if e as usize <= trunc {
                s.coeffs[e as usize] += 1;
            }
        }
        s
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs[k]
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        check_trunc(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(QSeries { coeffs, trunc: self.trunc })
    }

    /// Coefficient array in JSON form, e.g. `[1,1,2]`.
    pub fn to_json_array(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn check_trunc(a: &QSeries, b: &QSeries) -> Result<()> {
    if a.trunc != b.trunc {
        return Err(Error::TruncationMismatch(a.trunc, b.trunc));
    }
    Ok(())
}

/// `1 + q + 2*q^2`; zero terms are skipped and `0` is printed for the zero series.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{mag}*q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    check_trunc(a, b)?;
    let n = a.trunc;
    let mut out = vec![0i128; n + 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs[..=n - i].iter().enumerate() {
            out[i + j] = x
                .checked_mul(y)
                .and_then(|p| out[i + j].checked_add(p))
                .expect("coefficient overflow");
        }
    }
    Ok(QSeries { coeffs: out, trunc: n })
}

/// `∏_{k=1}^{n} 1/(1 - q^k)`.
pub fn euler_product(n: usize, trunc: usize) -> QSeries {
    let mut s = QSeries::one(trunc);
    for k in 1..=n {
        // multiply by 1/(1 - q^k) in place
        for i in k..=trunc {
            s.coeffs[i] += s.coeffs[i - k];
        }
    }
    s
}

fn check_limit(shape: &SkewShape) -> Result<()> {
    let limit = enumeration_limit();
    if shape.size() > limit {
        return Err(Error::LimitExceeded { size: shape.size(), limit });
    }
    Ok(())
}

/// `Σ_Q q^{|p(Q)|}` over the standard tableaux of `shape`.
pub fn plinth_polynomial(shape: &SkewShape, trunc: usize) -> Result<QSeries> {
    check_limit(shape)?;
    Ok(QSeries::from_exponents(plinth_set(shape)?.iter().map(|p| p.volume()), trunc))
}

/// `Σ_Q q^{maj(Q)}` over the standard tableaux of `shape`.
pub fn maj_polynomial(shape: &SkewShape, trunc: usize) -> Result<QSeries> {
    check_limit(shape)?;
    Ok(QSeries::from_exponents(enumerate_syt(shape)?.iter().map(|q| q.maj()), trunc))
}

pub fn genfun_plinth(shape: &SkewShape, trunc: usize) -> Result<QSeries> {
    series_mul(&plinth_polynomial(shape, trunc)?, &euler_product(shape.size(), trunc))
}

pub fn genfun_stanley(shape: &SkewShape, trunc: usize) -> Result<QSeries> {
    series_mul(&maj_polynomial(shape, trunc)?, &euler_product(shape.size(), trunc))
}

/// Direct count of semistandard tableaux by volume, up to `q^trunc`.
pub fn genfun_bruteforce(shape: &SkewShape, trunc: usize) -> Result<QSeries> {
    check_limit(shape)?;
    let cells = shape.cells();
    let index = |c: Cell| cells.binary_search(&c).ok();
    let left: Vec<Option<usize>> =
        cells.iter().map(|c| if c.col > 1 { index(Cell::new(c.row, c.col - 1)) } else { None }).collect();
    let up: Vec<Option<usize>> =
        cells.iter().map(|c| if c.row > 1 { index(Cell::new(c.row - 1, c.col)) } else { None }).collect();

    let mut counts = vec![0i128; trunc + 1];
    let mut vals = vec![0usize; cells.len()];

    fn dfs(
        k: usize,
        vol: usize,
        vals: &mut [usize],
        left: &[Option<usize>],
        up: &[Option<usize>],
        counts: &mut [i128],
    ) {
        let trunc = counts.len() - 1;
        if k == vals.len() {
            counts[vol] += 1;
            return;
        }
        let lo = left[k].map_or(0, |i| vals[i]).max(up[k].map_or(0, |i| vals[i] + 1));
        for v in lo..=trunc {
            if vol + v > trunc {
                break;
            }
            vals[k] = v;
            dfs(k + 1, vol + v, vals, left, up, counts);
        }
    }
    dfs(0, 0, &mut vals, &left, &up, &mut counts);
    Ok(QSeries { coeffs: counts, trunc })
}

//! Closed-form lower and upper bounds on the number of colors an
//! l-infinity ball must meet, and numeric checkers for the supporting
//! inequalities.

mod lemmas;
mod table;

pub use lemmas::{
    check_antisymmetry, check_bm_lemma, check_minkowski_measure, check_sum_of_balls, smaller_ceiling, MinkowskiCheck,
};
pub use table::{table_one, BoundReport, BoundRow, RowKind};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Dimensions for which `2^d` still fits a `u64`.
pub const MAX_DIM: usize = 63;

fn check_dim(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if d > MAX_DIM {
        return Err(Error::DimensionOutOfRange(d, "1..=63"));
    }
    Ok(())
}

fn check_eps(eps: &Scalar) -> Result<()> {
    if *eps <= scalar::zero() {
        return Err(Error::InvalidDomain(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

/// `⌈((1+2ε)/(1+ε))^d⌉`, exactly.
pub fn lower_bound_main(d: usize, eps: &Scalar) -> Result<u64> {
    check_dim(d)?;
    check_eps(eps)?;
    let one = scalar::one();
    let base = (&one + eps * scalar::int(2)) / (&one + eps);
    scalar::ceil_u64(&scalar::pow(&base, d as u32))
}

/// `⌈(1+2ε/3)^d⌉` for `ε ≤ 1/2`.
pub fn lower_bound_simple(d: usize, eps: &Scalar) -> Result<u64> {
    check_dim(d)?;
    check_eps(eps)?;
    if *eps > scalar::half() {
        return Err(Error::InvalidDomain(format!(
            "the simplified bound needs eps <= 1/2, got {eps}"
        )));
    }
    let base = scalar::one() + eps * scalar::rat(2, 3);
    scalar::ceil_u64(&scalar::pow(&base, d as u32))
}

/// Every SLKKM coloring makes some ball of any positive radius meet `d+1`
/// colors.
pub fn lower_bound_classic(d: usize) -> Result<u64> {
    check_dim(d)?;
    Ok(d as u64 + 1)
}

/// Bound for colorings of a `rho`-proximate point set. The radius shrinks
/// by `rho' = min(rho, 1/2)`; once nothing is left only one color is
/// guaranteed.
pub fn sperner_lower(d: usize, eps: &Scalar, rho: &Scalar) -> Result<u64> {
    check_dim(d)?;
    check_eps(eps)?;
    if *rho < scalar::zero() {
        return Err(Error::InvalidDomain(format!("rho must be >= 0, got {rho}")));
    }
    let rho = scalar::min(rho, &scalar::half());
    if *eps <= rho {
        return Ok(1);
    }
    lower_bound_main(d, &(eps - rho))
}

/// `(n+1)^⌈d/n⌉`, valid for radii up to `1/(2n)`.
pub fn upper_bound_secluded(d: usize, n: usize) -> Result<u64> {
    check_dim(d)?;
    if n == 0 {
        return Err(Error::InvalidDomain("secluded parameter n must be >= 1".into()));
    }
    let exp = d.div_ceil(n) as u32;
    (n as u64 + 1)
        .checked_pow(exp)
        .ok_or_else(|| Error::InvalidDomain(format!("({n}+1)^{exp} overflows u64")))
}

pub fn upper_bound_trivial(d: usize) -> Result<u64> {
    check_dim(d)?;
    Ok(1u64 << d)
}

/// Best secluded-partition upper bound at radius `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BestUpper {
    pub value: u64,
    pub n: usize,
    /// Set when `eps > 1/2`, where no candidate applies and the trivial
    /// `2^d` is returned.
    pub degenerate: bool,
}

/// Minimum of `(n+1)^⌈d/n⌉` over `1 ≤ n ≤ min(d, ⌊1/(2ε)⌋)`, smallest `n`
/// on ties.
pub fn best_upper(d: usize, eps: &Scalar) -> Result<BestUpper> {
    check_dim(d)?;
    check_eps(eps)?;
    if *eps > scalar::half() {
        return Ok(BestUpper {
            value: upper_bound_trivial(d)?,
            n: 1,
            degenerate: true,
        });
    }
    let limit = scalar::floor_big(&(scalar::one() / (eps * scalar::int(2))));
    let limit = num_traits::ToPrimitive::to_usize(&limit).unwrap_or(usize::MAX).min(d);
    let mut best = BestUpper {
        value: upper_bound_secluded(d, 1)?,
        n: 1,
        degenerate: false,
    };
    for n in 2..=limit {
        let v = upper_bound_secluded(d, n)?;
        if v < best.value {
            best = BestUpper {
                value: v,
                n,
                degenerate: false,
            };
        }
    }
    Ok(best)
}

/// `2^{d-1} + 1`, the open half-ball bound.
pub fn halfball_upper(d: usize) -> Result<u64> {
    check_dim(d)?;
    Ok((1u64 << (d - 1)) + 1)
}

/// `2((2^{d-1}+1)^{1/d} - 1)`.
pub fn c_term(d: usize) -> f64 {
    let base = 2f64.powi(d as i32 - 1) + 1.0;
    2.0 * (base.powf(1.0 / d as f64) - 1.0)
}

/// Smallest value of [`c_term`] over `1..=d_max` and the `d` attaining it.
pub fn max_constant_c(d_max: usize) -> Result<(f64, usize)> {
    if d_max < 3 {
        return Err(Error::InvalidDomain(format!("d_max must be >= 3, got {d_max}")));
    }
    let mut best = (c_term(1), 1);
    for d in 2..=d_max {
        let v = c_term(d);
        if v < best.0 {
            best = (v, d);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn main_bound_values() {
        assert_eq!(lower_bound_main(2, &rat(1, 2)).unwrap(), 2);
        assert_eq!(lower_bound_main(10, &rat(1, 2)).unwrap(), 18);
        assert_eq!(lower_bound_main(3, &rat(1, 1000)).unwrap(), 2);
        assert!(lower_bound_main(0, &rat(1, 2)).is_err());
        assert!(lower_bound_main(2, &rat(0, 1)).is_err());
    }

    #[test]
    fn simple_bound_values() {
        assert_eq!(lower_bound_simple(3, &rat(1, 2)).unwrap(), 3);
        assert_eq!(lower_bound_simple(1, &rat(1, 2)).unwrap(), 2);
        assert!(lower_bound_simple(2, &rat(3, 5)).is_err());
    }

    #[test]
    fn sperner_values() {
        assert_eq!(sperner_lower(2, &rat(1, 4), &rat(1, 3)).unwrap(), 1);
        assert_eq!(sperner_lower(2, &rat(1, 2), &rat(1, 4)).unwrap(), 2);
        assert_eq!(
            sperner_lower(4, &rat(1, 2), &rat(0, 1)).unwrap(),
            lower_bound_main(4, &rat(1, 2)).unwrap()
        );
    }

    #[test]
    fn secluded_values() {
        for d in 1..=12 {
            assert_eq!(upper_bound_secluded(d, 1).unwrap(), 1 << d);
            assert_eq!(upper_bound_secluded(d, d).unwrap(), d as u64 + 1);
        }
        assert_eq!(upper_bound_secluded(4, 2).unwrap(), 9);
        assert_eq!(best_upper(4, &rat(1, 8)).unwrap().value, 5);
        assert_eq!(best_upper(4, &rat(1, 8)).unwrap().n, 4);
        assert_eq!(
            best_upper(4, &rat(1, 4)).unwrap(),
            BestUpper {
                value: 9,
                n: 2,
                degenerate: false
            }
        );
        assert!(best_upper(3, &rat(3, 4)).unwrap().degenerate);
    }

    #[test]
    fn constant_c() {
        assert_eq!(c_term(1), 2.0);
        let (c, d) = max_constant_c(50).unwrap();
        assert_eq!(d, 3);
        assert!((1.419..=1.420).contains(&c));
        assert!(max_constant_c(2).is_err());
    }
}

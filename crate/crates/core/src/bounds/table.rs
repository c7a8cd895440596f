use std::fmt;

use serde::Serialize;

use crate::bounds::{
    best_upper, halfball_upper, lower_bound_classic, lower_bound_main, lower_bound_simple, upper_bound_secluded,
    upper_bound_trivial,
};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub kind: RowKind,
    pub name: &'static str,
    pub formula: String,
    /// `None` when the formula is undefined at this radius.
    pub value: Option<u64>,
    /// Whether the bound is valid at this radius.
    pub applies: bool,
    pub regime: String,
}

/// Every known bound at `(d, eps)`, for open balls unless a row says
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: usize,
    #[serde(with = "scalar::serde_text")]
    pub eps: Scalar,
    pub lower_classic: u64,
    pub lower_main: u64,
    pub lower_simple: Option<u64>,
    pub upper_trivial: u64,
    pub upper_secluded_best: u64,
    pub secluded_n: usize,
    pub upper_halfball: Option<u64>,
    /// Best applicable lower bound equals best applicable upper bound.
    pub tight: bool,
    pub rows: Vec<BoundRow>,
}

pub fn table_one(d: usize, eps: &Scalar) -> Result<BoundReport> {
    let lower_classic = lower_bound_classic(d)?;
    let lower_main = lower_bound_main(d, eps)?;
    let small = *eps <= scalar::half();
    let lower_simple = if small { Some(lower_bound_simple(d, eps)?) } else { None };
    let upper_trivial = upper_bound_trivial(d)?;
    let best = best_upper(d, eps)?;
    let upper_halfball = if small { Some(halfball_upper(d)?) } else { None };
    let n_d_applies = eps * scalar::int(2 * d as i64) <= scalar::one();

    let row = |kind, name, formula: &str, value, applies, regime: &str| BoundRow {
        kind,
        name,
        formula: formula.to_string(),
        value,
        applies,
        regime: regime.to_string(),
    };
    let rows = vec![
        row(RowKind::Lower, "classic", "d+1", Some(lower_classic), true, "eps > 0"),
        row(
            RowKind::Lower,
            "main",
            "ceil((1+eps/(1+eps))^d)",
            Some(lower_main),
            true,
            "eps > 0",
        ),
        row(
            RowKind::Lower,
            "simple",
            "ceil((1+2eps/3)^d)",
            lower_simple,
            small,
            "eps <= 1/2",
        ),
        row(RowKind::Upper, "trivial", "2^d", Some(upper_trivial), true, "eps > 0"),
        row(
            RowKind::Upper,
            "secluded_n1",
            "(n+1)^ceil(d/n), n=1",
            Some(upper_bound_secluded(d, 1)?),
            small,
            "eps <= 1/2",
        ),
        row(
            RowKind::Upper,
            "secluded_nd",
            "(n+1)^ceil(d/n), n=d",
            Some(upper_bound_secluded(d, d)?),
            n_d_applies,
            "eps <= 1/(2d)",
        ),
        row(
            RowKind::Upper,
            "secluded_best",
            &format!("(n+1)^ceil(d/n), n={}", best.n),
            Some(best.value),
            !best.degenerate,
            "n <= min(d, 1/(2eps))",
        ),
        row(
            RowKind::Upper,
            "halfball",
            "2^(d-1)+1",
            upper_halfball,
            small,
            "open balls, eps <= 1/2",
        ),
    ];

    let applicable = |k: RowKind| {
        rows.iter()
            .filter(move |r| r.kind == k && r.applies)
            .filter_map(|r| r.value)
    };
    let lower = applicable(RowKind::Lower).max().expect("classic row always applies");
    let upper = applicable(RowKind::Upper).min().expect("trivial row always applies");
    if lower > upper {
        return Err(Error::Assertion(format!(
            "bounds at d={d}, eps={eps} are inconsistent: lower {lower} > upper {upper}"
        )));
    }
    Ok(BoundReport {
        d,
        eps: eps.clone(),
        lower_classic,
        lower_main,
        lower_simple,
        upper_trivial,
        upper_secluded_best: best.value,
        secluded_n: best.n,
        upper_halfball,
        tight: lower == upper,
        rows,
    })
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {}, eps = {}", self.d, self.eps)?;
        writeln!(
            f,
            "{:<6} {:<14} {:<26} {:>6}  {:<7} regime",
            "kind", "bound", "formula", "value", "applies"
        )?;
        for r in &self.rows {
            let kind = match r.kind {
                RowKind::Lower => "lower",
                RowKind::Upper => "upper",
            };
            let value = r.value.map_or_else(|| "-".to_string(), |v| v.to_string());
            let applies = if r.applies { "yes" } else { "no" };
            writeln!(
                f,
                "{kind:<6} {:<14} {:<26} {value:>6}  {applies:<7} {}",
                r.name, r.formula, r.regime
            )?;
        }
        write!(f, "tight: {}", if self.tight { "yes" } else { "no" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn small_radius_is_tight() {
        let r = table_one(2, &rat(1, 8)).unwrap();
        assert_eq!(r.lower_classic, 3);
        assert_eq!(r.upper_secluded_best, 3);
        assert!(r.tight);
    }

    #[test]
    fn half_radius_in_three_dimensions() {
        let r = table_one(3, &rat(1, 2)).unwrap();
        assert_eq!(r.lower_main, 3);
        assert_eq!(r.upper_trivial, 8);
        assert_eq!(r.upper_halfball, Some(5));
        assert!(!r.tight);
    }

    #[test]
    fn line_collapses() {
        for eps in [rat(1, 2), rat(1, 3), rat(1, 100)] {
            let r = table_one(1, &eps).unwrap();
            assert_eq!(r.lower_classic, 2);
            assert_eq!(r.upper_secluded_best, 2);
            assert!(r.tight);
        }
    }

    #[test]
    fn large_radius_drops_small_rows() {
        let r = table_one(2, &rat(3, 2)).unwrap();
        assert_eq!(r.lower_simple, None);
        assert_eq!(r.upper_halfball, None);
        assert_eq!(r.upper_secluded_best, 4);
    }
}

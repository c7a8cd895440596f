use crate::error::{Error, Result};
use crate::geometry::{minkowski_sum_open_box, AxisBox, BallSpec, BoxUnion, Openness, Point};
use crate::scalar::{self, Scalar};

const REL_TOL: f64 = 1e-9;

/// `(x^{1/d} + α)^d ≥ x(1+α)^d` in floating point, with relative slack
/// `1e-9 · max(1, rhs)`.
pub fn check_bm_lemma(x: f64, alpha: f64, d: f64) -> Result<bool> {
    let valid = (0.0..=1.0).contains(&x) && (0.0..f64::INFINITY).contains(&alpha) && (1.0..f64::INFINITY).contains(&d);
    if !valid {
        return Err(Error::InvalidDomain(format!(
            "need x in [0,1], alpha >= 0, d >= 1; got ({x}, {alpha}, {d})"
        )));
    }
    let lhs = (x.powf(1.0 / d) + alpha).powf(d);
    let rhs = x * (1.0 + alpha).powf(d);
    Ok(lhs >= rhs - REL_TOL * rhs.max(1.0))
}

/// A rational strictly below `alpha` with the same ceiling.
pub fn smaller_ceiling(alpha: &Scalar) -> Scalar {
    let below = alpha.ceil() - scalar::one();
    scalar::midpoint(&below, alpha)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiCheck {
    /// `m(Y + (-ε,ε)^d)`, exact.
    pub sum_measure: Scalar,
    /// `(m(Y)^{1/d} + 2ε)^d`, in floating point.
    pub bound: f64,
    pub holds: bool,
    /// For a single box `∏[s_i]`: whether the sum measure is exactly
    /// `∏(s_i + 2ε)`, and for a cube whether it also equals the bound.
    pub single_box_exact: Option<bool>,
}

/// Measure growth of a box union under the open `eps`-box.
pub fn check_minkowski_measure(u: &BoxUnion, eps: &Scalar) -> Result<MinkowskiCheck> {
    let d = u.dim();
    let ball = BallSpec::at_origin(d, eps, Openness::Open)?;
    let sum_measure = minkowski_sum_open_box(u, &ball)?.measure();
    let m = scalar::to_f64(&u.measure());
    let bound = (m.powf(1.0 / d as f64) + 2.0 * scalar::to_f64(eps)).powi(d as i32);
    let got = scalar::to_f64(&sum_measure);
    let holds = got >= bound - REL_TOL * bound.max(1.0);
    let canonical = u.canonical();
    let single_box_exact = match canonical.boxes() {
        [b] => {
            let two_eps = eps * scalar::int(2);
            let product = b
                .intervals()
                .iter()
                .fold(scalar::one(), |acc, iv| acc * (iv.length() + &two_eps));
            let mut exact = product == sum_measure;
            let sides: Vec<Scalar> = b.intervals().iter().map(|iv| iv.length()).collect();
            if sides.iter().all(|s| *s == sides[0]) {
                exact &= (got - bound).abs() <= REL_TOL * bound.max(1.0);
            }
            Some(exact)
        }
        _ => None,
    };
    Ok(MinkowskiCheck {
        sum_measure,
        bound,
        holds,
        single_box_exact,
    })
}

/// `(-a,a)^d + (-b,b)^d = (-(a+b), a+b)^d` as an exact set equality.
pub fn check_sum_of_balls(d: usize, a: &Scalar, b: &Scalar) -> Result<bool> {
    let left = BallSpec::at_origin(d, a, Openness::Open)?;
    let right = BallSpec::at_origin(d, b, Openness::Open)?;
    let sum = minkowski_sum_open_box(&BoxUnion::from_box(left), &right)?;
    let expected = BoxUnion::from_box(BallSpec::at_origin(d, &(a + b), Openness::Open)?);
    sum.set_eq(&expected)
}

/// The open `eps`-ball at `p` meets `x` exactly when `p ∈ x + (-ε,ε)^d`.
/// Both sides are evaluated independently; returns whether they agree.
pub fn check_antisymmetry(x: &BoxUnion, p: &Point, eps: &Scalar) -> Result<bool> {
    let ball = AxisBox::cube_around(p, eps, false)?;
    let meets = x.intersects_box(&ball);
    let grown = minkowski_sum_open_box(x, &BallSpec::at_origin(x.dim(), eps, Openness::Open)?)?;
    Ok(meets == grown.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Interval;
    use crate::scalar::rat;

    #[test]
    fn bm_lemma_edges() {
        assert!(check_bm_lemma(1.0, 0.7, 3.0).unwrap());
        assert!(check_bm_lemma(0.0, 0.7, 3.0).unwrap());
        assert!(check_bm_lemma(0.3, 0.2, 2.5).unwrap());
        assert!(check_bm_lemma(1.5, 0.2, 2.0).is_err());
        assert!(check_bm_lemma(0.5, -0.1, 2.0).is_err());
        assert!(check_bm_lemma(0.5, 0.1, 0.5).is_err());
    }

    #[test]
    fn smaller_ceiling_examples() {
        assert_eq!(smaller_ceiling(&rat(2, 1)), rat(3, 2));
        let g = smaller_ceiling(&rat(17, 10));
        assert!(g > rat(1, 1) && g < rat(17, 10));
        assert_eq!(g.ceil(), rat(2, 1));
        assert_eq!(smaller_ceiling(&rat(-1, 3)), rat(-2, 3));
    }

    #[test]
    fn minkowski_growth() {
        let square =
            BoxUnion::from_box(AxisBox::new(vec![Interval::closed(rat(0, 1), rat(1, 2)).unwrap(); 2]).unwrap());
        let c = check_minkowski_measure(&square, &rat(1, 4)).unwrap();
        assert_eq!(c.sum_measure, rat(1, 1));
        assert!(c.holds);
        assert_eq!(c.single_box_exact, Some(true));
    }

    #[test]
    fn ball_facts() {
        assert!(check_sum_of_balls(3, &rat(1, 3), &rat(1, 5)).unwrap());
        let x = BoxUnion::from_box(AxisBox::new(vec![Interval::closed(rat(0, 1), rat(1, 4)).unwrap()]).unwrap());
        for p in [(1, 2), (7, 20), (1, 4), (0, 1)] {
            assert!(check_antisymmetry(&x, &Point::from_ratios(&[p]), &rat(1, 10)).unwrap());
        }
    }
}

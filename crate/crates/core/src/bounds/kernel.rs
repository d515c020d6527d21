use crate::error::{Error, Result};

/// Value of the kernel `h(x, y)` together with a warning flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: f64,
    /// `t < a`: outside the region where the inequalities are stated.
    pub ratio_below_a: bool,
}

fn param(name: &'static str, value: f64, ok: bool, reason: &'static str) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason,
        })
    }
}

/// `h(x, y) = (1 + a/y)^{x-1} + (1 + y/a)^{x-1} t^x`.
///
/// Its extremum in `y` sits at `y = a/t`, where `h = (1 + t)^x`.
pub fn kernel_h(x: f64, y: f64, a: f64, t: f64) -> Result<KernelValue> {
    param("x", x, true, "must be finite")?;
    param("y", y, y > 0.0, "must be positive")?;
    param("a", a, a >= 1.0, "must be at least 1")?;
    param("t", t, t > 0.0, "must be positive")?;
    Ok(KernelValue {
        value: kernel(x, y, a, t),
        ratio_below_a: t < a,
    })
}

pub(crate) fn kernel(x: f64, y: f64, a: f64, t: f64) -> f64 {
    (1.0 + a / y).powf(x - 1.0) + (1.0 + y / a).powf(x - 1.0) * t.powf(x)
}

/// Direction of an inequality between a power and its weighted bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `power ≥ bound` (exponent ratio `x < 1`).
    PowerAtLeastBound,
    /// `power ≤ bound` (`x > 1`).
    PowerAtMostBound,
    /// `x = 1`: both sides agree.
    Equal,
}

/// Outcome of checking one instance of the weighted inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaCheck {
    /// Left side, `(1 + t)^x` or `(Σ p_i)^x`.
    pub power: f64,
    /// Right side, the weighted expression.
    pub bound: f64,
    pub relation: Relation,
    /// How far the stated relation holds; negative means violated.
    pub margin: f64,
}

impl LemmaCheck {
    fn new(x: f64, power: f64, bound: f64) -> Self {
        let (relation, margin) = if x < 1.0 {
            (Relation::PowerAtLeastBound, power - bound)
        } else if x > 1.0 {
            (Relation::PowerAtMostBound, bound - power)
        } else {
            (Relation::Equal, -(power - bound).abs())
        };
        Self {
            power,
            bound,
            relation,
            margin,
        }
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.margin >= -tol
    }
}

/// Compares `(1 + t)^x` with `h(x, s)` for `t ≥ a ≥ 1`, `s > 0`, `x ≥ 0`.
pub fn check_lemma1(x: f64, t: f64, a: f64, s: f64) -> Result<LemmaCheck> {
    param("x", x, x >= 0.0, "must be nonnegative")?;
    param("a", a, a >= 1.0, "must be at least 1")?;
    param("t", t, t >= a, "must be at least a")?;
    param("s", s, s > 0.0, "must be positive")?;
    Ok(LemmaCheck::new(x, (1.0 + t).powf(x), kernel(x, s, a, t)))
}

/// `(1 + a/s)^{x-1} Σ_i ((1 + s/a)^{x-1})^{N-i} p_i^x` for descending `p`.
pub fn lemma2_rhs(p: &[f64], x: f64, a: f64, s: f64) -> f64 {
    super::bound::weighted_sum(p, x, x, a, s)
}

/// Compares `(Σ p_i)^x` with [`lemma2_rhs`] for a chain `p_i ≥ a p_{i+1}`,
/// `x ∈ [0, 1]`.
pub fn check_lemma2(p: &[f64], x: f64, a: f64, s: f64) -> Result<LemmaCheck> {
    param("x", x, (0.0..=1.0).contains(&x), "must lie in [0, 1]")?;
    param("a", a, a >= 1.0, "must be at least 1")?;
    param("s", s, s > 0.0, "must be positive")?;
    if p.is_empty() {
        return Err(Error::PartCount {
            operation: "check_lemma2",
            expected: 1,
            got: 0,
        });
    }
    if let Some((i, &v)) = p
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
    {
        return Err(Error::InvalidMeasure {
            index: i + 1,
            value: v,
        });
    }
    super::bound::check_chain(p, 1.0, a)?;
    let total: f64 = p.iter().sum();
    let check = LemmaCheck::new(x, total.powf(x), lemma2_rhs(p, x, a, s));
    // x = 1 is an inequality here, not an identity
    Ok(LemmaCheck {
        relation: Relation::PowerAtLeastBound,
        margin: check.power - check.bound,
        ..check
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn critical_point_value() {
        for &(x, a, t) in &[
            (0.3, 1.0, 2.0),
            (0.9, 1.5, 4.0),
            (2.5, 1.2, 1.2),
            (0.0, 2.0, 7.0),
        ] {
            let h = kernel_h(x, a / t, a, t).unwrap();
            assert_abs_diff_eq!(h.value, (1.0 + t).powf(x), epsilon = 1e-12);
            assert!(!h.ratio_below_a);
        }
    }

    #[test]
    fn unit_exponent_collapses() {
        for y in [0.1, 1.0, 3.7] {
            assert_abs_diff_eq!(
                kernel_h(1.0, y, 1.3, 2.5).unwrap().value,
                3.5,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn hand_computed_value() {
        // 2^{-1/2} + 2^{-1/2} * 4^{1/2} = 3/√2
        let v = kernel_h(0.5, 1.0, 1.0, 4.0).unwrap().value;
        assert_abs_diff_eq!(v, 3.0 / 2f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn kernel_domain() {
        assert!(kernel_h(0.5, 0.0, 1.0, 2.0).is_err());
        assert!(kernel_h(0.5, -1.0, 1.0, 2.0).is_err());
        let flagged = kernel_h(0.5, 1.0, 2.0, 1.5).unwrap();
        assert!(flagged.ratio_below_a);
    }

    #[test]
    fn lemma1_directions() {
        // s = a/t here, so the two sides meet
        let mono = check_lemma1(0.5, 2.0, 1.0, 0.5).unwrap();
        assert_eq!(mono.relation, Relation::PowerAtLeastBound);
        assert!(mono.holds(1e-14));
        let strict = check_lemma1(0.5, 2.0, 1.0, 0.9).unwrap();
        assert!(strict.margin > 1e-4);
        let poly = check_lemma1(2.0, 2.0, 1.0, 0.5).unwrap();
        assert_eq!(poly.relation, Relation::PowerAtMostBound);
        assert!(poly.margin >= 0.0);
        for s in [0.01, 0.5, 1.0, 9.0] {
            let eq = check_lemma1(1.0, 2.0, 1.0, s).unwrap();
            assert_eq!(eq.relation, Relation::Equal);
            assert!(eq.holds(1e-14));
        }
    }

    #[test]
    fn lemma1_domain_errors() {
        assert!(check_lemma1(0.5, 0.5, 1.0, 0.5).is_err());
        assert!(check_lemma1(0.5, 2.0, 0.5, 0.5).is_err());
        assert!(check_lemma1(0.5, 2.0, 1.0, 0.0).is_err());
        assert!(check_lemma1(-0.5, 2.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn lemma2_small_chain() {
        let c = check_lemma2(&[4.0, 2.0, 1.0], 0.5, 1.0, 1.0).unwrap();
        // 2^{-1/2} (2^{-1}·2 + 2^{-1/2}·√2 + 1) = 3/√2
        assert_abs_diff_eq!(c.bound, 3.0 / 2f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(c.power, 7f64.sqrt(), epsilon = 1e-14);
        assert!(c.holds(0.0));
        assert!(check_lemma2(&[1.0, 2.0], 0.5, 1.0, 1.0).is_err());
        assert!(check_lemma2(&[4.0, 1.0], 1.5, 1.0, 1.0).is_err());
    }
}

use crate::error::{Error, Result};

/// Weights of the power-mean form of the monogamy relation:
/// `w_1 = (1 + s/a)^α`, `w_2 = (1 + a/s)^α`, so that
/// `w_1^{-1/α} + w_2^{-1/α} = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntroWeights {
    pub w1: f64,
    pub w2: f64,
    pub alpha: f64,
}

impl IntroWeights {
    /// `w_1^{-1/α} + w_2^{-1/α} - 1`.
    pub fn normalization_residual(&self) -> f64 {
        let inv = 1.0 / self.alpha;
        self.w1.powf(-inv) + self.w2.powf(-inv) - 1.0
    }

    /// `(w_1^{1/β}, w_2^{1/β})` with `1/β = 1/γ - 1/α`. These equal the
    /// prefactors `(1 + s/a)^{α/γ-1}` and `(1 + a/s)^{α/γ-1}`.
    pub fn prefactors(&self, gamma: f64) -> (f64, f64) {
        let inv_beta = 1.0 / gamma - 1.0 / self.alpha;
        (self.w1.powf(inv_beta), self.w2.powf(inv_beta))
    }
}

pub fn intro_weights(a: f64, s: f64, alpha: f64) -> Result<IntroWeights> {
    if !(a >= 1.0 && a.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "a",
            value: a,
            reason: "must be at least 1",
        });
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "s",
            value: s,
            reason: "must be positive",
        });
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "weights are undefined unless alpha > 0",
        });
    }
    Ok(IntroWeights {
        w1: (1.0 + s / a).powf(alpha),
        w2: (1.0 + a / s).powf(alpha),
        alpha,
    })
}

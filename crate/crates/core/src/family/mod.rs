//! The classical confocal family Q(λ): Σ x_k²/(a_k+λ) = 1.
//!
//! Through every point with non-vanishing coordinates pass N quadrics of the
//! family; their parameters u_1 < … < u_N interlace with the poles,
//! −a_1 < u_1 < −a_2 < u_2 < … < −a_N < u_N.

mod roots;

use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};

/// Semiaxes a_1 > … > a_N of the confocal family.
///
/// [`ConfocalFamily::with_zero_last`] admits a_N = 0 by translating the
/// parameter origin: internally a_k' = a_k + 1 and λ' = λ − 1, which leaves
/// every quadric unchanged. All λ and u values exchanged with a family built
/// that way are in the translated convention; see [`ConfocalFamily::offset`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfocalFamily {
    a: Vec<f64>,
    offset: f64,
}

impl ConfocalFamily {
    pub fn new(semiaxes: Vec<f64>) -> Result<Self> {
        check_semiaxes(&semiaxes, false)?;
        Ok(Self {
            a: semiaxes,
            offset: 0.0,
        })
    }

    /// Like [`new`](Self::new) but allows a_N = 0.
    pub fn with_zero_last(semiaxes: Vec<f64>) -> Result<Self> {
        check_semiaxes(&semiaxes, true)?;
        if *semiaxes.last().unwrap() > 0.0 {
            return Self::new(semiaxes);
        }
        Ok(Self {
            a: semiaxes.iter().map(|a| a + 1.0).collect(),
            offset: 1.0,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// Semiaxes in the internal convention (shifted by [`offset`](Self::offset)).
    pub fn semiaxes(&self) -> &[f64] {
        &self.a
    }

    /// The semiaxes as given by the user.
    pub fn user_semiaxes(&self) -> Vec<f64> {
        self.a.iter().map(|a| a - self.offset).collect()
    }

    /// Translation applied to the parameter origin (0 or 1).
    pub fn offset(&self) -> f64 {
        self.offset
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return domain(format!(
                "expected {} components, got {}",
                self.dim(),
                x.len()
            ));
        }
        Ok(())
    }

    fn check_lambda(&self, lambda: f64) -> Result<()> {
        if !lambda.is_finite() {
            return domain(format!("non-finite parameter λ = {lambda}"));
        }
        if let Some(a) = self.a.iter().find(|&&a| a + lambda == 0.0) {
            return domain(format!("λ = {lambda} is the pole −a = {}", -a));
        }
        Ok(())
    }

    /// Σ x_k²/(a_k+λ) − 1.
    pub fn quadric_residual(&self, lambda: f64, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        self.check_lambda(lambda)?;
        Ok(roots::pencil(&self.a, x, lambda) - 1.0)
    }

    /// The confocal coordinates (u_1, …, u_N) of a point with all x_k ≠ 0.
    pub fn coords_from_point(&self, x: &[f64]) -> Result<ConfocalCoords> {
        self.check_dim(x)?;
        if x.iter().any(|v| !v.is_finite()) {
            return domain("non-finite point");
        }
        if let Some(k) = x.iter().position(|&v| v == 0.0) {
            return Err(Error::DegeneratePoint(format!(
                "x_{} = 0: a confocal coordinate collides with the pole −a_{}",
                k + 1,
                k + 1
            )));
        }
        let u = roots::confocal_roots(&self.a, x)?;
        Ok(ConfocalCoords { u })
    }

    /// Whether −a_1 < u_1 < −a_2 < … < −a_N < u_N holds strictly.
    pub fn is_interlaced(&self, u: &[f64]) -> bool {
        u.len() == self.dim()
            && u.iter().enumerate().all(|(i, &ui)| {
                ui.is_finite()
                    && ui > -self.a[i]
                    && self.a.get(i + 1).map_or(true, |&an| ui < -an)
            })
    }

    /// Whether u lies strictly inside the i-th interlacing interval.
    pub fn in_interval(&self, i: usize, u: f64) -> bool {
        u > -self.a[i] && self.a.get(i + 1).map_or(true, |&an| u < -an)
    }

    /// The point of the open first hyperoctant with confocal coordinates `u`:
    /// x_k² = Π_i (u_i + a_k) / Π_{i≠k} (a_k − a_i).
    pub fn point_from_coords(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(u)?;
        if !self.is_interlaced(u) {
            return domain(format!("coordinates {u:?} violate interlacing"));
        }
        Ok((0..self.dim())
            .map(|k| {
                let num: f64 = u.iter().map(|ui| ui + self.a[k]).product();
                let den: f64 = (0..self.dim())
                    .filter(|&i| i != k)
                    .map(|i| self.a[k] - self.a[i])
                    .product();
                (num / den).max(0.0).sqrt()
            })
            .collect())
    }

    /// Hyperplane polar to `x` with respect to Q(λ): coefficients x_k/(a_k+λ).
    pub fn polar_hyperplane(&self, lambda: f64, x: &[f64]) -> Result<Hyperplane> {
        self.check_dim(x)?;
        self.check_lambda(lambda)?;
        Hyperplane::new(
            x.iter()
                .zip(&self.a)
                .map(|(xk, ak)| xk / (ak + lambda))
                .collect(),
        )
    }

    /// Pole of a hyperplane with respect to Q(λ): y_k = c_k (a_k+λ).
    pub fn pole_of_hyperplane(&self, lambda: f64, plane: &Hyperplane) -> Result<Vec<f64>> {
        self.check_dim(&plane.coeffs)?;
        self.check_lambda(lambda)?;
        Ok(plane
            .coeffs
            .iter()
            .zip(&self.a)
            .map(|(c, a)| c * (a + lambda))
            .collect())
    }

    /// Σ_k x_k y_k / (a_k+λ), the polarity form.
    pub fn polarity_form(&self, lambda: f64, x: &[f64], y: &[f64]) -> f64 {
        x.iter()
            .zip(y)
            .zip(&self.a)
            .map(|((xk, yk), ak)| xk * yk / (ak + lambda))
            .sum()
    }

    /// Normalizers Π_{i≠k} √|a_k − a_i| of the factorized coordinates.
    pub fn normalizers(&self) -> Vec<f64> {
        (0..self.dim())
            .map(|k| {
                (0..self.dim())
                    .filter(|&i| i != k)
                    .map(|i| (self.a[k] - self.a[i]).abs().sqrt())
                    .product()
            })
            .collect()
    }
}

fn check_semiaxes(a: &[f64], allow_zero_last: bool) -> Result<()> {
    if a.len() < 2 {
        return Err(Error::Semiaxes(format!(
            "need at least 2 semiaxes, got {}",
            a.len()
        )));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::Semiaxes("non-finite semiaxis".into()));
    }
    if a.windows(2).any(|w| !(w[0] > w[1])) {
        return Err(Error::Semiaxes(format!(
            "semiaxes must be strictly decreasing, got {a:?}"
        )));
    }
    let last = *a.last().unwrap();
    if last < 0.0 || (last == 0.0 && !allow_zero_last) {
        return Err(Error::Semiaxes(format!(
            "semiaxes must be positive, got a_N = {last}"
        )));
    }
    Ok(())
}

/// Confocal coordinates u_1 < … < u_N of a point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfocalCoords {
    u: Vec<f64>,
}

impl ConfocalCoords {
    pub fn new(fam: &ConfocalFamily, u: Vec<f64>) -> Result<Self> {
        if !fam.is_interlaced(&u) {
            return domain(format!("coordinates {u:?} violate interlacing"));
        }
        Ok(Self { u })
    }

    pub fn values(&self) -> &[f64] {
        &self.u
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.u
    }
}

impl std::ops::Deref for ConfocalCoords {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.u
    }
}

/// Affine hyperplane Σ c_k x_k = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    coeffs: Vec<f64>,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return domain("non-finite hyperplane coefficient");
        }
        if coeffs.iter().all(|&c| c == 0.0) {
            return domain("hyperplane coefficients all zero");
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Σ c_k y_k − 1; zero iff y lies on the hyperplane.
    pub fn residual(&self, y: &[f64]) -> f64 {
        self.coeffs.iter().zip(y).map(|(c, y)| c * y).sum::<f64>() - 1.0
    }
}

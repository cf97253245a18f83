//! Desk-scale numerical verification of the Killing-field norm identity
//! `2 R_{X g' X g'} = -2 f f''` on surfaces of revolution, where every
//! quantity has a closed form, plus the quadratic-envelope bound showing
//! that a positive function with f'' <= -eps on all of R is impossible.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConcavityError {
    #[error("point {t} violates the interior margin of 2*step = {margin} inside [{a}, {b}]")]
    DomainMargin { t: f64, margin: f64, a: f64, b: f64 },
    #[error("profile is not positive: f({t}) = {value}")]
    NonPositiveProfile { t: f64, value: f64 },
    #[error("domain of length {len} is shorter than 10*step = {min}")]
    DomainTooShort { len: f64, min: f64 },
    #[error("cannot parse profile {0:?}")]
    ParseProfile(String),
    #[error("sampled profile needs at least 5 uniformly spaced rows")]
    BadSample,
}

/// A profile function on a closed interval: a named closed form or a
/// uniformly sampled table.
#[derive(Clone, Debug)]
pub struct Profile {
    pub name: String,
    pub domain: (f64, f64),
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    Cos,
    Cosh,
    Exp,
    Sin,
    SinPlus(f64),
    Const(f64),
    Poly(Vec<f64>),
    Sampled { t0: f64, dt: f64, values: Vec<f64> },
}

impl Profile {
    pub fn cos() -> Profile {
        Profile {
            name: "cos".into(),
            domain: (-1.4, 1.4),
            kind: Kind::Cos,
        }
    }

    pub fn cosh() -> Profile {
        Profile {
            name: "cosh".into(),
            domain: (-1.4, 1.4),
            kind: Kind::Cosh,
        }
    }

    pub fn constant(c: f64) -> Profile {
        Profile {
            name: format!("const:{c}"),
            domain: (-1.4, 1.4),
            kind: Kind::Const(c),
        }
    }

    /// Parses a built-in name: `cos`, `cosh`, `exp`, `sin`, `sinplus:<c>`,
    /// `const:<c>`, `poly:<c0,c1,...>`.
    pub fn parse(name: &str) -> Result<Profile, ConcavityError> {
        let bad = || ConcavityError::ParseProfile(name.to_string());
        let kind = match name {
            "cos" => Kind::Cos,
            "cosh" => Kind::Cosh,
            "exp" => Kind::Exp,
            "sin" => Kind::Sin,
            _ => match name.split_once(':') {
                Some(("const", c)) => Kind::Const(c.parse().map_err(|_| bad())?),
                Some(("sinplus", c)) => Kind::SinPlus(c.parse().map_err(|_| bad())?),
                Some(("poly", cs)) => {
                    let coeffs: Result<Vec<f64>, _> =
                        cs.split(',').map(|c| c.trim().parse()).collect();
                    Kind::Poly(coeffs.map_err(|_| bad())?)
                }
                _ => return Err(bad()),
            },
        };
        Ok(Profile {
            name: name.to_string(),
            domain: (-1.4, 1.4),
            kind,
        })
    }

    /// Builds a sampled profile from (t, f(t)) rows with uniform spacing.
    pub fn from_samples(rows: &[(f64, f64)]) -> Result<Profile, ConcavityError> {
        if rows.len() < 5 {
            return Err(ConcavityError::BadSample);
        }
        let dt = rows[1].0 - rows[0].0;
        if dt <= 0.0 {
            return Err(ConcavityError::BadSample);
        }
        for w in rows.windows(2) {
            if ((w[1].0 - w[0].0) - dt).abs() > 1e-9 * dt.abs().max(1.0) {
                return Err(ConcavityError::BadSample);
            }
        }
        let t0 = rows[0].0;
        let tn = rows[rows.len() - 1].0;
        Ok(Profile {
            name: "sampled".into(),
            domain: (t0, tn),
            kind: Kind::Sampled {
                t0,
                dt,
                values: rows.iter().map(|r| r.1).collect(),
            },
        })
    }

    pub fn with_domain(mut self, a: f64, b: f64) -> Profile {
        if !matches!(self.kind, Kind::Sampled { .. }) {
            self.domain = (a, b);
        }
        self
    }

    /// Natural finite-difference step: the table spacing for sampled data.
    pub fn native_step(&self) -> Option<f64> {
        match &self.kind {
            Kind::Sampled { dt, .. } => Some(*dt),
            _ => None,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match &self.kind {
            Kind::Cos => t.cos(),
            Kind::Cosh => t.cosh(),
            Kind::Exp => t.exp(),
            Kind::Sin => t.sin(),
            Kind::SinPlus(c) => c + t.sin(),
            Kind::Const(c) => *c,
            Kind::Poly(coeffs) => coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c),
            Kind::Sampled { t0, dt, values } => {
                let idx = ((t - t0) / dt).round() as usize;
                values[idx.min(values.len() - 1)]
            }
        }
    }
}

fn second_derivative(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)
}

fn first_derivative(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (f(t + h) - f(t - h)) / (2.0 * h)
}

/// Both sides of the reduced identity at one point: the curvature side
/// `2 K f^2` with `K = -f''/f`, and the derivative side
/// `2 (f')^2 - (f^2)''`, each by central differences.
pub fn identity_sides(p: &Profile, t: f64, step: f64) -> Result<(f64, f64), ConcavityError> {
    let (a, b) = p.domain;
    if t - 2.0 * step < a || t + 2.0 * step > b {
        return Err(ConcavityError::DomainMargin {
            t,
            margin: 2.0 * step,
            a,
            b,
        });
    }
    let f = |x: f64| p.eval(x);
    let ft = f(t);
    if ft <= 0.0 {
        return Err(ConcavityError::NonPositiveProfile { t, value: ft });
    }
    let fpp = second_derivative(f, t, step);
    let gauss = -fpp / ft;
    let curvature_side = 2.0 * gauss * ft * ft;
    let fp = first_derivative(f, t, step);
    let sq_pp = second_derivative(|x| f(x) * f(x), t, step);
    let derivative_side = 2.0 * fp * fp - sq_pp;
    Ok((curvature_side, derivative_side))
}

/// Absolute difference between the two evaluations of the identity.
pub fn killing_identity_residual(p: &Profile, t: f64, step: f64) -> Result<f64, ConcavityError> {
    let (lhs, rhs) = identity_sides(p, t, step)?;
    Ok((lhs - rhs).abs())
}

/// Smallest T such that every function with f(0) = f0 > 0, f'(0) = df0 and
/// f'' <= -eps everywhere has a zero at some |t| <= T, from the quadratic
/// envelope f0 + df0 t - (eps/2) t^2.
pub fn concave_positive_horizon(f0: f64, df0: f64, eps: f64) -> f64 {
    assert!(f0 > 0.0 && eps > 0.0);
    let disc = (df0 * df0 + 2.0 * f0 * eps).sqrt();
    let t_plus = (df0 + disc) / eps;
    let t_minus = (df0 - disc) / eps;
    t_plus.min(-t_minus)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignPattern {
    AllPositive,
    AllNegative,
    Mixed,
}

/// Result of sweeping a profile's interior.
#[derive(Clone, Debug, Serialize)]
pub struct ProfileReport {
    pub profile: String,
    pub step: f64,
    pub tol: f64,
    pub points: usize,
    pub max_residual: f64,
    pub curvature_sign: SignPattern,
    pub concave_everywhere: bool,
    /// Positive curvature throughout, so the concavity conclusion applies.
    pub applicable: bool,
    pub identity_pass: bool,
    pub min_f: f64,
}

/// Sweeps the interior of the profile domain: maximum identity residual,
/// the sign pattern of the Gauss curvature -f''/f, and whether f'' < 0
/// throughout.
pub fn verify_profile(p: &Profile, step: f64, tol: f64) -> Result<ProfileReport, ConcavityError> {
    let (a, b) = p.domain;
    let len = b - a;
    if len < 10.0 * step {
        return Err(ConcavityError::DomainTooShort {
            len,
            min: 10.0 * step,
        });
    }
    let lo = a + 2.0 * step;
    let hi = b - 2.0 * step;
    let n = 1401usize;
    let mut max_residual: f64 = 0.0;
    let mut min_f = f64::INFINITY;
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut concave = true;
    for i in 0..n {
        let t = lo + (hi - lo) * (i as f64) / ((n - 1) as f64);
        let ft = p.eval(t);
        if ft <= 0.0 {
            return Err(ConcavityError::NonPositiveProfile { t, value: ft });
        }
        min_f = min_f.min(ft);
        let (lhs, rhs) = identity_sides(p, t, step)?;
        max_residual = max_residual.max((lhs - rhs).abs());
        let fpp = second_derivative(|x| p.eval(x), t, step);
        let gauss = -fpp / ft;
        if gauss > 0.0 {
            pos += 1;
        } else if gauss < 0.0 {
            neg += 1;
        }
        if fpp >= 0.0 {
            concave = false;
        }
    }
    let curvature_sign = match (pos > 0, neg > 0) {
        (true, false) => SignPattern::AllPositive,
        (false, true) => SignPattern::AllNegative,
        _ => SignPattern::Mixed,
    };
    Ok(ProfileReport {
        profile: p.name.clone(),
        step,
        tol,
        points: n,
        max_residual,
        curvature_sign,
        concave_everywhere: concave,
        applicable: curvature_sign == SignPattern::AllPositive,
        identity_pass: max_residual <= tol,
        min_f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_the_round_sphere() {
        let p = Profile::cos();
        let r = killing_identity_residual(&p, 0.3, 1e-4).unwrap();
        assert!(r <= 1e-6, "residual {r}");
        // both sides approximate 2 cos^2 t
        let (lhs, rhs) = identity_sides(&p, 0.3, 1e-4).unwrap();
        let exact = 2.0 * (0.3f64).cos().powi(2);
        assert!((lhs - exact).abs() <= 10.0 * 1e-8 * 2.0);
        assert!((rhs - exact).abs() <= 10.0 * 1e-8 * 2.0);
    }

    #[test]
    fn identity_on_flat_cylinder() {
        let p = Profile::constant(2.0);
        let (lhs, rhs) = identity_sides(&p, 0.0, 1e-4).unwrap();
        assert_eq!(lhs, 0.0);
        assert_eq!(rhs, 0.0);
    }

    #[test]
    fn identity_holds_with_negative_curvature() {
        let p = Profile::cosh();
        let r = killing_identity_residual(&p, 0.5, 1e-4).unwrap();
        assert!(r <= 1e-6, "residual {r}");
        let (lhs, _) = identity_sides(&p, 0.5, 1e-4).unwrap();
        assert!(lhs < 0.0, "cosh has negative curvature side, got {lhs}");
    }

    #[test]
    fn second_order_convergence() {
        // steps chosen where truncation dominates floating-point noise
        let p = Profile::cos();
        let r1 = killing_identity_residual(&p, 0.3, 1e-3).unwrap();
        let r2 = killing_identity_residual(&p, 0.3, 5e-4).unwrap();
        assert!(r1 / r2 >= 3.0, "ratio {}", r1 / r2);
    }

    #[test]
    fn margin_is_enforced() {
        let p = Profile::cos();
        assert!(matches!(
            killing_identity_residual(&p, 1.3999, 1e-3),
            Err(ConcavityError::DomainMargin { .. })
        ));
    }

    #[test]
    fn horizon_bounds() {
        let t = concave_positive_horizon(1.0, 0.0, 0.1);
        assert!((t - (2.0f64 / 0.1).sqrt()).abs() < 1e-12);
        let t = concave_positive_horizon(1.0, 1.0, 0.1);
        assert!(t < 1.0, "zero guaranteed on the negative side, got {t}");
        let t = concave_positive_horizon(1e-12, 0.0, 0.1);
        assert!(t < 1e-5);
    }

    #[test]
    fn horizon_sharp_on_envelope() {
        let (f0, df0, eps) = (1.0, 0.7, 0.25);
        let t = concave_positive_horizon(f0, df0, eps);
        let q = |x: f64| f0 + df0 * x - 0.5 * eps * x * x;
        // the envelope quadratic itself vanishes at distance T: bisect the
        // sign change bracketing -t (the guaranteed side here)
        let (mut lo, mut hi) = (-t - 1.0, -t + 1.0);
        assert!(q(lo) < 0.0 && q(hi) > 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if q(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((0.5 * (lo + hi) + t).abs() <= 1e-12);
    }

    #[test]
    fn sweep_reports() {
        let r = verify_profile(&Profile::cos(), 1e-4, 1e-6).unwrap();
        assert!(r.identity_pass);
        assert_eq!(r.curvature_sign, SignPattern::AllPositive);
        assert!(r.concave_everywhere);
        assert!(r.applicable);

        let mixed = Profile::parse("sinplus:2").unwrap();
        let r = verify_profile(&mixed, 1e-4, 1e-6).unwrap();
        assert_eq!(r.curvature_sign, SignPattern::Mixed);
        assert!(!r.concave_everywhere);
        assert!(!r.applicable);

        let exp = Profile::parse("exp").unwrap();
        let r = verify_profile(&exp, 1e-4, 1e-6).unwrap();
        assert_eq!(r.curvature_sign, SignPattern::AllNegative);
        assert!(!r.applicable);
        assert!(r.identity_pass);

        assert!(matches!(
            verify_profile(&Profile::constant(-1.0), 1e-4, 1e-6),
            Err(ConcavityError::NonPositiveProfile { .. })
        ));
    }

    #[test]
    fn sampled_profiles() {
        let rows: Vec<(f64, f64)> = (0..200)
            .map(|i| {
                let t = -1.0 + i as f64 * 0.01;
                (t, t.cos())
            })
            .collect();
        let p = Profile::from_samples(&rows).unwrap();
        let dt = p.native_step().unwrap();
        assert!((dt - 0.01).abs() < 1e-12);
        let r = killing_identity_residual(&p, 0.25, dt).unwrap();
        assert!(r < 1e-3, "residual {r}");
        assert!(Profile::from_samples(&rows[..3]).is_err());
    }

    #[test]
    fn tolerance_failure_is_reported() {
        let r = verify_profile(&Profile::cos(), 1e-3, 1e-12).unwrap();
        assert!(!r.identity_pass);
    }
}

//! Analytic adiabatic frames of the driven two-level and Λ systems.
//!
//! For the two-level system the frame is the familiar dressed-state pair
//! parameterized by the mixing angle. For the Λ system the instantaneous
//! eigenvalues come from the trigonometric solution of the characteristic
//! cubic, the eigenvectors from a closed-form construction, and the
//! orthogonal basis-change matrix R is decomposed into a rotation axis and
//! angle. The time derivative RᵀṘ, whose off-diagonal elements drive
//! non-adiabatic transitions, is evaluated by central finite differences.

use nalgebra::{Matrix3, SymmetricEigen, Vector2, Vector3};
use thiserror::Error;

use crate::hamiltonian::h_lambda_at;
use crate::pulse::{LambdaSystem, TimeGrid};

/// Degeneracy threshold on p relative to max(1, |a|). Because
/// p² = (Δ_P − Δ_S/2)² + ¾Δ_S² + ¾(Ω_P² + Ω_S²), p only vanishes when every
/// parameter does, so this flags the all-zero Hamiltonian and nothing else.
pub const EPS_P_REL: f64 = 1e-10;

/// Null-eigenvector threshold on |w_i| relative to the parameter scale.
pub const EPS_W_REL: f64 = 1e-12;

/// Guard band outside [−1, 1] within which the arccos argument is clamped.
const ACOS_GUARD: f64 = 1e-9;

/// Absolute threshold below which a closed-form denominator counts as zero.
/// The expressions are dimensionless with unit-normalized eigenvectors.
const EPS_DEN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("eigenvalue arccos argument {arg} outside [-1,1] beyond guard band")]
    InternalConsistency { arg: f64 },
    #[error("closed-form rotation {what} is numerically unusable (value {value})")]
    IllConditioned { what: &'static str, value: f64 },
}

/// Dressed-state frame of the two-level system at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelFrame {
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// Mixing angle ϑ = ½·atan2(Ω, Δ).
    pub mixing_angle: f64,
}

impl TwoLevelFrame {
    /// Lower adiabatic state (cos ϑ, −sin ϑ) in the bare basis.
    pub fn phi_minus(&self) -> Vector2<f64> {
        Vector2::new(self.mixing_angle.cos(), -self.mixing_angle.sin())
    }

    /// Upper adiabatic state (sin ϑ, cos ϑ).
    pub fn phi_plus(&self) -> Vector2<f64> {
        Vector2::new(self.mixing_angle.sin(), self.mixing_angle.cos())
    }
}

/// Eigenvalues λ∓ = ½[Δ ∓ √(Ω² + Δ²)] and mixing angle of the driven
/// two-level system.
pub fn two_level_frame(omega: f64, delta: f64) -> TwoLevelFrame {
    let root = omega.hypot(delta);
    TwoLevelFrame {
        lambda_minus: 0.5 * (delta - root),
        lambda_plus: 0.5 * (delta + root),
        mixing_angle: 0.5 * omega.atan2(delta),
    }
}

/// Coefficients of the characteristic cubic Z³ + aZ² + bZ + c of the
/// Λ Hamiltonian, with the auxiliary quantities p and θ of its
/// trigonometric solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// p = √(a² − 3b) ≥ 0.
    pub p: f64,
    /// θ = arccos[−(27c + 2a³ − 9ab)/(2p³)] ∈ [0, π]; 0 when degenerate.
    pub theta: f64,
    /// True when p is below threshold and the cubic has a triple root.
    pub degenerate: bool,
}

/// Cubic coefficients of the Λ system at time t.
pub fn cubic_coefficients(sys: &LambdaSystem, t: f64) -> Result<CubicCoefficients, FrameError> {
    cubic_coefficients_at(sys.pump_at(t), sys.stokes_at(t), sys.delta_p, sys.delta_s)
}

pub fn cubic_coefficients_at(
    omega_p: f64,
    omega_s: f64,
    delta_p: f64,
    delta_s: f64,
) -> Result<CubicCoefficients, FrameError> {
    let a = -(2.0 * delta_p - delta_s);
    let b = delta_p * (delta_p - delta_s) - 0.25 * (omega_p * omega_p + omega_s * omega_s);
    let c = 0.25 * (delta_p - delta_s) * omega_p * omega_p;
    let p = (a * a - 3.0 * b).max(0.0).sqrt();
    if p < EPS_P_REL * a.abs().max(1.0) {
        return Ok(CubicCoefficients {
            a,
            b,
            c,
            p,
            theta: 0.0,
            degenerate: true,
        });
    }
    let raw = -(27.0 * c + 2.0 * a.powi(3) - 9.0 * a * b) / (2.0 * p.powi(3));
    if !(-1.0 - ACOS_GUARD..=1.0 + ACOS_GUARD).contains(&raw) {
        return Err(FrameError::InternalConsistency { arg: raw });
    }
    Ok(CubicCoefficients {
        a,
        b,
        c,
        p,
        theta: raw.clamp(-1.0, 1.0).acos(),
        degenerate: false,
    })
}

/// Trigonometric roots (Z₁, Z₂, Z₃) of the characteristic cubic. The
/// assignment is always descending: Z₁ ≥ Z₂ ≥ Z₃. A degenerate input yields
/// the triple root −a/3.
pub fn lambda_eigenvalues(coeffs: &CubicCoefficients) -> [f64; 3] {
    let shift = -coeffs.a / 3.0;
    if coeffs.degenerate {
        return [shift; 3];
    }
    let scale = 2.0 / 3.0 * coeffs.p;
    let third = coeffs.theta / 3.0;
    let sixty = std::f64::consts::FRAC_PI_3;
    [
        shift + scale * third.cos(),
        shift - scale * (third + sixty).cos(),
        shift - scale * (third - sixty).cos(),
    ]
}

/// Adiabatic frame of the Λ system at one instant.
///
/// Columns of `r` are the adiabatic basis vectors Φ₁, Φ₂, Φ₃ expressed in
/// the bare basis, orthonormalized, sign-anchored to the asymptotic
/// alignment Φ₁→ψ₂, Φ₂→ψ₁, Φ₃→ψ₃, and with det r = +1 restored by flipping
/// Φ₃ when the anchored basis comes out improper.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaFrame {
    pub z: [f64; 3],
    pub r: Matrix3<f64>,
    pub axis: Vector3<f64>,
    pub alpha: f64,
    /// True when any basis vector came from the numerical eigensolver
    /// because its closed-form construction degenerated.
    pub used_fallback: bool,
}

impl LambdaFrame {
    /// Adiabatic basis vector Φ_i (i = 0, 1, 2) in the bare basis.
    pub fn basis_vector(&self, i: usize) -> Vector3<f64> {
        self.r.column(i).into()
    }

    /// Projection matrix with entries |⟨ψ_j|Φ_i⟩|² at row i, column j.
    pub fn projections(&self) -> Matrix3<f64> {
        Matrix3::from_fn(|i, j| self.r[(j, i)] * self.r[(j, i)])
    }
}

/// Unnormalized eigenvector candidate for root z:
/// w = (Ω_P(z − Δ₃), 2z(z − Δ₃), zΩ_S) with Δ₃ = Δ_P − Δ_S.
fn w_vector(z: f64, omega_p: f64, omega_s: f64, delta3: f64) -> Vector3<f64> {
    Vector3::new(omega_p * (z - delta3), 2.0 * z * (z - delta3), z * omega_s)
}

/// One-to-one assignment of numerical eigenpairs to the trig roots by
/// eigenvalue proximity.
fn matched_numerical_basis(h: Matrix3<f64>, z: &[f64; 3]) -> Matrix3<f64> {
    let eig = SymmetricEigen::new(h);
    let mut taken = [false; 3];
    let mut cols = Matrix3::zeros();
    for (i, zi) in z.iter().enumerate() {
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        for (j, used) in taken.iter().enumerate() {
            if *used {
                continue;
            }
            let d = (eig.eigenvalues[j] - zi).abs();
            if d < best_d {
                best_d = d;
                best = j;
            }
        }
        taken[best] = true;
        cols.set_column(i, &eig.eigenvectors.column(best).into_owned());
    }
    cols
}

/// Modified Gram-Schmidt in column order. The columns are analytically
/// orthogonal already; this removes floating-point drift, which matters in
/// the far pulse wings where the construction suffers cancellation.
fn orthonormalize(r: &mut Matrix3<f64>) {
    for i in 0..3 {
        let mut col = r.column(i).into_owned();
        for j in 0..i {
            let prev = r.column(j);
            col -= prev * prev.dot(&col);
        }
        let n = col.norm();
        if n > 0.0 {
            col /= n;
        }
        r.set_column(i, &col);
    }
}

/// Asymptotic alignment targets: Φ₁→ψ₂, Φ₂→ψ₁, Φ₃→ψ₃.
const ALIGN_TARGET: [usize; 3] = [1, 0, 2];

fn align_signs_boundary(r: &mut Matrix3<f64>) {
    for i in 0..3 {
        let pivot = r[(ALIGN_TARGET[i], i)];
        let flip = if pivot != 0.0 {
            pivot < 0.0
        } else {
            let col = r.column(i);
            let k = (0..3)
                .max_by(|&a, &b| col[a].abs().partial_cmp(&col[b].abs()).unwrap())
                .unwrap();
            col[k] < 0.0
        };
        if flip {
            let col = -r.column(i).into_owned();
            r.set_column(i, &col);
        }
    }
}

fn fix_determinant(r: &mut Matrix3<f64>) {
    if r.determinant() < 0.0 {
        let col = -r.column(2).into_owned();
        r.set_column(2, &col);
    }
}

/// Rotation axis and angle of the proper orthogonal matrix r, acting as
/// rᵀ on bare-basis coordinates. The axis is the unit +1 eigenvector of rᵀ,
/// found from the null space of rᵀ − I; near α = 0 the antisymmetric part
/// is used instead. Orientation follows the antisymmetric part where it is
/// resolvable, otherwise the largest axis component is made positive.
fn axis_angle(r: &Matrix3<f64>) -> (Vector3<f64>, f64) {
    let rt = r.transpose();
    let cos_alpha = ((rt.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let alpha = cos_alpha.acos();

    let antisym = Vector3::new(
        rt[(2, 1)] - rt[(1, 2)],
        rt[(0, 2)] - rt[(2, 0)],
        rt[(1, 0)] - rt[(0, 1)],
    );

    let a = rt - Matrix3::identity();
    let rows: [Vector3<f64>; 3] = [
        a.row(0).transpose(),
        a.row(1).transpose(),
        a.row(2).transpose(),
    ];
    let candidates = [
        rows[0].cross(&rows[1]),
        rows[1].cross(&rows[2]),
        rows[0].cross(&rows[2]),
    ];
    let best = candidates
        .iter()
        .max_by(|x, y| x.norm().partial_cmp(&y.norm()).unwrap())
        .unwrap();

    let mut axis = if best.norm() > 1e-14 {
        best / best.norm()
    } else if antisym.norm() > 0.0 {
        antisym / antisym.norm()
    } else {
        // r = I: any axis represents the identity rotation
        Vector3::x()
    };

    if antisym.norm() > 1e-9 {
        if axis.dot(&antisym) < 0.0 {
            axis = -axis;
        }
    } else {
        let k = (0..3)
            .max_by(|&i, &j| axis[i].abs().partial_cmp(&axis[j].abs()).unwrap())
            .unwrap();
        if axis[k] < 0.0 {
            axis = -axis;
        }
    }
    (axis, alpha)
}

/// Adiabatic frame of the Λ system at time t, sign-anchored to the
/// asymptotic alignment. Along a trajectory prefer [`FrameTrajectoryBuilder`],
/// which keeps signs continuous in time instead.
pub fn adiabatic_basis(sys: &LambdaSystem, t: f64) -> Result<LambdaFrame, FrameError> {
    adiabatic_basis_at(sys.pump_at(t), sys.stokes_at(t), sys.delta_p, sys.delta_s)
}

pub fn adiabatic_basis_at(
    omega_p: f64,
    omega_s: f64,
    delta_p: f64,
    delta_s: f64,
) -> Result<LambdaFrame, FrameError> {
    let coeffs = cubic_coefficients_at(omega_p, omega_s, delta_p, delta_s)?;
    let z = lambda_eigenvalues(&coeffs);
    let delta3 = delta_p - delta_s;
    let scale = omega_p
        .abs()
        .max(omega_s.abs())
        .max(delta_p.abs())
        .max(delta_s.abs());

    let mut r = Matrix3::zeros();
    let mut used_fallback = false;
    let mut numerical: Option<Matrix3<f64>> = None;
    for i in 0..3 {
        let w = w_vector(z[i], omega_p, omega_s, delta3);
        let n = w.norm();
        if coeffs.degenerate || n < EPS_W_REL * scale || n == 0.0 {
            used_fallback = true;
            let basis = numerical.get_or_insert_with(|| {
                matched_numerical_basis(h_lambda_at(omega_p, omega_s, delta_p, delta_s), &z)
            });
            r.set_column(i, &basis.column(i).into_owned());
        } else {
            r.set_column(i, &(w / n));
        }
    }

    orthonormalize(&mut r);
    align_signs_boundary(&mut r);
    fix_determinant(&mut r);
    let (axis, alpha) = axis_angle(&r);
    Ok(LambdaFrame {
        z,
        r,
        axis,
        alpha,
        used_fallback,
    })
}

/// Off-diagonal elements of the antisymmetric matrix RᵀṘ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingMatrix {
    pub a12: f64,
    pub a13: f64,
    pub a23: f64,
}

impl CouplingMatrix {
    /// Reconstructed full antisymmetric matrix.
    pub fn full(&self) -> Matrix3<f64> {
        Matrix3::new(
            0.0, self.a12, self.a13, //
            -self.a12, 0.0, self.a23, //
            -self.a13, -self.a23, 0.0,
        )
    }
}

fn align_to(reference: &Matrix3<f64>, r: &mut Matrix3<f64>) {
    for i in 0..3 {
        if reference.column(i).dot(&r.column(i)) < 0.0 {
            let col = -r.column(i).into_owned();
            r.set_column(i, &col);
        }
    }
}

/// Raw product RᵀṘ at time t by a fourth-order central difference of the
/// frame with step h, signs of the stencil frames fixed by continuity
/// against the frame at t. Antisymmetric with zero diagonal up to the
/// stencil truncation; kept un-symmetrized so that defect is observable.
pub fn nonadiabatic_product(
    sys: &LambdaSystem,
    t: f64,
    h_step: f64,
) -> Result<Matrix3<f64>, FrameError> {
    assert!(h_step > 0.0, "finite-difference step must be positive");
    let center = adiabatic_basis(sys, t)?.r;
    let stencil = |dt: f64| -> Result<Matrix3<f64>, FrameError> {
        let mut r = adiabatic_basis(sys, t + dt)?.r;
        align_to(&center, &mut r);
        Ok(r)
    };
    let rp2 = stencil(2.0 * h_step)?;
    let rp1 = stencil(h_step)?;
    let rm1 = stencil(-h_step)?;
    let rm2 = stencil(-2.0 * h_step)?;
    let rdot = (-rp2 + rp1 * 8.0 - rm1 * 8.0 + rm2) / (12.0 * h_step);
    Ok(center.transpose() * rdot)
}

/// Independent off-diagonal elements of RᵀṘ at time t. The default step
/// is τ/1000.
pub fn nonadiabatic_couplings(
    sys: &LambdaSystem,
    t: f64,
    h_step: f64,
) -> Result<CouplingMatrix, FrameError> {
    let a = nonadiabatic_product(sys, t, h_step)?;
    Ok(CouplingMatrix {
        a12: a[(0, 1)],
        a13: a[(0, 2)],
        a23: a[(1, 2)],
    })
}

/// Default finite-difference step for frame derivatives.
pub fn default_coupling_step(sys: &LambdaSystem) -> f64 {
    sys.max_width() / 1000.0
}

/// Components of the algebraic closed forms for the rotation axis and
/// angle, evaluated literally. Pieces whose denominators vanish or whose
/// radicands go non-positive are reported as `None`; this happens over wide
/// parameter regions, which is why [`adiabatic_basis`] extraction is the
/// authoritative route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormAxisParts {
    pub u_x: Option<f64>,
    pub u_y: Option<f64>,
    pub u_z: Option<f64>,
    pub alpha: Option<f64>,
}

/// Literal evaluation of the closed-form axis/angle expressions with
/// positive normalization factors ξ_i = 1/|w_i|. Returns the component
/// breakdown; see [`rotation_closed_forms`] for the strict variant.
pub fn rotation_closed_form_parts(
    sys: &LambdaSystem,
    t: f64,
) -> Result<ClosedFormAxisParts, FrameError> {
    let omega_p = sys.pump_at(t);
    let omega_s = sys.stokes_at(t);
    let (delta_p, delta_s) = (sys.delta_p, sys.delta_s);
    let coeffs = cubic_coefficients_at(omega_p, omega_s, delta_p, delta_s)?;
    let z = lambda_eigenvalues(&coeffs);
    let (z1, z3) = (z[0], z[2]);
    let d3 = delta_p - delta_s;

    let w1 = w_vector(z1, omega_p, omega_s, d3);
    let w3 = w_vector(z3, omega_p, omega_s, d3);
    if w1.norm() == 0.0 || w3.norm() == 0.0 {
        return Err(FrameError::IllConditioned {
            what: "eigenvector normalization",
            value: 0.0,
        });
    }
    let xi1 = 1.0 / w1.norm();
    let xi3 = 1.0 / w3.norm();

    // shared radicand pieces
    let c_ = 1.0 + 4.0 * z1 * z1 * (z1 - d3).powi(2) * xi1 * xi1 + 4.0 * z3.powi(4) * xi3 * xi3
        - 4.0 * z3 * z3 * d3 * (2.0 * z3 - d3) * xi3 * xi3;
    let d_ = z3
        * xi3
        * omega_s
        * (-2.0 - 8.0 * z1 * z1 * (z1 - z3) * (z1 - d3) * xi1 * xi1
            + z3 * (1.0 + 4.0 * z1 * z1 * (z1 - z3).powi(2) * xi1 * xi1) * xi3 * omega_s);
    let e_ = xi1
        * xi1
        * omega_p
        * omega_p
        * ((z1 - d3).powi(2) * (1.0 + 4.0 * (z1 - z3).powi(2) * (z3 - d3).powi(2) * xi3 * xi3)
            + (z1 - z3) * d3 * xi3 * omega_s * (-2.0 * (z1 - d3) + (z1 - z3) * d3 * xi3 * omega_s));
    let f_ = 2.0
        * xi1
        * omega_p
        * ((z1 - d3) * (-1.0 + 4.0 * (z1 - z3) * z3 * (z3 - d3).powi(2) * xi3 * xi3)
            + xi3
                * omega_s
                * (z1 * (z3 + d3) - 2.0 * z3 * d3 + z3 * (z3 - z1) * d3 * xi3 * omega_s));

    let a1 = 2.0 * z1 * xi1 * (z1 - d3 + z3 * (z3 - z1) * xi3 * omega_s);
    // The Ω_S cross term in this denominator carries a (Δ_S − Δ_S) factor
    // and vanishes identically.
    let b1 = -1.0 + z3 * xi3 * omega_s + xi1 * omega_p * (z1 - d3);
    let b3 = 1.0 - z3 * xi3 * omega_s + xi1 * omega_p * (-z1 + d3 + (z1 - z3) * d3 * xi3 * omega_s);
    let g1 = b3 * b3;
    let a2 = 1.0 - z3 * xi3 * omega_s;
    let b2 = xi1 * omega_p * (-z1 + d3 + (z1 - z3) * d3 * xi3 * omega_s);
    let a3 = 2.0 * (z3 - d3) * xi3 * (z3 + (z1 - z3) * (z1 - d3) * xi1 * omega_p);

    let plus_radicand = c_ + d_ + e_ + f_;
    let minus_radicand = c_ - d_ - e_ + f_;

    let u_x = (b1.abs() >= EPS_DEN && g1 >= EPS_DEN * EPS_DEN && plus_radicand / g1 > 0.0)
        .then(|| -a1 / (b1 * (plus_radicand / g1).sqrt()));
    let u_y = (minus_radicand > 0.0).then(|| (a2 + b2) / minus_radicand.sqrt());
    let u_z = (b3.abs() >= EPS_DEN && plus_radicand / g1 > 0.0)
        .then(|| a3 / (b3 * (plus_radicand / (b3 * b3)).sqrt()));
    let alpha = u_x.and_then(|ux| {
        let denom = ux * ux - 1.0;
        (denom.abs() >= EPS_DEN).then(|| {
            let arg = (ux * ux - z1 * xi1 * omega_p + d3 * xi1 * omega_p) / denom;
            arg.clamp(-1.0, 1.0).acos()
        })
    });

    Ok(ClosedFormAxisParts {
        u_x,
        u_y,
        u_z,
        alpha,
    })
}

/// Strict closed-form axis and angle: errors with `IllConditioned` unless
/// every component is usable at this instant.
pub fn rotation_closed_forms(
    sys: &LambdaSystem,
    t: f64,
) -> Result<(Vector3<f64>, f64), FrameError> {
    let parts = rotation_closed_form_parts(sys, t)?;
    let missing = |what: &'static str| FrameError::IllConditioned {
        what,
        value: f64::NAN,
    };
    let ux = parts.u_x.ok_or_else(|| missing("u_x"))?;
    let uy = parts.u_y.ok_or_else(|| missing("u_y"))?;
    let uz = parts.u_z.ok_or_else(|| missing("u_z"))?;
    let alpha = parts.alpha.ok_or_else(|| missing("alpha"))?;
    Ok((Vector3::new(ux, uy, uz), alpha))
}

/// One sample of a frame trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSample {
    pub t: f64,
    pub frame: LambdaFrame,
    pub couplings: CouplingMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameTrajectory {
    pub samples: Vec<FrameSample>,
}

/// Builds frames along a trajectory with time-continuous sign conventions.
///
/// Per-instant frame computations are pure; the builder only owns the sign
/// continuity state, so one builder serves one trajectory and distinct
/// trajectories can run in parallel.
pub struct FrameTrajectoryBuilder {
    sys: LambdaSystem,
    h_step: f64,
    prev: Option<Matrix3<f64>>,
    prev_axis: Option<Vector3<f64>>,
}

impl FrameTrajectoryBuilder {
    pub fn new(sys: LambdaSystem, h_step: Option<f64>) -> Self {
        let h = h_step.unwrap_or_else(|| default_coupling_step(&sys));
        assert!(h > 0.0, "finite-difference step must be positive");
        Self {
            sys,
            h_step: h,
            prev: None,
            prev_axis: None,
        }
    }

    /// Frame and couplings at time t, sign-fixed against the previously
    /// built sample.
    pub fn sample_at(&mut self, t: f64) -> Result<FrameSample, FrameError> {
        let mut frame = adiabatic_basis(&self.sys, t)?;
        if let Some(prev) = &self.prev {
            align_to(prev, &mut frame.r);
            fix_determinant(&mut frame.r);
            let (axis, alpha) = axis_angle(&frame.r);
            frame.axis = axis;
            frame.alpha = alpha;
        }
        if let Some(prev_axis) = &self.prev_axis {
            if prev_axis.dot(&frame.axis) < 0.0 {
                frame.axis = -frame.axis;
            }
        }

        let center = frame.r;
        let stencil = |dt: f64| -> Result<Matrix3<f64>, FrameError> {
            let mut r = adiabatic_basis(&self.sys, t + dt)?.r;
            align_to(&center, &mut r);
            Ok(r)
        };
        let rp2 = stencil(2.0 * self.h_step)?;
        let rp1 = stencil(self.h_step)?;
        let rm1 = stencil(-self.h_step)?;
        let rm2 = stencil(-2.0 * self.h_step)?;
        let rdot = (-rp2 + rp1 * 8.0 - rm1 * 8.0 + rm2) / (12.0 * self.h_step);
        let a = center.transpose() * rdot;

        self.prev = Some(center);
        self.prev_axis = Some(frame.axis);
        Ok(FrameSample {
            t,
            frame,
            couplings: CouplingMatrix {
                a12: a[(0, 1)],
                a13: a[(0, 2)],
                a23: a[(1, 2)],
            },
        })
    }
}

/// Frame trajectory over a sampling grid with continuous signs.
pub fn frame_trajectory(
    sys: &LambdaSystem,
    grid: &TimeGrid,
    h_step: Option<f64>,
) -> Result<FrameTrajectory, FrameError> {
    let mut builder = FrameTrajectoryBuilder::new(*sys, h_step);
    let samples = grid
        .times()
        .into_iter()
        .map(|t| builder.sample_at(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FrameTrajectory { samples })
}

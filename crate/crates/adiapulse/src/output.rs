//! Deterministic CSV rendering of trajectories, frame traces, and maps.
//!
//! Trajectory rows carry 17 significant digits so the stored values
//! round-trip exactly; map and frame files use the shortest
//! representation that round-trips. Comma delimiter, `.` decimal point,
//! LF line endings, fixed headers: identical inputs give byte-identical
//! files.

use std::fmt::Write as _;

use crate::frame::FrameTrajectory;
use crate::propagator::Trajectory;
use crate::sweep::MapResult;

/// f64 with 17 significant digits.
fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Shortest round-trip representation.
fn shortest(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x}")
    }
}

/// Two-level trajectory:
/// `t,re_c1,im_c1,re_c2,im_c2,P1,P2,re_rho,im_rho` with ρ = c₁c₂*.
pub fn trajectory2_csv(traj: &Trajectory<2>) -> String {
    let mut out = String::from("t,re_c1,im_c1,re_c2,im_c2,P1,P2,re_rho,im_rho\n");
    for k in 0..traj.len() {
        let c = &traj.states[k];
        let rho = traj.coherence(k);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            full(traj.times[k]),
            full(c[0].re),
            full(c[0].im),
            full(c[1].re),
            full(c[1].im),
            full(c[0].norm_sqr()),
            full(c[1].norm_sqr()),
            full(rho.re),
            full(rho.im),
        );
    }
    out
}

/// Λ trajectory:
/// `t,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,P1,P2,P3,re_rho,im_rho`
/// with ρ = c₁c₃*.
pub fn trajectory3_csv(traj: &Trajectory<3>) -> String {
    let mut out = String::from("t,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,P1,P2,P3,re_rho,im_rho\n");
    for k in 0..traj.len() {
        let c = &traj.states[k];
        let rho = traj.coherence(k);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            full(traj.times[k]),
            full(c[0].re),
            full(c[0].im),
            full(c[1].re),
            full(c[1].im),
            full(c[2].re),
            full(c[2].im),
            full(c[0].norm_sqr()),
            full(c[1].norm_sqr()),
            full(c[2].norm_sqr()),
            full(rho.re),
            full(rho.im),
        );
    }
    out
}

/// Frame trace: eigenvalues, rotation axis and angle, couplings, and the
/// nine projections proj_ij = |⟨ψ_j|Φ_i⟩|².
pub fn frame_csv(frames: &FrameTrajectory) -> String {
    let mut out = String::from(
        "t,Z1,Z2,Z3,ux,uy,uz,alpha,a12,a13,a23,\
         proj_11,proj_12,proj_13,proj_21,proj_22,proj_23,proj_31,proj_32,proj_33\n",
    );
    for s in &frames.samples {
        let f = &s.frame;
        let proj = f.projections();
        let mut row = vec![
            shortest(s.t),
            shortest(f.z[0]),
            shortest(f.z[1]),
            shortest(f.z[2]),
            shortest(f.axis[0]),
            shortest(f.axis[1]),
            shortest(f.axis[2]),
            shortest(f.alpha),
            shortest(s.couplings.a12),
            shortest(s.couplings.a13),
            shortest(s.couplings.a23),
        ];
        for i in 0..3 {
            for j in 0..3 {
                row.push(shortest(proj[(i, j)]));
            }
        }
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

/// Map in long format `x,y,value`, row-major over (y, x). Missing points
/// render as `nan`.
pub fn map_csv(map: &MapResult) -> String {
    let mut out = String::from("x,y,value\n");
    for (iy, y) in map.grid.y_values.iter().enumerate() {
        for (ix, x) in map.grid.x_values.iter().enumerate() {
            let v = map.values[iy][ix].unwrap_or(f64::NAN);
            let _ = writeln!(out, "{},{},{}", shortest(*x), shortest(*y), shortest(v));
        }
    }
    out
}

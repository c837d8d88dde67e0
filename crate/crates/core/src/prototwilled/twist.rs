use super::deformation::{induced_actions, induced_bracket_map};
use super::structure::{OmegaMaps, OmegaStructure};
use crate::error::{shape, Result};
use crate::exactlin::Matrix;
use crate::multimap::{balavoine_bracket as br, MultiMap};

/// `Ω_r` with its four components as computed by the twisting formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedOmega {
    pub structure: OmegaStructure,
    pub theta_r: MultiMap,
    pub mu_r: MultiMap,
    pub nu_r: MultiMap,
    pub eta_r: MultiMap,
}

/// `θ_r = θ̃`, `μ_r = μ + ⟦θ̃,r̃⟧`, `ν_r = ν + ⟦μ,r̃⟧ + ½⟦⟦θ̃,r̃⟧,r̃⟧`,
/// `η_r = η̃ + ⟦ν,r̃⟧ + ½⟦⟦μ,r̃⟧,r̃⟧ + ⅙⟦⟦⟦θ̃,r̃⟧,r̃⟧,r̃⟧`. Needs characteristic ≥ 5.
pub fn twist_omega(s: &OmegaStructure, r: &MultiMap) -> Result<TwistedOmega> {
    let field = s.field();
    field.require_invertible_up_to(3, "twisting uses the coefficients 1/2 and 1/6")?;
    let rt = s.lift_r(r)?;
    let half = field.ratio(1, 2)?;
    let sixth = field.ratio(1, 6)?;
    let (t, mu, nu, eta) = (s.theta_tilde(), s.mu(), s.nu(), s.eta_tilde());

    let t_r = br(t, &rt)?;
    let t_rr = br(&t_r, &rt)?;
    let t_rrr = br(&t_rr, &rt)?;
    let mu_r1 = br(mu, &rt)?;
    let mu_rr = br(&mu_r1, &rt)?;

    let theta_r = t.clone();
    let mu_r = mu.add(&t_r)?;
    let mut nu_r = nu.add(&mu_r1)?;
    nu_r.add_scaled(&half, &t_rr)?;
    let mut eta_r = eta.add(&br(nu, &rt)?)?;
    eta_r.add_scaled(&half, &mu_rr)?;
    eta_r.add_scaled(&sixth, &t_rrr)?;

    let mut total = theta_r.add(&mu_r)?;
    total.add_assign(&nu_r)?;
    total.add_assign(&eta_r)?;
    Ok(TwistedOmega {
        structure: OmegaStructure::from_omega(*s.space(), &total)?,
        theta_r,
        mu_r,
        nu_r,
        eta_r,
    })
}

/// Component maps of `Ω_r` for a deformation map `r`, read off the block formulas
/// `[(x,0),(y,0)]_r = ([x,y] − r θ(x,y), θ(x,y))`, `[(0,u),(0,v)]_r = (0, [u,v]_r)`,
/// `[(x,0),(0,u)]_r = (ψR_r(x,u), ρL(x,u) + θ(x, r u))` and
/// `[(0,u),(x,0)]_r = (ψL_r(u,x), ρR(u,x) + θ(r u, x))`.
pub fn block_formula_maps(s: &OmegaStructure, r: &MultiMap) -> Result<OmegaMaps> {
    let m = s.maps();
    let (psi_l, psi_r) = induced_actions(s, r)?;
    Ok(OmegaMaps {
        bracket_g: m.bracket_g.sub(&m.theta.then(r)?)?,
        bracket_h: induced_bracket_map(s, r)?,
        rho_l: m.rho_l.add(&m.theta.precompose(1, r)?)?,
        rho_r: m.rho_r.add(&m.theta.precompose(0, r)?)?,
        psi_l,
        psi_r,
        theta: m.theta.clone(),
        eta: MultiMap::zeros(s.field(), m.eta.inputs(), m.eta.output())?,
    })
}

/// Transport of `Ω` along an invertible `A` of `𝒢`: `Ω′(X,Y) = A⁻¹ Ω(AX, AY)`.
/// `None` when `A` is singular.
pub fn transport(s: &OmegaStructure, a: &Matrix) -> Result<Option<OmegaStructure>> {
    let n = s.space().dim();
    if a.rows() != n || a.cols() != n {
        return Err(shape(format!("transport needs a {n}x{n} matrix")));
    }
    let Some(inv) = a.inverse()? else {
        return Ok(None);
    };
    let lin = MultiMap::from_matrix(a);
    let lin_inv = MultiMap::from_matrix(&inv);
    let moved = s
        .omega()
        .precompose(0, &lin)?
        .precompose(1, &lin)?
        .then(&lin_inv)?;
    OmegaStructure::from_omega(*s.space(), &moved).map(Some)
}

/// The automorphism `(x, u) ↦ (x + r u, u)` of `𝒢` as a matrix.
pub fn shear(s: &OmegaStructure, r: &MultiMap) -> Result<Matrix> {
    let sp = s.space();
    let rm = r.to_matrix()?;
    let mut a = Matrix::identity(sp.field(), sp.dim());
    for i in 0..sp.dim_g() {
        for j in 0..sp.dim_h() {
            a.set(i, sp.dim_g() + j, rm.get(i, j).clone());
        }
    }
    Ok(a)
}

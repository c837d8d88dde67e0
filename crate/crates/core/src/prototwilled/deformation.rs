use super::structure::OmegaStructure;
use crate::error::{shape, Error, Result};
use crate::exactlin::{rank, Matrix};
use crate::leibniz::{
    cohomology_dimensions, lp_coboundary, CohomologyDims, LeibnizAlgebra, Representation,
};
use crate::multimap::{MultiIndex, MultiMap};

fn check_r(s: &OmegaStructure, r: &MultiMap) -> Result<()> {
    let sp = s.space();
    if r.field() != sp.field() {
        return Err(Error::FieldMismatch(format!(
            "map over {} for a structure over {}",
            r.field(),
            sp.field()
        )));
    }
    if r.inputs() != [sp.dim_h()] || r.output() != sp.dim_g() {
        return Err(shape(format!(
            "r must be a map 𝔥→𝔤 of shape [{}]->{}, got {:?}->{}",
            sp.dim_h(),
            sp.dim_g(),
            r.inputs(),
            r.output()
        )));
    }
    Ok(())
}

/// `(u,v) ↦ m(r u, r v)` etc.: substitutes `r` into the listed slots.
fn sub_r(m: &MultiMap, r: &MultiMap, slots: &[usize]) -> Result<MultiMap> {
    let mut out = m.clone();
    for &k in slots {
        out = out.precompose(k, r)?;
    }
    Ok(out)
}

/// `[u,v]_r = [u,v]_𝔥 + ρL(r u, v) + ρR(u, r v) + θ(r u, r v)`, for any linear `r`.
pub fn induced_bracket_map(s: &OmegaStructure, r: &MultiMap) -> Result<MultiMap> {
    check_r(s, r)?;
    let m = s.maps();
    let mut out = m.bracket_h.clone();
    out.add_assign(&sub_r(&m.rho_l, r, &[0])?)?;
    out.add_assign(&sub_r(&m.rho_r, r, &[1])?)?;
    out.add_assign(&sub_r(&m.theta, r, &[0, 1])?)?;
    Ok(out)
}

/// `ψL_r(u,x) = ψL(u,x) + [r u, x] − r(ρR(u,x) + θ(r u, x))` and
/// `ψR_r(x,u) = ψR(x,u) + [x, r u] − r(ρL(x,u) + θ(x, r u))`, for any linear `r`.
pub fn induced_actions(s: &OmegaStructure, r: &MultiMap) -> Result<(MultiMap, MultiMap)> {
    check_r(s, r)?;
    let m = s.maps();
    let mut left = m.psi_l.add(&sub_r(&m.bracket_g, r, &[0])?)?;
    let inner = m.rho_r.add(&sub_r(&m.theta, r, &[0])?)?;
    left = left.sub(&inner.then(r)?)?;
    let mut right = m.psi_r.add(&sub_r(&m.bracket_g, r, &[1])?)?;
    let inner = m.rho_l.add(&sub_r(&m.theta, r, &[1])?)?;
    right = right.sub(&inner.then(r)?)?;
    Ok((left, right))
}

/// `[r u, r v] + ψR(r u, v) + ψL(u, r v) + η(u,v) − r([u,v]_r)`, a map `𝔥⊗𝔥 → 𝔤`.
pub fn deformation_residual(s: &OmegaStructure, r: &MultiMap) -> Result<MultiMap> {
    check_r(s, r)?;
    let m = s.maps();
    let mut lhs = sub_r(&m.bracket_g, r, &[0, 1])?;
    lhs.add_assign(&sub_r(&m.psi_r, r, &[0])?)?;
    lhs.add_assign(&sub_r(&m.psi_l, r, &[1])?)?;
    lhs.add_assign(&m.eta)?;
    lhs.sub(&induced_bracket_map(s, r)?.then(r)?)
}

/// True when the graph `{(r u, u)}` is closed under `Ω`.
pub fn graph_closed(s: &OmegaStructure, r: &MultiMap) -> Result<bool> {
    check_r(s, r)?;
    let sp = s.space();
    let field = sp.field();
    let gens: Vec<_> = (0..sp.dim_h())
        .map(|i| {
            let mut u = vec![field.zero(); sp.dim_h()];
            u[i] = field.one();
            let x = r.eval(&[u.clone()]).expect("shape checked");
            sp.pair(&x, &u).expect("shape checked")
        })
        .collect();
    let base = Matrix::from_columns(field, sp.dim(), &gens)?;
    let mut cols = gens.clone();
    for (a, b) in MultiIndex::new(&[gens.len(), gens.len()]).map(|p| (p[0], p[1])) {
        cols.push(s.omega().eval(&[gens[a].clone(), gens[b].clone()])?);
    }
    let all = Matrix::from_columns(field, sp.dim(), &cols)?;
    Ok(rank(&all) == rank(&base))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub is_deformation_map: bool,
    pub residual: MultiMap,
    pub graph_closed: bool,
}

/// Evaluates the defining identity and, independently, graph closure.
pub fn is_deformation_map(s: &OmegaStructure, r: &MultiMap) -> Result<DeformationReport> {
    let residual = deformation_residual(s, r)?;
    Ok(DeformationReport {
        is_deformation_map: residual.is_zero(),
        graph_closed: graph_closed(s, r)?,
        residual,
    })
}

fn require_deformation_map(s: &OmegaStructure, r: &MultiMap) -> Result<()> {
    if deformation_residual(s, r)?.is_zero() {
        Ok(())
    } else {
        Err(Error::NotADeformationMap)
    }
}

/// The Leibniz algebra `𝔥_r`.
pub fn induced_bracket(s: &OmegaStructure, r: &MultiMap) -> Result<LeibnizAlgebra> {
    require_deformation_map(s, r)?;
    LeibnizAlgebra::new(induced_bracket_map(s, r)?)
}

/// The representation `(𝔤, ψL_r, ψR_r)` of `𝔥_r`.
pub fn induced_representation(s: &OmegaStructure, r: &MultiMap) -> Result<Representation> {
    require_deformation_map(s, r)?;
    let (l, rt) = induced_actions(s, r)?;
    Representation::new(l, rt)
}

/// `δ^r`: the Leibniz coboundary of `𝔥_r` with coefficients in `(𝔤, ψL_r, ψR_r)`.
pub fn deformation_coboundary(s: &OmegaStructure, r: &MultiMap, f: &MultiMap) -> Result<MultiMap> {
    let alg = induced_bracket(s, r)?;
    let rep = induced_representation(s, r)?;
    lp_coboundary(f, &alg, &rep)
}

pub fn deformation_cohomology(
    s: &OmegaStructure,
    r: &MultiMap,
    max_degree: usize,
) -> Result<Vec<CohomologyDims>> {
    let alg = induced_bracket(s, r)?;
    let rep = induced_representation(s, r)?;
    cohomology_dimensions(&alg, &rep, max_degree)
}

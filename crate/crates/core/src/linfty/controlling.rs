use super::algebra::{CurvedLInfty, Provenance, Twisted};
use super::element::{lift_a, GradedElement};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::multimap::{nested_bracket, MultiMap};
use crate::prototwilled::{check_proto_twilled, OmegaStructure};

/// Curved L∞ structure on `𝔞 = ⊕ Hom(𝔥^{⊗n+1}, 𝔤)`:
/// `l₀ = η̃`, `l₁(f) = ⟦ν,f⟧`, `l₂(f,g) = ⟦⟦μ,f⟧,g⟧`, `l₃(f,g,h) = ⟦⟦⟦θ̃,f⟧,g⟧,h⟧`.
#[derive(Clone, Debug)]
pub struct ControllingAlgebra {
    omega: OmegaStructure,
}

impl ControllingAlgebra {
    pub fn new(omega: OmegaStructure) -> Result<Self> {
        if !check_proto_twilled(&omega)?.holds {
            return Err(Error::InvalidOmega);
        }
        Ok(ControllingAlgebra { omega })
    }

    pub fn omega(&self) -> &OmegaStructure {
        &self.omega
    }

    /// `r ∈ Hom(𝔥, 𝔤)` as a degree-0 element.
    pub fn element(&self, f: &MultiMap) -> Result<GradedElement> {
        Ok(GradedElement::base(lift_a(self.omega.space(), f)?))
    }
}

pub fn controlling_algebra(omega: &OmegaStructure) -> Result<ControllingAlgebra> {
    ControllingAlgebra::new(omega.clone())
}

fn base_parts<'a>(args: &[&'a GradedElement]) -> Result<Option<Vec<&'a MultiMap>>> {
    let mut out = Vec::with_capacity(args.len());
    for a in args {
        if a.shifted_part().is_some_and(|m| !m.is_zero()) {
            return Err(Error::OutsideSubalgebra(
                "the controlling algebra lives on 𝔞 only".into(),
            ));
        }
        match a.base_part() {
            Some(m) if !m.is_zero() => out.push(m),
            _ => return Ok(None),
        }
    }
    Ok(Some(out))
}

impl CurvedLInfty for ControllingAlgebra {
    fn field(&self) -> Field {
        self.omega.field()
    }

    fn truncation(&self) -> usize {
        3
    }

    fn provenance(&self) -> Provenance {
        Provenance::Controlling
    }

    fn curvature(&self) -> Result<GradedElement> {
        Ok(GradedElement::base(self.omega.eta_tilde().clone()))
    }

    fn bracket(&self, args: &[&GradedElement]) -> Result<GradedElement> {
        let degree = args.iter().map(|a| a.degree()).sum::<i64>() + 1;
        let head = match args.len() {
            1 => self.omega.nu(),
            2 => self.omega.mu(),
            3 => self.omega.theta_tilde(),
            _ => return Ok(GradedElement::zero(degree)),
        };
        let Some(parts) = base_parts(args)? else {
            return Ok(GradedElement::zero(degree));
        };
        Ok(GradedElement::base(nested_bracket(head, &parts)?))
    }
}

/// The governing algebra of a deformation map: the twist of the controlling algebra by `r`.
pub fn governing_algebra(
    omega: &OmegaStructure,
    r: &MultiMap,
) -> Result<Twisted<ControllingAlgebra>> {
    let c = controlling_algebra(omega)?;
    let alpha = c.element(r)?;
    Twisted::new(c, alpha)
}

/// Closed form `l₁^r(f) = ⟦ν,f⟧ + ⟦⟦μ,r̃⟧,f⟧ + ½⟦⟦⟦θ̃,r̃⟧,r̃⟧,f⟧` on lifted `f`.
pub fn governing_l1(omega: &OmegaStructure, r: &MultiMap, f: &MultiMap) -> Result<MultiMap> {
    let field = omega.field();
    field.require_invertible_up_to(2, "the governing differential divides by 2")?;
    let rt = omega.lift_r(r)?;
    let mut out = nested_bracket(omega.nu(), &[f])?;
    out.add_assign(&nested_bracket(omega.mu(), &[&rt, f])?)?;
    out.add_scaled(
        &field.ratio(1, 2)?,
        &nested_bracket(omega.theta_tilde(), &[&rt, &rt, f])?,
    )?;
    Ok(out)
}

/// Closed form `l₂^r(f,g) = ⟦⟦μ,f⟧,g⟧ + ⟦⟦⟦θ̃,r̃⟧,f⟧,g⟧` on lifted `f, g`.
pub fn governing_l2(
    omega: &OmegaStructure,
    r: &MultiMap,
    f: &MultiMap,
    g: &MultiMap,
) -> Result<MultiMap> {
    let rt = omega.lift_r(r)?;
    let mut out = nested_bracket(omega.mu(), &[f, g])?;
    out.add_assign(&nested_bracket(omega.theta_tilde(), &[&rt, f, g])?)?;
    Ok(out)
}

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};
use crate::multimap::{horizontal_lift, restrict, BlockMap, MultiMap, Part, SplitSpace};

/// Homogeneous element `(s⁻¹F, f)` of `s⁻¹𝔅 ⊕ 𝔞`.
///
/// `F ∈ Hom(𝒢^{⊗n+1}, 𝒢)` has degree `n` in `𝔅` and `n − 1` after desuspension;
/// `f ∈ 𝔞` is stored lifted to `𝒢` and has degree `arity − 1`. `None` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    degree: i64,
    shifted: Option<MultiMap>,
    base: Option<MultiMap>,
}

impl GradedElement {
    pub fn zero(degree: i64) -> Self {
        GradedElement {
            degree,
            shifted: None,
            base: None,
        }
    }

    /// `(0, f)` with `f` a map on `𝒢` of arity `degree + 1`.
    pub fn base(f: MultiMap) -> Self {
        GradedElement {
            degree: f.arity() as i64 - 1,
            shifted: None,
            base: Some(f),
        }
    }

    /// `(s⁻¹F, 0)`, of degree `arity(F) − 2`.
    pub fn shifted(f: MultiMap) -> Self {
        GradedElement {
            degree: f.arity() as i64 - 2,
            shifted: Some(f),
            base: None,
        }
    }

    pub fn pair(shifted: MultiMap, base: MultiMap) -> Result<Self> {
        let d = shifted.arity() as i64 - 2;
        if base.arity() as i64 - 1 != d {
            return Err(Error::Degree(format!(
                "s⁻¹F has degree {d} but f has degree {}",
                base.arity() as i64 - 1
            )));
        }
        Ok(GradedElement {
            degree: d,
            shifted: Some(shifted),
            base: Some(base),
        })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn shifted_part(&self) -> Option<&MultiMap> {
        self.shifted.as_ref()
    }

    pub fn base_part(&self) -> Option<&MultiMap> {
        self.base.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.shifted.as_ref().is_none_or(MultiMap::is_zero)
            && self.base.as_ref().is_none_or(MultiMap::is_zero)
    }

    /// `self += c · other`; degrees must agree.
    pub fn add_scaled(&mut self, c: &Scalar, other: &GradedElement) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::Degree(format!(
                "adding degree {} to degree {}",
                other.degree, self.degree
            )));
        }
        fn merge(slot: &mut Option<MultiMap>, c: &Scalar, x: &Option<MultiMap>) -> Result<()> {
            if let Some(x) = x {
                match slot {
                    Some(s) => s.add_scaled(c, x)?,
                    None => *slot = Some(x.scale(c)),
                }
            }
            Ok(())
        }
        merge(&mut self.shifted, c, &other.shifted)?;
        merge(&mut self.base, c, &other.base)
    }

    pub fn scale(&self, c: &Scalar) -> GradedElement {
        GradedElement {
            degree: self.degree,
            shifted: self.shifted.as_ref().map(|m| m.scale(c)),
            base: self.base.as_ref().map(|m| m.scale(c)),
        }
    }

    /// Splits into its nonzero homogeneous parts `(s⁻¹F, 0)` and `(0, f)`.
    pub(crate) fn parts(&self) -> (Option<&MultiMap>, Option<&MultiMap>) {
        (
            self.shifted.as_ref().filter(|m| !m.is_zero()),
            self.base.as_ref().filter(|m| !m.is_zero()),
        )
    }

    /// Field of any stored part.
    pub fn field(&self) -> Option<Field> {
        self.shifted
            .as_ref()
            .or(self.base.as_ref())
            .map(MultiMap::field)
    }
}

/// Lift of `f: 𝔥^{⊗n} → 𝔤` to an element of `𝔞` on `𝒢`.
pub fn lift_a(space: &SplitSpace, f: &MultiMap) -> Result<MultiMap> {
    let block = BlockMap::new(space, vec![Part::H; f.arity()], Part::G, f.clone())?;
    horizontal_lift(space, &block)
}

/// The `𝔥^{⊗n} → 𝔤` block of a map on `𝒢`.
pub fn restrict_a(space: &SplitSpace, f: &MultiMap) -> Result<MultiMap> {
    Ok(restrict(space, f, &vec![Part::H; f.arity()], Part::G)?.map)
}

/// Projection `P: 𝔅 → 𝔞` onto the `C^{−1|n+1}` component.
pub fn project_a(space: &SplitSpace, f: &MultiMap) -> Result<MultiMap> {
    lift_a(space, &restrict_a(space, f)?)
}

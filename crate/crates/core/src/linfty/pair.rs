use super::algebra::{CurvedLInfty, Provenance, Twisted};
use super::element::{lift_a, project_a, GradedElement};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::multimap::{balavoine_bracket, nested_bracket, MultiMap, SplitSpace, Subspace};

/// Curved L∞ structure on `s⁻¹𝔅′ ⊕ 𝔞` (with `Δ = 0`) whose degree-0 Maurer-Cartan
/// elements are pairs `(Ω, r)` of a structure in `𝔅′` and a deformation map of it:
///
/// - `l̃₁(s⁻¹F, f) = (0, P F)`
/// - `l̃₂((s⁻¹F,0),(s⁻¹G,0)) = ((−1)^{|F|} s⁻¹⟦F,G⟧, 0)`
/// - `l̃_k((s⁻¹F,0),(0,f₁),…,(0,f_{k−1})) = (0, P⟦⋯⟦F,f₁⟧⋯,f_{k−1}⟧)`
///
/// extended by graded symmetry; every other combination vanishes.
#[derive(Clone, Debug)]
pub struct PairAlgebra {
    space: SplitSpace,
    subalgebra: Subspace,
    truncation: usize,
}

impl PairAlgebra {
    /// `subalgebra` is one of `Full`, `BPrime`, `BDoublePrime`, `M`; `truncation ≥ 4`.
    pub fn new(space: SplitSpace, subalgebra: Subspace, truncation: usize) -> Result<Self> {
        if !matches!(
            subalgebra,
            Subspace::Full | Subspace::BPrime | Subspace::BDoublePrime | Subspace::M
        ) {
            return Err(Error::OutsideSubalgebra(format!(
                "{subalgebra:?} is not a supported 𝔅′"
            )));
        }
        if truncation < 4 {
            return Err(Error::Degree(format!(
                "degree-0 pairs need l̃₁…l̃₄, truncation {truncation} is too small"
            )));
        }
        Ok(PairAlgebra {
            space,
            subalgebra,
            truncation,
        })
    }

    pub fn space(&self) -> &SplitSpace {
        &self.space
    }

    pub fn subalgebra(&self) -> Subspace {
        self.subalgebra
    }

    /// `(s⁻¹Ω, r)` as a degree-0 element, `r: 𝔥 → 𝔤`.
    pub fn element(&self, omega: &MultiMap, r: &MultiMap) -> Result<GradedElement> {
        GradedElement::pair(omega.clone(), lift_a(&self.space, r)?)
    }

    fn check_shifted(&self, f: &MultiMap) -> Result<()> {
        let bad = self.subalgebra.violations(&self.space, f)?;
        if bad.is_empty() {
            Ok(())
        } else {
            let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
            Err(Error::OutsideSubalgebra(format!(
                "components of bidegree {} are outside {:?}",
                list.join(", "),
                self.subalgebra
            )))
        }
    }
}

pub fn pair_algebra(
    space: SplitSpace,
    subalgebra: Subspace,
    truncation: usize,
) -> Result<PairAlgebra> {
    PairAlgebra::new(space, subalgebra, truncation)
}

/// Twist of the pair algebra by a Maurer-Cartan pair.
pub fn pair_twist(l: PairAlgebra, alpha: GradedElement) -> Result<Twisted<PairAlgebra>> {
    Twisted::new(l, alpha)
}

#[derive(Clone, Copy)]
enum Piece<'a> {
    Shifted(&'a MultiMap),
    Base(&'a MultiMap),
}

impl Piece<'_> {
    fn degree(&self) -> i64 {
        match self {
            Piece::Shifted(m) => m.arity() as i64 - 2,
            Piece::Base(m) => m.arity() as i64 - 1,
        }
    }
}

impl CurvedLInfty for PairAlgebra {
    fn field(&self) -> Field {
        self.space.field()
    }

    fn truncation(&self) -> usize {
        self.truncation
    }

    fn provenance(&self) -> Provenance {
        if self.subalgebra == Subspace::Full {
            Provenance::Pair
        } else {
            Provenance::Specialized
        }
    }

    fn curvature(&self) -> Result<GradedElement> {
        Ok(GradedElement::zero(1))
    }

    fn bracket(&self, args: &[&GradedElement]) -> Result<GradedElement> {
        let field = self.field();
        let k = args.len();
        let mut acc = GradedElement::zero(args.iter().map(|a| a.degree()).sum::<i64>() + 1);
        let mut options: Vec<Vec<Piece>> = Vec::with_capacity(k);
        for a in args {
            let (s, b) = a.parts();
            if let Some(s) = s {
                self.check_shifted(s)?;
            }
            let mut o = Vec::new();
            o.extend(s.map(Piece::Shifted));
            o.extend(b.map(Piece::Base));
            if o.is_empty() {
                return Ok(acc);
            }
            options.push(o);
        }
        let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
        for choice in crate::multimap::MultiIndex::new(&sizes) {
            let pieces: Vec<Piece> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
            let shifted: Vec<usize> = (0..k)
                .filter(|&i| matches!(pieces[i], Piece::Shifted(_)))
                .collect();
            match shifted.as_slice() {
                [j] => {
                    let Piece::Shifted(f) = pieces[*j] else {
                        unreachable!()
                    };
                    let before: i64 = pieces[..*j].iter().map(Piece::degree).sum();
                    let sign = if (pieces[*j].degree() * before) % 2 != 0 {
                        -1
                    } else {
                        1
                    };
                    let rest: Vec<&MultiMap> = pieces
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| i != j)
                        .map(|(_, p)| match p {
                            Piece::Base(m) => *m,
                            Piece::Shifted(_) => unreachable!(),
                        })
                        .collect();
                    let value = project_a(&self.space, &nested_bracket(f, &rest)?)?;
                    acc.add_scaled(&field.from_i64(sign), &GradedElement::base(value))?;
                }
                [a, b] if k == 2 => {
                    let (Piece::Shifted(f), Piece::Shifted(g)) = (pieces[*a], pieces[*b]) else {
                        unreachable!()
                    };
                    let sign = if (f.arity() - 1) % 2 == 1 { -1 } else { 1 };
                    let value = balavoine_bracket(f, g)?;
                    acc.add_scaled(&field.from_i64(sign), &GradedElement::shifted(value))?;
                }
                _ => {}
            }
        }
        Ok(acc)
    }
}

use super::build::{build, ExampleInputs, ExampleKind};
use super::enumerate::all_linear_maps;
use crate::error::{shape, Error, Result};
use crate::exactlin::Vector;
use crate::leibniz::coadjoint_rep;
use crate::multimap::{basis_vector, MultiIndex, MultiMap};
use crate::prototwilled::is_deformation_map;

fn ev2(m: &MultiMap, a: &Vector, b: &Vector) -> Result<Vector> {
    m.eval(&[a.clone(), b.clone()])
}

fn ev1(r: &MultiMap, a: &Vector) -> Result<Vector> {
    r.eval(std::slice::from_ref(a))
}

fn sum(terms: &[Vector]) -> Vector {
    let mut acc = terms[0].clone();
    for t in &terms[1..] {
        for (a, b) in acc.iter_mut().zip(t) {
            *a += b;
        }
    }
    acc
}

fn neg(v: Vector) -> Vector {
    v.into_iter().map(|c| -c).collect()
}

/// Domain and codomain dimensions of `r` for this kind, read from the inputs.
fn r_shape(kind: ExampleKind, inputs: &ExampleInputs) -> Result<(usize, usize)> {
    let n = inputs.algebra.dim();
    Ok(match kind {
        ExampleKind::DirectProduct | ExampleKind::Weight1Semidirect | ExampleKind::MatchedPair => {
            (inputs.second(kind)?.dim(), n)
        }
        ExampleKind::Semidirect | ExampleKind::ThetaTwisted | ExampleKind::HemiSemidirect => {
            (inputs.rep(kind)?.dim_v(), n)
        }
        ExampleKind::DerivationHost => (n, inputs.rep(kind)?.dim_v()),
        ExampleKind::CrossedHomHost => (n, inputs.second(kind)?.dim()),
        ExampleKind::Modified | ExampleKind::Reynolds | ExampleKind::RMatrixHost => (n, n),
    })
}

/// Whether `r` is the classical operator of `kind`, by its own defining identity on
/// basis pairs (no proto-twilled structure involved):
///
/// - homomorphism: `r[u,v] = [ru,rv]`
/// - relative Rota-Baxter, weight 0: `[ru,rv] = r(ρL(ru,v) + ρR(u,rv))`
/// - derivation: `r[x,y] = ρL(x,ry) + ρR(rx,y)`
/// - relative Rota-Baxter, weight 1: `[ru,rv] = r([u,v] + ρL(ru,v) + ρR(u,rv))`
/// - crossed homomorphism: `r[x,y] = [rx,ry] + ρL(x,ry) + ρR(rx,y)`
/// - modified Rota-Baxter: `[rx,ry] = r([rx,y] + [x,ry]) − [x,y]`
/// - θ-twisted Rota-Baxter: `[ru,rv] = r(ρL(ru,v) + ρR(u,rv) + θ(ru,rv))`
/// - Reynolds: `[rx,ry] = r([rx,y] + [x,ry] − [rx,ry])`
/// - embedding tensor: `[ru,rv] = r(ρ(ru)v)`
/// - matched pair: `[ru,rv] + ψR(ru,v) + ψL(u,rv) = r([u,v] + ρL(ru,v) + ρR(u,rv))`
pub fn classify(kind: ExampleKind, r: &MultiMap, inputs: &ExampleInputs) -> Result<bool> {
    let (dom, cod) = r_shape(kind, inputs)?;
    if r.arity() != 1 || r.inputs()[0] != dom || r.output() != cod {
        return Err(shape(format!(
            "{kind} needs r: {dom} → {cod}, got {:?}->{}",
            r.inputs(),
            r.output()
        )));
    }
    let field = inputs.field();
    if r.field() != field {
        return Err(Error::FieldMismatch("operator and example inputs".into()));
    }
    let g = inputs.algebra.bracket();
    let coad;
    let rep = match kind {
        ExampleKind::RMatrixHost => {
            coad = coadjoint_rep(&inputs.algebra);
            Some(&coad)
        }
        _ => inputs.rep.as_ref(),
    };
    for idx in MultiIndex::new(&[dom, dom]) {
        let u = basis_vector(field, dom, idx[0]);
        let v = basis_vector(field, dom, idx[1]);
        let (ru, rv) = (ev1(r, &u)?, ev1(r, &v)?);
        let (lhs, rhs) = match kind {
            ExampleKind::DirectProduct => {
                let h = inputs.second(kind)?.bracket();
                (ev1(r, &ev2(h, &u, &v)?)?, ev2(g, &ru, &rv)?)
            }
            ExampleKind::Semidirect | ExampleKind::RMatrixHost => {
                let rep = rep.ok_or_else(|| {
                    Error::InvalidExampleInput(format!("{kind} needs a representation"))
                })?;
                let inner = sum(&[ev2(rep.rho_l(), &ru, &v)?, ev2(rep.rho_r(), &u, &rv)?]);
                (ev2(g, &ru, &rv)?, ev1(r, &inner)?)
            }
            ExampleKind::DerivationHost => {
                let rep = inputs.rep(kind)?;
                let rhs = sum(&[ev2(rep.rho_l(), &u, &rv)?, ev2(rep.rho_r(), &ru, &v)?]);
                (ev1(r, &ev2(g, &u, &v)?)?, rhs)
            }
            ExampleKind::Weight1Semidirect => {
                let (h, rep) = (inputs.second(kind)?.bracket(), inputs.rep(kind)?);
                let inner = sum(&[
                    ev2(h, &u, &v)?,
                    ev2(rep.rho_l(), &ru, &v)?,
                    ev2(rep.rho_r(), &u, &rv)?,
                ]);
                (ev2(g, &ru, &rv)?, ev1(r, &inner)?)
            }
            ExampleKind::CrossedHomHost => {
                let (h, rep) = (inputs.second(kind)?.bracket(), inputs.rep(kind)?);
                let rhs = sum(&[
                    ev2(h, &ru, &rv)?,
                    ev2(rep.rho_l(), &u, &rv)?,
                    ev2(rep.rho_r(), &ru, &v)?,
                ]);
                (ev1(r, &ev2(g, &u, &v)?)?, rhs)
            }
            ExampleKind::Modified => {
                let inner = sum(&[ev2(g, &ru, &v)?, ev2(g, &u, &rv)?]);
                (
                    ev2(g, &ru, &rv)?,
                    sum(&[ev1(r, &inner)?, neg(ev2(g, &u, &v)?)]),
                )
            }
            ExampleKind::ThetaTwisted => {
                let (rep, theta) = (inputs.rep(kind)?, inputs.cocycle(kind)?);
                let inner = sum(&[
                    ev2(rep.rho_l(), &ru, &v)?,
                    ev2(rep.rho_r(), &u, &rv)?,
                    ev2(theta, &ru, &rv)?,
                ]);
                (ev2(g, &ru, &rv)?, ev1(r, &inner)?)
            }
            ExampleKind::Reynolds => {
                let brr = ev2(g, &ru, &rv)?;
                let inner = sum(&[ev2(g, &ru, &v)?, ev2(g, &u, &rv)?, neg(brr.clone())]);
                (brr, ev1(r, &inner)?)
            }
            ExampleKind::HemiSemidirect => {
                let rep = inputs.rep(kind)?;
                (ev2(g, &ru, &rv)?, ev1(r, &ev2(rep.rho_l(), &ru, &v)?)?)
            }
            ExampleKind::MatchedPair => {
                let (h, rep, dual) = (
                    inputs.second(kind)?.bracket(),
                    inputs.rep(kind)?,
                    inputs.dual_rep(kind)?,
                );
                let lhs = sum(&[
                    ev2(g, &ru, &rv)?,
                    ev2(dual.rho_r(), &ru, &v)?,
                    ev2(dual.rho_l(), &u, &rv)?,
                ]);
                let inner = sum(&[
                    ev2(h, &u, &v)?,
                    ev2(rep.rho_l(), &ru, &v)?,
                    ev2(rep.rho_r(), &u, &rv)?,
                ]);
                (lhs, ev1(r, &inner)?)
            }
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate maps for [`equivalence_check`].
#[derive(Clone, Debug)]
pub enum RSet {
    /// Every linear map over the (finite) field, up to `budget` candidates.
    Exhaustive {
        budget: u128,
    },
    Given(Vec<MultiMap>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub r: MultiMap,
    pub classified: bool,
    pub deformation_map: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub kind: ExampleKind,
    /// `true` iff no disagreement was found.
    pub holds: bool,
    pub tested: usize,
    /// How many of the tested maps are deformation maps.
    pub positives: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Compares [`classify`] with the deformation-map predicate on the built structure.
pub fn equivalence_check(
    kind: ExampleKind,
    inputs: &ExampleInputs,
    set: &RSet,
) -> Result<EquivalenceReport> {
    let s = build(kind, inputs)?;
    let owned;
    let candidates: &[MultiMap] = match set {
        RSet::Exhaustive { budget } => {
            let (dom, cod) = r_shape(kind, inputs)?;
            owned = all_linear_maps(inputs.field(), dom, cod, *budget)?;
            &owned
        }
        RSet::Given(v) => v,
    };
    let mut disagreements = Vec::new();
    let mut positives = 0;
    for r in candidates {
        let classified = classify(kind, r, inputs)?;
        let deformation_map = is_deformation_map(&s, r)?.is_deformation_map;
        positives += usize::from(deformation_map);
        if classified != deformation_map {
            disagreements.push(Disagreement {
                r: r.clone(),
                classified,
                deformation_map,
            });
        }
    }
    Ok(EquivalenceReport {
        kind,
        holds: disagreements.is_empty(),
        tested: candidates.len(),
        positives,
        disagreements,
    })
}

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar, Vector};
use crate::leibniz::{
    check_leibniz, check_representation, coadjoint_rep, lp_coboundary, LeibnizAlgebra,
    Representation,
};
use crate::multimap::{basis_vector, MultiIndex, MultiMap, SplitSpace};
use crate::prototwilled::{check_proto_twilled, OmegaMaps, OmegaStructure};

/// The worked example families. In every case `r` maps the second summand of the
/// split to the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExampleKind {
    /// `𝔤 ⊕ 𝔥`, deformation maps are homomorphisms `𝔥 → 𝔤`.
    DirectProduct,
    /// `𝔤 ⊕ V`, deformation maps are relative Rota-Baxter operators of weight 0.
    Semidirect,
    /// `V ⊕ 𝔤`, deformation maps are derivations `𝔤 → V`.
    DerivationHost,
    /// `𝔤 ⊕ 𝔥` with `[u,v]_𝔥` kept, relative Rota-Baxter operators of weight 1.
    Weight1Semidirect,
    /// `𝔥 ⊕ 𝔤`, deformation maps are crossed homomorphisms `𝔤 → 𝔥`.
    CrossedHomHost,
    /// `𝔤 ⊕ 𝔤` with `([x′,y′]+[x,y], [x′,y]+[x,y′])`, modified Rota-Baxter operators.
    Modified,
    /// `𝔤 ⊕ V` with a 2-cocycle `θ`, θ-twisted Rota-Baxter operators.
    ThetaTwisted,
    /// `𝔤 ⊕ 𝔤` with `([x′,y′], [x′,y]+[x,y′]−[x′,y′])`, Reynolds operators.
    Reynolds,
    /// `𝔤 ⊕ V` for a Lie algebra, `([x,y], ρ(x)v)`, embedding tensors.
    HemiSemidirect,
    /// A twilled algebra from two mutual actions.
    MatchedPair,
    /// Semidirect product with the coadjoint representation on `𝔤*`.
    RMatrixHost,
}

impl ExampleKind {
    pub const ALL: [ExampleKind; 11] = [
        ExampleKind::DirectProduct,
        ExampleKind::Semidirect,
        ExampleKind::DerivationHost,
        ExampleKind::Weight1Semidirect,
        ExampleKind::CrossedHomHost,
        ExampleKind::Modified,
        ExampleKind::ThetaTwisted,
        ExampleKind::Reynolds,
        ExampleKind::HemiSemidirect,
        ExampleKind::MatchedPair,
        ExampleKind::RMatrixHost,
    ];

    /// Kebab-case name used by the command line.
    pub fn name(self) -> &'static str {
        match self {
            ExampleKind::DirectProduct => "direct-product",
            ExampleKind::Semidirect => "semidirect",
            ExampleKind::DerivationHost => "derivation-host",
            ExampleKind::Weight1Semidirect => "weight1-semidirect",
            ExampleKind::CrossedHomHost => "crossed-hom-host",
            ExampleKind::Modified => "modified",
            ExampleKind::ThetaTwisted => "theta-twisted",
            ExampleKind::Reynolds => "reynolds",
            ExampleKind::HemiSemidirect => "hemi-semidirect",
            ExampleKind::MatchedPair => "matched-pair",
            ExampleKind::RMatrixHost => "r-matrix-host",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The classical operator a deformation map of this kind is.
    pub fn operator(self) -> &'static str {
        match self {
            ExampleKind::DirectProduct => "homomorphism",
            ExampleKind::Semidirect | ExampleKind::RMatrixHost => {
                "relative Rota-Baxter operator of weight 0"
            }
            ExampleKind::DerivationHost => "derivation",
            ExampleKind::Weight1Semidirect => "relative Rota-Baxter operator of weight 1",
            ExampleKind::CrossedHomHost => "crossed homomorphism",
            ExampleKind::Modified => "modified Rota-Baxter operator",
            ExampleKind::ThetaTwisted => "θ-twisted Rota-Baxter operator",
            ExampleKind::Reynolds => "Reynolds operator",
            ExampleKind::HemiSemidirect => "embedding tensor",
            ExampleKind::MatchedPair => "matched-pair deformation map",
        }
    }

    /// Strongest class every output of `build` is guaranteed to have.
    pub fn expected_class(self) -> StructureClass {
        match self {
            ExampleKind::DirectProduct
            | ExampleKind::Semidirect
            | ExampleKind::DerivationHost
            | ExampleKind::Weight1Semidirect
            | ExampleKind::CrossedHomHost
            | ExampleKind::HemiSemidirect
            | ExampleKind::MatchedPair
            | ExampleKind::RMatrixHost => StructureClass::Twilled,
            ExampleKind::ThetaTwisted | ExampleKind::Reynolds => StructureClass::QuasiTwilled,
            ExampleKind::Modified => StructureClass::Proto,
        }
    }
}

impl std::fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureClass {
    Proto,
    QuasiTwilled,
    Twilled,
}

impl StructureClass {
    pub fn of(s: &OmegaStructure) -> Self {
        if s.is_twilled() {
            StructureClass::Twilled
        } else if s.is_quasi_twilled() {
            StructureClass::QuasiTwilled
        } else {
            StructureClass::Proto
        }
    }
}

/// Data an example is built from. Which fields are required depends on the kind:
///
/// | kind | `second` | `rep` | `dual_rep` | `cocycle` |
/// |---|---|---|---|---|
/// | DirectProduct | 𝔥 | | | |
/// | Semidirect, DerivationHost | | on V | | |
/// | Weight1Semidirect, CrossedHomHost | 𝔥 | on 𝔥 | | |
/// | ThetaTwisted | | on V | | `θ: 𝔤⊗𝔤→V` |
/// | HemiSemidirect | | `ρ = rho_l`, `rho_r = 0` | | |
/// | MatchedPair | 𝔥 | 𝔤 on 𝔥 | 𝔥 on 𝔤 | |
/// | Modified, Reynolds, RMatrixHost | | | | |
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleInputs {
    pub algebra: LeibnizAlgebra,
    pub second: Option<LeibnizAlgebra>,
    pub rep: Option<Representation>,
    pub dual_rep: Option<Representation>,
    pub cocycle: Option<MultiMap>,
}

impl ExampleInputs {
    pub fn new(algebra: LeibnizAlgebra) -> Self {
        ExampleInputs {
            algebra,
            second: None,
            rep: None,
            dual_rep: None,
            cocycle: None,
        }
    }

    pub fn with_second(mut self, h: LeibnizAlgebra) -> Self {
        self.second = Some(h);
        self
    }

    pub fn with_rep(mut self, rep: Representation) -> Self {
        self.rep = Some(rep);
        self
    }

    pub fn with_dual_rep(mut self, rep: Representation) -> Self {
        self.dual_rep = Some(rep);
        self
    }

    pub fn with_cocycle(mut self, theta: MultiMap) -> Self {
        self.cocycle = Some(theta);
        self
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub(crate) fn second(&self, kind: ExampleKind) -> Result<&LeibnizAlgebra> {
        self.second
            .as_ref()
            .ok_or_else(|| missing(kind, "a second Leibniz algebra"))
    }

    pub(crate) fn rep(&self, kind: ExampleKind) -> Result<&Representation> {
        self.rep
            .as_ref()
            .ok_or_else(|| missing(kind, "a representation"))
    }

    pub(crate) fn dual_rep(&self, kind: ExampleKind) -> Result<&Representation> {
        self.dual_rep
            .as_ref()
            .ok_or_else(|| missing(kind, "an action of the second algebra on the first"))
    }

    pub(crate) fn cocycle(&self, kind: ExampleKind) -> Result<&MultiMap> {
        self.cocycle
            .as_ref()
            .ok_or_else(|| missing(kind, "a 2-cocycle"))
    }
}

fn missing(kind: ExampleKind, what: &str) -> Error {
    Error::InvalidExampleInput(format!("{kind} needs {what}"))
}

fn invalid(kind: ExampleKind, identity: &str, detail: impl std::fmt::Display) -> Error {
    Error::InvalidExampleInput(format!("{kind}: {identity} fails ({detail})"))
}

fn require_leibniz(kind: ExampleKind, what: &str, alg: &LeibnizAlgebra) -> Result<()> {
    let report = check_leibniz(alg.bracket())?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(invalid(
            kind,
            &format!("Leibniz identity of {what}"),
            format!("basis triple {:?}", v.triple),
        )),
    }
}

fn require_rep(kind: ExampleKind, alg: &LeibnizAlgebra, rep: &Representation) -> Result<()> {
    let report = check_representation(alg, rep)?;
    match report.identities.iter().find(|i| !i.holds) {
        None => Ok(()),
        Some(i) => Err(invalid(
            kind,
            &format!("representation identity {}", i.name),
            format!("basis triple {:?}", i.violations[0].triple),
        )),
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn ev(m: &MultiMap, a: &Vector, b: &Vector) -> Result<Vector> {
    m.eval(&[a.clone(), b.clone()])
}

pub type IdentityCheck = (&'static str, Option<[usize; 3]>);

/// The three compatibilities of `ρ` with `[·,·]_𝔥` needed for the weight-1 semidirect product:
/// - `ρL(x,[u,v]) = [ρL(x,u),v] + [u,ρL(x,v)]`
/// - `[u,ρL(x,v)] = [ρR(u,x),v] + ρL(x,[u,v])`
/// - `[u,ρR(v,x)] = ρR([u,v],x) + [v,ρR(u,x)]`
///
/// Each entry is the identity and its first failing basis triple `(x,u,v)`, if any.
pub fn weight1_identities(h: &LeibnizAlgebra, rep: &Representation) -> Result<Vec<IdentityCheck>> {
    let field = h.field();
    let (dg, dh) = (rep.dim_g(), h.dim());
    let (b, rl, rr) = (h.bracket(), rep.rho_l(), rep.rho_r());
    let names = [
        "ρL(x,[u,v]) = [ρL(x,u),v] + [u,ρL(x,v)]",
        "[u,ρL(x,v)] = [ρR(u,x),v] + ρL(x,[u,v])",
        "[u,ρR(v,x)] = ρR([u,v],x) + [v,ρR(u,x)]",
    ];
    let mut out = Vec::new();
    for (t, name) in names.into_iter().enumerate() {
        let mut first = None;
        for idx in MultiIndex::new(&[dg, dh, dh]) {
            let x = basis_vector(field, dg, idx[0]);
            let u = basis_vector(field, dh, idx[1]);
            let v = basis_vector(field, dh, idx[2]);
            let residual = match t {
                0 => sub(
                    &ev(rl, &x, &ev(b, &u, &v)?)?,
                    &add(&ev(b, &ev(rl, &x, &u)?, &v)?, &ev(b, &u, &ev(rl, &x, &v)?)?),
                ),
                1 => sub(
                    &ev(b, &u, &ev(rl, &x, &v)?)?,
                    &add(&ev(b, &ev(rr, &u, &x)?, &v)?, &ev(rl, &x, &ev(b, &u, &v)?)?),
                ),
                _ => sub(
                    &ev(b, &u, &ev(rr, &v, &x)?)?,
                    &add(&ev(rr, &ev(b, &u, &v)?, &x)?, &ev(b, &v, &ev(rr, &u, &x)?)?),
                ),
            };
            if residual.iter().any(|c| !c.is_zero()) {
                first = Some([idx[0], idx[1], idx[2]]);
                break;
            }
        }
        out.push((name, first));
    }
    Ok(out)
}

fn require_same_field(kind: ExampleKind, inputs: &ExampleInputs) -> Result<()> {
    let f = inputs.field();
    let ok = inputs.second.as_ref().is_none_or(|a| a.field() == f)
        && inputs.rep.as_ref().is_none_or(|r| r.field() == f)
        && inputs.dual_rep.as_ref().is_none_or(|r| r.field() == f)
        && inputs.cocycle.as_ref().is_none_or(|m| m.field() == f);
    if ok {
        Ok(())
    } else {
        Err(Error::FieldMismatch(format!("{kind} inputs")))
    }
}

fn require_rep_dims(
    kind: ExampleKind,
    rep: &Representation,
    dim_g: usize,
    dim_v: usize,
) -> Result<()> {
    if rep.dim_g() != dim_g || rep.dim_v() != dim_v {
        return Err(Error::InvalidExampleInput(format!(
            "{kind}: representation of a {}-dimensional algebra on a {}-dimensional space, expected {dim_g} on {dim_v}",
            rep.dim_g(),
            rep.dim_v()
        )));
    }
    Ok(())
}

/// Builds the proto-twilled structure of `kind`, validating its hypotheses first.
pub fn build(kind: ExampleKind, inputs: &ExampleInputs) -> Result<OmegaStructure> {
    require_same_field(kind, inputs)?;
    let field = inputs.field();
    let g = &inputs.algebra;
    let n = g.dim();
    require_leibniz(kind, "the first algebra", g)?;
    let (space, maps) = match kind {
        ExampleKind::DirectProduct => {
            let h = inputs.second(kind)?;
            require_leibniz(kind, "the second algebra", h)?;
            let space = SplitSpace::new(field, n, h.dim())?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = g.bracket().clone();
            maps.bracket_h = h.bracket().clone();
            (space, maps)
        }
        ExampleKind::Semidirect | ExampleKind::RMatrixHost => {
            let rep = if kind == ExampleKind::RMatrixHost {
                coadjoint_rep(g)
            } else {
                inputs.rep(kind)?.clone()
            };
            require_rep_dims(kind, &rep, n, rep.dim_v())?;
            require_rep(kind, g, &rep)?;
            let space = SplitSpace::new(field, n, rep.dim_v())?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = g.bracket().clone();
            maps.rho_l = rep.rho_l().clone();
            maps.rho_r = rep.rho_r().clone();
            (space, maps)
        }
        ExampleKind::DerivationHost => {
            let rep = inputs.rep(kind)?;
            require_rep_dims(kind, rep, n, rep.dim_v())?;
            require_rep(kind, g, rep)?;
            let space = SplitSpace::new(field, rep.dim_v(), n)?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_h = g.bracket().clone();
            maps.psi_l = rep.rho_l().clone();
            maps.psi_r = rep.rho_r().clone();
            (space, maps)
        }
        ExampleKind::Weight1Semidirect | ExampleKind::CrossedHomHost => {
            let h = inputs.second(kind)?;
            require_leibniz(kind, "the second algebra", h)?;
            let rep = inputs.rep(kind)?;
            require_rep_dims(kind, rep, n, h.dim())?;
            require_rep(kind, g, rep)?;
            if let Some((name, Some(t))) = weight1_identities(h, rep)?
                .into_iter()
                .find(|(_, t)| t.is_some())
            {
                return Err(invalid(kind, name, format!("basis triple (x,u,v) = {t:?}")));
            }
            if kind == ExampleKind::Weight1Semidirect {
                let space = SplitSpace::new(field, n, h.dim())?;
                let mut maps = OmegaMaps::zero(&space);
                maps.bracket_g = g.bracket().clone();
                maps.bracket_h = h.bracket().clone();
                maps.rho_l = rep.rho_l().clone();
                maps.rho_r = rep.rho_r().clone();
                (space, maps)
            } else {
                let space = SplitSpace::new(field, h.dim(), n)?;
                let mut maps = OmegaMaps::zero(&space);
                maps.bracket_g = h.bracket().clone();
                maps.bracket_h = g.bracket().clone();
                maps.psi_l = rep.rho_l().clone();
                maps.psi_r = rep.rho_r().clone();
                (space, maps)
            }
        }
        ExampleKind::Modified | ExampleKind::Reynolds => {
            let space = SplitSpace::new(field, n, n)?;
            let b = g.bracket();
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = b.clone();
            maps.rho_l = b.clone();
            maps.rho_r = b.clone();
            if kind == ExampleKind::Modified {
                maps.eta = b.clone();
            } else {
                maps.theta = b.neg();
            }
            (space, maps)
        }
        ExampleKind::ThetaTwisted => {
            let rep = inputs.rep(kind)?;
            require_rep_dims(kind, rep, n, rep.dim_v())?;
            require_rep(kind, g, rep)?;
            let theta = inputs.cocycle(kind)?;
            if theta.inputs() != [n, n] || theta.output() != rep.dim_v() {
                return Err(Error::InvalidExampleInput(format!(
                    "{kind}: θ must be a map 𝔤⊗𝔤→V, got {:?}->{}",
                    theta.inputs(),
                    theta.output()
                )));
            }
            let d = lp_coboundary(theta, g, rep)?;
            if !d.is_zero() {
                return Err(invalid(
                    kind,
                    "2-cocycle condition δθ = 0",
                    "δθ has nonzero coefficients",
                ));
            }
            let space = SplitSpace::new(field, n, rep.dim_v())?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = g.bracket().clone();
            maps.rho_l = rep.rho_l().clone();
            maps.rho_r = rep.rho_r().clone();
            maps.theta = theta.clone();
            (space, maps)
        }
        ExampleKind::HemiSemidirect => {
            let b = g.bracket();
            for idx in MultiIndex::new(&[n, n]) {
                let swapped = b.row(&[idx[1], idx[0]]);
                if b.row(&idx)
                    .iter()
                    .zip(swapped)
                    .any(|(a, c)| !(a + c).is_zero())
                {
                    return Err(invalid(
                        kind,
                        "antisymmetry [x,y] = −[y,x]",
                        format!("basis pair {idx:?}"),
                    ));
                }
            }
            let rep = inputs.rep(kind)?;
            require_rep_dims(kind, rep, n, rep.dim_v())?;
            if !rep.rho_r().is_zero() {
                return Err(Error::InvalidExampleInput(format!(
                    "{kind}: the Lie representation is ρ = rho_l; rho_r must be zero"
                )));
            }
            require_rep(kind, g, rep)?;
            let space = SplitSpace::new(field, n, rep.dim_v())?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = b.clone();
            maps.rho_l = rep.rho_l().clone();
            (space, maps)
        }
        ExampleKind::MatchedPair => {
            let h = inputs.second(kind)?;
            require_leibniz(kind, "the second algebra", h)?;
            let rep = inputs.rep(kind)?;
            require_rep_dims(kind, rep, n, h.dim())?;
            require_rep(kind, g, rep)?;
            let dual = inputs.dual_rep(kind)?;
            require_rep_dims(kind, dual, h.dim(), n)?;
            require_rep(kind, h, dual)?;
            let space = SplitSpace::new(field, n, h.dim())?;
            let mut maps = OmegaMaps::zero(&space);
            maps.bracket_g = g.bracket().clone();
            maps.bracket_h = h.bracket().clone();
            maps.rho_l = rep.rho_l().clone();
            maps.rho_r = rep.rho_r().clone();
            maps.psi_l = dual.rho_l().clone();
            maps.psi_r = dual.rho_r().clone();
            (space, maps)
        }
    };
    let s = OmegaStructure::assemble(space, maps)?;
    let report = check_proto_twilled(&s)?;
    if let Some(v) = report.leibniz.violations.first() {
        return Err(invalid(
            kind,
            "Leibniz identity of the assembled bracket",
            format!("basis triple {:?}", v.triple),
        ));
    }
    Ok(s)
}

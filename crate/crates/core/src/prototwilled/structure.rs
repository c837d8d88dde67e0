use crate::error::{Error, Result};
use crate::leibniz::{check_leibniz, LeibnizReport};
use crate::multimap::{
    balavoine_bracket, horizontal_lift, restrict, Bidegree, BlockMap, MultiMap, Part, SplitSpace,
};

use Part::{G, H};

/// Name, input pattern and output summand of each of the eight component maps.
pub const COMPONENTS: [(&str, [Part; 2], Part); 8] = [
    ("bracket_g", [G, G], G),
    ("bracket_h", [H, H], H),
    ("rho_l", [G, H], H),
    ("rho_r", [H, G], H),
    ("psi_l", [H, G], G),
    ("psi_r", [G, H], G),
    ("theta", [G, G], H),
    ("eta", [H, H], G),
];

/// The eight bilinear maps determining a bracket on `𝔤 ⊕ 𝔥`:
/// `[(x,u),(y,v)] = ([x,y] + ψR(x,v) + ψL(u,y) + η(u,v), [u,v] + ρL(x,v) + ρR(u,y) + θ(x,y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMaps {
    pub bracket_g: MultiMap,
    pub bracket_h: MultiMap,
    pub rho_l: MultiMap,
    pub rho_r: MultiMap,
    pub psi_l: MultiMap,
    pub psi_r: MultiMap,
    pub theta: MultiMap,
    pub eta: MultiMap,
}

impl OmegaMaps {
    pub fn zero(space: &SplitSpace) -> Self {
        let z = |i: usize| {
            let (_, pattern, out) = COMPONENTS[i];
            BlockMap::zero(space, pattern.to_vec(), out)
                .expect("arity 2")
                .map
        };
        OmegaMaps {
            bracket_g: z(0),
            bracket_h: z(1),
            rho_l: z(2),
            rho_r: z(3),
            psi_l: z(4),
            psi_r: z(5),
            theta: z(6),
            eta: z(7),
        }
    }

    /// Maps in the order of [`COMPONENTS`].
    pub fn as_array(&self) -> [&MultiMap; 8] {
        [
            &self.bracket_g,
            &self.bracket_h,
            &self.rho_l,
            &self.rho_r,
            &self.psi_l,
            &self.psi_r,
            &self.theta,
            &self.eta,
        ]
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut MultiMap> {
        Some(match name {
            "bracket_g" => &mut self.bracket_g,
            "bracket_h" => &mut self.bracket_h,
            "rho_l" => &mut self.rho_l,
            "rho_r" => &mut self.rho_r,
            "psi_l" => &mut self.psi_l,
            "psi_r" => &mut self.psi_r,
            "theta" => &mut self.theta,
            "eta" => &mut self.eta,
            _ => return None,
        })
    }

    pub fn get(&self, name: &str) -> Option<&MultiMap> {
        let i = COMPONENTS.iter().position(|(n, _, _)| *n == name)?;
        Some(self.as_array()[i])
    }
}

/// A bracket on a split space together with its four bidegree components
/// `Ω = θ̃ + μ + ν + η̃`. Validity is checked on demand by [`check_proto_twilled`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaStructure {
    space: SplitSpace,
    maps: OmegaMaps,
    omega: MultiMap,
    theta_t: MultiMap,
    mu: MultiMap,
    nu: MultiMap,
    eta_t: MultiMap,
}

impl OmegaStructure {
    pub fn assemble(space: SplitSpace, maps: OmegaMaps) -> Result<Self> {
        let mut lifts = Vec::with_capacity(8);
        for ((name, pattern, out), m) in COMPONENTS.iter().zip(maps.as_array()) {
            let block =
                BlockMap::new(&space, pattern.to_vec(), *out, m.clone()).map_err(|e| match e {
                    Error::Shape(msg) => Error::Shape(format!("{name}: {msg}")),
                    other => other,
                })?;
            lifts.push(horizontal_lift(&space, &block)?);
        }
        let sum = |idx: &[usize]| -> Result<MultiMap> {
            let mut acc = MultiMap::square_zeros(space.field(), space.dim(), 2)?;
            for &i in idx {
                acc.add_assign(&lifts[i])?;
            }
            Ok(acc)
        };
        let mu = sum(&[0, 2, 3])?;
        let nu = sum(&[1, 4, 5])?;
        let theta_t = lifts[6].clone();
        let eta_t = lifts[7].clone();
        let omega = sum(&[0, 1, 2, 3, 4, 5, 6, 7])?;
        Ok(OmegaStructure {
            space,
            maps,
            omega,
            theta_t,
            mu,
            nu,
            eta_t,
        })
    }

    /// Splits an arbitrary bracket on `𝒢` into its eight component maps.
    pub fn from_omega(space: SplitSpace, omega: &MultiMap) -> Result<Self> {
        let parts: Vec<MultiMap> = COMPONENTS
            .iter()
            .map(|(_, pattern, out)| restrict(&space, omega, pattern, *out).map(|b| b.map))
            .collect::<Result<_>>()?;
        let mut it = parts.into_iter();
        let mut next = || it.next().expect("eight components");
        let maps = OmegaMaps {
            bracket_g: next(),
            bracket_h: next(),
            rho_l: next(),
            rho_r: next(),
            psi_l: next(),
            psi_r: next(),
            theta: next(),
            eta: next(),
        };
        Self::assemble(space, maps)
    }

    pub fn zero(space: SplitSpace) -> Self {
        Self::assemble(space, OmegaMaps::zero(&space)).expect("zero maps have the right shapes")
    }

    pub fn space(&self) -> &SplitSpace {
        &self.space
    }

    pub fn field(&self) -> crate::exactlin::Field {
        self.space.field()
    }

    pub fn maps(&self) -> &OmegaMaps {
        &self.maps
    }

    pub fn omega(&self) -> &MultiMap {
        &self.omega
    }

    pub fn theta_tilde(&self) -> &MultiMap {
        &self.theta_t
    }

    pub fn mu(&self) -> &MultiMap {
        &self.mu
    }

    pub fn nu(&self) -> &MultiMap {
        &self.nu
    }

    pub fn eta_tilde(&self) -> &MultiMap {
        &self.eta_t
    }

    /// `(θ̃, μ, ν, η̃)` with their bidegrees.
    pub fn components(&self) -> [(Bidegree, &MultiMap); 4] {
        [
            (Bidegree::new(2, -1), &self.theta_t),
            (Bidegree::new(1, 0), &self.mu),
            (Bidegree::new(0, 1), &self.nu),
            (Bidegree::new(-1, 2), &self.eta_t),
        ]
    }

    pub fn is_quasi_twilled(&self) -> bool {
        self.maps.eta.is_zero()
    }

    pub fn is_twilled(&self) -> bool {
        self.maps.eta.is_zero() && self.maps.theta.is_zero()
    }

    /// Lift of a linear map `r: 𝔥 → 𝔤`: `r̃(x,u) = (r(u), 0)`.
    pub fn lift_r(&self, r: &MultiMap) -> Result<MultiMap> {
        let block = BlockMap::new(&self.space, vec![H], G, r.clone())?;
        horizontal_lift(&self.space, &block)
    }
}

/// One of the five component equations of `⟦Ω,Ω⟧ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCheck {
    pub name: &'static str,
    pub holds: bool,
    pub residual: MultiMap,
}

/// `holds` is the Leibniz identity of `Ω` on basis triples; `equations` are
/// evaluated independently from the components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProtoTwilledReport {
    pub holds: bool,
    pub leibniz: LeibnizReport,
    pub equations: Vec<EquationCheck>,
    pub equations_hold: bool,
    pub quasi_twilled: bool,
    pub twilled: bool,
}

pub fn check_proto_twilled(s: &OmegaStructure) -> Result<ProtoTwilledReport> {
    let leibniz = check_leibniz(s.omega())?;
    let (t, mu, nu, e) = (s.theta_tilde(), s.mu(), s.nu(), s.eta_tilde());
    let two = s.field().from_i64(2);
    let br = balavoine_bracket;
    let eqs: Vec<(&'static str, MultiMap)> = vec![
        ("[[mu,theta]] = 0", br(mu, t)?),
        ("[[mu,mu]] + 2[[nu,theta]] = 0", {
            let mut m = br(mu, mu)?;
            m.add_scaled(&two, &br(nu, t)?)?;
            m
        }),
        (
            "[[mu,nu]] + [[theta,eta]] = 0",
            br(mu, nu)?.add(&br(t, e)?)?,
        ),
        ("[[nu,nu]] + 2[[mu,eta]] = 0", {
            let mut m = br(nu, nu)?;
            m.add_scaled(&two, &br(mu, e)?)?;
            m
        }),
        ("[[nu,eta]] = 0", br(nu, e)?),
    ];
    let equations: Vec<EquationCheck> = eqs
        .into_iter()
        .map(|(name, residual)| EquationCheck {
            name,
            holds: residual.is_zero(),
            residual,
        })
        .collect();
    Ok(ProtoTwilledReport {
        holds: leibniz.holds,
        equations_hold: equations.iter().all(|e| e.holds),
        leibniz,
        equations,
        quasi_twilled: s.is_quasi_twilled(),
        twilled: s.is_twilled(),
    })
}

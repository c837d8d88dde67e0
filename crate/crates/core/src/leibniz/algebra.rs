use crate::error::{shape, Error, Result};
use crate::exactlin::{Field, Scalar, Vector};
use crate::multimap::{balavoine_bracket, diamond, MultiIndex, MultiMap};

/// A bilinear bracket on one space. Construction checks shapes only; the
/// Leibniz identity is checked on demand by [`check_leibniz`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    bracket: MultiMap,
}

impl LeibnizAlgebra {
    pub fn new(bracket: MultiMap) -> Result<Self> {
        if bracket.arity() != 2 || !bracket.is_square() {
            return Err(shape(format!(
                "a bracket is a map V⊗V→V, got {:?}->{}",
                bracket.inputs(),
                bracket.output()
            )));
        }
        Ok(LeibnizAlgebra { bracket })
    }

    pub fn abelian(field: Field, dim: usize) -> Self {
        LeibnizAlgebra {
            bracket: MultiMap::square_zeros(field, dim, 2).expect("arity 2"),
        }
    }

    /// Bracket from structure constants `[e_a, e_b] = Σ_c consts[a][b][c] e_c`.
    pub fn from_constants(field: Field, consts: &[Vec<Vec<i64>>]) -> Result<Self> {
        let dim = consts.len();
        let bracket = MultiMap::from_fn(field, &[dim, dim], dim, |idx, c| {
            field.from_i64(consts[idx[0]][idx[1]][c])
        })?;
        Self::new(bracket)
    }

    pub fn field(&self) -> Field {
        self.bracket.field()
    }

    pub fn dim(&self) -> usize {
        self.bracket.output()
    }

    pub fn bracket(&self) -> &MultiMap {
        &self.bracket
    }

    pub fn bracket_of(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.bracket.eval(&[x.clone(), y.clone()])
    }
}

/// Left and right actions `ρL: 𝔤⊗V→V`, `ρR: V⊗𝔤→V`, checked only on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    rho_l: MultiMap,
    rho_r: MultiMap,
}

impl Representation {
    pub fn new(rho_l: MultiMap, rho_r: MultiMap) -> Result<Self> {
        if rho_l.field() != rho_r.field() {
            return Err(Error::FieldMismatch("left and right actions".into()));
        }
        if rho_l.arity() != 2 || rho_r.arity() != 2 {
            return Err(shape("actions are bilinear"));
        }
        let (g, v) = (rho_l.inputs()[0], rho_l.inputs()[1]);
        if rho_l.output() != v || rho_r.inputs() != [v, g] || rho_r.output() != v {
            return Err(shape(format!(
                "actions {:?}->{} and {:?}->{} do not share 𝔤 and V",
                rho_l.inputs(),
                rho_l.output(),
                rho_r.inputs(),
                rho_r.output()
            )));
        }
        Ok(Representation { rho_l, rho_r })
    }

    pub fn zero(field: Field, dim_g: usize, dim_v: usize) -> Self {
        Representation {
            rho_l: MultiMap::zeros(field, &[dim_g, dim_v], dim_v).expect("arity 2"),
            rho_r: MultiMap::zeros(field, &[dim_v, dim_g], dim_v).expect("arity 2"),
        }
    }

    pub fn field(&self) -> Field {
        self.rho_l.field()
    }

    pub fn dim_g(&self) -> usize {
        self.rho_l.inputs()[0]
    }

    pub fn dim_v(&self) -> usize {
        self.rho_l.output()
    }

    pub fn rho_l(&self) -> &MultiMap {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &MultiMap {
        &self.rho_r
    }

    fn check_against(&self, alg: &LeibnizAlgebra) -> Result<()> {
        if self.field() != alg.field() {
            return Err(Error::FieldMismatch("algebra and representation".into()));
        }
        if self.dim_g() != alg.dim() {
            return Err(shape(format!(
                "representation of a {}-dimensional algebra used with one of dimension {}",
                self.dim_g(),
                alg.dim()
            )));
        }
        Ok(())
    }
}

/// `ad^L = ad^R = [·,·]`.
pub fn adjoint_rep(alg: &LeibnizAlgebra) -> Representation {
    Representation {
        rho_l: alg.bracket.clone(),
        rho_r: alg.bracket.clone(),
    }
}

/// `coad^L(x,α)(y) = −α([x,y])`, `coad^R(α,x)(y) = α([x,y] + [y,x])`, in the dual basis.
pub fn coadjoint_rep(alg: &LeibnizAlgebra) -> Representation {
    let field = alg.field();
    let n = alg.dim();
    let b = &alg.bracket;
    let rho_l = MultiMap::from_fn(field, &[n, n], n, |idx, c| {
        let (a, beta) = (idx[0], idx[1]);
        -b.get(&[a, c], beta)
    })
    .expect("arity 2");
    let rho_r = MultiMap::from_fn(field, &[n, n], n, |idx, c| {
        let (beta, a) = (idx[0], idx[1]);
        b.get(&[a, c], beta) + b.get(&[c, a], beta)
    })
    .expect("arity 2");
    Representation { rho_l, rho_r }
}

/// A basis triple on which an identity fails, with the residual `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub triple: [usize; 3],
    pub residual: Vector,
}

/// Outcome of the Leibniz check. `holds` comes from the basis-triple test;
/// `square` is `⟦Ω,Ω⟧` computed independently. Outside characteristic 2,
/// `holds == square_vanishes`; in characteristic 2 `⟦Ω,Ω⟧ = 2 Ω⋄Ω` vanishes
/// identically and `diamond_vanishes` carries the equivalent condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizReport {
    pub holds: bool,
    pub violations: Vec<Violation>,
    pub square: MultiMap,
    pub square_vanishes: bool,
    pub diamond_vanishes: bool,
}

/// Residual `[x,[y,z]] − [[x,y],z] − [y,[x,z]]` on a basis triple.
pub fn leibniz_residual(bracket: &MultiMap, x: usize, y: usize, z: usize) -> Vector {
    let act = |i: usize, v: &[Scalar]| left_mul(bracket, i, v);
    let right = |v: &[Scalar], i: usize| right_mul(bracket, v, i);
    let yz = bracket.row(&[y, z]);
    let xy = bracket.row(&[x, y]);
    let xz = bracket.row(&[x, z]);
    let lhs = act(x, yz);
    let a = right(xy, z);
    let b = act(y, xz);
    lhs.iter()
        .zip(&a)
        .zip(&b)
        .map(|((l, a), b)| &(l - a) - b)
        .collect()
}

/// `m(e_i, v)` for a bilinear `m`.
pub(crate) fn left_mul(m: &MultiMap, i: usize, v: &[Scalar]) -> Vector {
    let mut out = vec![m.field().zero(); m.output()];
    for (t, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, w) in out.iter_mut().zip(m.row(&[i, t])) {
            if !w.is_zero() {
                o.add_product(c, w);
            }
        }
    }
    out
}

/// `m(v, e_i)` for a bilinear `m`.
pub(crate) fn right_mul(m: &MultiMap, v: &[Scalar], i: usize) -> Vector {
    let mut out = vec![m.field().zero(); m.output()];
    for (t, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, w) in out.iter_mut().zip(m.row(&[t, i])) {
            if !w.is_zero() {
                o.add_product(c, w);
            }
        }
    }
    out
}

pub fn check_leibniz(bracket: &MultiMap) -> Result<LeibnizReport> {
    LeibnizAlgebra::new(bracket.clone())?;
    let n = bracket.output();
    let mut violations = Vec::new();
    for t in MultiIndex::new(&[n, n, n]) {
        let residual = leibniz_residual(bracket, t[0], t[1], t[2]);
        if residual.iter().any(|c| !c.is_zero()) {
            violations.push(Violation {
                triple: [t[0], t[1], t[2]],
                residual,
            });
        }
    }
    let square = balavoine_bracket(bracket, bracket)?;
    let square_vanishes = square.is_zero();
    let diamond_vanishes = diamond(bracket, bracket)?.is_zero();
    Ok(LeibnizReport {
        holds: violations.is_empty(),
        violations,
        square,
        square_vanishes,
        diamond_vanishes,
    })
}

/// Pass/fail of one representation identity, with its violating triples
/// `(x, y, v)` as basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub holds: bool,
    pub identities: Vec<IdentityReport>,
}

pub fn check_representation(
    alg: &LeibnizAlgebra,
    rep: &Representation,
) -> Result<RepresentationReport> {
    rep.check_against(alg)?;
    let (g, v) = (alg.dim(), rep.dim_v());
    let b = alg.bracket();
    let (rl, rr) = (rep.rho_l(), rep.rho_r());
    let sub3 = |a: Vector, b: Vector, c: Vector| -> Vector {
        a.iter()
            .zip(&b)
            .zip(&c)
            .map(|((a, b), c)| &(a - b) - c)
            .collect()
    };
    type Residual<'a> = Box<dyn Fn(usize, usize, usize) -> Vector + 'a>;
    let identities: [(&'static str, Residual); 3] = [
        (
            "rhoL(x,rhoL(y,v)) = rhoL([x,y],v) + rhoL(y,rhoL(x,v))",
            Box::new(|x, y, w| {
                sub3(
                    left_mul(rl, x, rl.row(&[y, w])),
                    right_mul(rl, b.row(&[x, y]), w),
                    left_mul(rl, y, rl.row(&[x, w])),
                )
            }),
        ),
        (
            "rhoL(x,rhoR(v,y)) = rhoR(rhoL(x,v),y) + rhoR(v,[x,y])",
            Box::new(|x, y, w| {
                sub3(
                    left_mul(rl, x, rr.row(&[w, y])),
                    right_mul(rr, rl.row(&[x, w]), y),
                    left_mul(rr, w, b.row(&[x, y])),
                )
            }),
        ),
        (
            "rhoR(v,[x,y]) = rhoR(rhoR(v,x),y) + rhoL(x,rhoR(v,y))",
            Box::new(|x, y, w| {
                sub3(
                    left_mul(rr, w, b.row(&[x, y])),
                    right_mul(rr, rr.row(&[w, x]), y),
                    left_mul(rl, x, rr.row(&[w, y])),
                )
            }),
        ),
    ];
    let mut reports = Vec::new();
    for (name, residual) in identities {
        let mut violations = Vec::new();
        for t in MultiIndex::new(&[g, g, v]) {
            let r = residual(t[0], t[1], t[2]);
            if r.iter().any(|c| !c.is_zero()) {
                violations.push(Violation {
                    triple: [t[0], t[1], t[2]],
                    residual: r,
                });
            }
        }
        reports.push(IdentityReport {
            name,
            holds: violations.is_empty(),
            violations,
        });
    }
    Ok(RepresentationReport {
        holds: reports.iter().all(|r| r.holds),
        identities: reports,
    })
}

use rayon::prelude::*;

use super::algebra::{left_mul, right_mul, LeibnizAlgebra, Representation};
use crate::error::{shape, Error, Result};
use crate::exactlin::{rank, Matrix, Scalar, Vector};
use crate::multimap::{MultiIndex, MultiMap, ARITY_CAP};

/// `(δf)(x₁…x_{n+1}) = Σᵢ (−1)^{i+1} ρL(xᵢ, f(…x̂ᵢ…)) + (−1)^{n+1} ρR(f(x₁…xₙ), x_{n+1})
/// + Σ_{i<j} (−1)^i f(…x̂ᵢ…, [xᵢ,xⱼ], …)` with `[xᵢ,xⱼ]` in slot `j`.
///
/// At `n = 0` only the right-action term survives: `δv(x) = −ρR(v, x)`.
pub fn lp_coboundary(f: &MultiMap, alg: &LeibnizAlgebra, rep: &Representation) -> Result<MultiMap> {
    let (g, v) = (alg.dim(), rep.dim_v());
    let n = f.arity();
    if rep.dim_g() != g || f.inputs().iter().any(|&d| d != g) || f.output() != v {
        return Err(shape(format!(
            "cochain {:?}->{} does not match 𝔤 of dim {g} and V of dim {v}",
            f.inputs(),
            f.output()
        )));
    }
    if f.field() != alg.field() || rep.field() != alg.field() {
        return Err(Error::FieldMismatch(
            "cochain, algebra and representation".into(),
        ));
    }
    let field = f.field();
    let mut out = MultiMap::zeros(field, &vec![g; n + 1], v)?;
    let one = field.one();
    let minus = -field.one();
    let sign = |e: usize| if e.is_multiple_of(2) { &one } else { &minus };
    let (rl, rr, br) = (rep.rho_l(), rep.rho_r(), alg.bracket());
    let mut args = vec![0; n];
    for idx in MultiIndex::new(&vec![g; n + 1]) {
        let mut acc: Vector = vec![field.zero(); v];
        for i in 0..n {
            fill_without(&idx, i, &mut args);
            let term = left_mul(rl, idx[i], f.row(&args));
            axpy(&mut acc, sign(i), &term);
        }
        let term = right_mul(rr, f.row(&idx[..n]), idx[n]);
        axpy(&mut acc, sign(n + 1), &term);
        for i in 0..n + 1 {
            for j in i + 1..n + 1 {
                let w = br.row(&[idx[i], idx[j]]);
                if w.iter().all(Scalar::is_zero) {
                    continue;
                }
                fill_without(&idx, i, &mut args);
                let slot = j - 1;
                for (s, c) in w.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    args[slot] = s;
                    let coeff = c * sign(i + 1);
                    axpy(&mut acc, &coeff, f.row(&args));
                }
            }
        }
        out.row_mut(&idx).clone_from_slice(&acc);
    }
    Ok(out)
}

fn fill_without(idx: &[usize], skip: usize, args: &mut [usize]) {
    let mut k = 0;
    for (t, &i) in idx.iter().enumerate() {
        if t != skip {
            args[k] = i;
            k += 1;
        }
    }
}

fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            a.add_product(c, b);
        }
    }
}

/// Matrix of `δ: Cⁿ → Cⁿ⁺¹` on the standard cochain basis, ordered
/// lexicographically on input multi-indices and then by output index.
pub fn coboundary_matrix(alg: &LeibnizAlgebra, rep: &Representation, n: usize) -> Result<Matrix> {
    coboundary_matrix_with(alg.dim(), rep.dim_v(), n, alg.field(), |f| {
        lp_coboundary(f, alg, rep)
    })
}

/// Matrix of an arbitrary linear operator on cochains `Hom(𝔤^{⊗n}, V) → Hom(𝔤^{⊗n+1}, V)`.
pub fn coboundary_matrix_with(
    dim_g: usize,
    dim_v: usize,
    n: usize,
    field: crate::exactlin::Field,
    op: impl Fn(&MultiMap) -> Result<MultiMap> + Sync,
) -> Result<Matrix> {
    if n + 1 > ARITY_CAP {
        return Err(Error::ArityCapExceeded {
            arity: n + 1,
            cap: ARITY_CAP,
        });
    }
    let dom = dim_v * dim_g.pow(n as u32);
    let cod = dim_v * dim_g.pow(n as u32 + 1);
    let columns: Vec<Vector> = (0..dom)
        .into_par_iter()
        .map(|t| {
            let mut coeffs = vec![field.zero(); dom];
            coeffs[t] = field.one();
            let basis = MultiMap::from_flat(field, &vec![dim_g; n], dim_v, coeffs)?;
            Ok(op(&basis)?.coeffs().to_vec())
        })
        .collect::<Result<_>>()?;
    if dom == 0 {
        return Ok(Matrix::zeros(field, cod, 0));
    }
    Matrix::from_columns(field, cod, &columns)
}

/// Dimensions in degree `n`: cochains, cocycles, coboundaries and cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub n: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// `dim Hⁿ = dim ker δⁿ − rank δⁿ⁻¹` for `n = 0..=max_degree`.
pub fn cohomology_dimensions(
    alg: &LeibnizAlgebra,
    rep: &Representation,
    max_degree: usize,
) -> Result<Vec<CohomologyDims>> {
    cohomology_dimensions_with(alg.dim(), rep.dim_v(), max_degree, alg.field(), |f| {
        lp_coboundary(f, alg, rep)
    })
}

/// Cohomology dimensions of any complex on `Hom(𝔤^{⊗•}, V)`.
pub fn cohomology_dimensions_with(
    dim_g: usize,
    dim_v: usize,
    max_degree: usize,
    field: crate::exactlin::Field,
    op: impl Fn(&MultiMap) -> Result<MultiMap> + Sync,
) -> Result<Vec<CohomologyDims>> {
    if max_degree + 1 > ARITY_CAP {
        return Err(Error::ArityCapExceeded {
            arity: max_degree + 1,
            cap: ARITY_CAP,
        });
    }
    let ranks: Vec<usize> = (0..=max_degree)
        .map(|n| coboundary_matrix_with(dim_g, dim_v, n, field, &op).map(|m| rank(&m)))
        .collect::<Result<_>>()?;
    Ok((0..=max_degree)
        .map(|n| {
            let cochains = dim_v * dim_g.pow(n as u32);
            let cocycles = cochains - ranks[n];
            let coboundaries = if n == 0 { 0 } else { ranks[n - 1] };
            CohomologyDims {
                n,
                cochains,
                cocycles,
                coboundaries,
                cohomology: cocycles - coboundaries,
            }
        })
        .collect())
}

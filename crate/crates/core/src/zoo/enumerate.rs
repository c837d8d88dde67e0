use rayon::prelude::*;

use super::build::{build, ExampleInputs, ExampleKind};
use crate::error::{shape, Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::leibniz::LeibnizAlgebra;
use crate::multimap::MultiMap;
use crate::prototwilled::{is_deformation_map, OmegaStructure};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// `p^(dim_in · dim_out)`, saturating.
pub fn candidate_count(field: Field, dim_in: usize, dim_out: usize) -> Result<u128> {
    let p = match field {
        Field::Prime(p) => p as u128,
        Field::Rational => {
            return Err(Error::FieldMismatch(
                "exhaustive scans need a finite field".into(),
            ))
        }
    };
    let exp = u32::try_from(dim_in * dim_out).unwrap_or(u32::MAX);
    Ok(p.checked_pow(exp).unwrap_or(u128::MAX))
}

/// The `t`-th map `𝔽_p^{dim_in} → 𝔽_p^{dim_out}`: base-`p` digits of `t`, least
/// significant first, fill the coefficient matrix column by column.
pub fn linear_map_from_index(field: Field, dim_in: usize, dim_out: usize, mut t: u128) -> MultiMap {
    let p = field.characteristic() as u128;
    let mut r = MultiMap::zeros(field, &[dim_in], dim_out).expect("arity 1");
    for j in 0..dim_in {
        for i in 0..dim_out {
            r.set(&[j], i, field.from_i64((t % p) as i64));
            t /= p;
        }
    }
    r
}

fn scan_range(field: Field, dim_in: usize, dim_out: usize, budget: u128) -> Result<u64> {
    let needed = candidate_count(field, dim_in, dim_out)?;
    if needed > budget || needed > u64::MAX as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

/// Every linear map `dim_in → dim_out` in enumeration order.
pub fn all_linear_maps(
    field: Field,
    dim_in: usize,
    dim_out: usize,
    budget: u128,
) -> Result<Vec<MultiMap>> {
    let n = scan_range(field, dim_in, dim_out, budget)?;
    Ok((0..n)
        .map(|t| linear_map_from_index(field, dim_in, dim_out, t as u128))
        .collect())
}

/// All deformation maps of `s` over a prime field, by exhaustive parallel scan, in
/// enumeration order.
pub fn enumerate_deformation_maps(s: &OmegaStructure, budget: u128) -> Result<Vec<MultiMap>> {
    let (field, h, g) = (s.field(), s.space().dim_h(), s.space().dim_g());
    let n = scan_range(field, h, g, budget)?;
    let found: Vec<Option<MultiMap>> = (0..n)
        .into_par_iter()
        .map(|t| {
            let r = linear_map_from_index(field, h, g, t as u128);
            Ok(is_deformation_map(s, &r)?.is_deformation_map.then_some(r))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Semidirect product `𝔤 ⊕ 𝔤*` with the coadjoint representation and the map
/// `s♯: 𝔤* → 𝔤`, `s♯(e_a*) = Σ_b s_ab e_b`. `s` is an r-matrix iff `s♯` is a deformation map.
pub fn r_matrix_host(alg: &LeibnizAlgebra, s: &Matrix) -> Result<(OmegaStructure, MultiMap)> {
    let n = alg.dim();
    if s.rows() != n || s.cols() != n {
        return Err(shape(format!(
            "a form on a {n}-dimensional dual needs an {n}×{n} matrix"
        )));
    }
    if s.field() != alg.field() {
        return Err(Error::FieldMismatch("form and algebra".into()));
    }
    if *s != s.transpose() {
        return Err(Error::NotSymmetric);
    }
    let host = build(ExampleKind::RMatrixHost, &ExampleInputs::new(alg.clone()))?;
    let sharp = MultiMap::from_fn(alg.field(), &[n], n, |idx, b| s.get(idx[0], b).clone())?;
    Ok((host, sharp))
}

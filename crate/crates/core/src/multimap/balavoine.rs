//! The diamond product and the Balavoine bracket on `⊕ₙ Hom(V^{⊗n+1}, V)`.

use super::map::{MultiIndex, MultiMap};
use crate::error::{shape, Error, Result};

/// A `(p, q)`-shuffle: `first` and `second` are the increasing position lists
/// of the two blocks, `sign` is `(−1)^{inversions}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub sign: i64,
}

impl Shuffle {
    /// The permutation as a sequence: `σ(0..p) = first`, `σ(p..) = second`.
    pub fn as_permutation(&self) -> Vec<usize> {
        self.first.iter().chain(&self.second).copied().collect()
    }
}

/// All `(p, q)`-shuffles of `0..p+q`, lexicographic in the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    combinations(n, p, 0, &mut chosen, &mut out);
    out.into_iter()
        .map(|first| {
            let second: Vec<usize> = (0..n).filter(|i| !first.contains(i)).collect();
            let inversions: usize = first
                .iter()
                .map(|a| second.iter().filter(|&&b| b < *a).count())
                .sum();
            Shuffle {
                first,
                second,
                sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
            }
        })
        .collect()
}

fn combinations(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == k {
        out.push(chosen.clone());
        return;
    }
    for i in start..n {
        if n - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        combinations(n, k, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Sign of an arbitrary permutation of `0..n`.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_compatible(f: &MultiMap, g: &MultiMap) -> Result<usize> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(format!(
            "{} vs {}",
            f.field(),
            g.field()
        )));
    }
    if f.arity() == 0 || g.arity() == 0 {
        return Err(shape("the diamond product needs arity at least 1"));
    }
    let dim = f.output();
    if !f.is_square() || !g.is_square() || g.output() != dim {
        return Err(Error::SpaceMismatch(format!(
            "{:?}->{} and {:?}->{}",
            f.inputs(),
            f.output(),
            g.inputs(),
            g.output()
        )));
    }
    Ok(dim)
}

/// `f ⋄ g = Σᵢ (−1)^{(i−1)(n−1)} Σ_{σ ∈ S(i−1,n−1)} sgn(σ)
/// f(x_{σ(1)},…,x_{σ(i−1)}, g(x_{σ(i)},…,x_{σ(i+n−2)}, x_{i+n−1}), x_{i+n},…)`.
pub fn diamond(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let dim = check_compatible(f, g)?;
    let (m, n) = (f.arity(), g.arity());
    let total = m + n - 1;
    let field = f.field();
    let mut out = MultiMap::square_zeros(field, dim, total)?;
    if f.is_zero() || g.is_zero() {
        return Ok(out);
    }
    let signs: Vec<_> = [field.one(), -field.one()].into();
    let mut g_args = vec![0; n];
    let mut f_args = vec![0; m];
    for i in 1..=m {
        let outer = if ((i - 1) * (n - 1)) % 2 == 0 { 1 } else { -1 };
        let block = shuffles(i - 1, n - 1);
        for idx in MultiIndex::new(&vec![dim; total]) {
            for sh in &block {
                let sign = outer * sh.sign;
                for (k, &pos) in sh.second.iter().enumerate() {
                    g_args[k] = idx[pos];
                }
                g_args[n - 1] = idx[i + n - 2];
                let inner = g.row(&g_args);
                if inner.iter().all(|c| c.is_zero()) {
                    continue;
                }
                for (k, &pos) in sh.first.iter().enumerate() {
                    f_args[k] = idx[pos];
                }
                for k in i..m {
                    f_args[k] = idx[k + n - 1];
                }
                let s = &signs[usize::from(sign < 0)];
                for (t, c) in inner.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    f_args[i - 1] = t;
                    let coeff = c * s;
                    let row_f = f.row(&f_args).to_vec();
                    for (o, v) in out.row_mut(&idx).iter_mut().zip(&row_f) {
                        if !v.is_zero() {
                            o.add_product(&coeff, v);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `⟦f,g⟧ = f ⋄ g − (−1)^{(m−1)(n−1)} g ⋄ f`.
pub fn balavoine_bracket(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    check_compatible(f, g)?;
    let mut out = diamond(f, g)?;
    let gf = diamond(g, f)?;
    let odd = ((f.arity() - 1) * (g.arity() - 1)) % 2 == 1;
    let c = if odd {
        f.field().one()
    } else {
        -f.field().one()
    };
    out.add_scaled(&c, &gf)?;
    Ok(out)
}

/// Nested bracket `⟦…⟦⟦f, a₁⟧, a₂⟧ …, aₖ⟧`.
pub fn nested_bracket(f: &MultiMap, args: &[&MultiMap]) -> Result<MultiMap> {
    let mut acc = f.clone();
    for a in args {
        acc = balavoine_bracket(&acc, a)?;
    }
    Ok(acc)
}

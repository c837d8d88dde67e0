use super::element::GradedElement;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};
use crate::multimap::shuffles;

/// Where an L∞ structure came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Controlling,
    Twisted,
    Pair,
    /// Pair algebra restricted to a proper bidegree subalgebra.
    Specialized,
}

/// A curved L∞ algebra with degree-1 graded-symmetric structure maps
/// `l₀, l₁, …, l_K`; `l_k = 0` for `k > K`.
pub trait CurvedLInfty: Sync {
    fn field(&self) -> Field;
    fn truncation(&self) -> usize;
    fn provenance(&self) -> Provenance;
    /// `l₀`, of degree 1.
    fn curvature(&self) -> Result<GradedElement>;
    /// `l_k(x₁, …, x_k)` for `1 ≤ k ≤ K`.
    fn bracket(&self, args: &[&GradedElement]) -> Result<GradedElement>;
}

/// `l_k` for any `k ≥ 0`, zero past the truncation.
pub fn apply<L: CurvedLInfty + ?Sized>(l: &L, args: &[&GradedElement]) -> Result<GradedElement> {
    if args.is_empty() {
        return l.curvature();
    }
    if args.len() > l.truncation() {
        return Ok(GradedElement::zero(
            args.iter().map(|a| a.degree()).sum::<i64>() + 1,
        ));
    }
    l.bracket(args)
}

fn inverse_factorial(field: Field, n: usize) -> Result<Scalar> {
    let fact: i64 = (1..=n as i64).product();
    field.inverse_of(fact)
}

/// `l₀ + Σ_{k=1}^{K} (1/k!) l_k(α, …, α)` for `α` of degree 0.
pub fn mc_defect<L: CurvedLInfty + ?Sized>(l: &L, alpha: &GradedElement) -> Result<GradedElement> {
    if alpha.degree() != 0 {
        return Err(Error::Degree(format!(
            "Maurer-Cartan elements have degree 0, got {}",
            alpha.degree()
        )));
    }
    let field = l.field();
    field.require_invertible_up_to(l.truncation() as u64, "the Maurer-Cartan sum divides by k!")?;
    let mut acc = l.curvature()?;
    for k in 1..=l.truncation() {
        let args = vec![alpha; k];
        acc.add_scaled(&inverse_factorial(field, k)?, &l.bracket(&args)?)?;
    }
    Ok(acc)
}

/// Twist by a Maurer-Cartan element:
/// `l_k^α(x₁…x_k) = Σ_{n=0}^{K−k} (1/n!) l_{n+k}(α, …, α, x₁, …, x_k)`; flat by construction.
pub struct Twisted<L> {
    inner: L,
    alpha: GradedElement,
}

impl<L: CurvedLInfty> Twisted<L> {
    pub fn new(inner: L, alpha: GradedElement) -> Result<Self> {
        if !mc_defect(&inner, &alpha)?.is_zero() {
            return Err(Error::NotMaurerCartan);
        }
        Ok(Twisted { inner, alpha })
    }

    pub fn inner(&self) -> &L {
        &self.inner
    }

    pub fn alpha(&self) -> &GradedElement {
        &self.alpha
    }
}

impl<L: CurvedLInfty> CurvedLInfty for Twisted<L> {
    fn field(&self) -> Field {
        self.inner.field()
    }

    fn truncation(&self) -> usize {
        self.inner.truncation()
    }

    fn provenance(&self) -> Provenance {
        Provenance::Twisted
    }

    fn curvature(&self) -> Result<GradedElement> {
        Ok(GradedElement::zero(1))
    }

    fn bracket(&self, args: &[&GradedElement]) -> Result<GradedElement> {
        let k = args.len();
        let k_max = self.truncation();
        let mut acc = GradedElement::zero(args.iter().map(|a| a.degree()).sum::<i64>() + 1);
        for n in 0..=k_max.saturating_sub(k) {
            let mut full: Vec<&GradedElement> = vec![&self.alpha; n];
            full.extend_from_slice(args);
            let term = apply(&self.inner, &full)?;
            acc.add_scaled(&inverse_factorial(self.field(), n)?, &term)?;
        }
        Ok(acc)
    }
}

fn koszul_shuffle_sign(first: &[usize], second: &[usize], degrees: &[i64]) -> i64 {
    let mut odd = false;
    for &a in first {
        for &b in second {
            if b < a && degrees[a] % 2 != 0 && degrees[b] % 2 != 0 {
                odd = !odd;
            }
        }
    }
    if odd {
        -1
    } else {
        1
    }
}

/// `Σ_{i=0}^{N} Σ_{σ ∈ Sh(i,N−i)} ε(σ) l_{N−i+1}(l_i(x_{σ(1)}…x_{σ(i)}), x_{σ(i+1)}…x_{σ(N)})`.
pub fn jacobi_residual<L: CurvedLInfty + ?Sized>(
    l: &L,
    xs: &[GradedElement],
) -> Result<GradedElement> {
    let n = xs.len();
    let degrees: Vec<i64> = xs.iter().map(GradedElement::degree).collect();
    let field = l.field();
    let mut acc = GradedElement::zero(degrees.iter().sum::<i64>() + 2);
    for i in 0..=n {
        for sh in shuffles(i, n - i) {
            let inner_args: Vec<&GradedElement> = sh.first.iter().map(|&a| &xs[a]).collect();
            let inner = apply(l, &inner_args)?;
            if inner.is_zero() {
                continue;
            }
            let mut outer_args: Vec<&GradedElement> = vec![&inner];
            outer_args.extend(sh.second.iter().map(|&b| &xs[b]));
            let term = apply(l, &outer_args)?;
            let sign = koszul_shuffle_sign(&sh.first, &sh.second, &degrees);
            acc.add_scaled(&field.from_i64(sign), &term)?;
        }
    }
    Ok(acc)
}

/// `l_k(…, x, y, …) − (−1)^{|x||y|} l_k(…, y, x, …)` for each adjacent transposition.
pub fn symmetry_residuals<L: CurvedLInfty + ?Sized>(
    l: &L,
    xs: &[GradedElement],
) -> Result<Vec<GradedElement>> {
    let refs: Vec<&GradedElement> = xs.iter().collect();
    let base = apply(l, &refs)?;
    let mut out = Vec::new();
    for i in 0..xs.len().saturating_sub(1) {
        let mut swapped = refs.clone();
        swapped.swap(i, i + 1);
        let sign = if xs[i].degree() % 2 != 0 && xs[i + 1].degree() % 2 != 0 {
            1
        } else {
            -1
        };
        let mut r = base.clone();
        r.add_scaled(&l.field().from_i64(sign), &apply(l, &swapped)?)?;
        out.push(r);
    }
    Ok(out)
}

/// Outcome of evaluating the L∞ identities on sample elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInftyReport {
    pub holds: bool,
    pub evaluated: usize,
    /// `(identity, sample indices)` of each nonzero residual.
    pub failures: Vec<(String, Vec<usize>)>,
}

fn multisets(len: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(len, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Generalized Jacobi identities for `N = 0..=max_n` on every multiset of samples.
pub fn check_l_infinity_identities<L: CurvedLInfty + ?Sized>(
    l: &L,
    samples: &[GradedElement],
    max_n: usize,
) -> Result<LInftyReport> {
    let mut failures = Vec::new();
    let mut evaluated = 0;
    for n in 0..=max_n {
        for idx in multisets(samples.len(), n) {
            let xs: Vec<GradedElement> = idx.iter().map(|&i| samples[i].clone()).collect();
            evaluated += 1;
            if !jacobi_residual(l, &xs)?.is_zero() {
                failures.push((format!("jacobi N={n}"), idx));
            }
        }
    }
    Ok(LInftyReport {
        holds: failures.is_empty(),
        evaluated,
        failures,
    })
}

/// Graded symmetry of `l_k` for `k = 2..=max_k` on every ordered tuple of samples.
pub fn check_graded_symmetry<L: CurvedLInfty + ?Sized>(
    l: &L,
    samples: &[GradedElement],
    max_k: usize,
) -> Result<LInftyReport> {
    let mut failures = Vec::new();
    let mut evaluated = 0;
    for k in 2..=max_k.min(l.truncation()) {
        for idx in crate::multimap::MultiIndex::new(&vec![samples.len(); k]) {
            let xs: Vec<GradedElement> = idx.iter().map(|&i| samples[i].clone()).collect();
            for (t, r) in symmetry_residuals(l, &xs)?.into_iter().enumerate() {
                evaluated += 1;
                if !r.is_zero() {
                    failures.push((format!("l{k} transposition {t}"), idx.clone()));
                }
            }
        }
    }
    Ok(LInftyReport {
        holds: failures.is_empty(),
        evaluated,
        failures,
    })
}

//! Oracles for the integration suites. They share only scalar arithmetic with the
//! engine: brackets are expanded from structure constants, the induced structure is
//! read off the graph, and ranks come from a separate elimination.

#![allow(dead_code)]

use deformap::multimap::MultiIndex;
use deformap::prototwilled::OmegaStructure;
use deformap::{Field, MultiMap, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over 𝔽_p; over ℚ, `a/b` with `|a| ≤ 3`, `1 ≤ b ≤ 3`.
pub fn random_scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rational => field
            .ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
            .expect("nonzero denominator"),
    }
}

pub fn random_map(field: Field, inputs: &[usize], output: usize, rng: &mut impl Rng) -> MultiMap {
    let len = inputs.iter().product::<usize>() * output;
    let coeffs = (0..len).map(|_| random_scalar(field, rng)).collect();
    MultiMap::from_flat(field, inputs, output, coeffs).expect("shape")
}

fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += &(c * b);
    }
}

/// `Σ aᵢ bⱼ [eᵢ, eⱼ]` from the structure constants of a bilinear map.
pub fn bilinear(b: &MultiMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = zeros(b.field(), b.output());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            axpy(&mut out, &(xi * yj), b.row(&[i, j]));
        }
    }
    out
}

/// Image of a vector under a linear map stored as `[input] -> [output]`.
pub fn linear(r: &MultiMap, u: &[Scalar]) -> Vec<Scalar> {
    let mut out = zeros(r.field(), r.output());
    for (i, ui) in u.iter().enumerate() {
        axpy(&mut out, ui, r.row(&[i]));
    }
    out
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

/// Leibniz identity `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` on all basis triples.
pub fn is_leibniz(b: &MultiMap) -> bool {
    let n = b.output();
    let f = b.field();
    let e = |i| unit(f, n, i);
    MultiIndex::new(&[n, n, n]).all(|t| {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        let lhs = bilinear(b, &x, &bilinear(b, &y, &z));
        let mut rhs = bilinear(b, &bilinear(b, &x, &y), &z);
        axpy(&mut rhs, &f.one(), &bilinear(b, &y, &bilinear(b, &x, &z)));
        lhs == rhs
    })
}

/// The split structure read directly from `Ω`'s structure constants.
pub struct Graph<'a> {
    pub omega: &'a MultiMap,
    pub field: Field,
    pub g: usize,
    pub h: usize,
}

impl<'a> Graph<'a> {
    pub fn new(s: &'a OmegaStructure) -> Self {
        Graph {
            omega: s.omega(),
            field: s.field(),
            g: s.space().dim_g(),
            h: s.space().dim_h(),
        }
    }

    fn split(&self, w: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
        let h = w[self.g..].to_vec();
        let mut g = w;
        g.truncate(self.g);
        (g, h)
    }

    /// `(r eᵤ, eᵤ)` in `𝔤 ⊕ 𝔥`.
    pub fn graph_vector(&self, r: &MultiMap, u: usize) -> Vec<Scalar> {
        let mut v = r.row(&[u]).to_vec();
        v.extend(unit(self.field, self.h, u));
        v
    }

    pub fn g_vector(&self, x: usize) -> Vec<Scalar> {
        let mut v = unit(self.field, self.g, x);
        v.extend(zeros(self.field, self.h));
        v
    }

    /// True iff the graph of `r` is closed under the bracket.
    pub fn is_deformation_map(&self, r: &MultiMap) -> bool {
        MultiIndex::new(&[self.h, self.h]).all(|p| {
            let w = bilinear(
                self.omega,
                &self.graph_vector(r, p[0]),
                &self.graph_vector(r, p[1]),
            );
            let (a, b) = self.split(w);
            a == linear(r, &b)
        })
    }

    /// Projection of `(a, b)` onto `𝔤` along the graph: `a − r b`.
    fn along_graph(&self, r: &MultiMap, w: Vec<Scalar>) -> Vec<Scalar> {
        let (mut a, b) = self.split(w);
        axpy(&mut a, &(-self.field.one()), &linear(r, &b));
        a
    }

    /// `[u,v]_r`, `ψL_r(u,x)` and `ψR_r(x,u)` from brackets of graph and `𝔤` vectors.
    pub fn induced(&self, r: &MultiMap) -> (MultiMap, MultiMap, MultiMap) {
        let f = self.field;
        let bracket = MultiMap::from_rows(f, &[self.h, self.h], self.h, |p| {
            let w = bilinear(
                self.omega,
                &self.graph_vector(r, p[0]),
                &self.graph_vector(r, p[1]),
            );
            self.split(w).1
        })
        .expect("shape");
        let left = MultiMap::from_rows(f, &[self.h, self.g], self.g, |p| {
            let w = bilinear(
                self.omega,
                &self.graph_vector(r, p[0]),
                &self.g_vector(p[1]),
            );
            self.along_graph(r, w)
        })
        .expect("shape");
        let right = MultiMap::from_rows(f, &[self.g, self.h], self.g, |p| {
            let w = bilinear(
                self.omega,
                &self.g_vector(p[0]),
                &self.graph_vector(r, p[1]),
            );
            self.along_graph(r, w)
        })
        .expect("shape");
        (bracket, left, right)
    }
}

/// Matrix of the Leibniz coboundary `Cⁿ → Cⁿ⁺¹` of an algebra `a` (dim `d`) with
/// coefficients in `V` (dim `v`), left action `L: 𝔞⊗V→V`, right action `R: V⊗𝔞→V`.
/// Rows and columns are cochain coefficients in `(inputs, output)` lexicographic order.
pub fn coboundary_matrix(
    a: &MultiMap,
    left: &MultiMap,
    right: &MultiMap,
    n: usize,
) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let d = a.output();
    let v = left.output();
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            f.one()
        } else {
            -f.one()
        }
    };
    let col_count = d.pow(n as u32) * v;
    let row_count = d.pow(n as u32 + 1) * v;
    let flat = |idx: &[usize], j: usize| idx.iter().fold(0, |acc, &i| acc * d + i) * v + j;
    let mut m = vec![vec![f.zero(); col_count]; row_count];
    // Column for the basis cochain sending the tensor `c_idx` to `e_{c_j}`.
    for c_idx in MultiIndex::new(&vec![d; n]) {
        for c_j in 0..v {
            let col = flat(&c_idx, c_j);
            let cochain = |args: &[usize]| -> Vec<Scalar> {
                if args == &c_idx[..] {
                    unit(f, v, c_j)
                } else {
                    zeros(f, v)
                }
            };
            for x in MultiIndex::new(&vec![d; n + 1]) {
                let mut acc = zeros(f, v);
                for i in 0..n {
                    let rest: Vec<usize> = (0..=n).filter(|&t| t != i).map(|t| x[t]).collect();
                    let val = cochain(&rest);
                    let term = bilinear(left, &unit(f, d, x[i]), &val);
                    axpy(&mut acc, &sign(i), &term);
                }
                let term = bilinear(right, &cochain(&x[..n]), &unit(f, d, x[n]));
                axpy(&mut acc, &sign(n + 1), &term);
                for i in 0..=n {
                    for j in i + 1..=n {
                        let w = a.row(&[x[i], x[j]]).to_vec();
                        for (s, c) in w.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let args: Vec<usize> = x
                                .iter()
                                .enumerate()
                                .filter(|&(t, _)| t != i)
                                .map(|(t, &xt)| if t == j { s } else { xt })
                                .collect();
                            axpy(&mut acc, &(c * &sign(i + 1)), &cochain(&args));
                        }
                    }
                }
                for (j, val) in acc.into_iter().enumerate() {
                    m[flat(&x, j)][col] = val;
                }
            }
        }
    }
    m
}

/// Rank by fraction-free row reduction over the field.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = &(&*x * &pivot) - &(&factor * y);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn mat_mul_is_zero(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().all(|row| {
        (0..cols).all(|c| {
            let mut acc = row[0].field().zero();
            for k in 0..inner {
                acc += &(&row[k] * &b[k][c]);
            }
            acc.is_zero()
        })
    })
}

/// `dim Hⁿ` for `n = 0..=max` by rank-nullity on the oracle matrices.
pub fn cohomology_dims(a: &MultiMap, left: &MultiMap, right: &MultiMap, max: usize) -> Vec<usize> {
    let d = a.output();
    let v = left.output();
    let ranks: Vec<usize> = (0..=max)
        .map(|n| rank(coboundary_matrix(a, left, right, n)))
        .collect();
    (0..=max)
        .map(|n| {
            let cochains = d.pow(n as u32) * v;
            let prev = if n == 0 { 0 } else { ranks[n - 1] };
            cochains - ranks[n] - prev
        })
        .collect()
}

/// Bidegree `k` of a coefficient with `g_count` inputs from `𝔤` and output in `𝔤` or `𝔥`.
pub fn coefficient_k(g_count: usize, output_in_g: bool) -> i64 {
    if output_in_g {
        g_count as i64 - 1
    } else {
        g_count as i64
    }
}

/// Set of `k` values over the nonzero coefficients of a map on `𝔤 ⊕ 𝔥`.
pub fn k_values(f: &MultiMap, dim_g: usize) -> std::collections::BTreeSet<i64> {
    let mut out = std::collections::BTreeSet::new();
    for idx in MultiIndex::new(f.inputs()) {
        let gc = idx.iter().filter(|&&i| i < dim_g).count();
        for (j, c) in f.row(&idx).iter().enumerate() {
            if !c.is_zero() {
                out.insert(coefficient_k(gc, j < dim_g));
            }
        }
    }
    out
}

//! Bidegrees, block maps and horizontal lifts on `𝒢 = 𝔤 ⊕ 𝔥`.

use std::fmt;

use super::map::{MultiIndex, MultiMap};
use crate::error::{shape, Error, Result};
use crate::exactlin::{Field, Scalar, Vector};

/// Summand of the split space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    G,
    H,
}

/// `𝒢 = 𝔤 ⊕ 𝔥` with basis indices `0..dim_g` spanning `𝔤` and the rest `𝔥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitSpace {
    field: Field,
    dim_g: usize,
    dim_h: usize,
}

impl SplitSpace {
    pub fn new(field: Field, dim_g: usize, dim_h: usize) -> Result<Self> {
        if dim_g + dim_h == 0 {
            return Err(shape("split space of total dimension 0"));
        }
        Ok(SplitSpace {
            field,
            dim_g,
            dim_h,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    pub fn dim(&self) -> usize {
        self.dim_g + self.dim_h
    }

    pub fn dim_of(&self, part: Part) -> usize {
        match part {
            Part::G => self.dim_g,
            Part::H => self.dim_h,
        }
    }

    pub fn part_of(&self, index: usize) -> Part {
        if index < self.dim_g {
            Part::G
        } else {
            Part::H
        }
    }

    /// Index inside the summand.
    pub fn local(&self, index: usize) -> usize {
        if index < self.dim_g {
            index
        } else {
            index - self.dim_g
        }
    }

    pub fn global(&self, part: Part, local: usize) -> usize {
        match part {
            Part::G => local,
            Part::H => self.dim_g + local,
        }
    }

    /// `(x, u) ∈ 𝔤 ⊕ 𝔥` as a coordinate vector on `𝒢`.
    pub fn pair(&self, x: &[Scalar], u: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim_g || u.len() != self.dim_h {
            return Err(shape("pair components do not match the split"));
        }
        Ok(x.iter().chain(u).cloned().collect())
    }

    pub fn inject(&self, part: Part, v: &[Scalar]) -> Result<Vector> {
        let zero_g = vec![self.field.zero(); self.dim_g];
        let zero_h = vec![self.field.zero(); self.dim_h];
        match part {
            Part::G => self.pair(v, &zero_h),
            Part::H => self.pair(&zero_g, v),
        }
    }

    pub fn project(&self, part: Part, v: &[Scalar]) -> Vector {
        match part {
            Part::G => v[..self.dim_g].to_vec(),
            Part::H => v[self.dim_g..].to_vec(),
        }
    }

    fn check_on(&self, f: &MultiMap) -> Result<()> {
        if f.field() != self.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                f.field(),
                self.field
            )));
        }
        if !f.is_square() || f.output() != self.dim() {
            return Err(Error::SpaceMismatch(format!(
                "map {:?}->{} is not on a space of dimension {}",
                f.inputs(),
                f.output(),
                self.dim()
            )));
        }
        Ok(())
    }
}

/// `k|l` with `k + l = arity − 1`; maps of bidegree `k|l` send
/// `𝒢^{k+1,l}` into `𝔤`, `𝒢^{k,l+1}` into `𝔥` and everything else to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub k: i64,
    pub l: i64,
}

impl Bidegree {
    pub fn new(k: i64, l: i64) -> Self {
        Bidegree { k, l }
    }

    pub fn arity(&self) -> i64 {
        self.k + self.l + 1
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.k, self.l)
    }
}

/// Bidegree `k` of the coefficient at an input tuple with `g_count` entries
/// from `𝔤` and output in `part`.
fn coefficient_k(g_count: usize, part: Part) -> i64 {
    match part {
        Part::G => g_count as i64 - 1,
        Part::H => g_count as i64,
    }
}

fn g_count(space: &SplitSpace, idx: &[usize]) -> usize {
    idx.iter().filter(|&&i| space.part_of(i) == Part::G).count()
}

/// Components of `f` indexed by `k = n+1` down to `−1`; they sum to `f`.
pub fn bidegree_decompose(space: &SplitSpace, f: &MultiMap) -> Result<Vec<(Bidegree, MultiMap)>> {
    space.check_on(f)?;
    let arity = f.arity() as i64;
    if arity == 0 {
        return Err(shape("bidegree is defined for arity at least 1"));
    }
    let mut parts: Vec<(Bidegree, MultiMap)> = (-1..=arity)
        .rev()
        .map(|k| {
            (
                Bidegree::new(k, arity - 1 - k),
                MultiMap::zeros(space.field, f.inputs(), f.output()).expect("same shape as f"),
            )
        })
        .collect();
    for idx in MultiIndex::new(f.inputs()) {
        let c = g_count(space, &idx);
        for (j, v) in f.row(&idx).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let k = coefficient_k(c, space.part_of(j));
            let slot = (arity - k) as usize;
            parts[slot].1.set(&idx, j, v.clone());
        }
    }
    Ok(parts)
}

/// True when `f` lies in `C^{k|l}`; the zero map lies in every component.
pub fn has_bidegree(space: &SplitSpace, f: &MultiMap, b: Bidegree) -> bool {
    if space.check_on(f).is_err() || b.arity() != f.arity() as i64 {
        return false;
    }
    MultiIndex::new(f.inputs()).all(|idx| {
        let c = g_count(space, &idx);
        f.row(&idx)
            .iter()
            .enumerate()
            .all(|(j, v)| v.is_zero() || coefficient_k(c, space.part_of(j)) == b.k)
    })
}

/// The pure bidegree of a nonzero `f`; `None` for mixed maps and for zero.
pub fn bidegree_of(space: &SplitSpace, f: &MultiMap) -> Option<Bidegree> {
    space.check_on(f).ok()?;
    let arity = f.arity() as i64;
    let mut found: Option<i64> = None;
    for idx in MultiIndex::new(f.inputs()) {
        let c = g_count(space, &idx);
        for (j, v) in f.row(&idx).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let k = coefficient_k(c, space.part_of(j));
            match found {
                None => found = Some(k),
                Some(prev) if prev != k => return None,
                _ => {}
            }
        }
    }
    found.map(|k| Bidegree::new(k, arity - 1 - k))
}

/// Bidegrees spanning the sub-spaces singled out for twisting and for the
/// pair algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subspace {
    /// `𝔞 = ⊕ C^{−1|n+1}`.
    A,
    /// `𝓜 = ⊕_{k,l ≥ 0} C^{k|l}`.
    M,
    /// `𝓠 = ⊕_{k ≥ 0} C^{k|l}`.
    Q,
    /// `𝓡 = ⊕_{l ≥ 0} C^{k|l}`.
    R,
    /// `𝔅′ = ⊕ C^{n|0}`.
    BPrime,
    /// `𝔅″ = ⊕ (C^{n+1|−1} ⊕ C^{n|0})`.
    BDoublePrime,
    /// Everything.
    Full,
}

impl Subspace {
    pub fn contains_bidegree(self, b: Bidegree) -> bool {
        match self {
            Subspace::A => b.k == -1,
            Subspace::M => b.k >= 0 && b.l >= 0,
            Subspace::Q => b.k >= 0,
            Subspace::R => b.l >= 0,
            Subspace::BPrime => b.l == 0,
            Subspace::BDoublePrime => b.l == 0 || b.l == -1,
            Subspace::Full => true,
        }
    }

    /// True when every nonzero bidegree component of `f` lies in the subspace.
    pub fn contains(self, space: &SplitSpace, f: &MultiMap) -> Result<bool> {
        Ok(bidegree_decompose(space, f)?
            .iter()
            .all(|(b, c)| c.is_zero() || self.contains_bidegree(*b)))
    }

    /// Bidegrees outside the subspace where `f` has a nonzero component.
    pub fn violations(self, space: &SplitSpace, f: &MultiMap) -> Result<Vec<Bidegree>> {
        Ok(bidegree_decompose(space, f)?
            .into_iter()
            .filter(|(b, c)| !c.is_zero() && !self.contains_bidegree(*b))
            .map(|(b, _)| b)
            .collect())
    }
}

/// A map on one ordered block `P₁ ⊗ … ⊗ Pₖ → P_out` of summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMap {
    pub pattern: Vec<Part>,
    pub output: Part,
    pub map: MultiMap,
}

impl BlockMap {
    pub fn new(
        space: &SplitSpace,
        pattern: Vec<Part>,
        output: Part,
        map: MultiMap,
    ) -> Result<Self> {
        let dims: Vec<usize> = pattern.iter().map(|&p| space.dim_of(p)).collect();
        if map.inputs() != dims.as_slice() || map.output() != space.dim_of(output) {
            return Err(shape(format!(
                "block {pattern:?}->{output:?} needs {dims:?}->{}, got {:?}->{}",
                space.dim_of(output),
                map.inputs(),
                map.output()
            )));
        }
        if map.field() != space.field {
            return Err(Error::FieldMismatch("block map".into()));
        }
        Ok(BlockMap {
            pattern,
            output,
            map,
        })
    }

    pub fn zero(space: &SplitSpace, pattern: Vec<Part>, output: Part) -> Result<Self> {
        let dims: Vec<usize> = pattern.iter().map(|&p| space.dim_of(p)).collect();
        let map = MultiMap::zeros(space.field, &dims, space.dim_of(output))?;
        Ok(BlockMap {
            pattern,
            output,
            map,
        })
    }
}

/// `c̃`: agrees with `c` on its block and vanishes on every other block.
pub fn horizontal_lift(space: &SplitSpace, c: &BlockMap) -> Result<MultiMap> {
    let dims: Vec<usize> = c.pattern.iter().map(|&p| space.dim_of(p)).collect();
    if c.map.inputs() != dims.as_slice() || c.map.output() != space.dim_of(c.output) {
        return Err(shape("block map does not match the split space"));
    }
    let mut out = MultiMap::square_zeros(space.field, space.dim(), c.pattern.len())?;
    let mut global = vec![0; c.pattern.len()];
    for local in MultiIndex::new(&dims) {
        for (k, (&p, &i)) in c.pattern.iter().zip(&local).enumerate() {
            global[k] = space.global(p, i);
        }
        for (j, v) in c.map.row(&local).iter().enumerate() {
            if !v.is_zero() {
                out.set(&global, space.global(c.output, j), v.clone());
            }
        }
    }
    Ok(out)
}

/// Sum of the lifts of several blocks of one arity.
pub fn lift_sum(space: &SplitSpace, arity: usize, blocks: &[&BlockMap]) -> Result<MultiMap> {
    let mut out = MultiMap::square_zeros(space.field, space.dim(), arity)?;
    for b in blocks {
        if b.pattern.len() != arity {
            return Err(shape("blocks of different arity"));
        }
        out.add_assign(&horizontal_lift(space, b)?)?;
    }
    Ok(out)
}

/// Restriction of `f` to one block.
pub fn restrict(
    space: &SplitSpace,
    f: &MultiMap,
    pattern: &[Part],
    output: Part,
) -> Result<BlockMap> {
    space.check_on(f)?;
    if pattern.len() != f.arity() {
        return Err(shape("pattern length differs from the arity"));
    }
    let dims: Vec<usize> = pattern.iter().map(|&p| space.dim_of(p)).collect();
    let mut global = vec![0; pattern.len()];
    let map = MultiMap::from_fn(space.field, &dims, space.dim_of(output), |local, j| {
        for (k, (&p, &i)) in pattern.iter().zip(local).enumerate() {
            global[k] = space.global(p, i);
        }
        f.get(&global, space.global(output, j)).clone()
    })?;
    Ok(BlockMap {
        pattern: pattern.to_vec(),
        output,
        map,
    })
}

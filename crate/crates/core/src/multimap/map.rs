use std::fmt;

use crate::error::{shape, Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Vector};

/// Largest arity any map may have. Triple brackets of arity-3 maps reach 7.
pub const ARITY_CAP: usize = 7;

/// A multilinear map `V₁ ⊗ … ⊗ Vₖ → W` stored as dense structure constants.
///
/// Coefficients are laid out row-major over the input multi-index with the
/// output coordinate innermost, so `row(idx)` is the image of the basis
/// tensor `e_{idx₁} ⊗ … ⊗ e_{idxₖ}`. Arity 0 encodes a plain vector of `W`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiMap {
    field: Field,
    inputs: Vec<usize>,
    output: usize,
    coeffs: Vec<Scalar>,
}

impl MultiMap {
    pub fn zeros(field: Field, inputs: &[usize], output: usize) -> Result<Self> {
        check_arity(inputs.len())?;
        let len = inputs.iter().product::<usize>() * output;
        Ok(MultiMap {
            field,
            inputs: inputs.to_vec(),
            output,
            coeffs: vec![field.zero(); len],
        })
    }

    /// Zero map `V^{⊗arity} → V` with `dim V = dim`.
    pub fn square_zeros(field: Field, dim: usize, arity: usize) -> Result<Self> {
        Self::zeros(field, &vec![dim; arity], dim)
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        let mut m = Self::square_zeros(field, dim, 1).expect("arity 1 is within the cap");
        for i in 0..dim {
            m.set(&[i], i, field.one());
        }
        m
    }

    /// Builds a map from a coefficient function `(input index, output index) ↦ scalar`.
    pub fn from_fn(
        field: Field,
        inputs: &[usize],
        output: usize,
        mut coeff: impl FnMut(&[usize], usize) -> Scalar,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, inputs, output)?;
        for idx in MultiIndex::new(inputs) {
            for j in 0..output {
                let v = coeff(&idx, j);
                if v.field() != field {
                    return Err(Error::FieldMismatch(format!("coefficient at {idx:?}/{j}")));
                }
                m.set(&idx, j, v);
            }
        }
        Ok(m)
    }

    /// Builds a map whose value on each basis tensor is the given row.
    pub fn from_rows(
        field: Field,
        inputs: &[usize],
        output: usize,
        mut row: impl FnMut(&[usize]) -> Vector,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, inputs, output)?;
        for idx in MultiIndex::new(inputs) {
            let r = row(&idx);
            if r.len() != output {
                return Err(shape(format!(
                    "row of length {} for output dim {output}",
                    r.len()
                )));
            }
            for (j, v) in r.into_iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch(format!("coefficient at {idx:?}/{j}")));
                }
                m.set(&idx, j, v);
            }
        }
        Ok(m)
    }

    /// Builds from flat coefficients in storage order.
    pub fn from_flat(
        field: Field,
        inputs: &[usize],
        output: usize,
        coeffs: Vec<Scalar>,
    ) -> Result<Self> {
        check_arity(inputs.len())?;
        let len = inputs.iter().product::<usize>() * output;
        if coeffs.len() != len {
            return Err(shape(format!(
                "{} coefficients, expected {len}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch("flat coefficients".into()));
        }
        Ok(MultiMap {
            field,
            inputs: inputs.to_vec(),
            output,
            coeffs,
        })
    }

    /// A linear map given by its matrix (columns are images of basis vectors).
    pub fn from_matrix(m: &Matrix) -> Self {
        Self::from_fn(m.field(), &[m.cols()], m.rows(), |idx, j| {
            m.get(j, idx[0]).clone()
        })
        .expect("arity 1 is within the cap")
    }

    /// A vector viewed as an arity-0 map.
    pub fn from_vector(field: Field, v: &[Scalar]) -> Self {
        MultiMap {
            field,
            inputs: Vec::new(),
            output: v.len(),
            coeffs: v.to_vec(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity() != 1 {
            return Err(shape(format!("arity {} map is not linear", self.arity())));
        }
        let mut m = Matrix::zeros(self.field, self.output, self.inputs[0]);
        for i in 0..self.inputs[0] {
            for j in 0..self.output {
                m.set(j, i, self.get(&[i], j).clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// True when every input and the output share one dimension.
    pub fn is_square(&self) -> bool {
        self.inputs.iter().all(|&d| d == self.output)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub(crate) fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.inputs.len());
        let mut flat = 0;
        for (&i, &d) in idx.iter().zip(&self.inputs) {
            debug_assert!(i < d);
            flat = flat * d + i;
        }
        flat * self.output
    }

    pub fn get(&self, idx: &[usize], j: usize) -> &Scalar {
        &self.coeffs[self.offset(idx) + j]
    }

    pub fn set(&mut self, idx: &[usize], j: usize, v: Scalar) {
        let o = self.offset(idx);
        self.coeffs[o + j] = v;
    }

    /// Image of a basis tensor.
    pub fn row(&self, idx: &[usize]) -> &[Scalar] {
        let o = self.offset(idx);
        &self.coeffs[o..o + self.output]
    }

    pub(crate) fn row_mut(&mut self, idx: &[usize]) -> &mut [Scalar] {
        let o = self.offset(idx);
        &mut self.coeffs[o..o + self.output]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity() {
            return Err(shape(format!(
                "{} arguments for an arity-{} map",
                args.len(),
                self.arity()
            )));
        }
        for (k, (a, &d)) in args.iter().zip(&self.inputs).enumerate() {
            if a.len() != d {
                return Err(shape(format!(
                    "argument {k} has length {} instead of {d}",
                    a.len()
                )));
            }
            if a.iter().any(|s| s.field() != self.field) {
                return Err(Error::FieldMismatch(format!("argument {k}")));
            }
        }
        let mut out = vec![self.field.zero(); self.output];
        for idx in MultiIndex::new(&self.inputs) {
            let mut weight = self.field.one();
            for (k, &i) in idx.iter().enumerate() {
                let a = &args[k][i];
                if a.is_zero() {
                    weight = self.field.zero();
                    break;
                }
                weight = &weight * a;
            }
            if weight.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.row(&idx)) {
                if !c.is_zero() {
                    o.add_product(&weight, c);
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, rhs: &MultiMap) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, rhs.field
            )));
        }
        if self.inputs != rhs.inputs || self.output != rhs.output {
            return Err(Error::SpaceMismatch(format!(
                "{:?}->{} vs {:?}->{}",
                self.inputs, self.output, rhs.inputs, rhs.output
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &MultiMap) -> Result<MultiMap> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        out.add_assign(rhs)?;
        Ok(out)
    }

    pub fn sub(&self, rhs: &MultiMap) -> Result<MultiMap> {
        self.add(&rhs.scale(&-self.field.one()))
    }

    pub fn add_assign(&mut self, rhs: &MultiMap) -> Result<()> {
        self.check_same_shape(rhs)?;
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
        Ok(())
    }

    /// `self += c · rhs`.
    pub fn add_scaled(&mut self, c: &Scalar, rhs: &MultiMap) -> Result<()> {
        self.check_same_shape(rhs)?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                a.add_product(c, b);
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> MultiMap {
        let mut out = self.clone();
        for a in &mut out.coeffs {
            if !a.is_zero() {
                *a = &*a * c;
            }
        }
        out
    }

    pub fn neg(&self) -> MultiMap {
        self.scale(&-self.field.one())
    }

    /// Applies a linear map to the output: `x ↦ lin(self(x))`.
    pub fn then(&self, lin: &MultiMap) -> Result<MultiMap> {
        if lin.arity() != 1 || lin.inputs[0] != self.output {
            return Err(shape(
                "post-composition needs a linear map on the output space",
            ));
        }
        MultiMap::from_rows(self.field, &self.inputs, lin.output, |idx| {
            lin.eval(&[self.row(idx).to_vec()]).expect("shapes checked")
        })
    }

    /// Substitutes a linear map into input slot `slot`: `x ↦ self(…, lin(x_slot), …)`.
    pub fn precompose(&self, slot: usize, lin: &MultiMap) -> Result<MultiMap> {
        if slot >= self.arity() || lin.arity() != 1 || lin.output != self.inputs[slot] {
            return Err(shape("linear map does not fit the input slot"));
        }
        let mut inputs = self.inputs.clone();
        inputs[slot] = lin.inputs[0];
        let mut out = MultiMap::zeros(self.field, &inputs, self.output)?;
        for idx in MultiIndex::new(&inputs) {
            let image = lin.row(&[idx[slot]]);
            let mut inner = idx.clone();
            let row = out.row_mut(&idx);
            for (k, c) in image.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                inner[slot] = k;
                for (o, v) in row.iter_mut().zip(self.row(&inner)) {
                    if !v.is_zero() {
                        o.add_product(c, v);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MultiMap[{:?} -> {} over {}]{{",
            self.inputs, self.output, self.field
        )?;
        let mut first = true;
        for idx in MultiIndex::new(&self.inputs) {
            let row = self.row(&idx);
            if row.iter().all(Scalar::is_zero) {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let r: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{idx:?}: ({})", r.join(" "))?;
        }
        write!(f, "}}")
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity > ARITY_CAP {
        Err(Error::ArityCapExceeded {
            arity,
            cap: ARITY_CAP,
        })
    } else {
        Ok(())
    }
}

/// Odometer over all multi-indices of a box, last position fastest.
#[derive(Clone, Debug)]
pub struct MultiIndex {
    dims: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl MultiIndex {
    pub fn new(dims: &[usize]) -> Self {
        let current = if dims.contains(&0) {
            None
        } else {
            Some(vec![0; dims.len()])
        };
        MultiIndex {
            dims: dims.to_vec(),
            current,
        }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut k = self.dims.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < self.dims[k] {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    }
}

/// Standard basis vector.
pub fn basis_vector(field: Field, dim: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

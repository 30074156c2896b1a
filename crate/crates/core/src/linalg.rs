//! Exact rational vectors, matrices and the linear-algebra kernels: row
//! reduction, subspace intersection (Zassenhaus), orthogonal projection,
//! characteristic polynomials (Faddeev-LeVerrier) and symbolic kernels over
//! a polynomial quotient ring.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatVector {
    entries: Vec<Rat>,
}

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        assert!(!entries.is_empty(), "vectors have dimension >= 1");
        RatVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector::new(entries.iter().map(|&e| rat_int(e)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector::new(vec![rat_int(0); dim])
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![rat_int(0); dim];
        v[i] = rat_int(1);
        RatVector::new(v)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> RatVector {
        RatVector::new(self.entries.iter().map(|e| e * c).collect())
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim());
        RatVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        assert_eq!(self.dim(), other.dim());
        let mut acc = rat_int(0);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc += a * b;
        }
        acc
    }

    /// Clears denominators: returns the numerator vector scaled to the
    /// common denominator, plus that denominator. Signs and containment
    /// tests are unaffected by the positive scaling.
    pub fn scaled_integers(&self) -> (Vec<crate::rational::Int>, crate::rational::Int) {
        use num_integer::Integer as _;
        use num_traits::One;
        let mut den = crate::rational::Int::one();
        for e in &self.entries {
            if !e.denom().is_one() {
                den = den.lcm(e.denom());
            }
        }
        let nums = self
            .entries
            .iter()
            .map(|e| {
                if den.is_one() {
                    e.numer().clone()
                } else {
                    e.numer() * (&den / e.denom())
                }
            })
            .collect();
        (nums, den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry grid must be rows*cols");
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&e| rat_int(e)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RatMatrix::zeros(dim, dim);
        for i in 0..dim {
            *m.at_mut(i, i) = rat_int(1);
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![rat_int(0); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> RatVector {
        RatVector::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> RatVector {
        RatVector::new((0..self.rows).map(|r| self.at(r, c).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RatMatrix::identity(self.rows)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        let mut acc = rat_int(0);
        for i in 0..self.rows.min(self.cols) {
            acc += self.at(i, i);
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * c).collect(),
        )
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Row-major integer entries, if every entry is integral.
    pub fn integer_entries(&self) -> Option<Vec<crate::rational::Int>> {
        use num_traits::One;
        if self.entries.iter().all(|e| e.denom().is_one()) {
            Some(self.entries.iter().map(|e| e.numer().clone()).collect())
        } else {
            None
        }
    }

    pub fn apply(&self, v: &RatVector) -> Result<RatVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, vector has dim {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = rat_int(0);
            for c in 0..self.cols {
                acc += self.at(r, c) * &v.entries()[c];
            }
            out.push(acc);
        }
        Ok(RatVector::new(out))
    }
}

/// Exact matrix product.
pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = RatMatrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let ark = a.at(r, k);
            if ark.is_zero() {
                continue;
            }
            for c in 0..b.cols {
                let v = out.at(r, c) + ark * b.at(k, c);
                *out.at_mut(r, c) = v;
            }
        }
    }
    Ok(out)
}

/// Reduced row-echelon form with rank and pivot columns.
pub fn row_reduce(m: &RatMatrix) -> (RatMatrix, usize, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for pc in 0..a.cols {
        let Some(pivot_row) = (pr..a.rows).find(|&r| !a.at(r, pc).is_zero()) else {
            continue;
        };
        // swap rows pr, pivot_row
        if pivot_row != pr {
            for c in 0..a.cols {
                let tmp = a.at(pr, c).clone();
                *a.at_mut(pr, c) = a.at(pivot_row, c).clone();
                *a.at_mut(pivot_row, c) = tmp;
            }
        }
        let inv = rat_int(1) / a.at(pr, pc).clone();
        for c in 0..a.cols {
            let v = a.at(pr, c) * &inv;
            *a.at_mut(pr, c) = v;
        }
        for r in 0..a.rows {
            if r == pr || a.at(r, pc).is_zero() {
                continue;
            }
            let f = a.at(r, pc).clone();
            for c in 0..a.cols {
                let v = a.at(r, c) - &f * a.at(pr, c);
                *a.at_mut(r, c) = v;
            }
        }
        pivots.push(pc);
        pr += 1;
        if pr == a.rows {
            break;
        }
    }
    (a, pivots.len(), pivots)
}

/// Basis of the null space, from the RREF.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    let (r, _, pivots) = row_reduce(m);
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![rat_int(0); m.cols];
        v[free] = rat_int(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.at(row, free).clone();
        }
        basis.push(RatVector::new(v));
    }
    basis
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    if m.rows != m.cols {
        return None;
    }
    let d = m.rows;
    let mut aug = RatMatrix::zeros(d, 2 * d);
    for r in 0..d {
        for c in 0..d {
            *aug.at_mut(r, c) = m.at(r, c).clone();
        }
        *aug.at_mut(r, d + r) = rat_int(1);
    }
    let (red, rank, _) = row_reduce(&aug);
    if rank < d {
        return None;
    }
    // rank d on the left block means the left block reduced to the identity
    let mut out = RatMatrix::zeros(d, d);
    for r in 0..d {
        if !red.at(r, r).is_one() {
            return None;
        }
        for c in 0..d {
            *out.at_mut(r, c) = red.at(r, d + c).clone();
        }
    }
    Some(out)
}

/// A linear subspace of `R^d` given by a basis, stored in canonical
/// (reduced row-echelon) form. The empty basis is the zero subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<RatVector>,
}

impl Subspace {
    /// Span of the given vectors; the stored basis is canonicalized by row
    /// reduction, so equal subspaces compare equal.
    pub fn span(ambient_dim: usize, vectors: &[RatVector]) -> Self {
        for v in vectors {
            assert_eq!(v.dim(), ambient_dim);
        }
        if vectors.is_empty() {
            return Subspace {
                ambient_dim,
                basis: vec![],
            };
        }
        let m = RatMatrix::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect());
        let (r, rank, _) = row_reduce(&m);
        let basis = (0..rank).map(|i| r.row(i)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: vec![],
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::span(
            ambient_dim,
            &(0..ambient_dim)
                .map(|i| RatVector::unit(ambient_dim, i))
                .collect::<Vec<_>>(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatVector] {
        &self.basis
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        assert_eq!(v.dim(), self.ambient_dim);
        if v.is_zero() {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        let mut rows: Vec<Vec<Rat>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        rows.push(v.entries().to_vec());
        let (_, rank, _) = row_reduce(&RatMatrix::from_rows(rows));
        rank == self.basis.len()
    }
}

/// Basis of `u + v`, used by the intersection dimension formula.
pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    if u.ambient_dim != v.ambient_dim {
        return Err(Error::DimensionMismatch(
            "subspace sum needs equal ambient dimensions".into(),
        ));
    }
    let mut vs: Vec<RatVector> = u.basis.clone();
    vs.extend(v.basis.iter().cloned());
    Ok(Subspace::span(u.ambient_dim, &vs))
}

/// Intersection via the Zassenhaus trick: row-reduce [U U; V 0]; rows whose
/// left block vanished carry an intersection basis in the right block.
pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    if u.ambient_dim != v.ambient_dim {
        return Err(Error::DimensionMismatch(
            "subspace intersection needs equal ambient dimensions".into(),
        ));
    }
    let d = u.ambient_dim;
    if u.basis.is_empty() || v.basis.is_empty() {
        return Ok(Subspace::zero(d));
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for b in &u.basis {
        let mut row = b.entries().to_vec();
        row.extend(b.entries().iter().cloned());
        rows.push(row);
    }
    for b in &v.basis {
        let mut row = b.entries().to_vec();
        row.extend(vec![rat_int(0); d]);
        rows.push(row);
    }
    let (r, rank, _) = row_reduce(&RatMatrix::from_rows(rows));
    let mut inter = Vec::new();
    for i in 0..rank {
        let left_zero = (0..d).all(|c| r.at(i, c).is_zero());
        if left_zero {
            inter.push(RatVector::new(
                (d..2 * d).map(|c| r.at(i, c).clone()).collect(),
            ));
        }
    }
    Ok(Subspace::span(d, &inter))
}

/// Span of the images of the basis vectors.
pub fn apply_to_subspace(a: &RatMatrix, w: &Subspace) -> Result<Subspace> {
    if a.cols != w.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} columns, subspace ambient dim is {}",
            a.cols, w.ambient_dim
        )));
    }
    let images: Vec<RatVector> = w
        .basis
        .iter()
        .map(|b| a.apply(b))
        .collect::<Result<_>>()?;
    Ok(Subspace::span(a.rows, &images))
}

/// Orthogonal projection onto `w` for the standard inner product:
/// `B = W^T (W W^T)^{-1} W` for a basis matrix `W` with basis rows.
/// `B` is the identity for the full space and zero for the zero subspace.
pub fn projection_matrix(w: &Subspace) -> RatMatrix {
    let d = w.ambient_dim;
    if w.basis.is_empty() {
        return RatMatrix::zeros(d, d);
    }
    let wm = RatMatrix::from_rows(w.basis.iter().map(|b| b.entries().to_vec()).collect());
    let wt = wm.transpose();
    let gram = mat_mul(&wm, &wt).expect("gram dims");
    let gram_inv = inverse(&gram).expect("gram matrix of independent rows is invertible");
    let tmp = mat_mul(&wt, &gram_inv).expect("dims");
    mat_mul(&tmp, &wm).expect("dims")
}

/// Monic characteristic polynomial `det(xI - a)` by Faddeev-LeVerrier,
/// together with the matrices `M_k` of the recursion. These satisfy
/// `adj(xI - a) = sum_k M_k x^{d-1-k}`.
fn faddeev_leverrier(a: &RatMatrix) -> Result<(Poly, Vec<RatMatrix>)> {
    if a.rows != a.cols {
        return Err(Error::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let d = a.rows;
    if d == 0 {
        return Ok((Poly::one(), vec![]));
    }
    // coeffs[k] multiplies x^k; monic of degree d
    let mut coeffs = vec![rat_int(0); d + 1];
    coeffs[d] = rat_int(1);
    let mut ms = Vec::with_capacity(d);
    let mut m = RatMatrix::identity(d); // M_0
    for k in 1..=d {
        ms.push(m.clone());
        let am = mat_mul(a, &m)?;
        let c = -am.trace() / rat_int(k as i64);
        coeffs[d - k] = c.clone();
        m = am;
        for i in 0..d {
            let v = m.at(i, i) + &c;
            *m.at_mut(i, i) = v;
        }
    }
    // The final M_d = A*M_{d-1} + c_0 I must vanish (Cayley-Hamilton).
    debug_assert!(m.entries.iter().all(|e| e.is_zero()));
    Ok((Poly::new(coeffs), ms))
}

/// Monic characteristic polynomial `det(xI - a)`.
pub fn char_poly(a: &RatMatrix) -> Result<Poly> {
    Ok(faddeev_leverrier(a)?.0)
}

/// A vector with polynomial entries, representing a point of `R^d` whose
/// coordinates are polynomial expressions in one algebraic quantity.
pub type PolyVector = Vec<Poly>;

/// Columns of `adj(xI - a)` with entries reduced mod `modulus`. Evaluated at
/// a root of the characteristic polynomial, every nonzero column is a kernel
/// vector of `a - xI`.
pub fn adjugate_kernel_columns(a: &RatMatrix, modulus: &Poly) -> Result<Vec<PolyVector>> {
    let (_, ms) = faddeev_leverrier(a)?;
    let d = a.rows;
    let mut cols = Vec::with_capacity(d);
    for j in 0..d {
        let mut col: PolyVector = Vec::with_capacity(d);
        for i in 0..d {
            // entry (i,j): sum_k (M_k)_{ij} x^{d-1-k}
            let mut coeffs = vec![rat_int(0); d];
            for (k, mk) in ms.iter().enumerate() {
                coeffs[d - 1 - k] = mk.at(i, j).clone();
            }
            col.push(Poly::new(coeffs).reduce_mod(modulus));
        }
        cols.push(col);
    }
    Ok(cols)
}

/// Kernel of `a - xI` over the quotient ring Q[x]/(modulus), by Gaussian
/// elimination. Pivots must be units of the quotient; if elimination ever
/// needs a zero-divisor pivot, or the matrix is nonsingular over the
/// quotient, the empty list is returned and the caller falls back to
/// adjugate-column extraction.
pub fn symbolic_kernel(a: &RatMatrix, modulus: &Poly) -> Result<Vec<PolyVector>> {
    if a.rows != a.cols {
        return Err(Error::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let d = a.rows;
    // a - xI, reduced mod modulus
    let mut m: Vec<Vec<Poly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut p = Poly::constant(a.at(i, j).clone());
                    if i == j {
                        p = p.sub(&Poly::x());
                    }
                    p.reduce_mod(modulus)
                })
                .collect()
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pr = 0;
    for pc in 0..d {
        let Some(row) = (pr..d).find(|&r| !m[r][pc].is_zero()) else {
            continue;
        };
        // A pivot must be invertible mod the modulus.
        let (g, s, _) = m[row][pc].extended_gcd(modulus);
        if !g.is_constant() || g.is_zero() {
            return Ok(vec![]);
        }
        m.swap(pr, row);
        let inv = s; // s * pivot = 1 mod modulus (g is the constant 1)
        for c in 0..d {
            m[pr][c] = m[pr][c].mul(&inv).reduce_mod(modulus);
        }
        for r in 0..d {
            if r == pr || m[r][pc].is_zero() {
                continue;
            }
            let f = m[r][pc].clone();
            for c in 0..d {
                m[r][c] = m[r][c].sub(&f.mul(&m[pr][c])).reduce_mod(modulus);
            }
        }
        pivots.push((pr, pc));
        pr += 1;
        if pr == d {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..d {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v: PolyVector = vec![Poly::zero(); d];
        v[free] = Poly::one();
        for &(row, pc) in &pivots {
            v[pc] = m[row][free].neg().reduce_mod(modulus);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Evaluates `char_poly(a)` at the matrix `a` itself (for tests).
pub fn eval_poly_at_matrix(p: &Poly, a: &RatMatrix) -> Result<RatMatrix> {
    let d = a.rows;
    let mut acc = RatMatrix::zeros(d, d);
    for c in p.coeffs().iter().rev() {
        acc = mat_mul(a, &acc)?;
        for i in 0..d {
            let v = acc.at(i, i) + c;
            *acc.at_mut(i, i) = v;
        }
    }
    Ok(acc)
}

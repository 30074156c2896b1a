//! Integral linear cones, cells, pieces and points of a cone complex.
//!
//! A cone is the solution set of integer inequalities `H x >= 0` and
//! equalities `G x = 0`; membership is decided exactly for both rational and
//! algebraic coordinates.

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::algebraic::{AlgVector, Sign};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, RatVector};
use crate::poly::Poly;
use crate::rational::{Int, Rat};

/// Coordinates of a point: exact rationals or polynomials in one algebraic
/// number.
#[derive(Debug, Clone)]
pub enum Coords {
    Rat(RatVector),
    Alg(AlgVector),
}

impl Coords {
    pub fn dim(&self) -> usize {
        match self {
            Coords::Rat(v) => v.dim(),
            Coords::Alg(v) => v.dim(),
        }
    }

    pub fn as_rat(&self) -> Option<&RatVector> {
        match self {
            Coords::Rat(v) => Some(v),
            Coords::Alg(_) => None,
        }
    }
}

/// Integer row dotted with an integer coordinate vector. The hot membership
/// path works on denominator-cleared coordinates so no rational
/// normalization runs against the large numerators.
fn dot_int(row: &[Int], nums: &[Int]) -> Int {
    let mut acc = Int::zero();
    for (c, x) in row.iter().zip(nums) {
        if !c.is_zero() {
            acc += c * x;
        }
    }
    acc
}

/// Integer row dotted with polynomial coordinates.
fn dot_poly(row: &[Int], v: &AlgVector) -> Poly {
    let mut acc = Poly::zero();
    for (c, p) in row.iter().zip(v.entries()) {
        if !c.is_zero() {
            acc = acc.add(&p.scale(&Rat::from_integer(c.clone())));
        }
    }
    acc
}

/// A positive cone `{x : H x >= 0, G x = 0}` with integer `H`, `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub ambient_dim: usize,
    pub inequalities: Vec<Vec<Int>>,
    pub equalities: Vec<Vec<Int>>,
}

impl Cone {
    pub fn new(ambient_dim: usize, inequalities: Vec<Vec<Int>>, equalities: Vec<Vec<Int>>) -> Self {
        for row in inequalities.iter().chain(&equalities) {
            assert_eq!(row.len(), ambient_dim, "cone row length mismatch");
        }
        Cone {
            ambient_dim,
            inequalities,
            equalities,
        }
    }

    /// The nonnegative orthant of `R^d`.
    pub fn orthant(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut row = vec![Int::zero(); dim];
                row[i] = Int::from(1);
                row
            })
            .collect();
        Cone::new(dim, rows, vec![])
    }

    pub fn from_int_rows(ambient_dim: usize, ineqs: &[&[i64]]) -> Self {
        Cone::new(
            ambient_dim,
            ineqs
                .iter()
                .map(|r| r.iter().map(|&e| Int::from(e)).collect())
                .collect(),
            vec![],
        )
    }

    /// This cone further sliced by extra inequality rows.
    pub fn with_extra(&self, extra: &[Vec<Int>]) -> Cone {
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(extra.iter().cloned());
        Cone::new(self.ambient_dim, ineqs, self.equalities.clone())
    }

    pub fn contains(&self, x: &Coords) -> Result<bool> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "cone lives in dim {}, point in dim {}",
                self.ambient_dim,
                x.dim()
            )));
        }
        match x {
            Coords::Rat(v) => {
                let (nums, _) = v.scaled_integers();
                for row in &self.inequalities {
                    if dot_int(row, &nums).is_negative() {
                        return Ok(false);
                    }
                }
                for row in &self.equalities {
                    if !dot_int(row, &nums).is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Coords::Alg(v) => {
                for row in &self.inequalities {
                    if v.point().sign_of(&dot_poly(row, v)) == Sign::Negative {
                        return Ok(false);
                    }
                }
                for row in &self.equalities {
                    if v.point().sign_of(&dot_poly(row, v)) != Sign::Zero {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Strict membership: all inequalities positive, equalities zero.
    pub fn contains_interior(&self, x: &Coords) -> Result<bool> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "cone lives in dim {}, point in dim {}",
                self.ambient_dim,
                x.dim()
            )));
        }
        match x {
            Coords::Rat(v) => {
                let (nums, _) = v.scaled_integers();
                for row in &self.inequalities {
                    if !dot_int(row, &nums).is_positive() {
                        return Ok(false);
                    }
                }
                for row in &self.equalities {
                    if !dot_int(row, &nums).is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Coords::Alg(v) => {
                for row in &self.inequalities {
                    if v.point().sign_of(&dot_poly(row, v)) != Sign::Positive {
                        return Ok(false);
                    }
                }
                for row in &self.equalities {
                    if v.point().sign_of(&dot_poly(row, v)) != Sign::Zero {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Extreme rays of a two-dimensional cone, as primitive integer vectors.
    /// The cones of the built-in ledgers are slices of the first quadrant, so
    /// every candidate ray lies in a common half-plane and the cross product
    /// orders them totally. Returns rays sorted counterclockwise; a single
    /// ray means the cone is one-dimensional.
    pub fn extreme_rays_2d(&self) -> Vec<Vec<Int>> {
        assert_eq!(self.ambient_dim, 2, "extreme rays only in dimension 2");
        let mut candidates: Vec<Vec<Int>> = Vec::new();
        for row in self.inequalities.iter().chain(&self.equalities) {
            let r = vec![row[1].clone(), -row[0].clone()];
            if r[0].is_zero() && r[1].is_zero() {
                continue;
            }
            candidates.push(r.clone());
            candidates.push(vec![-r[0].clone(), -r[1].clone()]);
        }
        let mut rays: Vec<Vec<Int>> = Vec::new();
        for c in candidates {
            let v = RatVector::new(c.iter().map(|e| Rat::from_integer(e.clone())).collect());
            if self.contains(&Coords::Rat(v)).unwrap_or(false) {
                let p = primitive_ray(&c);
                if !rays.contains(&p) {
                    rays.push(p);
                }
            }
        }
        // counterclockwise order by cross product
        rays.sort_by(|a, b| {
            let cross = &a[0] * &b[1] - &a[1] * &b[0];
            if cross.is_positive() {
                std::cmp::Ordering::Less
            } else if cross.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        if rays.len() > 2 {
            // interior candidates can sneak in when constraints are
            // redundant; keep only the angular extremes
            let first = rays.first().unwrap().clone();
            let last = rays.last().unwrap().clone();
            rays = vec![first, last];
        }
        rays
    }
}

/// Scales an integer vector to have coprime entries.
fn primitive_ray(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for e in v {
        g = g.gcd(e);
    }
    if g.is_zero() || g == Int::from(1) {
        return v.to_vec();
    }
    v.iter().map(|e| e / &g).collect()
}

/// A top-dimensional cell of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub id: usize,
    pub name: String,
    pub cone: Cone,
}

/// A signed reference to a generator (the generator or its inverse).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedGen {
    pub index: usize,
    pub inverse: bool,
}

impl SignedGen {
    pub fn new(index: usize, inverse: bool) -> Self {
        SignedGen { index, inverse }
    }

    pub fn inverted(self) -> Self {
        SignedGen {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// One linear piece of a generator's action: the 4-tuple (matrix, domain
/// cell, codomain cell, domain subcone). The subcone is the domain cell's
/// cone sliced by the extra inequality rows.
#[derive(Debug, Clone)]
pub struct Piece {
    pub generator: SignedGen,
    pub domain_cell: usize,
    pub extra_inequalities: Vec<Vec<Int>>,
    pub codomain_cell: usize,
    pub matrix: RatMatrix,
    /// Full domain cone (cell cone plus the extra rows), precomputed.
    pub domain_cone: Cone,
    /// Display label, e.g. `V1,2` for the second piece of a subdivided cell
    /// or plain `V2` when the whole cell is one piece.
    pub label: String,
}

/// A point of the complex: a cell id plus coordinates in that cell.
#[derive(Debug, Clone)]
pub struct PLPoint {
    pub cell: usize,
    pub coords: Coords,
}

impl PLPoint {
    pub fn rational(cell: usize, coords: RatVector) -> Self {
        PLPoint {
            cell,
            coords: Coords::Rat(coords),
        }
    }

    pub fn algebraic(cell: usize, coords: AlgVector) -> Self {
        PLPoint {
            cell,
            coords: Coords::Alg(coords),
        }
    }
}

/// The `(A, V_i, V_j)` record of an evaluated word: acting matrix, domain
/// cell, codomain cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub matrix: RatMatrix,
    pub domain_cell: usize,
    pub codomain_cell: usize,
}

/// Integer-matrix application on denominator-cleared coordinates; falls
/// back to plain rational arithmetic for non-integral matrices.
fn apply_matrix_rat(m: &crate::linalg::RatMatrix, v: &RatVector) -> Result<RatVector> {
    if m.cols() != v.dim() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, vector has dim {}",
            m.rows(),
            m.cols(),
            v.dim()
        )));
    }
    let Some(ints) = m.integer_entries() else {
        return m.apply(v);
    };
    let (nums, den) = v.scaled_integers();
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut acc = Int::zero();
        for (c, x) in ints[r * m.cols()..(r + 1) * m.cols()].iter().zip(&nums) {
            if !c.is_zero() {
                acc += c * x;
            }
        }
        out.push(crate::rational::make_rat(acc, &den));
    }
    Ok(RatVector::new(out))
}

/// Applies one piece to a point; the image must land in the codomain cell.
pub fn apply_piece(piece: &Piece, p: &PLPoint, codomain_cone: &Cone, codomain_name: &str) -> Result<PLPoint> {
    let out = match &p.coords {
        Coords::Rat(v) => Coords::Rat(apply_matrix_rat(&piece.matrix, v)?),
        Coords::Alg(v) => {
            let m = &piece.matrix;
            if m.cols() != v.dim() {
                return Err(Error::DimensionMismatch(
                    "piece matrix does not fit the point".into(),
                ));
            }
            let mut entries = Vec::with_capacity(m.rows());
            for r in 0..m.rows() {
                let mut acc = Poly::zero();
                for c in 0..m.cols() {
                    let coeff = m.at(r, c);
                    if !coeff.is_zero() {
                        acc = acc.add(&v.entries()[c].scale(coeff));
                    }
                }
                entries.push(acc);
            }
            Coords::Alg(AlgVector::new(entries, v.point().clone()))
        }
    };
    if !codomain_cone.contains(&out)? {
        return Err(Error::ImageOutsideCodomain {
            cell: codomain_name.to_string(),
        });
    }
    Ok(PLPoint {
        cell: piece.codomain_cell,
        coords: out,
    })
}

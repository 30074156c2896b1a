//! Ledgers: the quadruple (generators, cells, subdivisions, matrices)
//! describing a group's piecewise-integral-linear action on a cone complex,
//! together with the two built-in ledgers and the on-disk JSON format.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cone::{apply_piece, Cell, Cone, Coords, PLPoint, Piece, SignedGen};
use crate::error::{Error, Result};
use crate::linalg::{inverse, RatMatrix, RatVector};
use crate::rational::{parse_rat, render_rat, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
}

/// A linear identification of one face of `cell_a` with a face of `cell_b`.
/// The matrix maps cell_a coordinates to cell_b coordinates; it carries face
/// points to face points and everything else outside cell_b's cone, so
/// "`x` and `matrix * x` are the same point" is decidable by membership.
#[derive(Debug, Clone, PartialEq)]
pub struct Gluing {
    pub cell_a: usize,
    pub cell_b: usize,
    pub matrix: RatMatrix,
}

#[derive(Debug, Clone)]
pub struct Ledger {
    pub name: String,
    pub surface: Option<(u32, u32)>,
    pub generators: Vec<Generator>,
    pub cells: Vec<Cell>,
    pub gluings: Vec<Gluing>,
    pub pieces: Vec<Piece>,
    pub basepoint: PLPoint,
}

/// Raw piece data before labels and domain cones are attached.
pub struct PieceSpec {
    pub generator: SignedGen,
    pub domain_cell: usize,
    pub extra_inequalities: Vec<Vec<Int>>,
    pub codomain_cell: usize,
    pub matrix: RatMatrix,
}

impl Ledger {
    /// Builds a ledger from parts, running the structural checks (dimension
    /// consistency, reference validity, basepoint membership) and attaching
    /// piece labels (`V1` for a whole-cell piece, `V1,2` for the second
    /// piece of a subdivided cell).
    pub fn assemble(
        name: String,
        surface: Option<(u32, u32)>,
        generators: Vec<Generator>,
        cells: Vec<Cell>,
        gluings: Vec<Gluing>,
        piece_specs: Vec<PieceSpec>,
        basepoint: PLPoint,
    ) -> Result<Ledger> {
        let mut seen = std::collections::HashSet::new();
        for g in &generators {
            if !seen.insert(g.name.clone()) {
                return Err(Error::Validation(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        for (i, c) in cells.iter().enumerate() {
            if c.id != i {
                return Err(Error::Validation(format!(
                    "cell ids must be 0..n in order; cell {} has id {}",
                    i, c.id
                )));
            }
        }
        for g in &gluings {
            let (a, b) = (g.cell_a, g.cell_b);
            if a >= cells.len() || b >= cells.len() {
                return Err(Error::Validation("gluing references unknown cell".into()));
            }
            if g.matrix.rows() != cells[b].cone.ambient_dim
                || g.matrix.cols() != cells[a].cone.ambient_dim
            {
                return Err(Error::Validation("gluing matrix has wrong shape".into()));
            }
        }
        // counts per (generator, cell) decide the piece labels
        let mut counts = std::collections::HashMap::new();
        for p in &piece_specs {
            if p.generator.index >= generators.len() {
                return Err(Error::Validation("piece references unknown generator".into()));
            }
            if p.domain_cell >= cells.len() || p.codomain_cell >= cells.len() {
                return Err(Error::Validation("piece references unknown cell".into()));
            }
            let ddim = cells[p.domain_cell].cone.ambient_dim;
            let cdim = cells[p.codomain_cell].cone.ambient_dim;
            if p.matrix.rows() != cdim || p.matrix.cols() != ddim {
                return Err(Error::Validation(format!(
                    "piece matrix is {}x{}, expected {}x{}",
                    p.matrix.rows(),
                    p.matrix.cols(),
                    cdim,
                    ddim
                )));
            }
            for row in &p.extra_inequalities {
                if row.len() != ddim {
                    return Err(Error::Validation(
                        "piece domain inequality has wrong length".into(),
                    ));
                }
            }
            *counts.entry((p.generator, p.domain_cell)).or_insert(0usize) += 1;
        }
        let mut running = std::collections::HashMap::new();
        let pieces = piece_specs
            .into_iter()
            .map(|p| {
                let key = (p.generator, p.domain_cell);
                let k = running.entry(key).or_insert(0usize);
                *k += 1;
                let cell = &cells[p.domain_cell];
                let label = if counts[&key] == 1 {
                    cell.name.clone()
                } else {
                    format!("{},{}", cell.name, k)
                };
                Piece {
                    generator: p.generator,
                    domain_cell: p.domain_cell,
                    domain_cone: cell.cone.with_extra(&p.extra_inequalities),
                    extra_inequalities: p.extra_inequalities,
                    codomain_cell: p.codomain_cell,
                    matrix: p.matrix,
                    label,
                }
            })
            .collect();
        let ledger = Ledger {
            name,
            surface,
            generators,
            cells,
            gluings,
            pieces,
            basepoint,
        };
        if ledger.basepoint.cell >= ledger.cells.len() {
            return Err(Error::Validation("basepoint references unknown cell".into()));
        }
        if !ledger.cells[ledger.basepoint.cell]
            .cone
            .contains(&ledger.basepoint.coords)?
        {
            return Err(Error::PointOutsideCell);
        }
        Ok(ledger)
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn signed_gen_name(&self, sg: SignedGen) -> String {
        let mut s = self.generators[sg.index].name.clone();
        if sg.inverse {
            s.push('\'');
        }
        s
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn cell_by_name(&self, name: &str) -> Result<&Cell> {
        self.cells
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCell(name.to_string()))
    }

    pub fn pieces_of(&self, sg: SignedGen) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(move |p| p.generator == sg)
    }

    /// The piece of `sg` whose domain subcone contains the point; ties on
    /// boundary points break to the lowest piece index in ledger order.
    pub fn find_piece(&self, sg: SignedGen, p: &PLPoint) -> Result<&Piece> {
        for piece in self.pieces.iter() {
            if piece.generator != sg || piece.domain_cell != p.cell {
                continue;
            }
            if piece.domain_cone.contains(&p.coords)? {
                return Ok(piece);
            }
        }
        Err(Error::NoPieceFound {
            generator: self.signed_gen_name(sg),
            cell: self.cells[p.cell].name.clone(),
        })
    }

    /// One generator application: find the piece, apply its matrix, check
    /// the image lands in the codomain cell.
    pub fn apply_generator(&self, sg: SignedGen, p: &PLPoint) -> Result<(PLPoint, &Piece)> {
        let piece = self.find_piece(sg, p)?;
        let codomain = &self.cells[piece.codomain_cell];
        let out = apply_piece(piece, p, &codomain.cone, &codomain.name)?;
        Ok((out, piece))
    }

    /// Exact equality of two points of the complex, as complex points:
    /// identical cell and coordinates, or identified by one gluing hop.
    pub fn points_equal(&self, p: &PLPoint, q: &PLPoint) -> Result<bool> {
        if p.cell == q.cell {
            return coords_equal(&p.coords, &q.coords);
        }
        for g in &self.gluings {
            if g.cell_a == p.cell && g.cell_b == q.cell {
                if let Some(mapped) = self.map_through(&g.matrix, p, g.cell_b)? {
                    if coords_equal(&mapped.coords, &q.coords)? {
                        return Ok(true);
                    }
                }
            }
            if g.cell_a == q.cell && g.cell_b == p.cell {
                if let Some(mapped) = self.map_through(&g.matrix, q, g.cell_b)? {
                    if coords_equal(&mapped.coords, &p.coords)? {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    /// Applies a gluing matrix to a point; `None` when the image misses the
    /// target cell's cone (the point was not on the glued face).
    fn map_through(
        &self,
        matrix: &RatMatrix,
        p: &PLPoint,
        target: usize,
    ) -> Result<Option<PLPoint>> {
        let coords = match &p.coords {
            Coords::Rat(v) => Coords::Rat(matrix.apply(v)?),
            Coords::Alg(v) => {
                let mut entries = Vec::with_capacity(matrix.rows());
                for r in 0..matrix.rows() {
                    let mut acc = crate::poly::Poly::zero();
                    for c in 0..matrix.cols() {
                        let e = matrix.at(r, c);
                        if !num_traits::Zero::is_zero(e) {
                            acc = acc.add(&v.entries()[c].scale(e));
                        }
                    }
                    entries.push(acc);
                }
                Coords::Alg(crate::algebraic::AlgVector::new(entries, v.point().clone()))
            }
        };
        if self.cells[target].cone.contains(&coords)? {
            Ok(Some(PLPoint {
                cell: target,
                coords,
            }))
        } else {
            Ok(None)
        }
    }

    /// The gluing matrix from `from`-coordinates to `to`-coordinates, if the
    /// two cells share a glued face.
    pub fn gluing_matrix(&self, from: usize, to: usize) -> Option<RatMatrix> {
        for g in &self.gluings {
            if g.cell_a == from && g.cell_b == to {
                return Some(g.matrix.clone());
            }
            if g.cell_a == to && g.cell_b == from {
                return inverse(&g.matrix);
            }
        }
        None
    }
}

fn coords_equal(a: &Coords, b: &Coords) -> Result<bool> {
    match (a, b) {
        (Coords::Rat(x), Coords::Rat(y)) => Ok(x == y),
        (Coords::Alg(x), Coords::Alg(y)) => {
            if x.dim() != y.dim() {
                return Ok(false);
            }
            for (p, q) in x.entries().iter().zip(y.entries()) {
                if x.point().sign_of(&p.sub(q)) != crate::algebraic::Sign::Zero {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::Unsupported(
            "comparing rational and algebraic coordinates".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Built-in ledgers
// ---------------------------------------------------------------------------

fn m(rows: &[&[i64]]) -> RatMatrix {
    RatMatrix::from_int_rows(rows)
}

fn row(entries: &[i64]) -> Vec<Int> {
    entries.iter().map(|&e| Int::from(e)).collect()
}

/// Half-plane slice `{y <= x}` of a 2-dim cell.
fn y_le_x() -> Vec<Vec<Int>> {
    vec![row(&[1, -1])]
}

/// Half-plane slice `{x <= y}` of a 2-dim cell.
fn x_le_y() -> Vec<Vec<Int>> {
    vec![row(&[-1, 1])]
}

/// The running-example complex: three quadrant cells glued in a cycle, the
/// half-twist pair `a`, `b` acting by four pieces each. The `y`-axis face of
/// `V_i` is identified with the `x`-axis face of `V_{i+1}` by `(0,t) -> (t,0)`;
/// this is the orientation under which the two `V1`-pieces of `a` agree on
/// the shared ray `{x = y}`.
pub fn builtin_ydelta() -> Ledger {
    let cells = (0..3)
        .map(|i| Cell {
            id: i,
            name: format!("V{}", i + 1),
            cone: Cone::orthant(2),
        })
        .collect();
    // (x, y) -> (y, -x): face points (0,t) land on (t,0); interior points
    // leave the quadrant.
    let glue = m(&[&[0, 1], &[-1, 0]]);
    let gluings = (0..3)
        .map(|i| Gluing {
            cell_a: i,
            cell_b: (i + 1) % 3,
            matrix: glue.clone(),
        })
        .collect();
    let generators = vec![
        Generator { name: "a".into() },
        Generator { name: "b".into() },
    ];
    let a = SignedGen::new(0, false);
    let ai = SignedGen::new(0, true);
    let b = SignedGen::new(1, false);
    let bi = SignedGen::new(1, true);
    let a11 = m(&[&[1, -1], &[0, 1]]);
    let a12 = m(&[&[1, 0], &[-1, 1]]);
    let a2 = m(&[&[1, 1], &[0, 1]]);
    let a3 = m(&[&[1, 0], &[1, 1]]);
    let a11_inv = m(&[&[1, 1], &[0, 1]]);
    let a12_inv = m(&[&[1, 0], &[1, 1]]);
    let a2_inv = m(&[&[1, -1], &[0, 1]]);
    let a3_inv = m(&[&[1, 0], &[-1, 1]]);
    let spec = |generator, domain_cell, extra, codomain_cell, matrix: &RatMatrix| PieceSpec {
        generator,
        domain_cell,
        extra_inequalities: extra,
        codomain_cell,
        matrix: matrix.clone(),
    };
    let pieces = vec![
        // a = f1
        spec(a, 0, y_le_x(), 0, &a11),
        spec(a, 0, x_le_y(), 1, &a12),
        spec(a, 1, vec![], 2, &a2),
        spec(a, 2, vec![], 2, &a3),
        // a'
        spec(ai, 0, vec![], 0, &a11_inv),
        spec(ai, 1, vec![], 0, &a12_inv),
        spec(ai, 2, y_le_x(), 1, &a2_inv),
        spec(ai, 2, x_le_y(), 2, &a3_inv),
        // b = the conjugate of a by the cell rotation
        spec(b, 0, vec![], 1, &a2),
        spec(b, 1, vec![], 1, &a3),
        spec(b, 2, y_le_x(), 2, &a11),
        spec(b, 2, x_le_y(), 0, &a12),
        // b'
        spec(bi, 0, vec![], 2, &a12_inv),
        spec(bi, 1, y_le_x(), 0, &a2_inv),
        spec(bi, 1, x_le_y(), 1, &a3_inv),
        spec(bi, 2, vec![], 2, &a11_inv),
    ];
    let basepoint = PLPoint::rational(0, RatVector::from_ints(&[1, 0]));
    Ledger::assemble(
        "ydelta".into(),
        Some((0, 4)),
        generators,
        cells,
        gluings,
        pieces,
        basepoint,
    )
    .expect("built-in ledger is well-formed")
}

/// The braid-group ledger: four quadrant cells for the four train tracks,
/// generators `s1`, `s2` and their inverses, five pieces per signed
/// generator (one cell subdivided each). The remaining pieces beyond the
/// published ones are completed so that boundary agreement, inverse
/// consistency and the braid relation all hold exactly; `s2`'s pieces are
/// `s1`'s under the cell relabeling `i -> i+2`.
pub fn builtin_b3() -> Ledger {
    let cells = (0..4)
        .map(|i| Cell {
            id: i,
            name: format!("V{}", i + 1),
            cone: Cone::orthant(2),
        })
        .collect();
    // V1/V2 and V3/V4 share their y-axis faces ((0,t) -> (0,t)); V2/V3 and
    // V4/V1 share their x-axis faces ((t,0) -> (t,0)). The matrices send
    // off-face points outside the target quadrant.
    let flip_x = m(&[&[-1, 0], &[0, 1]]);
    let flip_y = m(&[&[1, 0], &[0, -1]]);
    let gluings = vec![
        Gluing {
            cell_a: 0,
            cell_b: 1,
            matrix: flip_x.clone(),
        },
        Gluing {
            cell_a: 1,
            cell_b: 2,
            matrix: flip_y.clone(),
        },
        Gluing {
            cell_a: 2,
            cell_b: 3,
            matrix: flip_x,
        },
        Gluing {
            cell_a: 3,
            cell_b: 0,
            matrix: flip_y,
        },
    ];
    let generators = vec![
        Generator { name: "s1".into() },
        Generator { name: "s2".into() },
    ];
    let s1 = SignedGen::new(0, false);
    let s1i = SignedGen::new(0, true);
    let s2 = SignedGen::new(1, false);
    let s2i = SignedGen::new(1, true);
    let spec = |generator, domain_cell, extra, codomain_cell, matrix| PieceSpec {
        generator,
        domain_cell,
        extra_inequalities: extra,
        codomain_cell,
        matrix,
    };
    let pieces = vec![
        // s1: V1 subdivides along {x = y}
        spec(s1, 0, y_le_x(), 0, m(&[&[1, -1], &[0, 1]])),
        spec(s1, 0, x_le_y(), 1, m(&[&[-1, 1], &[1, 0]])),
        spec(s1, 1, vec![], 2, m(&[&[0, 1], &[1, 0]])),
        spec(s1, 2, vec![], 3, m(&[&[0, 1], &[1, 1]])),
        spec(s1, 3, vec![], 3, m(&[&[1, 1], &[0, 1]])),
        // s1': V4 subdivides
        spec(s1i, 0, vec![], 0, m(&[&[1, 1], &[0, 1]])),
        spec(s1i, 1, vec![], 0, m(&[&[0, 1], &[1, 1]])),
        spec(s1i, 2, vec![], 1, m(&[&[0, 1], &[1, 0]])),
        spec(s1i, 3, y_le_x(), 3, m(&[&[1, -1], &[0, 1]])),
        spec(s1i, 3, x_le_y(), 2, m(&[&[-1, 1], &[1, 0]])),
        // s2: V3 subdivides (s1's table shifted by two cells)
        spec(s2, 0, vec![], 1, m(&[&[0, 1], &[1, 1]])),
        spec(s2, 1, vec![], 1, m(&[&[1, 1], &[0, 1]])),
        spec(s2, 2, y_le_x(), 2, m(&[&[1, -1], &[0, 1]])),
        spec(s2, 2, x_le_y(), 3, m(&[&[-1, 1], &[1, 0]])),
        spec(s2, 3, vec![], 0, m(&[&[0, 1], &[1, 0]])),
        // s2': V2 subdivides
        spec(s2i, 0, vec![], 3, m(&[&[0, 1], &[1, 0]])),
        spec(s2i, 1, y_le_x(), 1, m(&[&[1, -1], &[0, 1]])),
        spec(s2i, 1, x_le_y(), 0, m(&[&[-1, 1], &[1, 0]])),
        spec(s2i, 2, vec![], 2, m(&[&[1, 1], &[0, 1]])),
        spec(s2i, 3, vec![], 2, m(&[&[0, 1], &[1, 1]])),
    ];
    let basepoint = PLPoint::rational(0, RatVector::from_ints(&[1, 2]));
    Ledger::assemble(
        "b3".into(),
        Some((0, 4)),
        generators,
        cells,
        gluings,
        pieces,
        basepoint,
    )
    .expect("built-in ledger is well-formed")
}

// ---------------------------------------------------------------------------
// On-disk format (JSON, format_version 1)
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SurfaceFile {
    genus: u32,
    punctures: u32,
}

#[derive(Serialize, Deserialize)]
struct CellFile {
    id: usize,
    name: String,
    dim: usize,
    inequalities: Vec<Vec<i64>>,
    equalities: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct GluingFile {
    cell_a: usize,
    cell_b: usize,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PieceFile {
    generator: String,
    inverse: bool,
    domain_cell: usize,
    domain_inequalities: Vec<Vec<i64>>,
    codomain_cell: usize,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct BasepointFile {
    cell: usize,
    coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct LedgerFile {
    format_version: u32,
    name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    surface: Option<SurfaceFile>,
    generators: Vec<String>,
    cells: Vec<CellFile>,
    gluings: Vec<GluingFile>,
    pieces: Vec<PieceFile>,
    basepoint: BasepointFile,
}

fn int_rows_to_i64(rows: &[Vec<Int>]) -> Result<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|e| {
                    i64::try_from(e).map_err(|_| {
                        Error::Validation("integer row entry exceeds the i64 file format".into())
                    })
                })
                .collect()
        })
        .collect()
}

fn i64_rows_to_int(rows: &[Vec<i64>]) -> Vec<Vec<Int>> {
    rows.iter()
        .map(|r| r.iter().map(|&e| Int::from(e)).collect())
        .collect()
}

fn matrix_to_grid(mat: &RatMatrix) -> Result<Vec<Vec<i64>>> {
    let mut grid = Vec::with_capacity(mat.rows());
    for r in 0..mat.rows() {
        let mut rowv = Vec::with_capacity(mat.cols());
        for c in 0..mat.cols() {
            let e = mat.at(r, c);
            if !num_traits::One::is_one(e.denom()) {
                return Err(Error::Validation(
                    "piece and gluing matrices must have integer entries".into(),
                ));
            }
            rowv.push(i64::try_from(e.numer()).map_err(|_| {
                Error::Validation("matrix entry exceeds the i64 file format".into())
            })?);
        }
        grid.push(rowv);
    }
    Ok(grid)
}

fn grid_to_matrix(grid: &[Vec<i64>]) -> Result<RatMatrix> {
    if grid.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    let cols = grid[0].len();
    if grid.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    Ok(RatMatrix::from_rows(
        grid.iter()
            .map(|r| r.iter().map(|&e| Rat::from_integer(Int::from(e))).collect())
            .collect(),
    ))
}

pub fn save_ledger(ledger: &Ledger, path: &Path) -> Result<()> {
    let file = ledger_to_file(ledger)?;
    let json = serde_json::to_string_pretty(&file)
        .map_err(|e| Error::Validation(format!("serialize: {e}")))?;
    std::fs::write(path, json + "\n")?;
    Ok(())
}

pub fn ledger_to_json(ledger: &Ledger) -> Result<String> {
    let file = ledger_to_file(ledger)?;
    serde_json::to_string_pretty(&file).map_err(|e| Error::Validation(format!("serialize: {e}")))
}

fn ledger_to_file(ledger: &Ledger) -> Result<LedgerFile> {
    let basecoords = match &ledger.basepoint.coords {
        Coords::Rat(v) => v.entries().iter().map(render_rat).collect(),
        Coords::Alg(_) => {
            return Err(Error::Validation(
                "ledger basepoints must have rational coordinates".into(),
            ))
        }
    };
    Ok(LedgerFile {
        format_version: 1,
        name: ledger.name.clone(),
        surface: ledger.surface.map(|(genus, punctures)| SurfaceFile {
            genus,
            punctures,
        }),
        generators: ledger.generator_names(),
        cells: ledger
            .cells
            .iter()
            .map(|c| {
                Ok(CellFile {
                    id: c.id,
                    name: c.name.clone(),
                    dim: c.cone.ambient_dim,
                    inequalities: int_rows_to_i64(&c.cone.inequalities)?,
                    equalities: int_rows_to_i64(&c.cone.equalities)?,
                })
            })
            .collect::<Result<_>>()?,
        gluings: ledger
            .gluings
            .iter()
            .map(|g| {
                Ok(GluingFile {
                    cell_a: g.cell_a,
                    cell_b: g.cell_b,
                    matrix: matrix_to_grid(&g.matrix)?,
                })
            })
            .collect::<Result<_>>()?,
        pieces: ledger
            .pieces
            .iter()
            .map(|p| {
                Ok(PieceFile {
                    generator: ledger.generators[p.generator.index].name.clone(),
                    inverse: p.generator.inverse,
                    domain_cell: p.domain_cell,
                    domain_inequalities: int_rows_to_i64(&p.extra_inequalities)?,
                    codomain_cell: p.codomain_cell,
                    matrix: matrix_to_grid(&p.matrix)?,
                })
            })
            .collect::<Result<_>>()?,
        basepoint: BasepointFile {
            cell: ledger.basepoint.cell,
            coords: basecoords,
        },
    })
}

pub fn load_ledger(path: &Path) -> Result<Ledger> {
    let text = std::fs::read_to_string(path)?;
    ledger_from_json(&text)
}

pub fn ledger_from_json(text: &str) -> Result<Ledger> {
    let file: LedgerFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("{e}")))?;
    if file.format_version != 1 {
        return Err(Error::Parse(format!(
            "unsupported format_version {}",
            file.format_version
        )));
    }
    let generators: Vec<Generator> = file
        .generators
        .iter()
        .map(|name| Generator { name: name.clone() })
        .collect();
    let cells: Vec<Cell> = file
        .cells
        .iter()
        .map(|c| {
            let ineqs = i64_rows_to_int(&c.inequalities);
            let eqs = i64_rows_to_int(&c.equalities);
            for r in ineqs.iter().chain(&eqs) {
                if r.len() != c.dim {
                    return Err(Error::Parse(format!(
                        "cell `{}`: constraint row length {} does not match dim {}",
                        c.name,
                        r.len(),
                        c.dim
                    )));
                }
            }
            Ok(Cell {
                id: c.id,
                name: c.name.clone(),
                cone: Cone::new(c.dim, ineqs, eqs),
            })
        })
        .collect::<Result<_>>()?;
    let gluings = file
        .gluings
        .iter()
        .map(|g| {
            Ok(Gluing {
                cell_a: g.cell_a,
                cell_b: g.cell_b,
                matrix: grid_to_matrix(&g.matrix)?,
            })
        })
        .collect::<Result<_>>()?;
    let names = file.generators.clone();
    let piece_specs = file
        .pieces
        .iter()
        .map(|p| {
            let index = names
                .iter()
                .position(|n| *n == p.generator)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{}`", p.generator)))?;
            Ok(PieceSpec {
                generator: SignedGen::new(index, p.inverse),
                domain_cell: p.domain_cell,
                extra_inequalities: i64_rows_to_int(&p.domain_inequalities),
                codomain_cell: p.codomain_cell,
                matrix: grid_to_matrix(&p.matrix)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let coords = file
        .basepoint
        .coords
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<Rat>>>()?;
    if coords.is_empty() {
        return Err(Error::Parse("basepoint has no coordinates".into()));
    }
    let basepoint = PLPoint::rational(file.basepoint.cell, RatVector::new(coords));
    let ledger = Ledger::assemble(
        file.name,
        file.surface.map(|s| (s.genus, s.punctures)),
        generators,
        cells,
        gluings,
        piece_specs,
        basepoint,
    )?;
    quick_containment_check(&ledger)?;
    Ok(ledger)
}

/// Cheap load-time containment check: for two-dimensional pieces the domain
/// extreme rays must lie in the cell cone and map into the codomain cone.
fn quick_containment_check(ledger: &Ledger) -> Result<()> {
    for piece in &ledger.pieces {
        let cell = &ledger.cells[piece.domain_cell];
        if cell.cone.ambient_dim != 2 {
            continue;
        }
        let codomain = &ledger.cells[piece.codomain_cell];
        for ray in piece.domain_cone.extreme_rays_2d() {
            let v = RatVector::new(ray.iter().map(|e| Rat::from_integer(e.clone())).collect());
            if !cell.cone.contains(&Coords::Rat(v.clone()))? {
                return Err(Error::Validation(format!(
                    "piece `{}` of `{}`: domain leaves its cell",
                    piece.label,
                    ledger.signed_gen_name(piece.generator)
                )));
            }
            let image = piece.matrix.apply(&v)?;
            if !codomain.cone.contains(&Coords::Rat(image))? {
                return Err(Error::ImageOutsideCodomain {
                    cell: codomain.name.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Structural equality used by the round-trip tests: compares everything
/// the file format records.
pub fn structurally_equal(a: &Ledger, b: &Ledger) -> bool {
    let basepoints = match (&a.basepoint.coords, &b.basepoint.coords) {
        (Coords::Rat(x), Coords::Rat(y)) => a.basepoint.cell == b.basepoint.cell && x == y,
        _ => false,
    };
    a.name == b.name
        && a.surface == b.surface
        && a.generators == b.generators
        && a.cells == b.cells
        && a.gluings == b.gluings
        && basepoints
        && a.pieces.len() == b.pieces.len()
        && a.pieces.iter().zip(&b.pieces).all(|(p, q)| {
            p.generator == q.generator
                && p.domain_cell == q.domain_cell
                && p.extra_inequalities == q.extra_inequalities
                && p.codomain_cell == q.codomain_cell
                && p.matrix == q.matrix
        })
}

//! The ledger validator: certifies that a ledger is a consistent integral
//! cone complex action. Five checks, each reported with witnesses:
//!
//! (a) containment — piece domains lie in their cells, images in their
//!     codomain cells, on boundary rays and sampled points;
//! (b) coverage — the pieces of each signed generator tile every cell;
//! (c) boundary agreement — adjacent pieces give the same complex point on
//!     shared rays (exact, for two-dimensional cells);
//! (d) inverse consistency — `g'` undoes `g` on sampled interior points;
//! (e) relators — supplied word pairs act identically on sampled points.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cone::{Coords, PLPoint, Piece, SignedGen};
use crate::error::{Error, Result};
use crate::ledger::Ledger;
use crate::linalg::RatVector;
use crate::rational::{Int, Rat};
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<CheckReport>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

const MAX_WITNESSES: usize = 8;

fn push_failure(failures: &mut Vec<String>, msg: String) {
    if failures.len() < MAX_WITNESSES {
        failures.push(msg);
    }
}

fn ray_to_coords(ray: &[Int]) -> Coords {
    Coords::Rat(RatVector::new(
        ray.iter().map(|e| Rat::from_integer(e.clone())).collect(),
    ))
}

/// Random point of a 2-dim cone: a nonnegative integer combination of its
/// extreme rays with coefficients up to 10^6, never both zero.
fn sample_cone_point(rng: &mut ChaCha8Rng, rays: &[Vec<Int>], strict: bool) -> Option<RatVector> {
    if rays.is_empty() {
        return None;
    }
    let lo = if strict { 1u64 } else { 0u64 };
    let dim = rays[0].len();
    loop {
        let mut acc = vec![Int::from(0); dim];
        let mut nonzero = false;
        for ray in rays {
            let c = rng.gen_range(lo..=1_000_000u64);
            if c > 0 {
                nonzero = true;
            }
            for (a, r) in acc.iter_mut().zip(ray) {
                *a += r * Int::from(c);
            }
        }
        if nonzero {
            return Some(RatVector::new(
                acc.into_iter().map(Rat::from_integer).collect(),
            ));
        }
    }
}

fn signed_gens(ledger: &Ledger) -> Vec<SignedGen> {
    let mut out = Vec::new();
    for index in 0..ledger.generators.len() {
        out.push(SignedGen::new(index, false));
        out.push(SignedGen::new(index, true));
    }
    out
}

/// Runs the five validator checks; `samples` points per (generator, cell).
pub fn validate_ledger(
    ledger: &Ledger,
    relators: &[(Word, Word)],
    samples: usize,
    seed: u64,
) -> Result<ValidationReport> {
    let mut checks = Vec::new();
    checks.push(check_containment(ledger, samples, seed)?);
    checks.push(check_coverage(ledger, samples, seed.wrapping_add(1))?);
    checks.push(check_boundary_agreement(ledger)?);
    checks.push(check_inverses(ledger, samples, seed.wrapping_add(2))?);
    checks.push(check_relators(ledger, relators, samples, seed.wrapping_add(3))?);
    Ok(ValidationReport { checks })
}

fn check_containment(ledger: &Ledger, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for piece in &ledger.pieces {
        let cell = &ledger.cells[piece.domain_cell];
        let codomain = &ledger.cells[piece.codomain_cell];
        let gen_name = ledger.signed_gen_name(piece.generator);
        let mut points: Vec<RatVector> = Vec::new();
        if cell.cone.ambient_dim == 2 {
            let rays = piece.domain_cone.extreme_rays_2d();
            for ray in &rays {
                points.push(RatVector::new(
                    ray.iter().map(|e| Rat::from_integer(e.clone())).collect(),
                ));
            }
            for _ in 0..samples {
                if let Some(p) = sample_cone_point(&mut rng, &rays, false) {
                    points.push(p);
                }
            }
        }
        for v in points {
            let coords = Coords::Rat(v.clone());
            if !cell.cone.contains(&coords)? {
                push_failure(
                    &mut failures,
                    format!(
                        "piece `{}` of `{}`: domain point {:?} leaves cell {}",
                        piece.label,
                        gen_name,
                        v.entries(),
                        cell.name
                    ),
                );
                continue;
            }
            let image = piece.matrix.apply(&v)?;
            if !codomain.cone.contains(&Coords::Rat(image.clone()))? {
                push_failure(
                    &mut failures,
                    format!(
                        "piece `{}` of `{}`: image of a domain point leaves codomain {}",
                        piece.label, gen_name, codomain.name
                    ),
                );
            }
        }
    }
    Ok(CheckReport {
        name: "containment".into(),
        passed: failures.is_empty(),
        failures,
    })
}

fn check_coverage(ledger: &Ledger, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for sg in signed_gens(ledger) {
        let gen_name = ledger.signed_gen_name(sg);
        for cell in &ledger.cells {
            let pieces: Vec<&Piece> = ledger
                .pieces_of(sg)
                .filter(|p| p.domain_cell == cell.id)
                .collect();
            if pieces.is_empty() {
                push_failure(
                    &mut failures,
                    format!("`{}` has no pieces on cell {}", gen_name, cell.name),
                );
                continue;
            }
            if cell.cone.ambient_dim == 2 {
                // Exact tiling probe: every angular sector cut out by any
                // boundary ray must belong to some piece, and so must the
                // rays themselves.
                let mut rays = cell.cone.extreme_rays_2d();
                for p in &pieces {
                    for r in p.domain_cone.extreme_rays_2d() {
                        if !rays.contains(&r) {
                            rays.push(r);
                        }
                    }
                }
                rays.sort_by(|a, b| {
                    let cross = &a[0] * &b[1] - &a[1] * &b[0];
                    use num_traits::Signed;
                    if cross.is_positive() {
                        std::cmp::Ordering::Less
                    } else if cross.is_negative() {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Equal
                    }
                });
                let mut probes: Vec<Vec<Int>> = rays.clone();
                for pair in rays.windows(2) {
                    probes.push(vec![&pair[0][0] + &pair[1][0], &pair[0][1] + &pair[1][1]]);
                }
                for probe in probes {
                    let coords = ray_to_coords(&probe);
                    if !cell.cone.contains(&coords)? {
                        continue;
                    }
                    let covered = pieces
                        .iter()
                        .map(|p| p.domain_cone.contains(&coords))
                        .collect::<Result<Vec<bool>>>()?
                        .into_iter()
                        .any(|b| b);
                    if !covered {
                        push_failure(
                            &mut failures,
                            format!(
                                "`{}` leaves direction {:?} of cell {} uncovered",
                                gen_name, probe, cell.name
                            ),
                        );
                    }
                }
            }
            // randomized probe (all dimensions): find_piece must succeed
            if cell.cone.ambient_dim == 2 {
                let rays = cell.cone.extreme_rays_2d();
                for _ in 0..samples {
                    if let Some(v) = sample_cone_point(&mut rng, &rays, false) {
                        let p = PLPoint::rational(cell.id, v);
                        if ledger.find_piece(sg, &p).is_err() {
                            push_failure(
                                &mut failures,
                                format!(
                                    "`{}` has no piece for a sampled point of {}",
                                    gen_name, cell.name
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        name: "coverage".into(),
        passed: failures.is_empty(),
        failures,
    })
}

fn check_boundary_agreement(ledger: &Ledger) -> Result<CheckReport> {
    let mut failures = Vec::new();
    // Shared rays inside one cell: for each pair of pieces of the same
    // signed generator on the same 2-dim cell, any extreme ray of one domain
    // lying in the other domain must map to the same complex point.
    for sg in signed_gens(ledger) {
        let gen_name = ledger.signed_gen_name(sg);
        for cell in &ledger.cells {
            if cell.cone.ambient_dim != 2 {
                continue;
            }
            let pieces: Vec<&Piece> = ledger
                .pieces_of(sg)
                .filter(|p| p.domain_cell == cell.id)
                .collect();
            for (i, p) in pieces.iter().enumerate() {
                for q in pieces.iter().skip(i + 1) {
                    for ray in p.domain_cone.extreme_rays_2d() {
                        let coords = ray_to_coords(&ray);
                        if !q.domain_cone.contains(&coords)? {
                            continue;
                        }
                        let point = PLPoint::rational(
                            cell.id,
                            coords.as_rat().unwrap().clone(),
                        );
                        let pa = soften(apply_via(ledger, p, &point))?;
                        let pb = soften(apply_via(ledger, q, &point))?;
                        let agree = match (&pa, &pb) {
                            (Ok(x), Ok(y)) => ledger.points_equal(x, y)?,
                            _ => false,
                        };
                        if !agree {
                            push_failure(
                                &mut failures,
                                format!(
                                    "`{}`: pieces `{}` and `{}` disagree on ray {:?} of {}",
                                    gen_name, p.label, q.label, ray, cell.name
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    // Shared rays across a gluing: pieces on both sides of a glued face must
    // send identified points to identified points.
    for g in &ledger.gluings {
        let ca = &ledger.cells[g.cell_a];
        let cb = &ledger.cells[g.cell_b];
        if ca.cone.ambient_dim != 2 || cb.cone.ambient_dim != 2 {
            continue;
        }
        for ray in ca.cone.extreme_rays_2d() {
            let va = RatVector::new(ray.iter().map(|e| Rat::from_integer(e.clone())).collect());
            let vb = g.matrix.apply(&va)?;
            if !cb.cone.contains(&Coords::Rat(vb.clone()))? {
                continue; // not the glued face
            }
            let pa = PLPoint::rational(g.cell_a, va);
            let pb = PLPoint::rational(g.cell_b, vb);
            for sg in signed_gens(ledger) {
                let gen_name = ledger.signed_gen_name(sg);
                let qa = soften(ledger.apply_generator(sg, &pa).map(|(p, _)| p))?;
                let qb = soften(ledger.apply_generator(sg, &pb).map(|(p, _)| p))?;
                let agree = match (&qa, &qb) {
                    (Ok(x), Ok(y)) => ledger.points_equal(x, y)?,
                    _ => false,
                };
                if !agree {
                    push_failure(
                        &mut failures,
                        format!(
                            "`{}` disagrees across the glued face {} / {} on ray {:?}",
                            gen_name, ca.name, cb.name, ray
                        ),
                    );
                }
            }
        }
    }
    Ok(CheckReport {
        name: "boundary-agreement".into(),
        passed: failures.is_empty(),
        failures,
    })
}

fn apply_via(ledger: &Ledger, piece: &Piece, p: &PLPoint) -> Result<PLPoint> {
    let codomain = &ledger.cells[piece.codomain_cell];
    crate::cone::apply_piece(piece, p, &codomain.cone, &codomain.name)
}

/// Evaluation failures (a point not covered by any piece, an image leaving
/// its codomain) are findings for the report, not hard errors.
fn soften(r: Result<PLPoint>) -> Result<std::result::Result<PLPoint, String>> {
    match r {
        Ok(p) => Ok(Ok(p)),
        Err(Error::NoPieceFound { generator, cell }) => Ok(Err(format!(
            "no piece of `{generator}` covers a point of {cell}"
        ))),
        Err(Error::ImageOutsideCodomain { cell }) => {
            Ok(Err(format!("an image left its codomain cell {cell}")))
        }
        Err(e) => Err(e),
    }
}

fn check_inverses(ledger: &Ledger, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for sg in signed_gens(ledger) {
        let gen_name = ledger.signed_gen_name(sg);
        for cell in &ledger.cells {
            if cell.cone.ambient_dim != 2 {
                continue;
            }
            let rays = cell.cone.extreme_rays_2d();
            for _ in 0..samples {
                let Some(v) = sample_cone_point(&mut rng, &rays, true) else {
                    continue;
                };
                let p = PLPoint::rational(cell.id, v);
                let roundtrip = (|| -> Result<std::result::Result<PLPoint, String>> {
                    let q = match soften(ledger.apply_generator(sg, &p).map(|(p, _)| p))? {
                        Ok(q) => q,
                        Err(msg) => return Ok(Err(msg)),
                    };
                    soften(ledger.apply_generator(sg.inverted(), &q).map(|(p, _)| p))
                })()?;
                let same = match &roundtrip {
                    Ok(back) => {
                        back.cell == p.cell
                            && matches!(
                                (&back.coords, &p.coords),
                                (Coords::Rat(x), Coords::Rat(y)) if x == y
                            )
                    }
                    Err(_) => false,
                };
                if !same {
                    push_failure(
                        &mut failures,
                        format!(
                            "`{}` then `{}` does not return a sampled interior point of {}",
                            gen_name,
                            ledger.signed_gen_name(sg.inverted()),
                            cell.name
                        ),
                    );
                }
            }
        }
    }
    Ok(CheckReport {
        name: "inverse-consistency".into(),
        passed: failures.is_empty(),
        failures,
    })
}

fn check_relators(
    ledger: &Ledger,
    relators: &[(Word, Word)],
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for (lhs, rhs) in relators {
        for cell in &ledger.cells {
            if cell.cone.ambient_dim != 2 {
                continue;
            }
            let rays = cell.cone.extreme_rays_2d();
            for _ in 0..samples {
                let Some(v) = sample_cone_point(&mut rng, &rays, true) else {
                    continue;
                };
                let p = PLPoint::rational(cell.id, v);
                let a = soften(evaluate_word_point(ledger, lhs, &p))?;
                let b = soften(evaluate_word_point(ledger, rhs, &p))?;
                let agree = match (&a, &b) {
                    (Ok(x), Ok(y)) => ledger.points_equal(x, y)?,
                    _ => false,
                };
                if !agree {
                    let names = ledger.generator_names();
                    push_failure(
                        &mut failures,
                        format!(
                            "relator `{}` = `{}` fails at a sampled point of {}",
                            lhs.unparse(&names),
                            rhs.unparse(&names),
                            cell.name
                        ),
                    );
                }
            }
        }
    }
    Ok(CheckReport {
        name: "relators".into(),
        passed: failures.is_empty(),
        failures,
    })
}

fn evaluate_word_point(ledger: &Ledger, word: &Word, start: &PLPoint) -> Result<PLPoint> {
    let mut p = start.clone();
    for sg in word.application_order() {
        let (next, _) = ledger.apply_generator(sg, &p)?;
        p = next;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::{builtin_b3, builtin_ydelta};

    #[test]
    fn builtins_pass_all_checks() {
        let b3 = builtin_b3();
        let names = b3.generator_names();
        let braid = (
            Word::parse("s1 s2 s1", &names).unwrap(),
            Word::parse("s2 s1 s2", &names).unwrap(),
        );
        let report = validate_ledger(&b3, &[braid], 50, 7).unwrap();
        for c in &report.checks {
            assert!(c.passed, "b3 check `{}` failed: {:?}", c.name, c.failures);
        }

        let y = builtin_ydelta();
        let names = y.generator_names();
        let trivial = (
            Word::parse("a a'", &names).unwrap(),
            Word::parse("", &names).unwrap(),
        );
        let report = validate_ledger(&y, &[trivial], 50, 7).unwrap();
        for c in &report.checks {
            assert!(c.passed, "ydelta check `{}` failed: {:?}", c.name, c.failures);
        }
    }

    #[test]
    fn full_twist_acts_trivially_on_b3() {
        // (s1 s2)^3 is central and acts as the identity on the complex.
        let b3 = builtin_b3();
        let names = b3.generator_names();
        let full_twist = Word::parse("s1 s2 s1 s2 s1 s2", &names).unwrap();
        let report = validate_ledger(
            &b3,
            &[(full_twist, Word::parse("", &names).unwrap())],
            30,
            11,
        )
        .unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn corrupted_matrix_is_caught() {
        let mut b3 = builtin_b3();
        // flip one entry of the s1 piece on V2
        let idx = b3
            .pieces
            .iter()
            .position(|p| p.generator == SignedGen::new(0, false) && p.domain_cell == 1)
            .unwrap();
        *b3.pieces[idx].matrix.at_mut(1, 1) = crate::rational::rat_int(5);
        let report = validate_ledger(&b3, &[], 30, 3).unwrap();
        assert!(!report.all_passed());
    }
}

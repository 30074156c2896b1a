//! Exact real algebraic numbers: Sturm sequences, root isolation and
//! refinement, sign determination of polynomial expressions at an algebraic
//! point, and decimal rendering by interval refinement (no floating point).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{rat_int, sign, Int, Rat};

/// Sign of a polynomial expression evaluated at an algebraic point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: i8) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        chain.push(r);
    }
    chain.pop();
    chain
}

fn sign_variations(chain: &[Poly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut variations = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Exact number of real roots of a square-free `p` in the open interval
/// `(lo, hi)`. Errors if an endpoint is a root.
pub fn sturm_count(p: &Poly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.sign_at(lo) == 0 || p.sign_at(hi) == 0 {
        return Err(Error::EndpointIsRoot);
    }
    if lo >= hi {
        return Ok(0);
    }
    let chain = sturm_chain(p);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// A real algebraic number: a square-free defining polynomial together with
/// a rational isolating interval containing exactly one of its real roots.
/// A rational value is stored with `lo == hi`.
#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    poly: Poly,
    lo: Rat,
    hi: Rat,
}

impl RealAlgebraic {
    /// Builds from an isolating interval; the polynomial is replaced by its
    /// square-free part and the isolation is verified.
    pub fn new(poly: Poly, lo: Rat, hi: Rat) -> Result<Self> {
        let sf = poly.square_free_part();
        if lo == hi {
            if !sf.eval(&lo).is_zero() {
                return Err(Error::Validation(
                    "degenerate interval endpoint is not a root".into(),
                ));
            }
            return Ok(RealAlgebraic { poly: sf, lo, hi });
        }
        let n = sturm_count(&sf, &lo, &hi)?;
        if n != 1 {
            return Err(Error::Validation(format!(
                "interval is not isolating (contains {n} roots)"
            )));
        }
        Ok(RealAlgebraic { poly: sf, lo, hi })
    }

    pub fn from_rational(r: Rat) -> Self {
        RealAlgebraic {
            poly: Poly::x_minus(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn defining_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// Replaces the defining polynomial by a divisor that still vanishes at
    /// this root. Used when a gcd computation exposes a smaller modulus.
    pub(crate) fn with_poly(&self, divisor: Poly) -> Result<RealAlgebraic> {
        RealAlgebraic::new(divisor, self.lo.clone(), self.hi.clone())
    }

    /// Same root, interval width at most `width`.
    pub fn refine(&self, width: &Rat) -> RealAlgebraic {
        assert!(width > &rat_int(0), "width must be positive");
        let mut a = self.clone();
        a.refine_in_place(width);
        a
    }

    fn refine_in_place(&mut self, width: &Rat) {
        if self.is_rational() {
            return;
        }
        // A square-free polynomial changes sign across a simple real root,
        // and the isolating interval contains no other root, so bisection by
        // sign is exact.
        let mut slo = self.poly.sign_at(&self.lo);
        debug_assert!(slo != 0);
        while &(&self.hi - &self.lo) > width {
            let mid = (&self.lo + &self.hi) / rat_int(2);
            let smid = self.poly.sign_at(&mid);
            if smid == 0 {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if smid == slo {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
            slo = self.poly.sign_at(&self.lo);
        }
    }

    fn halve(&mut self) {
        let w = &self.hi - &self.lo;
        if w.is_zero() {
            return;
        }
        self.refine_in_place(&(w / rat_int(2)));
    }

    /// Exact sign of `q` at this point. Zero is decided via
    /// `gcd(q, defining_poly)`; otherwise the interval is refined until the
    /// interval evaluation of `q` has constant sign.
    pub fn sign_of(&self, q: &Poly) -> Sign {
        if q.is_zero() {
            return Sign::Zero;
        }
        if self.is_rational() {
            return Sign::of(q.sign_at(&self.lo));
        }
        let g = q.gcd(&self.poly);
        if !g.is_constant() {
            // g divides the defining polynomial, so its roots are roots of
            // the defining polynomial; the isolating interval contains only
            // this one. The interval endpoints are never roots of the
            // defining polynomial, hence not of g, so a sign change of g
            // across the interval detects q(self) = 0 exactly.
            if g.sign_at(&self.lo) != g.sign_at(&self.hi) {
                return Sign::Zero;
            }
        }
        // q(self) != 0: refine until interval arithmetic decides.
        let mut a = self.clone();
        loop {
            let (vlo, vhi) = q.eval_interval(&a.lo, &a.hi);
            if sign(&vlo) > 0 {
                return Sign::Positive;
            }
            if sign(&vhi) < 0 {
                return Sign::Negative;
            }
            a.halve();
            if a.is_rational() {
                return Sign::of(q.sign_at(&a.lo));
            }
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn compare(&self, other: &RealAlgebraic) -> Ordering {
        if self.is_rational() && other.is_rational() {
            return self.lo.cmp(&other.lo);
        }
        // Equality first: a common root of both defining polynomials lying
        // in both intervals means the numbers are equal.
        let g = self.poly.gcd(&other.poly);
        if !g.is_constant() && self.sign_of(&g) == Sign::Zero && other.sign_of(&g) == Sign::Zero {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.halve();
            b.halve();
        }
    }

    pub fn cmp_rational(&self, r: &Rat) -> Ordering {
        match self.sign_of(&Poly::x_minus(r)) {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// Decimal rendering with `digits` significant digits, by refining the
    /// interval until both endpoints agree on the rendered string.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_rational() {
            return decimal_of_rational(&self.lo, digits);
        }
        let mut a = self.clone();
        loop {
            let slo = decimal_of_rational(&a.lo, digits);
            let shi = decimal_of_rational(&a.hi, digits);
            if slo == shi {
                return slo;
            }
            a.halve();
        }
    }
}

/// Decimal expansion of a rational, truncated toward zero, with the given
/// number of significant digits.
pub fn decimal_of_rational(x: &Rat, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let ax = x.abs();
    let (num, den) = (ax.numer().clone(), ax.denom().clone());
    let int_part: Int = &num / &den;
    let int_str = int_part.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if int_part.is_zero() {
        // 0.xxxx: find the first significant digit.
        let mut rem = num;
        let mut frac = String::new();
        let mut significant = 0usize;
        let mut leading = true;
        while significant < digits {
            rem *= BigInt::from(10);
            let d: Int = &rem / &den;
            rem -= &d * &den;
            let dd = d.to_string();
            frac.push_str(&dd);
            if leading && dd != "0" {
                leading = false;
            }
            if !leading {
                significant += 1;
            }
            if leading && frac.len() > 10_000 {
                break; // absurdly small; bail out rather than loop forever
            }
        }
        out.push_str("0.");
        out.push_str(&frac);
    } else {
        out.push_str(&int_str);
        let have = int_str.len();
        if have < digits {
            out.push('.');
            let mut rem = &num - &int_part * &den;
            for _ in 0..(digits - have) {
                rem *= BigInt::from(10);
                let d: Int = &rem / &den;
                rem -= &d * &den;
                out.push_str(&d.to_string());
            }
        }
    }
    out
}

/// Cauchy root bound: every real root of `p` has absolute value below this.
fn root_bound(p: &Poly) -> Rat {
    let lead = p.leading().abs();
    let mut m = rat_int(0);
    for c in p.coeffs() {
        let v = c.abs() / &lead;
        if v > m {
            m = v;
        }
    }
    m + rat_int(1)
}

/// The largest real root of `p` strictly greater than `bound`, as a
/// `RealAlgebraic` over the square-free part of `p`; `None` if no such root.
pub fn largest_real_root_gt(p: &Poly, bound: &Rat) -> Result<Option<RealAlgebraic>> {
    if p.is_zero() {
        return Err(Error::Validation(
            "largest_real_root_gt of the zero polynomial".into(),
        ));
    }
    let mut s = p.square_free_part();
    if s.is_constant() {
        return Ok(None);
    }
    // A root exactly at the bound is excluded; deflate it away so the bound
    // is usable as a Sturm endpoint.
    if s.eval(bound).is_zero() {
        s = s.deflate_root(bound);
        if s.is_constant() {
            return Ok(None);
        }
    }
    let mut lo = bound.clone();
    let mut hi = root_bound(&s).max(bound + rat_int(1));
    while s.eval(&hi).is_zero() {
        hi += rat_int(1);
    }
    let mut count = sturm_count(&s, &lo, &hi)?;
    if count == 0 {
        return Ok(None);
    }
    // Keep the rightmost root: shrink until the interval isolates one root.
    while count > 1 {
        let mut mid = (&lo + &hi) / rat_int(2);
        // Nudge the midpoint off a root if needed; some dyadic subdivision
        // point between lo and hi misses the finitely many roots.
        let mut step = (&hi - &lo) / rat_int(4);
        while s.eval(&mid).is_zero() {
            mid += &step;
            step /= rat_int(2);
        }
        let right = sturm_count(&s, &mid, &hi)?;
        if right > 0 {
            lo = mid;
            count = right;
        } else {
            hi = mid;
            count = sturm_count(&s, &lo, &hi)?;
        }
    }
    Ok(Some(RealAlgebraic::new(s, lo, hi)?))
}

/// A vector whose entries are polynomials in one algebraic number, reduced
/// modulo a shared square-free modulus.
#[derive(Debug, Clone)]
pub struct AlgVector {
    entries: Vec<Poly>,
    point: RealAlgebraic,
}

impl AlgVector {
    pub fn new(entries: Vec<Poly>, point: RealAlgebraic) -> Self {
        let m = point.defining_poly().clone();
        AlgVector {
            entries: entries.into_iter().map(|e| e.reduce_mod(&m)).collect(),
            point,
        }
    }

    pub fn from_rationals(coords: &[Rat], point: RealAlgebraic) -> Self {
        AlgVector::new(
            coords.iter().map(|c| Poly::constant(c.clone())).collect(),
            point,
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn point(&self) -> &RealAlgebraic {
        &self.point
    }

    pub fn modulus(&self) -> &Poly {
        self.point.defining_poly()
    }

    pub fn sign_of_entry(&self, i: usize) -> Sign {
        self.point.sign_of(&self.entries[i])
    }

    /// Entrywise multiplication by the algebraic point itself (`x * v_i`).
    pub fn scale_by_point(&self) -> AlgVector {
        let m = self.modulus().clone();
        AlgVector {
            entries: self
                .entries
                .iter()
                .map(|e| e.mul_x().reduce_mod(&m))
                .collect(),
            point: self.point.clone(),
        }
    }

    /// True iff every entry evaluates to zero at the point.
    pub fn is_zero_at_point(&self) -> bool {
        self.entries
            .iter()
            .all(|e| self.point.sign_of(e) == Sign::Zero)
    }

    pub fn decimal_entries(&self, digits: usize) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                // Render e(point) by refining the point until the interval
                // evaluation of e pins the digits.
                let mut a = self.point.clone();
                loop {
                    let (lo, hi) = e.eval_interval(a.interval().0, a.interval().1);
                    if lo.is_zero() && hi.is_zero() {
                        return "0".to_string();
                    }
                    let slo = decimal_of_rational(&lo, digits);
                    let shi = decimal_of_rational(&hi, digits);
                    if slo == shi {
                        return slo;
                    }
                    // A value that is exactly zero never settles; detect it.
                    if a.sign_of(e) == Sign::Zero {
                        return "0".to_string();
                    }
                    a.halve();
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::One;

    fn lambda_b3() -> RealAlgebraic {
        // (5 + sqrt(21)) / 2, the larger root of x^2 - 5x + 1
        largest_real_root_gt(&Poly::from_ints(&[1, -5, 1]), &rat_int(1))
            .unwrap()
            .unwrap()
    }

    #[test]
    fn sturm_counts_for_quadratics() {
        // Roots of x^2-5x+1 are (5 +- sqrt 21)/2, roughly 0.209 and 4.791
        // (quadratic-formula oracle).
        let p = Poly::from_ints(&[1, -5, 1]);
        assert_eq!(sturm_count(&p, &rat_int(1), &rat_int(10)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &rat_int(-1), &rat_int(10)).unwrap(), 2);
        assert_eq!(
            sturm_count(&Poly::from_ints(&[-1, 1]), &rat_int(0), &rat_int(2)).unwrap(),
            1
        );
        assert!(matches!(
            sturm_count(&Poly::from_ints(&[-1, 1]), &rat_int(1), &rat_int(2)),
            Err(Error::EndpointIsRoot)
        ));
    }

    #[test]
    fn largest_root_examples() {
        let l = lambda_b3();
        assert_eq!(l.cmp_rational(&rat(479, 100)), Ordering::Greater);
        assert_eq!(l.cmp_rational(&rat(48, 10)), Ordering::Less);

        // x^2 - 3x + 1: larger root is phi^2 = (3+sqrt5)/2.
        let phi2 = largest_real_root_gt(&Poly::from_ints(&[1, -3, 1]), &rat_int(1))
            .unwrap()
            .unwrap();
        assert_eq!(phi2.cmp_rational(&rat(26, 10)), Ordering::Greater);
        assert_eq!(phi2.cmp_rational(&rat(27, 10)), Ordering::Less);

        // (x-1)^d has no root beyond 1.
        let p = Poly::from_ints(&[-1, 1])
            .mul(&Poly::from_ints(&[-1, 1]))
            .mul(&Poly::from_ints(&[-1, 1]));
        assert!(largest_real_root_gt(&p, &rat_int(1)).unwrap().is_none());
    }

    #[test]
    fn sign_at_examples() {
        let l = lambda_b3();
        assert_eq!(l.sign_of(&Poly::from_ints(&[1, -5, 1])), Sign::Zero);
        assert_eq!(l.sign_of(&Poly::from_ints(&[-3, 1])), Sign::Positive);
        assert_eq!(l.sign_of(&Poly::from_ints(&[-1])), Sign::Negative);
        // multiple of the defining polynomial also vanishes
        let q = Poly::from_ints(&[1, -5, 1]).mul(&Poly::from_ints(&[7, 3]));
        assert_eq!(l.sign_of(&q), Sign::Zero);
    }

    #[test]
    fn refinement_examples() {
        let l = lambda_b3();
        let width = Rat::new(Int::one(), BigInt::from(10u8).pow(30));
        let r = l.refine(&width);
        let (lo, hi) = r.interval();
        assert!(&(hi - lo) <= &width);
        // Same root: comparison with the original is Equal.
        assert_eq!(r.compare(&l), Ordering::Equal);

        let q = RealAlgebraic::from_rational(rat(7, 3));
        let r = q.refine(&width);
        assert!(r.is_rational());
        assert_eq!(r.interval().0, &rat(7, 3));
    }

    #[test]
    fn decimal_of_lambda_matches_independent_sqrt() {
        // Oracle: sqrt(21) by integer bisection to 40 digits, then
        // (5 + sqrt21)/2 truncated to 30 significant digits.
        let scale = BigInt::from(10u8).pow(40);
        let target = BigInt::from(21) * &scale * &scale;
        let mut lo = BigInt::from(4) * &scale;
        let mut hi = BigInt::from(5) * &scale;
        while &hi - &lo > BigInt::one() {
            let mid = (&lo + &hi) / 2;
            if &mid * &mid <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // lambda = (5*scale + sqrt

        let lam_lo = Rat::new(BigInt::from(5) * &scale + &lo, BigInt::from(2) * &scale);
        let oracle = decimal_of_rational(&lam_lo, 30);

        let l = lambda_b3();
        assert_eq!(l.to_decimal(30), oracle);
        assert_eq!(l.to_decimal(10), "4.791287847");
    }

    #[test]
    fn phi_squared_decimal() {
        let phi2 = largest_real_root_gt(&Poly::from_ints(&[1, -3, 1]), &rat_int(1))
            .unwrap()
            .unwrap();
        assert_eq!(phi2.to_decimal(11), "2.6180339887");
    }

    #[test]
    fn alg_vector_scaling_and_signs() {
        let l = lambda_b3();
        // v = (1, x - 2) is the normalized eigenvector of [[2,1],[5,3]].
        let v = AlgVector::new(vec![Poly::one(), Poly::from_ints(&[-2, 1])], l);
        assert_eq!(v.sign_of_entry(0), Sign::Positive);
        assert_eq!(v.sign_of_entry(1), Sign::Positive);
        let xv = v.scale_by_point();
        // x * (x - 2) = x^2 - 2x = 3x - 1 mod (x^2 - 5x + 1)
        assert_eq!(xv.entries()[1], Poly::from_ints(&[-1, 3]));
    }
}

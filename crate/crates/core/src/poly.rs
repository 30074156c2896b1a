//! Univariate polynomials over the rationals, coefficients lowest degree
//! first. The zero polynomial is the empty coefficient list.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{rat_int, render_rat_short, sign, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![rat_int(0), rat_int(1)])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `x - r`.
    pub fn x_minus(r: &Rat) -> Self {
        Poly::new(vec![-r.clone(), rat_int(1)])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x` (degree shift).
    pub fn mul_x(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(rat_int(0));
        out.extend(self.coeffs.iter().cloned());
        Poly::new(out)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics on a zero divisor.
    pub fn divmod(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dlead = div.leading();
        let ddeg = div.degree();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat_int(0); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg && !rem.is_empty() {
            let rdeg = rem.len() - 1;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                quot[rdeg - ddeg] = factor.clone();
                for (k, dc) in div.coeffs.iter().enumerate() {
                    let idx = rdeg - ddeg + k;
                    let v = &rem[idx] - &factor * dc;
                    rem[idx] = v;
                }
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, div: &Poly) -> Poly {
        self.divmod(div).1
    }

    /// Reduce modulo `m`; no-op when `m` is constant.
    pub fn reduce_mod(&self, m: &Poly) -> Poly {
        if m.is_constant() {
            Poly::zero()
        } else {
            self.rem(m)
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat_int((k + 1) as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact interval extension via Horner: a rational interval containing
    /// `{p(t) : t in [lo, hi]}`.
    pub fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        let mut alo = rat_int(0);
        let mut ahi = rat_int(0);
        for c in self.coeffs.iter().rev() {
            // [alo, ahi] * [lo, hi] + c
            let cands = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
            let mut nlo = cands[0].clone();
            let mut nhi = cands[0].clone();
            for v in &cands[1..] {
                if *v < nlo {
                    nlo = v.clone();
                }
                if *v > nhi {
                    nhi = v.clone();
                }
            }
            alo = nlo + c;
            ahi = nhi + c;
        }
        (alo, ahi)
    }

    /// Monic multiple of gcd(self, other), via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*self + t*other`, `g` monic.
    pub fn extended_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading();
        let inv = rat_int(1) / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        if lead.is_one() {
            return self.clone();
        }
        self.scale(&(rat_int(1) / lead))
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }

    /// Divide out the rational root `r` as many times as it divides; exact.
    pub fn deflate_root(&self, r: &Rat) -> Poly {
        let mut p = self.clone();
        let lin = Poly::x_minus(r);
        while !p.is_zero() && p.eval(r).is_zero() {
            let (q, rem) = p.divmod(&lin);
            debug_assert!(rem.is_zero());
            p = q;
        }
        p
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. Used for canonical display of minimal polynomials.
    pub fn primitive_integer_coeffs(&self) -> Vec<Int> {
        use num_integer::Integer as _;
        if self.is_zero() {
            return vec![];
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = Int::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if !content.is_zero() && !content.is_one() {
            for v in &mut ints {
                *v = &*v / &content;
            }
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
        ints
    }

    /// 1-norm of the coefficient vector.
    pub fn one_norm(&self) -> Rat {
        let mut acc = rat_int(0);
        for c in &self.coeffs {
            acc += c.abs();
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        sign(&self.eval(x))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = render_rat_short(&mag);
            match k {
                0 => write!(f, "{coeff_str}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{coeff_str}*x")?;
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "x^{k}")?;
                    } else {
                        write!(f, "{coeff_str}*x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn divmod_roundtrip() {
        let p = Poly::from_ints(&[1, -5, 1]); // x^2 - 5x + 1
        let d = Poly::from_ints(&[-3, 1]); // x - 3
        let (q, r) = p.divmod(&d);
        assert_eq!(q.mul(&d).add(&r), p);
        assert!(r.degree() < d.degree() || r.is_zero());
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = Poly::from_ints(&[-1, 1]); // x - 1
        let b = Poly::from_ints(&[1, -5, 1]);
        let p = a.mul(&b);
        let q = a.mul(&Poly::from_ints(&[2, 1]));
        let g = p.gcd(&q);
        assert_eq!(g, Poly::from_ints(&[-1, 1]).monic());
    }

    #[test]
    fn extended_gcd_identity() {
        let a = Poly::from_ints(&[1, -5, 1]);
        let b = Poly::from_ints(&[-3, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        // x^2-5x+1 and x-3 are coprime (3 is not a root).
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn square_free_strips_multiplicity() {
        let lin = Poly::from_ints(&[-1, 1]);
        let p = lin.mul(&lin).mul(&lin);
        assert_eq!(p.square_free_part(), lin.monic());
    }

    #[test]
    fn interval_evaluation_contains_value() {
        let p = Poly::from_ints(&[1, -5, 1]);
        let (lo, hi) = p.eval_interval(&rat(9, 2), &rat(5, 1));
        let v = p.eval(&rat(19, 4));
        assert!(lo <= v && v <= hi);
    }

    #[test]
    fn deflation_removes_rational_root() {
        let p = Poly::from_ints(&[-2, 1]).mul(&Poly::from_ints(&[1, 1]));
        let q = p.deflate_root(&rat_int(2));
        assert!(!q.eval(&rat_int(2)).is_zero());
        assert!(q.eval(&rat_int(-1)).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let p = Poly::from_ints(&[1, -5, 1]);
        assert_eq!(p.to_string(), "x^2 - 5*x + 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_integer_form() {
        let p = Poly::new(vec![rat(1, 2), rat(-5, 2), rat(1, 2)]);
        let ints: Vec<i64> = p
            .primitive_integer_coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(ints, vec![1, -5, 1]);
    }
}

//! Dense complex polynomials, monic by construction where the algebra
//! guarantees it.
//!
//! Coefficients are stored lowest degree first. A [`MonicPolynomial`] of
//! degree `d` stores only `c_0..c_{d-1}`; the leading coefficient is 1 and is
//! never materialized, so sums and products that are monic in exact
//! arithmetic stay monic here as well.

use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Complex product with compensated real parts (Kahan's fma scheme).
/// Each component lands within ~1 ulp of the exact product, which keeps the
/// coefficient error of long expansions low enough for the absolute
/// tolerances used by the factorization checks.
pub(crate) fn cmul(a: Complex64, b: Complex64) -> Complex64 {
    let t_re = a.im * b.im;
    let re = a.re.mul_add(b.re, -t_re) + (-a.im).mul_add(b.im, t_re);
    let t_im = a.im * b.re;
    let im = a.re.mul_add(b.im, t_im) + a.im.mul_add(b.re, -t_im);
    Complex64::new(re, im)
}

/// Neumaier-compensated complex accumulator.
#[derive(Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, v: Complex64) {
        fn step(sum: &mut f64, comp: &mut f64, x: f64) {
            let t = *sum + x;
            if sum.abs() >= x.abs() {
                *comp += (*sum - t) + x;
            } else {
                *comp += (x - t) + *sum;
            }
            *sum = t;
        }
        step(&mut self.re, &mut self.re_c, v.re);
        step(&mut self.im, &mut self.im_c, v.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        Complex64::new(self.re + self.re_c, self.im + self.im_c)
    }
}

/// Monic polynomial `u^d + c_{d-1} u^{d-1} + ... + c_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<Complex64>,
}

impl MonicPolynomial {
    /// The constant polynomial 1 (degree 0, the empty product).
    pub fn one() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Builds `u^d + c_{d-1} u^{d-1} + ... + c_0` from the non-leading
    /// coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    /// Expands `prod_j (u - r_j)` by iterated multiplication with linear
    /// factors. The empty product is the constant 1.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Self::one();
        for &r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    /// Multiplies by the monic linear factor `(u - r)`.
    pub fn mul_linear(&self, r: Complex64) -> Self {
        let d = self.degree();
        let get = |i: usize| if i == d { ONE } else { self.coeffs[i] };
        let mut next = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let lower = if i == 0 { ZERO } else { get(i - 1) };
            next.push(lower - cmul(r, get(i)));
        }
        Self { coeffs: next }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// All coefficients including the leading 1, lowest degree first.
    pub fn full_coeffs(&self) -> Vec<Complex64> {
        let mut full = self.coeffs.clone();
        full.push(ONE);
        full
    }

    /// Horner evaluation.
    pub fn eval(&self, u: Complex64) -> Complex64 {
        let mut acc = ONE;
        for &c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Exact coefficientwise derivative. The result is generally not monic
    /// (its leading coefficient is the degree).
    pub fn derivative(&self) -> Polynomial {
        let d = self.degree();
        let coeffs = (0..d)
            .map(|i| {
                let c = if i + 1 == d { ONE } else { self.coeffs[i + 1] };
                c * (i + 1) as f64
            })
            .collect();
        Polynomial { coeffs }
    }

    /// Largest coefficient magnitude, including the implicit leading 1.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

impl std::ops::Mul for &MonicPolynomial {
    type Output = MonicPolynomial;

    /// Convolution product. Monic times monic is monic exactly: the top
    /// coefficient is the single product `1 * 1`.
    fn mul(self, rhs: &MonicPolynomial) -> MonicPolynomial {
        let a = self.full_coeffs();
        let b = rhs.full_coeffs();
        let out_degree = self.degree() + rhs.degree();
        let mut out = vec![CompensatedSum::default(); out_degree + 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j].add(cmul(ai, bj));
            }
        }
        let mut out: Vec<Complex64> = out.iter().map(CompensatedSum::value).collect();
        debug_assert_eq!(out[out_degree], ONE);
        out.truncate(out_degree);
        MonicPolynomial { coeffs: out }
    }
}

/// General dense polynomial, lowest degree first. An empty coefficient list
/// is the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Divides through by the leading coefficient. Returns `None` for the
    /// zero polynomial.
    pub fn monic(&self) -> Option<MonicPolynomial> {
        let lead_idx = self.coeffs.iter().rposition(|c| *c != ZERO)?;
        let lead = self.coeffs[lead_idx];
        let coeffs = self.coeffs[..lead_idx].iter().map(|c| c / lead).collect();
        Some(MonicPolynomial { coeffs })
    }
}

//! Eigenvalues from the characteristic polynomial, computed without the
//! crate's eigensolver or elimination code.
//!
//! The polynomial comes from the Faddeev–LeVerrier recursion over the
//! rationals. Its distinct real roots are isolated with a Sturm sequence of
//! the square-free part and refined by bisection; multiplicities come from
//! gcds with the derivatives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<BigRational>);

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    fn trimmed(mut c: Vec<BigRational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::trimmed(c.iter().map(|&x| q(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); r.len() - d.0.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = &r[i + d.degree()] / d.lead();
            for (j, dj) in d.0.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        (Poly::trimmed(quot), Poly::trimmed(r))
    }

    fn monic(&self) -> Poly {
        let l = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// How many times `f` divides `self`.
    pub fn factor_order(&self, f: &Poly) -> usize {
        let mut p = self.clone();
        let mut order = 0;
        loop {
            let (quot, r) = p.div_rem(f);
            if !r.is_zero() || p.is_zero() {
                return order;
            }
            order += 1;
            p = quot;
        }
    }
}

/// `det(xI − A)` for an integer matrix.
pub fn characteristic_polynomial(a: &[Vec<i64>]) -> Poly {
    let n = a.len();
    let a: Vec<Vec<BigRational>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mul = |x: &[Vec<BigRational>], y: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let am = mul(&a, &next);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -trace / q(k as i64);
        m = next;
    }
    Poly::trimmed(c)
}

struct Sturm(Vec<Poly>);

impl Sturm {
    fn new(p: &Poly) -> Sturm {
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(Poly(r.0.iter().map(|c| -c).collect()));
        }
        Sturm(seq)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .0
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// A real root of `p` known to lie in `(lo, hi]`.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn approx(&self) -> f64 {
        ((&self.lo + &self.hi) / q(2)).to_f64().expect("finite")
    }
}

/// Real roots of `p`, ascending, isolated to intervals narrower than `width`.
pub fn real_roots(p: &Poly, width: f64) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return Vec::new();
    }
    let square_free = p.div_rem(&p.gcd(&p.derivative())).0;
    let sturm = Sturm::new(&square_free);
    // Cauchy bound
    let lead = p.lead().abs();
    let bound = p.0.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |m, x| if x > m { x } else { m }) + q(1);
    let width = BigRational::from_float(width).expect("finite width");
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo < width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / q(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));

    // multiplicity: 1 + number of leading derivatives that also vanish there
    let mut derivs = vec![p.derivative()];
    while !derivs.last().unwrap().is_zero() {
        let d = derivs.last().unwrap().derivative();
        derivs.push(d);
    }
    out.into_iter()
        .map(|(lo, hi)| {
            let mut multiplicity = 1;
            for d in &derivs {
                if d.is_zero() {
                    break;
                }
                let g = square_free.gcd(d);
                if g.degree() == 0 || Sturm::new(&g).count(&lo, &hi) == 0 {
                    break;
                }
                multiplicity += 1;
            }
            IsolatedRoot { lo, hi, multiplicity }
        })
        .collect()
}

/// All eigenvalues with multiplicity, descending.
pub fn oracle_eigenvalues(a: &[Vec<i64>]) -> Vec<f64> {
    let p = characteristic_polynomial(a);
    let mut out: Vec<f64> = real_roots(&p, 1e-12)
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.approx(), r.multiplicity))
        .collect();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Multiplicities at 0, 1, −1 from linear factors and at ±ω from the
/// quadratic factors `x² + x − 1` and `x² − x − 1`.
pub fn oracle_multiplicity(p: &Poly, lambda: OracleValue) -> usize {
    let f = match lambda {
        OracleValue::Int(r) => Poly::from_ints(&[-r, 1]),
        OracleValue::Omega => Poly::from_ints(&[-1, 1, 1]),
        OracleValue::MinusOmega => Poly::from_ints(&[-1, -1, 1]),
    };
    p.factor_order(&f)
}

#[derive(Debug, Clone, Copy)]
pub enum OracleValue {
    Int(i64),
    Omega,
    MinusOmega,
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n - 1 divided by every Φ_d with d a proper divisor of n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Exact quotient by a monic polynomial.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division is exact");
    quot
}

/// An element of `ℤ[ζ]` for a primitive ℓ-th root of unity, stored as its
/// remainder modulo the ℓ-th cyclotomic polynomial.
#[derive(Clone)]
pub struct Cyclotomic {
    ell: u64,
    modulus: Arc<[i64]>,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(ell: u64) -> Self {
        let modulus: Arc<[i64]> = cyclotomic_polynomial(ell).into();
        let d = modulus.len() - 1;
        Cyclotomic {
            ell,
            modulus,
            coeffs: vec![0; d],
        }
    }

    fn like(&self, coeffs: Vec<i64>) -> Self {
        let mut out = Cyclotomic {
            ell: self.ell,
            modulus: self.modulus.clone(),
            coeffs,
        };
        out.reduce();
        out
    }

    pub fn from_int(ell: u64, c: i64) -> Self {
        let z = Cyclotomic::zero(ell);
        z.like(vec![c])
    }

    /// `ζ^e` for any integer `e`.
    pub fn zeta_pow(ell: u64, e: i64) -> Self {
        let z = Cyclotomic::zero(ell);
        z.power(e)
    }

    /// `ζ^e` in the same ring as `self`.
    pub fn power(&self, e: i64) -> Self {
        let e = e.rem_euclid(self.ell as i64) as usize;
        let mut v = vec![0; e + 1];
        v[e] = 1;
        self.like(v)
    }

    fn reduce(&mut self) {
        let m = &self.modulus;
        let d = m.len() - 1;
        for k in (d..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    self.coeffs[k - d + i] -= c * mi;
                }
            }
        }
        self.coeffs.resize(d, 0);
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.like(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `Some(a)` when `self = a·other`.
    pub fn ratio_to(&self, other: &Cyclotomic) -> Option<i64> {
        let (i, &lead) = other.coeffs.iter().enumerate().find(|(_, &c)| c != 0)?;
        if self.coeffs[i] % lead != 0 {
            return None;
        }
        let a = self.coeffs[i] / lead;
        (other.scale(a) == *self).then_some(a)
    }

    /// `a·[m]_ζ` with the smallest `m ≤ (ℓ-1)/2`, if `self` has that form.
    pub fn as_quantum_multiple(&self) -> Option<(i64, u64)> {
        (1..=(self.ell - 1) / 2).find_map(|m| {
            let qm = super::q_int(m, self.ell);
            self.ratio_to(&qm).map(|a| (a, m))
        })
    }

    /// `0`, `a·[m]_ζ`, or the coefficient vector.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        match self.as_quantum_multiple() {
            Some((a, m)) => format!("{a}·[{m}]_ζ"),
            None => self.to_string(),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(ℓ={}, {})", self.ell, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.ell, rhs.ell, "mixed roots of unity");
        self.like(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.ell, rhs.ell, "mixed roots of unity");
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        self.like(v)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(mut iter: I) -> Cyclotomic {
        let first = iter.next().expect("sum of at least one element");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(
            cyclotomic_polynomial(15),
            vec![1, -1, 0, 1, -1, 1, 0, -1, 1]
        );
    }

    #[test]
    fn roots_of_unity() {
        for ell in [3, 5, 7, 9, 15] {
            let z = Cyclotomic::zeta_pow(ell, 1);
            let mut acc = Cyclotomic::from_int(ell, 1);
            for _ in 0..ell {
                acc = &acc * &z;
            }
            assert_eq!(acc, Cyclotomic::from_int(ell, 1));
            assert_eq!(
                &z * &Cyclotomic::zeta_pow(ell, -1),
                Cyclotomic::from_int(ell, 1)
            );
            // the powers of a primitive root sum to zero
            let s: Cyclotomic = (0..ell as i64).map(|e| Cyclotomic::zeta_pow(ell, e)).sum();
            assert!(s.is_zero());
        }
    }
}

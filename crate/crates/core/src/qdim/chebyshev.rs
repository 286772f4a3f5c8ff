//! Integer polynomials, constant term first.

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    trim((0..n).map(|i| at(a, i) - at(b, i)).collect())
}

/// Multiplies by the variable and then by `c`.
fn shift_scale(a: &[i64], c: i64) -> Vec<i64> {
    let mut out = vec![0];
    out.extend(a.iter().map(|x| x * c));
    out
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `U_n(t)` from `U_n = 2t·U_{n-1} - U_{n-2}`.
pub fn chebyshev_u(n: usize) -> Vec<i64> {
    let (mut prev, mut cur) = (vec![1i64], vec![0, 2]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = sub(&shift_scale(&cur, 2), &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `f(x/2)`, which must have integer coefficients.
pub fn rescale_half(f: &[i64]) -> Vec<i64> {
    f.iter()
        .enumerate()
        .map(|(k, &c)| {
            let d = 1i64 << k;
            assert_eq!(c % d, 0, "coefficient of t^{k} is not divisible by 2^{k}");
            c / d
        })
        .collect()
}

/// `U_{ℓ-1}(x/2)`, monic of degree `ℓ - 1`.
pub fn rescaled_relation(ell: u64) -> Vec<i64> {
    rescale_half(&chebyshev_u(ell as usize - 1))
}

/// The Clebsch-Gordon polynomial `x_n`, from `x_{n+1} = x·x_n - x_{n-1}`.
pub fn x_n(n: usize) -> Vec<i64> {
    let (mut prev, mut cur) = (vec![1i64], vec![0, 1]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = sub(&shift_scale(&cur, 1), &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursion() {
        assert_eq!(chebyshev_u(0), vec![1]);
        assert_eq!(chebyshev_u(1), vec![0, 2]);
        assert_eq!(chebyshev_u(2), vec![-1, 0, 4]);
        for n in 0..=20 {
            assert_eq!(chebyshev_u(n).len(), n + 1);
        }
    }

    #[test]
    fn relation() {
        assert_eq!(rescaled_relation(5), vec![1, 0, -3, 0, 1]);
        assert_eq!(rescaled_relation(3), vec![-1, 0, 1]);
        for n in 0..15 {
            assert_eq!(x_n(n), rescale_half(&chebyshev_u(n)));
        }
    }
}

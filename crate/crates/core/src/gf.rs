//! Small finite-field arithmetic: integers mod m, matrices and polynomials
//! over GF(p), and GF(p^e) for the projective-line actions.

use crate::error::{Error, Result};
use crate::group::is_prime;

pub fn mod_pow(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            result = result * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    result
}

/// Multiplicative order of `a` modulo `m`, or `None` if `a` is not a unit.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    if crate::perm::gcd(a, m) != 1 {
        return None;
    }
    let mut k = 1;
    let mut x = a;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}

/// Units modulo `m` of multiplicative order exactly `q`, ascending.
pub fn units_of_order(q: u64, m: u64) -> Vec<u64> {
    (1..m).filter(|&a| mult_order(a, m) == Some(q)).collect()
}

/// Square matrix over GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    p: u64,
    n: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn identity(p: u64, n: usize) -> Matrix {
        Matrix::diagonal(p, &vec![1; n])
    }

    pub fn diagonal(p: u64, diag: &[u64]) -> Matrix {
        let n = diag.len();
        let mut data = vec![0; n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = d % p;
        }
        Matrix { p, n, data }
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Matrix {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| x % p)).collect();
        Matrix { p, n, data }
    }

    /// Companion matrix of the monic polynomial with low-first coefficients
    /// `c₀, …, c_{d−1}` (leading 1 omitted): `e_i ↦ e_{i+1}`,
    /// `e_{d−1} ↦ −Σ cⱼ eⱼ`.
    pub fn companion(p: u64, coeffs: &[u64]) -> Matrix {
        let n = coeffs.len();
        let mut m = Matrix {
            p,
            n,
            data: vec![0; n * n],
        };
        for i in 0..n {
            if i + 1 < n {
                m.set(i + 1, i, 1);
            }
            m.set(i, n - 1, (p - coeffs[i] % p) % p);
        }
        m
    }

    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let p = blocks[0].p;
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Matrix {
            p,
            n,
            data: vec![0; n * n],
        };
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.data.chunks(self.n).map(<[u64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix {
            p: self.p,
            n,
            data: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let s = (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum::<u64>();
                out.set(i, j, s % self.p);
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum::<u64>() % self.p)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.p, self.n)
    }

    /// Multiplicative order, or `None` if singular or beyond `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        if self.det() == 0 {
            return None;
        }
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Determinant by Gaussian elimination mod p.
    pub fn det(&self) -> u64 {
        let (p, n) = (self.p, self.n);
        let mut a = self.data.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = mod_pow(pv, p - 2, p);
            for r in col + 1..n {
                let f = a[r * n + col] * inv % p;
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + p * p - f * a[col * n + j]) % p;
                }
            }
        }
        det
    }

    /// `det(M − I) = 0`.
    pub fn has_eigenvalue_one(&self) -> bool {
        let mut m = self.clone();
        for i in 0..self.n {
            let x = m.get(i, i);
            m.set(i, i, (x + self.p - 1) % self.p);
        }
        m.det() == 0
    }
}

/// Polynomials over GF(p), low-first coefficients, no trailing zeros.
pub mod poly {
    use super::mod_pow;

    pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    /// Remainder of `f` modulo monic-or-not nonzero `g`.
    pub fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(f.to_vec());
        let g = trim(g.to_vec());
        let lead_inv = mod_pow(*g.last().expect("nonzero divisor"), p - 2, p);
        while r.len() >= g.len() {
            let shift = r.len() - g.len();
            let f = r.last().unwrap() * lead_inv % p;
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - f * c) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn divides(g: &[u64], f: &[u64], p: u64) -> bool {
        rem(f, g, p).is_empty()
    }

    /// Monic polynomials of degree `d`, with the non-leading coefficients
    /// `(c_{d−1}, …, c₀)` running through GF(p)^d in lexicographic order.
    pub fn monic(d: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
        let count = p.pow(d as u32);
        (0..count).map(move |mut code| {
            let mut f = vec![0; d + 1];
            f[d] = 1;
            for i in 0..d {
                f[i] = code % p;
                code /= p;
            }
            f
        })
    }

    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let d = f.len() - 1;
        (1..=d / 2).all(|e| monic(e, p).all(|g| !divides(&g, f, p)))
    }
}

/// The lexicographically least monic irreducible factor of `x^q − 1` of
/// degree `d` over GF(p), if any.
pub fn least_irreducible_factor_of_xq_minus_1(p: u64, q: u64, d: usize) -> Option<Vec<u64>> {
    let mut target = vec![0; q as usize + 1];
    target[0] = p - 1;
    target[q as usize] = 1;
    poly::monic(d, p).find(|f| poly::is_irreducible(f, p) && poly::divides(f, &target, p))
}

/// GF(p^e), elements encoded as integers `Σ aᵢ pⁱ` (coefficients of the
/// residue polynomial), with full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    size: usize,
    mul: Vec<u32>,
    add: Vec<u32>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<FiniteField> {
        let factors = crate::group::prime_factors(q);
        let &[(p, e)] = factors.as_slice() else {
            return Err(Error::Domain(format!("{q} is not a prime power")));
        };
        debug_assert!(is_prime(p));
        let e = e as usize;
        let modulus = poly::monic(e, p)
            .find(|f| poly::is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        let size = q as usize;
        let decode = |mut x: usize| -> Vec<u64> {
            (0..e)
                .map(|_| {
                    let c = x as u64 % p;
                    x /= p as usize;
                    c
                })
                .collect()
        };
        let encode = |v: &[u64]| -> u32 {
            v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
        };
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let va = decode(a);
            for b in 0..size {
                let vb = decode(b);
                let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[a * size + b] = encode(&sum);
                let mut prod = vec![0; 2 * e];
                for (i, x) in va.iter().enumerate() {
                    for (j, y) in vb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly::rem(&prod, &modulus, p);
                r.resize(e, 0);
                mul[a * size + b] = encode(&r);
            }
        }
        Ok(FiniteField { p, size, mul, add })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.size).find(|&b| self.mul(a, b) == 1)
    }

    /// Smallest element generating the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        let n = self.size - 1;
        (1..self.size)
            .find(|&a| {
                let mut x = a;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, a);
                    k += 1;
                }
                k == n
            })
            .expect("multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_mod_m() {
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(3, 7), Some(6));
        assert_eq!(mult_order(7, 49), None);
        assert_eq!(units_of_order(3, 7), vec![2, 4]);
        // exhaustive scan: 2 is the least element of order 3 in GF(7)*
        assert_eq!(units_of_order(3, 7).first(), Some(&2));
    }

    #[test]
    fn matrix_basics() {
        let m = Matrix::diagonal(5, &[4, 4]);
        assert_eq!(m.order(100), Some(2));
        assert!(!m.has_eigenvalue_one());
        assert_eq!(Matrix::from_rows(7, &[vec![1, 2], vec![3, 4]]).det(), 5);
        assert!(Matrix::diagonal(7, &[1, 2]).has_eigenvalue_one());
        assert_eq!(Matrix::diagonal(7, &[2, 4]).apply(&[1, 1]), vec![2, 4]);
    }

    #[test]
    fn irreducible_factors() {
        // x² + x + 1 stays irreducible over GF(5)
        let f = least_irreducible_factor_of_xq_minus_1(5, 3, 2).unwrap();
        assert_eq!(f, vec![1, 1, 1]);
        let c = Matrix::companion(5, &f[..2]);
        assert_eq!(c.order(1000), Some(3));
        assert!(!c.has_eigenvalue_one());
        // x⁷ − 1 over GF(2): x³ + x + 1 is the least cubic factor
        assert_eq!(least_irreducible_factor_of_xq_minus_1(2, 7, 3).unwrap(), vec![1, 1, 0, 1]);
        assert!(least_irreducible_factor_of_xq_minus_1(7, 3, 2).is_none());
    }

    #[test]
    fn gf8() {
        let f = FiniteField::new(8).unwrap();
        assert_eq!(f.size(), 8);
        for a in 1..8 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.add(a, a), 0);
        }
        let w = f.primitive_element();
        let mut x = w;
        let mut seen = vec![x];
        for _ in 0..6 {
            x = f.mul(x, w);
            seen.push(x);
        }
        seen.sort();
        assert_eq!(seen, (1..8).collect::<Vec<_>>());
        assert!(FiniteField::new(12).is_err());
    }
}

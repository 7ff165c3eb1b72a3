//! Dense matrices over a prime field and their rank.

use crate::error::{Error, Result};

/// Default coefficient field, a large prime standing in for characteristic 0.
pub const DEFAULT_PRIME: u32 = 32003;

/// A prime field `GF(p)` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv(self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let mut base = a as u64;
        let mut exp = self.p - 2;
        let m = self.p as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix with entries already reduced mod p.
#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    /// `self * other` over the field.
    pub fn mul(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) as u64 + field.mul(a, other.get(k, j)) as u64)
                        % field.p as u64;
                    out.set(i, j, v as u32);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Rank by Gaussian elimination; consumes the matrix.
    pub fn rank(mut self, field: PrimeField) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in col..cols {
                    self.data.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = field.inv(self.data[rank * cols + col]);
            for c in col..cols {
                let i = rank * cols + c;
                self.data[i] = field.mul(self.data[i], inv);
            }
            for r in rank + 1..rows {
                let factor = self.data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = field.mul(factor, self.data[rank * cols + c]);
                    let i = r * cols + c;
                    self.data[i] = field.sub(self.data[i], sub);
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]], field: PrimeField) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.reduce(v));
            }
        }
        m
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(32003) && is_prime(3));
        assert!(!is_prime(1) && !is_prime(32001) && !is_prime(0));
        assert!(PrimeField::new(4).is_err());
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular only over GF(2)
        let rows: &[&[i64]] = &[&[1, 1], &[1, -1]];
        assert_eq!(from_rows(rows, PrimeField::new(2).unwrap()).rank(PrimeField::new(2).unwrap()), 1);
        let f = PrimeField::default();
        assert_eq!(from_rows(rows, f).rank(f), 2);
    }

    #[test]
    fn rank_examples() {
        let f = PrimeField::default();
        assert_eq!(Matrix::zeros(3, 4).rank(f), 0);
        let rows: &[&[i64]] = &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]];
        assert_eq!(from_rows(rows, f).rank(f), 2);
        let rows: &[&[i64]] = &[&[0, 0, 5], &[0, 3, 0], &[7, 0, 0], &[1, 1, 1]];
        assert_eq!(from_rows(rows, f).rank(f), 3);
    }
}

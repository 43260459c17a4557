use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, MatrixError};

/// Integer polynomial, coefficients stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x^k - 1`
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] += BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplicity of 1 as a root.
    pub fn root_one_multiplicity(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.coeffs.clone();
        let mut mult = 0;
        loop {
            let s: BigInt = p.iter().sum();
            if !s.is_zero() || p.len() <= 1 {
                return mult;
            }
            // Synthetic division by (x - 1).
            let mut q = vec![BigInt::zero(); p.len() - 1];
            let mut carry = BigInt::zero();
            for k in (1..p.len()).rev() {
                carry += &p[k];
                q[k - 1] = carry.clone();
            }
            p = q;
            mult += 1;
        }
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;

    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        PolyZ::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;

    fn sub(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        PolyZ::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;

    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        PolyZ::new(c)
    }
}

impl fmt::Display for PolyZ {
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
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

/// `det(x·I − M)` by the Berkowitz recurrence; no divisions.
pub fn char_poly(m: &IntMatrix) -> Result<PolyZ, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(PolyZ::one());
    }
    // High-degree-first coefficients of the leading r×r block's polynomial.
    let mut v: Vec<BigInt> = vec![BigInt::one(), -&m[(0, 0)]];
    for r in 1..n {
        // Toeplitz column: 1, -a, -R·C, -R·A·C, ..., -R·A^{r-1}·C
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-&m[(r, r)]);
        let mut col: Vec<BigInt> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for k in 0..r {
            let rc: BigInt = (0..r).map(|j| &m[(r, j)] * &col[j]).sum();
            t.push(-rc);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| (0..r).map(|j| &m[(i, j)] * &col[j]).sum())
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
        v = next;
    }
    v.reverse();
    Ok(PolyZ::new(v))
}

//! Unit quadratic forms `q(x) = xᵀĜx` with `Ĝ` upper unitriangular.

mod realize;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmat::{char_poly, kernel_basis, psd_rank, IntMatrix, PolyZ};
use crate::quiver::{xi_and_cycle_type, Quiver};
use crate::standard::Partition;

pub use realize::realize_as_quiver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("not a unit form: {0}")]
    NotUnit(String),
    #[error("form is not connected")]
    NotConnected,
    #[error("form is not non-negative")]
    NotNonNegative,
    #[error("form is not of Dynkin type A (no quiver realizes it)")]
    NotTypeA,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitForm {
    upper: IntMatrix,
}

impl UnitForm {
    pub fn new(upper: IntMatrix) -> Result<Self, FormError> {
        if !upper.is_square() || upper.rows() == 0 {
            return Err(FormError::NotUnit(format!(
                "upper Gram matrix must be square and non-empty, got {}x{}",
                upper.rows(),
                upper.cols()
            )));
        }
        for i in 0..upper.rows() {
            if !upper[(i, i)].is_one() {
                return Err(FormError::NotUnit(format!(
                    "diagonal entry {} is {}, expected 1",
                    i + 1,
                    upper[(i, i)]
                )));
            }
            if let Some(j) = (0..i).find(|&j| !upper[(i, j)].is_zero()) {
                return Err(FormError::NotUnit(format!(
                    "entry ({},{}) below the diagonal is nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(UnitForm { upper })
    }

    pub fn from_quiver(q: &Quiver) -> Self {
        UnitForm {
            upper: q.upper_gram(),
        }
    }

    pub fn n(&self) -> usize {
        self.upper.rows()
    }

    /// `Ĝ_q`
    pub fn upper(&self) -> &IntMatrix {
        &self.upper
    }

    /// `G_q = Ĝ + Ĝᵀ`
    pub fn symmetric(&self) -> IntMatrix {
        &self.upper + &self.upper.transpose()
    }

    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        let gx = self.upper.mul_vec(x);
        x.iter().zip(gx).map(|(a, b)| a * b).sum()
    }

    /// Connectivity of the graph with an edge wherever `G_ij ≠ 0`.
    #[allow(clippy::needless_range_loop)]
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (!self.upper[(i, j)].is_zero() || !self.upper[(j, i)].is_zero()) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Coxeter matrix `Φ = −ĜᵀĜ⁻¹` and its characteristic polynomial.
pub fn coxeter(q: &UnitForm) -> (IntMatrix, PolyZ) {
    let gi = q.upper.inverse().expect("unit forms have unimodular Ĝ");
    let phi = -&(&q.upper.transpose() * &gi);
    let poly = char_poly(&phi).expect("square");
    (phi, poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalProfile {
    pub corank: usize,
    pub reduced_corank: usize,
    pub degeneracy: usize,
    /// Kernel basis of `G_q`.
    pub k: IntMatrix,
    /// Reduced radical, as vectors of `Z^n`: `K` times a kernel basis of `W`.
    pub k_re: IntMatrix,
    /// `W = KᵀĜK`, skew-symmetric.
    pub w: IntMatrix,
}

pub fn radical_profile(q: &UnitForm) -> Result<RadicalProfile, FormError> {
    let g = q.symmetric();
    let (psd, _) = psd_rank(&g).expect("symmetric");
    if !psd {
        return Err(FormError::NotNonNegative);
    }
    let k = kernel_basis(&g);
    let w = &(&k.transpose() * &q.upper) * &k;
    debug_assert!(w.is_skew_symmetric());
    let kw = kernel_basis(&w);
    let k_re = &k * &kw;
    let rank_w = w.rank();
    Ok(RadicalProfile {
        corank: k.cols(),
        reduced_corank: kw.cols(),
        degeneracy: rank_w / 2,
        k,
        k_re,
        w,
    })
}

/// Coxeter number (`None` meaning infinite) and reduced Coxeter number.
pub fn coxeter_numbers(pi: &Partition, corank: usize) -> (Option<usize>, usize) {
    debug_assert!(pi.len() <= corank + 1);
    let h = (pi.len() == 1).then(|| pi.parts()[0]);
    (h, pi.lcm())
}

/// `(x − 1)^{c−1} · ∏ (x^{π_t} − 1)`, valid also for `c = 0` (then `ℓ = 1`).
pub fn coxeter_factorization(pi: &Partition, corank: usize) -> PolyZ {
    let x1 = PolyZ::x_pow_minus_one(1);
    let mut prod = PolyZ::one();
    let mut dropped = corank == 0;
    for &p in pi.parts() {
        let f = PolyZ::x_pow_minus_one(p);
        if dropped {
            // Divide one factor (x − 1) out of x^p − 1: 1 + x + … + x^{p−1}.
            prod = &prod * &PolyZ::new(vec![BigInt::one(); p]);
            dropped = false;
        } else {
            prod = &prod * &f;
        }
    }
    &x1.pow(corank.saturating_sub(1)) * &prod
}

/// Human-readable `(x-1)^a (x^p-1)...` string matching [`coxeter_factorization`].
pub fn coxeter_factorization_string(pi: &Partition, corank: usize) -> String {
    let mut parts = Vec::new();
    let mut ones = corank as isize - 1;
    let mut others = Vec::new();
    for &p in pi.parts() {
        if p == 1 {
            ones += 1;
        } else {
            others.push(p);
        }
    }
    if ones > 0 {
        parts.push(if ones == 1 {
            "(x-1)".to_string()
        } else {
            format!("(x-1)^{ones}")
        });
    }
    let mut tail = String::new();
    if ones < 0 {
        // corank 0: the single cycle factor loses its (x − 1).
        let p = others.pop().expect("corank 0 means one cycle");
        tail = format!("(x^{p}-1)/(x-1)");
    }
    let mut run: Vec<(usize, usize)> = Vec::new();
    for p in others {
        match run.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => run.push((p, 1)),
        }
    }
    for (p, k) in run {
        parts.push(if k == 1 {
            format!("(x^{p}-1)")
        } else {
            format!("(x^{p}-1)^{k}")
        });
    }
    if !tail.is_empty() {
        parts.push(tail);
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("")
    }
}

/// Invariants of a connected non-negative unit form of Dynkin type A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    /// `r` in `A_r`.
    pub dynkin_rank: usize,
    pub corank: usize,
    pub cycle_type: Partition,
    pub degeneracy: usize,
    pub reduced_corank: usize,
    pub coxeter_polynomial: PolyZ,
    pub factored: String,
    pub coxeter_number: Option<usize>,
    pub reduced_coxeter_number: usize,
    pub quiver: Quiver,
}

pub fn classify(q: &UnitForm) -> Result<ClassReport, FormError> {
    let quiver = realize_as_quiver(q)?;
    let prof = radical_profile(q)?;
    let (_, pi) = xi_and_cycle_type(&quiver);
    let (_, phi) = coxeter(q);
    let expected = coxeter_factorization(&pi, prof.corank);
    assert_eq!(
        phi, expected,
        "Coxeter polynomial does not factor as predicted"
    );
    let (h, h_re) = coxeter_numbers(&pi, prof.corank);
    Ok(ClassReport {
        n: q.n(),
        dynkin_rank: q.n() - prof.corank,
        corank: prof.corank,
        factored: coxeter_factorization_string(&pi, prof.corank),
        cycle_type: pi,
        degeneracy: prof.degeneracy,
        reduced_corank: prof.reduced_corank,
        coxeter_polynomial: phi,
        coxeter_number: h,
        reduced_coxeter_number: h_re,
        quiver,
    })
}

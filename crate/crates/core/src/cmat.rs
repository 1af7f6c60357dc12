//! Dense complex 4×4 linear algebra: the carrier for gamma matrices, spinor
//! transformations, Hamiltonians and evolution operators.
//!
//! Matrices are stored row-major as 16 `Complex64` entries. The matrix
//! exponential uses scaling-and-squaring with a Padé(13) approximant;
//! determinants go through an LU factorization so they stay independent of
//! the cofactor expansions used elsewhere in the crate.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Operator-norm bound accepted by [`mat_exp`].
pub const EXP_NORM_BOUND: f64 = 50.0;

/// A complex 4-vector (one spinor's worth of amplitudes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVec4 {
    amps: [C64; 4],
}

impl CVec4 {
    pub const fn new(amps: [C64; 4]) -> Self {
        Self { amps }
    }

    pub fn zero() -> Self {
        Self::new([C64::new(0.0, 0.0); 4])
    }

    /// Standard basis vector e_j.
    pub fn basis(j: usize) -> Self {
        assert!(j < 4, "basis index {j} out of range 0..=3");
        let mut v = Self::zero();
        v.amps[j] = C64::new(1.0, 0.0);
        v
    }

    pub fn as_array(&self) -> &[C64; 4] {
        &self.amps
    }

    pub fn conj(&self) -> Self {
        Self::new(self.amps.map(|z| z.conj()))
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.amps.map(|a| a * z))
    }

    /// Hermitian inner product ψ†φ, conjugate-linear in `self`.
    pub fn inner(&self, other: &CVec4) -> C64 {
        (0..4).map(|j| self.amps[j].conj() * other.amps[j]).sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.amps.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_abs_diff(&self, other: &CVec4) -> f64 {
        (0..4)
            .map(|j| (self.amps[j] - other.amps[j]).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for CVec4 {
    type Output = C64;
    fn index(&self, j: usize) -> &C64 {
        &self.amps[j]
    }
}

impl IndexMut<usize> for CVec4 {
    fn index_mut(&mut self, j: usize) -> &mut C64 {
        &mut self.amps[j]
    }
}

impl Add for CVec4 {
    type Output = CVec4;
    fn add(self, rhs: CVec4) -> CVec4 {
        let mut out = self;
        for j in 0..4 {
            out.amps[j] += rhs.amps[j];
        }
        out
    }
}

impl Sub for CVec4 {
    type Output = CVec4;
    fn sub(self, rhs: CVec4) -> CVec4 {
        let mut out = self;
        for j in 0..4 {
            out.amps[j] -= rhs.amps[j];
        }
        out
    }
}

/// A complex 4×4 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat4 {
    e: [C64; 16],
}

impl CMat4 {
    pub const fn new(entries: [C64; 16]) -> Self {
        Self { e: entries }
    }

    pub fn zero() -> Self {
        Self::new([C64::new(0.0, 0.0); 16])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn diag(d: [C64; 4]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m[(i, i)] = d[i];
        }
        m
    }

    pub fn from_rows(rows: [[C64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                m[(i, j)] = *z;
            }
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Row-major entries, index = 4*row + col.
    pub fn entries(&self) -> &[C64; 16] {
        &self.e
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self::new(self.e.map(|z| z.conj()))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(|i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.e.map(|a| a * z))
    }

    pub fn mul_vec(&self, v: &CVec4) -> CVec4 {
        let mut out = CVec4::zero();
        for i in 0..4 {
            out[i] = (0..4).map(|j| self[(i, j)] * v[j]).sum();
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &CMat4) -> f64 {
        (0..16)
            .map(|k| (self.e[k] - other.e[k]).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &CMat4, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Max column sum of entry magnitudes (induced 1-norm).
    pub fn norm_one(&self) -> f64 {
        (0..4)
            .map(|j| (0..4).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Spectral norm via power iteration on M†M. Exact enough for the 4×4
    /// gate in [`mat_exp`]; deterministic start vector.
    pub fn norm_spectral(&self) -> f64 {
        let mm = self.dagger() * *self;
        let mut v = CVec4::new([
            C64::new(1.0, 0.0),
            C64::new(0.9, 0.1),
            C64::new(0.8, -0.2),
            C64::new(0.7, 0.3),
        ]);
        let mut lambda = 0.0;
        for _ in 0..60 {
            let w = mm.mul_vec(&v);
            let n = w.norm();
            if n == 0.0 {
                return 0.0;
            }
            lambda = n;
            v = w.scale(C64::new(1.0 / n, 0.0));
        }
        lambda.sqrt()
    }

    /// Max |H - H†| entry; zero for Hermitian matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Determinant through LU factorization with partial pivoting.
    pub fn det(&self) -> C64 {
        let mut a = self.e;
        let mut det = C64::new(1.0, 0.0);
        for col in 0..4 {
            let mut pivot_row = col;
            let mut pivot_mag = a[4 * col + col].norm();
            for row in (col + 1)..4 {
                let mag = a[4 * row + col].norm();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = row;
                }
            }
            if pivot_mag == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot_row != col {
                for j in 0..4 {
                    a.swap(4 * col + j, 4 * pivot_row + j);
                }
                det = -det;
            }
            let pivot = a[4 * col + col];
            det *= pivot;
            for row in (col + 1)..4 {
                let factor = a[4 * row + col] / pivot;
                for j in col..4 {
                    let sub = factor * a[4 * col + j];
                    a[4 * row + j] -= sub;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<CMat4> {
        let mut aug = [[C64::new(0.0, 0.0); 8]; 4];
        for i in 0..4 {
            for j in 0..4 {
                aug[i][j] = self[(i, j)];
            }
            aug[i][4 + i] = C64::new(1.0, 0.0);
        }
        for col in 0..4 {
            let mut pivot_row = col;
            let mut pivot_mag = aug[col][col].norm();
            for row in (col + 1)..4 {
                let mag = aug[row][col].norm();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = row;
                }
            }
            if pivot_mag < 1e-300 {
                return Err(Error::Singular);
            }
            aug.swap(col, pivot_row);
            let pivot = aug[col][col];
            for j in 0..8 {
                aug[col][j] /= pivot;
            }
            for row in 0..4 {
                if row == col {
                    continue;
                }
                let factor = aug[row][col];
                for j in 0..8 {
                    let sub = factor * aug[col][j];
                    aug[row][j] -= sub;
                }
            }
        }
        Ok(CMat4::from_fn(|i, j| aug[i][4 + j]))
    }

    /// M^n by repeated squaring.
    pub fn powi(&self, mut n: u64) -> CMat4 {
        let mut base = *self;
        let mut acc = CMat4::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl Index<(usize, usize)> for CMat4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.e[4 * i + j]
    }
}

impl IndexMut<(usize, usize)> for CMat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.e[4 * i + j]
    }
}

impl Add for CMat4 {
    type Output = CMat4;
    fn add(self, rhs: CMat4) -> CMat4 {
        let mut out = self;
        for k in 0..16 {
            out.e[k] += rhs.e[k];
        }
        out
    }
}

impl Sub for CMat4 {
    type Output = CMat4;
    fn sub(self, rhs: CMat4) -> CMat4 {
        let mut out = self;
        for k in 0..16 {
            out.e[k] -= rhs.e[k];
        }
        out
    }
}

impl Neg for CMat4 {
    type Output = CMat4;
    fn neg(self) -> CMat4 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for CMat4 {
    type Output = CMat4;
    fn mul(self, rhs: CMat4) -> CMat4 {
        let mut out = CMat4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..4 {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Mul<C64> for CMat4 {
    type Output = CMat4;
    fn mul(self, z: C64) -> CMat4 {
        self.scale(z)
    }
}

/// A complex 2×2 matrix (Pauli-Hamiltonian blocks).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2 {
    e: [C64; 4],
}

impl CMat2 {
    pub const fn new(entries: [C64; 4]) -> Self {
        Self { e: entries }
    }

    pub fn zero() -> Self {
        Self::new([C64::new(0.0, 0.0); 4])
    }

    pub fn identity() -> Self {
        Self::new([
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ])
    }

    pub fn entries(&self) -> &[C64; 4] {
        &self.e
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::new(self.e.map(|a| a * z))
    }

    pub fn max_abs_diff(&self, other: &CMat2) -> f64 {
        (0..4)
            .map(|k| (self.e[k] - other.e[k]).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let h = Self::new([
            self.e[0].conj(),
            self.e[2].conj(),
            self.e[1].conj(),
            self.e[3].conj(),
        ]);
        self.max_abs_diff(&h)
    }
}

impl Index<(usize, usize)> for CMat2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.e[2 * i + j]
    }
}

impl IndexMut<(usize, usize)> for CMat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.e[2 * i + j]
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, rhs: CMat2) -> CMat2 {
        let mut out = self;
        for k in 0..4 {
            out.e[k] += rhs.e[k];
        }
        out
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: CMat2) -> CMat2 {
        let mut out = CMat2::zero();
        for i in 0..2 {
            for k in 0..2 {
                for j in 0..2 {
                    out[(i, j)] += self[(i, k)] * rhs[(k, j)];
                }
            }
        }
        out
    }
}

// Padé(13) numerator coefficients (Higham 2005); all integers, exact in f64.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling-and-squaring with a Padé(13) approximant.
///
/// Inputs with spectral norm above [`EXP_NORM_BOUND`] are rejected; below a
/// norm of 10 the result is accurate to better than 1e-12 relative error.
pub fn mat_exp(m: &CMat4) -> Result<CMat4> {
    if !m.is_finite() {
        return Err(Error::NonFinite {
            context: "matrix exponential input",
        });
    }
    let norm = m.norm_spectral();
    if norm > EXP_NORM_BOUND * (1.0 + 1e-9) {
        return Err(Error::NormBoundExceeded {
            norm,
            bound: EXP_NORM_BOUND,
        });
    }
    let norm1 = m.norm_one();
    let s = if norm1 > THETA13 {
        (norm1 / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(C64::new(1.0 / f64::powi(2.0, s as i32), 0.0));

    let c = |k: usize| C64::new(PADE13[k], 0.0);
    let id = CMat4::identity();
    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a2 * a4;

    let u_inner = (a6 * c(13) + a4 * c(11) + a2 * c(9)) * a6
        + a6 * c(7)
        + a4 * c(5)
        + a2 * c(3)
        + id * c(1);
    let u = a * u_inner;
    let v = (a6 * c(12) + a4 * c(10) + a2 * c(8)) * a6
        + a6 * c(6)
        + a4 * c(4)
        + a2 * c(2)
        + id * c(0);

    // exp(a) ≈ (V - U)^{-1} (V + U), then square s times.
    let mut r = solve(&(v - u), &(v + u))?;
    for _ in 0..s {
        r = r * r;
    }
    Ok(r)
}

/// Solve A X = B by Gaussian elimination with partial pivoting.
fn solve(a: &CMat4, b: &CMat4) -> Result<CMat4> {
    let mut aug = [[C64::new(0.0, 0.0); 8]; 4];
    for i in 0..4 {
        for j in 0..4 {
            aug[i][j] = a[(i, j)];
            aug[i][4 + j] = b[(i, j)];
        }
    }
    for col in 0..4 {
        let mut pivot_row = col;
        let mut pivot_mag = aug[col][col].norm();
        for row in (col + 1)..4 {
            let mag = aug[row][col].norm();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag < 1e-300 {
            return Err(Error::Singular);
        }
        aug.swap(col, pivot_row);
        for row in (col + 1)..4 {
            let factor = aug[row][col] / aug[col][col];
            for j in col..8 {
                let sub = factor * aug[col][j];
                aug[row][j] -= sub;
            }
        }
    }
    let mut x = [[C64::new(0.0, 0.0); 4]; 4];
    for col in (0..4).rev() {
        for j in 0..4 {
            let mut acc = aug[col][4 + j];
            for k in (col + 1)..4 {
                acc -= aug[col][k] * x[k][j];
            }
            x[col][j] = acc / aug[col][col];
        }
    }
    Ok(CMat4::from_fn(|i, j| x[i][j]))
}

/// Deterministic random matrix with entries uniform in the complex square
/// of half-width `scale`.
pub fn random_matrix(seed: u64, scale: f64) -> CMat4 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CMat4::from_fn(|_, _| {
        C64::new(
            rng.gen_range(-scale..=scale),
            rng.gen_range(-scale..=scale),
        )
    })
}

/// Deterministic random Hermitian matrix, (M + M†)/2 of [`random_matrix`].
pub fn random_hermitian(seed: u64, scale: f64) -> CMat4 {
    let m = random_matrix(seed, scale);
    (m + m.dagger()).scale(C64::new(0.5, 0.0))
}

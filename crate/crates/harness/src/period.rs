//! Dominant-period estimation for uniformly sampled real series.
//!
//! A coarse DFT scan locates the strongest frequency bin; the estimate is
//! then refined by minimizing the residual of a least-squares fit to
//! offset + a·cos(2πft) + b·sin(2πft). The residual vanishes identically at
//! the true frequency of a noiseless sinusoid, so the refinement avoids the
//! negative-frequency interference bias of a plain periodogram peak. On
//! ≥ 64 samples spanning ≥ 2 periods the relative period error stays far
//! below the 1e-4 contract.

use crate::{HarnessError, Result};

const MIN_SAMPLES: usize = 16;

/// Periodogram power at frequency `f` (cycles per unit time).
fn power(series: &[f64], dt: f64, mean: f64, f: f64) -> f64 {
    let mut re = 0.0;
    let mut im = 0.0;
    for (n, x) in series.iter().enumerate() {
        let phase = -2.0 * std::f64::consts::PI * f * (n as f64) * dt;
        let v = x - mean;
        re += v * phase.cos();
        im += v * phase.sin();
    }
    re * re + im * im
}

/// Harmonics carried by the least-squares model
/// x_n ≈ a + Σ_{h=1..H} b_h cos(2πhf t_n) + c_h sin(2πhf t_n).
const HARMONICS: usize = 3;
const NREG: usize = 1 + 2 * HARMONICS;

/// Residual sum of squares of the harmonic least-squares fit at fundamental
/// frequency `f`. Vanishes at the true frequency of any noiseless signal
/// whose content sits in the first [`HARMONICS`] harmonics.
fn sinusoid_rss(series: &[f64], dt: f64, f: f64) -> f64 {
    let n = series.len();
    let omega = 2.0 * std::f64::consts::PI * f * dt;
    // Regressor values per sample, normal-equation accumulation.
    let mut gram = [[0.0f64; NREG]; NREG];
    let mut rhs = [0.0f64; NREG];
    let mut sxx = 0.0;
    let mut reg = [0.0f64; NREG];
    for (k, x) in series.iter().enumerate() {
        reg[0] = 1.0;
        for h in 1..=HARMONICS {
            let (s, c) = (omega * (h * k) as f64).sin_cos();
            reg[2 * h - 1] = c;
            reg[2 * h] = s;
        }
        for i in 0..NREG {
            for j in i..NREG {
                gram[i][j] += reg[i] * reg[j];
            }
            rhs[i] += x * reg[i];
        }
        sxx += x * x;
    }
    for i in 0..NREG {
        for j in 0..i {
            gram[i][j] = gram[j][i];
        }
    }
    // Solve G β = r by Gaussian elimination with partial pivoting.
    let mut aug = [[0.0f64; NREG + 1]; NREG];
    for i in 0..NREG {
        aug[i][..NREG].copy_from_slice(&gram[i]);
        aug[i][NREG] = rhs[i];
    }
    for col in 0..NREG {
        let mut pivot_row = col;
        for row in (col + 1)..NREG {
            if aug[row][col].abs() > aug[pivot_row][col].abs() {
                pivot_row = row;
            }
        }
        aug.swap(col, pivot_row);
        let pivot = aug[col][col];
        if pivot.abs() < 1e-9 * n as f64 {
            return f64::INFINITY; // degenerate regressors at this frequency
        }
        for row in 0..NREG {
            if row == col {
                continue;
            }
            let factor = aug[row][col] / pivot;
            for j in col..=NREG {
                aug[row][j] -= factor * aug[col][j];
            }
        }
    }
    let mut explained = 0.0;
    for i in 0..NREG {
        explained += (aug[i][NREG] / aug[i][i]) * rhs[i];
    }
    (sxx - explained).max(0.0)
}

/// Estimate the dominant period of a uniformly sampled series with spacing
/// `dt`. Constant series are rejected as aperiodic.
pub fn fit_period(series: &[f64], dt: f64) -> Result<f64> {
    if series.len() < MIN_SAMPLES {
        return Err(HarnessError::TooFewSamples {
            need: MIN_SAMPLES,
            got: series.len(),
        });
    }
    assert!(dt > 0.0 && dt.is_finite(), "sample spacing must be positive");
    let n = series.len();
    let mean = series.iter().sum::<f64>() / n as f64;
    let scale = series.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    if series.iter().all(|x| (x - mean).abs() <= 1e-12 * scale) {
        return Err(HarnessError::ConstantSeries);
    }

    // Coarse scan over the Fourier grid k/(n·dt), k = 1..n/2.
    let mut best_k = 1;
    let mut best_p = f64::MIN;
    for k in 1..=(n / 2) {
        let f = k as f64 / (n as f64 * dt);
        let p = power(series, dt, mean, f);
        if p > best_p {
            best_p = p;
            best_k = k;
        }
    }

    let bin = 1.0 / (n as f64 * dt);
    let sxx: f64 = series.iter().map(|x| (x - mean) * (x - mean)).sum();
    let (f1, rss1) = refine(series, dt, best_k as f64 * bin, bin);

    // The coarse peak may sit on a harmonic of the true fundamental; a
    // fundamental at half the frequency wins only when it explains
    // substantially more of the signal.
    if best_k >= 2 {
        let (f_half, rss_half) = refine(series, dt, f1 / 2.0, bin);
        if rss1 > 1e-12 * sxx && rss_half < 0.25 * rss1 {
            return Ok(1.0 / f_half);
        }
    }
    Ok(1.0 / f1)
}

/// Golden-section minimization of the harmonic-fit residual within ±1 bin
/// of `f_center`; returns the refined frequency and its residual.
fn refine(series: &[f64], dt: f64, f_center: f64, bin: f64) -> (f64, f64) {
    let mut lo = (f_center - bin).max(0.25 * bin);
    let mut hi = f_center + bin;
    let phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut r1 = sinusoid_rss(series, dt, x1);
    let mut r2 = sinusoid_rss(series, dt, x2);
    for _ in 0..200 {
        if r1 > r2 {
            lo = x1;
            x1 = x2;
            r1 = r2;
            x2 = lo + phi * (hi - lo);
            r2 = sinusoid_rss(series, dt, x2);
        } else {
            hi = x2;
            x2 = x1;
            r2 = r1;
            x1 = hi - phi * (hi - lo);
            r1 = sinusoid_rss(series, dt, x1);
        }
        if hi - lo < 1e-15 * bin {
            break;
        }
    }
    let f_star = 0.5 * (lo + hi);
    (f_star, sinusoid_rss(series, dt, f_star))
}

//! Shared test oracles, independent of the library's computation paths.
#![allow(dead_code, clippy::needless_range_loop)]

use dirac_entanglement::{CMat4, Complex64 as C64};

/// Eigenvalues of a Hermitian 4×4 matrix by cyclic complex Jacobi rotations.
/// Returns the four (real) eigenvalues sorted ascending.
pub fn hermitian_eigenvalues(m: &CMat4) -> [f64; 4] {
    let mut a = [[C64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            a[i][j] = m[(i, j)];
        }
    }
    for _sweep in 0..30 {
        let mut off = 0.0f64;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off = off.max(a[p][q].norm());
            }
        }
        if off < 1e-15 {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                let b = a[p][q];
                if b.norm() < 1e-300 {
                    continue;
                }
                // Phase factor making the pivot real, then a real rotation.
                let phase = b / C64::new(b.norm(), 0.0);
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let theta = 0.5 * (2.0 * b.norm()).atan2(app - aqq);
                let (s, c) = theta.sin_cos();
                // Column transform U embedded at (p, q):
                //   U[p][p] = c, U[p][q] = -s·phase, U[q][p] = s·conj(phase)·0 ...
                let upp = C64::new(c, 0.0);
                let upq = phase.scale(-s);
                let uqp = phase.conj().scale(s);
                let uqq = C64::new(c, 0.0);
                // A <- U† A U applied to rows/columns p and q.
                for r in 0..4 {
                    let (arp, arq) = (a[r][p], a[r][q]);
                    a[r][p] = arp * upp + arq * uqp;
                    a[r][q] = arp * upq + arq * uqq;
                }
                for r in 0..4 {
                    let (apr, aqr) = (a[p][r], a[q][r]);
                    a[p][r] = upp.conj() * apr + uqp.conj() * aqr;
                    a[q][r] = upq.conj() * apr + uqq.conj() * aqr;
                }
            }
        }
    }
    let mut eig = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

trait Scale {
    fn scale(&self, s: f64) -> Self;
}

impl Scale for C64 {
    fn scale(&self, s: f64) -> Self {
        C64::new(self.re * s, self.im * s)
    }
}

//! The (t_A, t_B) sweep engine: evolve an initial state along two lab
//! schedules to every grid point and tabulate the requested invariant
//! columns. Rows are ordered by grid index (t_A major); every numeric cell
//! is written with 18 significant digits.

use dirac_entanglement::evolution::{evolve_until, Schedule};
use dirac_entanglement::invariants::{all_invariants, block_determinants};
use dirac_entanglement::states::apply_local;
use dirac_entanglement::Complex64 as C64;

use crate::io::{resolve_state, OutputColumn, Scenario};
use crate::Result;

/// One sweep table: a header and numeric rows.
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    /// Render as CSV with full-precision numerics.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * self.header.len() * 26);
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&format!("{v:.17e}"));
            }
            out.push('\n');
        }
        out
    }

    /// Column values by header name.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Grid axis positions: linspace(0, t_max, samples), collapsing to a single
/// zero sample when t_max = 0.
fn axis(t_max: f64, samples: usize) -> Vec<f64> {
    if t_max == 0.0 {
        return vec![0.0];
    }
    (0..samples)
        .map(|k| t_max * k as f64 / (samples - 1) as f64)
        .collect()
}

fn push_complex(header: &mut Vec<String>, prefix: &str) {
    header.push(format!("{prefix}_re"));
    header.push(format!("{prefix}_im"));
    header.push(format!("{prefix}_abs"));
}

fn push_value(row: &mut Vec<f64>, v: C64) {
    row.push(v.re);
    row.push(v.im);
    row.push(v.norm());
}

/// Execute a sweep scenario.
pub fn sweep(scenario: &Scenario) -> Result<SweepTable> {
    let state0 = resolve_state(&scenario.initial_state)?;
    let sched_a: Schedule = scenario.schedule(true);
    let sched_b: Schedule = scenario.schedule(false);
    let ts_a = axis(scenario.grid.t_max_a, scenario.grid.samples);
    let ts_b = axis(scenario.grid.t_max_b, scenario.grid.samples);

    let mut header = vec![
        "idx_a".to_string(),
        "idx_b".to_string(),
        "t_a".to_string(),
        "t_b".to_string(),
    ];
    for out in &scenario.outputs {
        match out {
            OutputColumn::I1 => push_complex(&mut header, "i1"),
            OutputColumn::I2 => push_complex(&mut header, "i2"),
            OutputColumn::I2a => push_complex(&mut header, "i2a"),
            OutputColumn::I2b => push_complex(&mut header, "i2b"),
            OutputColumn::I3 => push_complex(&mut header, "i3"),
            OutputColumn::BlockConcurrences => {
                for b in ["block_ul", "block_ur", "block_ll", "block_lr"] {
                    push_complex(&mut header, b);
                }
            }
        }
    }

    // Evolution operators per axis value are reused across the other axis.
    let us_a: Vec<_> = ts_a
        .iter()
        .map(|&t| evolve_until(&sched_a, t))
        .collect::<std::result::Result<_, _>>()?;
    let us_b: Vec<_> = ts_b
        .iter()
        .map(|&t| evolve_until(&sched_b, t))
        .collect::<std::result::Result<_, _>>()?;

    let mut rows = Vec::with_capacity(ts_a.len() * ts_b.len());
    for (ia, (ta, ua)) in ts_a.iter().zip(&us_a).enumerate() {
        for (ib, (tb, ub)) in ts_b.iter().zip(&us_b).enumerate() {
            let state = apply_local(&state0, ua, ub);
            let mut row = vec![ia as f64, ib as f64, *ta, *tb];
            let rec = all_invariants(&state);
            for out in &scenario.outputs {
                match out {
                    OutputColumn::I1 => push_value(&mut row, rec.i1),
                    OutputColumn::I2 => push_value(&mut row, rec.i2),
                    OutputColumn::I2a => push_value(&mut row, rec.i2a),
                    OutputColumn::I2b => push_value(&mut row, rec.i2b),
                    OutputColumn::I3 => push_value(&mut row, rec.i3),
                    OutputColumn::BlockConcurrences => {
                        for b in block_determinants(&state) {
                            push_value(&mut row, b);
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    Ok(SweepTable { header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::Grid;
    use dirac_entanglement::evolution::{HamiltonianSpec, Segment};
    use dirac_entanglement::states::catalog;

    fn scenario(t_max_a: f64, t_max_b: f64, samples: usize) -> Scenario {
        let seg = |mass: f64| Segment {
            duration: 1e6,
            spec: HamiltonianSpec::mass_only(mass),
        };
        Scenario {
            initial_state: "epr".to_string(),
            schedule_a: vec![seg(1.0)],
            schedule_b: vec![seg(1.0)],
            grid: Grid {
                t_max_a,
                t_max_b,
                samples,
            },
            outputs: vec![
                OutputColumn::I1,
                OutputColumn::I2,
                OutputColumn::I3,
                OutputColumn::BlockConcurrences,
            ],
        }
    }

    #[test]
    fn epr_i1_magnitude_is_constant_over_the_grid() {
        let table = sweep(&scenario(2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI, 9))
            .unwrap();
        let abs = table.column("i1_abs").unwrap();
        assert_eq!(abs.len(), 81);
        for v in abs {
            assert!((v - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_duration_grid_collapses_to_single_row() {
        let table = sweep(&scenario(0.0, 0.0, 8)).unwrap();
        assert_eq!(table.rows.len(), 1);
        let rec = dirac_entanglement::invariants::all_invariants(&catalog("epr").unwrap().state);
        let i1_re = table.column("i1_re").unwrap()[0];
        let i1_im = table.column("i1_im").unwrap()[0];
        assert!((i1_re - rec.i1.re).abs() < 1e-15);
        assert!((i1_im - rec.i1.im).abs() < 1e-15);
    }

    #[test]
    fn csv_has_full_precision_and_header() {
        let table = sweep(&scenario(1.0, 0.0, 4)).unwrap();
        let csv = table.to_csv();
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("idx_a,idx_b,t_a,t_b,i1_re"));
        let first = lines.next().unwrap();
        // 17 digits after the mantissa point.
        assert!(first.contains("e0") || first.contains("e-"), "{first}");
        let cell = first.split(',').nth(4).unwrap();
        let mantissa = cell.split('e').next().unwrap();
        let digits = mantissa.trim_start_matches('-');
        assert!(digits.len() >= 18, "cell {cell} lacks precision");
    }

    #[test]
    fn fitted_period_from_sweep_table_matches_mass() {
        // A state with two oscillating block determinants: Re I₁(t_A) is a
        // pure sinusoid with period π/m_A.
        let seg = Segment {
            duration: 1e6,
            spec: HamiltonianSpec::mass_only(1.0),
        };
        let scenario = Scenario {
            initial_state: "decay_symmetric".to_string(),
            schedule_a: vec![seg.clone()],
            schedule_b: vec![seg],
            grid: Grid {
                t_max_a: 4.0 * std::f64::consts::PI,
                t_max_b: 0.0,
                samples: 256,
            },
            outputs: vec![OutputColumn::I1],
        };
        let table = sweep(&scenario).unwrap();
        let series = table.column("i1_re").unwrap();
        let t = table.column("t_a").unwrap();
        let dt = t[1] - t[0];
        let period = crate::period::fit_period(&series, dt).unwrap();
        let rel = (period - std::f64::consts::PI).abs() / std::f64::consts::PI;
        assert!(rel < 1e-6, "fitted {period}, relative error {rel:.3e}");
    }

    #[test]
    fn rows_are_ordered_by_grid_index() {
        let table = sweep(&scenario(1.0, 1.0, 3)).unwrap();
        let idx: Vec<(f64, f64)> = table
            .rows
            .iter()
            .map(|r| (r[0], r[1]))
            .collect();
        let mut sorted = idx.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(idx, sorted);
    }
}

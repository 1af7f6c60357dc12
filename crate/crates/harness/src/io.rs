//! Load/save for state files, Hamiltonian spec files and sweep scenarios.
//!
//! All documents are JSON. A state file holds `"coeffs"`: an array of 16
//! [re, im] pairs in row-major (j·4 + k) order, plus an optional `"name"`.
//! A Hamiltonian spec file mirrors `HamiltonianSpec` and may carry an
//! optional `"fw_fields"` block consumed by the `fw` subcommand. Writers
//! emit every float with 17 digits after the mantissa point, so a load/save
//! round trip is bit-exact.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use dirac_entanglement::evolution::{ExtraTerm, HamiltonianSpec, Schedule, Segment};
use dirac_entanglement::foldy::FWFieldData;
use dirac_entanglement::states::catalog;
use dirac_entanglement::{CMat4, Complex64 as C64, TwoSpinorState};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::{HarnessError, Result};

/// serde_json formatter printing every float with 18 significant digits.
struct FullPrecision;

impl serde_json::ser::Formatter for FullPrecision {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.17e}")
    }
}

/// Serialize any value to JSON with full float precision.
pub fn to_json_full_precision<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    let mut f = std::fs::File::create(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    f.write_all(contents.as_bytes())
        .and_then(|_| f.write_all(b"\n"))
        .map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| HarnessError::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// On-disk state document.
#[derive(Debug, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub coeffs: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn from_state(name: Option<&str>, state: &TwoSpinorState) -> Self {
        Self {
            name: name.map(str::to_string),
            coeffs: state.coeffs().entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn into_state(self, path: &Path) -> Result<(Option<String>, TwoSpinorState)> {
        if self.coeffs.len() != 16 {
            return Err(HarnessError::Field {
                path: path.to_path_buf(),
                field: "coeffs",
                message: format!("expected 16 [re, im] pairs, got {}", self.coeffs.len()),
            });
        }
        if self.coeffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err(HarnessError::Field {
                path: path.to_path_buf(),
                field: "coeffs",
                message: "entries must be finite".to_string(),
            });
        }
        let mut m = CMat4::zero();
        for (idx, [re, im]) in self.coeffs.iter().enumerate() {
            m[(idx / 4, idx % 4)] = C64::new(*re, *im);
        }
        Ok((self.name, TwoSpinorState::new(m)))
    }
}

/// Load a state file (16 row-major [re, im] pairs).
pub fn load_state(path: &Path) -> Result<(Option<String>, TwoSpinorState)> {
    let doc: StateFile = parse_json(path, &read_file(path)?)?;
    doc.into_state(path)
}

/// Save a state file with full precision.
pub fn save_state(path: &Path, name: Option<&str>, state: &TwoSpinorState) -> Result<()> {
    write_file(path, &to_json_full_precision(&StateFile::from_state(name, state)))
}

/// Resolve a `--state` argument: catalog name first, then a file path.
pub fn resolve_state(arg: &str) -> Result<TwoSpinorState> {
    if let Ok(entry) = catalog(arg) {
        return Ok(entry.state);
    }
    let path = PathBuf::from(arg);
    if path.exists() {
        return Ok(load_state(&path)?.1);
    }
    Err(HarnessError::UnknownState {
        name: arg.to_string(),
        catalog: dirac_entanglement::states::CATALOG_NAMES.join(", "),
    })
}

/// On-disk Hamiltonian document: the spec fields plus optional FW field
/// constants used by the `fw` subcommand.
#[derive(Debug, Serialize, Deserialize)]
pub struct HamFile {
    pub mass: f64,
    pub charge: f64,
    pub momentum: [f64; 3],
    pub potential: [f64; 4],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<ExtraTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fw_fields: Option<FWFieldData>,
}

impl HamFile {
    pub fn from_spec(spec: &HamiltonianSpec, fw_fields: Option<FWFieldData>) -> Self {
        Self {
            mass: spec.mass,
            charge: spec.charge,
            momentum: spec.momentum,
            potential: spec.potential,
            extras: spec.extras.clone(),
            fw_fields,
        }
    }

    pub fn spec(&self) -> HamiltonianSpec {
        HamiltonianSpec {
            mass: self.mass,
            charge: self.charge,
            momentum: self.momentum,
            potential: self.potential,
            extras: self.extras.clone(),
        }
    }
}

/// Load a Hamiltonian spec file; returns the spec and any FW field block.
pub fn load_spec(path: &Path) -> Result<(HamiltonianSpec, Option<FWFieldData>)> {
    let doc: HamFile = parse_json(path, &read_file(path)?)?;
    Ok((doc.spec(), doc.fw_fields))
}

/// Save a Hamiltonian spec file with full precision.
pub fn save_spec(
    path: &Path,
    spec: &HamiltonianSpec,
    fw_fields: Option<FWFieldData>,
) -> Result<()> {
    write_file(
        path,
        &to_json_full_precision(&HamFile::from_spec(spec, fw_fields)),
    )
}

/// Which columns a sweep emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputColumn {
    I1,
    I2,
    I2a,
    I2b,
    I3,
    /// The four 2×2 block determinants (upper-left, upper-right, lower-left,
    /// lower-right); their magnitudes are the constituent concurrences.
    BlockConcurrences,
}

/// Grid specification of a sweep scenario.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Grid {
    pub t_max_a: f64,
    pub t_max_b: f64,
    /// Samples per axis (an axis with t_max = 0 collapses to one sample).
    pub samples: usize,
}

/// A sweep scenario: initial state (catalog name or file path), one schedule
/// per lab, the (t_A, t_B) grid and the requested output columns.
#[derive(Debug, Serialize, Deserialize)]
pub struct Scenario {
    pub initial_state: String,
    pub schedule_a: Vec<Segment>,
    pub schedule_b: Vec<Segment>,
    pub grid: Grid,
    pub outputs: Vec<OutputColumn>,
}

impl Scenario {
    pub fn schedule(&self, side_a: bool) -> Schedule {
        Schedule::new(if side_a {
            self.schedule_a.clone()
        } else {
            self.schedule_b.clone()
        })
    }
}

/// Load and validate a scenario file.
pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let scenario: Scenario = parse_json(path, &read_file(path)?)?;
    let field_err = |field, message: String| HarnessError::Field {
        path: path.to_path_buf(),
        field,
        message,
    };
    if scenario.grid.samples < 2 {
        return Err(field_err(
            "grid.samples",
            format!("need at least 2 samples per axis, got {}", scenario.grid.samples),
        ));
    }
    let t_max_ok = |x: f64| x.is_finite() && x >= 0.0;
    if !t_max_ok(scenario.grid.t_max_a) || !t_max_ok(scenario.grid.t_max_b) {
        return Err(field_err("grid", "t_max values must be finite and >= 0".to_string()));
    }
    if scenario.outputs.is_empty() {
        return Err(field_err("outputs", "at least one output column".to_string()));
    }
    for (label, segs) in [
        ("schedule_a", &scenario.schedule_a),
        ("schedule_b", &scenario.schedule_b),
    ] {
        if segs.is_empty() {
            return Err(field_err(label, "schedule needs at least one segment".to_string()));
        }
        if segs.iter().any(|s| !s.duration.is_finite() || s.duration < 0.0) {
            return Err(field_err(label, "segment durations must be finite and >= 0".to_string()));
        }
    }
    Ok(scenario)
}

pub fn save_scenario(path: &Path, scenario: &Scenario) -> Result<()> {
    write_file(path, &to_json_full_precision(scenario))
}

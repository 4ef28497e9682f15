//! Command-line front end: `compile`, `verify`, `stats`, `spectrum` and
//! `dump-operators` over JSON artifacts.
//!
//! All outputs are deterministic: canonical term ordering, fixed key order,
//! no timestamps. Exit codes: 0 success, 1 verification failure, 2 invalid
//! input, 3 size cap exceeded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::encoder::CompactEncoding;
use crate::error::{Error, Result};
use crate::hamiltonian::{
    compile, weight_stats, CompiledHamiltonian, Encoding, FermionicHamiltonian, HamiltonianSpec,
    WeightStats,
};
use crate::hex::HexEncoding;
use crate::jw::JwEncoding;
use crate::lattice::{Lattice, LatticeCase, LatticeSpec};
use crate::oracle;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Compile,
    Verify,
    Stats,
    Spectrum,
    DumpOperators,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodingChoice {
    Compact,
    Jw,
    Both,
}

impl EncodingChoice {
    fn single(self) -> Vec<Encoding> {
        match self {
            EncodingChoice::Compact => vec![Encoding::Compact],
            EncodingChoice::Jw => vec![Encoding::Jw],
            EncodingChoice::Both => vec![Encoding::Compact, Encoding::Jw],
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub lattice_path: PathBuf,
    pub hamiltonian_path: Option<PathBuf>,
    pub encoding: EncodingChoice,
    pub output: Option<PathBuf>,
    pub tol: f64,
    pub checkerboard_phase: Option<u8>,
}

/// Exit code for an error that aborted a run.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeCapExceeded { .. } => 3,
        _ => 2,
    }
}

fn load_lattice(config: &RunConfig) -> Result<Lattice> {
    let text = std::fs::read_to_string(&config.lattice_path)?;
    let mut spec: LatticeSpec = serde_json::from_str(&text)?;
    if let Some(phase) = config.checkerboard_phase {
        match &mut spec {
            LatticeSpec::Square {
                checkerboard_phase, ..
            } => *checkerboard_phase = phase,
            LatticeSpec::Hex { .. } => {
                return Err(Error::InvalidInput(
                    "--checkerboard-phase applies to square lattices only".into(),
                ))
            }
        }
    }
    Lattice::from_spec(&spec)
}

fn load_hamiltonian(config: &RunConfig, lattice: &Lattice) -> Result<FermionicHamiltonian> {
    let path = config.hamiltonian_path.as_ref().ok_or_else(|| {
        Error::InvalidInput("this command requires --hamiltonian".into())
    })?;
    let text = std::fs::read_to_string(path)?;
    let spec: HamiltonianSpec = serde_json::from_str(&text)?;
    FermionicHamiltonian::new(lattice.clone(), spec.terms)
}

fn write_output(path: Option<&Path>, payload: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(payload)?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct CompiledTermJson {
    re: f64,
    im: f64,
    pauli: String,
}

#[derive(Serialize)]
struct CompiledJson {
    encoding: Encoding,
    n_qubits: usize,
    terms: Vec<CompiledTermJson>,
}

fn compiled_payload(compiled: &CompiledHamiltonian) -> CompiledJson {
    let terms = compiled
        .pauli_sum
        .terms()
        .map(|(c, word)| CompiledTermJson {
            re: c.re,
            im: c.im,
            pauli: word.to_string().trim_start_matches('+').to_string(),
        })
        .collect();
    CompiledJson {
        encoding: compiled.encoding,
        n_qubits: compiled.n_qubits,
        terms,
    }
}

#[derive(Serialize)]
struct CompileOutput {
    format: u32,
    #[serde(flatten)]
    single: Option<CompiledJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    compact: Option<CompiledJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jw: Option<CompiledJson>,
}

fn run_compile(config: &RunConfig) -> Result<i32> {
    let lattice = load_lattice(config)?;
    let ham = load_hamiltonian(config, &lattice)?;
    let out = match config.encoding {
        EncodingChoice::Both => CompileOutput {
            format: FORMAT_VERSION,
            single: None,
            compact: Some(compiled_payload(&compile(&ham, Encoding::Compact)?)),
            jw: Some(compiled_payload(&compile(&ham, Encoding::Jw)?)),
        },
        choice => CompileOutput {
            format: FORMAT_VERSION,
            single: Some(compiled_payload(&compile(&ham, choice.single()[0])?)),
            compact: None,
            jw: None,
        },
    };
    write_output(config.output.as_deref(), &out)?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleChecks {
    qubits: usize,
    codespace_rank: usize,
    expected_rank: usize,
    idempotence_defect: f64,
    groundspace: oracle::GroundspaceReport,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyOutput {
    format: u32,
    lattice: LatticeSpec,
    relations: oracle::RelationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleChecks>,
    all_passed: bool,
}

fn oracle_checks(lattice: &Lattice, tol: f64) -> Result<OracleChecks> {
    let (n, stabs, expected_rank) = match lattice {
        Lattice::Square(sq) => {
            let enc = CompactEncoding::new(sq.clone())?;
            let r = sq.classify();
            let exponent = r.modes + r.odd_faces - r.even_faces;
            (enc.n_qubits(), enc.stabilizers().clone(), 1usize << exponent)
        }
        Lattice::Hex(hx) => {
            let enc = HexEncoding::new(hx.clone())?;
            (enc.n_qubits(), enc.stabilizers().clone(), 1usize << hx.mode_count())
        }
    };
    let projector = oracle::codespace_projector(&stabs)?;
    let (rank, defect) = projector.projector_rank()?;
    let ground = oracle::groundspace_check(lattice, tol)?;
    let passed = rank == expected_rank && defect <= 1e-12 && ground.passed;
    Ok(OracleChecks {
        qubits: n,
        codespace_rank: rank,
        expected_rank,
        idempotence_defect: defect,
        groundspace: ground,
        passed,
    })
}

fn run_verify(config: &RunConfig) -> Result<i32> {
    let lattice = load_lattice(config)?;
    let relations = oracle::verify_relations(&lattice)?;
    let n_qubits = match &lattice {
        Lattice::Square(sq) => sq.qubit_layout().total,
        Lattice::Hex(hx) => hx.qubit_layout().total,
    };
    let oracle_part = if n_qubits <= oracle::QUBIT_CAP {
        Some(oracle_checks(&lattice, config.tol)?)
    } else {
        None
    };
    let all_passed =
        relations.all_passed() && oracle_part.as_ref().map_or(true, |o| o.passed);
    let out = VerifyOutput {
        format: FORMAT_VERSION,
        lattice: lattice.to_spec(),
        relations,
        oracle: oracle_part,
        all_passed,
    };
    write_output(config.output.as_deref(), &out)?;
    Ok(if all_passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct StatsOutput {
    format: u32,
    lattice: LatticeSpec,
    stats: Vec<WeightStats>,
}

fn run_stats(config: &RunConfig) -> Result<i32> {
    let lattice = load_lattice(config)?;
    let stats = config
        .encoding
        .single()
        .into_iter()
        .map(|e| weight_stats(&lattice, e))
        .collect::<Result<Vec<_>>>()?;
    let out = StatsOutput {
        format: FORMAT_VERSION,
        lattice: lattice.to_spec(),
        stats,
    };
    write_output(config.output.as_deref(), &out)?;
    Ok(0)
}

#[derive(Serialize)]
struct SpectrumOutput {
    format: u32,
    lattice: LatticeSpec,
    case: Option<LatticeCase>,
    encoded: oracle::SpectrumReport,
    fermionic: oracle::SpectrumReport,
    max_discrepancy: f64,
    tolerance: f64,
    within_tolerance: bool,
}

fn run_spectrum(config: &RunConfig) -> Result<i32> {
    let lattice = load_lattice(config)?;
    let ham = load_hamiltonian(config, &lattice)?;
    let encoded = oracle::encoded_spectrum(&ham)?;
    let sector = oracle::expected_sector(&lattice);
    let reference_sector = match sector {
        oracle::SectorTag::EvenParity => oracle::SectorTag::EvenParity,
        _ => oracle::SectorTag::Full,
    };
    let fermionic = oracle::fermionic_spectrum(&ham, reference_sector)?;
    let doubled = sector == oracle::SectorTag::Doubled;
    let max_discrepancy =
        oracle::spectra_match(&encoded.eigenvalues, &fermionic.eigenvalues, doubled);
    let within = max_discrepancy <= config.tol;
    let case = match &lattice {
        Lattice::Square(sq) => Some(sq.classify().case),
        Lattice::Hex(_) => None,
    };
    let out = SpectrumOutput {
        format: FORMAT_VERSION,
        lattice: lattice.to_spec(),
        case,
        encoded,
        fermionic,
        max_discrepancy,
        tolerance: config.tol,
        within_tolerance: within,
    };
    write_output(config.output.as_deref(), &out)?;
    Ok(if within { 0 } else { 1 })
}

#[derive(Serialize)]
struct DumpOutput {
    format: u32,
    lattice: LatticeSpec,
    encoding: Encoding,
    n_qubits: usize,
    case: Option<LatticeCase>,
    edge_operators: BTreeMap<String, String>,
    vertex_operators: BTreeMap<String, String>,
    stabilizers: Vec<String>,
    majorana_corners: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    logical: Option<BTreeMap<String, String>>,
}

fn run_dump(config: &RunConfig) -> Result<i32> {
    let lattice = load_lattice(config)?;
    let encoding = match config.encoding {
        EncodingChoice::Jw => Encoding::Jw,
        _ => Encoding::Compact,
    };
    let out = match (&lattice, encoding) {
        (Lattice::Square(sq), Encoding::Compact) => {
            let enc = CompactEncoding::new(sq.clone())?;
            let case = sq.classify().case;
            let logical = if case == LatticeCase::III {
                let lq = enc.logical_paulis()?;
                let mut map = BTreeMap::new();
                map.insert("x".to_string(), lq.x.to_string());
                map.insert("y".to_string(), lq.y.to_string());
                map.insert("z".to_string(), lq.z.to_string());
                Some(map)
            } else {
                None
            };
            DumpOutput {
                format: FORMAT_VERSION,
                lattice: lattice.to_spec(),
                encoding,
                n_qubits: enc.n_qubits(),
                case: Some(case),
                edge_operators: enc
                    .edge_ops()
                    .map(|(d, op)| (d.to_string(), op.to_string()))
                    .collect(),
                vertex_operators: enc
                    .vertex_ops()
                    .map(|(v, op)| (v.to_string(), op.to_string()))
                    .collect(),
                stabilizers: enc
                    .stabilizers()
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
                majorana_corners: enc
                    .majorana_corners()
                    .into_iter()
                    .map(|(v, op)| (v.to_string(), op.to_string()))
                    .collect(),
                logical,
            }
        }
        (Lattice::Hex(hx), Encoding::Compact) => {
            let enc = HexEncoding::new(hx.clone())?;
            DumpOutput {
                format: FORMAT_VERSION,
                lattice: lattice.to_spec(),
                encoding,
                n_qubits: enc.n_qubits(),
                case: None,
                edge_operators: enc
                    .edge_ops()
                    .map(|(d, op)| (d.to_string(), op.to_string()))
                    .collect(),
                vertex_operators: enc
                    .vertex_ops()
                    .map(|(v, op)| (v.to_string(), op.to_string()))
                    .collect(),
                stabilizers: enc
                    .stabilizers()
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
                majorana_corners: enc
                    .majorana_corners()
                    .into_iter()
                    .map(|(v, op)| (v.to_string(), op.to_string()))
                    .collect(),
                logical: None,
            }
        }
        (_, Encoding::Jw) => {
            let jw = JwEncoding::snake(&lattice);
            let mut edge_operators = BTreeMap::new();
            for e in lattice.edges() {
                edge_operators.insert(
                    e.to_string(),
                    jw.edge_operator(e.tail, e.head)?.to_string(),
                );
            }
            let mut vertex_operators = BTreeMap::new();
            for v in lattice.vertices() {
                vertex_operators.insert(v.to_string(), jw.vertex_operator(v)?.to_string());
            }
            DumpOutput {
                format: FORMAT_VERSION,
                lattice: lattice.to_spec(),
                encoding,
                n_qubits: jw.n_qubits(),
                case: None,
                edge_operators,
                vertex_operators,
                stabilizers: Vec::new(),
                majorana_corners: BTreeMap::new(),
                logical: None,
            }
        }
    };
    write_output(config.output.as_deref(), &out)?;
    Ok(0)
}

/// Execute one command; returns the process exit code.
pub fn run(config: &RunConfig) -> Result<i32> {
    match config.command {
        Command::Compile => run_compile(config),
        Command::Verify => run_verify(config),
        Command::Stats => run_stats(config),
        Command::Spectrum => run_spectrum(config),
        Command::DumpOperators => run_dump(config),
    }
}

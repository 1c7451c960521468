//! Dataset ingestion and result serialization.
//!
//! Input is CSV (header with `mu`, `omega`, `nu` and an optional `id`, any
//! order, case-insensitive) or JSONL (one object per line with the same
//! keys). Output numbers use 12 significant digits in the style of C's
//! `%.12g`, so files are byte-stable across platforms.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::decomposition::{decompose, Component, HeptaDecomposition};
use crate::entropy::{entropy_value, EntropyVariant};
use crate::triple::{DerivedIndices, DomainError, InformationKind, NeutrosophicTriple, Tolerance};

/// Significant digits in every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "jsonl" => Ok(Format::Jsonl),
            _ => Err(format!("unknown format '{s}' (expected csv or jsonl)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("line {line}: {source}")]
    Domain { line: u64, source: DomainError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl InputError {
    pub fn line(&self) -> Option<u64> {
        match self {
            InputError::Parse { line, .. } | InputError::Domain { line, .. } => Some(*line),
            InputError::Io(_) => None,
        }
    }
}

/// One input row.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub id: Option<String>,
    pub triple: NeutrosophicTriple,
}

/// Records parsed from a stream, with the number of clamped values when
/// clamping was enabled.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParsedRecords {
    pub records: Vec<Record>,
    pub clamped: usize,
}

fn check_id(id: &str, line: u64) -> Result<Option<String>, InputError> {
    if id.is_empty() {
        return Ok(None);
    }
    if id.contains([',', '"', '\n', '\r']) {
        return Err(InputError::Parse {
            line,
            message: format!("id {id:?} contains a delimiter, quote or line break"),
        });
    }
    Ok(Some(id.to_string()))
}

fn build_triple(
    values: [f64; 3],
    clamp: bool,
    line: u64,
    clamped: &mut usize,
) -> Result<NeutrosophicTriple, InputError> {
    let [mu, omega, nu] = values;
    let result = if clamp {
        NeutrosophicTriple::new_clamped(mu, omega, nu).map(|(t, n)| {
            *clamped += n;
            t
        })
    } else {
        NeutrosophicTriple::new(mu, omega, nu)
    };
    result.map_err(|source| InputError::Domain { line, source })
}

/// Parses a whole stream. Records keep input order; the first malformed or
/// out-of-range row aborts with its line number.
pub fn parse_records<R: Read>(
    input: R,
    format: Format,
    clamp: bool,
) -> Result<ParsedRecords, InputError> {
    match format {
        Format::Csv => parse_csv(input, clamp),
        Format::Jsonl => parse_jsonl(input, clamp),
    }
}

const KEYS: [&str; 3] = ["mu", "omega", "nu"];

fn parse_csv<R: Read>(input: R, clamp: bool) -> Result<ParsedRecords, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let header = reader.headers().map_err(|e| csv_error(e, 1))?.clone();

    let mut columns: HashMap<String, usize> = HashMap::new();
    for (i, name) in header.iter().enumerate() {
        let name = name.trim_start_matches('\u{feff}').to_ascii_lowercase();
        if (KEYS.contains(&name.as_str()) || name == "id")
            && columns.insert(name.clone(), i).is_some()
        {
            return Err(InputError::Parse {
                line: 1,
                message: format!("duplicate column {name}"),
            });
        }
    }
    let mut positions = [0usize; 3];
    for (slot, key) in positions.iter_mut().zip(KEYS) {
        *slot = *columns.get(key).ok_or_else(|| InputError::Parse {
            line: 1,
            message: format!("missing column {key}"),
        })?;
    }
    let id_column = columns.get("id").copied();

    let mut out = ParsedRecords::default();
    let mut row = csv::StringRecord::new();
    loop {
        let line = reader.position().line();
        match reader.read_record(&mut row) {
            Ok(true) => {}
            Ok(false) => break,
            Err(e) => return Err(csv_error(e, line)),
        }
        let line = row.position().map(|p| p.line()).unwrap_or(line);
        if row.iter().all(str::is_empty) {
            continue;
        }
        let mut values = [0.0; 3];
        for ((value, &col), key) in values.iter_mut().zip(&positions).zip(KEYS) {
            let raw = row.get(col).unwrap_or("");
            *value = raw.parse::<f64>().map_err(|_| InputError::Parse {
                line,
                message: format!("{key}: cannot parse {raw:?} as a number"),
            })?;
        }
        let id = match id_column.and_then(|c| row.get(c)) {
            Some(raw) => check_id(raw, line)?,
            None => None,
        };
        let triple = build_triple(values, clamp, line, &mut out.clamped)?;
        out.records.push(Record { id, triple });
    }
    Ok(out)
}

fn csv_error(e: csv::Error, line: u64) -> InputError {
    let line = e.position().map(|p| p.line()).unwrap_or(line);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => InputError::Io(io),
        kind => InputError::Parse {
            line,
            message: format!("{kind:?}"),
        },
    }
}

fn parse_jsonl<R: Read>(mut input: R, clamp: bool) -> Result<ParsedRecords, InputError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut out = ParsedRecords::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(raw).map_err(|e| InputError::Parse {
                line,
                message: e.to_string(),
            })?;
        let obj = value.as_object().ok_or_else(|| InputError::Parse {
            line,
            message: "expected a JSON object".into(),
        })?;
        let mut values = [0.0; 3];
        for (slot, key) in values.iter_mut().zip(KEYS) {
            let v = obj.get(key).ok_or_else(|| InputError::Parse {
                line,
                message: format!("missing key {key}"),
            })?;
            *slot = v.as_f64().ok_or_else(|| InputError::Parse {
                line,
                message: format!("{key} is not a number"),
            })?;
        }
        let id = match obj.get("id") {
            None | Some(serde_json::Value::Null) => None,
            Some(serde_json::Value::String(s)) => check_id(s, line)?,
            Some(_) => {
                return Err(InputError::Parse {
                    line,
                    message: "id must be a string".into(),
                })
            }
        };
        let triple = build_triple(values, clamp, line, &mut out.clamped)?;
        out.records.push(Record { id, triple });
    }
    Ok(out)
}

/// Formats `x` with 12 significant digits, trailing zeros removed, switching
/// to exponent notation below `1e-4` or from `1e12` (same rules as `%.12g`).
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let precision = SIGNIFICANT_DIGITS - 1;
    let sci = format!("{:.*e}", precision, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (precision as i32 - exp) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Everything computed for one record.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub id: Option<String>,
    pub triple: NeutrosophicTriple,
    pub indices: DerivedIndices,
    pub kind: InformationKind,
    pub entropy_c: f64,
    pub entropy_r: f64,
    pub hepta_c: HeptaDecomposition,
    pub hepta_r: HeptaDecomposition,
}

impl ResultRow {
    pub fn compute(record: &Record, tol: Tolerance) -> Self {
        let t = record.triple;
        ResultRow {
            id: record.id.clone(),
            triple: t,
            indices: t.indices(),
            kind: t.classify(tol),
            entropy_c: entropy_value(&t, EntropyVariant::Czekanowski),
            entropy_r: entropy_value(&t, EntropyVariant::Ruzicka),
            hepta_c: decompose(&t, EntropyVariant::Czekanowski),
            hepta_r: decompose(&t, EntropyVariant::Ruzicka),
        }
    }

    /// Every column after `id`, in output order.
    fn cells(&self) -> Vec<(String, Cell<'_>)> {
        let mut out: Vec<(String, Cell<'_>)> = [
            ("mu", self.triple.mu()),
            ("omega", self.triple.omega()),
            ("nu", self.triple.nu()),
            ("tau", self.indices.tau),
            ("pi", self.indices.pi),
            ("kappa", self.indices.kappa),
            ("alpha", self.indices.alpha),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), Cell::Number(v)))
        .collect();
        out.push(("kind".to_string(), Cell::Text(self.kind.name())));
        out.push(("entropy_c".to_string(), Cell::Number(self.entropy_c)));
        out.push(("entropy_r".to_string(), Cell::Number(self.entropy_r)));
        for h in [&self.hepta_c, &self.hepta_r] {
            for c in Component::ALL {
                out.push((
                    format!("{}_{}", c.symbol(), h.variant.tag()),
                    Cell::Number(h.get(c)),
                ));
            }
        }
        out
    }
}

enum Cell<'a> {
    Text(&'a str),
    Number(f64),
}

/// Computes result rows in parallel, preserving input order.
pub fn compute_rows(records: &[Record], tol: Tolerance) -> Vec<ResultRow> {
    records
        .par_iter()
        .map(|r| ResultRow::compute(r, tol))
        .collect()
}

/// CSV header of [`emit_results`].
pub fn result_columns() -> Vec<String> {
    let mut cols: Vec<String> = [
        "id",
        "mu",
        "omega",
        "nu",
        "tau",
        "pi",
        "kappa",
        "alpha",
        "kind",
        "entropy_c",
        "entropy_r",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for v in EntropyVariant::ALL {
        for c in Component::ALL {
            cols.push(format!("{}_{}", c.symbol(), v.tag()));
        }
    }
    cols
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Writes result rows. CSV columns are those of [`result_columns`]; JSONL
/// objects use the same keys in the same order (`id` omitted when absent).
pub fn emit_results<W: Write>(rows: &[ResultRow], format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", result_columns().join(","))?;
            for row in rows {
                let mut line = row.id.clone().unwrap_or_default();
                for (_, cell) in row.cells() {
                    line.push(',');
                    match cell {
                        Cell::Text(text) => line.push_str(text),
                        Cell::Number(x) => line.push_str(&format_number(x)),
                    }
                }
                writeln!(out, "{line}")?;
            }
        }
        Format::Jsonl => {
            for row in rows {
                let mut parts = Vec::new();
                if let Some(id) = &row.id {
                    parts.push(format!("\"id\":{}", json_string(id)));
                }
                for (key, cell) in row.cells() {
                    match cell {
                        Cell::Text(text) => parts.push(format!("\"{key}\":{}", json_string(text))),
                        Cell::Number(x) => parts.push(format!("\"{key}\":{}", format_number(x))),
                    }
                }
                writeln!(out, "{{{}}}", parts.join(","))?;
            }
        }
    }
    out.flush()
}

/// Writes `id, mu, omega, nu, kind` per record.
pub fn emit_classifications<W: Write>(
    records: &[Record],
    tol: Tolerance,
    format: Format,
    mut out: W,
) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "id,mu,omega,nu,kind")?;
    }
    for r in records {
        let t = r.triple;
        let kind = t.classify(tol);
        let (mu, omega, nu) = (
            format_number(t.mu()),
            format_number(t.omega()),
            format_number(t.nu()),
        );
        match format {
            Format::Csv => writeln!(
                out,
                "{},{mu},{omega},{nu},{kind}",
                r.id.as_deref().unwrap_or("")
            )?,
            Format::Jsonl => {
                let id =
                    r.id.as_deref()
                        .map(|s| format!("\"id\":{},", json_string(s)))
                        .unwrap_or_default();
                writeln!(
                    out,
                    "{{{id}\"mu\":{mu},\"omega\":{omega},\"nu\":{nu},\"kind\":\"{kind}\"}}"
                )?
            }
        }
    }
    out.flush()
}

/// One of the sixteen scalars a grid can tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Entropy(EntropyVariant),
    Component(Component, EntropyVariant),
}

impl Quantity {
    pub fn all() -> Vec<Quantity> {
        let mut all: Vec<Quantity> = EntropyVariant::ALL
            .into_iter()
            .map(Quantity::Entropy)
            .collect();
        for v in EntropyVariant::ALL {
            for c in Component::ALL {
                all.push(Quantity::Component(c, v));
            }
        }
        all
    }

    /// Parses a quantity name. `entropy_c` / `entropy_r` select the entropy;
    /// a component symbol (`t`, `f`, `a`, `u`, `c`, `n`, `s`) or name uses
    /// `variant`, unless suffixed as in `u_r`. Plain `entropy` also uses
    /// `variant`.
    pub fn parse(name: &str, variant: EntropyVariant) -> Result<Quantity, String> {
        let lower = name.to_ascii_lowercase();
        if lower == "entropy" {
            return Ok(Quantity::Entropy(variant));
        }
        if let Some((head, tail)) = lower.rsplit_once('_') {
            if let Ok(v) = tail.parse::<EntropyVariant>() {
                if head == "entropy" {
                    return Ok(Quantity::Entropy(v));
                }
                if let Ok(c) = head.parse::<Component>() {
                    return Ok(Quantity::Component(c, v));
                }
            }
        }
        lower
            .parse::<Component>()
            .map(|c| Quantity::Component(c, variant))
            .map_err(|_| format!("unknown quantity '{name}'"))
    }

    pub fn evaluate(self, t: &NeutrosophicTriple) -> f64 {
        match self {
            Quantity::Entropy(v) => entropy_value(t, v),
            Quantity::Component(c, v) => decompose(t, v).get(c),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Entropy(v) => write!(f, "entropy_{}", v.tag()),
            Quantity::Component(c, v) => write!(f, "{}_{}", c.symbol(), v.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("resolution must be at least 2, got {0}")]
    Resolution(usize),
    #[error("omega: {0}")]
    Omega(DomainError),
}

/// A square `(mu, nu)` lattice at fixed neutrality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    omega: f64,
    resolution: usize,
    quantity: Quantity,
}

impl GridSpec {
    pub fn new(omega: f64, resolution: usize, quantity: Quantity) -> Result<Self, GridError> {
        if resolution < 2 {
            return Err(GridError::Resolution(resolution));
        }
        NeutrosophicTriple::new(0.0, omega, 0.0).map_err(GridError::Omega)?;
        Ok(GridSpec {
            omega,
            resolution,
            quantity,
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    /// Lattice coordinate `k / (resolution - 1)`.
    pub fn coordinate(&self, k: usize) -> f64 {
        k as f64 / (self.resolution - 1) as f64
    }
}

/// Row-major grid values: row index is the `nu` step, column the `mu` step.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub spec: GridSpec,
    pub values: Vec<f64>,
}

impl Grid {
    pub fn evaluate(spec: GridSpec) -> Grid {
        let n = spec.resolution;
        let values = (0..n)
            .into_par_iter()
            .flat_map_iter(|row| {
                let nu = spec.coordinate(row);
                (0..n).map(move |col| {
                    let t = NeutrosophicTriple::new(spec.coordinate(col), spec.omega, nu)
                        .expect("lattice points lie in the cube");
                    spec.quantity.evaluate(&t)
                })
            })
            .collect();
        Grid { spec, values }
    }

    /// Value at `mu` step `col` and `nu` step `row`.
    pub fn at(&self, col: usize, row: usize) -> f64 {
        self.values[row * self.spec.resolution + col]
    }

    /// CSV table with columns `mu, nu, value`, rows ordered by `nu` then `mu`.
    pub fn write_table<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "mu,nu,value")?;
        let n = self.spec.resolution;
        for row in 0..n {
            for col in 0..n {
                writeln!(
                    out,
                    "{},{},{}",
                    format_number(self.spec.coordinate(col)),
                    format_number(self.spec.coordinate(row)),
                    format_number(self.at(col, row))
                )?;
            }
        }
        out.flush()
    }

    /// Binary PPM (P6), grayscale: 0 maps to black, 1 to white.
    pub fn write_ppm<W: Write>(&self, mut out: W) -> io::Result<()> {
        let n = self.spec.resolution;
        write!(out, "P6\n{n} {n}\n255\n")?;
        let mut pixels = Vec::with_capacity(3 * n * n);
        for &v in &self.values {
            let level = gray_level(v);
            pixels.extend_from_slice(&[level, level, level]);
        }
        out.write_all(&pixels)?;
        out.flush()
    }
}

fn gray_level(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Grid table and image bytes for a spec.
pub fn render_grid(spec: GridSpec) -> (Vec<u8>, Vec<u8>) {
    let grid = Grid::evaluate(spec);
    let mut table = Vec::new();
    let mut image = Vec::new();
    grid.write_table(&mut table).expect("writing to memory");
    grid.write_ppm(&mut image).expect("writing to memory");
    (table, image)
}

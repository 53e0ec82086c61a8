//! Line-oriented JSON front end.
//!
//! Every document names its algebra and lists nonzero coefficients by
//! blade name:
//!
//! ```json
//! {"algebra":"aps","coeffs":{"1":1.25,"e1":0.75}}
//! ```
//!
//! Requests arrive one per line on stdin; each produces one line on stdout.
//! Structural problems (bad JSON, unknown keys or blade names, non-finite
//! numbers, wrong algebra for a verb) are malformed input. Mathematical
//! failures (non-unimodular rotors, odd content, superluminal speed, grade
//! content that does not fit the requested kind) are domain errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::aps::{factor_boost_rotation, rotor_exp, ApsRotor, Biparavector, MvAps, Paravector};
use crate::bridge::Bridge;
use crate::sta::{MvSta, ObserverFrame, StaRotor};
use crate::transforms::{transform_field, transform_measurables, FieldBiparavector, TransformMode};
use crate::UNIMODULAR_TOL;

/// APS blade names in output order, with bitmask and sign relative to the mask blade.
const APS_BLADES: [(&str, usize, f64); 8] = [
    ("1", 0b000, 1.0),
    ("e1", 0b001, 1.0),
    ("e2", 0b010, 1.0),
    ("e3", 0b100, 1.0),
    ("e23", 0b110, 1.0),
    ("e31", 0b101, -1.0),
    ("e12", 0b011, 1.0),
    ("e123", 0b111, 1.0),
];

const STA_BLADES: [(&str, usize); 16] = [
    ("1", 0b0000),
    ("g0", 0b0001),
    ("g1", 0b0010),
    ("g2", 0b0100),
    ("g3", 0b1000),
    ("g01", 0b0011),
    ("g02", 0b0101),
    ("g03", 0b1001),
    ("g12", 0b0110),
    ("g13", 0b1010),
    ("g23", 0b1100),
    ("g012", 0b0111),
    ("g013", 0b1011),
    ("g023", 0b1101),
    ("g123", 0b1110),
    ("g0123", 0b1111),
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Domain(#[from] crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Malformed(_) => 2,
        }
    }
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

fn domain(msg: impl Into<String>) -> CliError {
    CliError::Domain(crate::Error::Domain(msg.into()))
}

/// A parsed document.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MvDocument {
    Aps(MvAps),
    Sta(MvSta),
}

impl MvDocument {
    pub fn algebra(&self) -> &'static str {
        match self {
            MvDocument::Aps(_) => "aps",
            MvDocument::Sta(_) => "sta",
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self, CliError> {
        let obj = value
            .as_object()
            .ok_or_else(|| malformed("document must be a JSON object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "algebra" | "coeffs" | "meta") {
                return Err(malformed(format!("unknown document key {key:?}")));
            }
        }
        let algebra = obj
            .get("algebra")
            .and_then(Value::as_str)
            .ok_or_else(|| malformed("document needs a string \"algebra\" field"))?;
        let coeffs = match obj.get("coeffs") {
            None => Map::new(),
            Some(Value::Object(m)) => m.clone(),
            Some(_) => return Err(malformed("\"coeffs\" must be an object")),
        };
        let number = |name: &str, v: &Value| -> Result<f64, CliError> {
            let x = v
                .as_f64()
                .ok_or_else(|| malformed(format!("coefficient {name:?} is not a number")))?;
            if !x.is_finite() {
                return Err(malformed(format!("coefficient {name:?} is not finite")));
            }
            Ok(x)
        };
        match algebra {
            "aps" => {
                let mut c = [0.0; 8];
                for (name, v) in &coeffs {
                    let &(_, mask, sign) = APS_BLADES
                        .iter()
                        .find(|(n, _, _)| n == name)
                        .ok_or_else(|| malformed(format!("unknown aps blade {name:?}")))?;
                    c[mask] = sign * number(name, v)?;
                }
                Ok(MvDocument::Aps(
                    MvAps::new(c).map_err(|e| malformed(e.to_string()))?,
                ))
            }
            "sta" => {
                let mut c = [0.0; 16];
                for (name, v) in &coeffs {
                    let &(_, mask) = STA_BLADES
                        .iter()
                        .find(|(n, _)| n == name)
                        .ok_or_else(|| malformed(format!("unknown sta blade {name:?}")))?;
                    c[mask] = number(name, v)?;
                }
                Ok(MvDocument::Sta(
                    MvSta::new(c).map_err(|e| malformed(e.to_string()))?,
                ))
            }
            other => Err(malformed(format!("unknown algebra {other:?}"))),
        }
    }

    /// Canonical JSON; zero coefficients are omitted.
    pub fn to_value(&self) -> Value {
        let mut coeffs = Map::new();
        match self {
            MvDocument::Aps(a) => {
                for (name, mask, sign) in APS_BLADES {
                    let x = sign * a.coeffs()[mask];
                    if x != 0.0 {
                        coeffs.insert(name.to_owned(), json!(x));
                    }
                }
            }
            MvDocument::Sta(k) => {
                for (name, mask) in STA_BLADES {
                    let x = k.coeffs()[mask];
                    if x != 0.0 {
                        coeffs.insert(name.to_owned(), json!(x));
                    }
                }
            }
        }
        json!({ "algebra": self.algebra(), "coeffs": coeffs })
    }

    pub fn to_value_with_meta(&self, meta: Value) -> Value {
        let mut v = self.to_value();
        v["meta"] = meta;
        v
    }

    fn expect_aps(&self, role: &str) -> Result<MvAps, CliError> {
        match self {
            MvDocument::Aps(a) => Ok(*a),
            MvDocument::Sta(_) => Err(malformed(format!("{role} must be an aps document"))),
        }
    }

    fn expect_sta(&self, role: &str) -> Result<MvSta, CliError> {
        match self {
            MvDocument::Sta(k) => Ok(*k),
            MvDocument::Aps(_) => Err(malformed(format!("{role} must be an sta document"))),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "relga",
    version,
    about = "Geometric algebra of space and spacetime"
)]
pub struct Cli {
    /// Tolerance for unimodularity and grade-content checks.
    #[arg(long, global = true, default_value_t = UNIMODULAR_TOL)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Geometric product: {"lhs": doc, "rhs": doc}
    Product,
    /// Conjugation of a document (or {"subject", "observer"} for sta dagger)
    Conj {
        #[arg(long, value_enum)]
        kind: ConjKind,
    },
    /// Hermitian or bar split of an aps document; space-time split of an sta vector
    Split {
        #[arg(long, value_enum)]
        kind: SplitKind,
    },
    /// Boost rotor from a velocity or a rapidity and direction (no stdin)
    Boost {
        /// Coordinate velocity vx,vy,vz in units of c
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["rapidity", "direction"])]
        velocity: Option<Vec<f64>>,
        #[arg(long, requires = "direction")]
        rapidity: Option<f64>,
        /// Boost direction x,y,z (normalized internally)
        #[arg(long, value_delimiter = ',', requires = "rapidity")]
        direction: Option<Vec<f64>>,
    },
    /// exp(W/2) of an aps biparavector or sta bivector
    RotorExp,
    /// Factor an aps rotor into boost and rotation
    Factor,
    /// Transform a subject by a rotor: {"subject": doc, "rotor": doc}
    Transform {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Map between aps and the even subalgebra of sta: {"subject": doc, "observer": sta rotor}
    Map {
        #[arg(long, value_enum)]
        direction: MapDirection,
    },
    /// Electric and magnetic parts of an aps biparavector
    FieldSplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjKind {
    Dagger,
    Bar,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitKind {
    Hermitian,
    Bar,
    Spacetime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Passive,
    Active,
    Both,
}

impl From<ModeArg> for TransformMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Passive => TransformMode::Passive,
            ModeArg::Active => TransformMode::Active,
            ModeArg::Both => TransformMode::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Paravector,
    Biparavector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapDirection {
    ApsToSta,
    StaToAps,
}

impl Command {
    /// Whether the verb consumes request lines from stdin.
    pub fn reads_input(&self) -> bool {
        !matches!(self, Command::Boost { .. })
    }
}

/// Parses a request line into an object, or wraps a bare document as `{"subject": doc}`.
fn request(line: &str) -> Result<Map<String, Value>, CliError> {
    let value: Value =
        serde_json::from_str(line).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| malformed("request must be a JSON object"))?;
    if obj.contains_key("algebra") {
        let mut m = Map::new();
        m.insert("subject".to_owned(), value);
        return Ok(m);
    }
    Ok(obj.clone())
}

fn field(req: &Map<String, Value>, name: &str, allowed: &[&str]) -> Result<MvDocument, CliError> {
    for key in req.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(malformed(format!("unknown request key {key:?}")));
        }
    }
    let v = req
        .get(name)
        .ok_or_else(|| malformed(format!("request needs a {name:?} document")))?;
    MvDocument::from_value(v)
}

fn observer(req: &Map<String, Value>, tol: f64) -> Result<(ObserverFrame, f64), CliError> {
    match req.get("observer") {
        None => Ok((ObserverFrame::fiducial(), 0.0)),
        Some(v) => {
            let mv = MvDocument::from_value(v)?.expect_sta("observer")?;
            let rotor = StaRotor::new(mv, tol)?;
            Ok((ObserverFrame::from_rotor(rotor), rotor.defect()))
        }
    }
}

fn vec3(v: Option<&Vec<f64>>) -> Result<[f64; 3], CliError> {
    let v = v.ok_or_else(|| malformed("missing 3-vector argument"))?;
    let arr: [f64; 3] = v
        .as_slice()
        .try_into()
        .map_err(|_| malformed("expected exactly three comma-separated numbers"))?;
    if arr.iter().any(|x| !x.is_finite()) {
        return Err(malformed("vector components must be finite"));
    }
    Ok(arr)
}

/// Runs a verb that takes no stdin.
pub fn execute_standalone(cmd: &Command) -> Result<Value, CliError> {
    match cmd {
        Command::Boost {
            velocity,
            rapidity,
            direction,
        } => {
            let (rotor, w, n) = if let Some(w) = rapidity {
                if !w.is_finite() {
                    return Err(malformed("rapidity must be finite"));
                }
                let d = vec3(direction.as_ref())?;
                let len = d.iter().map(|x| x * x).sum::<f64>().sqrt();
                if len == 0.0 {
                    return Err(domain("boost direction must be nonzero"));
                }
                let n = d.map(|x| x / len);
                (ApsRotor::boost(*w, n), *w, n)
            } else {
                let v = velocity
                    .as_ref()
                    .ok_or_else(|| malformed("boost needs --velocity or --rapidity/--direction"))?;
                let v = vec3(Some(v))?;
                let rotor = ApsRotor::boost_from_velocity(v)?;
                let speed = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                let n = if speed > 0.0 {
                    v.map(|x| x / speed)
                } else {
                    [0.0; 3]
                };
                (rotor, speed.atanh(), n)
            };
            let speed = w.tanh();
            Ok(MvDocument::Aps(*rotor.as_mv()).to_value_with_meta(json!({
                "gamma": w.cosh(),
                "velocity": n.map(|x| x * speed + 0.0),
                "rapidity": w,
                "defect": rotor.defect(),
            })))
        }
        _ => Err(malformed("this verb reads requests from stdin")),
    }
}

/// Runs one request line through a stdin-driven verb.
pub fn execute(cmd: &Command, tol: f64, line: &str) -> Result<Value, CliError> {
    let req = request(line)?;
    match *cmd {
        Command::Product => {
            let lhs = field(&req, "lhs", &["lhs", "rhs"])?;
            let rhs = field(&req, "rhs", &["lhs", "rhs"])?;
            match (lhs, rhs) {
                (MvDocument::Aps(a), MvDocument::Aps(b)) => Ok(MvDocument::Aps(a * b).to_value()),
                (MvDocument::Sta(a), MvDocument::Sta(b)) => Ok(MvDocument::Sta(a * b).to_value()),
                (l, r) => Err(domain(format!(
                    "algebra mismatch: {} vs {}",
                    l.algebra(),
                    r.algebra()
                ))),
            }
        }
        Command::Conj { kind } => {
            let subject = field(&req, "subject", &["subject", "observer"])?;
            match subject {
                MvDocument::Aps(a) => {
                    let out = match kind {
                        ConjKind::Dagger | ConjKind::Reverse => a.dagger(),
                        ConjKind::Bar => a.clifford_conjugate(),
                    };
                    Ok(MvDocument::Aps(out).to_value())
                }
                MvDocument::Sta(k) => match kind {
                    ConjKind::Reverse => Ok(MvDocument::Sta(k.reverse()).to_value()),
                    ConjKind::Bar => Ok(MvDocument::Sta(k.clifford_conjugate()).to_value()),
                    ConjKind::Dagger => {
                        let (obs, defect) = observer(&req, tol)?;
                        Ok(MvDocument::Sta(obs.hermitian_conjugate(&k))
                            .to_value_with_meta(json!({ "observer_defect": defect })))
                    }
                },
            }
        }
        Command::Split { kind } => match kind {
            SplitKind::Hermitian | SplitKind::Bar => {
                let a = field(&req, "subject", &["subject"])?.expect_aps("subject")?;
                let (first, second, names) = if kind == SplitKind::Hermitian {
                    let (r, i) = a.split_hermitian();
                    (r, i, ["real", "imag"])
                } else {
                    let (s, v) = a.split_bar();
                    (s, v, ["scalarlike", "vectorlike"])
                };
                let mut out = Map::new();
                out.insert(names[0].to_owned(), MvDocument::Aps(first).to_value());
                out.insert(names[1].to_owned(), MvDocument::Aps(second).to_value());
                Ok(Value::Object(out))
            }
            SplitKind::Spacetime => {
                let r = field(&req, "subject", &["subject", "observer"])?.expect_sta("subject")?;
                let (obs, defect) = observer(&req, tol)?;
                let (t, rel) = obs.spacetime_split(&r)?;
                Ok(json!({
                    "time": t,
                    "relative": MvDocument::Sta(rel).to_value(),
                    "meta": { "observer_defect": defect },
                }))
            }
        },
        Command::RotorExp => match field(&req, "subject", &["subject"])? {
            MvDocument::Aps(a) => {
                let w = Biparavector::from_mv(&a, tol)?;
                let l = rotor_exp(&w);
                Ok(MvDocument::Aps(*l.as_mv()).to_value_with_meta(json!({ "defect": l.defect() })))
            }
            MvDocument::Sta(k) => {
                let l = StaRotor::exp(&k)?;
                Ok(MvDocument::Sta(*l.as_mv()).to_value_with_meta(json!({ "defect": l.defect() })))
            }
        },
        Command::Factor => {
            let a = field(&req, "subject", &["subject"])?.expect_aps("subject")?;
            let l = ApsRotor::new(a, tol)?;
            let (b, r) = factor_boost_rotation(&l)?;
            Ok(json!({
                "boost": MvDocument::Aps(*b.as_mv()).to_value(),
                "rotation": MvDocument::Aps(*r.as_mv()).to_value(),
                "meta": { "defect": l.defect() },
            }))
        }
        Command::Transform { mode, kind } => {
            let allowed = ["subject", "rotor"];
            let subject = field(&req, "subject", &allowed)?.expect_aps("subject")?;
            let rotor = field(&req, "rotor", &allowed)?.expect_aps("rotor")?;
            let l = ApsRotor::new(rotor, tol)?;
            let mode = TransformMode::from(mode);
            let (out, kind_name) = match kind {
                KindArg::Paravector => {
                    let p = Paravector::from_mv(&subject, tol)?;
                    (transform_measurables(&p, &l, mode).to_mv(), "paravector")
                }
                KindArg::Biparavector => {
                    let f =
                        FieldBiparavector::from_biparavector(Biparavector::from_mv(&subject, tol)?);
                    (transform_field(&f, &l, mode).to_mv(), "biparavector")
                }
            };
            Ok(MvDocument::Aps(out).to_value_with_meta(json!({
                "mode": mode.as_str(),
                "kind": kind_name,
                "unimodular_defect": l.defect(),
            })))
        }
        Command::Map { direction } => {
            let allowed = ["subject", "observer"];
            let subject = field(&req, "subject", &allowed)?;
            let (obs, defect) = observer(&req, tol)?;
            let bridge = Bridge::new(&obs);
            let out = match direction {
                MapDirection::ApsToSta => {
                    MvDocument::Sta(bridge.to_sta(&subject.expect_aps("subject")?))
                }
                MapDirection::StaToAps => {
                    MvDocument::Aps(bridge.to_aps(&subject.expect_sta("subject")?)?)
                }
            };
            Ok(out.to_value_with_meta(json!({ "observer_defect": defect })))
        }
        Command::FieldSplit => {
            let a = field(&req, "subject", &["subject"])?.expect_aps("subject")?;
            let f = FieldBiparavector::from_biparavector(Biparavector::from_mv(&a, tol)?);
            let (e, b) = f.split();
            // Adding +0.0 turns -0.0 into 0.0 so output text is sign-stable.
            Ok(json!({ "E": e.map(|x| x + 0.0), "B": b.map(|x| x + 0.0) }))
        }
        Command::Boost { .. } => execute_standalone(cmd),
    }
}

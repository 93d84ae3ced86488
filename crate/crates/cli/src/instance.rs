//! Instance files: canonical JSON with coordinates as 17-significant-digit
//! decimal strings, so that load followed by save reproduces the file byte
//! for byte.

use diskcover::dudc::DudcInstance;
use diskcover::lsdudc::LsInstance;
use diskcover::reduced::SnapConfig;
use diskcover::sectors::RrcInstance;
use diskcover::{HLine, Point, Rect, UnitDisk};
use serde_json::{json, Map, Value};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Lsdudc,
    Dudc,
    Rrc,
    RrcReduced,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Lsdudc, Kind::Dudc, Kind::Rrc, Kind::RrcReduced];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Lsdudc => "lsdudc",
            Kind::Dudc => "dudc",
            Kind::Rrc => "rrc",
            Kind::RrcReduced => "rrc-reduced",
        }
    }

    pub fn is_region(self) -> bool {
        matches!(self, Kind::Rrc | Kind::RrcReduced)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown instance kind {s:?}"))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("ValidationError: {0}")]
    Validation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Meta {
    pub generator: Option<String>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub kind: Kind,
    pub points: Option<Vec<Point>>,
    pub disks: Vec<Point>,
    pub rect: Option<Rect>,
    pub line: Option<f64>,
    pub nu: Option<f64>,
    pub meta: Meta,
}

/// Decimal rendering with 17 significant digits; parses back to the same
/// `f64`.
pub fn fmt_coord(v: f64) -> String {
    format!("{v:.16e}")
}

fn coord(v: f64) -> Value {
    Value::String(fmt_coord(v))
}

fn pair(p: &Point) -> Value {
    json!([coord(p.x), coord(p.y)])
}

impl InstanceFile {
    pub fn new(kind: Kind, disks: Vec<Point>) -> Self {
        InstanceFile {
            kind,
            points: None,
            disks,
            rect: None,
            line: None,
            nu: None,
            meta: Meta::default(),
        }
    }

    pub fn unit_disks(&self) -> Vec<UnitDisk> {
        self.disks.iter().map(|c| UnitDisk::unit(c.x, c.y)).collect()
    }

    pub fn points(&self) -> &[Point] {
        self.points.as_deref().unwrap_or(&[])
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind.name()));
        m.insert("disks".into(), Value::Array(self.disks.iter().map(pair).collect()));
        if let Some(p) = &self.points {
            m.insert("points".into(), Value::Array(p.iter().map(pair).collect()));
        }
        if let Some(r) = &self.rect {
            m.insert(
                "rect".into(),
                json!([coord(r.xmin), coord(r.ymin), coord(r.xmax), coord(r.ymax)]),
            );
        }
        if let Some(y) = self.line {
            m.insert("line".into(), coord(y));
        }
        if let Some(nu) = self.nu {
            m.insert("nu".into(), coord(nu));
        }
        let mut meta = Map::new();
        if let Some(g) = &self.meta.generator {
            meta.insert("generator".into(), json!(g));
        }
        if let Some(s) = self.meta.seed {
            meta.insert("seed".into(), json!(s));
        }
        if !meta.is_empty() {
            m.insert("meta".into(), Value::Object(meta));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        to_canonical(&self.to_value())
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        let v: Value = serde_json::from_str(text).map_err(|e| FileError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let file = Self::from_value(&v)?;
        file.validate()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self, FileError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<(), FileError> {
        write_atomic(path, &self.to_json())?;
        Ok(())
    }

    fn from_value(v: &Value) -> Result<Self, FileError> {
        let bad = |m: String| FileError::Validation(m);
        let obj = v.as_object().ok_or_else(|| bad("top level must be an object".into()))?;
        for key in obj.keys() {
            if !["kind", "points", "disks", "rect", "line", "nu", "meta"].contains(&key.as_str()) {
                return Err(bad(format!("unknown field {key:?}")));
            }
        }
        let kind: Kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing string field \"kind\"".into()))?
            .parse()
            .map_err(bad)?;
        let pairs = |key: &str| -> Result<Option<Vec<Point>>, FileError> {
            let Some(list) = obj.get(key) else {
                return Ok(None);
            };
            let list = list
                .as_array()
                .ok_or_else(|| bad(format!("\"{key}\" must be an array of [x, y] pairs")))?;
            list.iter()
                .enumerate()
                .map(|(i, p)| match p.as_array().map(Vec::as_slice) {
                    Some([x, y]) => Ok(Point::new(number(x, key)?, number(y, key)?)),
                    _ => Err(bad(format!("{key}[{i}] must be an [x, y] pair"))),
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
        };
        let points = pairs("points")?;
        let disks = pairs("disks")?.ok_or_else(|| bad("missing field \"disks\"".into()))?;
        let rect = match obj.get("rect") {
            None => None,
            Some(r) => match r.as_array().map(Vec::as_slice) {
                Some([a, b, c, d]) => Some(
                    Rect::new(number(a, "rect")?, number(b, "rect")?, number(c, "rect")?, number(d, "rect")?)
                        .map_err(|e| bad(e.to_string()))?,
                ),
                _ => return Err(bad("\"rect\" must be [xmin, ymin, xmax, ymax]".into())),
            },
        };
        let line = obj.get("line").map(|v| number(v, "line")).transpose()?;
        let nu = obj.get("nu").map(|v| number(v, "nu")).transpose()?;
        let mut meta = Meta::default();
        if let Some(m) = obj.get("meta") {
            let m = m.as_object().ok_or_else(|| bad("\"meta\" must be an object".into()))?;
            meta.generator = m.get("generator").and_then(Value::as_str).map(str::to_owned);
            meta.seed = m.get("seed").and_then(Value::as_u64);
        }
        Ok(InstanceFile {
            kind,
            points,
            disks,
            rect,
            line,
            nu,
            meta,
        })
    }

    /// Field presence per kind, then the invariants of the solver input.
    pub fn validate(&self) -> Result<(), FileError> {
        let bad = |m: String| Err(FileError::Validation(m));
        let k = self.kind;
        let need = |present: bool, field: &str, wanted: bool| -> Result<(), FileError> {
            match (present, wanted) {
                (false, true) => bad(format!("{k} instance requires \"{field}\"")),
                (true, false) => bad(format!("{k} instance must not have \"{field}\"")),
                _ => Ok(()),
            }
        };
        need(self.points.is_some(), "points", !k.is_region())?;
        need(self.rect.is_some(), "rect", k.is_region())?;
        need(self.line.is_some(), "line", k == Kind::Lsdudc)?;
        need(self.nu.is_some(), "nu", k == Kind::RrcReduced)?;
        if let Some(nu) = self.nu {
            SnapConfig::new(nu, SnapConfig::DEFAULT_WINDOW).map_err(|e| FileError::Validation(e.to_string()))?;
        }
        let disks = self.unit_disks();
        let pts = self.points().to_vec();
        let check = match k {
            Kind::Lsdudc => LsInstance::new(pts, disks, HLine::new(self.line.unwrap_or(0.0))).map(|_| ()),
            Kind::Dudc => DudcInstance::new(pts, disks).map(|_| ()),
            Kind::Rrc | Kind::RrcReduced => {
                if self.disks.iter().all(Point::is_finite) {
                    Ok(())
                } else {
                    Err(diskcover::Error::InvalidInstance("disk centers must be finite".into()))
                }
            }
        };
        check.map_err(|e| FileError::Validation(format!("{}: {e}", e.name())))
    }

    /// Drops disks whose center repeats an earlier one. Returns the indices
    /// removed.
    pub fn dedup_disks(&mut self) -> Vec<usize> {
        let mut removed = Vec::new();
        let mut kept: Vec<Point> = Vec::with_capacity(self.disks.len());
        for (i, c) in self.disks.iter().enumerate() {
            if kept.iter().any(|k| k.x == c.x && k.y == c.y) {
                removed.push(i);
            } else {
                kept.push(*c);
            }
        }
        self.disks = kept;
        removed
    }

    pub fn rrc(&self) -> RrcInstance {
        RrcInstance::new(self.rect.expect("validated region instance"), self.unit_disks())
    }
}

fn number(v: &Value, field: &str) -> Result<f64, FileError> {
    let x = match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.trim().parse::<f64>().ok(),
        _ => None,
    };
    match x {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(FileError::Validation(format!("\"{field}\" holds a non-numeric or non-finite value {v}"))),
    }
}

/// Pretty JSON (sorted keys, two-space indent) with a trailing newline.
pub fn to_canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Writes through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)
}

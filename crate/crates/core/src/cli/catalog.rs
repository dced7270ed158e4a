//! Line-oriented catalog of symmetric spaces.
//!
//! ```text
//! # comment
//! name = CP2
//! root_type = BC
//! rank = 1
//! mult.short = 2
//! mult.double = 1
//! dim = 4
//! metric_scale = 1
//! source = free text
//! ```
//!
//! Blocks are separated by blank lines. `metric_scale` (default 1) and
//! `source` are optional, as are the multiplicity keys a type does not use.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Multiplicities, RootSystem, RootType};

const DEFAULT_CATALOG: &str = include_str!("../../data/catalog.txt");

const KEYS: [&str; 9] =
    ["name", "root_type", "rank", "mult.short", "mult.long", "mult.double", "dim", "metric_scale", "source"];

/// Per-orbit multiplicities as integers, the form geometric spaces have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceMultiplicities {
    pub short: u32,
    pub long: Option<u32>,
    pub double: Option<u32>,
}

impl From<SpaceMultiplicities> for Multiplicities {
    fn from(m: SpaceMultiplicities) -> Self {
        Multiplicities {
            short: Some(m.short as f64),
            long: m.long.map(f64::from),
            double: m.double.map(f64::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpaceDescriptor {
    pub name: String,
    pub root_type: RootType,
    pub rank: usize,
    pub multiplicities: SpaceMultiplicities,
    /// Factor applied to every `⟨α, α⟩`.
    pub metric_scale: f64,
    pub dim_m: u32,
    pub source: Option<String>,
}

impl SpaceDescriptor {
    /// The restricted root system, scaled by `metric_scale`.
    pub fn root_system(&self) -> Result<RootSystem> {
        let rs = build_root_system(self.root_type, self.rank, &self.multiplicities.into())?;
        if self.metric_scale == 1.0 {
            Ok(rs)
        } else {
            rs.rescaled(self.metric_scale)
        }
    }

    /// Builds the root system and checks the dimension and geometricity.
    pub fn validate(&self) -> Result<RootSystem> {
        let entry_err = |message: String| Error::InvalidEntry { name: self.name.clone(), message };
        if self.name.is_empty() {
            return Err(entry_err("empty name".into()));
        }
        if !(self.metric_scale > 0.0 && self.metric_scale.is_finite()) {
            return Err(entry_err(format!("metric_scale must be positive, got {}", self.metric_scale)));
        }
        let rs = self.root_system().map_err(|e| entry_err(e.to_string()))?;
        if !rs.is_geometric() {
            return Err(entry_err("not geometric: an odd multiplicity on a root whose double is a root".into()));
        }
        let dim = rs.dimension();
        if dim != self.dim_m as f64 {
            return Err(entry_err(format!("dim = {} but rank + Σ m_α = {dim}", self.dim_m)));
        }
        Ok(rs)
    }

    fn write_block(&self, out: &mut String) {
        let m = &self.multiplicities;
        let _ = writeln!(out, "name = {}", self.name);
        let _ = writeln!(out, "root_type = {}", self.root_type);
        let _ = writeln!(out, "rank = {}", self.rank);
        let _ = writeln!(out, "mult.short = {}", m.short);
        if let Some(l) = m.long {
            let _ = writeln!(out, "mult.long = {l}");
        }
        if let Some(d) = m.double {
            let _ = writeln!(out, "mult.double = {d}");
        }
        let _ = writeln!(out, "dim = {}", self.dim_m);
        if self.metric_scale != 1.0 {
            let _ = writeln!(out, "metric_scale = {}", self.metric_scale);
        }
        if let Some(s) = &self.source {
            let _ = writeln!(out, "source = {s}");
        }
    }
}

/// Validated spaces in file order, with unique names.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    entries: Vec<SpaceDescriptor>,
}

impl Catalog {
    pub fn new(entries: Vec<SpaceDescriptor>) -> Result<Self> {
        for (i, e) in entries.iter().enumerate() {
            e.validate()?;
            if entries[..i].iter().any(|p| p.name == e.name) {
                return Err(Error::InvalidEntry { name: e.name.clone(), message: "duplicate name".into() });
            }
        }
        Ok(Catalog { entries })
    }

    pub fn default_catalog() -> Self {
        parse_catalog(DEFAULT_CATALOG).expect("bundled catalog is valid")
    }

    pub fn entries(&self) -> &[SpaceDescriptor] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&SpaceDescriptor> {
        self.entries.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownSpace(name.to_string()))
    }

    /// Catalog text that parses back to an equal catalog.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            e.write_block(&mut out);
        }
        out
    }
}

/// Parses catalog text.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut entries = Vec::new();
    let mut block: Vec<(usize, &str, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            if !block.is_empty() {
                entries.push(parse_block(&block)?);
                block.clear();
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse { line: line_no, message: format!("expected `key = value`, got `{line}`") });
        };
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(Error::Parse { line: line_no, message: format!("unknown key `{key}`") });
        }
        if block.iter().any(|(_, k, _)| *k == key) {
            return Err(Error::Parse { line: line_no, message: format!("duplicate key `{key}`") });
        }
        block.push((line_no, key, value));
    }
    if !block.is_empty() {
        entries.push(parse_block(&block)?);
    }
    Catalog::new(entries)
}

/// Reads and parses a catalog file.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

fn parse_block(block: &[(usize, &str, &str)]) -> Result<SpaceDescriptor> {
    let first_line = block[0].0;
    let find = |key: &str| block.iter().find(|(_, k, _)| *k == key).map(|&(l, _, v)| (l, v));
    let required = |key: &str| {
        find(key).ok_or_else(|| Error::Parse { line: first_line, message: format!("block is missing `{key}`") })
    };
    fn number<T: std::str::FromStr>((line, v): (usize, &str), what: &str) -> Result<T> {
        v.parse().map_err(|_| Error::Parse { line, message: format!("{what} `{v}` is not a valid number") })
    }

    let (_, name) = required("name")?;
    let (type_line, type_str) = required("root_type")?;
    let root_type: RootType =
        type_str.parse().map_err(|e: Error| Error::Parse { line: type_line, message: e.to_string() })?;
    let rank: usize = number(required("rank")?, "rank")?;
    let short: u32 = number(required("mult.short")?, "mult.short")?;
    let long: Option<u32> = find("mult.long").map(|p| number(p, "mult.long")).transpose()?;
    let double: Option<u32> = find("mult.double").map(|p| number(p, "mult.double")).transpose()?;
    let dim_m: u32 = number(required("dim")?, "dim")?;
    let metric_scale: f64 = find("metric_scale").map(|p| number(p, "metric_scale")).transpose()?.unwrap_or(1.0);
    let source = find("source").map(|(_, v)| v.to_string());
    Ok(SpaceDescriptor {
        name: name.to_string(),
        root_type,
        rank,
        multiplicities: SpaceMultiplicities { short, long, double },
        metric_scale,
        dim_m,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "name = S3\nroot_type = A\nrank = 1\nmult.short = 2\ndim = 3\n";

    #[test]
    fn default_catalog_loads() {
        let cat = Catalog::default_catalog();
        assert!(cat.entries().len() >= 26);
        let s3 = cat.get("S3").unwrap();
        assert_eq!(s3.dim_m, 3);
        assert!(s3.root_system().unwrap().is_group_manifold());
        assert!(!cat.get("S2").unwrap().root_system().unwrap().is_group_manifold());
        assert_eq!(cat.get("E8"), Err(Error::UnknownSpace("E8".into())));
    }

    #[test]
    fn small_document() {
        let cat = parse_catalog(&format!("# head\n\n{S3}\n\n")).unwrap();
        assert_eq!(cat.entries().len(), 1);
        assert_eq!(cat.entries()[0].metric_scale, 1.0);
        assert_eq!(cat.entries()[0].source, None);
    }

    #[test]
    fn rejects_odd_multiplicity_with_doubled_root() {
        let text = "name = bad\nroot_type = BC\nrank = 1\nmult.short = 3\nmult.double = 1\ndim = 5\n";
        assert!(matches!(parse_catalog(text), Err(Error::InvalidEntry { name, .. }) if name == "bad"));
    }

    #[test]
    fn rejects_wrong_dimension() {
        let text = S3.replace("dim = 3", "dim = 4");
        assert!(matches!(parse_catalog(&text), Err(Error::InvalidEntry { .. })));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            (format!("{S3}oops\n"), 6),
            (format!("{S3}colour = red\n"), 6),
            (format!("{S3}rank = 1\n"), 6),
            (S3.replace("rank = 1", "rank = one"), 3),
            (S3.replace("root_type = A", "root_type = Q"), 2),
            ("\n\nname = x\nroot_type = A\n".to_string(), 3),
        ];
        for (text, want) in cases {
            match parse_catalog(&text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text}"),
                other => panic!("expected a parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = format!("{S3}\n{S3}");
        assert!(matches!(parse_catalog(&text), Err(Error::InvalidEntry { .. })));
    }

    #[test]
    fn round_trip() {
        let cat = Catalog::default_catalog();
        assert_eq!(parse_catalog(&cat.to_text()).unwrap(), cat);
        let scaled = parse_catalog(&format!("{S3}metric_scale = 0.3\nsource = a = b # c\n")).unwrap();
        assert_eq!(parse_catalog(&scaled.to_text()).unwrap(), scaled);
        assert_eq!(scaled.entries()[0].source.as_deref(), Some("a = b # c"));
    }

    #[test]
    fn metric_scale_rescales_the_roots() {
        let cat = parse_catalog(&format!("{S3}metric_scale = 2\n")).unwrap();
        let rs = cat.entries()[0].root_system().unwrap();
        assert!((rs.positive_roots()[0].vector.norm_sq() - 4.0).abs() < 1e-14);
    }
}

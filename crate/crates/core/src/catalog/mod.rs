//! Machine-readable tables of multiple structures, a scenario runner that
//! re-verifies them, and report rendering.

mod report;
mod scenarios;

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::HilbertPoly;
use crate::idealcalc::Ideal;
use crate::multistruct::{Embedding, MultiStructure};
use crate::polyring::{parse_poly, Field, Limits, PolyRing, Polynomial, TermOrder};

pub use report::{emit_report, exit_code, ReportFormat};
pub use scenarios::{
    run_scenario, scenario_ids, Check, ScenarioOptions, ScenarioResult, ScenarioStatus,
};

/// JSON schema of the catalog files.
pub const CATALOG_SCHEMA: &str = include_str!("../../catalog/catalog.schema.json");

/// JSON schema of `emit_report` output in JSON form.
pub const REPORT_SCHEMA: &str = include_str!("../../catalog/report.schema.json");

const BUILTIN: [(&str, &str); 3] = [
    ("thm-3.6", include_str!("../../catalog/thm-3.6.json")),
    ("thm-3.8", include_str!("../../catalog/thm-3.8.json")),
    ("thm-3.14", include_str!("../../catalog/thm-3.14.json")),
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    variables: Vec<String>,
    support: Vec<String>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub multiplicity: usize,
    pub locally_cm: bool,
    pub type_i: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    id: String,
    source: String,
    generators: Vec<String>,
    #[serde(default)]
    raw: Option<String>,
    #[serde(default)]
    printed_generators: Option<Vec<String>>,
    #[serde(default)]
    instantiation: BTreeMap<String, String>,
    #[serde(default)]
    characteristics: Option<Vec<u32>>,
    #[serde(default)]
    dimension: Option<u32>,
    #[serde(default)]
    flags: Vec<String>,
    expected: Expected,
}

/// One validated table row.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub catalog: String,
    pub id: String,
    pub source: String,
    pub variables: Vec<String>,
    pub support: Vec<String>,
    pub generators: Vec<String>,
    pub raw: Option<String>,
    /// The generators as printed when they differ from the saturated ideal.
    pub printed_generators: Option<Vec<String>>,
    pub instantiation: BTreeMap<String, String>,
    /// Characteristics in which the row is verified, one variant each.
    pub characteristics: Vec<u32>,
    /// `Some(d)` when the row only exists for a support of dimension `d`.
    pub dimension: Option<u32>,
    pub flags: Vec<String>,
    pub expected: Expected,
    #[serde(skip)]
    pub expected_hilbert: Option<HilbertPoly>,
}

impl CatalogEntry {
    /// Value of a `key:value` flag.
    pub fn flag_value(&self, key: &str) -> Option<&str> {
        self.flags
            .iter()
            .find_map(|f| f.strip_prefix(key).and_then(|r| r.strip_prefix(':')))
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }

    pub fn ring(&self, ch: u32, limits: Limits) -> Result<Arc<PolyRing>> {
        let field = Field::from_characteristic(ch as u64)?;
        PolyRing::from_names(self.variables.clone(), field, TermOrder::Grevlex, limits)
    }

    fn embedding(&self, ring: &Arc<PolyRing>) -> Result<Arc<Embedding>> {
        let names: Vec<&str> = self.support.iter().map(|s| s.as_str()).collect();
        Ok(Arc::new(Embedding::by_names(ring, &names)?))
    }

    pub fn ideal(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        ideal_of(&self.generators, ring)
    }

    pub fn printed_ideal(&self, ring: &Arc<PolyRing>) -> Result<Option<Ideal>> {
        self.printed_generators
            .as_ref()
            .map(|g| ideal_of(g, ring))
            .transpose()
    }

    /// The structure in characteristic `ch`.
    pub fn structure(&self, ch: u32, limits: Limits) -> Result<MultiStructure> {
        let ring = self.ring(ch, limits)?;
        let emb = self.embedding(&ring)?;
        MultiStructure::new(&emb, self.ideal(&ring)?)
    }

    /// The same generators with one more coordinate on the support.
    pub fn extended_structure(&self, ch: u32, limits: Limits) -> Result<MultiStructure> {
        let mut names = self.variables.clone();
        let mut k = 0;
        while names.contains(&format!("z{}", k)) {
            k += 1;
        }
        names.insert(0, format!("z{}", k));
        let field = Field::from_characteristic(ch as u64)?;
        let ring = PolyRing::from_names(names, field, TermOrder::Grevlex, limits)?;
        let emb = self.embedding(&ring)?;
        MultiStructure::new(&emb, self.ideal(&ring)?)
    }

    /// Instantiated forms named `prefix_1, prefix_2, ...` parsed in `ring`.
    pub fn instantiated_forms(
        &self,
        prefix: &str,
        ring: &Arc<PolyRing>,
    ) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for i in 1.. {
            match self.instantiation.get(&format!("{}_{}", prefix, i)) {
                Some(t) => out.push(parse_poly(t, ring)?),
                None => break,
            }
        }
        Ok(out)
    }
}

fn ideal_of(gens: &[String], ring: &Arc<PolyRing>) -> Result<Ideal> {
    let gens = gens
        .iter()
        .map(|g| parse_poly(g, ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Ids of the builtin catalogs.
pub fn list_catalogs() -> Vec<&'static str> {
    BUILTIN.iter().map(|(id, _)| *id).collect()
}

/// Loads a builtin catalog by id, or a catalog file by path.
pub fn load_catalog(source: &str) -> Result<Vec<CatalogEntry>> {
    if let Some((_, text)) = BUILTIN.iter().find(|(id, _)| *id == source) {
        return parse_catalog(text);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Schema {
        entry: source.to_string(),
        message: format!("cannot read catalog: {}", e),
    })?;
    parse_catalog(&text)
}

fn schema_err(entry: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        entry: entry.into(),
        message: message.into(),
    }
}

/// Parses and validates catalog JSON.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| schema_err("<document>", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema_err("<document>", "expected an object"))?;
    for key in obj.keys() {
        if !["catalog", "title", "ring", "entries"].contains(&key.as_str()) {
            return Err(schema_err("<document>", format!("unknown field `{}`", key)));
        }
    }
    let name = obj
        .get("catalog")
        .and_then(|v| v.as_str())
        .ok_or_else(|| schema_err("<document>", "missing string field `catalog`"))?
        .to_string();
    if !obj.get("title").map_or(false, |v| v.is_string()) {
        return Err(schema_err("<document>", "missing string field `title`"));
    }
    let ring: RawRing = serde_json::from_value(
        obj.get("ring")
            .cloned()
            .ok_or_else(|| schema_err("<document>", "missing field `ring`"))?,
    )
    .map_err(|e| schema_err("ring", e.to_string()))?;
    let raw_entries = obj
        .get("entries")
        .and_then(|v| v.as_array())
        .ok_or_else(|| schema_err("<document>", "missing array field `entries`"))?;

    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for (i, v) in raw_entries.iter().enumerate() {
        let label = match v.get("id").and_then(|x| x.as_str()) {
            Some(id) => format!("#{} ({})", i, id),
            None => format!("#{}", i),
        };
        let raw: RawEntry = serde_json::from_value(v.clone())
            .map_err(|e| schema_err(label.clone(), e.to_string()))?;
        if !seen.insert(raw.id.clone()) {
            return Err(schema_err(label, "duplicate id"));
        }
        let entry = validate(&name, &ring, raw).map_err(|e| match e {
            Error::Schema { message, .. } => schema_err(label.clone(), message),
            other => schema_err(label.clone(), other.to_string()),
        })?;
        entries.push(entry);
    }
    for e in &entries {
        for key in ["duplicate-of", "char2-pair"] {
            if let Some(target) = e.flag_value(key) {
                if !seen.contains(target) {
                    return Err(schema_err(
                        e.id.clone(),
                        format!("flag `{}` names unknown entry `{}`", key, target),
                    ));
                }
            }
        }
    }
    Ok(entries)
}

/// `G`, `F_1`, `s`: keys naming an instantiated form rather than a note.
fn is_form_name(k: &str) -> bool {
    let mut parts = k.splitn(2, '_');
    let head = parts.next().unwrap_or("");
    head.len() == 1
        && head.chars().all(|c| c.is_ascii_alphabetic())
        && parts.next().map_or(true, |i| {
            !i.is_empty() && i.chars().all(|c| c.is_ascii_digit())
        })
}

fn validate(name: &str, ring: &RawRing, raw: RawEntry) -> Result<CatalogEntry> {
    if raw.generators.is_empty() {
        return Err(schema_err("", "no generators"));
    }
    if raw.expected.multiplicity == 0 {
        return Err(schema_err("", "multiplicity must be positive"));
    }
    let characteristics = raw.characteristics.unwrap_or_else(|| vec![0]);
    if characteristics.is_empty() {
        return Err(schema_err("", "empty characteristic list"));
    }
    let expected_hilbert = match &raw.expected.hilbert {
        Some(h) => {
            let hp = HilbertPoly::parse(h)?;
            if hp.leading_coefficient() != raw.expected.multiplicity as i64 {
                return Err(schema_err(
                    "",
                    format!(
                        "Hilbert polynomial {} has leading coefficient {} but multiplicity is {}",
                        h,
                        hp.leading_coefficient(),
                        raw.expected.multiplicity
                    ),
                ));
            }
            Some(hp)
        }
        None => None,
    };
    let entry = CatalogEntry {
        catalog: name.to_string(),
        id: raw.id,
        source: raw.source,
        variables: ring.variables.clone(),
        support: ring.support.clone(),
        generators: raw.generators,
        raw: raw.raw,
        printed_generators: raw.printed_generators,
        instantiation: raw.instantiation,
        characteristics,
        dimension: raw.dimension,
        flags: raw.flags,
        expected: raw.expected,
        expected_hilbert,
    };
    let dim = entry.variables.len() - entry.support.len() - 1;
    if let (Some(hp), Some(d)) = (&entry.expected_hilbert, entry.dimension) {
        if hp.degree() != Some(d) || d as usize != dim {
            return Err(schema_err(
                "",
                "Hilbert polynomial degree disagrees with the dimension",
            ));
        }
    }
    for &ch in &entry.characteristics {
        let ring = entry.ring(ch, Limits::default())?;
        entry.embedding(&ring)?;
        let ideal = entry.ideal(&ring)?;
        entry.printed_ideal(&ring)?;
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous(entry.generators.join(", ")));
        }
        for (k, v) in &entry.instantiation {
            if is_form_name(k) {
                parse_poly(v, &ring)?;
            }
        }
    }
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sizes() {
        let t = load_catalog("thm-3.6").unwrap();
        let m: Vec<usize> = t.iter().map(|e| e.expected.multiplicity).collect();
        assert_eq!(m, vec![1, 2, 3, 3, 3]);
        let t = load_catalog("thm-3.8").unwrap();
        assert_eq!(t.len(), 8);
        assert!(t.iter().all(|e| e.expected.multiplicity == 4));
        assert_eq!(
            t.iter()
                .filter(|e| e.flag_value("char2-pair").is_some())
                .count(),
            4
        );
        let t = load_catalog("thm-3.14").unwrap();
        assert_eq!(t.len(), 18);
        assert_eq!(
            t.iter()
                .filter(|e| e.flag_value("duplicate-of").is_some())
                .count(),
            2
        );
    }

    #[test]
    fn schema_errors_name_the_entry() {
        let text = r#"{"catalog":"t","title":"t","ring":{"variables":["z0","x","y"],"support":["x","y"]},
            "entries":[{"id":"a","source":"s","generators":["x"],"expected":{"multiplicity":1,"locally_cm":true,"type_i":true}},
                       {"id":"b","source":"s","generators":["x"],"expected":{"multiplicity":1,"locally_cm":true}}]}"#;
        match parse_catalog(text) {
            Err(Error::Schema { entry, .. }) => assert!(entry.starts_with("#1"), "{}", entry),
            other => panic!("{:?}", other),
        }
        let bad = text.replace("\"generators\":[\"x\"]", "\"generators\":[\"x+\"]");
        match parse_catalog(&bad) {
            Err(Error::Schema { entry, .. }) => assert!(entry.starts_with("#0")),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn generators_checked_in_every_characteristic() {
        let text = r#"{"catalog":"t","title":"t","ring":{"variables":["z0","x","y"],"support":["x","y"]},
            "entries":[{"id":"a","source":"s","generators":["x^2 + 1/2*z0*y","y^2"],"characteristics":[0,2],
                        "expected":{"multiplicity":4,"locally_cm":true,"type_i":true}}]}"#;
        assert!(matches!(parse_catalog(text), Err(Error::Schema { .. })));
    }
}

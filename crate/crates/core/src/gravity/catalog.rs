//! Built-in scenarios and the plain-text scenario file format.
//!
//! ```text
//! # comment
//! name  = lab-tower
//! r_u   = 6378637      # metres from the body center
//! v_u   = 465.13       # metres per second
//! r_l   = 6378137
//! v_l   = 465.10
//! r_ref = 6378137      # optional, defaults to the lower arm
//! v_ref = 465.10
//! ```
//!
//! Each `name` line starts a new entry. Keys are case-insensitive, speeds
//! default to zero and entries shadow built-in presets of the same name.

use std::path::Path;

use super::{BodyParams, Scenario, StationaryObserver};
use crate::{Error, Result};

/// Names of the built-in presets, in listing order.
pub const PRESET_NAMES: [&str; 4] = ["drop-tower", "burj-khalifa", "sat-to-sat", "geo-vs-ground"];

const DROP_TOWER_HEIGHT: f64 = 146.0;
const BURJ_KHALIFA_HEIGHT: f64 = 828.0;
const SAT_TO_SAT_ALTITUDE: f64 = 1.0e7;
const MEAN_EARTH_RADIUS: f64 = 6.371e6;

/// Ordered collection of scenarios, unique by name.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioCatalog {
    entries: Vec<Scenario>,
}

impl ScenarioCatalog {
    /// The four presets for the given body.
    pub fn builtin(body: &BodyParams) -> Self {
        let geo = StationaryObserver::geostationary(body);
        let ground = StationaryObserver::co_rotating(body, 0.0, 0.0);
        let leo = StationaryObserver::circular_orbit(body, MEAN_EARTH_RADIUS + SAT_TO_SAT_ALTITUDE);
        ScenarioCatalog {
            entries: vec![
                Scenario::tower(PRESET_NAMES[0], body, DROP_TOWER_HEIGHT),
                Scenario::tower(PRESET_NAMES[1], body, BURJ_KHALIFA_HEIGHT),
                Scenario::new(PRESET_NAMES[2], geo, leo),
                Scenario::new(PRESET_NAMES[3], geo, ground),
            ],
        }
    }

    pub fn empty() -> Self {
        ScenarioCatalog { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scenario> {
        self.entries.iter()
    }

    pub fn get(&self, name: &str) -> Option<&Scenario> {
        self.entries.iter().find(|s| s.name == name)
    }

    /// Inserts or replaces by name. Replacements keep their position.
    pub fn insert(&mut self, scenario: Scenario) {
        match self.entries.iter_mut().find(|s| s.name == scenario.name) {
            Some(slot) => *slot = scenario,
            None => self.entries.push(scenario),
        }
    }

    /// Overlays every entry of `other` onto this catalog.
    pub fn merge(&mut self, other: ScenarioCatalog) {
        for s in other.entries {
            self.insert(s);
        }
    }

    /// Built-in presets overlaid with the entries of a scenario file.
    pub fn with_file(body: &BodyParams, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        let mut catalog = ScenarioCatalog::builtin(body);
        catalog.merge(parse_catalog(&text)?);
        Ok(catalog)
    }
}

#[derive(Default)]
struct Draft {
    name: String,
    line: usize,
    r_u: Option<f64>,
    v_u: Option<f64>,
    r_l: Option<f64>,
    v_l: Option<f64>,
    r_ref: Option<f64>,
    v_ref: Option<f64>,
}

impl Draft {
    fn finish(self) -> Result<Scenario> {
        let missing = |key: &str| Error::Config(format!("entry '{}' (line {}) lacks {key}", self.name, self.line));
        let upper = StationaryObserver::new(self.r_u.ok_or_else(|| missing("r_u"))?, self.v_u.unwrap_or(0.0))?;
        let lower = StationaryObserver::new(self.r_l.ok_or_else(|| missing("r_l"))?, self.v_l.unwrap_or(0.0))?;
        let reference = match (self.r_ref, self.v_ref) {
            (None, None) => lower,
            (Some(r), v) => StationaryObserver::new(r, v.unwrap_or(0.0))?,
            (None, Some(_)) => return Err(missing("r_ref")),
        };
        Ok(Scenario::new(self.name, upper, lower).with_reference(reference))
    }
}

/// Parses scenario file text into a catalog (without presets).
pub fn parse_catalog(text: &str) -> Result<ScenarioCatalog> {
    let mut catalog = ScenarioCatalog::empty();
    let mut draft: Option<Draft> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .map(|(k, v)| (k.trim().to_ascii_lowercase(), v.trim()))
            .ok_or_else(|| Error::Config(format!("line {line_no}: expected 'key = value'")))?;
        if key == "name" {
            if value.is_empty() {
                return Err(Error::Config(format!("line {line_no}: empty scenario name")));
            }
            if let Some(d) = draft.take() {
                catalog.insert(d.finish()?);
            }
            draft = Some(Draft { name: value.to_string(), line: line_no, ..Draft::default() });
            continue;
        }
        let d = draft
            .as_mut()
            .ok_or_else(|| Error::Config(format!("line {line_no}: '{key}' before any 'name'")))?;
        let number: f64 = value
            .parse()
            .map_err(|_| Error::Config(format!("line {line_no}: '{value}' is not a number")))?;
        let slot = match key.as_str() {
            "r_u" => &mut d.r_u,
            "v_u" => &mut d.v_u,
            "r_l" => &mut d.r_l,
            "v_l" => &mut d.v_l,
            "r_ref" => &mut d.r_ref,
            "v_ref" => &mut d.v_ref,
            other => return Err(Error::Config(format!("line {line_no}: unknown key '{other}'"))),
        };
        *slot = Some(number);
    }
    if let Some(d) = draft {
        catalog.insert(d.finish()?);
    }
    Ok(catalog)
}

//! The JSON knot table.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::parse_poly;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::{alexander_burau, conway_normalize};

const BUNDLED: &str = include_str!("../../data/knots.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub strands: usize,
    pub braid: Vec<i32>,
    pub components: usize,
    pub crossings: u32,
    pub source: String,
    /// Published Alexander polynomial in `t1`, any normalization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<String>,
    /// KnotInfo symmetry type.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<String>,
}

impl KnotEntry {
    pub fn braid_word(&self) -> Result<BraidWord> {
        let b = BraidWord::new(self.strands, self.braid.clone())?;
        let c = b.components();
        if c != self.components {
            return Err(Error::Invalid(format!("{}: closure has {c} components, table says {}", self.name, self.components)));
        }
        Ok(b)
    }

    /// Parses the braid and compares the Burau Alexander polynomial with the published one.
    pub fn validate(&self) -> Result<BraidWord> {
        let b = self.braid_word()?;
        if let (Some(text), 1) = (&self.alexander, self.components) {
            let published = conway_normalize(&parse_poly(text)?)?;
            let computed = alexander_burau(&b)?;
            if published != computed {
                return Err(Error::Invalid(format!("{}: braid gives Alexander {computed}, table says {published}", self.name)));
            }
        }
        Ok(b)
    }

    pub fn is_invertible(&self) -> bool {
        self.symmetry.as_deref().is_some_and(|s| s == "reversible" || s == "fully amphicheiral")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotTable {
    pub knots: Vec<KnotEntry>,
}

impl KnotTable {
    /// Parses and validates every entry.
    pub fn from_json(text: &str) -> Result<Self> {
        let table: KnotTable = serde_json::from_str(text)?;
        for k in &table.knots {
            k.validate()?;
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn bundled() -> Self {
        Self::from_json(BUNDLED).expect("bundled knot table is valid")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn get(&self, name: &str) -> Option<&KnotEntry> {
        self.knots.iter().find(|k| k.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_validates() {
        let t = KnotTable::bundled();
        assert_eq!(t.knots.len(), 25);
        for name in ["0_1", "3_1", "7_7", "8_17", "9_46", "10_155", "11n34", "11n42", "Wh0_3_1"] {
            assert!(t.get(name).is_some(), "{name}");
        }
        assert_eq!(t.knots.iter().filter(|k| k.crossings <= 7 && !k.name.starts_with("Wh")).count(), 15);
    }

    #[test]
    fn round_trip() {
        let t = KnotTable::bundled();
        assert_eq!(KnotTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn rejects_bad_entries() {
        let bad_alex = r#"{"knots":[{"name":"3_1","strands":2,"braid":[1,1,1],"components":1,"crossings":3,"source":"x","alexander":"1-3*t1+t1^2"}]}"#;
        assert!(KnotTable::from_json(bad_alex).is_err());
        let bad_components = r#"{"knots":[{"name":"hopf","strands":2,"braid":[1,1],"components":1,"crossings":2,"source":"x"}]}"#;
        assert!(KnotTable::from_json(bad_components).is_err());
        let bad_letter = r#"{"knots":[{"name":"k","strands":2,"braid":[2],"components":1,"crossings":1,"source":"x"}]}"#;
        assert!(KnotTable::from_json(bad_letter).is_err());
        assert_eq!(KnotTable::from_json(r#"{"knots":[]}"#).unwrap().knots.len(), 0);
    }
}

//! Guards and corpus sizes, overridable from a TOML file.

use std::path::Path;

use legch_core::dga::{DEFAULT_MAX_ENUMERATION, DEFAULT_MAX_ORACLE_WORD};
use legch_core::monodromy::DEFAULT_MAX_SYMBOLIC_CROSSINGS;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    pub guards: Guards,
    pub corpus: CorpusSizes,
    pub certify: CertifyRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Guards {
    /// Largest torus word handled with symbolic tables.
    pub max_symbolic_crossings: usize,
    /// Largest torus word whose monodromy images are expanded in full.
    pub max_expanded_crossings: usize,
    /// Largest `n` for which `D_n` is enumerated.
    pub max_enumeration: u32,
    /// Longest word walked by the explicit path oracle.
    pub max_oracle_word: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSizes {
    /// Random words added to the torus words with `p, q <= 4`.
    pub cm_random: usize,
    pub augmentation_random: usize,
    pub augmentation_max_strands: u32,
    pub augmentation_max_len: usize,
    pub permutation_max_strands: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CertifyRange {
    /// Order certification for coprime `2 <= p, q <= torus_range`.
    pub torus_range: u32,
    /// Chain-level monodromy checks for coprime `2 <= p, q <= chain_range`.
    pub chain_range: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 20,
            guards: Guards::default(),
            corpus: CorpusSizes::default(),
            certify: CertifyRange::default(),
        }
    }
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_symbolic_crossings: DEFAULT_MAX_SYMBOLIC_CROSSINGS,
            max_expanded_crossings: 15,
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            max_oracle_word: DEFAULT_MAX_ORACLE_WORD,
        }
    }
}

impl Default for CorpusSizes {
    fn default() -> Self {
        CorpusSizes {
            cm_random: 50,
            augmentation_random: 80,
            augmentation_max_strands: 7,
            augmentation_max_len: 20,
            permutation_max_strands: 6,
        }
    }
}

impl Default for CertifyRange {
    fn default() -> Self {
        CertifyRange {
            torus_range: 9,
            chain_range: 5,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Config::from_toml(&text)
    }
}

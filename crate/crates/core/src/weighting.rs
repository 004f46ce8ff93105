//! Term-weighting schemes: tf variants, inverse document frequency, and
//! their tf-idf composite.
//!
//! Three tf variants are supported:
//! - `raw`: the plain occurrence count
//! - `maxnorm`: `0.5 + 0.5 * tf / tf_max`, rescaling against the most
//!   frequent term of the same document
//! - `log`: `ln(tf) + 1`, dampening high-frequency terms independently of
//!   `tf_max`
//!
//! idf is `ln(N/n)`: zero when a term occurs in every document, `ln N` when
//! it occurs in exactly one.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightingError {
    /// idf is undefined when the corpus holds no documents.
    #[error("idf is undefined on an empty corpus")]
    EmptyCorpus,
}

/// Occurrence counts for one term within one document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermStats {
    /// Occurrences of the term in the document.
    pub tf: u32,
    /// Largest tf of any term in the same document. Must be >= 1 whenever
    /// the max-normalized variant is evaluated.
    pub tf_max: u32,
}

impl TermStats {
    pub fn new(tf: u32, tf_max: u32) -> Self {
        Self { tf, tf_max }
    }
}

/// How raw term frequency is turned into a weight component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TfVariant {
    #[default]
    Raw,
    MaxNormalized,
    Logarithmic,
}

impl FromStr for TfVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw" => Ok(TfVariant::Raw),
            "maxnorm" => Ok(TfVariant::MaxNormalized),
            "log" => Ok(TfVariant::Logarithmic),
            other => Err(format!(
                "unknown tf variant `{other}` (expected raw, maxnorm, or log)"
            )),
        }
    }
}

impl fmt::Display for TfVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TfVariant::Raw => "raw",
            TfVariant::MaxNormalized => "maxnorm",
            TfVariant::Logarithmic => "log",
        };
        f.write_str(name)
    }
}

/// A complete weighting configuration: one tf variant, idf on or off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightingScheme {
    pub tf_variant: TfVariant,
    pub idf_enabled: bool,
}

impl Default for WeightingScheme {
    fn default() -> Self {
        Self {
            tf_variant: TfVariant::Raw,
            idf_enabled: true,
        }
    }
}

impl WeightingScheme {
    pub fn new(tf_variant: TfVariant, idf_enabled: bool) -> Self {
        Self {
            tf_variant,
            idf_enabled,
        }
    }
}

impl fmt::Display for WeightingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tf={} idf={}",
            self.tf_variant,
            if self.idf_enabled { "on" } else { "off" }
        )
    }
}

/// Inverse document frequency: `ln(N/n)`.
///
/// `doc_freq == 0` (a term never seen in the corpus) yields 0 so that
/// query-only terms keep their dimension without contributing to any score.
pub fn idf(n_docs: u32, doc_freq: u32) -> Result<f64, WeightingError> {
    if n_docs == 0 {
        return Err(WeightingError::EmptyCorpus);
    }
    if doc_freq == 0 {
        return Ok(0.0);
    }
    Ok((f64::from(n_docs) / f64::from(doc_freq)).ln())
}

/// The tf component of a weight under the chosen variant.
///
/// Note that `maxnorm` gives an absent term (tf = 0) the formula value 0.5;
/// the zero-weight rule for absent terms is applied by [`tfidf`] and by the
/// matrix layer, which take precedence.
pub fn tf_weight(stats: TermStats, variant: TfVariant) -> f64 {
    match variant {
        TfVariant::Raw => f64::from(stats.tf),
        TfVariant::MaxNormalized => {
            debug_assert!(stats.tf_max >= 1, "maxnorm requires tf_max >= 1");
            0.5 + 0.5 * f64::from(stats.tf) / f64::from(stats.tf_max)
        }
        TfVariant::Logarithmic => {
            if stats.tf == 0 {
                0.0
            } else {
                f64::from(stats.tf).ln() + 1.0
            }
        }
    }
}

/// Composite weight: tf component times idf (when enabled).
///
/// A term absent from the document (tf = 0) weighs exactly 0 under every
/// variant.
pub fn tfidf(
    stats: TermStats,
    n_docs: u32,
    doc_freq: u32,
    scheme: WeightingScheme,
) -> Result<f64, WeightingError> {
    let idf_factor = if scheme.idf_enabled {
        idf(n_docs, doc_freq)?
    } else {
        1.0
    };
    if stats.tf == 0 {
        return Ok(0.0);
    }
    Ok(tf_weight(stats, scheme.tf_variant) * idf_factor)
}

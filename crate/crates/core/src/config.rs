use crate::coloring::RecolorRange;
use crate::graph::OrderingKind;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Duration;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Russian Dolls search.
    Rdmc,
    /// Partial-coloring branch and bound.
    Pbbmc,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Rdmc => "rdmc",
            Algorithm::Pbbmc => "pbbmc",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rdmc" => Ok(Algorithm::Rdmc),
            "pbbmc" => Ok(Algorithm::Pbbmc),
            _ => Err(format!("unknown algorithm `{s}` (expected rdmc or pbbmc)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringKind {
    Greedy,
    Recolor,
}

impl ColoringKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ColoringKind::Greedy => "greedy",
            ColoringKind::Recolor => "recolor",
        }
    }
}

impl fmt::Display for ColoringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ColoringKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "greedy" => Ok(ColoringKind::Greedy),
            "recolor" => Ok(ColoringKind::Recolor),
            _ => Err(format!("unknown coloring `{s}` (expected greedy or recolor)")),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("{name} must lie in [0, 1], got {value}")]
    FractionOutOfRange { name: &'static str, value: f64 },
    #[error("time limit must be positive")]
    ZeroTimeLimit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub coloring: ColoringKind,
    pub ordering: OrderingKind,
    /// RDMC only: abandon a doll once a greedy extension beats the incumbent.
    pub interruption: bool,
    /// Extensions are attempted once the partial clique reaches this
    /// fraction of the incumbent size.
    pub interruption_threshold: f64,
    /// Recoloring is used only in subproblems whose depth is below this
    /// fraction of the incumbent size.
    pub recolor_depth_fraction: f64,
    pub recolor_range: RecolorRange,
    #[serde(with = "seconds")]
    pub time_limit: Duration,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            coloring: ColoringKind::Greedy,
            ordering: OrderingKind::DegreeDesc,
            interruption: true,
            interruption_threshold: 0.5,
            recolor_depth_fraction: 0.25,
            recolor_range: RecolorRange::Exclusive,
            time_limit: Duration::from_secs(18_000),
        }
    }
}

impl SolverConfig {
    pub fn new(coloring: ColoringKind, ordering: OrderingKind) -> Self {
        SolverConfig {
            coloring,
            ordering,
            ..SolverConfig::default()
        }
    }

    pub fn with_interruption(mut self, on: bool) -> Self {
        self.interruption = on;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, value) in [
            ("interruption_threshold", self.interruption_threshold),
            ("recolor_depth_fraction", self.recolor_depth_fraction),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(ConfigError::FractionOutOfRange { name, value });
            }
        }
        if self.time_limit.is_zero() {
            return Err(ConfigError::ZeroTimeLimit);
        }
        Ok(())
    }

    /// Recoloring range to use at `depth` given incumbent `max`, if any.
    pub(crate) fn recolor_at(&self, depth: usize, max: usize) -> Option<RecolorRange> {
        (self.coloring == ColoringKind::Recolor
            && (depth as f64) < self.recolor_depth_fraction * max as f64)
            .then_some(self.recolor_range)
    }
}

mod seconds {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let c = SolverConfig::default();
        assert!(c.validate().is_ok());
        assert_eq!(c.time_limit, Duration::from_secs(18_000));
        assert_eq!(c.interruption_threshold, 0.5);
        assert_eq!(c.recolor_depth_fraction, 0.25);
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = SolverConfig::default();
        c.interruption_threshold = 1.5;
        assert!(matches!(c.validate(), Err(ConfigError::FractionOutOfRange { .. })));
        let c = SolverConfig::default().with_time_limit(Duration::ZERO);
        assert_eq!(c.validate(), Err(ConfigError::ZeroTimeLimit));
    }

    #[test]
    fn recolor_depth_gate() {
        let c = SolverConfig::new(ColoringKind::Recolor, OrderingKind::Identity);
        assert_eq!(c.recolor_at(0, 0), None);
        assert!(c.recolor_at(0, 1).is_some());
        assert!(c.recolor_at(2, 12).is_some());
        assert_eq!(c.recolor_at(3, 12), None);
        let g = SolverConfig::new(ColoringKind::Greedy, OrderingKind::Identity);
        assert_eq!(g.recolor_at(0, 100), None);
    }
}

use serde::{Deserialize, Serialize};

use crate::tolerance::DEFAULT_SLACK_REL;

/// Which way the inequality is expected to point at a given exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// lhs ≤ rhs, p > 1.
    LE,
    /// lhs ≥ rhs, p < 1.
    GE,
    /// lhs = rhs, p = 1.
    EQ,
}

impl Direction {
    pub fn for_exponent(p: f64) -> Self {
        if p > 1.0 {
            Direction::LE
        } else if p < 1.0 {
            Direction::GE
        } else {
            Direction::EQ
        }
    }

    /// Signed margin: nonnegative when the inequality holds.
    pub fn margin(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Direction::LE => rhs - lhs,
            Direction::GE => lhs - rhs,
            Direction::EQ => -(lhs - rhs).abs(),
        }
    }
}

/// Both sides of one inequality check plus the derived verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub p: f64,
    pub x: f64,
    pub n: usize,
    pub m: usize,
    pub padding: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub direction: Direction,
    pub margin: f64,
    /// rhs − lhs regardless of direction; this is J(p) when p ≥ 1.
    pub j_value: f64,
    pub satisfied: bool,
    pub slack_rel: f64,
}

impl InequalityReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        p: f64,
        x: f64,
        n: usize,
        m: usize,
        padding: usize,
        lhs: f64,
        rhs: f64,
        slack_rel: f64,
    ) -> Self {
        let direction = Direction::for_exponent(p);
        let margin = direction.margin(lhs, rhs);
        let mut report = Self {
            p,
            x,
            n,
            m,
            padding,
            lhs,
            rhs,
            direction,
            margin,
            j_value: rhs - lhs,
            satisfied: false,
            slack_rel,
        };
        report.satisfied = report.margin >= -report.slack();
        report
    }

    pub(crate) fn with_default_slack(
        p: f64,
        x: f64,
        dims: (usize, usize, usize),
        lhs: f64,
        rhs: f64,
    ) -> Self {
        Self::new(p, x, dims.0, dims.1, dims.2, lhs, rhs, DEFAULT_SLACK_REL)
    }

    /// Absolute slack: slack_rel · max(1, lhs, rhs).
    pub fn slack(&self) -> f64 {
        self.slack_rel * 1f64.max(self.lhs).max(self.rhs)
    }

    /// Re-scores the verdict under a different relative slack.
    pub fn with_slack(self, slack_rel: f64) -> Self {
        Self::new(
            self.p,
            self.x,
            self.n,
            self.m,
            self.padding,
            self.lhs,
            self.rhs,
            slack_rel,
        )
    }

    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            p: self.p,
            x: self.x,
            n: self.n,
            m: self.m,
            padding: self.padding,
            lhs: self.lhs,
            rhs: self.rhs,
            j_value: self.j_value,
            margin: self.margin,
            direction: self.direction,
            satisfied: self.satisfied,
        }
    }
}

/// Flat serialization record. Field order is the fixed CSV column order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub p: f64,
    pub x: f64,
    pub n: usize,
    pub m: usize,
    pub padding: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub j_value: f64,
    pub margin: f64,
    pub direction: Direction,
    pub satisfied: bool,
}

pub const CSV_COLUMNS: [&str; 11] = [
    "p",
    "x",
    "n",
    "m",
    "padding",
    "lhs",
    "rhs",
    "j_value",
    "margin",
    "direction",
    "satisfied",
];

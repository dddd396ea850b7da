//! Pass/fail records for identity checks.

use std::fmt;

/// How a computed value is compared to the expected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtLeast,
    AtMost,
    /// Computed lies in the closed interval given as `expected = "lo..hi"`.
    Within,
    /// Computed is one of the listed values.
    OneOf,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Equal => "==",
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Within => "in",
            Relation::OneOf => "in",
        };
        f.write_str(s)
    }
}

/// What a check was run on.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    pub n: usize,
    pub h: usize,
    pub dim: usize,
    pub seed: Option<u64>,
    pub source: String,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} h={} d={}", self.n, self.h, self.dim)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if !self.source.is_empty() {
            write!(f, " [{}]", self.source)?;
        }
        Ok(())
    }
}

/// Outcome of one identity or inequality check, with exact values rendered as
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub relation: Relation,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub context: Context,
}

impl VerificationReport {
    pub fn equal<T: PartialEq + fmt::Display>(
        id: impl Into<String>,
        expected: T,
        computed: T,
        context: &Context,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            relation: Relation::Equal,
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            context: context.clone(),
        }
    }

    pub fn at_least<T: PartialOrd + fmt::Display>(
        id: impl Into<String>,
        bound: T,
        computed: T,
        context: &Context,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            relation: Relation::AtLeast,
            pass: computed >= bound,
            expected: bound.to_string(),
            computed: computed.to_string(),
            context: context.clone(),
        }
    }

    pub fn at_most<T: PartialOrd + fmt::Display>(
        id: impl Into<String>,
        bound: T,
        computed: T,
        context: &Context,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            relation: Relation::AtMost,
            pass: computed <= bound,
            expected: bound.to_string(),
            computed: computed.to_string(),
            context: context.clone(),
        }
    }

    pub fn within<T: PartialOrd + fmt::Display>(
        id: impl Into<String>,
        lo: T,
        hi: T,
        computed: T,
        context: &Context,
    ) -> Self {
        VerificationReport {
            id: id.into(),
            relation: Relation::Within,
            pass: lo <= computed && computed <= hi,
            expected: format!("{lo}..{hi}"),
            computed: computed.to_string(),
            context: context.clone(),
        }
    }

    pub fn one_of<T: PartialEq + fmt::Display>(
        id: impl Into<String>,
        allowed: &[T],
        computed: T,
        context: &Context,
    ) -> Self {
        let listed: Vec<String> = allowed.iter().map(ToString::to_string).collect();
        VerificationReport {
            id: id.into(),
            relation: Relation::OneOf,
            pass: allowed.contains(&computed),
            expected: format!("{{{}}}", listed.join(",")),
            computed: computed.to_string(),
            context: context.clone(),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {}: computed {} {} {} ({})",
            self.id, self.computed, self.relation, self.expected, self.context
        )
    }
}

/// True iff every report passed.
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

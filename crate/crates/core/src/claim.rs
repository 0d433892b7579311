use std::fmt;

use serde::Serialize;

use crate::elemset::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
    /// The claim quantifies over an empty domain on this instance.
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
            Status::Vacuous => "vacuous",
        })
    }
}

/// A counterexample: elements and/or subsets, plus point-index sets when the
/// failure is inside a finite topology. Meaning is fixed per claim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subsets: Vec<ElemSet>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub opens: Vec<Vec<usize>>,
}

impl Witness {
    pub fn elements(elements: impl Into<Vec<usize>>) -> Self {
        Witness { elements: elements.into(), ..Default::default() }
    }

    pub fn subsets(subsets: impl Into<Vec<ElemSet>>) -> Self {
        Witness { subsets: subsets.into(), ..Default::default() }
    }

    pub fn opens(opens: Vec<Vec<usize>>) -> Self {
        Witness { opens, ..Default::default() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.elements.is_empty() {
            let e: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
            parts.push(format!("({})", e.join(",")));
        }
        for s in &self.subsets {
            parts.push(s.to_string());
        }
        for o in &self.opens {
            let e: Vec<String> = o.iter().map(ToString::to_string).collect();
            parts.push(format!("open[{}]", e.join(",")));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Verdict of one checkable statement on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl ClaimResult {
    pub fn holds(id: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), status: Status::Holds, witness: None, note: String::new() }
    }

    pub fn violated(id: impl Into<String>, witness: Witness, note: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), status: Status::Violated, witness: Some(witness), note: note.into() }
    }

    pub fn not_applicable(id: impl Into<String>, reason: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), status: Status::NotApplicable, witness: None, note: reason.into() }
    }

    pub fn vacuous(id: impl Into<String>, note: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), status: Status::Vacuous, witness: None, note: note.into() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

use painleve_core::catalog::{citation, Citation};
use painleve_core::classify::CitedClaim;
use serde::Serialize;
use serde_json::Value;

pub const OPEN_QUESTION: &str = "open-question";

/// Uniform envelope for every query.
#[derive(Debug, Clone, Serialize)]
pub struct Response {
    pub query: Value,
    pub verdicts: Vec<Verdict>,
    pub citations: Vec<CitedClaim>,
    pub notes: Vec<String>,
    pub ambiguities: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl Response {
    pub fn new(query: Value) -> Self {
        Response {
            query,
            verdicts: Vec::new(),
            citations: Vec::new(),
            notes: Vec::new(),
            ambiguities: Vec::new(),
            result: None,
            error: None,
        }
    }

    pub fn failure(query: Value, kind: &'static str, message: String) -> Self {
        Response {
            error: Some(ErrorBody { kind, message }),
            ..Response::new(query)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

/// A single claim; carries exactly one of a citation or the open-question tag.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub subject: String,
    pub value: Value,
    #[serde(flatten)]
    pub support: Support,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Support {
    Cited {
        citation: Citation,
    },
    Open {
        tag: &'static str,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        questions: Vec<Citation>,
    },
}

impl Verdict {
    pub fn cited(subject: &str, value: impl Serialize, source: Citation) -> Self {
        Verdict {
            subject: subject.to_string(),
            value: to_value(value),
            support: Support::Cited { citation: source },
        }
    }

    pub fn cited_id(subject: &str, value: impl Serialize, id: &str) -> Self {
        Verdict::cited(subject, value, *citation(id))
    }

    pub fn open(subject: &str, value: impl Serialize, questions: Vec<Citation>) -> Self {
        Verdict {
            subject: subject.to_string(),
            value: to_value(value),
            support: Support::Open {
                tag: OPEN_QUESTION,
                questions,
            },
        }
    }
}

pub fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("CLI payloads serialize to JSON")
}

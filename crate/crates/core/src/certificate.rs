//! Pass/fail records for verified identity instances.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked instance of an identity. `instance` names the exact inputs,
/// so that a failure can be reproduced from the record alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub identity: String,
    pub instance: String,
    pub window: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Certificate {
    pub fn new(identity: impl Into<String>, instance: impl Into<String>, window: impl Into<String>) -> Self {
        Certificate {
            identity: identity.into(),
            instance: instance.into(),
            window: window.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    /// Marks the record failed when `witness` is `Some`.
    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        if witness.is_some() {
            self.status = Status::Fail;
        }
        self.witness = witness;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("../../data/known_discrepancies.json");

/// One reviewed discrepancy: the instance where the literal statement fails
/// and the boundary condition responsible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownDiscrepancy {
    pub claim: String,
    pub part: String,
    pub instance: String,
    pub boundary: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Allowlist {
    pub entries: Vec<KnownDiscrepancy>,
}

impl Allowlist {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("allowlist: {e}"),
        })
    }

    /// The list bundled with the crate.
    pub fn shipped() -> Self {
        Self::parse(SHIPPED).expect("bundled allowlist is valid JSON")
    }

    pub fn lookup(&self, claim: &str, part: &str, instance: &str) -> Option<&KnownDiscrepancy> {
        self.entries
            .iter()
            .find(|k| k.claim == claim && k.part == part && k.instance == instance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_matches_all_three_keys() {
        let list = Allowlist::parse(
            r#"{"entries": [{"claim": "Thm 2.2", "part": "center", "instance": "R=8 M=8", "boundary": "K_2"}]}"#,
        )
        .unwrap();
        assert!(list.lookup("Thm 2.2", "center", "R=8 M=8").is_some());
        assert!(list.lookup("Thm 2.2", "radius", "R=8 M=8").is_none());
        assert!(Allowlist::parse("[").is_err());
        Allowlist::shipped();
    }
}

use serde::{Deserialize, Serialize};

use crate::crystal::{BieberbachGroup, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// Interchange format for user-supplied groups.
///
/// ```json
/// {"dim": 2, "name": "klein",
///  "generators": [{"perm": [1, 2], "signs": [-1, 1], "translation": ["0", "1/2"]}]}
/// ```
/// `perm` is 1-based with the column convention `B e_j = signs[j] e_{perm[j]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    pub translation: Vec<Rational4>,
}

impl GeneratorSpec {
    pub fn from_element(e: &IsometryElement) -> Self {
        GeneratorSpec {
            perm: e.linear().perm_one_based(),
            signs: e.linear().signs().to_vec(),
            translation: e.translation().to_vec(),
        }
    }

    pub fn to_element(&self, dim: usize) -> Result<IsometryElement> {
        for len in [self.perm.len(), self.signs.len(), self.translation.len()] {
            if len != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: len,
                });
            }
        }
        let linear = SignedPermutation::from_one_based(&self.perm, &self.signs)?;
        IsometryElement::new(linear, self.translation.clone())
    }
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group specs always serialise")
    }

    pub fn from_group(group: &BieberbachGroup) -> Self {
        GroupSpec {
            dim: group.dim(),
            name: group.name().map(str::to_string),
            generators: group
                .generators()
                .iter()
                .map(GeneratorSpec::from_element)
                .collect(),
        }
    }

    pub fn generator_elements(&self) -> Result<Vec<IsometryElement>> {
        if self.dim == 0 {
            return Err(Error::OutOfRange {
                what: "dimension",
                detail: "groups need dim >= 1".into(),
            });
        }
        self.generators
            .iter()
            .map(|g| g.to_element(self.dim))
            .collect()
    }

    /// Expands and validates, failing on the first violated check.
    pub fn build(&self) -> Result<BieberbachGroup> {
        let group = BieberbachGroup::from_generators(self.dim, self.generator_elements()?)?;
        Ok(match &self.name {
            Some(name) => group.with_name(name.clone()),
            None => group,
        })
    }
}

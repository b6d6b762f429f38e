//! The JSON instance schema: field, category, bimodule, differentiation,
//! group, action, factors, and request sections. Scalars are strings ("2"
//! for residues, "2/3" for rationals), matrices are row-major arrays, and the
//! group multiplication is a table.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Coords = BTreeMap<String, String>;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSection,
    pub category: CategorySection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub differentiation: Vec<DiffEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action: Vec<ActionEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub requests: Option<RequestSection>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySection {
    pub objects: Vec<String>,
    pub homs: Vec<HomSpace>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compose: Vec<ComposeEntry>,
    pub identities: Vec<IdentityEntry>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct HomSpace {
    pub src: String,
    pub dst: String,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeEntry {
    pub after: String,
    pub before: String,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityEntry {
    pub object: String,
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSection {
    pub elements: Vec<HomSpace>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub left: Vec<LeftActionEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub right: Vec<RightActionEntry>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct LeftActionEntry {
    pub morphism: String,
    pub element: String,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RightActionEntry {
    pub element: String,
    pub morphism: String,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DiffEntry {
    pub morphism: String,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub elements: Vec<String>,
    pub unit: String,
    pub table: Vec<GroupProduct>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupProduct {
    pub left: String,
    pub right: String,
    pub product: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub sigma: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<ObjectMapEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homs: Vec<BasisImage>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<BasisImage>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectMapEntry {
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BasisImage {
    pub basis: String,
    #[serde(default)]
    pub coords: Coords,
}

/// λ_{σ,τ}: either a scalar shorthand (requires the action to fix objects)
/// or per-object morphism coordinates. Omitted pairs default to the identity.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FactorEntry {
    pub sigma: String,
    pub tau: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Coords>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RequestSection {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub el_objects: Vec<ElObjectDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossed_el_objects: Vec<CrossedElObjectDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sequences: Vec<SequenceDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub left_almost_split: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub right_almost_split: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub radical_generators: Vec<RadicalGeneratorDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nu_objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub decompose: Vec<DecomposeDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ElObjectDecl {
    pub name: String,
    pub carrier: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elem: Vec<ElemBlock>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ElemBlock {
    pub row: usize,
    pub col: usize,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedElObjectDecl {
    pub name: String,
    pub carrier: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elem: Vec<CrossedElemBlock>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedElemBlock {
    pub row: usize,
    pub col: usize,
    pub sigma: String,
    #[serde(default)]
    pub coords: Coords,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub name: String,
    pub src: Vec<String>,
    pub dst: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<ElemBlock>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDecl {
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RadicalGeneratorDecl {
    pub source: String,
    pub morphisms: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeDecl {
    pub name: String,
    pub summands: Vec<String>,
}

/// Parses an instance file, reporting schema violations with their JSON
/// location.
pub fn parse_instance(text: &str) -> Result<InstanceFile, String> {
    serde_json::from_str(text)
        .map_err(|e| format!("schema violation at line {}, column {}: {e}", e.line(), e.column()))
}

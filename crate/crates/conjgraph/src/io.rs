//! Group exchange format: a json document carrying a permutation group and
//! named normal subgroups, validated eagerly at load time.
//!
//! Point indices are 0-based by default. Documents exported from systems
//! using 1-based points can set `"one_based": true` and are normalized on
//! load.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constructions::GroupPair;
use crate::error::{GroupError, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDocument {
    pub name: String,
    pub degree: usize,
    /// Set when the image arrays use 1-based points; normalized on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_based: Option<bool>,
    pub generators: Vec<Vec<u32>>,
    #[serde(default)]
    pub normal_subgroups: BTreeMap<String, Vec<Vec<u32>>>,
}

fn images_to_perm(degree: usize, images: &[u32], one_based: bool, what: &str) -> Result<Permutation> {
    let shifted: Vec<u32> = if one_based {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(GroupError::Document(format!(
                    "{what}: found point 0 in a one_based document"
                )));
            }
            v.push(x - 1);
        }
        v
    } else {
        images.to_vec()
    };
    if shifted.len() != degree {
        return Err(GroupError::Document(format!(
            "{what}: image array has length {}, expected degree {degree}",
            shifted.len()
        )));
    }
    Permutation::from_images(shifted)
        .map_err(|e| GroupError::Document(format!("{what}: {e}")))
}

/// Parse and fully validate a group document: every image array must be a
/// permutation, every named subgroup must sit inside the group and be normal.
pub fn parse_group_file(text: &str) -> Result<GroupDocument> {
    let doc: GroupDocument = serde_json::from_str(text)?;
    build_group(&doc)?; // validates everything eagerly
    Ok(doc)
}

/// Materialize the document's group; errors name the offending generator or
/// subgroup.
pub fn build_group(doc: &GroupDocument) -> Result<Arc<PermGroup>> {
    let one_based = doc.one_based.unwrap_or(false);
    let mut gens = Vec::new();
    for (i, images) in doc.generators.iter().enumerate() {
        gens.push(images_to_perm(doc.degree, images, one_based, &format!("generator {i}"))?);
    }
    let group = Arc::new(PermGroup::from_generators(doc.degree, gens)?);
    for (name, sub_gens) in &doc.normal_subgroups {
        build_subgroup(doc, &group, name, sub_gens)?;
    }
    Ok(group)
}

fn build_subgroup(
    doc: &GroupDocument,
    group: &Arc<PermGroup>,
    name: &str,
    sub_gens: &[Vec<u32>],
) -> Result<Subgroup> {
    let one_based = doc.one_based.unwrap_or(false);
    let mut gens = Vec::new();
    for (i, images) in sub_gens.iter().enumerate() {
        gens.push(images_to_perm(
            doc.degree,
            images,
            one_based,
            &format!("subgroup {name}, generator {i}"),
        )?);
    }
    let sub = Subgroup::new(
        Arc::clone(group),
        Arc::new(PermGroup::from_generators(doc.degree, gens)?),
    )
    .map_err(|e| GroupError::Document(format!("subgroup {name}: {e}")))?;
    sub.check_normal()
        .map_err(|e| GroupError::Document(format!("subgroup {name} is not normal: {e}")))?;
    Ok(sub)
}

/// Resolve a (G, N) pair from a validated document; `subgroup` of `None`
/// means N = G.
pub fn document_pair(doc: &GroupDocument, subgroup: Option<&str>) -> Result<GroupPair> {
    let group = build_group(doc)?;
    let (normal, label) = match subgroup {
        None => (Subgroup::full(&group), doc.name.clone()),
        Some(name) => {
            let sub_gens = doc.normal_subgroups.get(name).ok_or_else(|| {
                GroupError::Document(format!("no subgroup named `{name}` in document"))
            })?;
            (
                build_subgroup(doc, &group, name, sub_gens)?,
                format!("{}#{name}", doc.name),
            )
        }
    };
    Ok(GroupPair {
        group,
        normal,
        label,
    })
}

/// Export a group (and optional named normal subgroups) as a document.
pub fn export_document(
    name: &str,
    group: &PermGroup,
    subgroups: &BTreeMap<String, &PermGroup>,
) -> GroupDocument {
    GroupDocument {
        name: name.to_string(),
        degree: group.degree(),
        one_based: None,
        generators: group
            .generators()
            .iter()
            .map(|g| g.images().to_vec())
            .collect(),
        normal_subgroups: subgroups
            .iter()
            .map(|(n, s)| {
                (
                    n.clone(),
                    s.generators().iter().map(|g| g.images().to_vec()).collect(),
                )
            })
            .collect(),
    }
}

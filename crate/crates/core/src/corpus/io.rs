//! Reading and writing groups as JSON.
//!
//! ```json
//! {"name": "c3", "degree": 3, "generators": [[1, 2, 0]]}
//! ```
//!
//! Subgroups carry an extra `"parent"` field naming the ambient group.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Environment variable overriding the fixture directory.
pub const FIXTURE_DIR_ENV: &str = "CUTGROUPS_FIXTURES";

#[derive(Debug, Serialize, Deserialize)]
struct GroupFile {
    name: String,
    degree: usize,
    generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parent: Option<String>,
}

/// A group with the name it was stored under.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub parent: Option<String>,
    pub group: PermGroup,
}

fn check_images(index: usize, images: &[u32], degree: usize) -> Result<()> {
    if images.len() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: images.len(),
        });
    }
    let mut seen = vec![false; degree];
    for (i, &x) in images.iter().enumerate() {
        let Some(slot) = seen.get_mut(x as usize) else {
            return Err(Error::NotBijection(format!(
                "generator {index}: image {x} of point {i} is out of range 0..{degree}"
            )));
        };
        if *slot {
            return Err(Error::NotBijection(format!(
                "generator {index}: point {x} is the image of more than one point"
            )));
        }
        *slot = true;
    }
    Ok(())
}

/// Parses the JSON group format.
pub fn parse_group(text: &str) -> Result<NamedGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    let gens = file
        .generators
        .into_iter()
        .enumerate()
        .map(|(i, images)| {
            check_images(i, &images, file.degree)?;
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NamedGroup {
        name: file.name,
        parent: file.parent,
        group: PermGroup::from_generators(gens, file.degree)?,
    })
}

pub fn group_to_json(name: &str, group: &PermGroup, parent: Option<&str>) -> String {
    let file = GroupFile {
        name: name.to_string(),
        degree: group.degree(),
        generators: group
            .generators()
            .iter()
            .map(|g| g.images().to_vec())
            .collect(),
        parent: parent.map(str::to_string),
    };
    serde_json::to_string_pretty(&file).expect("group file serializes")
}

pub fn load_group(path: impl AsRef<Path>) -> Result<NamedGroup> {
    parse_group(&std::fs::read_to_string(path)?)
}

pub fn save_group(name: &str, group: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    save_group_with_parent(name, group, None, path)
}

pub fn save_group_with_parent(
    name: &str,
    group: &PermGroup,
    parent: Option<&str>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let mut text = group_to_json(name, group, parent);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// The fixture directory: `$CUTGROUPS_FIXTURES` if set, otherwise the
/// `fixtures` directory shipped with this crate.
pub fn fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

/// Loads `<fixture_dir>/<name>.json`.
pub fn load_fixture(name: &str) -> Result<NamedGroup> {
    if name.is_empty() || name.contains(['/', '\\']) || name.starts_with('.') {
        return Err(Error::InvalidParameter(format!(
            "bad fixture name '{name}'"
        )));
    }
    load_group(fixture_dir().join(format!("{name}.json")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::cyclic;

    #[test]
    fn round_trip() {
        let g = cyclic(3).unwrap();
        let back = parse_group(&group_to_json("c3", &g, None)).unwrap();
        assert_eq!(back.name, "c3");
        assert_eq!(back.group.generators(), g.generators());
        assert_eq!(back.group.degree(), 3);
        assert!(back.parent.is_none());
    }

    #[test]
    fn parent_field_survives() {
        let g = cyclic(3).unwrap();
        let back = parse_group(&group_to_json("sub", &g, Some("c9"))).unwrap();
        assert_eq!(back.parent.as_deref(), Some("c9"));
    }

    #[test]
    fn rejects_bad_input() {
        let dup = r#"{"name":"x","degree":3,"generators":[[0,0,1]]}"#;
        assert!(matches!(parse_group(dup), Err(Error::NotBijection(m)) if m.contains("point 0")));
        let range = r#"{"name":"x","degree":3,"generators":[[0,1,3]]}"#;
        assert!(matches!(parse_group(range), Err(Error::NotBijection(_))));
        let short = r#"{"name":"x","degree":3,"generators":[[1,0]]}"#;
        assert_eq!(
            parse_group(short).unwrap_err(),
            Error::DegreeMismatch {
                expected: 3,
                found: 2
            }
        );
        assert!(matches!(parse_group("{not json"), Err(Error::Format(_))));
        assert!(matches!(
            load_fixture("../etc"),
            Err(Error::InvalidParameter(_))
        ));
    }
}

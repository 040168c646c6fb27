use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use flatspec::crystal::{validate, BieberbachGroup, GroupSpec};
use flatspec::families::{catalog, CATALOG_NAMES};
use flatspec::lattice::DEFAULT_SHELL_CAP;

/// Environment variable overriding the largest enumerated squared norm.
pub const SHELL_CAP_VAR: &str = "FLATSPEC_SHELL_CAP";

pub fn shell_cap() -> Result<u64> {
    match std::env::var(SHELL_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{SHELL_CAP_VAR}={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_SHELL_CAP),
    }
}

/// Reads and validates a group JSON file; a rejected group carries its report.
pub fn load_group_file(path: &Path) -> Result<BieberbachGroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec = GroupSpec::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let report = validate(&spec);
    if !report.accepted {
        bail!(
            "{} is not a Bieberbach group:\n{}",
            path.display(),
            serde_json::to_string_pretty(&report)?
        );
    }
    let group = spec.build()?;
    Ok(match spec.name {
        Some(_) => group,
        None => {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            match stem {
                Some(s) => group.with_name(s),
                None => group,
            }
        }
    })
}

/// A catalog name, `torus/<n>`, a catalog prefix such as `dim3` (all of its
/// members), or a path to a group JSON file.
pub fn resolve_groups(arg: &str) -> Result<Vec<BieberbachGroup>> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(vec![load_group_file(path)?]);
    }
    if !arg.contains('/') {
        let prefix = format!("{arg}/");
        let members: Vec<&str> = CATALOG_NAMES.iter().copied().filter(|n| n.starts_with(&prefix)).collect();
        if !members.is_empty() {
            return members.into_iter().map(|n| Ok(catalog(n)?)).collect();
        }
    }
    catalog(arg).map(|g| vec![g]).map_err(|e| {
        anyhow::anyhow!("{e}; expected a file, torus/<n>, or one of: {}", CATALOG_NAMES.join(", "))
    })
}

pub fn resolve_group(arg: &str) -> Result<BieberbachGroup> {
    let mut groups = resolve_groups(arg)?;
    if groups.len() != 1 {
        bail!("{arg:?} names {} groups; pick one", groups.len());
    }
    Ok(groups.remove(0))
}

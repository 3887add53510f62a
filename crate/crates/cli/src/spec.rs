//! Group specification documents: JSON, inline or from a file, plus the
//! named fixtures bundled with the binary.

use std::path::Path;

use cyclograph_core::group::{enumerate, Limits};
use cyclograph_core::{AffineGroupSpec, EnumeratedGroup, Error as CoreError, Permutation};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupSpecDocument {
    /// Generators in 0-based cycle notation, one list of cycles per generator.
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<u32>>>,
    },
    Affine {
        components: Vec<(u64, u32)>,
        d: u64,
        e: u64,
    },
    Sym {
        n: usize,
    },
    NamedFixture {
        name: String,
    },
}

pub const NAMED_FIXTURES: &[(&str, &str)] = &[
    ("example1", include_str!("../../../fixtures/example1.json")),
    ("example2", include_str!("../../../fixtures/example2.json")),
    ("example3", include_str!("../../../fixtures/example3.json")),
    ("example4", include_str!("../../../fixtures/example4.json")),
    ("example5", include_str!("../../../fixtures/example5.json")),
    ("example6", include_str!("../../../fixtures/example6.json")),
    ("a4", include_str!("../../../fixtures/a4.json")),
    ("s3", include_str!("../../../fixtures/s3.json")),
];

fn parse_json(text: &str, origin: &str) -> Result<GroupSpecDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::InvalidSpec(format!("{origin}: {e}")))
}

/// Reads a spec from inline JSON (anything starting with `{`), a file path,
/// or a bare fixture name, and resolves named fixtures.
pub fn load(arg: &str) -> Result<GroupSpecDocument, CliError> {
    let doc = if arg.trim_start().starts_with('{') {
        parse_json(arg, "inline spec")?
    } else if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::InvalidSpec(format!("{arg}: {e}")))?;
        parse_json(&text, arg)?
    } else if NAMED_FIXTURES.iter().any(|(name, _)| *name == arg) {
        GroupSpecDocument::NamedFixture { name: arg.into() }
    } else {
        return Err(CliError::InvalidSpec(format!("{arg}: not JSON, a file, or a fixture name")));
    };
    resolve(doc)
}

fn resolve(doc: GroupSpecDocument) -> Result<GroupSpecDocument, CliError> {
    match doc {
        GroupSpecDocument::NamedFixture { name } => {
            let (_, text) = NAMED_FIXTURES
                .iter()
                .find(|(n, _)| *n == name)
                .ok_or_else(|| CliError::InvalidSpec(format!("unknown fixture {name:?}")))?;
            let inner = parse_json(text, &name)?;
            if matches!(inner, GroupSpecDocument::NamedFixture { .. }) {
                return Err(CliError::InvalidSpec(format!("fixture {name} refers to another fixture")));
            }
            Ok(inner)
        }
        other => Ok(other),
    }
}

/// What a resolved document describes.
pub enum Source {
    Perm { degree: usize, generators: Vec<Permutation> },
    Affine(AffineGroupSpec),
}

impl Source {
    pub fn from_document(doc: &GroupSpecDocument) -> Result<Source, CliError> {
        match doc {
            GroupSpecDocument::Perm { degree, generators } => {
                if *degree == 0 {
                    return Err(CliError::InvalidSpec("degree must be positive".into()));
                }
                let generators = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Source::Perm {
                    degree: *degree,
                    generators,
                })
            }
            GroupSpecDocument::Sym { n } => {
                if *n == 0 {
                    return Err(CliError::InvalidSpec("n must be positive".into()));
                }
                let mut generators = Vec::new();
                if *n >= 2 {
                    generators.push(Permutation::from_cycles(*n, &[vec![0, 1]])?);
                    generators.push(Permutation::from_cycles(*n, &[(0..*n as u32).collect()])?);
                }
                Ok(Source::Perm { degree: *n, generators })
            }
            GroupSpecDocument::Affine { components, d, e } => {
                if components.iter().any(|&(p, n)| p == 0 || n == 0) || *d == 0 || *e == 0 {
                    return Err(CliError::InvalidSpec("all integers must be positive".into()));
                }
                Ok(Source::Affine(AffineGroupSpec::new(components, *d, *e)?))
            }
            GroupSpecDocument::NamedFixture { .. } => Err(CliError::InvalidSpec("unresolved fixture".into())),
        }
    }

    pub fn affine(&self) -> Option<&AffineGroupSpec> {
        match self {
            Source::Affine(spec) => Some(spec),
            Source::Perm { .. } => None,
        }
    }

    /// Enumerates the group, or explains why it was not enumerated.
    pub fn enumerate(&self, enum_cap: usize) -> Result<EnumeratedGroup, CoreError> {
        let limits = Limits::with_cap(enum_cap);
        match self {
            Source::Perm { degree, generators } => enumerate(*degree, generators, limits),
            Source::Affine(spec) => {
                if spec.group_order() > enum_cap as u64 {
                    return Err(CoreError::CapExceeded { cap: enum_cap });
                }
                let gens = spec.to_permutation_group(enum_cap as u64)?;
                enumerate(spec.k_order() as usize, &gens, limits)
            }
        }
    }
}

/// A loaded spec together with its enumerated group, when that fit the caps.
pub struct Loaded {
    pub doc: GroupSpecDocument,
    pub source: Source,
    pub group: Option<EnumeratedGroup>,
    /// Why `group` is absent.
    pub enumeration_error: Option<CoreError>,
}

impl Loaded {
    pub fn new(arg: &str, enum_cap: usize) -> Result<Loaded, CliError> {
        let doc = load(arg)?;
        let source = Source::from_document(&doc)?;
        let (group, enumeration_error) = match source.enumerate(enum_cap) {
            Ok(g) => (Some(g), None),
            Err(e @ (CoreError::CapExceeded { .. } | CoreError::StorageExceeded { .. })) => (None, Some(e)),
            Err(e) => return Err(e.into()),
        };
        Ok(Loaded {
            doc,
            source,
            group,
            enumeration_error,
        })
    }

    /// The enumerated group, or a cap error for commands that need one.
    pub fn require_group(&self) -> Result<&EnumeratedGroup, CliError> {
        self.group.as_ref().ok_or_else(|| {
            let why = self
                .enumeration_error
                .as_ref()
                .map(|e| e.to_string())
                .unwrap_or_else(|| "group not enumerated".into());
            CliError::CapExceeded(format!("brute force needs the enumerated group: {why}"))
        })
    }
}

use crate::CmdError;
use kulideal::algebra::examples::all_fixtures;
use kulideal::graded_category::{OrbitData, OrbitInput};
use kulideal::{AlgebraSpec, FinDimAlgebra};
use std::path::Path;

fn read(path: &Path) -> Result<String, CmdError> {
    std::fs::read_to_string(path).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

/// Loads an algebra from a JSON file, or from the shipped fixtures as `builtin:<name>`.
pub fn algebra(source: &str) -> Result<FinDimAlgebra, CmdError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return all_fixtures().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a).ok_or_else(|| {
            let names: Vec<&str> = all_fixtures().iter().map(|(n, _)| *n).collect();
            CmdError::Input(format!("no builtin fixture {name:?}; known: {}", names.join(", ")))
        });
    }
    let path = Path::new(source);
    let text = read(path)?;
    AlgebraSpec::from_json(&text).and_then(|s| s.build()).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

pub fn orbit(path: &Path) -> Result<OrbitData, CmdError> {
    let text = read(path)?;
    OrbitInput::from_json(&text).and_then(|s| s.build()).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

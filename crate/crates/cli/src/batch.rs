//! `verify --batch DIR`: every `*.json` file in `DIR` holds
//! `{"B": [[...]], "source": <quiver or form>, "target": <quiver or form>}`.
//! Files are checked in parallel and reported in file-name order; a file
//! that cannot be checked gets an "error" entry instead of a report.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use gramclass::congruence::verify;
use gramclass::exactmat::IntMatrix;
use gramclass::io::parse_input;

use crate::{report_json, Failure};

fn matrix(v: &Value) -> Result<IntMatrix, String> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_value(v.clone()).map_err(|e| format!("\"B\": {e}"))?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err("\"B\": rows differ in length".into());
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn check(path: &Path) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let field = |k: &str| v.get(k).ok_or_else(|| format!("missing \"{k}\""));
    let b = matrix(field("B")?)?;
    let src = parse_input(&field("source")?.to_string()).map_err(|e| format!("\"source\": {e}"))?;
    let dst = parse_input(&field("target")?.to_string()).map_err(|e| format!("\"target\": {e}"))?;
    let r = verify(&b, &src.form(), &dst.form()).map_err(|e| e.to_string())?;
    Ok(report_json(&r))
}

pub fn run(dir: &Path) -> Result<Value, Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::Validation(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let results: Vec<Value> = files
        .par_iter()
        .map(|p| {
            let name = p
                .file_name()
                .expect("listed file")
                .to_string_lossy()
                .into_owned();
            let mut entry = json!({"file": name});
            match check(p) {
                Ok(Value::Object(report)) => entry.as_object_mut().unwrap().extend(report),
                Ok(_) => unreachable!("reports are objects"),
                Err(e) => entry["error"] = json!(e),
            }
            entry
        })
        .collect();
    Ok(Value::Array(results))
}

pub fn has_errors(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|entries| entries.iter().any(|e| e.get("error").is_some()))
}

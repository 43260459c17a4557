//! Output layout. JSON puts one top-level key per line with compact values;
//! `--text` prints `key: value` lines and matrices as space-separated rows.

use serde_json::Value;

pub fn render(v: &Value, text: bool) -> String {
    if text {
        let mut out = String::new();
        text_value(v, 0, &mut out);
        out
    } else {
        json_value(v)
    }
}

fn json_value(v: &Value) -> String {
    let compact = |x: &Value| serde_json::to_string(x).expect("JSON values serialize");
    match v {
        Value::Object(map) if !map.is_empty() => {
            let body: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("  {}: {}", compact(&Value::String(k.clone())), compact(x)))
                .collect();
            format!("{{\n{}\n}}\n", body.join(",\n"))
        }
        Value::Array(items) if !items.is_empty() => {
            let body: Vec<String> = items.iter().map(|x| format!("  {}", compact(x))).collect();
            format!("[\n{}\n]\n", body.join(",\n"))
        }
        other => compact(other) + "\n",
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_row(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn row(v: &Value) -> String {
    match v {
        Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => scalar(other),
    }
}

fn text_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Array(rows)
                        if !rows.is_empty() && rows.iter().all(|r| r.is_array() && is_row(r)) =>
                    {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for r in rows {
                            out.push_str(&format!("{pad}  {}\n", row(r)));
                        }
                    }
                    Value::Object(_) | Value::Array(_) if !is_row(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_value(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", row(x))),
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if i > 0 && x.is_object() {
                    out.push('\n');
                }
                text_value(x, indent, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

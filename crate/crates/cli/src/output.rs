use serde_json::Value;

use crate::args::Format;

pub fn render(format: Format, value: &Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize") + "\n",
        Format::Tsv => {
            let mut rows = Vec::new();
            flatten("", value, &mut rows);
            rows.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
        }
    }
}

/// One `path<TAB>value` row per leaf, paths joined with dots.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let join = |key: &str| if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub fn error_object(kind: &str, message: &str) -> Value {
    serde_json::json!({ "error": { "kind": kind, "message": message } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_paths() {
        let v = json!({ "a": "1", "b": { "c": [ "x", true ] }, "d": null, "e": [] });
        assert_eq!(render(Format::Tsv, &v), "a\t1\nb.c.0\tx\nb.c.1\ttrue\nd\t\ne\t[]\n");
    }
}

use aalpha_core::Check;
use serde::Serialize;
use serde_json::{json, Value};

/// Round every non-integral number in `v` to 12 significant digits.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let rounded: f64 = format!("{x:.11e}").parse().expect("valid float");
            if let Some(r) = serde_json::Number::from_f64(rounded) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// The stable JSON envelope printed by every command.
pub fn envelope(command: &str, params: impl Serialize, results: impl Serialize, checks: &[Check]) -> String {
    let mut doc = json!({
        "command": command,
        "params": params,
        "results": results,
        "checks": checks,
        "version": env!("CARGO_PKG_VERSION"),
    });
    round_floats(&mut doc);
    serde_json::to_string_pretty(&doc).expect("serializable document")
}

/// `%.12g`-style rendering for text output.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn print_checks(checks: &[Check]) {
    for c in checks {
        let status = match (c.pass, c.exploratory) {
            (true, _) => "pass",
            (false, true) => "note",
            (false, false) => "FAIL",
        };
        let alpha = c.alpha.map(|a| format!(" alpha={}", fmt_float(a))).unwrap_or_default();
        println!(
            "  [{status}] {}{alpha}: {} (lhs {}, rhs {}, margin {:.3e})",
            c.spec,
            c.claim,
            fmt_float(c.lhs),
            fmt_float(c.rhs),
            c.margin
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        let mut v = json!({"a": [1.0 / 3.0, 2, 1e-20 / 3.0]});
        round_floats(&mut v);
        assert_eq!(v["a"][0].as_f64().unwrap(), 0.333333333333);
        assert_eq!(v["a"][1].as_u64().unwrap(), 2);
        assert_eq!(v["a"][2].as_f64().unwrap(), 3.33333333333e-21);
    }

    #[test]
    fn text_floats() {
        assert_eq!(fmt_float(4.0), "4");
        assert_eq!(fmt_float(2f64.sqrt()), "1.41421356237");
        assert_eq!(fmt_float(0.5), "0.5");
        assert_eq!(fmt_float(1e-12), "1.00000000000e-12");
    }
}

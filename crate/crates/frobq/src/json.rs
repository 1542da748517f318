//! JSON encoding helpers. Integers outside the exactly representable
//! double range are emitted as strings.

use frobq_core::{Certificate, QuadInt, Solution4};
use serde_json::{json, Value};

/// Largest magnitude a JSON consumer reading doubles holds exactly.
pub const MAX_SAFE_INT: i128 = (1 << 53) - 1;

pub fn int(v: i128) -> Value {
    if (-MAX_SAFE_INT..=MAX_SAFE_INT).contains(&v) {
        Value::from(v as i64)
    } else {
        Value::String(v.to_string())
    }
}

pub fn quad(x: QuadInt) -> Value {
    json!({ "rat": int(x.rat), "irr": int(x.irr), "text": x.to_string() })
}

pub fn tuple(s: &Solution4) -> Value {
    json!([int(s.x), int(s.y), int(s.z), int(s.w)])
}

pub fn certificate(c: &Certificate) -> Value {
    json!({ "lambda1": quad(c.lambda1), "lambda2": quad(c.lambda2) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn safe_range() {
        assert_eq!(int(5), json!(5));
        assert_eq!(int(-MAX_SAFE_INT), json!(-9007199254740991i64));
        assert_eq!(int(MAX_SAFE_INT + 1), json!("9007199254740992"));
        assert_eq!(int(i128::MIN), json!(i128::MIN.to_string()));
    }

    #[test]
    fn quad_shape() {
        assert_eq!(
            quad(QuadInt::new(4, -2)),
            json!({"rat": 4, "irr": -2, "text": "4-2r"})
        );
    }
}

//! Small helpers for the JSON shapes the CLI and FFI emit.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

/// Integers that fit in `i64` become JSON numbers; larger ones become strings.
pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn big_list(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

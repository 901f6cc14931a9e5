//! Literal formats shared by the flags and the output.
//!
//! A multipartition is written as a JSON array of partitions, each a JSON
//! array of parts: `[[2,1],[],[1]]`. Charge lists are comma-separated
//! integers: `3,-1,-2`.

use arikoike_core::combinatorics::{Multipartition, Partition};
use serde_json::{json, Value};

/// Comma-separated integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

pub fn parse_int_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("invalid integer {:?} in list {:?}: {}", t, s, e))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

pub fn parse_multipartition(s: &str) -> Result<Multipartition, String> {
    let raw: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|e| format!("invalid multipartition literal {:?}: {}", s, e))?;
    let components = raw
        .into_iter()
        .map(Partition::new)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Multipartition::new(components).map_err(|e| e.to_string())
}

pub fn multipartition_json(mp: &Multipartition) -> Value {
    Value::Array(mp.components().iter().map(|c| json!(c.parts())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mp = parse_multipartition("[[2,1],[],[1]]").unwrap();
        assert_eq!(mp.to_string(), "[[2,1],[],[1]]");
        assert_eq!(multipartition_json(&mp).to_string(), "[[2,1],[],[1]]");
        assert_eq!(parse_multipartition(" [ [ 3 ] ] ").unwrap().rank(), 3);
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(parse_multipartition("[[1,2]]").is_err());
        assert!(parse_multipartition("[]").is_err());
        assert!(parse_multipartition("[[-1]]").is_err());
        assert!(parse_multipartition("(1)").is_err());
        assert!(parse_int_list("1,,2").is_err());
        assert_eq!(parse_int_list("3,-1, -2").unwrap(), IntList(vec![3, -1, -2]));
    }
}

//! Parser for the nested-link spec document format.
//!
//! ```text
//! # comment
//! n=4
//! wrap=1 winding=0 knot=true trivial=true
//! wrap=0 winding=0 knot=false trivial=unknown
//! wrap=1 winding=1 knot=true trivial=unknown
//! wrap=1 winding=-1 knot=true trivial=false
//! ```
//!
//! One component per line, inside-out order, preceded by `n=<int>`.

use mixedtori::criteria::{LinkComponent, NestedLinkSpec};
use mixedtori::Error;

pub fn parse_nested_spec(text: &str) -> Result<NestedLinkSpec, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidSpec("empty document".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::InvalidSpec(format!("expected 'n=<int>' header, got '{header}'")))?;

    let mut components = Vec::with_capacity(n);
    for (idx, line) in lines.enumerate() {
        components.push(parse_component(line, idx + 1)?);
    }
    if components.len() != n {
        return Err(Error::InvalidSpec(format!(
            "header says n={n} but {} component line(s) follow",
            components.len()
        )));
    }
    let spec = NestedLinkSpec { components };
    spec.validate()?;
    Ok(spec)
}

fn parse_component(line: &str, index: usize) -> Result<LinkComponent, Error> {
    let mut wrap: Option<u32> = None;
    let mut winding: Option<i64> = None;
    let mut knot: Option<bool> = None;
    let mut trivial: Option<Option<bool>> = None;

    for field in line.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| {
            Error::InvalidSpec(format!(
                "component {index}: expected key=value, got '{field}'"
            ))
        })?;
        let bad =
            |what: &str| Error::InvalidSpec(format!("component {index}: bad {what} '{value}'"));
        match key {
            "wrap" => wrap = Some(value.parse().map_err(|_| bad("wrap"))?),
            "winding" => winding = Some(value.parse().map_err(|_| bad("winding"))?),
            "knot" => knot = Some(value.parse().map_err(|_| bad("knot"))?),
            "trivial" => {
                trivial = Some(match value {
                    "unknown" => None,
                    "true" => Some(true),
                    "false" => Some(false),
                    _ => return Err(bad("trivial")),
                })
            }
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "component {index}: unknown field '{key}'"
                )))
            }
        }
    }

    let missing =
        |what: &str| Error::InvalidSpec(format!("component {index}: missing field '{what}'"));
    Ok(LinkComponent {
        wrap: wrap.ok_or_else(|| missing("wrap"))?,
        winding: winding.ok_or_else(|| missing("winding"))?,
        is_knot: knot.ok_or_else(|| missing("knot"))?,
        is_trivial_knot: trivial.ok_or_else(|| missing("trivial"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_document() {
        let text = "# two components\nn=2\nwrap=2 winding=2 knot=true trivial=false\nwrap=2 winding=-2 knot=false trivial=unknown\n";
        let spec = parse_nested_spec(text).unwrap();
        assert_eq!(spec.n(), 2);
        assert_eq!(spec.components[0].wrap, 2);
        assert_eq!(spec.components[1].is_trivial_knot, None);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(parse_nested_spec("").is_err());
        assert!(parse_nested_spec("n=2\nwrap=1 winding=0 knot=true trivial=true").is_err());
        assert!(parse_nested_spec("n=1\nwrap=1 winding=0 knot=true trivial=true").is_err());
        assert!(parse_nested_spec(
            "n=2\nwrap=1 winding=5 knot=true trivial=true\nwrap=1 winding=0 knot=true trivial=true"
        )
        .is_err());
        assert!(parse_nested_spec(
            "n=2\nwrap=1 bogus=3 knot=true trivial=true\nwrap=1 winding=0 knot=true trivial=true"
        )
        .is_err());
    }
}

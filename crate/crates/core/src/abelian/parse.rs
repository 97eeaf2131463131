//! Text forms: groups `Z2xZ4`, elements `(1,0)`, element lists `(1,0);(0,1)`.

use super::group::{Element, FinAbGroup};
use crate::error::ParseError;

/// Parses `Z<n>(xZ<n>)*`, case-insensitive, no spaces, each `n >= 2`.
/// Factor order is kept as written.
pub fn parse_group(spec: &str) -> Result<FinAbGroup, ParseError> {
    let err = |pos: usize, msg: &str| ParseError::Group {
        pos,
        msg: msg.to_string(),
    };
    let bytes = spec.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty group spec"));
    }
    let mut orders = Vec::new();
    let mut i = 0;
    loop {
        if i >= bytes.len() || !bytes[i].eq_ignore_ascii_case(&b'z') {
            return Err(err(i, "expected `Z`"));
        }
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(err(start, "expected a factor order"));
        }
        let n: u64 = spec[start..i]
            .parse()
            .map_err(|_| err(start, "factor order out of range"))?;
        if n < 2 {
            return Err(err(start, "factor order must be at least 2"));
        }
        orders.push(n);
        if i == bytes.len() {
            break;
        }
        if !bytes[i].eq_ignore_ascii_case(&b'x') {
            return Err(err(i, "expected `x` between factors"));
        }
        i += 1;
    }
    FinAbGroup::new(orders).map_err(|e| err(0, &e.to_string()))
}

/// Parses `(1,0)` (parentheses optional) as an element of `g`.
pub fn parse_element(spec: &str, g: &FinAbGroup) -> Result<Element, ParseError> {
    let t = spec.trim();
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let coords: Vec<i64> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| ParseError::Element(format!("bad coordinate `{}` in `{t}`", c.trim())))
            })
            .collect::<Result<_, _>>()?
    };
    if coords.len() != g.rank() {
        return Err(ParseError::Element(format!(
            "`{t}` has {} coordinates, {g} needs {}",
            coords.len(),
            g.rank()
        )));
    }
    Ok(g.reduce(&coords))
}

/// Parses `;`-separated elements.
pub fn parse_elements(spec: &str, g: &FinAbGroup) -> Result<Vec<Element>, ParseError> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_element(s, g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group("Z2").unwrap().orders(), &[2]);
        assert_eq!(parse_group("z2XZ4").unwrap().orders(), &[2, 4]);
        assert_eq!(parse_group("Z2xZ4").unwrap().to_string(), "Z2xZ4");
        assert!(matches!(parse_group("Z0"), Err(ParseError::Group { pos: 1, .. })));
        assert!(matches!(parse_group("Z1"), Err(ParseError::Group { pos: 1, .. })));
        assert!(matches!(parse_group("Z2xY3"), Err(ParseError::Group { pos: 3, .. })));
        assert!(matches!(parse_group("Z2x"), Err(ParseError::Group { pos: 3, .. })));
        assert!(matches!(parse_group("Z2 xZ3"), Err(ParseError::Group { pos: 2, .. })));
        assert!(parse_group("").is_err());
    }

    #[test]
    fn elements() {
        let g = parse_group("Z2xZ4").unwrap();
        assert_eq!(parse_element("(1,3)", &g).unwrap(), Element(vec![1, 3]));
        assert_eq!(parse_element("(3,-1)", &g).unwrap(), Element(vec![1, 3]));
        assert!(parse_element("(1)", &g).is_err());
        let v = parse_elements("(1,0);(0,2)", &g).unwrap();
        assert_eq!(v.len(), 2);
    }
}

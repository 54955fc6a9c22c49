//! Matrix text format.
//!
//! ```text
//! field gf 7
//! cols a b c
//! 1 0 3
//! 0 1 1/2
//! ```
//! Blank lines and `#` comments are ignored.

use crate::field::Field;
use crate::ground::GroundSet;
use crate::space::VSpace;
use crate::SpaceError;

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_matrix(text: &str) -> Result<VSpace, SpaceError> {
    let mut lines = meaningful(text);
    let err = |line: usize, msg: &str| SpaceError::Parse { line, msg: msg.to_string() };

    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty matrix file"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let field = match words.as_slice() {
        ["field", "rational"] => Field::Rational,
        ["field", "gf", p] => Field::gf(p.parse().map_err(|_| err(ln, "bad modulus"))?)?,
        _ => return Err(err(ln, "expected `field rational` or `field gf <p>`")),
    };

    let (ln, cols_line) = lines.next().ok_or_else(|| err(ln, "missing cols line"))?;
    let rest = cols_line.strip_prefix("cols").ok_or_else(|| err(ln, "expected `cols ...`"))?;
    let cols = GroundSet::parse_list(rest)?;

    let mut rows = Vec::new();
    for (ln, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| field.parse(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(ln, &e.to_string()))?;
        if row.len() != cols.len() {
            return Err(err(ln, &format!("row has {} entries, expected {}", row.len(), cols.len())));
        }
        rows.push(row);
    }
    VSpace::new(field, cols, rows)
}

/// Canonical text; parsing it back gives an equal space.
pub fn write_matrix(v: &VSpace) -> String {
    let f = v.field();
    let mut out = format!("field {f}\ncols {}\n", v.columns());
    for row in v.basis_matrix() {
        let toks: Vec<String> = row.iter().map(|x| f.format(x)).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_rational() {
        let text = "field rational\ncols a b c\n2 4 1\n# comment\n1 2 1/3\n";
        let v = parse_matrix(text).unwrap();
        assert_eq!(v.rank(), 2);
        let again = parse_matrix(&write_matrix(&v)).unwrap();
        assert_eq!(again, v);
        assert_eq!(write_matrix(&again), write_matrix(&v));
    }

    #[test]
    fn round_trip_gf() {
        let v = parse_matrix("field gf 5\ncols x y\n1 3\n").unwrap();
        assert_eq!(parse_matrix(&write_matrix(&v)).unwrap(), v);
    }

    #[test]
    fn parse_errors_carry_lines() {
        match parse_matrix("field rational\ncols a b\n1 2 3\n") {
            Err(SpaceError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_matrix("field gf 4\ncols a\n").is_err());
    }
}

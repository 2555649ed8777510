//! Plain-text parsing and serialization for arrangements, multigraphs, and
//! parking vectors.
//!
//! Both file formats are line oriented: `#` starts a comment, blank lines
//! are ignored, and the first content line is a header (`arrangement <n>` or
//! `multigraph <n>`). Indices are 1-based. Rationals read and write as
//! `num` or `num/den` in lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, Signed, Zero};

use crate::types::{Arrangement, Hyperplane, Multigraph, ParkVec, Rational};

/// A parse failure, with the 1-based line it occurred on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonPositiveConstant,
    NegativeValue,
    SelfLoop(usize),
    IndexOutOfRange { index: usize, n: usize },
    DuplicateHyperplane,
    DuplicateEdge,
}

impl ParseError {
    fn new(line: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line, kind }
    }

    fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(line, ParseErrorKind::Syntax(msg.into()))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::NonPositiveConstant => {
                write!(f, "hyperplane constant must be positive")
            }
            ParseErrorKind::NegativeValue => write!(f, "values must be non-negative"),
            ParseErrorKind::SelfLoop(i) => write!(f, "self-loop at vertex {i}"),
            ParseErrorKind::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range 1..={n}")
            }
            ParseErrorKind::DuplicateHyperplane => write!(f, "duplicate hyperplane"),
            ParseErrorKind::DuplicateEdge => write!(f, "duplicate edge"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Content lines with comments stripped, paired with original line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((idx + 1, stripped))
        }
    })
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<usize, ParseError> {
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| ParseError::syntax(1, format!("missing '{keyword} <n>' header")))?;
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(word) if word == keyword => {}
        Some(word) => {
            return Err(ParseError::syntax(
                line_no,
                format!("expected header '{keyword} <n>', found '{word}'"),
            ))
        }
        None => unreachable!("content lines are non-empty"),
    }
    let n: usize = tokens
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, "header is missing the vertex count"))?
        .parse()
        .map_err(|_| ParseError::syntax(line_no, "vertex count must be a positive integer"))?;
    if n == 0 {
        return Err(ParseError::syntax(line_no, "vertex count must be positive"));
    }
    if tokens.next().is_some() {
        return Err(ParseError::syntax(line_no, "trailing tokens after header"));
    }
    Ok(n)
}

fn parse_index(token: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let index: usize = token
        .parse()
        .map_err(|_| ParseError::syntax(line, format!("invalid vertex index '{token}'")))?;
    if index == 0 || index > n {
        return Err(ParseError::new(
            line,
            ParseErrorKind::IndexOutOfRange { index, n },
        ));
    }
    Ok(index)
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, ParseError> {
    let (numer, denom) = match token.split_once('/') {
        Some((numer, denom)) => (numer, Some(denom)),
        None => (token, None),
    };
    let numer = BigInt::from_str(numer)
        .map_err(|_| ParseError::syntax(line, format!("invalid rational '{token}'")))?;
    let denom = match denom {
        Some(denom) => BigInt::from_str(denom)
            .map_err(|_| ParseError::syntax(line, format!("invalid rational '{token}'")))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(ParseError::syntax(
            line,
            format!("zero denominator in '{token}'"),
        ));
    }
    Ok(Rational::new(numer, denom))
}

/// Parses an arrangement file: header `arrangement <n>`, then one
/// `<p> <q> <a>` line per hyperplane with `a` a positive rational.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "arrangement")?;

    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ParseError::syntax(
                line_no,
                format!("expected '<p> <q> <a>', found {} tokens", tokens.len()),
            ));
        }
        let p = parse_index(tokens[0], line_no, n)?;
        let q = parse_index(tokens[1], line_no, n)?;
        if p == q {
            return Err(ParseError::syntax(
                line_no,
                format!("hyperplane vertices must differ, got {p} and {q}"),
            ));
        }
        let a = parse_rational(tokens[2], line_no)?;
        if !a.is_positive() {
            return Err(ParseError::new(line_no, ParseErrorKind::NonPositiveConstant));
        }
        let h = Hyperplane::canonical(p, q, a).expect("validated above");
        if hyperplanes.contains(&h) {
            return Err(ParseError::new(line_no, ParseErrorKind::DuplicateHyperplane));
        }
        hyperplanes.push(h);
    }
    Ok(Arrangement::new(n, hyperplanes).expect("entries validated line by line"))
}

/// Canonical text for an arrangement; inverse of [`parse_arrangement`].
pub fn write_arrangement(arr: &Arrangement) -> String {
    let mut out = format!("arrangement {}\n", arr.n());
    for h in arr.hyperplanes() {
        out.push_str(&format!("{} {} {}\n", h.p(), h.q(), h.constant()));
    }
    out
}

/// Parses a multigraph file: header `multigraph <n>`, then one
/// `<i> <j> <m>` line per edge class with `m >= 1`. Omitted pairs have
/// multiplicity zero.
pub fn parse_multigraph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "multigraph")?;
    let mut g = Multigraph::new(n).expect("n validated positive");

    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ParseError::syntax(
                line_no,
                format!("expected '<i> <j> <m>', found {} tokens", tokens.len()),
            ));
        }
        let i = parse_index(tokens[0], line_no, n)?;
        let j = parse_index(tokens[1], line_no, n)?;
        if i == j {
            return Err(ParseError::new(line_no, ParseErrorKind::SelfLoop(i)));
        }
        let m: u64 = tokens[2]
            .parse()
            .map_err(|_| ParseError::syntax(line_no, format!("invalid multiplicity '{}'", tokens[2])))?;
        if m == 0 {
            return Err(ParseError::syntax(line_no, "multiplicity must be at least 1"));
        }
        if g.multiplicity(i, j) != 0 {
            return Err(ParseError::new(line_no, ParseErrorKind::DuplicateEdge));
        }
        g.set_multiplicity(i, j, m).expect("indices validated");
    }
    Ok(g)
}

/// Canonical text for a multigraph; inverse of [`parse_multigraph`]. Edges
/// are written in row-major order; zero multiplicities are omitted.
pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("multigraph {}\n", g.n());
    for i in 1..=g.n() {
        for j in 1..=g.n() {
            let m = g.multiplicity(i, j);
            if m > 0 {
                out.push_str(&format!("{i} {j} {m}\n"));
            }
        }
    }
    out
}

/// Parses a comma-separated list of non-negative integers, e.g. `2,1,0`.
pub fn parse_parkvec(text: &str) -> Result<ParkVec, ParseError> {
    let mut values = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(ParseError::syntax(1, "empty value in list"));
        }
        let signed: i128 = token
            .parse()
            .map_err(|_| ParseError::syntax(1, format!("invalid value '{token}'")))?;
        if signed < 0 {
            return Err(ParseError::new(1, ParseErrorKind::NegativeValue));
        }
        values.push(signed as u64);
    }
    Ok(ParkVec::from_values(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{from_multigraph, multigraph_of};

    #[test]
    fn parse_cycle_arrangement() {
        let text = "arrangement 3\n1 2 1/2\n2 3 1/2\n3 1 1/2\n";
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.n(), 3);
        assert_eq!(arr.hyperplane_count(), 3);
        assert_eq!(write_arrangement(&arr), text);
    }

    #[test]
    fn parse_arrangement_with_comments_and_blanks() {
        let text = "# the oriented triangle\narrangement 3\n\n1 2 1/2  # first\n2 3 1/2\n3 1 1/2\n";
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.hyperplane_count(), 3);
    }

    #[test]
    fn zero_constant_is_rejected() {
        let err = parse_arrangement("arrangement 2\n1 2 0\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonPositiveConstant);
        assert_eq!(err.line, 2);
        let err = parse_arrangement("arrangement 2\n1 2 -1/2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonPositiveConstant);
    }

    #[test]
    fn duplicate_hyperplane_is_rejected() {
        let err = parse_arrangement("arrangement 3\n1 2 1/2\n1 2 1/2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateHyperplane);
        assert_eq!(err.line, 3);
        // The same value written differently is still a duplicate.
        let err = parse_arrangement("arrangement 3\n1 2 1/2\n1 2 2/4\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateHyperplane);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let err = parse_arrangement("arrangement 3\n1 4 1/2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::IndexOutOfRange { index: 4, n: 3 });
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_arrangement("arrangement 3\n1 2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        let err = parse_arrangement("multigraph 3\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        let err = parse_arrangement("arrangement 3\n1 2 x\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn parse_cycle_multigraph() {
        let text = "multigraph 3\n1 2 1\n2 3 1\n3 1 1\n";
        let g = parse_multigraph(text).unwrap();
        assert_eq!(g.multiplicity(1, 2), 1);
        assert_eq!(g.multiplicity(2, 1), 0);
        assert_eq!(write_multigraph(&g), text);
    }

    #[test]
    fn self_loop_is_rejected() {
        let err = parse_multigraph("multigraph 3\n1 1 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::SelfLoop(1));
    }

    #[test]
    fn empty_multigraph_parses() {
        let g = parse_multigraph("multigraph 2\n").unwrap();
        assert!(g.is_edgeless());
        assert_eq!(g.n(), 2);
    }

    #[test]
    fn duplicate_edge_line_is_rejected() {
        let err = parse_multigraph("multigraph 3\n1 2 1\n1 2 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge);
    }

    #[test]
    fn zero_multiplicity_line_is_rejected() {
        let err = parse_multigraph("multigraph 3\n1 2 0\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn parkvec_parsing() {
        assert_eq!(
            parse_parkvec("2,1,0").unwrap(),
            ParkVec::from_values(vec![2, 1, 0])
        );
        assert_eq!(
            parse_parkvec("0,0,0").unwrap(),
            ParkVec::from_values(vec![0, 0, 0])
        );
        assert_eq!(
            parse_parkvec("1,-1").unwrap_err().kind,
            ParseErrorKind::NegativeValue
        );
        assert!(matches!(
            parse_parkvec("1,,2").unwrap_err().kind,
            ParseErrorKind::Syntax(_)
        ));
    }

    #[test]
    fn rationals_are_rewritten_in_lowest_terms() {
        let arr = parse_arrangement("arrangement 2\n1 2 6/4\n2 1 4/2\n").unwrap();
        assert_eq!(write_arrangement(&arr), "arrangement 2\n1 2 3/2\n2 1 2\n");
    }

    #[test]
    fn multigraph_value_round_trip() {
        let mut g = Multigraph::new(4).unwrap();
        g.set_multiplicity(1, 3, 2).unwrap();
        g.set_multiplicity(4, 2, 5).unwrap();
        assert_eq!(parse_multigraph(&write_multigraph(&g)).unwrap(), g);
    }

    #[test]
    fn arrangement_value_round_trip() {
        let mut g = Multigraph::new(3).unwrap();
        g.set_multiplicity(1, 2, 2).unwrap();
        g.set_multiplicity(3, 2, 1).unwrap();
        let arr = from_multigraph(&g);
        let round = parse_arrangement(&write_arrangement(&arr)).unwrap();
        assert_eq!(round, arr);
        assert_eq!(multigraph_of(&round), g);
    }
}

//! Text formats: polynomials, point sets and quartic spec files.

use std::fmt;

use nodal_core::families::Constituent;
use nodal_core::{
    build_family, Field, FamilyTag, HomogeneousForm, PointConfiguration, ProjectivePoint, QuarticSpec, Scalar,
};
use num_bigint::BigInt;

/// A syntax or validation problem, naming the offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub token: String,
    pub message: String,
    pub line: Option<usize>,
}

impl ParseError {
    pub fn new(token: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            token: token.into(),
            message: message.into(),
            line: None,
        }
    }

    fn at_line(mut self, line: usize) -> Self {
        self.line.get_or_insert(line);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.line {
            write!(f, "line {l}: ")?;
        }
        write!(f, "{} (offending token `{}`)", self.message, self.token)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Num(s) | Tok::Ident(s) => s.clone(),
            Tok::Sym(c) => c.to_string(),
        }
    }
}

fn tokenize(src: &str) -> ParseResult<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(ParseError::new(c.to_string(), "unexpected character in polynomial"));
        }
    }
    Ok(out)
}

fn variable_index(name: &str, num_vars: usize) -> Option<usize> {
    if num_vars == 5 {
        if let Some(i) = ["x", "y", "z", "t", "w"].iter().position(|v| *v == name) {
            return Some(i);
        }
    }
    let i: usize = name.strip_prefix('x')?.parse().ok()?;
    (i < num_vars).then_some(i)
}

/// Parse a homogeneous polynomial in `num_vars` variables over `Q`.
///
/// Variables are `x, y, z, t, w` (five variables) or `x0, x1, ...`.
pub fn parse_polynomial(src: &str, num_vars: usize) -> ParseResult<HomogeneousForm> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(ParseError::new(src, "empty polynomial"));
    }
    let field = Field::Rational;
    let mut terms: Vec<(Vec<u32>, Scalar, String)> = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = 1;
        match &toks[i] {
            Tok::Sym('+') => i += 1,
            Tok::Sym('-') => {
                sign = -1;
                i += 1;
            }
            t if !first => return Err(ParseError::new(t.text(), "expected `+` or `-` between terms")),
            _ => {}
        }
        first = false;
        let start = i;
        let mut coeff = field.int(sign);
        let mut exps = vec![0u32; num_vars];
        loop {
            let Some(tok) = toks.get(i) else {
                let last = toks.last().map(Tok::text).unwrap_or_default();
                return Err(ParseError::new(last, "polynomial ends inside a term"));
            };
            match tok {
                Tok::Num(n) => {
                    let num: BigInt = n.parse().expect("digits");
                    i += 1;
                    let den: BigInt = if toks.get(i) == Some(&Tok::Sym('/')) {
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Num(d)) => {
                                i += 1;
                                d.parse().expect("digits")
                            }
                            other => {
                                return Err(ParseError::new(
                                    other.map(Tok::text).unwrap_or_default(),
                                    "expected a denominator after `/`",
                                ))
                            }
                        }
                    } else {
                        BigInt::from(1)
                    };
                    let q = Scalar::from_ratio(field, &num, &den)
                        .map_err(|_| ParseError::new(format!("{n}/0"), "zero denominator"))?;
                    coeff = &coeff * &q;
                }
                Tok::Ident(name) => {
                    let v = variable_index(name, num_vars)
                        .ok_or_else(|| ParseError::new(name.clone(), "unknown variable"))?;
                    i += 1;
                    let mut e = 1u32;
                    if toks.get(i) == Some(&Tok::Sym('^')) {
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Num(d)) => {
                                e = d.parse().map_err(|_| ParseError::new(d.clone(), "exponent too large"))?;
                                i += 1;
                            }
                            other => {
                                return Err(ParseError::new(
                                    other.map(Tok::text).unwrap_or_default(),
                                    "expected an exponent after `^`",
                                ))
                            }
                        }
                    }
                    exps[v] += e;
                }
                other => return Err(ParseError::new(other.text(), "expected a coefficient or variable")),
            }
            if toks.get(i) == Some(&Tok::Sym('*')) {
                i += 1;
                continue;
            }
            break;
        }
        let text: String = toks[start..i].iter().map(Tok::text).collect();
        terms.push((exps, coeff, text));
    }
    let degree: u32 = terms[0].0.iter().sum();
    for (e, _, text) in &terms {
        if e.iter().sum::<u32>() != degree {
            return Err(ParseError::new(text.clone(), format!("term is not of degree {degree}")));
        }
    }
    HomogeneousForm::new(field, num_vars, degree, terms.into_iter().map(|(e, c, _)| (e, c)))
        .map_err(|e| ParseError::new(src, e.to_string()))
}

fn parse_coordinate(tok: &str) -> ParseResult<Scalar> {
    let bad = || ParseError::new(tok, "bad coordinate");
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (a, b),
        None => (tok, "1"),
    };
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    Scalar::from_ratio(Field::Rational, &num, &den).map_err(|_| ParseError::new(tok, "zero denominator"))
}

/// A point written `a:b:...` with integer or `p/q` coordinates.
pub fn parse_point(src: &str) -> ParseResult<ProjectivePoint> {
    let coords = src
        .trim()
        .split(':')
        .map(|c| parse_coordinate(c.trim()))
        .collect::<ParseResult<Vec<_>>>()?;
    if coords.len() < 2 {
        return Err(ParseError::new(src, "a point needs at least two coordinates"));
    }
    ProjectivePoint::new(coords).map_err(|e| ParseError::new(src, e.to_string()))
}

/// One point per line; `#` starts a comment line. Text after the first
/// whitespace on a point line is an annotation and is ignored.
pub fn parse_point_set(src: &str) -> ParseResult<PointConfiguration> {
    let mut pts: Vec<ProjectivePoint> = Vec::new();
    for (k, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let token = line.split_whitespace().next().expect("nonempty");
        let p = parse_point(token).map_err(|e| e.at_line(k + 1))?;
        if let Some(first) = pts.first() {
            if first.dim() != p.dim() {
                return Err(ParseError::new(token, format!("expected {} coordinates", first.dim() + 1)).at_line(k + 1));
            }
        }
        if pts.contains(&p) {
            return Err(ParseError::new(token, "repeated point").at_line(k + 1));
        }
        pts.push(p);
    }
    if pts.is_empty() {
        return Err(ParseError::new("", "no points in file"));
    }
    PointConfiguration::new(pts).map_err(|e| ParseError::new("", e.to_string()))
}

/// Linear factors written `l1; l2; ...`.
pub fn parse_factors(src: &str) -> ParseResult<Vec<HomogeneousForm>> {
    src.split(';')
        .map(|s| {
            let f = parse_polynomial(s.trim(), 5)?;
            if f.degree() != 1 {
                return Err(ParseError::new(s.trim(), "factor is not linear"));
            }
            Ok(f)
        })
        .collect()
}

/// Builds a spec from a tag, named constituents and optional factor lists.
pub fn assemble_spec(
    tag: &str,
    constituents: &[(String, String)],
    factors: &[(String, String)],
    equation: Option<&str>,
) -> ParseResult<QuarticSpec> {
    let tag: FamilyTag = tag
        .parse()
        .map_err(|_| ParseError::new(tag, "unknown family (plane, quadric, delpezzo, burkhardt, custom)"))?;
    if tag == FamilyTag::Custom {
        let eq = equation.ok_or_else(|| ParseError::new("custom", "custom family needs an equation `F = ...`"))?;
        let f = parse_polynomial(eq, 5)?;
        return QuarticSpec::custom(f).map_err(|e| ParseError::new(eq, e.to_string()));
    }
    if let Some(eq) = equation {
        return Err(ParseError::new(eq, format!("{tag} family is assembled from constituents, not an equation")));
    }
    let mut list = Vec::new();
    for (name, poly) in constituents {
        let known = tag.constituents().iter().any(|(n, _)| n == name);
        if !known {
            return Err(ParseError::new(name.clone(), format!("no constituent of that name in the {tag} family")));
        }
        let mut c = Constituent::new(name, parse_polynomial(poly, 5)?);
        if let Some((_, fs)) = factors.iter().find(|(n, _)| n == name) {
            c = c.with_factors(parse_factors(fs)?);
        }
        list.push(c);
    }
    for (name, _) in factors {
        if !constituents.iter().any(|(n, _)| n == name) {
            return Err(ParseError::new(name.clone(), "factors given for a constituent that is not set"));
        }
    }
    build_family(tag, list).map_err(|e| ParseError::new(tag.name(), e.to_string()))
}

/// Spec file: a `family <tag>` line, then `name = polynomial` and
/// `name.factors = l1; l2; ...` lines. A custom family uses `F = ...`.
pub fn parse_spec(src: &str) -> ParseResult<QuarticSpec> {
    let mut tag: Option<String> = None;
    let mut constituents = Vec::new();
    let mut factors = Vec::new();
    let mut equation: Option<String> = None;
    for (k, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("family") {
            if tag.is_some() {
                return Err(ParseError::new(line, "second family line").at_line(k + 1));
            }
            tag = Some(rest.trim().to_string());
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| ParseError::new(line, "expected `name = polynomial`").at_line(k + 1))?;
        let (lhs, rhs) = (lhs.trim().to_string(), rhs.trim().to_string());
        if let Some(name) = lhs.strip_suffix(".factors") {
            factors.push((name.to_string(), rhs));
        } else if lhs == "F" {
            equation = Some(rhs);
        } else {
            constituents.push((lhs, rhs));
        }
    }
    let tag = tag.ok_or_else(|| ParseError::new("", "missing `family <tag>` line"))?;
    assemble_spec(&tag, &constituents, &factors, equation.as_deref())
}

/// Writes a spec in the format read by [`parse_spec`].
pub fn format_spec(spec: &QuarticSpec) -> String {
    let mut out = format!("family {}\n", spec.tag);
    if spec.tag == FamilyTag::Custom {
        out.push_str(&format!("F = {}\n", spec.form));
    }
    for c in &spec.constituents {
        out.push_str(&format!("{} = {}\n", c.name, c.form));
        if let Some(fs) = &c.factors {
            let joined: Vec<String> = fs.iter().map(|l| l.to_string()).collect();
            out.push_str(&format!("{}.factors = {}\n", c.name, joined.join("; ")));
        }
    }
    out
}

pub fn format_point(p: &ProjectivePoint) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        for src in [
            "w^4 - x^3*w - y^3*w - z^3*w - t^3*w + 3*x*y*z*t",
            "1/2*x - 3/4*y + z",
            "-x^2 + y*z",
            "x0^2*x1 - 7*x2^3",
        ] {
            let nv = if src.contains("x0") { 3 } else { 5 };
            let f = parse_polynomial(src, nv).unwrap();
            let again = parse_polynomial(&f.to_string(), nv).unwrap();
            assert_eq!(f, again);
        }
    }

    #[test]
    fn polynomial_errors_name_token() {
        let e = parse_polynomial("x^2 + q*y", 5).unwrap_err();
        assert_eq!(e.token, "q");
        let e = parse_polynomial("x^2 + y", 5).unwrap_err();
        assert_eq!((e.token.as_str(), e.message.as_str()), ("y", "term is not of degree 2"));
        let e = parse_polynomial("x^2 + y*$", 5).unwrap_err();
        assert_eq!(e.token, "$");
        let e = parse_polynomial("x + 1/0*y", 5).unwrap_err();
        assert!(e.message.contains("denominator"));
    }

    #[test]
    fn points() {
        let c = parse_point_set("# grid\n0:0:1/2:-1:1   node\n\n1:2:3:4:5\n").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.points()[0].to_string(), "0:0:1:-2:2");
        let e = parse_point_set("1:2:3\n1:x:3\n").unwrap_err();
        assert_eq!((e.token.as_str(), e.line), ("x", Some(2)));
        assert!(parse_point_set("1:2:3\n2:4:6\n").is_err());
        assert!(parse_point_set("1:2:3\n1:2\n").is_err());
        assert!(parse_point_set("0:0:0\n").is_err());
    }

    #[test]
    fn spec_round_trip() {
        let src = "family plane\nh3 = z^3 - z*w^2 + x^3\ng3 = t^3 - t*w^2 + y^3\nh3.factors = z; z - w; z + w\n";
        let spec = parse_spec(src).unwrap();
        let again = parse_spec(&format_spec(&spec)).unwrap();
        assert_eq!(spec, again);
        assert!(parse_spec("family nonsense\n").is_err());
        assert!(parse_spec("family plane\nh3 = z^3\n").is_err());
    }
}

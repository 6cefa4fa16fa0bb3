//! The space-expression language: fully parenthesized constructors such as
//! `bary(2, susp(torus))`.

use std::fmt;

use thiserror::Error;

pub const MAX_SPHERE_DIM: u32 = 32;
pub const MAX_GENUS: u32 = 1000;
pub const MAX_WEIGHT: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    Sphere(u32),
    Point,
    Rp2,
    Torus,
    Surface(u32),
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Product(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Suspension(Box<SpaceExpr>),
    SymmetricProduct(u32, Box<SpaceExpr>),
    ReducedSymmetricProduct(u32, Box<SpaceExpr>),
    Barycenter(u32, Box<SpaceExpr>),
    SymJoin2(Box<SpaceExpr>),
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SpaceExpr::*;
        match self {
            Sphere(k) => write!(f, "S({k})"),
            Point => write!(f, "pt"),
            Rp2 => write!(f, "RP2"),
            Torus => write!(f, "torus"),
            Surface(g) => write!(f, "surface({g})"),
            Wedge(a, b) => write!(f, "wedge({a}, {b})"),
            Product(a, b) => write!(f, "prod({a}, {b})"),
            Smash(a, b) => write!(f, "smash({a}, {b})"),
            Suspension(a) => write!(f, "susp({a})"),
            SymmetricProduct(n, a) => write!(f, "sp({n}, {a})"),
            ReducedSymmetricProduct(n, a) => write!(f, "rsp({n}, {a})"),
            Barycenter(n, a) => write!(f, "bary({n}, {a})"),
            SymJoin2(a) => write!(f, "symjoin2({a})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorCode {
    UnexpectedCharacter,
    UnknownConstructor,
    ArityMismatch,
    OutOfRange,
    ExpectedInteger,
    ExpectedSpace,
    TrailingInput,
    UnexpectedEnd,
    Syntax,
}

impl ErrorCode {
    pub fn code(self) -> &'static str {
        match self {
            ErrorCode::UnexpectedCharacter => "E001",
            ErrorCode::UnknownConstructor => "E002",
            ErrorCode::ArityMismatch => "E003",
            ErrorCode::OutOfRange => "E004",
            ErrorCode::ExpectedInteger => "E005",
            ErrorCode::ExpectedSpace => "E006",
            ErrorCode::TrailingInput => "E007",
            ErrorCode::UnexpectedEnd => "E008",
            ErrorCode::Syntax => "E009",
        }
    }
}

/// A parse failure at byte `offset` of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("error[{}] at byte {offset}: {message}", code.code())]
pub struct ParseError {
    pub code: ErrorCode,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(code: ErrorCode, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            code,
            offset,
            message: message.into(),
        }
    }

    /// The message followed by the input with a caret under the offending
    /// byte.
    pub fn render(&self, input: &str) -> String {
        let col = input[..self.offset.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(col))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(i128),
    LParen,
    RParen,
    Comma,
    End,
}

fn describe(t: &Token) -> String {
    match t {
        Token::Ident(s) => format!("`{s}`"),
        Token::Int(v) => format!("`{v}`"),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
        Token::Comma => "`,`".into(),
        Token::End => "end of input".into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => out.push((Token::LParen, start)),
            b')' => out.push((Token::RParen, start)),
            b',' => out.push((Token::Comma, start)),
            b'-' | b'0'..=b'9' => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                if text == "-" {
                    return Err(ParseError::new(ErrorCode::UnexpectedCharacter, start, "`-` must be followed by digits"));
                }
                // more digits than fit are out of range anyway
                let v = text.parse::<i128>().unwrap_or(i128::MAX);
                out.push((Token::Int(v), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(input[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = input[start..].chars().next().unwrap();
                return Err(ParseError::new(
                    ErrorCode::UnexpectedCharacter,
                    start,
                    format!("unexpected character `{ch}`"),
                ));
            }
        }
        i += 1;
    }
    out.push((Token::End, input.len()));
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Param {
    /// integer in `lo..=hi`, with the name used in diagnostics
    Int(&'static str, u32, u32),
    Space,
}

fn signature(name: &str) -> Option<&'static [Param]> {
    use Param::*;
    const SPHERE: &[Param] = &[Int("sphere dimension", 1, MAX_SPHERE_DIM)];
    const GENUS: &[Param] = &[Int("genus", 0, MAX_GENUS)];
    const NONE: &[Param] = &[];
    const ONE: &[Param] = &[Space];
    const TWO: &[Param] = &[Space, Space];
    const WEIGHTED: &[Param] = &[Int("n", 1, MAX_WEIGHT), Space];
    Some(match name {
        "S" => SPHERE,
        "pt" | "RP2" | "torus" => NONE,
        "surface" => GENUS,
        "wedge" | "prod" | "smash" => TWO,
        "susp" | "symjoin2" => ONE,
        "sp" | "rsp" | "bary" => WEIGHTED,
        _ => return None,
    })
}

const CONSTRUCTORS: &str = "S, pt, RP2, torus, surface, wedge, prod, smash, susp, sp, rsp, bary, symjoin2";

enum Arg {
    Int(i128, usize),
    Space(SpaceExpr, usize),
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Token, usize) {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if t.0 != Token::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let (t, at) = self.peek();
        let code = if *t == Token::End {
            ErrorCode::UnexpectedEnd
        } else {
            ErrorCode::Syntax
        };
        ParseError::new(code, *at, format!("expected {what}, found {}", describe(t)))
    }

    fn expr(&mut self) -> Result<SpaceExpr, ParseError> {
        let (tok, at) = self.peek().clone();
        let name = match tok {
            Token::Ident(name) => name,
            Token::Int(_) => {
                return Err(ParseError::new(ErrorCode::ExpectedSpace, at, "expected a space, found an integer"));
            }
            _ => return Err(self.unexpected("a space constructor")),
        };
        let params = signature(&name).ok_or_else(|| {
            ParseError::new(
                ErrorCode::UnknownConstructor,
                at,
                format!("unknown constructor `{name}` (known: {CONSTRUCTORS})"),
            )
        })?;
        self.next();
        let (args, close) = if self.peek().0 == Token::LParen {
            self.next();
            self.args()?
        } else {
            (Vec::new(), at)
        };
        if args.len() != params.len() {
            let at = args.get(params.len()).map_or(if args.is_empty() { at } else { close }, |a| match a {
                Arg::Int(_, o) | Arg::Space(_, o) => *o,
            });
            return Err(ParseError::new(
                ErrorCode::ArityMismatch,
                at,
                format!("`{name}` takes {} argument(s), got {}", params.len(), args.len()),
            ));
        }
        let mut ints = Vec::new();
        let mut spaces = Vec::new();
        for (param, arg) in params.iter().zip(args) {
            match (param, arg) {
                (Param::Int(what, lo, hi), Arg::Int(v, o)) => {
                    if v < *lo as i128 || v > *hi as i128 {
                        let message = if v < *lo as i128 {
                            format!("{what} must be at least {lo}, got {v}")
                        } else {
                            format!("{what} must be at most {hi}, got {v}")
                        };
                        return Err(ParseError::new(ErrorCode::OutOfRange, o, message));
                    }
                    ints.push(v as u32);
                }
                (Param::Int(what, ..), Arg::Space(_, o)) => {
                    return Err(ParseError::new(ErrorCode::ExpectedInteger, o, format!("expected an integer {what}")));
                }
                (Param::Space, Arg::Space(e, _)) => spaces.push(e),
                (Param::Space, Arg::Int(_, o)) => {
                    return Err(ParseError::new(ErrorCode::ExpectedSpace, o, "expected a space, found an integer"));
                }
            }
        }
        let mut spaces = spaces.into_iter().map(Box::new);
        let mut sp = || spaces.next().unwrap();
        use SpaceExpr::*;
        Ok(match name.as_str() {
            "S" => Sphere(ints[0]),
            "pt" => Point,
            "RP2" => Rp2,
            "torus" => Torus,
            "surface" => Surface(ints[0]),
            "wedge" => Wedge(sp(), sp()),
            "prod" => Product(sp(), sp()),
            "smash" => Smash(sp(), sp()),
            "susp" => Suspension(sp()),
            "symjoin2" => SymJoin2(sp()),
            "sp" => SymmetricProduct(ints[0], sp()),
            "rsp" => ReducedSymmetricProduct(ints[0], sp()),
            "bary" => Barycenter(ints[0], sp()),
            _ => unreachable!("signature table and constructor table disagree"),
        })
    }

    /// Arguments after `(`, through the matching `)`; also returns the
    /// offset of the `)`.
    fn args(&mut self) -> Result<(Vec<Arg>, usize), ParseError> {
        let mut args = Vec::new();
        if let (Token::RParen, at) = self.peek().clone() {
            self.next();
            return Ok((args, at));
        }
        loop {
            let (tok, at) = self.peek().clone();
            match tok {
                Token::Int(v) => {
                    self.next();
                    args.push(Arg::Int(v, at));
                }
                Token::Ident(_) => args.push(Arg::Space(self.expr()?, at)),
                _ => return Err(self.unexpected("an argument")),
            }
            match self.peek().clone() {
                (Token::Comma, _) => {
                    self.next();
                }
                (Token::RParen, at) => {
                    self.next();
                    return Ok((args, at));
                }
                _ => return Err(self.unexpected("`,` or `)`")),
            }
        }
    }
}

/// Parses a space expression.
pub fn parse(input: &str) -> Result<SpaceExpr, ParseError> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        (Token::End, _) => Ok(e),
        (t, at) => Err(ParseError::new(
            ErrorCode::TrailingInput,
            *at,
            format!("unexpected {} after a complete expression", describe(t)),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpaceExpr::*;

    #[test]
    fn examples() {
        assert_eq!(parse("bary(2, S(1))").unwrap(), Barycenter(2, Box::new(Sphere(1))));
        assert_eq!(
            parse("rsp(3, susp(torus))").unwrap(),
            ReducedSymmetricProduct(3, Box::new(Suspension(Box::new(Torus))))
        );
        assert_eq!(parse("  wedge( S(1) ,S(2))\n").unwrap().to_string(), "wedge(S(1), S(2))");
        assert_eq!(parse("pt()").unwrap(), Point);
    }

    fn err(input: &str) -> ParseError {
        parse(input).unwrap_err()
    }

    #[test]
    fn diagnostics() {
        let e = err("bary(0, S(1))");
        assert_eq!((e.code, e.offset), (ErrorCode::OutOfRange, 5));
        assert!(e.message.contains("n must be"));
        let e = err("foo(1)");
        assert_eq!((e.code, e.offset), (ErrorCode::UnknownConstructor, 0));
        let e = err("wedge(S(1))");
        assert_eq!((e.code, e.offset), (ErrorCode::ArityMismatch, 10));
        let e = err("wedge(S(1), S(2), pt)");
        assert_eq!((e.code, e.offset), (ErrorCode::ArityMismatch, 18));
        let e = err("S");
        assert_eq!((e.code, e.offset), (ErrorCode::ArityMismatch, 0));
        let e = err("susp(3)");
        assert_eq!((e.code, e.offset), (ErrorCode::ExpectedSpace, 5));
        let e = err("sp(torus, torus)");
        assert_eq!((e.code, e.offset), (ErrorCode::ExpectedInteger, 3));
        let e = err("S(1) S(2)");
        assert_eq!((e.code, e.offset), (ErrorCode::TrailingInput, 5));
        let e = err("susp(S(1)");
        assert_eq!((e.code, e.offset), (ErrorCode::UnexpectedEnd, 9));
        let e = err("S(1]");
        assert_eq!((e.code, e.offset), (ErrorCode::UnexpectedCharacter, 3));
        let e = err("S(-2)");
        assert_eq!((e.code, e.offset), (ErrorCode::OutOfRange, 2));
        let e = err("S(99999999999999999999999999999999999999999)");
        assert_eq!(e.code, ErrorCode::OutOfRange);
        let e = err("wedge(S(1) S(2))");
        assert_eq!((e.code, e.offset), (ErrorCode::Syntax, 11));
        let e = err("");
        assert_eq!((e.code, e.offset), (ErrorCode::UnexpectedEnd, 0));
    }

    #[test]
    fn codes_are_distinct() {
        use ErrorCode::*;
        let all = [
            UnexpectedCharacter,
            UnknownConstructor,
            ArityMismatch,
            OutOfRange,
            ExpectedInteger,
            ExpectedSpace,
            TrailingInput,
            UnexpectedEnd,
            Syntax,
        ];
        let mut codes: Vec<&str> = all.iter().map(|c| c.code()).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }

    #[test]
    fn render_points_at_the_offset() {
        let input = "bary(0, S(1))";
        let text = parse(input).unwrap_err().render(input);
        assert!(text.ends_with("\n       ^"), "{text}");
    }
}

//! Textual notation for segments, multisegments, and products, plus the
//! universe configuration format.
//!
//! Expression grammar (whitespace-insensitive):
//!
//! ```text
//! rep    := "(" mseg ")" ( "*" "(" mseg ")" )*  |  mseg
//! mseg   := "empty"  |  seg ( ("+" | ",") seg )*  [ "@@" line ]
//! seg    := "[" num [ "," num ] "]" [ "@" line ]
//! line   := ident ( "!chi" )*
//! num    := [ "-" ] digits [ "/2" ]
//! ```
//!
//! A point segment `[c]` abbreviates `[c,c]`. A trailing `@@line` directive
//! supplies the line for every segment written without one. Only halves are
//! accepted as exponents (`1/3` is rejected). The empty multisegment is
//! written `empty`.
//!
//! Formatting always emits the canonical order with explicit lines, so
//! `parse ∘ format` is the identity and `format ∘ parse` is idempotent.
//!
//! The universe file is JSON:
//!
//! ```json
//! {"lines": [
//!   {"id": "one", "deg": 1, "conj_dual": "self", "eta0": 1, "dist_a": 0},
//!   {"id": "pi3", "deg": 3, "conj_dual": {"partner": "pi3b"}},
//!   {"id": "pi3b", "deg": 3, "conj_dual": {"partner": "pi3"}}
//! ]}
//! ```
//!
//! `eta0` and `dist_a` are required on self-dual lines and forbidden on
//! partnered ones. Declared ids must not contain `!`; the `!chi` suffix is
//! reserved for derived twisted lines.

use serde::Deserialize;
use thiserror::Error;

use crate::model::{
    HalfInt, LineId, LineSpec, ModelError, MultiSegment, RepSpec, Segment, Sign, Universe,
    UniverseError,
};

/// Byte range into the input text, `start ≤ end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    fn new(start: usize, end: usize) -> Self {
        SourceSpan { start, end }
    }
}

/// Errors from parsing expressions or universe files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at {}..{}: {message}", span.start, span.end)]
    Syntax { span: SourceSpan, message: String },
    #[error("unknown line `{id}` at {}..{}", span.start, span.end)]
    UnknownLine { span: SourceSpan, id: String },
    #[error("empty segment at {}..{}: beginning {b} exceeds end {e}", span.start, span.end)]
    EmptySegment {
        span: SourceSpan,
        b: HalfInt,
        e: HalfInt,
    },
    #[error("lattice mismatch at {}..{}: {b} and {e} differ by a non-integer", span.start, span.end)]
    LatticeMismatch {
        span: SourceSpan,
        b: HalfInt,
        e: HalfInt,
    },
    #[error("empty factor at {}..{}", span.start, span.end)]
    EmptyFactor { span: SourceSpan },
    #[error("universe schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("inconsistent partner declaration between `{a}` and `{b}`")]
    InconsistentPartners { a: String, b: String },
}

impl DslError {
    /// The source span of the error, when it points into expression text.
    pub fn span(&self) -> Option<SourceSpan> {
        match self {
            DslError::Syntax { span, .. }
            | DslError::UnknownLine { span, .. }
            | DslError::EmptySegment { span, .. }
            | DslError::LatticeMismatch { span, .. }
            | DslError::EmptyFactor { span } => Some(*span),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

pub fn parse_multisegment(text: &str, universe: &Universe) -> Result<MultiSegment, DslError> {
    Parser::new(text, Some(universe)).run_multisegment()
}

/// Parses without checking lines against a universe (any symbol accepted).
pub fn parse_multisegment_any_line(text: &str) -> Result<MultiSegment, DslError> {
    Parser::new(text, None).run_multisegment()
}

pub fn parse_rep(text: &str, universe: &Universe) -> Result<RepSpec, DslError> {
    Parser::new(text, Some(universe)).run_rep().map(|r| r.0)
}

pub fn parse_rep_any_line(text: &str) -> Result<RepSpec, DslError> {
    Parser::new(text, None).run_rep().map(|r| r.0)
}

/// Parses a product, also reporting whether the input used parentheses
/// (a bare multisegment parses as a one-factor product).
pub fn parse_rep_detailed(
    text: &str,
    universe: Option<&Universe>,
) -> Result<(RepSpec, bool), DslError> {
    Parser::new(text, universe).run_rep()
}

pub fn format_multisegment(m: &MultiSegment) -> String {
    m.to_string()
}

pub fn format_rep(r: &RepSpec) -> String {
    r.to_string()
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    universe: Option<&'a Universe>,
}

/// A segment as written, before the default line is applied.
struct RawSeg {
    b: HalfInt,
    e: HalfInt,
    line: Option<LineId>,
    span: SourceSpan,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, universe: Option<&'a Universe>) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            universe,
        }
    }

    fn run_multisegment(mut self) -> Result<MultiSegment, DslError> {
        let m = self.multisegment()?;
        self.expect_end()?;
        Ok(m)
    }

    fn run_rep(mut self) -> Result<(RepSpec, bool), DslError> {
        self.skip_ws();
        let parenthesized = self.peek() == Some(b'(');
        let rep = if parenthesized {
            let mut factors = Vec::new();
            loop {
                let open = self.pos;
                self.expect(b'(')?;
                self.skip_ws();
                let factor_start = self.pos;
                let m = self.multisegment()?;
                let factor_end = self.pos;
                self.expect(b')')?;
                if m.is_empty() {
                    return Err(DslError::EmptyFactor {
                        span: SourceSpan::new(factor_start.min(open + 1), factor_end),
                    });
                }
                factors.push(m);
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                } else {
                    break;
                }
            }
            RepSpec::new(factors).expect("factors checked nonempty above")
        } else {
            let start = self.pos;
            let m = self.multisegment()?;
            let end = self.pos;
            if m.is_empty() {
                return Err(DslError::EmptyFactor {
                    span: SourceSpan::new(start, end),
                });
            }
            RepSpec::new(vec![m]).expect("nonempty")
        };
        self.expect_end()?;
        Ok((rep, parenthesized))
    }

    /// Parses one multisegment, stopping before `)` or end of input.
    fn multisegment(&mut self) -> Result<MultiSegment, DslError> {
        self.skip_ws();
        if self.keyword("empty") {
            return Ok(MultiSegment::empty());
        }
        let mut raw: Vec<RawSeg> = Vec::new();
        let mut default_line: Option<LineId> = None;
        loop {
            raw.push(self.segment()?);
            self.skip_ws();
            match self.peek() {
                Some(b'+') | Some(b',') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'@') if self.peek_at(1) == Some(b'@') => {
                    self.pos += 2;
                    let (id, _span) = self.line_symbol()?;
                    default_line = Some(id);
                    self.skip_ws();
                    break;
                }
                _ => break,
            }
        }
        let mut segs = Vec::with_capacity(raw.len());
        for rs in raw {
            let line = match rs.line.or_else(|| default_line.clone()) {
                Some(l) => l,
                None => {
                    return Err(DslError::Syntax {
                        span: rs.span,
                        message: "segment has no line: add `@line` or a trailing `@@line`"
                            .to_string(),
                    })
                }
            };
            if let Some(u) = self.universe {
                if !u.contains(&line) {
                    return Err(DslError::UnknownLine {
                        span: rs.span,
                        id: line.to_string(),
                    });
                }
            }
            let seg = Segment::new(line, rs.b, rs.e).map_err(|err| match err {
                ModelError::EmptySegment { b, e } => DslError::EmptySegment {
                    span: rs.span,
                    b,
                    e,
                },
                ModelError::LatticeMismatch { b, e } => DslError::LatticeMismatch {
                    span: rs.span,
                    b,
                    e,
                },
                other => DslError::Syntax {
                    span: rs.span,
                    message: other.to_string(),
                },
            })?;
            segs.push(seg);
        }
        Ok(MultiSegment::new(segs))
    }

    fn segment(&mut self) -> Result<RawSeg, DslError> {
        self.skip_ws();
        let start = self.pos;
        self.expect(b'[')?;
        self.skip_ws();
        let b = self.number()?;
        self.skip_ws();
        let e = if self.peek() == Some(b',') {
            self.pos += 1;
            self.skip_ws();
            let e = self.number()?;
            self.skip_ws();
            e
        } else {
            b
        };
        self.expect(b']')?;
        let line = if self.peek() == Some(b'@') && self.peek_at(1) != Some(b'@') {
            self.pos += 1;
            let (id, _span) = self.line_symbol()?;
            Some(id)
        } else {
            None
        };
        let span = SourceSpan::new(start, self.pos);
        Ok(RawSeg { b, e, line, span })
    }

    fn number(&mut self) -> Result<HalfInt, DslError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(DslError::Syntax {
                span: SourceSpan::new(start, self.pos + 1),
                message: "expected a number".to_string(),
            });
        }
        let numerator: i64 = self.text[start..self.pos]
            .parse()
            .map_err(|_| DslError::Syntax {
                span: SourceSpan::new(start, self.pos),
                message: "number out of range".to_string(),
            })?;
        let mut doubled = numerator.checked_mul(2);
        if self.peek() == Some(b'/') {
            let denom_start = self.pos;
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if &self.text[denom_start..self.pos] != "/2" {
                return Err(DslError::Syntax {
                    span: SourceSpan::new(denom_start, self.pos),
                    message: "denominator must be 2".to_string(),
                });
            }
            doubled = Some(numerator);
        }
        let doubled =
            doubled
                .and_then(|d| i32::try_from(d).ok())
                .ok_or_else(|| DslError::Syntax {
                    span: SourceSpan::new(start, self.pos),
                    message: "number out of range".to_string(),
                })?;
        Ok(HalfInt::from_doubled(doubled))
    }

    fn line_symbol(&mut self) -> Result<(LineId, SourceSpan), DslError> {
        let start = self.pos;
        if !self
            .peek()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == b'_')
        {
            return Err(DslError::Syntax {
                span: SourceSpan::new(start, start + 1),
                message: "expected a line identifier".to_string(),
            });
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        let mut twisted = false;
        while self.peek() == Some(b'!') {
            let bang = self.pos;
            self.pos += 1;
            let suffix_start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                self.pos += 1;
            }
            if &self.text[suffix_start..self.pos] != "chi" {
                return Err(DslError::Syntax {
                    span: SourceSpan::new(bang, self.pos.max(bang + 1)),
                    message: "only the `!chi` twist suffix is recognized".to_string(),
                });
            }
            twisted = !twisted;
        }
        let span = SourceSpan::new(start, self.pos);
        let base_end = self.text[start..self.pos]
            .find('!')
            .map_or(self.pos, |i| start + i);
        let mut id = LineId::new(&self.text[start..base_end]);
        if twisted {
            id = id.chi_twist();
        }
        Ok((id, span))
    }

    fn keyword(&mut self, word: &str) -> bool {
        let end = self.pos + word.len();
        if self.text.len() >= end && &self.text[self.pos..end] == word {
            // The keyword must not continue as an identifier.
            let next = self.bytes.get(end);
            if !next.is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                self.pos = end;
                return true;
            }
        }
        false
    }

    fn expect(&mut self, byte: u8) -> Result<(), DslError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(DslError::Syntax {
                span: SourceSpan::new(self.pos, (self.pos + 1).min(self.text.len().max(1))),
                message: format!("expected `{}`", byte as char),
            })
        }
    }

    fn expect_end(&mut self) -> Result<(), DslError> {
        self.skip_ws();
        if self.pos < self.text.len() {
            Err(DslError::Syntax {
                span: SourceSpan::new(self.pos, self.text.len()),
                message: "unexpected trailing input".to_string(),
            })
        } else {
            Ok(())
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }
}

// ---------------------------------------------------------------------------
// Universe files
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUniverse {
    lines: Vec<RawLine>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLine {
    id: String,
    deg: u32,
    conj_dual: RawConjDual,
    #[serde(default)]
    eta0: Option<i8>,
    #[serde(default)]
    dist_a: Option<u8>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawConjDual {
    Keyword(String),
    Partner { partner: String },
}

/// Parses and validates a universe file.
pub fn parse_universe(json: &str) -> Result<Universe, DslError> {
    let raw: RawUniverse = serde_json::from_str(json).map_err(|e| DslError::Schema {
        path: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;

    let mut specs = Vec::with_capacity(raw.lines.len());
    for (i, line) in raw.lines.iter().enumerate() {
        let path = |field: &str| format!("lines[{i}].{field}");
        if line.id.is_empty() || line.id.contains('!') {
            return Err(DslError::Schema {
                path: path("id"),
                message: format!(
                    "`{}` is not a valid declared id (nonempty, `!` reserved for twists)",
                    line.id
                ),
            });
        }
        if line.deg == 0 {
            return Err(DslError::Schema {
                path: path("deg"),
                message: "degree must be positive".to_string(),
            });
        }
        let duality = match &line.conj_dual {
            RawConjDual::Keyword(word) if word == "self" => {
                let eta0 = match line.eta0 {
                    Some(v) => Sign::from_i8(v).ok_or_else(|| DslError::Schema {
                        path: path("eta0"),
                        message: format!("expected 1 or -1, got {v}"),
                    })?,
                    None => {
                        return Err(DslError::Schema {
                            path: path("eta0"),
                            message: "required on a self-dual line".to_string(),
                        })
                    }
                };
                let dist_a = match line.dist_a {
                    Some(v @ (0 | 1)) => v,
                    Some(v) => {
                        return Err(DslError::Schema {
                            path: path("dist_a"),
                            message: format!("expected 0 or 1, got {v}"),
                        })
                    }
                    None => {
                        return Err(DslError::Schema {
                            path: path("dist_a"),
                            message: "required on a self-dual line".to_string(),
                        })
                    }
                };
                crate::model::Duality::SelfDual { eta0, dist_a }
            }
            RawConjDual::Keyword(word) => {
                return Err(DslError::Schema {
                    path: path("conj_dual"),
                    message: format!("expected \"self\" or {{\"partner\": id}}, got `{word}`"),
                })
            }
            RawConjDual::Partner { partner } => {
                if line.eta0.is_some() {
                    return Err(DslError::Schema {
                        path: path("eta0"),
                        message: "only allowed on self-dual lines".to_string(),
                    });
                }
                if line.dist_a.is_some() {
                    return Err(DslError::Schema {
                        path: path("dist_a"),
                        message: "only allowed on self-dual lines".to_string(),
                    });
                }
                crate::model::Duality::Partner {
                    other: LineId::new(partner),
                }
            }
        };
        specs.push(LineSpec {
            id: LineId::new(&line.id),
            deg: line.deg,
            duality,
        });
    }

    Universe::new(specs).map_err(|err| match err {
        UniverseError::InconsistentPartners { a, b } => DslError::InconsistentPartners { a, b },
        UniverseError::UnknownPartner { line, partner } => DslError::InconsistentPartners {
            a: line,
            b: partner,
        },
        other => DslError::Schema {
            path: "lines".to_string(),
            message: other.to_string(),
        },
    })
}

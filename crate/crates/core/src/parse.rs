//! Text format for presentations.
//!
//! ```text
//! # comment
//! alphabet a b
//! rule a b{n} a -> a b a where n >= 2
//! rule c d d c -> c d c
//! ```
//!
//! Symbols are single characters separated by whitespace. A left-hand side
//! may carry at most one exponent token `x{var}`; the `where var >= k` clause
//! is required exactly when it does. An empty right-hand side (or `ε`)
//! denotes the empty word.

use crate::error::ParseError;
use crate::rewrite::{RewriteRule, RewritingSystem, RuleSchema};
use crate::word::{Alphabet, Symbol, Word};

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

enum Token {
    Sym(Symbol),
    Pumped(Symbol, String),
}

fn single_char(tok: &str) -> Option<char> {
    let mut it = tok.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn lex(alphabet: &Alphabet, text: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "ε" {
            continue;
        }
        if let Some(open) = tok.find('{') {
            let close = tok
                .strip_suffix('}')
                .ok_or_else(|| err(line, format!("unterminated exponent in {tok:?}")))?;
            let base = single_char(&tok[..open])
                .ok_or_else(|| err(line, format!("exponent base in {tok:?} must be one symbol")))?;
            let var = &close[open + 1..];
            if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(line, format!("bad exponent variable in {tok:?}")));
            }
            let s = alphabet.symbol(base).map_err(|e| err(line, e.to_string()))?;
            out.push(Token::Pumped(s, var.to_string()));
        } else {
            let c = single_char(tok).ok_or_else(|| {
                err(line, format!("{tok:?}: symbols must be single characters separated by spaces"))
            })?;
            let s = alphabet.symbol(c).map_err(|e| err(line, e.to_string()))?;
            out.push(Token::Sym(s));
        }
    }
    Ok(out)
}

/// Parses `where <var> >= <k>` (or `> k`). Returns the variable and the
/// smallest admissible exponent.
fn parse_where(text: &str, line: usize) -> Result<(String, usize), ParseError> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    let [var, op, bound] = parts[..] else {
        return Err(err(line, "where clause must read `where <var> >= <integer>`"));
    };
    let k: usize = bound
        .parse()
        .map_err(|_| err(line, format!("bad exponent bound {bound:?}")))?;
    let min = match op {
        ">=" => k,
        ">" => k + 1,
        _ => return Err(err(line, format!("unsupported comparison {op:?}"))),
    };
    if min == 0 {
        return Err(err(line, "exponent lower bound must be at least 1"));
    }
    Ok((var.to_string(), min))
}

enum Parsed {
    Rule(RewriteRule),
    Schema(RuleSchema),
}

fn parse_rule(alphabet: &Alphabet, body: &str, line: usize) -> Result<Parsed, ParseError> {
    let (lhs_text, rest) = body
        .split_once("->")
        .ok_or_else(|| err(line, "rule needs `->`"))?;
    let (rhs_text, where_text) = match rest.split_once("where") {
        Some((r, w)) => (r, Some(w)),
        None => (rest, None),
    };
    let lhs = lex(alphabet, lhs_text, line)?;
    let rhs_tokens = lex(alphabet, rhs_text, line)?;
    let mut rhs = Word::empty();
    for t in rhs_tokens {
        match t {
            Token::Sym(s) => rhs.push(s),
            Token::Pumped(..) => return Err(err(line, "exponents are not allowed on the right-hand side")),
        }
    }
    let pumped_count = lhs.iter().filter(|t| matches!(t, Token::Pumped(..))).count();
    if pumped_count > 1 {
        return Err(err(line, "at most one exponent per rule"));
    }
    if lhs.is_empty() {
        return Err(err(line, "empty left-hand side"));
    }
    if pumped_count == 0 {
        if where_text.is_some() {
            return Err(err(line, "where clause given but no exponent variable appears"));
        }
        let lhs = Word(
            lhs.into_iter()
                .map(|t| match t {
                    Token::Sym(s) => s,
                    Token::Pumped(..) => unreachable!(),
                })
                .collect(),
        );
        return Ok(Parsed::Rule(RewriteRule::new(lhs, rhs)));
    }
    let where_text =
        where_text.ok_or_else(|| err(line, "exponent variable needs a `where` clause"))?;
    let (var, min_exponent) = parse_where(where_text, line)?;
    let mut prefix = Word::empty();
    let mut suffix = Word::empty();
    let mut pumped = None;
    for t in lhs {
        match t {
            Token::Sym(s) if pumped.is_none() => prefix.push(s),
            Token::Sym(s) => suffix.push(s),
            Token::Pumped(s, v) => {
                if v != var {
                    return Err(err(line, format!("where clause names {var:?} but exponent is {v:?}")));
                }
                pumped = Some(s);
            }
        }
    }
    Ok(Parsed::Schema(RuleSchema {
        prefix,
        pumped: pumped.expect("one exponent token"),
        min_exponent,
        suffix,
        rhs,
    }))
}

/// Parses a presentation and validates it as a length-reducing system.
pub fn parse_presentation(text: &str) -> Result<RewritingSystem, ParseError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut rules = Vec::new();
    let mut schemas = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, body) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        match keyword {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(line, "alphabet declared twice"));
                }
                let mut chars = Vec::new();
                for tok in body.split_whitespace() {
                    chars.push(single_char(tok).ok_or_else(|| {
                        err(line, format!("{tok:?}: alphabet symbols must be single characters"))
                    })?);
                }
                alphabet = Some(Alphabet::new(chars).map_err(|e| err(line, e.to_string()))?);
            }
            "rule" => {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| err(line, "rule before alphabet declaration"))?;
                match parse_rule(a, body, line)? {
                    Parsed::Rule(r) => rules.push(r),
                    Parsed::Schema(s) => schemas.push(s),
                }
            }
            other => return Err(err(line, format!("unknown declaration {other:?}"))),
        }
    }
    let alphabet = alphabet.ok_or_else(|| err(last_line.max(1), "missing alphabet declaration"))?;
    RewritingSystem::new(alphabet, rules, schemas).map_err(|e| err(last_line.max(1), e.to_string()))
}

fn spaced(alphabet: &Alphabet, w: &Word) -> String {
    w.iter()
        .map(|&s| alphabet.display(s).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes a system back out in the presentation format. Schemas use the
/// exponent variable `n`.
pub fn to_presentation(system: &RewritingSystem) -> String {
    let a = system.alphabet();
    let mut out = String::from("alphabet");
    for c in a.chars() {
        out.push(' ');
        out.push(*c);
    }
    out.push('\n');
    for r in system.rules() {
        out.push_str(&format!("rule {} -> {}\n", spaced(a, &r.lhs), spaced(a, &r.rhs)).replace(" \n", "\n"));
    }
    for s in system.schemas() {
        let mut lhs = Vec::new();
        if !s.prefix.is_empty() {
            lhs.push(spaced(a, &s.prefix));
        }
        lhs.push(format!("{}{{n}}", a.display(s.pumped)));
        if !s.suffix.is_empty() {
            lhs.push(spaced(a, &s.suffix));
        }
        let rhs = spaced(a, &s.rhs);
        let rhs = if rhs.is_empty() { "ε".to_string() } else { rhs };
        out.push_str(&format!(
            "rule {} -> {} where n >= {}\n",
            lhs.join(" "),
            rhs,
            s.min_exponent
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{system_m, system_n};

    const M_TEXT: &str = "alphabet a b\nrule a b{n} a -> a b a where n >= 2\n";

    #[test]
    fn parses_schema() {
        let sys = parse_presentation(M_TEXT).unwrap();
        assert_eq!(sys, system_m());
    }

    #[test]
    fn parses_concrete_rules_with_comments() {
        let text = "# the monoid N\nalphabet c d\n\
                    rule c d d c -> c d c\n\
                    rule c d d d d -> c d c  # cd^4\n\
                    rule c d d d c c -> c d c\n\
                    rule c d d d c d c -> c d c\n";
        assert_eq!(parse_presentation(text).unwrap(), system_n());
    }

    #[test]
    fn round_trips_builtins() {
        for sys in [system_m(), system_n()] {
            assert_eq!(parse_presentation(&to_presentation(&sys)).unwrap(), sys);
        }
    }

    #[test]
    fn empty_rhs() {
        let sys = parse_presentation("alphabet a\nrule a a ->\n").unwrap();
        assert!(sys.rules()[0].rhs.is_empty());
        let sys2 = parse_presentation(&to_presentation(&sys)).unwrap();
        assert_eq!(sys, sys2);
    }

    #[test]
    fn strict_inequality_bound() {
        let sys = parse_presentation("alphabet a b\nrule a b{k} a -> a b a where k > 1\n").unwrap();
        assert_eq!(sys.schemas()[0].min_exponent, 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("rule a -> b\n", 1),
            ("alphabet a b\nrule a b{n} a -> a b a\n", 2),
            ("alphabet a b\nrule a b -> a where n >= 2\n", 2),
            ("alphabet a b\n\nrule a b{n} b{m} a -> a where n >= 2\n", 3),
            ("alphabet a b\nrule a c -> a\n", 2),
            ("alphabet a b\nrule ab -> a\n", 2),
            ("alphabet a b\nrule a b{n} a -> a b{n} where n >= 2\n", 2),
            ("alphabet a b\nrule a b{n} a -> a where m >= 2\n", 2),
            ("alphabet a b\nfrobnicate\n", 2),
            ("alphabet a a\n", 1),
            ("alphabet a b\nrule a b\n", 2),
        ];
        for (text, line) in cases {
            let e = parse_presentation(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn non_length_reducing_rule_is_refused_at_load() {
        let e = parse_presentation("alphabet a b\nrule a -> a b\n").unwrap_err();
        assert!(e.message.contains("length-reducing"), "{e}");
    }

    #[test]
    fn missing_alphabet() {
        assert!(parse_presentation("").is_err());
        assert!(parse_presentation("# nothing\n").is_err());
    }
}

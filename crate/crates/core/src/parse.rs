//! The expression language: a tokenizer, a recursive-descent parser, and the
//! matching printer. `parse_poly(print_poly(f))` reproduces `f` bit-exactly.
//!
//! Grammar:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := scalar | var ('^' exponent)? | '(' expr ')'
//! var    := 'x' digits? | identifier
//! scalar := rational ('v' | '[' rational-or-inf ']')?
//! ```
//!
//! Rationals are `p`, `p/q`, or decimals like `4.2`, all parsed exactly; a
//! leading `-` belongs to the literal (there is no subtraction). The `v`
//! suffix (ghost) is legal only in standard supertropical mode; explicit
//! `[layer]` brackets carry layered-mode layers.

use crate::error::{Error, Result};
use crate::poly::{ExponentMode, TropPoly};
use crate::scalar::{Layer, LayeredScalar, SemiringMode};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// Printing

/// Prints a scalar in the mode's idiom: bare value when tangible, `...v` for
/// standard supertropical ghosts, `...[layer]` otherwise.
pub fn print_scalar(c: &LayeredScalar, mode: SemiringMode) -> String {
    match c {
        LayeredScalar::Bottom => "bot".to_string(),
        LayeredScalar::Elem { value, layer } => {
            if layer.is_one() {
                format!("{}", value)
            } else if mode == SemiringMode::Supertropical {
                format!("{}v", value)
            } else {
                format!("{}[{}]", value, layer)
            }
        }
    }
}

fn print_exponent(e: &Rat) -> String {
    if e.is_integer() && !e.is_negative() {
        format!("{}", e)
    } else {
        format!("({})", e)
    }
}

/// Canonical variable name for index `i` among `n` variables.
pub fn var_name(i: usize, n: usize) -> String {
    if n == 1 {
        "x".to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Prints a polynomial with monomials in descending lexicographic order,
/// leading monomial first.
pub fn print_poly(f: &TropPoly) -> String {
    let n = f.vars();
    let mode = f.mode();
    let mut parts: Vec<String> = Vec::new();
    for (e, c) in f.terms().collect::<Vec<_>>().into_iter().rev() {
        let mut factors: Vec<String> = Vec::new();
        let is_constant = e.iter().all(|x| x.is_zero());
        let coeff_is_unit = c.is_tangible() && c.value().map(|v| v.is_zero()).unwrap_or(false);
        if is_constant || !coeff_is_unit {
            factors.push(print_scalar(c, mode));
        }
        for (i, exp) in e.iter().enumerate() {
            if exp.is_zero() {
                continue;
            }
            let name = var_name(i, n);
            if exp.is_one() {
                factors.push(name);
            } else {
                factors.push(format!("{}^{}", name, print_exponent(exp)));
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}

// ---------------------------------------------------------------------------
// Tokenizing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { value: Rat, ghost: bool },
    Ident(String),
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex_digits(bytes: &[u8], mut i: usize) -> (usize, &[u8]) {
    let start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    (i, &bytes[start..i])
}

fn big(digits: &[u8]) -> BigInt {
    // Safe: the slice is ASCII digits by construction.
    std::str::from_utf8(digits).unwrap().parse().unwrap()
}

/// Lexes one rational literal starting at `i` (which must sit on a digit or
/// a `-` followed by a digit). Returns the value and the index after it.
fn lex_number(bytes: &[u8], mut i: usize) -> Result<(Rat, usize)> {
    let start = i;
    let negative = bytes[i] == b'-';
    if negative {
        i += 1;
    }
    let (j, int_digits) = lex_digits(bytes, i);
    if int_digits.is_empty() {
        return Err(syntax(start, "expected digits"));
    }
    i = j;
    let mut value;
    if i < bytes.len() && bytes[i] == b'.' {
        let (j, frac_digits) = lex_digits(bytes, i + 1);
        if frac_digits.is_empty() {
            return Err(syntax(i, "expected digits after decimal point"));
        }
        i = j;
        let scale = BigInt::from(10u32).pow(frac_digits.len() as u32);
        let numer = big(int_digits) * &scale + big(frac_digits);
        value = Rat::new(numer, scale);
    } else if i < bytes.len() && bytes[i] == b'/' {
        let (j, den_digits) = lex_digits(bytes, i + 1);
        if den_digits.is_empty() {
            return Err(syntax(i, "expected digits after '/'"));
        }
        i = j;
        let denom = big(den_digits);
        if denom.is_zero() {
            return Err(syntax(start, "zero denominator"));
        }
        value = Rat::new(big(int_digits), denom);
    } else {
        value = Rat::from_integer(big(int_digits));
    }
    if negative {
        value = -value;
    }
    Ok((value, i))
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                toks.push(Token { tok: Tok::Plus, pos });
                i += 1;
            }
            b'*' => {
                toks.push(Token { tok: Tok::Star, pos });
                i += 1;
            }
            b'^' => {
                toks.push(Token { tok: Tok::Caret, pos });
                i += 1;
            }
            b'(' => {
                toks.push(Token { tok: Tok::LParen, pos });
                i += 1;
            }
            b')' => {
                toks.push(Token { tok: Tok::RParen, pos });
                i += 1;
            }
            b'[' => {
                toks.push(Token {
                    tok: Tok::LBracket,
                    pos,
                });
                i += 1;
            }
            b']' => {
                toks.push(Token {
                    tok: Tok::RBracket,
                    pos,
                });
                i += 1;
            }
            b'0'..=b'9' | b'-' => {
                if b == b'-' && !(i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit()) {
                    return Err(syntax(pos, "'-' must start a numeric literal"));
                }
                let (value, j) = lex_number(bytes, i)?;
                i = j;
                // A 'v' glued onto a number is the ghost suffix, as long as
                // it is not the start of a longer identifier.
                let ghost = i < bytes.len()
                    && bytes[i] == b'v'
                    && !(i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_'));
                if ghost {
                    i += 1;
                }
                toks.push(Token {
                    tok: Tok::Num { value, ghost },
                    pos,
                });
            }
            _ if b.is_ascii_alphabetic() || b == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Token {
                    tok: Tok::Ident(text[start..i].to_string()),
                    pos,
                });
            }
            _ => {
                return Err(syntax(pos, format!("unexpected character '{}'", b as char)));
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parsing

/// A parsed atom before variable indices are resolved.
#[derive(Debug, Clone)]
enum Ast {
    Scalar(LayeredScalar),
    Var { name: String, exp: Rat, pos: usize },
    Sum(Vec<Ast>),
    Prod(Vec<Ast>),
}

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    emode: ExponentMode,
    mode: SemiringMode,
    text_len: usize,
    _text: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.at)
            .map(|t| t.pos)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.bump() {
            Some(t) if t.tok == want => Ok(()),
            Some(t) => Err(syntax(t.pos, format!("expected {}", what))),
            None => Err(syntax(self.text_len, format!("expected {}", what))),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut terms = vec![self.term()?];
        while matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Ast::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Ast::Prod(factors)
        })
    }

    fn factor(&mut self) -> Result<Ast> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Num { value, ghost }) => {
                if ghost {
                    if self.mode != SemiringMode::Supertropical {
                        return Err(Error::ModeViolation {
                            pos,
                            msg: "the 'v' ghost suffix is only legal in supertropical mode"
                                .to_string(),
                        });
                    }
                    return Ok(Ast::Scalar(LayeredScalar::ghost(value)));
                }
                if matches!(self.peek(), Some(Tok::LBracket)) {
                    self.bump();
                    let layer = self.layer()?;
                    self.expect(Tok::RBracket, "']'")?;
                    if !layer.valid_in(self.mode) {
                        return Err(Error::ModeViolation {
                            pos,
                            msg: format!(
                                "layer {} is not available in {} mode",
                                layer, self.mode
                            ),
                        });
                    }
                    return Ok(Ast::Scalar(LayeredScalar::Elem { value, layer }));
                }
                Ok(Ast::Scalar(LayeredScalar::tangible(value)))
            }
            Some(Tok::Ident(name)) => {
                let mut exp = Rat::one();
                let mut exp_pos = pos;
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    exp_pos = self.pos();
                    exp = self.exponent()?;
                }
                if !self.emode.admits(&exp) {
                    return Err(Error::ModeViolation {
                        pos: exp_pos,
                        msg: format!(
                            "exponent {} is not allowed in {} exponent mode",
                            exp,
                            self.emode.name()
                        ),
                    });
                }
                Ok(Ast::Var { name, exp, pos })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => Err(syntax(pos, "expected a scalar, variable, or '('")),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }

    /// Exponent after '^': a rational literal, optionally parenthesized.
    fn exponent(&mut self) -> Result<Rat> {
        match self.bump() {
            Some(Token {
                tok: Tok::Num { value, ghost: false },
                ..
            }) => Ok(value),
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let v = match self.bump() {
                    Some(Token {
                        tok: Tok::Num { value, ghost: false },
                        ..
                    }) => value,
                    Some(t) => return Err(syntax(t.pos, "expected a rational exponent")),
                    None => return Err(syntax(self.text_len, "expected a rational exponent")),
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            Some(t) => Err(syntax(t.pos, "expected a rational exponent")),
            None => Err(syntax(self.text_len, "expected a rational exponent")),
        }
    }

    /// Layer inside brackets: a rational or `inf`.
    fn layer(&mut self) -> Result<Layer> {
        match self.bump() {
            Some(Token {
                tok: Tok::Num { value, ghost: false },
                pos,
            }) => {
                if value < Rat::one() {
                    return Err(Error::ModeViolation {
                        pos,
                        msg: format!("layer {} is below the minimal layer 1", value),
                    });
                }
                Ok(Layer::Finite(value))
            }
            Some(Token {
                tok: Tok::Ident(s),
                pos,
            }) if s == "inf" => {
                let _ = pos;
                Ok(Layer::Infinite)
            }
            Some(t) => Err(syntax(t.pos, "expected a layer (rational or 'inf')")),
            None => Err(syntax(self.text_len, "expected a layer")),
        }
    }
}

/// Maps variable names to indices: `x` is index 0, `x<k>` is index k−1, and
/// any other identifiers take the unused indices in order of first
/// appearance.
fn resolve_vars(ast: &Ast, explicit_vars: Option<usize>) -> Result<BTreeMap<String, usize>> {
    let mut names: Vec<(String, usize)> = Vec::new(); // (name, first pos)
    collect_names(ast, &mut names);
    let mut assignment: BTreeMap<String, usize> = BTreeMap::new();
    let mut taken: Vec<usize> = Vec::new();
    for (name, pos) in &names {
        if assignment.contains_key(name) {
            continue;
        }
        let idx = if *name == "x" {
            Some(0)
        } else if let Some(rest) = name.strip_prefix('x') {
            match rest.parse::<usize>() {
                Ok(k) if k >= 1 => Some(k - 1),
                _ => None,
            }
        } else {
            None
        };
        if let Some(idx) = idx {
            if taken.contains(&idx) {
                return Err(syntax(*pos, format!("variable index {} used twice", idx + 1)));
            }
            assignment.insert(name.clone(), idx);
            taken.push(idx);
        }
    }
    for (name, _) in &names {
        if assignment.contains_key(name) {
            continue;
        }
        let mut idx = 0;
        while taken.contains(&idx) {
            idx += 1;
        }
        assignment.insert(name.clone(), idx);
        taken.push(idx);
    }
    let inferred = taken.iter().map(|i| i + 1).max().unwrap_or(0);
    if let Some(n) = explicit_vars {
        if inferred > n {
            let pos = names.first().map(|(_, p)| *p).unwrap_or(0);
            return Err(syntax(
                pos,
                format!("expression uses {} variables but {} were declared", inferred, n),
            ));
        }
    }
    Ok(assignment)
}

fn collect_names(ast: &Ast, out: &mut Vec<(String, usize)>) {
    match ast {
        Ast::Scalar(_) => {}
        Ast::Var { name, pos, .. } => {
            if !out.iter().any(|(n, _)| n == name) {
                out.push((name.clone(), *pos));
            }
        }
        Ast::Sum(xs) | Ast::Prod(xs) => {
            for x in xs {
                collect_names(x, out);
            }
        }
    }
}

fn build(
    ast: &Ast,
    vars: usize,
    names: &BTreeMap<String, usize>,
    emode: ExponentMode,
    mode: SemiringMode,
) -> Result<TropPoly> {
    match ast {
        Ast::Scalar(c) => TropPoly::constant(vars, emode, mode, c.clone()),
        Ast::Var { name, exp, .. } => {
            let mut e = vec![Rat::zero(); vars];
            e[names[name]] = exp.clone();
            TropPoly::monomial(vars, emode, mode, e, LayeredScalar::unit())
        }
        Ast::Sum(xs) => {
            let mut acc: Option<TropPoly> = None;
            for x in xs {
                let p = build(x, vars, names, emode, mode)?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => a.add(&p)?,
                });
            }
            Ok(acc.unwrap())
        }
        Ast::Prod(xs) => {
            let mut acc: Option<TropPoly> = None;
            for x in xs {
                let p = build(x, vars, names, emode, mode)?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => a.mul(&p)?,
                });
            }
            Ok(acc.unwrap())
        }
    }
}

/// Parses a polynomial. When `vars` is `None` the variable count is inferred
/// from the expression (a pure constant gets zero variables).
pub fn parse_poly(
    text: &str,
    vars: Option<usize>,
    emode: ExponentMode,
    mode: SemiringMode,
) -> Result<TropPoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        emode,
        mode,
        text_len: text.len(),
        _text: text,
    };
    let ast = p.expr()?;
    if p.at != p.toks.len() {
        return Err(syntax(p.pos(), "trailing input after expression"));
    }
    let names = resolve_vars(&ast, vars)?;
    let inferred = names.values().map(|i| i + 1).max().unwrap_or(0);
    let n = vars.unwrap_or(inferred);
    build(&ast, n, &names, emode, mode)
}

/// Parses a single scalar literal (used for evaluation points).
pub fn parse_scalar(text: &str, mode: SemiringMode) -> Result<LayeredScalar> {
    let poly = parse_poly(text, Some(0), ExponentMode::Rational, mode)?;
    if poly.len() != 1 {
        return Err(syntax(0, "expected a single scalar"));
    }
    let (e, c) = poly.leading();
    debug_assert!(e.is_empty());
    Ok(c.clone())
}

/// Parses a bare rational (integer, fraction, or exact decimal).
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(syntax(0, "empty rational"));
    }
    let (v, end) = lex_number(bytes, 0)?;
    if end != bytes.len() {
        return Err(syntax(end, "trailing input after rational"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn t(v: i64) -> LayeredScalar {
        LayeredScalar::tangible(rat(v))
    }

    #[test]
    fn parses_the_bivariate_binomial() {
        let f = parse_poly(
            "x1^2*x2 + 6",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Supertropical,
        )
        .unwrap();
        assert_eq!(f.vars(), 2);
        let supp = f.supp();
        assert_eq!(supp, vec![vec![rat(0), rat(0)], vec![rat(2), rat(1)]]);
        assert_eq!(f.coeff(&[rat(0), rat(0)]), Some(&t(6)));
        assert_eq!(f.coeff(&[rat(2), rat(1)]), Some(&LayeredScalar::unit()));
    }

    #[test]
    fn ghost_suffix_only_in_supertropical_mode() {
        let f = parse_poly(
            "x^2 + 5v*x + 7",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Supertropical,
        )
        .unwrap();
        assert_eq!(f.coeff(&[rat(1)]), Some(&LayeredScalar::ghost(rat(5))));
        let err = parse_poly(
            "5v",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ModeViolation { .. }));
    }

    #[test]
    fn rational_exponent_needs_rational_mode() {
        let err = parse_poly(
            "x^(5/3) + 7",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Supertropical,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ModeViolation { .. }));
        let f = parse_poly(
            "x^(5/3) + 7",
            None,
            ExponentMode::Rational,
            SemiringMode::Supertropical,
        )
        .unwrap();
        assert_eq!(f.supp(), vec![vec![rat(0)], vec![ratio(5, 3)]]);
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rat("4.2").unwrap(), ratio(21, 5));
        assert_eq!(parse_rat("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rat("10/4").unwrap(), ratio(5, 2));
    }

    #[test]
    fn layered_brackets_parse_and_validate() {
        let f = parse_poly(
            "3[2]*x + 4[inf]",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap();
        assert_eq!(
            f.coeff(&[rat(1)]),
            Some(&LayeredScalar::new(rat(3), Layer::Finite(rat(2)), SemiringMode::Layered).unwrap())
        );
        let err = parse_poly(
            "3[2]*x",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Supertropical,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ModeViolation { .. }));
        let err = parse_poly(
            "3[1/2]*x",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ModeViolation { .. }));
    }

    #[test]
    fn parenthesized_expressions_multiply_through() {
        let f = parse_poly(
            "(x + 1) * (x + 2)",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap();
        let direct = parse_poly(
            "x^2 + 2*x + 3",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap();
        assert_eq!(f, direct);
        // A genuine tie in the cross terms raises the layer.
        let sq = parse_poly(
            "(x + 2) * (x + 2)",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap();
        let sq_direct = parse_poly(
            "x^2 + 2[2]*x + 4",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Layered,
        )
        .unwrap();
        assert_eq!(sq, sq_direct);
    }

    #[test]
    fn print_then_parse_is_identity() {
        let cases = [
            ("x^2 + 5v*x + 7", SemiringMode::Supertropical, ExponentMode::Polynomial),
            ("x1^2*x2 + 6", SemiringMode::Supertropical, ExponentMode::Polynomial),
            ("3[2]*x^(-1) + 21/5", SemiringMode::Layered, ExponentMode::Laurent),
            ("x^(5/3) + 7", SemiringMode::MaxPlus, ExponentMode::Rational),
            ("0", SemiringMode::Layered, ExponentMode::Polynomial),
            ("-2*x + 0v", SemiringMode::Supertropical, ExponentMode::Polynomial),
        ];
        for (text, mode, emode) in cases {
            let f = parse_poly(text, None, emode, mode).unwrap();
            let printed = print_poly(&f);
            let reparsed = parse_poly(&printed, Some(f.vars()), emode, mode).unwrap();
            assert_eq!(f, reparsed, "round-trip failed for {:?} -> {:?}", text, printed);
        }
    }

    #[test]
    fn printing_orders_descending_and_omits_units() {
        let f = parse_poly(
            "7 + 5v*x + x^2",
            None,
            ExponentMode::Polynomial,
            SemiringMode::Supertropical,
        )
        .unwrap();
        assert_eq!(print_poly(&f), "x^2 + 5v*x + 7");
        let g = parse_poly(
            "x2 + x1",
            None,
            ExponentMode::Polynomial,
            SemiringMode::MaxPlus,
        )
        .unwrap();
        assert_eq!(print_poly(&g), "x1 + x2");
    }

    #[test]
    fn named_identifiers_get_first_free_indices() {
        let f = parse_poly(
            "a + b*x2",
            None,
            ExponentMode::Polynomial,
            SemiringMode::MaxPlus,
        )
        .unwrap();
        // x2 pins index 1, so a takes 0 and b takes 2.
        assert_eq!(f.vars(), 3);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_poly("x +", None, ExponentMode::Polynomial, SemiringMode::MaxPlus)
            .unwrap_err();
        match err {
            Error::Syntax { pos, .. } => assert_eq!(pos, 3),
            other => panic!("unexpected error {:?}", other),
        }
        assert!(parse_poly("x - 1", None, ExponentMode::Polynomial, SemiringMode::MaxPlus).is_err());
    }

    #[test]
    fn scalar_round_trip_across_modes() {
        for (text, mode) in [
            ("5", SemiringMode::MaxPlus),
            ("5v", SemiringMode::Supertropical),
            ("-7/3", SemiringMode::Layered),
            ("5[7/2]", SemiringMode::Layered),
            ("5[inf]", SemiringMode::Layered),
        ] {
            let c = parse_scalar(text, mode).unwrap();
            assert_eq!(parse_scalar(&print_scalar(&c, mode), mode).unwrap(), c);
        }
    }
}

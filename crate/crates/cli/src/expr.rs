//! Expression grammar for Lie elements.
//!
//! ```text
//! expr     := ["+"|"-"] term (("+"|"-") term)*
//! term     := coeff "*" monomial | monomial | coeff
//! monomial := word | "[" expr "," expr "]"
//! word     := ident (ident)*
//! coeff    := digits ["/" digits]
//! ```
//!
//! Plain words must be regular; a bare coefficient must be zero since
//! elements have no constant term.

use shirshov_core::{Alphabet, FieldSpec, LieElement, Word};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Open,
    Close,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '[' => {
                out.push(Token::Open);
                i += 1;
            }
            ']' => {
                out.push(Token::Close);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let den = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den == i {
                        return Err(CliError::Parse(format!("missing denominator in `{text}`")));
                    }
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(CliError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    alphabet: &'a Alphabet,
    field: FieldSpec,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), CliError> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(CliError::Parse(format!("expected {want:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<LieElement, CliError> {
        let mut acc = LieElement::zero(self.field);
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            negate = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<LieElement, CliError> {
        if let Some(Token::Number(n)) = self.peek().cloned() {
            self.pos += 1;
            let c = self.field.parse_scalar(&n)?;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                return Ok(self.monomial()?.scale(&c));
            }
            if !c.is_zero() {
                return Err(CliError::Parse(format!("constant term `{n}` is not allowed")));
            }
            return Ok(LieElement::zero(self.field));
        }
        self.monomial()
    }

    fn monomial(&mut self) -> Result<LieElement, CliError> {
        match self.peek().cloned() {
            Some(Token::Open) => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(Token::Comma)?;
                let right = self.expr()?;
                self.expect(Token::Close)?;
                Ok(left.bracket(&right)?)
            }
            Some(Token::Ident(_)) => {
                let mut letters = Vec::new();
                let mut names = Vec::new();
                while let Some(Token::Ident(name)) = self.peek().cloned() {
                    self.pos += 1;
                    let l = self
                        .alphabet
                        .index(&name)
                        .ok_or_else(|| CliError::Parse(format!("unknown letter `{name}`")))?;
                    letters.push(l);
                    names.push(name);
                }
                let w = Word::new(letters)?;
                if !w.is_regular() {
                    return Err(CliError::Parse(format!("word `{}` is not regular", names.join(" "))));
                }
                Ok(LieElement::basis(w, self.field)?)
            }
            other => Err(CliError::Parse(format!("expected a word or `[`, found {other:?}"))),
        }
    }
}

pub fn parse_expression(text: &str, alphabet: &Alphabet, field: FieldSpec) -> Result<LieElement, CliError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(CliError::Parse("empty expression".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        alphabet,
        field,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(CliError::Parse(format!("unexpected {t:?} after expression")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn abcd() -> Alphabet {
        Alphabet::new(["d", "c", "b", "a"]).unwrap()
    }

    #[test]
    fn plain_words() {
        let a = abcd();
        let f = parse_expression("a a c b - b d", &a, Q).unwrap();
        assert_eq!(f.to_string_with(&a), "a a c b - b d");
        assert_eq!(a.format_word(f.leading_word().unwrap().letters()), "a a c b");
    }

    #[test]
    fn brackets_are_normalized() {
        let a = Alphabet::new(["t", "z", "y", "x"]).unwrap();
        let f = parse_expression("[x,[y,z]] - z", &a, Q).unwrap();
        assert_eq!(f.to_string_with(&a), "x y z - z");
        let g = parse_expression("[[x, y], z]", &a, Q).unwrap();
        // [[x,y],z] = (xyz) + (xzy)
        assert_eq!(g.to_string_with(&a), "x y z + x z y");
    }

    #[test]
    fn coefficients() {
        let a = abcd();
        let f = parse_expression("-3/2 * a a c b + 3/2 * b d + 0", &a, Q).unwrap();
        assert_eq!(f.to_string_with(&a), "-3/2 * a a c b + 3/2 * b d");
        assert_eq!(parse_expression(&f.to_string_with(&a), &a, Q).unwrap(), f);
    }

    #[test]
    fn errors() {
        let a = abcd();
        let e = parse_expression("b a", &a, Q).unwrap_err();
        assert!(e.to_string().contains("b a"));
        assert!(parse_expression("q", &a, Q).is_err());
        assert!(parse_expression("a +", &a, Q).is_err());
        assert!(parse_expression("3", &a, Q).is_err());
        assert!(parse_expression("[a, b", &a, Q).is_err());
        assert!(matches!(parse_expression("a ^ b", &a, Q), Err(CliError::Parse(_))));
    }
}

//! Text grammar for polynomials, monomial orders, and ring declarations.
//!
//! Polynomial grammar: identifiers `[A-Za-z][A-Za-z0-9_]*`, integer and
//! rational (`a/b`) literals, operators `+ - * ^`, parentheses. Implicit
//! multiplication is not allowed; `^` binds tighter than `*`, which binds
//! tighter than `+`/`-`. A leading `-` (or one directly after `(`) is the
//! usual unary minus.
//!
//! Ring declaration: `ring <field> [<v1>, <v2>, ...] order <order>` where
//! `<field>` is `QQ` or `Fp(<p>)` and `<order>` is `lex`, `grlex`,
//! `grevlex`, or `block(<sub>[v,...];<sub>[v,...];...)`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::field::CoefficientField;
use crate::order::{MonomialOrder, OrderBlock, SimpleOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok(Some((start, Tok::Int(text.parse().unwrap()))));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end])
                    .unwrap()
                    .to_string();
                self.pos = end;
                return Ok(Some((start, Tok::Ident(text))));
            }
            other => {
                return Err(AlgebraError::Parse {
                    position: start,
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    ring: Arc<PolyRing>,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.idx)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn err_here<T>(&self, message: &str) -> Result<T> {
        let pos = self.peek().map_or(self.end, |(p, _)| *p);
        Err(AlgebraError::Parse {
            position: pos,
            message: message.to_string(),
        })
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some((_, Tok::Minus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    // factor := base ('^' nat)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.bump();
            match self.bump() {
                Some((pos, Tok::Int(n))) => {
                    let e: u32 = n.try_into().map_err(|_| AlgebraError::Parse {
                        position: pos,
                        message: "exponent out of range".into(),
                    })?;
                    if e as u64 >= crate::monomial::MAX_EXPONENT as u64 {
                        return Err(AlgebraError::DegreeOverflow(format!(
                            "exponent {e} exceeds cap"
                        )));
                    }
                    Ok(base.pow(e))
                }
                Some((pos, _)) => Err(AlgebraError::Parse {
                    position: pos,
                    message: "expected integer exponent after `^`".into(),
                }),
                None => self.err_here("expected integer exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    // base := ident | int ('/' int)? | '(' expr ')' | '-' base
    fn base(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some((pos, Tok::Ident(name))) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring.clone(), i)),
                None => Err(AlgebraError::UnknownVariable {
                    position: pos,
                    name,
                }),
            },
            Some((_, Tok::Int(n))) => {
                if matches!(self.peek(), Some((_, Tok::Slash))) {
                    self.bump();
                    match self.bump() {
                        Some((pos, Tok::Int(d))) => {
                            let c = self.ring.field.fraction(&n, &d).map_err(|e| {
                                AlgebraError::Parse {
                                    position: pos,
                                    message: e.to_string(),
                                }
                            })?;
                            Ok(Polynomial::constant(self.ring.clone(), c))
                        }
                        Some((pos, _)) => Err(AlgebraError::Parse {
                            position: pos,
                            message: "expected integer denominator after `/`".into(),
                        }),
                        None => self.err_here("expected integer denominator after `/`"),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.ring.clone(),
                        self.ring.field.from_bigint(&n),
                    ))
                }
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((pos, _)) => Err(AlgebraError::Parse {
                        position: pos,
                        message: "expected `)`".into(),
                    }),
                    None => self.err_here("unclosed parenthesis"),
                }
            }
            Some((_, Tok::Minus)) => Ok(self.base()?.neg()),
            Some((pos, t)) => Err(AlgebraError::Parse {
                position: pos,
                message: format!("unexpected token {t:?}"),
            }),
            None => self.err_here("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in the crate grammar against a ring.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next()? {
        toks.push(t);
    }
    let end = text.len();
    let mut p = Parser {
        toks,
        idx: 0,
        ring: ring.clone(),
        end,
    };
    let poly = p.expr()?;
    if let Some((pos, t)) = p.peek() {
        return Err(AlgebraError::Parse {
            position: *pos,
            message: format!("trailing input {t:?}"),
        });
    }
    Ok(poly)
}

/// Parses an order name against a variable list: `lex`, `grlex`, `grevlex`,
/// or `block(sub[v,..];sub[v,..])`.
pub fn parse_order(text: &str, vars: &[String]) -> Result<MonomialOrder> {
    let t = text.trim();
    match t {
        "lex" => return Ok(MonomialOrder::Lex),
        "grlex" => return Ok(MonomialOrder::GrLex),
        "grevlex" => return Ok(MonomialOrder::GrevLex),
        _ => {}
    }
    let inner = t
        .strip_prefix("block(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| AlgebraError::BadOrder(format!("unknown order `{t}`")))?;
    let mut blocks = Vec::new();
    for part in inner.split(';') {
        let part = part.trim();
        let open = part
            .find('[')
            .ok_or_else(|| AlgebraError::BadOrder(format!("bad block `{part}`")))?;
        let sub = match part[..open].trim() {
            "lex" => SimpleOrder::Lex,
            "grlex" => SimpleOrder::GrLex,
            "grevlex" => SimpleOrder::GrevLex,
            other => {
                return Err(AlgebraError::BadOrder(format!(
                    "unknown sub-order `{other}`"
                )))
            }
        };
        let names = part[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| AlgebraError::BadOrder(format!("bad block `{part}`")))?;
        let mut idxs = Vec::new();
        for name in names.split(',') {
            let name = name.trim();
            let i = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| AlgebraError::BadOrder(format!("unknown variable `{name}`")))?;
            idxs.push(i);
        }
        blocks.push(OrderBlock {
            vars: idxs,
            order: sub,
        });
    }
    let order = MonomialOrder::Block(blocks);
    order.validate(vars.len())?;
    Ok(order)
}

/// Parses `QQ` or `Fp(<p>)`.
pub fn parse_field(text: &str) -> Result<CoefficientField> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(CoefficientField::Rationals);
    }
    if let Some(inner) = t.strip_prefix("Fp(").and_then(|s| s.strip_suffix(')')) {
        let p: u64 = inner.trim().parse().map_err(|_| {
            AlgebraError::BadModulus(format!("bad modulus `{inner}`"))
        })?;
        return CoefficientField::prime(p);
    }
    // CLI flag form Fp:p
    if let Some(inner) = t.strip_prefix("Fp:") {
        let p: u64 = inner.trim().parse().map_err(|_| {
            AlgebraError::BadModulus(format!("bad modulus `{inner}`"))
        })?;
        return CoefficientField::prime(p);
    }
    Err(AlgebraError::BadRing(format!("unknown field `{t}`")))
}

/// Parses a ring declaration line:
/// `ring <field> [<v1>, <v2>, ...] order <order>`.
pub fn parse_ring_decl(line: &str) -> Result<Arc<PolyRing>> {
    let rest = line
        .trim()
        .strip_prefix("ring")
        .ok_or_else(|| AlgebraError::BadRing("declaration must start with `ring`".into()))?
        .trim();
    let open = rest
        .find('[')
        .ok_or_else(|| AlgebraError::BadRing("missing `[` in variable list".into()))?;
    let close = rest
        .find(']')
        .ok_or_else(|| AlgebraError::BadRing("missing `]` in variable list".into()))?;
    let field = parse_field(&rest[..open])?;
    let vars: Vec<String> = rest[open + 1..close]
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let tail = rest[close + 1..].trim();
    let order_text = tail
        .strip_prefix("order")
        .ok_or_else(|| AlgebraError::BadRing("missing `order` clause".into()))?
        .trim();
    let order = parse_order(order_text, &vars)?;
    PolyRing::new(field, vars, order)
}

/// Parses an ideal file: a ring declaration line followed by one generator
/// per non-empty line; `#` starts a comment.
pub fn parse_ideal_file(text: &str) -> Result<(Arc<PolyRing>, Vec<Polynomial>)> {
    let mut lines = text.lines().map(|l| {
        match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        }
        .trim()
    });
    let decl = lines
        .by_ref()
        .find(|l| !l.is_empty())
        .ok_or_else(|| AlgebraError::BadRing("empty ideal file".into()))?;
    let ring = parse_ring_decl(decl)?;
    let mut gens = Vec::new();
    for l in lines {
        if l.is_empty() {
            continue;
        }
        gens.push(parse_polynomial(l, &ring)?);
    }
    Ok((ring, gens))
}

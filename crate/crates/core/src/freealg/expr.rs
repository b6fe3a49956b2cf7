//! A small expression language for writing identities in functional notation.
//!
//! ```text
//! prec(prec(x,y),z) - prec(x, prec(y,z) + succ(y,z))
//! 2 mul(x1,x2) - 1/2 mul(x2,x1)
//! ```
//!
//! Variables are `x1, x2, ...` (also `s1, s2, ...` for rule slots) with the
//! aliases `x, y, z, t` for the first four. Calls to alphabet operations take
//! two arguments and are expanded bilinearly; calls to macros substitute their
//! arguments into a multilinear body.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::alphabet::OpAlphabet;
use super::tree::TreePoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Macro {
    arity: usize,
    body: TreePoly,
}

/// Parsing context: an alphabet plus derived operations (macros).
#[derive(Clone, Debug)]
pub struct Context {
    alphabet: OpAlphabet,
    macros: HashMap<String, Macro>,
}

impl Context {
    pub fn new(alphabet: &OpAlphabet) -> Self {
        Context {
            alphabet: alphabet.clone(),
            macros: HashMap::new(),
        }
    }

    pub fn alphabet(&self) -> &OpAlphabet {
        &self.alphabet
    }

    /// Defines a macro of the given arity whose body uses variables
    /// `x1..x{arity}` (or their aliases) as parameters.
    pub fn define(&mut self, name: &str, arity: usize, body: &str) -> Result<()> {
        let body = self.parse(body)?;
        for (t, _) in body.terms() {
            if t.leaves().iter().any(|&v| v as usize >= arity) {
                return Err(perr(format!(
                    "macro `{name}` uses a variable beyond its arity {arity}"
                )));
            }
        }
        self.macros.insert(name.to_string(), Macro { arity, body });
        Ok(())
    }

    pub fn parse(&self, src: &str) -> Result<TreePoly> {
        let mut p = Parser {
            ctx: self,
            chars: src.chars().collect(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(perr(format!(
                "unexpected `{}` at column {}",
                p.chars[p.pos],
                p.pos + 1
            )));
        }
        Ok(e)
    }
}

/// Parses with no macros.
pub fn parse(alphabet: &OpAlphabet, src: &str) -> Result<TreePoly> {
    Context::new(alphabet).parse(src)
}

fn perr(msg: String) -> Error {
    Error::Parse { line: 0, msg }
}

struct Parser<'a> {
    ctx: &'a Context,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(perr(format!("expected `{c}` at column {}", self.pos + 1)))
        }
    }

    fn expr(&mut self) -> Result<TreePoly> {
        let mut acc = TreePoly::zero(&self.ctx.alphabet);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn term(&mut self) -> Result<TreePoly> {
        let coeff = match self.number() {
            Some(n) => {
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self
                        .number()
                        .ok_or_else(|| perr("missing denominator".into()))?;
                    if d == BigInt::from(0) {
                        return Err(perr("zero denominator".into()));
                    }
                    c /= BigRational::from_integer(d);
                }
                if self.peek() == Some('*') {
                    self.pos += 1;
                }
                Some(c)
            }
            None => None,
        };
        let f = self.factor()?;
        Ok(match coeff {
            Some(c) => f.scale(&c),
            None => f,
        })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        (start != self.pos).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn factor(&mut self) -> Result<TreePoly> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        let name = self
            .ident()
            .ok_or_else(|| perr(format!("expected a term at column {}", self.pos + 1)))?;
        if self.peek() == Some('(') {
            self.pos += 1;
            let mut args = vec![self.expr()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                args.push(self.expr()?);
            }
            self.expect(')')?;
            return self.call(&name, args);
        }
        variable(&name)
            .map(|v| TreePoly::var(&self.ctx.alphabet, v))
            .ok_or_else(|| perr(format!("unknown variable `{name}`")))
    }

    fn call(&self, name: &str, args: Vec<TreePoly>) -> Result<TreePoly> {
        if let Some(op) = self.ctx.alphabet.index_of(name) {
            if args.len() != 2 {
                return Err(perr(format!("operation `{name}` takes 2 arguments")));
            }
            return Ok(TreePoly::product(op, &args[0], &args[1]));
        }
        if let Some(m) = self.ctx.macros.get(name) {
            if args.len() != m.arity {
                return Err(perr(format!("`{name}` takes {} arguments", m.arity)));
            }
            return Ok(m.body.substitute_leaves(&|v| args[v as usize].clone()));
        }
        Err(Error::UnknownOperation(name.to_string()))
    }
}

/// Parses `x<i>`, `s<i>` or one of the aliases `x, y, z, t` to a 0-based index.
pub fn variable(name: &str) -> Option<u8> {
    match name {
        "x" => return Some(0),
        "y" => return Some(1),
        "z" => return Some(2),
        "t" => return Some(3),
        _ => {}
    }
    let digits = name.strip_prefix('x').or_else(|| name.strip_prefix('s'))?;
    let i: usize = digits.parse().ok()?;
    (1..=255).contains(&i).then(|| (i - 1) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bilinear_expansion() {
        let a = OpAlphabet::new(&["prec", "succ"]).unwrap();
        let r = parse(&a, "prec(prec(x,y),z) - prec(x, prec(y,z) + succ(y,z))").unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.multilinear_degree(), Ok(3));
    }

    #[test]
    fn coefficients() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let r = parse(&a, "2 mul(x1,x2) - 1/2*mul(x1,x2)").unwrap();
        let (_, c) = r.terms().next().unwrap();
        assert_eq!(*c, BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn macros_substitute() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let mut ctx = Context::new(&a);
        ctx.define("br", 2, "mul(x,y) - mul(y,x)").unwrap();
        ctx.define("assoc", 3, "mul(mul(x,y),z) - mul(x,mul(y,z))")
            .unwrap();
        let e = ctx.parse("br(br(x1,x2),x3)").unwrap();
        assert_eq!(e.len(), 4);
        let f = ctx.parse("assoc(x,y,z) + assoc(y,x,z)").unwrap();
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn errors() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        assert!(parse(&a, "mul(x1)").is_err());
        assert!(matches!(
            parse(&a, "foo(x1,x2)"),
            Err(Error::UnknownOperation(_))
        ));
        assert!(parse(&a, "mul(x1,x2) )").is_err());
        assert!(parse(&a, "q1").is_err());
    }
}

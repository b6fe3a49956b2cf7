//! Operator words such as `L_{br(br(x,y),z)} - L_x L_y L_z + 2 r_{mul(y,x)} l_z`.
//!
//! `L`/`l` act by left multiplication, `R`/`r` by right multiplication with
//! the subscript. Juxtaposition is composition, so `L_x L_y (t) = x(yt)`.
//! Subscripts are either a single variable or a braced expression in the
//! parsing context; parentheses group sums of words.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::expr::{self, Context};
use crate::freealg::text::parse_coeff;
use crate::freealg::{Polynomial, TreePoly};

enum Factor {
    Mult { left: bool, by: TreePoly },
    Group(Word),
}

struct Word(Vec<(BigRational, Vec<Factor>)>);

struct Parser<'a> {
    ctx: &'a Context,
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

fn malformed(src: &str, msg: impl std::fmt::Display) -> Error {
    Error::MalformedWord(format!("{msg} in `{src}`"))
}

impl Parser<'_> {
    fn err(&self, msg: impl std::fmt::Display) -> Error {
        malformed(self.src, format!("{msg} at column {}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, factors) = self.term()?;
            terms.push((sign * c, factors));
            match self.peek() {
                Some('+') => sign = BigRational::one(),
                Some('-') => sign = -BigRational::one(),
                _ => return Ok(Word(terms)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(BigRational, Vec<Factor>)> {
        let mut coeff = BigRational::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            while self.pos < self.chars.len()
                && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '/')
            {
                self.pos += 1;
            }
            let tok: String = self.chars[start..self.pos].iter().collect();
            coeff =
                parse_coeff(&tok).ok_or_else(|| self.err(format!("bad coefficient `{tok}`")))?;
            if self.peek() == Some('*') {
                self.pos += 1;
            }
        }
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            match c {
                'L' | 'l' | 'R' | 'r' => factors.push(self.mult()?),
                '(' => {
                    self.pos += 1;
                    let w = self.word()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("expected `)`"));
                    }
                    self.pos += 1;
                    factors.push(Factor::Group(w));
                }
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.err("expected an operator"));
        }
        Ok((coeff, factors))
    }

    fn mult(&mut self) -> Result<Factor> {
        let left = matches!(self.chars[self.pos], 'L' | 'l');
        self.pos += 1;
        if self.chars.get(self.pos) != Some(&'_') {
            return Err(self.err("expected `_` after operator letter"));
        }
        self.pos += 1;
        let sub: String = if self.chars.get(self.pos) == Some(&'{') {
            let start = self.pos + 1;
            let mut depth = 1;
            let mut i = start;
            while i < self.chars.len() {
                match self.chars[i] {
                    '{' => depth += 1,
                    '}' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                i += 1;
            }
            if depth != 0 {
                return Err(self.err("unbalanced `{`"));
            }
            self.pos = i + 1;
            self.chars[start..i].iter().collect()
        } else {
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("missing subscript"));
            }
            self.chars[start..self.pos].iter().collect()
        };
        let by = self
            .ctx
            .parse(&sub)
            .map_err(|e| malformed(self.src, format!("subscript `{sub}`: {e}")))?;
        Ok(Factor::Mult { left, by })
    }
}

fn apply(word: &Word, op: u8, arg: &TreePoly) -> TreePoly {
    let mut out = TreePoly::zero(arg.alphabet());
    for (c, factors) in &word.0 {
        let mut v = arg.clone();
        for f in factors.iter().rev() {
            v = match f {
                Factor::Mult { left: true, by } => TreePoly::product(op, by, &v),
                Factor::Mult { left: false, by } => TreePoly::product(op, &v, by),
                Factor::Group(w) => apply(w, op, &v),
            };
        }
        out = out.add(&v.scale(c));
    }
    out
}

/// Applies an operator word to `argument`, multiplying with operation `op`.
pub fn apply_operator_word(
    ctx: &Context,
    op: &str,
    word: &str,
    argument: &TreePoly,
) -> Result<TreePoly> {
    let op = ctx.alphabet().require(op)?;
    let mut p = Parser {
        ctx,
        src: word,
        chars: word.chars().collect(),
        pos: 0,
    };
    let w = p.word()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected input"));
    }
    Ok(apply(&w, op, argument))
}

/// The multilinear polynomial obtained by applying `word` to the variable
/// `argument` (e.g. `t`).
pub fn operator_word_to_poly(
    ctx: &Context,
    op: &str,
    word: &str,
    argument: &str,
) -> Result<Polynomial> {
    let v = expr::variable(argument)
        .ok_or_else(|| malformed(word, format!("bad argument variable `{argument}`")))?;
    let arg = TreePoly::var(ctx.alphabet(), v);
    let tp = apply_operator_word(ctx, op, word, &arg)?;
    if tp.is_zero() {
        // a word that cancels: the degree is that of any of its terms
        let plain = apply_operator_word(ctx, op, &word.replace('-', "+"), &arg)?;
        let d = plain.terms().next().map_or(1, |(t, _)| t.degree());
        return Ok(Polynomial::zero(d, ctx.alphabet()));
    }
    Polynomial::from_tree_poly(&tp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::OpAlphabet;

    fn ctx() -> Context {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let mut c = Context::new(&a);
        c.define("br", 2, "mul(x,y) - mul(y,x)").unwrap();
        c
    }

    #[test]
    fn single_left_multiplication() {
        let c = ctx();
        let p = operator_word_to_poly(&c, "mul", "L_{x1}", "x2").unwrap();
        assert_eq!(
            p,
            Polynomial::from_tree_poly(&c.parse("mul(x1,x2)").unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_and_groups() {
        let c = ctx();
        let p = operator_word_to_poly(&c, "mul", "2 L_x R_y - (L_x - R_x) l_{y}", "z").unwrap();
        let want = c
            .parse("2 mul(x,mul(z,y)) - mul(x,mul(y,z)) + mul(mul(y,z),x)")
            .unwrap();
        assert_eq!(p, Polynomial::from_tree_poly(&want).unwrap());
    }

    #[test]
    fn malformed_words() {
        let c = ctx();
        for w in ["", "L", "Lx", "L_{x", "L_x +", "3", "L_x )", "L_{mul(x)}"] {
            assert!(operator_word_to_poly(&c, "mul", w, "t").is_err(), "{w}");
        }
        assert!(matches!(
            operator_word_to_poly(&c, "mul", "L_{x", "t"),
            Err(Error::MalformedWord(_))
        ));
    }
}

//! The term-per-line polynomial format: `<coeff> ; <tree>`.
//!
//! Coefficients are integers or `a/b` rationals; trees are `op(<tree>,<tree>)`
//! or `x<i>`. Blank lines and lines starting with `#` are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::alphabet::OpAlphabet;
use super::poly::Polynomial;
use super::tree::{Tree, TreePoly};
use crate::error::{Error, Result};

pub fn parse_coeff(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn parse_tree(s: &str, alphabet: &OpAlphabet) -> std::result::Result<Tree, String> {
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let t = tree_at(&bytes, &mut pos, alphabet)?;
    if pos != bytes.len() {
        return Err(format!("trailing input in `{s}`"));
    }
    Ok(t)
}

fn tree_at(
    c: &[char],
    pos: &mut usize,
    alphabet: &OpAlphabet,
) -> std::result::Result<Tree, String> {
    let start = *pos;
    while *pos < c.len() && (c[*pos].is_ascii_alphanumeric() || c[*pos] == '_') {
        *pos += 1;
    }
    let name: String = c[start..*pos].iter().collect();
    if name.is_empty() {
        return Err(format!("expected a tree at offset {start}"));
    }
    if c.get(*pos) == Some(&'(') {
        *pos += 1;
        let op = alphabet
            .index_of(&name)
            .ok_or_else(|| format!("unknown operation `{name}`"))?;
        let l = tree_at(c, pos, alphabet)?;
        if c.get(*pos) != Some(&',') {
            return Err(format!("expected `,` at offset {}", *pos));
        }
        *pos += 1;
        let r = tree_at(c, pos, alphabet)?;
        if c.get(*pos) != Some(&')') {
            return Err(format!("expected `)` at offset {}", *pos));
        }
        *pos += 1;
        return Ok(Tree::node(op, l, r));
    }
    let v = name
        .strip_prefix('x')
        .or_else(|| name.strip_prefix('s'))
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| (1..=255).contains(&i))
        .ok_or_else(|| format!("bad variable `{name}`"))?;
    Ok(Tree::Leaf((v - 1) as u8))
}

/// Parses a single `<coeff> ; <tree>` line.
pub fn parse_term(
    line: &str,
    alphabet: &OpAlphabet,
) -> std::result::Result<(BigRational, Tree), String> {
    let (c, t) = line
        .split_once(';')
        .ok_or_else(|| format!("expected `<coeff> ; <tree>`, got `{line}`"))?;
    let coeff = parse_coeff(c).ok_or_else(|| format!("bad coefficient `{}`", c.trim()))?;
    Ok((coeff, parse_tree(t, alphabet)?))
}

/// Parses term lines into a tree polynomial (variables may repeat).
pub fn parse_tree_poly(text: &str, alphabet: &OpAlphabet) -> Result<TreePoly> {
    let mut tp = TreePoly::zero(alphabet);
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (c, t) = parse_term(line, alphabet).map_err(|msg| Error::Parse { line: i + 1, msg })?;
        tp.add_term(t, c);
    }
    Ok(tp)
}

/// Parses a multilinear polynomial written in the term-per-line format.
pub fn parse_polynomial(text: &str, alphabet: &OpAlphabet) -> Result<Polynomial> {
    Polynomial::from_tree_poly(&parse_tree_poly(text, alphabet)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_text() {
        let a = OpAlphabet::new(&["prec", "succ"]).unwrap();
        let src =
            "1 ; prec(prec(x1,x2),x3)\n-1 ; prec(x1,prec(x2,x3))\n-1 ; prec(x1,succ(x2,x3))\n";
        let p = parse_polynomial(src, &a).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(parse_polynomial(&p.to_text(), &a).unwrap(), p);
    }

    #[test]
    fn rational_coefficients_and_comments() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let p = parse_polynomial("# c\n\n-3/6 ; mul(x2,x1)\n", &a).unwrap();
        let (_, c) = p.terms().next().unwrap();
        assert_eq!(*c, BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn reports_line_numbers() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        match parse_polynomial("1 ; mul(x1,x2)\n1 ; mul(x1,)\n", &a) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("1 ; foo(x1,x2)", &a).is_err());
        assert!(parse_polynomial("1 ; x0", &a).is_err());
    }
}

//! Text files for identity systems and expansion rules.
//!
//! ```text
//! system alt-dendriform
//! ops prec,succ
//! identity
//! 1 ; prec(prec(x1,x2),x3)
//! -1 ; prec(x1,prec(x2,x3))
//! identity succ(x,y) - prec(y,x)
//! ```
//!
//! ```text
//! ruleset dendriform-commutator
//! source mul
//! ops prec,succ
//! rule mul -> succ(s1,s2) - prec(s2,s1)
//! ```
//!
//! A header line may carry its body inline in the expression language, or
//! leave it empty and list `<coeff> ; <tree>` lines below. Identities with
//! repeated variables are polarized.

use super::rule::ExpansionRule;
use super::system::IdentitySystem;
use crate::error::{Error, Result};
use crate::freealg::{expr, polarize, text, OpAlphabet, Polynomial, TreePoly};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn ops_line(rest: &str, line: usize) -> Result<OpAlphabet> {
    let names: Vec<&str> = rest
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    OpAlphabet::new(&names).map_err(|e| perr(line, e.to_string()))
}

fn strip_comment(raw: &str) -> &str {
    let l = raw.trim();
    if l.starts_with('#') {
        ""
    } else {
        l
    }
}

/// A body being collected: its header line and the tree polynomial so far.
struct Body {
    line: usize,
    key: String,
    poly: TreePoly,
}

fn add_line(body: &mut Body, l: &str, alphabet: &OpAlphabet, line: usize) -> Result<()> {
    let (c, t) = text::parse_term(l, alphabet).map_err(|m| perr(line, m))?;
    body.poly.add_term(t, c);
    Ok(())
}

fn inline(alphabet: &OpAlphabet, src: &str, line: usize) -> Result<TreePoly> {
    if src.is_empty() {
        Ok(TreePoly::zero(alphabet))
    } else {
        expr::parse(alphabet, src).map_err(|e| perr(line, e.to_string()))
    }
}

pub fn parse_system_file(src: &str) -> Result<IdentitySystem> {
    let mut name = None;
    let mut alphabet: Option<OpAlphabet> = None;
    let mut bodies: Vec<Body> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("system ") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("ops ") {
            alphabet = Some(ops_line(rest, line)?);
        } else if l == "identity" || l.starts_with("identity ") {
            let a = alphabet
                .as_ref()
                .ok_or_else(|| perr(line, "`ops` must come before identities"))?;
            let poly = inline(a, l["identity".len()..].trim(), line)?;
            bodies.push(Body {
                line,
                key: String::new(),
                poly,
            });
        } else {
            let a = alphabet
                .as_ref()
                .ok_or_else(|| perr(line, "`ops` must come first"))?;
            let body = bodies
                .last_mut()
                .ok_or_else(|| perr(line, "term line outside an identity"))?;
            add_line(body, l, a, line)?;
        }
    }
    let name = name.ok_or_else(|| perr(1, "missing `system <name>` line"))?;
    let alphabet = alphabet.ok_or_else(|| perr(1, "missing `ops` line"))?;
    let mut sys = IdentitySystem::empty(&name, &alphabet);
    for b in bodies {
        if b.poly.is_zero() {
            return Err(perr(b.line, "empty identity"));
        }
        let polys = match Polynomial::from_tree_poly(&b.poly) {
            Ok(p) => vec![p],
            Err(_) => polarize(&b.poly).map_err(|e| perr(b.line, e.to_string()))?,
        };
        for p in polys {
            sys.push(p)?;
        }
    }
    Ok(sys)
}

pub fn system_to_text(system: &IdentitySystem) -> String {
    let mut s = format!(
        "system {}\nops {}\n",
        system.name(),
        system.alphabet().names().join(",")
    );
    for f in system.identities() {
        s.push_str("identity\n");
        s.push_str(&f.to_text());
    }
    s
}

pub fn parse_rule_file(src: &str) -> Result<ExpansionRule> {
    let mut name = None;
    let mut source: Option<OpAlphabet> = None;
    let mut target: Option<OpAlphabet> = None;
    let mut bodies: Vec<Body> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let l = strip_comment(raw);
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("ruleset ") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("source ") {
            source = Some(ops_line(rest, line)?);
        } else if let Some(rest) = l.strip_prefix("ops ") {
            target = Some(ops_line(rest, line)?);
        } else if let Some(rest) = l.strip_prefix("rule ") {
            let t = target
                .as_ref()
                .ok_or_else(|| perr(line, "`ops` must come before rules"))?;
            let (op, body) = rest
                .split_once("->")
                .ok_or_else(|| perr(line, "expected `rule <op> -> ...`"))?;
            let poly = inline(t, body.trim(), line)?;
            bodies.push(Body {
                line,
                key: op.trim().to_string(),
                poly,
            });
        } else {
            let t = target
                .as_ref()
                .ok_or_else(|| perr(line, "`ops` must come first"))?;
            let body = bodies
                .last_mut()
                .ok_or_else(|| perr(line, "term line outside a rule"))?;
            add_line(body, l, t, line)?;
        }
    }
    let name = name.ok_or_else(|| perr(1, "missing `ruleset <name>` line"))?;
    let source = source.ok_or_else(|| perr(1, "missing `source` line"))?;
    let target = target.ok_or_else(|| perr(1, "missing `ops` line"))?;
    let mut images = vec![None; source.len()];
    for b in bodies {
        let op = source
            .index_of(&b.key)
            .ok_or_else(|| perr(b.line, format!("unknown source operation `{}`", b.key)))?;
        if images[op as usize].replace(b.poly).is_some() {
            return Err(perr(b.line, format!("second rule for `{}`", b.key)));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.ok_or_else(|| perr(1, format!("no rule for `{}`", source.name(i as u8))))
        })
        .collect::<Result<Vec<_>>>()?;
    ExpansionRule::new(&name, &source, &target, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DENDRIFORM: &str = "\
# the three dendriform axioms
system dendriform
ops prec,succ
identity prec(prec(x,y),z) - prec(x, prec(y,z) + succ(y,z))
identity
1 ; prec(succ(x1,x2),x3)
-1 ; succ(x1,prec(x2,x3))
identity succ(prec(x,y) + succ(x,y), z) - succ(x,succ(y,z))
";

    #[test]
    fn system_roundtrip() {
        let s = parse_system_file(DENDRIFORM).unwrap();
        assert_eq!(s.name(), "dendriform");
        assert_eq!(s.len(), 3);
        assert_eq!(s.identities()[0].len(), 3);
        let again = parse_system_file(&system_to_text(&s)).unwrap();
        assert_eq!(again.identities(), s.identities());
    }

    #[test]
    fn repeated_variables_are_polarized() {
        let s =
            parse_system_file("system alt\nops mul\nidentity mul(mul(x,x),y) - mul(x,mul(x,y))\n")
                .unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.identities()[0].degree(), 3);
        assert_eq!(s.identities()[0].len(), 4);
    }

    #[test]
    fn rule_roundtrip() {
        let src = "ruleset dc\nsource mul\nops prec,succ\nrule mul -> succ(s1,s2) - prec(s2,s1)\n";
        let r = parse_rule_file(src).unwrap();
        let again = parse_rule_file(&r.to_text()).unwrap();
        assert_eq!(again.image(0), r.image(0));
        assert_eq!(r.image(0).len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "system s\nops mul\nidentity\n1 ; mul(x1,\n";
        assert!(matches!(
            parse_system_file(bad),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_system_file("ops mul\nidentity mul(x,y)\n"),
            Err(Error::Parse { .. })
        ));
        let missing = "ruleset r\nsource mul,br\nops mul\nrule mul -> mul(s1,s2)\n";
        assert!(parse_rule_file(missing).is_err());
        let unknown = "ruleset r\nsource mul\nops mul\nrule foo -> mul(s1,s2)\n";
        assert!(matches!(
            parse_rule_file(unknown),
            Err(Error::Parse { line: 4, .. })
        ));
    }
}

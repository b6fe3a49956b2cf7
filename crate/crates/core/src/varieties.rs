//! Built-in identity systems and expansion rules.
//!
//! Operation names: `mul` for the single product of a variety, `br` for a
//! bracket, `prec`/`succ` for dendriform structures, `nw`/`ne`/`sw`/`se` for
//! quadrialgebras and `tl`/`tr` (◀/▶) for L-, M- and J-dendriform algebras.

use crate::error::{Error, Result};
use crate::freealg::expr::Context;
use crate::freealg::{polarize, OpAlphabet, Polynomial, TreePoly};
use crate::identmod::{operator_word_to_poly, ExpansionRule, IdentitySystem};

/// A catalog system together with its unpolarized source identities.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub system: IdentitySystem,
    /// Identities as written, before polarization (empty when they were
    /// multilinear already).
    pub raw: Vec<TreePoly>,
    pub note: &'static str,
}

#[derive(Clone, Debug)]
pub struct RuleEntry {
    pub name: &'static str,
    pub rule: ExpansionRule,
    pub note: &'static str,
}

fn alphabet(ops: &[&str]) -> OpAlphabet {
    OpAlphabet::new(ops).expect("catalog alphabets are valid")
}

/// `br` bracket with the Jacobian `jac`.
pub fn bracket_context() -> Context {
    let mut c = Context::new(&alphabet(&["br"]));
    c.define("jac", 3, "br(br(x,y),z) + br(br(y,z),x) + br(br(z,x),y)")
        .unwrap();
    c
}

/// `mul` with `br` (commutator), `circ` (anticommutator), `assoc`, `pl`
/// (left-symmetric identity) and `pm` (the pre-Malcev identity).
pub fn product_context() -> Context {
    let mut c = Context::new(&alphabet(&["mul"]));
    c.define("br", 2, "mul(x,y) - mul(y,x)").unwrap();
    c.define("circ", 2, "mul(x,y) + mul(y,x)").unwrap();
    c.define("assoc", 3, "mul(mul(x,y),z) - mul(x,mul(y,z))")
        .unwrap();
    c.define("pl", 3, "assoc(x,y,z) - assoc(y,x,z)").unwrap();
    c.define(
        "pm",
        4,
        "mul(mul(y,z),mul(x,t)) - mul(mul(z,y),mul(x,t)) \
         + mul(mul(mul(x,y),z),t) - mul(mul(mul(y,x),z),t) \
         - mul(mul(z,mul(x,y)),t) + mul(mul(z,mul(y,x)),t) \
         + mul(y,mul(mul(x,z),t)) - mul(y,mul(mul(z,x),t)) \
         - mul(x,mul(y,mul(z,t))) + mul(z,mul(x,mul(y,t)))",
    )
    .unwrap();
    c
}

/// `prec`/`succ` with the right, middle and left associators `ar`, `am`, `al`.
pub fn dendriform_context() -> Context {
    let mut c = Context::new(&alphabet(&["prec", "succ"]));
    c.define("star", 2, "prec(x,y) + succ(x,y)").unwrap();
    c.define("ar", 3, "prec(prec(x,y),z) - prec(x, star(y,z))")
        .unwrap();
    c.define("am", 3, "prec(succ(x,y),z) - succ(x, prec(y,z))")
        .unwrap();
    c.define("al", 3, "succ(star(x,y),z) - succ(x, succ(y,z))")
        .unwrap();
    c
}

/// Quadrialgebra operations, their sums and the nine associators
/// `ar al ane asw an aw as ae am`.
pub fn quadri_context() -> Context {
    let mut c = Context::new(&alphabet(&["nw", "ne", "sw", "se"]));
    c.define("succ", 2, "ne(x,y) + se(x,y)").unwrap();
    c.define("prec", 2, "nw(x,y) + sw(x,y)").unwrap();
    c.define("vee", 2, "se(x,y) + sw(x,y)").unwrap();
    c.define("wedge", 2, "ne(x,y) + nw(x,y)").unwrap();
    c.define("star", 2, "succ(x,y) + prec(x,y)").unwrap();
    c.define("ar", 3, "nw(nw(x,y),z) - nw(x, star(y,z))")
        .unwrap();
    c.define("al", 3, "se(star(x,y),z) - se(x, se(y,z))")
        .unwrap();
    c.define("ane", 3, "ne(wedge(x,y),z) - ne(x, succ(y,z))")
        .unwrap();
    c.define("asw", 3, "sw(prec(x,y),z) - sw(x, vee(y,z))")
        .unwrap();
    c.define("an", 3, "nw(ne(x,y),z) - ne(x, prec(y,z))")
        .unwrap();
    c.define("aw", 3, "nw(sw(x,y),z) - sw(x, wedge(y,z))")
        .unwrap();
    c.define("as", 3, "sw(succ(x,y),z) - se(x, sw(y,z))")
        .unwrap();
    c.define("ae", 3, "ne(vee(x,y),z) - se(x, ne(y,z))")
        .unwrap();
    c.define("am", 3, "nw(se(x,y),z) - se(x, nw(y,z))").unwrap();
    c
}

/// `tl`/`tr` (◀/▶) with `dot`, `dia` and `circ` for J-dendriform algebras
/// and `ld1`, `ld2` for L-dendriform algebras.
pub fn triangle_context() -> Context {
    let mut c = Context::new(&alphabet(&["tl", "tr"]));
    c.define("dot", 2, "tr(x,y) + tl(y,x)").unwrap();
    c.define("dia", 2, "tr(x,y) + tl(x,y)").unwrap();
    c.define("circ", 2, "dia(x,y) + dia(y,x)").unwrap();
    c.define(
        "ld1",
        3,
        "tr(x,tr(y,z)) - tr(tr(x,y),z) - tr(tl(x,y),z) - tr(y,tr(x,z)) + tr(tl(y,x),z) + tr(tr(y,x),z)",
    )
    .unwrap();
    c.define(
        "ld2",
        3,
        "tr(x,tl(y,z)) - tl(tr(x,y),z) - tl(y,tr(x,z)) - tl(y,tl(x,z)) + tl(tl(y,x),z)",
    )
    .unwrap();
    c
}

pub const MD1: &str = "\
    tr(tr(tr(x,y),z),t) - tr(tr(tl(y,x),z),t) - tr(tl(z,tr(x,y)),t) + tr(tl(z,tl(y,x)),t) \
  - tr(x,tl(y,tl(z,t))) - tr(x,tr(y,tl(z,t))) - tr(x,tl(y,tr(z,t))) - tr(x,tr(y,tr(z,t))) \
  + tl(z,tr(x,tl(y,t))) + tl(z,tr(x,tr(y,t))) \
  + tl(tl(y,z),tr(x,t)) + tl(tr(y,z),tr(x,t)) - tl(tl(z,y),tr(x,t)) - tl(tr(z,y),tr(x,t)) \
  - tl(y,tr(tl(z,x),t)) + tl(y,tr(tr(x,z),t))";

pub const MD2: &str = "\
    tr(tr(tl(x,y),z),t) - tr(tr(tr(y,x),z),t) - tr(tl(z,tl(x,y)),t) + tr(tl(z,tr(y,x)),t) \
  - tl(x,tr(y,tl(z,t))) - tl(x,tr(y,tr(z,t))) + tl(z,tl(x,tr(y,t))) \
  + tr(tr(y,z),tl(x,t)) + tr(tr(y,z),tr(x,t)) - tr(tl(z,y),tl(x,t)) - tr(tl(z,y),tr(x,t)) \
  - tr(y,tl(tl(z,x),t)) - tr(y,tr(tl(z,x),t)) - tr(y,tl(tr(z,x),t)) - tr(y,tr(tr(z,x),t)) \
  + tr(y,tl(tl(x,z),t)) + tr(y,tr(tl(x,z),t)) + tr(y,tl(tr(x,z),t)) + tr(y,tr(tr(x,z),t))";

pub const MD3: &str = "\
    tr(tl(tl(x,y),z),t) + tr(tl(tr(x,y),z),t) - tr(tl(tl(y,x),z),t) - tr(tl(tr(y,x),z),t) \
  - tr(tr(z,tl(x,y)),t) - tr(tr(z,tr(x,y)),t) + tr(tr(z,tl(y,x)),t) + tr(tr(z,tr(y,x)),t) \
  - tl(x,tl(y,tr(z,t))) \
  + tr(z,tl(x,tl(y,t))) + tr(z,tr(x,tl(y,t))) + tr(z,tl(x,tr(y,t))) + tr(z,tr(x,tr(y,t))) \
  + tr(tl(y,z),tl(x,t)) + tr(tl(y,z),tr(x,t)) - tr(tr(z,y),tl(x,t)) - tr(tr(z,y),tr(x,t)) \
  - tl(y,tr(tr(z,x),t)) + tl(y,tr(tl(x,z),t))";

pub const MD4: &str = "\
    tl(tl(tl(x,y),z),t) + tl(tr(tl(x,y),z),t) + tl(tl(tr(x,y),z),t) + tl(tr(tr(x,y),z),t) \
  - tl(tl(tl(y,x),z),t) - tl(tr(tl(y,x),z),t) - tl(tl(tr(y,x),z),t) - tl(tr(tr(y,x),z),t) \
  - tl(tl(z,tl(x,y)),t) - tl(tr(z,tl(x,y)),t) - tl(tl(z,tr(x,y)),t) - tl(tr(z,tr(x,y)),t) \
  + tl(tl(z,tl(y,x)),t) + tl(tr(z,tl(y,x)),t) + tl(tl(z,tr(y,x)),t) + tl(tr(z,tr(y,x)),t) \
  - tl(x,tl(y,tl(z,t))) + tl(z,tl(x,tl(y,t))) \
  + tl(tl(y,z),tl(x,t)) + tl(tr(y,z),tl(x,t)) - tl(tl(z,y),tl(x,t)) - tl(tr(z,y),tl(x,t)) \
  - tl(y,tl(tl(z,x),t)) - tl(y,tl(tr(z,x),t)) + tl(y,tl(tl(x,z),t)) + tl(y,tl(tr(x,z),t))";

pub const J_DENDRIFORM: [&str; 5] = [
    "tr(circ(x,y),tr(z,t)) + tr(circ(y,z),tr(x,t)) + tr(circ(z,x),tr(y,t)) \
     - tr(x,tr(circ(y,z),t)) - tr(y,tr(circ(z,x),t)) - tr(z,tr(circ(x,y),t))",
    "tr(circ(x,y),tr(z,t)) + tr(circ(y,z),tr(x,t)) + tr(circ(z,x),tr(y,t)) \
     - tr(x,tr(y,tr(z,t))) - tr(z,tr(y,tr(x,t))) - tr(circ(y,circ(z,x)),t)",
    "tr(circ(x,y),tl(z,t)) + tl(dot(x,z),dia(y,t)) + tl(dot(y,z),dia(x,t)) \
     - tr(x,tl(z,dia(y,t))) - tr(y,tl(z,dia(x,t))) - tl(dot(circ(x,y),z),t)",
    "tl(dot(z,y),dia(x,t)) + tl(dot(x,y),dia(z,t)) + tr(circ(x,z),tl(y,t)) \
     - tr(x,tl(dot(z,y),t)) - tr(z,tl(dot(x,y),t)) - tl(y,dia(circ(x,z),t))",
    "tr(circ(x,y),tl(z,t)) + tl(dot(x,z),dia(y,t)) + tl(dot(y,z),dia(x,t)) \
     - tr(x,tr(y,tl(z,t))) - tl(z,dia(y,dia(x,t))) - tl(dot(y,dot(x,z)),t)",
];

pub const PRE_JORDAN: [&str; 2] = [
    "mul(circ(x,y),mul(z,t)) + mul(circ(y,z),mul(x,t)) + mul(circ(z,x),mul(y,t)) \
     - mul(z,mul(circ(x,y),t)) - mul(x,mul(circ(y,z),t)) - mul(y,mul(circ(z,x),t))",
    "mul(x,mul(y,mul(z,t))) + mul(z,mul(y,mul(x,t))) + mul(circ(circ(x,z),y),t) \
     - mul(z,mul(circ(x,y),t)) - mul(x,mul(circ(y,z),t)) - mul(y,mul(circ(z,x),t))",
];

/// Bimodule axioms for a pre-Malcev algebra as operator words in `l`, `r`
/// over `product_context`, applied to a module element.
pub const BIMODULE_AXIOMS: [&str; 4] = [
    "r_x r_y r_z - r_x r_y l_z - r_x l_y r_z + r_x l_y l_z - r_{mul(z,mul(y,x))} \
     + l_y r_{mul(z,x)} + l_{mul(z,y)} r_x - l_{mul(y,z)} r_x - l_z r_x l_y + l_z r_x r_y",
    "r_x r_y l_z - r_x r_y r_z - r_x l_y l_z + r_x l_y r_z - l_z r_{mul(y,x)} \
     + l_y l_z r_x + r_{mul(z,x)} r_y - r_{mul(z,x)} l_y - r_{mul(mul(y,z),x)} + r_{mul(mul(z,y),x)}",
    "r_x l_{mul(y,z)} - r_x l_{mul(z,y)} - r_x r_{mul(y,z)} + r_x r_{mul(z,y)} - l_y l_z r_x \
     + r_{mul(y,mul(z,x))} + r_{mul(y,x)} l_z - r_{mul(y,x)} r_z - l_z r_x r_y + l_z r_x l_y",
    "l_{mul(mul(x,y),z)} - l_{mul(mul(y,x),z)} - l_{mul(z,mul(x,y))} + l_{mul(z,mul(y,x))} \
     - l_x l_y l_z + l_z l_x l_y + l_{mul(y,z)} l_x - l_{mul(z,y)} l_x - l_y l_{mul(z,x)} + l_y l_{mul(x,z)}",
];

/// The Malcev representation condition written for left multiplications.
pub const KUZMIN_WORD: &str =
    "L_{br(br(x,y),z)} - L_x L_y L_z + L_z L_x L_y - L_y L_{br(z,x)} + L_{br(y,z)} L_x";

const SYSTEMS: &[(&str, &str)] = &[
    (
        "malcev",
        "anticommutativity and the polarized Malcev identity",
    ),
    ("sagle", "anticommutativity and Sagle's identity"),
    (
        "kuzmin",
        "Malcev representation condition for left multiplications",
    ),
    ("pre-lie", "left-symmetric identity"),
    ("pre-malcev", "the identity PM"),
    (
        "pre-malcev-bimodule",
        "bimodule axioms with l, r the left and right multiplications",
    ),
    ("alternative", "left and right alternative laws, polarized"),
    ("associative", "associativity"),
    (
        "alt-dendriform",
        "alternative dendriform dialgebras (four identities)",
    ),
    ("dendriform", "dendriform dialgebras (three axioms)"),
    ("alt-quadri", "alternative quadrialgebras (nine identities)"),
    ("quadri", "quadri-algebras (nine associators vanish)"),
    ("l-dendriform", "L-dendriform algebras"),
    ("m-dendriform", "M-dendriform algebras (MD1-MD4)"),
    ("jordan", "commutativity and the polarized Jordan identity"),
    ("pre-jordan", "pre-Jordan algebras"),
    ("j-dendriform", "J-dendriform algebras"),
];

const RULES: &[(&str, &str)] = &[
    ("commutator", "br -> mul(x,y) - mul(y,x)"),
    ("anticommutator", "mul -> mul(x,y) + mul(y,x)"),
    ("dendriform-commutator", "mul -> succ(x,y) - prec(y,x)"),
    ("dendriform-anticommutator", "mul -> succ(x,y) + prec(y,x)"),
    ("dendriform-sum", "mul -> prec(x,y) + succ(x,y)"),
    (
        "m-extraction",
        "tl -> ne(x,y) - sw(y,x), tr -> se(x,y) - nw(y,x)",
    ),
    (
        "j-extraction",
        "tl -> ne(x,y) + sw(y,x), tr -> se(x,y) + nw(y,x)",
    ),
    ("horizontal-pre-malcev", "mul -> tr(x,y) + tl(x,y)"),
    ("vertical-pre-malcev", "mul -> tr(x,y) - tl(y,x)"),
    ("quadri-horizontal", "prec -> nw + sw, succ -> ne + se"),
    (
        "quadri-vertical",
        "prec -> ne + nw (wedge), succ -> se + sw (vee)",
    ),
    ("quadri-total", "mul -> sum of the four quadri operations"),
];

fn available(names: &[(&str, &str)]) -> String {
    names.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
}

pub fn system_names() -> Vec<&'static str> {
    SYSTEMS.iter().map(|(n, _)| *n).collect()
}

pub fn rule_names() -> Vec<&'static str> {
    RULES.iter().map(|(n, _)| *n).collect()
}

fn polys(ctx: &Context, srcs: &[&str]) -> Vec<Polynomial> {
    srcs.iter()
        .map(|s| {
            Polynomial::from_tree_poly(&ctx.parse(s).expect("catalog identity parses"))
                .expect("catalog identity is multilinear")
        })
        .collect()
}

pub fn get_entry(name: &str) -> Result<CatalogEntry> {
    let (name, note) =
        *SYSTEMS
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownEntry {
                name: name.to_string(),
                available: available(SYSTEMS),
            })?;
    let mut raw = Vec::new();
    let (ctx, ids): (Context, Vec<Polynomial>) = match name {
        "malcev" => {
            let c = bracket_context();
            let malcev = c.parse("jac(x,y,br(x,z)) - br(jac(x,y,z),x)")?;
            let mut ids = polys(&c, &["br(x,y) + br(y,x)"]);
            ids.extend(polarize(&malcev)?);
            raw.push(malcev);
            (c, ids)
        }
        "sagle" => {
            let c = bracket_context();
            let ids = polys(
                &c,
                &[
                    "br(x,y) + br(y,x)",
                    "br(br(x,z),br(y,t)) - br(br(br(x,y),z),t) - br(br(br(y,z),t),x) \
                     - br(br(br(z,t),x),y) - br(br(br(t,x),y),z)",
                ],
            );
            (c, ids)
        }
        "kuzmin" => {
            let c = product_context();
            let p = operator_word_to_poly(&c, "mul", KUZMIN_WORD, "t")?;
            (c, vec![p])
        }
        "pre-lie" => {
            let c = product_context();
            let ids = polys(&c, &["pl(x,y,z)"]);
            (c, ids)
        }
        "pre-malcev" => {
            let c = product_context();
            let ids = polys(&c, &["pm(x,y,z,t)"]);
            (c, ids)
        }
        "pre-malcev-bimodule" => {
            let c = product_context();
            let ids = BIMODULE_AXIOMS
                .iter()
                .map(|w| operator_word_to_poly(&c, "mul", w, "t"))
                .collect::<Result<Vec<_>>>()?;
            (c, ids)
        }
        "alternative" => {
            let c = product_context();
            let left = c.parse("assoc(x,x,y)")?;
            let right = c.parse("assoc(y,x,x)")?;
            let mut ids = polarize(&left)?;
            ids.extend(polarize(&right)?);
            raw.extend([left, right]);
            (c, ids)
        }
        "associative" => {
            let c = product_context();
            let ids = polys(&c, &["assoc(x,y,z)"]);
            (c, ids)
        }
        "alt-dendriform" => {
            let c = dendriform_context();
            let ids = polys(
                &c,
                &[
                    "am(x,y,z) + ar(y,x,z)",
                    "am(x,y,z) + al(x,z,y)",
                    "ar(x,y,z) + ar(x,z,y)",
                    "al(x,y,z) + al(y,x,z)",
                ],
            );
            (c, ids)
        }
        "dendriform" => {
            let c = dendriform_context();
            let ids = polys(&c, &["ar(x,y,z)", "am(x,y,z)", "al(x,y,z)"]);
            (c, ids)
        }
        "alt-quadri" => {
            let c = quadri_context();
            let ids = polys(
                &c,
                &[
                    "ar(x,y,z) + am(y,x,z)",
                    "ar(x,y,z) + ar(x,z,y)",
                    "an(x,y,z) + aw(y,x,z)",
                    "an(x,y,z) + ane(x,z,y)",
                    "ane(x,y,z) + ae(y,x,z)",
                    "aw(x,y,z) + asw(x,z,y)",
                    "asw(x,y,z) + as(y,x,z)",
                    "am(x,y,z) + al(x,z,y)",
                    "al(x,y,z) + al(y,x,z)",
                ],
            );
            (c, ids)
        }
        "quadri" => {
            let c = quadri_context();
            let ids = polys(
                &c,
                &[
                    "ar(x,y,z)",
                    "al(x,y,z)",
                    "ane(x,y,z)",
                    "asw(x,y,z)",
                    "an(x,y,z)",
                    "aw(x,y,z)",
                    "as(x,y,z)",
                    "ae(x,y,z)",
                    "am(x,y,z)",
                ],
            );
            (c, ids)
        }
        "l-dendriform" => {
            let c = triangle_context();
            let ids = polys(&c, &["ld1(x,y,z)", "ld2(x,y,z)"]);
            (c, ids)
        }
        "m-dendriform" => {
            let c = triangle_context();
            // MD1-MD4 are written with the two triangles the other way round
            // from LD1/LD2; flip them so both families share one convention.
            let ids = polys(&c, &[MD1, MD2, MD3, MD4])
                .into_iter()
                .map(|f| {
                    f.rename_ops(c.alphabet(), &[("tl", "tr"), ("tr", "tl")])
                        .expect("triangle swap")
                })
                .collect();
            (c, ids)
        }
        "jordan" => {
            let c = product_context();
            let jordan = c.parse("mul(mul(x,y),mul(x,x)) - mul(x,mul(y,mul(x,x)))")?;
            let mut ids = polys(&c, &["mul(x,y) - mul(y,x)"]);
            ids.extend(polarize(&jordan)?);
            raw.push(jordan);
            (c, ids)
        }
        "pre-jordan" => {
            let c = product_context();
            let ids = polys(&c, &PRE_JORDAN);
            (c, ids)
        }
        "j-dendriform" => {
            let c = triangle_context();
            let ids = polys(&c, &J_DENDRIFORM);
            (c, ids)
        }
        _ => unreachable!("every listed system is built above"),
    };
    let system = IdentitySystem::new(name, ctx.alphabet(), ids)?;
    Ok(CatalogEntry {
        name,
        system,
        raw,
        note,
    })
}

pub fn get_system(name: &str) -> Result<IdentitySystem> {
    Ok(get_entry(name)?.system)
}

pub fn get_rule_entry(name: &str) -> Result<RuleEntry> {
    let (name, note) =
        *RULES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownEntry {
                name: name.to_string(),
                available: available(RULES),
            })?;
    let mul = alphabet(&["mul"]);
    let tri = alphabet(&["tl", "tr"]);
    let dend = alphabet(&["prec", "succ"]);
    let rule = match name {
        "commutator" => ExpansionRule::from_exprs(
            name,
            &alphabet(&["br"]),
            &product_context(),
            &[("br", "mul(x,y) - mul(y,x)")],
        ),
        "anticommutator" => ExpansionRule::from_exprs(
            name,
            &mul,
            &product_context(),
            &[("mul", "mul(x,y) + mul(y,x)")],
        ),
        "dendriform-commutator" => ExpansionRule::from_exprs(
            name,
            &mul,
            &dendriform_context(),
            &[("mul", "succ(x,y) - prec(y,x)")],
        ),
        "dendriform-anticommutator" => ExpansionRule::from_exprs(
            name,
            &mul,
            &dendriform_context(),
            &[("mul", "succ(x,y) + prec(y,x)")],
        ),
        "dendriform-sum" => ExpansionRule::from_exprs(
            name,
            &mul,
            &dendriform_context(),
            &[("mul", "prec(x,y) + succ(x,y)")],
        ),
        "m-extraction" => ExpansionRule::from_exprs(
            name,
            &tri,
            &quadri_context(),
            &[("tl", "ne(x,y) - sw(y,x)"), ("tr", "se(x,y) - nw(y,x)")],
        ),
        "j-extraction" => ExpansionRule::from_exprs(
            name,
            &tri,
            &quadri_context(),
            &[("tl", "ne(x,y) + sw(y,x)"), ("tr", "se(x,y) + nw(y,x)")],
        ),
        "horizontal-pre-malcev" => ExpansionRule::from_exprs(
            name,
            &mul,
            &triangle_context(),
            &[("mul", "tr(x,y) + tl(x,y)")],
        ),
        "vertical-pre-malcev" => ExpansionRule::from_exprs(
            name,
            &mul,
            &triangle_context(),
            &[("mul", "tr(x,y) - tl(y,x)")],
        ),
        "quadri-horizontal" => ExpansionRule::from_exprs(
            name,
            &dend,
            &quadri_context(),
            &[("prec", "prec(x,y)"), ("succ", "succ(x,y)")],
        ),
        "quadri-vertical" => ExpansionRule::from_exprs(
            name,
            &dend,
            &quadri_context(),
            &[("prec", "wedge(x,y)"), ("succ", "vee(x,y)")],
        ),
        "quadri-total" => {
            ExpansionRule::from_exprs(name, &mul, &quadri_context(), &[("mul", "star(x,y)")])
        }
        _ => unreachable!("every listed rule is built above"),
    }?;
    Ok(RuleEntry { name, rule, note })
}

pub fn get_rule(name: &str) -> Result<ExpansionRule> {
    Ok(get_rule_entry(name)?.rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for n in system_names() {
            let s = get_system(n).unwrap();
            assert!(!s.is_empty(), "{n}");
        }
        for n in rule_names() {
            get_rule(n).unwrap();
        }
    }

    #[test]
    fn unknown_names_list_the_catalog() {
        match get_system("lie") {
            Err(Error::UnknownEntry { available, .. }) => assert!(available.contains("pre-malcev")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(get_rule("nope"), Err(Error::UnknownEntry { .. })));
    }

    #[test]
    fn entry_shapes() {
        let pm = get_system("pre-malcev").unwrap();
        assert_eq!(pm.len(), 1);
        assert_eq!(pm.identities()[0].degree(), 4);
        assert_eq!(pm.identities()[0].len(), 10);
        let aq = get_system("alt-quadri").unwrap();
        assert_eq!(aq.len(), 9);
        assert_eq!(aq.alphabet().len(), 4);
        assert!(aq.identities().iter().all(|f| f.degree() == 3));
        let md = get_system("m-dendriform").unwrap();
        assert_eq!(
            md.identities().iter().map(|f| f.len()).collect::<Vec<_>>(),
            vec![16, 19, 19, 26]
        );
        let malcev = get_entry("malcev").unwrap();
        assert_eq!(malcev.raw.len(), 1);
        assert_eq!(malcev.system.max_degree(), 4);
    }

    #[test]
    fn dendriform_commutator_on_a_product() {
        let r = get_rule("dendriform-commutator").unwrap();
        let p =
            Polynomial::from_tree_poly(&product_context().parse("mul(x1,x2)").unwrap()).unwrap();
        let want = Polynomial::from_tree_poly(
            &dendriform_context()
                .parse("succ(x1,x2) - prec(x2,x1)")
                .unwrap(),
        )
        .unwrap();
        assert_eq!(r.expand(&p).unwrap(), want);
    }
}

#![allow(dead_code)]

use bitrade::group::{Element, Group};
use bitrade::latin::{examples, from_group, Bitrade, GroupTripleInput};

/// Groups whose (G1)/(G2) triples make up the test corpus.
pub const CORPUS_GROUPS: [&str; 5] = ["sym:3", "prod:cyc:3,cyc:3", "alt:4", "gens:4:(1,2,3,4);(1,3)", "p3:3"];

/// Every `(a, b, (ab)⁻¹)` passing (G1) and (G2), found by brute force.
pub fn triples(spec: &str) -> Vec<GroupTripleInput> {
    let g: Group = spec.parse().unwrap();
    let elems = g.elements().unwrap();
    let mut out = Vec::new();
    for a in elems.iter() {
        for b in elems.iter() {
            let c = g.inverse(&g.mul(a, b).unwrap());
            if let Ok(input) = GroupTripleInput::new(g.clone(), a.clone(), b.clone(), c) {
                out.push(input);
            }
        }
    }
    out
}

pub fn group_corpus() -> Vec<(GroupTripleInput, Bitrade)> {
    CORPUS_GROUPS
        .iter()
        .flat_map(|g| triples(g))
        .map(|input| {
            let b = from_group(&input).unwrap();
            (input, b)
        })
        .collect()
}

pub fn example_corpus() -> Vec<Bitrade> {
    vec![examples::egg1(), examples::intercalate(), examples::two_intercalates(), examples::non_separated()]
}

/// `(old label, printed name)` pairs for one role, in the given order.
/// Each name is given with an element of its coset.
pub fn coset_names(g: &Group, tag: &str, gen: &Element, names: &[(&str, Element)]) -> Vec<(String, String)> {
    let h = g.generated_subgroup(gen);
    names
        .iter()
        .map(|(name, x)| (format!("{tag}:{}", g.coset_of(x, &h).rep()), name.to_string()))
        .collect()
}

/// A bitrade typed in as two grids: `rows`, `cols`, then one row of cell
/// entries per row label, `""` for empty cells.
pub fn from_grids(rows: &[&str], cols: &[&str], circ: &[&[&str]], star: &[&[&str]]) -> Bitrade {
    let mut tc = Vec::new();
    let mut ts = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            if !circ[i][j].is_empty() {
                tc.push([r.to_string(), c.to_string(), circ[i][j].to_string()]);
            }
            if !star[i][j].is_empty() {
                ts.push([r.to_string(), c.to_string(), star[i][j].to_string()]);
            }
        }
    }
    Bitrade::from_labels(&tc, &ts).unwrap()
}

/// Reorders the alphabets of `b` without renaming.
pub fn reorder(b: &Bitrade, rows: &[&str], cols: &[&str], syms: &[&str]) -> Bitrade {
    let same = |xs: &[&str]| xs.iter().map(|x| (x.to_string(), x.to_string())).collect::<Vec<_>>();
    b.relabeled([&same(rows), &same(cols), &same(syms)]).unwrap()
}

pub struct Golden {
    pub constructed: Bitrade,
    pub printed: Bitrade,
}

/// The S₃ example: `a = s`, `b = t`, `c = ts²` with `s = (123)`, `t = (12)`.
pub fn s3_golden() -> Golden {
    let g: Group = "sym:3".parse().unwrap();
    let s = g.parse_element("(1,2,3)").unwrap();
    let t = g.parse_element("(1,2)").unwrap();
    let s2 = g.mul(&s, &s).unwrap();
    let c = g.mul(&t, &s2).unwrap();
    let input = GroupTripleInput::new(g.clone(), s.clone(), t.clone(), c.clone()).unwrap();
    let built = from_group(&input).unwrap();
    let id = g.identity();
    let rows = coset_names(&g, "A", &s, &[("A", id.clone()), ("tA", t.clone())]);
    let cols = coset_names(&g, "B", &t, &[("B", id.clone()), ("sB", s.clone()), ("s²B", s2.clone())]);
    let syms = coset_names(&g, "C", &c, &[("C", id), ("sC", s), ("s²C", s2)]);
    let constructed = built.relabeled([&rows, &cols, &syms]).unwrap();
    let printed = from_grids(
        &["A", "tA"],
        &["B", "sB", "s²B"],
        &[&["C", "sC", "s²C"], &["s²C", "C", "sC"]],
        &[&["s²C", "C", "sC"], &["C", "sC", "s²C"]],
    );
    let printed = reorder(&printed, &["A", "tA"], &["B", "sB", "s²B"], &["C", "sC", "s²C"]);
    Golden { constructed, printed }
}

pub const A4_ROWS: [&str; 4] = ["A", "cA", "c⁻¹A", "bA"];
pub const A4_COLS: [&str; 4] = ["B", "aB", "a⁻¹B", "cB"];
pub const A4_SYMS: [&str; 4] = ["C", "aC", "a⁻¹C", "b⁻¹C"];

pub fn a4_input() -> GroupTripleInput {
    GroupTripleInput::parse("alt:4".parse().unwrap(), "(123)", "(214)", "(243)").unwrap()
}

/// The A₄ example with `a = (123)`, `b = (214)`, `c = (243)`.
pub fn a4_golden() -> Golden {
    let input = a4_input();
    let g = &input.group;
    let (a, b, c) = (&input.a, &input.b, &input.c);
    let id = g.identity();
    let rows = coset_names(
        g,
        "A",
        a,
        &[("A", id.clone()), ("cA", c.clone()), ("c⁻¹A", g.inverse(c)), ("bA", b.clone())],
    );
    let cols = coset_names(
        g,
        "B",
        b,
        &[("B", id.clone()), ("aB", a.clone()), ("a⁻¹B", g.inverse(a)), ("cB", c.clone())],
    );
    let syms = coset_names(
        g,
        "C",
        c,
        &[("C", id), ("aC", a.clone()), ("a⁻¹C", g.inverse(a)), ("b⁻¹C", g.inverse(b))],
    );
    let constructed = from_group(&input).unwrap().relabeled([&rows, &cols, &syms]).unwrap();
    let printed = from_grids(
        &A4_ROWS,
        &A4_COLS,
        &[
            &["C", "aC", "a⁻¹C", ""],
            &["b⁻¹C", "", "aC", "C"],
            &["", "C", "b⁻¹C", "a⁻¹C"],
            &["a⁻¹C", "b⁻¹C", "", "aC"],
        ],
        &[
            &["a⁻¹C", "C", "aC", ""],
            &["C", "", "b⁻¹C", "aC"],
            &["", "b⁻¹C", "a⁻¹C", "C"],
            &["b⁻¹C", "aC", "", "a⁻¹C"],
        ],
    );
    let printed = reorder(&printed, &A4_ROWS, &A4_COLS, &A4_SYMS);
    Golden { constructed, printed }
}

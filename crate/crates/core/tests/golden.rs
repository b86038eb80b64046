mod common;

use bitrade::latin::render_text;
use common::*;

#[test]
fn s3_grids_match_the_printed_example() {
    let g = s3_golden();
    let expected = "\
∘  | B   | sB | s²B    ⋆  | B   | sB | s²B
---+-----+----+----    ---+-----+----+----
A  | C   | sC | s²C    A  | s²C | C  | sC
tA | s²C | C  | sC     tA | C   | sC | s²C
";
    assert_eq!(render_text(&g.printed).unwrap(), expected);
    assert_eq!(render_text(&g.constructed).unwrap(), expected);
    assert_eq!(g.constructed, g.printed);
}

#[test]
fn a4_grids_match_the_printed_example() {
    let g = a4_golden();
    assert_eq!(g.constructed.size(), 12);
    assert_eq!(render_text(&g.constructed).unwrap(), render_text(&g.printed).unwrap());
    assert_eq!(g.constructed, g.printed);
}

#[test]
fn a4_cosets_match_the_printed_lists() {
    let input = a4_input();
    let g = &input.group;
    let coset = |x: &str, gen: &bitrade::Element| {
        let x = g.parse_element(x).unwrap();
        let mut v: Vec<String> =
            g.coset_of(&x, &g.generated_subgroup(gen)).elements().iter().map(|e| e.to_string()).collect();
        v.sort();
        v
    };
    let set = |xs: &[&str]| {
        let mut v: Vec<String> = xs.iter().map(|x| g.parse_element(x).unwrap().to_string()).collect();
        v.sort();
        v
    };
    assert_eq!(coset("(243)", &input.a), set(&["(243)", "(124)", "(13)(24)"]));
    assert_eq!(coset("(234)", &input.a), set(&["(234)", "(12)(34)", "(134)"]));
    assert_eq!(coset("(142)", &input.a), set(&["(142)", "(143)", "(14)(23)"]));
    assert_eq!(coset("(123)", &input.b), set(&["(123)", "(14)(23)", "(234)"]));
    assert_eq!(coset("(132)", &input.b), set(&["(132)", "(134)", "(13)(24)"]));
    assert_eq!(coset("(243)", &input.b), set(&["(243)", "(12)(34)", "(143)"]));
    assert_eq!(coset("()", &input.c), set(&["()", "(234)", "(243)"]));
    assert_eq!(coset("(123)", &input.c), set(&["(123)", "(13)(24)", "(143)"]));
    assert_eq!(coset("(132)", &input.c), set(&["(132)", "(142)", "(12)(34)"]));
    assert_eq!(coset("(124)", &input.c), set(&["(124)", "(134)", "(14)(23)"]));
}

#[test]
fn printed_c_generates_the_same_subgroup_as_ab() {
    let input = a4_input();
    let g = &input.group;
    let ab = g.mul(&input.a, &input.b).unwrap();
    assert_eq!(ab.to_string(), "(2,3,4)");
    assert!(g.generated_subgroup(&ab).same_set(&g.generated_subgroup(&input.c)));
}

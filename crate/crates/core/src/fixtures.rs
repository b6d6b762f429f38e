//! Small built-in instances used throughout the test-suite: one-point
//! categories, the dual numbers, an A2 quiver, the dual-numbers module
//! category, and the groups, actions, and factor systems paired with them.

use crate::exactla::{FieldSpec, Scalar};
use crate::fincat::{BimoduleTriple, TriplePresentation};
use crate::groupact::{FactorSystem, FiniteGroup, GroupAction};

fn s(field: FieldSpec, v: i64) -> Scalar {
    field.from_i64(v)
}

/// One object, hom space spanned by the identity, over F_p.
pub fn point(p: u64) -> BimoduleTriple {
    let field = FieldSpec::prime(p).unwrap();
    let pres = TriplePresentation {
        objects: vec!["pt".into()],
        homs: vec![("pt".into(), "pt".into(), vec!["one".into()])],
        comps: vec![("one".into(), "one".into(), vec![("one".into(), s(field, 1))])],
        ids: vec![("pt".into(), vec![("one".into(), s(field, 1))])],
        ..Default::default()
    };
    pres.build(field).unwrap()
}

pub fn point3() -> BimoduleTriple {
    point(3)
}

pub fn point5() -> BimoduleTriple {
    point(5)
}

pub fn point2() -> BimoduleTriple {
    point(2)
}

/// Two objects 1, 2 with a single arrow a: 1 → 2, over F_3.
pub fn a2() -> BimoduleTriple {
    let field = FieldSpec::prime(3).unwrap();
    let pres = TriplePresentation {
        objects: vec!["1".into(), "2".into()],
        homs: vec![
            ("1".into(), "1".into(), vec!["one1".into()]),
            ("2".into(), "2".into(), vec!["one2".into()]),
            ("1".into(), "2".into(), vec!["a".into()]),
        ],
        comps: vec![
            ("one1".into(), "one1".into(), vec![("one1".into(), s(field, 1))]),
            ("one2".into(), "one2".into(), vec![("one2".into(), s(field, 1))]),
            ("a".into(), "one1".into(), vec![("a".into(), s(field, 1))]),
            ("one2".into(), "a".into(), vec![("a".into(), s(field, 1))]),
        ],
        ids: vec![
            ("1".into(), vec![("one1".into(), s(field, 1))]),
            ("2".into(), vec![("one2".into(), s(field, 1))]),
        ],
        ..Default::default()
    };
    pres.build(field).unwrap()
}

fn dual3_presentation(field: FieldSpec) -> TriplePresentation {
    TriplePresentation {
        objects: vec!["pt".into()],
        homs: vec![("pt".into(), "pt".into(), vec!["one".into(), "t".into()])],
        comps: vec![
            ("one".into(), "one".into(), vec![("one".into(), s(field, 1))]),
            ("one".into(), "t".into(), vec![("t".into(), s(field, 1))]),
            ("t".into(), "one".into(), vec![("t".into(), s(field, 1))]),
            ("t".into(), "t".into(), vec![]),
        ],
        ids: vec![("pt".into(), vec![("one".into(), s(field, 1))])],
        ..Default::default()
    }
}

/// The dual numbers F_3[t]/(t²) as a one-object category, regular bimodule,
/// zero differentiation.
pub fn dual3() -> BimoduleTriple {
    let field = FieldSpec::prime(3).unwrap();
    dual3_presentation(field).build(field).unwrap()
}

/// dual3 with the formal derivative ∂t = 1; deliberately violates Leibniz
/// over F_3 (∂(t·t) should be 2t, but t² = 0 forces 0).
pub fn dual3_bad_diff() -> BimoduleTriple {
    let field = FieldSpec::prime(3).unwrap();
    let mut pres = dual3_presentation(field);
    pres.diffs = vec![("t".into(), vec![("one".into(), s(field, 1))])];
    pres.build(field).unwrap()
}

/// The module category of F_3[t]/(t²): simple S, projective P,
/// πι = 0, ιπ = t.
pub fn ardual() -> BimoduleTriple {
    let field = FieldSpec::prime(3).unwrap();
    let one = |n: &str| vec![(n.to_string(), s(field, 1))];
    let pres = TriplePresentation {
        objects: vec!["S".into(), "P".into()],
        homs: vec![
            ("S".into(), "S".into(), vec!["idS".into()]),
            ("P".into(), "P".into(), vec!["idP".into(), "t".into()]),
            ("S".into(), "P".into(), vec!["iota".into()]),
            ("P".into(), "S".into(), vec!["pi".into()]),
        ],
        comps: vec![
            ("idS".into(), "idS".into(), one("idS")),
            ("idP".into(), "idP".into(), one("idP")),
            ("idP".into(), "t".into(), one("t")),
            ("t".into(), "idP".into(), one("t")),
            ("t".into(), "t".into(), vec![]),
            ("iota".into(), "idS".into(), one("iota")),
            ("idP".into(), "iota".into(), one("iota")),
            ("t".into(), "iota".into(), vec![]),
            ("pi".into(), "idP".into(), one("pi")),
            ("idS".into(), "pi".into(), one("pi")),
            ("pi".into(), "t".into(), vec![]),
            ("pi".into(), "iota".into(), vec![]),
            ("iota".into(), "pi".into(), one("t")),
        ],
        ids: vec![
            ("S".into(), one("idS")),
            ("P".into(), one("idP")),
        ],
        ..Default::default()
    };
    pres.build(field).unwrap()
}

/// Two disjoint copies of the F_3 point, for the swap action.
pub fn double_point3() -> BimoduleTriple {
    let field = FieldSpec::prime(3).unwrap();
    let pres = TriplePresentation {
        objects: vec!["p1".into(), "p2".into()],
        homs: vec![
            ("p1".into(), "p1".into(), vec!["one1".into()]),
            ("p2".into(), "p2".into(), vec!["one2".into()]),
        ],
        comps: vec![
            ("one1".into(), "one1".into(), vec![("one1".into(), s(field, 1))]),
            ("one2".into(), "one2".into(), vec![("one2".into(), s(field, 1))]),
        ],
        ids: vec![
            ("p1".into(), vec![("one1".into(), s(field, 1))]),
            ("p2".into(), vec![("one2".into(), s(field, 1))]),
        ],
        ..Default::default()
    };
    pres.build(field).unwrap()
}

pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::from_table(vec!["1".into()], "1", &[("1", "1", "1")]).unwrap()
}

pub fn z2() -> FiniteGroup {
    FiniteGroup::from_table(
        vec!["1".into(), "g".into()],
        "1",
        &[
            ("1", "1", "1"),
            ("1", "g", "g"),
            ("g", "1", "g"),
            ("g", "g", "1"),
        ],
    )
    .unwrap()
}

pub fn z4() -> FiniteGroup {
    let names = ["1", "g", "g2", "g3"];
    let mut table = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            table.push((names[i], names[j], names[(i + j) % 4]));
        }
    }
    FiniteGroup::from_table(names.iter().map(|n| n.to_string()).collect(), "1", &table).unwrap()
}

/// Klein four group with elements named by coordinate pairs.
pub fn v4() -> FiniteGroup {
    let names = ["1", "a", "b", "ab"];
    let bits = [(0u8, 0u8), (1, 0), (0, 1), (1, 1)];
    let idx = |p: (u8, u8)| bits.iter().position(|&q| q == p).unwrap();
    let mut table = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            let p = ((bits[i].0 + bits[j].0) % 2, (bits[i].1 + bits[j].1) % 2);
            table.push((names[i], names[j], names[idx(p)]));
        }
    }
    FiniteGroup::from_table(names.iter().map(|n| n.to_string()).collect(), "1", &table).unwrap()
}

pub fn trivial_action(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
    GroupAction::trivial(t, g)
}

/// Z/2 acting on dual3 by t ↦ −t.
pub fn dual3_action(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
    let field = t.field();
    GroupAction::from_hom_images(
        t,
        g,
        &[(
            "g",
            vec![("pt", "pt")],
            vec![
                ("one", vec![("one", s(field, 1))]),
                ("t", vec![("t", s(field, -1))]),
            ],
        )],
    )
    .unwrap()
}

/// Z/2 swapping the two points of double_point3.
pub fn swap_action(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
    let field = t.field();
    GroupAction::from_hom_images(
        t,
        g,
        &[(
            "g",
            vec![("p1", "p2"), ("p2", "p1")],
            vec![
                ("one1", vec![("one2", s(field, 1))]),
                ("one2", vec![("one1", s(field, 1))]),
            ],
        )],
    )
    .unwrap()
}

/// V4 acting on double_point3: a and b both swap, ab fixes.
pub fn v4_swap_action(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
    let field = t.field();
    let swap = |name: &'static str| {
        (
            name,
            vec![("p1", "p2"), ("p2", "p1")],
            vec![
                ("one1", vec![("one2", s(field, 1))]),
                ("one2", vec![("one1", s(field, 1))]),
            ],
        )
    };
    GroupAction::from_hom_images(t, g, &[swap("a"), swap("b")]).unwrap()
}

/// Z/2 acting on ardual by t ↦ −t (ι ↦ −ι, π ↦ π).
pub fn ardual_action(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
    let field = t.field();
    GroupAction::from_hom_images(
        t,
        g,
        &[(
            "g",
            vec![("S", "S"), ("P", "P")],
            vec![
                ("idS", vec![("idS", s(field, 1))]),
                ("idP", vec![("idP", s(field, 1))]),
                ("t", vec![("t", s(field, -1))]),
                ("iota", vec![("iota", s(field, -1))]),
                ("pi", vec![("pi", s(field, 1))]),
            ],
        )],
    )
    .unwrap()
}

pub fn trivial_factors(t: &BimoduleTriple, g: &FiniteGroup, act: &GroupAction) -> FactorSystem {
    FactorSystem::trivial(t, g, act)
}

/// λ_{g,g} = −1 on the F_3 point, other values 1.
pub fn z2tw_factors(t: &BimoduleTriple, g: &FiniteGroup, act: &GroupAction) -> FactorSystem {
    let mut lam = FactorSystem::trivial(t, g, act);
    lam.set_scalar(t, g, act, "g", "g", s(t.field(), -1)).unwrap();
    lam
}

/// The V4 factor system λ((a1,a2),(b1,b2)) = (−1)^{a2·b1} on the F_5 point.
pub fn v4tw_factors(t: &BimoduleTriple, g: &FiniteGroup, act: &GroupAction) -> FactorSystem {
    let bits = |name: &str| match name {
        "1" => (0u8, 0u8),
        "a" => (1, 0),
        "b" => (0, 1),
        "ab" => (1, 1),
        _ => panic!("unknown V4 element"),
    };
    let mut lam = FactorSystem::trivial(t, g, act);
    for sigma in ["1", "a", "b", "ab"] {
        for tau in ["1", "a", "b", "ab"] {
            let (_, a2) = bits(sigma);
            let (b1, _) = bits(tau);
            let v = if a2 * b1 == 1 { -1 } else { 1 };
            lam.set_scalar(t, g, act, sigma, tau, s(t.field(), v)).unwrap();
        }
    }
    lam
}

//! Tables of dual relations, coproducts, counits, antipodes and pairing values,
//! with a runner that checks them against a [`DualAlgebra`].

use std::collections::BTreeMap;

use crate::duality::DualAlgebra;
use crate::error::Result;
use crate::freealg::{NcPoly, Word};
use crate::scalars::Field;

/// Value of a pairing as a function of the exponent `k`.
#[derive(Clone, Copy, Debug)]
pub enum Value {
    Const(i64),
    /// `k + c`
    KPlus(i64),
    /// `k^n`
    KPow(u32),
    /// `(-1)^k`
    Sign,
}

impl Value {
    pub fn at(self, k: usize) -> i64 {
        match self {
            Value::Const(c) => c,
            Value::KPlus(c) => k as i64 + c,
            Value::KPow(n) => (k as i64).pow(n),
            Value::Sign => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// `⟨element, word(k)⟩ = value(k)` for `k >= kmin`; `word` may contain `{k}`.
#[derive(Clone, Copy, Debug)]
pub struct Point {
    pub word: &'static str,
    pub kmin: usize,
    pub value: Value,
}

pub const fn pt(word: &'static str, kmin: usize, value: Value) -> Point {
    Point { word, kmin, value }
}

#[derive(Clone, Copy, Debug)]
pub struct PairingCase {
    pub label: &'static str,
    pub elements: &'static [&'static str],
    pub points: &'static [Point],
    /// Every basis word not listed pairs to zero.
    pub exhaustive: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RelationCase {
    pub label: &'static str,
    /// Chain `x = y = ...`, one chain per line.
    pub text: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct CoproductCase {
    pub label: &'static str,
    pub element: &'static str,
    pub terms: &'static [(&'static str, &'static str)],
    pub counit: i64,
}

/// The antipode axioms on one generator, given `γ` on the letters involved.
#[derive(Clone, Copy, Debug)]
pub struct AntipodeCase {
    pub label: &'static str,
    pub element: &'static str,
    pub terms: &'static [(&'static str, &'static str)],
    pub gamma: &'static [(&'static str, &'static str)],
}

#[derive(Clone, Copy, Debug)]
pub struct Catalog {
    pub algebra: &'static str,
    pub relations: &'static [RelationCase],
    pub coproducts: &'static [CoproductCase],
    pub antipodes: &'static [AntipodeCase],
    pub pairings: &'static [PairingCase],
    pub casimirs: &'static [&'static str],
}

use Value::*;

const PRIM_A: CoproductCase = CoproductCase { label: "Ã primitive", element: "A", terms: &[("A", "1"), ("1", "A")], counit: 0 };

pub const S03: Catalog = Catalog {
    algebra: "s03",
    relations: &[
        RelationCase { label: "Ã commutes with B̃, C̃", text: "A B = B A\nA C = C A" },
        RelationCase { label: "ÃD̃ chain", text: "A D = D A = D^3 = B^2 D = D B^2 = D" },
        RelationCase { label: "[B̃,C̃]", text: "B C - C B = -2 D" },
        RelationCase { label: "D̃B̃ chain", text: "D B = -B D = C D^2 = D^2 C" },
        RelationCase { label: "{C̃,D̃}", text: "C D + D C = 0" },
        RelationCase { label: "B̃² + C̃²", text: "B^2 + C^2 = 0" },
        RelationCase { label: "B̃³", text: "B^3 = B" },
        RelationCase { label: "C̃³", text: "C^3 = -C" },
        RelationCase { label: "B̃²Ã", text: "B^2 A = A" },
        RelationCase { label: "B̃² acts as unit", text: "B^2 B = B\nB^2 C = C\nB^2 D = D" },
        RelationCase { label: "cubic reductions", text: "B D C = -D^2 C^2 = D^2 B^2 = D^2\nB^2 C = -C^3 = C\nB D^2 = -C D^3 = D C" },
    ],
    coproducts: &[
        PRIM_A,
        CoproductCase { label: "δB̃", element: "B", terms: &[("B", "1"), ("1 - B^2", "B")], counit: 0 },
        CoproductCase { label: "δC̃", element: "C", terms: &[("C", "1 - B^2"), ("1", "C")], counit: 0 },
        CoproductCase { label: "δD̃", element: "D", terms: &[("D", "1 - B^2"), ("1 - B^2", "D")], counit: 0 },
    ],
    antipodes: &[],
    pairings: &[
        PairingCase { label: "ÃB̃ on b̃ã^k", elements: &["A B", "B A"], points: &[pt("bt at^{k}", 0, KPlus(1))], exhaustive: true },
        PairingCase { label: "ÃC̃ on ã^kc̃", elements: &["A C", "C A"], points: &[pt("at^{k} ct", 0, KPlus(1))], exhaustive: true },
        PairingCase {
            label: "D̃ chain on d̃",
            elements: &["A D", "D A", "D^3", "B^2 D", "D B^2", "D"],
            points: &[pt("dt", 0, Const(1))],
            exhaustive: true,
        },
        PairingCase {
            label: "B̃C̃, C̃B̃ on d̃ and b̃ã^kc̃",
            elements: &["B C"],
            points: &[pt("dt", 0, Const(-1)), pt("bt at^{k} ct", 0, Const(1))],
            exhaustive: true,
        },
        PairingCase {
            label: "C̃B̃ on d̃ and b̃ã^kc̃",
            elements: &["C B"],
            points: &[pt("dt", 0, Const(1)), pt("bt at^{k} ct", 0, Const(1))],
            exhaustive: true,
        },
        PairingCase { label: "D̃B̃ on c̃", elements: &["D B", "C D^2", "D^2 C", "-B D"], points: &[pt("ct", 0, Const(1))], exhaustive: true },
        PairingCase { label: "D̃C̃ on b̃", elements: &["D C", "-C D"], points: &[pt("bt", 0, Const(1))], exhaustive: true },
        PairingCase { label: "B̃² on ã^k", elements: &["B^2", "-C^2"], points: &[pt("at^{k}", 1, Const(1))], exhaustive: true },
        PairingCase { label: "B̃³ on b̃ã^k", elements: &["B^3", "B"], points: &[pt("bt at^{k}", 0, Const(1))], exhaustive: true },
        PairingCase { label: "C̃³ on ã^kc̃", elements: &["-C^3", "C"], points: &[pt("at^{k} ct", 0, Const(1))], exhaustive: true },
        PairingCase { label: "B̃²Ã on ã^k", elements: &["B^2 A", "A"], points: &[pt("at^{k}", 0, KPlus(0))], exhaustive: true },
        PairingCase { label: "D̃² on ã", elements: &["D^2"], points: &[pt("at", 0, Const(1))], exhaustive: true },
        PairingCase { label: "B̃²C̃ on ã^kc̃", elements: &["B^2 C"], points: &[pt("at^{k} ct", 0, Const(1))], exhaustive: true },
        PairingCase { label: "tangent B̃", elements: &["B"], points: &[pt("bt at^{k}", 0, Const(1))], exhaustive: true },
        PairingCase { label: "tangent D̃", elements: &["D"], points: &[pt("dt", 0, Const(1))], exhaustive: true },
        PairingCase { label: "unit pairs as counit", elements: &["1"], points: &[pt("at^{k}", 0, Const(1))], exhaustive: true },
    ],
    casimirs: &["A", "B^2", "C^2", "D^2"],
};

pub const S14: Catalog = Catalog {
    algebra: "s14",
    relations: &[
        RelationCase { label: "C̃ = D̃B̃", text: "C = D B = -B D" },
        RelationCase { label: "[Ã,D̃]", text: "A D = D A" },
        RelationCase { label: "ÃB̃ chain", text: "A B = B A = D^2 B = B^3 = B" },
        RelationCase { label: "E annihilates", text: "E A = A E = 0\nE B = B E = 0\nE D = D E = 0" },
        RelationCase { label: "E idempotent", text: "E^2 = E" },
        RelationCase { label: "K involution", text: "K^2 = 1" },
    ],
    coproducts: &[
        PRIM_A,
        CoproductCase { label: "δB̃", element: "B", terms: &[("B", "E"), ("E", "B")], counit: 0 },
        CoproductCase { label: "δD̃", element: "D", terms: &[("D", "K"), ("1", "D")], counit: 0 },
        CoproductCase { label: "δE", element: "E", terms: &[("E", "E")], counit: 1 },
        CoproductCase { label: "δK", element: "K", terms: &[("K", "K")], counit: 1 },
    ],
    antipodes: &[],
    pairings: &[
        PairingCase { label: "D̃B̃ on c̃", elements: &["D B", "-B D", "C"], points: &[pt("ct", 0, Const(1))], exhaustive: true },
        PairingCase { label: "ÃD̃ on ã^kd̃", elements: &["A D", "D A"], points: &[pt("at^{k} dt", 0, KPlus(1))], exhaustive: true },
        PairingCase { label: "B̃ chain on b̃", elements: &["A B", "B A", "D^2 B", "B^3", "B"], points: &[pt("bt", 0, Const(1))], exhaustive: true },
        PairingCase { label: "Ã on ã^kd̃^ℓ", elements: &["A"], points: &[pt("at^{k}", 0, KPow(1))], exhaustive: true },
        PairingCase { label: "Ã² on ã^kd̃^ℓ", elements: &["A^2"], points: &[pt("at^{k}", 1, KPow(2))], exhaustive: true },
        PairingCase { label: "Ã³ on ã^kd̃^ℓ", elements: &["A^3"], points: &[pt("at^{k}", 1, KPow(3))], exhaustive: true },
        PairingCase { label: "Ã⁴ on ã^kd̃^ℓ", elements: &["A^4"], points: &[pt("at^{k}", 1, KPow(4))], exhaustive: true },
        PairingCase { label: "K on ã^kd̃^ℓ", elements: &["K"], points: &[pt("at^{k}", 0, Sign)], exhaustive: true },
        PairingCase { label: "E on 1", elements: &["E"], points: &[pt("1", 0, Const(1))], exhaustive: true },
        PairingCase { label: "tangent D̃", elements: &["D"], points: &[pt("at^{k} dt", 0, Const(1))], exhaustive: true },
    ],
    casimirs: &["A", "B^2", "D^2"],
};

pub const S14O: Catalog = Catalog {
    algebra: "s14o",
    relations: &[
        RelationCase { label: "Ã central", text: "A B = B A\nA C = C A\nA D = D A" },
        RelationCase { label: "[B̃,C̃]", text: "B C - C B = -2 D" },
        RelationCase { label: "[B̃,D̃]", text: "B D - D B = -2 C" },
        RelationCase { label: "[C̃,D̃]", text: "C D - D C = -2 B" },
        RelationCase { label: "[B̃,X⁺]", text: "B Xp - Xp B = 2 Xp" },
        RelationCase { label: "[B̃,X⁻]", text: "B Xm - Xm B = -2 Xm" },
        RelationCase { label: "[X⁺,X⁻]", text: "Xp Xm - Xm Xp = B" },
        RelationCase { label: "K central", text: "K A = A K\nK B = B K\nK C = C K\nK D = D K" },
        RelationCase { label: "K involution", text: "K^2 = 1" },
    ],
    coproducts: &[
        PRIM_A,
        CoproductCase { label: "δB̃", element: "B", terms: &[("B", "1"), ("1", "B")], counit: 0 },
        CoproductCase { label: "δC̃", element: "C", terms: &[("C", "K"), ("1", "C")], counit: 0 },
        CoproductCase { label: "δD̃", element: "D", terms: &[("D", "K"), ("1", "D")], counit: 0 },
        CoproductCase { label: "δK", element: "K", terms: &[("K", "K")], counit: 1 },
        CoproductCase { label: "δX⁺", element: "Xp", terms: &[("Xp", "K"), ("1", "Xp")], counit: 0 },
        CoproductCase { label: "δX⁻", element: "Xm", terms: &[("Xm", "K"), ("1", "Xm")], counit: 0 },
    ],
    antipodes: &[
        AntipodeCase { label: "γÃ", element: "A", terms: &[("A", "1"), ("1", "A")], gamma: &[("A", "-A")] },
        AntipodeCase { label: "γB̃", element: "B", terms: &[("B", "1"), ("1", "B")], gamma: &[("B", "-B")] },
        AntipodeCase { label: "γC̃", element: "C", terms: &[("C", "K"), ("1", "C")], gamma: &[("C", "-C K"), ("K", "K")] },
        AntipodeCase { label: "γD̃", element: "D", terms: &[("D", "K"), ("1", "D")], gamma: &[("D", "-D K"), ("K", "K")] },
        AntipodeCase { label: "γK", element: "K", terms: &[("K", "K")], gamma: &[("K", "K")] },
        AntipodeCase { label: "γX⁺", element: "Xp", terms: &[("Xp", "K"), ("1", "Xp")], gamma: &[("Xp", "-Xp K"), ("K", "K")] },
        AntipodeCase { label: "γX⁻", element: "Xm", terms: &[("Xm", "K"), ("1", "Xm")], gamma: &[("Xm", "-Xm K"), ("K", "K")] },
    ],
    pairings: &[
        PairingCase { label: "tangent Ã", elements: &["A"], points: &[pt("at^{k}", 0, KPlus(0))], exhaustive: true },
        PairingCase { label: "tangent B̃", elements: &["B"], points: &[pt("at^{k} bt", 0, Const(1))], exhaustive: true },
        PairingCase { label: "tangent C̃", elements: &["C"], points: &[pt("at^{k} ct", 0, Const(1))], exhaustive: true },
        PairingCase { label: "tangent D̃", elements: &["D"], points: &[pt("at^{k} dt", 0, Const(1))], exhaustive: true },
        PairingCase {
            label: "C̃ on c̃ã^k",
            elements: &["C"],
            points: &[pt("ct at^{k}", 0, Sign)],
            exhaustive: false,
        },
        PairingCase { label: "D̃ on d̃ã^k", elements: &["D"], points: &[pt("dt at^{k}", 0, Sign)], exhaustive: false },
        PairingCase { label: "K on ã^k", elements: &["K"], points: &[pt("at^{k}", 0, Sign)], exhaustive: true },
    ],
    casimirs: &["A", "K"],
};

pub fn catalog(name: &str) -> Option<&'static Catalog> {
    match name {
        "s03" | "S03" => Some(&S03),
        "s14" | "S14" => Some(&S14),
        "s14o" | "S14o" => Some(&S14O),
        _ => None,
    }
}

/// One checked statement.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub kind: &'static str,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

fn line(kind: &'static str, label: &str, res: std::result::Result<(), String>) -> CheckLine {
    match res {
        Ok(()) => CheckLine { kind, label: label.to_string(), passed: true, detail: String::new() },
        Err(d) => CheckLine { kind, label: label.to_string(), passed: false, detail: d },
    }
}

pub fn check_relation<F: Field>(dual: &DualAlgebra<F>, case: &RelationCase, maxdeg: usize) -> std::result::Result<(), String> {
    let rels = dual.parse_relations(case.text).map_err(|e| e.to_string())?;
    for r in rels {
        if let Err(w) = dual.verify_dual_relation(&r, maxdeg) {
            return Err(format!(
                "{} pairs to {} with {}",
                r.display(&dual.alphabet),
                w.value,
                dual.algebra.alphabet.fmt_word(&w.word)
            ));
        }
    }
    Ok(())
}

pub fn check_coproduct<F: Field>(dual: &DualAlgebra<F>, case: &CoproductCase, maxdeg: usize) -> std::result::Result<(), String> {
    let z = dual.parse(case.element).map_err(|e| e.to_string())?;
    let t = dual.parse_tensor(case.terms).map_err(|e| e.to_string())?;
    let eps = dual.pair(&z, &NcPoly::one());
    if eps != F::from_i64(case.counit) {
        return Err(format!("counit {} instead of {}", eps, case.counit));
    }
    dual.verify_dual_coproduct(&z, &t, maxdeg).map_err(|(f, g)| {
        format!("differs on {} ⊗ {}", dual.algebra.alphabet.fmt_word(&f), dual.algebra.alphabet.fmt_word(&g))
    })
}

/// `γ` extended as an anti-homomorphism from its values on letters.
pub fn apply_antipode<F: Field>(dual: &DualAlgebra<F>, u: &NcPoly<F>, gamma: &[(&str, &str)]) -> Result<NcPoly<F>> {
    let mut images: BTreeMap<u8, NcPoly<F>> = BTreeMap::new();
    for (l, img) in gamma {
        images.insert(dual.alphabet.letter(l), dual.parse(img)?);
    }
    let mut out = NcPoly::zero();
    for (w, c) in u.terms() {
        let mut acc = NcPoly::one();
        for l in w.letters().iter().rev() {
            let img = images.get(l).ok_or_else(|| crate::Error::Unknown(format!("γ({})", dual.alphabet.name(*l))))?;
            acc = acc.mul(img);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

pub fn check_antipode<F: Field>(dual: &DualAlgebra<F>, case: &AntipodeCase, maxdeg: usize) -> std::result::Result<(), String> {
    let run = || -> Result<std::result::Result<(), String>> {
        let z = dual.parse(case.element)?;
        let eps = dual.pair(&z, &NcPoly::one());
        let unit = NcPoly::constant(eps);
        let mut left = NcPoly::zero();
        let mut right = NcPoly::zero();
        for (a, b) in case.terms {
            let (a, b) = (dual.parse(a)?, dual.parse(b)?);
            left = left.add(&a.mul(&apply_antipode(dual, &b, case.gamma)?));
            right = right.add(&apply_antipode(dual, &a, case.gamma)?.mul(&b));
        }
        for (side, p) in [("m(id⊗γ)δ", left), ("m(γ⊗id)δ", right)] {
            if let Err(w) = dual.verify_dual_relation(&p.sub(&unit), maxdeg) {
                return Ok(Err(format!("{side} differs from ε on {}", dual.algebra.alphabet.fmt_word(&w.word))));
            }
        }
        Ok(Ok(()))
    };
    run().unwrap_or_else(|e| Err(e.to_string()))
}

fn instantiate(template: &str, k: usize) -> String {
    template.replace("{k}", &k.to_string())
}

pub fn check_pairing<F: Field>(dual: &DualAlgebra<F>, case: &PairingCase, maxdeg: usize) -> std::result::Result<(), String> {
    let alpha = &dual.algebra.alphabet;
    let mut expected: BTreeMap<Word, F> = BTreeMap::new();
    let mut points: Vec<(NcPoly<F>, String, F)> = Vec::new();
    for p in case.points {
        for k in p.kmin..=maxdeg {
            let text = instantiate(p.word, k);
            let f = dual.algebra.parse(&text).map_err(|e| e.to_string())?;
            if f.degree().unwrap_or(0) > maxdeg {
                break;
            }
            let v = F::from_i64(p.value.at(k));
            let nf = dual.algebra.nf(&f);
            if nf.len() == 1 {
                let (w, c) = nf.terms().next().unwrap();
                expected.insert(w.clone(), v.clone() * c.inv().unwrap());
            }
            points.push((f, text, v));
            if !p.word.contains("{k}") {
                break;
            }
        }
    }
    for e in case.elements {
        let u = dual.parse(e).map_err(|e| e.to_string())?;
        for (f, text, v) in &points {
            let got = dual.pair(&u, f);
            if &got != v {
                return Err(format!("⟨{e}, {text}⟩ = {got}, expected {v}"));
            }
        }
        if case.exhaustive {
            for n in 0..=maxdeg {
                let row = dual.pairing_row(&u, n);
                for (w, got) in dual.grade(n).words.iter().zip(row) {
                    let want = expected.get(w).cloned().unwrap_or_else(F::zero);
                    if got != want {
                        return Err(format!("⟨{e}, {}⟩ = {got}, expected {want}", alpha.fmt_word(w)));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs every entry of a catalog.
pub fn run<F: Field>(dual: &DualAlgebra<F>, cat: &Catalog, maxdeg: usize) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for c in cat.relations {
        out.push(line("relation", c.label, check_relation(dual, c, maxdeg)));
    }
    for c in cat.coproducts {
        out.push(line("coproduct", c.label, check_coproduct(dual, c, maxdeg)));
    }
    for c in cat.antipodes {
        out.push(line("antipode", c.label, check_antipode(dual, c, maxdeg)));
    }
    for c in cat.pairings {
        out.push(line("pairing", c.label, check_pairing(dual, c, maxdeg)));
    }
    for z in cat.casimirs {
        let res = dual.parse(z).map_err(|e| e.to_string()).and_then(|u| {
            if dual.casimir_check(&u, maxdeg) {
                Ok(())
            } else {
                Err("does not commute with every generator".to_string())
            }
        });
        out.push(line("casimir", z, res));
    }
    out
}

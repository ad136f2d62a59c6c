//! Bialgebra presentations: matrix coproduct and counit, their multiplicative
//! extension, iterated coproducts and compatibility checks.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::{parse_relations, Alphabet, Letter, NcPoly, RewriteSystem, Word};
use crate::rtt::{matrix_alphabet, GeneratorChange};
use crate::scalars::Field;

/// Finitely supported map from `n`-tuples of words to coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorPoly<F> {
    arity: usize,
    terms: BTreeMap<Vec<Word>, F>,
}

impl<F: Field> TensorPoly<F> {
    pub fn zero(arity: usize) -> Self {
        TensorPoly { arity, terms: BTreeMap::new() }
    }
    pub fn unit(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Word::empty(); arity], F::one());
        t
    }
    pub fn from_poly(p: &NcPoly<F>) -> Self {
        let mut t = Self::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }
    /// `Σ c · u ⊗ v` from pairs of polynomials.
    pub fn from_pairs(pairs: &[(NcPoly<F>, NcPoly<F>)]) -> Self {
        let mut t = Self::zero(2);
        for (a, b) in pairs {
            t.add_assign(&Self::from_poly(a).tensor(&Self::from_poly(b)));
        }
        t
    }
    pub fn arity(&self) -> usize {
        self.arity
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &F)> {
        self.terms.iter()
    }
    pub fn add_term(&mut self, slots: Vec<Word>, c: F) {
        debug_assert_eq!(slots.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(slots).or_insert_with(F::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }
    pub fn add_assign(&mut self, o: &Self) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    pub fn scale(&self, c: &F) -> Self {
        let mut t = Self::zero(self.arity);
        for (k, x) in &self.terms {
            t.add_term(k.clone(), x.clone() * c.clone());
        }
        t
    }
    pub fn sub(&self, o: &Self) -> Self {
        let mut t = self.clone();
        t.add_assign(&o.scale(&-F::one()));
        t
    }
    /// Slotwise product.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity);
        let mut t = Self::zero(self.arity);
        for (k1, a) in &self.terms {
            for (k2, b) in &o.terms {
                let k: Vec<Word> = k1.iter().zip(k2).map(|(x, y)| x.concat(y)).collect();
                t.add_term(k, a.clone() * b.clone());
            }
        }
        t
    }
    /// Outer tensor product, concatenating the slot lists.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut t = Self::zero(self.arity + o.arity);
        for (k1, a) in &self.terms {
            for (k2, b) in &o.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                t.add_term(k, a.clone() * b.clone());
            }
        }
        t
    }
    /// Replace slot `i` by the image of a linear map into tensors of arity `k`.
    pub fn map_slot(&self, i: usize, k: usize, mut f: impl FnMut(&Word) -> TensorPoly<F>) -> Self {
        let mut out = Self::zero(self.arity - 1 + k);
        let mut cache: BTreeMap<Word, TensorPoly<F>> = BTreeMap::new();
        for (key, c) in &self.terms {
            let img = cache.entry(key[i].clone()).or_insert_with(|| f(&key[i]));
            debug_assert_eq!(img.arity, k);
            for (ik, ic) in &img.terms {
                let mut nk: Vec<Word> = key[..i].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(key[i + 1..].iter().cloned());
                out.add_term(nk, c.clone() * ic.clone());
            }
        }
        out
    }
    /// Apply a linear functional to slot `i`.
    pub fn contract_slot(&self, i: usize, f: impl Fn(&Word) -> F) -> Self {
        let mut t = Self::zero(self.arity - 1);
        for (k, c) in &self.terms {
            let v = f(&k[i]);
            if v.is_zero() {
                continue;
            }
            let mut nk = k.clone();
            nk.remove(i);
            t.add_term(nk, c.clone() * v);
        }
        t
    }
    /// Collapse an arity-1 tensor to a polynomial.
    pub fn to_poly(&self) -> NcPoly<F> {
        assert_eq!(self.arity, 1);
        let mut p = NcPoly::zero();
        for (k, c) in &self.terms {
            p.add_term(k[0].clone(), c.clone());
        }
        p
    }
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> TensorDisplay<'a, F> {
        TensorDisplay { t: self, alphabet }
    }
}

pub struct TensorDisplay<'a, F> {
    t: &'a TensorPoly<F>,
    alphabet: &'a Alphabet,
}

impl<F: Field> fmt::Display for TensorDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.t.terms.iter().rev() {
            let (neg, body) = crate::freealg::fmt_coeff(c);
            let slots: Vec<String> = k.iter().map(|w| self.alphabet.fmt_word(w)).collect();
            let term = if body == "1" { slots.join("⊗") } else { format!("{}*{}", body, slots.join("⊗")) };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, term)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, term)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A finitely presented bialgebra.
#[derive(Clone, Debug)]
pub struct Presentation<F> {
    pub name: String,
    pub alphabet: Alphabet,
    pub rules: RewriteSystem<F>,
    /// `None` for letters without a coproduct (formal inverses of non-group-like letters).
    pub coproduct: Vec<Option<TensorPoly<F>>>,
    pub counit: Vec<F>,
}

impl<F: Field> Presentation<F> {
    pub fn nf(&self, p: &NcPoly<F>) -> NcPoly<F> {
        self.rules.normal_form(p)
    }
    pub fn letter(&self, name: &str) -> Letter {
        self.alphabet.letter(name)
    }
    pub fn gen(&self, name: &str) -> NcPoly<F> {
        NcPoly::letter(self.letter(name))
    }
    pub fn parse(&self, text: &str) -> Result<NcPoly<F>> {
        crate::freealg::parse_poly_in(&self.alphabet, text)
    }
    pub fn basis(&self, degree: usize) -> Vec<Word> {
        self.rules.enumerate_basis(degree)
    }
    pub fn mul(&self, a: &NcPoly<F>, b: &NcPoly<F>) -> NcPoly<F> {
        self.nf(&a.mul(b))
    }
    /// Relations `lhs - rhs` of the rewrite system.
    pub fn relations(&self) -> Vec<NcPoly<F>> {
        self.rules.relations()
    }

    /// Normal form in every slot.
    pub fn normalize_tensor(&self, t: &TensorPoly<F>) -> TensorPoly<F> {
        let mut cur = t.clone();
        for i in 0..t.arity() {
            cur = cur.map_slot(i, 1, |w| TensorPoly::from_poly(&self.rules.normal_form_word(w)));
        }
        cur
    }

    fn letter_coproduct(&self, l: Letter) -> Result<&TensorPoly<F>> {
        self.coproduct[l as usize]
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("no coproduct for `{}`", self.alphabet.name(l))))
    }

    pub fn coproduct_word(&self, w: &Word) -> Result<TensorPoly<F>> {
        let mut acc = TensorPoly::unit(2);
        for &l in w.letters() {
            acc = self.normalize_tensor(&acc.mul(self.letter_coproduct(l)?));
        }
        Ok(acc)
    }

    /// Multiplicative extension of the generator coproducts, normalized slotwise.
    pub fn coproduct(&self, f: &NcPoly<F>) -> Result<TensorPoly<F>> {
        let mut t = TensorPoly::zero(2);
        for (w, c) in f.terms() {
            t.add_assign(&self.coproduct_word(w)?.scale(c));
        }
        Ok(self.normalize_tensor(&t))
    }

    pub fn counit_word(&self, w: &Word) -> F {
        let mut acc = F::one();
        for &l in w.letters() {
            acc *= self.counit[l as usize].clone();
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn counit(&self, f: &NcPoly<F>) -> F {
        let mut acc = F::zero();
        for (w, c) in f.terms() {
            acc += c.clone() * self.counit_word(w);
        }
        acc
    }

    /// `(δ ⊗ id^{n-1}) ∘ ... ∘ δ`, of arity `n + 1`.
    pub fn iterated_coproduct(&self, f: &NcPoly<F>, n: usize) -> Result<TensorPoly<F>> {
        let mut t = TensorPoly::from_poly(&self.nf(f));
        for _ in 0..n {
            let mut err = None;
            t = t.map_slot(0, 2, |w| match self.coproduct_word(w) {
                Ok(x) => x,
                Err(e) => {
                    err = Some(e);
                    TensorPoly::zero(2)
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        Ok(t)
    }

    /// Checks that coproduct and counit respect every defining relation, plus the
    /// coassociativity and counit axioms on basis words up to `degree`.
    pub fn check_compatibility(&self, degree: usize) -> CompatibilityReport {
        let mut rep = CompatibilityReport { degree, ..Default::default() };
        for r in self.relations() {
            let label = format!("{}", r.display(&self.alphabet));
            if !self.counit(&r).is_zero() {
                rep.failures.push(format!("counit: {} ", label));
            }
            match self.coproduct(&r) {
                Ok(t) if t.is_zero() => rep.relations_checked += 1,
                Ok(_) => rep.failures.push(format!("coproduct: {}", label)),
                Err(_) => rep.skipped.push(label),
            }
        }
        for d in 0..=degree {
            for w in self.basis(d) {
                let p = NcPoly::from_word(w.clone());
                let Ok(dw) = self.coproduct(&p) else { continue };
                let left = self.normalize_tensor(&dw.map_slot(0, 2, |u| self.coproduct_word(u).unwrap_or_else(|_| TensorPoly::zero(2))));
                let right = self.normalize_tensor(&dw.map_slot(1, 2, |u| self.coproduct_word(u).unwrap_or_else(|_| TensorPoly::zero(2))));
                if left != right {
                    rep.failures.push(format!("coassociativity: {}", self.alphabet.fmt_word(&w)));
                }
                let l = dw.contract_slot(0, |u| self.counit_word(u)).to_poly();
                let r = dw.contract_slot(1, |u| self.counit_word(u)).to_poly();
                if l != p || r != p {
                    rep.failures.push(format!("counit axiom: {}", self.alphabet.fmt_word(&w)));
                }
                rep.words_checked += 1;
            }
        }
        rep
    }

    /// The same bialgebra with the rewrite system replaced.
    pub fn with_rules(&self, rels: &[NcPoly<F>]) -> Result<Self> {
        let mut p = self.clone();
        p.rules = RewriteSystem::from_relations(self.alphabet.len(), rels)?;
        Ok(p)
    }

    /// Rules as `lhs = rhs` lines.
    pub fn export_text(&self) -> String {
        let mut s = format!("# {}\n", self.name);
        for (x, y, rhs) in self.rules.rules() {
            let lhs = Word::from_slice(&[x, y]);
            s.push_str(&format!("{} = {}\n", self.alphabet.fmt_word(&lhs), rhs.display(&self.alphabet)));
        }
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct CompatibilityReport {
    pub degree: usize,
    pub relations_checked: usize,
    pub words_checked: usize,
    pub skipped: Vec<String>,
    pub failures: Vec<String>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `δ(T_ij) = Σ_k T_ik ⊗ T_kj` and `ε(T) = 1` on the matrix generators.
pub fn matrix_coproduct<F: Field>() -> (Vec<TensorPoly<F>>, Vec<F>) {
    let t = |i: usize, j: usize| NcPoly::<F>::letter((2 * i + j) as Letter);
    let mut cop = Vec::new();
    let mut eps = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let pairs: Vec<_> = (0..2).map(|k| (t(i, k), t(k, j))).collect();
            cop.push(TensorPoly::from_pairs(&pairs));
            eps.push(if i == j { F::one() } else { F::zero() });
        }
    }
    (cop, eps)
}

/// Transport coproduct and counit along a change of generators.
pub fn transform_coalgebra<F: Field>(
    cop: &[TensorPoly<F>],
    eps: &[F],
    g: &GeneratorChange<F>,
) -> (Vec<TensorPoly<F>>, Vec<F>) {
    let old_in_new = g.old_in_new();
    let sub = |w: &Word| -> TensorPoly<F> {
        let p = NcPoly::from_word(w.clone()).substitute(&old_in_new);
        TensorPoly::from_poly(&p)
    };
    let n = g.m.rows();
    let mut new_cop = Vec::new();
    let mut new_eps = Vec::new();
    for i in 0..n {
        let mut t = TensorPoly::zero(2);
        let mut e = F::zero();
        for j in 0..n {
            let c = g.m.get(i, j).clone();
            if c.is_zero() {
                continue;
            }
            t.add_assign(&cop[j].scale(&c));
            e += c * eps[j].clone();
        }
        let t = t.map_slot(0, 1, sub).map_slot(1, 1, sub);
        new_cop.push(t);
        new_eps.push(e);
    }
    (new_cop, new_eps)
}

pub fn tilde_alphabet() -> Alphabet {
    Alphabet::new(&[("ã", "at"), ("b̃", "bt"), ("c̃", "ct"), ("d̃", "dt")])
}

pub fn hat_alphabet() -> Alphabet {
    Alphabet::new(&[("â", "ah"), ("b̂", "bh"), ("ĉ", "ch"), ("d̂", "dh")])
}

/// Relations in the tilde generators.
pub mod relations {
    pub const S03: &str = "bt^2 = ct^2 = 0\nat dt = dt at = 0\nat bt = 0\nbt dt = 0\ndt ct = 0\nct at = 0\n";
    pub const S14: &str = "bt ct + ct bt = 0\nat dt + dt at = 0\nat bt = bt at = 0\nat ct = ct at = 0\nbt dt = dt bt = 0\nct dt = dt ct = 0\n";
    pub const S14O: &str = "bt at = at bt\nct at = -at ct\ndt at = -at dt\nct bt = -bt ct\ndt bt = -bt dt\ndt ct = ct dt\n";
    pub const S14O_HAT: &str = "bh ah = -ah bh\nch ah = -ah ch\ndh ah = ah dh\nch bh = bh ch\nbh dh = -dh bh\nch dh = -dh ch\n";
}

fn tilde_presentation<F: Field>(name: &str, rels: &str) -> Presentation<F> {
    let alphabet = tilde_alphabet();
    let rels = parse_relations::<F>(&alphabet, rels).expect("built-in relations");
    let (cop, eps) = matrix_coproduct::<F>();
    let (cop, eps) = transform_coalgebra(&cop, &eps, &GeneratorChange::tilde());
    Presentation {
        name: name.to_string(),
        rules: RewriteSystem::from_relations(4, &crate::rtt::reduced_basis(&rels)).expect("oriented relations"),
        alphabet,
        coproduct: cop.into_iter().map(Some).collect(),
        counit: eps,
    }
}

/// Matrix generators with the given relations and the matrix coproduct.
pub fn matrix_presentation<F: Field>(name: &str, rels: &[NcPoly<F>]) -> Result<Presentation<F>> {
    let (cop, eps) = matrix_coproduct::<F>();
    Ok(Presentation {
        name: name.to_string(),
        alphabet: matrix_alphabet(),
        rules: RewriteSystem::from_relations(4, &crate::rtt::reduced_basis(rels))?,
        coproduct: cop.into_iter().map(Some).collect(),
        counit: eps,
    })
}

pub fn s03<F: Field>() -> Presentation<F> {
    tilde_presentation("S03", relations::S03)
}

pub fn s14<F: Field>() -> Presentation<F> {
    tilde_presentation("S14", relations::S14)
}

pub fn s14o<F: Field>() -> Presentation<F> {
    tilde_presentation("S14o", relations::S14O)
}

/// Options for the hatted form of S14o.
#[derive(Clone, Copy, Debug, Default)]
pub struct HatOptions {
    /// Adjoin `ω = âd̂ + b̂ĉ` as a letter together with `ω⁻¹`.
    pub omega: bool,
    /// Adjoin a two-sided inverse `d̂⁻¹`.
    pub dhat_inverse: bool,
}

/// S14o in the generators `â, b̂, ĉ, d̂`, optionally extended by `ω^{±1}` and `d̂⁻¹`.
///
/// Alphabet order: `â < b̂ < ĉ < d̂ (< d̂⁻¹) (< ω < ω⁻¹)`. With `ω` adjoined the
/// relation `ω = âd̂ + b̂ĉ` is oriented as `b̂ĉ -> ω - âd̂`.
pub fn s14o_hat<F: Field>(opts: HatOptions) -> Presentation<F> {
    let mut letters = vec![("â", "ah"), ("b̂", "bh"), ("ĉ", "ch"), ("d̂", "dh")];
    if opts.dhat_inverse {
        letters.push(("d̂⁻¹", "dhi"));
    }
    if opts.omega {
        letters.push(("ω", "w"));
        letters.push(("ω⁻¹", "wi"));
    }
    let alphabet = Alphabet::new(&letters);
    let n = alphabet.len();
    let mut text = relations::S14O_HAT.to_string();
    if opts.omega {
        text.push_str("bh ch = w - ah dh\nw wi = 1\nwi w = 1\n");
        for x in ["ah", "bh", "ch", "dh", "dhi"] {
            if alphabet.lookup(x).is_some() {
                text.push_str(&format!("w {x} = {x} w\nwi {x} = {x} wi\n"));
            }
        }
    }
    if opts.dhat_inverse {
        text.push_str("dh dhi = 1\ndhi dh = 1\ndhi ah = ah dhi\ndhi bh = -bh dhi\ndhi ch = -ch dhi\n");
    }
    let rels = parse_relations::<F>(&alphabet, &text).expect("built-in relations");
    let rs = RewriteSystem::from_relations(n, &rels).expect("oriented relations");
    let (cop, eps) = matrix_coproduct::<F>();
    let mut coproduct: Vec<Option<TensorPoly<F>>> = cop.into_iter().map(Some).collect();
    let mut counit = eps;
    if opts.dhat_inverse {
        coproduct.push(None);
        counit.push(F::one());
    }
    if opts.omega {
        for name in ["w", "wi"] {
            let l = NcPoly::letter(alphabet.letter(name));
            coproduct.push(Some(TensorPoly::from_pairs(&[(l.clone(), l)])));
            counit.push(F::one());
        }
    }
    let name = match (opts.omega, opts.dhat_inverse) {
        (false, false) => "S14o-hatted",
        (true, false) => "S14o-hatted+ω",
        (false, true) => "S14o-hatted+d̂⁻¹",
        (true, true) => "S14o-hatted+ω+d̂⁻¹",
    };
    Presentation { name: name.to_string(), alphabet, rules: rs, coproduct, counit }
}

/// Registry names: `S03`, `S14`, `S14o`, `S14o-hatted` (with `ω^{±1}`).
pub fn registry<F: Field>(name: &str) -> Result<Presentation<F>> {
    match name {
        "S03" | "s03" => Ok(s03()),
        "S14" | "s14" => Ok(s14()),
        "S14o" | "s14o" => Ok(s14o()),
        "S14o-hatted" | "S14oh" | "s14oh" => Ok(s14o_hat(HatOptions { omega: true, dhat_inverse: false })),
        _ => Err(Error::Unknown(name.to_string())),
    }
}

pub const REGISTRY: [&str; 4] = ["S03", "S14", "S14o", "S14o-hatted"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gauss;

    #[test]
    fn tilde_coproduct_of_a() {
        let p = s03::<Gauss>();
        let d = p.coproduct(&p.gen("at")).unwrap();
        let expect = TensorPoly::from_pairs(&[
            (p.gen("at"), p.gen("at")),
            (p.gen("bt"), p.gen("bt")),
            (p.gen("ct").scale(&Gauss::from_i64(-1)), p.gen("ct")),
            (p.gen("dt"), p.gen("dt")),
        ]);
        assert_eq!(d, expect);
        assert_eq!(p.counit(&p.gen("at")), Gauss::from_i64(1));
        assert_eq!(p.counit(&p.gen("dt")), Gauss::from_i64(0));
    }

    #[test]
    fn unit_is_grouplike() {
        let p = s14o::<Gauss>();
        assert_eq!(p.coproduct(&NcPoly::one()).unwrap(), TensorPoly::unit(2));
    }
}

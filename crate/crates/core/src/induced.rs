//! S14o in the hatted generators with `d̂` and `ω` inverted, the left and
//! right actions of s14o on it, and the induced modules `π_{ν,ρ}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::bialgebra::{s14o_hat, HatOptions, Presentation, TensorPoly};
use crate::catalog;
use crate::duality::{omega_antipode_check, DualAlgebra, OmegaCheck};
use crate::error::{Error, Result};
use crate::freealg::{fmt_coeff, Letter, NcPoly, Word};
use crate::linalg::Matrix;
use crate::reps::{burnside, headroom, ModuleRep, Side};
use crate::rtt::GeneratorChange;
use crate::scalars::Field;

/// The monomial `d̂^d b̂^b ĉ^c ω^w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono {
    pub d: i64,
    pub b: u32,
    pub c: u32,
    pub w: i64,
}

impl Mono {
    pub const ONE: Mono = Mono { d: 0, b: 0, c: 0, w: 0 };

    pub fn new(d: i64, b: u32, c: u32, w: i64) -> Self {
        Mono { d, b, c, w }
    }
    /// The product and whether it carries a minus sign.
    pub fn mul(&self, o: &Mono) -> (bool, Mono) {
        let neg = ((self.b + self.c) as i64 * o.d).rem_euclid(2) == 1;
        (neg, Mono { d: self.d + o.d, b: self.b + o.b, c: self.c + o.c, w: self.w + o.w })
    }
    /// Total degree with `ω` counted twice.
    pub fn degree(&self) -> i64 {
        self.d + self.b as i64 + self.c as i64 + 2 * self.w
    }
    fn letters(&self) -> Vec<HatLetter> {
        let mut out = Vec::new();
        let d = if self.d < 0 { HatLetter::DInv } else { HatLetter::D };
        out.extend(std::iter::repeat_n(d, self.d.unsigned_abs() as usize));
        out.extend(std::iter::repeat_n(HatLetter::B, self.b as usize));
        out.extend(std::iter::repeat_n(HatLetter::C, self.c as usize));
        let w = if self.w < 0 { HatLetter::WInv } else { HatLetter::W };
        out.extend(std::iter::repeat_n(w, self.w.unsigned_abs() as usize));
        out
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: &str, e: i64| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("d̂", self.d);
        push("b̂", self.b as i64);
        push("ĉ", self.c as i64);
        push("ω", self.w);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// An element of S14o localized at `d̂` and `ω`, in the basis `d̂^k b̂^ℓ ĉ^n ω^m`
/// with `k, m ∈ Z`. The generator `â` is `ω d̂⁻¹ - d̂⁻¹ b̂ ĉ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HatPoly<F> {
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> HatPoly<F> {
    pub fn zero() -> Self {
        HatPoly { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        Self::mono(Mono::ONE)
    }
    pub fn mono(m: Mono) -> Self {
        Self::term(m, F::one())
    }
    pub fn term(m: Mono, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }
    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }
    /// The only term, when there is exactly one.
    pub fn single(&self) -> Option<(&Mono, &F)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }
    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(F::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }
    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x.clone() * c.clone());
        }
        out
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let (neg, m) = m1.mul(m2);
                let c = c1.clone() * c2.clone();
                out.add_term(m, if neg { -c } else { c });
            }
        }
        out
    }
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }
    /// Inverse of a unit `c d̂^k ω^m`.
    pub fn inverse(&self) -> Option<Self> {
        let (m, c) = self.single()?;
        if m.b != 0 || m.c != 0 {
            return None;
        }
        Some(Self::term(Mono::new(-m.d, 0, 0, -m.w), c.inv()?))
    }
    /// Image of a word over `â, b̂, ĉ, d̂, d̂⁻¹, ω, ω⁻¹` (aliases `ah … wi`).
    pub fn from_word(p: &Presentation<F>, w: &Word) -> Result<Self> {
        let mut out = Self::one();
        for &l in w.letters() {
            let alias = p.alphabet.alias(l);
            let x = HatLetter::from_alias(alias).ok_or_else(|| Error::Unknown(alias.to_string()))?;
            out = out.mul(&x.poly());
        }
        Ok(out)
    }
    pub fn from_nc(p: &Presentation<F>, f: &NcPoly<F>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in f.terms() {
            out = out.add(&Self::from_word(p, w)?.scale(c));
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for HatPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = fmt_coeff(c);
            let term = match (body.as_str(), *m == Mono::ONE) {
                ("1", _) => m.to_string(),
                (_, true) => body,
                _ => format!("{body}*{m}"),
            };
            match (k, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => write!(f, "{term}")?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HatLetter {
    A,
    B,
    C,
    D,
    DInv,
    W,
    WInv,
}

impl HatLetter {
    pub const ALL: [HatLetter; 7] =
        [HatLetter::A, HatLetter::B, HatLetter::C, HatLetter::D, HatLetter::DInv, HatLetter::W, HatLetter::WInv];
    const MATRIX: [HatLetter; 4] = [HatLetter::A, HatLetter::B, HatLetter::C, HatLetter::D];

    pub fn from_alias(s: &str) -> Option<Self> {
        Some(match s {
            "ah" => HatLetter::A,
            "bh" => HatLetter::B,
            "ch" => HatLetter::C,
            "dh" => HatLetter::D,
            "dhi" => HatLetter::DInv,
            "w" => HatLetter::W,
            "wi" => HatLetter::WInv,
            _ => return None,
        })
    }
    pub fn poly<F: Field>(self) -> HatPoly<F> {
        let m = |d, b, c, w| HatPoly::mono(Mono::new(d, b, c, w));
        match self {
            HatLetter::A => m(-1, 0, 0, 1).sub(&m(-1, 1, 1, 0)),
            HatLetter::B => m(0, 1, 0, 0),
            HatLetter::C => m(0, 0, 1, 0),
            HatLetter::D => m(1, 0, 0, 0),
            HatLetter::DInv => m(-1, 0, 0, 0),
            HatLetter::W => m(0, 0, 0, 1),
            HatLetter::WInv => m(0, 0, 0, -1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    /// `δZ = Z ⊗ Z`.
    Grouplike,
    /// `δZ = Z ⊗ 1 + 1 ⊗ Z`, or `Z ⊗ K + 1 ⊗ Z` when twisted.
    Leibniz { twisted: bool },
}

#[derive(Clone, Debug)]
struct Op<F> {
    name: String,
    rule: Rule,
    images: BTreeMap<HatLetter, HatPoly<F>>,
}

/// `π_L(Z) f = ⟨γ(Z), f₍₁₎⟩ f₍₂₎` and `π_R(Z) f = f₍₁₎ ⟨Z, f₍₂₎⟩` for the generators of s14o.
#[derive(Clone, Debug)]
pub struct HatActions<F> {
    left: Vec<Op<F>>,
    right: Vec<Op<F>>,
}

const ACTING: [&str; 7] = ["K", "A", "B", "C", "D", "Xp", "Xm"];

impl<F: Field> HatActions<F> {
    pub fn new(dual: &DualAlgebra<F>) -> Result<Self> {
        let cat = catalog::catalog(&dual.name)
            .filter(|c| c.algebra == "s14o")
            .ok_or_else(|| Error::Unsupported(format!("hatted actions need s14o, got {}", dual.name)))?;
        let change = GeneratorChange::<F>::hat();
        let hat_tilde: Vec<NcPoly<F>> = (0..4)
            .map(|i| {
                let mut p = NcPoly::zero();
                for j in 0..4 {
                    p.add_term(Word::letter(j as Letter), change.m.get(i, j).clone());
                }
                p
            })
            .collect();
        let mut out = HatActions { left: Vec::new(), right: Vec::new() };
        for name in ACTING {
            let cop = cat
                .coproducts
                .iter()
                .find(|c| c.element == name)
                .ok_or_else(|| Error::Unknown(format!("coproduct of {name}")))?;
            let rule = if cop.terms == [(name, name)] {
                Rule::Grouplike
            } else if cop.terms.contains(&(name, "1")) && cop.terms.contains(&("1", name)) {
                Rule::Leibniz { twisted: false }
            } else if cop.terms.contains(&(name, "K")) && cop.terms.contains(&("1", name)) {
                Rule::Leibniz { twisted: true }
            } else {
                return Err(Error::Unsupported(format!("coproduct of {name}")));
            };
            let z = dual.gen(name);
            let gamma = cat
                .antipodes
                .iter()
                .find(|a| a.element == name)
                .and_then(|a| a.gamma.iter().find(|(x, _)| *x == name))
                .ok_or_else(|| Error::Unknown(format!("antipode of {name}")))?;
            let gz = dual.parse(gamma.1)?;
            let right: Vec<F> = hat_tilde.iter().map(|f| dual.pair(&z, f)).collect();
            let left: Vec<F> = hat_tilde.iter().map(|f| dual.pair(&gz, f)).collect();
            for side in [Side::Left, Side::Right] {
                let mut images = BTreeMap::new();
                for i in 0..2 {
                    for j in 0..2 {
                        let mut img = HatPoly::zero();
                        for k in 0..2 {
                            let (coef, letter) = match side {
                                Side::Right => (&right[2 * k + j], HatLetter::MATRIX[2 * i + k]),
                                Side::Left => (&left[2 * i + k], HatLetter::MATRIX[2 * k + j]),
                            };
                            img = img.add(&letter.poly().scale(coef));
                        }
                        images.insert(HatLetter::MATRIX[2 * i + j], img);
                    }
                }
                let mut op = Op { name: name.to_string(), rule, images };
                let w = [HatLetter::A, HatLetter::D];
                let bc = [HatLetter::B, HatLetter::C];
                let wi = out.apply_letters(side, &op, &w)?.add(&out.apply_letters(side, &op, &bc)?);
                op.images.insert(HatLetter::W, wi);
                for (x, xi) in [(HatLetter::D, HatLetter::DInv), (HatLetter::W, HatLetter::WInv)] {
                    let inv = out.inverse_image(side, &op, x, xi)?;
                    op.images.insert(xi, inv);
                }
                match side {
                    Side::Left => out.left.push(op),
                    Side::Right => out.right.push(op),
                }
            }
        }
        Ok(out)
    }

    fn ops(&self, side: Side) -> &[Op<F>] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn twist(&self, side: Side) -> Result<&Op<F>> {
        self.ops(side).iter().find(|o| o.name == "K").ok_or_else(|| Error::Unknown("K".into()))
    }

    fn image(op: &Op<F>, x: HatLetter) -> Result<&HatPoly<F>> {
        op.images.get(&x).ok_or_else(|| Error::Inconsistent(format!("{} on {:?} is not yet known", op.name, x)))
    }

    fn product(op: Option<&Op<F>>, letters: &[HatLetter]) -> Result<HatPoly<F>> {
        let mut acc = HatPoly::one();
        for &x in letters {
            let f = match op {
                Some(op) => Self::image(op, x)?.clone(),
                None => x.poly(),
            };
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    /// `Z(x₁…xₙ) = Σᵢ λ(x₁…xᵢ₋₁) Z(xᵢ) ρ(xᵢ₊₁…xₙ)`, with `K` as `ρ` on the right
    /// and as `λ` on the left for twisted generators.
    fn apply_letters(&self, side: Side, op: &Op<F>, letters: &[HatLetter]) -> Result<HatPoly<F>> {
        match op.rule {
            Rule::Grouplike => Self::product(Some(op), letters),
            Rule::Leibniz { twisted } => {
                let k = if twisted { Some(self.twist(side)?) } else { None };
                let (lam, rho) = match side {
                    Side::Right => (None, k),
                    Side::Left => (k, None),
                };
                let mut out = HatPoly::zero();
                for i in 0..letters.len() {
                    let l = Self::product(lam, &letters[..i])?;
                    let r = Self::product(rho, &letters[i + 1..])?;
                    out = out.add(&l.mul(Self::image(op, letters[i])?).mul(&r));
                }
                Ok(out)
            }
        }
    }

    fn inverse_image(&self, side: Side, op: &Op<F>, x: HatLetter, xi: HatLetter) -> Result<HatPoly<F>> {
        let zx = Self::image(op, x)?;
        let unit = |p: &HatPoly<F>| p.inverse().ok_or_else(|| Error::Inconsistent(format!("{} on {:?} is not a unit", op.name, x)));
        match op.rule {
            Rule::Grouplike => unit(zx),
            Rule::Leibniz { twisted } => {
                let sigma_inv = if twisted { unit(Self::image(self.twist(side)?, x)?)? } else { xi.poly() };
                let xinv = xi.poly();
                Ok(match side {
                    Side::Right => xinv.mul(zx).mul(&sigma_inv).neg(),
                    Side::Left => sigma_inv.mul(zx).mul(&xinv).neg(),
                })
            }
        }
    }

    /// Generator aliases with a known action.
    pub fn generators(&self) -> Vec<&str> {
        self.left.iter().map(|o| o.name.as_str()).collect()
    }

    /// The action of a generator on a hatted letter.
    pub fn letter_image(&self, side: Side, z: &str, x: HatLetter) -> Result<&HatPoly<F>> {
        let op = self.ops(side).iter().find(|o| o.name == z).ok_or_else(|| Error::Unknown(z.to_string()))?;
        Self::image(op, x)
    }

    pub fn act(&self, side: Side, z: &str, f: &HatPoly<F>) -> Result<HatPoly<F>> {
        let op = self.ops(side).iter().find(|o| o.name == z).ok_or_else(|| Error::Unknown(z.to_string()))?;
        let mut out = HatPoly::zero();
        for (m, c) in f.terms() {
            out = out.add(&self.apply_letters(side, op, &m.letters())?.scale(c));
        }
        Ok(out)
    }

    /// Pairs `(π_L(Y), π_R(Z))` that fail to commute on one of the given elements.
    pub fn commutation_failures(&self, elements: &[HatPoly<F>]) -> Result<Vec<(String, String, String)>> {
        let mut out = Vec::new();
        for f in elements {
            for y in self.generators() {
                for z in self.generators() {
                    let lr = self.act(Side::Left, y, &self.act(Side::Right, z, f)?)?;
                    let rl = self.act(Side::Right, z, &self.act(Side::Left, y, f)?)?;
                    if lr != rl {
                        out.push((y.to_string(), z.to_string(), f.to_string()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Basis of an induced module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedBasis {
    /// `u_ℓ = b̂^ℓ d̂^{ν-ℓ} ω^{(ρ-ν)/2}`.
    U,
    /// `v_ℓ = η^ℓ d̂^ν ω^{(ρ-ν)/2}` with `η = b̂ d̂⁻¹`.
    Eta,
}

/// Generators acting on induced modules.
pub const INDUCED_GENERATORS: [&str; 7] = ["A", "B", "C", "D", "K", "Xp", "Xm"];

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

fn check_params(nu: i64, rho: i64, l: usize) -> Result<()> {
    if (rho - nu).rem_euclid(2) != 0 {
        return Err(Error::Invalid(format!("ρ - ν = {} is odd", rho - nu)));
    }
    if nu >= 0 && (l as i64) < nu + 2 {
        return Err(Error::Invalid(format!("truncation L = {l} is below ν + 2 = {}", nu + 2)));
    }
    Ok(())
}

pub fn eta<F: Field>() -> HatPoly<F> {
    HatLetter::B.poly().mul(&HatLetter::DInv.poly())
}

pub fn induced_vector<F: Field>(nu: i64, rho: i64, l: usize, basis: InducedBasis) -> HatPoly<F> {
    let w = HatPoly::mono(Mono::new(0, 0, 0, (rho - nu).div_euclid(2)));
    let v = match basis {
        InducedBasis::U => HatLetter::B.poly().pow(l as u32).mul(&HatPoly::mono(Mono::new(nu - l as i64, 0, 0, 0))),
        InducedBasis::Eta => eta().pow(l as u32).mul(&HatPoly::mono(Mono::new(nu, 0, 0, 0))),
    };
    v.mul(&w)
}

/// `π_{ν,ρ}` on `span{u₀ … u_L}` (or the `v_ℓ`); images past `ℓ = L` are marked through the headroom.
#[derive(Clone, Debug)]
pub struct InducedModule<F> {
    pub nu: i64,
    pub rho: i64,
    pub truncation: usize,
    pub basis: InducedBasis,
    pub vectors: Vec<HatPoly<F>>,
    pub module: ModuleRep<F>,
}

pub fn induce<F: Field>(actions: &HatActions<F>, nu: i64, rho: i64, l: usize, basis: InducedBasis) -> Result<InducedModule<F>> {
    check_params(nu, rho, l)?;
    let vectors: Vec<HatPoly<F>> = (0..=l + 1).map(|k| induced_vector(nu, rho, k, basis)).collect();
    let keys: Vec<(Mono, F)> = vectors.iter().map(|v| v.single().map(|(m, c)| (*m, c.clone())).unwrap()).collect();
    let letter = match basis {
        InducedBasis::U => "u",
        InducedBasis::Eta => "v",
    };
    let labels: Vec<String> = (0..=l).map(|k| format!("{letter}{}", subscript(k))).collect();
    let mut gens = Vec::new();
    let mut exact = Vec::new();
    for g in INDUCED_GENERATORS {
        let mut cols = Vec::new();
        let mut ex = Vec::new();
        for (j, v) in vectors[..=l].iter().enumerate() {
            let img = actions.act(Side::Left, g, v)?;
            let mut col = vec![F::zero(); l + 1];
            let mut inside = true;
            for (m, c) in img.terms() {
                let k = keys.iter().position(|(km, _)| km == m).ok_or_else(|| {
                    Error::Inconsistent(format!("π({g}) {} leaves the span of the basis", labels[j]))
                })?;
                if k > l {
                    inside = false;
                } else {
                    col[k] = c.div(&keys[k].1)?;
                }
            }
            cols.push(col);
            ex.push(inside);
        }
        gens.push((g.to_string(), Matrix::from_cols(&cols, l + 1)));
        exact.push(ex);
    }
    let truncated = exact.iter().any(|e| e.iter().any(|x| !x));
    let mats: Vec<Matrix<F>> = gens.iter().map(|(_, m)| m.clone()).collect();
    let module = ModuleRep {
        algebra: "s14o".into(),
        side: Side::Left,
        labels,
        headroom: truncated.then(|| headroom(&mats, &exact)),
        gens,
    };
    Ok(InducedModule { nu, rho, truncation: l, basis, vectors: vectors[..=l].to_vec(), module })
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The closed-form matrices of `Ã, B̃, K, X^±` on `ℓ = 0..L`, with `C̃ = X⁻ - X⁺`, `D̃ = X⁺ + X⁻`.
pub fn closed_form<F: Field>(nu: i64, rho: i64, l: usize, basis: InducedBasis) -> Vec<(String, Matrix<F>)> {
    let n = l + 1;
    let f = |k: i64| F::from_i64(k);
    let a = Matrix::scalar(n, f(-rho));
    let k = Matrix::scalar(n, f(sign(rho)));
    let b = Matrix::from_fn(n, n, |i, j| if i == j { f(nu - 2 * j as i64) } else { F::zero() });
    let xp = Matrix::from_fn(n, n, |i, j| {
        let lj = j as i64;
        if i + 1 == j {
            match basis {
                InducedBasis::U => f(sign(lj - 1) * lj),
                InducedBasis::Eta => f(lj),
            }
        } else {
            F::zero()
        }
    });
    let xm = Matrix::from_fn(n, n, |i, j| {
        let lj = j as i64;
        if i == j + 1 {
            match basis {
                InducedBasis::U => f(sign(lj + 1) * (lj - nu)),
                InducedBasis::Eta => f(nu - lj),
            }
        } else {
            F::zero()
        }
    });
    let c = xm.sub(&xp);
    let d = xp.add(&xm);
    vec![
        ("A".into(), a),
        ("B".into(), b),
        ("C".into(), c),
        ("D".into(), d),
        ("K".into(), k),
        ("Xp".into(), xp),
        ("Xm".into(), xm),
    ]
}

/// `Ã = -ρ`, `B̃ = ν - 2z∂`, `X⁺ = ∂`, `X⁻ = νz - z²∂` on polynomials of degree `<= L`.
pub fn vector_field_module<F: Field>(nu: i64, rho: i64, l: usize) -> ModuleRep<F> {
    let n = l + 1;
    let f = |k: i64| F::from_i64(k);
    // Images of z^j as coefficient vectors of length n + 1.
    let op = |j: usize, which: &str| -> Vec<F> {
        let mut v = vec![F::zero(); n + 1];
        let jj = j as i64;
        match which {
            "A" => v[j] = f(-rho),
            "K" => v[j] = f(sign(rho)),
            "B" => v[j] = f(nu - 2 * jj),
            "Xp" if j > 0 => v[j - 1] = f(jj),
            "Xm" => v[j + 1] = f(nu - jj),
            _ => {}
        }
        v
    };
    let mut gens = Vec::new();
    let mut exact = Vec::new();
    for g in INDUCED_GENERATORS {
        let cols: Vec<Vec<F>> = (0..n)
            .map(|j| match g {
                "C" => op(j, "Xm").iter().zip(op(j, "Xp")).map(|(a, b)| a.clone() - b).collect(),
                "D" => op(j, "Xm").iter().zip(op(j, "Xp")).map(|(a, b)| a.clone() + b).collect(),
                _ => op(j, g),
            })
            .collect();
        exact.push(cols.iter().map(|c| c[n].is_zero()).collect::<Vec<bool>>());
        let trimmed: Vec<Vec<F>> = cols.into_iter().map(|mut c| {
            c.truncate(n);
            c
        }).collect();
        gens.push((g.to_string(), Matrix::from_cols(&trimmed, n)));
    }
    let truncated = exact.iter().any(|e| e.iter().any(|x| !x));
    let mats: Vec<Matrix<F>> = gens.iter().map(|(_, m)| m.clone()).collect();
    ModuleRep {
        algebra: "gl2".into(),
        side: Side::Left,
        labels: (0..n).map(|j| if j == 0 { "1".to_string() } else { format!("z^{j}") }).collect(),
        headroom: truncated.then(|| headroom(&mats, &exact)),
        gens,
    }
}

/// Equal matrices for every listed generator. Boundary columns keep only their
/// components inside the window on both sides.
fn same_action<F: Field>(a: &ModuleRep<F>, b: &[(String, Matrix<F>)]) -> bool {
    b.iter().all(|(g, m)| a.matrix(g) == Some(m))
}

#[derive(Clone, Debug)]
pub struct InducedReport {
    pub nu: i64,
    pub rho: i64,
    pub truncation: usize,
    /// The computed matrices equal the closed forms.
    pub closed_form: bool,
    /// `Ã = -ρ` and `K = (-1)^ρ` act as scalars.
    pub casimir: bool,
    /// `B̃` is diagonal with entries `ν - 2ℓ`.
    pub spectrum: bool,
    /// `X⁺` annihilates the first basis vector.
    pub highest_weight: bool,
    /// `X^±` shift the `B̃`-eigenvalue by `±2`.
    pub grading: bool,
    /// Relations of s14o on the columns with enough headroom.
    pub relations_checked: usize,
    pub relation_failures: Vec<String>,
    /// Dimensions of the invariant subspaces generated by basis vectors, away from the boundary band.
    pub invariant_dims: Vec<usize>,
    /// The finite invariant subspace carries an irreducible action.
    pub finite_irreducible: Option<bool>,
}

impl InducedReport {
    pub fn expected_invariants(&self) -> Vec<usize> {
        if self.nu >= 0 {
            vec![self.nu as usize + 1]
        } else {
            vec![]
        }
    }
    pub fn passed(&self) -> bool {
        self.closed_form
            && self.casimir
            && self.spectrum
            && self.highest_weight
            && self.grading
            && self.relations_checked > 0
            && self.relation_failures.is_empty()
            && self.invariant_dims == self.expected_invariants()
            && self.finite_irreducible != Some(false)
    }
}

/// Smallest invariant subspaces spanned by basis vectors that stay inside `ℓ <= L - 2`.
fn invariant_spans<F: Field>(m: &ModuleRep<F>) -> Vec<Vec<usize>> {
    let n = m.dim();
    let band = n.saturating_sub(2);
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for start in 0..band {
        let mut set = vec![start];
        let mut k = 0;
        while k < set.len() {
            let j = set[k];
            for (_, mat) in &m.gens {
                for i in 0..n {
                    if !mat.get(i, j).is_zero() && !set.contains(&i) {
                        set.push(i);
                    }
                }
            }
            k += 1;
        }
        set.sort();
        if set.iter().all(|&i| i < band) && !seen.contains(&set) {
            seen.push(set);
        }
    }
    seen
}

pub fn induced_report<F: Field>(dual: &DualAlgebra<F>, m: &InducedModule<F>) -> Result<InducedReport> {
    let rels = crate::reps::RepContext::new(dual)?;
    let rep = &m.module;
    let n = rep.dim();
    let expected = closed_form::<F>(m.nu, m.rho, m.truncation, m.basis);
    let closed = same_action(rep, &expected);
    let get = |g: &str| rep.matrix(g).cloned().unwrap_or_else(|| Matrix::zeros(n, n));
    let (a, b, k, xp, xm) = (get("A"), get("B"), get("K"), get("Xp"), get("Xm"));
    let casimir = a == Matrix::scalar(n, F::from_i64(-m.rho)) && k == Matrix::scalar(n, F::from_i64(sign(m.rho)));
    let spectrum = (0..n).all(|i| {
        (0..n).all(|j| *b.get(i, j) == if i == j { F::from_i64(m.nu - 2 * j as i64) } else { F::zero() })
    });
    let highest_weight = xp.col(0).iter().all(|x| x.is_zero());
    let grading = (0..n).all(|i| {
        (0..n).all(|j| (xp.get(i, j).is_zero() || i + 1 == j) && (xm.get(i, j).is_zero() || i == j + 1))
    });
    let report = rep.check_relations(&rels.alphabet, &rels.relations);
    let spans = invariant_spans(rep);
    let finite_irreducible = spans.first().filter(|_| m.nu >= 0).map(|s| {
        let basis: Vec<Vec<F>> = s.iter().map(|&i| (0..n).map(|r| if r == i { F::one() } else { F::zero() }).collect()).collect();
        let sub = rep.restrict(&basis, s.iter().map(|&i| rep.labels[i].clone()).collect());
        sub.is_some_and(|sub| burnside(&sub.gens.iter().map(|(_, x)| x.clone()).collect::<Vec<_>>()))
    });
    Ok(InducedReport {
        nu: m.nu,
        rho: m.rho,
        truncation: m.truncation,
        closed_form: closed,
        casimir,
        spectrum,
        highest_weight,
        grading,
        relations_checked: report.checked,
        relation_failures: report.failures,
        invariant_dims: spans.iter().map(|s| s.len()).collect(),
        finite_irreducible,
    })
}

/// Comparison of the `u` and `η` bases and of the `η` basis with the vector-field action.
#[derive(Clone, Debug)]
pub struct EtaComparison {
    /// `u_ℓ = σ_ℓ v_ℓ`.
    pub signs: Vec<i64>,
    /// `diag(σ)` intertwines the two modules.
    pub intertwines: bool,
    /// The `η`-basis matrices are the sign-free closed forms.
    pub sign_free: bool,
    /// `v_ℓ ↦ z^ℓ` carries the action to the vector-field action.
    pub vector_field: bool,
}

impl EtaComparison {
    pub fn passed(&self) -> bool {
        self.intertwines && self.sign_free && self.vector_field && self.signs.iter().all(|s| s.abs() == 1)
    }
}

pub fn eta_comparison<F: Field>(actions: &HatActions<F>, nu: i64, rho: i64, l: usize) -> Result<EtaComparison> {
    let u = induce(actions, nu, rho, l, InducedBasis::U)?;
    let v = induce(actions, nu, rho, l, InducedBasis::Eta)?;
    let mut signs = Vec::new();
    for (a, b) in u.vectors.iter().zip(&v.vectors) {
        let s = if *a == *b {
            1
        } else if *a == b.neg() {
            -1
        } else {
            0
        };
        signs.push(s);
    }
    let n = l + 1;
    let s = Matrix::from_fn(n, n, |i, j| if i == j { F::from_i64(signs[i]) } else { F::zero() });
    let hr = u.module.headroom.clone().unwrap_or_else(|| vec![usize::MAX; n]);
    let intertwines = u.module.gens.iter().zip(&v.module.gens).all(|((_, mu), (_, mv))| {
        let lhs = mu.mul(&s);
        let rhs = s.mul(mv);
        (0..n).all(|j| hr[j] == 0 || lhs.col(j) == rhs.col(j))
    });
    let sign_free = same_action(&v.module, &closed_form(nu, rho, l, InducedBasis::Eta));
    let vf = vector_field_module::<F>(nu, rho, l);
    let vector_field = same_action(&v.module, &vf.gens);
    Ok(EtaComparison { signs, intertwines, sign_free, vector_field })
}

/// `ω = âd̂ + b̂ĉ` is central and group-like with `ε(ω) = 1`, and the matrix antipode identities hold.
#[derive(Clone, Debug)]
pub struct OmegaReport {
    pub central: bool,
    pub coproduct: bool,
    pub counit: bool,
    pub antipode: OmegaCheck,
}

impl OmegaReport {
    pub fn passed(&self) -> bool {
        self.central && self.coproduct && self.counit && self.antipode.passed()
    }
}

pub fn omega_checks<F: Field>() -> Result<OmegaReport> {
    let p = s14o_hat::<F>(HatOptions::default());
    let w = p.parse("ah dh + bh ch")?;
    let central = ["ah", "bh", "ch", "dh"].iter().all(|x| {
        let g = p.gen(x);
        p.nf(&w.mul(&g).sub(&g.mul(&w))).is_zero()
    });
    let cop = p.coproduct(&w)?;
    let ww = p.normalize_tensor(&TensorPoly::from_pairs(&[(w.clone(), w.clone())]));
    let coproduct = p.normalize_tensor(&cop) == ww;
    let counit = p.counit(&w) == F::one();
    let antipode = omega_antipode_check(&s14o_hat::<F>(HatOptions { omega: true, dhat_inverse: false }));
    Ok(OmegaReport { central, coproduct, counit, antipode })
}

/// `[B̃, X^±] = ±2X^±`, `[X⁺, X⁻] = B̃` and `ε(X^±) = 0` through the pairing.
#[derive(Clone, Debug)]
pub struct Sl2Report {
    pub relations: Vec<(String, bool)>,
    pub counit: bool,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.counit && self.relations.iter().all(|(_, ok)| *ok)
    }
}

pub fn sl2_check<F: Field>(dual: &DualAlgebra<F>, maxdeg: usize) -> Result<Sl2Report> {
    let cases = [
        ("[B̃, X⁺] = 2X⁺", "B Xp - Xp B - 2 Xp"),
        ("[B̃, X⁻] = -2X⁻", "B Xm - Xm B + 2 Xm"),
        ("[X⁺, X⁻] = B̃", "Xp Xm - Xm Xp - B"),
    ];
    let mut relations = Vec::new();
    for (label, text) in cases {
        let r = dual.parse(text)?;
        relations.push((label.to_string(), dual.verify_dual_relation(&r, maxdeg).is_ok()));
    }
    let one = NcPoly::one();
    let counit = ["Xp", "Xm"].iter().all(|x| dual.pair(&dual.gen(x), &one).is_zero());
    Ok(Sl2Report { relations, counit })
}

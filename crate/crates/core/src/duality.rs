//! Duality pairing between a dual algebra and its bialgebra, built from
//! tangent-vector and group-like base pairings through the coproduct.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::bialgebra::{s03, s14, s14o, Presentation, TensorPoly};
use crate::error::{Error, Result};
use crate::freealg::{parse_poly_in, parse_relations, Alphabet, Letter, NcPoly, Word};
use crate::linalg::Matrix;
use crate::scalars::Field;

/// How a dual generator pairs with normal-form words.
#[derive(Clone, Debug)]
pub enum BasePairing<F> {
    /// `⟨Z, f⟩ = ε(∂f/∂x)`.
    Tangent(Letter),
    /// Multiplicative: `⟨Z, x₁…xₙ⟩ = χ(x₁)…χ(xₙ)`.
    Character(Vec<F>),
    /// A linear combination of other dual generators.
    Combination(NcPoly<F>),
}

/// Sparse operator: `rows[i]` lists the image of basis vector `i`.
type Sparse<F> = Vec<Vec<(usize, F)>>;

#[derive(Debug)]
pub struct Grade {
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Grade {
    pub fn index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
    pub fn len(&self) -> usize {
        self.words.len()
    }
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// A dual algebra `U` paired with a bialgebra `A`.
pub struct DualAlgebra<F> {
    pub name: String,
    pub algebra: Presentation<F>,
    pub alphabet: Alphabet,
    pub rules: Vec<BasePairing<F>>,
    prune: bool,
    grades: Mutex<BTreeMap<usize, Arc<Grade>>>,
    actions: Mutex<HashMap<(Letter, usize), Arc<Sparse<F>>>>,
    rows: Mutex<HashMap<(usize, Word), Arc<Vec<F>>>>,
}

/// A failed pairing check: the element of `A` that separates both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F> {
    pub word: Word,
    pub value: F,
}

impl<F: Field> DualAlgebra<F> {
    pub fn new(name: &str, algebra: Presentation<F>, gens: &[(&str, &str, BasePairing<F>)]) -> Self {
        let names: Vec<(&str, &str)> = gens.iter().map(|(n, a, _)| (*n, *a)).collect();
        let prune = content_preserving(&algebra);
        DualAlgebra {
            name: name.to_string(),
            algebra,
            alphabet: Alphabet::new(&names),
            rules: gens.iter().map(|(_, _, r)| r.clone()).collect(),
            prune,
            grades: Mutex::new(BTreeMap::new()),
            actions: Mutex::new(HashMap::new()),
            rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn parse(&self, text: &str) -> Result<NcPoly<F>> {
        parse_poly_in(&self.alphabet, text)
    }

    pub fn gen(&self, name: &str) -> NcPoly<F> {
        NcPoly::letter(self.alphabet.letter(name))
    }

    /// Letters carrying a base pairing of their own.
    pub fn primary_letters(&self) -> Vec<Letter> {
        self.alphabet.letters().filter(|&l| !matches!(self.rules[l as usize], BasePairing::Combination(_))).collect()
    }

    pub fn grade(&self, n: usize) -> Arc<Grade> {
        if let Some(g) = self.grades.lock().unwrap().get(&n) {
            return g.clone();
        }
        let words = self.algebra.basis(n);
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let g = Arc::new(Grade { words, index });
        self.grades.lock().unwrap().insert(n, g.clone());
        g
    }

    /// Replace combination letters by their definitions.
    pub fn expand(&self, u: &NcPoly<F>) -> NcPoly<F> {
        let images: Vec<NcPoly<F>> = self
            .alphabet
            .letters()
            .map(|l| match &self.rules[l as usize] {
                BasePairing::Combination(p) => p.clone(),
                _ => NcPoly::letter(l),
            })
            .collect();
        u.substitute(&images)
    }

    /// Base pairing of a primary generator with a normal-form word.
    pub fn base_pairing(&self, z: Letter, w: &Word) -> F {
        let eps = &self.algebra.counit;
        match &self.rules[z as usize] {
            BasePairing::Tangent(x) => {
                let mut total = F::zero();
                for (p, &l) in w.letters().iter().enumerate() {
                    if l != *x {
                        continue;
                    }
                    let mut v = F::one();
                    for (q, &m) in w.letters().iter().enumerate() {
                        if q != p {
                            v *= eps[m as usize].clone();
                        }
                    }
                    total += v;
                }
                total
            }
            BasePairing::Character(chi) => {
                let mut v = F::one();
                for &l in w.letters() {
                    v *= chi[l as usize].clone();
                }
                v
            }
            BasePairing::Combination(p) => {
                let mut v = F::zero();
                for (u, c) in p.terms() {
                    v += c.clone() * self.pair_word(u, w);
                }
                v
            }
        }
    }

    fn admissible(&self, z: Letter, partial: &[Letter]) -> bool {
        if !self.prune {
            return true;
        }
        let eps = &self.algebra.counit;
        match &self.rules[z as usize] {
            BasePairing::Tangent(x) => {
                let mut off = 0;
                for &l in partial {
                    if eps[l as usize].is_zero() {
                        if l != *x {
                            return false;
                        }
                        off += 1;
                    }
                }
                off <= 1
            }
            BasePairing::Character(chi) => partial.iter().all(|&l| !chi[l as usize].is_zero()),
            BasePairing::Combination(_) => true,
        }
    }

    /// `π_R(Z) f = f₍₁₎ ⟨Z, f₍₂₎⟩` on the degree-`n` basis, for a primary generator.
    fn action(&self, z: Letter, n: usize) -> Arc<Sparse<F>> {
        if let Some(a) = self.actions.lock().unwrap().get(&(z, n)) {
            return a.clone();
        }
        let grade = self.grade(n);
        let pieces: Vec<Vec<(Vec<Letter>, Vec<Letter>, F)>> = self
            .algebra
            .coproduct
            .iter()
            .map(|t| {
                t.as_ref()
                    .map(|t| t.terms().map(|(k, c)| (k[0].letters().to_vec(), k[1].letters().to_vec(), c.clone())).collect())
                    .unwrap_or_default()
            })
            .collect();
        let mut rows = Vec::with_capacity(grade.len());
        for f in &grade.words {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            let mut s1 = Vec::new();
            let mut s2 = Vec::new();
            self.dfs(z, f.letters(), &pieces, &grade, &mut s1, &mut s2, F::one(), &mut acc);
            rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        let a = Arc::new(rows);
        self.actions.lock().unwrap().insert((z, n), a.clone());
        a
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        z: Letter,
        rest: &[Letter],
        pieces: &[Vec<(Vec<Letter>, Vec<Letter>, F)>],
        grade: &Grade,
        s1: &mut Vec<Letter>,
        s2: &mut Vec<Letter>,
        coeff: F,
        acc: &mut BTreeMap<usize, F>,
    ) {
        let Some((&l, tail)) = rest.split_first() else {
            let mut v = F::zero();
            for (w, c) in self.algebra.rules.normal_form_word(&Word::from_slice(s2)).terms() {
                v += c.clone() * self.base_pairing(z, w);
            }
            if v.is_zero() {
                return;
            }
            let v = v * coeff;
            for (w, c) in self.algebra.rules.normal_form_word(&Word::from_slice(s1)).terms() {
                let i = grade.index(w).expect("homogeneous coproduct");
                let e = acc.entry(i).or_insert_with(F::zero);
                *e += v.clone() * c.clone();
            }
            return;
        };
        for (y, x, c) in &pieces[l as usize] {
            let (n1, n2) = (s1.len(), s2.len());
            s2.extend_from_slice(x);
            if self.admissible(z, s2) {
                s1.extend_from_slice(y);
                self.dfs(z, tail, pieces, grade, s1, s2, coeff.clone() * c.clone(), acc);
            }
            s1.truncate(n1);
            s2.truncate(n2);
        }
    }

    /// Matrix of `π_R(u)` on the degree-`n` basis acting on coordinate columns.
    pub fn action_matrix(&self, u: &NcPoly<F>, n: usize) -> Matrix<F> {
        let dim = self.grade(n).len();
        let mut total = Matrix::zeros(dim, dim);
        for (w, c) in self.expand(u).terms() {
            let mut m = Matrix::identity(dim);
            for &z in w.letters() {
                let a = self.action(z, n);
                let mut s = Matrix::zeros(dim, dim);
                for (j, row) in a.iter().enumerate() {
                    for (i, v) in row {
                        s.set(*i, j, v.clone());
                    }
                }
                m = m.mul(&s);
            }
            total = total.add(&m.scale(c));
        }
        total
    }

    /// `⟨w, f⟩` for every degree-`n` basis word `f`, for a word over primary letters.
    fn word_row(&self, w: &Word, n: usize) -> Arc<Vec<F>> {
        if let Some(r) = self.rows.lock().unwrap().get(&(n, w.clone())) {
            return r.clone();
        }
        let row: Vec<F> = match w.letters().split_last() {
            None => self.grade(n).words.iter().map(|f| self.algebra.counit_word(f)).collect(),
            Some((&z, prefix)) => {
                let prev = self.word_row(&Word::from_slice(prefix), n);
                let a = self.action(z, n);
                a.iter()
                    .map(|img| {
                        let mut v = F::zero();
                        for (g, c) in img {
                            if !prev[*g].is_zero() {
                                v += c.clone() * prev[*g].clone();
                            }
                        }
                        v
                    })
                    .collect()
            }
        };
        let row = Arc::new(row);
        self.rows.lock().unwrap().insert((n, w.clone()), row.clone());
        row
    }

    /// `⟨u, f⟩` for every degree-`n` basis word `f`.
    pub fn pairing_row(&self, u: &NcPoly<F>, n: usize) -> Vec<F> {
        let dim = self.grade(n).len();
        let mut out = vec![F::zero(); dim];
        for (w, c) in self.expand(u).terms() {
            let r = self.word_row(w, n);
            for (o, x) in out.iter_mut().zip(r.iter()) {
                if !x.is_zero() {
                    *o += c.clone() * x.clone();
                }
            }
        }
        out
    }

    fn pair_word(&self, u: &Word, f: &Word) -> F {
        self.pair(&NcPoly::from_word(u.clone()), &NcPoly::from_word(f.clone()))
    }

    /// `⟨u, f⟩` for arbitrary elements.
    pub fn pair(&self, u: &NcPoly<F>, f: &NcPoly<F>) -> F {
        let f = self.algebra.nf(f);
        let mut by_degree: BTreeMap<usize, Vec<(&Word, &F)>> = BTreeMap::new();
        for (w, c) in f.terms() {
            by_degree.entry(w.len()).or_default().push((w, c));
        }
        let mut v = F::zero();
        for (n, terms) in by_degree {
            let row = self.pairing_row(u, n);
            let grade = self.grade(n);
            for (w, c) in terms {
                v += c.clone() * row[grade.index(w).unwrap()].clone();
            }
        }
        v
    }

    /// `⟨u, f⟩` with `u` and `f` given as text.
    pub fn pair_text(&self, u: &str, f: &str) -> Result<F> {
        Ok(self.pair(&self.parse(u)?, &self.algebra.parse(f)?))
    }

    /// Checks `⟨r, f⟩ = 0` for all basis words of length `<= maxdeg`.
    pub fn verify_dual_relation(&self, r: &NcPoly<F>, maxdeg: usize) -> std::result::Result<(), Witness<F>> {
        for n in 0..=maxdeg {
            let row = self.pairing_row(r, n);
            if let Some(i) = row.iter().position(|x| !x.is_zero()) {
                return Err(Witness { word: self.grade(n).words[i].clone(), value: row[i].clone() });
            }
        }
        Ok(())
    }

    /// Checks `⟨claimed, f ⊗ g⟩ = ⟨z, fg⟩` for basis words with `ℓ(f) + ℓ(g) <= maxdeg`.
    pub fn verify_dual_coproduct(
        &self,
        z: &NcPoly<F>,
        claimed: &TensorPoly<F>,
        maxdeg: usize,
    ) -> std::result::Result<(), (Word, Word)> {
        let mut rows: HashMap<(Word, usize), Vec<F>> = HashMap::new();
        let mut row = |u: &Word, n: usize| -> Vec<F> {
            rows.entry((u.clone(), n)).or_insert_with(|| self.pairing_row(&NcPoly::from_word(u.clone()), n)).clone()
        };
        for total in 0..=maxdeg {
            let zrow = self.pairing_row(z, total);
            let gt = self.grade(total);
            for p in 0..=total {
                let (gf, gg) = (self.grade(p), self.grade(total - p));
                let mut left: Vec<(Vec<F>, Vec<F>, F)> = Vec::new();
                for (k, c) in claimed.terms() {
                    left.push((row(&k[0], p), row(&k[1], total - p), c.clone()));
                }
                for (i, f) in gf.words.iter().enumerate() {
                    for (j, g) in gg.words.iter().enumerate() {
                        let mut rhs = F::zero();
                        for (a, b, c) in &left {
                            if !a[i].is_zero() && !b[j].is_zero() {
                                rhs += c.clone() * a[i].clone() * b[j].clone();
                            }
                        }
                        let mut lhs = F::zero();
                        for (w, c) in self.algebra.rules.normal_form_word(&f.concat(g)).terms() {
                            lhs += c.clone() * zrow[gt.index(w).unwrap()].clone();
                        }
                        if lhs != rhs {
                            return Err((f.clone(), g.clone()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `[z, G] = 0` for every primary generator `G`.
    pub fn casimir_check(&self, z: &NcPoly<F>, maxdeg: usize) -> bool {
        self.primary_letters().into_iter().all(|l| {
            let g = NcPoly::letter(l);
            self.verify_dual_relation(&z.mul(&g).sub(&g.mul(z)), maxdeg).is_ok()
        })
    }

    /// Stacked pairing rows over all degrees `<= maxdeg`.
    pub fn pairing_vector(&self, u: &NcPoly<F>, maxdeg: usize) -> Vec<F> {
        (0..=maxdeg).flat_map(|n| self.pairing_row(u, n)).collect()
    }

    /// Parses `lhs = rhs = ...` chains into differences.
    pub fn parse_relations(&self, text: &str) -> Result<Vec<NcPoly<F>>> {
        parse_relations(&self.alphabet, text)
    }

    /// Builds `Σ u ⊗ v` from pairs of texts.
    pub fn parse_tensor(&self, pairs: &[(&str, &str)]) -> Result<TensorPoly<F>> {
        let mut ps = Vec::new();
        for (a, b) in pairs {
            ps.push((self.parse(a)?, self.parse(b)?));
        }
        Ok(TensorPoly::from_pairs(&ps))
    }
}

/// True when every rule maps a word to a multiple of a rearrangement of its letters.
fn content_preserving<F: Field>(p: &Presentation<F>) -> bool {
    p.rules.rules().all(|(x, y, rhs)| {
        rhs.is_zero()
            || (rhs.len() == 1 && {
                let w = rhs.terms().next().unwrap().0;
                let mut a = w.letters().to_vec();
                a.sort();
                let mut b = vec![x, y];
                b.sort();
                a == b
            })
    })
}

fn tangent_gens<F: Field>() -> Vec<(&'static str, &'static str, BasePairing<F>)> {
    vec![
        ("Ã", "A", BasePairing::Tangent(0)),
        ("B̃", "B", BasePairing::Tangent(1)),
        ("C̃", "C", BasePairing::Tangent(2)),
        ("D̃", "D", BasePairing::Tangent(3)),
    ]
}

fn sign_character<F: Field>() -> Vec<F> {
    vec![-F::one(), F::zero(), F::zero(), F::zero()]
}

pub fn dual_s03<F: Field>() -> DualAlgebra<F> {
    DualAlgebra::new("s03", s03(), &tangent_gens())
}

pub fn dual_s14<F: Field>() -> DualAlgebra<F> {
    let mut gens = tangent_gens();
    gens.push(("E", "E", BasePairing::Character(vec![F::zero(); 4])));
    gens.push(("K", "K", BasePairing::Character(sign_character())));
    DualAlgebra::new("s14", s14(), &gens)
}

pub fn dual_s14o<F: Field>() -> DualAlgebra<F> {
    let mut gens = tangent_gens();
    gens.push(("K", "K", BasePairing::Character(sign_character())));
    let h = F::from_gauss(&crate::Gauss::from_ratio(1, 2));
    let c = NcPoly::letter(2);
    let d = NcPoly::letter(3);
    gens.push(("X⁺", "Xp", BasePairing::Combination(d.sub(&c).scale(&h))));
    gens.push(("X⁻", "Xm", BasePairing::Combination(d.add(&c).scale(&h))));
    DualAlgebra::new("s14o", s14o(), &gens)
}

pub fn dual_registry<F: Field>(name: &str) -> Result<DualAlgebra<F>> {
    match name {
        "s03" | "S03" => Ok(dual_s03()),
        "s14" | "S14" => Ok(dual_s14()),
        "s14o" | "S14o" => Ok(dual_s14o()),
        _ => Err(Error::Unknown(name.to_string())),
    }
}

/// Finite-dimensional algebra given by structure constants on a basis of dual elements.
#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra<F> {
    pub name: String,
    pub labels: Vec<String>,
    pub basis: Vec<NcPoly<F>>,
    /// `structure[i][j]` holds the coordinates of `b_i b_j`.
    pub structure: Vec<Vec<Vec<F>>>,
    /// `coproduct[i]` is a `dim x dim` coefficient matrix of `δ(b_i)`.
    pub coproduct: Vec<Matrix<F>>,
    pub counit: Vec<F>,
}

impl<F: Field> FiniteDimAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn unit(&self) -> Vec<F> {
        self.coords_of_basis(0)
    }
    pub fn coords_of_basis(&self, i: usize) -> Vec<F> {
        (0..self.dim()).map(|k| if k == i { F::one() } else { F::zero() }).collect()
    }
    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for k in 0..n {
                    let s = &self.structure[i][j][k];
                    if !s.is_zero() {
                        out[k] += c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }
    /// Matrix of left multiplication by `x`.
    pub fn left_mul(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul(x, &self.coords_of_basis(j))).collect();
        Matrix::from_cols(&cols, self.dim())
    }
    pub fn right_mul(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul(&self.coords_of_basis(j), x)).collect();
        Matrix::from_cols(&cols, self.dim())
    }
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (a, b, c) = (self.coords_of_basis(i), self.coords_of_basis(j), self.coords_of_basis(k));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }
    /// `δ` is an algebra map on basis pairs.
    pub fn coproduct_is_multiplicative(&self) -> bool {
        let n = self.dim();
        let tmul = |x: &Matrix<F>, y: &Matrix<F>| -> Matrix<F> {
            let mut out = Matrix::zeros(n, n);
            for p in 0..n {
                for q in 0..n {
                    if x.get(p, q).is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        for s in 0..n {
                            if y.get(r, s).is_zero() {
                                continue;
                            }
                            let c = x.get(p, q).clone() * y.get(r, s).clone();
                            for (k1, a) in self.structure[p][r].iter().enumerate() {
                                if a.is_zero() {
                                    continue;
                                }
                                for (k2, b) in self.structure[q][s].iter().enumerate() {
                                    if !b.is_zero() {
                                        out.add_at(k1, k2, c.clone() * a.clone() * b.clone());
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                let prod = self.mul(&self.coords_of_basis(i), &self.coords_of_basis(j));
                let mut lhs = Matrix::zeros(n, n);
                for (k, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = lhs.add(&self.coproduct[k].scale(c));
                    }
                }
                lhs == tmul(&self.coproduct[i], &self.coproduct[j])
            })
        })
    }
}

/// Pairing matrix of a list of dual elements against all basis words of degree `<= maxdeg`.
pub(crate) fn pairing_columns<F: Field>(dual: &DualAlgebra<F>, basis: &[NcPoly<F>], maxdeg: usize) -> Matrix<F> {
    let cols: Vec<Vec<F>> = basis.iter().map(|b| dual.pairing_vector(b, maxdeg)).collect();
    let rows = cols[0].len();
    Matrix::from_cols(&cols, rows)
}

/// Builds a finite-dimensional subalgebra from a spanning list of dual words,
/// expanding every product and coproduct by exact pairing solves.
pub fn build_finite_subalgebra<F: Field>(
    dual: &DualAlgebra<F>,
    name: &str,
    words: &[&str],
    maxdeg: usize,
) -> Result<FiniteDimAlgebra<F>> {
    let basis: Vec<NcPoly<F>> = words.iter().map(|w| dual.parse(w)).collect::<Result<_>>()?;
    let n = basis.len();
    let p = pairing_columns(dual, &basis, maxdeg);
    if p.rank() != n {
        return Err(Error::Inconsistent(format!("{name}: basis is linearly dependent")));
    }
    let solve = |v: &[F], what: &str| p.solve(v).ok_or_else(|| Error::Inconsistent(format!("{name}: {what} leaves the span")));
    let mut structure = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let prod = basis[i].mul(&basis[j]);
            row.push(solve(&dual.pairing_vector(&prod, maxdeg), &format!("{} * {}", words[i], words[j]))?);
        }
        structure.push(row);
    }
    // Coproduct: ⟨δ(b), f ⊗ g⟩ = ⟨b, fg⟩ over pairs of low-degree words.
    let d = (0..=maxdeg).find(|&d| pairing_columns(dual, &basis, d).rank() == n).unwrap();
    let words_upto: Vec<Word> = (0..=d).flat_map(|k| dual.grade(k).words.clone()).collect();
    let vals: Vec<Vec<F>> = basis
        .iter()
        .map(|b| words_upto.iter().map(|f| dual.pair(b, &NcPoly::from_word(f.clone()))).collect())
        .collect();
    let m = words_upto.len();
    let mut sys = Matrix::zeros(m * m, n * n);
    for (fi, _) in words_upto.iter().enumerate() {
        for (gi, _) in words_upto.iter().enumerate() {
            for pi in 0..n {
                for qi in 0..n {
                    let v = vals[pi][fi].clone() * vals[qi][gi].clone();
                    if !v.is_zero() {
                        sys.set(fi * m + gi, pi * n + qi, v);
                    }
                }
            }
        }
    }
    let mut coproduct = Vec::with_capacity(n);
    for (i, b) in basis.iter().enumerate() {
        let mut rhs = Vec::with_capacity(m * m);
        for f in &words_upto {
            for g in &words_upto {
                rhs.push(dual.pair(b, &NcPoly::from_word(f.concat(g))));
            }
        }
        let x = sys.solve(&rhs).ok_or_else(|| Error::Inconsistent(format!("{name}: coproduct of {}", words[i])))?;
        coproduct.push(Matrix::from_fn(n, n, |p, q| x[p * n + q].clone()));
    }
    let counit = basis.iter().map(|b| dual.pair(b, &NcPoly::one())).collect();
    Ok(FiniteDimAlgebra {
        name: name.to_string(),
        labels: words.iter().map(|s| s.to_string()).collect(),
        basis,
        structure,
        coproduct,
        counit,
    })
}

/// Basis of the nine-dimensional subalgebra generated by `B̃, C̃, D̃` together with the unit.
pub const S03_PRIME_BASIS: [&str; 9] = ["1", "B", "C", "D", "B C", "B D", "D C", "B^2", "D^2"];

pub fn s03_prime<F: Field>(dual: &DualAlgebra<F>) -> Result<FiniteDimAlgebra<F>> {
    build_finite_subalgebra(dual, "s03'", &S03_PRIME_BASIS, 6)
}

/// Outcome of an exact linear solve: a solution, or a certified rank obstruction.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<F> {
    Feasible(Vec<(String, Vec<F>)>),
    Infeasible { rank: usize, augmented_rank: usize },
}

impl<F> SolveOutcome<F> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveOutcome::Feasible(_))
    }
}

fn solve_or_certify<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<std::result::Result<Vec<F>, (usize, usize)>> {
    let rank = a.rank();
    let mut aug = Matrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let ar = aug.rank();
    if ar > rank {
        return Some(Err((rank, ar)));
    }
    a.solve(b).map(Ok)
}

/// Solves `m ∘ (id ⊗ γ) ∘ δ = ε` on `b_z` for the unknowns `γ(b_q)` occurring in
/// `δ(b_z)`, together with `γ(1) = 1`.
pub fn antipode_solve<F: Field>(alg: &FiniteDimAlgebra<F>, z: usize) -> SolveOutcome<F> {
    let n = alg.dim();
    let cop = &alg.coproduct[z];
    let mut unknowns: Vec<usize> = vec![0];
    for q in 0..n {
        if (0..n).any(|p| !cop.get(p, q).is_zero()) && !unknowns.contains(&q) {
            unknowns.push(q);
        }
    }
    let u = unknowns.len();
    let mut a = Matrix::zeros(2 * n, u * n);
    let mut b = vec![F::zero(); 2 * n];
    // Σ c_pq b_p γ(b_q) = ε(b_z) 1
    for (ui, &q) in unknowns.iter().enumerate() {
        for p in 0..n {
            let c = cop.get(p, q);
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                for (m, s) in alg.structure[p][k].iter().enumerate() {
                    if !s.is_zero() {
                        a.add_at(m, ui * n + k, c.clone() * s.clone());
                    }
                }
            }
        }
    }
    b[0] = alg.counit[z].clone();
    // γ(1) = 1
    for k in 0..n {
        a.set(n + k, k, F::one());
    }
    b[n] = F::one();
    match solve_or_certify(&a, &b) {
        Some(Ok(x)) => SolveOutcome::Feasible(
            unknowns.iter().enumerate().map(|(ui, &q)| (alg.labels[q].clone(), x[ui * n..(ui + 1) * n].to_vec())).collect(),
        ),
        Some(Err((rank, augmented_rank))) => SolveOutcome::Infeasible { rank, augmented_rank },
        None => SolveOutcome::Infeasible { rank: 0, augmented_rank: 0 },
    }
}

/// Searches `x` in the span of `span` with `left · x = target`, comparing pairings to `maxdeg`.
pub fn solve_left_product<F: Field>(
    dual: &DualAlgebra<F>,
    left: &NcPoly<F>,
    span: &[NcPoly<F>],
    target: &NcPoly<F>,
    maxdeg: usize,
) -> SolveOutcome<F> {
    let prods: Vec<NcPoly<F>> = span.iter().map(|s| left.mul(s)).collect();
    let a = pairing_columns(dual, &prods, maxdeg);
    let b = dual.pairing_vector(target, maxdeg);
    match solve_or_certify(&a, &b) {
        Some(Ok(x)) => SolveOutcome::Feasible(vec![("x".into(), x)]),
        Some(Err((rank, augmented_rank))) => SolveOutcome::Infeasible { rank, augmented_rank },
        None => SolveOutcome::Infeasible { rank: 0, augmented_rank: 0 },
    }
}

/// All words of length `<= len` over the given letters.
pub fn dual_words<F: Field>(letters: &[Letter], len: usize) -> Vec<NcPoly<F>> {
    let mut out = vec![NcPoly::one()];
    let mut layer = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in letters {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(NcPoly::from_word));
        layer = next;
    }
    out
}

/// Matrix-level antipode identities for the hatted presentation with `ω^{±1}`.
#[derive(Clone, Debug)]
pub struct OmegaCheck {
    /// `M · adj(M) = ω·1`.
    pub m_adj: bool,
    /// `adj(M) · M = ω·1`.
    pub adj_m: bool,
    /// `M · γ(M) = 1` with `γ(M) = ω⁻¹ adj(M)`.
    pub m_gamma: bool,
    /// `γ(M) · M = 1`.
    pub gamma_m: bool,
    /// `γ(M) · M = ω·1`, the literal form claimed for `γ(M)`.
    pub gamma_m_is_omega: bool,
}

impl OmegaCheck {
    pub fn passed(&self) -> bool {
        self.m_adj && self.adj_m && self.m_gamma && self.gamma_m
    }
}

pub fn omega_antipode_check<F: Field>(p: &Presentation<F>) -> OmegaCheck {
    let g = |s: &str| p.gen(s);
    let m = [[g("ah"), g("bh")], [g("ch"), g("dh")]];
    let adj = [[g("dh"), g("bh")], [g("ch"), g("ah")]];
    let wi = g("wi");
    let gamma = adj.clone().map(|r| r.map(|x| wi.mul(&x)));
    let prod = |x: &[[NcPoly<F>; 2]; 2], y: &[[NcPoly<F>; 2]; 2]| -> [[NcPoly<F>; 2]; 2] {
        let e = |i: usize, j: usize| p.nf(&x[i][0].mul(&y[0][j]).add(&x[i][1].mul(&y[1][j])));
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let scalar = |s: NcPoly<F>| [[s.clone(), NcPoly::zero()], [NcPoly::zero(), s]];
    let omega = scalar(g("w"));
    let one = scalar(NcPoly::one());
    OmegaCheck {
        m_adj: prod(&m, &adj) == omega,
        adj_m: prod(&adj, &m) == omega,
        m_gamma: prod(&m, &gamma) == one,
        gamma_m: prod(&gamma, &m) == one,
        gamma_m_is_omega: prod(&gamma, &m) == omega,
    }
}

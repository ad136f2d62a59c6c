//! Finite-dimensional modules over the dual algebras: regular and weight
//! modules, the right regular action on the bialgebra, and decomposition
//! into irreducibles labelled by Casimir values.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::catalog;
use crate::duality::{pairing_columns, s03_prime, DualAlgebra, FiniteDimAlgebra};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Letter, NcPoly, Word};
use crate::linalg::Matrix;
use crate::scalars::{Field, Gauss};

/// Whether the generators act by left or by right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A module given by one matrix per acting generator, keyed by the generator alias.
#[derive(Clone, Debug)]
pub struct ModuleRep<F> {
    pub algebra: String,
    pub side: Side,
    pub labels: Vec<String>,
    pub gens: Vec<(String, Matrix<F>)>,
    /// Words of length `<= headroom[j]` act exactly on basis vector `j`.
    /// `None` when nothing was truncated.
    pub headroom: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<F: Field> ModuleRep<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn matrix(&self, name: &str) -> Option<&Matrix<F>> {
        self.gens.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
    pub fn is_truncated(&self) -> bool {
        self.headroom.is_some()
    }
    fn mats(&self) -> Vec<Matrix<F>> {
        self.gens.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Operator of a word in the generators, `None` if a letter has no matrix.
    pub fn word_matrix(&self, alphabet: &Alphabet, w: &Word) -> Option<Matrix<F>> {
        let mut m = Matrix::identity(self.dim());
        for &l in w.letters() {
            let g = self.matrix(alphabet.alias(l))?;
            m = match self.side {
                Side::Left => m.mul(g),
                Side::Right => g.mul(&m),
            };
        }
        Some(m)
    }

    pub fn eval(&self, alphabet: &Alphabet, p: &NcPoly<F>) -> Option<Matrix<F>> {
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in p.terms() {
            out = out.add(&self.word_matrix(alphabet, w)?.scale(c));
        }
        Some(out)
    }

    /// Columns on which a relation of degree `deg` can be compared exactly.
    fn exact_columns(&self, deg: usize) -> Vec<usize> {
        match &self.headroom {
            None => (0..self.dim()).collect(),
            Some(h) => (0..self.dim()).filter(|&j| h[j] >= deg).collect(),
        }
    }

    /// Substitutes the matrices into every relation whose letters all act.
    pub fn check_relations(&self, alphabet: &Alphabet, rels: &[NcPoly<F>]) -> RelationReport {
        let n = self.dim();
        let sparse: BTreeMap<&str, Vec<Vec<(usize, F)>>> = self
            .gens
            .iter()
            .map(|(g, m)| {
                let cols = (0..n).map(|j| (0..n).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect()).collect();
                (g.as_str(), cols)
            })
            .collect();
        let apply = |w: &Word, j: usize| -> Option<BTreeMap<usize, F>> {
            let mut v = BTreeMap::from([(j, F::one())]);
            let letters: Vec<Letter> = match self.side {
                Side::Left => w.letters().iter().rev().copied().collect(),
                Side::Right => w.letters().to_vec(),
            };
            for l in letters {
                let g = sparse.get(alphabet.alias(l))?;
                let mut next: BTreeMap<usize, F> = BTreeMap::new();
                for (k, c) in &v {
                    for (i, x) in &g[*k] {
                        let e = next.entry(*i).or_insert_with(F::zero);
                        *e = e.clone() + c.clone() * x.clone();
                    }
                }
                next.retain(|_, c| !c.is_zero());
                v = next;
            }
            Some(v)
        };
        let mut rep = RelationReport::default();
        'rel: for r in rels {
            if r.terms().any(|(w, _)| w.letters().iter().any(|&l| !sparse.contains_key(alphabet.alias(l)))) {
                rep.skipped += 1;
                continue;
            }
            rep.checked += 1;
            for j in self.exact_columns(r.degree().unwrap_or(0)) {
                let mut col: BTreeMap<usize, F> = BTreeMap::new();
                for (w, c) in r.terms() {
                    for (i, x) in apply(w, j).expect("letters checked") {
                        let e = col.entry(i).or_insert_with(F::zero);
                        *e = e.clone() + c.clone() * x;
                    }
                }
                if col.values().any(|c| !c.is_zero()) {
                    rep.failures.push(format!("{} = 0", r.display(alphabet)));
                    continue 'rel;
                }
            }
        }
        rep
    }

    /// The submodule spanned by the columns of `basis`.
    pub fn restrict(&self, basis: &[Vec<F>], labels: Vec<String>) -> Option<ModuleRep<F>> {
        let gens = self
            .gens
            .iter()
            .map(|(n, m)| m.restrict(basis).map(|r| (n.clone(), r)))
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleRep { algebra: self.algebra.clone(), side: self.side, labels, gens, headroom: None })
    }
}

fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect()
}

fn combine<F: Field>(basis: &[Vec<F>], coords: &[F]) -> Vec<F> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = vec![F::zero(); n];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c.clone() * x.clone();
        }
    }
    out
}

/// Longest exact word length per basis vector, from per-column exactness flags.
pub(crate) fn headroom<F: Field>(mats: &[Matrix<F>], exact: &[Vec<bool>]) -> Vec<usize> {
    let n = mats.first().map_or(0, |m| m.rows());
    let mut h = vec![usize::MAX; n];
    loop {
        let mut changed = false;
        for j in 0..n {
            let mut v = usize::MAX;
            for (m, ex) in mats.iter().zip(exact) {
                if !ex[j] {
                    v = 0;
                    break;
                }
                for i in 0..n {
                    if !m.get(i, j).is_zero() {
                        v = v.min(h[i].saturating_add(1));
                    }
                }
            }
            if v < h[j] {
                h[j] = v;
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}

/// Row-echelon span with pivots on the first nonzero coordinate.
#[derive(Clone, Debug)]
struct Echelon<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }
    fn len(&self) -> usize {
        self.rows.len()
    }
    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        v
    }
    fn insert(&mut self, v: &[F]) -> Option<Vec<F>> {
        let v = self.reduce(v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inv().unwrap();
        let v: Vec<F> = v.into_iter().map(|x| x * inv.clone()).collect();
        self.rows.push((p, v.clone()));
        Some(v)
    }
    fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
    fn vectors(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// The submodule generated by `v`.
fn closure<F: Field>(mats: &[Matrix<F>], v: &[F]) -> Vec<Vec<F>> {
    let mut ech = Echelon::new();
    let mut queue = Vec::new();
    if let Some(r) = ech.insert(v) {
        queue.push(r);
    }
    while let Some(x) = queue.pop() {
        for m in mats {
            if let Some(r) = ech.insert(&m.mul_vec(&x)) {
                queue.push(r);
            }
        }
    }
    ech.vectors()
}

/// The matrices generate the full matrix algebra.
pub(crate) fn burnside<F: Field>(mats: &[Matrix<F>]) -> bool {
    let d = mats.first().map_or(1, |m| m.rows());
    let flat = |m: &Matrix<F>| -> Vec<F> { (0..d * d).map(|k| m.get(k / d, k % d).clone()).collect() };
    let mut ech = Echelon::new();
    let id = Matrix::identity(d);
    ech.insert(&flat(&id));
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for m in mats {
            let y = m.mul(&x);
            if ech.insert(&flat(&y)).is_some() {
                queue.push(y);
            }
        }
    }
    ech.len() == d * d
}

/// Gaussian integers `0, ±k, ±ki` up to a Gershgorin bound on the spectrum.
fn eigen_candidates<F: Field>(m: &Matrix<F>) -> Result<Vec<F>> {
    let mut bound = 0i64;
    for i in 0..m.rows() {
        let mut s = num_rational::BigRational::from_integer(0.into());
        for j in 0..m.cols() {
            let g = m
                .get(i, j)
                .to_gauss()
                .ok_or_else(|| Error::Unsupported("matrix entries depend on q".into()))?;
            s = s + g.re.abs() + g.im.abs();
        }
        bound = bound.max(s.ceil().to_integer().to_i64().unwrap_or(i64::MAX));
    }
    let mut out = vec![F::zero()];
    for k in 1..=bound {
        let r = F::from_i64(k);
        let i = F::from_gauss(&Gauss::from_pair(0, k));
        out.extend([r.clone(), -r, i.clone(), -i]);
    }
    Ok(out)
}

/// Eigenspaces for the eigenvalues among the candidates, in candidate order.
fn eigenspaces<F: Field>(m: &Matrix<F>) -> Result<Vec<(F, Vec<Vec<F>>)>> {
    let n = m.rows();
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || m.get(i, j).is_zero()));
    let mut out = Vec::new();
    let mut total = 0;
    for lam in eigen_candidates(m)? {
        if total == n {
            break;
        }
        let k = if diagonal {
            (0..n).filter(|&i| *m.get(i, i) == lam).map(|i| unit_vector(n, i)).collect()
        } else {
            m.sub(&Matrix::scalar(n, lam.clone())).nullspace()
        };
        if !k.is_empty() {
            total += k.len();
            out.push((lam, k));
        }
    }
    Ok(out)
}

fn is_scalar<F: Field>(m: &Matrix<F>) -> Option<F> {
    let n = m.rows();
    if n == 0 {
        return Some(F::zero());
    }
    let c = m.get(0, 0).clone();
    (*m == Matrix::scalar(n, c.clone())).then_some(c)
}

/// A smallest proper submodule reachable from eigenvectors of simple operators.
fn proper_submodule<F: Field>(mats: &[Matrix<F>]) -> Result<Option<Vec<Vec<F>>>> {
    let d = mats.first().map_or(0, |m| m.rows());
    if mats.is_empty() {
        return Ok(Some(vec![unit_vector(d.max(1), 0)]));
    }
    let mut ops: Vec<Matrix<F>> = mats.to_vec();
    for a in mats {
        for b in mats {
            ops.push(a.mul(b));
        }
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            ops.push(mats[i].add(&mats[j]));
        }
    }
    let mut best: Option<Vec<Vec<F>>> = None;
    for op in &ops {
        if is_scalar(op).is_some() {
            continue;
        }
        for (_, space) in eigenspaces(op)? {
            for v in &space {
                let s = closure(mats, v);
                if s.len() < d && best.as_ref().is_none_or(|b| s.len() < b.len()) {
                    if s.len() == 1 {
                        return Ok(Some(s));
                    }
                    best = Some(s);
                }
            }
        }
    }
    Ok(best)
}

/// Basis of an irreducible submodule, certified by Burnside's theorem.
fn find_irreducible<F: Field>(mats: &[Matrix<F>], n: usize) -> Result<Vec<Vec<F>>> {
    let mut cur: Vec<Vec<F>> = (0..n).map(|i| unit_vector(n, i)).collect();
    loop {
        if cur.len() == 1 {
            return Ok(cur);
        }
        let local: Vec<Matrix<F>> = mats.iter().map(|m| m.restrict(&cur).expect("invariant subspace")).collect();
        match proper_submodule(&local)? {
            Some(sub) => cur = sub.iter().map(|v| combine(&cur, v)).collect(),
            None if burnside(&local) => return Ok(cur),
            None => {
                return Err(Unsupported(format!(
                    "no invariant subspace found in a reducible {}-dimensional piece",
                    cur.len()
                )))
            }
        }
    }
}

use Error::Unsupported;

/// Value of a Casimir on an irreducible piece.
#[derive(Clone, Debug, PartialEq)]
pub enum Casimir<F> {
    Value(F),
    /// Not fixed by the relations.
    Free,
}

impl<F: Field> fmt::Display for Casimir<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Casimir::Value(v) => write!(f, "{v}"),
            Casimir::Free => write!(f, "free"),
        }
    }
}

/// Dimension, Casimir values `(Ã, B̃², D̃²)` and discrete labels of an irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrepDescriptor<F> {
    pub dim: usize,
    pub casimirs: [Casimir<F>; 3],
    pub labels: Vec<(String, F)>,
}

impl<F: Field> IrrepDescriptor<F> {
    pub fn is_trivial(&self) -> bool {
        self.dim == 1 && self.casimirs[1..].iter().all(|c| matches!(c, Casimir::Value(v) if v.is_zero())) && self.labels.is_empty()
    }
    pub fn label(&self, name: &str) -> Option<&F> {
        self.labels.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

fn fmt_sign<F: Field>(v: &F) -> String {
    if *v == F::one() {
        "+".into()
    } else if *v == -F::one() {
        "-".into()
    } else {
        v.to_string()
    }
}

impl<F: Field> fmt::Display for IrrepDescriptor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, d] = &self.casimirs;
        write!(f, "dim {}: Ã = {a}, B̃² = {b}, D̃² = {d}", self.dim)?;
        for (n, v) in &self.labels {
            match n.as_str() {
                "ε" | "ε′" | "sign" => write!(f, ", {n} = {}", fmt_sign(v))?,
                _ => write!(f, ", {n} = {v}")?,
            }
        }
        Ok(())
    }
}

/// Alphabet and verified relations of a dual algebra.
#[derive(Clone, Debug)]
pub struct RepContext<F> {
    pub alphabet: Alphabet,
    pub relations: Vec<NcPoly<F>>,
}

impl<F: Field> RepContext<F> {
    pub fn new(dual: &DualAlgebra<F>) -> Result<Self> {
        let mut relations = Vec::new();
        if let Some(cat) = catalog::catalog(&dual.name) {
            for case in cat.relations {
                relations.extend(dual.parse_relations(case.text)?);
            }
        }
        Ok(RepContext { alphabet: dual.alphabet.clone(), relations })
    }

    /// Value of a central letter without a matrix, as forced by the relations
    /// in which it occurs.
    fn extend_scalar(&self, m: &ModuleRep<F>, letter: Letter) -> Result<Casimir<F>> {
        let mut lin: Vec<(F, F)> = Vec::new();
        let mut higher: Vec<BTreeMap<usize, Matrix<F>>> = Vec::new();
        'rel: for r in &self.relations {
            if r.terms().all(|(w, _)| w.count(letter) == 0) {
                continue;
            }
            let mut by_pow: BTreeMap<usize, Matrix<F>> = BTreeMap::new();
            for (w, c) in r.terms() {
                let rest: Vec<Letter> = w.letters().iter().copied().filter(|&l| l != letter).collect();
                let Some(mw) = m.word_matrix(&self.alphabet, &Word::from_slice(&rest)) else {
                    continue 'rel;
                };
                let e = by_pow.entry(w.count(letter)).or_insert_with(|| Matrix::zeros(m.dim(), m.dim()));
                *e = e.add(&mw.scale(c));
            }
            let cols = m.exact_columns(r.degree().unwrap_or(0));
            if by_pow.keys().all(|&k| k <= 1) {
                let z = Matrix::zeros(m.dim(), m.dim());
                let m0 = by_pow.get(&0).unwrap_or(&z);
                let m1 = by_pow.get(&1).unwrap_or(&z);
                for &j in &cols {
                    for i in 0..m.dim() {
                        lin.push((m1.get(i, j).clone(), m0.get(i, j).clone()));
                    }
                }
            } else {
                higher.push(by_pow);
            }
        }
        let holds = |mu: &F| {
            lin.iter().all(|(a, b)| (a.clone() * mu.clone() + b.clone()).is_zero())
                && higher.iter().all(|bp| {
                    let mut t = Matrix::zeros(m.dim(), m.dim());
                    for (k, mk) in bp {
                        t = t.add(&mk.scale(&mu.pow(*k as u32)));
                    }
                    t.is_zero()
                })
        };
        match lin.iter().find(|(a, _)| !a.is_zero()) {
            Some((a, b)) => {
                let mu = -b.clone() * a.inv().unwrap();
                if holds(&mu) {
                    Ok(Casimir::Value(mu))
                } else {
                    Err(Error::Inconsistent(format!("no value of {} is compatible", self.alphabet.name(letter))))
                }
            }
            None if lin.iter().all(|(_, b)| b.is_zero()) => Ok(Casimir::Free),
            None => Err(Error::Inconsistent(format!("relations with {} fail", self.alphabet.name(letter)))),
        }
    }

    /// Casimirs and labels of an irreducible module.
    pub fn describe(&self, m: &ModuleRep<F>) -> Result<IrrepDescriptor<F>> {
        let scalar = |x: &Matrix<F>, what: &str| -> Result<Casimir<F>> {
            is_scalar(x)
                .map(Casimir::Value)
                .ok_or_else(|| Error::Inconsistent(format!("{what} is not a scalar on an irreducible piece")))
        };
        let a = match (m.matrix("A"), self.alphabet.lookup("A")) {
            (Some(x), _) => scalar(x, "Ã")?,
            (None, Some(l)) => self.extend_scalar(m, l)?,
            (None, None) => Casimir::Free,
        };
        let sq = |g: &str, what: &str| -> Result<Casimir<F>> {
            match m.matrix(g) {
                Some(x) => scalar(&x.mul(x), what),
                None => Ok(Casimir::Free),
            }
        };
        let casimirs = [a, sq("B", "B̃²")?, sq("D", "D̃²")?];
        Ok(IrrepDescriptor { dim: m.dim(), casimirs, labels: character_labels(m) })
    }
}

/// Labels of a one-dimensional module: `ε, ε′` when `B̃ = ±1`, otherwise `τ` and a sign from `D̃`.
fn character_labels<F: Field>(m: &ModuleRep<F>) -> Vec<(String, F)> {
    if m.dim() != 1 {
        return Vec::new();
    }
    let v = |g: &str| m.matrix(g).map(|x| x.get(0, 0).clone());
    let one = F::one();
    let i = F::imag_unit();
    let unit = |x: &F| *x == one || *x == -one.clone();
    let mut out = Vec::new();
    match v("B") {
        Some(b) if unit(&b) => {
            out.push(("ε".to_string(), b));
            match (v("C"), v("D")) {
                (Some(c), _) if c == i || c == -i.clone() => out.push(("ε′".to_string(), -i.clone() * c)),
                (_, Some(d)) if unit(&d) => out.push(("ε′".to_string(), d)),
                _ => {}
            }
        }
        _ => {
            if let Some(d) = v("D").filter(|d| !d.is_zero()) {
                match d.to_gauss() {
                    Some(g) if g.is_real() => {
                        let s = if g.re.is_negative() { -one.clone() } else { one.clone() };
                        out.push(("τ".to_string(), d.clone() * s.clone()));
                        out.push(("sign".to_string(), s));
                    }
                    _ => out.push(("λ".to_string(), d)),
                }
            }
        }
    }
    out
}

/// An irreducible subquotient with a basis of representatives in the ambient module.
#[derive(Clone, Debug)]
pub struct Factor<F> {
    pub descriptor: IrrepDescriptor<F>,
    pub witness: Vec<Vec<F>>,
    pub module: ModuleRep<F>,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub factors: Vec<Factor<F>>,
    /// Isomorphism classes, as indices into `factors`.
    pub classes: Vec<Vec<usize>>,
    /// The module is the direct sum of the factors.
    pub direct_sum: bool,
    /// The module is a truncation of an infinite-dimensional one; the last
    /// trivial factors stand for a tail that repeats indefinitely.
    pub truncated: bool,
}

impl<F: Field> Decomposition<F> {
    /// Distinct irreducibles with the number of factors in each class.
    pub fn summary(&self) -> Vec<(&IrrepDescriptor<F>, usize)> {
        self.classes.iter().map(|c| (&self.factors[c[0]].descriptor, c.len())).collect()
    }
    /// Number of factors satisfying `pred`.
    pub fn count(&self, pred: impl Fn(&IrrepDescriptor<F>) -> bool) -> usize {
        self.factors.iter().filter(|f| pred(&f.descriptor)).count()
    }
}

/// An invertible `T` with `T a_g = b_g T` for every generator.
pub fn intertwiner<F: Field>(a: &ModuleRep<F>, b: &ModuleRep<F>) -> Option<Matrix<F>> {
    let d = a.dim();
    if d != b.dim() || a.gens.len() != b.gens.len() {
        return None;
    }
    let mut sys = Matrix::zeros(a.gens.len() * d * d, d * d);
    for (g, ((na, ma), (nb, mb))) in a.gens.iter().zip(&b.gens).enumerate() {
        if na != nb {
            return None;
        }
        for i in 0..d {
            for k in 0..d {
                let row = g * d * d + i * d + k;
                for j in 0..d {
                    sys.add_at(row, i * d + j, ma.get(j, k).clone());
                    sys.add_at(row, j * d + k, -mb.get(i, j).clone());
                }
            }
        }
    }
    let ns = sys.nullspace();
    let to_m = |v: &[F]| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone());
    let mut cands: Vec<Matrix<F>> = ns.iter().map(|v| to_m(v)).collect();
    if ns.len() > 1 {
        let sum = ns.iter().fold(vec![F::zero(); d * d], |acc, v| acc.iter().zip(v).map(|(x, y)| x.clone() + y.clone()).collect());
        cands.push(to_m(&sum));
    }
    cands.into_iter().find(|t| !t.det().is_zero())
}

fn classify<F: Field>(factors: &[Factor<F>]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let hit = classes.iter_mut().find(|c| {
            let r = &factors[c[0]];
            r.descriptor == f.descriptor && (f.descriptor.dim == 1 || intertwiner(&r.module, &f.module).is_some())
        });
        match hit {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Joint eigenspaces of commuting diagonalizable generators.
fn joint_split<F: Field>(mats: &[Matrix<F>], n: usize) -> Result<Option<Vec<(Vec<F>, Vec<Vec<F>>)>>> {
    for a in mats {
        for b in mats {
            if !a.commutator(b).is_zero() {
                return Ok(None);
            }
        }
    }
    let mut spaces: Vec<(Vec<F>, Vec<Vec<F>>)> = vec![(Vec::new(), (0..n).map(|i| unit_vector(n, i)).collect())];
    for m in mats {
        let mut next = Vec::new();
        for (vals, basis) in spaces {
            let local = m.restrict(&basis).expect("commuting operators preserve eigenspaces");
            let es = eigenspaces(&local)?;
            if es.iter().map(|(_, v)| v.len()).sum::<usize>() != basis.len() {
                return Ok(None);
            }
            for (lam, vecs) in es {
                let mut vs = vals.clone();
                vs.push(lam);
                next.push((vs, vecs.iter().map(|v| combine(&basis, v)).collect()));
            }
        }
        spaces = next;
    }
    Ok(Some(spaces))
}

/// Decomposes a module into irreducible factors, identifying isomorphic ones.
pub fn decompose<F: Field>(m: &ModuleRep<F>, ctx: &RepContext<F>) -> Result<Decomposition<F>> {
    let n = m.dim();
    let truncated = m.is_truncated();
    let names: Vec<String> = m.gens.iter().map(|(g, _)| g.clone()).collect();
    let one_dim = |vals: &[F], witness: Vec<F>, k: usize| -> Result<Factor<F>> {
        let module = ModuleRep {
            algebra: m.algebra.clone(),
            side: m.side,
            labels: vec![format!("w{k}")],
            gens: names.iter().cloned().zip(vals.iter().map(|v| Matrix::scalar(1, v.clone()))).collect(),
            headroom: None,
        };
        Ok(Factor { descriptor: ctx.describe(&module)?, witness: vec![witness], module })
    };
    let mats = m.mats();
    if n > 0 && !m.is_truncated() {
        if let Some(spaces) = joint_split(&mats, n)? {
            let mut factors = Vec::new();
            for (vals, basis) in spaces {
                for v in basis {
                    let k = factors.len();
                    factors.push(one_dim(&vals, v, k)?);
                }
            }
            let classes = classify(&factors);
            return Ok(Decomposition { factors, classes, direct_sum: true, truncated });
        }
    }
    let mut factors = Vec::new();
    let mut mats = mats;
    let mut reps: Vec<Vec<F>> = (0..n).map(|i| unit_vector(n, i)).collect();
    while !reps.is_empty() {
        let d = reps.len();
        let sub = find_irreducible(&mats, d)?;
        let local: Vec<Matrix<F>> = mats.iter().map(|x| x.restrict(&sub).expect("invariant")).collect();
        let k = factors.len();
        let module = ModuleRep {
            algebra: m.algebra.clone(),
            side: m.side,
            labels: (0..sub.len()).map(|i| format!("w{k}.{i}")).collect(),
            gens: names.iter().cloned().zip(local).collect(),
            headroom: None,
        };
        let witness = sub.iter().map(|v| combine(&reps, v)).collect();
        factors.push(Factor { descriptor: ctx.describe(&module)?, witness, module });
        let mut ech = Echelon::new();
        for v in &sub {
            ech.insert(v);
        }
        let piv = ech.pivots();
        let q: Vec<usize> = (0..d).filter(|i| !piv.contains(i)).collect();
        mats = mats
            .iter()
            .map(|x| {
                let cols: Vec<Vec<F>> = q
                    .iter()
                    .map(|&j| {
                        let r = ech.reduce(&x.col(j));
                        q.iter().map(|&i| r[i].clone()).collect()
                    })
                    .collect();
                Matrix::from_cols(&cols, q.len())
            })
            .collect();
        reps = q.iter().map(|&i| reps[i].clone()).collect();
    }
    let classes = classify(&factors);
    Ok(Decomposition { factors, classes, direct_sum: false, truncated })
}

/// Left and right multiplication by generators on a spanning set of dual elements.
#[derive(Clone, Debug)]
pub struct RegularAlgebra<F> {
    pub name: String,
    pub labels: Vec<String>,
    pub basis: Vec<NcPoly<F>>,
    pub gens: Vec<String>,
    pub left: Vec<Matrix<F>>,
    pub right: Vec<Matrix<F>>,
    /// `left_exact[g][j]`: the product `g b_j` lies in the span.
    pub left_exact: Vec<Vec<bool>>,
    pub right_exact: Vec<Vec<bool>>,
    pub truncation: Option<usize>,
}

impl<F: Field> RegularAlgebra<F> {
    pub fn from_finite(alg: &FiniteDimAlgebra<F>, alphabet: &Alphabet, gens: &[&str]) -> Result<Self> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for g in gens {
            let i = alg.index(g).ok_or_else(|| Error::Unknown(g.to_string()))?;
            let x = alg.coords_of_basis(i);
            left.push(alg.left_mul(&x));
            right.push(alg.right_mul(&x));
        }
        let exact = vec![vec![true; alg.dim()]; gens.len()];
        Ok(RegularAlgebra {
            name: alg.name.clone(),
            labels: alg.basis.iter().map(|b| b.display(alphabet).to_string()).collect(),
            basis: alg.basis.clone(),
            gens: gens.iter().map(|s| s.to_string()).collect(),
            left,
            right,
            left_exact: exact.clone(),
            right_exact: exact,
            truncation: None,
        })
    }

    /// Products with generators solved from pairings; a nonzero component along
    /// an `overflow` element marks the product as truncated.
    pub fn from_pairings(
        dual: &DualAlgebra<F>,
        name: &str,
        words: &[String],
        overflow: &[String],
        gens: &[&str],
        maxdeg: usize,
    ) -> Result<Self> {
        let basis: Vec<NcPoly<F>> = words.iter().map(|w| dual.parse(w)).collect::<Result<_>>()?;
        let mut all = basis.clone();
        for w in overflow {
            all.push(dual.parse(w)?);
        }
        let n = basis.len();
        let p = pairing_columns(dual, &all, maxdeg);
        if p.rank() != all.len() {
            return Err(Error::Inconsistent(format!("{name}: spanning set is dependent up to degree {maxdeg}")));
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut left_exact = Vec::new();
        let mut right_exact = Vec::new();
        for g in gens {
            let gp = dual.parse(g)?;
            for (mats, exact, is_left) in [(&mut left, &mut left_exact, true), (&mut right, &mut right_exact, false)] {
                let mut cols = Vec::with_capacity(n);
                let mut ex = Vec::with_capacity(n);
                for (j, b) in basis.iter().enumerate() {
                    let prod = if is_left { gp.mul(b) } else { b.mul(&gp) };
                    let x = p.solve(&dual.pairing_vector(&prod, maxdeg)).ok_or_else(|| {
                        Error::Inconsistent(format!("{name}: {} times {} leaves the span", g, words[j]))
                    })?;
                    ex.push(x[n..].iter().all(|c| c.is_zero()));
                    cols.push(x[..n].to_vec());
                }
                mats.push(Matrix::from_cols(&cols, n));
                exact.push(ex);
            }
        }
        Ok(RegularAlgebra {
            name: name.to_string(),
            labels: basis.iter().map(|b| b.display(&dual.alphabet).to_string()).collect(),
            basis,
            gens: gens.iter().map(|s| s.to_string()).collect(),
            left,
            right,
            left_exact,
            right_exact,
            truncation: if overflow.is_empty() { None } else { Some(words.len()) },
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    /// Coordinates of a combination of basis elements given as text.
    pub fn coords(&self, dual: &DualAlgebra<F>, text: &str) -> Result<Vec<F>> {
        let p = dual.parse(text)?;
        let mut out = vec![F::zero(); self.dim()];
        for (w, c) in p.terms() {
            let i = self
                .basis
                .iter()
                .position(|b| *b == NcPoly::from_word(w.clone()))
                .ok_or_else(|| Error::Unknown(dual.alphabet.fmt_word(w)))?;
            out[i] += c.clone();
        }
        Ok(out)
    }
    fn gen_index(&self, g: &str) -> Result<usize> {
        self.gens.iter().position(|x| x == g).ok_or_else(|| Error::Unknown(g.to_string()))
    }
    fn module(&self, side: Side) -> ModuleRep<F> {
        let (mats, exact) = match side {
            Side::Left => (&self.left, &self.left_exact),
            Side::Right => (&self.right, &self.right_exact),
        };
        let truncated = exact.iter().any(|e| e.iter().any(|x| !x));
        ModuleRep {
            algebra: self.name.clone(),
            side,
            labels: self.labels.clone(),
            gens: self.gens.iter().cloned().zip(mats.iter().cloned()).collect(),
            headroom: truncated.then(|| headroom(mats, exact)),
        }
    }
}

/// The nine-dimensional `s03′` with generators `B̃, C̃, D̃`.
pub fn s03_prime_regular<F: Field>(dual: &DualAlgebra<F>) -> Result<RegularAlgebra<F>> {
    RegularAlgebra::from_finite(&s03_prime(dual)?, &dual.alphabet, &["B", "C", "D"])
}

/// `s14′` generated by `B̃, D̃`, spanned by `B̃, B̃², D̃B̃, D̃B̃²` and `D̃^ℓ` for `ℓ <= l`.
pub fn s14_prime_regular<F: Field>(dual: &DualAlgebra<F>, l: usize) -> Result<RegularAlgebra<F>> {
    if l < 2 {
        return Err(Error::Invalid(format!("truncation level {l} is below 2")));
    }
    let mut words: Vec<String> = ["1", "B", "D", "B^2", "D B", "D^2", "D B^2"].iter().map(|s| s.to_string()).collect();
    words.extend((3..=l).map(|k| format!("D^{k}")));
    let overflow = vec![format!("D^{}", l + 1)];
    let mut last = None;
    for maxdeg in l + 1..=l + 4 {
        match RegularAlgebra::from_pairings(dual, "s14'", &words, &overflow, &["B", "D"], maxdeg) {
            Ok(r) => {
                return Ok(RegularAlgebra { truncation: Some(l), ..r });
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

pub fn left_regular<F: Field>(reg: &RegularAlgebra<F>) -> ModuleRep<F> {
    reg.module(Side::Left)
}

pub fn right_regular<F: Field>(reg: &RegularAlgebra<F>) -> ModuleRep<F> {
    reg.module(Side::Right)
}

/// The cyclic module `F / F(x - λ)` generated by a weight vector `v₀` with `x v₀ = λ v₀`.
pub fn weight_module<F: Field>(reg: &RegularAlgebra<F>, ctx: &RepContext<F>, x: &str, lambda: &F) -> Result<ModuleRep<F>> {
    let xl = ctx.alphabet.lookup(x).ok_or_else(|| Error::Unknown(x.to_string()))?;
    for r in &ctx.relations {
        if r.is_zero() || !r.terms().all(|(w, _)| w.letters().iter().all(|&l| l == xl)) {
            continue;
        }
        let mut v = F::zero();
        for (w, c) in r.terms() {
            v += c.clone() * lambda.pow(w.len() as u32);
        }
        if !v.is_zero() {
            return Err(Error::Inadmissible(format!(
                "{} = 0 fails for {} = {}",
                r.display(&ctx.alphabet),
                ctx.alphabet.name(xl),
                lambda
            )));
        }
    }
    let xi = reg.gen_index(x)?;
    let n = reg.dim();
    // Pivots on the largest index leave the lowest elements as the quotient basis.
    let rev = |v: &[F]| -> Vec<F> { v.iter().rev().cloned().collect() };
    let mut ech = Echelon::new();
    for j in 0..n {
        if reg.right_exact[xi][j] {
            let mut col = reg.right[xi].col(j);
            col[j] -= lambda.clone();
            ech.insert(&rev(&col));
        }
    }
    let piv: Vec<usize> = ech.pivots().iter().map(|p| n - 1 - p).collect();
    let q: Vec<usize> = (0..n).filter(|i| !piv.contains(i)).collect();
    if q.is_empty() {
        return Err(Error::Inadmissible(format!("the module generated by v₀ with {x} = {lambda} is zero")));
    }
    let mut mats = Vec::new();
    let mut exact = Vec::new();
    for (g, m) in reg.left.iter().enumerate() {
        let cols: Vec<Vec<F>> = q
            .iter()
            .map(|&j| {
                let r = rev(&ech.reduce(&rev(&m.col(j))));
                q.iter().map(|&i| r[i].clone()).collect()
            })
            .collect();
        mats.push(Matrix::from_cols(&cols, q.len()));
        exact.push(q.iter().map(|&j| reg.left_exact[g][j]).collect::<Vec<bool>>());
    }
    let truncated = exact.iter().any(|e| e.iter().any(|b| !b));
    let labels = q
        .iter()
        .map(|&i| if reg.labels[i] == "1" { "v₀".to_string() } else { format!("{} v₀", reg.labels[i]) })
        .collect();
    Ok(ModuleRep {
        algebra: reg.name.clone(),
        side: Side::Left,
        labels,
        headroom: truncated.then(|| headroom(&mats, &exact)),
        gens: reg.gens.iter().cloned().zip(mats).collect(),
    })
}

/// `π_R(Z) f = f₍₁₎ ⟨Z, f₍₂₎⟩`.
pub fn right_regular_action<F: Field>(dual: &DualAlgebra<F>, z: &NcPoly<F>, f: &NcPoly<F>) -> NcPoly<F> {
    let f = dual.algebra.nf(f);
    let mut by_degree: BTreeMap<usize, Vec<(Word, F)>> = BTreeMap::new();
    for (w, c) in f.terms() {
        by_degree.entry(w.len()).or_default().push((w.clone(), c.clone()));
    }
    let mut out = NcPoly::zero();
    for (n, terms) in by_degree {
        let grade = dual.grade(n);
        let mut v = vec![F::zero(); grade.len()];
        for (w, c) in terms {
            v[grade.index(&w).expect("normal form")] += c;
        }
        let img = dual.action_matrix(z, n).mul_vec(&v);
        for (i, c) in img.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_term(grade.words[i].clone(), c);
            }
        }
    }
    out
}

/// The degree-`n` piece of the bialgebra under `π_R` of the given generators.
pub fn pi_r_module<F: Field>(dual: &DualAlgebra<F>, n: usize, gens: &[&str]) -> ModuleRep<F> {
    let grade = dual.grade(n);
    ModuleRep {
        algebra: dual.name.clone(),
        side: Side::Left,
        labels: grade.words.iter().map(|w| dual.algebra.alphabet.fmt_word(w)).collect(),
        gens: gens.iter().map(|g| (g.to_string(), dual.action_matrix(&dual.gen(g), n))).collect(),
        headroom: None,
    }
}

/// Generators acting through `π_R` in the degree-space analysis.
pub fn pi_r_generators(name: &str) -> &'static [&'static str] {
    match name {
        "s03" => &["A", "B", "C", "D"],
        "s14" => &["A", "B", "D"],
        _ => &["A", "B", "K", "Xp", "Xm"],
    }
}

#[derive(Clone, Debug)]
pub struct DegreeSpace<F> {
    pub degree: usize,
    pub module: ModuleRep<F>,
    pub decomposition: Decomposition<F>,
}

pub fn degree_space_decomposition<F: Field>(dual: &DualAlgebra<F>, ctx: &RepContext<F>, n: usize) -> Result<DegreeSpace<F>> {
    let module = pi_r_module(dual, n, pi_r_generators(&dual.name));
    let decomposition = decompose(&module, ctx)?;
    Ok(DegreeSpace { degree: n, module, decomposition })
}

/// Spectrum of `π_R(D̃)` on one half of a degree-`N` space of `S14`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpectrum {
    pub letters: String,
    pub dim: usize,
    pub spectrum: BTreeMap<i64, usize>,
}

impl HalfSpectrum {
    /// `{0, ±2, …, ±N}` for even `N`, `{±1, ±3, …, ±N}` for odd `N`, each once.
    pub fn expected(n: usize) -> BTreeMap<i64, usize> {
        let n = n as i64;
        let mut out = BTreeMap::new();
        let mut t = n;
        while t > 0 {
            out.insert(t, 1);
            out.insert(-t, 1);
            t -= 2;
        }
        if n % 2 == 0 {
            out.insert(0, 1);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct S14DegreeReport<F> {
    pub degree: usize,
    pub halves: Vec<HalfSpectrum>,
    /// Kernel of `π_R(D̃)` on the `ã, d̃` half.
    pub kernel: Vec<Vec<F>>,
    /// The kernel is spanned by `Σ C(n,k) ã^{2n-2k} d̃^{2k}` (even degree only).
    pub binomial_kernel: Option<bool>,
    /// Normalized eigenvector coefficients `(τ, α, β)` on the `ã, d̃` half.
    pub eigen_coefficients: Vec<(i64, Vec<F>, Vec<F>)>,
    /// The coefficients satisfy the two-term recursions and `u₀ ∓ τu₁` spans the `∓τ` eigenspace.
    pub recursions: bool,
}

impl<F: Field> S14DegreeReport<F> {
    pub fn passed(&self) -> bool {
        self.halves.iter().all(|h| h.spectrum == HalfSpectrum::expected(self.degree))
            && self.binomial_kernel != Some(false)
            && self.recursions
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn s14_degree_report<F: Field>(dual: &DualAlgebra<F>, n: usize) -> Result<S14DegreeReport<F>> {
    let grade = dual.grade(n);
    let alpha = &dual.algebra.alphabet;
    let (at, bt, ct, dt) = (alpha.letter("at"), alpha.letter("bt"), alpha.letter("ct"), alpha.letter("dt"));
    let d = dual.action_matrix(&dual.gen("D"), n);
    let mut halves = Vec::new();
    let mut ad_basis = Vec::new();
    for (name, set) in [("ã, d̃", [at, dt]), ("b̃, c̃", [bt, ct])] {
        let idx: Vec<usize> =
            (0..grade.len()).filter(|&i| grade.words[i].letters().iter().all(|l| set.contains(l))).collect();
        let basis: Vec<Vec<F>> = idx.iter().map(|&i| unit_vector(grade.len(), i)).collect();
        let local = d
            .restrict(&basis)
            .ok_or_else(|| Error::Inconsistent(format!("the {name} half is not invariant")))?;
        let mut spectrum = BTreeMap::new();
        for (lam, vecs) in eigenspaces(&local)? {
            let t = lam
                .to_gauss()
                .and_then(|g| g.to_i64())
                .ok_or_else(|| Error::Unsupported(format!("eigenvalue {lam}")))?;
            spectrum.insert(t, vecs.len());
        }
        halves.push(HalfSpectrum { letters: name.to_string(), dim: idx.len(), spectrum });
        if ad_basis.is_empty() {
            ad_basis = basis;
        }
    }
    let coord = |a: usize, b: usize| -> Result<(usize, F)> {
        let p = dual.algebra.nf(&dual.algebra.parse(&format!("at^{a} dt^{b}"))?);
        let (w, c) = p.terms().next().ok_or_else(|| Error::Inconsistent("vanishing monomial".into()))?;
        Ok((grade.index(w).unwrap(), c.clone()))
    };
    let kernel = d.nullspace();
    let m = n / 2;
    let binomial_kernel = if n % 2 == 0 {
        let mut w0 = vec![F::zero(); grade.len()];
        for k in 0..=m {
            let (i, c) = coord(2 * m - 2 * k, 2 * k)?;
            w0[i] += c * F::from_i64(binomial(m, k));
        }
        let ad_kernel: Vec<Vec<F>> = kernel
            .iter()
            .filter(|v| (0..grade.len()).all(|i| v[i].is_zero() || ad_basis.iter().any(|b| !b[i].is_zero())))
            .cloned()
            .collect();
        let mut stacked = ad_kernel.clone();
        stacked.push(w0);
        Some(ad_kernel.len() == 1 && Matrix::from_rows(stacked).rank() == 1)
    } else {
        None
    };
    // Even: u₀ = Σ α_k ã^{2m-2k} d̃^{2k}, u₁ = Σ β_k ã^{2m-2k-1} d̃^{2k+1}.
    // Odd:  u₀ = Σ α_k ã^{2m-2k+1} d̃^{2k}, u₁ = Σ β_k ã^{2m-2k} d̃^{2k+1}.
    let even = n % 2 == 0;
    let (na, nb) = if even { (m + 1, m) } else { (m + 1, m + 1) };
    let a_mono = |k: usize| if even { (2 * m - 2 * k, 2 * k) } else { (2 * m - 2 * k + 1, 2 * k) };
    let b_mono = |k: usize| if even { (2 * m - 2 * k - 1, 2 * k + 1) } else { (2 * m - 2 * k, 2 * k + 1) };
    let mut eigen_coefficients = Vec::new();
    let mut recursions = true;
    let mut taus: Vec<i64> = Vec::new();
    let mut t = n as i64;
    while t > 0 {
        taus.push(t);
        t -= 2;
    }
    taus.reverse();
    for tau in taus {
        let tf = F::from_i64(tau);
        let shifted = d.sub(&Matrix::scalar(grade.len(), tf.clone()));
        let sp: Vec<Vec<F>> = shifted
            .nullspace()
            .into_iter()
            .filter(|v| (0..grade.len()).all(|i| v[i].is_zero() || ad_basis.iter().any(|b| !b[i].is_zero())))
            .collect();
        if sp.len() != 1 {
            recursions = false;
            continue;
        }
        let v = &sp[0];
        let mut al = Vec::new();
        for k in 0..na {
            let (a, b) = a_mono(k);
            let (i, c) = coord(a, b)?;
            al.push(v[i].clone() * c.inv().unwrap());
        }
        let mut be = Vec::new();
        for k in 0..nb {
            let (a, b) = b_mono(k);
            let (i, c) = coord(a, b)?;
            be.push(v[i].clone() * c.inv().unwrap());
        }
        let Some(s) = al[0].inv() else {
            recursions = false;
            continue;
        };
        let al: Vec<F> = al.into_iter().map(|x| x * s.clone()).collect();
        let tinv = tf.inv().unwrap();
        let be: Vec<F> = be.into_iter().map(|x| x * s.clone() * tinv.clone()).collect();
        let t2 = tf.clone() * tf.clone();
        let ai = |k: isize| if k < 0 || k as usize >= na { F::zero() } else { al[k as usize].clone() };
        let bi = |k: isize| if k < 0 || k as usize >= nb { F::zero() } else { be[k as usize].clone() };
        let fi = |x: i64| F::from_i64(x);
        let mi = m as i64;
        let mut ok = be.first().is_none_or(|b0| *b0 == F::one());
        if even {
            for k in 0..m as isize {
                let kk = k as i64;
                ok &= t2.clone() * bi(k) == fi(2 * (mi - kk)) * ai(k) - fi(2 * (kk + 1)) * ai(k + 1);
            }
            for k in 0..=m as isize {
                let kk = k as i64;
                ok &= ai(k) == fi(2 * kk + 1) * bi(k) - fi(2 * mi - 2 * kk + 1) * bi(k - 1);
            }
        } else {
            for k in 0..=m as isize {
                let kk = k as i64;
                ok &= t2.clone() * bi(k) == fi(2 * mi - 2 * kk + 1) * ai(k) - fi(2 * (kk + 1)) * ai(k + 1);
            }
            for k in 0..=m as isize {
                let kk = k as i64;
                ok &= ai(k) == fi(2 * kk + 1) * bi(k) - fi(2 * (mi - kk + 1)) * bi(k - 1);
            }
        }
        // u₀ - τu₁ is the -τ eigenvector.
        let mut u = vec![F::zero(); grade.len()];
        for k in 0..na {
            let (a, b) = a_mono(k);
            let (i, c) = coord(a, b)?;
            u[i] += al[k].clone() * c;
        }
        for k in 0..nb {
            let (a, b) = b_mono(k);
            let (i, c) = coord(a, b)?;
            u[i] -= tf.clone() * be[k].clone() * c;
        }
        let du = d.mul_vec(&u);
        ok &= du.iter().zip(&u).all(|(x, y)| *x == -tf.clone() * y.clone());
        recursions &= ok;
        eigen_coefficients.push((tau, al, be));
    }
    Ok(S14DegreeReport { degree: n, halves, kernel, binomial_kernel, eigen_coefficients, recursions })
}

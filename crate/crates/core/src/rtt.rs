//! R-matrices, RTT relation extraction, generator changes, gauge conjugation
//! and the Yang–Baxter check.

use crate::error::{Error, Result};
use crate::freealg::{parse_relations, Alphabet, NcPoly, Word};
use crate::linalg::{Matrix, Span};
use crate::scalars::{Field, Gauss, RatFunc};

/// A 4x4 matrix on `V⊗V`, rows and columns indexed by `2(i-1)+(k-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<F> {
    pub m: Matrix<F>,
}

impl<F: Field> RMatrix<F> {
    pub fn new(m: Matrix<F>) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::Invalid("an R-matrix is 4x4".into()));
        }
        Ok(RMatrix { m })
    }
    pub fn identity() -> Self {
        RMatrix { m: Matrix::identity(4) }
    }
    /// The flip `x⊗y -> y⊗x`.
    pub fn permutation() -> Self {
        let mut m = Matrix::zeros(4, 4);
        for i in 0..2 {
            for k in 0..2 {
                m.set(2 * i + k, 2 * k + i, F::one());
            }
        }
        RMatrix { m }
    }
    pub fn det(&self) -> F {
        self.m.det()
    }
    pub fn is_nonsingular(&self) -> bool {
        !self.det().is_zero()
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RMatrix<G> {
        RMatrix { m: self.m.map(f) }
    }
    pub fn entry(&self, i: usize, k: usize, j: usize, l: usize) -> &F {
        self.m.get(2 * i + k, 2 * j + l)
    }
}

impl RMatrix<RatFunc> {
    /// Evaluate every entry at `q = q0`.
    pub fn specialize(&self, q0: &Gauss) -> Result<RMatrix<RatFunc>> {
        let mut m = Matrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, RatFunc::constant(self.m.get(i, j).specialize(q0)?));
            }
        }
        Ok(RMatrix { m })
    }

    /// Parse 16 scalars in row-major order (whitespace or comma separated, `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let sep = body.contains(',');
            let mut col = 0;
            let pieces: Vec<&str> = if sep { body.split(',').collect() } else { body.split_whitespace().collect() };
            for piece in pieces {
                let start = body[col..].find(piece.trim()).map_or(col, |p| col + p);
                if piece.trim().is_empty() {
                    continue;
                }
                let v = RatFunc::parse(piece).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Syntax { line: ln + 1, col: start + pos + 1, msg },
                    other => other,
                })?;
                col = start + piece.trim().len();
                entries.push(v);
            }
        }
        if entries.len() != 16 {
            return Err(Error::Syntax {
                line: text.lines().count().max(1),
                col: 1,
                msg: format!("expected 16 entries, found {}", entries.len()),
            });
        }
        let m = Matrix::from_fn(4, 4, |i, j| entries[4 * i + j].clone());
        Ok(RMatrix { m })
    }
}

fn r_from_strings(rows: [[&str; 4]; 4]) -> RMatrix<RatFunc> {
    RMatrix { m: Matrix::from_fn(4, 4, |i, j| RatFunc::parse(rows[i][j]).unwrap()) }
}

/// Keys of the built-in registry.
pub const REGISTRY: [&str; 6] = ["S03", "S14", "S14q1", "S14qm1", "S21", "R0"];

/// Built-in R-matrices. `S21` is the two-parameter matrix on the line `p = 1/q`,
/// which passes through `R0` at `q = -1`.
pub fn registry(key: &str) -> Result<RMatrix<RatFunc>> {
    let r = match key {
        "S03" => r_from_strings([["1", "0", "0", "1"], ["0", "1", "1", "0"], ["0", "1", "-1", "0"], ["-1", "0", "0", "1"]]),
        "S14" => r_from_strings([["0", "0", "0", "q"], ["0", "0", "1", "0"], ["0", "1", "0", "0"], ["q", "0", "0", "0"]]),
        "S14q1" => registry("S14")?.specialize(&Gauss::from_i64(1))?,
        "S14qm1" => registry("S14")?.specialize(&Gauss::from_i64(-1))?,
        "S21" => r_from_strings([["1", "0", "0", "0"], ["0", "1/q", "0", "0"], ["0", "0", "q", "0"], ["0", "0", "0", "1"]]),
        "R0" => r_from_strings([["1", "0", "0", "0"], ["0", "-1", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "1"]]),
        _ => return Err(Error::Unknown(key.to_string())),
    };
    Ok(r)
}

/// The matrix generators `a b / c d`.
pub fn matrix_alphabet() -> Alphabet {
    Alphabet::new(&[("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")])
}

fn t(i: usize, j: usize) -> u8 {
    (2 * i + j) as u8
}

/// The 16 components of `R T1 T2 - T2 T1 R`, indexed by `((i,k),(m,n))`.
pub fn rtt_components<F: Field>(r: &RMatrix<F>) -> Vec<NcPoly<F>> {
    let mut out = Vec::with_capacity(16);
    for i in 0..2 {
        for k in 0..2 {
            for m in 0..2 {
                for n in 0..2 {
                    let mut p = NcPoly::zero();
                    for j in 0..2 {
                        for l in 0..2 {
                            let c = r.entry(i, k, j, l).clone();
                            p.add_term(Word::from_slice(&[t(j, m), t(l, n)]), c);
                            let c = r.entry(j, l, m, n).clone();
                            p.add_term(Word::from_slice(&[t(k, l), t(i, j)]), -c);
                        }
                    }
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Reduced generating list of the RTT relations: the reduced echelon basis of
/// the span of the 16 components, each monic in its leading word, ordered by
/// leading word.
pub fn rtt_relations<F: Field>(r: &RMatrix<F>) -> Vec<NcPoly<F>> {
    reduced_basis(&rtt_components(r))
}

/// Reduced echelon basis of the span of the given polynomials.
pub fn reduced_basis<F: Field>(polys: &[NcPoly<F>]) -> Vec<NcPoly<F>> {
    let mut span = Span::new();
    for p in polys {
        span.insert(p);
    }
    span.elements().cloned().collect()
}

/// A linear change of the four generators: `new_i = Σ_j m[i][j] old_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorChange<F> {
    pub m: Matrix<F>,
}

impl<F: Field> GeneratorChange<F> {
    pub fn new(m: Matrix<F>) -> Result<Self> {
        if !m.is_square() || m.inverse().is_none() {
            return Err(Error::Singular);
        }
        Ok(GeneratorChange { m })
    }
    /// `T -> U T U^{-1}` on `T = (a b / c d)`.
    pub fn conjugation(u: &Matrix<F>) -> Result<Self> {
        let inv = u.inverse().ok_or(Error::Singular)?;
        Self::new(u.kron(&inv.transpose()))
    }
    /// `ã = (a+d)/2, b̃ = (b+c)/2, c̃ = (b-c)/2, d̃ = (a-d)/2`.
    pub fn tilde() -> Self {
        let h = F::from_gauss(&Gauss::from_ratio(1, 2));
        let m = Matrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, -1, 0], &[1, 0, 0, -1]]).scale(&h);
        GeneratorChange { m }
    }
    /// `â = ã+b̃, b̂ = d̃-c̃, ĉ = c̃+d̃, d̂ = ã-b̃`.
    pub fn hat() -> Self {
        GeneratorChange { m: Matrix::from_i64(&[&[1, 1, 0, 0], &[0, 0, -1, 1], &[0, 0, 1, 1], &[1, -1, 0, 0]]) }
    }
    /// Exchange of the second and third generators.
    pub fn swap_bc() -> Self {
        GeneratorChange { m: Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]) }
    }
    pub fn identity() -> Self {
        GeneratorChange { m: Matrix::identity(4) }
    }
    /// First `self`, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        GeneratorChange { m: next.m.mul(&self.m) }
    }
    pub fn inverse(&self) -> Self {
        GeneratorChange { m: self.m.inverse().unwrap() }
    }
    /// Old generators written in the new ones.
    pub fn old_in_new(&self) -> Vec<NcPoly<F>> {
        let inv = self.m.inverse().unwrap();
        (0..inv.rows())
            .map(|i| {
                let mut p = NcPoly::zero();
                for j in 0..inv.cols() {
                    p.add_term(Word::letter(j as u8), inv.get(i, j).clone());
                }
                p
            })
            .collect()
    }
}

/// Rewrite relations in the new generators.
pub fn change_generators<F: Field>(rels: &[NcPoly<F>], g: &GeneratorChange<F>) -> Vec<NcPoly<F>> {
    let images = g.old_in_new();
    rels.iter().map(|r| r.substitute(&images)).collect()
}

/// `(U⊗U) R (U⊗U)^{-1}`.
pub fn gauge_conjugate<F: Field>(r: &RMatrix<F>, u: &Matrix<F>) -> Result<RMatrix<F>> {
    let uu = u.kron(u);
    let inv = uu.inverse().ok_or(Error::Singular)?;
    Ok(RMatrix { m: uu.mul(&r.m).mul(&inv) })
}

fn p23<F: Field>() -> Matrix<F> {
    let mut p = Matrix::zeros(8, 8);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                p.set(4 * a + 2 * b + c, 4 * a + 2 * c + b, F::one());
            }
        }
    }
    p
}

/// Entrywise difference `R12 R13 R23 - R23 R13 R12` (64 components).
pub fn yang_baxter_defect<F: Field>(r: &RMatrix<F>) -> Matrix<F> {
    let id2 = Matrix::<F>::identity(2);
    let r12 = r.m.kron(&id2);
    let r23 = id2.kron(&r.m);
    let p = p23::<F>();
    let r13 = p.mul(&r12).mul(&p);
    r12.mul(&r13).mul(&r23).sub(&r23.mul(&r13).mul(&r12))
}

pub fn yang_baxter_check<F: Field>(r: &RMatrix<F>) -> bool {
    yang_baxter_defect(r).is_zero()
}

/// Two-sided ideal generated by `rels`, truncated at total degree `maxdeg`.
pub fn ideal_truncation<F: Field>(rels: &[NcPoly<F>], nletters: usize, maxdeg: usize) -> Span<F> {
    let mut span = Span::new();
    for r in rels {
        let Some(d) = r.degree() else { continue };
        if d > maxdeg {
            continue;
        }
        for extra in 0..=(maxdeg - d) {
            for left in 0..=extra {
                for u in all_words(nletters, left) {
                    for v in all_words(nletters, extra - left) {
                        span.insert(&r.mul_word_left(&u).mul_word_right(&v));
                    }
                }
            }
        }
    }
    span
}

/// Every word of the given length.
pub fn all_words(nletters: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * nletters);
        for w in &out {
            for l in 0..nletters as u8 {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out = next;
    }
    out
}

/// Outcome of comparing two ideals up to a degree.
#[derive(Clone, Debug)]
pub struct IdealComparison {
    pub maxdeg: usize,
    /// `(dim I_A, dim I_B)` of the truncations `I_{<= d}` for `d = 0..=maxdeg`.
    pub dims: Vec<(usize, usize)>,
    /// Relations of A not reducing to zero modulo B, and vice versa (indices).
    pub a_not_in_b: Vec<usize>,
    pub b_not_in_a: Vec<usize>,
}

impl IdealComparison {
    pub fn equal(&self) -> bool {
        self.a_not_in_b.is_empty() && self.b_not_in_a.is_empty() && self.dims.iter().all(|(a, b)| a == b)
    }
}

/// Bidirectional reduction test: every generator of one ideal reduces to zero
/// modulo the degree-truncated other ideal, and the truncations agree in each degree.
pub fn compare_ideals<F: Field>(a: &[NcPoly<F>], b: &[NcPoly<F>], nletters: usize, maxdeg: usize) -> IdealComparison {
    let mut dims = Vec::new();
    let mut ia = Span::new();
    let mut ib = Span::new();
    for d in 0..=maxdeg {
        ia = ideal_truncation(a, nletters, d);
        ib = ideal_truncation(b, nletters, d);
        dims.push((ia.dim(), ib.dim()));
    }
    let a_not_in_b = a.iter().enumerate().filter(|(_, r)| r.degree().is_some_and(|d| d <= maxdeg) && !ib.contains(r)).map(|(i, _)| i).collect();
    let b_not_in_a = b.iter().enumerate().filter(|(_, r)| r.degree().is_some_and(|d| d <= maxdeg) && !ia.contains(r)).map(|(i, _)| i).collect();
    IdealComparison { maxdeg, dims, a_not_in_b, b_not_in_a }
}

/// Relation sets as printed for the matrix generators.
pub mod printed {
    pub const S03: &str = "b^2 + c^2 = 0\na^2 - d^2 = 0\ncd = ba\ndc = -ab\nbd = ca\ndb = -ac\nda = ad\ncb = -bc\n";
    pub const S14: &str = "b^2 - c^2 = 0\na^2 - d^2 = 0\nab = ba = 0\nac = ca = 0\nbd = db = 0\ncd = dc = 0\n";
    pub const S14_Q1: &str = "a^2 = d^2\nb^2 = c^2 = 0\nab = ba = ac = ca = bd = db = cd = dc = 0\n";
}

pub fn printed_relations<F: Field>(text: &str) -> Vec<NcPoly<F>> {
    parse_relations(&matrix_alphabet(), text).expect("built-in relation text")
}

/// `U+ = (1 1 / 1 -1)` and `U- = (1 i / i 1)`, without the `1/sqrt 2` factor.
pub fn gauge_u<F: Field>(plus: bool) -> Matrix<F> {
    if plus {
        Matrix::from_i64(&[&[1, 1], &[1, -1]])
    } else {
        let i = F::imag_unit();
        Matrix::from_rows(vec![vec![F::one(), i.clone()], vec![i, F::one()]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type S = RatFunc;

    #[test]
    fn identity_gives_commutativity_and_flip_gives_nothing() {
        let id = rtt_relations(&RMatrix::<S>::identity());
        assert_eq!(id.len(), 6);
        assert!(rtt_relations(&RMatrix::<S>::permutation()).is_empty());
    }

    #[test]
    fn registry_is_nonsingular() {
        for k in REGISTRY {
            assert!(registry(k).unwrap().is_nonsingular(), "{}", k);
        }
        assert!(registry("nope").is_err());
    }

    #[test]
    fn parse_rmatrix_file() {
        let r = RMatrix::parse("# S14\n0 0 0 q\n0 0 1 0\n0 1 0 0\nq 0 0 0\n").unwrap();
        assert_eq!(r, registry("S14").unwrap());
        let r = RMatrix::parse("1, 0, 0, 1\n0, 1, 1, 0\n0, 1, -1, 0\n-1, 0, 0, 1").unwrap();
        assert_eq!(r, registry("S03").unwrap());
        match RMatrix::parse("1 0 0 0\n0 1 x 0\n") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 5)),
            other => panic!("{:?}", other),
        }
        assert!(RMatrix::parse("1 2 3").is_err());
    }

    #[test]
    fn singular_changes_are_rejected() {
        assert!(GeneratorChange::<S>::new(Matrix::zeros(4, 4)).is_err());
        assert!(gauge_conjugate(&registry("S03").unwrap(), &Matrix::zeros(2, 2)).is_err());
    }
}

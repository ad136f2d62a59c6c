//! Words, noncommutative polynomials, quadratic rewrite systems and normal forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalars::{Field, RatFunc};

pub type Letter = u8;

/// A word over an alphabet; the empty word is the unit.
///
/// Words compare degree-lexicographically: shorter words first, then
/// lexicographically in the alphabet order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub SmallVec<[Letter; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }
    pub fn letter(l: Letter) -> Self {
        Word(SmallVec::from_slice(&[l]))
    }
    pub fn from_slice(ls: &[Letter]) -> Self {
        Word(SmallVec::from_slice(ls))
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }
    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Declared generator names, in the order used for word comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    aliases: Vec<String>,
}

impl Alphabet {
    /// `letters` pairs a display name with an ASCII alias.
    pub fn new(letters: &[(&str, &str)]) -> Self {
        Alphabet {
            names: letters.iter().map(|(n, _)| n.to_string()).collect(),
            aliases: letters.iter().map(|(_, a)| a.to_string()).collect(),
        }
    }
    pub fn len(&self) -> usize {
        self.names.len()
    }
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }
    pub fn alias(&self, l: Letter) -> &str {
        &self.aliases[l as usize]
    }
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }
    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .or_else(|| self.aliases.iter().position(|n| n == name))
            .map(|i| i as Letter)
    }
    pub fn letter(&self, name: &str) -> Letter {
        self.lookup(name).unwrap_or_else(|| panic!("no letter `{}`", name))
    }
    /// Longest name or alias that prefixes `s`.
    fn match_prefix(&self, s: &str) -> Option<(Letter, usize)> {
        let mut best: Option<(Letter, usize)> = None;
        for (i, (n, a)) in self.names.iter().zip(&self.aliases).enumerate() {
            for cand in [n, a] {
                if !cand.is_empty() && s.starts_with(cand.as_str()) && best.is_none_or(|(_, l)| cand.len() > l) {
                    best = Some((i as Letter, cand.len()));
                }
            }
        }
        best
    }
    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let ls = w.letters();
        let mut i = 0;
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            out.push_str(self.name(ls[i]));
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }
    pub fn word(&self, text: &str) -> Result<Word> {
        let p = parse_poly(self, text)?;
        match p.terms.iter().next() {
            Some((w, c)) if p.terms.len() == 1 && c.to_gauss() == Some(crate::Gauss::from_i64(1)) => Ok(w.clone()),
            _ => Err(Error::Parse { pos: 0, msg: format!("`{}` is not a word", text) }),
        }
    }
}

/// Finitely supported map from words to coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct NcPoly<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for NcPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }
    pub fn constant(c: F) -> Self {
        Self::term(Word::empty(), c)
    }
    pub fn from_word(w: Word) -> Self {
        Self::term(w, F::one())
    }
    pub fn letter(l: Letter) -> Self {
        Self::from_word(Word::letter(l))
    }
    pub fn term(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
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
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &F)> {
        self.terms.iter()
    }
    pub fn into_terms(self) -> impl Iterator<Item = (Word, F)> {
        self.terms.into_iter()
    }
    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }
    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
    pub fn add_scaled(&mut self, other: &NcPoly<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.clone() * c.clone());
        }
    }
    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero();
        p.add_scaled(self, c);
        p
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_scaled(other, &F::one());
        p
    }
    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_scaled(other, &-F::one());
        p
    }
    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }
    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        p
    }
    pub fn mul_word_left(&self, w: &Word) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            p.add_term(w.concat(u), a.clone());
        }
        p
    }
    pub fn mul_word_right(&self, w: &Word) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            p.add_term(u.concat(w), a.clone());
        }
        p
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
    /// Largest word in degree-lexicographic order, with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().next_back()
    }
    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|w| w.len());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> NcPoly<G> {
        let mut p = NcPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), f(c));
        }
        p
    }
    /// Substitute each letter by a polynomial (an algebra map from the free algebra).
    pub fn substitute(&self, images: &[NcPoly<F>]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &l in w.letters() {
                acc = acc.mul(&images[l as usize]);
            }
            out.add_scaled(&acc, &F::one());
        }
        out
    }
    /// Monic rescaling by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> PolyDisplay<'a, F> {
        PolyDisplay { p: self, alphabet }
    }
}

pub struct PolyDisplay<'a, F> {
    p: &'a NcPoly<F>,
    alphabet: &'a Alphabet,
}

/// Renders a coefficient so that it can be followed by `*word`.
pub fn fmt_coeff<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
        _ => (false, s.clone()),
    };
    let body = if body.contains(['+', '-']) || (body.contains('/') && body.contains('(')) {
        format!("({})", body)
    } else {
        body
    };
    (neg, body)
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.p.terms.iter().rev() {
            let (neg, body) = fmt_coeff(c);
            let ws = self.alphabet.fmt_word(w);
            let term = if body == "1" {
                ws
            } else if w.is_empty() {
                body
            } else {
                format!("{}*{}", body, ws)
            };
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

/// Which redex is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rules `xy -> rhs` on length-2 words, oriented by the degree-lexicographic order.
#[derive(Clone, Debug)]
pub struct RewriteSystem<F> {
    n: usize,
    rules: Vec<Option<NcPoly<F>>>,
}

impl<F: Field> RewriteSystem<F> {
    pub fn empty(n: usize) -> Self {
        RewriteSystem { n, rules: vec![None; n * n] }
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    /// Add `x y -> rhs`. Every word of `rhs` must be strictly smaller than `xy`.
    pub fn add_rule(&mut self, x: Letter, y: Letter, rhs: NcPoly<F>) -> Result<()> {
        let lhs = Word::from_slice(&[x, y]);
        if let Some((w, _)) = rhs.leading() {
            if *w >= lhs {
                return Err(Error::Invalid("rule does not decrease the word order".into()));
            }
        }
        self.rules[x as usize * self.n + y as usize] = Some(rhs);
        Ok(())
    }

    pub fn rule(&self, x: Letter, y: Letter) -> Option<&NcPoly<F>> {
        self.rules[x as usize * self.n + y as usize].as_ref()
    }

    pub fn rules(&self) -> impl Iterator<Item = (Letter, Letter, &NcPoly<F>)> {
        let n = self.n;
        self.rules
            .iter()
            .enumerate()
            .filter_map(move |(k, r)| r.as_ref().map(|r| ((k / n) as Letter, (k % n) as Letter, r)))
    }

    /// Orient a list of relations `p = 0`. Each relation must have a leading
    /// word of length 2 and distinct relations must have distinct leading words.
    pub fn from_relations(n: usize, rels: &[NcPoly<F>]) -> Result<Self> {
        let mut rs = Self::empty(n);
        for r in rels {
            let (w, c) = match r.leading() {
                Some(t) => t,
                None => continue,
            };
            if w.len() != 2 {
                return Err(Error::Invalid("leading word of a relation must have length 2".into()));
            }
            let (x, y) = (w.letters()[0], w.letters()[1]);
            if rs.rule(x, y).is_some() {
                return Err(Error::Invalid("two relations share a leading word".into()));
            }
            let inv = c.inv().unwrap();
            let mut rhs = r.scale(&-inv);
            rhs.add_term(w.clone(), F::one());
            rs.add_rule(x, y, rhs)?;
        }
        Ok(rs)
    }

    /// The relations `xy - rhs`.
    pub fn relations(&self) -> Vec<NcPoly<F>> {
        self.rules()
            .map(|(x, y, r)| NcPoly::from_word(Word::from_slice(&[x, y])).sub(r))
            .collect()
    }

    fn redex(&self, w: &Word, strategy: Strategy) -> Option<usize> {
        let ls = w.letters();
        if ls.len() < 2 {
            return None;
        }
        let has = |i: usize| self.rules[ls[i] as usize * self.n + ls[i + 1] as usize].is_some();
        match strategy {
            Strategy::Leftmost => (0..ls.len() - 1).find(|&i| has(i)),
            Strategy::Rightmost => (0..ls.len() - 1).rev().find(|&i| has(i)),
        }
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.redex(w, Strategy::Leftmost).is_none()
    }

    pub fn normal_form(&self, p: &NcPoly<F>) -> NcPoly<F> {
        self.normal_form_with(p, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, p: &NcPoly<F>, strategy: Strategy) -> NcPoly<F> {
        let mut out = NcPoly::zero();
        // Process larger words first so that terms merge before being rewritten again.
        let mut pending: BTreeMap<Word, F> = p.terms.clone();
        while let Some((w, c)) = pending.pop_last() {
            match self.redex(&w, strategy) {
                None => out.add_term(w, c),
                Some(i) => {
                    let ls = w.letters();
                    let rhs = self.rules[ls[i] as usize * self.n + ls[i + 1] as usize].as_ref().unwrap();
                    for (v, a) in rhs.terms() {
                        let mut nw: SmallVec<[Letter; 16]> = SmallVec::from_slice(&ls[..i]);
                        nw.extend_from_slice(v.letters());
                        nw.extend_from_slice(&ls[i + 2..]);
                        let coeff = c.clone() * a.clone();
                        let e = pending.entry(Word(nw)).or_insert_with(F::zero);
                        *e += coeff;
                    }
                    pending.retain(|_, x| !x.is_zero());
                }
            }
        }
        out
    }

    pub fn normal_form_word(&self, w: &Word) -> NcPoly<F> {
        self.normal_form(&NcPoly::from_word(w.clone()))
    }

    /// Product of two polynomials followed by reduction.
    pub fn mul(&self, a: &NcPoly<F>, b: &NcPoly<F>) -> NcPoly<F> {
        self.normal_form(&a.mul(b))
    }

    /// Irreducible words of the given length, in lexicographic alphabet order.
    pub fn enumerate_basis(&self, degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Word::empty();
        self.extend_basis(&mut cur, degree, &mut out);
        out
    }

    fn extend_basis(&self, cur: &mut Word, degree: usize, out: &mut Vec<Word>) {
        if cur.len() == degree {
            out.push(cur.clone());
            return;
        }
        for l in 0..self.n as Letter {
            if let Some(&last) = cur.letters().last() {
                if self.rule(last, l).is_some() {
                    continue;
                }
            }
            cur.push(l);
            self.extend_basis(cur, degree, out);
            cur.0.pop();
        }
    }

    /// Compare leftmost and rightmost reduction on every word of length `3..=degree`.
    pub fn confluence_probe(&self, degree: usize) -> ConfluenceReport<F> {
        let mut report = ConfluenceReport { degree, words_checked: 0, divergences: Vec::new() };
        for len in 3..=degree {
            let total = self.n.pow(len as u32);
            for code in 0..total {
                let mut ls = vec![0 as Letter; len];
                let mut c = code;
                for k in (0..len).rev() {
                    ls[k] = (c % self.n) as Letter;
                    c /= self.n;
                }
                let w = Word::from_slice(&ls);
                report.words_checked += 1;
                if self.is_irreducible(&w) {
                    continue;
                }
                let p = NcPoly::from_word(w.clone());
                let l = self.normal_form_with(&p, Strategy::Leftmost);
                let r = self.normal_form_with(&p, Strategy::Rightmost);
                if l != r {
                    report.divergences.push((w, l, r));
                }
            }
        }
        report
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport<F> {
    pub degree: usize,
    pub words_checked: usize,
    pub divergences: Vec<(Word, NcPoly<F>, NcPoly<F>)>,
}

impl<F> ConfluenceReport<F> {
    pub fn is_clean(&self) -> bool {
        self.divergences.is_empty()
    }
}

/// Parse a polynomial such as `2*ã^2b̃ - i*q*c̃ + 1` over the given alphabet.
pub fn parse_poly(alphabet: &Alphabet, text: &str) -> Result<NcPoly<RatFunc>> {
    let mut p = PolyParser { a: alphabet, s: text, pos: 0 };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected input");
    }
    Ok(v)
}

/// Parse into a specific coefficient field.
pub fn parse_poly_in<F: Field>(alphabet: &Alphabet, text: &str) -> Result<NcPoly<F>> {
    let p = parse_poly(alphabet, text)?;
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let x = F::from_scalar(c).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("coefficient `{}` not representable", c),
        })?;
        out.add_term(w.clone(), x);
    }
    Ok(out)
}

struct PolyParser<'a> {
    a: &'a Alphabet,
    s: &'a str,
    pos: usize,
}

impl PolyParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }
    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }
    fn peek(&mut self) -> Option<char> {
        let r = self.rest();
        let skip = r.len() - r.trim_start().len();
        self.pos += skip;
        self.rest().chars().next()
    }
    fn expr(&mut self) -> Result<NcPoly<RatFunc>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn term(&mut self) -> Result<NcPoly<RatFunc>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let c = match d.terms().next() {
                        Some((w, c)) if d.len() == 1 && w.is_empty() => c.clone(),
                        _ => return self.err("division by a non-scalar"),
                    };
                    match c.inv() {
                        Some(inv) => acc = acc.scale(&inv),
                        None => return self.err("division by zero"),
                    }
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.starts_atom() => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn starts_atom(&self) -> bool {
        let r = self.rest();
        r.starts_with('i') || r.starts_with('q') || self.a.match_prefix(r).is_some()
    }
    fn unary(&mut self) -> Result<NcPoly<RatFunc>> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            _ => self.power(),
        }
    }
    fn power(&mut self) -> Result<NcPoly<RatFunc>> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.peek();
        let start = self.pos;
        while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a non-negative integer exponent");
        }
        let e: u32 = self.s[start..self.pos].parse().map_err(|_| Error::Parse { pos: start, msg: "bad exponent".into() })?;
        Ok(base.pow(e))
    }
    fn atom(&mut self) -> Result<NcPoly<RatFunc>> {
        let c = match self.peek() {
            Some(c) => c,
            None => return self.err("unexpected end of input"),
        };
        if c == '(' {
            self.pos += 1;
            let v = self.expr()?;
            if self.peek() != Some(')') {
                return self.err("expected `)`");
            }
            self.pos += 1;
            return Ok(v);
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let x = RatFunc::parse(&self.s[start..self.pos])?;
            return Ok(NcPoly::constant(x));
        }
        if let Some((l, n)) = self.a.match_prefix(self.rest()) {
            self.pos += n;
            return Ok(NcPoly::letter(l));
        }
        if c == 'i' || c == 'q' {
            self.pos += 1;
            return Ok(NcPoly::constant(RatFunc::parse(&c.to_string())?));
        }
        self.err("unexpected character")
    }
}

/// Parse a presentation: lines `lhs = rhs` (chains `x = y = z` allowed), `#` comments.
pub fn parse_relations<F: Field>(alphabet: &Alphabet, text: &str) -> Result<Vec<NcPoly<F>>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = body.split('=').collect();
        let mut polys = Vec::new();
        let mut col = 1;
        for part in &parts {
            let p = parse_poly_in::<F>(alphabet, part).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Syntax { line: ln + 1, col: col + pos, msg },
                other => other,
            })?;
            polys.push(p);
            col += part.chars().count() + 1;
        }
        if polys.len() < 2 {
            return Err(Error::Syntax { line: ln + 1, col: 1, msg: "expected `lhs = rhs`".into() });
        }
        let last = polys.last().unwrap().clone();
        for p in &polys[..polys.len() - 1] {
            out.push(p.sub(&last));
        }
    }
    Ok(out)
}

/// Render relations in the text format accepted by [`parse_relations`].
pub fn format_relations<F: Field>(alphabet: &Alphabet, rels: &[NcPoly<F>]) -> String {
    let mut s = String::new();
    for r in rels {
        s.push_str(&format!("{} = 0\n", r.display(alphabet)));
    }
    s
}

//! Free associative algebra over [`Scalar`] and PBW normal forms for
//! quadratic-linear presentations.

mod parse;
mod rewrite;

pub use parse::parse_nc;
pub use rewrite::{counit, ConfluenceResult, NcError, Reducer, RewriteSystem};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{Scalar, Var};

pub type Letter = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Coordinate,
    Derivative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    kinds: Vec<LetterKind>,
}

impl Alphabet {
    /// Letters in increasing order. Panics on duplicate names.
    pub fn new(letters: Vec<(String, LetterKind)>) -> Self {
        assert!(letters.len() < Letter::MAX as usize, "alphabet too large");
        let (names, kinds): (Vec<String>, Vec<LetterKind>) = letters.into_iter().unzip();
        for (k, n) in names.iter().enumerate() {
            assert!(!names[..k].contains(n), "duplicate generator name {n}");
        }
        Alphabet { names, kinds }
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

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self, l: Letter) -> LetterKind {
        self.kinds[l as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|k| k as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len()).map(|k| k as Letter)
    }

    /// Render a polynomial with this alphabet's names.
    pub fn render(&self, p: &NCPoly) -> String {
        p.display(self).to_string()
    }
}

/// A word, ordered by length and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        NCPoly::term(Word::empty(), s)
    }

    pub fn letter(l: Letter) -> Self {
        NCPoly::term(Word(vec![l]), Scalar::one())
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The value if the polynomial is a scalar multiple of `1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = &*x + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, o: &NCPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c);
        }
    }

    /// `self += c · o`.
    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &o.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::from_int(-1));
        r
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Free (concatenation) product.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a.concat(b), &(x * y));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self·o − o·self` in the free algebra.
    pub fn commutator(&self, o: &NCPoly) -> NCPoly {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn subs(&self, v: Var, value: &Scalar) -> NCPoly {
        self.map_coeffs(|c| c.subs(v, value))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> NCDisplay<'a> {
        NCDisplay { p: self, alphabet }
    }
}

pub struct NCDisplay<'a> {
    p: &'a NCPoly,
    alphabet: &'a Alphabet,
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &Word, a: &Alphabet) -> fmt::Result {
    let mut k = 0;
    let mut first = true;
    while k < w.0.len() {
        let l = w.0[k];
        let mut e = 1;
        while k + e < w.0.len() && w.0[k + e] == l {
            e += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let name = a.name(l);
        // names containing '^' are wrapped so a power stays unambiguous
        let name = if e > 1 && name.contains('^') { format!("({})", name) } else { name.to_string() };
        if e == 1 {
            write!(f, "{}", name)?;
        } else {
            write!(f, "{}^{}", name, e)?;
        }
        k += e;
    }
    Ok(())
}

impl fmt::Display for NCDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.p.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write_word(f, w, self.alphabet)?;
            } else {
                write!(f, "({})*", c)?;
                write_word(f, w, self.alphabet)?;
            }
        }
        Ok(())
    }
}

//! Rewriting systems keyed on adjacent letter pairs.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Alphabet, Letter, LetterKind, NCPoly, Word};
use crate::exact::{Scalar, ScalarMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("relation with leading word '{0}' is not quadratic")]
    LeadingWordNotPair(String),
    #[error("missing rule for the pair '{0}'")]
    MissingRule(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfluenceResult {
    Pass,
    /// Overlap word whose two reductions differ, and their difference.
    Fail { word: String, difference: String },
}

impl ConfluenceResult {
    pub fn passed(&self) -> bool {
        matches!(self, ConfluenceResult::Pass)
    }
}

/// Rules `ba ↦ rhs` for pairs `(b, a)`, each strictly decreasing the
/// graded-lex order.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: HashMap<(Letter, Letter), NCPoly>,
}

impl RewriteSystem {
    /// Row-reduce the relations over the word basis (largest word first);
    /// each pivot word becomes a rule. Redundant relations drop out.
    pub fn from_relations(alphabet: Arc<Alphabet>, relations: &[NCPoly]) -> Result<Self, NcError> {
        let mut words: Vec<Word> = relations.iter().flat_map(|r| r.terms().map(|(w, _)| w.clone())).collect();
        words.sort();
        words.dedup();
        words.reverse();
        let col: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let m = ScalarMatrix::from_fn(relations.len(), words.len(), |_, _| Scalar::zero());
        let mut m = m;
        for (r, rel) in relations.iter().enumerate() {
            for (w, c) in rel.terms() {
                m.set(r, col[w], c.clone());
            }
        }
        let (red, pivots) = m.rref();
        let mut rules = HashMap::new();
        for (row, &pc) in pivots.iter().enumerate() {
            let lead = &words[pc];
            if lead.len() != 2 {
                return Err(NcError::LeadingWordNotPair(NCPoly::word(lead.clone()).display(&alphabet).to_string()));
            }
            let mut rhs = NCPoly::zero();
            for (c, w) in words.iter().enumerate().skip(pc + 1) {
                let v = red.get(row, c);
                if !v.is_zero() {
                    rhs.add_term(w.clone(), &-v);
                }
            }
            rules.insert((lead.0[0], lead.0[1]), rhs);
        }
        Ok(RewriteSystem { alphabet, rules })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &HashMap<(Letter, Letter), NCPoly> {
        &self.rules
    }

    pub fn rule(&self, b: Letter, a: Letter) -> Option<&NCPoly> {
        self.rules.get(&(b, a))
    }

    /// Every out-of-order pair `b > a` must have a rule for a PBW basis.
    pub fn check_complete(&self) -> Result<(), NcError> {
        for b in self.alphabet.letters() {
            for a in self.alphabet.letters().filter(|&a| a < b) {
                if !self.rules.contains_key(&(b, a)) {
                    let w = NCPoly::word(Word(vec![b, a]));
                    return Err(NcError::MissingRule(w.display(&self.alphabet).to_string()));
                }
            }
        }
        Ok(())
    }

    /// Copy of the system with one rule replaced; used to build broken inputs.
    pub fn with_rule(&self, b: Letter, a: Letter, rhs: NCPoly) -> Self {
        let mut s = self.clone();
        s.rules.insert((b, a), rhs);
        s
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        Reducer::new(self).nf(p)
    }

    /// Diamond-lemma check on every overlap `cba` where `cb` and `ba` are
    /// both rule left sides.
    pub fn certify_confluence(&self) -> ConfluenceResult {
        let mut red = Reducer::new(self);
        let mut keys: Vec<&(Letter, Letter)> = self.rules.keys().collect();
        keys.sort();
        for &(c, b) in &keys {
            for &(b2, a) in &keys {
                if *b2 != *b {
                    continue;
                }
                let left = self.rules[&(*c, *b)].mul(&NCPoly::letter(*a));
                let right = NCPoly::letter(*c).mul(&self.rules[&(*b, *a)]);
                let diff = red.nf(&left).sub(&red.nf(&right));
                if !diff.is_zero() {
                    return ConfluenceResult::Fail {
                        word: NCPoly::word(Word(vec![*c, *b, *a])).display(&self.alphabet).to_string(),
                        difference: diff.display(&self.alphabet).to_string(),
                    };
                }
            }
        }
        ConfluenceResult::Pass
    }

    /// Normal-order `p` and replace the derivative suffix of each word by the
    /// product of `ε` values (letters absent from `eps` have `ε = 0`).
    pub fn evaluate_counit(&self, p: &NCPoly, eps: &HashMap<Letter, Scalar>) -> NCPoly {
        counit(&self.alphabet, &self.normal_form(p), eps)
    }
}

/// Counit on an already normal-ordered polynomial.
pub fn counit(alphabet: &Alphabet, p: &NCPoly, eps: &HashMap<Letter, Scalar>) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let split = w.0.iter().rposition(|&l| alphabet.kind(l) == LetterKind::Coordinate).map(|k| k + 1).unwrap_or(0);
        let mut val = c.clone();
        for l in &w.0[split..] {
            match eps.get(l) {
                Some(e) => val = &val * e,
                None => {
                    val = Scalar::zero();
                    break;
                }
            }
        }
        out.add_term(Word(w.0[..split].to_vec()), &val);
    }
    out
}

/// Normal-form evaluator with a memo table; one per thread.
pub struct Reducer<'a> {
    rs: &'a RewriteSystem,
    insert_cache: HashMap<(Letter, Word), NCPoly>,
}

impl<'a> Reducer<'a> {
    pub fn new(rs: &'a RewriteSystem) -> Self {
        Reducer { rs, insert_cache: HashMap::new() }
    }

    pub fn system(&self) -> &RewriteSystem {
        self.rs
    }

    pub fn nf(&mut self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let n = self.nf_word(&w.0);
            out.add_scaled(&n, c);
        }
        out
    }

    /// Normal form of `a·b` for normal `a`, `b`.
    pub fn mul(&mut self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&a.mul(b))
    }

    pub fn nf_word(&mut self, w: &[Letter]) -> NCPoly {
        if w.len() <= 1 {
            return NCPoly::word(Word(w.to_vec()));
        }
        let tail = self.nf_word(&w[1..]);
        let mut out = NCPoly::zero();
        for (v, c) in tail.terms() {
            let ins = self.insert(w[0], v);
            out.add_scaled(&ins, c);
        }
        out
    }

    /// Normal form of `a·v` where `v` is a normal word.
    fn insert(&mut self, a: Letter, v: &Word) -> NCPoly {
        let Some(&first) = v.0.first() else {
            return NCPoly::letter(a);
        };
        let Some(rule) = self.rs.rules.get(&(a, first)) else {
            let mut w = Vec::with_capacity(v.len() + 1);
            w.push(a);
            w.extend_from_slice(&v.0);
            return NCPoly::word(Word(w));
        };
        let key = (a, v.clone());
        if let Some(hit) = self.insert_cache.get(&key) {
            return hit.clone();
        }
        let rest = Word(v.0[1..].to_vec());
        let rule = rule.clone();
        let mut out = NCPoly::zero();
        for (u, c) in rule.terms() {
            // u has length ≤ 2 and is normal; push its letters in from the right
            let mut acc = NCPoly::word(rest.clone());
            for &l in u.0.iter().rev() {
                let mut next = NCPoly::zero();
                for (x, k) in acc.terms() {
                    let ins = self.insert(l, x);
                    next.add_scaled(&ins, k);
                }
                acc = next;
            }
            out.add_scaled(&acc, c);
        }
        self.insert_cache.insert(key, out.clone());
        out
    }
}

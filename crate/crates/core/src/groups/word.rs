//! Words in free generators and finite presentations.
//!
//! Text grammar, given the generator names of a presentation:
//!
//! ```text
//! relation := word ('=' word)*          a = b = c  means  a b^-1, b c^-1
//! word     := item*                     juxtaposition, whitespace optional
//! item     := atom ('^' ['-'] int | '-1')?
//! atom     := name | '(' word ')' | '[' word ',' word ']' | '1'
//! ```
//!
//! Names are matched longest-first, so with generators `s t` the compact
//! form `(st)^2 s^-3` and the spaced form `s t s t s-1 s-1 s-1` parse to
//! the same word. `[a,b]` is the commutator `a b a^-1 b^-1` and `1` the
//! empty word. Printing uses run-length form (`s^3 t^-5`), which parses back
//! to the identical letter sequence.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A sequence of letters; not automatically reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(alloc::vec![Letter { gen: g, inverse: false }])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Exponent sum of every generator.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = alloc::vec![0i64; ngens];
        for l in &self.0 {
            v[l.gen] += if l.inverse { -1 } else { 1 };
        }
        v
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("invalid generator name {0:?}")]
    BadName(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("relator refers to generator {0} but only {1} exist")]
    BadIndex(usize, usize),
    #[error("parse error at byte {pos} of {text:?}: {message}")]
    Parse { text: String, pos: usize, message: String },
}

/// Generators plus relators; each relator is declared equal to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if !valid_name(g) {
                return Err(PresentationError::BadName(g.clone()));
            }
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateName(g.clone()));
            }
        }
        for r in &relators {
            if let Some(m) = r.max_gen() {
                if m >= generators.len() {
                    return Err(PresentationError::BadIndex(m, generators.len()));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// `generators` is whitespace separated; each relator string may be a
    /// relation chain `a = b = c`.
    pub fn parse(generators: &str, relators: &[&str]) -> Result<Self, PresentationError> {
        let gens: Vec<String> = generators.split_whitespace().map(ToString::to_string).collect();
        let mut p = Presentation::new(gens, Vec::new())?;
        for r in relators {
            let words = p.parse_relation(r)?;
            p.relators.extend(words);
        }
        Ok(p)
    }

    /// One-line form `< s t | (st)^2 = s^3 = t^5, ... >`.
    pub fn parse_compact(s: &str) -> Result<Self, PresentationError> {
        let perr = |pos: usize, message: &str| PresentationError::Parse { text: s.to_string(), pos, message: message.to_string() };
        let t = s.trim();
        let inner = t.strip_prefix('<').and_then(|r| r.strip_suffix('>')).ok_or_else(|| perr(0, "expected < ... >"))?;
        let (gens, rels) = inner.split_once('|').ok_or_else(|| perr(0, "expected '|'"))?;
        let parts = split_top_level(rels);
        let parts: Vec<&str> = parts.iter().map(|p| p.trim()).filter(|p| !p.is_empty()).collect();
        Self::parse(gens, &parts)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn with_relator(mut self, w: Word) -> Result<Self, PresentationError> {
        if let Some(m) = w.max_gen() {
            if m >= self.ngens() {
                return Err(PresentationError::BadIndex(m, self.ngens()));
            }
        }
        self.relators.push(w);
        Ok(self)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a single word (no `=`).
    pub fn parse_word(&self, s: &str) -> Result<Word, PresentationError> {
        let mut p = WordParser { text: s, bytes: s.as_bytes(), pos: 0, names: &self.generators };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(w)
    }

    /// Parses `a = b = c` into the relators `a b^-1, b c^-1`; a lone word is one relator.
    pub fn parse_relation(&self, s: &str) -> Result<Vec<Word>, PresentationError> {
        let sides: Vec<Word> = s.split('=').map(|part| self.parse_word(part)).collect::<Result<_, _>>()?;
        if sides.len() == 1 {
            return Ok(sides);
        }
        Ok(sides.windows(2).map(|w| w[0].concat(&w[1].inverse())).collect())
    }

    /// Run-length text of a word, `1` for the empty word.
    pub fn format_word(&self, w: &Word) -> String {
        format_word_with(w, &self.generators)
    }
}

/// Run-length text of a word over the given names.
pub fn format_word_with(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        let exp = if l.inverse { -run } else { run };
        let name = &names[l.gen];
        parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
        i = j;
    }
    parts.join(" ")
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(" "), rels.join(", "))
    }
}

struct WordParser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn error(&self, message: &str) -> PresentationError {
        PresentationError::Parse { text: self.text.to_string(), pos: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, PresentationError> {
        let mut w = Word::identity();
        while let Some(c) = self.peek() {
            if c == b')' || c == b']' || c == b',' {
                break;
            }
            let atom = self.atom()?;
            let item = self.suffix(atom)?;
            w = w.concat(&item);
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, PresentationError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                if self.peek() != Some(b',') {
                    return Err(self.error("expected ',' in commutator"));
                }
                self.pos += 1;
                let b = self.word()?;
                if self.peek() != Some(b']') {
                    return Err(self.error("expected ']'"));
                }
                self.pos += 1;
                Ok(Word::commutator(&a, &b))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(_) => {
                let rest = &self.text[self.pos..];
                let best = self.names.iter().enumerate().filter(|(_, n)| rest.starts_with(n.as_str())).max_by_key(|(_, n)| n.len());
                match best {
                    Some((i, n)) => {
                        self.pos += n.len();
                        Ok(Word::gen(i))
                    }
                    None => Err(self.error("unknown generator")),
                }
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn int(&mut self) -> Result<i64, PresentationError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().map_err(|_| self.error("expected integer"))
    }

    fn suffix(&mut self, atom: Word) -> Result<Word, PresentationError> {
        // suffixes attach without intervening whitespace
        match self.bytes.get(self.pos) {
            Some(b'^') => {
                self.pos += 1;
                let neg = self.bytes.get(self.pos) == Some(&b'-');
                if neg {
                    self.pos += 1;
                }
                let k = self.int()?;
                Ok(atom.pow(if neg { -k } else { k }))
            }
            Some(b'-') if self.bytes.get(self.pos + 1) == Some(&b'1') => {
                self.pos += 2;
                Ok(atom.inverse())
            }
            _ => Ok(atom),
        }
    }
}

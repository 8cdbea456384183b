//! Finite presentations: generators, relator words and central generators.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the generators as a sequence of `(generator, exponent)` syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn power(g: usize, k: i64) -> Self {
        Word(vec![(g, k)])
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::new();
        for _ in 0..k.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&(g, k)| (g, -k)).collect())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a * b * &a.inverse() * &b.inverse()
    }

    /// Relator word for the relation `lhs = rhs`.
    pub fn relation(lhs: &Word, rhs: &Word) -> Self {
        lhs * &rhs.inverse()
    }

    /// Expands into signed letters: `2g` for `g`, `2g+1` for `g⁻¹`, freely
    /// reduced.
    pub fn letters(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &(g, k) in &self.0 {
            let letter = 2 * g + usize::from(k < 0);
            for _ in 0..k.unsigned_abs() {
                if out.last() == Some(&(letter ^ 1)) {
                    out.pop();
                } else {
                    out.push(letter);
                }
            }
        }
        out
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(g, k)| {
                let name = names.get(g).cloned().unwrap_or_else(|| format!("g{g}"));
                if k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl Mul<&Word> for Word {
    type Output = Word;
    fn mul(mut self, rhs: &Word) -> Word {
        self.0.extend_from_slice(&rhs.0);
        self
    }
}

impl Mul<Word> for Word {
    type Output = Word;
    fn mul(mut self, rhs: Word) -> Word {
        self.0.extend(rhs.0);
        self
    }
}

/// Generators, relators (words equal to the identity) and a set of
/// generators declared central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    central: Vec<usize>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>, central: Vec<usize>) -> Result<Self> {
        let n = generators.len();
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(Error::MalformedRelator(format!(
                        "relator {i} uses generator {g} but only {n} generators exist"
                    )));
                }
            }
        }
        if let Some(&c) = central.iter().find(|&&c| c >= n) {
            return Err(Error::MalformedRelator(format!("central generator {c} out of range")));
        }
        Ok(Self {
            generators,
            relators,
            central,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn central(&self) -> &[usize] {
        &self.central
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Relators with every central declaration expanded into `[z, g]` for all
    /// other generators `g`.
    pub fn expanded_relators(&self) -> Vec<Word> {
        let mut out = self.relators.clone();
        for &z in &self.central {
            for g in 0..self.generators.len() {
                if g != z {
                    out.push(Word::commutator(&Word::gen(z), &Word::gen(g)));
                }
            }
        }
        out
    }

    /// Parses a relator in the `*`/`^` syntax, e.g. `(a^-1*b)^3`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        parse_word(&self.generators, s)
    }

    pub fn from_json(json: PresentationJson) -> Result<Self> {
        let relators = json
            .relators
            .iter()
            .map(|r| parse_word(&json.generators, r))
            .collect::<Result<Vec<_>>>()?;
        let central = json
            .central
            .iter()
            .map(|c| {
                json.generators
                    .iter()
                    .position(|g| g == c)
                    .ok_or_else(|| Error::MalformedRelator(format!("unknown central generator `{c}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.generators, relators, central)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| r.render(&self.generators)).collect(),
            central: self.central.iter().map(|&c| self.generators[c].clone()).collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&self.generators)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))?;
        if !self.central.is_empty() {
            let c: Vec<&str> = self.central.iter().map(|&i| self.generators[i].as_str()).collect();
            write!(f, " central {}", c.join(", "))?;
        }
        Ok(())
    }
}

/// Presentation file format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    #[serde(default)]
    pub central: Vec<String>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::MalformedRelator(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        self.pos += self.src[self.pos..].chars().next().map_or(0, char::len_utf8);
    }

    // product := factor ('*' factor)*
    fn product(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            w = w * self.factor()?;
        }
        Ok(w)
    }

    // factor := atom ('^' integer)?
    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let k = self.integer()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(w)
            }
            Some('1') => {
                self.bump();
                Ok(Word::identity())
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while let Some(c) = self.src[self.pos..].chars().next() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' {
                        self.bump();
                    } else {
                        break;
                    }
                }
                let name = &self.src[start..self.pos];
                let g = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| self.err(&format!("unknown generator `{name}`")))?;
                Ok(Word::gen(g))
            }
            _ => Err(self.err("expected generator or `(`")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src[self.pos..].starts_with(['-', '+']) {
            self.bump();
        }
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected integer exponent"))
    }
}

/// Parses `lhs` or `lhs = rhs` into a relator word.
pub fn parse_word(names: &[String], s: &str) -> Result<Word> {
    let (lhs, rhs) = match s.split_once('=') {
        Some((l, r)) => (l, Some(r)),
        None => (s, None),
    };
    let parse_side = |src: &str| -> Result<Word> {
        let mut p = Parser { src, pos: 0, names };
        let w = p.product()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(w)
    };
    let l = parse_side(lhs)?;
    match rhs {
        Some(r) => Ok(Word::relation(&l, &parse_side(r)?)),
        None => Ok(l),
    }
}

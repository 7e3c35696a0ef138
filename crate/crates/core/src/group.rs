//! Words in finitely presented groups, the presentation grammar, and Fox
//! free differential calculus.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inverted(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// Exponent sign, +1 or -1.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word(stack)
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

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// Signed letter sum under the abelianization `alpha`.
    pub fn abelianize(&self, alpha: &[i64]) -> i64 {
        self.0.iter().map(|l| l.sign() * alpha[l.generator]).sum()
    }

    /// Reads `[a-zA-Z]+` (or `1` for the identity) against the given
    /// generator names; uppercase letters denote inverses.
    pub fn parse_with(text: &str, generators: &[char]) -> Result<Word> {
        parse_word(text, generators, 1, 1)
    }

    pub fn format_with(&self, generators: &[char]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                let c = generators[l.generator];
                if l.inverse {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Word) -> Word {
        let mut left = self.0.clone();
        let mut skip = 0;
        for &l in &rhs.0 {
            match left.last() {
                Some(&top) if top.cancels(l) => {
                    left.pop();
                    skip += 1;
                }
                _ => break,
            }
        }
        left.extend_from_slice(&rhs.0[skip..]);
        Word(left)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

/// Integer-coefficient formal sum of group words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement::from_terms(self.terms().map(|(w, c)| (w.clone(), -c)))
    }
}

impl Mul<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in rhs.terms() {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GroupRingElement {
            type Output = GroupRingElement;
            fn $m(self, rhs: GroupRingElement) -> GroupRingElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Fox derivative of `w` with respect to `generator`:
/// `d(g)/dg = 1`, `d(g^-1)/dg = -g^-1`, `d(uv) = du + u dv`.
pub fn fox_derivative(w: &Word, generator: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let letters = w.letters();
    for (i, &l) in letters.iter().enumerate() {
        if l.generator != generator {
            continue;
        }
        if l.inverse {
            out.add_term(Word(letters[..=i].to_vec()), -1);
        } else {
            out.add_term(Word(letters[..i].to_vec()), 1);
        }
    }
    out
}

/// A deficiency-one presentation with an abelianization onto `<t>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<char>,
    relations: Vec<(Word, Word)>,
    alpha: Vec<i64>,
}

impl Presentation {
    pub fn new(
        generators: Vec<char>,
        relations: Vec<(Word, Word)>,
        alpha: Vec<i64>,
    ) -> Result<Self> {
        for (i, &g) in generators.iter().enumerate() {
            if !g.is_ascii_lowercase() {
                return Err(syntax(
                    1,
                    1,
                    format!("generator `{g}` is not a lowercase letter"),
                ));
            }
            if generators[..i].contains(&g) {
                return Err(syntax(1, 1, format!("duplicate generator `{g}`")));
            }
        }
        if alpha.len() != generators.len() {
            return Err(Error::Internal(
                "alpha length differs from generator count".into(),
            ));
        }
        let expected = generators.len().saturating_sub(1);
        if generators.is_empty() || relations.len() != expected {
            return Err(Error::WrongDeficiency {
                generators: generators.len(),
                relations: relations.len(),
                expected,
            });
        }
        let relations: Vec<(Word, Word)> = relations
            .into_iter()
            .map(|(l, r)| (Word::free_reduce(l.0), Word::free_reduce(r.0)))
            .collect();
        for (index, (l, r)) in relations.iter().enumerate() {
            for w in [l, r] {
                if let Some(bad) = w.letters().iter().find(|x| x.generator >= generators.len()) {
                    return Err(Error::UnknownGenerator(format!("#{}", bad.generator)));
                }
            }
            let (lhs, rhs) = (l.abelianize(&alpha), r.abelianize(&alpha));
            if lhs != rhs {
                return Err(Error::Unbalanced { index, lhs, rhs });
            }
        }
        Ok(Presentation {
            generators,
            relations,
            alpha,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }

    /// Parses `(line number, line)` pairs; lines may carry `#` comments.
    pub fn parse_lines<'a, I>(lines: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, &'a str)>,
    {
        let mut generators: Option<Vec<char>> = None;
        let mut raw_rels: Vec<(usize, usize, &'a str)> = Vec::new();
        let mut raw_alpha: Vec<(usize, usize, &'a str)> = Vec::new();

        for (line_no, line) in lines {
            let line = strip_comment(line);
            if line.trim().is_empty() {
                continue;
            }
            let (key, body, body_col) = split_key(line, line_no)?;
            match key {
                "gens" => {
                    if generators.is_some() {
                        return Err(syntax(line_no, 1, "duplicate `gens:` line"));
                    }
                    let mut gens = Vec::new();
                    for (col, tok) in tokens(body, body_col) {
                        let mut chars = tok.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) if c.is_ascii_lowercase() => {
                                if gens.contains(&c) {
                                    return Err(syntax(
                                        line_no,
                                        col,
                                        format!("duplicate generator `{c}`"),
                                    ));
                                }
                                gens.push(c)
                            }
                            _ => {
                                return Err(syntax(
                                    line_no,
                                    col,
                                    format!("generator `{tok}` is not a single lowercase letter"),
                                ))
                            }
                        }
                    }
                    generators = Some(gens);
                }
                "rel" => raw_rels.push((line_no, body_col, body)),
                "alpha" => raw_alpha.push((line_no, body_col, body)),
                other => {
                    return Err(syntax(line_no, 1, format!("unknown key `{other}`")));
                }
            }
        }

        let generators = generators.ok_or_else(|| syntax(1, 1, "missing `gens:` line"))?;
        if generators.is_empty() {
            return Err(syntax(1, 1, "`gens:` lists no generators"));
        }

        let mut relations = Vec::new();
        for (line_no, col0, body) in raw_rels {
            let eq = body
                .find('=')
                .ok_or_else(|| syntax(line_no, col0, "relation needs `=`"))?;
            if body[eq + 1..].contains('=') {
                return Err(syntax(
                    line_no,
                    col0 + eq + 1 + body[eq + 1..].find('=').unwrap(),
                    "more than one `=`",
                ));
            }
            let (l, r) = (&body[..eq], &body[eq + 1..]);
            let lhs = parse_word_token(l, &generators, line_no, col0)?;
            let rhs = parse_word_token(r, &generators, line_no, col0 + eq + 1)?;
            relations.push((lhs, rhs));
        }

        let mut alpha = vec![1i64; generators.len()];
        for (line_no, col0, body) in raw_alpha {
            for (col, tok) in tokens(body, col0) {
                let (name, value) = tok
                    .split_once('=')
                    .ok_or_else(|| syntax(line_no, col, "expected `<letter>=<int>`"))?;
                let mut chars = name.chars();
                let g = match (chars.next(), chars.next()) {
                    (Some(c), None) => {
                        generators.iter().position(|&x| x == c).ok_or_else(|| {
                            syntax(line_no, col, format!("undeclared generator `{c}`"))
                        })?
                    }
                    _ => return Err(syntax(line_no, col, format!("bad generator `{name}`"))),
                };
                alpha[g] = value.parse().map_err(|_| {
                    syntax(
                        line_no,
                        col + name.len() + 1,
                        format!("bad integer `{value}`"),
                    )
                })?;
            }
        }

        Presentation::new(generators, relations, alpha)
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn generator_index(&self, name: char) -> Option<usize> {
        self.generators.iter().position(|&g| g == name)
    }

    /// Relator `lhs * rhs^-1`, freely reduced.
    pub fn relator(&self, index: usize) -> Word {
        let (l, r) = &self.relations[index];
        l * &r.inverse()
    }

    pub fn relators(&self) -> Vec<Word> {
        (0..self.relations.len()).map(|i| self.relator(i)).collect()
    }

    pub fn abelianize(&self, w: &Word) -> i64 {
        w.abelianize(&self.alpha)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format_with(&self.generators)
    }

    /// Same presentation with relation `index` replaced by the relation
    /// `w r w^-1 = 1`.
    pub fn with_conjugated_relator(&self, index: usize, w: &Word) -> Result<Self> {
        let mut relations = self.relations.clone();
        let r = &(w * &self.relator(index)) * &w.inverse();
        relations[index] = (r, Word::identity());
        Presentation::new(self.generators.clone(), relations, self.alpha.clone())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|c| c.to_string()).collect();
        writeln!(f, "gens: {}", gens.join(" "))?;
        for (l, r) in &self.relations {
            writeln!(f, "rel: {} = {}", self.format_word(l), self.format_word(r))?;
        }
        let alpha: Vec<String> = self
            .generators
            .iter()
            .zip(&self.alpha)
            .map(|(g, a)| format!("{g}={a}"))
            .collect();
        writeln!(f, "alpha: {}", alpha.join(" "))
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `key: body`, returning the 1-based column where `body` starts.
pub(crate) fn split_key(line: &str, line_no: usize) -> Result<(&str, &str, usize)> {
    let colon = line
        .find(':')
        .ok_or_else(|| syntax(line_no, 1, "expected `<key>: ...`"))?;
    Ok((line[..colon].trim(), &line[colon + 1..], colon + 2))
}

/// Whitespace-separated tokens with their 1-based columns.
pub(crate) fn tokens(body: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((col0 + s, &body[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((col0 + s, &body[s..]));
    }
    out
}

fn parse_word_token(text: &str, generators: &[char], line: usize, col0: usize) -> Result<Word> {
    let toks = tokens(text, col0);
    match toks.as_slice() {
        [] => Err(syntax(line, col0, "empty word")),
        [(col, tok)] => parse_word(tok, generators, line, *col),
        [_, (col, _), ..] => Err(syntax(line, *col, "unexpected whitespace inside word")),
    }
}

fn parse_word(text: &str, generators: &[char], line: usize, col0: usize) -> Result<Word> {
    if text == "1" {
        return Ok(Word::identity());
    }
    if text.is_empty() {
        return Err(syntax(line, col0, "empty word"));
    }
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.char_indices() {
        if !c.is_ascii_alphabetic() {
            return Err(syntax(
                line,
                col0 + i,
                format!("unexpected character `{c}`"),
            ));
        }
        let g = generators
            .iter()
            .position(|&g| g == c.to_ascii_lowercase())
            .ok_or_else(|| {
                syntax(
                    line,
                    col0 + i,
                    format!("undeclared generator `{}`", c.to_ascii_lowercase()),
                )
            })?;
        letters.push(Letter::new(g, c.is_ascii_uppercase()));
    }
    Ok(Word::free_reduce(letters))
}

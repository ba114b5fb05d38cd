//! Symbols, alphabets and words.
//!
//! A [`Word`] is a plain sequence of [`Symbol`] ids. It carries no reference to
//! its alphabet; the [`Alphabet`] is what turns ids back into characters.
//! Words are ordered shortlex (length first, then lexicographically by symbol
//! id), which is the vertex order used everywhere in this crate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::WordError;

/// Index of a generator inside an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub u8);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered list of distinct printable characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(chars: I) -> Result<Self, WordError> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if chars.len() > u8::MAX as usize {
            return Err(WordError::AlphabetTooLarge(chars.len()));
        }
        for (i, &c) in chars.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(WordError::UnprintableSymbol(c));
            }
            if chars[..i].contains(&c) {
                return Err(WordError::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { chars })
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Generators in presentation order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.chars.len()).map(|i| Symbol(i as u8))
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.chars.len()
    }

    pub fn symbol(&self, c: char) -> Result<Symbol, WordError> {
        self.chars
            .iter()
            .position(|&x| x == c)
            .map(|i| Symbol(i as u8))
            .ok_or(WordError::UnknownSymbol(c))
    }

    pub fn display(&self, s: Symbol) -> char {
        self.chars[s.index()]
    }

    /// Parses a word written as a run of symbol characters. Whitespace is
    /// ignored and `ε` (or an empty string) denotes the empty word.
    pub fn parse(&self, text: &str) -> Result<Word, WordError> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            if c.is_whitespace() || c == 'ε' {
                continue;
            }
            symbols.push(self.symbol(c)?);
        }
        Ok(Word(symbols))
    }

    /// Renders a word as a plain string; the empty word renders as `""`.
    pub fn render(&self, w: &Word) -> String {
        w.iter().map(|&s| self.display(s)).collect()
    }

    /// Like [`Alphabet::render`] but shows the empty word as `ε`.
    pub fn render_nonempty(&self, w: &Word) -> String {
        if w.is_empty() {
            "ε".to_string()
        } else {
            self.render(w)
        }
    }

    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        match w.iter().find(|s| !self.contains(**s)) {
            Some(s) => Err(WordError::SymbolOutOfRange(s.0, self.len())),
            None => Ok(()),
        }
    }
}

/// A finite sequence of symbols. Ordered shortlex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ids(ids: &[u8]) -> Self {
        Word(ids.iter().map(|&i| Symbol(i)).collect())
    }

    /// `s` repeated `n` times.
    pub fn power(s: Symbol, n: usize) -> Self {
        Word(vec![s; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn appended(&self, s: Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(s);
        Word(v)
    }

    pub fn prepended(&self, s: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Replaces `self[start..start + len]` with `replacement`.
    pub fn splice(&self, start: usize, len: usize, replacement: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + replacement.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[start + len..]);
        Word(v)
    }

    pub fn occurs_at(&self, pattern: &Word, pos: usize) -> bool {
        pos + pattern.len() <= self.len() && self.0[pos..pos + pattern.len()] == pattern.0[..]
    }

    /// Length of the run of `s` starting at `pos`.
    pub fn run_length(&self, s: Symbol, pos: usize) -> usize {
        self.0[pos.min(self.len())..]
            .iter()
            .take_while(|&&x| x == s)
            .count()
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Fallback rendering by symbol id, e.g. `[0 1 1 0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", s.0)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b']).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let a = ab();
        let w = a.parse("abba").unwrap();
        assert_eq!(w, Word::from_ids(&[0, 1, 1, 0]));
        assert_eq!(a.render(&w), "abba");
        assert_eq!(a.parse("").unwrap(), Word::empty());
        assert_eq!(a.parse("ε").unwrap(), Word::empty());
        assert_eq!(a.render_nonempty(&Word::empty()), "ε");
    }

    #[test]
    fn unknown_symbol_is_rejected() {
        assert!(matches!(ab().parse("abc"), Err(WordError::UnknownSymbol('c'))));
        assert!(ab().check(&Word::from_ids(&[0, 2])).is_err());
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(matches!(
            Alphabet::new(['a', 'a']),
            Err(WordError::DuplicateSymbol('a'))
        ));
        assert!(Alphabet::new([]).is_err());
    }

    #[test]
    fn shortlex_order() {
        let a = ab();
        let mut ws: Vec<Word> = ["ba", "b", "", "aa", "a", "ab"]
            .iter()
            .map(|s| a.parse(s).unwrap())
            .collect();
        ws.sort();
        let r: Vec<String> = ws.iter().map(|w| a.render(w)).collect();
        assert_eq!(r, ["", "a", "b", "aa", "ab", "ba"]);
    }

    #[test]
    fn splice_and_runs() {
        let a = ab();
        let w = a.parse("abbba").unwrap();
        assert_eq!(w.run_length(Symbol(1), 1), 3);
        assert_eq!(w.run_length(Symbol(1), 5), 0);
        let r = w.splice(0, 5, &a.parse("aba").unwrap());
        assert_eq!(a.render(&r), "aba");
        assert!(w.occurs_at(&a.parse("bba").unwrap(), 2));
        assert!(!w.occurs_at(&a.parse("bba").unwrap(), 3));
    }
}

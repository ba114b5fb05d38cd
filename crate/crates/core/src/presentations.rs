//! The two built-in monoids and their normal forms.
//!
//! `M = <a, b | a b^n a = a b a (n >= 2)>` is given by a single rule schema;
//! `N = <c, d | cdc = cd^2c = cd^4 = cd^3c^2 = cd^3cdc>` by four concrete
//! rules. Irreducible words of `M` have the shape `b^s`, `b^s u` or
//! `b^s u b^t` with `u` in `U_M` (a-blocks separated by single `b`s); those of
//! `N` have the shape `d^p`, `d^p v` or `d^p v (d^3 c)^q d^r` with `v` in
//! `U_N` and `0 <= r <= 3`. The bijection [`map_f`] sends the first family to
//! the second, preserving length.

use std::fmt;
use std::path::Path;

use crate::error::{ClassifyError, LoadError, SystemError, WordError};
use crate::parse::parse_presentation;
use crate::rewrite::{RewriteRule, RewritingSystem, RuleSchema};
use crate::word::{Alphabet, Symbol, Word};

pub const A: Symbol = Symbol(0);
pub const B: Symbol = Symbol(1);
pub const C: Symbol = Symbol(0);
pub const D: Symbol = Symbol(1);

fn alphabet_m() -> Alphabet {
    Alphabet::new(['a', 'b']).expect("valid alphabet")
}

fn alphabet_n() -> Alphabet {
    Alphabet::new(['c', 'd']).expect("valid alphabet")
}

fn word(alphabet: &Alphabet, s: &str) -> Word {
    alphabet.parse(s).expect("builtin word")
}

/// `a b^n a -> a b a` for all `n >= 2`.
pub fn system_m() -> RewritingSystem {
    let a = alphabet_m();
    let schema = RuleSchema {
        prefix: word(&a, "a"),
        pumped: B,
        min_exponent: 2,
        suffix: word(&a, "a"),
        rhs: word(&a, "aba"),
    };
    RewritingSystem::new(a, vec![], vec![schema]).expect("M is length-reducing")
}

pub fn system_n() -> RewritingSystem {
    let a = alphabet_n();
    let rules = ["cddc", "cdddd", "cdddcc", "cdddcdc"]
        .iter()
        .map(|lhs| RewriteRule::new(word(&a, lhs), word(&a, "cdc")))
        .collect();
    RewritingSystem::new(a, rules, vec![]).expect("N is length-reducing")
}

/// The finite subsystem `a b^n a -> a b a` for `n = 2..=n0`.
pub fn truncated_system_m(n0: usize) -> Result<RewritingSystem, SystemError> {
    if n0 < 2 {
        return Err(SystemError::InvalidParameter(format!(
            "truncation point must be at least 2, got {n0}"
        )));
    }
    let a = alphabet_m();
    let rhs = word(&a, "aba");
    let rules = (2..=n0)
        .map(|n| {
            let mut lhs = Word::power(B, n).prepended(A);
            lhs.push(A);
            RewriteRule::new(lhs, rhs.clone())
        })
        .collect();
    RewritingSystem::new(a, rules, vec![])
}

/// Resolves `builtin:M`, `builtin:N` or a path to a presentation file.
pub fn load_presentation(source: &str) -> Result<RewritingSystem, LoadError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return match name {
            "M" => Ok(system_m()),
            "N" => Ok(system_n()),
            _ => Err(LoadError::UnknownBuiltin(source.to_string())),
        };
    }
    let text = std::fs::read_to_string(Path::new(source)).map_err(|e| LoadError::Io {
        path: source.to_string(),
        message: e.to_string(),
    })?;
    parse_presentation(&text).map_err(|e| LoadError::Parse {
        path: source.to_string(),
        source: e,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalFormTag {
    Nfm1,
    Nfm2,
    Nfm3,
    Nfn1,
    Nfn2,
    Nfn3,
}

impl fmt::Display for NormalFormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NormalFormTag::Nfm1 => "NFM1",
            NormalFormTag::Nfm2 => "NFM2",
            NormalFormTag::Nfm3 => "NFM3",
            NormalFormTag::Nfn1 => "NFN1",
            NormalFormTag::Nfn2 => "NFN2",
            NormalFormTag::Nfn3 => "NFN3",
        };
        f.write_str(s)
    }
}

/// Decomposition of an irreducible word of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalFormClassM {
    /// `b^s`
    Nfm1 { s: usize },
    /// `b^s u`
    Nfm2 { s: usize, u: Word },
    /// `b^s u b^t`, `t > 0`
    Nfm3 { s: usize, u: Word, t: usize },
}

impl NormalFormClassM {
    pub fn tag(&self) -> NormalFormTag {
        match self {
            NormalFormClassM::Nfm1 { .. } => NormalFormTag::Nfm1,
            NormalFormClassM::Nfm2 { .. } => NormalFormTag::Nfm2,
            NormalFormClassM::Nfm3 { .. } => NormalFormTag::Nfm3,
        }
    }

    pub fn to_word(&self) -> Word {
        match self {
            NormalFormClassM::Nfm1 { s } => Word::power(B, *s),
            NormalFormClassM::Nfm2 { s, u } => Word::power(B, *s).concat(u),
            NormalFormClassM::Nfm3 { s, u, t } => {
                Word::power(B, *s).concat(u).concat(&Word::power(B, *t))
            }
        }
    }
}

/// Decomposition of an irreducible word of `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalFormClassN {
    /// `d^p`
    Nfn1 { p: usize },
    /// `d^p v`
    Nfn2 { p: usize, v: Word },
    /// `d^p v (d^3 c)^q d^r`, `0 <= r <= 3`, `q + r > 0`
    Nfn3 { p: usize, v: Word, q: usize, r: usize },
}

impl NormalFormClassN {
    pub fn tag(&self) -> NormalFormTag {
        match self {
            NormalFormClassN::Nfn1 { .. } => NormalFormTag::Nfn1,
            NormalFormClassN::Nfn2 { .. } => NormalFormTag::Nfn2,
            NormalFormClassN::Nfn3 { .. } => NormalFormTag::Nfn3,
        }
    }

    pub fn to_word(&self) -> Word {
        match self {
            NormalFormClassN::Nfn1 { p } => Word::power(D, *p),
            NormalFormClassN::Nfn2 { p, v } => Word::power(D, *p).concat(v),
            NormalFormClassN::Nfn3 { p, v, q, r } => {
                let mut w = Word::power(D, *p).concat(v);
                for _ in 0..*q {
                    w = w.concat(&Word::from(vec![D, D, D, C]));
                }
                w.concat(&Word::power(D, *r))
            }
        }
    }
}

/// Non-empty blocks of `x` separated by single `y`s, starting and ending with
/// `x`. With `(x, y) = (a, b)` this is `U_M`, with `(c, d)` it is `U_N`.
pub fn is_alternating_block_word(w: &Word, x: Symbol, y: Symbol) -> bool {
    let s = w.symbols();
    !s.is_empty()
        && s[0] == x
        && s[s.len() - 1] == x
        && s.iter().all(|&c| c == x || c == y)
        && !s.windows(2).any(|p| p[0] == y && p[1] == y)
}

fn reducible(system: &RewritingSystem, w: &Word) -> Result<(), ClassifyError> {
    let matches = system.find_matches(w)?;
    match matches.first() {
        Some(m) => Err(ClassifyError::Reducible {
            word: system.alphabet().render(w),
            rule_index: m.rule_index,
            position: m.position,
        }),
        None => Ok(()),
    }
}

fn check_binary(w: &Word) -> Result<(), WordError> {
    match w.iter().find(|s| s.0 > 1) {
        Some(s) => Err(WordError::SymbolOutOfRange(s.0, 2)),
        None => Ok(()),
    }
}

fn classify_m_with(system: &RewritingSystem, w: &Word) -> Result<NormalFormClassM, ClassifyError> {
    reducible(system, w)?;
    let s = w.run_length(B, 0);
    if s == w.len() {
        return Ok(NormalFormClassM::Nfm1 { s });
    }
    let t = w.symbols().iter().rev().take_while(|&&x| x == B).count();
    let u = w.slice(s, w.len() - t);
    if !is_alternating_block_word(&u, A, B) {
        return Err(ClassifyError::Malformed(system.alphabet().render(w)));
    }
    Ok(if t == 0 {
        NormalFormClassM::Nfm2 { s, u }
    } else {
        NormalFormClassM::Nfm3 { s, u, t }
    })
}

/// Splits an irreducible word of `M` into `b^s`, `u`, `b^t`.
pub fn classify_m(w: &Word) -> Result<NormalFormClassM, ClassifyError> {
    check_binary(w)?;
    classify_m_with(&system_m(), w)
}

fn classify_n_with(system: &RewritingSystem, w: &Word) -> Result<NormalFormClassN, ClassifyError> {
    reducible(system, w)?;
    let s = w.symbols();
    let p = w.run_length(D, 0);
    if p == w.len() {
        return Ok(NormalFormClassN::Nfn1 { p });
    }
    // v: c-blocks joined by single d's, taken greedily
    let mut pos = p;
    let v_end = loop {
        pos += w.run_length(C, pos);
        if pos + 1 < s.len() && s[pos] == D && s[pos + 1] == C {
            pos += 1;
        } else {
            break pos;
        }
    };
    let v = w.slice(p, v_end);
    let malformed = || ClassifyError::Malformed(system.alphabet().render(w));
    let mut rest = &s[v_end..];
    let mut q = 0;
    while rest.len() >= 4 && rest[..4] == [D, D, D, C] {
        q += 1;
        rest = &rest[4..];
    }
    if rest.len() > 3 || rest.iter().any(|&x| x != D) {
        return Err(malformed());
    }
    let r = rest.len();
    Ok(if q + r == 0 {
        NormalFormClassN::Nfn2 { p, v }
    } else {
        NormalFormClassN::Nfn3 { p, v, q, r }
    })
}

/// Splits an irreducible word of `N` into `d^p`, `v`, `(d^3 c)^q`, `d^r`.
pub fn classify_n(w: &Word) -> Result<NormalFormClassN, ClassifyError> {
    check_binary(w)?;
    classify_n_with(&system_n(), w)
}

/// Letter substitution `a -> c`, `b -> d`.
pub fn bar(u: &Word) -> Word {
    Word(
        u.iter()
            .map(|&s| if s == A { C } else { D })
            .collect(),
    )
}

/// Letter substitution `c -> a`, `d -> b`.
pub fn bar_inverse(v: &Word) -> Word {
    Word(
        v.iter()
            .map(|&s| if s == C { A } else { B })
            .collect(),
    )
}

/// Classifier and map pair with the two systems built once, for callers
/// that map many words.
#[derive(Debug, Clone)]
pub struct Bijection {
    m: RewritingSystem,
    n: RewritingSystem,
}

impl Default for Bijection {
    fn default() -> Self {
        Bijection {
            m: system_m(),
            n: system_n(),
        }
    }
}

impl Bijection {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classify_m(&self, w: &Word) -> Result<NormalFormClassM, ClassifyError> {
        check_binary(w)?;
        classify_m_with(&self.m, w)
    }

    pub fn classify_n(&self, w: &Word) -> Result<NormalFormClassN, ClassifyError> {
        check_binary(w)?;
        classify_n_with(&self.n, w)
    }

    pub fn forward_class(&self, w: &Word) -> Result<NormalFormClassN, ClassifyError> {
        Ok(match self.classify_m(w)? {
            NormalFormClassM::Nfm1 { s } => NormalFormClassN::Nfn1 { p: s },
            NormalFormClassM::Nfm2 { s, u } => NormalFormClassN::Nfn2 { p: s, v: bar(&u) },
            NormalFormClassM::Nfm3 { s, u, t } => NormalFormClassN::Nfn3 {
                p: s,
                v: bar(&u),
                q: t / 4,
                r: t % 4,
            },
        })
    }

    pub fn forward(&self, w: &Word) -> Result<Word, ClassifyError> {
        Ok(self.forward_class(w)?.to_word())
    }

    pub fn inverse(&self, w: &Word) -> Result<Word, ClassifyError> {
        let class = match self.classify_n(w)? {
            NormalFormClassN::Nfn1 { p } => NormalFormClassM::Nfm1 { s: p },
            NormalFormClassN::Nfn2 { p, v } => NormalFormClassM::Nfm2 {
                s: p,
                u: bar_inverse(&v),
            },
            NormalFormClassN::Nfn3 { p, v, q, r } => NormalFormClassM::Nfm3 {
                s: p,
                u: bar_inverse(&v),
                t: 4 * q + r,
            },
        };
        Ok(class.to_word())
    }
}

/// The length-preserving bijection from normal forms of `M` to those of `N`:
/// `b^s -> d^s`, `b^s u -> d^s ū`, `b^s u b^t -> d^s ū (d^3 c)^q d^r` with
/// `t = 4q + r`, `0 <= r <= 3`.
pub fn map_f(w: &Word) -> Result<Word, ClassifyError> {
    Bijection::new().forward(w)
}

pub fn map_f_inverse(w: &Word) -> Result<Word, ClassifyError> {
    Bijection::new().inverse(w)
}

/// All irreducible words of length at most `max_len`, in shortlex order.
///
/// Grows words one symbol at a time and only extends irreducible words;
/// any extension of a reducible word is reducible since rules match factors.
pub fn enumerate_normal_forms(system: &RewritingSystem, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut stack = vec![Word::empty()];
    while let Some(w) = stack.pop() {
        if w.len() == max_len {
            continue;
        }
        for g in system.alphabet().symbols() {
            let child = w.appended(g);
            if system.is_irreducible_unchecked(&child) {
                out.push(child.clone());
                stack.push(child);
            }
        }
    }
    out.sort();
    out
}

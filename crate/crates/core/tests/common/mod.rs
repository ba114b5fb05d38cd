//! String-level rewriting oracles, written without using the crate's
//! matcher or reducer.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monoid {
    M,
    N,
}

impl Monoid {
    pub fn letters(self) -> [char; 2] {
        match self {
            Monoid::M => ['a', 'b'],
            Monoid::N => ['c', 'd'],
        }
    }
}

const N_RULES: [(&str, &str); 4] = [
    ("cddc", "cdc"),
    ("cdddd", "cdc"),
    ("cdddcc", "cdc"),
    ("cdddcdc", "cdc"),
];

/// Every word reachable from `w` in one rewriting step, over all rule
/// instances and positions.
pub fn successors(monoid: Monoid, w: &str) -> Vec<String> {
    let chars: Vec<char> = w.chars().collect();
    let mut out = Vec::new();
    match monoid {
        Monoid::M => {
            for i in 0..chars.len() {
                for j in i + 3..chars.len() {
                    let factor: String = chars[i..=j].iter().collect();
                    let inner = &factor[1..factor.len() - 1];
                    if factor.starts_with('a')
                        && factor.ends_with('a')
                        && inner.len() >= 2
                        && inner.chars().all(|c| c == 'b')
                    {
                        let before: String = chars[..i].iter().collect();
                        let after: String = chars[j + 1..].iter().collect();
                        out.push(format!("{before}aba{after}"));
                    }
                }
            }
        }
        Monoid::N => {
            for (lhs, rhs) in N_RULES {
                let mut start = 0;
                while let Some(off) = w[start..].find(lhs) {
                    let p = start + off;
                    out.push(format!("{}{}{}", &w[..p], rhs, &w[p + lhs.len()..]));
                    start = p + 1;
                }
            }
        }
    }
    out
}

pub fn is_irreducible(monoid: Monoid, w: &str) -> bool {
    successors(monoid, w).is_empty()
}

/// All irreducible words reachable from `w` by any sequence of choices.
pub fn endpoints(
    monoid: Monoid,
    w: &str,
    memo: &mut HashMap<String, BTreeSet<String>>,
) -> BTreeSet<String> {
    if let Some(e) = memo.get(w) {
        return e.clone();
    }
    let next = successors(monoid, w);
    let result = if next.is_empty() {
        BTreeSet::from([w.to_string()])
    } else {
        let mut acc = BTreeSet::new();
        for n in next {
            acc.extend(endpoints(monoid, &n, memo));
        }
        acc
    };
    memo.insert(w.to_string(), result.clone());
    result
}

/// All words over two letters of length at most `max_len`, shortlex.
pub fn all_words(letters: [char; 2], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for w in &layer {
            for c in letters {
                next.push(format!("{w}{c}"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn irreducible_words(monoid: Monoid, max_len: usize) -> Vec<String> {
    all_words(monoid.letters(), max_len)
        .into_iter()
        .filter(|w| is_irreducible(monoid, w))
        .collect()
}

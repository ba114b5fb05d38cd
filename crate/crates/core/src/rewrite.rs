//! Length-reducing string rewriting: rules, exponent schemas, reduction to
//! normal form, critical pairs and local confluence.
//!
//! A [`RewritingSystem`] holds finitely many concrete rules plus
//! [`RuleSchema`]s, each of which stands for the infinite family
//! `prefix · pumped^n · suffix -> rhs` for all `n >= min_exponent`. Systems
//! are validated at construction: every rule and every schema instance must
//! be strictly length-reducing, so reduction always terminates.
//!
//! Matches are reported in (position, rule index) order, where rule indices
//! count concrete rules first and schemas after them. A schema match always
//! consumes the maximal run of the pumped symbol at its position.

use std::fmt;
use std::ops::Deref;

use crate::error::{SystemError, WordError};
use crate::word::{Alphabet, Symbol, Word};

/// Default instantiation bound for schemas when checking confluence.
pub const DEFAULT_SCHEMA_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        RewriteRule { lhs, rhs }
    }
}

/// `prefix · pumped^n · suffix -> rhs` for every `n >= min_exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleSchema {
    pub prefix: Word,
    pub pumped: Symbol,
    pub min_exponent: usize,
    pub suffix: Word,
    pub rhs: Word,
}

impl RuleSchema {
    /// The left-hand side with exponent `n`.
    pub fn instance(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(self.prefix.len() + n + self.suffix.len());
        v.extend_from_slice(self.prefix.symbols());
        v.extend(std::iter::repeat_n(self.pumped, n));
        v.extend_from_slice(self.suffix.symbols());
        Word(v)
    }

    fn shortest_lhs_len(&self) -> usize {
        self.prefix.len() + self.min_exponent + self.suffix.len()
    }
}

/// Identifies the rule used for one rewrite: index into rules-then-schemas,
/// plus the exponent for schema instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleRef {
    pub index: usize,
    pub exponent: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Match {
    pub rule_index: usize,
    pub position: usize,
    pub matched_length: usize,
    pub exponent: Option<usize>,
}

/// Outcome of the length-reducing check. Indices count rules first, then
/// schemas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthReport {
    pub checked: usize,
    pub failing: Vec<usize>,
}

impl LengthReport {
    pub fn check(rules: &[RewriteRule], schemas: &[RuleSchema]) -> Self {
        let mut failing = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.len() <= r.rhs.len() {
                failing.push(i);
            }
        }
        for (i, s) in schemas.iter().enumerate() {
            if s.shortest_lhs_len() <= s.rhs.len() {
                failing.push(rules.len() + i);
            }
        }
        LengthReport {
            checked: rules.len() + schemas.len(),
            failing,
        }
    }

    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

impl fmt::Display for LengthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({}/{} rules length-reducing)", self.checked, self.checked)
        } else {
            write!(f, "fail (rules {:?} are not length-reducing)", self.failing)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// A proper suffix of one left-hand side is a proper prefix of another.
    Overlap,
    /// One left-hand side occurs inside another.
    Containment,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalPair {
    pub source: Word,
    pub left_result: Word,
    pub right_result: Word,
    pub kind: PairKind,
    pub left_rule: RuleRef,
    pub right_rule: RuleRef,
    /// Overlap length for [`PairKind::Overlap`], start offset of the inner
    /// left-hand side for [`PairKind::Containment`].
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonJoiningPair {
    pub pair: CriticalPair,
    pub left_normal_form: Word,
    pub right_normal_form: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    /// Bound used for schema instantiation, `None` when there are no schemas.
    pub schema_bound: Option<usize>,
    pub overlaps: usize,
    pub containments: usize,
    /// Overlap pairs whose common normal form has the shape `xyxyx`.
    pub alternating_resolutions: usize,
    pub failures: Vec<NonJoiningPair>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn pairs_checked(&self) -> usize {
        self.overlaps + self.containments
    }

    /// Every overlap resolves to a word `xyxyx` with `x != y`.
    pub fn uniform_shape(&self) -> bool {
        self.passed() && self.alternating_resolutions == self.overlaps
    }

    pub fn is_bounded(&self) -> bool {
        self.schema_bound.is_some()
    }
}

/// `xyxyx` with `x != y`.
pub fn is_alternating_five(w: &Word) -> bool {
    let s = w.symbols();
    s.len() == 5 && s[0] == s[2] && s[2] == s[4] && s[1] == s[3] && s[0] != s[1]
}

/// One applied rewrite in a reduction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub applied: Match,
    pub result: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritingSystem {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    schemas: Vec<RuleSchema>,
}

impl RewritingSystem {
    /// Validates symbols, non-empty left-hand sides and strict length
    /// reduction. Non-length-reducing systems are refused here.
    pub fn new(
        alphabet: Alphabet,
        rules: Vec<RewriteRule>,
        schemas: Vec<RuleSchema>,
    ) -> Result<Self, SystemError> {
        for (i, r) in rules.iter().enumerate() {
            alphabet.check(&r.lhs)?;
            alphabet.check(&r.rhs)?;
            if r.lhs.is_empty() {
                return Err(SystemError::EmptyLhs(i));
            }
        }
        for (i, s) in schemas.iter().enumerate() {
            let idx = rules.len() + i;
            alphabet.check(&s.prefix)?;
            alphabet.check(&s.suffix)?;
            alphabet.check(&s.rhs)?;
            if !alphabet.contains(s.pumped) {
                return Err(WordError::SymbolOutOfRange(s.pumped.0, alphabet.len()).into());
            }
            if s.min_exponent == 0 {
                return Err(SystemError::ZeroExponent(idx));
            }
            if s.suffix.symbols().first() == Some(&s.pumped) {
                return Err(SystemError::AmbiguousSchema(idx));
            }
        }
        let report = LengthReport::check(&rules, &schemas);
        if !report.passed() {
            return Err(SystemError::NotLengthReducing(report));
        }
        Ok(RewritingSystem {
            alphabet,
            rules,
            schemas,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn schemas(&self) -> &[RuleSchema] {
        &self.schemas
    }

    /// Number of concrete rules plus schemas.
    pub fn rule_count(&self) -> usize {
        self.rules.len() + self.schemas.len()
    }

    pub fn check_length_reducing(&self) -> LengthReport {
        LengthReport::check(&self.rules, &self.schemas)
    }

    /// Human-readable form of rule `index`, e.g. `cddc -> cdc` or
    /// `ab{n}a -> aba (n >= 2)`.
    pub fn describe_rule(&self, index: usize) -> String {
        let a = &self.alphabet;
        if index < self.rules.len() {
            let r = &self.rules[index];
            format!("{} -> {}", a.render(&r.lhs), a.render_nonempty(&r.rhs))
        } else {
            let s = &self.schemas[index - self.rules.len()];
            format!(
                "{}{}{{n}}{} -> {} (n >= {})",
                a.render(&s.prefix),
                a.display(s.pumped),
                a.render(&s.suffix),
                a.render_nonempty(&s.rhs),
                s.min_exponent
            )
        }
    }

    fn rhs_of(&self, rule_index: usize) -> &Word {
        if rule_index < self.rules.len() {
            &self.rules[rule_index].rhs
        } else {
            &self.schemas[rule_index - self.rules.len()].rhs
        }
    }

    fn match_at(&self, w: &Word, pos: usize, rule_index: usize) -> Option<Match> {
        if rule_index < self.rules.len() {
            let lhs = &self.rules[rule_index].lhs;
            w.occurs_at(lhs, pos).then_some(Match {
                rule_index,
                position: pos,
                matched_length: lhs.len(),
                exponent: None,
            })
        } else {
            let s = &self.schemas[rule_index - self.rules.len()];
            if !w.occurs_at(&s.prefix, pos) {
                return None;
            }
            let run_start = pos + s.prefix.len();
            let n = w.run_length(s.pumped, run_start);
            if n < s.min_exponent || !w.occurs_at(&s.suffix, run_start + n) {
                return None;
            }
            Some(Match {
                rule_index,
                position: pos,
                matched_length: s.prefix.len() + n + s.suffix.len(),
                exponent: Some(n),
            })
        }
    }

    fn first_match(&self, w: &Word) -> Option<Match> {
        (0..w.len()).find_map(|pos| (0..self.rule_count()).find_map(|r| self.match_at(w, pos, r)))
    }

    /// Every match in `w`, ordered by position then rule index.
    pub fn find_matches(&self, w: &Word) -> Result<Vec<Match>, WordError> {
        self.alphabet.check(w)?;
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for r in 0..self.rule_count() {
                if let Some(m) = self.match_at(w, pos, r) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    /// Rewrites the matched factor of `w` with the rule's right-hand side.
    pub fn apply(&self, w: &Word, m: &Match) -> Word {
        w.splice(m.position, m.matched_length, self.rhs_of(m.rule_index))
    }

    /// Applies the first match in (position, rule index) order.
    pub fn single_step(&self, w: &Word) -> Result<Option<Word>, WordError> {
        self.alphabet.check(w)?;
        Ok(self.first_match(w).map(|m| self.apply(w, &m)))
    }

    pub fn is_irreducible(&self, w: &Word) -> Result<bool, WordError> {
        self.alphabet.check(w)?;
        Ok(self.first_match(w).is_none())
    }

    pub(crate) fn is_irreducible_unchecked(&self, w: &Word) -> bool {
        self.first_match(w).is_none()
    }

    pub(crate) fn normal_form_unchecked(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        while let Some(m) = self.first_match(&cur) {
            cur = self.apply(&cur, &m);
        }
        cur
    }

    /// Reduces to the irreducible descendant reached by first-match steps.
    /// Terminates within `w.len()` steps.
    pub fn normal_form(&self, w: &Word) -> Result<Word, WordError> {
        self.alphabet.check(w)?;
        Ok(self.normal_form_unchecked(w))
    }

    /// [`RewritingSystem::normal_form`] together with every step taken.
    pub fn normal_form_trace(&self, w: &Word) -> Result<(Word, Vec<Step>), WordError> {
        self.alphabet.check(w)?;
        let mut cur = w.clone();
        let mut steps = Vec::new();
        while let Some(m) = self.first_match(&cur) {
            cur = self.apply(&cur, &m);
            steps.push(Step {
                applied: m,
                result: cur.clone(),
            });
        }
        Ok((cur, steps))
    }

    fn effective_bound(&self, schema_bound: usize) -> usize {
        self.schemas
            .iter()
            .map(|s| s.min_exponent)
            .max()
            .map_or(schema_bound, |m| m.max(schema_bound))
    }

    /// Concrete rules followed by schema instances with exponents
    /// `min_exponent..=schema_bound`.
    fn instantiate(&self, schema_bound: usize) -> Vec<(RuleRef, Word, &Word)> {
        let mut out: Vec<(RuleRef, Word, &Word)> = self
            .rules
            .iter()
            .enumerate()
            .map(|(i, r)| {
                (
                    RuleRef {
                        index: i,
                        exponent: None,
                    },
                    r.lhs.clone(),
                    &r.rhs,
                )
            })
            .collect();
        for (i, s) in self.schemas.iter().enumerate() {
            for n in s.min_exponent..=schema_bound {
                out.push((
                    RuleRef {
                        index: self.rules.len() + i,
                        exponent: Some(n),
                    },
                    s.instance(n),
                    &s.rhs,
                ));
            }
        }
        out
    }

    /// All overlap and containment pairs among the instantiated left-hand
    /// sides. `schema_bound` is raised to the largest `min_exponent` if it is
    /// smaller.
    pub fn critical_pairs(&self, schema_bound: usize) -> Vec<CriticalPair> {
        let inst = self.instantiate(self.effective_bound(schema_bound));
        let mut out = Vec::new();
        for (i, (ri, u, v)) in inst.iter().enumerate() {
            for (j, (rj, z, t)) in inst.iter().enumerate() {
                // u = pq, z = qr with p, q, r non-empty
                for k in 1..u.len().min(z.len()) {
                    if u.symbols()[u.len() - k..] != z.symbols()[..k] {
                        continue;
                    }
                    let r = z.slice(k, z.len());
                    let p = u.slice(0, u.len() - k);
                    out.push(CriticalPair {
                        source: u.concat(&r),
                        left_result: v.concat(&r),
                        right_result: p.concat(t),
                        kind: PairKind::Overlap,
                        left_rule: *ri,
                        right_rule: *rj,
                        offset: k,
                    });
                }
                // u = p z q
                if i == j || z.len() > u.len() {
                    continue;
                }
                for pos in 0..=u.len() - z.len() {
                    if u.occurs_at(z, pos) {
                        out.push(CriticalPair {
                            source: u.clone(),
                            left_result: (*v).clone(),
                            right_result: u.splice(pos, z.len(), t),
                            kind: PairKind::Containment,
                            left_rule: *ri,
                            right_rule: *rj,
                            offset: pos,
                        });
                    }
                }
            }
        }
        out
    }

    /// Reduces both sides of every critical pair and compares normal forms.
    /// For noetherian systems this decides confluence of the instantiated
    /// rules.
    pub fn check_local_confluence(&self, schema_bound: usize) -> ConfluenceReport {
        let bound = self.effective_bound(schema_bound);
        let mut report = ConfluenceReport {
            schema_bound: (!self.schemas.is_empty()).then_some(bound),
            overlaps: 0,
            containments: 0,
            alternating_resolutions: 0,
            failures: Vec::new(),
        };
        for pair in self.critical_pairs(bound) {
            match pair.kind {
                PairKind::Overlap => report.overlaps += 1,
                PairKind::Containment => report.containments += 1,
            }
            let l = self.normal_form_unchecked(&pair.left_result);
            let r = self.normal_form_unchecked(&pair.right_result);
            if l != r {
                report.failures.push(NonJoiningPair {
                    pair,
                    left_normal_form: l,
                    right_normal_form: r,
                });
            } else if pair.kind == PairKind::Overlap && is_alternating_five(&l) {
                report.alternating_resolutions += 1;
            }
        }
        report
    }

    /// Runs the confluence check and, if it passes, marks the system
    /// complete at that bound.
    pub fn certify(self, schema_bound: usize) -> Result<CompleteSystem, Box<ConfluenceReport>> {
        let report = self.check_local_confluence(schema_bound);
        if !report.passed() {
            return Err(Box::new(report));
        }
        let bound = report.schema_bound;
        Ok(CompleteSystem {
            system: self,
            schema_bound: bound,
        })
    }
}

/// A rewriting system whose critical pairs have been checked to join.
/// Operations that rely on unique normal forms take this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteSystem {
    system: RewritingSystem,
    schema_bound: Option<usize>,
}

impl CompleteSystem {
    /// Bound at which schemas were instantiated, `None` if the system has
    /// no schemas (the certificate is then unconditional).
    pub fn schema_bound(&self) -> Option<usize> {
        self.schema_bound
    }

    pub fn system(&self) -> &RewritingSystem {
        &self.system
    }

    pub fn into_inner(self) -> RewritingSystem {
        self.system
    }

    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<bool, WordError> {
        Ok(self.system.normal_form(w1)? == self.system.normal_form(w2)?)
    }
}

impl Deref for CompleteSystem {
    type Target = RewritingSystem;

    fn deref(&self) -> &RewritingSystem {
        &self.system
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{system_m, system_n};

    fn w(sys: &RewritingSystem, s: &str) -> Word {
        sys.alphabet().parse(s).unwrap()
    }

    fn r(sys: &RewritingSystem, x: &Word) -> String {
        sys.alphabet().render(x)
    }

    fn two_rule_system() -> RewritingSystem {
        let a = Alphabet::new(['a', 'b']).unwrap();
        let rules = vec![
            RewriteRule::new(a.parse("ab").unwrap(), a.parse("a").unwrap()),
            RewriteRule::new(a.parse("ba").unwrap(), a.parse("b").unwrap()),
        ];
        RewritingSystem::new(a, rules, vec![]).unwrap()
    }

    #[test]
    fn find_matches_examples() {
        let n = system_n();
        let ms = n.find_matches(&w(&n, "cddc")).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!((ms[0].rule_index, ms[0].position), (0, 0));
        assert_eq!(n.describe_rule(0), "cddc -> cdc");

        let m = system_m();
        assert!(m.find_matches(&w(&m, "aba")).unwrap().is_empty());
        let ms = m.find_matches(&w(&m, "abbba")).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].position, 0);
        assert_eq!(ms[0].exponent, Some(3));
        assert_eq!(ms[0].matched_length, 5);
    }

    #[test]
    fn schema_consumes_maximal_run() {
        let m = system_m();
        let ms = m.find_matches(&w(&m, "abbbba")).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].exponent, Some(4));
    }

    #[test]
    fn out_of_alphabet_input_is_rejected() {
        let m = system_m();
        let bad = Word::from_ids(&[0, 5]);
        assert!(m.find_matches(&bad).is_err());
        assert!(m.normal_form(&bad).is_err());
        assert!(m.single_step(&bad).is_err());
    }

    #[test]
    fn single_step_examples() {
        let n = system_n();
        let m = system_m();
        assert_eq!(r(&n, &n.single_step(&w(&n, "cddc")).unwrap().unwrap()), "cdc");
        assert_eq!(m.single_step(&w(&m, "bbb")).unwrap(), None);
        assert_eq!(r(&n, &n.single_step(&w(&n, "cdddcc")).unwrap().unwrap()), "cdc");
    }

    #[test]
    fn normal_form_examples() {
        let n = system_n();
        let m = system_m();
        assert_eq!(r(&n, &n.normal_form(&w(&n, "cdddcdc")).unwrap()), "cdc");
        assert_eq!(m.normal_form(&Word::empty()).unwrap(), Word::empty());
        assert_eq!(r(&m, &m.normal_form(&w(&m, "abbabba")).unwrap()), "ababa");
    }

    #[test]
    fn trace_records_each_step() {
        let m = system_m();
        let (nf, steps) = m.normal_form_trace(&w(&m, "abbabba")).unwrap();
        assert_eq!(r(&m, &nf), "ababa");
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].applied.position, 0);
        assert_eq!(r(&m, &steps[0].result), "ababba");
        assert_eq!(steps[1].applied.position, 2);
    }

    #[test]
    fn irreducibility_examples() {
        let n = system_n();
        let m = system_m();
        assert!(m.is_irreducible(&w(&m, "aba")).unwrap());
        assert!(!n.is_irreducible(&w(&n, "cdddd")).unwrap());
        assert!(m.is_irreducible(&w(&m, "ab")).unwrap());
    }

    #[test]
    fn length_reducing_checks() {
        let n = system_n();
        let rep = n.check_length_reducing();
        assert!(rep.passed());
        assert_eq!(rep.checked, 4);
        assert!(system_m().check_length_reducing().passed());

        let a = Alphabet::new(['a', 'b']).unwrap();
        let bad = vec![RewriteRule::new(a.parse("a").unwrap(), a.parse("ab").unwrap())];
        let rep = LengthReport::check(&bad, &[]);
        assert!(!rep.passed());
        assert_eq!(rep.failing, vec![0]);
        match RewritingSystem::new(a, bad, vec![]) {
            Err(SystemError::NotLengthReducing(r)) => assert_eq!(r.failing, vec![0]),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn equal_length_rule_is_refused() {
        let a = Alphabet::new(['a', 'b']).unwrap();
        let rules = vec![RewriteRule::new(a.parse("ab").unwrap(), a.parse("ba").unwrap())];
        assert!(matches!(
            RewritingSystem::new(a, rules, vec![]),
            Err(SystemError::NotLengthReducing(_))
        ));
    }

    #[test]
    fn schema_validation() {
        let a = Alphabet::new(['a', 'b']).unwrap();
        let schema = |min, suffix: &str| RuleSchema {
            prefix: a.parse("a").unwrap(),
            pumped: Symbol(1),
            min_exponent: min,
            suffix: a.parse(suffix).unwrap(),
            rhs: a.parse("a").unwrap(),
        };
        assert!(matches!(
            RewritingSystem::new(a.clone(), vec![], vec![schema(0, "a")]),
            Err(SystemError::ZeroExponent(0))
        ));
        assert!(matches!(
            RewritingSystem::new(a.clone(), vec![], vec![schema(2, "ba")]),
            Err(SystemError::AmbiguousSchema(0))
        ));
        // a b a -> a is length-reducing at n = 1
        assert!(RewritingSystem::new(a.clone(), vec![], vec![schema(1, "a")]).is_ok());
    }

    #[test]
    fn critical_pairs_of_n_include_self_overlap() {
        let n = system_n();
        let pairs = n.critical_pairs(1);
        let hit = pairs.iter().find(|p| r(&n, &p.source) == "cddcddc").unwrap();
        assert_eq!(hit.kind, PairKind::Overlap);
        assert_eq!(r(&n, &hit.left_result), "cdcddc");
        assert_eq!(r(&n, &hit.right_result), "cddcdc");
    }

    #[test]
    fn disjoint_rules_have_no_critical_pairs() {
        let a = Alphabet::new(['a', 'b']).unwrap();
        let rules = vec![RewriteRule::new(a.parse("ab").unwrap(), a.parse("b").unwrap())];
        let s = RewritingSystem::new(a, rules, vec![]).unwrap();
        assert!(s.critical_pairs(1).is_empty());
    }

    #[test]
    fn critical_pairs_of_m_at_bound_three() {
        let m = system_m();
        let pairs = m.critical_pairs(3);
        let hit = pairs
            .iter()
            .find(|p| r(&m, &p.source) == "abbabbba")
            .expect("ab2a / ab3a overlap");
        assert_eq!(hit.left_rule.exponent, Some(2));
        assert_eq!(hit.right_rule.exponent, Some(3));
        assert_eq!(r(&m, &m.normal_form(&hit.left_result).unwrap()), "ababa");
        assert_eq!(r(&m, &m.normal_form(&hit.right_result).unwrap()), "ababa");
        // instances 2 and 3, each pair overlaps only at the shared a
        assert_eq!(pairs.len(), 4);
        assert!(pairs.iter().all(|p| p.kind == PairKind::Overlap));
    }

    #[test]
    fn small_bound_is_raised_to_min_exponent() {
        let m = system_m();
        let rep = m.check_local_confluence(1);
        assert_eq!(rep.schema_bound, Some(2));
        assert_eq!(rep.overlaps, 1);
    }

    #[test]
    fn confluence_of_builtins() {
        let n = system_n().check_local_confluence(DEFAULT_SCHEMA_BOUND);
        assert!(n.passed());
        assert!(n.uniform_shape());
        assert_eq!(n.schema_bound, None);
        let m = system_m().check_local_confluence(12);
        assert!(m.passed());
        assert!(m.uniform_shape());
        assert_eq!(m.overlaps, 11 * 11);
    }

    #[test]
    fn two_rule_system_is_not_confluent() {
        let s = two_rule_system();
        let rep = s.check_local_confluence(1);
        assert!(!rep.passed());
        let f = rep
            .failures
            .iter()
            .find(|f| r(&s, &f.pair.source) == "aba")
            .unwrap();
        let mut nfs = [r(&s, &f.left_normal_form), r(&s, &f.right_normal_form)];
        nfs.sort();
        assert_eq!(nfs, ["a".to_string(), "aa".to_string()]);
        assert!(s.certify(1).is_err());
    }

    #[test]
    fn words_equal_on_certified_systems() {
        let m = system_m().certify(12).unwrap();
        assert_eq!(m.schema_bound(), Some(12));
        assert!(m.words_equal(&w(&m, "abbba"), &w(&m, "aba")).unwrap());
        let n = system_n().certify(12).unwrap();
        assert_eq!(n.schema_bound(), None);
        assert!(!n.words_equal(&w(&n, "cd"), &w(&n, "dc")).unwrap());
        assert!(n.words_equal(&w(&n, "cdddcc"), &w(&n, "cddc")).unwrap());
    }

    #[test]
    fn alternating_shape() {
        assert!(is_alternating_five(&Word::from_ids(&[0, 1, 0, 1, 0])));
        assert!(!is_alternating_five(&Word::from_ids(&[0, 0, 0, 0, 0])));
        assert!(!is_alternating_five(&Word::from_ids(&[0, 1, 0])));
    }
}

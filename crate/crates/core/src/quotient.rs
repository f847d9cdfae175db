//! Equality in the quotient of the free group by the brace congruence.
//!
//! The congruence is generated by `(x . y) x ~ (y : x) y` for generators
//! `x, y` and closed under products and both actions. Equality is decided by
//! a three-valued semi-procedure:
//!
//! * `Equal` comes with a derivation that replays move by move,
//! * `Distinct` comes with a finite brace and generator map separating the
//!   two images,
//! * `Unknown` reports the budget that ran out.
//!
//! One move (see [`neighbors`]) either replaces a factor of a word using a
//! cyclic piece of a defining relator `(x . y) x y' (y : x)'`, or rewrites
//! the child of a formal letter and recomputes the letter through the word
//! actions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::actions::{act, Op};
use crate::braces::{enumerate_braces_capped, BraceTable};
use crate::error::{Error, Result};
use crate::hom::{all_maps, GeneratorMap};
use crate::terms::{Core, Letter, Word};

/// Search and refutation limits. Every field must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Words expanded by the bidirectional search.
    pub max_steps: usize,
    /// Longest intermediate word kept.
    pub max_word_len: usize,
    /// Deepest letter kept.
    pub max_stratum: u32,
    /// Largest finite brace tried for refutation.
    pub max_brace_order: usize,
    /// Generator maps tried for refutation, over all braces.
    pub max_maps: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_steps: 20_000,
            max_word_len: 16,
            max_stratum: 5,
            max_brace_order: 4,
            max_maps: 10_000,
        }
    }
}

impl Budget {
    /// Braces above this order are not enumerated for refutation.
    pub const MAX_LIBRARY_ORDER: usize = 6;

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("max_steps", self.max_steps),
            ("max_word_len", self.max_word_len),
            ("max_stratum", self.max_stratum as usize),
            ("max_brace_order", self.max_brace_order),
            ("max_maps", self.max_maps),
        ];
        for (name, v) in fields {
            if v == 0 {
                return Err(Error::Input(format!("budget field {name} must be positive")));
            }
        }
        if self.max_brace_order > Budget::MAX_LIBRARY_ORDER {
            return Err(Error::Input(format!(
                "max_brace_order above {} is not supported",
                Budget::MAX_LIBRARY_ORDER
            )));
        }
        Ok(())
    }

    fn admits(&self, w: &Word) -> bool {
        w.len() <= self.max_word_len && w.max_stratum() <= self.max_stratum
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_steps={} max_word_len={} max_stratum={} max_brace_order={} max_maps={}",
            self.max_steps, self.max_word_len, self.max_stratum, self.max_brace_order, self.max_maps
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathStep {
    /// Letter index inside a word.
    At(usize),
    /// Left child of a formal letter.
    Left,
    /// Right child of a formal letter.
    Right,
}

/// Where a move applies: letter indices alternating with child selectors,
/// ending at the start index of the replaced factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position(pub Vec<PathStep>);

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            match s {
                PathStep::At(k) => write!(f, "{k}")?,
                PathStep::Left => f.write_str("l")?,
                PathStep::Right => f.write_str("r")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Position> {
        if s == "-" {
            return Ok(Position::default());
        }
        s.split('/')
            .map(|part| match part {
                "l" => Ok(PathStep::Left),
                "r" => Ok(PathStep::Right),
                k => k
                    .parse()
                    .map(PathStep::At)
                    .map_err(|_| Error::Input(format!("bad position component {k:?}"))),
            })
            .collect::<Result<_>>()
            .map(Position)
    }
}

/// The defining relation a move used, named by its two generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleId {
    pub x: String,
    pub y: String,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rel({},{})", self.x, self.y)
    }
}

impl std::str::FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<RuleId> {
        let inner = s
            .strip_prefix("rel(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Input(format!("bad rule id {s:?}")))?;
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| Error::Input(format!("bad rule id {s:?}")))?;
        Ok(RuleId {
            x: x.trim().to_owned(),
            y: y.trim().to_owned(),
        })
    }
}

/// One congruence step out of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub rule: RuleId,
    pub position: Position,
    pub word: Word,
}

/// A cyclic piece `u -> v^-1` of a relator `u v`.
#[derive(Debug, Clone)]
struct Piece {
    rule: RuleId,
    from: Vec<Letter>,
    to: Word,
}

/// `(x . y) x y' (y : x)'`, freely reduced.
fn relator(x: &Letter, y: &Letter) -> Word {
    let d = crate::actions::letter_dot(x, y);
    let c = crate::actions::letter_colon(y, x);
    Word::reduce([d, x.clone(), y.star(), c.star()])
}

/// Relator pieces indexed by their first letter.
#[derive(Debug, Clone, Default)]
pub struct Relations {
    by_first: HashMap<Letter, Vec<Piece>>,
    generators: Vec<String>,
}

impl Relations {
    /// All defining relations over the given generator symbols.
    pub fn over(symbols: &[String]) -> Result<Relations> {
        let mut syms: Vec<String> = symbols.to_vec();
        syms.sort();
        syms.dedup();
        let gens: Vec<Letter> = syms.iter().map(|s| Letter::gen(s)).collect::<Result<_>>()?;
        let mut by_first: HashMap<Letter, Vec<Piece>> = HashMap::new();
        for x in &gens {
            for y in &gens {
                let rule = RuleId {
                    x: x.symbol().unwrap().to_owned(),
                    y: y.symbol().unwrap().to_owned(),
                };
                let r = relator(x, y);
                let mut seen = BTreeSet::new();
                for cyc in [r.clone(), r.inv()] {
                    let ls = cyc.letters();
                    let len = ls.len();
                    for rot in 0..len {
                        let rotated: Vec<Letter> =
                            ls[rot..].iter().chain(&ls[..rot]).cloned().collect();
                        for k in 1..=len {
                            let from = rotated[..k].to_vec();
                            let to = Word::reduce(rotated[k..].iter().cloned()).inv();
                            if !seen.insert((from.clone(), to.clone())) {
                                continue;
                            }
                            by_first.entry(from[0].clone()).or_default().push(Piece {
                                rule: rule.clone(),
                                from,
                                to,
                            });
                        }
                    }
                }
            }
        }
        Ok(Relations {
            by_first,
            generators: syms,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Every word one move away from `w`, in a deterministic order.
    pub fn neighbors(&self, w: &Word) -> Vec<Move> {
        let mut out = Vec::new();
        self.collect(w, &mut Vec::new(), &mut out);
        out
    }

    fn collect(&self, w: &Word, path: &mut Vec<PathStep>, out: &mut Vec<Move>) {
        let ls = w.letters();
        for (i, l) in ls.iter().enumerate() {
            if let Some(pieces) = self.by_first.get(l) {
                for p in pieces {
                    let k = p.from.len();
                    if i + k <= ls.len() && ls[i..i + k] == p.from[..] {
                        let word = Word::reduce(
                            ls[..i]
                                .iter()
                                .chain(p.to.letters())
                                .chain(&ls[i + k..])
                                .cloned(),
                        );
                        if word != *w {
                            let mut position = path.clone();
                            position.push(PathStep::At(i));
                            out.push(Move {
                                rule: p.rule.clone(),
                                position: Position(position),
                                word,
                            });
                        }
                    }
                }
            }
            let (op, left, right) = match l.core() {
                Core::Gen(_) => continue,
                Core::Dot(a, b) => (Op::Dot, a, b),
                Core::Colon(a, b) => (Op::Colon, a, b),
            };
            for (side, child) in [(PathStep::Left, left), (PathStep::Right, right)] {
                path.push(PathStep::At(i));
                path.push(side);
                let mut inner = Vec::new();
                self.collect(&Word::letter(child.clone()), path, &mut inner);
                path.pop();
                path.pop();
                for m in inner {
                    let replaced = match side {
                        PathStep::Left => act(op, &m.word, &Word::letter(right.clone())),
                        _ => act(op, &Word::letter(left.clone()), &m.word),
                    };
                    let replaced = if l.is_positive() {
                        replaced
                    } else {
                        replaced.inv()
                    };
                    let word = Word::reduce(
                        ls[..i]
                            .iter()
                            .chain(replaced.letters())
                            .chain(&ls[i + 1..])
                            .cloned(),
                    );
                    if word != *w {
                        out.push(Move {
                            rule: m.rule,
                            position: m.position,
                            word,
                        });
                    }
                }
            }
        }
    }
}

/// Neighbors of `w` under the relations over its own generators.
pub fn neighbors(w: &Word) -> Vec<Move> {
    Relations::over(&w.symbols())
        .map(|r| r.neighbors(w))
        .unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: RuleId,
    pub position: Position,
    /// The step was found from the right-hand side: the previous word is a
    /// neighbor of this one rather than the other way round.
    pub reversed: bool,
    pub word: Word,
}

/// A chain `start = w_0 ~ w_1 ~ .. ~ w_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub generators: Vec<String>,
    pub start: Word,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn end(&self) -> &Word {
        self.steps.last().map_or(&self.start, |s| &s.word)
    }

    /// Checks every step against freshly computed neighbors.
    pub fn replay(&self) -> Result<()> {
        let rel = Relations::over(&self.generators)?;
        let mut prev = &self.start;
        for (i, s) in self.steps.iter().enumerate() {
            let (from, to) = if s.reversed {
                (&s.word, prev)
            } else {
                (prev, &s.word)
            };
            let ok = rel
                .neighbors(from)
                .iter()
                .any(|m| m.rule == s.rule && m.position == s.position && m.word == *to);
            if !ok {
                return Err(Error::Invariant(format!(
                    "step {} ({} @ {}) does not replay",
                    i + 1,
                    s.rule,
                    s.position
                )));
            }
            prev = &s.word;
        }
        Ok(())
    }

    /// One line per step: `<rule-id> @ <position> : <word>`, after a
    /// `start @ - : <word>` line. Reversed steps carry a `~` prefix.
    pub fn render(&self) -> String {
        let mut s = format!("start @ - : {}\n", self.start);
        for st in &self.steps {
            let tilde = if st.reversed { "~" } else { "" };
            s.push_str(&format!("{tilde}{} @ {} : {}\n", st.rule, st.position, st.word));
        }
        s
    }

    /// Reads a rendered trace back; generators are taken from the words.
    pub fn parse(text: &str) -> Result<Derivation> {
        let mut start = None;
        let mut steps = Vec::new();
        let mut symbols = BTreeSet::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (head, word) = line
                .split_once(" : ")
                .ok_or_else(|| Error::Input(format!("bad trace line {line:?}")))?;
            let (rule, pos) = head
                .split_once(" @ ")
                .ok_or_else(|| Error::Input(format!("bad trace line {line:?}")))?;
            let word = crate::expr::parse_word(word)?;
            symbols.extend(word.symbols());
            if rule == "start" {
                if start.is_some() {
                    return Err(Error::Input("duplicate start line".into()));
                }
                start = Some(word);
                continue;
            }
            let (reversed, rule) = match rule.strip_prefix('~') {
                Some(r) => (true, r),
                None => (false, rule),
            };
            let rule: RuleId = rule.parse()?;
            symbols.insert(rule.x.clone());
            symbols.insert(rule.y.clone());
            steps.push(Step {
                rule,
                position: pos.parse()?,
                reversed,
                word,
            });
        }
        Ok(Derivation {
            generators: symbols.into_iter().collect(),
            start: start.ok_or_else(|| Error::Input("missing start line".into()))?,
            steps,
        })
    }
}

/// A finite brace and map under which two words have different images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub map: GeneratorMap,
    pub left: usize,
    pub right: usize,
}

impl Refutation {
    /// Re-evaluates both words and checks they still separate.
    pub fn recheck(&self, a: &Word, b: &Word) -> Result<bool> {
        let (l, r) = (self.map.eval_word(a)?, self.map.eval_word(b)?);
        Ok(l == self.left && r == self.right && l != r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted {
    pub budget: Budget,
    pub expanded: usize,
    pub visited: usize,
    pub maps_tried: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqResult {
    Equal(Derivation),
    Distinct(Refutation),
    Unknown(Exhausted),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl EqResult {
    pub fn verdict(&self) -> Verdict {
        match self {
            EqResult::Equal(_) => Verdict::Equal,
            EqResult::Distinct(_) => Verdict::Distinct,
            EqResult::Unknown(_) => Verdict::Unknown,
        }
    }
}

impl fmt::Display for EqResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqResult::Equal(d) => {
                writeln!(f, "Equal ({} step(s))", d.steps.len())?;
                f.write_str(&d.render())
            }
            EqResult::Distinct(r) => {
                writeln!(f, "Distinct")?;
                writeln!(f, "images: {} != {}", r.left, r.right)?;
                for (k, v) in r.map.assignment() {
                    writeln!(f, "{k} = {v}")?;
                }
                f.write_str(&crate::braces::format_brace(r.map.target()))
            }
            EqResult::Unknown(e) => {
                writeln!(f, "Unknown")?;
                writeln!(
                    f,
                    "expanded {} word(s), visited {}, tried {} map(s)",
                    e.expanded, e.visited, e.maps_tried
                )?;
                writeln!(f, "budget: {}", e.budget)
            }
        }
    }
}

type LibraryCache = Mutex<HashMap<usize, Arc<Vec<Arc<BraceTable>>>>>;

/// Brace tables of order `n` up to isomorphism, computed once per process.
pub fn library(n: usize) -> Result<Arc<Vec<Arc<BraceTable>>>> {
    static CACHE: OnceLock<LibraryCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let braces: Vec<Arc<BraceTable>> = enumerate_braces_capped(n, true, Budget::MAX_LIBRARY_ORDER)?
        .into_iter()
        .map(Arc::new)
        .collect();
    let braces = Arc::new(braces);
    cache.lock().unwrap().entry(n).or_insert(Arc::clone(&braces));
    Ok(braces)
}

fn symbols_of(a: &Word, b: &Word) -> Vec<String> {
    let mut s: BTreeSet<String> = a.symbols().into_iter().collect();
    s.extend(b.symbols());
    s.into_iter().collect()
}

/// Looks for a finite brace and map separating the images of `a` and `b`.
/// Braces are tried by increasing order, maps lexicographically.
pub fn refute(a: &Word, b: &Word, budget: &Budget) -> Result<(Option<Refutation>, usize)> {
    let symbols = symbols_of(a, b);
    let mut tried = 0;
    for n in 1..=budget.max_brace_order {
        for t in library(n)?.iter() {
            for map in all_maps(t, &symbols) {
                if tried >= budget.max_maps {
                    return Ok((None, tried));
                }
                tried += 1;
                let (l, r) = (map.eval_word(a)?, map.eval_word(b)?);
                if l != r {
                    return Ok((
                        Some(Refutation {
                            map,
                            left: l,
                            right: r,
                        }),
                        tried,
                    ));
                }
            }
        }
    }
    Ok((None, tried))
}

/// Outcome of the bidirectional search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Derivation),
    Exhausted { expanded: usize, visited: usize },
}

fn tie_key(w: &Word) -> (usize, String) {
    (w.len(), w.to_string())
}

struct Side {
    parent: HashMap<Word, Option<(Word, RuleId, Position)>>,
    frontier: Vec<Word>,
}

impl Side {
    fn new(root: &Word) -> Side {
        let mut parent = HashMap::new();
        parent.insert(root.clone(), None);
        Side {
            parent,
            frontier: vec![root.clone()],
        }
    }

    /// Moves from `w` back to the root: (rule, position, parent word) per hop.
    fn chain(&self, w: &Word) -> Vec<(RuleId, Position, Word, Word)> {
        let mut out = Vec::new();
        let mut cur = w.clone();
        while let Some(Some((p, rule, pos))) = self.parent.get(&cur) {
            out.push((rule.clone(), pos.clone(), p.clone(), cur.clone()));
            cur = p.clone();
        }
        out
    }
}

/// Breadth-first search from both ends for a chain of moves joining `a` and `b`.
pub fn search_derivation(a: &Word, b: &Word, budget: &Budget) -> Result<Search> {
    budget.validate()?;
    let generators = symbols_of(a, b);
    let rel = Relations::over(&generators)?;
    let build = |fwd: &Side, bwd: &Side, meet: &Word| {
        let mut steps: Vec<Step> = fwd
            .chain(meet)
            .into_iter()
            .rev()
            .map(|(rule, position, _, child)| Step {
                rule,
                position,
                reversed: false,
                word: child,
            })
            .collect();
        for (rule, position, parent, _) in bwd.chain(meet) {
            steps.push(Step {
                rule,
                position,
                reversed: true,
                word: parent,
            });
        }
        Derivation {
            generators: generators.clone(),
            start: a.clone(),
            steps,
        }
    };

    let mut fwd = Side::new(a);
    let mut bwd = Side::new(b);
    if a == b {
        return Ok(Search::Found(build(&fwd, &bwd, a)));
    }
    let mut expanded = 0;
    loop {
        if fwd.frontier.is_empty() && bwd.frontier.is_empty() {
            break;
        }
        let forward = !fwd.frontier.is_empty()
            && (bwd.frontier.is_empty() || fwd.frontier.len() <= bwd.frontier.len());
        let (this, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let mut layer = std::mem::take(&mut this.frontier);
        layer.sort_by_cached_key(tie_key);
        let room = budget.max_steps - expanded;
        let truncated = layer.len() > room;
        layer.truncate(room);
        expanded += layer.len();
        let expansions: Vec<Vec<Move>> = layer.par_iter().map(|w| rel.neighbors(w)).collect();
        let mut meet = None;
        'layer: for (w, moves) in layer.iter().zip(expansions) {
            for m in moves {
                if !budget.admits(&m.word) || this.parent.contains_key(&m.word) {
                    continue;
                }
                this.parent
                    .insert(m.word.clone(), Some((w.clone(), m.rule, m.position)));
                if other.parent.contains_key(&m.word) {
                    meet = Some(m.word);
                    break 'layer;
                }
                this.frontier.push(m.word);
            }
        }
        if let Some(meet) = meet {
            return Ok(Search::Found(build(&fwd, &bwd, &meet)));
        }
        if truncated || expanded >= budget.max_steps {
            break;
        }
    }
    Ok(Search::Exhausted {
        expanded,
        visited: fwd.parent.len() + bwd.parent.len(),
    })
}

/// Decides `a ~ b` within `budget`.
pub fn decide_eq(a: &Word, b: &Word, budget: &Budget) -> Result<EqResult> {
    budget.validate()?;
    if a == b {
        return Ok(EqResult::Equal(Derivation {
            generators: symbols_of(a, b),
            start: a.clone(),
            steps: Vec::new(),
        }));
    }
    let (refutation, maps_tried) = refute(a, b, budget)?;
    if let Some(r) = refutation {
        return Ok(EqResult::Distinct(r));
    }
    match search_derivation(a, b, budget)? {
        Search::Found(d) => Ok(EqResult::Equal(d)),
        Search::Exhausted { expanded, visited } => Ok(EqResult::Unknown(Exhausted {
            budget: *budget,
            expanded,
            visited,
            maps_tried,
        })),
    }
}

/// Outcome of checking `(a . b) a = (b : a) b` in finite images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eq1Report {
    pub checked: usize,
    pub violation: Option<Refutation>,
}

impl Eq1Report {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// The two sides of the brace equation for words: `((a . b) a, (b : a) b)`.
pub fn brace_equation_sides(a: &Word, b: &Word) -> (Word, Word) {
    let lhs = act(Op::Dot, a, b).mul(a);
    let rhs = act(Op::Colon, b, a).mul(b);
    (lhs, rhs)
}

/// Evaluates both sides of the brace equation for `a, b` under every brace in
/// `library` and every map of the generators of `a, b` (at most `max_maps`
/// in total). A violation would contradict the universal property.
pub fn check_eq1_in_quotient(
    a: &Word,
    b: &Word,
    library: &[Arc<BraceTable>],
    max_maps: usize,
) -> Result<Eq1Report> {
    let (lhs, rhs) = brace_equation_sides(a, b);
    let symbols = symbols_of(a, b);
    let mut checked = 0;
    for t in library {
        for map in all_maps(t, &symbols) {
            if checked >= max_maps {
                return Ok(Eq1Report {
                    checked,
                    violation: None,
                });
            }
            checked += 1;
            let (l, r) = (map.eval_word(&lhs)?, map.eval_word(&rhs)?);
            if l != r {
                return Ok(Eq1Report {
                    checked,
                    violation: Some(Refutation {
                        map,
                        left: l,
                        right: r,
                    }),
                });
            }
        }
    }
    Ok(Eq1Report {
        checked,
        violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Letter {
        Letter::gen(s).unwrap()
    }

    fn dxy() -> Word {
        Word::reduce([Letter::dot(g("x"), g("y")).unwrap(), g("x")])
    }

    fn cyx() -> Word {
        Word::reduce([Letter::colon(g("y"), g("x")).unwrap(), g("y")])
    }

    #[test]
    fn base_relation_is_a_neighbor() {
        let ns = neighbors(&dxy());
        assert!(ns.iter().any(|m| m.word == cyx()));
        let back = neighbors(&cyx());
        assert!(back.iter().any(|m| m.word == dxy()));
    }

    #[test]
    fn generator_alone_has_no_two_letter_redex() {
        let z = Word::letter(g("z"));
        assert!(neighbors(&z).is_empty());
        let rel = Relations::over(&["x".into(), "y".into()]).unwrap();
        assert!(rel.neighbors(&z).is_empty());
    }

    #[test]
    fn nested_rewrites_replay() {
        // ((x . y) x) . z  as a single formal letter, then times x
        let inner = Letter::dot(Letter::dot(g("x"), g("y")).unwrap(), g("x")).unwrap();
        let w = Word::reduce([inner, g("x")]);
        let rel = Relations::over(&w.symbols()).unwrap();
        let ns = rel.neighbors(&w);
        let nested: Vec<&Move> = ns.iter().filter(|m| m.position.0.len() > 1).collect();
        assert!(!nested.is_empty());
        for m in nested {
            let d = Derivation {
                generators: w.symbols(),
                start: w.clone(),
                steps: vec![Step {
                    rule: m.rule.clone(),
                    position: m.position.clone(),
                    reversed: false,
                    word: m.word.clone(),
                }],
            };
            d.replay().unwrap();
        }
    }

    #[test]
    fn canonical_pair_is_equal() {
        let r = decide_eq(&dxy(), &cyx(), &Budget::default()).unwrap();
        let EqResult::Equal(d) = r else {
            panic!("expected Equal, got {r}")
        };
        d.replay().unwrap();
        assert_eq!(d.end(), &cyx());
        assert_eq!(d.steps.len(), 1);
    }

    #[test]
    fn distinct_generators() {
        let r = decide_eq(&Word::letter(g("x")), &Word::letter(g("y")), &Budget::default()).unwrap();
        let EqResult::Distinct(w) = r else {
            panic!("expected Distinct, got {r}")
        };
        assert_eq!(w.map.target().order(), 2);
        assert!(w
            .recheck(&Word::letter(g("x")), &Word::letter(g("y")))
            .unwrap());
    }

    #[test]
    fn reflexive() {
        let w = dxy();
        let r = decide_eq(&w, &w, &Budget::default()).unwrap();
        assert!(matches!(&r, EqResult::Equal(d) if d.steps.is_empty()));
    }

    #[test]
    fn zero_budget_rejected() {
        let b = Budget {
            max_steps: 0,
            ..Budget::default()
        };
        assert!(decide_eq(&dxy(), &cyx(), &b).is_err());
        let b = Budget {
            max_maps: 0,
            ..Budget::default()
        };
        assert!(decide_eq(&dxy(), &cyx(), &b).is_err());
    }

    #[test]
    fn trace_text_round_trip() {
        let EqResult::Equal(d) = decide_eq(&dxy(), &cyx(), &Budget::default()).unwrap() else {
            unreachable!()
        };
        let text = d.render();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().starts_with("rel(x,y) @ 0 : "));
        let back = Derivation::parse(&text).unwrap();
        assert_eq!(back.steps, d.steps);
        back.replay().unwrap();
    }

    #[test]
    fn tampered_trace_fails_replay() {
        let EqResult::Equal(mut d) = decide_eq(&dxy(), &cyx(), &Budget::default()).unwrap() else {
            unreachable!()
        };
        d.steps[0].word = Word::letter(g("y"));
        assert!(d.replay().is_err());
    }

    #[test]
    fn position_text() {
        let p = Position(vec![PathStep::At(3), PathStep::Right, PathStep::At(0)]);
        assert_eq!(p.to_string(), "3/r/0");
        assert_eq!("3/r/0".parse::<Position>().unwrap(), p);
        assert_eq!("-".parse::<Position>().unwrap(), Position::default());
    }

    #[test]
    fn eq1_examples() {
        let lib: Vec<Arc<BraceTable>> = (1..=4)
            .flat_map(|n| library(n).unwrap().iter().cloned().collect::<Vec<_>>())
            .collect();
        let x = Word::letter(g("x"));
        let y = Word::letter(g("y"));
        assert!(check_eq1_in_quotient(&x, &y, &lib, usize::MAX).unwrap().holds());
        let one = Word::identity();
        assert!(check_eq1_in_quotient(&one, &one, &lib, usize::MAX).unwrap().holds());
        let a = Word::reduce([g("x"), g("y")]);
        let b = Word::reduce([g("y").star(), g("x")]);
        let r = check_eq1_in_quotient(&a, &b, &lib, usize::MAX).unwrap();
        assert!(r.holds());
        assert!(r.checked > 0);
    }
}

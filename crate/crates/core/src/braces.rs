//! Finite skew braces given by explicit tables.
//!
//! A [`BraceTable`] is a group `(A, o)` on `{0..n-1}` with identity `0`
//! together with two left actions `.` and `:` of the group on `A`, subject to
//!
//! ```text
//! (a . b) o a = (b : a) o b      for all a, b.
//! ```
//!
//! [`TwoOpBrace`] is the additive/multiplicative presentation
//! `a o (b + c) = a o b - a + a o c`; it is only used to enumerate braces a
//! second, independent way.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default largest order accepted by [`enumerate_braces`].
pub const DEFAULT_ORDER_CAP: usize = 4;

/// An `n x n` operation table stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Table> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Input("empty table".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::Input(format!("entry {v} in row {i} is out of range")));
                }
            }
            cells.extend_from_slice(row);
        }
        Ok(Table { n, cells })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Table {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Table { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.n)
    }

    /// Relabels by `sigma`: the new table satisfies `t'(s a, s b) = s t(a, b)`.
    pub fn relabel(&self, sigma: &[usize]) -> Table {
        let mut cells = vec![0; self.cells.len()];
        for a in 0..self.n {
            for b in 0..self.n {
                cells[sigma[a] * self.n + sigma[b]] = sigma[self.get(a, b)];
            }
        }
        Table { n: self.n, cells }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Associativity(usize, usize, usize),
    Identity(usize),
    Inverse(usize),
    DotIdentity(usize),
    DotComposition(usize, usize, usize),
    ColonIdentity(usize),
    ColonComposition(usize, usize, usize),
    /// `(a . b) o a != (b : a) o b`
    BraceEquation(usize, usize),
    PlusGroup,
    CircGroup,
    Compatibility(usize, usize, usize),
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Axiom::Associativity(a, b, c) => write!(f, "associativity fails at ({a}, {b}, {c})"),
            Axiom::Identity(a) => write!(f, "0 is not an identity for {a}"),
            Axiom::Inverse(a) => write!(f, "{a} has no inverse"),
            Axiom::DotIdentity(c) => write!(f, "0 . {c} != {c}"),
            Axiom::DotComposition(a, b, c) => {
                write!(f, "(({a} o {b}) . {c}) != ({a} . ({b} . {c}))")
            }
            Axiom::ColonIdentity(c) => write!(f, "0 : {c} != {c}"),
            Axiom::ColonComposition(a, b, c) => {
                write!(f, "(({a} o {b}) : {c}) != ({a} : ({b} : {c}))")
            }
            Axiom::BraceEquation(a, b) => {
                write!(f, "({a} . {b}) o {a} != ({b} : {a}) o {b}")
            }
            Axiom::PlusGroup => write!(f, "additive table is not a group"),
            Axiom::CircGroup => write!(f, "multiplicative table is not a group"),
            Axiom::Compatibility(a, b, c) => {
                write!(f, "{a} o ({b} + {c}) != {a} o {b} - {a} + {a} o {c}")
            }
        }
    }
}

/// Outcome of checking a table structure: every violated axiom instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Axiom>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        writeln!(f, "invalid: {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Group axioms for a table with `0` as the identity.
pub fn group_violations(t: &Table) -> Vec<Axiom> {
    let n = t.order();
    let mut out = Vec::new();
    for a in 0..n {
        if t.get(0, a) != a || t.get(a, 0) != a {
            out.push(Axiom::Identity(a));
        }
        if !(0..n).any(|b| t.get(a, b) == 0 && t.get(b, a) == 0) {
            out.push(Axiom::Inverse(a));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t.get(a, b);
            for c in 0..n {
                if t.get(ab, c) != t.get(a, t.get(b, c)) {
                    out.push(Axiom::Associativity(a, b, c));
                }
            }
        }
    }
    out
}

/// A finite group with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTable {
    table: Table,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Table) -> Result<GroupTable> {
        let bad = group_violations(&table);
        if let Some(v) = bad.first() {
            return Err(Error::Input(format!("not a group: {v}")));
        }
        Ok(GroupTable::trusted(table))
    }

    fn trusted(table: Table) -> GroupTable {
        let n = table.order();
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table.get(a, b) == 0).unwrap_or(0))
            .collect();
        GroupTable { table, inverse }
    }

    pub fn cyclic(n: usize) -> GroupTable {
        GroupTable::trusted(Table::from_fn(n, |a, b| (a + b) % n))
    }

    /// The symmetric group on `k` points; permutations in lexicographic order,
    /// so the identity is element `0`.
    pub fn symmetric(k: usize) -> GroupTable {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let n = perms.len();
        GroupTable::trusted(Table::from_fn(n, |a, b| {
            // (a o b)(i) = a(b(i))
            let comp: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            index(&comp)
        }))
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// A finite skew brace: group table plus the two action tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraceTable {
    circ: Table,
    dot: Table,
    colon: Table,
    inverse: Vec<usize>,
}

impl BraceTable {
    /// Builds a table structure after shape checks only; see [`verify_brace`].
    pub fn from_tables(circ: Table, dot: Table, colon: Table) -> Result<BraceTable> {
        let n = circ.order();
        if dot.order() != n || colon.order() != n {
            return Err(Error::Input(format!(
                "table orders differ: circ {n}, dot {}, colon {}",
                dot.order(),
                colon.order()
            )));
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| circ.get(a, b) == 0).unwrap_or(0))
            .collect();
        Ok(BraceTable {
            circ,
            dot,
            colon,
            inverse,
        })
    }

    pub fn from_rows(
        circ: &[Vec<usize>],
        dot: &[Vec<usize>],
        colon: &[Vec<usize>],
    ) -> Result<BraceTable> {
        BraceTable::from_tables(
            Table::from_rows(circ)?,
            Table::from_rows(dot)?,
            Table::from_rows(colon)?,
        )
    }

    pub fn order(&self) -> usize {
        self.circ.order()
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.get(a, b)
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot.get(a, b)
    }

    #[inline]
    pub fn colon(&self, a: usize, b: usize) -> usize {
        self.colon.get(a, b)
    }

    /// Group inverse; meaningful once the table has been verified.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn circ_table(&self) -> &Table {
        &self.circ
    }

    pub fn dot_table(&self) -> &Table {
        &self.dot
    }

    pub fn colon_table(&self) -> &Table {
        &self.colon
    }

    pub fn relabel(&self, sigma: &[usize]) -> BraceTable {
        BraceTable::from_tables(
            self.circ.relabel(sigma),
            self.dot.relabel(sigma),
            self.colon.relabel(sigma),
        )
        .expect("relabelling preserves shape")
    }

    fn key(&self) -> (&Table, &Table, &Table) {
        (&self.circ, &self.dot, &self.colon)
    }
}

/// Checks the group axioms, both action laws and the brace equation.
pub fn verify_brace(t: &BraceTable) -> Report {
    let n = t.order();
    let mut violations = group_violations(&t.circ);
    for c in 0..n {
        if t.dot(0, c) != c {
            violations.push(Axiom::DotIdentity(c));
        }
        if t.colon(0, c) != c {
            violations.push(Axiom::ColonIdentity(c));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t.circ(a, b);
            for c in 0..n {
                if t.dot(ab, c) != t.dot(a, t.dot(b, c)) {
                    violations.push(Axiom::DotComposition(a, b, c));
                }
                if t.colon(ab, c) != t.colon(a, t.colon(b, c)) {
                    violations.push(Axiom::ColonComposition(a, b, c));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if t.circ(t.dot(a, b), a) != t.circ(t.colon(b, a), b) {
                violations.push(Axiom::BraceEquation(a, b));
            }
        }
    }
    Report { violations }
}

/// The brace on a group with `a . b = b` and `b : a = b o a o b^-1`.
pub fn trivial_brace(group: &Table) -> Result<BraceTable> {
    let g = GroupTable::new(group.clone())?;
    Ok(trivial_brace_of(&g))
}

pub fn trivial_brace_of(g: &GroupTable) -> BraceTable {
    let n = g.order();
    BraceTable::from_tables(
        g.table().clone(),
        Table::from_fn(n, |_, b| b),
        Table::from_fn(n, |b, a| g.op(g.op(b, a), g.inv(b))),
    )
    .expect("square tables")
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Bijections of `0..n` fixing `0`.
fn pointed_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    permutations(n - 1)
        .into_iter()
        .map(|p| std::iter::once(0).chain(p.into_iter().map(|i| i + 1)).collect())
        .collect()
}

/// Every group table on `{0..n-1}` with identity `0`, in lexicographic order.
pub fn enumerate_groups(n: usize) -> Vec<GroupTable> {
    if n == 0 {
        return Vec::new();
    }
    const EMPTY: usize = usize::MAX;
    let mut cells = vec![EMPTY; n * n];
    for a in 0..n {
        cells[a] = a;
        cells[a * n] = a;
    }
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();

    fn consistent(cells: &[usize], n: usize, a: usize, b: usize) -> bool {
        const EMPTY: usize = usize::MAX;
        let v = cells[a * n + b];
        // latin
        for k in 0..n {
            if k != b && cells[a * n + k] == v {
                return false;
            }
            if k != a && cells[k * n + b] == v {
                return false;
            }
        }
        // associativity on every triple whose entries are all known
        for x in 0..n {
            for y in 0..n {
                let xy = cells[x * n + y];
                if xy == EMPTY {
                    continue;
                }
                for z in 0..n {
                    let yz = cells[y * n + z];
                    if yz == EMPTY {
                        continue;
                    }
                    let l = cells[xy * n + z];
                    let r = cells[x * n + yz];
                    if l != EMPTY && r != EMPTY && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn go(cells: &mut Vec<usize>, n: usize, free: &[(usize, usize)], out: &mut Vec<GroupTable>) {
        let Some((&(a, b), rest)) = free.split_first() else {
            let table = Table {
                n,
                cells: cells.clone(),
            };
            debug_assert!(group_violations(&table).is_empty());
            out.push(GroupTable::trusted(table));
            return;
        };
        for v in 0..n {
            cells[a * n + b] = v;
            if consistent(cells, n, a, b) {
                go(cells, n, rest, out);
            }
        }
        cells[a * n + b] = usize::MAX;
    }

    let mut out = Vec::new();
    go(&mut cells, n, &free, &mut out);
    out
}

/// All left actions of `g` on its own underlying set that fix `0`, as tables
/// `act(a, c)`. Found by assigning a permutation to one element at a time and
/// closing under products.
fn enumerate_pointed_actions(g: &GroupTable) -> Vec<Table> {
    let n = g.order();
    let perms = pointed_permutations(n);
    let identity: Vec<usize> = (0..n).collect();

    fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
        q.iter().map(|&i| p[i]).collect()
    }

    // Closes a partial assignment under the homomorphism law; false on conflict.
    fn close(g: &GroupTable, rho: &mut [Option<Vec<usize>>]) -> bool {
        let n = g.order();
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    let (Some(pa), Some(pb)) = (&rho[a], &rho[b]) else {
                        continue;
                    };
                    let prod = compose(pa, pb);
                    let ab = g.op(a, b);
                    match &rho[ab] {
                        Some(existing) if *existing != prod => return false,
                        Some(_) => {}
                        None => {
                            rho[ab] = Some(prod);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn go(
        g: &GroupTable,
        perms: &[Vec<usize>],
        rho: &[Option<Vec<usize>>],
        out: &mut Vec<Table>,
    ) {
        let Some(next) = rho.iter().position(Option::is_none) else {
            let n = g.order();
            out.push(Table::from_fn(n, |a, c| rho[a].as_ref().unwrap()[c]));
            return;
        };
        for p in perms {
            let mut trial = rho.to_vec();
            trial[next] = Some(p.clone());
            if close(g, &mut trial) {
                go(g, perms, &trial, out);
            }
        }
    }

    let mut rho: Vec<Option<Vec<usize>>> = vec![None; n];
    rho[0] = Some(identity);
    let mut out = Vec::new();
    go(g, &perms, &rho, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Colon table forced by the brace equation: `b : a = (a . b) o a o b^-1`.
fn solve_colon(g: &GroupTable, dot: &Table) -> Table {
    Table::from_fn(g.order(), |b, a| g.op(g.op(dot.get(a, b), a), g.inv(b)))
}

/// Every brace table on `{0..n-1}` with identity `0`, for a given group.
pub fn braces_over_group(g: &GroupTable) -> Vec<BraceTable> {
    enumerate_pointed_actions(g)
        .into_iter()
        .filter_map(|dot| {
            let colon = solve_colon(g, &dot);
            let t = BraceTable::from_tables(g.table().clone(), dot, colon).ok()?;
            verify_brace(&t).is_valid().then_some(t)
        })
        .collect()
}

/// Lexicographically smallest relabelling over bijections fixing `0`.
pub fn canonical_form(t: &BraceTable) -> BraceTable {
    pointed_permutations(t.order())
        .iter()
        .map(|s| t.relabel(s))
        .min_by(|a, b| a.key().cmp(&b.key()))
        .expect("at least the identity bijection")
}

pub fn enumerate_braces(n: usize, up_to_iso: bool) -> Result<Vec<BraceTable>> {
    enumerate_braces_capped(n, up_to_iso, DEFAULT_ORDER_CAP)
}

/// All brace tables of order `n`, sorted; with `up_to_iso`, the canonical
/// representative of each isomorphism class.
pub fn enumerate_braces_capped(n: usize, up_to_iso: bool, cap: usize) -> Result<Vec<BraceTable>> {
    if n == 0 || n > cap {
        return Err(Error::Input(format!("order {n} outside 1..={cap}")));
    }
    let mut all: Vec<BraceTable> = enumerate_groups(n)
        .par_iter()
        .flat_map_iter(braces_over_group)
        .collect();
    if up_to_iso {
        all = all
            .par_iter()
            .map(canonical_form)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
    }
    all.sort_by(|a, b| a.key().cmp(&b.key()));
    all.dedup();
    Ok(all)
}

/// Additive/multiplicative brace presentation on `{0..n-1}`; `0` is the
/// identity of both groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoOpBrace {
    plus: GroupTable,
    circ: GroupTable,
}

impl TwoOpBrace {
    pub fn new(plus: Table, circ: Table) -> Result<TwoOpBrace> {
        if plus.order() != circ.order() {
            return Err(Error::Input("table orders differ".into()));
        }
        let t = TwoOpBrace {
            plus: GroupTable::new(plus)?,
            circ: GroupTable::new(circ)?,
        };
        let report = verify_twoop(&t);
        if !report.is_valid() {
            return Err(Error::Input(format!("not a two-operation brace: {report}")));
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.plus.order()
    }

    pub fn plus(&self) -> &GroupTable {
        &self.plus
    }

    pub fn circ(&self) -> &GroupTable {
        &self.circ
    }
}

fn compatibility_violations(plus: &GroupTable, circ: &GroupTable) -> Vec<Axiom> {
    let n = plus.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = circ.op(a, plus.op(b, c));
                let rhs = plus.op(plus.op(circ.op(a, b), plus.inv(a)), circ.op(a, c));
                if lhs != rhs {
                    out.push(Axiom::Compatibility(a, b, c));
                }
            }
        }
    }
    out
}

pub fn verify_twoop(t: &TwoOpBrace) -> Report {
    let mut violations = Vec::new();
    if !group_violations(t.plus.table()).is_empty() {
        violations.push(Axiom::PlusGroup);
    }
    if !group_violations(t.circ.table()).is_empty() {
        violations.push(Axiom::CircGroup);
    }
    if violations.is_empty() {
        violations = compatibility_violations(&t.plus, &t.circ);
    }
    Report { violations }
}

/// Every two-operation brace on `{0..n-1}`, by pairing all labelled groups.
pub fn enumerate_twoop(n: usize) -> Vec<TwoOpBrace> {
    let groups = enumerate_groups(n);
    groups
        .par_iter()
        .flat_map_iter(|plus| {
            groups.iter().filter(|&circ| compatibility_violations(plus, circ)
                    .is_empty()).map(|circ| TwoOpBrace {
                        plus: plus.clone(),
                        circ: circ.clone(),
                    })
        })
        .collect()
}

/// Translates a two-operation brace into action tables:
/// `a . b = -a + (a o b)` and `b : a = (a . b) o a o b^-1`.
///
/// The result is verified; a failing translation is an error carrying the
/// violated instances.
pub fn twoop_to_rump(t: &TwoOpBrace) -> Result<BraceTable> {
    let n = t.order();
    let (plus, circ) = (&t.plus, &t.circ);
    let dot = Table::from_fn(n, |a, b| plus.op(plus.inv(a), circ.op(a, b)));
    let colon = solve_colon(circ, &dot);
    let out = BraceTable::from_tables(circ.table().clone(), dot, colon)?;
    let report = verify_brace(&out);
    if !report.is_valid() {
        return Err(Error::Dictionary(report.to_string()));
    }
    Ok(out)
}

/// Renders braces in the line-oriented table format.
pub fn format_braces<'a>(braces: impl IntoIterator<Item = &'a BraceTable>) -> String {
    let mut s = String::new();
    for (i, t) in braces.into_iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        s.push_str(&format_brace(t));
    }
    s
}

pub fn format_brace(t: &BraceTable) -> String {
    fn rows(s: &mut String, t: &Table) {
        for row in t.rows() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
    }
    let mut s = format!("brace {}\n", t.order());
    rows(&mut s, &t.circ);
    s.push_str("dot\n");
    rows(&mut s, &t.dot);
    s.push_str("colon\n");
    rows(&mut s, &t.colon);
    s
}

type Lines<'a> = dyn Iterator<Item = (usize, &'a str)> + 'a;

fn read_rows(lines: &mut Lines<'_>, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::Input("unexpected end of brace file".into()))?;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Input(format!("line {ln}: bad index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn expect_keyword(lines: &mut Lines<'_>, keyword: &str) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == keyword => Ok(()),
        Some((ln, l)) => Err(Error::Input(format!(
            "line {ln}: expected `{keyword}`, found {l:?}"
        ))),
        None => Err(Error::Input(format!("missing `{keyword}` section"))),
    }
}

/// Parses zero or more braces without verifying them.
pub fn parse_braces_unverified(text: &str) -> Result<Vec<BraceTable>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((ln, header)) = lines.next() {
        let n = header
            .strip_prefix("brace")
            .map(str::trim)
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Input(format!("line {ln}: expected `brace <n>`")))?;
        let circ = read_rows(&mut lines, n)?;
        expect_keyword(&mut lines, "dot")?;
        let dot = read_rows(&mut lines, n)?;
        expect_keyword(&mut lines, "colon")?;
        let colon = read_rows(&mut lines, n)?;
        out.push(BraceTable::from_rows(&circ, &dot, &colon)?);
    }
    Ok(out)
}

/// Parses braces and refuses any that fail [`verify_brace`].
pub fn parse_braces(text: &str) -> Result<Vec<BraceTable>> {
    let braces = parse_braces_unverified(text)?;
    for (i, t) in braces.iter().enumerate() {
        let report = verify_brace(t);
        if !report.is_valid() {
            return Err(Error::Input(format!("brace #{} is invalid: {report}", i + 1)));
        }
    }
    Ok(braces)
}

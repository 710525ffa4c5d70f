//! Brauer, Temperley-Lieb and permutation diagrams: multiplication with loop
//! counting, generators, defining relations and factor sets.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::combinat::ChainKind;
use crate::error::{Error, Result};

/// Perfect matching on top points 1..n and bottom points n+1..2n.
///
/// Internally points are 0-based and `partner[p]` is the mate of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    kind: ChainKind,
    n: usize,
    partner: Vec<usize>,
}

/// `q^loops · diagram`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopProduct {
    pub diagram: Diagram,
    pub loops: usize,
}

fn circular_position(n: usize, p: usize) -> usize {
    if p < n { p } else { 3 * n - 1 - p }
}

fn is_planar(n: usize, partner: &[usize]) -> bool {
    let pairs: Vec<(usize, usize)> = (0..2 * n)
        .filter(|&p| p < partner[p])
        .map(|p| {
            let (a, b) = (circular_position(n, p), circular_position(n, partner[p]));
            (a.min(b), a.max(b))
        })
        .collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

impl Diagram {
    /// Builds a diagram from 1-based pairs, validating the kind's invariants.
    pub fn from_pairs(kind: ChainKind, n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if kind == ChainKind::BMWStructural {
            return Err(Error::Capability("BMW diagrams carry no multiplication data".into()));
        }
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > 2 * n || b > 2 * n || a == b {
                return Err(Error::Argument(format!("pair {a}-{b} out of range for n={n}")));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::Argument(format!("point reused in pair {}-{}", a + 1, b + 1)));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.iter().any(|&p| p == usize::MAX) {
            return Err(Error::Argument("matching is not perfect".into()));
        }
        Self::from_partner(kind, n, partner)
    }

    fn from_partner(kind: ChainKind, n: usize, partner: Vec<usize>) -> Result<Self> {
        match kind {
            ChainKind::SymmetricGroup if (0..n).any(|p| partner[p] < n) => {
                Err(Error::Argument("permutation diagram has a horizontal edge".into()))
            }
            ChainKind::TemperleyLieb if !is_planar(n, &partner) => {
                Err(Error::Argument("Temperley-Lieb diagram is not planar".into()))
            }
            _ => Ok(Diagram { kind, n, partner }),
        }
    }

    pub fn identity(kind: ChainKind, n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Diagram { kind, n, partner }
    }

    /// Permutation diagram joining top i to bottom σ(i) (0-based images).
    pub fn from_permutation(kind: ChainKind, sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let pairs: Vec<(usize, usize)> = sigma.iter().enumerate().map(|(i, &s)| (i + 1, n + s + 1)).collect();
        Self::from_pairs(kind, n, &pairs)
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mate of 0-based point `p`.
    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Sorted 1-based pair list.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| (p + 1, self.partner[p] + 1))
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        (0..self.n).all(|p| self.partner[p] >= self.n)
    }

    /// Number of top-row horizontal edges.
    pub fn top_arcs(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] < self.n && p < self.partner[p]).count()
    }

    /// Same diagram viewed in another chain (validated).
    pub fn with_kind(&self, kind: ChainKind) -> Result<Self> {
        Self::from_partner(kind, self.n, self.partner.clone())
    }

    /// Adds a vertical strand on the right.
    pub fn embed(&self) -> Diagram {
        let n = self.n;
        let m = n + 1;
        let map = |p: usize| if p < n { p } else { p + 1 };
        let mut partner = vec![0; 2 * m];
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner[p]);
        }
        partner[n] = 2 * m - 1;
        partner[2 * m - 1] = n;
        Diagram { kind: self.kind, n: m, partner }
    }

    /// Removes the rightmost strand if it is vertical.
    pub fn restrict(&self) -> Option<Diagram> {
        let n = self.n;
        if n == 0 || self.partner[n - 1] != 2 * n - 1 {
            return None;
        }
        let m = n - 1;
        let map = |p: usize| if p < n { p } else { p - 1 };
        let mut partner = vec![0; 2 * m];
        for p in (0..2 * n).filter(|&p| p != n - 1 && p != 2 * n - 1) {
            partner[map(p)] = map(self.partner[p]);
        }
        Some(Diagram { kind: self.kind, n: m, partner })
    }

    pub fn lies_in_subalgebra(&self) -> bool {
        self.n > 0 && self.partner[self.n - 1] == 2 * self.n - 1
    }

    pub fn parse(kind: ChainKind, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::from_pairs(kind, 0, &[]);
        }
        let pairs = s
            .split(',')
            .map(|tok| {
                let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse(format!("bad pair {tok:?}")))?;
                let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad pair {tok:?}")))?;
                let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad pair {tok:?}")))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(kind, pairs.len(), &pairs)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&s.join(","))
    }
}

fn product_kind(a: ChainKind, b: ChainKind) -> ChainKind {
    if a == b { a } else { ChainKind::Brauer }
}

/// Stacks `x` on top of `y`; counts closed loops.
pub fn diagram_mul(x: &Diagram, y: &Diagram) -> Result<LoopProduct> {
    if x.n != y.n {
        return Err(Error::Argument(format!("size mismatch {} vs {}", x.n, y.n)));
    }
    let n = x.n;
    let mut partner = vec![usize::MAX; 2 * n];
    let mut middle_seen = vec![false; n];
    // A walk state is (in_x, point of that diagram).
    let trace = |mut in_x: bool, mut p: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            let q = if in_x { x.partner[p] } else { y.partner[p] };
            if in_x && q < n {
                return q;
            }
            if !in_x && q >= n {
                return q;
            }
            let m = if in_x { q - n } else { q };
            seen[m] = true;
            if in_x {
                in_x = false;
                p = m;
            } else {
                in_x = true;
                p = n + m;
            }
        }
    };
    for p in 0..2 * n {
        if partner[p] != usize::MAX {
            continue;
        }
        let end = trace(p < n, p, &mut middle_seen);
        partner[p] = end;
        partner[end] = p;
    }
    let mut loops = 0;
    for m in 0..n {
        if middle_seen[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            middle_seen[cur] = true;
            let down = y.partner[cur];
            debug_assert!(down < n);
            middle_seen[down] = true;
            let up = x.partner[n + down] - n;
            if up == m {
                break;
            }
            cur = up;
        }
    }
    let kind = product_kind(x.kind, y.kind);
    Ok(LoopProduct { diagram: Diagram { kind, n, partner }, loops })
}

/// Generator letter with its 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    R(usize),
    E(usize),
}

impl Token {
    pub fn index(self) -> usize {
        match self {
            Token::R(i) | Token::E(i) => i,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::R(i) => write!(f, "r_{i}"),
            Token::E(i) => write!(f, "e_{i}"),
        }
    }
}

/// Product of generator tokens, read left to right; empty means identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Token>);

impl GeneratorWord {
    pub fn identity() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s.is_empty() {
            return Ok(GeneratorWord::identity());
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let (letter, tail) = rest.split_at(1);
            let tail = tail.strip_prefix('_').ok_or_else(|| Error::Parse(format!("bad word {s:?}")))?;
            let digits = tail.chars().take_while(char::is_ascii_digit).count();
            let i: usize = tail[..digits].parse().map_err(|_| Error::Parse(format!("bad word {s:?}")))?;
            out.push(match letter {
                "r" => Token::R(i),
                "e" => Token::E(i),
                _ => return Err(Error::Parse(format!("bad word {s:?}"))),
            });
            rest = &tail[digits..];
        }
        Ok(GeneratorWord(out))
    }
}

pub fn generator(kind: ChainKind, token: Token, n: usize) -> Result<Diagram> {
    let i = token.index();
    if i == 0 || i >= n {
        return Err(Error::Argument(format!("{token} out of range for n={n}")));
    }
    match (kind, token) {
        (ChainKind::SymmetricGroup, Token::E(_)) => {
            return Err(Error::Argument("symmetric group has no e generators".into()))
        }
        (ChainKind::TemperleyLieb, Token::R(_)) => {
            return Err(Error::Argument("Temperley-Lieb has no r generators".into()))
        }
        (ChainKind::BMWStructural, _) => {
            return Err(Error::Capability("BMW diagrams carry no multiplication data".into()))
        }
        _ => {}
    }
    let mut partner: Vec<usize> = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
    let (a, b) = (i - 1, i);
    match token {
        Token::R(_) => {
            partner[a] = n + b;
            partner[n + b] = a;
            partner[b] = n + a;
            partner[n + a] = b;
        }
        Token::E(_) => {
            partner[a] = b;
            partner[b] = a;
            partner[n + a] = n + b;
            partner[n + b] = n + a;
        }
    }
    Ok(Diagram { kind, n, partner })
}

/// Evaluates a word as a diagram with accumulated loops.
pub fn evaluate(kind: ChainKind, n: usize, word: &GeneratorWord) -> Result<LoopProduct> {
    let mut acc = LoopProduct { diagram: Diagram::identity(kind, n), loops: 0 };
    for &t in word.tokens() {
        let g = generator(kind, t, n)?;
        let p = diagram_mul(&acc.diagram, &g)?;
        acc = LoopProduct { diagram: p.diagram, loops: acc.loops + p.loops };
    }
    Ok(acc)
}

/// One defining relation `lhs = q^rhs_loops · rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
    pub rhs_loops: usize,
}

/// All instances of the chain's defining relations at size n.
pub fn relations(kind: ChainKind, n: usize) -> Vec<Relation> {
    use Token::{E, R};
    let w = |ts: &[Token]| GeneratorWord(ts.to_vec());
    let mut out = Vec::new();
    let mut push = |label: String, lhs: Vec<Token>, rhs: Vec<Token>, loops: usize| {
        out.push(Relation { label, lhs: w(&lhs), rhs: w(&rhs), rhs_loops: loops });
    };
    let (r, e) = (kind.has_r(), kind.has_e());
    for i in 1..n {
        if r {
            push(format!("(1) r_{i}^2=1"), vec![R(i), R(i)], vec![], 0);
        }
        if e {
            push(format!("e_{i}^2=q e_{i}"), vec![E(i), E(i)], vec![E(i)], 1);
        }
        if r && e {
            push(format!("(4) e_{i}r_{i}=e_{i}"), vec![E(i), R(i)], vec![E(i)], 0);
            push(format!("(4) r_{i}e_{i}=e_{i}"), vec![R(i), E(i)], vec![E(i)], 0);
        }
        for j in 1..n {
            if i.abs_diff(j) <= 1 {
                continue;
            }
            if r {
                push(format!("(2) r_{i}r_{j}=r_{j}r_{i}"), vec![R(i), R(j)], vec![R(j), R(i)], 0);
            }
            if r && e {
                push(format!("(2) r_{i}e_{j}=e_{j}r_{i}"), vec![R(i), E(j)], vec![E(j), R(i)], 0);
            }
            if e {
                push(format!("e_{i}e_{j}=e_{j}e_{i}"), vec![E(i), E(j)], vec![E(j), E(i)], 0);
            }
        }
        if i + 1 < n {
            let k = i + 1;
            if r {
                push(format!("(5) braid r_{i},r_{k}"), vec![R(i), R(k), R(i)], vec![R(k), R(i), R(k)], 0);
            }
            if e {
                push(format!("e_{i}e_{k}e_{i}=e_{i}"), vec![E(i), E(k), E(i)], vec![E(i)], 0);
                push(format!("e_{k}e_{i}e_{k}=e_{k}"), vec![E(k), E(i), E(k)], vec![E(k)], 0);
            }
            if r && e {
                push(format!("(7) r_{i}e_{k}e_{i}=r_{k}e_{i}"), vec![R(i), E(k), E(i)], vec![R(k), E(i)], 0);
                push(format!("(8) e_{k}e_{i}r_{k}=e_{k}r_{i}"), vec![E(k), E(i), R(k)], vec![E(k), R(i)], 0);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every relation instance as an identity of loop products.
pub fn check_relations(kind: ChainKind, n: usize) -> Result<RelationReport> {
    let mut rep = RelationReport::default();
    for rel in relations(kind, n) {
        let l = evaluate(kind, n, &rel.lhs)?;
        let r = evaluate(kind, n, &rel.rhs)?;
        rep.checked += 1;
        if l.diagram != r.diagram || l.loops != r.loops + rel.rhs_loops {
            rep.failures.push(format!("{}: {} ({} loops) vs {} ({} loops)", rel.label, l.diagram, l.loops, r.diagram, r.loops + rel.rhs_loops));
        }
    }
    Ok(rep)
}

/// Generator slot of a factor word at one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Id,
    R,
    E,
}

/// A factor-set word as the tuple (y_1, …, y_{n−1}) with y_k ∈ {id, r_k, e_k}.
pub type SlotTuple = Vec<Slot>;

pub fn word_of_slots(slots: &[Slot]) -> GeneratorWord {
    GeneratorWord(
        slots
            .iter()
            .enumerate()
            .filter_map(|(k, s)| match s {
                Slot::Id => None,
                Slot::R => Some(Token::R(k + 1)),
                Slot::E => Some(Token::E(k + 1)),
            })
            .collect(),
    )
}

/// Factor-set words as slot tuples, in the canonical search order.
pub fn factor_slots(kind: ChainKind, n: usize) -> Vec<SlotTuple> {
    let m = n.saturating_sub(1);
    let mut out = vec![vec![Slot::Id; m]];
    let with = |ranges: &[(std::ops::Range<usize>, Slot)]| {
        let mut t = vec![Slot::Id; m];
        for (range, s) in ranges {
            for k in range.clone() {
                t[k - 1] = *s;
            }
        }
        t
    };
    match kind {
        ChainKind::SymmetricGroup | ChainKind::Brauer | ChainKind::BMWStructural => {
            for j in 1..n {
                out.push(with(&[(j..n, Slot::R)]));
            }
            if kind != ChainKind::SymmetricGroup {
                for j in 1..n {
                    for i in j..n {
                        out.push(with(&[(j..i, Slot::R), (i..n, Slot::E)]));
                    }
                }
            }
        }
        ChainKind::TemperleyLieb => {
            for i in (1..n).rev() {
                out.push(with(&[(i..n, Slot::E)]));
            }
        }
    }
    out
}

pub fn factor_set(kind: ChainKind, n: usize) -> Vec<GeneratorWord> {
    factor_slots(kind, n).iter().map(|s| word_of_slots(s)).collect()
}

/// Enumerates every basis diagram of the chain at size n, sorted.
pub fn all_diagrams(kind: ChainKind, n: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    match kind {
        ChainKind::SymmetricGroup => {
            let mut perm: Vec<usize> = (0..n).collect();
            permutations(&mut perm, 0, &mut |p| out.push(Diagram::from_permutation(kind, p).expect("permutation")));
        }
        ChainKind::Brauer | ChainKind::BMWStructural => {
            let mut partner = vec![usize::MAX; 2 * n];
            matchings(&mut partner, &mut |p| out.push(Diagram { kind: ChainKind::Brauer, n, partner: p.to_vec() }));
        }
        ChainKind::TemperleyLieb => {
            // Non-crossing matchings of the circular order, mapped back to points.
            let point = |c: usize| if c < n { c } else { 3 * n - 1 - c };
            for m in noncrossing(0, 2 * n) {
                let mut partner = vec![0; 2 * n];
                for (a, b) in m {
                    partner[point(a)] = point(b);
                    partner[point(b)] = point(a);
                }
                out.push(Diagram { kind, n, partner });
            }
        }
    }
    out.sort();
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

fn matchings(partner: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let Some(a) = partner.iter().position(|&x| x == usize::MAX) else {
        f(partner);
        return;
    };
    for b in a + 1..partner.len() {
        if partner[b] == usize::MAX {
            partner[a] = b;
            partner[b] = a;
            matchings(partner, f);
            partner[a] = usize::MAX;
            partner[b] = usize::MAX;
        }
    }
}

fn noncrossing(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for b in (lo + 1..hi).step_by(2) {
        let inner = noncrossing(lo + 1, b);
        let outer = noncrossing(b + 1, hi);
        for i in &inner {
            for o in &outer {
                let mut m = vec![(lo, b)];
                m.extend_from_slice(i);
                m.extend_from_slice(o);
                out.push(m);
            }
        }
    }
    out
}

/// Left factorization d = y·b through one level of the chain.
#[derive(Clone, Debug)]
pub struct Factorizer {
    kind: ChainKind,
    n: usize,
    slots: Vec<SlotTuple>,
    lookup: HashMap<Diagram, (usize, Diagram)>,
}

impl Factorizer {
    pub fn new(kind: ChainKind, n: usize) -> Result<Self> {
        if kind == ChainKind::BMWStructural {
            return Err(Error::Capability("BMW diagrams carry no multiplication data".into()));
        }
        let slots = factor_slots(kind, n);
        let subs: Vec<Diagram> = if n == 0 { Vec::new() } else { all_diagrams(kind, n - 1).iter().map(Diagram::embed).collect() };
        let mut lookup = HashMap::new();
        for (yi, s) in slots.iter().enumerate() {
            let y = evaluate(kind, n, &word_of_slots(s))?;
            if y.loops != 0 {
                return Err(Error::Internal(format!("factor word {} has loops", word_of_slots(s))));
            }
            for b in &subs {
                let p = diagram_mul(&y.diagram, b)?;
                if p.loops == 0 {
                    let d = p.diagram.with_kind(kind)?;
                    lookup.entry(d).or_insert_with(|| (yi, b.clone()));
                }
            }
        }
        Ok(Factorizer { kind, n, slots, lookup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn slots(&self) -> &[SlotTuple] {
        &self.slots
    }

    /// Index into `slots()` and the subalgebra factor b (embedded at size n).
    pub fn factor(&self, d: &Diagram) -> Result<(usize, Diagram)> {
        self.lookup
            .get(d)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("no factorization of {d}")))
    }
}

/// Factorizers for sizes 1..=n.
#[derive(Clone, Debug)]
pub struct FactorChain {
    levels: Vec<Factorizer>,
}

impl FactorChain {
    pub fn new(kind: ChainKind, n: usize) -> Result<Self> {
        Ok(FactorChain { levels: (1..=n).map(|m| Factorizer::new(kind, m)).collect::<Result<_>>()? })
    }

    pub fn at(&self, n: usize) -> &Factorizer {
        &self.levels[n - 1]
    }

    pub fn word_of(&self, d: &Diagram) -> Result<GeneratorWord> {
        let mut word = GeneratorWord::identity();
        let mut cur = d.clone();
        while cur.n() > 1 {
            let f = self.at(cur.n());
            let (yi, b) = f.factor(&cur)?;
            word = word.concat(&word_of_slots(&f.slots()[yi]));
            cur = b.restrict().ok_or_else(|| Error::Internal("factor outside subalgebra".into()))?;
        }
        Ok(word)
    }
}

/// (y, b) with evaluate(y)·b = d and b fixing the last strand.
pub fn factor_map(d: &Diagram) -> Result<(GeneratorWord, Diagram)> {
    let f = Factorizer::new(d.kind(), d.n())?;
    let (yi, b) = f.factor(d)?;
    Ok((word_of_slots(&f.slots()[yi]), b))
}

/// Generator word whose evaluation is `d` with no loops.
pub fn word_of(d: &Diagram) -> Result<GeneratorWord> {
    FactorChain::new(d.kind(), d.n())?.word_of(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ChainKind::{Brauer, SymmetricGroup, TemperleyLieb};

    #[test]
    fn permutation_product_example() {
        // (1324) and (143) in cycle notation, as 0-based images.
        let x = Diagram::from_permutation(SymmetricGroup, &[2, 3, 1, 0]).unwrap();
        let y = Diagram::from_permutation(SymmetricGroup, &[3, 1, 0, 2]).unwrap();
        let z = Diagram::from_permutation(SymmetricGroup, &[0, 2, 1, 3]).unwrap();
        assert_eq!(diagram_mul(&x, &y).unwrap(), LoopProduct { diagram: z, loops: 0 });
    }

    #[test]
    fn generator_shapes() {
        assert_eq!(generator(Brauer, Token::R(1), 2).unwrap().to_string(), "1-4,2-3");
        assert_eq!(generator(Brauer, Token::E(1), 2).unwrap().to_string(), "1-2,3-4");
        assert_eq!(generator(TemperleyLieb, Token::E(2), 3).unwrap().to_string(), "1-4,2-3,5-6");
        assert!(generator(TemperleyLieb, Token::R(1), 3).is_err());
        assert!(generator(SymmetricGroup, Token::E(1), 3).is_err());
        assert!(generator(Brauer, Token::E(3), 3).is_err());
    }

    #[test]
    fn e_squared_has_one_loop() {
        let e = generator(Brauer, Token::E(1), 3).unwrap();
        assert_eq!(diagram_mul(&e, &e).unwrap(), LoopProduct { diagram: e.clone(), loops: 1 });
        let id = Diagram::identity(Brauer, 3);
        assert_eq!(diagram_mul(&id, &e).unwrap().diagram, e);
    }

    #[test]
    fn counts() {
        assert_eq!(all_diagrams(Brauer, 4).len(), 105);
        assert_eq!(all_diagrams(TemperleyLieb, 5).len(), 42);
        assert_eq!(all_diagrams(SymmetricGroup, 4).len(), 24);
    }

    #[test]
    fn factor_set_shapes() {
        let fs: Vec<String> = factor_set(Brauer, 4).iter().map(|w| w.to_string()).collect();
        assert_eq!(&fs[4..], &["e_1e_2e_3", "r_1e_2e_3", "r_1r_2e_3", "e_2e_3", "r_2e_3", "e_3"]);
        let tl: Vec<String> = factor_set(TemperleyLieb, 3).iter().map(|w| w.to_string()).collect();
        assert_eq!(tl, ["id", "e_2", "e_1e_2"]);
        let b2: Vec<String> = factor_set(Brauer, 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(b2, ["id", "r_1", "e_1"]);
    }

    #[test]
    fn nonunique_factorization_picks_first() {
        // top edges {1,3}, {2,4}; bottom row all vertical after the prefix
        let d = evaluate(Brauer, 4, &"r_1e_2e_3".parse().unwrap()).unwrap().diagram;
        let d2 = evaluate(Brauer, 4, &"r_2e_3".parse().unwrap()).unwrap().diagram;
        let (y, b) = factor_map(&d).unwrap();
        assert_eq!(y.to_string(), "r_1e_2e_3");
        assert!(b.lies_in_subalgebra());
        let (y2, b2) = factor_map(&d2).unwrap();
        let lhs = diagram_mul(&evaluate(Brauer, 4, &y2).unwrap().diagram, &b2).unwrap();
        assert_eq!(lhs, LoopProduct { diagram: d2, loops: 0 });
    }

    #[test]
    fn subalgebra_factors_trivially() {
        let d = Diagram::parse(Brauer, "1-2,3-6,4-5").unwrap().embed();
        let (y, b) = factor_map(&d).unwrap();
        assert!(y.is_identity());
        assert_eq!(b, d);
    }

    #[test]
    fn word_replay_brauer_four() {
        let chain = FactorChain::new(Brauer, 4).unwrap();
        for d in all_diagrams(Brauer, 4) {
            let w = chain.word_of(&d).unwrap();
            assert_eq!(evaluate(Brauer, 4, &w).unwrap(), LoopProduct { diagram: d, loops: 0 });
        }
        assert!(word_of(&Diagram::identity(Brauer, 3)).unwrap().is_identity());
        assert_eq!(word_of(&generator(Brauer, Token::E(1), 2).unwrap()).unwrap().to_string(), "e_1");
    }

    #[test]
    fn relation_examples() {
        for kind in [Brauer, TemperleyLieb, SymmetricGroup] {
            for n in 2..=4 {
                let r = check_relations(kind, n).unwrap();
                assert!(r.ok(), "{kind} {n}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn canonical_string_roundtrip() {
        let d = Diagram::parse(Brauer, "2-3,1-4,5-6").unwrap();
        assert_eq!(d.to_string(), "1-4,2-3,5-6");
        assert!(Diagram::parse(TemperleyLieb, "1-5,2-6,3-4").is_err());
    }
}

//! Partitions, branching rules, Bratteli diagrams, quiver morphism counts
//! and the closed-form operation bounds.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!("not a partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Rows where a box may be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.parts.len())
            .filter(|&r| r == 0 || self.parts.get(r).copied().unwrap_or(0) < self.parts[r - 1])
            .collect()
    }

    /// Rows whose last box is a removable corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| self.parts.get(r + 1).copied().unwrap_or(0) < self.parts[r])
            .collect()
    }

    pub fn add_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    pub fn remove_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// Content (column minus row) of the last box in `row`.
    pub fn content_of_row_end(&self, row: usize) -> i64 {
        self.parts[row] as i64 - 1 - row as i64
    }

    /// Sum of box contents.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len as i64).map(|c| c - r as i64).sum::<i64>())
            .sum()
    }

    /// Canonical order: larger size first, then reverse lexicographic.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", p.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Number of removable corner boxes.
pub fn jump(lambda: &Partition) -> usize {
    lambda.removable_rows().len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainKind {
    SymmetricGroup,
    Brauer,
    TemperleyLieb,
    BMWStructural,
}

impl ChainKind {
    pub fn name(self) -> &'static str {
        match self {
            ChainKind::SymmetricGroup => "sn",
            ChainKind::Brauer => "brauer",
            ChainKind::TemperleyLieb => "tl",
            ChainKind::BMWStructural => "bmw",
        }
    }

    pub fn has_r(self) -> bool {
        !matches!(self, ChainKind::TemperleyLieb)
    }

    pub fn has_e(self) -> bool {
        !matches!(self, ChainKind::SymmetricGroup)
    }

    /// Whether a vertex with this label may sit at `level`.
    pub fn is_legal(self, lambda: &Partition, level: usize) -> bool {
        let s = lambda.size();
        match self {
            ChainKind::SymmetricGroup => s == level,
            ChainKind::TemperleyLieb => s == level && lambda.rows() <= 2,
            ChainKind::Brauer | ChainKind::BMWStructural => s <= level && (level - s) % 2 == 0,
        }
    }

    fn successors(self, lambda: &Partition) -> Vec<Partition> {
        let mut out: Vec<Partition> = lambda.addable_rows().into_iter().map(|r| lambda.add_box(r)).collect();
        match self {
            ChainKind::TemperleyLieb => out.retain(|p| p.rows() <= 2),
            ChainKind::Brauer | ChainKind::BMWStructural => {
                out.extend(lambda.removable_rows().into_iter().map(|r| lambda.remove_box(r)))
            }
            ChainKind::SymmetricGroup => {}
        }
        out.sort_by(Partition::canonical_cmp);
        out.dedup();
        out
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sn" | "symmetric" => Ok(ChainKind::SymmetricGroup),
            "brauer" => Ok(ChainKind::Brauer),
            "tl" | "temperley-lieb" => Ok(ChainKind::TemperleyLieb),
            "bmw" => Ok(ChainKind::BMWStructural),
            _ => Err(Error::Parse(format!("unknown chain {s:?}"))),
        }
    }
}

/// Level-`i` successors of a level-`(i-1)` vertex, in canonical order.
pub fn branch(kind: ChainKind, lambda: &Partition, i: usize) -> Result<Vec<Partition>> {
    if i == 0 || !kind.is_legal(lambda, i - 1) {
        return Err(Error::InvalidVertex(format!("{lambda} is not a level-{} vertex of {kind}", i as i64 - 1)));
    }
    Ok(kind.successors(lambda))
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// dim A_i of the chain.
pub fn algebra_dim(kind: ChainKind, i: usize) -> u128 {
    match kind {
        ChainKind::SymmetricGroup => factorial(i),
        ChainKind::Brauer | ChainKind::BMWStructural => double_factorial_odd(i),
        ChainKind::TemperleyLieb => catalan(i),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub level: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(level: usize, index: usize) -> Self {
        VertexId { level, index }
    }
}

/// Graded branching graph of a chain, truncated at `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    kind: ChainKind,
    depth: usize,
    levels: Vec<Vec<Partition>>,
    dims: Vec<Vec<u64>>,
    down: Vec<Vec<Vec<usize>>>,
    up: Vec<Vec<Vec<usize>>>,
}

pub fn build_bratteli(kind: ChainKind, n: usize) -> BratteliDiagram {
    let mut levels = vec![vec![Partition::empty()]];
    let mut down: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    let mut dims = vec![vec![1u64]];
    for l in 1..=n {
        let prev = &levels[l - 1];
        let mut cur: Vec<Partition> = prev.iter().flat_map(|p| kind.successors(p)).collect();
        cur.sort_by(Partition::canonical_cmp);
        cur.dedup();
        let mut preds = vec![Vec::new(); cur.len()];
        for (a, p) in prev.iter().enumerate() {
            for s in kind.successors(p) {
                let b = cur.iter().position(|x| *x == s).expect("successor present");
                preds[b].push(a);
            }
        }
        let d: Vec<u64> = preds.iter().map(|ps| ps.iter().map(|&a| dims[l - 1][a]).sum()).collect();
        levels.push(cur);
        down.push(preds);
        dims.push(d);
    }
    let mut up: Vec<Vec<Vec<usize>>> = levels.iter().map(|lv| vec![Vec::new(); lv.len()]).collect();
    for l in 1..=n {
        for (b, preds) in down[l].iter().enumerate() {
            for &a in preds {
                up[l - 1][a].push(b);
            }
        }
    }
    BratteliDiagram { kind, depth: n, levels, dims, down, up }
}

impl BratteliDiagram {
    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level(&self, l: usize) -> &[Partition] {
        &self.levels[l]
    }

    pub fn level_len(&self, l: usize) -> usize {
        self.levels[l].len()
    }

    pub fn partition(&self, v: VertexId) -> &Partition {
        &self.levels[v.level][v.index]
    }

    pub fn dim(&self, v: VertexId) -> u64 {
        self.dims[v.level][v.index]
    }

    pub fn dims(&self, l: usize) -> &[u64] {
        &self.dims[l]
    }

    /// Predecessor indices at level `v.level - 1`, canonical order.
    pub fn predecessors(&self, v: VertexId) -> &[usize] {
        &self.down[v.level][v.index]
    }

    /// Successor indices at level `v.level + 1`, canonical order.
    pub fn successors(&self, v: VertexId) -> &[usize] {
        &self.up[v.level][v.index]
    }

    pub fn adjacent(&self, lower: VertexId, upper: VertexId) -> bool {
        upper.level == lower.level + 1 && self.down[upper.level][upper.index].contains(&lower.index)
    }

    pub fn find(&self, level: usize, p: &Partition) -> Option<VertexId> {
        self.levels.get(level)?.iter().position(|x| x == p).map(|i| VertexId::new(level, i))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.level <= self.depth && v.index < self.levels[v.level].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.down.iter().flatten().map(Vec::len).sum()
    }

    /// Σ d_v² at level `l`.
    pub fn sum_dim_squares(&self, l: usize) -> u128 {
        self.dims[l].iter().map(|&d| (d as u128) * (d as u128)).sum()
    }

    /// Graph data without the chain label, for structural comparisons.
    pub fn same_graph(&self, other: &BratteliDiagram) -> bool {
        self.depth == other.depth
            && self.levels == other.levels
            && self.dims == other.dims
            && self.down == other.down
            && self.up == other.up
    }

    /// Path counts from `gamma` to every vertex of level `top`.
    pub fn path_counts_from(&self, gamma: VertexId, top: usize) -> Vec<u64> {
        let mut cur = vec![0u64; self.levels[gamma.level].len()];
        cur[gamma.index] = 1;
        for l in gamma.level + 1..=top {
            cur = self.down[l].iter().map(|ps| ps.iter().map(|&a| cur[a]).sum()).collect();
        }
        cur
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph bratteli {\n");
        for (l, lv) in self.levels.iter().enumerate() {
            for (i, p) in lv.iter().enumerate() {
                s += &format!("  v{l}_{i} [label=\"{l}:{p}\"];\n");
            }
        }
        for l in 1..=self.depth {
            for (b, preds) in self.down[l].iter().enumerate() {
                for a in preds {
                    s += &format!("  v{}_{a} -> v{l}_{b};\n", l - 1);
                }
            }
        }
        s += "}\n";
        s
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = (0..=self.depth)
            .map(|l| {
                let vertices: Vec<Value> = self.levels[l]
                    .iter()
                    .zip(&self.dims[l])
                    .map(|(p, d)| json!({"parts": p.parts(), "dim": d}))
                    .collect();
                let edges: Vec<[usize; 2]> = self.down[l]
                    .iter()
                    .enumerate()
                    .flat_map(|(b, ps)| ps.iter().map(move |&a| [a, b]))
                    .collect();
                json!({"vertices": vertices, "edges": edges})
            })
            .collect();
        json!({"kind": self.kind.name(), "n": self.depth, "levels": levels})
    }
}

/// Number of directed paths from `gamma` up to `rho`.
pub fn mult_m(b: &BratteliDiagram, rho: VertexId, gamma: VertexId) -> Result<u64> {
    if !b.contains(rho) || !b.contains(gamma) {
        return Err(Error::InvalidVertex(format!("{rho:?} or {gamma:?} not in diagram")));
    }
    if gamma.level > rho.level {
        return Err(Error::Argument("M(rho, gamma) needs level(gamma) <= level(rho)".into()));
    }
    Ok(b.path_counts_from(gamma, rho.level)[rho.index])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVertex {
    pub name: String,
    pub grade: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Finite graded quiver with named vertices and arrows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuiverShape {
    vertices: Vec<QVertex>,
    arrows: Vec<QArrow>,
}

impl QuiverShape {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[QVertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[QArrow] {
        &self.arrows
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn top_grade(&self) -> usize {
        self.vertices.iter().map(|v| v.grade).max().unwrap_or(0)
    }

    fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn add_vertex(&mut self, name: &str, grade: usize) -> Result<usize> {
        match self.vertex_index(name) {
            Some(i) if self.vertices[i].grade == grade => Ok(i),
            Some(_) => Err(Error::Argument(format!("vertex {name} given two grades"))),
            None => {
                self.vertices.push(QVertex { name: name.to_string(), grade });
                Ok(self.vertices.len() - 1)
            }
        }
    }

    pub fn add_arrow(&mut self, name: &str, src: (&str, usize), tgt: (&str, usize)) -> Result<()> {
        if tgt.1 <= src.1 {
            return Err(Error::Argument(format!("arrow {name} does not raise the grade")));
        }
        let s = self.add_vertex(src.0, src.1)?;
        let t = self.add_vertex(tgt.0, tgt.1)?;
        if let Some(a) = self.arrows.iter().find(|a| a.name == name) {
            if (a.src, a.tgt) != (s, t) {
                return Err(Error::Argument(format!("arrow {name} given two endpoint pairs")));
            }
            return Ok(());
        }
        self.arrows.push(QArrow { name: name.to_string(), src: s, tgt: t });
        Ok(())
    }

    fn arrow_record(&self, a: &QArrow) -> (String, (String, usize), (String, usize)) {
        let s = &self.vertices[a.src];
        let t = &self.vertices[a.tgt];
        (a.name.clone(), (s.name.clone(), s.grade), (t.name.clone(), t.grade))
    }

    fn from_records(records: &[(String, (String, usize), (String, usize))]) -> Result<Self> {
        let mut q = QuiverShape::new();
        for (name, s, t) in records {
            q.add_arrow(name, (&s.0, s.1), (&t.0, t.1))?;
        }
        Ok(q)
    }

    fn check_compatible(&self, other: &QuiverShape) -> Result<()> {
        for v in &self.vertices {
            if let Some(w) = other.vertices.iter().find(|w| w.name == v.name) {
                if w.grade != v.grade {
                    return Err(Error::Argument(format!("vertex {} graded differently", v.name)));
                }
            }
        }
        for a in &self.arrows {
            if let Some(b) = other.arrows.iter().find(|b| b.name == a.name) {
                let (ra, rb) = (self.arrow_record(a), other.arrow_record(b));
                if ra != rb {
                    return Err(Error::Argument(format!("arrow {} has different endpoints", a.name)));
                }
            }
        }
        Ok(())
    }

    /// Union of arrow sets (isolated vertices kept).
    pub fn union(&self, other: &QuiverShape) -> Result<QuiverShape> {
        self.check_compatible(other)?;
        let mut q = self.clone();
        for v in &other.vertices {
            q.add_vertex(&v.name, v.grade)?;
        }
        for a in &other.arrows {
            let (name, s, t) = other.arrow_record(a);
            q.add_arrow(&name, (&s.0, s.1), (&t.0, t.1))?;
        }
        Ok(q)
    }
}

/// Induced quiver on the symmetric difference of the arrow sets.
pub fn symdiff(q1: &QuiverShape, q2: &QuiverShape) -> Result<QuiverShape> {
    q1.check_compatible(q2)?;
    let in_other = |q: &QuiverShape, name: &str| q.arrows.iter().any(|a| a.name == name);
    let mut records = Vec::new();
    for a in &q1.arrows {
        if !in_other(q2, &a.name) {
            records.push(q1.arrow_record(a));
        }
    }
    for a in &q2.arrows {
        if !in_other(q1, &a.name) {
            records.push(q2.arrow_record(a));
        }
    }
    QuiverShape::from_records(&records)
}

/// The glued quiver ℋ_i^n counted at stage `i` of the Brauer/TL schedule.
pub fn h_quiver(i: usize, n: usize) -> Result<QuiverShape> {
    if i < 2 || i > n {
        return Err(Error::Argument(format!("stage {i} outside 2..={n}")));
    }
    let mut q = QuiverShape::new();
    let root = ("0", 0);
    let a1 = ("alpha_{i-1}", i - 1);
    let a2 = ("alpha_i", i);
    let b2 = ("beta_{i-2}", i - 2);
    let b1 = ("beta_{i-1}", i - 1);
    let bn = if i == n { b1 } else { ("beta_{n-1}", n - 1) };
    q.add_vertex(root.0, 0)?;
    q.add_vertex(b2.0, b2.1)?;
    if i - 1 > 0 {
        q.add_arrow("root-alpha", root, a1)?;
    } else {
        q.add_vertex(a1.0, a1.1)?;
    }
    if bn.1 > 0 {
        q.add_arrow("root-beta", root, bn)?;
    }
    q.add_arrow("beta-beta", b2, b1)?;
    if i < n {
        q.add_arrow("beta-top", b1, bn)?;
    }
    q.add_arrow("beta-alpha", b2, a1)?;
    q.add_arrow("alpha-alpha", a1, a2)?;
    q.add_arrow("cross", b1, a2)?;
    Ok(q)
}

fn p_name(j: usize) -> String {
    if j == 0 { "0".into() } else { format!("p{j}") }
}

fn s_name(j: usize) -> String {
    if j == 0 { "0".into() } else { format!("s{j}") }
}

fn add_named(q: &mut QuiverShape, name: &str, src: (String, usize), tgt: (String, usize)) -> Result<()> {
    q.add_arrow(name, (&src.0, src.1), (&tgt.0, tgt.1))
}

fn add_rho(q: &mut QuiverShape, j: usize) -> Result<()> {
    if j == 1 {
        add_named(q, "pi1", (p_name(0), 0), (p_name(1), 1))
    } else {
        add_named(q, &format!("rho{j}"), (s_name(j - 1), j - 1), (p_name(j), j))
    }
}

/// Quiver of the untransformed factor F at level n−1: the row path
/// s_0→⋯→s_{n−1} and the column path collapsed to one arrow.
pub fn base_quiver(n: usize) -> Result<QuiverShape> {
    let mut q = QuiverShape::new();
    for j in 1..n {
        add_named(&mut q, &format!("sigma{j}"), (s_name(j - 1), j - 1), (s_name(j), j))?;
    }
    if n >= 2 {
        add_named(&mut q, "q", ("0".into(), 0), (s_name(n - 1), n - 1))?;
    }
    Ok(q)
}

/// Two-step frame touched by the generator at position `k`.
pub fn frame_quiver(k: usize) -> Result<QuiverShape> {
    let mut q = QuiverShape::new();
    add_rho(&mut q, k)?;
    add_named(&mut q, &format!("sigma{k}"), (s_name(k - 1), k - 1), (s_name(k), k))?;
    add_named(&mut q, &format!("pi{}", k + 1), (p_name(k), k), (p_name(k + 1), k + 1))?;
    add_rho(&mut q, k + 1)?;
    Ok(q)
}

/// (Q_F △ Q_1 △ ⋯ △ Q_{i−2}) ∪ Q_{i−1}: the configuration space at stage i.
pub fn staged_quiver(i: usize, n: usize) -> Result<QuiverShape> {
    if i < 2 || i > n {
        return Err(Error::Argument(format!("stage {i} outside 2..={n}")));
    }
    let mut acc = base_quiver(n)?;
    for k in 1..i - 1 {
        acc = symdiff(&acc, &frame_quiver(k)?)?;
    }
    acc.union(&frame_quiver(i - 1)?)
}

/// Closed-form #Hom(ℋ_i^n; B) as a sum over the five free vertices.
pub fn hom_count_closed(b: &BratteliDiagram, i: usize, n: usize) -> Result<u128> {
    if i < 2 || i > n {
        return Err(Error::Argument(format!("stage {i} outside 2..={n}")));
    }
    if b.depth() < n {
        return Err(Error::Argument(format!("diagram depth {} < {n}", b.depth())));
    }
    // w[b1] = Σ_{β_{n−1}} M(β_{n−1}, β_{i−1}) d_{β_{n−1}}
    let w: Vec<u128> = (0..b.level_len(i - 1))
        .map(|b1| {
            let m = b.path_counts_from(VertexId::new(i - 1, b1), n - 1);
            m.iter().zip(b.dims(n - 1)).map(|(&x, &d)| x as u128 * d as u128).sum()
        })
        .collect();
    let mut total = 0u128;
    for b2 in 0..b.level_len(i - 2) {
        let up2 = b.successors(VertexId::new(i - 2, b2));
        for &b1 in up2 {
            for &a1 in up2 {
                let d_a1 = b.dim(VertexId::new(i - 1, a1)) as u128;
                let from_a1 = b.successors(VertexId::new(i - 1, a1));
                let from_b1 = b.successors(VertexId::new(i - 1, b1));
                let common = from_a1.iter().filter(|x| from_b1.contains(x)).count() as u128;
                total += common * d_a1 * w[b1];
            }
        }
    }
    Ok(total)
}

fn count_paths_dfs(b: &BratteliDiagram, from: VertexId, to: VertexId) -> u128 {
    if from.level == to.level {
        return (from == to) as u128;
    }
    b.successors(from)
        .iter()
        .map(|&s| count_paths_dfs(b, VertexId::new(from.level + 1, s), to))
        .sum()
}

/// Counts graded quiver morphisms H → B by backtracking.
pub fn hom_count_brute(b: &BratteliDiagram, h: &QuiverShape, n: usize) -> u128 {
    if h.top_grade() > n.min(b.depth()) {
        return 0;
    }
    let mut order: Vec<usize> = (0..h.vertices.len()).collect();
    order.sort_by_key(|&v| h.vertices[v].grade);
    let mut assign: Vec<Option<usize>> = vec![None; h.vertices.len()];
    fn go(b: &BratteliDiagram, h: &QuiverShape, order: &[usize], k: usize, assign: &mut Vec<Option<usize>>) -> u128 {
        if k == order.len() {
            return 1;
        }
        let v = order[k];
        let g = h.vertices[v].grade;
        let mut total = 0;
        for x in 0..b.level_len(g) {
            assign[v] = Some(x);
            let mut weight = 1u128;
            for a in &h.arrows {
                let involves = a.src == v || a.tgt == v;
                if let (true, Some(s), Some(t)) = (involves, assign[a.src], assign[a.tgt]) {
                    let c = count_paths_dfs(
                        b,
                        VertexId::new(h.vertices[a.src].grade, s),
                        VertexId::new(h.vertices[a.tgt].grade, t),
                    );
                    weight *= c;
                    if weight == 0 {
                        break;
                    }
                }
            }
            if weight > 0 {
                total += weight * go(b, h, order, k + 1, assign);
            }
        }
        assign[v] = None;
        total
    }
    go(b, h, &order, 0, &mut assign)
}

/// Exact bound figures for a chain at depth n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: ChainKind,
    pub n: usize,
    pub dim: u128,
    /// Total operation bound (reduced bound times dim); `None` for S_n.
    pub total: Option<Scalar>,
    /// Per-stage bound for i = 2..=n.
    pub stages: Vec<(usize, Scalar)>,
}

fn q(p: i128, d: i128) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn qu(x: u128) -> Scalar {
    BigRational::from_integer(BigInt::from(x))
}

pub fn paper_bounds(kind: ChainKind, n: usize) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::Argument("bounds need n >= 1".into()));
    }
    let dim = algebra_dim(kind, n);
    let ni = n as i128;
    let (total, stages) = match kind {
        ChainKind::Brauer | ChainKind::BMWStructural => {
            let total = q(4 * ni * ni - ni + 4, 1) * qu(dim);
            let stages = (2..=n).map(|i| (i, q(16 * i as i128 - 17, 2 * ni - 1) * qu(dim))).collect();
            (Some(total), stages)
        }
        ChainKind::TemperleyLieb => {
            let total = q(ni * ni * ni + 9 * ni * ni + 8 * ni - 12, 6) * qu(dim);
            let stages = (2..=n)
                .map(|i| {
                    let ii = i as i128;
                    (i, q((4 * ii - 6 + 2 * ii * ii) * (ni + 1) * ni, ii * 2 * ni * (2 * ni - 1)) * qu(dim))
                })
                .collect();
            (Some(total), stages)
        }
        ChainKind::SymmetricGroup => (None, Vec::new()),
    };
    Ok(BoundReport { kind, n, dim, total, stages })
}

/// Evaluates the general-chain bound. All slices are indexed by level 0..=n;
/// `m_max[i]` is max M(α_i, α_{i−1}) and `factor_sizes[j]` is |B_j|.
pub fn general_bound(dims: &[u128], m_max: &[u128], irrep_counts: &[u128], factor_sizes: &[u128]) -> Result<Scalar> {
    let len = dims.len();
    if len == 0 || m_max.len() != len || irrep_counts.len() != len || factor_sizes.len() != len {
        return Err(Error::Argument("general_bound inputs must all have length n+1".into()));
    }
    let n = len - 1;
    let mut sum = qu(0);
    for k in 1..=n {
        for i in 2..=k {
            let mut term = qu(m_max[i - 1] * m_max[i - 1] * irrep_counts[i - 2]);
            term *= BigRational::new(BigInt::from(dims[i]), BigInt::from(dims[i - 1]));
            term *= BigRational::new(BigInt::from(dims[k - 1]), BigInt::from(dims[k]));
            for &b in &factor_sizes[i..=k] {
                term *= qu(b);
            }
            sum += term;
        }
    }
    Ok(sum * qu(dims[n]))
}

/// Inputs of [`general_bound`] read off a Bratteli diagram, with the
/// per-level factor sizes supplied by the caller.
pub fn general_bound_inputs(b: &BratteliDiagram) -> (Vec<u128>, Vec<u128>, Vec<u128>) {
    let n = b.depth();
    let dims = (0..=n).map(|l| b.sum_dim_squares(l)).collect();
    let m_max = (0..=n)
        .map(|l| if l == 0 { 0 } else { (0..b.level_len(l)).any(|v| !b.predecessors(VertexId::new(l, v)).is_empty()) as u128 })
        .collect();
    let counts = (0..=n).map(|l| b.level_len(l) as u128).collect();
    (dims, m_max, counts)
}

/// Level-indexed lookup from partition to vertex index, for all levels.
pub fn vertex_lookup(b: &BratteliDiagram) -> Vec<BTreeMap<Partition, usize>> {
    (0..=b.depth())
        .map(|l| b.level(l).iter().enumerate().map(|(i, p)| (p.clone(), i)).collect())
        .collect()
}

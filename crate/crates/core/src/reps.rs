//! Chain-adapted irreducible representations in Gel'fand-Tsetlin bases,
//! stored as frame-local generator blocks.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num::{One, Zero};

use crate::combinat::{build_bratteli, BratteliDiagram, ChainKind, Partition, VertexId};
use crate::diagrams::{self, Diagram, FactorChain, GeneratorWord, RelationReport, Token};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::pathalg::PathTable;
use crate::scalar::{self, Scalar};

pub mod cell;
pub mod oracle;

/// Matrix of generator `token` on the two-step paths μ → · → ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBlock {
    pub token: Token,
    /// Level of the middle vertices (the token index).
    pub level: usize,
    pub mu: usize,
    pub nu: usize,
    /// Middle vertex indices at `level`, canonical order.
    pub middles: Vec<usize>,
    pub matrix: Mat,
}

/// Row-sparse square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    n: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMat {
    pub fn from_dense(m: &Mat) -> Self {
        let rows = (0..m.rows())
            .map(|r| (0..m.cols()).filter(|&c| !m[(r, c)].is_zero()).map(|c| (c, m[(r, c)].clone())).collect())
            .collect();
        SparseMat { n: m.cols(), rows }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.rows.len(), self.n);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m[(r, *c)] = v.clone();
            }
        }
        m
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.rows[r]
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// self · m
    pub fn mul_dense(&self, m: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows.len(), m.cols());
        for (r, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for c in 0..m.cols() {
                    let b = &m[(*k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Complete adapted system for a chain up to depth n.
#[derive(Clone, Debug)]
pub struct AdaptedRep {
    kind: ChainKind,
    n: usize,
    q: Option<Scalar>,
    bratteli: BratteliDiagram,
    table: PathTable,
    blocks: BTreeMap<(Token, usize, usize), LocalBlock>,
    /// gens[l][token][v]: assembled matrix at level l.
    gens: Vec<BTreeMap<Token, Vec<SparseMat>>>,
    factors: FactorChain,
    table_cache: OnceLock<DiagramTable>,
    dual_cache: OnceLock<DualBasis>,
}

fn tokens_below(kind: ChainKind, level: usize) -> Vec<Token> {
    let mut out = Vec::new();
    for i in 1..level {
        if kind.has_r() {
            out.push(Token::R(i));
        }
        if kind.has_e() {
            out.push(Token::E(i));
        }
    }
    out
}

/// Index of the row where `upper` differs from `lower` by one box, and
/// whether it was an addition.
fn changed_row(lower: &Partition, upper: &Partition) -> (usize, bool) {
    let (a, b) = (lower.parts(), upper.parts());
    let len = a.len().max(b.len());
    for r in 0..len {
        let x = a.get(r).copied().unwrap_or(0);
        let y = b.get(r).copied().unwrap_or(0);
        if x != y {
            return (r, y > x);
        }
    }
    unreachable!("adjacent vertices differ by one box")
}

/// Middle vertices of the frame (μ at level i−1, ν at level i+1).
pub fn frame_middles(b: &BratteliDiagram, i: usize, mu: usize, nu: usize) -> Vec<usize> {
    let up = b.successors(VertexId::new(i - 1, mu));
    let down = b.predecessors(VertexId::new(i + 1, nu));
    up.iter().copied().filter(|x| down.contains(x)).collect()
}

fn frames(b: &BratteliDiagram, i: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for mu in 0..b.level_len(i - 1) {
        let mut tops: Vec<usize> = b
            .successors(VertexId::new(i - 1, mu))
            .iter()
            .flat_map(|&l| b.successors(VertexId::new(i, l)).iter().copied())
            .collect();
        tops.sort_unstable();
        tops.dedup();
        for nu in tops {
            out.push((mu, nu, frame_middles(b, i, mu, nu)));
        }
    }
    out
}

fn young_blocks(b: &BratteliDiagram, i: usize) -> Vec<LocalBlock> {
    let content = |p: &Partition, row: usize| p.content_of_row_end(row);
    frames(b, i)
        .into_iter()
        .map(|(mu, nu, middles)| {
            let pm = &b.level(i - 1)[mu];
            let pn = &b.level(i + 1)[nu];
            // (row of first box, row of second box, axial distance) per middle
            let data: Vec<(usize, usize, i64)> = middles
                .iter()
                .map(|&l| {
                    let pl = &b.level(i)[l];
                    let (x, _) = changed_row(pm, pl);
                    let (y, _) = changed_row(pl, pn);
                    (x, y, content(pn, y) - content(pl, x))
                })
                .collect();
            let k = middles.len();
            let mut m = Mat::zeros(k, k);
            for (a, &(x, y, d)) in data.iter().enumerate() {
                m[(a, a)] = scalar::ratio(1, d);
                if k == 2 {
                    m[(1 - a, a)] = if x < y { Scalar::one() } else { Scalar::one() - scalar::ratio(1, d * d) };
                }
            }
            LocalBlock { token: Token::R(i), level: i, mu, nu, middles, matrix: m }
        })
        .collect()
}

/// Chebyshev values [0..=k] with [1] = 1, [2] = q.
fn quantum_ints(q: &Scalar, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(), Scalar::one()];
    while v.len() <= k {
        let l = v.len();
        let next = q * &v[l - 1] - &v[l - 2];
        v.push(next);
    }
    v
}

fn tl_blocks(b: &BratteliDiagram, i: usize, q: &Scalar) -> Result<Vec<LocalBlock>> {
    let qi = quantum_ints(q, i + 3);
    let mut out = Vec::new();
    for (mu, nu, middles) in frames(b, i) {
        let pm = &b.level(i - 1)[mu];
        let pn = &b.level(i + 1)[nu];
        let row = |p: &Partition, r: usize| p.parts().get(r).copied().unwrap_or(0);
        let d = row(pm, 0) - row(pm, 1);
        let mixed = row(pn, 1) > row(pm, 1) && row(pn, 0) > row(pm, 0);
        let k = middles.len();
        let mut m = Mat::zeros(k, k);
        if mixed {
            if qi[d + 1].is_zero() {
                return Err(Error::Parameter(format!("[{}] vanishes at q = {q}", d + 1)));
            }
            let a = &qi[d + 2] / &qi[d + 1];
            let bb = &qi[d] / &qi[d + 1];
            m[(0, 0)] = a.clone();
            if k == 2 {
                m[(0, 1)] = Scalar::one();
                m[(1, 0)] = &a * &bb;
                m[(1, 1)] = bb;
            }
        }
        out.push(LocalBlock { token: Token::E(i), level: i, mu, nu, middles, matrix: m });
    }
    Ok(out)
}

/// Frame-local generator data for the chain at depth n.
pub fn local_blocks(kind: ChainKind, n: usize, q: Option<&Scalar>) -> Result<Vec<LocalBlock>> {
    let b = build_bratteli(kind, n);
    match kind {
        ChainKind::SymmetricGroup => Ok((1..n).flat_map(|i| young_blocks(&b, i)).collect()),
        ChainKind::TemperleyLieb => {
            let q = q.ok_or_else(|| Error::Argument("Temperley-Lieb needs q".into()))?;
            let mut out = Vec::new();
            for i in 1..n {
                out.extend(tl_blocks(&b, i, q)?);
            }
            Ok(out)
        }
        ChainKind::Brauer => {
            let q = q.ok_or_else(|| Error::Argument("Brauer needs q".into()))?;
            cell::brauer_blocks(n, q)
        }
        ChainKind::BMWStructural => Err(Error::Capability("BMW representations are not implemented".into())),
    }
}

/// Full matrix of `token` at vertex `v`, built from frame blocks.
fn assemble_from(
    b: &BratteliDiagram,
    table: &PathTable,
    blocks: &BTreeMap<(Token, usize, usize), LocalBlock>,
    token: Token,
    v: VertexId,
) -> Result<Mat> {
    if !b.contains(v) {
        return Err(Error::InvalidVertex(format!("{v:?}")));
    }
    let i = token.index();
    if i == 0 || i >= v.level {
        return Err(Error::Argument(format!("{token} does not act at level {}", v.level)));
    }
    let idx = table.at(v);
    let d = idx.len();
    let mut m = Mat::zeros(d, d);
    for a in 0..d {
        let p = idx.path(a);
        let blk = blocks
            .get(&(token, p[i - 1], p[i + 1]))
            .ok_or_else(|| Error::Internal(format!("missing block {token} ({}, {})", p[i - 1], p[i + 1])))?;
        let r = blk.middles.iter().position(|&x| x == p[i]).expect("middle present");
        for (c, &w) in blk.middles.iter().enumerate() {
            let mut p2 = p.clone();
            p2[i] = w;
            let bidx = idx.index_of(&p2).expect("neighbour path");
            m[(a, bidx)] = blk.matrix[(r, c)].clone();
        }
    }
    Ok(m)
}

/// Frame blocks read off full level-(i+1) matrices using the first
/// path through each frame.
pub(crate) fn extract_blocks(
    b: &BratteliDiagram,
    table: &PathTable,
    i: usize,
    token: Token,
    top: &[Mat],
) -> Vec<LocalBlock> {
    frames(b, i)
        .into_iter()
        .map(|(mu, nu, middles)| {
            let idx = table.at(VertexId::new(i + 1, nu));
            let base = idx.paths().iter().find(|p| p[i - 1] == mu).expect("frame path").clone();
            let k = middles.len();
            let mut m = Mat::zeros(k, k);
            for (r, &a) in middles.iter().enumerate() {
                for (c, &bb) in middles.iter().enumerate() {
                    let (mut pa, mut pb) = (base.clone(), base.clone());
                    pa[i] = a;
                    pb[i] = bb;
                    m[(r, c)] = top[nu][(idx.index_of(&pa).unwrap(), idx.index_of(&pb).unwrap())].clone();
                }
            }
            LocalBlock { token, level: i, mu, nu, middles, matrix: m }
        })
        .collect()
}

impl AdaptedRep {
    /// Builds the adapted system from the chain's own construction.
    pub fn new(kind: ChainKind, n: usize, q: Option<&Scalar>) -> Result<Self> {
        if kind == ChainKind::SymmetricGroup && q.is_some() {
            return Err(Error::Argument("the symmetric group chain takes no q".into()));
        }
        let blocks = local_blocks(kind, n, q)?;
        Self::from_blocks(kind, n, q.cloned(), blocks)
    }

    /// Convenience constructor using the default q where one is needed.
    pub fn with_default_q(kind: ChainKind, n: usize) -> Result<Self> {
        match kind {
            ChainKind::SymmetricGroup => Self::new(kind, n, None),
            _ => Self::new(kind, n, Some(&scalar::default_q())),
        }
    }

    pub fn from_blocks(kind: ChainKind, n: usize, q: Option<Scalar>, blocks: Vec<LocalBlock>) -> Result<Self> {
        let bratteli = build_bratteli(kind, n);
        let table = PathTable::new(&bratteli);
        let blocks: BTreeMap<_, _> = blocks.into_iter().map(|b| ((b.token, b.mu, b.nu), b)).collect();
        let mut gens = Vec::new();
        for l in 0..=n {
            let mut per = BTreeMap::new();
            for t in tokens_below(kind, l) {
                let mats = (0..bratteli.level_len(l))
                    .map(|v| assemble_from(&bratteli, &table, &blocks, t, VertexId::new(l, v)).map(|m| SparseMat::from_dense(&m)))
                    .collect::<Result<Vec<_>>>()?;
                per.insert(t, mats);
            }
            gens.push(per);
        }
        let factors = FactorChain::new(kind, n.max(1))?;
        Ok(AdaptedRep { kind, n, q, bratteli, table, blocks, gens, factors, table_cache: OnceLock::new(), dual_cache: OnceLock::new() })
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> Option<&Scalar> {
        self.q.as_ref()
    }

    /// q as a scalar; 1 for the symmetric group (no loops occur there).
    pub fn q_value(&self) -> Scalar {
        self.q.clone().unwrap_or_else(Scalar::one)
    }

    pub fn bratteli(&self) -> &BratteliDiagram {
        &self.bratteli
    }

    pub fn table(&self) -> &PathTable {
        &self.table
    }

    pub fn factors(&self) -> &FactorChain {
        &self.factors
    }

    /// ρ(d) for every basis diagram at level n, built once.
    pub fn diagram_table(&self) -> Result<&DiagramTable> {
        if let Some(t) = self.table_cache.get() {
            return Ok(t);
        }
        let t = DiagramTable::new(self)?;
        Ok(self.table_cache.get_or_init(|| t))
    }

    /// Dual basis of the trace form, built once.
    pub fn dual_basis(&self) -> Result<&DualBasis> {
        if let Some(d) = self.dual_cache.get() {
            return Ok(d);
        }
        let d = gram_dual(self, self.diagram_table()?)?;
        Ok(self.dual_cache.get_or_init(|| d))
    }

    pub fn blocks(&self) -> impl Iterator<Item = &LocalBlock> {
        self.blocks.values()
    }

    pub fn block(&self, token: Token, mu: usize, nu: usize) -> Option<&LocalBlock> {
        self.blocks.get(&(token, mu, nu))
    }

    pub fn tokens(&self, level: usize) -> Vec<Token> {
        tokens_below(self.kind, level)
    }

    pub fn generator(&self, token: Token, v: VertexId) -> Result<&SparseMat> {
        self.gens
            .get(v.level)
            .and_then(|g| g.get(&token))
            .and_then(|m| m.get(v.index))
            .ok_or_else(|| Error::Argument(format!("{token} at {v:?} unavailable")))
    }

    /// ρ(word) at vertex v.
    pub fn word_matrix(&self, word: &GeneratorWord, v: VertexId) -> Result<Mat> {
        let d = self.bratteli.dim(v) as usize;
        let mut m = Mat::identity(d);
        for &t in word.tokens().iter().rev() {
            m = self.generator(t, v)?.mul_dense(&m);
        }
        Ok(m)
    }
}

pub fn assemble_matrix(rep: &AdaptedRep, token: Token, lambda: VertexId) -> Result<Mat> {
    if !rep.bratteli.contains(lambda) {
        return Err(Error::InvalidVertex(format!("{lambda:?}")));
    }
    assemble_from(&rep.bratteli, &rep.table, &rep.blocks, token, lambda)
}

/// ρ_λ(d) as q^c times the product along the generator word of d.
pub fn rep_of_diagram(rep: &AdaptedRep, d: &Diagram, lambda: VertexId) -> Result<Mat> {
    if d.n() != lambda.level || d.n() > rep.n {
        return Err(Error::Argument(format!("diagram size {} vs level {}", d.n(), lambda.level)));
    }
    if d.n() <= 1 {
        return Ok(Mat::identity(1));
    }
    let word = rep.factors.word_of(d)?;
    let lp = diagrams::evaluate(rep.kind, d.n(), &word)?;
    let m = rep.word_matrix(&word, lambda)?;
    // word evaluates to q^c d, so ρ(d) = q^{-c} ρ(word)
    Ok(if lp.loops == 0 { m } else { m.scale(&scalar::pow(&rep.q_value(), lp.loops).recip()) })
}

/// Checks every defining relation as a matrix identity at every level ≤ n.
pub fn check_matrix_relations(rep: &AdaptedRep) -> RelationReport {
    let mut out = RelationReport::default();
    let q = rep.q_value();
    for l in 2..=rep.n {
        for rel in diagrams::relations(rep.kind, l) {
            for v in 0..rep.bratteli.level_len(l) {
                let vid = VertexId::new(l, v);
                out.checked += 1;
                let lhs = rep.word_matrix(&rel.lhs, vid);
                let rhs = rep.word_matrix(&rel.rhs, vid);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b.scale(&scalar::pow(&q, rel.rhs_loops)) => {}
                    _ => out.failures.push(format!("level {l} vertex {}: {}", rep.bratteli.level(l)[v], rel.label)),
                }
            }
        }
    }
    out
}

/// Checks that each lower generator is block diagonal along the last step.
pub fn check_adapted(rep: &AdaptedRep) -> RelationReport {
    let mut out = RelationReport::default();
    for l in 2..=rep.n {
        for v in 0..rep.bratteli.level_len(l) {
            let vid = VertexId::new(l, v);
            let idx = rep.table.at(vid);
            for t in tokens_below(rep.kind, l - 1) {
                out.checked += 1;
                let g = rep.generator(t, vid).expect("generator");
                let ok = (0..idx.len()).all(|a| {
                    let pa = idx.path(a);
                    g.row(a).iter().all(|(c, x)| {
                        let pc = idx.path(*c);
                        if pa[l - 1] != pc[l - 1] {
                            return false;
                        }
                        let sub = rep.table.at(VertexId::new(l - 1, pa[l - 1]));
                        let lower = rep.generator(t, VertexId::new(l - 1, pa[l - 1])).expect("lower generator");
                        let (ia, ic) = (sub.index_of(&pa[..l]).unwrap(), sub.index_of(&pc[..l]).unwrap());
                        lower.row(ia).iter().any(|(k, y)| *k == ic && y == x)
                    }) && {
                        // every nonzero of the lower block appears
                        let sub = rep.table.at(VertexId::new(l - 1, pa[l - 1]));
                        let lower = rep.generator(t, VertexId::new(l - 1, pa[l - 1])).expect("lower generator");
                        let ia = sub.index_of(&pa[..l]).unwrap();
                        lower.row(ia).len() == g.row(a).len()
                    }
                });
                if !ok {
                    out.failures.push(format!("{t} not adapted at level {l} vertex {}", rep.bratteli.level(l)[v]));
                }
            }
        }
    }
    out
}

/// ρ_λ(d) for every basis diagram and every level-n vertex.
#[derive(Clone, Debug)]
pub struct DiagramTable {
    pub diagrams: Vec<Diagram>,
    pub index: HashMap<Diagram, usize>,
    /// mats[k][v] = ρ_v(diagrams[k])
    pub mats: Vec<Vec<Mat>>,
}

impl DiagramTable {
    /// Built level by level: ρ(d) = ρ(y) · ρ(b) with ρ(b) block diagonal.
    pub fn new(rep: &AdaptedRep) -> Result<Self> {
        let kind = rep.kind;
        let b = &rep.bratteli;
        let mut prev: Option<DiagramTable> = None;
        for m in 1..=rep.n {
            let diagrams = diagrams::all_diagrams(kind, m);
            let index: HashMap<Diagram, usize> = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
            let mut mats = Vec::with_capacity(diagrams.len());
            if m == 1 {
                mats.push(vec![Mat::identity(1)]);
            } else {
                let p = prev.as_ref().expect("previous level");
                let fz = rep.factors.at(m);
                for d in &diagrams {
                    let (yi, sub) = fz.factor(d)?;
                    let sub = sub.restrict().expect("subalgebra factor");
                    let k = p.index[&sub];
                    let word = diagrams::word_of_slots(&fz.slots()[yi]);
                    let per: Vec<Mat> = (0..b.level_len(m))
                        .map(|v| {
                            let vid = VertexId::new(m, v);
                            let parts: Vec<&Mat> = b.predecessors(vid).iter().map(|&u| &p.mats[k][u]).collect();
                            let mut acc = Mat::direct_sum(&parts);
                            for &t in word.tokens().iter().rev() {
                                acc = rep.generator(t, vid).expect("generator").mul_dense(&acc);
                            }
                            acc
                        })
                        .collect();
                    mats.push(per);
                }
            }
            prev = Some(DiagramTable { diagrams, index, mats });
        }
        prev.ok_or_else(|| Error::Argument("diagram table needs n >= 1".into()))
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

/// τ(d) = Σ_λ Tr ρ_λ(d) for each basis diagram.
pub fn diagram_traces(table: &DiagramTable) -> Vec<Scalar> {
    table.mats.iter().map(|per| per.iter().map(Mat::trace).sum()).collect()
}

/// The dual basis of the trace form, with a_j* = Σ_k coeffs[j][k] a_k.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub diagrams: Vec<Diagram>,
    pub coeffs: Mat,
}

/// Gram matrix G[i][k] = τ(a_i a_k).
pub fn gram_matrix(rep: &AdaptedRep, table: &DiagramTable) -> Result<Mat> {
    let traces = diagram_traces(table);
    let q = rep.q_value();
    let n = table.len();
    let mut g = Mat::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            let p = diagrams::diagram_mul(&table.diagrams[i], &table.diagrams[k])?;
            let z = p.diagram.with_kind(rep.kind)?;
            g[(i, k)] = scalar::pow(&q, p.loops) * &traces[table.index[&z]];
        }
    }
    Ok(g)
}

/// Gram matrix size limit for exact inversion.
pub fn gram_limit(kind: ChainKind) -> usize {
    match kind {
        ChainKind::Brauer => 4,
        ChainKind::TemperleyLieb => 6,
        ChainKind::SymmetricGroup => 5,
        ChainKind::BMWStructural => 0,
    }
}

pub fn gram_dual(rep: &AdaptedRep, table: &DiagramTable) -> Result<DualBasis> {
    if rep.n > gram_limit(rep.kind) {
        return Err(Error::Capability(format!("dual basis limited to n <= {} for {}", gram_limit(rep.kind), rep.kind)));
    }
    let g = gram_matrix(rep, table)?;
    let inv = g.inverse().ok_or_else(|| Error::Parameter("trace form is degenerate".into()))?;
    // ⟨a_i, a_j*⟩ = Σ_k C[j][k] G[i][k] = δ_ij  ⇒  C = (Gᵀ)⁻¹
    Ok(DualBasis { diagrams: table.diagrams.clone(), coeffs: inv.transpose() })
}

/// Result of the semisimplicity certificate.
#[derive(Clone, Debug, Default)]
pub struct SemisimpleReport {
    pub gram_rank: Option<usize>,
    pub transform_rank: Option<usize>,
    pub dim: usize,
    pub failures: Vec<String>,
}

impl SemisimpleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rank of the naive transform matrix: columns are diagrams, rows all
/// (λ, i, j) entries.
pub fn transform_matrix(table: &DiagramTable) -> Mat {
    let cols = table.len();
    let rows: usize = table.mats.first().map_or(0, |per| per.iter().map(|m| m.rows() * m.cols()).sum());
    let mut t = Mat::zeros(rows, cols);
    for (k, per) in table.mats.iter().enumerate() {
        let mut r = 0;
        for m in per {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    t[(r, k)] = m[(i, j)].clone();
                    r += 1;
                }
            }
        }
    }
    t
}

/// Certifies that the adapted system is complete at the chosen q.
pub fn verify_semisimple(kind: ChainKind, n: usize, q: Option<&Scalar>) -> SemisimpleReport {
    let mut rep_out = SemisimpleReport { dim: crate::combinat::algebra_dim(kind, n) as usize, ..Default::default() };
    let rep = match AdaptedRep::new(kind, n, q) {
        Ok(r) => r,
        Err(e) => {
            rep_out.failures.push(format!("construction failed: {e}"));
            return rep_out;
        }
    };
    let table = match DiagramTable::new(&rep) {
        Ok(t) => t,
        Err(e) => {
            rep_out.failures.push(format!("diagram table failed: {e}"));
            return rep_out;
        }
    };
    let tr = transform_matrix(&table).rank();
    rep_out.transform_rank = Some(tr);
    if tr != rep_out.dim {
        rep_out.failures.push(format!("transform rank {tr} < {}", rep_out.dim));
    }
    if let Ok(g) = gram_matrix(&rep, &table) {
        let gr = g.rank();
        rep_out.gram_rank = Some(gr);
        if gr != rep_out.dim {
            rep_out.failures.push(format!("Gram rank {gr} < {}", rep_out.dim));
        }
    }
    rep_out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{default_q, int};

    #[test]
    fn relations_hold_small() {
        for (kind, n) in [(ChainKind::SymmetricGroup, 5), (ChainKind::TemperleyLieb, 6), (ChainKind::Brauer, 4)] {
            let rep = AdaptedRep::with_default_q(kind, n).unwrap();
            let r = check_matrix_relations(&rep);
            assert!(r.ok(), "{kind}: {:?}", &r.failures[..r.failures.len().min(5)]);
            let a = check_adapted(&rep);
            assert!(a.ok(), "{kind}: {:?}", &a.failures[..a.failures.len().min(5)]);
        }
    }

    #[test]
    fn tl_two_eigenvalues() {
        let rep = AdaptedRep::new(ChainKind::TemperleyLieb, 2, Some(&default_q())).unwrap();
        let b = rep.bratteli();
        let mut vals: Vec<Scalar> = (0..b.level_len(2))
            .map(|v| assemble_matrix(&rep, Token::E(1), VertexId::new(2, v)).unwrap()[(0, 0)].clone())
            .collect();
        vals.sort();
        assert_eq!(vals, vec![Scalar::zero(), default_q()]);
    }

    #[test]
    fn brauer_two_irreps() {
        let q = default_q();
        let rep = AdaptedRep::new(ChainKind::Brauer, 2, Some(&q)).unwrap();
        let b = rep.bratteli();
        let got: Vec<(String, Scalar, Scalar)> = (0..3)
            .map(|v| {
                let vid = VertexId::new(2, v);
                let r = assemble_matrix(&rep, Token::R(1), vid).unwrap()[(0, 0)].clone();
                let e = assemble_matrix(&rep, Token::E(1), vid).unwrap()[(0, 0)].clone();
                (b.level(2)[v].to_string(), r, e)
            })
            .collect();
        assert_eq!(
            got,
            vec![
                ("[2]".to_string(), int(1), int(0)),
                ("[1,1]".to_string(), int(-1), int(0)),
                ("[]".to_string(), int(1), q.clone()),
            ]
        );
        let e1 = diagrams::generator(ChainKind::Brauer, Token::E(1), 2).unwrap();
        assert_eq!(rep_of_diagram(&rep, &e1, VertexId::new(2, 2)).unwrap()[(0, 0)], q);
    }

    #[test]
    fn tl_zero_q_is_degenerate() {
        assert!(matches!(AdaptedRep::new(ChainKind::TemperleyLieb, 3, Some(&int(0))), Err(Error::Parameter(_))));
        assert!(!verify_semisimple(ChainKind::TemperleyLieb, 3, Some(&int(0))).ok());
    }
}


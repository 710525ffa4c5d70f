//! Independent irreducibles from the regular representation.
//!
//! Each level is split by central idempotents of a random central element
//! (eigenvalues found exactly), labelled by arc count and a Jucys-Murphy
//! type central element, and realised on a minimal left ideal. GT lines are
//! cut out by the lower levels' central idempotents and the remaining
//! diagonal freedom is fixed against the level below.

use std::collections::{BTreeMap, HashMap};

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{extract_blocks, tokens_below, AdaptedRep};
use crate::combinat::{build_bratteli, BratteliDiagram, ChainKind, VertexId};
use crate::diagrams::{self, Diagram, Token};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::pathalg::PathTable;
use crate::scalar::{self, int, Scalar};

/// Largest depth handled per chain.
pub fn oracle_limit(kind: ChainKind) -> usize {
    match kind {
        ChainKind::Brauer => 4,
        ChainKind::TemperleyLieb => 6,
        ChainKind::SymmetricGroup => 5,
        ChainKind::BMWStructural => 0,
    }
}

/// Diagram algebra at one size with a full multiplication table.
pub struct RegularAlgebra {
    kind: ChainKind,
    m: usize,
    diagrams: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    mult: Vec<(u32, u8)>,
    qpow: Vec<Scalar>,
}

type Elem = Vec<Scalar>;

impl RegularAlgebra {
    pub fn new(kind: ChainKind, m: usize, q: &Scalar) -> Result<Self> {
        let diagrams = diagrams::all_diagrams(kind, m);
        let index: HashMap<Diagram, usize> = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let n = diagrams.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in &diagrams {
            for y in &diagrams {
                let p = diagrams::diagram_mul(x, y)?;
                let z = p.diagram.with_kind(kind)?;
                mult.push((index[&z] as u32, p.loops as u8));
            }
        }
        let qpow = (0..=m).map(|k| scalar::pow(q, k)).collect();
        Ok(RegularAlgebra { kind, m, diagrams, index, mult, qpow })
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len()
    }

    fn prod(&self, a: usize, b: usize) -> (usize, usize) {
        let (t, l) = self.mult[a * self.dim() + b];
        (t as usize, l as usize)
    }

    pub fn basis(&self, d: &Diagram) -> Result<Elem> {
        let i = *self.index.get(d).ok_or_else(|| Error::Internal(format!("{d} not in the algebra")))?;
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        Ok(v)
    }

    pub fn unit(&self) -> Elem {
        self.basis(&Diagram::identity(self.kind, self.m)).expect("identity diagram")
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for &(b, yb) in &ys {
                let (t, l) = self.prod(a, b);
                let v = xa * yb;
                out[t] += if l == 0 { v } else { v * &self.qpow[l] };
            }
        }
        out
    }

    /// Basis diagram `d` times `y`.
    fn left(&self, d: usize, y: &[Scalar]) -> Elem {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (t, l) = self.prod(d, b);
            out[t] += if l == 0 { yb.clone() } else { yb * &self.qpow[l] };
        }
        out
    }

    /// Image of a smaller-algebra element under the right-strand embedding.
    fn embed_from(&self, lower: &RegularAlgebra, x: &[Scalar]) -> Elem {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, v) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let mut d = lower.diagrams[a].clone();
            while d.n() < self.m {
                d = d.embed();
            }
            out[self.index[&d]] = v.clone();
        }
        out
    }

    /// Trace of left multiplication.
    fn regular_trace(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for d in 0..self.dim() {
                let (t, l) = self.prod(a, d);
                if t == d {
                    acc += xa * &self.qpow[l];
                }
            }
        }
        acc
    }

    fn generator_index(&self, t: Token) -> Result<usize> {
        let g = diagrams::generator(self.kind, t, self.m)?.with_kind(self.kind)?;
        Ok(self.index[&g])
    }

    /// Basis of the centre.
    pub fn center(&self) -> Result<Vec<Elem>> {
        let n = self.dim();
        let mut sys: Option<Mat> = None;
        for t in tokens_below(self.kind, self.m) {
            let g = self.generator_index(t)?;
            let mut rows = vec![vec![Scalar::zero(); n]; n];
            for d in 0..n {
                let (t1, l1) = self.prod(g, d);
                rows[t1][d] += &self.qpow[l1];
                let (t2, l2) = self.prod(d, g);
                rows[t2][d] -= &self.qpow[l2];
            }
            let mut all = sys.map(|m| m.to_rows()).unwrap_or_default();
            all.extend(rows);
            let mut m = Mat::from_rows(all);
            let r = m.rref().len();
            sys = Some(Mat::from_rows((0..r).map(|i| m.row(i).to_vec()).collect()));
        }
        Ok(match sys {
            Some(m) if m.rows() > 0 => m.nullspace(),
            _ => (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect(),
        })
    }
}

// Polynomials are coefficient vectors, lowest degree first.

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Scalar]) -> Vec<Scalar> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
}

fn rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let f = r.last().unwrap() / &lead;
        let shift = r.len() - 1 - db;
        for (k, c) in b.iter().enumerate() {
            let d = &f * c;
            r[shift + k] -= d;
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

fn sturm_chain(p: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let l = chain.len();
        if chain[l - 1].len() == 1 {
            break;
        }
        let r: Vec<Scalar> = rem(&chain[l - 2], &chain[l - 1]).into_iter().map(|c| -c).collect();
        if r.iter().all(Zero::is_zero) {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_changes(chain: &[Vec<Scalar>], x: &Scalar) -> usize {
    let signs: Vec<bool> = chain.iter().map(|p| eval(p, x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Simplest rational in the closed interval [lo, hi].
fn simplest(lo: &Scalar, hi: &Scalar) -> Scalar {
    if !lo.is_positive() && !hi.is_negative() {
        return Scalar::zero();
    }
    if hi.is_negative() {
        return -simplest(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let up = &fl + Scalar::one();
    if &up <= hi {
        return up;
    }
    let inner = simplest(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// All roots of a squarefree polynomial whose roots are rational.
fn rational_roots(p: &[Scalar]) -> Result<Vec<Scalar>> {
    let deg = p.len() - 1;
    let lead = p[deg].clone();
    let bound = Scalar::one() + p[..deg].iter().map(|c| (c / &lead).abs()).fold(Scalar::zero(), |a, b| a.max(b));
    let chain = sturm_chain(p);
    let count = |a: &Scalar, b: &Scalar| sign_changes(&chain, a) - sign_changes(&chain, b);
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let mut guard = 0;
    while let Some((lo, hi)) = stack.pop() {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::Internal("root isolation did not converge".into()));
        }
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            let s = simplest(&lo, &hi);
            if s > lo && eval(p, &s).is_zero() {
                roots.push(s);
                continue;
            }
        }
        let mid = (&lo + &hi) / int(2);
        if c == 1 && eval(p, &mid).is_zero() {
            roots.push(mid);
            continue;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    if roots.len() != deg {
        return Err(Error::Internal(format!("found {} of {deg} roots", roots.len())));
    }
    roots.sort();
    Ok(roots)
}

/// Minimal polynomial of z by linear dependence among its powers.
fn minimal_polynomial(alg: &RegularAlgebra, z: &[Scalar], max_deg: usize) -> Option<Vec<Scalar>> {
    let mut powers = vec![alg.unit()];
    for _ in 0..=max_deg {
        let next = alg.mul(powers.last().unwrap(), z);
        powers.push(next);
        let k = powers.len();
        let mut m = Mat::zeros(alg.dim(), k);
        for (c, v) in powers.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        let ns = m.nullspace();
        if let Some(v) = ns.into_iter().next() {
            let lead = v[k - 1].clone();
            return Some(v.into_iter().map(|c| c / &lead).collect());
        }
    }
    None
}

/// Central primitive idempotents of one level, unlabelled.
pub fn central_idempotents(alg: &RegularAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Elem>> {
    let center = alg.center()?;
    let k = center.len();
    if k == 1 {
        return Ok(vec![alg.unit()]);
    }
    for _ in 0..32 {
        let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-5..=5)).collect();
        let mut z = vec![Scalar::zero(); alg.dim()];
        for (c, v) in coeffs.iter().zip(&center) {
            for (zi, vi) in z.iter_mut().zip(v) {
                *zi += vi * int(*c);
            }
        }
        let Some(p) = minimal_polynomial(alg, &z, k) else { continue };
        if p.len() - 1 != k {
            continue;
        }
        let roots = rational_roots(&p)?;
        let mut out = Vec::new();
        for (j, cj) in roots.iter().enumerate() {
            let mut e = alg.unit();
            for (l, cl) in roots.iter().enumerate() {
                if l == j {
                    continue;
                }
                let shifted: Elem = {
                    let mut s = z.clone();
                    let unit = alg.unit();
                    for (si, ui) in s.iter_mut().zip(&unit) {
                        *si -= ui * cl;
                    }
                    s
                };
                let inv = (cj - cl).recip();
                e = alg.mul(&e, &shifted).into_iter().map(|x| x * &inv).collect();
            }
            if alg.mul(&e, &e) != e {
                return Err(Error::Internal("interpolated idempotent is not idempotent".into()));
            }
            out.push(e);
        }
        return Ok(out);
    }
    Err(Error::Internal("no separating central element found".into()))
}

fn nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

/// e_1 e_3 ⋯ e_{2j-1} as a diagram.
fn arc_element(kind: ChainKind, m: usize, j: usize) -> Result<Diagram> {
    let mut pairs = Vec::new();
    for a in 0..j {
        pairs.push((2 * a + 1, 2 * a + 2));
        pairs.push((m + 2 * a + 1, m + 2 * a + 2));
    }
    for t in 2 * j + 1..=m {
        pairs.push((t, m + t));
    }
    Diagram::from_pairs(kind, m, &pairs)
}

/// Σ_{i<j} (s_ij − e_ij), dropping e_ij for the symmetric group.
fn murphy_sum(alg: &RegularAlgebra) -> Result<Elem> {
    let m = alg.m;
    let mut z = vec![Scalar::zero(); alg.dim()];
    for i in 0..m {
        for j in i + 1..m {
            let mut sigma: Vec<usize> = (0..m).collect();
            sigma.swap(i, j);
            let s = Diagram::from_permutation(alg.kind, &sigma)?;
            z[alg.index[&s]] += Scalar::one();
            if alg.kind == ChainKind::Brauer {
                let mut pairs = vec![(i + 1, j + 1), (m + i + 1, m + j + 1)];
                pairs.extend((1..=m).filter(|&t| t != i + 1 && t != j + 1).map(|t| (t, m + t)));
                let e = Diagram::from_pairs(alg.kind, m, &pairs)?;
                z[alg.index[&e]] -= Scalar::one();
            }
        }
    }
    Ok(z)
}

/// Vertex of `b` at level m matching the idempotent.
fn label(alg: &RegularAlgebra, b: &BratteliDiagram, e: &[Scalar], q: &Scalar) -> Result<usize> {
    let m = alg.m;
    let kind = alg.kind;
    let mut arcs = 0;
    if kind != ChainKind::SymmetricGroup {
        for j in 1..=m / 2 {
            let p = alg.basis(&arc_element(kind, m, j)?)?;
            if nonzero(&alg.mul(&p, e)) {
                arcs = j;
            } else {
                break;
            }
        }
    }
    let candidates: Vec<usize> = (0..b.level_len(m))
        .filter(|&v| {
            let p = &b.level(m)[v];
            match kind {
                ChainKind::TemperleyLieb => p.parts().get(1).copied().unwrap_or(0) == arcs,
                _ => p.size() == m - 2 * arcs,
            }
        })
        .collect();
    if kind == ChainKind::TemperleyLieb {
        return match candidates.as_slice() {
            [v] => Ok(*v),
            _ => Err(Error::Internal(format!("no unique label for {arcs} arcs"))),
        };
    }
    let z = murphy_sum(alg)?;
    let ze = alg.mul(&z, e);
    let pivot = e.iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
    let c = &ze[pivot] / &e[pivot];
    if ze != e.iter().map(|x| x * &c).collect::<Vec<_>>() {
        return Err(Error::Internal("Murphy sum is not scalar on a block".into()));
    }
    let shift = (q - Scalar::one()) * int(arcs as i64);
    let content = &c + &shift;
    let hits: Vec<usize> =
        candidates.into_iter().filter(|&v| int(b.level(m)[v].content_sum()) == content).collect();
    match hits.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::Internal(format!("eigenvalue {c} matches {} vertices", hits.len()))),
    }
}

/// Finds nonzero s with a_{ij} s_j = b_{ij} s_i for all matrix pairs, i.e.
/// diag(s)⁻¹ a diag(s) = b.
pub fn diagonal_gauge(d: usize, a: &[Mat], b: &[Mat]) -> Option<Vec<Scalar>> {
    let mut rows = Vec::new();
    for (x, y) in a.iter().zip(b) {
        for i in 0..d {
            for j in 0..d {
                if x[(i, j)].is_zero() && y[(i, j)].is_zero() {
                    continue;
                }
                let mut r = vec![Scalar::zero(); d];
                r[j] += &x[(i, j)];
                r[i] -= &y[(i, j)];
                rows.push(r);
            }
        }
    }
    let sys = if rows.is_empty() { Mat::zeros(0, d) } else { Mat::from_rows(rows) };
    let ns = sys.nullspace();
    let sum: Vec<Scalar> = (0..d).map(|i| ns.iter().map(|v| v[i].clone()).sum()).collect();
    let s = ns.into_iter().chain(std::iter::once(sum)).find(|v| v.iter().all(|x| !x.is_zero()))?;
    let ok = a.iter().zip(b).all(|(x, y)| {
        (0..d).all(|i| (0..d).all(|j| &x[(i, j)] * &s[j] == &y[(i, j)] * &s[i]))
    });
    ok.then_some(s)
}

struct LevelData {
    alg: RegularAlgebra,
    /// central idempotent per vertex index
    central: Vec<Elem>,
    /// mats[token][v] in the adapted basis
    mats: BTreeMap<Token, Vec<Mat>>,
}

/// Coordinates of vectors in the span of a fixed basis.
struct Coords {
    basis: Vec<Elem>,
    piv: Vec<usize>,
    inv_t: Mat,
}

impl Coords {
    fn new(basis: Vec<Elem>) -> Self {
        let mut m = Mat::from_rows(basis.clone());
        let piv = m.rref();
        let sub = Mat::from_rows(basis.iter().map(|v| piv.iter().map(|&p| v[p].clone()).collect()).collect());
        let inv_t = sub.transpose().inverse().expect("independent basis");
        Coords { basis, piv, inv_t }
    }

    fn of(&self, w: &[Scalar]) -> Result<Vec<Scalar>> {
        let rhs: Vec<Scalar> = self.piv.iter().map(|&p| w[p].clone()).collect();
        let c = self.inv_t.mul_vec(&rhs);
        let mut back = vec![Scalar::zero(); w.len()];
        for (ci, u) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (b, x) in back.iter_mut().zip(u) {
                *b += ci * x;
            }
        }
        if back != w {
            return Err(Error::Internal("vector leaves the module".into()));
        }
        Ok(c)
    }
}

/// Adapted irreducibles for the chain, built from the regular representation.
pub fn oracle_irreps(kind: ChainKind, n: usize, q: Option<&Scalar>, seed: u64) -> Result<AdaptedRep> {
    if n > oracle_limit(kind) {
        return Err(Error::Capability(format!("oracle limited to n <= {} for {kind}", oracle_limit(kind))));
    }
    let qv = match (kind, q) {
        (ChainKind::SymmetricGroup, _) => Scalar::one(),
        (_, Some(q)) => q.clone(),
        (_, None) => return Err(Error::Argument(format!("{kind} needs q"))),
    };
    let b = build_bratteli(kind, n);
    let table = PathTable::new(&b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut levels: Vec<LevelData> = Vec::new();
    let mut blocks = Vec::new();
    for m in 1..=n {
        let alg = RegularAlgebra::new(kind, m, &qv)?;
        let ids = central_idempotents(&alg, &mut rng)?;
        if ids.len() != b.level_len(m) {
            return Err(Error::Internal(format!("level {m}: {} blocks vs {} vertices", ids.len(), b.level_len(m))));
        }
        let mut central: Vec<Option<Elem>> = vec![None; ids.len()];
        for e in ids {
            let v = label(&alg, &b, &e, &qv)?;
            let d = b.dim(VertexId::new(m, v));
            if alg.regular_trace(&e) != int((d * d) as i64) {
                return Err(Error::Internal(format!("level {m}: block {} has the wrong size", b.level(m)[v])));
            }
            if central[v].replace(e).is_some() {
                return Err(Error::Internal(format!("level {m}: label {} used twice", b.level(m)[v])));
            }
        }
        let central: Vec<Elem> = central.into_iter().map(|e| e.expect("all labels hit")).collect();
        // lower central idempotents pulled up to this level
        let lifted: Vec<Vec<Elem>> =
            levels.iter().map(|l| l.central.iter().map(|e| alg.embed_from(&l.alg, e)).collect()).collect();
        let tokens = tokens_below(kind, m);
        let mut mats: BTreeMap<Token, Vec<Mat>> = tokens.iter().map(|&t| (t, Vec::new())).collect();
        for (v, ev) in central.iter().enumerate() {
            let vid = VertexId::new(m, v);
            let idx = table.at(vid);
            let d = idx.len();
            // edges: E_λ' E_λ ≠ 0 exactly for predecessors
            if m >= 2 {
                for (u, eu) in lifted[m - 2].iter().enumerate() {
                    let touches = nonzero(&alg.mul(eu, ev));
                    if touches != b.adjacent(VertexId::new(m - 1, u), vid) {
                        return Err(Error::Internal(format!("edge mismatch at {}", b.level(m)[v])));
                    }
                }
            }
            // minimal left ideal A·E_P for the first path P
            let p0 = idx.path(0);
            let mut ep = ev.clone();
            for l in 1..m {
                ep = alg.mul(&ep, &lifted[l - 1][p0[l]]);
            }
            let mut span: Vec<Elem> = Vec::new();
            let mut echelon = Mat::zeros(0, alg.dim());
            for dgm in 0..alg.dim() {
                if span.len() == d {
                    break;
                }
                let w = alg.left(dgm, &ep);
                if !nonzero(&w) {
                    continue;
                }
                let mut rows = echelon.to_rows();
                rows.push(w.clone());
                let mut test = Mat::from_rows(rows);
                let r = test.rref().len();
                if r > span.len() {
                    span.push(w);
                    echelon = Mat::from_rows((0..r).map(|i| test.row(i).to_vec()).collect());
                }
            }
            if span.len() != d {
                return Err(Error::Internal(format!("left ideal at {} has dimension {}", b.level(m)[v], span.len())));
            }
            let coords = Coords::new(span.clone());
            let act = |x: &Elem| -> Result<Mat> {
                let mut out = Mat::zeros(d, d);
                for (c, u) in span.iter().enumerate() {
                    let w = alg.mul(x, u);
                    for (r, val) in coords.of(&w)?.into_iter().enumerate() {
                        out[(r, c)] = val;
                    }
                }
                Ok(out)
            };
            let act_diagram = |g: usize| -> Result<Mat> {
                let mut out = Mat::zeros(d, d);
                for (c, u) in span.iter().enumerate() {
                    for (r, val) in coords.of(&alg.left(g, u))?.into_iter().enumerate() {
                        out[(r, c)] = val;
                    }
                }
                Ok(out)
            };
            // GT lines
            let mut lower_actions: Vec<Vec<Option<Mat>>> = lifted.iter().map(|l| vec![None; l.len()]).collect();
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for path in idx.paths() {
                let mut proj = Mat::identity(d);
                for l in 1..m {
                    let u = path[l];
                    if lower_actions[l - 1][u].is_none() {
                        lower_actions[l - 1][u] = Some(act(&lifted[l - 1][u])?);
                    }
                    proj = proj.mul(lower_actions[l - 1][u].as_ref().unwrap());
                }
                if proj.rank() != 1 {
                    return Err(Error::Internal(format!("GT projector of rank {} at {}", proj.rank(), b.level(m)[v])));
                }
                let c = (0..d).find(|&c| proj.col(c).iter().any(|x| !x.is_zero())).unwrap();
                cols.push(proj.col(c));
            }
            let mut s = Mat::from_rows(cols).transpose();
            let gen_u: Vec<Mat> = tokens.iter().map(|&t| act_diagram(alg.generator_index(t)?)).collect::<Result<_>>()?;
            let conj = |s: &Mat, g: &Mat| -> Result<Mat> {
                let inv = s.inverse().ok_or_else(|| Error::Internal("GT lines are dependent".into()))?;
                Ok(inv.mul(g).mul(s))
            };
            // fix the diagonal freedom block by block against the level below
            if m >= 2 {
                let lower_tokens = tokens_below(kind, m - 1);
                let cur: Vec<Mat> = gen_u[..lower_tokens.len()].iter().map(|g| conj(&s, g)).collect::<Result<_>>()?;
                let mut scale = vec![Scalar::zero(); d];
                let mut start = 0;
                for &u in b.predecessors(vid) {
                    let du = b.dim(VertexId::new(m - 1, u)) as usize;
                    let sub = |x: &Mat| {
                        let mut o = Mat::zeros(du, du);
                        for i in 0..du {
                            for j in 0..du {
                                o[(i, j)] = x[(start + i, start + j)].clone();
                            }
                        }
                        o
                    };
                    let a: Vec<Mat> = cur.iter().map(sub).collect();
                    let target: Vec<Mat> = lower_tokens.iter().map(|t| levels[m - 2].mats[t][u].clone()).collect();
                    let g = diagonal_gauge(du, &a, &target)
                        .ok_or_else(|| Error::Internal(format!("no diagonal gauge at {}", b.level(m)[v])))?;
                    for (i, x) in g.into_iter().enumerate() {
                        scale[start + i] = x;
                    }
                    start += du;
                }
                for c in 0..d {
                    for r in 0..d {
                        let x = &s[(r, c)] * &scale[c];
                        s[(r, c)] = x;
                    }
                }
            }
            for (k, &t) in tokens.iter().enumerate() {
                mats.get_mut(&t).unwrap().push(conj(&s, &gen_u[k])?);
            }
        }
        if m >= 2 {
            for t in [Token::R(m - 1), Token::E(m - 1)] {
                if let Some(top) = mats.get(&t) {
                    blocks.extend(extract_blocks(&b, &table, m - 1, t, top));
                }
            }
        }
        levels.push(LevelData { alg, central, mats });
    }
    let rep = AdaptedRep::from_blocks(kind, n, q.cloned().filter(|_| kind != ChainKind::SymmetricGroup), blocks)?;
    for (li, l) in levels.iter().enumerate() {
        let m = li + 1;
        for (t, per) in &l.mats {
            for (v, full) in per.iter().enumerate() {
                if &rep.generator(*t, VertexId::new(m, v))?.to_dense() != full {
                    return Err(Error::Internal(format!("oracle {t} is not frame local at level {m}")));
                }
            }
        }
    }
    Ok(rep)
}

/// Per-vertex diagonal matrices relating two adapted systems at level n.
pub fn gauge_between(a: &AdaptedRep, b: &AdaptedRep) -> Result<Vec<Vec<Scalar>>> {
    let n = a.n();
    if n != b.n() || a.kind() != b.kind() {
        return Err(Error::Argument("systems for different chains".into()));
    }
    let tokens = a.tokens(n);
    (0..a.bratteli().level_len(n))
        .map(|v| {
            let vid = VertexId::new(n, v);
            let xa: Vec<Mat> = tokens.iter().map(|&t| a.generator(t, vid).map(|m| m.to_dense())).collect::<Result<_>>()?;
            let xb: Vec<Mat> = tokens.iter().map(|&t| b.generator(t, vid).map(|m| m.to_dense())).collect::<Result<_>>()?;
            diagonal_gauge(a.bratteli().dim(vid) as usize, &xa, &xb).ok_or_else(|| Error::Internal(format!("no diagonal gauge at {}", a.bratteli().level(n)[v])))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{default_q, ratio};

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest(&ratio(-7, 5), &ratio(-4, 3)), ratio(-4, 3));
        assert_eq!(simplest(&ratio(31, 10), &ratio(32, 10)), ratio(16, 5));
    }

    #[test]
    fn roots_of_product() {
        // (x - 1/2)(x + 3)(x - 7/3)
        let roots = [ratio(1, 2), int(-3), ratio(7, 3)];
        let mut p = vec![Scalar::one()];
        for r in &roots {
            let mut next = vec![Scalar::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            p = next;
        }
        assert_eq!(rational_roots(&p).unwrap(), vec![int(-3), ratio(1, 2), ratio(7, 3)]);
    }

    #[test]
    fn oracle_matches_construction() {
        let q = default_q();
        for (kind, n, q) in [
            (ChainKind::SymmetricGroup, 4, None),
            (ChainKind::TemperleyLieb, 5, Some(&q)),
            (ChainKind::Brauer, 3, Some(&q)),
        ] {
            let o = oracle_irreps(kind, n, q, 7).unwrap();
            let main = AdaptedRep::new(kind, n, q).unwrap();
            assert!(super::super::check_matrix_relations(&o).ok(), "{kind}");
            gauge_between(&o, &main).unwrap();
        }
    }
}

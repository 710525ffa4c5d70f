//! Brauer irreducibles from cell modules: half-diagrams tensored with a
//! Specht module, then moved into the Gel'fand-Tsetlin basis by solving
//! for intertwiners against the previous level.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::{assemble_from, extract_blocks, tokens_below, AdaptedRep, LocalBlock};
use crate::combinat::{build_bratteli, ChainKind, Partition, VertexId};
use crate::diagrams::{self, Diagram, Token};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::pathalg::PathTable;
use crate::scalar::{self, Scalar};

const FREE: usize = usize::MAX;

/// Partial matchings on m points with exactly k arcs.
pub fn half_diagrams(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, p: usize, arcs_left: usize, frees_left: usize, out: &mut Vec<Vec<usize>>) {
        let m = cur.len();
        if p == m {
            if arcs_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if cur[p] != FREE - 1 {
            go(cur, p + 1, arcs_left, frees_left, out);
            return;
        }
        if frees_left > 0 {
            cur[p] = FREE;
            go(cur, p + 1, arcs_left, frees_left - 1, out);
            cur[p] = FREE - 1;
        }
        if arcs_left > 0 {
            for j in p + 1..m {
                if cur[j] == FREE - 1 {
                    cur[p] = j;
                    cur[j] = p;
                    go(cur, p + 1, arcs_left - 1, frees_left, out);
                    cur[j] = FREE - 1;
                }
            }
            cur[p] = FREE - 1;
        }
    }
    let mut out = Vec::new();
    if 2 * k <= m {
        go(&mut vec![FREE - 1; m], 0, k, m - 2 * k, &mut out);
    }
    out.sort();
    out
}

/// Result of gluing a diagram on top of a half-diagram.
struct Glued {
    half: Vec<usize>,
    /// perm[i] = rank among the old free points of the point joined to the
    /// i-th new free point
    perm: Vec<usize>,
    loops: usize,
}

fn glue(d: &Diagram, half: &[usize]) -> Option<Glued> {
    let m = half.len();
    let mut new_half = vec![FREE; m];
    let mut seen = vec![false; m];
    let rank: Vec<usize> = {
        let mut r = vec![0; m];
        let mut c = 0;
        for p in 0..m {
            if half[p] == FREE {
                r[p] = c;
                c += 1;
            }
        }
        r
    };
    let old_frees = half.iter().filter(|&&x| x == FREE).count();
    let mut perm = Vec::new();
    for t in 0..m {
        if new_half[t] != FREE {
            continue;
        }
        let mut x = d.partner(t);
        loop {
            if x < m {
                new_half[t] = x;
                new_half[x] = t;
                break;
            }
            let p = x - m;
            seen[p] = true;
            if half[p] == FREE {
                perm.push((t, rank[p]));
                break;
            }
            let p2 = half[p];
            seen[p2] = true;
            x = d.partner(m + p2);
        }
    }
    if perm.len() < old_frees {
        return None;
    }
    let mut loops = 0;
    for p in 0..m {
        if seen[p] {
            continue;
        }
        loops += 1;
        let mut cur = p;
        loop {
            seen[cur] = true;
            let p2 = half[cur];
            seen[p2] = true;
            let nxt = d.partner(m + p2) - m;
            if seen[nxt] {
                break;
            }
            cur = nxt;
        }
    }
    perm.sort();
    Some(Glued { half: new_half, perm: perm.into_iter().map(|(_, r)| r).collect(), loops })
}

/// Cell module of the level-m vertex ν.
pub struct CellModule {
    halves: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    spin: usize,
    nu: Partition,
}

impl CellModule {
    pub fn new(m: usize, nu: &Partition, spin: usize) -> Self {
        let halves = half_diagrams(m, (m - nu.size()) / 2);
        let index = halves.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        CellModule { halves, index, spin, nu: nu.clone() }
    }

    pub fn dim(&self) -> usize {
        self.halves.len() * self.spin
    }

    /// Matrix of the diagram d acting on the module.
    fn action(&self, d: &Diagram, q: &Scalar, specht: &mut SpechtCache) -> Result<Mat> {
        let dim = self.dim();
        let mut out = Mat::zeros(dim, dim);
        for (h, half) in self.halves.iter().enumerate() {
            let Some(g) = glue(d, half) else { continue };
            let h2 = self.index[&g.half];
            let w = specht.matrix(&self.nu, &g.perm)?;
            let c = scalar::pow(q, g.loops);
            for s in 0..self.spin {
                for s2 in 0..self.spin {
                    let v = &w[(s2, s)];
                    if !v.is_zero() {
                        out[(h2 * self.spin + s2, h * self.spin + s)] = v * &c;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Symmetric group irreducibles for the Specht factor.
struct SpechtCache {
    rep: Option<AdaptedRep>,
    cache: HashMap<(Partition, Vec<usize>), Mat>,
}

impl SpechtCache {
    fn new(n: usize) -> Result<Self> {
        let rep = if n >= 2 { Some(AdaptedRep::new(ChainKind::SymmetricGroup, n, None)?) } else { None };
        Ok(SpechtCache { rep, cache: HashMap::new() })
    }

    fn matrix(&mut self, nu: &Partition, perm: &[usize]) -> Result<Mat> {
        let j = nu.size();
        if j <= 1 {
            return Ok(Mat::identity(1));
        }
        let key = (nu.clone(), perm.to_vec());
        if let Some(m) = self.cache.get(&key) {
            return Ok(m.clone());
        }
        let rep = self.rep.as_ref().expect("symmetric group rep");
        let v = rep.bratteli().find(j, nu).ok_or_else(|| Error::Internal(format!("no Specht module {nu}")))?;
        let w = Diagram::from_permutation(ChainKind::SymmetricGroup, perm)?;
        let m = super::rep_of_diagram(rep, &w, v)?;
        self.cache.insert(key, m.clone());
        Ok(m)
    }
}

/// Solves π(g) X = X ρ(g) for all g; returns the unique solution up to scale.
fn intertwiner(pis: &[Mat], rhos: &[Mat], rows: usize, cols: usize) -> Result<Mat> {
    let unknowns = rows * cols;
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for (pi, rho) in pis.iter().zip(rhos) {
        for a in 0..rows {
            for c in 0..cols {
                let mut row = vec![Scalar::zero(); unknowns];
                for t in 0..rows {
                    let v = &pi[(a, t)];
                    if !v.is_zero() {
                        row[t * cols + c] += v;
                    }
                }
                for s in 0..cols {
                    let v = &rho[(s, c)];
                    if !v.is_zero() {
                        row[a * cols + s] -= v;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
        // keep the system small
        if eqs.len() > 4 * unknowns {
            let mut m = Mat::from_rows(std::mem::take(&mut eqs));
            let piv = m.rref();
            eqs = (0..piv.len()).map(|r| m.row(r).to_vec()).collect();
        }
    }
    let sys = if eqs.is_empty() { Mat::zeros(0, unknowns) } else { Mat::from_rows(eqs) };
    let ns = sys.nullspace();
    if ns.len() != 1 {
        return Err(Error::Parameter(format!("intertwiner space has dimension {}; q is not generic", ns.len())));
    }
    let v = &ns[0];
    let mut x = Mat::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            x[(r, c)] = v[r * cols + c].clone();
        }
    }
    Ok(x)
}

fn hcat(parts: &[Mat]) -> Mat {
    let rows = parts[0].rows();
    let cols: usize = parts.iter().map(Mat::cols).sum();
    let mut out = Mat::zeros(rows, cols);
    let mut c0 = 0;
    for p in parts {
        for r in 0..rows {
            for c in 0..p.cols() {
                out[(r, c0 + c)] = p[(r, c)].clone();
            }
        }
        c0 += p.cols();
    }
    out
}

/// Frame blocks for the Brauer chain at depth n and parameter q.
pub fn brauer_blocks(n: usize, q: &Scalar) -> Result<Vec<LocalBlock>> {
    let kind = ChainKind::Brauer;
    let b = build_bratteli(kind, n);
    let table = PathTable::new(&b);
    let mut specht = SpechtCache::new(n)?;
    let mut blocks: BTreeMap<(Token, usize, usize), LocalBlock> = BTreeMap::new();
    for m in 2..=n {
        let lower = tokens_below(kind, m - 1);
        let new = [Token::R(m - 1), Token::E(m - 1)];
        let mut tops: BTreeMap<Token, Vec<Mat>> = BTreeMap::new();
        for nu in 0..b.level_len(m) {
            let vid = VertexId::new(m, nu);
            let p = b.partition(vid);
            let spin = specht_dim(&mut specht, p)?;
            let cell = CellModule::new(m, p, spin);
            if cell.dim() as u64 != b.dim(vid) {
                return Err(Error::Internal(format!("cell module {p} has dimension {}", cell.dim())));
            }
            let act = |t: Token, specht: &mut SpechtCache| -> Result<Mat> {
                let g = diagrams::generator(kind, t, m)?;
                cell.action(&g, q, specht)
            };
            let pis: Vec<Mat> = lower.iter().map(|&t| act(t, &mut specht)).collect::<Result<_>>()?;
            let mut xs = Vec::new();
            for &lam in b.predecessors(vid) {
                let lv = VertexId::new(m - 1, lam);
                let rhos: Vec<Mat> = lower
                    .iter()
                    .map(|&t| assemble_from(&b, &table, &blocks, t, lv))
                    .collect::<Result<_>>()?;
                xs.push(intertwiner(&pis, &rhos, cell.dim(), b.dim(lv) as usize)?);
            }
            let basis = hcat(&xs);
            let inv = basis
                .inverse()
                .ok_or_else(|| Error::Parameter(format!("restriction of {p} is not multiplicity free at q = {q}")))?;
            for &t in &new {
                let pi = act(t, &mut specht)?;
                tops.entry(t).or_default().push(inv.mul(&pi).mul(&basis));
            }
        }
        let mut fresh = Vec::new();
        for &t in &new {
            fresh.extend(extract_blocks(&b, &table, m - 1, t, &tops[&t]));
        }
        for blk in fresh {
            blocks.insert((blk.token, blk.mu, blk.nu), blk);
        }
        // frame blocks must reproduce the full matrices for every prefix
        for &t in &new {
            for (nu, full) in tops[&t].iter().enumerate() {
                if &assemble_from(&b, &table, &blocks, t, VertexId::new(m, nu))? != full {
                    return Err(Error::Internal(format!("{t} is not frame local at level {m}")));
                }
            }
        }
    }
    Ok(blocks.into_values().collect())
}

fn specht_dim(specht: &mut SpechtCache, p: &Partition) -> Result<usize> {
    let id: Vec<usize> = (0..p.size()).collect();
    Ok(specht.matrix(p, &id)?.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_diagram_counts() {
        assert_eq!(half_diagrams(4, 0).len(), 1);
        assert_eq!(half_diagrams(4, 1).len(), 6);
        assert_eq!(half_diagrams(4, 2).len(), 3);
        assert_eq!(half_diagrams(5, 2).len(), 15);
        assert!(half_diagrams(3, 2).is_empty());
    }

    #[test]
    fn gluing_counts_loops() {
        let e1 = diagrams::generator(ChainKind::Brauer, Token::E(1), 2).unwrap();
        let h = vec![1, 0];
        let g = glue(&e1, &h).unwrap();
        assert_eq!((g.half, g.loops), (vec![1, 0], 1));
        let free = vec![FREE, FREE];
        assert!(glue(&e1, &free).is_none());
    }
}

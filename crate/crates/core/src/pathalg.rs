//! Root-to-vertex paths, Gel'fand-Tsetlin indexing and the path algebra.

use std::collections::{BTreeMap, HashMap};

use num::Zero;
use serde_json::{json, Value};

use crate::combinat::{BratteliDiagram, VertexId};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::{self, Scalar};

/// Vertex indices per level, root first.
pub type Path = Vec<usize>;

/// All root→v paths, ordered by the last step first, then recursively.
pub fn enumerate_paths(b: &BratteliDiagram, v: VertexId) -> Vec<Path> {
    if v.level == 0 {
        return vec![vec![v.index]];
    }
    let mut out = Vec::new();
    for &u in b.predecessors(v) {
        for mut p in enumerate_paths(b, VertexId::new(v.level - 1, u)) {
            p.push(v.index);
            out.push(p);
        }
    }
    out
}

/// Bijection between the paths to one vertex and 0..d_v.
#[derive(Clone, Debug)]
pub struct GtIndex {
    paths: Vec<Path>,
    lookup: HashMap<Path, usize>,
}

impl GtIndex {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn index_of(&self, p: &[usize]) -> Option<usize> {
        self.lookup.get(p).copied()
    }
}

pub fn gt_index(b: &BratteliDiagram, v: VertexId) -> GtIndex {
    let paths = enumerate_paths(b, v);
    let lookup = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    GtIndex { paths, lookup }
}

/// GT indices for every vertex of a diagram.
#[derive(Clone, Debug)]
pub struct PathTable {
    levels: Vec<Vec<GtIndex>>,
}

impl PathTable {
    pub fn new(b: &BratteliDiagram) -> Self {
        let mut levels: Vec<Vec<GtIndex>> = Vec::new();
        for l in 0..=b.depth() {
            let row = (0..b.level_len(l))
                .map(|v| {
                    let paths: Vec<Path> = if l == 0 {
                        vec![vec![v]]
                    } else {
                        b.predecessors(VertexId::new(l, v))
                            .iter()
                            .flat_map(|&u| {
                                levels[l - 1][u].paths.iter().map(move |p| {
                                    let mut q = p.clone();
                                    q.push(v);
                                    q
                                })
                            })
                            .collect()
                    };
                    let lookup = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
                    GtIndex { paths, lookup }
                })
                .collect();
            levels.push(row);
        }
        PathTable { levels }
    }

    pub fn at(&self, v: VertexId) -> &GtIndex {
        &self.levels[v.level][v.index]
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Element of the level-`level` path algebra, keyed by
/// (endpoint, row path index, column path index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebraElement {
    level: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl PathAlgebraElement {
    pub fn zero(level: usize) -> Self {
        PathAlgebraElement { level, entries: BTreeMap::new() }
    }

    pub fn identity(b: &BratteliDiagram, level: usize) -> Self {
        let mut e = Self::zero(level);
        for (v, &d) in b.dims(level).iter().enumerate() {
            for i in 0..d as usize {
                e.entries.insert((v, i, i), Scalar::from_integer(1.into()));
            }
        }
        e
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize, usize), Scalar> {
        &self.entries
    }

    pub fn get(&self, v: usize, i: usize, j: usize) -> Scalar {
        self.entries.get(&(v, i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c · (P_i, P_j)` at endpoint `v`.
    pub fn add_term(&mut self, v: usize, i: usize, j: usize, c: Scalar) {
        let slot = self.entries.entry((v, i, j)).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&(v, i, j));
        }
    }

    /// Endpoint block as a d_v × d_v matrix.
    pub fn block(&self, b: &BratteliDiagram, v: usize) -> Mat {
        let d = b.dims(self.level)[v] as usize;
        let mut m = Mat::zeros(d, d);
        for (&(w, i, j), c) in self.entries.range((v, 0, 0)..(v + 1, 0, 0)) {
            debug_assert_eq!(w, v);
            m[(i, j)] = c.clone();
        }
        m
    }

    pub fn from_blocks(level: usize, blocks: &[Mat]) -> Self {
        let mut e = Self::zero(level);
        for (v, m) in blocks.iter().enumerate() {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m[(i, j)].is_zero() {
                        e.entries.insert((v, i, j), m[(i, j)].clone());
                    }
                }
            }
        }
        e
    }
}

/// Bilinear extension of (P,Q)(P',Q') = δ_{Q,P'} (P,Q').
pub fn pa_mul(a: &PathAlgebraElement, b: &PathAlgebraElement) -> Result<PathAlgebraElement> {
    if a.level != b.level {
        return Err(Error::Argument(format!("level mismatch {} vs {}", a.level, b.level)));
    }
    let mut rows: HashMap<(usize, usize), Vec<(usize, &Scalar)>> = HashMap::new();
    for (&(v, i, j), c) in &b.entries {
        rows.entry((v, i)).or_default().push((j, c));
    }
    let mut out = PathAlgebraElement::zero(a.level);
    for (&(v, i, j), c) in &a.entries {
        if let Some(row) = rows.get(&(v, j)) {
            for &(k, d) in row {
                out.add_term(v, i, k, c * d);
            }
        }
    }
    Ok(out)
}

/// Level i → i+1 embedding (P,Q) ↦ Σ_e (e∘P, e∘Q).
pub fn embed(b: &BratteliDiagram, table: &PathTable, a: &PathAlgebraElement) -> Result<PathAlgebraElement> {
    let l = a.level;
    if l + 1 > b.depth() || l + 1 > table.depth() {
        return Err(Error::Argument(format!("cannot embed level {l} into depth {}", b.depth())));
    }
    let mut out = PathAlgebraElement::zero(l + 1);
    for (&(v, i, j), c) in &a.entries {
        let src = table.at(VertexId::new(l, v));
        for &w in b.successors(VertexId::new(l, v)) {
            let tgt = table.at(VertexId::new(l + 1, w));
            let ext = |p: &Path| {
                let mut q = p.clone();
                q.push(w);
                tgt.index_of(&q).expect("extended path exists")
            };
            out.add_term(w, ext(src.path(i)), ext(src.path(j)), c.clone());
        }
    }
    Ok(out)
}

/// Per-vertex square blocks at one level; the on-disk image format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub level: usize,
    pub blocks: Vec<Mat>,
}

impl Blocks {
    pub fn zero(b: &BratteliDiagram, level: usize) -> Self {
        let blocks = b.dims(level).iter().map(|&d| Mat::zeros(d as usize, d as usize)).collect();
        Blocks { level, blocks }
    }

    pub fn entry_count(&self) -> usize {
        self.blocks.iter().map(|m| m.rows() * m.cols()).sum()
    }

    pub fn to_json(&self, b: &BratteliDiagram) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(v, m)| {
                let rows: Vec<Vec<String>> =
                    m.to_rows().iter().map(|r| r.iter().map(scalar::render).collect()).collect();
                json!({"vertex": b.level(self.level)[v].to_string(), "matrix": rows})
            })
            .collect();
        json!({"level": self.level, "blocks": blocks})
    }

    pub fn from_json(b: &BratteliDiagram, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("block json: {m}"));
        let level = v["level"].as_u64().ok_or_else(|| bad("missing level"))? as usize;
        if level > b.depth() {
            return Err(bad("level beyond diagram depth"));
        }
        let mut out = Blocks::zero(b, level);
        for blk in v["blocks"].as_array().ok_or_else(|| bad("missing blocks"))? {
            let name = blk["vertex"].as_str().ok_or_else(|| bad("missing vertex"))?;
            let p: crate::combinat::Partition = name.parse()?;
            let vid = b.find(level, &p).ok_or_else(|| bad("unknown vertex"))?;
            let rows = blk["matrix"].as_array().ok_or_else(|| bad("missing matrix"))?;
            let d = out.blocks[vid.index].rows();
            if rows.len() != d {
                return Err(bad("block size mismatch"));
            }
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_array().ok_or_else(|| bad("bad row"))?;
                if row.len() != d {
                    return Err(bad("block size mismatch"));
                }
                for (j, x) in row.iter().enumerate() {
                    out.blocks[vid.index][(i, j)] = scalar::parse(x.as_str().ok_or_else(|| bad("non-string entry"))?)?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{build_bratteli, ChainKind, Partition};
    use crate::scalar::int;

    #[test]
    fn path_examples() {
        let b = build_bratteli(ChainKind::Brauer, 3);
        let v = b.find(3, &Partition::new(vec![1]).unwrap()).unwrap();
        let ps = enumerate_paths(&b, v);
        assert_eq!(ps.len(), 3);
        // canonical level-2 order is [2], [1,1], ∅
        assert_eq!(ps.iter().map(|p| p[2]).collect::<Vec<_>>(), vec![0, 1, 2]);
        let g = gt_index(&b, v);
        assert_eq!((0..3).map(|i| g.index_of(g.path(i)).unwrap()).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(enumerate_paths(&b, VertexId::new(0, 0)).len(), 1);
        let t = build_bratteli(ChainKind::TemperleyLieb, 4);
        let w = t.find(4, &Partition::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(enumerate_paths(&t, w).len(), 2);
    }

    #[test]
    fn delta_rule() {
        let mut a = PathAlgebraElement::zero(3);
        a.add_term(0, 0, 1, int(2));
        let mut b = PathAlgebraElement::zero(3);
        b.add_term(0, 1, 2, int(5));
        let ab = pa_mul(&a, &b).unwrap();
        assert_eq!(ab.entries().len(), 1);
        assert_eq!(ab.get(0, 0, 2), int(10));
        assert!(pa_mul(&b, &a).unwrap().entries().is_empty());
        assert!(pa_mul(&a, &PathAlgebraElement::zero(2)).is_err());
    }

    #[test]
    fn identity_embeds_to_identity() {
        let b = build_bratteli(ChainKind::Brauer, 4);
        let t = PathTable::new(&b);
        for l in 0..4 {
            let id = PathAlgebraElement::identity(&b, l);
            assert_eq!(pa_mul(&id, &id).unwrap(), id);
            assert_eq!(embed(&b, &t, &id).unwrap(), PathAlgebraElement::identity(&b, l + 1));
        }
        let mut p = PathAlgebraElement::zero(1);
        p.add_term(0, 0, 0, int(1));
        assert_eq!(embed(&b, &t, &p).unwrap().entries().len(), 3);
    }
}

//! Fourier transforms on the diagram algebras: the naive matrix sum, the
//! separation-of-variables schedule with operation counting, inversion
//! through the trace form, and the plan with predicted costs.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinat::{self, build_bratteli, BratteliDiagram, ChainKind, QuiverShape, VertexId};
use crate::diagrams::{self, Diagram, Slot, Token};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::pathalg::Blocks;
use crate::reps::AdaptedRep;
use crate::scalar::{self, int, Scalar};

/// Finitely supported coefficient table on the diagram basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    kind: ChainKind,
    n: usize,
    coeffs: BTreeMap<Diagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero(kind: ChainKind, n: usize) -> Self {
        AlgebraElement { kind, n, coeffs: BTreeMap::new() }
    }

    pub fn delta(d: &Diagram) -> Self {
        let mut e = Self::zero(d.kind(), d.n());
        e.coeffs.insert(d.clone(), Scalar::one());
        e
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.coeffs
    }

    pub fn get(&self, d: &Diagram) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds c·d; zero coefficients are dropped.
    pub fn add_term(&mut self, d: &Diagram, c: Scalar) -> Result<()> {
        if d.n() != self.n {
            return Err(Error::Argument(format!("diagram of size {} in an element of size {}", d.n(), self.n)));
        }
        let d = d.with_kind(self.kind)?;
        let slot = self.coeffs.entry(d.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
        Ok(())
    }

    pub fn support(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.compatible(o)?;
        let mut out = self.clone();
        for (d, c) in &o.coeffs {
            out.add_term(d, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = Self::zero(self.kind, self.n);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(d, v)| (d.clone(), v * c)).collect();
        }
        out
    }

    /// Product in the algebra; each closed loop contributes a factor q.
    pub fn mul(&self, o: &AlgebraElement, q: &Scalar) -> Result<AlgebraElement> {
        self.compatible(o)?;
        let mut out = Self::zero(self.kind, self.n);
        for (x, a) in &self.coeffs {
            for (y, b) in &o.coeffs {
                let p = diagrams::diagram_mul(x, y)?;
                out.add_term(&p.diagram, a * b * scalar::pow(q, p.loops))?;
            }
        }
        Ok(out)
    }

    fn compatible(&self, o: &AlgebraElement) -> Result<()> {
        if self.kind != o.kind || self.n != o.n {
            return Err(Error::Argument(format!("{} n={} vs {} n={}", self.kind, self.n, o.kind, o.n)));
        }
        Ok(())
    }

    /// Independent uniform coefficients in −9..=9 on every basis diagram.
    pub fn random<R: Rng>(kind: ChainKind, n: usize, rng: &mut R) -> Result<Self> {
        if kind == ChainKind::BMWStructural {
            return Err(Error::Capability("BMW carries no multiplication data".into()));
        }
        let mut e = Self::zero(kind, n);
        for d in diagrams::all_diagrams(kind, n) {
            let v: i64 = rng.gen_range(-9..=9);
            if v != 0 {
                e.coeffs.insert(d, int(v));
            }
        }
        Ok(e)
    }

    /// [`Self::random`] driven by a ChaCha8 stream with the given seed.
    pub fn random_seeded(kind: ChainKind, n: usize, seed: u64) -> Result<Self> {
        Self::random(kind, n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn to_json(&self, q: Option<&Scalar>) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(d, v)| json!({"diagram": d.to_string(), "value": scalar::render(v)}))
            .collect();
        json!({
            "chain": self.kind.name(),
            "n": self.n,
            "q": q.map(scalar::render),
            "coeffs": coeffs,
        })
    }

    /// Parses the coefficient file; returns the element and its q if given.
    pub fn from_json(v: &Value) -> Result<(AlgebraElement, Option<Scalar>)> {
        let bad = |m: &str| Error::Parse(format!("coefficient json: {m}"));
        let kind: ChainKind = v["chain"].as_str().ok_or_else(|| bad("missing chain"))?.parse()?;
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let q = match &v["q"] {
            Value::Null => None,
            Value::String(s) => Some(scalar::parse(s)?),
            _ => return Err(bad("q must be a \"p/q\" string")),
        };
        let mut e = Self::zero(kind, n);
        for c in v["coeffs"].as_array().ok_or_else(|| bad("missing coeffs"))? {
            let d = Diagram::parse(kind, c["diagram"].as_str().ok_or_else(|| bad("missing diagram"))?)?;
            if d.n() != n {
                return Err(bad("diagram size does not match n"));
            }
            let val = scalar::parse(c["value"].as_str().ok_or_else(|| bad("value must be a string"))?)?;
            e.add_term(&d, val)?;
        }
        Ok((e, q))
    }
}

/// Scalar operation tally of one transform run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub mul: u64,
    pub add: u64,
}

impl OpCounter {
    /// acc += a·b, counting only operations on nonzero operands.
    fn fma(&mut self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.mul += 1;
        self.accumulate(acc, a * b);
    }

    fn accumulate(&mut self, acc: &mut Scalar, v: Scalar) {
        if v.is_zero() {
            return;
        }
        if acc.is_zero() {
            *acc = v;
        } else {
            self.add += 1;
            *acc += v;
        }
    }

    pub fn merge(&mut self, o: OpCounter) {
        self.mul += o.mul;
        self.add += o.add;
    }
}

pub type FourierImage = Blocks;

fn check_rep(f: &AlgebraElement, rep: &AdaptedRep) -> Result<()> {
    if f.kind != rep.kind() || f.n != rep.n() {
        return Err(Error::Argument(format!(
            "element for {} n={} but representations for {} n={}",
            f.kind,
            f.n,
            rep.kind(),
            rep.n()
        )));
    }
    Ok(())
}

/// f̂(λ) = Σ_d f(d) ρ_λ(d) from the precomputed diagram table.
pub fn fft_naive(f: &AlgebraElement, rep: &AdaptedRep) -> Result<(FourierImage, OpCounter)> {
    check_rep(f, rep)?;
    let table = rep.diagram_table()?;
    let b = rep.bratteli();
    let mut img = Blocks::zero(b, rep.n());
    let mut ops = OpCounter::default();
    for (d, c) in &f.coeffs {
        let k = *table.index.get(d).ok_or_else(|| Error::Argument(format!("{d} is not a basis diagram")))?;
        for (v, m) in table.mats[k].iter().enumerate() {
            let out = &mut img.blocks[v];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    ops.fma(&mut out[(i, j)], c, &m[(i, j)]);
                }
            }
        }
    }
    Ok((img, ops))
}

/// Rows of a hybrid array: key layout [P_0..P_{k+1}, S_k..S_{m-1}], so
/// P_j sits at j and S_j at j+2.
type Hybrid = HashMap<Vec<usize>, Vec<Scalar>>;

fn apply_stage(rep: &AdaptedRep, m: usize, k: usize, slot: Slot, input: &Hybrid, out: &mut Hybrid, ops: &mut OpCounter) -> Result<()> {
    let b = rep.bratteli();
    let token = match slot {
        Slot::Id => None,
        Slot::R => Some(Token::R(k)),
        Slot::E => Some(Token::E(k)),
    };
    for (key, row) in input {
        let (pk, s_prev, sk) = (key[k], key[k + 1], key[k + 2]);
        if token.is_none() && pk != sk {
            continue;
        }
        for &next in b.successors(VertexId::new(k, pk)) {
            if !b.adjacent(VertexId::new(k, sk), VertexId::new(k + 1, next)) {
                continue;
            }
            let mut nk = key.clone();
            nk[k + 1] = next;
            match token {
                None => {
                    let dst = out.entry(nk).or_insert_with(|| vec![Scalar::zero(); row.len()]);
                    for (a, x) in dst.iter_mut().zip(row) {
                        ops.accumulate(a, x.clone());
                    }
                }
                Some(t) => {
                    let blk = rep
                        .block(t, s_prev, next)
                        .ok_or_else(|| Error::Internal(format!("missing block {t} at level {m}")))?;
                    let r = blk.middles.iter().position(|&x| x == pk).expect("output middle");
                    let c = blk.middles.iter().position(|&x| x == sk).expect("input middle");
                    let coef = &blk.matrix[(r, c)];
                    if coef.is_zero() {
                        continue;
                    }
                    let dst = out.entry(nk).or_insert_with(|| vec![Scalar::zero(); row.len()]);
                    for (a, x) in dst.iter_mut().zip(row) {
                        ops.fma(a, coef, x);
                    }
                }
            }
        }
    }
    Ok(())
}

fn sov_level(rep: &AdaptedRep, m: usize, f: &BTreeMap<Diagram, Scalar>, ops: &mut OpCounter) -> Result<Vec<Mat>> {
    let b = rep.bratteli();
    let table = rep.table();
    if m == 1 {
        let c = f.values().next().cloned().unwrap_or_else(Scalar::zero);
        return Ok(vec![Mat::from_rows(vec![vec![c]])]);
    }
    let fz = rep.factors().at(m);
    let mut parts: BTreeMap<usize, BTreeMap<Diagram, Scalar>> = BTreeMap::new();
    for (d, c) in f {
        let (yi, sub) = fz.factor(d)?;
        let sub = sub.restrict().ok_or_else(|| Error::Internal("factor outside the subalgebra".into()))?;
        parts.entry(yi).or_default().insert(sub, c.clone());
    }
    // groups keyed by the slots not yet applied
    let mut groups: BTreeMap<Vec<Slot>, Hybrid> = BTreeMap::new();
    for (yi, fy) in &parts {
        let sub = sov_level(rep, m - 1, fy, ops)?;
        let mut t0 = Hybrid::new();
        for (beta, blk) in sub.iter().enumerate() {
            let idx = table.at(VertexId::new(m - 1, beta));
            for (s, path) in idx.paths().iter().enumerate() {
                let row = blk.row(s);
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut key = vec![0, 0];
                key.extend_from_slice(path);
                t0.insert(key, row.to_vec());
            }
        }
        groups.insert(fz.slots()[*yi].clone(), t0);
    }
    for k in 1..m {
        let mut next: BTreeMap<Vec<Slot>, Hybrid> = BTreeMap::new();
        for (slots, t) in &groups {
            let dst = next.entry(slots[1..].to_vec()).or_default();
            apply_stage(rep, m, k, slots[0], t, dst, ops)?;
        }
        groups = next;
    }
    let mut out: Vec<Mat> = b.dims(m).iter().map(|&d| Mat::zeros(d as usize, d as usize)).collect();
    if let Some(fin) = groups.remove(&Vec::new()) {
        for (key, row) in fin {
            let lam = key[m];
            let beta = key[m + 1];
            let tgt = table.at(VertexId::new(m, lam));
            let r = tgt.index_of(&key[..=m]).ok_or_else(|| Error::Internal("output path missing".into()))?;
            let src = table.at(VertexId::new(m - 1, beta));
            for (qi, x) in row.into_iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut qp = src.path(qi).clone();
                qp.push(lam);
                let c = tgt.index_of(&qp).ok_or_else(|| Error::Internal("column path missing".into()))?;
                ops.accumulate(&mut out[lam][(r, c)], x);
            }
        }
    }
    Ok(out)
}

/// Separation-of-variables transform: f is split by the factor set, each
/// piece transformed one level down, and the pieces recombined by block-local
/// generator applications shared across common word tails.
pub fn fft_sov(f: &AlgebraElement, rep: &AdaptedRep) -> Result<(FourierImage, OpCounter)> {
    check_rep(f, rep)?;
    let mut ops = OpCounter::default();
    if rep.n() == 0 {
        let c = f.coeffs.values().next().cloned().unwrap_or_else(Scalar::zero);
        return Ok((Blocks { level: 0, blocks: vec![Mat::from_rows(vec![vec![c]])] }, ops));
    }
    let blocks = sov_level(rep, rep.n(), &f.coeffs, &mut ops)?;
    Ok((Blocks { level: rep.n(), blocks }, ops))
}

/// f(a_i) = Σ_λ Tr(f̂(λ) ρ_λ(a_i*)).
pub fn inverse_ft(img: &FourierImage, rep: &AdaptedRep) -> Result<AlgebraElement> {
    if img.level != rep.n() || img.blocks.len() != rep.bratteli().level_len(rep.n()) {
        return Err(Error::Argument("image does not match the representations".into()));
    }
    let dual = rep.dual_basis()?;
    let table = rep.diagram_table()?;
    let traces: Vec<Scalar> = table
        .mats
        .iter()
        .map(|per| {
            let mut acc = Scalar::zero();
            for (fm, rm) in img.blocks.iter().zip(per) {
                for i in 0..fm.rows() {
                    for j in 0..fm.cols() {
                        if !fm[(i, j)].is_zero() && !rm[(j, i)].is_zero() {
                            acc += &fm[(i, j)] * &rm[(j, i)];
                        }
                    }
                }
            }
            acc
        })
        .collect();
    let coeffs = dual.coeffs.mul_vec(&traces);
    let mut out = AlgebraElement::zero(rep.kind(), rep.n());
    for (d, c) in dual.diagrams.iter().zip(coeffs) {
        out.add_term(d, c)?;
    }
    Ok(out)
}

/// τ(a) = Σ_λ Tr ρ_λ(a).
pub fn trace_tau(rep: &AdaptedRep, a: &AlgebraElement) -> Result<Scalar> {
    let (img, _) = fft_naive(a, rep)?;
    Ok(img.blocks.iter().map(Mat::trace).sum())
}

#[derive(Clone, Debug, Default)]
pub struct ConvolutionReport {
    pub checked_blocks: usize,
    pub mismatches: Vec<String>,
}

impl ConvolutionReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks F(f·g) = F(f)·F(g) block by block.
pub fn convolution_check(f: &AlgebraElement, g: &AlgebraElement, rep: &AdaptedRep) -> Result<ConvolutionReport> {
    let fg = f.mul(g, &rep.q_value())?;
    let (a, _) = fft_naive(&fg, rep)?;
    let (x, _) = fft_naive(f, rep)?;
    let (y, _) = fft_naive(g, rep)?;
    let mut rep_out = ConvolutionReport::default();
    for (v, lhs) in a.blocks.iter().enumerate() {
        rep_out.checked_blocks += 1;
        if lhs != &x.blocks[v].mul(&y.blocks[v]) {
            rep_out.mismatches.push(format!("block {}", rep.bratteli().level(rep.n())[v]));
        }
    }
    Ok(rep_out)
}

/// One generator position of one level of the schedule.
#[derive(Clone, Debug)]
pub struct SovStage {
    /// Level m of the recombination this stage belongs to.
    pub level: usize,
    /// Generator index k (the quiver is the one for i = k + 1).
    pub position: usize,
    pub family: Vec<Slot>,
    pub quiver: QuiverShape,
    /// Distinct (y_k, y_{k+1}, …) word tails with y_k ≠ id.
    pub tails: u64,
    pub hom: u128,
    pub predicted: u128,
}

#[derive(Clone, Debug)]
pub struct SovPlan {
    pub kind: ChainKind,
    pub n: usize,
    pub stages: Vec<SovStage>,
    /// Algebra dimension per level 0..=n.
    pub dims: Vec<u128>,
    /// Factor-set size per level 0..=n (0 below level 2).
    pub factor_sizes: Vec<usize>,
    /// Stage total per level.
    pub level_cost: Vec<u128>,
}

impl SovPlan {
    /// Reduced complexity through the recursion t_m = t_{m-1} + cost_m / dim A_m.
    pub fn reduced(&self) -> Scalar {
        (2..=self.n).map(|m| Scalar::new(self.level_cost[m].into(), self.dims[m].into())).sum()
    }

    /// Predicted multiplications: dim A_n times the reduced complexity.
    pub fn predicted_total(&self) -> Scalar {
        self.reduced() * Scalar::from_integer(self.dims[self.n].into())
    }

    /// Every subproblem charged at full size: C_m = |Y_m| C_{m-1} + cost_m.
    pub fn dense_total(&self) -> u128 {
        let mut c = 0u128;
        for m in 2..=self.n {
            c = self.factor_sizes[m] as u128 * c + self.level_cost[m];
        }
        c
    }

    pub fn to_json(&self) -> Value {
        let stages: Vec<Value> = self
            .stages
            .iter()
            .map(|s| {
                json!({
                    "level": s.level,
                    "position": s.position,
                    "family": s.family.iter().map(|x| format!("{x:?}").to_lowercase()).collect::<Vec<_>>(),
                    "quiver_arrows": s.quiver.arrows().len(),
                    "tails": s.tails,
                    "hom": s.hom.to_string(),
                    "predicted": s.predicted.to_string(),
                })
            })
            .collect();
        let paper = combinat::paper_bounds(self.kind, self.n).ok().and_then(|b| b.total).map(|t| scalar::render(&t));
        json!({
            "chain": self.kind.name(),
            "n": self.n,
            "dim": self.dims[self.n].to_string(),
            "stages": stages,
            "level_cost": self.level_cost.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "predicted": scalar::render(&self.predicted_total()),
            "reduced": scalar::render(&self.reduced()),
            "dense": self.dense_total().to_string(),
            "paper": paper,
        })
    }
}

fn family(kind: ChainKind) -> Vec<Slot> {
    match kind {
        ChainKind::TemperleyLieb => vec![Slot::Id, Slot::E],
        ChainKind::SymmetricGroup => vec![Slot::Id, Slot::R],
        _ => vec![Slot::Id, Slot::R, Slot::E],
    }
}

/// Schedule and predicted costs; available for every chain including BMW.
pub fn sov_plan(kind: ChainKind, n: usize) -> Result<SovPlan> {
    let b: BratteliDiagram = build_bratteli(kind, n);
    let dims: Vec<u128> = (0..=n).map(|l| b.sum_dim_squares(l)).collect();
    let mut stages = Vec::new();
    let mut level_cost = vec![0u128; n + 1];
    let mut factor_sizes = vec![0usize; n + 1];
    for m in 2..=n {
        let slots = diagrams::factor_slots(kind, m);
        factor_sizes[m] = slots.len();
        for k in 1..m {
            let mut tails: Vec<&[Slot]> = slots.iter().filter(|s| s[k - 1] != Slot::Id).map(|s| &s[k - 1..]).collect();
            tails.sort();
            tails.dedup();
            let hom = combinat::hom_count_closed(&b, k + 1, m)?;
            let predicted = tails.len() as u128 * hom;
            level_cost[m] += predicted;
            stages.push(SovStage {
                level: m,
                position: k,
                family: family(kind),
                quiver: combinat::h_quiver(k + 1, m)?,
                tails: tails.len() as u64,
                hom,
                predicted,
            });
        }
    }
    Ok(SovPlan { kind, n, stages, dims, factor_sizes, level_cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::default_q;

    #[test]
    fn brauer_two_blocks() {
        let q = default_q();
        let rep = AdaptedRep::new(ChainKind::Brauer, 2, Some(&q)).unwrap();
        let mut f = AlgebraElement::zero(ChainKind::Brauer, 2);
        let id = Diagram::identity(ChainKind::Brauer, 2);
        let r1 = diagrams::generator(ChainKind::Brauer, Token::R(1), 2).unwrap();
        let e1 = diagrams::generator(ChainKind::Brauer, Token::E(1), 2).unwrap();
        f.add_term(&id, int(2)).unwrap();
        f.add_term(&r1, int(5)).unwrap();
        f.add_term(&e1, int(-7)).unwrap();
        let (img, _) = fft_naive(&f, &rep).unwrap();
        let vals: Vec<Scalar> = img.blocks.iter().map(|m| m[(0, 0)].clone()).collect();
        // vertices in canonical order [2], [1,1], ∅
        assert_eq!(vals, vec![int(7), int(-3), int(7) - int(7) * &q]);
        let (sov, _) = fft_sov(&f, &rep).unwrap();
        assert_eq!(sov, img);
    }

    #[test]
    fn identity_costs_nothing() {
        for kind in [ChainKind::Brauer, ChainKind::TemperleyLieb, ChainKind::SymmetricGroup] {
            let rep = AdaptedRep::with_default_q(kind, 4).unwrap();
            let f = AlgebraElement::delta(&Diagram::identity(kind, 4));
            let (img, ops) = fft_sov(&f, &rep).unwrap();
            assert_eq!(ops.mul, 0);
            assert!(img.blocks.iter().all(|m| *m == Mat::identity(m.rows())));
            let (z, zops) = fft_sov(&AlgebraElement::zero(kind, 4), &rep).unwrap();
            assert!(z.blocks.iter().all(Mat::is_zero));
            assert_eq!(zops, OpCounter::default());
        }
    }

    #[test]
    fn sov_matches_naive_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (kind, n) in [(ChainKind::Brauer, 3), (ChainKind::TemperleyLieb, 5), (ChainKind::SymmetricGroup, 4)] {
            let rep = AdaptedRep::with_default_q(kind, n).unwrap();
            for _ in 0..5 {
                let f = AlgebraElement::random(kind, n, &mut rng).unwrap();
                assert_eq!(fft_sov(&f, &rep).unwrap().0, fft_naive(&f, &rep).unwrap().0);
            }
        }
    }

    #[test]
    fn roundtrip_and_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rep = AdaptedRep::with_default_q(ChainKind::Brauer, 3).unwrap();
        let f = AlgebraElement::random(ChainKind::Brauer, 3, &mut rng).unwrap();
        let g = AlgebraElement::random(ChainKind::Brauer, 3, &mut rng).unwrap();
        let (img, _) = fft_sov(&f, &rep).unwrap();
        assert_eq!(inverse_ft(&img, &rep).unwrap(), f);
        assert!(convolution_check(&f, &g, &rep).unwrap().ok());
        let id = AlgebraElement::delta(&Diagram::identity(ChainKind::Brauer, 3));
        assert_eq!(trace_tau(&rep, &id).unwrap(), int(3 + 2 + 1 + 1));
    }

    #[test]
    fn coefficient_json_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = AlgebraElement::random(ChainKind::TemperleyLieb, 4, &mut rng).unwrap();
        let (g, q) = AlgebraElement::from_json(&f.to_json(Some(&default_q()))).unwrap();
        assert_eq!((g, q), (f, Some(default_q())));
    }

    #[test]
    fn plan_family_sizes() {
        let p = sov_plan(ChainKind::Brauer, 4).unwrap();
        assert!(p.stages.iter().all(|s| s.family.len() == 3));
        let t = sov_plan(ChainKind::TemperleyLieb, 4).unwrap();
        assert!(t.stages.iter().all(|s| s.family.len() == 2));
        assert_eq!(sov_plan(ChainKind::BMWStructural, 5).unwrap().level_cost, sov_plan(ChainKind::Brauer, 5).unwrap().level_cost);
    }
}

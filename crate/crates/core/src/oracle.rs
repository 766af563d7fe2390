//! Brute-force gl_n tensor-space oracle on M ⊗ N ⊗ V^{⊗k}, with M = L(a^p)
//! and N = L(b^q) realized inside tensor powers of V by Young symmetrizers.

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{self, Assignment, DerivedElementTable, Generator, RelationReport};
use crate::error::{Error, Result};
use crate::numerics::{rank, DenseMatrix, Matrix, Rational, Rref};
use crate::partitions::{enum_pk, gamma_rect, tableaux, HeckeParams, Partition};

/// Largest |λ| realized by symmetrizers.
pub const MAX_POWER: usize = 6;
/// Largest carrier dimension dim M · dim N · n^k.
pub const MAX_CARRIER: usize = 20_000;
/// Largest ambient tensor power n^|λ| used while realizing M or N.
pub const MAX_AMBIENT: usize = 50_000;

pub type Mat = DenseMatrix<Rational>;

/// Matrices ρ(E_ij) for i, j in 0..n, stored at i·n + j.
#[derive(Clone, Debug)]
pub struct LieAlgebraAction {
    pub n: usize,
    pub dim: usize,
    pub actions: Vec<Mat>,
}

impl LieAlgebraAction {
    /// The defining representation V.
    pub fn standard(n: usize) -> Self {
        let actions = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                Mat::from_fn(n, |r, c| if r == i && c == j { Rational::one() } else { Rational::zero() })
            })
            .collect();
        LieAlgebraAction { n, dim: n, actions }
    }

    pub fn e(&self, i: usize, j: usize) -> &Mat {
        &self.actions[i * self.n + j]
    }

    /// Σ_ij E_ij E_ji.
    pub fn casimir(&self) -> Mat {
        let mut acc = Mat::zeros(self.dim);
        for i in 0..self.n {
            for j in 0..self.n {
                acc = acc.add(&self.e(i, j).mul(self.e(j, i)).expect("square")).expect("square");
            }
        }
        acc
    }
}

/// κ_L(λ) = ⟨λ, λ+2δ⟩ − (n−1)|λ|.
pub fn kappa(lambda: &Partition, n: usize) -> Rational {
    lambda.casimir_gl(n)
}

#[derive(Clone, Debug)]
pub struct HighestWeightRealization {
    pub lambda: Partition,
    pub power: usize,
    /// Basis of the image of the Young symmetrizer, as vectors in V^{⊗m}.
    pub basis: Vec<Vec<Rational>>,
    pub action: LieAlgebraAction,
    /// Y² = hook_product · Y.
    pub hook_product: u64,
}

impl HighestWeightRealization {
    pub fn dim(&self) -> usize {
        self.action.dim
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(idx);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn parity(perm: &[usize]) -> i64 {
    let inv = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inv % 2 == 0 { 1 } else { -1 }
}

/// All position permutations preserving each block, with signs.
fn block_group(blocks: &[Vec<usize>], m: usize) -> Vec<(Vec<usize>, i64)> {
    let mut group = vec![((0..m).collect::<Vec<_>>(), 1i64)];
    for block in blocks {
        let perms = permutations(block);
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for (g, s) in &group {
            for p in &perms {
                let mut h = g.clone();
                for (src, dst) in block.iter().zip(p) {
                    h[*src] = g[*dst];
                }
                next.push((h, s * parity(p)));
            }
        }
        group = next;
    }
    group
}

fn digits(mut idx: usize, n: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for slot in d.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    d
}

fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

type SparseVec = HashMap<usize, i64>;

fn act_group(v: &SparseVec, group: &[(Vec<usize>, i64)], n: usize, m: usize, signed: bool) -> SparseVec {
    let mut out = SparseVec::new();
    for (&idx, &c) in v {
        let d = digits(idx, n, m);
        for (perm, s) in group {
            let moved: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            let coeff = if signed { c * s } else { c };
            *out.entry(undigits(&moved, n)).or_insert(0) += coeff;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn hook_product(lambda: &Partition) -> u64 {
    lambda
        .boxes()
        .iter()
        .map(|b| {
            let arm = lambda.row_len(b.row) - b.col;
            let leg = (b.row + 1..=lambda.height()).filter(|&r| lambda.row_len(r) >= b.col).count();
            (arm + leg + 1) as u64
        })
        .product()
}

/// Realizes L(λ) as the image of Y = R·C (row symmetrizer after column
/// antisymmetrizer) on V^{⊗|λ|}; checks Y² = h·Y and dim = Weyl dimension.
pub fn realize_module(lambda: &Partition, n: usize) -> Result<HighestWeightRealization> {
    let m = lambda.size();
    if m > MAX_POWER {
        return Err(Error::CapExceeded(format!("|{lambda}| = {m} > {MAX_POWER}")));
    }
    if lambda.height() > n {
        return Err(Error::HeightExceeded { partition: lambda.clone(), n });
    }
    let ambient = n.checked_pow(m as u32).filter(|&x| x <= MAX_AMBIENT).ok_or_else(|| {
        Error::CapExceeded(format!("ambient space n^{m} for n = {n} exceeds {MAX_AMBIENT}"))
    })?;
    let target = lambda.weyl_dim(n) as usize;

    let boxes = lambda.boxes();
    let pos = |r: usize, c: usize| boxes.iter().position(|b| b.row == r && b.col == c).expect("box");
    let rows: Vec<Vec<usize>> = (1..=lambda.height()).map(|r| (1..=lambda.row_len(r)).map(|c| pos(r, c)).collect()).collect();
    let ncols = lambda.row_len(1);
    let cols: Vec<Vec<usize>> = (1..=ncols)
        .map(|c| (1..=lambda.height()).filter(|&r| lambda.row_len(r) >= c).map(|r| pos(r, c)).collect())
        .collect();
    let row_group = block_group(&rows, m);
    let col_group = block_group(&cols, m);
    let h = hook_product(lambda);
    let symmetrize = |v: &SparseVec| act_group(&act_group(v, &col_group, n, m, true), &row_group, n, m, false);

    let mut rref = Rref::new(ambient);
    for idx in 0..ambient {
        if rref.rank() == target {
            break;
        }
        let y = symmetrize(&SparseVec::from([(idx, 1)]));
        if y.is_empty() {
            continue;
        }
        let yy = symmetrize(&y);
        let scaled_ok = yy.len() == y.len() && y.iter().all(|(i, c)| yy.get(i) == Some(&(c * h as i64)));
        if !scaled_ok {
            return Err(Error::CommutantFailure(format!("Young symmetrizer for {lambda} is not quasi-idempotent")));
        }
        let mut dense = vec![Rational::zero(); ambient];
        for (i, c) in y {
            dense[i] = Rational::from_int(c);
        }
        rref.insert(dense);
    }
    if rref.rank() != target {
        return Err(Error::SpectrumMismatch(format!(
            "image of the symmetrizer for {lambda} has dimension {} but the Weyl formula gives {target}",
            rref.rank()
        )));
    }

    let basis: Vec<Vec<Rational>> = rref.rows().to_vec();
    let dim = basis.len();
    let mut actions = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut mat = Mat::zeros(dim);
            for (col, u) in basis.iter().enumerate() {
                let mut image = vec![Rational::zero(); ambient];
                for (idx, c) in u.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut d = digits(idx, n, m);
                    for slot in 0..m {
                        if d[slot] == j {
                            d[slot] = i;
                            image[undigits(&d, n)] += c;
                            d[slot] = j;
                        }
                    }
                }
                let coords = rref
                    .coords(&image)
                    .ok_or_else(|| Error::CommutantFailure(format!("image of {lambda} is not gl_{n}-stable")))?;
                for (row, v) in coords.into_iter().enumerate() {
                    mat.set(row, col, v);
                }
            }
            actions.push(mat);
        }
    }
    Ok(HighestWeightRealization { lambda: lambda.clone(), power: m, basis, action: LieAlgebraAction { n, dim, actions }, hook_product: h })
}

/// Factor bookkeeping: index 0 is M, 1 is N, 1 + i is the i-th copy of V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFactorLayout {
    pub dims: Vec<usize>,
    strides: Vec<usize>,
}

pub const FACTOR_M: usize = 0;
pub const FACTOR_N: usize = 1;

/// Layout index of the i-th copy of V (1-based).
pub fn factor_v(i: usize) -> usize {
    1 + i
}

impl TensorFactorLayout {
    pub fn new(dims: Vec<usize>) -> Self {
        let mut strides = vec![1; dims.len()];
        for f in (0..dims.len().saturating_sub(1)).rev() {
            strides[f] = strides[f + 1] * dims[f + 1];
        }
        TensorFactorLayout { dims, strides }
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn num_factors(&self) -> usize {
        self.dims.len()
    }

    pub fn digit(&self, idx: usize, f: usize) -> usize {
        (idx / self.strides[f]) % self.dims[f]
    }

    /// Index with the digit of factor `f` replaced.
    pub fn with_digit(&self, idx: usize, f: usize, d: usize) -> usize {
        idx - self.digit(idx, f) * self.strides[f] + d * self.strides[f]
    }

    fn check(&self, f: usize) -> Result<()> {
        if f >= self.dims.len() {
            return Err(Error::FactorOutOfRange(f));
        }
        Ok(())
    }
}

/// gl_n acting on M ⊗ N ⊗ V^{⊗k}.
#[derive(Clone, Debug)]
pub struct Carrier {
    pub params: HeckeParams,
    pub n: usize,
    pub layout: TensorFactorLayout,
    pub m_module: HighestWeightRealization,
    pub n_module: HighestWeightRealization,
    factors: Vec<LieAlgebraAction>,
}

impl Carrier {
    pub fn new(params: &HeckeParams, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        params.check_oracle_n(n)?;
        let rect_m = Partition::rectangle(params.a, params.p);
        let rect_n = Partition::rectangle(params.b, params.q);
        for r in [&rect_m, &rect_n] {
            if r.size() > MAX_POWER {
                return Err(Error::CapExceeded(format!("|{r}| = {} > {MAX_POWER}", r.size())));
            }
        }
        let dm = rect_m.weyl_dim(n) as usize;
        let dn = rect_n.weyl_dim(n) as usize;
        let total = (dm as u128) * (dn as u128) * (n as u128).pow(params.k as u32);
        if total > MAX_CARRIER as u128 {
            return Err(Error::CapExceeded(format!("carrier dimension {total} > {MAX_CARRIER}")));
        }
        let m_module = realize_module(&rect_m, n)?;
        let n_module = realize_module(&rect_n, n)?;
        let mut factors = vec![m_module.action.clone(), n_module.action.clone()];
        let mut dims = vec![m_module.dim(), n_module.dim()];
        for _ in 0..params.k {
            factors.push(LieAlgebraAction::standard(n));
            dims.push(n);
        }
        log::debug!("oracle carrier {dims:?} (total {total})");
        Ok(Carrier { params: params.clone(), n, layout: TensorFactorLayout::new(dims), m_module, n_module, factors })
    }

    pub fn dim(&self) -> usize {
        self.layout.total()
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    /// `op` acting on factor `f`, identity elsewhere.
    pub fn lift(&self, f: usize, op: &Mat) -> Result<Mat> {
        self.layout.check(f)?;
        let dim = self.dim();
        let mut out = Mat::zeros(dim);
        for idx in 0..dim {
            let d = self.layout.digit(idx, f);
            for r in 0..self.layout.dims[f] {
                let v = op.get(r, d);
                if !v.is_zero() {
                    out.set(self.layout.with_digit(idx, f, r), idx, v.clone());
                }
            }
        }
        Ok(out)
    }

    /// E_ij acting diagonally on the given factors.
    pub fn action_on(&self, factors: &[usize], i: usize, j: usize) -> Result<Mat> {
        let mut acc = Mat::zeros(self.dim());
        for &f in factors {
            self.layout.check(f)?;
            acc = acc.add(&self.lift(f, self.factors[f].e(i, j))?)?;
        }
        Ok(acc)
    }

    /// E_ij on the whole carrier.
    pub fn total_action(&self, i: usize, j: usize) -> Result<Mat> {
        let all: Vec<usize> = (0..self.layout.num_factors()).collect();
        self.action_on(&all, i, j)
    }

    /// γ_{A,B} = Σ_ij E_ij on A times E_ji on B.
    pub fn gamma_pair(&self, fa: usize, fb: usize) -> Result<Mat> {
        self.layout.check(fa)?;
        self.layout.check(fb)?;
        if fa == fb {
            return Err(Error::FactorOutOfRange(fb));
        }
        let dim = self.dim();
        let n = self.n;
        let mut out = Mat::zeros(dim);
        for idx in 0..dim {
            let (da, db) = (self.layout.digit(idx, fa), self.layout.digit(idx, fb));
            for i in 0..n {
                for j in 0..n {
                    let ea = self.factors[fa].e(i, j);
                    let eb = self.factors[fb].e(j, i);
                    for ra in 0..self.layout.dims[fa] {
                        let va = ea.get(ra, da);
                        if va.is_zero() {
                            continue;
                        }
                        for rb in 0..self.layout.dims[fb] {
                            let vb = eb.get(rb, db);
                            if vb.is_zero() {
                                continue;
                            }
                            let target = self.layout.with_digit(self.layout.with_digit(idx, fa, ra), fb, rb);
                            let cur = out.get(target, idx).clone();
                            out.set(target, idx, cur + va * vb);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Swap of the i-th and (i+1)-th copies of V.
    pub fn swap(&self, i: usize) -> Result<Mat> {
        let (f, g) = (factor_v(i), factor_v(i + 1));
        self.layout.check(g)?;
        let dim = self.dim();
        let mut out = Mat::zeros(dim);
        for idx in 0..dim {
            let (df, dg) = (self.layout.digit(idx, f), self.layout.digit(idx, g));
            let target = self.layout.with_digit(self.layout.with_digit(idx, f, dg), g, df);
            out.set(target, idx, Rational::one());
        }
        Ok(out)
    }

    fn kappa_scalar(&self, f: usize) -> Rational {
        match f {
            FACTOR_M => kappa(&self.m_module.lambda, self.n),
            FACTOR_N => kappa(&self.n_module.lambda, self.n),
            _ => Rational::from_int(self.n as i64),
        }
    }

    /// κ_{X,≤j} assembled from scalar Casimirs and γ terms; X ⊆ {M, N}.
    pub fn casimir_leq(&self, x: &[usize], j: usize) -> Result<Mat> {
        if j > self.k() {
            return Err(Error::FactorOutOfRange(factor_v(j)));
        }
        if x.iter().any(|&f| f > FACTOR_N) {
            return Err(Error::FactorOutOfRange(*x.iter().max().expect("nonempty")));
        }
        let dim = self.dim();
        let mut scalar: Rational = x.iter().map(|&f| self.kappa_scalar(f)).sum();
        scalar += &(Rational::from_int(j as i64) * Rational::from_int(self.n as i64));
        let mut acc = Mat::scalar(dim, scalar);
        let two = Rational::from_int(2);
        for (ai, &fa) in x.iter().enumerate() {
            for &fb in &x[ai + 1..] {
                acc = acc.add(&self.gamma_pair(fa, fb)?.scale(&two))?;
            }
        }
        for i in 1..=j {
            for &f in x {
                acc = acc.add(&self.gamma_pair(f, factor_v(i))?.scale(&two))?;
            }
            for r in 1..i {
                acc = acc.add(&self.gamma_pair(factor_v(r), factor_v(i))?.scale(&two))?;
            }
        }
        Ok(acc)
    }

    /// Σ_ij E_ij E_ji with E acting on the given factors only.
    pub fn casimir_direct(&self, factors: &[usize]) -> Result<Mat> {
        let mut acc = Mat::zeros(self.dim());
        for i in 0..self.n {
            for j in 0..self.n {
                let eij = self.action_on(factors, i, j)?;
                let eji = self.action_on(factors, j, i)?;
                acc = acc.add(&eij.mul(&eji)?)?;
            }
        }
        Ok(acc)
    }
}

/// Constants of the automorphism x_i ↦ x_i + (i−1)d + c_x, y_i ↦ y_i +
/// (i−1)d + c_y, z_i ↦ z_i + (i−1)d + c_x + c_y, z_0 ↦ z_0 + c_z.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AutomorphismShift {
    pub c_x: Rational,
    pub c_y: Rational,
    pub d: Rational,
    pub c_z: Rational,
}

impl AutomorphismShift {
    pub fn gl(n: usize) -> Self {
        let half_n = Rational::new(-(n as i64), 2);
        AutomorphismShift { c_x: half_n.clone(), c_y: half_n, d: Rational::zero(), c_z: Rational::zero() }
    }

    /// sl_n constants; c_z is the trace-part correction abpq/n.
    pub fn sl(params: &HeckeParams, n: usize) -> Self {
        let ni = n as i64;
        let tail = (Rational::from_int(ni) - Rational::new(1, ni)) * Rational::half();
        let (a, b, p, q) = (params.a as i64, params.b as i64, params.p as i64, params.q as i64);
        AutomorphismShift {
            c_x: Rational::new(a * p, ni) - tail.clone(),
            c_y: Rational::new(b * q, ni) - tail,
            d: Rational::new(1, ni),
            c_z: Rational::new(a * b * p * q, ni),
        }
    }

    pub fn shift_for(&self, g: &Generator) -> Rational {
        let step = |i: usize| Rational::from_int(i as i64 - 1) * &self.d;
        match g {
            Generator::X(i) => step(*i) + &self.c_x,
            Generator::Y(i) => step(*i) + &self.c_y,
            Generator::Z(0) => self.c_z.clone(),
            Generator::Z(i) => step(*i) + &self.c_x + &self.c_y,
            _ => Rational::zero(),
        }
    }
}

pub type Images = BTreeMap<Generator, Mat>;

fn generators(k: usize) -> Vec<Generator> {
    let mut g = vec![Generator::Z(0)];
    for i in 1..=k {
        g.extend([Generator::X(i), Generator::Y(i), Generator::Z(i)]);
    }
    g.extend((1..k).map(Generator::T));
    g
}

/// Untwisted images Φ, built from differences of iterated Casimirs.
pub fn phi_untwisted(c: &Carrier) -> Result<Images> {
    let half = Rational::half();
    let kv = Mat::scalar(c.dim(), Rational::from_int(c.n as i64));
    let mut out = Images::new();
    let diff = |x: &[usize], i: usize| -> Result<Mat> { Ok(c.casimir_leq(x, i)?.sub(&c.casimir_leq(x, i - 1)?)?) };
    for i in 1..=c.k() {
        out.insert(Generator::X(i), diff(&[FACTOR_M], i)?.scale(&half));
        out.insert(Generator::Y(i), diff(&[FACTOR_N], i)?.scale(&half));
        out.insert(Generator::Z(i), diff(&[FACTOR_M, FACTOR_N], i)?.add(&kv)?.scale(&half));
    }
    let z0 = c
        .casimir_leq(&[FACTOR_M, FACTOR_N], 0)?
        .add_scalar(&-(c.kappa_scalar(FACTOR_M) + c.kappa_scalar(FACTOR_N)))
        .scale(&half);
    out.insert(Generator::Z(0), z0);
    for i in 1..c.k() {
        out.insert(Generator::T(i), c.swap(i)?);
    }
    Ok(out)
}

/// Twisted images Φ′ for gl_n, written directly as γ sums.
pub fn phi_twisted(c: &Carrier) -> Result<Images> {
    let mut out = Images::new();
    for i in 1..=c.k() {
        let mut braid = Mat::zeros(c.dim());
        for l in 1..i {
            braid = braid.add(&c.gamma_pair(factor_v(l), factor_v(i))?)?;
        }
        let gm = c.gamma_pair(FACTOR_M, factor_v(i))?;
        let gn = c.gamma_pair(FACTOR_N, factor_v(i))?;
        out.insert(Generator::X(i), gm.add(&braid)?);
        out.insert(Generator::Y(i), gn.add(&braid)?);
        out.insert(Generator::Z(i), gm.add(&gn)?.add(&braid)?);
    }
    out.insert(Generator::Z(0), c.gamma_pair(FACTOR_M, FACTOR_N)?);
    for i in 1..c.k() {
        out.insert(Generator::T(i), c.swap(i)?);
    }
    Ok(out)
}

/// Which images to feed into the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PhiVariant {
    Untwisted,
    Twisted,
}

pub fn phi_images(c: &Carrier, variant: PhiVariant) -> Result<Images> {
    match variant {
        PhiVariant::Untwisted => phi_untwisted(c),
        PhiVariant::Twisted => phi_twisted(c),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &str, failure: Option<String>) -> Self {
        CheckResult { name: name.into(), pass: failure.is_none(), detail: failure }
    }
}

/// Every image commutes with every E_ij on the carrier.
pub fn check_commutant(c: &Carrier, images: &Images) -> Result<CheckResult> {
    let actions: Vec<((usize, usize), Mat)> = (0..c.n)
        .flat_map(|i| (0..c.n).map(move |j| (i, j)))
        .map(|(i, j)| Ok(((i, j), c.total_action(i, j)?)))
        .collect::<Result<_>>()?;
    let failures: Vec<String> = images
        .par_iter()
        .flat_map_iter(|(g, m)| {
            actions.iter().filter_map(move |((i, j), e)| {
                let ok = m.mul(e).ok()? == e.mul(m).ok()?;
                (!ok).then(|| format!("{g} vs E_{}{}", i + 1, j + 1))
            })
        })
        .collect();
    Ok(CheckResult::new("commutant", failures.first().cloned()))
}

/// [E_ij, E_kl] = δ_jk E_il − δ_li E_kj on random index quadruples.
pub fn check_brackets(c: &Carrier, samples: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = c.n;
    let e = |i: usize, j: usize| c.total_action(i, j);
    for _ in 0..samples {
        let (i, j, k, l) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let (eij, ekl) = (e(i, j)?, e(k, l)?);
        let lhs = eij.mul(&ekl)?.sub(&ekl.mul(&eij)?)?;
        let mut rhs = Mat::zeros(c.dim());
        if j == k {
            rhs = rhs.add(&e(i, l)?)?;
        }
        if l == i {
            rhs = rhs.sub(&e(k, j)?)?;
        }
        if lhs != rhs {
            return Ok(CheckResult::new("brackets", Some(format!("[E_{}{}, E_{}{}]", i + 1, j + 1, k + 1, l + 1))));
        }
    }
    Ok(CheckResult::new("brackets", None))
}

fn exact(m: &Mat) -> Matrix {
    Matrix::Exact(m.clone())
}

/// Short presentation: w_i = z_i − shift, x_1 and t_i primitive.
pub fn transport_short(c: &Carrier, images: &Images) -> Result<RelationReport> {
    let p = &c.params;
    let shift = p.shift();
    let mut asg = Assignment::new(c.dim(), DerivedElementTable::short(p));
    for i in 0..=c.k() {
        asg.insert(Generator::W(i), exact(&images[&Generator::Z(i)].add_scalar(&-shift.clone())))?;
    }
    if c.k() >= 1 {
        asg.insert(Generator::X(1), exact(&images[&Generator::X(1)]))?;
    }
    for i in 1..c.k() {
        asg.insert(Generator::T(i), exact(&images[&Generator::T(i)]))?;
    }
    algebra::check_relations(&algebra::relations_hk_ext_short(p), &asg, 0.0)
}

/// Consolidated presentation from x_1, z_0, z_1 and t_i alone.
pub fn transport_consolidated(c: &Carrier, images: &Images) -> Result<RelationReport> {
    let p = &c.params;
    let mut asg = Assignment::new(c.dim(), DerivedElementTable::consolidated(p));
    for g in [Generator::X(1), Generator::Z(0), Generator::Z(1)] {
        if let Some(m) = images.get(&g) {
            asg.insert(g, exact(m))?;
        }
    }
    for i in 1..c.k() {
        asg.insert(Generator::T(i), exact(&images[&Generator::T(i)]))?;
    }
    algebra::check_relations(&algebra::relations_hk_ext_consolidated(p), &asg, 0.0)
}

/// Two-boundary braid relations with every image assigned.
pub fn transport_gk(c: &Carrier, images: &Images) -> Result<RelationReport> {
    let mut asg = Assignment::new(c.dim(), DerivedElementTable::Braid { k: c.k() });
    for (g, m) in images {
        asg.insert(g.clone(), exact(m))?;
    }
    algebra::check_relations(&algebra::relations_gk(c.k()), &asg, 0.0)
}

/// Images of x_i, y_i, z_i derived from the short presentation agree with
/// the direct ones.
pub fn check_derived_agree(c: &Carrier, images: &Images) -> Result<CheckResult> {
    let p = &c.params;
    let shift = p.shift();
    let mut asg = Assignment::new(c.dim(), DerivedElementTable::short(p));
    for i in 0..=c.k() {
        asg.insert(Generator::W(i), exact(&images[&Generator::Z(i)].add_scalar(&-shift.clone())))?;
    }
    if c.k() >= 1 {
        asg.insert(Generator::X(1), exact(&images[&Generator::X(1)]))?;
    }
    for i in 1..c.k() {
        asg.insert(Generator::T(i), exact(&images[&Generator::T(i)]))?;
    }
    for g in generators(c.k()) {
        let derived = algebra::evaluate_word(&algebra::Word::gen(g.clone()), &asg)?;
        if !derived.mat_eq(&exact(&images[&g]))? {
            return Ok(CheckResult::new("derived-agree", Some(g.to_string())));
        }
    }
    Ok(CheckResult::new("derived-agree", None))
}

/// x_{i+1} − t x_i t = y_{i+1} − t y_i t = z_{i+1} − t z_i t = γ_{i,i+1}.
pub fn check_tonfactors(c: &Carrier, images: &Images) -> Result<CheckResult> {
    for i in 1..c.k() {
        let t = &images[&Generator::T(i)];
        let gamma = c.gamma_pair(factor_v(i), factor_v(i + 1))?;
        for (lo, hi) in [
            (Generator::X(i), Generator::X(i + 1)),
            (Generator::Y(i), Generator::Y(i + 1)),
            (Generator::Z(i), Generator::Z(i + 1)),
        ] {
            let d = images[&hi].sub(&t.mul(&images[&lo])?.mul(t)?)?;
            if d != gamma {
                return Ok(CheckResult::new("tonfactors", Some(format!("{hi} at i = {i}"))));
            }
        }
    }
    Ok(CheckResult::new("tonfactors", None))
}

/// Φ′(g) − Φ(g) is the scalar predicted by the automorphism.
pub fn check_automorphism(c: &Carrier, untwisted: &Images, twisted: &Images, shift: &AutomorphismShift) -> Result<CheckResult> {
    for (g, m) in untwisted {
        let expected = m.add_scalar(&shift.shift_for(g));
        if twisted.get(g) != Some(&expected) {
            return Ok(CheckResult::new("automorphism", Some(g.to_string())));
        }
    }
    let _ = c;
    Ok(CheckResult::new("automorphism", None))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub generator: String,
    /// (eigenvalue, predicted multiplicity, observed N − rank).
    pub eigenvalues: Vec<(Rational, u64, u64)>,
    pub annihilated: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Predicted eigenvalue multiplicities of Φ′(z_i): over λ ∈ 𝒫_k of height
/// ≤ n and T ∈ 𝒯_λ, the label of step i weighted by dim L(λ).
pub fn predicted_spectrum(params: &HeckeParams, n: usize, i: usize) -> Result<BTreeMap<Rational, u64>> {
    let mut out = BTreeMap::new();
    for lam in enum_pk(params, params.k) {
        let w = lam.weyl_dim(n) as u64;
        if w == 0 {
            continue;
        }
        for t in tableaux(&lam, params)? {
            let label = if i == 0 {
                gamma_rect(t.base(), params)?
            } else {
                Rational::from_int(t.added(i).content())
            };
            *out.entry(label).or_insert(0) += w;
        }
    }
    Ok(out)
}

/// Exact spectral check of Φ′(z_0), …, Φ′(z_k) against the tableau model.
pub fn check_spectra(c: &Carrier, images: &Images) -> Result<SpectrumReport> {
    let dim = c.dim() as u64;
    let entries = (0..=c.k())
        .into_par_iter()
        .map(|i| {
            let z = &images[&Generator::Z(i)];
            let predicted = predicted_spectrum(&c.params, c.n, i)?;
            let mut annihilator = Mat::identity(c.dim());
            let mut eigen = Vec::new();
            for (val, mult) in &predicted {
                let shifted = z.add_scalar(&-val.clone());
                annihilator = annihilator.mul(&shifted)?;
                eigen.push((val.clone(), *mult, dim - rank(&shifted) as u64));
            }
            let annihilated = annihilator.is_zero();
            let pass = annihilated && eigen.iter().all(|(_, p, o)| p == o);
            Ok(SpectrumEntry { generator: Generator::Z(i).to_string(), eigenvalues: eigen, annihilated, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport { entries })
}

/// Σ_λ |𝒯_λ| · dim L(λ) against the carrier dimension.
pub fn dimension_sum(params: &HeckeParams, n: usize) -> Result<u128> {
    let mut total = 0u128;
    for lam in enum_pk(params, params.k) {
        let w = lam.weyl_dim(n);
        if w > 0 {
            total += tableaux(&lam, params)?.len() as u128 * w;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub params: serde_json::Value,
    pub n: usize,
    pub carrier_dim: usize,
    pub checks: Vec<CheckResult>,
    pub relations: BTreeMap<String, RelationReport>,
    pub spectra: SpectrumReport,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
            && self.relations.values().all(RelationReport::all_pass)
            && self.spectra.all_pass()
    }
}

fn relation_summary(name: &str, r: &RelationReport) -> CheckResult {
    CheckResult::new(name, r.failures().first().map(|f| format!("{} ({})", f.name, f.family)))
}

/// Runs the full gl_n oracle suite for one configuration.
pub fn run_oracle(params: &HeckeParams, n: usize) -> Result<OracleReport> {
    let c = Carrier::new(params, n)?;
    let twisted = phi_twisted(&c)?;
    let untwisted = phi_untwisted(&c)?;
    let mut checks = vec![
        check_brackets(&c, 16, 0x5eed)?,
        check_commutant(&c, &twisted)?,
        check_automorphism(&c, &untwisted, &twisted, &AutomorphismShift::gl(n))?,
        check_tonfactors(&c, &untwisted)?,
        check_derived_agree(&c, &twisted)?,
    ];
    let expected = dimension_sum(params, n)?;
    checks.push(CheckResult::new(
        "dimension-sum",
        (expected != c.dim() as u128).then(|| format!("Σ |𝒯_λ| dim L(λ) = {expected}, carrier {}", c.dim())),
    ));
    let mut relations = BTreeMap::new();
    relations.insert("short".to_string(), transport_short(&c, &twisted)?);
    relations.insert("consolidated".to_string(), transport_consolidated(&c, &twisted)?);
    relations.insert("braid".to_string(), transport_gk(&c, &twisted)?);
    for (name, r) in &relations {
        checks.push(relation_summary(&format!("transport-{name}"), r));
    }
    let spectra = check_spectra(&c, &twisted)?;
    checks.push(CheckResult::new(
        "spectra",
        spectra.entries.iter().find(|e| !e.pass).map(|e| e.generator.clone()),
    ));
    Ok(OracleReport {
        params: serde_json::json!({"a": params.a, "b": params.b, "p": params.p, "q": params.q, "k": params.k}),
        n,
        carrier_dim: c.dim(),
        checks,
        relations,
        spectra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_realizations() {
        let v = realize_module(&Partition::from_slice(&[1]), 3).unwrap();
        assert_eq!(v.dim(), 3);
        assert_eq!(realize_module(&Partition::from_slice(&[1, 1]), 2).unwrap().dim(), 1);
        let s2 = realize_module(&Partition::from_slice(&[2]), 2).unwrap();
        assert_eq!(s2.dim(), 3);
        assert_eq!(s2.hook_product, 2);
        assert_eq!(s2.action.casimir(), Mat::scalar(3, Rational::from_int(6)));
        assert!(matches!(
            realize_module(&Partition::from_slice(&[1, 1, 1]), 2),
            Err(Error::HeightExceeded { .. })
        ));
        assert!(matches!(realize_module(&Partition::from_slice(&[7]), 2), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn parity_and_hooks() {
        assert_eq!(parity(&[1, 0, 2]), -1);
        assert_eq!(parity(&[1, 2, 0]), 1);
        assert_eq!(hook_product(&Partition::from_slice(&[2, 1])), 3);
        assert_eq!(hook_product(&Partition::from_slice(&[3, 3])), 144);
    }

    #[test]
    fn layout_digits() {
        let l = TensorFactorLayout::new(vec![2, 3, 4]);
        assert_eq!(l.total(), 24);
        let idx = 1 * 12 + 2 * 4 + 3;
        assert_eq!((l.digit(idx, 0), l.digit(idx, 1), l.digit(idx, 2)), (1, 2, 3));
        assert_eq!(l.with_digit(idx, 1, 0), 12 + 3);
    }

    #[test]
    fn sl_constants() {
        let hp = HeckeParams::new(1, 1, 1, 1, 2).unwrap();
        let s = AutomorphismShift::sl(&hp, 2);
        // ap/n − ½(n − 1/n) = 1/2 − 3/4
        assert_eq!(s.c_x, Rational::new(-1, 4));
        assert_eq!(s.d, Rational::new(1, 2));
        assert_eq!(s.c_z, Rational::new(1, 2));
        assert_eq!(s.shift_for(&Generator::Z(2)), Rational::new(1, 2) - Rational::new(1, 2));
        let g = AutomorphismShift::gl(3);
        assert_eq!(g.shift_for(&Generator::Z(1)), Rational::from_int(-3));
    }
}

//! Explicit seminormal modules ℋ^λ: matrices for w_0..w_k, t_{s_i} and x_1
//! on the tableau basis 𝒯_λ, with exact criteria checks and a simplicity
//! certificate.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{self, Assignment, DerivedElementTable, Generator, RelationReport};
use crate::error::{Error, Result};
use crate::numerics::{sqrt_checked, Approx, DenseMatrix, Matrix, Rational};
use crate::partitions::{
    bfs_word, enum_pk, t_lambda, tableaux, witness_word, HeckeParams, MoveWord, Partition, Tableau,
};

/// How off-diagonal square roots are represented.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    /// Rational when every root in a matrix is rational, f64 otherwise.
    #[default]
    ApproxSqrt,
}

/// [t_i]_{T,T} = 1/(c_T(i+1) − c_T(i)).
pub fn diag_t(ci: &Rational, ci1: &Rational) -> Result<Rational> {
    (ci1 - ci).recip()
}

/// [x_1]_{T,T} = ((a−p)c + c² + AB) / (2c) with c = c_T(1).
///
/// At c = 0 the numerator vanishes too (this needs B = 0); the box is then
/// self-complementary and x_1 acts by a.
pub fn diag_x(c: &Rational, params: &HeckeParams) -> Result<Rational> {
    let (big_a, big_b) = (params.big_a(), params.big_b());
    if c.is_zero() {
        if big_b.is_zero() {
            return Ok(Rational::from_int(params.a as i64));
        }
        return Err(Error::DivisionByZero);
    }
    let amp = Rational::from_int(params.a as i64 - params.p as i64);
    let num = &amp * c + c.square() + &big_a * &big_b;
    num.checked_div(&(c * &Rational::from_int(2)))
}

/// [x_1]_{T,s_0T}² = −(c² − A²)(c² − B²) / (2c)²; zero at c ∈ {±A, ±B}.
pub fn offdiag_x_sq(c: &Rational, params: &HeckeParams) -> Result<Rational> {
    let (a2, b2) = (params.big_a().square(), params.big_b().square());
    let c2 = c.square();
    let num = -((&c2 - &a2) * (&c2 - &b2));
    if num.is_zero() {
        return Ok(Rational::zero());
    }
    num.checked_div(&(c2 * Rational::from_int(4)))
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryRow {
    pub tableau: Tableau,
    /// c_T(0), …, c_T(k).
    pub contents: Vec<Rational>,
    /// Indexed by i − 1 for t_{s_i}.
    pub diag_t: Vec<Rational>,
    pub offdiag_t_sq: Vec<Rational>,
    pub diag_x: Option<Rational>,
    pub offdiag_x_sq: Option<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryTable {
    pub lambda: Partition,
    pub rows: Vec<EntryRow>,
}

impl EntryTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn entry_table(lambda: &Partition, params: &HeckeParams) -> Result<EntryTable> {
    let basis = tableaux(lambda, params)?;
    let k = params.k;
    let rows = basis
        .into_iter()
        .map(|t| {
            let contents = t.contents(params);
            let mut dt = Vec::new();
            let mut ot = Vec::new();
            for i in 1..k {
                let d = diag_t(&contents[i], &contents[i + 1])?;
                ot.push(Rational::one() - d.square());
                dt.push(d);
            }
            let (dx, ox) = if k >= 1 {
                (Some(diag_x(&contents[1], params)?), Some(offdiag_x_sq(&contents[1], params)?))
            } else {
                (None, None)
            };
            Ok(EntryRow { tableau: t, contents, diag_t: dt, offdiag_t_sq: ot, diag_x: dx, offdiag_x_sq: ox })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntryTable { lambda: lambda.clone(), rows })
}

#[derive(Clone, Debug)]
pub struct SeminormalModule {
    pub params: HeckeParams,
    pub table: EntryTable,
    pub index: HashMap<Tableau, usize>,
    pub matrices: BTreeMap<Generator, Matrix>,
}

/// Sparse matrix entries, either all rational or promoted to f64.
struct Builder {
    dim: usize,
    exact: Vec<(usize, usize, Rational)>,
    roots: Vec<(usize, usize, Rational)>,
}

impl Builder {
    fn new(dim: usize) -> Self {
        Builder { dim, exact: Vec::new(), roots: Vec::new() }
    }

    fn finish(self) -> Result<Matrix> {
        let mut exact_roots = Vec::new();
        for (i, j, sq) in &self.roots {
            match sq.sqrt_exact() {
                Some(r) => exact_roots.push((*i, *j, r)),
                None => break,
            }
        }
        if exact_roots.len() == self.roots.len() {
            let mut m = DenseMatrix::<Rational>::zeros(self.dim);
            for (i, j, v) in self.exact.into_iter().chain(exact_roots) {
                m.set(i, j, v);
            }
            return Ok(Matrix::Exact(m));
        }
        let mut m = DenseMatrix::<Approx>::zeros(self.dim);
        for (i, j, v) in self.exact {
            m.set(i, j, Approx::from(&v));
        }
        for (i, j, sq) in self.roots {
            m.set(i, j, sqrt_checked(&sq)?);
        }
        Ok(Matrix::Approx(m))
    }
}

impl SeminormalModule {
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn lambda(&self) -> &Partition {
        &self.table.lambda
    }

    pub fn basis(&self) -> impl Iterator<Item = &Tableau> {
        self.table.rows.iter().map(|r| &r.tableau)
    }

    pub fn matrix(&self, g: &Generator) -> Option<&Matrix> {
        self.matrices.get(g)
    }

    fn position(&self, t: &Tableau) -> Result<usize> {
        self.index
            .get(t)
            .copied()
            .ok_or_else(|| Error::CriterionFailure { item: "basis".into(), detail: format!("{t} not in basis") })
    }

    /// Matrices of the primitive generators under the short presentation.
    pub fn assignment(&self) -> Result<Assignment> {
        let mut asg = Assignment::new(self.dim(), DerivedElementTable::short(&self.params));
        for (g, m) in &self.matrices {
            asg.insert(g.clone(), m.clone())?;
        }
        Ok(asg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let basis: Vec<serde_json::Value> = self
            .table
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "shapes": r.tableau.shapes(),
                    "contents": r.contents,
                })
            })
            .collect();
        let matrices: serde_json::Map<String, serde_json::Value> = self
            .matrices
            .iter()
            .map(|(g, m)| (g.to_string(), serde_json::to_value(m).expect("matrix serializes")))
            .collect();
        serde_json::json!({
            "lambda": self.lambda(),
            "params": {"a": self.params.a, "b": self.params.b, "p": self.params.p, "q": self.params.q, "k": self.params.k},
            "basis": basis,
            "matrices": matrices,
        })
    }
}

pub fn build_module(lambda: &Partition, params: &HeckeParams, _backend: Backend) -> Result<SeminormalModule> {
    let table = entry_table(lambda, params)?;
    let k = params.k;
    let dim = table.len();
    let index: HashMap<Tableau, usize> =
        table.rows.iter().enumerate().map(|(n, r)| (r.tableau.clone(), n)).collect();
    let mut matrices = BTreeMap::new();

    for i in 0..=k {
        let diag: Vec<Rational> = table.rows.iter().map(|r| r.contents[i].clone()).collect();
        matrices.insert(Generator::W(i), Matrix::Exact(DenseMatrix::diagonal(&diag)));
    }
    for i in 1..k {
        let mut b = Builder::new(dim);
        for (col, row) in table.rows.iter().enumerate() {
            b.exact.push((col, col, row.diag_t[i - 1].clone()));
            if let Some(s) = row.tableau.apply_si(i) {
                let target = index[&s];
                b.roots.push((target, col, row.offdiag_t_sq[i - 1].clone()));
            }
        }
        matrices.insert(Generator::T(i), b.finish()?);
    }
    if k >= 1 {
        let mut b = Builder::new(dim);
        for (col, row) in table.rows.iter().enumerate() {
            b.exact.push((col, col, row.diag_x.clone().expect("k ≥ 1")));
            if let Some(s) = row.tableau.apply_s0(params) {
                let target = index[&s];
                b.roots.push((target, col, row.offdiag_x_sq.clone().expect("k ≥ 1")));
            }
        }
        matrices.insert(Generator::X(1), b.finish()?);
    }
    log::debug!("built seminormal module for {lambda} (dim {dim})");
    Ok(SeminormalModule { params: params.clone(), table, index, matrices })
}

/// Builds ℋ^λ for every λ ∈ 𝒫_k in parallel.
pub fn build_all(params: &HeckeParams, backend: Backend) -> Result<Vec<SeminormalModule>> {
    enum_pk(params, params.k)
        .par_iter()
        .map(|lam| build_module(lam, params, backend))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub item: String,
    pub pass: bool,
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriteriaReport {
    pub lambda: Partition,
    pub criteria: Vec<CriterionResult>,
}

impl CriteriaReport {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn into_result(self) -> Result<Self> {
        if let Some(c) = self.criteria.iter().find(|c| !c.pass) {
            return Err(Error::CriterionFailure {
                item: c.item.clone(),
                detail: c.detail.clone().unwrap_or_default(),
            });
        }
        Ok(self)
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self, item: &str) -> CriterionResult {
        CriterionResult { item: item.into(), pass: self.failure.is_none(), instances: self.instances, detail: self.failure }
    }
}

/// Squared off-diagonal helpers over partial move chains: a missing
/// tableau means the chain hit a zero entry.
struct Squares<'a> {
    module: &'a SeminormalModule,
}

impl Squares<'_> {
    fn row(&self, t: &Tableau) -> &EntryRow {
        &self.module.table.rows[self.module.index[t]]
    }

    fn t(&self, i: usize, t: Option<&Tableau>) -> Rational {
        match t {
            Some(t) if t.apply_si(i).is_some() => self.row(t).offdiag_t_sq[i - 1].clone(),
            _ => Rational::zero(),
        }
    }

    fn x(&self, t: Option<&Tableau>) -> Rational {
        match t {
            Some(t) if t.apply_s0(&self.module.params).is_some() => {
                self.row(t).offdiag_x_sq.clone().expect("k ≥ 1")
            }
            _ => Rational::zero(),
        }
    }
}

fn then(t: Option<&Tableau>, j: usize, params: &HeckeParams) -> Option<Tableau> {
    t.and_then(|t| t.apply(j, params))
}

/// Checks the six seminormal criteria plus the zero pattern, exactly and
/// numerically.
pub fn check_criteria(module: &SeminormalModule) -> Result<CriteriaReport> {
    let params = &module.params;
    let k = params.k;
    let sq = Squares { module };
    let a = Rational::from_int(params.a as i64);
    let p = Rational::from_int(params.p as i64);

    let (mut c1, mut c2, mut c3, mut c4, mut c5, mut c6, mut zp) =
        (Tally::default(), Tally::default(), Tally::default(), Tally::default(), Tally::default(), Tally::default(), Tally::default());

    for row in &module.table.rows {
        let t = &row.tableau;
        let c = &row.contents;
        for i in 1..k {
            let d = &c[i + 1] - &c[i];
            c1.check(row.diag_t[i - 1] == d.recip()?, || format!("[t_{i}]_TT at {t}"));
            let adjacent = d.abs() == Rational::one();
            zp.check(adjacent == t.apply_si(i).is_none() && adjacent == row.offdiag_t_sq[i - 1].is_zero(), || {
                format!("t_{i} zero pattern at {t}")
            });
            // (4): both off-diagonals are the same root, so their product is offdiag_sq.
            if let Some(s) = t.apply_si(i) {
                let rs = sq.row(&s);
                let ok = rs.offdiag_t_sq[i - 1] == row.offdiag_t_sq[i - 1]
                    && row.offdiag_t_sq[i - 1] == Rational::one() - row.diag_t[i - 1].square()
                    && rs.diag_t[i - 1] == -row.diag_t[i - 1].clone();
                c4.check(ok, || format!("t_{i} involution block at {t}"));
            } else {
                c4.check(row.diag_t[i - 1].abs() == Rational::one(), || format!("t_{i} fixed line at {t}"));
            }
        }
        if k >= 1 {
            let cx = &c[1];
            let dx = row.diag_x.clone().expect("k ≥ 1");
            let expected = if cx.is_zero() {
                a.clone()
            } else {
                let (ba, bb) = (params.big_a(), params.big_b());
                (Rational::from_int(params.a as i64 - params.p as i64) * cx + cx.square() + ba * bb)
                    .checked_div(&(cx * &Rational::from_int(2)))?
            };
            c2.check(dx == expected, || format!("[x_1]_TT at {t}"));
            let critical = params.critical_shifted().contains(cx) || cx.is_zero();
            let ox = row.offdiag_x_sq.clone().expect("k ≥ 1");
            zp.check(critical == t.apply_s0(params).is_none() && critical == ox.is_zero(), || {
                format!("x_1 zero pattern at {t}")
            });
            // (5): the 2×2 block (or 1×1 line) must satisfy (x − a)(x + p) = 0.
            match t.apply_s0(params) {
                Some(s) => {
                    let rs = sq.row(&s);
                    let ds = rs.diag_x.clone().expect("k ≥ 1");
                    let ok = rs.offdiag_x_sq.as_ref() == Some(&ox)
                        && &dx + &ds == &a - &p
                        && &dx * &ds - &ox == -(&a * &p)
                        && s.contents(params)[1] == -cx.clone();
                    c5.check(ok, || format!("x_1 quadratic block at {t}"));
                }
                None => c5.check(dx == a || dx == -p.clone(), || format!("x_1 fixed line at {t}")),
            }
        }
        // (3) and (6), squared: every factor is a nonnegative root in this gauge.
        let me = Some(t);
        for i in 1..k {
            for j in 1..k {
                if j + 1 >= i && j <= i + 1 {
                    continue;
                }
                let sj = then(me, j, params);
                let si = then(me, i, params);
                let lhs = sq.t(i, sj.as_ref()) * sq.t(j, me);
                let rhs = sq.t(i, me) * sq.t(j, si.as_ref());
                c3.check(lhs == rhs, || format!("t_{i}/t_{j} commutation at {t}"));
            }
            if i > 1 {
                let s0 = then(me, 0, params);
                let si = then(me, i, params);
                let lhs = sq.t(i, s0.as_ref()) * sq.x(me);
                let rhs = sq.t(i, me) * sq.x(si.as_ref());
                c3.check(lhs == rhs, || format!("t_{i}/x_1 commutation at {t}"));
            }
        }
        for i in 1..k.saturating_sub(1) {
            let s_i = then(me, i, params);
            let s_i1_i = then(s_i.as_ref(), i + 1, params);
            let lhs = sq.t(i, me) * sq.t(i + 1, s_i.as_ref()) * sq.t(i, s_i1_i.as_ref());
            let s_i1 = then(me, i + 1, params);
            let s_i_i1 = then(s_i1.as_ref(), i, params);
            let rhs = sq.t(i + 1, me) * sq.t(i, s_i1.as_ref()) * sq.t(i + 1, s_i_i1.as_ref());
            c6.check(lhs == rhs, || format!("t_{i}/t_{} braid at {t}", i + 1));
        }
        if k >= 2 {
            let s1 = then(me, 1, params);
            let s0s1 = then(s1.as_ref(), 0, params);
            let s1s0s1 = then(s0s1.as_ref(), 1, params);
            let s0 = then(me, 0, params);
            let s1s0 = then(s0.as_ref(), 1, params);
            let s0s1s0 = then(s1s0.as_ref(), 0, params);
            let lhs = sq.x(s1.as_ref()) * sq.x(s1s0s1.as_ref()) * sq.t(1, me) * sq.t(1, s0s1.as_ref());
            let rhs = sq.x(me) * sq.x(s1s0.as_ref()) * sq.t(1, s0.as_ref()) * sq.t(1, s0s1s0.as_ref());
            c6.check(lhs == rhs, || format!("x_1/t_1 braid at {t}"));
        }
    }

    let mut criteria = vec![
        c1.finish("1-diag-t"),
        c2.finish("2-diag-x"),
        c3.finish("3-commutation"),
        c4.finish("4-involution"),
        c5.finish("5-quadratic"),
        c6.finish("6-braid"),
        zp.finish("zero-pattern"),
    ];

    // Numeric counterpart for (3) and (6) on the assembled matrices.
    let catalog: Vec<_> = algebra::relations_hk_ext_short(params)
        .into_iter()
        .filter(|r| matches!(r.tag.as_str(), "t-far-commute" | "comm-xt" | "t-braid" | "braid-x1"))
        .collect();
    let report = algebra::check_relations(&catalog, &module.assignment()?, algebra::DEFAULT_TOLERANCE)?;
    for (item, tags) in [("3-commutation-numeric", &["t-far-commute", "comm-xt"][..]), ("6-braid-numeric", &["t-braid", "braid-x1"][..])] {
        let rel: Vec<_> = report.results.iter().filter(|r| tags.contains(&r.family.as_str())).collect();
        let fail = rel.iter().find(|r| !r.pass);
        criteria.push(CriterionResult {
            item: item.into(),
            pass: fail.is_none(),
            instances: rel.len(),
            detail: fail.map(|r| r.name.clone()),
        });
    }
    Ok(CriteriaReport { lambda: module.lambda().clone(), criteria })
}

/// Every relation of the short presentation on the module's matrices.
pub fn check_full_relations(module: &SeminormalModule, tol: f64) -> Result<RelationReport> {
    let catalog = algebra::relations_hk_ext_short(&module.params);
    algebra::check_relations(&catalog, &module.assignment()?, tol)
}

/// x_1 annihilated by (x−a)(x+p) and y_1 = w_1 − x_1 + shift by (y−b)(y+q).
pub fn check_spectra(module: &SeminormalModule, tol: f64) -> Result<RelationReport> {
    let catalog: Vec<_> = algebra::relations_hk_ext_consolidated(&module.params)
        .into_iter()
        .filter(|r| r.tag.starts_with("quadratic"))
        .collect();
    algebra::check_relations(&catalog, &module.assignment()?, tol)
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub tableau: Tableau,
    pub word: String,
    pub moves: Vec<usize>,
    pub method: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityCertificate {
    pub lambda: Partition,
    pub dim: usize,
    pub distinct_contents: bool,
    pub projectors_ok: bool,
    pub target: Tableau,
    pub witnesses: Vec<Witness>,
}

/// Distinct content lists, rank-one projectors Pr_T, and a path of
/// nonzero moves from every basis tableau to T_λ.
pub fn check_simplicity(module: &SeminormalModule) -> Result<SimplicityCertificate> {
    let params = &module.params;
    let k = params.k;
    let rows = &module.table.rows;
    let dim = rows.len();

    let mut seen: HashMap<&[Rational], &Tableau> = HashMap::new();
    for r in rows {
        if let Some(other) = seen.insert(&r.contents[1..], &r.tableau) {
            return Err(Error::DistinctnessFailure(format!("{other} and {}", r.tableau)));
        }
    }

    // Pr_T = Π_{S≠T} W_S / W_S(T) with W_S = Σ_{i≥1} (w_i − c_S(i))².
    // Everything is diagonal, so compare diagonals directly.
    let weight = |u: &EntryRow, s: &EntryRow| -> Rational {
        (1..=k).map(|i| (&u.contents[i] - &s.contents[i]).square()).sum()
    };
    let mut projectors_ok = true;
    for (ti, t) in rows.iter().enumerate() {
        for (ui, u) in rows.iter().enumerate() {
            let mut v = Rational::one();
            for (si, s) in rows.iter().enumerate() {
                if si == ti {
                    continue;
                }
                let denom = weight(t, s);
                if denom.is_zero() {
                    return Err(Error::DistinctnessFailure(format!("{} and {}", t.tableau, s.tableau)));
                }
                v = v * weight(u, s).checked_div(&denom)?;
                if v.is_zero() {
                    break;
                }
            }
            let expected = if ui == ti { Rational::one() } else { Rational::zero() };
            projectors_ok &= v == expected;
        }
    }
    if !projectors_ok {
        return Err(Error::DistinctnessFailure("projector is not rank one".into()));
    }

    let target = t_lambda(module.lambda(), params)?;
    module.position(&target)?;
    let witnesses = rows
        .par_iter()
        .map(|r| witness_for(module, &r.tableau, &target))
        .collect::<Result<Vec<_>>>()?;

    Ok(SimplicityCertificate {
        lambda: module.lambda().clone(),
        dim,
        distinct_contents: true,
        projectors_ok,
        target,
        witnesses,
    })
}

fn witness_for(module: &SeminormalModule, t: &Tableau, target: &Tableau) -> Result<Witness> {
    let params = &module.params;
    let (word, method) = match witness_word(t, params) {
        Ok(w) if w.apply(t, params).as_ref() == Some(target) => (w, "row-reduction"),
        _ => (
            bfs_word(t, target, params).ok_or_else(|| Error::ConnectivityFailure(t.to_string()))?,
            "search",
        ),
    };
    verify_nonzero_path(module, t, &word)?;
    Ok(Witness { tableau: t.clone(), word: word.to_word_string(), moves: word.0.clone(), method: method.into() })
}

fn verify_nonzero_path(module: &SeminormalModule, t: &Tableau, word: &MoveWord) -> Result<()> {
    let params = &module.params;
    let mut cur = t.clone();
    for &j in &word.0 {
        let row = &module.table.rows[module.position(&cur)?];
        let sq = if j == 0 { row.offdiag_x_sq.clone() } else { row.offdiag_t_sq.get(j - 1).cloned() };
        if sq.map_or(true, |v| v.is_zero()) {
            return Err(Error::ConnectivityFailure(format!("zero entry for s_{j} at {cur}")));
        }
        cur = cur
            .apply(j, params)
            .ok_or_else(|| Error::ConnectivityFailure(format!("s_{j} undefined at {cur}")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn hp(a: usize, b: usize, p: usize, q: usize, k: usize) -> HeckeParams {
        HeckeParams::new(a, b, p, q, k).unwrap()
    }

    #[test]
    fn entry_formulas() {
        let h = hp(1, 1, 1, 1, 1);
        assert_eq!(diag_x(&rat(-1, 1), &h).unwrap(), rat(-1, 2));
        assert_eq!(offdiag_x_sq(&rat(-1, 1), &h).unwrap(), rat(3, 4));
        let big_a = h.big_a();
        assert_eq!(offdiag_x_sq(&big_a, &h).unwrap(), Rational::zero());
        assert_eq!(diag_x(&big_a, &h).unwrap(), rat(1, 1));
        let d = diag_t(&rat(0, 1), &rat(2, 1)).unwrap();
        assert_eq!(d, rat(1, 2));
        assert_eq!(Rational::one() - d.square(), rat(3, 4));
    }

    #[test]
    fn two_dim_module() {
        let h = hp(1, 1, 1, 1, 1);
        let m = build_module(&Partition::from_slice(&[2, 1]), &h, Backend::ApproxSqrt).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.table.rows[0].contents[1], rat(-1, 1));
        let x = m.matrix(&Generator::X(1)).unwrap();
        let r3 = 3f64.sqrt() / 2.0;
        let expected = [[-0.5, r3], [r3, 0.5]];
        for (i, row) in expected.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert!((x.entry(i, j).to_f64() - v).abs() < 1e-12);
            }
        }
        assert!(m.matrix(&Generator::T(1)).is_none());
        assert!(check_criteria(&m).unwrap().all_pass());
        let cert = check_simplicity(&m).unwrap();
        assert_eq!(cert.witnesses.len(), 2);
        assert!(cert.witnesses.iter().any(|w| w.moves == vec![0]));
    }

    #[test]
    fn rank_zero_module() {
        let h = hp(1, 1, 1, 1, 0);
        for m in build_all(&h, Backend::ApproxSqrt).unwrap() {
            assert_eq!(m.matrices.len(), 1);
            assert!(m.matrix(&Generator::W(0)).is_some());
            assert!(check_simplicity(&m).unwrap().witnesses[0].moves.is_empty());
        }
    }
}

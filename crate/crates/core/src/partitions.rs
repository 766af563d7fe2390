//! Partitions, contents, the rectangle set 𝒫 and its box-adding levels 𝒫_i,
//! and tableaux (paths T^(0) ↘ … ↘ T^(k)) with their s_i / s_0 moves.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Panics on non-decreasing input; for literals in code and tests.
    pub fn from_slice(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle (a^p).
    pub fn rectangle(a: usize, p: usize) -> Self {
        Partition::new(vec![a; p]).expect("rectangle")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-indexed); zero below the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains_box(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && self.row_len(b.row) >= b.col
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Boxes in reading order: rows top to bottom, left to right.
    pub fn boxes(&self) -> Vec<BoxPos> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 1..=len {
                out.push(BoxPos::new(r + 1, c));
            }
        }
        out
    }

    /// Boxes of `self` not in `inner`, in reading order.
    pub fn skew_boxes(&self, inner: &Partition) -> Vec<BoxPos> {
        self.boxes().into_iter().filter(|b| !inner.contains_box(*b)).collect()
    }

    pub fn addable_boxes(&self) -> Vec<BoxPos> {
        (1..=self.height() + 1)
            .filter(|&r| self.row_len(r - 1) > self.row_len(r))
            .map(|r| BoxPos::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn removable_boxes(&self) -> Vec<BoxPos> {
        (1..=self.height())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| BoxPos::new(r, self.row_len(r)))
            .collect()
    }

    pub fn with_box(&self, b: BoxPos) -> Result<Partition> {
        let mut parts = self.0.clone();
        if b.row == parts.len() + 1 {
            parts.push(0);
        }
        match parts.get_mut(b.row - 1) {
            Some(len) if *len + 1 == b.col => *len += 1,
            _ => return Err(Error::Parse(format!("box {b} is not addable to {self}"))),
        }
        Partition::new(parts)
    }

    pub fn without_box(&self, b: BoxPos) -> Result<Partition> {
        if !self.removable_boxes().contains(&b) {
            return Err(Error::Parse(format!("box {b} is not removable from {self}")));
        }
        let mut parts = self.0.clone();
        parts[b.row - 1] -= 1;
        Partition::new(parts)
    }

    /// The single box of `self / inner` when |self| = |inner| + 1.
    pub fn added_box(&self, inner: &Partition) -> Option<BoxPos> {
        if self.size() != inner.size() + 1 || !self.contains(inner) {
            return None;
        }
        self.skew_boxes(inner).into_iter().next()
    }

    /// ⟨λ, λ + 2δ⟩ − (n−1)|λ| with δ = (n−1, …, 1, 0).
    pub fn casimir_gl(&self, n: usize) -> Rational {
        let mut s: i64 = 0;
        for (i, &l) in self.0.iter().enumerate() {
            let l = l as i64;
            s += l * (l + 2 * (n as i64 - 1 - i as i64));
        }
        Rational::from_int(s - (n as i64 - 1) * self.size() as i64)
    }

    /// Weyl dimension of the gl_n module L(λ); zero when the height exceeds n.
    pub fn weyl_dim(&self, n: usize) -> u128 {
        if self.height() > n {
            return 0;
        }
        let l = |i: usize| self.0.get(i).copied().unwrap_or(0) as i128;
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..n {
            for j in i + 1..n {
                num *= l(i) - l(j) + (j - i) as i128;
                den *= (j - i) as i128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        (num / den) as u128
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts "3,1", "(3,1)" and "" / "()" for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("bad partition '{s}': zero part")));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// A box at (row, col), both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl BoxPos {
    pub fn new(row: usize, col: usize) -> Self {
        BoxPos { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row, self.col)
    }
}

/// Content col − row of a box.
pub fn content(b: BoxPos) -> i64 {
    b.content()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Gl,
    Sl,
}

/// Rectangle parameters (a^p), (b^q) and strand count k, normalized so that
/// p ≥ q, and a ≥ b when p = q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeckeParams {
    pub a: usize,
    pub b: usize,
    pub p: usize,
    pub q: usize,
    pub k: usize,
    pub kind: AlgebraKind,
    pub n: Option<usize>,
    /// True when construction swapped (a,p) with (b,q).
    #[serde(skip)]
    pub swapped: bool,
}

impl HeckeParams {
    pub fn new(a: usize, b: usize, p: usize, q: usize, k: usize) -> Result<Self> {
        Self::with_kind(a, b, p, q, k, AlgebraKind::Gl, None)
    }

    pub fn with_kind(
        a: usize,
        b: usize,
        p: usize,
        q: usize,
        k: usize,
        kind: AlgebraKind,
        n: Option<usize>,
    ) -> Result<Self> {
        if a == 0 || b == 0 || p == 0 || q == 0 {
            return Err(Error::InvalidParams(format!(
                "a, b, p, q must be positive (got {a}, {b}, {p}, {q})"
            )));
        }
        if n == Some(0) {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        let swap = p < q || (p == q && a < b);
        let (a, b, p, q) = if swap { (b, a, q, p) } else { (a, b, p, q) };
        Ok(HeckeParams { a, b, p, q, k, kind, n, swapped: swap })
    }

    pub fn with_k(&self, k: usize) -> Self {
        HeckeParams { k, ..self.clone() }
    }

    pub fn with_n(&self, n: usize) -> Self {
        HeckeParams { n: Some(n), ..self.clone() }
    }

    /// ½(a − p + b − q).
    pub fn shift(&self) -> Rational {
        Rational::new(self.a as i64 - self.p as i64 + self.b as i64 - self.q as i64, 2)
    }

    /// A = (a+p+b+q)/2.
    pub fn big_a(&self) -> Rational {
        Rational::new((self.a + self.p + self.b + self.q) as i64, 2)
    }

    /// B = (a+p−b−q)/2.
    pub fn big_b(&self) -> Rational {
        Rational::new(self.a as i64 + self.p as i64 - self.b as i64 - self.q as i64, 2)
    }

    /// Unshifted contents at which a shape in 𝒫_1 has a single parent.
    pub fn critical_contents(&self) -> [i64; 4] {
        let (a, b, p, q) = (self.a as i64, self.b as i64, self.p as i64, self.q as i64);
        [-p - q, a - q, a + b, b - p]
    }

    /// Shifted critical contents ½(±(a+p) ± (b+q)).
    pub fn critical_shifted(&self) -> [Rational; 4] {
        let (ba, bb) = (self.big_a(), self.big_b());
        [ba.clone(), -&ba, bb.clone(), -&bb]
    }

    pub fn root(&self) -> Partition {
        Partition::rectangle(self.a, self.p)
    }

    /// Checks p + q ≤ n (gl) or p + q ≤ n − 1 (sl).
    pub fn check_oracle_n(&self, n: usize) -> Result<()> {
        let bound = match self.kind {
            AlgebraKind::Gl => n,
            AlgebraKind::Sl => n.saturating_sub(1),
        };
        if self.p + self.q > bound {
            return Err(Error::CapExceeded(format!(
                "p+q = {} exceeds {} for n = {n}",
                self.p + self.q,
                if self.kind == AlgebraKind::Gl { "n" } else { "n-1" }
            )));
        }
        Ok(())
    }
}

impl fmt::Display for HeckeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a,b,p,q)=({},{},{},{}), k={}", self.a, self.b, self.p, self.q, self.k)
    }
}

/// The set 𝒫 in lexicographically descending order.
pub fn enum_p(params: &HeckeParams) -> Vec<Partition> {
    let (a, b, p, q) = (params.a, params.b, params.p, params.q);
    let lo = a.max(b);
    let hi = a + b;
    let mut out = Vec::new();
    let mut top = vec![0usize; q];
    fn rec(
        i: usize,
        max: usize,
        lo: usize,
        top: &mut Vec<usize>,
        out: &mut Vec<Partition>,
        build: &dyn Fn(&[usize]) -> Partition,
    ) {
        if i == top.len() {
            out.push(build(top));
            return;
        }
        for v in (lo..=max).rev() {
            top[i] = v;
            rec(i + 1, v, lo, top, out, build);
        }
    }
    let build = |top: &[usize]| {
        let mut parts = top.to_vec();
        parts.extend(std::iter::repeat(a).take(p - q));
        parts.extend(top.iter().rev().map(|&x| a + b - x));
        Partition::new(parts).expect("rectangle set member is a partition")
    };
    rec(0, hi, lo, &mut top, &mut out, &build);
    out
}

pub fn in_p(lambda: &Partition, params: &HeckeParams) -> bool {
    let (a, b, p, q) = (params.a, params.b, params.p, params.q);
    if lambda.height() > p + q || lambda.size() != a * p + b * q {
        return false;
    }
    let l = |i: usize| lambda.row_len(i);
    (q + 1..=p).all(|i| l(i) == a)
        && l(q) >= a.max(b)
        && (1..=q).all(|i| l(i) + l(p + q - i + 1) == a + b)
}

/// Partitions obtained by adding one box, optionally capped in height.
pub fn add_box_set(lambda: &Partition, max_height: Option<usize>) -> Vec<Partition> {
    let mut out: Vec<Partition> = lambda
        .addable_boxes()
        .into_iter()
        .map(|b| lambda.with_box(b).expect("addable"))
        .filter(|mu| max_height.map_or(true, |h| mu.height() <= h))
        .collect();
    out.sort_by(|x, y| y.cmp(x));
    out
}

/// 𝒫_i: shapes reached from 𝒫 by adding i boxes (deduplicated, descending).
pub fn enum_pk(params: &HeckeParams, i: usize) -> Vec<Partition> {
    enum_pk_truncated(params, i, None)
}

pub fn enum_pk_truncated(params: &HeckeParams, i: usize, max_height: Option<usize>) -> Vec<Partition> {
    let mut level: Vec<Partition> = enum_p(params)
        .into_iter()
        .filter(|mu| max_height.map_or(true, |h| mu.height() <= h))
        .collect();
    for _ in 0..i {
        let set: BTreeSet<Partition> =
            level.iter().flat_map(|mu| add_box_set(mu, max_height)).collect();
        level = set.into_iter().rev().collect();
    }
    level
}

/// Membership in 𝒫_i without enumerating the level.
pub fn in_pk(mu: &Partition, params: &HeckeParams, i: usize) -> bool {
    let (a, b, p, q) = (params.a, params.b, params.p, params.q);
    mu.size() == a * p + b * q + i && enum_p(params).iter().any(|lam| mu.contains(lam))
}

/// Boxes in rows p+1 and below.
fn lower_boxes(lambda: &Partition, params: &HeckeParams) -> Vec<BoxPos> {
    lambda.boxes().into_iter().filter(|b| b.row > params.p).collect()
}

/// The scalar by which z_0 acts on L(λ) ⊂ M ⊗ N.
pub fn gamma_rect(lambda: &Partition, params: &HeckeParams) -> Result<Rational> {
    if !in_p(lambda, params) {
        return Err(Error::NotInP(lambda.clone()));
    }
    let s = params.shift();
    let mut g = Rational::from_int((params.a * params.b * params.q) as i64);
    for b in lower_boxes(lambda, params) {
        g += &((Rational::from_int(b.content()) - &s) * Rational::from_int(2));
    }
    if params.kind == AlgebraKind::Sl {
        let n = params
            .n
            .ok_or_else(|| Error::InvalidParams("sl requires n".into()))?;
        g -= &Rational::new((params.a * params.b * params.p * params.q) as i64, n as i64);
    }
    Ok(g)
}

/// All λ ∈ 𝒫 with λ ⊂ μ, descending.
pub fn parents(mu: &Partition, params: &HeckeParams) -> Result<Vec<Partition>> {
    if !in_pk(mu, params, 1) {
        return Err(Error::NotInP1(mu.clone()));
    }
    let mut out: Vec<Partition> = mu
        .removable_boxes()
        .into_iter()
        .map(|b| mu.without_box(b).expect("removable"))
        .filter(|lam| in_p(lam, params))
        .collect();
    out.sort_by(|x, y| y.cmp(x));
    Ok(out)
}

/// Position of the box complementary to `b` within the (a+b) × (p+q) frame.
pub fn complement(b: BoxPos, params: &HeckeParams) -> BoxPos {
    BoxPos::new(params.p + params.q + 1 - b.row, params.a + params.b + 1 - b.col)
}

/// A path T^(0) ↘ T^(1) ↘ … ↘ T^(k) with T^(0) ∈ 𝒫.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shapes: Vec<Partition>,
}

impl Tableau {
    pub fn new(shapes: Vec<Partition>, params: &HeckeParams) -> Result<Self> {
        let Some(first) = shapes.first() else {
            return Err(Error::Parse("tableau needs at least one shape".into()));
        };
        if !in_p(first, params) {
            return Err(Error::NotInP(first.clone()));
        }
        for w in shapes.windows(2) {
            if w[1].added_box(&w[0]).is_none() {
                return Err(Error::Parse(format!("{} does not add one box to {}", w[1], w[0])));
            }
        }
        Ok(Tableau { shapes })
    }

    fn from_shapes_unchecked(shapes: Vec<Partition>) -> Self {
        Tableau { shapes }
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn k(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn shape(&self, i: usize) -> &Partition {
        &self.shapes[i]
    }

    pub fn base(&self) -> &Partition {
        &self.shapes[0]
    }

    pub fn lambda(&self) -> &Partition {
        self.shapes.last().expect("nonempty")
    }

    /// The box added at step i (1 ≤ i ≤ k).
    pub fn added(&self, i: usize) -> BoxPos {
        self.shapes[i].added_box(&self.shapes[i - 1]).expect("valid tableau")
    }

    /// Map from box to filling for the boxes of λ / T^(0).
    pub fn fillings(&self) -> HashMap<BoxPos, usize> {
        (1..=self.k()).map(|i| (self.added(i), i)).collect()
    }

    /// c_T(i): shifted content of the i-th box, or the rank-0 value for i = 0.
    pub fn shifted_content(&self, i: usize, params: &HeckeParams) -> Result<Rational> {
        if i > self.k() {
            return Err(Error::IndexOutOfRange { index: i, max: self.k() });
        }
        let s = params.shift();
        if i == 0 {
            return Ok(gamma_rect(self.base(), params)? - s);
        }
        Ok(Rational::from_int(self.added(i).content()) - s)
    }

    /// (c_T(0), c_T(1), …, c_T(k)).
    pub fn contents(&self, params: &HeckeParams) -> Vec<Rational> {
        (0..=self.k())
            .map(|i| self.shifted_content(i, params).expect("valid tableau"))
            .collect()
    }

    /// s_i T for 1 ≤ i ≤ k−1, or None when the two boxes are adjacent.
    pub fn apply_si(&self, i: usize) -> Option<Tableau> {
        if i == 0 || i >= self.k() {
            return None;
        }
        let (bi, bj) = (self.added(i), self.added(i + 1));
        if (bi.content() - bj.content()).abs() == 1 {
            return None;
        }
        let mut shapes = self.shapes.clone();
        shapes[i] = self.shapes[i - 1].with_box(bj).ok()?;
        Some(Tableau::from_shapes_unchecked(shapes))
    }

    /// s_0 T: T^(0) replaced by the other parent of T^(1), if there is one.
    pub fn apply_s0(&self, params: &HeckeParams) -> Option<Tableau> {
        if self.k() == 0 {
            return None;
        }
        let ps = parents(&self.shapes[1], params).ok()?;
        let other = ps.into_iter().find(|p| p != self.base())?;
        let mut shapes = self.shapes.clone();
        shapes[0] = other;
        Some(Tableau::from_shapes_unchecked(shapes))
    }

    /// Applies s_0 (j = 0) or s_j (j ≥ 1).
    pub fn apply(&self, j: usize, params: &HeckeParams) -> Option<Tableau> {
        if j == 0 {
            self.apply_s0(params)
        } else {
            self.apply_si(j)
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shapes.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(" -> "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The set 𝒯_λ of tableaux of length k ending at λ, ordered
/// lexicographically by (c_T(1), …, c_T(k)), ties broken by c_T(0).
pub fn tableaux(lambda: &Partition, params: &HeckeParams) -> Result<Vec<Tableau>> {
    let k = params.k;
    if !in_pk(lambda, params, k) {
        return Err(Error::NotInPk { partition: lambda.clone(), level: k });
    }
    let p_set: HashSet<Partition> = enum_p(params).into_iter().collect();
    let mut out = Vec::new();
    let mut path = vec![lambda.clone()];
    fn rec(
        path: &mut Vec<Partition>,
        remaining: usize,
        p_set: &HashSet<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let cur = path.last().expect("nonempty").clone();
        if remaining == 0 {
            if p_set.contains(&cur) {
                let mut shapes = path.clone();
                shapes.reverse();
                out.push(shapes);
            }
            return;
        }
        for b in cur.removable_boxes() {
            let smaller = cur.without_box(b).expect("removable");
            if !p_set.iter().any(|lam| smaller.contains(lam)) {
                continue;
            }
            path.push(smaller);
            rec(path, remaining - 1, p_set, out);
            path.pop();
        }
    }
    rec(&mut path, k, &p_set, &mut out);
    let mut ts: Vec<(Vec<Rational>, Tableau)> = out
        .into_iter()
        .map(|shapes| {
            let t = Tableau::from_shapes_unchecked(shapes);
            let mut key = t.contents(params);
            key.rotate_left(1);
            (key, t)
        })
        .collect();
    ts.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(ts.into_iter().map(|(_, t)| t).collect())
}

/// Rebuilds a tableau from its shifted contents c_T(1..k) and final shape.
pub fn from_contents(contents: &[Rational], lambda: &Partition, params: &HeckeParams) -> Result<Tableau> {
    let s = params.shift();
    let mut shapes = vec![lambda.clone()];
    for c in contents.iter().rev() {
        let target = c + &s;
        let cur = shapes.last().expect("nonempty");
        let b = cur
            .removable_boxes()
            .into_iter()
            .find(|b| Rational::from_int(b.content()) == target)
            .ok_or_else(|| Error::Parse(format!("no removable box of content {target} in {cur}")))?;
        let next = cur.without_box(b)?;
        shapes.push(next);
    }
    shapes.reverse();
    Tableau::new(shapes, params)
}

/// The tableau from T^(0) to λ filling λ / T^(0) left to right, top to bottom.
pub fn row_tableau(t: &Tableau) -> Tableau {
    row_filling(t.base(), t.lambda())
}

fn row_filling(base: &Partition, lambda: &Partition) -> Tableau {
    let mut shapes = vec![base.clone()];
    for b in lambda.skew_boxes(base) {
        let next = shapes.last().expect("nonempty").with_box(b).expect("row order stays a partition");
        shapes.push(next);
    }
    Tableau::from_shapes_unchecked(shapes)
}

/// (λ/μ)^max: the lexicographically largest member of 𝒫 contained in λ.
pub fn lambda_max(lambda: &Partition, params: &HeckeParams) -> Option<Partition> {
    enum_p(params).into_iter().find(|mu| lambda.contains(mu))
}

/// The distinguished tableau with T^(0) = (λ/μ)^max and row filling.
pub fn t_lambda(lambda: &Partition, params: &HeckeParams) -> Result<Tableau> {
    if !in_pk(lambda, params, params.k) {
        return Err(Error::NotInPk { partition: lambda.clone(), level: params.k });
    }
    let base = lambda_max(lambda, params).expect("λ ∈ 𝒫_k contains a member of 𝒫");
    Ok(row_filling(&base, lambda))
}

/// A sequence of moves s_{j_1}, s_{j_2}, … in application order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveWord(pub Vec<usize>);

impl MoveWord {
    /// Written as an operator product: last applied move leftmost.
    pub fn to_word_string(&self) -> String {
        self.0.iter().rev().map(|j| format!("s_{j}")).collect()
    }

    pub fn apply(&self, t: &Tableau, params: &HeckeParams) -> Option<Tableau> {
        self.0.iter().try_fold(t.clone(), |cur, &j| cur.apply(j, params))
    }
}

impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word_string())
    }
}

/// Moves T to row(T) by repeatedly lowering the first misplaced filling.
pub fn row_word(t: &Tableau) -> Result<(MoveWord, Tableau)> {
    let target = row_tableau(t);
    let order = t.lambda().skew_boxes(t.base());
    let mut cur = t.clone();
    let mut word = Vec::new();
    let bound = t.k() * t.k() + 1;
    while cur != target {
        let fill = cur.fillings();
        let want = target.fillings();
        let x = order
            .iter()
            .find(|b| fill[b] != want[b])
            .expect("differs somewhere");
        let j = fill[x];
        cur = cur.apply_si(j - 1).ok_or_else(|| {
            Error::ConnectivityFailure(format!("s_{} undefined on {cur} while sorting to rows", j - 1))
        })?;
        word.push(j - 1);
        if word.len() > bound {
            return Err(Error::ConnectivityFailure(format!("row sorting of {t} did not terminate")));
        }
    }
    Ok((MoveWord(word), cur))
}

/// Moves T to t_λ: sort to rows, then repeatedly move the last box of
/// T^(0) below row p whose complement lies in λ across with s_0.
pub fn witness_word(t: &Tableau, params: &HeckeParams) -> Result<MoveWord> {
    let target = t_lambda(t.lambda(), params)?;
    let (MoveWord(mut word), mut cur) = row_word(t)?;
    let mut rounds = 0;
    while cur != target {
        rounds += 1;
        if rounds > params.a * params.q * (params.p + params.q) + 1 {
            return Err(Error::ConnectivityFailure(format!("no progress from {t}")));
        }
        let lambda = cur.lambda().clone();
        let x = lower_boxes(cur.base(), params)
            .into_iter()
            .filter(|b| lambda.contains_box(complement(*b, params)))
            .last()
            .ok_or_else(|| Error::ConnectivityFailure(format!("no movable box in {}", cur.base())))?;
        let xc = complement(x, params);
        let f = *cur
            .fillings()
            .get(&xc)
            .ok_or_else(|| Error::ConnectivityFailure(format!("complement {xc} is not filled")))?;
        // bring the complementary box down to filling 1
        for j in (1..f).rev() {
            cur = cur
                .apply_si(j)
                .ok_or_else(|| Error::ConnectivityFailure(format!("s_{j} undefined on {cur}")))?;
            word.push(j);
        }
        cur = cur
            .apply_s0(params)
            .ok_or_else(|| Error::ConnectivityFailure(format!("s_0 undefined on {cur}")))?;
        word.push(0);
        let (w, next) = row_word(&cur)?;
        word.extend(w.0);
        cur = next;
    }
    Ok(MoveWord(word))
}

/// Shortest move sequence from `t` to `target` through defined moves.
pub fn bfs_word(t: &Tableau, target: &Tableau, params: &HeckeParams) -> Option<MoveWord> {
    let mut prev: HashMap<Tableau, (Tableau, usize)> = HashMap::new();
    let mut queue = VecDeque::from([t.clone()]);
    let mut seen: HashSet<Tableau> = HashSet::from([t.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == target {
            let mut word = Vec::new();
            let mut node = cur;
            while let Some((p, j)) = prev.get(&node) {
                word.push(*j);
                node = p.clone();
            }
            word.reverse();
            return Some(MoveWord(word));
        }
        for j in 0..cur.k() {
            if let Some(next) = cur.apply(j, params) {
                if seen.insert(next.clone()) {
                    prev.insert(next.clone(), (cur.clone(), j));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(s: &[usize]) -> Partition {
        Partition::from_slice(s)
    }

    fn params(a: usize, b: usize, p: usize, q: usize, k: usize) -> HeckeParams {
        HeckeParams::new(a, b, p, q, k).unwrap()
    }

    #[test]
    fn contents_of_boxes() {
        assert_eq!(content(BoxPos::new(1, 1)), 0);
        assert_eq!(content(BoxPos::new(2, 3)), 1);
        assert_eq!(content(BoxPos::new(4, 1)), -3);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), part(&[3, 1]));
        assert_eq!("(2,2)".parse::<Partition>().unwrap().to_string(), "(2,2)");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&part(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn normalization_swaps() {
        let hp = HeckeParams::new(2, 3, 1, 2, 0).unwrap();
        assert!(hp.swapped);
        assert_eq!((hp.a, hp.b, hp.p, hp.q), (3, 2, 2, 1));
        let hp = HeckeParams::new(1, 2, 2, 2, 0).unwrap();
        assert_eq!((hp.a, hp.b), (2, 1));
        assert!(HeckeParams::new(0, 1, 1, 1, 0).is_err());
    }

    #[test]
    fn rectangle_set_examples() {
        assert_eq!(enum_p(&params(1, 1, 1, 1, 0)), vec![part(&[2]), part(&[1, 1])]);
        let p = enum_p(&params(3, 2, 2, 2, 0));
        assert_eq!(p.len(), 6);
        assert!(p.contains(&part(&[5, 5])) && p.contains(&part(&[3, 3, 2, 2])));
        assert_eq!(enum_p(&params(5, 2, 4, 2, 0)).len(), 6);
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(add_box_set(&part(&[2]), None), vec![part(&[3]), part(&[2, 1])]);
        assert_eq!(add_box_set(&Partition::empty(), None), vec![part(&[1])]);
        assert_eq!(
            add_box_set(&part(&[2, 1]), None),
            vec![part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]
        );
        assert_eq!(add_box_set(&part(&[2, 1]), Some(2)), vec![part(&[3, 1]), part(&[2, 2])]);
    }

    #[test]
    fn levels() {
        let hp = params(1, 1, 1, 1, 1);
        assert_eq!(enum_pk(&hp, 1), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(enum_pk(&hp, 0), enum_p(&hp));
        assert_eq!(enum_pk(&params(5, 2, 4, 2, 1), 1).len(), 18);
    }

    #[test]
    fn gamma_values() {
        let hp = params(1, 1, 1, 1, 0);
        assert_eq!(gamma_rect(&part(&[2]), &hp).unwrap(), Rational::one());
        assert_eq!(gamma_rect(&part(&[1, 1]), &hp).unwrap(), Rational::from_int(-1));
        assert!(matches!(gamma_rect(&part(&[3]), &hp), Err(Error::NotInP(_))));
        let hp = params(4, 2, 4, 2, 0);
        let g: Vec<i64> = enum_p(&hp)
            .iter()
            .map(|l| gamma_rect(l, &hp).unwrap().to_i64().unwrap())
            .collect();
        assert_eq!(g, vec![16, 8, 2, -2, -8, -16]);
    }

    #[test]
    fn casimir_matches_gamma() {
        // on M ⊗ N, z_0 = γ = ½(κ_λ − κ_M − κ_N)
        for (a, b, p, q) in [(1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 2, 1), (3, 1, 2, 2)] {
            let hp = params(a, b, p, q, 0);
            let n = p + q + 1;
            for lam in enum_p(&hp) {
                let kappa = lam.casimir_gl(n)
                    - Partition::rectangle(hp.a, hp.p).casimir_gl(n)
                    - Partition::rectangle(hp.b, hp.q).casimir_gl(n);
                assert_eq!(gamma_rect(&lam, &hp).unwrap(), kappa * Rational::half());
            }
        }
    }

    #[test]
    fn parent_examples() {
        let hp = params(1, 1, 1, 1, 1);
        assert_eq!(parents(&part(&[3]), &hp).unwrap(), vec![part(&[2])]);
        assert_eq!(parents(&part(&[2, 1]), &hp).unwrap(), vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(parents(&part(&[1, 1, 1]), &hp).unwrap(), vec![part(&[1, 1])]);
        assert!(matches!(parents(&part(&[2]), &hp), Err(Error::NotInP1(_))));
    }

    #[test]
    fn shifted_content_examples() {
        let hp = params(1, 1, 1, 1, 1);
        let t = Tableau::new(vec![part(&[2]), part(&[2, 1])], &hp).unwrap();
        assert_eq!(t.shifted_content(1, &hp).unwrap(), Rational::from_int(-1));
        let t = Tableau::new(vec![part(&[1, 1])], &hp).unwrap();
        assert_eq!(t.shifted_content(0, &hp).unwrap(), Rational::from_int(-1));
        assert!(matches!(t.shifted_content(1, &hp), Err(Error::IndexOutOfRange { .. })));
        let hp = params(4, 2, 4, 2, 0);
        let t = Tableau::new(vec![part(&[6, 6, 4, 4])], &hp).unwrap();
        assert_eq!(t.shifted_content(0, &hp).unwrap(), Rational::from_int(16));
    }

    #[test]
    fn closed_form_c0() {
        // abq − (|𝓑|+½)(a−p+b−q) + 2Σ c(B)
        let hp = params(3, 1, 2, 1, 0);
        for lam in enum_p(&hp) {
            let lower = lower_boxes(&lam, &hp);
            let sum: i64 = lower.iter().map(|b| b.content()).sum();
            let d = hp.a as i64 - hp.p as i64 + hp.b as i64 - hp.q as i64;
            let expected = Rational::from_int((hp.a * hp.b * hp.q) as i64)
                - Rational::new((2 * lower.len() as i64 + 1) * d, 2)
                + Rational::from_int(2 * sum);
            let t = Tableau::new(vec![lam], &hp).unwrap();
            assert_eq!(t.shifted_content(0, &hp).unwrap(), expected);
        }
    }

    #[test]
    fn moves() {
        let hp = params(1, 1, 1, 1, 2);
        let t = Tableau::new(vec![part(&[2]), part(&[3]), part(&[3, 1])], &hp).unwrap();
        let s1 = t.apply_si(1).unwrap();
        assert_eq!(s1.shapes(), &[part(&[2]), part(&[2, 1]), part(&[3, 1])]);
        assert_eq!(s1.apply_si(1).unwrap(), t);
        assert!(t.apply_s0(&hp).is_none());
        let adjacent = Tableau::new(vec![part(&[2]), part(&[3]), part(&[4])], &hp).unwrap();
        assert!(adjacent.apply_si(1).is_none());
        let u = Tableau::new(vec![part(&[2]), part(&[2, 1])], &hp).unwrap();
        assert_eq!(u.apply_s0(&hp).unwrap().base(), &part(&[1, 1]));
    }

    #[test]
    fn tableaux_of_small_shapes() {
        let hp = params(1, 1, 1, 1, 2);
        let ts = tableaux(&part(&[2, 2]), &hp).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(matches!(tableaux(&part(&[5]), &hp), Err(Error::NotInPk { .. })));
        let ts = tableaux(&part(&[2, 1]), &hp.with_k(1)).unwrap();
        let c: Vec<Rational> = ts.iter().map(|t| t.shifted_content(1, &hp).unwrap()).collect();
        assert_eq!(c, vec![Rational::from_int(-1), Rational::one()]);
    }

    /// The worked example with (a,b,p,q) = (4,2,3,2), k = 5.
    fn worked_example() -> (HeckeParams, Tableau) {
        let hp = params(4, 2, 3, 2, 5);
        let base = part(&[5, 4, 4, 2, 1]);
        let fills = [
            BoxPos::new(4, 3),
            BoxPos::new(5, 2),
            BoxPos::new(1, 6),
            BoxPos::new(1, 7),
            BoxPos::new(5, 3),
        ];
        let mut shapes = vec![base];
        for b in fills {
            let next = shapes.last().unwrap().with_box(b).unwrap();
            shapes.push(next);
        }
        (hp.clone(), Tableau::new(shapes, &hp).unwrap())
    }

    #[test]
    fn worked_example_witness() {
        let (hp, t) = worked_example();
        assert_eq!(t.lambda(), &part(&[7, 4, 4, 3, 3]));
        let (w, row) = row_word(&t).unwrap();
        assert_eq!(w.to_word_string(), "s_2s_3s_1s_2");
        assert_eq!(row, row_tableau(&t));
        let tl = t_lambda(t.lambda(), &hp).unwrap();
        assert_eq!(tl.base(), &part(&[6, 4, 4, 2]));
        let w = witness_word(&t, &hp).unwrap();
        assert_eq!(w.to_word_string(), "s_2s_1s_0s_2s_3s_1s_2");
        assert_eq!(w.apply(&t, &hp).unwrap(), tl);
    }

    #[test]
    fn content_reconstruction_and_witnesses() {
        for (a, b, p, q) in [(1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 2, 1), (3, 2, 2, 1)] {
            let hp = params(a, b, p, q, 3);
            for lam in enum_pk(&hp, 3) {
                for t in tableaux(&lam, &hp).unwrap() {
                    let c = t.contents(&hp);
                    assert_eq!(from_contents(&c[1..], &lam, &hp).unwrap(), t);
                    assert_eq!(row_tableau(&row_tableau(&t)), row_tableau(&t));
                    let w = witness_word(&t, &hp).unwrap();
                    assert_eq!(w.apply(&t, &hp).unwrap(), t_lambda(&lam, &hp).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rectangle_law(a in 1usize..5, b in 1usize..5, p in 1usize..4, q in 1usize..4) {
            let hp = params(a, b, p, q, 0);
            let set = enum_p(&hp);
            let m = hp.a.min(hp.b);
            let mut binom = 1usize;
            for i in 0..hp.q {
                binom = binom * (m + hp.q - i) / (i + 1);
            }
            prop_assert_eq!(set.len(), binom);
            for lam in &set {
                prop_assert!(in_p(lam, &hp));
            }
        }

        #[test]
        fn moves_are_involutions(a in 1usize..4, b in 1usize..3, p in 1usize..3, q in 1usize..3) {
            let hp = params(a, b, p, q, 2);
            for lam in enum_pk(&hp, 2) {
                for t in tableaux(&lam, &hp).unwrap() {
                    let c = t.contents(&hp);
                    if let Some(u) = t.apply_si(1) {
                        prop_assert_eq!(u.apply_si(1).unwrap(), t.clone());
                        let cu = u.contents(&hp);
                        prop_assert_eq!((&cu[1], &cu[2], &cu[0]), (&c[2], &c[1], &c[0]));
                    } else {
                        prop_assert_eq!((&c[2] - &c[1]).abs(), Rational::one());
                    }
                    match t.apply_s0(&hp) {
                        Some(u) => {
                            prop_assert_eq!(u.apply_s0(&hp).unwrap(), t.clone());
                            prop_assert_eq!(u.contents(&hp)[1].clone(), -&c[1]);
                        }
                        None => prop_assert!(hp.critical_shifted().contains(&c[1])),
                    }
                }
            }
        }
    }
}

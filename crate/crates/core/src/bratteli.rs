//! Ranked Bratteli diagram of End(M) ⊆ End(M⊗N) ⊆ End(M⊗N⊗V^⊗i): rank 0
//! holds (a^p), rank i ≥ 1 holds 𝒫_{i−1}.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::partitions::{add_box_set, enum_pk_truncated, gamma_rect, HeckeParams, Partition, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: Rational,
}

#[derive(Clone, Debug)]
pub struct BratteliDiagram {
    params: HeckeParams,
    max_height: Option<usize>,
    levels: Vec<Vec<Partition>>,
    edges: Vec<Vec<Edge>>,
}

/// Root-to-λ paths as tableaux, ordered by shifted-content lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBasis {
    pub lambda: Partition,
    pub paths: Vec<Tableau>,
}

impl PathBasis {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

pub fn build_diagram(params: &HeckeParams) -> BratteliDiagram {
    build_truncated(params, None)
}

/// Diagram whose vertices have height at most `max_height`.
pub fn build_truncated(params: &HeckeParams, max_height: Option<usize>) -> BratteliDiagram {
    let mut levels = vec![vec![params.root()]];
    for i in 0..=params.k {
        levels.push(enum_pk_truncated(params, i, max_height));
    }
    let mut edges = Vec::with_capacity(params.k + 1);
    for r in 0..=params.k {
        let index: HashMap<&Partition, usize> =
            levels[r + 1].iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut seen = HashSet::new();
        let mut rank_edges = Vec::new();
        for (src, mu) in levels[r].iter().enumerate() {
            let targets: Vec<Partition> =
                if r == 0 { levels[1].clone() } else { add_box_set(mu, max_height) };
            for lam in targets {
                let dst = index[&lam];
                let label = if r == 0 {
                    gamma_rect(&lam, params).expect("rank-1 vertex lies in 𝒫")
                } else {
                    Rational::from_int(lam.added_box(mu).expect("one box added").content())
                };
                assert!(seen.insert((src, dst)), "duplicate edge {mu} -> {lam}");
                rank_edges.push(Edge { src, dst, label });
            }
        }
        edges.push(rank_edges);
    }
    BratteliDiagram { params: params.clone(), max_height, levels, edges }
}

impl BratteliDiagram {
    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    pub fn max_height(&self) -> Option<usize> {
        self.max_height
    }

    /// Number of ranks (k + 2).
    pub fn num_ranks(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, rank: usize) -> &[Partition] {
        &self.levels[rank]
    }

    pub fn levels(&self) -> &[Vec<Partition>] {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Edges from rank r to rank r + 1.
    pub fn edges(&self, rank: usize) -> &[Edge] {
        &self.edges[rank]
    }

    pub fn index_of(&self, lambda: &Partition, rank: usize) -> Result<usize> {
        self.levels
            .get(rank)
            .and_then(|l| l.iter().position(|p| p == lambda))
            .ok_or_else(|| Error::VertexNotFound { partition: lambda.clone(), rank })
    }

    /// Labels of edges leaving `lambda` at `rank`, in target order.
    pub fn outgoing_labels(&self, lambda: &Partition, rank: usize) -> Result<Vec<Rational>> {
        let src = self.index_of(lambda, rank)?;
        let edges = self.edges.get(rank).ok_or(Error::IndexOutOfRange {
            index: rank,
            max: self.edges.len().saturating_sub(1),
        })?;
        Ok(edges.iter().filter(|e| e.src == src).map(|e| e.label.clone()).collect())
    }

    /// All root-to-λ paths; paths start at rank 1, so `rank` ≥ 1.
    pub fn paths_to(&self, lambda: &Partition, rank: usize) -> Result<PathBasis> {
        if rank == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: self.num_ranks() - 1 });
        }
        let dst = self.index_of(lambda, rank)?;
        let mut out = Vec::new();
        let mut stack = vec![(rank, dst)];
        self.walk_back(&mut stack, &mut out);
        let params = self.params.with_k(rank - 1);
        let mut keyed: Vec<(Vec<Rational>, Tableau)> = out
            .into_iter()
            .map(|shapes| {
                let t = Tableau::new(shapes, &params).expect("diagram path is a tableau");
                let mut key = t.contents(&params);
                key.rotate_left(1);
                (key, t)
            })
            .collect();
        keyed.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(PathBasis { lambda: lambda.clone(), paths: keyed.into_iter().map(|(_, t)| t).collect() })
    }

    fn walk_back(&self, stack: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<Partition>>) {
        let (rank, idx) = *stack.last().expect("nonempty");
        if rank == 1 {
            let shapes = stack.iter().rev().map(|&(r, i)| self.levels[r][i].clone()).collect();
            out.push(shapes);
            return;
        }
        for e in self.edges[rank - 1].iter().filter(|e| e.dst == idx) {
            stack.push((rank - 1, e.src));
            self.walk_back(stack, out);
            stack.pop();
        }
    }

    /// Path counts per vertex at `rank`, in vertex order.
    pub fn dimension_vector(&self, rank: usize) -> Result<Vec<(Partition, u64)>> {
        if rank >= self.num_ranks() {
            return Err(Error::IndexOutOfRange { index: rank, max: self.num_ranks() - 1 });
        }
        let mut counts = vec![1u64];
        for r in 0..rank {
            let mut next = vec![0u64; self.levels[r + 1].len()];
            for e in &self.edges[r] {
                next[e.dst] += counts[e.src];
            }
            counts = next;
        }
        Ok(self.levels[rank].iter().cloned().zip(counts).collect())
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = DiagramJson {
            params: ParamsJson {
                a: self.params.a,
                b: self.params.b,
                p: self.params.p,
                q: self.params.q,
                k: self.params.k,
            },
            max_height: self.max_height,
            levels: self.levels.clone(),
            edges: self.edges.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: DiagramJson = serde_json::from_str(s)?;
        let p = doc.params;
        let params = HeckeParams::new(p.a, p.b, p.p, p.q, p.k)?;
        if params.swapped {
            return Err(Error::Parse("diagram parameters are not normalized".into()));
        }
        if doc.levels.len() != p.k + 2 || doc.edges.len() != p.k + 1 {
            return Err(Error::Parse("level/edge count does not match k".into()));
        }
        for (r, rank_edges) in doc.edges.iter().enumerate() {
            for e in rank_edges {
                if e.src >= doc.levels[r].len() || e.dst >= doc.levels[r + 1].len() {
                    return Err(Error::Parse(format!("edge index out of range at rank {r}")));
                }
            }
        }
        Ok(BratteliDiagram { params, max_height: doc.max_height, levels: doc.levels, edges: doc.edges })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (r, level) in self.levels.iter().enumerate() {
            let _ = writeln!(s, "  subgraph rank{r} {{\n    rank=same;");
            for (i, p) in level.iter().enumerate() {
                let _ = writeln!(s, "    r{r}_{i} [label=\"{p}\"];");
            }
            s.push_str("  }\n");
        }
        for (r, rank_edges) in self.edges.iter().enumerate() {
            for e in rank_edges {
                let _ = writeln!(s, "  r{r}_{} -> r{}_{} [label=\"{}\"];", e.src, r + 1, e.dst, e.label);
            }
        }
        s.push_str("}\n");
        s
    }
}

impl PartialEq for BratteliDiagram {
    fn eq(&self, other: &Self) -> bool {
        let key = |p: &HeckeParams| (p.a, p.b, p.p, p.q, p.k);
        key(&self.params) == key(&other.params)
            && self.max_height == other.max_height
            && self.levels == other.levels
            && self.edges == other.edges
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    a: usize,
    b: usize,
    p: usize,
    q: usize,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    params: ParamsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_height: Option<usize>,
    levels: Vec<Vec<Partition>>,
    edges: Vec<Vec<Edge>>,
}

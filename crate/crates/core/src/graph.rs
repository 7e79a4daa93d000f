//! Dense weighted graphs, degree analytics and closed-walk counts.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Square row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Clone> DenseMatrix<S> {
    pub fn filled(n: usize, value: S) -> Self {
        DenseMatrix {
            n,
            data: vec![value; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidParameter("matrix is not square".into()));
            }
            data.extend(row);
        }
        Ok(DenseMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(j, i)].clone();
            }
        }
        out
    }

    pub fn map<T, F: FnMut(&S) -> T>(&self, f: F) -> DenseMatrix<T> {
        DenseMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn identity(n: usize, ctx: &S::Context) -> Self {
        let mut m = DenseMatrix::filled(n, S::zero(ctx));
        for i in 0..n {
            m[(i, i)] = S::one(ctx);
        }
        m
    }

    pub fn mul_vec(&self, v: &[S], ctx: &S::Context) -> Vec<S> {
        (0..self.n)
            .map(|i| {
                let mut acc = S::zero(ctx);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() {
                        acc += &(a.clone() * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, other: &Self, ctx: &S::Context) -> Self {
        let n = self.n;
        let mut out = DenseMatrix::filled(n, S::zero(ctx));
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a.clone() * &other[(k, j)];
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sq(&self, ctx: &S::Context) -> S {
        let mut acc = S::zero(ctx);
        for x in &self.data {
            acc += &(x.clone() * x);
        }
        acc
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

/// Simple undirected graph with non-negative rational edge weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    weights: DenseMatrix<RBig>,
    weighted: bool,
}

impl Graph {
    /// Builds a graph from 0-based weighted edges.
    pub fn new(n: usize, edges: &[(usize, usize, RBig)]) -> Result<Graph> {
        let mut weights = DenseMatrix::filled(n, RBig::ZERO);
        for (u, v, w) in edges {
            let (u, v) = (*u, *v);
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if *w <= RBig::ZERO {
                return Err(Error::NonPositiveWeight(u, v));
            }
            if !weights[(u, v)].is_zero() {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            weights[(u, v)] = w.clone();
            weights[(v, u)] = w.clone();
        }
        let weighted = edges.iter().any(|(_, _, w)| *w != RBig::ONE);
        Ok(Graph { weights, weighted })
    }

    /// Builds a graph whose 0-based edges all have weight one.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, RBig::ONE)).collect();
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    /// True iff some edge weight differs from one.
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn weight(&self, u: usize, v: usize) -> &RBig {
        &self.weights[(u, v)]
    }

    pub fn weights(&self) -> &DenseMatrix<RBig> {
        &self.weights
    }

    /// Neighbours of `u` with the connecting weights.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = (usize, &RBig)> + '_ {
        self.weights
            .row(u)
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
    }

    /// Edges `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, RBig)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let w = &self.weights[(u, v)];
                if !w.is_zero() {
                    out.push((u, v, w.clone()));
                }
            }
        }
        out
    }

    /// Nodal strengths (row sums of the weight matrix).
    pub fn degrees(&self) -> Vec<RBig> {
        (0..self.n())
            .map(|u| {
                let mut acc = RBig::ZERO;
                for (_, w) in self.neighbors(u) {
                    acc += w;
                }
                acc
            })
            .collect()
    }

    pub fn adjacency<S: Scalar>(&self, ctx: &S::Context) -> DenseMatrix<S> {
        self.weights.map(|w| S::from_ratio(w, ctx))
    }

    /// `Q = Δ - A`.
    pub fn laplacian<S: Scalar>(&self, ctx: &S::Context) -> DenseMatrix<S> {
        self.perturbed_matrix(&RBig::from(-1), ctx)
    }

    /// `Δ + ζA`; `ζ = -1` is the Laplacian and `ζ = 1` the signless Laplacian.
    pub fn perturbed_matrix<S: Scalar>(&self, zeta: &RBig, ctx: &S::Context) -> DenseMatrix<S> {
        let degrees = self.degrees();
        let mut m = self.weights.map(|w| S::from_ratio(&(w * zeta), ctx));
        for (i, d) in degrees.iter().enumerate() {
            m[(i, i)] = S::from_ratio(d, ctx);
        }
        m
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self.degrees())
    }

    /// `(A^m)_qq` for `m = 0..=max_len`, by repeated products with `e_q`.
    pub fn closed_walk_counts(&self, q: usize, max_len: usize) -> Result<WalkCounts> {
        self.check_node(q)?;
        let mut v = vec![RBig::ZERO; self.n()];
        v[q] = RBig::ONE;
        let mut counts = Vec::with_capacity(max_len + 1);
        counts.push(RBig::ONE);
        for _ in 0..max_len {
            v = self.weights.mul_vec(&v, &());
            counts.push(v[q].clone());
        }
        Ok(WalkCounts { node: q, counts })
    }

    pub(crate) fn check_node(&self, q: usize) -> Result<()> {
        if q < self.n() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: q, n: self.n() })
        }
    }
}

/// Degrees, nodes of unique degree, and the degree-gap parameter κ.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<RBig>,
    /// Ascending node indices whose degree no other node shares.
    pub unique_nodes: Vec<usize>,
    /// `κ(q) = 1 / min_{k≠q} |d_q - d_k|` for unique nodes, `None` otherwise.
    /// A graph with a single node gets `κ = 0`.
    pub kappa: Vec<Option<RBig>>,
}

impl DegreeProfile {
    pub fn new(degrees: Vec<RBig>) -> Self {
        let n = degrees.len();
        let mut unique_nodes = Vec::new();
        let mut kappa = vec![None; n];
        for q in 0..n {
            let mut min_gap: Option<RBig> = None;
            let mut unique = true;
            for k in (0..n).filter(|&k| k != q) {
                let gap = abs(&(&degrees[q] - &degrees[k]));
                if gap.is_zero() {
                    unique = false;
                    break;
                }
                if min_gap.as_ref().is_none_or(|m| gap < *m) {
                    min_gap = Some(gap);
                }
            }
            if unique {
                unique_nodes.push(q);
                kappa[q] = Some(min_gap.map_or(RBig::ZERO, |g| RBig::ONE / g));
            }
        }
        DegreeProfile {
            degrees,
            unique_nodes,
            kappa,
        }
    }

    pub fn is_unique(&self, q: usize) -> bool {
        self.kappa.get(q).is_some_and(Option::is_some)
    }

    /// Unique-degree node with the largest degree.
    pub fn max_unique_degree_node(&self) -> Option<usize> {
        self.unique_nodes
            .iter()
            .copied()
            .max_by(|&a, &b| self.degrees[a].cmp(&self.degrees[b]))
    }
}

/// Closed-walk counts `(A^m)_qq`, `m = 0..=M`.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkCounts {
    pub node: usize,
    pub counts: Vec<RBig>,
}

impl WalkCounts {
    pub fn max_len(&self) -> usize {
        self.counts.len() - 1
    }
}

pub(crate) fn abs(x: &RBig) -> RBig {
    if *x < RBig::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

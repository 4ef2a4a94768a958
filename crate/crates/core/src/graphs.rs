//! Undirected multigraphs and their adjacency characteristic polynomials.
//!
//! `charpoly` is exact and division-free (Berkowitz). For trees the
//! leaf-deletion rule `chi(G) = T chi(G - a) - chi(G - a - b)`, where `a` is
//! a leaf with neighbor `b`, gives a second, independent route.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::IntPoly;
use crate::spectra;

/// Undirected graph with integer edge multiplicities and no loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Multigraph {
    adj: Vec<Vec<u32>>,
}

/// On-disk form: `{"n": 3, "edges": [[0, 1, 1], [1, 2, 1]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize, u32)>,
}

impl TryFrom<GraphFile> for Multigraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        let mut g = Multigraph::empty(file.n);
        for &(i, j, m) in &file.edges {
            if i >= j {
                return Err(Error::InvalidGraph(format!("edge [{i}, {j}] must satisfy i < j")));
            }
            if j >= file.n {
                return Err(Error::InvalidGraph(format!("vertex {j} out of range")));
            }
            if m == 0 {
                return Err(Error::InvalidGraph(format!("edge [{i}, {j}] has multiplicity 0")));
            }
            if g.adj[i][j] != 0 {
                return Err(Error::InvalidGraph(format!("edge [{i}, {j}] listed twice")));
            }
            g.add_edge(i, j, m);
        }
        Ok(g)
    }
}

impl From<Multigraph> for GraphFile {
    fn from(g: Multigraph) -> Self {
        GraphFile { n: g.vertex_count(), edges: g.edges() }
    }
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph { adj: vec![vec![0; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let file = GraphFile { n, edges: edges.iter().map(|&(i, j)| (i.min(j), i.max(j), 1)).collect() };
        Multigraph::try_from(file)
    }

    /// Adds `mult` parallel edges between distinct vertices `i` and `j`.
    pub fn add_edge(&mut self, i: usize, j: usize, mult: u32) {
        assert!(i != j, "loops are not allowed");
        self.adj[i][j] += mult;
        self.adj[j][i] += mult;
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.adj[i][j]
    }

    /// Edges `(i, j, mult)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adj[i][j] > 0)
            .map(|(i, j)| (i, j, self.adj[i][j]))
            .collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].iter().enumerate().filter(|(_, &m)| m > 0).map(|(j, _)| j)
    }

    /// Induced subgraph on the vertices not in `removed`, order preserved.
    pub fn remove_vertices(&self, removed: &[usize]) -> Multigraph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !removed.contains(v)).collect();
        Multigraph { adj: keep.iter().map(|&i| keep.iter().map(|&j| self.adj[i][j]).collect()).collect() }
    }

    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let (n, m) = (self.vertex_count(), other.vertex_count());
        let mut g = Multigraph::empty(n + m);
        for (i, j, k) in self.edges() {
            g.add_edge(i, j, k);
        }
        for (i, j, k) in other.edges() {
            g.add_edge(n + i, n + j, k);
        }
        g
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<BigInt>> {
        self.adj.iter().map(|row| row.iter().map(|&m| BigInt::from(m)).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("colored when queued");
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Connected, acyclic, and without multiple edges.
    pub fn is_simple_tree(&self) -> bool {
        let n = self.vertex_count();
        let edges = self.edges();
        n > 0 && edges.iter().all(|e| e.2 == 1) && edges.len() == n - 1 && self.is_connected()
    }

    fn is_simple_forest(&self) -> bool {
        let edges = self.edges();
        if edges.iter().any(|e| e.2 != 1) {
            return false;
        }
        // union-find cycle check
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, j, _) in edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

/// The path `A_n` on vertices `0..n`; `path(0)` is the empty graph.
pub fn path(n: usize) -> Multigraph {
    let mut g = Multigraph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i, 1);
    }
    g
}

/// The star `[p_1, ..., p_t]`: a center (vertex 0) with arms of `p_i - 1`
/// vertices, numbered outward arm by arm.
pub fn star(weights: &[u32]) -> Result<Multigraph> {
    if weights.is_empty() {
        return Err(Error::InvalidGraphSize { family: "star", size: 0 });
    }
    if weights.contains(&0) {
        return Err(Error::InvalidWeights("star weights must be >= 1".into()));
    }
    let n = 1 + weights.iter().map(|&p| p as usize - 1).sum::<usize>();
    let mut g = Multigraph::empty(n);
    let mut next = 1;
    for &p in weights {
        let mut prev = 0;
        for _ in 1..p {
            g.add_edge(prev, next, 1);
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Two vertices joined by `s` parallel edges.
pub fn kronecker_graph(s: u32) -> Result<Multigraph> {
    if s == 0 {
        return Err(Error::InvalidGraphSize { family: "K_s", size: 0 });
    }
    let mut g = Multigraph::empty(2);
    g.add_edge(0, 1, s);
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

impl std::str::FromStr for DynkinFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(DynkinFamily::A),
            "D" | "d" => Ok(DynkinFamily::D),
            "E" | "e" => Ok(DynkinFamily::E),
            _ => Err(Error::Parse(format!("unknown Dynkin family {s:?}"))),
        }
    }
}

/// `A_n` (n >= 1), `D_n` (n >= 4), `E_n` (n = 6, 7, 8).
pub fn dynkin(family: DynkinFamily, n: usize) -> Result<Multigraph> {
    match family {
        DynkinFamily::A if n >= 1 => Ok(path(n)),
        DynkinFamily::A => Err(Error::InvalidGraphSize { family: "A", size: n }),
        // vertices 1 and 2 both attached to 3, then a path 3 - ... - n
        DynkinFamily::D if n >= 4 => star(&[2, 2, n as u32 - 2]),
        DynkinFamily::D => Err(Error::InvalidGraphSize { family: "D", size: n }),
        // path 1 - 2 - 3 - 5 - ... - n with 4 hanging off 3
        DynkinFamily::E if (6..=8).contains(&n) => star(&[2, 3, n as u32 - 3]),
        DynkinFamily::E => Err(Error::InvalidGraphSize { family: "E", size: n }),
    }
}

/// `det(T I - M)` by the Berkowitz algorithm; no divisions.
pub fn matrix_charpoly(m: &[Vec<BigInt>]) -> IntPoly {
    let n = m.len();
    // descending coefficients of the trailing principal submatrix
    let mut poly = vec![BigInt::from(1)];
    for k in (0..n).rev() {
        let size = n - k - 1;
        // first column of the Toeplitz factor: 1, -a, -R C, -R A C, ...
        let mut col = vec![BigInt::from(1), -m[k][k].clone()];
        let mut vec_c: Vec<BigInt> = (k + 1..n).map(|i| m[i][k].clone()).collect();
        for _ in 0..size {
            let rc: BigInt = (k + 1..n).zip(&vec_c).map(|(j, c)| &m[k][j] * c).sum();
            col.push(-rc);
            vec_c = (k + 1..n).map(|i| (k + 1..n).zip(&vec_c).map(|(j, c)| &m[i][j] * c).sum()).collect();
        }
        let next: Vec<BigInt> =
            (0..size + 2).map(|i| (0..=i.min(size)).map(|j| &col[i - j] * &poly[j]).sum()).collect();
        poly = next;
    }
    poly.reverse();
    IntPoly::new(poly)
}

/// Characteristic polynomial of the adjacency matrix; `1` for the empty graph.
pub fn charpoly(g: &Multigraph) -> IntPoly {
    matrix_charpoly(&g.adjacency_matrix())
}

/// Evaluates a polynomial invariant of simple forests by repeated leaf
/// deletion: components multiply, an isolated vertex contributes
/// `isolated`, and a tree with leaf `a` adjacent to `b` combines the values
/// of `G - a` and `G - a - b` through `step`.
pub fn leaf_recursion<F>(g: &Multigraph, isolated: &IntPoly, step: F) -> Result<IntPoly>
where
    F: Fn(&IntPoly, &IntPoly) -> IntPoly,
{
    if !g.is_simple_forest() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut memo = HashMap::new();
    let all = VertexSet::full(n);
    Ok(LeafRecursion { adj: &adj, isolated, step: &step }.eval(&all, &mut memo))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        VertexSet(words)
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1u64 << (v % 64));
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1u64 << (v % 64);
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn empty_like(&self) -> Self {
        VertexSet(vec![0; self.0.len()])
    }
}

struct LeafRecursion<'a, F> {
    adj: &'a [Vec<usize>],
    isolated: &'a IntPoly,
    step: &'a F,
}

impl<F> LeafRecursion<'_, F>
where
    F: Fn(&IntPoly, &IntPoly) -> IntPoly,
{
    /// Breadth-first order of the component of `root` inside `set`.
    fn bfs(&self, set: &VertexSet, root: usize) -> Vec<usize> {
        let mut order = vec![root];
        let mut seen = set.empty_like();
        seen.insert(root);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &self.adj[v] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    order.push(w);
                }
            }
            i += 1;
        }
        order
    }

    fn eval(&self, set: &VertexSet, memo: &mut HashMap<VertexSet, IntPoly>) -> IntPoly {
        let Some(root) = set.first() else {
            return IntPoly::one();
        };
        if let Some(p) = memo.get(set) {
            return p.clone();
        }
        let order = self.bfs(set, root);
        let mut rest = set.clone();
        for &v in &order {
            rest.remove(v);
        }
        let result = if rest.first().is_some() {
            let mut comp = set.empty_like();
            for &v in &order {
                comp.insert(v);
            }
            &self.eval(&comp, memo) * &self.eval(&rest, memo)
        } else if order.len() == 1 {
            self.isolated.clone()
        } else {
            // the last vertex reached is at maximal depth, hence a leaf
            let a = *order.last().expect("nonempty");
            let b = *self.adj[a].iter().find(|&&w| set.contains(w)).expect("a leaf has a neighbor");
            let mut without_a = set.clone();
            without_a.remove(a);
            let mut without_ab = without_a.clone();
            without_ab.remove(b);
            let pa = self.eval(&without_a, memo);
            let pab = self.eval(&without_ab, memo);
            (self.step)(&pa, &pab)
        };
        memo.insert(set.clone(), result.clone());
        result
    }
}

/// Characteristic polynomial of a simple tree by leaf deletion.
pub fn tree_charpoly(g: &Multigraph) -> Result<IntPoly> {
    if !g.is_simple_tree() {
        return Err(Error::NotATree);
    }
    leaf_recursion(g, &IntPoly::t(), |pa, pab| &pa.shift(1) - pab)
}

/// Interval `[lo, hi]` of width at most `tol` containing the spectral radius.
pub fn graph_spectral_radius(g: &Multigraph, tol: &BigRational) -> Result<(BigRational, BigRational)> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if tol <= &BigRational::zero() {
        return Err(Error::NonPositiveTolerance);
    }
    let chi = charpoly(g);
    Ok(spectra::largest_real_root(&chi, tol)?.expect("a symmetric matrix has real eigenvalues"))
}

/// AHU encoding of a tree rooted at its center(s); equal for isomorphic trees.
pub fn tree_canonical_form(g: &Multigraph) -> String {
    let n = g.vertex_count();
    if n == 0 {
        return String::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).count()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(g: &Multigraph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> =
            g.neighbors(v).filter(|&w| Some(w) != parent).map(|w| encode(g, w, Some(v))).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(g, c, None)).min().expect("a tree has a center")
}

/// Every unlabeled tree on `n` vertices, one representative per class.
pub fn unlabeled_trees(n: usize) -> Vec<Multigraph> {
    match n {
        0 => Vec::new(),
        1 => vec![Multigraph::empty(1)],
        _ => {
            let mut classes = BTreeMap::new();
            for t in unlabeled_trees(n - 1) {
                for v in 0..n - 1 {
                    let mut g = t.disjoint_union(&Multigraph::empty(1));
                    g.add_edge(v, n - 1, 1);
                    classes.entry(tree_canonical_form(&g)).or_insert(g);
                }
            }
            classes.into_values().collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn is_isomorphic_by_form(a: &Multigraph, b: &Multigraph) -> bool {
        tree_canonical_form(a) == tree_canonical_form(b)
    }

    #[test]
    fn builders() {
        assert!(is_isomorphic_by_form(&path(3), &star(&[2, 2]).unwrap()));
        assert_eq!(path(3).edges(), vec![(0, 1, 1), (1, 2, 1)]);
        assert_eq!(star(&[2, 2]).unwrap().edges(), vec![(0, 1, 1), (0, 2, 1)]);
        let k2 = kronecker_graph(2).unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.multiplicity(0, 1), 2);
        let e8 = dynkin(DynkinFamily::E, 8).unwrap();
        assert_eq!(e8.vertex_count(), 8);
        assert!(e8.is_simple_tree());
        let branch: Vec<usize> = (0..8).filter(|&v| e8.neighbors(v).count() == 3).collect();
        assert_eq!(branch.len(), 1);
        assert_eq!(star(&[1, 1, 1]).unwrap().vertex_count(), 1);
        assert_eq!(star(&[2, 3, 7]).unwrap().vertex_count(), 10);
    }

    #[test]
    fn builder_errors() {
        assert!(dynkin(DynkinFamily::A, 0).is_err());
        assert!(dynkin(DynkinFamily::D, 3).is_err());
        assert!(dynkin(DynkinFamily::E, 9).is_err());
        assert!(kronecker_graph(0).is_err());
        assert!(star(&[]).is_err());
        assert!(star(&[0, 2]).is_err());
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(&kronecker_graph(2).unwrap()), p(&[-4, 0, 1]));
        assert_eq!(charpoly(&path(3)), p(&[0, -2, 0, 1]));
        assert_eq!(charpoly(&path(1)), p(&[0, 1]));
        assert_eq!(charpoly(&Multigraph::empty(0)), IntPoly::one());
        // triangle: (T-2)(T+1)^2
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(charpoly(&tri), p(&[-2, 1]) * p(&[1, 1]).pow(2));
    }

    #[test]
    fn berkowitz_on_general_matrix() {
        // [[2, 1], [3, 4]]: T^2 - 6T + 5
        let m = vec![vec![BigInt::from(2), BigInt::from(1)], vec![BigInt::from(3), BigInt::from(4)]];
        assert_eq!(matrix_charpoly(&m), p(&[5, -6, 1]));
        // diag(1, 2, 3) with a nonzero upper triangle
        let m: Vec<Vec<BigInt>> = [[1, 5, 7], [0, 2, 9], [0, 0, 3]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(matrix_charpoly(&m), p(&[-1, 1]) * p(&[-2, 1]) * p(&[-3, 1]));
    }

    #[test]
    fn tree_charpoly_examples() {
        assert_eq!(tree_charpoly(&star(&[1, 1, 1, 2]).unwrap()).unwrap(), p(&[-1, 0, 1]));
        for n in 1..=100 {
            assert_eq!(tree_charpoly(&path(n)).unwrap(), chebyshev::u(n), "n = {n}");
        }
        assert_eq!(tree_charpoly(&star(&[2, 3, 7]).unwrap()).unwrap().degree(), Some(10));
        assert_eq!(tree_charpoly(&kronecker_graph(2).unwrap()), Err(Error::NotATree));
        let cycle = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tree_charpoly(&cycle), Err(Error::NotATree));
        assert_eq!(tree_charpoly(&Multigraph::empty(2)), Err(Error::NotATree));
    }

    #[test]
    fn predicates() {
        assert!(star(&[2, 3, 7]).unwrap().is_bipartite());
        let k2 = kronecker_graph(2).unwrap();
        assert!(k2.is_bipartite() && k2.is_connected());
        assert!(!Multigraph::empty(2).is_connected());
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite());
    }

    #[test]
    fn spectral_radius_examples() {
        let tol = rat(1, 1 << 20);
        let (lo, hi) = graph_spectral_radius(&path(2), &tol).unwrap();
        assert!(lo <= rat(1, 1) && rat(1, 1) <= hi && &hi - &lo <= tol);
        let (lo, hi) = graph_spectral_radius(&kronecker_graph(2).unwrap(), &tol).unwrap();
        assert!(lo <= rat(2, 1) && rat(2, 1) <= hi);
        let (lo, hi) = graph_spectral_radius(&star(&[2, 3, 7]).unwrap(), &tol).unwrap();
        assert!(lo > rat(2, 1) && hi < rat(21, 10));
        assert_eq!(graph_spectral_radius(&Multigraph::empty(2), &tol), Err(Error::Disconnected));
        assert_eq!(graph_spectral_radius(&path(3), &rat(0, 1)), Err(Error::NonPositiveTolerance));
    }

    #[test]
    fn unlabeled_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn charpoly_and_leaf_deletion_agree_on_small_trees() {
        for n in 1..=10 {
            for t in unlabeled_trees(n) {
                let chi = charpoly(&t);
                assert_eq!(tree_charpoly(&t).unwrap(), chi);
                let sf = chi.squarefree_part().unwrap();
                assert_eq!(
                    spectra::count_all_real_roots(&sf).unwrap(),
                    sf.degree().unwrap(),
                    "all eigenvalues are real"
                );
            }
        }
    }

    #[test]
    fn bipartite_charpoly_has_parity() {
        for n in 1..=9 {
            for t in unlabeled_trees(n) {
                let chi = charpoly(&t);
                for (i, c) in chi.coeffs().iter().enumerate() {
                    if (i + n) % 2 == 1 {
                        assert!(c.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn graph_file_round_trip_and_validation() {
        let g = path(3);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1,1],[1,2,1]]}"#);
        assert_eq!(serde_json::from_str::<Multigraph>(&text).unwrap(), g);
        assert!(serde_json::from_str::<Multigraph>(r#"{"n":2,"edges":[[1,0,1]]}"#).is_err());
        assert!(serde_json::from_str::<Multigraph>(r#"{"n":2,"edges":[[0,2,1]]}"#).is_err());
        assert!(serde_json::from_str::<Multigraph>(r#"{"n":2,"edges":[[0,1,0]]}"#).is_err());
        let k3: Multigraph = serde_json::from_str(r#"{"n":2,"edges":[[0,1,3]]}"#).unwrap();
        assert_eq!(charpoly(&k3), p(&[-9, 0, 1]));
    }

    fn random_tree() -> impl Strategy<Value = Multigraph> {
        (2usize..16).prop_flat_map(|n| prop::collection::vec(any::<prop::sample::Index>(), n - 1)).prop_map(
            |parents| {
                let n = parents.len() + 1;
                let mut g = Multigraph::empty(n);
                for (k, idx) in parents.iter().enumerate() {
                    let child = k + 1;
                    g.add_edge(idx.index(child), child, 1);
                }
                g
            },
        )
    }

    proptest! {
        #[test]
        fn leaf_deletion_holds_for_charpoly(t in random_tree()) {
            let n = t.vertex_count();
            let a = (0..n).find(|&v| t.neighbors(v).count() == 1).unwrap();
            let b = t.neighbors(a).next().unwrap();
            let lhs = charpoly(&t);
            let rhs = &charpoly(&t.remove_vertices(&[a])).shift(1)
                - &charpoly(&t.remove_vertices(&[a, b]));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(tree_charpoly(&t).unwrap(), lhs);
        }
    }
}

//! Directed multigraphs with labeled edges, their incidence row spaces, and
//! composition of graphs through shared edges.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use vspace::{Field, GroundSet, Label, SpaceError, VSpace};

mod format;

pub use format::{parse_graph, write_graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("shared edges do not form the same subgraph: {0}")]
    SharedMismatch(String),
    #[error("shared subgraph is disconnected; compose the row spaces instead")]
    Disconnected,
    #[error("vertex `{0}` of the right graph clashes with a left vertex")]
    VertexClash(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: Label,
    pub tail: usize,
    pub head: usize,
}

/// Directed multigraph. Self-loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    labels: GroundSet,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: &[(&str, &str, &str)]) -> Result<Graph, GraphError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let find = |v: &str| index.get(v).copied().ok_or_else(|| GraphError::UnknownVertex(v.to_string()));
        let mut list = Vec::with_capacity(edges.len());
        for (l, t, h) in edges {
            list.push(Edge { label: Label::new(*l)?, tail: find(t)?, head: find(h)? });
        }
        let labels = GroundSet::new(list.iter().map(|e| e.label.clone()).collect())?;
        Ok(Graph { vertices, edges: list, labels })
    }

    /// Vertices are taken from the edges in order of first appearance.
    pub fn from_edges(edges: &[(&str, &str, &str)]) -> Result<Graph, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        for (_, t, h) in edges {
            for v in [t, h] {
                if !vertices.iter().any(|x| x == v) {
                    vertices.push(v.to_string());
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_labels(&self) -> &GroundSet {
        &self.labels
    }

    pub fn edge(&self, l: &Label) -> Option<&Edge> {
        self.labels.position(l).map(|i| &self.edges[i])
    }

    fn components(&self, using: impl Fn(&Edge) -> bool) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in self.edges.iter().filter(|e| using(e)) {
            uf.union(e.tail, e.head);
        }
        uf
    }

    pub fn component_count(&self) -> usize {
        let uf = self.components(|_| true);
        let mut roots: Vec<usize> = (0..self.vertices.len()).map(|v| uf.find(v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Row space of the incidence matrix over the rationals: `+1` where an
    /// edge leaves a vertex, `-1` where it enters.
    pub fn incidence_space(&self) -> VSpace {
        let f = Field::Rational;
        let rows: Vec<Vec<i64>> = (0..self.vertices.len())
            .map(|v| {
                self.edges
                    .iter()
                    .map(|e| match (e.tail == v, e.head == v) {
                        (true, false) => 1,
                        (false, true) => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        VSpace::from_ints(f, self.labels.clone(), &refs).expect("one entry per edge")
    }

    fn check(&self, t: &GroundSet) -> Result<(), GraphError> {
        match t.iter().find(|l| !self.labels.contains(l)) {
            Some(l) => Err(SpaceError::UnknownLabel(l.to_string()).into()),
            None => Ok(()),
        }
    }

    /// Rebuilds the graph from the kept edges with vertices renamed by
    /// `class`; vertices touching no kept edge are dropped.
    fn rebuild(&self, keep: impl Fn(&Edge) -> bool, class: impl Fn(usize) -> usize) -> Graph {
        let kept: Vec<&Edge> = self.edges.iter().filter(|e| keep(e)).collect();
        let mut used = vec![false; self.vertices.len()];
        for e in &kept {
            used[class(e.tail)] = true;
            used[class(e.head)] = true;
        }
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for v in (0..self.vertices.len()).filter(|&v| used[v]) {
            new_index[v] = vertices.len();
            vertices.push(self.vertices[v].clone());
        }
        let edges: Vec<Edge> = kept
            .iter()
            .map(|e| Edge { label: e.label.clone(), tail: new_index[class(e.tail)], head: new_index[class(e.head)] })
            .collect();
        let labels = GroundSet::new(edges.iter().map(|e| e.label.clone()).collect()).expect("subset of labels");
        Graph { vertices, edges, labels }
    }

    /// Open-circuits the edges in `t`.
    pub fn delete_edges(&self, t: &GroundSet) -> Result<Graph, GraphError> {
        self.check(t)?;
        Ok(self.rebuild(|e| !t.contains(&e.label), |v| v))
    }

    /// Short-circuits the edges in `t`: their end vertices are fused into the
    /// earliest vertex of each class.
    pub fn contract_edges(&self, t: &GroundSet) -> Result<Graph, GraphError> {
        self.check(t)?;
        let uf = self.components(|e| t.contains(&e.label));
        let mut rep: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.vertices.len() {
            rep.entry(uf.find(v)).or_insert(v);
        }
        Ok(self.rebuild(|e| !t.contains(&e.label), |v| rep[&uf.find(v)]))
    }

    /// `G ∘ X`.
    pub fn restrict(&self, x: &GroundSet) -> Result<Graph, GraphError> {
        self.check(x)?;
        self.delete_edges(&self.labels.minus(x))
    }

    /// `G × X`.
    pub fn contract(&self, x: &GroundSet) -> Result<Graph, GraphError> {
        self.check(x)?;
        self.contract_edges(&self.labels.minus(x))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

/// `V(G_SP) ↔ V(G_PQ)`; no graph is reconstructed.
pub fn compose_space(g_sp: &Graph, g_pq: &Graph) -> Result<VSpace, GraphError> {
    Ok(g_sp.incidence_space().matched_compose(&g_pq.incidence_space())?)
}

/// Overlays the two graphs on their shared edges and deletes those edges.
///
/// `vertex_map` sends each right vertex touched by a shared edge to the left
/// vertex it is identified with. The shared subgraph must be connected; other
/// right vertices keep their names and must not clash with left vertices.
pub fn overlay_compose(
    g_sp: &Graph,
    g_pq: &Graph,
    vertex_map: &HashMap<String, String>,
) -> Result<Graph, GraphError> {
    let p = g_sp.edge_labels().intersection(g_pq.edge_labels());
    let left_p = g_sp.restrict(&p)?;
    let right_p = g_pq.restrict(&p)?;

    let mut shared = HashMap::new();
    for v in right_p.vertices() {
        let to = vertex_map.get(v).ok_or_else(|| GraphError::SharedMismatch(format!("vertex `{v}` is unmapped")))?;
        if !left_p.vertices().contains(to) {
            return Err(GraphError::SharedMismatch(format!("`{v}` maps to `{to}`, not a shared vertex")));
        }
        shared.insert(v.clone(), to.clone());
    }
    if shared.len() != left_p.vertices().len() {
        return Err(GraphError::SharedMismatch("vertex map is not onto the left shared vertices".into()));
    }
    for l in p.iter() {
        let (a, b) = (left_p.edge(l).expect("shared"), right_p.edge(l).expect("shared"));
        let (rt, rh) = (&right_p.vertices[b.tail], &right_p.vertices[b.head]);
        if shared[rt] != left_p.vertices[a.tail] || shared[rh] != left_p.vertices[a.head] {
            return Err(GraphError::SharedMismatch(format!("edge `{l}` has different ends")));
        }
    }
    if !left_p.is_connected() {
        return Err(GraphError::Disconnected);
    }

    let mut vertices = g_sp.vertices().to_vec();
    let mut rename: HashMap<&str, String> = HashMap::new();
    for v in g_pq.vertices() {
        match shared.get(v) {
            Some(to) => {
                rename.insert(v, to.clone());
            }
            None => {
                if vertices.contains(v) {
                    return Err(GraphError::VertexClash(v.clone()));
                }
                vertices.push(v.clone());
                rename.insert(v, v.clone());
            }
        }
    }
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for e in g_sp.edges().iter().filter(|e| !p.contains(&e.label)) {
        edges.push((e.label.to_string(), g_sp.vertices[e.tail].clone(), g_sp.vertices[e.head].clone()));
    }
    for e in g_pq.edges().iter().filter(|e| !p.contains(&e.label)) {
        let (t, h) = (&g_pq.vertices[e.tail], &g_pq.vertices[e.head]);
        edges.push((e.label.to_string(), rename[t.as_str()].clone(), rename[h.as_str()].clone()));
    }
    let refs: Vec<(&str, &str, &str)> = edges.iter().map(|(l, t, h)| (l.as_str(), t.as_str(), h.as_str())).collect();
    let g = Graph::new(vertices, &refs)?;
    debug_assert!(g.incidence_space().same_space(&compose_space(g_sp, g_pq)?));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(&[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")]).unwrap()
    }

    #[test]
    fn single_edge_has_rank_one() {
        let g = Graph::from_edges(&[("e", "a", "b")]).unwrap();
        assert_eq!(g.incidence_space().rank(), 1);
    }

    #[test]
    fn self_loop_is_zero_column() {
        let g = Graph::from_edges(&[("e", "a", "a")]).unwrap();
        assert_eq!(g.incidence_space().rank(), 0);
        let c = g.contract_edges(&GroundSet::of(&["e"])).unwrap();
        let d = g.delete_edges(&GroundSet::of(&["e"])).unwrap();
        assert_eq!(c, d);
        assert!(c.vertices().is_empty());
    }

    #[test]
    fn triangle_rank_and_contraction() {
        let g = triangle();
        assert_eq!(g.incidence_space().rank(), 2);
        let c = g.contract_edges(&GroundSet::of(&["x"])).unwrap();
        assert_eq!(c.vertices().len(), 2);
        assert_eq!(c.edges().len(), 2);
        let yz = GroundSet::of(&["y", "z"]);
        assert_eq!(c.incidence_space(), g.incidence_space().contract(&yz).unwrap());
    }

    #[test]
    fn delete_everything() {
        let g = triangle();
        let e = g.delete_edges(g.edge_labels()).unwrap();
        assert!(e.vertices().is_empty() && e.edges().is_empty());
    }
}

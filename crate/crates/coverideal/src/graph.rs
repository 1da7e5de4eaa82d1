//! Labeled simple graphs and the vertex-cover machinery built on them:
//! neighborhoods, induced and deleted subgraphs, maximal independent sets,
//! minimal vertex covers, structural classification, and the paired
//! cover/independent labelings of very well-covered graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Hard cap on vertex count; adjacency lives in `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Vertex count cap for the labeling searches; the search space over
/// (cover, matching, ordering) grows factorially.
pub const MAX_LABELING_VERTICES: usize = 24;

/// A labeled simple graph. Vertex order is construction order and fixes
/// every deterministic ordering produced by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

/// Structural flags computed by [`Graph::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GraphClasses {
    pub has_isolated: bool,
    pub bipartite: bool,
    pub claw_free: bool,
    pub unmixed: bool,
    pub very_well_covered: bool,
}

/// A labeling of a very well-covered graph into `h` (cover vertex,
/// independent vertex) pairs: the cover vertices form a minimal vertex
/// cover, the independent vertices a maximal independent set, and each
/// pair is an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VwcLabeling {
    pairs: Vec<(String, String)>,
}

impl VwcLabeling {
    pub fn h(&self) -> usize {
        self.pairs.len()
    }

    /// The (cover vertex, independent vertex) pairs in label order.
    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }
}

impl Graph {
    pub fn new<S, T>(vertices: Vec<S>, edge_list: &[(T, T)]) -> Result<Graph>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::SizeCap { what: "vertex count", limit: MAX_VERTICES });
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut adj = vec![0u64; vertices.len()];
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if i == j {
                return Err(Error::LoopEdge(a.to_string()));
            }
            let (i, j) = (i.min(j), i.max(j));
            if adj[i] >> j & 1 == 1 {
                return Err(Error::DuplicateEdge(vertices[i].clone(), vertices[j].clone()));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            edges.push((i, j));
        }
        edges.sort_unstable();
        Ok(Graph { vertices, index, adj, edges })
    }

    /// Path x1 - x2 - ... - xn.
    pub fn path(n: usize) -> Graph {
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<(String, String)> =
            (1..n).map(|i| (format!("x{i}"), format!("x{}", i + 1))).collect();
        Graph::new(vertices, &edges).expect("path is a valid graph")
    }

    /// Cycle x1 - x2 - ... - xn - x1 (n >= 3).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut edges: Vec<(String, String)> =
            (1..n).map(|i| (format!("x{i}"), format!("x{}", i + 1))).collect();
        edges.push(("x1".into(), format!("x{n}")));
        Graph::new(vertices, &edges).expect("cycle is a valid graph")
    }

    /// Complete graph on x1..xn.
    pub fn complete(n: usize) -> Graph {
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((format!("x{i}"), format!("x{j}")));
            }
        }
        Graph::new(vertices, &edges).expect("complete graph is valid")
    }

    /// Complete bipartite graph on parts x1..xa and y1..yb.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut vertices: Vec<String> = (1..=a).map(|i| format!("x{i}")).collect();
        vertices.extend((1..=b).map(|j| format!("y{j}")));
        let mut edges = Vec::new();
        for i in 1..=a {
            for j in 1..=b {
                edges.push((format!("x{i}"), format!("y{j}")));
            }
        }
        Graph::new(vertices, &edges).expect("complete bipartite graph is valid")
    }

    /// Graph on x1..xn with no edges.
    pub fn edgeless(n: usize) -> Graph {
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::new(vertices, &[] as &[(&str, &str)]).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Edges as index pairs (i < j), sorted.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as name pairs in deterministic order.
    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(i, j)| (self.vertices[i].clone(), self.vertices[j].clone()))
            .collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i] >> j & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    /// Open neighborhood as a bitmask.
    pub fn neighbors_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    /// Open neighborhood as ascending vertex indices.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        mask_to_indices(self.adj[i])
    }

    fn full_mask(&self) -> u64 {
        if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        }
    }

    fn names_to_mask<T: AsRef<str>>(&self, names: &[T]) -> Result<u64> {
        let mut mask = 0u64;
        for name in names {
            mask |= 1 << self.vertex_index(name.as_ref())?;
        }
        Ok(mask)
    }

    fn mask_to_names(&self, mask: u64) -> Vec<String> {
        mask_to_indices(mask).into_iter().map(|i| self.vertices[i].clone()).collect()
    }

    fn is_independent_mask(&self, mask: u64) -> bool {
        mask_to_indices(mask).iter().all(|&i| self.adj[i] & mask == 0)
    }

    /// Induced subgraph on the vertex set `w`; vertex order inherited.
    pub fn induced_subgraph<T: AsRef<str>>(&self, w: &[T]) -> Result<Graph> {
        let mask = self.names_to_mask(w)?;
        Ok(self.induced_subgraph_mask(mask))
    }

    fn induced_subgraph_mask(&self, mask: u64) -> Graph {
        let keep = mask_to_indices(mask);
        let vertices: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut edges = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    edges.push((vertices[a].clone(), vertices[b].clone()));
                }
            }
        }
        Graph::new(vertices, &edges).expect("induced subgraph of a valid graph is valid")
    }

    /// Removes the closed neighborhood of the independent set `f`,
    /// together with every incident edge.
    pub fn delete_closed_neighborhood<T: AsRef<str>>(&self, f: &[T]) -> Result<Graph> {
        let fmask = self.names_to_mask(f)?;
        if !self.is_independent_mask(fmask) {
            return Err(Error::NotIndependent(self.mask_to_names(fmask)));
        }
        let mut closed = fmask;
        for i in mask_to_indices(fmask) {
            closed |= self.adj[i];
        }
        Ok(self.induced_subgraph_mask(self.full_mask() & !closed))
    }

    /// All maximal independent sets, each ascending in vertex order, the
    /// list sorted lexicographically. Uses pivoting Bron-Kerbosch on the
    /// complement; agrees with the exhaustive oracle (see tests).
    pub fn maximal_independent_sets(&self) -> Vec<Vec<String>> {
        self.maximal_independent_set_masks()
            .into_iter()
            .map(|m| self.mask_to_names(m))
            .collect()
    }

    pub(crate) fn maximal_independent_set_masks(&self) -> Vec<u64> {
        let n = self.vertices.len();
        let full = self.full_mask();
        // maximal independent sets of G = maximal cliques of the complement
        let co_adj: Vec<u64> =
            (0..n).map(|i| full & !self.adj[i] & !(1u64 << i)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&co_adj, 0, full, 0, &mut out);
        let mut keyed: Vec<(Vec<usize>, u64)> =
            out.into_iter().map(|m| (mask_to_indices(m), m)).collect();
        keyed.sort();
        keyed.into_iter().map(|(_, m)| m).collect()
    }

    /// Minimal vertex covers: exactly the complements of
    /// [`Graph::maximal_independent_sets`], in the same order.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<String>> {
        self.minimal_vertex_cover_masks()
            .into_iter()
            .map(|m| self.mask_to_names(m))
            .collect()
    }

    pub(crate) fn minimal_vertex_cover_masks(&self) -> Vec<u64> {
        let full = self.full_mask();
        self.maximal_independent_set_masks().into_iter().map(|m| full & !m).collect()
    }

    pub fn classify(&self) -> GraphClasses {
        let n = self.vertices.len();
        let has_isolated = (0..n).any(|i| self.adj[i] == 0);
        let mis = self.maximal_independent_set_masks();
        let sizes: Vec<u32> = mis.iter().map(|m| m.count_ones()).collect();
        let unmixed = sizes.windows(2).all(|w| w[0] == w[1]);
        let very_well_covered = !has_isolated
            && n % 2 == 0
            && sizes.iter().all(|&s| s as usize == n / 2);
        GraphClasses {
            has_isolated,
            bipartite: self.is_bipartite(),
            claw_free: self.is_claw_free(),
            unmixed,
            very_well_covered,
        }
    }

    fn is_bipartite(&self) -> bool {
        let n = self.vertices.len();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in mask_to_indices(self.adj[v]) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn is_claw_free(&self) -> bool {
        let n = self.vertices.len();
        for c in 0..n {
            let nb = mask_to_indices(self.adj[c]);
            for (a, &i) in nb.iter().enumerate() {
                for (b, &j) in nb.iter().enumerate().skip(a + 1) {
                    if self.has_edge(i, j) {
                        continue;
                    }
                    for &k in nb.iter().skip(b + 1) {
                        if !self.has_edge(i, k) && !self.has_edge(j, k) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Finds a (cover, independent) pair labeling of a very well-covered
    /// graph; `None` when the graph is not very well-covered. The search
    /// runs over minimal covers in lexicographic order, then over pair
    /// matchings, and returns the first labeling passing the adjacency
    /// compatibility conditions.
    pub fn find_vwc_labeling(&self) -> Result<Option<VwcLabeling>> {
        self.search_labeling(false)
    }

    /// As [`Graph::find_vwc_labeling`], additionally requiring an ordering
    /// of the pairs in which every edge from a cover vertex to an
    /// independent vertex points forward (cover index <= independent
    /// index). Such an ordering exists precisely for Cohen-Macaulay very
    /// well-covered graphs.
    pub fn find_cm_vwc_labeling(&self) -> Result<Option<VwcLabeling>> {
        self.search_labeling(true)
    }

    fn search_labeling(&self, require_order: bool) -> Result<Option<VwcLabeling>> {
        let n = self.vertices.len();
        if n > MAX_LABELING_VERTICES {
            return Err(Error::SizeCap { what: "labeling search", limit: MAX_LABELING_VERTICES });
        }
        if !self.classify().very_well_covered {
            return Ok(None);
        }
        let mut covers: Vec<Vec<usize>> = self
            .minimal_vertex_cover_masks()
            .into_iter()
            .map(mask_to_indices)
            .collect();
        covers.sort();
        for cover in covers {
            let cover_mask: u64 = cover.iter().map(|&i| 1u64 << i).sum();
            let ind_mask = self.full_mask() & !cover_mask;
            let mut matched = vec![usize::MAX; cover.len()];
            let mut used = 0u64;
            if let Some(pairs) =
                self.match_pairs(&cover, ind_mask, 0, &mut matched, &mut used, require_order)
            {
                return Ok(Some(VwcLabeling {
                    pairs: pairs
                        .into_iter()
                        .map(|(x, y)| (self.vertices[x].clone(), self.vertices[y].clone()))
                        .collect(),
                }));
            }
        }
        Ok(None)
    }

    /// Backtracks over perfect matchings (cover vertex, independent
    /// neighbor), lexicographically, and returns the first one passing the
    /// compatibility (and, if requested, ordering) checks.
    fn match_pairs(
        &self,
        cover: &[usize],
        ind_mask: u64,
        pos: usize,
        matched: &mut Vec<usize>,
        used: &mut u64,
        require_order: bool,
    ) -> Option<Vec<(usize, usize)>> {
        if pos == cover.len() {
            let pairs: Vec<(usize, usize)> =
                cover.iter().copied().zip(matched.iter().copied()).collect();
            if !self.pairs_compatible(&pairs) {
                return None;
            }
            if require_order {
                return self.order_pairs(&pairs);
            }
            return Some(pairs);
        }
        let candidates = self.adj[cover[pos]] & ind_mask & !*used;
        for y in mask_to_indices(candidates) {
            matched[pos] = y;
            *used |= 1 << y;
            if let Some(result) =
                self.match_pairs(cover, ind_mask, pos + 1, matched, used, require_order)
            {
                return Some(result);
            }
            *used &= !(1 << y);
            matched[pos] = usize::MAX;
        }
        None
    }

    /// Conditions on an (unordered) pairing {(x_i, y_i)}:
    /// for distinct i, j, k and z_i in {x_i, y_i}: if {z_i, x_j} and
    /// {y_j, x_k} are edges then so is {z_i, x_k}; and for i != j, an edge
    /// {x_i, y_j} excludes the edge {x_i, x_j}.
    fn pairs_compatible(&self, pairs: &[(usize, usize)]) -> bool {
        let h = pairs.len();
        for i in 0..h {
            for j in 0..h {
                if i == j {
                    continue;
                }
                let (xi, yi) = pairs[i];
                let (xj, yj) = pairs[j];
                if self.has_edge(xi, yj) && self.has_edge(xi, xj) {
                    return false;
                }
                for k in 0..h {
                    if k == i || k == j {
                        continue;
                    }
                    let xk = pairs[k].0;
                    for zi in [xi, yi] {
                        if self.has_edge(zi, xj)
                            && self.has_edge(yj, xk)
                            && !self.has_edge(zi, xk)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Orders pairs so that every cross edge {x_a, y_b} has a before-or-at
    /// b; returns None when the constraint digraph has a cycle.
    fn order_pairs(&self, pairs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
        let h = pairs.len();
        let mut succ = vec![Vec::new(); h];
        let mut indeg = vec![0usize; h];
        for a in 0..h {
            for b in 0..h {
                if a != b && self.has_edge(pairs[a].0, pairs[b].1) {
                    succ[a].push(b);
                    indeg[b] += 1;
                }
            }
        }
        let mut order = Vec::with_capacity(h);
        let mut placed = vec![false; h];
        for _ in 0..h {
            // smallest available pair keeps the result deterministic
            let next = (0..h).find(|&p| !placed[p] && indeg[p] == 0)?;
            placed[next] = true;
            order.push(pairs[next]);
            for &b in &succ[next] {
                indeg[b] -= 1;
            }
        }
        Some(order)
    }

    /// Checks that a labeling satisfies the full set of very well-covered
    /// labeling conditions (and the ordering condition when `require_order`
    /// is set). Intended for validating search output.
    pub fn is_valid_vwc_labeling(&self, labeling: &VwcLabeling, require_order: bool) -> bool {
        let n = self.vertices.len();
        if labeling.h() * 2 != n {
            return false;
        }
        let mut pairs = Vec::new();
        for (x, y) in labeling.pairs() {
            match (self.vertex_index(x), self.vertex_index(y)) {
                (Ok(i), Ok(j)) => pairs.push((i, j)),
                _ => return false,
            }
        }
        let cover_mask: u64 = pairs.iter().map(|&(x, _)| 1u64 << x).sum();
        let ind_mask: u64 = pairs.iter().map(|&(_, y)| 1u64 << y).sum();
        if cover_mask.count_ones() as usize != labeling.h()
            || ind_mask.count_ones() as usize != labeling.h()
            || cover_mask & ind_mask != 0
        {
            return false;
        }
        // cover side covers every edge minimally, independent side is independent
        let is_cover = self.edges.iter().all(|&(i, j)| cover_mask >> i & 1 == 1 || cover_mask >> j & 1 == 1);
        let minimal = mask_to_indices(cover_mask).into_iter().all(|v| {
            let reduced = cover_mask & !(1 << v);
            self.edges.iter().any(|&(i, j)| reduced >> i & 1 == 0 && reduced >> j & 1 == 0)
        });
        if !is_cover || !minimal || !self.is_independent_mask(ind_mask) {
            return false;
        }
        if !pairs.iter().all(|&(x, y)| self.has_edge(x, y)) {
            return false;
        }
        if !self.pairs_compatible(&pairs) {
            return false;
        }
        if require_order {
            for a in 0..pairs.len() {
                for b in 0..pairs.len() {
                    if self.has_edge(pairs[a].0, pairs[b].1) && a > b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical text form: vertex names sorted, then edges as sorted name
    /// pairs, themselves sorted. Used for caching and report identity.
    pub fn canonical_string(&self) -> String {
        let mut names: Vec<&str> = self.vertices.iter().map(|s| s.as_str()).collect();
        names.sort_unstable();
        let mut edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.vertices[i].as_str(), self.vertices[j].as_str());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        let edge_part: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        format!("{};{}", names.join(","), edge_part.join(","))
    }
}

pub(crate) fn mask_to_indices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out.push(i);
        mask &= mask - 1;
    }
    out
}

/// Maximal cliques of the graph given by adjacency masks, with pivoting.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = mask_to_indices(p | x)
        .into_iter()
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p | x nonempty");
    for v in mask_to_indices(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

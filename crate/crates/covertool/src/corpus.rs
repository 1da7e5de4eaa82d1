//! Exhaustive labeled-graph corpora on up to 7 vertices, with optional
//! isolated-vertex filtering and isomorphism-class deduplication by
//! brute-force canonical form.

use anyhow::{bail, Result};
use coverideal::Graph;

pub const MAX_CORPUS_N: usize = 7;

/// All labeled graphs on exactly n = 1..=nmax vertices (x1..xn), streamed
/// in deterministic order: n ascending, then the edge bitmask ascending
/// over pairs (i, j), i < j, in lexicographic order.
///
/// With `dedup`, only graphs that are the lexicographically least relabeling
/// of their isomorphism class are emitted.
pub fn generate_corpus(
    nmax: usize,
    no_isolated: bool,
    dedup: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if nmax > MAX_CORPUS_N {
        bail!("corpus generation supports at most {MAX_CORPUS_N} vertices, got {nmax}");
    }
    Ok((1..=nmax).flat_map(move |n| {
        let pairs = index_pairs(n);
        let total = 1u32 << pairs.len();
        (0..total).filter_map(move |mask| {
            if no_isolated && !covers_all_vertices(n, &pairs, mask) {
                return None;
            }
            if dedup && canonical_mask(n, &pairs, mask) != mask {
                return None;
            }
            Some(build(n, &pairs, mask))
        })
    }))
}

fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn covers_all_vertices(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut touched = vec![false; n];
    for (t, &(i, j)) in pairs.iter().enumerate() {
        if mask >> t & 1 == 1 {
            touched[i] = true;
            touched[j] = true;
        }
    }
    touched.into_iter().all(|t| t)
}

fn build(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let edges: Vec<(String, String)> = pairs
        .iter()
        .enumerate()
        .filter(|(t, _)| mask >> t & 1 == 1)
        .map(|(_, &(i, j))| (format!("x{}", i + 1), format!("x{}", j + 1)))
        .collect();
    Graph::new(vertices, &edges).expect("corpus graphs are valid")
}

/// Least edge mask over all vertex relabelings.
fn canonical_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> u32 {
    let pair_index = |i: usize, j: usize| -> usize {
        let (a, b) = (i.min(j), i.max(j));
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = mask;
    permute(&mut perm, 0, &mut |perm| {
        let mut mapped = 0u32;
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if mask >> t & 1 == 1 {
                mapped |= 1 << pair_index(perm[i], perm[j]);
            }
        }
        if mapped < best {
            best = mapped;
        }
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_hand_enumeration() {
        // no-isolated labeled graphs: none on 1 vertex, one on 2, four on 3
        let per_n = |n: usize| {
            generate_corpus(n, true, false)
                .unwrap()
                .filter(|g| g.vertex_count() == n)
                .count()
        };
        assert_eq!(per_n(1), 0);
        assert_eq!(per_n(2), 1);
        assert_eq!(per_n(3), 4);
        assert_eq!(per_n(4), 41);
        assert_eq!(per_n(5), 768);
    }

    #[test]
    fn nmax_two_is_a_single_edge() {
        let graphs: Vec<Graph> = generate_corpus(2, true, false).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].edge_count(), 1);
        assert_eq!(graphs[0].vertex_count(), 2);
    }

    #[test]
    fn dedup_collapses_isomorphism_classes() {
        // two classes on 3 vertices without isolated vertices: P3 and K3
        let classes: Vec<Graph> = generate_corpus(3, true, true)
            .unwrap()
            .filter(|g| g.vertex_count() == 3)
            .collect();
        assert_eq!(classes.len(), 2);
        let sizes: Vec<usize> = classes.iter().map(|g| g.edge_count()).collect();
        assert_eq!(sizes, vec![2, 3]);

        // all graphs on 4 vertices: 11 isomorphism classes
        let all4 = generate_corpus(4, false, true)
            .unwrap()
            .filter(|g| g.vertex_count() == 4)
            .count();
        assert_eq!(all4, 11);
    }

    #[test]
    fn rejects_oversized_request() {
        assert!(generate_corpus(8, false, false).is_err());
    }

    #[test]
    fn full_labeled_counts() {
        // all labeled graphs on n vertices: 2^C(n,2)
        let count = generate_corpus(4, false, false)
            .unwrap()
            .filter(|g| g.vertex_count() == 4)
            .count();
        assert_eq!(count, 64);
    }
}

//! Bipartite maximum matching by augmenting paths.

/// Size of a maximum matching. `adj[l]` lists the right vertices adjacent to
/// left vertex `l`; right vertices are `0..right`.
pub fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(l, adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

/// Whether some matching covers every left vertex.
pub fn saturates_left(adj: &[Vec<usize>], right: usize) -> bool {
    adj.len() <= right && max_matching(adj, right) == adj.len()
}

fn augment(l: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none_or(|other| augment(other, adj, owner, seen)) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

//! Test-side oracles. Nothing here goes through the alternating-cycle
//! machinery of the library: graphs are read as plain arc lists.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use twodd::{TwoDigraph, VertexId};

/// Arc list over vertex indices `0..n`, in the order of `g.vertices()`.
pub fn arc_list(g: &TwoDigraph) -> (usize, Vec<(usize, usize)>) {
    let pos: HashMap<VertexId, usize> = g.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let arcs = g.arcs().iter().map(|a| (pos[&a.tail], pos[&a.head])).collect();
    (g.vertex_count(), arcs)
}

/// Sign of a permutation by counting inversions: `true` when even.
pub fn is_even_permutation(p: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv.is_multiple_of(2)
}

pub fn cycle_count(succ: &[usize]) -> usize {
    let mut seen = vec![false; succ.len()];
    let mut cycles = 0;
    for s in 0..succ.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            v = succ[v];
        }
    }
    cycles
}

/// Every spanning set of arcs using each vertex once as a tail and once as
/// a head, as successor maps. Exact-one constraints over arcs, solved by
/// unit propagation and branching. Parallel arcs give distinct covers.
pub fn cycle_covers(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (i, &(t, h)) in arcs.iter().enumerate() {
        constraints[t].push(i);
        constraints[n + h].push(i);
    }
    let mut out = Vec::new();
    let mut state = vec![None; arcs.len()];
    covers_rec(n, arcs, &constraints, &mut state, &mut out);
    out
}

fn propagate(constraints: &[Vec<usize>], state: &mut [Option<bool>]) -> bool {
    loop {
        let mut changed = false;
        for c in constraints {
            let on = c.iter().filter(|&&a| state[a] == Some(true)).count();
            let open: Vec<usize> = c.iter().copied().filter(|&a| state[a].is_none()).collect();
            if on > 1 || (on == 0 && open.is_empty()) {
                return false;
            }
            if on == 1 && !open.is_empty() {
                for a in open {
                    state[a] = Some(false);
                }
                changed = true;
            } else if on == 0 && open.len() == 1 {
                state[open[0]] = Some(true);
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
}

fn covers_rec(
    n: usize,
    arcs: &[(usize, usize)],
    constraints: &[Vec<usize>],
    state: &mut Vec<Option<bool>>,
    out: &mut Vec<Vec<usize>>,
) {
    if !propagate(constraints, state) {
        return;
    }
    match state.iter().position(Option::is_none) {
        None => {
            let mut succ = vec![usize::MAX; n];
            for (i, &(t, h)) in arcs.iter().enumerate() {
                if state[i] == Some(true) {
                    succ[t] = h;
                }
            }
            out.push(succ);
        }
        Some(a) => {
            for choice in [true, false] {
                let mut next = state.clone();
                next[a] = Some(choice);
                covers_rec(n, arcs, constraints, &mut next, out);
            }
        }
    }
}

/// Depth-first search for a Hamiltonian cycle through vertex 0.
pub fn hamiltonian_dfs(n: usize, arcs: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut out = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out[t].push(h);
    }
    fn go(v: usize, depth: usize, n: usize, out: &[Vec<usize>], seen: &mut [bool]) -> bool {
        if depth == n {
            return out[v].contains(&0);
        }
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                if go(w, depth + 1, n, out, seen) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    go(0, 1, n, &out, &mut seen)
}

/// Lengths of the alternating cycles, found by walking arcs that share a
/// head, then a tail, then a head, and so on.
pub fn alternating_lengths(arcs: &[(usize, usize)]) -> Vec<usize> {
    let other = |i: usize, by_head: bool| -> usize {
        (0..arcs.len())
            .find(|&j| j != i && if by_head { arcs[j].1 == arcs[i].1 } else { arcs[j].0 == arcs[i].0 })
            .expect("2-digraph degrees")
    };
    let mut seen = vec![false; arcs.len()];
    let mut lens = Vec::new();
    for s in 0..arcs.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut a = s;
        let mut by_head = true;
        while !seen[a] {
            seen[a] = true;
            len += 1;
            a = other(a, by_head);
            by_head = !by_head;
        }
        lens.push(len);
    }
    lens
}

fn min_code(n: usize, arcs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut c = vec![0usize; n];
    let mut consider = |p: &[usize]| {
        let mut code: Vec<(usize, usize)> = arcs.iter().map(|&(t, h)| (p[t], p[h])).collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    };
    consider(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best.unwrap_or_default()
}

/// Isomorphism classes of 2-dds on `n` vertices whose alternating cycles
/// all have `len` arcs, by enumerating 0/1/2 adjacency matrices with row
/// and column sums 2 and minimizing over all vertex orders.
pub fn count_2dd_classes(n: usize, len: usize) -> (usize, usize) {
    let mut classes = HashSet::new();
    let mut connected = HashSet::new();
    let mut col = vec![0usize; n];
    let mut arcs = Vec::new();
    matrices(0, n, &mut col, &mut arcs, &mut |arcs| {
        if alternating_lengths(arcs).iter().all(|&l| l == len) {
            let code = min_code(n, arcs);
            if is_connected(n, arcs) {
                connected.insert(code.clone());
            }
            classes.insert(code);
        }
    });
    (classes.len(), connected.len())
}

fn matrices(
    row: usize,
    n: usize,
    col: &mut [usize],
    arcs: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if row == n {
        f(arcs);
        return;
    }
    for a in 0..n {
        for b in a..n {
            if col[a] < 2 && col[b] < 2 - usize::from(a == b) {
                col[a] += 1;
                col[b] += 1;
                arcs.push((row, a));
                arcs.push((row, b));
                matrices(row + 1, n, col, arcs, f);
                arcs.truncate(arcs.len() - 2);
                col[a] -= 1;
                col[b] -= 1;
            }
        }
    }
}

pub fn is_connected(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(t, h) in arcs {
        let (a, b) = (find(&mut parent, t), find(&mut parent, h));
        parent[a] = b;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count() <= 1
}

/// Number of weakly connected components after splitting every vertex in
/// `set` into an in-half (its index) and an out-half (index `n + j`), and
/// whether each split vertex's halves lie in different components.
pub fn split_oracle(n: usize, arcs: &[(usize, usize)], set: &[usize]) -> (usize, bool) {
    let m = n + set.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(t, h) in arcs {
        let tail = set.iter().position(|&s| s == t).map_or(t, |j| n + j);
        let (a, b) = (find(&mut parent, tail), find(&mut parent, h));
        parent[a] = b;
    }
    let comps = (0..m).filter(|&v| find(&mut parent, v) == v).count();
    let separated = set.iter().enumerate().all(|(j, &v)| find(&mut parent, v) != find(&mut parent, n + j));
    (comps, separated)
}

/// Inclusion-minimal split sets of at most `max` saturated vertices, by
/// brute force over all subsets.
pub fn minimal_split_sets_oracle(n: usize, arcs: &[(usize, usize)], saturated: &[usize], max: usize) -> Vec<Vec<usize>> {
    let base = split_oracle(n, arcs, &[]).0;
    let mut masks: Vec<u32> = (1u32..1 << saturated.len()).filter(|m| m.count_ones() as usize <= max).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut splitting: Vec<u32> = Vec::new();
    for mask in masks {
        if splitting.iter().any(|s| s & mask == *s) {
            continue;
        }
        let set: Vec<usize> = (0..saturated.len()).filter(|i| mask >> i & 1 == 1).map(|i| saturated[i]).collect();
        if split_oracle(n, arcs, &set).0 > base {
            splitting.push(mask);
        }
    }
    let mut sets: Vec<Vec<usize>> = splitting
        .iter()
        .map(|m| (0..saturated.len()).filter(|i| m >> i & 1 == 1).map(|i| saturated[i]).collect())
        .collect();
    for s in &mut sets {
        s.sort_unstable();
    }
    sets.sort();
    sets
}

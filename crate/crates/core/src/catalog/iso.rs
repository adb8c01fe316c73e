use std::collections::{BTreeMap, HashSet};

use crate::code::{tanner_graph, CssSubsystemCode};

/// Tanner graph as adjacency lists over data, X-check and Z-check nodes,
/// in that order, with the node class as the initial colour.
struct Colored {
    adj: Vec<Vec<usize>>,
    class: Vec<usize>,
    edges: HashSet<(usize, usize)>,
}

impl Colored {
    fn new(code: &CssSubsystemCode) -> Self {
        let g = tanner_graph(code);
        let n = g.data_nodes;
        let total = g.node_count();
        let mut adj = vec![Vec::new(); total];
        let mut edges = HashSet::new();
        for (check, q) in &g.edges {
            let c = match check.kind {
                crate::gf2::PauliType::X => n + check.index,
                crate::gf2::PauliType::Z => n + g.x_check_nodes + check.index,
            };
            adj[c].push(*q);
            adj[*q].push(c);
            edges.insert((c, *q));
        }
        let class = (0..total)
            .map(|v| {
                if v < n {
                    0
                } else if v < n + g.x_check_nodes {
                    1
                } else {
                    2
                }
            })
            .collect();
        Self { adj, class, edges }
    }
}

/// Joint colour refinement on the disjoint union of `a` and `b`. Colour ids
/// come from sorted signatures, so equal ids mean the same thing on both
/// sides. Returns `false` as soon as the two sides' histograms differ.
fn refine(a: &Colored, b: &Colored, ca: &mut Vec<usize>, cb: &mut Vec<usize>) -> bool {
    let mut classes = usize::MAX;
    loop {
        let sig = |g: &Colored, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.adj[v].iter().map(|&u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..ca.len()).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..cb.len()).map(|v| sig(b, cb, v)).collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), [usize; 2]> = BTreeMap::new();
        for s in &sa {
            ids.entry(s).or_default()[0] += 1;
        }
        for s in &sb {
            ids.entry(s).or_default()[1] += 1;
        }
        if ids.values().any(|[x, y]| x != y) {
            return false;
        }
        let index: BTreeMap<_, usize> = ids.keys().enumerate().map(|(i, s)| (*s, i)).collect();
        let next = index.len();
        *ca = sa.iter().map(|s| index[s]).collect();
        *cb = sb.iter().map(|s| index[s]).collect();
        if next == classes {
            return true;
        }
        classes = next;
    }
}

fn search(a: &Colored, b: &Colored, ca: Vec<usize>, cb: Vec<usize>) -> bool {
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *sizes.entry(c).or_insert(0) += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(_, &s)| s)
        .map(|(&c, _)| c);
    let Some(color) = target else {
        // discrete colouring: colour ids define the bijection
        let mut map = vec![0; cb.len()];
        for (v, &c) in cb.iter().enumerate() {
            map[c] = v;
        }
        return a
            .edges
            .iter()
            .all(|&(c, q)| b.edges.contains(&(map[ca[c]], map[ca[q]])));
    };
    let v = ca.iter().position(|&c| c == color).expect("class is non-empty");
    let fresh = ca.iter().chain(&cb).max().copied().unwrap_or(0) + 1;
    for w in (0..cb.len()).filter(|&w| cb[w] == color) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if refine(a, b, &mut na, &mut nb) && search(a, b, na, nb) {
            return true;
        }
    }
    false
}

/// Whether the coloured Tanner graphs of `a` and `b` are isomorphic, with
/// data, X-check and Z-check nodes kept in their own classes.
pub fn tanner_isomorphic(a: &CssSubsystemCode, b: &CssSubsystemCode) -> bool {
    if a.n() != b.n()
        || a.gauge_x().nrows() != b.gauge_x().nrows()
        || a.gauge_z().nrows() != b.gauge_z().nrows()
    {
        return false;
    }
    let ga = Colored::new(a);
    let gb = Colored::new(b);
    if ga.edges.len() != gb.edges.len() {
        return false;
    }
    let mut ca = ga.class.clone();
    let mut cb = gb.class.clone();
    refine(&ga, &gb, &mut ca, &mut cb) && search(&ga, &gb, ca, cb)
}

//! Generate-and-filter oracle for fibre configurations. Fibre graphs are
//! rebuilt from the extended Dynkin diagrams; chains are placed by choosing
//! vertex subsets rather than walking paths. Returns sorted fibre names per
//! configuration.

#[derive(Clone, Debug)]
struct Kind {
    name: String,
    euler: u32,
    rank: u32,
    /// Adjacency of (−2)-components; `None` if the fibre has
    /// no usable (−2)-components.
    graph: Option<Vec<Vec<bool>>>,
    /// Components joined by a double edge (I2, III).
    doubled: bool,
}

fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut g = vec![vec![false; n]; n];
    for &(a, b) in edges {
        g[a][b] = true;
        g[b][a] = true;
    }
    g
}

/// Star with a centre and arms of the given lengths.
fn star(arms: &[usize]) -> Vec<Vec<bool>> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    graph_from_edges(next, &edges)
}

fn kinds(max_euler: u32, budget: u32) -> Vec<Kind> {
    let mut out = Vec::new();
    let mut push = |name: String, euler: u32, rank: u32, graph, doubled| {
        if euler <= max_euler && rank <= budget {
            out.push(Kind {
                name,
                euler,
                rank,
                graph,
                doubled,
            });
        }
    };
    push("I1".into(), 1, 0, None, false);
    push("II".into(), 2, 0, None, false);
    push(
        "I2".into(),
        2,
        1,
        Some(graph_from_edges(2, &[(0, 1)])),
        true,
    );
    push(
        "III".into(),
        3,
        1,
        Some(graph_from_edges(2, &[(0, 1)])),
        true,
    );
    push(
        "IV".into(),
        4,
        2,
        Some(graph_from_edges(3, &[(0, 1), (1, 2), (0, 2)])),
        false,
    );
    for n in 3..=max_euler as usize {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        push(
            format!("I{n}"),
            n as u32,
            n as u32 - 1,
            Some(graph_from_edges(n, &edges)),
            false,
        );
    }
    for n in 0..=max_euler.saturating_sub(6) as usize {
        // D̃_{n+4}: spine 0..=n, two leaves on each end.
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
        let leaves = n + 1;
        edges.extend([
            (0, leaves),
            (0, leaves + 1),
            (n, leaves + 2),
            (n, leaves + 3),
        ]);
        push(
            format!("I{n}*"),
            n as u32 + 6,
            n as u32 + 4,
            Some(graph_from_edges(n + 5, &edges)),
            false,
        );
    }
    push("IV*".into(), 8, 6, Some(star(&[2, 2, 2])), false);
    push("III*".into(), 9, 7, Some(star(&[1, 3, 3])), false);
    push("II*".into(), 10, 8, Some(star(&[1, 2, 5])), false);
    out
}

fn multisets(
    kinds: &[Kind],
    start: usize,
    euler: u32,
    budget: u32,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if euler == 0 {
        out.push(cur.clone());
        return;
    }
    for k in start..kinds.len() {
        if kinds[k].euler <= euler && kinds[k].rank <= budget {
            cur.push(k);
            multisets(
                kinds,
                k,
                euler - kinds[k].euler,
                budget - kinds[k].rank,
                cur,
                out,
            );
            cur.pop();
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Induced subgraph on `set` is a path (connected, acyclic, max degree 2).
fn is_induced_path(g: &[Vec<bool>], set: &[usize], doubled: bool) -> bool {
    if set.len() == 1 {
        return true;
    }
    if doubled {
        return false;
    }
    let degrees: Vec<usize> = set
        .iter()
        .map(|&a| set.iter().filter(|&&b| g[a][b]).count())
        .collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if edges + 1 != set.len() || degrees.iter().any(|&d| d == 0 || d > 2) {
        return false;
    }
    // Connected: flood fill.
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let a = seen[i];
        for &b in set {
            if g[a][b] && !seen.contains(&b) {
                seen.push(b);
            }
        }
        i += 1;
    }
    seen.len() == set.len()
}

fn fits(fibres: &[&Kind], lengths: &[usize], taken: &mut Vec<Vec<usize>>) -> bool {
    let Some((&len, rest)) = lengths.split_first() else {
        return true;
    };
    for (f, kind) in fibres.iter().enumerate() {
        let Some(g) = &kind.graph else { continue };
        for set in subsets(g.len(), len) {
            if !is_induced_path(g, &set, kind.doubled) {
                continue;
            }
            let blocked = set
                .iter()
                .any(|&v| taken[f].iter().any(|&w| w == v || g[v][w]));
            if blocked {
                continue;
            }
            taken[f].extend(&set);
            let ok = fits(fibres, rest, taken);
            let keep = taken[f].len() - set.len();
            taken[f].truncate(keep);
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn oracle(target: u32, budget: u32, lengths: &[usize]) -> Vec<Vec<String>> {
    let ks = kinds(target, budget);
    let mut all = Vec::new();
    multisets(&ks, 0, target, budget, &mut Vec::new(), &mut all);
    let mut out: Vec<Vec<String>> = all
        .into_iter()
        .filter(|m| {
            let fibres: Vec<&Kind> = m.iter().map(|&k| &ks[k]).collect();
            fits(&fibres, lengths, &mut vec![Vec::new(); fibres.len()])
        })
        .map(|m| {
            let mut names: Vec<String> = m.iter().map(|&k| ks[k].name.clone()).collect();
            names.sort();
            names
        })
        .collect();
    out.sort();
    out
}

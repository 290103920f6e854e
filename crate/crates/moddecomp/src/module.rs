use graph_core::ColoredGraph;

/// Every outside vertex treats same-colored members of `m` alike.
pub fn is_colored_module(g: &ColoredGraph, m: &[usize]) -> bool {
    let inside = g.mask_of(m.iter().copied());
    for (i, &x) in m.iter().enumerate() {
        for &y in &m[i + 1..] {
            if g.color(x) == g.color(y) && !same_outside(g, x, y, &inside) {
                return false;
            }
        }
    }
    true
}

/// Some two members of `m` have the same neighbors outside `m`.
pub fn is_nontrivial_module(g: &ColoredGraph, m: &[usize]) -> bool {
    let inside = g.mask_of(m.iter().copied());
    m.iter().enumerate().any(|(i, &x)| m[i + 1..].iter().any(|&y| same_outside(g, x, y, &inside)))
}

/// Uncolored module: every outside vertex sees all of `m` or none of it.
pub fn is_uncolored_module(g: &ColoredGraph, m: &[usize]) -> bool {
    let inside = g.mask_of(m.iter().copied());
    m.windows(2).all(|w| same_outside(g, w[0], w[1], &inside))
}

pub(crate) fn same_outside(g: &ColoredGraph, x: usize, y: usize, inside: &[u64]) -> bool {
    g.row(x).iter().zip(g.row(y)).zip(inside).all(|((a, b), m)| (a ^ b) & !m == 0)
}

/// Outside neighborhood of `x` relative to the member mask, as packed bits.
pub(crate) fn outside_row(g: &ColoredGraph, x: usize, inside: &[u64]) -> Vec<u64> {
    g.row(x).iter().zip(inside).map(|(a, m)| a & !m).collect()
}

/// Smallest uncolored module containing `seed`, by repeatedly adding
/// splitters.
pub fn module_closure(g: &ColoredGraph, seed: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut in_s = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for &x in seed {
        if !in_s[x] {
            in_s[x] = true;
            members.push(x);
        }
    }
    loop {
        let mask = g.mask_of(members.iter().copied());
        let size = members.len();
        let splitters: Vec<usize> = (0..n)
            .filter(|&z| !in_s[z])
            .filter(|&z| {
                let d = g.degree_into(z, &mask);
                d > 0 && d < size
            })
            .collect();
        if splitters.is_empty() {
            members.sort_unstable();
            return members;
        }
        for z in splitters {
            in_s[z] = true;
            members.push(z);
        }
    }
}

use graph_core::{complement, ColoredGraph};
use refinement::{color_valence, refine_colors};

use crate::module::{is_colored_module, is_nontrivial_module, module_closure};
use crate::ModError;

/// Disjoint modules with a nontriviality flag each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFamily {
    pub modules: Vec<Vec<usize>>,
    pub nontrivial: Vec<bool>,
}

impl ModuleFamily {
    /// Sorts each module and the family by least member, then flags the
    /// nontrivial ones.
    pub fn new(g: &ColoredGraph, mut modules: Vec<Vec<usize>>) -> Self {
        for m in &mut modules {
            m.sort_unstable();
        }
        modules.sort();
        let nontrivial = modules.iter().map(|m| is_nontrivial_module(g, m)).collect();
        ModuleFamily { modules, nontrivial }
    }

    pub fn is_partition(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for &v in self.modules.iter().flatten() {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn has_nontrivial(&self) -> bool {
        self.nontrivial.iter().any(|&t| t)
    }

    /// Index of the module containing each vertex.
    pub fn owner(&self, n: usize) -> Vec<Option<usize>> {
        let mut own = vec![None; n];
        for (i, m) in self.modules.iter().enumerate() {
            for &v in m {
                own[v] = Some(i);
            }
        }
        own
    }

    /// Checks that every member is a colored module.
    pub fn verify(&self, g: &ColoredGraph) -> Result<(), ModError> {
        match self.modules.iter().find(|m| !is_colored_module(g, m)) {
            Some(m) => Err(ModError::NotAModule(m.clone())),
            None => Ok(()),
        }
    }
}

/// Isomorphism-invariant rule assigning a module family to each graph.
pub trait DecompositionFunctor {
    fn decompose(&self, g: &ColoredGraph) -> Result<ModuleFamily, ModError>;
    fn name(&self) -> String;
}

/// Components, co-components, or maximal proper modules.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassicalFunctor;

impl DecompositionFunctor for ClassicalFunctor {
    fn decompose(&self, g: &ColoredGraph) -> Result<ModuleFamily, ModError> {
        Ok(classical_functor(g))
    }

    fn name(&self) -> String {
        "classical".into()
    }
}

/// Minimal `c`-degree dependence modules.
#[derive(Clone, Copy, Debug)]
pub struct DegreeDependenceFunctor {
    pub c: usize,
}

impl DecompositionFunctor for DegreeDependenceFunctor {
    fn decompose(&self, g: &ColoredGraph) -> Result<ModuleFamily, ModError> {
        degree_dependence_modules(g, self.c)
    }

    fn name(&self) -> String {
        format!("degdep:{}", self.c)
    }
}

/// Classical modular decomposition at the top level, ignoring colors.
pub fn classical_functor(g: &ColoredGraph) -> ModuleFamily {
    let n = g.n();
    if n <= 1 {
        return ModuleFamily::new(g, (0..n).map(|v| vec![v]).collect());
    }
    if !g.is_connected() {
        return ModuleFamily::new(g, g.components());
    }
    let co = complement(g);
    if !co.is_connected() {
        return ModuleFamily::new(g, co.components());
    }
    let mut owner = vec![false; n];
    let mut modules = Vec::new();
    for x in 0..n {
        if owner[x] {
            continue;
        }
        let mut m = vec![x];
        let mut in_m = vec![false; n];
        in_m[x] = true;
        for y in 0..n {
            if in_m[y] {
                continue;
            }
            let c = module_closure(g, &[x, y]);
            if c.len() < n {
                for z in c {
                    if !in_m[z] {
                        in_m[z] = true;
                        m.push(z);
                    }
                }
            }
        }
        for &z in &m {
            owner[z] = true;
        }
        modules.push(m);
    }
    ModuleFamily::new(g, modules)
}

/// `v2` (in class `class2`) depends on `v` within bound `d`: it is a neighbor
/// of `v` and `v` has at most `d` neighbors in the class, or a non-neighbor
/// and `v` has at most `d` non-neighbors there (not counting `v`).
fn depends(g: &ColoredGraph, v: usize, v2: usize, class2: &[u64], class2_len: usize, d: usize) -> bool {
    let nb = g.degree_into(v, class2);
    if g.has_edge(v, v2) {
        nb <= d
    } else {
        let own = usize::from(class2[v / 64] >> (v % 64) & 1 == 1);
        class2_len - nb - own <= d
    }
}

/// The minimal `c`-degree dependence modules.
///
/// Requires a coloring stable under refinement, color valence at most `c`,
/// and no color class of size at most `2c`. The module of a vertex is grown
/// by repeatedly adding vertices of degree dependence at most `c` with
/// respect to the set built so far.
pub fn degree_dependence_modules(g: &ColoredGraph, c: usize) -> Result<ModuleFamily, ModError> {
    let n = g.n();
    let (_, num) = refine_colors(g, g.colors());
    let classes = g.color_classes();
    if num != classes.len() {
        return Err(ModError::Precondition("coloring is not stable under naive refinement".into()));
    }
    let valence = color_valence(g);
    if valence > c {
        return Err(ModError::Precondition(format!("color valence {valence} exceeds {c}")));
    }
    if let Some(small) = classes.values().find(|cl| cl.len() <= 2 * c) {
        return Err(ModError::Precondition(format!(
            "color class of size {} is at most 2c = {}",
            small.len(),
            2 * c
        )));
    }
    let masks: Vec<(u32, Vec<u64>, usize)> =
        classes.iter().map(|(&col, cl)| (col, g.mask_of(cl.iter().copied()), cl.len())).collect();
    let class_of = |v: usize| masks.iter().find(|m| m.0 == g.color(v)).unwrap();
    let closure = |start: usize| -> Vec<usize> {
        let mut in_s = vec![false; n];
        in_s[start] = true;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let v = members[k];
            k += 1;
            for v2 in 0..n {
                if in_s[v2] {
                    continue;
                }
                let (_, mask, len) = class_of(v2);
                if depends(g, v, v2, mask, *len, c) {
                    in_s[v2] = true;
                    members.push(v2);
                }
            }
        }
        members.sort_unstable();
        members
    };
    let all: Vec<Vec<usize>> = (0..n).map(closure).collect();
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for m in &all {
        let has_smaller = all.iter().any(|o| o.len() < m.len() && o.iter().all(|x| m.binary_search(x).is_ok()));
        if !has_smaller && !minimal.contains(m) {
            minimal.push(m.clone());
        }
    }
    let fam = ModuleFamily::new(g, minimal);
    if !fam.is_partition(n) {
        return Err(ModError::NotAPartition);
    }
    Ok(fam)
}

/// Closure of `v` within its side of a bipartite graph whose sides are the
/// two colors: `v2` joins when its neighborhood meets `N(S)` and does not
/// properly contain `N(S)`.
pub fn nc_closure(g: &ColoredGraph, v: usize) -> Vec<usize> {
    nc_closure_ordered(g, v, &(0..g.n()).collect::<Vec<_>>())
}

/// [`nc_closure`] scanning candidates in the given order.
pub fn nc_closure_ordered(g: &ColoredGraph, v: usize, order: &[usize]) -> Vec<usize> {
    let side = g.color(v);
    let mut in_s = vec![false; g.n()];
    in_s[v] = true;
    let mut ns: Vec<u64> = g.row(v).to_vec();
    loop {
        let mut grew = false;
        for &x in order {
            if in_s[x] || g.color(x) != side {
                continue;
            }
            let row = g.row(x);
            let meets = ns.iter().zip(row).any(|(a, b)| a & b != 0);
            let subset = ns.iter().zip(row).all(|(a, b)| a & !b == 0);
            let proper = subset && ns.as_slice() != row;
            if meets && !proper {
                in_s[x] = true;
                for (a, b) in ns.iter_mut().zip(row) {
                    *a |= b;
                }
                grew = true;
            }
        }
        if !grew {
            return (0..g.n()).filter(|&x| in_s[x]).collect();
        }
    }
}

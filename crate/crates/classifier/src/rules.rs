use graph_core::family::{complete, path, subdivided_star, union_all};
use graph_core::{complement, contains_induced, ColoredGraph};

use crate::shape::is_forest_of_subdivided_stars;
use crate::{ClassifyError, SolverRef, Status, Step, Verdict};

/// Citation strings used in verdict trails.
pub mod cite {
    pub const DIRECT: &str = "direct argument";
    pub const EXT_ONE_COMPLETE: &str = "external result: reduction to one complete forbidden graph";
    pub const EXT_LEMMA2: &str = "external result: Lemma 2 on two forbidden induced subgraphs";
    pub const EXT_LEMMA5: &str = "external result: Lemma 5 on two forbidden induced subgraphs";
    pub const EXT_THM3: &str = "external result: Theorem 3 on two forbidden induced subgraphs";
    pub const EXT_THM4: &str = "external result: Theorem 4 on a forbidden star and a forbidden clique";
    pub const TRIANGLE_FREE: &str = "triangle-free H(1,0,b,1)-free graphs are polynomial (no solver here)";
    pub const ENC_2K2K1: &str = "encodings: builtin 2k2k1-k4";
    pub const ENC_P6: &str = "encodings: builtin p6-p4p2-k4";
    pub const ENC_H1030: &str = "encodings: builtin h1030-k4";
    pub const ENC_BIP: &str = "encodings: builtin bip-2p3k1";
    pub const ENC_H1020: &str = "encodings: builtin h1020-k5";
    pub const SOLVER_DSTAR: &str = "iso_engines::double_star_kt_iso";
    pub const SOLVER_P5: &str = "iso_engines::p5_kt_iso";
    pub const SOLVER_H1B0: &str = "iso_engines::h1b0_ks_iso";
}

struct Trail(Vec<Step>);

impl Trail {
    fn note(&mut self, rule: impl Into<String>, cite: &'static str) {
        self.0.push(Step { rule: rule.into(), cite });
    }

    fn end(mut self, status: Status, rule: impl Into<String>, cite: &'static str) -> Verdict {
        self.note(rule, cite);
        Verdict { status, trail: self.0, solver: None }
    }

    fn solved(self, solver: SolverRef, rule: impl Into<String>, cite: &'static str) -> Verdict {
        let mut v = self.end(Status::PolyTime, rule, cite);
        v.solver = Some(solver);
        v
    }
}

fn is_complete(g: &ColoredGraph) -> bool {
    g.edge_count() * 2 == g.n() * (g.n() - 1)
}

fn contains(h: &ColoredGraph, pattern: &ColoredGraph) -> bool {
    contains_induced(pattern, h).is_some()
}

fn k1() -> ColoredGraph {
    complete(1)
}

fn k2() -> ColoredGraph {
    complete(2)
}

/// Complexity of isomorphism for graphs avoiding both `h1` and `h2` as
/// induced subgraphs. Colors are ignored. The result does not depend on the
/// order of the arguments.
pub fn classify(h1: &ColoredGraph, h2: &ColoredGraph) -> Result<Verdict, ClassifyError> {
    if h1.n() == 0 || h2.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    let mut trail = Trail(Vec::new());
    let (mut a, mut b) = (h1.uncolored(), h2.uncolored());
    if a.n() == 1 || b.n() == 1 {
        return Ok(trail.end(Status::PolyTime, "a single forbidden vertex leaves only the empty graph", cite::DIRECT));
    }
    if !is_complete(&a) && !is_complete(&b) {
        if a.edge_count() == 0 || b.edge_count() == 0 {
            trail.note("complement both forbidden graphs, turning the edgeless one into a clique", cite::DIRECT);
            a = complement(&a);
            b = complement(&b);
        } else {
            let forest = |g: &ColoredGraph| is_forest_of_subdivided_stars(g).is_some();
            if !forest(&a) && !forest(&b) {
                return Ok(trail.end(
                    Status::GIComplete,
                    "neither forbidden graph is a forest of subdivided stars",
                    cite::EXT_LEMMA2,
                ));
            }
            let (ca, cb) = (complement(&a), complement(&b));
            if !forest(&ca) && !forest(&cb) {
                trail.note("complement both forbidden graphs", cite::DIRECT);
                return Ok(trail.end(
                    Status::GIComplete,
                    "neither complement is a forest of subdivided stars",
                    cite::EXT_LEMMA2,
                ));
            }
            return Ok(trail.end(
                Status::External,
                "neither forbidden graph is complete or edgeless",
                cite::EXT_ONE_COMPLETE,
            ));
        }
    }
    // `k` is the clique, `h` the other graph; with two cliques the smaller
    // one decides the class.
    let (h, k) = match (is_complete(&a), is_complete(&b)) {
        (true, true) if a.n() <= b.n() => (b, a),
        (true, true) => (a, b),
        (true, false) => (b, a),
        _ => (a, b),
    };
    Ok(with_clique(trail, &h, k.n()))
}

fn with_clique(mut trail: Trail, h: &ColoredGraph, n: usize) -> Verdict {
    trail.note(format!("one forbidden graph is K_{n}"), cite::EXT_ONE_COMPLETE);
    if n == 2 {
        return trail.end(Status::PolyTime, "K_2-free graphs are edgeless", cite::DIRECT);
    }
    if h.edge_count() == 0 {
        return trail.end(
            Status::PolyTime,
            "an independent set and a clique are both forbidden, so the class is finite",
            cite::DIRECT,
        );
    }
    let Some(shape) = is_forest_of_subdivided_stars(h) else {
        return trail.end(Status::GIComplete, "the other graph is not a forest of subdivided stars", cite::EXT_LEMMA2);
    };
    if shape.components.len() >= 3 {
        return trail.end(Status::GIComplete, "three nontrivial components contain 3K_2", cite::EXT_LEMMA5);
    }
    if n == 3 {
        triangle_branch(trail, h)
    } else {
        clique_branch(trail, h, n)
    }
}

struct Facts {
    shape: crate::StarForestShape,
    has_p4: bool,
    max_degree: usize,
}

fn facts(h: &ColoredGraph) -> Facts {
    Facts {
        shape: is_forest_of_subdivided_stars(h).expect("checked by caller"),
        has_p4: contains(h, &path(4)),
        max_degree: (0..h.n()).map(|v| h.degree(v)).max().unwrap_or(0),
    }
}

fn two_k2_two_k1() -> ColoredGraph {
    union_all(&[k2(), k2(), k1(), k1()])
}

/// Leaves of the component of `center` that are not adjacent to it, with
/// their distance from it.
fn far_leaves(h: &ColoredGraph, center: usize) -> Vec<(usize, usize)> {
    let dist = h.distances_from(center);
    (0..h.n())
        .filter(|&v| h.degree(v) == 1 && !h.has_edge(v, center))
        .filter_map(|v| dist[v].map(|d| (v, d)))
        .collect()
}

fn triangle_branch(mut trail: Trail, h: &ColoredGraph) -> Verdict {
    let f = facts(h);
    let iso = f.shape.isolated;
    if !f.has_p4 {
        let stars = &f.shape.components;
        if stars.len() == 1 {
            return trail.end(Status::PolyTime, "one star plus isolated vertices", cite::TRIANGLE_FREE);
        }
        if iso > 1 {
            return trail.end(Status::GIComplete, "two stars and two isolated vertices contain 2K_2 + 2K_1", cite::EXT_LEMMA5);
        }
        let leaves: Vec<usize> = stars.iter().map(|c| c.branches.len()).collect();
        if leaves.iter().all(|&l| l >= 2) {
            if iso == 1 {
                return trail.end(Status::GIComplete, "contains 2P_3 + K_1", cite::ENC_BIP);
            }
            let s = leaves.iter().copied().max().unwrap_or(2);
            return trail.solved(
                SolverRef::DoubleStar { s, t: 3 },
                format!("induced subgraph of K_{{1,{s}}} + K_{{1,{s}}}"),
                cite::SOLVER_DSTAR,
            );
        }
        return trail.end(Status::PolyTime, "two stars, one of them a single edge", cite::TRIANGLE_FREE);
    }
    if f.max_degree < 3 {
        if contains(h, &two_k2_two_k1()) {
            return trail.end(Status::GIComplete, "contains 2K_2 + 2K_1", cite::EXT_LEMMA5);
        }
        return trail.end(
            Status::OpenFinite,
            "no vertex of degree 3 and too small to contain 2K_2 + 2K_1",
            cite::DIRECT,
        );
    }
    trail.note("contains P_4 and a vertex of degree at least 3", cite::DIRECT);
    if contains(h, &union_all(&[path(4), k1(), k1()])) {
        return trail.end(Status::GIComplete, "contains P_4 + 2K_1", cite::EXT_LEMMA5);
    }
    let comp = f
        .shape
        .components
        .iter()
        .find(|c| contains(&h.induced(&c.vertices), &path(4)))
        .expect("some component contains the P_4");
    let outside = h.n() - comp.vertices.len();
    if outside >= 2 {
        if contains(h, &two_k2_two_k1()) {
            return trail.end(Status::GIComplete, "contains 2K_2 + 2K_1", cite::EXT_LEMMA5);
        }
        return trail.end(Status::OpenFinite, "two vertices outside the P_4 component, below the size bound", cite::DIRECT);
    }
    if h.degree(comp.center) >= 3 {
        if let [(_, 2)] = far_leaves(h, comp.center).as_slice() {
            return trail.end(Status::PolyTime, "induced subgraph of H(1,0,b,1)", cite::TRIANGLE_FREE);
        }
    }
    if contains(h, &two_k2_two_k1()) {
        return trail.end(Status::GIComplete, "contains 2K_2 + 2K_1", cite::EXT_LEMMA5);
    }
    if contains(h, &union_all(&[path(4), k2(), k2()])) {
        return trail.end(Status::GIComplete, "contains P_4 + 2K_2", cite::EXT_LEMMA5);
    }
    trail.end(Status::OpenFinite, "below the size bound of the remaining rules", cite::DIRECT)
}

fn clique_branch(mut trail: Trail, h: &ColoredGraph, n: usize) -> Verdict {
    let f = facts(h);
    let comps = &f.shape.components;
    if comps.len() == 2 {
        if f.shape.isolated > 0 {
            return trail.end(Status::GIComplete, "contains 2K_2 + K_1", cite::ENC_2K2K1);
        }
        if f.has_p4 {
            return trail.end(Status::GIComplete, "disconnected and contains P_4 + K_1", cite::EXT_THM3);
        }
        let s = comps.iter().map(|c| c.branches.len()).max().expect("two components");
        return trail.solved(
            SolverRef::DoubleStar { s, t: n },
            format!("induced subgraph of K_{{1,{s}}} + K_{{1,{s}}}"),
            cite::SOLVER_DSTAR,
        );
    }
    if !f.has_p4 {
        return trail.end(Status::PolyTime, "one star plus isolated vertices", cite::EXT_THM4);
    }
    if f.shape.isolated > 0 {
        return trail.end(Status::GIComplete, "disconnected and contains P_4 + K_1", cite::EXT_THM3);
    }
    let comp = &comps[0];
    if f.max_degree < 3 {
        let k = comp.vertices.len();
        return match k {
            4 | 5 => trail.solved(SolverRef::P5 { t: n }, format!("P_{k} is an induced subgraph of P_5"), cite::SOLVER_P5),
            _ => trail.end(Status::GIComplete, format!("P_{k} contains P_6"), cite::ENC_P6),
        };
    }
    let center = comp.center;
    trail.note(format!("connected with center of degree {}", h.degree(center)), cite::DIRECT);
    let far = far_leaves(h, center);
    match far.as_slice() {
        [(_, 2)] => {
            let b = h.degree(center) - 1;
            return trail.solved(SolverRef::H1b0 { b, s: n }, format!("isomorphic to H(1,{b},0)"), cite::SOLVER_H1B0);
        }
        [_, _, ..] => {
            return trail.end(Status::GIComplete, "two leaves away from the center give P_4 + K_1", cite::EXT_THM3);
        }
        _ => {}
    }
    if h.degree(center) >= 4 {
        return trail.end(Status::GIComplete, "contains H(1,0,3,0)", cite::ENC_H1030);
    }
    if n == 4 {
        if contains(h, &path(6)) {
            return trail.end(Status::GIComplete, "contains P_6", cite::ENC_P6);
        }
        return trail.end(Status::OpenFinite, "center of degree 3 and too small to contain P_6", cite::DIRECT);
    }
    let h1020 = subdivided_star(&[1, 0, 2, 0]).expect("valid parameters");
    debug_assert!(contains(h, &h1020));
    trail.end(Status::GIComplete, "contains H(1,0,2,0)", cite::ENC_H1020)
}

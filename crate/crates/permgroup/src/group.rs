use num_bigint::BigUint;

use crate::perm::Permutation;
use crate::GroupError;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: usize,
    pub orbit: Vec<usize>,
    /// Coset representative per orbit point, indexed by point.
    pub reps: Vec<Option<Permutation>>,
}

/// Permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    gens: Vec<Permutation>,
    strong: Vec<Permutation>,
    /// Index of the first base point each strong generator moves.
    strong_level: Vec<usize>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, gens: Vec::new(), strong: Vec::new(), strong_level: Vec::new(), levels: Vec::new() }
    }

    /// Deterministic Schreier-Sims.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Schreier-Sims whose base starts with `prefix`.
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Result<Self, GroupError> {
        check_degrees(degree, gens)?;
        let mut g = Self::trivial(degree);
        for &b in prefix {
            if b >= degree {
                return Err(GroupError::PointOutOfRange(b));
            }
            if !g.levels.iter().any(|l| l.point == b) {
                g.push_level(b);
            }
        }
        for p in gens {
            if !p.is_identity() {
                g.gens.push(p.clone());
                g.add_strong(p.clone());
            }
        }
        g.recompute(0);
        g.complete();
        Ok(g)
    }

    /// Builds the group from a base and generators that the caller knows to
    /// form a strong generating set relative to it (for example automorphisms
    /// collected along the first path of an individualization-refinement
    /// search). No Schreier generators are sifted.
    pub fn from_base_and_strong_generators(
        degree: usize,
        base: &[usize],
        strong: &[Permutation],
    ) -> Result<Self, GroupError> {
        check_degrees(degree, strong)?;
        let mut g = Self::trivial(degree);
        for &b in base {
            if b >= degree {
                return Err(GroupError::PointOutOfRange(b));
            }
            if !g.levels.iter().any(|l| l.point == b) {
                g.push_level(b);
            }
        }
        for p in strong {
            if !p.is_identity() {
                g.gens.push(p.clone());
                g.add_strong(p.clone());
            }
        }
        g.recompute(0);
        Ok(g)
    }

    /// Symmetric group on the listed points, fixing everything else.
    pub fn symmetric_on(degree: usize, points: &[usize]) -> Result<Self, GroupError> {
        let mut gens = Vec::new();
        for w in points.windows(2) {
            gens.push(Permutation::from_cycles(degree, &[&[w[0], w[1]]])?);
        }
        Self::with_base_prefix(degree, &gens, points)
    }

    fn push_level(&mut self, point: usize) {
        let mut reps = vec![None; self.degree];
        reps[point] = Some(Permutation::identity(self.degree));
        self.levels.push(Level { point, orbit: vec![point], reps });
    }

    /// Adds a strong generator, extending the base if it fixes every base
    /// point; returns its level.
    fn add_strong(&mut self, p: Permutation) -> usize {
        let lvl = match self.levels.iter().position(|l| p.apply(l.point) != l.point) {
            Some(i) => i,
            None => {
                let moved = (0..self.degree).find(|&x| p.apply(x) != x).expect("identity has no level");
                self.push_level(moved);
                self.levels.len() - 1
            }
        };
        self.strong.push(p);
        self.strong_level.push(lvl);
        lvl
    }

    /// Recomputes transversals of levels `from..`.
    fn recompute(&mut self, from: usize) {
        for i in from..self.levels.len() {
            self.recompute_level(i);
        }
    }

    fn recompute_level(&mut self, i: usize) {
        let point = self.levels[i].point;
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for (s, &lvl) in self.strong.iter().zip(&self.strong_level) {
                if lvl < i {
                    continue;
                }
                let y = s.apply(x);
                if reps[y].is_none() {
                    reps[y] = Some(reps[x].as_ref().unwrap().compose(s));
                    orbit.push(y);
                }
            }
        }
        self.levels[i].orbit = orbit;
        self.levels[i].reps = reps;
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut found = None;
            'search: for &beta in &self.levels[lvl].orbit.clone() {
                let u = self.levels[lvl].reps[beta].clone().unwrap();
                for (s, &sl) in self.strong.iter().zip(&self.strong_level) {
                    if sl < lvl {
                        continue;
                    }
                    let target = s.apply(beta);
                    let back = self.levels[lvl].reps[target].as_ref().unwrap().inverse();
                    let schreier = u.compose(s).compose(&back);
                    let h = self.sift_from(schreier, lvl + 1);
                    if !h.is_identity() {
                        found = Some(h);
                        break 'search;
                    }
                }
            }
            match found {
                Some(h) => {
                    let j = self.add_strong(h);
                    self.recompute(0);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn sift_from(&self, mut g: Permutation, from: usize) -> Permutation {
        for l in &self.levels[from.min(self.levels.len())..] {
            let beta = g.apply(l.point);
            match &l.reps[beta] {
                Some(u) => g = g.compose(&u.inverse()),
                None => return g,
            }
        }
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Generators as supplied, without identities.
    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Basic orbit lengths along the base.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn is_trivial(&self) -> bool {
        self.strong.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift_from(p.clone(), 0).is_identity()
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_under(&self.gens, self.degree, point)
    }

    /// All orbits, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<(), GroupError> {
    for p in gens {
        if p.degree() != degree {
            return Err(GroupError::DegreeMismatch { expected: degree, got: p.degree() });
        }
    }
    Ok(())
}

/// Orbit of `point` under the group generated by `gens`, sorted.
pub fn orbit_under(gens: &[Permutation], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut k = 0;
    while k < orbit.len() {
        let x = orbit[k];
        k += 1;
        for s in gens {
            let y = s.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

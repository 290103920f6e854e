//! Backtracking over the base-image tree of a group: subgroups defined by a
//! property, set stabilizers and set images.

use graph_core::{Budget, BudgetExhausted};

use crate::group::{orbit_under, PermutationGroup};
use crate::perm::Permutation;

struct Walker<'a, A, T> {
    group: &'a PermutationGroup,
    allowed: &'a A,
    test: &'a mut T,
    budget: &'a Budget,
    images: Vec<usize>,
}

impl<A, T> Walker<'_, A, T>
where
    A: Fn(&[usize]) -> bool,
    T: FnMut(&Permutation) -> bool,
{
    /// Elements `r_{k-1} .. r_j` composed before `acc`; returns the first
    /// passing the test.
    fn descend(&mut self, j: usize, acc: Permutation) -> Result<Option<Permutation>, BudgetExhausted> {
        self.budget.tick()?;
        let levels = self.group.levels();
        if j == levels.len() {
            return Ok(if (self.test)(&acc) { Some(acc) } else { None });
        }
        let level = &levels[j];
        for &gamma in &level.orbit {
            self.images.truncate(j);
            self.images.push(acc.apply(gamma));
            if !(self.allowed)(&self.images) {
                continue;
            }
            let next = level.reps[gamma].as_ref().unwrap().compose(&acc);
            if let Some(found) = self.descend(j + 1, next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// The subgroup `{x in G : test(x)}`.
///
/// `test` must define a subgroup, and `allowed(b, y)` must hold whenever a
/// member maps the base point `b` to `y`; it is used only for pruning.
pub fn subgroup_search<A, T>(
    group: &PermutationGroup,
    allowed: A,
    test: T,
    budget: &Budget,
) -> Result<PermutationGroup, BudgetExhausted>
where
    A: Fn(usize, usize) -> bool,
    T: FnMut(&Permutation) -> bool,
{
    let base = group.base();
    subgroup_search_partial(group, |img: &[usize]| allowed(base[img.len() - 1], img[img.len() - 1]), test, budget)
}

/// [`subgroup_search`] with pruning on partial base images: `allowed(img)`
/// sees the images of `base[..img.len()]` and must hold whenever some member
/// of the subgroup has those images.
pub fn subgroup_search_partial<A, T>(
    group: &PermutationGroup,
    allowed: A,
    mut test: T,
    budget: &Budget,
) -> Result<PermutationGroup, BudgetExhausted>
where
    A: Fn(&[usize]) -> bool,
    T: FnMut(&Permutation) -> bool,
{
    let degree = group.degree();
    let base = group.base();
    let mut found: Vec<Permutation> = Vec::new();
    for i in (0..base.len()).rev() {
        let fixing: Vec<Permutation> =
            found.iter().filter(|p| base[..i].iter().all(|&b| p.apply(b) == b)).cloned().collect();
        let mut reached = orbit_under(&fixing, degree, base[i]);
        let level = &group.levels()[i];
        for &beta in &level.orbit {
            if reached.binary_search(&beta).is_ok() {
                continue;
            }
            let mut images: Vec<usize> = base[..i].to_vec();
            images.push(beta);
            if !allowed(&images) {
                continue;
            }
            let start = level.reps[beta].clone().unwrap();
            let mut walker = Walker { group, allowed: &allowed, test: &mut test, budget, images };
            if let Some(g) = walker.descend(i + 1, start)? {
                found.push(g);
                let fixing: Vec<Permutation> =
                    found.iter().filter(|p| base[..i].iter().all(|&b| p.apply(b) == b)).cloned().collect();
                reached = orbit_under(&fixing, degree, base[i]);
            }
        }
    }
    Ok(PermutationGroup::from_generators(degree, &found).expect("degrees agree"))
}

/// Some element of the group passing `test`, with the same pruning contract
/// as [`subgroup_search`].
pub fn find_element<A, T>(
    group: &PermutationGroup,
    allowed: A,
    mut test: T,
    budget: &Budget,
) -> Result<Option<Permutation>, BudgetExhausted>
where
    A: Fn(usize, usize) -> bool,
    T: FnMut(&Permutation) -> bool,
{
    let base = group.base();
    let partial = |img: &[usize]| allowed(base[img.len() - 1], img[img.len() - 1]);
    let mut walker = Walker { group, allowed: &partial, test: &mut test, budget, images: Vec::new() };
    walker.descend(0, Permutation::identity(group.degree()))
}

fn membership_mask(degree: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; degree];
    for &x in set {
        m[x] = true;
    }
    m
}

/// `{g in G : g(S) = S}` by backtracking with `S` at the front of the base.
pub fn set_stabilizer(group: &PermutationGroup, set: &[usize]) -> PermutationGroup {
    let degree = group.degree();
    let rebased = PermutationGroup::with_base_prefix(degree, group.generators(), set).expect("points in range");
    let inside = membership_mask(degree, set);
    subgroup_search(
        &rebased,
        |b, y| inside[b] == inside[y],
        |g| (0..degree).all(|x| inside[x] == inside[g.apply(x)]),
        &Budget::unlimited(),
    )
    .expect("unlimited budget")
}

/// Some `g in G` with `g(S) = T`.
pub fn set_image(group: &PermutationGroup, from: &[usize], to: &[usize]) -> Option<Permutation> {
    let degree = group.degree();
    if from.len() != to.len() {
        return None;
    }
    let rebased = PermutationGroup::with_base_prefix(degree, group.generators(), from).expect("points in range");
    let src = membership_mask(degree, from);
    let dst = membership_mask(degree, to);
    find_element(
        &rebased,
        |b, y| src[b] == dst[y],
        |g| (0..degree).all(|x| src[x] == dst[g.apply(x)]),
        &Budget::unlimited(),
    )
    .expect("unlimited budget")
}

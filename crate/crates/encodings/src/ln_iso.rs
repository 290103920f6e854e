use std::collections::HashSet;

use graph_core::{Budget, ColoredGraph};
use iso_engines::bounded_color_valence_iso_with;

use crate::search::{enumerate_maps, find_encoding_map_with};
use crate::{Encoding, EncodingError, Ln};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LnVerdict {
    Isomorphic,
    NonIsomorphic,
    /// Neither input could be encoded.
    Undetermined,
}

fn twins(enc: &Encoding, i: usize, j: usize) -> bool {
    (0..enc.k()).all(|x| enc.l(i, x) == enc.l(j, x) && enc.l(x, i) == enc.l(x, j))
}

/// Repeatedly merges two labels with equal `L` rows and columns. The budget
/// of a pair involving a merged label is twice the largest budget among the
/// pairs it replaces. Returns the merged encoding and the image of every
/// original label.
pub fn merge_twin_labels(enc: &Encoding) -> (Encoding, Vec<usize>) {
    let mut cur = enc.clone();
    let mut proj: Vec<usize> = (0..enc.k()).collect();
    'outer: loop {
        let k = cur.k();
        for i in 0..k {
            for j in i + 1..k {
                if !twins(&cur, i, j) {
                    continue;
                }
                let old = |x: usize| -> usize { if x < j { x } else { x + 1 } };
                let pre = |x: usize| -> Vec<usize> { if x == i { vec![i, j] } else { vec![old(x)] } };
                let mut next = Encoding::new(k - 1);
                for a in 0..k - 1 {
                    next.names[a] =
                        if a == i { format!("{}+{}", cur.name(i), cur.name(j)) } else { cur.name(old(a)).to_string() };
                    for b in 0..k - 1 {
                        next.set_l(a, b, cur.l(old(a), old(b)));
                        let ln = if a == i || b == i {
                            let mut worst = Some(0u32);
                            for &x in &pre(a) {
                                for &y in &pre(b) {
                                    worst = match (worst, cur.ln(x, y)) {
                                        (Some(w), Ln::Finite(v)) => Some(w.max(v)),
                                        _ => None,
                                    };
                                }
                            }
                            worst.map_or(Ln::Inf, |w| Ln::Finite(w.saturating_mul(2)))
                        } else {
                            cur.ln(old(a), old(b))
                        };
                        next.set_ln(a, b, ln);
                    }
                }
                for p in proj.iter_mut() {
                    *p = match (*p).cmp(&j) {
                        std::cmp::Ordering::Less => *p,
                        std::cmp::Ordering::Equal => i,
                        std::cmp::Ordering::Greater => *p - 1,
                    };
                }
                cur = next;
                continue 'outer;
            }
        }
        return (cur, proj);
    }
}

pub fn bounded_ln_iso(g1: &ColoredGraph, g2: &ColoredGraph, enc: &Encoding) -> Result<LnVerdict, EncodingError> {
    bounded_ln_iso_with(g1, g2, enc, &Budget::unlimited())
}

/// Isomorphism of uncolored graphs when one of them is encoded by `enc`,
/// which must have finite budgets only.
///
/// Twin labels are merged first. An encoding map `phi1` of one input is
/// found; an isomorphism must carry it to an encoding map of the other
/// input with the same image and class sizes. Those are enumerated by
/// fixing one representative per label and extending with the exception
/// budgets as pruning, and each is compared with the labeled first input
/// by the bounded color valence test.
pub fn bounded_ln_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    enc: &Encoding,
    budget: &Budget,
) -> Result<LnVerdict, EncodingError> {
    if !enc.all_finite() {
        return Err(EncodingError::InfiniteBudget);
    }
    let (enc, _) = merge_twin_labels(enc);
    let (mut a, mut b) = (g1.uncolored(), g2.uncolored());
    let phi1 = match find_encoding_map_with(&a, &enc, budget)?.map {
        Some(phi) => phi,
        None => match find_encoding_map_with(&b, &enc, budget)?.map {
            Some(phi) => {
                std::mem::swap(&mut a, &mut b);
                phi
            }
            None => return Ok(LnVerdict::Undetermined),
        },
    };
    let verdict = |iso: bool| if iso { LnVerdict::Isomorphic } else { LnVerdict::NonIsomorphic };
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(verdict(false));
    }
    let mut sizes = vec![0usize; enc.k()];
    for &x in &phi1 {
        sizes[x] += 1;
    }
    let image: Vec<usize> = (0..enc.k()).filter(|&x| sizes[x] > 0).collect();
    let c = image
        .iter()
        .flat_map(|&x| image.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| enc.ln(x, y).finite())
        .max()
        .unwrap_or(0) as usize;
    let labeled1 = a.with_colors(phi1.iter().map(|&x| x as u32).collect());

    let mut order: Vec<usize> = (0..b.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(b.degree(v)));
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::with_capacity(image.len());
    let found = try_reps(&b, &enc, &image, &sizes, &order, &mut reps, budget, &mut |phi2| {
        if !seen.insert(phi2.to_vec()) {
            return Ok(false);
        }
        let labeled2 = b.with_colors(phi2.iter().map(|&x| x as u32).collect());
        Ok(bounded_color_valence_iso_with(&labeled1, &labeled2, c, budget)?.is_some())
    })?;
    Ok(verdict(found))
}

/// Tries every choice of distinct representatives for the labels of
/// `image`, in order, and extends each to full maps.
#[allow(clippy::too_many_arguments)]
fn try_reps(
    g: &ColoredGraph,
    enc: &Encoding,
    image: &[usize],
    sizes: &[usize],
    order: &[usize],
    reps: &mut Vec<usize>,
    budget: &Budget,
    leaf: &mut dyn FnMut(&[usize]) -> Result<bool, EncodingError>,
) -> Result<bool, EncodingError> {
    if reps.len() == image.len() {
        let fixed: Vec<(usize, usize)> = reps.iter().copied().zip(image.iter().copied()).collect();
        let mut stop = false;
        enumerate_maps(g, enc, order, image, Some(sizes), &fixed, budget, &mut |phi| {
            stop = leaf(phi)?;
            Ok::<bool, EncodingError>(stop)
        })?;
        return Ok(stop);
    }
    for v in 0..g.n() {
        if reps.contains(&v) {
            continue;
        }
        reps.push(v);
        let stop = try_reps(g, enc, image, sizes, order, reps, budget, leaf)?;
        reps.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

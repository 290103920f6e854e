use crate::{Adj, Encoding, Ln};

fn chain3() -> Encoding {
    let mut e = Encoding::new(3);
    e.set_ln(0, 1, Ln::Inf);
    e.set_ln(1, 0, Ln::Finite(1));
    e.set_ln(1, 2, Ln::Finite(1));
    e.set_ln(2, 1, Ln::Finite(2));
    e
}

fn chain4() -> Encoding {
    let mut e = Encoding::new(4);
    e.set_ln(0, 1, Ln::Inf);
    e.set_ln(1, 0, Ln::Finite(1));
    e.set_ln(1, 2, Ln::Finite(1));
    e.set_ln(2, 1, Ln::Finite(1));
    e.set_ln(2, 3, Ln::Finite(1));
    e.set_ln(3, 2, Ln::Finite(2));
    e
}

/// The five built-in encodings, named after the graphs they exclude.
///
/// * `2k2k1-k4`: three labels, `A` only on `{p1, p3}`.
/// * `p6-p4p2-k4`: three labels, `A` on every pair of distinct labels.
/// * `h1030-k4`: three labels, `A` on `{p2, p3}` and `{p1, p3}`.
/// * `bip-2p3k1`: four labels, `A` only on `{p1, p4}`.
/// * `h1020-k5`: four labels, `N` on `{p1, p2}`, `{p3, p4}` and the diagonal.
///
/// The three-label encodings share the budget chain `∞, 1 / 1, 2` along
/// `p1 p2 p3`, the four-label ones the chain `∞, 1 / 1, 1 / 1, 2` along
/// `p1 p2 p3 p4`. All other budgets are 0.
pub fn builtin_encodings() -> Vec<(&'static str, Encoding)> {
    let mut a = chain3();
    a.set_l_sym(0, 2, Adj::A);

    let mut b = chain3();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                b.set_l(i, j, Adj::A);
            }
        }
    }

    let mut c = chain3();
    c.set_l_sym(1, 2, Adj::A);
    c.set_l_sym(0, 2, Adj::A);

    let mut d = chain4();
    d.set_l_sym(0, 3, Adj::A);

    let mut e = chain4();
    for i in 0..4 {
        for j in 0..4 {
            let pair = (i.min(j), i.max(j));
            if i != j && pair != (0, 1) && pair != (2, 3) {
                e.set_l(i, j, Adj::A);
            }
        }
    }

    vec![("2k2k1-k4", a), ("p6-p4p2-k4", b), ("h1030-k4", c), ("bip-2p3k1", d), ("h1020-k5", e)]
}

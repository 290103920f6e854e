use graph_core::{build_named, ColoredGraph, GraphFamily};

/// Builds a graph from a short name.
///
/// Grammar: terms joined by `+` (disjoint union); a term is an optional
/// multiplicity, an optional `co-` prefix (complement) and one of `K<t>`,
/// `K<s>,<t>`, `P<t>`, `C<t>`, `I<t>`, `H(<a_t>,...,<a_0>)`.
pub fn parse_named(spec: &str) -> Result<ColoredGraph, String> {
    let fam = parse_family(spec)?;
    build_named(&fam).map_err(|e| e.to_string())
}

fn parse_family(spec: &str) -> Result<GraphFamily, String> {
    let mut terms = Vec::new();
    for raw in split_top(spec.trim()) {
        let raw = raw.trim();
        let digits = raw.chars().take_while(|c| c.is_ascii_digit()).count();
        let (mult, rest) = if digits > 0 {
            (raw[..digits].parse::<usize>().map_err(|e| e.to_string())?, &raw[digits..])
        } else {
            (1, raw)
        };
        if mult == 0 {
            return Err(format!("zero multiplicity in {raw}"));
        }
        let atom = parse_atom(rest)?;
        for _ in 0..mult {
            terms.push(atom.clone());
        }
    }
    let mut it = terms.into_iter();
    let first = it.next().ok_or("empty graph name")?;
    Ok(it.fold(first, GraphFamily::union))
}

/// Splits on `+` outside parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_atom(s: &str) -> Result<GraphFamily, String> {
    if let Some(rest) = s.strip_prefix("co-") {
        return Ok(GraphFamily::complement_of(parse_atom(rest)?));
    }
    let mut chars = s.chars();
    let head = chars.next().ok_or("missing graph name")?;
    let body = chars.as_str();
    let nums = |b: &str| -> Result<Vec<usize>, String> {
        b.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad number in {s}"))).collect()
    };
    let one = |b: &str| -> Result<usize, String> {
        match nums(b)?.as_slice() {
            [t] => Ok(*t),
            _ => Err(format!("{s} takes one parameter")),
        }
    };
    Ok(match head {
        'K' => match nums(body)?.as_slice() {
            [t] => GraphFamily::Complete(*t),
            [a, b] => GraphFamily::Biclique(*a, *b),
            _ => return Err(format!("{s} takes one or two parameters")),
        },
        'P' => GraphFamily::Path(one(body)?),
        'C' => GraphFamily::Cycle(one(body)?),
        'I' => GraphFamily::Independent(one(body)?),
        'H' => {
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| format!("{s}: expected H(a_t,...,a_0)"))?;
            GraphFamily::SubdividedStar(nums(inner)?)
        }
        _ => return Err(format!("unknown graph name {s}")),
    })
}

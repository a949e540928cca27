//! Named small groups and permutation-generated groups.
//!
//! Labelling conventions:
//! - `Cn`: k is the residue k mod n.
//! - `Dn` (dihedral of order 2n): r^a s^b is a + n*b, with s r s = r^-1.
//! - `Q8`: sign s and unit u in (1, i, j, k) give 2*u + s, so 0 = 1 and 1 = -1.
//! - `CnxCm`: (a, b) is a + n*b, and longer products nest the same way. `V4` is `C2xC2`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;

pub fn cyclic(n: usize) -> Group {
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a + b) % n;
        }
    }
    Group::from_trusted(n, table).with_label(format!("C{n}"))
}

pub fn dihedral(n: usize) -> Group {
    let m = 2 * n;
    let mut table = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
            let e = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table[x * m + y] = e + n * ((b + d) % 2);
        }
    }
    Group::from_trusted(m, table).with_label(format!("D{n}"))
}

pub fn quaternion() -> Group {
    // unit products: (u, v) -> (sign, w) for units 1, i, j, k
    let unit = |u: usize, v: usize| -> (usize, usize) {
        match (u, v) {
            (0, w) | (w, 0) => (0, w),
            (a, b) if a == b => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (s, w) = unit(x / 2, y / 2);
            table[x * 8 + y] = 2 * w + ((x % 2 + y % 2 + s) % 2);
        }
    }
    Group::from_trusted(8, table).with_label("Q8")
}

pub fn cyclic_product(n: usize, m: usize) -> Group {
    cyclic(n).direct_product(&cyclic(m)).with_label(format!("C{n}xC{m}"))
}

/// Resolve a catalog name such as `C4`, `V4`, `S3`, `D4`, `Q8`, `C2xC4`.
pub fn named(name: &str) -> Result<Group> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let num = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 1);
    let g = match name {
        "V4" => cyclic_product(2, 2).with_label("V4"),
        "S3" => dihedral(3).with_label("S3"),
        "Q8" => quaternion(),
        "1" | "C1" | "trivial" => cyclic(1),
        _ => {
            let lower = name.replace('×', "x");
            if lower.contains('x') {
                let mut factors = lower.split('x').map(|f| f.strip_prefix('C').and_then(num));
                let first = factors.next().flatten().ok_or_else(unknown)?;
                let mut g = cyclic(first);
                for f in factors {
                    g = g.direct_product(&cyclic(f.ok_or_else(unknown)?));
                }
                g.with_label(lower)
            } else if let Some(k) = name.strip_prefix('C').and_then(num) {
                cyclic(k)
            } else if let Some(k) = name.strip_prefix('D').and_then(num).filter(|&k| k >= 2) {
                dihedral(k)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(g)
}

/// Names of the catalog groups up to `max_order`, one per listed construction.
pub fn catalog_names(max_order: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(16) {
        out.push(format!("C{n}"));
    }
    if max_order >= 4 {
        out.push("V4".into());
    }
    if max_order >= 6 {
        out.push("S3".into());
    }
    for n in 4..=8 {
        if 2 * n <= max_order {
            out.push(format!("D{n}"));
        }
    }
    if max_order >= 8 {
        out.push("Q8".into());
    }
    for n in 2..=8 {
        for m in n..=8 {
            if n * m <= max_order && n * m > 4 && m % n == 0 {
                out.push(format!("C{n}xC{m}"));
            }
        }
    }
    for name in ["C2xC2xC2", "C2xC2xC4", "C2xC2xC2xC2"] {
        if named(name).map(|g| g.order() <= max_order).unwrap_or(false) {
            out.push(name.into());
        }
    }
    out
}

/// Name of the first catalog group isomorphic to `g`, if any.
pub fn identify(g: &Group) -> Option<String> {
    if g.order() > 16 {
        return None;
    }
    let profile = g.order_profile();
    catalog_names(16).into_iter().find(|name| {
        let h = named(name).expect("catalog names resolve");
        h.order() == g.order()
            && h.order_profile() == profile
            && crate::group::isomorphic(g, &h, crate::group::DEFAULT_MAX_ORDER).ok().flatten().is_some()
    })
}

/// Parse a permutation in cycle notation over points 1..=n, e.g. `(1 2 3)(4 5)`.
pub fn parse_cycles(s: &str, n: usize) -> Result<Vec<usize>> {
    let bad = |msg: &str| Error::doc(0, format!("{msg}: {s}"));
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let pts: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
            .collect::<Result<_>>()?;
        if pts.iter().any(|&p| p == 0 || p > n) {
            return Err(bad("point out of range"));
        }
        for i in 0..pts.len() {
            perm[pts[i] - 1] = pts[(i + 1) % pts.len()] - 1;
        }
        rest = open[close + 1..].trim_start();
    }
    let mut seen = vec![false; n];
    for &p in &perm {
        if std::mem::replace(&mut seen[p], true) {
            return Err(bad("not a permutation"));
        }
    }
    Ok(perm)
}

/// The group generated by permutations of 0..n; elements sorted by image list.
pub fn permutation_group(n: usize, gens: &[Vec<usize>], max_order: usize) -> Result<Group> {
    let id: Vec<usize> = (0..n).collect();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
    let mut elems = vec![id.clone()];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(id, ())]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = compose(&elems[i], g);
            if !seen.contains_key(&y) {
                if elems.len() >= max_order {
                    return Err(Error::bound("permutation group order", elems.len() + 1, max_order));
                }
                seen.insert(y.clone(), ());
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort();
    let pos: HashMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let m = elems.len();
    let mut table = vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            // (a*b)(x) = a(b(x))
            table[a * m + b] = pos[&compose(&elems[a], &elems[b])];
        }
    }
    Ok(Group::from_trusted(m, table))
}

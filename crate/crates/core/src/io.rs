//! Line-oriented text documents.
//!
//! Every document starts with a header `extkit-<kind> v1`. Blank lines and `#` comments are ignored.
//! Composite documents are split into `[name]` sections. Tables are rows of whitespace-separated
//! element indices; cochains are `at <tuple> -> <value>` lines listing the nonzero entries.

use std::fmt::Write as _;
use std::path::Path;

use crate::catalog::{named, parse_cycles, permutation_group};
use crate::cochain::Cochain;
use crate::crossmod::CrossedModule;
use crate::error::{Error, Result};
use crate::factor::{FactorSystem, OuterActionLift};
use crate::group::{homomorphisms, Automorphism, Group, GroupMap};

pub const VERSION: &str = "v1";

#[derive(Clone, Debug)]
struct Line {
    no: usize,
    key: String,
    args: Vec<String>,
}

impl Line {
    fn usizes(&self) -> Result<Vec<usize>> {
        self.args
            .iter()
            .map(|a| a.parse().map_err(|_| Error::doc(self.no, format!("expected an index, found {a:?}"))))
            .collect()
    }

    fn single(&self) -> Result<usize> {
        match self.usizes()?.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::doc(self.no, format!("{} takes one number", self.key))),
        }
    }

    fn rest(&self) -> String {
        self.args.join(" ")
    }
}

/// A parsed document: the kind from the header and its sections in order.
#[derive(Clone, Debug)]
pub struct Doc {
    pub kind: String,
    sections: Vec<(String, Vec<Line>)>,
}

impl Doc {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, header) = lines.next().ok_or_else(|| Error::doc(1, "empty document"))?;
        let kind = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            [k, v] if k.starts_with("extkit-") && *v == VERSION => k["extkit-".len()..].to_string(),
            _ => return Err(Error::doc(no, format!("bad header {header:?}"))),
        };
        let mut sections: Vec<(String, Vec<Line>)> = vec![(String::new(), Vec::new())];
        for (no, l) in lines {
            if let Some(name) = l.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                sections.push((name.trim().to_string(), Vec::new()));
                continue;
            }
            let mut parts = l.split_whitespace().map(str::to_string);
            let key = parts.next().expect("nonempty line");
            sections.last_mut().unwrap().1.push(Line { no, key, args: parts.collect() });
        }
        Ok(Doc { kind, sections })
    }

    pub fn expect(self, kind: &str) -> Result<Self> {
        if self.kind != kind {
            return Err(Error::SchemaMismatch {
                expected: format!("extkit-{kind} {VERSION}"),
                found: format!("extkit-{} {VERSION}", self.kind),
            });
        }
        Ok(self)
    }

    fn section(&self, name: &str) -> Result<&[Line]> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, l)| l.as_slice())
            .ok_or_else(|| Error::doc(0, format!("missing section [{name}]")))
    }

    fn body(&self) -> &[Line] {
        &self.sections[0].1
    }
}

fn header(kind: &str) -> String {
    format!("extkit-{kind} {VERSION}\n")
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

// ---- groups

fn group_body(g: &Group) -> String {
    let mut s = String::new();
    if let Some(l) = g.label() {
        writeln!(s, "label {l}").unwrap();
    }
    writeln!(s, "order {}", g.order()).unwrap();
    for a in g.elements() {
        writeln!(s, "row {}", join(g.row(a))).unwrap();
    }
    s
}

fn parse_group_body(lines: &[Line]) -> Result<Group> {
    let mut order = None;
    let mut label = None;
    let mut rows = Vec::new();
    for l in lines {
        match l.key.as_str() {
            "order" => order = Some(l.single()?),
            "label" => label = Some(l.rest()),
            "row" => rows.push(l.usizes()?),
            _ => return Err(Error::doc(l.no, format!("unexpected key {:?}", l.key))),
        }
    }
    let order = order.ok_or_else(|| Error::doc(lines.first().map_or(0, |l| l.no), "missing order"))?;
    if rows.len() != order {
        return Err(Error::doc(lines.last().map_or(0, |l| l.no), format!("expected {order} rows, found {}", rows.len())));
    }
    let g = Group::from_table(&rows)?;
    Ok(match label {
        Some(l) => g.with_label(l),
        None => g,
    })
}

pub fn write_group(g: &Group) -> String {
    header("group") + &group_body(g)
}

pub fn parse_group(text: &str) -> Result<Group> {
    parse_group_body(Doc::parse(text)?.expect("group")?.body())
}

pub fn write_perm(points: usize, gens: &[String]) -> String {
    let mut s = header("perm");
    writeln!(s, "points {points}").unwrap();
    for g in gens {
        writeln!(s, "gen {g}").unwrap();
    }
    s
}

pub fn parse_perm(text: &str, max_order: usize) -> Result<Group> {
    let doc = Doc::parse(text)?.expect("perm")?;
    let mut points = None;
    let mut gens = Vec::new();
    for l in doc.body() {
        match l.key.as_str() {
            "points" => points = Some(l.single()?),
            "gen" => {
                let n = points.ok_or_else(|| Error::doc(l.no, "points must come before gen"))?;
                gens.push(parse_cycles(&l.rest(), n).map_err(|_| Error::doc(l.no, "bad cycle notation"))?);
            }
            _ => return Err(Error::doc(l.no, format!("unexpected key {:?}", l.key))),
        }
    }
    let n = points.ok_or_else(|| Error::doc(0, "missing points"))?;
    permutation_group(n, &gens, max_order)
}

/// A catalog name, or a path to a group or perm document.
pub fn resolve_group(spec: &str, max_order: usize) -> Result<Group> {
    let path = Path::new(spec);
    let g = if path.is_file() {
        let text = read_file(path)?;
        match Doc::parse(&text)?.kind.as_str() {
            "perm" => parse_perm(&text, max_order)?,
            _ => parse_group(&text)?,
        }
    } else {
        named(spec)?
    };
    if g.order() > max_order {
        return Err(Error::bound("group order", g.order(), max_order));
    }
    Ok(g)
}

// ---- cochains

fn cochain_body(c: &Cochain, coeff_order: usize) -> String {
    let mut s = String::new();
    writeln!(s, "degree {}", c.degree()).unwrap();
    writeln!(s, "order {}", c.group_order()).unwrap();
    writeln!(s, "coeff-order {coeff_order}").unwrap();
    for (t, v) in c.entries() {
        if v != 0 {
            writeln!(s, "at {} -> {v}", join(&t)).unwrap();
        }
    }
    s
}

fn parse_cochain_body(lines: &[Line]) -> Result<(Cochain, usize)> {
    let (mut degree, mut order, mut coeff) = (None, None, None);
    let mut entries = Vec::new();
    for l in lines {
        match l.key.as_str() {
            "degree" => degree = Some(l.single()?),
            "order" => order = Some(l.single()?),
            "coeff-order" => coeff = Some(l.single()?),
            "at" => {
                let arrow = l.args.iter().position(|a| a == "->").ok_or_else(|| Error::doc(l.no, "missing ->"))?;
                let sub = |a: &[String]| Line { no: l.no, key: "at".into(), args: a.to_vec() };
                let tuple = sub(&l.args[..arrow]).usizes()?;
                let value = sub(&l.args[arrow + 1..]).single()?;
                entries.push((l.no, tuple, value));
            }
            _ => return Err(Error::doc(l.no, format!("unexpected key {:?}", l.key))),
        }
    }
    let missing = |k: &str| Error::doc(lines.first().map_or(0, |l| l.no), format!("missing {k}"));
    let (degree, order, coeff) =
        (degree.ok_or_else(|| missing("degree"))?, order.ok_or_else(|| missing("order"))?, coeff.ok_or_else(|| missing("coeff-order"))?);
    if !(1..=3).contains(&degree) {
        return Err(Error::DegreeUnsupported(degree));
    }
    let mut c = Cochain::zero(degree, order);
    for (no, t, v) in entries {
        if t.len() != degree || t.iter().any(|&x| x >= order) {
            return Err(Error::doc(no, "tuple out of range"));
        }
        if v >= coeff {
            return Err(Error::doc(no, format!("value {v} out of range")));
        }
        if t.contains(&0) {
            if v != 0 {
                return Err(Error::NotNormalized { line: no });
            }
            continue;
        }
        c.set(&t, v);
    }
    Ok((c, coeff))
}

pub fn write_cochain(c: &Cochain, coeff_order: usize) -> String {
    header("cochain") + &cochain_body(c, coeff_order)
}

pub fn parse_cochain(text: &str) -> Result<(Cochain, usize)> {
    parse_cochain_body(Doc::parse(text)?.expect("cochain")?.body())
}

// ---- actions and lifts

fn maps_body(key: &str, maps: &[Automorphism]) -> String {
    maps.iter().map(|a| format!("{key} {}\n", join(a.forward()))).collect()
}

fn parse_maps(lines: &[Line], key: &str, src: &Group, count: usize) -> Result<Vec<Automorphism>> {
    let mut out = Vec::new();
    for l in lines {
        if l.key != key {
            return Err(Error::doc(l.no, format!("unexpected key {:?}", l.key)));
        }
        let images = l.usizes()?;
        if images.len() != src.order() || images.iter().any(|&x| x >= src.order()) {
            return Err(Error::doc(l.no, "image list has the wrong shape"));
        }
        out.push(Automorphism::from_images(src, images).map_err(|e| Error::doc(l.no, e.to_string()))?);
    }
    if out.len() != count {
        return Err(Error::doc(lines.last().map_or(0, |l| l.no), format!("expected {count} {key} lines, found {}", out.len())));
    }
    Ok(out)
}

pub fn write_action(s: &[Automorphism]) -> String {
    header("action") + &maps_body("s", s)
}

pub fn parse_action(text: &str, g: &Group, n: &Group) -> Result<Vec<Automorphism>> {
    parse_maps(Doc::parse(text)?.expect("action")?.body(), "s", n, g.order())
}

/// `trivial`, `central` (N abelian, trivial action), `inversion` (N abelian, inversion through
/// the first homomorphism G -> C2), or a path to an action document.
pub fn resolve_action(spec: &str, g: &Group, n: &Group) -> Result<Vec<Automorphism>> {
    let id = Automorphism::identity(n.order());
    match spec {
        "trivial" => Ok(vec![id; g.order()]),
        "central" => {
            n.check_abelian()?;
            Ok(vec![id; g.order()])
        }
        "inversion" => {
            n.check_abelian()?;
            let c2 = named("C2")?;
            let eps = homomorphisms(g, &c2)
                .into_iter()
                .find(|m| m.image.iter().any(|&x| x != 0))
                .ok_or_else(|| Error::KernelMismatch("no homomorphism onto C2 for the inversion action".into()))?;
            let inv = Automorphism::from_images(n, n.elements().map(|x| n.inv(x)).collect())?;
            Ok(g.elements().map(|x| if eps.apply(x) == 1 { inv.clone() } else { id.clone() }).collect())
        }
        _ => parse_action(&read_file(Path::new(spec))?, g, n),
    }
}

// ---- kernels and extensions

pub fn write_kernel(lift: &OuterActionLift) -> String {
    format!("{}[g]\n{}[n]\n{}[s]\n{}", header("kernel"), group_body(lift.g()), group_body(lift.n()), maps_body("s", lift.maps()))
}

pub fn parse_kernel(text: &str) -> Result<OuterActionLift> {
    let doc = Doc::parse(text)?.expect("kernel")?;
    let g = parse_group_body(doc.section("g")?)?;
    let n = parse_group_body(doc.section("n")?)?;
    let s = parse_maps(doc.section("s")?, "s", &n, g.order())?;
    OuterActionLift::new(&g, &n, s)
}

pub fn write_extension(fs: &FactorSystem) -> String {
    format!(
        "{}[g]\n{}[n]\n{}[s]\n{}[omega]\n{}",
        header("extension"),
        group_body(fs.g()),
        group_body(fs.n()),
        maps_body("s", fs.lift().maps()),
        cochain_body(fs.omega(), fs.n().order())
    )
}

/// Parses the factor system without requiring d_S omega = 1.
pub fn parse_extension(text: &str) -> Result<FactorSystem> {
    let doc = Doc::parse(text)?.expect("extension")?;
    let g = parse_group_body(doc.section("g")?)?;
    let n = parse_group_body(doc.section("n")?)?;
    let s = parse_maps(doc.section("s")?, "s", &n, g.order())?;
    let lines = doc.section("omega")?;
    let (omega, coeff) = parse_cochain_body(lines)?;
    if omega.degree() != 2 || omega.group_order() != g.order() || coeff != n.order() {
        return Err(Error::doc(lines.first().map_or(0, |l| l.no), "omega must be a 2-cochain on G with values in N"));
    }
    FactorSystem::new(OuterActionLift::new(&g, &n, s)?, omega)
}

/// An extension document for `fs` whose groups are given on the command line.
pub fn parse_factor_for(text: &str, g: &Group, n: &Group) -> Result<FactorSystem> {
    let fs = parse_extension(text)?;
    if fs.g() != g || fs.n() != n {
        return Err(Error::KernelMismatch("document groups differ from the command line".into()));
    }
    Ok(fs)
}

// ---- crossed modules

pub fn write_crossmod(cm: &CrossedModule) -> String {
    format!(
        "{}[h]\n{}[g]\n{}[alpha]\nmap {}\n[action]\n{}",
        header("crossmod"),
        group_body(&cm.h),
        group_body(&cm.g),
        join(&cm.alpha.image),
        maps_body("s", &cm.action)
    )
}

pub fn parse_crossmod(text: &str) -> Result<CrossedModule> {
    let doc = Doc::parse(text)?.expect("crossmod")?;
    let h = parse_group_body(doc.section("h")?)?;
    let g = parse_group_body(doc.section("g")?)?;
    let alpha_lines = doc.section("alpha")?;
    let alpha = match alpha_lines {
        [l] if l.key == "map" => {
            let image = l.usizes()?;
            if image.len() != h.order() || image.iter().any(|&x| x >= g.order()) {
                return Err(Error::doc(l.no, "alpha has the wrong shape"));
            }
            GroupMap { image }
        }
        _ => return Err(Error::doc(alpha_lines.first().map_or(0, |l| l.no), "[alpha] holds one map line")),
    };
    let action = parse_maps(doc.section("action")?, "s", &h, g.order())?;
    Ok(CrossedModule { h, g, alpha, action })
}

// ---- automorphism pairs

pub fn write_pair(phi: &Automorphism, psi: &Automorphism) -> String {
    format!("{}phi {}\npsi {}\n", header("pair"), join(phi.forward()), join(psi.forward()))
}

fn parse_pair_lines(lines: &[Line], g: &Group, n: &Group) -> Result<Vec<(Automorphism, Automorphism)>> {
    if !lines.len().is_multiple_of(2) {
        return Err(Error::doc(lines.last().map_or(0, |l| l.no), "phi and psi lines come in pairs"));
    }
    lines
        .chunks(2)
        .map(|c| {
            let phi = parse_maps(&c[..1], "phi", n, 1)?.remove(0);
            let psi = parse_maps(&c[1..], "psi", g, 1)?.remove(0);
            Ok((phi, psi))
        })
        .collect()
}

pub fn parse_pair(text: &str, g: &Group, n: &Group) -> Result<(Automorphism, Automorphism)> {
    let lines = Doc::parse(text)?.expect("pair")?.sections.remove(0).1;
    match parse_pair_lines(&lines, g, n)?.as_slice() {
        [p] => Ok(p.clone()),
        _ => Err(Error::doc(0, "a pair document holds one phi and one psi line")),
    }
}

/// One (phi, psi) pair per element of H, in element order.
pub fn write_pairs(pairs: &[(Automorphism, Automorphism)]) -> String {
    let mut s = header("pairs");
    for (phi, psi) in pairs {
        writeln!(s, "phi {}\npsi {}", join(phi.forward()), join(psi.forward())).unwrap();
    }
    s
}

pub fn parse_pairs(text: &str, g: &Group, n: &Group) -> Result<Vec<(Automorphism, Automorphism)>> {
    let lines = Doc::parse(text)?.expect("pairs")?.sections.remove(0).1;
    parse_pair_lines(&lines, g, n)
}

pub fn read(path: &Path) -> Result<String> {
    read_file(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, quaternion};

    #[test]
    fn group_round_trip() {
        let q8 = quaternion();
        let text = write_group(&q8);
        assert_eq!(parse_group(&text).unwrap(), q8);
        assert_eq!(write_group(&parse_group(&text).unwrap()), text);
    }

    #[test]
    fn cochain_round_trip_and_normalization() {
        let c = Cochain::from_fn(3, 4, |t| (t[0] + t[1] * t[2]) % 4);
        let text = write_cochain(&c, 4);
        assert_eq!(parse_cochain(&text).unwrap(), (c, 4));
        let bad = "extkit-cochain v1\ndegree 2\norder 2\ncoeff-order 2\nat 0 1 -> 1\n";
        assert_eq!(parse_cochain(bad), Err(Error::NotNormalized { line: 5 }));
    }

    #[test]
    fn schema_mismatch() {
        let text = write_group(&cyclic(2));
        assert!(matches!(parse_cochain(&text), Err(Error::SchemaMismatch { .. })));
        assert!(matches!(parse_group("extkit-group v2\n"), Err(Error::MalformedDocument { .. })));
    }
}

//! Line-oriented text formats for categories, algebras, links, matrices,
//! manifolds and classifier input. Blank lines and lines starting with `#`
//! are ignored; errors carry 1-based line and column.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::category::{by_name, pointed, tl, AbelianGroup, Backend, RibbonData};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;
use crate::link::{FramedLink, LinkBody, LinkingMatrix, Slice};
use crate::manifold::{builtin_manifold, HandlePresentation, ManifoldInvariants, Pi1};
use crate::scalar::expr::parse_expr_at;
use crate::scalar::CycScalar;

/// One meaningful line: either `key = value` or a bare payload line.
#[derive(Debug, Clone)]
struct Entry<'a> {
    line: usize,
    /// 1-based column where `text` (or the value, for key lines) starts.
    col: usize,
    key: Option<&'a str>,
    text: &'a str,
}

impl Entry<'_> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::parse(self.line, self.col, reason)
    }

    fn parse<T: FromStr>(&self, what: &str) -> Result<T> {
        self.text.parse().map_err(|_| self.err(format!("expected {what}, found `{}`", self.text)))
    }

    /// Comma-separated pieces with their columns.
    fn list(&self) -> Vec<(usize, &str)> {
        if self.text.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut start = 0;
        for piece in self.text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            out.push((self.col + start + lead, piece.trim()));
            start += piece.len() + 1;
        }
        out
    }

    fn ints<T: FromStr>(&self, what: &str) -> Result<Vec<T>> {
        self.list()
            .into_iter()
            .map(|(col, s)| s.parse().map_err(|_| Error::parse(self.line, col, format!("expected {what}, found `{s}`"))))
            .collect()
    }

    fn scalar(&self, order: u64) -> Result<CycScalar> {
        parse_expr_at(self.text, order, self.line, self.col)
    }

    fn vector(&self, order: u64, len: usize) -> Result<Vec<CycScalar>> {
        let items = self.list();
        if items.len() != len {
            return Err(self.err(format!("expected {len} entries, found {}", items.len())));
        }
        items.into_iter().map(|(col, s)| parse_expr_at(s, order, self.line, col)).collect()
    }
}

fn entries(text: &str) -> Result<Vec<Entry<'_>>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = raw.len() - raw.trim_start().len();
        let line = k + 1;
        match raw.find('=') {
            Some(eq) => {
                let key = raw[..eq].trim();
                if key.is_empty() {
                    return Err(Error::parse(line, lead + 1, "missing key before `=`"));
                }
                let after = &raw[eq + 1..];
                let vlead = after.len() - after.trim_start().len();
                out.push(Entry { line, col: eq + 2 + vlead, key: Some(key), text: after.trim() });
            }
            None => out.push(Entry { line, col: lead + 1, key: None, text: trimmed }),
        }
    }
    Ok(out)
}

/// Key lines of a document, indexed by key, plus the bare lines in order.
struct Doc<'a> {
    keys: HashMap<&'a str, Entry<'a>>,
    order: Vec<&'a str>,
    bare: Vec<Entry<'a>>,
    end_line: usize,
}

impl<'a> Doc<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut doc = Doc { keys: HashMap::new(), order: Vec::new(), bare: Vec::new(), end_line: text.lines().count().max(1) };
        for e in entries(text)? {
            match e.key {
                Some(k) => {
                    if let Some(prev) = doc.keys.get(k) {
                        return Err(Error::parse(e.line, 1, format!("duplicate key `{k}` (first on line {})", prev.line)));
                    }
                    doc.order.push(k);
                    doc.keys.insert(k, e);
                }
                None => doc.bare.push(e),
            }
        }
        Ok(doc)
    }

    fn get(&self, key: &str) -> Option<&Entry<'a>> {
        self.keys.get(key)
    }

    fn require(&self, key: &str) -> Result<&Entry<'a>> {
        self.get(key).ok_or_else(|| Error::parse(self.end_line, 1, format!("missing key `{key}`")))
    }

    /// Rejects keys not accepted by `allowed`, and any bare lines.
    fn only(&self, allowed: impl Fn(&str) -> bool) -> Result<()> {
        for k in &self.order {
            if !allowed(k) {
                let e = &self.keys[k];
                return Err(Error::parse(e.line, 1, format!("unexpected key `{k}`")));
            }
        }
        if let Some(e) = self.bare.first() {
            return Err(e.err(format!("expected `key = value`, found `{}`", e.text)));
        }
        Ok(())
    }
}

fn located(e: Error, at: &Entry) -> Error {
    match e {
        Error::Parse { .. } | Error::InvariantViolation { .. } => e,
        other => at.err(other.to_string()),
    }
}

/// `kind = pointed|tl|generic`, or a builtin name such as `svect`, `toric`,
/// `semion`, `tl(4)` or `z(4,1)`.
pub fn parse_category(text: &str) -> Result<RibbonData> {
    let doc = Doc::new(text)?;
    let kind = doc.require("kind")?;
    let name = doc.get("name").map(|e| e.text.to_string());
    match kind.text {
        "pointed" => {
            doc.only(|k| matches!(k, "kind" | "name" | "order" | "group") || k.starts_with("theta."))?;
            let order: u64 = doc.require("order")?.parse("a positive order")?;
            let group_e = doc.require("group")?;
            let group = AbelianGroup::new(group_e.ints("a cyclic factor")?);
            let mut theta = Vec::with_capacity(group.size());
            for x in 0..group.size() {
                let label = group.default_label(x);
                let e = doc
                    .get(&format!("theta.{label}"))
                    .ok_or_else(|| group_e.err(format!("missing theta.{label}")))?;
                theta.push(e.scalar(order)?);
            }
            pointed(name.unwrap_or_else(|| "pointed".into()), group, None, theta).map_err(|e| located(e, group_e))
        }
        "tl" => {
            doc.only(|k| matches!(k, "kind" | "name" | "order" | "level_r" | "root_power"))?;
            let r_e = doc.require("level_r")?;
            let r: u64 = r_e.parse("an integer level")?;
            let k: u64 = match doc.get("root_power") {
                Some(e) => e.parse("an integer root power")?,
                None => 1,
            };
            let mut cat = tl(r, k).map_err(|e| located(e, r_e))?;
            if let Some(e) = doc.get("order") {
                let o: u64 = e.parse("a positive order")?;
                if o != cat.order {
                    return Err(e.err(format!("tl at level {r} lives at order {}", cat.order)));
                }
            }
            if let Some(n) = name {
                cat.name = n;
            }
            Ok(cat)
        }
        "generic" => parse_generic(&doc, name),
        other => {
            doc.only(|k| matches!(k, "kind" | "name"))?;
            let mut cat = by_name(other).map_err(|e| located(e, kind))?;
            if let Some(n) = name {
                cat.name = n;
            }
            Ok(cat)
        }
    }
}

fn parse_generic(doc: &Doc, name: Option<String>) -> Result<RibbonData> {
    doc.only(|k| {
        matches!(k, "kind" | "name" | "order" | "simples" | "unit")
            || ["dual.", "N.", "dim.", "twist.", "S."].iter().any(|p| k.starts_with(p))
    })?;
    let order: u64 = doc.require("order")?.parse("a positive order")?;
    let simples_e = doc.require("simples")?;
    let labels: Vec<String> = simples_e.list().into_iter().map(|(_, s)| s.to_string()).collect();
    let n = labels.len();
    let index = |e: &Entry, s: &str| -> Result<usize> {
        labels.iter().position(|l| l == s).ok_or_else(|| e.err(format!("unknown simple `{s}`")))
    };
    let unit = match doc.get("unit") {
        Some(e) => index(e, e.text)?,
        None => 0,
    };
    let need = |key: String| doc.get(&key).ok_or_else(|| simples_e.err(format!("missing {key}")));
    let mut dual = Vec::with_capacity(n);
    let mut dims = Vec::with_capacity(n);
    let mut twists = Vec::with_capacity(n);
    for x in &labels {
        let e = need(format!("dual.{x}"))?;
        dual.push(index(e, e.text)?);
        dims.push(need(format!("dim.{x}"))?.scalar(order)?);
        twists.push(need(format!("twist.{x}"))?.scalar(order)?);
    }
    let mut fusion = vec![vec![vec![0u32; n]; n]; n];
    let mut smatrix = vec![vec![CycScalar::zero(order); n]; n];
    for (a, x) in labels.iter().enumerate() {
        for (b, y) in labels.iter().enumerate() {
            smatrix[a][b] = need(format!("S.{x}.{y}"))?.scalar(order)?;
            for (c, z) in labels.iter().enumerate() {
                if let Some(e) = doc.get(&format!("N.{x}.{y}.{z}")) {
                    fusion[a][b][c] = e.parse("a fusion multiplicity")?;
                }
            }
        }
    }
    // every key must name known simples
    for k in &doc.order {
        let parts: Vec<&str> = k.split('.').collect();
        if parts.len() > 1 && parts[1..].iter().any(|p| !labels.iter().any(|l| l == p)) {
            return Err(Error::parse(doc.keys[k].line, 1, format!("key `{k}` names an unknown simple")));
        }
    }
    RibbonData::from_parts(
        name.unwrap_or_else(|| "generic".into()),
        order,
        labels,
        unit,
        dual,
        fusion,
        dims,
        twists,
        smatrix,
        Backend::Generic,
    )
    .map_err(|e| located(e, simples_e))
}

/// `order`, `basis`, `m.a.b = <vector>` (missing products are zero),
/// `unit = <vector>`, `counit = <vector>`.
pub fn parse_algebra(text: &str) -> Result<FrobeniusAlgebra> {
    let doc = Doc::new(text)?;
    doc.only(|k| matches!(k, "order" | "basis" | "unit" | "counit") || k.starts_with("m."))?;
    let order: u64 = doc.require("order")?.parse("a positive order")?;
    let basis_e = doc.require("basis")?;
    let labels: Vec<String> = basis_e.list().into_iter().map(|(_, s)| s.to_string()).collect();
    let n = labels.len();
    if n == 0 {
        return Err(basis_e.err("basis is empty"));
    }
    for k in doc.order.iter().filter(|k| k.starts_with("m.")) {
        let parts: Vec<&str> = k.split('.').collect();
        if parts.len() != 3 || !parts[1..].iter().all(|p| labels.iter().any(|l| l == p)) {
            return Err(Error::parse(doc.keys[k].line, 1, format!("key `{k}` is not m.<basis>.<basis>")));
        }
    }
    let mut mult = Vec::with_capacity(n * n * n);
    for x in &labels {
        for y in &labels {
            match doc.get(&format!("m.{x}.{y}")) {
                Some(e) => mult.extend(e.vector(order, n)?),
                None => mult.extend((0..n).map(|_| CycScalar::zero(order))),
            }
        }
    }
    let unit = doc.require("unit")?.vector(order, n)?;
    let counit = doc.require("counit")?.vector(order, n)?;
    FrobeniusAlgebra::new(labels, mult, unit, counit).map_err(|e| located(e, basis_e))
}

fn link_from(doc: &Doc) -> Result<FramedLink> {
    if let Some(e) = doc.get("strands_start") {
        if e.text != "0" {
            return Err(e.err("diagrams start with 0 strands"));
        }
    }
    let mut slices = Vec::with_capacity(doc.bare.len());
    let mut width = 0usize;
    for e in &doc.bare {
        let mut it = e.text.split_whitespace();
        let op = it.next().unwrap_or_default();
        let pos_text = it.next().ok_or_else(|| e.err(format!("`{op}` needs a strand position")))?;
        if it.next().is_some() {
            return Err(e.err("trailing input after the strand position"));
        }
        let pos: usize = pos_text.parse().ok().filter(|&p| p >= 1).ok_or_else(|| {
            e.err(format!("strand positions are 1-based integers, found `{pos_text}`"))
        })?;
        let slice = match op {
            "cup" => Slice::Cup(pos - 1),
            "cap" => Slice::Cap(pos - 1),
            "x+" => Slice::Cross(pos - 1, true),
            "x-" => Slice::Cross(pos - 1, false),
            _ => return Err(e.err(format!("unknown slice `{op}` (expected cup, cap, x+ or x-)"))),
        };
        width = slice.width_after(width).ok_or_else(|| e.err(format!("`{}` does not fit {width} strands", e.text)))?;
        slices.push(slice);
    }
    let fr = doc.require("framing")?;
    if width != 0 {
        return Err(fr.err(format!("{width} strands are still open at the end of the diagram")));
    }
    let framings: Vec<i64> = fr.ints("an integer framing")?;
    FramedLink::new(slices, framings).map_err(|e| fr.err(e.to_string()))
}

fn matrix_from(doc: &Doc) -> Result<LinkingMatrix> {
    let n_e = doc.require("n")?;
    let n: usize = n_e.parse("a matrix size")?;
    if doc.bare.len() != n {
        return Err(n_e.err(format!("expected {n} rows, found {}", doc.bare.len())));
    }
    let mut q = Vec::with_capacity(n);
    for e in &doc.bare {
        let mut row = Vec::with_capacity(n);
        let mut offset = 0;
        for tok in e.text.split_whitespace() {
            let at = e.text[offset..].find(tok).map(|i| i + offset).unwrap_or(offset);
            offset = at + tok.len();
            let v: i64 =
                tok.parse().map_err(|_| Error::parse(e.line, e.col + at, format!("expected an integer, found `{tok}`")))?;
            row.push(v);
        }
        if row.len() != n {
            return Err(e.err(format!("expected {n} entries, found {}", row.len())));
        }
        q.push(row);
    }
    LinkingMatrix::new(q)
}

/// `strands_start = 0`, slice lines `cup i`, `cap i`, `x+ i`, `x- i`
/// (1-based), then `framing = f1,f2,...`.
pub fn parse_link(text: &str) -> Result<FramedLink> {
    let doc = Doc::new(text)?;
    doc.only_keys(&["strands_start", "framing"])?;
    link_from(&doc)
}

/// `n = size`, then `size` rows of integers.
pub fn parse_matrix(text: &str) -> Result<LinkingMatrix> {
    let doc = Doc::new(text)?;
    doc.only_keys(&["n"])?;
    matrix_from(&doc)
}

impl Doc<'_> {
    fn only_keys(&self, allowed: &[&str]) -> Result<()> {
        for k in &self.order {
            if !allowed.contains(k) {
                return Err(Error::parse(self.keys[k].line, 1, format!("unexpected key `{k}`")));
            }
        }
        Ok(())
    }
}

/// `kind = link|matrix`, optional `name`, `h1`, `h3`, then the payload.
pub fn parse_manifold(text: &str) -> Result<HandlePresentation> {
    let doc = Doc::new(text)?;
    let kind = doc.require("kind")?;
    let body = match kind.text {
        "link" => {
            doc.only_keys(&["kind", "name", "h1", "h3", "strands_start", "framing"])?;
            LinkBody::Diagram(link_from(&doc)?)
        }
        "matrix" => {
            doc.only_keys(&["kind", "name", "h1", "h3", "n"])?;
            LinkBody::Matrix(matrix_from(&doc)?)
        }
        other => return Err(kind.err(format!("unknown manifold kind `{other}` (expected link or matrix)"))),
    };
    let count = |k: &str| -> Result<u32> { doc.get(k).map_or(Ok(0), |e| e.parse("a handle count")) };
    Ok(HandlePresentation {
        body,
        h1: count("h1")?,
        h3: count("h3")?,
        name: doc.get("name").map(|e| e.text.to_string()),
    })
}

/// `chi`, `sigma`, `spin` (true/false), optional `pi1` (trivial or Z).
pub fn parse_invariants(text: &str) -> Result<ManifoldInvariants> {
    let doc = Doc::new(text)?;
    doc.only(|k| matches!(k, "chi" | "sigma" | "spin" | "pi1"))?;
    let spin_e = doc.require("spin")?;
    let spin = match spin_e.text {
        "true" | "yes" => true,
        "false" | "no" => false,
        other => return Err(spin_e.err(format!("expected true or false, found `{other}`"))),
    };
    let pi1 = match doc.get("pi1") {
        None => Pi1::Trivial,
        Some(e) => parse_pi1(e.text).ok_or_else(|| e.err(format!("expected trivial or Z, found `{}`", e.text)))?,
    };
    Ok(ManifoldInvariants {
        chi: doc.require("chi")?.parse("an integer")?,
        sigma: doc.require("sigma")?.parse("an integer")?,
        spin,
        pi1,
    })
}

pub fn parse_pi1(s: &str) -> Option<Pi1> {
    match s {
        "trivial" | "1" => Some(Pi1::Trivial),
        "Z" | "z" => Some(Pi1::Z),
        _ => None,
    }
}

pub fn render_link(l: &FramedLink) -> String {
    let mut out = String::from("strands_start = 0\n");
    for s in l.slices() {
        let _ = match *s {
            Slice::Cup(i) => writeln!(out, "cup {}", i + 1),
            Slice::Cap(i) => writeln!(out, "cap {}", i + 1),
            Slice::Cross(i, true) => writeln!(out, "x+ {}", i + 1),
            Slice::Cross(i, false) => writeln!(out, "x- {}", i + 1),
        };
    }
    let f: Vec<String> = l.framings().iter().map(i64::to_string).collect();
    let _ = writeln!(out, "framing = {}", f.join(","));
    out
}

pub fn render_matrix(q: &LinkingMatrix) -> String {
    let mut out = format!("n = {}\n", q.size());
    for row in q.entries() {
        let r: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&r.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_manifold(p: &HandlePresentation) -> String {
    let mut out = String::new();
    let (kind, payload) = match &p.body {
        LinkBody::Diagram(l) => ("link", render_link(l)),
        LinkBody::Matrix(q) => ("matrix", render_matrix(q)),
    };
    let _ = writeln!(out, "kind = {kind}");
    if let Some(n) = &p.name {
        let _ = writeln!(out, "name = {n}");
    }
    if p.h1 != 0 {
        let _ = writeln!(out, "h1 = {}", p.h1);
    }
    if p.h3 != 0 {
        let _ = writeln!(out, "h3 = {}", p.h3);
    }
    out.push_str(&payload);
    out
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

/// A category from a file, or `builtin:<name>`.
pub fn load_category(arg: &str) -> Result<RibbonData> {
    match arg.strip_prefix("builtin:") {
        Some(name) => by_name(name),
        None => parse_category(&read(arg)?),
    }
}

/// A presentation from a file, or `builtin:<S4|CP2|CP2bar|S2xS2|K3>`.
pub fn load_manifold(arg: &str) -> Result<HandlePresentation> {
    match arg.strip_prefix("builtin:") {
        Some(name) => builtin_manifold(name),
        None => parse_manifold(&read(arg)?),
    }
}

pub fn load_algebra(arg: &str) -> Result<FrobeniusAlgebra> {
    parse_algebra(&read(arg)?)
}

pub fn load_invariants(arg: &str) -> Result<ManifoldInvariants> {
    parse_invariants(&read(arg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::svect;

    #[test]
    fn builtin_shorthand() {
        let r = parse_category("kind = svect\n").unwrap();
        assert_eq!(r.labels, svect().labels);
        assert_eq!(r.twists, svect().twists);
    }

    #[test]
    fn pointed_file() {
        let text = "kind = pointed\norder = 4\ngroup = 2\ntheta.0 = 1\ntheta.1 = z\n";
        let r = parse_category(text).unwrap();
        assert_eq!(r.twists[1], CycScalar::zeta(4));
        assert!(r.validate().all_passed());
        let bad = "kind = pointed\norder = 4\ngroup = 2\ntheta.0 = 1\n";
        assert!(matches!(parse_category(bad), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn generic_file_matches_builtin() {
        let text = "\
kind = generic
order = 2
simples = 1, f
dual.1 = 1
dual.f = f
N.1.1.1 = 1
N.1.f.f = 1
N.f.1.f = 1
N.f.f.1 = 1
dim.1 = 1
dim.f = 1
twist.1 = 1
twist.f = -1
S.1.1 = 1
S.1.f = 1
S.f.1 = 1
S.f.f = 1
";
        let r = parse_category(text).unwrap();
        assert!(r.validate().all_passed());
        assert_eq!(r.fusion, svect().fusion);
        assert!(r.has_fermion().unwrap());
    }

    #[test]
    fn tl_file() {
        let r = parse_category("kind = tl\nlevel_r = 4\nroot_power = 1\n").unwrap();
        assert_eq!(r.order, 16);
        let e = parse_category("kind = tl\nlevel_r = 4\norder = 12\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn algebra_file() {
        let text = "order = 1\nbasis = e, g\nm.e.e = 1, 0\nm.e.g = 0, 1\nm.g.e = 0, 1\nm.g.g = 1, 0\nunit = 1, 0\ncounit = 1, 0\n";
        let a = parse_algebra(text).unwrap();
        assert!(a.is_semisimple().unwrap());
        let e = parse_algebra("order = 1\nbasis = e\nunit = 1, 0\ncounit = 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn matrices() {
        let q = parse_matrix("n = 2\n0 1\n1 0\n").unwrap();
        assert_eq!(q.entries(), &[vec![0, 1], vec![1, 0]]);
        let e = parse_matrix("n = 2\n0 1\n2 0\n").unwrap_err();
        assert!(matches!(e, Error::InvariantViolation { ref invariant, .. } if invariant == "symmetry"));
        let e = parse_matrix("n = 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e, Error::parse(3, 3, "expected an integer, found `x`"));
    }

    #[test]
    fn links_round_trip() {
        let text = "strands_start = 0\ncup 1\ncup 3\nx- 2\nx- 2\ncap 1\ncap 1\nframing = 0,0\n";
        let l = parse_link(text).unwrap();
        assert_eq!(l, FramedLink::hopf(0, 0));
        assert_eq!(render_link(&l), text);
        let slid = l.handle_slide(0, 1, 1).unwrap().link;
        assert_eq!(parse_link(&render_link(&slid)).unwrap(), slid);
    }

    #[test]
    fn link_errors_are_located() {
        let e = parse_link("strands_start = 0\ncup 1\ncap 2\nframing = 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_link("strands_start = 0\ncup 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_link("strands_start = 0\ncup 1\ncap 1\nframing = 0,1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        let e = parse_link("strands_start = 0\ncup 1\nframing = 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn manifolds_round_trip() {
        for name in ["S4", "CP2", "CP2bar", "S2xS2", "K3"] {
            let p = builtin_manifold(name).unwrap();
            assert_eq!(parse_manifold(&render_manifold(&p)).unwrap(), p);
        }
        let p = parse_manifold("kind = matrix\nname = CP2 # CP2bar\nn = 2\n1 0\n0 -1\n").unwrap();
        assert_eq!(p.name.as_deref(), Some("CP2 # CP2bar"));
        assert!(parse_manifold("kind = surface\n").is_err());
    }

    #[test]
    fn invariants_file() {
        let inv = parse_invariants("chi = 24\nsigma = -16\nspin = true\n").unwrap();
        assert_eq!(inv, ManifoldInvariants::simply_connected(24, -16, true));
        let inv = parse_invariants("chi = 0\nsigma = 0\nspin = false\npi1 = Z\n").unwrap();
        assert_eq!(inv.pi1, Pi1::Z);
        assert!(matches!(parse_invariants("chi = 2\nsigma = 0\nspin = maybe\n"), Err(Error::Parse { line: 3, .. })));
    }
}

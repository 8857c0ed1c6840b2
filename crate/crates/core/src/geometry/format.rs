//! Text formats for scenes, unit disk realizations and vector pairs.
//!
//! ```text
//! scene <d> <np> <nh>     udg <n> <r>      vectors <d> <nU> <nW>
//! p <c1> .. <cd>          p <x> <y>        a <c1> .. <cd>
//! h <w1> .. <wd> <t>                       b <c1> .. <cd>
//! ```
//!
//! Numbers are `num/den`, integers or decimals, parsed exactly for rationals.

use std::fmt::Write as _;

use crate::graph::format::{content_lines, syntax, FormatError};
use crate::scalar::Scalar;

use super::{GeometryError, Halfspace, Scene, UdgRealization};

fn int(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected an integer, got `{tok}`")))
}

fn scalars<T: Scalar>(line: usize, toks: &[&str]) -> Result<Vec<T>, FormatError> {
    toks.iter()
        .map(|t| T::parse_scalar(t).ok_or_else(|| syntax(line, format!("bad number `{t}`"))))
        .collect()
}

fn join<T: Scalar>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn count(line: usize, what: &str, expected: usize, found: usize) -> Result<(), FormatError> {
    if expected == found {
        Ok(())
    } else {
        Err(syntax(line, format!("header announces {expected} {what}, found {found}")))
    }
}

pub fn parse_scene<T: Scalar>(text: &str) -> Result<Scene<T>, GeometryError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let ["scene", d, np, nh] = header.as_slice() else {
        return Err(syntax(hl, "expected `scene d np nh`").into());
    };
    let (d, np, nh) = (int(hl, d)?, int(hl, np)?, int(hl, nh)?);
    let (mut points, mut halfspaces) = (Vec::new(), Vec::new());
    for (ln, toks) in lines {
        match toks[0] {
            "p" if toks.len() == d + 1 => points.push(scalars(ln, &toks[1..])?),
            "h" if toks.len() == d + 2 => {
                let mut v = scalars::<T>(ln, &toks[1..])?;
                let t = v.pop().unwrap();
                halfspaces.push(Halfspace::new(v, t));
            }
            _ => return Err(syntax(ln, format!("expected `p` with {d} or `h` with {} numbers", d + 1)).into()),
        }
    }
    count(hl, "points", np, points.len())?;
    count(hl, "halfspaces", nh, halfspaces.len())?;
    Scene::new(d, points, halfspaces)
}

pub fn write_scene<T: Scalar>(s: &Scene<T>) -> String {
    let mut out = format!("scene {} {} {}\n", s.dim(), s.points().len(), s.halfspaces().len());
    for p in s.points() {
        writeln!(out, "p {}", join(p)).unwrap();
    }
    for h in s.halfspaces() {
        writeln!(out, "h {} {}", join(&h.normal), h.threshold).unwrap();
    }
    out
}

pub fn parse_udg<T: Scalar>(text: &str) -> Result<UdgRealization<T>, GeometryError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let ["udg", n, r] = header.as_slice() else {
        return Err(syntax(hl, "expected `udg n r`").into());
    };
    let n = int(hl, n)?;
    let r = T::parse_scalar(r).ok_or_else(|| syntax(hl, format!("bad radius `{r}`")))?;
    let mut points = Vec::new();
    for (ln, toks) in lines {
        if toks.len() != 3 || toks[0] != "p" {
            return Err(syntax(ln, "expected `p x y`").into());
        }
        let mut v = scalars::<T>(ln, &toks[1..])?.into_iter();
        points.push([v.next().unwrap(), v.next().unwrap()]);
    }
    count(hl, "points", n, points.len())?;
    UdgRealization::new(points, r)
}

pub fn write_udg<T: Scalar>(u: &UdgRealization<T>) -> String {
    let mut out = format!("udg {} {}\n", u.points().len(), u.radius());
    for [x, y] in u.points() {
        writeln!(out, "p {x} {y}").unwrap();
    }
    out
}

/// Row vectors `a` and column vectors `b` of a sign matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorPair<T> {
    pub a: Vec<Vec<T>>,
    pub b: Vec<Vec<T>>,
}

pub fn parse_vectors<T: Scalar>(text: &str) -> Result<VectorPair<T>, GeometryError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let ["vectors", d, nu, nw] = header.as_slice() else {
        return Err(syntax(hl, "expected `vectors d nU nW`").into());
    };
    let (d, nu, nw) = (int(hl, d)?, int(hl, nu)?, int(hl, nw)?);
    let mut out = VectorPair { a: Vec::new(), b: Vec::new() };
    for (ln, toks) in lines {
        let target = match toks[0] {
            "a" => &mut out.a,
            "b" => &mut out.b,
            _ => return Err(syntax(ln, "expected `a` or `b`").into()),
        };
        if toks.len() != d + 1 {
            return Err(syntax(ln, format!("expected {d} coordinates")).into());
        }
        target.push(scalars(ln, &toks[1..])?);
    }
    count(hl, "rows", nu, out.a.len())?;
    count(hl, "columns", nw, out.b.len())?;
    Ok(out)
}

pub fn write_vectors<T: Scalar>(v: &VectorPair<T>) -> String {
    let d = v.a.first().or(v.b.first()).map_or(0, Vec::len);
    let mut out = format!("vectors {d} {} {}\n", v.a.len(), v.b.len());
    for x in &v.a {
        writeln!(out, "a {}", join(x)).unwrap();
    }
    for y in &v.b {
        writeln!(out, "b {}", join(y)).unwrap();
    }
    out
}

//! Text forms for groups and their elements.
//!
//! Groups: `sym:n`, `alt:n`, `cyc:n`, `prod:cyc:3,cyc:3`, `p3:p`,
//! `pq:p,q,r`, `gens:n:(..)(..);(..)`.
//!
//! Elements: cycle notation for permutation groups; `(x,y,..)` tuples for
//! abelian groups and the `p3`/`pq` normal forms; words such as
//! `b^-1 a^-1` over the named generators of `p3` (`a`, `b`, `c`, `z`) and
//! `pq` (`a`, `b`); `[x;y]` for general direct products.

use std::fmt;
use std::str::FromStr;

use super::{Element, Group, GroupKind, Perm};
use crate::error::{Error, Result};

const KINDS: [&str; 7] = ["sym:", "alt:", "cyc:", "prod:", "p3:", "pq:", "gens:"];

fn number<T: FromStr>(text: &str, offset: usize) -> Result<T> {
    text.trim()
        .parse::<T>()
        .map_err(|_| Error::parse(offset, format!("expected a number, found '{}'", text.trim())))
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(text: &str) -> Result<Group> {
        let text = text.trim();
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(0, format!("group spec '{text}' lacks a kind prefix")))?;
        let off = kind.len() + 1;
        match kind {
            "sym" => Group::symmetric(number(rest, off)?),
            "alt" => Group::alternating(number(rest, off)?),
            "cyc" => Group::cyclic(number(rest, off)?),
            "p3" => Group::heisenberg(number(rest, off)?),
            "pq" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 3 {
                    return Err(Error::parse(off, "pq expects p,q,r"));
                }
                Group::metacyclic(number(parts[0], off)?, number(parts[1], off)?, number(parts[2], off)?)
            }
            "gens" => {
                let (deg, gens) =
                    rest.split_once(':').ok_or_else(|| Error::parse(off, "gens expects gens:n:(..);(..)"))?;
                let degree: usize = number(deg, off)?;
                let start = off + deg.len() + 1;
                let mut perms = Vec::new();
                let mut pos = start;
                for g in gens.split(';') {
                    let p = Perm::parse(g, degree).map_err(|e| match e {
                        Error::Parse { position, message } => Error::parse(pos + position, message),
                        other => other,
                    })?;
                    perms.push(p);
                    pos += g.len() + 1;
                }
                Group::generated(degree, perms)
            }
            "prod" => {
                // Factor specs contain commas themselves (pq:7,3,2 or cycles),
                // so split on commas that start a new kind prefix.
                let mut factors: Vec<String> = Vec::new();
                for piece in rest.split(',') {
                    let starts_kind = KINDS.iter().any(|k| piece.trim_start().starts_with(k));
                    match factors.last_mut() {
                        Some(last) if !starts_kind => {
                            last.push(',');
                            last.push_str(piece);
                        }
                        _ => factors.push(piece.to_string()),
                    }
                }
                let groups = factors.iter().map(|f| f.parse()).collect::<Result<Vec<Group>>>()?;
                Group::product(groups)
            }
            other => Err(Error::parse(0, format!("unknown group kind '{other}'"))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Symmetric(n) => write!(f, "sym:{n}"),
            GroupKind::Alternating(n) => write!(f, "alt:{n}"),
            GroupKind::Abelian(m) if m.len() == 1 => write!(f, "cyc:{}", m[0]),
            GroupKind::Abelian(m) => {
                let parts: Vec<String> = m.iter().map(|n| format!("cyc:{n}")).collect();
                write!(f, "prod:{}", parts.join(","))
            }
            GroupKind::Heisenberg { p } => write!(f, "p3:{p}"),
            GroupKind::Metacyclic { p, q, r } => write!(f, "pq:{p},{q},{r}"),
            GroupKind::Generated { degree, gens } => {
                let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "gens:{degree}:{}", parts.join(";"))
            }
            GroupKind::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                write!(f, "prod:{}", parts.join(","))
            }
        }
    }
}

fn parse_tuple(text: &str) -> Result<Vec<i64>> {
    let inner = text.trim();
    let inner = inner.strip_prefix('(').unwrap_or(inner);
    let inner = inner.strip_suffix(')').unwrap_or(inner);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| number::<i64>(s, 0))
        .collect()
}

fn reduce(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

impl Group {
    /// Parses an element in the text form appropriate to this group.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        match &self.kind {
            GroupKind::Symmetric(n) | GroupKind::Alternating(n) | GroupKind::Generated { degree: n, .. } => {
                let e = Element::Perm(Perm::parse(t, *n)?);
                if !self.contains(&e) {
                    return Err(Error::Domain(format!("{e} is not an element of {self}")));
                }
                Ok(e)
            }
            GroupKind::Abelian(m) => {
                let xs = parse_tuple(t)?;
                if xs.len() != m.len() {
                    return Err(Error::parse(0, format!("expected {} coordinates, found {}", m.len(), xs.len())));
                }
                Ok(Element::Tuple(xs.iter().zip(m).map(|(&x, &n)| reduce(x, n)).collect()))
            }
            GroupKind::Heisenberg { p } => {
                if t.starts_with('(') {
                    let xs = parse_tuple(t)?;
                    if xs.len() != 3 {
                        return Err(Error::parse(0, "expected (i,j,k) for a^i b^j z^k"));
                    }
                    return Ok(Element::tuple(&[reduce(xs[0], *p), reduce(xs[1], *p), reduce(xs[2], *p)]));
                }
                self.parse_word(t, &[('a', [1, 0, 0]), ('b', [0, 1, 0]), ('z', [0, 0, 1]), ('c', [0, 0, *p - 1])])
            }
            GroupKind::Metacyclic { p, q, .. } => {
                if t.starts_with('(') {
                    let xs = parse_tuple(t)?;
                    if xs.len() != 2 {
                        return Err(Error::parse(0, "expected (i,j) for b^i a^j"));
                    }
                    return Ok(Element::tuple(&[reduce(xs[0], *q), reduce(xs[1], *p)]));
                }
                self.parse_word(t, &[('b', [1, 0, 0]), ('a', [0, 1, 0])])
            }
            GroupKind::Product(fs) => {
                let inner = t
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::parse(0, "product elements are written [x;y;..]"))?;
                let parts: Vec<&str> = inner.split(';').collect();
                if parts.len() != fs.len() {
                    return Err(Error::parse(0, format!("expected {} factors, found {}", fs.len(), parts.len())));
                }
                Ok(Element::Prod(fs.iter().zip(parts).map(|(f, s)| f.parse_element(s)).collect::<Result<_>>()?))
            }
        }
    }

    /// Words like `a b^-1 c^2` over named generators given as tuples.
    fn parse_word(&self, text: &str, letters: &[(char, [u32; 3])]) -> Result<Element> {
        let arity = match self.kind {
            GroupKind::Metacyclic { .. } => 2,
            _ => 3,
        };
        let mut result = self.identity();
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (pos, ch) = chars[i];
            if ch.is_whitespace() || ch == '*' || ch == '.' {
                i += 1;
                continue;
            }
            let gen = letters
                .iter()
                .find(|(l, _)| *l == ch)
                .map(|(_, t)| Element::tuple(&t[..arity]))
                .ok_or_else(|| Error::parse(pos, format!("unknown generator '{ch}'")))?;
            i += 1;
            let mut exp: i64 = 1;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|c| c.1).collect();
                let at = chars.get(start).map_or(text.len(), |c| c.0);
                exp = s.parse().map_err(|_| Error::parse(at, format!("bad exponent '{s}'")))?;
            }
            result = self.mul_unchecked(&result, &self.power(&gen, exp));
        }
        Ok(result)
    }
}

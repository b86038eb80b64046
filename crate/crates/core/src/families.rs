//! The group families whose coset bitrades are homogeneous: `Z_p x Z_p`,
//! the non-abelian groups of order `p^3` and `pq`, and `A_{3m+1}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{factorial, is_prime, pow_mod, Element, Group, Perm};
use crate::latin::GroupTripleInput;
use crate::properties::pq_thin_predicate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Zp2 { p: u32 },
    P3 { p: u32 },
    Pq { p: u32, q: u32, r: u32 },
    Alt { m: u32 },
}

/// What the construction is expected to give.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub size: u128,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thin: Option<bool>,
    pub orthogonal: bool,
    pub primary: bool,
}

/// All `r` in `2..p` with `r^q ≡ 1 (mod p)`, ascending.
pub fn find_r(p: u64, q: u64) -> Result<Vec<u64>> {
    if p < 2 || q == 0 || !(p - 1).is_multiple_of(q) {
        return Err(Error::InvalidParameter(format!("q = {q} does not divide p - 1 = {}", p.saturating_sub(1))));
    }
    Ok((2..p).filter(|&r| pow_mod(r, q, p) == 1).collect())
}

fn check_prime(name: &str, x: u32) -> Result<()> {
    if is_prime(x as u64) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be prime (got {x})")))
    }
}

/// `a = (1, 2, .., 2m+1)` and `b = (m+1, m, .., 1, 2m+2, .., 3m+1)`.
pub fn alt_generators(m: u32) -> (Perm, Perm) {
    let n = (3 * m + 1) as usize;
    let a: Vec<usize> = (1..=2 * m as usize + 1).collect();
    let b: Vec<usize> = (1..=m as usize + 1).rev().chain(2 * m as usize + 2..=n).collect();
    let cycle = |pts: &[usize]| {
        let mut images: Vec<usize> = (1..=n).collect();
        for w in 0..pts.len() {
            images[pts[w] - 1] = pts[(w + 1) % pts.len()];
        }
        Perm::from_one_based(&images).expect("a cycle is a permutation")
    };
    (cycle(&a), cycle(&b))
}

impl Family {
    pub fn predict(&self) -> Result<Prediction> {
        self.validate()?;
        Ok(match *self {
            Family::Zp2 { p } => Prediction {
                size: (p as u128).pow(2),
                k: p as u64,
                thin: None,
                orthogonal: false,
                primary: true,
            },
            Family::P3 { p } => Prediction {
                size: (p as u128).pow(3),
                k: p as u64,
                thin: Some(true),
                orthogonal: true,
                primary: true,
            },
            Family::Pq { p, q, r } => Prediction {
                size: p as u128 * q as u128,
                k: q as u64,
                thin: Some(pq_thin_predicate(p as u64, q as u64, r as u64)),
                orthogonal: true,
                primary: true,
            },
            Family::Alt { m } => Prediction {
                size: factorial(3 * m as usize + 1) / 2,
                k: 2 * m as u64 + 1,
                thin: Some(true),
                orthogonal: true,
                primary: true,
            },
        })
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Family::Zp2 { p } => check_prime("p", p),
            Family::P3 { p } => Group::heisenberg(p).map(drop),
            Family::Pq { p, q, r } => Group::metacyclic(p, q, r).map(drop),
            Family::Alt { m } => {
                if m == 0 {
                    return Err(Error::InvalidParameter("m must be at least 1".into()));
                }
                if m > 84 {
                    return Err(Error::InvalidParameter("m is too large for permutations of degree 255".into()));
                }
                Ok(())
            }
        }
    }

    /// The group and its triple `(α, β, γ)`. Groups larger than `cap`
    /// elements are refused before anything is enumerated.
    pub fn input(&self, cap: usize) -> Result<GroupTripleInput> {
        let pred = self.predict()?;
        if pred.size > cap as u128 {
            return Err(Error::Resource { what: format!("constructing {self}"), needed: pred.size, cap });
        }
        let t = |x: &[u32]| Element::tuple(x);
        let (g, a, b, c) = match *self {
            Family::Zp2 { p } => (Group::abelian(vec![p, p])?, t(&[0, 1]), t(&[1, 0]), t(&[p - 1, p - 1])),
            Family::P3 { p } => {
                let g = Group::heisenberg(p)?;
                let (a, b) = (t(&[1, 0, 0]), t(&[0, 1, 0]));
                let c = g.mul(&g.inverse(&b), &g.inverse(&a))?;
                (g, a, b, c)
            }
            Family::Pq { p, q, r } => {
                let g = Group::metacyclic(p, q, r)?;
                let (a, b) = (t(&[0, 1]), t(&[1, 0]));
                let ab = g.mul(&a, &b)?;
                let binv = g.inverse(&b);
                let c = g.mul(&g.mul(&binv, &g.inverse(&a))?, &binv)?;
                (g, b, ab, c)
            }
            Family::Alt { m } => {
                let (a, b) = alt_generators(m);
                let n = a.degree();
                let g = Group::generated(n, vec![a.clone(), b.clone()])?;
                let c = a.then(&b).inverse();
                (g, Element::Perm(a), Element::Perm(b), Element::Perm(c))
            }
        };
        let g = g.with_cap(cap);
        if let Family::Alt { .. } = self {
            // The closure must be the whole alternating group.
            let order = g.order()?;
            if order != pred.size {
                return Err(Error::Inconsistent(format!("⟨a, b⟩ has order {order}, expected {}", pred.size)));
            }
        }
        GroupTripleInput::new(g, a, b, c)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Zp2 { p } => write!(f, "zp2:p={p}"),
            Family::P3 { p } => write!(f, "p3:p={p}"),
            Family::Pq { p, q, r } => write!(f, "pq:p={p},q={q},r={r}"),
            Family::Alt { m } => write!(f, "alt:m={m}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `zp2:p=3`, `p3:p=5`, `pq:p=11,q=5,r=3`, `alt:m=2`.
    fn from_str(text: &str) -> Result<Family> {
        let (tag, rest) =
            text.trim().split_once(':').ok_or_else(|| Error::parse(0, format!("family '{text}' lacks a tag")))?;
        let mut params: Vec<(&str, u32)> = Vec::new();
        let mut pos = tag.len() + 1;
        for part in rest.split(',') {
            let (k, v) =
                part.split_once('=').ok_or_else(|| Error::parse(pos, format!("expected name=value, found '{part}'")))?;
            let v = v.trim().parse().map_err(|_| Error::parse(pos, format!("'{}' is not a number", v.trim())))?;
            params.push((k.trim(), v));
            pos += part.len() + 1;
        }
        let get = |name: &str| {
            params
                .iter()
                .find(|(k, _)| *k == name)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::parse(0, format!("family {tag} needs {name}=")))
        };
        let expect = |names: &[&str]| {
            match params.iter().find(|(k, _)| !names.contains(k)) {
                Some((k, _)) => Err(Error::parse(0, format!("unknown parameter '{k}' for {tag}"))),
                None => Ok(()),
            }
        };
        match tag {
            "zp2" => expect(&["p"]).and(Ok(Family::Zp2 { p: get("p")? })),
            "p3" => expect(&["p"]).and(Ok(Family::P3 { p: get("p")? })),
            "pq" => expect(&["p", "q", "r"]).and(Ok(Family::Pq { p: get("p")?, q: get("q")?, r: get("r")? })),
            "alt" => expect(&["m"]).and(Ok(Family::Alt { m: get("m")? })),
            other => Err(Error::parse(0, format!("unknown family '{other}'"))),
        }
    }
}

//! Permutations of `{1..n}` stored as image arrays.
//!
//! Composition is left to right: `p.then(q)` maps `x` to `(x p) q`, which is
//! the product `pq` in the notation used throughout the crate.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 255;

/// A permutation of `{1..n}`, stored 0-based. Ordered lexicographically by
/// image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: SmallVec<[u8; 16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Perm { images: (0..degree).map(|i| i as u8).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.len() > MAX_DEGREE {
            return Err(Error::Domain(format!("degree {} exceeds {MAX_DEGREE}", images.len())));
        }
        let mut seen = vec![false; images.len()];
        for &x in images {
            if x >= images.len() || seen[x] {
                return Err(Error::Domain(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 3, 1, 4]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Domain("points are numbered from 1".into()));
        }
        let zero: Vec<usize> = images.iter().map(|x| x - 1).collect();
        Self::from_images(&zero)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// 1-based image array.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv: SmallVec<[u8; 16]> = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Points moved by the permutation (0-based).
    pub fn moved(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Parses cycle notation over `{1..degree}`.
    ///
    /// Cycles are composed left to right and need not be disjoint. Points may
    /// be separated by commas or whitespace; a cycle written without
    /// separators, such as `(243)`, is read digit by digit when the degree is
    /// at most 9.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        if degree > MAX_DEGREE {
            return Err(Error::parse(0, format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut result = Perm::identity(degree);
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (pos, ch) = chars[i];
            if ch.is_whitespace() {
                i += 1;
                continue;
            }
            if ch != '(' {
                return Err(Error::parse(pos, format!("expected '(' but found '{ch}'")));
            }
            let open = pos;
            let mut j = i + 1;
            while j < chars.len() && chars[j].1 != ')' {
                if chars[j].1 == '(' {
                    return Err(Error::parse(chars[j].0, "nested '('"));
                }
                j += 1;
            }
            if j == chars.len() {
                return Err(Error::parse(open, "unclosed '('"));
            }
            let body: Vec<(usize, char)> = chars[i + 1..j].to_vec();
            let points = parse_cycle_body(&body, degree)?;
            let mut seen = vec![false; degree];
            for &(p, at) in &points {
                if seen[p] {
                    return Err(Error::parse(at, format!("point {} repeated within a cycle", p + 1)));
                }
                seen[p] = true;
            }
            if points.len() > 1 {
                let mut images: Vec<usize> = (0..degree).collect();
                for w in 0..points.len() {
                    images[points[w].0] = points[(w + 1) % points.len()].0;
                }
                let cycle = Perm { images: images.iter().map(|&x| x as u8).collect() };
                result = result.then(&cycle);
            }
            i = j + 1;
        }
        Ok(result)
    }
}

fn parse_cycle_body(body: &[(usize, char)], degree: usize) -> Result<Vec<(usize, usize)>> {
    let separated = body.iter().any(|&(_, c)| c == ',' || c.is_whitespace());
    let mut points = Vec::new();
    let mut push = |value: usize, at: usize| -> Result<()> {
        if value == 0 || value > degree {
            return Err(Error::parse(at, format!("point {value} outside 1..{degree}")));
        }
        points.push((value - 1, at));
        Ok(())
    };
    if !separated {
        let digits: String = body.iter().map(|&(_, c)| c).collect();
        if let Some(&(at, bad)) = body.iter().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(Error::parse(at, format!("unexpected '{bad}'")));
        }
        if degree <= 9 || body.len() <= 1 {
            for &(at, c) in body {
                push(c.to_digit(10).unwrap() as usize, at)?;
            }
        } else if !digits.is_empty() {
            let at = body[0].0;
            let value = digits.parse::<usize>().map_err(|e| Error::parse(at, e.to_string()))?;
            push(value, at)?;
        }
        return Ok(points);
    }
    let mut k = 0;
    while k < body.len() {
        let (at, c) = body[k];
        if c == ',' || c.is_whitespace() {
            k += 1;
            continue;
        }
        if !c.is_ascii_digit() {
            return Err(Error::parse(at, format!("unexpected '{c}'")));
        }
        let mut value = 0usize;
        while k < body.len() && body[k].1.is_ascii_digit() {
            value = value.saturating_mul(10).saturating_add(body[k].1.to_digit(10).unwrap() as usize);
            k += 1;
        }
        push(value, at)?;
    }
    Ok(points)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    /// Cycle notation with comma-separated 1-based points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

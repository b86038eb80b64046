//! Finite groups small enough to enumerate: symmetric and alternating
//! groups, finite abelian groups, the non-abelian group of order `p^3` with
//! exponent `p`, the non-abelian group of order `pq`, permutation groups
//! given by generators, and direct products of these.
//!
//! Products are written left to right throughout.

mod indexed;
mod perm;
mod spec;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) use indexed::invert_table;
pub use indexed::IndexedGroup;
pub use perm::{Perm, MAX_DEGREE};

/// Default cap on the number of elements any full-universe operation will
/// materialize. Overridable per group with [`Group::with_cap`].
pub const DEFAULT_ENUM_CAP: usize = 5_000_000;

/// An element of one of the supported groups.
///
/// Tuples are exponent vectors whose meaning depends on the group:
/// coordinates of `Z_n1 x Z_n2 x ..`, `(i, j, k)` for `a^i b^j z^k` in the
/// `p^3` group (with `z = c^-1`), and `(i, j)` for `b^i a^j` in the `pq`
/// group. The derived order compares image arrays and tuples
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Perm(Perm),
    Tuple(SmallVec<[u32; 4]>),
    Prod(Vec<Element>),
}

impl Element {
    pub fn tuple(coords: &[u32]) -> Self {
        Element::Tuple(coords.iter().copied().collect())
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[u32]> {
        match self {
            Element::Tuple(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{p}"),
            Element::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Element::Prod(parts) => {
                let parts: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(";"))
            }
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric(usize),
    Alternating(usize),
    /// `Z_n1 x Z_n2 x ..`; a cyclic group has a single modulus.
    Abelian(Vec<u32>),
    /// Non-abelian group of order `p^3` and exponent `p`.
    Heisenberg { p: u32 },
    /// Non-abelian group of order `pq` with `b^-1 a b = a^r`.
    Metacyclic { p: u32, q: u32, r: u32 },
    /// Closure of explicit permutation generators.
    Generated { degree: usize, gens: Vec<Perm> },
    Product(Vec<Group>),
}

#[derive(Clone)]
pub struct Group {
    kind: GroupKind,
    cap: usize,
    /// `r^k mod p` for `k < q`, pq group only.
    r_powers: Vec<u32>,
    elements: OnceLock<Arc<Vec<Element>>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({self})")
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Group {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// `r + r^2 + .. + r^k mod p`, summed term by term.
///
/// This is the exponent `r(r^k - 1)/(r - 1)` appearing in `(ab)^k = b^k a^e`
/// for the `pq` group; the summation form avoids dividing by `r - 1`.
pub fn geometric_exponent(r: u64, k: u64, p: u64) -> u64 {
    let mut term = 1 % p;
    let mut sum = 0;
    for _ in 0..k {
        term = term * (r % p) % p;
        sum = (sum + term) % p;
    }
    sum
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl Group {
    fn from_kind(kind: GroupKind) -> Self {
        Group { kind, cap: DEFAULT_ENUM_CAP, r_powers: Vec::new(), elements: OnceLock::new() }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidParameter(format!("symmetric degree must be in 1..={MAX_DEGREE}")));
        }
        Ok(Self::from_kind(GroupKind::Symmetric(n)))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidParameter(format!("alternating degree must be in 1..={MAX_DEGREE}")));
        }
        Ok(Self::from_kind(GroupKind::Alternating(n)))
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::abelian(vec![n])
    }

    pub fn abelian(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::InvalidParameter("cyclic factors need a positive order".into()));
        }
        Ok(Self::from_kind(GroupKind::Abelian(moduli)))
    }

    /// The non-abelian group of order `p^3` with `a^p = b^p = c^p = 1`,
    /// `ab = bac` and `c` central. Requires an odd prime `p`.
    pub fn heisenberg(p: u32) -> Result<Self> {
        if p == 2 || !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("p must be an odd prime (got {p})")));
        }
        Ok(Self::from_kind(GroupKind::Heisenberg { p }))
    }

    /// The non-abelian group of order `pq` with `a^p = b^q = 1` and
    /// `b^-1 a b = a^r`.
    pub fn metacyclic(p: u32, q: u32, r: u32) -> Result<Self> {
        validate_pq(p, q, r)?;
        let mut g = Self::from_kind(GroupKind::Metacyclic { p, q, r });
        g.r_powers = (0..q as u64).map(|k| pow_mod(r as u64, k, p as u64) as u32).collect();
        Ok(g)
    }

    pub fn generated(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidParameter(format!("degree must be in 1..={MAX_DEGREE}")));
        }
        if gens.is_empty() {
            return Err(Error::InvalidParameter("at least one generator is required".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::Domain(format!("generator {g} has degree {} not {degree}", g.degree())));
        }
        Ok(Self::from_kind(GroupKind::Generated { degree, gens }))
    }

    /// Direct product. A product of cyclic groups collapses to a single
    /// abelian group so its elements are plain exponent tuples.
    pub fn product(factors: Vec<Group>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("a product needs at least one factor".into()));
        }
        if factors.iter().all(|f| matches!(&f.kind, GroupKind::Abelian(_))) {
            let moduli = factors
                .iter()
                .flat_map(|f| match &f.kind {
                    GroupKind::Abelian(m) => m.clone(),
                    _ => unreachable!(),
                })
                .collect();
            return Self::abelian(moduli);
        }
        Ok(Self::from_kind(GroupKind::Product(factors)))
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        if let GroupKind::Product(factors) = &mut self.kind {
            for f in factors {
                f.cap = cap;
            }
        }
        self.elements = OnceLock::new();
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn identity(&self) -> Element {
        match &self.kind {
            GroupKind::Symmetric(n) | GroupKind::Alternating(n) => Element::Perm(Perm::identity(*n)),
            GroupKind::Generated { degree, .. } => Element::Perm(Perm::identity(*degree)),
            GroupKind::Abelian(m) => Element::Tuple(SmallVec::from_elem(0, m.len())),
            GroupKind::Heisenberg { .. } => Element::tuple(&[0, 0, 0]),
            GroupKind::Metacyclic { .. } => Element::tuple(&[0, 0]),
            GroupKind::Product(fs) => Element::Prod(fs.iter().map(|f| f.identity()).collect()),
        }
    }

    /// Checks that `g` has the shape of an element of this group: matching
    /// encoding, degree or arity, and reduced coordinates. Membership in
    /// `Alternating` and `Generated` groups is checked by [`Group::contains`].
    pub fn check(&self, g: &Element) -> Result<()> {
        let bad = || Error::Domain(format!("{g} is not an element of {self}"));
        match (&self.kind, g) {
            (GroupKind::Symmetric(n), Element::Perm(p))
            | (GroupKind::Alternating(n), Element::Perm(p))
            | (GroupKind::Generated { degree: n, .. }, Element::Perm(p)) => {
                (p.degree() == *n).then_some(()).ok_or_else(bad)
            }
            (GroupKind::Abelian(m), Element::Tuple(t)) => {
                (t.len() == m.len() && t.iter().zip(m).all(|(x, n)| x < n)).then_some(()).ok_or_else(bad)
            }
            (GroupKind::Heisenberg { p }, Element::Tuple(t)) => {
                (t.len() == 3 && t.iter().all(|x| x < p)).then_some(()).ok_or_else(bad)
            }
            (GroupKind::Metacyclic { p, q, .. }, Element::Tuple(t)) => {
                (t.len() == 2 && t[0] < *q && t[1] < *p).then_some(()).ok_or_else(bad)
            }
            (GroupKind::Product(fs), Element::Prod(parts)) => {
                if parts.len() != fs.len() {
                    return Err(bad());
                }
                fs.iter().zip(parts).try_for_each(|(f, x)| f.check(x)).map_err(|_| bad())
            }
            _ => Err(bad()),
        }
    }

    /// Full membership test.
    pub fn contains(&self, g: &Element) -> bool {
        if self.check(g).is_err() {
            return false;
        }
        match (&self.kind, g) {
            (GroupKind::Alternating(_), Element::Perm(p)) => p.is_even(),
            (GroupKind::Generated { .. }, _) => match self.elements() {
                Ok(all) => all.binary_search(g).is_ok(),
                Err(_) => false,
            },
            (GroupKind::Product(fs), Element::Prod(parts)) => fs.iter().zip(parts).all(|(f, x)| f.contains(x)),
            _ => true,
        }
    }

    /// Product `gh` (first `g`, then `h`).
    pub fn mul(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: &Element, h: &Element) -> Element {
        match (&self.kind, g, h) {
            (_, Element::Perm(x), Element::Perm(y)) => Element::Perm(x.then(y)),
            (GroupKind::Abelian(m), Element::Tuple(x), Element::Tuple(y)) => {
                Element::Tuple(x.iter().zip(y).zip(m).map(|((a, b), n)| ((*a as u64 + *b as u64) % *n as u64) as u32).collect())
            }
            (GroupKind::Heisenberg { p }, Element::Tuple(x), Element::Tuple(y)) => {
                // (a^i b^j z^k)(a^r b^s z^t) = a^(i+r) b^(j+s) z^(k+t+jr)
                let p = *p as u64;
                let (i, j, k) = (x[0] as u64, x[1] as u64, x[2] as u64);
                let (r, s, t) = (y[0] as u64, y[1] as u64, y[2] as u64);
                Element::tuple(&[((i + r) % p) as u32, ((j + s) % p) as u32, ((k + t + j * r) % p) as u32])
            }
            (GroupKind::Metacyclic { p, q, .. }, Element::Tuple(x), Element::Tuple(y)) => {
                // b^i a^j b^k a^l = b^(i+k) a^(j r^k + l)
                let (i, j, k, l) = (x[0] as u64, x[1] as u64, y[0] as u64, y[1] as u64);
                let rk = self.r_powers[k as usize] as u64;
                Element::tuple(&[((i + k) % *q as u64) as u32, ((j * rk + l) % *p as u64) as u32])
            }
            (GroupKind::Product(fs), Element::Prod(x), Element::Prod(y)) => {
                Element::Prod(fs.iter().zip(x.iter().zip(y)).map(|(f, (a, b))| f.mul_unchecked(a, b)).collect())
            }
            _ => panic!("mismatched operands {g} and {h} in {self}"),
        }
    }

    pub fn inverse(&self, g: &Element) -> Element {
        match (&self.kind, g) {
            (_, Element::Perm(x)) => Element::Perm(x.inverse()),
            (GroupKind::Abelian(m), Element::Tuple(x)) => {
                Element::Tuple(x.iter().zip(m).map(|(a, n)| (n - a) % n).collect())
            }
            (GroupKind::Heisenberg { p }, Element::Tuple(x)) => {
                let p = *p as u64;
                let (i, j, k) = (x[0] as u64, x[1] as u64, x[2] as u64);
                let r = (p - i) % p;
                let s = (p - j) % p;
                let t = (2 * p - k % p - (j * r) % p) % p;
                Element::tuple(&[r as u32, s as u32, t as u32])
            }
            (GroupKind::Metacyclic { p, q, .. }, Element::Tuple(x)) => {
                let (p, q) = (*p as u64, *q as u64);
                let k = (q - x[0] as u64) % q;
                let l = (p - (x[1] as u64 * self.r_powers[k as usize] as u64) % p) % p;
                Element::tuple(&[k as u32, l as u32])
            }
            (GroupKind::Product(fs), Element::Prod(x)) => {
                Element::Prod(fs.iter().zip(x).map(|(f, a)| f.inverse(a)).collect())
            }
            _ => panic!("{g} is not an element of {self}"),
        }
    }

    pub fn is_identity(&self, g: &Element) -> bool {
        *g == self.identity()
    }

    /// Least `n > 0` with `g^n = 1`.
    pub fn order_of(&self, g: &Element) -> u64 {
        match (&self.kind, g) {
            (_, Element::Perm(p)) => p.order(),
            (GroupKind::Product(fs), Element::Prod(x)) => {
                fs.iter().zip(x).fold(1, |acc, (f, a)| perm::lcm(acc, f.order_of(a)))
            }
            _ => {
                let id = self.identity();
                let mut x = g.clone();
                let mut n = 1;
                while x != id {
                    x = self.mul_unchecked(&x, g);
                    n += 1;
                }
                n
            }
        }
    }

    /// `g^k`; negative exponents go through the inverse.
    pub fn power(&self, g: &Element, k: i64) -> Element {
        let base = if k < 0 { self.inverse(g) } else { g.clone() };
        let mut e = k.unsigned_abs();
        let mut result = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_unchecked(&result, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul_unchecked(&sq, &sq);
            }
        }
        result
    }

    /// `a^-1 g a`.
    pub fn conjugate(&self, g: &Element, a: &Element) -> Element {
        self.mul_unchecked(&self.mul_unchecked(&self.inverse(a), g), a)
    }

    /// The cyclic subgroup `<g>` listed as `g^0, g^1, ..`.
    pub fn generated_subgroup(&self, g: &Element) -> Subgroup {
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut x = g.clone();
        while x != id {
            elements.push(x.clone());
            x = self.mul_unchecked(&x, g);
        }
        Subgroup::new(g.clone(), elements)
    }

    /// `C^a = a^-1 C a`, generated by the conjugate of C's generator.
    pub fn conjugate_subgroup(&self, c: &Subgroup, a: &Element) -> Subgroup {
        let elements = c.elements().iter().map(|x| self.conjugate(x, a)).collect();
        Subgroup::new(self.conjugate(c.generator(), a), elements)
    }

    /// Group order, computed from the kind or by enumerating generators.
    pub fn order(&self) -> Result<u128> {
        Ok(match &self.kind {
            GroupKind::Symmetric(n) => factorial(*n),
            GroupKind::Alternating(n) => (factorial(*n) / 2).max(1),
            GroupKind::Abelian(m) => m.iter().map(|&x| x as u128).product(),
            GroupKind::Heisenberg { p } => (*p as u128).pow(3),
            GroupKind::Metacyclic { p, q, .. } => *p as u128 * *q as u128,
            GroupKind::Generated { .. } => self.elements()?.len() as u128,
            GroupKind::Product(fs) => fs.iter().map(|f| f.order()).product::<Result<u128>>()?,
        })
    }

    /// A generating set.
    pub fn generators(&self) -> Vec<Element> {
        match &self.kind {
            GroupKind::Symmetric(n) => {
                let mut gens = Vec::new();
                if *n >= 2 {
                    gens.push(Element::Perm(Perm::parse("(1,2)", *n).unwrap()));
                    let images: Vec<usize> = (0..*n).map(|i| (i + 1) % n).collect();
                    gens.push(Element::Perm(Perm::from_images(&images).unwrap()));
                }
                gens
            }
            GroupKind::Alternating(n) => (3..=*n)
                .map(|k| Element::Perm(Perm::parse(&format!("(1,2,{k})"), *n).unwrap()))
                .collect(),
            GroupKind::Abelian(m) => (0..m.len())
                .map(|i| {
                    let mut t: SmallVec<[u32; 4]> = SmallVec::from_elem(0, m.len());
                    t[i] = 1 % m[i];
                    Element::Tuple(t)
                })
                .collect(),
            GroupKind::Heisenberg { .. } => vec![Element::tuple(&[1, 0, 0]), Element::tuple(&[0, 1, 0])],
            GroupKind::Metacyclic { .. } => vec![Element::tuple(&[0, 1]), Element::tuple(&[1, 0])],
            GroupKind::Generated { gens, .. } => gens.iter().cloned().map(Element::Perm).collect(),
            GroupKind::Product(fs) => {
                let ids: Vec<Element> = fs.iter().map(|f| f.identity()).collect();
                let mut gens = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    for g in f.generators() {
                        let mut parts = ids.clone();
                        parts[i] = g;
                        gens.push(Element::Prod(parts));
                    }
                }
                gens
            }
        }
    }

    /// All elements in canonical (sorted) order, materialized once.
    pub fn elements(&self) -> Result<Arc<Vec<Element>>> {
        if let Some(all) = self.elements.get() {
            return Ok(all.clone());
        }
        let all = Arc::new(self.enumerate()?);
        Ok(self.elements.get_or_init(|| all).clone())
    }

    fn enumerate(&self) -> Result<Vec<Element>> {
        if let GroupKind::Generated { gens, .. } = &self.kind {
            let gens: Vec<Element> = gens.iter().cloned().map(Element::Perm).collect();
            return self.closure(&gens);
        }
        let needed = self.order()?;
        if needed > self.cap as u128 {
            return Err(Error::Resource { what: format!("enumerating {self}"), needed, cap: self.cap });
        }
        let mut out = match &self.kind {
            GroupKind::Symmetric(n) => all_perms(*n, false),
            GroupKind::Alternating(n) => all_perms(*n, true),
            GroupKind::Abelian(m) => odometer(m).map(Element::Tuple).collect(),
            GroupKind::Heisenberg { p } => odometer(&[*p, *p, *p]).map(Element::Tuple).collect(),
            GroupKind::Metacyclic { p, q, .. } => odometer(&[*q, *p]).map(Element::Tuple).collect(),
            GroupKind::Product(fs) => {
                let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
                for f in fs {
                    let fe = f.elements()?;
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            fe.iter().map(move |x| {
                                let mut v = prefix.clone();
                                v.push(x.clone());
                                v
                            })
                        })
                        .collect();
                }
                acc.into_iter().map(Element::Prod).collect()
            }
            GroupKind::Generated { .. } => unreachable!(),
        };
        out.sort_unstable();
        Ok(out)
    }

    /// Smallest multiplication-closed set containing `generators` and the
    /// identity, found breadth first by right multiplication. Sorted.
    pub fn closure(&self, generators: &[Element]) -> Result<Vec<Element>> {
        if generators.is_empty() {
            return Err(Error::InvalidParameter("closure needs at least one generator".into()));
        }
        for g in generators {
            self.check(g)?;
        }
        let id = self.identity();
        let mut seen: HashSet<Element> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = self.mul_unchecked(&x, g);
                if !seen.contains(&y) {
                    if seen.len() >= self.cap {
                        return Err(Error::Resource {
                            what: "generating subgroup closure".into(),
                            needed: seen.len() as u128 + 1,
                            cap: self.cap,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Element> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The left coset `gH`.
    pub fn coset_of(&self, g: &Element, h: &Subgroup) -> Coset {
        let mut elements: Vec<Element> = h.elements().iter().map(|x| self.mul_unchecked(g, x)).collect();
        elements.sort_unstable();
        Coset { rep: elements[0].clone(), elements }
    }

    /// Partition of the group into left cosets of `h`, ordered by
    /// representative.
    pub fn left_cosets(&self, h: &Subgroup) -> Result<Vec<Coset>> {
        let all = self.elements()?;
        let mut covered: HashSet<&Element> = HashSet::new();
        let mut out = Vec::new();
        for g in all.iter() {
            if covered.contains(g) {
                continue;
            }
            let coset = self.coset_of(g, h);
            for x in &coset.elements {
                let idx = all.binary_search(x).map_err(|_| Error::Domain(format!("{x} lies outside {self}")))?;
                covered.insert(&all[idx]);
            }
            out.push(coset);
        }
        Ok(out)
    }

    /// Elements commuting with every generator, hence with every element.
    pub fn center(&self) -> Result<Vec<Element>> {
        let gens = self.generators();
        let all = self.elements()?;
        Ok(all
            .iter()
            .filter(|x| gens.iter().all(|g| self.mul_unchecked(x, g) == self.mul_unchecked(g, x)))
            .cloned()
            .collect())
    }
}

fn validate_pq(p: u32, q: u32, r: u32) -> Result<()> {
    let bad = |m: String| Err(Error::InvalidParameter(m));
    if !is_prime(p as u64) {
        return bad(format!("p must be prime (got {p})"));
    }
    if !is_prime(q as u64) {
        return bad(format!("q must be prime (got {q})"));
    }
    if q <= 2 {
        return bad(format!("q must exceed 2 (got {q})"));
    }
    if !(p - 1).is_multiple_of(q) {
        return bad(format!("q must divide p-1 ({q} does not divide {})", p - 1));
    }
    if r < 2 || r > p - 1 {
        return bad(format!("r must lie in 2..{} (got {r})", p - 1));
    }
    if pow_mod(r as u64, q as u64, p as u64) != 1 {
        return bad(format!("r^q must be 1 mod p ({r}^{q} mod {p} = {})", pow_mod(r as u64, q as u64, p as u64)));
    }
    Ok(())
}

fn odometer(moduli: &[u32]) -> impl Iterator<Item = SmallVec<[u32; 4]>> + '_ {
    let total: u64 = moduli.iter().map(|&m| m as u64).product();
    (0..total).map(move |mut n| {
        let mut t: SmallVec<[u32; 4]> = SmallVec::from_elem(0, moduli.len());
        for i in (0..moduli.len()).rev() {
            t[i] = (n % moduli[i] as u64) as u32;
            n /= moduli[i] as u64;
        }
        t
    })
}

/// All permutations of `{0..n}` in lexicographic order, optionally only the
/// even ones.
fn all_perms(n: usize, even_only: bool) -> Vec<Element> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let p = Perm::from_images(&a).expect("valid permutation");
        if !even_only || p.is_even() {
            out.push(Element::Perm(p));
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else { break };
        let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
    }
    out
}

/// A cyclic subgroup `<g>` with its elements listed as successive powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    generator: Element,
    elements: Vec<Element>,
    sorted: Vec<Element>,
}

impl Subgroup {
    fn new(generator: Element, elements: Vec<Element>) -> Self {
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        Subgroup { generator, elements, sorted }
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    /// Elements in power order `g^0, g^1, ..`.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.sorted.binary_search(x).is_ok()
    }

    pub fn intersection_size(&self, other: &Subgroup) -> usize {
        self.sorted.iter().filter(|x| other.contains(x)).count()
    }

    /// Same element set, regardless of generator.
    pub fn same_set(&self, other: &Subgroup) -> bool {
        self.sorted == other.sorted
    }
}

/// A left coset, identified by its smallest element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coset {
    rep: Element,
    elements: Vec<Element>,
}

impl Coset {
    pub fn rep(&self) -> &Element {
        &self.rep
    }

    /// Elements in sorted order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(g: &Group, s: &str) -> Element {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn heisenberg_products() {
        let g = Group::heisenberg(3).unwrap();
        let a = Element::tuple(&[1, 0, 0]);
        let b = Element::tuple(&[0, 1, 0]);
        assert_eq!(g.mul(&a, &b).unwrap(), Element::tuple(&[1, 1, 0]));
        assert_eq!(g.mul(&b, &a).unwrap(), Element::tuple(&[1, 1, 1]));
    }

    #[test]
    fn pq_product() {
        let g = Group::metacyclic(7, 3, 2).unwrap();
        // (b^0 a^1)(b^1 a^0) = b^1 a^2
        let x = g.mul(&Element::tuple(&[0, 1]), &Element::tuple(&[1, 0])).unwrap();
        assert_eq!(x, Element::tuple(&[1, 2]));
    }

    #[test]
    fn mixed_operands_are_rejected() {
        let g = Group::symmetric(3).unwrap();
        let x = Element::Perm(Perm::identity(4));
        assert!(matches!(g.mul(&x, &g.identity()), Err(Error::Domain(_))));
        let h = Group::heisenberg(3).unwrap();
        assert!(h.mul(&Element::tuple(&[0, 1]), &h.identity()).is_err());
    }

    #[test]
    fn orders() {
        let a4 = Group::alternating(4).unwrap();
        assert_eq!(a4.order_of(&a4.identity()), 1);
        assert_eq!(a4.order_of(&perm(&a4, "(1,2,3)")), 3);
        let h = Group::heisenberg(5).unwrap();
        let gamma = h.parse_element("b^-1 a^-1").unwrap();
        assert_eq!(h.order_of(&gamma), 5);
    }

    #[test]
    fn gamma_squared_closed_form() {
        let h = Group::heisenberg(3).unwrap();
        let gamma = h.parse_element("b^-1 a^-1").unwrap();
        assert_eq!(h.power(&gamma, 2), Element::tuple(&[1, 1, 0]));
        assert_eq!(h.power(&gamma, 0), h.identity());
    }

    #[test]
    fn pq_ab_power_q_is_identity() {
        let g = Group::metacyclic(7, 3, 2).unwrap();
        let ab = g.parse_element("a b").unwrap();
        assert!(g.is_identity(&g.power(&ab, 3)));
    }

    #[test]
    fn negative_powers() {
        let g = Group::symmetric(4).unwrap();
        let x = perm(&g, "(1,2,3,4)");
        assert_eq!(g.power(&x, -1), g.inverse(&x));
        assert_eq!(g.power(&x, -3), x);
    }

    #[test]
    fn cyclic_subgroups() {
        let a4 = Group::alternating(4).unwrap();
        let s = a4.generated_subgroup(&perm(&a4, "(1,2,3)"));
        let want: Vec<Element> = ["()", "(1,2,3)", "(1,3,2)"].iter().map(|t| perm(&a4, t)).collect();
        assert_eq!(s.elements(), &want[..]);
        assert_eq!(a4.generated_subgroup(&a4.identity()).order(), 1);
        let z = Group::abelian(vec![3, 3]).unwrap();
        assert_eq!(z.generated_subgroup(&Element::tuple(&[0, 1])).order(), 3);
    }

    #[test]
    fn closures() {
        let s4 = Group::symmetric(4).unwrap();
        let gens = [perm(&s4, "(1,2,3)"), perm(&s4, "(2,1,4)")];
        assert_eq!(s4.closure(&gens).unwrap().len(), 12);
        assert_eq!(s4.closure(&[s4.identity()]).unwrap(), vec![s4.identity()]);
        let h = Group::heisenberg(3).unwrap();
        assert_eq!(h.closure(&h.generators()).unwrap().len(), 27);
    }

    #[test]
    fn closure_respects_cap() {
        let s5 = Group::symmetric(5).unwrap().with_cap(50);
        let err = s5.closure(&s5.generators()).unwrap_err();
        assert!(matches!(err, Error::Resource { cap: 50, .. }), "{err}");
    }

    #[test]
    fn s3_cosets() {
        let s3 = Group::symmetric(3).unwrap();
        let s = s3.generated_subgroup(&perm(&s3, "(1,2,3)"));
        let t = s3.generated_subgroup(&perm(&s3, "(1,2)"));
        assert_eq!(s3.left_cosets(&s).unwrap().len(), 2);
        assert_eq!(s3.left_cosets(&t).unwrap().len(), 3);
        let whole = s3.closure(&s3.generators()).unwrap();
        assert_eq!(whole.len(), 6);
    }

    #[test]
    fn coset_of_examples() {
        let a4 = Group::alternating(4).unwrap();
        let a = a4.generated_subgroup(&perm(&a4, "(1,2,3)"));
        let c = a4.coset_of(&perm(&a4, "(2,4,3)"), &a);
        let want: Vec<Element> = {
            let mut v: Vec<Element> = ["(2,4,3)", "(1,2,4)", "(1,3)(2,4)"].iter().map(|t| perm(&a4, t)).collect();
            v.sort();
            v
        };
        assert_eq!(c.elements(), &want[..]);
        assert_eq!(a4.coset_of(&a4.identity(), &a).elements(), {
            let mut v = a.elements().to_vec();
            v.sort();
            v
        });
        let g = perm(&a4, "(1,2)(3,4)");
        let ga = a4.mul(&g, &perm(&a4, "(1,2,3)")).unwrap();
        assert_eq!(a4.coset_of(&ga, &a), a4.coset_of(&g, &a));
    }

    #[test]
    fn conjugate_subgroups() {
        let a4 = Group::alternating(4).unwrap();
        let c = a4.generated_subgroup(&perm(&a4, "(2,4,3)"));
        assert!(a4.conjugate_subgroup(&c, &a4.identity()).same_set(&c));
        let ca = a4.conjugate_subgroup(&c, &perm(&a4, "(1,2,3)"));
        assert_eq!(ca.order(), 3);
        // independent check: plain set intersection of element lists
        let common = c.elements().iter().filter(|x| ca.elements().contains(x)).count();
        assert_eq!(common, 1);
        assert_eq!(c.intersection_size(&ca), 1);

        let z = Group::abelian(vec![3, 3]).unwrap();
        let cz = z.generated_subgroup(&Element::tuple(&[2, 2]));
        assert!(z.conjugate_subgroup(&cz, &Element::tuple(&[0, 1])).same_set(&cz));
    }

    #[test]
    fn centers() {
        let h = Group::heisenberg(3).unwrap();
        let z = h.center().unwrap();
        let c = h.generated_subgroup(&h.parse_element("c").unwrap());
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|x| c.contains(x)));
        let ab = Group::abelian(vec![2, 4]).unwrap();
        assert_eq!(ab.center().unwrap().len(), 8);

        // brute force over all pairs
        let s3 = Group::symmetric(3).unwrap();
        let all = s3.elements().unwrap();
        let brute: Vec<Element> = all
            .iter()
            .filter(|x| all.iter().all(|y| s3.mul(x, y).unwrap() == s3.mul(y, x).unwrap()))
            .cloned()
            .collect();
        assert_eq!(brute, vec![s3.identity()]);
        assert_eq!(s3.center().unwrap(), brute);
    }

    #[test]
    fn enumeration_cap() {
        let big = Group::alternating(16).unwrap();
        match big.elements() {
            Err(Error::Resource { needed, cap, .. }) => {
                assert_eq!(needed, 10_461_394_944_000);
                assert_eq!(cap, DEFAULT_ENUM_CAP);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alternating_enumeration_is_sorted_and_even() {
        let a5 = Group::alternating(5).unwrap();
        let all = a5.elements().unwrap();
        assert_eq!(all.len(), 60);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|x| x.as_perm().unwrap().is_even()));
    }

    #[test]
    fn pq_parameter_validation() {
        assert!(Group::metacyclic(7, 3, 2).is_ok());
        assert!(Group::metacyclic(7, 3, 3).unwrap_err().to_string().contains("r^q"));
        assert!(Group::metacyclic(7, 3, 1).unwrap_err().to_string().contains("r must lie"));
        assert!(Group::metacyclic(7, 5, 2).unwrap_err().to_string().contains("divide"));
        assert!(Group::metacyclic(8, 3, 2).unwrap_err().to_string().contains("p must be prime"));
        assert!(Group::metacyclic(7, 2, 6).unwrap_err().to_string().contains("exceed 2"));
    }

    #[test]
    fn heisenberg_rejects_even_and_composite() {
        assert!(Group::heisenberg(2).is_err());
        assert!(Group::heisenberg(9).is_err());
    }

    #[test]
    fn geometric_sum() {
        // 2 + 4 + 8 = 14 = 0 mod 7
        assert_eq!(geometric_exponent(2, 3, 7), 0);
        assert_eq!(geometric_exponent(3, 1, 11), 3);
        assert_eq!(geometric_exponent(5, 0, 11), 0);
    }
}

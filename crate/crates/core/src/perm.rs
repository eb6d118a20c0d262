//! Permutations of `[n]` and their action on k-subsets.
//!
//! Points are stored 0-based. Labels and `Display` output are 1-based so that
//! `{0, 1, 2, 3}` prints as `1234`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::{binomial, colex_rank};
use crate::dfa::Word;
use crate::error::{Error, Result};

/// Element cap for group enumeration in [`synthesize_word`]; `8!`.
pub const DEFAULT_GROUP_CAP: usize = 40_320;

/// A bijection on `0..n`; `images[i]` is the image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = alloc::vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::PointOutOfRange { point: i, n });
            }
            if core::mem::replace(&mut hit[i], true) {
                return Err(Error::InvalidInput(alloc::format!("point {} has two preimages", i + 1)));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle lengths, including fixed points, in order of smallest member.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for i in 0..self.degree() {
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }

    /// `p^k` with left-to-right composition.
    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = Permutation { images: acc.images.iter().map(|&i| self.images[i]).collect() };
        }
        acc
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = alloc::vec![false; self.degree()];
        let mut any = false;
        for i in 0..self.degree() {
            if seen[i] || self.images[i] == i {
                seen[i] = true;
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", j + 1)?;
                j = self.images[j];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// The n-cycle `(1 2 ... n)`.
pub fn cycle_perm(n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidInput("cycle_perm needs n >= 1".into()));
    }
    Ok(Permutation { images: (0..n).map(|i| (i + 1) % n).collect() })
}

/// The transposition `(1 2)` on `[n]`.
pub fn transposition_perm(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::InvalidInput("transposition_perm needs n >= 2".into()));
    }
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(0, 1);
    Ok(Permutation { images })
}

/// `p` then `q`: the result maps `i` to `q(p(i))`. Folding this over the
/// letters of a word gives the permutation the word induces.
pub fn perm_compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::SizeMismatch { expected: p.degree(), found: q.degree() });
    }
    Ok(Permutation { images: p.images.iter().map(|&i| q.images[i]).collect() })
}

pub fn perm_inverse(p: &Permutation) -> Permutation {
    let mut images = alloc::vec![0; p.degree()];
    for (i, &j) in p.images.iter().enumerate() {
        images[j] = i;
    }
    Permutation { images }
}

/// Least `d >= 1` with `p^d` the identity: the lcm of the cycle lengths.
pub fn perm_order(p: &Permutation) -> usize {
    p.cycle_lengths().into_iter().fold(1, |acc, len| acc / gcd(acc, len) * len)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A set of points kept as a strictly increasing list (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    members: Vec<usize>,
}

impl KSubset {
    /// Builds a subset from 0-based points in any order; duplicates are rejected.
    pub fn new(points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = points.into_iter().collect();
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("repeated point in subset".into()));
        }
        Ok(KSubset { members })
    }

    /// Builds a subset from 1-based points, as written in labels.
    pub fn from_one_based(points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let pts = points
            .into_iter()
            .map(|p| p.checked_sub(1).ok_or_else(|| Error::InvalidInput("point 0 is not in [n]".into())))
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(pts)
    }

    /// `{1, ..., k}`.
    pub fn initial(k: usize) -> Self {
        KSubset { members: (0..k).collect() }
    }

    /// Parses a label such as `1234` (single-digit points) or `1.2.10`.
    pub fn parse_label(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(alloc::format!("bad subset label {s:?}"));
        if s.contains('.') {
            let pts = s.split('.').map(|t| t.parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
            KSubset::from_one_based(pts)
        } else {
            let pts =
                s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<Vec<_>>>()?;
            KSubset::from_one_based(pts)
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.members.binary_search(&point).is_ok()
    }

    pub fn is_subset_of(&self, other: &KSubset) -> bool {
        self.members.iter().all(|&p| other.contains(p))
    }

    /// Position of this subset in colex order among subsets of its size.
    pub fn colex_rank(&self) -> usize {
        colex_rank(&self.members)
    }

    /// `1234` when every point is at most 9, otherwise `1.2.10`.
    pub fn label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let wide = self.members.iter().any(|&p| p + 1 > 9);
        for (i, &p) in self.members.iter().enumerate() {
            if wide && i > 0 {
                s.push('.');
            }
            let _ = write!(s, "{}", p + 1);
        }
        s
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            f.write_str("{}")
        } else {
            f.write_str(&self.label())
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for KSubset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `X p = { p(i) | i in X }`, sorted.
pub fn act_on_subset(p: &Permutation, x: &KSubset) -> Result<KSubset> {
    if let Some(&bad) = x.members.iter().find(|&&i| i >= p.degree()) {
        return Err(Error::PointOutOfRange { point: bad, n: p.degree() });
    }
    let mut members: Vec<usize> = x.members.iter().map(|&i| p.images[i]).collect();
    members.sort_unstable();
    Ok(KSubset { members })
}

fn common_degree(generators: &[Permutation]) -> Result<usize> {
    let n =
        generators.first().ok_or_else(|| Error::InvalidInput("at least one generator is required".into()))?.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::SizeMismatch { expected: n, found: g.degree() });
    }
    Ok(n)
}

/// Orbit of `seed` under the group spanned by `generators`, in breadth-first
/// discovery order.
pub fn orbit(generators: &[Permutation], seed: &KSubset) -> Result<Vec<KSubset>> {
    let n = common_degree(generators)?;
    if let Some(&bad) = seed.members.iter().find(|&&i| i >= n) {
        return Err(Error::PointOutOfRange { point: bad, n });
    }
    let mut seen = alloc::vec![false; binomial(n, seed.len())];
    let mut out = Vec::new();
    let mut queue = VecDeque::from([seed.clone()]);
    seen[seed.colex_rank()] = true;
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = act_on_subset(g, &x)?;
            let r = y.colex_rank();
            if !seen[r] {
                seen[r] = true;
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// A shortest positive word over `generators` (letter `i` is
/// `generators[i]`) whose left-to-right product is `target`.
pub fn synthesize_word(generators: &[Permutation], target: &Permutation) -> Result<Word> {
    synthesize_word_capped(generators, target, DEFAULT_GROUP_CAP)
}

/// [`synthesize_word`] with an explicit bound on the number of group
/// elements the search may enumerate.
pub fn synthesize_word_capped(generators: &[Permutation], target: &Permutation, max_elements: usize) -> Result<Word> {
    let n = common_degree(generators)?;
    if target.degree() != n {
        return Err(Error::SizeMismatch { expected: n, found: target.degree() });
    }
    // element -> (index of parent element, letter); the identity has no parent
    let mut index: BTreeMap<Permutation, usize> = BTreeMap::new();
    let mut nodes: Vec<(Permutation, usize, usize)> = Vec::new();
    let id = Permutation::identity(n);
    index.insert(id.clone(), 0);
    nodes.push((id, usize::MAX, usize::MAX));
    let mut head = 0;
    let mut found = None;
    while head < nodes.len() {
        if nodes[head].0 == *target {
            found = Some(head);
            break;
        }
        for (c, g) in generators.iter().enumerate() {
            let next = perm_compose(&nodes[head].0, g)?;
            if !index.contains_key(&next) {
                if nodes.len() >= max_elements {
                    return Err(Error::CapacityExceeded {
                        what: "group enumeration",
                        limit: max_elements,
                        reached: nodes.len(),
                    });
                }
                index.insert(next.clone(), nodes.len());
                nodes.push((next, head, c));
            }
        }
        head += 1;
    }
    let mut at = found.ok_or(Error::NotInGroup)?;
    let mut letters = Vec::new();
    while nodes[at].1 != usize::MAX {
        letters.push(nodes[at].2);
        at = nodes[at].1;
    }
    letters.reverse();
    Ok(Word(letters))
}

/// Left-to-right product of the generators named by `word`.
pub fn word_permutation(generators: &[Permutation], word: &Word) -> Result<Permutation> {
    let n = common_degree(generators)?;
    word.letters().iter().try_fold(Permutation::identity(n), |acc, &c| {
        let g = generators.get(c).ok_or(Error::LetterOutOfRange { letter: c, alphabet_size: generators.len() })?;
        perm_compose(&acc, g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn perm1(images: &[usize]) -> Permutation {
        Permutation::from_images(images.iter().map(|i| i - 1).collect()).unwrap()
    }

    fn set1(points: &[usize]) -> KSubset {
        KSubset::from_one_based(points.iter().copied()).unwrap()
    }

    #[test]
    fn cycle_and_transposition() {
        assert_eq!(cycle_perm(6).unwrap(), perm1(&[2, 3, 4, 5, 6, 1]));
        assert!(cycle_perm(1).unwrap().is_identity());
        assert_eq!(cycle_perm(2).unwrap(), perm1(&[2, 1]));
        assert!(cycle_perm(0).is_err());
        assert_eq!(transposition_perm(6).unwrap(), perm1(&[2, 1, 3, 4, 5, 6]));
        assert_eq!(transposition_perm(2).unwrap(), cycle_perm(2).unwrap());
        assert!(transposition_perm(1).is_err());
        let b = transposition_perm(5).unwrap();
        assert!(perm_compose(&b, &b).unwrap().is_identity());
    }

    #[test]
    fn composition_order() {
        let a = cycle_perm(3).unwrap();
        let b = transposition_perm(3).unwrap();
        assert_eq!(perm_compose(&a, &Permutation::identity(3)).unwrap(), a);
        assert_eq!(perm_compose(&a, &a).unwrap(), perm1(&[3, 1, 2]));
        // 1 -b-> 2 -a-> 3, 2 -b-> 1 -a-> 2, 3 -b-> 3 -a-> 1
        assert_eq!(perm_compose(&b, &a).unwrap(), perm1(&[3, 2, 1]));
        assert!(perm_compose(&a, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn inverses_and_orders() {
        assert!(perm_inverse(&Permutation::identity(4)).is_identity());
        assert_eq!(perm_inverse(&cycle_perm(6).unwrap()), perm1(&[6, 1, 2, 3, 4, 5]));
        let b = transposition_perm(6).unwrap();
        assert_eq!(perm_inverse(&b), b);
        assert_eq!(perm_order(&Permutation::identity(5)), 1);
        assert_eq!(perm_order(&cycle_perm(6).unwrap()), 6);
        assert_eq!(perm_order(&b), 2);
        assert_eq!(perm_order(&perm1(&[2, 1, 4, 5, 3])), 6);
    }

    #[test]
    fn subset_action() {
        let a = cycle_perm(6).unwrap();
        let x = set1(&[1, 2, 3]);
        assert_eq!(act_on_subset(&Permutation::identity(6), &x).unwrap(), x);
        assert_eq!(act_on_subset(&a, &x).unwrap(), set1(&[2, 3, 4]));
        assert_eq!(act_on_subset(&perm_inverse(&a), &x).unwrap(), set1(&[1, 2, 6]));
        assert!(act_on_subset(&cycle_perm(2).unwrap(), &x).is_err());
    }

    #[test]
    fn orbits() {
        let id = Permutation::identity(4);
        assert_eq!(orbit(&[id], &set1(&[1, 2])).unwrap(), vec![set1(&[1, 2])]);
        let gens = [cycle_perm(6).unwrap(), transposition_perm(6).unwrap()];
        assert_eq!(orbit(&gens, &set1(&[1, 2, 3, 4])).unwrap().len(), 15);
        assert_eq!(orbit(&gens, &set1(&[1, 2, 3])).unwrap().len(), 20);
        assert!(orbit(&[], &set1(&[1])).is_err());
    }

    #[test]
    fn synthesis() {
        let gens = [cycle_perm(3).unwrap(), transposition_perm(3).unwrap()];
        assert!(synthesize_word(&gens, &Permutation::identity(3)).unwrap().is_empty());
        let inv = perm_inverse(&gens[0]);
        assert_eq!(synthesize_word(&gens, &inv).unwrap(), Word(vec![0, 0]));
        let gens6 = [cycle_perm(6).unwrap(), transposition_perm(6).unwrap()];
        assert_eq!(synthesize_word(&gens6, &gens6[1]).unwrap(), Word(vec![1]));
    }

    #[test]
    fn synthesis_outside_group() {
        // <(1 2 3)> does not contain (1 2)
        let gens = [cycle_perm(3).unwrap()];
        assert_eq!(synthesize_word(&gens, &transposition_perm(3).unwrap()), Err(Error::NotInGroup));
        let gens = [cycle_perm(7).unwrap(), transposition_perm(7).unwrap()];
        let far = perm_inverse(&gens[1]);
        assert!(matches!(
            synthesize_word_capped(&gens, &perm_compose(&far, &gens[0]).unwrap(), 3),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn labels() {
        assert_eq!(set1(&[1, 2, 3, 4]).label(), "1234");
        assert_eq!(set1(&[1, 10]).label(), "1.10");
        assert_eq!(KSubset::parse_label("1.10").unwrap(), set1(&[1, 10]));
        assert_eq!(KSubset::parse_label("126").unwrap(), set1(&[1, 2, 6]));
        assert!(KSubset::parse_label("102").is_err());
        assert!(KSubset::parse_label("11").is_err());
        assert_eq!(alloc::format!("{}", cycle_perm(3).unwrap()), "(1 2 3)");
        assert_eq!(alloc::format!("{}", Permutation::identity(3)), "()");
    }
}

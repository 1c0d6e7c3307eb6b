//! Compositions, partitions and permutations: the index language for every
//! basis in the crate.
//!
//! Ordering convention: indices are compared first by size and then
//! reverse-lexicographically on their parts, so that within one degree
//! `(3) < (2,1) < (1,2) < (1,1,1)`. Every enumeration below returns its
//! output in this order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::factorial;

fn canonical_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
    sa.cmp(&sb).then_with(|| b.cmp(a))
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("composition {parts:?} has a zero part"));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|α|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(α)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// `(α_1, …, α_{r-1})`, or `None` for the empty composition.
    pub fn without_last(&self) -> Option<Composition> {
        let (_, init) = self.0.split_last()?;
        Some(Composition(init.to_vec()))
    }

    /// `α·β`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α⊙β`: concatenation with the last part of `α` fused to the first of `β`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        let (Some(&a), Some(&b)) = (self.0.last(), other.0.first()) else {
            return domain("near-concatenation needs two nonempty compositions");
        };
        let mut parts = self.0[..self.0.len() - 1].to_vec();
        parts.push(a + b);
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// All ways to write `α = β·γ`, from `β = ∅` to `γ = ∅`.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Composition, Composition)> + '_ {
        (0..=self.0.len()).map(move |i| (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec())))
    }

    /// True iff `self ⪯ coarser`, i.e. consecutive blocks of `self` sum to
    /// the parts of `coarser` in order.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        let mut it = self.0.iter();
        for &target in &coarser.0 {
            let mut acc = 0;
            while acc < target {
                match it.next() {
                    Some(&p) => acc += p,
                    None => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        it.next().is_none()
    }

    /// Every composition `β` with `self ⪯ β`, one per subset of the
    /// `ℓ(α)-1` gaps that get fused.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.0.is_empty() {
            return vec![Composition::empty()];
        }
        let gaps = self.0.len() - 1;
        let mut out: Vec<Composition> = (0u64..1 << gaps)
            .map(|mask| {
                let mut parts = vec![self.0[0]];
                for (g, &p) in self.0[1..].iter().enumerate() {
                    if mask >> g & 1 == 1 {
                        *parts.last_mut().unwrap() += p;
                    } else {
                        parts.push(p);
                    }
                }
                Composition(parts)
            })
            .collect();
        out.sort();
        out
    }

    /// Every composition `β` with `β ⪯ self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut acc = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = compositions(p);
            acc = acc
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    pieces.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(&c.0);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<Composition> = acc.into_iter().map(Composition).collect();
        out.sort();
        out
    }

    /// `α̃`, the parts sorted into a partition.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// True iff the parts are weakly decreasing.
    pub fn is_partition_shaped(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str("]")
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition {parts:?} has a zero part"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return domain(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `λ - j`: one copy of the part `j` removed, if present.
    pub fn remove_part(&self, j: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == j)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// `(i, m_i)` for each distinct part `i`, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_factor(&self) -> BigInt {
        self.multiplicities().into_iter().fold(BigInt::one(), |acc, (i, m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m as u64)
        })
    }

    /// Each part occurs fewer than `ell` times.
    pub fn is_ell_regular(&self, ell: usize) -> bool {
        self.multiplicities().iter().all(|&(_, m)| m < ell)
    }

    pub fn has_part_divisible_by(&self, ell: usize) -> bool {
        self.0.iter().any(|p| p % ell == 0)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All distinct rearrangements of the parts, in canonical order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Composition(parts.clone()));
            if !next_permutation(&mut parts) {
                break;
            }
        }
        out.sort();
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// All compositions of `n`, `2^{n-1}` of them for `n ≥ 1`.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    // Bit g of the mask says whether the gap after unit g is a cut.
    let mut out: Vec<Composition> = (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for g in 0..n - 1 {
                if mask >> g & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect();
    out.sort();
    out
}

/// Partitions of `n`, largest parts first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` in which no part occurs `ell` or more times.
pub fn ell_regular_partitions(n: usize, ell: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.is_ell_regular(ell)).collect()
}

/// Partitions of `n` none of whose parts is divisible by `ell`.
pub fn partitions_no_part_divisible(n: usize, ell: usize) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| !p.has_part_divisible_by(ell))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Compositions,
    Partitions,
    EllRegular,
    NoPartDivisible,
}

impl std::str::FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "compositions" => IndexKind::Compositions,
            "partitions" => IndexKind::Partitions,
            "ell_regular" => IndexKind::EllRegular,
            "no_part_divisible" => IndexKind::NoPartDivisible,
            _ => return Err(Error::Usage(format!("unknown index kind {s:?}"))),
        })
    }
}

/// Enumerates indices of one kind in canonical order, as raw part lists.
pub fn enumerate_index(kind: IndexKind, n: usize, ell: Option<usize>) -> Result<Vec<Vec<usize>>> {
    let need_ell = || match ell {
        Some(l) if l >= 2 => Ok(l),
        Some(l) => Err(Error::Usage(format!("modulus must be at least 2, got {l}"))),
        None => Err(Error::Usage(format!("{kind:?} needs a modulus ell"))),
    };
    Ok(match kind {
        IndexKind::Compositions => compositions(n).into_iter().map(Vec::from).collect(),
        IndexKind::Partitions => partitions(n).into_iter().map(Vec::from).collect(),
        IndexKind::EllRegular => ell_regular_partitions(n, need_ell()?)
            .into_iter()
            .map(Vec::from)
            .collect(),
        IndexKind::NoPartDivisible => partitions_no_part_divisible(n, need_ell()?)
            .into_iter()
            .map(Vec::from)
            .collect(),
    })
}

/// A permutation of `{1, …, n}` in one-line notation.
///
/// Products compose as functions: `(u·v)(i) = u(v(i))`, so right
/// multiplication by `s_i` swaps the entries in positions `i` and `i+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{one_line:?} is not a permutation of 1..{n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `w₀`, the longest element `i ↦ n+1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// `s_i` in `S_n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Permutation::identity(n).right_mul_generator(i)
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(Permutation::identity(n), |w, &i| w.right_mul_generator(i))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.rank() {
            return domain(format!("generator s_{i} out of range for S_{}", self.rank()));
        }
        Ok(())
    }

    /// `w·s_i`.
    pub fn right_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Ok(Permutation(w))
    }

    /// `s_i·w`.
    pub fn left_mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        Ok(Permutation(
            self.0
                .iter()
                .map(|&v| match v {
                    v if v == i => i + 1,
                    v if v == i + 1 => i,
                    v => v,
                })
                .collect(),
        ))
    }

    /// True iff `ℓ(w·s_i) > ℓ(w)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// True iff `ℓ(s_i·w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// `u·v` as functions.
    pub fn compose(&self, v: &Permutation) -> Result<Permutation> {
        if self.rank() != v.rank() {
            return domain("cannot compose permutations of different rank");
        }
        Ok(Permutation(v.0.iter().map(|&j| self.0[j - 1]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Lexicographically least reduced word: repeatedly strip the smallest
    /// left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.left_mul_generator(i).expect("descent index is in range");
        }
        word
    }

    /// A second reduced word, built by stripping the largest right descent.
    /// Used to check that products do not depend on the chosen word.
    pub fn alternate_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).rev().find(|&i| !w.right_ascent(i)) {
            word.push(i);
            w = w.right_mul_generator(i).expect("descent index is in range");
        }
        word.reverse();
        word
    }

    /// Places `self` on the letters `offset+1 ..= offset+rank` of `S_total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut out: Vec<usize> = (1..=total).collect();
        for (i, &v) in self.0.iter().enumerate() {
            out[offset + i] = offset + v;
        }
        Permutation(out)
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut v: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(v.clone())];
        while next_permutation(&mut v) {
            out.push(Permutation(v.clone()));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    /// Oracle: every way of grouping consecutive parts, by brute recursion.
    fn groupings(parts: &[usize]) -> Vec<Vec<usize>> {
        if parts.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 1..=parts.len() {
            let head: usize = parts[..k].iter().sum();
            for mut rest in groupings(&parts[k..]) {
                rest.insert(0, head);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn refinement_examples() {
        assert!(c(&[1, 2, 1]).refines(&c(&[1, 3])));
        assert!(c(&[2]).refines(&c(&[2])));
        assert!(!c(&[1, 3]).refines(&c(&[1, 2, 1])));
        assert!(!groupings(&[1, 3]).contains(&vec![1, 2, 1]));
        assert!(!c(&[1, 1]).refines(&c(&[3])));
    }

    #[test]
    fn concatenations() {
        let a = c(&[1, 2, 1]);
        let b = c(&[3, 5]);
        assert_eq!(a.concat(&b), c(&[1, 2, 1, 3, 5]));
        assert_eq!(a.near_concat(&b).unwrap(), c(&[1, 2, 4, 5]));
        assert_eq!(c(&[2]).concat(&Composition::empty()), c(&[2]));
        assert_eq!(c(&[1]).near_concat(&c(&[1])).unwrap(), c(&[2]));
        assert!(matches!(
            Composition::empty().near_concat(&c(&[1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sorting() {
        assert_eq!(c(&[1, 3, 1]).sort_to_partition().parts(), &[3, 1, 1]);
        assert!(Composition::empty().sort_to_partition().is_empty());
        assert_eq!(c(&[2, 5, 2, 1]).sort_to_partition().parts(), &[5, 2, 2, 1]);
    }

    #[test]
    fn enumeration_examples() {
        let comps = enumerate_index(IndexKind::Compositions, 3, None).unwrap();
        assert_eq!(comps, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        let reg = enumerate_index(IndexKind::EllRegular, 5, Some(2)).unwrap();
        let odd = enumerate_index(IndexKind::NoPartDivisible, 5, Some(2)).unwrap();
        assert_eq!((reg.len(), odd.len()), (3, 3));
        assert!(matches!(
            enumerate_index(IndexKind::EllRegular, 5, None),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn composition_counts_match_bitmask_bijection() {
        for n in 1..=10 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // Oracle: weakly decreasing filter over all compositions.
        for n in 0..=10 {
            let brute = compositions(n).into_iter().filter(|c| c.is_partition_shaped()).count();
            assert_eq!(partitions(n).len(), brute, "n = {n}");
        }
    }

    #[test]
    fn coarsening_count_and_oracle() {
        for n in 1..=7 {
            for a in compositions(n) {
                let coarse = a.coarsenings();
                assert_eq!(coarse.len(), 1 << (a.len() - 1));
                let mut oracle: Vec<Composition> = groupings(a.parts()).into_iter().map(|p| c(&p)).collect();
                oracle.sort();
                assert_eq!(coarse, oracle);
                for b in &coarse {
                    assert!(a.refines(b));
                }
            }
        }
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=6 {
            let all = compositions(n);
            for a in &all {
                assert!(a.refines(a));
                for b in &all {
                    if a != b && a.refines(b) {
                        assert!(!b.refines(a));
                    }
                    for d in &all {
                        if a.refines(b) && b.refines(d) {
                            assert!(a.refines(d));
                        }
                    }
                }
                let refs = a.refinements();
                let oracle: Vec<_> = all.iter().filter(|b| b.refines(a)).cloned().collect();
                assert_eq!(refs, oracle);
            }
        }
    }

    #[test]
    fn glaisher_small() {
        for ell in 2..=4 {
            for n in 0..=12 {
                assert_eq!(
                    ell_regular_partitions(n, ell).len(),
                    partitions_no_part_divisible(n, ell).len()
                );
            }
        }
    }

    #[test]
    fn permutation_examples() {
        let id = Permutation::identity(3);
        assert_eq!(id.length(), 0);
        assert!(id.reduced_word().is_empty());
        assert_eq!(Permutation::longest(3).length(), 3);
        let w = Permutation::new(vec![2, 1, 3]).unwrap().right_mul_generator(2).unwrap();
        assert_eq!(w.one_line(), &[2, 3, 1]);
        assert_eq!(w.length(), 2);
        assert!(id.right_mul_generator(3).is_err());
        assert!(id.right_mul_generator(0).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn reduced_words_reproduce_permutations() {
        for n in 0..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
                let alt = w.alternate_reduced_word();
                assert_eq!(alt.len(), w.length());
                assert_eq!(Permutation::from_word(n, &alt).unwrap(), w);
            }
            assert_eq!(Permutation::longest(n).length(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn reduced_word_is_lexicographically_least() {
        // Oracle: search all words of length ℓ(w).
        fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for w in words(n, len - 1) {
                for i in 1..n {
                    let mut v = w.clone();
                    v.push(i);
                    out.push(v);
                }
            }
            out
        }
        for w in Permutation::all(4) {
            let best = words(4, w.length())
                .into_iter()
                .filter(|word| Permutation::from_word(4, word).unwrap() == w)
                .min()
                .unwrap();
            assert_eq!(w.reduced_word(), best);
        }
    }

    #[test]
    fn z_factor_values() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(p(&[1, 1]).z_factor(), BigInt::from(2));
        assert_eq!(p(&[2, 1]).z_factor(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z_factor(), BigInt::from(8));
        assert_eq!(Partition::empty().z_factor(), BigInt::from(1));
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&Composition::empty()).unwrap(), "[]");
        let p: Result<Partition> = serde_json::from_str::<Partition>("[1,2]").map_err(|e| Error::Parse(e.to_string()));
        assert!(p.is_err());
        let q: Partition = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(q.parts(), &[2, 1]);
    }
}

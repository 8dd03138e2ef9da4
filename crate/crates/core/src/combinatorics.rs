//! Multi-indices, permutation signs and the generalized Kronecker delta.
//!
//! Indices are 0-based everywhere. A [`MultiIndex`] is a strictly increasing
//! tuple of indices in `[0, n)`; multi-indices of a fixed size are ordered
//! lexicographically and ranked with the combinatorial number system.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{ensure, Error, Result};
use crate::MAX_DIM;

const BINOM_SIZE: usize = MAX_DIM + 1;

fn binom_table() -> &'static [[u64; BINOM_SIZE]; BINOM_SIZE] {
    static TABLE: OnceLock<[[u64; BINOM_SIZE]; BINOM_SIZE]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0u64; BINOM_SIZE]; BINOM_SIZE];
        for n in 0..BINOM_SIZE {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    if n < BINOM_SIZE {
        return binom_table()[n][k] as usize;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing index tuple over an `n`-dimensional space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    n: u8,
    len: u8,
    idx: [u8; MAX_DIM],
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}

impl MultiIndex {
    pub fn new(indices: &[usize], n: usize) -> Result<Self> {
        ensure!(
            (1..=MAX_DIM).contains(&n),
            Input,
            "dimension {n} outside 1..={MAX_DIM}"
        );
        ensure!(
            indices.len() <= n,
            Input,
            "{} indices in dimension {n}",
            indices.len()
        );
        let mut idx = [0u8; MAX_DIM];
        for (k, &i) in indices.iter().enumerate() {
            ensure!(i < n, Input, "index {i} out of range for n = {n}");
            if k > 0 {
                ensure!(
                    indices[k - 1] < i,
                    Input,
                    "indices {indices:?} not strictly increasing"
                );
            }
            idx[k] = i as u8;
        }
        Ok(MultiIndex {
            n: n as u8,
            len: indices.len() as u8,
            idx,
        })
    }

    pub(crate) fn from_bits(bits: u32, n: usize) -> Self {
        let mut idx = [0u8; MAX_DIM];
        let mut len = 0;
        for i in 0..n {
            if bits & (1 << i) != 0 {
                idx[len] = i as u8;
                len += 1;
            }
        }
        MultiIndex {
            n: n as u8,
            len: len as u8,
            idx,
        }
    }

    pub fn empty(n: usize) -> Self {
        MultiIndex {
            n: n as u8,
            len: 0,
            idx: [0; MAX_DIM],
        }
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.idx[..self.len as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.as_slice().iter().map(|&i| i as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn get(&self, k: usize) -> usize {
        self.idx[k] as usize
    }

    pub fn bits(&self) -> u32 {
        self.iter().fold(0u32, |b, i| b | (1 << i))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.as_slice().contains(&(i as u8))
    }

    /// Lexicographic position among all increasing tuples of the same size.
    pub fn rank(&self) -> usize {
        let n = self.dim();
        let p = self.len();
        // Reversing i -> n-1-i turns lexicographic order into colex order.
        let colex: usize = self
            .iter()
            .enumerate()
            .map(|(k, i)| binomial(n - 1 - i, p - k))
            .sum();
        binomial(n, p) - 1 - colex
    }

    pub fn unrank(n: usize, p: usize, rank: usize) -> Result<Self> {
        ensure!(
            (1..=MAX_DIM).contains(&n),
            Input,
            "dimension {n} outside 1..={MAX_DIM}"
        );
        ensure!(p <= n, Input, "size {p} exceeds dimension {n}");
        let total = binomial(n, p);
        ensure!(rank < total, Input, "rank {rank} out of range 0..{total}");
        let mut colex = total - 1 - rank;
        let mut idx = [0u8; MAX_DIM];
        // Greedy decode of the colex rank over reflected indices.
        let mut upper = n;
        for k in 0..p {
            let size = p - k;
            let mut c = upper - 1;
            while binomial(c, size) > colex {
                c -= 1;
            }
            colex -= binomial(c, size);
            idx[k] = (n - 1 - c) as u8;
            upper = c;
        }
        Ok(MultiIndex {
            n: n as u8,
            len: p as u8,
            idx,
        })
    }

    /// All increasing tuples of size `p`, in rank order.
    pub fn all(n: usize, p: usize) -> Vec<MultiIndex> {
        basis(n, p).to_vec()
    }

    /// Complement in `{0, ..., n-1}`, increasing.
    pub fn complement(&self) -> MultiIndex {
        let n = self.dim();
        MultiIndex::from_bits(!self.bits() & ((1u32 << n) - 1), n)
    }

    pub fn union(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex::from_bits(self.bits() | other.bits(), self.dim())
    }

    pub fn without(&self, i: usize) -> MultiIndex {
        MultiIndex::from_bits(self.bits() & !(1u32 << i), self.dim())
    }
}

/// Cached basis of increasing `p`-tuples for dimension `n`, in rank order.
pub fn basis(n: usize, p: usize) -> &'static [MultiIndex] {
    static CACHE: OnceLock<Vec<Vec<Vec<MultiIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=MAX_DIM)
            .map(|n| {
                (0..=n)
                    .map(|p| {
                        if n == 0 {
                            return vec![MultiIndex::empty(1)];
                        }
                        let mut out: Vec<MultiIndex> = (0u32..(1u32 << n))
                            .filter(|b| b.count_ones() as usize == p)
                            .map(|b| MultiIndex::from_bits(b, n))
                            .collect();
                        out.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
                        out
                    })
                    .collect()
            })
            .collect()
    });
    &cache[n][p]
}

/// Rank of the increasing tuple given as a bit set.
pub(crate) fn rank_bits(bits: u32, n: usize) -> usize {
    let p = bits.count_ones() as usize;
    let mut colex = 0;
    let mut k = 0;
    for i in 0..n {
        if bits & (1 << i) != 0 {
            colex += binomial(n - 1 - i, p - k);
            k += 1;
        }
    }
    binomial(n, p) - 1 - colex
}

/// Sign of the permutation sorting `seq`, or 0 when an entry repeats.
pub fn permutation_sign(seq: &[usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Sign of the shuffle `(A, B)` for disjoint bit sets: `(-1)^{#{(a,b): a > b}}`.
pub(crate) fn shuffle_sign_bits(a: u32, b: u32) -> i8 {
    if a & b != 0 {
        return 0;
    }
    let mut inversions = 0u32;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        inversions += (b & ((1u32 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of sorting the concatenation `(a, b)` together with the merged tuple.
///
/// The sign is 0 (and the merged tuple `None`) when `a` and `b` share an index.
pub fn merge_sign(a: &MultiIndex, b: &MultiIndex) -> Result<(i8, Option<MultiIndex>)> {
    ensure!(
        a.dim() == b.dim(),
        Dimension,
        "multi-indices over {} and {}",
        a.dim(),
        b.dim()
    );
    let sign = shuffle_sign_bits(a.bits(), b.bits());
    if sign == 0 {
        return Ok((0, None));
    }
    Ok((sign, Some(a.union(b))))
}

/// Complement of `i` together with the sign of the permutation `(I, I^c)`.
pub fn complement_sign(i: &MultiIndex) -> (i8, MultiIndex) {
    let c = i.complement();
    (shuffle_sign_bits(i.bits(), c.bits()), c)
}

/// Generalized Kronecker delta: `det[δ^{A_r}_{B_s}]`.
pub fn generalized_delta(upper: &[usize], lower: &[usize]) -> Result<i64> {
    ensure!(
        upper.len() == lower.len(),
        Input,
        "generalized delta needs equal lengths, got {} and {}",
        upper.len(),
        lower.len()
    );
    // The 0/1 matrix has a nonzero determinant only when it is a permutation matrix.
    let mut perm = Vec::with_capacity(upper.len());
    for &a in upper {
        let mut hits = lower.iter().enumerate().filter(|(_, &b)| b == a);
        match (hits.next(), hits.next()) {
            (Some((s, _)), None) => perm.push(s),
            _ => return Ok(0),
        }
    }
    Ok(permutation_sign(&perm) as i64)
}

/// All subsets of `bits` with exactly `k` elements.
pub(crate) fn subsets_of_size(bits: u32, k: usize) -> Vec<u32> {
    let elems: Vec<u32> = (0..32).filter(|i| bits & (1 << i) != 0).collect();
    let m = elems.len();
    if k > m {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(m, k));
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize == k {
            out.push(
                elems
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .fold(0u32, |acc, (_, &e)| acc | (1 << e)),
            );
        }
    }
    out
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::Input(format!("dimension {n} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[usize], n: usize) -> MultiIndex {
        MultiIndex::new(v, n).unwrap()
    }

    /// Brute-force oracle: Leibniz sum over all permutations.
    fn delta_by_permutations(a: &[usize], b: &[usize]) -> i64 {
        fn perms(m: usize) -> Vec<Vec<usize>> {
            if m == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(m - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, m - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(a.len())
            .into_iter()
            .map(|s| {
                let prod: i64 = (0..a.len()).map(|i| (a[i] == b[s[i]]) as i64).product();
                permutation_sign(&s) as i64 * prod
            })
            .sum()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(mi(&[0, 1], 4).rank(), 0);
        assert_eq!(mi(&[2, 3], 4).rank(), 5);
        // Position of (0,2,3) among the 10 triples of 5, by enumeration.
        let all: Vec<Vec<usize>> = (0..5)
            .flat_map(|a| (a + 1..5).flat_map(move |b| (b + 1..5).map(move |c| vec![a, b, c])))
            .collect();
        assert_eq!(all.len(), 10);
        let expected = all.iter().position(|t| t == &vec![0, 2, 3]).unwrap();
        assert_eq!(expected, 3);
        assert_eq!(mi(&[0, 2, 3], 5).rank(), expected);
        for (r, t) in all.iter().enumerate() {
            assert_eq!(mi(t, 5).rank(), r);
            assert_eq!(MultiIndex::unrank(5, 3, r).unwrap().to_vec(), *t);
        }
    }

    #[test]
    fn rank_unrank_roundtrip_all_sizes() {
        for n in 1..=10 {
            for p in 0..=n {
                let b = basis(n, p);
                assert_eq!(b.len(), binomial(n, p));
                for (r, m) in b.iter().enumerate() {
                    assert_eq!(m.rank(), r);
                    assert_eq!(rank_bits(m.bits(), n), r);
                    assert_eq!(MultiIndex::unrank(n, p, r).unwrap(), *m);
                }
            }
        }
    }

    #[test]
    fn invalid_multi_indices_rejected() {
        assert!(MultiIndex::new(&[1, 1], 4).is_err());
        assert!(MultiIndex::new(&[2, 1], 4).is_err());
        assert!(MultiIndex::new(&[0, 4], 4).is_err());
        assert!(MultiIndex::new(&[0], 17).is_err());
        assert!(MultiIndex::unrank(4, 2, 6).is_err());
    }

    #[test]
    fn merge_sign_examples() {
        let (s, m) = merge_sign(&mi(&[0], 4), &mi(&[1], 4)).unwrap();
        assert_eq!((s, m.unwrap().to_vec()), (1, vec![0, 1]));
        let (s, m) = merge_sign(&mi(&[1], 4), &mi(&[0], 4)).unwrap();
        assert_eq!((s, m.unwrap().to_vec()), (-1, vec![0, 1]));
        let (s, m) = merge_sign(&mi(&[0, 2], 4), &mi(&[1, 3], 4)).unwrap();
        assert_eq!((s, m.unwrap().to_vec()), (-1, vec![0, 1, 2, 3]));
        assert_eq!(
            merge_sign(&mi(&[0, 2], 4), &mi(&[2, 3], 4)).unwrap(),
            (0, None)
        );
    }

    #[test]
    fn merge_sign_matches_inversion_count_and_graded_swap() {
        for n in 1..=6 {
            for pa in 0..=n {
                for a in basis(n, pa) {
                    for pb in 0..=(n - pa) {
                        for b in basis(n, pb) {
                            if a.bits() & b.bits() != 0 {
                                continue;
                            }
                            let cat: Vec<usize> = a.iter().chain(b.iter()).collect();
                            let (s_ab, _) = merge_sign(a, b).unwrap();
                            let (s_ba, _) = merge_sign(b, a).unwrap();
                            assert_eq!(s_ab, permutation_sign(&cat));
                            let expect = if (pa * pb) % 2 == 0 { 1 } else { -1 };
                            assert_eq!(s_ab * s_ba, expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_sign_examples() {
        assert_eq!(complement_sign(&mi(&[0, 1], 4)), (1, mi(&[2, 3], 4)));
        assert_eq!(complement_sign(&mi(&[2, 3], 4)), (1, mi(&[0, 1], 4)));
        // (1,2,0,3) has two inversions.
        assert_eq!(permutation_sign(&[1, 2, 0, 3]), 1);
        assert_eq!(complement_sign(&mi(&[1, 2], 4)), (1, mi(&[0, 3], 4)));
        // (1,0,2,3): one inversion.
        assert_eq!(complement_sign(&mi(&[1], 4)), (-1, mi(&[0, 2, 3], 4)));
    }

    #[test]
    fn complement_sign_matches_permutation_sign() {
        for n in 1..=7 {
            for p in 0..=n {
                for i in basis(n, p) {
                    let (s, c) = complement_sign(i);
                    let cat: Vec<usize> = i.iter().chain(c.iter()).collect();
                    assert_eq!(s, permutation_sign(&cat));
                    let (s2, back) = complement_sign(&c);
                    assert_eq!(back, *i);
                    // Applying twice gives (-1)^{p(n-p)}, the Hodge double-star sign.
                    let expect = if (p * (n - p)) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(s * s2, expect);
                }
            }
        }
    }

    #[test]
    fn generalized_delta_examples() {
        assert_eq!(generalized_delta(&[1, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(generalized_delta(&[1, 2], &[2, 1]).unwrap(), -1);
        assert_eq!(generalized_delta(&[1, 1], &[1, 2]).unwrap(), 0);
        assert!(generalized_delta(&[1, 2], &[1]).is_err());
        assert_eq!(generalized_delta(&[], &[]).unwrap(), 1);
    }

    #[test]
    fn generalized_delta_matches_permutation_sum() {
        fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
            (0..n.pow(m as u32))
                .map(|mut code| {
                    (0..m)
                        .map(|_| {
                            let d = code % n;
                            code /= n;
                            d
                        })
                        .collect()
                })
                .collect()
        }
        for m in 0..=3 {
            for n in [2, 4, 6] {
                let ts = tuples(m, n);
                for a in &ts {
                    for b in &ts {
                        assert_eq!(
                            generalized_delta(a, b).unwrap(),
                            delta_by_permutations(a, b)
                        );
                    }
                }
            }
        }
        // m = 4: spot check over a sub-lattice to keep the run short.
        let ts = tuples(4, 4);
        for a in ts.iter().step_by(7) {
            for b in ts.iter().step_by(5) {
                assert_eq!(
                    generalized_delta(a, b).unwrap(),
                    delta_by_permutations(a, b)
                );
            }
        }
    }

    #[test]
    fn subsets_enumeration() {
        let s = subsets_of_size(0b10110, 2);
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|m| m & !0b10110 == 0 && m.count_ones() == 2));
        assert!(subsets_of_size(0b11, 3).is_empty());
    }
}

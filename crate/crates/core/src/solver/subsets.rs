//! k-subsets of `0..n` as bitmasks, in increasing numeric (colex) order.

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The subset of colex rank `rank` via the combinatorial number system.
pub(crate) fn unrank(k: usize, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    for j in (1..=k).rev() {
        // largest c with C(c, j) <= rank
        let mut c = j - 1;
        while binomial(c + 1, j) <= rank {
            c += 1;
        }
        rank -= binomial(c, j);
        mask |= 1u64 << c;
    }
    mask
}

pub(crate) struct KSubsets {
    next: Option<u64>,
    n: usize,
}

impl KSubsets {
    pub fn from_rank(n: usize, k: usize, rank: u64) -> Self {
        debug_assert!(k >= 1 && k <= n && n <= 64);
        let next = (rank < binomial(n, k)).then(|| unrank(k, rank));
        KSubsets { next, n }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        // Gosper's hack, done in u128 so that n = 64 cannot overflow
        let c = cur as u128;
        let low = c & c.wrapping_neg();
        let ripple = c + low;
        let succ = (((ripple ^ c) >> 2) / low) | ripple;
        self.next = (succ >> self.n == 0).then_some(succ as u64);
        Some(cur)
    }
}

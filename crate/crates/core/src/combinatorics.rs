//! Small exact-arithmetic and bitmask helpers.

/// Binomial coefficient; zero when `k > n`.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Mask with the low `n` bits set.
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates every submask of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Iterates all `k`-element subsets of `{0, .., n-1}` as masks, in increasing
/// numeric order (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = low_mask(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(low_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt & !limit == 0).then_some(nxt)
            }
        };
        Some(cur)
    })
}

/// Iterates the indices of set bits in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

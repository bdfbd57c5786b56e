//! Exhaustive enumeration of small set partitions.
//!
//! Nothing here shares code with the `ordmode` recurrences: partitions are
//! generated explicitly and counted.

/// All set partitions of `{0, ..., n-1}` as restricted growth strings:
/// `rgs[i]` is the block of element `i`, and `rgs[i] <= 1 + max(rgs[..i])`.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, blocks: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            extend(prefix, blocks.max(b + 1), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

fn block_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// `S(n, k)` for `k = 0..=n`, by counting partitions of an `n`-set.
pub fn stirling2_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    for p in set_partitions(n) {
        row[block_count(&p)] += 1;
    }
    row
}

/// `S_r(n, k)` for `k = 0..=n`: partitions of an `(n+r)`-set into `k+r`
/// blocks with elements `0..r` in pairwise distinct blocks.
pub fn r_stirling_row(n: usize, r: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    for p in set_partitions(n + r) {
        let distinct = (0..r).all(|i| (0..i).all(|j| p[i] != p[j]));
        if distinct {
            row[block_count(&p) - r] += 1;
        }
    }
    row
}

/// All ordered set partitions of `{0, ..., n-1}`, each a sequence of
/// nonempty blocks given as bitmasks.
pub fn ordered_set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn extend(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        // Every nonempty submask of `remaining` can be the next block.
        let mut sub = remaining;
        while sub != 0 {
            prefix.push(sub);
            extend(remaining & !sub, prefix, out);
            prefix.pop();
            sub = (sub - 1) & remaining;
        }
    }
    assert!(n < 32);
    let mut out = Vec::new();
    extend((1u32 << n) - 1, &mut Vec::new(), &mut out);
    out
}

/// Ordered set partitions of an `n`-set counted by number of blocks, i.e.
/// `k! S(n, k)`.
pub fn ordered_stirling_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    for p in ordered_set_partitions(n) {
        row[p.len()] += 1;
    }
    row
}

/// The Fubini number: all ordered set partitions of an `n`-set.
pub fn fubini(n: usize) -> u64 {
    ordered_set_partitions(n).len() as u64
}

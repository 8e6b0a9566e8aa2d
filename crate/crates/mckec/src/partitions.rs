//! Set partitions of {0..n-1} as restricted growth strings.
//!
//! A restricted growth string assigns element i a block id `a[i]` with
//! `a[0] = 0` and `a[i] <= 1 + max(a[0..i])`; every set partition has exactly
//! one such encoding, and enumerating strings in lexicographic order yields a
//! canonical, reproducible partition order.

/// Calls `f(rgs, block_count)` for every set partition of `{0..n-1}`,
/// in lexicographic restricted-growth-string order.
pub fn for_each_partition<F: FnMut(&[usize], usize)>(n: usize, mut f: F) {
    if n == 0 {
        f(&[], 0);
        return;
    }
    let mut rgs = vec![0usize; n];
    rec(&mut rgs, 1, 0, &mut f);
}

fn rec<F: FnMut(&[usize], usize)>(rgs: &mut [usize], pos: usize, max_used: usize, f: &mut F) {
    if pos == rgs.len() {
        f(rgs, max_used + 1);
        return;
    }
    for b in 0..=(max_used + 1) {
        rgs[pos] = b;
        rec(rgs, pos + 1, max_used.max(b), f);
    }
    rgs[pos] = 0;
}

/// Expands a restricted growth string into explicit blocks.
pub fn rgs_blocks(rgs: &[usize], block_count: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); block_count];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

//! Word-slice bitset helpers shared by the detection kernels.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn contains(row: &[u64], v: usize) -> bool {
    row[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
pub fn insert(row: &mut [u64], v: usize) {
    row[v / 64] |= 1u64 << (v % 64);
}

#[inline]
pub fn remove(row: &mut [u64], v: usize) {
    row[v / 64] &= !(1u64 << (v % 64));
}

#[inline]
pub fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `out = a & b`, returning the population count of the result.
#[inline]
pub fn intersect_into(a: &[u64], b: &[u64], out: &mut [u64]) -> usize {
    let mut total = 0;
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
        total += o.count_ones() as usize;
    }
    total
}

#[inline]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Lowest set bit of `a & b`.
#[inline]
pub fn first_common(a: &[u64], b: &[u64]) -> Option<usize> {
    a.iter()
        .zip(b)
        .enumerate()
        .find_map(|(i, (x, y))| {
            let w = x & y;
            (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
        })
}

pub fn first(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find_map(|(i, &w)| (w != 0).then(|| i * 64 + w.trailing_zeros() as usize))
}

/// Iterates the set bits of `row` in increasing order.
pub fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

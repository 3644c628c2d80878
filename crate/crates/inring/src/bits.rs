//! Minimal fixed-size bitset helpers over plain u64 slices. The exact
//! searches juggle a few thousand bits per state and clone states on every
//! branch, so this stays free of any container abstraction.

pub(crate) fn words(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1u64 << (i % 64);
}

pub(crate) fn clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1u64 << (i % 64));
}

pub(crate) fn test(b: &[u64], i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn count(b: &[u64]) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

pub(crate) fn fill_range(b: &mut [u64], n: usize) {
    for i in 0..n / 64 {
        b[i] = !0;
    }
    if n % 64 != 0 {
        b[n / 64] = (1u64 << (n % 64)) - 1;
    }
}

/// a &= b
pub(crate) fn and_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

/// a &= !b
pub(crate) fn and_not_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= !y;
    }
}

/// popcount(a & b)
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Indices of set bits, ascending.
pub(crate) fn ones(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + bit)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let mut b = vec![0u64; words(130)];
        assert_eq!(b.len(), 3);
        set(&mut b, 0);
        set(&mut b, 64);
        set(&mut b, 129);
        assert!(test(&b, 64));
        assert!(!test(&b, 63));
        assert_eq!(count(&b), 3);
        assert_eq!(ones(&b).collect::<Vec<_>>(), vec![0, 64, 129]);
        clear(&mut b, 64);
        assert_eq!(count(&b), 2);
        assert!(!is_empty(&b));

        let mut full = vec![0u64; words(70)];
        fill_range(&mut full, 70);
        assert_eq!(count(&full), 70);
        and_not_assign(&mut full, &{
            let mut m = vec![0u64; words(70)];
            set(&mut m, 69);
            m
        });
        assert_eq!(count(&full), 69);
        assert!(!test(&full, 69));
    }
}

/// Membership bits over `[0, n]` with a forward "next member" scan.
#[derive(Clone, Debug)]
pub(crate) struct BitList {
    words: Vec<u64>,
    n: u64,
}

impl BitList {
    /// All of `[lo, n]` present.
    pub(crate) fn filled(lo: u64, n: u64) -> Self {
        let len = (n / 64 + 1) as usize;
        let mut list = BitList {
            words: vec![u64::MAX; len],
            n,
        };
        // clear the tail past n
        let tail = (n % 64) + 1;
        if tail < 64 {
            list.words[len - 1] &= (1u64 << tail) - 1;
        }
        for v in 0..lo.min(n + 1) {
            list.remove(v);
        }
        list
    }

    pub(crate) fn bound(&self) -> u64 {
        self.n
    }

    #[inline]
    pub(crate) fn contains(&self, v: u64) -> bool {
        v <= self.n && self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    /// Clears `v`; returns whether it was present.
    #[inline]
    pub(crate) fn remove(&mut self, v: u64) -> bool {
        let w = &mut self.words[(v / 64) as usize];
        let bit = 1u64 << (v % 64);
        let was = *w & bit != 0;
        *w &= !bit;
        was
    }

    /// Smallest member strictly greater than `v`.
    pub(crate) fn next_after(&self, v: u64) -> Option<u64> {
        let start = v.checked_add(1)?;
        if start > self.n {
            return None;
        }
        let mut idx = (start / 64) as usize;
        let mut word = self.words[idx] & (u64::MAX << (start % 64));
        loop {
            if word != 0 {
                return Some(idx as u64 * 64 + word.trailing_zeros() as u64);
            }
            idx += 1;
            if idx == self.words.len() {
                return None;
            }
            word = self.words[idx];
        }
    }

    pub(crate) fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + b)
            })
        })
    }

    pub(crate) fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_after_crosses_words() {
        let mut l = BitList::filled(2, 200);
        for v in 3..=150 {
            l.remove(v);
        }
        assert_eq!(l.next_after(2), Some(151));
        assert_eq!(l.next_after(200), None);
        assert_eq!(l.next_after(199), Some(200));
        assert_eq!(l.count(), 1 + 50);
    }

    #[test]
    fn tail_is_clean() {
        let l = BitList::filled(2, 63);
        assert_eq!(
            l.members().collect::<Vec<_>>(),
            (2..=63).collect::<Vec<_>>()
        );
        let l = BitList::filled(2, 64);
        assert_eq!(l.members().last(), Some(64));
        assert!(!l.contains(65));
    }

    #[test]
    fn remove_reports_presence() {
        let mut l = BitList::filled(0, 10);
        assert!(l.remove(4));
        assert!(!l.remove(4));
        assert!(!l.contains(4));
    }
}

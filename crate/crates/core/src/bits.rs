//! Fixed-weight bit-mask enumeration.

/// Iterates, in increasing numeric order, over every `width`-bit mask with
/// exactly `ones` bits set (Gosper's successor rule).
#[derive(Debug, Clone)]
pub(crate) struct FixedWeight {
    width: u32,
    next: Option<u64>,
}

impl FixedWeight {
    pub(crate) fn new(width: u32, ones: u32) -> Self {
        debug_assert!(width <= 62);
        let next = (ones <= width).then(|| low_mask(ones));
        FixedWeight { width, next }
    }
}

impl Iterator for FixedWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let v = self.next?;
        self.next = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v + c;
            let s = (((r ^ v) >> 2) / c) | r;
            (s < (1u64 << self.width)).then_some(s)
        };
        Some(v)
    }
}

pub(crate) fn low_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

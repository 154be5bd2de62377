//! Bit-level views over byte blocks.
//!
//! All bit-indexed statistics use the MSB-first convention: bit i of a block
//! is bit (7 − i mod 8) of byte ⌊i/8⌋. This matches the usual presentation
//! of bit sequences in randomness-test literature.

/// Bit i (0 or 1), MSB-first.
#[inline]
pub fn bit(bytes: &[u8], i: usize) -> u8 {
    (bytes[i >> 3] >> (7 - (i & 7))) & 1
}

/// Total number of one-bits.
#[inline]
pub fn total_ones(bytes: &[u8]) -> u64 {
    bytes.iter().map(|b| b.count_ones() as u64).sum()
}

/// Iterator over all bits, MSB-first.
pub fn iter_bits(bytes: &[u8]) -> impl Iterator<Item = u8> + '_ {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |k| (b >> k) & 1))
}

/// Parse a "0"/"1" string into packed bytes plus its bit length.
/// Test helper for worked examples given as bit strings.
pub fn from_bit_str(s: &str) -> (Vec<u8>, usize) {
    let bits: Vec<u8> = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => 0,
            '1' => 1,
            other => panic!("invalid bit char {other:?}"),
        })
        .collect();
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b == 1 {
            bytes[i >> 3] |= 1 << (7 - (i & 7));
        }
    }
    (bytes, bits.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_indexing_is_msb_first() {
        let bytes = [0b1011_0101u8, 0b0000_0001];
        let expected = [1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(bit(&bytes, i), e, "bit {i}");
        }
        let collected: Vec<u8> = iter_bits(&bytes).collect();
        assert_eq!(collected, expected);
    }

    #[test]
    fn total_ones_counts() {
        assert_eq!(total_ones(&[0xFF, 0x00, 0x0F]), 12);
        assert_eq!(total_ones(&[]), 0);
    }

    #[test]
    fn bit_str_round_trip() {
        let (bytes, n) = from_bit_str("1011010101");
        assert_eq!(n, 10);
        let bits: Vec<u8> = iter_bits(&bytes).take(n).collect();
        assert_eq!(bits, vec![1, 0, 1, 1, 0, 1, 0, 1, 0, 1]);
        // Whitespace is ignored.
        let (b2, n2) = from_bit_str("10 1101\n0101");
        assert_eq!((b2, n2), (bytes, n));
    }
}

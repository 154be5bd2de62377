//! Deterministic keyed randomness.
//!
//! Every random draw in the pipeline (synthetic plaintext, CSPRNG regimes,
//! Monte-Carlo null tables, fold shuffles, model initialization) comes from
//! one construction: a ChaCha20 keystream whose key is
//! `SHA-256(master_seed || 0x00 || purpose_tag)`. One master seed therefore
//! reproduces every artifact byte-for-byte, and distinct purpose tags give
//! independent streams with no bookkeeping.

use chacha20::cipher::{KeyIvInit, StreamCipher, StreamCipherSeek};
use chacha20::ChaCha20;
use sha2::{Digest, Sha256};

/// Deterministic byte/number stream derived from `(seed, tag)`.
pub struct DetRng {
    cipher: ChaCha20,
}

impl DetRng {
    /// `seed` is a 32-byte master seed; `tag` names the purpose of this
    /// stream. Different tags yield computationally independent streams.
    pub fn new(seed: &[u8; 32], tag: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(seed);
        hasher.update([0u8]);
        hasher.update(tag.as_bytes());
        let key: [u8; 32] = hasher.finalize().into();
        let nonce = [0u8; 12];
        DetRng {
            cipher: ChaCha20::new(&key.into(), &nonce.into()),
        }
    }

    /// Jump to an absolute byte offset in the stream (used to slice one
    /// stream into independent chunks for parallel workers).
    pub fn seek(&mut self, byte_offset: u64) {
        self.cipher.seek(byte_offset);
    }

    pub fn fill_bytes(&mut self, out: &mut [u8]) {
        out.fill(0);
        self.cipher.apply_keystream(out);
    }

    pub fn bytes(&mut self, n: usize) -> Vec<u8> {
        let mut v = vec![0u8; n];
        self.cipher.apply_keystream(&mut v);
        v
    }

    pub fn next_u32(&mut self) -> u32 {
        let mut b = [0u8; 4];
        self.fill_bytes(&mut b);
        u32::from_le_bytes(b)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut b = [0u8; 8];
        self.fill_bytes(&mut b);
        u64::from_le_bytes(b)
    }

    /// Uniform double in [0, 1) with 53 random bits.
    pub fn f64_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in [0, n) by rejection (no modulo bias).
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0) is undefined");
        let n64 = n as u64;
        let zone = u64::MAX - (u64::MAX % n64);
        loop {
            let v = self.next_u64();
            if v < zone {
                return (v % n64) as usize;
            }
        }
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

/// Convenience: derive a fresh 32-byte sub-seed from `(seed, tag)`.
/// Used where a component needs to hand out seeds of its own (e.g. one
/// seed per synthetic source).
pub fn derive_seed(seed: &[u8; 32], tag: &str) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(seed);
    hasher.update([1u8]);
    hasher.update(tag.as_bytes());
    hasher.finalize().into()
}

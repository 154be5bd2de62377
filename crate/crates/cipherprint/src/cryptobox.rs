//! The six-cipher suite and per-window key derivation.
//!
//! Plaintext windows are encrypted under AES-128-ECB, AES-128-CBC,
//! 3DES-EDE3-CBC, Blowfish-CBC, ChaCha20 (IETF, initial counter 1), and
//! RC4. Keys and IVs/nonces are never sampled: they are derived per
//! `(cipher, source, window)` triple with HKDF-SHA256 (RFC 5869, empty
//! salt) from one master seed, so a dataset is a pure function of that
//! seed. Ciphertext length always equals plaintext length — no padding and
//! no prepended IV — which keeps length from trivially identifying a
//! cipher.
//!
//! Block-cipher cores come from audited implementations; the chaining
//! modes, RC4, and HKDF are implemented here and pinned by the standard
//! test vectors (NIST SP 800-38A, RFC 8439, RFC 6229, RFC 5869) in the
//! test suite.

use aes::Aes128;
use blowfish::Blowfish;
use chacha20::cipher::{KeyIvInit, StreamCipher, StreamCipherSeek};
use chacha20::ChaCha20 as ChaCha20Core;
use cipher::{BlockCipherDecrypt, BlockCipherEncrypt, KeyInit};
use des::TdesEde3;
use hmac::{Hmac, Mac};
use serde::{Deserialize, Serialize};
use sha2::Sha256;

use crate::error::{Error, Result};

/// Default encryption window: 8192 bytes (a multiple of both block sizes).
pub const CRYPTO_WINDOW_LEN: usize = 8192;

// =========================================================================
// Labels and key material
// =========================================================================

/// The six cipher configurations, with their fixed class indices 0..5.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CipherLabel {
    #[serde(rename = "AES_ECB")]
    AesEcb,
    #[serde(rename = "AES_CBC")]
    AesCbc,
    #[serde(rename = "TDES_CBC")]
    TdesCbc,
    #[serde(rename = "BLOWFISH_CBC")]
    BlowfishCbc,
    #[serde(rename = "CHACHA20")]
    ChaCha20,
    #[serde(rename = "RC4")]
    Rc4,
}

impl CipherLabel {
    pub const ALL: [CipherLabel; 6] = [
        CipherLabel::AesEcb,
        CipherLabel::AesCbc,
        CipherLabel::TdesCbc,
        CipherLabel::BlowfishCbc,
        CipherLabel::ChaCha20,
        CipherLabel::Rc4,
    ];

    pub const COUNT: usize = 6;

    /// Fixed integer encoding 0..5, stable across the whole pipeline.
    pub fn class_index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap()
    }

    pub fn from_class_index(i: usize) -> Option<CipherLabel> {
        Self::ALL.get(i).copied()
    }

    pub fn id(self) -> &'static str {
        match self {
            CipherLabel::AesEcb => "AES_ECB",
            CipherLabel::AesCbc => "AES_CBC",
            CipherLabel::TdesCbc => "TDES_CBC",
            CipherLabel::BlowfishCbc => "BLOWFISH_CBC",
            CipherLabel::ChaCha20 => "CHACHA20",
            CipherLabel::Rc4 => "RC4",
        }
    }

    pub fn from_id(s: &str) -> Option<CipherLabel> {
        Self::ALL.iter().copied().find(|c| c.id() == s)
    }

    /// Key length in bytes (AES-128: 16, 3DES: 24, Blowfish: 16,
    /// ChaCha20: 32, RC4: 16).
    pub fn key_len(self) -> usize {
        match self {
            CipherLabel::AesEcb | CipherLabel::AesCbc => 16,
            CipherLabel::TdesCbc => 24,
            CipherLabel::BlowfishCbc => 16,
            CipherLabel::ChaCha20 => 32,
            CipherLabel::Rc4 => 16,
        }
    }

    /// IV/nonce length in bytes (empty for ECB and RC4).
    pub fn iv_len(self) -> usize {
        match self {
            CipherLabel::AesEcb | CipherLabel::Rc4 => 0,
            CipherLabel::AesCbc => 16,
            CipherLabel::TdesCbc | CipherLabel::BlowfishCbc => 8,
            CipherLabel::ChaCha20 => 12,
        }
    }

    /// Block size for block modes; None for stream ciphers.
    pub fn block_len(self) -> Option<usize> {
        match self {
            CipherLabel::AesEcb | CipherLabel::AesCbc => Some(16),
            CipherLabel::TdesCbc | CipherLabel::BlowfishCbc => Some(8),
            CipherLabel::ChaCha20 | CipherLabel::Rc4 => None,
        }
    }
}

/// Derived key and IV/nonce for one window. Never persisted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyMaterial {
    pub key: Vec<u8>,
    pub iv_or_nonce: Vec<u8>,
}

/// One encrypted window plus its provenance tags.
#[derive(Clone, Debug)]
pub struct CiphertextWindow {
    pub bytes: Vec<u8>,
    pub label: CipherLabel,
    pub source_id: String,
    pub window_index: u64,
}

// =========================================================================
// HKDF-SHA256 (RFC 5869)
// =========================================================================

const HASH_LEN: usize = 32;

/// HKDF-Extract: PRK = HMAC-SHA256(salt, IKM).
pub fn hkdf_extract(salt: &[u8], ikm: &[u8]) -> [u8; 32] {
    let mut mac = Hmac::<Sha256>::new_from_slice(salt).expect("HMAC accepts any key length");
    mac.update(ikm);
    mac.finalize().into_bytes().into()
}

/// HKDF-Expand: OKM of `out_len` bytes (≤ 255·32 = 8160).
pub fn hkdf_expand(prk: &[u8; 32], info: &[u8], out_len: usize) -> Result<Vec<u8>> {
    if out_len > 255 * HASH_LEN {
        return Err(Error::InvalidInput(format!(
            "hkdf out_len {out_len} exceeds 255*HashLen = {}",
            255 * HASH_LEN
        )));
    }
    let mut okm = Vec::with_capacity(out_len);
    let mut t: Vec<u8> = Vec::new();
    let mut counter: u8 = 0;
    while okm.len() < out_len {
        counter += 1;
        let mut mac = Hmac::<Sha256>::new_from_slice(prk).expect("HMAC accepts any key length");
        mac.update(&t);
        mac.update(info);
        mac.update(&[counter]);
        t = mac.finalize().into_bytes().to_vec();
        let take = (out_len - okm.len()).min(HASH_LEN);
        okm.extend_from_slice(&t[..take]);
    }
    Ok(okm)
}

/// Full extract-then-expand with an explicit salt.
pub fn hkdf(salt: &[u8], ikm: &[u8], info: &[u8], out_len: usize) -> Result<Vec<u8>> {
    hkdf_expand(&hkdf_extract(salt, ikm), info, out_len)
}

/// Pipeline entry point: HKDF with empty salt, keyed by the master seed.
pub fn hkdf_derive(master_seed: &[u8; 32], info: &[u8], out_len: usize) -> Result<Vec<u8>> {
    hkdf(&[], master_seed, info, out_len)
}

/// Canonical info encoding for a window's key derivation:
/// `cipher_id 0x1F source_id 0x1F window_index(u64 BE)`.
/// Injective as long as source ids avoid the 0x1F separator (enforced at
/// config validation).
fn window_info(cipher: CipherLabel, source_id: &str, window_index: u64) -> Vec<u8> {
    let mut info = Vec::with_capacity(cipher.id().len() + source_id.len() + 10);
    info.extend_from_slice(cipher.id().as_bytes());
    info.push(0x1F);
    info.extend_from_slice(source_id.as_bytes());
    info.push(0x1F);
    info.extend_from_slice(&window_index.to_be_bytes());
    info
}

/// Derive the key and IV/nonce for one `(cipher, source, window)` triple.
pub fn derive_window_keys(
    master_seed: &[u8; 32],
    cipher: CipherLabel,
    source_id: &str,
    window_index: u64,
) -> KeyMaterial {
    let info = window_info(cipher, source_id, window_index);
    let out_len = cipher.key_len() + cipher.iv_len();
    let okm = hkdf_derive(master_seed, &info, out_len).expect("out_len within HKDF bound");
    let (key, iv) = okm.split_at(cipher.key_len());
    KeyMaterial {
        key: key.to_vec(),
        iv_or_nonce: iv.to_vec(),
    }
}

// =========================================================================
// RC4
// =========================================================================

/// RC4 stream cipher (no keystream drop).
pub struct Rc4 {
    s: [u8; 256],
    i: u8,
    j: u8,
}

impl Rc4 {
    pub fn new(key: &[u8]) -> Self {
        assert!(
            !key.is_empty() && key.len() <= 256,
            "RC4 key length must be 1..=256 bytes"
        );
        let mut s = [0u8; 256];
        for (i, v) in s.iter_mut().enumerate() {
            *v = i as u8;
        }
        let mut j: u8 = 0;
        for i in 0..256 {
            j = j.wrapping_add(s[i]).wrapping_add(key[i % key.len()]);
            s.swap(i, j as usize);
        }
        Rc4 { s, i: 0, j: 0 }
    }

    pub fn apply_keystream(&mut self, data: &mut [u8]) {
        for byte in data {
            self.i = self.i.wrapping_add(1);
            self.j = self.j.wrapping_add(self.s[self.i as usize]);
            self.s.swap(self.i as usize, self.j as usize);
            let k = self.s[self.i as usize].wrapping_add(self.s[self.j as usize]);
            *byte ^= self.s[k as usize];
        }
    }
}

// =========================================================================
// Block-mode plumbing (generic over block size)
// =========================================================================

fn ecb_apply<const B: usize>(mut f: impl FnMut([u8; B]) -> [u8; B], data: &mut [u8]) {
    for chunk in data.chunks_exact_mut(B) {
        let out = f(chunk.try_into().unwrap());
        chunk.copy_from_slice(&out);
    }
}

fn cbc_encrypt<const B: usize>(
    mut enc: impl FnMut([u8; B]) -> [u8; B],
    iv: &[u8],
    data: &mut [u8],
) {
    let mut prev: [u8; B] = iv.try_into().expect("IV length matches block size");
    for chunk in data.chunks_exact_mut(B) {
        let mut blk: [u8; B] = chunk.try_into().unwrap();
        for (b, p) in blk.iter_mut().zip(prev.iter()) {
            *b ^= p;
        }
        let ct = enc(blk);
        chunk.copy_from_slice(&ct);
        prev = ct;
    }
}

fn cbc_decrypt<const B: usize>(
    mut dec: impl FnMut([u8; B]) -> [u8; B],
    iv: &[u8],
    data: &mut [u8],
) {
    let mut prev: [u8; B] = iv.try_into().expect("IV length matches block size");
    for chunk in data.chunks_exact_mut(B) {
        let ct: [u8; B] = chunk.try_into().unwrap();
        let mut pt = dec(ct);
        for (p, q) in pt.iter_mut().zip(prev.iter()) {
            *p ^= q;
        }
        chunk.copy_from_slice(&pt);
        prev = ct;
    }
}

fn validate(plaintext: &[u8], cipher: CipherLabel, km: &KeyMaterial) -> Result<()> {
    if km.key.len() != cipher.key_len() {
        return Err(Error::InvalidInput(format!(
            "{}: key length {} != {}",
            cipher.id(),
            km.key.len(),
            cipher.key_len()
        )));
    }
    if km.iv_or_nonce.len() != cipher.iv_len() {
        return Err(Error::InvalidInput(format!(
            "{}: iv length {} != {}",
            cipher.id(),
            km.iv_or_nonce.len(),
            cipher.iv_len()
        )));
    }
    if let Some(b) = cipher.block_len() {
        if plaintext.len() % b != 0 {
            return Err(Error::InvalidInput(format!(
                "{}: length {} not a multiple of block size {b}",
                cipher.id(),
                plaintext.len()
            )));
        }
    }
    Ok(())
}

// =========================================================================
// Encryption / decryption
// =========================================================================

/// Encrypt one window. `|output| = |plaintext|`; the IV is consumed
/// internally and never emitted.
pub fn encrypt_window(
    plaintext: &[u8],
    cipher: CipherLabel,
    km: &KeyMaterial,
) -> Result<Vec<u8>> {
    validate(plaintext, cipher, km)?;
    let mut data = plaintext.to_vec();
    match cipher {
        CipherLabel::AesEcb => {
            let aes = Aes128::new_from_slice(&km.key).unwrap();
            ecb_apply::<16>(
                |b| {
                    let mut blk = cipher::Block::<Aes128>::from(b);
                    aes.encrypt_block(&mut blk);
                    blk.into()
                },
                &mut data,
            );
        }
        CipherLabel::AesCbc => {
            let aes = Aes128::new_from_slice(&km.key).unwrap();
            cbc_encrypt::<16>(
                |b| {
                    let mut blk = cipher::Block::<Aes128>::from(b);
                    aes.encrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        CipherLabel::TdesCbc => {
            let tdes = TdesEde3::new_from_slice(&km.key).unwrap();
            cbc_encrypt::<8>(
                |b| {
                    let mut blk = cipher::Block::<TdesEde3>::from(b);
                    tdes.encrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        CipherLabel::BlowfishCbc => {
            let bf = <Blowfish>::new_from_slice(&km.key).unwrap();
            cbc_encrypt::<8>(
                |b| {
                    let mut blk = cipher::Block::<Blowfish>::from(b);
                    bf.encrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        CipherLabel::ChaCha20 => {
            let mut ch = ChaCha20Core::new_from_slices(&km.key, &km.iv_or_nonce).unwrap();
            // RFC 8439 convention: start at block counter 1.
            ch.seek(64u64);
            ch.apply_keystream(&mut data);
        }
        CipherLabel::Rc4 => {
            Rc4::new(&km.key).apply_keystream(&mut data);
        }
    }
    Ok(data)
}

/// Inverse of [`encrypt_window`] (used by round-trip property tests).
pub fn decrypt_window(
    ciphertext: &[u8],
    cipher: CipherLabel,
    km: &KeyMaterial,
) -> Result<Vec<u8>> {
    validate(ciphertext, cipher, km)?;
    let mut data = ciphertext.to_vec();
    match cipher {
        CipherLabel::AesEcb => {
            let aes = Aes128::new_from_slice(&km.key).unwrap();
            ecb_apply::<16>(
                |b| {
                    let mut blk = cipher::Block::<Aes128>::from(b);
                    aes.decrypt_block(&mut blk);
                    blk.into()
                },
                &mut data,
            );
        }
        CipherLabel::AesCbc => {
            let aes = Aes128::new_from_slice(&km.key).unwrap();
            cbc_decrypt::<16>(
                |b| {
                    let mut blk = cipher::Block::<Aes128>::from(b);
                    aes.decrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        CipherLabel::TdesCbc => {
            let tdes = TdesEde3::new_from_slice(&km.key).unwrap();
            cbc_decrypt::<8>(
                |b| {
                    let mut blk = cipher::Block::<TdesEde3>::from(b);
                    tdes.decrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        CipherLabel::BlowfishCbc => {
            let bf = <Blowfish>::new_from_slice(&km.key).unwrap();
            cbc_decrypt::<8>(
                |b| {
                    let mut blk = cipher::Block::<Blowfish>::from(b);
                    bf.decrypt_block(&mut blk);
                    blk.into()
                },
                &km.iv_or_nonce,
                &mut data,
            );
        }
        // Stream ciphers are their own inverse.
        CipherLabel::ChaCha20 | CipherLabel::Rc4 => {
            return encrypt_window(ciphertext, cipher, km);
        }
    }
    Ok(data)
}

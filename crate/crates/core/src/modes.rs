//! ECB and CTR modes of operation over the block primitive.
//!
//! ECB encrypts each 16-byte block independently after PKCS#7 padding,
//! so equal plaintext blocks produce equal ciphertext blocks, the leak
//! the analysis module measures. CTR XORs the data with encryptions of
//! successive counter blocks; it is length-preserving and its own
//! inverse.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aes::{EngineKind, Key128, KeySchedule};

pub const BLOCK_SIZE: usize = 16;

/// Mode of operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Ecb,
    Ctr,
}

impl ModeKind {
    pub const ALL: [ModeKind; 2] = [ModeKind::Ecb, ModeKind::Ctr];

    pub fn name(self) -> &'static str {
        match self {
            ModeKind::Ecb => "ecb",
            ModeKind::Ctr => "ctr",
        }
    }
}

/// A CTR-mode counter: 16 bytes read as one 128-bit big-endian integer
/// that wraps to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CounterBlock([u8; 16]);

impl CounterBlock {
    pub const fn new(bytes: [u8; 16]) -> Self {
        CounterBlock(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    pub fn into_bytes(self) -> [u8; 16] {
        self.0
    }

    /// Big-endian +1 modulo 2¹²⁸.
    pub fn wrapping_increment(self) -> CounterBlock {
        self.wrapping_offset(1)
    }

    /// Big-endian +`offset` modulo 2¹²⁸.
    pub fn wrapping_offset(self, offset: u64) -> CounterBlock {
        let mut bytes = self.0;
        let mut carry = u128::from(offset);
        for b in bytes.iter_mut().rev() {
            if carry == 0 {
                break;
            }
            let sum = u128::from(*b) + (carry & 0xff);
            *b = sum as u8;
            carry = (carry >> 8) + (sum >> 8);
        }
        CounterBlock(bytes)
    }
}

impl From<[u8; 16]> for CounterBlock {
    fn from(bytes: [u8; 16]) -> Self {
        CounterBlock(bytes)
    }
}

/// Mode-level failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModeError {
    #[error("ciphertext length {0} is not a positive multiple of {BLOCK_SIZE}")]
    Length(usize),
    #[error("invalid padding (wrong key or corrupted ciphertext)")]
    Padding,
}

/// PKCS#7: extend to the next multiple of 16 strictly greater than the
/// input length; the n pad bytes all hold the value n.
pub fn pad_pkcs7(data: &[u8]) -> Vec<u8> {
    let pad = BLOCK_SIZE - data.len() % BLOCK_SIZE;
    let mut out = Vec::with_capacity(data.len() + pad);
    out.extend_from_slice(data);
    out.resize(data.len() + pad, pad as u8);
    out
}

/// Strip a PKCS#7 pad, validating every pad byte.
pub fn unpad_pkcs7(data: &[u8]) -> Result<Vec<u8>, ModeError> {
    if data.is_empty() || !data.len().is_multiple_of(BLOCK_SIZE) {
        return Err(ModeError::Length(data.len()));
    }
    let pad = usize::from(*data.last().unwrap());
    if pad == 0 || pad > BLOCK_SIZE {
        return Err(ModeError::Padding);
    }
    let (body, tail) = data.split_at(data.len() - pad);
    if tail.iter().any(|&b| b != pad as u8) {
        return Err(ModeError::Padding);
    }
    Ok(body.to_vec())
}

/// ECB-encrypt a byte stream. Pads internally, so any input length is
/// accepted; output length is the next multiple of 16 above the input.
pub fn ecb_encrypt(data: &[u8], key: &Key128, engine: EngineKind) -> Vec<u8> {
    let ks = KeySchedule::new(key);
    let mut out = pad_pkcs7(data);
    for chunk in out.chunks_exact_mut(BLOCK_SIZE) {
        let block: [u8; 16] = chunk.try_into().unwrap();
        chunk.copy_from_slice(&ks.encrypt(block, engine));
    }
    out
}

/// Invert [`ecb_encrypt`], including the unpadding. A padding failure
/// is the cheap wrong-key / corruption signal ECB offers.
pub fn ecb_decrypt(data: &[u8], key: &Key128, engine: EngineKind) -> Result<Vec<u8>, ModeError> {
    if data.is_empty() || !data.len().is_multiple_of(BLOCK_SIZE) {
        return Err(ModeError::Length(data.len()));
    }
    let ks = KeySchedule::new(key);
    let mut out = data.to_vec();
    for chunk in out.chunks_exact_mut(BLOCK_SIZE) {
        let block: [u8; 16] = chunk.try_into().unwrap();
        chunk.copy_from_slice(&ks.decrypt(block, engine));
    }
    unpad_pkcs7(&out)
}

/// CTR transform: `out[i] = data[i] ^ keystream[i]` where keystream
/// block `j` is the encryption of `iv + j`. Length-preserving and its
/// own inverse, so it serves for both encryption and decryption.
pub fn ctr_xcrypt(data: &[u8], key: &Key128, iv: CounterBlock, engine: EngineKind) -> Vec<u8> {
    let ks = KeySchedule::new(key);
    let mut out = data.to_vec();
    let mut counter = iv;
    for chunk in out.chunks_mut(BLOCK_SIZE) {
        let stream = ks.encrypt(counter.into_bytes(), engine);
        for (b, s) in chunk.iter_mut().zip(stream) {
            *b ^= s;
        }
        counter = counter.wrapping_increment();
    }
    out
}

/// Encrypt a stream under the given mode. The `iv` is the CTR initial
/// counter and is ignored for ECB.
pub fn encrypt_stream(
    data: &[u8],
    key: &Key128,
    mode: ModeKind,
    engine: EngineKind,
    iv: CounterBlock,
) -> Vec<u8> {
    match mode {
        ModeKind::Ecb => ecb_encrypt(data, key, engine),
        ModeKind::Ctr => ctr_xcrypt(data, key, iv, engine),
    }
}

/// Invert [`encrypt_stream`]. Only ECB can fail (bad length or padding).
pub fn decrypt_stream(
    data: &[u8],
    key: &Key128,
    mode: ModeKind,
    engine: EngineKind,
    iv: CounterBlock,
) -> Result<Vec<u8>, ModeError> {
    match mode {
        ModeKind::Ecb => ecb_decrypt(data, key, engine),
        ModeKind::Ctr => Ok(ctr_xcrypt(data, key, iv, engine)),
    }
}

/// [`ctr_xcrypt`] with keystream blocks computed concurrently over
/// disjoint counter ranges. Counter blocks are independent, so the
/// output is byte-identical to the sequential transform.
pub fn ctr_xcrypt_parallel(
    data: &[u8],
    key: &Key128,
    iv: CounterBlock,
    engine: EngineKind,
) -> Vec<u8> {
    let ks = KeySchedule::new(key);
    let mut out = data.to_vec();
    out.par_chunks_mut(BLOCK_SIZE)
        .enumerate()
        .for_each(|(j, chunk)| {
            let counter = iv.wrapping_offset(j as u64);
            let stream = ks.encrypt(counter.into_bytes(), engine);
            for (b, s) in chunk.iter_mut().zip(stream) {
                *b ^= s;
            }
        });
    out
}

//! From-scratch AES-128: key expansion, the round transformations, and
//! single-block encrypt/decrypt through two interchangeable engines.
//!
//! The 16-byte state is column-major: byte `i` sits at row `i % 4`,
//! column `i / 4`, so index `(r, c)` is `state[4 * c + r]`. Standard
//! test vectors force this layout.
//!
//! The two engines compute the identical cipher function but with
//! different code shapes, mirroring an area/latency trade:
//!
//! - [`EngineKind::Unrolled`]: all ten rounds flattened in straight
//!   line, each with its round key bound at a fixed index.
//! - [`EngineKind::Fsm`]: one shared round datapath reused under an
//!   explicit round counter.

pub mod gf;
mod sbox;

use serde::{Deserialize, Serialize};

pub use sbox::{verify_tables, TableDigestError};
use sbox::{INV_SBOX, SBOX};

/// A 16-byte AES state block.
pub type Block = [u8; 16];

/// The 128-bit cipher key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Key128([u8; 16]);

impl Key128 {
    pub const fn new(bytes: [u8; 16]) -> Self {
        Key128(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    /// Copy of this key with one bit flipped. Bit 0 is the most
    /// significant bit of the first byte; bit 127 the least significant
    /// bit of the last.
    pub fn with_bit_flipped(&self, bit: u8) -> Key128 {
        assert!(bit < 128, "bit index out of range: {bit}");
        let mut bytes = self.0;
        bytes[usize::from(bit) / 8] ^= 0x80 >> (bit % 8);
        Key128(bytes)
    }
}

impl From<[u8; 16]> for Key128 {
    fn from(bytes: [u8; 16]) -> Self {
        Key128(bytes)
    }
}

/// Which engine implementation carries out the rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    /// Straight-line code, ten round bodies flattened.
    Unrolled,
    /// Round-counter loop over a single round datapath.
    Fsm,
}

impl EngineKind {
    pub const ALL: [EngineKind; 2] = [EngineKind::Unrolled, EngineKind::Fsm];

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Unrolled => "unrolled",
            EngineKind::Fsm => "fsm",
        }
    }
}

const ROUNDS: usize = 10;

/// Round constants for key expansion: powers of x in GF(2⁸).
const RCON: [u8; ROUNDS] = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36];

/// The expanded key: one 16-byte round key per round, plus round 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeySchedule {
    round_keys: [[u8; 16]; ROUNDS + 1],
}

impl KeySchedule {
    /// Expand a cipher key into the full schedule. Round key 0 is the
    /// cipher key itself.
    pub fn new(key: &Key128) -> Self {
        let mut words = [[0u8; 4]; 4 * (ROUNDS + 1)];
        for (i, word) in words.iter_mut().take(4).enumerate() {
            word.copy_from_slice(&key.0[4 * i..4 * i + 4]);
        }
        for i in 4..words.len() {
            let mut temp = words[i - 1];
            if i % 4 == 0 {
                temp.rotate_left(1);
                for b in temp.iter_mut() {
                    *b = SBOX[*b as usize];
                }
                temp[0] ^= RCON[i / 4 - 1];
            }
            for (b, prev) in temp.iter_mut().zip(words[i - 4]) {
                *b ^= prev;
            }
            words[i] = temp;
        }
        let mut round_keys = [[0u8; 16]; ROUNDS + 1];
        for (r, rk) in round_keys.iter_mut().enumerate() {
            for c in 0..4 {
                rk[4 * c..4 * c + 4].copy_from_slice(&words[4 * r + c]);
            }
        }
        KeySchedule { round_keys }
    }

    pub fn round_key(&self, round: usize) -> &[u8; 16] {
        &self.round_keys[round]
    }

    /// Forward cipher on one block.
    pub fn encrypt(&self, block: Block, engine: EngineKind) -> Block {
        match engine {
            EngineKind::Unrolled => self.encrypt_unrolled(block),
            EngineKind::Fsm => self.encrypt_fsm(block),
        }
    }

    /// Inverse cipher on one block.
    pub fn decrypt(&self, block: Block, engine: EngineKind) -> Block {
        match engine {
            EngineKind::Unrolled => self.decrypt_unrolled(block),
            EngineKind::Fsm => self.decrypt_fsm(block),
        }
    }

    fn encrypt_unrolled(&self, mut state: Block) -> Block {
        let keys = &self.round_keys;
        add_round_key(&mut state, &keys[0]);
        // Each expansion is one full middle round with its key bound at
        // a fixed index; no loop survives into the generated code.
        macro_rules! middle_round {
            ($($r:literal)+) => {$(
                state = mix_columns(shift_rows(sub_bytes(state)));
                add_round_key(&mut state, &keys[$r]);
            )+};
        }
        middle_round!(1 2 3 4 5 6 7 8 9);
        state = shift_rows(sub_bytes(state));
        add_round_key(&mut state, &keys[10]);
        state
    }

    fn decrypt_unrolled(&self, mut state: Block) -> Block {
        let keys = &self.round_keys;
        add_round_key(&mut state, &keys[10]);
        macro_rules! middle_round {
            ($($r:literal)+) => {$(
                state = inv_sub_bytes(inv_shift_rows(state));
                add_round_key(&mut state, &keys[$r]);
                state = inv_mix_columns(state);
            )+};
        }
        middle_round!(9 8 7 6 5 4 3 2 1);
        state = inv_sub_bytes(inv_shift_rows(state));
        add_round_key(&mut state, &keys[0]);
        state
    }

    fn encrypt_fsm(&self, mut state: Block) -> Block {
        add_round_key(&mut state, &self.round_keys[0]);
        let mut round = 1;
        while round <= ROUNDS {
            state = shift_rows(sub_bytes(state));
            if round < ROUNDS {
                state = mix_columns(state);
            }
            add_round_key(&mut state, &self.round_keys[round]);
            round += 1;
        }
        state
    }

    fn decrypt_fsm(&self, mut state: Block) -> Block {
        add_round_key(&mut state, &self.round_keys[ROUNDS]);
        let mut round = ROUNDS - 1;
        loop {
            state = inv_sub_bytes(inv_shift_rows(state));
            add_round_key(&mut state, &self.round_keys[round]);
            if round == 0 {
                break;
            }
            state = inv_mix_columns(state);
            round -= 1;
        }
        state
    }
}

/// Expand a cipher key into its 11 round keys.
pub fn expand_key(key: &Key128) -> KeySchedule {
    KeySchedule::new(key)
}

/// Encrypt one block, expanding the key schedule on the fly. Bulk
/// callers should build a [`KeySchedule`] once and reuse it.
pub fn encrypt_block(key: &Key128, block: Block, engine: EngineKind) -> Block {
    KeySchedule::new(key).encrypt(block, engine)
}

/// Decrypt one block, expanding the key schedule on the fly.
pub fn decrypt_block(key: &Key128, block: Block, engine: EngineKind) -> Block {
    KeySchedule::new(key).decrypt(block, engine)
}

fn add_round_key(state: &mut Block, round_key: &[u8; 16]) {
    for (b, k) in state.iter_mut().zip(round_key) {
        *b ^= k;
    }
}

/// Byte-wise S-box substitution.
pub fn sub_bytes(mut state: Block) -> Block {
    for b in state.iter_mut() {
        *b = SBOX[*b as usize];
    }
    state
}

/// Byte-wise inverse S-box substitution.
pub fn inv_sub_bytes(mut state: Block) -> Block {
    for b in state.iter_mut() {
        *b = INV_SBOX[*b as usize];
    }
    state
}

/// Rotate state row `r` left by `r` positions.
pub fn shift_rows(state: Block) -> Block {
    let mut out = [0u8; 16];
    for r in 0..4 {
        for c in 0..4 {
            out[4 * c + r] = state[4 * ((c + r) % 4) + r];
        }
    }
    out
}

/// Rotate state row `r` right by `r` positions.
pub fn inv_shift_rows(state: Block) -> Block {
    let mut out = [0u8; 16];
    for r in 0..4 {
        for c in 0..4 {
            out[4 * ((c + r) % 4) + r] = state[4 * c + r];
        }
    }
    out
}

/// Multiply two bytes in the AES field. Re-export of [`gf::mul`] under
/// the name the rest of the crate uses.
pub fn gf_mul(a: u8, b: u8) -> u8 {
    gf::mul(a, b)
}

fn mix_column(col: [u8; 4]) -> [u8; 4] {
    let [a0, a1, a2, a3] = col;
    [
        gf::mul(0x02, a0) ^ gf::mul(0x03, a1) ^ a2 ^ a3,
        a0 ^ gf::mul(0x02, a1) ^ gf::mul(0x03, a2) ^ a3,
        a0 ^ a1 ^ gf::mul(0x02, a2) ^ gf::mul(0x03, a3),
        gf::mul(0x03, a0) ^ a1 ^ a2 ^ gf::mul(0x02, a3),
    ]
}

fn inv_mix_column(col: [u8; 4]) -> [u8; 4] {
    let [a0, a1, a2, a3] = col;
    [
        gf::mul(0x0e, a0) ^ gf::mul(0x0b, a1) ^ gf::mul(0x0d, a2) ^ gf::mul(0x09, a3),
        gf::mul(0x09, a0) ^ gf::mul(0x0e, a1) ^ gf::mul(0x0b, a2) ^ gf::mul(0x0d, a3),
        gf::mul(0x0d, a0) ^ gf::mul(0x09, a1) ^ gf::mul(0x0e, a2) ^ gf::mul(0x0b, a3),
        gf::mul(0x0b, a0) ^ gf::mul(0x0d, a1) ^ gf::mul(0x09, a2) ^ gf::mul(0x0e, a3),
    ]
}

/// Multiply each state column by the fixed circulant matrix.
pub fn mix_columns(mut state: Block) -> Block {
    for c in 0..4 {
        let col = [
            state[4 * c],
            state[4 * c + 1],
            state[4 * c + 2],
            state[4 * c + 3],
        ];
        state[4 * c..4 * c + 4].copy_from_slice(&mix_column(col));
    }
    state
}

/// Multiply each state column by the inverse circulant matrix.
pub fn inv_mix_columns(mut state: Block) -> Block {
    for c in 0..4 {
        let col = [
            state[4 * c],
            state[4 * c + 1],
            state[4 * c + 2],
            state[4 * c + 3],
        ];
        state[4 * c..4 * c + 4].copy_from_slice(&inv_mix_column(col));
    }
    state
}

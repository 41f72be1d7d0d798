//! The AES substitution tables.
//!
//! Both tables are generated at compile time from field arithmetic
//! (multiplicative inverse followed by the affine map), not copied from
//! a published listing. [`verify_tables`] checks the generated bytes
//! against compiled-in SHA-256 digests so a bad build fails loudly at
//! startup rather than producing subtly wrong ciphertext.

use sha2::{Digest, Sha256};

use super::gf;

const fn forward_entry(x: u8) -> u8 {
    let i = gf::inv(x);
    i ^ i.rotate_left(1) ^ i.rotate_left(2) ^ i.rotate_left(3) ^ i.rotate_left(4) ^ 0x63
}

const fn generate_sbox() -> [u8; 256] {
    let mut table = [0u8; 256];
    let mut x = 0usize;
    while x < 256 {
        table[x] = forward_entry(x as u8);
        x += 1;
    }
    table
}

const fn invert(table: [u8; 256]) -> [u8; 256] {
    let mut out = [0u8; 256];
    let mut x = 0usize;
    while x < 256 {
        out[table[x] as usize] = x as u8;
        x += 1;
    }
    out
}

pub(crate) static SBOX: [u8; 256] = generate_sbox();
pub(crate) static INV_SBOX: [u8; 256] = invert(generate_sbox());

const SBOX_SHA256: &str = "c2d8e5eed6cbebd8625fc18f81486a7733c04f9b0129ffbe974c68b90308b4f2";
const INV_SBOX_SHA256: &str = "93631b0726f6fe6629daa743ee51b49f4477ed07391b68eeea0672a4a90018aa";

/// Substitution-table mismatch against the compiled-in digest.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("AES {table} table digest mismatch: got {actual}")]
pub struct TableDigestError {
    pub table: &'static str,
    pub actual: String,
}

/// Check the generated substitution tables against their pinned digests.
pub fn verify_tables() -> Result<(), TableDigestError> {
    let digest = |bytes: &[u8]| {
        let mut h = Sha256::new();
        h.update(bytes);
        let out = h.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect::<String>()
    };
    let got = digest(&SBOX);
    if got != SBOX_SHA256 {
        return Err(TableDigestError {
            table: "S-box",
            actual: got,
        });
    }
    let got = digest(&INV_SBOX);
    if got != INV_SBOX_SHA256 {
        return Err(TableDigestError {
            table: "inverse S-box",
            actual: got,
        });
    }
    Ok(())
}

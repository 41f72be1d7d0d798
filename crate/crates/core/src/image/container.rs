//! The `AESI` cipher container: ciphertext plus everything decryption
//! needs to restore the original image.
//!
//! Layout (all integers big-endian):
//!
//! ```text
//! offset  size  field
//!      0     4  magic "AESI"
//!      4     1  version, 0x01
//!      5     1  mode, 0x00 = ECB, 0x01 = CTR
//!      6     4  width
//!     10     4  height
//!     14    16  iv (all zero for ECB)
//!     30     8  ciphertext length
//!     38     ..  ciphertext
//! ```

use super::ImageError;
use crate::modes::{ModeKind, BLOCK_SIZE};

const MAGIC: &[u8; 4] = b"AESI";
const VERSION: u8 = 0x01;
/// Fixed byte count before the ciphertext.
pub const HEADER_LEN: usize = 4 + 1 + 1 + 4 + 4 + 16 + 8;

/// Persisted ciphertext with its mode, IV, and source dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherContainer {
    pub mode: ModeKind,
    pub iv: [u8; 16],
    pub width: u32,
    pub height: u32,
    pub ciphertext: Vec<u8>,
}

impl CipherContainer {
    /// Validate the mode-specific ciphertext-length invariants.
    fn check_invariants(&self) -> Result<(), ImageError> {
        let pixels = self.width as usize * self.height as usize;
        match self.mode {
            ModeKind::Ecb => {
                if self.ciphertext.is_empty()
                    || !self.ciphertext.len().is_multiple_of(BLOCK_SIZE)
                    || self.ciphertext.len() < pixels
                {
                    return Err(ImageError::Format(format!(
                        "ECB ciphertext length {} invalid for {}x{} image",
                        self.ciphertext.len(),
                        self.width,
                        self.height
                    )));
                }
                if self.iv != [0u8; 16] {
                    return Err(ImageError::Format(
                        "ECB container must carry a zero IV".into(),
                    ));
                }
            }
            ModeKind::Ctr => {
                if self.ciphertext.len() != pixels {
                    return Err(ImageError::Format(format!(
                        "CTR ciphertext length {} != pixel count {pixels}",
                        self.ciphertext.len()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Serialize a container to its bit-exact byte layout.
pub fn write_container(c: &CipherContainer) -> Result<Vec<u8>, ImageError> {
    c.check_invariants()?;
    let mut out = Vec::with_capacity(HEADER_LEN + c.ciphertext.len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(match c.mode {
        ModeKind::Ecb => 0x00,
        ModeKind::Ctr => 0x01,
    });
    out.extend_from_slice(&c.width.to_be_bytes());
    out.extend_from_slice(&c.height.to_be_bytes());
    out.extend_from_slice(&c.iv);
    out.extend_from_slice(&(c.ciphertext.len() as u64).to_be_bytes());
    out.extend_from_slice(&c.ciphertext);
    Ok(out)
}

/// Parse container bytes, enforcing the layout and all invariants.
pub fn read_container(bytes: &[u8]) -> Result<CipherContainer, ImageError> {
    if bytes.len() < HEADER_LEN {
        return Err(ImageError::Format(format!(
            "container too short: {} bytes, header needs {HEADER_LEN}",
            bytes.len()
        )));
    }
    if &bytes[0..4] != MAGIC {
        return Err(ImageError::Format("bad container magic".into()));
    }
    if bytes[4] != VERSION {
        return Err(ImageError::Format(format!(
            "unsupported container version {:#04x}",
            bytes[4]
        )));
    }
    let mode = match bytes[5] {
        0x00 => ModeKind::Ecb,
        0x01 => ModeKind::Ctr,
        other => {
            return Err(ImageError::Format(format!(
                "unknown mode octet {other:#04x}"
            )))
        }
    };
    let width = u32::from_be_bytes(bytes[6..10].try_into().unwrap());
    let height = u32::from_be_bytes(bytes[10..14].try_into().unwrap());
    let iv: [u8; 16] = bytes[14..30].try_into().unwrap();
    let declared = u64::from_be_bytes(bytes[30..38].try_into().unwrap());
    let body = &bytes[HEADER_LEN..];
    if declared != body.len() as u64 {
        return Err(ImageError::Format(format!(
            "declared ciphertext length {declared} but {} bytes follow the header",
            body.len()
        )));
    }
    if width == 0 || height == 0 {
        return Err(ImageError::Format(format!(
            "zero dimension: {width}x{height}"
        )));
    }
    let container = CipherContainer {
        mode,
        iv,
        width,
        height,
        ciphertext: body.to_vec(),
    };
    container.check_invariants()?;
    Ok(container)
}

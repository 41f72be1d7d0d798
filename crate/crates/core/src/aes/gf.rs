//! Arithmetic in GF(2⁸) with the AES reduction polynomial
//! x⁸ + x⁴ + x³ + x + 1 (0x11b).
//!
//! Addition is XOR. Multiplication uses the shift-and-add scheme with
//! reduction applied to intermediate terms, so everything stays inside
//! a single byte. All functions are `const` so the S-box tables can be
//! generated at compile time.

/// Multiply two field elements.
pub const fn mul(a: u8, b: u8) -> u8 {
    let mut a = a;
    let mut b = b;
    let mut product = 0u8;
    while b != 0 {
        if b & 1 == 1 {
            product ^= a;
        }
        let carry = a & 0x80;
        a <<= 1;
        if carry != 0 {
            a ^= 0x1b; // x⁸ ≡ x⁴ + x³ + x + 1
        }
        b >>= 1;
    }
    product
}

/// Multiplicative inverse, with inv(0) defined as 0.
///
/// Computed as x²⁵⁴ = x⁻¹ (Fermat in a field of 256 elements), which
/// needs only a short square-and-multiply chain.
pub const fn inv(x: u8) -> u8 {
    let x2 = mul(x, x);
    let x4 = mul(x2, x2);
    let x8 = mul(x4, x4);
    let x16 = mul(x8, x8);
    let x32 = mul(x16, x16);
    let x64 = mul(x32, x32);
    let x128 = mul(x64, x64);
    // x²⁵⁴ = x¹²⁸·x⁶⁴·x³²·x¹⁶·x⁸·x⁴·x²
    let mut y = mul(x128, x64);
    y = mul(y, x32);
    y = mul(y, x16);
    y = mul(y, x8);
    y = mul(y, x4);
    mul(y, x2)
}

use crate::error::{Error, Result};

/// Largest supported characteristic, 2^31 - 1. Keeps every product of two
/// reduced values inside u64.
pub const MAX_CHAR: u64 = (1 << 31) - 1;

/// An element of the prime field F_p, always stored fully reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(p >= 2);
        let m = value.rem_euclid(p as i64) as u64;
        Fp { value: m, p }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn zero(p: u64) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp { value: 1 % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.p, other.p, "mixed characteristics {} and {}", self.p, other.p);
    }

    pub fn add(&self, other: &Fp) -> Fp {
        self.check(other);
        Fp { value: (self.value + other.value) % self.p, p: self.p }
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        self.check(other);
        Fp { value: (self.value + self.p - other.value) % self.p, p: self.p }
    }

    pub fn mul(&self, other: &Fp) -> Fp {
        self.check(other);
        Fp { value: (self.value * other.value) % self.p, p: self.p }
    }

    pub fn neg(&self) -> Fp {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem. Panics on zero.
    pub fn inv(&self) -> Fp {
        assert!(!self.is_zero(), "inverse of zero in F_{}", self.p);
        self.pow(self.p - 2)
    }
}

/// Deterministic primality check by trial division; p is capped at 2^31-1 so
/// this stays fast.
pub fn is_prime(p: u64) -> bool {
    if !(2..=MAX_CHAR).contains(&p) {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_arithmetic() {
        let a = Fp::new(3, 5);
        let b = Fp::new(4, 5);
        assert_eq!(a.add(&b).value(), 2);
        assert_eq!(a.mul(&b).value(), 2);
        assert_eq!(a.sub(&b).value(), 4);
        assert_eq!(a.neg().value(), 2);
        assert_eq!(a.inv().mul(&a).value(), 1);
        assert_eq!(Fp::new(-1, 7).value(), 6);
        assert_eq!(Fp::new(6, 5).value(), 1);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(2147483649));
        assert!(check_prime(9).is_err());
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..97, b in 0u64..97, c in 0u64..97) {
            let p = 97;
            let (a, b, c) = (Fp::from_u64(a, p), Fp::from_u64(b, p), Fp::from_u64(c, p));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                prop_assert_eq!(a.inv().mul(&a), Fp::one(p));
            }
        }

        #[test]
        fn frobenius_is_additive(a in 0u64..31, b in 0u64..31) {
            // c^p = c for c in F_p, and (a+b)^p = a^p + b^p.
            let p = 31;
            let (a, b) = (Fp::from_u64(a, p), Fp::from_u64(b, p));
            prop_assert_eq!(a.pow(p), a);
            prop_assert_eq!(a.add(&b).pow(p), a.pow(p).add(&b.pow(p)));
        }
    }
}

//! Monomials of the polynomial ring and of free modules over it.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 16;
/// Maximum exponent of a single variable.
pub const MAX_EXPONENT: u32 = 1 << 15;

/// Packed exponent vector with cached total degree and support mask.
///
/// Unused trailing slots are zero, so equality and hashing ignore the
/// number of variables of the ambient ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    mask: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        degree: 0,
        mask: 0,
    };

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(e as u64));
            }
            m.exps[i] = e as u16;
            m.degree += e;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        Ok(m)
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.degree = 1;
        m.mask = 1 << i;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub(crate) fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            if e > MAX_EXPONENT {
                return None;
            }
            m.exps[i] = e as u16;
        }
        m.degree += other.degree;
        m.mask |= other.mask;
        Some(m)
    }

    /// Product of two monomials; exponent overflow is a programming error at
    /// the degrees this crate works with.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            let e = self.exps[i] - other.exps[i];
            m.exps[i] = e;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        m.degree = self.degree - other.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(other.exps[i]);
            m.exps[i] = e;
            m.degree += e as u32;
        }
        m.mask = self.mask | other.mask;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            let e = self.exps[i].min(other.exps[i]);
            m.exps[i] = e;
            m.degree += e as u32;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).unwrap_or(0);
        write!(f, "{:?}", &self.exps[..=last])
    }
}

/// `mono * e_comp` with a zero-based component index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub comp: u32,
}

impl ModuleMonomial {
    pub fn new(mono: Monomial, comp: usize) -> Self {
        ModuleMonomial {
            mono,
            comp: comp as u32,
        }
    }

    #[inline]
    pub fn component(&self) -> usize {
        self.comp as usize
    }

    /// Divisibility in the free module: equal components and dividing monomials.
    #[inline]
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }

    /// `None` stands for the zero lcm of monomials in different components.
    pub fn lcm(&self, other: &ModuleMonomial) -> Option<ModuleMonomial> {
        (self.comp == other.comp).then(|| ModuleMonomial {
            mono: self.mono.lcm(&other.mono),
            comp: self.comp,
        })
    }

    /// Quotient `other / self` as a ring monomial, when `self` divides `other`.
    pub fn quotient_of(&self, other: &ModuleMonomial) -> Option<Monomial> {
        if self.comp != other.comp {
            return None;
        }
        other.mono.div(&self.mono)
    }

    #[inline]
    pub fn times(&self, m: &Monomial) -> ModuleMonomial {
        ModuleMonomial {
            mono: self.mono.mul(m),
            comp: self.comp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn divisibility_respects_components() {
        // x e1 | x^2 y e1, but x e1 does not divide x y e2
        let a = ModuleMonomial::new(mono(&[1, 0]), 0);
        let b = ModuleMonomial::new(mono(&[2, 1]), 0);
        let c = ModuleMonomial::new(mono(&[1, 1]), 1);
        assert!(a.divides(&b));
        assert!(!a.divides(&c));
        assert!(b.divides(&b));
        assert!(!b.divides(&a));
    }

    #[test]
    fn module_lcm() {
        // variables w, x, y
        let wx = ModuleMonomial::new(mono(&[1, 1, 0]), 0);
        let wy = ModuleMonomial::new(mono(&[1, 0, 1]), 0);
        assert_eq!(
            wx.lcm(&wy),
            Some(ModuleMonomial::new(mono(&[1, 1, 1]), 0))
        );
        let x2 = ModuleMonomial::new(mono(&[0, 1, 0]), 1);
        assert_eq!(wx.lcm(&x2), None);
        assert_eq!(wx.lcm(&wx), Some(wx));
    }

    #[test]
    fn degree_tracks_exponents() {
        let a = mono(&[3, 0, 2]);
        let b = mono(&[1, 4]);
        assert_eq!(a.degree(), 5);
        assert_eq!(a.mul(&b).degree(), 10);
        assert_eq!(a.lcm(&b).degree(), 3 + 4 + 2);
        assert_eq!(a.gcd(&b).degree(), 1);
        assert_eq!(a.mul(&b).div(&b), Some(a));
        assert_eq!(b.div(&a), None);
    }

    #[test]
    fn construction_limits() {
        assert_eq!(
            Monomial::new(&[MAX_EXPONENT + 1]),
            Err(Error::ExponentOverflow(MAX_EXPONENT as u64 + 1))
        );
        assert!(Monomial::new(&[0; MAX_VARS + 1]).is_err());
        let big = mono(&[MAX_EXPONENT]);
        assert!(big.checked_mul(&Monomial::var(0)).is_none());
    }
}

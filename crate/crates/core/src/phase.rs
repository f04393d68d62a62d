//! Phases as exact rationals.
//!
//! Every exponent in the coefficient and Gauss-sum formulas is a rational
//! multiple of pi. Holding it as a reduced rational modulo 2 and converting
//! to floating point only at evaluation removes all accumulation error: the
//! identities under test are exact, so the only noise left is final rounding.

use std::f64::consts::PI;

/// Complex amplitude; all field and coefficient routines return finite values.
pub type ComplexAmp = num_complex::Complex64;

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// A phase `exp(i pi num / den)` stored as a reduced rational with
/// `0 <= num < 2 den`, i.e. reduced modulo a full turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhaseRational {
    num: i64,
    den: i64,
}

impl PhaseRational {
    /// Reduces `num/den` modulo 2 into canonical form. `den` must be nonzero.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        let (mut num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(2 * den);
        let g = gcd_i128(num, den);
        let (num, den) = (num / g, den / g);
        Self {
            num: i64::try_from(num).expect("phase numerator exceeds i64"),
            den: i64::try_from(den).expect("phase denominator exceeds i64"),
        }
    }

    /// Phase numerator assembled as a sum of products, each factor reduced
    /// modulo `2 den` before multiplying so intermediates never overflow.
    pub fn from_term_products(den: i128, terms: &[&[i128]]) -> Self {
        assert!(den > 0, "phase denominator must be positive");
        let m = 2 * den;
        let mut total = 0i128;
        for factors in terms {
            let mut acc = 1i128;
            for &f in *factors {
                acc = acc * f.rem_euclid(m) % m;
            }
            total = (total + acc) % m;
        }
        Self::new(total, den)
    }

    pub fn zero() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// The phase in units of pi, in `[0, 2)`.
    pub fn half_turns(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Evaluates to the unit phasor. Quarter-turn phases come out exact.
    pub fn eval(&self) -> ComplexAmp {
        match (self.den, self.num) {
            (1, 0) => ComplexAmp::new(1.0, 0.0),
            (1, 1) => ComplexAmp::new(-1.0, 0.0),
            (2, 1) => ComplexAmp::new(0.0, 1.0),
            (2, 3) => ComplexAmp::new(0.0, -1.0),
            _ => {
                let theta = PI * self.half_turns();
                ComplexAmp::new(theta.cos(), theta.sin())
            }
        }
    }
}

impl std::ops::Add for PhaseRational {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Self::new(n, self.den as i128 * rhs.den as i128)
    }
}

impl std::ops::Neg for PhaseRational {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-(self.num as i128), self.den as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        let ph = PhaseRational::new(10, 4);
        assert_eq!((ph.num(), ph.den()), (1, 2));
        let ph = PhaseRational::new(-1, 4);
        assert_eq!((ph.num(), ph.den()), (7, 4));
        let ph = PhaseRational::new(6, -4);
        assert_eq!((ph.num(), ph.den()), (1, 2));
        assert_eq!(PhaseRational::new(0, 7), PhaseRational::zero());
    }

    #[test]
    fn eval_quarter_turns_exact() {
        assert_eq!(PhaseRational::new(0, 1).eval(), ComplexAmp::new(1.0, 0.0));
        assert_eq!(PhaseRational::new(1, 2).eval(), ComplexAmp::new(0.0, 1.0));
        assert_eq!(PhaseRational::new(1, 1).eval(), ComplexAmp::new(-1.0, 0.0));
        assert_eq!(PhaseRational::new(3, 2).eval(), ComplexAmp::new(0.0, -1.0));
    }

    #[test]
    fn eval_eighth_turn() {
        let z = PhaseRational::new(1, 4).eval();
        let r = 0.5f64.sqrt();
        assert!((z.re - r).abs() < 1e-15 && (z.im - r).abs() < 1e-15);
    }

    #[test]
    fn term_product_assembly_matches_direct() {
        // (3*5*7 + 2*9) / 6, assembled with modular reduction
        let a = PhaseRational::from_term_products(6, &[&[3, 5, 7], &[2, 9]]);
        let b = PhaseRational::new(3 * 5 * 7 + 2 * 9, 6);
        assert_eq!(a, b);
        // negative factors reduce the same way
        let a = PhaseRational::from_term_products(5, &[&[-3, 4]]);
        let b = PhaseRational::new(-12, 5);
        assert_eq!(a, b);
    }

    mod properties {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn phase_and_conjugate_cancel(num in -2000i128..2000, den in 1i128..500) {
                let ph = PhaseRational::new(num, den);
                let z = ph.eval() * (-ph).eval();
                prop_assert!((z - ComplexAmp::new(1.0, 0.0)).norm() < 1e-14);
            }

            #[test]
            fn addition_matches_multiplication(
                n1 in -500i128..500, d1 in 1i128..60,
                n2 in -500i128..500, d2 in 1i128..60,
            ) {
                let (a, b) = (PhaseRational::new(n1, d1), PhaseRational::new(n2, d2));
                let lhs = (a + b).eval();
                let rhs = a.eval() * b.eval();
                prop_assert!((lhs - rhs).norm() < 1e-13);
            }

            #[test]
            fn unit_modulus(num in -4000i128..4000, den in 1i128..800) {
                let z = PhaseRational::new(num, den).eval();
                prop_assert!((z.norm() - 1.0).abs() < 1e-15);
            }
        }
    }
}

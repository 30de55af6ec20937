//! The integral group ring Z[Z_N]: cyclic convolution, the involution
//! x^a -> x^{-a}, unit relabelings x^a -> x^{ca}, and the period vector
//! g = sum_a eta_a x^a with its base-change and autocorrelation identities.
//!
//! Lifting along a degree-e extension multiplies Gauss sums by
//! (-1)^{e-1} per factor, so the period vector of the lifted spectrum is
//! (-1)^{e-1} g^e, up to the unit relabel induced by the choice of generator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::gcd;
use crate::cyclotomy::PeriodSpectrum;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    pub n: u64,
    pub coeffs: Vec<BigInt>,
}

impl GroupRingElem {
    pub fn zero(n: u64) -> Self {
        GroupRingElem {
            n,
            coeffs: vec![BigInt::zero(); n as usize],
        }
    }

    pub fn delta(n: u64) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = BigInt::one();
        e
    }

    pub fn all_ones(n: u64) -> Self {
        GroupRingElem {
            n,
            coeffs: vec![BigInt::one(); n as usize],
        }
    }

    pub fn from_i64(n: u64, v: &[i64]) -> Self {
        assert_eq!(v.len() as u64, n);
        GroupRingElem {
            n,
            coeffs: v.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Indicator of a subset of Z_N.
    pub fn indicator(n: u64, support: &[u64]) -> Self {
        let mut e = Self::zero(n);
        for &a in support {
            e.coeffs[(a % n) as usize] += 1;
        }
        e
    }

    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedN(self.n, other.n));
        }
        let n = self.n as usize;
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut idx = i + j;
                if idx >= n {
                    idx -= n;
                }
                out.coeffs[idx] += a * b;
            }
        }
        Ok(out)
    }

    /// x^a -> x^{-a}.
    pub fn involution(&self) -> Self {
        let n = self.n as usize;
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - i) % n] = a.clone();
        }
        out
    }

    /// The ring automorphism x^a -> x^{ca}; c must be a unit mod n.
    pub fn relabel(&self, c: u64) -> Result<Self> {
        if gcd(c % self.n, self.n) != 1 {
            return Err(Error::NotCoprime { a: c, b: self.n });
        }
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.coeffs[(c % self.n * i as u64 % self.n) as usize] = a.clone();
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::delta(self.n);
        for _ in 0..e {
            acc = acc.convolve(self).unwrap();
        }
        acc
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Coefficient values with multiplicities, sorted by value.
    pub fn value_multiset(&self) -> Vec<(BigInt, u64)> {
        let mut sorted = self.coeffs.clone();
        sorted.sort();
        let mut out: Vec<(BigInt, u64)> = Vec::new();
        for c in sorted {
            match out.last_mut() {
                Some((v, m)) if *v == c => *m += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
}

/// g = sum_a eta_a x^a for a rational spectrum.
pub fn period_vector(sp: &PeriodSpectrum) -> Result<GroupRingElem> {
    let eta = sp.eta.as_ref().ok_or(Error::NotRational)?;
    Ok(GroupRingElem::from_i64(sp.n, eta))
}

/// Period vector of the degree-e extension spectrum, up to unit relabel:
/// (-1)^{e-1} g^e.
pub fn lift_periods(g: &GroupRingElem, e: u32) -> Result<GroupRingElem> {
    if e == 0 {
        return Err(Error::PreconditionFailed("lift degree must be >= 1".into()));
    }
    let p = g.pow(e);
    Ok(if e % 2 == 0 { p.neg() } else { p })
}

/// sum_a eta_a eta_{a+b} = q [b = 0] - k for every rational spectrum.
pub fn check_autocorrelation(eta: &[i64], q: u64) -> bool {
    let n = eta.len() as u64;
    if n == 0 || (q - 1) % n != 0 {
        return false;
    }
    let k = ((q - 1) / n) as i128;
    for b in 0..n as usize {
        let mut acc: i128 = 0;
        for a in 0..n as usize {
            let mut idx = a + b;
            if idx >= n as usize {
                idx -= n as usize;
            }
            acc += eta[a] as i128 * eta[idx] as i128;
        }
        let want = if b == 0 { q as i128 - k } else { -k };
        if acc != want {
            return false;
        }
    }
    true
}

/// Some(c) for the first unit c with a relabeled by c equal to b.
pub fn equivalent_up_to_unit(a: &GroupRingElem, b: &GroupRingElem) -> Result<Option<u64>> {
    if a.n != b.n {
        return Err(Error::MismatchedN(a.n, b.n));
    }
    for c in 1..a.n.max(2) {
        if gcd(c, a.n) != 1 {
            continue;
        }
        if a.relabel(c)? == *b {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::gauss_periods;
    use proptest::collection::vec;
    use proptest::prelude::*;

    /// Reference convolution: full polynomial product, then fold x^n = 1.
    fn fold_convolve(a: &GroupRingElem, b: &GroupRingElem) -> GroupRingElem {
        let n = a.n as usize;
        let mut full = vec![BigInt::zero(); 2 * n];
        for i in 0..n {
            for j in 0..n {
                let t = &a.coeffs[i] * &b.coeffs[j];
                full[i + j] += t;
            }
        }
        let mut out = GroupRingElem::zero(a.n);
        for (i, c) in full.into_iter().enumerate() {
            out.coeffs[i % n] += c;
        }
        out
    }

    proptest! {
        #[test]
        fn convolution_properties(
            (n, av, bv) in (1u64..12).prop_flat_map(|n| {
                (Just(n), vec(-20i64..20, n as usize), vec(-20i64..20, n as usize))
            })
        ) {
            let a = GroupRingElem::from_i64(n, &av);
            let b = GroupRingElem::from_i64(n, &bv);
            let ab = a.convolve(&b).unwrap();
            prop_assert_eq!(&ab, &fold_convolve(&a, &b));
            prop_assert_eq!(&ab, &b.convolve(&a).unwrap());
            prop_assert_eq!(
                ab.involution(),
                a.involution().convolve(&b.involution()).unwrap()
            );
            prop_assert_eq!(a.involution().involution(), a.clone());
            prop_assert_eq!(a.convolve(&GroupRingElem::delta(n)).unwrap(), a.clone());
            let total: BigInt = av.iter().sum::<i64>().into();
            let az = a.convolve(&GroupRingElem::all_ones(n)).unwrap();
            prop_assert!(az.coeffs.iter().all(|c| *c == total));
        }

        #[test]
        fn relabel_properties(
            (n, av, c1, c2) in (1u64..12).prop_flat_map(|n| {
                (Just(n), vec(-20i64..20, n as usize), 1u64..40, 1u64..40)
            })
        ) {
            prop_assume!(gcd(c1 % n, n) == 1 && gcd(c2 % n, n) == 1);
            let a = GroupRingElem::from_i64(n, &av);
            prop_assert_eq!(
                a.relabel(c1).unwrap().relabel(c2).unwrap(),
                a.relabel(c1 * c2 % n.max(1)).unwrap()
            );
            prop_assert_eq!(a.relabel(1).unwrap(), a.clone());
        }
    }

    #[test]
    fn gf8_worked_example() {
        let base = gauss_periods(2, 3, 7).unwrap();
        let g = period_vector(&base).unwrap();
        // Trace-zero exponents S = {1, 2, 4}: g = 2S - Z_7.
        let s = GroupRingElem::indicator(7, &[1, 2, 4]);
        let mut want = GroupRingElem::zero(7);
        for i in 0..7 {
            want.coeffs[i] = &s.coeffs[i] * 2 - 1;
        }
        assert_eq!(g, want);

        // S is a planar difference set: S S^(-1) = 2 delta_0 + Z_7.
        let ss = s.convolve(&s.involution()).unwrap();
        for i in 0..7 {
            let want: BigInt = if i == 0 { 3 } else { 1 }.into();
            assert_eq!(ss.coeffs[i], want);
        }

        assert!(check_autocorrelation(base.eta.as_ref().unwrap(), 8));

        // Lift to GF(64): -g^2 has the (2, 6, 7) value multiset.
        let lifted = lift_periods(&g, 2).unwrap();
        let ms = lifted.value_multiset();
        let want: Vec<(BigInt, u64)> =
            vec![((-3).into(), 3), (1.into(), 3), (5.into(), 1)];
        assert_eq!(ms, want);
        let direct = period_vector(&gauss_periods(2, 6, 7).unwrap()).unwrap();
        assert_eq!(direct.value_multiset(), want);
        let c = equivalent_up_to_unit(&lifted, &direct).unwrap();
        assert!(c.is_some(), "lift must agree with direct up to unit");
        // And a genuinely different multiset is never unit-equivalent.
        let other = period_vector(&gauss_periods(2, 6, 9).unwrap()).unwrap();
        assert_eq!(
            equivalent_up_to_unit(&lifted, &other).unwrap_err(),
            Error::MismatchedN(7, 9)
        );
        let mut perturbed = direct.clone();
        perturbed.coeffs[3] += 1;
        assert_eq!(equivalent_up_to_unit(&lifted, &perturbed).unwrap(), None);
    }

    #[test]
    fn autocorrelation_on_rational_panel() {
        for (p, f, n) in [
            (2u64, 6u32, 7u64),
            (2, 6, 9),
            (2, 6, 21),
            (3, 6, 13),
            (2, 11, 89),
            (11, 3, 19),
            (3, 4, 5),
        ] {
            let sp = gauss_periods(p, f, n).unwrap();
            assert!(
                check_autocorrelation(sp.eta.as_ref().unwrap(), sp.field.q),
                "({p},{f},{n})"
            );
        }
        assert!(!check_autocorrelation(&[0, 0, 0, 0, 0, 0, -1], 8));
    }

    #[test]
    fn lift_degree_three() {
        // GF(4) -> GF(64), N = 3: g^3 keeps the sign.
        let base = gauss_periods(2, 2, 3).unwrap();
        let lifted = lift_periods(&period_vector(&base).unwrap(), 3).unwrap();
        let direct = period_vector(&gauss_periods(2, 6, 3).unwrap()).unwrap();
        assert_eq!(lifted.value_multiset(), direct.value_multiset());
        assert!(equivalent_up_to_unit(&lifted, &direct).unwrap().is_some());
    }
}

//! Infinite families with closed-form spectra. Each constructor returns a
//! FamilyPrediction holding exact values and multiplicities as big integers,
//! so members far beyond direct computation are still representable; tests
//! validate every family against direct trace-stream computation on its
//! small members.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{divisors, factorize, gcd, is_prime, mult_order, prime_power};
use crate::conditions::{sizes_ap, sizes_three_valued};
use crate::cyclotomy::{decompose, gauss_periods};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    Conic,
    OrderThree,
    Subfield,
    LiftedTwoValued,
    Index2Prime,
    Index2Biprime,
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Conic => "conic",
            FamilyId::OrderThree => "order-3 subgroup",
            FamilyId::Subfield => "subfield",
            FamilyId::LiftedTwoValued => "lifted two-valued",
            FamilyId::Index2Prime => "index-2 prime",
            FamilyId::Index2Biprime => "index-2 biprime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPrediction {
    pub family: FamilyId,
    pub p: u64,
    pub f: u32,
    pub n: u64,
    pub q: BigInt,
    /// (value, multiplicity) pairs, ascending by value; multiplicity is
    /// None when the family does not determine it.
    pub values: Vec<(BigInt, Option<BigInt>)>,
    pub three_valued: bool,
    pub ap: Option<bool>,
    pub cw: Option<bool>,
    pub scheme: Option<bool>,
    pub t: Option<BigInt>,
    pub notes: Vec<String>,
}

impl FamilyPrediction {
    /// The multiset as machine integers, when every entry fits and is known.
    pub fn multiset_u64(&self) -> Option<Vec<(i64, u64)>> {
        self.values
            .iter()
            .map(|(v, m)| {
                let v = i64::try_from(v).ok()?;
                let m = u64::try_from(m.as_ref()?).ok()?;
                Some((v, m))
            })
            .collect()
    }
}

fn bigpow(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

/// Spectrum of order N = q0^2 + q0 + 1 in GF(q0^6), q0 = p^w: values
/// q0 - 1 and q0 - 1 +- q0^2, an AP giving CW(N, q0^2).
pub fn conic(p: u64, w: u32) -> Result<FamilyPrediction> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    if w == 0 {
        return Err(Error::PreconditionFailed(
            "subfield exponent must be positive".into(),
        ));
    }
    let q0 = bigpow(p, w);
    let n_big = &q0 * &q0 + &q0 + 1;
    let n = u64::try_from(&n_big).map_err(|_| Error::Overflow("N"))?;
    let f = 6 * w;
    let q = bigpow(p, f);
    let a2 = &q0 - 1;
    let a1 = &a2 - &q0 * &q0;
    let a3 = &a2 + &q0 * &q0;
    let m1 = &q0 * (&q0 + 1) / 2;
    let m2 = &q0 + 1;
    let m3 = &q0 * (&q0 - 1) / 2;
    let t = &q0 * &q0;
    if let (Ok(qu), Ok(a2i), Ok(tu)) = (
        u64::try_from(&q),
        i64::try_from(&a2),
        u64::try_from(&t),
    ) {
        let (i1, i3, i2, _) = sizes_ap(a2i, tu, qu, n)?;
        assert_eq!(BigInt::from(i1), m1);
        assert_eq!(BigInt::from(i2), m2);
        assert_eq!(BigInt::from(i3), m3);
    }
    Ok(FamilyPrediction {
        family: FamilyId::Conic,
        p,
        f,
        n,
        q,
        values: vec![(a1, Some(m1)), (a2, Some(m2)), (a3, Some(m3))],
        three_valued: true,
        ap: Some(true),
        cw: Some(true),
        scheme: Some(p == 2),
        t: Some(t),
        notes: Vec::new(),
    })
}

/// Spectrum of order N = (q0^2 + q0 + 1)/3 in GF(q0^3), q0 = p^w = 1 mod 3:
/// values {-3, q0 - 3, 2 q0 - 3}, the top one on a single class.
pub fn order3(q0: u64) -> Result<FamilyPrediction> {
    let (p, w) = prime_power(q0).ok_or_else(|| {
        Error::PreconditionFailed("q0 must be a prime power".into())
    })?;
    if q0 % 3 != 1 {
        return Err(Error::PreconditionFailed("q0 must be 1 mod 3".into()));
    }
    let modulus = 3 * (q0 - 1);
    if mult_order(q0 % modulus, modulus) != 3 {
        return Err(Error::PreconditionFailed(
            "q0 must have order 3 modulo 3(q0 - 1)".into(),
        ));
    }
    let n_big = (BigInt::from(q0) * q0 + q0 + 1) / 3;
    let n = u64::try_from(&n_big).map_err(|_| Error::Overflow("N"))?;
    let f = 3 * w;
    let q = bigpow(p, f);
    let values = vec![
        (BigInt::from(-3), Some((BigInt::from(q0) - 1) * (q0 - 1) / 3)),
        (BigInt::from(q0 as i64 - 3), Some(BigInt::from(q0 - 1))),
        (BigInt::from(2 * (q0 as i64) - 3), Some(BigInt::from(1))),
    ];
    if let Ok(qu) = u64::try_from(&q) {
        let sizes = sizes_three_valued(qu, n, [-3, q0 as i64 - 3, 2 * q0 as i64 - 3])?;
        for (want, (_, got)) in sizes.iter().zip(&values) {
            assert_eq!(&BigInt::from(*want), got.as_ref().unwrap());
        }
    }
    Ok(FamilyPrediction {
        family: FamilyId::OrderThree,
        p,
        f,
        n,
        q,
        values,
        three_valued: true,
        ap: Some(true),
        cw: Some(q0 == 4),
        scheme: Some(true),
        t: Some(BigInt::from(q0)),
        notes: Vec::new(),
    })
}

/// Subfield family: order N = (p^{3fs} - 1)(p^l - 1)/((p^{3l} - 1)(p^fs - 1))
/// in GF(p^{3fs}), where l = gcd(e, fs) and e = 3l. Spread parameters are
/// u = 1, v = p^l, so these spectra are never APs; when fs = 2l the lowest
/// value vanishes and the spectrum is two-valued.
pub fn subfield(p: u64, e: u32, fs: u32) -> Result<FamilyPrediction> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    let l = gcd(e as u64, fs as u64) as u32;
    if e != 3 * l {
        return Err(Error::PreconditionFailed(
            "e must be 3 gcd(e, fs)".into(),
        ));
    }
    let f = 3 * fs;
    let q = bigpow(p, f);
    let num: BigInt = (&q - BigInt::from(1)) * (bigpow(p, l) - 1);
    let den: BigInt = (bigpow(p, e) - 1) * (bigpow(p, fs) - 1);
    let (n_big, rem) = num.div_rem(&den);
    assert_eq!(rem, BigInt::from(0));
    let n = u64::try_from(&n_big).map_err(|_| Error::Overflow("N"))?;
    if n <= 2 {
        return Err(Error::PreconditionFailed(
            "degenerate member: N <= 2 when fs = l".into(),
        ));
    }
    let pl = bigpow(p, l);
    let pfs = bigpow(p, fs);
    let a1: BigInt = -(&pl * &pl + &pl + BigInt::from(1));
    let a2 = &pfs + &a1;
    let a3 = &pfs * (&pl + 1) + &a1;
    // (p^fs - p^l)(p^fs - p^2l) / (1 + p^l + p^2l)
    let (i1, rem) = ((&pfs - &pl) * (&pfs - &pl * &pl)).div_rem(&(-&a1));
    assert_eq!(rem, BigInt::from(0));
    let i2 = &pfs - &pl;
    assert_eq!(&i1 + &i2 + 1, n_big);
    let three_valued = i1 > BigInt::from(0);
    let mut notes = vec![format!("spread parameters u = 1, v = {pl}")];
    let values = if three_valued {
        vec![
            (a1, Some(i1)),
            (a2, Some(i2)),
            (a3, Some(BigInt::from(1))),
        ]
    } else {
        notes.push(
            "lowest value has multiplicity 0 (fs = 2l); spectrum is two-valued".into(),
        );
        vec![(a2, Some(i2)), (a3, Some(BigInt::from(1)))]
    };
    if three_valued {
        if let Ok(qu) = u64::try_from(&q) {
            let vals = [
                i64::try_from(&values[0].0).unwrap(),
                i64::try_from(&values[1].0).unwrap(),
                i64::try_from(&values[2].0).unwrap(),
            ];
            let sizes = sizes_three_valued(qu, n, vals)?;
            for (want, (_, got)) in sizes.iter().zip(&values) {
                assert_eq!(&BigInt::from(*want), got.as_ref().unwrap());
            }
        }
    }
    Ok(FamilyPrediction {
        family: FamilyId::Subfield,
        p,
        f,
        n,
        q,
        values,
        three_valued,
        ap: three_valued.then_some(false),
        cw: three_valued.then_some(false),
        scheme: None,
        t: Some(pfs),
        notes,
    })
}

/// Lift of a two-valued spectrum: with k = (p^f - 1)/sub_n kept fixed, the
/// order-N' classes of GF(p^{fe}), N' = (p^{fe} - 1)/k, are cosets of the
/// same subgroup H of GF(p^f)*, and the class period is k where the
/// subfield trace vanishes and a base value elsewhere.
pub fn lifted_two_valued(p: u64, f: u32, e: u32, sub_n: u64) -> Result<FamilyPrediction> {
    if e < 2 {
        return Err(Error::PreconditionFailed("lift exponent must be >= 2".into()));
    }
    let base = decompose(&gauss_periods(p, f, sub_n)?)?;
    if base.values.len() != 2 {
        return Err(Error::BaseNotTwoValued);
    }
    let k = base.k;
    let fe = f.checked_mul(e).ok_or(Error::Overflow("f e"))?;
    let q = bigpow(p, fe);
    let diff: BigInt = &q - BigInt::from(1);
    let (n_big, rem) = diff.div_rem(&BigInt::from(k));
    assert_eq!(rem, BigInt::from(0));
    let n = u64::try_from(&n_big).map_err(|_| Error::Overflow("N"))?;
    let qe1 = bigpow(p, f * (e - 1));
    let mut mults: std::collections::BTreeMap<BigInt, BigInt> = std::collections::BTreeMap::new();
    mults.insert(BigInt::from(k), (&qe1 - 1) / k);
    let merged = base.values.iter().any(|&v| BigInt::from(v) == BigInt::from(k));
    for (&v, &s) in base.values.iter().zip(&base.multiplicities) {
        *mults.entry(BigInt::from(v)).or_default() += s * &qe1;
    }
    let values: Vec<(BigInt, Option<BigInt>)> =
        mults.into_iter().map(|(v, m)| (v, Some(m))).collect();
    let three_valued = values.len() == 3;
    let mut notes = Vec::new();
    if merged {
        notes.push("subfield-trace value k coincides with a base value; classes merge".into());
    }
    let (ap, cw, t) = if three_valued {
        let d1 = &values[1].0 - &values[0].0;
        let d2 = &values[2].0 - &values[1].0;
        let ap = d1 == d2;
        let t = d1.gcd(&d2);
        let cw = ap && fe % 2 == 0 && {
            let sq = bigpow(p, fe / 2);
            (&sq - 1) % n_big.clone() == BigInt::from(0)
                && values[1].0 == (&sq - 1) / &n_big
        };
        (Some(ap), Some(cw), Some(t))
    } else {
        (None, None, None)
    };
    Ok(FamilyPrediction {
        family: FamilyId::LiftedTwoValued,
        p,
        f: fe,
        n,
        q,
        values,
        three_valued,
        ap,
        cw,
        scheme: None,
        t,
        notes,
    })
}

/// Class number h(d) of the imaginary quadratic order of discriminant d < 0,
/// by counting reduced primitive forms (a, b, c).
pub fn class_number(d: i64) -> Result<u64> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::PreconditionFailed(
            "discriminant must be negative and 0 or 1 mod 4".into(),
        ));
    }
    let ad = (-d) as u64;
    let mut h = 0u64;
    let mut b = ad % 2;
    while 3 * b * b <= ad {
        let m4 = b * b + ad;
        assert_eq!(m4 % 4, 0);
        let m = m4 / 4;
        for a in divisors(m) {
            if a < b.max(1) || a * a > m {
                continue;
            }
            let c = m / a;
            if gcd(gcd(a, b), c) == 1 {
                h += if b == 0 || a == b || a == c { 1 } else { 2 };
            }
        }
        b += 2;
    }
    Ok(h)
}

fn big_mod(x: &BigInt, n: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(n));
    u64::try_from(&r).unwrap()
}

/// Representation 4 p^h = b^2 + disc c^2 with p dividing neither b nor c;
/// returns (|b|, c).
fn cornacchia_like(p: u64, h: u64, disc: u64) -> Result<(BigInt, BigInt)> {
    let target = BigInt::from(4) * BigInt::from(p).pow(u32::try_from(h).unwrap());
    let mut c = BigInt::from(1);
    loop {
        let rest = &target - BigInt::from(disc) * &c * &c;
        if rest < BigInt::from(0) {
            return Err(Error::BadDiscriminant(disc));
        }
        let b = rest.sqrt();
        if &b * &b == rest
            && big_mod(&b, p) != 0
            && big_mod(&c, p) != 0
        {
            return Ok((b, c));
        }
        c += 1;
    }
}

/// The decomposition 4 p^h = b^2 + N c^2 behind an index-2 evaluation, with
/// the sign of b fixed by the case's normalizing congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticClassData {
    pub h: u64,
    pub b: BigInt,
    pub c: BigInt,
}

/// Index-2 spectrum of prime order N = p1 = 3 mod 4 in GF(p^f),
/// f = (p1 - 1)/2: three values from the representation 4p^h = b^2 + p1 c^2,
/// h the class number of discriminant -p1.
pub fn index2_prime(p1: u64, p: u64) -> Result<FamilyPrediction> {
    Ok(index2_prime_full(p1, p)?.0)
}

fn index2_prime_full(p1: u64, p: u64) -> Result<(FamilyPrediction, QuadraticClassData)> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    if !is_prime(p1) || p1 % 4 != 3 || p1 <= 3 {
        return Err(Error::NotIndex2(format!(
            "N = {p1} must be a prime greater than 3 and 3 mod 4"
        )));
    }
    if p % p1 == 0 {
        return Err(Error::NotIndex2(format!("p = {p} divides N = {p1}")));
    }
    let half = (p1 - 1) / 2;
    if mult_order(p % p1, p1) != half {
        return Err(Error::NotIndex2(format!(
            "p must have order (N - 1)/2 modulo N = {p1}"
        )));
    }
    let h = class_number(-(p1 as i64))?;
    assert_eq!(h % 2, 1);
    let f = u32::try_from(half).map_err(|_| Error::Overflow("f"))?;
    let (b_abs, c) = cornacchia_like(p, h, p1)?;
    let ppw = bigpow(p, (f - h as u32) / 2);
    // Fix the sign of b by b p^{(f-h)/2} = -2 mod p1.
    let b = if big_mod(&(&b_abs * &ppw), p1) == p1 - 2 {
        b_abs.clone()
    } else if big_mod(&(-&b_abs * &ppw), p1) == p1 - 2 {
        -&b_abs
    } else {
        return Err(Error::NotIndex2(
            "no sign of b satisfies the normalization".into(),
        ));
    };
    let n = p1;
    let q = bigpow(p, f);
    let two_n = BigInt::from(2 * p1);
    let exact = |num: BigInt| -> BigInt {
        let (quot, rem) = num.div_rem(&two_n);
        assert_eq!(rem, BigInt::from(0));
        quot
    };
    let a1 = exact(&ppw * &b * (p1 - 1) - 2);
    let a2 = exact(&ppw * (&c * p1 - &b) - 2);
    let a3 = exact(-(&ppw * (&c * p1 + &b)) - 2);
    let half_big = BigInt::from(half);
    let mut values = vec![
        (a1, Some(BigInt::from(1))),
        (a2, Some(half_big.clone())),
        (a3, Some(half_big)),
    ];
    values.sort_by(|x, y| x.0.cmp(&y.0));
    assert!(values[0].0 < values[1].0 && values[1].0 < values[2].0);
    let d1 = &values[1].0 - &values[0].0;
    let d2 = &values[2].0 - &values[1].0;
    let ap = b_abs == BigInt::from(3) * &c;
    assert_eq!(ap, d1 == d2);
    let pred = FamilyPrediction {
        family: FamilyId::Index2Prime,
        p,
        f,
        n,
        q,
        values,
        three_valued: true,
        ap: Some(ap),
        cw: Some(false),
        scheme: Some(true),
        t: Some(d1.gcd(&d2)),
        notes: vec![format!("4 p^{h} = {b}^2 + {p1} ({c})^2")],
    };
    Ok((pred, QuadraticClassData { h, b, c }))
}

/// Index-2 spectrum of biprime order N = p1 p2 (p1 = 1, p2 = 3 mod 4,
/// gcd(p1 - 1, p2 - 1) = 2) in GF(p^f), f = (p1-1)(p2-1)/2. Generically
/// five-valued; collapses to three values when (p1 + p2) | 4p^{h/2} and
/// 2 p^{f/2} (p1 - p2)/(p1 + p2) = 2 mod N.
pub fn index2_biprime(p1: u64, p2: u64, p: u64) -> Result<FamilyPrediction> {
    Ok(index2_biprime_full(p1, p2, p)?.0)
}

fn index2_biprime_full(p1: u64, p2: u64, p: u64) -> Result<(FamilyPrediction, QuadraticClassData)> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    if !is_prime(p1) || !is_prime(p2) || p1 % 4 != 1 || p2 % 4 != 3 {
        return Err(Error::NotIndex2(
            "need primes p1 = 1 mod 4 and p2 = 3 mod 4".into(),
        ));
    }
    let n = p1 * p2;
    if p % p1 == 0 || p % p2 == 0 {
        return Err(Error::NotIndex2(format!("p = {p} divides N = {n}")));
    }
    if mult_order(p % p1, p1) != p1 - 1 || mult_order(p % p2, p2) != p2 - 1 {
        return Err(Error::NotIndex2(
            "p must be a primitive root modulo p1 and modulo p2".into(),
        ));
    }
    // For p primitive modulo both primes the subgroup index in Z_N^* is
    // exactly gcd(p1 - 1, p2 - 1).
    if gcd(p1 - 1, p2 - 1) != 2 {
        return Err(Error::NotIndex2(format!(
            "index gcd(p1 - 1, p2 - 1) = {} must be 2",
            gcd(p1 - 1, p2 - 1)
        )));
    }
    let h = class_number(-((n) as i64))?;
    assert_eq!(h % 2, 0);
    let f = u32::try_from((p1 - 1) * (p2 - 1) / 2).map_err(|_| Error::Overflow("f"))?;
    let (b_abs, c) = cornacchia_like(p, h, n)?;
    let ppw = bigpow(p, (f - h as u32) / 2);
    // Fix the sign of b by b p^{(f-h)/2} = +2 mod N.
    let b = if big_mod(&(&b_abs * &ppw), n) == 2 {
        b_abs
    } else if big_mod(&(-&b_abs * &ppw), n) == 2 {
        -b_abs
    } else {
        return Err(Error::NotIndex2(
            "no sign of b satisfies the normalization".into(),
        ));
    };
    let q = bigpow(p, f);
    let nb = BigInt::from(n);
    let exact = |num: BigInt| -> BigInt {
        let (quot, rem) = num.div_rem(&nb);
        assert_eq!(rem, BigInt::from(0));
        quot
    };
    let pf2 = bigpow(p, f / 2);
    let a1 = exact((&b + &c * n) / 2 * &ppw - 1);
    let a3 = exact((&b - &c * n) / 2 * &ppw - 1);
    let a5 = exact(
        &b * ((p1 - 1) * (p2 - 1) / 2) * &ppw + (BigInt::from(p1) - p2) * &pf2 - 1,
    );
    let a2 = exact(-(&b * ((p1 - 1) / 2) * &ppw) + BigInt::from(p1) * &pf2 - 1);
    let a4 = exact(-(&b * ((p2 - 1) / 2) * &ppw) - BigInt::from(p2) * &pf2 - 1);
    // Collapse test.
    let four_ph2 = BigInt::from(4) * bigpow(p, h as u32 / 2);
    let collapse = (&four_ph2 % (p1 + p2) == BigInt::from(0)) && {
        let lhs = BigInt::from(2) * &pf2 * (BigInt::from(p1) - p2);
        (&lhs % (p1 + p2) == BigInt::from(0))
            && big_mod(&(lhs / (p1 + p2)), n) == 2
    };
    let mut notes = vec![format!("4 p^{h} = ({b})^2 + {n} c^2, c = {c}")];
    let (values, three_valued) = if collapse {
        notes.push("five generic values collapse to three".into());
        let mut vals = vec![
            (a1, None),
            (a3, None),
            (a5.clone(), Some(BigInt::from(1))),
        ];
        vals.sort_by(|x, y| x.0.cmp(&y.0));
        if let Ok(qu) = u64::try_from(&q) {
            let tri = [
                i64::try_from(&vals[0].0).unwrap(),
                i64::try_from(&vals[1].0).unwrap(),
                i64::try_from(&vals[2].0).unwrap(),
            ];
            let sizes = sizes_three_valued(qu, n, tri)?;
            for (want, (_, got)) in sizes.iter().zip(vals.iter_mut()) {
                *got = Some(BigInt::from(*want));
            }
        }
        (vals, true)
    } else {
        let mut vals = vec![
            (a1, None),
            (a2, None),
            (a3, None),
            (a4, None),
            (a5, None),
        ];
        vals.sort_by(|x, y| x.0.cmp(&y.0));
        vals.dedup_by(|x, y| x.0 == y.0);
        (vals, false)
    };
    let pred = FamilyPrediction {
        family: FamilyId::Index2Biprime,
        p,
        f,
        n,
        q,
        values,
        three_valued,
        ap: three_valued.then_some(false),
        cw: three_valued.then_some(false),
        scheme: three_valued.then_some(true),
        t: None,
        notes,
    };
    Ok((pred, QuadraticClassData { h, b, c }))
}

/// Both index-2 cases under one entry point: order N = p1 when p2 is None,
/// N = p1 p2 otherwise. Returns the value prediction together with the
/// class-number decomposition 4 p^h = b^2 + N c^2 that produced it.
pub fn index2_alphas(
    p1: u64,
    p: u64,
    p2: Option<u64>,
) -> Result<(FamilyPrediction, QuadraticClassData)> {
    match p2 {
        None => index2_prime_full(p1, p),
        Some(p2) => index2_biprime_full(p1, p2, p),
    }
}

/// Index-2 members whose representation has |b| = 3: in the prime case
/// (p1 + 9)/4 must equal p^h exactly (h the class number), in the biprime
/// case (p1 p2 + 9)/4 = p^h. Returns (p1, p, h) and (p1, p2, p, h) lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Index2Hits {
    pub prime: Vec<(u64, u64, u64)>,
    pub biprime: Vec<(u64, u64, u64, u64)>,
}

pub fn index2_search(bound: u64) -> Index2Hits {
    let p1s: Vec<u64> = (5..=bound).filter(|&x| x % 4 == 3 && is_prime(x)).collect();
    let prime_hits = crate::par::par_map(p1s, |p1| {
        if (p1 + 9) % 4 != 0 {
            return None;
        }
        let (p, e) = prime_power((p1 + 9) / 4)?;
        let h = class_number(-(p1 as i64)).unwrap();
        if u64::from(e) != h || p % p1 == 0 {
            return None;
        }
        let half = (p1 - 1) / 2;
        if mult_order(p % p1, p1) != half {
            return None;
        }
        let ppw = crate::arith::pow_mod(p, (half - h) / 2, p1);
        let fits = [3, p1 - 3]
            .iter()
            .any(|&b| crate::arith::mul_mod(b, ppw, p1) == p1 - 2);
        fits.then_some((p1, p, h))
    });
    let p1s: Vec<u64> = (5..=bound / 3)
        .filter(|&x| x % 4 == 1 && is_prime(x))
        .collect();
    let biprime_hits = crate::par::par_map(p1s, |p1| {
        let mut hits = Vec::new();
        for p2 in 3..=bound / p1 {
            if p2 % 4 != 3 || !is_prime(p2) || gcd(p1 - 1, p2 - 1) != 2 {
                continue;
            }
            let n = p1 * p2;
            let Some((p, e)) = prime_power((n + 9) / 4) else {
                continue;
            };
            let h = class_number(-(n as i64)).unwrap();
            if u64::from(e) != h || p % p1 == 0 || p % p2 == 0 {
                continue;
            }
            if mult_order(p % p1, p1) != p1 - 1 || mult_order(p % p2, p2) != p2 - 1 {
                continue;
            }
            let f = (p1 - 1) * (p2 - 1) / 2;
            let ppw = crate::arith::pow_mod(p, (f - h) / 2, n);
            if [3, n - 3]
                .iter()
                .any(|&b| crate::arith::mul_mod(b, ppw, n) == 2)
            {
                hits.push((p1, p2, p, h));
            }
        }
        hits
    });
    Index2Hits {
        prime: prime_hits.into_iter().flatten().collect(),
        biprime: biprime_hits.into_iter().flatten().collect(),
    }
}

/// Attribute (p, f, N) to a known family, if any.
pub fn is_known_family(p: u64, f: u32, n: u64) -> Option<FamilyId> {
    if f % 6 == 0 && f >= 6 {
        let w = f / 6;
        if let Some(q0) = p.checked_pow(w) {
            if q0
                .checked_mul(q0)
                .and_then(|x| x.checked_add(q0 + 1))
                == Some(n)
            {
                return Some(FamilyId::Conic);
            }
        }
    }
    if f % 3 == 0 && f >= 3 {
        let w = f / 3;
        if let Some(q0) = p.checked_pow(w) {
            if q0 % 3 == 1
                && q0
                    .checked_mul(q0)
                    .and_then(|x| x.checked_add(q0 + 1))
                    .map(|x| x / 3)
                    == Some(n)
            {
                return Some(FamilyId::OrderThree);
            }
        }
    }
    if f % 3 == 0 {
        let fs = f / 3;
        for l in divisors(fs as u64) {
            if gcd(3 * l, fs as u64) != l || l == fs as u64 {
                continue;
            }
            let (num, den) = (
                (bigpow(p, f) - 1) * (bigpow(p, l as u32) - 1),
                (bigpow(p, 3 * l as u32) - 1) * (bigpow(p, fs) - 1),
            );
            if (&num % &den) == BigInt::from(0) && num / den == BigInt::from(n) {
                return Some(FamilyId::Subfield);
            }
        }
    }
    if n > 3 && n % 4 == 3 && is_prime(n) && p % n != 0 {
        let half = (n - 1) / 2;
        if mult_order(p % n, n) == half && f as u64 % half == 0 {
            return Some(FamilyId::Index2Prime);
        }
    }
    let fac = factorize(n);
    if fac.len() == 2 && fac[0].1 == 1 && fac[1].1 == 1 {
        let (mut p1, mut p2) = (fac[0].0, fac[1].0);
        if p1 % 4 == 3 && p2 % 4 == 1 {
            std::mem::swap(&mut p1, &mut p2);
        }
        if p1 % 4 == 1
            && p2 % 4 == 3
            && gcd(p1 - 1, p2 - 1) == 2
            && p % p1 != 0
            && p % p2 != 0
            && mult_order(p % p1, p1) == p1 - 1
            && mult_order(p % p2, p2) == p2 - 1
            && f as u64 == (p1 - 1) * (p2 - 1) / 2
        {
            return Some(FamilyId::Index2Biprime);
        }
    }
    if let Some(q) = p.checked_pow(f) {
        if (q - 1) % n == 0 {
            let k = (q - 1) / n;
            for f0 in divisors(f as u64) {
                if f0 == f as u64 {
                    continue;
                }
                let q0 = p.pow(f0 as u32);
                if (q0 - 1) % k != 0 {
                    continue;
                }
                let sub_n = (q0 - 1) / k;
                if sub_n < 2 {
                    continue;
                }
                if let Ok(base) = gauss_periods(p, f0 as u32, sub_n) {
                    if let Some(eta) = &base.eta {
                        let mut vals = eta.clone();
                        vals.sort_unstable();
                        vals.dedup();
                        if vals.len() == 2 {
                            return Some(FamilyId::LiftedTwoValued);
                        }
                    }
                }
            }
        }
    }
    None
}

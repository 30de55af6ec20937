//! Combinatorial structures certified from rational spectra: circulant
//! weighing matrices CW(N, q/t^2) from arithmetic-progression spectra, and
//! three-class association schemes on GF(q) whose classes are unions of
//! cyclotomic classes.
//!
//! Scheme verification is exact. The class sums D_1, D_2, D_3 are group
//! circulants, simultaneously diagonalized by the additive characters, and
//! the characters in class b all share the joint eigenvalue tuple
//! T_b = (sum_{i in I_l} eta_{i+b})_l. The span of {I, D_1, D_2, D_3} is a
//! Bose-Mesner algebra exactly when the tuples (including the valency tuple
//! on the trivial character) take exactly 4 distinct values.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith::perfect_sqrt;
use crate::cyclotomy::{gauss_periods_for, PeriodSpectrum, ValueDecomposition};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::par::par_map;

/// Largest q for which the brute-force cross-check runs.
pub const BRUTE_CAP: u64 = 1_000_000;

/// A {0, +1, -1} function on Z_N: the first row of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSupport {
    pub n: u64,
    pub entries: Vec<i8>,
}

impl SignedSupport {
    pub fn weight(&self) -> u64 {
        self.entries.iter().filter(|&&e| e != 0).count() as u64
    }
}

/// First autocorrelation defect of a candidate weighing-matrix row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CwFailure {
    pub lag: u64,
    pub value: i64,
}

/// Signed support of a circulant weighing matrix from an AP spectrum:
/// +1 on the low index set, -1 on the high one.
pub fn build_cw(dec: &ValueDecomposition) -> Result<SignedSupport> {
    if !dec.ap {
        return Err(Error::NotAP);
    }
    let sq = perfect_sqrt(dec.q).ok_or(Error::NotSquareQ(dec.q))?;
    let mid = dec.values[1];
    if (sq - 1) % dec.n != 0 || mid != ((sq - 1) / dec.n) as i64 {
        return Err(Error::MidValueMismatch { got: mid, sqrt_q: sq });
    }
    let mut entries = vec![0i8; dec.n as usize];
    for &i in &dec.index_sets[0] {
        entries[i as usize] = 1;
    }
    for &i in &dec.index_sets[2] {
        entries[i as usize] = -1;
    }
    Ok(SignedSupport { n: dec.n, entries })
}

/// Check S S^- = w delta_0 in Z[Z_N]; returns the weight w on success.
pub fn verify_cw(s: &SignedSupport) -> std::result::Result<u64, CwFailure> {
    let n = s.n as usize;
    let w: i64 = s.entries.iter().map(|&e| (e * e) as i64).sum();
    for b in 0..n {
        let acc: i64 = (0..n)
            .map(|i| (s.entries[i] * s.entries[(i + b) % n]) as i64)
            .sum();
        let want = if b == 0 { w } else { 0 };
        if acc != want {
            return Err(CwFailure {
                lag: b as u64,
                value: acc,
            });
        }
    }
    Ok(w as u64)
}

/// Whether -1 lands in C_0, which makes every union of cyclotomic classes
/// symmetric under negation.
pub fn minus_one_in_c0(p: u64, q: u64, n: u64) -> bool {
    p == 2 || ((q - 1) / 2) % n == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMethod {
    /// One extreme value has multiplicity 1; scheme and self-duality are
    /// guaranteed, eigendata computed by dual count.
    Singleton,
    /// Character eigenvalue tuples only (exact).
    DualCount,
    /// Dual count cross-checked by direct pair counting in GF(q).
    BruteForce,
}

/// Two base points in one part whose (i, j) pair count differs, disproving
/// the scheme property. Class indices are 0-based into the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub class_pair: (usize, usize),
    pub c1: u64,
    pub c2: u64,
    pub count1: u64,
    pub count2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeCertificate {
    pub q: u64,
    pub n: u64,
    pub is_scheme: bool,
    pub method: VerifyMethod,
    /// First eigenmatrix P, 4 x 4, row 0 = valencies, when a scheme.
    pub eigenmatrix: Option<Vec<Vec<i64>>>,
    /// Eigenspace dimensions m_0..m_3, matching the rows of P.
    pub multiplicities: Option<Vec<u64>>,
    /// intersection_numbers[i][j][h] = p_ij^h, when a scheme.
    pub intersection_numbers: Option<Vec<Vec<Vec<u64>>>>,
    pub formally_self_dual: Option<bool>,
    pub self_dual: Option<bool>,
    pub witness: Option<Witness>,
}

/// Certify whether the 3-part partition of Z_N induces a 3-class association
/// scheme on GF(q) via the difference classes D_l = union of C_i, i in I_l.
pub fn verify_scheme(spec: &FieldSpec, n: u64, partition: &[Vec<u64>]) -> Result<SchemeCertificate> {
    if partition.len() != 3 || partition.iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidPartition);
    }
    let mut seen = vec![false; n as usize];
    for &i in partition.iter().flatten() {
        if i >= n || std::mem::replace(&mut seen[i as usize], true) {
            return Err(Error::InvalidPartition);
        }
    }
    if !seen.iter().all(|&x| x) {
        return Err(Error::InvalidPartition);
    }

    let spectrum = gauss_periods_for(spec, n)?;
    let eta = spectrum.eta.as_ref().ok_or(Error::NotRational)?.clone();
    let q = spec.q;
    if !minus_one_in_c0(spec.p, q, n) {
        return Err(Error::AsymmetricClasses);
    }
    let k = (q - 1) / n;

    // Joint eigenvalue tuples per character class, plus the valency tuple.
    let tuple_of = |b: u64| -> [i128; 3] {
        let mut t = [0i128; 3];
        for (l, class) in partition.iter().enumerate() {
            t[l] = class
                .iter()
                .map(|&i| eta[((i + b) % n) as usize] as i128)
                .sum();
        }
        t
    };
    let valency: [i128; 3] = [
        k as i128 * partition[0].len() as i128,
        k as i128 * partition[1].len() as i128,
        k as i128 * partition[2].len() as i128,
    ];
    let mut counts: BTreeMap<[i128; 3], u64> = BTreeMap::new();
    for b in 0..n {
        *counts.entry(tuple_of(b)).or_insert(0) += 1;
    }
    let mut distinct: BTreeSet<[i128; 3]> = counts.keys().copied().collect();
    distinct.insert(valency);
    let is_scheme = distinct.len() == 4;

    let mut eigenmatrix = None;
    let mut multiplicities = None;
    let mut intersection_numbers = None;
    let mut formally_self_dual = None;
    if is_scheme {
        let mut others: Vec<[i128; 3]> = counts.keys().filter(|&&t| t != valency).copied().collect();
        others.sort_unstable();
        others.reverse();
        let mut p_mat = vec![vec![0i64; 4]; 4];
        p_mat[0] = vec![1, valency[0] as i64, valency[1] as i64, valency[2] as i64];
        for (l, t) in others.iter().enumerate() {
            p_mat[l + 1] = vec![1, t[0] as i64, t[1] as i64, t[2] as i64];
        }
        let mut m = vec![1 + k * counts.get(&valency).copied().unwrap_or(0)];
        m.extend(others.iter().map(|t| k * counts[t]));
        assert_eq!(m.iter().sum::<u64>(), q);

        let kvec: Vec<i128> = (0..4).map(|h| p_mat[0][h] as i128).collect();
        let mut pn = vec![vec![vec![0u64; 4]; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for h in 0..4 {
                    let num: i128 = (0..4)
                        .map(|l| {
                            m[l] as i128
                                * p_mat[l][i] as i128
                                * p_mat[l][j] as i128
                                * p_mat[l][h] as i128
                        })
                        .sum();
                    let den = q as i128 * kvec[h];
                    assert_eq!(num % den, 0, "p_{i}{j}^{h} not integral");
                    assert!(num / den >= 0, "p_{i}{j}^{h} negative");
                    pn[i][j][h] = (num / den) as u64;
                }
            }
        }
        for i in 0..4 {
            for h in 0..4 {
                assert_eq!((0..4).map(|j| pn[i][j][h] as i128).sum::<i128>(), kvec[i]);
            }
        }
        formally_self_dual = Some(is_formally_self_dual(&p_mat, &m, q));
        eigenmatrix = Some(p_mat);
        multiplicities = Some(m);
        intersection_numbers = Some(pn);
    }

    // Singleton fast path: the partition is the value partition and one
    // extreme value occurs exactly once.
    let parts_as_sets: BTreeSet<BTreeSet<u64>> = partition
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    let mut by_value: BTreeMap<i64, BTreeSet<u64>> = BTreeMap::new();
    for (a, &e) in eta.iter().enumerate() {
        by_value.entry(e).or_default().insert(a as u64);
    }
    let value_parts: Vec<&BTreeSet<u64>> = by_value.values().collect();
    let singleton = value_parts.len() == 3
        && parts_as_sets == by_value.values().cloned().collect()
        && (value_parts[0].len() == 1 || value_parts[2].len() == 1);

    if singleton {
        assert!(is_scheme, "singleton extreme value must give a scheme");
        return Ok(SchemeCertificate {
            q,
            n,
            is_scheme: true,
            method: VerifyMethod::Singleton,
            eigenmatrix,
            multiplicities,
            intersection_numbers,
            formally_self_dual,
            self_dual: Some(true),
            witness: None,
        });
    }

    let mut method = VerifyMethod::DualCount;
    let mut witness = None;
    if q <= BRUTE_CAP {
        method = VerifyMethod::BruteForce;
        let a_mat = cyclotomic_pair_counts(spec, n);
        let per_base: Vec<[[u64; 3]; 3]> = par_map((0..n).collect(), |c| {
            let mut m = [[0u64; 3]; 3];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    for &b in &partition[i] {
                        let ai = &a_mat[((b + n - c) % n) as usize];
                        for &b2 in &partition[j] {
                            *cell += ai[((b2 + n - c) % n) as usize] as u64;
                        }
                    }
                }
            }
            m
        });
        'scan: for (h, class) in partition.iter().enumerate() {
            let base = per_base[class[0] as usize];
            for &c in &class[1..] {
                let cur = per_base[c as usize];
                if cur != base {
                    for i in 0..3 {
                        for j in 0..3 {
                            if cur[i][j] != base[i][j] {
                                witness = Some(Witness {
                                    class_pair: (i, j),
                                    c1: class[0],
                                    c2: c,
                                    count1: base[i][j],
                                    count2: cur[i][j],
                                });
                                break 'scan;
                            }
                        }
                    }
                }
            }
            let _ = h;
        }
        assert_eq!(
            witness.is_none(),
            is_scheme,
            "dual count and brute force disagree on ({}, {}, {})",
            spec.p,
            spec.f,
            n
        );
        if let Some(pn) = &intersection_numbers {
            for (h, class) in partition.iter().enumerate() {
                let base = per_base[class[0] as usize];
                for i in 0..3 {
                    for j in 0..3 {
                        assert_eq!(pn[i + 1][j + 1][h + 1], base[i][j]);
                    }
                }
            }
        }
    }

    Ok(SchemeCertificate {
        q,
        n,
        is_scheme,
        method,
        eigenmatrix,
        multiplicities,
        intersection_numbers,
        formally_self_dual,
        self_dual: None,
        witness,
    })
}

/// A[a][b] = #{x in C_a, x != 1 : 1 - x in C_b}, by walking the power
/// stream and forming 1 - x digitwise on packed coordinates.
fn cyclotomic_pair_counts(spec: &FieldSpec, n: u64) -> Vec<Vec<u32>> {
    let (q, p, f) = (spec.q, spec.p, spec.f);
    let mut cls = vec![u32::MAX; q as usize];
    let mut ps = spec.power_stream();
    for i in 0..(q - 1) {
        cls[ps.next().unwrap() as usize] = (i % n) as u32;
    }
    let one_minus = |x: u64| -> u64 {
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut rest = x;
        for j in 0..f {
            let d = rest % p;
            rest /= p;
            let nd = if j == 0 { (1 + p - d) % p } else { (p - d) % p };
            out += nd * mult;
            mult *= p;
        }
        out
    };
    let mut a_mat = vec![vec![0u32; n as usize]; n as usize];
    let mut ps = spec.power_stream();
    for i in 0..(q - 1) {
        let x = ps.next().unwrap();
        if x == 1 {
            continue;
        }
        a_mat[(i % n) as usize][cls[one_minus(x) as usize] as usize] += 1;
    }
    let k = (q - 1) / n;
    for (a, row) in a_mat.iter().enumerate() {
        let want = if a == 0 { k - 1 } else { k };
        assert_eq!(row.iter().map(|&x| x as u64).sum::<u64>(), want);
    }
    a_mat
}

/// P equals its dual eigenmatrix after some relabeling fixing class 0:
/// exists sigma with m_{sigma(j)} P[sigma(j)][sigma(i)] = P[i][j] k_{sigma(i)}.
fn is_formally_self_dual(p_mat: &[Vec<i64>], m: &[u64], q: u64) -> bool {
    let _ = q;
    let kvec: Vec<i128> = (0..4).map(|h| p_mat[0][h] as i128).collect();
    const PERMS: [[usize; 4]; 6] = [
        [0, 1, 2, 3],
        [0, 1, 3, 2],
        [0, 2, 1, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [0, 3, 2, 1],
    ];
    PERMS.iter().any(|perm| {
        (0..4).all(|i| {
            (0..4).all(|j| {
                m[perm[j]] as i128 * p_mat[perm[j]][perm[i]] as i128
                    == p_mat[i][j] as i128 * kvec[perm[i]]
            })
        })
    })
}

/// First eigenmatrix of the full N-class cyclotomic scheme candidate:
/// (N+1) x (N+1), row 0 the valencies, P[i][j] = eta_{(N - i + j - 1) mod N}.
pub fn cyclotomic_eigenmatrix(spectrum: &PeriodSpectrum) -> Result<Vec<Vec<i64>>> {
    let eta = spectrum.eta.as_ref().ok_or(Error::NotRational)?;
    let n = spectrum.n as usize;
    let k = spectrum.k as i64;
    let q = spectrum.field.q as i64;
    let mut p = vec![vec![0i64; n + 1]; n + 1];
    p[0][0] = 1;
    for j in 1..=n {
        p[0][j] = k;
    }
    for i in 1..=n {
        p[i][0] = 1;
        for j in 1..=n {
            p[i][j] = eta[(n + j - 1 - i) % n];
        }
    }
    assert_eq!(p[0].iter().sum::<i64>(), q);
    for row in &p[1..] {
        assert_eq!(row.iter().sum::<i64>(), 0);
    }
    Ok(p)
}

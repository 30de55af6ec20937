//! Gauss periods of order N in GF(q), q = p^f, N | q - 1, computed exactly.
//!
//! With gamma the fixed generator, the cyclotomic classes are
//! C_a = gamma^a <gamma^N> and the period eta_a = sum_{x in C_a} psi(x),
//! psi the canonical additive character. Since psi(x) depends only on the
//! absolute trace, eta_a = sum_j n_j(a) zeta_p^j where
//! n_j(a) = #{i = a mod N : Tr(gamma^i) = j}. The powers zeta_p, ...,
//! zeta_p^{p-1} are linearly independent over Q, so eta_a is rational iff
//! n_1(a) = ... = n_{p-1}(a), and then eta_a = n_0(a) - n_1(a). Everything
//! below is integer bookkeeping on those histograms; no floating point.

use std::collections::BTreeMap;

use crate::arith::{factorize, gcd, mult_order};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Trace histogram of one cyclotomic class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Histogram {
    /// count[j] = n_j(a) for j in 0..p.
    Dense(Vec<u32>),
    /// Nonzero counts only, keyed by trace value.
    Sparse(BTreeMap<u64, u32>),
}

impl Histogram {
    pub fn count(&self, j: u64) -> u32 {
        match self {
            Histogram::Dense(v) => v[j as usize],
            Histogram::Sparse(m) => m.get(&j).copied().unwrap_or(0),
        }
    }

    /// Some((n_0, c)) when n_1 = ... = n_{p-1} = c, else None.
    fn flat(&self, p: u64) -> Option<(u32, u32)> {
        match self {
            Histogram::Dense(v) => {
                let c = v[1];
                v[2..].iter().all(|&x| x == c).then_some((v[0], c))
            }
            Histogram::Sparse(m) => {
                let n0 = m.get(&0).copied().unwrap_or(0);
                let mut nz = m.iter().filter(|&(&j, _)| j != 0);
                match nz.next() {
                    None => Some((n0, 0)),
                    Some((_, &c)) => (nz.all(|(_, &x)| x == c)
                        && m.iter().filter(|&(&j, _)| j != 0).count() as u64 == p - 1)
                        .then_some((n0, c)),
                }
            }
        }
    }
}

/// The exact period spectrum of order n over one field presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSpectrum {
    pub field: FieldSpec,
    pub n: u64,
    /// Class size k = (q - 1)/n.
    pub k: u64,
    /// hist[a] = trace histogram of C_a.
    pub hist: Vec<Histogram>,
    pub rational: bool,
    /// eta[a], present iff the spectrum is rational.
    pub eta: Option<Vec<i64>>,
}

/// Compute the spectrum for one (p, f, n) with the canonical presentation.
pub fn gauss_periods(p: u64, f: u32, n: u64) -> Result<PeriodSpectrum> {
    let spec = FieldSpec::new(p, f)?;
    gauss_periods_for(&spec, n)
}

pub fn gauss_periods_for(spec: &FieldSpec, n: u64) -> Result<PeriodSpectrum> {
    Ok(gauss_periods_many(spec, &[n])?.pop().unwrap())
}

/// One pass over the trace stream serving every order in `ns` at once,
/// with rolling residue counters instead of divisions.
pub fn gauss_periods_many(spec: &FieldSpec, ns: &[u64]) -> Result<Vec<PeriodSpectrum>> {
    let q = spec.q;
    let p = spec.p;
    for &n in ns {
        if n == 0 || (q - 1) % n != 0 {
            return Err(Error::NotDivisor {
                divisor: n,
                dividend: q - 1,
            });
        }
    }
    let steps = (q - 1) as usize;
    let dense = p <= 1024;
    let mut residue = vec![0u64; ns.len()];
    let mut acc_dense: Vec<Vec<u32>> = Vec::new();
    let mut acc_sparse: Vec<Vec<BTreeMap<u64, u32>>> = Vec::new();
    if dense {
        acc_dense = ns.iter().map(|&n| vec![0u32; (n * p) as usize]).collect();
        for tr in spec.trace_stream().take(steps) {
            for (idx, &n) in ns.iter().enumerate() {
                acc_dense[idx][(residue[idx] * p + tr) as usize] += 1;
                residue[idx] += 1;
                if residue[idx] == n {
                    residue[idx] = 0;
                }
            }
        }
    } else {
        acc_sparse = ns
            .iter()
            .map(|&n| vec![BTreeMap::new(); n as usize])
            .collect();
        for tr in spec.trace_stream().take(steps) {
            for (idx, &n) in ns.iter().enumerate() {
                *acc_sparse[idx][residue[idx] as usize].entry(tr).or_insert(0) += 1;
                residue[idx] += 1;
                if residue[idx] == n {
                    residue[idx] = 0;
                }
            }
        }
    }

    let mut out = Vec::with_capacity(ns.len());
    for (idx, &n) in ns.iter().enumerate() {
        let hist: Vec<Histogram> = if dense {
            acc_dense[idx]
                .chunks(p as usize)
                .map(|c| Histogram::Dense(c.to_vec()))
                .collect()
        } else {
            std::mem::take(&mut acc_sparse[idx])
                .into_iter()
                .map(Histogram::Sparse)
                .collect()
        };
        let k = (q - 1) / n;
        let zero_total: u64 = hist.iter().map(|h| h.count(0) as u64).sum();
        assert_eq!(zero_total, q / p - 1, "trace-zero census broke");
        let mut eta = Vec::with_capacity(n as usize);
        let mut rational = true;
        for h in &hist {
            match h.flat(p) {
                Some((n0, c)) => eta.push(n0 as i64 - c as i64),
                None => {
                    rational = false;
                    break;
                }
            }
        }
        let eta = if rational {
            let sum: i128 = eta.iter().map(|&e| e as i128).sum();
            assert_eq!(sum, -1, "sum of periods must be -1");
            let sq: i128 = eta.iter().map(|&e| (e as i128) * (e as i128)).sum();
            assert_eq!(sq, (q - k) as i128, "sum of squared periods must be q - k");
            let pm = p % n;
            for a in 0..n {
                assert_eq!(
                    eta[(pm * a % n) as usize],
                    eta[a as usize],
                    "Frobenius must fix each period"
                );
            }
            Some(eta)
        } else {
            None
        };
        out.push(PeriodSpectrum {
            field: spec.clone(),
            n,
            k,
            hist,
            rational,
            eta,
        });
    }
    Ok(out)
}

/// Spread parameters of a three-valued spectrum: with sorted values
/// a1 < a2 < a3, t = gcd(a2 - a1, a3 - a2), u = (a2 - a1)/t,
/// v = (a3 - a2)/t, r = |I_1|, s = |I_3|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadParams {
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub r: u64,
    pub s: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueDecomposition {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    /// Distinct values, ascending.
    pub values: Vec<i64>,
    /// index_sets[i] = { a : eta_a = values[i] }, each sorted.
    pub index_sets: Vec<Vec<u64>>,
    pub multiplicities: Vec<u64>,
    pub three_valued: bool,
    /// Arithmetic progression, i.e. u = v = 1; false unless three-valued.
    pub ap: bool,
    pub params: Option<SpreadParams>,
}

pub fn decompose(sp: &PeriodSpectrum) -> Result<ValueDecomposition> {
    let eta = sp.eta.as_ref().ok_or(Error::NotRational)?;
    let mut values: Vec<i64> = eta.clone();
    values.sort_unstable();
    values.dedup();
    let index_sets: Vec<Vec<u64>> = values
        .iter()
        .map(|&v| {
            (0..sp.n)
                .filter(|&a| eta[a as usize] == v)
                .collect()
        })
        .collect();
    let multiplicities: Vec<u64> = index_sets.iter().map(|s| s.len() as u64).collect();
    let three_valued = values.len() == 3;
    let params = three_valued.then(|| {
        let d1 = (values[1] - values[0]) as u64;
        let d2 = (values[2] - values[1]) as u64;
        let t = gcd(d1, d2);
        SpreadParams {
            t,
            u: d1 / t,
            v: d2 / t,
            r: multiplicities[0],
            s: multiplicities[2],
        }
    });
    let ap = params.map_or(false, |pr| pr.u == 1 && pr.v == 1);
    Ok(ValueDecomposition {
        q: sp.field.q,
        n: sp.n,
        k: sp.k,
        values,
        index_sets,
        multiplicities,
        three_valued,
        ap,
        params,
    })
}

/// Smallest base-p digit sum s_p(j k') over j = 1..n, k' = (p^{f'} - 1)/n,
/// f' = ord_n(p). The f' digits of j k' are the repeating digits of j/n, so
/// they come from long division without big integers, and j -> pj mod n
/// cyclically shifts them, letting whole orbits share one evaluation.
pub(crate) fn min_digit_sum(p: u64, n: u64) -> u64 {
    let fp = mult_order(p % n, n);
    let mut visited = vec![false; n as usize];
    let mut best = u64::MAX;
    for j0 in 1..n {
        if visited[j0 as usize] {
            continue;
        }
        let mut ds = 0u64;
        let mut r = j0;
        for _ in 0..fp {
            ds += r * p / n;
            r = r * p % n;
        }
        best = best.min(ds);
        let mut j = j0;
        while !visited[j as usize] {
            visited[j as usize] = true;
            j = j * p % n;
        }
    }
    best
}

/// The exact power of p dividing the Gauss sums of order n over GF(p^f):
/// returns (theta, t = p^theta) with theta = floor(d min_ds / (p - 1)),
/// d = f / ord_n(p).
pub fn stickelberger_t(p: u64, f: u32, n: u64) -> Result<(u32, u64)> {
    if n < 2 {
        return Err(Error::PreconditionFailed(format!(
            "stickelberger_t needs n >= 2, got {n}"
        )));
    }
    if gcd(p, n) != 1 {
        return Err(Error::NotCoprime { a: p, b: n });
    }
    let fp = mult_order(p % n, n);
    if f as u64 % fp != 0 {
        return Err(Error::PreconditionFailed(format!(
            "ord_{n}({p}) = {fp} does not divide f = {f}"
        )));
    }
    let d = f as u64 / fp;
    let theta = (d * min_digit_sum(p, n) / (p - 1)) as u32;
    let t = p.checked_pow(theta).ok_or(Error::Overflow("p^theta"))?;
    Ok((theta, t))
}

/// m = gcd{ord_d(p) : d | n, d > 1}; every index set of a rational spectrum
/// is a union of orbits of a -> pa mod n, which constrains its size mod m.
/// Returns 0 when n = 1 (no constraint).
pub fn m_value(p: u64, n: u64) -> u64 {
    debug_assert_eq!(gcd(p, n), 1);
    factorize(n)
        .iter()
        .fold(0, |g, &(l, _)| gcd(g, mult_order(p % l, l)))
}

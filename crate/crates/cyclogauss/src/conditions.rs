//! Arithmetic conditions on three-valued spectra: exact index-set sizes from
//! the moment system, necessary congruence and norm identities on the spread
//! parameters (t, u, v, r, s), the two-equation system on the coefficient
//! counts t_x of the squared period vector, and a sufficiency engine that
//! predicts three-valued-ness from (p, f, N) alone, without a trace pass.
//!
//! Every rational spectrum satisfies sum eta = -1 and sum eta^2 = q - k, so
//! for three values a1 < a2 < a3 the sizes |I_i| solve a Vandermonde system
//! with the unique solution implemented in sizes_three_valued.

use std::collections::BTreeMap;

use crate::arith::{gcd, is_prime, isqrt_u128};
use crate::cyclotomy::{m_value, stickelberger_t, SpreadParams};
use crate::error::{Error, Result};

/// Unique candidate sizes (|I_1|, |I_2|, |I_3|) for values a1 < a2 < a3.
/// A zero entry means the value cannot actually occur.
pub fn sizes_three_valued(q: u64, n: u64, values: [i64; 3]) -> Result<[u64; 3]> {
    let [a1, a2, a3] = values.map(|v| v as i128);
    if !(a1 < a2 && a2 < a3) {
        return Err(Error::PreconditionFailed(
            "values must be strictly increasing".into(),
        ));
    }
    if n == 0 || (q - 1) % n != 0 {
        return Err(Error::NotDivisor {
            divisor: n,
            dividend: q - 1,
        });
    }
    let k = ((q - 1) / n) as i128;
    let qi = q as i128;
    let quot = |num: i128, den: i128, name: &'static str| -> Result<u64> {
        if num % den != 0 {
            return Err(Error::NonIntegral { quantity: name });
        }
        let v = num / den;
        if v < 0 {
            return Err(Error::NoDecomposition);
        }
        Ok(v as u64)
    };
    let m1 = quot(
        -(a2 * a3 * (qi - 1) + k * (qi - k + a2 + a3)),
        k * (a1 - a2) * (a3 - a1),
        "|I_1|",
    )?;
    let m2 = quot(
        -(a1 * a3 * (qi - 1) + k * (qi - k + a1 + a3)),
        k * (a1 - a2) * (a2 - a3),
        "|I_2|",
    )?;
    let m3 = quot(
        -(a1 * a2 * (qi - 1) + k * (qi - k + a1 + a2)),
        k * (a2 - a3) * (a3 - a1),
        "|I_3|",
    )?;
    debug_assert_eq!(m1 + m2 + m3, n);
    Ok([m1, m2, m3])
}

/// Sizes for an arithmetic-progression spectrum a2 - t, a2, a2 + t:
/// returns (|I_1|, |I_3|, |I_2|, |I_1| - |I_3|).
pub fn sizes_ap(alpha2: i64, t: u64, q: u64, n: u64) -> Result<(u64, u64, u64, i64)> {
    if n == 0 || (q - 1) % n != 0 {
        return Err(Error::NotDivisor {
            divisor: n,
            dividend: q - 1,
        });
    }
    let a2 = alpha2 as i128;
    let t = t as i128;
    let k = ((q - 1) / n) as i128;
    let n = n as i128;
    let quot = |num: i128, den: i128, name: &'static str| -> Result<i128> {
        if num % den != 0 {
            return Err(Error::NonIntegral { quantity: name });
        }
        Ok(num / den)
    };
    let i1 = quot(n * (a2 * a2 + a2 * t + k) + 2 * a2 - k + t + 1, 2 * t * t, "|I_1|")?;
    let i3 = quot(n * (a2 * a2 - a2 * t + k) + 2 * a2 - k - t + 1, 2 * t * t, "|I_3|")?;
    let i2 = quot(n * (t * t - a2 * a2 - k) - 1 - 2 * a2 + k, t * t, "|I_2|")?;
    let diff = quot(a2 * n + 1, t, "|I_1| - |I_3|")?;
    if i1 < 0 || i2 < 0 || i3 < 0 {
        return Err(Error::NoDecomposition);
    }
    debug_assert_eq!(i1 - i3, diff);
    debug_assert_eq!(i1 + i2 + i3, n);
    Ok((i1 as u64, i3 as u64, i2 as u64, diff as i64))
}

/// Necessary conditions on the spread parameters of a three-valued spectrum:
/// (i)  t(-ur + vs) = -1 (mod N),
/// (ii) (N-1)q + t^2(-ur + vs)^2 = N t^2 (u^2 r + v^2 s).
pub fn check_necessary(q: u64, n: u64, pr: &SpreadParams) -> (bool, bool) {
    let (t, u, v, r, s) = (
        pr.t as i128,
        pr.u as i128,
        pr.v as i128,
        pr.r as i128,
        pr.s as i128,
    );
    let ni = n as i128;
    let g = v * s - u * r;
    let cond = (|| {
        let tg = t.checked_mul(g)?;
        let i = (tg + 1).rem_euclid(ni) == 0;
        let lhs = (ni - 1)
            .checked_mul(q as i128)?
            .checked_add(tg.checked_mul(tg)?)?;
        let rhs = ni
            .checked_mul(t.checked_mul(t)?)?
            .checked_mul(u * u * r + v * v * s)?;
        Some((i, lhs == rhs))
    })();
    cond.unwrap_or((false, false))
}

const TX_NODE_CAP: u64 = 10_000_000;

/// All nonnegative solutions {t_x} (x a nonzero integer) of
///   sum x(x-1) t_x + sum x(x+1) t_{-x} = u(u+1) r + v(v-1) s,
///   sum x(x+1) t_x + sum x(x-1) t_{-x} = u(u-1) r + v(v+1) s,
/// with sums over x >= 1. Zero entries are omitted from the maps.
pub fn enumerate_tx(u: u64, v: u64, r: u64, s: u64) -> Result<Vec<BTreeMap<i64, u64>>> {
    let term = |a: u64, b: u64, c: u64| -> Result<u64> {
        a.checked_mul(b)
            .and_then(|x| x.checked_mul(c))
            .ok_or(Error::Overflow("t_x system right-hand side"))
    };
    let r1 = term(u, u + 1, r)? + term(v, v - 1, s)?;
    let r2 = term(u, u - 1, r)? + term(v, v + 1, s)?;
    let xmax = {
        let mut x = 2u64;
        while x * (x - 1) <= r1.max(r2) {
            x += 1;
        }
        (x - 1) as i64
    };
    // Slots with both coefficients >= 2; the pair (t_1, t_{-1}) closes the
    // remainder deterministically since their coefficient matrix is
    // [[0, 2], [2, 0]].
    let mut slots: Vec<(i64, u64, u64)> = Vec::new();
    for x in (2..=xmax).rev() {
        let (lo, hi) = ((x * (x - 1)) as u64, (x * (x + 1)) as u64);
        slots.push((x, lo, hi));
    }
    for x in (2..=xmax).rev() {
        let (lo, hi) = ((x * (x - 1)) as u64, (x * (x + 1)) as u64);
        slots.push((-x, hi, lo));
    }
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    let mut nodes = 0u64;
    recurse_tx(&slots, r1, r2, &mut cur, &mut out, &mut nodes)?;
    Ok(out)
}

fn recurse_tx(
    slots: &[(i64, u64, u64)],
    rem1: u64,
    rem2: u64,
    cur: &mut BTreeMap<i64, u64>,
    out: &mut Vec<BTreeMap<i64, u64>>,
    nodes: &mut u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > TX_NODE_CAP {
        return Err(Error::PreconditionFailed(
            "t_x enumeration exceeded the node budget".into(),
        ));
    }
    let Some(&(key, c1, c2)) = slots.first() else {
        if rem1 % 2 == 0 && rem2 % 2 == 0 {
            let mut sol = cur.clone();
            if rem2 > 0 {
                sol.insert(1, rem2 / 2);
            }
            if rem1 > 0 {
                sol.insert(-1, rem1 / 2);
            }
            out.push(sol);
        }
        return Ok(());
    };
    let maxt = (rem1 / c1).min(rem2 / c2);
    for t in 0..=maxt {
        if t > 0 {
            cur.insert(key, t);
        }
        recurse_tx(&slots[1..], rem1 - t * c1, rem2 - t * c2, cur, out, nodes)?;
    }
    cur.remove(&key);
    Ok(())
}

/// Keep solutions in which every t_x is 0 mod m except at most one, which
/// must be 1 mod m (the class of b = 0 under b -> pb). m < 2 keeps all.
pub fn filter_tx_mod_m(solutions: &[BTreeMap<i64, u64>], m: u64) -> Vec<BTreeMap<i64, u64>> {
    if m < 2 {
        return solutions.to_vec();
    }
    solutions
        .iter()
        .filter(|sol| {
            let nonzero: Vec<u64> = sol.values().map(|&t| t % m).filter(|&x| x != 0).collect();
            nonzero.is_empty() || (nonzero.len() == 1 && nonzero[0] == 1)
        })
        .cloned()
        .collect()
}

/// Which pinned parameter shape certified three-valued-ness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SufficiencyCase {
    /// u = v = r = 1, s solved.
    UvrOne,
    /// u = v = s = 1, r solved.
    UvsOne,
    /// u = s = 1, v(v+1) < 2m, r solved.
    UsOneSmallV,
    /// u = s = 1, v(v+1) = 2m, r solved, r + v^2 < N.
    UsOneBoundaryV,
    /// v = r = 1, u(u+1) < 2m, s solved.
    VrOneSmallU,
    /// v = r = 1, u(u+1) = 2m, s solved, s + u^2 < N.
    VrOneBoundaryU,
    /// u = v = 1, s = m, r solved.
    UvOneSEqualsM,
    /// u = v = 1, r = m, s solved.
    UvOneREqualsM,
}

impl SufficiencyCase {
    pub fn name(&self) -> &'static str {
        match self {
            SufficiencyCase::UvrOne => "u=v=r=1",
            SufficiencyCase::UvsOne => "u=v=s=1",
            SufficiencyCase::UsOneSmallV => "u=s=1, small v",
            SufficiencyCase::UsOneBoundaryV => "u=s=1, v(v+1)=2m",
            SufficiencyCase::VrOneSmallU => "v=r=1, small u",
            SufficiencyCase::VrOneBoundaryU => "v=r=1, u(u+1)=2m",
            SufficiencyCase::UvOneSEqualsM => "u=v=1, s=m",
            SufficiencyCase::UvOneREqualsM => "u=v=1, r=m",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub p: u64,
    pub f: u32,
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub theta: u32,
    pub t: u64,
    pub m: u64,
    /// The parameter set that fired, if any.
    pub params: Option<SpreadParams>,
    pub nec_i: bool,
    pub nec_ii: bool,
    pub sufficiency_case: Option<SufficiencyCase>,
    /// Middle value y = (-t(vs - ur) - 1)/N of the predicted spectrum.
    pub y: Option<i64>,
    /// m-filtered solutions of the t_x system for the fired parameters.
    pub tx_solutions: Vec<BTreeMap<i64, u64>>,
    /// One sorted value set {y} union {y + t x} per filtered solution.
    pub candidate_values: Vec<Vec<i64>>,
    pub predicts_three_valued: bool,
}

/// Integer roots s >= 1 of the quadratic form of condition (ii) in s, for
/// fixed (u, v, r), sorted ascending. Overflow skips the candidate silently.
fn solve_s(q: u64, n: u64, t: u64, u: u64, v: u64, r: u64) -> Vec<u64> {
    let (qi, ni, t, u, v, r) = (
        q as i128,
        n as i128,
        t as i128,
        u as i128,
        v as i128,
        r as i128,
    );
    let roots = (|| {
        let t2 = t.checked_mul(t)?;
        let a = t2.checked_mul(v * v)?;
        let b = t2.checked_mul((2 * u * v).checked_mul(r)?.checked_add(ni * v * v)?)?;
        let c = t2
            .checked_mul(u * u)?
            .checked_mul(r * r)?
            .checked_add((ni - 1).checked_mul(qi)?)?
            .checked_sub(ni.checked_mul(t2)?.checked_mul(u * u)?.checked_mul(r)?)?;
        // a s^2 - b s + c = 0
        let disc = b.checked_mul(b)?.checked_sub(4i128.checked_mul(a)?.checked_mul(c)?)?;
        if disc < 0 {
            return Some(vec![]);
        }
        let sq = isqrt_u128(disc as u128) as i128;
        if sq * sq != disc {
            return Some(vec![]);
        }
        let mut out = Vec::new();
        for root in [(b - sq, 2 * a), (b + sq, 2 * a)] {
            if root.0 % root.1 == 0 {
                let s = root.0 / root.1;
                if s >= 1 && s <= u64::MAX as i128 {
                    out.push(s as u64);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    })();
    roots.unwrap_or_default()
}

/// Integer roots r >= 1 for fixed (u, v, s), via the (u, r) <-> (v, s)
/// symmetry of condition (ii).
fn solve_r(q: u64, n: u64, t: u64, u: u64, v: u64, s: u64) -> Vec<u64> {
    solve_s(q, n, t, v, u, s)
}

/// Every hypothesis common to the sufficiency cases: positive sizes, (i) and
/// (ii), and the orbit-size congruence (exactly one of |I_1|, |I_2|, |I_3|
/// is 1 mod m, the others 0).
fn admissible(q: u64, n: u64, m: u64, pr: &SpreadParams) -> bool {
    if pr.r == 0 || pr.s == 0 || pr.r + pr.s >= n {
        return false;
    }
    if gcd(pr.u, pr.v) != 1 {
        return false;
    }
    let (i, ii) = check_necessary(q, n, pr);
    if !(i && ii) {
        return false;
    }
    let sizes = [pr.r, n - pr.r - pr.s, pr.s];
    let ones = sizes.iter().filter(|&&x| x % m == 1).count();
    let zeros = sizes.iter().filter(|&&x| x % m == 0).count();
    ones == 1 && zeros == 2
}

/// Decide three-valued-ness of the (p, f, N) spectrum from arithmetic alone.
pub fn check_sufficient(p: u64, f: u32, n: u64) -> Result<ConditionReport> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    let q = p.checked_pow(f).ok_or(Error::Overflow("p^f"))?;
    if n < 2 || (q - 1) % n != 0 {
        return Err(Error::NotDivisor {
            divisor: n,
            dividend: q.wrapping_sub(1),
        });
    }
    let k = (q - 1) / n;
    let (theta, t) = stickelberger_t(p, f, n)?;
    let m = m_value(p, n);
    let mut report = ConditionReport {
        p,
        f,
        q,
        n,
        k,
        theta,
        t,
        m,
        params: None,
        nec_i: false,
        nec_ii: false,
        sufficiency_case: None,
        y: None,
        tx_solutions: Vec::new(),
        candidate_values: Vec::new(),
        predicts_three_valued: false,
    };
    if m < 2 {
        return Ok(report);
    }

    let fire = |case: SufficiencyCase, pr: SpreadParams, report: &mut ConditionReport| -> Result<()> {
        let g = pr.v as i128 * pr.s as i128 - pr.u as i128 * pr.r as i128;
        let y = (-(pr.t as i128) * g - 1) / n as i128;
        let solutions = filter_tx_mod_m(&enumerate_tx(pr.u, pr.v, pr.r, pr.s)?, m);
        let candidates = solutions
            .iter()
            .map(|sol| {
                let mut vals: Vec<i64> = sol
                    .keys()
                    .map(|&x| (y + pr.t as i128 * x as i128) as i64)
                    .chain(std::iter::once(y as i64))
                    .collect();
                vals.sort_unstable();
                vals.dedup();
                vals
            })
            .collect();
        report.params = Some(pr);
        report.nec_i = true;
        report.nec_ii = true;
        report.sufficiency_case = Some(case);
        report.y = Some(y as i64);
        report.tx_solutions = solutions;
        report.candidate_values = candidates;
        report.predicts_three_valued = true;
        Ok(())
    };

    // Boundary parameter from v(v+1) = 2m, when it is an integer.
    let boundary = {
        let w = (isqrt_u128(8 * m as u128 + 1) as u64 - 1) / 2;
        (w * (w + 1) == 2 * m).then_some(w)
    };

    // Case order is priority order; the first admissible candidate wins.
    // 1. u = v = r = 1.
    for s in solve_s(q, n, t, 1, 1, 1) {
        let pr = SpreadParams { t, u: 1, v: 1, r: 1, s };
        if admissible(q, n, m, &pr) {
            fire(SufficiencyCase::UvrOne, pr, &mut report)?;
            return Ok(report);
        }
    }
    // 2. u = v = s = 1.
    for r in solve_r(q, n, t, 1, 1, 1) {
        let pr = SpreadParams { t, u: 1, v: 1, r, s: 1 };
        if admissible(q, n, m, &pr) {
            fire(SufficiencyCase::UvsOne, pr, &mut report)?;
            return Ok(report);
        }
    }
    // 3. u = s = 1, small v.
    let mut v = 2;
    while v * (v + 1) < 2 * m {
        for r in solve_r(q, n, t, 1, v, 1) {
            let pr = SpreadParams { t, u: 1, v, r, s: 1 };
            if admissible(q, n, m, &pr) {
                fire(SufficiencyCase::UsOneSmallV, pr, &mut report)?;
                return Ok(report);
            }
        }
        v += 1;
    }
    // 4. u = s = 1, v(v+1) = 2m, r + v^2 < N.
    if let Some(v) = boundary {
        for r in solve_r(q, n, t, 1, v, 1) {
            let pr = SpreadParams { t, u: 1, v, r, s: 1 };
            if r + v * v < n && admissible(q, n, m, &pr) {
                fire(SufficiencyCase::UsOneBoundaryV, pr, &mut report)?;
                return Ok(report);
            }
        }
    }
    // 5. v = r = 1, small u.
    let mut u = 2;
    while u * (u + 1) < 2 * m {
        for s in solve_s(q, n, t, u, 1, 1) {
            let pr = SpreadParams { t, u, v: 1, r: 1, s };
            if admissible(q, n, m, &pr) {
                fire(SufficiencyCase::VrOneSmallU, pr, &mut report)?;
                return Ok(report);
            }
        }
        u += 1;
    }
    // 6. v = r = 1, u(u+1) = 2m, s + u^2 < N.
    if let Some(u) = boundary {
        for s in solve_s(q, n, t, u, 1, 1) {
            let pr = SpreadParams { t, u, v: 1, r: 1, s };
            if s + u * u < n && admissible(q, n, m, &pr) {
                fire(SufficiencyCase::VrOneBoundaryU, pr, &mut report)?;
                return Ok(report);
            }
        }
    }
    // 7. u = v = 1, s = m.
    for r in solve_r(q, n, t, 1, 1, m) {
        let pr = SpreadParams { t, u: 1, v: 1, r, s: m };
        if admissible(q, n, m, &pr) {
            fire(SufficiencyCase::UvOneSEqualsM, pr, &mut report)?;
            return Ok(report);
        }
    }
    // 8. u = v = 1, r = m.
    for s in solve_s(q, n, t, 1, 1, m) {
        let pr = SpreadParams { t, u: 1, v: 1, r: m, s };
        if admissible(q, n, m, &pr) {
            fire(SufficiencyCase::UvOneREqualsM, pr, &mut report)?;
            return Ok(report);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::{decompose, gauss_periods};

    #[test]
    fn sizes_pinned() {
        assert_eq!(sizes_three_valued(64, 7, [-3, 1, 5]).unwrap(), [3, 3, 1]);
        assert_eq!(
            sizes_three_valued(2048, 89, [-9, -1, 7]).unwrap(),
            [11, 56, 22]
        );
        assert_eq!(
            sizes_three_valued(823543, 29, [-414, -71, 272]).unwrap(),
            [1, 21, 7]
        );
        assert_eq!(
            sizes_three_valued(1771561, 777, [-19, 102, 344]).unwrap(),
            [661, 113, 3]
        );
        // One final value off by one: the moment system has no integer solution.
        assert!(matches!(
            sizes_three_valued(1771561, 777, [-19, 102, 343]),
            Err(Error::NonIntegral { .. })
        ));
        assert_eq!(sizes_ap(1, 4, 64, 7).unwrap(), (3, 1, 3, 2));
        assert_eq!(sizes_ap(-71, 343, 823543, 29).unwrap(), (1, 7, 21, -6));
        assert_eq!(sizes_ap(2, 9, 729, 13).unwrap(), (6, 3, 4, 3));
    }

    #[test]
    fn sizes_match_observed_spectra() {
        for (p, f, n) in [
            (2u64, 6u32, 7u64),
            (3, 6, 13),
            (2, 11, 89),
            (7, 7, 29),
            (11, 3, 19),
            (11, 6, 777),
        ] {
            let d = decompose(&gauss_periods(p, f, n).unwrap()).unwrap();
            let vals = [d.values[0], d.values[1], d.values[2]];
            let sizes = sizes_three_valued(d.q, n, vals).unwrap();
            assert_eq!(sizes.to_vec(), d.multiplicities, "({p},{f},{n})");
            if d.ap {
                let pr = d.params.unwrap();
                let (i1, i3, i2, diff) = sizes_ap(d.values[1], pr.t, d.q, n).unwrap();
                assert_eq!([i1, i2, i3], [sizes[0], sizes[1], sizes[2]]);
                assert_eq!(diff, i1 as i64 - i3 as i64);
            }
        }
    }

    #[test]
    fn necessary_conditions() {
        let pr = SpreadParams { t: 11, u: 1, v: 1, r: 10, s: 3 };
        assert_eq!(check_necessary(1331, 19, &pr), (true, true));
        let swapped = SpreadParams { t: 11, u: 1, v: 1, r: 3, s: 10 };
        assert_eq!(check_necessary(1331, 19, &swapped).0, false);
        for (p, f, n) in [(2u64, 6u32, 7u64), (3, 6, 13), (2, 11, 89), (11, 6, 777)] {
            let d = decompose(&gauss_periods(p, f, n).unwrap()).unwrap();
            let pr = d.params.unwrap();
            assert_eq!(check_necessary(d.q, n, &pr), (true, true), "({p},{f},{n})");
        }
    }

    /// Exhaustive mixed-radix odometer over all per-key-bounded assignments,
    /// as an independent oracle for the pruned enumeration. Both equation
    /// coefficients come from the signed formulas c1 = x(x-1), c2 = x(x+1).
    fn odometer_tx(u: u64, v: u64, r: u64, s: u64) -> Vec<BTreeMap<i64, u64>> {
        let r1 = u * (u + 1) * r + v * (v - 1) * s;
        let r2 = u * (u - 1) * r + v * (v + 1) * s;
        let mut xmax = 1i64;
        while (xmax + 1) * xmax <= r1.max(r2) as i64 {
            xmax += 1;
        }
        let keys: Vec<(i64, u64, u64)> = (1..=xmax)
            .flat_map(|x| [x, -x])
            .map(|x| ((x), (x * (x - 1)) as u64, (x * (x + 1)) as u64))
            .collect();
        let bounds: Vec<u64> = keys
            .iter()
            .map(|&(_, c1, c2)| {
                let b1 = if c1 > 0 { r1 / c1 } else { u64::MAX };
                let b2 = if c2 > 0 { r2 / c2 } else { u64::MAX };
                b1.min(b2)
            })
            .collect();
        let mut state = vec![0u64; keys.len()];
        let mut out = Vec::new();
        loop {
            let e1: u64 = keys.iter().zip(&state).map(|(&(_, c1, _), &t)| t * c1).sum();
            let e2: u64 = keys.iter().zip(&state).map(|(&(_, _, c2), &t)| t * c2).sum();
            if e1 == r1 && e2 == r2 {
                let sol: BTreeMap<i64, u64> = keys
                    .iter()
                    .zip(&state)
                    .filter(|&(_, &t)| t > 0)
                    .map(|(&(x, _, _), &t)| (x, t))
                    .collect();
                out.push(sol);
            }
            let mut i = 0;
            loop {
                if i == state.len() {
                    return out;
                }
                if state[i] < bounds[i] {
                    state[i] += 1;
                    break;
                }
                state[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn tx_enumeration_matches_odometer() {
        for (u, v, r, s) in [(1u64, 1u64, 3u64, 1u64), (1, 2, 5, 1), (1, 1, 1, 7), (2, 1, 4, 2)] {
            let mut got = enumerate_tx(u, v, r, s).unwrap();
            let mut want = odometer_tx(u, v, r, s);
            got.sort();
            want.sort();
            assert_eq!(got, want, "({u},{v},{r},{s})");
        }
    }

    #[test]
    fn tx_pinned_solutions() {
        let sols = enumerate_tx(1, 1, 3, 1).unwrap();
        assert_eq!(sols.len(), 2);
        let a: BTreeMap<i64, u64> = [(1, 1), (-1, 3)].into();
        let b: BTreeMap<i64, u64> = [(-2, 1)].into();
        assert!(sols.contains(&a) && sols.contains(&b));

        let sols = enumerate_tx(1, 2, 5, 1).unwrap();
        assert_eq!(sols.len(), 5);
        let kept = filter_tx_mod_m(&sols, 5);
        assert_eq!(kept.len(), 2);
        let a: BTreeMap<i64, u64> = [(2, 1), (-1, 5)].into();
        let b: BTreeMap<i64, u64> = [(-3, 1)].into();
        assert!(kept.contains(&a) && kept.contains(&b));
        assert_eq!(filter_tx_mod_m(&sols, 4), vec![b]);
        assert_eq!(filter_tx_mod_m(&sols, 1).len(), 5);
    }

    #[test]
    fn sufficiency_fires_on_known_cases() {
        let rep = check_sufficient(7, 7, 29).unwrap();
        assert_eq!(rep.sufficiency_case, Some(SufficiencyCase::UvrOne));
        let pr = rep.params.unwrap();
        assert_eq!((pr.t, pr.u, pr.v, pr.r, pr.s), (343, 1, 1, 1, 7));
        assert_eq!(rep.y, Some(-71));
        assert_eq!(rep.tx_solutions, vec![[(1, 7), (-1, 1)].into()]);
        assert_eq!(rep.candidate_values, vec![vec![-414, -71, 272]]);
        assert!(rep.predicts_three_valued);

        let rep = check_sufficient(2, 6, 7).unwrap();
        assert_eq!(rep.sufficiency_case, Some(SufficiencyCase::UvsOne));
        let pr = rep.params.unwrap();
        assert_eq!((pr.t, pr.u, pr.v, pr.r, pr.s), (4, 1, 1, 3, 1));
        assert_eq!(rep.y, Some(1));
        assert!(rep.candidate_values.contains(&vec![-3, 1, 5]));

        let rep = check_sufficient(3, 6, 13).unwrap();
        assert_eq!(rep.sufficiency_case, Some(SufficiencyCase::UvOneSEqualsM));
        let pr = rep.params.unwrap();
        assert_eq!((pr.t, pr.u, pr.v, pr.r, pr.s), (9, 1, 1, 6, 3));

        let rep = check_sufficient(2, 36, 247).unwrap();
        assert_eq!(rep.sufficiency_case, Some(SufficiencyCase::UvrOne));
        let pr = rep.params.unwrap();
        assert_eq!((pr.t, pr.u, pr.v, pr.r, pr.s), (32768, 1, 1, 1, 126));
        assert_eq!(rep.y, Some(-16583));
        assert_eq!(rep.tx_solutions, vec![[(1, 126), (-1, 1)].into()]);
        assert_eq!(
            rep.candidate_values,
            vec![vec![-49351, -16583, 16185]]
        );
    }

    #[test]
    fn sufficiency_stays_silent_on_two_valued() {
        let rep = check_sufficient(2, 4, 5).unwrap();
        assert_eq!(rep.sufficiency_case, None);
        assert!(!rep.predicts_three_valued);
        assert_eq!(rep.m, 4);
        // Semiprimitive: ord_9(2) = 6 is even, m = 2.
        let rep = check_sufficient(2, 6, 9).unwrap();
        assert!(!rep.predicts_three_valued);
    }
}

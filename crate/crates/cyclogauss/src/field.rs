//! Finite-field presentation GF(q) = GF(p)[x]/(g), q = p^f, with g the
//! lexicographically least monic primitive polynomial (coefficients compared
//! most-significant first), so gamma = x is a fixed generator of GF(q)*.
//!
//! Traces Tr(gamma^n) are streamed by the linear recurrence induced by g:
//! s_n = -(c_0 s_{n-f} + ... + c_{f-1} s_{n-1}) mod p, seeded with the power
//! sums of the roots via Newton's identities: s_0 = f and
//! s_k = -k c_{f-k} - sum_{i=1}^{k-1} c_{f-i} s_{k-i} for 1 <= k < f.

use crate::arith::{factorize, is_prime, mult_order};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub f: u32,
    pub q: u64,
    /// Low coefficients c_0..c_{f-1} of g(x) = x^f + c_{f-1} x^{f-1} + ... + c_0.
    pub poly: Vec<u64>,
    pub factor_q_minus_1: Vec<(u64, u32)>,
}

impl FieldSpec {
    /// The canonical presentation: least primitive polynomial.
    pub fn new(p: u64, f: u32) -> Result<Self> {
        Self::nth(p, f, 0)
    }

    /// The `index`-th monic primitive polynomial of degree f in lex order.
    pub fn nth(p: u64, f: u32, index: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeP(p));
        }
        if f == 0 {
            return Err(Error::PreconditionFailed("f must be at least 1".into()));
        }
        let q = p.checked_pow(f).ok_or(Error::Overflow("p^f"))?;
        let factors = factorize(q - 1);
        let fu = f as usize;
        let mut seen = 0usize;
        for t in 0..q {
            let mut c = Vec::with_capacity(fu);
            let mut tt = t;
            for _ in 0..fu {
                c.push(tt % p);
                tt /= p;
            }
            if c[0] == 0 {
                continue;
            }
            // Norm screen: the norm of a generator, (-1)^f c_0, must itself
            // generate GF(p)*.
            let norm = if f % 2 == 1 { p - c[0] } else { c[0] };
            if mult_order(norm % p, p) != p - 1 {
                continue;
            }
            if !is_primitive(&c, p, q, &factors) {
                continue;
            }
            if seen == index {
                return Ok(FieldSpec {
                    p,
                    f,
                    q,
                    poly: c,
                    factor_q_minus_1: factors,
                });
            }
            seen += 1;
        }
        Err(Error::PreconditionFailed(format!(
            "no primitive polynomial of index {index} for p = {p}, f = {f}"
        )))
    }

    /// Infinite stream Tr(gamma^0), Tr(gamma^1), ... with period q - 1.
    pub fn trace_stream(&self) -> TraceSeq {
        let fu = self.f as usize;
        let p = self.p;
        let mut state = vec![0u64; fu];
        state[0] = self.f as u64 % p;
        for k in 1..fu {
            let mut acc: u128 = k as u128 * self.poly[fu - k] as u128;
            for i in 1..k {
                acc += self.poly[fu - i] as u128 * state[k - i] as u128;
            }
            state[k] = ((p as u128 - acc % p as u128) % p as u128) as u64;
        }
        let taps: Vec<(usize, u64)> = self
            .poly
            .iter()
            .enumerate()
            .filter(|&(_, &ci)| ci != 0)
            .map(|(i, &ci)| (i, p - ci))
            .collect();
        TraceSeq {
            p,
            taps,
            state,
            head: 0,
        }
    }

    /// Infinite stream of gamma^0, gamma^1, ... packed as sum c_i p^i < q.
    pub fn power_stream(&self) -> PowerSeq {
        let fu = self.f as usize;
        let mut state = vec![0u64; fu];
        state[0] = 1;
        let mut powers = Vec::with_capacity(fu);
        let mut pw = 1u64;
        for _ in 0..fu {
            powers.push(pw);
            pw = pw.wrapping_mul(self.p);
        }
        PowerSeq {
            p: self.p,
            minus_c: self.poly.iter().map(|&ci| (self.p - ci) % self.p).collect(),
            state,
            powers,
        }
    }

    pub fn poly_string(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for i in (0..=self.f as usize).rev() {
            let c = if i == self.f as usize {
                1
            } else {
                self.poly[i]
            };
            if c == 0 {
                continue;
            }
            terms.push(match (c, i) {
                (c, 0) => c.to_string(),
                (1, 1) => "x".into(),
                (1, i) => format!("x^{i}"),
                (c, 1) => format!("{c}x"),
                (c, i) => format!("{c}x^{i}"),
            });
        }
        terms.join(" + ")
    }
}

/// Iterator over Tr(gamma^n) for n = 0, 1, 2, ...
pub struct TraceSeq {
    p: u64,
    /// (i, -c_i mod p) for the nonzero low coefficients of g.
    taps: Vec<(usize, u64)>,
    state: Vec<u64>,
    head: usize,
}

impl Iterator for TraceSeq {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        let f = self.state.len();
        let out = self.state[self.head];
        let mut acc: u128 = 0;
        for &(i, m) in &self.taps {
            let mut idx = self.head + i;
            if idx >= f {
                idx -= f;
            }
            acc += m as u128 * self.state[idx] as u128;
        }
        self.state[self.head] = (acc % self.p as u128) as u64;
        self.head += 1;
        if self.head == f {
            self.head = 0;
        }
        Some(out)
    }
}

/// Iterator over gamma^n in packed coordinates, n = 0, 1, 2, ...
pub struct PowerSeq {
    p: u64,
    minus_c: Vec<u64>,
    state: Vec<u64>,
    powers: Vec<u64>,
}

impl Iterator for PowerSeq {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        let packed = self
            .state
            .iter()
            .zip(&self.powers)
            .map(|(&c, &pw)| c * pw)
            .sum();
        let f = self.state.len();
        let top = self.state[f - 1];
        for i in (1..f).rev() {
            self.state[i] = self.state[i - 1];
        }
        self.state[0] = 0;
        if top != 0 {
            for i in 0..f {
                self.state[i] = ((self.state[i] as u128
                    + top as u128 * self.minus_c[i] as u128)
                    % self.p as u128) as u64;
            }
        }
        Some(packed)
    }
}

fn x_poly(fu: usize, minus_c: &[u64], p: u64) -> Vec<u64> {
    let mut x = vec![0u64; fu];
    if fu == 1 {
        x[0] = minus_c[0] % p;
    } else {
        x[1] = 1;
    }
    x
}

fn polymul(a: &[u64], b: &[u64], minus_c: &[u64], p: u64) -> Vec<u64> {
    let f = minus_c.len();
    let mut buf = vec![0u64; 2 * f - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            buf[i + j] =
                ((buf[i + j] as u128 + ai as u128 * bj as u128) % p as u128) as u64;
        }
    }
    for i in (f..2 * f - 1).rev() {
        let t = buf[i];
        if t == 0 {
            continue;
        }
        for j in 0..f {
            buf[i - f + j] = ((buf[i - f + j] as u128 + t as u128 * minus_c[j] as u128)
                % p as u128) as u64;
        }
    }
    buf.truncate(f);
    buf
}

fn polypow(mut base: Vec<u64>, mut e: u64, minus_c: &[u64], p: u64) -> Vec<u64> {
    let f = minus_c.len();
    let mut acc = vec![0u64; f];
    acc[0] = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = polymul(&acc, &base, minus_c, p);
        }
        base = polymul(&base, &base, minus_c, p);
        e >>= 1;
    }
    acc
}

#[inline]
fn is_one(z: &[u64]) -> bool {
    z[0] == 1 && z[1..].iter().all(|&c| c == 0)
}

/// ord(x) = q - 1 in GF(p)[x]/(g) forces the quotient to be a field, so this
/// single order test is a complete primitivity test.
fn is_primitive(c: &[u64], p: u64, q: u64, factors: &[(u64, u32)]) -> bool {
    let minus_c: Vec<u64> = c.iter().map(|&ci| (p - ci) % p).collect();
    let x = x_poly(c.len(), &minus_c, p);
    if !is_one(&polypow(x.clone(), q - 1, &minus_c, p)) {
        return false;
    }
    factors
        .iter()
        .all(|&(l, _)| !is_one(&polypow(x.clone(), (q - 1) / l, &minus_c, p)))
}

//! Closed-form bounds on `sat(n, H, F)` evaluated as exact rationals.
//!
//! Asymptotic bounds are reduced to their leading term and flagged
//! `informational`: they hold only for large `n` (or up to `o(n^k)`) and
//! must not be compared against finite-`n` values.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::constructions::independence_number;
use crate::count::rooted_pair_count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::pattern::Pattern;

pub fn falling_factorial(m: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::OutOfRange(format!("falling factorial needs k >= 0 (k={k})")));
    }
    Ok((0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(m - i)))
}

/// `C(m, k)`, zero when `k > m` or `m < 0`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::from(0);
    }
    let k = k.min(m - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> BigRational {
    BigRational::new(a.into(), b.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum BoundCase {
    /// `sat(n, K_s)` edges.
    Ehm { n: i64, s: i64 },
    KrKs { n: i64, r: i64, s: i64 },
    /// `H` as graph6 with the nonedge `h1 h2`.
    QuadLb { n: i64, h: String, h1: usize, h2: usize, s: i64 },
    C4K4 { n: i64 },
    CrKs { n: i64, r: i64, s: i64 },
    C6K5 { n: i64 },
    /// Cliques `K_r` in the greedy `F`-saturated construction.
    KtCount { n: i64, r: i64, f: Pattern },
}

impl BoundCase {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundCase::Ehm { .. } => "ehm",
            BoundCase::KrKs { .. } => "kr-ks",
            BoundCase::QuadLb { .. } => "quad-lb",
            BoundCase::C4K4 { .. } => "c4-k4",
            BoundCase::CrKs { .. } => "cr-ks",
            BoundCase::C6K5 { .. } => "c6-k5",
            BoundCase::KtCount { .. } => "kt-count",
        }
    }

    pub fn quad_lb(n: i64, h: &Graph, h1: usize, h2: usize, s: i64) -> BoundCase {
        BoundCase::QuadLb { n, h: to_graph6(h), h1, h2, s }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    #[serde(with = "ratio_string")]
    pub value: BigRational,
    /// Leading term of an asymptotic bound; not valid at every `n`.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(flatten)]
    pub case: BoundCase,
    pub lower: Option<BoundValue>,
    pub upper: Option<BoundValue>,
    pub notes: Vec<String>,
}

mod ratio_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn exact(value: BigRational) -> Option<BoundValue> {
    Some(BoundValue { value, informational: false })
}

fn leading(value: BigRational) -> Option<BoundValue> {
    Some(BoundValue { value, informational: true })
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("outside validity range: {what}")))
    }
}

pub fn evaluate_bound(case: &BoundCase) -> Result<BoundReport> {
    let mut notes = Vec::new();
    let (lower, upper) = match *case {
        BoundCase::Ehm { n, s } => {
            need(s >= 3, "s >= 3")?;
            need(n >= s, "n >= s")?;
            let v = int((s - 2) * (n - s + 2)) + int(binomial(s - 2, 2));
            (exact(v.clone()), exact(v))
        }
        BoundCase::KrKs { n, r, s } => {
            need(r >= 3 && s > r, "s > r >= 3")?;
            need(n >= s, "n >= s")?;
            let a = binomial(s - 2, r - 1);
            let upper = int(n - s + 2) * int(a.clone()) + int(binomial(s - 2, r));
            let first = frac(a.clone(), r - 1) * int(n) - int(a.clone() * 2);
            let second = frac(a + binomial(s - 3, r - 2), r) * int(n);
            notes.push("lower bound holds only for n beyond an unspecified threshold".into());
            (leading(first.max(second)), exact(upper))
        }
        BoundCase::QuadLb { n, ref h, h1, h2, s } => {
            need(s >= 3, "s >= 3")?;
            let h = from_graph6(h)?;
            need(h.n() as i64 <= s, "|V(H)| <= s")?;
            let f = rooted_pair_count(&h, h1, h2, s as usize)?;
            notes.push(format!("f = {f}"));
            let v = int(f) * (frac(n * n, 2 * (s - 1)) - frac(n, 2));
            (exact(v), None)
        }
        BoundCase::C4K4 { n } => {
            need(n >= 4, "n >= 4")?;
            // the quadratic lower bound with f = 1 for opposite corners of C4
            let lb = frac(n * n, 6) - frac(n, 2);
            notes.push("lower bound from the rooted-pair bound with f = 1; C(n,2) - n^(5/3+d) is asymptotic".into());
            (exact(lb), exact(int(binomial(n - 2, 2))))
        }
        BoundCase::CrKs { n, r, s } => {
            need(s >= 5, "s >= 5")?;
            need((3..=2 * s - 4).contains(&r), "3 <= r <= 2s - 4")?;
            let k = r / 2;
            let nk = int(BigInt::from(n).pow(k as u32));
            let (lo, hi) = if r % 2 == 0 {
                let ff = falling_factorial(s - 2, k)?;
                (frac(ff.clone(), 4 * k), frac(ff, 2 * k))
            } else {
                need(r >= 5, "odd r >= 5 (the odd-case constant needs (k-2)! and r(r-3) > 0)")?;
                let ff = falling_factorial(s - 2, k + 1)?;
                let fact = falling_factorial(k - 2, k - 2)?;
                let den = BigInt::from(r * (r - 3)) * falling_factorial(r, k)? * BigInt::from(s - 1);
                (BigRational::new(ff.clone() * fact, den), frac(ff, 2))
            };
            notes.push(format!("leading terms of Theta(n^{k}); both sides carry o(n^{k}) corrections"));
            (leading(lo * nk.clone()), leading(hi * nk))
        }
        BoundCase::C6K5 { n } => {
            need(n >= 5, "n >= 5")?;
            notes.push("lower bound is (1 - o(1)) n^3".into());
            (leading(int(BigInt::from(n).pow(3))), exact(int(binomial(n - 3, 3) * 6)))
        }
        BoundCase::KtCount { n, r, ref f } => {
            f.validate()?;
            need(r >= 2, "r >= 2")?;
            let fg = f.graph();
            let v = fg.n() as i64;
            need(n >= v, "n >= |V(F)|")?;
            let alpha = independence_number(&fg) as i64;
            let value = int(BigInt::from(n) * binomial(v - 2, r - 1)) + int(binomial(v - alpha - 1, r));
            (None, exact(value))
        }
    };
    Ok(BoundReport { case: case.clone(), lower, upper, notes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub result: String,
    pub hypothesis: String,
    /// Whether the hypothesis holds for the given parameters.
    pub applies: bool,
    /// Exact value of the statement at these parameters, when it is one.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableParams {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub k: i64,
    pub l: i64,
    pub t: i64,
}

/// The summary rows of known results, instantiated at `p`.
pub fn summary_table(p: &TableParams) -> Vec<TableRow> {
    let TableParams { n, r, s, k, l, t } = *p;
    let row = |result: &str, hypothesis: &str, applies: bool, value: Option<String>| TableRow {
        result: result.into(),
        hypothesis: hypothesis.into(),
        applies,
        value: if applies { value } else { None },
    };
    let zero = || Some("0".to_string());
    vec![
        row("sat(n,K_r,F) = O(n)", "n >= 1, r >= 2", n >= 1 && r >= 2, None),
        row("sat(n,H,K_s) = Omega(n^2)", "H != K_s, |V(H)| = s >= 3", s >= 3, None),
        row("sat(n,K_r,K_s) = Theta(n)", "s > r >= 3", s > r && r >= 3, None),
        row("sat(n,K_3,K_4) = n-2", "n >= 7", n >= 7, Some((n - 2).to_string())),
        row("sat(n,C_4,K_4) ~ n^2/2", "", true, None),
        row("sat(n,C_r,K_s) = Theta(n^floor(r/2))", "s >= 5, r <= 2s-4", s >= 5 && r <= 2 * s - 4, None),
        row("sat(n,C_6,K_5) ~ n^3", "", true, None),
        row("sat(n,K_3,C_k) = 0", "k >= 5, n >= 2k+2", k >= 5 && n >= 2 * k + 2, zero()),
        row("sat(n,C_4,C_k) = 0", "n >= 111, k in {7,8,9,10}", n >= 111 && (7..=10).contains(&k), zero()),
        row("sat(n,C_2l,C_2k) = 0", "l >= k", l >= k, zero()),
        row("sat(n,C_2l,C_2k) = O_{k,l}(n)", "l < k", l < k, None),
        row(
            "sat(n,H,C_2k+1) = 0",
            "n >= 2k+2 >= 4, H not bipartite",
            n >= 2 * k + 2 && 2 * k + 2 >= 4,
            zero(),
        ),
        row("sat(n,C_t,C_k) = 0", "n >= t >= k >= 3", n >= t && t >= k && k >= 3, zero()),
        row(
            "sat(m(r-1)+1,C_t,C_k) = 0",
            "t >= r+1, 2r-2 >= k >= r+1",
            t > r && 2 * r - 2 >= k && k > r,
            zero(),
        ),
        row("sat(n,K_3,C_4) <= floor((n-1)/2)", "n >= 4", n >= 4, Some(((n - 1) / 2).to_string())),
        row("sat(10t+1,C_4,C_6) <= 2t", "t >= 1", t >= 1, Some((2 * t).to_string())),
    ]
}

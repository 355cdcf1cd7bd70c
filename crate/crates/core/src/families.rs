//! Named tree families and closed-form minimum-status bounds.
//!
//! Vertex layouts are fixed so that emitted edge-lists are stable:
//!
//! * path: `0 - 1 - ... - (n-1)`; cycle adds `(n-1) - 0`;
//! * star and `A_{n,m}`: centre `0`, star leaves `1..=n-m`, then the extra
//!   pendants `n-m+1..` attached to leaves `1..m` in order;
//! * dumbbell and caterpillar: spine `0..L` first, pendants appended in spine
//!   order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Path,
    Cycle,
    Star,
    A,
    Dumbbell,
    Caterpillar,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(Family::Path),
            "cycle" | "c" => Ok(Family::Cycle),
            "star" | "s" => Ok(Family::Star),
            "a" => Ok(Family::A),
            "dumbbell" | "d" => Ok(Family::Dumbbell),
            "caterpillar" | "cat" => Ok(Family::Caterpillar),
            other => Err(invalid(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::A => "A",
            Family::Dumbbell => "dumbbell",
            Family::Caterpillar => "caterpillar",
        };
        f.write_str(name)
    }
}

/// A family member: `A` takes `[m]`, dumbbell and caterpillar take `[p, q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, params: Vec<usize>) -> Self {
        FamilySpec { family, n, params }
    }

    pub fn build(&self) -> Result<Graph> {
        let expected = match self.family {
            Family::Path | Family::Cycle | Family::Star => 0,
            Family::A => 1,
            Family::Dumbbell | Family::Caterpillar => 2,
        };
        if self.params.len() != expected {
            return Err(invalid(format!(
                "{} takes {expected} parameter(s), got {}",
                self.family,
                self.params.len()
            )));
        }
        let n = self.n;
        match self.family {
            Family::Path => make_path(n),
            Family::Cycle => make_cycle(n),
            Family::Star => make_star(n),
            Family::A => make_a(n, self.params[0]),
            Family::Dumbbell => make_dumbbell(n, self.params[0], self.params[1]),
            Family::Caterpillar => make_caterpillar(n, self.params[0], self.params[1]),
        }
    }
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]))
}

pub fn make_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// `A_{n,m}`: the star `S_{n-m+1}` with a pendant edge hung on `m - 1` of its
/// leaves. Centre is vertex 0.
pub fn make_a(n: usize, m: usize) -> Result<Graph> {
    if n < 2 || m < 1 || m > n / 2 {
        return Err(invalid(format!(
            "A_(n,m) needs n >= 2 and 1 <= m <= n/2, got n={n}, m={m}"
        )));
    }
    let star_leaves = n - m;
    let edges = (1..=star_leaves)
        .map(|v| (0, v))
        .chain((1..m).map(|i| (i, star_leaves + i)));
    Graph::from_edges(n, edges)
}

/// `D_n(p, q)`: the path on `n - p - q` vertices with `p` pendants at its
/// first end and `q` at its last. A one-vertex spine (`p + q = n - 1`) gives
/// the star.
pub fn make_dumbbell(n: usize, p: usize, q: usize) -> Result<Graph> {
    if p < q || p + q + 1 > n {
        return Err(invalid(format!(
            "dumbbell needs p >= q >= 0 and p + q <= n - 1, got n={n}, p={p}, q={q}"
        )));
    }
    let spine = n - p - q;
    let edges = (1..spine)
        .map(|v| (v - 1, v))
        .chain((0..p).map(|i| (0, spine + i)))
        .chain((0..q).map(|i| (spine - 1, spine + p + i)));
    Graph::from_edges(n, edges)
}

/// `C_n(p, q)`: the path `v_0 .. v_{L-1}` with `L = n - p - q` and one pendant
/// on each of the first `p` and the last `q` spine vertices.
pub fn make_caterpillar(n: usize, p: usize, q: usize) -> Result<Graph> {
    if q < 1 || p < q || 2 * (p + q) > n {
        return Err(invalid(format!(
            "caterpillar needs p >= q >= 1 and 2(p + q) <= n, got n={n}, p={p}, q={q}"
        )));
    }
    let spine = n - p - q;
    let legs = (0..p).chain(spine - q..spine);
    let edges = (1..spine)
        .map(|v| (v - 1, v))
        .chain(legs.enumerate().map(|(i, v)| (v, spine + i)));
    Graph::from_edges(n, edges)
}

fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn check_k(n: usize, k: usize, what: &str) -> Result<()> {
    if k < 1 || k > n / 2 {
        return Err(invalid(format!(
            "{what} needs 1 <= k <= n/2, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// `n + m - 2`.
pub fn bound_matching_lower(n: usize, m: usize) -> Result<i64> {
    check_k(n, m, "matching lower bound")?;
    Ok((n + m) as i64 - 2)
}

/// `m (n - m)`, for `n >= 4`.
pub fn bound_matching_upper(n: usize, m: usize) -> Result<i64> {
    if n < 4 {
        return Err(invalid("matching upper bound needs n >= 4"));
    }
    check_k(n, m, "matching upper bound")?;
    Ok((m * (n - m)) as i64)
}

/// `n + gamma - 2`.
pub fn bound_domination_lower(n: usize, gamma: usize) -> Result<i64> {
    check_k(n, gamma, "domination lower bound")?;
    Ok((n + gamma) as i64 - 2)
}

/// Sharp maximum for `1 <= gamma < ceil(n/3)`, split on the parity of `gamma`.
pub fn bound_domination_upper_small(n: usize, gamma: usize) -> Result<i64> {
    if gamma < 1 || gamma >= div_ceil(n, 3) {
        return Err(invalid(format!(
            "small-domination upper bound needs 1 <= gamma < ceil(n/3), got n={n}, gamma={gamma}"
        )));
    }
    let value = if gamma % 2 == 1 {
        let h = (3 * gamma - 1) / 2;
        h * (n - h)
    } else {
        let h = 3 * gamma / 2;
        h * (n + 1 - h) - div_ceil(n, 2)
    };
    Ok(value as i64)
}

/// `3 n gamma + 3 gamma - n - ceil((n^2 + 18 gamma^2) / 4)` for
/// `ceil(n/3) < gamma <= floor(n/2)`.
pub fn bound_domination_upper_large(n: usize, gamma: usize) -> Result<i64> {
    if gamma <= div_ceil(n, 3) || gamma > n / 2 {
        return Err(invalid(format!(
            "large-domination upper bound needs ceil(n/3) < gamma <= n/2, got n={n}, gamma={gamma}"
        )));
    }
    Ok(large_domination_formula(n, gamma))
}

fn large_domination_formula(n: usize, gamma: usize) -> i64 {
    let (n, g) = (n as i64, gamma as i64);
    3 * n * g + 3 * g - n - (n * n + 18 * g * g + 3).div_euclid(4)
}

/// `floor(n^2 / 4)`, for `n >= 3`.
pub fn bound_order(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(invalid("order bound needs n >= 3"));
    }
    Ok((n * n / 4) as i64)
}

/// `D_n(ceil((n+1)/2) - m, floor((n+1)/2) - m)`.
pub fn matching_upper_extremal(n: usize, m: usize) -> Result<Graph> {
    check_k(n, m, "matching upper extremal")?;
    make_dumbbell(n, div_ceil(n + 1, 2) - m, (n + 1) / 2 - m)
}

/// `D_n(ceil((n-3g+2)/2), floor((n-3g+2)/2))`.
pub fn domination_upper_small_extremal(n: usize, gamma: usize) -> Result<Graph> {
    bound_domination_upper_small(n, gamma)?;
    let pendants = n + 2 - 3 * gamma;
    make_dumbbell(n, div_ceil(pendants, 2), pendants / 2)
}

/// `C_n(ceil((3g-n)/2), floor((3g-n)/2))`.
pub fn domination_upper_large_extremal(n: usize, gamma: usize) -> Result<Graph> {
    bound_domination_upper_large(n, gamma)?;
    let legs = 3 * gamma - n;
    make_caterpillar(n, div_ceil(legs, 2), legs / 2)
}

//! Partition combinatorics for Grassmannian Schubert calculus:
//! Littlewood-Richardson coefficients, index subsets, Horn triples and
//! their duals, and the linear inequalities the triples encode.

mod lr;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use lr::lr_coefficient;

use crate::error::{Error, Result};
use crate::polytope::Inequality;
use crate::scalar::ExactField;
use crate::vector::Vector;

/// Weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parameter(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Every partition fitting in a `rows x cols` box.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).expect("built decreasing"));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_subset(subset: &[usize], k: usize, n: usize) -> Result<()> {
    if subset.len() != k {
        return Err(Error::Parameter(format!("subset {subset:?} must have {k} elements")));
    }
    if subset.iter().any(|&i| i == 0 || i > n) || subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parameter(format!(
            "subset {subset:?} must be strictly increasing in 1..={n}"
        )));
    }
    Ok(())
}

/// `lambda_a = i_{k+1-a} - (k+1-a)` for `I = (i_1 < .. < i_k)`.
pub fn subset_to_partition(subset: &[usize], k: usize, n: usize) -> Result<Partition> {
    check_subset(subset, k, n)?;
    let parts = (1..=k)
        .map(|a| (subset[k - a] - (k + 1 - a)) as u32)
        .collect();
    Partition::new(parts)
}

/// Index subsets `(I, J, K)` of `{1..n}` of common size `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HornTriple {
    i: Vec<usize>,
    j: Vec<usize>,
    k: Vec<usize>,
    n: usize,
}

impl HornTriple {
    pub fn new(i: Vec<usize>, j: Vec<usize>, k: Vec<usize>, n: usize) -> Result<Self> {
        let size = i.len();
        if size == 0 || size >= n {
            return Err(Error::Parameter(format!("need 1 <= k < n, got k={size}, n={n}")));
        }
        for s in [&i, &j, &k] {
            check_subset(s, size, n)?;
        }
        Ok(Self { i, j, k, n })
    }

    pub fn first(&self) -> &[usize] {
        &self.i
    }

    pub fn second(&self) -> &[usize] {
        &self.j
    }

    pub fn target(&self) -> &[usize] {
        &self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.i.len()
    }

    /// `(J, I, K)`
    pub fn swapped(&self) -> Self {
        Self { i: self.j.clone(), j: self.i.clone(), k: self.k.clone(), n: self.n }
    }

    /// Representative with `I <= J` lexicographically.
    pub fn canonical(&self) -> Self {
        if self.i <= self.j {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn partitions(&self) -> (Partition, Partition, Partition) {
        let p = |s: &[usize]| subset_to_partition(s, self.k(), self.n).expect("validated");
        (p(&self.i), p(&self.j), p(&self.k))
    }

    /// Parses the notation `(1,2)(2,4)(2,4)`; `n` is not recoverable from
    /// the string and must be supplied.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::Parameter(format!("malformed triple {s:?}"));
        let s = s.trim();
        let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let groups: Vec<&str> = inner.split(")(").collect();
        if groups.len() != 3 {
            return Err(bad());
        }
        let parse_group = |g: &str| -> Result<Vec<usize>> {
            g.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        Self::new(parse_group(groups[0])?, parse_group(groups[1])?, parse_group(groups[2])?, n)
    }
}

fn fmt_subset(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(","))
}

impl fmt::Display for HornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", fmt_subset(&self.i), fmt_subset(&self.j), fmt_subset(&self.k))
    }
}

/// All strictly increasing `k`-subsets of `{1..n}`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::polytope::combinations(n, k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| i + 1).collect())
        .collect()
}

/// Triples with a positive Littlewood-Richardson coefficient
/// `c^{lambda(K)}_{lambda(I), lambda(J)}`, ordered by `K`, then `I`, then `J`.
pub fn horn_triples(n: usize, k: usize) -> Result<Vec<HornTriple>> {
    if k == 0 || k >= n {
        return Err(Error::Parameter(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let subs = subsets(n, k);
    let parts: Vec<Partition> = subs
        .iter()
        .map(|s| subset_to_partition(s, k, n).expect("generated subsets are valid"))
        .collect();
    let out: Vec<Vec<HornTriple>> = (0..subs.len())
        .into_par_iter()
        .map(|kk| {
            let mut found = Vec::new();
            for ii in 0..subs.len() {
                for jj in 0..subs.len() {
                    if parts[ii].size() + parts[jj].size() != parts[kk].size() {
                        continue;
                    }
                    if lr_coefficient(&parts[ii], &parts[jj], &parts[kk]) > 0 {
                        found.push(HornTriple {
                            i: subs[ii].clone(),
                            j: subs[jj].clone(),
                            k: subs[kk].clone(),
                            n,
                        });
                    }
                }
            }
            found
        })
        .collect();
    Ok(out.into_iter().flatten().collect())
}

/// All Horn triples for `SU(n)`, every `k` in `1..n`.
pub fn all_horn_triples(n: usize) -> Vec<HornTriple> {
    (1..n)
        .flat_map(|k| horn_triples(n, k).expect("1 <= k < n"))
        .collect()
}

/// `I* = (n+1-i_n, .., n+1-i_{k+1})` for the complement
/// `(i_{k+1} < .. < i_n)` of `I`.
pub fn dual_subset(subset: &[usize], n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=n)
        .filter(|x| !subset.contains(x))
        .map(|x| n + 1 - x)
        .collect();
    out.sort_unstable();
    out
}

pub fn dual_triple(t: &HornTriple) -> HornTriple {
    HornTriple {
        i: dual_subset(&t.i, t.n),
        j: dual_subset(&t.j, t.n),
        k: dual_subset(&t.k, t.n),
        n: t.n,
    }
}

/// `sum_K nu_k - sum_I lambda_i - sum_J mu_j <= 0` on the concatenated
/// coordinates `(lambda, mu, nu)` of length `3n`.
pub fn triple_to_inequality<F: ExactField>(t: &HornTriple) -> Inequality<F> {
    let n = t.n;
    let mut normal: Vector<F> = Vector::zeros(3 * n);
    for &i in &t.i {
        normal[i - 1] = normal[i - 1].clone() - F::one();
    }
    for &j in &t.j {
        normal[n + j - 1] = normal[n + j - 1].clone() - F::one();
    }
    for &k in &t.k {
        normal[2 * n + k - 1] = normal[2 * n + k - 1].clone() + F::one();
    }
    Inequality::new(normal, F::zero())
}

/// One row of the Horn table in its printed convention: one of each
/// `I <-> J` pair, the dual alongside, self-dual rows without a dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornTableRow {
    pub triple: HornTriple,
    pub dual: Option<HornTriple>,
}

/// Rows for `k <= n/2`; triples with `k > n/2` appear as duals. Within a
/// block, and between a triple and its dual of the same size, the
/// lexicographically smaller `(I, J, K)` is listed first.
pub fn horn_table(n: usize) -> Vec<HornTableRow> {
    let mut rows = Vec::new();
    for k in 1..n {
        if 2 * k > n {
            break;
        }
        let mut block: Vec<HornTriple> = horn_triples(n, k)
            .expect("1 <= k < n")
            .into_iter()
            .filter(|t| t.i <= t.j)
            .collect();
        block.sort_by(|a, b| (&a.i, &a.j, &a.k).cmp(&(&b.i, &b.j, &b.k)));
        for t in block {
            let d = dual_triple(&t).canonical();
            if d == t {
                rows.push(HornTableRow { triple: t, dual: None });
            } else if 2 * k < n || (&t.i, &t.j, &t.k) < (&d.i, &d.j, &d.k) {
                rows.push(HornTableRow { triple: t, dual: Some(d) });
            }
        }
    }
    rows
}

impl FromStr for Partition {
    type Err = Error;

    /// `"(2,1)"`, `"2,1"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parameter(format!("malformed partition {s:?}")))?;
        Self::new(parts)
    }
}

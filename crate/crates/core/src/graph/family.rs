use super::Graph;
use crate::error::{Error, Result};
use std::str::FromStr;

/// Named graph families.
///
/// Textual form (used by the CLI): `complete:N`, `cycle:N`, `path:N`,
/// `multipartite:A,B,...`, `turan:N,K`, `petersen`, `star:N`, `gnp:N,P[,SEED]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteMultipartite(Vec<usize>),
    Turan {
        n: usize,
        k: usize,
    },
    Petersen,
    /// `Star(n)` is `K_{1,n-1}` with center 0.
    Star(usize),
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

/// One step of the SplitMix64 sequence: advances `state` by the golden gamma
/// and returns the mixed output.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform sample in `[0, 1)` from the top 53 bits of a SplitMix64 draw.
pub fn gnp_unit(state: &mut u64) -> f64 {
    (splitmix64(state) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            Family::Complete(n) => {
                let n = check_order(*n)?;
                let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                Graph::from_pairs(n, &pairs)
            }
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
                }
                let pairs: Vec<_> = (0..*n).map(|u| (u, (u + 1) % n)).collect();
                Graph::from_pairs(*n, &pairs)
            }
            Family::Path(n) => {
                let n = check_order(*n)?;
                let pairs: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
                Graph::from_pairs(n, &pairs)
            }
            Family::CompleteMultipartite(sizes) => complete_multipartite(sizes),
            Family::Turan { n, k } => {
                let n = check_order(*n)?;
                if *k == 0 {
                    return Err(Error::InvalidFamily("turan needs k >= 1".into()));
                }
                let (q, s) = (n / k, n % k);
                let sizes: Vec<usize> = (0..*k).map(|i| if i < s { q + 1 } else { q }).collect();
                complete_multipartite(&sizes)
            }
            Family::Petersen => {
                let pairs: Vec<(usize, usize)> =
                    (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
                let mut edges = Vec::new();
                for (i, &(a, b)) in pairs.iter().enumerate() {
                    for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                        if a != c && a != d && b != c && b != d {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::from_pairs(10, &edges)
            }
            Family::Star(n) => {
                let n = check_order(*n)?;
                let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Graph::from_pairs(n, &pairs)
            }
            Family::Gnp { n, p, seed } => {
                let n = check_order(*n)?;
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::InvalidFamily(format!("p = {p} is outside [0, 1]")));
                }
                // one draw per pair, pairs in lexicographic order
                let mut state = *seed;
                let mut pairs = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if gnp_unit(&mut state) < *p {
                            pairs.push((u, v));
                        }
                    }
                }
                Graph::from_pairs(n, &pairs)
            }
        }
    }

    /// Parses the textual form; `seed` applies to `gnp` when the spec string
    /// does not carry its own.
    pub fn parse_with_seed(spec: &str, seed: u64) -> Result<Self> {
        let (name, args) = match spec.split_once(':') {
            Some((name, args)) => (name.trim(), args.trim()),
            None => (spec.trim(), ""),
        };
        let nums = |args: &str| -> Result<Vec<usize>> {
            args.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("`{s}` is not a count")))
                })
                .collect()
        };
        let one = |args: &str| -> Result<usize> {
            match nums(args)?.as_slice() {
                [n] => Ok(*n),
                _ => Err(Error::InvalidFamily(format!("{name} takes one count"))),
            }
        };
        Ok(match name {
            "complete" => Family::Complete(one(args)?),
            "cycle" => Family::Cycle(one(args)?),
            "path" => Family::Path(one(args)?),
            "star" => Family::Star(one(args)?),
            "petersen" => Family::Petersen,
            "multipartite" | "complete_multipartite" => Family::CompleteMultipartite(nums(args)?),
            "turan" => match nums(args)?.as_slice() {
                [n, k] => Family::Turan { n: *n, k: *k },
                _ => return Err(Error::InvalidFamily("turan takes N,K".into())),
            },
            "gnp" => {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                if parts.len() != 2 && parts.len() != 3 {
                    return Err(Error::InvalidFamily("gnp takes N,P[,SEED]".into()));
                }
                let bad = |s: &str| Error::InvalidFamily(format!("bad gnp argument `{s}`"));
                let n = parts[0].parse().map_err(|_| bad(parts[0]))?;
                let p = parts[1].parse().map_err(|_| bad(parts[1]))?;
                let seed = match parts.get(2) {
                    Some(s) => s.parse().map_err(|_| bad(s))?,
                    None => seed,
                };
                Family::Gnp { n, p, seed }
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::parse_with_seed(s, 0)
    }
}

fn check_order(n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidFamily("n must be at least 1".into()));
    }
    Ok(n)
}

fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    let n = check_order(n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, &pairs)
}

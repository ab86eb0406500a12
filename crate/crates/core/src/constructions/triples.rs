//! Resolvable Steiner triple systems on 3, 9 and 15 points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Triples of `1..=n` grouped into parallel classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSystem {
    pub n: usize,
    pub classes: Vec<Vec<[usize; 3]>>,
}

const KTS15: &str = crate::catalogue::KTS15_JSON;

impl TripleSystem {
    /// Every pair of points lies in exactly one triple, every class
    /// partitions the points, and there are `(n-1)/2` classes.
    pub fn audit(&self) -> Result<()> {
        let n = self.n;
        let fail = |msg: String| {
            Err(Error::Internal(format!(
                "triple system on {n} points: {msg}"
            )))
        };
        if self.classes.len() != (n - 1) / 2 {
            return fail(format!("{} classes", self.classes.len()));
        }
        let mut pair_count = vec![0u8; (n + 1) * (n + 1)];
        for (ci, class) in self.classes.iter().enumerate() {
            let mut seen = vec![false; n + 1];
            for t in class {
                for &p in t {
                    if p == 0 || p > n || std::mem::replace(&mut seen[p], true) {
                        return fail(format!("class {ci} is not a partition"));
                    }
                }
                for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    pair_count[a.min(b) * (n + 1) + a.max(b)] += 1;
                }
            }
            if seen[1..].iter().any(|&s| !s) {
                return fail(format!("class {ci} misses a point"));
            }
        }
        for a in 1..=n {
            for b in a + 1..=n {
                if pair_count[a * (n + 1) + b] != 1 {
                    return fail(format!(
                        "pair {{{a},{b}}} covered {} times",
                        pair_count[a * (n + 1) + b]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}

/// Kirkman triple system for `n ∈ {3, 9, 15}`. The 9-point system is the
/// lexicographically first one found by backtracking; the 15-point system
/// is stored data.
pub fn kirkman_triple_system(n: usize) -> Result<TripleSystem> {
    let sys = match n {
        3 => TripleSystem {
            n,
            classes: vec![vec![[1, 2, 3]]],
        },
        9 => search(9).ok_or_else(|| Error::Internal("no Kirkman system on 9 points".into()))?,
        15 => serde_json::from_str(KTS15)
            .map_err(|e| Error::Internal(format!("bad KTS(15) data: {e}")))?,
        _ => {
            return Err(Error::Unsupported(format!(
                "Kirkman triple systems are available for n = 3, 9, 15, not {n}"
            )))
        }
    };
    sys.audit()?;
    Ok(sys)
}

fn search(n: usize) -> Option<TripleSystem> {
    struct S {
        n: usize,
        used: Vec<bool>,
        classes: Vec<Vec<[usize; 3]>>,
    }
    impl S {
        fn pair(&self, a: usize, b: usize) -> usize {
            a * (self.n + 1) + b
        }
        fn rec(&mut self) -> bool {
            let n = self.n;
            let class = self.classes.len() - 1;
            let covered: Vec<bool> = {
                let mut c = vec![false; n + 1];
                for t in &self.classes[class] {
                    for &p in t {
                        c[p] = true;
                    }
                }
                c
            };
            let Some(a) = (1..=n).find(|&p| !covered[p]) else {
                if self.classes.len() == (n - 1) / 2 {
                    return true;
                }
                self.classes.push(Vec::new());
                if self.rec() {
                    return true;
                }
                self.classes.pop();
                return false;
            };
            for b in a + 1..=n {
                if covered[b] || self.used[self.pair(a, b)] {
                    continue;
                }
                for c in b + 1..=n {
                    if covered[c] || self.used[self.pair(a, c)] || self.used[self.pair(b, c)] {
                        continue;
                    }
                    let ps = [self.pair(a, b), self.pair(a, c), self.pair(b, c)];
                    for &p in &ps {
                        self.used[p] = true;
                    }
                    self.classes[class].push([a, b, c]);
                    if self.rec() {
                        return true;
                    }
                    self.classes[class].pop();
                    for &p in &ps {
                        self.used[p] = false;
                    }
                }
            }
            false
        }
    }
    let mut s = S {
        n,
        used: vec![false; (n + 1) * (n + 1)],
        classes: vec![Vec::new()],
    };
    s.rec().then_some(TripleSystem {
        n,
        classes: s.classes,
    })
}

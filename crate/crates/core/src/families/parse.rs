//! Text form of [`FamilySpec`].
//!
//! ```text
//! spec  := name [":" args] | name "(" item ("," item)* ")"
//! args  := number ("," number)*
//! item  := spec | number
//! ```
//!
//! Examples: `cycle:9`, `kneser2:7`, `complete_minus_cliques:7,3`,
//! `cartesian(path:4,path:6)`, `complementary_prism(cycle:5)`,
//! `random:8,0.5,42`.

use std::fmt;
use std::str::FromStr;

use super::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::ProductKind;

#[derive(Debug, Clone)]
enum Item {
    Num(String),
    Spec(FamilySpec),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "family spec {:?} at offset {}: {msg}",
            self.text, self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn token(&mut self, pred: impl Fn(u8) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && pred(self.s[self.pos]) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<String> {
        let t = self.token(|c| c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'-');
        if t.is_empty() {
            return Err(self.err("expected a number"));
        }
        Ok(t.to_string())
    }

    fn starts_number(c: Option<u8>) -> bool {
        matches!(c, Some(c) if c.is_ascii_digit() || c == b'.')
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.token(|c| c.is_ascii_alphanumeric() || c == b'_');
        if name.is_empty() {
            return Err(self.err("expected a family name"));
        }
        let mut items = Vec::new();
        if self.eat(b':') {
            items.push(Item::Num(self.number()?));
            while self.peek() == Some(b',') && {
                let save = self.pos;
                self.pos += 1;
                let num = Self::starts_number(self.peek());
                self.pos = save;
                num
            } {
                self.pos += 1;
                items.push(Item::Num(self.number()?));
            }
        } else if self.eat(b'(') {
            loop {
                if Self::starts_number(self.peek()) {
                    items.push(Item::Num(self.number()?));
                } else {
                    items.push(Item::Spec(self.spec()?));
                }
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.err("expected ',' or ')'"));
                }
            }
        }
        build(name, items).map_err(|e| match e {
            Error::Parse(m) => self.err(&m),
            other => other,
        })
    }
}

fn nums<T: FromStr>(name: &str, items: &[Item], arity: usize) -> Result<Vec<T>> {
    if items.len() != arity {
        return Err(Error::Parse(format!(
            "{name} takes {arity} argument(s), got {}",
            items.len()
        )));
    }
    items
        .iter()
        .map(|it| match it {
            Item::Num(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad argument {s:?} for {name}"))),
            Item::Spec(_) => Err(Error::Parse(format!("{name} takes numeric arguments"))),
        })
        .collect()
}

fn specs(name: &str, items: Vec<Item>, arity: usize) -> Result<Vec<FamilySpec>> {
    if items.len() != arity {
        return Err(Error::Parse(format!(
            "{name} takes {arity} family argument(s)"
        )));
    }
    items
        .into_iter()
        .map(|it| match it {
            Item::Spec(s) => Ok(s),
            Item::Num(_) => Err(Error::Parse(format!("{name} takes family arguments"))),
        })
        .collect()
}

fn build(name: &str, items: Vec<Item>) -> Result<FamilySpec> {
    use FamilySpec::*;
    let one = |items: &[Item]| nums::<usize>(name, items, 1).map(|v| v[0]);
    let two = |items: &[Item]| nums::<usize>(name, items, 2).map(|v| (v[0], v[1]));
    let lower = name.to_ascii_lowercase();
    Ok(match lower.as_str() {
        "path" => Path(one(&items)?),
        "cycle" => Cycle(one(&items)?),
        "complete" => Complete(one(&items)?),
        "multipartite" => {
            if items.is_empty() {
                return Err(Error::Parse("multipartite needs at least one part".into()));
            }
            let mut parts: Vec<usize> = nums(name, &items, items.len())?;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Multipartite(parts)
        }
        "kneser2" => Kneser2(one(&items)?),
        "line_complete" => LineComplete(one(&items)?),
        "petersen" => {
            nums::<usize>(name, &items, 0)?;
            Petersen
        }
        "turan" => {
            let (a, n) = two(&items)?;
            Turan { a, n }
        }
        "tree_leaves" => {
            let (a, l) = two(&items)?;
            TreeLeaves { a, l }
        }
        "t" => {
            let (a, b) = two(&items)?;
            T { a, b }
        }
        "h" => {
            let (r, s) = two(&items)?;
            H { r, s }
        }
        "j" => {
            let (r, s) = two(&items)?;
            J { r, s }
        }
        "g_star" => {
            let (a, n) = two(&items)?;
            GStar { a, n }
        }
        "g" => {
            let (a, b) = two(&items)?;
            G { a, b }
        }
        "s" => {
            let (r, t) = two(&items)?;
            S { r, t }
        }
        "q" => Q(one(&items)?),
        "k_gadget" => KGadget(one(&items)?),
        "complete_minus_cliques" => {
            let (n, a) = two(&items)?;
            CompleteMinusCliques { n, a }
        }
        "cycle_join_clique" => {
            let (a, n) = two(&items)?;
            CycleJoinClique { a, n }
        }
        "split_random" | "block_random" => {
            let v: Vec<u64> = nums(name, &items, 2)?;
            let n = v[0] as usize;
            if lower == "split_random" {
                SplitRandom { n, seed: v[1] }
            } else {
                BlockRandom { n, seed: v[1] }
            }
        }
        "random" => {
            let n = nums::<usize>(name, &items[..items.len().min(1)], 1)?[0];
            if items.len() != 3 {
                return Err(Error::Parse("random takes n, p, seed".into()));
            }
            let p = nums::<f64>(name, &items[1..2], 1)?[0];
            let seed = nums::<u64>(name, &items[2..3], 1)?[0];
            Random { n, p, seed }
        }
        "complementary_prism" => {
            let mut s = specs(name, items, 1)?;
            ComplementaryPrism(Box::new(s.pop().unwrap()))
        }
        "cartesian" | "strong" => {
            let mut s = specs(name, items, 2)?;
            let b = s.pop().unwrap();
            let a = s.pop().unwrap();
            let kind = if lower == "cartesian" {
                ProductKind::Cartesian
            } else {
                ProductKind::Strong
            };
            Product(kind, Box::new(a), Box::new(b))
        }
        _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<FamilySpec> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
            text,
        };
        let spec = p.spec()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Multipartite(parts) => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", p.join(","))
            }
            Kneser2(n) => write!(f, "kneser2:{n}"),
            LineComplete(n) => write!(f, "line_complete:{n}"),
            Petersen => write!(f, "petersen"),
            Turan { a, n } => write!(f, "turan:{a},{n}"),
            TreeLeaves { a, l } => write!(f, "tree_leaves:{a},{l}"),
            T { a, b } => write!(f, "T:{a},{b}"),
            H { r, s } => write!(f, "H:{r},{s}"),
            J { r, s } => write!(f, "J:{r},{s}"),
            GStar { a, n } => write!(f, "G_star:{a},{n}"),
            G { a, b } => write!(f, "G:{a},{b}"),
            S { r, t } => write!(f, "S:{r},{t}"),
            Q(r) => write!(f, "Q:{r}"),
            KGadget(r) => write!(f, "K_gadget:{r}"),
            CompleteMinusCliques { n, a } => write!(f, "complete_minus_cliques:{n},{a}"),
            CycleJoinClique { a, n } => write!(f, "cycle_join_clique:{a},{n}"),
            SplitRandom { n, seed } => write!(f, "split_random:{n},{seed}"),
            ComplementaryPrism(b) => write!(f, "complementary_prism({b})"),
            BlockRandom { n, seed } => write!(f, "block_random:{n},{seed}"),
            Product(kind, a, b) => {
                let name = match kind {
                    ProductKind::Cartesian => "cartesian",
                    ProductKind::Strong => "strong",
                };
                write!(f, "{name}({a},{b})")
            }
            Random { n, p, seed } => write!(f, "random:{n},{p},{seed}"),
        }
    }
}

//! Input documents and inline argument parsing.

use serde::{Deserialize, Serialize};

use selfdual::bounds::{PairingSpec, Problem};
use selfdual::lie::{RamificationPoint, Weight};

/// One grouped ramification point as it appears in documents and reports.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PointDoc {
    pub weight: Vec<u32>,
    #[serde(default)]
    pub k: u32,
    #[serde(default = "one")]
    pub count: u32,
}

fn one() -> u32 {
    1
}

/// The `pairs` field: either a pair count `c` or explicit index pairs.
#[derive(Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum PairsField {
    Count(u32),
    Explicit(Vec<(usize, usize)>),
}

/// A problem description read from a TOML document.
#[derive(Deserialize, Debug)]
pub struct ProblemDocument {
    #[serde(rename = "N")]
    pub n: i64,
    pub points: Vec<PointDoc>,
    #[serde(default)]
    pub pairs: Option<PairsField>,
}

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: ProblemDocument =
            toml::from_str(text).map_err(|e| format!("invalid problem document: {e}"))?;
        for (i, p) in doc.points.iter().enumerate() {
            if p.count == 0 {
                return Err(format!("point {i}: count must be positive"));
            }
        }
        Ok(doc)
    }

    /// Expands grouped points into the full ordered point list.
    pub fn expand_points(&self) -> Vec<RamificationPoint> {
        self.points
            .iter()
            .flat_map(|p| {
                std::iter::repeat(RamificationPoint::new(Weight::new(p.weight.clone()), p.k))
                    .take(p.count as usize)
            })
            .collect()
    }

    pub fn build_problem(&self) -> Result<Problem, String> {
        Problem::new(self.n, self.expand_points()).map_err(|e| e.to_string())
    }
}

/// Splits on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Result<Vec<String>, String> {
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced parentheses".into());
                }
                cur.push(ch);
            }
            ',' if depth == 0 => {
                items.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    if !cur.trim().is_empty() {
        items.push(cur.trim().to_string());
    }
    if items.iter().any(String::is_empty) {
        return Err("empty item in list".into());
    }
    Ok(items)
}

/// Parses a comma-separated list of fundamental coordinates, e.g. `0,1`.
pub fn parse_weight(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid weight coordinate {:?}", part.trim()))
        })
        .collect()
}

/// Parses one point item: `(w1,...,wr)` with optional `_k` and `xM`
/// suffixes, e.g. `(0,1)x6` or `(1,0)_1` or `(1,0)_2x3`.
fn parse_point_item(item: &str) -> Result<PointDoc, String> {
    let rest = item
        .strip_prefix('(')
        .ok_or_else(|| format!("point {item:?} must start with a parenthesized weight"))?;
    let close = rest
        .find(')')
        .ok_or_else(|| format!("point {item:?} is missing a closing parenthesis"))?;
    let weight = parse_weight(&rest[..close])?;
    let mut tail = &rest[close + 1..];
    let mut k = 0u32;
    if let Some(after) = tail.strip_prefix('_') {
        let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(format!("point {item:?}: expected a base-point order after '_'"));
        }
        k = digits.parse().map_err(|_| format!("invalid base-point order in {item:?}"))?;
        tail = &after[digits.len()..];
    }
    let mut count = 1u32;
    if let Some(after) = tail.strip_prefix('x') {
        count = after
            .parse()
            .map_err(|_| format!("invalid copy count in {item:?}"))?;
        if count == 0 {
            return Err(format!("point {item:?}: count must be positive"));
        }
        tail = "";
    }
    if !tail.is_empty() {
        return Err(format!("unexpected trailing input {tail:?} in point {item:?}"));
    }
    Ok(PointDoc { weight, k, count })
}

/// Parses an inline point list, e.g. `(0,1)x6` or `(1,0)x3,(1,0)_1`.
pub fn parse_points(s: &str) -> Result<Vec<PointDoc>, String> {
    let items = split_top_level(s)?;
    if items.is_empty() {
        return Err("at least one point is required".into());
    }
    items.iter().map(|i| parse_point_item(i)).collect()
}

/// Parses explicit index pairs, e.g. `0-1,2-3`.
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| format!("pair {part:?} must look like i-j"))?;
            let a = a.trim().parse().map_err(|_| format!("invalid index in {part:?}"))?;
            let b = b.trim().parse().map_err(|_| format!("invalid index in {part:?}"))?;
            Ok((a, b))
        })
        .collect()
}

/// Cycle data for one group: `(0,1):1,1,2`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct GroupDoc {
    pub weight: Vec<u32>,
    pub cycles: Vec<u32>,
}

/// Parses the groups syntax `weight:cycles;weight:cycles;...`, e.g.
/// `(0,1):1,1,1,1,1,1;(1,0):2`.
pub fn parse_groups(s: &str) -> Result<Vec<GroupDoc>, String> {
    s.split(';')
        .map(|group| {
            let group = group.trim();
            let (weight_part, cycles_part) = group
                .split_once(':')
                .ok_or_else(|| format!("group {group:?} must look like (weight):cycles"))?;
            let weight_part = weight_part.trim();
            let inner = weight_part
                .strip_prefix('(')
                .and_then(|w| w.strip_suffix(')'))
                .ok_or_else(|| format!("group weight {weight_part:?} must be parenthesized"))?;
            let weight = parse_weight(inner)?;
            let cycles = cycles_part
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("invalid cycle length {:?}", c.trim()))
                })
                .collect::<Result<Vec<u32>, String>>()?;
            Ok(GroupDoc { weight, cycles })
        })
        .collect()
}

/// Builds the validated pairing from explicit index pairs.
pub fn build_pairing(problem: &Problem, pairs: &[(usize, usize)]) -> Result<PairingSpec, String> {
    PairingSpec::new(problem, pairs).map_err(|e| e.to_string())
}

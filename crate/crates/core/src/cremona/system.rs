use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Plane curves of degree `d` with assigned multiplicities at labelled
/// points. Entry order is kept as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneLinearSystem {
    d: i64,
    mults: Vec<(String, i64)>,
}

impl PlaneLinearSystem {
    pub fn new<S: Into<String>>(d: i64, mults: impl IntoIterator<Item = (S, i64)>) -> Result<Self> {
        let mults: Vec<(String, i64)> = mults.into_iter().map(|(l, m)| (l.into(), m)).collect();
        let mut seen = BTreeSet::new();
        for (l, m) in &mults {
            if !seen.insert(l.as_str()) {
                return Err(Error::OutOfRange(format!("label `{l}` repeated")));
            }
            if *m < 0 {
                return Err(Error::OutOfRange(format!("negative multiplicity at `{l}`")));
            }
        }
        if d < 0 {
            return Err(Error::OutOfRange(format!("negative degree {d}")));
        }
        Ok(PlaneLinearSystem { d, mults })
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn mults(&self) -> &[(String, i64)] {
        &self.mults
    }

    pub fn mult(&self, label: &str) -> Option<i64> {
        self.mults.iter().find(|(l, _)| l == label).map(|(_, m)| *m)
    }

    /// Multiplicities sorted in decreasing order, labels dropped.
    pub fn pattern(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.mults.iter().map(|(_, m)| *m).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for PlaneLinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.d)?;
        for (i, (l, m)) in self.mults.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{m}@{l}")?;
        }
        write!(f, ")")
    }
}

/// Quadratic transformation centred at three labelled points.
///
/// The degree becomes `2d − m_a − m_b − m_c`. The line through two centres
/// is contracted to a new point, which inherits the label of the third
/// centre under the relabeling and gets multiplicity `d` minus the other
/// two. Every other point keeps its multiplicity. Labels missing from the
/// relabeling keep their name.
pub fn quadratic_transform(
    l: &PlaneLinearSystem,
    centers: [&str; 3],
    relabel: &[(String, String)],
) -> Result<PlaneLinearSystem> {
    if centers[0] == centers[1] || centers[0] == centers[2] || centers[1] == centers[2] {
        return Err(Error::RepeatedCenters);
    }
    let mut cm = [0i64; 3];
    for (k, c) in centers.iter().enumerate() {
        cm[k] = l.mult(c).ok_or_else(|| Error::MissingLabel((*c).to_string()))?;
    }
    let total: i64 = cm.iter().sum();
    let d = 2 * l.d - total;
    let rename = |s: &str| -> String {
        relabel
            .iter()
            .find(|(o, _)| o == s)
            .map(|(_, n)| n.clone())
            .unwrap_or_else(|| s.to_string())
    };
    let mut out = Vec::with_capacity(l.mults.len());
    for (label, m) in &l.mults {
        let m = match centers.iter().position(|c| c == label) {
            Some(k) => l.d - (total - cm[k]),
            None => *m,
        };
        out.push((rename(label), m));
    }
    PlaneLinearSystem::new(d, out)
}

/// Self-intersection, anticanonical pairing and virtual genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Invariants {
    pub self_intersection: i64,
    pub anticanonical_pairing: i64,
    pub virtual_genus: i64,
}

impl Invariants {
    pub fn triple(&self) -> (i64, i64, i64) {
        (
            self.self_intersection,
            self.anticanonical_pairing,
            self.virtual_genus,
        )
    }
}

pub fn system_invariants(l: &PlaneLinearSystem) -> Invariants {
    let d = l.d;
    let ms = l.mults.iter().map(|(_, m)| *m);
    Invariants {
        self_intersection: d * d - ms.clone().map(|m| m * m).sum::<i64>(),
        anticanonical_pairing: 3 * d - ms.clone().sum::<i64>(),
        virtual_genus: (d - 1) * (d - 2) / 2 - ms.map(|m| m * (m - 1) / 2).sum::<i64>(),
    }
}

/// One step of a chain: centres and the relabeling applied afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub centers: [String; 3],
    pub relabel: Vec<(String, String)>,
}

/// Parses `centers: a,b,c ; relabel: old=new,...`, one step per line;
/// blank lines and lines starting with `#` are skipped.
pub fn parse_chain(text: &str) -> Result<Vec<ChainStep>> {
    let mut steps = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let (c, r) = match t.split_once(';') {
            Some((c, r)) => (c.trim(), Some(r.trim())),
            None => (t, None),
        };
        let c = c.strip_prefix("centers:").ok_or_else(|| bad("expected `centers:`"))?;
        let cs: Vec<String> = c.split(',').map(|s| s.trim().to_string()).collect();
        let centers: [String; 3] = cs
            .try_into()
            .map_err(|_| bad("expected three centers"))?;
        if centers.iter().any(|s| s.is_empty()) {
            return Err(bad("empty center label"));
        }
        let mut relabel = Vec::new();
        if let Some(r) = r {
            let r = r.strip_prefix("relabel:").ok_or_else(|| bad("expected `relabel:`"))?;
            for pair in r.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (o, n) = pair.split_once('=').ok_or_else(|| bad("expected `old=new`"))?;
                relabel.push((o.trim().to_string(), n.trim().to_string()));
            }
        }
        steps.push(ChainStep { centers, relabel });
    }
    Ok(steps)
}

/// Final system and every intermediate one, the input first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTrace {
    pub systems: Vec<PlaneLinearSystem>,
}

impl ChainTrace {
    pub fn last(&self) -> &PlaneLinearSystem {
        self.systems.last().expect("trace holds the input")
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.systems.iter().map(|s| s.degree()).collect()
    }

    pub fn invariants(&self) -> Vec<Invariants> {
        self.systems.iter().map(system_invariants).collect()
    }
}

pub fn run_chain(l: &PlaneLinearSystem, steps: &[ChainStep]) -> Result<ChainTrace> {
    let mut systems = vec![l.clone()];
    for s in steps {
        let c = [s.centers[0].as_str(), s.centers[1].as_str(), s.centers[2].as_str()];
        let next = quadratic_transform(systems.last().unwrap(), c, &s.relabel)?;
        systems.push(next);
    }
    Ok(ChainTrace { systems })
}

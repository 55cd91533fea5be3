use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::partition_count;

/// Finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Groups {
    Table(BTreeMap<u32, AbelianGroup>),
    /// `π_*MU`: rank p(k) in degree 2k. With `units`, degree 0 is dropped (sl₁MU).
    Cobordism { units: bool },
}

/// A graded coefficient system such as `π_*R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCoefficients {
    name: String,
    groups: Groups,
}

impl GradedCoefficients {
    /// Builds a system from explicit groups; zero groups are dropped.
    pub fn from_table<I>(name: &str, groups: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, AbelianGroup)>,
    {
        let mut table = BTreeMap::new();
        for (q, g) in groups {
            if let Some(t) = g.torsion.iter().find(|&&t| t < 2) {
                return Err(Error::InvalidArgument(format!("torsion order {t} in degree {q}; need >= 2")));
            }
            if table.contains_key(&q) {
                return Err(Error::InvalidArgument(format!("degree {q} listed twice")));
            }
            if !g.is_zero() {
                table.insert(q, g);
            }
        }
        Ok(GradedCoefficients {
            name: name.to_string(),
            groups: Groups::Table(table),
        })
    }

    /// Reads the text format: a `name <id>` header, then one
    /// `degree rank [torsion orders...]` record per line. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut records = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: `{raw}`", lineno + 1));
            let mut fields = line.split_whitespace();
            let head = fields.next().expect("non-empty line");
            if head == "name" {
                if name.is_some() {
                    return Err(err("second name header"));
                }
                let id = fields.next().ok_or_else(|| err("missing name"))?;
                if fields.next().is_some() {
                    return Err(err("name must be a single identifier"));
                }
                name = Some(id.to_string());
                continue;
            }
            let num = |s: &str| s.parse::<u64>().map_err(|_| err("expected a non-negative integer"));
            let degree = u32::try_from(num(head)?).map_err(|_| err("degree out of range"))?;
            let rank = num(fields.next().ok_or_else(|| err("missing rank"))?)?;
            let torsion = fields.map(num).collect::<Result<Vec<_>>>()?;
            records.push((degree, AbelianGroup { rank, torsion }));
        }
        let name = name.ok_or_else(|| Error::Parse("missing `name` header".into()))?;
        Self::from_table(&name, records)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self, q: u32) -> AbelianGroup {
        match &self.groups {
            Groups::Table(t) => t.get(&q).cloned().unwrap_or_default(),
            Groups::Cobordism { units } => {
                if q % 2 == 1 || (*units && q == 0) {
                    AbelianGroup::zero()
                } else {
                    AbelianGroup::free(partition_count(q / 2, 1))
                }
            }
        }
    }

    pub fn rank(&self, q: u32) -> u64 {
        self.group(q).rank
    }

    /// The lowest odd degree carrying a nonzero group, if any.
    pub fn first_odd_degree(&self) -> Option<u32> {
        match &self.groups {
            Groups::Table(t) => t.keys().copied().find(|q| q % 2 == 1),
            Groups::Cobordism { .. } => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.first_odd_degree().is_none()
    }

    pub fn is_torsion_free(&self) -> bool {
        match &self.groups {
            Groups::Table(t) => t.values().all(AbelianGroup::is_torsion_free),
            Groups::Cobordism { .. } => true,
        }
    }

    /// Nonzero groups in degrees `<= max_degree`.
    pub fn nonzero_groups(&self, max_degree: u32) -> Vec<(u32, AbelianGroup)> {
        (0..=max_degree)
            .map(|q| (q, self.group(q)))
            .filter(|(_, g)| !g.is_zero())
            .collect()
    }
}

/// `MU`, `sl1MU`, or `Z_even_shift(d)` (a single `Z` in even degree `d`).
pub fn builtin_coefficients(name: &str) -> Result<GradedCoefficients> {
    let unknown = || Error::UnknownCoefficients(name.to_string());
    match name {
        "MU" => Ok(GradedCoefficients {
            name: "MU".into(),
            groups: Groups::Cobordism { units: false },
        }),
        "sl1MU" => Ok(GradedCoefficients {
            name: "sl1MU".into(),
            groups: Groups::Cobordism { units: true },
        }),
        _ => {
            let d: u32 = name
                .strip_prefix("Z_even_shift(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(unknown)?;
            if !d.is_multiple_of(2) {
                return Err(unknown());
            }
            GradedCoefficients::from_table(name, [(d, AbelianGroup::free(1))])
        }
    }
}

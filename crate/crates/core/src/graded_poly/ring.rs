use std::fmt;

use crate::error::{Error, Result};

/// A block of generators in a [`RingSpec`].
///
/// Indexed families are infinite unless `last` is set; they are only ever
/// materialized up to an explicit degree bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Single {
        symbol: String,
        degree: u32,
    },
    /// Generators `prefix{i}` for `i = first, first+1, ...` with degree `degree_step * i`.
    Indexed {
        prefix: String,
        first: u32,
        last: Option<u32>,
        degree_step: u32,
    },
}

impl Family {
    pub fn single(symbol: &str, degree: u32) -> Self {
        Family::Single {
            symbol: symbol.to_string(),
            degree,
        }
    }

    /// `prefix{i}` in topological degree `2i`, for `i >= first`.
    pub fn indexed(prefix: &str, first: u32) -> Self {
        Family::Indexed {
            prefix: prefix.to_string(),
            first,
            last: None,
            degree_step: 2,
        }
    }

    /// `prefix{i}` in topological degree `2i`, for `first <= i <= last`.
    pub fn indexed_until(prefix: &str, first: u32, last: u32) -> Self {
        Family::Indexed {
            prefix: prefix.to_string(),
            first,
            last: Some(last),
            degree_step: 2,
        }
    }
}

/// A generator, identified by its family position and index within the family.
///
/// The derived order is the canonical generator order of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: u16,
    index: u32,
}

impl Generator {
    pub fn family(&self) -> usize {
        self.family as usize
    }

    /// Index within an indexed family; `0` for single generators.
    pub fn index(&self) -> u32 {
        self.index
    }
}

/// Free graded-commutative ring on even-degree generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    name: String,
    families: Vec<Family>,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new(name: &str, families: Vec<Family>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRing(format!("{name}: {msg}")));
        if families.len() > u16::MAX as usize {
            return bad("too many generator families".into());
        }
        for fam in &families {
            match fam {
                Family::Single { symbol, degree } => {
                    if !valid_identifier(symbol) {
                        return bad(format!("invalid symbol `{symbol}`"));
                    }
                    if *degree < 2 || degree % 2 != 0 {
                        return bad(format!("`{symbol}` has degree {degree}; need even >= 2"));
                    }
                }
                Family::Indexed {
                    prefix,
                    first,
                    last,
                    degree_step,
                } => {
                    if !valid_identifier(prefix) || prefix.ends_with(|c: char| c.is_ascii_digit()) {
                        return bad(format!("invalid family prefix `{prefix}`"));
                    }
                    if *first == 0 {
                        return bad(format!("family `{prefix}` must start at index >= 1"));
                    }
                    if *degree_step == 0 || degree_step % 2 != 0 {
                        return bad(format!("family `{prefix}` has odd degree step"));
                    }
                    if matches!(last, Some(l) if l < first) {
                        return bad(format!("family `{prefix}` is empty"));
                    }
                }
            }
        }
        let spec = RingSpec {
            name: name.to_string(),
            families,
        };
        // Every symbol must resolve to exactly one generator.
        for (i, fam) in spec.families.iter().enumerate() {
            let probe = match fam {
                Family::Single { symbol, .. } => symbol.clone(),
                Family::Indexed { prefix, first, .. } => format!("{prefix}{first}"),
            };
            let hits = (0..spec.families.len())
                .filter(|&j| spec.lookup_in_family(j, &probe).is_some())
                .count();
            if hits != 1 {
                return bad(format!("symbol `{probe}` is ambiguous"));
            }
            if let Family::Indexed { prefix, .. } = fam {
                for (j, other) in spec.families.iter().enumerate() {
                    if let Family::Indexed { prefix: p2, .. } = other {
                        if i != j && p2 == prefix {
                            return bad(format!("duplicate family prefix `{prefix}`"));
                        }
                    }
                }
            }
        }
        Ok(spec)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.families
            .iter()
            .all(|f| !matches!(f, Family::Indexed { last: None, .. }))
    }

    pub fn degree(&self, g: Generator) -> u32 {
        match &self.families[g.family()] {
            Family::Single { degree, .. } => *degree,
            Family::Indexed { degree_step, .. } => degree_step * g.index,
        }
    }

    /// Half the topological degree.
    pub fn weight(&self, g: Generator) -> u32 {
        self.degree(g) / 2
    }

    pub fn symbol(&self, g: Generator) -> String {
        match &self.families[g.family()] {
            Family::Single { symbol, .. } => symbol.clone(),
            Family::Indexed { prefix, .. } => format!("{prefix}{}", g.index),
        }
    }

    pub fn contains(&self, g: Generator) -> bool {
        match self.families.get(g.family()) {
            None => false,
            Some(Family::Single { .. }) => g.index == 0,
            Some(Family::Indexed { first, last, .. }) => {
                g.index >= *first && last.is_none_or(|l| g.index <= l)
            }
        }
    }

    fn lookup_in_family(&self, family: usize, symbol: &str) -> Option<Generator> {
        let g = match &self.families[family] {
            Family::Single { symbol: s, .. } => {
                (s == symbol).then_some(Generator {
                    family: family as u16,
                    index: 0,
                })?
            }
            Family::Indexed { prefix, .. } => {
                let rest = symbol.strip_prefix(prefix.as_str())?;
                if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0')
                {
                    return None;
                }
                Generator {
                    family: family as u16,
                    index: rest.parse().ok()?,
                }
            }
        };
        self.contains(g).then_some(g)
    }

    /// Resolves a printed symbol such as `b12` or `x`.
    pub fn generator(&self, symbol: &str) -> Result<Generator> {
        (0..self.families.len())
            .find_map(|f| self.lookup_in_family(f, symbol))
            .ok_or_else(|| Error::UnknownGenerator {
                symbol: symbol.to_string(),
                ring: self.name.clone(),
            })
    }

    /// The `index`-th member of the indexed family with the given prefix.
    pub fn indexed_generator(&self, prefix: &str, index: u32) -> Result<Generator> {
        self.generator(&format!("{prefix}{index}"))
    }

    /// All generators of degree at most `max_degree`, in canonical order.
    pub fn generators_up_to(&self, max_degree: u32) -> Vec<Generator> {
        let mut out = Vec::new();
        for (f, fam) in self.families.iter().enumerate() {
            match fam {
                Family::Single { degree, .. } => {
                    if *degree <= max_degree {
                        out.push(Generator {
                            family: f as u16,
                            index: 0,
                        });
                    }
                }
                Family::Indexed {
                    first,
                    last,
                    degree_step,
                    ..
                } => {
                    let top = max_degree / degree_step;
                    let top = last.map_or(top, |l| top.min(l));
                    out.extend((*first..=top).map(|index| Generator {
                        family: f as u16,
                        index,
                    }));
                }
            }
        }
        out
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: Z[", self.name)?;
        for (i, fam) in self.families.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match fam {
                Family::Single { symbol, degree } => write!(f, "{symbol} (deg {degree})")?,
                Family::Indexed {
                    prefix,
                    first,
                    last,
                    degree_step,
                } => match last {
                    Some(l) => write!(f, "{prefix}{first}..{prefix}{l} (deg {degree_step}i)")?,
                    None => write!(f, "{prefix}{first}, {prefix}{}, ... (deg {degree_step}i)", first + 1)?,
                },
            }
        }
        write!(f, "]")
    }
}

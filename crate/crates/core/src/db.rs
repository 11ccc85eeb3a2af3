//! The bundled classification datasets and their file format.
//!
//! A dataset is UTF-8 text. `#` starts a comment, records are blocks that
//! begin with `group "<name>"` followed by `key = value` lines and end at a
//! blank line. The format is deliberately hand-auditable and diff-friendly;
//! every structural invariant is validated at load with line-precise errors.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::arith::FactoredInt;
use crate::graph::{self, DegreePattern};
use crate::orders;
use crate::spectrum::Spectrum;

pub const TABLE2_SOURCE: &str = include_str!("../data/table2.gdb");
pub const CENSUS_SOURCE: &str = include_str!("../data/census.gdb");
pub const EXTRAS_SOURCE: &str = include_str!("../data/extras.gdb");

#[derive(Debug, Error)]
pub enum DbError {
    #[error("io error reading {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate group name \"{name}\"")]
    DuplicateName { line: usize, name: String },
    #[error("duplicate group name \"{name}\" while merging databases")]
    MergeDuplicate { name: String },
    #[error("alias \"{alias}\" of \"{name}\" collides with another name")]
    AliasCollision { name: String, alias: String },
    #[error("record \"{record}\", field {field}: {message}")]
    Invariant {
        record: String,
        field: String,
        message: String,
    },
}

/// Order formulas a record can be tagged with; the tagged formula must
/// reproduce the stored order exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Alternating(u32),
    Linear(u32, u64),
    Unitary(u32, u64),
    SymplecticOrthogonal(u32, u64),
}

impl Family {
    pub fn evaluate(&self) -> Result<FactoredInt, orders::OrderError> {
        match *self {
            Family::Alternating(n) => orders::alternating_order(n),
            Family::Linear(n, q) => orders::linear_order(n, q),
            Family::Unitary(n, q) => orders::unitary_order(n, q),
            Family::SymplecticOrthogonal(n, q) => orders::symplectic_orthogonal_order(n, q),
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        let text = text.trim();
        let open = text.find('(')?;
        if !text.ends_with(')') {
            return None;
        }
        let tag = &text[..open];
        let args: Vec<&str> = text[open + 1..text.len() - 1].split(',').collect();
        match (tag, args.as_slice()) {
            ("alternating", [n]) => Some(Family::Alternating(n.trim().parse().ok()?)),
            ("linear", [n, q]) => Some(Family::Linear(
                n.trim().parse().ok()?,
                q.trim().parse().ok()?,
            )),
            ("unitary", [n, q]) => Some(Family::Unitary(
                n.trim().parse().ok()?,
                q.trim().parse().ok()?,
            )),
            ("symplectic_orthogonal", [n, q]) => Some(Family::SymplecticOrthogonal(
                n.trim().parse().ok()?,
                q.trim().parse().ok()?,
            )),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Alternating(n) => write!(f, "alternating({n})"),
            Family::Linear(n, q) => write!(f, "linear({n},{q})"),
            Family::Unitary(n, q) => write!(f, "unitary({n},{q})"),
            Family::SymplecticOrthogonal(n, q) => write!(f, "symplectic_orthogonal({n},{q})"),
        }
    }
}

/// One row of the classification data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGroupRecord {
    pub name: String,
    pub order: FactoredInt,
    pub out_order: u64,
    pub mu: Option<Spectrum>,
    pub pattern: Option<DegreePattern>,
    pub hod: Option<u64>,
    pub family: Option<Family>,
    pub partner: Option<String>,
    pub aliases: Vec<String>,
    pub simple: bool,
    pub tags: Vec<String>,
    pub source: Option<String>,
}

impl SimpleGroupRecord {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// |S| * |Out(S)| as a factored integer.
    pub fn automorphism_bound(&self) -> FactoredInt {
        self.order.mul(&FactoredInt::factor(self.out_order as u128))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupDatabase {
    records: Vec<SimpleGroupRecord>,
}

#[derive(Default)]
struct RecordBuilder {
    line: usize,
    name: String,
    order: Option<(usize, String)>,
    out: Option<(usize, String)>,
    mu: Option<(usize, String)>,
    pattern: Option<(usize, String)>,
    hod: Option<(usize, String)>,
    family: Option<(usize, String)>,
    partner: Option<(usize, String)>,
    aliases: Option<(usize, String)>,
    simple: Option<(usize, String)>,
    tags: Option<(usize, String)>,
    source: Option<(usize, String)>,
}

fn unquote(text: &str, line: usize) -> Result<String, DbError> {
    let t = text.trim();
    if t.len() >= 2 && t.starts_with('"') && t.ends_with('"') {
        Ok(t[1..t.len() - 1].to_string())
    } else {
        Err(DbError::Syntax {
            line,
            message: format!("expected a quoted name, got `{t}`"),
        })
    }
}

impl RecordBuilder {
    fn invariant(&self, field: &str, message: String) -> DbError {
        DbError::Invariant {
            record: self.name.clone(),
            field: field.into(),
            message,
        }
    }

    fn finish(self) -> Result<SimpleGroupRecord, DbError> {
        let (_, order_text) = self
            .order
            .as_ref()
            .ok_or_else(|| self.invariant("order", "missing".into()))?;
        let order = FactoredInt::parse(order_text)
            .map_err(|e| self.invariant("order", e.to_string()))?;
        let (_, out_text) = self
            .out
            .as_ref()
            .ok_or_else(|| self.invariant("out", "missing".into()))?;
        let out_order: u64 = out_text
            .trim()
            .parse()
            .map_err(|_| self.invariant("out", format!("not a positive integer: `{out_text}`")))?;
        if out_order == 0 {
            return Err(self.invariant("out", "must be positive".into()));
        }
        let mu = match &self.mu {
            Some((_, text)) => Some(
                Spectrum::parse(text).map_err(|e| self.invariant("mu", e.to_string()))?,
            ),
            None => None,
        };
        if let Some(mu) = &mu {
            if mu.primes() != order.support() {
                return Err(self.invariant(
                    "mu",
                    "prime support differs from the order's prime support".into(),
                ));
            }
        }
        let pattern = match &self.pattern {
            Some((_, text)) => {
                let p = DegreePattern::parse(text)
                    .map_err(|e| self.invariant("pattern", e.to_string()))?;
                if p.len() != order.num_primes() {
                    return Err(self.invariant(
                        "pattern",
                        format!(
                            "{} entries for {} primes",
                            p.len(),
                            order.num_primes()
                        ),
                    ));
                }
                Some(p)
            }
            None => None,
        };
        let hod = match &self.hod {
            Some((_, text)) => {
                let h: u64 = text.trim().parse().map_err(|_| {
                    self.invariant("hod", format!("not a positive integer: `{text}`"))
                })?;
                if h == 0 {
                    return Err(self.invariant("hod", "must be positive".into()));
                }
                Some(h)
            }
            None => None,
        };
        let family = match &self.family {
            Some((_, text)) => {
                let fam = Family::parse(text)
                    .ok_or_else(|| self.invariant("family", format!("unknown family `{text}`")))?;
                let computed = fam
                    .evaluate()
                    .map_err(|e| self.invariant("family", e.to_string()))?;
                if computed != order {
                    return Err(self.invariant(
                        "family",
                        format!("formula gives {computed}, record says {order}"),
                    ));
                }
                Some(fam)
            }
            None => None,
        };
        let partner = match &self.partner {
            Some((line, text)) => Some(unquote(text, *line)?),
            None => None,
        };
        let aliases = match &self.aliases {
            Some((line, text)) => text
                .split(',')
                .map(|part| unquote(part, *line))
                .collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        };
        let simple = match &self.simple {
            Some((line, text)) => match text.trim() {
                "true" => true,
                "false" => false,
                other => {
                    return Err(DbError::Syntax {
                        line: *line,
                        message: format!("expected true or false, got `{other}`"),
                    })
                }
            },
            None => true,
        };
        let tags = match &self.tags {
            Some((_, text)) => text.split(',').map(|t| t.trim().to_string()).collect(),
            None => Vec::new(),
        };
        let source = self.source.as_ref().map(|(_, t)| t.trim().to_string());
        Ok(SimpleGroupRecord {
            name: self.name,
            order,
            out_order,
            mu,
            pattern,
            hod,
            family,
            partner,
            aliases,
            simple,
            tags,
            source,
        })
    }
}

impl GroupDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> &[SimpleGroupRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Looks a record up by name or alias.
    pub fn get(&self, name: &str) -> Option<&SimpleGroupRecord> {
        self.records
            .iter()
            .find(|r| r.name == name)
            .or_else(|| {
                self.records
                    .iter()
                    .find(|r| r.aliases.iter().any(|a| a == name))
            })
    }

    pub fn insert(&mut self, record: SimpleGroupRecord, line: usize) -> Result<(), DbError> {
        if self.records.iter().any(|r| r.name == record.name) {
            return Err(DbError::DuplicateName {
                line,
                name: record.name,
            });
        }
        self.records.push(record);
        Ok(())
    }

    fn check_alias_collisions(&self) -> Result<(), DbError> {
        for r in &self.records {
            for alias in &r.aliases {
                let clash = self.records.iter().any(|other| {
                    other.name == *alias
                        || (other.name != r.name && other.aliases.contains(alias))
                });
                if clash {
                    return Err(DbError::AliasCollision {
                        name: r.name.clone(),
                        alias: alias.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn parse_str(text: &str) -> Result<Self, DbError> {
        let mut db = Self::new();
        let mut current: Option<RecordBuilder> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let trimmed = content.trim();
            if trimmed.is_empty() {
                if let Some(builder) = current.take() {
                    let start = builder.line;
                    db.insert(builder.finish()?, start)?;
                }
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("group ") {
                if let Some(builder) = current.take() {
                    let start = builder.line;
                    db.insert(builder.finish()?, start)?;
                }
                let name = unquote(rest, line)?;
                current = Some(RecordBuilder {
                    line,
                    name,
                    ..RecordBuilder::default()
                });
                continue;
            }
            let builder = current.as_mut().ok_or_else(|| DbError::Syntax {
                line,
                message: format!("`{trimmed}` outside a group block"),
            })?;
            let (key, value) = trimmed.split_once('=').ok_or_else(|| DbError::Syntax {
                line,
                message: format!("expected `key = value`, got `{trimmed}`"),
            })?;
            let key = key.trim();
            let value = value.trim().to_string();
            let slot = match key {
                "order" => &mut builder.order,
                "out" => &mut builder.out,
                "mu" => &mut builder.mu,
                "pattern" => &mut builder.pattern,
                "hod" => &mut builder.hod,
                "family" => &mut builder.family,
                "partner" => &mut builder.partner,
                "aliases" => &mut builder.aliases,
                "simple" => &mut builder.simple,
                "tags" => &mut builder.tags,
                "source" => &mut builder.source,
                other => {
                    return Err(DbError::Syntax {
                        line,
                        message: format!("unknown key `{other}`"),
                    })
                }
            };
            if slot.is_some() {
                return Err(DbError::Syntax {
                    line,
                    message: format!("duplicate key `{key}`"),
                });
            }
            *slot = Some((line, value));
        }
        if let Some(builder) = current.take() {
            let start = builder.line;
            db.insert(builder.finish()?, start)?;
        }
        db.check_alias_collisions()?;
        Ok(db)
    }

    pub fn load(path: &Path) -> Result<Self, DbError> {
        let text = std::fs::read_to_string(path).map_err(|e| DbError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse_str(&text)
    }

    /// Parses several sources and merges them in order, rejecting duplicate
    /// names across files.
    pub fn parse_many(sources: &[&str]) -> Result<Self, DbError> {
        let mut merged = Self::new();
        for source in sources {
            merged.merge(Self::parse_str(source)?)?;
        }
        merged.check_alias_collisions()?;
        Ok(merged)
    }

    pub fn load_many(paths: &[impl AsRef<Path>]) -> Result<Self, DbError> {
        let mut merged = Self::new();
        for path in paths {
            merged.merge(Self::load(path.as_ref())?)?;
        }
        merged.check_alias_collisions()?;
        Ok(merged)
    }

    pub fn merge(&mut self, other: Self) -> Result<(), DbError> {
        for record in other.records {
            if self.records.iter().any(|r| r.name == record.name) {
                return Err(DbError::MergeDuplicate { name: record.name });
            }
            self.records.push(record);
        }
        Ok(())
    }

    /// Canonical rendering; `parse_str` of the result reproduces the
    /// database exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!("group \"{}\"\n", r.name));
            out.push_str(&format!("  order = {}\n", r.order));
            out.push_str(&format!("  out = {}\n", r.out_order));
            if let Some(f) = &r.family {
                out.push_str(&format!("  family = {f}\n"));
            }
            if let Some(mu) = &r.mu {
                out.push_str(&format!("  mu = {mu}\n"));
            }
            if let Some(p) = &r.pattern {
                let csv = p
                    .degrees()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push_str(&format!("  pattern = {csv}\n"));
            }
            if let Some(h) = r.hod {
                out.push_str(&format!("  hod = {h}\n"));
            }
            if let Some(p) = &r.partner {
                out.push_str(&format!("  partner = \"{p}\"\n"));
            }
            if !r.aliases.is_empty() {
                let list = r
                    .aliases
                    .iter()
                    .map(|a| format!("\"{a}\""))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!("  aliases = {list}\n"));
            }
            if !r.simple {
                out.push_str("  simple = false\n");
            }
            if !r.tags.is_empty() {
                out.push_str(&format!("  tags = {}\n", r.tags.join(",")));
            }
            if let Some(s) = &r.source {
                out.push_str(&format!("  source = {s}\n"));
            }
        }
        out
    }

    /// Simple records whose largest order prime is exactly p.
    pub fn filter_sp(&self, p: u64) -> Vec<&SimpleGroupRecord> {
        self.records
            .iter()
            .filter(|r| r.simple && r.order.max_prime() == Some(p))
            .collect()
    }

    /// Cross-checks every record against the formulas and structural
    /// invariants; returns verdicts rather than failing fast.
    pub fn verify_consistency(&self) -> ConsistencyReport {
        let mut checks = Vec::new();
        let table2_support: Vec<u64> = vec![2, 3, 5, 7, 11, 13];
        for r in &self.records {
            if r.has_tag("table2") {
                let bad: Vec<u64> = r
                    .order
                    .support()
                    .into_iter()
                    .filter(|p| !table2_support.contains(p))
                    .collect();
                checks.push(ConsistencyCheck {
                    subject: r.name.clone(),
                    check: "prime-support",
                    pass: bad.is_empty(),
                    detail: if bad.is_empty() {
                        "support inside {2,3,5,7,11,13}".into()
                    } else {
                        format!("primes outside the table range: {bad:?}")
                    },
                });
            }
            if let Some(f) = &r.family {
                let (pass, detail) = match f.evaluate() {
                    Ok(computed) if computed == r.order => {
                        (true, format!("{f} reproduces the stored order"))
                    }
                    Ok(computed) => (false, format!("{f} gives {computed}, record says {}", r.order)),
                    Err(e) => (false, e.to_string()),
                };
                checks.push(ConsistencyCheck {
                    subject: r.name.clone(),
                    check: "family-order",
                    pass,
                    detail,
                });
            }
            if let Some(mu) = &r.mu {
                let support_ok = mu.primes() == r.order.support();
                checks.push(ConsistencyCheck {
                    subject: r.name.clone(),
                    check: "mu-support",
                    pass: support_ok,
                    detail: if support_ok {
                        "spectrum support matches order support".into()
                    } else {
                        format!(
                            "spectrum primes {:?} differ from order primes {:?}",
                            mu.primes(),
                            r.order.support()
                        )
                    },
                });
                if support_ok {
                    let g = graph::build_gk(&r.order, mu)
                        .expect("support agreement implies a buildable graph");
                    if let Some(p) = &r.pattern {
                        let derived = g.degree_pattern();
                        checks.push(ConsistencyCheck {
                            subject: r.name.clone(),
                            check: "pattern-vs-mu",
                            pass: derived == *p,
                            detail: format!("stored {p}, derived {derived}"),
                        });
                    }
                    if g.component_count() > 1 {
                        let verdict = g.clique_components_check();
                        checks.push(ConsistencyCheck {
                            subject: r.name.clone(),
                            check: "clique-components",
                            pass: verdict.is_pass(),
                            detail: if verdict.is_pass() {
                                "every component away from 2 is a clique".into()
                            } else {
                                format!(
                                    "component {:?} misses edge {:?}",
                                    verdict.failures[0].component, verdict.failures[0].missing
                                )
                            },
                        });
                    }
                }
            }
            if let Some(partner) = &r.partner {
                match self.get(partner) {
                    Some(other) => {
                        let mutual = other.partner.as_deref() == Some(r.name.as_str());
                        let equal = other.order == r.order;
                        checks.push(ConsistencyCheck {
                            subject: r.name.clone(),
                            check: "partner",
                            pass: mutual && equal,
                            detail: format!(
                                "partner \"{partner}\": mutual link {}, equal order {}",
                                if mutual { "yes" } else { "no" },
                                if equal { "yes" } else { "no" },
                            ),
                        });
                    }
                    None => checks.push(ConsistencyCheck {
                        subject: r.name.clone(),
                        check: "partner",
                        pass: true,
                        detail: format!("partner \"{partner}\" not in this database"),
                    }),
                }
            }
        }
        // equal-order pairs must be documented via partner or alias links
        for pair in orders::coincidence_report(self) {
            let a = self.get(&pair.first).expect("pair comes from this db");
            let b = self.get(&pair.second).expect("pair comes from this db");
            let linked = a.partner.as_deref() == Some(b.name.as_str())
                && b.partner.as_deref() == Some(a.name.as_str())
                || a.aliases.contains(&b.name)
                || b.aliases.contains(&a.name);
            checks.push(ConsistencyCheck {
                subject: format!("{} / {}", pair.first, pair.second),
                check: "coincidence",
                pass: linked,
                detail: if linked {
                    format!("shared order {} is cross-referenced", pair.order)
                } else {
                    format!("shared order {} lacks a cross-reference", pair.order)
                },
            });
        }
        ConsistencyReport { checks }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyCheck {
    pub subject: String,
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub checks: Vec<ConsistencyCheck>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&ConsistencyCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// Table data plus the non-simple comparison partners; the default database
/// for the characterization pipeline.
pub fn bundled_search_db() -> GroupDatabase {
    GroupDatabase::parse_many(&[TABLE2_SOURCE, EXTRAS_SOURCE])
        .expect("bundled datasets are self-consistent")
}

/// The main classification table alone.
pub fn bundled_table2_db() -> GroupDatabase {
    GroupDatabase::parse_str(TABLE2_SOURCE).expect("bundled datasets are self-consistent")
}

/// The census of known characterization multiplicities, plus partners.
pub fn bundled_census_db() -> GroupDatabase {
    GroupDatabase::parse_many(&[CENSUS_SOURCE, EXTRAS_SOURCE])
        .expect("bundled datasets are self-consistent")
}

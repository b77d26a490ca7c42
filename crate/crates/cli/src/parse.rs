//! Profile document parsing and rendering.
//!
//! One payload line per distinct ranking: `<multiplicity>: <ranking>`, where
//! the ranking separates strictly-preferred groups with `>` and ties within
//! a group with `=`, e.g. `2: a > b = c > d`. Names are whitespace-delimited
//! tokens, `#` starts a comment, blank lines are skipped. The roster is the
//! union of names in first-appearance order, and every payload line must
//! rank exactly that set.

use std::fmt;

use rankyank::{AlternativeRoster, ModelError, Profile, WeakOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// The document contains no payload lines.
    EmptyDocument,
    /// A malformed payload line, 1-based.
    Line { line: usize, kind: ParseErrorKind },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingSeparator,
    BadMultiplicity(String),
    ZeroMultiplicity,
    EmptyAlternativeName,
    NameContainsWhitespace(String),
    DuplicateAlternative(String),
    UnknownAlternative(String),
    MissingAlternative(String),
    Model(ModelError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::EmptyDocument => write!(f, "the profile document has no payload lines"),
            ParseError::Line { line, kind } => write!(f, "line {line}: {kind}"),
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingSeparator => {
                write!(f, "expected `<multiplicity>: <ranking>`")
            }
            ParseErrorKind::BadMultiplicity(text) => {
                write!(f, "invalid multiplicity `{text}`")
            }
            ParseErrorKind::ZeroMultiplicity => write!(f, "multiplicity must be positive"),
            ParseErrorKind::EmptyAlternativeName => {
                write!(f, "empty alternative name (stray `>` or `=`?)")
            }
            ParseErrorKind::NameContainsWhitespace(name) => {
                write!(f, "alternative name `{name}` contains whitespace")
            }
            ParseErrorKind::DuplicateAlternative(name) => {
                write!(f, "alternative `{name}` is ranked twice")
            }
            ParseErrorKind::UnknownAlternative(name) => {
                write!(
                    f,
                    "inconsistent roster: `{name}` does not appear on the first payload line"
                )
            }
            ParseErrorKind::MissingAlternative(name) => {
                write!(f, "inconsistent roster: `{name}` is not ranked on this line")
            }
            ParseErrorKind::Model(error) => write!(f, "{error}"),
        }
    }
}

impl std::error::Error for ParseError {}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError::Line { line, kind }
}

/// Parses a profile document into a validated [`Profile`].
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    struct RawEntry {
        groups: Vec<Vec<String>>,
        multiplicity: u64,
        line: usize,
    }

    let mut roster_names: Vec<String> = Vec::new();
    let mut raw_entries: Vec<RawEntry> = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (multiplicity_text, ranking) = content
            .split_once(':')
            .ok_or_else(|| fail(line, ParseErrorKind::MissingSeparator))?;
        let multiplicity_text = multiplicity_text.trim();
        let multiplicity: u64 = multiplicity_text.parse().map_err(|_| {
            fail(
                line,
                ParseErrorKind::BadMultiplicity(multiplicity_text.to_string()),
            )
        })?;
        if multiplicity == 0 {
            return Err(fail(line, ParseErrorKind::ZeroMultiplicity));
        }

        let mut groups: Vec<Vec<String>> = Vec::new();
        let mut ranked: Vec<String> = Vec::new();
        for group_text in ranking.split('>') {
            let mut group = Vec::new();
            for name_text in group_text.split('=') {
                let name = name_text.trim();
                if name.is_empty() {
                    return Err(fail(line, ParseErrorKind::EmptyAlternativeName));
                }
                if name.split_whitespace().count() > 1 {
                    return Err(fail(
                        line,
                        ParseErrorKind::NameContainsWhitespace(name.to_string()),
                    ));
                }
                if ranked.iter().any(|seen| seen == name) {
                    return Err(fail(
                        line,
                        ParseErrorKind::DuplicateAlternative(name.to_string()),
                    ));
                }
                ranked.push(name.to_string());
                group.push(name.to_string());
            }
            groups.push(group);
        }

        if roster_names.is_empty() {
            roster_names = ranked;
        } else {
            for name in &ranked {
                if !roster_names.contains(name) {
                    return Err(fail(line, ParseErrorKind::UnknownAlternative(name.clone())));
                }
            }
            for name in &roster_names {
                if !ranked.contains(name) {
                    return Err(fail(line, ParseErrorKind::MissingAlternative(name.clone())));
                }
            }
        }
        raw_entries.push(RawEntry {
            groups,
            multiplicity,
            line,
        });
    }

    let first_line = match raw_entries.first() {
        Some(entry) => entry.line,
        None => return Err(ParseError::EmptyDocument),
    };
    let roster = AlternativeRoster::new(roster_names)
        .map_err(|e| fail(first_line, ParseErrorKind::Model(e)))?;

    let mut entries = Vec::with_capacity(raw_entries.len());
    for raw in raw_entries {
        let classes: Vec<Vec<usize>> = raw
            .groups
            .iter()
            .map(|group| {
                group
                    .iter()
                    .map(|name| roster.index_of(name).expect("name checked against roster"))
                    .collect()
            })
            .collect();
        let order = WeakOrder::new(classes, roster.alternative_count())
            .map_err(|e| fail(raw.line, ParseErrorKind::Model(e)))?;
        entries.push((order, raw.multiplicity));
    }
    let profile = Profile::new(roster, entries)
        .map_err(|e| fail(first_line, ParseErrorKind::Model(e)))?;
    Ok(profile)
}

/// Renders a profile as a parseable document, one line per entry.
#[cfg_attr(not(test), allow(dead_code))]
pub fn render_profile(profile: &Profile) -> String {
    let roster = profile.roster();
    let mut out = String::new();
    for (order, multiplicity) in profile.entries() {
        let ranking = order
            .classes()
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|&i| roster.name(i))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ");
        out.push_str(&multiplicity.to_string());
        out.push_str(": ");
        out.push_str(&ranking);
        out.push('\n');
    }
    out
}

//! Line-oriented `key: value` reports.

use std::fmt::{self, Display};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Records {
    lines: Vec<(String, String)>,
}

impl Records {
    pub fn new() -> Self {
        Records::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: Records) {
        self.lines.extend(other.lines);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Parses text produced by `Display`; blank lines and `#` comments are
    /// skipped. Keys end at the first `": "`, so they may contain colons.
    pub fn parse(text: &str) -> Records {
        let lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .filter_map(|l| l.split_once(": ").or_else(|| l.strip_suffix(':').map(|k| (k, ""))))
            .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
            .collect();
        Records { lines }
    }
}

impl Display for Records {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Comma-separated rendering of a sequence.
pub fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = Records::new();
        r.push("order", 60);
        r.push("spectrum", join([1, 2, 3, 5]));
        let text = r.to_string();
        assert_eq!(text, "order: 60\nspectrum: 1,2,3,5\n");
        assert_eq!(Records::parse(&text), r);
        assert_eq!(r.get("order"), Some("60"));
    }
}

//! Reports are lists of sections. Humans get titled blocks; machines get one
//! `section<TAB>payload` line per item.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// Title line, then one indented item per line.
    Block,
    /// `title: item item ...` on one line.
    Inline,
    /// `# title: item`, one line per item.
    Comment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub key: &'static str,
    pub title: String,
    pub style: Style,
    pub items: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn push(&mut self, key: &'static str, title: impl Into<String>, style: Style, items: Vec<String>) {
        self.sections.push(Section { key, title: title.into(), style, items });
    }

    pub fn block(&mut self, key: &'static str, title: impl Into<String>, items: Vec<String>) {
        self.push(key, title, Style::Block, items);
    }

    pub fn inline(&mut self, key: &'static str, title: impl Into<String>, items: Vec<String>) {
        self.push(key, title, Style::Inline, items);
    }

    pub fn comment(&mut self, key: &'static str, title: impl Into<String>, items: Vec<String>) {
        self.push(key, title, Style::Comment, items);
    }

    pub fn section(&self, key: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.key == key)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for s in &self.sections {
            match format {
                Format::Machine if s.items.is_empty() => writeln!(out, "{}\t", s.key),
                Format::Machine => s.items.iter().try_for_each(|item| writeln!(out, "{}\t{item}", s.key)),
                Format::Human => match s.style {
                    Style::Block if s.items.is_empty() => writeln!(out, "{}: none", s.title),
                    Style::Block => writeln!(out, "{}:", s.title)
                        .and_then(|_| s.items.iter().try_for_each(|item| writeln!(out, "    {item}"))),
                    Style::Inline if s.items.is_empty() => writeln!(out, "{}:", s.title),
                    Style::Inline => writeln!(out, "{}: {}", s.title, s.items.join(" ")),
                    Style::Comment if s.items.is_empty() => writeln!(out, "# {}", s.title),
                    Style::Comment => s.items.iter().try_for_each(|item| writeln!(out, "# {}: {item}", s.title)),
                },
            }
            .expect("writing to a string");
        }
        out
    }
}

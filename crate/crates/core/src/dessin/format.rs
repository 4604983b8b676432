//! Plain-text dessin files:
//!
//! ```text
//! edges <E>
//! s0 <E images>
//! s1 <E images>
//! ```

use std::fmt::Write;

use super::{Perm, PermDessin};
use crate::error::{Error, Result};

pub fn write_perm_dessin(d: &PermDessin) -> String {
    let line = |name: &str, p: &Perm| {
        let images: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
        format!("{name} {}\n", images.join(" "))
    };
    format!(
        "edges {}\n{}{}",
        d.edge_count(),
        line("s0", &d.sigma0),
        line("s1", &d.sigma1)
    )
}

pub fn parse_perm_dessin(text: &str) -> Result<PermDessin> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut field = |name: &str| -> Result<Vec<usize>> {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing `{name}` line")))?;
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some(name) {
            return Err(Error::Parse(format!(
                "expected a line starting with `{name}`"
            )));
        }
        tokens
            .map(|t| {
                t.parse()
                    .map_err(|e| Error::Parse(format!("bad integer {t:?} in `{name}`: {e}")))
            })
            .collect()
    };
    let header = field("edges")?;
    let [e] = header[..] else {
        return Err(Error::Parse("`edges` takes exactly one count".into()));
    };
    let s0 = field("s0")?;
    let s1 = field("s1")?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after `s1`".into()));
    }
    for (name, s) in [("s0", &s0), ("s1", &s1)] {
        if s.len() != e {
            return Err(Error::Parse(format!(
                "`{name}` has {} entries, expected {e}",
                s.len()
            )));
        }
    }
    PermDessin::new(Perm::from_images(s0)?, Perm::from_images(s1)?)
}

/// One line `<black> <white>` per edge, vertices numbered by cycle.
pub fn write_graph(d: &PermDessin) -> String {
    let black = d.sigma0.cycle_labels();
    let white = d.sigma1.cycle_labels();
    let mut out = String::new();
    for (b, w) in black.iter().zip(&white) {
        writeln!(out, "{b} {w}").unwrap();
    }
    out
}

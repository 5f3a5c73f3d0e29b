//! Burmeister `.cxt` files.
//!
//! Layout: `B`, the context name, `|G|`, `|M|`, one line per object name,
//! one line per attribute name, then one `X`/`.` row per object.

use std::fmt::Write;

use domlat_core::bitset::BitRow;
use domlat_core::{FormalContext, Partition};

use crate::error::CliError;

pub fn write_cxt(ctx: &FormalContext, name: &str) -> String {
    let (g, m) = (ctx.objects().len(), ctx.attributes().len());
    let mut out = String::with_capacity(16 + g * (m + 16) + m * 16);
    let _ = writeln!(out, "B\n{name}\n{g}\n{m}");
    for p in ctx.objects().iter().chain(ctx.attributes()) {
        let _ = writeln!(out, "{p}");
    }
    for i in 0..g {
        out.extend((0..m).map(|j| if ctx.incident(i, j) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}

/// Parses a `.cxt` file whose object and attribute names are partitions.
/// Returns the context name and the context.
///
/// A single blank line after the attribute count, as written by some tools,
/// is tolerated.
pub fn parse_cxt(text: &str) -> Result<(String, FormalContext), CliError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let mut next = |what: &str| lines.next().ok_or_else(|| CliError::parse(0, format!("missing {what}")));

    let (ln, magic) = next("header")?;
    if magic != "B" {
        return Err(CliError::parse(ln, "expected `B`"));
    }
    let (_, name) = next("context name")?;
    let count = |(ln, s): (usize, &str)| {
        s.trim().parse::<usize>().map_err(|_| CliError::parse(ln, format!("bad count `{s}`")))
    };
    let g = count(next("object count")?)?;
    let m = count(next("attribute count")?)?;

    let mut first = next("names")?;
    if first.1.is_empty() && g + m > 0 {
        first = next("names")?;
    }
    let mut names = Vec::with_capacity(g + m);
    let mut pending = Some(first);
    for _ in 0..g + m {
        let (ln, s) = match pending.take() {
            Some(l) => l,
            None => next("names")?,
        };
        let p: Partition = s.parse().map_err(|e| CliError::parse(ln, format!("`{s}`: {e}")))?;
        names.push(p);
    }
    let attributes = names.split_off(g);
    let objects = names;

    let mut rows = Vec::with_capacity(g);
    for i in 0..g {
        let (ln, s) = match pending.take() {
            Some(l) => l,
            None => next("incidence row")?,
        };
        if s.chars().count() != m {
            return Err(CliError::parse(ln, format!("row {} has length {}, expected {m}", i + 1, s.len())));
        }
        let mut row = BitRow::new(m);
        for (j, c) in s.chars().enumerate() {
            match c {
                'X' | 'x' => row.set(j, true),
                '.' => {}
                _ => return Err(CliError::parse(ln, format!("unexpected `{c}`"))),
            }
        }
        rows.push(row);
    }
    let ctx = FormalContext::new(objects, attributes, rows)?;
    Ok((name.to_string(), ctx))
}

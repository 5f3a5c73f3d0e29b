//! Cross table with arrow annotations: `X`, `<->`, `<-`, `->` or empty.

use domlat_core::{ArrowRelations, FormalContext};

use crate::error::CliError;

pub fn cell(ctx: &FormalContext, arrows: &ArrowRelations, g: usize, m: usize) -> &'static str {
    match (ctx.incident(g, m), arrows.is_down(g, m), arrows.is_up(g, m)) {
        (true, _, _) => "X",
        (false, true, true) => "<->",
        (false, true, false) => "<-",
        (false, false, true) => "->",
        (false, false, false) => "",
    }
}

pub fn write_csv(ctx: &FormalContext, arrows: &ArrowRelations) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let to_err = |e: csv::Error| CliError::usage(format!("csv: {e}"));
    let mut header = vec![String::new()];
    header.extend(ctx.attributes().iter().map(|m| m.to_string()));
    w.write_record(&header).map_err(to_err)?;
    for (g, obj) in ctx.objects().iter().enumerate() {
        let mut record = vec![obj.to_string()];
        record.extend((0..ctx.attributes().len()).map(|m| cell(ctx, arrows, g, m).to_string()));
        w.write_record(&record).map_err(to_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

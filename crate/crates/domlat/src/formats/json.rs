//! JSON export of a standard context with its arrows and their theorem provenance.

use std::collections::BTreeMap;

use domlat_core::closure::Subcontext;
use domlat_core::irreducible::{join_irreducibles, meet_irreducibles};
use domlat_core::theorems::{all_predicted, ArrowKind, Provenance};
use domlat_core::{ArrowRelations, FormalContext, IrreducibleInfo, Partition};
use serde::Serialize;

use crate::formats::listing::classify;

#[derive(Serialize)]
pub struct Irreducible {
    pub name: String,
    #[serde(rename = "type")]
    pub type_label: &'static str,
    pub params: BTreeMap<&'static str, u32>,
    pub unique_cover: String,
}

impl From<&IrreducibleInfo> for Irreducible {
    fn from(info: &IrreducibleInfo) -> Self {
        Self {
            name: info.partition.to_string(),
            type_label: info.type_label().as_str(),
            params: info.template.params().into_iter().collect(),
            unique_cover: info.unique_cover.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct Source {
    pub theorem: &'static str,
    pub params: BTreeMap<&'static str, u32>,
}

impl From<&Provenance> for Source {
    fn from(p: &Provenance) -> Self {
        Self { theorem: p.source.as_str(), params: p.params.iter().copied().collect() }
    }
}

#[derive(Serialize)]
pub struct Arrow {
    pub g: String,
    pub m: String,
    pub sources: Vec<Source>,
}

#[derive(Serialize, Default)]
pub struct Arrows {
    pub double: Vec<Arrow>,
    pub down_only: Vec<Arrow>,
    pub up_only: Vec<Arrow>,
}

#[derive(Serialize)]
pub struct Context {
    pub n: u32,
    pub objects: Vec<Irreducible>,
    pub attributes: Vec<Irreducible>,
    pub incidence: Vec<Vec<bool>>,
    pub arrows: Arrows,
}

pub fn context_json(n: u32, ctx: &FormalContext, arrows: &ArrowRelations) -> String {
    let provenance: BTreeMap<(Partition, Partition), Vec<Provenance>> =
        all_predicted(n).into_iter().map(|a| ((a.g, a.m), a.provenance)).collect();
    let mut out = Arrows::default();
    for (g, m, kind) in classify(arrows) {
        let (gp, mp) = (&ctx.objects()[g], &ctx.attributes()[m]);
        let sources = provenance
            .get(&(gp.clone(), mp.clone()))
            .map(|v| v.iter().map(Source::from).collect())
            .unwrap_or_default();
        let arrow = Arrow { g: gp.to_string(), m: mp.to_string(), sources };
        match kind {
            ArrowKind::Double => out.double.push(arrow),
            ArrowKind::DownOnly => out.down_only.push(arrow),
            ArrowKind::UpOnly => out.up_only.push(arrow),
        }
    }
    let doc = Context {
        n,
        objects: join_irreducibles(n).iter().map(Irreducible::from).collect(),
        attributes: meet_irreducibles(n).iter().map(Irreducible::from).collect(),
        incidence: (0..ctx.objects().len())
            .map(|g| (0..ctx.attributes().len()).map(|m| ctx.incident(g, m)).collect())
            .collect(),
        arrows: out,
    };
    to_string(&doc)
}

#[derive(Serialize)]
pub struct Closure {
    pub generator: String,
    pub format: [usize; 2],
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
}

impl Closure {
    pub fn new(ctx: &FormalContext, generator: String, sub: &Subcontext) -> Self {
        Self {
            generator,
            format: [sub.objects.len(), sub.attributes.len()],
            objects: sub.objects.iter().map(|&g| ctx.objects()[g].to_string()).collect(),
            attributes: sub.attributes.iter().map(|&m| ctx.attributes()[m].to_string()).collect(),
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

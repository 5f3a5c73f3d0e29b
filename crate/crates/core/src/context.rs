//! Formal contexts, the standard context `K(L_n)` and its arrow relations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bitset::BitRow;
use crate::error::Error;
use crate::irreducible::{join_irreducibles, meet_irreducibles, IrreducibleInfo};
use crate::partition::Partition;

/// A context `(G, M, I)` whose objects and attributes are partitions.
///
/// Incidence is stored twice, as object rows and attribute columns, so that
/// intents and extents are both single packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<Partition>,
    attributes: Vec<Partition>,
    rows: Vec<BitRow>,
    cols: Vec<BitRow>,
}

impl FormalContext {
    /// Builds a context from object rows; each row must have one bit per attribute.
    pub fn new(
        objects: Vec<Partition>,
        attributes: Vec<Partition>,
        rows: Vec<BitRow>,
    ) -> Result<Self, Error> {
        if rows.len() != objects.len() {
            return Err(Error::IndexOutOfRange { index: rows.len(), len: objects.len() });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != attributes.len()) {
            return Err(Error::IndexOutOfRange { index: bad.len(), len: attributes.len() });
        }
        let mut cols: Vec<BitRow> = attributes.iter().map(|_| BitRow::new(objects.len())).collect();
        for (g, row) in rows.iter().enumerate() {
            for m in row.ones() {
                cols[m].set(g, true);
            }
        }
        Ok(Self { objects, attributes, rows, cols })
    }

    pub fn from_fn(
        objects: Vec<Partition>,
        attributes: Vec<Partition>,
        mut incident: impl FnMut(&Partition, &Partition) -> bool,
    ) -> Self {
        let rows = objects
            .iter()
            .map(|g| {
                let mut row = BitRow::new(attributes.len());
                for (j, m) in attributes.iter().enumerate() {
                    row.set(j, incident(g, m));
                }
                row
            })
            .collect();
        Self::new(objects, attributes, rows).expect("rows built to size")
    }

    pub fn objects(&self) -> &[Partition] {
        &self.objects
    }

    pub fn attributes(&self) -> &[Partition] {
        &self.attributes
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].get(m)
    }

    pub fn row(&self, g: usize) -> &BitRow {
        &self.rows[g]
    }

    pub fn column(&self, m: usize) -> &BitRow {
        &self.cols[m]
    }

    pub fn object_index(&self, p: &Partition) -> Option<usize> {
        self.objects.binary_search(p).ok().or_else(|| self.objects.iter().position(|q| q == p))
    }

    pub fn attribute_index(&self, p: &Partition) -> Option<usize> {
        self.attributes.binary_search(p).ok().or_else(|| self.attributes.iter().position(|q| q == p))
    }

    /// Attribute indices shared by object `g`.
    pub fn object_intent(&self, g: usize) -> Result<Vec<usize>, Error> {
        let row = self
            .rows
            .get(g)
            .ok_or(Error::IndexOutOfRange { index: g, len: self.objects.len() })?;
        Ok(row.ones().collect())
    }

    /// Object indices having attribute `m`.
    pub fn attribute_extent(&self, m: usize) -> Result<Vec<usize>, Error> {
        let col = self
            .cols
            .get(m)
            .ok_or(Error::IndexOutOfRange { index: m, len: self.attributes.len() })?;
        Ok(col.ones().collect())
    }

    /// True iff all rows are pairwise distinct and all columns are pairwise distinct.
    pub fn check_clarified_reduced(&self) -> bool {
        distinct(&self.rows) && distinct(&self.cols)
    }
}

fn distinct(rows: &[BitRow]) -> bool {
    let set: BTreeSet<&[u64]> = rows.iter().map(BitRow::words).collect();
    set.len() == rows.len()
}

/// The standard context `(J(L_n), M(L_n), <=)` in descending lexicographic order.
pub fn standard_context(n: u32) -> Result<FormalContext, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let objects = join_irreducibles(n).into_iter().map(|i| i.partition).collect();
    let attributes = meet_irreducibles(n).into_iter().map(|i| i.partition).collect();
    Ok(FormalContext::from_fn(objects, attributes, |g, m| g.dominated_by(m)))
}

/// Down-, up- and double arrows as `(object index, attribute index)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArrowRelations {
    pub down: BTreeSet<(usize, usize)>,
    pub up: BTreeSet<(usize, usize)>,
    pub double: BTreeSet<(usize, usize)>,
}

impl ArrowRelations {
    /// Fills `double` as `down ∩ up`.
    pub fn from_down_up(down: BTreeSet<(usize, usize)>, up: BTreeSet<(usize, usize)>) -> Self {
        let double = down.intersection(&up).copied().collect();
        Self { down, up, double }
    }

    pub fn down_only(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.down.difference(&self.up)
    }

    pub fn up_only(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.up.difference(&self.down)
    }

    pub fn is_down(&self, g: usize, m: usize) -> bool {
        self.down.contains(&(g, m))
    }

    pub fn is_up(&self, g: usize, m: usize) -> bool {
        self.up.contains(&(g, m))
    }
}

/// Arrow relations straight from the definition: `g ↙ m` iff `g` lacks `m`
/// and every object whose intent strictly contains `g'` has `m`; `g ↗ m` dually
/// on extents.
pub fn arrows_bruteforce(ctx: &FormalContext) -> ArrowRelations {
    let mut down = BTreeSet::new();
    let mut up = BTreeSet::new();
    let (g_count, m_count) = (ctx.objects.len(), ctx.attributes.len());

    for g in 0..g_count {
        let intent = &ctx.rows[g];
        let larger: Vec<&BitRow> =
            ctx.rows.iter().filter(|h| intent.is_proper_subset(h)).collect();
        for m in 0..m_count {
            if !intent.get(m) && larger.iter().all(|h| h.get(m)) {
                down.insert((g, m));
            }
        }
    }
    for m in 0..m_count {
        let extent = &ctx.cols[m];
        let larger: Vec<&BitRow> =
            ctx.cols.iter().filter(|n| extent.is_proper_subset(n)).collect();
        for g in 0..g_count {
            if !extent.get(g) && larger.iter().all(|n| n.get(g)) {
                up.insert((g, m));
            }
        }
    }
    ArrowRelations::from_down_up(down, up)
}

/// Arrow relations via unique covers: `g ↙ m` iff `g ≰ m` and `g̃ ≤ m`;
/// `g ↗ m` iff `g ≰ m` and `g ≤ m̃`. Needs no lattice and no intents.
pub fn arrows_via_covers(n: u32) -> Result<ArrowRelations, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    Ok(arrows_from_irreducibles(&join_irreducibles(n), &meet_irreducibles(n)))
}

pub(crate) fn arrows_from_irreducibles(
    joins: &[IrreducibleInfo],
    meets: &[IrreducibleInfo],
) -> ArrowRelations {
    let mut down = BTreeSet::new();
    let mut up = BTreeSet::new();
    for (gi, g) in joins.iter().enumerate() {
        for (mi, m) in meets.iter().enumerate() {
            if g.partition.dominated_by(&m.partition) {
                continue;
            }
            if g.unique_cover.dominated_by(&m.partition) {
                down.insert((gi, mi));
            }
            if g.partition.dominated_by(&m.unique_cover) {
                up.insert((gi, mi));
            }
        }
    }
    ArrowRelations::from_down_up(down, up)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn k7_shape_and_cells() {
        let ctx = standard_context(7).unwrap();
        assert_eq!((ctx.objects().len(), ctx.attributes().len()), (11, 11));
        let g = ctx.object_index(&p(&[5, 1, 1])).unwrap();
        let m = ctx.attribute_index(&p(&[5, 1, 1])).unwrap();
        assert!(ctx.incident(g, m));
        let g = ctx.object_index(&p(&[4, 3])).unwrap();
        assert!(!ctx.incident(g, m));
    }

    #[test]
    fn intents_and_extents() {
        let ctx = standard_context(7).unwrap();
        let top = ctx.object_index(&p(&[7])).unwrap();
        // (7) is below no meet-irreducible; its cell against (6,1) is a double arrow.
        assert!(ctx.object_intent(top).unwrap().is_empty());
        let bottom = ctx.attribute_index(&p(&[1; 7])).unwrap();
        let g = ctx.object_index(&p(&[2, 1, 1, 1, 1, 1])).unwrap();
        assert!(ctx.attribute_extent(bottom).unwrap().is_empty());
        assert_eq!(ctx.object_intent(g).unwrap().len(), 10);
        assert!(!ctx.incident(g, bottom));
        assert!(ctx.object_intent(11).is_err());
        assert!(ctx.attribute_extent(99).is_err());
    }

    #[test]
    fn k7_arrow_examples() {
        let ctx = standard_context(7).unwrap();
        let arrows = arrows_bruteforce(&ctx);
        let idx = |g: &[u32], m: &[u32]| {
            (ctx.object_index(&p(g)).unwrap(), ctx.attribute_index(&p(m)).unwrap())
        };
        let c = idx(&[4, 1, 1, 1], &[3, 2, 2]);
        assert!(arrows.down.contains(&c) && !arrows.up.contains(&c));
        let c = idx(&[3, 3, 1], &[4, 1, 1, 1]);
        assert!(arrows.up.contains(&c) && !arrows.down.contains(&c));
        assert!(arrows.double.contains(&idx(&[7], &[6, 1])));
        assert_eq!(arrows.double.len(), 11);
        assert_eq!(arrows.down_only().count(), 1);
        assert_eq!(arrows.up_only().count(), 1);
        assert_eq!(arrows_via_covers(7).unwrap(), arrows);
    }

    #[test]
    fn small_n_arrows() {
        let a2 = arrows_via_covers(2).unwrap();
        assert_eq!(a2.double.iter().copied().collect::<Vec<_>>(), [(0, 0)]);
        let ctx3 = standard_context(3).unwrap();
        let a3 = arrows_via_covers(3).unwrap();
        assert_eq!(a3, arrows_bruteforce(&ctx3));
        // (3) <-> (2,1), (2,1) <-> (1,1,1)
        let expected: BTreeSet<(usize, usize)> = [
            (ctx3.object_index(&p(&[3])).unwrap(), ctx3.attribute_index(&p(&[2, 1])).unwrap()),
            (ctx3.object_index(&p(&[2, 1])).unwrap(), ctx3.attribute_index(&p(&[1, 1, 1])).unwrap()),
        ]
        .into_iter()
        .collect();
        assert_eq!(a3.double, expected);
        assert_eq!(a3.down, a3.double);
        assert_eq!(a3.up, a3.double);
        assert!(arrows_via_covers(1).is_err());
        assert!(standard_context(1).is_err());
    }

    #[test]
    fn clarified_reduced() {
        assert!(standard_context(7).unwrap().check_clarified_reduced());
        let mut row = BitRow::new(2);
        row.set(0, true);
        row.set(1, true);
        let full = FormalContext::new(
            alloc::vec![p(&[2]), p(&[1, 1])],
            alloc::vec![p(&[2]), p(&[1, 1])],
            alloc::vec![row.clone(), row],
        )
        .unwrap();
        assert!(!full.check_clarified_reduced());
    }
}

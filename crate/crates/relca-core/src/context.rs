//! Formal contexts and derivation operators.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scaling::ScaledAttribute;
use crate::set::{full, FixedBitSet, ObjSet};

/// An attribute of a formal context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Attribute {
    Plain(String),
    Scaled(ScaledAttribute),
}

impl Attribute {
    pub fn as_scaled(&self) -> Option<&ScaledAttribute> {
        match self {
            Attribute::Scaled(s) => Some(s),
            Attribute::Plain(_) => None,
        }
    }
}

/// A formal context `<G, M, I>`.
///
/// Plain attributes form a prefix in input order. Scaled attributes follow in
/// canonical order, so two contexts over the same objects and base are equal
/// exactly when their attribute sets are equal. Incidence is stored column-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    id: String,
    objects: Vec<String>,
    attributes: Vec<Attribute>,
    base_count: usize,
    columns: Vec<ObjSet>,
}

impl FormalContext {
    /// Builds a plain context from incidence rows (one row per object).
    pub fn new(
        id: impl Into<String>,
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: &[Vec<bool>],
    ) -> Result<Self> {
        if rows.len() != objects.len() {
            return Err(Error::InvalidArgument(format!(
                "{} rows for {} objects",
                rows.len(),
                objects.len()
            )));
        }
        let mut columns = alloc::vec![ObjSet::with_capacity(objects.len()); attributes.len()];
        for (g, row) in rows.iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(Error::InvalidArgument(format!(
                    "row of object {} has {} cells, expected {}",
                    objects[g],
                    row.len(),
                    attributes.len()
                )));
            }
            for (m, &cell) in row.iter().enumerate() {
                columns[m].set(g, cell);
            }
        }
        Self::from_columns(id, objects, attributes, columns)
    }

    /// Builds a plain context from one object set per attribute.
    pub fn from_columns(
        id: impl Into<String>,
        objects: Vec<String>,
        attributes: Vec<String>,
        columns: Vec<ObjSet>,
    ) -> Result<Self> {
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::InvalidArgument(format!("duplicate object {o}")));
            }
        }
        for (i, m) in attributes.iter().enumerate() {
            if attributes[..i].contains(m) {
                return Err(Error::InvalidArgument(format!("duplicate attribute {m}")));
            }
        }
        if columns.len() != attributes.len() || columns.iter().any(|c| c.len() != objects.len()) {
            return Err(Error::InvalidArgument(String::from("incidence dimensions do not match")));
        }
        Ok(FormalContext {
            id: id.into(),
            base_count: attributes.len(),
            attributes: attributes.into_iter().map(Attribute::Plain).collect(),
            objects,
            columns,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    /// `|M⁰|`, the length of the plain prefix.
    pub fn base_count(&self) -> usize {
        self.base_count
    }

    pub fn scaled(&self) -> impl Iterator<Item = &ScaledAttribute> + '_ {
        self.attributes[self.base_count..].iter().filter_map(Attribute::as_scaled)
    }

    pub fn scaled_vec(&self) -> Vec<ScaledAttribute> {
        self.scaled().cloned().collect()
    }

    pub fn column(&self, m: usize) -> &ObjSet {
        &self.columns[m]
    }

    pub fn columns(&self) -> &[ObjSet] {
        &self.columns
    }

    pub fn incidence(&self, g: usize, m: usize) -> bool {
        self.columns[m].contains(g)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute_index(&self, attribute: &Attribute) -> Option<usize> {
        match attribute {
            Attribute::Plain(_) => self.attributes[..self.base_count].iter().position(|a| a == attribute),
            Attribute::Scaled(s) => self.scaled_index(s),
        }
    }

    pub fn scaled_index(&self, s: &ScaledAttribute) -> Option<usize> {
        self.attributes[self.base_count..]
            .binary_search_by(|a| a.as_scaled().map_or(core::cmp::Ordering::Less, |b| b.cmp(s)))
            .ok()
            .map(|i| i + self.base_count)
    }

    pub fn all_objects(&self) -> ObjSet {
        full(self.objects.len())
    }

    pub fn all_attributes(&self) -> FixedBitSet {
        full(self.attributes.len())
    }

    /// `A↑`: the attributes shared by every object of `a`.
    pub fn derive_intent(&self, a: &ObjSet) -> Result<FixedBitSet> {
        if a.len() > self.objects.len() && a.ones().any(|g| g >= self.objects.len()) {
            return Err(Error::InvalidArgument(String::from("unknown object index")));
        }
        let mut out = FixedBitSet::with_capacity(self.attributes.len());
        for (m, col) in self.columns.iter().enumerate() {
            if a.ones().all(|g| col.contains(g)) {
                out.insert(m);
            }
        }
        Ok(out)
    }

    /// `B↓`: the objects having every attribute of `b`.
    pub fn derive_extent(&self, b: &FixedBitSet) -> Result<ObjSet> {
        let mut out = self.all_objects();
        for m in b.ones() {
            let col = self
                .columns
                .get(m)
                .ok_or_else(|| Error::InvalidArgument(String::from("unknown attribute index")))?;
            out.intersect_with(col);
        }
        Ok(out)
    }

    /// Adds scaled attributes with their columns, keeping canonical order.
    /// Attributes already present are ignored.
    pub fn with_scaled(&self, extra: impl IntoIterator<Item = (ScaledAttribute, ObjSet)>) -> Self {
        let mut scaled: Vec<(ScaledAttribute, ObjSet)> = self
            .scaled()
            .cloned()
            .zip(self.columns[self.base_count..].iter().cloned())
            .collect();
        scaled.extend(extra);
        scaled.sort_by(|a, b| a.0.cmp(&b.0));
        scaled.dedup_by(|a, b| a.0 == b.0);
        self.rebuild(scaled)
    }

    /// Keeps the plain prefix and the scaled attributes accepted by `keep`.
    pub fn retain_scaled(&self, mut keep: impl FnMut(&ScaledAttribute) -> bool) -> Self {
        let scaled = self
            .scaled()
            .cloned()
            .zip(self.columns[self.base_count..].iter().cloned())
            .filter(|(a, _)| keep(a))
            .collect();
        self.rebuild(scaled)
    }

    /// The base context `<G, M⁰, I⁰>`.
    pub fn base(&self) -> Self {
        self.rebuild(Vec::new())
    }

    fn rebuild(&self, scaled: Vec<(ScaledAttribute, ObjSet)>) -> Self {
        let mut attributes: Vec<Attribute> = self.attributes[..self.base_count].to_vec();
        let mut columns: Vec<ObjSet> = self.columns[..self.base_count].to_vec();
        for (a, c) in scaled {
            attributes.push(Attribute::Scaled(a));
            columns.push(c);
        }
        FormalContext {
            id: self.id.clone(),
            objects: self.objects.clone(),
            attributes,
            base_count: self.base_count,
            columns,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.objects != other.objects {
            return Err(Error::Incompatible(format!(
                "contexts {} and {} have different objects",
                self.id, other.id
            )));
        }
        if self.attributes[..self.base_count] != other.attributes[..other.base_count]
            || self.columns[..self.base_count] != other.columns[..other.base_count]
        {
            return Err(Error::Incompatible(format!(
                "contexts {} and {} have different base attributes",
                self.id, other.id
            )));
        }
        Ok(())
    }

    /// `M⁰ ∪ (M ∩ M′)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.retain_scaled(|a| other.scaled_index(a).is_some()))
    }

    /// `M⁰ ∪ (M ∪ M′)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_scaled(
            other
                .scaled()
                .cloned()
                .zip(other.columns[other.base_count..].iter().cloned()),
        ))
    }

    /// Attribute-set inclusion.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.scaled().all(|a| other.scaled_index(a).is_some()))
    }
}

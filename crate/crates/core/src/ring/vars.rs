use std::sync::Arc;

use crate::error::{Error, Result};

/// Role of a variable inside a [`VarTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    /// Coordinate of the base ring.
    Base,
    /// Fresh variable attached to an arrow (`x_ij`, or a merge variable for parallel arrows).
    Arrow,
    /// Fresh variable attached to a vertex (`y_i`).
    Vertex,
}

/// Ordered, append-only table of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    kinds: Vec<VarKind>,
}

/// Shared handle to a variable table; polynomials keep one of these.
pub type Vars = Arc<VarTable>;

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarTable {
    /// Base-ring table from a list of names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Vars> {
        let table = VarTable {
            names: Vec::new(),
            kinds: Vec::new(),
        };
        let pairs: Vec<(String, VarKind)> = names
            .iter()
            .map(|n| (n.as_ref().to_string(), VarKind::Base))
            .collect();
        table.extend(&pairs)
    }

    /// Returns a new table with `extra` appended; the receiver is unchanged.
    pub fn extend(&self, extra: &[(String, VarKind)]) -> Result<Vars> {
        let mut out = self.clone();
        for (name, kind) in extra {
            if !valid_identifier(name) {
                return Err(Error::InvalidVarTable(format!("`{name}` is not an identifier")));
            }
            if out.index_of(name).is_some() {
                return Err(Error::InvalidVarTable(format!("duplicate variable `{name}`")));
            }
            out.names.push(name.clone());
            out.kinds.push(*kind);
        }
        Ok(Arc::new(out))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.kinds[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of all variables with the given kind.
    pub fn indices_of_kind(&self, kind: VarKind) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.kinds[i] == kind).collect()
    }

    /// `true` when `self` is a prefix of `other` (same names and kinds).
    pub fn is_prefix_of(&self, other: &VarTable) -> bool {
        self.len() <= other.len()
            && self.names[..] == other.names[..self.len()]
            && self.kinds[..] == other.kinds[..self.len()]
    }

    /// First name of the form `base`, `base_`, `base__`, ... not already taken,
    /// also avoiding the names listed in `reserved`.
    pub fn fresh_name(&self, base: &str, reserved: &[String]) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() || reserved.contains(&name) {
            name.push('_');
        }
        name
    }
}

pub(crate) fn same_table(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarTable::new(&["x", "x"]).is_err());
        assert!(VarTable::new(&["1x"]).is_err());
        assert!(VarTable::new(&["x_1", "y2"]).is_ok());
    }

    #[test]
    fn extension_appends() {
        let base = VarTable::new(&["x1", "x2"]).unwrap();
        let ext = base
            .extend(&[("y".to_string(), VarKind::Vertex)])
            .unwrap();
        assert_eq!(ext.len(), 3);
        assert!(base.is_prefix_of(&ext));
        assert_eq!(ext.kind(2), VarKind::Vertex);
        assert_eq!(ext.fresh_name("y", &[]), "y_");
        assert_eq!(ext.fresh_name("t", &["t".to_string()]), "t_");
    }
}

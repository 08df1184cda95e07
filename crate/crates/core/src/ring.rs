//! Weighted polynomial ring descriptors.
//!
//! A [`RingDescriptor`] names the variables of a polynomial ring over the
//! rationals and assigns each a positive integer weight. Weights feed the
//! grading everywhere: degrees, homogeneity, default monomial orders and
//! Hilbert series denominators.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingVar {
    pub name: String,
    pub weight: u32,
}

#[derive(Debug, Clone)]
pub struct RingDescriptor {
    vars: Vec<RingVar>,
    weights: Vec<u32>,
    by_name: HashMap<String, usize>,
}

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}
impl Eq for RingDescriptor {}

impl RingDescriptor {
    /// Build a descriptor from `(name, weight)` pairs. Names must be unique
    /// and weights at least 1.
    pub fn new<S: Into<String>>(vars: Vec<(S, u32)>) -> Result<Arc<Self>> {
        let mut out = RingDescriptor {
            vars: Vec::with_capacity(vars.len()),
            weights: Vec::with_capacity(vars.len()),
            by_name: HashMap::new(),
        };
        for (name, weight) in vars {
            let name = name.into();
            if weight == 0 {
                return Err(Error::InvalidRing(format!(
                    "variable `{name}` has weight 0; weights must be positive"
                )));
            }
            if out.by_name.insert(name.clone(), out.vars.len()).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
            out.weights.push(weight);
            out.vars.push(RingVar { name, weight });
        }
        Ok(Arc::new(out))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[RingVar] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| Error::MissingVariable(name.to_string()))
    }

    /// New descriptor with extra variables appended.
    pub fn extended<S: Into<String>>(&self, extra: Vec<(S, u32)>) -> Result<Arc<Self>> {
        let mut vars: Vec<(String, u32)> = self
            .vars
            .iter()
            .map(|v| (v.name.clone(), v.weight))
            .collect();
        for (n, w) in extra {
            vars.push((n.into(), w));
        }
        RingDescriptor::new(vars)
    }

    /// New descriptor without the given variable indices, plus the old-to-new
    /// slot map.
    pub fn without(&self, drop: &[usize]) -> Result<(Arc<Self>, Vec<Option<usize>>)> {
        let dropped: Vec<bool> = {
            let mut d = vec![false; self.num_vars()];
            for &i in drop {
                d[i] = true;
            }
            d
        };
        let mut kept = Vec::new();
        let mut map = vec![None; self.num_vars()];
        for (i, v) in self.vars.iter().enumerate() {
            if !dropped[i] {
                map[i] = Some(kept.len());
                kept.push((v.name.clone(), v.weight));
            }
        }
        Ok((RingDescriptor::new(kept)?, map))
    }

    /// A variable name not yet present, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        for i in 1usize.. {
            let cand = format!("{base}{i}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }
}

/// Structural ring compatibility, with a pointer fast path.
pub fn same_ring(a: &Arc<RingDescriptor>, b: &Arc<RingDescriptor>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", v.name, v.weight)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_weights() {
        assert!(RingDescriptor::new(vec![("x", 1), ("x", 2)]).is_err());
        assert!(RingDescriptor::new(vec![("x", 0)]).is_err());
    }

    #[test]
    fn lookup_and_extend() {
        let r = RingDescriptor::new(vec![("x", 1), ("y", 2)]).unwrap();
        assert_eq!(r.var_index("y"), Some(1));
        assert_eq!(r.weights(), &[1, 2]);
        let e = r.extended(vec![("t", 3)]).unwrap();
        assert_eq!(e.num_vars(), 3);
        assert_eq!(e.var_index("t"), Some(2));
        let (s, map) = e.without(&[2]).unwrap();
        assert!(same_ring(&s, &r));
        assert_eq!(map, vec![Some(0), Some(1), None]);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = RingDescriptor::new(vec![("tag", 1), ("tag1", 1)]).unwrap();
        assert_eq!(r.fresh_name("tag"), "tag2");
    }
}

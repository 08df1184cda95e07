//! Ring homomorphisms given by substituting a target polynomial for each
//! source variable.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingDescriptor};

#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    source: Arc<RingDescriptor>,
    target: Arc<RingDescriptor>,
    /// One image per source variable.
    images: Vec<Polynomial>,
}

impl SubstitutionMap {
    pub fn new(
        source: Arc<RingDescriptor>,
        target: Arc<RingDescriptor>,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        if images.len() != source.num_vars() {
            return Err(Error::RingMismatch(format!(
                "substitution needs {} images, got {}",
                source.num_vars(),
                images.len()
            )));
        }
        for im in &images {
            if !same_ring(im.ring(), &target) {
                return Err(Error::RingMismatch(
                    "substitution image lives outside the target ring".into(),
                ));
            }
        }
        Ok(SubstitutionMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(ring: &Arc<RingDescriptor>) -> Self {
        let images = (0..ring.num_vars())
            .map(|i| Polynomial::variable(ring, i))
            .collect();
        SubstitutionMap {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    /// Build from named assignments; unlisted source variables map to the
    /// target variable of the same name.
    pub fn from_assignments(
        source: &Arc<RingDescriptor>,
        target: &Arc<RingDescriptor>,
        assigned: &HashMap<String, Polynomial>,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(source.num_vars());
        for v in source.vars() {
            match assigned.get(&v.name) {
                Some(p) => images.push(p.clone()),
                None => images.push(Polynomial::var_by_name(target, &v.name)?),
            }
        }
        SubstitutionMap::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &Arc<RingDescriptor> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingDescriptor> {
        &self.target
    }

    pub fn image_of(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    /// Apply the homomorphism.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.source) {
            return Err(Error::RingMismatch(
                "substitution applied outside its source ring".into(),
            ));
        }
        let mut power_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.target);
        for (mon, coeff) in p.terms() {
            let mut term = Polynomial::constant(&self.target, coeff.clone());
            for i in mon.support() {
                let e = mon.exponent(i);
                let pw = power_cache
                    .entry((i, e))
                    .or_insert_with(|| self.images[i].pow(e));
                term = term.checked_mul(pw)?;
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    #[test]
    fn identity_fixes_everything() {
        let r = RingDescriptor::new(vec![("x", 1), ("y", 2)]).unwrap();
        let x = Polynomial::var_by_name(&r, "x").unwrap();
        let y = Polynomial::var_by_name(&r, "y").unwrap();
        let p = &(&x * &y) + &x.scale(&coeff_int(7));
        let id = SubstitutionMap::identity(&r);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn homomorphism_on_products() {
        // x -> u + v, y -> u*v
        let src = RingDescriptor::new(vec![("x", 1), ("y", 2)]).unwrap();
        let tgt = RingDescriptor::new(vec![("u", 1), ("v", 1)]).unwrap();
        let u = Polynomial::var_by_name(&tgt, "u").unwrap();
        let v = Polynomial::var_by_name(&tgt, "v").unwrap();
        let sigma = SubstitutionMap::new(
            src.clone(),
            tgt.clone(),
            vec![&u + &v, &u * &v],
        )
        .unwrap();
        let x = Polynomial::var_by_name(&src, "x").unwrap();
        let y = Polynomial::var_by_name(&src, "y").unwrap();
        let p = &x * &x;
        let q = &y + &x;
        let lhs = sigma.apply(&p.checked_mul(&q).unwrap()).unwrap();
        let rhs = sigma
            .apply(&p)
            .unwrap()
            .checked_mul(&sigma.apply(&q).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::subgroup::Subgroup;

/// A map between two tables, stored elementwise.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Arc<GroupTable>,
    target: Arc<GroupTable>,
    images: Vec<usize>,
}

impl Homomorphism {
    /// Builds the map and checks multiplicativity on all pairs.
    pub fn new(source: Arc<GroupTable>, target: Arc<GroupTable>, images: Vec<usize>) -> Result<Self> {
        let h = Self::new_unchecked(source, target, images)?;
        if !h.verify() {
            return Err(Error::InvalidHomomorphism("map is not multiplicative".into()));
        }
        Ok(h)
    }

    /// Only checks that the map is total and lands in the target.
    pub fn new_unchecked(source: Arc<GroupTable>, target: Arc<GroupTable>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHomomorphism(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if images.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidHomomorphism("image out of range".into()));
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    /// Extends generator images along right multiplication; fails if the
    /// images are inconsistent or the generators do not generate the source.
    pub fn from_generators(
        source: Arc<GroupTable>,
        target: Arc<GroupTable>,
        gens: &[(usize, usize)],
    ) -> Result<Self> {
        let n = source.order();
        let mut images = vec![usize::MAX; n];
        images[source.identity()] = target.identity();
        let mut queue = vec![source.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &(s, t) in gens {
                let xs = source.mul(x, s);
                let img = target.mul(images[x], t);
                if images[xs] == usize::MAX {
                    images[xs] = img;
                    queue.push(xs);
                } else if images[xs] != img {
                    return Err(Error::InvalidHomomorphism(format!(
                        "generator images inconsistent at {}",
                        source.label(xs)
                    )));
                }
            }
        }
        if queue.len() != n {
            return Err(Error::InvalidHomomorphism("generators do not generate the source".into()));
        }
        Self::new(source, target, images)
    }

    pub fn identity(g: Arc<GroupTable>) -> Self {
        let images = (0..g.order()).collect();
        Self {
            source: g.clone(),
            target: g,
            images,
        }
    }

    pub fn source(&self) -> &Arc<GroupTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `images[xy] = images[x]·images[y]` for all pairs and the identity maps
    /// to the identity.
    pub fn verify(&self) -> bool {
        let (s, t) = (&*self.source, &*self.target);
        self.images[s.identity()] == t.identity()
            && (0..s.order())
                .all(|x| (0..s.order()).all(|y| self.images[s.mul(x, y)] == t.mul(self.images[x], self.images[y])))
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity();
        let k: Vec<usize> = (0..self.source.order()).filter(|&x| self.images[x] == e).collect();
        Subgroup::from_elements(&self.source, &k).expect("kernel of a homomorphism")
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::generated(&self.target, &self.images)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if *self.target != *other.source {
            return Err(Error::InvalidHomomorphism("composition of incompatible maps".into()));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }
}

/// Full multiplicativity check.
pub fn verify_homomorphism(h: &Homomorphism) -> bool {
    h.verify()
}

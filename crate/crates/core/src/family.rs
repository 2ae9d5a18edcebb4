use std::ops::Deref;

use crate::error::{Error, Result};
use crate::geom::ConvexBody;

/// An ordered family of bodies with unique ids. Operations refer to members
/// by their index in this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    bodies: Vec<ConvexBody>,
}

impl Family {
    pub fn new(bodies: Vec<ConvexBody>) -> Result<Self> {
        for (i, b) in bodies.iter().enumerate() {
            if bodies[..i].iter().any(|o| o.id() == b.id()) {
                return Err(Error::DuplicateId(b.id().into()));
            }
        }
        Ok(Family { bodies })
    }

    pub fn bodies(&self) -> &[ConvexBody] {
        &self.bodies
    }

    pub fn into_bodies(self) -> Vec<ConvexBody> {
        self.bodies
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.bodies
            .iter()
            .position(|b| b.id() == id)
            .ok_or_else(|| Error::UnknownBody(id.into()))
    }

    pub fn id(&self, index: usize) -> &str {
        self.bodies[index].id()
    }

    pub fn ids(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.id(i).to_string()).collect()
    }

    /// Members at `indices`, in that order.
    pub fn subfamily(&self, indices: &[usize]) -> Family {
        Family {
            bodies: indices.iter().map(|&i| self.bodies[i].clone()).collect(),
        }
    }

    pub fn without(&self, index: usize) -> Family {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != index).collect();
        self.subfamily(&keep)
    }
}

impl Deref for Family {
    type Target = [ConvexBody];

    fn deref(&self) -> &[ConvexBody] {
        &self.bodies
    }
}

impl FromIterator<ConvexBody> for Family {
    /// Panics on duplicate ids; use [`Family::new`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = ConvexBody>>(iter: I) -> Self {
        Family::new(iter.into_iter().collect()).expect("unique body ids")
    }
}

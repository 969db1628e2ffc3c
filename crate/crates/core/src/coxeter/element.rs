use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Image of a positive root under a group element: `±β_index`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootImage {
    pub index: u16,
    pub negative: bool,
}

impl RootImage {
    pub(crate) fn positive(index: usize) -> Self {
        RootImage { index: index as u16, negative: false }
    }

    pub(crate) fn flip(self, negate: bool) -> Self {
        RootImage { index: self.index, negative: self.negative ^ negate }
    }
}

/// An element of a finite Coxeter group, stored as the signed permutation it
/// induces on the positive roots.
///
/// Two elements are equal exactly when they act identically on the roots, so
/// equality and hashing never depend on a chosen word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    system: u64,
    images: Box<[RootImage]>,
    length: u32,
}

impl GroupElement {
    pub(crate) fn identity(system: u64, root_count: usize) -> Self {
        let images = (0..root_count).map(RootImage::positive).collect();
        GroupElement { system, images, length: 0 }
    }

    pub(crate) fn from_images(system: u64, images: Vec<RootImage>) -> Self {
        let length = images.iter().filter(|im| im.negative).count() as u32;
        GroupElement { system, images: images.into_boxed_slice(), length }
    }

    /// Identifier of the owning system.
    pub fn system_id(&self) -> u64 {
        self.system
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of positive root `index`.
    pub fn image(&self, index: usize) -> RootImage {
        self.images[index]
    }

    pub fn images(&self) -> &[RootImage] {
        &self.images
    }

    /// Product `self · other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.system != other.system {
            return Err(Error::SystemMismatch);
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &GroupElement) -> GroupElement {
        let images = other
            .images
            .iter()
            .map(|im| self.images[im.index as usize].flip(im.negative))
            .collect();
        GroupElement::from_images(self.system, images)
    }

    pub fn inverse(&self) -> GroupElement {
        let mut images = vec![RootImage::positive(0); self.images.len()];
        for (i, im) in self.images.iter().enumerate() {
            images[im.index as usize] = RootImage { index: i as u16, negative: im.negative };
        }
        GroupElement { system: self.system, images: images.into_boxed_slice(), length: self.length }
    }

    /// `ℓ(w s) < ℓ(w)` for the simple reflection with index `s`.
    pub fn has_right_descent(&self, s: usize) -> bool {
        self.images[s].negative
    }

    /// `ℓ(s w) < ℓ(w)`, i.e. `w⁻¹(α_s)` is negative.
    pub fn has_left_descent(&self, s: usize) -> bool {
        self.images.iter().any(|im| im.negative && im.index as usize == s)
    }

    /// Positive roots `β` with `w⁻¹(β) < 0`; these index the reflections
    /// `t` with `ℓ(t w) < ℓ(w)`.
    pub fn left_inversion_roots(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .images
            .iter()
            .filter(|im| im.negative)
            .map(|im| im.index as usize)
            .collect();
        out.sort_unstable();
        out
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.images.cmp(&other.images))
            .then_with(|| self.system.cmp(&other.system))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(len={}, ", self.length)?;
        for im in self.images.iter() {
            write!(f, "{}{} ", if im.negative { "-" } else { "+" }, im.index)?;
        }
        write!(f, ")")
    }
}

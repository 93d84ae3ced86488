use crate::geom::{Point, Tolerance, UnitDisk};

/// A selection of disks together with the sub-solver that chose each one.
///
/// `disks[i]` indexes the instance's disk sequence and `trace[i]` labels the
/// solver segment that selected it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cover {
    pub disks: Vec<usize>,
    pub trace: Vec<String>,
}

impl Cover {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_indices(disks: impl IntoIterator<Item = usize>, label: &str) -> Self {
        let mut c = Cover::new();
        for d in disks {
            c.push(d, label);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn contains(&self, disk: usize) -> bool {
        self.disks.contains(&disk)
    }

    /// Adds `disk` unless already selected; returns whether it was new.
    pub fn push(&mut self, disk: usize, label: &str) -> bool {
        if self.contains(disk) {
            return false;
        }
        self.disks.push(disk);
        self.trace.push(label.to_string());
        true
    }

    pub fn extend(&mut self, other: &Cover) {
        for (d, l) in other.disks.iter().zip(&other.trace) {
            self.push(*d, l);
        }
    }

    /// Rewrites indices through `map` (local index -> global index).
    pub fn remap(&self, map: &[usize]) -> Cover {
        Cover {
            disks: self.disks.iter().map(|&d| map[d]).collect(),
            trace: self.trace.clone(),
        }
    }

    /// Sorts selections by disk index, keeping labels aligned.
    pub fn sorted(mut self) -> Cover {
        let mut pairs: Vec<_> = self.disks.drain(..).zip(self.trace.drain(..)).collect();
        pairs.sort_by_key(|(d, _)| *d);
        let (disks, trace) = pairs.into_iter().unzip();
        Cover { disks, trace }
    }

    /// First point (in input order) not covered by the selection.
    pub fn first_uncovered(
        &self,
        points: &[Point],
        disks: &[UnitDisk],
        tol: Tolerance,
    ) -> Option<usize> {
        points
            .iter()
            .position(|p| !self.disks.iter().any(|&d| disks[d].contains(p, tol)))
    }

    pub fn covers(&self, points: &[Point], disks: &[UnitDisk], tol: Tolerance) -> bool {
        self.first_uncovered(points, disks, tol).is_none()
    }
}

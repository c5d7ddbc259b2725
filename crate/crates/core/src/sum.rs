//! Compensated (Neumaier) summation.

use crate::quat::Quaternion;

#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if libm::fabs(self.sum) >= libm::fabs(value) {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another partial sum in, keeping its error term.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.carry);
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Componentwise compensated sum of quaternions.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuatSum {
    parts: [CompensatedSum; 4],
}

impl QuatSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, q: Quaternion) {
        for (part, c) in self.parts.iter_mut().zip(q.components()) {
            part.add(c);
        }
    }

    pub fn sub(&mut self, q: Quaternion) {
        self.add(-q);
    }

    pub fn merge(&mut self, other: &QuatSum) {
        for (a, b) in self.parts.iter_mut().zip(other.parts.iter()) {
            a.merge(b);
        }
    }

    pub fn value(&self) -> Quaternion {
        let [w, x, y, z] = self.parts;
        Quaternion::from_components_unchecked([w.value(), x.value(), y.value(), z.value()])
    }
}

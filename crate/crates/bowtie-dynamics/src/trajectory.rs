//! Recorded trajectories and their CSV serialization.

use std::io::{self, Write};

use nalgebra::DVector;

/// One recorded point of a reduced trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample {
    /// Time.
    pub t: f64,
    /// Velocity in the first factor.
    pub xi: DVector<f64>,
    /// Velocity in the second factor.
    pub eta: DVector<f64>,
    /// Momentum in the first factor.
    pub mu: DVector<f64>,
    /// Momentum in the second factor.
    pub nu: DVector<f64>,
    /// Reduced energy at this point.
    pub energy: f64,
}

/// A fixed-step trajectory: the initial state plus one sample per step.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    dim_g: usize,
    dim_h: usize,
    /// Samples ordered by time, starting at `t = 0`.
    pub samples: Vec<TrajectorySample>,
}

impl Trajectory {
    /// An empty trajectory of the given factor dimensions, with room for
    /// `rows` samples. Alternative integrators (reference implementations,
    /// say) use this to record into the same shape the built-in one emits.
    pub fn with_capacity(dim_g: usize, dim_h: usize, rows: usize) -> Self {
        Self { dim_g, dim_h, samples: Vec::with_capacity(rows) }
    }

    /// Dimension of the first factor.
    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    /// Dimension of the second factor.
    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    /// Number of recorded rows.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Whether the trajectory holds no samples.
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Maximum absolute energy deviation from the initial sample.
    pub fn max_energy_drift(&self) -> f64 {
        let Some(first) = self.samples.first() else { return 0.0 };
        self.samples
            .iter()
            .map(|s| (s.energy - first.energy).abs())
            .fold(0.0, f64::max)
    }

    /// Largest componentwise difference between two trajectories of the
    /// same shape, over all velocity and momentum columns (used for
    /// dual-route comparisons of integrators).
    pub fn max_pointwise_difference(&self, other: &Trajectory) -> Option<f64> {
        if self.dim_g != other.dim_g
            || self.dim_h != other.dim_h
            || self.samples.len() != other.samples.len()
        {
            return None;
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.samples.iter().zip(&other.samples) {
            worst = worst
                .max((&a.xi - &b.xi).amax())
                .max((&a.eta - &b.eta).amax())
                .max((&a.mu - &b.mu).amax())
                .max((&a.nu - &b.nu).amax());
        }
        Some(worst)
    }

    /// CSV header for the given factor dimensions:
    /// `t,xi1..xiN,eta1..etaM,mu1..muN,nu1..nuM,energy`.
    pub fn csv_header(dim_g: usize, dim_h: usize) -> String {
        let mut cols = Vec::with_capacity(2 + 2 * (dim_g + dim_h));
        cols.push("t".to_string());
        cols.extend((1..=dim_g).map(|i| format!("xi{i}")));
        cols.extend((1..=dim_h).map(|i| format!("eta{i}")));
        cols.extend((1..=dim_g).map(|i| format!("mu{i}")));
        cols.extend((1..=dim_h).map(|i| format!("nu{i}")));
        cols.push("energy".to_string());
        cols.join(",")
    }

    /// Writes the trajectory as CSV.
    ///
    /// Floats are rendered with Rust's shortest-round-trip formatting, so
    /// identical trajectories serialize to identical bytes — the property
    /// the command-line determinism checks rely on.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "{}", Self::csv_header(self.dim_g, self.dim_h))?;
        let mut line = String::new();
        for s in &self.samples {
            line.clear();
            push_float(&mut line, s.t);
            for v in [&s.xi, &s.eta, &s.mu, &s.nu] {
                for x in v.iter() {
                    line.push(',');
                    push_float(&mut line, *x);
                }
            }
            line.push(',');
            push_float(&mut line, s.energy);
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    /// Renders the whole CSV document to a string.
    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }
}

fn push_float(buf: &mut String, x: f64) {
    use std::fmt::Write as _;
    write!(buf, "{x}").expect("formatting f64 cannot fail");
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    fn sample(t: f64) -> TrajectorySample {
        TrajectorySample {
            t,
            xi: dvector![1.0, 2.0],
            eta: dvector![3.0],
            mu: dvector![2.0, 4.0],
            nu: dvector![6.0],
            energy: 1.5,
        }
    }

    #[test]
    fn header_lists_columns_in_declared_order() {
        assert_eq!(
            Trajectory::csv_header(2, 1),
            "t,xi1,xi2,eta1,mu1,mu2,nu1,energy"
        );
        assert_eq!(
            Trajectory::csv_header(3, 3),
            "t,xi1,xi2,xi3,eta1,eta2,eta3,mu1,mu2,mu3,nu1,nu2,nu3,energy"
        );
    }

    #[test]
    fn csv_rows_match_samples() {
        let mut traj = Trajectory::with_capacity(2, 1, 2);
        traj.samples.push(sample(0.0));
        traj.samples.push(sample(0.5));
        let text = traj.to_csv_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "t,xi1,xi2,eta1,mu1,mu2,nu1,energy");
        assert_eq!(lines[1], "0,1,2,3,2,4,6,1.5");
        assert_eq!(lines[2], "0.5,1,2,3,2,4,6,1.5");
    }

    #[test]
    fn serialization_is_byte_deterministic() {
        let mut traj = Trajectory::with_capacity(2, 1, 1);
        traj.samples.push(TrajectorySample {
            t: 0.1 + 0.2, // deliberately non-representable arithmetic
            xi: dvector![1.0 / 3.0, -0.0],
            eta: dvector![f64::MIN_POSITIVE],
            mu: dvector![2.0 / 3.0, 1e300],
            nu: dvector![-1e-300],
            energy: std::f64::consts::PI,
        });
        assert_eq!(traj.to_csv_string(), traj.clone().to_csv_string());
        // Shortest-round-trip rendering: parsing the rendered text recovers
        // the exact value.
        let rendered = traj.to_csv_string();
        let row = rendered.lines().nth(1).unwrap();
        let t: f64 = row.split(',').next().unwrap().parse().unwrap();
        assert_eq!(t, 0.1 + 0.2);
    }

    #[test]
    fn energy_drift_is_relative_to_first_sample() {
        let mut traj = Trajectory::with_capacity(2, 1, 3);
        for (t, e) in [(0.0, 2.0), (1.0, 2.5), (2.0, 1.9)] {
            let mut s = sample(t);
            s.energy = e;
            traj.samples.push(s);
        }
        assert_eq!(traj.max_energy_drift(), 0.5);
    }

    #[test]
    fn pointwise_difference_requires_matching_shape() {
        let mut a = Trajectory::with_capacity(2, 1, 1);
        a.samples.push(sample(0.0));
        let mut b = a.clone();
        assert_eq!(a.max_pointwise_difference(&b), Some(0.0));
        b.samples[0].mu[1] += 0.25;
        assert_eq!(a.max_pointwise_difference(&b), Some(0.25));
        let c = Trajectory::with_capacity(3, 1, 0);
        assert_eq!(a.max_pointwise_difference(&c), None);
    }
}

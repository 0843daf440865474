use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{Verifier, ARG_EXCLUSION};
use super::report::{CheckReport, Identity, Params, SkippedPoint};
use crate::error::{Error, Result};
use crate::hecke::{chain_decompose, enumerate_s, s_plus, IntMat2};

/// Sample points for a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_values: Vec<f64>,
    pub y_values: Vec<f64>,
    /// Record `x == y` points as skipped instead of checking them.
    pub exclude_diagonal: bool,
    /// Record pairs on opposite sides of 1 as skipped.
    pub same_side: bool,
}

impl GridSpec {
    pub fn new(x_values: Vec<f64>, y_values: Vec<f64>) -> Self {
        GridSpec {
            x_values,
            y_values,
            exclude_diagonal: true,
            same_side: false,
        }
    }

    /// The same values on both axes.
    pub fn square(values: Vec<f64>) -> Self {
        Self::new(values.clone(), values)
    }

    pub fn same_side(mut self) -> Self {
        self.same_side = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_values.is_empty() || self.y_values.is_empty() {
            return Err(Error::Grid("grid axes must be non-empty".into()));
        }
        if let Some(v) = self
            .x_values
            .iter()
            .chain(&self.y_values)
            .find(|v| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::Grid(format!(
                "grid values must be positive, got {v}"
            )));
        }
        Ok(())
    }

    fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.x_values
            .iter()
            .flat_map(move |&x| self.y_values.iter().map(move |&y| (x, y)))
    }

    fn pair_filter(&self, x: f64, y: f64) -> Option<String> {
        if self.exclude_diagonal && x == y {
            return Some("x equals y".into());
        }
        if self.same_side && (x > 1.0) != (y > 1.0) {
            return Some("x and y lie on opposite sides of 1".into());
        }
        None
    }
}

/// Reports and skipped points of one sweep, in canonical parameter order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridRun {
    pub reports: Vec<CheckReport>,
    pub skipped: Vec<SkippedPoint>,
}

impl GridRun {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn max_excess(&self) -> f64 {
        self.reports.iter().map(|r| r.excess).fold(0.0, f64::max)
    }

    pub fn extend(&mut self, other: GridRun) {
        self.reports.extend(other.reports);
        self.skipped.extend(other.skipped);
    }
}

enum Task {
    Theorem1(i64, f64, f64),
    Rz(i64, f64),
    FiveTerm(f64, f64),
    Reflection(f64),
    Telescope(IntMat2, i64, f64, f64),
    ChainSum(i64, i64, f64, f64),
    Complement(i64, f64, f64),
    Decomposition(i64, f64, f64),
    Skip(SkippedPoint),
}

impl Task {
    fn params(&self) -> Params {
        match *self {
            Task::Theorem1(l, x, y) | Task::Complement(l, x, y) | Task::Decomposition(l, x, y) => {
                Params::point(x, y).with_order(l)
            }
            Task::Rz(n, x) => Params {
                order: Some(n),
                x,
                ..Params::default()
            },
            Task::FiveTerm(x, y) => Params::point(x, y),
            Task::Reflection(x) => Params {
                x,
                ..Params::default()
            },
            Task::Telescope(m, l, x, y) => Params::point(x, y).with_order(l).with_matrix(m),
            Task::ChainSum(l, n, x, y) => Params::point(x, y).with_order(l).with_chain(n),
            Task::Skip(ref s) => s.params.clone(),
        }
    }

    fn run(&self, v: &Verifier) -> Result<CheckReport> {
        match *self {
            Task::Theorem1(l, x, y) => v.check_theorem1(l, x, y),
            Task::Rz(n, x) => v.check_rz(n, x),
            Task::FiveTerm(x, y) => v.check_five_term(x, y),
            Task::Reflection(x) => v.check_reflection(x),
            Task::Telescope(m, l, x, y) => v.check_telescope(&m, l, x, y),
            Task::ChainSum(l, n, x, y) => v.check_chain_sum(l, n, x, y),
            Task::Complement(l, x, y) => v.check_complement_sum(l, x, y),
            Task::Decomposition(l, x, y) => v.check_decomposition(l, x, y),
            Task::Skip(_) => unreachable!("skipped tasks are not run"),
        }
    }
}

enum Outcome {
    Checked(CheckReport),
    Skipped(SkippedPoint),
}

impl Verifier {
    /// Applies `identity` at every grid point for each order in `orders`
    /// (`l` or `n`; ignored by the five-term and reflection checks).
    ///
    /// Points failing a precondition are recorded as skipped with the reason.
    /// Points are evaluated in parallel; output order is that of the sweep.
    pub fn run_grid(&self, identity: Identity, orders: &[i64], grid: &GridSpec) -> Result<GridRun> {
        grid.validate()?;
        let tasks = build_tasks(identity, orders, grid)?;
        let outcomes: Vec<Result<Outcome>> = tasks
            .par_iter()
            .map(|task| match task {
                Task::Skip(s) => Ok(Outcome::Skipped(s.clone())),
                task => match task.run(self) {
                    Ok(r) => Ok(Outcome::Checked(r)),
                    Err(Error::Domain(reason)) => Ok(Outcome::Skipped(SkippedPoint {
                        identity,
                        params: task.params(),
                        reason,
                    })),
                    Err(e) => Err(e),
                },
            })
            .collect();
        let mut run = GridRun::default();
        for outcome in outcomes {
            match outcome? {
                Outcome::Checked(r) => run.reports.push(r),
                Outcome::Skipped(s) => run.skipped.push(s),
            }
        }
        Ok(run)
    }

    /// Five-term checks at `count` seeded random pairs.
    pub fn run_five_term_samples(&self, seed: u64, count: usize) -> Result<GridRun> {
        let pairs = five_term_samples(seed, count);
        let reports = pairs
            .par_iter()
            .map(|&(x, y)| self.check_five_term(x, y))
            .collect::<Result<Vec<_>>>()?;
        Ok(GridRun {
            reports,
            skipped: Vec::new(),
        })
    }
}

/// `count` pairs `(x, y)` on a common side of 1 whose five-term arguments all
/// stay outside the exclusion band around 1. Deterministic in `seed`.
pub fn five_term_samples(seed: u64, count: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let above = rng.gen_bool(0.5);
        let mut draw = || {
            let u: f64 = rng.gen_range(0.01..0.99);
            if above {
                1.0 / u
            } else {
                u
            }
        };
        let (x, y) = (draw(), draw());
        let args = [
            x,
            y,
            y / x,
            (y - 1.0) / (x - 1.0),
            (1.0 - 1.0 / y) / (1.0 - 1.0 / x),
        ];
        if args.iter().all(|a| (a - 1.0).abs() >= ARG_EXCLUSION) {
            out.push((x, y));
        }
    }
    out
}

fn build_tasks(identity: Identity, orders: &[i64], grid: &GridSpec) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    let mut pair_tasks = |make: &dyn Fn(f64, f64) -> Task, params: &dyn Fn(f64, f64) -> Params| {
        for (x, y) in grid.pairs() {
            match grid.pair_filter(x, y) {
                Some(reason) => tasks.push(Task::Skip(SkippedPoint {
                    identity,
                    params: params(x, y),
                    reason,
                })),
                None => tasks.push(make(x, y)),
            }
        }
    };
    match identity {
        Identity::FiveTerm => pair_tasks(&Task::FiveTerm, &Params::point),
        Identity::Theorem1 | Identity::Complement | Identity::Decomposition => {
            for &l in orders {
                let make = move |x, y| match identity {
                    Identity::Theorem1 => Task::Theorem1(l, x, y),
                    Identity::Complement => Task::Complement(l, x, y),
                    _ => Task::Decomposition(l, x, y),
                };
                pair_tasks(&make, &|x, y| Params::point(x, y).with_order(l));
            }
        }
        Identity::Telescope => {
            for &l in orders {
                for m in s_plus(&enumerate_s(l)?) {
                    pair_tasks(&|x, y| Task::Telescope(m, l, x, y), &|x, y| {
                        Params::point(x, y).with_order(l).with_matrix(m)
                    });
                }
            }
        }
        Identity::ChainSum => {
            for &l in orders {
                let l_u = u64::try_from(l).map_err(|_| Error::NotPrime(0))?;
                for chain in chain_decompose(l_u)?.chains {
                    let n = chain.index;
                    pair_tasks(&|x, y| Task::ChainSum(l, n, x, y), &|x, y| {
                        Params::point(x, y).with_order(l).with_chain(n)
                    });
                }
            }
        }
        Identity::Rz => {
            for &n in orders {
                tasks.extend(grid.x_values.iter().map(|&x| Task::Rz(n, x)));
            }
        }
        Identity::Reflection => tasks.extend(grid.x_values.iter().map(|&x| Task::Reflection(x))),
    }
    Ok(tasks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_sweep_counts() {
        let v = Verifier::default();
        let grid = GridSpec::new(vec![0.3, 0.7, 1.5, 2.0], vec![0.4, 0.9, 3.0, 5.0]);
        let run = v.run_grid(Identity::Theorem1, &[2, 3, 5], &grid).unwrap();
        assert_eq!(run.reports.len(), 48);
        assert!(run.skipped.is_empty());
        assert!(run.all_pass());
    }

    #[test]
    fn diagonal_is_skipped() {
        let v = Verifier::default();
        let run = v
            .run_grid(
                Identity::Complement,
                &[3],
                &GridSpec::square(vec![0.5, 2.0]),
            )
            .unwrap();
        assert_eq!(run.reports.len(), 2);
        assert_eq!(run.skipped.len(), 2);
        assert_eq!(run.skipped[0].reason, "x equals y");
    }

    #[test]
    fn mixed_side_five_term_pairs_are_skipped() {
        let v = Verifier::default();
        let mut grid = GridSpec::new(vec![0.3, 2.0], vec![0.6, 4.0]);
        let run = v.run_grid(Identity::FiveTerm, &[], &grid).unwrap();
        assert_eq!(run.reports.len(), 2);
        assert_eq!(run.skipped.len(), 2);
        assert!(run.skipped.iter().all(|s| s.reason.contains("same side")));
        grid.same_side = true;
        let run = v.run_grid(Identity::FiveTerm, &[], &grid).unwrap();
        assert_eq!(run.skipped.len(), 2);
        assert!(run
            .skipped
            .iter()
            .all(|s| s.reason.contains("opposite sides")));
    }

    #[test]
    fn rz_sweep_counts() {
        let v = Verifier::default();
        let grid = GridSpec::square(vec![0.3, 0.7, 1.5, 2.0, 5.0]);
        let orders: Vec<i64> = (1..=10).collect();
        let run = v.run_grid(Identity::Rz, &orders, &grid).unwrap();
        assert_eq!(run.reports.len(), 50);
    }

    #[test]
    fn samples_are_seeded() {
        assert_eq!(five_term_samples(7, 20), five_term_samples(7, 20));
        assert_ne!(five_term_samples(7, 20), five_term_samples(8, 20));
        for (x, y) in five_term_samples(0, 200) {
            assert_eq!(x > 1.0, y > 1.0);
        }
    }

    #[test]
    fn invalid_grid() {
        let v = Verifier::default();
        assert!(v
            .run_grid(Identity::Theorem1, &[2], &GridSpec::new(vec![], vec![1.0]))
            .is_err());
        assert!(v
            .run_grid(
                Identity::Theorem1,
                &[2],
                &GridSpec::new(vec![-1.0], vec![1.0])
            )
            .is_err());
        assert_eq!(
            v.run_grid(
                Identity::Theorem1,
                &[4],
                &GridSpec::new(vec![2.0], vec![3.0])
            ),
            Err(Error::NotPrime(4))
        );
    }
}

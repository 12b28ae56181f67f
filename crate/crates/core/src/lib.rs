//! Bicriteria approximation from weighted-sum oracles.
//!
//! Given a problem with two nonnegative objectives `f1`, `f2` and an
//! `alpha`-approximate algorithm for the combined objective `f1 + gamma f2`,
//! this crate computes
//!
//! - budget-constrained solutions (`min f2` subject to `f1 <= B`) with
//!   certified factor pairs, by a grid sweep, a binary search, or a
//!   parametric search when the oracle is exact,
//! - approximate Pareto curves, including instances with zero objective
//!   values.
//!
//! All arithmetic is exact. Spanning tree, shortest path, minimum cut and
//! vertex cover are provided as oracles, along with a brute-force
//! enumerator used to check every guarantee on small instances.
//!
//! ```
//! use bicrit_core::problems::fixtures;
//! use bicrit_core::sweep::{solve_budget_sweep, BudgetQuery};
//! use bicrit_core::types::{int, Epsilon};
//!
//! let tree = fixtures::example2_mst();
//! let query = BudgetQuery::new(int(3), Epsilon::one()).unwrap();
//! let solution = solve_budget_sweep(&tree, &query).unwrap();
//! assert!(solution.record.image.f1 <= int(9));
//! ```

pub mod error;
pub mod exact_search;
pub mod format;
pub mod marathe;
pub mod oracle;
pub mod pareto;
pub mod problem;
pub mod problems;
pub mod sweep;
pub mod types;

pub use error::{Error, Result};
pub use exact_search::{solve_budget_binary, solve_budget_parametric, GammaInterval, ParametricSolution};
pub use pareto::{approximate_pareto, extended_pareto, pareto_from_parametric, ParetoSet};
pub use problem::{BicriteriaProblem, ParametricProblem};
pub use problems::Instance;
pub use sweep::{solve_budget_fixed, solve_budget_sweep, BudgetQuery, BudgetSolution};
pub use types::{Bounds, CostPair, Epsilon, GuaranteeCertificate, Rational, SolutionRecord, Weight};

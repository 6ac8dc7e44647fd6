//! Exact solvers for the Permutation Constraint Satisfaction Problem and
//! the reduction chain that shows arity 4 already needs `2^{Omega(n log n)}`
//! time under ETH.
//!
//! ```
//! use permcsp::csp::{evaluate, Constraint, PermCspInstance};
//! use permcsp::solvers::solve_dp3;
//!
//! let inst = PermCspInstance::new(3, vec![Constraint::from([0, 1, 2]), Constraint::from([0, 2, 1])]).unwrap();
//! let best = solve_dp3(&inst).unwrap();
//! assert_eq!(best.optimum, 1);
//! assert_eq!(evaluate(&inst, &best.witness).unwrap(), 1);
//! ```

pub mod cli;
pub mod cnf;
pub mod csp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solvers;
pub mod validate;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/model.md")]
    struct Model;
    #[doc = include_str!("../../../book/src/solvers.md")]
    struct Solvers;
    #[doc = include_str!("../../../book/src/reductions.md")]
    struct Reductions;
    #[doc = include_str!("../../../book/src/conditions.md")]
    struct Conditions;
    #[doc = include_str!("../../../book/src/certificates.md")]
    struct Certificates;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
    #[doc = include_str!("../../../book/src/formats.md")]
    struct Formats;
}

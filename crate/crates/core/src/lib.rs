//! Weak crossed products of monoids in finite-dimensional vector spaces, computed
//! exactly over ℚ and GF(p).

pub mod error;
pub mod examples;
pub mod fdvect;
pub mod iso;
pub mod json;
pub mod iterate;
pub mod kernel;
pub mod preunit;
pub mod report;
pub mod wcp;

pub use error::{Error, Result};
pub use fdvect::{check_eq, check_left_module, check_monoid, FMor, FObj, Factor, ModuleData, MonoidData};
pub use kernel::{solve_right, split_idempotent, Field, KernelError, Mat, Scalar, Splitting};
pub use report::{Check, Report, Witness};

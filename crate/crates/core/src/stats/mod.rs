//! Unpaired two-sample t-test with Satterthwaite degrees of freedom.

mod special;
mod ttest;

pub use special::{ln_gamma, regularized_incomplete_beta};
pub use ttest::{student_t_cdf, student_t_sf, welch_t_test, SampleSummary, TTestResult};

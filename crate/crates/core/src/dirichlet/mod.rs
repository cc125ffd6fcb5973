//! Dirichlet convolution, pointwise and over dense tables.

mod convolve;
mod table;

pub use convolve::{convolve_point, convolve_point_u64, convolve_prefix};
pub use table::{tabulate, write_jsonl_row, write_tsv_header, write_tsv_row, ValueTable};

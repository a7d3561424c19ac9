//! Data-parallel helpers for element-wise field kernels.
//!
//! With the `parallel` feature, per-node maps above [`PAR_THRESHOLD`] run on
//! rayon; otherwise (and always below the threshold) they run sequentially.
//! Only independent element-wise maps are parallelized — reductions stay
//! sequential everywhere so results are identical with the feature on or off.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Grids smaller than this are not worth fanning out.
pub const PAR_THRESHOLD: usize = 8192;

/// Element-wise map over indices 0..n.
pub fn map_indexed<F>(n: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if n >= PAR_THRESHOLD {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

/// Always-sequential variant (bench baseline).
pub fn map_indexed_seq<F>(n: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64,
{
    (0..n).map(f).collect()
}

/// Always-parallel variant (bench comparison).
#[cfg(feature = "parallel")]
pub fn map_indexed_par<F>(n: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

//! Scalar abstraction: the library is generic over the floating-point type.
//!
//! Everything that cannot be expressed through `num_traits::Float` alone
//! (symmetric eigendecomposition, Gaussian sampling) lives behind the
//! [`Scalar`] trait and is implemented per concrete type, so generic code
//! never needs `nalgebra` bounds.

use ndarray::{Array1, Array2};
use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};
use rand::Rng;
use std::fmt::{Debug, Display, LowerExp};

/// Floating-point scalar usable throughout the crate (`f32` or `f64`).
pub trait Scalar:
    Float
    + NumAssignOps
    + FromPrimitive
    + ToPrimitive
    + ndarray::ScalarOperand
    + ndarray::LinalgScalar
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from an `f64` constant.
    fn from_f64(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("f64 constant not representable")
    }

    /// Widening conversion used by file I/O and reporting.
    fn as_f64(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).expect("scalar not representable as f64")
    }

    /// One draw from the standard normal distribution.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Eigendecomposition of a symmetric matrix.
    ///
    /// Returns `(eigenvalues, eigenvectors)` with eigenvalues ascending and
    /// eigenvectors as matching columns. Eigenvector signs are normalized so
    /// the entry of largest magnitude is positive, which keeps results
    /// deterministic across runs.
    fn eigh(matrix: &Array2<Self>) -> (Array1<Self>, Array2<Self>);
}

fn eigh_via_nalgebra<S>(matrix: &Array2<S>) -> (Array1<S>, Array2<S>)
where
    S: Scalar + nalgebra::RealField + Copy,
{
    let n = matrix.nrows();
    assert_eq!(n, matrix.ncols(), "eigh requires a square matrix");
    if n == 0 {
        return (Array1::zeros(0), Array2::zeros((0, 0)));
    }
    let dm = nalgebra::DMatrix::from_fn(n, n, |r, c| matrix[[r, c]]);
    let decomp = dm.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        decomp.eigenvalues[a]
            .partial_cmp(&decomp.eigenvalues[b])
            .expect("non-finite eigenvalue")
    });

    let mut values = Array1::zeros(n);
    let mut vectors = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = decomp.eigenvalues[src];
        let col = decomp.eigenvectors.column(src);
        // Sign convention: largest-magnitude entry positive.
        let mut pivot = 0usize;
        let mut best = S::zero();
        for (i, &v) in col.iter().enumerate() {
            let a = Float::abs(v);
            if a > best {
                best = a;
                pivot = i;
            }
        }
        let flip = col[pivot] < S::zero();
        for i in 0..n {
            vectors[[i, dst]] = if flip { -col[i] } else { col[i] };
        }
    }
    (values, vectors)
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.sample::<$t, _>(rand_distr::StandardNormal)
            }

            fn eigh(matrix: &Array2<Self>) -> (Array1<Self>, Array2<Self>) {
                eigh_via_nalgebra(matrix)
            }
        }
    };
}

impl_scalar!(f32);
impl_scalar!(f64);

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn eigh_recovers_diagonal() {
        let m = array![[3.0_f64, 0.0], [0.0, 1.0]];
        let (vals, vecs) = f64::eigh(&m);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        // reconstruct
        let lam = Array2::from_diag(&vals);
        let rec = vecs.dot(&lam).dot(&vecs.t());
        for i in 0..2 {
            for j in 0..2 {
                assert!((rec[[i, j]] - m[[i, j]]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn eigh_is_deterministic_and_orthonormal() {
        let mut m = Array2::<f64>::zeros((6, 6));
        let mut v = 0.3_f64;
        for i in 0..6 {
            for j in 0..=i {
                v = (v * 997.0 + 13.0).rem_euclid(7.0) - 3.5;
                m[[i, j]] = v;
                m[[j, i]] = v;
            }
        }
        let (vals1, vecs1) = f64::eigh(&m);
        let (vals2, vecs2) = f64::eigh(&m);
        assert_eq!(vals1, vals2);
        assert_eq!(vecs1, vecs2);
        let gram = vecs1.t().dot(&vecs1);
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((gram[[i, j]] - want).abs() < 1e-10);
            }
        }
        for w in vals1.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn works_at_f32() {
        let m = array![[2.0_f32, 1.0], [1.0, 2.0]];
        let (vals, _) = f32::eigh(&m);
        assert!((vals[0] - 1.0).abs() < 1e-5);
        assert!((vals[1] - 3.0).abs() < 1e-5);
    }
}

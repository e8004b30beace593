//! Arbitrary-precision rationals, Gaussian rationals and exact k-th roots.

mod gaussian;
mod rational;
mod root;

pub use gaussian::GaussianRational;
pub use rational::{Rational, Sign};
pub use root::{int_kth_root, rational_kth_root, KthRoot};

/// Implements the four owned/borrowed combinations of `+ - *` and `/`, plus
/// `Neg`, on top of inherent `add_ref`, `sub_ref`, `mul_ref`, `neg_ref` and
/// `checked_div` methods. Division panics on a zero divisor, like integer
/// division; use `checked_div` or [`crate::Field::inv`] to handle it.
macro_rules! forward_field_ops {
    ($t:ty) => {
        forward_field_ops!(@bin $t, Add, add, add_ref);
        forward_field_ops!(@bin $t, Sub, sub, sub_ref);
        forward_field_ops!(@bin $t, Mul, mul, mul_ref);
        forward_field_ops!(@bin $t, Div, div, div_ref);

        impl core::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl core::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl $t {
            fn div_ref(&self, rhs: &$t) -> $t {
                self.checked_div(rhs).expect("division by zero")
            }
        }
    };
    (@bin $t:ty, $tr:ident, $m:ident, $inner:ident) => {
        impl core::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$inner(&rhs)
            }
        }
        impl core::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                self.$inner(rhs)
            }
        }
        impl core::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$inner(&rhs)
            }
        }
        impl core::ops::$tr<&$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                self.$inner(rhs)
            }
        }
    };
}

pub(crate) use forward_field_ops;

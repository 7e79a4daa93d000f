//! Number domains: exact rationals, `f64`, and binary floats of configurable
//! precision.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::Debug;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::ops::{BitTest, UnsignedAbs};
use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// Arithmetic needed by the series engines. Every type carries a context
/// (the working precision for [`MpFloat`], nothing for the others).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    type Context: Clone + Debug;

    fn from_ratio(value: &RBig, ctx: &Self::Context) -> Self;
    fn from_i64(value: i64, ctx: &Self::Context) -> Self;
    fn is_zero(&self) -> bool;
    fn as_f64(&self) -> f64;

    fn zero(ctx: &Self::Context) -> Self {
        Self::from_i64(0, ctx)
    }

    fn one(ctx: &Self::Context) -> Self {
        Self::from_i64(1, ctx)
    }

    /// `self^exp` by repeated squaring.
    fn powu(&self, mut exp: u32, ctx: &Self::Context) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// Ordered scalars with square roots, as needed by the eigensolver.
pub trait Real: Scalar + PartialOrd {
    fn sqrt(&self) -> Self;

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn is_negative(&self) -> bool;
}

impl Scalar for RBig {
    type Context = ();

    fn from_ratio(value: &RBig, _: &()) -> Self {
        value.clone()
    }

    fn from_i64(value: i64, _: &()) -> Self {
        RBig::from(value)
    }

    fn is_zero(&self) -> bool {
        self.numerator().is_zero()
    }

    fn as_f64(&self) -> f64 {
        self.to_f64().value()
    }
}

impl Scalar for f64 {
    type Context = ();

    fn from_ratio(value: &RBig, _: &()) -> Self {
        value.to_f64().value()
    }

    fn from_i64(value: i64, _: &()) -> Self {
        value as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn as_f64(&self) -> f64 {
        *self
    }
}

impl Real for f64 {
    fn sqrt(&self) -> Self {
        libm::sqrt(*self)
    }

    fn abs(&self) -> Self {
        libm::fabs(*self)
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }
}

type Float = FBig<HalfEven, 2>;

/// Binary floating point number with a precision fixed at construction.
///
/// Binary operations return a value with the larger of the two operand
/// precisions, so values built through [`Scalar::from_ratio`] or
/// [`Scalar::from_i64`] with one context stay at that precision.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct MpFloat(Float);

impl MpFloat {
    pub fn with_precision(value: &RBig, bits: usize) -> Self {
        MpFloat(value.to_float::<HalfEven, 2>(bits).value())
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    /// Exact rational value of this float.
    pub fn to_ratio(&self) -> RBig {
        RBig::try_from(self.0.clone()).expect("finite float")
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_sig(&self.to_ratio(), digits)
    }
}

impl Scalar for MpFloat {
    /// Precision in bits.
    type Context = usize;

    fn from_ratio(value: &RBig, bits: &usize) -> Self {
        MpFloat::with_precision(value, *bits)
    }

    fn from_i64(value: i64, bits: &usize) -> Self {
        MpFloat(Float::from(IBig::from(value)).with_precision(*bits).value())
    }

    fn is_zero(&self) -> bool {
        self.0.repr().significand().is_zero()
    }

    fn as_f64(&self) -> f64 {
        self.0.to_f64().value()
    }
}

impl Real for MpFloat {
    fn sqrt(&self) -> Self {
        MpFloat(self.0.sqrt())
    }

    fn is_negative(&self) -> bool {
        self.0.repr().significand() < &IBig::ZERO
    }
}

macro_rules! mp_binop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            fn $f(self, rhs: MpFloat) -> MpFloat {
                MpFloat(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a MpFloat> for MpFloat {
            type Output = MpFloat;
            fn $f(self, rhs: &'a MpFloat) -> MpFloat {
                MpFloat(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tra<&'a MpFloat> for MpFloat {
            fn $fa(&mut self, rhs: &'a MpFloat) {
                self.0 = &self.0 $op &rhs.0;
            }
        }
    };
}

mp_binop!(Add, add, AddAssign, add_assign, +);
mp_binop!(Sub, sub, SubAssign, sub_assign, -);
mp_binop!(Mul, mul, MulAssign, mul_assign, *);
mp_binop!(Div, div, DivAssign, div_assign, /);

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

/// Arithmetic used for a computation: exact rationals or binary floats of a
/// given precision. Precisions up to 53 bits run in `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberDomain {
    ExactRational,
    Float { bits: usize },
}

impl NumberDomain {
    pub const DOUBLE: NumberDomain = NumberDomain::Float { bits: 53 };
    pub const EXTENDED: NumberDomain = NumberDomain::Float { bits: 128 };

    pub fn is_double(&self) -> bool {
        matches!(self, NumberDomain::Float { bits } if *bits <= 53)
    }
}

/// Parses a decimal (`2.5`, `-1e-3`) or a fraction (`5/2`).
pub fn parse_ratio(text: &str) -> Result<RBig> {
    let text = text.trim();
    let parsed = if text.contains('/') {
        text.parse::<RBig>()
    } else {
        RBig::from_str_decimal(text)
    };
    parsed.map_err(|e| Error::Parse(format!("{text:?}: {e}")))
}

/// `p/q` form, with the denominator always present (`2/1`).
pub fn ratio_string(value: &RBig) -> String {
    format!("{}/{}", value.numerator(), value.denominator())
}

/// Parses the output of [`ratio_string`].
pub fn parse_ratio_string(text: &str) -> Result<RBig> {
    text.trim()
        .parse::<RBig>()
        .map_err(|e| Error::Parse(format!("{text:?}: {e}")))
}

/// Bit lengths of numerator and denominator.
pub fn bit_lengths(value: &RBig) -> (usize, usize) {
    (
        value.numerator().unsigned_abs().bit_len(),
        value.denominator().bit_len(),
    )
}

/// Decimal expansion rounded half-even at `decimals` digits after the point.
pub fn format_fixed(value: &RBig, decimals: usize) -> String {
    let scale = RBig::from(IBig::from(10u8).pow(decimals));
    let scaled = value * &scale;
    let rounded = round_half_even(&scaled);
    let negative = rounded < IBig::ZERO;
    let digits = format!("{}", rounded.unsigned_abs());
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if decimals == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() <= decimals {
        out.push_str("0.");
        for _ in digits.len()..decimals {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let split = digits.len() - decimals;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}

/// Decimal expansion with `digits` significant digits (plain notation for
/// moderate magnitudes, scientific otherwise).
pub fn format_sig(value: &RBig, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return String::from("0");
    }
    let exp = decimal_exponent(value);
    if (-5..=20).contains(&exp) {
        let decimals = (digits as i64 - 1 - exp).max(0) as usize;
        return format_fixed(value, decimals);
    }
    let shifted = if exp >= 0 {
        value / &RBig::from(IBig::from(10u8).pow(exp as usize))
    } else {
        value * &RBig::from(IBig::from(10u8).pow((-exp) as usize))
    };
    format!("{}e{}", format_fixed(&shifted, digits - 1), exp)
}

/// `floor(log10 |value|)` for a nonzero rational.
fn decimal_exponent(value: &RBig) -> i64 {
    let abs = RBig::from_parts(value.numerator().unsigned_abs().into(), value.denominator().clone());
    let approx = libm::log10(abs.to_f64().value());
    let mut exp = if approx.is_finite() {
        libm::floor(approx) as i64
    } else {
        let (n, d) = bit_lengths(&abs);
        ((n as f64 - d as f64) * core::f64::consts::LOG10_2) as i64
    };
    let ten = RBig::from(10u8);
    let pow = |e: i64| -> RBig {
        if e >= 0 {
            RBig::from(IBig::from(10u8).pow(e as usize))
        } else {
            RBig::ONE / RBig::from(IBig::from(10u8).pow((-e) as usize))
        }
    };
    // Correct the floating estimate so that 10^exp <= |value| < 10^(exp+1).
    let mut lower = pow(exp);
    while lower > abs {
        exp -= 1;
        lower = pow(exp);
    }
    while &lower * &ten <= abs {
        exp += 1;
        lower = &lower * &ten;
    }
    exp
}

fn round_half_even(value: &RBig) -> IBig {
    let floor = value.floor();
    let frac = value - &RBig::from(floor.clone());
    let half = RBig::from_parts(IBig::ONE, 2u8.into());
    match frac.partial_cmp(&half) {
        Some(Ordering::Less) => floor,
        Some(Ordering::Greater) => floor + IBig::ONE,
        _ => {
            if (&floor % IBig::from(2u8)).is_zero() {
                floor
            } else {
                floor + IBig::ONE
            }
        }
    }
}

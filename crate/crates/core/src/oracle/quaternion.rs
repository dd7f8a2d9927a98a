use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::freealg::{fmt_rational, Rational};

/// `a + b·i + c·j + d·k` with Hamilton's product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Quaternion<T = Rational> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Quaternion<T> {
    pub const fn new(a: T, b: T, c: T, d: T) -> Self {
        Quaternion { a, b, c, d }
    }
}

impl<T: Clone + Zero + One + Neg<Output = T>> Quaternion<T> {
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::real(T::one())
    }

    pub fn real(a: T) -> Self {
        Self::new(a, T::zero(), T::zero(), T::zero())
    }

    /// The pure imaginary quaternion `x·i + y·j + z·k`.
    pub fn pure(x: T, y: T, z: T) -> Self {
        Self::new(T::zero(), x, y, z)
    }

    pub fn i() -> Self {
        Self::pure(T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::pure(T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::pure(T::zero(), T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_real()
    }

    /// No imaginary component.
    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// No real component.
    pub fn is_pure(&self) -> bool {
        self.a.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Quaternion<U> {
        Quaternion::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// Hamilton product.
pub fn qmul<T>(x: &Quaternion<T>, y: &Quaternion<T>) -> Quaternion<T>
where
    T: Clone + Zero + One + Neg<Output = T> + Sub<Output = T>,
{
    let (a1, b1, c1, d1) = (&x.a, &x.b, &x.c, &x.d);
    let (a2, b2, c2, d2) = (&y.a, &y.b, &y.c, &y.d);
    let m = |p: &T, q: &T| p.clone() * q.clone();
    Quaternion::new(
        m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
        m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
        m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
        m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
    )
}

pub fn qconj<T: Clone + Zero + One + Neg<Output = T>>(x: &Quaternion<T>) -> Quaternion<T> {
    x.conj()
}

impl Quaternion<i128> {
    /// Hamilton product, or `None` on overflow.
    pub fn checked_mul(&self, y: &Self) -> Option<Self> {
        let m = |p: i128, q: i128| p.checked_mul(q);
        let sum = |t: [Option<i128>; 4], s: [i128; 4]| -> Option<i128> {
            let mut acc: i128 = 0;
            for (v, sign) in t.into_iter().zip(s) {
                acc = acc.checked_add(v?.checked_mul(sign)?)?;
            }
            Some(acc)
        };
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (y.a, y.b, y.c, y.d);
        Some(Quaternion::new(
            sum([m(a1, a2), m(b1, b2), m(c1, c2), m(d1, d2)], [1, -1, -1, -1])?,
            sum([m(a1, b2), m(b1, a2), m(c1, d2), m(d1, c2)], [1, 1, 1, -1])?,
            sum([m(a1, c2), m(b1, d2), m(c1, a2), m(d1, b2)], [1, -1, 1, 1])?,
            sum([m(a1, d2), m(b1, c2), m(c1, b2), m(d1, a2)], [1, 1, -1, 1])?,
        ))
    }

    pub fn checked_add(&self, y: &Self) -> Option<Self> {
        Some(Quaternion::new(
            self.a.checked_add(y.a)?,
            self.b.checked_add(y.b)?,
            self.c.checked_add(y.c)?,
            self.d.checked_add(y.d)?,
        ))
    }

    pub fn checked_scale(&self, s: i128) -> Option<Self> {
        Some(Quaternion::new(
            self.a.checked_mul(s)?,
            self.b.checked_mul(s)?,
            self.c.checked_mul(s)?,
            self.d.checked_mul(s)?,
        ))
    }
}

impl<T> Add for Quaternion<T>
where
    T: Add<Output = T>,
{
    type Output = Self;

    fn add(self, y: Self) -> Self {
        Quaternion::new(self.a + y.a, self.b + y.b, self.c + y.c, self.d + y.d)
    }
}

impl<T> Sub for Quaternion<T>
where
    T: Sub<Output = T>,
{
    type Output = Self;

    fn sub(self, y: Self) -> Self {
        Quaternion::new(self.a - y.a, self.b - y.b, self.c - y.c, self.d - y.d)
    }
}

impl<T> Mul for &Quaternion<T>
where
    T: Clone + Zero + One + Neg<Output = T> + Sub<Output = T>,
{
    type Output = Quaternion<T>;

    fn mul(self, y: &Quaternion<T>) -> Quaternion<T> {
        qmul(self, y)
    }
}

impl fmt::Display for Quaternion<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in [&self.a, &self.b, &self.c, &self.d].into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            fmt_rational(x, f)?;
        }
        f.write_str(")")
    }
}

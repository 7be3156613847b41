//! Dense exponent vectors over the engine's variables.

use alloc::vec::Vec;

pub(crate) type Expo = Vec<u32>;

pub(crate) fn degree(u: &Expo) -> u32 {
    u.iter().sum()
}

pub(crate) fn divides(d: &Expo, m: &Expo) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

pub(crate) fn lcm(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn is_coprime(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x.min(y) == 0)
}

/// `m - d + t` for a reduction step by the binomial `d -> t`.
pub(crate) fn rewrite(m: &Expo, d: &Expo, t: &Expo) -> Expo {
    m.iter()
        .zip(d)
        .zip(t)
        .map(|((&m, &d), &t)| m - d + t)
        .collect()
}

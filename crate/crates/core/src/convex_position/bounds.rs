use num::{BigUint, One};

use crate::error::{Error, Result};

/// `n choose k` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.into()))
    }
}

/// `C(2n-4, n-2)^2 + 1`, for `n >= 3`.
pub fn bound_pach_toth(n: u64) -> Result<BigUint> {
    require(n >= 3, "n must be at least 3")?;
    let c = binomial(2 * n - 4, n - 2);
    Ok(&c * &c + 1u32)
}

/// `(C(2n-5, n-2) + 1) * C(2n-4, n-2) + 1`, for `n >= 3`.
pub fn bound_m(n: u64) -> Result<BigUint> {
    require(n >= 3, "n must be at least 3")?;
    Ok((binomial(2 * n - 5, n - 2) + 1u32) * binomial(2 * n - 4, n - 2) + 1u32)
}

/// `C(k+l+4, l+2) + 1`, for `k, l >= 1`.
pub fn bound_lemma1(k: u64, l: u64) -> Result<BigUint> {
    require(k >= 1 && l >= 1, "k and l must be at least 1")?;
    Ok(binomial(k + l + 4, l + 2) + 1u32)
}

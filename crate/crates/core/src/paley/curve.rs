//! Exponent data of the affine model `w^p = prod_k (z - zeta^k)^(u^k)` for
//! dessins over prime fields.

use std::fmt;

use super::PaleyParams;
use crate::arith;
use crate::error::{Error, Result};

/// Which end of the `c in {0, -1}` pair the model describes; `MinusOne`
/// stands for the substitution `z -> z / (z - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveVariant {
    Zero,
    MinusOne,
}

impl fmt::Display for CurveVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveVariant::Zero => "c0",
            CurveVariant::MinusOne => "cm1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    pub n: u64,
    pub p: u64,
    /// Residue by which `x` scales the translations.
    pub u: u64,
    /// `u^k mod p` for `k = 1..=n`.
    pub exponents: Vec<u64>,
    pub variant: CurveVariant,
}

impl CurveModel {
    /// Model for an explicit multiplier `u` of order `n` modulo `p`.
    pub fn from_multiplier(n: u64, p: u64, u: u64, variant: CurveVariant) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if u.is_multiple_of(p) || arith::mult_order(u % p, p)? != n {
            return Err(Error::InvalidParams(format!(
                "{u} does not have order {n} modulo {p}"
            )));
        }
        let exponents = (1..=n).map(|k| arith::pow_mod(u, k, p)).collect();
        Ok(CurveModel {
            n,
            p,
            u: u % p,
            exponents,
            variant,
        })
    }
}

/// Only prime fields (`p = 1 mod n`) are supported.
pub fn curve_model(n: u64, p: u64, j: u64, variant: CurveVariant) -> Result<CurveModel> {
    let c = match variant {
        CurveVariant::Zero => 0,
        CurveVariant::MinusOne => n - 1,
    };
    let params = PaleyParams::new(n, p, c, j)?;
    if params.d != 1 {
        return Err(Error::Unsupported(format!(
            "curve models need p = 1 mod n; here p has order {} modulo {n}",
            params.d
        )));
    }
    let u = params
        .multiplier_residue()?
        .expect("prime field multipliers are residues");
    CurveModel::from_multiplier(n, p, u, variant)
}

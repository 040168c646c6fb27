use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{binomial, json_int};
use crate::spectra::krawtchouk;

/// Number of trailing `+1` entries `l = n − 2j − h` of the Z₂ family matrix
/// `diag(J,…,J,−1,…,−1,1,…,1)`, after checking `l ≥ 1` and `j + h ≠ 0`.
pub fn z2_trailing_ones(j: usize, h: usize, n: usize) -> Result<usize> {
    if j + h == 0 {
        return Err(Error::InvalidFamilyParameters("j + h must be nonzero".into()));
    }
    match n.checked_sub(2 * j + h) {
        Some(l) if l >= 1 => Ok(l),
        _ => Err(Error::InvalidFamilyParameters(format!(
            "n = {n} leaves no trailing +1 entry for j = {j}, h = {h}"
        ))),
    }
}

/// Closed-form multiplicities for the Z₂ family at `N = 1` and `N = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2ClosedForms {
    pub d_p_at_1: BigInt,
    pub d_p_at_2: BigInt,
    pub d_0_at_1: BigInt,
    pub d_0_at_2: BigInt,
}

impl Serialize for Z2ClosedForms {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Z2ClosedForms", 4)?;
        st.serialize_field("d_p_at_1", &json_int(&self.d_p_at_1))?;
        st.serialize_field("d_p_at_2", &json_int(&self.d_p_at_2))?;
        st.serialize_field("d_0_at_1", &json_int(&self.d_0_at_1))?;
        st.serialize_field("d_0_at_2", &json_int(&self.d_0_at_2))?;
        st.end()
    }
}

pub fn z2_closed_forms(j: usize, h: usize, n: usize, p: usize) -> Result<Z2ClosedForms> {
    let l = z2_trailing_ones(j, h, n)?;
    if p > n {
        return Err(Error::OutOfRange {
            what: "form degree",
            detail: format!("p = {p} > n = {n}"),
        });
    }
    let (ni, ji, li) = (n as i64, j as i64, l as i64);
    let c_np = BigInt::from(binomial(n as u64, p as i64));
    let c_n2 = BigInt::from(binomial(n as u64, 2));
    let k = krawtchouk(n as u64, p as u64, (j + h) as u64)?;
    let shell2_twist = ji + (li - 1) * (li - 4);
    Ok(Z2ClosedForms {
        d_p_at_1: &c_np * ni + &k * (li - 2),
        d_p_at_2: 2 * &c_np * &c_n2 + &k * shell2_twist,
        d_0_at_1: BigInt::from(ni + li - 2),
        d_0_at_2: BigInt::from(ni * (ni - 1) + shell2_twist),
    })
}

/// `β_p = Σ_i C(j+h, 2i) C(j+l, p−2i)` for the Z₂ family.
pub fn z2_betti_closed_form(j: usize, h: usize, n: usize, p: usize) -> Result<BigInt> {
    let l = z2_trailing_ones(j, h, n)?;
    let mut acc = BigInt::default();
    for i in 0..=p / 2 {
        acc += BigInt::from(binomial((j + h) as u64, 2 * i as i64) * binomial((j + l) as u64, (p - 2 * i) as i64));
    }
    Ok(acc)
}

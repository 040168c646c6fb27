use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{binomial, json_int};

/// `K_p^n(x) = Σ_{t=0}^{p} (−1)^t C(x,t) C(n−x,p−t)`, evaluated exactly.
pub fn krawtchouk(n: u64, p: u64, x: u64) -> Result<BigInt> {
    if p > n || x > n {
        return Err(Error::OutOfRange {
            what: "krawtchouk arguments",
            detail: format!("need 0 <= p, x <= n, got n={n}, p={p}, x={x}"),
        });
    }
    let mut acc = BigInt::default();
    for t in 0..=p {
        let term = BigInt::from(binomial(x, t as i64) * binomial(n - x, (p - t) as i64));
        if t % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// All values `K_p^n(x)` for `0 ≤ p, x ≤ n`; `values[p][x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    pub n: u64,
    pub values: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    pub fn new(n: u64) -> Self {
        let values = (0..=n)
            .map(|p| {
                (0..=n)
                    .map(|x| krawtchouk(n, p, x).expect("indices are in range"))
                    .collect()
            })
            .collect();
        KrawtchoukTable { n, values }
    }

    pub fn get(&self, p: usize, x: usize) -> &BigInt {
        &self.values[p][x]
    }
}

impl Serialize for KrawtchoukTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<Vec<serde_json::Value>> = self
            .values
            .iter()
            .map(|row| row.iter().map(json_int).collect())
            .collect();
        let mut st = serializer.serialize_struct("KrawtchoukTable", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("values", &values)?;
        st.end()
    }
}

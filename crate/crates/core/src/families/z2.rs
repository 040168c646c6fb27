use crate::crystal::{BieberbachGroup, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::numeric::Rational4;
use crate::spectra::z2_trailing_ones;

/// `diag(J,…,J, −1,…,−1, 1,…,1)` with `j` swap blocks and `h` entries `−1`.
pub fn z2_linear_part(j: usize, h: usize, n: usize) -> Result<SignedPermutation> {
    z2_trailing_ones(j, h, n)?;
    let mut perm: Vec<usize> = (0..n).collect();
    for b in 0..j {
        perm.swap(2 * b, 2 * b + 1);
    }
    let mut signs = vec![1i8; n];
    for s in signs.iter_mut().skip(2 * j).take(h) {
        *s = -1;
    }
    SignedPermutation::new(perm, signs)
}

/// The group generated by `B_{j,h} L_{e_n/2}` and ℤⁿ.
pub fn z2_group(j: usize, h: usize, n: usize) -> Result<BieberbachGroup> {
    let linear = z2_linear_part(j, h, n)?;
    let mut translation = vec![Rational4::ZERO; n];
    translation[n - 1] = Rational4::HALF;
    let gen = IsometryElement::new(linear, translation)?;
    Ok(BieberbachGroup::from_generators(n, vec![gen])?.with_name(format!("z2/{n}/m{j}_{h}")))
}

/// Parameters `(j, h)` of the family in table order: `j` descending, then `h` descending.
pub fn z2_parameters(n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for j in (0..=(n - 1) / 2).rev() {
        for h in (0..n - 2 * j).rev() {
            if j + h != 0 {
                out.push((j, h));
            }
        }
    }
    out
}

/// Every `ℤ₂`-manifold group with covering torus ℤⁿ\ℝⁿ, one per `(j, h)`.
pub fn z2_family(n: usize) -> Result<Vec<BieberbachGroup>> {
    if n < 2 {
        return Err(Error::InvalidFamilyParameters(format!("n = {n} < 2")));
    }
    z2_parameters(n)
        .into_iter()
        .map(|(j, h)| z2_group(j, h, n))
        .collect()
}

/// `(n − ⌊(n−1)/2⌋)(⌊(n−1)/2⌋ + 1) − 1`.
pub fn z2_family_size(n: usize) -> usize {
    let m = (n - 1) / 2;
    (n - m) * (m + 1) - 1
}

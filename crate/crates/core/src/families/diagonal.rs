use crate::crystal::{BieberbachGroup, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::numeric::Rational4;

/// The group generated by `diag(sign_columns[i]) L_{translations[i]}` and ℤⁿ.
///
/// Translations must lie in `{0, ½}ⁿ` mod ℤⁿ.
pub fn diagonal_group(sign_columns: &[Vec<i8>], translations: &[Vec<Rational4>]) -> Result<BieberbachGroup> {
    if sign_columns.len() != translations.len() {
        return Err(Error::DimensionMismatch {
            expected: sign_columns.len(),
            found: translations.len(),
        });
    }
    let n = sign_columns
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidFamilyParameters("no generators given".into()))?;
    let generators = sign_columns
        .iter()
        .zip(translations)
        .map(|(signs, t)| {
            if signs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: signs.len(),
                });
            }
            if let Some(x) = t.iter().find(|x| !x.is_half_integer()) {
                return Err(Error::InvalidFamilyParameters(format!(
                    "translation coordinate {x} is not in {{0, 1/2}} mod 1"
                )));
            }
            IsometryElement::new(SignedPermutation::diagonal(signs)?, t.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    BieberbachGroup::from_generators(n, generators)
}

/// Hantzsche-Wendt group: generator `i` fixes `e_i`, negates every other axis
/// and translates by ½ along the axes in `half_axes[i]` (0-based).
pub fn hantzsche_wendt(n: usize, half_axes: &[Vec<usize>]) -> Result<BieberbachGroup> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidFamilyParameters(format!("n = {n} must be odd and at least 3")));
    }
    if half_axes.len() != n - 1 {
        return Err(Error::InvalidFamilyParameters(format!(
            "expected {} translation vectors, got {}",
            n - 1,
            half_axes.len()
        )));
    }
    let mut signs = Vec::with_capacity(n - 1);
    let mut translations = Vec::with_capacity(n - 1);
    for (i, axes) in half_axes.iter().enumerate() {
        let mut s = vec![-1i8; n];
        s[i] = 1;
        signs.push(s);
        let mut t = vec![Rational4::ZERO; n];
        for &a in axes {
            if a >= n {
                return Err(Error::InvalidFamilyParameters(format!("axis {a} >= n = {n}")));
            }
            t[a] = Rational4::HALF;
        }
        translations.push(t);
    }
    diagonal_group(&signs, &translations)
}

/// Translation data for a few HW groups in dimension `n` (odd, `n ≥ 3`).
///
/// The two staircase patterns `{i, i+1}` and `{i, i−1 mod n}` work in every odd
/// dimension; dimensions 5 and 7 have one more hand-picked example each.
pub fn hantzsche_wendt_examples(n: usize) -> Result<Vec<BieberbachGroup>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidFamilyParameters(format!("n = {n} must be odd and at least 3")));
    }
    let mut data: Vec<Vec<Vec<usize>>> = vec![
        (0..n - 1).map(|i| vec![i, i + 1]).collect(),
        (0..n - 1).map(|i| vec![i, (i + n - 1) % n]).collect(),
    ];
    match n {
        5 => data.push(vec![vec![0, 1, 3, 4], vec![1, 2, 3, 4], vec![1, 2, 4], vec![2, 3]]),
        7 => data.push(vec![
            vec![0, 2, 5],
            vec![1, 4, 5, 6],
            vec![2, 5, 6],
            vec![3, 5],
            vec![2, 4, 6],
            vec![0, 3, 5],
        ]),
        _ => {}
    }
    data.iter()
        .enumerate()
        .map(|(k, axes)| Ok(hantzsche_wendt(n, axes)?.with_name(format!("hw{n}/{}", (b'a' + k as u8) as char))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{canonical_key, classify_holonomy, is_diagonal_type, is_orientable};

    fn halves(s: &str) -> Vec<Rational4> {
        s.split_whitespace().map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn didicosm_from_columns() {
        let g = diagonal_group(
            &[vec![-1, -1, 1], vec![-1, 1, -1]],
            &[halves("1/2 0 1/2"), halves("0 1/2 0")],
        )
        .unwrap();
        assert_eq!(g.holonomy_order(), 4);
        assert!(is_diagonal_type(g.cosets()));
        assert!(is_orientable(g.cosets()));
    }

    #[test]
    fn zero_translations_have_torsion() {
        let err = diagonal_group(&[vec![-1, 1, 1]], &[halves("0 0 0")]).unwrap_err();
        assert!(matches!(err, Error::Torsion(_)));
    }

    #[test]
    fn quarter_translations_rejected() {
        assert!(diagonal_group(&[vec![-1, 1]], &[halves("0 1/4")]).is_err());
    }

    #[test]
    fn hw_examples_are_hw() {
        for n in [3, 5, 7] {
            let groups = hantzsche_wendt_examples(n).unwrap();
            assert!(groups.len() >= 2);
            for g in &groups {
                assert_eq!(g.holonomy_order(), 1 << (n - 1));
                assert!(is_orientable(g.cosets()));
                assert_eq!(
                    classify_holonomy(g.cosets()).elementary_abelian_rank(),
                    Some(n as u32 - 1)
                );
            }
            let keys: std::collections::BTreeSet<String> = groups.iter().map(canonical_key).collect();
            assert_eq!(keys.len(), groups.len());
        }
        assert_eq!(hantzsche_wendt_examples(5).unwrap().len(), 3);
        assert!(hantzsche_wendt_examples(4).is_err());
        assert!(hantzsche_wendt(5, &[vec![0]]).is_err());
    }
}

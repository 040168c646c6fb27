use crate::crystal::{BieberbachGroup, IsometryElement, SignedPermutation};
use crate::error::{Error, Result};
use crate::families::z2_group;
use crate::numeric::Rational4;

/// Names accepted by [`catalog`], besides `torus/<n>`.
pub const CATALOG_NAMES: &[&str] = &[
    "dim3/m10",
    "dim3/m02",
    "dim3/m01",
    "dim4/m11",
    "dim4/m10",
    "dim4/m03",
    "dim4/m02",
    "dim4/m01",
    "hw3/M1",
    "hw3/M2",
    "hw3/M3",
    "dim6/z4z2_M",
    "dim6/z4z2_Mp",
    "dim6/z4_M",
    "dim6/z4_Mp",
];

fn generator(perm: &[usize], signs: &[i8], quarters: &[i64]) -> Result<IsometryElement> {
    IsometryElement::new(
        SignedPermutation::from_one_based(perm, signs)?,
        quarters.iter().map(|&q| Rational4::from_quarters(q)).collect(),
    )
}

fn diag(signs: &[i8], quarters: &[i64]) -> Result<IsometryElement> {
    let perm: Vec<usize> = (1..=signs.len()).collect();
    generator(&perm, signs, quarters)
}

fn hw3(name: &str) -> Option<Result<Vec<IsometryElement>>> {
    let gens = match name {
        "M1" => [diag(&[-1, -1, 1], &[2, 0, 2]), diag(&[-1, 1, -1], &[0, 2, 0])],
        "M2" => [diag(&[-1, -1, 1], &[0, 2, 2]), diag(&[1, -1, 1], &[0, 0, 2])],
        "M3" => [diag(&[-1, -1, 1], &[0, 2, 2]), diag(&[1, -1, 1], &[2, 0, 0])],
        _ => return None,
    };
    Some(gens.into_iter().collect())
}

fn dim6(name: &str) -> Option<Result<Vec<IsometryElement>>> {
    let b1 = || generator(&[2, 1, 4, 3, 5, 6], &[-1, 1, -1, 1, 1, 1], &[0, 0, 0, 0, 1, 0]);
    let b2 = || diag(&[-1, -1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 2]);
    let b1p = || generator(&[2, 1, 3, 4, 5, 6], &[-1, 1, 1, -1, -1, 1], &[0, 0, 0, 0, 0, 1]);
    let b2p = || diag(&[-1, -1, -1, 1, -1, 1], &[0, 0, 0, 2, 2, 0]);
    let gens = match name {
        "z4z2_M" => vec![b1(), b2()],
        "z4z2_Mp" => vec![b1p(), b2p()],
        "z4_M" => vec![b1()],
        "z4_Mp" => vec![b1p()],
        _ => return None,
    };
    Some(gens.into_iter().collect())
}

fn z2_params(name: &str) -> Option<(usize, usize)> {
    let digits = name.strip_prefix('m')?.as_bytes();
    match digits {
        [j, h] if j.is_ascii_digit() && h.is_ascii_digit() => Some(((j - b'0') as usize, (h - b'0') as usize)),
        _ => None,
    }
}

/// Looks up a named example group.
pub fn catalog(name: &str) -> Result<BieberbachGroup> {
    let unknown = || Error::UnknownCatalogName(name.to_string());
    let (family, member) = name.split_once('/').ok_or_else(unknown)?;
    let group = match family {
        "torus" => {
            let n: usize = member.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            return Ok(BieberbachGroup::torus(n));
        }
        "dim3" | "dim4" => {
            let n = if family == "dim3" { 3 } else { 4 };
            if !CATALOG_NAMES.contains(&name) {
                return Err(unknown());
            }
            let (j, h) = z2_params(member).ok_or_else(unknown)?;
            z2_group(j, h, n)?
        }
        "hw3" => BieberbachGroup::from_generators(3, hw3(member).ok_or_else(unknown)??)?,
        "dim6" => BieberbachGroup::from_generators(6, dim6(member).ok_or_else(unknown)??)?,
        _ => return Err(unknown()),
    };
    Ok(group.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{classify_holonomy, is_diagonal_type, is_orientable, HolonomyClass};

    #[test]
    fn every_name_resolves() {
        for name in CATALOG_NAMES {
            let g = catalog(name).unwrap();
            assert_eq!(g.name(), Some(*name));
        }
    }

    #[test]
    fn unknown_names() {
        for bad in ["", "dim3", "dim3/m11", "dim5/m10", "hw3/M4", "torus/0", "torus/x", "dim6/z4"] {
            assert!(matches!(catalog(bad), Err(Error::UnknownCatalogName(_))), "{bad}");
        }
    }

    #[test]
    fn holonomy_types() {
        assert_eq!(catalog("hw3/M1").unwrap().holonomy_order(), 4);
        let m = catalog("dim6/z4z2_M").unwrap();
        assert_eq!(m.holonomy_order(), 8);
        assert_eq!(
            classify_holonomy(m.cosets()),
            HolonomyClass::Abelian {
                elementary_divisors: vec![4, 2]
            }
        );
        let z4 = catalog("dim6/z4_M").unwrap();
        assert_eq!(classify_holonomy(z4.cosets()), HolonomyClass::Cyclic { order: 4 });
        assert!(is_orientable(m.cosets()));
        assert!(!is_diagonal_type(m.cosets()));
    }

    #[test]
    fn first_amphicosm_generator() {
        let g = catalog("dim3/m01").unwrap();
        let gen = &g.generators()[0];
        assert_eq!(gen.linear(), &SignedPermutation::diagonal(&[-1, 1, 1]).unwrap());
        assert_eq!(gen.translation()[2], Rational4::HALF);
        assert_eq!(catalog("torus/4").unwrap().holonomy_order(), 1);
    }
}

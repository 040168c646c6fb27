use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::crystal::{BieberbachGroup, IsometryElement};
use crate::error::{Error, Result};
use crate::lattice::{shell_vectors_capped, Shell, DEFAULT_SHELL_CAP};
use crate::numeric::{json_uint, GaussianInt};
use crate::spectra::trace_p;

/// Multiplicities of the eigenvalue `4π²N` on p-forms for every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityRow {
    pub group: String,
    pub norm_sq: u64,
    pub shell_size: usize,
    /// `d_0 … d_n`.
    pub degrees: Vec<BigUint>,
    pub forms: BigUint,
    pub even: BigUint,
    pub odd: BigUint,
}

impl MultiplicityRow {
    fn new(group: String, norm_sq: u64, shell_size: usize, degrees: Vec<BigUint>) -> Self {
        let mut even = BigUint::zero();
        let mut odd = BigUint::zero();
        for (p, d) in degrees.iter().enumerate() {
            if p % 2 == 0 {
                even += d;
            } else {
                odd += d;
            }
        }
        MultiplicityRow {
            group,
            norm_sq,
            shell_size,
            degrees,
            forms: &even + &odd,
            even,
            odd,
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len() - 1
    }
}

impl Serialize for MultiplicityRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let degrees: Vec<_> = self.degrees.iter().map(json_uint).collect();
        let mut st = serializer.serialize_struct("MultiplicityRow", 7)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("N", &self.norm_sq)?;
        st.serialize_field("shell_size", &self.shell_size)?;
        st.serialize_field("d", &degrees)?;
        st.serialize_field("d_f", &json_uint(&self.forms))?;
        st.serialize_field("d_e", &json_uint(&self.even))?;
        st.serialize_field("d_o", &json_uint(&self.odd))?;
        st.end()
    }
}

/// `Σ_{v ∈ shell, Bv = v} e^{-2πi v·b}`, accumulated by residue of `4 v·b` mod 4.
pub fn character_sum_on_shell(element: &IsometryElement, shell: &Shell) -> GaussianInt {
    let mut counts = [0u64; 4];
    for v in shell.iter() {
        if element.linear().fixes(v) {
            counts[element.character_quarters(v).rem_euclid(4) as usize] += 1;
        }
    }
    let diff = |a: u64, b: u64| BigInt::from(a) - BigInt::from(b);
    GaussianInt::new(diff(counts[0], counts[2]), diff(counts[3], counts[1]))
}

/// Evaluates multiplicities for one group, caching the exterior traces of
/// every holonomy element.
#[derive(Debug, Clone)]
pub struct SpectralEngine<'g> {
    group: &'g BieberbachGroup,
    // traces[γ][p]
    traces: Vec<Vec<BigInt>>,
    shell_cap: u64,
}

impl<'g> SpectralEngine<'g> {
    pub fn new(group: &'g BieberbachGroup) -> Self {
        let n = group.dim();
        let traces = group
            .elements()
            .iter()
            .map(|g| (0..=n).map(|p| trace_p(g.linear(), p)).collect())
            .collect();
        SpectralEngine {
            group,
            traces,
            shell_cap: DEFAULT_SHELL_CAP,
        }
    }

    pub fn with_shell_cap(mut self, cap: u64) -> Self {
        self.shell_cap = cap;
        self
    }

    pub fn group(&self) -> &BieberbachGroup {
        self.group
    }

    pub fn shell(&self, norm_sq: u64) -> Result<Shell> {
        shell_vectors_capped(self.group.dim(), norm_sq, self.shell_cap)
    }

    /// Character sums of every holonomy representative, in element order.
    pub fn character_sums(&self, shell: &Shell) -> Vec<GaussianInt> {
        self.group
            .elements()
            .par_iter()
            .map(|g| character_sum_on_shell(g, shell))
            .collect()
    }

    pub fn row(&self, norm_sq: u64) -> Result<MultiplicityRow> {
        let shell = self.shell(norm_sq)?;
        self.row_for_shell(&shell)
    }

    pub fn row_for_shell(&self, shell: &Shell) -> Result<MultiplicityRow> {
        if shell.dim() != self.group.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.group.dim(),
                found: shell.dim(),
            });
        }
        let sums = self.character_sums(shell);
        let degrees = (0..=self.group.dim())
            .map(|p| self.average(&sums, p, shell.norm_sq()))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiplicityRow::new(
            self.group.label(),
            shell.norm_sq(),
            shell.len(),
            degrees,
        ))
    }

    fn average(&self, sums: &[GaussianInt], p: usize, norm_sq: u64) -> Result<BigUint> {
        let mut total = GaussianInt::zero();
        for (trace, e) in self.traces.iter().zip(sums) {
            total += &e.scale(&trace[p]);
        }
        let order = self.group.holonomy_order();
        let (q, r) = total.re.div_rem(&BigInt::from(order));
        if !total.is_real() || !r.is_zero() || q.sign() == Sign::Minus {
            return Err(Error::NonIntegralMultiplicity {
                numerator: total.to_string(),
                order,
                norm_sq,
                degree: p,
            });
        }
        Ok(q.to_biguint().expect("nonnegative"))
    }

    pub fn d_p(&self, p: usize, norm_sq: u64) -> Result<BigUint> {
        self.check_degree(p)?;
        let shell = self.shell(norm_sq)?;
        let sums = self.character_sums(&shell);
        self.average(&sums, p, norm_sq)
    }

    /// `β_p`, the multiplicity of the zero eigenvalue.
    pub fn betti_numbers(&self) -> Vec<BigUint> {
        self.row(0)
            .expect("the zero shell is always within the cap and multiplicities at N=0 are integral")
            .degrees
    }

    fn check_degree(&self, p: usize) -> Result<()> {
        if p > self.group.dim() {
            return Err(Error::OutOfRange {
                what: "form degree",
                detail: format!("p = {p} > n = {}", self.group.dim()),
            });
        }
        Ok(())
    }
}

/// `e_{N,γ}` for a representative of `group`.
pub fn character_sum(group: &BieberbachGroup, element: &IsometryElement, norm_sq: u64) -> Result<GaussianInt> {
    if !group.elements().contains(element) {
        return Err(Error::OutOfRange {
            what: "representative",
            detail: format!("{element} is not a coset representative of {}", group.label()),
        });
    }
    let shell = SpectralEngine::new(group).shell(norm_sq)?;
    Ok(character_sum_on_shell(element, &shell))
}

pub fn multiplicity_row(group: &BieberbachGroup, norm_sq: u64) -> Result<MultiplicityRow> {
    SpectralEngine::new(group).row(norm_sq)
}

pub fn d_p(group: &BieberbachGroup, p: usize, norm_sq: u64) -> Result<BigUint> {
    SpectralEngine::new(group).d_p(p, norm_sq)
}

pub fn d_f(group: &BieberbachGroup, norm_sq: u64) -> Result<BigUint> {
    Ok(multiplicity_row(group, norm_sq)?.forms)
}

pub fn d_e(group: &BieberbachGroup, norm_sq: u64) -> Result<BigUint> {
    Ok(multiplicity_row(group, norm_sq)?.even)
}

pub fn d_o(group: &BieberbachGroup, norm_sq: u64) -> Result<BigUint> {
    Ok(multiplicity_row(group, norm_sq)?.odd)
}

/// `β_p`; zero for `p > n`.
pub fn betti(group: &BieberbachGroup, p: usize) -> BigUint {
    SpectralEngine::new(group)
        .betti_numbers()
        .into_iter()
        .nth(p)
        .unwrap_or_default()
}

pub fn betti_numbers(group: &BieberbachGroup) -> Vec<BigUint> {
    SpectralEngine::new(group).betti_numbers()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::SignedPermutation;
    use crate::numeric::{binomial, Rational4};

    fn elem(signs: &[i8], t: &[i64]) -> IsometryElement {
        IsometryElement::new(
            SignedPermutation::diagonal(signs).unwrap(),
            t.iter().map(|&q| Rational4::from_quarters(q)).collect(),
        )
        .unwrap()
    }

    fn hw3() -> BieberbachGroup {
        BieberbachGroup::from_generators(
            3,
            vec![elem(&[-1, -1, 1], &[2, 0, 2]), elem(&[-1, 1, -1], &[0, 2, 0])],
        )
        .unwrap()
    }

    fn u(row: &MultiplicityRow) -> Vec<u64> {
        row.degrees.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn torus_rows() {
        let t = BieberbachGroup::torus(3);
        let row = multiplicity_row(&t, 1).unwrap();
        assert_eq!(u(&row), vec![6, 18, 18, 6]);
        assert_eq!(row.forms, BigUint::from(48u32));
        assert_eq!(d_p(&t, 1, 1).unwrap(), BigUint::from(18u32));
        for n in 1..=4 {
            let t = BieberbachGroup::torus(n);
            for big_n in 0..6 {
                let row = multiplicity_row(&t, big_n).unwrap();
                for p in 0..=n {
                    assert_eq!(row.degrees[p], binomial(n as u64, p as i64) * row.shell_size);
                }
            }
        }
    }

    #[test]
    fn hantzsche_wendt_rows() {
        let g = hw3();
        let r1 = multiplicity_row(&g, 1).unwrap();
        assert_eq!(u(&r1), vec![0, 6, 6, 0]);
        assert_eq!((r1.even.clone(), r1.odd.clone()), (BigUint::from(6u32), BigUint::from(6u32)));
        assert_eq!(d_p(&g, 1, 5).unwrap(), BigUint::from(18u32));
        assert_eq!(d_f(&g, 5).unwrap(), BigUint::from(48u32));
        let betti: Vec<u64> = betti_numbers(&g).iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(betti, vec![1, 0, 0, 1]);
        assert_eq!(betti_numbers(&g)[3], super::betti(&g, 3));
        assert!(super::betti(&g, 9).is_zero());
    }

    #[test]
    fn character_sums_of_generators() {
        let g = hw3();
        let first = g.generators()[0].clone();
        assert_eq!(character_sum(&g, &first, 1).unwrap(), GaussianInt::new(-2, 0));
        let stranger = elem(&[-1, -1, 1], &[0, 0, 0]);
        assert!(character_sum(&g, &stranger, 1).is_err());
    }

    #[test]
    fn degree_and_cap_errors() {
        let g = hw3();
        assert!(matches!(d_p(&g, 4, 1), Err(Error::OutOfRange { .. })));
        let engine = SpectralEngine::new(&g).with_shell_cap(3);
        assert!(matches!(engine.row(4), Err(Error::ShellCapExceeded { .. })));
    }

    #[test]
    fn row_json_layout() {
        let row = multiplicity_row(&hw3().with_name("hw"), 1).unwrap();
        assert_eq!(
            serde_json::to_string(&row).unwrap(),
            r#"{"group":"hw","N":1,"shell_size":6,"d":[0,6,6,0],"d_f":12,"d_e":6,"d_o":6}"#
        );
    }
}

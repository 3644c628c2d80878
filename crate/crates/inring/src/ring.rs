//! Ring model. A finite commutative ring is described only by how its ideal
//! lattice looks: a product of components, each either a field or a chain
//! ring whose non-trivial ideals form a single chain
//!
//!   0 = I_0 < I_1 < ... < I_k < I_{k+1} = R_i.
//!
//! The component is recorded as the chain length k (k = 0 means a field), so
//! an ideal of the product is just a vector of per-component levels in
//! 0..=k_i+1. That vector is all the arithmetic we ever need: containment is
//! componentwise comparison.

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// Hard cap on the total ideal count of a spec, so a typo like C9999999999
/// cannot take the process down.
pub const DEFAULT_MAX_IDEALS: u64 = 1 << 24;

/// Shape of a finite commutative ring, as an ordered list of chain lengths.
/// `chain_lengths[i]` is the number of non-trivial ideals of component i;
/// zero marks a field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingSpec {
    chain_lengths: Vec<u32>,
}

/// One ideal of a product ring, one level per component. Level 0 is the zero
/// ideal of that component, the maximum level is the component itself.
/// Lexicographic `Ord` on the level vector is the canonical vertex order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IdealVector {
    levels: Vec<u32>,
}

impl RingSpec {
    pub fn new(chain_lengths: Vec<u32>) -> Result<Self, Error> {
        Self::with_max_ideals(chain_lengths, DEFAULT_MAX_IDEALS)
    }

    pub fn with_max_ideals(chain_lengths: Vec<u32>, limit: u64) -> Result<Self, Error> {
        if chain_lengths.is_empty() {
            return Err(Error::EmptySpec);
        }
        let mut total: u128 = 1;
        for &n in &chain_lengths {
            total = total.saturating_mul(n as u128 + 2);
            if total > limit as u128 {
                return Err(Error::OverflowingSpec { got: total, limit });
            }
        }
        Ok(RingSpec { chain_lengths })
    }

    /// Parses the textual form: comma-separated components, each `F` for a
    /// field or `C<k>` for a chain ring with k non-trivial ideals (k >= 1).
    /// Whitespace is ignored. Examples: "F,F,F", "C2,F", " C1 , C1 ".
    pub fn parse(text: &str) -> Result<Self, Error> {
        Self::parse_with_max_ideals(text, DEFAULT_MAX_IDEALS)
    }

    pub fn parse_with_max_ideals(text: &str, limit: u64) -> Result<Self, Error> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::EmptySpec);
        }
        let mut lengths = Vec::new();
        for token in cleaned.split(',') {
            let n = match token.split_at_checked(1) {
                Some(("F", "")) | Some(("f", "")) => 0,
                Some(("C", k)) | Some(("c", k)) => match k.parse::<u32>() {
                    Ok(k) if k >= 1 => k,
                    _ => return Err(Error::Syntax(token.to_string())),
                },
                _ => return Err(Error::Syntax(token.to_string())),
            };
            lengths.push(n);
        }
        Self::with_max_ideals(lengths, limit)
    }

    pub fn chain_lengths(&self) -> &[u32] {
        &self.chain_lengths
    }

    pub fn component_count(&self) -> usize {
        self.chain_lengths.len()
    }

    /// Textual form, the inverse of `parse`.
    pub fn display(&self) -> String {
        self.chain_lengths
            .iter()
            .map(|&n| if n == 0 { "F".to_string() } else { format!("C{n}") })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn field_count(&self) -> usize {
        self.chain_lengths.iter().filter(|&&n| n == 0).count()
    }

    pub fn non_field_count(&self) -> usize {
        self.chain_lengths.iter().filter(|&&n| n > 0).count()
    }

    /// Indices of the field components, in input order.
    pub fn field_positions(&self) -> Vec<usize> {
        (0..self.chain_lengths.len()).filter(|&i| self.chain_lengths[i] == 0).collect()
    }

    /// Indices of the non-field components, in input order.
    pub fn non_field_positions(&self) -> Vec<usize> {
        (0..self.chain_lengths.len()).filter(|&i| self.chain_lengths[i] > 0).collect()
    }

    /// Number of ideals of the product, the two trivial ones included.
    pub fn total_ideal_count(&self) -> u64 {
        self.chain_lengths.iter().map(|&n| n as u64 + 2).product()
    }

    /// Number of non-trivial ideals, i.e. graph vertices.
    pub fn vertex_count(&self) -> u64 {
        self.total_ideal_count() - 2
    }

    /// Top level of component i, the component itself.
    pub fn top_level(&self, i: usize) -> u32 {
        self.chain_lengths[i] + 1
    }

    /// All non-trivial ideals in ascending lexicographic order of their
    /// level vectors.
    pub fn enumerate_ideals(&self) -> Vec<IdealVector> {
        let m = self.chain_lengths.len();
        let mut out = Vec::with_capacity(self.vertex_count() as usize);
        let mut levels = vec![0u32; m];
        loop {
            // odometer step
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if levels[i] < self.top_level(i) {
                    levels[i] += 1;
                    for l in &mut levels[i + 1..] {
                        *l = 0;
                    }
                    break;
                }
            }
            if levels.iter().enumerate().any(|(i, &l)| l < self.top_level(i)) {
                out.push(IdealVector { levels: levels.clone() });
            }
        }
    }

    /// The minimal ideal supported on field component i: the component
    /// itself in slot i, zero elsewhere.
    pub fn minimal_ideal(&self, i: usize) -> Result<IdealVector, Error> {
        if i >= self.chain_lengths.len() {
            return Err(Error::BadIndex(i));
        }
        if self.chain_lengths[i] != 0 {
            return Err(Error::NotAField(i));
        }
        let mut levels = vec![0u32; self.chain_lengths.len()];
        levels[i] = 1;
        Ok(IdealVector { levels })
    }

    /// Checks that `v` is a vertex of this ring's graph: right length, levels
    /// in range, neither the zero ideal nor the whole ring.
    pub fn validate_vertex(&self, v: &IdealVector) -> Result<(), Error> {
        if v.levels.len() != self.chain_lengths.len() {
            return Err(Error::LengthMismatch);
        }
        for (i, &l) in v.levels.iter().enumerate() {
            if l > self.top_level(i) {
                return Err(Error::BadVertex);
            }
        }
        if v.is_zero() || v.is_unit(self) {
            return Err(Error::BadVertex);
        }
        Ok(())
    }
}

impl IdealVector {
    pub fn new(levels: Vec<u32>) -> Self {
        IdealVector { levels }
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(|&l| l == 0)
    }

    pub fn is_unit(&self, spec: &RingSpec) -> bool {
        self.levels.iter().enumerate().all(|(i, &l)| l == spec.top_level(i))
    }

    /// Strict containment: self > other in every coordinate sense, i.e.
    /// other_i <= self_i for all i and the two differ somewhere.
    pub fn properly_contains(&self, other: &IdealVector) -> Result<bool, Error> {
        if self.levels.len() != other.levels.len() {
            return Err(Error::LengthMismatch);
        }
        Ok(contains_unchecked(&self.levels, &other.levels) && self != other)
    }

    /// One of the two strictly contains the other. This is exactly the edge
    /// relation of the inclusion graph.
    pub fn comparable(&self, other: &IdealVector) -> Result<bool, Error> {
        if self.levels.len() != other.levels.len() {
            return Err(Error::LengthMismatch);
        }
        if self == other {
            return Ok(false);
        }
        Ok(contains_unchecked(&self.levels, &other.levels)
            || contains_unchecked(&other.levels, &self.levels))
    }

    /// The complement ideal: the full component wherever this ideal is zero,
    /// zero everywhere else. Fails when the result would be a trivial ideal
    /// (no zero component, or the zero vector itself).
    pub fn complement(&self, spec: &RingSpec) -> Result<IdealVector, Error> {
        if self.levels.len() != spec.chain_lengths().len() {
            return Err(Error::LengthMismatch);
        }
        if !self.levels.contains(&0) || self.is_zero() {
            return Err(Error::NoComplementVertex);
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, &l)| if l == 0 { spec.top_level(i) } else { 0 })
            .collect();
        Ok(IdealVector { levels })
    }

    /// Member of M: every component is either zero or the full component.
    pub fn is_in_m(&self, spec: &RingSpec) -> bool {
        self.levels
            .iter()
            .enumerate()
            .all(|(i, &l)| l == 0 || l == spec.top_level(i))
    }

    /// Number of zero components.
    pub fn nzc(&self) -> usize {
        self.levels.iter().filter(|&&l| l == 0).count()
    }

    /// Human form, one token per component joined by `sep`: "0" for the zero
    /// ideal, "F"/"R" for a full field/chain component, "I<k>" for the k-th
    /// chain ideal. E.g. (0,2,3) over C2,C2 x2 renders "0xI2xR" with sep "x".
    pub fn render(&self, spec: &RingSpec, sep: &str) -> String {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if l == 0 {
                    "0".to_string()
                } else if l == spec.top_level(i) {
                    if spec.chain_lengths()[i] == 0 { "F".to_string() } else { "R".to_string() }
                } else {
                    format!("I{l}")
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl From<Vec<u32>> for IdealVector {
    fn from(levels: Vec<u32>) -> Self {
        IdealVector::new(levels)
    }
}

fn contains_unchecked(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(levels: &[u32]) -> IdealVector {
        IdealVector::new(levels.to_vec())
    }

    #[test]
    fn parse_basic_forms() {
        assert_eq!(RingSpec::parse("F,F,F").unwrap().chain_lengths(), &[0, 0, 0]);
        assert_eq!(RingSpec::parse("C2").unwrap().chain_lengths(), &[2]);
        assert_eq!(RingSpec::parse(" C1 , F ,C3 ").unwrap().chain_lengths(), &[1, 0, 3]);
        assert_eq!(RingSpec::parse("c2,f").unwrap().chain_lengths(), &[2, 0]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(RingSpec::parse(""), Err(Error::EmptySpec));
        assert_eq!(RingSpec::parse("   "), Err(Error::EmptySpec));
        assert!(matches!(RingSpec::parse("C0"), Err(Error::Syntax(_))));
        assert!(matches!(RingSpec::parse("G"), Err(Error::Syntax(_))));
        assert!(matches!(RingSpec::parse("C-1"), Err(Error::Syntax(_))));
        assert!(matches!(RingSpec::parse("F,,F"), Err(Error::Syntax(_))));
        assert!(matches!(RingSpec::parse("FF"), Err(Error::Syntax(_))));
        assert!(matches!(RingSpec::parse("C2x"), Err(Error::Syntax(_))));
    }

    #[test]
    fn overflow_guard() {
        let err = RingSpec::new(vec![u32::MAX]).unwrap_err();
        assert!(matches!(err, Error::OverflowingSpec { .. }));
        // 3^16 > 2^24, so sixteen C1 components overflow the default cap
        assert!(matches!(
            RingSpec::new(vec![1; 16]),
            Err(Error::OverflowingSpec { .. })
        ));
        assert!(RingSpec::with_max_ideals(vec![1; 16], u64::MAX).is_ok());
    }

    #[test]
    fn counts() {
        assert_eq!(RingSpec::new(vec![0, 0, 0]).unwrap().vertex_count(), 6);
        assert_eq!(RingSpec::new(vec![1, 1]).unwrap().vertex_count(), 7);
        assert_eq!(RingSpec::new(vec![3, 2, 0]).unwrap().vertex_count(), 38);
        assert_eq!(RingSpec::new(vec![0]).unwrap().vertex_count(), 0);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let spec = RingSpec::new(vec![1, 0]).unwrap();
        let got = spec.enumerate_ideals();
        let want = vec![iv(&[0, 1]), iv(&[1, 0]), iv(&[1, 1]), iv(&[2, 0])];
        assert_eq!(got, want);

        let spec = RingSpec::new(vec![0, 0]).unwrap();
        assert_eq!(spec.enumerate_ideals(), vec![iv(&[0, 1]), iv(&[1, 0])]);

        let spec = RingSpec::new(vec![0, 0, 0]).unwrap();
        let all = spec.enumerate_ideals();
        assert_eq!(all.first(), Some(&iv(&[0, 0, 1])));
        assert_eq!(all.last(), Some(&iv(&[1, 1, 0])));
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn enumeration_count_matches_formula_small_grid() {
        // every spec with up to 4 components and chain lengths up to 3
        for m in 1..=4usize {
            let mut tuple = vec![0u32; m];
            'grid: loop {
                let spec = RingSpec::new(tuple.clone()).unwrap();
                let all = spec.enumerate_ideals();
                assert_eq!(all.len() as u64, spec.vertex_count(), "spec {tuple:?}");
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all, "sorted unique order for {tuple:?}");
                let mut i = m;
                loop {
                    if i == 0 {
                        break 'grid;
                    }
                    i -= 1;
                    if tuple[i] < 3 {
                        tuple[i] += 1;
                        tuple[i + 1..].fill(0);
                        break;
                    }
                    tuple[i] = 0;
                }
            }
        }
    }

    #[test]
    fn containment_and_comparability() {
        let a = iv(&[2, 1]);
        let b = iv(&[1, 1]);
        let c = iv(&[1, 2]);
        assert!(a.properly_contains(&b).unwrap());
        assert!(!b.properly_contains(&a).unwrap());
        assert!(!a.properly_contains(&a).unwrap());
        assert!(!a.properly_contains(&c).unwrap());
        assert!(a.comparable(&b).unwrap());
        assert!(!a.comparable(&c).unwrap());
        assert_eq!(a.properly_contains(&iv(&[1])), Err(Error::LengthMismatch));
    }

    #[test]
    fn complement_cases() {
        let fff = RingSpec::new(vec![0, 0, 0]).unwrap();
        assert_eq!(iv(&[1, 0, 1]).complement(&fff).unwrap(), iv(&[0, 1, 0]));
        assert_eq!(iv(&[0, 1, 0]).complement(&fff).unwrap(), iv(&[1, 0, 1]));

        let c1f = RingSpec::new(vec![1, 0]).unwrap();
        assert_eq!(iv(&[0, 1]).complement(&c1f).unwrap(), iv(&[2, 0]));
        assert_eq!(iv(&[1, 1]).complement(&c1f), Err(Error::NoComplementVertex));
        assert_eq!(iv(&[0, 0]).complement(&c1f), Err(Error::NoComplementVertex));
    }

    #[test]
    fn m_membership_and_nzc() {
        let spec = RingSpec::new(vec![2, 1]).unwrap();
        assert!(iv(&[3, 0]).is_in_m(&spec));
        assert!(iv(&[0, 2]).is_in_m(&spec));
        assert!(!iv(&[2, 0]).is_in_m(&spec));
        assert!(!iv(&[3, 1]).is_in_m(&spec));
        assert_eq!(iv(&[0, 2]).nzc(), 1);
        assert_eq!(iv(&[0, 0]).nzc(), 2);
    }

    #[test]
    fn minimal_ideals() {
        let spec = RingSpec::new(vec![0, 0, 0]).unwrap();
        assert_eq!(spec.minimal_ideal(1).unwrap(), iv(&[0, 1, 0]));
        let spec = RingSpec::new(vec![1, 0]).unwrap();
        assert_eq!(spec.minimal_ideal(0), Err(Error::NotAField(0)));
        assert_eq!(spec.minimal_ideal(1).unwrap(), iv(&[0, 1]));
        assert_eq!(spec.minimal_ideal(7), Err(Error::BadIndex(7)));
    }

    #[test]
    fn rendering() {
        let spec = RingSpec::new(vec![0, 2, 1]).unwrap();
        assert_eq!(iv(&[0, 2, 2]).render(&spec, "x"), "0xI2xR");
        assert_eq!(iv(&[1, 0, 1]).render(&spec, " x "), "F x 0 x I1");
        assert_eq!(spec.display(), "F,C2,C1");
        assert_eq!(RingSpec::parse(&spec.display()).unwrap(), spec);
    }

    #[test]
    fn validate_vertex_bounds() {
        let spec = RingSpec::new(vec![1, 0]).unwrap();
        assert!(spec.validate_vertex(&iv(&[2, 0])).is_ok());
        assert_eq!(spec.validate_vertex(&iv(&[0, 0])), Err(Error::BadVertex));
        assert_eq!(spec.validate_vertex(&iv(&[2, 1])), Err(Error::BadVertex));
        assert_eq!(spec.validate_vertex(&iv(&[3, 0])), Err(Error::BadVertex));
        assert_eq!(spec.validate_vertex(&iv(&[1])), Err(Error::LengthMismatch));
    }

    proptest! {
        #[test]
        fn complement_lands_in_m_and_is_involutive(lengths in prop::collection::vec(0u32..3, 2..5)) {
            let spec = RingSpec::new(lengths).unwrap();
            for v in spec.enumerate_ideals() {
                match v.complement(&spec) {
                    Ok(c) => {
                        prop_assert!(c.is_in_m(&spec));
                        prop_assert!(spec.validate_vertex(&c).is_ok());
                        if v.is_in_m(&spec) {
                            prop_assert_eq!(c.complement(&spec).unwrap(), v);
                        }
                    }
                    Err(e) => prop_assert_eq!(e, Error::NoComplementVertex),
                }
            }
        }

        #[test]
        fn containment_is_a_strict_partial_order(lengths in prop::collection::vec(0u32..3, 1..4)) {
            let spec = RingSpec::new(lengths).unwrap();
            let all = spec.enumerate_ideals();
            for a in &all {
                prop_assert!(!a.properly_contains(a).unwrap());
                for b in &all {
                    if a.properly_contains(b).unwrap() {
                        prop_assert!(!b.properly_contains(a).unwrap());
                        for c in &all {
                            if b.properly_contains(c).unwrap() {
                                prop_assert!(a.properly_contains(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

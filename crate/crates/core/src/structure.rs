//! Frobenius and 2-Frobenius structure.
//!
//! Detection takes `K = F(G)` and `L` as the preimage of `F(G/K)`, then
//! re-verifies both Frobenius conditions with the centralizer
//! characterization. Nothing unverified is ever returned.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, is_power_of, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::graphs::delta_component_labels;
use crate::group::{EnumeratedGroup, Subgroup};

/// Which closed-form count applies to a 2-Frobenius group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// `|K|` has at least two prime divisors.
    A,
    /// `K` and `G/L` are p-groups for the same `p`.
    B,
    /// `K` is a p-group and `|G:L|` is not a power of `p`.
    C,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::A => "A",
            CaseLabel::B => "B",
            CaseLabel::C => "C",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FrobeniusDecomposition<'g> {
    pub kernel: Subgroup<'g>,
    pub complement_order: u64,
}

#[derive(Clone, Debug)]
pub struct TwoFrobeniusDecomposition<'g> {
    pub k: Subgroup<'g>,
    pub l: Subgroup<'g>,
    /// `|L:K|`, the order of a Frobenius complement of `L`.
    pub h_order: u64,
    pub index_g_l: u64,
    /// `|K| * |G:L|`.
    pub d_order: u64,
    /// `|G| / |K|`, the order of `N_G(H)`.
    pub n_order: u64,
    pub case_label: CaseLabel,
    /// The prime of cases B and C.
    pub p: Option<u64>,
}

impl TwoFrobeniusDecomposition<'_> {
    pub fn k_order(&self) -> u64 {
        self.k.order() as u64
    }
}

/// `N` is normal and proper, nontrivial, and `C_G(x) <= N` for all `x` in `N#`.
pub fn is_frobenius_with_kernel(group: &EnumeratedGroup, kernel: &Subgroup<'_>) -> bool {
    if !core::ptr::eq(group, kernel.group()) {
        return false;
    }
    let n = kernel.order();
    if n <= 1 || n >= group.order() || !group.is_normal(kernel) {
        return false;
    }
    let outside: Vec<usize> = (0..group.order()).filter(|&g| !kernel.contains(g)).collect();
    kernel.members()[1..]
        .iter()
        .all(|&x| outside.iter().all(|&g| !group.commute(x, g)))
}

pub fn detect_frobenius(group: &EnumeratedGroup) -> Option<FrobeniusDecomposition<'_>> {
    let kernel = group.fitting();
    if !is_frobenius_with_kernel(group, &kernel) {
        return None;
    }
    let complement_order = (group.order() / kernel.order()) as u64;
    Some(FrobeniusDecomposition {
        kernel,
        complement_order,
    })
}

pub fn detect_two_frobenius(group: &EnumeratedGroup) -> Result<Option<TwoFrobeniusDecomposition<'_>>> {
    let k = group.fitting();
    if k.is_trivial() || k.is_whole() {
        return Ok(None);
    }
    let quotient = group.coset_action(&k)?;
    let top = quotient.image().fitting();
    let l = quotient.preimage(&top);
    drop(quotient);
    verify_two_frobenius_chain(group, k, l)
}

/// Checks a candidate chain `1 < K < L < G`; the override path for callers
/// that know `K` and `L`.
pub fn verify_two_frobenius_chain<'g>(
    group: &'g EnumeratedGroup,
    k: Subgroup<'g>,
    l: Subgroup<'g>,
) -> Result<Option<TwoFrobeniusDecomposition<'g>>> {
    if !core::ptr::eq(group, k.group()) || !core::ptr::eq(group, l.group()) {
        return Err(Error::NotMember);
    }
    let (ko, lo, go) = (k.order(), l.order(), group.order());
    if ko <= 1 || lo <= ko || go <= lo || !k.is_subset_of(&l) {
        return Ok(None);
    }
    if !group.is_normal(&k) || !group.is_normal(&l) {
        return Ok(None);
    }
    let l_group = l.to_group();
    let k_in_l = l_group.embed(&k)?;
    if !is_frobenius_with_kernel(&l_group, &k_in_l) {
        return Ok(None);
    }
    drop(k_in_l);
    drop(l_group);
    let quotient = group.coset_action(&k)?;
    let image = quotient.image();
    let mut flags = vec![false; image.order()];
    for &m in l.members() {
        flags[quotient.project(m)] = true;
    }
    let top = Subgroup::from_members(image, &(0..flags.len()).filter(|&i| flags[i]).collect::<Vec<_>>())?;
    if !is_frobenius_with_kernel(image, &top) {
        return Ok(None);
    }
    drop(top);
    drop(quotient);

    let (ko, lo, go) = (ko as u64, lo as u64, go as u64);
    let index_g_l = go / lo;
    let primes = prime_divisors(ko);
    let (case_label, p) = match primes.as_slice() {
        [p] if is_power_of(index_g_l, *p) => (CaseLabel::B, Some(*p)),
        [p] => (CaseLabel::C, Some(*p)),
        _ => (CaseLabel::A, None),
    };
    Ok(Some(TwoFrobeniusDecomposition {
        k,
        l,
        h_order: lo / ko,
        index_g_l,
        d_order: ko * index_g_l,
        n_order: go / ko,
        case_label,
        p,
    }))
}

/// `<h>` for the least-index `h` in `L` of order `|L:K|`.
pub fn find_cyclic_complement<'g>(
    group: &'g EnumeratedGroup,
    dec: &TwoFrobeniusDecomposition<'g>,
) -> Result<Subgroup<'g>> {
    let h = dec
        .l
        .members()
        .iter()
        .copied()
        .find(|&x| group.element_order(x) == dec.h_order)
        .ok_or(Error::NoCyclicComplement)?;
    let sub = group.subgroup(&[h]);
    if sub.members().iter().any(|&x| x != 0 && dec.k.contains(x)) {
        return Err(Error::NoCyclicComplement);
    }
    Ok(sub)
}

/// All conjugates of a subgroup, as sorted member lists.
pub fn conjugates_of(group: &EnumeratedGroup, sub: &Subgroup<'_>) -> Vec<Vec<usize>> {
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .filter_map(|g| group.index_of(g.images()))
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(sub.members().to_vec());
    let mut queue = vec![sub.members().to_vec()];
    while let Some(members) = queue.pop() {
        for &s in &gens {
            let mut next: Vec<usize> = members.iter().map(|&x| group.conjugate(x, s)).collect();
            next.sort_unstable();
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    /// Generator of the cyclic complement `H` that was checked.
    pub h_generator: usize,
    pub h_order: u64,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const CHECK_H_CYCLIC_ODD: &str = "complement cyclic of odd order";
pub const CHECK_HALL: &str = "Hall condition gcd(|D|, |H|) = 1";
pub const CHECK_H_COMPONENT: &str = "H# is one cyclic-graph component";
pub const CHECK_CENTRALIZES_KERNEL: &str = "prime-order elements outside conjugates of H centralize K#";
pub const CHECK_TRIVIAL_CENTER: &str = "trivial center";
pub const CHECK_ORDER_PRODUCT: &str = "|G| = |K| |H| |G:L|";

/// Runtime checks of the structural facts 2-Frobenius groups must satisfy.
pub fn verify_structure<'g>(
    group: &'g EnumeratedGroup,
    dec: &TwoFrobeniusDecomposition<'g>,
) -> Result<StructureReport> {
    let h = find_cyclic_complement(group, dec)?;
    let h_generator = h.generators()[0];
    let h_order = h.order() as u64;
    let mut checks = Vec::new();

    checks.push(Check::new(
        CHECK_H_CYCLIC_ODD,
        group.element_order(h_generator) == h_order && h_order % 2 == 1,
    ));
    checks.push(Check::new(CHECK_HALL, gcd(dec.d_order, dec.h_order) == 1));
    checks.push(Check::new(
        CHECK_ORDER_PRODUCT,
        dec.k_order() * dec.h_order * dec.index_g_l == group.order() as u64,
    ));

    let labels = delta_component_labels(group);
    let label = labels[h_generator];
    let same_label = labels.iter().skip(1).filter(|&&c| c == label).count();
    let h_component = h.members()[1..].iter().all(|&x| labels[x] == label) && same_label == h.order() - 1;
    checks.push(Check::new(CHECK_H_COMPONENT, h_component));

    let mut in_conjugate = vec![false; group.order()];
    for conj in conjugates_of(group, &h) {
        for x in conj {
            in_conjugate[x] = true;
        }
    }
    let kernel_nontrivial: Vec<usize> = dec.k.members()[1..].to_vec();
    let thompson = (1..group.order())
        .filter(|&x| !in_conjugate[x] && is_prime(group.element_order(x)))
        .all(|x| kernel_nontrivial.iter().any(|&k| group.commute(x, k)));
    checks.push(Check::new(CHECK_CENTRALIZES_KERNEL, thompson));

    checks.push(Check::new(CHECK_TRIVIAL_CENTER, group.center().is_trivial()));

    Ok(StructureReport {
        h_generator,
        h_order,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, Limits};
    use crate::perm::Permutation;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn s4() -> EnumeratedGroup {
        enumerate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], Limits::default()).unwrap()
    }

    fn a4() -> EnumeratedGroup {
        enumerate(4, &[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])], Limits::default()).unwrap()
    }

    fn s3() -> EnumeratedGroup {
        enumerate(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], Limits::default()).unwrap()
    }

    #[test]
    fn frobenius_kernel_checks() {
        let a4 = a4();
        let v4 = a4.fitting();
        assert_eq!(v4.order(), 4);
        assert!(is_frobenius_with_kernel(&a4, &v4));
        let whole = a4.subgroup(&(0..12).collect::<Vec<_>>());
        assert!(!is_frobenius_with_kernel(&a4, &whole));
        let s4 = s4();
        assert!(!is_frobenius_with_kernel(&s4, &s4.fitting()));
    }

    #[test]
    fn frobenius_detection() {
        let a4 = a4();
        let dec = detect_frobenius(&a4).unwrap();
        assert_eq!((dec.kernel.order(), dec.complement_order), (4, 3));
        let s3 = s3();
        let dec = detect_frobenius(&s3).unwrap();
        assert_eq!((dec.kernel.order(), dec.complement_order), (3, 2));
        assert!(detect_frobenius(&s4()).is_none());
    }

    #[test]
    fn s4_is_two_frobenius_case_b() {
        let g = s4();
        let dec = detect_two_frobenius(&g).unwrap().unwrap();
        assert_eq!(dec.k_order(), 4);
        assert_eq!(dec.l.order(), 12);
        assert_eq!((dec.h_order, dec.index_g_l), (3, 2));
        assert_eq!(dec.case_label, CaseLabel::B);
        assert_eq!(dec.p, Some(2));
        assert_eq!((dec.d_order, dec.n_order), (8, 6));
    }

    #[test]
    fn frobenius_groups_are_not_two_frobenius() {
        assert!(detect_two_frobenius(&a4()).unwrap().is_none());
        assert!(detect_two_frobenius(&s3()).unwrap().is_none());
        let z6 = enumerate(6, &[cyc(6, &[&[0, 1, 2, 3, 4, 5]])], Limits::default()).unwrap();
        assert!(detect_two_frobenius(&z6).unwrap().is_none());
    }

    #[test]
    fn cyclic_complement_of_s4() {
        let g = s4();
        let dec = detect_two_frobenius(&g).unwrap().unwrap();
        let h = find_cyclic_complement(&g, &dec).unwrap();
        assert_eq!(h.order(), 3);
        let gen = g.permutation(h.generators()[0]);
        assert_eq!(gen.order(), 3);
        assert_eq!(gen.cycles().len(), 1);
        assert_eq!(conjugates_of(&g, &h).len(), 4);
    }

    #[test]
    fn s4_structure_checks_pass() {
        let g = s4();
        let dec = detect_two_frobenius(&g).unwrap().unwrap();
        let report = verify_structure(&g, &dec).unwrap();
        assert_eq!(report.h_order, 3);
        assert!(report.all_pass(), "{:?}", report.checks);
        assert_eq!(report.checks.len(), 6);
    }

    #[test]
    fn explicit_chain_override() {
        let g = s4();
        let k = g.fitting();
        let l = g.subgroup(&[
            g.index_of_perm(&cyc(4, &[&[0, 1, 2]])).unwrap(),
            g.index_of_perm(&cyc(4, &[&[1, 2, 3]])).unwrap(),
        ]);
        let dec = verify_two_frobenius_chain(&g, k.clone(), l).unwrap().unwrap();
        assert_eq!(dec.case_label, CaseLabel::B);
        // a non-normal L is rejected
        let bad = g.subgroup(&[g.index_of_perm(&cyc(4, &[&[0, 1, 2, 3]])).unwrap(), k.generators()[0]]);
        assert!(verify_two_frobenius_chain(&g, k, bad).unwrap().is_none());
    }
}

//! Structural predicates the theorems quantify over: prime-set machinery,
//! primary decomposition, Sylow subgroups, normalizers, the normal subgroup
//! lattice, largest normal pi-subgroups, Frobenius kernels and the
//! kernel/complement structure classification.

use std::sync::Arc;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{GroupError, Result};
use crate::group::{
    center, g_classes_in, normal_closure, quotient, PermGroup, Subgroup,
};
use crate::perm::Permutation;

/// Exact prime factor set of `n`, by trial division.
pub fn primes_of(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A sorted, deduplicated set of primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new(mut primes: Vec<u64>) -> PrimeSet {
        primes.sort_unstable();
        primes.dedup();
        debug_assert!(primes.iter().all(|&p| primes_of(p) == vec![p]));
        PrimeSet(primes)
    }

    pub fn of(n: u64) -> PrimeSet {
        PrimeSet(primes_of(n))
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PrimeSet::new(v)
    }

    /// Primes of `n` not in this set.
    pub fn complement_for(&self, n: u64) -> PrimeSet {
        PrimeSet(primes_of(n).into_iter().filter(|p| !self.contains(*p)).collect())
    }

    /// True iff every prime divisor of `n` lies in the set. 1 is a pi-number
    /// for every pi.
    pub fn is_pi_number(&self, n: u64) -> bool {
        primes_of(n).iter().all(|&p| self.contains(p))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut n = n;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

/// pi-part of `n`: product of the p-parts over p in pi.
pub fn pi_part(n: u64, pi: &PrimeSet) -> u64 {
    pi.primes().iter().map(|&p| p_part(n, p)).product()
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended euclid; m > 1, gcd(a, m) = 1
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Commuting prime-power components of `x`, one per prime dividing its order.
/// Each component is a power of `x` and their product reconstructs `x`.
pub fn primary_decomposition(
    x: &Permutation,
    g: &PermGroup,
) -> Result<Vec<(u64, Permutation)>> {
    if !g.contains(x)? {
        return Err(GroupError::NotMember { perm: x.to_string() });
    }
    let n = x.order();
    let mut parts = Vec::new();
    for p in primes_of(n) {
        let pa = p_part(n, p);
        let m = n / pa;
        // exponent e with e = 1 mod pa and e = 0 mod m
        let e = if m == 1 { 1 } else { m * mod_inverse(m % pa, pa) };
        parts.push((p, x.pow(e)));
    }
    Ok(parts)
}

/// Derived subgroup: normal closure of the generator commutators.
fn derived_subgroup(g: &Arc<PermGroup>) -> Result<Arc<PermGroup>> {
    let mut comms = Vec::new();
    for a in g.generators() {
        for b in g.generators() {
            let c = a
                .inverse()
                .then(&b.inverse())
                .then(a)
                .then(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    Ok(Arc::clone(normal_closure(g, &comms)?.group()))
}

/// Solvability via the derived series.
pub fn is_solvable(g: &Arc<PermGroup>) -> Result<bool> {
    let mut current = Arc::clone(g);
    loop {
        if current.is_trivial() {
            return Ok(true);
        }
        let next = derived_subgroup(&current)?;
        if next.order() == current.order() {
            return Ok(false);
        }
        current = next;
    }
}

/// All g in G with H^g = H, by element filtering.
pub fn normalizer(g: &Arc<PermGroup>, h: &Subgroup) -> Result<Subgroup> {
    let members: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|e| {
            h.group()
                .generators()
                .iter()
                .all(|x| h.group().contains(&x.conjugate_by(e)).unwrap_or(false))
        })
        .cloned()
        .collect();
    let sub = PermGroup::from_generators(g.degree(), members)?;
    Subgroup::new(Arc::clone(g), Arc::new(sub))
}

/// A Sylow p-subgroup, built by the ascending chain: start from a cyclic
/// p-subgroup and extend inside normalizers until the full p-part is reached.
/// Returns the trivial subgroup when p does not divide |G|.
pub fn sylow(g: &Arc<PermGroup>, p: u64) -> Result<Subgroup> {
    let elems = g.elements()?;
    let order = u64::try_from(g.order()).expect("enumerable order fits u64");
    let target = p_part(order, p);
    if target == 1 {
        return Ok(Subgroup::trivial(g));
    }
    // Seed: p-component of the first element of order divisible by p.
    let seed = elems
        .iter()
        .find(|e| e.order() % p == 0)
        .expect("Cauchy: p divides |G|");
    let seed_p = seed.pow(seed.order() / p_part(seed.order(), p));
    let mut gens = vec![seed_p];
    let mut current = Arc::new(PermGroup::from_generators(g.degree(), gens.clone())?);
    while u64::try_from(current.order()).unwrap() < target {
        let norm = normalizer(g, &Subgroup::new(Arc::clone(g), Arc::clone(&current))?)?;
        let p_in_norm = Subgroup::new(Arc::clone(norm.group()), Arc::clone(&current))?;
        let quot = quotient(norm.group(), &p_in_norm)?;
        // First element of the normalizer projecting to an order-p coset.
        let next = norm
            .group()
            .elements()?
            .iter()
            .find(|e| quot.project(e).order() == p)
            .expect("p divides |N_G(P) : P| below the Sylow order");
        gens.push(next.clone());
        current = Arc::new(PermGroup::from_generators(g.degree(), gens.clone())?);
    }
    debug_assert_eq!(u64::try_from(current.order()).unwrap(), target);
    Subgroup::new(Arc::clone(g), current)
}

/// The complete normal subgroup lattice of `n`, as the join-closure of the
/// normal closures of its class representatives.
pub fn normal_subgroups(n: &Arc<PermGroup>) -> Result<Vec<Subgroup>> {
    let full = Subgroup::full(n);
    let classes = g_classes_in(n, &full)?;
    let mut atoms = Vec::new();
    for c in &classes {
        if c.representative.is_identity() {
            continue;
        }
        atoms.push(normal_closure(n, std::slice::from_ref(&c.representative))?);
    }
    let trivial = Subgroup::trivial(n);
    let mut found: Vec<(BitSet, Subgroup)> = vec![(trivial.member_bitset()?, trivial)];
    let mut queue: Vec<usize> = vec![0];
    while let Some(i) = queue.pop() {
        let base_gens: Vec<Permutation> = found[i].1.group().generators().to_vec();
        for atom in &atoms {
            let mut gens = base_gens.clone();
            gens.extend(atom.group().generators().iter().cloned());
            let join = Arc::new(PermGroup::from_generators(n.degree(), gens)?);
            let sub = Subgroup::new(Arc::clone(n), join)?;
            let bits = sub.member_bitset()?;
            if !found.iter().any(|(b, _)| *b == bits) {
                found.push((bits, sub));
                queue.push(found.len() - 1);
            }
        }
    }
    found.sort_by_key(|(bits, sub)| (sub.order(), bits.iter_ones().collect::<Vec<_>>()));
    Ok(found.into_iter().map(|(_, s)| s).collect())
}

/// O_pi(N): the largest normal pi-subgroup, generated by the elements whose
/// normal closure is a pi-group.
pub fn o_pi(n: &Arc<PermGroup>, pi: &PrimeSet) -> Result<Subgroup> {
    let full = Subgroup::full(n);
    let classes = g_classes_in(n, &full)?;
    let mut gens = Vec::new();
    for c in &classes {
        if c.representative.is_identity() {
            continue;
        }
        let clo = normal_closure(n, std::slice::from_ref(&c.representative))?;
        if pi.is_pi_number(u64::try_from(clo.order()).unwrap()) {
            gens.push(c.representative.clone());
        }
    }
    let result = normal_closure(n, &gens)?;
    debug_assert!(pi.is_pi_number(u64::try_from(result.order()).unwrap()));
    Ok(result)
}

/// True iff A and B are both normal in N, intersect trivially, and their
/// orders multiply to |N|.
pub fn is_direct_factorization(n: &Arc<PermGroup>, a: &Subgroup, b: &Subgroup) -> Result<bool> {
    for sub in [a, b] {
        for g in n.generators() {
            for x in sub.group().generators() {
                if !sub.group().contains(&x.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
    }
    let mut inter = a.member_bitset()?;
    inter.intersect_with(&b.member_bitset()?);
    Ok(inter.count() == 1 && a.order() * b.order() == n.order())
}

/// Frobenius kernel by the centralizer criterion: a proper nontrivial normal
/// K with C_N(k) <= K for every non-identity k in K. The largest candidate
/// wins; `None` when no candidate passes.
pub fn frobenius_kernel(n: &Arc<PermGroup>) -> Result<Option<Subgroup>> {
    let elems = n.elements()?;
    let mut best: Option<Subgroup> = None;
    for k in normal_subgroups(n)? {
        if k.order() == 1 || k.order() == n.order() {
            continue;
        }
        let k_bits = k.member_bitset()?;
        let mut ok = true;
        'outer: for i in k_bits.iter_ones() {
            let kk = &elems[i];
            if kk.is_identity() {
                continue;
            }
            for (j, e) in elems.iter().enumerate() {
                if e.commutes_with(kk) && !k_bits.contains(j) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok && best.as_ref().map_or(true, |b| k.order() > b.order()) {
            best = Some(k);
        }
    }
    Ok(best)
}

/// Which structural branch a group falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    QuasiFrobeniusAbelian,
    PGroupTimesCentral,
    Neither,
    Inconclusive,
}

/// Result of `classify_structure`.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub kind: StructureKind,
    /// Quasi-Frobenius branch: preimage in N of the kernel of N/Z(N).
    pub kernel: Option<Subgroup>,
    /// Quasi-Frobenius branch: abelian complement-preimage witness.
    pub complement: Option<Subgroup>,
    /// P x A branch: the chosen prime.
    pub p: Option<u64>,
    /// P x A branch: the normal Sylow p-subgroup.
    pub p_part: Option<Subgroup>,
    /// P x A branch: the p'-Hall subgroup of the center.
    pub a_part: Option<Subgroup>,
    pub notes: Vec<String>,
}

impl StructureReport {
    fn bare(kind: StructureKind, notes: Vec<String>) -> StructureReport {
        StructureReport {
            kind,
            kernel: None,
            complement: None,
            p: None,
            p_part: None,
            a_part: None,
            notes,
        }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            StructureKind::PGroupTimesCentral => format!(
                "p_group_times_central(p={}, |P|={}, |A|={})",
                self.p.unwrap_or(0),
                self.p_part.as_ref().map_or(1, |s| s.order()),
                self.a_part.as_ref().map_or(1, |s| s.order()),
            ),
            StructureKind::QuasiFrobeniusAbelian => format!(
                "quasi_frobenius_abelian(|kernel|={}, |complement|={})",
                self.kernel.as_ref().map_or(0, |s| s.order()),
                self.complement.as_ref().map_or(0, |s| s.order()),
            ),
            StructureKind::Neither => "neither".to_string(),
            StructureKind::Inconclusive => "inconclusive".to_string(),
        }
    }
}

/// The pi-elements of an abelian subgroup form a subgroup; here pi = primes
/// away from p.
fn p_prime_hall_of_abelian(z: &Subgroup, p: u64) -> Result<Subgroup> {
    debug_assert!(z.group().is_abelian());
    let members: Vec<Permutation> = z
        .group()
        .elements()?
        .iter()
        .filter(|e| e.order() % p != 0)
        .cloned()
        .collect();
    let sub = PermGroup::from_generators(z.parent().degree(), members)?;
    Subgroup::new(Arc::clone(z.parent()), Arc::new(sub))
}

const COMPLEMENT_SEARCH_BUDGET: usize = 5000;

/// Decide whether N is a p-group times a central Hall complement, or
/// quasi-Frobenius with abelian kernel and complement (meaning: N/Z(N) is
/// Frobenius and the preimages of kernel and complement are abelian).
///
/// The complement search is bounded; exhausting it without a witness yields
/// `Inconclusive`, never a false `Neither`.
pub fn classify_structure(n: &Arc<PermGroup>) -> Result<StructureReport> {
    let order = u64::try_from(n.order()).expect("enumerable order");
    if order == 1 {
        let mut r = StructureReport::bare(StructureKind::PGroupTimesCentral, vec![
            "trivial group: P = 1, A = 1".into(),
        ]);
        r.p_part = Some(Subgroup::trivial(n));
        r.a_part = Some(Subgroup::trivial(n));
        return Ok(r);
    }
    let z = center(n)?;
    let z_order = u64::try_from(z.order()).unwrap();

    // Branch (i): a normal Sylow p-subgroup with central p-complement.
    let mut qualifying: Vec<(u64, Subgroup)> = Vec::new();
    for p in primes_of(order) {
        let syl = sylow(n, p)?;
        if !syl.is_normal() {
            continue;
        }
        if z_order / p_part(z_order, p) == order / p_part(order, p) {
            qualifying.push((p, syl));
        }
    }
    if !qualifying.is_empty() {
        // Several primes qualify only for abelian N; pick the one with the
        // largest Sylow subgroup, then the smallest prime.
        qualifying.sort_by_key(|(p, syl)| (std::cmp::Reverse(syl.order()), *p));
        let (p, syl) = qualifying.into_iter().next().unwrap();
        let a = p_prime_hall_of_abelian(&z, p)?;
        let mut r = StructureReport::bare(StructureKind::PGroupTimesCentral, Vec::new());
        debug_assert_eq!(syl.order() * a.order(), n.order());
        r.p = Some(p);
        r.p_part = Some(syl);
        r.a_part = Some(a);
        return Ok(r);
    }

    // Branch (ii): N/Z(N) Frobenius with abelian preimages.
    let elems = n.elements()?;
    let kernel_in_n: Option<Subgroup> = if z.order() == 1 {
        frobenius_kernel(n)?
    } else {
        let quot = quotient(n, &z)?;
        match frobenius_kernel(&quot.group)? {
            None => None,
            Some(kbar) => {
                let kbar_bits = kbar.member_bitset()?;
                let members: Vec<Permutation> = elems
                    .iter()
                    .filter(|e| kbar_bits.contains(quot.project_index(e)))
                    .cloned()
                    .collect();
                let k = PermGroup::from_generators(n.degree(), members)?;
                Some(Subgroup::new(Arc::clone(n), Arc::new(k))?)
            }
        }
    };
    let kernel = match kernel_in_n {
        None => {
            return Ok(StructureReport::bare(
                StructureKind::Neither,
                vec!["central quotient has no Frobenius kernel".into()],
            ))
        }
        Some(k) => k,
    };
    if !kernel.group().is_abelian() {
        return Ok(StructureReport::bare(
            StructureKind::Neither,
            vec!["Frobenius kernel preimage is not abelian".into()],
        ));
    }

    // Complement-preimage search: abelian H with Z <= H, H meet K = Z and
    // HK = N, generated by Z plus up to 3 coset representatives.
    let k_bits = kernel.member_bitset()?;
    let z_elems = z.group().elements()?;
    let mut reps: Vec<&Permutation> = Vec::new();
    for e in elems {
        // lex-least representative of its Z-coset, outside the kernel
        let i = n.index_of(e).unwrap();
        if k_bits.contains(i) {
            continue;
        }
        if z_elems.iter().all(|zz| &zz.then(e) >= e) {
            reps.push(e);
        }
    }
    let z_gens: Vec<Permutation> = z.group().generators().to_vec();
    let mut budget = COMPLEMENT_SEARCH_BUDGET;
    let target = n.order() * z.order();
    let try_candidate = |extra: &[&Permutation], budget: &mut usize| -> Result<Option<Subgroup>> {
        if *budget == 0 {
            return Ok(None);
        }
        *budget -= 1;
        let mut gens = z_gens.clone();
        gens.extend(extra.iter().map(|p| (*p).clone()));
        let h = Arc::new(PermGroup::from_generators(n.degree(), gens)?);
        if !h.is_abelian() {
            return Ok(None);
        }
        let hsub = Subgroup::new(Arc::clone(n), h)?;
        let mut inter = hsub.member_bitset()?;
        inter.intersect_with(&k_bits);
        if inter.count() as u128 == z.order() && hsub.order() * kernel.order() == target {
            Ok(Some(hsub))
        } else {
            Ok(None)
        }
    };
    let mut witness = None;
    'search: for i in 0..reps.len() {
        if let Some(h) = try_candidate(&[reps[i]], &mut budget)? {
            witness = Some(h);
            break 'search;
        }
        if budget == 0 {
            break 'search;
        }
    }
    if witness.is_none() && budget > 0 {
        'search2: for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if let Some(h) = try_candidate(&[reps[i], reps[j]], &mut budget)? {
                    witness = Some(h);
                    break 'search2;
                }
                if budget == 0 {
                    break 'search2;
                }
            }
        }
    }
    if witness.is_none() && budget > 0 {
        'search3: for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                for l in j + 1..reps.len() {
                    if let Some(h) = try_candidate(&[reps[i], reps[j], reps[l]], &mut budget)? {
                        witness = Some(h);
                        break 'search3;
                    }
                    if budget == 0 {
                        break 'search3;
                    }
                }
            }
        }
    }
    match witness {
        Some(h) => {
            let mut r = StructureReport::bare(StructureKind::QuasiFrobeniusAbelian, Vec::new());
            r.kernel = Some(kernel);
            r.complement = Some(h);
            Ok(r)
        }
        None => Ok(StructureReport::bare(
            StructureKind::Inconclusive,
            vec![format!(
                "abelian kernel preimage of order {} found, complement search budget exhausted",
                kernel.order()
            )],
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn s3() -> Arc<PermGroup> {
        Arc::new(
            PermGroup::from_generators(3, vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])]).unwrap(),
        )
    }

    #[test]
    fn primes_of_examples() {
        assert_eq!(primes_of(1), Vec::<u64>::new());
        assert_eq!(primes_of(242), vec![2, 11]);
        assert_eq!(primes_of(2420), vec![2, 5, 11]);
    }

    #[test]
    fn prime_set_basics() {
        let pi = PrimeSet::new(vec![3, 2, 3]);
        assert_eq!(pi.primes(), &[2, 3]);
        assert!(pi.is_pi_number(12));
        assert!(pi.is_pi_number(1));
        assert!(!pi.is_pi_number(10));
        assert_eq!(pi.complement_for(30).primes(), &[5]);
        assert_eq!(pi_part(360, &pi), 72);
    }

    #[test]
    fn primary_decomposition_order_six() {
        let g = Arc::new(PermGroup::from_generators(5, vec![
            perm(&[1, 0, 3, 4, 2]),
        ]).unwrap());
        let x = perm(&[1, 0, 3, 4, 2]); // order 6
        let parts = primary_decomposition(&x, &g).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, 2);
        assert_eq!(parts[0].1.order(), 2);
        assert_eq!(parts[1].0, 3);
        assert_eq!(parts[1].1.order(), 3);
        // product reconstructs x, parts commute, parts are powers of x
        assert_eq!(Permutation::compose(&parts[0].1, &parts[1].1).unwrap(), x);
        assert!(parts[0].1.commutes_with(&parts[1].1));
        assert_eq!(parts[0].1, x.pow(3));
        assert_eq!(parts[1].1, x.pow(4));
    }

    #[test]
    fn primary_decomposition_prime_power() {
        let g = Arc::new(PermGroup::from_generators(4, vec![perm(&[1, 2, 3, 0])]).unwrap());
        let x = perm(&[1, 2, 3, 0]);
        let parts = primary_decomposition(&x, &g).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0], (2, x));
    }

    #[test]
    fn sylow_of_s3() {
        let g = s3();
        assert_eq!(sylow(&g, 2).unwrap().order(), 2);
        assert_eq!(sylow(&g, 3).unwrap().order(), 3);
        assert_eq!(sylow(&g, 5).unwrap().order(), 1);
    }

    #[test]
    fn normalizer_examples() {
        let g = s3();
        let a3 = normal_closure(&g, &[perm(&[1, 2, 0])]).unwrap();
        assert_eq!(normalizer(&g, &a3).unwrap().order(), 6);
        let t = Subgroup::new(
            Arc::clone(&g),
            Arc::new(PermGroup::from_generators(3, vec![perm(&[1, 0, 2])]).unwrap()),
        )
        .unwrap();
        assert_eq!(normalizer(&g, &t).unwrap().order(), 2);
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = s3();
        let subs = normal_subgroups(&g).unwrap();
        let orders: Vec<u128> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn o_pi_of_s3() {
        let g = s3();
        assert_eq!(o_pi(&g, &PrimeSet::new(vec![3])).unwrap().order(), 3);
        assert_eq!(o_pi(&g, &PrimeSet::new(vec![2])).unwrap().order(), 1);
        assert_eq!(o_pi(&g, &PrimeSet::new(vec![2, 3])).unwrap().order(), 6);
    }

    #[test]
    fn o_pi_contains_every_normal_pi_subgroup() {
        let g = s3();
        for pi in [PrimeSet::new(vec![2]), PrimeSet::new(vec![3]), PrimeSet::new(vec![2, 3])] {
            let opi = o_pi(&g, &pi).unwrap().member_bitset().unwrap();
            for sub in normal_subgroups(&g).unwrap() {
                if pi.is_pi_number(u64::try_from(sub.order()).unwrap()) {
                    assert!(sub.member_bitset().unwrap().is_subset(&opi));
                }
            }
        }
    }

    #[test]
    fn direct_factorization_z6() {
        let z6 = Arc::new(PermGroup::from_generators(5, vec![perm(&[1, 0, 3, 4, 2])]).unwrap());
        let a = normal_closure(&z6, &[perm(&[1, 0, 2, 3, 4])]).unwrap();
        let b = normal_closure(&z6, &[perm(&[0, 1, 3, 4, 2])]).unwrap();
        assert!(is_direct_factorization(&z6, &a, &b).unwrap());
        let g = s3();
        let a3 = normal_closure(&g, &[perm(&[1, 2, 0])]).unwrap();
        let t = Subgroup::new(
            Arc::clone(&g),
            Arc::new(PermGroup::from_generators(3, vec![perm(&[1, 0, 2])]).unwrap()),
        )
        .unwrap();
        assert!(!is_direct_factorization(&g, &a3, &t).unwrap());
    }

    #[test]
    fn frobenius_kernel_of_s3() {
        let g = s3();
        let k = frobenius_kernel(&g).unwrap().unwrap();
        assert_eq!(k.order(), 3);
    }

    #[test]
    fn classify_s3_is_quasi_frobenius() {
        let g = s3();
        let r = classify_structure(&g).unwrap();
        assert_eq!(r.kind, StructureKind::QuasiFrobeniusAbelian);
        assert_eq!(r.kernel.as_ref().unwrap().order(), 3);
        assert_eq!(r.complement.as_ref().unwrap().order(), 2);
    }

    #[test]
    fn classify_abelian_group() {
        let z6 = Arc::new(PermGroup::from_generators(5, vec![perm(&[1, 0, 3, 4, 2])]).unwrap());
        let r = classify_structure(&z6).unwrap();
        assert_eq!(r.kind, StructureKind::PGroupTimesCentral);
        assert_eq!(r.p, Some(3));
        assert_eq!(r.p_part.as_ref().unwrap().order(), 3);
        assert_eq!(r.a_part.as_ref().unwrap().order(), 2);
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&s3()).unwrap());
        // A5 = <(0 1 2 3 4), (0 1 2)> is not solvable
        let a5 = Arc::new(
            PermGroup::from_generators(5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[1, 2, 0, 3, 4])])
                .unwrap(),
        );
        assert_eq!(a5.order(), 60);
        assert!(!is_solvable(&a5).unwrap());
    }
}

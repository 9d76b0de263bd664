//! The group engine: stabilizer chains, order and membership, element
//! enumeration, G-conjugacy classes of a normal subgroup, centralizers,
//! centers, normal closures and quotients.
//!
//! Every group is a finite permutation group on `0..degree`. Construction is
//! single-threaded and eager: the stabilizer chain, the order, and (when the
//! order is within the enumeration cap) the sorted element list are all
//! computed up front, after which a `PermGroup` is immutable.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;
use crate::structure::primes_of;

/// Largest supported degree.
pub const DEGREE_CAP: usize = 4096;

/// Default bound on exhaustive element enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
struct ChainLevel {
    base_point: u32,
    gens: Vec<Permutation>,
    /// transversal[p] maps base_point to p; entries are never rewritten once
    /// set, which keeps earlier sift results valid as the chain grows.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<u32>,
}

impl ChainLevel {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point as usize] = Some(Permutation::identity(degree));
        ChainLevel {
            base_point,
            gens: Vec::new(),
            transversal,
            orbit: vec![base_point],
        }
    }
}

/// Deterministic Schreier–Sims stabilizer chain. Base points are the smallest
/// moved points encountered, in increasing depth.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            chain.extend(0, g.clone());
        }
        chain
    }

    /// Sift `g` through levels starting at `start`; returns the residue and
    /// the level where sifting stopped.
    fn sift_from(&self, start: usize, g: &Permutation) -> (Permutation, usize) {
        let mut g = g.clone();
        let mut i = start;
        loop {
            if g.is_identity() || i == self.levels.len() {
                return (g, i);
            }
            let lvl = &self.levels[i];
            let p = g.apply(lvl.base_point);
            match &lvl.transversal[p as usize] {
                None => return (g, i),
                Some(u) => g = g.then(&u.inverse()),
            }
            i += 1;
        }
    }

    fn extend(&mut self, start: usize, g: Permutation) {
        let (residue, lvl) = self.sift_from(start, &g);
        if residue.is_identity() {
            return;
        }
        if lvl == self.levels.len() {
            let b = residue.first_moved_point().expect("non-identity residue");
            self.levels.push(ChainLevel::new(b, self.degree));
        }
        // The residue fixes the base points of levels start..lvl, so it is a
        // legitimate strong generator at every one of those levels, not just
        // at the level where sifting stopped.
        for level in start..=lvl {
            self.levels[level].gens.push(residue.clone());
            self.extend_orbit(level);
        }
        // Reprocess every Schreier generator of each affected level.
        // Recursion only adds to deeper levels, so the per-level snapshots
        // stay accurate; re-sifted generators from recursive additions reduce
        // to the identity and cost nothing.
        for level in start..=lvl {
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            let transversal = self.levels[level].transversal.clone();
            for &p in &orbit {
                let u_p = transversal[p as usize].as_ref().expect("orbit point").clone();
                for s in &gens {
                    let q = s.apply(p);
                    let u_q = transversal[q as usize].as_ref().expect("orbit closed");
                    let schreier = u_p.then(s).then(&u_q.inverse());
                    self.extend(level + 1, schreier);
                }
            }
        }
    }

    /// Grow the orbit at `lvl` in place, keeping existing transversal entries.
    fn extend_orbit(&mut self, lvl: usize) {
        let level = &mut self.levels[lvl];
        let mut queue: VecDeque<u32> = level.orbit.iter().copied().collect();
        while let Some(p) = queue.pop_front() {
            let u_p = level.transversal[p as usize].as_ref().expect("orbit point").clone();
            for gi in 0..level.gens.len() {
                let q = level.gens[gi].apply(p);
                if level.transversal[q as usize].is_none() {
                    level.transversal[q as usize] = Some(u_p.then(&level.gens[gi]));
                    level.orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
    }

    fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    fn is_member(&self, p: &Permutation) -> bool {
        let (residue, _) = self.sift_from(0, p);
        residue.is_identity()
    }

    /// All group elements via transversal products, unsorted.
    fn enumerate(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for r in &out {
                for &p in &level.orbit {
                    let u = level.transversal[p as usize].as_ref().expect("orbit point");
                    next.push(r.then(u));
                }
            }
            out = next;
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}

/// A finitely generated permutation group with cached stabilizer chain,
/// order, and (for orders within the cap) the full sorted element list.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    enumeration_cap: u64,
    elements: Option<Vec<Permutation>>,
    index: Option<HashMap<Permutation, usize>>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        Self::from_generators_with_cap(degree, gens, DEFAULT_ENUMERATION_CAP)
    }

    pub fn from_generators_with_cap(
        degree: usize,
        gens: Vec<Permutation>,
        enumeration_cap: u64,
    ) -> Result<PermGroup> {
        if degree > DEGREE_CAP {
            return Err(GroupError::DegreeCap {
                degree,
                cap: DEGREE_CAP,
            });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let generators: Vec<Permutation> =
            gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::build(degree, &generators);
        let order = chain.order();
        let (elements, index) = if order <= enumeration_cap as u128 {
            let mut elems = chain.enumerate();
            elems.sort_unstable();
            debug_assert_eq!(elems.len() as u128, order);
            let index = elems
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i))
                .collect();
            (Some(elems), Some(index))
        } else {
            (None, None)
        };
        Ok(PermGroup {
            degree,
            generators,
            chain,
            order,
            enumeration_cap,
            elements,
            index,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Membership via sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.chain.is_member(p))
    }

    /// All elements in lexicographic image order.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.elements.as_deref().ok_or(GroupError::TooLarge {
            order: self.order,
            cap: self.enumeration_cap,
        })
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.as_ref().and_then(|m| m.get(p).copied())
    }

    #[cfg(test)]
    pub(crate) fn chain_transversal_sizes(&self) -> Vec<usize> {
        self.chain.transversal_sizes()
    }
}

/// A subgroup remembers the group it lives in.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    group: Arc<PermGroup>,
}

impl Subgroup {
    pub fn new(parent: Arc<PermGroup>, group: Arc<PermGroup>) -> Result<Subgroup> {
        for g in group.generators() {
            if !parent.contains(g)? {
                return Err(GroupError::NotMember {
                    perm: g.to_string(),
                });
            }
        }
        debug_assert_eq!(parent.order() % group.order(), 0, "Lagrange");
        Ok(Subgroup { parent, group })
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn full(parent: &Arc<PermGroup>) -> Subgroup {
        Subgroup {
            parent: Arc::clone(parent),
            group: Arc::clone(parent),
        }
    }

    pub fn trivial(parent: &Arc<PermGroup>) -> Subgroup {
        Subgroup {
            parent: Arc::clone(parent),
            group: Arc::new(PermGroup::trivial(parent.degree())),
        }
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.group.contains(p)
    }

    /// Member bitset over the parent's element index.
    pub fn member_bitset(&self) -> Result<BitSet> {
        let parent_elems = self.parent.elements()?;
        let mut bits = BitSet::new(parent_elems.len());
        for e in self.group.elements()? {
            let i = self
                .parent
                .index_of(e)
                .expect("subgroup element indexed in parent");
            bits.insert(i);
        }
        Ok(bits)
    }

    /// Err(NotNormal) naming a violating pair if some parent generator
    /// conjugates a subgroup generator outside the subgroup.
    pub fn check_normal(&self) -> Result<()> {
        for g in self.parent.generators() {
            for x in self.group.generators() {
                let c = x.conjugate_by(g);
                if !self.group.contains(&c)? {
                    return Err(GroupError::NotNormal {
                        gen: g.to_string(),
                        elem: x.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.check_normal().is_ok()
    }
}

/// One G-conjugacy class of elements of a normal subgroup N.
#[derive(Clone, Debug)]
pub struct GClass {
    /// Member with the least index in N's element enumeration.
    pub representative: Permutation,
    pub size: u64,
    /// Prime divisors of `size`.
    pub primes: Vec<u64>,
    /// Members as a bitset over N's element index.
    pub members: BitSet,
    pub least_index: usize,
}

impl GClass {
    pub fn is_central(&self) -> bool {
        self.size == 1
    }
}

/// Partition the elements of `n` into orbits under conjugation by `g`.
/// Classes come back sorted by (size, least member index).
pub fn g_classes_in(g: &Arc<PermGroup>, n: &Subgroup) -> Result<Vec<GClass>> {
    debug_assert!(Arc::ptr_eq(g, n.parent()));
    // Normality check, naming a violating pair on failure.
    for a in g.generators() {
        for x in n.group().generators() {
            let c = x.conjugate_by(a);
            if !n.group().contains(&c)? {
                return Err(GroupError::NotNormal {
                    gen: a.to_string(),
                    elem: x.to_string(),
                });
            }
        }
    }
    let elems = n.group().elements()?;
    let count = elems.len();
    let mut visited = BitSet::new(count);
    let mut classes = Vec::new();
    for start in 0..count {
        if visited.contains(start) {
            continue;
        }
        let mut members = BitSet::new(count);
        members.insert(start);
        visited.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for a in g.generators() {
                let c = elems[i].conjugate_by(a);
                let j = n
                    .group()
                    .index_of(&c)
                    .expect("conjugate stays in normal subgroup");
                if !members.contains(j) {
                    members.insert(j);
                    visited.insert(j);
                    queue.push_back(j);
                }
            }
        }
        let size = members.count() as u64;
        classes.push(GClass {
            representative: elems[start].clone(),
            size,
            primes: primes_of(size),
            members,
            least_index: start,
        });
    }
    debug_assert_eq!(
        classes.iter().map(|c| c.size as u128).sum::<u128>(),
        n.order()
    );
    classes.sort_by_key(|c| (c.size, c.least_index));
    Ok(classes)
}

/// Subgroup of all elements of `g` commuting with `x`.
pub fn centralizer(g: &Arc<PermGroup>, x: &Permutation) -> Result<Subgroup> {
    if !g.contains(x)? {
        return Err(GroupError::NotMember { perm: x.to_string() });
    }
    let members: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|e| e.commutes_with(x))
        .cloned()
        .collect();
    let sub = PermGroup::from_generators(g.degree(), members)?;
    Subgroup::new(Arc::clone(g), Arc::new(sub))
}

/// Z(G): elements commuting with every generator.
pub fn center(g: &Arc<PermGroup>) -> Result<Subgroup> {
    let members: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|e| g.generators().iter().all(|a| e.commutes_with(a)))
        .cloned()
        .collect();
    let sub = PermGroup::from_generators(g.degree(), members)?;
    Subgroup::new(Arc::clone(g), Arc::new(sub))
}

/// Smallest subgroup containing `s` and closed under conjugation by the
/// generators of `g` (fixpoint iteration).
pub fn normal_closure(g: &Arc<PermGroup>, s: &[Permutation]) -> Result<Subgroup> {
    for x in s {
        if !g.contains(x)? {
            return Err(GroupError::NotMember { perm: x.to_string() });
        }
    }
    let mut gens: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut h = PermGroup::from_generators(g.degree(), gens.clone())?;
    loop {
        let mut fresh = Vec::new();
        for x in h.generators() {
            for a in g.generators() {
                let c = x.conjugate_by(a);
                if !h.contains(&c)? && !fresh.contains(&c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        gens.extend(fresh);
        h = PermGroup::from_generators(g.degree(), gens.clone())?;
    }
    Subgroup::new(Arc::clone(g), Arc::new(h))
}

/// The quotient G/K realized as the permutation action on right cosets of K,
/// together with the data needed to project elements of G onto it.
pub struct Quotient {
    pub group: Arc<PermGroup>,
    coset_reps: Vec<Permutation>,
    coset_index: HashMap<Permutation, usize>,
    k_elements: Vec<Permutation>,
}

impl Quotient {
    /// Canonical (lex-least) representative of the coset K·e.
    fn canon(&self, e: &Permutation) -> Permutation {
        self.k_elements
            .iter()
            .map(|k| k.then(e))
            .min()
            .expect("K non-empty")
    }

    /// The image of `e` in the quotient: its action on the cosets of K.
    pub fn project(&self, e: &Permutation) -> Permutation {
        let images: Vec<u32> = self
            .coset_reps
            .iter()
            .map(|r| self.coset_index[&self.canon(&r.then(e))] as u32)
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    }

    /// Index of the image of `e` in the quotient's element enumeration.
    pub fn project_index(&self, e: &Permutation) -> usize {
        self.group
            .index_of(&self.project(e))
            .expect("projection lands in quotient")
    }
}

/// G/K for a normal subgroup K, acting on the |G:K| right cosets of K.
pub fn quotient(g: &Arc<PermGroup>, k: &Subgroup) -> Result<Quotient> {
    debug_assert!(Arc::ptr_eq(g, k.parent()));
    // Normality with violating pair in the error.
    for a in g.generators() {
        for x in k.group().generators() {
            let c = x.conjugate_by(a);
            if !k.group().contains(&c)? {
                return Err(GroupError::NotNormal {
                    gen: a.to_string(),
                    elem: x.to_string(),
                });
            }
        }
    }
    let elems = g.elements()?;
    let k_elements: Vec<Permutation> = k.group().elements()?.to_vec();
    // Canonical representative (lex-least member) of each coset.
    let mut canon_set: Vec<Permutation> = Vec::new();
    {
        let mut seen = BitSet::new(elems.len());
        for (i, e) in elems.iter().enumerate() {
            if seen.contains(i) {
                continue;
            }
            let mut least = e.clone();
            for kk in &k_elements {
                let cand = kk.then(e);
                let j = g.index_of(&cand).expect("coset member in G");
                seen.insert(j);
                if cand < least {
                    least = cand;
                }
            }
            canon_set.push(least);
        }
    }
    canon_set.sort_unstable();
    let coset_index: HashMap<Permutation, usize> = canon_set
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let quot = Quotient {
        group: Arc::new(PermGroup::trivial(1)), // placeholder, replaced below
        coset_reps: canon_set,
        coset_index,
        k_elements,
    };
    let qgens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| {
            let images: Vec<u32> = quot
                .coset_reps
                .iter()
                .map(|r| quot.coset_index[&quot.canon(&r.then(s))] as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    let qgroup = PermGroup::from_generators(quot.coset_reps.len(), qgens)?;
    debug_assert_eq!(qgroup.order() * k.order(), g.order());
    Ok(Quotient {
        group: Arc::new(qgroup),
        ..quot
    })
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

    /// Brute-force closure of a generating set; the independent order oracle.
    pub(crate) fn closure_count(degree: usize, gens: &[Permutation]) -> usize {
        let mut set: std::collections::HashSet<Permutation> =
            std::collections::HashSet::new();
        set.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while let Some(e) = frontier.pop() {
            for g in gens {
                let f = e.then(g);
                if set.insert(f.clone()) {
                    frontier.push(f);
                }
            }
        }
        set.len()
    }

    #[test]
    fn s3_order_and_chain() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let sizes = g.chain_transversal_sizes();
        assert_eq!(sizes.iter().product::<usize>(), 6);
        assert_eq!(closure_count(3, g.generators()), 6);
    }

    #[test]
    fn klein_four_is_abelian() {
        let g =
            PermGroup::from_generators(4, vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(closure_count(4, g.generators()), 4);
    }

    #[test]
    fn membership() {
        let a3 = Arc::new(PermGroup::from_generators(3, vec![perm(&[1, 2, 0])]).unwrap());
        assert!(a3.contains(&Permutation::identity(3)).unwrap());
        assert!(!a3.contains(&perm(&[1, 0, 2])).unwrap());
        let g = s3();
        for e in g.elements().unwrap() {
            assert!(g.contains(e).unwrap());
        }
    }

    #[test]
    fn element_enumeration_is_sorted_and_complete() {
        let g = s3();
        let elems = g.elements().unwrap();
        assert_eq!(elems.len(), 6);
        let mut sorted = elems.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert_eq!(sorted.as_slice(), elems);
        // trivial group
        let t = PermGroup::trivial(4);
        assert_eq!(t.elements().unwrap(), &[Permutation::identity(4)]);
    }

    #[test]
    fn s3_class_sizes() {
        let g = s3();
        let n = Subgroup::full(&g);
        let classes = g_classes_in(&g, &n).unwrap();
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        // orbit-stabilizer per class
        for c in &classes {
            let cent = centralizer(&g, &c.representative).unwrap();
            assert_eq!(c.size as u128 * cent.order(), g.order());
        }
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = Arc::new(PermGroup::from_generators(4, vec![perm(&[1, 2, 3, 0])]).unwrap());
        let n = Subgroup::full(&g);
        let classes = g_classes_in(&g, &n).unwrap();
        assert!(classes.iter().all(|c| c.size == 1));
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let g = s3();
        let h = Subgroup::new(
            Arc::clone(&g),
            Arc::new(PermGroup::from_generators(3, vec![perm(&[1, 0, 2])]).unwrap()),
        )
        .unwrap();
        assert!(matches!(
            g_classes_in(&g, &h),
            Err(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn centralizer_basics() {
        let g = s3();
        let id = Permutation::identity(3);
        assert_eq!(centralizer(&g, &id).unwrap().order(), 6);
        let three_cycle = perm(&[1, 2, 0]);
        assert_eq!(centralizer(&g, &three_cycle).unwrap().order(), 3);
        let outside = perm(&[1, 0, 3, 2]);
        assert!(centralizer(&g, &outside).is_err());
    }

    #[test]
    fn center_of_s3_is_trivial() {
        let g = s3();
        assert_eq!(center(&g).unwrap().order(), 1);
    }

    #[test]
    fn normal_closure_in_s3() {
        let g = s3();
        assert_eq!(
            normal_closure(&g, &[Permutation::identity(3)]).unwrap().order(),
            1
        );
        assert_eq!(normal_closure(&g, &[perm(&[1, 2, 0])]).unwrap().order(), 3);
        assert_eq!(normal_closure(&g, &[perm(&[1, 0, 2])]).unwrap().order(), 6);
    }

    #[test]
    fn quotient_s3_by_a3() {
        let g = s3();
        let a3 = normal_closure(&g, &[perm(&[1, 2, 0])]).unwrap();
        let q = quotient(&g, &a3).unwrap();
        assert_eq!(q.group.order(), 2);
        // projection is a homomorphism on a few sample pairs
        let elems = g.elements().unwrap();
        for a in elems {
            for b in elems {
                assert_eq!(
                    q.project(&a.then(b)),
                    q.project(a).then(&q.project(b))
                );
            }
        }
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s3();
        let q = quotient(&g, &Subgroup::full(&g)).unwrap();
        assert_eq!(q.group.order(), 1);
        assert_eq!(q.group.degree(), 1);
    }

    #[test]
    fn conjugation_invariance_of_classes() {
        let g = s3();
        let n = Subgroup::full(&g);
        let classes = g_classes_in(&g, &n).unwrap();
        let elems = n.group().elements().unwrap();
        for c in &classes {
            for a in g.generators() {
                let mut image = BitSet::new(elems.len());
                for i in c.members.iter_ones() {
                    let conj = elems[i].conjugate_by(a);
                    image.insert(n.group().index_of(&conj).unwrap());
                }
                assert_eq!(image, c.members);
            }
        }
    }
}

//! Builders for every concrete group the corpus uses: classical families,
//! matrix-group actions over small prime fields, semidirect and direct
//! products, and the worked example pairs `ex1` and `ex2`.

use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Permutation;

/// A group together with a chosen normal subgroup.
#[derive(Clone)]
pub struct GroupPair {
    pub group: Arc<PermGroup>,
    pub normal: Subgroup,
    pub label: String,
}

/// Generators of a subgroup of GL(k, p), row-major entries in `0..p`.
#[derive(Clone, Debug)]
pub struct MatrixGroupSpec {
    pub prime: u64,
    pub dim: usize,
    pub generators: Vec<Vec<u64>>,
}

// ---------------------------------------------------------------------------
// catalog families

pub fn cyclic(n: u64) -> Result<Arc<PermGroup>> {
    if n == 0 {
        return Err(GroupError::InvalidParams("cyclic order must be positive".into()));
    }
    let n = n as usize;
    let gen = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    Ok(Arc::new(PermGroup::from_generators(n, vec![gen])?))
}

pub fn symmetric(n: u64) -> Result<Arc<PermGroup>> {
    if n == 0 {
        return Err(GroupError::InvalidParams("symmetric degree must be positive".into()));
    }
    let n = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
        gens.push(Permutation::from_images(
            (0..n as u32).map(|i| (i + 1) % n as u32).collect(),
        )?);
    }
    Ok(Arc::new(PermGroup::from_generators(n, gens)?))
}

pub fn alternating(n: u64) -> Result<Arc<PermGroup>> {
    if n < 3 {
        return Err(GroupError::InvalidParams(
            "alternating degree must be at least 3".into(),
        ));
    }
    let n = n as usize;
    let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1, 2]])?];
    if n > 3 {
        let cycle: Vec<u32> = if n % 2 == 1 {
            (0..n as u32).collect()
        } else {
            (1..n as u32).collect()
        };
        gens.push(Permutation::from_cycles(n, &[cycle])?);
    }
    Ok(Arc::new(PermGroup::from_generators(n, gens)?))
}

/// Dihedral group of the given (even) order.
pub fn dihedral(order: u64) -> Result<Arc<PermGroup>> {
    if order < 2 || order % 2 != 0 {
        return Err(GroupError::InvalidParams(format!(
            "dihedral order must be even and >= 2, got {order}"
        )));
    }
    match order {
        2 => cyclic(2),
        4 => {
            let gens = vec![
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
            ];
            Ok(Arc::new(PermGroup::from_generators(4, gens)?))
        }
        _ => {
            let k = (order / 2) as usize;
            let rot = Permutation::from_images(
                (0..k as u32).map(|i| (i + 1) % k as u32).collect(),
            )?;
            let refl =
                Permutation::from_images((0..k as u32).map(|i| (k as u32 - i) % k as u32).collect())?;
            Ok(Arc::new(PermGroup::from_generators(k, vec![rot, refl])?))
        }
    }
}

/// (Z_p)^k acting on k disjoint p-cycles.
pub fn elementary_abelian(p: u64, k: u64) -> Result<Arc<PermGroup>> {
    if crate::structure::primes_of(p) != vec![p] {
        return Err(GroupError::InvalidParams(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(GroupError::InvalidParams("exponent must be positive".into()));
    }
    let (p, k) = (p as usize, k as usize);
    let degree = p * k;
    let mut gens = Vec::new();
    for block in 0..k {
        let base = (block * p) as u32;
        let cycle: Vec<u32> = (0..p as u32).map(|i| base + i).collect();
        gens.push(Permutation::from_cycles(degree, &[cycle])?);
    }
    Ok(Arc::new(PermGroup::from_generators(degree, gens)?))
}

/// Q8 in its regular representation on the 8 elements
/// [1, -1, i, -i, j, -j, k, -k].
pub fn quaternion8() -> Result<Arc<PermGroup>> {
    let gen_i = Permutation::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5])?;
    let gen_j = Permutation::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2])?;
    Ok(Arc::new(PermGroup::from_generators(8, vec![gen_i, gen_j])?))
}

/// Named catalog dispatch used by the CLI group-spec language.
pub fn catalog_build(name: &str, params: &[u64]) -> Result<Arc<PermGroup>> {
    let one = |params: &[u64]| -> Result<u64> {
        params
            .first()
            .copied()
            .filter(|_| params.len() == 1)
            .ok_or_else(|| GroupError::InvalidParams(format!("{name} takes one parameter")))
    };
    match name {
        "cyclic" => cyclic(one(params)?),
        "dihedral" => dihedral(one(params)?),
        "symmetric" => symmetric(one(params)?),
        "alternating" => alternating(one(params)?),
        "elementary_abelian" => {
            if params.len() != 2 {
                return Err(GroupError::InvalidParams(
                    "elementary_abelian takes parameters p,k".into(),
                ));
            }
            elementary_abelian(params[0], params[1])
        }
        "quaternion8" => {
            if !params.is_empty() {
                return Err(GroupError::InvalidParams("quaternion8 takes no parameters".into()));
            }
            quaternion8()
        }
        other => Err(GroupError::UnknownCatalog(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// affine actions over prime fields

fn vector_of_index(mut idx: usize, p: usize, k: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(k);
    for _ in 0..k {
        v.push((idx % p) as u64);
        idx /= p;
    }
    v
}

fn index_of_vector(v: &[u64], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * p + c as usize)
}

fn translation_perm(p: usize, k: usize, b: &[u64]) -> Result<Permutation> {
    let degree = p.pow(k as u32);
    let images = (0..degree)
        .map(|i| {
            let mut v = vector_of_index(i, p, k);
            for (vi, &bi) in v.iter_mut().zip(b) {
                *vi = (*vi + bi) % p as u64;
            }
            index_of_vector(&v, p) as u32
        })
        .collect();
    Permutation::from_images(images)
}

fn matrix_perm(p: usize, k: usize, m: &[u64], index: usize) -> Result<Permutation> {
    let degree = p.pow(k as u32);
    let images: Vec<u32> = (0..degree)
        .map(|i| {
            let v = vector_of_index(i, p, k);
            let mut w = vec![0u64; k];
            for (r, wr) in w.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (c, &vc) in v.iter().enumerate() {
                    acc += m[r * k + c] * vc;
                }
                *wr = acc % p as u64;
            }
            index_of_vector(&w, p) as u32
        })
        .collect();
    Permutation::from_images(images).map_err(|_| GroupError::SingularMatrix {
        prime: p as u64,
        index,
    })
}

/// G = V semidirect H acting on the p^k affine points x -> Mx + b, paired
/// with the normal translation subgroup V.
pub fn affine_semidirect(p: u64, k: usize, h: &MatrixGroupSpec) -> Result<GroupPair> {
    if h.prime != p || h.dim != k {
        return Err(GroupError::InvalidParams(
            "matrix spec does not match the affine space".into(),
        ));
    }
    let (pu, ku) = (p as usize, k);
    let mut translations = Vec::new();
    for i in 0..ku {
        let mut e = vec![0u64; ku];
        e[i] = 1;
        translations.push(translation_perm(pu, ku, &e)?);
    }
    let mut gens = translations.clone();
    for (idx, m) in h.generators.iter().enumerate() {
        if m.len() != ku * ku {
            return Err(GroupError::InvalidParams(format!(
                "matrix generator {idx} must have {} entries",
                ku * ku
            )));
        }
        gens.push(matrix_perm(pu, ku, m, idx)?);
    }
    let degree = pu.pow(ku as u32);
    let group = Arc::new(PermGroup::from_generators(degree, gens)?);
    let normal = Subgroup::new(
        Arc::clone(&group),
        Arc::new(PermGroup::from_generators(degree, translations)?),
    )?;
    Ok(GroupPair {
        group,
        normal,
        label: format!("aff({p},{k})"),
    })
}

// ---------------------------------------------------------------------------
// direct products

/// A direct product on the disjoint union of the two point sets, with the
/// coordinate embeddings.
pub struct DirectProduct {
    pub group: Arc<PermGroup>,
    left_degree: usize,
    right_degree: usize,
}

impl DirectProduct {
    pub fn embed_left(&self, p: &Permutation) -> Permutation {
        let mut images: Vec<u32> = p.images().to_vec();
        images.extend((self.left_degree..self.left_degree + self.right_degree).map(|i| i as u32));
        Permutation::from_images(images).expect("embedding preserves bijectivity")
    }

    pub fn embed_right(&self, p: &Permutation) -> Permutation {
        let mut images: Vec<u32> = (0..self.left_degree as u32).collect();
        images.extend(p.images().iter().map(|&i| i + self.left_degree as u32));
        Permutation::from_images(images).expect("embedding preserves bijectivity")
    }
}

pub fn direct_product(g1: &Arc<PermGroup>, g2: &Arc<PermGroup>) -> Result<DirectProduct> {
    let dp = DirectProduct {
        group: Arc::new(PermGroup::trivial(1)),
        left_degree: g1.degree(),
        right_degree: g2.degree(),
    };
    let mut gens: Vec<Permutation> = g1.generators().iter().map(|g| dp.embed_left(g)).collect();
    gens.extend(g2.generators().iter().map(|g| dp.embed_right(g)));
    let group = Arc::new(PermGroup::from_generators(g1.degree() + g2.degree(), gens)?);
    Ok(DirectProduct { group, ..dp })
}

// ---------------------------------------------------------------------------
// the semilinear affine group of order 168 on F8

/// Multiplication in F8 = F2[t]/(t^3 + t + 1), elements as bit vectors.
fn f8_mul(a: u32, b: u32) -> u32 {
    let mut r = 0u32;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 8 != 0 {
            a ^= 0b1011;
        }
    }
    r
}

/// The group of maps x -> a * x^(2^i) + b on F8 (a != 0), of order 168,
/// paired with its normal translation subgroup A of order 8.
pub fn agl_semilinear(q: u64) -> Result<GroupPair> {
    if q != 8 {
        return Err(GroupError::UnsupportedField(q));
    }
    let add1 = Permutation::from_images((0..8).map(|x| x ^ 1).collect())?;
    let mul_t = Permutation::from_images((0..8).map(|x| f8_mul(2, x)).collect())?;
    let frobenius = Permutation::from_images((0..8).map(|x| f8_mul(x, x)).collect())?;
    let group = Arc::new(PermGroup::from_generators(
        8,
        vec![add1.clone(), mul_t, frobenius],
    )?);
    let translations: Vec<Permutation> = [1u32, 2, 4]
        .iter()
        .map(|&b| Permutation::from_images((0..8).map(|x| x ^ b).collect()))
        .collect::<Result<_>>()?;
    let normal = Subgroup::new(
        Arc::clone(&group),
        Arc::new(PermGroup::from_generators(8, translations)?),
    )?;
    Ok(GroupPair {
        group,
        normal,
        label: "agl1:8".into(),
    })
}

// ---------------------------------------------------------------------------
// example 1: K semidirect N_H(P) of order 2420 over F11^2

/// Frozen generators of a copy of SL(2,5) inside SL(2,11), found once by the
/// bounded deterministic search in `find_sl25_embedding` and validated at
/// build time (order 120, fixed-point-free on nonzero vectors).
pub const FROZEN_SL25_GENS: [[u64; 4]; 2] = [[0, 1, 10, 0], [0, 2, 5, 10]];

type Mat2 = [u64; 4];

fn mat2_mul(p: u64, x: Mat2, y: Mat2) -> Mat2 {
    [
        (x[0] * y[0] + x[1] * y[2]) % p,
        (x[0] * y[1] + x[1] * y[3]) % p,
        (x[2] * y[0] + x[3] * y[2]) % p,
        (x[2] * y[1] + x[3] * y[3]) % p,
    ]
}

fn mat2_inv_sl(p: u64, x: Mat2) -> Mat2 {
    // determinant 1: [a b; c d]^-1 = [d -b; -c a]
    [x[3] % p, (p - x[1]) % p, (p - x[2]) % p, x[0] % p]
}

const MAT2_ID: Mat2 = [1, 0, 0, 1];

/// Closure of 2x2 matrices mod p, aborting when `cap` is exceeded.
fn mat2_closure(p: u64, gens: &[Mat2], cap: usize) -> Option<Vec<Mat2>> {
    let mut set = std::collections::HashSet::new();
    set.insert(MAT2_ID);
    let mut frontier = vec![MAT2_ID];
    while let Some(e) = frontier.pop() {
        for &g in gens {
            let f = mat2_mul(p, e, g);
            if set.insert(f) {
                if set.len() > cap {
                    return None;
                }
                frontier.push(f);
            }
        }
    }
    let mut v: Vec<Mat2> = set.into_iter().collect();
    v.sort_unstable();
    Some(v)
}

fn mat2_order(p: u64, m: Mat2) -> u64 {
    let mut o = 1;
    let mut e = m;
    while e != MAT2_ID {
        e = mat2_mul(p, e, m);
        o += 1;
    }
    o
}

/// No non-identity element may fix a nonzero vector; for determinant-one
/// matrices that is exactly trace != 2.
fn mat2_fixed_point_free(p: u64, elems: &[Mat2]) -> bool {
    elems
        .iter()
        .all(|&m| m == MAT2_ID || (m[0] + m[3]) % p != 2)
}

/// Bounded deterministic search for an order-120 fixed-point-free subgroup of
/// SL(2,11): iterate (trace 0, trace -1) generator pairs in lexicographic
/// order and stop at the first success. Used once to produce
/// `FROZEN_SL25_GENS`; kept as the regression oracle.
pub fn find_sl25_embedding() -> Option<(Mat2, Mat2)> {
    let p = 11u64;
    let mut sl2 = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c) % p == 1 {
                        sl2.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let order4: Vec<Mat2> = sl2.iter().copied().filter(|m| (m[0] + m[3]) % p == 0).collect();
    let order3: Vec<Mat2> = sl2
        .iter()
        .copied()
        .filter(|m| (m[0] + m[3]) % p == p - 1)
        .collect();
    for &x in &order4 {
        for &y in &order3 {
            if let Some(c) = mat2_closure(p, &[x, y], 120) {
                if c.len() == 120 && mat2_fixed_point_free(p, &c) {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

/// The validated 120-element matrix group generated by the frozen fixture.
fn sl25_copy() -> Vec<Mat2> {
    let p = 11;
    let elems = mat2_closure(p, &FROZEN_SL25_GENS, 120)
        .expect("frozen fixture generates a group of order 120");
    assert_eq!(elems.len(), 120, "frozen fixture generates order 120");
    assert!(
        mat2_fixed_point_free(p, &elems),
        "frozen fixture acts fixed-point-freely"
    );
    elems
}

/// G = K semidirect N_H(P) of order 2420 on 121 points, N = K semidirect P of
/// order 605, where H is the SL(2,5) copy acting Frobeniusly on K = F11^2 and
/// P is a Sylow 5-subgroup of H.
pub fn example1_pair() -> Result<GroupPair> {
    let p = 11u64;
    let h = sl25_copy();
    let m5 = *h
        .iter()
        .find(|&&m| mat2_order(p, m) == 5)
        .expect("SL(2,5) copy contains order-5 elements");
    let mut p_set = Vec::with_capacity(5);
    let mut e = MAT2_ID;
    for _ in 0..5 {
        p_set.push(e);
        e = mat2_mul(p, e, m5);
    }
    let normalizer: Vec<Mat2> = h
        .iter()
        .copied()
        .filter(|&x| p_set.contains(&mat2_mul(p, mat2_mul(p, mat2_inv_sl(p, x), m5), x)))
        .collect();
    assert_eq!(normalizer.len(), 20, "Sylow counting forces |N_H(P)| = 20");

    let spec = MatrixGroupSpec {
        prime: p,
        dim: 2,
        generators: normalizer.iter().map(|m| m.to_vec()).collect(),
    };
    let pair = affine_semidirect(p, 2, &spec)?;
    let group = pair.group;
    // N = K P: translations plus the order-5 matrix action
    let mut n_gens: Vec<Permutation> = pair.normal.group().generators().to_vec();
    n_gens.push(matrix_perm(p as usize, 2, &m5, 0)?);
    let normal = Subgroup::new(
        Arc::clone(&group),
        Arc::new(PermGroup::from_generators(group.degree(), n_gens)?),
    )?;
    Ok(GroupPair {
        group,
        normal,
        label: "ex1".into(),
    })
}

// ---------------------------------------------------------------------------
// example 2: diameter-three composite

/// The order-54 affine factor: F3^2 semidirect the order-6 matrix group with
/// orbit sizes 1, 2, 3, 3 on the translations.
pub fn affine54_pair() -> Result<GroupPair> {
    let spec = MatrixGroupSpec {
        prime: 3,
        dim: 2,
        generators: vec![vec![1, 1, 0, 1], vec![2, 0, 0, 1]],
    };
    let mut pair = affine_semidirect(3, 2, &spec)?;
    pair.label = "aff54".into();
    Ok(pair)
}

/// G = (F3^2 semidirect H54) x (semilinear affine group of order 168), with
/// N the direct product of the two translation subgroups (order 72).
pub fn example2_composite() -> Result<GroupPair> {
    let left = affine54_pair()?;
    let right = agl_semilinear(8)?;
    let dp = direct_product(&left.group, &right.group)?;
    let mut n_gens: Vec<Permutation> = left
        .normal
        .group()
        .generators()
        .iter()
        .map(|g| dp.embed_left(g))
        .collect();
    n_gens.extend(
        right
            .normal
            .group()
            .generators()
            .iter()
            .map(|g| dp.embed_right(g)),
    );
    let normal = Subgroup::new(
        Arc::clone(&dp.group),
        Arc::new(PermGroup::from_generators(dp.group.degree(), n_gens)?),
    )?;
    Ok(GroupPair {
        group: dp.group,
        normal,
        label: "ex2".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, g_classes_in};

    #[test]
    fn catalog_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(elementary_abelian(2, 3).unwrap().order(), 8);
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert!(catalog_build("nope", &[]).is_err());
        assert!(catalog_build("dihedral", &[7]).is_err());
        assert!(elementary_abelian(6, 2).is_err());
    }

    #[test]
    fn elementary_abelian_has_exponent_p() {
        let g = elementary_abelian(2, 3).unwrap();
        assert!(g.elements().unwrap().iter().all(|e| e.order() <= 2));
    }

    #[test]
    fn dihedral_12_has_cyclic_subgroup_of_order_6() {
        let g = dihedral(12).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.elements().unwrap().iter().any(|e| e.order() == 6));
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(center(&q8).unwrap().order(), 2);
        // one element of order 2, six of order 4
        let orders: Vec<u64> = q8.elements().unwrap().iter().map(|e| e.order()).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
    }

    #[test]
    fn affine_trivial_h_is_translations() {
        let spec = MatrixGroupSpec {
            prime: 5,
            dim: 1,
            generators: vec![],
        };
        let pair = affine_semidirect(5, 1, &spec).unwrap();
        assert_eq!(pair.group.order(), 5);
        assert_eq!(pair.normal.order(), 5);
    }

    #[test]
    fn affine54_class_sizes() {
        let pair = affine54_pair().unwrap();
        assert_eq!(pair.group.order(), 54);
        let classes = g_classes_in(&pair.group, &pair.normal).unwrap();
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3, 3]);
    }

    #[test]
    fn singular_matrix_rejected() {
        let spec = MatrixGroupSpec {
            prime: 3,
            dim: 2,
            generators: vec![vec![1, 1, 2, 2]],
        };
        assert!(matches!(
            affine_semidirect(3, 2, &spec),
            Err(GroupError::SingularMatrix { prime: 3, index: 0 })
        ));
    }

    #[test]
    fn translation_subgroup_is_normal_and_regular() {
        let pair = affine54_pair().unwrap();
        assert!(pair.normal.is_normal());
        assert_eq!(pair.normal.order(), 9);
        // regular: one translation maps 0 to each point
        let elems = pair.normal.group().elements().unwrap();
        let mut targets: Vec<u32> = elems.iter().map(|e| e.apply(0)).collect();
        targets.sort_unstable();
        assert_eq!(targets, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn direct_product_class_sizes_multiply() {
        let s3 = symmetric(3).unwrap();
        let dp = direct_product(&s3, &s3).unwrap();
        assert_eq!(dp.group.order(), 36);
        let n = Subgroup::full(&dp.group);
        let mut sizes: Vec<u64> = g_classes_in(&dp.group, &n)
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 3, 3, 4, 6, 6, 9]);
    }

    #[test]
    fn direct_product_with_trivial_preserves_classes() {
        let s3 = symmetric(3).unwrap();
        let t = Arc::new(PermGroup::trivial(1));
        let dp = direct_product(&s3, &t).unwrap();
        assert_eq!(dp.group.order(), 6);
        let sizes: Vec<u64> = g_classes_in(&dp.group, &Subgroup::full(&dp.group))
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn agl_semilinear_structure() {
        let pair = agl_semilinear(8).unwrap();
        assert_eq!(pair.group.order(), 168);
        assert_eq!(pair.normal.order(), 8);
        assert!(pair.normal.is_normal());
        assert!(pair.normal.group().is_abelian());
        assert!(pair.normal.group().elements().unwrap().iter().all(|e| e.order() <= 2));
        // stabilizer of 0 has order 21
        let stab = pair
            .group
            .elements()
            .unwrap()
            .iter()
            .filter(|e| e.apply(0) == 0)
            .count();
        assert_eq!(stab, 21);
        // class sizes of the translations are {1, 7}
        let classes = g_classes_in(&pair.group, &pair.normal).unwrap();
        let sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 7]);
        assert!(agl_semilinear(9).is_err());
    }

    #[test]
    fn frozen_fixture_is_valid() {
        let elems = sl25_copy(); // asserts order 120 and fixed-point-freeness
        // Sylow counting: 24 elements of order 5, so n5 = 6 and |N_H(P)| = 20
        let fives = elems.iter().filter(|&&m| mat2_order(11, m) == 5).count();
        assert_eq!(fives, 24);
    }

    #[test]
    fn embedding_search_reproduces_frozen_fixture() {
        let (x, y) = find_sl25_embedding().expect("embedding exists");
        assert_eq!([x, y], FROZEN_SL25_GENS);
    }

    #[test]
    fn example1_orders() {
        let pair = example1_pair().unwrap();
        assert_eq!(pair.group.order(), 2420);
        assert_eq!(pair.normal.order(), 605);
        assert!(pair.normal.is_normal());
    }

    #[test]
    fn example2_orders() {
        let pair = example2_composite().unwrap();
        assert_eq!(pair.group.order(), 54 * 168);
        assert_eq!(pair.normal.order(), 72);
        assert!(pair.normal.group().is_abelian());
        assert!(pair.normal.is_normal());
    }
}

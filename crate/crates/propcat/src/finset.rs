//! Finite-set primitives: functions, canonical partitions, pushouts, and
//! enumeration of fiber-nonempty functions.
//!
//! Everything is 0-based and skeletal: a finite set is just its size.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A function between finite sets `dom -> cod`, stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinFunction {
    pub dom_size: usize,
    pub cod_size: usize,
    pub table: Vec<usize>,
}

impl FinFunction {
    pub fn new(cod_size: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&v) = table.iter().find(|&&v| v >= cod_size) {
            return Err(Error::Contract(format!(
                "table entry {v} out of codomain {cod_size}"
            )));
        }
        Ok(FinFunction {
            dom_size: table.len(),
            cod_size,
            table,
        })
    }

    pub fn identity(n: usize) -> Self {
        FinFunction {
            dom_size: n,
            cod_size: n,
            table: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_identity(&self) -> bool {
        self.dom_size == self.cod_size && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Number of distinct values hit in the codomain.
    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.cod_size];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

/// Diagrammatic composition: first `f`, then `g`.
pub fn compose_fn(f: &FinFunction, g: &FinFunction) -> Result<FinFunction> {
    if f.cod_size != g.dom_size {
        return Err(Error::Contract(format!(
            "compose_fn: cod {} != dom {}",
            f.cod_size, g.dom_size
        )));
    }
    Ok(FinFunction {
        dom_size: f.dom_size,
        cod_size: g.cod_size,
        table: f.table.iter().map(|&x| g.table[x]).collect(),
    })
}

/// All functions `dom -> cod` in lexicographic table order.
pub fn all_functions(dom: usize, cod: usize) -> Vec<FinFunction> {
    if dom == 0 {
        return vec![FinFunction {
            dom_size: 0,
            cod_size: cod,
            table: vec![],
        }];
    }
    if cod == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; dom];
    loop {
        out.push(FinFunction {
            dom_size: dom,
            cod_size: cod,
            table: table.clone(),
        });
        // increment as a base-`cod` counter, most significant digit first
        let mut i = dom;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < cod {
                break;
            }
            table[i] = 0;
        }
    }
}

/// Exactly the functions `n -> m` with every fiber nonempty (the
/// surjections), in lexicographic table order.
pub fn fiber_nonempty_functions(n: usize, m: usize) -> Vec<FinFunction> {
    all_functions(n, m)
        .into_iter()
        .filter(|f| f.image_size() == m)
        .collect()
}

/// Union-find with path compression.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// A partition of `{0, .., carrier_size-1}` in canonical first-occurrence
/// labeling, so value equality is equality of equivalence relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    pub carrier_size: usize,
    pub class_id: Vec<usize>,
}

impl Partition {
    /// Canonicalize an arbitrary labeling: relabel classes in order of
    /// first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let width = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut map: Vec<Option<usize>> = vec![None; width];
        let mut next = 0usize;
        let mut class_id = Vec::with_capacity(labels.len());
        for &l in labels {
            let id = *map[l].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            class_id.push(id);
        }
        Partition {
            carrier_size: labels.len(),
            class_id,
        }
    }

    pub fn from_union_find(uf: &mut UnionFind, carrier_size: usize) -> Self {
        let labels: Vec<usize> = (0..carrier_size).map(|x| uf.find(x)).collect();
        Partition::from_labels(&labels)
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            carrier_size: n,
            class_id: (0..n).collect(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.class_id.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Classes as sorted element lists, indexed by class label.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_id.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_id[a] == self.class_id[b]
    }
}

/// Pushout of `N <-f- Y -g-> N'` in finite sets: the quotient of `N ⊔ N'`
/// by `f(y) ~ g(y)`, with apex labels canonical by first occurrence
/// scanning `inj_f`'s table then `inj_g`'s.
pub fn pushout(f: &FinFunction, g: &FinFunction) -> Result<(usize, FinFunction, FinFunction)> {
    if f.dom_size != g.dom_size {
        return Err(Error::Contract(format!(
            "pushout: shared source sizes differ ({} vs {})",
            f.dom_size, g.dom_size
        )));
    }
    let n1 = f.cod_size;
    let n2 = g.cod_size;
    let mut uf = UnionFind::new(n1 + n2);
    for y in 0..f.dom_size {
        uf.union(f.table[y], n1 + g.table[y]);
    }
    let roots: Vec<usize> = (0..n1 + n2).map(|x| uf.find(x)).collect();
    // first-occurrence relabeling over the concatenated injection tables
    let mut label: Vec<Option<usize>> = vec![None; n1 + n2];
    let mut next = 0usize;
    let mut relabel = |root: usize, label: &mut Vec<Option<usize>>| -> usize {
        *label[root].get_or_insert_with(|| {
            let id = next;
            next += 1;
            id
        })
    };
    let inj_f_table: Vec<usize> = (0..n1).map(|x| relabel(roots[x], &mut label)).collect();
    let inj_g_table: Vec<usize> = (0..n2).map(|x| relabel(roots[n1 + x], &mut label)).collect();
    let apex = next;
    Ok((
        apex,
        FinFunction {
            dom_size: n1,
            cod_size: apex,
            table: inj_f_table,
        },
        FinFunction {
            dom_size: n2,
            cod_size: apex,
            table: inj_g_table,
        },
    ))
}

/// Kernel partition of a nonempty family of maps with a common codomain:
/// the carrier is the disjoint union of the domains in sequence order, and
/// two elements are equivalent iff their images coincide.
pub fn kernel_partition(maps: &[FinFunction]) -> Result<Partition> {
    let first = maps
        .first()
        .ok_or_else(|| Error::Contract("kernel_partition: empty sequence".into()))?;
    let cod = first.cod_size;
    if maps.iter().any(|m| m.cod_size != cod) {
        return Err(Error::Contract(
            "kernel_partition: codomains differ".into(),
        ));
    }
    let images: Vec<usize> = maps.iter().flat_map(|m| m.table.iter().copied()).collect();
    Ok(Partition::from_labels(&images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(cod: usize, table: &[usize]) -> FinFunction {
        FinFunction::new(cod, table.to_vec()).unwrap()
    }

    #[test]
    fn compose_identity_left() {
        let g = f(3, &[2, 0, 1]);
        assert_eq!(compose_fn(&FinFunction::identity(3), &g).unwrap(), g);
    }

    #[test]
    fn compose_swap_involution() {
        let swap = f(2, &[1, 0]);
        assert_eq!(compose_fn(&swap, &swap).unwrap(), FinFunction::identity(2));
    }

    #[test]
    fn compose_pointwise() {
        let a = f(2, &[0, 1, 1]);
        let swap = f(2, &[1, 0]);
        assert_eq!(compose_fn(&a, &swap).unwrap(), f(2, &[1, 0, 0]));
    }

    #[test]
    fn compose_size_mismatch() {
        let a = f(2, &[0]);
        let b = f(1, &[0, 0, 0]);
        assert!(matches!(compose_fn(&a, &b), Err(Error::Contract(_))));
    }

    #[test]
    fn pushout_over_empty_is_coproduct() {
        let a = f(2, &[]);
        let b = f(3, &[]);
        let (apex, inj_f, inj_g) = pushout(&a, &b).unwrap();
        assert_eq!(apex, 5);
        assert_eq!(inj_f.table, vec![0, 1]);
        assert_eq!(inj_g.table, vec![2, 3, 4]);
    }

    #[test]
    fn pushout_single_merge() {
        let a = f(1, &[0]);
        let b = f(2, &[0]);
        let (apex, _, _) = pushout(&a, &b).unwrap();
        assert_eq!(apex, 2);
    }

    #[test]
    fn pushout_of_identity_span() {
        for n in 0..4 {
            let id = FinFunction::identity(n);
            let (apex, inj_f, inj_g) = pushout(&id, &id).unwrap();
            assert_eq!(apex, n);
            assert!(inj_f.is_identity());
            assert!(inj_g.is_identity());
        }
    }

    #[test]
    fn pushout_symmetry() {
        for y in 0..3 {
            for n1 in 0..3 {
                for n2 in 0..3 {
                    for a in all_functions(y, n1) {
                        for b in all_functions(y, n2) {
                            let (apex_ab, _, _) = pushout(&a, &b).unwrap();
                            let (apex_ba, inj_b, inj_a) = pushout(&b, &a).unwrap();
                            assert_eq!(apex_ab, apex_ba);
                            // swapped injections, relabeled canonically
                            let joint_ab = {
                                let (_, f1, f2) = pushout(&a, &b).unwrap();
                                let mut t = f1.table;
                                t.extend(f2.table);
                                Partition::from_labels(&t)
                            };
                            let joint_ba = {
                                let mut t = inj_a.table.clone();
                                t.extend(inj_b.table.clone());
                                Partition::from_labels(&t)
                            };
                            assert_eq!(joint_ab, joint_ba);
                        }
                    }
                }
            }
        }
    }

    /// Exhaustive universal-property check at small sizes: for each cocone
    /// (u, v) with u∘f = v∘g there is exactly one mediating w.
    #[test]
    fn pushout_universal_property() {
        for y in 0..3 {
            for n1 in 0..3 {
                for n2 in 0..3 {
                    for a in all_functions(y, n1) {
                        for b in all_functions(y, n2) {
                            let (apex, inj_f, inj_g) = pushout(&a, &b).unwrap();
                            for z in 0..3 {
                                for u in all_functions(n1, z) {
                                    for v in all_functions(n2, z) {
                                        let uf_ = compose_fn(&a, &u).unwrap();
                                        let vg = compose_fn(&b, &v).unwrap();
                                        if uf_ != vg {
                                            continue;
                                        }
                                        let mut w = vec![None; apex];
                                        let mut ok = true;
                                        for x in 0..n1 {
                                            let c = inj_f.table[x];
                                            match w[c] {
                                                None => w[c] = Some(u.table[x]),
                                                Some(t) => ok &= t == u.table[x],
                                            }
                                        }
                                        for x in 0..n2 {
                                            let c = inj_g.table[x];
                                            match w[c] {
                                                None => w[c] = Some(v.table[x]),
                                                Some(t) => ok &= t == v.table[x],
                                            }
                                        }
                                        // the cocone must factor (w well-defined
                                        // and total since injections are jointly
                                        // surjective), and uniquely so
                                        assert!(ok, "cocone fails to factor");
                                        assert!(w.iter().all(|t| t.is_some()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_of_injective_is_discrete() {
        let inj = f(5, &[3, 0, 4]);
        assert_eq!(kernel_partition(&[inj]).unwrap(), Partition::discrete(3));
    }

    #[test]
    fn kernel_two_points_to_one() {
        let p = kernel_partition(&[f(1, &[0]), f(1, &[0])]).unwrap();
        assert_eq!(p.num_classes(), 1);
        assert_eq!(p.carrier_size, 2);
    }

    #[test]
    fn kernel_mixed_example() {
        let a = f(2, &[0, 1]);
        let b = f(2, &[1]);
        let p = kernel_partition(&[a, b]).unwrap();
        assert_eq!(p.classes(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn kernel_empty_family_rejected() {
        assert!(matches!(kernel_partition(&[]), Err(Error::Contract(_))));
    }

    #[test]
    fn kernel_of_surjection_class_count() {
        for n in 0..5 {
            for m in 0..=n {
                for s in fiber_nonempty_functions(n, m) {
                    assert_eq!(kernel_partition(&[s]).unwrap().num_classes(), m);
                }
            }
        }
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(fiber_nonempty_functions(2, 1).len(), 1);
        assert_eq!(fiber_nonempty_functions(3, 2).len(), 6);
        assert_eq!(fiber_nonempty_functions(0, 0).len(), 1);
        assert!(fiber_nonempty_functions(2, 3).is_empty());
        assert!(fiber_nonempty_functions(3, 0).is_empty());
    }

    #[test]
    fn surjection_count_matches_brute_filter() {
        for n in 0..5 {
            for m in 0..5 {
                let brute = all_functions(n, m)
                    .into_iter()
                    .filter(|f| (0..m).all(|i| f.table.contains(&i)))
                    .count();
                assert_eq!(fiber_nonempty_functions(n, m).len(), brute);
            }
        }
    }

    #[test]
    fn partition_canonical_labeling() {
        let p = Partition::from_labels(&[2, 0, 2, 1]);
        assert_eq!(p.class_id, vec![0, 1, 0, 2]);
        assert_eq!(p.num_classes(), 3);
    }
}

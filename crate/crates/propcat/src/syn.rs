//! The free PROP on one binary generator, with morphisms kept in a
//! canonical forest normal form.
//!
//! A morphism `m -> n` is an ordered forest of `m` ordered binary trees
//! whose leaves carry the output indices `0..n` exactly once. Structural
//! equality of forests is equality of morphisms: the forest with
//! positional input index and labeled leaves is a complete invariant for
//! the directed acyclic graphs presenting these morphisms.

use crate::{Error, Result};

/// Ordered binary tree with output-labeled leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// Leaf labels in left-to-right order.
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(k) => out.push(*k),
            Tree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    fn map_leaves(&self, f: &mut impl FnMut(usize) -> Tree) -> Tree {
        match self {
            Tree::Leaf(k) => f(*k),
            Tree::Node(l, r) => Tree::Node(Box::new(l.map_leaves(f)), Box::new(r.map_leaves(f))),
        }
    }
}

/// A morphism of the free PROP in forest normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynMorphism {
    pub m: usize,
    pub n: usize,
    pub trees: Vec<Tree>,
}

impl SynMorphism {
    /// Validate the forest invariants: leaf labels cover `0..n` exactly
    /// once and the tree count matches the domain.
    pub fn new(m: usize, n: usize, trees: Vec<Tree>) -> Result<Self> {
        if trees.len() != m {
            return Err(Error::Contract(format!(
                "forest has {} trees, domain is {m}",
                trees.len()
            )));
        }
        let mut seen = vec![false; n];
        for t in &trees {
            for l in t.leaf_labels() {
                if l >= n || seen[l] {
                    return Err(Error::Contract(format!(
                        "leaf label {l} out of range or repeated (codomain {n})"
                    )));
                }
                seen[l] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Contract(format!(
                "leaf labels do not cover 0..{n}"
            )));
        }
        Ok(SynMorphism { m, n, trees })
    }

    pub fn node_count(&self) -> usize {
        self.trees.iter().map(Tree::node_count).sum()
    }

    /// Leaf labels of the whole forest in left-to-right order.
    pub fn leaf_sequence(&self) -> Vec<usize> {
        self.trees.iter().flat_map(|t| t.leaf_labels()).collect()
    }
}

/// The generator: `1 -> 2`, a single branching.
pub fn generator() -> SynMorphism {
    SynMorphism {
        m: 1,
        n: 2,
        trees: vec![Tree::Node(Box::new(Tree::Leaf(0)), Box::new(Tree::Leaf(1)))],
    }
}

pub fn identity(k: usize) -> SynMorphism {
    SynMorphism {
        m: k,
        n: k,
        trees: (0..k).map(Tree::Leaf).collect(),
    }
}

/// Block transposition `p + q -> q + p`.
pub fn symmetry(p: usize, q: usize) -> SynMorphism {
    let mut trees = Vec::with_capacity(p + q);
    trees.extend((0..p).map(|i| Tree::Leaf(q + i)));
    trees.extend((0..q).map(Tree::Leaf));
    SynMorphism { m: p + q, n: p + q, trees }
}

/// Composition by grafting: each leaf `j` of `f` is replaced by the
/// `j`-th tree of `g`.
pub fn then(f: &SynMorphism, g: &SynMorphism) -> Result<SynMorphism> {
    if f.n != g.m {
        return Err(Error::Contract(format!(
            "then: boundary mismatch ({} vs {})",
            f.n, g.m
        )));
    }
    let trees = f
        .trees
        .iter()
        .map(|t| t.map_leaves(&mut |j| g.trees[j].clone()))
        .collect();
    Ok(SynMorphism { m: f.m, n: g.n, trees })
}

/// Tensor: forest concatenation with leaf labels of `g` shifted by `f.n`.
pub fn tensor(f: &SynMorphism, g: &SynMorphism) -> SynMorphism {
    let shift = f.n;
    let mut trees = f.trees.clone();
    trees.extend(
        g.trees
            .iter()
            .map(|t| t.map_leaves(&mut |j| Tree::Leaf(j + shift))),
    );
    SynMorphism {
        m: f.m + g.m,
        n: f.n + g.n,
        trees,
    }
}

/// All ordered binary tree shapes with `k` leaves, leaves labeled by
/// position `offset..offset+k` in left-to-right order. Fixed recursive
/// order: split sizes increase on the left subtree.
fn shapes(k: usize, offset: usize) -> Vec<Tree> {
    if k == 1 {
        return vec![Tree::Leaf(offset)];
    }
    let mut out = Vec::new();
    for left in 1..k {
        for l in shapes(left, offset) {
            for r in shapes(k - left, offset + left) {
                out.push(Tree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    // positive parts only
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    fn rec(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if total >= 1 {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// The complete finite hom-set `m -> n`, in deterministic order: leaf-count
/// composition, then shape tuple, then lexicographic label permutation.
pub fn enumerate_syn(m: usize, n: usize) -> Vec<SynMorphism> {
    if n < m || (m == 0 && n > 0) {
        return vec![];
    }
    if m == 0 {
        return vec![SynMorphism { m: 0, n: 0, trees: vec![] }];
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    for comp in compositions(n, m) {
        // shape choices per tree, positional leaf labels
        let mut offset = 0;
        let tree_shapes: Vec<Vec<Tree>> = comp
            .iter()
            .map(|&k| {
                let s = shapes(k, offset);
                offset += k;
                s
            })
            .collect();
        let mut idx = vec![0usize; m];
        loop {
            let base: Vec<Tree> = (0..m).map(|i| tree_shapes[i][idx[i]].clone()).collect();
            for perm in &perms {
                let trees: Vec<Tree> = base
                    .iter()
                    .map(|t| t.map_leaves(&mut |pos| Tree::Leaf(perm[pos])))
                    .collect();
                out.push(SynMorphism { m, n, trees });
            }
            // advance the shape multi-index
            let mut i = m;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < tree_shapes[i].len() {
                    break;
                }
                idx[i] = 0;
            }
            if idx.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    out
}

/// Adjacent value swap `s_k` on `0..n` as a forest.
fn adjacent_swap(n: usize, k: usize) -> SynMorphism {
    tensor(
        &tensor(&identity(k), &symmetry(1, 1)),
        &identity(n - k - 2),
    )
}

/// A permutation of `0..n` (tree `i` maps to leaf `sigma[i]`) assembled
/// from identities and the elementary symmetry only.
pub fn permutation_morphism(sigma: &[usize]) -> SynMorphism {
    let n = sigma.len();
    let mut cur = identity(n);
    // reduce d = sigma ∘ cur⁻¹ to the identity by bubble sort; each
    // adjacent swap of d's entries post-composes cur with s_k
    let mut d: Vec<usize> = sigma.to_vec();
    loop {
        let mut sorted = true;
        for k in 0..n.saturating_sub(1) {
            if d[k] > d[k + 1] {
                d.swap(k, k + 1);
                cur = then(&cur, &adjacent_swap(n, k)).expect("swap boundaries match");
                sorted = false;
            }
        }
        if sorted {
            break;
        }
    }
    cur
}

/// Rebuild a forest as an explicit composite of `generator`, identities,
/// and symmetries: per-tree comb terms tensored together, then a
/// symmetry-built permutation realizing the leaf labels. Witnesses that
/// every canonical form is generated by the PROP operations.
pub fn factorize(f: &SynMorphism) -> SynMorphism {
    fn build(t: &Tree) -> SynMorphism {
        match t {
            Tree::Leaf(_) => identity(1),
            Tree::Node(l, r) => then(&generator(), &tensor(&build(l), &build(r)))
                .expect("generator boundaries match"),
        }
    }
    let mut base = identity(0);
    for t in &f.trees {
        base = tensor(&base, &build(t));
    }
    let sigma = f.leaf_sequence();
    then(&base, &permutation_morphism(&sigma)).expect("permutation boundaries match")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_shape() {
        let d = generator();
        assert_eq!(d.m, 1);
        assert_eq!(d.n, 2);
        assert_eq!(
            d.trees,
            vec![Tree::Node(Box::new(Tree::Leaf(0)), Box::new(Tree::Leaf(1)))]
        );
    }

    #[test]
    fn generator_differs_from_swapped() {
        let swapped = then(&generator(), &symmetry(1, 1)).unwrap();
        assert_ne!(generator(), swapped);
        assert_eq!(
            swapped.trees,
            vec![Tree::Node(Box::new(Tree::Leaf(1)), Box::new(Tree::Leaf(0)))]
        );
    }

    #[test]
    fn identity_forests() {
        assert_eq!(identity(0).trees, vec![]);
        assert_eq!(
            identity(3).trees,
            vec![Tree::Leaf(0), Tree::Leaf(1), Tree::Leaf(2)]
        );
    }

    #[test]
    fn symmetry_values() {
        assert_eq!(symmetry(1, 1).trees, vec![Tree::Leaf(1), Tree::Leaf(0)]);
        assert_eq!(symmetry(0, 3), identity(3));
        for p in 0..4 {
            for q in 0..4 {
                let inv = then(&symmetry(p, q), &symmetry(q, p)).unwrap();
                assert_eq!(inv, identity(p + q));
            }
        }
    }

    #[test]
    fn then_graft_examples() {
        let d = generator();
        let left_comb = then(&d, &tensor(&d, &identity(1))).unwrap();
        assert_eq!(
            left_comb.trees,
            vec![Tree::Node(
                Box::new(Tree::Node(Box::new(Tree::Leaf(0)), Box::new(Tree::Leaf(1)))),
                Box::new(Tree::Leaf(2))
            )]
        );
        assert_eq!(then(&identity(1), &d).unwrap(), d);
    }

    #[test]
    fn then_unit_laws() {
        for f in enumerate_syn(2, 3) {
            assert_eq!(then(&f, &identity(3)).unwrap(), f);
            assert_eq!(then(&identity(2), &f).unwrap(), f);
        }
    }

    #[test]
    fn then_boundary_mismatch() {
        assert!(matches!(
            then(&generator(), &identity(3)),
            Err(crate::Error::Contract(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let d = generator();
        let dd = tensor(&d, &d);
        assert_eq!(dd.m, 2);
        assert_eq!(dd.n, 4);
        assert_eq!(
            dd.trees,
            vec![
                Tree::Node(Box::new(Tree::Leaf(0)), Box::new(Tree::Leaf(1))),
                Tree::Node(Box::new(Tree::Leaf(2)), Box::new(Tree::Leaf(3))),
            ]
        );
        assert_eq!(tensor(&d, &identity(0)), d);
        assert_eq!(tensor(&identity(1), &identity(1)), identity(2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_syn(1, 2).len(), 2);
        assert_eq!(enumerate_syn(1, 3).len(), 12);
        assert_eq!(enumerate_syn(0, 0).len(), 1);
        assert!(enumerate_syn(2, 1).is_empty());
        assert!(enumerate_syn(0, 2).is_empty());
    }

    #[test]
    fn enumeration_valid_and_distinct() {
        for m in 0..4 {
            for n in 0..5 {
                let all = enumerate_syn(m, n);
                let mut set = std::collections::HashSet::new();
                for f in &all {
                    SynMorphism::new(f.m, f.n, f.trees.clone()).unwrap();
                    assert!(set.insert(f.clone()), "duplicate in enumeration");
                    assert_eq!(f.node_count(), n - m);
                }
            }
        }
    }

    #[test]
    fn node_count_additive() {
        for f in enumerate_syn(2, 3) {
            for g in enumerate_syn(3, 4) {
                let c = then(&f, &g).unwrap();
                assert_eq!(c.node_count(), f.node_count() + g.node_count());
                let t = tensor(&f, &g);
                assert_eq!(t.node_count(), f.node_count() + g.node_count());
            }
        }
    }

    #[test]
    fn permutation_morphism_realizes_sigma() {
        for n in 0..5 {
            for sigma in permutations(n) {
                let p = permutation_morphism(&sigma);
                let expected: Vec<Tree> = sigma.iter().map(|&v| Tree::Leaf(v)).collect();
                assert_eq!(p.trees, expected);
            }
        }
    }

    #[test]
    fn factorize_reconstructs() {
        for m in 0..4 {
            for n in 0..5 {
                for f in enumerate_syn(m, n) {
                    assert_eq!(factorize(&f), f);
                }
            }
        }
    }
}

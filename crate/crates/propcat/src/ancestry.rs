//! The ancestry functor from the free PROP to corelations, and the
//! comonoid model of its quotient: functions from outputs to inputs with
//! nonempty fibers.

use crate::corel::Corelation;
use crate::finset::{FinFunction, Partition, compose_fn};
use crate::syn::{SynMorphism, Tree};
use crate::{Error, Result};

/// A morphism `m -> n` of the comonoid PROP: a function from the output
/// boundary to the input boundary with every fiber nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CocomMap {
    pub m: usize,
    pub n: usize,
    pub phi: FinFunction,
}

impl CocomMap {
    pub fn new(m: usize, n: usize, phi: FinFunction) -> Result<Self> {
        if phi.dom_size != n || phi.cod_size != m {
            return Err(Error::Contract(format!(
                "cocom map {m} -> {n} needs phi: {n} -> {m}, got {} -> {}",
                phi.dom_size, phi.cod_size
            )));
        }
        if phi.image_size() != m {
            return Err(Error::Contract("cocom map has an empty fiber".into()));
        }
        Ok(CocomMap { m, n, phi })
    }

    pub fn identity(k: usize) -> Self {
        CocomMap {
            m: k,
            n: k,
            phi: FinFunction::identity(k),
        }
    }
}

/// Ancestry corelation of a forest: each input is joined with exactly the
/// outputs labeling the leaves of its tree.
pub fn pi(f: &SynMorphism) -> Corelation {
    let mut labels = vec![0usize; f.m + f.n];
    for (i, t) in f.trees.iter().enumerate() {
        labels[i] = i;
        for l in t.leaf_labels() {
            labels[f.m + l] = i;
        }
    }
    Corelation {
        m: f.m,
        n: f.n,
        partition: Partition::from_labels(&labels),
    }
}

/// Classify a forest by the function sending each output to the index of
/// the tree whose leaf carries it.
pub fn cocom_of(f: &SynMorphism) -> CocomMap {
    let mut table = vec![0usize; f.n];
    for (i, t) in f.trees.iter().enumerate() {
        for l in t.leaf_labels() {
            table[l] = i;
        }
    }
    CocomMap {
        m: f.m,
        n: f.n,
        phi: FinFunction {
            dom_size: f.n,
            cod_size: f.m,
            table,
        },
    }
}

/// Composite `m -> p` of `u: m -> n` and `v: n -> p`; on the underlying
/// functions (which run backwards, outputs to inputs) this is `u.phi ∘ v.phi`.
pub fn cocom_compose(u: &CocomMap, v: &CocomMap) -> Result<CocomMap> {
    if u.n != v.m {
        return Err(Error::Contract(format!(
            "cocom_compose: boundary mismatch ({} vs {})",
            u.n, v.m
        )));
    }
    Ok(CocomMap {
        m: u.m,
        n: v.n,
        phi: compose_fn(&v.phi, &u.phi)?,
    })
}

pub fn cocom_tensor(u: &CocomMap, v: &CocomMap) -> CocomMap {
    let mut table = u.phi.table.clone();
    table.extend(v.phi.table.iter().map(|&x| x + u.m));
    CocomMap {
        m: u.m + v.m,
        n: u.n + v.n,
        phi: FinFunction {
            dom_size: u.n + v.n,
            cod_size: u.m + v.m,
            table,
        },
    }
}

/// The corelation with classes `{i} ∪ phi⁻¹(i)`; always lands in the
/// one-input-per-class sub-PROP.
pub fn corelation_of(u: &CocomMap) -> Corelation {
    let mut labels = vec![0usize; u.m + u.n];
    for (i, l) in labels.iter_mut().enumerate().take(u.m) {
        *l = i;
    }
    for j in 0..u.n {
        labels[u.m + j] = u.phi.table[j];
    }
    Corelation {
        m: u.m,
        n: u.n,
        partition: Partition::from_labels(&labels),
    }
}

/// Constructive section: realize a comonoid map as the forest whose tree
/// `i` is the left-comb over the fiber `phi⁻¹(i)` in increasing order.
pub fn realize_leftcomb(u: &CocomMap) -> SynMorphism {
    let mut fibers = vec![Vec::new(); u.m];
    for (j, &i) in u.phi.table.iter().enumerate() {
        fibers[i].push(j);
    }
    let trees = fibers
        .into_iter()
        .map(|fiber| {
            let mut iter = fiber.into_iter();
            let mut t = Tree::Leaf(iter.next().expect("fibers are nonempty"));
            for l in iter {
                t = Tree::Node(Box::new(t), Box::new(Tree::Leaf(l)));
            }
            t
        })
        .collect();
    SynMorphism {
        m: u.m,
        n: u.n,
        trees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corel::{corel_compose, corel_identity, corel_tensor, enumerate_corel, is_in_circ};
    use crate::finset::fiber_nonempty_functions;
    use crate::syn::{enumerate_syn, generator, identity, symmetry, tensor, then};

    fn all_cocom(m: usize, n: usize) -> Vec<CocomMap> {
        fiber_nonempty_functions(n, m)
            .into_iter()
            .map(|phi| CocomMap { m, n, phi })
            .collect()
    }

    #[test]
    fn pi_of_generator() {
        let c = pi(&generator());
        assert_eq!(c.boundary_classes(), vec![(vec![0], vec![0, 1])]);
        assert!(is_in_circ(&c));
    }

    #[test]
    fn pi_of_identity() {
        for k in 0..4 {
            assert_eq!(pi(&identity(k)), corel_identity(k));
        }
    }

    #[test]
    fn pi_collapses_output_swap() {
        let swapped = then(&generator(), &symmetry(1, 1)).unwrap();
        assert_eq!(pi(&swapped), pi(&generator()));
    }

    #[test]
    fn pi_functorial() {
        for m in 0..3 {
            for n in 0..4 {
                for f in enumerate_syn(m, n) {
                    for p in 0..4 {
                        for g in enumerate_syn(n, p) {
                            let lhs = pi(&then(&f, &g).unwrap());
                            let rhs = corel_compose(&pi(&f), &pi(&g)).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
        for f in enumerate_syn(1, 2) {
            for g in enumerate_syn(2, 3) {
                assert_eq!(pi(&tensor(&f, &g)), corel_tensor(&pi(&f), &pi(&g)));
            }
        }
    }

    #[test]
    fn cocom_of_examples() {
        assert_eq!(cocom_of(&generator()).phi.table, vec![0, 0]);
        for k in 0..4 {
            assert_eq!(cocom_of(&identity(k)), CocomMap::identity(k));
        }
        // symmetry: tree i holds leaf sigma(i), so phi inverts the block swap
        let s = cocom_of(&symmetry(1, 2));
        assert_eq!(s.phi.table, vec![1, 2, 0]);
    }

    #[test]
    fn cocom_of_is_functorial() {
        for m in 0..3 {
            for n in 0..4 {
                for f in enumerate_syn(m, n) {
                    for p in 0..4 {
                        for g in enumerate_syn(n, p) {
                            let lhs = cocom_of(&then(&f, &g).unwrap());
                            let rhs = cocom_compose(&cocom_of(&f), &cocom_of(&g)).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cocom_compose_identity_and_tensor() {
        for u in all_cocom(2, 3) {
            assert_eq!(cocom_compose(&u, &CocomMap::identity(3)).unwrap(), u);
            assert_eq!(cocom_compose(&CocomMap::identity(2), &u).unwrap(), u);
        }
        let d = cocom_of(&generator());
        let dd = cocom_tensor(&d, &d);
        assert_eq!(dd.phi.table, vec![0, 0, 1, 1]);
    }

    #[test]
    fn corelation_of_examples() {
        let d = cocom_of(&generator());
        assert_eq!(corelation_of(&d), pi(&generator()));
        for k in 0..4 {
            assert_eq!(corelation_of(&CocomMap::identity(k)), corel_identity(k));
        }
    }

    #[test]
    fn corelation_of_injective() {
        for m in 0..3 {
            for n in 0..4 {
                let maps = all_cocom(m, n);
                for u in &maps {
                    for v in &maps {
                        assert_eq!(u == v, corelation_of(u) == corelation_of(v));
                    }
                }
            }
        }
    }

    #[test]
    fn leftcomb_examples() {
        let d = cocom_of(&generator());
        assert_eq!(realize_leftcomb(&d), generator());
        for k in 0..4 {
            assert_eq!(realize_leftcomb(&CocomMap::identity(k)), identity(k));
        }
        let triple = CocomMap::new(1, 3, FinFunction::new(1, vec![0, 0, 0]).unwrap()).unwrap();
        assert_eq!(
            realize_leftcomb(&triple).trees,
            vec![Tree::Node(
                Box::new(Tree::Node(Box::new(Tree::Leaf(0)), Box::new(Tree::Leaf(1)))),
                Box::new(Tree::Leaf(2))
            )]
        );
    }

    #[test]
    fn section_identities() {
        for m in 0..4 {
            for n in 0..5 {
                for u in all_cocom(m, n) {
                    let f = realize_leftcomb(&u);
                    assert_eq!(pi(&f), corelation_of(&u));
                    assert_eq!(cocom_of(&f), u);
                }
            }
        }
    }

    #[test]
    fn image_characterization() {
        for m in 0..4 {
            for n in 0..5 {
                let image: std::collections::HashSet<_> =
                    enumerate_syn(m, n).iter().map(pi).collect();
                let circ: std::collections::HashSet<_> = enumerate_corel(m, n, 10)
                    .unwrap()
                    .into_iter()
                    .filter(is_in_circ)
                    .collect();
                assert_eq!(image, circ);
            }
        }
    }

    #[test]
    fn kernel_classification() {
        for m in 0..3 {
            for n in 0..4 {
                let homs = enumerate_syn(m, n);
                for f in &homs {
                    for g in &homs {
                        assert_eq!(pi(f) == pi(g), cocom_of(f) == cocom_of(g));
                    }
                }
                let classes: std::collections::HashSet<_> =
                    homs.iter().map(cocom_of).collect();
                assert_eq!(classes.len(), fiber_nonempty_functions(n, m).len());
            }
        }
    }

    /// The kernel of the classification is a PROP congruence.
    #[test]
    fn kernel_is_congruence() {
        let homs12 = enumerate_syn(1, 2);
        let homs23 = enumerate_syn(2, 3);
        for f in &homs12 {
            for f2 in &homs12 {
                if cocom_of(f) != cocom_of(f2) {
                    continue;
                }
                for g in &homs23 {
                    for g2 in &homs23 {
                        if cocom_of(g) != cocom_of(g2) {
                            continue;
                        }
                        assert_eq!(
                            cocom_of(&then(f, g).unwrap()),
                            cocom_of(&then(f2, g2).unwrap())
                        );
                        assert_eq!(
                            cocom_of(&tensor(f, g)),
                            cocom_of(&tensor(f2, g2))
                        );
                    }
                }
            }
        }
    }
}

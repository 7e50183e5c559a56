//! Cospans of finite sets up to apex isomorphism: pushout composition,
//! the canonical Frobenius package on the one-element object, the
//! collapse onto corelations, and the realization of forest morphisms.

use crate::ancestry::cocom_of;
use crate::corel::{all_partitions, Corelation};
use crate::finset::{all_functions, compose_fn, kernel_partition, pushout, FinFunction};
use crate::syn::SynMorphism;
use crate::{Error, Result};
use std::collections::HashSet;

/// An isomorphism class of cospans `m -> apex <- n`, held in canonical
/// form: apex elements reached by the legs are labeled by first occurrence
/// scanning `a`'s table then `b`'s; unreached elements occupy the final
/// labels. Unreached elements are retained (count only), since pruning
/// them would silently impose the extra law.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cospan {
    pub m: usize,
    pub n: usize,
    pub apex: usize,
    pub a: FinFunction,
    pub b: FinFunction,
}

impl Cospan {
    /// Canonicalize an arbitrary representative.
    pub fn new(apex: usize, a: FinFunction, b: FinFunction) -> Result<Self> {
        if a.cod_size != apex || b.cod_size != apex {
            return Err(Error::Contract(format!(
                "cospan legs must land in the apex {apex} (got {} and {})",
                a.cod_size, b.cod_size
            )));
        }
        let mut label: Vec<Option<usize>> = vec![None; apex];
        let mut next = 0usize;
        let mut relabel = |x: usize, label: &mut Vec<Option<usize>>| -> usize {
            *label[x].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        };
        let a_table: Vec<usize> = a.table.iter().map(|&x| relabel(x, &mut label)).collect();
        let b_table: Vec<usize> = b.table.iter().map(|&x| relabel(x, &mut label)).collect();
        Ok(Cospan {
            m: a.dom_size,
            n: b.dom_size,
            apex,
            a: FinFunction {
                dom_size: a.dom_size,
                cod_size: apex,
                table: a_table,
            },
            b: FinFunction {
                dom_size: b.dom_size,
                cod_size: apex,
                table: b_table,
            },
        })
    }

    /// Apex elements not hit by either leg.
    pub fn unreached(&self) -> usize {
        let mut seen = vec![false; self.apex];
        for &x in self.a.table.iter().chain(self.b.table.iter()) {
            seen[x] = true;
        }
        seen.iter().filter(|&&s| !s).count()
    }
}

pub fn cospan_identity(k: usize) -> Cospan {
    Cospan::new(k, FinFunction::identity(k), FinFunction::identity(k))
        .expect("identity legs land in the apex")
}

/// Embed a function as the cospan with identity right leg.
pub fn iota(f: &FinFunction) -> Cospan {
    Cospan::new(f.cod_size, f.clone(), FinFunction::identity(f.cod_size))
        .expect("legs land in the apex")
}

pub fn cospan_symmetry(p: usize, q: usize) -> Cospan {
    let a = FinFunction::identity(p + q);
    let mut table = Vec::with_capacity(p + q);
    table.extend(p..p + q);
    table.extend(0..p);
    let b = FinFunction {
        dom_size: p + q,
        cod_size: p + q,
        table,
    };
    Cospan::new(p + q, a, b).expect("legs land in the apex")
}

/// Composition by pushout along the shared boundary.
pub fn cospan_compose(c1: &Cospan, c2: &Cospan) -> Result<Cospan> {
    if c1.n != c2.m {
        return Err(Error::Contract(format!(
            "cospan_compose: boundary mismatch ({} vs {})",
            c1.n, c2.m
        )));
    }
    let (apex, inj1, inj2) = pushout(&c1.b, &c2.a)?;
    let a = compose_fn(&c1.a, &inj1)?;
    let b = compose_fn(&c2.b, &inj2)?;
    Cospan::new(apex, a, b)
}

pub fn cospan_tensor(c1: &Cospan, c2: &Cospan) -> Cospan {
    let apex = c1.apex + c2.apex;
    let mut a_table = c1.a.table.clone();
    a_table.extend(c2.a.table.iter().map(|&x| x + c1.apex));
    let mut b_table = c1.b.table.clone();
    b_table.extend(c2.b.table.iter().map(|&x| x + c1.apex));
    Cospan::new(
        apex,
        FinFunction {
            dom_size: c1.m + c2.m,
            cod_size: apex,
            table: a_table,
        },
        FinFunction {
            dom_size: c1.n + c2.n,
            cod_size: apex,
            table: b_table,
        },
    )
    .expect("legs land in the apex")
}

/// Multiplication `2 -> 1`: the codiagonal as left leg.
pub fn mu_c() -> Cospan {
    Cospan::new(
        1,
        FinFunction::new(1, vec![0, 0]).unwrap(),
        FinFunction::new(1, vec![0]).unwrap(),
    )
    .unwrap()
}

/// Unit `0 -> 1`.
pub fn eta_c() -> Cospan {
    Cospan::new(
        1,
        FinFunction::new(1, vec![]).unwrap(),
        FinFunction::new(1, vec![0]).unwrap(),
    )
    .unwrap()
}

/// Comultiplication `1 -> 2`: the codiagonal as right leg.
pub fn delta_c() -> Cospan {
    Cospan::new(
        1,
        FinFunction::new(1, vec![0]).unwrap(),
        FinFunction::new(1, vec![0, 0]).unwrap(),
    )
    .unwrap()
}

/// Counit `1 -> 0`.
pub fn eps_c() -> Cospan {
    Cospan::new(
        1,
        FinFunction::new(1, vec![0]).unwrap(),
        FinFunction::new(1, vec![]).unwrap(),
    )
    .unwrap()
}

/// Evaluate the Frobenius axioms as canonical-form equalities. The ten
/// axioms and the special law hold; the extra law (closed cospan equals
/// the empty identity) fails here and holds only after the collapse to
/// corelations.
pub fn check_scfa() -> Vec<(&'static str, bool)> {
    let id1 = cospan_identity(1);
    let id0 = cospan_identity(0);
    let sym = cospan_symmetry(1, 1);
    let mu = mu_c();
    let eta = eta_c();
    let delta = delta_c();
    let eps = eps_c();
    let seq = |x: &Cospan, y: &Cospan| cospan_compose(x, y).expect("axiom boundaries match");

    let assoc = seq(&cospan_tensor(&mu, &id1), &mu) == seq(&cospan_tensor(&id1, &mu), &mu);
    let unit_l = seq(&cospan_tensor(&eta, &id1), &mu) == id1;
    let unit_r = seq(&cospan_tensor(&id1, &eta), &mu) == id1;
    let comm = seq(&sym, &mu) == mu;
    let coassoc =
        seq(&delta, &cospan_tensor(&delta, &id1)) == seq(&delta, &cospan_tensor(&id1, &delta));
    let counit_l = seq(&delta, &cospan_tensor(&eps, &id1)) == id1;
    let counit_r = seq(&delta, &cospan_tensor(&id1, &eps)) == id1;
    let cocomm = seq(&delta, &sym) == delta;
    let frob_mid = seq(&mu, &delta);
    let frob_1 = seq(&cospan_tensor(&id1, &delta), &cospan_tensor(&mu, &id1)) == frob_mid;
    let frob_2 = seq(&cospan_tensor(&delta, &id1), &cospan_tensor(&id1, &mu)) == frob_mid;
    let special = seq(&delta, &mu) == id1;
    let extra = seq(&eta, &eps) == id0;

    vec![
        ("monoid_associativity", assoc),
        ("monoid_unit_left", unit_l),
        ("monoid_unit_right", unit_r),
        ("monoid_commutativity", comm),
        ("comonoid_coassociativity", coassoc),
        ("comonoid_counit_left", counit_l),
        ("comonoid_counit_right", counit_r),
        ("comonoid_cocommutativity", cocomm),
        ("frobenius_left", frob_1),
        ("frobenius_right", frob_2),
        ("special_law", special),
        ("extra_law_in_cospan", extra),
    ]
}

/// Does the extra law hold after collapsing both sides to corelations?
pub fn extra_law_after_collapse() -> bool {
    let closed = cospan_compose(&eta_c(), &eps_c()).expect("boundaries match");
    pi_bar(&closed) == pi_bar(&cospan_identity(0))
}

/// Collapse a cospan to the kernel corelation of its joint leg map.
pub fn pi_bar(c: &Cospan) -> Corelation {
    let p = kernel_partition(&[c.a.clone(), c.b.clone()]).expect("two legs, shared codomain");
    Corelation {
        m: c.m,
        n: c.n,
        partition: p,
    }
}

/// Jointly-epic section of the collapse: apex is the set of classes, legs
/// the class projections.
pub fn corelation_to_cospan(r: &Corelation) -> Cospan {
    let apex = r.partition.num_classes();
    let a = FinFunction {
        dom_size: r.m,
        cod_size: apex,
        table: r.partition.class_id[..r.m].to_vec(),
    };
    let b = FinFunction {
        dom_size: r.n,
        cod_size: apex,
        table: r.partition.class_id[r.m..].to_vec(),
    };
    Cospan::new(apex, a, b).expect("legs land in the apex")
}

/// Realization of a forest morphism: apex is the input boundary, the
/// right leg sends each output to the tree carrying it.
pub fn real(f: &SynMorphism) -> Cospan {
    let phi = cocom_of(f).phi;
    Cospan::new(f.m, FinFunction::identity(f.m), phi).expect("legs land in the apex")
}

/// All canonical cospans `m -> n` with apex at most `max_apex`.
pub fn enumerate_cospans(m: usize, n: usize, max_apex: usize) -> Vec<Cospan> {
    let mut set = HashSet::new();
    let mut out = Vec::new();
    for apex in 0..=max_apex {
        for a in all_functions(m, apex) {
            for b in all_functions(n, apex) {
                let c = Cospan::new(apex, a.clone(), b).expect("legs land in the apex");
                if set.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
    }
    out.sort();
    out
}

/// Number of distinct corelations reached from cospans `m -> n`: the
/// closure of embedded functions, Frobenius generators, and symmetries
/// under compose/tensor up to `depth`, unioned with the jointly-epic
/// sections of every corelation. Expected to reach `Bell(m + n)`.
///
/// Two cospans with the same collapse have composites and tensors with the
/// same collapse (the collapse is a strict monoidal functor, verified
/// separately), so the closure is computed on collapse classes directly;
/// this keeps the search space at Bell-number scale instead of raw-cospan
/// scale.
pub fn quotient_card(m: usize, n: usize, depth: usize, bound: usize) -> Result<usize> {
    if m + n > bound {
        return Err(Error::Resource(format!(
            "quotient_card: carrier {} exceeds bound {bound}",
            m + n
        )));
    }
    use crate::corel::{corel_compose, corel_identity, corel_symmetry, corel_tensor};
    let max_boundary = m.max(n).max(2);
    let carrier_cap = (m + n).max(4) + 2;
    let fits = |r: &Corelation| {
        r.m <= max_boundary && r.n <= max_boundary && r.m + r.n <= carrier_cap
    };

    let mut seen: HashSet<Corelation> = HashSet::new();
    let mut pool: Vec<Corelation> = Vec::new();
    let add = |r: Corelation, seen: &mut HashSet<Corelation>, pool: &mut Vec<Corelation>| {
        if fits(&r) && seen.insert(r.clone()) {
            pool.push(r);
        }
    };
    for c in [mu_c(), eta_c(), delta_c(), eps_c()] {
        add(pi_bar(&c), &mut seen, &mut pool);
    }
    for k in 0..=max_boundary {
        add(corel_identity(k), &mut seen, &mut pool);
        for p in 0..=max_boundary - k {
            add(corel_symmetry(k, p), &mut seen, &mut pool);
        }
    }
    for dom in 0..=max_boundary {
        for cod in 0..=max_boundary {
            for f in all_functions(dom, cod) {
                add(pi_bar(&iota(&f)), &mut seen, &mut pool);
            }
        }
    }

    let mut fresh_start = 0usize;
    for _ in 0..depth {
        let len = pool.len();
        if fresh_start == len {
            break;
        }
        let mut grown = Vec::new();
        for i in 0..len {
            // only pairs involving at least one morphism new to this round
            let j_start = if i >= fresh_start { 0 } else { fresh_start };
            for j in j_start..len {
                let (x, y) = (&pool[i], &pool[j]);
                if x.n == y.m {
                    let r = corel_compose(x, y)?;
                    if fits(&r) && !seen.contains(&r) {
                        seen.insert(r.clone());
                        grown.push(r);
                    }
                }
                let t = corel_tensor(x, y);
                if fits(&t) && !seen.contains(&t) {
                    seen.insert(t.clone());
                    grown.push(t);
                }
            }
        }
        fresh_start = len;
        pool.extend(grown);
    }

    let mut reached: HashSet<Corelation> = seen
        .into_iter()
        .filter(|r| r.m == m && r.n == n)
        .collect();
    for p in all_partitions(m + n) {
        let r = Corelation { m, n, partition: p };
        reached.insert(pi_bar(&corelation_to_cospan(&r)));
    }
    Ok(reached.len())
}

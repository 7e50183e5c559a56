//! The PROP of finite corelations: equivalence relations on the disjoint
//! union of two boundaries, composed by transitive closure.

use crate::finset::{Partition, UnionFind};
use crate::{Error, Result};

/// A corelation `m -> n`: a canonical partition of the carrier `m + n`,
/// inputs first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corelation {
    pub m: usize,
    pub n: usize,
    pub partition: Partition,
}

impl Corelation {
    pub fn new(m: usize, n: usize, partition: Partition) -> Result<Self> {
        if partition.carrier_size != m + n {
            return Err(Error::Contract(format!(
                "corelation carrier {} != {m} + {n}",
                partition.carrier_size
            )));
        }
        Ok(Corelation { m, n, partition })
    }

    /// Classes as (input indices, output indices), 0-based on each side.
    pub fn boundary_classes(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.partition
            .classes()
            .into_iter()
            .map(|cls| {
                let mut ins = Vec::new();
                let mut outs = Vec::new();
                for x in cls {
                    if x < self.m {
                        ins.push(x);
                    } else {
                        outs.push(x - self.m);
                    }
                }
                (ins, outs)
            })
            .collect()
    }
}

pub fn corel_identity(k: usize) -> Corelation {
    let labels: Vec<usize> = (0..k).chain(0..k).collect();
    Corelation {
        m: k,
        n: k,
        partition: Partition::from_labels(&labels),
    }
}

/// The transposition corelation `p + q -> q + p`.
pub fn corel_symmetry(p: usize, q: usize) -> Corelation {
    // input i (i < p) pairs with output q + i; input p + j pairs with output j
    let mut labels = vec![0usize; 2 * (p + q)];
    for (i, l) in labels.iter_mut().enumerate().take(p + q) {
        *l = i;
    }
    for j in 0..q {
        labels[p + q + j] = p + j;
    }
    for i in 0..p {
        labels[p + q + q + i] = i;
    }
    Corelation {
        m: p + q,
        n: p + q,
        partition: Partition::from_labels(&labels),
    }
}

/// Composition by transitive closure through the shared boundary.
pub fn corel_compose(r: &Corelation, s: &Corelation) -> Result<Corelation> {
    if r.n != s.m {
        return Err(Error::Contract(format!(
            "corel_compose: boundary mismatch ({} vs {})",
            r.n, s.m
        )));
    }
    let (m, n, p) = (r.m, r.n, s.n);
    let mut uf = UnionFind::new(m + n + p);
    for x in 0..m + n {
        for y in (x + 1)..m + n {
            if r.partition.same_class(x, y) {
                uf.union(x, y);
            }
        }
    }
    for x in 0..n + p {
        for y in (x + 1)..n + p {
            if s.partition.same_class(x, y) {
                uf.union(m + x, m + y);
            }
        }
    }
    // restrict to inputs of r and outputs of s
    let labels: Vec<usize> = (0..m)
        .chain(m + n..m + n + p)
        .map(|x| uf.find(x))
        .collect();
    Ok(Corelation {
        m,
        n: p,
        partition: Partition::from_labels(&labels),
    })
}

/// Block-diagonal tensor with the standard reindexing.
pub fn corel_tensor(r: &Corelation, s: &Corelation) -> Corelation {
    let (m1, n1, m2, n2) = (r.m, r.n, s.m, s.n);
    let shift = r.partition.num_classes();
    let mut labels = Vec::with_capacity(m1 + m2 + n1 + n2);
    labels.extend_from_slice(&r.partition.class_id[..m1]);
    labels.extend(s.partition.class_id[..m2].iter().map(|&c| shift + c));
    labels.extend_from_slice(&r.partition.class_id[m1..]);
    labels.extend(s.partition.class_id[m2..].iter().map(|&c| shift + c));
    Corelation {
        m: m1 + m2,
        n: n1 + n2,
        partition: Partition::from_labels(&labels),
    }
}

/// Membership in the sub-PROP of corelations whose every class has exactly
/// one input and at least one output.
pub fn is_in_circ(r: &Corelation) -> bool {
    r.boundary_classes()
        .iter()
        .all(|(ins, outs)| ins.len() == 1 && !outs.is_empty())
}

/// All set partitions of `size` elements via restricted growth strings,
/// in lexicographic string order.
pub fn all_partitions(size: usize) -> Vec<Partition> {
    if size == 0 {
        return vec![Partition::discrete(0)];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; size];
    fn rec(i: usize, max_used: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rgs.len() {
            out.push(Partition {
                carrier_size: rgs.len(),
                class_id: rgs.clone(),
            });
            return;
        }
        for v in 0..=max_used + 1 {
            rgs[i] = v;
            rec(i + 1, max_used.max(v), rgs, out);
        }
    }
    // first element is always class 0
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// All `Bell(m + n)` corelations `m -> n`, deterministic order.
pub fn enumerate_corel(m: usize, n: usize, bound: usize) -> Result<Vec<Corelation>> {
    if m + n > bound {
        return Err(Error::Resource(format!(
            "enumerate_corel: carrier {} exceeds bound {bound}",
            m + n
        )));
    }
    Ok(all_partitions(m + n)
        .into_iter()
        .map(|partition| Corelation { m, n, partition })
        .collect())
}

/// Default cap on `m + n` for exhaustive corelation enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 10;

//! Predicate lattices over finite carriers: Heyting operations, the
//! adjoint triple along a function, relational modalities, and
//! Knaster-Tarski fixed points by Kleene iteration.

use crate::finset::FinFunction;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BLOCK: usize = 64;

/// A subset of the carrier `{0, .., size-1}`, stored as a block bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pred {
    pub size: usize,
    bits: Vec<u64>,
}

impl Pred {
    pub fn empty(size: usize) -> Self {
        Pred {
            size,
            bits: vec![0; size.div_ceil(BLOCK)],
        }
    }

    pub fn full(size: usize) -> Self {
        let mut p = Pred::empty(size);
        for x in 0..size {
            p.insert(x);
        }
        p
    }

    pub fn from_members(size: usize, members: &[usize]) -> Result<Self> {
        let mut p = Pred::empty(size);
        for &x in members {
            if x >= size {
                return Err(Error::Contract(format!(
                    "member {x} outside carrier of size {size}"
                )));
            }
            p.insert(x);
        }
        Ok(p)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits[x / BLOCK] |= 1 << (x % BLOCK);
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits[x / BLOCK] >> (x % BLOCK) & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.contains(x)).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn is_subset(&self, other: &Pred) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(&a, &b)| a & !b == 0)
    }

    fn check_carrier(&self, other: &Pred) -> Result<()> {
        if self.size != other.size {
            return Err(Error::Contract(format!(
                "carrier mismatch: {} vs {}",
                self.size, other.size
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Pred, f: impl Fn(u64, u64) -> u64) -> Result<Pred> {
        self.check_carrier(other)?;
        let mut out = Pred {
            size: self.size,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        };
        out.trim();
        Ok(out)
    }

    // clear bits beyond the carrier after a complementing operation
    fn trim(&mut self) {
        let rem = self.size % BLOCK;
        if rem != 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub fn meet(a: &Pred, b: &Pred) -> Result<Pred> {
    a.zip_with(b, |x, y| x & y)
}

pub fn join(a: &Pred, b: &Pred) -> Result<Pred> {
    a.zip_with(b, |x, y| x | y)
}

/// Heyting implication, which in a finite powerset is Boolean.
pub fn implies(a: &Pred, b: &Pred) -> Result<Pred> {
    a.zip_with(b, |x, y| !x | y)
}

pub fn complement(a: &Pred) -> Pred {
    let mut out = Pred {
        size: a.size,
        bits: a.bits.iter().map(|&x| !x).collect(),
    };
    out.trim();
    out
}

/// Direct image: left adjoint to pullback.
pub fn exists_f(f: &FinFunction, a: &Pred) -> Result<Pred> {
    if a.size != f.dom_size {
        return Err(Error::Contract("exists_f: carrier must be the domain".into()));
    }
    let mut out = Pred::empty(f.cod_size);
    for x in 0..f.dom_size {
        if a.contains(x) {
            out.insert(f.table[x]);
        }
    }
    Ok(out)
}

/// Preimage.
pub fn pullback_f(f: &FinFunction, b: &Pred) -> Result<Pred> {
    if b.size != f.cod_size {
        return Err(Error::Contract(
            "pullback_f: carrier must be the codomain".into(),
        ));
    }
    let mut out = Pred::empty(f.dom_size);
    for x in 0..f.dom_size {
        if b.contains(f.table[x]) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `{y : f⁻¹(y) ⊆ A}`: right adjoint to pullback.
pub fn forall_f(f: &FinFunction, a: &Pred) -> Result<Pred> {
    if a.size != f.dom_size {
        return Err(Error::Contract("forall_f: carrier must be the domain".into()));
    }
    let mut out = Pred::full(f.cod_size);
    for x in 0..f.dom_size {
        if !a.contains(x) {
            let mut cleared = Pred::empty(f.cod_size);
            for y in 0..f.cod_size {
                if y != f.table[x] && out.contains(y) {
                    cleared.insert(y);
                }
            }
            out = cleared;
        }
    }
    Ok(out)
}

/// A binary relation on a carrier, stored as a predicate on the product
/// carrier with pair `(x, y)` at index `x * size + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rel {
    pub size: usize,
    pub pred: Pred,
}

impl Rel {
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut pred = Pred::empty(size * size);
        for &(x, y) in pairs {
            if x >= size || y >= size {
                return Err(Error::Contract(format!(
                    "pair ({x}, {y}) outside carrier of size {size}"
                )));
            }
            pred.insert(x * size + y);
        }
        Ok(Rel { size, pred })
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pred.contains(x * self.size + y)
    }

    /// First projection of the product carrier.
    pub fn proj1(&self) -> FinFunction {
        FinFunction {
            dom_size: self.size * self.size,
            cod_size: self.size,
            table: (0..self.size * self.size).map(|i| i / self.size).collect(),
        }
    }

    /// Second projection of the product carrier.
    pub fn proj2(&self) -> FinFunction {
        FinFunction {
            dom_size: self.size * self.size,
            cod_size: self.size,
            table: (0..self.size * self.size).map(|i| i % self.size).collect(),
        }
    }
}

fn check_rel_carrier(r: &Rel, a: &Pred) -> Result<()> {
    if r.size != a.size {
        return Err(Error::Contract(format!(
            "carrier mismatch: relation on {}, predicate on {}",
            r.size, a.size
        )));
    }
    Ok(())
}

/// `{x : ∃y. (x,y) ∈ R ∧ y ∈ A}` by pointwise scan.
pub fn diamond(r: &Rel, a: &Pred) -> Result<Pred> {
    check_rel_carrier(r, a)?;
    let mut out = Pred::empty(r.size);
    for x in 0..r.size {
        if (0..r.size).any(|y| r.contains(x, y) && a.contains(y)) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `{x : ∀y. (x,y) ∈ R ⟹ y ∈ A}` by pointwise scan.
pub fn boxm(r: &Rel, a: &Pred) -> Result<Pred> {
    check_rel_carrier(r, a)?;
    let mut out = Pred::empty(r.size);
    for x in 0..r.size {
        if (0..r.size).all(|y| !r.contains(x, y) || a.contains(y)) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Diamond built from the adjoint calculus on the product projections;
/// must agree with [`diamond`].
pub fn diamond_adjoint(r: &Rel, a: &Pred) -> Result<Pred> {
    check_rel_carrier(r, a)?;
    exists_f(&r.proj1(), &meet(&r.pred, &pullback_f(&r.proj2(), a)?)?)
}

/// Box built from the adjoint calculus; must agree with [`boxm`].
pub fn box_adjoint(r: &Rel, a: &Pred) -> Result<Pred> {
    check_rel_carrier(r, a)?;
    forall_f(&r.proj1(), &implies(&r.pred, &pullback_f(&r.proj2(), a)?)?)
}

/// Monotonicity spot-check configuration for the fixed-point iterators.
#[derive(Clone, Copy, Debug)]
pub struct FixpointOptions {
    pub monotonicity_samples: usize,
    pub seed: u64,
}

impl Default for FixpointOptions {
    fn default() -> Self {
        FixpointOptions {
            monotonicity_samples: 64,
            seed: 0,
        }
    }
}

fn tuple_leq(a: &[Pred], b: &[Pred]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_subset(y))
}

fn random_pred(rng: &mut impl Rng, size: usize) -> Pred {
    let mut p = Pred::empty(size);
    for x in 0..size {
        if rng.gen_bool(0.5) {
            p.insert(x);
        }
    }
    p
}

fn spot_check_monotone<F>(carrier: usize, arity: usize, f: &F, opts: FixpointOptions) -> Result<()>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.monotonicity_samples {
        let hi: Vec<Pred> = (0..arity).map(|_| random_pred(&mut rng, carrier)).collect();
        let lo: Vec<Pred> = hi
            .iter()
            .map(|p| meet(p, &random_pred(&mut rng, carrier)).expect("same carrier"))
            .collect();
        if !tuple_leq(&f(&lo)?, &f(&hi)?) {
            return Err(Error::Monotonicity(
                "endomap is not monotone on a sampled comparable pair".into(),
            ));
        }
    }
    Ok(())
}

fn kleene<F>(
    start: Vec<Pred>,
    carrier: usize,
    arity: usize,
    f: &F,
    ascending: bool,
) -> Result<Vec<Pred>>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    let max_steps = arity * carrier + 1;
    let mut cur = start;
    for _ in 0..=max_steps {
        let next = f(&cur)?;
        if next.len() != arity || next.iter().any(|p| p.size != carrier) {
            return Err(Error::Contract(
                "endomap changed arity or carrier".into(),
            ));
        }
        if next == cur {
            return Ok(cur);
        }
        let chain_ok = if ascending {
            tuple_leq(&cur, &next)
        } else {
            tuple_leq(&next, &cur)
        };
        if !chain_ok {
            return Err(Error::Monotonicity(
                "Kleene iteration left the chain; endomap is not monotone".into(),
            ));
        }
        cur = next;
    }
    Err(Error::Monotonicity(format!(
        "no fixed point within {max_steps} steps"
    )))
}

/// Least fixed point of a monotone endomap on tuples of predicates, by
/// Kleene iteration from the all-empty tuple.
pub fn lfp_with<F>(carrier: usize, arity: usize, f: F, opts: FixpointOptions) -> Result<Vec<Pred>>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    spot_check_monotone(carrier, arity, &f, opts)?;
    kleene(
        (0..arity).map(|_| Pred::empty(carrier)).collect(),
        carrier,
        arity,
        &f,
        true,
    )
}

/// Greatest fixed point, by Kleene iteration from the all-full tuple.
pub fn gfp_with<F>(carrier: usize, arity: usize, f: F, opts: FixpointOptions) -> Result<Vec<Pred>>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    spot_check_monotone(carrier, arity, &f, opts)?;
    kleene(
        (0..arity).map(|_| Pred::full(carrier)).collect(),
        carrier,
        arity,
        &f,
        false,
    )
}

pub fn lfp<F>(carrier: usize, arity: usize, f: F) -> Result<Vec<Pred>>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    lfp_with(carrier, arity, f, FixpointOptions::default())
}

pub fn gfp<F>(carrier: usize, arity: usize, f: F) -> Result<Vec<Pred>>
where
    F: Fn(&[Pred]) -> Result<Vec<Pred>>,
{
    gfp_with(carrier, arity, f, FixpointOptions::default())
}

/// All `2^size` predicates, for exhaustive law checks and brute-force
/// fixed-point oracles.
pub fn all_preds(size: usize) -> Vec<Pred> {
    assert!(size < 24, "exhaustive predicate scan is for small carriers");
    (0u32..1 << size)
        .map(|mask| {
            let mut p = Pred::empty(size);
            for x in 0..size {
                if mask >> x & 1 == 1 {
                    p.insert(x);
                }
            }
            p
        })
        .collect()
}

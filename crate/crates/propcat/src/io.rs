//! JSON wire formats for every morphism kind, and the fixed-point problem
//! description accepted by the CLI.

use crate::ancestry::CocomMap;
use crate::corel::Corelation;
use crate::cospan::Cospan;
use crate::finset::{FinFunction, Partition};
use crate::logic::{boxm, complement, diamond, implies, join, meet, Pred, Rel};
use crate::syn::{SynMorphism, Tree};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum TreeJson {
    Leaf(usize),
    Node(Box<TreeJson>, Box<TreeJson>),
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> Self {
        match t {
            Tree::Leaf(k) => TreeJson::Leaf(*k),
            Tree::Node(l, r) => TreeJson::Node(Box::new((&**l).into()), Box::new((&**r).into())),
        }
    }
}

impl From<&TreeJson> for Tree {
    fn from(t: &TreeJson) -> Self {
        match t {
            TreeJson::Leaf(k) => Tree::Leaf(*k),
            TreeJson::Node(l, r) => Tree::Node(Box::new((&**l).into()), Box::new((&**r).into())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SynJson {
    m: usize,
    n: usize,
    trees: Vec<TreeJson>,
}

pub fn syn_to_json(f: &SynMorphism) -> serde_json::Value {
    serde_json::to_value(SynJson {
        m: f.m,
        n: f.n,
        trees: f.trees.iter().map(TreeJson::from).collect(),
    })
    .expect("plain data serializes")
}

pub fn syn_from_json(v: &serde_json::Value) -> Result<SynMorphism> {
    let w: SynJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    SynMorphism::new(w.m, w.n, w.trees.iter().map(Tree::from).collect())
}

#[derive(Serialize, Deserialize)]
struct CorelJson {
    m: usize,
    n: usize,
    classes: Vec<Vec<String>>,
}

pub fn corel_to_json(r: &Corelation) -> serde_json::Value {
    let classes = r
        .boundary_classes()
        .into_iter()
        .map(|(ins, outs)| {
            ins.iter()
                .map(|i| format!("i{i}"))
                .chain(outs.iter().map(|o| format!("o{o}")))
                .collect()
        })
        .collect();
    serde_json::to_value(CorelJson {
        m: r.m,
        n: r.n,
        classes,
    })
    .expect("plain data serializes")
}

pub fn corel_from_json(v: &serde_json::Value) -> Result<Corelation> {
    let w: CorelJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut labels = vec![usize::MAX; w.m + w.n];
    for (cls_id, cls) in w.classes.iter().enumerate() {
        for name in cls {
            let (side, num) = name.split_at(1);
            let k: usize = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad element name {name:?}")))?;
            let idx = match side {
                "i" if k < w.m => k,
                "o" if k < w.n => w.m + k,
                _ => return Err(Error::Parse(format!("bad element name {name:?}"))),
            };
            if labels[idx] != usize::MAX {
                return Err(Error::Parse(format!("element {name:?} listed twice")));
            }
            labels[idx] = cls_id;
        }
    }
    if labels.contains(&usize::MAX) {
        return Err(Error::Parse("classes do not cover the carrier".into()));
    }
    Corelation::new(w.m, w.n, Partition::from_labels(&labels))
}

#[derive(Serialize, Deserialize)]
struct CospanJson {
    m: usize,
    n: usize,
    apex: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

pub fn cospan_to_json(c: &Cospan) -> serde_json::Value {
    serde_json::to_value(CospanJson {
        m: c.m,
        n: c.n,
        apex: c.apex,
        a: c.a.table.clone(),
        b: c.b.table.clone(),
    })
    .expect("plain data serializes")
}

pub fn cospan_from_json(v: &serde_json::Value) -> Result<Cospan> {
    let w: CospanJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if w.a.len() != w.m || w.b.len() != w.n {
        return Err(Error::Parse("leg length does not match boundary".into()));
    }
    Cospan::new(w.apex, FinFunction::new(w.apex, w.a)?, FinFunction::new(w.apex, w.b)?)
}

#[derive(Serialize, Deserialize)]
struct CocomJson {
    m: usize,
    n: usize,
    phi: Vec<usize>,
}

pub fn cocom_to_json(u: &CocomMap) -> serde_json::Value {
    serde_json::to_value(CocomJson {
        m: u.m,
        n: u.n,
        phi: u.phi.table.clone(),
    })
    .expect("plain data serializes")
}

pub fn cocom_from_json(v: &serde_json::Value) -> Result<CocomMap> {
    let w: CocomJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    CocomMap::new(w.m, w.n, FinFunction::new(w.m, w.phi)?)
}

/// Formula term over one tuple of predicate variables, as accepted by the
/// `fixpoint` CLI verb.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Term {
    Var(usize),
    Const(Vec<usize>),
    Diamond(Box<Term>),
    #[serde(rename = "box")]
    Boxm(Box<Term>),
    Not(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
    Implies(Box<Term>, Box<Term>),
}

impl Term {
    pub fn eval(&self, rel: &Rel, env: &[Pred]) -> Result<Pred> {
        match self {
            Term::Var(i) => env
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::Contract(format!("variable {i} out of range"))),
            Term::Const(members) => Pred::from_members(rel.size, members),
            Term::Diamond(t) => diamond(rel, &t.eval(rel, env)?),
            Term::Boxm(t) => boxm(rel, &t.eval(rel, env)?),
            Term::Not(t) => Ok(complement(&t.eval(rel, env)?)),
            Term::And(a, b) => meet(&a.eval(rel, env)?, &b.eval(rel, env)?),
            Term::Or(a, b) => join(&a.eval(rel, env)?, &b.eval(rel, env)?),
            Term::Implies(a, b) => implies(&a.eval(rel, env)?, &b.eval(rel, env)?),
        }
    }
}

/// Input of the `fixpoint` verb: a carrier, a relation, and one formula
/// per tuple component.
#[derive(Serialize, Deserialize)]
pub struct FixpointSpec {
    pub carrier: usize,
    #[serde(default)]
    pub relation: Vec<(usize, usize)>,
    pub formulas: Vec<Term>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syn::{enumerate_syn, generator};

    #[test]
    fn syn_round_trip() {
        for f in enumerate_syn(2, 4) {
            let v = syn_to_json(&f);
            assert_eq!(syn_from_json(&v).unwrap(), f);
        }
        let v = syn_to_json(&generator());
        assert_eq!(
            v,
            serde_json::json!({"m": 1, "n": 2, "trees": [{"node": [{"leaf": 0}, {"leaf": 1}]}]})
        );
    }

    #[test]
    fn corel_round_trip() {
        for r in crate::corel::enumerate_corel(2, 3, 10).unwrap() {
            let v = corel_to_json(&r);
            assert_eq!(corel_from_json(&v).unwrap(), r);
        }
    }

    #[test]
    fn corel_named_elements() {
        let v = corel_to_json(&crate::ancestry::pi(&generator()));
        assert_eq!(v, serde_json::json!({"m": 1, "n": 2, "classes": [["i0", "o0", "o1"]]}));
    }

    #[test]
    fn cospan_round_trip() {
        for c in crate::cospan::enumerate_cospans(2, 1, 3) {
            let v = cospan_to_json(&c);
            assert_eq!(cospan_from_json(&v).unwrap(), c);
        }
    }

    #[test]
    fn term_parsing() {
        let v = serde_json::json!({"or": [{"var": 0}, {"const": [0]}]});
        let t: Term = serde_json::from_value(v).unwrap();
        let rel = Rel::from_pairs(3, &[]).unwrap();
        let env = [Pred::empty(3)];
        assert_eq!(
            t.eval(&rel, &env).unwrap(),
            Pred::from_members(3, &[0]).unwrap()
        );
    }

    #[test]
    fn bad_json_is_a_parse_error() {
        let v = serde_json::json!({"m": 1, "n": 2, "trees": []});
        assert!(matches!(syn_from_json(&v), Err(Error::Contract(_))));
        let v = serde_json::json!({"m": "x"});
        assert!(matches!(syn_from_json(&v), Err(Error::Parse(_))));
    }
}

//! Finitely presented Lie algebras: generator declarations split into a
//! V-part and a W-part, and relation expressions evaluated into the tensor
//! algebra.
//!
//! The JSON file format is
//! `{"generators": [{"name": "e1", "part": "V"}, ...], "relations": [<expr>]}`
//! where `<expr>` is one of `{"gen": name}`, `{"bracket": [e, e]}`,
//! `{"scale": ["p/q", e]}`, `{"sum": [e, ...]}` or
//! `{"adpow": {"op": name, "exp": k, "arg": e}}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freelie::{bracket, FreeLieContext, NCPolynomial};
use crate::lyndon::{Alphabet, MultiDegree, Word};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    V,
    W,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDecl {
    pub name: String,
    pub part: Part,
}

impl GeneratorDecl {
    pub fn v(name: &str) -> Self {
        GeneratorDecl { name: name.into(), part: Part::V }
    }

    pub fn w(name: &str) -> Self {
        GeneratorDecl { name: name.into(), part: Part::W }
    }
}

/// A relation as an expression tree. `Adpow` is first-class so Serre-type
/// relations (ad x_i)^n x_j stay readable in presentation files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationExpr {
    Gen(String),
    Bracket(Box<RelationExpr>, Box<RelationExpr>),
    Scale(Rational, Box<RelationExpr>),
    Sum(Vec<RelationExpr>),
    Adpow {
        op: String,
        exp: u32,
        arg: Box<RelationExpr>,
    },
}

impl RelationExpr {
    pub fn gen(name: &str) -> Self {
        RelationExpr::Gen(name.into())
    }

    pub fn bracket(a: RelationExpr, b: RelationExpr) -> Self {
        RelationExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Rational, e: RelationExpr) -> Self {
        RelationExpr::Scale(c, Box::new(e))
    }

    pub fn adpow(op: &str, exp: u32, arg: RelationExpr) -> Self {
        RelationExpr::Adpow {
            op: op.into(),
            exp,
            arg: Box::new(arg),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<GeneratorDecl>,
    pub relations: Vec<RelationExpr>,
}

/// A relation evaluated into the tensor algebra over the presentation's
/// alphabet, with its multidegree.
#[derive(Clone, Debug)]
pub struct CompiledRelation {
    pub degree: MultiDegree,
    pub poly: NCPolynomial,
}

impl CompiledRelation {
    /// Sum of the multidegree over the W slots.
    pub fn w_degree(&self, v_count: usize) -> u32 {
        self.degree.degree_over(v_count..self.degree.len())
    }
}

/// A presentation with its alphabet fixed (V letters first, then W letters,
/// each block in declaration order) and all relations evaluated and checked.
#[derive(Clone, Debug)]
pub struct CompiledPresentation {
    pub alphabet: Alphabet,
    pub v_count: usize,
    pub w_count: usize,
    pub relations: Vec<CompiledRelation>,
}

impl Presentation {
    /// The alphabet in pipeline order: V generators first, then W
    /// generators, each block in declaration order. Also returns the size
    /// of the V block.
    pub fn alphabet(&self) -> Result<(Alphabet, usize)> {
        let mut names: Vec<String> = Vec::with_capacity(self.generators.len());
        for g in self.generators.iter().filter(|g| g.part == Part::V) {
            names.push(g.name.clone());
        }
        let v_count = names.len();
        for g in self.generators.iter().filter(|g| g.part == Part::W) {
            names.push(g.name.clone());
        }
        Ok((Alphabet::new(names)?, v_count))
    }

    /// Evaluate one relation into the tensor algebra, rejecting zero,
    /// inhomogeneous, and non-Lie results.
    pub fn eval_relation(&self, r: &RelationExpr) -> Result<NCPolynomial> {
        let (alphabet, _) = self.alphabet()?;
        let poly = eval_expr(&alphabet, r)?;
        validate_relation(&alphabet, poly)
    }

    /// Evaluate and validate every relation against the fixed alphabet.
    pub fn compile(&self) -> Result<CompiledPresentation> {
        let (alphabet, v_count) = self.alphabet()?;
        let w_count = alphabet.len() - v_count;
        let mut relations = Vec::with_capacity(self.relations.len());
        for r in &self.relations {
            let poly = validate_relation(&alphabet, eval_expr(&alphabet, r)?)?;
            let degree = poly.multidegree().expect("validated nonzero homogeneous");
            relations.push(CompiledRelation { degree, poly });
        }
        Ok(CompiledPresentation { alphabet, v_count, w_count, relations })
    }
}

fn validate_relation(alphabet: &Alphabet, poly: NCPolynomial) -> Result<NCPolynomial> {
    if poly.is_zero() {
        return Err(Error::ZeroRelation);
    }
    if poly.multidegree().is_none() {
        let mut degrees = poly.components().into_keys();
        let a = degrees.next().expect("nonzero polynomial has a component");
        let b = degrees.next().expect("inhomogeneous polynomial has two");
        return Err(Error::NotHomogeneous(format!("{a:?}"), format!("{b:?}")));
    }
    // membership test; also warms no caches we keep
    let mut ctx = FreeLieContext::new(alphabet.len());
    ctx.lyndon_expand(&poly)?;
    Ok(poly)
}

fn eval_expr(alphabet: &Alphabet, expr: &RelationExpr) -> Result<NCPolynomial> {
    let n = alphabet.len();
    match expr {
        RelationExpr::Gen(name) => {
            let i = alphabet
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            Ok(NCPolynomial::letter(i as u8, n))
        }
        RelationExpr::Bracket(a, b) => {
            Ok(bracket(&eval_expr(alphabet, a)?, &eval_expr(alphabet, b)?))
        }
        RelationExpr::Scale(c, e) => Ok(eval_expr(alphabet, e)?.scaled(c)),
        RelationExpr::Sum(es) => {
            let mut acc = NCPolynomial::zero(n);
            for e in es {
                acc = acc.add(&eval_expr(alphabet, e)?);
            }
            Ok(acc)
        }
        RelationExpr::Adpow { op, exp, arg } => {
            if *exp == 0 {
                return Err(Error::InvalidRelation(
                    "adpow exponent must be at least 1".into(),
                ));
            }
            let i = alphabet
                .index_of(op)
                .ok_or_else(|| Error::UnknownGenerator(op.clone()))?;
            let x = NCPolynomial::letter(i as u8, n);
            let mut acc = eval_expr(alphabet, arg)?;
            for _ in 0..*exp {
                acc = bracket(&x, &acc);
            }
            Ok(acc)
        }
    }
}

/// Turn a Lyndon bracketing into the equivalent relation expression.
pub fn word_bracket_expr(alphabet: &Alphabet, w: &Word) -> RelationExpr {
    use crate::lyndon::{bracketing, BracketTree};
    fn from_tree(alphabet: &Alphabet, t: &BracketTree) -> RelationExpr {
        match t {
            BracketTree::Leaf(i) => RelationExpr::gen(alphabet.name(*i as usize)),
            BracketTree::Node(a, b) => RelationExpr::Bracket(
                Box::new(from_tree(alphabet, a)),
                Box::new(from_tree(alphabet, b)),
            ),
        }
    }
    from_tree(alphabet, &bracketing(w).expect("Lyndon word"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_gens() -> Presentation {
        Presentation {
            generators: vec![GeneratorDecl::v("x"), GeneratorDecl::v("y")],
            relations: vec![],
        }
    }

    #[test]
    fn adpow_expands_to_nested_brackets() {
        let p = two_gens();
        let r = RelationExpr::Adpow {
            op: "x".into(),
            exp: 2,
            arg: Box::new(RelationExpr::gen("y")),
        };
        let poly = p.eval_relation(&r).unwrap();
        // xxy - 2 xyx + yxx
        let word = |s: &str| Word::new(s.bytes().map(|b| b - b'x').collect());
        assert_eq!(poly.coeff(&word("xxy")), Some(&Rational::one()));
        assert_eq!(poly.coeff(&word("xyx")), Some(&Rational::from_int(-2)));
        assert_eq!(poly.coeff(&word("yxx")), Some(&Rational::one()));
    }

    #[test]
    fn zero_relations_are_rejected() {
        let p = two_gens();
        let r = RelationExpr::bracket(RelationExpr::gen("x"), RelationExpr::gen("x"));
        assert_eq!(p.eval_relation(&r), Err(Error::ZeroRelation));
        let r = RelationExpr::Sum(vec![
            RelationExpr::bracket(RelationExpr::gen("x"), RelationExpr::gen("y")),
            RelationExpr::bracket(RelationExpr::gen("y"), RelationExpr::gen("x")),
        ]);
        assert_eq!(p.eval_relation(&r), Err(Error::ZeroRelation));
    }

    #[test]
    fn unknown_generators_are_rejected() {
        let p = two_gens();
        let r = RelationExpr::gen("z");
        assert_eq!(p.eval_relation(&r), Err(Error::UnknownGenerator("z".into())));
    }

    #[test]
    fn inhomogeneous_relations_are_rejected() {
        let p = two_gens();
        let r = RelationExpr::Sum(vec![
            RelationExpr::gen("x"),
            RelationExpr::bracket(RelationExpr::gen("x"), RelationExpr::gen("y")),
        ]);
        assert!(matches!(p.eval_relation(&r), Err(Error::NotHomogeneous(_, _))));
    }

    #[test]
    fn non_lie_expressions_cannot_be_written() {
        // the expression grammar only produces Lie elements, so the
        // membership check passes on anything the grammar accepts
        let p = two_gens();
        let r = RelationExpr::scale(
            Rational::new(1, 2),
            RelationExpr::bracket(
                RelationExpr::gen("x"),
                RelationExpr::bracket(RelationExpr::gen("x"), RelationExpr::gen("y")),
            ),
        );
        assert!(p.eval_relation(&r).is_ok());
    }

    #[test]
    fn alphabet_orders_v_before_w() {
        let p = Presentation {
            generators: vec![
                GeneratorDecl::w("w1"),
                GeneratorDecl::v("e1"),
                GeneratorDecl::w("w2"),
                GeneratorDecl::v("e2"),
            ],
            relations: vec![],
        };
        let (alphabet, v_count) = p.alphabet().unwrap();
        assert_eq!(v_count, 2);
        let names: Vec<&str> = (0..4).map(|i| alphabet.name(i)).collect();
        assert_eq!(names, ["e1", "e2", "w1", "w2"]);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let p = Presentation {
            generators: vec![GeneratorDecl::v("x"), GeneratorDecl::w("x")],
            relations: vec![],
        };
        assert_eq!(p.alphabet(), Err(Error::DuplicateGenerator("x".into())));
    }

    #[test]
    fn json_round_trip() {
        let json = r#"{
            "generators": [{"name": "e1", "part": "V"}, {"name": "w1", "part": "W"}],
            "relations": [
                {"adpow": {"op": "e1", "exp": 2, "arg": {"gen": "w1"}}},
                {"sum": [{"scale": ["1/2", {"bracket": [{"gen": "e1"}, {"gen": "w1"}]}]}]}
            ]
        }"#;
        let p: Presentation = serde_json::from_str(json).unwrap();
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.relations.len(), 2);
        let compiled = p.compile().unwrap();
        assert_eq!(compiled.v_count, 1);
        assert_eq!(compiled.w_count, 1);
        assert_eq!(compiled.relations[0].degree, MultiDegree::new(vec![2, 1]));
        assert_eq!(compiled.relations[0].w_degree(1), 1);
        let back = serde_json::to_string(&p).unwrap();
        let p2: Presentation = serde_json::from_str(&back).unwrap();
        assert_eq!(p, p2);
    }
}

//! The built-in invariant suite behind `selfcheck`: algebraic identities in
//! the tensor algebra, triangularity and round-trip of the Lyndon
//! expansion, integrality of solved dimensions over the random corpus, and
//! order independence of the ideal closure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{corpus, CorpusParams};
use crate::elimination::{self, EliminationInput};
use crate::freelie::{bracket, ContextPool, FreeLieContext, NCPolynomial};
use crate::lyndon::{lyndon_words_up_to, MultiDegree, Word};
use crate::oracle::quotient_dims;
use crate::rational::Rational;

pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult { name, passed: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult { name, passed: false, detail: detail.into() }
    }
}

/// Run every check; the list is deterministic.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        antisymmetry(),
        jacobi(),
        triangularity(),
        expand_round_trip(),
        corpus_integrality(),
        closure_order_independence(),
    ]
}

fn random_homogeneous(rng: &mut impl Rng, max_degree: u32) -> NCPolynomial {
    // a random combination of words of one random multidegree over 2 letters
    let total = rng.gen_range(1..=max_degree);
    let a = rng.gen_range(0..=total);
    let degree = MultiDegree::new(vec![a, total - a]);
    let mut words = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == total as usize {
            let w = Word::new(prefix);
            if w.multidegree(2) == degree {
                words.push(w);
            }
            continue;
        }
        for l in 0..2u8 {
            let mut v = prefix.clone();
            v.push(l);
            stack.push(v);
        }
    }
    let mut p = NCPolynomial::zero(2);
    for w in words.choose_multiple(rng, words.len().min(3)) {
        let c = Rational::from_int(rng.gen_range(-3..=3i64));
        p.add_term(w, &c);
    }
    p
}

fn antisymmetry() -> CheckResult {
    let name = "antisymmetry";
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..200 {
        let p = random_homogeneous(&mut rng, 5);
        if !bracket(&p, &p).is_zero() {
            return CheckResult::fail(name, format!("[p,p] != 0 on trial {trial}"));
        }
    }
    CheckResult::pass(name, "bracket(p,p) = 0 on 200 random homogeneous elements")
}

fn jacobi() -> CheckResult {
    let name = "jacobi";
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..100 {
        let p = random_homogeneous(&mut rng, 5);
        let q = random_homogeneous(&mut rng, 5);
        let r = random_homogeneous(&mut rng, 5);
        let mut sum = bracket(&p, &bracket(&q, &r));
        sum.add_scaled(&Rational::one(), &bracket(&q, &bracket(&r, &p)));
        sum.add_scaled(&Rational::one(), &bracket(&r, &bracket(&p, &q)));
        if !sum.is_zero() {
            return CheckResult::fail(name, format!("Jacobi sum nonzero on trial {trial}"));
        }
    }
    CheckResult::pass(name, "Jacobi identity on 100 random homogeneous triples")
}

fn triangularity() -> CheckResult {
    let name = "triangularity";
    let mut ctx = FreeLieContext::new(2);
    for w in lyndon_words_up_to(2, 7) {
        let p = ctx.realized(&w);
        match p.lex_min() {
            Some((m, c)) if m == &w && c.is_one() => {}
            other => {
                return CheckResult::fail(
                    name,
                    format!("b({w:?}) has leading term {other:?}, expected {w:?} with 1"),
                )
            }
        }
    }
    CheckResult::pass(name, "leading monomial of b(w) is w with coefficient 1, |w| <= 7")
}

fn expand_round_trip() -> CheckResult {
    let name = "lyndon-expand-round-trip";
    let mut ctx = FreeLieContext::new(2);
    for w in lyndon_words_up_to(2, 7) {
        let p = ctx.realized(&w).as_ref().clone();
        match ctx.lyndon_expand(&p) {
            Ok(coords)
                if coords.coords.len() == 1
                    && coords.coords.get(&w).map_or(false, Rational::is_one) => {}
            other => {
                return CheckResult::fail(
                    name,
                    format!("expansion of b({w:?}) came back as {other:?}"),
                )
            }
        }
    }
    CheckResult::pass(name, "lyndon_expand(realize(b(w))) = {w: 1} for |w| <= 7")
}

fn corpus_integrality() -> CheckResult {
    let name = "free-lie-on-module-integrality";
    let mut pool = ContextPool::new();
    let presentations = corpus(2024, 200, &CorpusParams::default());
    for (i, p) in presentations.iter().enumerate() {
        let input = match EliminationInput::new(p) {
            Ok(input) => input,
            Err(e) => return CheckResult::fail(name, format!("corpus item {i} invalid: {e}")),
        };
        // the theorem pipeline solves for L(N) dimensions; NonIntegralDimension
        // anywhere is a failure
        if let Err(e) = elimination::run(&input, &mut pool, 6, false) {
            return CheckResult::fail(name, format!("corpus item {i}: {e}"));
        }
    }
    CheckResult::pass(name, "no non-integral dimension across 200 corpus presentations")
}

fn closure_order_independence() -> CheckResult {
    let name = "closure-order-independence";
    let mut pool = ContextPool::new();
    let presentations = corpus(99, 40, &CorpusParams::default());
    for (i, p) in presentations.iter().enumerate() {
        if p.relations.len() < 2 {
            continue;
        }
        let compiled = match p.compile() {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, format!("corpus item {i} invalid: {e}")),
        };
        let nletters = compiled.alphabet.len();
        let base = match quotient_dims(pool.ctx(nletters), &compiled.relations, 5) {
            Ok(d) => d,
            Err(e) => return CheckResult::fail(name, format!("corpus item {i}: {e}")),
        };

        // permuted relation list
        let mut reversed_rels = p.clone();
        reversed_rels.relations.reverse();
        let compiled_rev = reversed_rels.compile().expect("same relations");
        let rev = quotient_dims(pool.ctx(nletters), &compiled_rev.relations, 5)
            .expect("same relations");
        if rev != base {
            return CheckResult::fail(name, format!("relation order changed dims on item {i}"));
        }

        // generator order reversed within each part; dims must agree after
        // the slot relabeling
        let mut reordered = p.clone();
        reordered.generators.reverse();
        let v_count = compiled.v_count;
        let w_count = compiled.w_count;
        let perm: Vec<usize> = (0..nletters)
            .map(|k| {
                if k < v_count {
                    v_count - 1 - k
                } else {
                    v_count + (w_count - 1 - (k - v_count))
                }
            })
            .collect();
        let compiled_re = reordered.compile().expect("same generators");
        let re = quotient_dims(pool.ctx(nletters), &compiled_re.relations, 5)
            .expect("same relations");
        if base.permute(&perm) != re {
            return CheckResult::fail(name, format!("generator order changed dims on item {i}"));
        }
    }
    CheckResult::pass(name, "ideal closure is order independent on 40 corpus presentations")
}

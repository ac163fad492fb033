//! Seeded random presentations for the verification corpus.
//!
//! Relations are random rational combinations of Lyndon basis brackets of a
//! random multidegree, so they are multihomogeneous nonzero Lie elements by
//! construction, with W-degree 0 or 1.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lyndon::{lyndon_words_of_multidegree, MultiDegree};
use crate::presentation::{word_bracket_expr, GeneratorDecl, Presentation, RelationExpr};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug)]
pub struct CorpusParams {
    pub max_v: usize,
    pub max_w: usize,
    pub max_relations: usize,
    pub max_relation_degree: u32,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_v: 2,
            max_w: 2,
            max_relations: 3,
            max_relation_degree: 4,
        }
    }
}

const V_NAMES: [&str; 4] = ["a", "b", "c", "d"];
const W_NAMES: [&str; 4] = ["u", "w", "y", "z"];

fn coefficient(rng: &mut impl Rng) -> Rational {
    let pool = [
        Rational::from_int(1),
        Rational::from_int(-1),
        Rational::from_int(2),
        Rational::from_int(-2),
        Rational::from_int(3),
        Rational::new(1, 2),
        Rational::new(-1, 2),
        Rational::new(2, 3),
    ];
    pool.choose(rng).unwrap().clone()
}

/// A random multidegree with the given total over `n` slots.
fn random_composition(rng: &mut impl Rng, n: usize, total: u32) -> Vec<u32> {
    let mut counts = vec![0u32; n];
    for _ in 0..total {
        counts[rng.gen_range(0..n)] += 1;
    }
    counts
}

pub fn random_presentation(rng: &mut impl Rng, params: &CorpusParams) -> Presentation {
    // at least one generator overall
    let (v_count, w_count) = loop {
        let v = rng.gen_range(0..=params.max_v);
        let w = rng.gen_range(0..=params.max_w);
        if v + w > 0 {
            break (v, w);
        }
    };
    let mut generators = Vec::new();
    for name in V_NAMES.iter().take(v_count) {
        generators.push(GeneratorDecl::v(name));
    }
    for name in W_NAMES.iter().take(w_count) {
        generators.push(GeneratorDecl::w(name));
    }
    let presentation_frame = Presentation { generators: generators.clone(), relations: vec![] };
    let (alphabet, _) = presentation_frame.alphabet().expect("nonempty alphabet");

    let nrels = rng.gen_range(0..=params.max_relations);
    let mut relations = Vec::new();
    for _ in 0..nrels {
        // W-degree 0 needs a V generator, W-degree 1 a W generator
        let mut choices = Vec::new();
        if v_count > 0 {
            choices.push(0u32);
        }
        if w_count > 0 {
            choices.push(1u32);
        }
        let w_degree = *choices.choose(rng).unwrap();

        // retry until the chosen multidegree has Lyndon words at all
        // (e.g. (2,0) has none)
        let degree = loop {
            let total = rng.gen_range(1..=params.max_relation_degree);
            let v_degree = total - w_degree;
            let mut counts = random_composition(rng, v_count.max(1), v_degree);
            counts.truncate(v_count);
            counts.resize(v_count + w_count, 0);
            if w_degree == 1 {
                counts[v_count + rng.gen_range(0..w_count)] = 1;
            }
            let alpha = MultiDegree::new(counts);
            if alpha.is_zero() {
                continue;
            }
            if !lyndon_words_of_multidegree(&alpha).is_empty() {
                break alpha;
            }
        };

        let words = lyndon_words_of_multidegree(&degree);
        let take = rng.gen_range(1..=words.len().min(3));
        let mut picked: Vec<_> = words.choose_multiple(rng, take).collect();
        picked.sort();
        let terms: Vec<RelationExpr> = picked
            .into_iter()
            .map(|w| RelationExpr::scale(coefficient(rng), word_bracket_expr(&alphabet, w)))
            .collect();
        relations.push(if terms.len() == 1 {
            terms.into_iter().next().unwrap()
        } else {
            RelationExpr::Sum(terms)
        });
    }
    Presentation { generators, relations }
}

/// The deterministic corpus: `count` presentations from the given seed.
pub fn corpus(seed: u64, count: usize, params: &CorpusParams) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_presentation(&mut rng, params))
        .collect()
}
